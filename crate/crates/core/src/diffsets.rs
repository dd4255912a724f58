//! Difference sets in `(GF(2^m), +)`, in `(GF(2^m)*, x)`, and relative to an
//! additive subgroup.

use rayon::prelude::*;
use serde::Serialize;

use crate::boolfun::{walsh_transform, TruthTable};
use crate::codes::DefiningSet;
use crate::error::{Error, Result};
use crate::gf2m::{Elem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Group {
    Additive,
    Multiplicative,
    Relative { subgroup_order: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub element: Elem,
    pub count: u64,
    pub expected: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DiffSetReport {
    pub group: Group,
    pub field: String,
    /// `(v, k, lambda)`, or `(m, l, n, lambda)` for relative difference sets in the
    /// naming of an `(m, l, n, lambda)` relative difference set, where `v = m l`.
    pub params: Vec<u64>,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    /// `|chi(D)|^2 in {n, n - lambda l}` for every nontrivial character.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character_bound: Option<bool>,
}

/// `|D ∩ (D + x)|`.
pub fn difference_function(d: &DefiningSet, x: Elem) -> u64 {
    d.bits().and_count(d.bits().xor_translate(x as usize).words())
}

/// `diff_D(x)` for every `x`.
pub fn additive_profile(field: &FieldSpec, d: &DefiningSet) -> Vec<u64> {
    field.elements().into_par_iter().map(|x| difference_function(d, x)).collect()
}

/// First `x` (in `xs`) whose count differs from `counts[xs[0]]`.
fn constant_on(counts: &[u64], mut xs: impl Iterator<Item = usize>) -> (Option<u64>, Option<Counterexample>) {
    let Some(first) = xs.next() else { return (None, None) };
    let lambda = counts[first];
    for x in xs {
        if counts[x] != lambda {
            return (Some(lambda), Some(Counterexample { element: x as Elem, count: counts[x], expected: lambda }));
        }
    }
    (Some(lambda), None)
}

pub fn is_additive_difference_set(field: &FieldSpec, d: &DefiningSet) -> DiffSetReport {
    let counts = additive_profile(field, d);
    let (lambda, bad) = constant_on(&counts, 1..counts.len());
    let lambda = lambda.unwrap_or(0);
    DiffSetReport {
        group: Group::Additive,
        field: field.to_string(),
        params: vec![field.order() as u64, d.len() as u64, lambda],
        verdict: bad.is_none(),
        counterexample: bad,
        character_bound: None,
    }
}

/// Quotient counts `|{(d1, d2) : d1 != d2, d1/d2 = y}|`, indexed by field element.
///
/// With log tables the count is taken in `Z_{2^m-1}` on discrete logs and
/// mapped back.
pub fn multiplicative_profile(field: &FieldSpec, d: &DefiningSet) -> Result<Vec<u64>> {
    if d.contains(0) {
        return Err(Error::ZeroInSet);
    }
    let n = field.mult_order() as usize;
    let elems = d.elements();
    let counts = if field.has_log_tables() {
        let logs: Vec<usize> = elems.iter().map(|&e| field.log(e).expect("nonzero") as usize).collect();
        let by_log = logs
            .par_iter()
            .fold(
                || vec![0u64; n],
                |mut acc, &li| {
                    for &lj in &logs {
                        acc[(li + n - lj) % n] += 1;
                    }
                    acc
                },
            )
            .reduce(|| vec![0u64; n], |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            });
        let mut out = vec![0u64; n + 1];
        for (t, c) in by_log.into_iter().enumerate() {
            out[field.exp(t as u64) as usize] += c;
        }
        out
    } else {
        let invs: Vec<Elem> = elems.iter().map(|&e| field.inv_or_zero(e)).collect();
        elems
            .par_iter()
            .fold(
                || vec![0u64; n + 1],
                |mut acc, &a| {
                    for &bi in &invs {
                        acc[field.mul(a, bi) as usize] += 1;
                    }
                    acc
                },
            )
            .reduce(|| vec![0u64; n + 1], |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            })
    };
    let mut counts = counts;
    // Drop the identity quotients d/d.
    counts[1] -= elems.len() as u64;
    Ok(counts)
}

pub fn is_multiplicative_difference_set(field: &FieldSpec, d: &DefiningSet) -> Result<DiffSetReport> {
    let counts = multiplicative_profile(field, d)?;
    let (lambda, bad) = constant_on(&counts, 2..counts.len());
    Ok(DiffSetReport {
        group: Group::Multiplicative,
        field: field.to_string(),
        params: vec![field.mult_order(), d.len() as u64, lambda.unwrap_or(0)],
        verdict: bad.is_none(),
        counterexample: bad,
        character_bound: None,
    })
}

fn check_subgroup(field: &FieldSpec, n_sub: &DefiningSet) -> Result<()> {
    let ok = n_sub.contains(0)
        && n_sub.len().is_power_of_two()
        && n_sub.elements().iter().all(|&a| n_sub.elements().iter().all(|&b| n_sub.contains(a ^ b)));
    if ok && n_sub.m() == field.m() {
        Ok(())
    } else {
        Err(Error::NotSubgroup(format!("set of size {}", n_sub.len())))
    }
}

/// Differences never fall in `N \ {0}` and cover every element outside `N`
/// equally often.
pub fn is_relative_difference_set(field: &FieldSpec, d: &DefiningSet, n_sub: &DefiningSet) -> Result<DiffSetReport> {
    check_subgroup(field, n_sub)?;
    let counts = additive_profile(field, d);
    let forbidden = n_sub.elements().iter().skip(1).find(|&&x| counts[x as usize] != 0);
    let (lambda, mut bad) = constant_on(&counts, (1..counts.len()).filter(|&x| !n_sub.contains(x as Elem)));
    if bad.is_none() {
        bad = forbidden.map(|&x| Counterexample { element: x, count: counts[x as usize], expected: 0 });
    }
    let lambda = lambda.unwrap_or(0);
    let ell = n_sub.len() as u64;
    let n = d.len() as u64;
    // chi_w(D) = sum_{y in D} (-1)^{Tr(wy)} = -fhat(w)/2 for w != 0.
    let spectrum = walsh_transform(field, &TruthTable::indicator(field, d));
    let allowed = [n as i64, n as i64 - (lambda * ell) as i64];
    let character_bound = spectrum.values().iter().skip(1).all(|&v| {
        let chi = -(v as i64) / 2;
        allowed.contains(&(chi * chi))
    });
    Ok(DiffSetReport {
        group: Group::Relative { subgroup_order: ell },
        field: field.to_string(),
        params: vec![field.order() as u64 / ell, ell, n, lambda],
        verdict: bad.is_none(),
        counterexample: bad,
        character_bound: Some(character_bound),
    })
}

/// `{h + q(h) v : h in H}` where `H` is spanned by the low `m-1` polynomial-basis
/// bits, `v = x^{m-1}` and `q(h) = h_0 h_1 + h_2 h_3 + ...` is bent on `H`.
/// For odd `m >= 3` this is a `(2^{m-1}, 2, 2^{m-1}, 2^{m-2})` relative
/// difference set with forbidden subgroup `{0, v}`.
pub fn bent_graph_rds(field: &FieldSpec) -> Result<(DefiningSet, DefiningSet)> {
    let m = field.m();
    if m.is_multiple_of(2) || m < 3 {
        return Err(Error::inapplicable("bent-graph-rds", format!("needs odd m >= 3, got m={m}")));
    }
    let v: Elem = 1 << (m - 1);
    let q = |h: Elem| (0..(m - 1) / 2).fold(0, |acc, i| acc ^ ((h >> (2 * i)) & (h >> (2 * i + 1)) & 1));
    let d = DefiningSet::from_elements(field, (0..v).map(|h| if q(h) == 1 { h ^ v } else { h }))?;
    let n = DefiningSet::from_elements(field, [0, v])?;
    Ok((d, n))
}

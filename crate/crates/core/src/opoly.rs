//! O-polynomial tests, closure transforms and the exponent orbit of an o-monomial.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::funlib::{compositional_inverse, Func};
use crate::gf2m::{Elem, FieldSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Definition,
    TwoToOne,
    Both,
}

impl std::str::FromStr for Mode {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "def" | "definition" => Ok(Mode::Definition),
            "2to1" | "two_to_one" => Ok(Mode::TwoToOne),
            "both" => Ok(Mode::Both),
            _ => Err(crate::error::Error::Parse(format!("mode `{s}`, expected def|2to1|both"))),
        }
    }
}

/// Why a test failed, with enough data to replay the failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub test: &'static str,
    /// `s` for the definition test, `u` for the 2-to-1 test; absent for global failures.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parameter: Option<Elem>,
    pub points: Vec<Elem>,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct OPolyReport {
    pub family: String,
    pub field: String,
    pub m: u32,
    pub is_permutation: bool,
    pub f0_is_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub definition_test: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub two_to_one_test: Option<bool>,
    pub is_o_polynomial: bool,
    pub witnesses: Vec<Witness>,
}

impl OPolyReport {
    /// Both tests ran and disagree.
    pub fn equivalence_violated(&self) -> bool {
        matches!((self.definition_test, self.two_to_one_test), (Some(a), Some(b)) if a != b)
    }
}

/// Two points with equal image, if any.
fn first_collision(values: impl Iterator<Item = (Elem, Elem)>, seen: &mut [Elem]) -> Option<[Elem; 2]> {
    seen.fill(Elem::MAX);
    for (x, y) in values {
        let slot = &mut seen[y as usize];
        if *slot != Elem::MAX {
            return Some([*slot, x]);
        }
        *slot = x;
    }
    None
}

pub fn is_permutation(field: &FieldSpec, f: &Func) -> bool {
    permutation_collision(&f.tabulate(field)).is_none()
}

fn permutation_collision(values: &[Elem]) -> Option<[Elem; 2]> {
    let mut seen = vec![Elem::MAX; values.len()];
    first_collision(values.iter().enumerate().map(|(x, &y)| (x as Elem, y)), &mut seen)
}

/// `f_s(x) = (f(x+s) + f(s)) x^{2^m-2}` is a permutation for every `s`.
fn definition_test(field: &FieldSpec, values: &[Elem]) -> Option<Witness> {
    field.elements().into_par_iter().map_init(
        || vec![Elem::MAX; values.len()],
        |seen, s| {
            let fs = values[s as usize];
            let image = field.elements().map(|x| (x, field.mul(values[(x ^ s) as usize] ^ fs, field.inv_or_zero(x))));
            first_collision(image, seen).map(|pts| Witness {
                test: "definition",
                parameter: Some(s),
                points: pts.to_vec(),
                reason: "f_s is not a permutation".into(),
            })
        },
    )
    .find_map_first(|w| w)
}

/// `f(x) + u x` is 2-to-1 for every `u != 0`.
fn two_to_one_test(field: &FieldSpec, values: &[Elem]) -> Option<Witness> {
    (1..field.order() as Elem).into_par_iter().map_init(
        || (vec![0u8; values.len()], vec![Elem::MAX; values.len()]),
        |(count, first), u| {
            count.fill(0);
            for x in field.elements() {
                let y = (values[x as usize] ^ field.mul(u, x)) as usize;
                count[y] += 1;
                if count[y] == 1 {
                    first[y] = x;
                }
                if count[y] == 3 {
                    let y = y as Elem;
                    let pts: Vec<Elem> = field.elements().filter(|&z| values[z as usize] ^ field.mul(u, z) == y).take(3).collect();
                    return Some(Witness { test: "two_to_one", parameter: Some(u), points: pts, reason: "three preimages".into() });
                }
            }
            count.iter().position(|&c| c == 1).map(|y| Witness {
                test: "two_to_one",
                parameter: Some(u),
                points: vec![first[y]],
                reason: "single preimage".into(),
            })
        },
    )
    .find_map_first(|w| w)
}

pub fn is_o_polynomial(field: &FieldSpec, f: &Func, mode: Mode) -> OPolyReport {
    let values = f.tabulate(field);
    let perm = permutation_collision(&values);
    let f0_is_zero = values[0] == 0;
    let mut witnesses = Vec::new();
    if !f0_is_zero {
        witnesses.push(Witness { test: "f0", parameter: None, points: vec![0], reason: format!("f(0) = {:#x}", values[0]) });
    }
    if let Some(pts) = perm {
        witnesses.push(Witness { test: "permutation", parameter: None, points: pts.to_vec(), reason: "f is not a permutation".into() });
    }
    let mut run = |enabled: bool, test: fn(&FieldSpec, &[Elem]) -> Option<Witness>, needs_perm: bool| -> Option<bool> {
        if !enabled {
            return None;
        }
        if !f0_is_zero || (needs_perm && perm.is_some()) {
            return Some(false);
        }
        match test(field, &values) {
            Some(w) => {
                witnesses.push(w);
                Some(false)
            }
            None => Some(true),
        }
    };
    let definition_test = run(mode != Mode::TwoToOne, definition_test, true);
    let two_to_one_test = run(mode != Mode::Definition, two_to_one_test, false);
    let is_o_polynomial = definition_test.or(two_to_one_test).unwrap_or(false) && two_to_one_test.unwrap_or(true);
    OPolyReport {
        family: f.name().to_string(),
        field: field.to_string(),
        m: field.m(),
        is_permutation: perm.is_none(),
        f0_is_zero,
        definition_test,
        two_to_one_test,
        is_o_polynomial,
        witnesses,
    }
}

/// The transforms that carry o-polynomials to o-polynomials.
pub struct ClosureTransforms {
    pub inverse: Func,
    /// `f(x^{2^j})^{2^{m-j}}` for `j = 1..m-1`.
    pub frobenius_twists: Vec<Func>,
    /// `x f(x^{2^m-2})`.
    pub fbar: Func,
    /// `f(x+1) + f(1)`.
    pub unit_shift: Func,
}

impl ClosureTransforms {
    pub fn all(&self) -> Vec<&Func> {
        let mut v = vec![&self.inverse, &self.fbar, &self.unit_shift];
        v.extend(self.frobenius_twists.iter());
        v
    }
}

pub fn frobenius_twist(f: &Func, j: u32) -> Func {
    let g = f.clone();
    let m = f.m();
    Func::new(format!("twist{j}({})", f.name()), m, move |fs, x| fs.frobenius(g.eval(fs, fs.frobenius(x, j)), m - j))
}

pub fn fbar(f: &Func) -> Func {
    let g = f.clone();
    Func::new(format!("bar({})", f.name()), f.m(), move |fs, x| fs.mul(x, g.eval(fs, fs.inv_or_zero(x))))
}

pub fn unit_shift(f: &Func) -> Func {
    let g = f.clone();
    Func::new(format!("shift({})", f.name()), f.m(), move |fs, x| g.eval(fs, x ^ 1) ^ g.eval(fs, 1))
}

/// `f(1)^{-1} f(x)`; the identity map on `f` when `f(1) = 0`.
pub fn normalise(field: &FieldSpec, f: &Func) -> Func {
    let c = field.inv_or_zero(f.eval(field, 1));
    let g = f.clone();
    Func::new(format!("normalised({})", f.name()), f.m(), move |fs, x| fs.mul(c, g.eval(fs, x)))
}

pub fn closure_transforms(field: &FieldSpec, f: &Func) -> Result<ClosureTransforms> {
    Ok(ClosureTransforms {
        inverse: compositional_inverse(field, f)?,
        frobenius_twists: (1..field.m()).map(|j| frobenius_twist(f, j)).collect(),
        fbar: fbar(f),
        unit_shift: unit_shift(f),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitEntry {
    pub label: &'static str,
    /// Reduced exponent in `[1, 2^m-2]`, or `None` when a denominator is not
    /// invertible or the result is the constant exponent 0.
    pub exponent: Option<u64>,
}

/// `{1/k, 1-k, 1/(1-k), k/(k-1), (k-1)/k}` modulo `2^m - 1`.
pub fn exponent_orbit(field: &FieldSpec, k: i128) -> Vec<OrbitEntry> {
    let forms: [(&'static str, i128, i128); 5] =
        [("1/k", 1, k), ("1-k", 1 - k, 1), ("1/(1-k)", 1, 1 - k), ("k/(k-1)", k, k - 1), ("(k-1)/k", k - 1, k)];
    forms
        .into_iter()
        .map(|(label, num, den)| OrbitEntry { label, exponent: field.exp_frac(num, den).ok().filter(|&e| e != 0) })
        .collect()
}

pub fn monomial(field: &FieldSpec, d: u64) -> Func {
    Func::new(format!("x^{d}"), field.m(), move |fs, x| fs.pow(x, d as i128))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        let f4 = FieldSpec::new(4).unwrap();
        assert!(is_o_polynomial(&f4, &monomial(&f4, 2), Mode::Both).is_o_polynomial);
        assert!(!is_permutation(&f4, &monomial(&f4, 3)));
        let f5 = FieldSpec::new(5).unwrap();
        let r = is_o_polynomial(&f5, &monomial(&f5, 6), Mode::Both);
        assert!(r.is_o_polynomial && r.definition_test == Some(true) && r.two_to_one_test == Some(true));
        let r = is_o_polynomial(&f5, &monomial(&f5, 3), Mode::Both);
        assert!(!r.is_o_polynomial);
        assert!(!r.equivalence_violated());
        assert!(r.witnesses.iter().any(|w| w.test == "two_to_one" && w.parameter.is_some()));
    }

    #[test]
    fn definition_and_two_to_one_agree_on_monomials() {
        for m in [3, 5] {
            let f = FieldSpec::new(m).unwrap();
            for d in 1..f.mult_order() {
                let r = is_o_polynomial(&f, &monomial(&f, d), Mode::Both);
                assert!(!r.equivalence_violated(), "m={m} d={d}");
            }
        }
    }

    #[test]
    fn constant_is_rejected_with_witness() {
        let f = FieldSpec::new(3).unwrap();
        let c = Func::new("one", 3, |_, _| 1);
        let r = is_o_polynomial(&f, &c, Mode::TwoToOne);
        assert!(!r.is_o_polynomial);
        assert_eq!(r.witnesses[0].test, "f0");
    }

    #[test]
    fn translation_transforms() {
        let f = FieldSpec::new(5).unwrap();
        let t = monomial(&f, 4);
        let c = closure_transforms(&f, &t).unwrap();
        assert!(f.elements().all(|x| c.inverse.eval(&f, x) == f.pow(x, 8)));
        // x * x^{-2^h} = x^{2^m - 2^h}; the exponent 2^m - 2^{m-h} gives a different map.
        assert!(f.elements().all(|x| c.fbar.eval(&f, x) == f.pow(x, 32 - 4)));
        assert!(f.elements().any(|x| c.fbar.eval(&f, x) != f.pow(x, 32 - 8)));
        for g in c.all() {
            assert!(is_o_polynomial(&f, g, Mode::TwoToOne).is_o_polynomial, "{}", g.name());
        }
    }

    #[test]
    fn orbit_of_six() {
        let f = FieldSpec::new(5).unwrap();
        let orbit = exponent_orbit(&f, 6);
        let exps: Vec<_> = orbit.iter().map(|e| e.exponent).collect();
        assert_eq!(exps, vec![Some(26), Some(26), Some(6), Some(26), Some(6)]);
        let unit = exponent_orbit(&f, 1);
        assert_eq!(unit.iter().filter(|e| e.exponent.is_none()).count(), 4);
    }
}

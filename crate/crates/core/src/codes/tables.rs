//! Closed-form weight distributions, instantiated at concrete parameters.
//!
//! Every generator works in exact rationals and rejects parameters at which
//! an exponent or a multiplicity fails to be a nonnegative integer.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Roots;
use num_rational::Ratio;
use serde::Serialize;

use crate::boolfun::four_valued_table;
use crate::error::{Error, Result};

type Q = Ratio<i128>;

/// Expected weight distribution, `weight -> A_w` including `A_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedTable {
    pub source: String,
    pub params: String,
    pub n: Option<u64>,
    pub k: Option<u32>,
    #[serde(serialize_with = "crate::codes::as_rows")]
    pub rows: BTreeMap<u64, u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl ExpectedTable {
    pub fn d_min(&self) -> Option<u64> {
        self.rows.iter().find(|(&w, &a)| w > 0 && a > 0).map(|(&w, _)| w)
    }

    pub fn total(&self) -> u64 {
        self.rows.values().sum()
    }

    fn with_note(mut self, note: &str) -> Self {
        self.note = Some(note.to_string());
        self
    }
}

struct Builder {
    source: &'static str,
    params: String,
}

impl Builder {
    fn new(source: &'static str, params: String) -> Self {
        Self { source, params }
    }

    fn fail(&self, why: impl Into<String>) -> Error {
        Error::inapplicable(format!("{}({})", self.source, self.params), why)
    }

    /// `2^(num/den)`; the exponent must be an integer (possibly negative).
    fn p2(&self, num: i64, den: i64) -> Result<Q> {
        if num % den != 0 {
            return Err(self.fail(format!("exponent {num}/{den} is not an integer")));
        }
        let e = num / den;
        if e.abs() > 120 {
            return Err(self.fail("exponent out of range"));
        }
        Ok(if e >= 0 { Q::from_integer(1i128 << e) } else { Q::new(1, 1i128 << -e) })
    }

    fn nat(&self, q: Q, what: &str) -> Result<u64> {
        if !q.is_integer() || *q.numer() < 0 {
            return Err(self.fail(format!("{what} = {q} is not a nonnegative integer")));
        }
        Ok(*q.numer() as u64)
    }

    fn table(&self, n: Option<u64>, k: Option<u32>, rows: Vec<(Q, Q)>) -> Result<ExpectedTable> {
        let mut out = BTreeMap::from([(0u64, 1u64)]);
        for (w, a) in rows {
            let w = self.nat(w, "weight")?;
            let a = self.nat(a, "multiplicity")?;
            if a > 0 {
                *out.entry(w).or_insert(0) += a;
            }
        }
        Ok(ExpectedTable {
            source: self.source.to_string(),
            params: self.params.clone(),
            n,
            k,
            rows: out,
            note: None,
        })
    }
}

fn q(v: i128) -> Q {
    Q::from_integer(v)
}

/// Two-weight code of a bent support of size `n_f` (m even).
pub fn bent(m: u32, n_f: u64) -> Result<ExpectedTable> {
    let b = Builder::new("tab-bentfcode", format!("m={m}, n_f={n_f}"));
    if !m.is_multiple_of(2) || m < 4 {
        return Err(b.fail("m must be even and at least 4"));
    }
    let (mi, nf) = (m as i64, q(n_f as i128));
    let full = b.p2(mi, 1)? - 1;
    let off = b.p2(mi - 4, 2)?;
    let scale = nf * b.p2(-(mi - 2), 2)?;
    let half = nf / 2;
    b.table(
        Some(n_f),
        Some(m),
        vec![(half - off, (full - scale) / 2), (half + off, (full + scale) / 2)],
    )
}

/// Three-weight code of a semibent support of size `n_f` (m odd).
pub fn semibent(m: u32, n_f: u64) -> Result<ExpectedTable> {
    let b = Builder::new("tab-semibentfcode", format!("m={m}, n_f={n_f}"));
    if m.is_multiple_of(2) {
        return Err(b.fail("m must be odd"));
    }
    let (mi, nf) = (m as i64, q(n_f as i128));
    let qq = b.p2(mi, 1)?;
    let r = b.p2(mi - 1, 2)?;
    let base = nf * (qq - nf) * b.p2(-mi, 1)?;
    let tilt = nf * b.p2(-(mi + 1), 2)?;
    b.table(
        Some(n_f),
        Some(m),
        vec![
            ((nf - r) / 2, base - tilt),
            (nf / 2, qq - 1 - nf * (qq - nf) * b.p2(-(mi - 1), 1)?),
            ((nf + r) / 2, base + tilt),
        ],
    )
}

/// Code of a quadratic function of rank `r_f` with `f̂(0) = fhat0`.
///
/// The correction vector `(ε1, ε2, ε3)` is selected by `f̂(0)` being `0`,
/// `+2^{m - r_f/2}` or `-2^{m - r_f/2}`, which are the only values a
/// quadratic spectrum can take at `w = 0`.
pub fn quadratic(m: u32, r_f: u32, fhat0: i64) -> Result<ExpectedTable> {
    let b = Builder::new("tab-WEqbfs", format!("m={m}, r_f={r_f}, fhat0={fhat0}"));
    if r_f <= 2 || r_f > m || !r_f.is_multiple_of(2) {
        return Err(b.fail("r_f must be even with 2 < r_f <= m"));
    }
    let (mi, ri) = (m as i64, r_f as i64);
    let peak = b.p2(2 * mi - ri, 2)?;
    let eps = if fhat0 == 0 {
        (1, 0, 0)
    } else if q(fhat0 as i128) == peak {
        (0, 1, 0)
    } else if q(-fhat0 as i128) == peak {
        (0, 0, 1)
    } else {
        return Err(b.fail("fhat0 is not a value of the quadratic spectrum"));
    };
    let nf = b.p2(mi - 1, 1)? - q(fhat0 as i128) / 2;
    let off = b.p2(2 * mi - 2 - ri, 2)?;
    let big = b.p2(ri - 1, 1)?;
    let small = b.p2(ri - 2, 2)?;
    b.table(
        Some(b.nat(nf, "n_f")?),
        Some(m),
        vec![
            (nf / 2, b.p2(mi, 1)? - b.p2(ri, 1)? - eps.0),
            ((nf + off) / 2, big + small - eps.1),
            ((nf - off) / 2, big - small - eps.2),
        ],
    )
    .map(|t| t.with_note("correction vector selected by fhat0 in {0, +2^(m-r_f/2), -2^(m-r_f/2)}"))
}

/// Three-weight code from a three-valued spectrum with parameter `e`.
pub fn three_weight(m: u32, e: u32) -> Result<ExpectedTable> {
    let b = Builder::new("tab-3wtc1", format!("m={m}, e={e}"));
    let (mi, ei) = (m as i64, e as i64);
    if ei >= mi {
        return Err(b.fail("e must be below m"));
    }
    let a = b.p2(mi - 2, 1)?;
    let off = b.p2(mi + ei - 4, 2)?;
    let big = b.p2(mi - ei - 1, 1)?;
    let small = b.p2(mi - ei - 2, 2)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m),
        vec![
            (a, b.p2(mi, 1)? - b.p2(mi - ei, 1)? - 1),
            (a + off, big + small),
            (a - off, big - small),
        ],
    )
}

/// Three-weight `[2^{m-1}, m]` code of the hyperoval family (m odd).
pub fn hyperoval(m: u32) -> Result<ExpectedTable> {
    let b = Builder::new("tab-semibentfcode6", format!("m={m}"));
    if m.is_multiple_of(2) || m < 3 {
        return Err(b.fail("m must be odd and at least 3"));
    }
    let mi = m as i64;
    let a = b.p2(mi - 2, 1)?;
    let r = b.p2(mi - 3, 2)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m),
        vec![(a - r, a + r), (a, b.p2(mi - 1, 1)? - 1), (a + r, a - r)],
    )
}

/// The complement-expanded `[2^{m-1}, m+1]` code, rows as printed.
pub fn hyperoval_expanded(m: u32) -> Result<ExpectedTable> {
    let b = Builder::new("tab-semibentfcode66", format!("m={m}"));
    if m.is_multiple_of(2) || m < 3 {
        return Err(b.fail("m must be odd and at least 3"));
    }
    let mi = m as i64;
    let a = b.p2(mi - 2, 1)?;
    let r = b.p2(mi - 3, 2)?;
    let h = b.p2(mi - 1, 1)?;
    let s = b.p2(mi - 1, 2)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m + 1),
        vec![(a - r, h + s), (a, b.p2(mi, 1)? - 2), (a + r, h - s), (h, q(1))],
    )
}

/// Four-weight `[2^{m-1}, m]` code of the even-m trinomial family.
pub fn j171(m: u32) -> Result<ExpectedTable> {
    let b = Builder::new("tab-J171", format!("m={m}"));
    if !m.is_multiple_of(2) || m < 4 {
        return Err(b.fail("m must be even and at least 4"));
    }
    let mi = m as i64;
    let a = b.p2(mi - 2, 1)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m),
        vec![
            (a - b.p2(mi - 2, 2)?, b.p2(mi - 2, 2)?),
            (a - b.p2(mi - 4, 2)?, b.p2(mi - 1, 1)? - b.p2(mi, 2)?),
            (a, b.p2(mi, 2)? + b.p2(mi - 2, 2)? - 1),
            (a + b.p2(mi - 4, 2)?, b.p2(mi - 1, 1)? - b.p2(mi, 2)?),
        ],
    )
}

/// True when 2 generates the unit group modulo `n`.
pub fn two_is_primitive_root(n: u64) -> bool {
    if n < 3 {
        return false;
    }
    let phi = euler_phi(n);
    let mut t = 1u64;
    for i in 1..=phi {
        t = t * 2 % n;
        if t == 1 {
            return i == phi;
        }
    }
    false
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Two-weight cyclotomic code for prime `r` with 2 primitive modulo `r^{m_r}`.
pub fn wdx(r: u64, m_r: u32) -> Result<ExpectedTable> {
    let b = Builder::new("tal:cyclotomy40", format!("r={r}, m_r={m_r}"));
    let rm = r.checked_pow(m_r).ok_or_else(|| b.fail("r^m_r overflows"))?;
    if rm < 9 {
        return Err(b.fail("r^m_r must be at least 9"));
    }
    if !two_is_primitive_root(rm) {
        return Err(b.fail("2 is not a primitive root modulo r^m_r"));
    }
    let phi = euler_phi(rm) as i64;
    if phi > 100 {
        return Err(b.fail("field degree too large"));
    }
    let qq = b.p2(phi, 1)?;
    let sq = b.p2(phi, 2)?;
    let (rmq, rq) = (q(rm as i128), q(r as i128));
    let tail = (qq + sq) / (rmq * 4) * (rmq - rq * 2 + 2);
    let n = b.nat((qq - 1) * (rmq - rq + 1) / rmq, "length")?;
    b.table(
        Some(n),
        Some(phi as u32),
        vec![
            ((qq - sq) / 4 + tail, (qq - 1) * (rmq - rq + 1) / rmq),
            ((qq + sq) / 4 + tail, (qq - 1) * (rq - 1) / rmq),
        ],
    )
}

/// Two-weight code of a `(2^m, n, λ)` additive difference set.
pub fn difference_set_code(m: u32, n: u64, lambda: u64) -> Result<ExpectedTable> {
    let b = Builder::new("part1222", format!("m={m}, n={n}, lambda={lambda}"));
    if lambda >= n {
        return Err(b.fail("need lambda < n"));
    }
    let d = n - lambda;
    let s = d.sqrt();
    if s * s != d {
        return Err(b.fail(format!("n - lambda = {d} is not a perfect square")));
    }
    let (nq, sq, full) = (q(n as i128), q(s as i128), b.p2(m as i64, 1)? - 1);
    b.table(
        Some(n),
        Some(m),
        vec![
            ((nq - sq) / 2, (full * sq - nq) / (sq * 2)),
            ((nq + sq) / 2, (full * sq + nq) / (sq * 2)),
        ],
    )
}

/// Admissible weights of the code of an `(m, ℓ, n, λ)` relative difference set:
/// `(n ± √n)/2` and `(n ± √(n - λℓ))/2`, keeping only integral values.
pub fn relative_difference_set_weights(n: u64, lambda: u64, ell: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for t in [Some(n), n.checked_sub(lambda * ell)] {
        let Some(t) = t else { continue };
        let s = t.sqrt();
        if s * s == t && (n + s).is_multiple_of(2) {
            out.insert((n - s) / 2);
            out.insert((n + s) / 2);
        }
    }
    out
}

/// Three-weight `[2^{m-1}, m]` enumerator of the odd-m trinomial conjecture, as printed.
pub fn dds_codes(m: u32) -> Result<ExpectedTable> {
    let b = Builder::new("conj-DDSscodes", format!("m={m}"));
    if m.is_multiple_of(2) || m < 5 {
        return Err(b.fail("m must be odd and at least 5"));
    }
    let mi = m as i64;
    let a = b.p2(mi - 2, 1)?;
    let r = b.p2(mi - 3, 2)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m),
        vec![(a - r, a - r), (a, b.p2(mi - 1, 1)? - 1), (a + r, a + r)],
    )
}

/// Three-weight enumerator of the `m ≡ 2 (mod 4)` trinomial conjecture, as printed.
pub fn j170(m: u32) -> Result<ExpectedTable> {
    let b = Builder::new("conj-DDSsJ170", format!("m={m}"));
    if m % 4 != 2 || m < 6 {
        return Err(b.fail("m must be 2 mod 4 and at least 6"));
    }
    let mi = m as i64;
    let a = b.p2(mi - 2, 1)?;
    let off = b.p2(mi - 2, 2)?;
    let c = b.p2(mi - 3, 1)?;
    let s = b.p2(mi - 4, 2)?;
    b.table(
        Some(1 << (m - 1)),
        Some(m),
        vec![(a - off, c + s), (a, a * 3 - 1), (a + off, c - s)],
    )
}

/// One-weight code `[n, k, w]`.
pub fn one_weight(source: &'static str, n: u64, k: u32, w: u64) -> ExpectedTable {
    let b = Builder::new(source, format!("n={n}, k={k}, w={w}"));
    b.table(Some(n), Some(k), vec![(q(w as i128), q((1i128 << k) - 1))]).expect("integral")
}

/// Four-weight code obtained by mapping a four-valued spectrum table through
/// `wt = (2 n_f + v) / 4`, with one occurrence of `f̂(0) = fhat0` removed.
pub fn four_weight(m: u32, case: u8, fhat0: i64) -> Result<ExpectedTable> {
    let b = Builder::new("tab-4valuespectrum", format!("m={m}, case={case}, fhat0={fhat0}"));
    let spec = four_valued_table(m, case).ok_or_else(|| b.fail("spectrum table not integral at this m"))?;
    let nf2 = (1i128 << m) - fhat0 as i128;
    if nf2 % 2 != 0 || nf2 <= 0 {
        return Err(b.fail("fhat0 gives a non-integral length"));
    }
    let nf = nf2 / 2;
    let mut counts = spec;
    match counts.get_mut(&fhat0) {
        Some(c) if *c > 0 => *c -= 1,
        _ => return Err(b.fail("fhat0 is not a value of the spectrum")),
    }
    let rows = counts
        .into_iter()
        .map(|(v, c)| (Q::new(2 * nf + v as i128, 4), q(c as i128)))
        .collect();
    b.table(Some(nf as u64), Some(m), rows)
}

pub fn by_name(name: &str, args: &[i64]) -> Result<ExpectedTable> {
    let u = |i: usize| -> Result<u64> {
        args.get(i)
            .copied()
            .filter(|&v| v >= 0)
            .map(|v| v as u64)
            .ok_or_else(|| Error::Parse(format!("table {name}: missing argument {i}")))
    };
    let s = |i: usize| -> Result<i64> {
        args.get(i).copied().ok_or_else(|| Error::Parse(format!("table {name}: missing argument {i}")))
    };
    match name {
        "bent" => bent(u(0)? as u32, u(1)?),
        "semibent" => semibent(u(0)? as u32, u(1)?),
        "quadratic" => quadratic(u(0)? as u32, u(1)? as u32, s(2)?),
        "three-weight" => three_weight(u(0)? as u32, u(1)? as u32),
        "hyperoval" => hyperoval(u(0)? as u32),
        "hyperoval-expanded" => hyperoval_expanded(u(0)? as u32),
        "j171" => j171(u(0)? as u32),
        "j170" => j170(u(0)? as u32),
        "dds" => dds_codes(u(0)? as u32),
        "wdx" => wdx(u(0)?, u(1)? as u32),
        "diffset" => difference_set_code(u(0)? as u32, u(1)?, u(2)?),
        "four-weight" => four_weight(u(0)? as u32, u(1)? as u8, s(2)?),
        _ => Err(Error::UnknownTable(name.into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rows(t: &ExpectedTable) -> Vec<(u64, u64)> {
        t.rows.iter().filter(|(&w, _)| w > 0).map(|(&w, &a)| (w, a)).collect()
    }

    #[test]
    fn bent_rows() {
        assert_eq!(rows(&bent(6, 28).unwrap()), vec![(12, 28), (16, 35)]);
        assert_eq!(rows(&bent(4, 6).unwrap()), vec![(2, 6), (4, 9)]);
        assert!(bent(5, 16).is_err());
        assert!(bent(4, 7).is_err());
    }

    #[test]
    fn semibent_rows() {
        assert_eq!(rows(&semibent(5, 16).unwrap()), vec![(6, 6), (8, 15), (10, 10)]);
    }

    #[test]
    fn hyperoval_family_rows() {
        assert_eq!(rows(&hyperoval(5).unwrap()), vec![(6, 10), (8, 15), (10, 6)]);
        let e = hyperoval_expanded(5).unwrap();
        assert_eq!(rows(&e), vec![(6, 20), (8, 30), (10, 12), (16, 1)]);
        assert_eq!(e.total(), 64);
        assert_eq!(e.d_min(), Some(6));
        assert_eq!(hyperoval_expanded(7).unwrap().d_min(), Some(28));
    }

    #[test]
    fn wdx_rows() {
        let t = wdx(3, 2).unwrap();
        assert_eq!((t.n, t.k), (Some(49), Some(6)));
        assert_eq!(rows(&t), vec![(24, 49), (28, 14)]);
        assert!(wdx(7, 1).is_err());
        let t = wdx(11, 1).unwrap();
        assert_eq!(rows(&t), vec![(32, 93), (48, 930)]);
    }

    #[test]
    fn every_table_sums_to_a_power_of_two() {
        for m in 3..=16 {
            let all = [
                bent(m, (1 << (m - 1)) - (1 << (m.max(2) / 2 - 1))),
                semibent(m, 1 << (m - 1)),
                three_weight(m, 2),
                hyperoval(m),
                hyperoval_expanded(m),
                j171(m),
                j170(m),
                dds_codes(m),
                four_weight(m, 1, 0),
                four_weight(m, 2, 0),
                four_weight(m, 3, 1 << ((m + 2) / 2)),
            ];
            for t in all.into_iter().flatten() {
                let k = t.k.unwrap();
                assert_eq!(t.total(), 1 << k, "{} {}", t.source, t.params);
            }
        }
    }

    #[test]
    fn quadratic_rows() {
        // m = 6, r_f = 4, f̂(0) = 0: n_f = 32.
        let t = quadratic(6, 4, 0).unwrap();
        assert_eq!(rows(&t), vec![(12, 6), (16, 47), (20, 10)]);
        assert!(quadratic(6, 4, 4).is_err());
        assert_eq!(quadratic(6, 4, 16).unwrap().n, Some(24));
    }

    #[test]
    fn square_requirement() {
        assert_eq!(rows(&difference_set_code(4, 6, 2).unwrap()), vec![(2, 6), (4, 9)]);
        assert!(difference_set_code(4, 7, 2).is_err());
    }

    #[test]
    fn primitive_roots() {
        assert!(two_is_primitive_root(9));
        assert!(two_is_primitive_root(11));
        assert!(!two_is_primitive_root(7));
        assert!(two_is_primitive_root(25));
        assert!(two_is_primitive_root(27));
    }

    #[test]
    fn relative_weights() {
        assert_eq!(relative_difference_set_weights(16, 8, 2), BTreeSet::from([6, 8, 10]));
    }
}

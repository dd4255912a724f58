//! Arithmetic in GF(2^m) for 1 <= m <= 24.
//!
//! Elements are encoded as integers: bit `i` of the encoding is the
//! coefficient of `x^i` in the polynomial basis. Every truth table, defining
//! set and lookup table in this crate is indexed by that encoding.
//!
//! The reduction polynomial for each `m` is fixed: the numerically smallest
//! irreducible polynomial of degree `m` for which `x` is a primitive element.
//! It is echoed in every report as `GF(2^m)/0x<hex>`.

use std::fmt;
use std::sync::OnceLock;

use num_integer::Integer;
use rayon::prelude::*;

use crate::error::{Error, Result};

/// A field element in polynomial-basis encoding, always `< 2^m`.
pub type Elem = u32;

pub const MAX_DEGREE: u32 = 24;
const MAX_TABLE_DEGREE: u32 = 20;
const MAX_TRACE_ROWS_DEGREE: u32 = 13;

/// Discrete log / antilog tables with respect to the primitive element `x`.
struct LogTables {
    /// `exp[i] = x^i` for `0 <= i < 2(2^m - 1)`, doubled to skip a reduction in `mul`.
    exp: Vec<Elem>,
    /// `log[a]` for `a != 0`; `log[0]` is unused.
    log: Vec<u32>,
}

/// A concrete field GF(2^m). Immutable after construction.
pub struct FieldSpec {
    m: u32,
    poly: u32,
    mask: u32,
    trace_mask: u32,
    /// Column `i` holds bit `j` = Tr(x^(i+j)): the trace Gram matrix of the
    /// polynomial basis. `Tr(w*v) = popcount(w & gram_apply(v)) mod 2`.
    gram: Vec<u32>,
    tables: Option<LogTables>,
    trace_rows: OnceLock<Option<Vec<u64>>>,
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{})/{:#x}", self.m, self.poly)
    }
}

/// Carry-less product of two polynomials of degree < 32.
fn clmul(a: u32, b: u32) -> u64 {
    let (a, mut b) = (a as u64, b);
    let mut acc = 0u64;
    let mut shift = 0;
    while b != 0 {
        if b & 1 != 0 {
            acc ^= a << shift;
        }
        b >>= 1;
        shift += 1;
    }
    acc
}

fn degree(p: u64) -> i32 {
    63 - p.leading_zeros() as i32
}

/// Remainder of `a` modulo `p` over GF(2).
fn poly_rem(mut a: u64, p: u64) -> u64 {
    let dp = degree(p);
    while a != 0 && degree(a) >= dp {
        a ^= p << (degree(a) - dp);
    }
    a
}

fn mulmod(a: u32, b: u32, poly: u32) -> u32 {
    poly_rem(clmul(a, b), poly as u64) as u32
}

fn powmod(mut base: u32, mut e: u64, poly: u32) -> u32 {
    let mut acc = poly_rem(1, poly as u64) as u32;
    while e != 0 {
        if e & 1 != 0 {
            acc = mulmod(acc, base, poly);
        }
        base = mulmod(base, base, poly);
        e >>= 1;
    }
    acc
}

/// Irreducibility by trial division against every polynomial of degree 1..=deg/2.
pub fn is_irreducible(poly: u32) -> bool {
    let d = degree(poly as u64);
    if d < 1 {
        return false;
    }
    let top = 1u64 << (d / 2 + 1);
    (2..top).all(|q| poly_rem(poly as u64, q) != 0)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// True when `x` has multiplicative order `2^m - 1` modulo `poly`.
fn x_is_primitive(poly: u32, m: u32) -> bool {
    let n = (1u64 << m) - 1;
    let x = poly_rem(2, poly as u64) as u32;
    if powmod(x, n, poly) != 1 {
        return false;
    }
    prime_factors(n)
        .into_iter()
        .all(|q| powmod(x, n / q, poly) != 1)
}

impl FieldSpec {
    /// The canonical field of degree `m`.
    pub fn new(m: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        let lo = (1u32 << m) | 1;
        let hi = 1u32 << (m + 1);
        let poly = (lo..hi)
            .step_by(2)
            .find(|&p| is_irreducible(p) && x_is_primitive(p, m))
            .expect("a primitive polynomial exists for every degree");
        Ok(Self::with_poly_unchecked(m, poly))
    }

    /// A field with a caller-chosen reduction polynomial, validated against
    /// the same invariants as [`FieldSpec::new`].
    pub fn with_poly(m: u32, poly: u32) -> Result<Self> {
        if !(1..=MAX_DEGREE).contains(&m) {
            return Err(Error::FieldDegree(m));
        }
        if degree(poly as u64) != m as i32 || poly & 1 == 0 {
            return Err(Error::BadPolynomial { m, poly, reason: "must have degree m and a nonzero constant term" });
        }
        if !is_irreducible(poly) {
            return Err(Error::BadPolynomial { m, poly, reason: "reducible" });
        }
        if !x_is_primitive(poly, m) {
            return Err(Error::BadPolynomial { m, poly, reason: "x is not primitive" });
        }
        Ok(Self::with_poly_unchecked(m, poly))
    }

    fn with_poly_unchecked(m: u32, poly: u32) -> Self {
        let mask = ((1u64 << m) - 1) as u32;
        let two_m = 2 * m as usize;
        // Tr(x^k) for k < 2m, straight from the definition.
        let mut powers = Vec::with_capacity(two_m);
        let mut cur = poly_rem(1, poly as u64) as u32;
        let x = poly_rem(2, poly as u64) as u32;
        for _ in 0..two_m {
            powers.push(cur);
            cur = mulmod(cur, x, poly);
        }
        let trace_of = |a: u32| -> u32 {
            let mut acc = 0u32;
            let mut t = a;
            for _ in 0..m {
                acc ^= t;
                t = mulmod(t, t, poly);
            }
            debug_assert!(acc <= 1);
            acc
        };
        let traces: Vec<u32> = powers.iter().map(|&p| trace_of(p)).collect();
        let trace_mask = (0..m).fold(0u32, |acc, i| acc | (traces[i as usize] << i));
        let gram = (0..m as usize)
            .map(|i| (0..m as usize).fold(0u32, |acc, j| acc | (traces[i + j] << j)))
            .collect();

        let tables = (m <= MAX_TABLE_DEGREE).then(|| {
            let n = (1usize << m) - 1;
            let mut exp = vec![0; 2 * n.max(1)];
            let mut log = vec![0; 1 << m];
            let mut cur = poly_rem(1, poly as u64) as u32;
            for i in 0..n {
                exp[i] = cur;
                log[cur as usize] = i as u32;
                cur = mulmod(cur, x, poly);
            }
            for i in n..2 * n {
                exp[i] = exp[i - n];
            }
            if n == 0 {
                exp[0] = 1;
            }
            LogTables { exp, log }
        });

        Self { m, poly, mask, trace_mask, gram, tables, trace_rows: OnceLock::new() }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Reduction polynomial, bit `i` = coefficient of `x^i`.
    pub fn poly(&self) -> u32 {
        self.poly
    }

    /// Number of field elements, `2^m`.
    pub fn order(&self) -> usize {
        1usize << self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn mult_order(&self) -> u64 {
        (1u64 << self.m) - 1
    }

    pub fn contains(&self, a: Elem) -> bool {
        a & !self.mask == 0
    }

    /// Checked conversion of a raw integer into a field element.
    pub fn elem(&self, v: u64) -> Result<Elem> {
        (v >> self.m == 0)
            .then_some(v as Elem)
            .ok_or(Error::NotInField { value: v, m: self.m })
    }

    /// Iterator over all `2^m` elements in encoding order.
    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..(1u32 << self.m)
    }

    /// The primitive element `x` (encoding 2, or 1 when m = 1).
    pub fn generator(&self) -> Elem {
        poly_rem(2, self.poly as u64) as u32
    }

    pub fn has_log_tables(&self) -> bool {
        self.tables.is_some()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        a ^ b
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.tables {
            Some(t) => {
                if a == 0 || b == 0 {
                    0
                } else {
                    t.exp[(t.log[a as usize] + t.log[b as usize]) as usize]
                }
            }
            None => mulmod(a, b, self.poly),
        }
    }

    /// Carry-less multiply with polynomial reduction; never consults the tables.
    pub fn mul_clmul(&self, a: Elem, b: Elem) -> Elem {
        mulmod(a, b, self.poly)
    }

    #[inline]
    pub fn square(&self, a: Elem) -> Elem {
        self.mul(a, a)
    }

    /// Reduce an integer exponent into `[0, 2^m - 2]`.
    pub fn reduce_exp(&self, e: i128) -> u64 {
        e.rem_euclid(self.mult_order() as i128) as u64
    }

    /// `a^e`. For `a != 0` the exponent is taken modulo `2^m - 1` (negative
    /// exponents included). `0^0 = 1` and `0^e = 0` for every other `e`.
    pub fn pow(&self, a: Elem, e: i128) -> Elem {
        if a == 0 {
            return u32::from(e == 0);
        }
        let e = self.reduce_exp(e);
        match &self.tables {
            Some(t) => {
                let n = self.mult_order();
                t.exp[((t.log[a as usize] as u64 * e) % n) as usize]
            }
            None => powmod(a, e, self.poly),
        }
    }

    /// `a^e` by square-and-multiply with a literal exponent (no reduction).
    pub fn pow_literal(&self, a: Elem, mut e: u128) -> Elem {
        let mut acc = 1;
        let mut base = a;
        while e != 0 {
            if e & 1 != 0 {
                acc = self.mul_clmul(acc, base);
            }
            base = self.mul_clmul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.inv_or_zero(a))
    }

    /// `a^(2^m - 2)`: the inverse for `a != 0`, and `0` at `0`.
    pub fn inv_or_zero(&self, a: Elem) -> Elem {
        if a == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = self.mult_order() as u32;
                t.exp[((n - t.log[a as usize]) % n) as usize]
            }
            None => powmod(a, self.mult_order() - 1, self.poly),
        }
    }

    /// Discrete logarithm to base `x`, if tables are present.
    pub fn log(&self, a: Elem) -> Option<u32> {
        if a == 0 {
            return None;
        }
        self.tables.as_ref().map(|t| t.log[a as usize])
    }

    /// `x^i`.
    pub fn exp(&self, i: u64) -> Elem {
        let n = self.mult_order();
        match &self.tables {
            Some(t) => t.exp[(i % n) as usize],
            None => powmod(self.generator(), i % n, self.poly),
        }
    }

    /// `a^(2^k)`.
    pub fn frobenius(&self, mut a: Elem, k: u32) -> Elem {
        for _ in 0..(k % self.m) {
            a = self.square(a);
        }
        a
    }

    /// Square root, `a^(2^(m-1))`.
    pub fn sqrt(&self, a: Elem) -> Elem {
        self.frobenius(a, self.m - 1)
    }

    /// Absolute trace as 0/1, by linearity over the polynomial basis.
    #[inline]
    pub fn trace(&self, a: Elem) -> u32 {
        (a & self.trace_mask).count_ones() & 1
    }

    /// `a + a^2 + ... + a^(2^(m-1))` evaluated literally.
    pub fn trace_literal(&self, a: Elem) -> u32 {
        let mut acc = 0;
        let mut t = a;
        for _ in 0..self.m {
            acc ^= t;
            t = self.square(t);
        }
        acc
    }

    /// Relative trace from GF(2^m) down to GF(2^k).
    pub fn rel_trace(&self, a: Elem, k: u32) -> Result<Elem> {
        if k == 0 || !self.m.is_multiple_of(k) {
            return Err(Error::NotDivisor { k, m: self.m });
        }
        let mut acc = 0;
        let mut t = a;
        for _ in 0..self.m / k {
            acc ^= t;
            t = self.frobenius(t, k);
        }
        Ok(acc)
    }

    /// True when `a` lies in the subfield GF(2^k), `k | m`.
    pub fn in_subfield(&self, a: Elem, k: u32) -> bool {
        self.m.is_multiple_of(k) && self.frobenius(a, k) == a
    }

    /// `num / den` modulo `2^m - 1`, in `[0, 2^m - 2]`.
    pub fn exp_frac(&self, num: i128, den: i128) -> Result<u64> {
        let n = self.mult_order() as i128;
        let g = den.rem_euclid(n).extended_gcd(&n);
        if g.gcd != 1 {
            return Err(Error::NotInvertible { den, modulus: n as u64 });
        }
        Ok((num.rem_euclid(n) * g.x.rem_euclid(n)).rem_euclid(n) as u64)
    }

    /// Image of `v` under the trace Gram matrix: bit `j` of the result is
    /// `Tr(x^j * v)`, so that `Tr(w*v)` is the parity of `w & gram_apply(v)`.
    pub fn gram_apply(&self, v: Elem) -> u32 {
        let mut out = 0;
        let mut bits = v;
        while bits != 0 {
            let i = bits.trailing_zeros();
            out ^= self.gram[i as usize];
            bits &= bits - 1;
        }
        out
    }

    /// Gram matrix columns of the trace pairing.
    pub fn gram_columns(&self) -> &[u32] {
        &self.gram
    }

    /// Bitset rows `R_x = { y : Tr(x*y) = 1 }` for every `x`, each row
    /// `max(1, 2^m / 64)` words. Built once per field on first use, and only
    /// for small `m` (returns `None` above 2^13 elements).
    pub(crate) fn trace_one_rows(&self) -> Option<&[u64]> {
        self.trace_rows
            .get_or_init(|| {
                (self.m <= MAX_TRACE_ROWS_DEGREE).then(|| {
                    let q = self.order();
                    let words = q.div_ceil(64);
                    let mut rows = vec![0u64; q * words];
                    rows.par_chunks_mut(words).enumerate().for_each(|(x, row)| {
                        fill_trace_one_row(self, x as Elem, row);
                    });
                    rows
                })
            })
            .as_deref()
    }
}

/// Write the indicator of `{ y : Tr(x*y) = 1 }` into `row`, one field
/// multiplication per element.
pub(crate) fn fill_trace_one_row(field: &FieldSpec, x: Elem, row: &mut [u64]) {
    row.iter_mut().for_each(|w| *w = 0);
    if x == 0 {
        return;
    }
    for y in field.elements() {
        if field.trace(field.mul(x, y)) == 1 {
            row[(y >> 6) as usize] |= 1 << (y & 63);
        }
    }
}

/// Greatest common divisor on `u64`.
pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force: all monic degree-m polys with constant term, irreducible
    /// by exhaustive root/factor search on products of lower-degree polys.
    fn brute_irreducible(poly: u32) -> bool {
        let d = degree(poly as u64);
        for a in 2u32..(1 << d) {
            for b in 2u32..(1 << d) {
                if clmul(a, b) == poly as u64 {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn canonical_polynomials() {
        assert_eq!(FieldSpec::new(1).unwrap().poly(), 0b11);
        assert_eq!(FieldSpec::new(3).unwrap().poly(), 0b1011);
        assert_eq!(FieldSpec::new(4).unwrap().poly(), 0b10011);
        // m = 3 oracle: of the four candidates with both end bits set, the
        // smallest irreducible one is x^3 + x + 1.
        let cands: Vec<u32> = (0b1001..0b10000).step_by(2).filter(|&p| brute_irreducible(p)).collect();
        assert_eq!(cands, vec![0b1011, 0b1101]);
        let cands4: Vec<u32> = (0b10001..0b100000).step_by(2).filter(|&p| brute_irreducible(p)).collect();
        assert_eq!(cands4[0], 0b10011);
        // x^4+x^3+x^2+x+1 is irreducible, but x has order 5 there.
        assert!(brute_irreducible(0b11111));
        assert!(FieldSpec::with_poly(4, 0b11111).is_err());
    }

    #[test]
    fn degree_bounds() {
        assert!(matches!(FieldSpec::new(0), Err(Error::FieldDegree(0))));
        assert!(matches!(FieldSpec::new(25), Err(Error::FieldDegree(25))));
        let f = FieldSpec::new(24).unwrap();
        assert_eq!(format!("{f}"), format!("GF(2^24)/{:#x}", f.poly()));
        assert!(!f.has_log_tables());
    }

    #[test]
    fn display_notation() {
        assert_eq!(FieldSpec::new(4).unwrap().to_string(), "GF(2^4)/0x13");
    }

    #[test]
    fn small_products() {
        let f = FieldSpec::new(3).unwrap();
        assert_eq!(f.mul(0b010, 0b100), 0b011);
        assert_eq!(f.mul_clmul(0b010, 0b100), 0b011);
    }

    #[test]
    fn inverses_and_lagrange() {
        for m in 1..=10 {
            let f = FieldSpec::new(m).unwrap();
            for a in 1..f.order() as u32 {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                assert_eq!(f.pow(a, f.mult_order() as i128), 1);
                assert_eq!(f.pow(a, -1), f.inv(a).unwrap());
            }
            assert!(matches!(f.inv(0), Err(Error::ZeroInverse)));
        }
    }

    #[test]
    fn zero_powers() {
        let f = FieldSpec::new(5).unwrap();
        assert_eq!(f.pow(0, 0), 1);
        assert_eq!(f.pow(0, 7), 0);
        assert_eq!(f.pow(0, 31), 0);
        assert_eq!(f.pow(0, 30), 0);
        assert_eq!(f.inv_or_zero(0), 0);
    }

    #[test]
    fn table_and_clmul_agree() {
        for m in [5, 9, 13] {
            let f = FieldSpec::new(m).unwrap();
            let q = f.order() as u32;
            for a in (0..q).step_by(7) {
                for b in (0..q).step_by(11) {
                    assert_eq!(f.mul(a, b), f.mul_clmul(a, b));
                }
            }
        }
    }

    #[test]
    fn trace_values() {
        for m in 1..=12 {
            let f = FieldSpec::new(m).unwrap();
            assert_eq!(f.trace(0), 0);
            assert_eq!(f.trace(1), m % 2);
            let ones: u32 = f.elements().map(|a| f.trace(a)).sum();
            assert_eq!(ones, 1 << (m - 1));
            for a in f.elements() {
                assert_eq!(f.trace(a), f.trace_literal(a));
            }
        }
        let f = FieldSpec::new(4).unwrap();
        assert_eq!(f.elements().map(|a| f.trace(a)).sum::<u32>(), 8);
    }

    #[test]
    fn relative_trace_lands_in_subfield() {
        let f = FieldSpec::new(6).unwrap();
        for k in [1, 2, 3, 6] {
            for a in f.elements() {
                let t = f.rel_trace(a, k).unwrap();
                assert!(f.in_subfield(t, k));
            }
        }
        assert!(matches!(f.rel_trace(3, 4), Err(Error::NotDivisor { k: 4, m: 6 })));
        for a in f.elements() {
            assert_eq!(f.rel_trace(a, 1).unwrap(), f.trace(a));
        }
    }

    #[test]
    fn fractional_exponents() {
        let f = FieldSpec::new(5).unwrap();
        assert_eq!(f.exp_frac(1, 6).unwrap(), 26);
        assert_eq!((5 * 16 - 2) / 3, 26);
        let v = f.exp_frac(5, 6).unwrap();
        assert_eq!((6 * v) % 31, 5);
        assert_eq!(f.exp_frac(40, 1).unwrap(), 9);
        assert!(matches!(f.exp_frac(1, 31), Err(Error::NotInvertible { .. })));
        let f6 = FieldSpec::new(6).unwrap();
        assert!(f6.exp_frac(1, 3).is_err());
    }

    #[test]
    fn gram_pairing_matches_trace() {
        for m in 1..=8 {
            let f = FieldSpec::new(m).unwrap();
            for w in f.elements() {
                for v in f.elements() {
                    let via_gram = (w & f.gram_apply(v)).count_ones() & 1;
                    assert_eq!(via_gram, f.trace(f.mul(w, v)));
                }
            }
        }
    }

    #[test]
    fn trace_rows_cache() {
        let f = FieldSpec::new(5).unwrap();
        let rows = f.trace_one_rows().unwrap();
        for x in f.elements() {
            for y in f.elements() {
                let bit = (rows[x as usize] >> y) & 1;
                assert_eq!(bit as u32, f.trace(f.mul(x, y)));
            }
        }
        assert!(FieldSpec::new(14).unwrap().trace_one_rows().is_none());
    }
}

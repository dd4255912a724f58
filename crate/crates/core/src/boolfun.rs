//! Boolean functions on GF(2^m): truth tables, Walsh spectra, spectrum
//! classes, quadratic rank, and the AB / APN tests for vectorial maps.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitSet;
use crate::codes::DefiningSet;
use crate::error::{Error, Result};
use crate::gf2m::{Elem, FieldSpec};

/// A Boolean function `GF(2^m) -> GF(2)` stored as its truth table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    m: u32,
    bits: BitSet,
    n_f: u64,
}

impl TruthTable {
    pub fn from_bits(m: u32, bits: BitSet) -> Result<Self> {
        if bits.len() != 1usize << m {
            return Err(Error::TableLength { got: bits.len(), m });
        }
        let n_f = bits.count_ones();
        Ok(Self { m, bits, n_f })
    }

    pub fn from_evaluator(field: &FieldSpec, f: impl Fn(Elem) -> bool) -> Self {
        let bits = BitSet::from_fn(field.order(), |v| f(v as Elem));
        Self::from_bits(field.m(), bits).expect("length is 2^m")
    }

    /// `x -> Tr(g(x))`.
    pub fn from_trace_of(field: &FieldSpec, g: impl Fn(Elem) -> Elem) -> Self {
        Self::from_evaluator(field, |x| field.trace(g(x)) == 1)
    }

    /// `x -> Tr(values[x])` for a tabulated vectorial map.
    pub fn from_trace_table(field: &FieldSpec, values: &[Elem]) -> Self {
        Self::from_evaluator(field, |x| field.trace(values[x as usize]) == 1)
    }

    /// The characteristic function of `d`.
    pub fn indicator(field: &FieldSpec, d: &DefiningSet) -> Self {
        Self::from_bits(field.m(), d.bits().clone()).expect("set lives in the field")
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    #[inline]
    pub fn get(&self, v: Elem) -> bool {
        self.bits.contains(v as usize)
    }

    /// Support size `n_f`.
    pub fn n_f(&self) -> u64 {
        self.n_f
    }

    pub fn support(&self) -> DefiningSet {
        DefiningSet::from_bits(self.m, self.bits.clone())
    }

    /// `f + 1`.
    pub fn complement(&self) -> Self {
        Self::from_bits(self.m, self.bits.complement()).expect("same length")
    }
}

/// The Walsh spectrum `f̂(w)` for every `w`, indexed by element encoding.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WalshSpectrum {
    m: u32,
    values: Vec<i32>,
}

impl WalshSpectrum {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i32] {
        &self.values
    }

    pub fn at(&self, w: Elem) -> i64 {
        self.values[w as usize] as i64
    }

    /// Value multiset as `value -> count`.
    pub fn summary(&self) -> BTreeMap<i64, u64> {
        let mut out = BTreeMap::new();
        for &v in &self.values {
            *out.entry(v as i64).or_insert(0) += 1;
        }
        out
    }

    /// Summary rows sorted by descending value.
    pub fn summary_rows(&self) -> Vec<(i64, u64)> {
        self.summary().into_iter().rev().collect()
    }

    pub fn parseval_holds(&self) -> bool {
        let s: i128 = self.values.iter().map(|&v| (v as i128) * (v as i128)).sum();
        s == 1i128 << (2 * self.m)
    }
}

/// In-place unnormalised Walsh-Hadamard butterfly over the dot-product pairing.
pub fn fwht(a: &mut [i32]) {
    const BLOCK: usize = 1 << 13;
    let n = a.len();
    debug_assert!(n.is_power_of_two());
    if n <= BLOCK {
        fwht_serial(a);
        return;
    }
    a.par_chunks_mut(BLOCK).for_each(fwht_serial);
    let mut h = BLOCK;
    while h < n {
        a.par_chunks_mut(2 * h).for_each(|c| {
            let (l, r) = c.split_at_mut(h);
            l.par_chunks_mut(BLOCK).zip(r.par_chunks_mut(BLOCK)).for_each(|(l, r)| butterfly(l, r));
        });
        h *= 2;
    }
}

#[inline]
fn butterfly(l: &mut [i32], r: &mut [i32]) {
    for (x, y) in l.iter_mut().zip(r.iter_mut()) {
        let (u, v) = (*x, *y);
        *x = u + v;
        *y = u - v;
    }
}

fn fwht_serial(a: &mut [i32]) {
    let n = a.len();
    let mut h = 1;
    while h < n {
        for c in a.chunks_mut(2 * h) {
            let (l, r) = c.split_at_mut(h);
            butterfly(l, r);
        }
        h *= 2;
    }
}

/// Signs `(-1)^{f(x)}` placed at the Gram image of `x`, ready for [`fwht`].
fn scatter_signs(field: &FieldSpec, f: impl Fn(usize) -> bool) -> Vec<i32> {
    let q = field.order();
    let cols = field.gram_columns();
    let mut image = vec![0u32; q];
    let mut s = vec![0i32; q];
    for x in 0..q {
        let g = if x == 0 { 0 } else { image[x & (x - 1)] ^ cols[x.trailing_zeros() as usize] };
        image[x] = g;
        s[g as usize] = if f(x) { -1 } else { 1 };
    }
    s
}

/// `f̂(w) = Σ_x (-1)^{f(x) + Tr(wx)}` for all `w` in `O(m 2^m)`.
pub fn walsh_transform(field: &FieldSpec, tt: &TruthTable) -> WalshSpectrum {
    assert_eq!(field.m(), tt.m());
    let mut s = scatter_signs(field, |x| tt.bits.contains(x));
    fwht(&mut s);
    WalshSpectrum { m: tt.m, values: s }
}

/// The literal double sum; `O(4^m)`.
pub fn walsh_direct(field: &FieldSpec, tt: &TruthTable) -> WalshSpectrum {
    assert_eq!(field.m(), tt.m());
    let values = field
        .elements()
        .into_par_iter()
        .map(|w| {
            field
                .elements()
                .map(|x| {
                    let bit = tt.get(x) as u32 ^ field.trace(field.mul(w, x));
                    1 - 2 * bit as i32
                })
                .sum()
        })
        .collect();
    WalshSpectrum { m: tt.m, values }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "tag", content = "e")]
pub enum SpectrumClass {
    Bent,
    Semibent,
    ThreeValued(u32),
    FourValuedCase1,
    FourValuedCase2,
    FourValuedCase3,
    Other,
}

impl SpectrumClass {
    pub fn name(&self) -> String {
        match self {
            SpectrumClass::ThreeValued(e) => format!("ThreeValued({e})"),
            other => format!("{other:?}"),
        }
    }
}

/// Exact spectrum summary expected for a three-valued spectrum with parameter `e`.
pub fn three_valued_table(m: u32, e: u32) -> Option<BTreeMap<i64, u64>> {
    if e == 0 || e + 2 > m || !(m - e).is_multiple_of(2) {
        return None;
    }
    let big = 1i64 << ((m + e) / 2);
    let half = 1u64 << (m - e - 1);
    let root = 1u64 << ((m - e - 2) / 2);
    Some(BTreeMap::from([
        (0, (1u64 << m) - (1u64 << (m - e))),
        (big, half + root),
        (-big, half - root),
    ]))
}

fn third(n: i64) -> Option<i64> {
    (n % 3 == 0).then_some(n / 3)
}

/// Exact spectrum summary for the four-valued Case 1, 2 or 3 tables.
pub fn four_valued_table(m: u32, case: u8) -> Option<BTreeMap<i64, u64>> {
    if !m.is_multiple_of(2) || m < 2 {
        return None;
    }
    let p = |e: u32| 1i64 << e;
    let rows: Vec<(i64, i64)> = match case {
        1 => vec![
            (-p(m / 2), third(p(m) - p(m / 2))?),
            (0, p(m - 1) - p((m - 2) / 2)),
            (p(m / 2), p(m / 2)),
            (p((m + 2) / 2), third(p(m - 1) - p((m - 2) / 2))?),
        ],
        2 => {
            if !m.is_multiple_of(4) {
                return None;
            }
            vec![
                (-p(m / 2), p(m - 1) - p((3 * m - 4) / 4)),
                (0, p(3 * m / 4) - p(m / 4)),
                (p(m / 2), p(m - 1) - p((3 * m - 4) / 4)),
                (p(3 * m / 4), p(m / 4)),
            ]
        }
        3 => vec![
            (-p(m / 2), third(p(m) - p(m / 2) - 2)?),
            (0, p(m - 1) - p((m - 2) / 2) + 2),
            (p(m / 2), p(m / 2) - 2),
            (p((m + 2) / 2), third(p(m - 1) - p((m - 2) / 2) + 2)?),
        ],
        _ => return None,
    };
    let mut out = BTreeMap::new();
    for (v, c) in rows {
        if c < 0 {
            return None;
        }
        if c > 0 {
            *out.entry(v).or_insert(0) += c as u64;
        }
    }
    Some(out)
}

/// Assign a spectrum class. Checks run in the order of the enum and the first hit wins.
pub fn classify(ws: &WalshSpectrum, m: u32) -> SpectrumClass {
    let summary = ws.summary();
    if m.is_multiple_of(2) {
        let b = 1i64 << (m / 2);
        if summary.keys().all(|&v| v.abs() == b) {
            return SpectrumClass::Bent;
        }
    } else {
        let s = 1i64 << m.div_ceil(2);
        if summary.keys().all(|&v| v == 0 || v.abs() == s) {
            return SpectrumClass::Semibent;
        }
    }
    let top = summary.keys().map(|v| v.unsigned_abs()).max().unwrap_or(0);
    if top.is_power_of_two() {
        let t = top.trailing_zeros();
        if 2 * t > m {
            let e = 2 * t - m;
            if three_valued_table(m, e).as_ref() == Some(&summary) {
                return SpectrumClass::ThreeValued(e);
            }
        }
    }
    for (case, class) in [
        (1u8, SpectrumClass::FourValuedCase1),
        (2, SpectrumClass::FourValuedCase2),
        (3, SpectrumClass::FourValuedCase3),
    ] {
        if four_valued_table(m, case).as_ref() == Some(&summary) {
            return class;
        }
    }
    SpectrumClass::Other
}

/// Rank of a GF(2) matrix given as row bitmasks.
pub fn gf2_rank(rows: &mut [u32]) -> u32 {
    let mut rank = 0;
    for bit in 0..32 {
        let Some(p) = (rank as usize..rows.len()).find(|&r| rows[r] >> bit & 1 == 1) else { continue };
        rows.swap(rank as usize, p);
        let pivot = rows[rank as usize];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank as usize && *row >> bit & 1 == 1 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// `r_f = m - dim V_f` for `f` of algebraic degree at most 2.
pub fn quad_rank(tt: &TruthTable) -> Result<u32> {
    let m = tt.m;
    let f = |v: usize| tt.bits.contains(v) as u8;
    let q = 1usize << m;
    for i in 0..m {
        for j in i + 1..m {
            let (a, b) = (1usize << i, 1usize << j);
            let c = f(a ^ b) ^ f(a) ^ f(b) ^ f(0);
            if let Some(x) = (0..q).find(|&x| f(x ^ a ^ b) ^ f(x ^ a) ^ f(x ^ b) ^ f(x) != c) {
                return Err(Error::NotQuadratic(format!(
                    "second derivative along ({a:#x}, {b:#x}) is not constant (differs at {x:#x})"
                )));
            }
        }
    }
    let mut rows: Vec<u32> = (0..m)
        .map(|i| {
            (0..m).fold(0u32, |acc, j| {
                let (a, b) = (1usize << i, 1usize << j);
                acc | (((f(a ^ b) ^ f(a) ^ f(b) ^ f(0)) as u32) << j)
            })
        })
        .collect();
    Ok(gf2_rank(&mut rows))
}

/// Evaluate a vectorial map at every element.
pub fn tabulate(field: &FieldSpec, g: impl Fn(Elem) -> Elem + Sync + Send) -> Vec<Elem> {
    field.elements().into_par_iter().map(g).collect()
}

/// `λ_g(a, b) = Σ_x (-1)^{Tr(a g(x) + b x)}`.
pub fn vectorial_walsh(field: &FieldSpec, g: &[Elem], a: Elem, b: Elem) -> i64 {
    field
        .elements()
        .map(|x| {
            let t = field.trace(field.mul(a, g[x as usize]) ^ field.mul(b, x));
            1 - 2 * t as i64
        })
        .sum()
}

/// Every component `Tr(a g)`, `a != 0`, has spectrum in `{0, ±2^{(m+1)/2}}`.
pub fn is_almost_bent(field: &FieldSpec, g: &[Elem]) -> bool {
    let m = field.m();
    if m.is_multiple_of(2) {
        return false;
    }
    let s = 1i32 << m.div_ceil(2);
    (1..field.order() as Elem).into_par_iter().all(|a| {
        let mut v = scatter_signs(field, |x| field.trace(field.mul(a, g[x])) == 1);
        fwht(&mut v);
        v.iter().all(|&t| t == 0 || t.abs() == s)
    })
}

/// Maximum number of solutions of `g(x+a) + g(x) = b` over `a != 0` and all `b`.
pub fn differential_uniformity(field: &FieldSpec, g: &[Elem]) -> u32 {
    let q = field.order();
    (1..q)
        .into_par_iter()
        .map_init(
            || vec![0u32; q],
            |count, a| {
                count.iter_mut().for_each(|c| *c = 0);
                let mut best = 0;
                for x in 0..q {
                    let d = (g[x ^ a] ^ g[x]) as usize;
                    count[d] += 1;
                    best = best.max(count[d]);
                }
                best
            },
        )
        .max()
        .unwrap_or(0)
}

pub fn is_apn(field: &FieldSpec, g: &[Elem]) -> bool {
    field.order() > 1 && differential_uniformity(field, g) == 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_zero_spectrum() {
        let f = FieldSpec::new(4).unwrap();
        let tt = TruthTable::from_evaluator(&f, |_| false);
        assert_eq!(tt.n_f(), 0);
        let ws = walsh_transform(&f, &tt);
        assert_eq!(ws.summary_rows(), vec![(16, 1), (0, 15)]);
        assert_eq!(classify(&ws, 4), SpectrumClass::Other);
    }

    #[test]
    fn linear_function_spectrum() {
        let f = FieldSpec::new(6).unwrap();
        for c in [1, 5, 37] {
            let ws = walsh_transform(&f, &TruthTable::from_trace_of(&f, |x| f.mul(c, x)));
            for w in f.elements() {
                assert_eq!(ws.at(w), if w == c { 64 } else { 0 });
            }
        }
    }

    #[test]
    fn gold_m5_semibent() {
        let f = FieldSpec::new(5).unwrap();
        let tt = TruthTable::from_trace_of(&f, |x| f.pow(x, 3));
        assert_eq!(tt.n_f(), 16);
        let ws = walsh_transform(&f, &tt);
        assert_eq!(ws, walsh_direct(&f, &tt));
        assert_eq!(ws.summary(), BTreeMap::from([(-8, 6), (0, 16), (8, 10)]));
        assert_eq!(classify(&ws, 5), SpectrumClass::Semibent);
        assert_eq!(quad_rank(&tt).unwrap(), 4);
    }

    #[test]
    fn fwht_blocks_match_serial() {
        let n = 1 << 16;
        let mut a: Vec<i32> = (0..n).map(|i| ((i * 2654435761u64 as usize) >> 7) as i32 % 3 - 1).collect();
        let mut b = a.clone();
        fwht(&mut a);
        fwht_serial(&mut b);
        assert_eq!(a, b);
    }

    #[test]
    fn table_counts_are_complete() {
        for m in (4..=16).step_by(2) {
            for case in 1..=3 {
                if let Some(t) = four_valued_table(m, case) {
                    assert_eq!(t.values().sum::<u64>(), 1 << m, "m={m} case {case}");
                    let parseval: i128 = t.iter().map(|(&v, &c)| (v as i128).pow(2) * c as i128).sum();
                    assert_eq!(parseval, 1i128 << (2 * m));
                }
            }
            let t = three_valued_table(m, 2).unwrap();
            assert_eq!(t.values().sum::<u64>(), 1 << m);
        }
    }

    #[test]
    fn ab_and_apn_monomials() {
        let f = FieldSpec::new(5).unwrap();
        let gold = tabulate(&f, |x| f.pow(x, 3));
        assert!(is_almost_bent(&f, &gold));
        assert!(is_apn(&f, &gold));
        let kasami = tabulate(&f, |x| f.pow(x, 13));
        assert!(is_almost_bent(&f, &kasami));
        let linear = tabulate(&f, |x| f.mul(x, 7) ^ f.square(x));
        assert!(!is_apn(&f, &linear));
        assert_eq!(vectorial_walsh(&f, &linear, 0, 0), 32);
    }

    #[test]
    fn quad_rank_rejects_cubic() {
        let f = FieldSpec::new(5).unwrap();
        let tt = TruthTable::from_trace_of(&f, |x| f.pow(x, 7));
        assert!(matches!(quad_rank(&tt), Err(Error::NotQuadratic(_))));
        let aff = TruthTable::from_trace_of(&f, |x| f.mul(x, 3) ^ 1);
        assert_eq!(quad_rank(&aff).unwrap(), 0);
    }
}

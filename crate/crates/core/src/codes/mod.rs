//! Binary codes `C_D = { (Tr(x d))_{d in D} : x in GF(2^m) }` from a defining
//! set `D`, with exact weight distributions.
//!
//! Two independent routes compute the distribution. [`code_from_defining_set`]
//! counts `|{d in D : Tr(xd) = 1}|` for each `x` directly with bitset
//! intersections. [`weight_dist_via_walsh`] reads the same numbers off the
//! Walsh spectrum of the indicator of `D`, using
//! `wt(c_x) = (2 n_f + f̂(x)) / 4` for `x != 0`.

pub mod tables;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::BitSet;
use crate::boolfun::{walsh_transform, TruthTable};
use crate::error::{Error, Result};
use crate::gf2m::{fill_trace_one_row, Elem, FieldSpec};

pub use tables::ExpectedTable;

/// Serialize a `weight -> count` map as `[[w, A_w], ...]`, ascending.
pub(crate) fn as_rows<S: serde::Serializer>(map: &BTreeMap<u64, u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(map.iter().map(|(w, a)| [*w, *a]))
}

/// A subset of GF(2^m), kept both as a bitset and as a sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefiningSet {
    m: u32,
    bits: BitSet,
    elements: Vec<Elem>,
}

impl DefiningSet {
    pub fn from_bits(m: u32, bits: BitSet) -> Self {
        assert_eq!(bits.len(), 1usize << m);
        let elements = bits.iter_ones().map(|v| v as Elem).collect();
        Self { m, bits, elements }
    }

    /// Build from a list of distinct elements. Repeated entries are an error:
    /// defining sets are sets.
    pub fn from_elements(field: &FieldSpec, elems: impl IntoIterator<Item = Elem>) -> Result<Self> {
        let mut bits = BitSet::new(field.order());
        for e in elems {
            if !field.contains(e) {
                return Err(Error::NotInField { value: e as u64, m: field.m() });
            }
            if bits.contains(e as usize) {
                return Err(Error::Parse(format!("element {e:#x} listed twice")));
            }
            bits.insert(e as usize);
        }
        Ok(Self::from_bits(field.m(), bits))
    }

    /// Build from any iterator, collapsing repeats (images of maps).
    pub fn collect(field: &FieldSpec, elems: impl IntoIterator<Item = Elem>) -> Self {
        let mut bits = BitSet::new(field.order());
        for e in elems {
            bits.insert(e as usize);
        }
        Self::from_bits(field.m(), bits)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: Elem) -> bool {
        (e as usize) < self.bits.len() && self.bits.contains(e as usize)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    /// `D \ {0}`.
    pub fn without_zero(&self) -> Self {
        let mut bits = self.bits.clone();
        bits.remove(0);
        Self::from_bits(self.m, bits)
    }

    /// `GF(2^m) \ D`.
    pub fn complement(&self) -> Self {
        Self::from_bits(self.m, self.bits.complement())
    }
}

/// Length, dimension and exact weight distribution of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CodeSummary {
    pub n: u64,
    pub k: u32,
    /// `weight -> A_w`, including `A_0 = 1`. Serialized as ascending `[w, A_w]` pairs.
    #[serde(serialize_with = "as_rows")]
    pub distribution: BTreeMap<u64, u64>,
    /// Minimum nonzero weight, absent for the zero code.
    pub d_min: Option<u64>,
    /// Number of `x` with `c_x = 0`.
    pub e: u64,
}

impl CodeSummary {
    /// Fold the per-`x` weight counts (one entry per field element) into a
    /// distribution. The multiplicity of weight 0 is the kernel size `e`.
    pub fn from_weight_counts(m: u32, n: u64, counts: BTreeMap<u64, u64>) -> Self {
        let e = counts.get(&0).copied().unwrap_or(0);
        assert!(e.is_power_of_two(), "kernel of the encoding map has size {e}");
        let k = m - e.trailing_zeros();
        let distribution: BTreeMap<u64, u64> = counts
            .into_iter()
            .map(|(w, c)| {
                assert_eq!(c % e, 0, "weight {w} count {c} not divisible by {e}");
                (w, c / e)
            })
            .collect();
        let d_min = distribution.keys().copied().find(|&w| w > 0);
        Self { n, k, distribution, d_min, e }
    }

    /// Rows `(w, A_w)` for `w > 0`, ascending.
    pub fn nonzero_rows(&self) -> Vec<(u64, u64)> {
        self.distribution.iter().filter(|(&w, _)| w > 0).map(|(&w, &a)| (w, a)).collect()
    }

    pub fn weight_count(&self) -> usize {
        self.distribution.keys().filter(|&&w| w > 0).count()
    }

    pub fn total(&self) -> u64 {
        self.distribution.values().sum()
    }

    /// `(n, k, d)` in the usual bracket notation.
    pub fn params(&self) -> String {
        match self.d_min {
            Some(d) => format!("[{}, {}, {}]", self.n, self.k, d),
            None => format!("[{}, {}]", self.n, self.k),
        }
    }

    /// Comma-separated `weight,count` lines for nonzero weights.
    pub fn to_csv(&self) -> String {
        self.nonzero_rows().iter().map(|(w, a)| format!("{w},{a}\n")).collect()
    }
}

/// Weights by direct intersection counting:
/// `wt(c_x) = |D ∩ { y : Tr(xy) = 1 }|` for each `x`.
pub fn code_from_defining_set(field: &FieldSpec, d: &DefiningSet) -> Result<CodeSummary> {
    if d.is_empty() {
        return Err(Error::EmptySet);
    }
    assert_eq!(field.m(), d.m());
    let q = field.order();
    let words = q.div_ceil(64);
    let weights: Vec<u64> = match field.trace_one_rows() {
        Some(rows) => rows.par_chunks(words).map(|row| d.bits.and_count(row)).collect(),
        None => (0..q)
            .into_par_iter()
            .map_init(
                || vec![0u64; words],
                |row, x| {
                    fill_trace_one_row(field, x as Elem, row);
                    d.bits.and_count(row)
                },
            )
            .collect(),
    };
    let mut counts = BTreeMap::new();
    for w in weights {
        *counts.entry(w).or_insert(0) += 1;
    }
    Ok(CodeSummary::from_weight_counts(field.m(), d.len() as u64, counts))
}

/// Weights from the Walsh spectrum of the indicator `f` of the support.
pub fn weight_dist_via_walsh(field: &FieldSpec, tt: &TruthTable) -> Result<CodeSummary> {
    let n_f = tt.n_f();
    if n_f == 0 {
        return Err(Error::EmptySet);
    }
    let ws = walsh_transform(field, tt);
    let mut counts = BTreeMap::from([(0u64, 1u64)]);
    for &v in &ws.values()[1..] {
        let num = 2 * n_f as i64 + v as i64;
        debug_assert!(num >= 0 && num % 4 == 0);
        *counts.entry((num / 4) as u64).or_insert(0) += 1;
    }
    Ok(CodeSummary::from_weight_counts(field.m(), n_f, counts))
}

/// Smallest number `t <= t_max` of elements of `D` that sum to zero, i.e.
/// the dual code's minimum distance if it is at most `t_max`; `None` otherwise.
pub fn dual_distance_probe(d: &DefiningSet, t_max: u32) -> Option<u32> {
    assert!(t_max <= 4, "probe supports t_max <= 4");
    if t_max >= 1 && d.contains(0) {
        return Some(1);
    }
    let el = d.elements();
    if t_max >= 3 {
        for (i, &a) in el.iter().enumerate() {
            for &b in &el[i + 1..] {
                if d.contains(a ^ b) {
                    return Some(3);
                }
            }
        }
    }
    if t_max >= 4 {
        let mut seen = BitSet::new(d.bits.len());
        for (i, &a) in el.iter().enumerate() {
            for &b in &el[i + 1..] {
                let s = (a ^ b) as usize;
                if seen.contains(s) {
                    return Some(4);
                }
                seen.insert(s);
            }
        }
    }
    None
}

/// The code `C ∪ (C + 1)`. If the all-one word is already in `C` the code
/// is unchanged, otherwise the dimension grows by one and
/// `Ā_w = A_w + A_{n-w}`.
pub fn expand_complement(summary: &CodeSummary, contains_allone: bool) -> CodeSummary {
    if contains_allone {
        return summary.clone();
    }
    let n = summary.n;
    let mut distribution = BTreeMap::new();
    for (&w, &a) in &summary.distribution {
        *distribution.entry(w).or_insert(0) += a;
        *distribution.entry(n - w).or_insert(0) += a;
    }
    let d_min = distribution.keys().copied().find(|&w| w > 0);
    CodeSummary { n, k: summary.k + 1, distribution, d_min, e: summary.e }
}

/// [`expand_complement`] with the all-one test read off the distribution.
pub fn expand_complement_auto(summary: &CodeSummary) -> CodeSummary {
    let has = summary.distribution.get(&summary.n).is_some_and(|&a| a > 0);
    expand_complement(summary, has)
}

/// Exact row-by-row comparison. Returns `(weight, expected, actual)` for every
/// disagreeing weight, and a length/dimension note when those differ.
pub fn diff_against(summary: &CodeSummary, table: &ExpectedTable) -> Vec<String> {
    let mut out = Vec::new();
    if let Some(n) = table.n {
        if n != summary.n {
            out.push(format!("length: expected {n}, got {}", summary.n));
        }
    }
    if let Some(k) = table.k {
        if k != summary.k {
            out.push(format!("dimension: expected {k}, got {}", summary.k));
        }
    }
    let weights: std::collections::BTreeSet<u64> =
        summary.distribution.keys().chain(table.rows.keys()).copied().collect();
    for w in weights {
        let e = table.rows.get(&w).copied().unwrap_or(0);
        let a = summary.distribution.get(&w).copied().unwrap_or(0);
        if e != a {
            out.push(format!("A_{w}: expected {e}, got {a}"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singleton_set() {
        let f = FieldSpec::new(3).unwrap();
        let d = DefiningSet::from_elements(&f, [1]).unwrap();
        let c = code_from_defining_set(&f, &d).unwrap();
        assert_eq!((c.n, c.k, c.d_min), (1, 1, Some(1)));
        assert_eq!(c.nonzero_rows(), vec![(1, 1)]);
    }

    #[test]
    fn duplicates_rejected() {
        let f = FieldSpec::new(3).unwrap();
        assert!(DefiningSet::from_elements(&f, [1, 2, 1]).is_err());
        assert!(matches!(code_from_defining_set(&f, &DefiningSet::collect(&f, [])), Err(Error::EmptySet)));
    }

    #[test]
    fn gold_support_code_m5() {
        let f = FieldSpec::new(5).unwrap();
        let tt = TruthTable::from_trace_of(&f, |x| f.pow(x, 3));
        let a = code_from_defining_set(&f, &tt.support()).unwrap();
        let b = weight_dist_via_walsh(&f, &tt).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.params(), "[16, 5, 6]");
        assert_eq!(a.nonzero_rows(), vec![(6, 6), (8, 15), (10, 10)]);
        assert_eq!(a.to_csv(), "6,6\n8,15\n10,10\n");
    }

    #[test]
    fn hyperplane_coset_code() {
        let f = FieldSpec::new(4).unwrap();
        let d = DefiningSet::collect(&f, f.elements().filter(|&y| f.trace(y) == 1));
        let c = code_from_defining_set(&f, &d).unwrap();
        // Tr(xy) restricted to a coset of the trace hyperplane: x = 1 gives
        // the all-one word, so both weights 4 and 8 appear.
        assert_eq!(c.n, 8);
        assert_eq!(c.k, 4);
        assert_eq!(c.nonzero_rows(), vec![(4, 14), (8, 1)]);
        assert_eq!(c, weight_dist_via_walsh(&f, &TruthTable::indicator(&f, &d)).unwrap());
    }

    #[test]
    fn probe_cases() {
        let f = FieldSpec::new(4).unwrap();
        let with_zero = DefiningSet::from_elements(&f, [0, 3]).unwrap();
        assert_eq!(dual_distance_probe(&with_zero, 4), Some(1));
        let dep = DefiningSet::from_elements(&f, [1, 6, 7]).unwrap();
        assert_eq!(dual_distance_probe(&dep, 4), Some(3));
        let four = DefiningSet::from_elements(&f, [1, 2, 4, 8, 15]).unwrap();
        assert_eq!(dual_distance_probe(&four, 4), None);
        let basis_sum = DefiningSet::from_elements(&f, [1, 2, 4, 7]).unwrap();
        assert_eq!(dual_distance_probe(&basis_sum, 4), Some(4));
        assert_eq!(dual_distance_probe(&basis_sum, 3), None);
    }

    #[test]
    fn complement_expansion() {
        let f = FieldSpec::new(5).unwrap();
        let tt = TruthTable::from_trace_of(&f, |x| f.pow(x, 3));
        let c = code_from_defining_set(&f, &tt.support()).unwrap();
        let e = expand_complement_auto(&c);
        assert_eq!(e.params(), "[16, 6, 6]");
        assert_eq!(e.total(), 64);
        assert_eq!(expand_complement_auto(&e), e);
    }
}

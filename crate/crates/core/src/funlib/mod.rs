//! Function catalog: explicit polynomials, Dickson polynomials, and every
//! named family of maps on GF(2^m) used by the construction, plus images,
//! preimage profiles and compositional inverses.

pub mod dickson;
pub mod family;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::codes::DefiningSet;
use crate::error::{Error, Result};
use crate::gf2m::{Elem, FieldSpec};

pub use dickson::{dickson, dickson_eval};
pub use family::{instantiate, Family};

/// `Σ c_i x^{e_i}` with the convention that `x^e` for `e > 0` vanishes at 0.
///
/// Positive exponents are normalised into `[1, 2^m - 1]`, which keeps the
/// function unchanged on the whole field; equal exponents are merged and
/// zero coefficients dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivariatePoly {
    terms: Vec<(u128, Elem)>,
}

impl UnivariatePoly {
    pub fn new(field: &FieldSpec, terms: impl IntoIterator<Item = (u128, Elem)>) -> Self {
        let n = field.mult_order() as u128;
        let mut merged: BTreeMap<u128, Elem> = BTreeMap::new();
        for (e, c) in terms {
            let e = if e == 0 { 0 } else { (e - 1) % n + 1 };
            *merged.entry(e).or_insert(0) ^= c;
        }
        Self { terms: merged.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    pub fn terms(&self) -> &[(u128, Elem)] {
        &self.terms
    }

    pub fn eval(&self, field: &FieldSpec, x: Elem) -> Elem {
        self.terms.iter().fold(0, |acc, &(e, c)| {
            let t = if e == 0 { 1 } else { field.pow(x, e as i128) };
            acc ^ field.mul(c, t)
        })
    }
}

impl fmt::Display for UnivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|&(e, c)| match (c, e) {
                (c, 0) => format!("{c:#x}"),
                (1, e) => format!("x^{e}"),
                (c, e) => format!("{c:#x}*x^{e}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

type EvalFn = dyn Fn(&FieldSpec, Elem) -> Elem + Send + Sync;

/// A total map on a fixed GF(2^m).
///
/// Boolean functions are represented as maps into `{0, 1}` and flagged, so
/// that callers can tell `f` apart from `Tr(g)`.
#[derive(Clone)]
pub struct Func {
    name: String,
    m: u32,
    boolean: bool,
    eval: Arc<EvalFn>,
}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Func({} on GF(2^{}))", self.name, self.m)
    }
}

impl Func {
    pub fn new(name: impl Into<String>, m: u32, eval: impl Fn(&FieldSpec, Elem) -> Elem + Send + Sync + 'static) -> Self {
        Self { name: name.into(), m, boolean: false, eval: Arc::new(eval) }
    }

    pub fn boolean(name: impl Into<String>, m: u32, eval: impl Fn(&FieldSpec, Elem) -> bool + Send + Sync + 'static) -> Self {
        Self { name: name.into(), m, boolean: true, eval: Arc::new(move |f, x| eval(f, x) as Elem) }
    }

    /// Tabulated map; evaluation is a lookup.
    pub fn from_table(name: impl Into<String>, m: u32, table: Vec<Elem>) -> Self {
        assert_eq!(table.len(), 1usize << m);
        let table = Arc::new(table);
        Self::new(name, m, move |_, x| table[x as usize])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    #[inline]
    pub fn eval(&self, field: &FieldSpec, x: Elem) -> Elem {
        debug_assert_eq!(field.m(), self.m);
        (self.eval)(field, x)
    }

    pub fn tabulate(&self, field: &FieldSpec) -> Vec<Elem> {
        assert_eq!(field.m(), self.m, "{} was built for GF(2^{})", self.name, self.m);
        field.elements().into_par_iter().map(|x| self.eval(field, x)).collect()
    }

    /// The Boolean function attached to this entry: the function itself when
    /// it is Boolean, and `Tr(g)` otherwise.
    pub fn truth_table(&self, field: &FieldSpec) -> crate::boolfun::TruthTable {
        let values = self.tabulate(field);
        if self.boolean {
            crate::boolfun::TruthTable::from_evaluator(field, |x| values[x as usize] == 1)
        } else {
            crate::boolfun::TruthTable::from_trace_table(field, &values)
        }
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

/// `x -> F(x) + F(x+1) + 1`.
pub fn apn_shift(f: &Func) -> Func {
    let inner = f.clone();
    Func::new(format!("apn-shift({})", f.name), f.m, move |fs, x| inner.eval(fs, x) ^ inner.eval(fs, x ^ 1) ^ 1)
}

/// `D(f) = { f(x) }`.
pub fn image_set(field: &FieldSpec, f: &Func) -> DefiningSet {
    DefiningSet::collect(field, f.tabulate(field))
}

/// `D(f)* = D(f) \ {0}`.
pub fn image_set_star(field: &FieldSpec, f: &Func) -> DefiningSet {
    image_set(field, f).without_zero()
}

/// `{ f(x(x+1)) }`.
pub fn image_of_xx1(field: &FieldSpec, f: &Func) -> DefiningSet {
    DefiningSet::collect(field, field.elements().map(|x| f.eval(field, field.mul(x, x ^ 1))))
}

/// Preimage-size multiset `size -> number of image points with that many preimages`.
pub fn e_to_1_profile(field: &FieldSpec, f: &Func) -> BTreeMap<u64, u64> {
    profile_of_table(&f.tabulate(field))
}

pub fn profile_of_table(values: &[Elem]) -> BTreeMap<u64, u64> {
    let mut hits = vec![0u32; values.len()];
    for &v in values {
        hits[v as usize] += 1;
    }
    let mut out = BTreeMap::new();
    for h in hits.into_iter().filter(|&h| h > 0) {
        *out.entry(h as u64).or_insert(0) += 1;
    }
    out
}

pub fn is_e_to_1(field: &FieldSpec, f: &Func, e: u64) -> bool {
    e_to_1_profile(field, f).keys().all(|&k| k == e)
}

/// Compositional inverse by table inversion.
pub fn compositional_inverse(field: &FieldSpec, f: &Func) -> Result<Func> {
    let values = f.tabulate(field);
    let mut inv = vec![Elem::MAX; values.len()];
    for (x, &y) in values.iter().enumerate() {
        if inv[y as usize] != Elem::MAX {
            return Err(Error::NotPermutation);
        }
        inv[y as usize] = x as Elem;
    }
    Ok(Func::from_table(format!("inverse({})", f.name), f.m, inv))
}

/// `g(f(x)) = x` for every `x`.
pub fn verify_comp_inverse(field: &FieldSpec, f: &Func, g: &Func) -> Result<bool> {
    let fv = f.tabulate(field);
    if profile_of_table(&fv).keys().any(|&k| k != 1) {
        return Err(Error::NotPermutation);
    }
    let gv = g.tabulate(field);
    Ok(fv.iter().enumerate().all(|(x, &y)| gv[y as usize] == x as Elem))
}

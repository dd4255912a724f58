//! Shared plumbing for registry rows: parameter access, seeded sampling, and
//! the code pipelines with both weight routes.

use std::collections::BTreeMap;
use std::fmt::Debug;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use super::Params;
use crate::boolfun::TruthTable;
use crate::codes::{code_from_defining_set, diff_against, weight_dist_via_walsh, CodeSummary, DefiningSet, ExpectedTable};
use crate::error::{Error, Result};
use crate::funlib::{image_set, instantiate, Family, Func};
use crate::gf2m::{Elem, FieldSpec};
use crate::opoly::{is_o_polynomial, Mode, OPolyReport};

/// What a row has found so far. Any entry in `diffs` makes the row a mismatch.
#[derive(Default, Debug)]
pub struct Outcome {
    pub code: Option<CodeSummary>,
    pub expected: Option<ExpectedTable>,
    pub diffs: Vec<String>,
    pub observed: BTreeMap<String, Value>,
    pub notes: Vec<String>,
    /// Nothing was asserted on this row.
    pub report_only: bool,
}

impl Outcome {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        if !ok {
            self.diffs.push(what());
        }
        ok
    }

    pub fn eq<T: PartialEq + Debug>(&mut self, what: &str, expected: T, actual: T) -> bool {
        let ok = expected == actual;
        self.check(ok, || format!("{what}: expected {expected:?}, got {actual:?}"))
    }

    pub fn observe(&mut self, key: &str, v: impl Serialize) {
        self.observed.insert(key.to_string(), serde_json::to_value(v).expect("serializable"));
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Compare a code with a closed-form table row by row and keep both.
    pub fn table(&mut self, code: &CodeSummary, table: ExpectedTable) -> bool {
        let d = diff_against(code, &table);
        let ok = d.is_empty();
        self.diffs.extend(d);
        self.code = Some(code.clone());
        self.expected = Some(table);
        ok
    }

    pub fn keep(&mut self, code: &CodeSummary) {
        self.code = Some(code.clone());
    }

    /// Length, dimension and number of distinct nonzero weights.
    pub fn shape(&mut self, code: &CodeSummary, n: Option<u64>, k: Option<u32>, weights: Option<&[usize]>) -> bool {
        self.keep(code);
        let mut ok = true;
        if let Some(n) = n {
            ok &= self.eq("length", n, code.n);
        }
        if let Some(k) = k {
            ok &= self.eq("dimension", k, code.k);
        }
        if let Some(w) = weights {
            let c = code.weight_count();
            ok &= self.check(w.contains(&c), || format!("distinct nonzero weights: expected one of {w:?}, got {c}"));
        }
        self.observe("weights", code.weight_count());
        ok
    }
}

pub fn get<'a>(p: &'a Params, key: &str) -> Option<&'a str> {
    p.get(key).map(String::as_str)
}

pub fn int(p: &Params, key: &str, default: u64) -> Result<u64> {
    match get(p, key) {
        None => Ok(default),
        Some(v) => {
            let r = match v.strip_prefix("0x") {
                Some(h) => u64::from_str_radix(h, 16),
                None => v.parse(),
            };
            r.map_err(|_| Error::Parse(format!("parameter {key}={v}")))
        }
    }
}

pub fn elem(field: &FieldSpec, p: &Params, key: &str, default: Elem) -> Result<Elem> {
    let v = int(p, key, default as u64)?;
    field.elem(v)
}

pub fn text<'a>(p: &'a Params, key: &str, default: &'a str) -> &'a str {
    get(p, key).unwrap_or(default)
}

pub fn hex(e: Elem) -> String {
    format!("{e:#x}")
}

pub fn params(pairs: &[(&str, String)]) -> Params {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// FNV-1a; a stable seed per claim id.
fn stable_hash(s: &str) -> u64 {
    s.bytes().fold(0xcbf29ce484222325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100000001b3))
}

pub fn rng(tag: &str, m: u32) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(stable_hash(tag) ^ ((m as u64) << 56))
}

/// Every element when there are at most `n` of them, otherwise `n` distinct
/// seeded draws in increasing order. `nonzero` excludes 0.
pub fn sample(tag: &str, m: u32, n: usize, nonzero: bool) -> Vec<Elem> {
    let lo = nonzero as u64;
    let size = (1u64 << m) - lo;
    if size as usize <= n {
        return (lo..1u64 << m).map(|x| x as Elem).collect();
    }
    let mut r = rng(tag, m);
    let mut picked = std::collections::BTreeSet::new();
    while picked.len() < n {
        picked.insert(r.gen_range(lo..1u64 << m) as Elem);
    }
    picked.into_iter().collect()
}

pub fn family(field: &FieldSpec, s: &str) -> Result<Func> {
    let fam: Family = s.parse()?;
    instantiate(field, &fam)
}

/// Code of a defining set by both routes. A disagreement is recorded on the
/// row, and the direct count is returned.
pub fn code_of(field: &FieldSpec, d: &DefiningSet, out: &mut Outcome) -> Result<CodeSummary> {
    let direct = code_from_defining_set(field, d)?;
    let walsh = weight_dist_via_walsh(field, &TruthTable::indicator(field, d))?;
    out.check(direct == walsh, || {
        format!("weight routes disagree: direct {:?}, walsh {:?}", direct.nonzero_rows(), walsh.nonzero_rows())
    });
    Ok(direct)
}

pub fn support_code(field: &FieldSpec, tt: &TruthTable, out: &mut Outcome) -> Result<CodeSummary> {
    out.observe("n_f", tt.n_f());
    code_of(field, &tt.support(), out)
}

/// Code of the image `D(f)`, or of `D(f)*` when `star` is set.
pub fn image_code(field: &FieldSpec, f: &Func, star: bool, out: &mut Outcome) -> Result<CodeSummary> {
    let mut d = image_set(field, f);
    if star {
        d = d.without_zero();
    }
    code_of(field, &d, out)
}

/// `f(x) + u x`.
pub fn plus_ux(f: &Func, u: Elem) -> Func {
    let g = f.clone();
    Func::new(format!("{} + {u:#x}*x", f.name()), f.m(), move |fs, x| g.eval(fs, x) ^ fs.mul(u, x))
}

/// O-polynomial check in both modes. Records a diff when the two tests
/// disagree and returns the report.
pub fn opoly_both(field: &FieldSpec, f: &Func, out: &mut Outcome) -> OPolyReport {
    let r = is_o_polynomial(field, f, Mode::Both);
    out.check(!r.equivalence_violated(), || {
        format!("definition and 2-to-1 tests disagree on {}: {:?} vs {:?}", f.name(), r.definition_test, r.two_to_one_test)
    });
    r
}

/// `f` and `g` agree everywhere; otherwise the first disagreement.
pub fn same_map(field: &FieldSpec, f: &Func, g: &Func) -> Option<(Elem, Elem, Elem)> {
    let (a, b) = (f.tabulate(field), g.tabulate(field));
    a.iter().zip(&b).enumerate().find(|(_, (x, y))| x != y).map(|(x, (p, q))| (x as Elem, *p, *q))
}

pub fn expect_same(field: &FieldSpec, what: &str, f: &Func, g: &Func, out: &mut Outcome) -> bool {
    match same_map(field, f, g) {
        None => true,
        Some((x, p, q)) => {
            out.diffs.push(format!("{what}: differs at x={x:#x} ({p:#x} vs {q:#x})"));
            false
        }
    }
}

pub fn inapplicable(what: &str, field: &FieldSpec, why: &str) -> Error {
    Error::Inapplicable { family: what.to_string(), reason: format!("{why} at m={}", field.m()) }
}

pub fn need(cond: bool, what: &str, field: &FieldSpec, why: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(inapplicable(what, field, why))
    }
}

/// `x^e` for any integer `e`, reduced into `[1, 2^m - 1]` so that the
/// monomial vanishes at 0.
pub fn signed_monomial(field: &FieldSpec, e: i128, c: Elem) -> Func {
    let n = field.mult_order() as i128;
    let r = (e - 1).rem_euclid(n) + 1;
    Func::new(format!("{c:#x}*x^{e}"), field.m(), move |fs, x| fs.mul(c, fs.pow(x, r)))
}

pub fn sum_maps(name: &str, parts: Vec<Func>) -> Func {
    let m = parts[0].m();
    Func::new(name, m, move |fs, x| parts.iter().fold(0, |acc, f| acc ^ f.eval(fs, x)))
}

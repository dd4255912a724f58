//! Rows for codes built from the support of a Boolean function.

use std::collections::BTreeMap;

use rand::Rng;

use super::super::support::*;
use super::super::Params;
use crate::boolfun::{classify, is_almost_bent, quad_rank, walsh_transform, SpectrumClass, TruthTable};
use crate::codes::{code_from_defining_set, tables, DefiningSet, ExpectedTable};
use crate::diffsets::{bent_graph_rds, is_additive_difference_set, is_relative_difference_set};
use crate::error::Result;
use crate::funlib::family::power_exponent;
use crate::funlib::{image_set, Func};
use crate::gf2m::{gcd, FieldSpec};

fn seeds(n: u64) -> Vec<Params> {
    (0..n).map(|s| params(&[("seed", s.to_string())])).collect()
}

fn seed_rng(tag: &str, field: &FieldSpec, p: &Params) -> Result<rand_chacha::ChaCha8Rng> {
    let seed = int(p, "seed", 0)?;
    Ok(rng(&format!("{tag}/{seed}"), field.m()))
}

/// The multiset `{(2 n_f + f̂(w))/4 : w != 0} ∪ {0}` folded by the
/// multiplicity `e` of 0, as the general support theorem prescribes.
fn predicted_by_spectrum(field: &FieldSpec, tt: &TruthTable, out: &mut Outcome) -> Option<ExpectedTable> {
    let ws = walsh_transform(field, tt);
    let n_f = tt.n_f() as i64;
    let mut multiset: BTreeMap<u64, u64> = BTreeMap::from([(0, 1)]);
    for (w, &v) in ws.values().iter().enumerate().skip(1) {
        let num = 2 * n_f + v as i64;
        if !out.check(num >= 0 && num % 4 == 0, || format!("(2n_f + fhat({w:#x}))/4 = {num}/4 is not a nonnegative integer")) {
            return None;
        }
        *multiset.entry((num / 4) as u64).or_insert(0) += 1;
    }
    let e = multiset[&0];
    if !out.check(e.is_power_of_two(), || format!("multiplicity of 0 is {e}, not a power of two")) {
        return None;
    }
    let mut rows = BTreeMap::new();
    for (w, c) in multiset {
        if !out.check(c % e == 0, || format!("multiplicity {c} of weight {w} is not divisible by e = {e}")) {
            return None;
        }
        rows.insert(w, c / e);
    }
    out.observe("e", e);
    Some(ExpectedTable {
        source: "thm-BooleanCodesG".into(),
        params: format!("m={}, n_f={n_f}, e={e}", field.m()),
        n: Some(n_f as u64),
        k: Some(field.m() - e.trailing_zeros()),
        rows,
        note: None,
    })
}

pub fn boolean_codes_instances(_m: u32) -> Vec<Params> {
    seeds(4)
}

/// Random `f` whose support meets every affine hyperplane complement.
pub fn boolean_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let mut r = seed_rng("thm-BooleanCodes", field, p)?;
    let bits: Vec<bool> = field.elements().map(|_| r.gen()).collect();
    let tt = TruthTable::from_evaluator(field, |x| bits[x as usize]);
    need(tt.n_f() > 0, "thm-BooleanCodes", field, "empty support")?;
    let ws = walsh_transform(field, &tt);
    let n_f = tt.n_f() as i64;
    let bad = (1..field.order()).find(|&w| 2 * n_f + ws.values()[w] as i64 == 0);
    need(bad.is_none(), "thm-BooleanCodes", field, "2 n_f + fhat(w) vanishes for some w != 0")?;
    let Some(mut table) = predicted_by_spectrum(field, &tt, out) else { return Ok(()) };
    table.source = "thm-BooleanCodes".into();
    out.eq("dimension from hypothesis", Some(field.m()), table.k);
    let code = code_from_defining_set(field, &tt.support())?;
    out.table(&code, table);
    Ok(())
}

/// Random `f` supported inside a random proper subspace, so that `e > 1`.
pub fn boolean_codes_g(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m >= 2, "thm-BooleanCodesG", field, "need m >= 2")?;
    let mut r = seed_rng("thm-BooleanCodesG", field, p)?;
    let dim = r.gen_range(1..m);
    let basis: Vec<u32> = (0..dim).map(|_| r.gen_range(1..field.order() as u32)).collect();
    let span: Vec<u32> = (0..1u32 << dim)
        .map(|mask| basis.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).fold(0, |acc, (_, &b)| acc ^ b))
        .collect();
    let mut chosen: Vec<u32> = span.iter().copied().filter(|_| r.gen()).collect();
    if chosen.is_empty() {
        chosen.push(span[span.len() - 1]);
    }
    let d = DefiningSet::collect(field, chosen);
    out.observe("subspace_dim_bound", dim);
    let tt = TruthTable::indicator(field, &d);
    let Some(table) = predicted_by_spectrum(field, &tt, out) else { return Ok(()) };
    let code = code_from_defining_set(field, &d)?;
    out.table(&code, table);
    Ok(())
}

fn cube_coefficients(m: u32, n: usize) -> Vec<Params> {
    if !m.is_multiple_of(2) {
        return Vec::new();
    }
    sample("tr-ax3", m, n, true).into_iter().map(|a| params(&[("a", hex(a))])).collect()
}

fn tr_ax3(field: &FieldSpec, p: &Params) -> Result<TruthTable> {
    let a = elem(field, p, "a", 1)?;
    Ok(TruthTable::from_trace_of(field, |x| field.mul(a, field.pow(x, 3))))
}

pub fn bent_ds_instances(m: u32) -> Vec<Params> {
    cube_coefficients(m, 8)
}

/// Bent exactly when the support is a difference set with Menon parameters.
pub fn bent_ds(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2), "bent-ds", field, "m must be even")?;
    let tt = tr_ax3(field, p)?;
    let bent = classify(&walsh_transform(field, &tt), m) == SpectrumClass::Bent;
    let ds = is_additive_difference_set(field, &tt.support());
    let (big, half) = (1u64 << (m - 1), 1u64 << ((m - 2) / 2));
    let (quarter, n) = (1u64 << m >> 2, tt.n_f());
    let menon = ds.verdict
        && ((n == big + half && ds.params[2] == quarter + half) || (half <= big && n == big - half && ds.params[2] + half == quarter));
    out.observe("bent", bent);
    out.observe("difference_set", &ds.params);
    out.check(bent == menon, || format!("bent = {bent} but Menon difference set = {menon}"));
    Ok(())
}

pub fn bent_codes_instances(m: u32) -> Vec<Params> {
    cube_coefficients(m, if m <= 6 { usize::MAX } else { 16 })
}

/// Two-weight table holds exactly for bent `f`.
pub fn bent_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2) && m >= 4, "thm-bentcodes", field, "m must be even and at least 4")?;
    let tt = tr_ax3(field, p)?;
    need(!tt.get(0), "thm-bentcodes", field, "need f(0) = 0")?;
    let bent = classify(&walsh_transform(field, &tt), m) == SpectrumClass::Bent;
    let code = support_code(field, &tt, out)?;
    let n_f = tt.n_f();
    let table = tables::bent(m, n_f).ok();
    let lowest = (n_f as i64 - (1i64 << ((m - 2) / 2))) / 2;
    let table_ok = table.as_ref().is_some_and(|t| crate::codes::diff_against(&code, t).is_empty())
        && code.d_min == Some(lowest as u64);
    out.observe("bent", bent);
    out.observe("table_matches", table_ok);
    out.keep(&code);
    out.expected = table;
    out.check(bent == table_ok, || format!("bent = {bent} but table match = {table_ok}"));
    Ok(())
}

pub fn part1222_instances(m: u32) -> Vec<Params> {
    cube_coefficients(m, 6)
}

pub fn part1222(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    need(field.m().is_multiple_of(2), "thm-part1222", field, "no difference set of this kind for odd m")?;
    let tt = tr_ax3(field, p)?;
    let d = tt.support();
    need(!d.is_empty(), "thm-part1222", field, "empty support")?;
    let ds = is_additive_difference_set(field, &d);
    need(ds.verdict, "thm-part1222", field, "support is not a difference set")?;
    let code = code_of(field, &d, out)?;
    match tables::difference_set_code(field.m(), ds.params[1], ds.params[2]) {
        Ok(t) => {
            out.table(&code, t);
        }
        Err(e) => out.diffs.push(format!("table: {e}")),
    }
    Ok(())
}

const SEMIBENT_CANDIDATES: &[&str] = &["gold:h=1", "power:d=3,c=0x2", "kasami:h=2", "welch", "inverse", "power:d=7"];

pub fn semibent_instances(m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        return Vec::new();
    }
    SEMIBENT_CANDIDATES.iter().map(|s| params(&[("fn", s.to_string())])).collect()
}

/// Three-weight table holds exactly for semibent `f`.
pub fn semibent_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 2 == 1, "thm-semibentcodes", field, "m must be odd")?;
    let g = family(field, text(p, "fn", "gold:h=1"))?;
    let tt = g.truth_table(field);
    need(!tt.get(0), "thm-semibentcodes", field, "need f(0) = 0")?;
    need(tt.n_f() > 0, "thm-semibentcodes", field, "empty support")?;
    let semibent = classify(&walsh_transform(field, &tt), m) == SpectrumClass::Semibent;
    let code = support_code(field, &tt, out)?;
    let n_f = tt.n_f();
    let table = tables::semibent(m, n_f).ok();
    let lowest = (n_f as i64 - (1i64 << ((m - 1) / 2))) / 2;
    let table_ok = table.as_ref().is_some_and(|t| crate::codes::diff_against(&code, t).is_empty())
        && code.d_min == Some(lowest.max(0) as u64);
    out.observe("semibent", semibent);
    out.observe("table_matches", table_ok);
    out.keep(&code);
    out.expected = table;
    out.check(semibent == table_ok, || format!("semibent = {semibent} but table match = {table_ok}"));
    Ok(())
}

/// The almost bent monomials of the list, in list order, with their conditions.
pub const AB_ITEMS: &[&str] = &["gold:h=1", "gold:h=2", "gold:h=3", "kasami:h=2", "kasami:h=3", "welch", "niho-a", "niho-b"];

pub fn ab_instances(m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        return Vec::new();
    }
    AB_ITEMS.iter().map(|s| params(&[("fn", s.to_string())])).collect()
}

/// Build an item of the almost bent list, enforcing its side conditions.
fn ab_item(field: &FieldSpec, p: &Params, tag: &str) -> Result<(Func, Vec<u32>)> {
    let s = text(p, "fn", "gold:h=1");
    let f = family(field, s)?;
    if let Some(h) = s.strip_prefix("gold:h=").or_else(|| s.strip_prefix("kasami:h=")) {
        let h: u64 = h.parse().unwrap_or(0);
        need(gcd(h, field.m() as u64) == 1, tag, field, "need gcd(m, h) = 1")?;
        if s.starts_with("kasami") {
            need(h >= 2, tag, field, "need h >= 2")?;
        }
    }
    let values = f.tabulate(field);
    Ok((f, values))
}

fn lemma_size(m: u32, lambda10: i64) -> Option<u64> {
    let (half, r, s) = (1i64 << (m - 1), 1i64 << ((m - 1) / 2), 1i64 << m.div_ceil(2));
    match lambda10 {
        0 => Some(half as u64),
        v if v == s => Some((half - r) as u64),
        v if v == -s => Some((half + r) as u64),
        _ => None,
    }
}

pub fn absize(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    need(field.m() % 2 == 1, "lem-absize", field, "m must be odd")?;
    let (f, values) = ab_item(field, p, "lem-absize")?;
    need(is_almost_bent(field, &values), "lem-absize", field, "not almost bent")?;
    let tt = f.truth_table(field);
    let lambda10 = walsh_transform(field, &tt).at(0);
    out.observe("lambda_1_0", lambda10);
    out.eq("n_f", lemma_size(field.m(), lambda10), Some(tt.n_f()));
    Ok(())
}

pub fn ab_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 2 == 1, "thm-abcodes", field, "m must be odd")?;
    let (f, values) = ab_item(field, p, "thm-abcodes")?;
    need(is_almost_bent(field, &values), "thm-abcodes", field, "not almost bent")?;
    need(field.trace(values[0]) == 0, "thm-abcodes", field, "need Tr(g(0)) = 0")?;
    let tt = f.truth_table(field);
    let Some(n_f) = lemma_size(m, walsh_transform(field, &tt).at(0)) else {
        out.diffs.push("lambda_g(1,0) outside {0, +-2^((m+1)/2)}".into());
        return Ok(());
    };
    let code = support_code(field, &tt, out)?;
    let t = tables::semibent(m, n_f)?;
    out.table(&code, t);
    let lowest = (n_f - (1u64 << ((m - 1) / 2))) / 2;
    out.eq("minimum distance", Some(lowest), code.d_min);
    Ok(())
}

/// The list of monomials and the three-weight table the text attaches to it.
pub fn ab_list(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 2 == 1 && m >= 3, "abcodes", field, "m must be odd and at least 3")?;
    let (f, values) = ab_item(field, p, "abcodes")?;
    let ab = is_almost_bent(field, &values);
    out.observe("almost_bent", ab);
    out.eq("almost bent", true, ab);
    let perm = crate::funlib::profile_of_table(&values).keys().all(|&k| k == 1);
    out.eq("permutation", true, perm);
    let tt = f.truth_table(field);
    let code = support_code(field, &tt, out)?;
    out.table(&code, tables::hyperoval(m)?);
    Ok(())
}

pub fn qbf_instances(_m: u32) -> Vec<Params> {
    seeds(8)
}

/// Random `Tr(Σ f_i x^{2^i+1})` with the correction vector read from `f̂(0)`.
pub fn qbf_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let mut r = seed_rng("thm-CodeQBFs", field, p)?;
    let coeffs: Vec<u32> = (0..=m / 2).map(|_| r.gen_range(0..field.order() as u32)).collect();
    out.observe("coefficients", coeffs.iter().map(|&c| hex(c)).collect::<Vec<_>>());
    let tt = TruthTable::from_trace_of(field, |x| {
        coeffs.iter().enumerate().fold(0, |acc, (i, &c)| acc ^ field.mul(c, field.mul(field.frobenius(x, i as u32), x)))
    });
    let rank = quad_rank(&tt)?;
    out.observe("rank", rank);
    need(rank > 2, "thm-CodeQBFs", field, "need r_f > 2")?;
    let ws = walsh_transform(field, &tt);
    let (rr, mi) = (rank as i64, m as i64);
    let peak = 1i64 << (mi - rr / 2);
    let mut spectrum = BTreeMap::new();
    for (v, c) in [
        (0, (1i64 << mi) - (1i64 << rr)),
        (peak, (1i64 << (rr - 1)) + (1i64 << ((rr - 2) / 2))),
        (-peak, (1i64 << (rr - 1)) - (1i64 << ((rr - 2) / 2))),
    ] {
        if c > 0 {
            spectrum.insert(v, c as u64);
        }
    }
    out.eq("Walsh spectrum", spectrum, ws.summary());
    let code = support_code(field, &tt, out)?;
    match tables::quadratic(m, rank, ws.at(0)) {
        Ok(t) => {
            out.table(&code, t);
        }
        Err(e) => out.diffs.push(format!("table: {e}")),
    }
    Ok(())
}

pub fn three_weight_instances(m: u32) -> Vec<Params> {
    if !m.is_multiple_of(2) || m < 4 {
        return Vec::new();
    }
    let mut v = Vec::new();
    for item in ["gold", "kasami"] {
        for h in 1..=m / 2 {
            if gcd(h as u64, m as u64) % 2 == 1 {
                v.push(params(&[("fn", format!("{item}:h={h}"))]));
            }
        }
    }
    if m % 4 == 2 {
        v.push(params(&[("fn", "cusick-dobbertin-1".into())]));
        v.push(params(&[("fn", "cusick-dobbertin-2".into())]));
    }
    v
}

pub fn three_weight(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2) && m >= 4, "3wt-thm", field, "m must be even and at least 4")?;
    let s = text(p, "fn", "gold:h=1");
    let fam = s.parse()?;
    let f = crate::funlib::instantiate(field, &fam)?;
    if let Some(d) = power_exponent(field, &fam)? {
        out.observe("gcd_d_2m1", gcd(d as u64, field.mult_order()));
    }
    let tt = f.truth_table(field);
    let class = classify(&walsh_transform(field, &tt), m);
    out.observe("class", class.name());
    out.eq("spectrum class", SpectrumClass::ThreeValued(2).name(), class.name());
    let code = support_code(field, &tt, out)?;
    out.table(&code, tables::three_weight(m, 2)?);
    out.eq("minimum distance", Some((1u64 << (m - 2)) - (1u64 << ((m - 2) / 2))), code.d_min);
    Ok(())
}

/// `(family, m mod 4, spectrum case, length)` for the four-weight bullets with a table.
fn bullet(b: u8) -> (&'static str, u32, u8, bool) {
    match b {
        1 => ("niho4", 0, 1, false),
        2 => ("niho4", 2, 3, true),
        3 => ("niho4b", 0, 2, false),
        4 => ("dobbertin", 0, 1, false),
        5 => ("dobbertin", 2, 3, true),
        6 => ("hr05", 0, 1, false),
        _ => unreachable!(),
    }
}

pub fn four_weight_instances<const B: u8>(m: u32) -> Vec<Params> {
    if !m.is_multiple_of(2) || m < 4 {
        return Vec::new();
    }
    let coprime: Vec<u32> = (1..m).filter(|&h| gcd(h as u64, m as u64) == 1).take(3).collect();
    match B {
        1..=3 => Vec::new(),
        4 | 5 => coprime.iter().map(|h| params(&[("h", h.to_string())])).collect(),
        6 => (1..=m / 4).filter(|&h| (m / 2).is_multiple_of(2 * h)).map(|h| params(&[("h", h.to_string())])).collect(),
        7 => {
            let half = m / 2;
            let mut v = Vec::new();
            for h in (1..half.max(2)).filter(|&h| h.trailing_zeros() < half.trailing_zeros()).take(2) {
                for sign in ["+", "-"] {
                    v.push(params(&[("h", h.to_string()), ("sign", sign.into())]));
                }
            }
            v
        }
        _ => {
            let mut v = Vec::new();
            for l in 1..=2u32 {
                for h in 1..=2u32 {
                    v.push(params(&[("l", l.to_string()), ("h", h.to_string())]));
                }
            }
            v
        }
    }
}

pub fn four_weight<const B: u8>(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let tag = format!("4wt-bullets/{B}");
    need(m.is_multiple_of(2) && m >= 4, &tag, field, "m must be even and at least 4")?;
    if B >= 7 {
        let s = if B == 7 {
            format!("dfhr:h={},sign={}", int(p, "h", 1)?, text(p, "sign", "+"))
        } else {
            format!("hhkzlj:l={},h={}", int(p, "l", 1)?, int(p, "h", 1)?)
        };
        let f = family(field, &s)?;
        let tt = f.truth_table(field);
        out.observe("class", classify(&walsh_transform(field, &tt), m).name());
        let code = support_code(field, &tt, out)?;
        out.shape(&code, None, None, None);
        out.report_only = true;
        return Ok(());
    }
    let (name, residue, case, short) = bullet(B);
    need(m % 4 == residue, &tag, field, &format!("m must be {residue} mod 4"))?;
    let s = if B >= 4 { format!("{name}:h={}", int(p, "h", 1)?) } else { name.to_string() };
    let fam = s.parse()?;
    let f = crate::funlib::instantiate(field, &fam)?;
    let d = power_exponent(field, &fam)?.expect("power family") as u64;
    if short {
        out.eq("gcd(d, 2^m - 1)", 3, gcd(d, field.mult_order()));
    }
    let n_stated = (1u64 << (m - 1)) - if short { 1u64 << (m / 2) } else { 0 };
    let table = tables::four_weight(m, case, (1i64 << m) - 2 * n_stated as i64)?;
    let tt = f.truth_table(field);
    out.observe("class", classify(&walsh_transform(field, &tt), m).name());
    let code = support_code(field, &tt, out)?;
    out.table(&code, table);
    Ok(())
}

fn pick_params(n: u64) -> Vec<Params> {
    (0..n).map(|i| params(&[("pick", i.to_string())])).collect()
}

pub fn helleseth(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2) && m >= 6, "5wt/helleseth", field, "m must be even and at least 6")?;
    let tt = family(field, "helleseth")?.truth_table(field);
    let code = support_code(field, &tt, out)?;
    out.shape(&code, Some(1 << (m - 1)), Some(m), Some(&[5]));
    Ok(())
}

pub fn liyue_instances(m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        pick_params(3)
    } else {
        Vec::new()
    }
}

pub fn liyue(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2), "5wt/liyue", field, "m must be even")?;
    let pick = int(p, "pick", 0)? as usize;
    let a = field.elements().filter(|&a| field.rel_trace(a, 2).is_ok_and(|t| t != 0)).nth(pick);
    let a = a.ok_or_else(|| inapplicable("5wt/liyue", field, "not enough a with Tr_4(a) != 0"))?;
    out.observe("a", hex(a));
    let tt = family(field, &format!("liyue:a={a:#x}"))?.truth_table(field);
    let code = support_code(field, &tt, out)?;
    let n = ((1u64 << (m + 2)) - 4) / 6;
    out.shape(&code, Some(n), Some(m), Some(&[2]));
    Ok(())
}

pub fn caohu_instances(m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        pick_params(2)
    } else {
        Vec::new()
    }
}

pub fn caohu<const B: bool>(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let tag = if B { "5wt/caohu-b" } else { "5wt/caohu-a" };
    need(m.is_multiple_of(2), tag, field, "m must be even")?;
    let pick = int(p, "pick", 0)? as usize;
    let mu = field.elements().filter(|&x| x != 0 && field.in_subfield(x, m / 2)).nth(pick);
    let mu = mu.ok_or_else(|| inapplicable(tag, field, "not enough mu in GF(2^(m/2))*"))?;
    out.observe("mu", hex(mu));
    let s = format!("{}:mu={mu:#x}", if B { "caohu-b" } else { "caohu-a" });
    let tt = family(field, &s)?.truth_table(field);
    let code = support_code(field, &tt, out)?;
    out.shape(&code, None, None, Some(&[5]));
    Ok(())
}

pub fn quetal(field: &FieldSpec, _p: &Params, _out: &mut Outcome) -> Result<()> {
    Err(inapplicable("5wt/quetal", field, "the functions are not specified"))
}

pub fn wdx_instances(m: u32) -> Vec<Params> {
    let mut v = Vec::new();
    for r in (3..=m as u64 + 1).filter(|&r| (2..r).all(|d| r % d != 0)) {
        let mut m_r = 1u32;
        while let Some(rm) = r.checked_pow(m_r) {
            let phi = tables::euler_phi(rm);
            if phi > m as u64 {
                break;
            }
            if phi == m as u64 && rm >= 9 && tables::two_is_primitive_root(rm) {
                v.push(params(&[("r", r.to_string()), ("mr", m_r.to_string())]));
            }
            m_r += 1;
        }
    }
    v
}

pub fn wdx(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    need(p.contains_key("r"), "thm-WDX", field, "no prime r with phi(r^m_r) = m and 2 primitive modulo r^m_r")?;
    let (r, m_r) = (int(p, "r", 3)?, int(p, "mr", 2)? as u32);
    let tt = family(field, &format!("wdx:r={r},mr={m_r}"))?.truth_table(field);
    let code = support_code(field, &tt, out)?;
    out.table(&code, tables::wdx(r, m_r)?);
    Ok(())
}

/// The graph of a bent function on a hyperplane, relative to `{0, v}`.
pub fn rds(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let (d, n_sub) = bent_graph_rds(field)?;
    let rep = is_relative_difference_set(field, &d, &n_sub)?;
    out.observe("params", &rep.params);
    need(rep.verdict, "rds", field, "set is not a relative difference set")?;
    out.eq("character values", Some(true), rep.character_bound);
    let code = code_of(field, &d, out)?;
    out.keep(&code);
    let allowed = tables::relative_difference_set_weights(rep.params[2], rep.params[3], rep.params[1]);
    out.observe("allowed_weights", &allowed);
    let stray: Vec<u64> = code.nonzero_rows().iter().map(|r| r.0).filter(|w| !allowed.contains(w)).collect();
    out.check(stray.is_empty(), || format!("weights {stray:?} outside {allowed:?}"));
    out.check(code.weight_count() <= 4, || format!("{} distinct weights", code.weight_count()));
    Ok(())
}

pub fn image_star_instances(_m: u32) -> Vec<Params> {
    ["gold:h=1", "inverse", "j171", "dds:k", "apn-shift(gold:h=1)"].iter().map(|s| params(&[("fn", s.to_string())])).collect()
}

/// Dropping 0 from an image shortens the code by one and keeps the weights.
pub fn image_star(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let f = family(field, text(p, "fn", "gold:h=1"))?;
    let d = image_set(field, &f);
    need(d.contains(0), "image-star", field, "0 is not in the image")?;
    need(d.len() > 1, "image-star", field, "image is {0}")?;
    let full = code_of(field, &d, out)?;
    let star = code_of(field, &d.without_zero(), out)?;
    out.eq("length drop", full.n - 1, star.n);
    out.eq("distribution", &full.distribution, &star.distribution);
    out.keep(&star);
    Ok(())
}

//! Rows for image codes: APN shifts, trinomial difference sets and the
//! complement expansion.

use super::super::support::*;
use super::super::Params;
use crate::codes::{dual_distance_probe, expand_complement_auto, tables, DefiningSet};
use crate::diffsets::is_multiplicative_difference_set;
use crate::error::Result;
use crate::funlib::{apn_shift, image_of_xx1, image_set, is_e_to_1, Func};
use crate::gf2m::{gcd, FieldSpec};
use crate::opoly::monomial;

fn shifted(field: &FieldSpec, s: &str) -> Result<Func> {
    Ok(apn_shift(&family(field, s)?))
}

fn half_length(m: u32) -> Option<u64> {
    Some(1 << (m - 1))
}

pub fn apn_welch(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 2 == 1 && m >= 5, "apn-welch-conj", field, "stated for odd m >= 5")?;
    let code = image_code(field, &shifted(field, "welch")?, false, out)?;
    let weights: &[usize] = if m <= 7 { &[3] } else { &[5] };
    out.shape(&code, half_length(m), Some(m), Some(weights));
    Ok(())
}

pub fn kasami_h_instances(m: u32) -> Vec<Params> {
    (1..=3u32).filter(|&h| gcd(h as u64, m as u64) == 1).map(|h| params(&[("h", h.to_string())])).collect()
}

pub fn apn_kasami(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m >= 2, "apn-kasami-conj", field, "need m >= 2")?;
    let h = int(p, "h", 1)? as u32;
    need(gcd(h as u64, m as u64) == 1, "apn-kasami-conj", field, "need gcd(h, m) = 1")?;
    let code = image_code(field, &shifted(field, &format!("kasami:h={h}"))?, false, out)?;
    if h == 1 {
        out.table(&code, tables::one_weight("apn-kasami-conj", 1 << (m - 1), m - 1, 1 << (m - 2)));
    } else if m % 2 == 1 {
        if h == 3 && m >= 5 && !m.is_multiple_of(3) {
            out.shape(&code, half_length(m), Some(m), Some(&[3]));
            out.table(&code, tables::hyperoval(m)?);
        } else {
            out.shape(&code, half_length(m), Some(m), Some(&[3, 5]));
        }
    } else {
        out.shape(&code, None, None, None);
        out.report_only = true;
    }
    Ok(())
}

/// `x^d + (x+1)^d` for the Kasami exponent is `2^gcd(h, m)`-to-1.
pub fn hertel(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let h = int(p, "h", 1)? as u32;
    let f = family(field, &format!("kasami:h={h}"))?;
    let g = Func::new("x^d + (x+1)^d", m, move |fs, x| f.eval(fs, x) ^ f.eval(fs, x ^ 1));
    let s = gcd(h as u64, m as u64);
    out.observe("s", s);
    out.observe("m_over_s_odd", (m as u64 / s) % 2 == 1);
    let e = 1u64 << s;
    let ok = is_e_to_1(field, &g, e);
    out.check(ok, || format!("not {e}-to-1: {:?}", crate::funlib::e_to_1_profile(field, &g)));
    Ok(())
}

pub fn hertel_instances(m: u32) -> Vec<Params> {
    (1..=3u32.min(m.max(1))).map(|h| params(&[("h", h.to_string())])).collect()
}

pub fn apn_gold(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m >= 2, "apn-gold-thm", field, "need m >= 2")?;
    let h = int(p, "h", 1)? as u32;
    need(gcd(h as u64, m as u64) == 1, "apn-gold-thm", field, "need gcd(h, m) = 1")?;
    let code = image_code(field, &shifted(field, &format!("gold:h={h}"))?, false, out)?;
    out.table(&code, tables::one_weight("apn-gold-thm", 1 << (m - 1), m - 1, 1 << (m - 2)));
    Ok(())
}

pub fn gold_h_instances(m: u32) -> Vec<Params> {
    (1..m.max(2)).filter(|&h| gcd(h as u64, m as u64) == 1).take(3).map(|h| params(&[("h", h.to_string())])).collect()
}

pub fn apn_inverse(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m >= 3, "apn-comments/inverse", field, "need m >= 3")?;
    let code = image_code(field, &shifted(field, "inverse")?, false, out)?;
    out.shape(&code, half_length(m), Some(m), Some(&(1..=m as usize).collect::<Vec<_>>()));
    Ok(())
}

pub fn apn_niho<const B: bool>(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let code = image_code(field, &shifted(field, if B { "niho-b" } else { "niho-a" })?, false, out)?;
    out.shape(&code, half_length(m), Some(m), None);
    Ok(())
}

fn dds_star(field: &FieldSpec, item: char) -> Result<DefiningSet> {
    need(field.m() % 2 == 1 && field.m() >= 5, "conj-DDSs", field, "stated for odd m >= 5")?;
    let f = family(field, &format!("dds:{item}"))?;
    Ok(image_set(field, &f).without_zero())
}

fn singer(field: &FieldSpec, d: &DefiningSet, params: [u64; 3], out: &mut Outcome) -> Result<()> {
    let r = is_multiplicative_difference_set(field, d)?;
    out.observe("params", &r.params);
    if let Some(c) = &r.counterexample {
        out.observe("counterexample", c);
    }
    out.eq("difference set", true, r.verdict);
    out.eq("(v, k, lambda)", params.to_vec(), r.params);
    Ok(())
}

fn singer_big(m: u32) -> [u64; 3] {
    [(1 << m) - 1, 1 << (m - 1), 1 << (m - 2)]
}

fn singer_small(m: u32) -> [u64; 3] {
    [(1 << m) - 1, (1 << (m - 1)) - 1, (1 << (m - 2)) - 1]
}

pub fn dds<const C: char>(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let d = dds_star(field, C)?;
    singer(field, &d, singer_big(field.m()), out)
}

pub fn dds_code<const C: char>(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let d = dds_star(field, C)?;
    let code = code_of(field, &d, out)?;
    let printed = tables::dds_codes(m)?;
    if !out.table(&code, printed) && crate::codes::diff_against(&code, &tables::hyperoval(m)?).is_empty() {
        out.note("distribution is the three-weight hyperoval table with the outer multiplicities swapped relative to the printed enumerator; possible transcription issue");
    }
    let probe = dual_distance_probe(&d, 4);
    out.observe("dual_distance", probe);
    out.eq("dual distance", Some(3), probe);
    Ok(())
}

pub fn j170(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 4 == 2 && m >= 6, "conj-DDSsJ170", field, "stated for m = 2 mod 4, m >= 6")?;
    let code = image_code(field, &family(field, "j170")?, false, out)?;
    out.table(&code, tables::j170(m)?);
    Ok(())
}

pub fn j170_ds(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 4 == 2 && m >= 6, "conj-DDSsJ170/ds", field, "stated for m = 2 mod 4, m >= 6")?;
    let d = image_set(field, &family(field, "j170")?).without_zero();
    singer(field, &d, singer_small(m), out)
}

pub fn j171(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2) && m >= 4, "conj-DDSsJ171", field, "stated for even m >= 4")?;
    let code = image_code(field, &family(field, "j171")?, false, out)?;
    out.table(&code, tables::j171(m)?);
    Ok(())
}

pub fn j171_ds(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m.is_multiple_of(2) && m >= 4, "conj-DDSsJ171/ds", field, "stated for even m >= 4")?;
    let d = image_set(field, &family(field, "j171")?).without_zero();
    singer(field, &d, singer_small(m), out)
}

fn dds2_star(field: &FieldSpec, item: u8) -> Result<DefiningSet> {
    need(field.m() >= 4, "conj-DDSs2", field, "stated for m >= 4")?;
    let f = family(field, &format!("dds2:{item}"))?;
    Ok(image_of_xx1(field, &f).without_zero())
}

pub fn dds2<const I: u8>(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let d = dds2_star(field, I)?;
    singer(field, &d, singer_small(field.m()), out)
}

pub fn dds2_code<const I: u8>(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let d = dds2_star(field, I)?;
    let code = code_of(field, &d, out)?;
    out.table(&code, tables::one_weight("conj-DDSscodes2", (1 << (m - 1)) - 1, m - 1, 1 << (m - 2)));
    Ok(())
}

pub fn expansion_instances(m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        return Vec::new();
    }
    ["segre", "glynn1"].iter().map(|s| params(&[("fn", s.to_string()), ("u", "0x1".into())])).collect()
}

/// Code of `f(x) + ux`, for the two monomials used as sources of the hyperoval table.
fn hyperoval_source(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<crate::codes::CodeSummary> {
    let m = field.m();
    need(m % 2 == 1 && m >= 3, "thm-extebdedcode", field, "m must be odd and at least 3")?;
    let f = match text(p, "fn", "segre") {
        "glynn1" => family(field, "glynn1")?,
        _ => monomial(field, 6),
    };
    let u = elem(field, p, "u", 1)?;
    let mut scratch = Outcome::default();
    let code = image_code(field, &crate::verify::support::plus_ux(&f, u), false, &mut scratch)?;
    out.diffs.extend(scratch.diffs);
    Ok(code)
}

pub fn expansion(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let code = hyperoval_source(field, p, out)?;
    let hypothesis = crate::codes::diff_against(&code, &tables::hyperoval(m)?).is_empty();
    need(hypothesis, "thm-extebdedcode", field, "source code does not have the hyperoval distribution")?;
    let big = expand_complement_auto(&code);
    out.table(&big, tables::hyperoval_expanded(m)?);
    Ok(())
}

pub fn expansion_example(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    let stated = match m {
        5 => (16, 6, 6),
        7 => (64, 8, 28),
        _ => return Err(inapplicable("thm-extebdedcode/example", field, "examples given for m = 5 and 7")),
    };
    let code = hyperoval_source(field, p, out)?;
    let big = expand_complement_auto(&code);
    out.keep(&big);
    out.eq("[n, k, d]", stated, (big.n, big.k, big.d_min.unwrap_or(0)));
    Ok(())
}

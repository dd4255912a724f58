//! Rows for o-polynomials, their identities and the codes of `f(x) + ux`.

use super::super::support::*;
use super::super::Params;
use crate::codes::tables;
use crate::error::Result;
use crate::funlib::family::power_exponent;
use crate::funlib::{compositional_inverse, dickson_eval, is_e_to_1, verify_comp_inverse, Func};
use crate::gf2m::{gcd, Elem, FieldSpec};
use crate::opoly::{closure_transforms, exponent_orbit, fbar, monomial, normalise};

fn odd(field: &FieldSpec, tag: &str) -> Result<()> {
    need(field.m() % 2 == 1, tag, field, "m must be odd")
}

fn coprime_hs(m: u32) -> Vec<u32> {
    (1..m.max(2)).filter(|&h| gcd(h as u64, m as u64) == 1).collect()
}

fn a_values(tag: &str, m: u32) -> Vec<Params> {
    if m.is_multiple_of(2) {
        return Vec::new();
    }
    sample(tag, m, if m <= 7 { usize::MAX } else { 12 }, false).into_iter().map(|a| params(&[("a", hex(a))])).collect()
}

fn u_values(tag: &str, m: u32, n: usize) -> Vec<Elem> {
    sample(tag, m, n, true)
}

fn fn_list(names: &[&str]) -> Vec<Params> {
    names.iter().map(|s| params(&[("fn", s.to_string())])).collect()
}

/// O-polynomial in both modes, with the equivalence checked on the way.
fn assert_opoly(field: &FieldSpec, f: &Func, out: &mut Outcome) -> bool {
    let r = opoly_both(field, f, out);
    out.check(r.is_o_polynomial, || {
        let w = r.witnesses.first().map(|w| format!(" ({}: {})", w.test, w.reason)).unwrap_or_default();
        format!("{} is not an o-polynomial{w}", f.name())
    })
}

pub fn opoly2to1_instances(_m: u32) -> Vec<Params> {
    fn_list(&[
        "translation:h=1", "segre:a=0", "glynn1", "payne:a=0x1", "cherowitzo:a=0x1", "subiaco:a=0x1", "power:d=3", "power:d=5",
        "inverse", "identity", "poly:t=3+5",
    ])
}

pub fn opoly2to1(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let f = family(field, text(p, "fn", "translation:h=1"))?;
    need(f.eval(field, 0) == 0, "thm-opoly2to1", field, "need f(0) = 0")?;
    let r = opoly_both(field, &f, out);
    out.observe("definition_test", r.definition_test);
    out.observe("two_to_one_test", r.two_to_one_test);
    Ok(())
}

const KNOWN: &[&str] = &[
    "translation:h=1", "translation:h=2", "segre:a=0", "segre:a=0x1", "glynn1", "glynn2:a=0", "glynn2:a=0x1", "payne:a=0x1",
    "cherowitzo:a=0x1", "subiaco:a=0x1",
];

pub fn known_instances(_m: u32) -> Vec<Params> {
    fn_list(KNOWN)
}

pub fn basic_property(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let f = family(field, text(p, "fn", "translation:h=1"))?;
    let r = opoly_both(field, &f, out);
    need(r.is_o_polynomial, "thm-basicproperty", field, "not an o-polynomial here")?;
    let t = closure_transforms(field, &f)?;
    let all = t.all();
    out.observe("transforms", all.len());
    for g in all {
        assert_opoly(field, g, out);
    }
    Ok(())
}

pub fn basic_property2_instances(_m: u32) -> Vec<Params> {
    ["6", "glynn1", "translation", "inv6"].iter().map(|k| params(&[("k", k.to_string())])).collect()
}

pub fn basic_property2(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let k: u64 = match text(p, "k", "6") {
        "glynn1" => power_exponent(field, &"glynn1".parse()?)?.unwrap_or(0) as u64,
        "inv6" => power_exponent(field, &"inv6".parse()?)?.unwrap_or(0) as u64,
        "translation" => 2,
        s => s.parse().map_err(|_| crate::error::Error::Parse(format!("k={s}")))?,
    };
    let x_k = monomial(field, k);
    let r = opoly_both(field, &x_k, out);
    need(r.is_o_polynomial, "thm-basicproperty2", field, &format!("x^{k} is not an o-polynomial"))?;
    out.observe("k", k);
    for entry in exponent_orbit(field, k as i128) {
        match entry.exponent {
            Some(e) => {
                out.observe(entry.label, e);
                assert_opoly(field, &monomial(field, e), out);
            }
            None => out.diffs.push(format!("exponent {} is undefined modulo 2^m - 1", entry.label)),
        }
    }
    Ok(())
}

pub fn normalise_instances(_m: u32) -> Vec<Params> {
    fn_list(&["segre:a=0x2", "glynn2:a=0x3", "cherowitzo:a=0x2", "payne:a=0x2", "translation:h=1"])
}

pub fn normalise_row(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let f = family(field, text(p, "fn", "segre:a=0x2"))?;
    need(field.contains(2), "opoly-normalise", field, "field too small")?;
    let r = opoly_both(field, &f, out);
    need(r.is_o_polynomial, "opoly-normalise", field, "not an o-polynomial here")?;
    let f1 = f.eval(field, 1);
    out.observe("f(1)", hex(f1));
    if out.check(f1 != 0, || "o-polynomial with f(1) = 0".into()) {
        let g = normalise(field, &f);
        assert_opoly(field, &g, out);
        out.eq("normalised value at 1", 1, g.eval(field, 1));
    }
    Ok(())
}

pub fn h_instances(m: u32) -> Vec<Params> {
    coprime_hs(m).into_iter().map(|h| params(&[("h", h.to_string())])).collect()
}

fn translation(field: &FieldSpec, p: &Params) -> Result<(u32, Func)> {
    let h = int(p, "h", 1)? as u32;
    Ok((h, family(field, &format!("translation:h={h}"))?))
}

pub fn translation_opoly(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (_, f) = translation(field, p)?;
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn translation_inverse(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (h, f) = translation(field, p)?;
    let g = monomial(field, 1u64 << ((field.m() - h) % field.m()));
    verify_inverse(field, &f, &g, out)
}

pub fn translation_bar(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (h, f) = translation(field, p)?;
    let m = field.m();
    let printed = signed_monomial(field, (1i128 << m) - (1i128 << (m - h)), 1);
    let bar = fbar(&f);
    out.observe("equals_x^(2^m-2^h)", same_map(field, &bar, &signed_monomial(field, (1i128 << m) - (1i128 << h), 1)).is_none());
    expect_same(field, "bar(Trans) = x^(2^m - 2^(m-h))", &bar, &printed, out);
    Ok(())
}

fn verify_inverse(field: &FieldSpec, f: &Func, g: &Func, out: &mut Outcome) -> Result<()> {
    let ok = verify_comp_inverse(field, f, g)?;
    out.check(ok, || format!("{} is not the compositional inverse of {}", g.name(), f.name()));
    Ok(())
}

pub fn translation_codes_instances(m: u32) -> Vec<Params> {
    let mut v = Vec::new();
    for h in coprime_hs(m).into_iter().take(3) {
        let mut us = vec![1];
        us.extend(u_values(&format!("thm-translationcodes/{h}"), m, 5).into_iter().filter(|&u| u != 1).take(5));
        for u in us {
            v.push(params(&[("h", h.to_string()), ("u", hex(u))]));
        }
    }
    v
}

pub fn translation_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m >= 2, "thm-translationcodes", field, "need m >= 2")?;
    let (_, f) = translation(field, p)?;
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "thm-translationcodes", field, "need u != 0")?;
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    out.table(&code, tables::one_weight("thm-translationcodes", 1 << (m - 1), m - 1, 1 << (m - 2)));
    Ok(())
}

pub fn a_instances_segre(m: u32) -> Vec<Params> {
    a_values("segre", m)
}

fn segre(field: &FieldSpec, p: &Params, tag: &str) -> Result<(Elem, Func)> {
    odd(field, tag)?;
    let a = elem(field, p, "a", 0)?;
    Ok((a, family(field, &format!("segre:a={a:#x}"))?))
}

pub fn segre_opoly(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (_, f) = segre(field, p, "thm-segre")?;
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn segre_identity(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = segre(field, p, "segre-identity")?;
    let r = field.sqrt(a);
    let printed = Func::new("(x+sqrt(a))^6 + sqrt(a)^3", field.m(), move |fs, x| fs.pow(x ^ r, 6) ^ fs.pow(r, 3));
    let corrected = Func::new("(x+sqrt(a))^6 + a^3", field.m(), move |fs, x| fs.pow(x ^ r, 6) ^ fs.pow(a, 3));
    out.observe("with_constant_a^3", same_map(field, &f, &corrected).is_none());
    expect_same(field, "Segre_a = (x+sqrt(a))^6 + sqrt(a)^3", &f, &printed, out);
    Ok(())
}

pub fn segre_xd5(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = segre(field, p, "segre-remarks/xd5")?;
    let xd5 = Func::new("x D5(x, a)", field.m(), move |fs, x| fs.mul(x, dickson_eval(fs, 5, a, x)));
    expect_same(field, "Segre_a = x D5(x, a)", &f, &xd5, out);
    let ai = field.inv_or_zero(a);
    let a2 = field.square(a);
    let other = Func::new("a^2 D5(x^-1, a^-1) x^7", field.m(), move |fs, x| {
        fs.mul(a2, fs.mul(dickson_eval(fs, 5, ai, fs.inv_or_zero(x)), fs.pow(x, 7)))
    });
    expect_same(field, "Segre_a = a^2 D5(x^(2^m-2), a^(2^m-2)) x^7", &f, &other, out);
    Ok(())
}

pub fn segre_bar(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = segre(field, p, "segre-remarks/bar")?;
    let bar = fbar(&f);
    let d5 = Func::new("D5(x^-1, a)", field.m(), move |fs, x| dickson_eval(fs, 5, a, fs.inv_or_zero(x)));
    expect_same(field, "bar(Segre_a) = D5(x^(2^m-2), a)", &bar, &d5, out);
    let q = 1i128 << field.m();
    let expanded = sum_maps(
        "a^2 x^(2^m-2) + a x^(2^m-4) + x^(2^m-6)",
        vec![signed_monomial(field, q - 2, field.square(a)), signed_monomial(field, q - 4, a), signed_monomial(field, q - 6, 1)],
    );
    expect_same(field, "bar(Segre_a) expanded", &bar, &expanded, out);
    Ok(())
}

pub fn segre_inverse(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = segre(field, p, "segre-remarks/inverse")?;
    let printed = family(field, &format!("segre-inverse:a={a:#x}"))?;
    let sixth = field.exp_frac(1, 6)? as i128;
    let (shift, root) = (field.pow(a, 3), field.sqrt(a));
    let corrected = Func::new("(x+a^3)^(1/6) + sqrt(a)", field.m(), move |fs, x| fs.pow(x ^ shift, sixth) ^ root);
    out.observe("corrected_form_is_inverse", verify_comp_inverse(field, &f, &corrected)?);
    verify_inverse(field, &f, &printed, out)
}

pub fn jan9(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    odd(field, "thm-jan9")?;
    let bar = fbar(&family(field, "segre:a=0x1")?);
    let g = family(field, "segre-bar-inverse1")?;
    verify_inverse(field, &bar, &g, out)
}

pub fn glynn1_opoly(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    let f = family(field, "glynn1")?;
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn u_instances<const N: usize>(m: u32) -> Vec<Params> {
    u_values("u", m, N).into_iter().map(|u| params(&[("u", hex(u))])).collect()
}

/// Length, dimension, and five weights from `m = 9` on; the hyperoval table at 5 and 7.
pub fn glynn_code(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "glynn-code-conj")?;
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "glynn-code-conj", field, "need u != 0")?;
    let f = family(field, "glynn1")?;
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    match m {
        3 => {
            out.shape(&code, None, None, None);
            out.report_only = true;
        }
        5 | 7 => {
            out.shape(&code, Some(1 << (m - 1)), Some(m), None);
            out.table(&code, tables::hyperoval(m)?);
        }
        _ => {
            out.shape(&code, Some(1 << (m - 1)), Some(m), Some(&[5]));
        }
    }
    Ok(())
}

pub fn a_instances_glynn2(m: u32) -> Vec<Params> {
    a_values("glynn2", m)
}

pub fn glynn2_opoly(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    odd(field, "thm-glynn2")?;
    let a = elem(field, p, "a", 0)?;
    assert_opoly(field, &family(field, &format!("glynn2:a={a:#x}"))?, out);
    Ok(())
}

pub fn glynn2_identity(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    need(m % 4 == 1, "glynn2-identity", field, "identity given for m = 1 mod 4 only")?;
    let a = elem(field, p, "a", 0)?;
    let f = family(field, &format!("glynn2:a={a:#x}"))?;
    let (s, t) = (1i128 << m.div_ceil(2), 1i128 << ((3 * m + 1) / 4));
    let c = field.pow(a, ((m - 1) / 4) as i128);
    let printed = Func::new("(x+a^((m-1)/4))^(s+t) + a^(s+t)", m, move |fs, x| fs.pow(x ^ c, s + t) ^ fs.pow(a, s + t));
    let c2 = field.frobenius(a, (m - 1) / 4);
    let corrected = Func::new("(x+a^(2^((m-1)/4)))^(s+t) + a^(t+1)", m, move |fs, x| fs.pow(x ^ c2, s + t) ^ fs.pow(a, t + 1));
    out.observe("corrected_form_holds", same_map(field, &f, &corrected).is_none());
    expect_same(field, "Glynnii_a identity", &f, &printed, out);
    Ok(())
}

pub fn hyperoval_ds_instances(m: u32) -> Vec<Params> {
    let mut v = Vec::new();
    for case in ["segre", "glynn"] {
        for u in u_values(&format!("thm-hyperovalDS/{case}"), m, 10) {
            v.push(params(&[("case", case.into()), ("u", hex(u))]));
        }
    }
    v
}

/// `ρ = 2^i + 2^j` with `κ = j - i` for the two listed cases.
fn rho(field: &FieldSpec, case: &str) -> Result<(u32, u32)> {
    let m = field.m();
    match case {
        "segre" => Ok((1, 2)),
        "glynn" => {
            let pi = (0..m).find(|&p| (4 * p) % m == 1 % m).ok_or_else(|| inapplicable("thm-hyperovalDS", field, "no pi with 4 pi = 1 mod m"))?;
            Ok((pi.min(m.div_ceil(2)), pi.max(m.div_ceil(2))))
        }
        _ => Err(crate::error::Error::Parse(format!("case `{case}`"))),
    }
}

pub fn hyperoval_ds(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "thm-hyperovalDS")?;
    need(m >= 3, "thm-hyperovalDS", field, "need m >= 3")?;
    let (i, j) = rho(field, text(p, "case", "segre"))?;
    let r = (1u64 << i) + (1u64 << j);
    out.observe("rho", r);
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "thm-hyperovalDS", field, "need u != 0")?;
    let fu = plus_ux(&monomial(field, r), u);
    need(is_e_to_1(field, &fu, 2), "thm-hyperovalDS", field, "x^rho + ux is not 2-to-1")?;
    need(gcd((1u64 << (j - i)) + 1, field.mult_order()) == 1, "thm-hyperovalDS", field, "gcd(2^kappa + 1, 2^m - 1) != 1")?;
    let code = image_code(field, &fu, false, out)?;
    out.table(&code, tables::hyperoval(m)?);
    Ok(())
}

pub fn xd5_instances(m: u32) -> Vec<Params> {
    let mut v = Vec::new();
    for a in sample("xd5-thm/a", m, 4, false) {
        for u in u_values(&format!("xd5-thm/{a}"), m, 3) {
            v.push(params(&[("a", hex(a)), ("u", hex(u))]));
        }
    }
    v
}

pub fn xd5(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "xd5-thm")?;
    need(m >= 3, "xd5-thm", field, "need m >= 3")?;
    let a = elem(field, p, "a", 0)?;
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "xd5-thm", field, "need u != 0")?;
    let f = family(field, &format!("xd5:a={a:#x}"))?;
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    out.table(&code, tables::hyperoval(m)?);
    Ok(())
}

pub fn inv6_instances(m: u32) -> Vec<Params> {
    let mut v = vec![params(&[("u", "0x0".into())])];
    v.extend(u_instances::<5>(m));
    v
}

/// Takes every `u`, including 0.
pub fn inv6(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "inv6-thm")?;
    need(m >= 3, "inv6-thm", field, "need m >= 3")?;
    let fam = "inv6".parse()?;
    let e = power_exponent(field, &fam)?.expect("power family") as u64;
    out.eq("6 * e mod 2^m - 1", 1, (6 * e) % field.mult_order());
    let u = elem(field, p, "u", 1)?;
    let code = image_code(field, &plus_ux(&monomial(field, e), u), false, out)?;
    out.table(&code, tables::hyperoval(m)?);
    Ok(())
}

pub fn a_instances_cherowitzo(m: u32) -> Vec<Params> {
    a_values("cherowitzo", m)
}

fn cherowitzo(field: &FieldSpec, p: &Params, tag: &str) -> Result<(Elem, Func)> {
    odd(field, tag)?;
    let a = elem(field, p, "a", 1)?;
    Ok((a, family(field, &format!("cherowitzo:a={a:#x}"))?))
}

pub fn cherowitzo_opoly(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (_, f) = cherowitzo(field, p, "conj-cherowitzo")?;
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn cherowitzo_bar_remark(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = cherowitzo(field, p, "cherowitzo-remarks/bar")?;
    let (q, e) = (1i128 << field.m(), 1i128 << field.m().div_ceil(2));
    let printed = sum_maps(
        "x^(2^m-2^e) + a x^(2^m-2^e-2) + a^(2^e+2) x^(2^m-3*2^e-4)",
        vec![signed_monomial(field, q - e, 1), signed_monomial(field, q - e - 2, a), signed_monomial(field, q - 3 * e - 4, field.pow(a, e + 2))],
    );
    expect_same(field, "bar(Cherowitzo_a) expanded", &fbar(&f), &printed, out);
    Ok(())
}

pub fn cherowitzo_inverse1(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    odd(field, "cherowitzo-remarks/inverse1")?;
    let f = family(field, "cherowitzo:a=0x1")?;
    let g = family(field, "cherowitzo-inverse:a=0x1")?;
    verify_inverse(field, &f, &g, out)
}

pub fn cherowitzo_inverse(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = cherowitzo(field, p, "thm-cherowitzo-inverse")?;
    let g = family(field, &format!("cherowitzo-inverse:a={a:#x}"))?;
    verify_inverse(field, &f, &g, out)
}

pub fn cherowitzo_bar(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = cherowitzo(field, p, "thm-cherowitzo-bar")?;
    let printed = family(field, &format!("cherowitzo-inverse-bar:a={a:#x}"))?;
    if let Ok(inv) = compositional_inverse(field, &f) {
        out.observe("equals_bar_of_inverse", same_map(field, &fbar(&inv), &printed).is_none());
    }
    expect_same(field, "bar(Cherowitzo_a)", &fbar(&f), &printed, out);
    Ok(())
}

pub fn b_u_instances(m: u32) -> Vec<Params> {
    let mut v = Vec::new();
    for b in sample("code-conj/b", m, 3, false) {
        for u in u_values(&format!("code-conj/{b}"), m, 3) {
            v.push(params(&[("b", hex(b)), ("u", hex(u))]));
        }
    }
    v
}

pub fn cherowitzo_code(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "cherowitzo-code-conj")?;
    need(m >= 5, "cherowitzo-code-conj", field, "stated for m >= 5")?;
    let b = elem(field, p, "b", 0)?;
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "cherowitzo-code-conj", field, "need u != 0")?;
    let f = family(field, &format!("cherowitzo-code:b={b:#x}"))?;
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    let weights: &[usize] = if m <= 7 { &[1, 2, 3, 4, 5] } else { &[5] };
    out.shape(&code, Some(1 << (m - 1)), Some(m), Some(weights));
    Ok(())
}

pub fn a_instances_payne(m: u32) -> Vec<Params> {
    a_values("payne", m)
}

fn payne(field: &FieldSpec, p: &Params, tag: &str) -> Result<(Elem, Func)> {
    odd(field, tag)?;
    let a = elem(field, p, "a", 1)?;
    Ok((a, family(field, &format!("payne:a={a:#x}"))?))
}

pub fn payne_opoly(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (_, f) = payne(field, p, "conj-payne")?;
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn payne_xd5(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = payne(field, p, "payne-remarks/xd5")?;
    let sixth = field.exp_frac(1, 6)? as i128;
    let plain = Func::new("D5(x^(1/6), a)", field.m(), move |fs, x| dickson_eval(fs, 5, a, fs.pow(x, sixth)));
    out.observe("equals_D5(x^(1/6),a)", same_map(field, &f, &plain).is_none());
    let printed = Func::new("x D5(x^(1/6), a)", field.m(), move |fs, x| fs.mul(x, dickson_eval(fs, 5, a, fs.pow(x, sixth))));
    expect_same(field, "Payne_a = x D5(x^(1/6), a)", &f, &printed, out);
    Ok(())
}

pub fn payne_bar(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = payne(field, p, "payne-remarks/bar")?;
    let ai = field.inv_or_zero(a);
    let other = family(field, &format!("payne:a={ai:#x}"))?;
    let bar = fbar(&f);
    let scale = |c: Elem, g: &Func| {
        let g = g.clone();
        Func::new(format!("{c:#x} * {}", g.name()), field.m(), move |fs, x| fs.mul(c, g.eval(fs, x)))
    };
    let q = 1i128 << field.m();
    out.observe("equals_a^2_Payne_(1/a)", same_map(field, &bar, &scale(field.square(a), &other)).is_none());
    expect_same(field, "bar(Payne_a) = a^(2^m-3) Payne_(a^(2^m-2))", &bar, &scale(field.pow(a, q - 3), &other), out);
    Ok(())
}

pub fn payne_exponents(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let (a, f) = payne(field, p, "payne-remarks/exponents")?;
    let m = field.m();
    let h = 1u64 << (m - 1);
    out.eq("1/6 mod 2^m - 1", (5 * h - 2) / 3, field.exp_frac(1, 6)?);
    let expanded = sum_maps(
        "x^((2^(m-1)+2)/3) + a x^(2^(m-1)) + a^2 x^((5*2^(m-1)-2)/3)",
        vec![
            signed_monomial(field, h.div_ceil(3) as i128, 1),
            signed_monomial(field, h as i128, a),
            signed_monomial(field, ((5 * h - 2) / 3) as i128, field.square(a)),
        ],
    );
    expect_same(field, "Payne_a expanded", &f, &expanded, out);
    Ok(())
}

pub fn payne_inverse(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    odd(field, "thm-payne-inverse")?;
    let f = family(field, "payne:a=0x1")?;
    let g = family(field, "payne-inverse1")?;
    verify_inverse(field, &f, &g, out)?;
    assert_opoly(field, &g, out);
    assert_opoly(field, &fbar(&g), out);
    Ok(())
}

pub fn payne_code(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let m = field.m();
    odd(field, "payne-code-conj")?;
    need(m >= 7, "payne-code-conj", field, "stated for m >= 7")?;
    let b = elem(field, p, "b", 0)?;
    let u = elem(field, p, "u", 1)?;
    need(u != 0, "payne-code-conj", field, "need u != 0")?;
    let f = family(field, &format!("payne:a={b:#x}"))?;
    let sixth = field.exp_frac(1, 6)? as i128;
    let d5 = Func::new("D5(x^(1/6), b)", m, move |fs, x| dickson_eval(fs, 5, b, fs.pow(x, sixth)));
    expect_same(field, "f = D5(x^(1/6), b)", &f, &d5, out);
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    out.shape(&code, Some(1 << (m - 1)), Some(m), Some(&[3, 5]));
    Ok(())
}

pub fn subiaco_instances(m: u32) -> Vec<Params> {
    if m < 2 {
        return Vec::new();
    }
    (0..3).map(|i| params(&[("pick", i.to_string())])).collect()
}

fn subiaco_a(field: &FieldSpec, p: &Params, tag: &str) -> Result<Elem> {
    let m = field.m();
    let pick = int(p, "pick", 0)? as usize;
    field
        .elements()
        .filter(|&a| a != 0 && field.trace(field.inv_or_zero(a)) == 1 && (m % 4 != 2 || !field.in_subfield(a, 2)))
        .nth(pick)
        .ok_or_else(|| inapplicable(tag, field, "not enough admissible a"))
}

pub fn subiaco(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    need(field.m() >= 2, "thm-subiaco", field, "need m >= 2")?;
    let a = subiaco_a(field, p, "thm-subiaco")?;
    out.observe("a", hex(a));
    assert_opoly(field, &family(field, &format!("subiaco:a={a:#x}"))?, out);
    Ok(())
}

pub fn subiaco_literal(field: &FieldSpec, _p: &Params, out: &mut Outcome) -> Result<()> {
    odd(field, "cor-subiaco")?;
    let m = field.m();
    let q = 1i128 << m;
    let h = 1i128 << (m - 1);
    let f = Func::new("(x+x^2+x^3+x^4)(x^4+x^2+1)^(2^m-2) + x^(2^(m-1))", m, move |fs, x| {
        let x2 = fs.square(x);
        let x4 = fs.square(x2);
        let num = x ^ x2 ^ fs.mul(x2, x) ^ x4;
        fs.mul(num, fs.pow(x4 ^ x2 ^ 1, q - 2)) ^ fs.pow(x, h)
    });
    expect_same(field, "literal form = Subiaco_1", &f, &family(field, "subiaco:a=0x1")?, out);
    assert_opoly(field, &f, out);
    Ok(())
}

pub fn subiaco_codes_instances(m: u32) -> Vec<Params> {
    if m < 3 {
        return Vec::new();
    }
    u_values("subiaco-codes", m, 3).into_iter().map(|u| params(&[("pick", "0".into()), ("u", hex(u))])).collect()
}

pub fn subiaco_codes(field: &FieldSpec, p: &Params, out: &mut Outcome) -> Result<()> {
    let a = subiaco_a(field, p, "subiaco-codes")?;
    let u = elem(field, p, "u", 1)?;
    let f = family(field, &format!("subiaco:a={a:#x}"))?;
    let code = image_code(field, &plus_ux(&f, u), false, out)?;
    out.observe("d_min", code.d_min);
    out.shape(&code, None, None, None);
    out.report_only = true;
    Ok(())
}

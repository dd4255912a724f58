//! Named function families and their per-`m` instantiation.
//!
//! Grammar: `name` or `name:key=value,key=value`. Field-element values are
//! decimal or `0x` hex. `apn-shift(<family>)` wraps any vectorial family.
//!
//! Exponent formulas are stored symbolically and resolved for the concrete
//! `m`; a formula that is not an integer at that `m`, or a violated side
//! condition, is reported as [`Error::Inapplicable`] naming the condition.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use crate::codes::tables::{euler_phi, two_is_primitive_root};
use crate::error::{Error, Result};
use crate::funlib::{dickson_eval, Func, UnivariatePoly};
use crate::gf2m::{gcd, Elem, FieldSpec};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Const0,
    Const1,
    Identity,
    /// `c x`.
    Linear { c: Elem },
    /// `c x^d`.
    Power { d: u64, c: Elem },
    /// Explicit polynomial `Σ c_i x^{e_i}`.
    Poly { terms: Vec<(u64, Elem)> },
    Gold { h: u32 },
    Kasami { h: u32 },
    Welch,
    NihoA,
    NihoB,
    Inverse,
    Helleseth,
    CusickDobbertin1,
    CusickDobbertin2,
    Niho4,
    Niho4b,
    Dobbertin { h: u32 },
    Hr05 { h: u32 },
    Dfhr { h: u32, plus: bool },
    Hhkzlj { l: u32, h: u32 },
    Translation { h: u32 },
    Segre { a: Elem },
    Glynn1,
    Glynn2 { a: Elem },
    Cherowitzo { a: Elem },
    CherowitzoCode { b: Elem },
    Payne { a: Elem },
    Subiaco { a: Elem },
    Xd5 { a: Elem },
    InvSix,
    SegreInverse { a: Elem },
    SegreBarInverse1,
    PayneInverse1,
    CherowitzoInverse { a: Elem },
    CherowitzoInverseBar { a: Elem },
    Dds { item: char },
    J170,
    J171,
    Dds2 { item: u8 },
    ApnShift(Box<Family>),
    CaoHuA { lambda: Option<Elem>, mu: Elem },
    CaoHuB { lambda: Option<Elem>, mu: Elem },
    LiYue { a: Option<Elem> },
    Wdx { r: u64, m_r: u32 },
}

/// Family names accepted by the parser.
pub const FAMILY_NAMES: &[&str] = &[
    "const0", "const1", "identity", "linear", "power", "poly", "gold", "kasami", "welch", "niho-a", "niho-b",
    "inverse", "helleseth", "cusick-dobbertin-1", "cusick-dobbertin-2", "niho4", "niho4b", "dobbertin", "hr05",
    "dfhr", "hhkzlj", "translation", "segre", "glynn1", "glynn2", "cherowitzo", "cherowitzo-code", "payne",
    "subiaco", "xd5", "inv6", "segre-inverse", "segre-bar-inverse1", "payne-inverse1", "cherowitzo-inverse",
    "cherowitzo-inverse-bar", "dds", "j170", "j171", "dds2", "apn-shift", "caohu-a", "caohu-b", "liyue", "wdx",
];

fn hex(e: Elem) -> String {
    format!("{e:#x}")
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Family::*;
        let opt = |v: &Option<Elem>| v.map(|x| format!(",lambda={}", hex(x))).unwrap_or_default();
        match self {
            Const0 => write!(f, "const0"),
            Const1 => write!(f, "const1"),
            Identity => write!(f, "identity"),
            Linear { c } => write!(f, "linear:c={}", hex(*c)),
            Power { d, c } => write!(f, "power:d={d},c={}", hex(*c)),
            Poly { terms } => {
                let t: Vec<String> = terms.iter().map(|(e, c)| format!("{}*{e}", hex(*c))).collect();
                write!(f, "poly:t={}", t.join("+"))
            }
            Gold { h } => write!(f, "gold:h={h}"),
            Kasami { h } => write!(f, "kasami:h={h}"),
            Welch => write!(f, "welch"),
            NihoA => write!(f, "niho-a"),
            NihoB => write!(f, "niho-b"),
            Inverse => write!(f, "inverse"),
            Helleseth => write!(f, "helleseth"),
            CusickDobbertin1 => write!(f, "cusick-dobbertin-1"),
            CusickDobbertin2 => write!(f, "cusick-dobbertin-2"),
            Niho4 => write!(f, "niho4"),
            Niho4b => write!(f, "niho4b"),
            Dobbertin { h } => write!(f, "dobbertin:h={h}"),
            Hr05 { h } => write!(f, "hr05:h={h}"),
            Dfhr { h, plus } => write!(f, "dfhr:h={h},sign={}", if *plus { "+" } else { "-" }),
            Hhkzlj { l, h } => write!(f, "hhkzlj:l={l},h={h}"),
            Translation { h } => write!(f, "translation:h={h}"),
            Segre { a } => write!(f, "segre:a={}", hex(*a)),
            Glynn1 => write!(f, "glynn1"),
            Glynn2 { a } => write!(f, "glynn2:a={}", hex(*a)),
            Cherowitzo { a } => write!(f, "cherowitzo:a={}", hex(*a)),
            CherowitzoCode { b } => write!(f, "cherowitzo-code:b={}", hex(*b)),
            Payne { a } => write!(f, "payne:a={}", hex(*a)),
            Subiaco { a } => write!(f, "subiaco:a={}", hex(*a)),
            Xd5 { a } => write!(f, "xd5:a={}", hex(*a)),
            InvSix => write!(f, "inv6"),
            SegreInverse { a } => write!(f, "segre-inverse:a={}", hex(*a)),
            SegreBarInverse1 => write!(f, "segre-bar-inverse1"),
            PayneInverse1 => write!(f, "payne-inverse1"),
            CherowitzoInverse { a } => write!(f, "cherowitzo-inverse:a={}", hex(*a)),
            CherowitzoInverseBar { a } => write!(f, "cherowitzo-inverse-bar:a={}", hex(*a)),
            Dds { item } => write!(f, "dds:{item}"),
            J170 => write!(f, "j170"),
            J171 => write!(f, "j171"),
            Dds2 { item } => write!(f, "dds2:{item}"),
            ApnShift(inner) => write!(f, "apn-shift({inner})"),
            CaoHuA { lambda, mu } => write!(f, "caohu-a:mu={}{}", hex(*mu), opt(lambda)),
            CaoHuB { lambda, mu } => write!(f, "caohu-b:mu={}{}", hex(*mu), opt(lambda)),
            LiYue { a } => match a {
                Some(a) => write!(f, "liyue:a={}", hex(*a)),
                None => write!(f, "liyue"),
            },
            Wdx { r, m_r } => write!(f, "wdx:r={r},mr={m_r}"),
        }
    }
}

fn parse_int(family: &str, key: &str, v: &str) -> Result<u64> {
    let r = match v.strip_prefix("0x").or_else(|| v.strip_prefix("0X")) {
        Some(h) => u64::from_str_radix(h, 16),
        None => v.parse(),
    };
    r.map_err(|_| Error::bad_param(family, format!("{key}={v} is not an integer")))
}

struct Params<'a> {
    family: &'a str,
    map: BTreeMap<&'a str, &'a str>,
    positional: Option<&'a str>,
}

impl<'a> Params<'a> {
    fn parse(family: &'a str, body: Option<&'a str>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut positional = None;
        if let Some(body) = body.filter(|b| !b.is_empty()) {
            for part in body.split(',') {
                match part.split_once('=') {
                    Some((k, v)) => {
                        if map.insert(k.trim(), v.trim()).is_some() {
                            return Err(Error::bad_param(family, format!("{k} given twice")));
                        }
                    }
                    None if positional.is_none() && map.is_empty() => positional = Some(part.trim()),
                    None => return Err(Error::bad_param(family, format!("cannot parse `{part}`"))),
                }
            }
        }
        Ok(Self { family, map, positional })
    }

    fn int(&mut self, key: &str) -> Result<Option<u64>> {
        self.map.remove(key).map(|v| parse_int(self.family, key, v)).transpose()
    }

    fn req(&mut self, key: &str) -> Result<u64> {
        self.int(key)?.ok_or_else(|| Error::bad_param(self.family, format!("missing `{key}`")))
    }

    fn u32(&mut self, key: &str) -> Result<u32> {
        let v = self.req(key)?;
        u32::try_from(v).map_err(|_| Error::bad_param(self.family, format!("{key} too large")))
    }

    fn elem(&mut self, key: &str, default: Elem) -> Result<Elem> {
        Ok(self.int(key)?.map(|v| v as Elem).unwrap_or(default))
    }

    fn finish(self) -> Result<()> {
        if let Some(k) = self.map.keys().next() {
            return Err(Error::bad_param(self.family, format!("unknown parameter `{k}`")));
        }
        if let Some(p) = self.positional {
            return Err(Error::bad_param(self.family, format!("unexpected `{p}`")));
        }
        Ok(())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use Family::*;
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("apn-shift(") {
            let inner = rest.strip_suffix(')').ok_or_else(|| Error::Parse(format!("unbalanced parentheses in `{s}`")))?;
            return Ok(ApnShift(Box::new(inner.parse()?)));
        }
        let (name, body) = match s.split_once(':') {
            Some((n, b)) => (n, Some(b)),
            None => (s, None),
        };
        if name == "poly" {
            let body = body.and_then(|b| b.strip_prefix("t=")).ok_or_else(|| Error::bad_param("poly", "expected t=<c>*<e>+..."))?;
            let mut terms = Vec::new();
            for t in body.split('+') {
                let (c, e) = match t.split_once('*') {
                    Some((c, e)) => (parse_int("poly", "coefficient", c)? as Elem, parse_int("poly", "exponent", e)?),
                    None => (1, parse_int("poly", "exponent", t)?),
                };
                terms.push((e, c));
            }
            return Ok(Poly { terms });
        }
        let mut p = Params::parse(name, body)?;
        let fam = match name {
            "const0" => Const0,
            "const1" => Const1,
            "identity" => Identity,
            "linear" => Linear { c: p.elem("c", 1)? },
            "power" => Power { d: p.req("d")?, c: p.elem("c", 1)? },
            "gold" => Gold { h: p.u32("h")? },
            "kasami" => Kasami { h: p.u32("h")? },
            "welch" => Welch,
            "niho-a" => NihoA,
            "niho-b" => NihoB,
            "inverse" => Inverse,
            "helleseth" => Helleseth,
            "cusick-dobbertin-1" => CusickDobbertin1,
            "cusick-dobbertin-2" => CusickDobbertin2,
            "niho4" => Niho4,
            "niho4b" => Niho4b,
            "dobbertin" => Dobbertin { h: p.u32("h")? },
            "hr05" => Hr05 { h: p.u32("h")? },
            "dfhr" => {
                let h = p.u32("h")?;
                let plus = match p.map.remove("sign") {
                    None | Some("+") | Some("plus") => true,
                    Some("-") | Some("minus") => false,
                    Some(v) => return Err(Error::bad_param("dfhr", format!("sign={v}"))),
                };
                Dfhr { h, plus }
            }
            "hhkzlj" => Hhkzlj { l: p.u32("l")?, h: p.u32("h")? },
            "translation" => Translation { h: p.u32("h")? },
            "segre" => Segre { a: p.elem("a", 0)? },
            "glynn1" => Glynn1,
            "glynn2" => Glynn2 { a: p.elem("a", 0)? },
            "cherowitzo" => Cherowitzo { a: p.elem("a", 1)? },
            "cherowitzo-code" => CherowitzoCode { b: p.elem("b", 1)? },
            "payne" => Payne { a: p.elem("a", 1)? },
            "subiaco" => Subiaco { a: p.elem("a", 1)? },
            "xd5" => Xd5 { a: p.elem("a", 0)? },
            "inv6" => InvSix,
            "segre-inverse" => SegreInverse { a: p.elem("a", 0)? },
            "segre-bar-inverse1" => SegreBarInverse1,
            "payne-inverse1" => PayneInverse1,
            "cherowitzo-inverse" => CherowitzoInverse { a: p.elem("a", 1)? },
            "cherowitzo-inverse-bar" => CherowitzoInverseBar { a: p.elem("a", 1)? },
            "dds" => {
                let item = p.positional.take().or_else(|| p.map.remove("item"));
                match item.map(|s| s.chars().collect::<Vec<_>>()).as_deref() {
                    Some(&[c]) if ('a'..='k').contains(&c) => Dds { item: c },
                    _ => return Err(Error::bad_param("dds", "expected one of a..k")),
                }
            }
            "j170" => J170,
            "j171" => J171,
            "dds2" => {
                let item = p.positional.take().or_else(|| p.map.remove("item"));
                match item {
                    Some("1") => Dds2 { item: 1 },
                    Some("2") => Dds2 { item: 2 },
                    Some("3") => Dds2 { item: 3 },
                    _ => return Err(Error::bad_param("dds2", "expected 1, 2 or 3")),
                }
            }
            "caohu-a" | "caohu-b" => {
                let lambda = p.int("lambda")?.map(|v| v as Elem);
                let mu = p.elem("mu", 1)?;
                if name == "caohu-a" {
                    CaoHuA { lambda, mu }
                } else {
                    CaoHuB { lambda, mu }
                }
            }
            "liyue" => LiYue { a: p.int("a")?.map(|v| v as Elem) },
            "wdx" => Wdx { r: p.req("r")?, m_r: p.u32("mr")? },
            _ => return Err(Error::UnknownFamily(name.to_string())),
        };
        p.finish()?;
        Ok(fam)
    }
}

/// Exponent arithmetic with integrality checks, tied to one family and one `m`.
struct Ctx<'a> {
    field: &'a FieldSpec,
    name: String,
}

impl Ctx<'_> {
    fn m(&self) -> i64 {
        self.field.m() as i64
    }

    fn fail(&self, why: impl Into<String>) -> Error {
        Error::inapplicable(self.name.clone(), format!("{} at m={}", why.into(), self.field.m()))
    }

    fn need(&self, cond: bool, why: &str) -> Result<()> {
        if cond {
            Ok(())
        } else {
            Err(self.fail(why))
        }
    }

    /// `2^(num/den)`, requiring a nonnegative integer exponent.
    fn p2(&self, num: i64, den: i64) -> Result<i128> {
        if num < 0 || num % den != 0 {
            return Err(self.fail(format!("exponent {num}/{den} is not a nonnegative integer")));
        }
        Ok(1i128 << (num / den))
    }

    fn div(&self, num: i128, den: i128) -> Result<i128> {
        if den == 0 || num % den != 0 {
            return Err(self.fail(format!("{num}/{den} is not an integer")));
        }
        Ok(num / den)
    }

    fn positive(&self, e: i128) -> Result<u128> {
        if e <= 0 {
            return Err(self.fail(format!("exponent {e} is not positive")));
        }
        Ok(e as u128)
    }

    fn elem(&self, a: Elem) -> Result<Elem> {
        if self.field.contains(a) {
            Ok(a)
        } else {
            Err(Error::NotInField { value: a as u64, m: self.field.m() })
        }
    }

    fn odd(&self) -> Result<()> {
        self.need(self.m() % 2 == 1, "m must be odd")
    }

    fn even(&self) -> Result<()> {
        self.need(self.m() % 2 == 0, "m must be even")
    }

    fn coprime_h(&self, h: u32) -> Result<()> {
        self.need(h >= 1 && gcd(h as u64, self.m() as u64) == 1, "need gcd(h, m) = 1")
    }

    fn monomial(&self, d: i128, c: Elem) -> Result<Func> {
        self.poly(vec![(d, c)])
    }

    fn poly(&self, terms: Vec<(i128, Elem)>) -> Result<Func> {
        let mut t = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            t.push((if e == 0 { 0 } else { self.positive(e)? }, c));
        }
        let p = UnivariatePoly::new(self.field, t);
        Ok(Func::new(self.name.clone(), self.field.m(), move |f, x| p.eval(f, x)))
    }
}

/// The exponent `d` of a power-map family at this `m`, if it is one.
pub fn power_exponent(field: &FieldSpec, fam: &Family) -> Result<Option<u128>> {
    let cx = Ctx { field, name: fam.to_string() };
    let m = cx.m();
    use Family::*;
    let d: i128 = match fam {
        Power { d, .. } => *d as i128,
        Gold { h } => {
            cx.need(*h >= 1, "need h >= 1")?;
            cx.p2(*h as i64, 1)? + 1
        }
        Kasami { h } => {
            cx.need(*h >= 1, "need h >= 1")?;
            cx.p2(2 * *h as i64, 1)? - cx.p2(*h as i64, 1)? + 1
        }
        Welch => cx.p2(m - 1, 2)? + 3,
        NihoA => {
            cx.need(m % 4 == 1, "m must be 1 mod 4")?;
            cx.p2(m - 1, 2)? + cx.p2(m - 1, 4)? - 1
        }
        NihoB => {
            cx.need(m % 4 == 3, "m must be 3 mod 4")?;
            cx.p2(m - 1, 2)? + cx.p2(3 * m - 1, 4)? - 1
        }
        Inverse => cx.p2(m, 1)? - 2,
        Helleseth => {
            cx.even()?;
            cx.p2(m, 2)? + 3
        }
        CusickDobbertin1 => {
            cx.need(m % 4 == 2, "m must be 2 mod 4")?;
            cx.p2(m, 2)? + cx.p2(m + 2, 4)? + 1
        }
        CusickDobbertin2 => {
            cx.need(m % 4 == 2, "m must be 2 mod 4")?;
            cx.p2(m + 2, 2)? + 3
        }
        Niho4 => {
            cx.even()?;
            cx.p2(m + 2, 2)? - 1
        }
        Niho4b => {
            cx.need(m % 4 == 0, "m must be 0 mod 4")?;
            (cx.p2(m, 2)? + 1) * (cx.p2(m, 4)? - 1) + 2
        }
        Dobbertin { h } => {
            cx.even()?;
            cx.need(*h >= 1 && (*h as i64) < m && gcd(*h as u64, m as u64) == 1, "need 1 <= h < m, gcd(h, m) = 1")?;
            // (2^{(m+2)h/2} - 1)/(2^h - 1) = Σ_{i < (m+2)/2} 2^{hi}, reduced modulo 2^m - 1.
            let n = field.mult_order() as i128;
            (0..(m + 2) / 2).map(|i| 1i128 << ((i * *h as i64) % m)).sum::<i128>() % n
        }
        Hr05 { h } => {
            cx.need(m % 4 == 0, "m must be 0 mod 4")?;
            cx.need(*h >= 1 && (m / 2) % (2 * *h as i64) == 0, "2h must divide m/2")?;
            let num = cx.p2(m, 1)? + cx.p2(*h as i64 + 1, 1)? - cx.p2(m / 2 + 1, 1)? - 1;
            cx.div(num, cx.p2(*h as i64, 1)? - 1)?
        }
        Dfhr { h, plus } => {
            cx.even()?;
            let half = m / 2;
            cx.need(*h >= 1 && h.trailing_zeros() < (half as u32).trailing_zeros(), "need e2(h) < e2(m/2)")?;
            let modulus = cx.p2(half, 1)? + 1;
            let t = cx.p2(*h as i64, 1)?;
            let den = if *plus { t + 1 } else { t - 1 };
            let g = den.rem_euclid(modulus).extended_gcd(&modulus);
            cx.need(g.gcd == 1, "2^h +- 1 not invertible modulo 2^(m/2)+1")?;
            let s = (t * g.x).rem_euclid(modulus);
            (cx.p2(half, 1)? - 1) * s + 1
        }
        Hhkzlj { l, h } => {
            cx.need(*l >= 1 && *h >= 1, "need positive l and h")?;
            let n = field.mult_order() as i128;
            let lhs = (1i128 << l) + 1;
            let rhs = (1i128 << (*h as i64 % m.max(1))) % n;
            match (1..n).find(|&d| (d * lhs) % n == rhs) {
                Some(d) => d,
                None => return Err(cx.fail("no d with d(2^l+1) = 2^h mod 2^m-1")),
            }
        }
        Translation { h } => {
            cx.coprime_h(*h)?;
            cx.p2(*h as i64, 1)?
        }
        Glynn1 => {
            cx.odd()?;
            3 * cx.p2(m + 1, 2)? + 4
        }
        InvSix => {
            cx.odd()?;
            cx.div(5 * cx.p2(m - 1, 1)? - 2, 3)?
        }
        _ => return Ok(None),
    };
    Ok(Some(cx.positive(d)?))
}

/// `(a, b, c)` exponents of the odd-m trinomials, item `a` through `k`.
fn dds_exponents(cx: &Ctx<'_>, item: char) -> Result<[i128; 3]> {
    cx.odd()?;
    let m = cx.m();
    let q = cx.p2(m, 1)?;
    let p = |n: i64, d: i64| cx.p2(n, d);
    Ok(match item {
        'a' => [q - 17, cx.div(q + 19, 3)?, 1],
        'b' => [q - p(m - 4, 1)? - 1, q - cx.div(p(m - 2, 1)? + 4, 3)?, 1],
        'c' => [q - 3, p(m + 3, 2)? + p(m + 1, 2)? + 4, 1],
        'd' => [q - p(m - 1, 2)? - 1, p(m - 1, 1)? - p(m - 1, 2)?, 1],
        'e' => [q - 2 - cx.div(p(m - 1, 1)? - 4, 3)?, q - 4 - cx.div(q - 8, 3)?, 1],
        'f' => [q - p(m + 1, 2)? + p(m - 1, 2)?, q - p(m + 1, 2)? - 1, 1],
        'g' => [q - 3 * (p(m + 1, 2)? - 1), p(m + 1, 2)? + p(m - 1, 2)? - 2, 1],
        'h' => [q - p(m - 2, 1)? - 1, p(m - 1, 1)? - 2, 1],
        'i' => [q - p(m + 3, 2)? - 3, p(m + 1, 2)? + 2, 1],
        'j' => [q - 3 * (p(m - 1, 2)? + 1), p(m - 1, 1)? - 1, 1],
        'k' => [q - 5, 6, 1],
        _ => return Err(cx.fail("unknown trinomial")),
    })
}

/// `λ` with `λ + λ^{2^{m/2}} = 1`, the smallest in encoding order.
pub fn caohu_default_lambda(field: &FieldSpec) -> Option<Elem> {
    let half = field.m() / 2;
    field.elements().find(|&l| l ^ field.frobenius(l, half) == 1)
}

/// The smallest `a` with `Tr_{GF(4)}(a) != 0`.
pub fn liyue_default_a(field: &FieldSpec) -> Option<Elem> {
    field.elements().find(|&a| field.rel_trace(a, 2).map(|t| t != 0).unwrap_or(false))
}

/// Instantiate `fam` on `field`.
pub fn instantiate(field: &FieldSpec, fam: &Family) -> Result<Func> {
    use Family::*;
    let cx = Ctx { field, name: fam.to_string() };
    let m = cx.m();
    if let Some(d) = power_exponent(field, fam)? {
        let c = match fam {
            Power { c, .. } => cx.elem(*c)?,
            _ => 1,
        };
        return cx.monomial(d as i128, c);
    }
    let name = cx.name.clone();
    let mu32 = field.m();
    Ok(match fam {
        Const0 => Func::new(name, mu32, |_, _| 0),
        Const1 => Func::new(name, mu32, |_, _| 1),
        Identity => Func::new(name, mu32, |_, x| x),
        Linear { c } => {
            let c = cx.elem(*c)?;
            Func::new(name, mu32, move |f, x| f.mul(c, x))
        }
        Poly { terms } => {
            let mut t = Vec::new();
            for &(e, c) in terms {
                t.push((e as u128, cx.elem(c)?));
            }
            let p = UnivariatePoly::new(field, t);
            Func::new(name, mu32, move |f, x| p.eval(f, x))
        }
        Segre { a } | Xd5 { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            cx.poly(vec![(6, 1), (4, a), (2, field.square(a))])?
        }
        Glynn2 { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let s = cx.p2(m + 1, 2)?;
            let t = if m % 4 == 1 { cx.p2(3 * m + 1, 4)? } else { cx.p2(m + 1, 4)? };
            // (ax)^t = a^t x^t.
            cx.poly(vec![(s + t, 1), (s, a), (t, field.pow(a, t))])?
        }
        Cherowitzo { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let e = cx.p2(m + 1, 2)?;
            cx.poly(vec![(e, 1), (e + 2, a), (3 * e + 4, field.pow(a, e + 2))])?
        }
        CherowitzoCode { b } => {
            cx.odd()?;
            let b = cx.elem(*b)?;
            let e = cx.p2(m + 1, 2)?;
            cx.poly(vec![(e, field.pow(b, e + 2)), (e + 2, field.pow(b, e + 1)), (3 * e + 4, 1)])?
        }
        Payne { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let sixth = field.exp_frac(1, 6).map_err(|_| cx.fail("6 not invertible modulo 2^m-1"))? as i128;
            let three = field.exp_frac(3, 6)? as i128;
            let five = field.exp_frac(5, 6)? as i128;
            cx.poly(vec![(five, 1), (three, a), (sixth, field.square(a))])?
        }
        Subiaco { a } => {
            let a = cx.elem(*a)?;
            cx.need(a != 0 && field.trace(field.inv_or_zero(a)) == 1, "need Tr(1/a) = 1")?;
            if m % 4 == 2 {
                cx.need(!field.in_subfield(a, 2), "need a outside GF(4) when m = 2 mod 4")?;
            }
            let a2 = field.square(a);
            let c = field.mul(a2, 1 ^ a ^ a2);
            let half = field.mult_order() as i128 / 2 + 1;
            Func::new(name, mu32, move |f, x| {
                let x2 = f.square(x);
                let x3 = f.mul(x2, x);
                let x4 = f.square(x2);
                let num = f.mul(a2, x4 ^ x) ^ f.mul(c, x3 ^ x2);
                let den = x4 ^ f.mul(a2, x2) ^ 1;
                f.mul(num, f.inv_or_zero(den)) ^ f.pow(x, half)
            })
        }
        SegreInverse { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let root = field.sqrt(a);
            let shift = field.pow(root, 3);
            let e = cx.div(5 * cx.p2(m - 1, 1)? - 2, 3)?;
            Func::new(name, mu32, move |f, x| f.pow(x ^ shift, e) ^ root)
        }
        SegreBarInverse1 | PayneInverse1 => {
            cx.odd()?;
            let h = cx.div(3 * cx.p2(2 * m, 1)? - 2, 5)? as u128;
            let outer: i128 = if matches!(fam, PayneInverse1) { 6 } else { cx.p2(m, 1)? - 2 };
            Func::new(name, mu32, move |f, x| f.pow(dickson_eval(f, h, 1, x), outer))
        }
        CherowitzoInverse { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let e = cx.p2(m + 1, 2)?;
            let ae = field.pow(a, e);
            let outer = cx.p2(m - 1, 2)? - 1;
            Func::new(name, mu32, move |f, x| {
                let inner = f.mul(a, f.pow(x, e + 1)) ^ f.mul(ae, f.pow(x, 3)) ^ x;
                f.mul(x, f.pow(inner, outer))
            })
        }
        CherowitzoInverseBar { a } => {
            cx.odd()?;
            let a = cx.elem(*a)?;
            let q = cx.p2(m, 1)?;
            let e = cx.p2(m + 1, 2)?;
            let ae = field.pow(a, e);
            let outer = cx.p2(m - 1, 2)? - 1;
            let (e1, e2, e3) = (cx.positive(q - e - 2)?, cx.positive(q - 4)?, cx.positive(q - 2)?);
            Func::new(name, mu32, move |f, x| {
                let inner = f.mul(a, f.pow(x, e1 as i128)) ^ f.mul(ae, f.pow(x, e2 as i128)) ^ f.pow(x, e3 as i128);
                f.pow(inner, outer)
            })
        }
        Dds { item } => {
            let [e1, e2, e3] = dds_exponents(&cx, *item)?;
            cx.poly(vec![(e1, 1), (e2, 1), (e3, 1)])?
        }
        J170 => {
            cx.need(m % 4 == 2, "m must be 2 mod 4")?;
            let t = cx.p2(m - 2, 2)? + cx.p2(m - 1, 1)?;
            cx.poly(vec![(1, 1), (t, 1), (t + 1, 1)])?
        }
        J171 => {
            cx.even()?;
            cx.poly(vec![(1, 1), (2, 1), (cx.p2(m, 1)? - cx.p2(m, 2)? + 1, 1)])?
        }
        Dds2 { item } => {
            let q = cx.p2(m, 1)?;
            let terms = match item {
                1 => {
                    cx.odd()?;
                    vec![(1, 1), (cx.p2(m + 1, 2)? - 1, 1), (q - cx.p2(m + 1, 2)? + 1, 1)]
                }
                2 => {
                    cx.odd()?;
                    vec![(1, 1), (cx.div(q + 1, 3)?, 1), (cx.div(2 * q - 1, 3)?, 1)]
                }
                3 => {
                    cx.even()?;
                    vec![(1, 1), (cx.p2(m + 2, 2)? - 1, 1), (q - cx.p2(m, 2)? + 1, 1)]
                }
                _ => return Err(cx.fail("unknown item")),
            };
            cx.poly(terms)?
        }
        ApnShift(inner) => {
            let f = instantiate(field, inner)?;
            crate::funlib::apn_shift(&f).renamed(name)
        }
        CaoHuA { lambda, mu } | CaoHuB { lambda, mu } => {
            cx.even()?;
            let half = field.m() / 2;
            let mu = cx.elem(*mu)?;
            cx.need(mu != 0 && field.in_subfield(mu, half), "mu must lie in GF(2^(m/2))*")?;
            let lambda = match lambda {
                Some(l) => cx.elem(*l)?,
                None => caohu_default_lambda(field).ok_or_else(|| cx.fail("no lambda with lambda + lambda^(2^(m/2)) = 1"))?,
            };
            cx.need(lambda ^ field.frobenius(lambda, half) == 1, "need lambda + lambda^(2^(m/2)) = 1")?;
            let d1 = cx.p2(m, 2)? + 1;
            let d2 = cx.p2(m, 2)? - 1;
            let variant_b = matches!(fam, CaoHuB { .. });
            Func::boolean(name, mu32, move |f, x| {
                let t1 = f.trace(f.mul(lambda, f.pow(x, d1)));
                let t2 = f.trace(f.mul(mu, f.pow(x, d2)));
                let tx = f.trace(x);
                let lead = if variant_b { (1 ^ tx) & t1 } else { t1 };
                (lead ^ (tx & t2)) == 1
            })
        }
        LiYue { a } => {
            cx.even()?;
            let a = match a {
                Some(a) => cx.elem(*a)?,
                None => liyue_default_a(field).ok_or_else(|| cx.fail("no a with nonzero GF(4) trace"))?,
            };
            cx.need(field.rel_trace(a, 2)? != 0, "need Tr_4(a) != 0")?;
            let d = cx.div(cx.p2(m, 1)? - 1, 3)?;
            Func::boolean(name, mu32, move |f, x| f.trace(f.mul(a, f.pow(x, d))) == 1)
        }
        Wdx { r, m_r } => {
            let rm = r.checked_pow(*m_r).ok_or_else(|| cx.fail("r^m_r overflows"))?;
            cx.need(rm >= 9, "need r^m_r >= 9")?;
            cx.need(two_is_primitive_root(rm), "2 must be a primitive root modulo r^m_r")?;
            cx.need(euler_phi(rm) == field.m() as u64, "field degree must equal phi(r^m_r)")?;
            let d = cx.div(field.mult_order() as i128, rm as i128)?;
            Func::boolean(name, mu32, move |f, x| x != 0 && f.trace(f.pow(x, d)) == 0)
        }
        _ => unreachable!("power families handled above"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn func(m: u32, s: &str) -> (FieldSpec, Func) {
        let f = FieldSpec::new(m).unwrap();
        let g = instantiate(&f, &s.parse().unwrap()).unwrap();
        (f, g)
    }

    #[test]
    fn roundtrip_names() {
        for s in [
            "gold:h=1", "segre:a=0x5", "dds:k", "dds2:3", "apn-shift(kasami:h=2)", "wdx:r=3,mr=2",
            "caohu-a:mu=0x1", "liyue", "power:d=7,c=0x3", "poly:t=0x1*6+0x3*1", "dfhr:h=1,sign=-",
        ] {
            let fam: Family = s.parse().unwrap();
            assert_eq!(fam.to_string().parse::<Family>().unwrap(), fam, "{s}");
        }
        assert!(matches!("nope".parse::<Family>(), Err(Error::UnknownFamily(_))));
        assert!("gold:h=1,z=2".parse::<Family>().is_err());
        assert!("dds:z".parse::<Family>().is_err());
    }

    #[test]
    fn translation_and_segre() {
        let (f, t) = func(4, "translation:h=1");
        assert!(f.elements().all(|x| t.eval(&f, x) == f.square(x)));
        let (f, s) = func(5, "segre:a=0");
        assert!(f.elements().all(|x| s.eval(&f, x) == f.pow(x, 6)));
    }

    #[test]
    fn inapplicable_conditions() {
        let f = FieldSpec::new(6).unwrap();
        for s in ["welch", "segre:a=1", "glynn1", "niho-a", "translation:h=2", "dds:a", "j170:"] {
            let fam: Family = s.trim_end_matches(':').parse().unwrap();
            let r = instantiate(&f, &fam);
            if s == "j170:" {
                assert!(r.is_ok());
            } else {
                assert!(matches!(r, Err(Error::Inapplicable { .. })), "{s}");
            }
        }
    }

    #[test]
    fn payne_exponents() {
        let f = FieldSpec::new(5).unwrap();
        assert_eq!(f.exp_frac(5, 6).unwrap(), 5 * 26 % 31);
        assert_eq!(f.exp_frac(3, 6).unwrap(), 16);
        let (_, p) = func(5, "payne:a=1");
        for x in f.elements() {
            let want = f.pow(x, (5 * 26 % 31) as i128) ^ f.pow(x, 16) ^ f.pow(x, 26);
            assert_eq!(p.eval(&f, x), want);
        }
    }

    #[test]
    fn exponent_formulas() {
        let f5 = FieldSpec::new(5).unwrap();
        let e = |f: &FieldSpec, s: &str| power_exponent(f, &s.parse().unwrap()).unwrap().unwrap();
        assert_eq!(e(&f5, "kasami:h=2"), 13);
        assert_eq!(e(&f5, "welch"), 7);
        assert_eq!(e(&f5, "niho-a"), 4 + 2 - 1);
        assert_eq!(e(&f5, "inverse"), 30);
        assert_eq!(e(&f5, "glynn1"), 3 * 8 + 4);
        assert_eq!(e(&f5, "inv6"), 26);
        let f7 = FieldSpec::new(7).unwrap();
        assert_eq!(e(&f7, "niho-b"), 8 + 32 - 1);
        let f8 = FieldSpec::new(8).unwrap();
        assert_eq!(e(&f8, "niho4"), 31);
        assert_eq!(e(&f8, "niho4b"), 17 * 3 + 2);
        assert_eq!(e(&f8, "hr05:h=1"), 256 + 4 - 32 - 1);
        assert_eq!(e(&f8, "dobbertin:h=1"), 31);
        let f6 = FieldSpec::new(6).unwrap();
        assert_eq!(e(&f6, "cusick-dobbertin-1"), 8 + 4 + 1);
        assert_eq!(e(&f6, "cusick-dobbertin-2"), 16 + 3);
        assert_eq!(e(&f6, "helleseth"), 11);
        assert_eq!(e(&f5, "hhkzlj:l=1,h=1"), 11);
        assert!(power_exponent(&f6, &"hhkzlj:l=1,h=1".parse().unwrap()).is_err());
    }

    #[test]
    fn dds_k_is_printed_trinomial() {
        let (f, g) = func(5, "dds:k");
        for x in f.elements() {
            assert_eq!(g.eval(&f, x), f.pow(x, 27) ^ f.pow(x, 6) ^ x);
        }
    }

    #[test]
    fn boolean_families() {
        let (f, w) = func(6, "wdx:r=3,mr=2");
        assert!(w.is_boolean());
        let n = f.elements().filter(|&x| w.eval(&f, x) == 1).count();
        assert_eq!(n, 49);
        let (f, l) = func(4, "liyue");
        assert_eq!(l.truth_table(&f).n_f(), (64 - 4) / 6);
        let (f, c) = func(4, "caohu-a:mu=1");
        assert!(c.is_boolean());
        assert!(caohu_default_lambda(&f).is_some());
    }
}

//! Second routes for each computed quantity, compared with the main one.

use std::collections::BTreeMap;

use bfcodes::boolfun::{walsh_direct, walsh_transform, TruthTable};
use bfcodes::codes::{code_from_defining_set, expand_complement_auto, weight_dist_via_walsh, CodeSummary, DefiningSet};
use bfcodes::diffsets::{additive_profile, difference_function, is_multiplicative_difference_set, multiplicative_profile};
use bfcodes::funlib::{dickson, dickson_eval, image_set, instantiate, Family, Func};
use bfcodes::gf2m::{Elem, FieldSpec};
use bfcodes::opoly::{is_o_polynomial, Mode};

fn fam(fs: &FieldSpec, s: &str) -> Func {
    instantiate(fs, &s.parse::<Family>().unwrap()).unwrap()
}

/// Codewords written out one coordinate at a time.
fn brute_code(fs: &FieldSpec, d: &[Elem], with_allone: bool) -> BTreeMap<u64, u64> {
    let mut seen = std::collections::BTreeSet::new();
    for x in fs.elements() {
        for b in 0..=with_allone as u32 {
            let word: Vec<u32> = d.iter().map(|&y| fs.trace_literal(fs.mul(x, y)) ^ b).collect();
            seen.insert(word);
        }
    }
    let mut dist = BTreeMap::new();
    for w in seen {
        *dist.entry(w.iter().map(|&b| b as u64).sum()).or_insert(0) += 1;
    }
    dist
}

const FAMILIES: &[&str] = &["gold:h=1", "kasami:h=2", "inverse", "welch", "segre:a=0x3", "glynn1", "j171", "dds:c", "translation:h=2"];

#[test]
fn code_three_routes() {
    for m in 3u32..=9 {
        let fs = FieldSpec::new(m).unwrap();
        for s in FAMILIES {
            let Ok(f) = instantiate(&fs, &s.parse::<Family>().unwrap()) else { continue };
            for d in [f.truth_table(&fs).support(), image_set(&fs, &f), image_set(&fs, &f).without_zero()] {
                if d.is_empty() {
                    continue;
                }
                let direct = code_from_defining_set(&fs, &d).unwrap();
                let walsh = weight_dist_via_walsh(&fs, &TruthTable::indicator(&fs, &d)).unwrap();
                assert_eq!(direct, walsh, "m={m} {s}");
                if m <= 7 {
                    assert_eq!(direct.distribution, brute_code(&fs, d.elements(), false), "m={m} {s}");
                }
            }
        }
    }
}

#[test]
fn complement_expansion_against_brute_force() {
    for m in [3u32, 5, 7] {
        let fs = FieldSpec::new(m).unwrap();
        for s in ["segre:a=0x0", "glynn1", "gold:h=1"] {
            let d = image_set(&fs, &fam(&fs, s));
            let big: CodeSummary = expand_complement_auto(&code_from_defining_set(&fs, &d).unwrap());
            assert_eq!(big.distribution, brute_code(&fs, d.elements(), true), "m={m} {s}");
        }
    }
}

#[test]
fn fwht_against_definition() {
    for m in 1u32..=10 {
        let fs = FieldSpec::new(m).unwrap();
        for s in ["gold:h=1", "inverse", "const1", "identity"] {
            let Ok(f) = instantiate(&fs, &s.parse::<Family>().unwrap()) else { continue };
            let tt = f.truth_table(&fs);
            assert_eq!(walsh_transform(&fs, &tt).values(), walsh_direct(&fs, &tt).values(), "m={m} {s}");
        }
    }
}

#[test]
fn table_multiply_against_clmul() {
    for m in [2u32, 7, 13, 20, 21, 24] {
        let fs = FieldSpec::new(m).unwrap();
        let top = (1u64 << m) - 1;
        for i in 0..2000u64 {
            let a = ((i.wrapping_mul(0x9e3779b97f4a7c15)) & top) as Elem;
            let b = ((i.wrapping_mul(0xc2b2ae3d27d4eb4f) >> 7) & top) as Elem;
            assert_eq!(fs.mul(a, b), fs.mul_clmul(a, b), "m={m}");
            assert_eq!(fs.pow(a, 7), fs.pow_literal(a, 7));
            assert_eq!(fs.trace(a), fs.trace_literal(a));
        }
    }
}

#[test]
fn opoly_modes_agree_on_catalog_and_non_examples() {
    for m in [3u32, 5, 7] {
        let fs = FieldSpec::new(m).unwrap();
        for s in ["segre:a=0x1", "glynn1", "payne:a=0x2", "cherowitzo:a=0x1", "translation:h=1", "power:d=3", "power:d=5", "inverse", "identity"] {
            let Ok(f) = instantiate(&fs, &s.parse::<Family>().unwrap()) else { continue };
            let r = is_o_polynomial(&fs, &f, Mode::Both);
            assert!(!r.equivalence_violated(), "m={m} {s}");
            let def = is_o_polynomial(&fs, &f, Mode::Definition).is_o_polynomial;
            let two = is_o_polynomial(&fs, &f, Mode::TwoToOne).is_o_polynomial;
            assert_eq!(def, two, "m={m} {s}");
        }
    }
}

#[test]
fn dickson_expansion_against_recurrence() {
    let fs = FieldSpec::new(7).unwrap();
    for h in 1u64..=12 {
        for a in [0, 1, 5, 77] {
            let p = dickson(&fs, h, a);
            for x in fs.elements() {
                assert_eq!(p.eval(&fs, x), dickson_eval(&fs, h as u128, a, x), "h={h} a={a} x={x}");
            }
        }
    }
}

#[test]
fn difference_profiles_against_pairs() {
    let fs = FieldSpec::new(6).unwrap();
    let d = fam(&fs, "j171");
    let d = image_set(&fs, &d).without_zero();
    let add = additive_profile(&fs, &d);
    let mul = multiplicative_profile(&fs, &d).unwrap();
    for x in fs.elements() {
        let pairs = d.elements().iter().filter(|&&y| d.contains(y ^ x)).count() as u64;
        assert_eq!(add[x as usize], pairs);
        assert_eq!(difference_function(&d, x), pairs);
    }
    // Quotient counts indexed by the quotient, pairs d1 = d2 excluded.
    for q in 2..fs.order() as Elem {
        let pairs = d.elements().iter().filter(|&&y| d.contains(fs.mul(q, y))).count() as u64;
        assert_eq!(mul[q as usize], pairs, "q={q}");
    }
    assert_eq!(mul[1], 0);
    let r = is_multiplicative_difference_set(&fs, &d).unwrap();
    assert!(r.verdict);
    assert_eq!(r.params, vec![63, d.len() as u64, mul[2]]);
}

#[test]
fn explicit_set_round_trip() {
    let fs = FieldSpec::new(4).unwrap();
    let d = DefiningSet::from_elements(&fs, [1, 2, 4, 8]).unwrap();
    let c = code_from_defining_set(&fs, &d).unwrap();
    assert_eq!(c.distribution, brute_code(&fs, d.elements(), false));
}

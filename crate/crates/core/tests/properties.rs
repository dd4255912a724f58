use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use bfcodes::boolfun::{walsh_transform, TruthTable};
use bfcodes::codes::{code_from_defining_set, weight_dist_via_walsh, DefiningSet};
use bfcodes::funlib::{instantiate, Family, Func};
use bfcodes::gf2m::{gcd, Elem, FieldSpec};
use bfcodes::opoly::{closure_transforms, is_o_polynomial, Mode};

fn field_and<const N: usize>() -> impl Strategy<Value = (u32, [Elem; N])> {
    (1u32..=16).prop_flat_map(|m| (Just(m), proptest::array::uniform::<_, N>(0..(1 as Elem) << m)))
}

fn small_field_and_table() -> impl Strategy<Value = (u32, Vec<bool>)> {
    (1u32..=9).prop_flat_map(|m| (Just(m), proptest::collection::vec(any::<bool>(), 1usize << m)))
}

fn gf(m: u32) -> FieldSpec {
    FieldSpec::new(m).unwrap()
}

proptest! {
    #[test]
    fn field_axioms((m, [a, b, c]) in field_and::<3>()) {
        let fs = gf(m);
        prop_assert_eq!(fs.mul(a, b), fs.mul(b, a));
        prop_assert_eq!(fs.mul(fs.mul(a, b), c), fs.mul(a, fs.mul(b, c)));
        prop_assert_eq!(fs.mul(a, b ^ c), fs.mul(a, b) ^ fs.mul(a, c));
        prop_assert_eq!(fs.mul(a, 1), a);
        if a != 0 {
            prop_assert_eq!(fs.mul(a, fs.inv(a).unwrap()), 1);
        }
    }

    #[test]
    fn frobenius_is_additive((m, [a, b]) in field_and::<2>(), k in 0u32..16) {
        let fs = gf(m);
        prop_assert_eq!(fs.frobenius(a ^ b, k), fs.frobenius(a, k) ^ fs.frobenius(b, k));
        prop_assert_eq!(fs.frobenius(a, fs.m()), a);
        prop_assert_eq!(fs.square(fs.sqrt(a)), a);
    }

    #[test]
    fn trace_of_square((m, [a, b]) in field_and::<2>()) {
        let fs = gf(m);
        prop_assert_eq!(fs.trace(fs.square(a)), fs.trace(a));
        prop_assert_eq!(fs.trace(a ^ b), fs.trace(a) ^ fs.trace(b));
        prop_assert!(fs.trace(a) <= 1);
    }

    #[test]
    fn exp_frac_inverts((m, [a]) in field_and::<1>(), num in -1000i128..1000, den in 1i128..200) {
        let fs = gf(m);
        let n = fs.mult_order() as i128;
        match fs.exp_frac(num, den) {
            Ok(e) => {
                prop_assert_eq!((e as i128 * den - num).rem_euclid(n), 0);
                // x -> x^e undoes x -> x^den on powers x^num.
                prop_assert_eq!(fs.pow(fs.pow(a, e as i128), den), fs.pow(a, num.rem_euclid(n)));
            }
            Err(_) => prop_assert!(gcd(den.rem_euclid(n) as u64, n as u64) != 1),
        }
    }

    #[test]
    fn walsh_parseval_and_sum((m, bits) in small_field_and_table()) {
        let fs = gf(m);
        let tt = TruthTable::from_evaluator(&fs, |x| bits[x as usize]);
        let ws = walsh_transform(&fs, &tt);
        let q = fs.order() as i64;
        prop_assert!(ws.parseval_holds());
        prop_assert_eq!(ws.values().iter().map(|&v| (v as i64).pow(2)).sum::<i64>(), q * q);
        let sign = if bits[0] { -1 } else { 1 };
        prop_assert_eq!(ws.values().iter().map(|&v| v as i64).sum::<i64>(), q * sign);
    }

    #[test]
    fn code_routes_agree_on_random_sets((m, bits) in small_field_and_table()) {
        let fs = gf(m);
        let d = DefiningSet::collect(&fs, fs.elements().filter(|&x| bits[x as usize]));
        prop_assume!(!d.is_empty());
        let direct = code_from_defining_set(&fs, &d).unwrap();
        let walsh = weight_dist_via_walsh(&fs, &TruthTable::indicator(&fs, &d)).unwrap();
        prop_assert_eq!(direct.total(), 1u64 << direct.k);
        prop_assert_eq!(direct.n, d.len() as u64);
        prop_assert_eq!(direct, walsh);
    }

    #[test]
    fn closure_preserves_o_polynomials(m in 3u32..=9, h in 1u32..9, pick in 0usize..3) {
        let fs = FieldSpec::new(m).unwrap();
        let s = match pick {
            0 => {
                prop_assume!(h < m && gcd(h as u64, m as u64) == 1);
                format!("translation:h={h}")
            }
            1 => "glynn1".to_string(),
            _ => "segre:a=0x0".to_string(),
        };
        let Ok(f) = instantiate(&fs, &s.parse::<Family>().unwrap()) else { return Ok(()) };
        prop_assume!(is_o_polynomial(&fs, &f, Mode::Both).is_o_polynomial);
        for g in closure_transforms(&fs, &f).unwrap().all() {
            prop_assert!(is_o_polynomial(&fs, g, Mode::Both).is_o_polynomial, "{} m={}", g.name(), m);
        }
    }

    #[test]
    fn opoly_modes_agree_on_random_maps(m in 2u32..=7, seed in any::<u64>(), perm in any::<bool>()) {
        let fs = FieldSpec::new(m).unwrap();
        let n = fs.order();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut table: Vec<Elem> = (0..n as Elem).collect();
        if perm {
            table[1..].shuffle(&mut rng);
        } else {
            table.iter_mut().for_each(|v| *v = rng.gen_range(0..n as Elem));
        }
        let f = Func::from_table("random", m, table);
        let both = is_o_polynomial(&fs, &f, Mode::Both);
        prop_assert!(!both.equivalence_violated());
        prop_assert_eq!(
            is_o_polynomial(&fs, &f, Mode::Definition).is_o_polynomial,
            is_o_polynomial(&fs, &f, Mode::TwoToOne).is_o_polynomial
        );
    }
}

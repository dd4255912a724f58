//! Dickson polynomials of the first kind in characteristic 2.

use crate::funlib::UnivariatePoly;
use crate::gf2m::{Elem, FieldSpec};

/// Largest order for which the coefficient list is expanded explicitly.
pub const MAX_EXPANDED_ORDER: u64 = 1 << 20;

/// `C(n, k) mod 2` by Lucas: odd iff the bits of `k` are a subset of those of `n`.
#[inline]
pub fn binom_odd(n: u64, k: u64) -> bool {
    k <= n && k & !n == 0
}

/// Parity of the integer coefficient `h/(h-i) * C(h-i, i)` of `x^{h-2i}`.
///
/// For `i >= 1` this equals `C(h-i, i) + C(h-i-1, i-1)`.
pub fn coefficient_odd(h: u64, i: u64) -> bool {
    if i == 0 {
        return true;
    }
    binom_odd(h - i, i) ^ binom_odd(h - i - 1, i - 1)
}

/// `D_h(x, a)` as an explicit polynomial. The sign `(-a)^i` is `a^i` here.
pub fn dickson(field: &FieldSpec, h: u64, a: Elem) -> UnivariatePoly {
    assert!(h >= 1, "Dickson order must be positive");
    assert!(h <= MAX_EXPANDED_ORDER, "order {h} too large to expand; use dickson_eval");
    let mut terms = Vec::new();
    for i in 0..=h / 2 {
        if coefficient_odd(h, i) {
            terms.push(((h - 2 * i) as u128, field.pow(a, i as i128)));
        }
    }
    UnivariatePoly::new(field, terms)
}

/// `D_h(x, a)` at a single point for any order, via the recurrence
/// `D_h = x D_{h-1} + a D_{h-2}`, `D_0 = 0`, `D_1 = x`, lifted to a 2x2 matrix power.
pub fn dickson_eval(field: &FieldSpec, h: u128, a: Elem, x: Elem) -> Elem {
    if h == 0 {
        return 0;
    }
    // [D_k, D_{k-1}] = M^{k-1} [D_1, D_0] with M = [[x, a], [1, 0]].
    type M = [[Elem; 2]; 2];
    let mul = |p: &M, q: &M| -> M {
        let f = |i: usize, j: usize| field.mul(p[i][0], q[0][j]) ^ field.mul(p[i][1], q[1][j]);
        [[f(0, 0), f(0, 1)], [f(1, 0), f(1, 1)]]
    };
    let mut acc: M = [[1, 0], [0, 1]];
    let mut base: M = [[x, a], [1, 0]];
    let mut e = h - 1;
    while e != 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    field.mul(acc[0][0], x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        let f = FieldSpec::new(5).unwrap();
        let a = 7;
        assert_eq!(dickson(&f, 1, a).terms(), &[(1, 1)]);
        let d5 = dickson(&f, 5, a);
        assert_eq!(d5.terms(), &[(1, f.square(a)), (3, a), (5, 1)]);
    }

    #[test]
    fn recurrence_matches_closed_form() {
        let f = FieldSpec::new(6).unwrap();
        for a in [0, 1, 9, 33] {
            for x in f.elements() {
                let mut prev = 0;
                let mut cur = x;
                for h in 1..=12u64 {
                    assert_eq!(dickson(&f, h, a).eval(&f, x), cur, "h={h} a={a} x={x}");
                    assert_eq!(dickson_eval(&f, h as u128, a, x), cur);
                    let next = f.mul(x, cur) ^ f.mul(a, prev);
                    prev = cur;
                    cur = next;
                }
            }
        }
    }

    #[test]
    fn parity_formula_against_integers() {
        // h/(h-i) * C(h-i, i) computed over the integers.
        fn binom(n: u64, k: u64) -> u128 {
            (0..k).fold(1u128, |acc, j| acc * (n - j) as u128 / (j + 1) as u128)
        }
        for h in 1..40u64 {
            for i in 0..=h / 2 {
                let exact = h as u128 * binom(h - i, i) / (h - i) as u128;
                assert_eq!(exact * (h - i) as u128, h as u128 * binom(h - i, i));
                assert_eq!(exact % 2 == 1, coefficient_odd(h, i), "h={h} i={i}");
            }
        }
    }
}

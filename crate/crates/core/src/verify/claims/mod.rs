//! The registry table.

mod images;
mod opolys;
mod supports;

use super::{Claim, Instances, Kind, Params, Runner};
use Kind::*;

const fn c(id: &'static str, kind: Kind, anchor: &'static str, checks: &'static str, max_m: u32, instances: Instances, run: Runner) -> Claim {
    Claim { id, kind, anchor, checks, max_m, instances, run }
}

fn none(_m: u32) -> Vec<Params> {
    Vec::new()
}

use images as i;
use opolys as o;
use supports as s;

pub static REGISTRY: &[Claim] = &[
    // Codes from supports of Boolean functions.
    c("thm-BooleanCodes", Theorem, "thm-BooleanCodes", "random f with 2n_f + fhat(w) != 0: distribution read off the Walsh spectrum", 12, s::boolean_codes_instances, s::boolean_codes),
    c("thm-BooleanCodesG", Theorem, "thm-BooleanCodesG", "random f inside a subspace: spectrum multiset folded by its zero multiplicity e, dimension m - log2 e", 12, s::boolean_codes_instances, s::boolean_codes_g),
    c("bent-ds", Theorem, "eqn-MenonHadamardPara", "Tr(a x^3) is bent exactly when its support is a Menon difference set", 12, s::bent_ds_instances, s::bent_ds),
    c("thm-bentcodes", Corollary, "thm-bentcodes", "Tr(a x^3): two-weight table and minimum distance hold exactly when f is bent", 12, s::bent_codes_instances, s::bent_codes),
    c("thm-part1222", Theorem, "thm-part1222", "supports that are additive difference sets give the two-weight difference-set code", 12, s::part1222_instances, s::part1222),
    c("thm-semibentcodes", Corollary, "thm-semibentcodes", "three-weight table and minimum distance hold exactly when f is semibent", 13, s::semibent_instances, s::semibent_codes),
    c("lem-absize", Theorem, "lem-absize", "support size of Tr(g) for almost bent g agrees with lambda_g(1, 0)", 13, s::ab_instances, s::absize),
    c("thm-abcodes", Corollary, "thm-abcodes", "almost bent g with Tr(g(0)) = 0: semibent table at the support size given by the lemma", 13, s::ab_instances, s::ab_codes),
    c("abcodes", Theorem, "thm-abcodes", "listed almost bent monomials: AB, permutation, hyperoval table for the support code", 13, s::ab_instances, s::ab_list),
    c("thm-CodeQBFs", Theorem, "thm-CodeQBFs", "random quadratic forms with r_f > 2: Walsh counts and code table by rank and fhat(0)", 12, s::qbf_instances, s::qbf_codes),
    c("3wt-thm", Theorem, "tab-3wtc1", "listed power maps at even m: three-valued spectrum and three-weight table", 12, s::three_weight_instances, s::three_weight),
    c("4wt-bullets/1", Theorem, "tab-4valuespectrum1", "first Niho exponent, m = 0 mod 4: four-weight table, spectrum case 1", 12, s::four_weight_instances::<1>, s::four_weight::<1>),
    c("4wt-bullets/2", Theorem, "tab-4valuespectrum3", "first Niho exponent, m = 2 mod 4: shorter length, spectrum case 3", 12, s::four_weight_instances::<2>, s::four_weight::<2>),
    c("4wt-bullets/3", Theorem, "tab-4valuespectrum2", "second Niho exponent, m = 0 mod 4: spectrum case 2", 12, s::four_weight_instances::<3>, s::four_weight::<3>),
    c("4wt-bullets/4", Theorem, "tab-4valuespectrum1", "Dobbertin exponent, m = 0 mod 4: spectrum case 1", 12, s::four_weight_instances::<4>, s::four_weight::<4>),
    c("4wt-bullets/5", Theorem, "tab-4valuespectrum3", "Dobbertin exponent, m = 2 mod 4: spectrum case 3", 12, s::four_weight_instances::<5>, s::four_weight::<5>),
    c("4wt-bullets/6", Theorem, "tab-4valuespectrum1", "Helleseth-Rosendahl exponent: spectrum case 1", 12, s::four_weight_instances::<6>, s::four_weight::<6>),
    c("4wt-bullets/7", ReportMode, "tab-4valuespectrum1", "Dobbertin-Felke-Helleseth-Rosendahl exponents: distribution reported", 12, s::four_weight_instances::<7>, s::four_weight::<7>),
    c("4wt-bullets/8", ReportMode, "tab-4valuespectrum1", "exponents d(2^l + 1) = 2^h: distribution reported", 12, s::four_weight_instances::<8>, s::four_weight::<8>),
    c("5wt/helleseth", ReportMode, "tab-4valuespectrum3", "x^(2^(m/2)+3): length 2^(m-1), dimension m, five weights", 12, none, s::helleseth),
    c("5wt/liyue", ReportMode, "tab-4valuespectrum3", "Tr(a x^((2^m-1)/3)): length (2^(m+2)-4)/6, dimension m, two weights", 12, s::liyue_instances, s::liyue),
    c("5wt/caohu-a", ReportMode, "tab-4valuespectrum3", "first trace combination: five weights", 12, s::caohu_instances, s::caohu::<false>),
    c("5wt/caohu-b", ReportMode, "tab-4valuespectrum3", "second trace combination: five weights", 12, s::caohu_instances, s::caohu::<true>),
    c("5wt/quetal", ReportMode, "tab-4valuespectrum3", "functions not given explicitly; always inapplicable", 12, none, s::quetal),
    c("thm-WDX", Theorem, "thm-WDX", "cyclotomic support with 2 primitive modulo r^m_r: two-weight table", 12, s::wdx_instances, s::wdx),
    c("rds", Theorem, "eqn-wdxD", "bent graph relative difference set: parameters, character values, admissible weights", 13, none, s::rds),
    c("image-star", Theorem, "conj-DDSs", "removing 0 from an image shortens the code by one and keeps the distribution", 12, s::image_star_instances, s::image_star),
    // O-polynomials.
    c("thm-opoly2to1", Theorem, "thm-opoly2to1", "definition test and 2-to-1 test give the same verdict", 11, o::opoly2to1_instances, o::opoly2to1),
    c("thm-basicproperty", Theorem, "thm-basicproperty", "inverse, Frobenius twists, bar and unit shift of an o-polynomial are o-polynomials", 9, o::known_instances, o::basic_property),
    c("thm-basicproperty2", Theorem, "thm-basicproperty2", "every exponent of the orbit of an o-monomial gives an o-polynomial", 11, o::basic_property2_instances, o::basic_property2),
    c("opoly-normalise", Theorem, "sec-opolycodes", "f(1) != 0 and f(1)^-1 f is an o-polynomial with value 1 at 1", 11, o::normalise_instances, o::normalise_row),
    c("thm-translation", Theorem, "sec-opolycodes", "x^(2^h) with gcd(h, m) = 1 is an o-polynomial", 11, o::h_instances, o::translation_opoly),
    c("trans-remarks/inverse", Theorem, "sec-opolycodes", "inverse of x^(2^h) is x^(2^(m-h))", 14, o::h_instances, o::translation_inverse),
    c("trans-remarks/bar", Theorem, "sec-opolycodes", "bar of x^(2^h) as printed, x^(2^m-2^(m-h))", 14, o::h_instances, o::translation_bar),
    c("thm-translationcodes", Theorem, "thm-translationcodes", "image of x^(2^h) + ux: one-weight [2^(m-1), m-1, 2^(m-2)]", 12, o::translation_codes_instances, o::translation_codes),
    c("thm-segre", Theorem, "sec-opolycodes", "x^6 + a x^4 + a^2 x^2 is an o-polynomial for odd m and every a", 11, o::a_instances_segre, o::segre_opoly),
    c("segre-identity", Theorem, "sec-opolycodes", "Segre_a equals (x + sqrt a)^6 + sqrt(a)^3 as printed", 13, o::a_instances_segre, o::segre_identity),
    c("segre-remarks/xd5", Theorem, "sec-opolycodes", "Segre_a = x D5(x, a) = a^2 D5(1/x, 1/a) x^7", 13, o::a_instances_segre, o::segre_xd5),
    c("segre-remarks/bar", Theorem, "sec-opolycodes", "bar of Segre_a is D5(1/x, a) and its expansion", 13, o::a_instances_segre, o::segre_bar),
    c("segre-remarks/inverse", Theorem, "sec-opolycodes", "compositional inverse of Segre_a as printed", 13, o::a_instances_segre, o::segre_inverse),
    c("thm-jan9", Theorem, "thm-jan9", "inverse of bar(Segre_1) via the Dickson polynomial of order (3*2^(2m)-2)/5", 13, none, o::jan9),
    c("thm-glynn1", Theorem, "sec-opolycodes", "x^(3*2^((m+1)/2)+4) is an o-polynomial for odd m", 11, none, o::glynn1_opoly),
    c("glynn-code-conj", Conjecture, "tab-semibentfcode6", "first Glynn monomial plus ux: hyperoval table at m = 5, 7; five weights from m = 9", 11, o::u_instances::<5>, o::glynn_code),
    c("thm-glynn2", Theorem, "sec-opolycodes", "second Glynn family is an o-polynomial for every a", 11, o::a_instances_glynn2, o::glynn2_opoly),
    c("glynn2-identity", Theorem, "sec-opolycodes", "shift identity for the second Glynn family as printed, m = 1 mod 4", 13, o::a_instances_glynn2, o::glynn2_identity),
    c("thm-hyperovalDS", Theorem, "thm-hyperovalDS", "x^rho + ux 2-to-1 with gcd(2^kappa + 1, 2^m - 1) = 1: hyperoval table", 12, o::hyperoval_ds_instances, o::hyperoval_ds),
    c("xd5-thm", Theorem, "tab-semibentfcode6", "x D5(x, a) + ux: [2^(m-1), m] with the hyperoval table", 12, o::xd5_instances, o::xd5),
    c("inv6-thm", Theorem, "tab-semibentfcode6", "x^(1/6) + ux for every u: hyperoval table", 12, o::inv6_instances, o::inv6),
    c("conj-cherowitzo", Conjecture, "sec-opolycodes", "extended Cherowitzo trinomial is an o-polynomial for every a", 11, o::a_instances_cherowitzo, o::cherowitzo_opoly),
    c("cherowitzo-remarks/bar", Theorem, "sec-opolycodes", "expansion of the bar of the Cherowitzo trinomial", 13, o::a_instances_cherowitzo, o::cherowitzo_bar_remark),
    c("cherowitzo-remarks/inverse1", Theorem, "sec-opolycodes", "inverse of the original Cherowitzo polynomial", 13, none, o::cherowitzo_inverse1),
    c("thm-cherowitzo-inverse", Theorem, "sec-opolycodes", "compositional inverse of Cherowitzo_a", 13, o::a_instances_cherowitzo, o::cherowitzo_inverse),
    c("thm-cherowitzo-bar", Theorem, "sec-opolycodes", "closed form for the bar of Cherowitzo_a as printed", 13, o::a_instances_cherowitzo, o::cherowitzo_bar),
    c("cherowitzo-code-conj", Conjecture, "sec-opolycodes", "Cherowitzo-type trinomial plus ux: at most five weights at m = 5, 7, five from m = 9", 11, o::b_u_instances, o::cherowitzo_code),
    c("conj-payne", Conjecture, "eqn-PayneInverse", "extended Payne trinomial is an o-polynomial for every a", 11, o::a_instances_payne, o::payne_opoly),
    c("payne-remarks/xd5", Theorem, "eqn-PayneInverse", "Payne_a = x D5(x^(1/6), a) as printed", 13, o::a_instances_payne, o::payne_xd5),
    c("payne-remarks/bar", Theorem, "eqn-PayneInverse", "bar(Payne_a) = a^(2^m-3) Payne_(1/a) as printed", 13, o::a_instances_payne, o::payne_bar),
    c("payne-remarks/exponents", Theorem, "eqn-PayneInverse", "1/6 modulo 2^m - 1 and the expanded exponents", 13, o::a_instances_payne, o::payne_exponents),
    c("thm-payne-inverse", Theorem, "eqn-PayneInverse", "inverse of Payne_1 by Dickson polynomials; it and its bar are o-polynomials", 11, none, o::payne_inverse),
    c("payne-code-conj", Conjecture, "eqn-PayneInverse", "Payne trinomial plus ux for m >= 7: three or five weights", 11, o::b_u_instances, o::payne_code),
    c("thm-subiaco", Theorem, "thm-Subiaco", "Subiaco_a is an o-polynomial whenever Tr(1/a) = 1 (and a outside GF(4) if m = 2 mod 4)", 11, o::subiaco_instances, o::subiaco),
    c("cor-subiaco", Corollary, "cor-Subiaco", "literal Subiaco_1 for odd m equals the family and is an o-polynomial", 11, none, o::subiaco_literal),
    c("subiaco-codes", ReportMode, "cor-Subiaco", "Subiaco plus ux: distribution and minimum distance reported", 11, o::subiaco_codes_instances, o::subiaco_codes),
    // Images of APN shifts, trinomials, expansion.
    c("apn-welch-conj", Conjecture, "sec-opolycodes", "Welch shift: three weights at m = 5, 7, five from m = 9", 13, none, i::apn_welch),
    c("apn-kasami-conj", Conjecture, "tab-semibentfcode6", "Kasami shift: one weight for h = 1, three or five for odd m, hyperoval table for h = 3", 13, i::kasami_h_instances, i::apn_kasami),
    c("hertel", Theorem, "sec-opolycodes", "x^d + (x+1)^d for the Kasami exponent is 2^gcd(h, m)-to-1", 14, i::hertel_instances, i::hertel),
    c("apn-gold-thm", Theorem, "sec-opolycodes", "Gold shift: one-weight [2^(m-1), m-1, 2^(m-2)]", 13, i::gold_h_instances, i::apn_gold),
    c("apn-comments/inverse", ReportMode, "sec-opolycodes", "inverse shift: length 2^(m-1), dimension m, at most m weights", 13, none, i::apn_inverse),
    c("apn-comments/niho-a", ReportMode, "sec-opolycodes", "Niho shift, m = 1 mod 4: length 2^(m-1), dimension m", 13, none, i::apn_niho::<false>),
    c("apn-comments/niho-b", ReportMode, "sec-opolycodes", "Niho shift, m = 3 mod 4: length 2^(m-1), dimension m", 13, none, i::apn_niho::<true>),
    c("conj-DDSs/a", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'a'>),
    c("conj-DDSs/b", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'b'>),
    c("conj-DDSs/c", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'c'>),
    c("conj-DDSs/d", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'d'>),
    c("conj-DDSs/e", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'e'>),
    c("conj-DDSs/f", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'f'>),
    c("conj-DDSs/g", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'g'>),
    c("conj-DDSs/h", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'h'>),
    c("conj-DDSs/i", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'i'>),
    c("conj-DDSs/j", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'j'>),
    c("conj-DDSs/k", Conjecture, "conj-DDSs", "D(f)* is a Singer difference set (2^m-1, 2^(m-1), 2^(m-2))", 13, none, i::dds::<'k'>),
    c("conj-DDSscodes/a", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'a'>),
    c("conj-DDSscodes/b", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'b'>),
    c("conj-DDSscodes/c", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'c'>),
    c("conj-DDSscodes/d", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'d'>),
    c("conj-DDSscodes/e", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'e'>),
    c("conj-DDSscodes/f", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'f'>),
    c("conj-DDSscodes/g", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'g'>),
    c("conj-DDSscodes/h", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'h'>),
    c("conj-DDSscodes/i", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'i'>),
    c("conj-DDSscodes/j", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'j'>),
    c("conj-DDSscodes/k", Conjecture, "conj-DDSscodes", "code of D(f)*: printed three-weight enumerator and dual distance 3", 13, none, i::dds_code::<'k'>),
    c("conj-DDSsJ170", Conjecture, "conj-DDSsJ170", "image code of the m = 2 mod 4 trinomial: printed three-weight enumerator", 12, none, i::j170),
    c("conj-DDSsJ170/ds", Conjecture, "conj-DDSsJ170", "its D(f)* is a difference set (2^m-1, 2^(m-1)-1, 2^(m-2)-1)", 12, none, i::j170_ds),
    c("conj-DDSsJ171", Conjecture, "conj-DDSsJ171", "image code of x + x^2 + x^(2^m-2^(m/2)+1): four-weight table", 12, none, i::j171),
    c("conj-DDSsJ171/ds", Conjecture, "conj-DDSsJ171", "its D(f)* is a difference set (2^m-1, 2^(m-1)-1, 2^(m-2)-1)", 12, none, i::j171_ds),
    c("conj-DDSs2/1", Conjecture, "conj-DDSs2", "{f(x(x+1))} minus 0 is a difference set (2^m-1, 2^(m-1)-1, 2^(m-2)-1)", 13, none, i::dds2::<1>),
    c("conj-DDSs2/2", Conjecture, "conj-DDSs2", "{f(x(x+1))} minus 0 is a difference set (2^m-1, 2^(m-1)-1, 2^(m-2)-1)", 13, none, i::dds2::<2>),
    c("conj-DDSs2/3", Conjecture, "conj-DDSs2", "{f(x(x+1))} minus 0 is a difference set (2^m-1, 2^(m-1)-1, 2^(m-2)-1)", 13, none, i::dds2::<3>),
    c("conj-DDSscodes2/1", Conjecture, "conj-DDSscodes2", "its code is one-weight [2^(m-1)-1, m-1, 2^(m-2)]", 13, none, i::dds2_code::<1>),
    c("conj-DDSscodes2/2", Conjecture, "conj-DDSscodes2", "its code is one-weight [2^(m-1)-1, m-1, 2^(m-2)]", 13, none, i::dds2_code::<2>),
    c("conj-DDSscodes2/3", Conjecture, "conj-DDSscodes2", "its code is one-weight [2^(m-1)-1, m-1, 2^(m-2)]", 13, none, i::dds2_code::<3>),
    c("thm-extebdedcode", Theorem, "thm-extebdedcode", "adjoining the all-one word to a hyperoval-table code gives the expanded table", 13, i::expansion_instances, i::expansion),
    c("thm-extebdedcode/example", Theorem, "thm-extebdedcode", "expanded codes are [16, 6, 6] at m = 5 and [64, 8, 28] at m = 7", 7, i::expansion_instances, i::expansion_example),
];

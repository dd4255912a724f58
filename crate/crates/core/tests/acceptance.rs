//! Acceptance criteria 1 to 12, one line each.
//!
//! Every criterion is computed in full and printed as PASS or FAIL with its
//! time and the pinned time limit. Criteria listed in `KNOWN_RED` are red on
//! the printed statements (see the registry findings); the test fails if any
//! other criterion is red, or if a listed one turns green.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use bfcodes::boolfun::{classify, is_almost_bent, quad_rank, walsh_transform, SpectrumClass, TruthTable};
use bfcodes::codes::{code_from_defining_set, diff_against, expand_complement_auto, tables, weight_dist_via_walsh, CodeSummary};
use bfcodes::funlib::{instantiate, is_e_to_1, profile_of_table, Family, Func};
use bfcodes::gf2m::{gcd, Elem, FieldSpec};
use bfcodes::opoly::{is_o_polynomial, Mode};
use bfcodes::verify::{run_claim, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Criteria expected to be red, with the reason.
const KNOWN_RED: &[(u8, &str)] = &[
    (4, "AB codes follow tab-semibentfcode, not tab-semibentfcode6"),
    (8, "inv6 statement covers u = 0, drawn at m=5, where f_u is a permutation"),
    (10, "expanded code parameters match but tab-semibentfcode66 rows do not"),
    (12, "CaoHu rows at m=2 and Payne-code rows at m=7 miss the stated weight counts"),
];

struct Line {
    pass: bool,
    detail: String,
}

fn field(m: u32) -> FieldSpec {
    FieldSpec::new(m).unwrap()
}

fn fam(fs: &FieldSpec, s: &str) -> Func {
    instantiate(fs, &s.parse::<Family>().unwrap()).unwrap()
}

fn rows(code: &CodeSummary) -> BTreeMap<u64, u64> {
    code.nonzero_rows().into_iter().collect()
}

fn plus_ux(fs: &FieldSpec, f: &Func, u: Elem) -> Vec<Elem> {
    f.tabulate(fs).iter().enumerate().map(|(x, &y)| y ^ fs.mul(u, x as Elem)).collect()
}

fn image_code(fs: &FieldSpec, values: &[Elem]) -> CodeSummary {
    let d = bfcodes::codes::DefiningSet::collect(fs, values.iter().copied());
    code_from_defining_set(fs, &d).unwrap()
}

/// `n` distinct seeded draws from `lo..2^m`.
fn draws(seed: u64, m: u32, n: usize, lo: u64) -> Vec<Elem> {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    let mut out = std::collections::BTreeSet::new();
    while out.len() < n.min(((1u64 << m) - lo) as usize) {
        out.insert(r.gen_range(lo..1u64 << m) as Elem);
    }
    out.into_iter().collect()
}

fn both_routes(fs: &FieldSpec, tt: &TruthTable) -> bool {
    let d = tt.support();
    let direct = code_from_defining_set(fs, &d);
    let walsh = weight_dist_via_walsh(fs, tt);
    match (direct, walsh) {
        (Ok(a), Ok(b)) => a == b,
        (Err(_), Err(_)) => d.is_empty(),
        _ => false,
    }
}

fn c1() -> Line {
    let f4 = field(4);
    let bad4 = (0u32..1 << 16)
        .into_par_iter()
        .filter(|&mask| !both_routes(&f4, &TruthTable::from_evaluator(&f4, |x| mask >> x & 1 == 1)))
        .count();
    let mut bad = vec![("m=4 exhaustive", bad4)];
    for m in [6u32, 8, 10, 12] {
        let fs = field(m);
        let seeds: Vec<u64> = (0..1000).collect();
        let n = seeds
            .par_iter()
            .filter(|&&s| {
                let mut r = ChaCha8Rng::seed_from_u64(s ^ ((m as u64) << 32));
                let bits: Vec<bool> = (0..fs.order()).map(|_| r.gen()).collect();
                !both_routes(&fs, &TruthTable::from_evaluator(&fs, |x| bits[x as usize]))
            })
            .count();
        bad.push((["m=6", "m=8", "m=10", "m=12"][(m as usize - 6) / 2], n));
    }
    let pass = bad.iter().all(|b| b.1 == 0);
    Line { pass, detail: format!("disagreements {bad:?} over 65536 + 4x1000 functions") }
}

fn c2() -> Line {
    let mut pass = true;
    let mut notes = Vec::new();
    for m in [4u32, 6] {
        let fs = field(m);
        let (mut bent_hits, mut other_hits) = (0, 0);
        for a in 1..fs.order() as Elem {
            let tt = TruthTable::from_trace_of(&fs, |x| fs.mul(a, fs.pow(x, 3)));
            let bent = classify(&walsh_transform(&fs, &tt), m) == SpectrumClass::Bent;
            let code = code_from_defining_set(&fs, &tt.support()).unwrap();
            let lowest = (tt.n_f() - (1 << ((m - 2) / 2))) / 2;
            let table_ok =
                tables::bent(m, tt.n_f()).is_ok_and(|t| diff_against(&code, &t).is_empty()) && code.d_min == Some(lowest);
            if bent {
                bent_hits += 1;
                pass &= table_ok;
            } else {
                other_hits += 1;
                pass &= !table_ok;
            }
            if m == 4 && bent && tt.n_f() == 6 {
                pass &= (code.n, code.k, code.d_min) == (6, 4, Some(2)) && rows(&code) == BTreeMap::from([(2, 6), (4, 9)]);
            }
        }
        pass &= bent_hits > 0;
        notes.push(format!("m={m}: {bent_hits} bent, {other_hits} not"));
    }
    Line { pass, detail: notes.join("; ") }
}

fn c3() -> Line {
    let mut pass = true;
    let mut notes = Vec::new();
    for m in [5u32, 7, 9] {
        let fs = field(m);
        let tt = fam(&fs, "gold:h=1").truth_table(&fs);
        let code = code_from_defining_set(&fs, &tt.support()).unwrap();
        let d = (1u64 << (m - 2)) - (1 << ((m - 3) / 2));
        pass &= (code.n, code.k, code.d_min) == (1 << (m - 1), m, Some(d));
        pass &= diff_against(&code, &tables::semibent(m, tt.n_f()).unwrap()).is_empty();
        if m == 5 {
            pass &= rows(&code) == BTreeMap::from([(6, 6), (8, 15), (10, 10)]);
        }
        notes.push(code.params());
    }
    Line { pass, detail: notes.join(" ") }
}

fn c4() -> Line {
    let mut pass = true;
    let mut notes = Vec::new();
    for m in [5u32, 7] {
        let fs = field(m);
        for item in ["gold:h=1", "kasami:h=2", "welch"] {
            let g = fam(&fs, item);
            let values = g.tabulate(&fs);
            let ab = is_almost_bent(&fs, &values);
            let perm = profile_of_table(&values).keys().all(|&k| k == 1);
            let code = code_from_defining_set(&fs, &g.truth_table(&fs).support()).unwrap();
            let diffs = diff_against(&code, &tables::hyperoval(m).unwrap());
            pass &= ab && perm && code.n == 1 << (m - 1) && diffs.is_empty();
            notes.push(format!("m={m} {item}: AB={ab} perm={perm} {:?} table diffs {}", code.nonzero_rows(), diffs.len()));
        }
    }
    Line { pass, detail: notes.join("; ") }
}

fn c5() -> Line {
    let mut pass = true;
    let mut notes = Vec::new();
    for m in [6u32, 8, 10] {
        let fs = field(m);
        let mut r = ChaCha8Rng::seed_from_u64(0x5eed ^ m as u64);
        let (mut done, mut bad) = (0, 0);
        while done < 200 {
            let coeffs: Vec<Elem> = (1..=m / 2).map(|_| r.gen_range(0..fs.order() as Elem)).collect();
            let tt = TruthTable::from_trace_of(&fs, |x| {
                coeffs.iter().enumerate().fold(0, |acc, (i, &c)| acc ^ fs.mul(c, fs.mul(fs.frobenius(x, i as u32 + 1), x)))
            });
            let rank = quad_rank(&tt).unwrap();
            if rank <= 2 {
                continue;
            }
            done += 1;
            let code = code_from_defining_set(&fs, &tt.support()).unwrap();
            let fhat0 = walsh_transform(&fs, &tt).at(0);
            if !tables::quadratic(m, rank, fhat0).is_ok_and(|t| diff_against(&code, &t).is_empty()) {
                bad += 1;
            }
        }
        pass &= bad == 0;
        notes.push(format!("m={m}: {bad}/200 off-table"));
    }
    Line { pass, detail: notes.join("; ") }
}

fn c6() -> Line {
    let mut checked = 0;
    let mut failed = Vec::new();
    let mut check = |fs: &FieldSpec, s: String| {
        let f = fam(fs, &s);
        let r = is_o_polynomial(fs, &f, Mode::Both);
        checked += 1;
        if !r.is_o_polynomial || r.equivalence_violated() {
            failed.push(format!("m={} {s}", fs.m()));
        }
    };
    for m in [3u32, 4, 5, 6, 7, 8] {
        let fs = field(m);
        for h in (1..m).filter(|&h| gcd(h as u64, m as u64) == 1) {
            check(&fs, format!("translation:h={h}"));
        }
        if m % 2 == 0 {
            continue;
        }
        for a in fs.elements() {
            for name in ["segre", "glynn2", "payne", "cherowitzo"] {
                check(&fs, format!("{name}:a={a:#x}"));
            }
        }
        check(&fs, "glynn1".into());
        check(&fs, "subiaco:a=0x1".into());
    }
    Line { pass: failed.is_empty(), detail: format!("{checked} instances, failures {failed:?}") }
}

fn c7() -> Line {
    let mut bad = Vec::new();
    let mut count = 0;
    for m in 4u32..=10 {
        let fs = field(m);
        for h in (1..m).filter(|&h| gcd(h as u64, m as u64) == 1) {
            let f = fam(&fs, &format!("translation:h={h}"));
            for u in draws(0x7a ^ (m as u64) << 8 ^ h as u64, m, 5, 1) {
                count += 1;
                let code = image_code(&fs, &plus_ux(&fs, &f, u));
                let want = BTreeMap::from([(1u64 << (m - 2), (1u64 << (m - 1)) - 1)]);
                if (code.n, code.k) != (1 << (m - 1), m - 1) || rows(&code) != want {
                    bad.push(format!("m={m} h={h} u={u:#x}"));
                }
            }
        }
    }
    Line { pass: bad.is_empty(), detail: format!("{count} codes, off-table {bad:?}") }
}

fn c8() -> Line {
    let mut count = 0;
    let mut bad = Vec::new();
    for m in [5u32, 7] {
        let fs = field(m);
        let table = tables::hyperoval(m).unwrap();
        let mut sources: Vec<(String, Func, u64)> = vec![("x^6".into(), bfcodes::opoly::monomial(&fs, 6), 1)];
        for a in fs.elements() {
            sources.push((format!("xd5:a={a:#x}"), fam(&fs, &format!("xd5:a={a:#x}")), 1));
        }
        // The inverse-of-6 statement ranges over all of GF(2^m), 0 included.
        sources.push(("inv6".into(), fam(&fs, "inv6"), 0));
        for (name, f, lo) in &sources {
            for u in draws(0x8b ^ (m as u64) << 8 ^ name.len() as u64, m, 10, *lo) {
                count += 1;
                let values = plus_ux(&fs, f, u);
                let two_to_one = name.as_str() == "inv6" || is_e_to_1(&fs, &Func::from_table("f_u", m, values.clone()), 2);
                let code = image_code(&fs, &values);
                if !two_to_one || !diff_against(&code, &table).is_empty() {
                    bad.push(format!("m={m} {name} u={u:#x}"));
                }
                if m == 5 && rows(&code) != BTreeMap::from([(6, 10), (8, 15), (10, 6)]) {
                    bad.push(format!("m=5 {name} u={u:#x} rows"));
                }
            }
        }
    }
    Line { pass: bad.is_empty(), detail: format!("{count} codes, off-table {bad:?}") }
}

fn c9() -> Line {
    let fs = field(6);
    let tt = fam(&fs, "wdx:r=3,mr=2").truth_table(&fs);
    let code = code_from_defining_set(&fs, &tt.support()).unwrap();
    let walsh = weight_dist_via_walsh(&fs, &tt).unwrap();
    let table = tables::wdx(3, 2).unwrap();
    let pass = (code.n, code.k) == (49, 6)
        && rows(&code) == BTreeMap::from([(24, 49), (28, 14)])
        && diff_against(&code, &table).is_empty()
        && code == walsh;
    Line { pass, detail: format!("{} {:?}", code.params(), code.nonzero_rows()) }
}

fn c10() -> Line {
    let mut pass = true;
    let mut notes = Vec::new();
    for (m, want) in [(5u32, (16u64, 6u32, 6u64)), (7, (64, 8, 28))] {
        let fs = field(m);
        let src = image_code(&fs, &plus_ux(&fs, &bfcodes::opoly::monomial(&fs, 6), 1));
        pass &= diff_against(&src, &tables::hyperoval(m).unwrap()).is_empty();
        let big = expand_complement_auto(&src);
        let params_ok = (big.n, big.k, big.d_min.unwrap_or(0)) == want;
        let diffs = diff_against(&big, &tables::hyperoval_expanded(m).unwrap());
        pass &= params_ok && diffs.is_empty();
        notes.push(format!("m={m}: {} params_ok={params_ok} rows {:?} table diffs {}", big.params(), big.nonzero_rows(), diffs.len()));
    }
    Line { pass, detail: notes.join("; ") }
}

/// Number of matching instances of `id` at `m`; any other verdict than
/// match or inapplicable is an error.
fn all_match(id: &str, m: u32) -> Result<usize, String> {
    let claim = bfcodes::verify::find(id).map_err(|e| e.to_string())?;
    let mut n = 0;
    for p in &claim.instances(m) {
        let r = run_claim(id, m, p).map_err(|e| e.to_string())?;
        match r.verdict {
            Verdict::Match => n += 1,
            Verdict::Inapplicable => {}
            v => return Err(format!("{id} m={m} {:?}: {v:?} {:?}", r.params, r.diffs.first())),
        }
    }
    Ok(n)
}

fn c11() -> Line {
    let mut jobs: Vec<(String, u32)> = Vec::new();
    for c in 'a'..='k' {
        for m in [5, 7] {
            jobs.push((format!("conj-DDSs/{c}"), m));
            jobs.push((format!("conj-DDSscodes/{c}"), m));
        }
    }
    jobs.push(("conj-DDSsJ170".into(), 6));
    jobs.push(("conj-DDSsJ170/ds".into(), 6));
    for m in [4, 6, 8] {
        jobs.push(("conj-DDSsJ171".into(), m));
    }
    for i in 1..=3 {
        for m in 4..=8 {
            jobs.push((format!("conj-DDSs2/{i}"), m));
            jobs.push((format!("conj-DDSscodes2/{i}"), m));
        }
    }
    let results: Vec<Result<usize, String>> = jobs.par_iter().map(|(id, m)| all_match(id, *m)).collect();
    let mut failures: Vec<String> = results.iter().filter_map(|r| r.as_ref().err().cloned()).collect();
    // Each id must match somewhere in its range; out-of-range parities are inapplicable.
    let mut matched: BTreeMap<&str, usize> = BTreeMap::new();
    for ((id, _), r) in jobs.iter().zip(&results) {
        *matched.entry(id.as_str()).or_default() += *r.as_ref().unwrap_or(&0);
    }
    failures.extend(matched.iter().filter(|(_, &n)| n == 0).map(|(id, _)| format!("{id}: never applicable")));
    let total: usize = matched.values().sum();
    Line { pass: failures.is_empty(), detail: format!("{} ids, {total} matching rows, findings {failures:?}", matched.len()) }
}

fn c12() -> Line {
    // Smallest m at which each statement's hypotheses hold.
    let rows = [
        ("5wt/helleseth", 6u32),
        ("5wt/liyue", 2),
        ("5wt/caohu-a", 2),
        ("5wt/caohu-b", 2),
        ("glynn-code-conj", 5),
        ("payne-code-conj", 7),
        ("cherowitzo-code-conj", 5),
    ];
    let mut notes = Vec::new();
    let mut pass = true;
    for (id, m) in rows {
        let claim = bfcodes::verify::find(id).unwrap();
        let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
        for p in claim.instances(m) {
            let r = run_claim(id, m, &p).unwrap();
            let v = match r.verdict {
                Verdict::Match | Verdict::ReportOnly => "ok",
                Verdict::Mismatch => "miss",
                Verdict::Inapplicable => "n/a",
                Verdict::Skipped => "skipped",
            };
            *counts.entry(v).or_default() += 1;
        }
        let ok = counts.get("ok").is_some_and(|&n| n > 0) && !counts.contains_key("miss");
        pass &= ok;
        notes.push(format!("{id}@{m} {counts:?}"));
    }
    Line { pass, detail: notes.join("; ") }
}

#[test]
fn acceptance_criteria() {
    // (criterion, time limit in seconds, check)
    let criteria: [(u8, f64, fn() -> Line); 12] = [
        (1, 60.0, c1),
        (2, 10.0, c2),
        (3, 10.0, c3),
        (4, 60.0, c4),
        (5, 120.0, c5),
        (6, 120.0, c6),
        (7, 30.0, c7),
        (8, 60.0, c8),
        (9, 5.0, c9),
        (10, 5.0, c10),
        (11, 300.0, c11),
        (12, 120.0, c12),
    ];
    let mut stdout = std::io::stdout().lock();
    let mut surprises = Vec::new();
    for (n, limit, check) in criteria {
        let start = Instant::now();
        let line = check();
        let secs = start.elapsed().as_secs_f64();
        let pass = line.pass && secs <= limit;
        let known = KNOWN_RED.iter().find(|k| k.0 == n);
        let tag = if pass { "PASS" } else { "FAIL" };
        let expect = match (pass, known) {
            (false, Some(k)) => format!(" (expected red: {})", k.1),
            (true, Some(_)) => {
                surprises.push(format!("criterion {n} is green but listed as known red"));
                String::new()
            }
            (false, None) => {
                surprises.push(format!("criterion {n} failed: {}", line.detail));
                String::new()
            }
            (true, None) => String::new(),
        };
        let _ = writeln!(stdout, "criterion {n:>2} {tag} [{secs:.1}s / {limit:.0}s] {}{expect}", line.detail);
    }
    assert!(surprises.is_empty(), "{surprises:#?}");
}

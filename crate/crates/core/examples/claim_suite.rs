//! Run the claim registry over a range of m and print, per claim and m, the
//! verdict counts with the first diff of any mismatching row.
//!
//! cargo run --release --example claim_suite -- 'thm-*' 3 8

use std::collections::BTreeMap;

use bfcodes::verify::{run_suite, tally, Budget, Filter, Verdict};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let ids = args.first().map(String::as_str).filter(|s| *s != "*");
    let m_min = args.get(1).map(|s| s.parse()).transpose()?.unwrap_or(3);
    let m_max = args.get(2).map(|s| s.parse()).transpose()?.unwrap_or(8);
    let filter = Filter::new(ids, m_min, m_max)?;
    let reports = run_suite(&filter, Budget::default());
    let mut rows: BTreeMap<(&str, u32), (BTreeMap<&str, usize>, Option<String>)> = BTreeMap::new();
    for r in &reports {
        let e = rows.entry((r.claim.as_str(), r.m)).or_default();
        let v = match r.verdict {
            Verdict::Match => "match",
            Verdict::Mismatch => "MISMATCH",
            Verdict::Inapplicable => "inapplicable",
            Verdict::ReportOnly => "report",
            Verdict::Skipped => "skipped",
        };
        *e.0.entry(v).or_default() += 1;
        if r.verdict == Verdict::Mismatch && e.1.is_none() {
            let p: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            e.1 = Some(format!("[{}] {}", p.join(","), r.diffs.join("; ")));
        }
    }
    for ((id, m), (counts, first)) in rows {
        if counts.keys().all(|k| *k == "inapplicable") && std::env::var_os("SHOW_INAPPLICABLE").is_none() {
            continue;
        }
        let c: Vec<String> = counts.iter().map(|(k, v)| format!("{k}:{v}")).collect();
        println!("{id:<28} m={m:<2} {:<36} {}", c.join(" "), first.unwrap_or_default().chars().take(160).collect::<String>());
    }
    println!("{:?}", tally(&reports));
    Ok(())
}

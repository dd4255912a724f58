//! Re-run one registry row from its `(id, m, params)` key and print the report.
//!
//! cargo run --example run_claim -- thm-translationcodes 4 h=1 u=0x1

use bfcodes::verify::{find, run_claim, Params};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "thm-translationcodes".into());
    let m: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(4);
    let mut params = Params::new();
    for kv in args {
        let (k, v) = kv.split_once('=').ok_or("params are key=value")?;
        params.insert(k.into(), v.into());
    }
    let claim = find(&id)?;
    if params.is_empty() {
        params = claim.instances(m).into_iter().next().unwrap_or_default();
    }
    let r = run_claim(&id, m, &params)?;
    println!("{}", serde_json::to_string_pretty(&r)?);
    Ok(())
}

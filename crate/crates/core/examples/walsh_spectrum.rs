//! Walsh spectrum of `Tr(f(x))` for a named family, with its class.
//!
//! cargo run --example walsh_spectrum -- 6 kasami:h=2

use bfcodes::boolfun::{classify, walsh_transform};
use bfcodes::funlib::{instantiate, Family};
use bfcodes::gf2m::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let fam: Family = args.next().as_deref().unwrap_or("gold:h=1").parse()?;
    let fs = FieldSpec::new(m)?;
    let f = instantiate(&fs, &fam)?;
    let ws = walsh_transform(&fs, &f.truth_table(&fs));
    println!("{} over {fs}: {}", f.name(), classify(&ws, m).name());
    for (v, count) in ws.summary_rows() {
        println!("  {v:>6}  x{count}");
    }
    Ok(())
}

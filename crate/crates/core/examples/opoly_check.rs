//! O-polynomial test by definition and by the 2-to-1 criterion, then the
//! same test on every closure transform.
//!
//! cargo run --example opoly_check -- 7 glynn1

use bfcodes::funlib::{instantiate, Family};
use bfcodes::gf2m::FieldSpec;
use bfcodes::opoly::{closure_transforms, is_o_polynomial, Mode};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(7);
    let fam: Family = args.next().as_deref().unwrap_or("glynn1").parse()?;
    let fs = FieldSpec::new(m)?;
    let f = instantiate(&fs, &fam)?;
    let r = is_o_polynomial(&fs, &f, Mode::Both);
    println!("{} over {fs}: {}", f.name(), r.is_o_polynomial);
    for w in r.witnesses.iter().take(3) {
        println!("  witness {w:?}");
    }
    if r.is_o_polynomial {
        for g in closure_transforms(&fs, &f)?.all() {
            println!("  {:<32} {}", g.name(), is_o_polynomial(&fs, g, Mode::Both).is_o_polynomial);
        }
    }
    Ok(())
}

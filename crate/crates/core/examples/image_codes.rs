//! Codes from image sets of a function: `{f(x)}`, the same without 0, and
//! `{f(x(x+1))}`, each also with the all-one word adjoined.
//!
//! cargo run --example image_codes -- 5 segre:a=0x0

use bfcodes::codes::{code_from_defining_set, expand_complement_auto};
use bfcodes::funlib::{image_of_xx1, image_set, image_set_star, instantiate, Family};
use bfcodes::gf2m::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(5);
    let fam: Family = args.next().as_deref().unwrap_or("segre:a=0x0").parse()?;
    let fs = FieldSpec::new(m)?;
    let f = instantiate(&fs, &fam)?;
    for (label, d) in [("image", image_set(&fs, &f)), ("image*", image_set_star(&fs, &f)), ("xx1", image_of_xx1(&fs, &f))] {
        let c = code_from_defining_set(&fs, &d)?;
        let big = expand_complement_auto(&c);
        println!("{label:<7} {} rows {:?}", c.params(), c.nonzero_rows());
        println!("  +1     {} rows {:?}", big.params(), big.nonzero_rows());
    }
    Ok(())
}

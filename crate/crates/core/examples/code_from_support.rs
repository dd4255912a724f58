//! Weight distribution of the code whose defining set is the support of a
//! Boolean function, computed on the direct and the Walsh route.
//!
//! cargo run --example code_from_support -- 6 gold:h=1

use bfcodes::codes::{code_from_defining_set, weight_dist_via_walsh};
use bfcodes::funlib::{instantiate, Family};
use bfcodes::gf2m::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let m: u32 = args.next().map(|s| s.parse()).transpose()?.unwrap_or(6);
    let fam: Family = args.next().as_deref().unwrap_or("gold:h=1").parse()?;
    let fs = FieldSpec::new(m)?;
    let tt = instantiate(&fs, &fam)?.truth_table(&fs);
    let code = code_from_defining_set(&fs, &tt.support())?;
    assert_eq!(code, weight_dist_via_walsh(&fs, &tt)?);
    println!("{} with d_min {:?}", code.params(), code.d_min);
    print!("{}", code.to_csv());
    Ok(())
}

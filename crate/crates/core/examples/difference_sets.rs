//! Difference-set checks: a Singer-type multiplicative set, an additive
//! check on a bent support, and the relative set from a bent graph.
//!
//! cargo run --example difference_sets

use bfcodes::diffsets::{bent_graph_rds, is_additive_difference_set, is_multiplicative_difference_set, is_relative_difference_set};
use bfcodes::funlib::{image_set_star, instantiate, Family};
use bfcodes::gf2m::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let fs = FieldSpec::new(5)?;
    let d = image_set_star(&fs, &instantiate(&fs, &"dds:a".parse::<Family>()?)?);
    let r = is_multiplicative_difference_set(&fs, &d)?;
    println!("mult dds:a     {} {:?}", r.verdict, r.params);

    let fs6 = FieldSpec::new(6)?;
    // Tr(g x^3) is bent for a non-cube g.
    let f = instantiate(&fs6, &format!("power:d=3,c={:#x}", fs6.generator()).parse::<Family>()?)?;
    let r = is_additive_difference_set(&fs6, &f.truth_table(&fs6).support());
    println!("add  support   {} {:?}", r.verdict, r.params);

    let (rd, n_sub) = bent_graph_rds(&fs)?;
    let r = is_relative_difference_set(&fs, &rd, &n_sub)?;
    println!("rel  bent graph {} {:?} characters {:?}", r.verdict, r.params, r.character_bound);
    Ok(())
}

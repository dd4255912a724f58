//! Arithmetic in GF(2^m): products, inverses, traces and fractional exponents.
//!
//! cargo run --example field_arith -- 7

use bfcodes::gf2m::FieldSpec;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let m: u32 = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let fs = FieldSpec::new(m)?;
    println!("{fs}  generator {:#x}", fs.generator());
    let (a, b) = (fs.generator(), fs.exp(3));
    println!("{a:#x} * {b:#x} = {:#x}", fs.mul(a, b));
    println!("inv({b:#x}) = {:#x}", fs.inv(b)?);
    println!("Tr({b:#x}) = {}", fs.trace(b));
    // x^{1/3} when gcd(3, 2^m - 1) = 1.
    match fs.exp_frac(1, 3) {
        Ok(e) => println!("1/3 mod {} = {e}; ({b:#x}^e)^3 = {:#x}", fs.mult_order(), fs.pow(fs.pow(b, e as i128), 3)),
        Err(err) => println!("1/3: {err}"),
    }
    let zeros = fs.elements().filter(|&x| fs.trace(x) == 0).count();
    println!("trace-zero elements: {zeros}");
    Ok(())
}

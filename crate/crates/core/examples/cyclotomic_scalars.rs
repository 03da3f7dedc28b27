//! Exact arithmetic in cyclotomic fields.

use dwtqft::scalars::CyclotomicScalar;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z3 = CyclotomicScalar::root_of_unity(3, 1)?;
    let sum = CyclotomicScalar::one(3)?.checked_add(&z3)?.checked_add(&z3.checked_mul(&z3)?)?;
    println!("1 + ζ3 + ζ3² = {sum}");

    let i = CyclotomicScalar::root_of_unity(4, 1)?;
    let minus_one = i.checked_mul(&i)?;
    println!("ζ4² = {minus_one} ({})", minus_one.decimal());

    // Values at different levels meet at the lcm.
    let mixed = z3.checked_add(&i)?;
    println!("ζ3 + ζ4 at level {}: {mixed} ≈ {}", mixed.level(), mixed.decimal());
    println!("exact record: {}", serde_json::to_string(&mixed.to_record())?);
    Ok(())
}

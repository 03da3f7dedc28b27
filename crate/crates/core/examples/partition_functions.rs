//! Closed-manifold partition functions by enumeration and by the product
//! formula.

use dwtqft::action::Theory;
use dwtqft::groups::FiniteGroup;
use dwtqft::topology::{builtin_complex, AlgebraicModel, Builtin};
use dwtqft::tqft::{partition_closed, partition_product_formula, Manifold};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let w2 = Theory::w1_power(2)?;
    for g in 0..=3 {
        let x = Manifold::Complex(builtin_complex(&Builtin::Sigma(g))?);
        println!(
            "Z_w1²(Σ_{g}) = {} (formula: {})",
            partition_closed(&w2, &x)?,
            partition_product_formula(&w2, &x)?
        );
    }
    for (m, l) in [(1, 1), (2, 1), (1, 2)] {
        let theory = Theory::w1_power(m + 2 * l)?;
        let x = Manifold::Model(AlgebraicModel::dold(m, l)?);
        println!("Z(P({m},{l})) = {}", partition_closed(&theory, &x)?);
    }
    let untwisted = Theory::untwisted(FiniteGroup::symmetric(3)?);
    let t3 = Manifold::Complex(builtin_complex(&Builtin::Torus3)?);
    println!("untwisted S3 on T³: {}", partition_closed(&untwisted, &t3)?);
    match partition_product_formula(&Theory::w1_power(3)?, &t3) {
        Ok(v) => println!("formula on T³: {v}"),
        Err(e) => println!("formula on T³: {e}"),
    }
    Ok(())
}

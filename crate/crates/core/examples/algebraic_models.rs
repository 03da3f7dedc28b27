//! Cohomology-ring models for manifolds without a triangulation.

use dwtqft::topology::AlgebraicModel;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let models = [
        AlgebraicModel::real_projective(3)?,
        AlgebraicModel::real_projective(4)?,
        AlgebraicModel::dold(1, 1)?,
        AlgebraicModel::dold(2, 1)?,
        AlgebraicModel::dold(1, 2)?,
        AlgebraicModel::klein()?,
        AlgebraicModel::surface(2)?.product(&AlgebraicModel::real_projective(2)?)?,
    ];
    for m in &models {
        println!(
            "{:>24}: dim {}, β₁ = {}, π₁ = {}, τ = {:?}",
            m.name(),
            m.dimension(),
            m.first_betti(),
            m.presentation(),
            m.tau_on_basis()?
        );
    }
    Ok(())
}

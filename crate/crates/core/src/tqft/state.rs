use num_bigint::BigInt;
use num_rational::BigRational;

use super::{partition_closed, Manifold, TqftError};
use crate::action::Theory;
use crate::fields::{hom_orbits, FieldOrbit, Presentation};
use crate::groups::{FiniteGroup, GroupCocycle};
use crate::scalars::CyclotomicScalar;
use crate::topology::{builtin_complex, Builtin};

/// Basis of `Ẑ(Y)` by gauge-field orbits on `Y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    pub basis: Vec<FieldOrbit>,
    pub stabilizers: Vec<usize>,
    pub dimension: usize,
}

impl StateSpace {
    fn from_basis(basis: Vec<FieldOrbit>) -> Self {
        let stabilizers = basis.iter().map(|o| o.stabilizer_order).collect();
        Self { dimension: basis.len(), basis, stabilizers }
    }
}

/// `τ_ω(g)(h) = ω(g, h) − ω(h, h⁻¹gh)` in `Z/N`.
pub fn transgression(omega: &GroupCocycle, g: usize, h: usize) -> u32 {
    let group = omega.group();
    let n = omega.modulus();
    let conj = group.conjugate(g, group.inv(h));
    (omega.get(&[g, h]) + n - omega.get(&[h, conj])) % n
}

fn centralizer(g: &FiniteGroup, x: usize) -> impl Iterator<Item = usize> + '_ {
    g.elements().filter(move |&h| g.commutes(x, h))
}

/// The degree-2 cocycle of a twisted theory on a union of circles.
fn circle_cocycle(theory: &Theory, y: &Presentation) -> Result<GroupCocycle, TqftError> {
    let omega = theory.group_cocycle().expect("twisted theory");
    if omega.degree() != 2 {
        return Err(TqftError::Unsupported(format!("twisted state spaces in dimension {}", omega.degree())));
    }
    let circles = y.relators().is_empty() && y.components().iter().all(|c| c.len() == 1);
    if !circles {
        return Err(TqftError::Unsupported("twisted state spaces only on disjoint circles".into()));
    }
    Ok(omega)
}

pub fn state_space(theory: &Theory, y: &Presentation) -> Result<StateSpace, TqftError> {
    let orbits = hom_orbits(y, theory.group())?;
    if theory.is_untwisted() {
        return Ok(StateSpace::from_basis(orbits));
    }
    let omega = circle_cocycle(theory, y)?;
    let g = theory.group();
    let kept = orbits
        .into_iter()
        .filter(|o| o.representative.values().iter().all(|&x| centralizer(g, x).all(|h| transgression(&omega, x, h) == 0)))
        .collect();
    Ok(StateSpace::from_basis(kept))
}

/// `dim Ẑ(Y) = Z(Y × S¹)`.
pub fn dim_via_torus(theory: &Theory, y: &Presentation) -> Result<CyclotomicScalar, TqftError> {
    if theory.is_untwisted() {
        return partition_closed(theory, &Manifold::Presentation(y.times_circle()));
    }
    circle_cocycle(theory, y)?;
    let torus = partition_closed(theory, &Manifold::Complex(builtin_complex(&Builtin::Torus)?))?;
    let mut acc = CyclotomicScalar::from_rational(theory.modulus(), BigRational::from_integer(BigInt::from(1)))?;
    for _ in 0..y.component_count() {
        acc = acc.checked_mul(&torus)?;
    }
    Ok(acc)
}

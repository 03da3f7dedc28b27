//! Partition functions, state spaces and bordism maps by finite path
//! integration.

mod bordism;
mod matrix;
mod state;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::action::{action_value, ActionError, ManifoldRef, Theory, TheoryKind};
use crate::fields::{
    edge_components, enumerate_homs, flat_fields_on_complex, groupoid_cardinality, hom_orbits, orbit_decomposition,
    FieldError, Presentation,
};
use crate::scalars::{CyclotomicScalar, ScalarError};
use crate::topology::{cup_power_pairing, AlgebraicModel, CohomologyMod2, DeltaComplex, TopologyError};

pub use bordism::{bordism_matrix, Bordism, BordismMatrix, BordismSpec};
pub use matrix::RationalMatrix;
pub use state::{dim_via_torus, state_space, transgression, StateSpace};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TqftError {
    #[error("product formula refused: {0}")]
    Refused(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("incompatible input: {0}")]
    Incompatible(String),
    #[error(transparent)]
    Action(#[from] ActionError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl TqftError {
    /// Whether the failure is an enumeration budget.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            TqftError::Field(FieldError::Budget { .. })
                | TqftError::Action(ActionError::Field(FieldError::Budget { .. }))
                | TqftError::Topology(TopologyError::RewriteBudget(_))
        )
    }
}

/// A closed manifold in one of the supported encodings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Manifold {
    Complex(DeltaComplex),
    Model(AlgebraicModel),
    /// Fundamental groups only; enough for the untwisted theory.
    Presentation(Presentation),
}

impl Manifold {
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Manifold::Complex(k) => Some(k.dimension()),
            Manifold::Model(m) => Some(m.dimension()),
            Manifold::Presentation(_) => None,
        }
    }
}

/// `Σ_k q_k ζ^k` at level `N`.
fn assemble(level: u32, weights: BTreeMap<u64, BigRational>) -> Result<CyclotomicScalar, TqftError> {
    let mut acc = CyclotomicScalar::zero(level)?;
    for (k, q) in weights {
        acc = acc.checked_add(&CyclotomicScalar::root_of_unity(level, k as i64)?.scale(&q))?;
    }
    Ok(acc)
}

fn unit_fraction(d: usize) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(d))
}

fn connected_sum(theory: &Theory, k: &DeltaComplex) -> Result<CyclotomicScalar, TqftError> {
    let g = theory.group();
    let fields = flat_fields_on_complex(k, g)?;
    let orbits = orbit_decomposition(&fields, g, &edge_components(k));
    let mut weights = BTreeMap::new();
    for o in orbits {
        let s = action_value(theory, ManifoldRef::Complex(k), &o.representative)?;
        *weights.entry(s.exponent).or_insert_with(BigRational::zero) += unit_fraction(o.stabilizer_order);
    }
    assemble(theory.modulus(), weights)
}

/// `Z(X) = Σ_[f] φ(S(X, f)) / #Aut(f)`, multiplied over components.
pub fn partition_closed(theory: &Theory, x: &Manifold) -> Result<CyclotomicScalar, TqftError> {
    match x {
        Manifold::Complex(k) => {
            if let Some(n) = theory.dimension() {
                if n != k.dimension() {
                    return Err(ActionError::Incompatible(format!(
                        "theory of degree {n} on a complex of dimension {}",
                        k.dimension()
                    ))
                    .into());
                }
            }
            let mut acc = CyclotomicScalar::one(theory.modulus())?;
            for comp in k.components() {
                acc = acc.checked_mul(&connected_sum(theory, &comp)?)?;
            }
            Ok(acc)
        }
        Manifold::Model(m) => {
            let g = theory.group();
            let mut weights = BTreeMap::new();
            for o in hom_orbits(m.presentation(), g)? {
                let s = action_value(theory, ManifoldRef::Model(m), &o.representative)?;
                *weights.entry(s.exponent).or_insert_with(BigRational::zero) += unit_fraction(o.stabilizer_order);
            }
            assemble(theory.modulus(), weights)
        }
        Manifold::Presentation(p) => {
            if !theory.is_untwisted() {
                return Err(TqftError::Unsupported("twisted theories need a complex or a model".into()));
            }
            Ok(CyclotomicScalar::from_rational(1, groupoid_cardinality(&hom_orbits(p, theory.group())?))?)
        }
    }
}

/// Independent route: `Σ_f φ(S(X, f)) / |Γ|` over every field, per
/// component, without orbit bookkeeping.
pub fn partition_by_fields(theory: &Theory, x: &Manifold) -> Result<CyclotomicScalar, TqftError> {
    let g = theory.group();
    let order = g.order();
    match x {
        Manifold::Complex(k) => {
            let mut acc = CyclotomicScalar::one(theory.modulus())?;
            for comp in k.components() {
                let mut weights = BTreeMap::new();
                for f in flat_fields_on_complex(&comp, g)? {
                    let s = action_value(theory, ManifoldRef::Complex(&comp), &f)?;
                    *weights.entry(s.exponent).or_insert_with(BigRational::zero) += unit_fraction(order);
                }
                acc = acc.checked_mul(&assemble(theory.modulus(), weights)?)?;
            }
            Ok(acc)
        }
        Manifold::Model(m) => {
            let mut weights = BTreeMap::new();
            for f in enumerate_homs(m.presentation(), g)? {
                let s = action_value(theory, ManifoldRef::Model(m), &f)?;
                *weights.entry(s.exponent).or_insert_with(BigRational::zero) += unit_fraction(order);
            }
            assemble(theory.modulus(), weights)
        }
        Manifold::Presentation(p) => {
            if !theory.is_untwisted() {
                return Err(TqftError::Unsupported("twisted theories need a complex or a model".into()));
            }
            let count = enumerate_homs(p, g)?.len();
            let denom = BigInt::from(order).pow(p.component_count() as u32);
            Ok(CyclotomicScalar::from_rational(1, BigRational::new(BigInt::from(count), denom))?)
        }
    }
}

/// `τ(v_k)` for the basis of `H¹(X; Z/2)`.
pub fn tau_on_basis(x: &Manifold) -> Result<Vec<bool>, TqftError> {
    match x {
        Manifold::Complex(k) => {
            let h = CohomologyMod2::compute(k);
            Ok(h.h1_basis().iter().map(|v| cup_power_pairing(k, v)).collect::<Result<_, _>>()?)
        }
        Manifold::Model(m) => Ok(m.tau_on_basis()?),
        Manifold::Presentation(_) => Err(TqftError::Unsupported("τ needs a complex or a model".into())),
    }
}

/// `½ Π_k (1 + (−1)^{τ(v_k)})`, only under `β₁ = 1` or `n = 2^k`.
pub fn partition_product_formula(theory: &Theory, x: &Manifold) -> Result<CyclotomicScalar, TqftError> {
    let TheoryKind::W1Power(n) = *theory.kind() else {
        return Err(TqftError::Refused("the formula concerns w₁ⁿ theories".into()));
    };
    if x.dimension() != Some(n) {
        return Err(TqftError::Incompatible(format!("w₁^{n} needs an {n}-manifold")));
    }
    if let Manifold::Complex(k) = x {
        if !k.is_connected() {
            return Err(TqftError::Refused("the formula is stated for connected manifolds".into()));
        }
    }
    let taus = tau_on_basis(x)?;
    let beta1 = taus.len();
    if beta1 != 1 && !n.is_power_of_two() {
        return Err(TqftError::Refused(format!("β₁ = {beta1} and n = {n} is not a power of 2")));
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let product = taus
        .iter()
        .map(|&t| if t { BigRational::zero() } else { two.clone() })
        .fold(BigRational::one(), |a, b| a * b);
    Ok(CyclotomicScalar::from_rational(theory.modulus(), product / two)?)
}

/// A closed manifold paired with a theory.
#[derive(Debug, Clone)]
pub struct ClosedManifoldJob {
    pub theory: Theory,
    pub manifold: Manifold,
}

impl ClosedManifoldJob {
    pub fn evaluate(&self) -> Result<CyclotomicScalar, TqftError> {
        partition_closed(&self.theory, &self.manifold)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::FiniteGroup;
    use crate::topology::{builtin_complex, Builtin};

    fn complex(name: &str) -> Manifold {
        Manifold::Complex(builtin_complex(&name.parse::<Builtin>().unwrap()).unwrap())
    }

    #[test]
    fn untwisted_torus_with_s3() {
        let t = Theory::untwisted(FiniteGroup::symmetric(3).unwrap());
        assert_eq!(partition_closed(&t, &complex("torus")).unwrap(), CyclotomicScalar::integer(3));
        assert_eq!(
            partition_closed(&t, &Manifold::Presentation(Presentation::surface(1))).unwrap(),
            CyclotomicScalar::integer(3)
        );
    }

    #[test]
    fn surfaces_under_w1_squared() {
        let t = Theory::w1_power(2).unwrap();
        for (g, expected) in [(0, CyclotomicScalar::ratio(1, 2)), (1, CyclotomicScalar::integer(2)), (2, CyclotomicScalar::integer(8)), (3, CyclotomicScalar::integer(32))] {
            let x = complex(&format!("sigma({g})"));
            assert_eq!(partition_closed(&t, &x).unwrap(), expected, "genus {g}");
            assert_eq!(partition_product_formula(&t, &x).unwrap(), expected);
        }
        assert!(partition_closed(&t, &complex("rp2")).unwrap().is_zero());
        assert!(partition_closed(&t, &complex("klein")).unwrap().is_zero());
    }

    #[test]
    fn product_formula_refuses_outside_hypotheses() {
        let t3 = Theory::w1_power(3).unwrap();
        let x = complex("torus3");
        assert!(matches!(partition_product_formula(&t3, &x), Err(TqftError::Refused(_))));
        // Direct enumeration still runs.
        assert_eq!(partition_closed(&t3, &x).unwrap(), CyclotomicScalar::integer(4));
        let u = Theory::untwisted(FiniteGroup::cyclic(2).unwrap());
        assert!(matches!(partition_product_formula(&u, &complex("torus")), Err(TqftError::Refused(_))));
        let two = complex("disjoint_union(torus,torus)");
        assert!(matches!(partition_product_formula(&Theory::w1_power(2).unwrap(), &two), Err(TqftError::Refused(_))));
    }

    #[test]
    fn disjoint_unions_multiply() {
        let t = Theory::w1_power(2).unwrap();
        let a = partition_closed(&t, &complex("sigma(2)")).unwrap();
        let b = partition_closed(&t, &complex("sphere2")).unwrap();
        let ab = partition_closed(&t, &complex("disjoint_union(sigma(2),sphere2)")).unwrap();
        assert_eq!(ab, &a * &b);
    }

    #[test]
    fn routes_agree() {
        let t = Theory::untwisted(FiniteGroup::symmetric(3).unwrap());
        for name in ["torus", "klein", "torus3", "disjoint_union(torus,klein)"] {
            let x = complex(name);
            assert_eq!(partition_closed(&t, &x).unwrap(), partition_by_fields(&t, &x).unwrap(), "{name}");
        }
    }

    #[test]
    fn models() {
        let t = |n| Theory::w1_power(n).unwrap();
        for n in [2, 3, 4] {
            let x = Manifold::Model(AlgebraicModel::real_projective(n).unwrap());
            assert!(partition_closed(&t(n), &x).unwrap().is_zero());
            assert!(partition_product_formula(&t(n), &x).unwrap().is_zero());
        }
        for (m, l) in [(1, 1), (2, 1), (1, 2)] {
            let x = Manifold::Model(AlgebraicModel::dold(m, l).unwrap());
            assert_eq!(partition_closed(&t(m + 2 * l), &x).unwrap(), CyclotomicScalar::integer(1));
        }
    }

    #[test]
    fn presentation_route_is_untwisted_only() {
        let x = Manifold::Presentation(Presentation::surface(1));
        assert!(matches!(partition_closed(&Theory::w1_power(2).unwrap(), &x), Err(TqftError::Unsupported(_))));
    }
}

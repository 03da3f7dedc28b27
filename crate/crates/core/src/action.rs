//! The topological action `S(X, f)` and its image under `φ`.

use thiserror::Error;

use crate::fields::{field_class_mod2, FieldError, GaugeField};
use crate::groups::{Cochain, CocycleError, CoefficientEmbedding, FiniteGroup, GroupCocycle};
use crate::scalars::{CyclotomicScalar, ScalarError};
use crate::topology::{cup_power_pairing, AlgebraicModel, DeltaComplex, TopologyError};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ActionError {
    #[error("incompatible theory: {0}")]
    Incompatible(String),
    #[error("{0} is not supported on this manifold encoding")]
    Unsupported(&'static str),
    #[error("cocycle theory with N = {0} needs a complex carrying an orientation")]
    NeedsOrientation(u32),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Topology(#[from] TopologyError),
    #[error(transparent)]
    Cocycle(#[from] CocycleError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TheoryKind {
    Untwisted,
    /// `w₁ⁿ` on `Γ = Z/2`.
    W1Power(usize),
    Cocycle(GroupCocycle),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theory {
    kind: TheoryKind,
    group: FiniteGroup,
    embedding: CoefficientEmbedding,
}

impl Theory {
    pub fn untwisted(group: FiniteGroup) -> Self {
        Self { kind: TheoryKind::Untwisted, group, embedding: CoefficientEmbedding::new(1).expect("level 1") }
    }

    pub fn w1_power(n: usize) -> Result<Self, ActionError> {
        if n == 0 {
            return Err(ActionError::Incompatible("w₁ power must be positive".into()));
        }
        Ok(Self {
            kind: TheoryKind::W1Power(n),
            group: FiniteGroup::cyclic(2).expect("Z/2"),
            embedding: CoefficientEmbedding::new(2)?,
        })
    }

    pub fn cocycle(omega: GroupCocycle) -> Result<Self, ActionError> {
        let embedding = CoefficientEmbedding::new(omega.modulus())?;
        Ok(Self { group: omega.group().clone(), kind: TheoryKind::Cocycle(omega), embedding })
    }

    /// Checks the kind against an explicitly supplied group.
    pub fn with_group(kind: TheoryKind, group: FiniteGroup) -> Result<Self, ActionError> {
        let theory = match &kind {
            TheoryKind::Untwisted => Self::untwisted(group.clone()),
            TheoryKind::W1Power(n) => Self::w1_power(*n)?,
            TheoryKind::Cocycle(omega) => Self::cocycle(omega.clone())?,
        };
        if theory.group != group {
            return Err(ActionError::Incompatible(match kind {
                TheoryKind::W1Power(_) => "w₁ powers need Γ = Z/2".into(),
                _ => "cocycle lives on a different group".into(),
            }));
        }
        Ok(theory)
    }

    pub fn kind(&self) -> &TheoryKind {
        &self.kind
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn embedding(&self) -> CoefficientEmbedding {
        self.embedding
    }

    pub fn modulus(&self) -> u32 {
        self.embedding.modulus()
    }

    pub fn is_untwisted(&self) -> bool {
        matches!(self.kind, TheoryKind::Untwisted)
    }

    /// The dimension the theory is defined in, if fixed.
    pub fn dimension(&self) -> Option<usize> {
        match &self.kind {
            TheoryKind::Untwisted => None,
            TheoryKind::W1Power(n) => Some(*n),
            TheoryKind::Cocycle(omega) => Some(omega.degree()),
        }
    }

    /// The cocycle representing the theory on `BΓ`, if twisted.
    pub fn group_cocycle(&self) -> Option<GroupCocycle> {
        match &self.kind {
            TheoryKind::Untwisted => None,
            TheoryKind::W1Power(n) => GroupCocycle::w1_power(*n).ok(),
            TheoryKind::Cocycle(omega) => Some(omega.clone()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionValue {
    pub exponent: u64,
    pub modulus: u32,
    pub scalar: CyclotomicScalar,
}

impl ActionValue {
    fn new(theory: &Theory, exponent: u64) -> Self {
        let modulus = theory.modulus();
        let exponent = exponent % modulus as u64;
        Self { exponent, modulus, scalar: theory.embedding.embed(exponent) }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum ManifoldRef<'a> {
    Complex(&'a DeltaComplex),
    Model(&'a AlgebraicModel),
}

impl ManifoldRef<'_> {
    pub fn dimension(&self) -> usize {
        match self {
            ManifoldRef::Complex(k) => k.dimension(),
            ManifoldRef::Model(m) => m.dimension(),
        }
    }
}

fn check_dimension(theory: &Theory, x: ManifoldRef<'_>) -> Result<(), ActionError> {
    if let Some(n) = theory.dimension() {
        if n != x.dimension() {
            return Err(ActionError::Incompatible(format!(
                "theory of degree {n} on a manifold of dimension {}",
                x.dimension()
            )));
        }
    }
    Ok(())
}

/// `S(X, f)` for a field given as a flat coloring (complex) or a
/// homomorphism on the model's presentation.
pub fn action_value(theory: &Theory, x: ManifoldRef<'_>, f: &GaugeField) -> Result<ActionValue, ActionError> {
    check_dimension(theory, x)?;
    let exponent = match (&theory.kind, x) {
        (TheoryKind::Untwisted, _) => 0,
        (TheoryKind::W1Power(_), ManifoldRef::Complex(k)) => {
            let v = field_class_mod2(k, f, &theory.group)?;
            cup_power_pairing(k, &v)? as u64
        }
        (TheoryKind::W1Power(_), ManifoldRef::Model(m)) => {
            let GaugeField::Hom(images) = f else {
                return Err(ActionError::Incompatible("models take homomorphism fields".into()));
            };
            let bits: Vec<bool> = images.iter().map(|&g| g != theory.group.identity()).collect();
            let coords = m.coordinates_of_hom(&bits)?;
            m.tau(&coords)? as u64
        }
        (TheoryKind::Cocycle(omega), ManifoldRef::Complex(k)) => state_sum(omega, k, f)?,
        (TheoryKind::Cocycle(_), ManifoldRef::Model(_)) => return Err(ActionError::Unsupported("a cocycle theory")),
    };
    Ok(ActionValue::new(theory, exponent))
}

/// `Σ_σ ε_σ ω(g₀₁, g₁₂, …)` over top simplices.
fn state_sum(omega: &GroupCocycle, k: &DeltaComplex, f: &GaugeField) -> Result<u64, ActionError> {
    let n = k.dimension();
    let modulus = omega.modulus() as i64;
    let GaugeField::Coloring(colors) = f else {
        return Err(ActionError::Incompatible("complexes take edge colorings".into()));
    };
    if colors.len() != k.edge_count() {
        return Err(FieldError::WrongField { expected: k.edge_count() }.into());
    }
    let signs: Option<&[i8]> = if modulus > 2 {
        Some(k.orientation().ok_or(ActionError::NeedsOrientation(omega.modulus()))?)
    } else {
        None
    };
    let mut total: i64 = 0;
    let mut args = vec![0usize; n];
    for s in 0..k.simplex_count(n) {
        for (i, a) in args.iter_mut().enumerate() {
            *a = colors[k.edge_of(n, s, i, i + 1)];
        }
        let value = omega.get(&args) as i64;
        total += signs.map_or(1, |e| e[s] as i64) * value;
    }
    Ok(total.rem_euclid(modulus) as u64)
}

/// The theory with `ω` replaced by `ω · δη`.
pub fn coboundary_shift(theory: &Theory, eta: &Cochain) -> Result<Theory, ActionError> {
    match &theory.kind {
        TheoryKind::Cocycle(omega) => Theory::cocycle(omega.shifted_by(eta)?),
        _ => Err(ActionError::Incompatible("coboundary shifts need a cocycle theory".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::{enumerate_homs, flat_fields_on_complex};
    use crate::topology::{builtin_complex, Builtin};

    #[test]
    fn untwisted_action_vanishes() {
        let k = builtin_complex(&Builtin::Torus).unwrap();
        let g = FiniteGroup::symmetric(3).unwrap();
        let t = Theory::untwisted(g.clone());
        for f in flat_fields_on_complex(&k, &g).unwrap() {
            let a = action_value(&t, ManifoldRef::Complex(&k), &f).unwrap();
            assert_eq!(a.exponent, 0);
            assert_eq!(a.scalar, CyclotomicScalar::one(1).unwrap());
        }
    }

    #[test]
    fn rp2_nontrivial_field_has_action_one() {
        let k = builtin_complex(&Builtin::Rp2).unwrap();
        let t = Theory::w1_power(2).unwrap();
        let fields = flat_fields_on_complex(&k, t.group()).unwrap();
        let a = action_value(&t, ManifoldRef::Complex(&k), &fields[1]).unwrap();
        assert_eq!(a.exponent, 1);
        assert_eq!(a.scalar, CyclotomicScalar::integer(-1));
    }

    #[test]
    fn w1_theory_agrees_with_its_cocycle() {
        let t = Theory::w1_power(2).unwrap();
        let c = Theory::cocycle(GroupCocycle::w1_power(2).unwrap()).unwrap();
        for name in ["torus", "klein", "rp2", "sigma(2)", "torus_grid"] {
            let k = builtin_complex(&name.parse().unwrap()).unwrap();
            for f in flat_fields_on_complex(&k, t.group()).unwrap() {
                let a = action_value(&t, ManifoldRef::Complex(&k), &f).unwrap();
                let b = action_value(&c, ManifoldRef::Complex(&k), &f).unwrap();
                assert_eq!(a, b, "{name}");
            }
        }
    }

    #[test]
    fn model_route() {
        let m = AlgebraicModel::real_projective(3).unwrap();
        let t = Theory::w1_power(3).unwrap();
        let homs = enumerate_homs(m.presentation(), t.group()).unwrap();
        let values: Vec<u64> = homs
            .iter()
            .map(|f| action_value(&t, ManifoldRef::Model(&m), f).unwrap().exponent)
            .collect();
        assert_eq!(values, vec![0, 1]);
        let c = Theory::cocycle(GroupCocycle::w1_power(3).unwrap()).unwrap();
        assert_eq!(action_value(&c, ManifoldRef::Model(&m), &homs[0]), Err(ActionError::Unsupported("a cocycle theory")));
    }

    #[test]
    fn dimension_and_orientation_checks() {
        let k = builtin_complex(&Builtin::Klein).unwrap();
        let z3 = FiniteGroup::cyclic(3).unwrap();
        let omega = GroupCocycle::trivial(&z3, 2, 3).unwrap();
        let t = Theory::cocycle(omega).unwrap();
        let f = GaugeField::Coloring(vec![0; k.edge_count()]);
        assert_eq!(action_value(&t, ManifoldRef::Complex(&k), &f), Err(ActionError::NeedsOrientation(3)));
        let w3 = Theory::w1_power(3).unwrap();
        assert!(matches!(action_value(&w3, ManifoldRef::Complex(&k), &f), Err(ActionError::Incompatible(_))));
        assert!(Theory::with_group(TheoryKind::W1Power(2), z3).is_err());
    }

    #[test]
    fn shift_requires_cocycle_theory() {
        let eta = Cochain::zero(&FiniteGroup::cyclic(2).unwrap(), 1, 2);
        let t = Theory::cocycle(GroupCocycle::w1_power(2).unwrap()).unwrap();
        assert_eq!(coboundary_shift(&t, &eta).unwrap(), t);
        assert!(coboundary_shift(&Theory::w1_power(2).unwrap(), &eta).is_err());
    }
}

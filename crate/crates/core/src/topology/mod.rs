//! Closed manifolds as Δ-complexes or as presented cohomology rings, with
//! mod-2 cohomology and cup powers.

mod builtins;
mod complex;
mod homology;
mod model;

use thiserror::Error;

pub use builtins::{builtin_complex, builtin_names, builtin_presentation, Builtin};
pub use complex::{ComplexInput, DeltaComplex, ValidationReport};
pub use homology::{
    betti_mod2, coboundary_mod2, cup_mod2, cup_power_pairing, object_condition, CochainMod2, CohomologyMod2,
    FundamentalClassMod2, ObjectCondition, Spectrum,
};
pub use model::{parse_monomial, AlgebraicModel, ModelSpec, Monomial, RewriteRule, RingGenerator, REWRITE_STEP_BUDGET};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("complex has no simplices")]
    Empty,
    #[error("complexes of dimension 0 are not supported")]
    ZeroDimensional,
    #[error("top simplices have different dimensions")]
    MixedDimensions,
    #[error("simplex {0:?} repeats a vertex")]
    DegenerateSimplex(Vec<usize>),
    #[error("{dim}-simplex {simplex} lists {got} faces")]
    FaceArity { dim: usize, simplex: usize, got: usize },
    #[error("{dim}-simplex {simplex} references missing face {face}")]
    FaceOutOfRange { dim: usize, simplex: usize, face: usize },
    #[error("face identity ∂{i}∂{j} = ∂{}∂{i} fails on {dim}-simplex {simplex}", j - 1)]
    FaceIdentity { dim: usize, simplex: usize, i: usize, j: usize },
    #[error("codimension-one simplex {ridge} is a face of {cofaces} top simplices, expected 2")]
    NotClosed { ridge: usize, cofaces: usize },
    #[error("invalid orientation: {0}")]
    BadOrientation(String),
    #[error("polygon word {0:?} must use each letter exactly twice and have at least 4 sides")]
    BadWord(String),
    #[error("unknown builtin manifold {0:?}")]
    UnknownBuiltin(String),
    #[error("cochain has degree {got}, expected {expected}")]
    WrongDegree { expected: usize, got: usize },
    #[error("cochain has {got} values, complex has {expected} simplices")]
    WrongLength { expected: usize, got: usize },
    #[error("cochain is not a cocycle")]
    NotCocycle,
    #[error("algebraic model: {0}")]
    Model(String),
    #[error("rewriting did not terminate within {0} steps")]
    RewriteBudget(usize),
    #[error("rewrite system is not confluent at monomial {0:?}")]
    NotConfluent(Vec<u32>),
}

//! Exact Yang-Baxter operators built from finite-dimensional (super)algebras,
//! together with checkers for the associative, Lie, Jordan and unified
//! identities.
//!
//! Everything is exact: scalars are arbitrary-precision rationals or
//! residues modulo a prime, and every check is a test of equality.
//!
//! - [`scalar`], [`matrix`]: the ground field and tensor-product linear algebra
//!   (Kronecker products, the twist, the three operator lifts).
//! - [`algebra`], [`identities`]: structure-constant algebras and identity checks.
//! - [`yb`]: the associative-algebra and Lie-superalgebra operator families,
//!   braid and quantum Yang-Baxter checks.
//! - [`gate`]: the two-qubit matrix family and its controlled-Z / CNOT link.
//! - [`tensor`]: symbolic products on the tensor algebra in a free algebra.

pub mod algebra;
pub mod catalog;
pub mod gate;
pub mod identities;
pub mod matrix;
pub mod scalar;
pub mod tensor;
pub mod yb;

pub use algebra::{Element, FiniteAlgebra};
pub use identities::{CheckReport, Verdict, Witness};
pub use matrix::Matrix;
pub use scalar::{Field, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not a supported prime modulus")]
    NotPrime(u64),
    #[error("cannot parse scalar {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("operator is {rows}x{cols}, expected {d}²x{d}²")]
    OperatorShape { rows: usize, cols: usize, d: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("rows have different lengths")]
    RaggedRows,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("algebra must have dimension at least 1")]
    EmptyAlgebra,
    #[error("structure table for dimension {dim} needs {expected} entries, found {found}")]
    TableSize { dim: usize, expected: usize, found: usize },
    #[error("expected {expected} coordinates, found {found}")]
    ElementDimension { expected: usize, found: usize },
    #[error("declared unit fails u·e = e·u = e at basis index {index}")]
    InvalidUnit { index: usize },
    #[error("grading degrees must be 0 or 1, found {0}")]
    GradingValue(u8),
    #[error("grading is not respected: e_{i}·e_{j} has a component on e_{k} of the wrong degree")]
    GradingNotHomogeneous { i: usize, j: usize, k: usize },
    #[error("algebra carries no grading")]
    MissingGrading,
    #[error("Jordan identity checks need characteristic 0 or at least 5, got {0}")]
    UnsupportedJordanField(Field),
    #[error("a parameter grid is required over Q")]
    GridRequired,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum YbError {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("algebra has no unit")]
    MissingUnit,
    #[error("algebra is not a Lie superalgebra: {0}")]
    NotSuperLie(String),
    #[error("z is not central")]
    NotCentral,
    #[error("z must be homogeneous of even degree")]
    NotEven,
    #[error("parameter q must be nonzero")]
    ZeroQ,
    #[error("eta must be 0 or 1, got {0}")]
    BadEta(u8),
    #[error("eta = 1 with q = -1 has no realization (1 + q = 0)")]
    UnrealizablePair,
    #[error("operator size {size} exceeds the budget of {budget}")]
    OperatorBudget { size: usize, budget: usize },
    #[error("{triples} parameter triples exceed the budget of {budget}")]
    TripleBudget { triples: u64, budget: u64 },
    #[error("exhaustive scans need a prime field")]
    NeedsPrimeField,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TensorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("word of length {len} exceeds the truncation degree {max}")]
    Truncation { len: usize, max: usize },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator {0:?} has no assigned value")]
    Unassigned(String),
    #[error("expected a tensor of degree {expected}, found {found}")]
    Degree { expected: usize, found: usize },
    #[error("evaluation needs a unital algebra")]
    MissingUnit,
    #[error("cannot parse expansion: {0}")]
    Parse(String),
}

//! The two-qubit family
//!
//! ```text
//! [ 1   0    0   0 ]
//! [ 0   1    0   0 ]
//! [ 0  1-q   q   0 ]
//! [ η   0    0  -q ]
//! ```
//!
//! with `η ∈ {0, 1}`, `q ≠ 0`, and its realization as `R∘τ` for the
//! associative-algebra operator with `α = γ = q`, `β = 1` on
//! `A = k[X]/(X² − c)`, `c = η/(1+q)`, basis order `1⊗1, 1⊗x, x⊗1, x⊗x`.
//!
//! The display above lists images by rows: row `i` is the image of the
//! `i`-th basis tensor. It is the transpose of the column-convention matrix
//! used everywhere else in the crate.

use serde::Serialize;

use crate::catalog::quadratic;
use crate::identities::{CheckReport, Witness};
use crate::matrix::{twist, Matrix};
use crate::scalar::{Field, Scalar};
use crate::yb::{build_assoc_operator, check_qybe, EquationCheck};
use crate::YbError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateParams {
    eta: u8,
    q: Scalar,
}

impl GateParams {
    pub fn new(eta: u8, q: Scalar) -> Result<GateParams, YbError> {
        if eta > 1 {
            return Err(YbError::BadEta(eta));
        }
        if q.is_zero() {
            return Err(YbError::ZeroQ);
        }
        Ok(GateParams { eta, q })
    }

    pub fn eta(&self) -> u8 {
        self.eta
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn field(&self) -> Field {
        self.q.field()
    }

    /// `η = 1, q = −1` has no realization since `1 + q = 0`.
    pub fn is_realizable(&self) -> bool {
        !(self.eta == 1 && (&self.q + &self.field().one()).is_zero())
    }
}

/// The family matrix exactly as displayed (rows are images).
pub fn gate_matrix(p: &GateParams) -> Matrix {
    let f = p.field();
    let (z, o) = (f.zero(), f.one());
    let q = p.q.clone();
    let eta = Scalar::from_int(f, p.eta as i64);
    Matrix::from_rows(
        f,
        vec![
            vec![o.clone(), z.clone(), z.clone(), z.clone()],
            vec![z.clone(), o.clone(), z.clone(), z.clone()],
            vec![z.clone(), &o - &q, q.clone(), z.clone()],
            vec![eta, z.clone(), z, -q],
        ],
    )
    .expect("4x4 over one field")
}

/// How a realization was obtained, and the checks that tie it to the
/// displayed matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConventionReport {
    pub algebra: String,
    pub c: Scalar,
    pub basis_order: [&'static str; 4],
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub layout: &'static str,
    /// The column-convention matrix of `R∘τ`.
    pub column_matrix: Matrix,
    /// Transpose of `column_matrix` equals the displayed matrix.
    pub matches_display: bool,
}

/// Rebuilds the family member from the algebra operator and compares it with
/// [`gate_matrix`]. Returns the rows-as-images matrix and the report.
pub fn realize_from_algebra(p: &GateParams) -> Result<(Matrix, ConventionReport), YbError> {
    if !p.is_realizable() {
        return Err(YbError::UnrealizablePair);
    }
    let f = p.field();
    let one = f.one();
    let c = if p.eta == 0 {
        f.zero()
    } else {
        one.checked_div(&(&one + &p.q))?
    };
    let alg = quadratic(&c);
    let r = build_assoc_operator(&alg, &p.q, &one, &p.q)?;
    let column_matrix = r.mul(&twist(f, 2)?)?;
    let rows_as_images = column_matrix.transpose();
    let matches_display = rows_as_images == gate_matrix(p);
    let report = ConventionReport {
        algebra: format!("k[X]/(X^2 - {c})"),
        c,
        basis_order: ["1⊗1", "1⊗x", "x⊗1", "x⊗x"],
        alpha: p.q.clone(),
        beta: one,
        gamma: p.q.clone(),
        layout: "rows-as-images (transpose of column convention)",
        column_matrix,
        matches_display,
    };
    Ok((rows_as_images, report))
}

pub fn cz(field: Field) -> Matrix {
    gate_matrix(&GateParams::new(0, field.one()).expect("q = 1"))
}

pub fn cnot(field: Field) -> Matrix {
    Matrix::from_int_rows(field, &[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]).expect("4x4")
}

/// `[[1, 1], [1, −1]]`, the Hadamard gate without its `1/√2`.
pub fn hadamard_unnormalized(field: Field) -> Matrix {
    Matrix::from_int_rows(field, &[[1, 1], [1, -1]]).expect("2x2")
}

/// `(I ⊗ H̃)·CZ·(I ⊗ H̃) = 2·CNOT` over the integers.
pub fn cz_cnot_bridge() -> CheckReport {
    let f = Field::Rational;
    let ih = Matrix::identity(f, 2).kron(&hadamard_unnormalized(f)).expect("same field");
    let lhs = Matrix::product([&ih, &cz(f), &ih].into_iter()).expect("4x4");
    let rhs = cnot(f).scale(&Scalar::from_int(f, 2)).expect("same field");
    match lhs.first_differing_column(&rhs) {
        None => CheckReport::holds("cz_cnot_bridge"),
        Some(index) => CheckReport::fails(
            "cz_cnot_bridge",
            Witness::Column { index },
            "(I⊗H)·CZ·(I⊗H) != 2·CNOT",
        ),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GateQybeRow {
    pub params: GateParams,
    pub qybe: EquationCheck,
}

/// QYBE for each displayed family member.
pub fn gate_qybe_scan(grid: &[GateParams]) -> Result<Vec<GateQybeRow>, YbError> {
    grid.iter()
        .map(|p| {
            Ok(GateQybeRow {
                params: p.clone(),
                qybe: check_qybe(&gate_matrix(p), 2)?,
            })
        })
        .collect()
}

/// `q ∈ {±1, ±2, ±3, 1/2, −1/3}`, `η ∈ {0, 1}`, without `(1, −1)`.
pub fn standard_grid() -> Vec<GateParams> {
    let f = Field::Rational;
    let qs = ["1", "-1", "2", "-2", "3", "-3", "1/2", "-1/3"];
    let mut grid = Vec::new();
    for eta in 0..=1u8 {
        for q in qs {
            let p = GateParams::new(eta, Scalar::parse(f, q).expect("literal")).expect("q != 0");
            if p.is_realizable() {
                grid.push(p);
            }
        }
    }
    grid
}

//! Yang-Baxter operators: braid and quantum Yang-Baxter checks, the
//! associative-algebra family `R(a⊗b) = α ab⊗1 + β 1⊗ab − γ a⊗b` and the
//! Lie-superalgebra family `x⊗y ↦ α[x,y]⊗z + (−1)^{|x||y|} y⊗x`.
//!
//! Operators are dense `d² × d²` matrices in the lexicographic basis of
//! `V ⊗ V`, column convention.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Element, FiniteAlgebra};
use crate::identities::{super_lie_failure, Verdict};
use crate::matrix::{lift12, lift13, lift23, twist, Matrix};
use crate::scalar::{Field, Scalar};
use crate::YbError;

/// Verdict of one operator equation with the first basis tensor (column of
/// the `d³ × d³` composites) on which the two sides disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquationCheck {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<usize>,
}

impl EquationCheck {
    fn compare(lhs: &Matrix, rhs: &Matrix) -> EquationCheck {
        let witness = lhs.first_differing_column(rhs);
        EquationCheck {
            verdict: Verdict::from_bool(witness.is_none()),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }
}

/// Both sides of the braid relation `R12 R23 R12 = R23 R12 R23`.
pub fn braid_sides(r: &Matrix, d: usize) -> Result<(Matrix, Matrix), YbError> {
    let a = lift12(r, d)?;
    let b = lift23(r, d)?;
    let lhs = Matrix::product([&a, &b, &a].into_iter())?;
    let rhs = Matrix::product([&b, &a, &b].into_iter())?;
    Ok((lhs, rhs))
}

/// Both sides of the QYBE `R12 R13 R23 = R23 R13 R12`.
pub fn qybe_sides(r: &Matrix, d: usize) -> Result<(Matrix, Matrix), YbError> {
    let a = lift12(r, d)?;
    let b = lift13(r, d)?;
    let c = lift23(r, d)?;
    let lhs = Matrix::product([&a, &b, &c].into_iter())?;
    let rhs = Matrix::product([&c, &b, &a].into_iter())?;
    Ok((lhs, rhs))
}

pub fn check_braid(r: &Matrix, d: usize) -> Result<EquationCheck, YbError> {
    let (lhs, rhs) = braid_sides(r, d)?;
    Ok(EquationCheck::compare(&lhs, &rhs))
}

pub fn check_qybe(r: &Matrix, d: usize) -> Result<EquationCheck, YbError> {
    let (lhs, rhs) = qybe_sides(r, d)?;
    Ok(EquationCheck::compare(&lhs, &rhs))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct YbVerdict {
    pub braid: EquationCheck,
    pub qybe: EquationCheck,
    pub invertible: bool,
}

impl YbVerdict {
    /// Invertible and braid: a Yang-Baxter operator.
    pub fn is_yb_operator(&self) -> bool {
        self.invertible && self.braid.holds()
    }
}

pub fn verdict(r: &Matrix, d: usize) -> Result<YbVerdict, YbError> {
    Ok(YbVerdict {
        braid: check_braid(r, d)?,
        qybe: check_qybe(r, d)?,
        invertible: r.is_invertible(),
    })
}

fn tensor(x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    x.iter().flat_map(|a| y.iter().map(move |b| a * b)).collect()
}

fn axpy(acc: &mut [Scalar], s: &Scalar, v: &[Scalar]) {
    if s.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(v) {
        if !b.is_zero() {
            *a = &*a + &(s * b);
        }
    }
}

fn check_params(alg: &FiniteAlgebra, params: &[&Scalar]) -> Result<(), YbError> {
    match params.iter().find(|p| p.field() != alg.field()) {
        Some(p) => Err(crate::LinalgError::FieldMismatch {
            left: alg.field(),
            right: p.field(),
        }
        .into()),
        None => Ok(()),
    }
}

/// Matrix of `a⊗b ↦ α ab⊗1 + β 1⊗ab − γ a⊗b` on `A⊗A`.
pub fn build_assoc_operator(
    alg: &FiniteAlgebra,
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
) -> Result<Matrix, YbError> {
    let unit = alg.unit().ok_or(YbError::MissingUnit)?;
    check_params(alg, &[alpha, beta, gamma])?;
    let n = alg.dim();
    let mut columns = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let ab = alg.basis_product(i, j);
            let mut col = vec![alg.field().zero(); n * n];
            axpy(&mut col, alpha, &tensor(ab.coords(), unit.coords()));
            axpy(&mut col, beta, &tensor(unit.coords(), ab.coords()));
            col[i * n + j] = &col[i * n + j] - gamma;
            columns.push(col);
        }
    }
    Ok(Matrix::from_columns(alg.field(), n * n, &columns)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum ParamCase {
    /// `α = γ ≠ 0`, `β ≠ 0`
    #[serde(rename = "i")]
    AlphaEqualsGamma,
    /// `β = γ ≠ 0`, `α ≠ 0`
    #[serde(rename = "ii")]
    BetaEqualsGamma,
    /// `α = β = 0`, `γ ≠ 0`
    #[serde(rename = "iii")]
    ScalarOnly,
}

impl fmt::Display for ParamCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ParamCase::AlphaEqualsGamma => "i",
            ParamCase::BetaEqualsGamma => "ii",
            ParamCase::ScalarOnly => "iii",
        })
    }
}

/// Which of the three parameter conditions `(α, β, γ)` satisfies. The first
/// two overlap when `α = β = γ ≠ 0`.
pub fn classify_params(alpha: &Scalar, beta: &Scalar, gamma: &Scalar) -> Vec<ParamCase> {
    let mut cases = Vec::new();
    if alpha == gamma && !gamma.is_zero() && !beta.is_zero() {
        cases.push(ParamCase::AlphaEqualsGamma);
    }
    if beta == gamma && !gamma.is_zero() && !alpha.is_zero() {
        cases.push(ParamCase::BetaEqualsGamma);
    }
    if alpha.is_zero() && beta.is_zero() && !gamma.is_zero() {
        cases.push(ParamCase::ScalarOnly);
    }
    cases
}

/// Size limits for exhaustive scans.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanBudget {
    /// Largest admissible operator side `d²`.
    pub max_operator: usize,
    pub max_triples: u64,
}

impl Default for ScanBudget {
    fn default() -> Self {
        ScanBudget {
            max_operator: 256,
            max_triples: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssocScanRow {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub cases: Vec<ParamCase>,
    pub predicted: bool,
    pub braid: Verdict,
    pub invertible: bool,
}

impl AssocScanRow {
    pub fn is_yb_operator(&self) -> bool {
        self.braid.holds() && self.invertible
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssocScan {
    pub rows: Vec<AssocScanRow>,
    /// Classified triples that are not Yang-Baxter operators.
    pub exceptions: usize,
    /// Unclassified triples that are Yang-Baxter operators anyway.
    pub extras: usize,
}

/// Every `(α, β, γ) ∈ GF(p)³` in lexicographic order, compared against
/// [`classify_params`].
pub fn scan_assoc_family(alg: &FiniteAlgebra, budget: ScanBudget, parallel: bool) -> Result<AssocScan, YbError> {
    let field = alg.field();
    let p = match field {
        Field::Prime(m) => m.get(),
        Field::Rational => return Err(YbError::NeedsPrimeField),
    };
    let size = alg.dim() * alg.dim();
    if size > budget.max_operator {
        return Err(YbError::OperatorBudget {
            size,
            budget: budget.max_operator,
        });
    }
    let triples = p.saturating_mul(p).saturating_mul(p);
    if triples > budget.max_triples {
        return Err(YbError::TripleBudget {
            triples,
            budget: budget.max_triples,
        });
    }
    alg.unit().ok_or(YbError::MissingUnit)?;
    let elems = field.elements().expect("prime field");
    let mut params: Vec<[Scalar; 3]> = Vec::with_capacity(triples as usize);
    for a in &elems {
        for b in &elems {
            for c in &elems {
                params.push([a.clone(), b.clone(), c.clone()]);
            }
        }
    }
    let row = |[alpha, beta, gamma]: &[Scalar; 3]| -> Result<AssocScanRow, YbError> {
        let r = build_assoc_operator(alg, alpha, beta, gamma)?;
        let cases = classify_params(alpha, beta, gamma);
        Ok(AssocScanRow {
            predicted: !cases.is_empty(),
            cases,
            braid: check_braid(&r, alg.dim())?.verdict,
            invertible: r.is_invertible(),
            alpha: alpha.clone(),
            beta: beta.clone(),
            gamma: gamma.clone(),
        })
    };
    let rows: Vec<AssocScanRow> = if parallel {
        params.par_iter().map(row).collect::<Result<_, _>>()?
    } else {
        params.iter().map(row).collect::<Result<_, _>>()?
    };
    let exceptions = rows.iter().filter(|r| r.predicted && !r.is_yb_operator()).count();
    let extras = rows.iter().filter(|r| !r.predicted && r.is_yb_operator()).count();
    Ok(AssocScan {
        rows,
        exceptions,
        extras,
    })
}

/// Matrix of `x⊗y ↦ α[x,y]⊗z + (−1)^{|x||y|} y⊗x`. An algebra without a
/// grading is treated as purely even.
pub fn build_superlie_operator(alg: &FiniteAlgebra, z: &Element, alpha: &Scalar) -> Result<Matrix, YbError> {
    alg.conform(z)?;
    check_params(alg, &[alpha])?;
    let grading = alg.grading_or_even();
    if let Some((_, detail)) = super_lie_failure(alg, &grading) {
        return Err(YbError::NotSuperLie(detail));
    }
    if !alg.is_central(z) {
        return Err(YbError::NotCentral);
    }
    if z.coords().iter().zip(&grading).any(|(c, &g)| g == 1 && !c.is_zero()) {
        return Err(YbError::NotEven);
    }
    let n = alg.dim();
    let field = alg.field();
    let mut columns = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let bracket = alg.basis_product(i, j);
            let mut col = vec![field.zero(); n * n];
            axpy(&mut col, alpha, &tensor(bracket.coords(), z.coords()));
            let s = if grading[i] * grading[j] == 1 { -field.one() } else { field.one() };
            col[j * n + i] = &col[j * n + i] + &s;
            columns.push(col);
        }
    }
    Ok(Matrix::from_columns(field, n * n, &columns)?)
}

/// `braid(R)`, `qybe(R∘τ)` and `qybe(τ∘R)`, which must coincide.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransferVerdict {
    pub braid: Verdict,
    pub qybe_r_tau: Verdict,
    pub qybe_tau_r: Verdict,
}

impl TransferVerdict {
    pub fn agree(&self) -> bool {
        self.braid == self.qybe_r_tau && self.braid == self.qybe_tau_r
    }
}

pub fn transfer_check(r: &Matrix, d: usize) -> Result<TransferVerdict, YbError> {
    let t = twist(r.field(), d)?;
    let braid = check_braid(r, d)?.verdict;
    let qybe_r_tau = check_qybe(&r.mul(&t)?, d)?.verdict;
    let qybe_tau_r = check_qybe(&t.mul(r)?, d)?.verdict;
    Ok(TransferVerdict {
        braid,
        qybe_r_tau,
        qybe_tau_r,
    })
}

/// An operator described by where it comes from.
#[derive(Clone, Debug)]
pub enum FamilySpec {
    Assoc {
        algebra: FiniteAlgebra,
        alpha: Scalar,
        beta: Scalar,
        gamma: Scalar,
    },
    SuperLie {
        algebra: FiniteAlgebra,
        z: Element,
        alpha: Scalar,
    },
    Explicit {
        matrix: Matrix,
        d: usize,
    },
}

impl FamilySpec {
    /// The operator matrix and the dimension `d` of `V`.
    pub fn build(&self) -> Result<(Matrix, usize), YbError> {
        match self {
            FamilySpec::Assoc {
                algebra,
                alpha,
                beta,
                gamma,
            } => Ok((build_assoc_operator(algebra, alpha, beta, gamma)?, algebra.dim())),
            FamilySpec::SuperLie { algebra, z, alpha } => Ok((build_superlie_operator(algebra, z, alpha)?, algebra.dim())),
            FamilySpec::Explicit { matrix, d } => {
                if matrix.rows() != d * d || matrix.cols() != d * d {
                    return Err(crate::LinalgError::OperatorShape {
                        rows: matrix.rows(),
                        cols: matrix.cols(),
                        d: *d,
                    }
                    .into());
                }
                Ok((matrix.clone(), *d))
            }
        }
    }
}

/// `d` with `d² = side`, if any.
pub fn tensor_root(side: usize) -> Option<usize> {
    (1..=side).take_while(|d| d * d <= side).find(|d| d * d == side)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;

    const Q: Field = Field::Rational;

    fn qs(n: i64) -> Scalar {
        Scalar::from_int(Q, n)
    }

    fn bump_03() -> Matrix {
        let mut m = Matrix::identity(Q, 4);
        m.set(0, 3, Q.one()).unwrap();
        m
    }

    #[test]
    fn braid_examples() {
        assert!(check_braid(&twist(Q, 2).unwrap(), 2).unwrap().holds());
        assert!(check_braid(&Matrix::identity(Q, 4), 2).unwrap().holds());
        let c = check_braid(&bump_03(), 2).unwrap();
        assert_eq!(c.verdict, Verdict::Fails);
        let w = c.witness.unwrap();
        let (lhs, rhs) = braid_sides(&bump_03(), 2).unwrap();
        assert_ne!(lhs.column(w), rhs.column(w));
    }

    /// I₄ + E₀₃ by hand: R = I + N with N = e₀e₃ᵀ, N² = 0. On (k²)⊗³ the
    /// lifts are I + N12 and I + N23 with N12·N23 = 0 = N23·N12 (index
    /// mismatch), so both sides reduce to I + 2N12 + N23 vs I + N12 + 2N23.
    #[test]
    fn braid_bump_against_hand_expansion() {
        let r = bump_03();
        let n12 = lift12(&r, 2).unwrap().sub(&Matrix::identity(Q, 8)).unwrap();
        let n23 = lift23(&r, 2).unwrap().sub(&Matrix::identity(Q, 8)).unwrap();
        assert!(n12.mul(&n23).unwrap().is_zero());
        let two = qs(2);
        let lhs = Matrix::identity(Q, 8).add(&n12.scale(&two).unwrap()).unwrap().add(&n23).unwrap();
        let (l, _) = braid_sides(&r, 2).unwrap();
        assert_eq!(l, lhs);
    }

    #[test]
    fn qybe_examples() {
        let diag = Matrix::diagonal(Q, &[qs(2), qs(-1), qs(5), qs(3)]).unwrap();
        assert!(check_qybe(&diag, 2).unwrap().holds());
        assert!(check_qybe(&twist(Q, 2).unwrap(), 2).unwrap().holds());
        // composing with the twist breaks it, as the braid failure of I + E03 predicts
        let broken = bump_03().mul(&twist(Q, 2).unwrap()).unwrap();
        let c = check_qybe(&broken, 2).unwrap();
        let (lhs, rhs) = qybe_sides(&broken, 2).unwrap();
        assert_ne!(lhs.column(c.witness.unwrap()), rhs.column(c.witness.unwrap()));
    }

    /// With R = I + N, N = E03, every product of two of N12, N13, N23 is zero
    /// (the output index pattern of one never matches the input of the
    /// other), so both QYBE sides equal I + N12 + N13 + N23.
    #[test]
    fn qybe_holds_for_bump_by_nilpotency() {
        let r = bump_03();
        let id = Matrix::identity(Q, 8);
        let n: Vec<Matrix> = [lift12(&r, 2), lift13(&r, 2), lift23(&r, 2)]
            .into_iter()
            .map(|l| l.unwrap().sub(&id).unwrap())
            .collect();
        for a in &n {
            for b in &n {
                assert!(a.mul(b).unwrap().is_zero());
            }
        }
        assert!(check_qybe(&r, 2).unwrap().holds());
    }

    #[test]
    fn shape_errors() {
        assert!(check_braid(&Matrix::identity(Q, 4), 3).is_err());
        assert!(check_qybe(&Matrix::identity(Q, 5), 2).is_err());
        assert!(transfer_check(&Matrix::identity(Q, 3), 2).is_err());
    }

    #[test]
    fn assoc_operator_on_ground_field() {
        let k = ground_field(Q);
        let r = build_assoc_operator(&k, &qs(2), &qs(3), &qs(4)).unwrap();
        assert_eq!(r, Matrix::from_int_rows(Q, &[[1]]).unwrap());
    }

    #[test]
    fn assoc_operator_on_dual_numbers() {
        let a = dual_numbers(Q);
        let r = build_assoc_operator(&a, &qs(1), &qs(1), &qs(1)).unwrap();
        // columns: 1⊗1 ↦ 1⊗1, 1⊗x ↦ x⊗1, x⊗1 ↦ x⊗1 + 1⊗x − x⊗1 = 1⊗x, x⊗x ↦ −x⊗x
        let expect = Matrix::from_int_rows(Q, &[[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, -1]]).unwrap();
        assert_eq!(r, expect);
        assert!(check_braid(&r, 2).unwrap().holds());
    }

    #[test]
    fn assoc_operator_needs_unit() {
        assert_eq!(
            build_assoc_operator(&sl2(Q), &qs(1), &qs(1), &qs(1)),
            Err(YbError::MissingUnit)
        );
    }

    #[test]
    fn m2_off_family_fails_braid() {
        let r = build_assoc_operator(&matrix_units(Q), &qs(1), &qs(2), &qs(3)).unwrap();
        assert!(!check_braid(&r, 4).unwrap().holds());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_params(&qs(1), &qs(1), &qs(1)),
            vec![ParamCase::AlphaEqualsGamma, ParamCase::BetaEqualsGamma]
        );
        assert_eq!(classify_params(&qs(0), &qs(0), &qs(5)), vec![ParamCase::ScalarOnly]);
        assert!(classify_params(&qs(1), &qs(2), &qs(3)).is_empty());
        assert!(classify_params(&qs(0), &qs(0), &qs(0)).is_empty());
        assert!(classify_params(&qs(2), &qs(0), &qs(2)).is_empty());
    }

    #[test]
    fn scan_m2_gf5() {
        let f = Field::gf(5).unwrap();
        let scan = scan_assoc_family(&matrix_units(f), ScanBudget::default(), false).unwrap();
        assert_eq!(scan.rows.len(), 125);
        assert_eq!(scan.exceptions, 0);
        let idx = 25 + 2 * 5 + 3;
        let row = &scan.rows[idx];
        assert_eq!((row.alpha.to_string(), row.beta.to_string(), row.gamma.to_string()), ("1".into(), "2".into(), "3".into()));
        assert_eq!(row.braid, Verdict::Fails);
    }

    #[test]
    fn scan_ground_field_gf5() {
        let f = Field::gf(5).unwrap();
        let scan = scan_assoc_family(&ground_field(f), ScanBudget::default(), false).unwrap();
        assert_eq!(scan.exceptions, 0);
        for row in &scan.rows {
            assert!(row.braid.holds());
            assert_eq!(row.invertible, !(&(&row.alpha + &row.beta) - &row.gamma).is_zero());
        }
        assert!(scan.extras > 0);
    }

    #[test]
    fn scan_budgets() {
        let big = Field::gf(101).unwrap();
        assert!(matches!(
            scan_assoc_family(&ground_field(big), ScanBudget::default(), false),
            Err(YbError::TripleBudget { .. })
        ));
        let tight = ScanBudget {
            max_operator: 8,
            max_triples: 1000,
        };
        let f = Field::gf(5).unwrap();
        assert!(matches!(
            scan_assoc_family(&matrix_units(f), tight, false),
            Err(YbError::OperatorBudget { size: 16, budget: 8 })
        ));
        assert_eq!(
            scan_assoc_family(&matrix_units(Q), ScanBudget::default(), false),
            Err(YbError::NeedsPrimeField)
        );
    }

    #[test]
    fn superlie_abelian_is_twist() {
        let a = abelian_lie(Q, 3);
        let z = Element::from_ints(Q, &[1, -2, 5]).unwrap();
        assert_eq!(build_superlie_operator(&a, &z, &qs(7)).unwrap(), twist(Q, 3).unwrap());
    }

    #[test]
    fn superlie_heisenberg() {
        let h = heisenberg(Q);
        let r = build_superlie_operator(&h, &h.basis(2), &qs(1)).unwrap();
        let v = verdict(&r, 3).unwrap();
        assert!(v.braid.holds());
        assert!(v.invertible);
    }

    #[test]
    fn superlie_sl2_only_zero_z() {
        let s = sl2(Q);
        assert_eq!(build_superlie_operator(&s, &s.basis(2), &qs(1)), Err(YbError::NotCentral));
        assert_eq!(build_superlie_operator(&s, &s.zero(), &qs(1)).unwrap(), twist(Q, 3).unwrap());
    }

    #[test]
    fn superlie_rejects_bad_inputs() {
        let m2 = matrix_units(Q);
        assert!(matches!(
            build_superlie_operator(&m2, &m2.zero(), &qs(1)),
            Err(YbError::NotSuperLie(_))
        ));
        // in the 1|1 example the even generator u is central; the odd v is not even
        let s = super_one_one(Q);
        assert!(build_superlie_operator(&s, &s.basis(0), &qs(1)).is_ok());
        let odd_central = abelian_lie(Q, 2).with_grading(vec![0, 1]).unwrap();
        assert_eq!(
            build_superlie_operator(&odd_central, &odd_central.basis(1), &qs(1)),
            Err(YbError::NotEven)
        );
    }

    #[test]
    fn transfer_examples() {
        let t = transfer_check(&twist(Q, 2).unwrap(), 2).unwrap();
        assert_eq!(t.braid, Verdict::Holds);
        assert!(t.agree());
        let r = build_assoc_operator(&dual_numbers(Q), &qs(1), &qs(1), &qs(1)).unwrap();
        let t = transfer_check(&r, 2).unwrap();
        assert!(t.agree() && t.braid.holds());
        let t = transfer_check(&bump_03(), 2).unwrap();
        assert!(t.agree());
        assert_eq!(t.braid, Verdict::Fails);
    }

    #[test]
    fn explicit_family_checks_shape() {
        let spec = FamilySpec::Explicit {
            matrix: Matrix::identity(Q, 4),
            d: 3,
        };
        assert!(spec.build().is_err());
        assert_eq!(tensor_root(16), Some(4));
        assert_eq!(tensor_root(8), None);
    }
}

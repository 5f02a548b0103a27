//! Identity checks on structure-constant algebras.
//!
//! Multilinear identities (associativity, commutativity, the Lie and
//! super-Lie axioms, the six-term unified identity) are decided on basis
//! tuples. The Jordan identity `(x²y)x = x²(yx)` is cubic in `x`, so it is
//! decided on the grid `{0,1,2,3}ⁿ` for `x` and basis vectors for `y`: a
//! polynomial of degree at most 3 in each variable that vanishes on a
//! product of 4-point sets vanishes identically.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{homogeneity_failure, Element, FiniteAlgebra};
use crate::catalog::swap_square_family;
use crate::scalar::{Field, Scalar};
use crate::AlgebraError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Fails,
}

impl Verdict {
    pub fn from_bool(holds: bool) -> Verdict {
        if holds {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }

    pub fn holds(self) -> bool {
        self == Verdict::Holds
    }
}

/// Where a check failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Basis { i: usize },
    Pair { i: usize, j: usize },
    Triple { i: usize, j: usize, k: usize },
    /// Grid point `x` and basis index `y` of a Jordan-identity failure.
    Point { x: Vec<Scalar>, y: usize },
    Params { values: Vec<Scalar> },
    Column { index: usize },
}

/// Outcome of one named property check. A witness is present exactly when
/// the property fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    property: String,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

impl CheckReport {
    pub fn holds(property: impl Into<String>) -> CheckReport {
        CheckReport {
            property: property.into(),
            verdict: Verdict::Holds,
            witness: None,
            detail: None,
        }
    }

    pub fn fails(property: impl Into<String>, witness: Witness, detail: impl Into<String>) -> CheckReport {
        CheckReport {
            property: property.into(),
            verdict: Verdict::Fails,
            witness: Some(witness),
            detail: Some(detail.into()),
        }
    }

    fn from_failure(property: &str, failure: Option<(Witness, String)>) -> CheckReport {
        match failure {
            None => CheckReport::holds(property),
            Some((w, d)) => CheckReport::fails(property, w, d),
        }
    }

    pub fn property(&self) -> &str {
        &self.property
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    pub fn is_holds(&self) -> bool {
        self.verdict.holds()
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn detail(&self) -> Option<&str> {
        self.detail.as_deref()
    }
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)))
}

fn mul(alg: &FiniteAlgebra, x: &Element, y: &Element) -> Element {
    alg.mul_unchecked(x, y)
}

/// `(e_i e_j) e_k − e_i (e_j e_k)`.
pub fn associator(alg: &FiniteAlgebra, i: usize, j: usize, k: usize) -> Element {
    let left = mul(alg, &alg.basis_product(i, j), &alg.basis(k));
    let right = mul(alg, &alg.basis(i), &alg.basis_product(j, k));
    left.sub(&right)
}

pub fn is_associative(alg: &FiniteAlgebra) -> CheckReport {
    let failure = triples(alg.dim()).find(|&(i, j, k)| !associator(alg, i, j, k).is_zero());
    CheckReport::from_failure(
        "associative",
        failure.map(|(i, j, k)| (Witness::Triple { i, j, k }, "(e_i e_j) e_k != e_i (e_j e_k)".to_string())),
    )
}

pub fn is_commutative(alg: &FiniteAlgebra) -> CheckReport {
    let failure = pairs(alg.dim()).find(|&(i, j)| i < j && alg.basis_product(i, j) != alg.basis_product(j, i));
    CheckReport::from_failure(
        "commutative",
        failure.map(|(i, j)| (Witness::Pair { i, j }, "e_i e_j != e_j e_i".to_string())),
    )
}

fn sign(parity: u8) -> i64 {
    if parity.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Signed Jacobi sum on basis triple `(x, y, z) = (e_i, e_j, e_k)`:
/// `(−1)^{|z||x|}[x,[y,z]] + (−1)^{|x||y|}[y,[z,x]] + (−1)^{|y||z|}[z,[x,y]]`.
pub fn super_jacobi(alg: &FiniteAlgebra, grading: &[u8], i: usize, j: usize, k: usize) -> Element {
    let f = alg.field();
    let (x, y, z) = (alg.basis(i), alg.basis(j), alg.basis(k));
    let (gx, gy, gz) = (grading[i], grading[j], grading[k]);
    let t1 = mul(alg, &x, &alg.basis_product(j, k)).scale(&Scalar::from_int(f, sign(gz * gx)));
    let t2 = mul(alg, &y, &alg.basis_product(k, i)).scale(&Scalar::from_int(f, sign(gx * gy)));
    let t3 = mul(alg, &z, &alg.basis_product(i, j)).scale(&Scalar::from_int(f, sign(gy * gz)));
    t1.add(&t2).add(&t3)
}

/// Checks the super-Lie axioms against an explicit grading.
pub(crate) fn super_lie_failure(alg: &FiniteAlgebra, grading: &[u8]) -> Option<(Witness, String)> {
    let n = alg.dim();
    let f = alg.field();
    if let Some((i, j, k)) = homogeneity_failure(n, grading, |i, j, k| alg.c(i, j, k)) {
        return Some((
            Witness::Triple { i, j, k },
            "product e_i e_j has a component of the wrong degree".into(),
        ));
    }
    if let Some(i) = (0..n).find(|&i| grading[i] == 0 && !alg.basis_product(i, i).is_zero()) {
        return Some((Witness::Basis { i }, "[e_i, e_i] != 0 for even e_i".into()));
    }
    for (i, j) in pairs(n) {
        // [e_i, e_j] = −(−1)^{g_i g_j} [e_j, e_i]
        let s = Scalar::from_int(f, -sign(grading[i] * grading[j]));
        if alg.basis_product(i, j) != alg.basis_product(j, i).scale(&s) {
            return Some((Witness::Pair { i, j }, "super antisymmetry fails".into()));
        }
    }
    triples(n)
        .find(|&(i, j, k)| !super_jacobi(alg, grading, i, j, k).is_zero())
        .map(|(i, j, k)| (Witness::Triple { i, j, k }, "signed Jacobi sum is nonzero".into()))
}

/// Lie algebra axioms: alternating, antisymmetric, Jacobi. The alternating
/// condition `[e_i, e_i] = 0` is the characteristic-free formulation.
pub fn is_lie(alg: &FiniteAlgebra) -> CheckReport {
    let n = alg.dim();
    let minus_one = Scalar::from_int(alg.field(), -1);
    let even = vec![0u8; n];
    let failure = (0..n)
        .find(|&i| !alg.basis_product(i, i).is_zero())
        .map(|i| (Witness::Basis { i }, "[e_i, e_i] != 0".to_string()))
        .or_else(|| {
            pairs(n)
                .find(|&(i, j)| i < j && alg.basis_product(i, j) != alg.basis_product(j, i).scale(&minus_one))
                .map(|(i, j)| (Witness::Pair { i, j }, "[e_i, e_j] != -[e_j, e_i]".to_string()))
        })
        .or_else(|| {
            triples(n)
                .find(|&(i, j, k)| !super_jacobi(alg, &even, i, j, k).is_zero())
                .map(|(i, j, k)| (Witness::Triple { i, j, k }, "Jacobi sum is nonzero".to_string()))
        });
    CheckReport::from_failure("lie", failure)
}

pub fn is_super_lie(alg: &FiniteAlgebra) -> Result<CheckReport, AlgebraError> {
    let grading = alg.grading().ok_or(AlgebraError::MissingGrading)?;
    Ok(CheckReport::from_failure("super_lie", super_lie_failure(alg, grading)))
}

/// `(ab)c + (bc)a + (ca)b − a(bc) − b(ca) − c(ab)` on basis vectors.
pub fn unified_defect(alg: &FiniteAlgebra, i: usize, j: usize, k: usize) -> Element {
    let (a, b, c) = (alg.basis(i), alg.basis(j), alg.basis(k));
    let (ab, bc, ca) = (alg.basis_product(i, j), alg.basis_product(j, k), alg.basis_product(k, i));
    let left = mul(alg, &ab, &c).add(&mul(alg, &bc, &a)).add(&mul(alg, &ca, &b));
    let right = mul(alg, &a, &bc).add(&mul(alg, &b, &ca)).add(&mul(alg, &c, &ab));
    left.sub(&right)
}

pub fn satisfies_unified_identity(alg: &FiniteAlgebra) -> CheckReport {
    let failure = triples(alg.dim()).find(|&(i, j, k)| !unified_defect(alg, i, j, k).is_zero());
    CheckReport::from_failure(
        "unified_identity",
        failure.map(|(i, j, k)| {
            (
                Witness::Triple { i, j, k },
                "(ab)c + (bc)a + (ca)b != a(bc) + b(ca) + c(ab)".to_string(),
            )
        }),
    )
}

/// `J(x, y) = (x²y)x − x²(yx)`.
pub fn jordan_defect(alg: &FiniteAlgebra, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
    alg.conform(x)?;
    alg.conform(y)?;
    let x2 = mul(alg, x, x);
    let left = mul(alg, &mul(alg, &x2, y), x);
    let right = mul(alg, &x2, &mul(alg, y, x));
    Ok(left.sub(&right))
}

fn check_jordan_field(field: Field) -> Result<(), AlgebraError> {
    match field {
        Field::Prime(m) if m.get() <= 3 => Err(AlgebraError::UnsupportedJordanField(field)),
        _ => Ok(()),
    }
}

/// All points of `{0,1,2,3}ⁿ` in lexicographic order.
fn jordan_grid(field: Field, n: usize) -> impl Iterator<Item = Element> {
    let values: Vec<Scalar> = (0..4).map(|v| Scalar::from_int(field, v)).collect();
    (0..4usize.pow(n as u32)).map(move |mut idx| {
        let mut coords = vec![field.zero(); n];
        for slot in coords.iter_mut().rev() {
            *slot = values[idx % 4].clone();
            idx /= 4;
        }
        Element::new(coords).expect("n >= 1")
    })
}

pub fn satisfies_jordan_identity(alg: &FiniteAlgebra) -> Result<CheckReport, AlgebraError> {
    check_jordan_field(alg.field())?;
    let n = alg.dim();
    for x in jordan_grid(alg.field(), n) {
        let x2 = mul(alg, &x, &x);
        if x2.is_zero() {
            continue;
        }
        for y in 0..n {
            let e = alg.basis(y);
            let left = mul(alg, &mul(alg, &x2, &e), &x);
            let right = mul(alg, &x2, &mul(alg, &e, &x));
            if left != right {
                return Ok(CheckReport::fails(
                    "jordan_identity",
                    Witness::Point {
                        x: x.into_coords(),
                        y,
                    },
                    "(x^2 y) x != x^2 (y x)",
                ));
            }
        }
    }
    Ok(CheckReport::holds("jordan_identity"))
}

/// Commutative and satisfies the Jordan identity.
pub fn is_jordan(alg: &FiniteAlgebra) -> Result<CheckReport, AlgebraError> {
    check_jordan_field(alg.field())?;
    let comm = is_commutative(alg);
    if !comm.is_holds() {
        return Ok(CheckReport {
            property: "jordan".into(),
            ..comm
        });
    }
    let ident = satisfies_jordan_identity(alg)?;
    Ok(CheckReport {
        property: "jordan".into(),
        ..ident
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwapSquareRow {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub jordan: Verdict,
    pub associative: Verdict,
}

impl SwapSquareRow {
    pub fn verdicts_agree(&self) -> bool {
        self.jordan == self.associative
    }
}

/// For each `(α, β)`, builds the commutative algebra with `a² = b`, `b² = a`,
/// `ab = αa + βb` and records whether it is Jordan and whether it is
/// associative.
///
/// `grid = None` scans all `p²` pairs of `GF(p)`; over `Q` a grid is required.
pub fn swap_square_scan(
    field: Field,
    grid: Option<&[(Scalar, Scalar)]>,
    parallel: bool,
) -> Result<Vec<SwapSquareRow>, AlgebraError> {
    check_jordan_field(field)?;
    let points: Vec<(Scalar, Scalar)> = match grid {
        Some(g) => {
            if let Some((a, _)) = g.iter().find(|(a, b)| a.field() != field || b.field() != field) {
                return Err(crate::LinalgError::FieldMismatch {
                    left: field,
                    right: a.field(),
                }
                .into());
            }
            g.to_vec()
        }
        None => {
            let elems = field.elements().ok_or(AlgebraError::GridRequired)?;
            elems
                .iter()
                .flat_map(|a| elems.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        }
    };
    let row = |(alpha, beta): &(Scalar, Scalar)| -> Result<SwapSquareRow, AlgebraError> {
        let alg = swap_square_family(alpha, beta);
        Ok(SwapSquareRow {
            alpha: alpha.clone(),
            beta: beta.clone(),
            jordan: is_jordan(&alg)?.verdict(),
            associative: is_associative(&alg).verdict(),
        })
    };
    if parallel {
        points.par_iter().map(row).collect()
    } else {
        points.iter().map(row).collect()
    }
}

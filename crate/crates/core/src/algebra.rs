//! Finite-dimensional algebras given by structure constants.
//!
//! `e_i · e_j = Σ_k c[i][j][k] e_k`. Nothing is assumed about the product: it
//! may be associative, a Lie bracket, a Jordan product or none of these. An
//! optional unit and an optional `Z/2` grading are validated when attached.

use std::fmt;

use crate::matrix::Matrix;
use crate::scalar::{Field, Scalar};
use crate::AlgebraError;

/// Coordinates of an algebra element in the algebra's basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element {
    coords: Vec<Scalar>,
}

impl Element {
    pub fn new(coords: Vec<Scalar>) -> Result<Element, AlgebraError> {
        let first = coords.first().ok_or(AlgebraError::EmptyAlgebra)?.field();
        if let Some(bad) = coords.iter().find(|c| c.field() != first) {
            return Err(crate::LinalgError::FieldMismatch {
                left: first,
                right: bad.field(),
            }
            .into());
        }
        Ok(Element { coords })
    }

    pub fn zero(field: Field, dim: usize) -> Element {
        Element {
            coords: vec![field.zero(); dim],
        }
    }

    pub fn basis(field: Field, dim: usize, i: usize) -> Element {
        let mut e = Element::zero(field, dim);
        e.coords[i] = field.one();
        e
    }

    pub fn from_ints(field: Field, coords: &[i64]) -> Result<Element, AlgebraError> {
        Element::new(coords.iter().map(|&c| Scalar::from_int(field, c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Element) -> Element {
        Element {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        Element {
            coords: self.coords.iter().map(|c| c * s).collect(),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    field: Field,
    dim: usize,
    labels: Vec<String>,
    /// `table[(i * dim + j) * dim + k] = c[i][j][k]`
    table: Vec<Scalar>,
    unit: Option<Element>,
    grading: Option<Vec<u8>>,
}

impl FiniteAlgebra {
    pub fn new(field: Field, labels: Vec<String>, table: Vec<Scalar>) -> Result<FiniteAlgebra, AlgebraError> {
        let dim = labels.len();
        if dim == 0 {
            return Err(AlgebraError::EmptyAlgebra);
        }
        if table.len() != dim * dim * dim {
            return Err(AlgebraError::TableSize {
                dim,
                expected: dim * dim * dim,
                found: table.len(),
            });
        }
        if let Some(bad) = table.iter().find(|c| c.field() != field) {
            return Err(crate::LinalgError::FieldMismatch {
                left: field,
                right: bad.field(),
            }
            .into());
        }
        Ok(FiniteAlgebra {
            field,
            dim,
            labels,
            table,
            unit: None,
            grading: None,
        })
    }

    /// Builds the table from `product(i, j)`, the coordinates of `e_i · e_j`.
    pub fn from_products(
        field: Field,
        labels: &[&str],
        mut product: impl FnMut(usize, usize) -> Vec<i64>,
    ) -> Result<FiniteAlgebra, AlgebraError> {
        let n = labels.len();
        let mut table = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                let coords = product(i, j);
                if coords.len() != n {
                    return Err(AlgebraError::ElementDimension {
                        expected: n,
                        found: coords.len(),
                    });
                }
                table.extend(coords.into_iter().map(|c| Scalar::from_int(field, c)));
            }
        }
        FiniteAlgebra::new(field, labels.iter().map(|s| s.to_string()).collect(), table)
    }

    /// Attaches a unit after checking `u·e_i = e_i·u = e_i` for every `i`.
    pub fn with_unit(mut self, unit: Element) -> Result<FiniteAlgebra, AlgebraError> {
        self.conform(&unit)?;
        if let Some(index) = self.unit_failure(&unit) {
            return Err(AlgebraError::InvalidUnit { index });
        }
        self.unit = Some(unit);
        Ok(self)
    }

    /// Attaches a grading after checking that every basis product is
    /// homogeneous of degree `g[i] + g[j] mod 2`.
    pub fn with_grading(mut self, grading: Vec<u8>) -> Result<FiniteAlgebra, AlgebraError> {
        if grading.len() != self.dim {
            return Err(AlgebraError::ElementDimension {
                expected: self.dim,
                found: grading.len(),
            });
        }
        if let Some(&bad) = grading.iter().find(|&&g| g > 1) {
            return Err(AlgebraError::GradingValue(bad));
        }
        if let Some((i, j, k)) = homogeneity_failure(self.dim, &grading, |i, j, k| self.c(i, j, k)) {
            return Err(AlgebraError::GradingNotHomogeneous { i, j, k });
        }
        self.grading = Some(grading);
        Ok(self)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> Option<&Element> {
        self.unit.as_ref()
    }

    pub fn grading(&self) -> Option<&[u8]> {
        self.grading.as_deref()
    }

    /// The declared grading, or the all-even grading of an ordinary algebra.
    pub fn grading_or_even(&self) -> Vec<u8> {
        self.grading.clone().unwrap_or_else(|| vec![0; self.dim])
    }

    pub fn table(&self) -> &[Scalar] {
        &self.table
    }

    /// Structure constant `c[i][j][k]`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.table[(i * self.dim + j) * self.dim + k]
    }

    pub fn basis(&self, i: usize) -> Element {
        Element::basis(self.field, self.dim, i)
    }

    pub fn zero(&self) -> Element {
        Element::zero(self.field, self.dim)
    }

    /// `e_i · e_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> Element {
        let start = (i * self.dim + j) * self.dim;
        Element {
            coords: self.table[start..start + self.dim].to_vec(),
        }
    }

    pub fn conform(&self, x: &Element) -> Result<(), AlgebraError> {
        if x.dim() != self.dim {
            return Err(AlgebraError::ElementDimension {
                expected: self.dim,
                found: x.dim(),
            });
        }
        if x.field() != self.field {
            return Err(crate::LinalgError::FieldMismatch {
                left: self.field,
                right: x.field(),
            }
            .into());
        }
        Ok(())
    }

    pub fn multiply(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        self.conform(x)?;
        self.conform(y)?;
        Ok(self.mul_unchecked(x, y))
    }

    pub(crate) fn mul_unchecked(&self, x: &Element, y: &Element) -> Element {
        let n = self.dim;
        let mut out = vec![self.field.zero(); n];
        for (i, xi) in x.coords.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.coords.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let w = xi * yj;
                for (k, slot) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *slot = &*slot + &(&w * c);
                    }
                }
            }
        }
        Element { coords: out }
    }

    /// Matrix of `x ↦ e_i · x`.
    pub fn left_multiplication(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| self.c(i, j, k).clone()).expect("same field")
    }

    /// Matrix of `x ↦ x · e_i`.
    pub fn right_multiplication(&self, i: usize) -> Matrix {
        Matrix::from_fn(self.field, self.dim, self.dim, |k, j| self.c(j, i, k).clone()).expect("same field")
    }

    fn unit_failure(&self, u: &Element) -> Option<usize> {
        (0..self.dim).find(|&i| {
            let e = self.basis(i);
            self.mul_unchecked(u, &e) != e || self.mul_unchecked(&e, u) != e
        })
    }

    /// Solves the `2n²` linear conditions `u·e_i = e_i·u = e_i`. A unit is
    /// unique when it exists, so any solution of the system is returned.
    pub fn find_unit(&self) -> Option<Element> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(2 * n * n);
        let mut rhs = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            for k in 0..n {
                let target = if i == k { self.field.one() } else { self.field.zero() };
                // (u · e_i)_k = Σ_l u_l c[l][i][k]
                rows.push((0..n).map(|l| self.c(l, i, k).clone()).collect());
                rhs.push(target.clone());
                // (e_i · u)_k = Σ_l u_l c[i][l][k]
                rows.push((0..n).map(|l| self.c(i, l, k).clone()).collect());
                rhs.push(target);
            }
        }
        let system = Matrix::from_rows(self.field, rows).expect("same field");
        let u = Element {
            coords: system.solve(&rhs).expect("rhs length matches")?,
        };
        debug_assert!(self.unit_failure(&u).is_none());
        Some(u)
    }

    /// Basis of `{ z : z·e_i = 0 and e_i·z = 0 for all i }`, the centre of a
    /// bracket algebra.
    pub fn center(&self) -> Vec<Element> {
        let n = self.dim;
        let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(2 * n * n);
        for i in 0..n {
            let left = self.left_multiplication(i);
            let right = self.right_multiplication(i);
            rows.extend(left.to_rows());
            rows.extend(right.to_rows());
        }
        Matrix::from_rows(self.field, rows)
            .expect("same field")
            .nullspace()
            .into_iter()
            .map(|coords| Element { coords })
            .collect()
    }

    pub fn is_central(&self, z: &Element) -> bool {
        (0..self.dim).all(|i| {
            let e = self.basis(i);
            self.mul_unchecked(z, &e).is_zero() && self.mul_unchecked(&e, z).is_zero()
        })
    }

    /// Re-expresses the same integer-valued table over another field. Only
    /// rational entries whose denominators survive in the target are allowed.
    pub fn change_field(&self, field: Field) -> Result<FiniteAlgebra, AlgebraError> {
        let convert = |s: &Scalar| -> Result<Scalar, AlgebraError> {
            match s {
                Scalar::Rational(q) => Ok(Scalar::from_ratio(field, q.numer(), q.denom())?),
                Scalar::Prime { .. } if s.field() == field => Ok(s.clone()),
                Scalar::Prime { .. } => Err(crate::LinalgError::FieldMismatch {
                    left: s.field(),
                    right: field,
                }
                .into()),
            }
        };
        let table = self.table.iter().map(convert).collect::<Result<Vec<_>, _>>()?;
        let mut alg = FiniteAlgebra::new(field, self.labels.clone(), table)?;
        if let Some(g) = &self.grading {
            alg = alg.with_grading(g.clone())?;
        }
        if let Some(u) = &self.unit {
            let coords = u.coords.iter().map(convert).collect::<Result<Vec<_>, _>>()?;
            alg = alg.with_unit(Element { coords })?;
        }
        Ok(alg)
    }
}

/// First `(i, j, k)` with `c[i][j][k] ≠ 0` although `g[k] ≠ g[i] + g[j]`.
pub(crate) fn homogeneity_failure<'a>(
    n: usize,
    grading: &[u8],
    c: impl Fn(usize, usize, usize) -> &'a Scalar,
) -> Option<(usize, usize, usize)> {
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if grading[k] != (grading[i] + grading[j]) % 2 && !c(i, j, k).is_zero() {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    const Q: Field = Field::Rational;

    #[test]
    fn multiply_examples() {
        let m2 = catalog::matrix_units(Q);
        // E11 · E12 = E12
        assert_eq!(m2.multiply(&m2.basis(0), &m2.basis(1)).unwrap(), m2.basis(1));
        let d = catalog::dual_numbers(Q);
        assert!(d.multiply(&d.basis(1), &d.basis(1)).unwrap().is_zero());
        let x = Element::from_ints(Q, &[3, -1, 2, 5]).unwrap();
        assert!(m2.multiply(&m2.zero(), &x).unwrap().is_zero());
    }

    #[test]
    fn multiply_rejects_mismatched_elements() {
        let m2 = catalog::matrix_units(Q);
        let short = Element::from_ints(Q, &[1, 0]).unwrap();
        assert!(matches!(
            m2.multiply(&short, &m2.basis(0)),
            Err(AlgebraError::ElementDimension { expected: 4, found: 2 })
        ));
        let other = Element::basis(Field::gf(5).unwrap(), 4, 0);
        assert!(m2.multiply(&other, &m2.basis(0)).is_err());
    }

    #[test]
    fn find_unit_examples() {
        let m2 = catalog::matrix_units(Q);
        assert_eq!(m2.find_unit(), Some(Element::from_ints(Q, &[1, 0, 0, 1]).unwrap()));
        assert_eq!(catalog::abelian_lie(Q, 2).find_unit(), None);
        assert_eq!(catalog::dual_numbers(Q).find_unit(), Some(Element::basis(Q, 2, 0)));
    }

    #[test]
    fn invalid_unit_is_rejected() {
        let m2 = catalog::matrix_units(Q);
        let wrong = Element::from_ints(Q, &[1, 0, 0, 0]).unwrap();
        assert!(matches!(m2.with_unit(wrong), Err(AlgebraError::InvalidUnit { .. })));
    }

    #[test]
    fn grading_must_be_homogeneous() {
        // [v, v] = u with v odd, u even is fine; swap the degrees and it is not.
        let alg = catalog::super_one_one(Q);
        let table = alg.table().to_vec();
        let plain = FiniteAlgebra::new(Q, alg.labels().to_vec(), table).unwrap();
        assert!(plain.clone().with_grading(vec![0, 1]).is_ok());
        assert!(matches!(
            plain.clone().with_grading(vec![1, 0]),
            Err(AlgebraError::GradingNotHomogeneous { .. })
        ));
        assert!(matches!(plain.with_grading(vec![0, 2]), Err(AlgebraError::GradingValue(2))));
    }

    #[test]
    fn table_size_is_checked() {
        let err = FiniteAlgebra::new(Q, vec!["a".into(), "b".into()], vec![Q.zero(); 7]).unwrap_err();
        assert_eq!(
            err,
            AlgebraError::TableSize {
                dim: 2,
                expected: 8,
                found: 7
            }
        );
    }

    #[test]
    fn center_examples() {
        let h3 = catalog::heisenberg(Q);
        let z = h3.center();
        assert_eq!(z, vec![h3.basis(2)]);
        assert!(catalog::sl2(Q).center().is_empty());
        assert_eq!(catalog::abelian_lie(Q, 3).center().len(), 3);
    }

    #[test]
    fn center_vectors_annihilate_the_basis() {
        for (_, alg) in catalog::corpus() {
            for z in alg.center() {
                for i in 0..alg.dim() {
                    assert!(alg.multiply(&z, &alg.basis(i)).unwrap().is_zero());
                    assert!(alg.multiply(&alg.basis(i), &z).unwrap().is_zero());
                }
            }
        }
    }
}

//! Standard small algebras used by the tests, the bundled corpus and the CLI.

use crate::algebra::{Element, FiniteAlgebra};
use crate::scalar::{Field, Scalar};

fn build(field: Field, labels: &[&str], product: impl FnMut(usize, usize) -> Vec<i64>) -> FiniteAlgebra {
    FiniteAlgebra::from_products(field, labels, product).expect("catalog tables are well formed")
}

fn with_unit(alg: FiniteAlgebra, unit: &[i64]) -> FiniteAlgebra {
    let u = Element::from_ints(alg.field(), unit).expect("nonempty");
    alg.with_unit(u).expect("catalog unit is valid")
}

/// The one-dimensional algebra `k` itself.
pub fn ground_field(field: Field) -> FiniteAlgebra {
    with_unit(build(field, &["1"], |_, _| vec![1]), &[1])
}

/// `k[X]/(X² − c)` on the basis `{1, x}`.
pub fn quadratic(c: &Scalar) -> FiniteAlgebra {
    let field = c.field();
    let z = field.zero();
    let o = field.one();
    let table = vec![
        o.clone(), z.clone(), // 1·1
        z.clone(), o.clone(), // 1·x
        z.clone(), o.clone(), // x·1
        c.clone(), z.clone(), // x·x
    ];
    let alg = FiniteAlgebra::new(field, vec!["1".into(), "x".into()], table).expect("well formed");
    with_unit(alg, &[1, 0])
}

/// The dual numbers `k[X]/(X²)`.
pub fn dual_numbers(field: Field) -> FiniteAlgebra {
    quadratic(&field.zero())
}

/// `M₂(k)` on the matrix units `E11, E12, E21, E22`.
pub fn matrix_units(field: Field) -> FiniteAlgebra {
    let alg = build(field, &["E11", "E12", "E21", "E22"], |i, j| {
        let (a, b) = (i / 2, i % 2);
        let (c, d) = (j / 2, j % 2);
        let mut v = vec![0; 4];
        if b == c {
            v[a * 2 + d] = 1;
        }
        v
    });
    with_unit(alg, &[1, 0, 0, 1])
}

/// `sl₂` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = −2f`.
pub fn sl2(field: Field) -> FiniteAlgebra {
    build(field, &["e", "f", "h"], |i, j| match (i, j) {
        (0, 1) => vec![0, 0, 1],
        (1, 0) => vec![0, 0, -1],
        (2, 0) => vec![2, 0, 0],
        (0, 2) => vec![-2, 0, 0],
        (2, 1) => vec![0, -2, 0],
        (1, 2) => vec![0, 2, 0],
        _ => vec![0, 0, 0],
    })
}

/// Heisenberg algebra `h₃`: `[x,y] = z`, `z` central.
pub fn heisenberg(field: Field) -> FiniteAlgebra {
    build(field, &["x", "y", "z"], |i, j| match (i, j) {
        (0, 1) => vec![0, 0, 1],
        (1, 0) => vec![0, 0, -1],
        _ => vec![0, 0, 0],
    })
}

/// Abelian Lie algebra of dimension `n`: every bracket vanishes.
pub fn abelian_lie(field: Field, n: usize) -> FiniteAlgebra {
    let labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    build(field, &refs, |_, _| vec![0; n])
}

/// The 1|1-dimensional superalgebra: `u` even, `v` odd, `[v,v] = u`,
/// everything else zero.
pub fn super_one_one(field: Field) -> FiniteAlgebra {
    build(field, &["u", "v"], |i, j| if (i, j) == (1, 1) { vec![1, 0] } else { vec![0, 0] })
        .with_grading(vec![0, 1])
        .expect("homogeneous")
}

/// Symmetric 2×2 matrices under `x∘y = (xy + yx)/2`, basis
/// `S11 = E11`, `S22 = E22`, `S12 = E12 + E21`. Needs characteristic ≠ 2.
pub fn symmetric_jordan(field: Field) -> FiniteAlgebra {
    let half = Scalar::from_ratio(field, &1.into(), &2.into()).expect("characteristic is not 2");
    let z = field.zero();
    let o = field.one();
    let mut table = Vec::with_capacity(27);
    for i in 0..3 {
        for j in 0..3 {
            let v = match (i, j) {
                (0, 0) => [o.clone(), z.clone(), z.clone()],
                (1, 1) => [z.clone(), o.clone(), z.clone()],
                (0, 2) | (2, 0) | (1, 2) | (2, 1) => [z.clone(), z.clone(), half.clone()],
                (2, 2) => [o.clone(), o.clone(), z.clone()],
                _ => [z.clone(), z.clone(), z.clone()],
            };
            table.extend(v);
        }
    }
    let alg = FiniteAlgebra::new(field, vec!["S11".into(), "S22".into(), "S12".into()], table).expect("well formed");
    with_unit(alg, &[1, 1, 0])
}

/// `ℝ³`-style cross product table: `e1e2 = e3`, `e2e3 = e1`, `e3e1 = e2`.
pub fn cross_product(field: Field) -> FiniteAlgebra {
    build(field, &["e1", "e2", "e3"], |i, j| {
        let mut v = vec![0; 3];
        if i != j {
            let k = 3 - i - j;
            // even permutations of (0,1,2) give +1
            v[k] = if (j + 3 - i) % 3 == 1 { 1 } else { -1 };
        }
        v
    })
}

/// Two-dimensional commutative algebra with `a² = b`, `b² = a`,
/// `ab = ba = αa + βb`.
pub fn swap_square_family(alpha: &Scalar, beta: &Scalar) -> FiniteAlgebra {
    let field = alpha.field();
    let z = field.zero();
    let o = field.one();
    let table = vec![
        z.clone(), o.clone(), // a·a = b
        alpha.clone(), beta.clone(), // a·b
        alpha.clone(), beta.clone(), // b·a
        o, z, // b·b = a
    ];
    FiniteAlgebra::new(field, vec!["a".into(), "b".into()], table).expect("well formed")
}

/// `e1e1 = e2`, `e1e2 = e1`, all other products zero. Breaks the
/// six-term unified identity.
pub fn unified_counterexample(field: Field) -> FiniteAlgebra {
    build(field, &["e1", "e2"], |i, j| match (i, j) {
        (0, 0) => vec![0, 1],
        (0, 1) => vec![1, 0],
        _ => vec![0, 0],
    })
}

/// The named algebras shipped with the command-line tool, in a fixed order.
pub fn corpus() -> Vec<(&'static str, FiniteAlgebra)> {
    let q = Field::Rational;
    let gf5 = Field::gf(5).expect("prime");
    let int = |n| Scalar::from_int(q, n);
    vec![
        ("field1", ground_field(q)),
        ("kx2", dual_numbers(q)),
        ("kx2m1", quadratic(&int(1))),
        ("m2q", matrix_units(q)),
        ("m2gf5", matrix_units(gf5)),
        ("sl2", sl2(q)),
        ("h3", heisenberg(q)),
        ("abelian2", abelian_lie(q, 2)),
        ("abelian3", abelian_lie(q, 3)),
        ("super11", super_one_one(q)),
        ("symjordan", symmetric_jordan(q)),
        ("cross3", cross_product(q)),
        ("thm31_zero", swap_square_family(&int(0), &int(0))),
        ("thm31_assoc", swap_square_family(&int(-1), &int(-1))),
        ("unified_fail", unified_counterexample(q)),
    ]
}

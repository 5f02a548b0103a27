//! Products on the tensor algebra `T(A)` induced by
//! `R(u⊗v) = uv⊗1 + 1⊗uv − u⊗v`, computed symbolically in the free unital
//! associative algebra on a finite alphabet.
//!
//! Three products are provided:
//!
//! - `T¹ × T¹ → T²`: `μ(a⊗b) = R(a⊗b)`
//! - `T² × T¹ → T³`: `μ((a⊗a')⊗b) = R¹²R²³(a⊗a'⊗b)`
//! - `T¹ × T² → T³`: `μ(a⊗(b⊗b')) = R²³R¹²(a⊗b⊗b')`
//!
//! Terms are kept in a canonical order: tensor factors are compared from the
//! last to the first, words lexicographically by generator index with the
//! empty word (the unit `1`) smallest.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};

use crate::algebra::{Element, FiniteAlgebra};
use crate::identities::{CheckReport, Witness};
use crate::matrix::{lift12, lift23};
use crate::scalar::{Field, Scalar};
use crate::yb::build_assoc_operator;
use crate::TensorError;

/// A word over the alphabet, as generator indices. Empty is the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

/// A pure tensor of words `w₁ ⊗ … ⊗ w_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorKey(Vec<Word>);

impl TensorKey {
    pub fn factors(&self) -> &[Word] {
        &self.0
    }
}

impl Ord for TensorKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for TensorKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn accumulate<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(coeff);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get() + &coeff;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// A linear combination of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeElement {
    terms: BTreeMap<Word, Scalar>,
}

impl FreeElement {
    pub fn zero() -> FreeElement {
        FreeElement { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &FreeElement) -> FreeElement {
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        FreeElement { terms }
    }

    pub fn scale(&self, s: &Scalar) -> FreeElement {
        let mut terms = BTreeMap::new();
        for (w, c) in &self.terms {
            accumulate(&mut terms, w.clone(), c * s);
        }
        FreeElement { terms }
    }
}

/// A homogeneous element of `T^m(A)`: a linear combination of pure tensors of
/// words, all with `m` factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    degree: usize,
    terms: BTreeMap<TensorKey, Scalar>,
}

impl TensorElement {
    pub fn zero(degree: usize) -> TensorElement {
        TensorElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_free(x: &FreeElement) -> TensorElement {
        let mut t = TensorElement::zero(1);
        for (w, c) in &x.terms {
            accumulate(&mut t.terms, TensorKey(vec![w.clone()]), c.clone());
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TensorKey, &Scalar)> {
        self.terms.iter()
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.degree + other.degree);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut f = k1.0.clone();
                f.extend(k2.0.iter().cloned());
                accumulate(&mut out.terms, TensorKey(f), c1 * c2);
            }
        }
        out
    }

    pub fn add(&self, other: &TensorElement) -> Result<TensorElement, TensorError> {
        if self.degree != other.degree {
            return Err(TensorError::Degree {
                expected: self.degree,
                found: other.degree,
            });
        }
        let mut out = self.clone();
        for (k, c) in &other.terms {
            accumulate(&mut out.terms, k.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (k, c) in &self.terms {
            accumulate(&mut out.terms, k.clone(), c * s);
        }
        out
    }

    fn expect_degree(&self, expected: usize) -> Result<(), TensorError> {
        if self.degree == expected {
            Ok(())
        } else {
            Err(TensorError::Degree {
                expected,
                found: self.degree,
            })
        }
    }
}

/// The free unital associative algebra on named generators, truncated at
/// words of length `max_len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeAlgebra {
    field: Field,
    generators: Vec<String>,
    max_len: usize,
}

impl FreeAlgebra {
    pub fn new(field: Field, generators: &[&str], max_len: usize) -> FreeAlgebra {
        FreeAlgebra {
            field,
            generators: generators.iter().map(|s| s.to_string()).collect(),
            max_len,
        }
    }

    /// Generators `a, a', b, b', c` over `Q`, words up to length 3.
    pub fn standard() -> FreeAlgebra {
        FreeAlgebra::new(Field::Rational, &["a", "a'", "b", "b'", "c"], 3)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn one(&self) -> FreeElement {
        self.word_element(Word::unit())
    }

    fn word_element(&self, w: Word) -> FreeElement {
        let mut terms = BTreeMap::new();
        terms.insert(w, self.field.one());
        FreeElement { terms }
    }

    /// Parses a word such as `aa'b` by longest-match against the generator
    /// names. `1` is the empty word.
    pub fn parse_word(&self, text: &str) -> Result<Word, TensorError> {
        let text = text.trim();
        if text == "1" {
            return Ok(Word::unit());
        }
        let mut rest = text;
        let mut letters = Vec::new();
        while !rest.is_empty() {
            let best = self
                .generators
                .iter()
                .enumerate()
                .filter(|(_, g)| rest.starts_with(g.as_str()))
                .max_by_key(|(_, g)| g.len())
                .ok_or_else(|| TensorError::UnknownGenerator(rest.to_string()))?;
            letters.push(best.0);
            rest = &rest[best.1.len()..];
        }
        self.check_len(letters.len())?;
        Ok(Word(letters))
    }

    pub fn word(&self, text: &str) -> Result<FreeElement, TensorError> {
        Ok(self.word_element(self.parse_word(text)?))
    }

    fn check_len(&self, len: usize) -> Result<(), TensorError> {
        if len > self.max_len {
            Err(TensorError::Truncation { len, max: self.max_len })
        } else {
            Ok(())
        }
    }

    fn concat(&self, u: &Word, v: &Word) -> Result<Word, TensorError> {
        self.check_len(u.len() + v.len())?;
        Ok(u.concat(v))
    }

    pub fn mul(&self, x: &FreeElement, y: &FreeElement) -> Result<FreeElement, TensorError> {
        let mut terms = BTreeMap::new();
        for (u, a) in &x.terms {
            for (v, b) in &y.terms {
                accumulate(&mut terms, self.concat(u, v)?, a * b);
            }
        }
        Ok(FreeElement { terms })
    }

    /// Raw (unmerged) terms of `R` applied at factors `pos, pos + 1`.
    fn r_terms(&self, t: &TensorElement, pos: usize) -> Result<Vec<(TensorKey, Scalar)>, TensorError> {
        if pos + 1 >= t.degree {
            return Err(TensorError::Degree {
                expected: pos + 2,
                found: t.degree,
            });
        }
        let mut raw = Vec::with_capacity(3 * t.terms.len());
        for (key, c) in &t.terms {
            let (u, v) = (&key.0[pos], &key.0[pos + 1]);
            let uv = self.concat(u, v)?;
            let replace = |left: Word, right: Word| {
                let mut f = key.0.clone();
                f[pos] = left;
                f[pos + 1] = right;
                TensorKey(f)
            };
            raw.push((replace(uv.clone(), Word::unit()), c.clone()));
            raw.push((replace(Word::unit(), uv), c.clone()));
            raw.push((replace(u.clone(), v.clone()), -c));
        }
        Ok(raw)
    }

    /// `R` on tensor factors `pos, pos + 1` (zero-based).
    pub fn apply_r(&self, t: &TensorElement, pos: usize) -> Result<TensorElement, TensorError> {
        let mut out = TensorElement::zero(t.degree);
        for (k, c) in self.r_terms(t, pos)? {
            accumulate(&mut out.terms, k, c);
        }
        Ok(out)
    }

    /// `μ(x⊗y) = R(x⊗y)` for `x, y ∈ T¹`.
    pub fn mu_11(&self, x: &FreeElement, y: &FreeElement) -> Result<TensorElement, TensorError> {
        let t = TensorElement::from_free(x).tensor(&TensorElement::from_free(y));
        self.apply_r(&t, 0)
    }

    /// `μ(x⊗y) = R¹²R²³(x⊗y)` for `x ∈ T²`, `y ∈ T¹`.
    pub fn mu_21(&self, x: &TensorElement, y: &FreeElement) -> Result<TensorElement, TensorError> {
        x.expect_degree(2)?;
        let t = x.tensor(&TensorElement::from_free(y));
        self.apply_r(&self.apply_r(&t, 1)?, 0)
    }

    /// `μ(x⊗y) = R²³R¹²(x⊗y)` for `x ∈ T¹`, `y ∈ T²`.
    pub fn mu_12(&self, x: &FreeElement, y: &TensorElement) -> Result<TensorElement, TensorError> {
        y.expect_degree(2)?;
        let t = TensorElement::from_free(x).tensor(y);
        self.apply_r(&self.apply_r(&t, 0)?, 1)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_unit() {
            "1".to_string()
        } else {
            w.0.iter().map(|&g| self.generators[g].as_str()).collect()
        }
    }

    /// Renders terms as `aa'b ⊗ 1 ⊗ 1 + 1 ⊗ aa'b ⊗ 1 − …` in canonical order,
    /// with ASCII `-` for subtraction.
    pub fn render(&self, t: &TensorElement) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (key, c)) in t.terms.iter().enumerate() {
            let negative = c.is_negative();
            let magnitude = if negative { -c } else { c.clone() };
            match (i, negative) {
                (0, false) => {}
                (0, true) => out.push('-'),
                (_, false) => out.push_str(" + "),
                (_, true) => out.push_str(" - "),
            }
            if !magnitude.is_one() {
                out.push_str(&format!("{magnitude} "));
            }
            let factors: Vec<String> = key.0.iter().map(|w| self.render_word(w)).collect();
            out.push_str(&factors.join(" ⊗ "));
        }
        out
    }

    /// Parses the notation produced by [`FreeAlgebra::render`]. `⊗` may also
    /// be written `(x)`; integer or ratio coefficients precede the first
    /// factor.
    pub fn parse(&self, text: &str) -> Result<TensorElement, TensorError> {
        let normalized = text.replace("(x)", "⊗").replace('−', "-");
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = false;
        for ch in normalized.chars() {
            if ch == '+' || ch == '-' {
                if !current.trim().is_empty() {
                    terms.push((negative, std::mem::take(&mut current)));
                } else if !current.is_empty() {
                    current.clear();
                }
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if !current.trim().is_empty() {
            terms.push((negative, current));
        }
        if terms.is_empty() {
            return Err(TensorError::Parse("empty expression".into()));
        }
        let mut degree = None;
        let mut out = BTreeMap::new();
        for (neg, body) in terms {
            let factors: Vec<&str> = body.split('⊗').map(str::trim).collect();
            let mut coeff = self.field.one();
            let mut words = Vec::with_capacity(factors.len());
            for (i, f) in factors.iter().enumerate() {
                let mut f = *f;
                if i == 0 {
                    if let Some((c, rest)) = f.split_once(' ') {
                        coeff = Scalar::parse(self.field, c).map_err(|e| TensorError::Parse(e.to_string()))?;
                        f = rest.trim();
                    }
                }
                if f.is_empty() {
                    return Err(TensorError::Parse(format!("empty factor in {body:?}")));
                }
                words.push(self.parse_word(f)?);
            }
            match degree {
                None => degree = Some(words.len()),
                Some(d) if d != words.len() => {
                    return Err(TensorError::Degree {
                        expected: d,
                        found: words.len(),
                    })
                }
                _ => {}
            }
            if neg {
                coeff = -coeff;
            }
            accumulate(&mut out, TensorKey(words), coeff);
        }
        Ok(TensorElement {
            degree: degree.expect("at least one term"),
            terms: out,
        })
    }

    fn eval_word(
        &self,
        w: &Word,
        alg: &FiniteAlgebra,
        assignment: &HashMap<String, Element>,
    ) -> Result<Element, TensorError> {
        let mut acc = alg.unit().ok_or(TensorError::MissingUnit)?.clone();
        for &g in &w.0 {
            let name = &self.generators[g];
            let v = assignment.get(name).ok_or_else(|| TensorError::Unassigned(name.clone()))?;
            acc = alg.multiply(&acc, v)?;
        }
        Ok(acc)
    }

    /// Coordinates of `t` in `A^{⊗m}` (lexicographic basis) after substituting
    /// generators by algebra elements.
    pub fn evaluate(
        &self,
        t: &TensorElement,
        alg: &FiniteAlgebra,
        assignment: &HashMap<String, Element>,
    ) -> Result<Vec<Scalar>, TensorError> {
        alg.unit().ok_or(TensorError::MissingUnit)?;
        if alg.field() != self.field {
            return Err(crate::LinalgError::FieldMismatch {
                left: self.field,
                right: alg.field(),
            }
            .into());
        }
        let n = alg.dim();
        let size = n.pow(t.degree as u32);
        let mut out = vec![alg.field().zero(); size];
        for (key, c) in &t.terms {
            let mut coords = vec![c.clone()];
            for w in &key.0 {
                let e = self.eval_word(w, alg, assignment)?;
                coords = coords
                    .iter()
                    .flat_map(|a| e.coords().iter().map(move |b| a * b))
                    .collect();
            }
            for (slot, v) in out.iter_mut().zip(coords) {
                *slot = &*slot + &v;
            }
        }
        Ok(out)
    }
}

/// Which implemented product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductCase {
    /// `T¹ × T¹ → T²`
    OneOne,
    /// `T² × T¹ → T³`
    TwoOne,
    /// `T¹ × T² → T³`
    OneTwo,
}

impl ProductCase {
    pub fn parse(s: &str) -> Option<ProductCase> {
        match s {
            "11" => Some(ProductCase::OneOne),
            "21" => Some(ProductCase::TwoOne),
            "12" => Some(ProductCase::OneTwo),
            _ => None,
        }
    }

    /// Generator names used for the symbolic inputs.
    pub fn generators(self) -> &'static [&'static str] {
        match self {
            ProductCase::OneOne => &["a", "b"],
            ProductCase::TwoOne => &["a", "a'", "b"],
            ProductCase::OneTwo => &["a", "b", "b'"],
        }
    }
}

/// Symbolic input `x ⊗ y` and output `μ(x ⊗ y)` of one product case on the
/// generators named by [`ProductCase::generators`].
pub fn symbolic_product(fa: &FreeAlgebra, case: ProductCase) -> Result<(TensorElement, TensorElement), TensorError> {
    let g = |s: &str| fa.word(s);
    let t1 = |s: &str| -> Result<TensorElement, TensorError> { Ok(TensorElement::from_free(&g(s)?)) };
    Ok(match case {
        ProductCase::OneOne => {
            let (a, b) = (g("a")?, g("b")?);
            (t1("a")?.tensor(&t1("b")?), fa.mu_11(&a, &b)?)
        }
        ProductCase::TwoOne => {
            let x = t1("a")?.tensor(&t1("a'")?);
            let input = x.tensor(&t1("b")?);
            (input, fa.mu_21(&x, &g("b")?)?)
        }
        ProductCase::OneTwo => {
            let y = t1("b")?.tensor(&t1("b'")?);
            let input = t1("a")?.tensor(&y);
            (input, fa.mu_12(&g("a")?, &y)?)
        }
    })
}

/// Applies the lift matrices of `R = R_{1,1,1}` on `alg` to a coordinate
/// vector of the input tensor, in the order matching `case`.
pub fn numeric_product(alg: &FiniteAlgebra, case: ProductCase, input: &[Scalar]) -> Result<Vec<Scalar>, TensorError> {
    let one = alg.field().one();
    let r = build_assoc_operator(alg, &one, &one, &one).map_err(|e| match e {
        crate::YbError::MissingUnit => TensorError::MissingUnit,
        crate::YbError::Linalg(l) => TensorError::Linalg(l),
        crate::YbError::Algebra(a) => TensorError::Algebra(a),
        other => TensorError::Parse(other.to_string()),
    })?;
    let d = alg.dim();
    Ok(match case {
        ProductCase::OneOne => r.apply(input)?,
        ProductCase::TwoOne => lift12(&r, d)?.apply(&lift23(&r, d)?.apply(input)?)?,
        ProductCase::OneTwo => lift23(&r, d)?.apply(&lift12(&r, d)?.apply(input)?)?,
    })
}

/// Compares the symbolic product, evaluated in `alg`, with the lift-matrix
/// product for every assignment of basis elements to the input generators.
pub fn coherence_check(fa: &FreeAlgebra, alg: &FiniteAlgebra, case: ProductCase) -> Result<CheckReport, TensorError> {
    let (input, output) = symbolic_product(fa, case)?;
    let names = case.generators();
    let n = alg.dim();
    let total = n.pow(names.len() as u32);
    for code in 0..total {
        let mut rest = code;
        let mut picks = vec![0; names.len()];
        for slot in picks.iter_mut().rev() {
            *slot = rest % n;
            rest /= n;
        }
        let assignment: HashMap<String, Element> = names
            .iter()
            .zip(&picks)
            .map(|(name, &i)| (name.to_string(), alg.basis(i)))
            .collect();
        let symbolic = fa.evaluate(&output, alg, &assignment)?;
        let numeric = numeric_product(alg, case, &fa.evaluate(&input, alg, &assignment)?)?;
        if symbolic != numeric {
            return Ok(CheckReport::fails(
                "tensor_coherence",
                Witness::Params {
                    values: picks.iter().map(|&i| Scalar::from_int(Field::Rational, i as i64)).collect(),
                },
                "symbolic and matrix products differ",
            ));
        }
    }
    Ok(CheckReport::holds("tensor_coherence"))
}

/// `μ(μ(a⊗b)⊗c)` and `μ(a⊗μ(b⊗c))`, both in `T³`. The two need not agree;
/// callers record the comparison.
pub fn associativity_probe(fa: &FreeAlgebra) -> Result<(TensorElement, TensorElement), TensorError> {
    let (a, b, c) = (fa.word("a")?, fa.word("b")?, fa.word("c")?);
    let left = fa.mu_21(&fa.mu_11(&a, &b)?, &c)?;
    let right = fa.mu_12(&a, &fa.mu_11(&b, &c)?)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::dual_numbers;

    const SEVEN_TERMS: &str = "aa'b ⊗ 1 ⊗ 1 + 1 ⊗ aa'b ⊗ 1 - a ⊗ a'b ⊗ 1 + 1 ⊗ a ⊗ a'b - aa' ⊗ 1 ⊗ b - 1 ⊗ aa' ⊗ b + a ⊗ a' ⊗ b";

    #[test]
    fn mu_11_examples() {
        let fa = FreeAlgebra::standard();
        let (a, b) = (fa.word("a").unwrap(), fa.word("b").unwrap());
        let m = fa.mu_11(&a, &b).unwrap();
        assert_eq!(fa.render(&m), "ab ⊗ 1 + 1 ⊗ ab - a ⊗ b");
        assert_eq!(m, fa.parse("ab ⊗ 1 + 1 ⊗ ab - a ⊗ b").unwrap());
        assert_eq!(fa.render(&fa.mu_11(&fa.one(), &b).unwrap()), "b ⊗ 1");
        assert!(fa.mu_11(&FreeElement::zero(), &b).unwrap().is_zero());
    }

    #[test]
    fn mu_21_reproduces_seven_terms() {
        let fa = FreeAlgebra::standard();
        let (_, out) = symbolic_product(&fa, ProductCase::TwoOne).unwrap();
        assert_eq!(out.len(), 7);
        assert_eq!(fa.render(&out), SEVEN_TERMS);
        assert_eq!(out, fa.parse(SEVEN_TERMS).unwrap());
    }

    #[test]
    fn mu_21_with_unit_inputs() {
        let fa = FreeAlgebra::standard();
        let one = TensorElement::from_free(&fa.one());
        let b = fa.word("b").unwrap();
        let out = fa.mu_21(&one.tensor(&one), &b).unwrap();
        // R²³(1⊗1⊗b) = 1⊗b⊗1, then R¹²(1⊗b⊗1) = b⊗1⊗1
        assert_eq!(fa.render(&out), "b ⊗ 1 ⊗ 1");
        let zero = TensorElement::zero(2);
        assert!(fa.mu_21(&zero, &b).unwrap().is_zero());
    }

    #[test]
    fn mu_12_expansion() {
        let fa = FreeAlgebra::standard();
        let a = fa.word("a").unwrap();
        let y = TensorElement::from_free(&fa.word("b").unwrap()).tensor(&TensorElement::from_free(&fa.word("b'").unwrap()));
        let t = TensorElement::from_free(&a).tensor(&y);
        // 3 terms after R¹², each expanded into 3 by R²³
        let after12 = fa.apply_r(&t, 0).unwrap();
        assert_eq!(after12.len(), 3);
        assert_eq!(fa.r_terms(&after12, 1).unwrap().len(), 9);
        // hand expansion: ab⊗b'⊗1 + 1⊗abb'⊗1 + 1⊗1⊗abb' − 1⊗ab⊗b' − a⊗bb'⊗1 − a⊗1⊗bb' + a⊗b⊗b'
        let expect = fa
            .parse("ab ⊗ b' ⊗ 1 + 1 ⊗ abb' ⊗ 1 + 1 ⊗ 1 ⊗ abb' - 1 ⊗ ab ⊗ b' - a ⊗ bb' ⊗ 1 - a ⊗ 1 ⊗ bb' + a ⊗ b ⊗ b'")
            .unwrap();
        assert_eq!(fa.mu_12(&a, &y).unwrap(), expect);
        assert!(fa.mu_12(&a, &TensorElement::zero(2)).unwrap().is_zero());
    }

    #[test]
    fn mu_12_with_unit_left() {
        let fa = FreeAlgebra::standard();
        let y = TensorElement::from_free(&fa.word("b").unwrap()).tensor(&TensorElement::from_free(&fa.word("b'").unwrap()));
        let out = fa.mu_12(&fa.one(), &y).unwrap();
        // R¹²(1⊗b⊗b') = b⊗1⊗b'; R²³(b⊗1⊗b') = b⊗b'⊗1
        assert_eq!(fa.render(&out), "b ⊗ b' ⊗ 1");
    }

    #[test]
    fn truncation_is_an_error() {
        let fa = FreeAlgebra::new(Field::Rational, &["a", "a'", "b"], 2);
        let (_, err) = (0, symbolic_product(&fa, ProductCase::TwoOne).unwrap_err());
        assert_eq!(err, TensorError::Truncation { len: 3, max: 2 });
        assert!(fa.parse_word("aab").is_err());
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let fa = FreeAlgebra::standard();
        let a = fa.word("a").unwrap();
        assert!(matches!(
            fa.mu_21(&TensorElement::from_free(&a), &a),
            Err(TensorError::Degree { expected: 2, found: 1 })
        ));
        assert!(fa.parse("a ⊗ b + c").is_err());
    }

    #[test]
    fn parse_rejects_unknown_generators() {
        let fa = FreeAlgebra::standard();
        assert_eq!(fa.parse_word("az"), Err(TensorError::UnknownGenerator("z".into())));
    }

    #[test]
    fn evaluation_in_dual_numbers() {
        let fa = FreeAlgebra::standard();
        let alg = dual_numbers(Field::Rational);
        let x = alg.basis(1);
        let assignment: HashMap<String, Element> =
            [("a", &x), ("a'", &x), ("b", &x)].into_iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
        let (input, out) = symbolic_product(&fa, ProductCase::TwoOne).unwrap();
        let got = fa.evaluate(&out, &alg, &assignment).unwrap();
        // every term containing aa' or a'b vanishes; 1⊗a⊗a'b and a⊗a'⊗b survive as 0 and x⊗x⊗x
        let mut expect = vec![Field::Rational.zero(); 8];
        expect[7] = Field::Rational.one();
        assert_eq!(got, expect);
        let numeric = numeric_product(&alg, ProductCase::TwoOne, &fa.evaluate(&input, &alg, &assignment).unwrap()).unwrap();
        assert_eq!(numeric, got);
    }

    #[test]
    fn evaluation_needs_assignment_and_unit() {
        let fa = FreeAlgebra::standard();
        let alg = dual_numbers(Field::Rational);
        let t = TensorElement::from_free(&fa.word("a").unwrap());
        assert_eq!(fa.evaluate(&t, &alg, &HashMap::new()), Err(TensorError::Unassigned("a".into())));
        let lie = crate::catalog::sl2(Field::Rational);
        assert_eq!(fa.evaluate(&t, &lie, &HashMap::new()), Err(TensorError::MissingUnit));
    }

    #[test]
    fn evaluation_of_unit_factor() {
        let fa = FreeAlgebra::standard();
        let alg = dual_numbers(Field::Rational);
        let t = TensorElement::from_free(&fa.word("a").unwrap()).tensor(&TensorElement::from_free(&fa.word("b").unwrap()));
        let assignment: HashMap<String, Element> =
            [("a".to_string(), alg.basis(0)), ("b".to_string(), alg.basis(1))].into_iter().collect();
        // 1 ⊗ x has coordinates e_0 ⊗ e_1 = index 1
        let v = fa.evaluate(&t, &alg, &assignment).unwrap();
        assert_eq!(v.iter().position(|s| !s.is_zero()), Some(1));
    }
}

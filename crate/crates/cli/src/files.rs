//! JSON algebra and matrix files.
//!
//! An algebra file:
//!
//! ```json
//! {
//!   "dimension": 2,
//!   "field": "Q",
//!   "basis": ["1", "x"],
//!   "table": [
//!     [["1", "0"], ["0", "1"]],
//!     [["0", "1"], ["0", "0"]]
//!   ],
//!   "unit": ["1", "0"]
//! }
//! ```
//!
//! `table[i][j]` holds the coordinates of `e_i · e_j`. The field is `"Q"` or
//! `{"gf": p}`. Scalars are strings (`"3"`, `"-1/2"`) or JSON integers;
//! floats are rejected. An optional `"grading"` lists 0/1 degrees.
//!
//! A matrix file is either a bare array of rows over `Q` or
//! `{"field": …, "rows": […]}`.

use serde_json::{Map, Value};
use yb_core::algebra::{Element, FiniteAlgebra};
use yb_core::matrix::Matrix;
use yb_core::scalar::{Field, Scalar};

use crate::InputError;

fn err(path: &str, reason: impl std::fmt::Display) -> InputError {
    InputError(format!("{path}: {reason}"))
}

fn parse_json(text: &str) -> Result<Value, InputError> {
    serde_json::from_str(text)
        .map_err(|e| InputError(format!("line {}, column {}: {e}", e.line(), e.column())))
}

pub fn parse_field(v: &Value, path: &str) -> Result<Field, InputError> {
    match v {
        Value::String(s) if s == "Q" => Ok(Field::Rational),
        Value::String(s) => parse_field_flag(s).map_err(|e| err(path, e.0)),
        Value::Object(m) => {
            let p = m
                .get("gf")
                .and_then(Value::as_u64)
                .ok_or_else(|| err(path, "expected \"Q\" or {\"gf\": p}"))?;
            Field::gf(p).map_err(|e| err(path, e))
        }
        _ => Err(err(path, "expected \"Q\" or {\"gf\": p}")),
    }
}

/// `Q`, `gf:p` or `GF(p)`.
pub fn parse_field_flag(s: &str) -> Result<Field, InputError> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("q") {
        return Ok(Field::Rational);
    }
    let p = s
        .strip_prefix("gf:")
        .or_else(|| s.strip_prefix("GF(").and_then(|r| r.strip_suffix(')')))
        .ok_or_else(|| InputError(format!("unknown field {s:?}; use Q or gf:p")))?;
    let p: u64 = p.parse().map_err(|_| InputError(format!("bad modulus in {s:?}")))?;
    Field::gf(p).map_err(|e| InputError(e.to_string()))
}

pub fn field_to_json(field: Field) -> Value {
    match field {
        Field::Rational => Value::String("Q".into()),
        Field::Prime(m) => {
            let mut o = Map::new();
            o.insert("gf".into(), Value::from(m.get()));
            Value::Object(o)
        }
    }
}

fn scalar(v: &Value, field: Field, path: &str) -> Result<Scalar, InputError> {
    match v {
        Value::String(s) => Scalar::parse(field, s).map_err(|e| err(path, e)),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(Scalar::from_int(field, i)),
            None => Err(err(path, format!("{n} is not exact; write scalars as strings like \"1/2\""))),
        },
        _ => Err(err(path, "expected a scalar string")),
    }
}

fn array<'a>(v: &'a Value, path: &str, len: Option<usize>) -> Result<&'a Vec<Value>, InputError> {
    let a = v.as_array().ok_or_else(|| err(path, "expected an array"))?;
    match len {
        Some(n) if a.len() != n => Err(err(path, format!("expected {n} entries, found {}", a.len()))),
        _ => Ok(a),
    }
}

fn scalar_vec(v: &Value, field: Field, path: &str, len: usize) -> Result<Vec<Scalar>, InputError> {
    array(v, path, Some(len))?
        .iter()
        .enumerate()
        .map(|(i, x)| scalar(x, field, &format!("{path}[{i}]")))
        .collect()
}

pub fn parse_algebra(text: &str) -> Result<FiniteAlgebra, InputError> {
    let doc = parse_json(text)?;
    let obj = doc.as_object().ok_or_else(|| err("document", "expected an object"))?;
    for key in obj.keys() {
        if !["dimension", "field", "basis", "table", "unit", "grading"].contains(&key.as_str()) {
            return Err(err(key, "unknown field"));
        }
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| err(k, "missing"));
    let n = get("dimension")?
        .as_u64()
        .filter(|&n| n >= 1)
        .ok_or_else(|| err("dimension", "expected a positive integer"))? as usize;
    let field = parse_field(get("field")?, "field")?;
    let labels: Vec<String> = array(get("basis")?, "basis", Some(n))?
        .iter()
        .enumerate()
        .map(|(i, l)| l.as_str().map(str::to_string).ok_or_else(|| err(&format!("basis[{i}]"), "expected a string")))
        .collect::<Result<_, _>>()?;
    let mut table = Vec::with_capacity(n * n * n);
    for (i, row) in array(get("table")?, "table", Some(n))?.iter().enumerate() {
        let path = format!("table[{i}]");
        for (j, cell) in array(row, &path, Some(n))?.iter().enumerate() {
            table.extend(scalar_vec(cell, field, &format!("{path}[{j}]"), n)?);
        }
    }
    let mut alg = FiniteAlgebra::new(field, labels, table).map_err(|e| err("table", e))?;
    if let Some(u) = obj.get("unit") {
        let coords = scalar_vec(u, field, "unit", n)?;
        let unit = Element::new(coords).map_err(|e| err("unit", e))?;
        alg = alg.with_unit(unit).map_err(|e| err("unit", e))?;
    }
    if let Some(g) = obj.get("grading") {
        let grading: Vec<u8> = array(g, "grading", Some(n))?
            .iter()
            .enumerate()
            .map(|(i, x)| {
                x.as_u64()
                    .filter(|&d| d <= 1)
                    .map(|d| d as u8)
                    .ok_or_else(|| err(&format!("grading[{i}]"), "expected 0 or 1"))
            })
            .collect::<Result<_, _>>()?;
        alg = alg.with_grading(grading).map_err(|e| err("grading", e))?;
    }
    Ok(alg)
}

fn strings(v: &[Scalar]) -> String {
    let s: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    serde_json::to_string(&s).expect("strings serialize")
}

/// The canonical file text for `alg`, one `table[i]` per line.
pub fn algebra_to_json(alg: &FiniteAlgebra) -> String {
    let n = alg.dim();
    let mut out = String::from("{\n");
    out.push_str(&format!("  \"dimension\": {n},\n"));
    out.push_str(&format!("  \"field\": {},\n", field_to_json(alg.field())));
    out.push_str(&format!("  \"basis\": {},\n", serde_json::to_string(alg.labels()).expect("labels")));
    out.push_str("  \"table\": [\n");
    let rows: Vec<String> = (0..n)
        .map(|i| {
            let cells: Vec<String> = (0..n).map(|j| strings(alg.basis_product(i, j).coords())).collect();
            format!("    [{}]", cells.join(", "))
        })
        .collect();
    out.push_str(&rows.join(",\n"));
    out.push_str("\n  ]");
    if let Some(u) = alg.unit() {
        out.push_str(&format!(",\n  \"unit\": {}", strings(u.coords())));
    }
    if let Some(g) = alg.grading() {
        out.push_str(&format!(",\n  \"grading\": {}", serde_json::to_string(g).expect("grading")));
    }
    out.push_str("\n}\n");
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix, InputError> {
    let doc = parse_json(text)?;
    let (field, rows) = match &doc {
        Value::Array(_) => (Field::Rational, &doc),
        Value::Object(o) => {
            let field = parse_field(o.get("field").ok_or_else(|| err("field", "missing"))?, "field")?;
            (field, o.get("rows").ok_or_else(|| err("rows", "missing"))?)
        }
        _ => return Err(err("document", "expected an array of rows or {\"field\", \"rows\"}")),
    };
    let rows = array(rows, "rows", None)?;
    if rows.is_empty() {
        return Err(err("rows", "empty matrix"));
    }
    let width = array(&rows[0], "rows[0]", None)?.len();
    let parsed: Vec<Vec<Scalar>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| scalar_vec(r, field, &format!("rows[{i}]"), width))
        .collect::<Result<_, _>>()?;
    Matrix::from_rows(field, parsed).map_err(|e| err("rows", e))
}

pub fn matrix_to_json(m: &Matrix) -> String {
    let rows: Vec<String> = (0..m.rows()).map(|i| format!("    {}", strings(m.row(i)))).collect();
    format!(
        "{{\n  \"field\": {},\n  \"rows\": [\n{}\n  ]\n}}\n",
        field_to_json(m.field()),
        rows.join(",\n")
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use yb_core::catalog::{corpus, super_one_one};

    #[test]
    fn algebra_round_trip() {
        for (name, alg) in corpus() {
            let text = algebra_to_json(&alg);
            let back = parse_algebra(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(back, alg, "{name}");
            assert_eq!(algebra_to_json(&back), text);
        }
        let s = super_one_one(Field::Rational);
        assert_eq!(parse_algebra(&algebra_to_json(&s)).unwrap().grading(), Some(&[0u8, 1][..]));
    }

    #[test]
    fn rejects_floats_and_bad_sizes() {
        let float = r#"{"dimension":1,"field":"Q","basis":["e"],"table":[[[0.5]]]}"#;
        let e = parse_algebra(float).unwrap_err();
        assert!(e.0.contains("table[0][0][0]"), "{e}");
        let short = r#"{"dimension":2,"field":"Q","basis":["a","b"],"table":[[["1","0"],["0","1"]]]}"#;
        assert!(parse_algebra(short).unwrap_err().0.starts_with("table"));
        let exp = r#"{"dimension":1,"field":"Q","basis":["e"],"table":[[["1e3"]]]}"#;
        assert!(parse_algebra(exp).is_err());
        assert!(parse_algebra("{").unwrap_err().0.starts_with("line 1"));
    }

    #[test]
    fn validates_unit_and_grading() {
        let bad_unit = r#"{"dimension":1,"field":"Q","basis":["e"],"table":[[["1"]]],"unit":["2"]}"#;
        assert!(parse_algebra(bad_unit).unwrap_err().0.starts_with("unit"));
        let bad_grading = r#"{"dimension":1,"field":"Q","basis":["e"],"table":[[["1"]]],"grading":[2]}"#;
        assert!(parse_algebra(bad_grading).unwrap_err().0.starts_with("grading"));
    }

    #[test]
    fn matrix_formats() {
        let bare = parse_matrix(r#"[["1","0"],["0","-1/2"]]"#).unwrap();
        assert_eq!(bare.field(), Field::Rational);
        let gf = parse_matrix(r#"{"field":{"gf":7},"rows":[[1,2],[3,4]]}"#).unwrap();
        assert_eq!(gf.get(1, 1).to_string(), "4");
        assert_eq!(parse_matrix(&matrix_to_json(&gf)).unwrap(), gf);
        assert!(parse_matrix(r#"[["1","0"],["0"]]"#).is_err());
        assert!(parse_matrix(r#"[[1.5]]"#).is_err());
    }

    #[test]
    fn field_flags() {
        assert_eq!(parse_field_flag("gf:5").unwrap(), Field::gf(5).unwrap());
        assert_eq!(parse_field_flag("GF(7)").unwrap(), Field::gf(7).unwrap());
        assert!(parse_field_flag("gf:4").is_err());
        assert!(parse_field_flag("R").is_err());
    }
}

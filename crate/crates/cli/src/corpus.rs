//! Algebra and matrix files shipped with the tool, addressable by name.

use std::path::Path;

use yb_core::algebra::FiniteAlgebra;
use yb_core::matrix::Matrix;

use crate::files::{parse_algebra, parse_matrix};
use crate::InputError;

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../corpus/", $name, ".json")))),*]
    };
}

/// `(name, file text)` in catalog order.
pub const ALGEBRAS: &[(&str, &str)] = bundled!(
    "field1",
    "kx2",
    "kx2m1",
    "m2q",
    "m2gf5",
    "sl2",
    "h3",
    "abelian2",
    "abelian3",
    "super11",
    "symjordan",
    "cross3",
    "thm31_zero",
    "thm31_assoc",
    "unified_fail",
);

pub const MATRICES: &[(&str, &str)] = &[("random_seed7.mat", include_str!("../corpus/random_seed7.mat"))];

/// A loaded input: its parsed value, the name it was given by, and the raw
/// bytes that feed the report digest.
pub struct Loaded<T> {
    pub value: T,
    pub name: String,
    pub bytes: Vec<u8>,
}

fn read(arg: &str, bundled: &[(&str, &str)]) -> Result<(String, Vec<u8>), InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let bytes = std::fs::read(path).map_err(|e| InputError(format!("{arg}: {e}")))?;
        return Ok((arg.to_string(), bytes));
    }
    let key = arg.strip_suffix(".json").unwrap_or(arg);
    bundled
        .iter()
        .find(|(name, _)| *name == key)
        .map(|(name, text)| (name.to_string(), text.as_bytes().to_vec()))
        .ok_or_else(|| InputError(format!("{arg}: no such file or bundled name")))
}

fn utf8(name: &str, bytes: &[u8]) -> Result<String, InputError> {
    String::from_utf8(bytes.to_vec()).map_err(|_| InputError(format!("{name}: not UTF-8")))
}

pub fn load_algebra(arg: &str) -> Result<Loaded<FiniteAlgebra>, InputError> {
    let (name, bytes) = read(arg, ALGEBRAS)?;
    let value = parse_algebra(&utf8(&name, &bytes)?).map_err(|e| InputError(format!("{name}: {e}")))?;
    Ok(Loaded { value, name, bytes })
}

pub fn load_matrix(arg: &str) -> Result<Loaded<Matrix>, InputError> {
    let (name, bytes) = read(arg, MATRICES)?;
    let value = parse_matrix(&utf8(&name, &bytes)?).map_err(|e| InputError(format!("{name}: {e}")))?;
    Ok(Loaded { value, name, bytes })
}

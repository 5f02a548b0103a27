//! Library behind the `ybalg` binary: file formats, the bundled corpus,
//! report documents and the subcommands.

pub mod cli;
pub mod commands;
pub mod corpus;
pub mod files;
pub mod random;
pub mod report;

/// Bad input: unreadable or invalid files, flags outside a command's
/// contract, or parameters a builder rejects. Maps to exit status 2.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

impl InputError {
    pub fn new(msg: impl Into<String>) -> InputError {
        InputError(msg.into())
    }
}

macro_rules! from_core_error {
    ($($t:ty),*) => {$(
        impl From<$t> for InputError {
            fn from(e: $t) -> InputError {
                InputError(e.to_string())
            }
        }
    )*};
}

from_core_error!(
    yb_core::LinalgError,
    yb_core::AlgebraError,
    yb_core::YbError,
    yb_core::TensorError
);

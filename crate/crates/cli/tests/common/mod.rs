//! The command examples shared by the golden tests and the acceptance run.

use std::path::{Path, PathBuf};
use std::process::Command;

pub struct Case {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
    /// Substrings the text report must contain.
    pub text: &'static [&'static str],
}

pub const SEVEN_TERMS: &str =
    "aa'b ⊗ 1 ⊗ 1 + 1 ⊗ aa'b ⊗ 1 - a ⊗ a'b ⊗ 1 + 1 ⊗ a ⊗ a'b - aa' ⊗ 1 ⊗ b - 1 ⊗ aa' ⊗ b + a ⊗ a' ⊗ b";

pub const CASES: &[Case] = &[
    Case {
        name: "algebra_check_m2q",
        args: &["algebra-check", "m2q"],
        exit: 0,
        text: &["associative: holds", "commutative: fails", "unit: E11 + E22", "unified_identity: holds", "jordan_identity: holds"],
    },
    Case {
        name: "algebra_check_sl2",
        args: &["algebra-check", "sl2"],
        exit: 0,
        text: &["lie: holds", "unified_identity: holds", "jordan_identity: holds"],
    },
    Case {
        name: "algebra_check_malformed",
        args: &["algebra-check", "tests/data/malformed_table.json"],
        exit: 2,
        text: &[],
    },
    Case {
        name: "ybe_braid_case_i",
        args: &["ybe", "braid", "--family", "assoc", "--algebra", "m2q", "--alpha", "1", "--beta", "1", "--gamma", "1"],
        exit: 0,
        text: &["braid: holds", "invertible: yes"],
    },
    Case {
        name: "ybe_braid_unclassified",
        args: &["ybe", "braid", "--family", "assoc", "--algebra", "m2q", "--alpha", "1", "--beta", "2", "--gamma", "3"],
        exit: 1,
        text: &["braid: fails", "parameter cases: none"],
    },
    Case {
        name: "ybe_transfer_seed7",
        args: &["ybe", "transfer", "--matrix", "random_seed7.mat"],
        exit: 0,
        text: &["agree: yes"],
    },
    Case {
        name: "ybe_superlie_h3",
        args: &["ybe", "braid", "--family", "superlie", "--algebra", "h3", "--z", "z", "--alpha", "1/3"],
        exit: 0,
        text: &["braid: holds", "invertible: yes"],
    },
    Case {
        name: "ybe_superlie_not_central",
        args: &["ybe", "braid", "--family", "superlie", "--algebra", "h3", "--z", "x", "--alpha", "1"],
        exit: 2,
        text: &[],
    },
    Case {
        name: "scan_m2_gf5",
        args: &["scan", "--algebra", "m2q", "--field", "gf:5"],
        exit: 0,
        text: &["rows: 125", "exceptions: 0", "extras: 0"],
    },
    Case {
        name: "scan_m2_gf5_parallel",
        args: &["scan", "--algebra", "m2gf5", "--parallel"],
        exit: 0,
        text: &["rows: 125", "exceptions: 0"],
    },
    Case {
        name: "scan_field1_gf5",
        args: &["scan", "--algebra", "field1", "--field", "gf:5"],
        exit: 0,
        text: &["exceptions: 0", "extras: 68"],
    },
    Case {
        name: "scan_gf101_budget",
        args: &["scan", "--algebra", "m2q", "--field", "gf:101"],
        exit: 2,
        text: &[],
    },
    Case {
        name: "gate_cz_bridge",
        args: &["gate", "--eta", "0", "--q", "1", "--bridge"],
        exit: 0,
        text: &["cz_cnot_bridge: holds", "qybe: holds", "rows-as-images"],
    },
    Case {
        name: "gate_realize_eta1_q2",
        args: &["gate", "--eta", "1", "--q", "2", "--realize"],
        exit: 0,
        text: &["realization equals matrix: yes"],
    },
    Case {
        name: "gate_bridge_inapplicable",
        args: &["gate", "--eta", "1", "--q", "2", "--bridge"],
        exit: 0,
        text: &["cz_cnot_bridge: inapplicable"],
    },
    Case {
        name: "gate_realize_excluded",
        args: &["gate", "--eta", "1", "--q", "-1", "--realize"],
        exit: 2,
        text: &[],
    },
    Case {
        name: "gate_zero_q",
        args: &["gate", "--eta", "0", "--q", "0"],
        exit: 2,
        text: &[],
    },
    Case {
        name: "tprod_21",
        args: &["tprod", "--case", "21"],
        exit: 0,
        text: &[SEVEN_TERMS, "terms: 7"],
    },
    Case {
        name: "tprod_11",
        args: &["tprod", "--case", "11"],
        exit: 0,
        text: &["ab ⊗ 1 + 1 ⊗ ab - a ⊗ b", "terms: 3"],
    },
    Case {
        name: "tprod_21_kx2",
        args: &["tprod", "--case", "21", "--algebra", "kx2", "--assign", "a=x,a'=x,b=x"],
        exit: 0,
        text: &["evaluated in kx2: x⊗x⊗x", "lift-matrix cross-check: holds"],
    },
    Case {
        name: "tprod_incomplete_assignment",
        args: &["tprod", "--case", "21", "--algebra", "kx2", "--assign", "a=x,b=x"],
        exit: 2,
        text: &[],
    },
];

pub fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

pub fn golden_path(name: &str) -> PathBuf {
    manifest_dir().join("tests/golden").join(format!("{name}.json"))
}

pub struct Run {
    pub exit: i32,
    pub stdout: String,
}

pub fn ybalg(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_ybalg"))
        .args(args)
        .current_dir(manifest_dir())
        .output()
        .expect("ybalg runs");
    Run {
        exit: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 output"),
    }
}

/// Runs one case in text and JSON mode. With `update`, rewrites the golden
/// file instead of comparing against it.
pub fn check_case(case: &Case, update: bool) -> Result<(), String> {
    let text = ybalg(case.args);
    if text.exit != case.exit {
        return Err(format!("{}: exit {} (expected {})", case.name, text.exit, case.exit));
    }
    for needle in case.text {
        if !text.stdout.contains(needle) {
            return Err(format!("{}: text output lacks {needle:?}", case.name));
        }
    }
    let mut args = case.args.to_vec();
    args.push("--json");
    let first = ybalg(&args);
    let second = ybalg(&args);
    if first.exit != case.exit {
        return Err(format!("{}: --json exit {} (expected {})", case.name, first.exit, case.exit));
    }
    if first.stdout != second.stdout {
        return Err(format!("{}: --json output differs between runs", case.name));
    }
    let path = golden_path(case.name);
    if update {
        std::fs::write(&path, &first.stdout).map_err(|e| format!("{}: {e}", path.display()))?;
        return Ok(());
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", rel(&path)))?;
    if expected != first.stdout {
        return Err(format!("{}: --json output differs from {}", case.name, rel(&path)));
    }
    Ok(())
}

fn rel(p: &Path) -> String {
    p.strip_prefix(manifest_dir()).unwrap_or(p).display().to_string()
}

//! The document every subcommand produces, rendered as text or JSON.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Status {
    pub exit_code: u8,
    pub summary: String,
}

/// Identical inputs give byte-identical JSON: entries keep command order and
/// nothing time-dependent is recorded.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub command: Vec<String>,
    pub input_sha256: String,
    pub banners: Vec<String>,
    pub entries: Vec<Value>,
    pub status: Status,
    #[serde(skip)]
    pub lines: Vec<String>,
}

impl ReportDocument {
    pub fn new(command: &[String]) -> ReportDocument {
        ReportDocument {
            command: command.to_vec(),
            input_sha256: hex::encode(Sha256::digest(b"")),
            banners: Vec::new(),
            entries: Vec::new(),
            status: Status {
                exit_code: 0,
                summary: String::new(),
            },
            lines: Vec::new(),
        }
    }

    /// Digest over `(name, bytes)` of every input, in the order given.
    pub fn set_inputs<'a>(&mut self, inputs: impl IntoIterator<Item = (&'a str, &'a [u8])>) {
        let mut h = Sha256::new();
        for (name, bytes) in inputs {
            h.update((name.len() as u64).to_le_bytes());
            h.update(name.as_bytes());
            h.update((bytes.len() as u64).to_le_bytes());
            h.update(bytes);
        }
        self.input_sha256 = hex::encode(h.finalize());
    }

    pub fn banner(&mut self, text: impl Into<String>) {
        let text = text.into();
        self.lines.push(format!("# {text}"));
        self.banners.push(text);
    }

    pub fn line(&mut self, text: impl Into<String>) {
        self.lines.push(text.into());
    }

    pub fn entry(&mut self, value: impl Serialize) {
        self.entries.push(serde_json::to_value(value).expect("report entries serialize"));
    }

    pub fn finish(&mut self, failed: bool, summary: impl Into<String>) {
        self.status = Status {
            exit_code: u8::from(failed),
            summary: summary.into(),
        };
    }

    pub fn error(command: &[String], message: &str) -> ReportDocument {
        let mut doc = ReportDocument::new(command);
        doc.entries.push(serde_json::json!({ "error": message }));
        doc.status = Status {
            exit_code: 2,
            summary: "input error".into(),
        };
        doc
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            s.push_str(l);
            s.push('\n');
        }
        s.push_str(&format!("status: {} ({})\n", self.status.summary, self.status.exit_code));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digest_depends_on_names_and_bytes() {
        let cmd = vec!["x".to_string()];
        let mut a = ReportDocument::new(&cmd);
        let mut b = ReportDocument::new(&cmd);
        a.set_inputs([("m", &b"ab"[..])]);
        b.set_inputs([("ma", &b"b"[..])]);
        assert_ne!(a.input_sha256, b.input_sha256);
        assert_eq!(ReportDocument::new(&cmd).input_sha256.len(), 64);
    }

    #[test]
    fn json_omits_text_lines() {
        let mut d = ReportDocument::new(&["gate".to_string()]);
        d.line("hello");
        d.finish(false, "ok");
        assert!(!d.to_json().contains("hello"));
        assert!(d.to_text().contains("hello"));
    }
}

//! Verification report assembly. Two renderings of the same entries:
//! the report file, byte-identical across identical invocations, and
//! the stdout mirror, which appends wall-clock times. The overall exit
//! status is always derived from the entries, never stored.

use std::time::Duration;

use dyncol_core::ConstructionParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Verified,
    Refuted,
    Unknown,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Unknown => "unknown",
        }
    }
}

/// One bound or corroboration, backed by evidence files that re-check
/// standalone via `dyncol check` or a DIMACS solver.
pub struct Entry {
    pub id: &'static str,
    /// Required entries decide the exit status; optional ones only
    /// inform.
    pub required: bool,
    pub method: &'static str,
    pub status: Status,
    pub value: Option<u32>,
    pub evidence: Vec<String>,
    pub note: String,
    pub wall: Duration,
}

pub struct Report {
    params: Vec<(&'static str, String)>,
    entries: Vec<Entry>,
}

impl Report {
    pub fn new(params: &ConstructionParams) -> Self {
        let mut fields: Vec<(&'static str, String)> = vec![
            ("r", params.r().to_string()),
            ("n", params.n().to_string()),
        ];
        if let Some(delta) = params.delta() {
            fields.push(("delta", delta.to_string()));
        }
        fields.extend([
            ("m", params.m().to_string()),
            ("N", params.big_n().to_string()),
            ("vertices", params.vertex_count().to_string()),
            ("edges", params.edge_count().to_string()),
            ("degree", params.degree().to_string()),
            ("pigeonhole_ok", params.pigeonhole_ok().to_string()),
            ("domination_ok", params.domination_ok().to_string()),
        ]);
        Report {
            params: fields,
            entries: Vec::new(),
        }
    }

    pub fn push(&mut self, entry: Entry) {
        self.entries.push(entry);
    }

    /// Exit code under the documented contract: 0 when every required
    /// entry verified, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        let all_good = self
            .entries
            .iter()
            .filter(|e| e.required)
            .all(|e| e.status == Status::Verified);
        if all_good {
            0
        } else {
            1
        }
    }

    /// Claim summary for the `<claim>-lower` / `<claim>-upper` pair.
    fn claim_line(&self, claim: &str) -> Option<String> {
        let find = |suffix: &str| {
            self.entries
                .iter()
                .find(|e| e.id == format!("{claim}-{suffix}"))
        };
        let (lower, upper) = (find("lower")?, find("upper")?);
        let line = match (lower.status, upper.status) {
            (Status::Verified, Status::Verified) if lower.value == upper.value => {
                let value = lower.value.expect("verified bounds carry values");
                format!("claim {claim} verified value {value}")
            }
            (Status::Refuted, _) | (_, Status::Refuted) => {
                format!("claim {claim} refuted")
            }
            _ => {
                let side = |s: &Entry| match (s.status, s.value) {
                    (Status::Verified, Some(v)) => v.to_string(),
                    _ => "unknown".to_string(),
                };
                format!(
                    "claim {claim} partial lower {} upper {}",
                    side(lower),
                    side(upper)
                )
            }
        };
        Some(line)
    }

    fn lines(&self, with_wall: bool) -> Vec<String> {
        let mut out = vec!["dyncol theorem verification".to_string()];
        for (key, value) in &self.params {
            out.push(format!("param {key} {value}"));
        }
        for entry in &self.entries {
            let mut line = format!(
                "entry {} {} method {} status {}",
                entry.id,
                if entry.required { "required" } else { "optional" },
                entry.method,
                entry.status.label()
            );
            if let Some(value) = entry.value {
                line.push_str(&format!(" value {value}"));
            }
            if !entry.evidence.is_empty() {
                line.push_str(&format!(" evidence {}", entry.evidence.join(",")));
            }
            if !entry.note.is_empty() {
                line.push_str(&format!(" :: {}", entry.note));
            }
            if with_wall {
                line.push_str(&format!(" ({:.2}s)", entry.wall.as_secs_f64()));
            }
            out.push(line);
        }
        for claim in ["chi", "chi-r", "gamma"] {
            if let Some(line) = self.claim_line(claim) {
                out.push(line);
            }
        }
        out
    }

    /// Deterministic report-file body.
    pub fn render_file(&self) -> String {
        let mut body = self.lines(false).join("\n");
        body.push('\n');
        body
    }

    /// Stdout mirror with wall times appended to each entry.
    pub fn render_stdout(&self) -> String {
        self.lines(true).join("\n")
    }
}

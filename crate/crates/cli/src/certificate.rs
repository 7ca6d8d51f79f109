use std::fmt;

/// Deterministic text report: five fixed sections of `key: value` lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Certificate {
    pub input: Vec<(String, String)>,
    pub verdict: String,
    pub witness: Vec<(String, String)>,
    pub defects: Vec<(String, String)>,
    pub probes: Vec<(String, String)>,
    /// True iff the verdict is `OK` or `TriangularCoboundary`.
    pub success: bool,
}

pub const OK: &str = "OK";
pub const FAIL: &str = "FAIL";

impl Certificate {
    pub fn set_verdict(&mut self, verdict: impl Into<String>) {
        let v = verdict.into();
        self.success = v == OK || v == "TriangularCoboundary";
        self.verdict = v;
    }

    pub fn witness(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.witness.push((key.into(), value.to_string()));
    }

    pub fn defect(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.defects.push((key.into(), value.to_string()));
    }

    pub fn probe(&mut self, key: impl Into<String>, value: impl fmt::Display) {
        self.probes.push((key.into(), value.to_string()));
    }

    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

fn section(f: &mut fmt::Formatter<'_>, name: &str, lines: &[(String, String)]) -> fmt::Result {
    writeln!(f, "{name}")?;
    for (k, v) in lines {
        writeln!(f, "{k}: {v}")?;
    }
    Ok(())
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        section(f, "INPUT", &self.input)?;
        writeln!(f)?;
        section(f, "VERDICT", &[("verdict".into(), self.verdict.clone())])?;
        writeln!(f)?;
        section(f, "WITNESS", &self.witness)?;
        writeln!(f)?;
        section(f, "DEFECTS", &self.defects)?;
        writeln!(f)?;
        section(f, "PROBES", &self.probes)
    }
}

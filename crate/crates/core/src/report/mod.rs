//! Verification suites and the machine-readable report they produce.

mod context;
mod suites;

use serde::Serialize;
use serde_json::Value;

pub use context::Context;
pub use suites::{run_suite, SUITES};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    #[serde(rename = "report-only")]
    ReportOnly,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Claim {
    pub id: String,
    pub citation: String,
    pub status: Status,
    pub witness: Value,
}

impl Claim {
    pub fn new(id: &str, citation: &str, status: Status, witness: Value) -> Self {
        Claim {
            id: id.to_string(),
            citation: citation.to_string(),
            status,
            witness,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Suite {
    pub name: String,
    pub claims: Vec<Claim>,
}

impl Suite {
    pub fn passed(&self) -> bool {
        self.claims.iter().all(|c| c.status != Status::Fail)
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub padic_precision: u32,
    pub padic_guard: u32,
    pub ball_radius: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub version: String,
    pub suites: Vec<Suite>,
    pub config: Config,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(Suite::passed)
    }

    pub fn failures(&self) -> Vec<(&str, &str)> {
        self.suites
            .iter()
            .flat_map(|s| {
                s.claims
                    .iter()
                    .filter(|c| c.status == Status::Fail)
                    .map(move |c| (s.name.as_str(), c.id.as_str()))
            })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain-text rendering, one line per claim.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.suites {
            out.push_str(&format!("== {} ==\n", s.name));
            for c in &s.claims {
                let st = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "FAIL",
                    Status::ReportOnly => "info",
                };
                out.push_str(&format!("[{st}] {}: {}\n", c.id, c.citation));
                out.push_str(&format!("       {}\n", compact(&c.witness)));
            }
        }
        out
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 400 {
        format!("{}...", &s[..400])
    } else {
        s
    }
}

/// Runs the named suites in order.
pub fn run(ctx: &Context, names: &[&str]) -> crate::Result<VerificationReport> {
    let suites = names
        .iter()
        .map(|n| run_suite(ctx, n))
        .collect::<crate::Result<Vec<_>>>()?;
    Ok(VerificationReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        suites,
        config: ctx.config(),
    })
}

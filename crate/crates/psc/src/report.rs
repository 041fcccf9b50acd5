//! Verdict reports: a line-oriented text form and a JSON form with the same
//! content.

use std::fmt::Write as _;
use std::time::Duration;

use psc_core::verify::{Status, Verdict};
use serde::Serialize;

/// A failure that prevented a verdict from being produced.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InstanceError {
    pub group: String,
    pub prime: Option<u64>,
    pub claim: Option<String>,
    pub message: String,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    /// Resolved configuration, echoed into the header.
    pub config: Vec<(String, String)>,
    pub verdicts: Vec<Verdict>,
    pub errors: Vec<InstanceError>,
    pub total: Option<Duration>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub verified: usize,
    pub refuted: usize,
    pub skipped: usize,
    pub errors: usize,
}

/// Process exit codes.
pub const EXIT_OK: u8 = 0;
pub const EXIT_REFUTED: u8 = 1;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

fn ms(d: Option<Duration>, timing: bool) -> String {
    match d {
        Some(d) if timing => d.as_millis().to_string(),
        _ => "-".into(),
    }
}

fn prime(p: Option<u64>) -> String {
    p.map_or_else(|| "-".into(), |p| p.to_string())
}

impl Report {
    pub fn summary(&self) -> Summary {
        let count = |s: Status| self.verdicts.iter().filter(|v| v.status == s).count();
        Summary {
            verified: count(Status::Verified),
            refuted: count(Status::Refuted),
            skipped: count(Status::SkippedCapacity),
            errors: self.errors.len(),
        }
    }

    /// Refuted beats errors, which beat capacity skips under `strict`.
    pub fn exit_code(&self, strict: bool) -> u8 {
        let s = self.summary();
        if s.refuted > 0 {
            EXIT_REFUTED
        } else if s.errors > 0 {
            EXIT_ERROR
        } else if strict && s.skipped > 0 {
            EXIT_CAPACITY
        } else {
            EXIT_OK
        }
    }

    /// The text form. With `timing = false` every `ms=` field reads `-` and
    /// the closing `timing` line is omitted, so output is reproducible.
    pub fn to_text(&self, timing: bool) -> String {
        let mut out = String::from("format report v1\n");
        out.push_str("config");
        for (k, v) in &self.config {
            let _ = write!(out, " {k}={v}");
        }
        out.push('\n');
        for v in &self.verdicts {
            out.push_str(&verdict_line(v, timing));
            out.push('\n');
        }
        for e in &self.errors {
            let _ = writeln!(
                out,
                "error {} {} p={} message={}",
                e.claim.as_deref().unwrap_or("-"),
                e.group,
                prime(e.prime),
                e.message
            );
        }
        let s = self.summary();
        let _ = writeln!(
            out,
            "summary verified={} refuted={} skipped={} errors={}",
            s.verified, s.refuted, s.skipped, s.errors
        );
        if timing {
            let _ = writeln!(out, "timing total_ms={}", ms(self.total, true));
        }
        out
    }

    pub fn to_json(&self, timing: bool) -> String {
        #[derive(Serialize)]
        struct JsonVerdict<'a> {
            claim: &'a str,
            group: &'a str,
            prime: Option<u64>,
            status: &'static str,
            data: Vec<(&'a str, &'a str)>,
            ms: Option<u128>,
        }
        #[derive(Serialize)]
        struct JsonReport<'a> {
            format: &'static str,
            config: Vec<(&'a str, &'a str)>,
            verdicts: Vec<JsonVerdict<'a>>,
            errors: &'a [InstanceError],
            summary: Summary,
            total_ms: Option<u128>,
        }
        let pick = |d: Option<Duration>| d.filter(|_| timing).map(|d| d.as_millis());
        let report = JsonReport {
            format: "report v1",
            config: self.config.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect(),
            verdicts: self
                .verdicts
                .iter()
                .map(|v| JsonVerdict {
                    claim: &v.claim,
                    group: &v.group,
                    prime: v.prime,
                    status: v.status.name(),
                    data: v.data.iter().map(|(k, x)| (k.as_str(), x.as_str())).collect(),
                    ms: pick(v.wall_time),
                })
                .collect(),
            errors: &self.errors,
            summary: self.summary(),
            total_ms: pick(self.total),
        };
        let mut s = serde_json::to_string_pretty(&report).expect("report serializes");
        s.push('\n');
        s
    }
}

/// `verdict <claim> <group> p=<p|-> status=<s> data={k=v,...} ms=<t|->`.
pub fn verdict_line(v: &Verdict, timing: bool) -> String {
    let data: Vec<String> = v.data.iter().map(|(k, x)| format!("{k}={x}")).collect();
    format!(
        "verdict {} {} p={} status={} data={{{}}} ms={}",
        v.claim,
        v.group,
        prime(v.prime),
        v.status,
        data.join(","),
        ms(v.wall_time, timing)
    )
}

/// Drops `ms=` fields and `timing` lines, for comparing reports.
pub fn strip_timing(text: &str) -> String {
    text.lines()
        .filter(|l| !l.starts_with("timing "))
        .map(|l| match l.rfind(" ms=") {
            Some(i) if l.starts_with("verdict ") => &l[..i],
            _ => l,
        })
        .fold(String::new(), |mut acc, l| {
            acc.push_str(l);
            acc.push('\n');
            acc
        })
}

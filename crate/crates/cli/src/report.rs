//! JSON verification reports.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub paper_anchor: String,
    pub status: Status,
    pub residual: BTreeMap<String, Value>,
    pub timing_ms: Option<Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: Vec<String>,
    pub checks: Vec<Check>,
    pub overall: Status,
    pub summary: BTreeMap<String, usize>,
}

impl Report {
    pub fn new(command: Vec<String>, checks: Vec<Check>) -> Report {
        let count = |s: Status| checks.iter().filter(|c| c.status == s).count();
        let mut summary = BTreeMap::new();
        summary.insert("passed".to_string(), count(Status::Pass));
        summary.insert("failed".to_string(), count(Status::Fail));
        summary.insert("skipped".to_string(), count(Status::Skipped));
        let overall = Status::from_bool(count(Status::Fail) == 0);
        Report { schema_version: SCHEMA_VERSION, command, checks, overall, summary }
    }

    pub fn passed(&self) -> bool {
        self.overall == Status::Pass
    }

    /// Pretty JSON with sorted keys.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
        s.push('\n');
        s
    }
}

/// A float rounded to 12 significant digits; non-finite values become strings.
pub fn num(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(x.to_string());
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    let r = if r == 0.0 { 0.0 } else { r };
    serde_json::Number::from_f64(r).map_or(Value::Null, Value::Number)
}

/// Text form of [`num`], for CSV cells.
pub fn num_text(x: f64) -> String {
    match num(x) {
        Value::Number(n) => n.to_string(),
        Value::String(s) => s,
        _ => "NaN".into(),
    }
}

pub struct Outcome {
    pub status: Status,
    pub residual: BTreeMap<String, Value>,
}

impl Outcome {
    pub fn ok(ok: bool) -> Outcome {
        Outcome { status: Status::from_bool(ok), residual: BTreeMap::new() }
    }

    pub fn with(mut self, key: &str, v: impl Into<Value>) -> Outcome {
        self.residual.insert(key.to_string(), v.into());
        self
    }
}

pub type JobFn = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Job {
    pub name: String,
    pub anchor: &'static str,
    pub run: JobFn,
}

impl Job {
    pub fn new(name: impl Into<String>, anchor: &'static str, run: impl Fn() -> Outcome + Send + Sync + 'static) -> Job {
        Job { name: name.into(), anchor, run: Box::new(run) }
    }
}

/// Run jobs (in parallel when enabled); output order follows input order.
pub fn run_jobs(jobs: Vec<Job>, timing: bool) -> Vec<Check> {
    sointegra_core::par::map(&jobs, |j| {
        let t = Instant::now();
        let o = (j.run)();
        let ms = t.elapsed().as_secs_f64() * 1e3;
        Check {
            name: j.name.clone(),
            paper_anchor: j.anchor.to_string(),
            status: o.status,
            residual: o.residual,
            timing_ms: timing.then(|| num(ms)),
        }
    })
}

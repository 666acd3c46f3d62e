//! Verdict trees produced by every check.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Duration;

use serde_json::{json, Value};

use crate::exactlin::Mat;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    HypothesesUnmet,
    Fail,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::HypothesesUnmet => "hypotheses-unmet",
            Verdict::Fail => "fail",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub name: String,
    pub verdict: Verdict,
    pub detail: Option<String>,
    pub facts: BTreeMap<String, Value>,
    pub witness: Option<Value>,
    pub items: Vec<Report>,
    /// Wall time; shown in human output only so machine output stays reproducible.
    pub timing: Option<Duration>,
}

impl Report {
    fn leaf(name: impl Into<String>, verdict: Verdict) -> Report {
        Report {
            name: name.into(),
            verdict,
            detail: None,
            facts: BTreeMap::new(),
            witness: None,
            items: Vec::new(),
            timing: None,
        }
    }

    pub fn pass(name: impl Into<String>) -> Report {
        Report::leaf(name, Verdict::Pass)
    }

    pub fn fail(name: impl Into<String>, witness: Value) -> Report {
        let mut r = Report::leaf(name, Verdict::Fail);
        r.witness = Some(witness);
        r
    }

    pub fn unmet(name: impl Into<String>, reason: impl Into<String>) -> Report {
        Report::leaf(name, Verdict::HypothesesUnmet).with_detail(reason)
    }

    /// A boolean check; the witness is only built on failure.
    pub fn check(name: impl Into<String>, ok: bool, witness: impl FnOnce() -> Value) -> Report {
        if ok {
            Report::pass(name)
        } else {
            Report::fail(name, witness())
        }
    }

    /// Exact matrix equality; a failure records the first differing entry.
    pub fn equal(name: impl Into<String>, lhs: &Mat, rhs: &Mat) -> Report {
        Report::check(name, lhs == rhs, || mismatch(lhs, rhs))
    }

    /// A node whose verdict is the worst verdict among its items.
    pub fn group(name: impl Into<String>, items: Vec<Report>) -> Report {
        let verdict = items.iter().map(|r| r.verdict).max().unwrap_or(Verdict::Pass);
        let mut r = Report::leaf(name, verdict);
        r.items = items;
        r
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Report {
        self.detail = Some(detail.into());
        self
    }

    pub fn with_fact(mut self, key: impl Into<String>, value: impl Into<Value>) -> Report {
        self.facts.insert(key.into(), value.into());
        self
    }

    pub fn with_timing(mut self, t: Duration) -> Report {
        self.timing = Some(t);
        self
    }

    pub fn push(&mut self, item: Report) {
        self.verdict = self.verdict.max(item.verdict);
        self.items.push(item);
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failed(&self) -> bool {
        self.verdict == Verdict::Fail
    }

    /// Depth-first search for an item by name.
    pub fn find(&self, name: &str) -> Option<&Report> {
        if self.name == name {
            return Some(self);
        }
        self.items.iter().find_map(|r| r.find(name))
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({ "name": self.name, "verdict": self.verdict.as_str() });
        if let Some(d) = &self.detail {
            v["detail"] = json!(d);
        }
        if !self.facts.is_empty() {
            v["facts"] = json!(self.facts);
        }
        if let Some(w) = &self.witness {
            v["witness"] = w.clone();
        }
        if !self.items.is_empty() {
            v["items"] = Value::Array(self.items.iter().map(Report::to_json).collect());
        }
        v
    }

    fn render(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let mark = match self.verdict {
            Verdict::Pass => "ok  ",
            Verdict::Fail => "FAIL",
            Verdict::HypothesesUnmet => "n/a ",
        };
        write!(f, "{:indent$}[{mark}] {}", "", self.name, indent = depth * 2)?;
        for (k, v) in &self.facts {
            write!(f, "  {k}={v}")?;
        }
        if let Some(d) = &self.detail {
            write!(f, "  ({d})")?;
        }
        if let Some(t) = self.timing {
            write!(f, "  [{:.1} ms]", t.as_secs_f64() * 1e3)?;
        }
        writeln!(f)?;
        if let Some(w) = &self.witness {
            writeln!(f, "{:indent$}witness: {w}", "", indent = depth * 2 + 7)?;
        }
        for item in &self.items {
            item.render(f, depth + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.render(f, 0)
    }
}

fn mismatch(lhs: &Mat, rhs: &Mat) -> Value {
    if lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols() {
        return json!({ "shape": [[lhs.rows(), lhs.cols()], [rhs.rows(), rhs.cols()]] });
    }
    for i in 0..lhs.rows() {
        for j in 0..lhs.cols() {
            if lhs.get(i, j) != rhs.get(i, j) {
                return json!({
                    "entry": [i, j],
                    "lhs": lhs.get(i, j).to_json(),
                    "rhs": rhs.get(i, j).to_json(),
                });
            }
        }
    }
    json!(null)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::Field;

    #[test]
    fn group_takes_worst_verdict() {
        let g = Report::group("g", vec![Report::pass("a"), Report::unmet("b", "no unit")]);
        assert_eq!(g.verdict, Verdict::HypothesesUnmet);
        let mut g = g;
        g.push(Report::fail("c", json!([0, 1, 2])));
        assert!(g.failed());
        assert_eq!(Report::group("empty", vec![]).verdict, Verdict::Pass);
    }

    #[test]
    fn equality_witness_names_the_entry() {
        let f = Field::Rational;
        let r = Report::equal("eq", &Mat::identity(f, 2), &Mat::zeros(f, 2, 2));
        assert_eq!(r.witness.unwrap()["entry"], json!([0, 0]));
    }

    #[test]
    fn json_omits_timing() {
        let r = Report::pass("t").with_timing(Duration::from_millis(3));
        assert_eq!(r.to_json(), json!({"name": "t", "verdict": "pass"}));
    }
}

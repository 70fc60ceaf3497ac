//! Axiom-check outcomes.

use std::fmt::Write as _;

use serde::Serialize;

use crate::tensor::Tensor;

/// One axiom instance (an axiom at one object tuple), possibly aggregated over many basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportItem {
    pub axiom: String,
    pub objects: Vec<String>,
    /// Informational items are reported but never affect the overall verdict.
    pub required: bool,
    pub holds: bool,
    pub instances_checked: usize,
    pub failures: usize,
    /// Basis multi-index of the first failing domain element.
    pub witness: Option<Vec<usize>>,
    pub residual: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

/// Accumulates basis-element comparisons for one axiom instance.
pub struct Check {
    item: ReportItem,
}

impl Check {
    pub fn new(axiom: &str, objects: &[&str]) -> Self {
        Check {
            item: ReportItem {
                axiom: axiom.to_string(),
                objects: objects.iter().map(|s| s.to_string()).collect(),
                required: true,
                holds: true,
                instances_checked: 0,
                failures: 0,
                witness: None,
                residual: None,
            },
        }
    }

    /// Compare both sides of the identity at basis element `witness`.
    pub fn compare(&mut self, witness: &[usize], lhs: &Tensor, rhs: &Tensor) {
        self.item.instances_checked += 1;
        if lhs != rhs {
            let diff = lhs.sub(rhs);
            self.fail(witness, diff.describe(6));
        }
    }

    pub fn expect(&mut self, witness: &[usize], ok: bool, residual: impl FnOnce() -> String) {
        self.item.instances_checked += 1;
        if !ok {
            self.fail(witness, residual());
        }
    }

    fn fail(&mut self, witness: &[usize], residual: String) {
        self.item.holds = false;
        self.item.failures += 1;
        if self.item.witness.is_none() {
            self.item.witness = Some(witness.to_vec());
            self.item.residual = Some(residual);
        }
    }

    pub fn finish(self) -> ReportItem {
        self.item
    }
}

impl ReportItem {
    /// A single yes/no observation, e.g. a rank condition.
    pub fn verdict(axiom: &str, objects: &[&str], holds: bool, detail: Option<String>) -> Self {
        ReportItem {
            axiom: axiom.to_string(),
            objects: objects.iter().map(|s| s.to_string()).collect(),
            required: true,
            holds,
            instances_checked: 1,
            failures: usize::from(!holds),
            witness: None,
            residual: detail,
        }
    }

    pub fn informational(mut self) -> Self {
        self.required = false;
        self
    }
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    pub fn extend(&mut self, other: Report) {
        self.items.extend(other.items);
    }

    /// Pass iff no required item failed.
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.holds || !i.required)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.required && !i.holds)
    }

    pub fn find(&self, axiom: &str) -> impl Iterator<Item = &ReportItem> {
        let axiom = axiom.to_string();
        self.items.iter().filter(move |i| i.axiom == axiom)
    }

    /// True iff every item named `axiom` holds (and at least one exists).
    pub fn holds(&self, axiom: &str) -> bool {
        let mut seen = false;
        for i in self.find(axiom) {
            seen = true;
            if !i.holds {
                return false;
            }
        }
        seen
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w_axiom = self.items.iter().map(|i| i.axiom.len()).max().unwrap_or(5).max(5);
        let objs: Vec<String> = self.items.iter().map(|i| format!("({})", i.objects.join(","))).collect();
        let w_obj = objs.iter().map(String::len).max().unwrap_or(7).max(7);
        let _ = writeln!(out, "{:<w_axiom$}  {:<w_obj$}  {:<6}  {:>7}  witness / residual", "axiom", "objects", "result", "checked");
        for (item, obj) in self.items.iter().zip(&objs) {
            let result = match (item.holds, item.required) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "false",
            };
            let mut tail = String::new();
            if let Some(w) = &item.witness {
                let _ = write!(tail, "basis {w:?}");
            }
            if let Some(r) = &item.residual {
                if !tail.is_empty() {
                    tail.push_str(": ");
                }
                tail.push_str(r);
            }
            let _ = writeln!(out, "{:<w_axiom$}  {:<w_obj$}  {:<6}  {:>7}  {}", item.axiom, obj, result, item.instances_checked, tail);
        }
        let _ = writeln!(out, "overall: {}", if self.passed() { "PASS" } else { "FAIL" });
        out
    }

    /// One JSON record per item.
    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for item in &self.items {
            out.push_str(&serde_json::to_string(item).expect("report items serialize"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    #[test]
    fn informational_failures_do_not_fail_the_report() {
        let mut r = Report::new();
        r.push(ReportItem::verdict("a", &["x"], true, None));
        r.push(ReportItem::verdict("b", &["x"], false, None).informational());
        assert!(r.passed());
        r.push(ReportItem::verdict("c", &["x"], false, None));
        assert!(!r.passed());
        assert_eq!(r.failures().count(), 1);
    }

    #[test]
    fn first_witness_is_kept() {
        let q = Field::Rational;
        let mut c = Check::new("assoc", &["x"]);
        let a = Tensor::basis(q, &[2], &[0]);
        let b = Tensor::basis(q, &[2], &[1]);
        c.compare(&[0], &a, &a);
        c.compare(&[1], &a, &b);
        c.compare(&[2], &b, &a);
        let item = c.finish();
        assert_eq!(item.failures, 2);
        assert_eq!(item.witness, Some(vec![1]));
        assert_eq!(item.instances_checked, 3);
    }
}

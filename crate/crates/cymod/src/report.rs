//! Verification reports: a flat list of (relation id, status) items with a
//! deterministic serialized form.  Items are sorted by relation id, and the
//! JSON rendering contains no timing or environment data, so a fixed seed
//! yields byte-identical output.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Non-blocking observation: reported, never gates the exit code.
    Info,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ReportItem {
    pub relation_id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new(suite: &str) -> Report {
        Report {
            suite: suite.to_string(),
            n: None,
            seed: None,
            items: Vec::new(),
        }
    }

    pub fn push(&mut self, relation_id: &str, ok: bool) {
        self.items.push(ReportItem {
            relation_id: relation_id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: None,
        });
    }

    pub fn push_detail(&mut self, relation_id: &str, ok: bool, detail: &str) {
        self.items.push(ReportItem {
            relation_id: relation_id.to_string(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail: Some(detail.to_string()),
        });
    }

    pub fn push_info(&mut self, relation_id: &str, detail: &str) {
        self.items.push(ReportItem {
            relation_id: relation_id.to_string(),
            status: Status::Info,
            detail: Some(detail.to_string()),
        });
    }

    /// Sort items by relation id (stable output independent of run order).
    pub fn finish(mut self) -> Report {
        self.items.sort_by(|a, b| a.relation_id.cmp(&b.relation_id));
        self
    }

    /// True when no item failed (Info never blocks).
    pub fn all_pass(&self) -> bool {
        self.items.iter().all(|i| i.status != Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("suite: {}", self.suite));
        if let Some(n) = self.n {
            out.push_str(&format!(" (n={n})"));
        }
        if let Some(s) = self.seed {
            out.push_str(&format!(" [seed={s}]"));
        }
        out.push('\n');
        for item in &self.items {
            let tag = match item.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Info => "INFO",
            };
            out.push_str(&format!("  {tag}  {}", item.relation_id));
            if let Some(d) = &item.detail {
                out.push_str(&format!("  — {d}"));
            }
            out.push('\n');
        }
        let (np, nf) = (
            self.items
                .iter()
                .filter(|i| i.status == Status::Pass)
                .count(),
            self.items
                .iter()
                .filter(|i| i.status == Status::Fail)
                .count(),
        );
        out.push_str(&format!("  {} passed, {} failed\n", np, nf));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sorted_and_deterministic() {
        let mut r = Report::new("demo");
        r.push("zzz", true);
        r.push("aaa", true);
        let r = r.finish();
        assert_eq!(r.items[0].relation_id, "aaa");
        assert!(r.all_pass());
        let j1 = r.to_json();
        let j2 = r.to_json();
        assert_eq!(j1, j2);
        assert!(!j1.contains("elapsed"));
    }

    #[test]
    fn info_does_not_block() {
        let mut r = Report::new("demo");
        r.push("ok", true);
        r.push_info("observation", "reported only");
        assert!(r.finish().all_pass());
    }
}

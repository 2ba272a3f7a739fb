//! Machine-readable result documents and their text rendering.
//!
//! Every command that analyzes an instance emits one of these reports,
//! either as pretty-printed JSON (`--format json`) or as the text rendering
//! (`--format text`). The JSON form carries every fact the text form shows,
//! and reports are deterministic byte streams for fixed inputs: matchings
//! are identified by their 1-based position in the canonical enumeration
//! plus the explicit pair list, and timings are deliberately excluded.

use affmatch_core::{Market, Matching};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchingDoc {
    /// 1-based position in the canonical (lexicographic) enumeration of all
    /// perfect matchings.
    pub index: usize,
    /// (applicant, employer) label pairs in applicant roster order.
    pub pairs: Vec<(String, String)>,
}

pub fn matching_doc(market: &Market, matching: &Matching) -> MatchingDoc {
    MatchingDoc {
        index: matching.lex_rank() + 1,
        pairs: matching
            .pairs()
            .map(|(a, e)| {
                (
                    market.applicant_label(a).to_string(),
                    market.employer_label(e).to_string(),
                )
            })
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidateReport {
    pub applicants: usize,
    pub employers: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EnumerateReport {
    pub n: usize,
    pub count: usize,
    pub matchings: Vec<MatchingDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockingPairDoc {
    pub applicant: String,
    pub employer: String,
    /// [hire, placements..] labels of the tuple beating the current outcome.
    pub witness_tuple: Vec<String>,
    pub witness_matching: MatchingDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoalitionDoc {
    pub applicants: Vec<String>,
    pub employers: Vec<String>,
    pub witness: MatchingDoc,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchingVerdict {
    pub matching: MatchingDoc,
    pub stable: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocking_pairs: Option<Vec<BlockingPairDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coalition: Option<CoalitionDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StableReport {
    pub notion: String,
    pub n: usize,
    pub stable_count: usize,
    pub core_empty: bool,
    pub matchings: Vec<MatchingVerdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolveReport {
    pub objective: String,
    pub cuts: String,
    pub node_budget: u64,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<MatchingDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub score: Option<i64>,
    pub nodes_explored: u64,
    pub cuts_added: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BaseOrderDoc {
    pub employer: String,
    /// Applicant labels, best first.
    pub order: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReduceReport {
    pub base_orders: Vec<BaseOrderDoc>,
    pub matching: MatchingDoc,
}

/// Any machine report, tagged by the command that produced it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "snake_case")]
pub enum Report {
    Validate(ValidateReport),
    Enumerate(EnumerateReport),
    Stable(StableReport),
    Solve(SolveReport),
    Reduce(ReduceReport),
}

pub fn to_json(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports always serialize");
    text.push('\n');
    text
}

fn pairs_line(doc: &MatchingDoc) -> String {
    let pairs: Vec<String> = doc.pairs.iter().map(|(a, e)| format!("{a}-{e}")).collect();
    format!("matching {}: {}", doc.index, pairs.join(" "))
}

/// Renders a machine report as the human-readable text form.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Validate(r) => {
            out.push_str(&format!(
                "ok: {} applicants, {} employers\n",
                r.applicants, r.employers
            ));
        }
        Report::Enumerate(r) => {
            out.push_str(&format!("n: {}\nmatchings: {}\n", r.n, r.count));
            for m in &r.matchings {
                out.push_str(&format!("  {}\n", pairs_line(m)));
            }
        }
        Report::Stable(r) => {
            out.push_str(&format!("notion: {}\n", r.notion));
            out.push_str(&format!(
                "matchings: {}, stable: {}\n",
                r.matchings.len(),
                r.stable_count
            ));
            for v in &r.matchings {
                let verdict = if v.stable { "stable" } else { "unstable" };
                out.push_str(&format!("  {} -- {}\n", pairs_line(&v.matching), verdict));
                if let Some(pairs) = &v.blocking_pairs {
                    for p in pairs {
                        out.push_str(&format!(
                            "    blocking pair ({}, {}): tuple [{}] realized by {}\n",
                            p.applicant,
                            p.employer,
                            p.witness_tuple.join(", "),
                            pairs_line(&p.witness_matching),
                        ));
                    }
                }
                if let Some(c) = &v.coalition {
                    out.push_str(&format!(
                        "    blocking coalition {{{}}} x {{{}}} via {}\n",
                        c.applicants.join(", "),
                        c.employers.join(", "),
                        pairs_line(&c.witness),
                    ));
                }
            }
            out.push_str(if r.core_empty {
                "core: empty\n"
            } else {
                "core: nonempty\n"
            });
        }
        Report::Solve(r) => {
            out.push_str(&format!("objective: {}\n", r.objective));
            out.push_str(&format!("cuts: {}\n", r.cuts));
            out.push_str(&format!("status: {}\n", r.status));
            if let Some(m) = &r.matching {
                out.push_str(&format!("  {}\n", pairs_line(m)));
            }
            if let Some(score) = r.score {
                out.push_str(&format!("score: {score}\n"));
            }
            out.push_str(&format!(
                "nodes explored: {}\ncuts added: {}\n",
                r.nodes_explored, r.cuts_added
            ));
        }
        Report::Reduce(r) => {
            out.push_str("base orders:\n");
            for b in &r.base_orders {
                out.push_str(&format!("  {}: {}\n", b.employer, b.order.join(" > ")));
            }
            out.push_str(&format!("  {}\n", pairs_line(&r.matching)));
        }
    }
    out
}

//! Exhaustive ground-truth engine: enumerate all perfect matchings,
//! classify every one under a stability notion, and detect empty cores.
//! Deliberately brute-force; it is the correctness reference for the
//! optimizing solver.

use std::fmt;

use crate::limits::{InstanceTooLarge, OracleLimits};
use crate::market::{ApplicantId, EmployerId, Market};
use crate::stability::{
    find_greedy_blocking_pairs, is_strictly_stable, GreedyBlockingPair, Matching,
    StrictBlockingCoalition,
};

/// Which stability notion a classification uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilityNotion {
    Greedy,
    Strict,
}

impl StabilityNotion {
    pub fn name(&self) -> &'static str {
        match self {
            StabilityNotion::Greedy => "greedy",
            StabilityNotion::Strict => "strict",
        }
    }

    pub fn parse(name: &str) -> Option<StabilityNotion> {
        match name {
            "greedy" => Some(StabilityNotion::Greedy),
            "strict" => Some(StabilityNotion::Strict),
            _ => None,
        }
    }
}

impl fmt::Display for StabilityNotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Why a matching is unstable, under the notion that classified it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstabilityCertificate {
    /// Every greedy blocking pair, in deterministic order.
    GreedyPairs(Vec<GreedyBlockingPair>),
    /// The maximal coalition for the lowest blocking witness in canonical
    /// order.
    Coalition(StrictBlockingCoalition),
}

/// One matching's verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub matching: Matching,
    /// `None` iff the matching is stable under the requested notion.
    pub certificate: Option<InstabilityCertificate>,
}

impl Classification {
    pub fn is_stable(&self) -> bool {
        self.certificate.is_none()
    }
}

/// Classification of every perfect matching of a market, in canonical
/// order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableSetReport {
    pub notion: StabilityNotion,
    pub classifications: Vec<Classification>,
}

impl StableSetReport {
    pub fn stable_matchings(&self) -> Vec<&Matching> {
        self.classifications
            .iter()
            .filter(|c| c.is_stable())
            .map(|c| &c.matching)
            .collect()
    }

    /// 0-based canonical indices of the stable matchings.
    pub fn stable_indices(&self) -> Vec<usize> {
        self.classifications
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_stable())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn core_empty(&self) -> bool {
        self.classifications.iter().all(|c| !c.is_stable())
    }
}

/// All n! perfect matchings in canonical lexicographic order on the
/// employer-by-applicant assignment array.
pub fn enumerate_matchings(
    n: usize,
    limits: &OracleLimits,
) -> Result<Vec<Matching>, InstanceTooLarge> {
    if n > limits.enumerate_max {
        return Err(InstanceTooLarge {
            n,
            max: limits.enumerate_max,
        });
    }
    let mut out = Vec::new();
    let mut assignment: Vec<EmployerId> = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fill_matchings(n, &mut assignment, &mut used, &mut out);
    Ok(out)
}

fn fill_matchings(
    n: usize,
    assignment: &mut Vec<EmployerId>,
    used: &mut Vec<bool>,
    out: &mut Vec<Matching>,
) {
    if assignment.len() == n {
        out.push(Matching::from_assignment_unchecked(assignment.clone()));
        return;
    }
    for e in 0..n {
        if used[e] {
            continue;
        }
        used[e] = true;
        assignment.push(EmployerId(e));
        fill_matchings(n, assignment, used, out);
        assignment.pop();
        used[e] = false;
    }
}

fn classify(
    market: &Market,
    notion: StabilityNotion,
    matching: &Matching,
    limits: &OracleLimits,
) -> Classification {
    let certificate = match notion {
        StabilityNotion::Greedy => {
            let pairs = find_greedy_blocking_pairs(market, matching);
            if pairs.is_empty() {
                None
            } else {
                Some(InstabilityCertificate::GreedyPairs(pairs))
            }
        }
        StabilityNotion::Strict => {
            let (_, certificate) = is_strictly_stable(market, matching, limits)
                .expect("size was checked before classification");
            certificate.map(InstabilityCertificate::Coalition)
        }
    };
    Classification {
        matching: matching.clone(),
        certificate,
    }
}

/// Classifies every matching of the market under the requested notion.
pub fn stable_set(
    market: &Market,
    notion: StabilityNotion,
    limits: &OracleLimits,
) -> Result<StableSetReport, InstanceTooLarge> {
    stable_set_with_threads(market, notion, limits, 1)
}

/// [`stable_set`] with the per-matching classification fanned out over
/// `threads` worker threads. The report is assembled in canonical order, so
/// results do not depend on the thread count.
pub fn stable_set_with_threads(
    market: &Market,
    notion: StabilityNotion,
    limits: &OracleLimits,
    threads: usize,
) -> Result<StableSetReport, InstanceTooLarge> {
    let n = market.size();
    if notion == StabilityNotion::Strict && n > limits.strict_max {
        return Err(InstanceTooLarge {
            n,
            max: limits.strict_max,
        });
    }
    let matchings = enumerate_matchings(n, limits)?;
    let classifications = if threads <= 1 || matchings.len() < 2 {
        matchings
            .iter()
            .map(|m| classify(market, notion, m, limits))
            .collect()
    } else {
        let workers = threads.min(matchings.len());
        let chunk = matchings.len().div_ceil(workers);
        std::thread::scope(|scope| {
            let handles: Vec<_> = matchings
                .chunks(chunk)
                .map(|slice| {
                    scope.spawn(move || {
                        slice
                            .iter()
                            .map(|m| classify(market, notion, m, limits))
                            .collect::<Vec<_>>()
                    })
                })
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("classification worker panicked"))
                .collect()
        })
    };
    Ok(StableSetReport {
        notion,
        classifications,
    })
}

/// Confirms that the profile-scan and witness-matching formulations of a
/// greedy blocking pair agree on every (matching, pair) combination of the
/// market.
pub fn definition_equivalence_check(
    market: &Market,
    limits: &OracleLimits,
) -> Result<bool, InstanceTooLarge> {
    let matchings = enumerate_matchings(market.size(), limits)?;
    for matching in &matchings {
        for a in market.applicants() {
            for e in market.employers() {
                if matching.employer_of(a) == e {
                    continue;
                }
                let scan = scan_blocks(market, matching, a, e);
                let witness = witness_blocks(market, matching, &matchings, a, e);
                if scan != witness {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn scan_blocks(market: &Market, matching: &Matching, a: ApplicantId, e: EmployerId) -> bool {
    let prefers = market.applicant_rank(a, e) < market.applicant_rank(a, matching.employer_of(a));
    prefers
        && market.best_hire_rank(e, a)
            < crate::stability::employer_outcome(market, matching, e).rank
}

fn witness_blocks(
    market: &Market,
    matching: &Matching,
    matchings: &[Matching],
    a: ApplicantId,
    e: EmployerId,
) -> bool {
    let prefers = market.applicant_rank(a, e) < market.applicant_rank(a, matching.employer_of(a));
    if !prefers {
        return false;
    }
    let current = crate::stability::employer_outcome(market, matching, e).rank;
    matchings.iter().any(|candidate| {
        candidate.employer_of(a) == e && {
            let realized = crate::stability::outcome_tuple(market, candidate, e);
            market
                .tuple_rank(e, &realized)
                .expect("realized tuples are valid")
                < current
        }
    })
}

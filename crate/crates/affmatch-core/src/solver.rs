//! Clearing engines.
//!
//! [`deferred_acceptance`] handles the consistent case: when every employer
//! profile is grouped by hire, greedy stability coincides with classical
//! stability of the reduced instance (applicant orders versus inferred base
//! orders), and applicant-proposing deferred acceptance clears the market in
//! polynomial time.
//!
//! [`solve`] handles the general case: depth-first branch and bound over the
//! assignment matrix, testing greedy stability at complete leaves. Unstable
//! leaves generate cuts — a no-good excluding that one assignment, and
//! optionally a conditional-pair cut that generalizes the blocking pair into
//! a linear inequality valid for every greedily stable matching. The search
//! is exhaustive, so an empty core is certified, and the optimum over the
//! stable set is exact for every objective.

use std::collections::HashSet;
use std::collections::VecDeque;
use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::market::{ApplicantId, EmployerId, Market};
use crate::stability::{employer_outcome, Matching};

/// What to optimize over the greedily stable set. Rank sums are minimized;
/// top choices are maximized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Objective {
    /// Any stable matching (score 0).
    Feasibility,
    /// Sum of applicant ranks of their assigned employer.
    MinApplicantRankSum,
    /// Sum of employer outcome ranks.
    MinEmployerRankSum,
    /// Number of agents, on both sides, with their top choice realized.
    MaxTopChoices,
    /// Sum of realized ranks over all agents on both sides.
    MinEgalitarianSum,
}

impl Objective {
    pub const ALL: [Objective; 5] = [
        Objective::Feasibility,
        Objective::MinApplicantRankSum,
        Objective::MinEmployerRankSum,
        Objective::MaxTopChoices,
        Objective::MinEgalitarianSum,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Objective::Feasibility => "feasibility",
            Objective::MinApplicantRankSum => "min_applicant_rank_sum",
            Objective::MinEmployerRankSum => "min_employer_rank_sum",
            Objective::MaxTopChoices => "max_top_choices",
            Objective::MinEgalitarianSum => "min_egalitarian_sum",
        }
    }

    pub fn parse(name: &str) -> Option<Objective> {
        Objective::ALL.into_iter().find(|o| o.name() == name)
    }

    /// True when larger scores are better.
    pub fn maximizing(&self) -> bool {
        matches!(self, Objective::MaxTopChoices)
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The natural score of a matching under an objective.
pub fn score(market: &Market, matching: &Matching, objective: Objective) -> i64 {
    let applicant_sum = || -> i64 {
        market
            .applicants()
            .map(|a| market.applicant_rank(a, matching.employer_of(a)) as i64)
            .sum()
    };
    let employer_sum = || -> i64 {
        market
            .employers()
            .map(|e| employer_outcome(market, matching, e).rank as i64)
            .sum()
    };
    match objective {
        Objective::Feasibility => 0,
        Objective::MinApplicantRankSum => applicant_sum(),
        Objective::MinEmployerRankSum => employer_sum(),
        Objective::MaxTopChoices => {
            let applicants = market
                .applicants()
                .filter(|&a| market.applicant_rank(a, matching.employer_of(a)) == 1)
                .count() as i64;
            let employers = market
                .employers()
                .filter(|&e| employer_outcome(market, matching, e).rank == 1)
                .count() as i64;
            applicants + employers
        }
        Objective::MinEgalitarianSum => applicant_sum() + employer_sum(),
    }
}

/// Score in minimization form: maximized objectives are negated.
fn cost(market: &Market, matching: &Matching, objective: Objective) -> i64 {
    let s = score(market, matching, objective);
    if objective.maximizing() {
        -s
    } else {
        s
    }
}

/// Which cuts the search derives from certified-unstable leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutStrategy {
    /// No-good cuts only, each excluding one full assignment.
    NoGood,
    /// No-good cuts plus conditional-pair cuts that prune partial nodes.
    NoGoodConditional,
}

impl CutStrategy {
    pub fn name(&self) -> &'static str {
        match self {
            CutStrategy::NoGood => "nogood",
            CutStrategy::NoGoodConditional => "nogood+conditional",
        }
    }

    pub fn parse(name: &str) -> Option<CutStrategy> {
        match name {
            "nogood" => Some(CutStrategy::NoGood),
            "nogood+conditional" => Some(CutStrategy::NoGoodConditional),
            _ => None,
        }
    }
}

/// Search configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolveConfig {
    /// Maximum nodes to explore before giving up.
    pub node_budget: u64,
    pub cuts: CutStrategy,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            node_budget: 10_000_000,
            cuts: CutStrategy::NoGood,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
}

/// Terminal state of a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveStatus {
    /// An optimal greedily stable matching, with its natural score.
    Stable { matching: Matching, score: i64 },
    /// The search was exhaustive and no leaf is greedily stable.
    EmptyCore,
    /// The assignment constraints admit no solution. Cannot occur for a
    /// validated square market; present for completeness.
    Infeasible,
    /// The node budget ran out before the search finished.
    BoundExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveStats {
    pub nodes_explored: u64,
    pub cuts_added: u64,
    /// Wall time of the search. Not part of serialized reports, which must
    /// be byte-identical across runs.
    pub wall_time: Duration,
}

/// A cut derived from a certified-unstable leaf. Every cut is satisfied by
/// every greedily stable matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabilityCut {
    /// Excludes exactly the given full assignment.
    NoGood {
        assignment: Vec<EmployerId>,
    },
    ConditionalPair(ConditionalPairCut),
}

/// Linearized blocking-pair exclusion, conditioned on an affiliate
/// placement snapshot. The matching satisfies the cut when at least one
/// holds:
///
/// - `applicant` is matched to `employer`;
/// - `applicant` is matched to an employer it prefers to `employer`;
/// - `employer`'s hire, with affiliates at the snapshot, is not beaten by
///   any tuple hiring `applicant` (the hire is in `safe_hires`);
/// - some affiliate of `employer` is not at its snapshot position (the
///   condition is vacuous once affiliates move).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionalPairCut {
    pub applicant: ApplicantId,
    pub employer: EmployerId,
    /// Employers the applicant strictly prefers to `employer`.
    pub better_employers: Vec<EmployerId>,
    /// Hires of `employer` that no tuple hiring `applicant` beats, given
    /// the snapshot.
    pub safe_hires: Vec<ApplicantId>,
    /// (affiliate, employer it was matched to) at the generating leaf.
    pub snapshot: Vec<(ApplicantId, EmployerId)>,
}

impl ConditionalPairCut {
    fn from_blocking_pair(
        market: &Market,
        leaf: &Matching,
        applicant: ApplicantId,
        employer: EmployerId,
    ) -> ConditionalPairCut {
        let pair_rank = market.applicant_rank(applicant, employer);
        let better_employers: Vec<EmployerId> = market
            .applicant_order(applicant)
            .as_slice()
            .iter()
            .copied()
            .take_while(|&e| market.applicant_rank(applicant, e) < pair_rank)
            .collect();
        let snapshot: Vec<(ApplicantId, EmployerId)> = market
            .affiliates(employer)
            .iter()
            .map(|&p| (p, leaf.employer_of(p)))
            .collect();
        let placements: Vec<EmployerId> = snapshot.iter().map(|&(_, g)| g).collect();
        let challenger_best = market.best_hire_rank(employer, applicant);
        let safe_hires: Vec<ApplicantId> = market
            .applicants()
            .filter(|&x| {
                let tuple = crate::market::EmployerTuple::new(x, placements.clone());
                match market.tuple_rank(employer, &tuple) {
                    Some(rank) => challenger_best >= rank,
                    None => false, // hire inconsistent with the snapshot
                }
            })
            .collect();
        ConditionalPairCut {
            applicant,
            employer,
            better_employers,
            safe_hires,
            snapshot,
        }
    }

    /// Evaluates the cut on a complete matching.
    pub fn satisfied_by(&self, matching: &Matching) -> bool {
        let assigned = matching.employer_of(self.applicant);
        if assigned == self.employer || self.better_employers.contains(&assigned) {
            return true;
        }
        if self
            .safe_hires
            .contains(&matching.applicant_of(self.employer))
        {
            return true;
        }
        self.snapshot
            .iter()
            .any(|&(p, g)| matching.employer_of(p) != g)
    }

    /// True when no completion of the partial assignment can satisfy the
    /// cut, so the whole subtree is free of stable leaves.
    fn hopeless(&self, assignment: &[Option<EmployerId>], hire: &[Option<ApplicantId>]) -> bool {
        match assignment[self.applicant.0] {
            Some(e) => {
                if e == self.employer || self.better_employers.contains(&e) {
                    return false; // satisfied
                }
            }
            None => {
                if hire[self.employer.0].is_none()
                    || self.better_employers.iter().any(|e| hire[e.0].is_none())
                {
                    return false; // the applicant can still escape upward
                }
            }
        }
        match hire[self.employer.0] {
            Some(x) => {
                if self.safe_hires.contains(&x) {
                    return false;
                }
            }
            None => {
                if self.safe_hires.iter().any(|x| assignment[x.0].is_none()) {
                    return false; // a safe hire can still reach the employer
                }
            }
        }
        for &(p, g) in &self.snapshot {
            match assignment[p.0] {
                Some(at) if at != g => return false, // snapshot already broken
                None => return false,                // affiliate still unplaced
                _ => {}
            }
        }
        true
    }
}

/// Result of one [`solve`] call.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub status: SolveStatus,
    pub stats: SolveStats,
    /// Every cut the search emitted, for audit and validity checking.
    pub cuts: Vec<StabilityCut>,
}

struct Search<'m> {
    market: &'m Market,
    objective: Objective,
    node_budget: u64,
    conditional_enabled: bool,
    /// employer by applicant, for applicants below the current depth
    assignment: Vec<Option<EmployerId>>,
    /// applicant by employer, mirror of `assignment`
    hire: Vec<Option<ApplicantId>>,
    /// running sum of assigned applicants' ranks
    partial_applicant_cost: i64,
    /// running count of assigned applicants at their top choice
    partial_applicant_tops: i64,
    nodes: u64,
    cuts: Vec<StabilityCut>,
    conditional: Vec<ConditionalPairCut>,
    conditional_seen: HashSet<(usize, usize, Vec<usize>)>,
    incumbent: Option<(Matching, i64)>,
    stop: bool,
    budget_hit: bool,
}

impl<'m> Search<'m> {
    fn n(&self) -> usize {
        self.market.size()
    }

    /// Admissible lower bound on the final cost below the current node.
    /// Applicant-side terms are exact for assigned rows and optimistic for
    /// the rest; employer-side terms use the trivial rank >= 1 bound.
    fn bound(&self, depth: usize) -> i64 {
        let n = self.n() as i64;
        let applicant_optimistic = |search: &Search| -> i64 {
            let mut total = search.partial_applicant_cost;
            for a in depth..search.n() {
                let best = search
                    .market
                    .applicant_order(ApplicantId(a))
                    .as_slice()
                    .iter()
                    .filter(|e| search.hire[e.0].is_none())
                    .map(|&e| search.market.applicant_rank(ApplicantId(a), e) as i64)
                    .min()
                    .unwrap_or(0);
                total += best;
            }
            total
        };
        match self.objective {
            Objective::Feasibility => 0,
            Objective::MinApplicantRankSum => applicant_optimistic(self),
            Objective::MinEmployerRankSum => n,
            Objective::MaxTopChoices => {
                let unassigned = (self.n() - depth) as i64;
                -(self.partial_applicant_tops + unassigned + n)
            }
            Objective::MinEgalitarianSum => applicant_optimistic(self) + n,
        }
    }

    fn dfs(&mut self, depth: usize) {
        if self.stop {
            return;
        }
        self.nodes += 1;
        if self.nodes > self.node_budget {
            self.budget_hit = true;
            self.stop = true;
            return;
        }
        if self.conditional_enabled
            && self
                .conditional
                .iter()
                .any(|cut| cut.hopeless(&self.assignment, &self.hire))
        {
            return;
        }
        if let Some((_, incumbent_cost)) = &self.incumbent {
            if self.objective != Objective::Feasibility && self.bound(depth) >= *incumbent_cost {
                return;
            }
        }
        if depth == self.n() {
            self.leaf();
            return;
        }
        let a = ApplicantId(depth);
        let order: Vec<EmployerId> = self.market.applicant_order(a).as_slice().to_vec();
        for e in order {
            if self.hire[e.0].is_some() {
                continue;
            }
            let rank = self.market.applicant_rank(a, e) as i64;
            self.assignment[depth] = Some(e);
            self.hire[e.0] = Some(a);
            self.partial_applicant_cost += rank;
            if rank == 1 {
                self.partial_applicant_tops += 1;
            }
            self.dfs(depth + 1);
            self.assignment[depth] = None;
            self.hire[e.0] = None;
            self.partial_applicant_cost -= rank;
            if rank == 1 {
                self.partial_applicant_tops -= 1;
            }
            if self.stop {
                return;
            }
        }
    }

    fn leaf(&mut self) {
        let assignment: Vec<EmployerId> = self
            .assignment
            .iter()
            .map(|e| e.expect("leaf has a full assignment"))
            .collect();
        let matching = Matching::from_assignment_unchecked(assignment);
        match self.first_blocking_pair(&matching) {
            None => {
                let leaf_cost = cost(self.market, &matching, self.objective);
                let better = match &self.incumbent {
                    None => true,
                    Some((_, incumbent_cost)) => leaf_cost < *incumbent_cost,
                };
                if better {
                    self.incumbent = Some((matching, leaf_cost));
                }
                if self.objective == Objective::Feasibility {
                    self.stop = true;
                }
            }
            Some((a, e)) => {
                self.cuts.push(StabilityCut::NoGood {
                    assignment: matching.assignment().to_vec(),
                });
                if self.conditional_enabled {
                    let cut = ConditionalPairCut::from_blocking_pair(self.market, &matching, a, e);
                    let key = (
                        cut.applicant.0,
                        cut.employer.0,
                        cut.snapshot.iter().map(|&(_, g)| g.0).collect::<Vec<_>>(),
                    );
                    if self.conditional_seen.insert(key) {
                        self.conditional.push(cut.clone());
                        self.cuts.push(StabilityCut::ConditionalPair(cut));
                    }
                }
            }
        }
    }

    /// First greedy blocking pair in (applicant, employer) roster order.
    fn first_blocking_pair(&self, matching: &Matching) -> Option<(ApplicantId, EmployerId)> {
        for a in self.market.applicants() {
            let current = matching.employer_of(a);
            let current_rank = self.market.applicant_rank(a, current);
            for e in self.market.employers() {
                if e == current || self.market.applicant_rank(a, e) >= current_rank {
                    continue;
                }
                let outcome = employer_outcome(self.market, matching, e);
                if self.market.best_hire_rank(e, a) < outcome.rank {
                    return Some((a, e));
                }
            }
        }
        None
    }
}

/// Exact optimum of an objective over the greedily stable matchings, or a
/// certified empty core.
///
/// Branching is on applicants in roster order; children are visited in the
/// branching applicant's preference order. Identical inputs explore
/// identical node sequences, so results and statistics are reproducible.
pub fn solve(
    market: &Market,
    objective: Objective,
    config: &SolveConfig,
) -> Result<SolveResult, SolveError> {
    if config.node_budget == 0 {
        return Err(SolveError::InvalidConfig(
            "node budget must be positive".into(),
        ));
    }
    let started = Instant::now();
    let n = market.size();
    let mut search = Search {
        market,
        objective,
        node_budget: config.node_budget,
        conditional_enabled: config.cuts == CutStrategy::NoGoodConditional,
        assignment: vec![None; n],
        hire: vec![None; n],
        partial_applicant_cost: 0,
        partial_applicant_tops: 0,
        nodes: 0,
        cuts: Vec::new(),
        conditional: Vec::new(),
        conditional_seen: HashSet::new(),
        incumbent: None,
        stop: false,
        budget_hit: false,
    };
    search.dfs(0);
    let status = if search.budget_hit {
        SolveStatus::BoundExceeded
    } else {
        match search.incumbent {
            Some((matching, matching_cost)) => {
                let natural = if objective.maximizing() {
                    -matching_cost
                } else {
                    matching_cost
                };
                SolveStatus::Stable {
                    matching,
                    score: natural,
                }
            }
            None => SolveStatus::EmptyCore,
        }
    };
    Ok(SolveResult {
        status,
        stats: SolveStats {
            nodes_explored: search.nodes,
            cuts_added: search.cuts.len() as u64,
            wall_time: started.elapsed(),
        },
        cuts: search.cuts,
    })
}

/// Employers whose profiles are not consistent, so the market cannot be
/// reduced to a classical instance.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("employer profiles are not consistent: {}", employers.join(", "))]
pub struct InconsistentProfiles {
    pub employers: Vec<String>,
}

/// Applicant-proposing deferred acceptance on the reduced instance:
/// applicant orders against the base orders inferred from each employer's
/// profile. The output is greedily stable on the original market.
pub fn deferred_acceptance(market: &Market) -> Result<Matching, InconsistentProfiles> {
    let n = market.size();
    let mut base_rank: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut offenders = Vec::new();
    for e in market.employers() {
        match market.infer_consistency(e) {
            Some(base) => {
                let mut rank = vec![0usize; n];
                for (i, a) in base.iter().enumerate() {
                    rank[a.0] = i + 1;
                }
                base_rank.push(rank);
            }
            None => offenders.push(market.employer_label(e).to_string()),
        }
    }
    if !offenders.is_empty() {
        return Err(InconsistentProfiles {
            employers: offenders,
        });
    }

    let mut next_proposal = vec![0usize; n];
    let mut held: Vec<Option<ApplicantId>> = vec![None; n];
    let mut free: VecDeque<ApplicantId> = market.applicants().collect();
    while let Some(a) = free.pop_front() {
        let e = market.applicant_order(a).as_slice()[next_proposal[a.0]];
        next_proposal[a.0] += 1;
        match held[e.0] {
            None => held[e.0] = Some(a),
            Some(current) => {
                if base_rank[e.0][a.0] < base_rank[e.0][current.0] {
                    held[e.0] = Some(a);
                    free.push_back(current);
                } else {
                    free.push_back(a);
                }
            }
        }
    }
    let mut assignment = vec![EmployerId(0); n];
    for (e, a) in held.iter().enumerate() {
        let a = a.expect("deferred acceptance fills every seat in a square market");
        assignment[a.0] = EmployerId(e);
    }
    Ok(Matching::from_assignment_unchecked(assignment))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::{
        alpha_candidate_first, generate_market, AffiliationPattern, GeneratorSpec, ProfileStrategy,
        StrategyInput,
    };
    use crate::limits::OracleLimits;
    use crate::market::{EmployerTuple, Market};
    use crate::oracle::{enumerate_matchings, stable_set, StabilityNotion};
    use crate::stability::is_greedily_stable;

    fn a(i: usize) -> ApplicantId {
        ApplicantId(i)
    }

    fn e(i: usize) -> EmployerId {
        EmployerId(i)
    }

    fn figure1() -> Market {
        let t = |h: usize, p: usize| EmployerTuple::new(a(h), vec![e(p)]);
        Market::from_parts(
            (1..=3).map(|i| format!("a{i}")).collect(),
            (1..=3).map(|i| format!("e{i}")).collect(),
            vec![vec![a(0)], vec![a(1)], vec![a(2)]],
            vec![
                vec![e(2), e(1), e(0)],
                vec![e(0), e(2), e(1)],
                vec![e(2), e(0), e(1)],
            ],
            vec![
                vec![t(1, 2), t(0, 0), t(2, 1), t(1, 1), t(2, 2)],
                vec![t(0, 2), t(2, 2), t(0, 0), t(2, 0), t(1, 1)],
                vec![t(0, 0), t(1, 0), t(2, 2), t(1, 1), t(0, 1)],
            ],
        )
        .unwrap()
    }

    /// Figure-1 applicant orders with every profile built hire-first from
    /// the base a1 > a2 > a3.
    fn consistent_market() -> Market {
        let profiles: Vec<Vec<EmployerTuple>> = (0..3)
            .map(|owner| {
                let input = StrategyInput {
                    owner: e(owner),
                    affiliates: vec![a(owner)],
                    applicant_base: vec![a(0), a(1), a(2)],
                    employer_base: vec![e(0), e(1), e(2)],
                };
                alpha_candidate_first(&input).tuples().to_vec()
            })
            .collect();
        Market::from_parts(
            (1..=3).map(|i| format!("a{i}")).collect(),
            (1..=3).map(|i| format!("e{i}")).collect(),
            vec![vec![a(0)], vec![a(1)], vec![a(2)]],
            vec![
                vec![e(2), e(1), e(0)],
                vec![e(0), e(2), e(1)],
                vec![e(2), e(0), e(1)],
            ],
            profiles,
        )
        .unwrap()
    }

    #[test]
    fn deferred_acceptance_on_a_consistent_market() {
        let market = consistent_market();
        let matching = deferred_acceptance(&market).unwrap();
        // a1 -> e3, a2 -> e1, a3 -> e2
        assert_eq!(matching.assignment(), &[e(2), e(0), e(1)]);
        assert!(is_greedily_stable(&market, &matching));
        let report =
            stable_set(&market, StabilityNotion::Greedy, &OracleLimits::default()).unwrap();
        assert!(report.stable_matchings().contains(&&matching));
    }

    #[test]
    fn deferred_acceptance_rejects_inconsistent_profiles() {
        let market = figure1();
        let err = deferred_acceptance(&market).unwrap_err();
        assert_eq!(err.employers, vec!["e1", "e2", "e3"]);
    }

    #[test]
    fn deferred_acceptance_trivial_market() {
        let market = Market::from_parts(
            vec!["a1".into()],
            vec!["e1".into()],
            vec![vec![a(0)]],
            vec![vec![e(0)]],
            vec![vec![EmployerTuple::new(a(0), vec![e(0)])]],
        )
        .unwrap();
        assert_eq!(deferred_acceptance(&market).unwrap(), Matching::identity(1));
    }

    #[test]
    fn deferred_acceptance_is_stable_on_seeded_consistent_markets() {
        for seed in 0..40u64 {
            let spec = GeneratorSpec {
                seed,
                n: 2 + (seed as usize % 5),
                affiliation: AffiliationPattern::Bijection,
                strategy: ProfileStrategy::CandidateFirst,
            };
            let market = generate_market(&spec).unwrap();
            let matching = deferred_acceptance(&market).unwrap();
            assert!(is_greedily_stable(&market, &matching), "seed {seed}");
        }
    }

    #[test]
    fn score_examples() {
        let market = figure1();
        let identity = Matching::identity(3);
        assert_eq!(score(&market, &identity, Objective::MinApplicantRankSum), 7);
        assert_eq!(score(&market, &identity, Objective::Feasibility), 0);
        assert_eq!(score(&market, &identity, Objective::MaxTopChoices), 1);
        assert_eq!(
            score(&market, &identity, Objective::MinEmployerRankSum),
            2 + 5 + 3
        );
        assert_eq!(
            score(&market, &identity, Objective::MinEgalitarianSum),
            7 + 10
        );
    }

    #[test]
    fn empty_core_is_certified() {
        let market = figure1();
        for cuts in [CutStrategy::NoGood, CutStrategy::NoGoodConditional] {
            let config = SolveConfig {
                cuts,
                ..SolveConfig::default()
            };
            let result = solve(&market, Objective::Feasibility, &config).unwrap();
            assert_eq!(result.status, SolveStatus::EmptyCore);
            assert!(result.stats.cuts_added > 0);
        }
    }

    #[test]
    fn trivial_market_is_solved() {
        let market = Market::from_parts(
            vec!["a1".into()],
            vec!["e1".into()],
            vec![vec![a(0)]],
            vec![vec![e(0)]],
            vec![vec![EmployerTuple::new(a(0), vec![e(0)])]],
        )
        .unwrap();
        let result = solve(&market, Objective::Feasibility, &SolveConfig::default()).unwrap();
        match result.status {
            SolveStatus::Stable { matching, score } => {
                assert_eq!(matching, Matching::identity(1));
                assert_eq!(score, 0);
            }
            other => panic!("expected a stable result, got {other:?}"),
        }
    }

    #[test]
    fn optimum_matches_the_oracle() {
        let limits = OracleLimits::default();
        for seed in 0..30u64 {
            let spec = GeneratorSpec {
                seed,
                n: 2 + (seed as usize % 3),
                affiliation: AffiliationPattern::Bijection,
                strategy: ProfileStrategy::UniformRandom,
            };
            let market = generate_market(&spec).unwrap();
            let report = stable_set(&market, StabilityNotion::Greedy, &limits).unwrap();
            for objective in Objective::ALL {
                for cuts in [CutStrategy::NoGood, CutStrategy::NoGoodConditional] {
                    let config = SolveConfig {
                        cuts,
                        ..SolveConfig::default()
                    };
                    let result = solve(&market, objective, &config).unwrap();
                    let oracle_best = report
                        .stable_matchings()
                        .iter()
                        .map(|m| score(&market, m, objective))
                        .fold(None, |acc: Option<i64>, s| {
                            Some(match acc {
                                None => s,
                                Some(best) if objective.maximizing() => best.max(s),
                                Some(best) => best.min(s),
                            })
                        });
                    match (result.status, oracle_best) {
                        (SolveStatus::EmptyCore, None) => {}
                        (
                            SolveStatus::Stable {
                                matching,
                                score: got,
                            },
                            Some(best),
                        ) => {
                            assert_eq!(got, best, "seed {seed} objective {objective}");
                            assert!(is_greedily_stable(&market, &matching));
                        }
                        (status, best) => {
                            panic!("seed {seed} objective {objective}: {status:?} vs {best:?}")
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conditional_cuts_are_valid() {
        let limits = OracleLimits::default();
        for seed in 0..30u64 {
            let spec = GeneratorSpec {
                seed,
                n: 2 + (seed as usize % 3),
                affiliation: AffiliationPattern::Bijection,
                strategy: ProfileStrategy::UniformRandom,
            };
            let market = generate_market(&spec).unwrap();
            let config = SolveConfig {
                cuts: CutStrategy::NoGoodConditional,
                ..SolveConfig::default()
            };
            let result = solve(&market, Objective::MinApplicantRankSum, &config).unwrap();
            let matchings = enumerate_matchings(market.size(), &limits).unwrap();
            for matching in &matchings {
                if !is_greedily_stable(&market, matching) {
                    continue;
                }
                for cut in &result.cuts {
                    match cut {
                        StabilityCut::ConditionalPair(c) => {
                            assert!(
                                c.satisfied_by(matching),
                                "seed {seed}: {c:?} cuts {matching:?}"
                            );
                        }
                        StabilityCut::NoGood { assignment } => {
                            assert_ne!(assignment.as_slice(), matching.assignment());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn search_is_deterministic() {
        let market = figure1();
        let config = SolveConfig {
            cuts: CutStrategy::NoGoodConditional,
            ..SolveConfig::default()
        };
        let first = solve(&market, Objective::MinApplicantRankSum, &config).unwrap();
        let second = solve(&market, Objective::MinApplicantRankSum, &config).unwrap();
        assert_eq!(first.status, second.status);
        assert_eq!(first.stats.nodes_explored, second.stats.nodes_explored);
        assert_eq!(first.stats.cuts_added, second.stats.cuts_added);
        assert_eq!(first.cuts, second.cuts);
    }

    #[test]
    fn node_budget_is_enforced() {
        let market = figure1();
        let config = SolveConfig {
            node_budget: 3,
            cuts: CutStrategy::NoGood,
        };
        let result = solve(&market, Objective::Feasibility, &config).unwrap();
        assert_eq!(result.status, SolveStatus::BoundExceeded);
        assert_eq!(result.stats.nodes_explored, 4); // budget + the node that tripped it

        let zero = SolveConfig {
            node_budget: 0,
            cuts: CutStrategy::NoGood,
        };
        assert!(matches!(
            solve(&market, Objective::Feasibility, &zero),
            Err(SolveError::InvalidConfig(_))
        ));
    }
}

//! Affiliate matching markets: two-sided one-to-one markets in which each
//! employer ranks *tuples* combining its own hire with the placements of its
//! affiliated applicants, instead of ranking applicants alone.
//!
//! The crate provides:
//!
//! - [`market`]: the validated market data model — rosters, affiliations,
//!   applicant orders, employer tuple-profiles — plus tuple-validity rules,
//!   profile-consistency analysis, and the associated counting formulas;
//! - [`stability`]: matchings, employer outcomes, and both stability notions
//!   (greedy blocking pairs and strict blocking coalitions) with
//!   certificate-producing detectors;
//! - [`oracle`]: the exhaustive ground-truth engine that enumerates all
//!   perfect matchings, classifies them under either notion, and detects
//!   empty cores;
//! - [`solver`]: clearing engines — applicant-proposing deferred acceptance
//!   for consistent markets and an optimizing branch-and-bound search with
//!   stability cuts;
//! - [`generator`]: deterministic construction of markets from combination
//!   strategies and seeded random instances;
//! - [`io`]: the JSON instance file format with canonical, byte-stable
//!   serialization.

pub mod generator;
pub mod io;
pub mod limits;
pub mod market;
pub mod oracle;
pub mod solver;
pub mod stability;

pub use generator::{
    alpha_affiliate_first, alpha_candidate_first, alpha_weighted, generate_market,
    AffiliationPattern, GeneratorSpec, InvalidSpec, ProfileStrategy, SplitMix64, StrategyInput,
};
pub use io::{parse_market, serialize_market, ParseError};
pub use limits::{InstanceTooLarge, OracleLimits};
pub use market::{
    count_consistent_profiles, count_valid_tuples, enumerate_valid_tuples, infer_consistency,
    is_consistent_with, validate_market, ApplicantId, ApplicantOrder, EmployerId, EmployerProfile,
    EmployerTuple, Market, RawMarket, ValidationError,
};
pub use oracle::{
    definition_equivalence_check, enumerate_matchings, stable_set, stable_set_with_threads,
    Classification, InstabilityCertificate, StabilityNotion, StableSetReport,
};
pub use solver::{
    deferred_acceptance, score, solve, ConditionalPairCut, CutStrategy, InconsistentProfiles,
    Objective, SolveConfig, SolveError, SolveResult, SolveStats, SolveStatus, StabilityCut,
};
pub use stability::{
    check_coalition, coalition_violations, employer_outcome, find_blocking_coalition,
    find_greedy_blocking_pairs, is_greedily_stable, is_strictly_stable, outcome_tuple,
    CoalitionViolation, GreedyBlockingPair, Matching, Outcome, StrictBlockingCoalition,
};

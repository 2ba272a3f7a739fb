//! Shared instance builders for the benchmark suite.

use affmatch_core::{generate_market, AffiliationPattern, GeneratorSpec, Market, ProfileStrategy};

/// A seeded market with uniformly random tuple profiles.
pub fn random_market(seed: u64, n: usize) -> Market {
    generate_market(&GeneratorSpec {
        seed,
        n,
        affiliation: AffiliationPattern::Bijection,
        strategy: ProfileStrategy::UniformRandom,
    })
    .expect("benchmark spec is valid")
}

/// A seeded market whose profiles are all consistent, so it reduces to a
/// classical instance.
pub fn consistent_market(seed: u64, n: usize) -> Market {
    generate_market(&GeneratorSpec {
        seed,
        n,
        affiliation: AffiliationPattern::Bijection,
        strategy: ProfileStrategy::CandidateFirst,
    })
    .expect("benchmark spec is valid")
}

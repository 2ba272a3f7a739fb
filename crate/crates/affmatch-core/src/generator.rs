//! Deterministic market construction: combination strategies that turn an
//! employer's two base orders into a tuple profile, and seeded random
//! instances for experiments.
//!
//! Everything here is a pure function of its inputs. Random instances come
//! from a self-contained splitmix-style PRNG so that one seed produces the
//! same market bit for bit on every platform.

use thiserror::Error;

use crate::market::{
    enumerate_valid_tuples, ApplicantId, EmployerId, EmployerProfile, EmployerTuple, Market,
};

/// The splitmix64 generator: state advances by the 64-bit golden-gamma
/// constant and each output is a finalizing hash of the state.
///
/// ```text
/// state += 0x9E3779B97F4A7C15
/// z = state
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB
/// output = z ^ (z >> 31)
/// ```
///
/// All arithmetic is modulo 2^64. The stream for a given seed is fixed; the
/// serialized instance documents produced from it are reproducible across
/// platforms and releases.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform draw in `0..bound` by rejection sampling: draws are discarded
    /// while they fall in the final partial copy of the range, so every
    /// residue is equally likely.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let threshold = u64::MAX - u64::MAX % bound;
        loop {
            let draw = self.next_u64();
            if draw < threshold {
                return draw % bound;
            }
        }
    }

    /// Bernoulli draw: true with probability `p`, via one `next_u64`
    /// compared against `floor(p * 2^64)`.
    pub fn next_bool(&mut self, p: f64) -> bool {
        if p >= 1.0 {
            self.next_u64();
            return true;
        }
        if p <= 0.0 {
            self.next_u64();
            return false;
        }
        let threshold = (p * 2f64.powi(64)) as u128;
        (self.next_u64() as u128) < threshold
    }

    /// Fisher-Yates shuffle: for i from len-1 down to 1, swap position i
    /// with a uniform position in 0..=i.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.next_below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// An employer's two base orders, the inputs every combination strategy
/// consumes: how it ranks applicants as hires and how it ranks employers as
/// placements for its affiliates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyInput {
    pub owner: EmployerId,
    /// The owner's ordered affiliates.
    pub affiliates: Vec<ApplicantId>,
    /// Strict order over all applicants, best first.
    pub applicant_base: Vec<ApplicantId>,
    /// Strict order over all employers, best first.
    pub employer_base: Vec<EmployerId>,
}

impl StrategyInput {
    fn applicant_rank(&self, a: ApplicantId) -> usize {
        self.applicant_base
            .iter()
            .position(|&x| x == a)
            .expect("applicant base covers every applicant")
            + 1
    }

    fn employer_rank(&self, e: EmployerId) -> usize {
        self.employer_base
            .iter()
            .position(|&x| x == e)
            .expect("employer base covers every employer")
            + 1
    }
}

/// Orders the owner's valid tuples by the blended score
/// `lambda * rank(hire) + (1 - lambda) * mean(rank(placement_k))`,
/// ascending, with ties broken by: own-affiliate hires first, then the
/// hire's rank, then placement ranks lexicographically.
///
/// `lambda = 1` weighs only the hire and reproduces the hire-first,
/// consistent profile; `lambda = 0` weighs only the placements and
/// reproduces the placement-first profile.
pub fn alpha_weighted(input: &StrategyInput, lambda: f64) -> EmployerProfile {
    assert!(
        (0.0..=1.0).contains(&lambda),
        "lambda must lie in [0, 1], got {lambda}"
    );
    let n = input.applicant_base.len();
    let m = input.employer_base.len();
    let universe = enumerate_valid_tuples(n, m, input.owner, &input.affiliates);
    let mut keyed: Vec<(f64, bool, usize, Vec<usize>, EmployerTuple)> = universe
        .into_iter()
        .map(|tuple| {
            let hire_rank = input.applicant_rank(tuple.hire);
            let placement_ranks: Vec<usize> = tuple
                .placements
                .iter()
                .map(|&p| input.employer_rank(p))
                .collect();
            let mean_placement = if placement_ranks.is_empty() {
                0.0
            } else {
                placement_ranks.iter().sum::<usize>() as f64 / placement_ranks.len() as f64
            };
            let score = lambda * hire_rank as f64 + (1.0 - lambda) * mean_placement;
            let own_affiliate = input.affiliates.contains(&tuple.hire);
            (score, own_affiliate, hire_rank, placement_ranks, tuple)
        })
        .collect();
    keyed.sort_by(|x, y| {
        x.0.total_cmp(&y.0)
            .then_with(|| y.1.cmp(&x.1)) // own-affiliate hires first
            .then_with(|| x.2.cmp(&y.2))
            .then_with(|| x.3.cmp(&y.3))
    });
    EmployerProfile::new(keyed.into_iter().map(|entry| entry.4).collect())
}

/// The hire-first strategy: order by the hire's base rank alone. Equals
/// `alpha_weighted(input, 1.0)`; its output is always consistent with the
/// applicant base.
pub fn alpha_candidate_first(input: &StrategyInput) -> EmployerProfile {
    alpha_weighted(input, 1.0)
}

/// The placement-first strategy: order by the affiliates' placements alone.
/// Equals `alpha_weighted(input, 0.0)`; generally inconsistent once the
/// affiliate is not the top-ranked applicant.
pub fn alpha_affiliate_first(input: &StrategyInput) -> EmployerProfile {
    alpha_weighted(input, 0.0)
}

/// How affiliations are laid out in a generated market.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AffiliationPattern {
    /// Applicant i is the sole affiliate of employer i.
    Bijection,
    /// Each applicant independently joins a uniformly random employer's
    /// affiliate list with probability `density`.
    RandomPartial { density: f64 },
}

/// How employer profiles are produced in a generated market.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ProfileStrategy {
    CandidateFirst,
    AffiliateFirst,
    Weighted {
        lambda: f64,
    },
    /// A uniformly random strict order over the valid-tuple universe.
    UniformRandom,
}

/// A reproducible market recipe. Identical specs yield bit-identical
/// markets.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorSpec {
    pub seed: u64,
    pub n: usize,
    pub affiliation: AffiliationPattern,
    pub strategy: ProfileStrategy,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum InvalidSpec {
    #[error("market size must be at least 1")]
    EmptyMarket,
    #[error("density must lie in [0, 1], got {0}")]
    BadDensity(f64),
    #[error("lambda must lie in [0, 1], got {0}")]
    BadLambda(f64),
}

/// Builds the market described by the spec. Labels are `a1..an` and
/// `e1..en`. Draws are taken from one splitmix64 stream seeded with
/// `spec.seed`, in this fixed order:
///
/// 1. one employer-roster shuffle per applicant, in roster order (the
///    applicant orders);
/// 2. for `random_partial` affiliations, per applicant in roster order: one
///    Bernoulli draw, then (if it joins) one employer draw;
/// 3. per employer in roster order: for base-order strategies, one
///    applicant-roster shuffle then one employer-roster shuffle; for
///    `uniform_random`, one shuffle of the canonical valid-tuple list.
pub fn generate_market(spec: &GeneratorSpec) -> Result<Market, InvalidSpec> {
    if spec.n == 0 {
        return Err(InvalidSpec::EmptyMarket);
    }
    match spec.affiliation {
        AffiliationPattern::RandomPartial { density }
            if !(0.0..=1.0).contains(&density) || density.is_nan() =>
        {
            return Err(InvalidSpec::BadDensity(density));
        }
        _ => {}
    }
    if let ProfileStrategy::Weighted { lambda } = spec.strategy {
        if !(0.0..=1.0).contains(&lambda) || lambda.is_nan() {
            return Err(InvalidSpec::BadLambda(lambda));
        }
    }

    let n = spec.n;
    let mut rng = SplitMix64::new(spec.seed);
    let applicant_labels: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let employer_labels: Vec<String> = (1..=n).map(|i| format!("e{i}")).collect();

    let mut applicant_orders = Vec::with_capacity(n);
    for _ in 0..n {
        let mut order: Vec<EmployerId> = (0..n).map(EmployerId).collect();
        rng.shuffle(&mut order);
        applicant_orders.push(order);
    }

    let mut affiliations: Vec<Vec<ApplicantId>> = vec![Vec::new(); n];
    match spec.affiliation {
        AffiliationPattern::Bijection => {
            for (i, list) in affiliations.iter_mut().enumerate() {
                list.push(ApplicantId(i));
            }
        }
        AffiliationPattern::RandomPartial { density } => {
            for a in 0..n {
                if rng.next_bool(density) {
                    let e = rng.next_below(n as u64) as usize;
                    affiliations[e].push(ApplicantId(a));
                }
            }
        }
    }

    let mut profiles = Vec::with_capacity(n);
    for e in (0..n).map(EmployerId) {
        let profile = match spec.strategy {
            ProfileStrategy::UniformRandom => {
                let mut tuples = enumerate_valid_tuples(n, n, e, &affiliations[e.0]);
                rng.shuffle(&mut tuples);
                EmployerProfile::new(tuples)
            }
            base_order_strategy => {
                let mut applicant_base: Vec<ApplicantId> = (0..n).map(ApplicantId).collect();
                rng.shuffle(&mut applicant_base);
                let mut employer_base: Vec<EmployerId> = (0..n).map(EmployerId).collect();
                rng.shuffle(&mut employer_base);
                let input = StrategyInput {
                    owner: e,
                    affiliates: affiliations[e.0].clone(),
                    applicant_base,
                    employer_base,
                };
                match base_order_strategy {
                    ProfileStrategy::CandidateFirst => alpha_candidate_first(&input),
                    ProfileStrategy::AffiliateFirst => alpha_affiliate_first(&input),
                    ProfileStrategy::Weighted { lambda } => alpha_weighted(&input, lambda),
                    ProfileStrategy::UniformRandom => unreachable!(),
                }
            }
        };
        profiles.push(profile.tuples().to_vec());
    }

    let market = Market::from_parts(
        applicant_labels,
        employer_labels,
        affiliations,
        applicant_orders,
        profiles,
    )
    .expect("generated markets satisfy every invariant");
    Ok(market)
}

//! Matchings, employer outcomes, and the two stability notions.
//!
//! A *greedy blocking pair* `(a, e)` exists when `a` prefers `e` to its
//! current employer and `e` has some tuple hiring `a` ranked above its
//! current outcome, regardless of whether the affiliate placements in that
//! tuple would actually come about. A *strict blocking coalition* is a pair
//! of agent sets that re-match entirely among themselves under a witness
//! matching, contain every affiliate of every member employer, and strictly
//! improve every member. Greedy stability implies strict stability: any
//! coalition member employer together with its new hire forms a greedy
//! blocking pair.

use crate::limits::{InstanceTooLarge, OracleLimits};
use crate::market::{ApplicantId, EmployerId, EmployerTuple, Market};
use crate::oracle::enumerate_matchings;

/// A perfect matching: employer index by applicant index. Derived ordering
/// is lexicographic on that array, which is the canonical enumeration
/// order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    assignment: Vec<EmployerId>,
}

impl Matching {
    /// Builds a matching from the employer-by-applicant assignment array.
    /// Returns `None` unless the array is a bijection.
    pub fn new(assignment: Vec<EmployerId>) -> Option<Matching> {
        let n = assignment.len();
        let mut seen = vec![false; n];
        for e in &assignment {
            if e.0 >= n || seen[e.0] {
                return None;
            }
            seen[e.0] = true;
        }
        Some(Matching { assignment })
    }

    pub fn identity(n: usize) -> Matching {
        Matching {
            assignment: (0..n).map(EmployerId).collect(),
        }
    }

    pub(crate) fn from_assignment_unchecked(assignment: Vec<EmployerId>) -> Matching {
        debug_assert!(Matching::new(assignment.clone()).is_some());
        Matching { assignment }
    }

    pub fn size(&self) -> usize {
        self.assignment.len()
    }

    pub fn employer_of(&self, a: ApplicantId) -> EmployerId {
        self.assignment[a.0]
    }

    pub fn applicant_of(&self, e: EmployerId) -> ApplicantId {
        ApplicantId(
            self.assignment
                .iter()
                .position(|&x| x == e)
                .expect("perfect matching covers every employer"),
        )
    }

    pub fn assignment(&self) -> &[EmployerId] {
        &self.assignment
    }

    pub fn pairs(&self) -> impl Iterator<Item = (ApplicantId, EmployerId)> + '_ {
        self.assignment
            .iter()
            .enumerate()
            .map(|(a, &e)| (ApplicantId(a), e))
    }

    /// 0-based position of this matching in the canonical (lexicographic)
    /// enumeration of all perfect matchings of its size.
    pub fn lex_rank(&self) -> usize {
        let n = self.assignment.len();
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut rank = 0usize;
        let mut used = vec![false; n];
        for (i, e) in self.assignment.iter().enumerate() {
            let smaller = (0..e.0).filter(|&x| !used[x]).count();
            rank += smaller * fact[n - 1 - i];
            used[e.0] = true;
        }
        rank
    }
}

/// An employer's realized tuple under a matching, with its profile rank.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub employer: EmployerId,
    pub tuple: EmployerTuple,
    /// 1-based rank in the employer's profile, 1 = best.
    pub rank: usize,
}

/// The tuple an employer realizes under a matching: its hire plus where
/// each of its affiliates ended up.
pub fn outcome_tuple(market: &Market, matching: &Matching, e: EmployerId) -> EmployerTuple {
    let hire = matching.applicant_of(e);
    let placements = market
        .affiliates(e)
        .iter()
        .map(|&p| matching.employer_of(p))
        .collect();
    EmployerTuple::new(hire, placements)
}

pub fn employer_outcome(market: &Market, matching: &Matching, e: EmployerId) -> Outcome {
    let tuple = outcome_tuple(market, matching, e);
    let rank = market
        .tuple_rank(e, &tuple)
        .expect("realized tuples of a perfect matching are always valid");
    Outcome {
        employer: e,
        tuple,
        rank,
    }
}

/// Certificate of greedy instability: `applicant` prefers `employer` to its
/// current match and `witness_tuple` (the best tuple of `employer` hiring
/// `applicant`) beats the employer's current outcome. `witness_matching`
/// realizes the tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyBlockingPair {
    pub applicant: ApplicantId,
    pub employer: EmployerId,
    pub witness_tuple: EmployerTuple,
    pub witness_matching: Matching,
}

/// All greedy blocking pairs of a matching, in (applicant roster, employer
/// roster) order, each with a witness matching.
pub fn find_greedy_blocking_pairs(market: &Market, matching: &Matching) -> Vec<GreedyBlockingPair> {
    let mut pairs = Vec::new();
    for a in market.applicants() {
        let current = matching.employer_of(a);
        let current_rank = market.applicant_rank(a, current);
        for e in market.employers() {
            if e == current || market.applicant_rank(a, e) >= current_rank {
                continue;
            }
            let outcome = employer_outcome(market, matching, e);
            if market.best_hire_rank(e, a) < outcome.rank {
                let witness_tuple = market.best_hire_tuple(e, a).clone();
                let witness_matching = extend_to_matching(market, a, e, &witness_tuple);
                pairs.push(GreedyBlockingPair {
                    applicant: a,
                    employer: e,
                    witness_tuple,
                    witness_matching,
                });
            }
        }
    }
    pairs
}

/// True iff the matching has no greedy blocking pair. Early-exit variant of
/// [`find_greedy_blocking_pairs`].
pub fn is_greedily_stable(market: &Market, matching: &Matching) -> bool {
    for a in market.applicants() {
        let current = matching.employer_of(a);
        let current_rank = market.applicant_rank(a, current);
        for e in market.employers() {
            if e == current || market.applicant_rank(a, e) >= current_rank {
                continue;
            }
            let outcome = employer_outcome(market, matching, e);
            if market.best_hire_rank(e, a) < outcome.rank {
                return false;
            }
        }
    }
    true
}

/// Extends the partial assignment {a -> e} plus the witness tuple's
/// affiliate placements to a full matching, greedily by roster order. The
/// partial assignment is always consistent and always extendable in a
/// square complete market.
fn extend_to_matching(
    market: &Market,
    a: ApplicantId,
    e: EmployerId,
    tuple: &EmployerTuple,
) -> Matching {
    let n = market.size();
    let mut assigned: Vec<Option<EmployerId>> = vec![None; n];
    let mut taken = vec![false; n];
    assigned[a.0] = Some(e);
    taken[e.0] = true;
    for (k, &p) in market.affiliates(e).iter().enumerate() {
        let g = tuple.placements[k];
        if p == a {
            debug_assert_eq!(g, e);
            continue;
        }
        assigned[p.0] = Some(g);
        taken[g.0] = true;
    }
    let mut assignment = Vec::with_capacity(n);
    for slot in &assigned {
        match *slot {
            Some(g) => assignment.push(g),
            None => {
                let g = (0..n)
                    .find(|&x| !taken[x])
                    .expect("square market leaves a free employer for every free applicant");
                taken[g] = true;
                assignment.push(EmployerId(g));
            }
        }
    }
    Matching::from_assignment_unchecked(assignment)
}

/// Certificate of strict instability: nonempty agent sets that re-match
/// among themselves under `witness` and all strictly improve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictBlockingCoalition {
    pub applicants: Vec<ApplicantId>,
    pub employers: Vec<EmployerId>,
    pub witness: Matching,
}

/// One reason a proposed coalition fails to block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalitionViolation {
    /// One of the two sets is empty.
    EmptySide,
    /// An employer's affiliate is outside the applicant set.
    AffiliateOutside {
        employer: EmployerId,
        affiliate: ApplicantId,
    },
    /// An employer's witness hire is outside the applicant set.
    HireOutside(EmployerId),
    /// An employer does not strictly improve under the witness.
    EmployerNotImproving(EmployerId),
    /// An applicant's witness employer is outside the employer set.
    MatchOutside(ApplicantId),
    /// An applicant does not strictly improve under the witness.
    ApplicantNotImproving(ApplicantId),
}

/// Checks a proposed coalition against a witness matching and reports every
/// violated condition, employers first, in roster order.
pub fn coalition_violations(
    market: &Market,
    matching: &Matching,
    witness: &Matching,
    applicants: &[ApplicantId],
    employers: &[EmployerId],
) -> Vec<CoalitionViolation> {
    let mut violations = Vec::new();
    if applicants.is_empty() || employers.is_empty() {
        violations.push(CoalitionViolation::EmptySide);
    }
    let in_a = |a: ApplicantId| applicants.contains(&a);
    let in_e = |e: EmployerId| employers.contains(&e);
    for &e in employers {
        for &p in market.affiliates(e) {
            if !in_a(p) {
                violations.push(CoalitionViolation::AffiliateOutside {
                    employer: e,
                    affiliate: p,
                });
            }
        }
        if !in_a(witness.applicant_of(e)) {
            violations.push(CoalitionViolation::HireOutside(e));
        }
        let before = employer_outcome(market, matching, e).rank;
        let after = employer_outcome(market, witness, e).rank;
        if after >= before {
            violations.push(CoalitionViolation::EmployerNotImproving(e));
        }
    }
    for &a in applicants {
        if !in_e(witness.employer_of(a)) {
            violations.push(CoalitionViolation::MatchOutside(a));
        }
        let before = market.applicant_rank(a, matching.employer_of(a));
        let after = market.applicant_rank(a, witness.employer_of(a));
        if after >= before {
            violations.push(CoalitionViolation::ApplicantNotImproving(a));
        }
    }
    violations
}

/// True iff `(applicants, employers)` is a strict blocking coalition of
/// `matching` with respect to `witness`.
pub fn check_coalition(
    market: &Market,
    matching: &Matching,
    witness: &Matching,
    applicants: &[ApplicantId],
    employers: &[EmployerId],
) -> bool {
    coalition_violations(market, matching, witness, applicants, employers).is_empty()
}

/// Finds the maximal strict blocking coalition of `matching` with respect
/// to the witness `candidate`, if one exists.
///
/// Starts from the strict improver sets on both sides and iterates to a
/// fixpoint, dropping employers whose hire or affiliates fall outside the
/// applicant set and applicants whose witness employer fell out of the
/// employer set. Any coalition is contained in the improver sets and
/// survives every drop, so the fixpoint is the unique maximal coalition; a
/// coalition exists for this witness iff the fixpoint is nonempty.
pub fn find_blocking_coalition(
    market: &Market,
    matching: &Matching,
    candidate: &Matching,
) -> Option<StrictBlockingCoalition> {
    debug_assert_ne!(
        matching, candidate,
        "witness must differ from the current matching"
    );
    let n = market.size();
    let mut in_a = vec![false; n];
    let mut in_e = vec![false; n];
    for a in market.applicants() {
        let before = market.applicant_rank(a, matching.employer_of(a));
        let after = market.applicant_rank(a, candidate.employer_of(a));
        in_a[a.0] = after < before;
    }
    for e in market.employers() {
        let before = employer_outcome(market, matching, e).rank;
        let after = employer_outcome(market, candidate, e).rank;
        in_e[e.0] = after < before;
    }
    loop {
        let mut changed = false;
        for e in market.employers() {
            if !in_e[e.0] {
                continue;
            }
            let hire_in = in_a[candidate.applicant_of(e).0];
            let affiliates_in = market.affiliates(e).iter().all(|p| in_a[p.0]);
            if !hire_in || !affiliates_in {
                in_e[e.0] = false;
                changed = true;
            }
        }
        for a in market.applicants() {
            if in_a[a.0] && !in_e[candidate.employer_of(a).0] {
                in_a[a.0] = false;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let applicants: Vec<ApplicantId> = (0..n).filter(|&i| in_a[i]).map(ApplicantId).collect();
    let employers: Vec<EmployerId> = (0..n).filter(|&i| in_e[i]).map(EmployerId).collect();
    if applicants.is_empty() || employers.is_empty() {
        return None;
    }
    Some(StrictBlockingCoalition {
        applicants,
        employers,
        witness: candidate.clone(),
    })
}

/// True iff no witness matching admits a strict blocking coalition. When
/// false, also returns the certificate for the lowest witness in canonical
/// order.
///
/// Exhaustive over all n! candidate witnesses; guarded by
/// `limits.enumerate_max`.
pub fn is_strictly_stable(
    market: &Market,
    matching: &Matching,
    limits: &OracleLimits,
) -> Result<(bool, Option<StrictBlockingCoalition>), InstanceTooLarge> {
    let candidates = enumerate_matchings(market.size(), limits)?;
    for candidate in &candidates {
        if candidate == matching {
            continue;
        }
        if let Some(coalition) = find_blocking_coalition(market, matching, candidate) {
            return Ok((false, Some(coalition)));
        }
    }
    Ok((true, None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::market::{ApplicantId, EmployerId, EmployerTuple, Market};

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

    /// The six matchings of a 3-market in canonical order.
    fn mu(index1: usize) -> Matching {
        let perms = [
            [0, 1, 2],
            [0, 2, 1],
            [1, 0, 2],
            [1, 2, 0],
            [2, 0, 1],
            [2, 1, 0],
        ];
        Matching::new(perms[index1 - 1].iter().map(|&x| EmployerId(x)).collect()).unwrap()
    }

    #[test]
    fn outcomes_read_off_the_profiles() {
        let market = figure1();
        let o = employer_outcome(&market, &mu(1), e(0));
        assert_eq!(o.tuple, EmployerTuple::new(a(0), vec![e(0)]));
        assert_eq!(o.rank, 2);

        let o = employer_outcome(&market, &mu(5), e(0));
        assert_eq!(o.tuple, EmployerTuple::new(a(1), vec![e(2)]));
        assert_eq!(o.rank, 1);

        let o = employer_outcome(&market, &mu(1), e(1));
        assert_eq!(o.tuple, EmployerTuple::new(a(1), vec![e(1)]));
        assert_eq!(o.rank, 5);
    }

    /// Independent re-derivation of the blocking-pair scan, written against
    /// the raw definition rather than the precomputed hire index.
    fn brute_force_pairs(market: &Market, matching: &Matching) -> Vec<(usize, usize)> {
        let mut found = Vec::new();
        for ai in 0..market.size() {
            for ei in 0..market.size() {
                if matching.employer_of(a(ai)) == e(ei) {
                    continue;
                }
                let prefers = market.applicant_rank(a(ai), e(ei))
                    < market.applicant_rank(a(ai), matching.employer_of(a(ai)));
                let current = employer_outcome(market, matching, e(ei)).rank;
                let improves = market
                    .profile(e(ei))
                    .tuples()
                    .iter()
                    .enumerate()
                    .any(|(idx, t)| t.hire == a(ai) && idx + 1 < current);
                if prefers && improves {
                    found.push((ai, ei));
                }
            }
        }
        found
    }

    #[test]
    fn blocking_pairs_of_every_figure1_matching() {
        let market = figure1();
        // full sets computed by brute force over all 6 applicant-employer
        // pairs against the profiles
        let expected: [&[(usize, usize)]; 6] = [
            &[(0, 1), (0, 2), (1, 0), (1, 2)],
            &[(0, 1), (0, 2), (1, 0), (2, 2)],
            &[(0, 2)],
            &[(0, 2), (1, 0)],
            &[(2, 2)],
            &[(1, 0)],
        ];
        // the single pair documented for each matching in the bundled
        // walkthrough is always the first reported pair
        let documented = [(0, 1), (0, 1), (0, 2), (0, 2), (2, 2), (1, 0)];
        for k in 1..=6 {
            let pairs = find_greedy_blocking_pairs(&market, &mu(k));
            let got: Vec<(usize, usize)> = pairs
                .iter()
                .map(|p| (p.applicant.0, p.employer.0))
                .collect();
            assert_eq!(got, expected[k - 1], "matching {k}");
            assert_eq!(got, brute_force_pairs(&market, &mu(k)), "matching {k}");
            assert_eq!(got[0], documented[k - 1], "matching {k}");
            assert!(!is_greedily_stable(&market, &mu(k)));
        }
    }

    #[test]
    fn blocking_pair_witnesses_verify() {
        let market = figure1();
        for k in 1..=6 {
            let matching = mu(k);
            for pair in find_greedy_blocking_pairs(&market, &matching) {
                // applicant strictly improves
                assert!(
                    market.applicant_rank(pair.applicant, pair.employer)
                        < market
                            .applicant_rank(pair.applicant, matching.employer_of(pair.applicant))
                );
                // witness tuple beats the current outcome
                let current = employer_outcome(&market, &matching, pair.employer).rank;
                let witness_rank = market
                    .tuple_rank(pair.employer, &pair.witness_tuple)
                    .unwrap();
                assert!(witness_rank < current);
                // witness matching realizes the tuple
                assert_eq!(
                    pair.witness_matching.employer_of(pair.applicant),
                    pair.employer
                );
                assert_eq!(
                    outcome_tuple(&market, &pair.witness_matching, pair.employer),
                    pair.witness_tuple
                );
            }
        }
    }

    #[test]
    fn blocking_pair_witness_matches_walkthrough() {
        let market = figure1();
        // (a1, e2) blocking mu1 prefers mu4; (a2, e1) blocking mu6 prefers mu5
        let pairs = find_greedy_blocking_pairs(&market, &mu(1));
        assert_eq!(pairs[0].witness_matching, mu(4));
        let pairs = find_greedy_blocking_pairs(&market, &mu(6));
        assert_eq!(pairs[0].witness_matching, mu(5));
    }

    #[test]
    fn single_pair_market_is_stable() {
        let market = Market::from_parts(
            vec!["a1".into()],
            vec!["e1".into()],
            vec![vec![a(0)]],
            vec![vec![e(0)]],
            vec![vec![EmployerTuple::new(a(0), vec![e(0)])]],
        )
        .unwrap();
        let matching = Matching::identity(1);
        assert!(is_greedily_stable(&market, &matching));
        let (stable, cert) =
            is_strictly_stable(&market, &matching, &OracleLimits::default()).unwrap();
        assert!(stable);
        assert!(cert.is_none());
    }

    #[test]
    fn coalition_probe_checks() {
        let market = figure1();
        // {a1,a2} x {e1,e2} via mu3: e1 does not improve
        let violations =
            coalition_violations(&market, &mu(1), &mu(3), &[a(0), a(1)], &[e(0), e(1)]);
        assert_eq!(
            violations,
            vec![CoalitionViolation::EmployerNotImproving(e(0))]
        );
        assert!(!check_coalition(
            &market,
            &mu(1),
            &mu(3),
            &[a(0), a(1)],
            &[e(0), e(1)]
        ));

        // {a1,a3} x {e1,e3} via mu6: a3 does not improve
        let violations =
            coalition_violations(&market, &mu(1), &mu(6), &[a(0), a(2)], &[e(0), e(2)]);
        assert!(violations.contains(&CoalitionViolation::ApplicantNotImproving(a(2))));

        // {a2,a3} x {e2,e3} via mu2: e3 does not improve
        let violations =
            coalition_violations(&market, &mu(1), &mu(2), &[a(1), a(2)], &[e(1), e(2)]);
        assert!(violations.contains(&CoalitionViolation::EmployerNotImproving(e(2))));
    }

    #[test]
    fn identical_witness_never_blocks() {
        let market = figure1();
        for k in 1..=6 {
            assert!(!check_coalition(
                &market,
                &mu(k),
                &mu(k),
                &[a(0), a(1), a(2)],
                &[e(0), e(1), e(2)],
            ));
        }
    }

    #[test]
    fn fixpoint_finds_the_singleton_coalition() {
        let market = figure1();
        let coalition = find_blocking_coalition(&market, &mu(2), &mu(1)).unwrap();
        assert_eq!(coalition.applicants, vec![a(2)]);
        assert_eq!(coalition.employers, vec![e(2)]);
        assert!(check_coalition(
            &market,
            &mu(2),
            &mu(1),
            &coalition.applicants,
            &coalition.employers,
        ));
    }

    #[test]
    fn fixpoint_rejects_non_improving_witness() {
        let market = figure1();
        assert!(find_blocking_coalition(&market, &mu(6), &mu(5)).is_none());
    }

    /// Exhaustive search over all nonempty subset pairs, the independent
    /// reference for the fixpoint computation.
    fn subset_search(market: &Market, matching: &Matching, witness: &Matching) -> bool {
        let n = market.size();
        for mask_a in 1u32..(1 << n) {
            for mask_e in 1u32..(1 << n) {
                let applicants: Vec<ApplicantId> = (0..n)
                    .filter(|i| mask_a & (1 << i) != 0)
                    .map(ApplicantId)
                    .collect();
                let employers: Vec<EmployerId> = (0..n)
                    .filter(|i| mask_e & (1 << i) != 0)
                    .map(EmployerId)
                    .collect();
                if check_coalition(market, matching, witness, &applicants, &employers) {
                    return true;
                }
            }
        }
        false
    }

    #[test]
    fn fixpoint_agrees_with_subset_search() {
        let market = figure1();
        for k in 1..=6 {
            for j in 1..=6 {
                if k == j {
                    continue;
                }
                let fixpoint = find_blocking_coalition(&market, &mu(k), &mu(j));
                let exhaustive = subset_search(&market, &mu(k), &mu(j));
                assert_eq!(fixpoint.is_some(), exhaustive, "matching {k}, witness {j}");
                if let Some(c) = fixpoint {
                    assert!(check_coalition(
                        &market,
                        &mu(k),
                        &mu(j),
                        &c.applicants,
                        &c.employers
                    ));
                }
            }
        }
    }

    #[test]
    fn fixpoint_agrees_with_subset_search_on_seeded_markets() {
        use crate::generator::{
            generate_market, AffiliationPattern, GeneratorSpec, ProfileStrategy,
        };
        let limits = OracleLimits::default();
        for seed in 0..6u64 {
            let n = 2 + (seed as usize % 3);
            let market = generate_market(&GeneratorSpec {
                seed,
                n,
                affiliation: if seed % 2 == 0 {
                    AffiliationPattern::Bijection
                } else {
                    AffiliationPattern::RandomPartial { density: 0.7 }
                },
                strategy: ProfileStrategy::UniformRandom,
            })
            .unwrap();
            let matchings = enumerate_matchings(n, &limits).unwrap();
            for matching in &matchings {
                for witness in &matchings {
                    if matching == witness {
                        continue;
                    }
                    let fixpoint = find_blocking_coalition(&market, matching, witness);
                    let exhaustive = subset_search(&market, matching, witness);
                    assert_eq!(fixpoint.is_some(), exhaustive, "seed {seed}");
                    if let Some(c) = fixpoint {
                        // the fixpoint is maximal: no strict superset pair
                        // also forms a coalition with this witness
                        assert!(check_coalition(
                            &market,
                            matching,
                            witness,
                            &c.applicants,
                            &c.employers
                        ));
                        for extra in market.applicants() {
                            if c.applicants.contains(&extra) {
                                continue;
                            }
                            let mut wider = c.applicants.clone();
                            wider.push(extra);
                            wider.sort();
                            assert!(!check_coalition(
                                &market,
                                matching,
                                witness,
                                &wider,
                                &c.employers
                            ));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn figure1_strict_classification() {
        let market = figure1();
        let limits = OracleLimits::default();
        let mut stable = Vec::new();
        for k in 1..=6 {
            let (ok, cert) = is_strictly_stable(&market, &mu(k), &limits).unwrap();
            if ok {
                stable.push(k);
            } else {
                let c = cert.unwrap();
                assert!(check_coalition(
                    &market,
                    &mu(k),
                    &c.witness,
                    &c.applicants,
                    &c.employers
                ));
            }
        }
        // the formal coalition definition leaves four matchings unblocked;
        // the identity matching is among them
        assert_eq!(stable, vec![1, 3, 4, 6]);
    }

    #[test]
    fn lex_rank_inverts_enumeration() {
        let matchings = enumerate_matchings(4, &OracleLimits::default()).unwrap();
        for (i, m) in matchings.iter().enumerate() {
            assert_eq!(m.lex_rank(), i);
        }
    }
}

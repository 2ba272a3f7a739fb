//! Market data model: rosters, affiliations, applicant orders, and employer
//! tuple-profiles, together with the tuple-validity rules, instance
//! validation, and consistency analysis of employer profiles.
//!
//! A market is square (as many applicants as employers) and complete: every
//! applicant ranks every employer, and every employer ranks every *valid
//! tuple* `(hire, placement_1, .., placement_r)` where `hire` is the
//! applicant it is matched to and `placement_k` is the employer at which its
//! k-th affiliate should end up. A tuple is valid when the k-th placement is
//! the owning employer if and only if the hire is the k-th affiliate (an
//! employer cannot hire its own affiliate and simultaneously send that
//! affiliate elsewhere), and placements are pairwise distinct.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of an applicant in the market's applicant roster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ApplicantId(pub usize);

/// Index of an employer in the market's employer roster.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmployerId(pub usize);

impl fmt::Display for ApplicantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a#{}", self.0)
    }
}

impl fmt::Display for EmployerId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e#{}", self.0)
    }
}

/// One entry of an employer's preference profile: hire `hire`, and place the
/// k-th affiliate at `placements[k]`.
///
/// The derived ordering (hire index, then placements lexicographically) is
/// the canonical tuple order used everywhere for deterministic iteration.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EmployerTuple {
    pub hire: ApplicantId,
    pub placements: Vec<EmployerId>,
}

impl EmployerTuple {
    pub fn new(hire: ApplicantId, placements: Vec<EmployerId>) -> Self {
        EmployerTuple { hire, placements }
    }

    /// Validity relative to the owning employer and its ordered affiliates:
    /// `placements[k] == owner` iff `hire == affiliates[k]`, and placements
    /// are pairwise distinct.
    pub fn is_valid_for(&self, owner: EmployerId, affiliates: &[ApplicantId]) -> bool {
        if self.placements.len() != affiliates.len() {
            return false;
        }
        for (k, &placement) in self.placements.iter().enumerate() {
            if (placement == owner) != (self.hire == affiliates[k]) {
                return false;
            }
            if self.placements[..k].contains(&placement) {
                return false;
            }
        }
        true
    }
}

/// Strict total order over one employer's valid tuples, best first.
#[derive(Debug, Clone)]
pub struct EmployerProfile {
    order: Vec<EmployerTuple>,
    rank: HashMap<EmployerTuple, usize>,
}

impl EmployerProfile {
    /// Builds a profile from a best-first tuple list. Duplicates are the
    /// caller's responsibility; market validation rejects them.
    pub fn new(order: Vec<EmployerTuple>) -> Self {
        let rank = order
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i + 1))
            .collect();
        EmployerProfile { order, rank }
    }

    pub fn tuples(&self) -> &[EmployerTuple] {
        &self.order
    }

    /// 1-based rank of a tuple, 1 = most preferred.
    pub fn rank_of(&self, tuple: &EmployerTuple) -> Option<usize> {
        self.rank.get(tuple).copied()
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

impl PartialEq for EmployerProfile {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order
    }
}

impl Eq for EmployerProfile {}

/// Strict total order over all employers, best first; rank 1 = most
/// preferred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApplicantOrder {
    order: Vec<EmployerId>,
    rank: Vec<usize>,
}

impl ApplicantOrder {
    /// Builds an order from a best-first employer list. The list must be a
    /// permutation of `0..employer_count`; market validation enforces this.
    pub fn new(order: Vec<EmployerId>, employer_count: usize) -> Self {
        let mut rank = vec![0usize; employer_count];
        for (i, e) in order.iter().enumerate() {
            rank[e.0] = i + 1;
        }
        ApplicantOrder { order, rank }
    }

    pub fn as_slice(&self) -> &[EmployerId] {
        &self.order
    }

    pub fn rank_of(&self, employer: EmployerId) -> usize {
        self.rank[employer.0]
    }
}

/// A market as parsed from an external representation, before validation.
/// All cross-references are by label.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawMarket {
    pub applicants: Vec<String>,
    pub employers: Vec<String>,
    /// employer label -> ordered affiliated applicant labels
    pub affiliations: Vec<(String, Vec<String>)>,
    /// applicant label -> employer labels, best first
    pub applicant_prefs: Vec<(String, Vec<String>)>,
    /// employer label -> tuples, best first; each tuple is [hire, p1, .., pr]
    pub employer_prefs: Vec<(String, Vec<Vec<String>>)>,
}

/// Validation failures for a raw market.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("market has {applicants} applicants but {employers} employers; rosters must have equal size")]
    SizeMismatch { applicants: usize, employers: usize },
    #[error("duplicate {side} label `{label}`")]
    DuplicateLabel { side: &'static str, label: String },
    #[error("applicant `{applicant}` appears in more than one affiliate list (or twice in one)")]
    DuplicateAffiliation { applicant: String },
    #[error("employer `{employer}` lists invalid tuple ({tuple}): {reason}")]
    InvalidTuple {
        employer: String,
        tuple: String,
        reason: String,
    },
    #[error("employer `{employer}` profile is not a complete strict order over its valid tuples: {reason}")]
    IncompleteProfile { employer: String, reason: String },
    #[error(
        "applicant `{applicant}` order is not a strict total order over all employers: {reason}"
    )]
    IncompleteApplicantOrder { applicant: String, reason: String },
    #[error("unknown {side} `{label}` in {context}")]
    UnknownAgent {
        side: &'static str,
        label: String,
        context: String,
    },
}

/// A validated affiliate matching market. Immutable after construction; all
/// operations over it are pure and safe to call from multiple threads.
#[derive(Debug, Clone)]
pub struct Market {
    applicant_labels: Vec<String>,
    employer_labels: Vec<String>,
    applicant_index: HashMap<String, ApplicantId>,
    employer_index: HashMap<String, EmployerId>,
    affiliations: Vec<Vec<ApplicantId>>,
    affiliation_of: Vec<Option<(EmployerId, usize)>>,
    applicant_orders: Vec<ApplicantOrder>,
    employer_profiles: Vec<EmployerProfile>,
    /// [employer][applicant] -> profile index of the best tuple hiring that
    /// applicant. Every pair admits at least one valid tuple in a square
    /// market.
    best_hire_index: Vec<Vec<usize>>,
}

impl PartialEq for Market {
    fn eq(&self, other: &Self) -> bool {
        self.applicant_labels == other.applicant_labels
            && self.employer_labels == other.employer_labels
            && self.affiliations == other.affiliations
            && self.applicant_orders == other.applicant_orders
            && self.employer_profiles == other.employer_profiles
    }
}

impl Eq for Market {}

impl Market {
    /// Builds a market from typed parts, enforcing every invariant.
    pub fn from_parts(
        applicant_labels: Vec<String>,
        employer_labels: Vec<String>,
        affiliations: Vec<Vec<ApplicantId>>,
        applicant_orders: Vec<Vec<EmployerId>>,
        employer_profiles: Vec<Vec<EmployerTuple>>,
    ) -> Result<Market, ValidationError> {
        let n = applicant_labels.len();
        let m = employer_labels.len();
        if n != m {
            return Err(ValidationError::SizeMismatch {
                applicants: n,
                employers: m,
            });
        }
        let applicant_index = index_labels(&applicant_labels, "applicant", ApplicantId)?;
        let employer_index = index_labels(&employer_labels, "employer", EmployerId)?;

        if affiliations.len() != m {
            return Err(ValidationError::IncompleteProfile {
                employer: String::new(),
                reason: format!("expected {m} affiliate lists, found {}", affiliations.len()),
            });
        }
        let mut affiliation_of: Vec<Option<(EmployerId, usize)>> = vec![None; n];
        for (e, list) in affiliations.iter().enumerate() {
            for (k, &a) in list.iter().enumerate() {
                if a.0 >= n {
                    return Err(ValidationError::UnknownAgent {
                        side: "applicant",
                        label: format!("#{}", a.0),
                        context: format!("affiliations of `{}`", employer_labels[e]),
                    });
                }
                if affiliation_of[a.0].is_some() {
                    return Err(ValidationError::DuplicateAffiliation {
                        applicant: applicant_labels[a.0].clone(),
                    });
                }
                affiliation_of[a.0] = Some((EmployerId(e), k));
            }
        }

        if applicant_orders.len() != n {
            return Err(ValidationError::IncompleteApplicantOrder {
                applicant: String::new(),
                reason: format!("expected {n} orders, found {}", applicant_orders.len()),
            });
        }
        let mut orders = Vec::with_capacity(n);
        for (a, order) in applicant_orders.into_iter().enumerate() {
            let mut seen = vec![false; m];
            for &e in &order {
                if e.0 >= m {
                    return Err(ValidationError::UnknownAgent {
                        side: "employer",
                        label: format!("#{}", e.0),
                        context: format!("order of applicant `{}`", applicant_labels[a]),
                    });
                }
                if seen[e.0] {
                    return Err(ValidationError::IncompleteApplicantOrder {
                        applicant: applicant_labels[a].clone(),
                        reason: format!("employer `{}` listed twice", employer_labels[e.0]),
                    });
                }
                seen[e.0] = true;
            }
            if order.len() != m {
                return Err(ValidationError::IncompleteApplicantOrder {
                    applicant: applicant_labels[a].clone(),
                    reason: format!("lists {} of {} employers", order.len(), m),
                });
            }
            orders.push(ApplicantOrder::new(order, m));
        }

        if employer_profiles.len() != m {
            return Err(ValidationError::IncompleteProfile {
                employer: String::new(),
                reason: format!("expected {m} profiles, found {}", employer_profiles.len()),
            });
        }
        let mut profiles = Vec::with_capacity(m);
        for (e, listed) in employer_profiles.into_iter().enumerate() {
            let owner = EmployerId(e);
            let label = &employer_labels[e];
            let affs = &affiliations[e];
            for tuple in &listed {
                if tuple.hire.0 >= n || tuple.placements.iter().any(|p| p.0 >= m) {
                    return Err(ValidationError::UnknownAgent {
                        side: "agent",
                        label: format!("{tuple:?}"),
                        context: format!("profile of `{label}`"),
                    });
                }
                if !tuple.is_valid_for(owner, affs) {
                    return Err(ValidationError::InvalidTuple {
                        employer: label.clone(),
                        tuple: display_tuple(tuple, &applicant_labels, &employer_labels),
                        reason: invalidity_reason(tuple, owner, affs),
                    });
                }
            }
            let universe = enumerate_valid_tuples(n, m, owner, affs);
            if listed.len() != universe.len() {
                return Err(ValidationError::IncompleteProfile {
                    employer: label.clone(),
                    reason: format!("lists {} of {} valid tuples", listed.len(), universe.len()),
                });
            }
            let mut sorted: Vec<&EmployerTuple> = listed.iter().collect();
            sorted.sort();
            sorted.dedup();
            if sorted.len() != universe.len()
                || sorted.iter().zip(&universe).any(|(a, b)| **a != *b)
            {
                let missing = universe
                    .iter()
                    .find(|t| !listed.contains(t))
                    .expect("some tuple is missing or duplicated");
                return Err(ValidationError::IncompleteProfile {
                    employer: label.clone(),
                    reason: format!(
                        "missing tuple ({})",
                        display_tuple(missing, &applicant_labels, &employer_labels)
                    ),
                });
            }
            profiles.push(EmployerProfile::new(listed));
        }

        let best_hire_index = profiles
            .iter()
            .map(|profile| {
                (0..n)
                    .map(|a| {
                        profile
                            .tuples()
                            .iter()
                            .position(|t| t.hire == ApplicantId(a))
                            .expect("every applicant admits a valid tuple in a square market")
                    })
                    .collect()
            })
            .collect();

        Ok(Market {
            applicant_labels,
            employer_labels,
            applicant_index,
            employer_index,
            affiliations,
            affiliation_of,
            applicant_orders: orders,
            employer_profiles: profiles,
            best_hire_index,
        })
    }

    pub fn size(&self) -> usize {
        self.applicant_labels.len()
    }

    pub fn applicants(&self) -> impl Iterator<Item = ApplicantId> {
        (0..self.applicant_labels.len()).map(ApplicantId)
    }

    pub fn employers(&self) -> impl Iterator<Item = EmployerId> {
        (0..self.employer_labels.len()).map(EmployerId)
    }

    pub fn applicant_label(&self, a: ApplicantId) -> &str {
        &self.applicant_labels[a.0]
    }

    pub fn employer_label(&self, e: EmployerId) -> &str {
        &self.employer_labels[e.0]
    }

    pub fn applicant_id(&self, label: &str) -> Option<ApplicantId> {
        self.applicant_index.get(label).copied()
    }

    pub fn employer_id(&self, label: &str) -> Option<EmployerId> {
        self.employer_index.get(label).copied()
    }

    /// Ordered affiliates of an employer.
    pub fn affiliates(&self, e: EmployerId) -> &[ApplicantId] {
        &self.affiliations[e.0]
    }

    /// The employer an applicant is affiliated with, if any, and the
    /// applicant's position in that employer's ordered affiliate list.
    pub fn affiliation_of(&self, a: ApplicantId) -> Option<(EmployerId, usize)> {
        self.affiliation_of[a.0]
    }

    pub fn applicant_order(&self, a: ApplicantId) -> &ApplicantOrder {
        &self.applicant_orders[a.0]
    }

    /// 1-based rank of an employer in an applicant's order.
    pub fn applicant_rank(&self, a: ApplicantId, e: EmployerId) -> usize {
        self.applicant_orders[a.0].rank_of(e)
    }

    pub fn profile(&self, e: EmployerId) -> &EmployerProfile {
        &self.employer_profiles[e.0]
    }

    /// 1-based rank of a tuple in an employer's profile.
    pub fn tuple_rank(&self, e: EmployerId, tuple: &EmployerTuple) -> Option<usize> {
        self.employer_profiles[e.0].rank_of(tuple)
    }

    /// Rank of the best tuple of `e` that hires `a`.
    pub fn best_hire_rank(&self, e: EmployerId, a: ApplicantId) -> usize {
        self.best_hire_index[e.0][a.0] + 1
    }

    /// The best tuple of `e` that hires `a`.
    pub fn best_hire_tuple(&self, e: EmployerId, a: ApplicantId) -> &EmployerTuple {
        &self.employer_profiles[e.0].tuples()[self.best_hire_index[e.0][a.0]]
    }

    /// The canonical valid-tuple universe of an employer.
    pub fn valid_tuples(&self, e: EmployerId) -> Vec<EmployerTuple> {
        enumerate_valid_tuples(self.size(), self.size(), e, &self.affiliations[e.0])
    }

    /// The unique base order witnessing consistency of an employer's
    /// profile, if its hires are grouped.
    pub fn infer_consistency(&self, e: EmployerId) -> Option<Vec<ApplicantId>> {
        infer_consistency(&self.employer_profiles[e.0], self.size())
    }

    pub fn is_consistent(&self, e: EmployerId) -> bool {
        self.infer_consistency(e).is_some()
    }
}

fn index_labels<I: Copy>(
    labels: &[String],
    side: &'static str,
    make: fn(usize) -> I,
) -> Result<HashMap<String, I>, ValidationError> {
    let mut index = HashMap::with_capacity(labels.len());
    for (i, label) in labels.iter().enumerate() {
        if index.insert(label.clone(), make(i)).is_some() {
            return Err(ValidationError::DuplicateLabel {
                side,
                label: label.clone(),
            });
        }
    }
    Ok(index)
}

fn display_tuple(tuple: &EmployerTuple, applicants: &[String], employers: &[String]) -> String {
    let mut parts = vec![applicants[tuple.hire.0].clone()];
    parts.extend(tuple.placements.iter().map(|p| employers[p.0].clone()));
    parts.join(", ")
}

fn invalidity_reason(
    tuple: &EmployerTuple,
    owner: EmployerId,
    affiliates: &[ApplicantId],
) -> String {
    if tuple.placements.len() != affiliates.len() {
        return format!(
            "tuple has {} placements but employer has {} affiliates",
            tuple.placements.len(),
            affiliates.len()
        );
    }
    for (k, &placement) in tuple.placements.iter().enumerate() {
        if placement == owner && tuple.hire != affiliates[k] {
            return format!(
                "placement {} is the owner but the hire is not affiliate {k}",
                k + 1
            );
        }
        if placement != owner && tuple.hire == affiliates[k] {
            return "hiring one's own affiliate requires placing that affiliate at oneself".into();
        }
        if tuple.placements[..k].contains(&placement) {
            return "placements are not pairwise distinct".into();
        }
    }
    "invalid".into()
}

/// Validates a label-addressed raw market into a typed [`Market`].
pub fn validate_market(raw: &RawMarket) -> Result<Market, ValidationError> {
    let n = raw.applicants.len();
    let m = raw.employers.len();
    if n != m {
        return Err(ValidationError::SizeMismatch {
            applicants: n,
            employers: m,
        });
    }
    let applicant_index = index_labels(&raw.applicants, "applicant", ApplicantId)?;
    let employer_index = index_labels(&raw.employers, "employer", EmployerId)?;

    let lookup_applicant = |label: &str, context: String| {
        applicant_index
            .get(label)
            .copied()
            .ok_or_else(|| ValidationError::UnknownAgent {
                side: "applicant",
                label: label.to_string(),
                context,
            })
    };
    let lookup_employer = |label: &str, context: String| {
        employer_index
            .get(label)
            .copied()
            .ok_or_else(|| ValidationError::UnknownAgent {
                side: "employer",
                label: label.to_string(),
                context,
            })
    };

    let mut affiliations: Vec<Vec<ApplicantId>> = vec![Vec::new(); m];
    for (employer, list) in &raw.affiliations {
        let e = lookup_employer(employer, "affiliations".into())?;
        let resolved: Result<Vec<_>, _> = list
            .iter()
            .map(|a| lookup_applicant(a, format!("affiliations of `{employer}`")))
            .collect();
        affiliations[e.0] = resolved?;
    }

    let mut applicant_orders: Vec<Option<Vec<EmployerId>>> = vec![None; n];
    for (applicant, order) in &raw.applicant_prefs {
        let a = lookup_applicant(applicant, "applicant_prefs".into())?;
        let resolved: Result<Vec<_>, _> = order
            .iter()
            .map(|e| lookup_employer(e, format!("order of applicant `{applicant}`")))
            .collect();
        applicant_orders[a.0] = Some(resolved?);
    }
    let mut orders = Vec::with_capacity(n);
    for (a, order) in applicant_orders.into_iter().enumerate() {
        orders.push(
            order.ok_or_else(|| ValidationError::IncompleteApplicantOrder {
                applicant: raw.applicants[a].clone(),
                reason: "no order given".into(),
            })?,
        );
    }

    let mut employer_profiles: Vec<Option<Vec<EmployerTuple>>> = vec![None; m];
    for (employer, listed) in &raw.employer_prefs {
        let e = lookup_employer(employer, "employer_prefs".into())?;
        let context = format!("profile of `{employer}`");
        let mut tuples = Vec::with_capacity(listed.len());
        for entry in listed {
            if entry.is_empty() {
                return Err(ValidationError::InvalidTuple {
                    employer: employer.clone(),
                    tuple: String::new(),
                    reason: "tuple is empty; expected [hire, placements..]".into(),
                });
            }
            let hire = lookup_applicant(&entry[0], context.clone())?;
            let placements: Result<Vec<_>, _> = entry[1..]
                .iter()
                .map(|p| lookup_employer(p, context.clone()))
                .collect();
            tuples.push(EmployerTuple::new(hire, placements?));
        }
        employer_profiles[e.0] = Some(tuples);
    }
    let mut profiles = Vec::with_capacity(m);
    for (e, profile) in employer_profiles.into_iter().enumerate() {
        profiles.push(profile.ok_or_else(|| ValidationError::IncompleteProfile {
            employer: raw.employers[e].clone(),
            reason: "no profile given".into(),
        })?);
    }

    Market::from_parts(
        raw.applicants.clone(),
        raw.employers.clone(),
        affiliations,
        orders,
        profiles,
    )
}

/// Enumerates the valid tuples of an employer with the given affiliates, in
/// canonical order: hire by roster order, then placements lexicographically
/// by roster order.
pub fn enumerate_valid_tuples(
    applicant_count: usize,
    employer_count: usize,
    owner: EmployerId,
    affiliates: &[ApplicantId],
) -> Vec<EmployerTuple> {
    let r = affiliates.len();
    let mut out = Vec::new();
    let mut placements = Vec::with_capacity(r);
    for hire in (0..applicant_count).map(ApplicantId) {
        fill_placements(
            employer_count,
            owner,
            affiliates,
            hire,
            &mut placements,
            &mut out,
        );
    }
    out
}

fn fill_placements(
    employer_count: usize,
    owner: EmployerId,
    affiliates: &[ApplicantId],
    hire: ApplicantId,
    placements: &mut Vec<EmployerId>,
    out: &mut Vec<EmployerTuple>,
) {
    let k = placements.len();
    if k == affiliates.len() {
        out.push(EmployerTuple::new(hire, placements.clone()));
        return;
    }
    if affiliates[k] == hire {
        // the hired affiliate must be placed at the owner
        if !placements.contains(&owner) {
            placements.push(owner);
            fill_placements(employer_count, owner, affiliates, hire, placements, out);
            placements.pop();
        }
        return;
    }
    for g in (0..employer_count).map(EmployerId) {
        if g == owner || placements.contains(&g) {
            continue;
        }
        placements.push(g);
        fill_placements(employer_count, owner, affiliates, hire, placements, out);
        placements.pop();
    }
}

fn falling_factorial(x: usize, k: usize) -> u128 {
    if k > x {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc
            .checked_mul((x - i) as u128)
            .expect("falling factorial overflows u128");
    }
    acc
}

fn factorial(x: u128) -> u128 {
    let mut acc: u128 = 1;
    let mut i: u128 = 2;
    while i <= x {
        acc = acc.checked_mul(i).expect("factorial overflows u128");
        i += 1;
    }
    acc
}

/// Number of valid tuples for an employer with `r` affiliates in an
/// `n`-applicant, `m`-employer market:
/// `(n - r) * P(m-1, r) + r * P(m-1, r-1)` where `P` is the falling
/// factorial. Equals `enumerate_valid_tuples(..).len()` for any such
/// employer.
pub fn count_valid_tuples(n: usize, m: usize, r: usize) -> u128 {
    assert!(
        r <= n,
        "an employer cannot have more affiliates than there are applicants"
    );
    let non_affiliate = (n - r) as u128 * falling_factorial(m.saturating_sub(1), r);
    let affiliate = if r == 0 {
        0
    } else {
        r as u128 * falling_factorial(m.saturating_sub(1), r - 1)
    };
    non_affiliate + affiliate
}

/// Number of employer profiles consistent with one fixed base order over
/// applicants: the product over applicants of (size of that applicant's
/// hire-group)!. Positions of the affiliates do not change the group sizes,
/// only how many applicants are affiliates.
///
/// Panics if the count exceeds `u128`.
pub fn count_consistent_profiles(n: usize, m: usize, affiliates: &[ApplicantId]) -> u128 {
    let r = affiliates.len();
    assert!(
        r <= n,
        "an employer cannot have more affiliates than there are applicants"
    );
    let non_affiliate_group = falling_factorial(m.saturating_sub(1), r);
    let affiliate_group = if r == 0 {
        1
    } else {
        falling_factorial(m.saturating_sub(1), r - 1)
    };
    let mut acc: u128 = 1;
    for _ in 0..(n - r) {
        acc = acc
            .checked_mul(factorial(non_affiliate_group))
            .expect("consistent profile count overflows u128");
    }
    for _ in 0..r {
        acc = acc
            .checked_mul(factorial(affiliate_group))
            .expect("consistent profile count overflows u128");
    }
    acc
}

/// True iff the profile's hires, read best-first, are grouped and the groups
/// appear in the order given by `base` (a strict total order over all
/// applicants, best first).
pub fn is_consistent_with(profile: &EmployerProfile, base: &[ApplicantId]) -> bool {
    let mut pos = HashMap::with_capacity(base.len());
    for (i, &a) in base.iter().enumerate() {
        pos.insert(a, i);
    }
    // base positions are unique per hire, so non-decreasing positions are
    // exactly "grouped by hire, groups in base order"
    let mut last = 0usize;
    for tuple in profile.tuples() {
        let p = *pos
            .get(&tuple.hire)
            .expect("base order must cover every hire in the profile");
        if p < last {
            return false;
        }
        last = p;
    }
    true
}

/// The unique base order witnessing consistency, if the profile's hires are
/// grouped: first occurrence order of the hires, extended by roster order
/// with applicants that never occur as a hire.
pub fn infer_consistency(
    profile: &EmployerProfile,
    applicant_count: usize,
) -> Option<Vec<ApplicantId>> {
    let mut sequence: Vec<ApplicantId> = Vec::new();
    for tuple in profile.tuples() {
        match sequence.last() {
            Some(&last) if last == tuple.hire => {}
            _ => {
                if sequence.contains(&tuple.hire) {
                    return None; // hire recurs after its group ended
                }
                sequence.push(tuple.hire);
            }
        }
    }
    for a in (0..applicant_count).map(ApplicantId) {
        if !sequence.contains(&a) {
            sequence.push(a);
        }
    }
    Some(sequence)
}

//! Normally torsion-free (NTF) certification up to a bound, embedded-prime
//! onset, and checks that tie the onset to matchings, covers and minors.
//!
//! NTF is only ever certified up to a finite power `N`; every verdict carries
//! the bound it was computed with.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error as ThisError;

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, MinorSpec, Packing};
use crate::monomial::MonomialOf;
use crate::primary::{associated_primes, is_unmixed, minimal_primes, symbolic_power};
use crate::prime::MonomialPrime;
use crate::varset::VarSet;
use crate::{Monomial, MonomialIdeal};

/// How the power bound `N` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundRule {
    /// `⌈(d+1)/2⌉` over the variables lying in edges of size at least two.
    #[default]
    Dimension,
    /// One more than the largest matching number over all minors.
    BetaStarPlusOne,
}

/// Limits on the exponential parts of the computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest divisor box the witness oracle may scan.
    pub max_box: u64,
    /// Largest power `t` computed.
    pub max_power: usize,
    /// Largest number of delete/contract assignments enumerated (`3^k` for
    /// `k` active vertices).
    pub max_minors: u64,
    /// Largest number of minimal generators of a power.
    pub max_generators: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_box: 1 << 24, max_power: 8, max_minors: 531_441, max_generators: 20_000 }
    }
}

/// Number of variables in edges of size at least two.
pub fn effective_dim(h: &Hypergraph) -> usize {
    h.without_isolated().vertices().len()
}

/// `⌈(d+1)/2⌉` with `d` the effective dimension, at least 1.
pub fn dimension_bound(h: &Hypergraph) -> usize {
    (effective_dim(h) + 2) / 2
}

/// Largest matching number over `h` and all of its minors, each taken
/// after removing its singleton edges.
pub fn beta_star(h: &Hypergraph, budget: &Budget) -> Result<usize> {
    check_minor_budget(h, budget)?;
    let reduced_beta1 = |g: &Hypergraph| -> Result<usize> {
        let core = g.without_isolated();
        Ok(if core.has_edges() { core.beta1()?.0 } else { 0 })
    };
    let mut best = reduced_beta1(h)?;
    for (_, m) in h.distinct_proper_minors() {
        best = best.max(reduced_beta1(&m)?);
    }
    Ok(best)
}

pub fn bound_for(h: &Hypergraph, rule: BoundRule, budget: &Budget) -> Result<usize> {
    match rule {
        BoundRule::Dimension => Ok(dimension_bound(h)),
        BoundRule::BetaStarPlusOne => Ok(beta_star(h, budget)? + 1),
    }
}

/// [`dimension_bound`] of the hypergraph of a square-free ideal.
pub fn default_bound(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(dimension_bound(&Hypergraph::of_ideal(ideal)?))
}

/// Fails when enumerating the minors of `h` would exceed `budget.max_minors`.
pub fn check_minor_budget(h: &Hypergraph, budget: &Budget) -> Result<()> {
    let k = h.vertices().len() as u32;
    let needed = 3u64.checked_pow(k).unwrap_or(u64::MAX);
    if needed > budget.max_minors {
        return Err(Error::Resource { what: "minor assignments", needed, limit: budget.max_minors });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerRecord {
    pub t: usize,
    /// Number of minimal generators of `I^t`.
    pub generators: usize,
    pub ass: Vec<MonomialPrime>,
    /// `ass` minus the minimal primes.
    pub embedded: Vec<MonomialPrime>,
    /// Whether `I^t` equals the symbolic power `I^(t)`.
    pub symbolic_equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NtfVerdict {
    pub bound_used: usize,
    pub minimal_primes: Vec<MonomialPrime>,
    /// One record for each `t = 1, 2, ..` in order.
    pub per_power: Vec<PowerRecord>,
    /// Least `t` with an embedded prime.
    pub onset: Option<usize>,
    /// Least `t` with the maximal ideal among the associated primes.
    pub maximal_onset: Option<usize>,
    /// No embedded primes for any `t` up to this value.
    pub certified_ntf_up_to: usize,
}

impl NtfVerdict {
    pub fn record(&self, t: usize) -> Option<&PowerRecord> {
        self.per_power.get(t.checked_sub(1)?)
    }

    /// True when every power up to the bound was computed and none had an
    /// embedded prime.
    pub fn is_ntf_up_to_bound(&self) -> bool {
        self.onset.is_none() && self.per_power.len() >= self.bound_used
    }

    fn from_records(bound_used: usize, minimal_primes: Vec<MonomialPrime>, per_power: Vec<PowerRecord>) -> Self {
        let onset = per_power.iter().find(|r| !r.embedded.is_empty()).map(|r| r.t);
        let maximal_onset = per_power.iter().find(|r| r.ass.iter().any(|p| p.is_maximal())).map(|r| r.t);
        let certified_ntf_up_to = onset.map_or(per_power.len(), |o| o - 1);
        NtfVerdict { bound_used, minimal_primes, per_power, onset, maximal_onset, certified_ntf_up_to }
    }
}

/// An error with whatever was computed before it happened.
#[derive(Debug, Clone, ThisError)]
#[error("{error}")]
pub struct NtfError {
    pub error: Error,
    pub partial: Box<NtfVerdict>,
}

impl From<NtfError> for Error {
    fn from(e: NtfError) -> Error {
        e.error
    }
}

/// Associated primes of `I^t` for `t = 1..=n`, the embedded ones, and
/// whether `I^t = I^(t)`, for a square-free proper nonzero ideal.
pub fn ntf_verdict(ideal: &MonomialIdeal, n: usize, budget: &Budget) -> std::result::Result<NtfVerdict, NtfError> {
    let fail = |error: Error, records: Vec<PowerRecord>, min: Vec<MonomialPrime>| NtfError {
        error,
        partial: Box::new(NtfVerdict::from_records(n, min, records)),
    };
    let setup = || -> Result<Vec<MonomialPrime>> {
        if !ideal.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        ideal.require_proper_nonzero()?;
        if n == 0 {
            return Err(Error::usage("the power bound must be at least 1"));
        }
        minimal_primes(ideal)
    };
    let min = setup().map_err(|e| fail(e, Vec::new(), Vec::new()))?;

    // Powers are built one after another; the decompositions are the
    // expensive part and run in parallel.
    let mut powers: Vec<MonomialIdeal> = Vec::new();
    let mut stop: Option<Error> = None;
    let reachable = n.min(budget.max_power);
    if n > budget.max_power {
        stop = Some(Error::Resource { what: "power", needed: n as u64, limit: budget.max_power as u64 });
    }
    for _ in 0..reachable {
        let next = match powers.last() {
            None => Ok(ideal.clone()),
            Some(prev) => prev.product(ideal),
        };
        match next {
            Ok(p) if p.len() > budget.max_generators => {
                stop = Some(Error::Resource {
                    what: "generators of a power",
                    needed: p.len() as u64,
                    limit: budget.max_generators as u64,
                });
                break;
            }
            Ok(p) => powers.push(p),
            Err(e) => {
                stop = Some(e);
                break;
            }
        }
    }

    let results: Vec<Result<PowerRecord>> = powers
        .par_iter()
        .enumerate()
        .map(|(i, p)| power_record(ideal, i + 1, p, &min))
        .collect();
    let mut records = Vec::new();
    for r in results {
        match r {
            Ok(rec) => records.push(rec),
            Err(e) => return Err(fail(e, records, min)),
        }
    }
    match stop {
        Some(e) => Err(fail(e, records, min)),
        None => Ok(NtfVerdict::from_records(n, min, records)),
    }
}

fn power_record(ideal: &MonomialIdeal, t: usize, power: &MonomialIdeal, min: &[MonomialPrime]) -> Result<PowerRecord> {
    let ass = associated_primes(power)?.primes;
    let embedded: Vec<MonomialPrime> = ass.iter().filter(|p| !min.contains(p)).copied().collect();
    let symbolic_equal = if t == 1 { true } else { symbolic_power(ideal, t)? == *power };
    Ok(PowerRecord { t, generators: power.len(), ass, embedded, symbolic_equal })
}

/// A proper minor with an embedded prime within its bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailingMinor {
    pub spec: MinorSpec,
    pub minor: Hypergraph,
    /// The connected component (relabeled to `0..k`) that has the onset.
    pub component: Hypergraph,
    pub onset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorsNtf {
    /// Every proper minor is NTF up to its own bound.
    pub all_ntf: bool,
    pub rule: BoundRule,
    pub failing: Option<FailingMinor>,
    pub minors_checked: usize,
    /// Distinct connected components actually analysed.
    pub components_checked: usize,
    /// Largest bound used for any minor.
    pub max_bound_used: usize,
}

#[derive(Debug, Clone, ThisError)]
#[error("{error} (minor: delete {:?}, contract {:?})", .spec.delete, .spec.contract)]
pub struct MinorError {
    pub error: Error,
    pub spec: MinorSpec,
}

impl From<MinorError> for Error {
    fn from(e: MinorError) -> Error {
        e.error
    }
}

/// Certifies every distinct proper minor of `h` as NTF up to the bound that
/// `rule` gives for that minor.
///
/// Each minor is split into connected components after dropping singleton
/// edges, and each component is checked on its own vertex set. A minor has
/// an embedded prime at power `t` exactly when one of its components does.
pub fn all_proper_minors_ntf(h: &Hypergraph, rule: BoundRule, budget: &Budget) -> std::result::Result<MinorsNtf, MinorError> {
    let top = MinorSpec::identity();
    check_minor_budget(h, budget).map_err(|error| MinorError { error, spec: top })?;
    let minors = h.distinct_proper_minors();

    type Key = (Hypergraph, usize);
    let mut order: Vec<Key> = Vec::new();
    let mut index: HashMap<Key, usize> = HashMap::new();
    let mut plan: Vec<Vec<(usize, Hypergraph)>> = Vec::with_capacity(minors.len());
    for (spec, m) in &minors {
        let n = bound_for(m, rule, budget).map_err(|error| MinorError { error, spec: *spec })?;
        let mut parts = Vec::new();
        for comp in m.without_isolated().connected_components() {
            let key = (comp.compacted(), n);
            let slot = *index.entry(key.clone()).or_insert_with(|| {
                order.push(key);
                order.len() - 1
            });
            parts.push((slot, comp));
        }
        plan.push(parts);
    }

    let outcomes: Vec<Result<Option<usize>>> = order
        .par_iter()
        .map(|(comp, n)| {
            let verdict = ntf_verdict(&comp.edge_ideal(), *n, budget)?;
            Ok(verdict.onset)
        })
        .collect();

    let mut max_bound_used = 0;
    for ((spec, m), parts) in minors.iter().zip(&plan) {
        for (slot, _) in parts {
            let (comp, n) = &order[*slot];
            max_bound_used = max_bound_used.max(*n);
            match &outcomes[*slot] {
                Err(error) => return Err(MinorError { error: error.clone(), spec: *spec }),
                Ok(Some(onset)) => {
                    return Ok(MinorsNtf {
                        all_ntf: false,
                        rule,
                        failing: Some(FailingMinor { spec: *spec, minor: m.clone(), component: comp.clone(), onset: *onset }),
                        minors_checked: minors.len(),
                        components_checked: order.len(),
                        max_bound_used,
                    })
                }
                Ok(None) => {}
            }
        }
    }
    Ok(MinorsNtf {
        all_ntf: true,
        rule,
        failing: None,
        minors_checked: minors.len(),
        components_checked: order.len(),
        max_bound_used,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

/// Outcome of one "verify the hypotheses, then test the conclusion" check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub name: String,
    pub status: CheckStatus,
    /// The conclusion was tested although a hypothesis could not be
    /// certified (proper minors not shown NTF).
    pub conditional: bool,
    pub detail: String,
}

impl TheoremCheck {
    fn new(name: &str, status: CheckStatus, detail: impl Into<String>) -> Self {
        TheoremCheck { name: name.to_owned(), status, conditional: false, detail: detail.into() }
    }

    fn not_applicable(name: &str, reason: impl Into<String>) -> Self {
        Self::new(name, CheckStatus::NotApplicable, reason)
    }

    fn verdict(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        Self::new(name, if ok { CheckStatus::Pass } else { CheckStatus::Fail }, detail)
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

pub const COLON_EQUIVALENCE: &str = "colon-equivalence";
pub const ONSET_LOWER_BOUND: &str = "onset-lower-bound";
pub const POWERS_REDUCE: &str = "powers-reduce";
pub const UNMIXED_PACKING_NTF: &str = "unmixed-packing-ntf";
pub const GOOD_EDGE: &str = "good-edge";
pub const EMBEDDED_AT_BETA1_PLUS_1: &str = "embedded-at-beta1-plus-1";

/// Both sides of the colon equivalence for one `(Y, t)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonEquivalence {
    pub t: usize,
    pub y: VarSet,
    /// The maximal ideal is associated to `I^t`.
    pub maximal_in_power: bool,
    /// The maximal ideal is associated to `(I^t : ∏ Y)`.
    pub maximal_in_colon: bool,
    pub check: TheoremCheck,
}

/// Tests `m ∈ Ass(R/I^t) ⟺ m ∈ Ass(R/(I^t : ∏_{y∈Y} y))`. The result is
/// marked conditional unless `minors_certified`. For `I = m` and `t = 1` the
/// colon is the unit ideal while `m` is minimal, so the check is not
/// applicable there.
pub fn check_colon_equivalence(ideal: &MonomialIdeal, y: VarSet, t: usize, minors_certified: bool) -> Result<ColonEquivalence> {
    let d = ideal.ring_dim();
    if y.is_empty() || y.span() > d {
        return Err(Error::usage("Y must be a nonempty set of ring variables"));
    }
    let m = MonomialPrime::maximal(d)?;
    let power = ideal.power(t)?;
    let lhs = associated_primes(&power)?.contains(&m);
    let colon = power.colon_by_monomial(&Monomial::from_support(d, y))?;
    let rhs = !colon.is_unit() && associated_primes(&colon)?.contains(&m);
    let detail = format!("t={t}, |Y|={}: maximal ideal in Ass(I^t) = {lhs}, in Ass(I^t : y) = {rhs}", y.len());
    let mut check = if t == 1 && *ideal == MonomialIdeal::from_vars(d, 0..d) {
        TheoremCheck::not_applicable(COLON_EQUIVALENCE, format!("I is the maximal ideal; {detail}"))
    } else {
        TheoremCheck::verdict(COLON_EQUIVALENCE, lhs == rhs, detail)
    };
    check.conditional = !minors_certified;
    Ok(ColonEquivalence { t, y, maximal_in_power: lhs, maximal_in_colon: rhs, check })
}

/// With proper minors NTF, no embedded prime appears before `β₁ + 1`.
pub fn check_onset_lower_bound(verdict: &NtfVerdict, beta1: usize, minors_certified: bool) -> TheoremCheck {
    if !minors_certified {
        return TheoremCheck::not_applicable(ONSET_LOWER_BOUND, "proper minors not certified NTF");
    }
    match verdict.onset {
        None => TheoremCheck::verdict(
            ONSET_LOWER_BOUND,
            true,
            format!("no onset up to {}", verdict.certified_ntf_up_to),
        ),
        Some(o) => TheoremCheck::verdict(ONSET_LOWER_BOUND, o > beta1, format!("onset {o}, beta1 + 1 = {}", beta1 + 1)),
    }
}

/// For unmixed König `I` with `I^(t-β₁) = I^(t-β₁)` symbolic, checks
/// `(I^t : g_1 ... g_β₁) = I^(t-β₁)` for the witness matching `g_i`.
/// Powers above `budget.max_power` make the check not applicable.
pub fn check_powersreduce(ideal: &MonomialIdeal, t: usize, budget: &Budget) -> Result<TheoremCheck> {
    let h = Hypergraph::of_ideal(ideal)?;
    if !is_unmixed(ideal)? {
        return Ok(TheoremCheck::not_applicable(POWERS_REDUCE, "not unmixed"));
    }
    let (alpha0, _) = h.alpha0()?;
    let (beta1, matching) = h.beta1()?;
    if alpha0 != beta1 {
        return Ok(TheoremCheck::not_applicable(POWERS_REDUCE, format!("not König (alpha0 {alpha0}, beta1 {beta1})")));
    }
    if t <= beta1 {
        return Ok(TheoremCheck::not_applicable(POWERS_REDUCE, format!("t = {t} is not above beta1 = {beta1}")));
    }
    if t > budget.max_power {
        return Ok(TheoremCheck::not_applicable(POWERS_REDUCE, format!("t = {t} exceeds the power budget")));
    }
    let s = t - beta1;
    let reduced = ideal.power(s)?;
    if s > 1 && symbolic_power(ideal, s)? != reduced {
        return Ok(TheoremCheck::not_applicable(POWERS_REDUCE, format!("I^{s} differs from its symbolic power")));
    }
    let d = ideal.ring_dim();
    let product = matching
        .iter()
        .try_fold(MonomialOf::one(d), |acc, &e| acc.mul(&Monomial::from_support(d, e)))?;
    let colon = ideal.power(t)?.colon_by_monomial(&product)?;
    Ok(TheoremCheck::verdict(POWERS_REDUCE, colon == reduced, format!("(I^{t} : matching product) = I^{s}: {}", colon == reduced)))
}

/// Unmixed, packing, and minors NTF together force no onset.
pub fn check_unmixed_packing_ntf(unmixed: bool, packing: &Packing, minors_certified: bool, verdict: &NtfVerdict) -> TheoremCheck {
    if !unmixed {
        return TheoremCheck::not_applicable(UNMIXED_PACKING_NTF, "not unmixed");
    }
    if !packing.holds {
        return TheoremCheck::not_applicable(UNMIXED_PACKING_NTF, "packing fails");
    }
    if !minors_certified {
        return TheoremCheck::not_applicable(UNMIXED_PACKING_NTF, "proper minors not certified NTF");
    }
    TheoremCheck::verdict(UNMIXED_PACKING_NTF, verdict.onset.is_none(), onset_text(verdict))
}

fn onset_text(verdict: &NtfVerdict) -> String {
    match verdict.onset {
        None => format!("no onset up to {}", verdict.certified_ntf_up_to),
        Some(o) => format!("onset at {o}"),
    }
}

/// First generator `g` (canonical order) meeting every minimal prime in
/// exactly one variable.
pub fn find_good_edge(ideal: &MonomialIdeal) -> Result<Option<Monomial>> {
    let min = minimal_primes(ideal)?;
    Ok(good_edge_among(ideal, &min))
}

pub(crate) fn good_edge_among(ideal: &MonomialIdeal, min: &[MonomialPrime]) -> Option<Monomial> {
    ideal
        .generators()
        .iter()
        .find(|g| min.iter().all(|p| (g.support() & p.vars()).len() == 1))
        .cloned()
}

/// A good edge together with NTF minors forces no onset.
pub fn check_good_edge(good_edge: Option<&Monomial>, minors_certified: bool, verdict: &NtfVerdict) -> TheoremCheck {
    if good_edge.is_none() {
        return TheoremCheck::not_applicable(GOOD_EDGE, "no good edge");
    }
    if !minors_certified {
        return TheoremCheck::not_applicable(GOOD_EDGE, "proper minors not certified NTF");
    }
    TheoremCheck::verdict(GOOD_EDGE, verdict.onset.is_none(), onset_text(verdict))
}

/// For a connected hypergraph without singleton edges that uses every
/// variable, fails packing, and has NTF proper minors: the onset is exactly
/// `β₁ + 1` and the only embedded prime there is the maximal ideal.
pub fn check_embedded_at_beta1_plus_1(
    h: &Hypergraph,
    beta1: usize,
    packing: &Packing,
    minors_certified: bool,
    verdict: &NtfVerdict,
) -> TheoremCheck {
    let name = EMBEDDED_AT_BETA1_PLUS_1;
    if !minors_certified {
        return TheoremCheck::not_applicable(name, "proper minors not certified NTF");
    }
    if packing.holds {
        return TheoremCheck::not_applicable(name, "packing holds");
    }
    if !h.is_connected() {
        return TheoremCheck::not_applicable(name, "hypergraph is disconnected");
    }
    if !h.isolated_vertices().is_empty() {
        return TheoremCheck::not_applicable(name, "hypergraph has isolated vertices");
    }
    if h.vertices().len() != h.n_vertices() {
        return TheoremCheck::not_applicable(name, "some variables lie in no edge");
    }
    let target = beta1 + 1;
    if verdict.per_power.len() < target {
        return TheoremCheck::not_applicable(name, format!("powers computed only up to {}", verdict.per_power.len()));
    }
    let m = MonomialPrime::maximal(h.n_vertices()).expect("dimension within range");
    let at_target = verdict.record(target).map(|r| r.embedded == [m]).unwrap_or(false);
    let ok = verdict.onset == Some(target) && at_target;
    let detail = match verdict.onset {
        Some(o) => format!("onset {o}, beta1 + 1 = {target}, only the maximal ideal embedded at {target}: {at_target}"),
        None => format!("no onset up to {}, expected {target}", verdict.certified_ntf_up_to),
    };
    TheoremCheck::verdict(name, ok, detail)
}

//! Full analysis of a square-free monomial ideal: invariants, minors,
//! powers up to a bound, and every theorem check, as one deterministic report.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, Packing};
use crate::ntf::{
    self, all_proper_minors_ntf, bound_for, check_colon_equivalence, check_embedded_at_beta1_plus_1,
    check_good_edge, check_onset_lower_bound, check_powersreduce, check_unmixed_packing_ntf, BoundRule, Budget,
    CheckStatus, MinorsNtf, NtfVerdict, TheoremCheck,
};
use crate::primary::minimal_primes;
use crate::prime::MonomialPrime;
use crate::text::{render_ideal, render_monomial, render_prime, VarNames};
use crate::varset::VarSet;
use crate::{Monomial, MonomialIdeal};

/// Version of the JSON layout of [`AnalysisReport`].
pub const SCHEMA_VERSION: &str = "1.0.0";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisConfig {
    pub rule: BoundRule,
    /// Overrides the bound chosen by `rule`.
    pub bound: Option<usize>,
    pub budget: Budget,
}

/// Singleton edges, unused variables and connected components, recorded
/// before the onset analysis.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Reduction {
    pub isolated_vertices: VarSet,
    pub unused_variables: VarSet,
    /// Vertex sets of the connected components of the non-singleton edges.
    pub components: Vec<VarSet>,
    pub effective_d: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundInfo {
    pub rule: BoundRule,
    pub n: usize,
    pub overridden: bool,
}

/// Range of powers over which the associated primes were observed constant.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableWindow {
    pub from: usize,
    pub to: usize,
    pub primes: Vec<MonomialPrime>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectionError {
    pub section: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema_version: String,
    pub ideal: String,
    pub variables: Vec<String>,
    pub generators: Vec<Monomial>,
    pub d: usize,
    pub reduction: Reduction,
    pub alpha0: usize,
    pub min_cover: VarSet,
    pub beta1: usize,
    pub matching: Vec<VarSet>,
    pub konig: bool,
    pub packing: Packing,
    pub unmixed: bool,
    pub minimal_primes: Vec<MonomialPrime>,
    pub good_edge: Option<Monomial>,
    pub bound: BoundInfo,
    pub minors_ntf: Option<MinorsNtf>,
    pub ntf: Option<NtfVerdict>,
    pub stable_window: Option<StableWindow>,
    pub checks: Vec<TheoremCheck>,
    pub errors: Vec<SectionError>,
}

/// Runs everything on a square-free, proper, nonzero ideal.
///
/// Sections that hit a resource budget are left empty and listed in
/// `errors`; the rest of the report is still filled in.
pub fn analyze(ideal: &MonomialIdeal, names: &VarNames, config: &AnalysisConfig) -> Result<AnalysisReport> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    ideal.require_proper_nonzero()?;
    let h = Hypergraph::of_ideal(ideal)?;
    let d = ideal.ring_dim();
    let mut errors = Vec::new();
    let mut note = |section: &str, e: &Error| {
        errors.push(SectionError { section: section.to_owned(), message: e.to_string() });
    };

    let core = h.without_isolated();
    let reduction = Reduction {
        isolated_vertices: h.isolated_vertices(),
        unused_variables: VarSet::full(d) - h.vertices(),
        components: core.connected_components().iter().map(Hypergraph::vertices).collect(),
        effective_d: ntf::effective_dim(&h),
    };

    let (alpha0, min_cover) = h.alpha0()?;
    let (beta1, matching) = h.beta1()?;
    let min = minimal_primes(ideal)?;
    let unmixed = min.windows(2).all(|w| w[0].height() == w[1].height());
    let good_edge = ntf::good_edge_among(ideal, &min);

    let packing = match ntf::check_minor_budget(&h, &config.budget).and_then(|_| h.packing()) {
        Ok(p) => p,
        Err(e) if e.is_resource() => {
            note("packing", &e);
            Packing { holds: false, failing_minor: None }
        }
        Err(e) => return Err(e),
    };

    let (n, overridden) = match config.bound {
        Some(n) => (n, true),
        None => match bound_for(&h, config.rule, &config.budget) {
            Ok(n) => (n, false),
            Err(e) if e.is_resource() => {
                note("bound", &e);
                (ntf::dimension_bound(&h), false)
            }
            Err(e) => return Err(e),
        },
    };
    let bound = BoundInfo { rule: config.rule, n, overridden };

    let minors_ntf = match all_proper_minors_ntf(&h, config.rule, &config.budget) {
        Ok(m) => Some(m),
        Err(e) if e.error.is_resource() => {
            note("minors_ntf", &e.error);
            None
        }
        Err(e) => return Err(e.error),
    };
    let certified = minors_ntf.as_ref().is_some_and(|m| m.all_ntf);

    let ntf = match ntf::ntf_verdict(ideal, n, &config.budget) {
        Ok(v) => Some(v),
        Err(e) if e.error.is_resource() => {
            note("ntf", &e.error);
            Some(*e.partial)
        }
        Err(e) => return Err(e.error),
    };
    let stable_window = ntf.as_ref().and_then(stable_window);

    let mut checks = Vec::new();
    if let Some(v) = &ntf {
        for t in 1..=v.per_power.len() {
            checks.push(check_colon_equivalence(ideal, VarSet::full(d), t, certified)?.check);
        }
        checks.push(check_onset_lower_bound(v, beta1, certified));
    }
    let reduce_t = beta1 + 2;
    match check_powersreduce(ideal, reduce_t, &config.budget) {
        Ok(c) => checks.push(c),
        Err(e) if e.is_resource() => note("powers-reduce", &e),
        Err(e) => return Err(e),
    }
    if let Some(v) = &ntf {
        checks.push(check_unmixed_packing_ntf(unmixed, &packing, certified, v));
        checks.push(check_good_edge(good_edge.as_ref(), certified, v));
        checks.push(check_embedded_at_beta1_plus_1(&h, beta1, &packing, certified, v));
    }

    Ok(AnalysisReport {
        schema_version: SCHEMA_VERSION.to_owned(),
        ideal: render_ideal(ideal, names),
        variables: names.names().to_vec(),
        generators: ideal.generators().to_vec(),
        d,
        reduction,
        alpha0,
        min_cover,
        beta1,
        matching,
        konig: alpha0 == beta1,
        packing,
        unmixed,
        minimal_primes: min,
        good_edge,
        bound,
        minors_ntf,
        ntf,
        stable_window,
        checks,
        errors,
    })
}

fn stable_window(v: &NtfVerdict) -> Option<StableWindow> {
    let last = v.per_power.last()?;
    let from = v
        .per_power
        .iter()
        .rev()
        .take_while(|r| r.ass == last.ass)
        .last()
        .map_or(last.t, |r| r.t);
    Some(StableWindow { from, to: last.t, primes: last.ass.clone() })
}

impl AnalysisReport {
    pub fn names(&self) -> VarNames {
        VarNames::new(self.variables.clone()).unwrap_or_else(|_| VarNames::standard(self.d))
    }

    /// Re-checks the report's own claims against fresh computations:
    /// König agrees with the two invariants, the cover covers, the matching
    /// is a matching, and the good edge is a generator meeting every
    /// minimal prime once.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::usage(format!("inconsistent report: {what}")));
        let ideal = MonomialIdeal::minimalize(self.d, self.generators.clone())?;
        let h = Hypergraph::of_ideal(&ideal)?;
        if self.konig != (self.alpha0 == self.beta1) {
            return bad("konig flag");
        }
        if self.min_cover.len() != self.alpha0 || !h.edges().iter().all(|e| e.intersects(self.min_cover)) {
            return bad("minimum cover");
        }
        if self.matching.len() != self.beta1
            || !self.matching.iter().all(|e| h.edges().contains(e))
            || self.matching.iter().enumerate().any(|(i, a)| self.matching[i + 1..].iter().any(|b| a.intersects(*b)))
        {
            return bad("matching");
        }
        if let Some(g) = &self.good_edge {
            if !ideal.generators().contains(g)
                || !self.minimal_primes.iter().all(|p| (g.support() & p.vars()).len() == 1)
            {
                return bad("good edge");
            }
        }
        if let Some(v) = &self.ntf {
            if let Some(o) = v.onset {
                if v.record(o).is_none_or(|r| r.embedded.is_empty())
                    || v.per_power[..o - 1].iter().any(|r| !r.embedded.is_empty())
                {
                    return bad("onset");
                }
            }
        }
        Ok(())
    }

    /// Human-readable table.
    pub fn to_text(&self) -> String {
        let names = self.names();
        let set = |s: VarSet| s.iter().map(|v| names.name(v)).collect::<Vec<_>>().join(" ");
        let prime_list = |ps: &[MonomialPrime]| {
            if ps.is_empty() {
                "-".to_owned()
            } else {
                ps.iter().map(|p| render_prime(p, &names)).collect::<Vec<_>>().join(", ")
            }
        };
        let yes = |b: bool| if b { "yes" } else { "no" };
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "ideal        {}", self.ideal);
        let _ = writeln!(w, "variables    {}", self.d);
        let r = &self.reduction;
        let _ = writeln!(
            w,
            "reduction    effective d {}, isolated [{}], unused [{}], {} component(s)",
            r.effective_d,
            set(r.isolated_vertices),
            set(r.unused_variables),
            r.components.len()
        );
        let _ = writeln!(w, "alpha0       {}  cover [{}]", self.alpha0, set(self.min_cover));
        let matching: Vec<String> = self.matching.iter().map(|e| format!("{{{}}}", set(*e))).collect();
        let _ = writeln!(w, "beta1        {}  matching {}", self.beta1, matching.join(" "));
        let _ = writeln!(w, "konig        {}", yes(self.konig));
        let packing = match (&self.packing.holds, &self.packing.failing_minor) {
            (true, _) => "yes".to_owned(),
            (false, Some(s)) if s.is_identity() => "no (fails konig itself)".to_owned(),
            (false, Some(s)) => format!("no (minor: delete [{}], contract [{}])", set(s.delete), set(s.contract)),
            (false, None) => "unknown".to_owned(),
        };
        let _ = writeln!(w, "packing      {packing}");
        let _ = writeln!(w, "unmixed      {}", yes(self.unmixed));
        let _ = writeln!(w, "min primes   {}", prime_list(&self.minimal_primes));
        let good = self.good_edge.as_ref().map_or("none".to_owned(), |g| render_monomial(g, &names));
        let _ = writeln!(w, "good edge    {good}");
        let rule = match self.bound.rule {
            BoundRule::Dimension => "ceil((d+1)/2)",
            BoundRule::BetaStarPlusOne => "beta* + 1",
        };
        let src = if self.bound.overridden { "given" } else { rule };
        let _ = writeln!(w, "bound N      {} ({src})", self.bound.n);
        match &self.minors_ntf {
            Some(m) if m.all_ntf => {
                let _ = writeln!(
                    w,
                    "minors NTF   yes, certified up to their bounds (max {}), {} minors",
                    m.max_bound_used, m.minors_checked
                );
            }
            Some(m) => {
                let f = m.failing.as_ref().expect("failing minor recorded");
                let _ = writeln!(
                    w,
                    "minors NTF   no (delete [{}], contract [{}] has onset {})",
                    set(f.spec.delete),
                    set(f.spec.contract),
                    f.onset
                );
            }
            None => {
                let _ = writeln!(w, "minors NTF   not computed");
            }
        }
        if let Some(v) = &self.ntf {
            let _ = writeln!(w);
            let _ = writeln!(w, "  t  gens  I^t = I^(t)  Ass(R/I^t)");
            for rec in &v.per_power {
                let _ = writeln!(
                    w,
                    "{:>3}  {:>4}  {:<11}  {}",
                    rec.t,
                    rec.generators,
                    yes(rec.symbolic_equal),
                    prime_list(&rec.ass)
                );
                if !rec.embedded.is_empty() {
                    let _ = writeln!(w, "{:>23}embedded: {}", "", prime_list(&rec.embedded));
                }
            }
            let _ = writeln!(w);
            match v.onset {
                Some(o) => {
                    let _ = writeln!(w, "onset        {o}");
                }
                None => {
                    let _ = writeln!(w, "onset        none; certified NTF up to {}", v.certified_ntf_up_to);
                }
            }
        }
        if let Some(s) = &self.stable_window {
            let _ = writeln!(w, "stable Ass   t = {}..{}: {}", s.from, s.to, prime_list(&s.primes));
        }
        let _ = writeln!(w);
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::NotApplicable => "n/a",
            };
            let cond = if c.conditional { " (conditional)" } else { "" };
            let _ = writeln!(w, "{:<26} {status}{cond}  {}", c.name, c.detail);
        }
        for e in &self.errors {
            let _ = writeln!(w, "error in {}: {}", e.section, e.message);
        }
        out
    }
}

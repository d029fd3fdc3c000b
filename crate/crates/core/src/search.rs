//! Exhaustive search over small simple hypergraphs for a chosen property.
//!
//! Candidates on `d` vertices are subsets of the admissible edges (all
//! vertex sets with size in the configured range), visited in increasing
//! bit-mask order. Every vertex must lie in some edge. With permutation
//! dedup, a candidate is kept only when it is the smallest member of its
//! isomorphism class under all `d!` relabelings.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::ntf::{
    all_proper_minors_ntf, check_embedded_at_beta1_plus_1, dimension_bound, ntf_verdict, BoundRule, Budget,
    TheoremCheck,
};
use crate::primary::minimal_primes;
use crate::varset::VarSet;
use crate::Monomial;

/// Largest vertex count the search accepts (the permutation scan is `d!`).
pub const MAX_SEARCH_VERTICES: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// König fails but every proper minor is König.
    MinimallyNonPacking,
    /// The first embedded prime appears at `β₁ + 1`.
    OnsetEqualsBeta1PlusOne,
    /// Some power up to the dimension bound has an embedded prime.
    NtfViolation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Dedup {
    None,
    #[default]
    PermutationCanonical,
}

/// Position to restart a search from: vertex count and edge mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResumeToken {
    pub d: usize,
    pub mask: u64,
}

impl fmt::Display for ResumeToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.d, self.mask)
    }
}

impl FromStr for ResumeToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::usage(format!("resume token {s:?} is not of the form d:mask"));
        let (d, mask) = s.split_once(':').ok_or_else(bad)?;
        Ok(ResumeToken { d: d.trim().parse().map_err(|_| bad())?, mask: mask.trim().parse().map_err(|_| bad())? })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub d_max: usize,
    pub edge_size_min: usize,
    pub edge_size_max: usize,
    /// Largest number of edges; `None` means no limit.
    pub max_edges: Option<usize>,
    pub dedup: Dedup,
    pub predicate: Predicate,
    /// Drop unmixed candidates from the output.
    pub skip_unmixed: bool,
    /// Run the onset-at-`β₁ + 1` check on every hit.
    pub check_onset: bool,
    /// Stop after this many candidates have been evaluated.
    pub max_candidates: Option<u64>,
    pub resume: Option<ResumeToken>,
    pub budget: Budget,
}

impl SearchConfig {
    pub fn new(d_max: usize, edge_sizes: (usize, usize), predicate: Predicate) -> Self {
        SearchConfig {
            d_max,
            edge_size_min: edge_sizes.0,
            edge_size_max: edge_sizes.1,
            max_edges: None,
            dedup: Dedup::PermutationCanonical,
            predicate,
            skip_unmixed: false,
            check_onset: true,
            max_candidates: None,
            resume: None,
            budget: Budget::default(),
        }
    }

    fn validate(&self) -> Result<()> {
        if self.d_max == 0 {
            return Err(Error::usage("d_max must be at least 1"));
        }
        if self.dedup == Dedup::PermutationCanonical && self.d_max > MAX_SEARCH_VERTICES {
            return Err(Error::Resource {
                what: "search vertices",
                needed: self.d_max as u64,
                limit: MAX_SEARCH_VERTICES as u64,
            });
        }
        if self.edge_size_min == 0 || self.edge_size_min > self.edge_size_max {
            return Err(Error::usage("edge sizes must satisfy 1 <= min <= max"));
        }
        Ok(())
    }
}

/// Summary attached to every hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchHit {
    /// Position in the enumeration.
    pub token: ResumeToken,
    pub hypergraph: Hypergraph,
    pub alpha0: usize,
    pub beta1: usize,
    pub unmixed: bool,
    pub good_edge: Option<Monomial>,
    pub onset: Option<usize>,
    pub onset_check: Option<TheoremCheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub hits: Vec<SearchHit>,
    pub candidates_evaluated: u64,
    /// Set when the search stopped on its budget; pass it back to continue.
    pub resume: Option<ResumeToken>,
}

/// Runs the search. Hits are ordered by `(d, mask)` no matter how many
/// worker threads evaluate them.
pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    let mut hits = Vec::new();
    let mut evaluated = 0u64;
    let start = cfg.resume.unwrap_or(ResumeToken { d: 1, mask: 0 });
    for d in start.d.max(1)..=cfg.d_max {
        let edges = admissible_edges(d, cfg.edge_size_min, cfg.edge_size_max);
        if edges.len() > 63 {
            return Err(Error::Resource { what: "admissible edges", needed: edges.len() as u64, limit: 63 });
        }
        let perms = if cfg.dedup == Dedup::PermutationCanonical { permutations(d) } else { Vec::new() };
        let first = if d == start.d { start.mask.max(1) } else { 1 };
        let end = 1u64 << edges.len();

        let mut mask = first;
        while mask < end {
            // Collect a batch of structurally valid candidates, then evaluate
            // the batch in parallel.
            let mut batch: Vec<(u64, Hypergraph)> = Vec::new();
            while mask < end && batch.len() < 4096 {
                if let Some(budget) = cfg.max_candidates {
                    if evaluated + batch.len() as u64 >= budget {
                        break;
                    }
                }
                if let Some(h) = candidate(d, &edges, mask, cfg, &perms) {
                    batch.push((mask, h));
                }
                mask += 1;
            }
            evaluated += batch.len() as u64;
            let results: Vec<Result<Option<SearchHit>>> = batch
                .into_par_iter()
                .map(|(m, h)| evaluate(ResumeToken { d, mask: m }, h, cfg))
                .collect();
            for r in results {
                if let Some(hit) = r? {
                    hits.push(hit);
                }
            }
            if mask < end && cfg.max_candidates.is_some_and(|b| evaluated >= b) {
                return Ok(SearchOutcome { hits, candidates_evaluated: evaluated, resume: Some(ResumeToken { d, mask }) });
            }
        }
    }
    Ok(SearchOutcome { hits, candidates_evaluated: evaluated, resume: None })
}

/// All subsets of `0..d` with size in `[lo, hi]`, in [`VarSet`] order.
pub fn admissible_edges(d: usize, lo: usize, hi: usize) -> Vec<VarSet> {
    let mut out: Vec<VarSet> = (0u128..(1u128 << d))
        .map(VarSet::from_bits)
        .filter(|s| (lo..=hi).contains(&s.len()))
        .collect();
    out.sort();
    out
}

fn candidate(d: usize, edges: &[VarSet], mask: u64, cfg: &SearchConfig, perms: &[Vec<usize>]) -> Option<Hypergraph> {
    if cfg.max_edges.is_some_and(|k| mask.count_ones() as usize > k) {
        return None;
    }
    let chosen: Vec<VarSet> = (0..edges.len()).filter(|i| mask >> i & 1 == 1).map(|i| edges[i]).collect();
    let used = chosen.iter().fold(VarSet::EMPTY, |acc, &e| acc | e);
    if used != VarSet::full(d) {
        return None;
    }
    for (i, a) in chosen.iter().enumerate() {
        if chosen[i + 1..].iter().any(|b| a.is_subset(*b) || b.is_subset(*a)) {
            return None;
        }
    }
    let h = Hypergraph::new(d, chosen).ok()?;
    if !perms.is_empty() && canonical_form(&h, perms) != *h.edges() {
        return None;
    }
    Some(h)
}

/// Smallest sorted edge list over all relabelings in `perms`.
pub fn canonical_form(h: &Hypergraph, perms: &[Vec<usize>]) -> Vec<VarSet> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<VarSet> = h.edges().iter().map(|e| e.iter().map(|v| p[v]).collect()).collect();
            e.sort();
            e
        })
        .min()
        .unwrap_or_else(|| h.edges().to_vec())
}

/// All permutations of `0..d` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..d).collect();
    loop {
        out.push(p.clone());
        // Next permutation in lexicographic order.
        let Some(i) = (1..d).rev().find(|&i| p[i - 1] < p[i]) else { return out };
        let j = (i..d).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

fn proper_minors_konig(h: &Hypergraph) -> Result<bool> {
    for (_, m) in h.distinct_proper_minors() {
        if !m.konig()? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn evaluate(token: ResumeToken, h: Hypergraph, cfg: &SearchConfig) -> Result<Option<SearchHit>> {
    let (beta1, _) = h.beta1()?;
    let matched = match cfg.predicate {
        Predicate::MinimallyNonPacking => !h.konig()? && proper_minors_konig(&h)?,
        Predicate::OnsetEqualsBeta1PlusOne => {
            let n = dimension_bound(&h).max(beta1 + 1);
            ntf_verdict(&h.edge_ideal(), n, &cfg.budget)?.onset == Some(beta1 + 1)
        }
        Predicate::NtfViolation => ntf_verdict(&h.edge_ideal(), dimension_bound(&h), &cfg.budget)?.onset.is_some(),
    };
    if !matched {
        return Ok(None);
    }
    let ideal = h.edge_ideal::<u16>();
    let min = minimal_primes(&ideal)?;
    let unmixed = min.windows(2).all(|w| w[0].height() == w[1].height());
    if cfg.skip_unmixed && unmixed {
        return Ok(None);
    }
    let good_edge = crate::ntf::good_edge_among(&ideal, &min);
    let (alpha0, _) = h.alpha0()?;
    let n = dimension_bound(&h).max(beta1 + 1);
    let verdict = ntf_verdict(&ideal, n, &cfg.budget)?;
    let onset_check = if cfg.check_onset {
        let minors = all_proper_minors_ntf(&h, BoundRule::Dimension, &cfg.budget)?;
        Some(check_embedded_at_beta1_plus_1(&h, beta1, &h.packing()?, minors.all_ntf, &verdict))
    } else {
        None
    };
    Ok(Some(SearchHit {
        token,
        hypergraph: h,
        alpha0,
        beta1,
        unmixed,
        good_edge,
        onset: verdict.onset,
        onset_check,
    }))
}

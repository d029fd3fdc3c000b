//! Simple hypergraphs (clutters) and their edge ideals.
//!
//! Edges are bit sets over the vertex range. Minors keep the original vertex
//! indexing, so a minor's edge ideal lives in the same polynomial ring as the
//! ideal it came from.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::IdealOf;
use crate::monomial::MonomialOf;
use crate::varset::{VarSet, MAX_VARS};

/// A simple hypergraph: no edge contains another, no edge is empty.
///
/// A hypergraph with no edges stands for the zero ideal. Edges are kept
/// sorted, so derived equality compares canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr", into = "HypergraphRepr")]
pub struct Hypergraph {
    n_vertices: usize,
    edges: Vec<VarSet>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphRepr {
    n_vertices: usize,
    edges: Vec<VarSet>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;
    fn try_from(r: HypergraphRepr) -> Result<Self> {
        Hypergraph::new(r.n_vertices, r.edges)
    }
}

impl From<Hypergraph> for HypergraphRepr {
    fn from(h: Hypergraph) -> Self {
        HypergraphRepr { n_vertices: h.n_vertices, edges: h.edges }
    }
}

impl Hypergraph {
    /// Validates and canonicalizes an edge family. Duplicate edges are merged;
    /// an edge strictly containing another is rejected.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let edges = Self::checked_edges(n_vertices, edges)?;
        for (i, a) in edges.iter().enumerate() {
            if let Some(b) = edges.iter().enumerate().find(|&(j, b)| j != i && b.is_subset(*a)) {
                return Err(Error::usage(format!(
                    "hypergraph is not simple: edge {:?} contains edge {:?}",
                    a, b.1
                )));
            }
        }
        Ok(Hypergraph { n_vertices, edges })
    }

    /// The clutter of inclusion-minimal members of `edges`.
    pub fn minimal_of(n_vertices: usize, edges: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        let edges = Self::checked_edges(n_vertices, edges)?;
        Ok(Hypergraph { n_vertices, edges: minimal_sets(edges) })
    }

    fn checked_edges(n_vertices: usize, edges: impl IntoIterator<Item = VarSet>) -> Result<Vec<VarSet>> {
        if n_vertices > MAX_VARS {
            return Err(Error::Resource {
                what: "vertex count",
                needed: n_vertices as u64,
                limit: MAX_VARS as u64,
            });
        }
        let mut edges: Vec<VarSet> = edges.into_iter().collect();
        for e in &edges {
            if e.is_empty() {
                return Err(Error::usage("empty edge"));
            }
            if e.span() > n_vertices {
                return Err(Error::usage(format!(
                    "edge {e:?} uses a vertex outside 0..{n_vertices}"
                )));
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(edges)
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &[VarSet] {
        &self.edges
    }

    pub fn has_edges(&self) -> bool {
        !self.edges.is_empty()
    }

    /// Vertices that lie in at least one edge.
    pub fn vertices(&self) -> VarSet {
        self.edges.iter().fold(VarSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn edge_ideal<E: Exponent>(&self) -> IdealOf<E> {
        IdealOf::minimalize_unchecked(
            self.n_vertices,
            self.edges
                .iter()
                .map(|&e| MonomialOf::from_support(self.n_vertices, e))
                .collect(),
        )
    }

    /// Inverse of [`Hypergraph::edge_ideal`] on square-free ideals.
    pub fn of_ideal<E: Exponent>(ideal: &IdealOf<E>) -> Result<Self> {
        if !ideal.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        if ideal.is_unit() {
            return Err(Error::Degenerate("unit"));
        }
        // Minimal square-free generators already form a clutter.
        Self::new(ideal.ring_dim(), ideal.generators().iter().map(MonomialOf::support))
    }

    fn require_edges(&self) -> Result<()> {
        if self.edges.is_empty() {
            Err(Error::Degenerate("zero"))
        } else {
            Ok(())
        }
    }

    pub fn apply_minor(&self, spec: &MinorSpec) -> Result<MinorResult> {
        if spec.delete.span() > self.n_vertices || spec.contract.span() > self.n_vertices {
            return Err(Error::usage("minor specification references vertices out of range"));
        }
        let mut shrunk = Vec::with_capacity(self.edges.len());
        for &e in &self.edges {
            if e.intersects(spec.delete) {
                continue;
            }
            let rest = e - spec.contract;
            if rest.is_empty() {
                return Ok(MinorResult::UnitIdeal);
            }
            shrunk.push(rest);
        }
        if shrunk.is_empty() {
            return Ok(MinorResult::ZeroIdeal);
        }
        Ok(MinorResult::Proper(Hypergraph::minimal_of(self.n_vertices, shrunk)?))
    }

    /// `H \ v`: drop `v` and every edge through it.
    pub fn delete_vertex(&self, v: usize) -> Result<MinorResult> {
        self.apply_minor(&MinorSpec { delete: VarSet::singleton(v), contract: VarSet::EMPTY })
    }

    /// `H / v`: remove `v` from every edge.
    pub fn contract_vertex(&self, v: usize) -> Result<MinorResult> {
        self.apply_minor(&MinorSpec { delete: VarSet::EMPTY, contract: VarSet::singleton(v) })
    }

    /// Every keep/delete/contract assignment over all `n_vertices` vertices,
    /// `3^n` items in a fixed order: the assignment for vertex `i` is digit `i`
    /// (least significant first) of the item index in base 3, with
    /// 0 = keep, 1 = delete, 2 = contract.
    pub fn enumerate_minors(&self) -> impl Iterator<Item = (MinorSpec, MinorResult)> + '_ {
        assert!(self.n_vertices <= 40, "3^n minor enumeration limited to 40 vertices");
        let total = 3u128.pow(self.n_vertices as u32);
        (0..total).map(move |index| {
            let spec = MinorSpec::from_base3(index, self.n_vertices);
            let result = self.apply_minor(&spec).expect("spec within vertex range");
            (spec, result)
        })
    }

    /// Distinct proper minors (as hypergraphs), each with the first spec that
    /// produced it. Only vertices lying in some edge are assigned, since
    /// deleting or contracting an unused vertex changes nothing. Degenerate
    /// minors are skipped and `self` is not included.
    pub fn distinct_proper_minors(&self) -> Vec<(MinorSpec, Hypergraph)> {
        let active: Vec<usize> = self.vertices().iter().collect();
        assert!(active.len() <= 40, "3^n minor enumeration limited to 40 vertices");
        let total = 3u128.pow(active.len() as u32);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for index in 1..total {
            let spec = MinorSpec::from_base3_on(index, &active);
            if let Ok(MinorResult::Proper(h)) = self.apply_minor(&spec) {
                if h != *self && seen.insert(h.clone()) {
                    out.push((spec, h));
                }
            }
        }
        out
    }

    /// All inclusion-minimal vertex covers in canonical order (by size, then
    /// lexicographically).
    pub fn minimal_transversals(&self) -> Result<Vec<VarSet>> {
        self.require_edges()?;
        let mut out = Vec::new();
        transversal_search(&self.edges, VarSet::EMPTY, VarSet::EMPTY, &mut out);
        out.sort_unstable_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
        out.dedup();
        Ok(out)
    }

    /// Minimum vertex cover size with a witness cover.
    pub fn alpha0(&self) -> Result<(usize, VarSet)> {
        self.require_edges()?;
        let greedy = greedy_cover(&self.edges);
        let mut best = (greedy.len(), greedy);
        min_cover_search(&self.edges, VarSet::EMPTY, VarSet::EMPTY, &mut best);
        Ok(best)
    }

    /// Matching number with a witness set of pairwise disjoint edges.
    pub fn beta1(&self) -> Result<(usize, Vec<VarSet>)> {
        self.require_edges()?;
        let mut best = greedy_matching(&self.edges);
        let mut current = Vec::new();
        let min_size = self.edges.iter().map(|e| e.len()).min().unwrap_or(1);
        max_matching_search(&self.edges, 0, self.vertices(), min_size, &mut current, &mut best);
        best.sort_unstable();
        Ok((best.len(), best))
    }

    pub fn konig(&self) -> Result<bool> {
        Ok(self.alpha0()?.0 == self.beta1()?.0)
    }

    /// Packing holds iff `self` and every proper minor satisfy König. On
    /// failure the witness is the first failing minor; the empty spec means
    /// `self` fails.
    pub fn packing(&self) -> Result<Packing> {
        if !self.konig()? {
            return Ok(Packing { holds: false, failing_minor: Some(MinorSpec::identity()) });
        }
        for (spec, minor) in self.distinct_proper_minors() {
            if !minor.konig()? {
                return Ok(Packing { holds: false, failing_minor: Some(spec) });
            }
        }
        Ok(Packing { holds: true, failing_minor: None })
    }

    /// Edge-connected components, ordered by smallest vertex. Vertices in no
    /// edge belong to no component.
    pub fn connected_components(&self) -> Vec<Hypergraph> {
        let mut groups: Vec<(VarSet, Vec<VarSet>)> = Vec::new();
        for &e in &self.edges {
            let mut merged_vertices = e;
            let mut merged_edges = vec![e];
            groups.retain(|(verts, edges)| {
                if verts.intersects(e) {
                    merged_vertices |= *verts;
                    merged_edges.extend_from_slice(edges);
                    false
                } else {
                    true
                }
            });
            groups.push((merged_vertices, merged_edges));
        }
        groups.sort_unstable_by_key(|(verts, _)| verts.first());
        groups
            .into_iter()
            .map(|(_, edges)| Hypergraph::new(self.n_vertices, edges).expect("subfamily of a clutter"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Vertices `v` with `{v}` an edge.
    pub fn isolated_vertices(&self) -> VarSet {
        self.edges.iter().filter(|e| e.len() == 1).fold(VarSet::EMPTY, |acc, &e| acc | e)
    }

    /// The hypergraph without its singleton edges.
    pub fn without_isolated(&self) -> Hypergraph {
        Hypergraph {
            n_vertices: self.n_vertices,
            edges: self.edges.iter().copied().filter(|e| e.len() > 1).collect(),
        }
    }

    /// Relabels the vertices in use to `0..k`, preserving their order.
    pub fn compacted(&self) -> Hypergraph {
        let active: Vec<usize> = self.vertices().iter().collect();
        let mut map = [usize::MAX; MAX_VARS];
        for (new, &old) in active.iter().enumerate() {
            map[old] = new;
        }
        self.relabeled(active.len(), |v| map[v])
    }

    /// Image under a vertex map into a ring with `n_vertices` vertices.
    pub fn relabeled(&self, n_vertices: usize, map: impl Fn(usize) -> usize) -> Hypergraph {
        let edges = self.edges.iter().map(|e| e.iter().map(&map).collect());
        Hypergraph::new(n_vertices, edges).expect("relabeling a clutter by an injection")
    }
}

/// A deletion/contraction assignment. The two sets are disjoint.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct MinorSpec {
    pub delete: VarSet,
    pub contract: VarSet,
}

impl MinorSpec {
    pub fn new(delete: VarSet, contract: VarSet) -> Result<Self> {
        if delete.intersects(contract) {
            return Err(Error::usage("a vertex cannot be both deleted and contracted"));
        }
        Ok(MinorSpec { delete, contract })
    }

    pub fn identity() -> Self {
        MinorSpec::default()
    }

    pub fn is_identity(&self) -> bool {
        self.delete.is_empty() && self.contract.is_empty()
    }

    fn from_base3(index: u128, n: usize) -> Self {
        let all: Vec<usize> = (0..n).collect();
        Self::from_base3_on(index, &all)
    }

    fn from_base3_on(mut index: u128, vertices: &[usize]) -> Self {
        let mut spec = MinorSpec::identity();
        for &v in vertices {
            match index % 3 {
                1 => spec.delete.insert(v),
                2 => spec.contract.insert(v),
                _ => {}
            }
            index /= 3;
        }
        spec
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum MinorResult {
    Proper(Hypergraph),
    ZeroIdeal,
    UnitIdeal,
}

impl MinorResult {
    pub fn proper(&self) -> Option<&Hypergraph> {
        match self {
            MinorResult::Proper(h) => Some(h),
            _ => None,
        }
    }

    /// Applies a further minor. Degenerate results are absorbing: deleting or
    /// contracting in the zero or unit ideal leaves it unchanged.
    pub fn then(&self, spec: &MinorSpec) -> Result<MinorResult> {
        match self {
            MinorResult::Proper(h) => h.apply_minor(spec),
            other => Ok(other.clone()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Packing {
    pub holds: bool,
    pub failing_minor: Option<MinorSpec>,
}

pub(crate) fn minimal_sets(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_unstable_by_key(|s| s.len());
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_unstable();
    kept
}

/// Uncovered edge with the fewest branchable vertices, if any.
fn pick_uncovered(edges: &[VarSet], chosen: VarSet, excluded: VarSet) -> Option<VarSet> {
    edges
        .iter()
        .filter(|e| !e.intersects(chosen))
        .map(|&e| e - excluded)
        .min_by_key(|e| e.len())
}

fn has_private_edge(edges: &[VarSet], chosen: VarSet, v: usize) -> bool {
    edges.iter().any(|&e| (e & chosen) == VarSet::singleton(v))
}

// Branches on the vertices of an uncovered edge, excluding earlier siblings
// so each minimal cover is reached along exactly one path. A chosen vertex
// that has lost every private edge can never regain one, so such branches
// are cut.
fn transversal_search(edges: &[VarSet], chosen: VarSet, excluded: VarSet, out: &mut Vec<VarSet>) {
    let Some(branch) = pick_uncovered(edges, chosen, excluded) else {
        out.push(chosen);
        return;
    };
    let mut excluded = excluded;
    for v in branch {
        let next = chosen.with(v);
        if next.iter().all(|u| has_private_edge(edges, next, u)) {
            transversal_search(edges, next, excluded, out);
        }
        excluded.insert(v);
    }
}

fn greedy_cover(edges: &[VarSet]) -> VarSet {
    let mut cover = VarSet::EMPTY;
    while let Some(e) = edges.iter().find(|e| !e.intersects(cover)) {
        // Vertex of this edge hitting the most uncovered edges.
        let v = e
            .iter()
            .max_by_key(|&v| {
                let hits = edges.iter().filter(|f| !f.intersects(cover) && f.contains(v)).count();
                (hits, std::cmp::Reverse(v))
            })
            .expect("edges are non-empty");
        cover.insert(v);
    }
    cover
}

/// Lower bound on the vertices still needed: greedily packed uncovered edges
/// that stay pairwise disjoint once excluded vertices are removed.
fn disjoint_uncovered(edges: &[VarSet], chosen: VarSet, excluded: VarSet) -> Option<usize> {
    let mut used = VarSet::EMPTY;
    let mut count = 0;
    for &e in edges {
        if e.intersects(chosen) {
            continue;
        }
        let avail = e - excluded;
        if avail.is_empty() {
            return None;
        }
        if !avail.intersects(used) {
            used |= avail;
            count += 1;
        }
    }
    Some(count)
}

fn min_cover_search(edges: &[VarSet], chosen: VarSet, excluded: VarSet, best: &mut (usize, VarSet)) {
    let Some(lower) = disjoint_uncovered(edges, chosen, excluded) else {
        return;
    };
    if chosen.len() + lower >= best.0 {
        return;
    }
    let Some(branch) = pick_uncovered(edges, chosen, excluded) else {
        *best = (chosen.len(), chosen);
        return;
    };
    let mut excluded = excluded;
    for v in branch {
        min_cover_search(edges, chosen.with(v), excluded, best);
        excluded.insert(v);
    }
}

fn greedy_matching(edges: &[VarSet]) -> Vec<VarSet> {
    let mut sorted: Vec<VarSet> = edges.to_vec();
    sorted.sort_by_key(|e| e.len());
    let mut used = VarSet::EMPTY;
    let mut out = Vec::new();
    for e in sorted {
        if !e.intersects(used) {
            used |= e;
            out.push(e);
        }
    }
    out
}

fn max_matching_search(
    edges: &[VarSet],
    index: usize,
    available: VarSet,
    min_size: usize,
    current: &mut Vec<VarSet>,
    best: &mut Vec<VarSet>,
) {
    let remaining = edges.len() - index;
    let by_vertices = available.len() / min_size;
    if current.len() + remaining.min(by_vertices) <= best.len() {
        return;
    }
    if index == edges.len() {
        *best = current.clone();
        return;
    }
    let e = edges[index];
    if e.is_subset(available) {
        current.push(e);
        max_matching_search(edges, index + 1, available - e, min_size, current, best);
        current.pop();
    }
    max_matching_search(edges, index + 1, available, min_size, current, best);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[usize]) -> VarSet {
        v.iter().copied().collect()
    }

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| vs(e))).unwrap()
    }

    fn triangle() -> Hypergraph {
        hg(3, &[&[0, 1], &[1, 2], &[0, 2]])
    }

    fn five_cycle_deg3() -> Hypergraph {
        hg(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
    }

    fn six_var() -> Hypergraph {
        hg(6, &[&[0, 1, 2], &[3, 4, 5], &[0, 1, 3], &[1, 2, 5], &[0, 3, 4], &[2, 4, 5]])
    }

    fn brute_alpha0(h: &Hypergraph) -> usize {
        (0u32..1 << h.n_vertices())
            .map(|b| VarSet::from_bits(b as u128))
            .filter(|s| h.edges().iter().all(|e| e.intersects(*s)))
            .map(|s| s.len())
            .min()
            .unwrap()
    }

    fn brute_beta1(h: &Hypergraph) -> usize {
        let m = h.edges().len();
        (0u32..1 << m)
            .filter(|mask| {
                let chosen: Vec<_> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| h.edges()[i]).collect();
                chosen.iter().enumerate().all(|(i, a)| chosen[i + 1..].iter().all(|b| !a.intersects(*b)))
            })
            .map(|mask| mask.count_ones() as usize)
            .max()
            .unwrap()
    }

    #[test]
    fn rejects_non_simple_and_empty() {
        assert!(Hypergraph::new(3, [vs(&[0]), vs(&[0, 1])]).is_err());
        assert!(Hypergraph::new(3, [VarSet::EMPTY]).is_err());
        assert!(Hypergraph::new(2, [vs(&[0, 2])]).is_err());
    }

    #[test]
    fn edge_ideal_round_trip() {
        let h = five_cycle_deg3();
        let i = h.edge_ideal::<u16>();
        assert_eq!(
            i.to_string(),
            "(x1*x2*x3, x1*x2*x5, x1*x4*x5, x2*x3*x4, x3*x4*x5)"
        );
        assert_eq!(Hypergraph::of_ideal(&i).unwrap(), h);
        assert_eq!(triangle().edge_ideal::<u16>().to_string(), "(x1*x2, x1*x3, x2*x3)");
    }

    #[test]
    fn non_square_free_rejected() {
        let sq = triangle().edge_ideal::<u16>().power(2).unwrap();
        assert_eq!(Hypergraph::of_ideal(&sq), Err(Error::NotSquareFree));
    }

    #[test]
    fn deletion_of_five_cycle() {
        let MinorResult::Proper(m) = five_cycle_deg3().delete_vertex(0).unwrap() else {
            panic!("expected proper minor")
        };
        assert_eq!(m.edge_ideal::<u16>().to_string(), "(x2*x3*x4, x3*x4*x5)");
    }

    #[test]
    fn contraction_examples() {
        let MinorResult::Proper(m) = triangle().contract_vertex(0).unwrap() else {
            panic!("expected proper minor")
        };
        assert_eq!(m.edges(), &[vs(&[1]), vs(&[2])]);
        assert_eq!(hg(1, &[&[0]]).contract_vertex(0).unwrap(), MinorResult::UnitIdeal);
        assert_eq!(hg(1, &[&[0]]).delete_vertex(0).unwrap(), MinorResult::ZeroIdeal);
        assert!(MinorSpec::new(vs(&[0]), vs(&[0])).is_err());
    }

    #[test]
    fn enumerate_counts() {
        let single = hg(1, &[&[0]]);
        let items: Vec<_> = single.enumerate_minors().collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].1, MinorResult::Proper(single.clone()));
        assert_eq!(items[1].1, MinorResult::ZeroIdeal);
        assert_eq!(items[2].1, MinorResult::UnitIdeal);
        assert_eq!(triangle().enumerate_minors().count(), 27);
    }

    #[test]
    fn triangle_distinct_minors() {
        // Hand list: deleting one vertex leaves a single edge; contracting one
        // leaves two isolated vertices; mixed or larger minors leave a single
        // vertex.
        let minors: HashSet<Vec<VarSet>> = triangle()
            .distinct_proper_minors()
            .into_iter()
            .map(|(_, h)| h.edges().to_vec())
            .collect();
        let expected: HashSet<Vec<VarSet>> = [
            vec![vs(&[1, 2])],
            vec![vs(&[0, 2])],
            vec![vs(&[0, 1])],
            vec![vs(&[1]), vs(&[2])],
            vec![vs(&[0]), vs(&[2])],
            vec![vs(&[0]), vs(&[1])],
            vec![vs(&[0])],
            vec![vs(&[1])],
            vec![vs(&[2])],
        ]
        .into_iter()
        .collect();
        assert_eq!(minors, expected);
    }

    #[test]
    fn transversals() {
        assert_eq!(triangle().minimal_transversals().unwrap(), vec![vs(&[0, 1]), vs(&[0, 2]), vs(&[1, 2])]);
        assert_eq!(hg(2, &[&[0, 1]]).minimal_transversals().unwrap(), vec![vs(&[0]), vs(&[1])]);
        let six = six_var().minimal_transversals().unwrap();
        assert!(six.contains(&vs(&[0, 2, 4])));
        assert!(six.contains(&vs(&[1, 3, 5])));
        assert!(six.contains(&vs(&[0, 5])));
        assert!(Hypergraph::new(3, []).unwrap().minimal_transversals().is_err());
    }

    #[test]
    fn covers_and_matchings() {
        assert_eq!(triangle().alpha0().unwrap().0, 2);
        assert_eq!(triangle().beta1().unwrap().0, 1);
        let (a, _) = six_var().alpha0().unwrap();
        let (b, witness) = six_var().beta1().unwrap();
        assert_eq!((a, b), (2, 2));
        assert_eq!(witness.len(), 2);
        assert!(!witness[0].intersects(witness[1]));
        assert_eq!(five_cycle_deg3().alpha0().unwrap().0, 2);
        assert_eq!(five_cycle_deg3().beta1().unwrap().0, 1);
    }

    #[test]
    fn packing_examples() {
        assert!(six_var().packing().unwrap().holds);
        let tri = triangle().packing().unwrap();
        assert!(!tri.holds);
        assert_eq!(tri.failing_minor, Some(MinorSpec::identity()));
        assert!(!triangle().konig().unwrap());
        assert!(hg(2, &[&[0, 1]]).packing().unwrap().holds);
    }

    #[test]
    fn components_and_isolated() {
        let h = hg(5, &[&[0, 1], &[1, 2], &[0, 2], &[3, 4]]);
        let comps = h.connected_components();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[1].edges(), &[vs(&[3, 4])]);
        assert_eq!(hg(3, &[&[0], &[1, 2]]).isolated_vertices(), vs(&[0]));
        assert_eq!(triangle().connected_components().len(), 1);
    }

    #[test]
    fn compacted_relabels_in_order() {
        let h = hg(6, &[&[1, 3], &[3, 5]]);
        assert_eq!(h.compacted(), hg(3, &[&[0, 1], &[1, 2]]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
            (1usize..=6).prop_flat_map(|n| {
                prop::collection::vec(1u128..(1u128 << n), 1..=7)
                    .prop_map(move |bits| Hypergraph::minimal_of(n, bits.into_iter().map(VarSet::from_bits)).unwrap())
            })
        }

        proptest! {
            #[test]
            fn alpha_beta_match_brute_force(h in arb_hypergraph()) {
                let (a, cover) = h.alpha0().unwrap();
                let (b, matching) = h.beta1().unwrap();
                prop_assert_eq!(a, brute_alpha0(&h));
                prop_assert_eq!(b, brute_beta1(&h));
                prop_assert!(a >= b);
                prop_assert!(h.edges().iter().all(|e| e.intersects(cover)));
                prop_assert_eq!(cover.len(), a);
                prop_assert_eq!(matching.len(), b);
            }

            #[test]
            fn transversals_match_subset_scan(h in arb_hypergraph()) {
                let n = h.n_vertices();
                let covers: Vec<VarSet> = (0u32..1 << n)
                    .map(|b| VarSet::from_bits(b as u128))
                    .filter(|s| h.edges().iter().all(|e| e.intersects(*s)))
                    .collect();
                let mut minimal: Vec<VarSet> = covers
                    .iter()
                    .copied()
                    .filter(|s| !covers.iter().any(|t| t != s && t.is_subset(*s)))
                    .collect();
                minimal.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
                let found = h.minimal_transversals().unwrap();
                prop_assert_eq!(found.iter().map(|s| s.len()).min(), Some(h.alpha0().unwrap().0));
                prop_assert_eq!(found, minimal);
            }

            #[test]
            fn minor_order_commutes(h in arb_hypergraph(), assign in prop::collection::vec(0u8..3, 6)) {
                let n = h.n_vertices();
                let mut spec = MinorSpec::identity();
                for v in 0..n {
                    match assign[v] {
                        1 => spec.delete.insert(v),
                        2 => spec.contract.insert(v),
                        _ => {}
                    }
                }
                let all_at_once = h.apply_minor(&spec).unwrap();
                let delete_first = h
                    .apply_minor(&MinorSpec::new(spec.delete, VarSet::EMPTY).unwrap()).unwrap()
                    .then(&MinorSpec::new(VarSet::EMPTY, spec.contract).unwrap()).unwrap();
                let contract_first = h
                    .apply_minor(&MinorSpec::new(VarSet::EMPTY, spec.contract).unwrap()).unwrap()
                    .then(&MinorSpec::new(spec.delete, VarSet::EMPTY).unwrap()).unwrap();
                prop_assert_eq!(&all_at_once, &contract_first);
                prop_assert_eq!(&all_at_once, &delete_first);
                // One vertex at a time, descending order.
                let mut step = MinorResult::Proper(h.clone());
                for v in (0..n).rev() {
                    let single = match assign[v] {
                        1 => MinorSpec::new(VarSet::singleton(v), VarSet::EMPTY).unwrap(),
                        2 => MinorSpec::new(VarSet::EMPTY, VarSet::singleton(v)).unwrap(),
                        _ => continue,
                    };
                    step = step.then(&single).unwrap();
                }
                prop_assert_eq!(&all_at_once, &step);
            }

            #[test]
            fn ideal_round_trip(h in arb_hypergraph()) {
                prop_assert_eq!(Hypergraph::of_ideal(&h.edge_ideal::<u16>()).unwrap(), h);
            }
        }
    }
}

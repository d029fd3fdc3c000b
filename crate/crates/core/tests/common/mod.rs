#![allow(dead_code)]

use monideal::{Hypergraph, Monomial, MonomialIdeal, VarSet};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const CORPUS_SEED: u64 = 0x6d6f_6e69_6465_616c;
pub const CORPUS_SIZE: usize = 240;

pub fn mono(exps: &[u16]) -> Monomial {
    Monomial::new(exps.to_vec())
}

pub fn ideal(d: usize, gens: &[&[u16]]) -> MonomialIdeal {
    MonomialIdeal::minimalize(d, gens.iter().map(|g| mono(g))).unwrap()
}

pub fn set(vars: &[usize]) -> VarSet {
    vars.iter().copied().collect()
}

pub fn graph(d: usize, edges: &[(usize, usize)]) -> Hypergraph {
    Hypergraph::new(d, edges.iter().map(|&(a, b)| set(&[a, b]))).unwrap()
}

pub fn hypergraph(d: usize, edges: &[&[usize]]) -> Hypergraph {
    Hypergraph::new(d, edges.iter().map(|e| set(e))).unwrap()
}

pub fn triangle() -> MonomialIdeal {
    cycle(3).edge_ideal()
}

pub fn cycle(n: usize) -> Hypergraph {
    graph(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
}

pub fn path(n: usize) -> Hypergraph {
    graph(n, &(0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>())
}

pub fn complete_bipartite(a: usize, b: usize) -> Hypergraph {
    let edges: Vec<(usize, usize)> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    graph(a + b, &edges)
}

/// Consecutive triples around a 5-cycle.
pub fn pentagon_triples() -> Hypergraph {
    hypergraph(5, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4, 0], &[4, 0, 1]])
}

/// Six-vertex clutter that packs yet is mixed and has no good edge.
pub fn six_vertex() -> Hypergraph {
    hypergraph(6, &[&[0, 1, 2], &[3, 4, 5], &[0, 1, 3], &[1, 2, 5], &[0, 3, 4], &[2, 4, 5]])
}

pub fn worked_examples() -> Vec<MonomialIdeal> {
    vec![triangle(), pentagon_triples().edge_ideal(), six_vertex().edge_ideal()]
}

/// Seeded random proper nonzero monomial ideals: at most five variables,
/// at most six generators, exponents at most three. Distinct.
pub fn corpus() -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED);
    let mut out: Vec<MonomialIdeal> = Vec::with_capacity(CORPUS_SIZE);
    while out.len() < CORPUS_SIZE {
        let d = rng.gen_range(1..=5);
        let k = rng.gen_range(1..=6);
        let gens: Vec<Monomial> = (0..k)
            .map(|_| Monomial::new((0..d).map(|_| rng.gen_range(0..=3)).collect()))
            .filter(|g| !g.is_one())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let i = MonomialIdeal::minimalize(d, gens).unwrap();
        if i.is_proper_nonzero() && !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// Distinct radicals of the corpus together with the three worked examples.
pub fn square_free_corpus() -> Vec<MonomialIdeal> {
    let mut out: Vec<MonomialIdeal> = Vec::new();
    for i in corpus().iter().map(MonomialIdeal::radical).chain(worked_examples()) {
        if !out.contains(&i) {
            out.push(i);
        }
    }
    out
}

/// `I ⊗ J` in `k[x, y]`: the generators of `a` on the first variables and
/// those of `b` on the following ones.
pub fn disjoint_sum(a: &MonomialIdeal, b: &MonomialIdeal) -> MonomialIdeal {
    let (da, db) = (a.ring_dim(), b.ring_dim());
    let left = a.generators().iter().map(|g| {
        let mut e = g.exponents().to_vec();
        e.resize(da + db, 0);
        Monomial::new(e)
    });
    let right = b.generators().iter().map(|g| {
        let mut e = vec![0; da];
        e.extend_from_slice(g.exponents());
        Monomial::new(e)
    });
    MonomialIdeal::minimalize(da + db, left.chain(right)).unwrap()
}

/// Every monomial dividing `m`.
pub fn divisors(m: &Monomial) -> Vec<Monomial> {
    let mut out = vec![Vec::<u16>::new()];
    for &e in m.exponents() {
        out = out.into_iter().flat_map(|p| (0..=e).map(move |k| [p.as_slice(), &[k]].concat())).collect();
    }
    out.into_iter().map(Monomial::new).collect()
}

/// Proper nonzero ideals on at most `max_d` variables with at most five
/// generators and exponents at most three.
pub fn proper_ideal(max_d: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_d)
        .prop_flat_map(|d| (Just(d), prop::collection::vec(prop::collection::vec(0..=3u16, d), 1..=5)))
        .prop_filter_map("proper nonzero", |(d, gens)| {
            let gens = gens.into_iter().map(Monomial::new).filter(|g| !g.is_one());
            let i = MonomialIdeal::minimalize(d, gens).ok()?;
            i.is_proper_nonzero().then_some(i)
        })
}

/// Simple hypergraphs with at least one edge on at most `max_d` vertices.
pub fn simple_hypergraph(max_d: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_d).prop_flat_map(|d| {
        let full = (1u128 << d) - 1;
        prop::collection::vec(1..=full, 1..=6)
            .prop_map(move |bits| Hypergraph::minimal_of(d, bits.into_iter().map(VarSet::from_bits)).unwrap())
    })
}

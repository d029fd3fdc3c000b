mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use monideal::ntf::{self, BoundRule, Budget};
use monideal::polarization::{
    depolarize_prime, faridi_correspondence, has_one_shadow, lift_minimal_prime, polarize_ideal, ShadowVar,
};
use monideal::primary::{ass_witness_oracle, associated_primes, associated_primes_or_empty, minimal_primes, symbolic_power};
use monideal::search::{self, Predicate, SearchConfig};
use monideal::{Hypergraph, Monomial, MonomialIdeal, MonomialPrime, VarId, VarSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

/// `unattainable` carries the reason when a claim in the criterion is false
/// as stated although every other part of it holds.
struct Outcome {
    detail: String,
    unattainable: Option<String>,
}

impl From<String> for Outcome {
    fn from(detail: String) -> Self {
        Outcome { detail, unattainable: None }
    }
}

fn ass(i: &MonomialIdeal) -> Vec<MonomialPrime> {
    associated_primes_or_empty(i).unwrap()
}

fn prime(d: usize, vars: &[usize]) -> MonomialPrime {
    MonomialPrime::new(d, set(vars)).unwrap()
}

fn maximal(d: usize) -> MonomialPrime {
    MonomialPrime::maximal(d).unwrap()
}

fn sorted(mut ps: Vec<MonomialPrime>) -> Vec<MonomialPrime> {
    ps.sort();
    ps.dedup();
    ps
}

fn triangle_reproduction() -> Outcome {
    let i = triangle();
    let sq = i.power(2).unwrap();
    let expected = ideal(3, &[&[2, 2, 0], &[0, 2, 2], &[2, 0, 2], &[1, 2, 1], &[1, 1, 2], &[2, 1, 1]]);
    assert_eq!(sq, expected);
    assert_eq!(sq.len(), 6);

    let got = ass(&sq);
    let want = sorted(vec![prime(3, &[0, 1]), prime(3, &[0, 2]), prime(3, &[1, 2]), maximal(3)]);
    assert_eq!(got, want);

    let (ctx, pol) = polarize_ideal(&sq).unwrap();
    let sh = |base: usize, copy: usize| ctx.index_of(ShadowVar { base: VarId(base), copy }).unwrap();
    let (x, y, z) = (0, 1, 2);
    let shadow_mono = |vars: &[(usize, usize)]| {
        Monomial::from_support(ctx.polar_dim(), vars.iter().map(|&(b, c)| sh(b, c)).collect())
    };
    let expected_pol = MonomialIdeal::minimalize(
        ctx.polar_dim(),
        [
            shadow_mono(&[(x, 1), (x, 2), (y, 1), (y, 2)]),
            shadow_mono(&[(y, 1), (y, 2), (z, 1), (z, 2)]),
            shadow_mono(&[(x, 1), (x, 2), (z, 1), (z, 2)]),
            shadow_mono(&[(x, 1), (y, 1), (y, 2), (z, 1)]),
            shadow_mono(&[(x, 1), (y, 1), (z, 1), (z, 2)]),
            shadow_mono(&[(x, 1), (x, 2), (y, 1), (z, 1)]),
        ],
    )
    .unwrap();
    assert_eq!(pol, expected_pol);

    let shadow_prime = |vars: &[(usize, usize)]| {
        MonomialPrime::new(ctx.polar_dim(), vars.iter().map(|&(b, c)| sh(b, c)).collect()).unwrap()
    };
    let ten = sorted(vec![
        shadow_prime(&[(x, 1), (y, 1)]),
        shadow_prime(&[(x, 2), (y, 1)]),
        shadow_prime(&[(x, 1), (y, 2)]),
        shadow_prime(&[(x, 1), (z, 1)]),
        shadow_prime(&[(x, 2), (z, 1)]),
        shadow_prime(&[(y, 1), (z, 1)]),
        shadow_prime(&[(y, 2), (z, 1)]),
        shadow_prime(&[(x, 1), (z, 2)]),
        shadow_prime(&[(y, 1), (z, 2)]),
        shadow_prime(&[(x, 2), (y, 2), (z, 2)]),
    ]);
    assert_eq!(ten.len(), 10);
    assert_eq!(ass(&pol), ten);
    String::from("I^2, Ass(I^2), polarization and its 10 primes exact").into()
}

fn pentagon_reproduction() -> Outcome {
    let h = pentagon_triples();
    let i: MonomialIdeal = h.edge_ideal();
    let deleted = h.delete_vertex(0).unwrap();
    let deleted = deleted.proper().expect("deletion is proper");
    assert_eq!(*deleted, hypergraph(5, &[&[1, 2, 3], &[2, 3, 4]]));

    let m = maximal(5);
    let min = minimal_primes(&i).unwrap();
    let mut stable: Option<Vec<MonomialPrime>> = None;
    let mut literal_failures = Vec::new();
    for t in 2..=4u16 {
        let it = i.power(t as usize).unwrap();
        let a = ass(&it);
        assert!(a.contains(&m), "maximal ideal missing at t={t}");
        let literal = mono(&[1, 1, t - 2, t - 2, t - 2]);
        let colon = it.colon_by_monomial(&literal).unwrap();
        if colon != m.to_ideal() {
            literal_failures.push(format!("t={t}: (I^t : {literal}) = {} generators, not m", colon.len()));
        }
        let shifted = mono(&[1, 1, t - 1, t - 1, t - 1]);
        assert_eq!(it.colon_by_monomial(&shifted).unwrap(), m.to_ideal(), "colon by {shifted} at t={t}");
        if t == 2 {
            let mut want = min.clone();
            want.push(m);
            assert_eq!(a, sorted(want));
        }
        match &stable {
            None => stable = Some(a),
            Some(s) => assert_eq!(*s, a, "Ass changed at t={t}"),
        }
    }
    let detail = format!(
        "Ass(I^t) = Min ∪ {{m}} ({} primes) for t = 2..4, (I^t : x1*x2*(x3*x4*x5)^(t-1)) = m",
        stable.unwrap().len()
    );
    let unattainable = (!literal_failures.is_empty()).then(|| {
        format!(
            "colon by x1*x2*(x3*x4*x5)^(t-2) is not m since that monomial has degree 3t-4 < 3t-1: {}",
            literal_failures.join("; ")
        )
    });
    Outcome { detail, unattainable }
}

fn six_vertex_reproduction() -> Outcome {
    let h = six_vertex();
    let i: MonomialIdeal = h.edge_ideal();
    assert!(h.packing().unwrap().holds);
    let min = minimal_primes(&i).unwrap();
    let p1 = prime(6, &[0, 2, 4]);
    let p2 = prime(6, &[1, 3, 5]);
    assert!(min.contains(&p1) && min.contains(&p2));
    for g in i.generators() {
        let in_square = |p: &MonomialPrime| (g.support() & p.vars()).len() >= 2;
        assert!(in_square(&p1) || in_square(&p2), "{g} is in neither square");
    }
    assert_eq!(ntf::find_good_edge(&i).unwrap(), None);
    assert!(!monideal::primary::is_unmixed(&i).unwrap());
    format!("packing, {} minimal primes, no good edge, mixed", min.len()).into()
}

fn onset_suite() -> Outcome {
    let budget = Budget::default();
    let cases: [(&str, Hypergraph, usize); 4] = [
        ("triangle", cycle(3), 1),
        ("C5", cycle(5), 2),
        ("C7", cycle(7), 3),
        ("pentagon triples", pentagon_triples(), 1),
    ];
    let mut notes = Vec::new();
    for (name, h, beta1) in cases {
        let i: MonomialIdeal = h.edge_ideal();
        assert_eq!(h.beta1().unwrap().0, beta1, "{name}");
        let packing = h.packing().unwrap();
        assert!(!packing.holds, "{name} packs");
        let minors = ntf::all_proper_minors_ntf(&h, BoundRule::Dimension, &budget).unwrap();
        assert!(minors.all_ntf, "{name}: failing minor {:?}", minors.failing);
        let verdict = ntf::ntf_verdict(&i, beta1 + 1, &budget).unwrap();
        assert_eq!(verdict.onset, Some(beta1 + 1), "{name}");
        let at = verdict.record(beta1 + 1).unwrap();
        assert_eq!(at.embedded, vec![maximal(h.n_vertices())], "{name}");
        let check = ntf::check_embedded_at_beta1_plus_1(&h, beta1, &packing, true, &verdict);
        assert!(check.passed(), "{name}: {check:?}");
        assert!(ntf::check_onset_lower_bound(&verdict, beta1, true).passed(), "{name}");
        notes.push(format!("{name} onset {}", beta1 + 1));
    }
    notes.join(", ").into()
}

fn oracle_equivalence() -> Outcome {
    let corpus = corpus();
    assert!(corpus.len() >= 200);
    let budget = Budget::default();
    for i in &corpus {
        let by_decomposition = associated_primes(i).unwrap();
        let by_oracle = ass_witness_oracle(i, budget.max_box).unwrap();
        assert_eq!(by_decomposition.primes, by_oracle.primes, "{i}");
        for w in &by_oracle.witnesses {
            assert_eq!(i.colon_by_monomial(&w.monomial).unwrap(), w.prime.to_ideal(), "{i}");
        }
    }
    format!("{} ideals agree", corpus.len()).into()
}

fn join_var(p: &MonomialPrime, v: usize) -> MonomialPrime {
    MonomialPrime::new(p.ring_dim(), p.vars().with(v)).unwrap()
}

fn add_variable(k: &MonomialIdeal) {
    let d = k.ring_dim();
    let lifted = k.resized(d + 1).unwrap();
    let mut candidates: Vec<(MonomialIdeal, usize)> = vec![(lifted, d)];
    let used = k.generators().iter().fold(VarSet::EMPTY, |acc, g| acc | g.support());
    for v in (0..d).filter(|&v| !used.contains(v)) {
        candidates.push((k.clone(), v));
    }
    for (k, x) in candidates {
        let with_x = k.with_generator(Monomial::var(k.ring_dim(), x)).unwrap();
        let want = sorted(ass(&k).iter().map(|p| join_var(p, x)).collect());
        assert_eq!(ass(&with_x), want, "add variable {x} to {k}");
    }
}

fn colon_inclusion(k: &MonomialIdeal, rng: &mut ChaCha8Rng, t: u16) {
    let d = k.ring_dim();
    let base = ass(k);
    let mut ms: Vec<Monomial> = (0..12).map(|_| Monomial::new((0..d).map(|_| rng.gen_range(0..=t)).collect())).collect();
    ms.push(Monomial::from_support(d, VarSet::full(d)));
    for m in ms {
        for p in ass(&k.colon_by_monomial(&m).unwrap()) {
            assert!(base.contains(&p), "{p} from ({k} : {m})");
        }
    }
}

fn exact_sequence(k: &MonomialIdeal) {
    let d = k.ring_dim();
    let base = ass(k);
    for y in 0..d {
        let var = Monomial::var(d, y);
        let colon = ass(&k.colon_by_monomial(&var).unwrap());
        let sum = ass(&k.with_generator(var).unwrap());
        for p in &base {
            assert!(colon.contains(p) || sum.contains(p), "{p} for y={y} in {k}");
        }
        for p in &colon {
            assert!(base.contains(p), "{p} in ({k} : x{y})");
        }
    }
}

fn disconnected(a: &MonomialIdeal, b: &MonomialIdeal) {
    const N: usize = 3;
    let ass_powers = |i: &MonomialIdeal| -> Vec<Vec<MonomialPrime>> {
        (1..=N).map(|n| ass(&i.power(n).unwrap())).collect()
    };
    let (pa, pb) = (ass_powers(a), ass_powers(b));
    let sum = disjoint_sum(a, b);
    let da = a.ring_dim();
    let d = sum.ring_dim();
    for n in 1..=N {
        let mut want = Vec::new();
        for n1 in 1..=n {
            let n2 = n + 1 - n1;
            for p1 in &pa[n1 - 1] {
                for p2 in &pb[n2 - 1] {
                    let vars = p1.vars() | p2.vars().iter().map(|v| v + da).collect::<VarSet>();
                    want.push(MonomialPrime::new(d, vars).unwrap());
                }
            }
        }
        assert_eq!(ass(&sum.power(n).unwrap()), sorted(want), "{a} + {b} at n={n}");
    }
}

fn polarization_lemmas(i: &MonomialIdeal, t: usize) {
    let report = faridi_correspondence(i, t).unwrap();
    assert!(report.into && report.onto, "{i} at t={t}: {:?}", report.fibers);
    for q in &report.polarized_primes {
        assert!(has_one_shadow(&report.context, q), "{q} in polarization of {i}^{t}");
    }
    for p in minimal_primes(i).unwrap() {
        let lifted = lift_minimal_prime(&report.context, &p).unwrap();
        assert!(report.polarized_primes.contains(&lifted), "{p} does not lift for {i}^{t}");
        assert_eq!(depolarize_prime(&report.context, &lifted).unwrap(), p);
    }
}

fn lemma_suite() -> Outcome {
    let sf = square_free_corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(CORPUS_SEED ^ 6);
    let partners = [ideal(2, &[&[1, 1]]), triangle(), path(3).edge_ideal()];
    for (n, i) in sf.iter().enumerate() {
        for t in 1..=2u16 {
            let k = i.power(t as usize).unwrap();
            add_variable(&k);
            colon_inclusion(&k, &mut rng, t);
            exact_sequence(&k);
        }
        disconnected(i, &partners[n % partners.len()]);
        let h = Hypergraph::of_ideal(i).unwrap();
        for t in 1..=ntf::dimension_bound(&h).min(3) {
            polarization_lemmas(i, t);
        }
    }
    format!("{} square-free bases", sf.len()).into()
}

fn symbolic_equivalence() -> Outcome {
    let sf = square_free_corpus();
    let mut checked = 0;
    let mut equal = 0;
    for i in &sf {
        let n = (i.ring_dim() + 2) / 2;
        let min = minimal_primes(i).unwrap();
        for t in 1..=n {
            let it = i.power(t).unwrap();
            let same = it == symbolic_power(i, t).unwrap();
            assert_eq!(same, ass(&it) == min, "{i} at t={t}");
            checked += 1;
            equal += same as usize;
        }
    }
    format!("{checked} (ideal, t) pairs, {equal} with I^t = I^(t)").into()
}

fn bipartite_sanity() -> Outcome {
    let budget = Budget::default();
    let cases = [("P4", path(4)), ("C4", cycle(4)), ("C6", cycle(6)), ("K2,3", complete_bipartite(2, 3))];
    let mut notes = Vec::new();
    for (name, h) in cases {
        let n = ntf::dimension_bound(&h);
        let verdict = ntf::ntf_verdict(&h.edge_ideal(), n, &budget).unwrap();
        assert_eq!(verdict.onset, None, "{name}");
        assert!(verdict.is_ntf_up_to_bound(), "{name}");
        notes.push(format!("{name} up to {n}"));
    }
    notes.join(", ").into()
}

fn search_harness() -> Outcome {
    let cfg = SearchConfig::new(5, (2, 2), Predicate::MinimallyNonPacking);
    let out = search::search(&cfg).unwrap();
    let canon = |h: &Hypergraph| search::canonical_form(h, &search::permutations(h.n_vertices()));
    let mut got: Vec<(usize, Vec<VarSet>)> = out.hits.iter().map(|hit| (hit.hypergraph.n_vertices(), canon(&hit.hypergraph))).collect();
    got.sort();
    let want = vec![(3, canon(&cycle(3))), (5, canon(&cycle(5)))];
    assert_eq!(got, want);
    for hit in &out.hits {
        let check = hit.onset_check.as_ref().expect("onset check ran");
        assert!(check.passed(), "{check:?}");
    }
    format!("C3 and C5 only, {} candidates", out.candidates_evaluated).into()
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { id: 1, title: "triangle reproduction", limit: Duration::from_secs(1), run: triangle_reproduction },
        Criterion { id: 2, title: "pentagon triples reproduction", limit: Duration::from_secs(30), run: pentagon_reproduction },
        Criterion { id: 3, title: "six-vertex packing example", limit: Duration::from_secs(10), run: six_vertex_reproduction },
        Criterion { id: 4, title: "onset at beta1 + 1", limit: Duration::from_secs(300), run: onset_suite },
        Criterion { id: 5, title: "oracle equivalence", limit: Duration::from_secs(120), run: oracle_equivalence },
        Criterion { id: 6, title: "lemma suite", limit: Duration::from_secs(300), run: lemma_suite },
        Criterion { id: 7, title: "symbolic power equivalence", limit: Duration::from_secs(300), run: symbolic_equivalence },
        Criterion { id: 8, title: "bipartite sanity", limit: Duration::from_secs(60), run: bipartite_sanity },
        Criterion { id: 9, title: "search harness", limit: Duration::from_secs(600), run: search_harness },
    ];
    let filter: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let mut unattainable = 0;
    for c in criteria.iter().filter(|c| filter.is_empty() || filter.contains(&c.id)) {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(_) if elapsed > c.limit => (false, format!("over the {:?} limit", c.limit)),
            Ok(Outcome { detail, unattainable: Some(why) }) => {
                unattainable += 1;
                println!(
                    "criterion {}: FAIL ({:.2}s) {}: unattainable as stated: {why}; rest holds: {detail}",
                    c.id,
                    elapsed.as_secs_f64(),
                    c.title
                );
                continue;
            }
            Ok(Outcome { detail, unattainable: None }) => (true, detail),
            Err(payload) => {
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panicked".into());
                (false, msg)
            }
        };
        failed += !ok as usize;
        println!(
            "criterion {}: {} ({:.2}s) {}: {}",
            c.id,
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            c.title,
            detail
        );
    }
    if unattainable > 0 {
        println!("{unattainable} criterion(s) unattainable as stated");
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}

//! Associated and minimal primes of monomial ideals.
//!
//! The main path computes an irredundant irreducible decomposition by
//! splitting generators and reads the associated primes off the radicals of
//! the components. [`ass_witness_oracle`] recomputes them from the definition
//! `P = (J : c)` by scanning every divisor `c` of the generator lcm.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::hypergraph::Hypergraph;
use crate::ideal::IdealOf;
use crate::monomial::MonomialOf;
use crate::prime::MonomialPrime;
use crate::varset::VarSet;

/// An irreducible monomial ideal `(x_i^{a_i} : a_i > 0)`, stored as the
/// exponent vector `a`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct IrreducibleComponent<E: Exponent> {
    pure_powers: MonomialOf<E>,
}

impl<E: Exponent> IrreducibleComponent<E> {
    pub fn new(pure_powers: MonomialOf<E>) -> Result<Self> {
        if pure_powers.is_one() {
            return Err(Error::usage("an irreducible component needs at least one pure power"));
        }
        Ok(IrreducibleComponent { pure_powers })
    }

    /// Exponent vector; zero entries mean the variable does not occur.
    pub fn pure_powers(&self) -> &MonomialOf<E> {
        &self.pure_powers
    }

    pub fn to_ideal(&self) -> IdealOf<E> {
        let d = self.pure_powers.ring_dim();
        let gens = self.pure_powers.support().iter().map(|v| {
            let mut e = vec![E::zero(); d];
            e[v] = self.pure_powers.exponent(v);
            MonomialOf::new(e)
        });
        IdealOf::minimalize_unchecked(d, gens.collect())
    }

    pub fn radical(&self) -> MonomialPrime {
        MonomialPrime::new(self.pure_powers.ring_dim(), self.pure_powers.support())
            .expect("component has a pure power")
    }

    /// Inclusion of irreducible ideals: every pure power of `self` lies in `other`.
    pub fn is_subset(&self, other: &Self) -> bool {
        let (a, b) = (&self.pure_powers, &other.pure_powers);
        a.support().iter().all(|v| {
            let bv = b.exponent(v);
            !bv.is_zero() && bv <= a.exponent(v)
        })
    }
}

impl<E: Exponent> fmt::Display for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_ideal().fmt(f)
    }
}

impl<E: Exponent> fmt::Debug for IrreducibleComponent<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: Exponent> Ord for IrreducibleComponent<E> {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.radical()
            .cmp(&other.radical())
            .then_with(|| self.pure_powers.cmp(&other.pure_powers))
    }
}

impl<E: Exponent> PartialOrd for IrreducibleComponent<E> {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial `c` with `(J : c) = prime`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct Witness<E: Exponent> {
    pub prime: MonomialPrime,
    pub monomial: MonomialOf<E>,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct AssResult<E: Exponent> {
    /// Canonically ordered, no repeats.
    pub primes: Vec<MonomialPrime>,
    /// One witness per prime when produced by the oracle; empty otherwise.
    pub witnesses: Vec<Witness<E>>,
}

impl<E: Exponent> AssResult<E> {
    pub fn contains(&self, p: &MonomialPrime) -> bool {
        self.primes.binary_search(p).is_ok()
    }

    pub fn witness(&self, p: &MonomialPrime) -> Option<&MonomialOf<E>> {
        self.witnesses.iter().find(|w| w.prime == *p).map(|w| &w.monomial)
    }
}

/// Irredundant decomposition of a proper nonzero monomial ideal into
/// irreducible components, in canonical order.
pub fn irreducible_decomposition<E: Exponent>(ideal: &IdealOf<E>) -> Result<Vec<IrreducibleComponent<E>>> {
    ideal.require_proper_nonzero()?;
    let mut memo = HashMap::new();
    let mut comps: Vec<IrreducibleComponent<E>> = split(ideal, &mut memo)
        .into_iter()
        .map(|pure_powers| IrreducibleComponent { pure_powers })
        .collect();
    comps.sort();
    Ok(comps)
}

// J = (J + (x_v^a)) ∩ (J + (g / x_v^a)) for a generator g = x_v^a · rest with
// rest ≠ 1 coprime to x_v. Leaves are ideals generated by pure powers.
fn split<E: Exponent>(ideal: &IdealOf<E>, memo: &mut HashMap<IdealOf<E>, Vec<MonomialOf<E>>>) -> Vec<MonomialOf<E>> {
    if let Some(hit) = memo.get(ideal) {
        return hit.clone();
    }
    let d = ideal.ring_dim();
    let mixed = ideal
        .generators()
        .iter()
        .filter(|g| g.pure_power_var().is_none())
        .min_by_key(|g| g.support().len());
    let result = match mixed {
        None => {
            let mut corner = vec![E::zero(); d];
            for g in ideal.generators() {
                let v = g.pure_power_var().expect("all generators are pure powers");
                corner[v] = g.exponent(v);
            }
            vec![MonomialOf::new(corner)]
        }
        Some(g) => {
            // Split off the variable with the largest exponent.
            let v = g
                .support()
                .iter()
                .max_by_key(|&v| (g.exponent(v), std::cmp::Reverse(v)))
                .expect("mixed generator has support");
            let power = g.map_exponents(|i, e| if i == v { e } else { E::zero() });
            let rest = g.map_exponents(|i, e| if i == v { E::zero() } else { e });
            let left = ideal.with_generator(power).expect("same ring");
            let right = ideal.with_generator(rest).expect("same ring");
            let mut parts = split(&left, memo);
            parts.extend(split(&right, memo));
            minimal_corners(parts)
        }
    };
    memo.insert(ideal.clone(), result.clone());
    result
}

// Irreducible monomial ideals are meet-prime among monomial ideals: if
// J1 ∩ J2 ⊆ Q then J1 ⊆ Q or J2 ⊆ Q. So a component is redundant exactly
// when it contains another one, and the inclusion-minimal components form
// the irredundant decomposition.
fn minimal_corners<E: Exponent>(mut corners: Vec<MonomialOf<E>>) -> Vec<MonomialOf<E>> {
    corners.sort();
    corners.dedup();
    let comps: Vec<IrreducibleComponent<E>> = corners
        .into_iter()
        .map(|pure_powers| IrreducibleComponent { pure_powers })
        .collect();
    comps
        .iter()
        .enumerate()
        .filter(|(i, c)| !comps.iter().enumerate().any(|(j, o)| j != *i && o.is_subset(c)))
        .map(|(_, c)| c.pure_powers.clone())
        .collect()
}

/// Associated primes of `R/J` read off an irreducible decomposition.
pub fn associated_primes<E: Exponent>(ideal: &IdealOf<E>) -> Result<AssResult<E>> {
    let mut primes: Vec<MonomialPrime> = irreducible_decomposition(ideal)?
        .iter()
        .map(IrreducibleComponent::radical)
        .collect();
    primes.sort();
    primes.dedup();
    Ok(AssResult { primes, witnesses: Vec::new() })
}

/// Like [`associated_primes`], but the unit ideal has no associated primes
/// (`R/R = 0`) instead of being an error.
pub fn associated_primes_or_empty<E: Exponent>(ideal: &IdealOf<E>) -> Result<Vec<MonomialPrime>> {
    if ideal.is_unit() {
        return Ok(Vec::new());
    }
    Ok(associated_primes(ideal)?.primes)
}

/// Number of divisors of the generator lcm, i.e. the oracle's search space.
pub fn witness_box_size<E: Exponent>(ideal: &IdealOf<E>) -> u64 {
    ideal
        .lcm_of_generators()
        .exponents()
        .iter()
        .fold(1u64, |acc, e| acc.saturating_mul(e.as_u64() + 1))
}

/// Associated primes straight from the definition: every divisor `c` of the
/// generator lcm is tried and `P` is recorded when `(J : c) = P`.
///
/// Exponents of `c` above the lcm do not change `(J : c)`, so divisors of the
/// lcm reach every colon ideal. Fails when the search space exceeds `max_box`.
pub fn ass_witness_oracle<E: Exponent>(ideal: &IdealOf<E>, max_box: u64) -> Result<AssResult<E>> {
    ideal.require_proper_nonzero()?;
    let size = witness_box_size(ideal);
    if size > max_box {
        return Err(Error::Resource { what: "witness search box", needed: size, limit: max_box });
    }
    let d = ideal.ring_dim();
    let bound: Vec<E> = ideal.lcm_of_generators().exponents().to_vec();
    let mut c = vec![E::zero(); d];
    let mut found: Vec<Witness<E>> = Vec::new();
    loop {
        let m = MonomialOf::new(c.clone());
        if let Some(prime) = colon_prime(ideal, &m) {
            if !found.iter().any(|w| w.prime == prime) {
                found.push(Witness { prime, monomial: m });
            }
        }
        // Odometer increment over the box.
        let mut i = 0;
        loop {
            if i == d {
                found.sort_by(|a, b| a.prime.cmp(&b.prime));
                let primes = found.iter().map(|w| w.prime).collect();
                return Ok(AssResult { primes, witnesses: found });
            }
            if c[i] < bound[i] {
                c[i] = c[i] + E::one();
                break;
            }
            c[i] = E::zero();
            i += 1;
        }
    }
}

/// `Some(P)` when `(J : c)` is the monomial prime `P`.
///
/// `(J : c)` is generated by the quotients `q_g = g / gcd(g, c)`. It equals
/// `P` iff no quotient is `1`, `P` is the set of variables occurring as a
/// quotient of degree one, and every quotient is divisible by a variable of `P`.
fn colon_prime<E: Exponent>(ideal: &IdealOf<E>, c: &MonomialOf<E>) -> Option<MonomialPrime> {
    let quotients: Vec<MonomialOf<E>> = ideal
        .generators()
        .iter()
        .map(|g| g.colon_quotient_unchecked(c))
        .collect();
    let mut vars = VarSet::EMPTY;
    for q in &quotients {
        if q.is_one() {
            return None;
        }
        if q.degree() == 1 {
            vars |= q.support();
        }
    }
    if vars.is_empty() || !quotients.iter().all(|q| q.support().intersects(vars)) {
        return None;
    }
    MonomialPrime::new(ideal.ring_dim(), vars).ok()
}

/// `(J : c)` if it is a monomial prime. Exposed for checking witnesses.
pub fn colon_is_prime<E: Exponent>(ideal: &IdealOf<E>, c: &MonomialOf<E>) -> Result<Option<MonomialPrime>> {
    Error::check_dims(ideal.ring_dim(), c.ring_dim())?;
    Ok(colon_prime(ideal, c))
}

/// Minimal primes: minimal vertex covers of the hypergraph of `√I`.
pub fn minimal_primes<E: Exponent>(ideal: &IdealOf<E>) -> Result<Vec<MonomialPrime>> {
    ideal.require_proper_nonzero()?;
    let h = Hypergraph::of_ideal(&ideal.radical())?;
    let mut primes = h
        .minimal_transversals()?
        .into_iter()
        .map(|vars| MonomialPrime::new(ideal.ring_dim(), vars))
        .collect::<Result<Vec<_>>>()?;
    primes.sort();
    Ok(primes)
}

/// Sets every variable outside `P` to 1 (exponent 0) and minimalizes.
pub fn localize<E: Exponent>(ideal: &IdealOf<E>, prime: &MonomialPrime) -> Result<IdealOf<E>> {
    Error::check_dims(ideal.ring_dim(), prime.ring_dim())?;
    let keep = prime.vars();
    ideal.map_generators(|g| g.map_exponents(|v, e| if keep.contains(v) { e } else { E::zero() }))
}

/// `I^(t) = ∩_{P ∈ Min(I)} P^t` for square-free `I`.
///
/// Localizing a square-free ideal at a minimal prime `P` gives `P` itself,
/// so the `P`-primary component of `I^t` is `P^t`.
pub fn symbolic_power<E: Exponent>(ideal: &IdealOf<E>, t: usize) -> Result<IdealOf<E>> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    ideal.require_proper_nonzero()?;
    if t == 0 {
        return Err(Error::usage("symbolic power exponent must be at least 1"));
    }
    let powers = minimal_primes(ideal)?
        .iter()
        .map(|p| p.to_ideal::<E>().power(t))
        .collect::<Result<Vec<_>>>()?;
    IdealOf::intersect_all(&powers)
}

/// Symbolic power from the definition: intersect the components of an
/// irreducible decomposition of `I^t` whose radical is a minimal prime of `I`.
/// Works for any proper nonzero monomial ideal.
pub fn symbolic_power_from_decomposition<E: Exponent>(ideal: &IdealOf<E>, t: usize) -> Result<IdealOf<E>> {
    let power = ideal.power(t)?;
    let minimal = minimal_primes(ideal)?;
    let kept: Vec<IdealOf<E>> = irreducible_decomposition(&power)?
        .into_iter()
        .filter(|c| minimal.contains(&c.radical()))
        .map(|c| c.to_ideal())
        .collect();
    IdealOf::intersect_all(&kept)
}

/// All associated primes have the same height.
pub fn is_unmixed<E: Exponent>(ideal: &IdealOf<E>) -> Result<bool> {
    let primes = associated_primes(ideal)?.primes;
    Ok(primes.windows(2).all(|w| w[0].height() == w[1].height()))
}

#[cfg(test)]
mod tests {
    use super::*;

    type M = MonomialOf<u16>;
    type I = IdealOf<u16>;

    fn m(e: &[u16]) -> M {
        M::new(e.to_vec())
    }

    fn ideal(gens: &[&[u16]]) -> I {
        I::minimalize(gens[0].len(), gens.iter().map(|g| m(g))).unwrap()
    }

    fn prime(d: usize, vars: &[usize]) -> MonomialPrime {
        MonomialPrime::new(d, vars.iter().copied().collect()).unwrap()
    }

    fn triangle() -> I {
        ideal(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]])
    }

    #[test]
    fn decomposition_of_single_edge() {
        let comps = irreducible_decomposition(&ideal(&[&[1, 1]])).unwrap();
        let ideals: Vec<I> = comps.iter().map(|c| c.to_ideal()).collect();
        assert_eq!(ideals, vec![ideal(&[&[1, 0]]), ideal(&[&[0, 1]])]);
    }

    #[test]
    fn decomposition_with_embedded_component() {
        // (x^2, xy) = (x) ∩ (x^2, y)
        let j = ideal(&[&[2, 0], &[1, 1]]);
        let comps: Vec<I> = irreducible_decomposition(&j).unwrap().iter().map(|c| c.to_ideal()).collect();
        assert_eq!(comps, vec![ideal(&[&[1, 0]]), ideal(&[&[2, 0], &[0, 1]])]);
        assert_eq!(I::intersect_all(&comps).unwrap(), j);
    }

    #[test]
    fn decomposition_of_triangle() {
        let radicals: Vec<_> = irreducible_decomposition(&triangle()).unwrap().iter().map(|c| c.radical()).collect();
        assert_eq!(radicals, vec![prime(3, &[0, 1]), prime(3, &[0, 2]), prime(3, &[1, 2])]);
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert_eq!(irreducible_decomposition(&I::zero(2)), Err(Error::Degenerate("zero")));
        assert_eq!(irreducible_decomposition(&I::unit(2)), Err(Error::Degenerate("unit")));
        assert_eq!(associated_primes_or_empty(&I::unit(2)).unwrap(), vec![]);
    }

    #[test]
    fn triangle_square_primes() {
        let sq = triangle().power(2).unwrap();
        let expected = vec![prime(3, &[0, 1]), prime(3, &[0, 2]), prime(3, &[1, 2]), prime(3, &[0, 1, 2])];
        assert_eq!(associated_primes(&sq).unwrap().primes, expected);
        let oracle = ass_witness_oracle(&sq, 1 << 20).unwrap();
        assert_eq!(oracle.primes, expected);
        let c = oracle.witness(&prime(3, &[0, 1, 2])).unwrap();
        assert_eq!(sq.colon_by_monomial(c).unwrap(), I::from_vars(3, [0, 1, 2]));
    }

    #[test]
    fn principal_power_witness() {
        let j = ideal(&[&[2]]);
        let oracle = ass_witness_oracle(&j, 100).unwrap();
        assert_eq!(oracle.primes, vec![prime(1, &[0])]);
        assert_eq!(oracle.witness(&prime(1, &[0])), Some(&m(&[1])));
    }

    #[test]
    fn oracle_budget() {
        let sq = triangle().power(2).unwrap();
        assert_eq!(witness_box_size(&sq), 27);
        assert!(matches!(ass_witness_oracle(&sq, 26), Err(Error::Resource { .. })));
    }

    #[test]
    fn clamping_into_the_box_preserves_colons() {
        let j = ideal(&[&[2, 1, 0], &[0, 2, 1], &[1, 0, 3]]);
        let lcm = j.lcm_of_generators();
        for a in 0..6u16 {
            for b in 0..5u16 {
                for c in 0..6u16 {
                    let big = m(&[a, b, c]);
                    let clamped = big.map_exponents(|v, e| e.min(lcm.exponent(v)));
                    assert_eq!(j.colon_by_monomial(&big).unwrap(), j.colon_by_monomial(&clamped).unwrap());
                }
            }
        }
    }

    #[test]
    fn square_free_ass_is_min() {
        let t = triangle();
        assert_eq!(associated_primes(&t).unwrap().primes, minimal_primes(&t).unwrap());
    }

    #[test]
    fn minimal_primes_examples() {
        assert_eq!(minimal_primes(&triangle()).unwrap().len(), 3);
        assert_eq!(minimal_primes(&ideal(&[&[1]])).unwrap(), vec![prime(1, &[0])]);
        // Non-square-free input goes through the radical.
        assert_eq!(minimal_primes(&triangle().power(3).unwrap()).unwrap(), minimal_primes(&triangle()).unwrap());
    }

    #[test]
    fn localization() {
        assert_eq!(localize(&triangle(), &prime(3, &[0, 1])).unwrap(), I::from_vars(3, [0, 1]));
        assert_eq!(localize(&triangle(), &MonomialPrime::maximal(3).unwrap()).unwrap(), triangle());
        assert_eq!(localize(&ideal(&[&[1, 1, 1]]), &prime(3, &[0])).unwrap(), ideal(&[&[1, 0, 0]]));
    }

    #[test]
    fn symbolic_powers() {
        let t = triangle();
        assert_eq!(symbolic_power(&t, 1).unwrap(), t);
        let s2 = symbolic_power(&t, 2).unwrap();
        let xyz = m(&[1, 1, 1]);
        assert!(s2.contains(&xyz).unwrap());
        assert!(!t.power(2).unwrap().contains(&xyz).unwrap());
        assert_ne!(s2, t.power(2).unwrap());
        assert_eq!(s2, symbolic_power_from_decomposition(&t, 2).unwrap());
        assert_eq!(symbolic_power(&t.power(2).unwrap(), 1), Err(Error::NotSquareFree));
    }

    #[test]
    fn unmixedness() {
        assert!(is_unmixed(&triangle()).unwrap());
        assert!(is_unmixed(&ideal(&[&[1]])).unwrap());
        assert!(!is_unmixed(&triangle().power(2).unwrap()).unwrap());
    }
}

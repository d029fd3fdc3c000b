//! Polarization: trading each power `x_i^a` for a product of `a` distinct
//! shadow variables `x_(i,1) ... x_(i,a)`, which turns any monomial ideal into
//! a square-free one in a larger ring.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::hypergraph::Hypergraph;
use crate::ideal::IdealOf;
use crate::monomial::{MonomialOf, VarId};
use crate::primary;
use crate::prime::MonomialPrime;
use crate::varset::{VarSet, MAX_VARS};

/// The shadow `x_(base, copy)`; `copy` starts at 1.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ShadowVar {
    pub base: VarId,
    pub copy: usize,
}

/// Flat indexing of the shadow variables of one polarization.
///
/// Shadows of `x_i` occupy the contiguous block
/// `offsets[i] .. offsets[i] + copies[i]`, copy 1 first.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PolarContext {
    base_dim: usize,
    copies: Vec<usize>,
    offsets: Vec<usize>,
    polar_dim: usize,
    base_of: Vec<usize>,
}

impl PolarContext {
    pub fn new(copies: Vec<usize>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(copies.len());
        let mut base_of = Vec::new();
        let mut next = 0usize;
        for (base, &c) in copies.iter().enumerate() {
            offsets.push(next);
            next += c;
            base_of.extend(std::iter::repeat(base).take(c));
        }
        if next > MAX_VARS {
            return Err(Error::Resource {
                what: "polarized ring dimension",
                needed: next as u64,
                limit: MAX_VARS as u64,
            });
        }
        Ok(PolarContext { base_dim: copies.len(), copies, offsets, polar_dim: next, base_of })
    }

    pub fn base_dim(&self) -> usize {
        self.base_dim
    }

    pub fn polar_dim(&self) -> usize {
        self.polar_dim
    }

    pub fn copies(&self, base: usize) -> usize {
        self.copies[base]
    }

    pub fn index_of(&self, s: ShadowVar) -> Result<usize> {
        let VarId(base) = s.base;
        if base >= self.base_dim || s.copy == 0 || s.copy > self.copies[base] {
            return Err(Error::usage(format!("no shadow x{}_{} in this polarization", base + 1, s.copy)));
        }
        Ok(self.offsets[base] + s.copy - 1)
    }

    pub fn shadow_of(&self, index: usize) -> ShadowVar {
        let base = self.base_of[index];
        ShadowVar { base: VarId(base), copy: index - self.offsets[base] + 1 }
    }

    /// Shadow naming: `x3_2` for `x_(3,2)`, built on the base names.
    pub fn shadow_name(&self, index: usize, base_names: &dyn Fn(usize) -> String) -> String {
        let s = self.shadow_of(index);
        format!("{}_{}", base_names(s.base.0), s.copy)
    }
}

/// Polarizes every minimal generator of `J`; the number of shadows of `x_i`
/// is the largest exponent of `x_i` among the generators.
pub fn polarize_ideal<E: Exponent>(ideal: &IdealOf<E>) -> Result<(PolarContext, IdealOf<E>)> {
    ideal.require_proper_nonzero()?;
    let lcm = ideal.lcm_of_generators();
    let copies: Vec<usize> = lcm.exponents().iter().map(|e| e.as_u64() as usize).collect();
    let ctx = PolarContext::new(copies)?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| MonomialOf::from_support(ctx.polar_dim, polarize_support(&ctx, g)))
        .collect::<Vec<_>>();
    let polarized = IdealOf::minimalize(ctx.polar_dim, gens)?;
    debug_assert_eq!(polarized.len(), ideal.len());
    debug_assert!(has_shadow_prefix_property(&ctx, &polarized));
    Ok((ctx, polarized))
}

fn polarize_support<E: Exponent>(ctx: &PolarContext, m: &MonomialOf<E>) -> VarSet {
    let mut out = VarSet::EMPTY;
    for (i, e) in m.exponents().iter().enumerate() {
        for copy in 0..e.as_u64() as usize {
            out.insert(ctx.offsets[i] + copy);
        }
    }
    out
}

/// If `x_(i,j)` divides a generator then so does `x_(i,k)` for every `k ≤ j`.
pub fn has_shadow_prefix_property<E: Exponent>(ctx: &PolarContext, polarized: &IdealOf<E>) -> bool {
    polarized.generators().iter().all(|g| {
        let supp = g.support();
        supp.iter().all(|idx| {
            let s = ctx.shadow_of(idx);
            (1..s.copy).all(|k| supp.contains(ctx.offsets[s.base.0] + k - 1))
        })
    })
}

/// `{ base(v) : v ∈ Q }`.
pub fn depolarize_prime(ctx: &PolarContext, q: &MonomialPrime) -> Result<MonomialPrime> {
    Error::check_dims(ctx.polar_dim, q.ring_dim())?;
    let vars = q.vars().iter().map(|idx| ctx.shadow_of(idx).base.0).collect();
    MonomialPrime::new(ctx.base_dim, vars)
}

/// Substitutes `x_(i,j) = x_i` in every generator.
pub fn depolarize_ideal<E: Exponent>(ctx: &PolarContext, polarized: &IdealOf<E>) -> Result<IdealOf<E>> {
    Error::check_dims(ctx.polar_dim, polarized.ring_dim())?;
    let gens = polarized
        .generators()
        .iter()
        .map(|g| {
            let mut exps = vec![0u64; ctx.base_dim];
            for (idx, e) in g.exponents().iter().enumerate() {
                exps[ctx.base_of[idx]] += e.as_u64();
            }
            MonomialOf::from_u64s(&exps)
        })
        .collect::<Result<Vec<_>>>()?;
    IdealOf::minimalize(ctx.base_dim, gens)
}

/// True iff `Q` contains at most one shadow of each base variable.
pub fn has_one_shadow(ctx: &PolarContext, q: &MonomialPrime) -> bool {
    let mut seen = VarSet::EMPTY;
    for idx in q.vars() {
        let base = ctx.shadow_of(idx).base.0;
        if seen.contains(base) {
            return false;
        }
        seen.insert(base);
    }
    true
}

/// [`has_one_shadow`] for a minimal prime of the polarization; any other
/// prime is a usage error.
pub fn check_one_shadow<E: Exponent>(ctx: &PolarContext, polarized: &IdealOf<E>, q: &MonomialPrime) -> Result<bool> {
    let h = Hypergraph::of_ideal(polarized)?;
    if !is_minimal_cover(&h, q.vars()) {
        return Err(Error::usage(format!("{q} is not a minimal prime of the polarization")));
    }
    Ok(has_one_shadow(ctx, q))
}

pub(crate) fn is_minimal_cover(h: &Hypergraph, cover: VarSet) -> bool {
    let edges = h.edges();
    edges.iter().all(|e| e.intersects(cover))
        && cover
            .iter()
            .all(|v| edges.iter().any(|&e| (e & cover) == VarSet::singleton(v)))
}

/// `(x_(v,1) : v ∈ p)`, the first-shadow lift of a prime of the base ring.
pub fn lift_minimal_prime(ctx: &PolarContext, p: &MonomialPrime) -> Result<MonomialPrime> {
    Error::check_dims(ctx.base_dim, p.ring_dim())?;
    let vars = p
        .vars()
        .iter()
        .map(|v| ctx.index_of(ShadowVar { base: VarId(v), copy: 1 }))
        .collect::<Result<VarSet>>()?;
    MonomialPrime::new(ctx.polar_dim, vars)
}

/// How the minimal primes of the polarization of `I^t` depolarize.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct FaridiReport {
    pub t: usize,
    pub context: PolarContext,
    pub polarized_primes: Vec<MonomialPrime>,
    pub base_primes: Vec<MonomialPrime>,
    /// `(q, |{Q : depolarize(Q) = q}|)` for each `q ∈ Ass(R/I^t)`.
    pub fibers: Vec<(MonomialPrime, usize)>,
    /// Every depolarized prime is associated to `I^t`.
    pub into: bool,
    /// Every associated prime of `I^t` is hit.
    pub onto: bool,
}

/// Minimal primes of the polarization of `I^t` against `Ass(R/I^t)`.
pub fn faridi_correspondence<E: Exponent>(ideal: &IdealOf<E>, t: usize) -> Result<FaridiReport> {
    if !ideal.is_square_free() {
        return Err(Error::NotSquareFree);
    }
    let power = ideal.power(t)?;
    let (context, polarized) = polarize_ideal(&power)?;
    let polarized_primes = primary::minimal_primes(&polarized)?;
    let base_primes = primary::associated_primes(&power)?.primes;
    let images = polarized_primes
        .iter()
        .map(|q| depolarize_prime(&context, q))
        .collect::<Result<Vec<_>>>()?;
    let into = images.iter().all(|p| base_primes.contains(p));
    let fibers: Vec<(MonomialPrime, usize)> = base_primes
        .iter()
        .map(|q| (*q, images.iter().filter(|p| *p == q).count()))
        .collect();
    let onto = fibers.iter().all(|&(_, n)| n > 0);
    Ok(FaridiReport { t, context, polarized_primes, base_primes, fibers, into, onto })
}

//! Monomial ideals stored by their minimal generating set.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::monomial::{default_name, MonomialOf};

/// A monomial ideal in `k[x1, .., xd]`.
///
/// Generators are always minimal, deduplicated and sorted in canonical
/// monomial order, so structural equality is ideal equality. The zero ideal
/// has no generators; the unit ideal is generated by `1`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(bound = "")]
pub struct IdealOf<E: Exponent> {
    ring_dim: usize,
    generators: Vec<MonomialOf<E>>,
}

impl<E: Exponent> IdealOf<E> {
    /// Minimal generating set of the ideal generated by `gens`.
    pub fn minimalize(ring_dim: usize, gens: impl IntoIterator<Item = MonomialOf<E>>) -> Result<Self> {
        let gens: Vec<_> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| g.ring_dim() != ring_dim) {
            return Err(Error::DimensionMismatch { left: ring_dim, right: bad.ring_dim() });
        }
        Ok(Self::minimalize_unchecked(ring_dim, gens))
    }

    pub(crate) fn minimalize_unchecked(ring_dim: usize, mut gens: Vec<MonomialOf<E>>) -> Self {
        gens.sort_unstable();
        gens.dedup();
        let mut kept: Vec<MonomialOf<E>> = Vec::with_capacity(gens.len());
        // Sorted by degree, so only earlier elements can divide later ones.
        for g in gens {
            if !kept.iter().any(|k| k.divides_unchecked(&g)) {
                kept.push(g);
            }
        }
        IdealOf { ring_dim, generators: kept }
    }

    pub fn zero(ring_dim: usize) -> Self {
        IdealOf { ring_dim, generators: Vec::new() }
    }

    pub fn unit(ring_dim: usize) -> Self {
        IdealOf { ring_dim, generators: vec![MonomialOf::one(ring_dim)] }
    }

    /// The ideal `(x_v : v ∈ vars)`.
    pub fn from_vars(ring_dim: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        Self::minimalize_unchecked(ring_dim, vars.into_iter().map(|v| MonomialOf::var(ring_dim, v)).collect())
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn generators(&self) -> &[MonomialOf<E>] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_square_free(&self) -> bool {
        self.generators.iter().all(MonomialOf::is_square_free)
    }

    /// Fails with [`Error::Degenerate`] on the zero or unit ideal.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::Degenerate("zero"))
        } else if self.is_unit() {
            Err(Error::Degenerate("unit"))
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, m: &MonomialOf<E>) -> Result<bool> {
        Error::check_dims(self.ring_dim, m.ring_dim())?;
        Ok(self.contains_unchecked(m))
    }

    pub(crate) fn contains_unchecked(&self, m: &MonomialOf<E>) -> bool {
        self.generators.iter().any(|g| g.divides_unchecked(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &Self) -> Result<bool> {
        Error::check_dims(self.ring_dim, other.ring_dim)?;
        Ok(self.generators.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim, other.ring_dim)?;
        Ok(Self::minimalize_unchecked(
            self.ring_dim,
            self.generators.iter().chain(&other.generators).cloned().collect(),
        ))
    }

    /// `self + (m)`.
    pub fn with_generator(&self, m: MonomialOf<E>) -> Result<Self> {
        Error::check_dims(self.ring_dim, m.ring_dim())?;
        let mut gens = self.generators.clone();
        gens.push(m);
        Ok(Self::minimalize_unchecked(self.ring_dim, gens))
    }

    pub fn product(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim, other.ring_dim)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.mul_unchecked(g)?);
            }
        }
        Ok(Self::minimalize_unchecked(self.ring_dim, gens))
    }

    /// `self^t` for `t ≥ 1`.
    pub fn power(&self, t: usize) -> Result<Self> {
        if t == 0 {
            return Err(Error::usage("power exponent must be at least 1"));
        }
        let mut acc = self.clone();
        for _ in 1..t {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `(self : m) = { u : u·m ∈ self }`, generated by `g / gcd(g, m)`.
    pub fn colon_by_monomial(&self, m: &MonomialOf<E>) -> Result<Self> {
        Error::check_dims(self.ring_dim, m.ring_dim())?;
        Ok(self.colon_unchecked(m))
    }

    pub(crate) fn colon_unchecked(&self, m: &MonomialOf<E>) -> Self {
        Self::minimalize_unchecked(
            self.ring_dim,
            self.generators.iter().map(|g| g.colon_quotient_unchecked(m)).collect(),
        )
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim, other.ring_dim)?;
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for f in &self.generators {
            for g in &other.generators {
                gens.push(f.lcm_unchecked(g));
            }
        }
        Ok(Self::minimalize_unchecked(self.ring_dim, gens))
    }

    /// Intersection of a non-empty family, minimalizing after each step.
    pub fn intersect_all<'a>(ideals: impl IntoIterator<Item = &'a Self>) -> Result<Self> {
        let mut iter = ideals.into_iter();
        let first = iter
            .next()
            .ok_or_else(|| Error::usage("intersection of an empty family"))?;
        iter.try_fold(first.clone(), |acc, next| acc.intersect(next))
    }

    pub fn radical(&self) -> Self {
        Self::minimalize_unchecked(
            self.ring_dim,
            self.generators.iter().map(MonomialOf::square_free_part).collect(),
        )
    }

    /// Least common multiple of all generators; `1` for the zero ideal.
    pub fn lcm_of_generators(&self) -> MonomialOf<E> {
        self.generators
            .iter()
            .fold(MonomialOf::one(self.ring_dim), |acc, g| acc.lcm_unchecked(g))
    }

    /// The same generators in a ring with more (or fewer, if unused) variables.
    pub fn resized(&self, ring_dim: usize) -> Result<Self> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.resized(ring_dim))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::minimalize_unchecked(ring_dim, gens))
    }

    pub fn map_generators(&self, f: impl FnMut(&MonomialOf<E>) -> MonomialOf<E>) -> Result<Self> {
        Self::minimalize(self.ring_dim, self.generators.iter().map(f))
    }

    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> impl fmt::Display + 'a {
        IdealDisplay { ideal: self, names }
    }
}

struct IdealDisplay<'a, E: Exponent> {
    ideal: &'a IdealOf<E>,
    names: &'a dyn Fn(usize) -> String,
}

impl<E: Exponent> fmt::Display for IdealDisplay<'_, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ideal.is_zero() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (i, g) in self.ideal.generators.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}", g.display_with(self.names))?;
        }
        f.write_str(")")
    }
}

impl<E: Exponent> fmt::Display for IdealOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_name).fmt(f)
    }
}

impl<E: Exponent> fmt::Debug for IdealOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

//! Monomials as dense exponent vectors.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::varset::VarSet;

/// Index of a ring variable, 0-based. Printed 1-based (`x1`, `x2`, ...).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VarId(pub usize);

/// A monomial `x^a` over a fixed number of variables.
///
/// The all-zero vector is the unit monomial `1`. Canonical order is by total
/// degree, then by exponent vector in descending lexicographic order
/// (`x1 > x2 > ...`), so `x1^2 < x1*x2 < x2^2` among degree-two monomials.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
#[serde(bound = "")]
pub struct MonomialOf<E: Exponent> {
    exps: Box<[E]>,
}

impl<E: Exponent> MonomialOf<E> {
    pub fn new(exps: Vec<E>) -> Self {
        MonomialOf { exps: exps.into_boxed_slice() }
    }

    pub fn from_u64s(exps: &[u64]) -> Result<Self> {
        exps.iter()
            .enumerate()
            .map(|(var, &e)| E::from_u64(e).ok_or(Error::Overflow { var }))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn one(ring_dim: usize) -> Self {
        Self::new(vec![E::zero(); ring_dim])
    }

    pub fn var(ring_dim: usize, v: usize) -> Self {
        assert!(v < ring_dim, "variable x{} outside ring of dimension {ring_dim}", v + 1);
        let mut exps = vec![E::zero(); ring_dim];
        exps[v] = E::one();
        Self::new(exps)
    }

    /// Square-free monomial `∏_{v ∈ vars} x_v`.
    pub fn from_support(ring_dim: usize, vars: VarSet) -> Self {
        let mut exps = vec![E::zero(); ring_dim];
        for v in vars {
            assert!(v < ring_dim, "variable x{} outside ring of dimension {ring_dim}", v + 1);
            exps[v] = E::one();
        }
        Self::new(exps)
    }

    pub fn ring_dim(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[E] {
        &self.exps
    }

    pub fn exponent(&self, v: usize) -> E {
        self.exps[v]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|e| e.as_u64()).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|e| e.is_zero())
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= E::one())
    }

    /// `Some(v)` when the monomial is `x_v^a` for some `a ≥ 1`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (v, e) in self.exps.iter().enumerate() {
            if !e.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some(v);
            }
        }
        found
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(|(v, _)| v)
            .collect()
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Error::check_dims(self.ring_dim(), other.ring_dim())?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Self) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim(), other.ring_dim())?;
        Ok(self.lcm_unchecked(other))
    }

    pub(crate) fn lcm_unchecked(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a.max(b))
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim(), other.ring_dim())?;
        Ok(self.zip_with(other, |a, b| a.min(b)))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim(), other.ring_dim())?;
        self.mul_unchecked(other)
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Result<Self> {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .enumerate()
            .map(|(var, (a, b))| a.checked_add(b).ok_or(Error::Overflow { var }))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    /// Exact quotient `self / divisor`; fails unless `divisor | self`.
    pub fn quotient(&self, divisor: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim(), divisor.ring_dim())?;
        if !divisor.divides_unchecked(self) {
            return Err(Error::NotDivisible(format!("{divisor} does not divide {self}")));
        }
        Ok(self.colon_quotient_unchecked(divisor))
    }

    /// `self / gcd(self, m)`: componentwise saturating difference. This is the
    /// generator of `(self) : m`.
    pub fn colon_quotient(&self, m: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim(), m.ring_dim())?;
        Ok(self.colon_quotient_unchecked(m))
    }

    pub(crate) fn colon_quotient_unchecked(&self, m: &Self) -> Self {
        self.zip_with(m, |a, b| if a > b { a - b } else { E::zero() })
    }

    /// Exponents clamped to at most one.
    pub fn square_free_part(&self) -> Self {
        Self::new(self.exps.iter().map(|&e| e.min(E::one())).collect())
    }

    /// Same exponents viewed in a ring with a different number of variables.
    /// Growing pads with zeros; shrinking requires the dropped exponents to be zero.
    pub fn resized(&self, ring_dim: usize) -> Result<Self> {
        if self.exps.iter().skip(ring_dim).any(|e| !e.is_zero()) {
            return Err(Error::usage(format!(
                "{self} uses variables outside a ring of dimension {ring_dim}"
            )));
        }
        let mut exps: Vec<E> = self.exps.iter().take(ring_dim).copied().collect();
        exps.resize(ring_dim, E::zero());
        Ok(Self::new(exps))
    }

    pub fn map_exponents(&self, mut f: impl FnMut(usize, E) -> E) -> Self {
        Self::new(self.exps.iter().enumerate().map(|(v, &e)| f(v, e)).collect())
    }

    fn zip_with(&self, other: &Self, f: impl Fn(E, E) -> E) -> Self {
        Self::new(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        )
    }

    /// Renders with caller-supplied variable names.
    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> impl fmt::Display + 'a {
        DisplayWith { m: self, names }
    }
}

struct DisplayWith<'a, E: Exponent> {
    m: &'a MonomialOf<E>,
    names: &'a dyn Fn(usize) -> String,
}

impl<E: Exponent> fmt::Display for DisplayWith<'_, E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, &e) in self.m.exps.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(&(self.names)(v))?;
            if e > E::one() {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

pub(crate) fn default_name(v: usize) -> String {
    format!("x{}", v + 1)
}

impl<E: Exponent> fmt::Display for MonomialOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_name).fmt(f)
    }
}

impl<E: Exponent> fmt::Debug for MonomialOf<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<E: Exponent> Ord for MonomialOf<E> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl<E: Exponent> PartialOrd for MonomialOf<E> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

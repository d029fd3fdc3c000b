use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exponent::Exponent;
use crate::ideal::IdealOf;
use crate::monomial::default_name;
use crate::varset::{VarSet, MAX_VARS};

/// A monomial prime `(x_v : v ∈ vars)`, identified with its variable set.
///
/// Ordered by height, then lexicographically by variables.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialPrime {
    ring_dim: usize,
    vars: VarSet,
}

impl MonomialPrime {
    pub fn new(ring_dim: usize, vars: VarSet) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::usage("a monomial prime needs at least one variable"));
        }
        if ring_dim > MAX_VARS || vars.span() > ring_dim {
            return Err(Error::usage(format!(
                "prime variables {vars:?} outside ring of dimension {ring_dim}"
            )));
        }
        Ok(MonomialPrime { ring_dim, vars })
    }

    /// The homogeneous maximal ideal `(x1, .., xd)`.
    pub fn maximal(ring_dim: usize) -> Result<Self> {
        if ring_dim > MAX_VARS {
            return Err(Error::Resource {
                what: "ring dimension",
                needed: ring_dim as u64,
                limit: MAX_VARS as u64,
            });
        }
        Self::new(ring_dim, VarSet::full(ring_dim))
    }

    pub fn ring_dim(&self) -> usize {
        self.ring_dim
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn height(&self) -> usize {
        self.vars.len()
    }

    pub fn is_maximal(&self) -> bool {
        self.vars == VarSet::full(self.ring_dim)
    }

    pub fn to_ideal<E: Exponent>(&self) -> IdealOf<E> {
        IdealOf::from_vars(self.ring_dim, self.vars)
    }

    /// `(P, Q)` for primes in the same ring.
    pub fn join(&self, other: &Self) -> Result<Self> {
        Error::check_dims(self.ring_dim, other.ring_dim)?;
        Self::new(self.ring_dim, self.vars | other.vars)
    }

    pub fn display_with<'a>(&'a self, names: &'a dyn Fn(usize) -> String) -> impl fmt::Display + 'a {
        PrimeDisplay { p: self, names }
    }
}

struct PrimeDisplay<'a> {
    p: &'a MonomialPrime,
    names: &'a dyn Fn(usize) -> String,
}

impl fmt::Display for PrimeDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.p.vars.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&(self.names)(v))?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_with(&default_name).fmt(f)
    }
}

impl fmt::Debug for MonomialPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Ord for MonomialPrime {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ring_dim
            .cmp(&other.ring_dim)
            .then(self.height().cmp(&other.height()))
            .then(self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for MonomialPrime {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

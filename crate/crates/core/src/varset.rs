//! Fixed-width bit sets over variable (vertex) indices.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest number of variables a [`VarSet`] can address.
pub const MAX_VARS: usize = 128;

/// A set of variable indices in `[0, MAX_VARS)`, stored as two machine words.
///
/// Ordering is lexicographic on the ascending list of members, so
/// `{0,1} < {0,2} < {1} < {1,2}`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u128);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u128) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        assert!(v < MAX_VARS, "variable index {v} out of range");
        VarSet(1u128 << v)
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u128::MAX)
        } else {
            VarSet((1u128 << n) - 1)
        }
    }

    pub fn insert(&mut self, v: usize) {
        *self = *self | VarSet::singleton(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    pub fn with(self, v: usize) -> Self {
        self | VarSet::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        VarSet(self.0 & !(1u128 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VARS && (self.0 >> v) & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// One past the largest member, or 0 for the empty set.
    pub fn span(self) -> usize {
        MAX_VARS - self.0.leading_zeros() as usize
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VarSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VarSet::EMPTY, VarSet::with)
    }
}

impl std::ops::BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & !rhs.0)
    }
}

impl std::ops::BitOrAssign for VarSet {
    fn bitor_assign(&mut self, rhs: VarSet) {
        self.0 |= rhs.0;
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

// Serialized as the ascending list of 0-based indices.
impl Serialize for VarSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VarSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let items = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = items.iter().find(|&&v| v >= MAX_VARS) {
            return Err(serde::de::Error::custom(format!(
                "variable index {bad} out of range"
            )));
        }
        Ok(items.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a: VarSet = [0, 1].into_iter().collect();
        let b: VarSet = [0, 2].into_iter().collect();
        let c: VarSet = [1].into_iter().collect();
        assert!(a < b && b < c);
        assert!(VarSet::EMPTY < a);
    }

    #[test]
    fn high_bits() {
        let s: VarSet = [3, 70, 127].into_iter().collect();
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 70, 127]);
        assert_eq!(s.span(), 128);
        assert_eq!(VarSet::full(128).len(), 128);
    }
}

//! Integer partitions in canonical form.
//!
//! A [`Partition`] of `d` is a weakly decreasing list of positive parts
//! summing to `d`. Inside this crate a partition is the ramification profile
//! over one branch point: its parts are the local degrees of the points in
//! the fibre, so its length is the size of the fibre.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts in any order; the parts are sorted into
    /// canonical weakly decreasing order.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a partition needs at least one part".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidInput(format!("partition {parts:?} has a zero part")));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    /// `(1, 1, ..., 1)`, the profile over a regular value.
    pub fn ones(degree: usize) -> Self {
        assert!(degree >= 1);
        Self { parts: vec![1; degree] }
    }

    /// `(2, 1, ..., 1)`, the only branching profile a simple cover can have.
    pub fn transposition(degree: usize) -> Self {
        assert!(degree >= 2);
        let mut parts = vec![1; degree - 1];
        parts[0] = 2;
        Self { parts }
    }

    /// `(d)`, a single point of full ramification.
    pub fn full_cycle(degree: usize) -> Self {
        assert!(degree >= 1);
        Self { parts: vec![degree] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer this is a partition of.
    pub fn target(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_branching(&self) -> bool {
        self.parts[0] >= 2
    }

    /// Contribution `sum (k - 1)` of this profile to the total ramification.
    pub fn ramification(&self) -> usize {
        self.target() - self.len()
    }

    /// `multiplicities()[k]` is the number of parts equal to `k`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut counts = vec![0; self.parts[0] + 1];
        for &p in &self.parts {
            counts[p] += 1;
        }
        counts
    }

    /// Order of the centralizer of a permutation with this cycle type,
    /// `prod_k k^{m_k} m_k!`. Saturates at `u128::MAX`.
    pub fn centralizer_order(&self) -> u128 {
        let mut z: u128 = 1;
        for (k, &m) in self.multiplicities().iter().enumerate().skip(1) {
            for i in 1..=m {
                z = z.saturating_mul(k as u128).saturating_mul(i as u128);
            }
        }
        z
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

pub fn partition_length(p: &Partition) -> usize {
    p.len()
}

pub fn is_branching_partition(p: &Partition) -> bool {
    p.is_branching()
}

/// All partitions of `d` in reverse-lexicographic order, starting at `(d)`
/// and ending at `(1, ..., 1)`.
pub fn enumerate_partitions(d: usize) -> Result<Vec<Partition>> {
    if d < 1 {
        return Err(Error::InvalidInput("cannot enumerate partitions of 0".into()));
    }
    let mut out = Vec::new();
    let mut parts = vec![d];
    loop {
        out.push(Partition { parts: parts.clone() });
        let mut rest = 0;
        while parts.last() == Some(&1) {
            parts.pop();
            rest += 1;
        }
        let Some(last) = parts.pop() else {
            break;
        };
        let v = last - 1;
        rest += 1;
        parts.push(v);
        while rest > v {
            parts.push(v);
            rest -= v;
        }
        if rest > 0 {
            parts.push(rest);
        }
    }
    Ok(out)
}

/// Partitions of `d` with at least one part `>= 2`, in the same order as
/// [`enumerate_partitions`].
pub fn branching_partitions(d: usize) -> Result<Vec<Partition>> {
    Ok(enumerate_partitions(d)?
        .into_iter()
        .filter(Partition::is_branching)
        .collect())
}

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A permutation of the sheets `{0, ..., d-1}`; `images[i]` is the image of `i`.
///
/// Products are read left to right: `a.then(&b)` sends `x` to `b(a(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let d = images.len();
        if d == 0 {
            return Err(Error::InvalidInput("a permutation needs at least one point".into()));
        }
        let mut seen = vec![false; d];
        for &x in &images {
            if x >= d || std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidInput(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Self { images })
    }

    pub(crate) fn from_bytes(images: &[u8]) -> Self {
        Self { images: images.iter().map(|&x| x as usize).collect() }
    }

    pub fn identity(degree: usize) -> Self {
        Self { images: (0..degree).collect() }
    }

    /// The transposition swapping `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Self { images }
    }

    /// The cycle `0 -> 1 -> ... -> d-1 -> 0`.
    pub fn long_cycle(degree: usize) -> Self {
        Self { images: (0..degree).map(|i| (i + 1) % degree).collect() }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree());
        Self { images: self.images.iter().map(|&x| other.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Self { images }
    }

    /// `h^-1 * self * h`: the same permutation with every point `i` renamed `h(i)`.
    pub fn conjugate_by(&self, h: &Permutation) -> Permutation {
        assert_eq!(self.degree(), h.degree());
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[h.images[i]] = h.images[x];
        }
        Self { images }
    }

    /// Cycle lengths, fixed points included.
    pub fn cycle_type(&self) -> Partition {
        let d = self.degree();
        let mut seen = vec![false; d];
        let mut lengths = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            lengths.push(len);
        }
        Partition::new(lengths).expect("cycle lengths are positive")
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(images: Vec<usize>) -> Result<Self> {
        Self::new(images)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

/// Candidate monodromy: one permutation per branch point, all on the same sheets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTuple")]
pub struct PermutationTuple {
    degree: usize,
    perms: Vec<Permutation>,
}

#[derive(Deserialize)]
struct RawTuple {
    degree: usize,
    perms: Vec<Permutation>,
}

impl TryFrom<RawTuple> for PermutationTuple {
    type Error = Error;

    fn try_from(raw: RawTuple) -> Result<Self> {
        Self::new(raw.degree, raw.perms)
    }
}

impl PermutationTuple {
    pub fn new(degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be at least 1".into()));
        }
        if let Some(p) = perms.iter().find(|p| p.degree() != degree) {
            return Err(Error::InvalidInput(format!(
                "permutation of degree {} in a tuple of degree {degree}",
                p.degree()
            )));
        }
        Ok(Self { degree, perms })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    /// `perms[0]` then `perms[1]` ... then `perms[n-1]`.
    pub fn product(&self) -> Permutation {
        self.perms
            .iter()
            .fold(Permutation::identity(self.degree), |acc, p| acc.then(p))
    }

    pub fn cycle_types(&self) -> Vec<Partition> {
        self.perms.iter().map(Permutation::cycle_type).collect()
    }

    /// `sum over all cycles of (length - 1)`.
    pub fn total_ramification(&self) -> usize {
        self.perms.iter().map(|p| p.cycle_type().ramification()).sum()
    }

    /// Whether the generated group has a single orbit on the sheets.
    pub fn is_transitive(&self) -> bool {
        let mut uf = UnionFind::new(self.degree);
        for p in &self.perms {
            for (i, &x) in p.images().iter().enumerate() {
                uf.union(i, x);
            }
        }
        uf.components() == 1
    }

    /// Every permutation conjugated by `h`.
    pub fn conjugate_by(&self, h: &Permutation) -> PermutationTuple {
        Self {
            degree: self.degree,
            perms: self.perms.iter().map(|p| p.conjugate_by(h)).collect(),
        }
    }

    /// Hurwitz move on positions `i, i + 1`: `(a, b) -> (b, b^-1 a b)`.
    /// Keeps the product, the generated group and the multiset of cycle types.
    pub fn braid(&mut self, i: usize) {
        let a = self.perms[i].clone();
        let b = self.perms[i + 1].clone();
        self.perms[i + 1] = a.conjugate_by(&b);
        self.perms[i] = b;
    }
}

pub fn cycle_type(p: &Permutation) -> Partition {
    p.cycle_type()
}

pub fn total_ramification(t: &PermutationTuple) -> usize {
    t.total_ramification()
}

pub fn is_transitive(t: &PermutationTuple) -> bool {
    t.is_transitive()
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        Self { parent: (0..n).collect(), components: n }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
            self.components -= 1;
        }
    }

    pub(crate) fn components(&self) -> usize {
        self.components
    }
}

//! Branch data and Riemann–Hurwitz arithmetic.
//!
//! The source surface is closed, connected and orientable, so it is recorded
//! by its genus alone (`chi = 2 - 2g`). All arithmetic is exact.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::Partition;

pub type Genus = u32;

/// Largest degree accepted by [`BranchDatum::new`]. Sheets are stored as
/// bytes by the search kernel.
pub const MAX_DEGREE: usize = 255;

/// A branch datum `(M, n, d, Pi)` with `M` given by its genus.
///
/// Every partition sums to the degree and genuinely branches. `n` may be
/// anything here, including 0; operations that need a hyperbolic base
/// (`n >= 3`) check it themselves.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDatum")]
pub struct BranchDatum {
    genus: Genus,
    degree: usize,
    partitions: Vec<Partition>,
}

#[derive(Deserialize)]
struct RawDatum {
    genus: Genus,
    degree: usize,
    partitions: Vec<Partition>,
}

impl TryFrom<RawDatum> for BranchDatum {
    type Error = Error;

    fn try_from(raw: RawDatum) -> Result<Self> {
        Self::new(raw.genus, raw.degree, raw.partitions)
    }
}

impl BranchDatum {
    pub fn new(genus: Genus, degree: usize, partitions: Vec<Partition>) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidInput("degree must be at least 1".into()));
        }
        if degree > MAX_DEGREE {
            return Err(Error::InvalidInput(format!(
                "degree {degree} exceeds the supported maximum {MAX_DEGREE}"
            )));
        }
        for (i, p) in partitions.iter().enumerate() {
            if p.target() != degree {
                return Err(Error::InvalidInput(format!(
                    "partition {i} = {p} sums to {}, expected the degree {degree}",
                    p.target()
                )));
            }
            if !p.is_branching() {
                return Err(Error::InvalidInput(format!(
                    "partition {i} = {p} has no part >= 2, so it is not a branch point"
                )));
            }
        }
        Ok(Self { genus, degree, partitions })
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    /// Number of branch points `n`.
    pub fn branch_points(&self) -> usize {
        self.partitions.len()
    }

    /// `m = sum_i len(Pi_i)`, the number of points of `M` over the branch set.
    pub fn total_length(&self) -> usize {
        self.partitions.iter().map(Partition::len).sum()
    }

    /// `chi(M) - m == d (chi(S^2) - n)`.
    pub fn is_compatible(&self) -> bool {
        let chi = 2 - 2 * self.genus as i64;
        let m = self.total_length() as i64;
        let d = self.degree as i64;
        let n = self.branch_points() as i64;
        chi - m == d * (2 - n)
    }

    /// Every fibre has at least `d - 1` points.
    pub fn is_simple(&self) -> bool {
        self.partitions.iter().all(|p| p.len() + 1 >= self.degree)
    }

    /// Same datum with the partitions listed in another order.
    pub fn permuted(&self, order: &[usize]) -> Self {
        assert_eq!(order.len(), self.partitions.len());
        Self {
            genus: self.genus,
            degree: self.degree,
            partitions: order.iter().map(|&i| self.partitions[i].clone()).collect(),
        }
    }
}

impl fmt::Display for BranchDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g={}, d={}, n={}, [", self.genus, self.degree, self.partitions.len())?;
        for (i, p) in self.partitions.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

pub fn total_length(datum: &BranchDatum) -> usize {
    datum.total_length()
}

pub fn is_compatible(datum: &BranchDatum) -> bool {
    datum.is_compatible()
}

pub fn is_simple_datum(datum: &BranchDatum) -> bool {
    datum.is_simple()
}

/// The genus of a cover of the sphere with the given ramification profiles,
/// from `2 - 2g = 2d - R` where `R = sum_i (d - len(Pi_i))`.
pub fn implied_genus(degree: usize, partitions: &[Partition]) -> Result<Genus> {
    if let Some(p) = partitions.iter().find(|p| p.target() != degree) {
        return Err(Error::InvalidInput(format!(
            "partition {p} does not sum to the degree {degree}"
        )));
    }
    let ramification: i64 = partitions.iter().map(|p| p.ramification() as i64).sum();
    let twice_genus = 2 - 2 * degree as i64 + ramification;
    if twice_genus < 0 || twice_genus % 2 != 0 {
        return Err(Error::NoValidGenus { twice_genus });
    }
    Genus::try_from(twice_genus / 2).map_err(|_| Error::NoValidGenus { twice_genus })
}

/// An exact multiple `coeff * pi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PiMultiple {
    #[serde(rename = "pi_coeff")]
    pub coeff: i64,
}

impl PiMultiple {
    pub fn new(coeff: i64) -> Self {
        Self { coeff }
    }
}

impl fmt::Display for PiMultiple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}π", self.coeff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn datum(g: Genus, d: usize, parts: &[&[usize]]) -> BranchDatum {
        let ps = parts.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect();
        BranchDatum::new(g, d, ps).unwrap()
    }

    fn parts(ps: &[&[usize]]) -> Vec<Partition> {
        ps.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()
    }

    #[test]
    fn total_lengths() {
        assert_eq!(total_length(&datum(1, 3, &[&[3], &[3], &[3]])), 3);
        assert_eq!(total_length(&datum(0, 4, &[&[3, 1], &[2, 2], &[2, 2]])), 6);
        assert_eq!(total_length(&datum(1, 2, &[&[2], &[2], &[2], &[2]])), 4);
    }

    #[test]
    fn compatibility() {
        assert!(is_compatible(&datum(1, 3, &[&[3], &[3], &[3]])));
        assert!(is_compatible(&datum(0, 4, &[&[3, 1], &[2, 2], &[2, 2]])));
        assert!(!is_compatible(&datum(1, 3, &[&[3], &[3]])));
    }

    #[test]
    fn simplicity() {
        assert!(is_simple_datum(&datum(1, 2, &[&[2], &[2], &[2], &[2]])));
        assert!(!is_simple_datum(&datum(1, 3, &[&[3], &[3], &[3]])));
        let eight: Vec<&[usize]> = vec![&[2, 1]; 8];
        let d = datum(2, 3, &eight);
        assert!(is_simple_datum(&d));
        assert!(is_compatible(&d));
    }

    #[test]
    fn genus_from_profiles() {
        assert_eq!(implied_genus(3, &parts(&[&[3], &[3], &[3]])), Ok(1));
        assert_eq!(implied_genus(2, &parts(&[&[2], &[2], &[2], &[2]])), Ok(1));
        assert!(matches!(
            implied_genus(2, &parts(&[&[2], &[2], &[2]])),
            Err(Error::NoValidGenus { twice_genus: 1 })
        ));
        // one branch point over a degree-3 cover: 2g = 2 - 6 + 2
        assert!(matches!(
            implied_genus(3, &parts(&[&[3]])),
            Err(Error::NoValidGenus { twice_genus: -2 })
        ));
        assert!(matches!(implied_genus(3, &parts(&[&[2]])), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn construction_rejects_bad_data() {
        assert!(BranchDatum::new(1, 0, vec![]).is_err());
        assert!(BranchDatum::new(1, 3, parts(&[&[2, 1], &[2]])).is_err());
        assert!(BranchDatum::new(1, 3, parts(&[&[1, 1, 1]])).is_err());
        assert!(BranchDatum::new(0, 1, parts(&[&[1]])).is_err());
        assert!(BranchDatum::new(0, 1, vec![]).is_ok());
    }

    #[test]
    fn json_round_trip_canonicalizes() {
        let d: BranchDatum =
            serde_json::from_str(r#"{"genus":0,"degree":4,"partitions":[[1,3],[2,2],[2,2]]}"#)
                .unwrap();
        assert_eq!(
            serde_json::to_string(&d).unwrap(),
            r#"{"genus":0,"degree":4,"partitions":[[3,1],[2,2],[2,2]]}"#
        );
        assert!(serde_json::from_str::<BranchDatum>(
            r#"{"genus":0,"degree":4,"partitions":[[3,2]]}"#
        )
        .is_err());
    }

    #[test]
    fn pi_multiple_json() {
        assert_eq!(serde_json::to_string(&PiMultiple::new(6)).unwrap(), r#"{"pi_coeff":6}"#);
    }
}

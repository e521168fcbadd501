use std::fmt;
use std::str::FromStr;

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finab::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl TryFrom<char> for Family {
    type Error = Error;
    fn try_from(c: char) -> Result<Self> {
        Ok(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            other => return Err(Error::Invalid(format!("unknown Dynkin family `{other}`"))),
        })
    }
}

/// A simple root system, numbered as in Bourbaki.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DynkinType {
    family: Family,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(DynkinType { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Edges of the Dynkin diagram as 0-based node pairs.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => (0..n - 1).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut e: Vec<_> = (0..n - 2).map(|i| (i, i + 1)).collect();
                e.push((n - 3, n - 1));
                e
            }
            // 1-3-4-5-6(-7-8), 2-4
            Family::E => {
                let mut e = vec![(0, 2), (1, 3), (2, 3)];
                e.extend((3..n - 1).map(|i| (i, i + 1)));
                e
            }
        }
    }

    /// `2 / (α_i, α_i)` with long roots normalized to squared length 2:
    /// 1 on long simple roots, the lacing number on short ones.
    pub fn short_root_factor(&self, i: usize) -> i64 {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => 1,
            Family::B => {
                if i == n - 1 {
                    2
                } else {
                    1
                }
            }
            Family::C => {
                if i == n - 1 {
                    1
                } else {
                    2
                }
            }
            Family::F => {
                if i >= 2 {
                    2
                } else {
                    1
                }
            }
            Family::G => {
                if i == 0 {
                    3
                } else {
                    1
                }
            }
        }
    }

    /// The Cartan matrix `A_ij = 2(α_i, α_j)/(α_j, α_j)`.
    pub fn cartan_matrix(&self) -> IntMatrix {
        let n = self.rank;
        let mut a = DMatrix::from_diagonal_element(n, n, 2i64);
        for (i, j) in self.edges() {
            let (hi, hj) = (self.short_root_factor(i), self.short_root_factor(j));
            // equal lengths: -1 both ways; otherwise -k from the long root to the short one
            a[(i, j)] = -(hj / hi).max(1);
            a[(j, i)] = -(hi / hj).max(1);
        }
        a
    }

    /// Gram matrix of the basic form on the coroot lattice in the simple-coroot
    /// basis; short coroots have self-pairing 2.
    pub fn coroot_gram(&self) -> IntMatrix {
        let a = self.cartan_matrix();
        IntMatrix::from_fn(self.rank, self.rank, |i, j| self.short_root_factor(i) * a[(i, j)])
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for DynkinType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let fam = chars.next().ok_or_else(|| Error::Invalid("empty Dynkin type".into()))?;
        let rank: usize = chars
            .as_str()
            .trim_start_matches(['(', ' '])
            .trim_end_matches(')')
            .parse()
            .map_err(|_| Error::Invalid(format!("bad rank in Dynkin type `{s}`")))?;
        DynkinType::new(Family::try_from(fam)?, rank)
    }
}

/// Cartan matrix of `t`.
pub fn cartan_matrix(t: DynkinType) -> IntMatrix {
    t.cartan_matrix()
}

/// Basic even W-invariant Gram matrix on the coroot lattice of `t`.
pub fn coroot_gram(t: DynkinType) -> IntMatrix {
    t.coroot_gram()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn rank_validation() {
        assert!(DynkinType::new(Family::A, 0).is_err());
        assert!(DynkinType::new(Family::B, 1).is_err());
        assert!(DynkinType::new(Family::D, 2).is_err());
        assert!(DynkinType::new(Family::D, 3).is_ok());
        assert!(DynkinType::new(Family::E, 9).is_err());
        assert!(DynkinType::new(Family::F, 3).is_err());
        assert!(DynkinType::new(Family::G, 3).is_err());
        assert_eq!(DynkinType::new(Family::C, 1).unwrap_err(), Error::InvalidRank { family: Family::C, rank: 1 });
    }

    #[test]
    fn small_cartan_matrices() {
        assert_eq!(ty("A2").cartan_matrix(), IntMatrix::from_row_slice(2, 2, &[2, -1, -1, 2]));
        assert_eq!(ty("A1").cartan_matrix(), IntMatrix::from_row_slice(1, 1, &[2]));
        // α_1 short, α_2 long
        assert_eq!(ty("C2").cartan_matrix(), IntMatrix::from_row_slice(2, 2, &[2, -1, -2, 2]));
        assert_eq!(ty("G2").cartan_matrix(), IntMatrix::from_row_slice(2, 2, &[2, -1, -3, 2]));
    }

    #[test]
    fn small_grams() {
        assert_eq!(ty("C2").coroot_gram(), IntMatrix::from_row_slice(2, 2, &[4, -2, -2, 2]));
        assert_eq!(ty("A3").coroot_gram(), ty("A3").cartan_matrix());
        assert_eq!(ty("G2").coroot_gram(), IntMatrix::from_row_slice(2, 2, &[6, -3, -3, 2]));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(ty("E7").to_string(), "E7");
        assert_eq!(ty("d(5)").to_string(), "D5");
        assert!("X3".parse::<DynkinType>().is_err());
        assert!("A".parse::<DynkinType>().is_err());
    }
}

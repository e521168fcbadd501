use std::fmt;

use serde::{Deserialize, Serialize};

use super::center::{product_center, ProductCenter};
use super::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::finab::quotient;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// `δ` labels a connected component of the moduli of `G`-bundles, `δ ∈ π₁(G)`.
    Component,
    /// Simply connected `G̃` with twist `δ ∈ Z_{G̃}`.
    TwistedSc,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Component => "component",
            Mode::TwistedSc => "twisted-sc",
        })
    }
}

/// A semisimple group `G̃/π₁` over a curve, with a component or twist label.
///
/// Elements of the center are written in factor coordinates: the canonical
/// coordinates of each simple factor's center, concatenated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    factors: Vec<DynkinType>,
    pi1_gens: Vec<Vec<i64>>,
    delta: Vec<i64>,
    genus: u32,
    mode: Mode,
    allow_low_genus: bool,
}

impl GroupSpec {
    pub fn new(
        factors: Vec<DynkinType>,
        pi1_gens: Vec<Vec<i64>>,
        delta: Vec<i64>,
        genus: u32,
        mode: Mode,
        allow_low_genus: bool,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Invalid("a group needs at least one simple factor".into()));
        }
        if genus < 3 && !allow_low_genus {
            return Err(Error::GenusTooLow { genus });
        }
        let pc = product_center(&factors);
        let len = pc.coords_len();
        let delta = if delta.is_empty() { vec![0; len] } else { delta };
        pc.check_coords(&delta)?;
        for g in &pi1_gens {
            pc.check_coords(g)?;
        }
        let delta = pc.reduce_coords(&delta);
        let pi1_gens: Vec<Vec<i64>> = pi1_gens.iter().map(|g| pc.reduce_coords(g)).collect();
        match mode {
            Mode::TwistedSc if !pi1_gens.is_empty() => {
                return Err(Error::Invalid("twisted mode requires a simply connected group".into()));
            }
            Mode::Component => {
                let z = &pc.data.group;
                let gens = pi1_gens.iter().map(|g| pc.to_canonical(g)).collect::<Result<Vec<_>>>()?;
                let (q, proj) = quotient(z, &gens)?;
                if !q.is_zero(&proj.apply(&pc.to_canonical(&delta)?)) {
                    return Err(Error::NotInSubgroup { element: delta, what: "π₁(G)" });
                }
            }
            Mode::TwistedSc => {}
        }
        Ok(GroupSpec { factors, pi1_gens, delta, genus, mode, allow_low_genus })
    }

    /// Component `δ` of `G̃/⟨pi1_gens⟩`.
    pub fn component(factors: Vec<DynkinType>, pi1_gens: Vec<Vec<i64>>, delta: Vec<i64>, genus: u32) -> Result<Self> {
        Self::new(factors, pi1_gens, delta, genus, Mode::Component, false)
    }

    /// Simply connected group twisted by `δ`.
    pub fn twisted(factors: Vec<DynkinType>, delta: Vec<i64>, genus: u32) -> Result<Self> {
        Self::new(factors, vec![], delta, genus, Mode::TwistedSc, false)
    }

    pub fn factors(&self) -> &[DynkinType] {
        &self.factors
    }

    pub fn pi1_gens(&self) -> &[Vec<i64>] {
        &self.pi1_gens
    }

    pub fn delta(&self) -> &[i64] {
        &self.delta
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn allow_low_genus(&self) -> bool {
        self.allow_low_genus
    }

    pub fn is_simply_connected(&self) -> bool {
        let pc = self.center();
        self.pi1_gens.iter().all(|g| pc.reduce_coords(g).iter().all(|&x| x == 0))
    }

    pub fn center(&self) -> ProductCenter {
        product_center(&self.factors)
    }

    pub fn with_genus(&self, genus: u32) -> Result<Self> {
        Self::new(
            self.factors.clone(),
            self.pi1_gens.clone(),
            self.delta.clone(),
            genus,
            self.mode,
            self.allow_low_genus,
        )
    }

    pub fn with_delta(&self, delta: Vec<i64>) -> Result<Self> {
        Self::new(self.factors.clone(), self.pi1_gens.clone(), delta, self.genus, self.mode, self.allow_low_genus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn delta_must_lie_in_pi1() {
        // SL4/μ2: δ = 2 ok, δ = 1 not
        assert!(GroupSpec::component(vec![ty("A3")], vec![vec![2]], vec![2], 3).is_ok());
        let err = GroupSpec::component(vec![ty("A3")], vec![vec![2]], vec![1], 3).unwrap_err();
        assert!(matches!(err, Error::NotInSubgroup { .. }));
    }

    #[test]
    fn genus_guard() {
        assert_eq!(GroupSpec::twisted(vec![ty("A1")], vec![1], 2).unwrap_err(), Error::GenusTooLow { genus: 2 });
        assert!(GroupSpec::new(vec![ty("A1")], vec![], vec![1], 1, Mode::TwistedSc, true).is_ok());
    }

    #[test]
    fn twisted_rejects_pi1() {
        assert!(GroupSpec::new(vec![ty("A1")], vec![vec![1]], vec![0], 3, Mode::TwistedSc, false).is_err());
    }

    #[test]
    fn coordinates_are_reduced() {
        let s = GroupSpec::twisted(vec![ty("A3"), ty("C2")], vec![5, 3], 3).unwrap();
        assert_eq!(s.delta(), &[1, 1]);
        assert!(GroupSpec::twisted(vec![ty("A3")], vec![1, 1], 3).is_err());
        assert_eq!(GroupSpec::twisted(vec![ty("E8")], vec![], 3).unwrap().delta(), &[] as &[i64]);
    }
}

use num_bigint::BigUint;

use crate::error::Result;
use crate::finab::{kernel, subgroup, FinAbGroup, GroupHom, IntMatrix};
use crate::qmodz::QmodZ;
use crate::rootdata::{GroupSpec, ProductCenter};

/// `Ψ = ⊕_i ⟨b̄_i⟩`, the forms `Σ k_i b̄_i` built from the linking forms of the simple factors.
///
/// `group` has the coefficient tuples `(k_1, ..., k_s)` as ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiGroup {
    per_factor_orders: Vec<i64>,
    group: FinAbGroup,
}

impl PsiGroup {
    pub fn from_center(pc: &ProductCenter) -> Self {
        let per_factor_orders: Vec<i64> = pc.blocks.iter().map(|b| b.form.order()).collect();
        let group = FinAbGroup::from_cyclic_orders(&per_factor_orders).expect("orders are positive");
        PsiGroup { per_factor_orders, group }
    }

    pub fn per_factor_orders(&self) -> &[i64] {
        &self.per_factor_orders
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn order(&self) -> BigUint {
        self.group.order()
    }

    pub fn reduce(&self, k: &[i64]) -> Vec<i64> {
        k.iter().zip(&self.per_factor_orders).map(|(x, n)| x.rem_euclid(*n)).collect()
    }

    /// Coefficient tuple of an element given in canonical coordinates of `group`.
    pub fn tuple_of(&self, canonical: &[i64]) -> Vec<i64> {
        self.reduce(&self.group.lift(canonical))
    }

    /// `(Σ k_i b̄_i)(x, y)` on factor coordinates.
    pub fn pairing(&self, pc: &ProductCenter, k: &[i64], x: &[i64], y: &[i64]) -> QmodZ {
        k.iter().enumerate().filter(|(_, &ki)| ki != 0).map(|(i, &ki)| pc.factor_pairing(i, x, y) * ki).sum()
    }
}

/// A subgroup of `Ψ` with generators as coefficient tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiSubgroup {
    pub group: FinAbGroup,
    pub generators: Vec<Vec<i64>>,
    pub inclusion: GroupHom,
}

pub fn psi(spec: &GroupSpec) -> PsiGroup {
    PsiGroup::from_center(&spec.center())
}

/// `Ψ(G)`: forms in `Ψ` vanishing on `π₁(G) × π₁(G)`.
pub fn psi_g(spec: &GroupSpec) -> Result<PsiSubgroup> {
    let pc = spec.center();
    let ps = PsiGroup::from_center(&pc);
    psi_g_with(&pc, &ps, spec.pi1_gens())
}

pub(crate) fn psi_g_with(pc: &ProductCenter, ps: &PsiGroup, pi1: &[Vec<i64>]) -> Result<PsiSubgroup> {
    let s = ps.per_factor_orders.len();
    let mut values: Vec<Vec<QmodZ>> = Vec::new();
    for (a, p) in pi1.iter().enumerate() {
        for q in &pi1[a..] {
            values.push((0..s).map(|i| pc.factor_pairing(i, p, q)).collect());
        }
    }
    let (group, inclusion) = if values.is_empty() {
        let all: Vec<Vec<i64>> = (0..ps.group.rank()).map(|j| ps.group.generator(j)).collect();
        subgroup(&ps.group, &all)?
    } else {
        let orders: Vec<i64> =
            values.iter().map(|row| row.iter().fold(1i64, |acc, v| num_integer::lcm(acc, v.den()))).collect();
        let target = FinAbGroup::from_cyclic_orders(&orders)?;
        let m = IntMatrix::from_fn(values.len(), s, |r, i| {
            values[r][i].scaled_integer(orders[r]).expect("denominator divides the row order")
        });
        let f = GroupHom::from_ambient(ps.group.clone(), target, &m)?;
        kernel(&f)?
    };
    let generators = (0..group.rank()).map(|j| ps.tuple_of(&inclusion.apply(&group.generator(j)))).collect();
    Ok(PsiSubgroup { group, generators, inclusion })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{named_subgroup, DynkinType};

    fn ty(s: &str) -> DynkinType {
        s.parse().unwrap()
    }

    #[test]
    fn psi_orders() {
        for n in 2..=8 {
            let spec = GroupSpec::twisted(vec![ty(&format!("A{}", n - 1))], vec![0], 3).unwrap();
            assert_eq!(psi(&spec).per_factor_orders(), &[n as i64]);
        }
        let e8 = GroupSpec::twisted(vec![ty("E8")], vec![], 3).unwrap();
        assert_eq!(psi(&e8).order(), BigUint::from(1u32));
        let c3 = GroupSpec::twisted(vec![ty("C3")], vec![0], 3).unwrap();
        assert_eq!(psi(&c3).per_factor_orders(), &[2]);
    }

    #[test]
    fn psi_g_pgl2_and_psp() {
        let pgl2 = GroupSpec::component(vec![ty("A1")], named_subgroup(ty("A1"), "full").unwrap(), vec![0], 3).unwrap();
        assert!(psi_g(&pgl2).unwrap().group.is_trivial());

        let psp6 = GroupSpec::component(vec![ty("C3")], vec![vec![1]], vec![0], 3).unwrap();
        assert!(psi_g(&psp6).unwrap().group.is_trivial());

        let sl4 = GroupSpec::component(vec![ty("A3")], vec![], vec![0], 3).unwrap();
        assert_eq!(psi_g(&sl4).unwrap().group.invariant_factors(), &[4]);
    }

    #[test]
    fn psi_g_mu2_in_sl4() {
        // b̄(2z, 2z) = 4·(-1/4)·u² = 0, so all of Ψ survives
        let spec = GroupSpec::component(vec![ty("A3")], vec![vec![2]], vec![0], 3).unwrap();
        assert_eq!(psi_g(&spec).unwrap().group.invariant_factors(), &[4]);
        // in SL6/μ2: b̄(3z,3z) = 9·(-1/6)u² = 1/2, so only even k survive
        let spec = GroupSpec::component(vec![ty("A5")], vec![vec![3]], vec![0], 3).unwrap();
        assert_eq!(psi_g(&spec).unwrap().group.invariant_factors(), &[3]);
    }
}

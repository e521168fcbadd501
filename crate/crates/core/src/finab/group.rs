use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::snf::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};
use crate::qmodz::QmodZ;

/// A finite abelian group `Z^a / M Z^r` together with its canonical
/// invariant-factor presentation `Z/d_1 ⊕ ... ⊕ Z/d_k`, `d_1 | ... | d_k`, `d_i >= 2`.
///
/// Elements are handled in canonical coordinates (one integer per invariant
/// factor, reduced mod `d_i`). The ambient coordinates are whatever the caller
/// used to write down the relations; `canonical` and `lift` translate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinAbGroup {
    relations: IntMatrix,
    invariants: Vec<i64>,
    to_canonical: IntMatrix,
    from_canonical: IntMatrix,
}

impl FinAbGroup {
    /// The cokernel of `m` (columns are relations among the ambient generators).
    pub fn from_relations(m: &IntMatrix) -> Result<Self> {
        let ambient = m.nrows();
        let smith = smith_normal_form(m);
        let diag = smith.diagonal();
        let free_rank = ambient - diag.iter().filter(|&&d| d != 0).count();
        if free_rank > 0 {
            return Err(Error::InfiniteCokernel { free_rank });
        }
        let keep: Vec<usize> = (0..ambient).filter(|&i| diag[i] > 1).collect();
        let invariants = keep.iter().map(|&i| diag[i]).collect();
        let to_canonical = IntMatrix::from_fn(keep.len(), ambient, |r, c| smith.u[(keep[r], c)]);
        let from_canonical = IntMatrix::from_fn(ambient, keep.len(), |r, c| smith.u_inv[(r, keep[c])]);
        Ok(FinAbGroup { relations: m.clone(), invariants, to_canonical, from_canonical })
    }

    /// `⊕ Z/n_i` with the summands as ambient coordinates.
    pub fn from_cyclic_orders(orders: &[i64]) -> Result<Self> {
        if let Some(&bad) = orders.iter().find(|&&n| n < 1) {
            return Err(Error::Invalid(format!("cyclic order {bad} must be positive")));
        }
        Self::from_relations(&IntMatrix::from_diagonal(&nalgebra::DVector::from_vec(orders.to_vec())))
    }

    /// The group `⊕ Z/n_i` in canonical form, computed through the primary
    /// decomposition. Ambient coordinates coincide with canonical ones.
    pub fn abstract_sum(orders: impl IntoIterator<Item = i64>) -> Self {
        let invariants = invariant_factors_of(orders);
        let k = invariants.len();
        FinAbGroup {
            relations: IntMatrix::from_diagonal(&nalgebra::DVector::from_vec(invariants.clone())),
            invariants,
            to_canonical: IntMatrix::identity(k, k),
            from_canonical: IntMatrix::identity(k, k),
        }
    }

    pub fn cyclic(n: i64) -> Self {
        Self::abstract_sum([n])
    }

    pub fn trivial() -> Self {
        Self::abstract_sum([])
    }

    /// Direct sum whose ambient coordinates are the concatenated canonical
    /// coordinates of the summands.
    pub fn direct_sum(parts: &[&FinAbGroup]) -> Self {
        let orders: Vec<i64> = parts.iter().flat_map(|g| g.invariants.iter().copied()).collect();
        Self::from_cyclic_orders(&orders).expect("positive orders always give a finite group")
    }

    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariants
    }

    /// Number of canonical generators.
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.relations.nrows()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// `k × a` matrix sending ambient coordinates to canonical coordinates.
    pub fn to_canonical_matrix(&self) -> &IntMatrix {
        &self.to_canonical
    }

    /// `a × k` matrix whose columns are ambient lifts of the canonical generators.
    pub fn from_canonical_matrix(&self) -> &IntMatrix {
        &self.from_canonical
    }

    pub fn order(&self) -> BigUint {
        self.invariants.iter().fold(BigUint::from(1u32), |acc, &d| acc * BigUint::from(d as u64))
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.invariants.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d as u64))
    }

    pub fn exponent(&self) -> i64 {
        self.invariants.last().copied().unwrap_or(1)
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn is_cyclic(&self) -> bool {
        self.invariants.len() <= 1
    }

    pub fn is_isomorphic(&self, other: &FinAbGroup) -> bool {
        self.invariants == other.invariants
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Vec<i64> {
        let mut e = self.zero();
        e[i] = 1;
        e
    }

    pub fn check_element(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.rank() {
            return Err(Error::Dimension { expected: self.rank(), got: x.len() });
        }
        Ok(())
    }

    /// Reduces canonical coordinates modulo the invariant factors.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        debug_assert_eq!(x.len(), self.rank());
        x.iter().zip(&self.invariants).map(|(v, d)| v.rem_euclid(*d)).collect()
    }

    /// Canonical coordinates of an ambient vector.
    pub fn canonical(&self, ambient: &[i64]) -> Result<Vec<i64>> {
        if ambient.len() != self.ambient_rank() {
            return Err(Error::Dimension { expected: self.ambient_rank(), got: ambient.len() });
        }
        let y: Vec<i64> = (0..self.rank())
            .map(|r| {
                let s: i128 = (0..ambient.len()).map(|c| self.to_canonical[(r, c)] as i128 * ambient[c] as i128).sum();
                s.rem_euclid(self.invariants[r] as i128) as i64
            })
            .collect();
        Ok(y)
    }

    /// An ambient vector representing the canonical element `x`.
    pub fn lift(&self, x: &[i64]) -> Vec<i64> {
        (0..self.ambient_rank()).map(|r| (0..self.rank()).map(|c| self.from_canonical[(r, c)] * x[c]).sum()).collect()
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        self.reduce(&s)
    }

    pub fn scale(&self, k: i64, x: &[i64]) -> Vec<i64> {
        let s: Vec<i64> = x.iter().map(|a| a * k).collect();
        self.reduce(&s)
    }

    pub fn neg(&self, x: &[i64]) -> Vec<i64> {
        self.scale(-1, x)
    }

    pub fn is_zero(&self, x: &[i64]) -> bool {
        self.reduce(x).iter().all(|&v| v == 0)
    }

    pub fn element_order(&self, x: &[i64]) -> i64 {
        x.iter().zip(&self.invariants).fold(1, |acc, (v, d)| acc.lcm(&(d / v.rem_euclid(*d).gcd(d))))
    }

    /// All elements in canonical coordinates, in lexicographic order.
    ///
    /// # Panics
    /// If the group has more than 2^24 elements.
    pub fn elements(&self) -> Vec<Vec<i64>> {
        let n = self.order_u64().filter(|&n| n <= 1 << 24).expect("group too large to enumerate");
        let mut out = Vec::with_capacity(n as usize);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            let mut i = self.rank();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < self.invariants[i] {
                    break;
                }
                cur[i] = 0;
            }
        }
    }

    /// Value of the character with dual coordinates `chi` on `x`: `sum chi_i x_i / d_i`.
    pub fn character_value(&self, chi: &[i64], x: &[i64]) -> QmodZ {
        chi.iter()
            .zip(x)
            .zip(&self.invariants)
            .map(|((c, v), d)| QmodZ::new((*c as i128 * *v as i128 % *d as i128) as i64, *d))
            .sum()
    }

    /// Human-readable label such as `Z/2 ⊕ (Z/4)^3`.
    pub fn label(&self) -> String {
        format_invariants(&self.invariants)
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&self.label())
    }
}

pub fn format_invariants(inv: &[i64]) -> String {
    if inv.is_empty() {
        return "0".to_string();
    }
    let mut parts = Vec::new();
    let mut i = 0;
    while i < inv.len() {
        let j = (i..inv.len()).find(|&j| inv[j] != inv[i]).unwrap_or(inv.len());
        let n = j - i;
        parts.push(if n == 1 { format!("Z/{}", inv[i]) } else { format!("(Z/{})^{}", inv[i], n) });
        i = j;
    }
    parts.join(" ⊕ ")
}

/// Invariant factors (ascending, each `>= 2`) of `⊕ Z/n_i`, via primary decomposition.
pub fn invariant_factors_of(orders: impl IntoIterator<Item = i64>) -> Vec<i64> {
    let mut primary: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for n in orders {
        assert!(n >= 1, "cyclic order must be positive");
        let mut m = n;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                let mut q = 1;
                while m % p == 0 {
                    m /= p;
                    q *= p;
                }
                primary.entry(p).or_default().push(q);
            }
            p += 1;
        }
        if m > 1 {
            primary.entry(m).or_default().push(m);
        }
    }
    let len = primary.values().map(Vec::len).max().unwrap_or(0);
    for powers in primary.values_mut() {
        powers.sort_unstable_by(|a, b| b.cmp(a));
    }
    let mut inv: Vec<i64> =
        (0..len).map(|t| primary.values().map(|p| p.get(t).copied().unwrap_or(1)).product()).collect();
    inv.reverse();
    inv
}

/// Serializable summary of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupSummary {
    pub invariant_factors: Vec<i64>,
    pub order: String,
    pub label: String,
}

impl From<&FinAbGroup> for GroupSummary {
    fn from(g: &FinAbGroup) -> Self {
        GroupSummary { invariant_factors: g.invariants.clone(), order: g.order().to_string(), label: g.label() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_relations_examples() {
        let g = FinAbGroup::from_relations(&IntMatrix::from_row_slice(2, 2, &[2, 0, 0, 4])).unwrap();
        assert_eq!(g.invariant_factors(), &[2, 4]);
        let g = FinAbGroup::from_relations(&IntMatrix::from_row_slice(2, 2, &[2, 1, 0, 2])).unwrap();
        assert_eq!(g.invariant_factors(), &[4]);
        let g = FinAbGroup::from_relations(&IntMatrix::from_row_slice(1, 1, &[1])).unwrap();
        assert!(g.is_trivial());
    }

    #[test]
    fn infinite_cokernel_is_reported() {
        let err = FinAbGroup::from_relations(&IntMatrix::from_row_slice(2, 1, &[2, 0])).unwrap_err();
        assert_eq!(err, Error::InfiniteCokernel { free_rank: 1 });
        let err = FinAbGroup::from_relations(&IntMatrix::zeros(1, 1)).unwrap_err();
        assert_eq!(err, Error::InfiniteCokernel { free_rank: 1 });
    }

    #[test]
    fn canonical_round_trip() {
        let g = FinAbGroup::from_relations(&IntMatrix::from_row_slice(2, 2, &[2, 1, 0, 2])).unwrap();
        for x in g.elements() {
            assert_eq!(g.canonical(&g.lift(&x)).unwrap(), x);
        }
        // the ambient generators generate everything
        let a = g.canonical(&[1, 0]).unwrap();
        let b = g.canonical(&[0, 1]).unwrap();
        assert_eq!(g.element_order(&a).max(g.element_order(&b)), 4);
    }

    #[test]
    fn primary_decomposition() {
        assert_eq!(invariant_factors_of([2, 3]), vec![6]);
        assert_eq!(invariant_factors_of([4, 2, 1]), vec![2, 4]);
        assert_eq!(invariant_factors_of([6, 10, 15]), vec![30, 30]);
        assert!(invariant_factors_of([1, 1]).is_empty());
    }

    #[test]
    fn labels() {
        assert_eq!(FinAbGroup::trivial().label(), "0");
        assert_eq!(FinAbGroup::abstract_sum([2, 2, 4]).label(), "(Z/2)^2 ⊕ Z/4");
    }

    #[test]
    fn character_values() {
        let g = FinAbGroup::abstract_sum([2, 4]);
        assert_eq!(g.character_value(&[1, 1], &[1, 1]), QmodZ::new(3, 4));
        assert_eq!(g.character_value(&[0, 2], &[0, 2]), QmodZ::ZERO);
    }
}

//! Recognition of the classical quotients whose stack descent data is known.

use std::fmt;

use serde::Serialize;

use crate::finab::{quotient, FinAbGroup};
use crate::rootdata::{center, named_subgroup, DynkinType, Family, GroupSpec, Mode};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum GroupKind {
    /// `π₁` trivial (any product), or twisted mode.
    SimplyConnected,
    /// `Sp(2n)/μ₂`.
    ProjectiveSymplectic { n: usize },
    /// `SO(n)`, dimension `n`.
    SpecialOrthogonal { n: usize },
    /// `PSO(2n)`.
    ProjectiveOrthogonal { n: usize },
    /// `Ω(4n)`: `Spin(4n)` modulo a half-spin kernel.
    Omega { n: usize },
    /// `PGL(n)`.
    ProjectiveLinear { n: usize },
    /// Anything else: products with nontrivial `π₁`, `SL(n)/μ_k`, adjoint `E6`/`E7`, ...
    Other,
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupKind::SimplyConnected => write!(f, "simply connected"),
            GroupKind::ProjectiveSymplectic { n } => write!(f, "PSp({})", 2 * n),
            GroupKind::SpecialOrthogonal { n } => write!(f, "SO({n})"),
            GroupKind::ProjectiveOrthogonal { n } => write!(f, "PSO({})", 2 * n),
            GroupKind::Omega { n } => write!(f, "Omega({})", 4 * n),
            GroupKind::ProjectiveLinear { n } => write!(f, "PGL({n})"),
            GroupKind::Other => write!(f, "unclassified"),
        }
    }
}

fn same_subgroup(z: &FinAbGroup, a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let contains = |big: &[Vec<i64>], small: &[Vec<i64>]| {
        let (q, proj) = quotient(z, big).expect("valid generators");
        small.iter().all(|x| q.is_zero(&proj.apply(x)))
    };
    contains(a, b) && contains(b, a)
}

pub fn classify(spec: &GroupSpec) -> GroupKind {
    if spec.mode() == Mode::TwistedSc || spec.is_simply_connected() {
        return GroupKind::SimplyConnected;
    }
    let [t] = spec.factors() else {
        return GroupKind::Other;
    };
    let t = *t;
    let z = center(t).group;
    let h = spec.pi1_gens();
    let is = |name: &str| named_subgroup(t, name).map(|g| same_subgroup(&z, h, &g)).unwrap_or(false);
    let r = t.rank();
    match t.family() {
        Family::A if is("full") => GroupKind::ProjectiveLinear { n: r + 1 },
        Family::C if is("full") => GroupKind::ProjectiveSymplectic { n: r },
        Family::B if is("full") => GroupKind::SpecialOrthogonal { n: 2 * r + 1 },
        Family::D if is("full") => GroupKind::ProjectiveOrthogonal { n: r },
        Family::D if is("so-kernel") => GroupKind::SpecialOrthogonal { n: 2 * r },
        Family::D if r % 2 == 0 && (is("omega-kernel") || is_other_half_spin(t, &z, h)) => {
            if r == 4 {
                // outer automorphisms permute the three order-2 subgroups
                GroupKind::SpecialOrthogonal { n: 8 }
            } else {
                GroupKind::Omega { n: r / 2 }
            }
        }
        _ => GroupKind::Other,
    }
}

fn is_other_half_spin(t: DynkinType, z: &FinAbGroup, h: &[Vec<i64>]) -> bool {
    let mut e = vec![0; t.rank()];
    e[t.rank() - 2] = 1;
    z.canonical(&e).map(|s| same_subgroup(z, h, &[s])).unwrap_or(false)
}

/// Stack descent data `(e, a)`: the stack Brauer group is
/// `Λ²Γ / (cyclic of order a) ⊕ π₁^∨ / (cyclic of order e)`.
/// `None` where the image of the Picard group of the affine Grassmannian is not known.
pub fn stack_descent(kind: GroupKind, spec: &GroupSpec) -> Option<(i64, i64)> {
    let delta_zero = spec.delta().iter().all(|&x| x == 0);
    match kind {
        GroupKind::SimplyConnected => Some((1, 1)),
        GroupKind::ProjectiveSymplectic { n } if n >= 3 => Some((if n % 2 == 1 { 2 } else { 1 }, 1)),
        GroupKind::SpecialOrthogonal { n } if n >= 8 => Some((1, 1)),
        GroupKind::ProjectiveOrthogonal { n } if n >= 4 => {
            let z = center(spec.factors()[0]).group;
            let ord = z.element_order(spec.delta());
            let a = if n % 2 == 0 {
                if delta_zero {
                    2
                } else {
                    1
                }
            } else {
                4 / ord
            };
            Some((1, a))
        }
        GroupKind::Omega { n } if n >= 3 => Some((if n % 2 == 0 && !delta_zero { 1 } else { 2 }, 1)),
        _ => None,
    }
}

/// Index `m` of the kernel `Z/m → H²(Γ, C*)` in the sequence comparing the moduli
/// space of `G` with the twisted moduli space of `G̃`.
pub fn kernel_index(kind: GroupKind, spec: &GroupSpec) -> Option<i64> {
    let delta_zero = spec.delta().iter().all(|&x| x == 0);
    match kind {
        GroupKind::SimplyConnected => Some(1),
        GroupKind::ProjectiveSymplectic { n } if n >= 3 => Some(if n % 2 == 1 && delta_zero { 2 } else { 1 }),
        GroupKind::SpecialOrthogonal { n } if n >= 8 => Some(1),
        _ => None,
    }
}

use crate::error::{Error, Result};
use crate::finab::{dual, exterior_square, image_cokernel, quotient, subgroup, FinAbGroup, GroupHom, IntMatrix};
use crate::rootdata::{GroupSpec, Mode, ProductCenter};

use super::psi::{psi_g_with, PsiGroup, PsiSubgroup};

/// The evaluation map `b ↦ b(δ, -)` together with the data it was built from.
#[derive(Debug, Clone)]
pub struct Evaluation {
    pub hom: GroupHom,
    /// Source generators as coefficient tuples in `Ψ`.
    pub source: PsiSubgroup,
    /// `Z_G = Z_{G̃}/π₁(G)`.
    pub center_g: FinAbGroup,
    /// Lifts of the canonical generators of `Z_G`, in factor coordinates.
    pub center_g_lifts: Vec<Vec<i64>>,
}

fn canonical_gens(pc: &ProductCenter, gens: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    gens.iter().map(|g| pc.to_canonical(g)).collect()
}

/// `π₁(G)` as an abstract group (trivial in twisted mode).
pub fn pi1(spec: &GroupSpec) -> Result<FinAbGroup> {
    let pc = spec.center();
    Ok(subgroup(&pc.data.group, &canonical_gens(&pc, spec.pi1_gens())?)?.0)
}

pub(crate) fn evaluation_with(pc: &ProductCenter, ps: &PsiGroup, spec: &GroupSpec) -> Result<Evaluation> {
    let source = psi_g_with(pc, ps, spec.pi1_gens())?;
    let (center_g, _) = quotient(&pc.data.group, &canonical_gens(pc, spec.pi1_gens())?)?;
    let center_g_lifts: Vec<Vec<i64>> =
        (0..center_g.rank()).map(|r| pc.to_factor_coords(&center_g.lift(&center_g.generator(r)))).collect();
    let delta = spec.delta();
    let e = center_g.invariant_factors();
    let mut m = IntMatrix::zeros(center_g.rank(), source.group.rank());
    for (j, k) in source.generators.iter().enumerate() {
        for (r, y) in center_g_lifts.iter().enumerate() {
            m[(r, j)] = ps
                .pairing(pc, k, delta, y)
                .scaled_integer(e[r])
                .ok_or_else(|| Error::Invalid("b(δ, -) does not descend to Z_G".into()))?;
        }
    }
    let hom = GroupHom::new(source.group.clone(), dual(&center_g), m)?;
    Ok(Evaluation { hom, source, center_g, center_g_lifts })
}

pub fn evaluation(spec: &GroupSpec) -> Result<Evaluation> {
    let pc = spec.center();
    let ps = PsiGroup::from_center(&pc);
    evaluation_with(&pc, &ps, spec)
}

/// `ev_G^δ : Ψ(G) → Z_G^∨`. In twisted mode the source is all of `Ψ` and the target `Z_{G̃}^∨`.
pub fn ev(spec: &GroupSpec) -> Result<GroupHom> {
    Ok(evaluation(spec)?.hom)
}

/// Checks `b(δ, p) = 0` for every generator `b` of `Ψ(G)` and `p` of `π₁(G)`.
pub fn ev_certificate(spec: &GroupSpec) -> Result<()> {
    let pc = spec.center();
    let ps = PsiGroup::from_center(&pc);
    let source = psi_g_with(&pc, &ps, spec.pi1_gens())?;
    for k in &source.generators {
        for p in spec.pi1_gens() {
            if !ps.pairing(&pc, k, spec.delta(), p).is_zero() {
                return Err(Error::Invalid(format!("form {k:?} pairs δ nontrivially with π₁ generator {p:?}")));
            }
        }
    }
    Ok(())
}

pub fn coker_ev(spec: &GroupSpec) -> Result<FinAbGroup> {
    Ok(image_cokernel(&ev(spec)?)?.1)
}

/// `Γ = H¹(C, π₁(G)) = π₁(G)^{2g}`.
pub fn gamma(spec: &GroupSpec) -> Result<FinAbGroup> {
    let p = pi1(spec)?;
    let copies = 2 * spec.genus() as usize;
    Ok(FinAbGroup::abstract_sum(p.invariant_factors().iter().copied().cycle().take(copies * p.rank())))
}

/// `H²(Γ, C*) = Λ²Γ`.
pub fn h2_gamma(spec: &GroupSpec) -> Result<FinAbGroup> {
    Ok(exterior_square(&gamma(spec)?))
}

pub(crate) fn require_mode(spec: &GroupSpec, mode: Mode) -> Result<()> {
    if spec.mode() != mode {
        let expected = match mode {
            Mode::Component => "component",
            Mode::TwistedSc => "twisted-sc",
        };
        return Err(Error::WrongMode { expected });
    }
    Ok(())
}

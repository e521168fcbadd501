//! Invariants of the Brauer computations across genus, factor order and δ.

use moduli_brauer::brauer::{coker_ev, ev_certificate, h2_gamma, psi_g, BrauerReport};
use moduli_brauer::finab::{dual, exterior_square};
use moduli_brauer::rootdata::{center, named_subgroup, DynkinType, GroupSpec};

fn ty(s: &str) -> DynkinType {
    s.parse().unwrap()
}

fn specs() -> Vec<GroupSpec> {
    let mut out = Vec::new();
    for (t, h) in [
        ("C3", "full"),
        ("C4", "full"),
        ("D5", "so-kernel"),
        ("D6", "full"),
        ("B4", "so-kernel"),
        ("A3", "mu(2)"),
        ("A5", "full"),
        ("E6", "full"),
        ("D8", "omega-kernel"),
    ] {
        let t = ty(t);
        let gens = named_subgroup(t, h).unwrap();
        for delta in center(t).group.elements() {
            if let Ok(s) = GroupSpec::component(vec![t], gens.clone(), delta, 3) {
                out.push(s);
            }
        }
    }
    for t in ["A1", "A4", "C5", "D7", "B3", "E7"] {
        for delta in center(ty(t)).group.elements() {
            out.push(GroupSpec::twisted(vec![ty(t)], delta, 3).unwrap());
        }
    }
    out
}

#[test]
fn genus_changes_only_gamma() {
    for s in specs() {
        let base = BrauerReport::compute(&s).unwrap();
        for g in [4, 5] {
            let r = BrauerReport::compute(&s.with_genus(g).unwrap()).unwrap();
            assert_eq!(r.coker_ev, base.coker_ev, "{s:?}");
            assert_eq!(r.psi_g, base.psi_g);
            assert_eq!(r.descent_power, base.descent_power);
            assert_eq!(r.kind, base.kind);
            let gamma: Vec<i64> =
                base.pi1.invariant_factors().iter().copied().cycle().take(2 * g as usize * base.pi1.rank()).collect();
            assert!(r.h2_gamma.is_isomorphic(&exterior_square(&moduli_brauer::finab::FinAbGroup::abstract_sum(gamma))));
            assert_eq!(r.is_resolved(), base.is_resolved());
        }
    }
}

#[test]
fn certificates_and_order_equation() {
    for s in specs() {
        ev_certificate(&s).unwrap();
        let r = BrauerReport::compute(&s).unwrap();
        assert_eq!(r.coker_ev, coker_ev(&s).unwrap());
        assert_eq!(r.h2_gamma, h2_gamma(&s).unwrap());
        assert_eq!(r.psi_g, psi_g(&s).unwrap().group);
        if let (Some(m), Some(st)) = (r.moduli_brauer.order.exact(), r.stack_brauer.order.exact()) {
            assert_eq!(m, &(r.coker_ev.order() * st), "{s:?}");
        }
    }
}

#[test]
fn descent_power_times_cokernel_is_dual_center() {
    for s in specs().into_iter().filter(|s| s.mode() == moduli_brauer::rootdata::Mode::TwistedSc) {
        let r = BrauerReport::compute(&s).unwrap();
        let z = dual(&center(s.factors()[0]).group);
        assert_eq!(r.coker_ev.order() * r.descent_power.unwrap() as u64, z.order(), "{s:?}");
    }
}

#[test]
fn factor_order_does_not_matter() {
    let a = GroupSpec::twisted(vec![ty("A2"), ty("C3")], vec![1, 1], 3).unwrap();
    let b = GroupSpec::twisted(vec![ty("C3"), ty("A2")], vec![1, 1], 3).unwrap();
    let (ra, rb) = (BrauerReport::compute(&a).unwrap(), BrauerReport::compute(&b).unwrap());
    assert!(ra.moduli_brauer.group.unwrap().is_isomorphic(&rb.moduli_brauer.group.unwrap()));

    let a = GroupSpec::component(vec![ty("A1"), ty("D5")], vec![vec![1, 2]], vec![1, 2], 3).unwrap();
    let b = GroupSpec::component(vec![ty("D5"), ty("A1")], vec![vec![2, 1]], vec![2, 1], 3).unwrap();
    let (ra, rb) = (BrauerReport::compute(&a).unwrap(), BrauerReport::compute(&b).unwrap());
    assert!(ra.coker_ev.is_isomorphic(&rb.coker_ev));
    assert!(ra.psi_g.is_isomorphic(&rb.psi_g));
    assert_eq!(ra.moduli_brauer.order, rb.moduli_brauer.order);
    assert_eq!(ra.stack_brauer.order, rb.stack_brauer.order);
}

//! The nine acceptance criteria, one PASS/FAIL line each.

use moduli_brauer::brauer::{
    br_moduli, br_stack, br_twisted_sc, min_descending_power, sp_local_factoriality, BrauerReport, CheckStatus,
};
use moduli_brauer::finab::{
    exterior_square, invariant_factors_of, schur_multiplier_oracle, smith_normal_form, FinAbGroup, IntMatrix,
};
use moduli_brauer::rootdata::{center, named_subgroup, DynkinType, Family, GroupSpec};
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ty(f: Family, r: usize) -> DynkinType {
    DynkinType::new(f, r).unwrap()
}

fn inv(orders: &[i64]) -> Vec<i64> {
    invariant_factors_of(orders.iter().copied())
}

fn resolved(r: &BrauerReport, moduli: bool) -> Result<Vec<i64>, String> {
    let a = if moduli { &r.moduli_brauer } else { &r.stack_brauer };
    a.group.as_ref().map(|g| g.invariant_factors().to_vec()).ok_or_else(|| format!("{:?} not resolved", r.spec))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: impl std::fmt::Display, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: expected {want:?}, got {got:?}"))
    }
}

fn named(t: DynkinType, name: &str, delta: Vec<i64>) -> Result<GroupSpec, String> {
    GroupSpec::component(vec![t], named_subgroup(t, name).map_err(|e| e.to_string())?, delta, 3)
        .map_err(|e| e.to_string())
}

fn err(e: moduli_brauer::Error) -> String {
    e.to_string()
}

fn simply_connected() -> Check {
    use Family::*;
    let mut cases: Vec<(DynkinType, Vec<i64>)> = Vec::new();
    for r in 1..=8 {
        cases.push((ty(A, r), inv(&[r as i64 + 1])));
    }
    for r in 2..=6 {
        cases.push((ty(B, r), vec![2]));
        cases.push((ty(C, r), vec![2]));
    }
    for r in 4..=8 {
        cases.push((ty(D, r), if r % 2 == 1 { vec![4] } else { vec![2, 2] }));
    }
    cases.push((ty(E, 6), vec![3]));
    cases.push((ty(E, 7), vec![2]));
    for t in [ty(E, 8), ty(F, 4), ty(G, 2)] {
        cases.push((t, vec![]));
    }
    for (t, want) in cases {
        let spec = GroupSpec::component(vec![t], vec![], vec![], 3).map_err(err)?;
        let r = br_moduli(&spec).map_err(err)?;
        expect_eq(t, resolved(&r, true)?, want)?;
    }
    Ok(())
}

fn twisted_sl() -> Check {
    for n in 2..=8i64 {
        for d in 0..n {
            let got = br_twisted_sc(ty(Family::A, n as usize - 1), &[d]).map_err(err)?;
            expect_eq(format!("SL({n}) d={d}"), got.invariant_factors().to_vec(), inv(&[num_integer::gcd(n, d)]))?;
        }
    }
    Ok(())
}

fn symplectic() -> Check {
    for n in 3..=8usize {
        let t = ty(Family::C, n);
        let got = br_twisted_sc(t, &[1]).map_err(err)?;
        let power = min_descending_power(t, &[1]).map_err(err)?;
        let want = if n % 2 == 1 { (vec![], 2) } else { (vec![2], 1) };
        expect_eq(format!("Sp({}) d=1", 2 * n), (got.invariant_factors().to_vec(), power), want)?;
    }
    let verdicts: Vec<bool> = (3..=5).map(sp_local_factoriality).collect::<Result<_, _>>().map_err(err)?;
    expect_eq("local factoriality n=3,4,5", verdicts, vec![true, false, true])
}

fn spin() -> Check {
    for n in 7..=16usize {
        let t = if n % 2 == 1 { ty(Family::B, (n - 1) / 2) } else { ty(Family::D, n / 2) };
        let z = center(t).group;
        for delta in z.elements() {
            let spec = GroupSpec::twisted(vec![t], delta.clone(), 3).map_err(err)?;
            let r = BrauerReport::compute(&spec).map_err(err)?;
            let got = (resolved(&r, true)?, r.descent_power.ok_or("no descent power")?);
            let zero = delta.iter().all(|&x| x == 0);
            let want = match (zero, n % 4) {
                (true, 1 | 3) => (vec![2], 1),
                (true, 2) => (vec![4], 1),
                (true, _) => (vec![2, 2], 1),
                (false, 1 | 3) => (vec![2], 1),
                (false, 2) if delta[0] % 2 == 1 => (vec![], 4),
                (false, 2) => (vec![2], 2),
                (false, _) => (vec![2], 2),
            };
            expect_eq(format!("Spin({n}) δ={delta:?}"), got, want)?;
        }
    }
    Ok(())
}

fn special_orthogonal() -> Check {
    let lam = vec![2; 15];
    let with = |extra: &[i64]| inv(&[lam.as_slice(), extra].concat());
    for n in 8..=12usize {
        let t = if n % 2 == 1 { ty(Family::B, (n - 1) / 2) } else { ty(Family::D, n / 2) };
        let gens = named_subgroup(t, "so-kernel").map_err(err)?;
        let z_spin: &[i64] = match n % 4 {
            1 | 3 => &[2],
            2 => &[4],
            _ => &[2, 2],
        };
        for delta in [center(t).group.zero(), gens[0].clone()] {
            let zero = delta.iter().all(|&x| x == 0);
            let spec = GroupSpec::component(vec![t], gens.clone(), delta.clone(), 3).map_err(err)?;
            let r = br_moduli(&spec).map_err(err)?;
            let want = if zero { with(z_spin) } else { with(&[2]) };
            expect_eq(format!("SO({n}) δ={delta:?} moduli"), resolved(&r, true)?, want)?;
            expect_eq(format!("SO({n}) δ={delta:?} stack"), resolved(&r, false)?, with(&[2]))?;
        }
    }
    Ok(())
}

fn pso_and_omega() -> Check {
    for n in 4..=8usize {
        let t = ty(Family::D, n);
        let z = center(t).group;
        for delta in z.elements() {
            let zero = delta.iter().all(|&x| x == 0);
            let r = br_moduli(&named(t, "full", delta.clone())?).map_err(err)?;
            // Z^∨ ⊕ Λ²((Z^∨)^6) / A_{2n,δ}
            let want = if n % 2 == 0 {
                inv(&[vec![2; if zero { 65 } else { 66 }], vec![2, 2]].concat())
            } else {
                let a = match delta[0] % 4 {
                    0 => 4,
                    2 => 2,
                    _ => 1,
                };
                inv(&[vec![4; 14], vec![4 / a, 4]].concat())
            };
            expect_eq(format!("PSO({}) δ={delta:?} moduli", 2 * n), resolved(&r, true)?, want.clone())?;
            expect_eq(format!("PSO({}) δ={delta:?} stack", 2 * n), resolved(&r, false)?, want)?;
        }
    }
    for n in [3usize, 4] {
        let t = ty(Family::D, 2 * n);
        let gens = named_subgroup(t, "omega-kernel").map_err(err)?;
        for (d, delta) in [(0, center(t).group.zero()), (1, gens[0].clone())] {
            let spec = GroupSpec::component(vec![t], gens.clone(), delta, 3).map_err(err)?;
            let r = br_stack(&spec).map_err(err)?;
            let a: &[i64] = if d == 0 || n % 2 == 1 { &[] } else { &[2] };
            let case = format!("Omega({}) d={d}", 4 * n);
            expect_eq(format!("{case} stack"), resolved(&r, false)?, inv(&[vec![2; 15], a.to_vec()].concat()))?;
            expect_eq(format!("{case} moduli"), resolved(&r, true)?, vec![2; 16])?;
        }
    }
    Ok(())
}

fn exceptional() -> Check {
    for t in [ty(Family::G, 2), ty(Family::F, 4), ty(Family::E, 8)] {
        for g in 3..=5 {
            for spec in [
                GroupSpec::component(vec![t], vec![], vec![], g).map_err(err)?,
                GroupSpec::twisted(vec![t], vec![], g).map_err(err)?,
            ] {
                let r = BrauerReport::compute(&spec).map_err(err)?;
                expect_eq(
                    format!("{t} g={g} {:?}", spec.mode()),
                    (resolved(&r, false)?, resolved(&r, true)?),
                    (vec![], vec![]),
                )?;
            }
        }
    }
    Ok(())
}

/// All invariant-factor chains with product at most `bound`.
fn chains(bound: i64) -> Vec<Vec<i64>> {
    fn go(prefix: Vec<i64>, rest: i64, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied().unwrap_or(1);
        let mut d = if prefix.is_empty() { 2 } else { last };
        while d <= rest {
            if d % last == 0 {
                let mut p = prefix.clone();
                p.push(d);
                go(p, rest / d, out);
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    go(vec![], bound, &mut out);
    out
}

fn oracles() -> Check {
    let groups = chains(16);
    // abelian groups of order 1..=16: 1,1,1,2,1,1,1,3,2,1,1,2,1,1,1,5
    if groups.len() != 25 {
        return Err(format!("expected 25 groups of order <= 16, got {}", groups.len()));
    }
    for orders in groups {
        let a = FinAbGroup::abstract_sum(orders.iter().copied());
        let oracle = schur_multiplier_oracle(&a).map_err(err)?;
        expect_eq(
            format!("Λ² {a}"),
            exterior_square(&a).invariant_factors().to_vec(),
            oracle.invariant_factors().to_vec(),
        )?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for k in 0..500 {
        let (r, c) = (rng.random_range(1..=6), rng.random_range(1..=6));
        let m = IntMatrix::from_fn(r, c, |_, _| rng.random_range(-9..=9));
        let s = smith_normal_form(&m);
        // transforms of dense inputs can reach 1e13, so products are formed in i128
        let w = |x: &IntMatrix| x.map(i128::from);
        if w(&s.u) * w(&m) * w(&s.v) != w(&s.s) {
            return Err(format!("matrix {k}: U·M·V != S for {m}"));
        }
        if w(&s.u) * w(&s.u_inv) != w(&IntMatrix::identity(r, r))
            || w(&s.v) * w(&s.v_inv) != w(&IntMatrix::identity(c, c))
        {
            return Err(format!("matrix {k}: transforms not unimodular"));
        }
        let d = s.diagonal();
        let off_diagonal = (0..r).any(|i| (0..c).any(|j| i != j && s.s[(i, j)] != 0));
        let chain = d.windows(2).all(|w| if w[0] == 0 { w[1] == 0 } else { w[1] % w[0] == 0 });
        if off_diagonal || !chain || d.iter().any(|&x| x < 0) {
            return Err(format!("matrix {k}: S is not in Smith form: {}", s.s));
        }
    }
    Ok(())
}

fn cross_path() -> Check {
    for n in 3..=8usize {
        let t = ty(Family::C, n);
        for d in 0..2 {
            let r = BrauerReport::compute(&named(t, "full", vec![d])?).map_err(err)?;
            let m = if d == 0 && n % 2 == 1 { 2 } else { 1 };
            expect_eq(
                format!("PSp({}) d={d}", 2 * n),
                (r.cross_check.status, r.cross_check.m),
                (CheckStatus::Pass, Some(m)),
            )?;
        }
    }
    for n in 8..=16usize {
        let t = if n % 2 == 1 { ty(Family::B, (n - 1) / 2) } else { ty(Family::D, n / 2) };
        let gens = named_subgroup(t, "so-kernel").map_err(err)?;
        for delta in [center(t).group.zero(), gens[0].clone()] {
            let spec = GroupSpec::component(vec![t], gens.clone(), delta.clone(), 3).map_err(err)?;
            let r = BrauerReport::compute(&spec).map_err(err)?;
            expect_eq(
                format!("SO({n}) δ={delta:?}"),
                (r.cross_check.status, r.cross_check.m),
                (CheckStatus::Pass, Some(1)),
            )?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("simply connected groups: Br equals the dual of the center", simply_connected),
        ("twisted SL(n): Z/gcd(n, d)", twisted_sl),
        ("twisted Sp(2n), d = 1, and local factoriality", symplectic),
        ("twisted Spin(n), n = 7..16: Brauer group and Pfaffian power", spin),
        ("SO(n), n = 8..12: moduli and stack", special_orthogonal),
        ("PSO(2n) and Omega(4n) tables", pso_and_omega),
        ("G2, F4, E8: trivial for g = 3, 4, 5", exceptional),
        ("exterior square vs Schur oracle; Smith normal form", oracles),
        ("order equation on the PSp and SO grids", cross_path),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = std::time::Instant::now();
        let result = check();
        let ms = start.elapsed().as_millis();
        match &result {
            Ok(()) => println!("criterion {}: PASS  {name} ({ms} ms)", i + 1),
            Err(e) => {
                println!("criterion {}: FAIL  {name}: {e}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}

//! Brute-force `H²(A, C*)` from normalized 2-cochains.
//!
//! This is a test-scale oracle for [`exterior_square`](super::exterior_square):
//! it never looks at gcds of invariant factors. With `N = |A|`, every class is
//! represented by a cocycle with values in `μ_N ≅ Z/N`, so
//!
//! ```text
//! H²(A, C*) = Z²(A, Z/N) / (B²(A, Z/N) + carries)
//! ```
//!
//! where the carries are the connecting images of `Hom(A, Z/N) = Z¹(A, Z/N)`:
//! the coboundaries of `C*`-valued 1-cochains whose coboundary happens to land in `μ_N`.

use super::group::FinAbGroup;
use crate::error::{Error, Result};

/// Largest group order accepted by [`schur_multiplier_oracle`].
pub const ORACLE_MAX_ORDER: u64 = 16;

/// Diagonalization of an integer matrix over `Z/N` with column transforms tracked.
struct ModDiag {
    modulus: i64,
    diag: Vec<i64>,
    v: Vec<Vec<i64>>,
    v_inv: Vec<Vec<i64>>,
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}

fn diagonalize_mod(rows: Vec<Vec<i64>>, ncols: usize, modulus: i64) -> ModDiag {
    let n = modulus;
    let md = |x: i64| x.rem_euclid(n);
    let mut a: Vec<Vec<i64>> = rows.into_iter().map(|r| r.into_iter().map(md).collect()).collect();
    a.retain(|r| r.iter().any(|&x| x != 0));
    a.sort();
    a.dedup();
    let nrows = a.len();
    let identity = |k: usize| (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect::<Vec<Vec<i64>>>();
    let mut v = identity(ncols);
    let mut v_inv = identity(ncols);
    let mut diag = Vec::new();

    // column transform on (t, j): col_t <- p col_t + q col_j, col_j <- r col_t + s col_j
    let col_op = |a: &mut Vec<Vec<i64>>,
                  v: &mut Vec<Vec<i64>>,
                  v_inv: &mut Vec<Vec<i64>>,
                  t: usize,
                  j: usize,
                  p: i64,
                  q: i64,
                  r: i64,
                  s: i64| {
        for row in a.iter_mut().chain(v.iter_mut()) {
            let (x, y) = (row[t], row[j]);
            row[t] = md(p * x + q * y);
            row[j] = md(r * x + s * y);
        }
        let (rt, rj) = (v_inv[t].clone(), v_inv[j].clone());
        for c in 0..rt.len() {
            v_inv[t][c] = md(s * rt[c] - r * rj[c]);
            v_inv[j][c] = md(-q * rt[c] + p * rj[c]);
        }
    };

    for t in 0..nrows.min(ncols) {
        loop {
            // pivot: smallest nonzero representative in the active block
            let mut best: Option<(i64, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, &x) in row.iter().enumerate().skip(t) {
                    if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                        best = Some((x, i, j));
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                diag.resize(nrows.min(ncols), 0);
                return ModDiag { modulus, diag, v, v_inv };
            };
            a.swap(t, pi);
            if pj != t {
                // swap with a sign flip, keeping determinant 1
                col_op(&mut a, &mut v, &mut v_inv, t, pj, 0, 1, -1, 0);
            }

            let mut clean = true;
            for i in t + 1..nrows {
                let (p, b) = (a[t][t], a[i][t]);
                if b == 0 {
                    continue;
                }
                if b % p == 0 {
                    let q = b / p;
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in tail[0].iter_mut().zip(&head[t]) {
                        *x = md(*x - q * y);
                    }
                } else {
                    let (g, s, u) = ext_gcd(p, b);
                    let (rt, ri) = (a[t].clone(), a[i].clone());
                    for c in 0..ncols {
                        a[t][c] = md(s * rt[c] + u * ri[c]);
                        a[i][c] = md(-(b / g) * rt[c] + (p / g) * ri[c]);
                    }
                    clean = false;
                }
            }
            for j in t + 1..ncols {
                let (p, b) = (a[t][t], a[t][j]);
                if b == 0 {
                    continue;
                }
                if b % p == 0 {
                    col_op(&mut a, &mut v, &mut v_inv, t, j, 1, 0, -(b / p), 1);
                } else {
                    let (g, s, u) = ext_gcd(p, b);
                    col_op(&mut a, &mut v, &mut v_inv, t, j, s, u, -(b / g), p / g);
                    clean = false;
                }
            }
            if clean && (t + 1..nrows).all(|i| a[i][t] == 0) {
                break;
            }
        }
        diag.push(a[t][t]);
    }
    diag.resize(nrows.min(ncols), 0);
    ModDiag { modulus, diag, v, v_inv }
}

impl ModDiag {
    /// Generators of `{x : A x = 0 mod N}` as `(column of V scaled, order)`, with the
    /// step `N / order` used for each basis direction.
    fn kernel(&self) -> Vec<(usize, i64)> {
        let n = self.modulus;
        (0..self.v.len())
            .map(|i| {
                let s = self.diag.get(i).copied().unwrap_or(0);
                (i, num_integer::gcd(s, n))
            })
            .filter(|&(_, order)| order > 1)
            .collect()
    }

    fn kernel_vectors(&self) -> Vec<Vec<i64>> {
        let n = self.modulus;
        self.kernel()
            .into_iter()
            .map(|(i, order)| {
                let step = n / order;
                self.v.iter().map(|row| (row[i] * step).rem_euclid(n)).collect()
            })
            .collect()
    }
}

/// Computes `H²(A, C*)` for `|A| <= 16` by explicit cochain linear algebra.
pub fn schur_multiplier_oracle(a: &FinAbGroup) -> Result<FinAbGroup> {
    let order = a.order_u64().unwrap_or(u64::MAX);
    if order > ORACLE_MAX_ORDER {
        return Err(Error::SizeCap { order, cap: ORACLE_MAX_ORDER });
    }
    if order == 1 {
        return Ok(FinAbGroup::trivial());
    }
    let n = order as i64;
    let elems = a.elements();
    let index = |x: &[i64]| elems.iter().position(|e| e == x).expect("closed under addition");
    let m = elems.len();
    let add: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| index(&a.add(&elems[i], &elems[j]))).collect()).collect();

    // normalized cochains live on nonzero elements; element 0 is the identity
    let nz = m - 1;
    let pair = |x: usize, y: usize| (x - 1) * nz + (y - 1);

    // δ¹ on normalized 1-cochains
    let d1_rows: Vec<Vec<i64>> = (1..m)
        .flat_map(|x| (1..m).map(move |y| (x, y)))
        .map(|(x, y)| {
            let mut row = vec![0; nz];
            row[x - 1] += 1;
            row[y - 1] += 1;
            if add[x][y] != 0 {
                row[add[x][y] - 1] -= 1;
            }
            row
        })
        .collect();

    // δ² on normalized 2-cochains
    let mut d2_rows = Vec::with_capacity(nz * nz * nz);
    for x in 1..m {
        for y in 1..m {
            for z in 1..m {
                let mut row = vec![0i64; nz * nz];
                row[pair(y, z)] += 1;
                if add[x][y] != 0 {
                    row[pair(add[x][y], z)] -= 1;
                }
                if add[y][z] != 0 {
                    row[pair(x, add[y][z])] += 1;
                }
                row[pair(x, y)] -= 1;
                d2_rows.push(row);
            }
        }
    }

    let cocycles = diagonalize_mod(d2_rows, nz * nz, n);
    let homs = diagonalize_mod(d1_rows.clone(), nz, n).kernel_vectors();

    // the subgroup to divide out, as 2-cochains
    let mut killed: Vec<Vec<i64>> = Vec::new();
    for x in 1..m {
        let mut f = vec![0; nz];
        f[x - 1] = 1;
        killed.push(d1_rows.iter().map(|r| r.iter().zip(&f).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n)).collect());
    }
    for h in &homs {
        let lift = |e: usize| if e == 0 { 0 } else { h[e - 1] };
        let mut carry = vec![0; nz * nz];
        for x in 1..m {
            for y in 1..m {
                let s = lift(x) + lift(y) - lift(add[x][y]);
                debug_assert_eq!(s.rem_euclid(n), 0);
                carry[pair(x, y)] = (s / n).rem_euclid(n);
            }
        }
        killed.push(carry);
    }

    // coordinates of the killed cochains in the cocycle basis; the relation lattice
    // contains N·Z^k, so the quotient is read off a diagonalization mod N
    let basis = cocycles.kernel();
    let k = basis.len();
    let mut rel: Vec<Vec<i64>> = basis
        .iter()
        .enumerate()
        .map(|(r, &(_, ord))| {
            let mut row = vec![0; k];
            row[r] = ord;
            row
        })
        .collect();
    for w in &killed {
        let mut row = vec![0; k];
        for (r, &(i, ord)) in basis.iter().enumerate() {
            let y: i64 = cocycles.v_inv[i].iter().zip(w).map(|(a, b)| a * b).sum::<i64>().rem_euclid(n);
            let step = n / ord;
            if y % step != 0 {
                return Err(Error::Invalid("killed cochain is not a cocycle".into()));
            }
            row[r] = y / step;
        }
        rel.push(row);
    }
    let quotient = diagonalize_mod(rel, k, n);
    let orders: Vec<i64> = (0..k).map(|i| num_integer::gcd(quotient.diag.get(i).copied().unwrap_or(0), n)).collect();
    FinAbGroup::from_cyclic_orders(&orders)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four() {
        let g = schur_multiplier_oracle(&FinAbGroup::abstract_sum([2, 2])).unwrap();
        assert_eq!(g.invariant_factors(), &[2]);
    }

    #[test]
    fn cyclic_is_trivial() {
        assert!(schur_multiplier_oracle(&FinAbGroup::cyclic(4)).unwrap().is_trivial());
        assert!(schur_multiplier_oracle(&FinAbGroup::cyclic(7)).unwrap().is_trivial());
    }

    #[test]
    fn two_by_four() {
        let g = schur_multiplier_oracle(&FinAbGroup::abstract_sum([2, 4])).unwrap();
        assert_eq!(g.invariant_factors(), &[2]);
    }

    #[test]
    fn size_cap() {
        let err = schur_multiplier_oracle(&FinAbGroup::cyclic(17)).unwrap_err();
        assert_eq!(err, Error::SizeCap { order: 17, cap: 16 });
    }
}

//! Smith normal form over the integers.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value in the
//! active block, breaking ties by lowest row and then lowest column, so the
//! transforms are a deterministic function of the input.

use nalgebra::DMatrix;

pub type IntMatrix = DMatrix<i64>;

/// Result of [`smith_normal_form`]: `u * m * v == s`, with `u`, `v` unimodular.
///
/// The inverses are tracked alongside so callers never need to invert a
/// unimodular matrix after the fact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Smith {
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
    pub v_inv: IntMatrix,
}

impl Smith {
    /// Diagonal entries `s_11, s_22, ...` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.s.nrows().min(self.s.ncols())).map(|i| self.s[(i, i)]).collect()
    }

    /// Number of nonzero diagonal entries.
    pub fn rank(&self) -> usize {
        self.diagonal().iter().take_while(|&&d| d != 0).count()
    }
}

/// `a / b` rounded to the nearest integer, so the remainder has `|r| <= |b| / 2`.
fn nearest_quotient(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if 2 * r > b.abs() {
        q + b.signum()
    } else {
        q
    }
}

struct Reducer {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_rows(i, j);
            self.u.swap_rows(i, j);
            self.u_inv.swap_columns(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap_columns(i, j);
            self.v.swap_columns(i, j);
            self.v_inv.swap_rows(i, j);
        }
    }

    /// row[target] += q * row[src]
    fn add_row(&mut self, target: usize, src: usize, q: i64) {
        if q == 0 {
            return;
        }
        for c in 0..self.a.ncols() {
            self.a[(target, c)] += q * self.a[(src, c)];
        }
        for c in 0..self.u.ncols() {
            self.u[(target, c)] += q * self.u[(src, c)];
        }
        for r in 0..self.u_inv.nrows() {
            self.u_inv[(r, src)] -= q * self.u_inv[(r, target)];
        }
    }

    /// col[target] += q * col[src]
    fn add_col(&mut self, target: usize, src: usize, q: i64) {
        if q == 0 {
            return;
        }
        for r in 0..self.a.nrows() {
            self.a[(r, target)] += q * self.a[(r, src)];
        }
        for r in 0..self.v.nrows() {
            self.v[(r, target)] += q * self.v[(r, src)];
        }
        for c in 0..self.v_inv.ncols() {
            self.v_inv[(src, c)] -= q * self.v_inv[(target, c)];
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.a.ncols() {
            self.a[(i, c)] = -self.a[(i, c)];
        }
        for c in 0..self.u.ncols() {
            self.u[(i, c)] = -self.u[(i, c)];
        }
        for r in 0..self.u_inv.nrows() {
            self.u_inv[(r, i)] = -self.u_inv[(r, i)];
        }
    }

    fn find_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(i64, usize, usize)> = None;
        for i in t..self.a.nrows() {
            for j in t..self.a.ncols() {
                let x = self.a[(i, j)].abs();
                if x != 0 && best.is_none_or(|(b, _, _)| x < b) {
                    best = Some((x, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(&mut self) {
        let (m, n) = self.a.shape();
        for t in 0..m.min(n) {
            loop {
                let Some((pi, pj)) = self.find_pivot(t) else {
                    return;
                };
                self.swap_rows(t, pi);
                self.swap_cols(t, pj);
                let p = self.a[(t, t)];

                let mut clean = true;
                for i in t + 1..m {
                    let q = nearest_quotient(self.a[(i, t)], p);
                    self.add_row(i, t, -q);
                    clean &= self.a[(i, t)] == 0;
                }
                for j in t + 1..n {
                    let q = nearest_quotient(self.a[(t, j)], p);
                    self.add_col(j, t, -q);
                    clean &= self.a[(t, j)] == 0;
                }
                if !clean {
                    continue;
                }

                let offender = (t + 1..m).find(|&i| (t + 1..n).any(|j| self.a[(i, j)] % p != 0));
                match offender {
                    Some(i) => self.add_row(t, i, 1),
                    None => break,
                }
            }
            if self.a[(t, t)] < 0 {
                self.negate_row(t);
            }
        }
    }
}

/// Computes `(U, S, V)` with `U * m * V = S`, `S` diagonal with `s_1 | s_2 | ...`.
pub fn smith_normal_form(m: &IntMatrix) -> Smith {
    let (rows, cols) = m.shape();
    let mut r = Reducer {
        a: m.clone(),
        u: IntMatrix::identity(rows, rows),
        u_inv: IntMatrix::identity(rows, rows),
        v: IntMatrix::identity(cols, cols),
        v_inv: IntMatrix::identity(cols, cols),
    };
    r.reduce();
    Smith { u: r.u, u_inv: r.u_inv, s: r.a, v: r.v, v_inv: r.v_inv }
}

/// Integer basis (as columns) of the kernel `{x : m x = 0}`.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let smith = smith_normal_form(m);
    let rank = smith.rank();
    smith.v.columns(rank, m.ncols() - rank).into_owned()
}

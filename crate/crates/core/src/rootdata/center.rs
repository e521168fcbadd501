use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};

use super::dynkin::{DynkinType, Family};
use crate::error::{Error, Result};
use crate::finab::{FinAbGroup, GroupHom, IntMatrix};
use crate::qmodz::QmodZ;

type Q = Ratio<i128>;

/// Symmetric `Q/Z`-valued bilinear form, given by its values on canonical generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkingForm {
    values: Vec<Vec<QmodZ>>,
}

impl LinkingForm {
    pub fn new(values: Vec<Vec<QmodZ>>) -> Self {
        LinkingForm { values }
    }

    pub fn values(&self) -> &[Vec<QmodZ>] {
        &self.values
    }

    pub fn dim(&self) -> usize {
        self.values.len()
    }

    pub fn eval(&self, x: &[i64], y: &[i64]) -> QmodZ {
        let mut acc = QmodZ::ZERO;
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                acc = acc + self.values[i][j] * (xi * yj);
            }
        }
        acc
    }

    /// Order of the form as an element of `Hom(Z ⊗ Z, Q/Z)`.
    pub fn order(&self) -> i64 {
        self.values.iter().flatten().fold(1, |acc, v| acc.lcm(&v.order()))
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.values[i][j] == self.values[j][i]))
    }

    /// `x ↦ b(x, -)` as a map to the dual group in character coordinates.
    pub fn adjoint(&self, group: &FinAbGroup) -> Result<GroupHom> {
        let d = group.invariant_factors();
        let m = IntMatrix::from_fn(d.len(), d.len(), |r, c| {
            self.values[c][r].scaled_integer(d[r]).expect("form values have denominators dividing the exponent")
        });
        GroupHom::new(group.clone(), crate::finab::dual(group), m)
    }

    pub fn is_nondegenerate(&self, group: &FinAbGroup) -> bool {
        match self.adjoint(group) {
            Ok(f) => crate::finab::image_cokernel(&f).map(|(_, co)| co.is_trivial()).unwrap_or(false),
            Err(_) => false,
        }
    }
}

/// Center of a simply connected group with its linking form.
///
/// `gen_coords[k]` is a coweight representing canonical generator `k`, written in the
/// simple-coroot basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterData {
    pub group: FinAbGroup,
    pub gen_coords: Vec<Vec<Ratio<i128>>>,
    pub form: LinkingForm,
}

fn rational_inverse(m: &IntMatrix) -> Vec<Vec<Q>> {
    let n = m.nrows();
    let mut a: Vec<Vec<Q>> = (0..n)
        .map(|i| {
            let mut row: Vec<Q> = (0..n).map(|j| Q::from_integer(m[(i, j)] as i128)).collect();
            row.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).expect("nonsingular");
        a.swap(c, p);
        let inv = a[c][c].recip();
        for x in a[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c];
                let pivot = a[c].clone();
                for (x, y) in a[r].iter_mut().zip(pivot) {
                    *x -= f * y;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Center `Z_{G̃}` of the simply connected group of type `t`: coweights modulo coroots.
pub fn center(t: DynkinType) -> CenterData {
    let n = t.rank();
    let cartan = t.cartan_matrix();
    // α_j^∨ = Σ_i A_ij ω_i^∨
    let group = FinAbGroup::from_relations(&cartan).expect("Cartan matrix is nonsingular");
    let gram = t.coroot_gram();
    let inv = rational_inverse(&gram);
    let h: Vec<i64> = (0..n).map(|i| t.short_root_factor(i)).collect();

    let gen_coords: Vec<Vec<Q>> = (0..group.rank())
        .map(|k| {
            let w = group.lift(&group.generator(k));
            (0..n).map(|r| (0..n).map(|i| inv[r][i] * Q::from_integer((h[i] * w[i]) as i128)).sum()).collect()
        })
        .collect();

    let pair = |x: &[Q], y: &[Q]| -> Q {
        let mut acc = Q::zero();
        for i in 0..n {
            for j in 0..n {
                if gram[(i, j)] != 0 {
                    acc += x[i] * y[j] * Q::from_integer(gram[(i, j)] as i128);
                }
            }
        }
        acc
    };
    let k = gen_coords.len();
    let values =
        (0..k).map(|a| (0..k).map(|b| QmodZ::from_ratio(pair(&gen_coords[a], &gen_coords[b]))).collect()).collect();
    CenterData { group, gen_coords, form: LinkingForm::new(values) }
}

/// Center of a product of simply connected groups.
///
/// The ambient coordinates of `data.group` are the concatenated canonical
/// coordinates of the factor centers ("factor coordinates").
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductCenter {
    pub factors: Vec<DynkinType>,
    pub blocks: Vec<CenterData>,
    pub data: CenterData,
}

impl ProductCenter {
    /// Length of a factor-coordinate vector.
    pub fn coords_len(&self) -> usize {
        self.blocks.iter().map(|b| b.group.rank()).sum()
    }

    /// Slice range of factor `i` inside factor coordinates.
    pub fn block_range(&self, i: usize) -> std::ops::Range<usize> {
        let start: usize = self.blocks[..i].iter().map(|b| b.group.rank()).sum();
        start..start + self.blocks[i].group.rank()
    }

    /// Reduces factor coordinates blockwise.
    pub fn reduce_coords(&self, x: &[i64]) -> Vec<i64> {
        (0..self.blocks.len()).flat_map(|i| self.blocks[i].group.reduce(&x[self.block_range(i)])).collect()
    }

    pub fn check_coords(&self, x: &[i64]) -> Result<()> {
        if x.len() != self.coords_len() {
            return Err(Error::Dimension { expected: self.coords_len(), got: x.len() });
        }
        Ok(())
    }

    /// `b̄_i(x_i, y_i)` for factor `i`, on factor coordinates.
    pub fn factor_pairing(&self, i: usize, x: &[i64], y: &[i64]) -> QmodZ {
        let r = self.block_range(i);
        self.blocks[i].form.eval(&x[r.clone()], &y[r])
    }

    /// Canonical coordinates of `data.group` from factor coordinates.
    pub fn to_canonical(&self, x: &[i64]) -> Result<Vec<i64>> {
        self.data.group.canonical(x)
    }

    /// Factor coordinates (reduced) of a canonical element.
    pub fn to_factor_coords(&self, x: &[i64]) -> Vec<i64> {
        self.reduce_coords(&self.data.group.lift(x))
    }
}

pub fn product_center(factors: &[DynkinType]) -> ProductCenter {
    let blocks: Vec<CenterData> = factors.iter().map(|&t| center(t)).collect();
    let group = FinAbGroup::direct_sum(&blocks.iter().map(|b| &b.group).collect::<Vec<_>>());
    let pc = ProductCenter {
        factors: factors.to_vec(),
        blocks,
        data: CenterData { group: FinAbGroup::trivial(), gen_coords: vec![], form: LinkingForm::new(vec![]) },
    };
    let lifts: Vec<Vec<i64>> = (0..group.rank()).map(|k| group.lift(&group.generator(k))).collect();
    let gen_coords = lifts
        .iter()
        .map(|x| {
            pc.blocks
                .iter()
                .enumerate()
                .flat_map(|(i, b)| {
                    let xs = &x[pc.block_range(i)];
                    let rank = pc.factors[i].rank();
                    (0..rank)
                        .map(|r| xs.iter().zip(&b.gen_coords).map(|(&c, v)| v[r] * Q::from_integer(c as i128)).sum())
                        .collect::<Vec<Q>>()
                })
                .collect()
        })
        .collect();
    let values = lifts
        .iter()
        .map(|x| lifts.iter().map(|y| (0..pc.blocks.len()).map(|i| pc.factor_pairing(i, x, y)).sum()).collect())
        .collect();
    ProductCenter { data: CenterData { group, gen_coords, form: LinkingForm::new(values) }, ..pc }
}

/// Generators, in canonical coordinates of `center(t)`, of a named central subgroup.
///
/// Names: `trivial`, `full`, `so-kernel` (B and D), `omega-kernel` (D of even rank),
/// `mu(k)` (A).
pub fn named_subgroup(t: DynkinType, name: &str) -> Result<Vec<Vec<i64>>> {
    let c = center(t);
    let g = &c.group;
    let unknown = || Error::UnknownSubgroup { name: name.to_string(), ty: t.to_string() };
    let coweight = |node: usize| -> Result<Vec<Vec<i64>>> {
        let mut e = vec![0; t.rank()];
        e[node] = 1;
        Ok(vec![g.canonical(&e)?])
    };
    match name.trim() {
        "trivial" => Ok(vec![]),
        "full" => Ok((0..g.rank()).map(|k| g.generator(k)).collect()),
        "so-kernel" => match t.family() {
            Family::B | Family::D => coweight(0),
            _ => Err(unknown()),
        },
        "omega-kernel" => match t.family() {
            Family::D if t.rank().is_multiple_of(2) => coweight(t.rank() - 1),
            _ => Err(unknown()),
        },
        other => {
            let k: i64 = other
                .strip_prefix("mu(")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.trim().parse().ok())
                .ok_or_else(unknown)?;
            let n = t.rank() as i64 + 1;
            if t.family() != Family::A || k < 1 || n % k != 0 {
                return Err(unknown());
            }
            if k == 1 {
                return Ok(vec![]);
            }
            Ok(vec![g.scale(n / k, &g.generator(0))])
        }
    }
}

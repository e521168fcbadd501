use super::group::FinAbGroup;
use super::snf::{integer_kernel, IntMatrix};
use crate::error::{Error, Result};

/// A homomorphism between canonically presented groups.
///
/// `matrix` is `target.rank() × source.rank()`; column `j` is the image of the
/// `j`-th canonical generator of the source.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    /// Builds the map, rejecting it unless `d_j * matrix e_j = 0` in the target for every source
    /// invariant factor `d_j`.
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.nrows() != target.rank() {
            return Err(Error::Dimension { expected: target.rank(), got: matrix.nrows() });
        }
        if matrix.ncols() != source.rank() {
            return Err(Error::Dimension { expected: source.rank(), got: matrix.ncols() });
        }
        for (j, &d) in source.invariant_factors().iter().enumerate() {
            let image: Vec<i64> = matrix.column(j).iter().map(|v| v * d).collect();
            if !target.is_zero(&image) {
                return Err(Error::IllDefinedHom { generator: j, order: d });
            }
        }
        let matrix = IntMatrix::from_fn(matrix.nrows(), matrix.ncols(), |r, c| {
            matrix[(r, c)].rem_euclid(target.invariant_factors()[r])
        });
        Ok(GroupHom { source, target, matrix })
    }

    /// Builds the map from a matrix written in the ambient coordinates of both groups.
    pub fn from_ambient(source: FinAbGroup, target: FinAbGroup, ambient: &IntMatrix) -> Result<Self> {
        if ambient.nrows() != target.ambient_rank() || ambient.ncols() != source.ambient_rank() {
            return Err(Error::Dimension {
                expected: target.ambient_rank() * source.ambient_rank(),
                got: ambient.len(),
            });
        }
        let m = target.to_canonical_matrix() * ambient * source.from_canonical_matrix();
        Self::new(source, target, m)
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let matrix = IntMatrix::zeros(target.rank(), source.rank());
        GroupHom { source, target, matrix }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let y: Vec<i64> = (0..self.target.rank())
            .map(|r| (0..self.source.rank()).map(|c| self.matrix[(r, c)] * x[c]).sum())
            .collect();
        self.target.reduce(&y)
    }

    /// Images of the source generators, as target elements.
    pub fn generator_images(&self) -> Vec<Vec<i64>> {
        (0..self.source.rank()).map(|j| self.matrix.column(j).iter().copied().collect()).collect()
    }
}

fn gens_matrix(a: &FinAbGroup, gens: &[Vec<i64>]) -> Result<IntMatrix> {
    for g in gens {
        a.check_element(g)?;
    }
    Ok(IntMatrix::from_fn(a.rank(), gens.len(), |r, c| gens[c][r]))
}

fn invariants_diag(a: &FinAbGroup) -> IntMatrix {
    IntMatrix::from_diagonal(&nalgebra::DVector::from_vec(a.invariant_factors().to_vec()))
}

/// `{x in Z^m : g x = 0 in a}` for a `rank(a) × m` matrix `g`, as columns.
fn preimage_of_zero(a: &FinAbGroup, g: &IntMatrix) -> IntMatrix {
    let m = g.ncols();
    let k = a.rank();
    let mut stacked = IntMatrix::zeros(k, m + k);
    stacked.columns_mut(0, m).copy_from(g);
    stacked.columns_mut(m, k).copy_from(&invariants_diag(a));
    integer_kernel(&stacked).rows(0, m).into_owned()
}

/// The subgroup generated by `gens` (canonical coordinates of `a`) with its inclusion.
pub fn subgroup(a: &FinAbGroup, gens: &[Vec<i64>]) -> Result<(FinAbGroup, GroupHom)> {
    let g = gens_matrix(a, gens)?;
    let relations = preimage_of_zero(a, &g);
    let sub = FinAbGroup::from_relations(&relations)?;
    let incl = &g * sub.from_canonical_matrix();
    let hom = GroupHom::new(sub.clone(), a.clone(), incl)?;
    Ok((sub, hom))
}

/// `a` modulo the subgroup generated by `gens`, with the projection.
pub fn quotient(a: &FinAbGroup, gens: &[Vec<i64>]) -> Result<(FinAbGroup, GroupHom)> {
    let g = gens_matrix(a, gens)?;
    let k = a.rank();
    let mut rel = IntMatrix::zeros(k, k + g.ncols());
    rel.columns_mut(0, k).copy_from(&invariants_diag(a));
    rel.columns_mut(k, g.ncols()).copy_from(&g);
    let q = FinAbGroup::from_relations(&rel)?;
    let proj = GroupHom::new(a.clone(), q.clone(), q.to_canonical_matrix().clone())?;
    Ok((q, proj))
}

/// Image (as a subgroup of the target) and cokernel of `f`.
pub fn image_cokernel(f: &GroupHom) -> Result<(FinAbGroup, FinAbGroup)> {
    let cols = f.generator_images();
    let (image, _) = subgroup(f.target(), &cols)?;
    let (coker, _) = quotient(f.target(), &cols)?;
    Ok((image, coker))
}

/// Kernel of `f` with its inclusion into the source.
pub fn kernel(f: &GroupHom) -> Result<(FinAbGroup, GroupHom)> {
    let gens_cols = preimage_of_zero(f.target(), f.matrix());
    let gens: Vec<Vec<i64>> = (0..gens_cols.ncols())
        .map(|c| f.source().reduce(&gens_cols.column(c).iter().copied().collect::<Vec<_>>()))
        .collect();
    subgroup(f.source(), &gens)
}

/// `Hom(a, Q/Z)`. Canonical coordinates `c` stand for the character
/// `x ↦ sum c_i x_i / d_i` (see [`FinAbGroup::character_value`]).
pub fn dual(a: &FinAbGroup) -> FinAbGroup {
    FinAbGroup::abstract_sum(a.invariant_factors().iter().copied())
}

/// `Λ²a = ⊕_{i<j} Z/gcd(d_i, d_j)`, which is also the Schur multiplier `H²(a, C*)`.
pub fn exterior_square(a: &FinAbGroup) -> FinAbGroup {
    let d = a.invariant_factors();
    let orders = (0..d.len()).flat_map(|i| (i + 1..d.len()).map(move |j| num_integer::gcd(d[i], d[j])));
    FinAbGroup::abstract_sum(orders)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    #[test]
    fn subgroup_examples() {
        let (s, incl) = subgroup(&z(4), &[vec![2]]).unwrap();
        assert_eq!(s.invariant_factors(), &[2]);
        assert_eq!(incl.apply(&[1]), vec![2]);

        let v4 = FinAbGroup::abstract_sum([2, 2]);
        let (s, incl) = subgroup(&v4, &[vec![1, 1]]).unwrap();
        assert_eq!(s.invariant_factors(), &[2]);
        assert_eq!(incl.apply(&[1]), vec![1, 1]);

        let (s, _) = subgroup(&z(6), &[vec![2], vec![3]]).unwrap();
        assert_eq!(s.invariant_factors(), &[6]);

        let (s, _) = subgroup(&z(6), &[]).unwrap();
        assert!(s.is_trivial());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient(&z(4), &[vec![2]]).unwrap().0.invariant_factors(), &[2]);
        let v4 = FinAbGroup::abstract_sum([2, 2]);
        assert_eq!(quotient(&v4, &[vec![1, 1]]).unwrap().0.invariant_factors(), &[2]);
        let (q, proj) = quotient(&z(12), &[vec![4]]).unwrap();
        assert_eq!(q.invariant_factors(), &[4]);
        assert!(q.is_zero(&proj.apply(&[4])));
        assert!(!q.is_zero(&proj.apply(&[1])));
    }

    #[test]
    fn image_cokernel_examples() {
        let f = GroupHom::new(z(4), z(4), IntMatrix::from_row_slice(1, 1, &[2])).unwrap();
        let (im, co) = image_cokernel(&f).unwrap();
        assert_eq!(im.invariant_factors(), &[2]);
        assert_eq!(co.invariant_factors(), &[2]);

        let f = GroupHom::zero(z(3), z(5));
        let (im, co) = image_cokernel(&f).unwrap();
        assert!(im.is_trivial());
        assert_eq!(co.invariant_factors(), &[5]);

        let v4 = FinAbGroup::abstract_sum([2, 2]);
        let f = GroupHom::new(v4, z(4), IntMatrix::from_row_slice(1, 2, &[2, 2])).unwrap();
        let (im, co) = image_cokernel(&f).unwrap();
        assert_eq!(im.invariant_factors(), &[2]);
        assert_eq!(co.invariant_factors(), &[2]);
    }

    #[test]
    fn ill_defined_hom_rejected() {
        // Z/2 -> Z/4 sending the generator to 1 is not a homomorphism
        let err = GroupHom::new(z(2), z(4), IntMatrix::from_row_slice(1, 1, &[1])).unwrap_err();
        assert_eq!(err, Error::IllDefinedHom { generator: 0, order: 2 });
    }

    #[test]
    fn kernel_example() {
        let f = GroupHom::new(z(12), z(4), IntMatrix::from_row_slice(1, 1, &[1])).unwrap();
        let (k, incl) = kernel(&f).unwrap();
        assert_eq!(k.invariant_factors(), &[3]);
        assert!(f.apply(&incl.apply(&[1])).iter().all(|&v| v == 0));
    }

    #[test]
    fn dual_and_exterior_square() {
        assert_eq!(dual(&z(7)).invariant_factors(), &[7]);
        assert!(dual(&FinAbGroup::trivial()).is_trivial());
        assert_eq!(dual(&FinAbGroup::abstract_sum([2, 4])).invariant_factors(), &[2, 4]);

        assert!(exterior_square(&z(9)).is_trivial());
        assert_eq!(exterior_square(&FinAbGroup::abstract_sum([2; 4])).invariant_factors(), &[2; 6]);
        let g = 3;
        let two_g = FinAbGroup::abstract_sum(vec![2; 2 * g]);
        assert_eq!(exterior_square(&two_g).rank(), g * (2 * g - 1));
    }
}

//! Subspaces of Q(i)^n in a canonical reduced column-echelon form.
//!
//! The stored basis is the unique reduced column echelon form of the span,
//! with pivots normalized to 1. Two subspaces are equal as sets exactly when
//! their stored bases are identical, so set-level reasoning reduces to
//! structural equality everywhere downstream.

use crate::matrix::Matrix;
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zero(ambient_dim, 0),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Span of the columns of `m`, canonicalized.
    pub fn from_columns(m: &Matrix) -> Self {
        // The unique RREF of the transposed matrix, transposed back, is the
        // canonical column echelon basis of the column space.
        let (r, pivots) = m.transpose().rref();
        let k = pivots.len();
        let basis = Matrix::from_fn(m.rows(), k, |i, j| r.get(j, i).clone());
        Subspace {
            ambient_dim: m.rows(),
            basis,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// The canonical basis, one column per basis vector.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|j| self.basis.col_vec(j)).collect()
    }

    fn check_ambient(&self, other: &Subspace) {
        assert_eq!(
            self.ambient_dim, other.ambient_dim,
            "ambient dimension mismatch: {} vs {}",
            self.ambient_dim, other.ambient_dim
        );
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        Subspace::from_columns(&self.basis.hstack(&other.basis))
    }

    /// Intersection of column spaces: solutions of `A·x = B·y` recovered
    /// from the kernel of the block matrix `[A | B]` (a Zassenhaus-style
    /// exact computation).
    pub fn intersection(&self, other: &Subspace) -> Subspace {
        self.check_ambient(other);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        let block = self.basis.hstack(&other.basis.neg());
        let ker = block.kernel();
        // Each kernel column splits as (x, y) with A·x = B·y in the span.
        let mut gens = Matrix::zero(self.ambient_dim, ker.dim());
        for (j, col) in ker.basis_vectors().iter().enumerate() {
            let x = &col[..self.dim()];
            let v = self.basis.mul_vec(x);
            for (i, vi) in v.into_iter().enumerate() {
                gens.set(i, j, vi);
            }
        }
        Subspace::from_columns(&gens)
    }

    /// Membership test for a coordinate vector.
    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        self.basis.solve(v).is_some()
    }

    /// True when `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> bool {
        self.check_ambient(other);
        other
            .basis_vectors()
            .iter()
            .all(|v| self.contains_vec(v))
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the span.
    pub fn coords_of(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis.solve(v)
    }

    /// Canonical complement of `sub` inside `self`: the span of those
    /// canonical basis vectors of `self` that enlarge `sub`, canonicalized.
    /// Requires `sub ⊆ self`.
    pub fn complement_of(&self, sub: &Subspace) -> Subspace {
        self.check_ambient(sub);
        debug_assert!(self.contains(sub), "complement_of: sub not contained");
        let mut acc = sub.basis.clone();
        let mut picked = Matrix::zero(self.ambient_dim, 0);
        let mut rank = acc.rank();
        for v in self.basis_vectors() {
            let cand = acc.hstack(&Matrix::column(&v));
            let r = cand.rank();
            if r > rank {
                rank = r;
                acc = cand;
                picked = picked.hstack(&Matrix::column(&v));
            }
        }
        Subspace::from_columns(&picked)
    }

    /// Image of this subspace under a linear map.
    pub fn map_through(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim, "map_through shape mismatch");
        Subspace::from_columns(&m.mul(&self.basis))
    }
}

impl Matrix {
    /// Canonical basis of `ker(self)`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols()).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Matrix::zero(self.cols(), free.len());
        for (k, &fc) in free.iter().enumerate() {
            basis.set(fc, k, Scalar::one());
            for (row, &pc) in pivots.iter().enumerate() {
                basis.set(pc, k, -r.get(row, fc));
            }
        }
        Subspace::from_columns(&basis)
    }

    /// Canonical basis of the column space.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_columns(self)
    }
}

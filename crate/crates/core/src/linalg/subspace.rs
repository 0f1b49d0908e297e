use std::fmt;

use super::matrix::Matrix;
use super::scalar::{FieldSpec, Scalar};
use crate::error::LinAlgError;

/// A linear subspace of K^n, stored as a canonical echelon basis so that
/// equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix, // rref, no zero rows
}

impl Subspace {
    pub fn from_rows(ambient: usize, rows: Vec<Vec<Scalar>>, field: FieldSpec) -> Self {
        let m = Matrix::from_rows(rows, ambient, field);
        Subspace {
            ambient,
            basis: m.rref().0.drop_zero_rows(),
        }
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Subspace {
            ambient: m.cols(),
            basis: m.rref().0.drop_zero_rows(),
        }
    }

    pub fn zero(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zero(0, ambient, field),
        }
    }

    pub fn full(ambient: usize, field: FieldSpec) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient, field),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    /// Canonical basis rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains_vec(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient);
        // v in row span iff stacking does not raise the rank
        let m = self
            .basis
            .vstack(&Matrix::from_rows(vec![v.to_vec()], self.ambient, self.field()));
        m.rank() == self.dim()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|r| self.contains_vec(other.basis.row(r)))
    }

    /// Coordinates of v in this subspace's canonical basis, if v lies in it.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.basis.transpose().solve(v)
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_matrix(&self.basis.vstack(&other.basis))
    }

    /// a ∩ b via the kernel of the stacked coefficient matrix: a vector of the
    /// intersection is A^T x = B^T y, so solve [A^T | -B^T] z = 0.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        if self.ambient != other.ambient {
            return Err(LinAlgError::AmbientMismatch(self.ambient, other.ambient));
        }
        let field = self.field();
        if self.dim() == 0 || other.dim() == 0 {
            return Ok(Subspace::zero(self.ambient, field));
        }
        let at = self.basis.transpose();
        let bt = other.basis.transpose();
        let mut neg_bt = bt.clone();
        for r in 0..neg_bt.rows() {
            for c in 0..neg_bt.cols() {
                *neg_bt.at_mut(r, c) = -bt.at(r, c);
            }
        }
        let stacked = at.hstack(&neg_bt);
        let ker = stacked.kernel_rows();
        // first dim(self) coordinates of each kernel row express the vector in a's basis
        let mut rows = Vec::new();
        for r in 0..ker.rows() {
            let coeffs = &ker.row(r)[..self.dim()];
            let mut v = vec![field.zero(); self.ambient];
            for (i, co) in coeffs.iter().enumerate() {
                for c in 0..self.ambient {
                    let term = co * self.basis.at(i, c);
                    v[c] = &v[c] + &term;
                }
            }
            rows.push(v);
        }
        Ok(Subspace::from_rows(self.ambient, rows, field))
    }

    /// Deterministic complement: returns c with u ⊕ c = w, chosen by greedily
    /// extending u's basis by w's canonical basis vectors in order.
    pub fn complement_in(u: &Subspace, w: &Subspace) -> Result<Subspace, LinAlgError> {
        if u.ambient != w.ambient {
            return Err(LinAlgError::AmbientMismatch(u.ambient, w.ambient));
        }
        if !w.contains(u) {
            return Err(LinAlgError::NotContained);
        }
        let field = w.field();
        let mut current = u.basis.clone();
        let mut chosen: Vec<Vec<Scalar>> = Vec::new();
        let mut rank = u.dim();
        for r in 0..w.dim() {
            if rank == w.dim() {
                break;
            }
            let cand = w.basis.row_vec(r);
            let test = current.vstack(&Matrix::from_rows(vec![cand.clone()], w.ambient, field));
            if test.rank() > rank {
                rank += 1;
                current = test;
                chosen.push(cand);
            }
        }
        Ok(Subspace::from_rows(w.ambient, chosen, field))
    }
}

pub fn rank(m: &Matrix) -> usize {
    m.rank()
}

pub fn image_basis(m: &Matrix) -> Subspace {
    Subspace::from_matrix(&m.transpose())
}

pub fn kernel_basis(m: &Matrix) -> Subspace {
    Subspace {
        ambient: m.cols(),
        basis: m.kernel_rows(),
    }
}

pub fn sum_subspaces(a: &Subspace, b: &Subspace) -> Subspace {
    a.sum(b)
}

pub fn solve_linear(m: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    m.solve(b)
}

pub fn membership_test(s: &Subspace, v: &[Scalar]) -> bool {
    s.contains_vec(v)
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of K^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

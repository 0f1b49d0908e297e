use std::fmt;

use super::scalar::{FieldSpec, Scalar};

/// Dense row-major matrix over an exact field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>, field: FieldSpec) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        assert!(entries.iter().all(|e| e.field() == field));
        Matrix {
            rows,
            cols,
            field,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        Matrix {
            rows,
            cols,
            field,
            entries: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: FieldSpec) -> Self {
        let mut m = Matrix::zero(n, n, field);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>, cols: usize, field: FieldSpec) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols);
            entries.extend(r);
        }
        Matrix::new(nrows, cols, entries, field)
    }

    /// Integer-entry constructor, handy in tests and fixtures.
    pub fn from_i64(rows: usize, cols: usize, data: &[i64], field: FieldSpec) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix::new(
            rows,
            cols,
            data.iter().map(|&n| field.from_i64(n)).collect(),
            field,
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn at(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Scalar> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zero(self.cols, self.rows, self.field);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zero(self.rows, rhs.cols, self.field);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let term = a * rhs.at(k, c);
                    if !term.is_zero() {
                        *out.at_mut(r, c) = &*out.at(r, c) + &term;
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    if !self.at(r, c).is_zero() && !v[c].is_zero() {
                        acc = &acc + &(self.at(r, c) * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Stack rows of `self` on top of rows of `other`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Matrix::new(self.rows + other.rows, self.cols, entries, self.field)
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut rows = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let mut row = self.row_vec(r);
            row.extend(other.row(r).iter().cloned());
            rows.push(row);
        }
        Matrix::from_rows(rows, self.cols + other.cols, self.field)
    }

    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(rows.len(), cols.len(), self.field);
        for (ri, &r) in rows.iter().enumerate() {
            for (ci, &c) in cols.iter().enumerate() {
                *out.at_mut(ri, ci) = self.at(r, c).clone();
            }
        }
        out
    }

    /// Reduced row echelon form with its pivot columns.
    /// Pivot choice is leftmost nonzero column, topmost unused row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let pivot_row = (row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(pr) = pivot_row else { continue };
            if pr != row {
                for c in 0..m.cols {
                    m.entries.swap(row * m.cols + c, pr * m.cols + c);
                }
            }
            let inv = m.at(row, col).inv();
            for c in col..m.cols {
                *m.at_mut(row, c) = &*m.at(row, c) * &inv;
            }
            for r in 0..m.rows {
                if r != row && !m.at(r, col).is_zero() {
                    let factor = m.at(r, col).clone();
                    for c in col..m.cols {
                        let sub = &factor * m.at(row, c);
                        *m.at_mut(r, c) = &*m.at(r, c) - &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Rows spanning { v : self * v = 0 }, in canonical echelon form.
    pub fn kernel_rows(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[fc] = self.field.one();
            for (pi, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(pi, fc);
            }
            rows.push(v);
        }
        let m = Matrix::from_rows(rows, self.cols, self.field);
        m.rref().0.drop_zero_rows()
    }

    /// One solution of self * x = b, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let bmat = Matrix::from_rows(b.iter().map(|s| vec![s.clone()]).collect(), 1, self.field);
        let aug = self.hstack(&bmat);
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(pi, self.cols).clone();
        }
        Some(x)
    }

    pub fn drop_zero_rows(&self) -> Matrix {
        let rows: Vec<Vec<Scalar>> = (0..self.rows)
            .filter(|&r| self.row(r).iter().any(|e| !e.is_zero()))
            .map(|r| self.row_vec(r))
            .collect();
        Matrix::from_rows(rows, self.cols, self.field)
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  [")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(r, c))?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

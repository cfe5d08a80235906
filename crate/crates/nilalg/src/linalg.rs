//! Exact linear algebra: dense matrices and canonical subspaces over `Scalar`.
//!
//! Subspaces are stored as reduced row-echelon bases, so two equal subspaces
//! always have identical basis grids. Pivot choice is leftmost-column,
//! topmost-row, which makes every reduction deterministic.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Coordinate vector; the length is the ambient dimension.
pub type Vector = Vec<Scalar>;

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

/// Standard basis vector with a 1 in (1-based) position `i`.
pub fn unit_vector(n: usize, i: usize) -> Vector {
    assert!(i >= 1 && i <= n, "unit index {i} out of range 1..={n}");
    let mut v = zero_vector(n);
    v[i - 1] = Scalar::one();
    v
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(c: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| c * x).collect()
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vector>) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == nc), "ragged rows");
        Matrix {
            rows: nr,
            cols: nc,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from its columns.
    pub fn from_columns(cols: Vec<Vector>) -> Self {
        let nc = cols.len();
        let nr = cols.first().map_or(0, Vec::len);
        assert!(cols.iter().all(|c| c.len() == nr), "ragged columns");
        let mut m = Matrix::zero(nr, nc);
        for (j, col) in cols.iter().enumerate() {
            for (i, x) in col.iter().enumerate() {
                *m.get_mut(i, j) = x.clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vector {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += &(a * x);
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "inner dimension mismatch");
        let mut out = Matrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let prod = a * b;
                        *out.get_mut(r, c) += &prod;
                    }
                }
            }
        }
        out
    }

    /// Stacks matrices with equal column counts on top of each other.
    pub fn stack(mats: &[Matrix]) -> Matrix {
        assert!(!mats.is_empty());
        let cols = mats[0].cols;
        assert!(mats.iter().all(|m| m.cols == cols));
        let rows = mats.iter().map(|m| m.rows).sum();
        let mut entries = Vec::with_capacity(rows * cols);
        for m in mats {
            entries.extend(m.entries.iter().cloned());
        }
        Matrix {
            rows,
            cols,
            entries,
        }
    }

    /// Gauss-Jordan elimination to reduced row-echelon form.
    ///
    /// Returns the RREF matrix and its rank. Pivots are chosen leftmost
    /// column first, topmost row first, so the result is canonical and the
    /// operation is idempotent.
    pub fn row_reduce(&self) -> (Matrix, usize) {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            let pivot = (rank..m.rows).find(|&r| !m.get(r, col).is_zero());
            let Some(pr) = pivot else { continue };
            m.swap_rows(rank, pr);
            let inv = m.get(rank, col).recip().expect("pivot is nonzero");
            if !inv.is_one() {
                for c in col..m.cols {
                    let v = m.get(rank, c) * &inv;
                    *m.get_mut(rank, c) = v;
                }
            }
            for r in 0..m.rows {
                if r == rank || m.get(r, col).is_zero() {
                    continue;
                }
                let f = m.get(r, col).clone();
                for c in col..m.cols {
                    let delta = &f * m.get(rank, c);
                    *m.get_mut(r, c) -= &delta;
                }
            }
            rank += 1;
            if rank == m.rows {
                break;
            }
        }
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.row_reduce().1
    }

    /// Null space `{v : M v = 0}` as a canonical subspace of F^cols.
    pub fn kernel(&self) -> Subspace {
        let (rref, rank) = self.row_reduce();
        // pivot column of each of the first `rank` rows
        let mut pivot_cols = Vec::with_capacity(rank);
        for r in 0..rank {
            let c = (0..rref.cols)
                .find(|&c| !rref.get(r, c).is_zero())
                .expect("nonzero row");
            pivot_cols.push(c);
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = zero_vector(self.cols);
            v[free] = Scalar::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -rref.get(r, free);
            }
            basis.push(v);
        }
        Subspace::from_vectors(self.cols, basis)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(Scalar::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Solves `sum_k c_k * cols[k] = target` exactly.
///
/// Returns one coefficient vector (free coefficients set to zero) or `None`
/// when the target is outside the column span.
pub fn solve_columns(cols: &[Vector], target: &[Scalar]) -> Option<Vector> {
    let n = target.len();
    assert!(cols.iter().all(|c| c.len() == n), "column length mismatch");
    let mut aug = Matrix::zero(n, cols.len() + 1);
    for (j, col) in cols.iter().enumerate() {
        for (i, x) in col.iter().enumerate() {
            *aug.get_mut(i, j) = x.clone();
        }
    }
    for (i, x) in target.iter().enumerate() {
        *aug.get_mut(i, cols.len()) = x.clone();
    }
    let (rref, rank) = aug.row_reduce();
    let mut coeffs = zero_vector(cols.len());
    for r in 0..rank {
        let pc = (0..rref.cols()).find(|&c| !rref.get(r, c).is_zero())?;
        if pc == cols.len() {
            return None; // inconsistent system
        }
        coeffs[pc] = rref.get(r, cols.len()).clone();
    }
    Some(coeffs)
}

/// A linear subspace of F^n in canonical form.
///
/// The basis rows are the nonzero rows of a reduced row-echelon grid, with
/// strictly increasing pivot columns, so equality of subspaces is equality
/// of representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: (1..=ambient).map(|i| unit_vector(ambient, i)).collect(),
        }
    }

    /// Canonical span of arbitrary vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vector>) -> Self {
        let vecs: Vec<Vector> = vectors
            .into_iter()
            .inspect(|v| assert_eq!(v.len(), ambient, "vector length mismatch"))
            .filter(|v| !is_zero_vector(v))
            .collect();
        if vecs.is_empty() {
            return Subspace::zero(ambient);
        }
        let (rref, rank) = Matrix::from_rows(vecs).row_reduce();
        let basis = (0..rank).map(|r| rref.row(r).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    /// Membership test by reduction against the echelon basis.
    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut w = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).expect("nonzero row");
            if !w[pc].is_zero() {
                let f = w[pc].clone();
                for (wi, ri) in w.iter_mut().zip(row) {
                    *wi -= &(&f * ri);
                }
            }
        }
        is_zero_vector(&w)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    /// Canonical span of the union of two subspaces.
    pub fn join(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            });
        }
        let mut vecs = self.basis.clone();
        vecs.extend(other.basis.iter().cloned());
        Ok(Subspace::from_vectors(self.ambient, vecs))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of F^{})", self.dim(), self.ambient)
    }
}

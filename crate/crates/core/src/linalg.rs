//! Dense exact linear algebra: reduced row echelon form, kernels, and
//! subspaces stored in canonical form.

use std::fmt;

use crate::scalar::Field;

/// A row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<F>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [F] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul_mat(&self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let p = a.clone() * b;
                    out[(i, j)] = out[(i, j)].clone() + p;
                }
            }
        }
        out
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Reduces to reduced row echelon form in place, returning the pivot
    /// columns. Zero rows are removed.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].inv();
            for j in c..self.cols {
                if !self[(r, j)].is_zero() {
                    self[(r, j)] = self[(r, j)].clone() * &inv;
                }
            }
            for i in 0..self.rows {
                if i == r || self[(i, c)].is_zero() {
                    continue;
                }
                let factor = self[(i, c)].clone();
                for j in c..self.cols {
                    if self[(r, j)].is_zero() {
                        continue;
                    }
                    let d = factor.clone() * &self[(r, j)];
                    self[(i, j)] = self[(i, j)].clone() - d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        self.data.truncate(r * self.cols);
        self.rows = r;
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A solution of `M x = b` with every free variable set to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let n = self.cols;
        let rows = (0..self.rows)
            .map(|i| {
                let mut r = self.row(i).to_vec();
                r.push(b[i].clone());
                r
            })
            .collect();
        let mut aug = Matrix::from_rows(n + 1, rows);
        let pivots = aug.rref();
        if pivots.last() == Some(&n) {
            return None;
        }
        let mut x = vec![F::zero(); n];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug[(r, n)].clone();
        }
        Some(x)
    }

    /// Basis of the right null space `{x : M x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[(r, free)].clone();
            }
            basis.push(v);
        }
        basis
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> =
                (0..self.cols).map(|j| self.data[i * self.cols + j].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

pub fn dot<F: Field>(a: &[F], b: &[F]) -> F {
    let mut acc = F::zero();
    for (x, y) in a.iter().zip(b) {
        if x.is_zero() || y.is_zero() {
            continue;
        }
        acc = acc + x.clone() * y;
    }
    acc
}

/// `a + s b`, elementwise.
pub fn axpy<F: Field>(a: &mut [F], s: &F, b: &[F]) {
    if s.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x = x.clone() + s.clone() * y;
        }
    }
}

/// A linear subspace of `F^n`, stored as its unique reduced row echelon basis.
///
/// Two subspaces are equal exactly when their stored matrices are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace<F> {
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Self {
        let mut m = Matrix::from_rows(ambient, vectors);
        let pivots = m.rref();
        Subspace { basis: m, pivots }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// The span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: impl IntoIterator<Item = usize>) -> Self {
        let rows = axes
            .into_iter()
            .map(|a| {
                let mut v = vec![F::zero(); ambient];
                v[a] = F::one();
                v
            })
            .collect();
        Self::span(ambient, rows)
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vecs(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the component along the echelon basis; the result is zero
    /// iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut w = v.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            if w[p].is_zero() {
                continue;
            }
            let s = -w[p].clone();
            axpy(&mut w, &s, self.basis.row(r));
        }
        w
    }

    pub fn contains(&self, v: &[F]) -> bool {
        assert_eq!(v.len(), self.ambient(), "dimension mismatch");
        self.reduce(v).iter().all(F::is_zero)
    }

    /// Coordinates of `v` in the echelon basis, or `None` if `v` is not in the
    /// subspace.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// The vector with the given coordinates in the echelon basis.
    pub fn combine(&self, coords: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ambient()];
        for (r, c) in coords.iter().enumerate() {
            axpy(&mut v, c, self.basis.row(r));
        }
        v
    }

    pub fn is_subspace_of(&self, other: &Subspace<F>) -> bool {
        (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace<F>) -> Subspace<F> {
        let mut rows = self.basis_vecs();
        rows.extend(other.basis_vecs());
        Self::span(self.ambient(), rows)
    }

    pub fn intersection(&self, other: &Subspace<F>) -> Subspace<F> {
        let n = self.ambient();
        if self.dim() == 0 || other.dim() == 0 {
            return Self::zero(n);
        }
        // (a, b) with a U = b W; the left kernel of [U; W] gives a U + b W = 0.
        let mut rows = self.basis_vecs();
        rows.extend(other.basis_vecs());
        let stacked = Matrix::from_rows(n, rows).transpose();
        let k = self.dim();
        let vecs = stacked
            .kernel()
            .into_iter()
            .map(|c| {
                let mut v = vec![F::zero(); n];
                for (r, a) in c[..k].iter().enumerate() {
                    axpy(&mut v, a, self.basis.row(r));
                }
                v
            })
            .collect();
        Self::span(n, vecs)
    }

    /// `{ξ : ξ·v = 0 for all v}`, with ξ written in the dual coordinates.
    pub fn annihilator(&self) -> Subspace<F> {
        let n = self.ambient();
        if self.dim() == 0 {
            return Self::full(n);
        }
        Self::span(n, self.basis.kernel())
    }

    /// The image under a linear map given as a matrix acting on columns.
    pub fn image(&self, map: &Matrix<F>) -> Subspace<F> {
        assert_eq!(map.cols(), self.ambient(), "dimension mismatch");
        let rows = (0..self.dim()).map(|i| map.mul_vec(self.basis.row(i))).collect();
        Self::span(map.rows(), rows)
    }

    /// The complement spanned by the non-pivot coordinate axes.
    pub fn coordinate_complement(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient()];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient()).filter(|&c| !is_pivot[c]).collect()
    }
}

impl<F: fmt::Display> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace {:?}", self.basis)
    }
}

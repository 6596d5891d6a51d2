//! Exact sparse linear algebra over a [`Scalar`] field.
//!
//! [`Matrix`] stores each row as a sorted list of `(column, value)` pairs with no explicit zeros.
//! The path-algebra matrices this crate builds are very sparse (a basis path maps to at most one
//! basis path under an arrow), so row-sparse elimination keeps resolutions of modules with several
//! thousand dimensions cheap.

pub mod fraction_free;

use std::fmt;

use crate::scalar::Scalar;

/// A sparse row of a matrix: sorted by column, no stored zeros.
pub type SparseRow<T> = Vec<(usize, T)>;

#[derive(Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow<T>>,
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Echelon<T> {
    /// Nonzero rows of the reduced form, each with leading coefficient one, ordered by pivot.
    pub rows: Vec<SparseRow<T>>,
    /// Pivot column of each row in `rows`.
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, T::one())]).collect();
        Matrix {
            rows: n,
            cols: n,
            data,
        }
    }

    pub fn from_dense(rows: usize, cols: usize, entries: Vec<Vec<T>>) -> Self {
        assert_eq!(entries.len(), rows, "row count mismatch");
        let data = entries
            .into_iter()
            .map(|row| {
                assert_eq!(row.len(), cols, "column count mismatch");
                row.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_negligible())
                    .collect()
            })
            .collect();
        Matrix { rows, cols, data }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let entries = rows
            .iter()
            .map(|r| r.iter().map(|&v| T::from_i64(v)).collect())
            .collect();
        Self::from_dense(rows.len(), cols, entries)
    }

    /// Builds a matrix from sparse rows. Rows are sorted and zeros removed; duplicate
    /// coordinates are summed.
    pub fn from_sparse_rows(rows: usize, cols: usize, data: Vec<SparseRow<T>>) -> Self {
        assert_eq!(data.len(), rows, "row count mismatch");
        let data = data.into_iter().map(normalize_row).collect::<Vec<_>>();
        debug_assert!(data.iter().all(|r| r.iter().all(|(c, _)| *c < cols)));
        Matrix { rows, cols, data }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]` (each a sparse vector of length `rows`).
    pub fn from_sparse_columns(rows: usize, columns: &[SparseRow<T>]) -> Self {
        let mut data: Vec<SparseRow<T>> = vec![Vec::new(); rows];
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                if !v.is_negligible() {
                    data[*i].push((j, v.clone()));
                }
            }
        }
        Matrix {
            rows,
            cols: columns.len(),
            data,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, T)] {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> T {
        let row = &self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => row[k].1.clone(),
            Err(_) => T::zero(),
        }
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index out of range");
        let row = &mut self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => {
                if value.is_negligible() {
                    row.remove(k);
                } else {
                    row[k].1 = value;
                }
            }
            Err(k) => {
                if !value.is_negligible() {
                    row.insert(k, (j, value));
                }
            }
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut out = vec![vec![T::zero(); self.cols]; self.rows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut data: Vec<SparseRow<T>> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                data[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Column `j` as a sparse vector.
    pub fn column(&self, j: usize) -> SparseRow<T> {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                row.binary_search_by_key(&j, |(c, _)| *c)
                    .ok()
                    .map(|k| (i, row[k].1.clone()))
            })
            .collect()
    }

    /// All columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseRow<T>> {
        self.transpose().data
    }

    pub fn mul(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut acc: Vec<T> = vec![T::zero(); other.cols];
        let mut touched: Vec<usize> = Vec::new();
        let mut mark = vec![false; other.cols];
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        if !mark[*j] {
                            mark[*j] = true;
                            touched.push(*j);
                        }
                        acc[*j] = acc[*j].clone() + a.clone() * b.clone();
                    }
                }
                touched.sort_unstable();
                let out: SparseRow<T> = touched
                    .iter()
                    .filter_map(|&j| {
                        mark[j] = false;
                        let v = std::mem::replace(&mut acc[j], T::zero());
                        (!v.is_negligible()).then_some((j, v))
                    })
                    .collect();
                touched.clear();
                out
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    /// `self * v` for a sparse column vector `v`.
    pub fn mul_sparse_vec(&self, v: &[(usize, T)]) -> SparseRow<T> {
        if v.is_empty() {
            return Vec::new();
        }
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                let s = sparse_dot(row, v);
                (!s.is_negligible()).then_some((i, s))
            })
            .collect()
    }

    pub fn scale(&self, factor: &T) -> Matrix<T> {
        let data = self
            .data
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(j, v)| (*j, v.clone() * factor.clone()))
                    .filter(|(_, v)| !v.is_negligible())
                    .collect()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn add(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(
            (self.rows, self.cols),
            (other.rows, other.cols),
            "shape mismatch in sum"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| axpy(a, &T::one(), b))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix<T>) -> Matrix<T> {
        self.add(&other.scale(&-T::one()))
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.rows, other.rows, "row mismatch in hstack");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| {
                let mut row = a.clone();
                row.extend(b.iter().map(|(j, v)| (j + self.cols, v.clone())));
                row
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols + other.cols,
            data,
        }
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn block_diag(blocks: &[Matrix<T>]) -> Matrix<T> {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows);
        let mut offset = 0;
        for b in blocks {
            for row in &b.data {
                data.push(row.iter().map(|(j, v)| (j + offset, v.clone())).collect());
            }
            offset += b.cols;
        }
        Matrix { rows, cols, data }
    }

    /// Rows `indices` of `self`, in the given order.
    pub fn select_rows(&self, indices: &[usize]) -> Matrix<T> {
        let data = indices.iter().map(|&i| self.data[i].clone()).collect();
        Matrix {
            rows: indices.len(),
            cols: self.cols,
            data,
        }
    }

    /// Columns `indices` of `self`, in the given order.
    pub fn select_columns(&self, indices: &[usize]) -> Matrix<T> {
        let mut position = vec![usize::MAX; self.cols];
        for (new, &old) in indices.iter().enumerate() {
            position[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut out: SparseRow<T> = row
                    .iter()
                    .filter(|(j, _)| position[*j] != usize::MAX)
                    .map(|(j, v)| (position[*j], v.clone()))
                    .collect();
                out.sort_by_key(|(j, _)| *j);
                out
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: indices.len(),
            data,
        }
    }

    pub fn rank(&self) -> usize {
        T::rank(self)
    }

    /// Reduced row echelon form, computed by inserting rows one at a time into an echelon basis
    /// and back-substituting at the end. For exact types the result is the unique RREF.
    pub fn echelon(&self) -> Echelon<T> {
        echelon_of_rows(self.data.iter().cloned(), self.cols)
    }

    /// Basis of the right null space, returned as the columns of a `cols × k` matrix.
    ///
    /// Basis vectors are indexed by free columns of the RREF in increasing order; the vector for
    /// free column `f` has a one at `f` and zeros at every other free column.
    pub fn nullspace(&self) -> Matrix<T> {
        self.nullspace_with_free_columns().0
    }

    /// [`Matrix::nullspace`] together with the free columns indexing its basis vectors.
    pub fn nullspace_with_free_columns(&self) -> (Matrix<T>, Vec<usize>) {
        let ech = self.echelon();
        let free = ech.free_columns();
        let mut columns: Vec<SparseRow<T>> = Vec::with_capacity(free.len());
        let mut free_pos = vec![usize::MAX; self.cols];
        for (k, &f) in free.iter().enumerate() {
            free_pos[f] = k;
        }
        for _ in &free {
            columns.push(Vec::new());
        }
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            for (j, v) in row {
                if free_pos[*j] != usize::MAX {
                    columns[free_pos[*j]].push((p, -v.clone()));
                }
            }
        }
        for (k, &f) in free.iter().enumerate() {
            columns[k].push((f, T::one()));
            columns[k].sort_by_key(|(i, _)| *i);
        }
        (Matrix::from_sparse_columns(self.cols, &columns), free)
    }

    /// Some solution `X` of `self * X = rhs`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, rhs: &Matrix<T>) -> Option<Matrix<T>> {
        assert_eq!(self.rows, rhs.rows, "row mismatch in solve");
        let augmented = self.hstack(rhs);
        let ech = augmented.echelon();
        if ech.pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut data: Vec<SparseRow<T>> = vec![Vec::new(); self.cols];
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            data[p] = row
                .iter()
                .filter(|(j, _)| *j >= self.cols)
                .map(|(j, v)| (j - self.cols, v.clone()))
                .collect();
        }
        Some(Matrix {
            rows: self.cols,
            cols: rhs.cols,
            data,
        })
    }
}

impl<T: Scalar> Echelon<T> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols).filter(|&j| !is_pivot[j]).collect()
    }
}

/// Reduced echelon form of the span of `rows` (each of length `cols`).
pub fn echelon_of_rows<T: Scalar>(
    rows: impl IntoIterator<Item = SparseRow<T>>,
    cols: usize,
) -> Echelon<T> {
    // pivot column -> normalized row
    let mut basis: Vec<Option<SparseRow<T>>> = vec![None; cols];
    let mut count = 0;
    for mut row in rows {
        loop {
            let Some((c, lead)) = row.first().cloned() else {
                break;
            };
            match &basis[c] {
                Some(pivot) => {
                    row = axpy(&row, &-lead, pivot);
                }
                None => {
                    if !T::EXACT {
                        // drop tiny leading entries produced by cancellation
                        if lead.magnitude() < 1e-7 {
                            row.remove(0);
                            continue;
                        }
                    }
                    let inv = T::one() / lead;
                    let normalized: SparseRow<T> = row
                        .iter()
                        .map(|(j, v)| (*j, v.clone() * inv.clone()))
                        .collect();
                    basis[c] = Some(normalized);
                    count += 1;
                    break;
                }
            }
        }
    }
    let mut pivots: Vec<usize> = Vec::with_capacity(count);
    let mut out: Vec<SparseRow<T>> = Vec::with_capacity(count);
    for (c, slot) in basis.iter().enumerate() {
        if slot.is_some() {
            pivots.push(c);
        }
    }
    // back substitution, last pivot first
    let mut reduced: Vec<Option<SparseRow<T>>> = basis;
    for &p in pivots.iter().rev() {
        let pivot_row = reduced[p].clone().expect("pivot present");
        for &q in pivots.iter().filter(|&&q| q < p) {
            let row = reduced[q].as_ref().expect("pivot present");
            if let Ok(k) = row.binary_search_by_key(&p, |(c, _)| *c) {
                let factor = -row[k].1.clone();
                let updated = axpy(row, &factor, &pivot_row);
                reduced[q] = Some(updated);
            }
        }
    }
    for &p in &pivots {
        out.push(reduced[p].take().expect("pivot present"));
    }
    Echelon {
        rows: out,
        pivots,
        cols,
    }
}

/// `a + factor * b` for sparse rows.
pub fn axpy<T: Scalar>(a: &[(usize, T)], factor: &T, b: &[(usize, T)]) -> SparseRow<T> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            let v = factor.clone() * b[j].1.clone();
            if !v.is_negligible() {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = a[i].1.clone() + factor.clone() * b[j].1.clone();
            if !v.is_negligible() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn sparse_dot<T: Scalar>(a: &[(usize, T)], b: &[(usize, T)]) -> T {
    let (mut i, mut j) = (0, 0);
    let mut s = T::zero();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                s = s + a[i].1.clone() * b[j].1.clone();
                i += 1;
                j += 1;
            }
        }
    }
    s
}

fn normalize_row<T: Scalar>(mut row: SparseRow<T>) -> SparseRow<T> {
    row.sort_by_key(|(j, _)| *j);
    let mut out: SparseRow<T> = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((k, w)) if *k == j => *w = w.clone() + v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_negligible());
    out
}

impl<T: Scalar + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} {:?}", self.rows, self.cols, self.data)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(rows: &[Vec<i64>]) -> Matrix<Rational> {
        Matrix::from_i64_rows(rows)
    }

    #[test]
    fn rank_and_nullspace_agree() {
        let m = q(&[vec![1, 2, 1], vec![2, 4, 0], vec![3, 6, 0]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.echelon().rank(), 2);
        let n = m.nullspace();
        assert_eq!(n.ncols(), 1);
        assert!(m.mul(&n).is_zero());
    }

    #[test]
    fn rref_is_reduced() {
        let m = q(&[vec![0, 2, 4], vec![1, 1, 1], vec![1, 3, 5]]);
        let e = m.echelon();
        assert_eq!(e.pivots, vec![0, 1]);
        let dense: Vec<Vec<Rational>> = e
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![Rational::from_i64(0); 3];
                for (j, x) in r {
                    v[*j] = x.clone();
                }
                v
            })
            .collect();
        assert_eq!(dense, q(&[vec![1, 0, -1], vec![0, 1, 2]]).to_dense());
    }

    #[test]
    fn solve_finds_solution_or_reports_inconsistency() {
        let a = q(&[vec![1, 1], vec![1, -1]]);
        let b = q(&[vec![3], vec![1]]);
        let x = a.solve(&b).unwrap();
        assert_eq!(x.to_dense(), q(&[vec![2], vec![1]]).to_dense());
        let singular = q(&[vec![1, 1], vec![2, 2]]);
        assert!(singular.solve(&q(&[vec![1], vec![3]])).is_none());
    }

    #[test]
    fn product_transpose_and_stacking() {
        let a = q(&[vec![1, 2], vec![0, 1]]);
        let b = q(&[vec![1, 0], vec![3, 1]]);
        assert_eq!(
            a.mul(&b).to_dense(),
            q(&[vec![7, 2], vec![3, 1]]).to_dense()
        );
        assert_eq!(
            a.transpose().to_dense(),
            q(&[vec![1, 0], vec![2, 1]]).to_dense()
        );
        assert_eq!(a.hstack(&b).ncols(), 4);
        assert_eq!(a.vstack(&b).nrows(), 4);
        let d = Matrix::block_diag(&[a.clone(), b.clone()]);
        assert_eq!(d.get(2, 2), Rational::from_i64(1));
        assert_eq!(d.get(3, 2), Rational::from_i64(3));
        assert_eq!(d.get(0, 3), Rational::from_i64(0));
    }

    #[test]
    fn empty_shapes() {
        let m: Matrix<Rational> = Matrix::zeros(0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.nullspace().ncols(), 3);
        let m: Matrix<Rational> = Matrix::zeros(3, 0);
        assert_eq!(m.nullspace().ncols(), 0);
    }

    #[test]
    fn float_rank_matches_exact_rank() {
        let rows = vec![vec![1, 2, 3], vec![2, 4, 6], vec![1, 0, 1]];
        let exact = Matrix::<Rational>::from_i64_rows(&rows).rank();
        let float = Matrix::<f64>::from_i64_rows(&rows).rank();
        assert_eq!(exact, 2);
        assert_eq!(float, 2);
    }
}

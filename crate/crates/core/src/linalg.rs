//! Dense matrices over a [`Field`] and exact Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field};

#[derive(Clone, PartialEq, Eq)]
pub struct FMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl FMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> FMatrix {
        FMatrix { field: field.clone(), rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: &Field, n: usize) -> FMatrix {
        let mut m = FMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows of element indices. `cols` fixes the width
    /// when there are no rows.
    pub fn from_rows(field: &Field, rows: &[Vec<Elem>], cols: usize) -> Result<FMatrix> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {r} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for &x in row {
                field.check(x as u64)?;
            }
            data.extend_from_slice(row);
        }
        Ok(FMatrix { field: field.clone(), rows: rows.len(), cols, data })
    }

    pub fn from_fn(field: &Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Elem) -> FMatrix {
        let data = (0..rows * cols).map(|i| f(i / cols, i % cols)).collect();
        FMatrix { field: field.clone(), rows, cols, data }
    }

    /// The i x n matrix with entry (r, c) = points[c]^r.
    pub fn vandermonde(field: &Field, points: &[Elem], nrows: usize) -> FMatrix {
        FMatrix::from_fn(field, nrows, points.len(), |r, c| field.pow(points[c], r as u64))
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Elem {
        self.data[r * self.cols + c]
    }
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Elem) {
        self.data[r * self.cols + c] = v;
    }
    pub fn row(&self, r: usize) -> &[Elem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
    pub fn column(&self, c: usize) -> Vec<Elem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn transpose(&self) -> FMatrix {
        FMatrix::from_fn(&self.field, self.cols, self.rows, |r, c| self.get(c, r))
    }

    fn same_field(&self, other: &FMatrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn mat_mul(&self, other: &FMatrix) -> Result<FMatrix> {
        self.same_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = &self.field;
        let mut out = FMatrix::zeros(f, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a == 0 {
                    continue;
                }
                for c in 0..other.cols {
                    let v = f.add(out.get(r, c), f.mul(a, other.get(k, c)));
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.rows {
            return Err(Error::DimensionMismatch(format!("vector of length {} times {}x{}", v.len(), self.rows, self.cols)));
        }
        let f = &self.field;
        let mut out = vec![0; self.cols];
        for (r, &a) in v.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                *o = f.add(*o, f.mul(a, self.get(r, c)));
            }
        }
        Ok(out)
    }

    /// Matrix times column vector: the syndrome of `v` when `self` is a parity check.
    pub fn apply(&self, v: &[Elem]) -> Result<Vec<Elem>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!("{}x{} times vector of length {}", self.rows, self.cols, v.len())));
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b))))
            .collect())
    }

    /// Reduced row-echelon form and pivot columns. Pivots are chosen as the
    /// first nonzero entry at or below the current row.
    pub fn rref(&self) -> (FMatrix, Vec<usize>) {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else { continue };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c)).unwrap();
            m.scale_row(r, inv);
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i != r && factor != 0 {
                    m.add_row_multiple(i, r, f.neg(factor));
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel {x : self * x^T = 0}, as the rows of a matrix
    /// in reduced row-echelon form.
    pub fn kernel(&self) -> FMatrix {
        let f = &self.field;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = FMatrix::zeros(f, free.len(), self.cols);
        for (b, &fc) in free.iter().enumerate() {
            basis.set(b, fc, 1);
            for (pr, &pc) in pivots.iter().enumerate() {
                basis.set(b, pc, f.neg(r.get(pr, fc)));
            }
        }
        basis.rref().0
    }

    pub fn inverse(&self) -> Result<FMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch(format!("cannot invert a {}x{} matrix", self.rows, self.cols)));
        }
        let n = self.rows;
        let aug = self.hstack(&FMatrix::identity(&self.field, n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::SingularMatrix);
        }
        r.submatrix(&(0..n).collect::<Vec<_>>(), &(n..2 * n).collect::<Vec<_>>())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<FMatrix> {
        if let Some(&r) = rows.iter().find(|&&r| r >= self.rows) {
            return Err(Error::IndexOutOfRange(format!("row {r} of {}", self.rows)));
        }
        if let Some(&c) = cols.iter().find(|&&c| c >= self.cols) {
            return Err(Error::IndexOutOfRange(format!("column {c} of {}", self.cols)));
        }
        Ok(FMatrix::from_fn(&self.field, rows.len(), cols.len(), |r, c| self.get(rows[r], cols[c])))
    }

    pub fn select_columns(&self, cols: &[usize]) -> Result<FMatrix> {
        self.submatrix(&(0..self.rows).collect::<Vec<_>>(), cols)
    }

    pub fn hstack(&self, other: &FMatrix) -> Result<FMatrix> {
        self.same_field(other)?;
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        Ok(FMatrix::from_fn(&self.field, self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.get(r, c)
            } else {
                other.get(r, c - self.cols)
            }
        }))
    }

    pub fn vstack(&self, other: &FMatrix) -> Result<FMatrix> {
        self.same_field(other)?;
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(FMatrix { field: self.field.clone(), rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn scale(&self, s: Elem) -> FMatrix {
        let f = &self.field;
        FMatrix { data: self.data.iter().map(|&x| f.mul(s, x)).collect(), ..self.clone() }
    }

    /// Whether the two matrices have the same row space.
    pub fn same_row_space(&self, other: &FMatrix) -> bool {
        if self.field != other.field || self.cols != other.cols {
            return false;
        }
        let (a, pa) = self.rref();
        let (b, pb) = other.rref();
        pa == pb && (0..pa.len()).all(|r| a.row(r) == b.row(r))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }
    fn scale_row(&mut self, r: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.mul(s, self.get(r, c));
            self.set(r, c, v);
        }
    }
    /// row[dst] += s * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, s: Elem) {
        for c in 0..self.cols {
            let v = self.field.add(self.get(dst, c), self.field.mul(s, self.get(src, c)));
            self.set(dst, c, v);
        }
    }
}

impl fmt::Debug for FMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Basis (reduced row-echelon rows) of the kernel of the `nrows x cols.len()`
/// matrix whose columns are given. Works in a caller-provided scratch buffer so
/// the hot loops of the distance search avoid repeated allocation; returns
/// only the rank when `want_basis` is false.
pub(crate) fn column_kernel(
    field: &Field,
    nrows: usize,
    cols: &[&[Elem]],
    scratch: &mut Vec<Elem>,
    want_basis: bool,
) -> (usize, Vec<Vec<Elem>>) {
    let w = cols.len();
    scratch.clear();
    scratch.resize(nrows * w, 0);
    for (c, col) in cols.iter().enumerate() {
        for r in 0..nrows {
            scratch[r * w + c] = col[r];
        }
    }
    let mut pivots: Vec<usize> = Vec::with_capacity(w);
    let mut row = 0;
    for c in 0..w {
        if row == nrows {
            break;
        }
        let Some(pr) = (row..nrows).find(|&i| scratch[i * w + c] != 0) else { continue };
        if pr != row {
            for k in 0..w {
                scratch.swap(pr * w + k, row * w + k);
            }
        }
        let inv = field.inv(scratch[row * w + c]).unwrap();
        for k in c..w {
            scratch[row * w + k] = field.mul(inv, scratch[row * w + k]);
        }
        for i in 0..nrows {
            let factor = scratch[i * w + c];
            if i != row && factor != 0 {
                let nf = field.neg(factor);
                for k in c..w {
                    let v = field.add(scratch[i * w + k], field.mul(nf, scratch[row * w + k]));
                    scratch[i * w + k] = v;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let rank = pivots.len();
    if !want_basis || rank == w {
        return (rank, Vec::new());
    }
    // One vector per free column, then reduced to canonical echelon form.
    let free: Vec<usize> = (0..w).filter(|c| !pivots.contains(c)).collect();
    let mut basis: Vec<Vec<Elem>> = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0; w];
            v[fc] = 1;
            for (pr, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(scratch[pr * w + fc]);
            }
            v
        })
        .collect();
    rref_rows(field, &mut basis);
    (rank, basis)
}

/// In-place reduced row-echelon form of a full-rank list of rows.
fn rref_rows(field: &Field, rows: &mut [Vec<Elem>]) {
    let w = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..w {
        if r == rows.len() {
            break;
        }
        let Some(pr) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, pr);
        let inv = field.inv(rows[r][c]).unwrap();
        for x in rows[r].iter_mut() {
            *x = field.mul(inv, *x);
        }
        let pivot = std::mem::take(&mut rows[r]);
        for (i, row) in rows.iter_mut().enumerate() {
            let factor = if i == r { 0 } else { row[c] };
            if factor != 0 {
                let nf = field.neg(factor);
                for (x, &y) in row.iter_mut().zip(&pivot[..w]) {
                    *x = field.add(*x, field.mul(nf, y));
                }
            }
        }
        rows[r] = pivot;
        r += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::prime(7).unwrap()
    }

    #[test]
    fn vandermonde_two_rows() {
        let v = FMatrix::vandermonde(&f7(), &[0, 1, 2, 3], 2);
        assert_eq!(v.to_rows(), vec![vec![1, 1, 1, 1], vec![0, 1, 2, 3]]);
    }

    #[test]
    fn inverse_round_trip() {
        let f = f7();
        let a = FMatrix::from_rows(&f, &[vec![1, 1, 1], vec![1, 2, 4], vec![1, 4, 2]], 3).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(a.mat_mul(&inv).unwrap(), FMatrix::identity(&f, 3));
        let singular = FMatrix::from_rows(&f, &[vec![1, 2], vec![2, 4]], 2).unwrap();
        assert!(matches!(singular.inverse(), Err(Error::SingularMatrix)));
    }

    #[test]
    fn kernel_is_annihilated_and_reduced() {
        let f = f7();
        let h = FMatrix::vandermonde(&f, &[0, 1, 2, 3, 4], 2);
        let k = h.kernel();
        assert_eq!(k.rows(), 3);
        assert!(h.mat_mul(&k.transpose()).unwrap().is_zero());
        assert_eq!(k.rref().0, k);
    }

    #[test]
    fn column_kernel_matches_kernel() {
        let f = f7();
        let h = FMatrix::vandermonde(&f, &[0, 1, 2, 3, 4, 5], 3);
        let cols: Vec<Vec<Elem>> = (0..6).map(|c| h.column(c)).collect();
        let refs: Vec<&[Elem]> = cols.iter().map(|c| c.as_slice()).collect();
        let mut scratch = Vec::new();
        let (rank, basis) = column_kernel(&f, 3, &refs, &mut scratch, true);
        assert_eq!(rank, 3);
        assert_eq!(basis, h.kernel().to_rows());
    }
}

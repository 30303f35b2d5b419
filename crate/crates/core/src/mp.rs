//! Matrix-product codes [C_1, ..., C_M] · A.
//!
//! A codeword is (Σ_i a_{i1} c_i, ..., Σ_i a_{iN} c_i) with c_i ∈ C_i, so the
//! generator has row-block i equal to (a_{i1} G_i, ..., a_{iN} G_i).

use itertools::Itertools;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::linalg::FMatrix;
use crate::search::SearchOptions;

/// Constituent codes of a common length and the mixing matrix A (M x N).
#[derive(Clone, Debug)]
pub struct MpSpec {
    constituents: Vec<LinearCode>,
    matrix: FMatrix,
}

impl MpSpec {
    pub fn new(constituents: Vec<LinearCode>, matrix: FMatrix) -> Result<MpSpec> {
        let m = constituents.len();
        if m == 0 {
            return Err(Error::ShapeError("no constituent codes".into()));
        }
        let field = constituents[0].field();
        let n = constituents[0].n();
        if constituents.iter().any(|c| c.field() != field) || matrix.field() != field {
            return Err(Error::FieldMismatch);
        }
        if constituents.iter().any(|c| c.n() != n) {
            return Err(Error::DimensionMismatch("constituent lengths differ".into()));
        }
        if matrix.rows() != m {
            return Err(Error::ShapeError(format!("{m} constituents but A has {} rows", matrix.rows())));
        }
        if matrix.rows() > matrix.cols() {
            return Err(Error::ShapeError(format!("A is {}x{} with more rows than columns", matrix.rows(), matrix.cols())));
        }
        if matrix.rank() != m {
            return Err(Error::RankDeficientA);
        }
        Ok(MpSpec { constituents, matrix })
    }

    pub fn constituents(&self) -> &[LinearCode] {
        &self.constituents
    }
    pub fn matrix(&self) -> &FMatrix {
        &self.matrix
    }
    /// Number of constituents M.
    pub fn blocks(&self) -> usize {
        self.matrix.rows()
    }
    /// Number of column blocks N.
    pub fn columns(&self) -> usize {
        self.matrix.cols()
    }
    /// Constituent length n.
    pub fn block_len(&self) -> usize {
        self.constituents[0].n()
    }
}

/// The matrix-product code. A parity-check matrix is attached whenever A is
/// square and invertible.
pub fn mp_generator(spec: &MpSpec) -> Result<LinearCode> {
    let f = spec.matrix.field();
    let a = &spec.matrix;
    let n = spec.block_len();
    let mut g = FMatrix::zeros(f, 0, n * spec.columns());
    for (i, c) in spec.constituents.iter().enumerate() {
        let gi = c.generator();
        let block = FMatrix::from_fn(f, gi.rows(), n * spec.columns(), |r, col| {
            f.mul(a.get(i, col / n), gi.get(r, col % n))
        });
        g = g.vstack(&block)?;
    }
    if a.rows() == a.cols() {
        let h = mp_parity(spec)?;
        return LinearCode::from_matrices(g, h);
    }
    LinearCode::from_generator(g)
}

/// Parity-check matrix of the matrix-product code for square, invertible A:
/// with A^{-1} = (b_{ij}), row-block i is (b_{1i} H_i, ..., b_{Mi} H_i).
/// The whole matrix is scaled by M (when M is nonzero in the field), which
/// clears the common 1/M factor of Fourier-type mixing matrices.
pub fn mp_parity(spec: &MpSpec) -> Result<FMatrix> {
    let a = &spec.matrix;
    if a.rows() != a.cols() {
        return Err(Error::NonSquareA);
    }
    let f = a.field();
    let b = a.inverse().map_err(|_| Error::SingularA)?;
    let m = spec.blocks();
    let scale = match f.from_int(m as i64) {
        0 => 1,
        s => s,
    };
    let n = spec.block_len();
    let mut h = FMatrix::zeros(f, 0, n * m);
    for (i, c) in spec.constituents.iter().enumerate() {
        let hi = match c.stored_parity() {
            Some(h) => h.clone(),
            None => return Err(Error::MissingParity(i)),
        };
        let block = FMatrix::from_fn(f, hi.rows(), n * m, |r, col| {
            f.mul(scale, f.mul(b.get(col / n, i), hi.get(r, col % n)))
        });
        h = h.vstack(&block)?;
    }
    Ok(h)
}

/// The dual of a matrix-product code with square A, itself a matrix-product
/// code: duals of the constituents under (A^{-1})^T.
pub fn mp_dual(spec: &MpSpec) -> Result<LinearCode> {
    if spec.matrix.rows() != spec.matrix.cols() {
        return Err(Error::NonSquareA);
    }
    let inv_t = spec.matrix.inverse().map_err(|_| Error::SingularA)?.transpose();
    let duals = spec.constituents.iter().map(LinearCode::dual).collect();
    mp_generator(&MpSpec::new(duals, inv_t)?)
}

/// Whether every t x t minor taken from the first t rows of A is nonzero,
/// for t = 1..M.
pub fn is_nsc(a: &FMatrix) -> Result<bool> {
    let (m, n) = (a.rows(), a.cols());
    if m > n {
        return Err(Error::ShapeError(format!("A is {m}x{n} with more rows than columns")));
    }
    for t in 1..=m {
        let rows: Vec<usize> = (0..t).collect();
        for cols in (0..n).combinations(t) {
            if a.submatrix(&rows, &cols)?.rank() < t {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The Hamming-distance lower bound min_i d_i (N - i + 1) valid for
/// non-singular-by-columns A.
pub fn distance_lower_bound(spec: &MpSpec, opts: &SearchOptions) -> Result<usize> {
    if !is_nsc(&spec.matrix)? {
        return Err(Error::NotNsc);
    }
    let n_cols = spec.columns();
    let mut bound = usize::MAX;
    for (i, c) in spec.constituents.iter().enumerate() {
        let d = c.min_hamming_distance(opts)?.distance;
        bound = bound.min(d * (n_cols - i));
    }
    Ok(bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    #[test]
    fn nsc_detection() {
        let f = Field::prime(7).unwrap();
        let fourier = FMatrix::from_rows(&f, &[vec![1, 1, 1], vec![1, 2, 4], vec![1, 4, 2]], 3).unwrap();
        assert!(is_nsc(&fourier).unwrap());
        let zero_entry = FMatrix::from_rows(&f, &[vec![1, 0], vec![0, 1]], 2).unwrap();
        assert!(!is_nsc(&zero_entry).unwrap());
        let tall = FMatrix::from_rows(&f, &[vec![1], vec![1]], 1).unwrap();
        assert!(matches!(is_nsc(&tall), Err(Error::ShapeError(_))));
    }

    #[test]
    fn parity_annihilates_generator() {
        let f = Field::prime(7).unwrap();
        let pts = [0, 1, 2, 3];
        let cs = vec![
            LinearCode::grs(&f, &pts, 1).unwrap(),
            LinearCode::grs(&f, &pts, 2).unwrap(),
            LinearCode::grs(&f, &pts, 3).unwrap(),
        ];
        let a = FMatrix::from_rows(&f, &[vec![1, 1, 1], vec![1, 2, 4], vec![1, 4, 2]], 3).unwrap();
        let spec = MpSpec::new(cs, a).unwrap();
        let c = mp_generator(&spec).unwrap();
        assert_eq!((c.n(), c.k()), (12, 6));
        let dual = mp_dual(&spec).unwrap();
        assert!(dual.generator().same_row_space(&c.parity()));
    }
}

//! Linear codes, generalized Reed–Solomon codes and the JSON code-file format.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::gf::{Elem, Field, FieldSpec};
use crate::linalg::FMatrix;
use crate::search::{self, SearchOptions, Strategy};

/// Default cap on the number of codewords any enumeration may visit.
pub const DEFAULT_CAP: u128 = 1 << 22;

/// The enumeration cap, honouring the `PAIRMDS_CAP` environment variable.
pub fn default_cap() -> u128 {
    std::env::var("PAIRMDS_CAP").ok().and_then(|s| s.trim().parse().ok()).unwrap_or(DEFAULT_CAP)
}

/// An [n, k] linear code over a finite field.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    n: usize,
    k: usize,
    generator: FMatrix,
    parity: Option<FMatrix>,
    provenance: Value,
}

impl LinearCode {
    /// A code from a full-row-rank generator matrix.
    pub fn from_generator(generator: FMatrix) -> Result<LinearCode> {
        if generator.rank() != generator.rows() {
            return Err(Error::RankDeficientGenerator);
        }
        Ok(LinearCode {
            field: generator.field().clone(),
            n: generator.cols(),
            k: generator.rows(),
            generator,
            parity: None,
            provenance: Value::Null,
        })
    }

    /// The code {x : H x^T = 0}. Its generator is the reduced row-echelon
    /// kernel basis of H.
    pub fn from_parity(parity: FMatrix) -> Result<LinearCode> {
        if parity.rows() > parity.cols() || parity.rank() != parity.rows() {
            return Err(Error::RankDeficientParity);
        }
        let generator = parity.kernel();
        Ok(LinearCode {
            field: parity.field().clone(),
            n: parity.cols(),
            k: generator.rows(),
            generator,
            parity: Some(parity),
            provenance: Value::Null,
        })
    }

    /// A code from both matrices, checking they agree: G has rank k,
    /// G H^T = 0 and H has rank n - k.
    pub fn from_matrices(generator: FMatrix, parity: FMatrix) -> Result<LinearCode> {
        if generator.field() != parity.field() {
            return Err(Error::FieldMismatch);
        }
        if generator.cols() != parity.cols() {
            return Err(Error::DimensionMismatch("generator and parity lengths differ".into()));
        }
        let mut code = LinearCode::from_generator(generator)?;
        if parity.rows() != code.n - code.k || parity.rank() != parity.rows() {
            return Err(Error::RankDeficientParity);
        }
        if !code.generator.mat_mul(&parity.transpose())?.is_zero() {
            return Err(Error::DimensionMismatch("generator is not orthogonal to parity".into()));
        }
        code.parity = Some(parity);
        Ok(code)
    }

    /// The whole space F_q^n.
    pub fn full_space(field: &Field, n: usize) -> LinearCode {
        LinearCode {
            field: field.clone(),
            n,
            k: n,
            generator: FMatrix::identity(field, n),
            parity: Some(FMatrix::zeros(field, 0, n)),
            provenance: Value::Null,
        }
    }

    /// The [n, n-i, i+1] GRS code whose parity check is the i-row Vandermonde
    /// matrix on the given points (all column multipliers equal to one).
    pub fn grs(field: &Field, points: &[Elem], i: usize) -> Result<LinearCode> {
        let n = points.len();
        if i == 0 || i >= n {
            return Err(Error::BadRedundancy { i, n });
        }
        for &a in points {
            field.check(a as u64)?;
        }
        let mut seen = vec![false; field.q() as usize];
        for &a in points {
            if std::mem::replace(&mut seen[a as usize], true) {
                return Err(Error::DuplicatePoints);
            }
        }
        LinearCode::from_parity(FMatrix::vandermonde(field, points, i))
    }

    pub fn with_provenance(mut self, provenance: Value) -> LinearCode {
        self.provenance = provenance;
        self
    }

    pub fn field(&self) -> &Field {
        &self.field
    }
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn k(&self) -> usize {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.field.q()
    }
    pub fn generator(&self) -> &FMatrix {
        &self.generator
    }
    pub fn provenance(&self) -> &Value {
        &self.provenance
    }
    /// The stored parity-check matrix, if any.
    pub fn stored_parity(&self) -> Option<&FMatrix> {
        self.parity.as_ref()
    }
    /// A parity-check matrix: the stored one or the kernel of G.
    pub fn parity(&self) -> FMatrix {
        self.parity.clone().unwrap_or_else(|| self.generator.kernel())
    }

    /// The dual code: generator and parity check swap roles.
    pub fn dual(&self) -> LinearCode {
        let g = self.parity();
        LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: g.rows(),
            generator: g,
            parity: Some(self.generator.clone()),
            provenance: Value::Null,
        }
    }

    pub fn encode(&self, message: &[Elem]) -> Result<Vec<Elem>> {
        if message.len() != self.k {
            return Err(Error::DimensionMismatch(format!("message of length {} for dimension {}", message.len(), self.k)));
        }
        for &x in message {
            self.field.check(x as u64)?;
        }
        self.generator.vec_mul(message)
    }

    pub fn contains(&self, word: &[Elem]) -> Result<bool> {
        Ok(self.parity().apply(word)?.iter().all(|&s| s == 0))
    }

    /// q^k, saturating.
    pub fn size(&self) -> u128 {
        (self.q() as u128).checked_pow(self.k as u32).unwrap_or(u128::MAX)
    }

    /// Every codeword, messages in odometer order (first coordinate fastest).
    pub fn enumerate_codewords(&self, cap: u128) -> Result<Codewords<'_>> {
        if self.size() > cap {
            return Err(Error::EnumerationTooLarge { size: self.size(), cap });
        }
        Ok(Codewords { code: self, message: vec![0; self.k], word: vec![0; self.n], done: false })
    }

    pub fn min_hamming_distance(&self, opts: &SearchOptions) -> Result<search::MinWeight> {
        if self.k == 0 {
            return Err(Error::ZeroCode);
        }
        match opts.resolve(self) {
            Strategy::Message => Ok(search::by_messages(self, opts.cap)?.hamming),
            _ => search::min_weight_by_support(self, opts),
        }
    }

    /// Reorders coordinates so that coordinate l of this code moves to
    /// position `dest[l]`.
    pub fn permute_columns(&self, dest: &[usize]) -> Result<LinearCode> {
        if dest.len() != self.n {
            return Err(Error::SizeMismatch { perm: dest.len(), code: self.n });
        }
        let mut src = vec![usize::MAX; self.n];
        for (l, &d) in dest.iter().enumerate() {
            if d >= self.n || src[d] != usize::MAX {
                return Err(Error::DimensionMismatch("not a permutation".into()));
            }
            src[d] = l;
        }
        Ok(LinearCode {
            field: self.field.clone(),
            n: self.n,
            k: self.k,
            generator: self.generator.select_columns(&src)?,
            parity: self.parity.as_ref().map(|h| h.select_columns(&src)).transpose()?,
            provenance: self.provenance.clone(),
        })
    }

    pub fn to_file(&self) -> CodeFile {
        CodeFile {
            field: self.field.spec(),
            n: self.n,
            k: self.k,
            generator: widen(&self.generator),
            parity: self.parity.as_ref().map(widen),
            provenance: self.provenance.clone(),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let text = serde_json::to_string_pretty(&self.to_file())?;
        std::fs::write(path, text + "\n")?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<LinearCode> {
        let text = std::fs::read_to_string(path)?;
        LinearCode::from_json(&text)
    }

    pub fn from_json(text: &str) -> Result<LinearCode> {
        let file: CodeFile = serde_json::from_str(text).map_err(|e| Error::MalformedFile(e.to_string()))?;
        file.into_code()
    }
}

/// On-disk representation of a code.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub provenance: Value,
}

fn widen(m: &FMatrix) -> Vec<Vec<u64>> {
    m.to_rows().into_iter().map(|r| r.into_iter().map(u64::from).collect()).collect()
}

fn rows_to_matrix(field: &Field, rows: &[Vec<u64>], n: usize, what: &str) -> Result<FMatrix> {
    let rows: Vec<Vec<Elem>> = rows
        .iter()
        .map(|row| row.iter().map(|&x| field.check(x)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()
        .map_err(|e| Error::MalformedFile(format!("{what}: {e}")))?;
    FMatrix::from_rows(field, &rows, n).map_err(|e| Error::MalformedFile(format!("{what}: {e}")))
}

impl CodeFile {
    pub fn into_code(self) -> Result<LinearCode> {
        let field = Field::from_spec(&self.field).map_err(|e| Error::MalformedFile(format!("field: {e}")))?;
        if self.generator.len() != self.k {
            return Err(Error::MalformedFile(format!("generator has {} rows but k = {}", self.generator.len(), self.k)));
        }
        if self.k > self.n {
            return Err(Error::MalformedFile(format!("k = {} exceeds n = {}", self.k, self.n)));
        }
        let g = rows_to_matrix(&field, &self.generator, self.n, "generator")?;
        let code = match self.parity {
            Some(h) => LinearCode::from_matrices(g, rows_to_matrix(&field, &h, self.n, "parity")?),
            None => LinearCode::from_generator(g),
        }
        .map_err(|e| Error::MalformedFile(e.to_string()))?;
        Ok(code.with_provenance(self.provenance))
    }
}

/// Iterator over all codewords of a code.
pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Vec<Elem>,
    word: Vec<Elem>,
    done: bool,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Elem>;

    fn next(&mut self) -> Option<Vec<Elem>> {
        if self.done {
            return None;
        }
        let out = self.word.clone();
        let f = &self.code.field;
        let g = &self.code.generator;
        // Advance the message odometer (digits in index order) and patch the
        // codeword by (new - old) * row t for every digit that changed.
        let q = f.q() as usize;
        let mut t = 0;
        loop {
            if t == self.code.k {
                self.done = true;
                break;
            }
            let old = self.message[t];
            let new = ((old as usize + 1) % q) as Elem;
            self.message[t] = new;
            for c in 0..self.code.n {
                let delta = f.sub(f.mul(new, g.get(t, c)), f.mul(old, g.get(t, c)));
                self.word[c] = f.add(self.word[c], delta);
            }
            if new != 0 {
                break;
            }
            t += 1;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grs_parameters() {
        let f = Field::prime(7).unwrap();
        let c = LinearCode::grs(&f, &[0, 1, 2, 3, 4], 2).unwrap();
        assert_eq!((c.n(), c.k()), (5, 3));
        assert!(c.generator().mat_mul(&c.parity().transpose()).unwrap().is_zero());
        assert!(matches!(LinearCode::grs(&f, &[0, 1, 1], 1), Err(Error::DuplicatePoints)));
        assert!(matches!(LinearCode::grs(&f, &[0, 1, 2], 3), Err(Error::BadRedundancy { .. })));
    }

    #[test]
    fn enumeration_visits_every_codeword_once() {
        let f = Field::prime(5).unwrap();
        let c = LinearCode::grs(&f, &[0, 1, 2, 3], 2).unwrap();
        let words: Vec<_> = c.enumerate_codewords(1000).unwrap().collect();
        assert_eq!(words.len(), 25);
        let mut sorted = words.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 25);
        assert!(words.iter().all(|w| c.contains(w).unwrap()));
        assert!(matches!(c.enumerate_codewords(24), Err(Error::EnumerationTooLarge { .. })));
    }

    #[test]
    fn dual_of_dual() {
        let f = Field::with_order(9).unwrap();
        let c = LinearCode::grs(&f, &[0, 1, 2, 3, 4, 5], 2).unwrap();
        let dd = c.dual().dual();
        assert!(dd.generator().same_row_space(c.generator()));
        assert_eq!(c.dual().k(), 2);
    }

    #[test]
    fn file_round_trip() {
        let f = Field::with_order(4).unwrap();
        let c = LinearCode::grs(&f, &[0, 1, 2, 3], 1).unwrap().with_provenance(serde_json::json!({"note": "x"}));
        let text = serde_json::to_string(&c.to_file()).unwrap();
        let back = LinearCode::from_json(&text).unwrap();
        assert_eq!(back.generator(), c.generator());
        assert_eq!(back.provenance(), c.provenance());
    }

    #[test]
    fn malformed_files_are_rejected() {
        let bad_entry = r#"{"field":{"p":5,"m":1,"modulus":[0,1]},"n":2,"k":1,"generator":[[1,7]]}"#;
        assert!(matches!(LinearCode::from_json(bad_entry), Err(Error::MalformedFile(_))));
        let bad_rank = r#"{"field":{"p":5,"m":1,"modulus":[0,1]},"n":2,"k":2,"generator":[[1,2],[2,4]]}"#;
        assert!(matches!(LinearCode::from_json(bad_rank), Err(Error::MalformedFile(_))));
        let bad_parity = r#"{"field":{"p":5,"m":1,"modulus":[0,1]},"n":2,"k":1,"generator":[[1,2]],"parity":[[1,1]]}"#;
        assert!(matches!(LinearCode::from_json(bad_parity), Err(Error::MalformedFile(_))));
    }
}

//! The five interleaved matrix-product families with large symbol-pair distance.
//!
//! Each family fixes M constituent codes over a common evaluation vector (the
//! full space or a GRS code of a given redundancy), the Fourier mixing matrix
//! A = (ω^{ij}) for a primitive M-th root of unity ω, and an interleaving
//! permutation applied to the resulting matrix-product code.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::{prime_power, Elem, Field, MAX_ORDER};
use crate::linalg::FMatrix;
use crate::mp::{mp_generator, MpSpec};
use crate::perm::{self, Permutation};
use crate::search::SearchOptions;
use crate::sympair::{analyze, PairAnalysisReport, PairClass};

/// A construction family, named by the redundancies of its constituents
/// (0 = full space, i = GRS code with i parity checks).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// Redundancies (1, 2, 3): MDS, d_sp = 8, length 3n.
    R123,
    /// Redundancies (1, 1, 3): MDS, d_sp = 7, length 3n, odd q.
    R113,
    /// Redundancies (2, 2, 4): MDS, d_sp = 10, length 3n.
    R224,
    /// Redundancies (0, 0, 1, 3): MDS, d_sp = 6, length 4n, characteristic not 3.
    R0013,
    /// Redundancies (0, 1, 1, 4): AMDS, d_sp = 7, length 4n.
    R0114,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::R123, Family::R113, Family::R224, Family::R0013, Family::R0114];

    /// The external identifier used on the command line and in provenance.
    pub fn id(self) -> &'static str {
        match self {
            Family::R123 => "3.1",
            Family::R113 => "3.2",
            Family::R224 => "3.3",
            Family::R0013 => "3.4",
            Family::R0114 => "3.5",
        }
    }

    pub fn from_id(id: &str) -> Result<Family> {
        let id = id.trim().trim_start_matches(['T', 't']);
        Family::ALL
            .into_iter()
            .find(|f| f.id() == id)
            .ok_or_else(|| Error::InadmissibleParameters(format!("unknown construction {id:?} (expected 3.1 to 3.5)")))
    }

    pub fn redundancies(self) -> &'static [usize] {
        match self {
            Family::R123 => &[1, 2, 3],
            Family::R113 => &[1, 1, 3],
            Family::R224 => &[2, 2, 4],
            Family::R0013 => &[0, 0, 1, 3],
            Family::R0114 => &[0, 1, 1, 4],
        }
    }

    /// Number of blocks M.
    pub fn blocks(self) -> usize {
        self.redundancies().len()
    }

    /// Dimension of the code built from blocks of length n.
    pub fn dimension(self, n: usize) -> usize {
        self.redundancies().iter().map(|r| n - r).sum()
    }

    pub fn expected_d_sp(self) -> usize {
        match self {
            Family::R123 => 8,
            Family::R113 => 7,
            Family::R224 => 10,
            Family::R0013 => 6,
            Family::R0114 => 7,
        }
    }

    pub fn expected_d_h(self) -> usize {
        match self {
            Family::R123 | Family::R113 | Family::R0114 => 4,
            Family::R224 => 5,
            Family::R0013 => 3,
        }
    }

    pub fn expected_class(self) -> PairClass {
        match self {
            Family::R0114 => PairClass::Amds,
            _ => PairClass::Mds,
        }
    }

    pub fn min_block_len(self) -> usize {
        match self {
            Family::R224 | Family::R0114 => 5,
            _ => 4,
        }
    }

    /// The interleaving permutation on M blocks of length n.
    pub fn permutation(self, n: usize) -> Permutation {
        match self {
            Family::R123 | Family::R113 | Family::R224 => perm::three_block_shifted(n),
            Family::R0013 => perm::four_block_shifted(n),
            Family::R0114 => perm::four_block_swapped(n),
        }
    }

    /// Checks (q, n) against the family's hypotheses and returns (p, m).
    pub fn admissible(self, q: u32, n: usize) -> Result<(u32, u32)> {
        let bad = |msg: String| Err(Error::InadmissibleParameters(msg));
        let Some((p, m)) = prime_power(q as u64) else {
            return bad(format!("q must be a prime power (got {q})"));
        };
        if q > MAX_ORDER {
            return bad(format!("q must be at most {MAX_ORDER} (got {q})"));
        }
        let blocks = self.blocks() as u32;
        if q % blocks != 1 {
            return bad(format!("q must be congruent to 1 mod {blocks} (got {q})"));
        }
        if self == Family::R113 && q.is_multiple_of(2) {
            return bad(format!("q must be odd (got {q})"));
        }
        if self == Family::R0013 && p == 3 {
            return bad(format!("the characteristic must not be 3 (got q = {q})"));
        }
        let lo = self.min_block_len();
        if n < lo || n > q as usize {
            return bad(format!("n must lie in [{lo}, {q}] (got {n})"));
        }
        Ok((p, m))
    }

    /// All admissible block lengths for a given q.
    pub fn lengths(self, q: u32) -> std::ops::RangeInclusive<usize> {
        self.min_block_len()..=q as usize
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// The field elements ordered coset by coset: the representatives are the
/// elements with zero constant coefficient, in index order, and each is
/// followed by its translates by 1, 2, ..., p-1.
pub fn coset_ordering(field: &Field) -> Vec<Elem> {
    let p = field.p();
    let reps: Vec<Elem> = (0..field.q()).map(|i| i as Elem).filter(|&a| field.coeffs(a)[0] == 0).collect();
    reps.iter()
        .flat_map(|&chi| (0..p).map(move |t| (chi, t)))
        .map(|(chi, t)| field.add(chi, field.from_int(t as i64)))
        .collect()
}

/// The first n elements of the coset ordering.
pub fn evaluation_vector(field: &Field, n: usize) -> Result<Vec<Elem>> {
    if n > field.q() as usize {
        return Err(Error::TooLong { n, q: field.q() });
    }
    Ok(coset_ordering(field)[..n].to_vec())
}

/// The M x M matrix (ω^{ij}).
pub fn fourier_matrix(field: &Field, omega: Elem, m: usize) -> FMatrix {
    FMatrix::from_fn(field, m, m, |i, j| field.pow(omega, (i * j) as u64))
}

/// All intermediate objects of one construction.
#[derive(Clone, Debug)]
pub struct Construction {
    pub family: Family,
    pub field: Field,
    pub n: usize,
    pub omega: Elem,
    pub points: Vec<Elem>,
    pub spec: MpSpec,
    /// The matrix-product code before interleaving.
    pub mp_code: LinearCode,
    pub permutation: Permutation,
    /// The interleaved code.
    pub code: LinearCode,
}

/// Builds the family member with block length n over GF(q), optionally with
/// an explicit modulus (coefficients c_0..c_m).
pub fn construct(family: Family, q: u32, n: usize, modulus: Option<&[u32]>) -> Result<Construction> {
    let (p, m) = family.admissible(q, n)?;
    let field = Field::new(p, m, modulus)?;
    let blocks = family.blocks();
    let omega = field.root_of_unity(blocks as u32)?;
    let points = evaluation_vector(&field, n)?;
    let constituents = family
        .redundancies()
        .iter()
        .map(|&r| if r == 0 { Ok(LinearCode::full_space(&field, n)) } else { LinearCode::grs(&field, &points, r) })
        .collect::<Result<Vec<_>>>()?;
    let spec = MpSpec::new(constituents, fourier_matrix(&field, omega, blocks))?;
    let mp_code = mp_generator(&spec)?;
    let permutation = family.permutation(n);
    let provenance = json!({
        "theorem": family.id(),
        "q": q,
        "n": n,
        "omega": omega,
        "points": points,
        "permutation": permutation.destinations(),
    });
    let code = permutation.apply(&mp_code)?.with_provenance(provenance);
    Ok(Construction { family, field, n, omega, points, spec, mp_code, permutation, code })
}

/// The interleaved code of a family member.
pub fn build(family: Family, q: u32, n: usize, modulus: Option<&[u32]>) -> Result<LinearCode> {
    Ok(construct(family, q, n, modulus)?.code)
}

/// Builds and analyzes a family member, failing unless its dimension, d_sp
/// and class are the ones the family guarantees.
pub fn verify(family: Family, q: u32, n: usize, opts: &SearchOptions) -> Result<PairAnalysisReport> {
    let code = build(family, q, n, None)?;
    let report = analyze(&code, opts)?;
    let mut problems = Vec::new();
    if report.k != family.dimension(n) {
        problems.push(format!("k={} expected {}", report.k, family.dimension(n)));
    }
    if report.d_sp != family.expected_d_sp() {
        problems.push(format!("d_sp={} expected {}", report.d_sp, family.expected_d_sp()));
    }
    if report.class != family.expected_class() {
        problems.push(format!("class={} expected {}", report.class, family.expected_class()));
    }
    if problems.is_empty() {
        Ok(report)
    } else {
        Err(Error::VerificationFailed { reason: problems.join(", "), report: Box::new(report) })
    }
}

/// One row of a sweep.
#[derive(Clone, Debug, Serialize)]
pub struct SweepRow {
    pub n: usize,
    pub length: usize,
    pub report: Option<PairAnalysisReport>,
    pub pass: bool,
    pub message: String,
}

/// Verifies every requested block length independently; rows come back
/// sorted by n whatever the worker count.
pub fn sweep(family: Family, q: u32, lengths: &[usize], opts: &SearchOptions) -> Vec<SweepRow> {
    let row = |&n: &usize| {
        let length = family.blocks() * n;
        match verify(family, q, n, &SearchOptions { workers: 1, ..opts.clone() }) {
            Ok(r) => SweepRow { n, length, report: Some(r), pass: true, message: "ok".into() },
            Err(Error::VerificationFailed { reason, report }) => {
                SweepRow { n, length, report: Some(*report), pass: false, message: reason }
            }
            Err(e) => SweepRow { n, length, report: None, pass: false, message: e.to_string() },
        }
    };
    let mut rows: Vec<SweepRow> = if opts.workers > 1 {
        match rayon::ThreadPoolBuilder::new().num_threads(opts.workers).build() {
            Ok(pool) => pool.install(|| lengths.par_iter().map(row).collect()),
            Err(_) => lengths.iter().map(row).collect(),
        }
    } else {
        lengths.iter().map(row).collect()
    };
    rows.sort_by_key(|r| r.n);
    rows
}

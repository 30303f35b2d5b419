//! Symbol-pair read vectors, weights, distances and MDS classification.

use std::fmt;

use serde::Serialize;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Elem;
use crate::search::{self, MinWeight, SearchOptions, Strategy};

pub use crate::search::{cyclic_runs, pair_weight, pair_weight_of_support};

/// The cyclic pair read ((u_0,u_1), (u_1,u_2), ..., (u_{n-1},u_0)).
pub fn pair_read(word: &[Elem]) -> Result<Vec<(Elem, Elem)>> {
    let n = word.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    Ok((0..n).map(|i| (word[i], word[(i + 1) % n])).collect())
}

/// Pair distance between two words of equal length.
pub fn pair_distance(a: &[Elem], b: &[Elem]) -> Result<usize> {
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch("words of different lengths".into()));
    }
    if a.len() < 2 {
        return Err(Error::TooShort(a.len()));
    }
    let n = a.len();
    Ok((0..n).filter(|&i| a[i] != b[i] || a[(i + 1) % n] != b[(i + 1) % n]).count())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PairClass {
    #[serde(rename = "MDS")]
    Mds,
    #[serde(rename = "AMDS")]
    Amds,
    #[serde(rename = "NONE")]
    None,
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::Mds => "MDS",
            PairClass::Amds => "AMDS",
            PairClass::None => "NONE",
        })
    }
}

/// Position relative to the symbol-pair Singleton bound k <= n - d_sp + 2.
pub fn classify(n: usize, k: usize, d_sp: usize) -> Result<PairClass> {
    if k + d_sp > n + 2 {
        return Err(Error::BoundViolation { n, k, d_sp });
    }
    Ok(if k + d_sp == n + 2 {
        PairClass::Mds
    } else if k + d_sp == n + 1 {
        PairClass::Amds
    } else {
        PairClass::None
    })
}

/// Minimum symbol-pair distance of a code, with canonical witness.
pub fn min_pair_distance(code: &LinearCode, opts: &SearchOptions) -> Result<MinWeight> {
    Ok(analyze(code, opts)?.pair_minimum())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Work {
    pub hamming_examined: u64,
    pub pair_examined: u64,
}

/// Everything computed about a code's pair-distance profile.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairAnalysisReport {
    pub n: usize,
    pub k: usize,
    pub q: u32,
    pub d_h: usize,
    pub d_sp: usize,
    pub class: PairClass,
    pub witness_h: Vec<Elem>,
    pub witness_sp: Vec<Elem>,
    pub strategy: Strategy,
    pub work: Work,
}

impl PairAnalysisReport {
    /// The one-line summary `n=.. k=.. q=.. d_H=.. d_sp=.. class=..`.
    pub fn line(&self) -> String {
        format!(
            "n={} k={} q={} d_H={} d_sp={} class={}",
            self.n, self.k, self.q, self.d_h, self.d_sp, self.class
        )
    }

    fn pair_minimum(&self) -> MinWeight {
        MinWeight { distance: self.d_sp, witness: self.witness_sp.clone(), examined: self.work.pair_examined }
    }
}

impl fmt::Display for PairAnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.line())
    }
}

/// Computes d_H, d_sp and the class, and re-checks both witnesses against the
/// parity-check matrix before reporting them.
pub fn analyze(code: &LinearCode, opts: &SearchOptions) -> Result<PairAnalysisReport> {
    if code.n() < 2 {
        return Err(Error::TooShort(code.n()));
    }
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let strategy = opts.resolve(code);
    let (h, p) = match strategy {
        Strategy::Message => {
            let scan = search::by_messages(code, opts.cap)?;
            (scan.hamming, scan.pair)
        }
        _ => {
            let h = search::min_weight_by_support(code, opts)?;
            let p = search::min_pair_by_support(code, opts, Some(&h))?;
            (h, p)
        }
    };
    let parity = code.parity();
    for (min, weight) in [(&h, search::hamming_weight(&h.witness)), (&p, pair_weight(&p.witness))] {
        let in_code = parity.apply(&min.witness)?.iter().all(|&s| s == 0);
        assert!(
            in_code && weight == min.distance && min.witness.iter().any(|&x| x != 0),
            "distance witness failed re-evaluation"
        );
    }
    Ok(PairAnalysisReport {
        n: code.n(),
        k: code.k(),
        q: code.q(),
        d_h: h.distance,
        d_sp: p.distance,
        class: classify(code.n(), code.k(), p.distance)?,
        witness_h: h.witness,
        witness_sp: p.witness,
        strategy,
        work: Work { hamming_examined: h.examined, pair_examined: p.examined },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_read_and_weight() {
        assert_eq!(pair_read(&[1, 0, 2]).unwrap(), vec![(1, 0), (0, 2), (2, 1)]);
        assert!(matches!(pair_read(&[1]), Err(Error::TooShort(1))));
        assert_eq!(pair_weight(&[0, 1, 0, 0, 1, 0]), 4);
        assert_eq!(pair_distance(&[1, 1, 0], &[1, 0, 0]).unwrap(), 2);
    }

    #[test]
    fn classification() {
        assert_eq!(classify(12, 6, 8).unwrap(), PairClass::Mds);
        assert_eq!(classify(24, 18, 7).unwrap(), PairClass::Amds);
        assert_eq!(classify(12, 5, 8).unwrap(), PairClass::Amds);
        assert_eq!(classify(12, 4, 8).unwrap(), PairClass::None);
        assert!(matches!(classify(12, 7, 8), Err(Error::BoundViolation { .. })));
    }
}

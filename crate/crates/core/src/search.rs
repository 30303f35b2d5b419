//! Exact minimum-weight search, in Hamming and symbol-pair metrics.
//!
//! Two engines are provided:
//!
//! * **message enumeration** walks every codeword up to scalar multiples and is
//!   only admissible when q^k is below the enumeration cap;
//! * **support enumeration** walks coordinate subsets S in increasing size and
//!   decides whether some codeword has support exactly S by computing the kernel
//!   of the parity-check columns indexed by S. For the symbol-pair metric only
//!   subsets whose cyclic run count can still beat the current bound are
//!   visited, since a codeword of weight w whose support forms r cyclic runs
//!   (w < n) has pair weight w + r.
//!
//! Both engines report the lexicographically smallest witness among all
//! minimisers, ordered by sorted support and then by the codeword scaled so
//! its first nonzero entry is one; results do not depend on the worker count.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::{default_cap, LinearCode};
use crate::error::{Error, Result};
use crate::gf::{Elem, Field};
use crate::linalg::column_kernel;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strategy {
    /// Message enumeration when q^k fits under the cap, otherwise support enumeration.
    Auto,
    Message,
    Support,
}

impl std::str::FromStr for Strategy {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "message" => Ok(Strategy::Message),
            "support" => Ok(Strategy::Support),
            other => Err(format!("unknown strategy {other:?} (expected auto, message or support)")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct SearchOptions {
    pub strategy: Strategy,
    pub cap: u128,
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { strategy: Strategy::Auto, cap: default_cap(), workers: 1 }
    }
}

impl SearchOptions {
    pub fn support() -> Self {
        SearchOptions { strategy: Strategy::Support, ..Default::default() }
    }
    pub fn message() -> Self {
        SearchOptions { strategy: Strategy::Message, ..Default::default() }
    }

    /// The concrete engine used for a code.
    pub fn resolve(&self, code: &LinearCode) -> Strategy {
        match self.strategy {
            Strategy::Auto if code.size() <= self.cap => Strategy::Message,
            Strategy::Auto => Strategy::Support,
            s => s,
        }
    }
}

/// A minimum weight together with its canonical witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinWeight {
    pub distance: usize,
    pub witness: Vec<Elem>,
    /// Supports (support engine) or codewords (message engine) visited.
    pub examined: u64,
}

/// Result of one pass of message enumeration.
#[derive(Clone, Debug)]
pub struct MessageScan {
    pub hamming: MinWeight,
    pub pair: MinWeight,
}

pub fn hamming_weight(word: &[Elem]) -> usize {
    word.iter().filter(|&&x| x != 0).count()
}

/// Number of cyclic positions i with (u_i, u_{i+1}) != (0, 0).
pub fn pair_weight(word: &[Elem]) -> usize {
    let n = word.len();
    (0..n).filter(|&i| word[i] != 0 || word[(i + 1) % n] != 0).count()
}

/// Number of maximal cyclic runs of consecutive positions in a sorted proper
/// subset of Z_n (zero for the empty and the full set).
pub fn cyclic_runs(support: &[usize], n: usize) -> usize {
    if support.is_empty() || support.len() == n {
        return 0;
    }
    let linear = 1 + support.windows(2).filter(|p| p[1] != p[0] + 1).count();
    if support[0] == 0 && *support.last().unwrap() == n - 1 {
        linear - 1
    } else {
        linear
    }
}

/// Pair weight of any word whose support is exactly `support`.
pub fn pair_weight_of_support(support: &[usize], n: usize) -> usize {
    if support.len() == n {
        n
    } else {
        support.len() + cyclic_runs(support, n)
    }
}

fn support_of(word: &[Elem]) -> Vec<usize> {
    (0..word.len()).filter(|&i| word[i] != 0).collect()
}

/// Scales a nonzero word so its first nonzero entry is one.
pub fn normalize(field: &Field, word: &mut [Elem]) {
    if let Some(&lead) = word.iter().find(|&&x| x != 0) {
        let inv = field.inv(lead).unwrap();
        for x in word.iter_mut() {
            *x = field.mul(inv, *x);
        }
    }
}

/// Canonical witness order: support first, then the normalized entries.
fn witness_less(a: &[Elem], b: &[Elem]) -> bool {
    let sa = support_of(a);
    let sb = support_of(b);
    (sa, a) < (sb, b)
}

/// Minimum Hamming and pair weights by enumerating every codeword up to scalars.
pub fn by_messages(code: &LinearCode, cap: u128) -> Result<MessageScan> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    if code.size() > cap {
        return Err(Error::EnumerationTooLarge { size: code.size(), cap });
    }
    let f = code.field();
    let g = code.generator();
    let (n, k, q) = (code.n(), code.k(), f.q() as usize);
    let mut best_h: Option<(usize, Vec<Elem>)> = None;
    let mut best_p: Option<(usize, Vec<Elem>)> = None;
    let mut examined = 0u64;
    let mut consider = |word: &[Elem]| {
        examined += 1;
        let w = hamming_weight(word);
        let pw = pair_weight(word);
        for (best, value) in [(&mut best_h, w), (&mut best_p, pw)] {
            let better = match best {
                None => true,
                Some((d, _)) if value < *d => true,
                Some((d, _)) if value > *d => false,
                Some(_) => {
                    let mut cand = word.to_vec();
                    normalize(f, &mut cand);
                    witness_less(&cand, &best.as_ref().unwrap().1)
                }
            };
            if better {
                let mut cand = word.to_vec();
                normalize(f, &mut cand);
                *best = Some((value, cand));
            }
        }
    };
    // Messages whose first nonzero digit (at `lead`) is one; the later digits
    // run through all q^(k-lead-1) values.
    for lead in 0..k {
        let mut digits = vec![0 as Elem; k];
        digits[lead] = 1;
        let mut word: Vec<Elem> = g.row(lead).to_vec();
        loop {
            consider(&word);
            let mut t = lead + 1;
            loop {
                if t == k {
                    break;
                }
                let old = digits[t];
                let new = ((old as usize + 1) % q) as Elem;
                digits[t] = new;
                let row = g.row(t);
                for c in 0..n {
                    word[c] = f.add(word[c], f.mul(f.sub(new, old), row[c]));
                }
                if new != 0 {
                    break;
                }
                t += 1;
            }
            if t == k {
                break;
            }
        }
    }
    let (dh, wh) = best_h.unwrap();
    let (dp, wp) = best_p.unwrap();
    Ok(MessageScan {
        hamming: MinWeight { distance: dh, witness: wh, examined },
        pair: MinWeight { distance: dp, witness: wp, examined },
    })
}

/// Parity-check columns prepared for repeated subset kernels.
struct Columns {
    field: Field,
    n: usize,
    rows: usize,
    cols: Vec<Vec<Elem>>,
}

impl Columns {
    fn new(code: &LinearCode) -> Columns {
        let h = code.parity();
        Columns {
            field: code.field().clone(),
            n: code.n(),
            rows: h.rows(),
            cols: (0..h.cols()).map(|c| h.column(c)).collect(),
        }
    }

    /// Kernel basis of the columns in `support`, or `None` if they are independent.
    fn kernel(&self, support: &[usize], scratch: &mut Vec<Elem>) -> Option<Vec<Vec<Elem>>> {
        let refs: Vec<&[Elem]> = support.iter().map(|&c| self.cols[c].as_slice()).collect();
        let (rank, basis) = column_kernel(&self.field, self.rows, &refs, scratch, true);
        (rank < support.len()).then_some(basis)
    }

    /// Calls `f` with each normalized kernel vector of full support, in
    /// increasing lexicographic order, until it breaks. Returns the number of
    /// kernel vectors inspected.
    fn for_each_exact<F>(&self, basis: &[Vec<Elem>], mut f: F) -> u64
    where
        F: FnMut(&[Elem]) -> ControlFlow<()>,
    {
        // A full-support vector is nonzero in the first coordinate, so its
        // coefficient on the first basis row (pivot 0) is one.
        if basis.is_empty() || basis[0][0] != 1 {
            return 0;
        }
        let fd = &self.field;
        let q = fd.q() as usize;
        let d = basis.len();
        let w = basis[0].len();
        let mut coeffs = vec![0 as Elem; d];
        coeffs[0] = 1;
        let mut v = basis[0].clone();
        let mut inspected = 0;
        loop {
            inspected += 1;
            if v.iter().all(|&x| x != 0) && f(&v).is_break() {
                return inspected;
            }
            // Odometer over coeffs[1..], last digit fastest, so vectors come
            // out in lexicographic order (pivot coordinates equal coefficients).
            let mut t = d - 1;
            loop {
                if t == 0 {
                    return inspected;
                }
                let old = coeffs[t];
                let new = ((old as usize + 1) % q) as Elem;
                coeffs[t] = new;
                let delta = fd.sub(new, old);
                for c in 0..w {
                    v[c] = fd.add(v[c], fd.mul(delta, basis[t][c]));
                }
                if new != 0 {
                    break;
                }
                t -= 1;
            }
        }
    }

    /// The smallest normalized codeword with support exactly `support`.
    fn exact_witness(&self, support: &[usize], scratch: &mut Vec<Elem>, inspected: &mut u64) -> Option<Vec<Elem>> {
        let basis = self.kernel(support, scratch)?;
        let mut found = None;
        *inspected += self.for_each_exact(&basis, |v| {
            found = Some(v.to_vec());
            ControlFlow::Break(())
        });
        found.map(|v| self.expand(support, &v))
    }

    fn expand(&self, support: &[usize], values: &[Elem]) -> Vec<Elem> {
        let mut word = vec![0; self.n];
        for (&i, &x) in support.iter().zip(values) {
            word[i] = x;
        }
        word
    }
}

/// Visits the w-subsets of {0..n} whose smallest element is `first`, in
/// lexicographic order. With `max_runs`, only subsets with at most that many
/// cyclic runs are visited.
fn walk_subsets<F>(n: usize, w: usize, first: usize, max_runs: Option<usize>, visit: &mut F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if w == 0 || first + w > n {
        return ControlFlow::Continue(());
    }
    // Linear runs can exceed the cyclic count by one only when the first run
    // starts at 0 (it may merge with a run ending at n-1).
    let linear_limit = max_runs.map(|r| if first == 0 { r + 1 } else { r });
    let mut stack = Vec::with_capacity(w);
    stack.push(first);
    fn rec<F>(
        n: usize,
        w: usize,
        stack: &mut Vec<usize>,
        runs: usize,
        limit: Option<usize>,
        max_runs: Option<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if stack.len() == w {
            if max_runs.is_none_or(|r| cyclic_runs(stack, n) <= r) {
                return visit(stack);
            }
            return ControlFlow::Continue(());
        }
        let last = *stack.last().unwrap();
        let remaining = w - stack.len();
        for next in last + 1..=n - remaining {
            let r = runs + usize::from(next != last + 1);
            if limit.is_some_and(|l| r > l) {
                continue;
            }
            stack.push(next);
            let flow = rec(n, w, stack, r, limit, max_runs, visit);
            stack.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
    rec(n, w, &mut stack, 1, linear_limit, max_runs, visit)
}

/// Runs `branch` for every starting coordinate, in parallel when requested,
/// returning the results in coordinate order.
fn per_first<T, F>(n: usize, workers: usize, branch: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    if workers <= 1 {
        return (0..n).map(branch).collect();
    }
    match rayon::ThreadPoolBuilder::new().num_threads(workers).build() {
        Ok(pool) => pool.install(|| (0..n).into_par_iter().map(&branch).collect()),
        Err(_) => (0..n).map(branch).collect(),
    }
}

/// Minimum Hamming weight by support enumeration.
pub fn min_weight_by_support(code: &LinearCode, opts: &SearchOptions) -> Result<MinWeight> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let cols = Columns::new(code);
    let n = code.n();
    for w in 1..=n {
        // Each branch reports (subsets visited, first hit) for its starting coordinate.
        let branches = per_first(n, opts.workers, |first| {
            let mut scratch = Vec::new();
            let mut inspected = 0;
            let mut visited = 0u64;
            let mut hit = None;
            let _ = walk_subsets(n, w, first, None, &mut |s| {
                visited += 1;
                match cols.exact_witness(s, &mut scratch, &mut inspected) {
                    Some(word) => {
                        hit = Some(word);
                        ControlFlow::Break(())
                    }
                    None => ControlFlow::Continue(()),
                }
            });
            (visited, hit)
        });
        let mut examined = 0;
        for (visited, hit) in branches {
            examined += visited;
            if let Some(witness) = hit {
                return Ok(MinWeight { distance: w, witness, examined });
            }
        }
    }
    unreachable!("a nonzero code has a codeword of weight at most n")
}

/// Minimum pair weight by support enumeration, seeded with a Hamming minimum
/// (computed if not supplied).
pub fn min_pair_by_support(code: &LinearCode, opts: &SearchOptions, hamming: Option<&MinWeight>) -> Result<MinWeight> {
    let owned;
    let hamming = match hamming {
        Some(h) => h,
        None => {
            owned = min_weight_by_support(code, opts)?;
            &owned
        }
    };
    let n = code.n();
    let cols = Columns::new(code);
    let mut best_pw = pair_weight(&hamming.witness);
    let mut best = hamming.witness.clone();
    let mut examined = 0u64;
    for w in hamming.distance..=n {
        let lower = if w < n { w + 1 } else { n };
        if lower > best_pw {
            break;
        }
        let max_runs = if w < n { Some(best_pw - w) } else { None };
        let bound = best_pw;
        let branches = per_first(n, opts.workers, |first| {
            let mut scratch = Vec::new();
            let mut inspected = 0;
            let mut visited = 0u64;
            let mut local: Option<(usize, Vec<Elem>)> = None;
            let _ = walk_subsets(n, w, first, max_runs, &mut |s| {
                visited += 1;
                let pw = pair_weight_of_support(s, n);
                if pw > bound || local.as_ref().is_some_and(|(b, _)| pw > *b) {
                    return ControlFlow::Continue(());
                }
                if let Some(word) = cols.exact_witness(s, &mut scratch, &mut inspected) {
                    let better = match &local {
                        None => true,
                        Some((b, bw)) => pw < *b || (pw == *b && witness_less(&word, bw)),
                    };
                    if better {
                        local = Some((pw, word));
                    }
                }
                ControlFlow::Continue(())
            });
            (visited, local)
        });
        for (visited, local) in branches {
            examined += visited;
            if let Some((pw, word)) = local {
                if pw < best_pw || (pw == best_pw && witness_less(&word, &best)) {
                    best_pw = pw;
                    best = word;
                }
            }
        }
    }
    Ok(MinWeight { distance: best_pw, witness: best, examined })
}

/// Every codeword of Hamming weight `w`, grouped by support: each support with
/// the normalized codewords having exactly that support.
pub fn codewords_of_weight(code: &LinearCode, w: usize) -> Vec<(Vec<usize>, Vec<Vec<Elem>>)> {
    let cols = Columns::new(code);
    let n = code.n();
    let mut out = Vec::new();
    let mut scratch = Vec::new();
    for first in 0..n {
        let _ = walk_subsets(n, w, first, None, &mut |s| {
            if let Some(basis) = cols.kernel(s, &mut scratch) {
                let mut words = Vec::new();
                cols.for_each_exact(&basis, |v| {
                    words.push(cols.expand(s, v));
                    ControlFlow::Continue(())
                });
                if !words.is_empty() {
                    out.push((s.to_vec(), words));
                }
            }
            ControlFlow::Continue(())
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn runs_and_pair_weights() {
        assert_eq!(cyclic_runs(&[0, 1, 5], 6), 1);
        assert_eq!(cyclic_runs(&[0, 2, 4], 6), 3);
        assert_eq!(pair_weight_of_support(&[0, 1, 2, 3, 4, 5], 6), 6);
        assert_eq!(pair_weight(&[1, 0, 0, 2, 0, 0]), 4);
        assert_eq!(pair_weight(&[1, 0, 0, 0, 0, 3]), 3);
    }

    #[test]
    fn subset_walk_respects_run_limit() {
        let mut seen = Vec::new();
        for first in 0..6 {
            let _ = walk_subsets(6, 3, first, Some(1), &mut |s| {
                seen.push(s.to_vec());
                ControlFlow::Continue(())
            });
        }
        let expected: Vec<Vec<usize>> = (0..6)
            .flat_map(|a| (a + 1..6).flat_map(move |b| (b + 1..6).map(move |c| vec![a, b, c])))
            .filter(|s| cyclic_runs(s, 6) <= 1)
            .collect();
        assert_eq!(seen, expected);
        assert_eq!(seen.len(), 6);
    }

    #[test]
    fn engines_agree_on_small_grs() {
        let f = Field::prime(7).unwrap();
        let c = LinearCode::grs(&f, &[0, 1, 2, 3, 4, 5], 2).unwrap();
        let m = by_messages(&c, 1 << 20).unwrap();
        let opts = SearchOptions::support();
        let h = min_weight_by_support(&c, &opts).unwrap();
        let p = min_pair_by_support(&c, &opts, Some(&h)).unwrap();
        assert_eq!(h.distance, 3);
        assert_eq!((m.hamming.distance, &m.hamming.witness), (h.distance, &h.witness));
        assert_eq!((m.pair.distance, &m.pair.witness), (p.distance, &p.witness));
    }
}

//! Coordinate permutations used to interleave matrix-product codewords.
//!
//! A [`Permutation`] maps a source coordinate l to a destination `dest(l)`;
//! applying it to a word C gives D with D[dest(l)] = C[l]. Its *listing* is
//! the sequence of 1-based source coordinates occupying destinations 0, 1, ...,
//! which is how interleavings are usually displayed.

use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gf::Elem;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    dest: Vec<usize>,
}

impl Permutation {
    pub fn identity(len: usize) -> Permutation {
        Permutation { dest: (0..len).collect() }
    }

    /// From the destination of each source coordinate.
    pub fn from_destinations(dest: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; dest.len()];
        for &d in &dest {
            if d >= dest.len() || std::mem::replace(&mut seen[d], true) {
                return Err(Error::DimensionMismatch(format!("{dest:?} is not a permutation")));
            }
        }
        Ok(Permutation { dest })
    }

    /// From a 1-based listing of the source coordinate held by each destination.
    pub fn from_listing(listing: &[usize]) -> Result<Permutation> {
        let mut dest = vec![usize::MAX; listing.len()];
        for (t, &s) in listing.iter().enumerate() {
            if s == 0 || s > listing.len() || dest[s - 1] != usize::MAX {
                return Err(Error::DimensionMismatch(format!("{listing:?} is not a permutation listing")));
            }
            dest[s - 1] = t;
        }
        Ok(Permutation { dest })
    }

    pub fn len(&self) -> usize {
        self.dest.len()
    }
    pub fn is_empty(&self) -> bool {
        self.dest.is_empty()
    }
    pub fn destinations(&self) -> &[usize] {
        &self.dest
    }
    pub fn dest(&self, source: usize) -> usize {
        self.dest[source]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.dest.len()];
        for (l, &d) in self.dest.iter().enumerate() {
            inv[d] = l;
        }
        Permutation { dest: inv }
    }

    /// The 1-based source coordinate shown at each destination.
    pub fn listing(&self) -> Vec<usize> {
        self.inverse().dest.iter().map(|&s| s + 1).collect()
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &Permutation) -> Result<Permutation> {
        if self.len() != first.len() {
            return Err(Error::SizeMismatch { perm: self.len(), code: first.len() });
        }
        Ok(Permutation { dest: first.dest.iter().map(|&d| self.dest[d]).collect() })
    }

    pub fn apply_word(&self, word: &[Elem]) -> Result<Vec<Elem>> {
        if word.len() != self.len() {
            return Err(Error::SizeMismatch { perm: self.len(), code: word.len() });
        }
        let mut out = vec![0; word.len()];
        for (l, &x) in word.iter().enumerate() {
            out[self.dest[l]] = x;
        }
        Ok(out)
    }

    /// The permutation-equivalent code with coordinates moved by `self`.
    pub fn apply(&self, code: &LinearCode) -> Result<LinearCode> {
        if code.n() != self.len() {
            return Err(Error::SizeMismatch { perm: self.len(), code: code.n() });
        }
        code.permute_columns(&self.dest)
    }
}

/// Block interleaver on M blocks of length n: coordinate j of block i moves to
/// position i + M j, so the blocks end up read column by column.
pub fn interleave(blocks: usize, n: usize) -> Permutation {
    let mut dest = vec![0; blocks * n];
    for i in 0..blocks {
        for j in 0..n {
            dest[i * n + j] = i + blocks * j;
        }
    }
    Permutation { dest }
}

/// On a length-`blocks * n` word viewed as n columns of height `blocks`, the
/// entry at row `row` of column j is replaced by the one from column j + `shift`
/// (cyclically); the other rows are untouched.
pub fn rotate_row(blocks: usize, n: usize, row: usize, shift: isize) -> Permutation {
    let mut dest: Vec<usize> = (0..blocks * n).collect();
    let nn = n as isize;
    for j in 0..n {
        let from = (j as isize + shift).rem_euclid(nn) as usize;
        dest[row + blocks * from] = row + blocks * j;
    }
    Permutation { dest }
}

/// Interleaving for three blocks whose middle row is shifted by one column.
pub fn three_block_shifted(n: usize) -> Permutation {
    rotate_row(3, n, 1, 1).after(&interleave(3, n)).unwrap()
}

/// Interleaving for four blocks, row 0 shifted by two columns and row 2 by one.
pub fn four_block_shifted(n: usize) -> Permutation {
    let shift = rotate_row(4, n, 0, 2).after(&rotate_row(4, n, 2, 1)).unwrap();
    shift.after(&interleave(4, n)).unwrap()
}

/// Interleaving for four blocks that exchanges rows 1 and 2 with opposite
/// column shifts: slot 1 + 4j takes row 2 of column j - 1 and slot 2 + 4j takes
/// row 1 of column j + 1.
pub fn four_block_swapped(n: usize) -> Permutation {
    let mut dest: Vec<usize> = (0..4 * n).collect();
    for j in 0..n {
        dest[2 + 4 * ((j + n - 1) % n)] = 1 + 4 * j;
        dest[1 + 4 * ((j + 1) % n)] = 2 + 4 * j;
    }
    Permutation { dest }.after(&interleave(4, n)).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn plain_interleave_listing() {
        assert_eq!(interleave(3, 4).listing(), vec![1, 5, 9, 2, 6, 10, 3, 7, 11, 4, 8, 12]);
    }

    #[test]
    fn listing_round_trip() {
        let p = four_block_swapped(6);
        assert_eq!(Permutation::from_listing(&p.listing()).unwrap(), p);
        assert_eq!(p.after(&p.inverse()).unwrap(), Permutation::identity(24));
    }

    #[test]
    fn apply_word_places_sources() {
        let p = interleave(2, 3);
        assert_eq!(p.apply_word(&[1, 2, 3, 4, 5, 6]).unwrap(), vec![1, 4, 2, 5, 3, 6]);
    }
}

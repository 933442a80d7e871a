use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{join_numbers, parse_tokens, Bounds};
use crate::error::{Error, Result};

/// Replaces the distinct letters `b_1 < … < b_r` of `w` by `1, …, r`.
pub fn pack(w: &[usize]) -> Vec<usize> {
    let mut values = w.to_vec();
    values.sort_unstable();
    values.dedup();
    w.iter()
        .map(|x| values.binary_search(x).unwrap() + 1)
        .collect()
}

/// A word over `1..=m` using each of these letters at least once.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PackedWord {
    letters: Vec<usize>,
}

impl PackedWord {
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::invalid("letters must be positive"));
        }
        if pack(&letters) != letters {
            return Err(Error::invalid("word is not packed"));
        }
        Ok(PackedWord { letters })
    }

    pub(crate) fn from_letters_unchecked(letters: Vec<usize>) -> Self {
        debug_assert!(pack(&letters) == letters);
        PackedWord { letters }
    }

    /// Packs an arbitrary word.
    pub fn packing(w: &[usize]) -> Self {
        PackedWord { letters: pack(w) }
    }

    pub fn empty() -> Self {
        PackedWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn max_letter(&self) -> usize {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// All packed words of length `n`, sorted.
    pub fn enumerate(n: usize) -> Result<Vec<PackedWord>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<PackedWord>> {
        bounds.check("packed words", n)?;
        let mut out = Vec::new();
        let mut w = Vec::with_capacity(n);
        enumerate_rec(n, &mut w, &mut out);
        out.sort();
        Ok(out)
    }
}

// words whose letters seen so far form an initial segment can be extended to
// a packed word as long as the missing letters fit in the remaining slots
fn enumerate_rec(n: usize, w: &mut Vec<usize>, out: &mut Vec<PackedWord>) {
    if w.len() == n {
        if pack(w) == *w {
            out.push(PackedWord { letters: w.clone() });
        }
        return;
    }
    for x in 1..=n {
        w.push(x);
        let max = w.iter().copied().max().unwrap();
        let mut seen = vec![false; max + 1];
        for &y in w.iter() {
            seen[y] = true;
        }
        let missing = (1..=max).filter(|&y| !seen[y]).count();
        if missing <= n - w.len() {
            enumerate_rec(n, w, out);
        }
        w.pop();
    }
}

impl Ord for PackedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for PackedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_numbers(&self.letters))
    }
}

impl FromStr for PackedWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = parse_tokens(s)?;
        if let Some(&(pos, _)) = tokens.iter().find(|&&(_, x)| x == 0) {
            return Err(Error::parse(pos, "letters must be positive"));
        }
        let letters: Vec<usize> = tokens.iter().map(|&(_, x)| x).collect();
        if pack(&letters) != letters {
            return Err(Error::parse(0, "word is not packed"));
        }
        Ok(PackedWord { letters })
    }
}

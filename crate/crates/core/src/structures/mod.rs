//! Index objects of the bases: ordered, rooted and plane forests, packed
//! words, endofunctions and permutations.
//!
//! Every type has a whitespace-separated text form (see each `Display`
//! impl), and `parse(render(x)) == x`.

mod endo;
pub mod notation;
mod ordered;
mod packed;
mod plane;
mod rooted;

pub use endo::{Endofunction, Permutation};
pub use ordered::{AdmissibleCut, OrderedForest};
pub use packed::{pack, PackedWord};
pub use plane::PlaneForest;
pub use rooted::RootedForest;

use crate::error::{Error, Result};

/// Default maximum size for exhaustive enumerations.
pub const DEFAULT_ENUMERATION_BOUND: usize = 8;

/// Size limits for exhaustive enumerations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub max_size: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_size: DEFAULT_ENUMERATION_BOUND,
        }
    }
}

impl Bounds {
    pub fn new(max_size: usize) -> Self {
        Bounds { max_size }
    }

    pub fn check(&self, what: &'static str, requested: usize) -> Result<()> {
        if requested > self.max_size {
            Err(Error::Bound {
                what,
                requested,
                bound: self.max_size,
            })
        } else {
            Ok(())
        }
    }
}

/// Splits `text` into whitespace-separated positive-integer tokens, keeping
/// byte offsets for error reporting. A parenthesized run of digits such as
/// `(23234)` is read one digit per token.
pub(crate) fn parse_tokens(text: &str) -> Result<Vec<(usize, usize)>> {
    if text.trim_start().starts_with('(') {
        let offset = text.len() - text.trim_start().len();
        let digits = notation::digit_word(text)?;
        return Ok(digits
            .into_iter()
            .enumerate()
            .map(|(i, d)| (offset + 1 + i, d))
            .collect());
    }
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i].is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
            i += 1;
        }
        let tok = &text[start..i];
        let value = tok.parse::<usize>().map_err(|_| {
            Error::parse(
                start,
                format!("expected a nonnegative integer, found {tok:?}"),
            )
        })?;
        out.push((start, value));
    }
    Ok(out)
}

pub(crate) fn join_numbers(values: &[usize]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// The unique increasing bijection from a sorted subset onto `1..=k`,
/// as a lookup table indexed by the original label (0 if absent).
pub(crate) fn standardizer(subset: &[usize], n: usize) -> Vec<usize> {
    let mut map = vec![0; n + 1];
    for (rank, &x) in subset.iter().enumerate() {
        map[x] = rank + 1;
    }
    map
}

pub(crate) fn validate_subset(subset: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut s = subset.to_vec();
    s.sort_unstable();
    s.dedup();
    if s.len() != subset.len() {
        return Err(Error::invalid("subset has repeated elements"));
    }
    if let Some(&bad) = s.iter().find(|&&x| x == 0 || x > n) {
        return Err(Error::invalid(format!("{bad} is not in 1..={n}")));
    }
    Ok(s)
}

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{join_numbers, parse_tokens, standardizer, validate_subset, Bounds};
use crate::error::{Error, Result};

/// A map `[n] → [n]`, stored as its image vector `(f(1), …, f(n))`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Endofunction {
    image: Vec<usize>,
}

impl Endofunction {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        if let Some((i, &x)) = image.iter().enumerate().find(|&(_, &x)| x == 0 || x > n) {
            return Err(Error::invalid(format!(
                "f({}) = {x} is not in 1..={n}",
                i + 1
            )));
        }
        Ok(Endofunction { image })
    }

    pub(crate) fn from_image_unchecked(image: Vec<usize>) -> Self {
        debug_assert!(image.iter().all(|&x| x >= 1 && x <= image.len()));
        Endofunction { image }
    }

    pub fn empty() -> Self {
        Endofunction::default()
    }

    pub fn identity(n: usize) -> Self {
        Endofunction {
            image: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    /// `f(i)` for `1 ≤ i ≤ n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn fixed_points(&self) -> usize {
        (1..=self.len()).filter(|&i| self.apply(i) == i).count()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Endofunction) -> Result<Endofunction> {
        if self.len() != other.len() {
            return Err(Error::invalid("composing endofunctions of different sizes"));
        }
        Ok(Endofunction {
            image: other.image.iter().map(|&x| self.apply(x)).collect(),
        })
    }

    /// The `k`-th iterate, with `f^0` the identity.
    pub fn power(&self, k: usize) -> Endofunction {
        let mut out = Endofunction::identity(self.len());
        for _ in 0..k {
            out.image = out.image.iter().map(|&x| self.apply(x)).collect();
        }
        out
    }

    /// Concatenation with `other` shifted by `n`.
    pub fn shifted_concat(&self, other: &Endofunction) -> Endofunction {
        let n = self.len();
        let mut image = self.image.clone();
        image.extend(other.image.iter().map(|&x| x + n));
        Endofunction { image }
    }

    /// `true` when `f⁻¹(I) ⊆ I`.
    pub fn is_ideal(&self, subset: &[usize]) -> bool {
        let mut inside = vec![false; self.len() + 1];
        for &x in subset {
            inside[x] = true;
        }
        (1..=self.len()).all(|i| !inside[self.apply(i)] || inside[i])
    }

    /// All ideals by increasing bitmask (bit `i - 1` stands for `i`).
    pub fn ideals(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        assert!(n < 64, "endofunction too large for ideal enumeration");
        let mut preimage = vec![0u64; n];
        for i in 1..=n {
            preimage[self.apply(i) - 1] |= 1 << (i - 1);
        }
        (0u64..(1u64 << n))
            .filter(|&mask| (0..n).all(|x| mask & (1 << x) == 0 || preimage[x] & !mask == 0))
            .map(|mask| {
                (0..n)
                    .filter(|x| mask & (1 << x) != 0)
                    .map(|x| x + 1)
                    .collect()
            })
            .collect()
    }

    /// `std(f^I)`: values leaving `I` become fixed points, then `I` is
    /// relabeled increasingly onto `1..=|I|`.
    pub fn std_restrict(&self, subset: &[usize]) -> Result<Endofunction> {
        let s = validate_subset(subset, self.len())?;
        Ok(self.std_restrict_sorted(&s))
    }

    pub(crate) fn std_restrict_sorted(&self, s: &[usize]) -> Endofunction {
        let tau = standardizer(s, self.len());
        let image = s
            .iter()
            .map(|&x| {
                let y = self.apply(x);
                if tau[y] != 0 {
                    tau[y]
                } else {
                    tau[x]
                }
            })
            .collect();
        Endofunction { image }
    }

    /// The complement of a sorted subset of `1..=n`.
    pub(crate) fn complement(&self, s: &[usize]) -> Vec<usize> {
        complement(s, self.len())
    }

    /// All `n^n` endofunctions of `[n]`, by lexicographic image vector.
    pub fn enumerate(n: usize) -> Result<Vec<Endofunction>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<Endofunction>> {
        bounds.check("endofunctions", n)?;
        let mut out = Vec::new();
        let mut image = vec![1; n];
        loop {
            out.push(Endofunction {
                image: image.clone(),
            });
            let mut k = n;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                if image[k] < n {
                    image[k] += 1;
                    break;
                }
                image[k] = 1;
            }
        }
    }
}

pub(crate) fn complement(s: &[usize], n: usize) -> Vec<usize> {
    let mut inside = vec![false; n + 1];
    for &x in s {
        inside[x] = true;
    }
    (1..=n).filter(|&x| !inside[x]).collect()
}

impl Ord for Endofunction {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.image.cmp(&other.image))
    }
}

impl PartialOrd for Endofunction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Endofunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_numbers(&self.image))
    }
}

impl FromStr for Endofunction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens = parse_tokens(s)?;
        let n = tokens.len();
        if let Some(&(pos, x)) = tokens.iter().find(|&&(_, x)| x == 0 || x > n) {
            return Err(Error::parse(pos, format!("value {x} is not in 1..={n}")));
        }
        Ok(Endofunction {
            image: tokens.into_iter().map(|(_, x)| x).collect(),
        })
    }
}

/// A bijective endofunction.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct Permutation(Endofunction);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        Self::try_from(Endofunction::new(image)?)
    }

    pub fn identity(n: usize) -> Self {
        Permutation(Endofunction::identity(n))
    }

    pub fn as_endofunction(&self) -> &Endofunction {
        &self.0
    }

    pub fn into_endofunction(self) -> Endofunction {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0.apply(i)
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for i in 1..=self.len() {
            image[self.apply(i) - 1] = i;
        }
        Permutation(Endofunction { image })
    }

    /// Cycles, each starting at its smallest element, ordered by that
    /// element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n + 1];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn shifted_concat(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.shifted_concat(&other.0))
    }

    pub fn enumerate(n: usize) -> Result<Vec<Permutation>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<Permutation>> {
        bounds.check("permutations", n)?;
        let mut image: Vec<usize> = (1..=n).collect();
        let mut out = vec![Permutation(Endofunction {
            image: image.clone(),
        })];
        // next lexicographic permutation
        loop {
            let Some(i) = (1..n).rev().find(|&i| image[i - 1] < image[i]) else {
                return Ok(out);
            };
            let j = (i..n).rev().find(|&j| image[j] > image[i - 1]).unwrap();
            image.swap(i - 1, j);
            image[i..].reverse();
            out.push(Permutation(Endofunction {
                image: image.clone(),
            }));
        }
    }
}

impl TryFrom<Endofunction> for Permutation {
    type Error = Error;

    fn try_from(f: Endofunction) -> Result<Self> {
        let mut seen = vec![false; f.len() + 1];
        for &x in f.image() {
            if seen[x] {
                return Err(Error::invalid(format!("value {x} is hit twice")));
            }
            seen[x] = true;
        }
        Ok(Permutation(f))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let f: Endofunction = s.parse()?;
        Permutation::try_from(f).map_err(|e| match e {
            Error::Invalid(msg) => Error::parse(0, msg),
            other => other,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Endofunction {
        s.parse().unwrap()
    }

    #[test]
    fn compact_words() {
        let f: Endofunction = "(23234)".parse().unwrap();
        assert_eq!(f.to_string(), "2 3 2 3 4");
        let err = "(2x)".parse::<Endofunction>().unwrap_err();
        assert_eq!(err, Error::parse(2, "expected a digit, found 'x'"));
        assert_eq!("()".parse::<Endofunction>().unwrap(), Endofunction::empty());
        assert!("(21".parse::<Permutation>().is_err());
    }

    #[test]
    fn counts() {
        for n in 0..=5 {
            assert_eq!(Endofunction::enumerate(n).unwrap().len(), n.pow(n as u32));
        }
        let perms: Vec<usize> = (0..=5)
            .map(|n| Permutation::enumerate(n).unwrap().len())
            .collect();
        assert_eq!(perms, vec![1, 1, 2, 6, 24, 120]);
        let all = Endofunction::enumerate(3).unwrap();
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn ideals_of_23234() {
        let f = e("2 3 2 3 4");
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![1],
            vec![5],
            vec![1, 5],
            vec![4, 5],
            vec![1, 4, 5],
            vec![1, 2, 3, 4, 5],
        ];
        assert_eq!(f.ideals(), expected);
        assert_eq!(Endofunction::identity(3).ideals().len(), 8);
        assert_eq!(e("2 3 1").ideals().len(), 2);
    }

    #[test]
    fn standardized_restriction() {
        let f = e("2 3 2 3 4");
        assert_eq!(f.std_restrict(&[1, 2, 3, 4, 5]).unwrap(), f);
        assert_eq!(f.std_restrict(&[1]).unwrap(), e("1"));
        assert_eq!(f.std_restrict(&[4, 5]).unwrap(), e("1 1"));
        assert_eq!(f.std_restrict(&[2, 3, 4]).unwrap(), e("2 1 2"));
        assert!(f.std_restrict(&[6]).is_err());
    }

    #[test]
    fn shifted_concatenation() {
        assert_eq!(e("1 1").shifted_concat(&e("1")), e("1 1 3"));
        assert_eq!(e("1 2").shifted_concat(&e("2 1")), e("1 2 4 3"));
        assert_eq!(e("2 1").shifted_concat(&Endofunction::empty()), e("2 1"));
    }

    #[test]
    fn permutations() {
        let s: Permutation = "2 4 5 1 3".parse().unwrap();
        assert_eq!(s.cycles(), vec![vec![1, 2, 4], vec![3, 5]]);
        assert_eq!(s.inverse().to_string(), "4 1 5 2 3");
        assert!("1 1".parse::<Permutation>().is_err());
        assert!(matches!(
            "1 3".parse::<Endofunction>(),
            Err(Error::Parse { pos: 2, .. })
        ));
    }

    #[test]
    fn powers() {
        let f = e("2 1");
        assert_eq!(f.power(2), Endofunction::identity(2));
        assert_eq!(f.power(4), f.power(2));
        assert_eq!(e("1 1 2").power(2), e("1 1 1"));
    }
}

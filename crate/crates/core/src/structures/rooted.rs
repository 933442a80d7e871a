use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::plane::{parse_code, split_trees};
use super::{notation, Bounds, OrderedForest, PlaneForest};
use crate::error::{Error, Result};

/// An unlabelled rooted forest in canonical parenthesis form.
///
/// Each tree is `(`, then its subtrees' canonical forms sorted
/// lexicographically, then `)`; the trees of a forest are sorted the same
/// way. Two forests are isomorphic exactly when their canonical forms agree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RootedForest {
    code: String,
}

impl RootedForest {
    pub fn empty() -> Self {
        RootedForest::default()
    }

    pub fn from_ordered(forest: &OrderedForest) -> Self {
        let n = forest.len();
        let mut children = vec![Vec::new(); n + 1];
        for v in 1..=n {
            children[forest.parent(v).unwrap_or(0)].push(v);
        }
        let mut trees: Vec<String> = children[0]
            .iter()
            .map(|&r| canonical_tree(&children, r))
            .collect();
        trees.sort();
        RootedForest {
            code: trees.concat(),
        }
    }

    pub fn from_plane(forest: &PlaneForest) -> Self {
        Self::from_ordered(&forest.to_ordered())
    }

    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn trees(&self) -> Vec<RootedForest> {
        split_trees(&self.code)
            .into_iter()
            .map(|t| RootedForest {
                code: t.to_string(),
            })
            .collect()
    }

    /// Disjoint union.
    pub fn product(&self, other: &RootedForest) -> RootedForest {
        let mut trees: Vec<&str> = split_trees(&self.code);
        trees.extend(split_trees(&other.code));
        trees.sort_unstable();
        RootedForest {
            code: trees.concat(),
        }
    }

    /// One ordered labeling of this forest (depth-first on the canonical
    /// plane representative).
    pub fn to_ordered(&self) -> OrderedForest {
        self.as_plane().to_ordered()
    }

    pub fn as_plane(&self) -> PlaneForest {
        PlaneForest::from_code_unchecked(self.code.clone())
    }

    /// All rooted forests on `n` vertices, sorted; obtained by canonicalizing
    /// plane forests.
    pub fn enumerate(n: usize) -> Result<Vec<RootedForest>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<RootedForest>> {
        let set: BTreeSet<RootedForest> = PlaneForest::enumerate_bounded(n, bounds)?
            .iter()
            .map(RootedForest::from_plane)
            .collect();
        Ok(set.into_iter().collect())
    }
}

fn canonical_tree(children: &[Vec<usize>], v: usize) -> String {
    let mut parts: Vec<String> = children[v]
        .iter()
        .map(|&c| canonical_tree(children, c))
        .collect();
    parts.sort();
    format!("({})", parts.concat())
}

impl Ord for RootedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.code.cmp(&other.code))
    }
}

impl PartialOrd for RootedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for RootedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&split_trees(&self.code).join(" "))
    }
}

/// Accepts parenthesis strings in any child order, or space-separated tree
/// names such as `tdeux tun`.
impl FromStr for RootedForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim_start();
        if trimmed.starts_with('t') {
            return notation::rooted_forest(s);
        }
        let code = parse_code(s)?;
        Ok(RootedForest::from_plane(&PlaneForest::from_code_unchecked(
            code,
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RootedForest {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_form_ignores_child_order() {
        assert_eq!(r("(()(()))"), r("((())())"));
        assert_eq!(r("() (())"), r("(()) ()"));
        assert_ne!(r("((()))"), r("(()())"));
    }

    #[test]
    fn counts() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| RootedForest::enumerate(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115]);
    }

    #[test]
    fn product_commutes() {
        let a = r("()");
        let b = r("(())");
        assert_eq!(a.product(&b), b.product(&a));
        assert_eq!(a.product(&RootedForest::empty()), a);
        assert_eq!(a.product(&a), r("() ()"));
        assert_eq!(a.product(&a).trees().len(), 2);
    }

    #[test]
    fn labeling_round_trip() {
        for n in 0..=5 {
            for x in RootedForest::enumerate(n).unwrap() {
                assert_eq!(RootedForest::from_ordered(&x.to_ordered()), x);
            }
        }
    }
}

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{Bounds, OrderedForest};
use crate::error::{Error, Result};

/// A plane forest, stored as its balanced-parenthesis word.
///
/// A tree is `(` followed by its subtrees in order and `)`; a forest is the
/// concatenation of its trees. The text form separates trees by spaces,
/// e.g. `(()()) ()`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PlaneForest {
    code: String,
}

impl PlaneForest {
    pub fn empty() -> Self {
        PlaneForest::default()
    }

    /// The single-vertex tree.
    pub fn leaf() -> Self {
        PlaneForest { code: "()".into() }
    }

    pub(crate) fn from_code_unchecked(code: String) -> Self {
        debug_assert!(is_balanced(&code));
        PlaneForest { code }
    }

    /// Balanced-parenthesis word without separators.
    pub fn code(&self) -> &str {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn trees(&self) -> Vec<PlaneForest> {
        split_trees(&self.code)
            .into_iter()
            .map(|t| PlaneForest {
                code: t.to_string(),
            })
            .collect()
    }

    /// Concatenation of the tree sequences.
    pub fn product(&self, other: &PlaneForest) -> PlaneForest {
        PlaneForest {
            code: format!("{}{}", self.code, other.code),
        }
    }

    /// Joins all trees under a new root.
    pub fn b_plus(&self) -> PlaneForest {
        PlaneForest {
            code: format!("({})", self.code),
        }
    }

    /// Numbers the vertices by a left depth-first traversal, in order of
    /// first visit.
    pub fn to_ordered(&self) -> OrderedForest {
        let mut parent = Vec::with_capacity(self.len());
        let mut stack: Vec<usize> = Vec::new();
        for c in self.code.bytes() {
            if c == b'(' {
                parent.push(stack.last().copied().unwrap_or(0));
                stack.push(parent.len());
            } else {
                stack.pop();
            }
        }
        OrderedForest::from_parents_unchecked(parent)
    }

    /// Inverse of [`PlaneForest::to_ordered`] on its image.
    pub fn from_ordered(forest: &OrderedForest) -> Option<PlaneForest> {
        let mut code = String::with_capacity(2 * forest.len());
        for r in forest.roots() {
            write_subtree(forest, r, &mut code);
        }
        let plane = PlaneForest { code };
        (plane.to_ordered() == *forest).then_some(plane)
    }

    /// All plane forests on `n` vertices, sorted.
    pub fn enumerate(n: usize) -> Result<Vec<PlaneForest>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<PlaneForest>> {
        bounds.check("plane forests", n)?;
        let mut table: Vec<Vec<String>> = vec![vec![String::new()]];
        for m in 1..=n {
            let mut level = Vec::new();
            // first tree has a root and k vertices above it
            for k in 0..m {
                for inner in &table[k] {
                    for rest in &table[m - 1 - k] {
                        level.push(format!("({inner}){rest}"));
                    }
                }
            }
            table.push(level);
        }
        let mut out: Vec<PlaneForest> = table
            .swap_remove(n)
            .into_iter()
            .map(|code| PlaneForest { code })
            .collect();
        out.sort();
        Ok(out)
    }
}

fn write_subtree(forest: &OrderedForest, v: usize, code: &mut String) {
    code.push('(');
    for c in forest.children(v) {
        write_subtree(forest, c, code);
    }
    code.push(')');
}

pub(crate) fn is_balanced(code: &str) -> bool {
    let mut depth = 0i64;
    for c in code.bytes() {
        match c {
            b'(' => depth += 1,
            b')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => return false,
        }
    }
    depth == 0
}

pub(crate) fn split_trees(code: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in code.bytes().enumerate() {
        if c == b'(' {
            depth += 1;
        } else {
            depth -= 1;
            if depth == 0 {
                out.push(&code[start..=i]);
                start = i + 1;
            }
        }
    }
    out
}

/// Parses a parenthesis string, ignoring whitespace.
pub(crate) fn parse_code(s: &str) -> Result<String> {
    let mut code = String::with_capacity(s.len());
    let mut open: Vec<usize> = Vec::new();
    for (pos, c) in s.char_indices() {
        match c {
            '(' => {
                open.push(pos);
                code.push('(');
            }
            ')' => {
                if open.pop().is_none() {
                    return Err(Error::parse(pos, "unmatched ')'"));
                }
                code.push(')');
            }
            c if c.is_whitespace() => {
                if !open.is_empty() {
                    return Err(Error::parse(pos, "whitespace inside a tree"));
                }
            }
            other => return Err(Error::parse(pos, format!("unexpected character {other:?}"))),
        }
    }
    if let Some(&pos) = open.first() {
        return Err(Error::parse(pos, "unclosed '('"));
    }
    Ok(code)
}

impl Ord for PlaneForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.code.cmp(&other.code))
    }
}

impl PartialOrd for PlaneForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PlaneForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&split_trees(&self.code).join(" "))
    }
}

/// Accepts a parenthesis code such as `(()(()))()` or tree names such as
/// `tquatretrois tun`.
impl FromStr for PlaneForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('t') {
            return super::notation::plane_forest(s);
        }
        Ok(PlaneForest {
            code: parse_code(s)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_counts() {
        let counts: Vec<usize> = (0..=7)
            .map(|n| PlaneForest::enumerate(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn product_is_noncommutative() {
        let a: PlaneForest = "()".parse().unwrap();
        let b: PlaneForest = "(())".parse().unwrap();
        assert_ne!(a.product(&b), b.product(&a));
        assert_eq!(PlaneForest::empty().product(&b), b);
        assert_eq!(a.product(&b).to_string(), "() (())");
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            "(()".parse::<PlaneForest>(),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(matches!(
            "())".parse::<PlaneForest>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "(x)".parse::<PlaneForest>(),
            Err(Error::Parse { pos: 1, .. })
        ));
    }

    #[test]
    fn depth_first_labeling() {
        let one: PlaneForest = "()".parse().unwrap();
        assert_eq!(one.to_ordered().to_string(), "0");
        let chain: PlaneForest = "(())".parse().unwrap();
        assert_eq!(chain.to_ordered().to_string(), "0 1");
        let two: PlaneForest = "(()(())) ((())())".parse().unwrap();
        assert_eq!(two.to_ordered().to_string(), "0 1 1 3 0 5 6 5");
        assert_eq!(
            "tquatretrois tquatredeux".parse::<PlaneForest>().unwrap(),
            two
        );
        for n in 0..=5 {
            for p in PlaneForest::enumerate(n).unwrap() {
                assert_eq!(PlaneForest::from_ordered(&p.to_ordered()), Some(p));
            }
        }
        assert_eq!(PlaneForest::from_ordered(&"2 0".parse().unwrap()), None);
    }

    #[test]
    fn trees_split() {
        let f: PlaneForest = "(()()) () ((()))".parse().unwrap();
        assert_eq!(f.trees().len(), 3);
        assert_eq!(f.len(), 7);
        assert_eq!(PlaneForest::empty().b_plus(), PlaneForest::leaf());
    }
}

//! Readers for the compact notations used to write down small examples:
//! labelled tree macros (`tddeux{3}{2} tdun{1}`), names of unlabelled trees
//! (`tdeux tun`) and digit words (`(23234)`).

use super::{OrderedForest, PlaneForest, RootedForest};
use crate::error::{Error, Result};

/// Tree names up to four vertices with their plane codes, children listed
/// left to right.
pub const TREE_NAMES: [(&str, &str); 9] = [
    ("tun", "()"),
    ("tdeux", "(())"),
    ("ttroisun", "(()())"),
    ("ttroisdeux", "((()))"),
    ("tquatreun", "(()()())"),
    ("tquatredeux", "((())())"),
    ("tquatretrois", "(()(()))"),
    ("tquatrequatre", "((()()))"),
    ("tquatrecinq", "(((())))"),
];

// (macro, parent of label k given as index of an earlier label; None = root)
const TREE_MACROS: [(&str, &[Option<usize>]); 9] = [
    ("tdun", &[None]),
    ("tddeux", &[None, Some(0)]),
    ("tdtroisun", &[None, Some(0), Some(0)]),
    ("tdtroisdeux", &[None, Some(0), Some(1)]),
    ("tdquatreun", &[None, Some(0), Some(0), Some(0)]),
    ("tdquatredeux", &[None, Some(0), Some(0), Some(2)]),
    ("tdquatretrois", &[None, Some(0), Some(1), Some(0)]),
    ("tdquatrequatre", &[None, Some(0), Some(1), Some(1)]),
    ("tdquatrecinq", &[None, Some(0), Some(1), Some(2)]),
];

/// The name of an unlabelled tree given by its canonical code, if it has
/// one. Mirror images share a code; the first listed name wins.
pub fn tree_name(code: &str) -> Option<&'static str> {
    TREE_NAMES
        .iter()
        .find(|(_, c)| {
            RootedForest::from_plane(&PlaneForest::from_code_unchecked(c.to_string())).code()
                == code
        })
        .map(|(n, _)| *n)
}

struct Lexer<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer { text, pos: 0 }
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.text.len()
    }

    fn ident(&mut self) -> Result<(usize, &'a str)> {
        self.skip_ws();
        if self.peek() == Some('\\') {
            self.pos += 1;
        }
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_alphabetic()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::parse(start, "expected a tree name"));
        }
        Ok((start, &self.text[start..self.pos]))
    }

    fn braced_number(&mut self) -> Result<Option<(usize, usize)>> {
        if self.peek() != Some('{') {
            return Ok(None);
        }
        self.pos += 1;
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        let value = self.text[start..self.pos]
            .parse::<usize>()
            .map_err(|_| Error::parse(start, "expected a vertex label"))?;
        if self.peek() != Some('}') {
            return Err(Error::parse(self.pos, "expected '}'"));
        }
        self.pos += 1;
        Ok(Some((start, value)))
    }
}

/// Reads a product of labelled tree macros. The labels must be exactly
/// `1..=n`.
pub fn ordered_forest(text: &str) -> Result<OrderedForest> {
    let mut lx = Lexer::new(text);
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut labels: Vec<(usize, usize)> = Vec::new();
    while !lx.at_end() {
        let (pos, name) = lx.ident()?;
        let shape = TREE_MACROS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, s)| *s)
            .ok_or_else(|| Error::parse(pos, format!("unknown tree macro {name:?}")))?;
        let mut local = Vec::with_capacity(shape.len());
        for _ in 0..shape.len() {
            let (lpos, label) = lx
                .braced_number()?
                .ok_or_else(|| Error::parse(lx.pos, "expected '{'"))?;
            local.push((lpos, label));
        }
        for (k, p) in shape.iter().enumerate() {
            if let Some(p) = p {
                edges.push((local[k].0, local[k].1, local[*p].1));
            }
        }
        labels.extend(local);
    }
    let n = labels.len();
    let mut seen = vec![false; n + 1];
    for &(pos, label) in &labels {
        if label == 0 || label > n || seen[label] {
            return Err(Error::parse(
                pos,
                format!("labels must be 1..={n}, each used once"),
            ));
        }
        seen[label] = true;
    }
    let mut parent = vec![0; n];
    for (_, child, p) in edges {
        parent[child - 1] = p;
    }
    OrderedForest::new(parent)
}

/// Reads a sequence of tree names as a plane forest; `1` stands for the
/// empty forest.
pub fn plane_forest(text: &str) -> Result<PlaneForest> {
    let mut lx = Lexer::new(text);
    let mut code = String::new();
    if text.trim() == "1" {
        return Ok(PlaneForest::empty());
    }
    while !lx.at_end() {
        let (pos, name) = lx.ident()?;
        let tree = TREE_NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| *c)
            .ok_or_else(|| Error::parse(pos, format!("unknown tree name {name:?}")))?;
        code.push_str(tree);
    }
    Ok(PlaneForest::from_code_unchecked(code))
}

/// Reads a product of unlabelled tree names; `1` stands for the empty
/// forest.
pub fn rooted_forest(text: &str) -> Result<RootedForest> {
    let mut lx = Lexer::new(text);
    let mut out = RootedForest::empty();
    if text.trim() == "1" {
        return Ok(out);
    }
    while !lx.at_end() {
        let (pos, name) = lx.ident()?;
        let code = TREE_NAMES
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, c)| *c)
            .ok_or_else(|| Error::parse(pos, format!("unknown tree name {name:?}")))?;
        let tree = RootedForest::from_plane(&PlaneForest::from_code_unchecked(code.to_string()));
        out = out.product(&tree);
    }
    Ok(out)
}

/// Reads a word of single digits such as `(23234)` or `2131`.
pub fn digit_word(text: &str) -> Result<Vec<usize>> {
    let t = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (inner, shift) = match t.strip_prefix('(') {
        Some(rest) => (
            rest.strip_suffix(')')
                .ok_or_else(|| Error::parse(offset + t.len(), "expected ')'"))?,
            offset + 1,
        ),
        None => (t, offset),
    };
    inner
        .char_indices()
        .map(|(i, c)| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| Error::parse(shift + i, format!("expected a digit, found {c:?}")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tree_macros() {
        assert_eq!(
            ordered_forest("tdquatredeux{2}{3}{4}{1}")
                .unwrap()
                .to_string(),
            "4 0 2 2"
        );
        assert_eq!(
            ordered_forest("tdquatretrois{1}{3}{4}{2}")
                .unwrap()
                .to_string(),
            "0 1 1 3"
        );
        assert_eq!(
            ordered_forest("tdquatrequatre{1}{2}{4}{3}")
                .unwrap()
                .to_string(),
            "0 1 2 2"
        );
        assert_eq!(
            ordered_forest("tdquatreun{2}{4}{3}{1}")
                .unwrap()
                .to_string(),
            "2 0 2 2"
        );
        assert_eq!(
            ordered_forest(r"\tddeux{3}{2} \tdquatretrois{4}{6}{5}{1}")
                .unwrap()
                .to_string(),
            "4 3 0 0 6 4"
        );
        assert_eq!(
            ordered_forest("tdtroisdeux{1}{2}{3}").unwrap().to_string(),
            "0 1 2"
        );
        assert_eq!(ordered_forest("").unwrap(), OrderedForest::empty());
    }

    #[test]
    fn tree_macro_errors() {
        assert!(matches!(
            ordered_forest("tdun{2}"),
            Err(Error::Parse { pos: 5, .. })
        ));
        assert!(matches!(
            ordered_forest("tdfoo{1}"),
            Err(Error::Parse { pos: 0, .. })
        ));
        assert!(ordered_forest("tddeux{1}").is_err());
    }

    #[test]
    fn tree_names() {
        assert_eq!(rooted_forest("tquatredeux").unwrap().code(), "((())())");
        assert_eq!(
            rooted_forest("tun tdeux").unwrap(),
            rooted_forest("tdeux tun").unwrap()
        );
        assert_eq!(rooted_forest("1").unwrap(), RootedForest::empty());
        assert_eq!(
            rooted_forest("tquatredeux").unwrap(),
            rooted_forest("tquatretrois").unwrap()
        );
        assert_eq!(tree_name("((())())"), Some("tquatredeux"));
        for (name, code) in TREE_NAMES {
            let plane: PlaneForest = code.parse().unwrap();
            assert_eq!(
                rooted_forest(name).unwrap(),
                RootedForest::from_plane(&plane)
            );
        }
    }

    #[test]
    fn digit_words() {
        assert_eq!(digit_word("(23234)").unwrap(), vec![2, 3, 2, 3, 4]);
        assert_eq!(digit_word("2131").unwrap(), vec![2, 1, 3, 1]);
        assert_eq!(digit_word("()").unwrap(), Vec::<usize>::new());
        assert!(matches!(
            digit_word("(2x)"),
            Err(Error::Parse { pos: 2, .. })
        ));
    }
}

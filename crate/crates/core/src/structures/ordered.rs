use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use super::{join_numbers, parse_tokens, standardizer, validate_subset, Bounds};
use crate::error::{Error, Result};

/// A rooted forest on the vertex set `1..=n` with its natural total order.
///
/// Stored as a parent vector: `parent[v - 1]` is the parent of `v`, or 0
/// when `v` is a root. Edges point from a vertex down to its parent.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct OrderedForest {
    parent: Vec<usize>,
}

impl OrderedForest {
    pub fn new(parent: Vec<usize>) -> Result<Self> {
        let n = parent.len();
        for (idx, &p) in parent.iter().enumerate() {
            let v = idx + 1;
            if p > n {
                return Err(Error::invalid(format!(
                    "parent {p} of vertex {v} is out of range"
                )));
            }
            if p == v {
                return Err(Error::invalid(format!("vertex {v} is its own parent")));
            }
        }
        let forest = OrderedForest { parent };
        for v in 1..=n {
            let mut u = v;
            let mut steps = 0;
            while u != 0 {
                u = forest.parent[u - 1];
                steps += 1;
                if steps > n {
                    return Err(Error::invalid(format!("vertex {v} lies on a cycle")));
                }
            }
        }
        Ok(forest)
    }

    pub(crate) fn from_parents_unchecked(parent: Vec<usize>) -> Self {
        debug_assert!(OrderedForest::new(parent.clone()).is_ok());
        OrderedForest { parent }
    }

    pub fn empty() -> Self {
        OrderedForest { parent: Vec::new() }
    }

    /// The forest with `n` isolated vertices.
    pub fn discrete(n: usize) -> Self {
        OrderedForest { parent: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parents(&self) -> &[usize] {
        &self.parent
    }

    /// Parent of `v`, `None` for a root.
    pub fn parent(&self, v: usize) -> Option<usize> {
        match self.parent[v - 1] {
            0 => None,
            p => Some(p),
        }
    }

    pub fn roots(&self) -> Vec<usize> {
        (1..=self.len())
            .filter(|&v| self.parent[v - 1] == 0)
            .collect()
    }

    pub fn children(&self, v: usize) -> Vec<usize> {
        (1..=self.len())
            .filter(|&w| self.parent[w - 1] == v)
            .collect()
    }

    pub fn is_tree(&self) -> bool {
        self.roots().len() == 1
    }

    /// Edges as `(child, parent)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.len())
            .filter_map(|v| self.parent(v).map(|p| (v, p)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.parent.iter().filter(|&&p| p != 0).count()
    }

    /// `true` when there is an oriented path from `w` down to `v`
    /// (`w ↠ v`, i.e. `v` is a strict ancestor of `w`).
    pub fn is_above(&self, w: usize, v: usize) -> bool {
        let mut u = self.parent[w - 1];
        while u != 0 {
            if u == v {
                return true;
            }
            u = self.parent[u - 1];
        }
        false
    }

    /// Shifted union: the vertices of `other` come after those of `self`.
    pub fn product(&self, other: &OrderedForest) -> OrderedForest {
        let n = self.len();
        let mut parent = self.parent.clone();
        parent.extend(other.parent.iter().map(|&p| if p == 0 { 0 } else { p + n }));
        OrderedForest { parent }
    }

    /// Adds a new smallest vertex below every root.
    pub fn b_plus(&self) -> OrderedForest {
        let mut parent = Vec::with_capacity(self.len() + 1);
        parent.push(0);
        parent.extend(self.parent.iter().map(|&p| if p == 0 { 1 } else { p + 1 }));
        OrderedForest { parent }
    }

    /// Grafts `other`, shifted past `self`, onto the greatest vertex of
    /// `self`.
    pub fn nwarrow(&self, other: &OrderedForest) -> Result<OrderedForest> {
        let n = self.len();
        if n == 0 {
            return Err(Error::invalid("nwarrow needs a nonempty left factor"));
        }
        let mut parent = self.parent.clone();
        parent.extend(other.parent.iter().map(|&p| if p == 0 { n } else { p + n }));
        Ok(OrderedForest { parent })
    }

    /// Renames vertex `v` to `sigma[v - 1]`; `sigma` must be a permutation
    /// of `1..=n`.
    pub fn relabel(&self, sigma: &[usize]) -> Result<OrderedForest> {
        let n = self.len();
        let check = validate_subset(sigma, n)?;
        if check.len() != n {
            return Err(Error::invalid("relabeling is not a permutation"));
        }
        let mut parent = vec![0; n];
        for v in 1..=n {
            parent[sigma[v - 1] - 1] = match self.parent[v - 1] {
                0 => 0,
                p => sigma[p - 1],
            };
        }
        Ok(OrderedForest { parent })
    }

    /// The induced subforest on `subset`, relabeled increasingly onto
    /// `1..=|subset|`.
    pub fn restrict(&self, subset: &[usize]) -> Result<OrderedForest> {
        let s = validate_subset(subset, self.len())?;
        Ok(self.restrict_sorted(&s))
    }

    pub(crate) fn restrict_sorted(&self, s: &[usize]) -> OrderedForest {
        let tau = standardizer(s, self.len());
        let parent = s
            .iter()
            .map(|&v| match self.parent[v - 1] {
                0 => 0,
                p => tau[p],
            })
            .collect();
        OrderedForest { parent }
    }

    /// Every totally disconnected vertex subset, by increasing bitmask.
    pub fn admissible_cuts(&self) -> Vec<AdmissibleCut> {
        let n = self.len();
        assert!(n < 64, "forest too large for cut enumeration");
        // above[v] = bitmask of vertices w with w ↠ v
        let mut below = vec![0u64; n];
        for v in 1..=n {
            let mut u = self.parent[v - 1];
            while u != 0 {
                below[v - 1] |= 1 << (u - 1);
                u = self.parent[u - 1];
            }
        }
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let ok = (0..n).all(|i| mask & (1 << i) == 0 || below[i] & mask == 0);
            if ok {
                let vertices = (0..n)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| i + 1)
                    .collect();
                out.push(AdmissibleCut { vertices });
            }
        }
        out
    }

    /// Splits along an admissible cut into `(Roo, Lea)`, both standardized.
    pub fn lea_roo(&self, cut: &AdmissibleCut) -> Result<(OrderedForest, OrderedForest)> {
        cut.validate(self)?;
        let (roo, lea) = self.cut_sets(cut);
        Ok((self.restrict_sorted(&roo), self.restrict_sorted(&lea)))
    }

    /// Vertex sets `(Roo, Lea)` of an admissible cut.
    pub(crate) fn cut_sets(&self, cut: &AdmissibleCut) -> (Vec<usize>, Vec<usize>) {
        let mut roo = Vec::new();
        let mut lea = Vec::new();
        for w in 1..=self.len() {
            let in_lea = cut.vertices.iter().any(|&v| v == w || self.is_above(w, v));
            if in_lea {
                lea.push(w);
            } else {
                roo.push(w);
            }
        }
        (roo, lea)
    }

    /// All ordered forests on `n` vertices, by lexicographic parent vector.
    pub fn enumerate(n: usize) -> Result<Vec<OrderedForest>> {
        Self::enumerate_bounded(n, &Bounds::default())
    }

    pub fn enumerate_bounded(n: usize, bounds: &Bounds) -> Result<Vec<OrderedForest>> {
        bounds.check("ordered forests", n)?;
        let mut out = Vec::new();
        let mut parent = vec![0; n];
        enumerate_rec(&mut parent, 0, &mut out);
        Ok(out)
    }
}

fn enumerate_rec(parent: &mut Vec<usize>, idx: usize, out: &mut Vec<OrderedForest>) {
    let n = parent.len();
    if idx == n {
        out.push(OrderedForest {
            parent: parent.clone(),
        });
        return;
    }
    let v = idx + 1;
    for p in 0..=n {
        if p == v {
            continue;
        }
        parent[idx] = p;
        // follow assigned parents from v; returning to v closes a cycle
        let mut u = p;
        let mut cyclic = false;
        while u != 0 && u <= v {
            if u == v {
                cyclic = true;
                break;
            }
            u = parent[u - 1];
        }
        if !cyclic {
            enumerate_rec(parent, idx + 1, out);
        }
    }
    parent[idx] = 0;
}

impl Ord for OrderedForest {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.parent.cmp(&other.parent))
    }
}

impl PartialOrd for OrderedForest {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for OrderedForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join_numbers(&self.parent))
    }
}

/// Accepts a parent vector such as `0 1 1 3` or labelled tree macros such
/// as `tdquatretrois{1}{3}{4}{2}`.
impl FromStr for OrderedForest {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.contains('{') {
            return super::notation::ordered_forest(s);
        }
        let tokens = parse_tokens(s)?;
        let n = tokens.len();
        if let Some(&(pos, p)) = tokens.iter().find(|&&(_, p)| p > n) {
            return Err(Error::parse(
                pos,
                format!("parent {p} exceeds vertex count {n}"),
            ));
        }
        let parent = tokens.iter().map(|&(_, p)| p).collect();
        OrderedForest::new(parent).map_err(|e| match e {
            Error::Invalid(msg) => Error::parse(0, msg),
            other => other,
        })
    }
}

/// A set of pairwise incomparable vertices of a forest.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct AdmissibleCut {
    vertices: Vec<usize>,
}

impl AdmissibleCut {
    pub fn new(forest: &OrderedForest, vertices: &[usize]) -> Result<Self> {
        let vertices = validate_subset(vertices, forest.len())?;
        let cut = AdmissibleCut { vertices };
        cut.validate(forest)?;
        Ok(cut)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    fn validate(&self, forest: &OrderedForest) -> Result<()> {
        validate_subset(&self.vertices, forest.len())?;
        for &v in &self.vertices {
            for &w in &self.vertices {
                if v != w && forest.is_above(w, v) {
                    return Err(Error::invalid(format!(
                        "cut is not admissible: {w} lies above {v}"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> OrderedForest {
        s.parse().unwrap()
    }

    #[test]
    fn parses_tree_macros() {
        let f: OrderedForest = "tdquatretrois{1}{3}{4}{2}".parse().unwrap();
        assert_eq!(f.to_string(), "0 1 1 3");
        assert!("tdun{2}".parse::<OrderedForest>().is_err());
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (0..=5)
            .map(|n| OrderedForest::enumerate(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 16, 125, 1296]);
        let two = OrderedForest::enumerate(2).unwrap();
        assert_eq!(two, vec![f("0 0"), f("0 1"), f("2 0")]);
        assert_eq!(
            OrderedForest::enumerate(0).unwrap(),
            vec![OrderedForest::empty()]
        );
    }

    #[test]
    fn enumeration_respects_bound() {
        let err = OrderedForest::enumerate_bounded(5, &Bounds::new(4)).unwrap_err();
        assert!(matches!(
            err,
            Error::Bound {
                requested: 5,
                bound: 4,
                ..
            }
        ));
    }

    #[test]
    fn enumeration_is_sorted_and_valid() {
        let all = OrderedForest::enumerate(4).unwrap();
        assert!(all.windows(2).all(|w| w[0].parents() < w[1].parents()));
        assert!(all
            .iter()
            .all(|x| OrderedForest::new(x.parents().to_vec()).is_ok()));
    }

    #[test]
    fn parse_render() {
        let x = f("4 3 0 0 6 4");
        assert_eq!(x.roots(), vec![3, 4]);
        assert_eq!(x.edges(), vec![(1, 4), (2, 3), (5, 6), (6, 4)]);
        assert_eq!(x.to_string(), "4 3 0 0 6 4");
        assert_eq!(f("0"), OrderedForest::discrete(1));
        assert_eq!(f(""), OrderedForest::empty());
        assert_eq!(OrderedForest::empty().to_string(), "");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "0 x".parse::<OrderedForest>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!(matches!(
            "0 7".parse::<OrderedForest>(),
            Err(Error::Parse { pos: 2, .. })
        ));
        assert!("2 1".parse::<OrderedForest>().is_err());
        assert!("1".parse::<OrderedForest>().is_err());
    }

    #[test]
    fn products() {
        assert_eq!(f("0").product(&f("0 1")), f("0 0 2"));
        assert_eq!(f("0 1").product(&f("0")), f("0 1 0"));
        assert_eq!(f("2 0").product(&OrderedForest::empty()), f("2 0"));
    }

    #[test]
    fn nwarrow_grafts_on_greatest_vertex() {
        assert_eq!(f("0 1").nwarrow(&f("0 0")).unwrap(), f("0 1 2 2"));
        assert_eq!(f("2 0").nwarrow(&f("0 0")).unwrap(), f("2 0 2 2"));
        assert_eq!(f("0").nwarrow(&f("0")).unwrap(), f("0 1"));
        assert!(OrderedForest::empty().nwarrow(&f("0")).is_err());
    }

    #[test]
    fn b_plus_adds_smallest_root() {
        assert_eq!(OrderedForest::empty().b_plus(), f("0"));
        assert_eq!(f("0 0").b_plus(), f("0 1 1"));
    }

    #[test]
    fn cuts() {
        assert_eq!(f("0").admissible_cuts().len(), 2);
        // 2-chain: empty, {root}, {leaf}
        let chain = f("0 1");
        let cuts: Vec<Vec<usize>> = chain
            .admissible_cuts()
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        assert_eq!(cuts, vec![vec![], vec![1], vec![2]]);
        assert!(AdmissibleCut::new(&chain, &[1, 2]).is_err());
        // root with a leaf and a 2-chain
        assert_eq!(f("4 0 2 2").admissible_cuts().len(), 7);
    }

    #[test]
    fn lea_roo_examples() {
        let x = f("0");
        let cut = AdmissibleCut::new(&x, &[1]).unwrap();
        assert_eq!(x.lea_roo(&cut).unwrap(), (OrderedForest::empty(), f("0")));
        // chain 3 -> 2 -> 1
        let chain = f("0 1 2");
        let cut = AdmissibleCut::new(&chain, &[2]).unwrap();
        assert_eq!(chain.lea_roo(&cut).unwrap(), (f("0"), f("0 1")));
        let tree = f("4 0 2 2");
        let cut = AdmissibleCut::new(&tree, &[1]).unwrap();
        assert_eq!(tree.lea_roo(&cut).unwrap(), (f("0 1 1"), f("0")));
    }

    #[test]
    fn restriction() {
        let x = f("4 3 0 0 6 4");
        assert_eq!(x.restrict(&[1, 2, 3, 4, 5, 6]).unwrap(), x);
        assert_eq!(x.restrict(&[]).unwrap(), OrderedForest::empty());
        assert_eq!(f("2 0").restrict(&[2]).unwrap(), f("0"));
        assert_eq!(x.restrict(&[1, 4, 6]).unwrap(), f("2 0 2"));
        assert!(x.restrict(&[7]).is_err());
    }

    #[test]
    fn relabeling() {
        // swap the two vertices of a 2-chain
        assert_eq!(f("0 1").relabel(&[2, 1]).unwrap(), f("2 0"));
        assert!(f("0 1").relabel(&[1, 1]).is_err());
    }
}

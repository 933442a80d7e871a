//! Word quasi-symmetric functions in the basis `M_u` indexed by packed
//! words.

use crate::algebra::{AlgebraTag, FreeElement, GradedBialgebra, TensorElement};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::structures::{pack, Bounds, PackedWord};

pub struct Wqsym;

/// Pairs of increasing maps `[a] → [c]`, `[b] → [c]` whose images cover
/// `[c]`; value `c` is taken from the left, the right, or both.
fn quasi_shuffles(a: usize, b: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    fn rec(
        a: usize,
        b: usize,
        left: &mut Vec<usize>,
        right: &mut Vec<usize>,
        next: usize,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        let (i, j) = (left.len(), right.len());
        if i == a && j == b {
            out.push((left.clone(), right.clone()));
            return;
        }
        if i < a {
            left.push(next);
            rec(a, b, left, right, next + 1, out);
            left.pop();
        }
        if j < b {
            right.push(next);
            rec(a, b, left, right, next + 1, out);
            right.pop();
        }
        if i < a && j < b {
            left.push(next);
            right.push(next);
            rec(a, b, left, right, next + 1, out);
            left.pop();
            right.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut Vec::new(), 1, &mut out);
    out
}

/// `M_u M_v = Σ M_w` over packed `w = u′v′` with `pack(u′) = u` and
/// `pack(v′) = v`.
pub fn wqsym_product<C: Scalar>(u: &PackedWord, v: &PackedWord) -> FreeElement<PackedWord, C> {
    let mut out = FreeElement::zero();
    for (alpha, beta) in quasi_shuffles(u.max_letter(), v.max_letter()) {
        let mut w: Vec<usize> = u.letters().iter().map(|&x| alpha[x - 1]).collect();
        w.extend(v.letters().iter().map(|&x| beta[x - 1]));
        out.add_term(PackedWord::from_letters_unchecked(w), C::one());
    }
    out
}

/// `Δ(M_u) = Σ_k M_{u|≤k} ⊗ M_{pack(u|>k)}`.
pub fn wqsym_coproduct<C: Scalar>(u: &PackedWord) -> TensorElement<PackedWord, C> {
    let mut out = FreeElement::zero();
    for k in 0..=u.max_letter() {
        let low: Vec<usize> = u.letters().iter().copied().filter(|&x| x <= k).collect();
        let high: Vec<usize> = u.letters().iter().copied().filter(|&x| x > k).collect();
        out.add_term(
            (
                PackedWord::from_letters_unchecked(low),
                PackedWord::from_letters_unchecked(pack(&high)),
            ),
            C::one(),
        );
    }
    out
}

/// `b(M_u) = M_{1·(u+1)}`.
pub fn b_word(u: &PackedWord) -> PackedWord {
    let mut w = Vec::with_capacity(u.len() + 1);
    w.push(1);
    w.extend(u.letters().iter().map(|&x| x + 1));
    PackedWord::from_letters_unchecked(w)
}

pub fn b_endomorphism<C: Scalar>(x: &FreeElement<PackedWord, C>) -> FreeElement<PackedWord, C> {
    x.map_keys(b_word)
}

impl GradedBialgebra for Wqsym {
    type Key = PackedWord;
    const TAG: AlgebraTag = AlgebraTag::Wqsym;

    fn unit() -> PackedWord {
        PackedWord::empty()
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<PackedWord>> {
        PackedWord::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &PackedWord, b: &PackedWord) -> FreeElement<PackedWord, C> {
        wqsym_product(a, b)
    }

    fn coproduct<C: Scalar>(a: &PackedWord) -> TensorElement<PackedWord, C> {
        wqsym_coproduct(a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Element, Int};

    fn w(s: &str) -> PackedWord {
        s.parse().unwrap()
    }

    // oracle: filter every packed word of the right length
    fn product_oracle(u: &PackedWord, v: &PackedWord) -> Element<PackedWord> {
        let n = u.len() + v.len();
        FreeElement::from_keys(PackedWord::enumerate(n).unwrap().into_iter().filter(|x| {
            let (p, s) = x.letters().split_at(u.len());
            pack(p) == u.letters() && pack(s) == v.letters()
        }))
    }

    #[test]
    fn products() {
        let p: Element<PackedWord> = wqsym_product(&w("1"), &w("1"));
        assert_eq!(p, FreeElement::from_keys([w("1 1"), w("1 2"), w("2 1")]));
        assert_eq!(
            wqsym_product::<Int>(&w("1 2"), &PackedWord::empty()),
            FreeElement::from_key(w("1 2"))
        );
        for a in 0..=2 {
            for b in 0..=2 {
                for u in PackedWord::enumerate(a).unwrap() {
                    for v in PackedWord::enumerate(b).unwrap() {
                        assert_eq!(wqsym_product::<Int>(&u, &v), product_oracle(&u, &v));
                    }
                }
            }
        }
    }

    #[test]
    fn coproducts() {
        let d = wqsym_coproduct::<Int>(&w("1 2"));
        let expected = FreeElement::from_keys([
            (w("1 2"), PackedWord::empty()),
            (w("1"), w("1")),
            (PackedWord::empty(), w("1 2")),
        ]);
        assert_eq!(d, expected);
        assert_eq!(wqsym_coproduct::<Int>(&w("1")).len(), 2);
    }

    #[test]
    fn b_map() {
        assert_eq!(b_word(&w("2 1 3 1")), w("1 3 2 4 2"));
        assert_eq!(b_word(&PackedWord::empty()), w("1"));
        assert_eq!(b_word(&w("1 1")), w("1 2 2"));
    }
}

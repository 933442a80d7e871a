//! The algebra of endofunctions, its permutation subalgebra, and the
//! predicates cutting out the other subalgebras.

use crate::algebra::{AlgebraTag, FreeElement, GradedBialgebra, TensorElement};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::structures::{Bounds, Endofunction, Permutation};

pub struct Efsym;

pub struct Sgsym;

/// `Δ(S^f) = Σ_{I ideal} S^{std(f^{[n]∖I})} ⊗ S^{std(f^I)}`.
pub fn efsym_coproduct<C: Scalar>(f: &Endofunction) -> TensorElement<Endofunction, C> {
    let mut out = FreeElement::zero();
    for ideal in f.ideals() {
        let rest = f.complement(&ideal);
        out.add_term(
            (f.std_restrict_sorted(&rest), f.std_restrict_sorted(&ideal)),
            C::one(),
        );
    }
    out
}

impl GradedBialgebra for Efsym {
    type Key = Endofunction;
    const TAG: AlgebraTag = AlgebraTag::Efsym;

    fn unit() -> Endofunction {
        Endofunction::empty()
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<Endofunction>> {
        Endofunction::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &Endofunction, b: &Endofunction) -> FreeElement<Endofunction, C> {
        FreeElement::from_key(a.shifted_concat(b))
    }

    fn coproduct<C: Scalar>(a: &Endofunction) -> TensorElement<Endofunction, C> {
        efsym_coproduct(a)
    }
}

impl GradedBialgebra for Sgsym {
    type Key = Permutation;
    const TAG: AlgebraTag = AlgebraTag::Sgsym;

    fn unit() -> Permutation {
        Permutation::identity(0)
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<Permutation>> {
        Permutation::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &Permutation, b: &Permutation) -> FreeElement<Permutation, C> {
        FreeElement::from_key(a.shifted_concat(b))
    }

    // ideals of a bijection are unions of cycles, so both sides stay bijective
    fn coproduct<C: Scalar>(a: &Permutation) -> TensorElement<Permutation, C> {
        let as_perm = |f: &Endofunction| {
            Permutation::try_from(f.clone()).expect("restriction to a union of cycles")
        };
        efsym_coproduct::<C>(a.as_endofunction()).map_keys(|(l, r)| (as_perm(l), as_perm(r)))
    }
}

pub fn is_permutation(f: &Endofunction) -> bool {
    Permutation::try_from(f.clone()).is_ok()
}

/// Every cycle of the functional graph is a fixed point.
pub fn is_acyclic(f: &Endofunction) -> bool {
    let n = f.len();
    (1..=n).all(|start| {
        // after n steps every orbit sits on its cycle
        let mut x = start;
        for _ in 0..n {
            x = f.apply(x);
        }
        f.apply(x) == x
    })
}

pub fn is_nondecreasing(f: &Endofunction) -> bool {
    f.image().windows(2).all(|w| w[0] <= w[1])
}

/// Nondecreasing with `f(i) ≤ i`.
pub fn is_nondecreasing_parking(f: &Endofunction) -> bool {
    is_nondecreasing(f) && (1..=f.len()).all(|i| f.apply(i) <= i)
}

/// `f^p = f^q`, by composition.
pub fn is_burnside(f: &Endofunction, p: usize, q: usize) -> bool {
    f.power(p) == f.power(q)
}

/// `f^p = f^q` read off the functional graph: every cycle length divides
/// `|p - q|` and every vertex is at most `min(p, q)` steps from its cycle.
pub fn burnside_graphical(f: &Endofunction, p: usize, q: usize) -> bool {
    if p == q {
        return true;
    }
    let d = p.abs_diff(q);
    let n = f.len();
    let mut on_cycle = vec![false; n + 1];
    for start in 1..=n {
        let mut x = start;
        for _ in 0..n {
            x = f.apply(x);
        }
        on_cycle[x] = true;
    }
    for x in 1..=n {
        if on_cycle[x] {
            let mut len = 1;
            let mut y = f.apply(x);
            while y != x {
                y = f.apply(y);
                len += 1;
            }
            if d % len != 0 {
                return false;
            }
        } else {
            let mut height = 0;
            let mut y = x;
            while !on_cycle[y] {
                y = f.apply(y);
                height += 1;
            }
            if height > p.min(q) {
                return false;
            }
        }
    }
    true
}

pub fn is_idempotent(f: &Endofunction) -> bool {
    (1..=f.len()).all(|i| f.apply(f.apply(i)) == f.apply(i))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Int;

    fn e(s: &str) -> Endofunction {
        s.parse().unwrap()
    }

    #[test]
    fn coproduct_of_23234() {
        let d = efsym_coproduct::<Int>(&e("2 3 2 3 4"));
        let expected = FreeElement::from_keys(
            [
                ("2 3 2 3 4", ""),
                ("2 1 2 3", "1"),
                ("2 3 2 3", "1"),
                ("2 1 2", "1 2"),
                ("2 3 2", "1 1"),
                ("2 1", "1 2 2"),
                ("", "2 3 2 3 4"),
            ]
            .map(|(a, b)| (e(a), e(b))),
        );
        assert_eq!(d, expected);
    }

    #[test]
    fn permutation_coproduct_splits_cycles() {
        let s: Permutation = "2 4 5 1 3".parse().unwrap();
        let d = Sgsym::coproduct::<Int>(&s);
        assert_eq!(d.len(), 4);
        let p = |x: &str| x.parse::<Permutation>().unwrap();
        assert_eq!(d.coeff(&(p("2 3 1"), p("2 1"))), Int::from(1));
        assert_eq!(d.coeff(&(p("2 1"), p("2 3 1"))), Int::from(1));
    }

    #[test]
    fn predicates() {
        let id = e("1 2");
        assert!(is_permutation(&id) && is_acyclic(&id) && is_idempotent(&id));
        assert!(!is_acyclic(&e("2 3 2 3 4")));
        let f = e("1 1");
        assert!(is_idempotent(&f) && is_nondecreasing_parking(&f));
        assert!(!is_nondecreasing_parking(&e("2 2")));
        assert!(is_burnside(&e("2 1"), 2, 4));
        assert!(!is_burnside(&e("2 3 1"), 2, 4));
    }

    #[test]
    fn burnside_characterization() {
        for n in 0..=4 {
            for f in Endofunction::enumerate(n).unwrap() {
                for p in 0..=4 {
                    for q in 0..=4 {
                        assert_eq!(
                            is_burnside(&f, p, q),
                            burnside_graphical(&f, p, q),
                            "{f} {p} {q}"
                        );
                    }
                }
            }
        }
    }
}

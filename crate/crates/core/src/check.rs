//! Brute-force checks of the bialgebra axioms, generic over
//! [`GradedBialgebra`].

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::algebra::{
    comultiply, multiply, tensor_multiply, Antipode, FreeElement, GradedBialgebra, TensorElement,
};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::structures::Bounds;
use crate::Int;

/// Failures kept verbatim in a report; the count is always exact.
const KEPT_FAILURES: usize = 10;

/// Outcome of a check: how many cases ran and which ones failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub checked: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    /// Records one case.
    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checked += other.checked;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < KEPT_FAILURES {
                self.failures.push(format!("{}: {f}", other.name));
            }
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {} ({} checked, {} failed)",
            self.name, self.checked, self.failed
        )?;
        for line in &self.failures {
            write!(f, "\n    {line}")?;
        }
        Ok(())
    }
}

type Triple<K, C> = FreeElement<(K, K, K), C>;

fn left_coassoc<A: GradedBialgebra, C: Scalar>(x: &TensorElement<A::Key, C>) -> Triple<A::Key, C> {
    let mut out = FreeElement::zero();
    for ((a, b), c) in x.iter() {
        for ((a1, a2), ca) in A::coproduct::<C>(a).iter() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c.clone() * ca.clone());
        }
    }
    out
}

fn right_coassoc<A: GradedBialgebra, C: Scalar>(x: &TensorElement<A::Key, C>) -> Triple<A::Key, C> {
    let mut out = FreeElement::zero();
    for ((a, b), c) in x.iter() {
        for ((b1, b2), cb) in A::coproduct::<C>(b).iter() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c.clone() * cb.clone());
        }
    }
    out
}

/// `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on every key of degree `≤ max_degree`.
pub fn check_coassociativity<A: GradedBialgebra>(
    max_degree: usize,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} coassociativity", A::TAG));
    for n in 0..=max_degree {
        for key in A::basis(n, bounds)? {
            let d = A::coproduct::<Int>(&key);
            let ok = left_coassoc::<A, Int>(&d) == right_coassoc::<A, Int>(&d);
            report.record(ok, || format!("key [{key}]"));
        }
    }
    Ok(report)
}

fn compat_holds<A: GradedBialgebra>(a: &A::Key, b: &A::Key) -> bool {
    let prod = A::product::<Int>(a, b);
    let lhs = comultiply::<A, Int>(&prod);
    let rhs = tensor_multiply::<A, Int>(&A::coproduct::<Int>(a), &A::coproduct::<Int>(b));
    lhs == rhs
}

/// `Δ(ab) = Δ(a)Δ(b)` on every pair of keys of total degree
/// `≤ max_degree`.
pub fn check_bialgebra_compat<A: GradedBialgebra>(
    max_degree: usize,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} compatibility", A::TAG));
    let bases: Vec<Vec<A::Key>> = (0..=max_degree)
        .map(|n| A::basis(n, bounds))
        .collect::<Result<_>>()?;
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for a in &bases[p] {
                for b in &bases[q] {
                    report.record(compat_holds::<A>(a, b), || format!("pair [{a}] [{b}]"));
                }
            }
        }
    }
    Ok(report)
}

/// Compatibility on `samples` random pairs of total degree exactly
/// `degree`, both factors of positive degree, from a fixed seed.
pub fn check_bialgebra_compat_random<A: GradedBialgebra>(
    degree: usize,
    samples: usize,
    seed: u64,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!(
        "{} compatibility, {samples} random pairs of degree {degree}",
        A::TAG
    ));
    if degree < 2 {
        return Ok(report);
    }
    let bases: Vec<Vec<A::Key>> = (0..=degree)
        .map(|n| A::basis(n, bounds))
        .collect::<Result<_>>()?;
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..samples {
        let p = rng.gen_range(1..degree);
        let a = &bases[p][rng.gen_range(0..bases[p].len())];
        let b = &bases[degree - p][rng.gen_range(0..bases[degree - p].len())];
        report.record(compat_holds::<A>(a, b), || format!("pair [{a}] [{b}]"));
    }
    Ok(report)
}

/// `(S * id)(x) = (id * S)(x) = ε(x)1` on every key of degree
/// `≤ max_degree`.
pub fn check_antipode<A: GradedBialgebra>(
    max_degree: usize,
    bounds: &Bounds,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} antipode", A::TAG));
    let mut s = Antipode::<A, Int>::new();
    let unit = A::unit();
    for n in 0..=max_degree {
        for key in A::basis(n, bounds)? {
            let mut left = FreeElement::zero();
            let mut right = FreeElement::zero();
            for ((a, b), c) in A::coproduct::<Int>(&key).iter() {
                let sa = s.of_key(a)?;
                let sb = s.of_key(b)?;
                left.add_scaled(
                    &multiply::<A, Int>(&sa, &FreeElement::from_key(b.clone())),
                    c,
                );
                right.add_scaled(
                    &multiply::<A, Int>(&FreeElement::from_key(a.clone()), &sb),
                    c,
                );
            }
            let expected = if key == unit {
                FreeElement::from_key(unit.clone())
            } else {
                FreeElement::zero()
            };
            report.record(left == expected && right == expected, || {
                format!("key [{key}]")
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forests::{Ck, Ho};
    use crate::structures::RootedForest;

    #[test]
    fn small_checks_pass() {
        let b = Bounds::default();
        assert!(check_coassociativity::<Ho>(3, &b).unwrap().passed());
        assert!(check_bialgebra_compat::<Ck>(3, &b).unwrap().passed());
        assert!(check_antipode::<Ck>(3, &b).unwrap().passed());
    }

    #[test]
    fn antipode_values() {
        let t: RootedForest = "tun".parse().unwrap();
        let s = crate::algebra::antipode::<Ck, Int>(&FreeElement::from_key(t.clone())).unwrap();
        assert_eq!(s, FreeElement::from_term(t.clone(), Int::from(-1)));
        let chain: RootedForest = "tdeux".parse().unwrap();
        let s = crate::algebra::antipode::<Ck, Int>(&FreeElement::from_key(chain.clone())).unwrap();
        let expected =
            FreeElement::from_terms([(chain, Int::from(-1)), (t.product(&t), Int::from(1))]);
        assert_eq!(s, expected);
        let one =
            crate::algebra::antipode::<Ck, Int>(&FreeElement::from_key(RootedForest::empty()))
                .unwrap();
        assert_eq!(one, FreeElement::from_key(RootedForest::empty()));
    }

    #[test]
    fn report_counts() {
        let mut r = CheckReport::new("x");
        for i in 0..20 {
            r.record(i % 2 == 0, || format!("case {i}"));
        }
        assert_eq!((r.checked, r.failed, r.failures.len()), (20, 10, 10));
        assert!(!r.passed());
        assert!(r.to_string().starts_with("FAIL x (20 checked, 10 failed)"));
    }
}

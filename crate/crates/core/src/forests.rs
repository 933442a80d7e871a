//! The forest algebras: Connes-Kreimer on rooted forests, its plane version,
//! and the algebra of ordered forests.

use crate::algebra::{AlgebraTag, FreeElement, GradedBialgebra, TensorElement};
use crate::error::Result;
use crate::scalar::Scalar;
use crate::structures::{Bounds, OrderedForest, PlaneForest, RootedForest};

/// Commutative algebra of rooted forests with the admissible-cut coproduct.
pub struct Ck;

/// Plane forests: concatenation product, plane admissible cuts.
pub struct Nck;

/// Ordered forests: shifted union and standardized cuts.
pub struct Ho;

/// `Δ(F) = Σ Roo ⊗ Lea` over admissible cuts, both sides standardized.
pub fn ho_coproduct<C: Scalar>(f: &OrderedForest) -> TensorElement<OrderedForest, C> {
    let mut out = FreeElement::zero();
    for cut in f.admissible_cuts() {
        let (roo, lea) = f.cut_sets(&cut);
        out.add_term((f.restrict_sorted(&roo), f.restrict_sorted(&lea)), C::one());
    }
    out
}

impl GradedBialgebra for Ho {
    type Key = OrderedForest;
    const TAG: AlgebraTag = AlgebraTag::Ho;

    fn unit() -> OrderedForest {
        OrderedForest::empty()
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<OrderedForest>> {
        OrderedForest::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &OrderedForest, b: &OrderedForest) -> FreeElement<OrderedForest, C> {
        FreeElement::from_key(a.product(b))
    }

    fn coproduct<C: Scalar>(a: &OrderedForest) -> TensorElement<OrderedForest, C> {
        ho_coproduct(a)
    }
}

impl GradedBialgebra for Ck {
    type Key = RootedForest;
    const TAG: AlgebraTag = AlgebraTag::Ck;

    fn unit() -> RootedForest {
        RootedForest::empty()
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<RootedForest>> {
        RootedForest::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &RootedForest, b: &RootedForest) -> FreeElement<RootedForest, C> {
        FreeElement::from_key(a.product(b))
    }

    fn coproduct<C: Scalar>(a: &RootedForest) -> TensorElement<RootedForest, C> {
        ho_coproduct::<C>(&a.to_ordered())
            .map_keys(|(l, r)| (RootedForest::from_ordered(l), RootedForest::from_ordered(r)))
    }
}

impl GradedBialgebra for Nck {
    type Key = PlaneForest;
    const TAG: AlgebraTag = AlgebraTag::Nck;

    fn unit() -> PlaneForest {
        PlaneForest::empty()
    }

    fn basis(n: usize, bounds: &Bounds) -> Result<Vec<PlaneForest>> {
        PlaneForest::enumerate_bounded(n, bounds)
    }

    fn product<C: Scalar>(a: &PlaneForest, b: &PlaneForest) -> FreeElement<PlaneForest, C> {
        FreeElement::from_key(a.product(b))
    }

    // Cuts of a depth-first labeled forest restrict to depth-first labeled
    // forests, so the ordered coproduct reads back without loss.
    fn coproduct<C: Scalar>(a: &PlaneForest) -> TensorElement<PlaneForest, C> {
        let back = |f: &OrderedForest| {
            PlaneForest::from_ordered(f).expect("cut of a plane labeling is a plane labeling")
        };
        ho_coproduct::<C>(&a.to_ordered()).map_keys(|(l, r)| (back(l), back(r)))
    }
}

use proptest::prelude::*;

use chalg::algebra::{comultiply, multiply, tensor_multiply};
use chalg::bases::{endo_r_to_s, endo_s_to_r, forest_r_to_s, forest_s_to_r};
use chalg::forests::Ho;
use chalg::functions::Efsym;
use chalg::morphisms::{endo_to_forest, forest_to_endo, pi_image};
use chalg::structures::pack;
use chalg::words::Wqsym;
use chalg::{
    Element, Endofunction, FreeElement, GradedBialgebra, Int, OrderedForest, PackedWord,
    PlaneForest,
};

/// Forest on `n` vertices from a parent choice per vertex and a relabeling.
fn forest(max: usize) -> impl Strategy<Value = OrderedForest> {
    (0..=max)
        .prop_flat_map(|n| {
            let parents: Vec<_> = (0..n).map(|v| 0..=v).collect();
            (
                parents,
                Just((1..=n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(parents, sigma)| {
            // vertex v + 1 takes parent parents[v] (0 for a root) among 1..=v
            let f = OrderedForest::new(parents).unwrap();
            f.relabel(&sigma).unwrap()
        })
}

fn endo(max: usize) -> impl Strategy<Value = Endofunction> {
    (0..=max)
        .prop_flat_map(|n| proptest::collection::vec(1..=n.max(1), n))
        .prop_map(|img| Endofunction::new(img).unwrap())
}

fn word(max: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(1usize..=6, 0..=max)
}

fn element(max: usize) -> impl Strategy<Value = Element<OrderedForest>> {
    proptest::collection::vec((forest(max), -5i64..=5), 0..6).prop_map(|terms| {
        FreeElement::from_terms(terms.into_iter().map(|(k, c)| (k, Int::from(c))))
    })
}

proptest! {
    #[test]
    fn addition_is_abelian(a in element(3), b in element(3)) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(-(-a.clone()), a);
    }

    #[test]
    fn scaling_distributes(a in element(3), b in element(3), c in -7i64..=7) {
        let c = Int::from(c);
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn pack_is_idempotent(w in word(8)) {
        let p = pack(&w);
        prop_assert_eq!(pack(&p), p.clone());
        prop_assert!(PackedWord::new(p).is_ok());
    }

    #[test]
    fn forest_text_roundtrips(f in forest(6)) {
        let text = f.to_string();
        prop_assert_eq!(text.parse::<OrderedForest>().unwrap(), f);
    }

    #[test]
    fn endofunction_text_roundtrips(f in endo(6)) {
        prop_assert_eq!(f.to_string().parse::<Endofunction>().unwrap(), f);
    }

    #[test]
    fn plane_forest_roundtrips(f in forest(6)) {
        if let Some(p) = PlaneForest::from_ordered(&f) {
            prop_assert_eq!(p.to_string().parse::<PlaneForest>().unwrap(), p.clone());
            prop_assert_eq!(PlaneForest::from_ordered(&p.to_ordered()), Some(p));
        }
    }

    #[test]
    fn ordered_compat(a in forest(3), b in forest(3)) {
        let lhs = comultiply::<Ho, Int>(&Ho::product::<Int>(&a, &b));
        let rhs = tensor_multiply::<Ho, Int>(&Ho::coproduct::<Int>(&a), &Ho::coproduct::<Int>(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn counit_on_either_side(f in forest(5)) {
        let d = Ho::coproduct::<Int>(&f);
        let unit = OrderedForest::empty();
        let left: Element<OrderedForest> = d.iter().filter(|((a, _), _)| *a == unit).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: Element<OrderedForest> = d.iter().filter(|((_, b), _)| *b == unit).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        prop_assert_eq!(&left, &FreeElement::from_key(f.clone()));
        prop_assert_eq!(&right, &FreeElement::from_key(f));
    }

    #[test]
    fn forest_bases_invert(x in element(4)) {
        prop_assert_eq!(forest_s_to_r(&forest_r_to_s(&x)), x.clone());
        prop_assert_eq!(forest_r_to_s(&forest_s_to_r(&x)), x);
    }

    #[test]
    fn endo_bases_invert(f in endo(4)) {
        let x: Element<Endofunction> = FreeElement::from_key(f);
        prop_assert_eq!(endo_s_to_r(&endo_r_to_s(&x)), x.clone());
        prop_assert_eq!(endo_r_to_s(&endo_s_to_r(&x)), x);
    }

    #[test]
    fn pi_multiplies(a in forest(3), b in forest(3)) {
        let lhs = pi_image::<Int>(&a.product(&b));
        let rhs = multiply::<Wqsym, Int>(&pi_image(&a), &pi_image(&b));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn embedding_roundtrips(f in forest(6)) {
        let g = forest_to_endo(&f);
        prop_assert_eq!(endo_to_forest(&g), Some(f));
    }

    #[test]
    fn endo_compat(a in endo(3), b in endo(3)) {
        let lhs = comultiply::<Efsym, Int>(&Efsym::product::<Int>(&a, &b));
        let rhs = tensor_multiply::<Efsym, Int>(&Efsym::coproduct::<Int>(&a), &Efsym::coproduct::<Int>(&b));
        prop_assert_eq!(lhs, rhs);
    }
}

use chalg::algebra::multiply;
use chalg::bases::{forest_r_to_s, interval_extensions, r_multiply_forest};
use chalg::forests::Ho;
use chalg::{Element, FreeElement, OrderedForest};

fn o(s: &str) -> OrderedForest {
    s.parse().unwrap()
}

#[test]
fn extensions_restrict_to_the_factors() {
    let (a, b) = (o("tdun{1} tdun{2}"), o("tdun{1}"));
    let ext = interval_extensions(&a, &b);
    assert_eq!(ext.len(), 8);
    for g in &ext {
        assert_eq!(g.restrict(&[1, 2]).unwrap(), a);
        assert_eq!(g.restrict(&[3]).unwrap(), b);
    }
    // an edge inside the first interval is never allowed
    assert!(!ext.contains(&o("tddeux{1}{2} tdun{3}")));
    assert!(ext.contains(&o("tdun{2} tddeux{3}{1}")));
}

#[test]
fn r_product_expands_to_the_s_product() {
    for p in 0..=2 {
        for q in 0..=2 {
            for a in OrderedForest::enumerate(p).unwrap() {
                for b in OrderedForest::enumerate(q).unwrap() {
                    let (ra, rb): (Element<_>, Element<_>) = (
                        FreeElement::from_key(a.clone()),
                        FreeElement::from_key(b.clone()),
                    );
                    let lhs = forest_r_to_s(&r_multiply_forest(&ra, &rb));
                    let rhs = multiply::<Ho, _>(&forest_r_to_s(&ra), &forest_r_to_s(&rb));
                    assert_eq!(lhs, rhs, "[{a}] [{b}]");
                }
            }
        }
    }
}

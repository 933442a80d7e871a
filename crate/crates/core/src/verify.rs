//! Verification suites: the bialgebra axioms, the realization theorems, the
//! morphisms, the ideals and the subalgebras, each reported as a list of
//! [`CheckReport`]s.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{comultiply, multiply, AlgebraTag, Antipode, FreeElement, GradedBialgebra};
use crate::bases::{
    quotient_multiply, quotient_r, r_from_s_endo, r_product_endo, r_product_forest,
};
use crate::check::{
    check_antipode, check_bialgebra_compat, check_bialgebra_compat_random, check_coassociativity,
    CheckReport,
};
use crate::error::{Error, Result};
use crate::forests::{Ck, Ho, Nck};
use crate::functions::{
    efsym_coproduct, is_acyclic, is_burnside, is_idempotent, is_nondecreasing,
    is_nondecreasing_parking, is_permutation, Efsym, Sgsym,
};
use crate::golden;
use crate::morphisms::{
    admissible_words, b_plus_element, ck_projection, f_w_preimage, faa_di_bruno_lhs,
    faa_di_bruno_rhs, faa_di_bruno_z, forest_to_endo, forest_to_endo_element, pi_hopf, pi_image,
    pi_restricted_rank, tensor_apply, FaaDiBrunoOrder,
};
use crate::realization::{
    commutative_image, nc_multiply, oplus_double, rank_check, rank_of, realize, realize_forest,
    realize_tensor, NCPolynomial, Realizable, Version,
};
use crate::structures::{
    Bounds, Endofunction, OrderedForest, PackedWord, Permutation, PlaneForest, RootedForest,
};
use crate::words::{b_endomorphism, Wqsym};
use crate::Int;

/// A named group of checks runnable from the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Coassoc,
    Compat,
    Antipode,
    Realization,
    Examples,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Coassoc => "coassoc",
            Suite::Compat => "compat",
            Suite::Antipode => "antipode",
            Suite::Realization => "realization",
            Suite::Examples => "examples",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Suite::Coassoc,
            Suite::Compat,
            Suite::Antipode,
            Suite::Realization,
            Suite::Examples,
            Suite::All,
        ]
        .into_iter()
        .find(|x| x.name().eq_ignore_ascii_case(s.trim()))
        .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Parameters shared by the suites.
#[derive(Clone, Debug)]
pub struct Options {
    pub max_degree: usize,
    /// Truncation bound for the realization identities.
    pub n: i32,
    /// Random compatibility pairs drawn one degree above `max_degree`.
    pub samples: usize,
    pub seed: u64,
    pub bounds: Bounds,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            max_degree: 3,
            n: 8,
            samples: 200,
            seed: 0x5eed,
            bounds: Bounds::default(),
        }
    }
}

pub fn run_suite(suite: Suite, opts: &Options) -> Result<Vec<CheckReport>> {
    let d = opts.max_degree;
    let b = &opts.bounds;
    match suite {
        Suite::Coassoc => for_all_algebras(|tag| match tag {
            AlgebraTag::Ck => check_coassociativity::<Ck>(d, b),
            AlgebraTag::Nck => check_coassociativity::<Nck>(d, b),
            AlgebraTag::Ho => check_coassociativity::<Ho>(d, b),
            AlgebraTag::Wqsym => check_coassociativity::<Wqsym>(d, b),
            AlgebraTag::Sgsym => check_coassociativity::<Sgsym>(d, b),
            AlgebraTag::Efsym => check_coassociativity::<Efsym>(d, b),
        }),
        Suite::Compat => {
            let mut out = for_all_algebras(|tag| match tag {
                AlgebraTag::Ck => check_bialgebra_compat::<Ck>(d, b),
                AlgebraTag::Nck => check_bialgebra_compat::<Nck>(d, b),
                AlgebraTag::Ho => check_bialgebra_compat::<Ho>(d, b),
                AlgebraTag::Wqsym => check_bialgebra_compat::<Wqsym>(d, b),
                AlgebraTag::Sgsym => check_bialgebra_compat::<Sgsym>(d, b),
                AlgebraTag::Efsym => check_bialgebra_compat::<Efsym>(d, b),
            })?;
            if opts.samples > 0 {
                let (r, k, s) = (d + 1, opts.samples, opts.seed);
                out.extend(for_all_algebras(|tag| match tag {
                    AlgebraTag::Ck => check_bialgebra_compat_random::<Ck>(r, k, s, b),
                    AlgebraTag::Nck => check_bialgebra_compat_random::<Nck>(r, k, s, b),
                    AlgebraTag::Ho => check_bialgebra_compat_random::<Ho>(r, k, s, b),
                    AlgebraTag::Wqsym => check_bialgebra_compat_random::<Wqsym>(r, k, s, b),
                    AlgebraTag::Sgsym => check_bialgebra_compat_random::<Sgsym>(r, k, s, b),
                    AlgebraTag::Efsym => check_bialgebra_compat_random::<Efsym>(r, k, s, b),
                })?);
            }
            Ok(out)
        }
        Suite::Antipode => for_all_algebras(|tag| match tag {
            AlgebraTag::Ck => check_antipode::<Ck>(d, b),
            AlgebraTag::Nck => check_antipode::<Nck>(d, b),
            AlgebraTag::Ho => check_antipode::<Ho>(d, b),
            AlgebraTag::Wqsym => check_antipode::<Wqsym>(d, b),
            AlgebraTag::Sgsym => check_antipode::<Sgsym>(d, b),
            AlgebraTag::Efsym => check_antipode::<Efsym>(d, b),
        }),
        Suite::Realization => {
            let mut out = realization_theorems(d, opts.n, b)?;
            out.extend(independence(d, b)?);
            Ok(out)
        }
        Suite::Examples => Ok(vec![examples_report()?]),
        Suite::All => {
            let mut out = Vec::new();
            for s in [
                Suite::Coassoc,
                Suite::Compat,
                Suite::Antipode,
                Suite::Realization,
                Suite::Examples,
            ] {
                out.extend(run_suite(s, opts)?);
            }
            out.extend(morphism_suite(d, b)?);
            out.push(faa_di_bruno(d.max(1), b)?);
            out.extend(ideal_suite(d, b)?);
            out.extend(subalgebra_suite(d, b)?);
            Ok(out)
        }
    }
}

fn for_all_algebras(
    mut f: impl FnMut(AlgebraTag) -> Result<CheckReport>,
) -> Result<Vec<CheckReport>> {
    AlgebraTag::ALL.iter().map(|&t| f(t)).collect()
}

/// Number of basis keys of each degree `0..=max_degree`.
pub fn dimensions(tag: AlgebraTag, max_degree: usize, bounds: &Bounds) -> Result<Vec<usize>> {
    fn count<A: GradedBialgebra>(max_degree: usize, bounds: &Bounds) -> Result<Vec<usize>> {
        (0..=max_degree)
            .map(|n| A::basis(n, bounds).map(|v| v.len()))
            .collect()
    }
    match tag {
        AlgebraTag::Ck => count::<Ck>(max_degree, bounds),
        AlgebraTag::Nck => count::<Nck>(max_degree, bounds),
        AlgebraTag::Ho => count::<Ho>(max_degree, bounds),
        AlgebraTag::Wqsym => count::<Wqsym>(max_degree, bounds),
        AlgebraTag::Sgsym => count::<Sgsym>(max_degree, bounds),
        AlgebraTag::Efsym => count::<Efsym>(max_degree, bounds),
    }
}

/// Every golden example as one case.
pub fn examples_report() -> Result<CheckReport> {
    let mut report = CheckReport::new("worked examples");
    for outcome in golden::replay_all()? {
        let ok = outcome.passed();
        report.record(ok, || {
            let mut s = outcome.name.clone();
            for line in &outcome.diff {
                s.push_str("; ");
                s.push_str(line);
            }
            s
        });
    }
    Ok(report)
}

fn realize_element<X: Realizable + Ord + Clone>(
    x: &FreeElement<X, Int>,
    version: Version,
    n: i32,
) -> Result<NCPolynomial<Int>> {
    let mut out = FreeElement::zero();
    for (k, c) in x.iter() {
        out.add_scaled(&realize::<X, Int>(k, version, n)?, c);
    }
    Ok(out)
}

/// `S^a S^b = S^{ab}` on the realizations and `S^x(A ⊕ B)` equal to the
/// realized coproduct, for keys of degree `≤ max_degree`.
pub fn check_realization<A>(
    version: Version,
    max_degree: usize,
    n: i32,
    bounds: &Bounds,
) -> Result<Vec<CheckReport>>
where
    A: GradedBialgebra,
    A::Key: Realizable,
{
    let bases: Vec<Vec<A::Key>> = (0..=max_degree)
        .map(|d| A::basis(d, bounds))
        .collect::<Result<_>>()?;
    let mut cache: BTreeMap<A::Key, NCPolynomial<Int>> = BTreeMap::new();
    for key in bases.iter().flatten() {
        cache.insert(key.clone(), realize::<A::Key, Int>(key, version, n)?);
    }

    let mut mult = CheckReport::new(format!(
        "{} {} realization is multiplicative, N = {n}",
        A::TAG,
        version.name()
    ));
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for a in &bases[p] {
                for b in &bases[q] {
                    let lhs = nc_multiply(&cache[a], &cache[b]);
                    let rhs = realize_element(&A::product::<Int>(a, b), version, n)?;
                    mult.record(lhs == rhs, || format!("pair [{a}] [{b}]"));
                }
            }
        }
    }

    let mut doubling = CheckReport::new(format!(
        "{} {} doubling matches the coproduct, N = {n}",
        A::TAG,
        version.name()
    ));
    for key in bases.iter().flatten() {
        let lhs = oplus_double::<A::Key, Int>(key, version, n)?;
        let rhs = realize_tensor(&A::coproduct::<Int>(key), version, n)?;
        doubling.record(lhs == rhs, || format!("key [{key}]"));
    }
    Ok(vec![mult, doubling])
}

/// The realization identities for forests (both alphabets), permutations
/// and endofunctions.
pub fn realization_theorems(
    max_degree: usize,
    n: i32,
    bounds: &Bounds,
) -> Result<Vec<CheckReport>> {
    let mut out = check_realization::<Ho>(Version::V1, max_degree, n, bounds)?;
    out.extend(check_realization::<Ho>(Version::V2, max_degree, n, bounds)?);
    out.extend(check_realization::<Sgsym>(
        Version::Sg,
        max_degree,
        n,
        bounds,
    )?);
    out.extend(check_realization::<Efsym>(
        Version::Func,
        max_degree,
        n,
        bounds,
    )?);
    Ok(out)
}

/// Full rank of the realized basis in each degree `1..=max_degree`, with
/// `N = 2n + 2`.
pub fn independence(max_degree: usize, bounds: &Bounds) -> Result<Vec<CheckReport>> {
    fn one<X: Realizable + fmt::Display>(
        name: String,
        max_degree: usize,
        version: Version,
        keys: impl Fn(usize) -> Result<Vec<X>>,
    ) -> Result<CheckReport> {
        let mut report = CheckReport::new(name);
        for d in 1..=max_degree {
            let n = 2 * d as i32 + 2;
            let r = rank_check(&keys(d)?, version, n)?;
            report.record(r.full(), || {
                format!(
                    "degree {d}, N = {n}: rank {} of {} keys over {} words",
                    r.rank, r.keys, r.words
                )
            });
        }
        Ok(report)
    }
    Ok(vec![
        one(
            format!("{} V1 realization is injective", AlgebraTag::Ho),
            max_degree,
            Version::V1,
            |d| OrderedForest::enumerate_bounded(d, bounds),
        )?,
        one(
            format!("{} V2 realization is injective", AlgebraTag::Ho),
            max_degree,
            Version::V2,
            |d| OrderedForest::enumerate_bounded(d, bounds),
        )?,
        one(
            format!("{} SG realization is injective", AlgebraTag::Sgsym),
            max_degree,
            Version::Sg,
            |d| Permutation::enumerate_bounded(d, bounds),
        )?,
        one(
            format!("{} FUNC realization is injective", AlgebraTag::Efsym),
            max_degree,
            Version::Func,
            |d| Endofunction::enumerate_bounded(d, bounds),
        )?,
    ])
}

fn forests_upto(max_degree: usize, bounds: &Bounds) -> Result<Vec<Vec<OrderedForest>>> {
    (0..=max_degree)
        .map(|d| OrderedForest::enumerate_bounded(d, bounds))
        .collect()
}

fn key<K: Ord + Clone>(k: &K) -> FreeElement<K, Int> {
    FreeElement::from_key(k.clone())
}

/// The projection to packed words, the embedding into endofunctions, the
/// commutative image and the least-word preimages.
pub fn morphism_suite(max_degree: usize, bounds: &Bounds) -> Result<Vec<CheckReport>> {
    let forests = forests_upto(max_degree, bounds)?;
    let mut out = Vec::new();

    let mut pi_mult = CheckReport::new("pi is multiplicative");
    let mut f_mult = CheckReport::new("forest_to_endo is multiplicative");
    let mut ck_mult = CheckReport::new("ck projection is multiplicative");
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for a in &forests[p] {
                for b in &forests[q] {
                    let ab = a.product(b);
                    let lhs = pi_image::<Int>(&ab);
                    let rhs = multiply::<Wqsym, Int>(&pi_image(a), &pi_image(b));
                    pi_mult.record(lhs == rhs, || format!("pair [{a}] [{b}]"));
                    let fab = forest_to_endo(&ab);
                    f_mult.record(
                        fab == forest_to_endo(a).shifted_concat(&forest_to_endo(b)),
                        || format!("pair [{a}] [{b}]"),
                    );
                    let cab = RootedForest::from_ordered(&ab);
                    let cprod =
                        RootedForest::from_ordered(a).product(&RootedForest::from_ordered(b));
                    ck_mult.record(cab == cprod, || format!("pair [{a}] [{b}]"));
                }
            }
        }
    }

    let mut pi_co = CheckReport::new("pi is comultiplicative");
    let mut pi_b = CheckReport::new("pi intertwines B+ and b");
    let mut f_co = CheckReport::new("forest_to_endo is comultiplicative");
    let mut ck_co = CheckReport::new("ck projection is comultiplicative");
    for f in forests.iter().flatten() {
        let d = Ho::coproduct::<Int>(f);
        let lhs = tensor_apply(&d, pi_image::<Int>);
        let rhs = comultiply::<Wqsym, Int>(&pi_image(f));
        pi_co.record(lhs == rhs, || format!("key [{f}]"));

        let x = key(f);
        pi_b.record(
            pi_hopf(&b_plus_element(&x)) == b_endomorphism(&pi_hopf(&x)),
            || format!("key [{f}]"),
        );

        let lhs = tensor_apply(&d, |g| key(&forest_to_endo(g)));
        f_co.record(lhs == efsym_coproduct::<Int>(&forest_to_endo(f)), || {
            format!("key [{f}]")
        });

        let lhs = tensor_apply(&d, |g| ck_projection(&key(g)));
        ck_co.record(
            lhs == Ck::coproduct::<Int>(&RootedForest::from_ordered(f)),
            || format!("key [{f}]"),
        );
    }

    let mut inj = CheckReport::new("forest_to_endo is injective into acyclic endofunctions");
    for (d, level) in forests.iter().enumerate() {
        let mut seen: BTreeMap<Endofunction, &OrderedForest> = BTreeMap::new();
        for f in level {
            let g = forest_to_endo(f);
            let fresh = is_acyclic(&g) && !seen.contains_key(&g);
            inj.record(fresh, || format!("degree {d}: [{f}] -> [{g}]"));
            seen.insert(g, f);
        }
    }

    out.extend([
        pi_mult,
        pi_co,
        pi_b,
        pi_rank_report(4, bounds)?,
        f_mult,
        f_co,
        inj,
        ck_mult,
        ck_co,
    ]);
    out.push(ck_kernel(max_degree, bounds)?);
    out.push(least_words(max_degree, bounds)?);
    Ok(out)
}

/// Rank of the projection restricted to plane forests, degrees `1..=4`,
/// against 1, 2, 5, 14.
pub fn pi_rank_report(max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    const CATALAN: [usize; 8] = [1, 1, 2, 5, 14, 42, 132, 429];
    let mut report = CheckReport::new("pi restricted to plane forests has full rank");
    for row in pi_restricted_rank(max_degree, bounds)? {
        let want = CATALAN.get(row.degree).copied();
        report.record(Some(row.rank) == want && row.rank == row.forests, || {
            format!(
                "degree {}: rank {} of {} forests",
                row.degree, row.rank, row.forests
            )
        });
    }
    Ok(report)
}

/// The commutative image of the realization identifies exactly the forests
/// with the same underlying rooted forest, and every rooted forest occurs.
pub fn ck_kernel(max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new("commutative image has the unlabeled-shape kernel");
    for d in 0..=max_degree {
        let n = 2 * d as i32 + 2;
        let level = OrderedForest::enumerate_bounded(d, bounds)?;
        let images = level
            .iter()
            .map(|f| realize_forest::<Int>(f, Version::V1, n).map(|p| commutative_image(&p)))
            .collect::<Result<Vec<_>>>()?;
        let shapes: Vec<RootedForest> = level.iter().map(RootedForest::from_ordered).collect();
        for i in 0..level.len() {
            for j in i + 1..level.len() {
                let same_shape = shapes[i] == shapes[j];
                let same_image = images[i] == images[j];
                report.record(same_shape == same_image, || {
                    format!(
                        "[{}] [{}]: same shape {same_shape}, same image {same_image}",
                        level[i], level[j]
                    )
                });
            }
        }
        let hit: std::collections::BTreeSet<&RootedForest> = shapes.iter().collect();
        let all = RootedForest::enumerate_bounded(d, bounds)?;
        report.record(all.iter().all(|r| hit.contains(r)), || {
            format!("degree {d}: projection not onto")
        });
    }
    Ok(report)
}

/// `w` is the least admissible word of its preimage forest.
pub fn least_words(max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new("F_w has w as least admissible word");
    for d in 1..=max_degree {
        for w in PackedWord::enumerate_bounded(d, bounds)? {
            let f = f_w_preimage(&w);
            let least = admissible_words(&f).into_iter().next();
            report.record(least.as_ref() == Some(&w), || format!("[{w}] -> [{f}]"));
        }
    }
    Ok(report)
}

/// `Δ(Z_n) = Σ_k Z_k ⊗ (Z^{k+1})_{n-k}` for `n ≤ max_degree`.
pub fn faa_di_bruno(max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} Faa di Bruno coproduct", AlgebraTag::Nck));
    let z = faa_di_bruno_z(max_degree, bounds)?;
    for n in 0..=max_degree {
        let lhs = faa_di_bruno_lhs(&z, n);
        let rhs = faa_di_bruno_rhs(&z, n, FaaDiBrunoOrder::ZFirst)?;
        report.record(lhs == rhs, || {
            format!("degree {n}: {} and {} terms", lhs.len(), rhs.len())
        });
    }
    Ok(report)
}

fn endos_upto(max_degree: usize, bounds: &Bounds) -> Result<Vec<Vec<Endofunction>>> {
    (0..=max_degree)
        .map(|d| Endofunction::enumerate_bounded(d, bounds))
        .collect()
}

/// The ideals spanned by the non-acyclic endofunctions in the S and in the
/// R basis.
pub fn ideal_suite(max_degree: usize, bounds: &Bounds) -> Result<Vec<CheckReport>> {
    let endos = endos_upto(max_degree, bounds)?;
    let cyclic = |f: &Endofunction| !is_acyclic(f);

    let mut s_ideal = CheckReport::new("non-acyclic S span is a two-sided ideal");
    let mut r_ideal = CheckReport::new("non-acyclic R span is an ideal for the R product");
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for f in &endos[p] {
                for g in &endos[q] {
                    if !cyclic(f) && !cyclic(g) {
                        continue;
                    }
                    let fg = f.shifted_concat(g);
                    s_ideal.record(cyclic(&fg), || format!("[{f}] [{g}] -> [{fg}]"));
                    let prod = r_product_endo::<Int>(f, g);
                    r_ideal.record(prod.keys().all(cyclic), || {
                        format!("R product of [{f}] [{g}]")
                    });
                }
            }
        }
    }

    let mut coideal = CheckReport::new("non-acyclic S span is a coideal");
    let mut stable = CheckReport::new("non-acyclic S span is stable under the antipode");
    let mut s = Antipode::<Efsym, Int>::new();
    for f in endos.iter().flatten().filter(|f| cyclic(f)) {
        let d = efsym_coproduct::<Int>(f);
        coideal.record(d.keys().all(|(a, b)| cyclic(a) || cyclic(b)), || {
            format!("key [{f}]")
        });
        let sf = s.of_key(f)?;
        stable.record(sf.keys().all(cyclic), || format!("key [{f}]"));
    }

    let mut quotient =
        CheckReport::new(format!("{} R products match the quotient", AlgebraTag::Ho));
    let forests = forests_upto(max_degree, bounds)?;
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for a in &forests[p] {
                for b in &forests[q] {
                    let lhs = quotient_multiply::<Int>(
                        &key(&forest_to_endo(a)),
                        &key(&forest_to_endo(b)),
                    );
                    let rhs = quotient_r(&forest_to_endo_element(&r_product_forest::<Int>(a, b)));
                    quotient.record(lhs == rhs, || format!("pair [{a}] [{b}]"));
                }
            }
        }
    }

    Ok(vec![
        s_ideal,
        coideal,
        stable,
        r_ideal,
        ideal_witness(2, bounds)?,
        quotient,
    ])
}

/// The two ideals differ in degree `d`: the spans of the non-acyclic `S^f`
/// and of the non-acyclic `R_f`, both in S coordinates, are compared by
/// rank.
pub fn ideal_witness(d: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("S and R ideals differ in degree {d}"));
    let cyclic: Vec<Endofunction> = Endofunction::enumerate_bounded(d, bounds)?
        .into_iter()
        .filter(|f| !is_acyclic(f))
        .collect();
    let s_span: Vec<FreeElement<Endofunction, Int>> = cyclic.iter().map(key).collect();
    let r_span: Vec<FreeElement<Endofunction, Int>> =
        cyclic.iter().map(r_from_s_endo::<Int>).collect();
    let both: Vec<_> = s_span.iter().chain(&r_span).cloned().collect();
    let (rs, rr, rb) = (
        rank_of(&s_span).rank,
        rank_of(&r_span).rank,
        rank_of(&both).rank,
    );
    report.record(rb > rs || rb > rr, || {
        format!("ranks: S span {rs}, R span {rr}, together {rb}; the spans coincide")
    });
    Ok(report)
}

/// A family of endofunctions cut out by a predicate.
pub struct Family {
    pub name: &'static str,
    pub contains: fn(&Endofunction) -> bool,
}

fn burnside_2_4(f: &Endofunction) -> bool {
    is_burnside(f, 2, 4)
}

pub const FAMILIES: [Family; 6] = [
    Family {
        name: "permutations",
        contains: is_permutation,
    },
    Family {
        name: "acyclic",
        contains: is_acyclic,
    },
    Family {
        name: "nondecreasing",
        contains: is_nondecreasing,
    },
    Family {
        name: "nondecreasing parking",
        contains: is_nondecreasing_parking,
    },
    Family {
        name: "Burnside f^2 = f^4",
        contains: burnside_2_4,
    },
    Family {
        name: "idempotent",
        contains: is_idempotent,
    },
];

/// Closure of one family under the shifted concatenation and under taking
/// either coproduct factor.
pub fn check_family(family: &Family, max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("{} form a sub-bialgebra", family.name));
    let inside: Vec<Vec<Endofunction>> = endos_upto(max_degree, bounds)?
        .into_iter()
        .map(|level| level.into_iter().filter(|f| (family.contains)(f)).collect())
        .collect();
    for p in 0..=max_degree {
        for q in 0..=max_degree - p {
            for f in &inside[p] {
                for g in &inside[q] {
                    let fg = f.shifted_concat(g);
                    report.record((family.contains)(&fg), || format!("[{f}] [{g}] -> [{fg}]"));
                }
            }
        }
    }
    for f in inside.iter().flatten() {
        for ((a, b), _) in efsym_coproduct::<Int>(f).iter() {
            let ok = (family.contains)(a) && (family.contains)(b);
            report.record(ok, || format!("[{f}] -> [{a}] ⊗ [{b}]"));
        }
    }
    Ok(report)
}

pub fn subalgebra_suite(max_degree: usize, bounds: &Bounds) -> Result<Vec<CheckReport>> {
    FAMILIES
        .iter()
        .map(|f| check_family(f, max_degree, bounds))
        .collect()
}

/// Whether the up-left labeling of plane forests of degree `d` lands
/// exactly on the nondecreasing parking functions.
pub fn plane_parking(max_degree: usize, bounds: &Bounds) -> Result<CheckReport> {
    let mut report = CheckReport::new("plane forests label to nondecreasing parking functions");
    for d in 0..=max_degree {
        let images: std::collections::BTreeSet<Endofunction> =
            PlaneForest::enumerate_bounded(d, bounds)?
                .iter()
                .map(|p| forest_to_endo(&p.to_ordered()))
                .collect();
        for f in Endofunction::enumerate_bounded(d, bounds)? {
            let ok = images.contains(&f) == is_nondecreasing_parking(&f);
            report.record(ok, || {
                format!(
                    "degree {d}: [{f}] image {}, parking {}",
                    images.contains(&f),
                    is_nondecreasing_parking(&f)
                )
            });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_parse() {
        assert_eq!("ALL".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_suites() {
        let opts = Options {
            max_degree: 2,
            n: 4,
            samples: 20,
            ..Options::default()
        };
        for s in [
            Suite::Coassoc,
            Suite::Compat,
            Suite::Antipode,
            Suite::Realization,
        ] {
            for r in run_suite(s, &opts).unwrap() {
                assert!(r.passed(), "{r}");
            }
        }
    }

    #[test]
    fn dimension_counts() {
        let b = Bounds::default();
        assert_eq!(
            dimensions(AlgebraTag::Ho, 4, &b).unwrap(),
            [1, 1, 3, 16, 125]
        );
        assert_eq!(
            dimensions(AlgebraTag::Nck, 4, &b).unwrap(),
            [1, 1, 2, 5, 14]
        );
        assert_eq!(dimensions(AlgebraTag::Efsym, 3, &b).unwrap(), [1, 1, 4, 27]);
    }

    #[test]
    fn witness_finds_equal_spans() {
        let r = ideal_witness(2, &Bounds::default()).unwrap();
        assert_eq!((r.checked, r.failed), (1, 1));
    }

    #[test]
    fn families_close() {
        for r in subalgebra_suite(2, &Bounds::default()).unwrap() {
            assert!(r.passed(), "{r}");
        }
    }
}

mod common;

use chebotarev::chief::{
    chief_series, chief_series_by, crown_data, crown_data_from, derivations, endo_field,
    factor_module, g_isomorphic, is_field, stabilizer_fraction, Crowns, FactorModule,
    DERIVATION_CAP,
};
use chebotarev::fp::{self, Matrix};
use chebotarev::group::PermGroup;
use chebotarev::subgroup::SubgroupLattice;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{catalog_upto, spec};

fn setup(text: &str) -> (PermGroup, SubgroupLattice) {
    let g = spec(text).build().unwrap();
    let lat = SubgroupLattice::new(&g).unwrap();
    (g, lat)
}

/// Every abelian chief factor of a few chief series.
fn abelian_modules(g: &PermGroup, lat: &SubgroupLattice, series_count: u64) -> Vec<FactorModule> {
    let mut out = Vec::new();
    for seed in 0..series_count {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let series = chief_series_by(g, lat, |c| rng.random_range(0..c.len()));
        for i in 0..series.len() {
            if series.factors[i].abelian {
                let (x, y) = series.section(i);
                out.push(factor_module(g, x, y).unwrap());
            }
        }
    }
    out
}

fn signature(c: &Crowns) -> Vec<(u64, usize, u64, usize, u32, bool)> {
    let mut v: Vec<_> = c
        .classes()
        .map(|k| (k.p(), k.n_raw(), k.q, k.n, k.delta, k.central()))
        .collect();
    v.sort();
    v
}

#[test]
fn factor_orders_multiply_to_group_order() {
    for s in common::catalog_upto(200)
        .into_iter()
        .chain(chebotarev::catalog::insoluble_catalog())
    {
        let (g, lat) = setup(&s.to_string());
        let series = chief_series(&g, &lat);
        let prod: usize = series.factors.iter().map(|f| f.order).product();
        assert_eq!(prod, g.order(), "{}", s.label);
        for x in &series.subgroups {
            assert!(g.is_normal(x), "{}", s.label);
        }
        if g.is_soluble() {
            assert!(series.factors.iter().all(|f| f.abelian), "{}", s.label);
        }
    }
}

#[test]
fn crown_data_does_not_depend_on_the_series() {
    for s in catalog_upto(200) {
        let (g, lat) = setup(&s.to_string());
        let base = signature(&crown_data(&g, &lat).unwrap());
        let last = crown_data_from(&g, &lat, chief_series_by(&g, &lat, |c| c.len() - 1)).unwrap();
        assert_eq!(signature(&last), base, "{}", s.label);
        for seed in 0..3 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let series = chief_series_by(&g, &lat, |c| rng.random_range(0..c.len()));
            let other = crown_data_from(&g, &lat, series).unwrap();
            assert_eq!(signature(&other), base, "{}", s.label);
        }
    }
}

#[test]
fn g_isomorphism_is_an_equivalence() {
    for text in [
        "elementary 2 3",
        "direct_product (symmetric 3) (symmetric 3)",
        "affine 2 2 [[0,1],[1,1]] power 2",
        "direct_product (cyclic 2) (alternating 4)",
        "affine 3 1 [[2]] power 3",
        "direct_product (elementary 2 2) (symmetric 3)",
    ] {
        let (g, lat) = setup(text);
        let ms = abelian_modules(&g, &lat, 3);
        for a in &ms {
            assert!(g_isomorphic(a, a).unwrap(), "{text}");
            for b in ms.iter().filter(|b| b.p == a.p) {
                let ab = g_isomorphic(a, b).unwrap();
                assert_eq!(ab, g_isomorphic(b, a).unwrap(), "{text}");
                for c in ms.iter().filter(|c| c.p == a.p) {
                    if ab && g_isomorphic(b, c).unwrap() {
                        assert!(g_isomorphic(a, c).unwrap(), "{text}");
                    }
                }
            }
        }
    }
}

/// Number of matrices commuting with every generator, by brute force.
fn commutant_size(m: &FactorModule) -> u64 {
    let n = m.n_raw;
    let mut count = 0;
    fp::for_each_vector(m.p, n * n, |flat| {
        let rows: Vec<Vec<u64>> = flat.chunks(n).map(|r| r.to_vec()).collect();
        let t = Matrix::from_rows(m.p, &rows);
        if m.gen_matrices.iter().all(|a| a.mul(&t) == t.mul(a)) {
            count += 1;
        }
        true
    });
    count
}

#[test]
fn endomorphisms_form_a_field() {
    for s in catalog_upto(200) {
        let (g, lat) = setup(&s.to_string());
        for c in crown_data(&g, &lat).unwrap().classes() {
            let m = &c.module;
            let (q, n) = endo_field(m).unwrap();
            assert_eq!(q.pow(n as u32), m.size(), "{}", s.label);
            if !m.gen_matrices.is_empty() {
                let basis = fp::intertwiners(&m.gen_matrices, &m.gen_matrices);
                assert!(is_field(m.p, &basis), "{}", s.label);
            }
            if m.n_raw * m.n_raw <= 16 {
                assert_eq!(commutant_size(m), q, "{}", s.label);
            }
        }
    }
}

#[test]
fn fixed_point_probability_bounds() {
    for s in catalog_upto(200) {
        let (g, lat) = setup(&s.to_string());
        for c in crown_data(&g, &lat).unwrap().classes() {
            let m = &c.module;
            let lower = BigRational::new(BigInt::one(), BigInt::from(m.h_order));
            assert!(
                m.p_fix >= lower && m.p_fix <= BigRational::one(),
                "{}",
                s.label
            );
            if m.central {
                assert_eq!(m.h_order, 1);
                assert!(m.p_fix.is_one());
            }
            fp::for_each_vector(m.p, m.n_raw, |v| {
                if v.iter().any(|&x| x != 0) {
                    assert!(m.p_fix >= stabilizer_fraction(&g, m, v), "{}", s.label);
                }
                true
            });
        }
    }
}

#[test]
fn soluble_groups_have_no_cohomology() {
    for s in catalog_upto(200) {
        let (g, lat) = setup(&s.to_string());
        for c in crown_data(&g, &lat).unwrap().classes() {
            let d = derivations(&c.module, DERIVATION_CAP).unwrap();
            assert_eq!(d.m, 0, "{}", s.label);
            assert_eq!(d.der_count, d.inner_count, "{}", s.label);
            assert_eq!(c.m, Some(0));
        }
    }
}

/// Complements of the normal subgroup `x` in `g`, read off the lattice.
fn complement_count(
    g: &PermGroup,
    lat: &SubgroupLattice,
    x: &chebotarev::subgroup::Subgroup,
) -> usize {
    let target = g.order() / x.order();
    lat.subgroups()
        .iter()
        .filter(|u| u.order() == target && u.bits().intersection(x.bits()).count() == 1)
        .count()
}

#[test]
fn derivations_count_complements() {
    for (text, expected) in [
        ("symmetric 4", Some(4)),
        ("alternating 4", Some(4)),
        ("symmetric 3", Some(3)),
        ("dihedral 5", Some(5)),
        ("affine 5 1 [[2]]", Some(5)),
        ("affine 7 1 [[2]]", Some(7)),
        ("affine 7 1 [[3]]", Some(7)),
        ("affine 3 2 [[0,1],[2,0]]", Some(9)),
        ("affine 2 3 [[0,1,0],[0,0,1],[1,1,0]]", Some(8)),
        ("affine 2 2 [[0,1],[1,1]] [[0,1],[1,0]]", Some(4)),
    ] {
        let (g, lat) = setup(text);
        let series = chief_series(&g, &lat);
        let (x, y) = series.section(series.len() - 1);
        let m = factor_module(&g, x, y).unwrap();
        let d = derivations(&m, DERIVATION_CAP).unwrap();
        let c = complement_count(&g, &lat, x) as u128;
        assert_eq!(d.der_count, c, "{text}");
        if let Some(e) = expected {
            assert_eq!(c, e, "{text}");
        }
        assert_eq!(d.inner_count, m.size() as u128, "{text}");
    }
}

#[test]
fn alternating_five_has_no_crowns() {
    let (g, lat) = setup("alternating 5");
    let c = crown_data(&g, &lat).unwrap();
    assert!(c.a.is_empty() && c.b.is_empty());
    assert_eq!(c.excluded.len(), 1);
    assert!(!c.excluded[0].abelian);

    let (g, lat) = setup("symmetric 5");
    let c = crown_data(&g, &lat).unwrap();
    assert_eq!(signature(&c), vec![(2, 1, 2, 1, 1, true)]);
}

#[test]
fn frattini_factors_are_excluded() {
    for (text, excluded) in [
        ("cyclic 4", 1),
        ("cyclic 8", 2),
        ("quaternion8", 1),
        ("dihedral 4", 1),
        ("cyclic 9", 1),
    ] {
        let (g, lat) = setup(text);
        let c = crown_data(&g, &lat).unwrap();
        assert_eq!(c.excluded.len(), excluded, "{text}");
        assert!(c.excluded.iter().all(|e| e.abelian && !e.complemented));
    }
}

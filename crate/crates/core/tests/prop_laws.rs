//! Property-based laws: cardinality algebra over randomly shaped groupoids,
//! series identities, and the hom/injective decomposition on random
//! digraphs.

mod common;

use std::sync::Arc;

use num_traits::Zero;
use proptest::prelude::*;

use grpdcard::group::FiniteGroup;
use grpdcard::groupoid::FiniteGroupoid;
use grpdcard::relational::{verify_hom_inj_identity, RelationalStructure};
use grpdcard::series::Series;
use grpdcard::{rat, Rat, RationalSeries};

/// Component shapes: (catalog index, object count). Vertex groups of order
/// at most 8 = the first 14 catalog entries.
fn component_spec() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0usize..14, 1usize..=2), 0..=6)
}

fn build(spec: &[(usize, usize)]) -> FiniteGroupoid {
    let pool = common::group_pool(8);
    let parts: Vec<(Arc<FiniteGroup>, usize)> =
        spec.iter().map(|&(i, k)| (Arc::clone(&pool[i]), k)).collect();
    FiniteGroupoid::from_components(&parts)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cardinality_of_product_and_coproduct(a in component_spec(), b in component_spec()) {
        let ga = build(&a);
        let gb = build(&b);
        let ca = ga.cardinality();
        let cb = gb.cardinality();
        prop_assert_eq!(ga.coproduct(&gb).cardinality(), ca.clone() + cb.clone());
        let product = ga.product(&gb).unwrap();
        prop_assert_eq!(product.cardinality(), ca * cb);
    }

    #[test]
    fn cardinality_vanishes_only_on_empty(a in component_spec()) {
        let g = build(&a);
        prop_assert_eq!(g.cardinality().is_zero(), g.n_objects() == 0);
    }

    #[test]
    fn equivalent_fattenings_have_equal_cardinality(
        a in prop::collection::vec((0usize..14, 1usize..=2, 1usize..=3), 1..=4),
    ) {
        let pool = common::group_pool(8);
        let thin: Vec<(Arc<FiniteGroup>, usize)> =
            a.iter().map(|&(i, k, _)| (Arc::clone(&pool[i]), k)).collect();
        let fat: Vec<(Arc<FiniteGroup>, usize)> =
            a.iter().map(|&(i, _, k)| (Arc::clone(&pool[i]), k)).collect();
        let g1 = FiniteGroupoid::from_components(&thin);
        let g2 = FiniteGroupoid::from_components(&fat);
        prop_assert!(g1.is_equivalent(&g2));
        prop_assert_eq!(g1.cardinality(), g2.cardinality());
        prop_assert_eq!(g1.skeleton().cardinality(), g1.cardinality());
    }

    #[test]
    fn exp_times_exp_of_negation_is_one(
        coeffs in prop::collection::vec((-6i64..=6, 1i64..=6), 1..=8),
    ) {
        let mut c: Vec<Rat> = coeffs.iter().map(|&(p, q)| rat(p, q)).collect();
        c.insert(0, rat(0, 1));
        let s: RationalSeries = Series::from_coeffs(c);
        let product = s.exp().unwrap().mul(&s.neg().exp().unwrap());
        prop_assert_eq!(product, Series::one(s.truncation()));
    }

    #[test]
    fn series_multiplication_commutes_with_exp_of_sums(
        a in prop::collection::vec((-4i64..=4, 1i64..=4), 1..=6),
        b in prop::collection::vec((-4i64..=4, 1i64..=4), 1..=6),
    ) {
        let len = a.len().min(b.len());
        let mk = |v: &[(i64, i64)]| -> RationalSeries {
            let mut c: Vec<Rat> = v[..len].iter().map(|&(p, q)| rat(p, q)).collect();
            c.insert(0, rat(0, 1));
            Series::from_coeffs(c)
        };
        let sa = mk(&a);
        let sb = mk(&b);
        let lhs = sa.add(&sb).exp().unwrap();
        let rhs = sa.exp().unwrap().mul(&sb.exp().unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn hom_decomposes_as_injective_sum_on_random_digraphs(
        n_c in 0usize..=4,
        n_a in 0usize..=4,
        edges_c in prop::collection::vec((0usize..4, 0usize..4), 0..=8),
        edges_a in prop::collection::vec((0usize..4, 0usize..4), 0..=8),
    ) {
        let ec: Vec<(usize, usize)> =
            edges_c.into_iter().filter(|&(x, y)| x < n_c && y < n_c).collect();
        let ea: Vec<(usize, usize)> =
            edges_a.into_iter().filter(|&(x, y)| x < n_a && y < n_a).collect();
        let c = RelationalStructure::digraph(n_c, &ec).unwrap();
        let a = RelationalStructure::digraph(n_a, &ea).unwrap();
        let check = verify_hom_inj_identity(&c, &a).unwrap();
        prop_assert!(check.equal, "hom={} sum={}", check.hom, check.sum_over_partitions);
    }
}

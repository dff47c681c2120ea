//! Built-in table of all groups of order up to 12, up to isomorphism.
//!
//! Used by the exhaustive homomorphism-counting probes and by the random
//! test populations.

use std::sync::Arc;

use super::FiniteGroup;

/// All isomorphism classes of groups of order `n ≤ 12`, with conventional
/// names, ordered by order and then by name.
pub fn small_groups_up_to(max_order: usize) -> Vec<(String, Arc<FiniteGroup>)> {
    assert!(max_order <= 12, "catalog covers orders up to 12");
    small_groups().into_iter().filter(|(_, g)| g.order() <= max_order).collect()
}

/// The full catalog: every group of order at most 12.
pub fn small_groups() -> Vec<(String, Arc<FiniteGroup>)> {
    let c = FiniteGroup::cyclic;
    let mut out: Vec<(String, Arc<FiniteGroup>)> = vec![
        ("C1".into(), c(1)),
        ("C2".into(), c(2)),
        ("C3".into(), c(3)),
        ("C4".into(), c(4)),
        ("C2xC2".into(), c(2).direct_product(&c(2))),
        ("C5".into(), c(5)),
        ("C6".into(), c(6)),
        ("S3".into(), FiniteGroup::symmetric(3).expect("degree 3")),
        ("C7".into(), c(7)),
        ("C8".into(), c(8)),
        ("C4xC2".into(), c(4).direct_product(&c(2))),
        ("C2xC2xC2".into(), c(2).direct_product(&c(2)).direct_product(&c(2))),
        ("D4".into(), FiniteGroup::dihedral(4)),
        ("Q8".into(), FiniteGroup::dicyclic(2)),
        ("C9".into(), c(9)),
        ("C3xC3".into(), c(3).direct_product(&c(3))),
        ("C10".into(), c(10)),
        ("D5".into(), FiniteGroup::dihedral(5)),
        ("C11".into(), c(11)),
        ("C12".into(), c(12)),
        ("C6xC2".into(), c(6).direct_product(&c(2))),
        ("D6".into(), FiniteGroup::dihedral(6)),
        (
            "A4".into(),
            FiniteGroup::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])
                .expect("A4 generators"),
        ),
        ("Dic3".into(), FiniteGroup::dicyclic(3)),
    ];
    out.sort_by(|a, b| a.1.order().cmp(&b.1.order()).then_with(|| a.0.cmp(&b.0)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::are_isomorphic;

    #[test]
    fn catalog_is_complete_and_irredundant() {
        let groups = small_groups();
        // counts of isomorphism classes per order 1..=12
        let expected = [1usize, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5];
        for (order, &want) in expected.iter().enumerate() {
            let have = groups.iter().filter(|(_, g)| g.order() == order + 1).count();
            assert_eq!(have, want, "order {}", order + 1);
        }
        for i in 0..groups.len() {
            for j in (i + 1)..groups.len() {
                assert!(
                    !are_isomorphic(&groups[i].1, &groups[j].1),
                    "{} ≅ {}",
                    groups[i].0,
                    groups[j].0
                );
            }
        }
    }

    #[test]
    fn a4_has_no_subgroup_of_order_six() {
        let a4 = small_groups().into_iter().find(|(n, _)| n == "A4").unwrap().1;
        assert_eq!(a4.order(), 12);
        assert!(crate::group::all_subgroups(&a4).iter().all(|s| s.len() != 6));
    }
}

//! Group homomorphisms: validation, enumeration, predicates, quotients.

use std::collections::HashSet;
use std::sync::Arc;

use super::{FiniteGroup, GroupError};

/// A homomorphism between finite groups, stored as its full value table.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: Arc<FiniteGroup>,
    target: Arc<FiniteGroup>,
    map: Vec<u16>,
}

impl std::fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupHom({} -> {}, {:?})", self.source.order(), self.target.order(), self.map)
    }
}

impl GroupHom {
    pub fn new(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: &[usize],
    ) -> Result<Self, GroupError> {
        if map.len() != source.order() {
            return Err(GroupError::MapLengthMismatch { len: map.len(), order: source.order() });
        }
        for a in 0..source.order() {
            for b in 0..source.order() {
                if map[source.mul(a, b)] != target.mul(map[a], map[b]) {
                    return Err(GroupError::NotHomomorphism { a, b });
                }
            }
        }
        // f(e) = f(e·e) = f(e)² forces f(e) = e, so no separate identity check.
        Ok(GroupHom { source, target, map: map.iter().map(|&v| v as u16).collect() })
    }

    pub(crate) fn new_trusted(
        source: Arc<FiniteGroup>,
        target: Arc<FiniteGroup>,
        map: Vec<u16>,
    ) -> Self {
        GroupHom { source, target, map }
    }

    pub fn identity(g: &Arc<FiniteGroup>) -> Self {
        let map = (0..g.order() as u16).collect();
        GroupHom { source: Arc::clone(g), target: Arc::clone(g), map }
    }

    pub fn trivial(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Self {
        GroupHom {
            source: Arc::clone(source),
            target: Arc::clone(target),
            map: vec![0; source.order()],
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroup> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroup> {
        &self.target
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a] as usize
    }

    pub fn map(&self) -> Vec<usize> {
        self.map.iter().map(|&v| v as usize).collect()
    }

    /// `self ∘ other`; `other`'s target must equal `self`'s source.
    pub fn compose(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(self.source.order(), other.target.order());
        let map = other.map.iter().map(|&v| self.map[v as usize]).collect();
        GroupHom {
            source: Arc::clone(&other.source),
            target: Arc::clone(&self.target),
            map,
        }
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        self.map.iter().all(|&v| {
            if seen[v as usize] {
                false
            } else {
                seen[v as usize] = true;
                true
            }
        })
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.target.order()];
        for &v in &self.map {
            seen[v as usize] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.source.order() == self.target.order() && self.is_injective()
    }

    /// Inverse homomorphism; the map must be an isomorphism.
    pub fn inverse(&self) -> GroupHom {
        assert!(self.is_isomorphism());
        let mut map = vec![0u16; self.target.order()];
        for (a, &v) in self.map.iter().enumerate() {
            map[v as usize] = a as u16;
        }
        GroupHom { source: Arc::clone(&self.target), target: Arc::clone(&self.source), map }
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.source.order()).filter(|&a| self.map[a] == 0).collect()
    }

    pub fn image(&self) -> Vec<usize> {
        let mut im: Vec<usize> = self.map.iter().map(|&v| v as usize).collect();
        im.sort_unstable();
        im.dedup();
        im
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HomPredicates {
    pub injective: bool,
    pub surjective: bool,
    pub isomorphism: bool,
}

pub fn hom_predicates(f: &GroupHom) -> HomPredicates {
    let injective = f.is_injective();
    let surjective = f.is_surjective();
    HomPredicates { injective, surjective, isomorphism: injective && surjective }
}

/// All homomorphisms `source → target`, in lexicographic order of the value
/// table. Full-map backtracking with incremental product checks.
pub fn enumerate_homs(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> Vec<GroupHom> {
    let mut out = Vec::new();
    let n = source.order();
    let src_orders = source.element_orders();
    let tgt_orders = target.element_orders();
    let mut map = vec![0u16; n];
    backtrack_homs(source, target, &src_orders, &tgt_orders, &mut map, 1, &mut |m| {
        out.push(GroupHom::new_trusted(Arc::clone(source), Arc::clone(target), m.to_vec()));
    });
    out
}

/// Number of homomorphisms `source → target` without materializing them.
pub fn count_homs(source: &Arc<FiniteGroup>, target: &Arc<FiniteGroup>) -> u64 {
    let n = source.order();
    let src_orders = source.element_orders();
    let tgt_orders = target.element_orders();
    let mut map = vec![0u16; n];
    let mut count = 0u64;
    backtrack_homs(source, target, &src_orders, &tgt_orders, &mut map, 1, &mut |_| count += 1);
    count
}

fn backtrack_homs(
    source: &FiniteGroup,
    target: &FiniteGroup,
    src_orders: &[usize],
    tgt_orders: &[usize],
    map: &mut Vec<u16>,
    k: usize,
    emit: &mut impl FnMut(&[u16]),
) {
    let n = source.order();
    if k == n {
        emit(map);
        return;
    }
    'candidates: for v in 0..target.order() {
        if src_orders[k] % tgt_orders[v] != 0 {
            continue;
        }
        // check every product constraint that involves only assigned slots
        for i in 0..=k {
            let fi = if i == k { v } else { map[i] as usize };
            let c = source.mul(i, k);
            if c <= k {
                let fc = if c == k { v } else { map[c] as usize };
                if fc != target.mul(fi, v) {
                    continue 'candidates;
                }
            }
            let c = source.mul(k, i);
            if c <= k {
                let fc = if c == k { v } else { map[c] as usize };
                if fc != target.mul(v, fi) {
                    continue 'candidates;
                }
            }
        }
        // products of two earlier slots landing on k
        for i in 0..k {
            let j = source.mul(source.inv(i), k);
            if j < k && v as usize != target.mul(map[i] as usize, map[j] as usize) {
                continue 'candidates;
            }
        }
        map[k] = v as u16;
        backtrack_homs(source, target, src_orders, tgt_orders, map, k + 1, emit);
    }
    map[k] = 0;
}

/// Quotient by a normal subgroup, as the Cayley table on cosets together
/// with the projection. The coset of the identity gets index 0.
pub fn quotient_group(
    g: &Arc<FiniteGroup>,
    normal: &[usize],
) -> Result<(Arc<FiniteGroup>, GroupHom), GroupError> {
    let n = g.order();
    let mut set: Vec<usize> = normal.to_vec();
    set.sort_unstable();
    set.dedup();
    let in_n: HashSet<usize> = set.iter().copied().collect();
    if !in_n.contains(&0) {
        return Err(GroupError::NotNormal);
    }
    for &a in &set {
        for &b in &set {
            if !in_n.contains(&g.mul(a, b)) {
                return Err(GroupError::NotNormal);
            }
        }
    }
    for c in 0..n {
        if set.iter().any(|&a| !in_n.contains(&g.conj(c, a))) {
            return Err(GroupError::NotNormal);
        }
    }
    let mut coset_of = vec![usize::MAX; n];
    let mut reps: Vec<usize> = Vec::new();
    for a in 0..n {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(a);
        for &x in &set {
            coset_of[g.mul(a, x)] = id;
        }
    }
    let q = reps.len();
    let mut rows = vec![vec![0usize; q]; q];
    for (i, &a) in reps.iter().enumerate() {
        for (j, &b) in reps.iter().enumerate() {
            rows[i][j] = coset_of[g.mul(a, b)];
        }
    }
    let quotient = Arc::new(FiniteGroup::from_rows_trusted(&rows));
    let proj = GroupHom::new(Arc::clone(g), Arc::clone(&quotient), &coset_of)?;
    Ok((quotient, proj))
}

/// Isomorphism test by backtracking over bijections that preserve the table.
pub fn are_isomorphic(a: &Arc<FiniteGroup>, b: &Arc<FiniteGroup>) -> bool {
    if a.order() != b.order() {
        return false;
    }
    let mut oa = a.element_orders();
    let mut ob = b.element_orders();
    let orders_a = oa.clone();
    let orders_b = ob.clone();
    oa.sort_unstable();
    ob.sort_unstable();
    if oa != ob || a.is_abelian() != b.is_abelian() {
        return false;
    }
    let n = a.order();
    let mut map = vec![0u16; n];
    let mut used = vec![false; n];
    used[0] = true;
    iso_backtrack(a, b, &orders_a, &orders_b, &mut map, &mut used, 1)
}

fn iso_backtrack(
    a: &FiniteGroup,
    b: &FiniteGroup,
    orders_a: &[usize],
    orders_b: &[usize],
    map: &mut Vec<u16>,
    used: &mut Vec<bool>,
    k: usize,
) -> bool {
    let n = a.order();
    if k == n {
        return true;
    }
    'candidates: for v in 0..n {
        if used[v] || orders_a[k] != orders_b[v] {
            continue;
        }
        for i in 0..=k {
            let fi = if i == k { v } else { map[i] as usize };
            let c = a.mul(i, k);
            if c <= k {
                let fc = if c == k { v } else { map[c] as usize };
                if fc != b.mul(fi, v) {
                    continue 'candidates;
                }
            }
            let c = a.mul(k, i);
            if c <= k {
                let fc = if c == k { v } else { map[c] as usize };
                if fc != b.mul(v, fi) {
                    continue 'candidates;
                }
            }
        }
        for i in 0..k {
            let j = a.mul(a.inv(i), k);
            if j < k && v != b.mul(map[i] as usize, map[j] as usize) {
                continue 'candidates;
            }
        }
        map[k] = v as u16;
        used[v] = true;
        if iso_backtrack(a, b, orders_a, orders_b, map, used, k + 1) {
            return true;
        }
        used[v] = false;
    }
    map[k] = 0;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::subgroups_up_to_conjugacy;

    #[test]
    fn hom_count_c2_to_c2() {
        let c2 = FiniteGroup::cyclic(2);
        let homs = enumerate_homs(&c2, &c2);
        assert_eq!(homs.len(), 2);
        // lexicographic order: trivial map first
        assert_eq!(homs[0].map(), vec![0, 0]);
        assert_eq!(homs[1].map(), vec![0, 1]);
    }

    #[test]
    fn every_group_has_one_hom_to_trivial() {
        for g in [FiniteGroup::cyclic(5), FiniteGroup::symmetric(3).unwrap(), FiniteGroup::dicyclic(2)] {
            assert_eq!(enumerate_homs(&g, &FiniteGroup::trivial()).len(), 1);
        }
    }

    #[test]
    fn hom_count_c2_to_s3() {
        let c2 = FiniteGroup::cyclic(2);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(enumerate_homs(&c2, &s3).len(), 4);
    }

    #[test]
    fn homs_validate() {
        let c4 = FiniteGroup::cyclic(4);
        let s3 = FiniteGroup::symmetric(3).unwrap();
        for h in enumerate_homs(&c4, &s3) {
            GroupHom::new(h.source().clone(), h.target().clone(), &h.map()).unwrap();
        }
    }

    #[test]
    fn non_hom_rejected() {
        let c2 = FiniteGroup::cyclic(2);
        let err = GroupHom::new(c2.clone(), c2.clone(), &[1, 0]).unwrap_err();
        assert!(matches!(err, GroupError::NotHomomorphism { .. }));
    }

    #[test]
    fn predicates_of_quotient_projection() {
        let c4 = FiniteGroup::cyclic(4);
        let (q, proj) = quotient_group(&c4, &[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        let p = hom_predicates(&proj);
        assert!(p.surjective && !p.injective && !p.isomorphism);
        assert_eq!(proj.kernel(), vec![0, 2]);
    }

    #[test]
    fn quotient_by_trivial_and_whole() {
        let c4 = FiniteGroup::cyclic(4);
        let (q, proj) = quotient_group(&c4, &[0]).unwrap();
        assert_eq!(q.order(), 4);
        assert!(hom_predicates(&proj).isomorphism);
        let (q, _) = quotient_group(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(q.order(), 1);
    }

    #[test]
    fn non_normal_subgroup_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let order2 = subgroups_up_to_conjugacy(&s3)
            .into_iter()
            .find(|c| c.representative.len() == 2)
            .unwrap();
        assert!(matches!(
            quotient_group(&s3, &order2.representative),
            Err(GroupError::NotNormal)
        ));
    }

    #[test]
    fn s3_normal_subgroups() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let normals = crate::group::normal_subgroups(&s3);
        assert_eq!(normals.len(), 3);
        let sizes: Vec<usize> = normals.iter().map(|n| n.len()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
    }

    #[test]
    fn abelian_groups_have_all_subgroups_normal() {
        let c12 = FiniteGroup::cyclic(12);
        assert_eq!(
            crate::group::normal_subgroups(&c12).len(),
            crate::group::all_subgroups(&c12).len()
        );
    }

    #[test]
    fn isomorphism_distinguishes_c4_from_v4() {
        let c4 = FiniteGroup::cyclic(4);
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert!(!are_isomorphic(&c4, &v4));
        assert!(are_isomorphic(&c4, &FiniteGroup::dicyclic(1)));
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert!(are_isomorphic(&s3, &FiniteGroup::dihedral(3)));
    }

    #[test]
    fn quotient_order_times_kernel_is_group_order() {
        let d4 = FiniteGroup::dihedral(4);
        for n in crate::group::normal_subgroups(&d4) {
            let (q, proj) = quotient_group(&d4, &n).unwrap();
            assert_eq!(q.order() * n.len(), d4.order());
            assert!(proj.is_surjective());
        }
    }
}

//! Subgroup enumeration, conjugacy classes of subgroups, coset actions and
//! centralizers in symmetric groups.

use std::collections::HashSet;
use std::sync::Arc;

use super::perm::{self, all_perms, compose, Perm, PermGroup};
use super::{FiniteGroup, GroupError, GroupHom, MAX_CENTRALIZER_DEGREE};

/// Orders up to which subgroups are found by scanning all subsets; larger
/// groups use breadth-first closure extension.
const SUBSET_SCAN_MAX_ORDER: usize = 16;

/// One conjugacy class of subgroups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubgroupClass {
    /// Lexicographically least conjugate, as a sorted element list.
    pub representative: Vec<usize>,
    /// Number of distinct conjugates.
    pub class_size: usize,
    /// Coset count `#G / #H`.
    pub index: usize,
}

/// Every subgroup of `g`, as sorted element lists, ordered by size then
/// lexicographically.
pub fn all_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut subs: Vec<Vec<usize>> = if n <= SUBSET_SCAN_MAX_ORDER {
        subgroups_by_subset_scan(g)
    } else {
        subgroups_by_extension(g)
    };
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    subs
}

fn subgroups_by_subset_scan(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut out = Vec::new();
    // A nonempty product-closed subset of a finite group is a subgroup, and
    // always contains the identity (bit 0).
    for mask in 0u32..(1u32 << n) {
        if mask & 1 == 0 || mask == 0 {
            continue;
        }
        let mut closed = true;
        'scan: for a in 0..n {
            if mask >> a & 1 == 0 {
                continue;
            }
            for b in 0..n {
                if mask >> b & 1 == 1 && mask >> g.mul(a, b) & 1 == 0 {
                    closed = false;
                    break 'scan;
                }
            }
        }
        if closed {
            out.push((0..n).filter(|&a| mask >> a & 1 == 1).collect());
        }
    }
    out
}

fn subgroups_by_extension(g: &FiniteGroup) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut queue = vec![vec![0usize]];
    seen.insert(vec![0]);
    while let Some(h) = queue.pop() {
        for x in 1..n {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = h.clone();
            seed.push(x);
            let k = g.closure(&seed);
            if seen.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    seen.into_iter().collect()
}

fn conjugate_subgroup(g: &FiniteGroup, h: &[usize], c: usize) -> Vec<usize> {
    let mut out: Vec<usize> = h.iter().map(|&a| g.conj(c, a)).collect();
    out.sort_unstable();
    out
}

/// One representative per conjugacy class of subgroups, sorted by subgroup
/// order and then by the representative itself.
pub fn subgroups_up_to_conjugacy(g: &FiniteGroup) -> Vec<SubgroupClass> {
    let subs = all_subgroups(g);
    let mut classified: HashSet<Vec<usize>> = HashSet::new();
    let mut classes = Vec::new();
    for h in &subs {
        if classified.contains(h) {
            continue;
        }
        let mut conjugates: Vec<Vec<usize>> =
            (0..g.order()).map(|c| conjugate_subgroup(g, h, c)).collect();
        conjugates.sort();
        conjugates.dedup();
        for c in &conjugates {
            classified.insert(c.clone());
        }
        let representative = conjugates[0].clone();
        let index = g.order() / representative.len();
        classes.push(SubgroupClass { representative, class_size: conjugates.len(), index });
    }
    classes.sort_by(|a, b| {
        a.representative
            .len()
            .cmp(&b.representative.len())
            .then_with(|| a.representative.cmp(&b.representative))
    });
    classes
}

/// The normal subgroups of `g`, including the trivial one and `g` itself.
pub fn normal_subgroups(g: &FiniteGroup) -> Vec<Vec<usize>> {
    subgroups_up_to_conjugacy(g)
        .into_iter()
        .filter(|c| c.class_size == 1)
        .map(|c| c.representative)
        .collect()
}

/// The permutation data of a left-translation action on left cosets.
#[derive(Debug, Clone)]
pub struct CosetPerms {
    /// Left cosets as sorted element lists, ordered by least element; the
    /// coset of the identity comes first.
    pub cosets: Vec<Vec<usize>>,
    /// For each group element, the induced permutation of coset indices.
    pub perm_of: Vec<Perm>,
    /// Distinct permutations in the image.
    pub image: PermGroup,
}

/// Left-translation action of `g` on the left cosets of the subgroup `h`.
/// This never materializes a symmetric-group Cayley table, so it works for
/// any coset count.
pub fn coset_permutation_action(g: &FiniteGroup, h: &[usize]) -> CosetPerms {
    let n = g.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for a in 0..n {
        if coset_of[a] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = h.iter().map(|&x| g.mul(a, x)).collect();
        coset.sort_unstable();
        let id = cosets.len();
        for &c in &coset {
            coset_of[c] = id;
        }
        cosets.push(coset);
    }
    // cosets are discovered in order of their least element because elements
    // are scanned in increasing order
    let d = cosets.len();
    let perm_of: Vec<Perm> = (0..n)
        .map(|a| {
            let mut p = vec![0usize; d];
            for (i, coset) in cosets.iter().enumerate() {
                p[i] = coset_of[g.mul(a, coset[0])];
            }
            p
        })
        .collect();
    let mut image: Vec<Perm> = perm_of.clone();
    image.sort();
    image.dedup();
    let image = PermGroup::from_elements(d, image);
    CosetPerms { cosets, perm_of, image }
}

/// The coset action as a homomorphism into the full symmetric group on
/// `G/H`, together with its image. The symmetric-group Cayley table only
/// exists up to degree [`super::MAX_SYM_DEGREE`].
pub fn coset_action(
    g: &Arc<FiniteGroup>,
    h: &SubgroupClass,
) -> Result<(GroupHom, PermGroup), GroupError> {
    let data = coset_permutation_action(g, &h.representative);
    let d = data.cosets.len();
    let sym = FiniteGroup::symmetric(d)?;
    let ranks = perm::perm_ranks(&all_perms(d));
    let map: Vec<usize> = data.perm_of.iter().map(|p| ranks[p]).collect();
    let hom = GroupHom::new(Arc::clone(g), sym, &map)?;
    Ok((hom, data.image))
}

/// Order of the centralizer of `image` inside the full symmetric group of
/// the same degree, by filtering all `d!` permutations.
pub fn centralizer_order_in_sym(image: &PermGroup) -> Result<u64, GroupError> {
    let d = image.degree();
    if d > MAX_CENTRALIZER_DEGREE {
        return Err(GroupError::DegreeTooLarge { degree: d, max: MAX_CENTRALIZER_DEGREE });
    }
    let mut count = 0u64;
    let mut sigma = perm::identity_perm(d);
    loop {
        if image.elements().iter().all(|p| compose(&sigma, p) == compose(p, &sigma)) {
            count += 1;
        }
        if !perm::next_perm(&mut sigma) {
            break;
        }
    }
    Ok(count)
}

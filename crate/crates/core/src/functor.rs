//! Functors between finite groupoids: classification, the three-stage
//! factorization through the 2-coimage and 1-image, the cardinality
//! order/equivalence criteria, and brute-force functor groupoids.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::group::count_homs;
use crate::groupoid::{FiniteGroupoid, GroupoidError, Mor, MAX_COMPOSE_ENTRIES};
use crate::Rat;

/// Cap on the number of functors a brute-force functor groupoid may have.
pub const MAX_FUNCTORS: usize = 1_000_000;
/// Cap on the number of natural isomorphisms materialized.
pub const MAX_NAT_ISOS: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FunctorError {
    #[error("object map has length {len}, expected {expected}")]
    ObjectMapLength { len: usize, expected: usize },
    #[error("morphism map has length {len}, expected {expected}")]
    MorphismMapLength { len: usize, expected: usize },
    #[error("object map value {value} out of range")]
    ObjectOutOfRange { value: usize },
    #[error("morphism map value {value} out of range")]
    MorphismOutOfRange { value: usize },
    #[error("morphism {morphism} is not sent to a morphism with matching endpoints")]
    EndpointNotPreserved { morphism: usize },
    #[error("identity of object {object} is not sent to an identity")]
    IdentityNotPreserved { object: usize },
    #[error("composition of morphisms ({f}, {g}) is not preserved")]
    CompositionNotPreserved { f: usize, g: usize },
    #[error("functors are not composable / not over the same groupoids")]
    GroupoidMismatch,
    #[error("precondition unmet: {reason}")]
    PreconditionUnmet { reason: String },
}

/// A functor between finite groupoids, as explicit object and morphism maps.
#[derive(Clone)]
pub struct GroupoidFunctor {
    source: Arc<FiniteGroupoid>,
    target: Arc<FiniteGroupoid>,
    object_map: Vec<u32>,
    morphism_map: Vec<u32>,
}

impl std::fmt::Debug for GroupoidFunctor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "GroupoidFunctor(obj={:?}, mor={:?})", self.object_map, self.morphism_map)
    }
}

impl PartialEq for GroupoidFunctor {
    fn eq(&self, other: &Self) -> bool {
        self.object_map == other.object_map
            && self.morphism_map == other.morphism_map
            && self.source == other.source
            && self.target == other.target
    }
}

impl GroupoidFunctor {
    pub fn new(
        source: Arc<FiniteGroupoid>,
        target: Arc<FiniteGroupoid>,
        object_map: Vec<usize>,
        morphism_map: Vec<usize>,
    ) -> Result<Self, FunctorError> {
        if object_map.len() != source.n_objects() {
            return Err(FunctorError::ObjectMapLength {
                len: object_map.len(),
                expected: source.n_objects(),
            });
        }
        if morphism_map.len() != source.n_morphisms() {
            return Err(FunctorError::MorphismMapLength {
                len: morphism_map.len(),
                expected: source.n_morphisms(),
            });
        }
        for &y in &object_map {
            if y >= target.n_objects() {
                return Err(FunctorError::ObjectOutOfRange { value: y });
            }
        }
        for &m in &morphism_map {
            if m >= target.n_morphisms() {
                return Err(FunctorError::MorphismOutOfRange { value: m });
            }
        }
        for (m, &fm) in morphism_map.iter().enumerate() {
            let src_m = source.morphism(m);
            let tgt_m = target.morphism(fm);
            if tgt_m.src as usize != object_map[src_m.src as usize]
                || tgt_m.dst as usize != object_map[src_m.dst as usize]
            {
                return Err(FunctorError::EndpointNotPreserved { morphism: m });
            }
        }
        for x in 0..source.n_objects() {
            if morphism_map[source.identity_of(x)] != target.identity_of(object_map[x]) {
                return Err(FunctorError::IdentityNotPreserved { object: x });
            }
        }
        for (f, g, h) in source.compose_entries() {
            if target.compose(morphism_map[f], morphism_map[g]) != Some(morphism_map[h]) {
                return Err(FunctorError::CompositionNotPreserved { f, g });
            }
        }
        Ok(GroupoidFunctor {
            source,
            target,
            object_map: object_map.into_iter().map(|x| x as u32).collect(),
            morphism_map: morphism_map.into_iter().map(|m| m as u32).collect(),
        })
    }

    pub(crate) fn new_trusted(
        source: Arc<FiniteGroupoid>,
        target: Arc<FiniteGroupoid>,
        object_map: Vec<u32>,
        morphism_map: Vec<u32>,
    ) -> Self {
        GroupoidFunctor { source, target, object_map, morphism_map }
    }

    pub fn identity(g: &Arc<FiniteGroupoid>) -> Self {
        GroupoidFunctor {
            source: Arc::clone(g),
            target: Arc::clone(g),
            object_map: (0..g.n_objects() as u32).collect(),
            morphism_map: (0..g.n_morphisms() as u32).collect(),
        }
    }

    pub fn source(&self) -> &Arc<FiniteGroupoid> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FiniteGroupoid> {
        &self.target
    }

    pub fn apply_object(&self, x: usize) -> usize {
        self.object_map[x] as usize
    }

    pub fn apply_morphism(&self, m: usize) -> usize {
        self.morphism_map[m] as usize
    }

    pub fn object_map(&self) -> Vec<usize> {
        self.object_map.iter().map(|&x| x as usize).collect()
    }

    pub fn morphism_map(&self) -> Vec<usize> {
        self.morphism_map.iter().map(|&m| m as usize).collect()
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupoidFunctor) -> Result<GroupoidFunctor, FunctorError> {
        if *other.target != *self.source {
            return Err(FunctorError::GroupoidMismatch);
        }
        Ok(GroupoidFunctor {
            source: Arc::clone(&other.source),
            target: Arc::clone(&self.target),
            object_map: other.object_map.iter().map(|&x| self.object_map[x as usize]).collect(),
            morphism_map: other
                .morphism_map
                .iter()
                .map(|&m| self.morphism_map[m as usize])
                .collect(),
        })
    }

    /// Full ⇔ every induced hom-set map is surjective; faithful ⇔ injective;
    /// essentially surjective ⇔ every target class is hit.
    pub fn classify(&self) -> FunctorClassification {
        let mut full = true;
        let mut faithful = true;
        for x in 0..self.source.n_objects() {
            for y in 0..self.source.n_objects() {
                let source_homs = self.source.hom_set(x, y);
                let mut image: Vec<usize> =
                    source_homs.iter().map(|&m| self.morphism_map[m] as usize).collect();
                image.sort_unstable();
                let before_dedup = image.len();
                image.dedup();
                if image.len() < before_dedup {
                    faithful = false;
                }
                let target_homs =
                    self.target.hom_set(self.object_map[x] as usize, self.object_map[y] as usize);
                if image.len() < target_homs.len() {
                    full = false;
                }
            }
        }
        let hit: std::collections::HashSet<usize> =
            self.object_map.iter().map(|&y| self.target.class_of(y as usize)).collect();
        let essentially_surjective = hit.len() == self.target.n_classes();
        FunctorClassification { full, faithful, essentially_surjective }
    }

    pub fn is_equivalence(&self) -> bool {
        let c = self.classify();
        c.full && c.faithful && c.essentially_surjective
    }
}

/// The three basic functor predicates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FunctorClassification {
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
}

/// The factorization of a functor through its 2-coimage and 1-image:
/// `F = stage0 ∘ stage1 ∘ stage2`, strictly.
#[derive(Debug, Clone)]
pub struct TernaryFactorization {
    pub im2: Arc<FiniteGroupoid>,
    pub im1: Arc<FiniteGroupoid>,
    /// `source → im2`: identity on objects, morphisms to their classes.
    pub stage2: GroupoidFunctor,
    /// `im2 → im1`.
    pub stage1: GroupoidFunctor,
    /// `im1 → target`: a full subgroupoid inclusion.
    pub stage0: GroupoidFunctor,
}

/// Factor `f` through its 2-coimage and 1-image.
///
/// The 2-coimage keeps the source objects and identifies morphisms with the
/// same image (classes numbered by least member); the 1-image is the full
/// subgroupoid of the target on all objects isomorphic to an image object.
pub fn ternary_factorize(f: &GroupoidFunctor) -> TernaryFactorization {
    let source = f.source();
    let target = f.target();

    // 2-coimage: classes of source morphisms under equal (endpoints, image)
    let mut class_of_mor: Vec<u32> = vec![0; source.n_morphisms()];
    let mut class_key: HashMap<(u32, u32, u32), u32> = HashMap::new();
    let mut class_repr: Vec<usize> = Vec::new();
    for m in 0..source.n_morphisms() {
        let mor = source.morphism(m);
        let key = (mor.src, mor.dst, f.morphism_map[m]);
        let next = class_repr.len() as u32;
        let cid = *class_key.entry(key).or_insert_with(|| {
            class_repr.push(m);
            next
        });
        class_of_mor[m] = cid;
    }
    let im2_mors: Vec<Mor> = class_repr.iter().map(|&m| source.morphism(m)).collect();
    let mut im2_compose: HashMap<(u32, u32), u32> = HashMap::new();
    for (a, b, c) in source.compose_entries() {
        im2_compose.insert((class_of_mor[a], class_of_mor[b]), class_of_mor[c]);
    }
    let im2_identities: Vec<u32> =
        (0..source.n_objects()).map(|x| class_of_mor[source.identity_of(x)]).collect();
    let im2_inverses: Vec<u32> =
        class_repr.iter().map(|&m| class_of_mor[source.inverse_of(m)]).collect();
    let im2 = Arc::new(FiniteGroupoid::from_parts_trusted(
        source.n_objects(),
        im2_mors,
        im2_compose,
        im2_identities,
        im2_inverses,
    ));

    // 1-image: full subgroupoid of the target on every object isomorphic to
    // an image object
    let hit_classes: std::collections::HashSet<usize> =
        f.object_map.iter().map(|&y| target.class_of(y as usize)).collect();
    let included: Vec<usize> =
        (0..target.n_objects()).filter(|&y| hit_classes.contains(&target.class_of(y))).collect();
    let obj_new: HashMap<usize, u32> =
        included.iter().enumerate().map(|(i, &y)| (y, i as u32)).collect();
    let mor_old: Vec<usize> = (0..target.n_morphisms())
        .filter(|&m| {
            let mor = target.morphism(m);
            obj_new.contains_key(&(mor.src as usize)) && obj_new.contains_key(&(mor.dst as usize))
        })
        .collect();
    let mor_new: HashMap<usize, u32> =
        mor_old.iter().enumerate().map(|(i, &m)| (m, i as u32)).collect();
    let im1_mors: Vec<Mor> = mor_old
        .iter()
        .map(|&m| {
            let mor = target.morphism(m);
            Mor { src: obj_new[&(mor.src as usize)], dst: obj_new[&(mor.dst as usize)] }
        })
        .collect();
    let mut im1_compose: HashMap<(u32, u32), u32> = HashMap::new();
    for (a, b, c) in target.compose_entries() {
        if let (Some(&na), Some(&nb)) = (mor_new.get(&a), mor_new.get(&b)) {
            im1_compose.insert((na, nb), mor_new[&c]);
        }
    }
    let im1_identities: Vec<u32> =
        included.iter().map(|&y| mor_new[&target.identity_of(y)]).collect();
    let im1_inverses: Vec<u32> =
        mor_old.iter().map(|&m| mor_new[&target.inverse_of(m)]).collect();
    let im1 = Arc::new(FiniteGroupoid::from_parts_trusted(
        included.len(),
        im1_mors,
        im1_compose,
        im1_identities,
        im1_inverses,
    ));

    let stage2 = GroupoidFunctor::new_trusted(
        Arc::clone(source),
        Arc::clone(&im2),
        (0..source.n_objects() as u32).collect(),
        class_of_mor,
    );
    let stage1 = GroupoidFunctor::new_trusted(
        Arc::clone(&im2),
        Arc::clone(&im1),
        f.object_map.iter().map(|&y| obj_new[&(y as usize)]).collect(),
        class_repr.iter().map(|&m| mor_new[&(f.morphism_map[m] as usize)]).collect(),
    );
    let stage0 = GroupoidFunctor::new_trusted(
        Arc::clone(&im1),
        Arc::clone(target),
        included.iter().map(|&y| y as u32).collect(),
        mor_old.iter().map(|&m| m as u32).collect(),
    );
    TernaryFactorization { im2, im1, stage2, stage1, stage0 }
}

/// Both cardinalities of a functor's endpoints, plus which order clauses
/// applied and whether every applied clause held.
#[derive(Debug, Clone)]
pub struct OrderProps {
    pub classification: FunctorClassification,
    pub source_cardinality: Rat,
    pub target_cardinality: Rat,
    /// `|source| ≤ |target|` was asserted because the functor is full.
    pub full_clause_applied: bool,
    /// `|source| ≥ |target|` was asserted because the functor is essentially
    /// surjective and faithful.
    pub surjective_faithful_clause_applied: bool,
    pub consistent: bool,
}

pub fn check_order_props(f: &GroupoidFunctor) -> OrderProps {
    let classification = f.classify();
    let source_cardinality = f.source().cardinality();
    let target_cardinality = f.target().cardinality();
    let full_clause_applied = classification.full;
    let surjective_faithful_clause_applied =
        classification.essentially_surjective && classification.faithful;
    let mut consistent = true;
    if full_clause_applied && source_cardinality > target_cardinality {
        consistent = false;
    }
    if surjective_faithful_clause_applied && source_cardinality < target_cardinality {
        consistent = false;
    }
    OrderProps {
        classification,
        source_cardinality,
        target_cardinality,
        full_clause_applied,
        surjective_faithful_clause_applied,
        consistent,
    }
}

/// When source and target have equal cardinality and the functor is
/// essentially surjective + full, essentially surjective + faithful, or
/// fully faithful, it must be an equivalence. Returns the brute-force
/// verdict.
pub fn decide_equivalence_via_card(f: &GroupoidFunctor) -> Result<bool, FunctorError> {
    let c = f.classify();
    let clause = (c.essentially_surjective && c.full)
        || (c.essentially_surjective && c.faithful)
        || (c.full && c.faithful);
    if !clause {
        return Err(FunctorError::PreconditionUnmet {
            reason: "no clause applies: need ess.surj.+full, ess.surj.+faithful, or fully faithful"
                .into(),
        });
    }
    if f.source().cardinality() != f.target().cardinality() {
        return Err(FunctorError::PreconditionUnmet {
            reason: "source and target cardinalities differ".into(),
        });
    }
    Ok(f.is_equivalence())
}

/// For a pair of opposing functors that are both full, or both essentially
/// surjective and faithful, both must be equivalences. Returns the
/// brute-force verdict for the conjunction.
pub fn mutual_functor_equivalence(
    f: &GroupoidFunctor,
    psi: &GroupoidFunctor,
) -> Result<bool, FunctorError> {
    if *f.source() != *psi.target() || *f.target() != *psi.source() {
        return Err(FunctorError::GroupoidMismatch);
    }
    let cf = f.classify();
    let cp = psi.classify();
    let both_full = cf.full && cp.full;
    let both_sf =
        cf.essentially_surjective && cf.faithful && cp.essentially_surjective && cp.faithful;
    if !both_full && !both_sf {
        return Err(FunctorError::PreconditionUnmet {
            reason: "need both functors full, or both essentially surjective and faithful".into(),
        });
    }
    Ok(f.is_equivalence() && psi.is_equivalence())
}

/// The groupoid of all functors `h → g` and all natural isomorphisms; the
/// object at index `i` is `functors[i]`.
#[derive(Debug)]
pub struct FunctorGroupoid {
    pub groupoid: Arc<FiniteGroupoid>,
    pub functors: Vec<GroupoidFunctor>,
}

/// Brute-force construction of the functor groupoid `g^h`.
///
/// Every natural isomorphism out of a functor `F` is a free choice of one
/// morphism `η_x` out of `F(x)` per object `x`; the codomain is the
/// conjugate functor `η F η⁻¹`. Enumerating those choices enumerates all
/// morphisms of the functor groupoid exactly once.
pub fn functor_groupoid(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
) -> Result<FunctorGroupoid, GroupoidError> {
    let functors = enumerate_functors(h, g)?;
    let n_func = functors.len();
    let index_of: HashMap<(Vec<u32>, Vec<u32>), usize> = functors
        .iter()
        .enumerate()
        .map(|(i, f)| ((f.object_map.clone(), f.morphism_map.clone()), i))
        .collect();
    let out_of: Vec<Vec<usize>> = (0..g.n_objects()).map(|y| g.morphisms_from(y)).collect();

    let mut total: usize = 0;
    for f in &functors {
        let mut per: usize = 1;
        for &y in &f.object_map {
            per = per.saturating_mul(out_of[y as usize].len());
        }
        total = total.saturating_add(per);
        if total > MAX_NAT_ISOS {
            return Err(GroupoidError::SizeLimit {
                what: "natural isomorphisms",
                count: total,
                max: MAX_NAT_ISOS,
            });
        }
    }

    let mut morphisms: Vec<Mor> = Vec::with_capacity(total);
    let mut data: Vec<(usize, Vec<u32>, usize)> = Vec::with_capacity(total);
    let mut mor_index: HashMap<(usize, Vec<u32>), usize> = HashMap::new();
    for (a, f) in functors.iter().enumerate() {
        let choice_sets: Vec<&[usize]> =
            f.object_map.iter().map(|&y| out_of[y as usize].as_slice()).collect();
        let mut pick = vec![0usize; h.n_objects()];
        loop {
            let eta: Vec<u32> =
                pick.iter().enumerate().map(|(x, &i)| choice_sets[x][i] as u32).collect();
            let obj_map: Vec<u32> = eta.iter().map(|&e| g.morphism(e as usize).dst).collect();
            let mor_map: Vec<u32> = (0..h.n_morphisms())
                .map(|m| {
                    let mor = h.morphism(m);
                    let fm = f.morphism_map[m] as usize;
                    let step = g
                        .compose(fm, g.inverse_of(eta[mor.src as usize] as usize))
                        .expect("composable by construction");
                    g.compose(eta[mor.dst as usize] as usize, step)
                        .expect("composable by construction") as u32
                })
                .collect();
            let b = index_of[&(obj_map, mor_map)];
            let id = morphisms.len();
            morphisms.push(Mor { src: a as u32, dst: b as u32 });
            mor_index.insert((a, eta.clone()), id);
            data.push((a, eta, b));

            if !advance_mixed_radix(&mut pick, &choice_sets) {
                break;
            }
        }
    }

    let mut in_of: Vec<Vec<usize>> = vec![Vec::new(); n_func];
    for (id, (_, _, b)) in data.iter().enumerate() {
        in_of[*b].push(id);
    }
    let mut compose: HashMap<(u32, u32), u32> = HashMap::new();
    for (id2, (b2, eta2, _)) in data.iter().enumerate() {
        for &id1 in &in_of[*b2] {
            if compose.len() >= MAX_COMPOSE_ENTRIES {
                return Err(GroupoidError::SizeLimit {
                    what: "composition table",
                    count: compose.len() + 1,
                    max: MAX_COMPOSE_ENTRIES,
                });
            }
            let (a1, eta1, _) = &data[id1];
            let composite: Vec<u32> = eta1
                .iter()
                .zip(eta2.iter())
                .map(|(&e1, &e2)| {
                    g.compose(e2 as usize, e1 as usize).expect("components composable") as u32
                })
                .collect();
            let target_id = mor_index[&(*a1, composite)];
            compose.insert((id2 as u32, id1 as u32), target_id as u32);
        }
    }
    let identity_of: Vec<u32> = functors
        .iter()
        .enumerate()
        .map(|(a, f)| {
            let eta: Vec<u32> =
                f.object_map.iter().map(|&y| g.identity_of(y as usize) as u32).collect();
            mor_index[&(a, eta)] as u32
        })
        .collect();
    let inverse_of: Vec<u32> = data
        .iter()
        .map(|(_, eta, b)| {
            let inv_eta: Vec<u32> =
                eta.iter().map(|&e| g.inverse_of(e as usize) as u32).collect();
            mor_index[&(*b, inv_eta)] as u32
        })
        .collect();
    let groupoid = Arc::new(FiniteGroupoid::from_parts_trusted(
        n_func,
        morphisms,
        compose,
        identity_of,
        inverse_of,
    ));
    Ok(FunctorGroupoid { groupoid, functors })
}

/// Advance a mixed-radix counter; returns false after wrapping to zero.
fn advance_mixed_radix(pick: &mut [usize], choice_sets: &[&[usize]]) -> bool {
    let mut x = pick.len();
    while x > 0 {
        x -= 1;
        pick[x] += 1;
        if pick[x] < choice_sets[x].len() {
            return true;
        }
        pick[x] = 0;
    }
    false
}

/// All functors `h → g`, ordered lexicographically by (object map, morphism
/// map).
pub fn enumerate_functors(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
) -> Result<Vec<GroupoidFunctor>, GroupoidError> {
    let n_obj = h.n_objects();
    if n_obj > 0 && g.n_objects() == 0 {
        return Ok(Vec::new());
    }
    let mut object_maps: usize = 1;
    for _ in 0..n_obj {
        object_maps = match object_maps.checked_mul(g.n_objects()) {
            Some(v) if v <= MAX_FUNCTORS => v,
            _ => {
                return Err(GroupoidError::SizeLimit {
                    what: "functor object maps",
                    count: usize::MAX,
                    max: MAX_FUNCTORS,
                })
            }
        };
    }
    // composition constraints become checkable once all involved slots are set
    let mut entries_by_max: Vec<Vec<(usize, usize, usize)>> = vec![Vec::new(); h.n_morphisms()];
    for (f, gg, c) in h.compose_entries() {
        entries_by_max[f.max(gg).max(c)].push((f, gg, c));
    }
    let mut out = Vec::new();
    let mut object_map = vec![0usize; n_obj];
    loop {
        enumerate_morphism_maps(h, g, &object_map, &entries_by_max, &mut out)?;
        let mut x = n_obj;
        let mut advanced = false;
        while x > 0 {
            x -= 1;
            object_map[x] += 1;
            if object_map[x] < g.n_objects() {
                advanced = true;
                break;
            }
            object_map[x] = 0;
        }
        if !advanced {
            break;
        }
    }
    Ok(out)
}

fn enumerate_morphism_maps(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
    object_map: &[usize],
    entries_by_max: &[Vec<(usize, usize, usize)>],
    out: &mut Vec<GroupoidFunctor>,
) -> Result<(), GroupoidError> {
    let n_mor = h.n_morphisms();
    if n_mor == 0 {
        out.push(GroupoidFunctor::new_trusted(
            Arc::clone(h),
            Arc::clone(g),
            object_map.iter().map(|&y| y as u32).collect(),
            Vec::new(),
        ));
        return Ok(());
    }
    let candidates: Vec<Vec<usize>> = (0..n_mor)
        .map(|m| {
            let mor = h.morphism(m);
            g.hom_set(object_map[mor.src as usize], object_map[mor.dst as usize])
        })
        .collect();
    let mut mor_map = vec![0u32; n_mor];
    mor_backtrack(h, g, object_map, entries_by_max, &candidates, &mut mor_map, 0, out)
}

#[allow(clippy::too_many_arguments)]
fn mor_backtrack(
    h: &Arc<FiniteGroupoid>,
    g: &Arc<FiniteGroupoid>,
    object_map: &[usize],
    entries_by_max: &[Vec<(usize, usize, usize)>],
    candidates: &[Vec<usize>],
    mor_map: &mut Vec<u32>,
    k: usize,
    out: &mut Vec<GroupoidFunctor>,
) -> Result<(), GroupoidError> {
    if k == mor_map.len() {
        if out.len() >= MAX_FUNCTORS {
            return Err(GroupoidError::SizeLimit {
                what: "functors",
                count: out.len() + 1,
                max: MAX_FUNCTORS,
            });
        }
        out.push(GroupoidFunctor::new_trusted(
            Arc::clone(h),
            Arc::clone(g),
            object_map.iter().map(|&y| y as u32).collect(),
            mor_map.clone(),
        ));
        return Ok(());
    }
    'candidates: for &v in &candidates[k] {
        mor_map[k] = v as u32;
        for &(f, gg, c) in &entries_by_max[k] {
            if g.compose(mor_map[f] as usize, mor_map[gg] as usize) != Some(mor_map[c] as usize) {
                continue 'candidates;
            }
        }
        mor_backtrack(h, g, object_map, entries_by_max, candidates, mor_map, k + 1, out)?;
    }
    Ok(())
}

/// Cardinality of the functor groupoid by the class-wise formula:
/// `Π over classes [y] of h of Σ over classes [x] of g of #hom(h_y, g_x)/#g_x`.
pub fn functor_groupoid_cardinality(h: &FiniteGroupoid, g: &FiniteGroupoid) -> Rat {
    let hs = h.skeleton();
    let gs = g.skeleton();
    let mut product = Rat::one();
    for hy in hs.components() {
        let mut sum = Rat::zero();
        for gx in gs.components() {
            let homs = count_homs(hy.aut(), gx.aut());
            sum += Rat::new(BigInt::from(homs), BigInt::from(gx.aut().order()));
        }
        product *= sum;
    }
    product
}

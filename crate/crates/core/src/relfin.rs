//! The slice category of finite groups over a fixed base group `G`.
//!
//! An object is a finite coproduct of group homomorphisms `K_i → G`
//! (equivalently, a relatively finite functor into the delooping of `G`,
//! split into components). A morphism between single components `S: H → G`
//! and `T: K → G` is a pair `(φ: H → K, g ∈ G)` with
//! `S(h) = g⁻¹ · T(φ(h)) · g` for all `h`, and two pairs are identified by
//! the action `k · (φ, g) = (conj_k ∘ φ, T(k)·g)` of `K`.
//!
//! Hom-groupoid cardinalities are exact rationals; the distinguisher
//! searches for a probe object whose hom cardinalities into two objects
//! differ.

use std::collections::HashSet;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::group::{
    enumerate_homs, normal_subgroups, quotient_group, small_groups_up_to, FiniteGroup, GroupError,
    GroupHom, Perm,
};
use crate::groupoid::{action_groupoid, FiniteGroupoid, GroupoidError};
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelFinError {
    #[error("objects live over different base groups")]
    BaseMismatch,
    #[error("operation needs a single-component object, got {components}")]
    NotSingleComponent { components: usize },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
}

/// A finite coproduct of homomorphisms into the base group, with the
/// component list kept in canonical order.
#[derive(Debug, Clone, PartialEq)]
pub struct RelFinObject {
    base: Arc<FiniteGroup>,
    components: Vec<GroupHom>,
}

fn component_key(h: &GroupHom) -> (usize, Vec<usize>, Vec<Vec<usize>>) {
    (h.source().order(), h.map(), h.source().table_rows())
}

impl RelFinObject {
    pub fn new(base: Arc<FiniteGroup>, components: Vec<GroupHom>) -> Result<Self, RelFinError> {
        for c in &components {
            if **c.target() != *base {
                return Err(RelFinError::BaseMismatch);
            }
        }
        let mut components = components;
        components.sort_by_key(component_key);
        Ok(RelFinObject { base, components })
    }

    pub fn empty(base: Arc<FiniteGroup>) -> Self {
        RelFinObject { base, components: Vec::new() }
    }

    pub fn single(component: GroupHom) -> Self {
        let base = Arc::clone(component.target());
        RelFinObject { base, components: vec![component] }
    }

    pub fn base(&self) -> &Arc<FiniteGroup> {
        &self.base
    }

    pub fn components(&self) -> &[GroupHom] {
        &self.components
    }

    pub fn coproduct(&self, other: &RelFinObject) -> Result<RelFinObject, RelFinError> {
        if *self.base != *other.base {
            return Err(RelFinError::BaseMismatch);
        }
        let mut components = self.components.clone();
        components.extend(other.components.iter().cloned());
        RelFinObject::new(Arc::clone(&self.base), components)
    }
}

/// A morphism datum between single components: `(φ, g)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HomPair {
    pub phi: GroupHom,
    pub base_elem: usize,
}

impl HomPair {
    /// Check the defining identity against explicit legs.
    pub fn is_valid_for(&self, s: &GroupHom, t: &GroupHom) -> bool {
        let g_group = s.target();
        let g = self.base_elem;
        (0..s.source().order()).all(|h| {
            s.apply(h) == g_group.mul(g_group.mul(g_group.inv(g), t.apply(self.phi.apply(h))), g)
        })
    }

    /// `(φ⁻¹, g⁻¹)` — a strict inverse whenever `φ` is an isomorphism.
    pub fn strict_inverse(&self, s: &GroupHom) -> HomPair {
        HomPair { phi: self.phi.inverse(), base_elem: s.target().inv(self.base_elem) }
    }
}

/// `second ∘ first`, composing maps and multiplying base elements.
pub fn compose_pairs(second: &HomPair, first: &HomPair, base: &FiniteGroup) -> HomPair {
    HomPair {
        phi: second.phi.compose(&first.phi),
        base_elem: base.mul(second.base_elem, first.base_elem),
    }
}

/// A single-component morphism is an equivalence exactly when its group map
/// is an isomorphism.
pub fn is_equivalence_morphism(pair: &HomPair) -> bool {
    pair.phi.is_isomorphism()
}

/// All pairs `(φ, g)` with `S(h) = g⁻¹·T(φ(h))·g`, ordered by the map table
/// of `φ` and then by `g`.
pub fn enumerate_hom_pairs(s: &GroupHom, t: &GroupHom) -> Result<Vec<HomPair>, RelFinError> {
    if *s.target() != *t.target() {
        return Err(RelFinError::BaseMismatch);
    }
    let base = s.target();
    let mut out = Vec::new();
    for phi in enumerate_homs(s.source(), t.source()) {
        for g in 0..base.order() {
            let ok = (0..s.source().order())
                .all(|h| s.apply(h) == base.mul(base.mul(base.inv(g), t.apply(phi.apply(h))), g));
            if ok {
                out.push(HomPair { phi: phi.clone(), base_elem: g });
            }
        }
    }
    Ok(out)
}

fn check_single(s: &RelFinObject) -> Result<&GroupHom, RelFinError> {
    match s.components() {
        [one] => Ok(one),
        cs => Err(RelFinError::NotSingleComponent { components: cs.len() }),
    }
}

/// `|hom(S, F)| = Σ over components T of F of #pairs(S, T) / #K_T`: each
/// term is the cardinality of the action groupoid of `K_T` on the pairs.
pub fn hom_groupoid_cardinality(s: &RelFinObject, f: &RelFinObject) -> Result<Rat, RelFinError> {
    let s_leg = check_single(s)?;
    hom_cardinality_filtered(s_leg, f, |_| true)
}

/// Same count restricted to pairs whose `φ` is injective. The `K`-action
/// preserves injectivity, so this is a union of orbits.
pub fn faithful_hom_cardinality(s: &RelFinObject, f: &RelFinObject) -> Result<Rat, RelFinError> {
    let s_leg = check_single(s)?;
    hom_cardinality_filtered(s_leg, f, |p| p.phi.is_injective())
}

fn hom_cardinality_filtered(
    s_leg: &GroupHom,
    f: &RelFinObject,
    keep: impl Fn(&HomPair) -> bool,
) -> Result<Rat, RelFinError> {
    if **s_leg.target() != **f.base() {
        return Err(RelFinError::BaseMismatch);
    }
    let mut card = Rat::zero();
    for t in f.components() {
        let pairs = enumerate_hom_pairs(s_leg, t)?;
        let kept = pairs.into_iter().filter(|p| keep(p)).count();
        card += Rat::new(BigInt::from(kept), BigInt::from(t.source().order()));
    }
    Ok(card)
}

/// The hom groupoid built explicitly: objects are pairs, morphisms are the
/// acting elements of each target component's group. A disjoint union of
/// action groupoids.
pub fn explicit_hom_groupoid(
    s: &RelFinObject,
    f: &RelFinObject,
) -> Result<FiniteGroupoid, RelFinError> {
    let s_leg = check_single(s)?;
    if **s_leg.target() != **f.base() {
        return Err(RelFinError::BaseMismatch);
    }
    let base = f.base();
    let mut result = FiniteGroupoid::empty();
    for t in f.components() {
        let pairs = enumerate_hom_pairs(s_leg, t)?;
        let k_group = t.source();
        if pairs.is_empty() {
            continue;
        }
        let index_of = |p: &HomPair| {
            pairs.iter().position(|q| q == p).expect("the action stays within the enumerated pairs")
        };
        let perms: Vec<Perm> = (0..k_group.order())
            .map(|k| {
                pairs
                    .iter()
                    .map(|p| {
                        let conj_phi_map: Vec<usize> = (0..p.phi.source().order())
                            .map(|h| k_group.conj(k, p.phi.apply(h)))
                            .collect();
                        let acted = HomPair {
                            phi: GroupHom::new(
                                Arc::clone(p.phi.source()),
                                Arc::clone(k_group),
                                &conj_phi_map,
                            )
                            .expect("conjugate of a homomorphism"),
                            base_elem: base.mul(t.apply(k), p.base_elem),
                        };
                        index_of(&acted)
                    })
                    .collect()
            })
            .collect();
        let component = action_groupoid(pairs.len(), k_group, &perms)?;
        result = result.coproduct(&component);
    }
    Ok(result)
}

/// An epi-side quotient of a single component `S: H → G`: a normal subgroup
/// `N ⊆ ker S` together with the induced object `H/N → G`.
#[derive(Debug, Clone)]
pub struct EQuotient {
    pub kernel: Vec<usize>,
    /// `H → H/N`.
    pub projection: GroupHom,
    /// The quotient object's leg `H/N → G`.
    pub quotient_leg: GroupHom,
}

/// All quotients of `s` along surjections, one per normal subgroup of the
/// kernel of the leg, ordered by kernel size then kernel elements. Distinct
/// kernels give inequivalent quotients, so no further deduplication is
/// needed.
pub fn e_quotients(s: &RelFinObject) -> Result<Vec<EQuotient>, RelFinError> {
    let leg = check_single(s)?;
    let h_group = leg.source();
    let kernel: HashSet<usize> = leg.kernel().into_iter().collect();
    let mut out = Vec::new();
    for n in normal_subgroups(h_group) {
        if !n.iter().all(|a| kernel.contains(a)) {
            continue;
        }
        let (q, projection) = quotient_group(h_group, &n)?;
        // induced map on cosets: well-defined because N ⊆ ker S
        let mut map = vec![0usize; q.order()];
        for h in 0..h_group.order() {
            map[projection.apply(h)] = leg.apply(h);
        }
        let quotient_leg = GroupHom::new(q, Arc::clone(leg.target()), &map)?;
        out.push(EQuotient { kernel: n, projection, quotient_leg });
    }
    Ok(out)
}

/// Both sides of the decomposition `|hom(S,F)| = Σ over quotients T of S of
/// |faithful(T,F)|`.
#[derive(Debug, Clone, PartialEq)]
pub struct DecompositionCheck {
    pub lhs: Rat,
    pub rhs: Rat,
    pub equal: bool,
}

pub fn verify_factor_decomposition(
    s: &RelFinObject,
    f: &RelFinObject,
) -> Result<DecompositionCheck, RelFinError> {
    let lhs = hom_groupoid_cardinality(s, f)?;
    let mut rhs = Rat::zero();
    for q in e_quotients(s)? {
        rhs += faithful_hom_cardinality(&RelFinObject::single(q.quotient_leg), f)?;
    }
    let equal = lhs == rhs;
    Ok(DecompositionCheck { lhs, rhs, equal })
}

/// Equivalence of single components: some pair `(φ, g)` with `φ` an
/// isomorphism.
pub fn components_equivalent(s: &GroupHom, t: &GroupHom) -> Result<bool, RelFinError> {
    if s.source().order() != t.source().order() {
        return Ok(false);
    }
    Ok(enumerate_hom_pairs(s, t)?.iter().any(is_equivalence_morphism))
}

/// Equivalence of objects: a bijection between component lists with every
/// matched pair equivalent.
pub fn decide_equivalence(f: &RelFinObject, f2: &RelFinObject) -> Result<bool, RelFinError> {
    if **f.base() != **f2.base() {
        return Err(RelFinError::BaseMismatch);
    }
    if f.components().len() != f2.components().len() {
        return Ok(false);
    }
    // component equivalence is transitive, so greedy matching is exact
    let mut used = vec![false; f2.components().len()];
    for s in f.components() {
        let mut matched = false;
        for (j, t) in f2.components().iter().enumerate() {
            if !used[j] && components_equivalent(s, t)? {
                used[j] = true;
                matched = true;
                break;
            }
        }
        if !matched {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A probe whose hom cardinalities into the two objects differ.
#[derive(Debug, Clone)]
pub struct DistinguisherWitness {
    pub probe: GroupHom,
    pub left: Rat,
    pub right: Rat,
}

/// Try probes in order; return the first that separates `f` from `f2`.
pub fn counting_distinguisher(
    f: &RelFinObject,
    f2: &RelFinObject,
    probes: &[GroupHom],
) -> Result<Option<DistinguisherWitness>, RelFinError> {
    if **f.base() != **f2.base() {
        return Err(RelFinError::BaseMismatch);
    }
    for probe in probes {
        let s = RelFinObject::single(probe.clone());
        let left = hom_groupoid_cardinality(&s, f)?;
        let right = hom_groupoid_cardinality(&s, f2)?;
        if left != right {
            return Ok(Some(DistinguisherWitness { probe: probe.clone(), left, right }));
        }
    }
    Ok(None)
}

/// Default probes: every component of either object, plus all their
/// quotient objects, deduplicated and canonically ordered.
pub fn default_probe_set(
    f: &RelFinObject,
    f2: &RelFinObject,
) -> Result<Vec<GroupHom>, RelFinError> {
    let mut probes: Vec<GroupHom> = Vec::new();
    for c in f.components().iter().chain(f2.components()) {
        probes.push(c.clone());
        for q in e_quotients(&RelFinObject::single(c.clone()))? {
            probes.push(q.quotient_leg);
        }
    }
    probes.sort_by_key(component_key);
    probes.dedup_by_key(|p| component_key(p));
    Ok(probes)
}

/// Exhaustive probes: every group of order at most `max_order` from the
/// built-in catalog, with every homomorphism into the base.
pub fn exhaustive_probe_set(base: &Arc<FiniteGroup>, max_order: usize) -> Vec<GroupHom> {
    let mut probes = Vec::new();
    for (_, h) in small_groups_up_to(max_order.min(12)) {
        probes.extend(enumerate_homs(&h, base));
    }
    probes
}

/// The three-stage factorization of a single-component morphism:
/// surjection, isomorphism, injection.
#[derive(Debug, Clone)]
pub struct RelFinFactorization {
    /// Leg of the coimage object `B(H/ker φ) → BG`.
    pub coimage_leg: GroupHom,
    /// Leg of the image object `B(im φ) → BG`.
    pub image_leg: GroupHom,
    /// `S → coimage`, with identity base element.
    pub stage_surjection: HomPair,
    /// `coimage → image`, carrying the original base element.
    pub stage_iso: HomPair,
    /// `image → T`, with identity base element.
    pub stage_injection: HomPair,
}

/// Factor `pair : s → t` as `H ↠ H/ker φ ≅ im φ ↪ K` with the base-element
/// data `(e, g, e)`.
pub fn relfin_factorize(
    s: &GroupHom,
    t: &GroupHom,
    pair: &HomPair,
) -> Result<RelFinFactorization, RelFinError> {
    let h_group = s.source();
    let k_group = t.source();
    let base = s.target();
    let phi = &pair.phi;
    let (q_group, projection) = quotient_group(h_group, &phi.kernel())?;
    // coimage leg sends a coset to S of any representative
    let mut coimage_map = vec![0usize; q_group.order()];
    let mut induced_map = vec![0usize; q_group.order()];
    for h in 0..h_group.order() {
        coimage_map[projection.apply(h)] = s.apply(h);
        induced_map[projection.apply(h)] = phi.apply(h);
    }
    let coimage_leg = GroupHom::new(Arc::clone(&q_group), Arc::clone(base), &coimage_map)?;
    let image_elems = phi.image();
    let image_group = k_group.subgroup_group(&image_elems)?;
    let image_leg = GroupHom::new(
        Arc::clone(&image_group),
        Arc::clone(base),
        &image_elems.iter().map(|&k| t.apply(k)).collect::<Vec<_>>(),
    )?;
    let iso_map: Vec<usize> = (0..q_group.order())
        .map(|c| image_elems.binary_search(&induced_map[c]).expect("image element"))
        .collect();
    let inclusion = GroupHom::new(Arc::clone(&image_group), Arc::clone(k_group), &image_elems)?;
    let stage_surjection = HomPair { phi: projection, base_elem: base.identity() };
    let stage_iso =
        HomPair { phi: GroupHom::new(q_group, image_group, &iso_map)?, base_elem: pair.base_elem };
    let stage_injection = HomPair { phi: inclusion, base_elem: base.identity() };
    Ok(RelFinFactorization { coimage_leg, image_leg, stage_surjection, stage_iso, stage_injection })
}

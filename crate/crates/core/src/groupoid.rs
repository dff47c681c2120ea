//! Finite groupoids as explicit object/morphism/composition tables.
//!
//! Groupoids are stored non-skeletally; isomorphism classes of objects are
//! recovered by union-find over the morphism list, and all cardinality
//! computation goes through the skeletal form. Cardinality is always an
//! exact rational.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::group::{are_isomorphic, FiniteGroup, Perm};
use crate::Rat;

/// Cap on composition-table entries for constructed groupoids.
pub const MAX_COMPOSE_ENTRIES: usize = 4_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupoidError {
    #[error("morphism {id} endpoint out of range")]
    EndpointOutOfRange { id: usize },
    #[error("composite list entry {entry} references an unknown morphism")]
    UnknownMorphism { entry: usize },
    #[error("morphisms {f} and {g} are composable but have no composite")]
    MissingComposite { f: usize, g: usize },
    #[error("morphisms {f} and {g} are not composable but have a composite")]
    SpuriousComposite { f: usize, g: usize },
    #[error("composite of {f} and {g} has wrong endpoints")]
    CompositeMismatch { f: usize, g: usize },
    #[error("conflicting composites listed for the pair ({f}, {g})")]
    DuplicateComposite { f: usize, g: usize },
    #[error("associativity fails on morphisms ({f}, {g}, {h})")]
    NotAssociative { f: usize, g: usize, h: usize },
    #[error("object {object} has no identity morphism")]
    NoIdentity { object: usize },
    #[error("morphism {morphism} has no two-sided inverse")]
    NoInverse { morphism: usize },
    #[error("{what} count {count} exceeds the cap {max}")]
    SizeLimit { what: &'static str, count: usize, max: usize },
    #[error("permutation action is invalid: {reason}")]
    InvalidAction { reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mor {
    pub src: u32,
    pub dst: u32,
}

#[derive(Clone)]
pub struct FiniteGroupoid {
    n_objects: usize,
    morphisms: Vec<Mor>,
    /// `(f, g) ↦ f∘g`, where `g` is applied first; defined iff `dst(g) = src(f)`.
    compose: HashMap<(u32, u32), u32>,
    identity_of: Vec<u32>,
    inverse_of: Vec<u32>,
    /// Object → isomorphism class, classes numbered by least member object.
    class_of: Vec<u32>,
    class_reps: Vec<u32>,
}

impl std::fmt::Debug for FiniteGroupoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "FiniteGroupoid(objects={}, morphisms={}, classes={})",
            self.n_objects,
            self.morphisms.len(),
            self.class_reps.len()
        )
    }
}

impl PartialEq for FiniteGroupoid {
    /// On-the-nose equality of the presented data (not equivalence).
    fn eq(&self, other: &Self) -> bool {
        self.n_objects == other.n_objects
            && self.morphisms == other.morphisms
            && self.identity_of == other.identity_of
            && self.compose == other.compose
    }
}

impl Eq for FiniteGroupoid {}

impl FiniteGroupoid {
    /// Validate explicit data: morphism endpoints, a complete and associative
    /// composition table, identities and inverses. `triples` lists
    /// `(f, g, f∘g)` with `g` applied first.
    pub fn new(
        n_objects: usize,
        morphisms: Vec<(usize, usize)>,
        triples: &[(usize, usize, usize)],
    ) -> Result<Self, GroupoidError> {
        let n_mor = morphisms.len();
        let mors: Vec<Mor> = morphisms
            .iter()
            .enumerate()
            .map(|(id, &(src, dst))| {
                if src >= n_objects || dst >= n_objects {
                    Err(GroupoidError::EndpointOutOfRange { id })
                } else {
                    Ok(Mor { src: src as u32, dst: dst as u32 })
                }
            })
            .collect::<Result<_, _>>()?;
        let mut compose: HashMap<(u32, u32), u32> = HashMap::new();
        for (entry, &(f, g, h)) in triples.iter().enumerate() {
            if f >= n_mor || g >= n_mor || h >= n_mor {
                return Err(GroupoidError::UnknownMorphism { entry });
            }
            if mors[g].dst != mors[f].src {
                return Err(GroupoidError::SpuriousComposite { f, g });
            }
            if mors[h].src != mors[g].src || mors[h].dst != mors[f].dst {
                return Err(GroupoidError::CompositeMismatch { f, g });
            }
            if let Some(&prev) = compose.get(&(f as u32, g as u32)) {
                if prev != h as u32 {
                    return Err(GroupoidError::DuplicateComposite { f, g });
                }
            }
            compose.insert((f as u32, g as u32), h as u32);
        }
        for f in 0..n_mor {
            for g in 0..n_mor {
                if mors[g].dst == mors[f].src
                    && !compose.contains_key(&(f as u32, g as u32))
                {
                    return Err(GroupoidError::MissingComposite { f, g });
                }
            }
        }
        // associativity over all composable triples
        for f in 0..n_mor as u32 {
            for g in 0..n_mor as u32 {
                let Some(&fg) = compose.get(&(f, g)) else { continue };
                for h in 0..n_mor as u32 {
                    let Some(&gh) = compose.get(&(g, h)) else { continue };
                    if compose[&(fg, h)] != compose[&(f, gh)] {
                        return Err(GroupoidError::NotAssociative {
                            f: f as usize,
                            g: g as usize,
                            h: h as usize,
                        });
                    }
                }
            }
        }
        // locate identities
        let mut identity_of = vec![u32::MAX; n_objects];
        for x in 0..n_objects as u32 {
            let found = (0..n_mor as u32).find(|&e| {
                mors[e as usize].src == x
                    && mors[e as usize].dst == x
                    && (0..n_mor as u32).all(|f| {
                        (mors[f as usize].dst != x || compose[&(e, f)] == f)
                            && (mors[f as usize].src != x || compose[&(f, e)] == f)
                    })
            });
            identity_of[x as usize] =
                found.ok_or(GroupoidError::NoIdentity { object: x as usize })?;
        }
        // locate inverses
        let mut inverse_of = vec![u32::MAX; n_mor];
        for f in 0..n_mor as u32 {
            let m = mors[f as usize];
            let found = (0..n_mor as u32).find(|&g| {
                mors[g as usize].src == m.dst
                    && mors[g as usize].dst == m.src
                    && compose[&(g, f)] == identity_of[m.src as usize]
                    && compose[&(f, g)] == identity_of[m.dst as usize]
            });
            inverse_of[f as usize] =
                found.ok_or(GroupoidError::NoInverse { morphism: f as usize })?;
        }
        Ok(Self::assemble(n_objects, mors, compose, identity_of, inverse_of))
    }

    /// Internal constructor for data that is correct by construction.
    pub(crate) fn from_parts_trusted(
        n_objects: usize,
        morphisms: Vec<Mor>,
        compose: HashMap<(u32, u32), u32>,
        identity_of: Vec<u32>,
        inverse_of: Vec<u32>,
    ) -> Self {
        Self::assemble(n_objects, morphisms, compose, identity_of, inverse_of)
    }

    fn assemble(
        n_objects: usize,
        morphisms: Vec<Mor>,
        compose: HashMap<(u32, u32), u32>,
        identity_of: Vec<u32>,
        inverse_of: Vec<u32>,
    ) -> Self {
        // union-find for isomorphism classes
        let mut parent: Vec<u32> = (0..n_objects as u32).collect();
        fn find(parent: &mut Vec<u32>, x: u32) -> u32 {
            if parent[x as usize] != x {
                let root = find(parent, parent[x as usize]);
                parent[x as usize] = root;
            }
            parent[x as usize]
        }
        for m in &morphisms {
            let a = find(&mut parent, m.src);
            let b = find(&mut parent, m.dst);
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi as usize] = lo;
            }
        }
        let mut class_of = vec![0u32; n_objects];
        let mut class_reps = Vec::new();
        let mut class_index: HashMap<u32, u32> = HashMap::new();
        for x in 0..n_objects as u32 {
            let root = find(&mut parent, x);
            let id = *class_index.entry(root).or_insert_with(|| {
                class_reps.push(root);
                (class_reps.len() - 1) as u32
            });
            class_of[x as usize] = id;
        }
        FiniteGroupoid { n_objects, morphisms, compose, identity_of, inverse_of, class_of, class_reps }
    }

    pub fn empty() -> Self {
        Self::discrete(0)
    }

    pub fn discrete(n: usize) -> Self {
        let morphisms: Vec<Mor> = (0..n as u32).map(|x| Mor { src: x, dst: x }).collect();
        let compose = (0..n as u32).map(|x| ((x, x), x)).collect();
        let identity_of: Vec<u32> = (0..n as u32).collect();
        let inverse_of: Vec<u32> = (0..n as u32).collect();
        Self::from_parts_trusted(n, morphisms, compose, identity_of, inverse_of)
    }

    /// One-object groupoid with automorphism group `g`.
    pub fn delooping(g: &Arc<FiniteGroup>) -> Self {
        Self::fattened_component(g, 1)
    }

    /// A groupoid equivalent to the delooping of `g`, with `k ≥ 1` mutually
    /// isomorphic objects. Morphism `(i → j, a)` composes by multiplying the
    /// group parts.
    pub fn fattened_component(g: &Arc<FiniteGroup>, k: usize) -> Self {
        assert!(k >= 1);
        let n = g.order();
        let mid = |i: usize, j: usize, a: usize| ((i * k + j) * n + a) as u32;
        let mut morphisms = Vec::with_capacity(k * k * n);
        for i in 0..k {
            for j in 0..k {
                for _a in 0..n {
                    morphisms.push(Mor { src: i as u32, dst: j as u32 });
                }
            }
        }
        let mut compose = HashMap::with_capacity(k * k * k * n * n);
        for i in 0..k {
            for j in 0..k {
                for a in 0..n {
                    for l in 0..k {
                        for b in 0..n {
                            // (j → l, b) ∘ (i → j, a) = (i → l, b·a)
                            compose.insert(
                                (mid(j, l, b), mid(i, j, a)),
                                mid(i, l, g.mul(b, a)),
                            );
                        }
                    }
                }
            }
        }
        let identity_of: Vec<u32> = (0..k).map(|i| mid(i, i, 0)).collect();
        let inverse_of: Vec<u32> = (0..k * k * n)
            .map(|m| {
                let a = m % n;
                let j = (m / n) % k;
                let i = m / n / k;
                mid(j, i, g.inv(a))
            })
            .collect();
        Self::from_parts_trusted(k, morphisms, compose, identity_of, inverse_of)
    }

    /// Coproduct of fattened deloopings: one entry `(group, object count)`
    /// per component.
    pub fn from_components(components: &[(Arc<FiniteGroup>, usize)]) -> Self {
        components
            .iter()
            .fold(Self::empty(), |acc, (g, k)| acc.coproduct(&Self::fattened_component(g, *k)))
    }

    pub fn n_objects(&self) -> usize {
        self.n_objects
    }

    pub fn n_morphisms(&self) -> usize {
        self.morphisms.len()
    }

    pub fn morphism(&self, id: usize) -> Mor {
        self.morphisms[id]
    }

    pub fn morphisms(&self) -> &[Mor] {
        &self.morphisms
    }

    pub fn identity_of(&self, object: usize) -> usize {
        self.identity_of[object] as usize
    }

    pub fn inverse_of(&self, id: usize) -> usize {
        self.inverse_of[id] as usize
    }

    /// `f∘g` if composable.
    pub fn compose(&self, f: usize, g: usize) -> Option<usize> {
        self.compose.get(&(f as u32, g as u32)).map(|&h| h as usize)
    }

    pub fn compose_entries(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.compose.iter().map(|(&(f, g), &h)| (f as usize, g as usize, h as usize))
    }

    pub fn hom_set(&self, src: usize, dst: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| {
                self.morphisms[m].src as usize == src && self.morphisms[m].dst as usize == dst
            })
            .collect()
    }

    pub fn morphisms_from(&self, src: usize) -> Vec<usize> {
        (0..self.morphisms.len())
            .filter(|&m| self.morphisms[m].src as usize == src)
            .collect()
    }

    pub fn n_classes(&self) -> usize {
        self.class_reps.len()
    }

    pub fn class_of(&self, object: usize) -> usize {
        self.class_of[object] as usize
    }

    pub fn class_rep(&self, class: usize) -> usize {
        self.class_reps[class] as usize
    }

    /// Groupoid cardinality: `Σ 1/#(vertex group)` over isomorphism classes.
    pub fn cardinality(&self) -> Rat {
        let mut card = Rat::zero();
        for &rep in &self.class_reps {
            let endos = self.hom_set(rep as usize, rep as usize).len();
            card += Rat::new(BigInt::from(1), BigInt::from(endos));
        }
        card
    }

    /// Vertex group at `object` as a Cayley-table group whose element `i`
    /// is the morphism `endo_ids[i]`; the identity morphism sits at 0.
    pub fn vertex_group(&self, object: usize) -> (Arc<FiniteGroup>, Vec<usize>) {
        let mut endo_ids = self.hom_set(object, object);
        let id = self.identity_of(object);
        endo_ids.retain(|&m| m != id);
        endo_ids.insert(0, id);
        let pos: HashMap<usize, usize> =
            endo_ids.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let rows: Vec<Vec<usize>> = endo_ids
            .iter()
            .map(|&a| {
                endo_ids
                    .iter()
                    .map(|&b| pos[&self.compose(a, b).expect("endomorphisms compose")])
                    .collect()
            })
            .collect();
        (Arc::new(FiniteGroup::from_rows_trusted(&rows)), endo_ids)
    }

    pub fn skeleton(&self) -> SkeletalForm {
        let components = self
            .class_reps
            .iter()
            .map(|&rep| {
                let (aut, endo_ids) = self.vertex_group(rep as usize);
                let class_size =
                    (0..self.n_objects).filter(|&x| self.class_of(x) == self.class_of(rep as usize)).count();
                SkeletalComponent { rep_object: rep as usize, class_size, aut, endo_ids }
            })
            .collect();
        SkeletalForm { components }
    }

    /// Equivalence of groupoids: a bijection of isomorphism classes with
    /// isomorphic vertex groups.
    pub fn is_equivalent(&self, other: &FiniteGroupoid) -> bool {
        let a = self.skeleton();
        let b = other.skeleton();
        if a.components.len() != b.components.len() {
            return false;
        }
        let mut used = vec![false; b.components.len()];
        for ca in &a.components {
            let matched = b.components.iter().enumerate().find(|(j, cb)| {
                !used[*j]
                    && cb.aut.order() == ca.aut.order()
                    && are_isomorphic(&ca.aut, &cb.aut)
            });
            match matched {
                Some((j, _)) => used[j] = true,
                None => return false,
            }
        }
        true
    }

    pub fn product(&self, other: &FiniteGroupoid) -> Result<FiniteGroupoid, GroupoidError> {
        let entries = self.compose.len().checked_mul(other.compose.len());
        match entries {
            Some(e) if e <= MAX_COMPOSE_ENTRIES => {}
            _ => {
                return Err(GroupoidError::SizeLimit {
                    what: "composition table",
                    count: entries.unwrap_or(usize::MAX),
                    max: MAX_COMPOSE_ENTRIES,
                })
            }
        }
        let nb = other.n_objects;
        let mb = other.morphisms.len() as u32;
        let obj = |x: u32, y: u32| x * nb as u32 + y;
        let mid = |f: u32, g: u32| f * mb + g;
        let mut morphisms = Vec::with_capacity(self.morphisms.len() * other.morphisms.len());
        for f in &self.morphisms {
            for g in &other.morphisms {
                morphisms.push(Mor { src: obj(f.src, g.src), dst: obj(f.dst, g.dst) });
            }
        }
        let mut compose = HashMap::with_capacity(self.compose.len() * other.compose.len());
        for (&(f1, g1), &h1) in &self.compose {
            for (&(f2, g2), &h2) in &other.compose {
                compose.insert((mid(f1, f2), mid(g1, g2)), mid(h1, h2));
            }
        }
        let identity_of = (0..self.n_objects as u32)
            .flat_map(|x| {
                (0..nb as u32).map(move |y| (x, y))
            })
            .map(|(x, y)| mid(self.identity_of[x as usize], other.identity_of[y as usize]))
            .collect();
        let inverse_of = self
            .inverse_of
            .iter()
            .flat_map(|&f| other.inverse_of.iter().map(move |&g| mid(f, g)))
            .collect();
        Ok(Self::from_parts_trusted(
            self.n_objects * nb,
            morphisms,
            compose,
            identity_of,
            inverse_of,
        ))
    }

    pub fn coproduct(&self, other: &FiniteGroupoid) -> FiniteGroupoid {
        let obj_off = self.n_objects as u32;
        let mor_off = self.morphisms.len() as u32;
        let mut morphisms = self.morphisms.clone();
        morphisms.extend(
            other.morphisms.iter().map(|m| Mor { src: m.src + obj_off, dst: m.dst + obj_off }),
        );
        let mut compose = self.compose.clone();
        compose.extend(
            other.compose.iter().map(|(&(f, g), &h)| ((f + mor_off, g + mor_off), h + mor_off)),
        );
        let mut identity_of = self.identity_of.clone();
        identity_of.extend(other.identity_of.iter().map(|&e| e + mor_off));
        let mut inverse_of = self.inverse_of.clone();
        inverse_of.extend(other.inverse_of.iter().map(|&f| f + mor_off));
        Self::from_parts_trusted(
            self.n_objects + other.n_objects,
            morphisms,
            compose,
            identity_of,
            inverse_of,
        )
    }
}

/// Action groupoid `X // G` for a permutation action of `group` on
/// `{0, …, x_size−1}`: objects are points, morphisms are pairs `(x, g)`.
///
/// `perms[g]` must be the permutation by which element `g` acts, and the
/// assignment must be a homomorphism.
pub fn action_groupoid(
    x_size: usize,
    group: &Arc<FiniteGroup>,
    perms: &[Perm],
) -> Result<FiniteGroupoid, GroupoidError> {
    let n = group.order();
    if perms.len() != n {
        return Err(GroupoidError::InvalidAction {
            reason: format!("expected {n} permutations, got {}", perms.len()),
        });
    }
    for (g, p) in perms.iter().enumerate() {
        if p.len() != x_size || !crate::group::is_permutation(p) {
            return Err(GroupoidError::InvalidAction {
                reason: format!("image of element {g} is not a permutation of the set"),
            });
        }
    }
    if perms[0] != crate::group::identity_perm(x_size) {
        return Err(GroupoidError::InvalidAction {
            reason: "identity element must act as the identity".into(),
        });
    }
    for a in 0..n {
        for b in 0..n {
            let ab = group.mul(a, b);
            for x in 0..x_size {
                if perms[ab][x] != perms[a][perms[b][x]] {
                    return Err(GroupoidError::InvalidAction {
                        reason: format!("not a homomorphism at elements ({a}, {b})"),
                    });
                }
            }
        }
    }
    let entries = x_size * n * n;
    if entries > MAX_COMPOSE_ENTRIES {
        return Err(GroupoidError::SizeLimit {
            what: "composition table",
            count: entries,
            max: MAX_COMPOSE_ENTRIES,
        });
    }
    let mid = |x: usize, g: usize| (x * n + g) as u32;
    let mut morphisms = Vec::with_capacity(x_size * n);
    for x in 0..x_size {
        for g in 0..n {
            morphisms.push(Mor { src: x as u32, dst: perms[g][x] as u32 });
        }
    }
    let mut compose = HashMap::with_capacity(entries);
    for x in 0..x_size {
        for g in 0..n {
            let y = perms[g][x];
            for h in 0..n {
                // (y, h) ∘ (x, g) = (x, h·g)
                compose.insert((mid(y, h), mid(x, g)), mid(x, group.mul(h, g)));
            }
        }
    }
    let identity_of = (0..x_size).map(|x| mid(x, 0)).collect();
    let inverse_of = (0..x_size)
        .flat_map(|x| (0..n).map(move |g| (x, g)))
        .map(|(x, g)| mid(perms[g][x], group.inv(g)))
        .collect();
    Ok(FiniteGroupoid::from_parts_trusted(x_size, morphisms, compose, identity_of, inverse_of))
}

#[derive(Debug, Clone)]
pub struct SkeletalComponent {
    pub rep_object: usize,
    pub class_size: usize,
    aut: Arc<FiniteGroup>,
    /// Endomorphism morphism-ids at the representative, aligned with the
    /// element indices of `aut`.
    pub endo_ids: Vec<usize>,
}

impl SkeletalComponent {
    pub fn aut(&self) -> &Arc<FiniteGroup> {
        &self.aut
    }
}

/// Skeletal form: one (representative, automorphism group) per class.
#[derive(Debug, Clone)]
pub struct SkeletalForm {
    components: Vec<SkeletalComponent>,
}

impl SkeletalForm {
    pub fn components(&self) -> &[SkeletalComponent] {
        &self.components
    }

    pub fn cardinality(&self) -> Rat {
        let mut card = Rat::zero();
        for c in &self.components {
            card += Rat::new(BigInt::from(1), BigInt::from(c.aut.order()));
        }
        card
    }
}

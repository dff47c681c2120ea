//! Shared generators for the randomized test populations: groupoids built
//! from known component data, and functors assembled from per-component
//! choices (base object, vertex-group homomorphism, one out-morphism per
//! object).

#![allow(dead_code)]

use std::sync::Arc;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use grpdcard::functor::GroupoidFunctor;
use grpdcard::group::{
    enumerate_homs, quotient_group, small_groups_up_to, FiniteGroup, GroupHom,
};
use grpdcard::groupoid::FiniteGroupoid;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A groupoid together with the component data it was built from, so tests
/// can construct functors without reverse-engineering morphism ids.
pub struct GroupoidSpecimen {
    pub groupoid: Arc<FiniteGroupoid>,
    pub parts: Vec<Part>,
}

pub struct Part {
    pub group: Arc<FiniteGroup>,
    pub n_objects: usize,
    pub object_offset: usize,
    pub morphism_offset: usize,
}

impl GroupoidSpecimen {
    pub fn build(parts_spec: &[(Arc<FiniteGroup>, usize)]) -> Self {
        let groupoid = Arc::new(FiniteGroupoid::from_components(parts_spec));
        let mut parts = Vec::new();
        let mut object_offset = 0;
        let mut morphism_offset = 0;
        for (group, k) in parts_spec {
            parts.push(Part {
                group: Arc::clone(group),
                n_objects: *k,
                object_offset,
                morphism_offset,
            });
            object_offset += k;
            morphism_offset += k * k * group.order();
        }
        GroupoidSpecimen { groupoid, parts }
    }

    /// Global morphism id of the component morphism `(i → j, a)` of part `p`.
    pub fn part_morphism(&self, p: usize, i: usize, j: usize, a: usize) -> usize {
        let part = &self.parts[p];
        part.morphism_offset + (i * part.n_objects + j) * part.group.order() + a
    }
}

/// One functor component: send the part to `base_object`'s class via the
/// vertex-group map `theta`, with an arbitrary out-morphism per object.
pub struct ComponentChoice {
    pub base_object: usize,
    pub theta: GroupHom,
    pub out_morphisms: Vec<usize>,
}

pub fn assemble_functor(
    src: &GroupoidSpecimen,
    tgt: &Arc<FiniteGroupoid>,
    choices: &[ComponentChoice],
) -> GroupoidFunctor {
    let mut object_map = vec![0usize; src.groupoid.n_objects()];
    let mut morphism_map = vec![0usize; src.groupoid.n_morphisms()];
    for (p, choice) in choices.iter().enumerate() {
        let part = &src.parts[p];
        let (_, endo_ids) = tgt.vertex_group(choice.base_object);
        for (local, &m) in choice.out_morphisms.iter().enumerate() {
            object_map[part.object_offset + local] = tgt.morphism(m).dst as usize;
        }
        for i in 0..part.n_objects {
            let m_i_inv = tgt.inverse_of(choice.out_morphisms[i]);
            for j in 0..part.n_objects {
                let m_j = choice.out_morphisms[j];
                for a in 0..part.group.order() {
                    let theta_a = endo_ids[choice.theta.apply(a)];
                    let step = tgt.compose(theta_a, m_i_inv).expect("theta(a) ∘ m_i⁻¹");
                    let image = tgt.compose(m_j, step).expect("m_j ∘ …");
                    morphism_map[src.part_morphism(p, i, j, a)] = image;
                }
            }
        }
    }
    GroupoidFunctor::new(
        Arc::clone(&src.groupoid),
        Arc::clone(tgt),
        object_map,
        morphism_map,
    )
    .expect("assembled maps form a functor")
}

pub fn group_pool(max_order: usize) -> Vec<Arc<FiniteGroup>> {
    small_groups_up_to(max_order).into_iter().map(|(_, g)| g).collect()
}

pub fn random_specimen(
    rng: &mut ChaCha8Rng,
    max_classes: usize,
    max_vertex_order: usize,
    max_objects_per_class: usize,
) -> GroupoidSpecimen {
    let pool = group_pool(max_vertex_order);
    let n = rng.gen_range(1..=max_classes);
    let parts: Vec<(Arc<FiniteGroup>, usize)> = (0..n)
        .map(|_| {
            (
                Arc::clone(pool.choose(rng).expect("pool nonempty")),
                rng.gen_range(1..=max_objects_per_class),
            )
        })
        .collect();
    GroupoidSpecimen::build(&parts)
}

/// A fresh fattening of the same component groups (so the result is
/// equivalent to `src.groupoid` by construction).
pub fn refattened(rng: &mut ChaCha8Rng, src: &GroupoidSpecimen, max_objects: usize) -> GroupoidSpecimen {
    let parts: Vec<(Arc<FiniteGroup>, usize)> = src
        .parts
        .iter()
        .map(|p| (Arc::clone(&p.group), rng.gen_range(1..=max_objects)))
        .collect();
    GroupoidSpecimen::build(&parts)
}

fn random_component_choice(
    rng: &mut ChaCha8Rng,
    part_group: &Arc<FiniteGroup>,
    n_objects: usize,
    tgt: &Arc<FiniteGroupoid>,
    base_object: usize,
    theta: Option<GroupHom>,
) -> ComponentChoice {
    let theta = theta.unwrap_or_else(|| {
        let (aut, _) = tgt.vertex_group(base_object);
        let homs = enumerate_homs(part_group, &aut);
        homs.choose(rng).expect("at least the trivial homomorphism").clone()
    });
    let outs = tgt.morphisms_from(base_object);
    let out_morphisms =
        (0..n_objects).map(|_| *outs.choose(rng).expect("identity exists")).collect();
    ComponentChoice { base_object, theta, out_morphisms }
}

/// Arbitrary functor: independent random choices per component.
pub fn random_functor(
    rng: &mut ChaCha8Rng,
    src: &GroupoidSpecimen,
    tgt: &GroupoidSpecimen,
) -> GroupoidFunctor {
    let choices: Vec<ComponentChoice> = src
        .parts
        .iter()
        .map(|part| {
            let base_object = rng.gen_range(0..tgt.groupoid.n_objects());
            random_component_choice(rng, &part.group, part.n_objects, &tgt.groupoid, base_object, None)
        })
        .collect();
    assemble_functor(src, &tgt.groupoid, &choices)
}

/// Functor population entry: the functor plus the specimens it runs between.
pub struct FunctorSample {
    pub src: GroupoidSpecimen,
    pub tgt: GroupoidSpecimen,
    pub functor: GroupoidFunctor,
}

/// An equivalence between two fattenings of the same component groups:
/// identity vertex maps, part `p` to part `p`, arbitrary out-morphisms.
pub fn equivalence_functor(
    rng: &mut ChaCha8Rng,
    src: &GroupoidSpecimen,
    tgt: &GroupoidSpecimen,
) -> GroupoidFunctor {
    let choices: Vec<ComponentChoice> = src
        .parts
        .iter()
        .enumerate()
        .map(|(p, part)| {
            let base_object = tgt.parts[p].object_offset;
            let theta = GroupHom::identity(&part.group);
            let outs = tgt.groupoid.morphisms_from(base_object);
            let out_morphisms =
                (0..part.n_objects).map(|_| *outs.choose(rng).unwrap()).collect();
            ComponentChoice { base_object, theta, out_morphisms }
        })
        .collect();
    assemble_functor(src, &tgt.groupoid, &choices)
}

/// An equivalence: same component groups on both sides, identity vertex
/// maps, arbitrary fattenings and out-morphisms.
pub fn equivalence_sample(
    rng: &mut ChaCha8Rng,
    max_classes: usize,
    max_vertex_order: usize,
    max_objects: usize,
) -> FunctorSample {
    let src = random_specimen(rng, max_classes, max_vertex_order, max_objects);
    let tgt = refattened(rng, &src, max_objects);
    let functor = equivalence_functor(rng, &src, &tgt);
    FunctorSample { src, tgt, functor }
}

/// A full essentially surjective functor: target components are quotients of
/// the source components, mapped one to one via the projections.
pub fn full_surjective_sample(
    rng: &mut ChaCha8Rng,
    max_classes: usize,
    max_vertex_order: usize,
    max_objects: usize,
) -> FunctorSample {
    let src = random_specimen(rng, max_classes, max_vertex_order, max_objects);
    let mut projections = Vec::new();
    let mut tgt_parts = Vec::new();
    for part in &src.parts {
        let normals = grpdcard::group::normal_subgroups(&part.group);
        let n = normals.choose(rng).unwrap();
        let (q, proj) = quotient_group(&part.group, n).unwrap();
        tgt_parts.push((q, rng.gen_range(1..=max_objects)));
        projections.push(proj);
    }
    let tgt = GroupoidSpecimen::build(&tgt_parts);
    let choices: Vec<ComponentChoice> = src
        .parts
        .iter()
        .enumerate()
        .map(|(p, part)| {
            let base_object = tgt.parts[p].object_offset;
            let outs = tgt.groupoid.morphisms_from(base_object);
            let out_morphisms =
                (0..part.n_objects).map(|_| *outs.choose(rng).unwrap()).collect();
            ComponentChoice { base_object, theta: projections[p].clone(), out_morphisms }
        })
        .collect();
    let functor = assemble_functor(&src, &tgt.groupoid, &choices);
    FunctorSample { src, tgt, functor }
}

/// A faithful essentially surjective functor: target components enlarge the
/// source components by a direct factor, mapped one to one via inclusions.
pub fn faithful_surjective_sample(
    rng: &mut ChaCha8Rng,
    max_classes: usize,
    max_vertex_order: usize,
    max_objects: usize,
) -> FunctorSample {
    let src = random_specimen(rng, max_classes, max_vertex_order, max_objects);
    let mut inclusions = Vec::new();
    let mut tgt_parts = Vec::new();
    for part in &src.parts {
        let extra = FiniteGroup::cyclic(*[1usize, 2, 3].choose(rng).unwrap());
        let big = part.group.direct_product(&extra);
        let map: Vec<usize> = (0..part.group.order()).map(|a| a * extra.order()).collect();
        let incl = GroupHom::new(Arc::clone(&part.group), Arc::clone(&big), &map).unwrap();
        tgt_parts.push((big, rng.gen_range(1..=max_objects)));
        inclusions.push(incl);
    }
    let tgt = GroupoidSpecimen::build(&tgt_parts);
    let choices: Vec<ComponentChoice> = src
        .parts
        .iter()
        .enumerate()
        .map(|(p, part)| {
            let base_object = tgt.parts[p].object_offset;
            let outs = tgt.groupoid.morphisms_from(base_object);
            let out_morphisms =
                (0..part.n_objects).map(|_| *outs.choose(rng).unwrap()).collect();
            ComponentChoice { base_object, theta: inclusions[p].clone(), out_morphisms }
        })
        .collect();
    let functor = assemble_functor(&src, &tgt.groupoid, &choices);
    FunctorSample { src, tgt, functor }
}

/// Mixed population for the randomized criteria.
pub fn functor_population(rng: &mut ChaCha8Rng, count: usize) -> Vec<FunctorSample> {
    let mut out = Vec::with_capacity(count);
    for i in 0..count {
        let sample = match i % 4 {
            0 => equivalence_sample(rng, 3, 8, 2),
            1 => full_surjective_sample(rng, 3, 8, 2),
            2 => faithful_surjective_sample(rng, 2, 8, 2),
            _ => {
                let src = random_specimen(rng, 3, 8, 2);
                let tgt = random_specimen(rng, 3, 8, 2);
                let functor = random_functor(rng, &src, &tgt);
                FunctorSample { src, tgt, functor }
            }
        };
        out.push(sample);
    }
    out
}

use grpdcard::group::{all_perms, compose, identity_perm, Perm};

/// Number of homomorphisms from a named catalog group into the symmetric
/// group of degree `n`, by counting solutions of a presentation among
/// permutations. Completely independent of the Cayley-table machinery.
pub fn presentation_hom_count_into_sym(name: &str, n: usize) -> u64 {
    let perms = all_perms(n);
    let id = identity_perm(n);
    let pow = |p: &Perm, k: usize| -> Perm {
        let mut acc = id.clone();
        for _ in 0..k {
            acc = compose(&acc, p);
        }
        acc
    };
    let of_order_dividing =
        |k: usize| -> Vec<&Perm> { perms.iter().filter(|p| pow(p, k) == id).collect() };
    let commute = |a: &Perm, b: &Perm| compose(a, b) == compose(b, a);
    let inv = |p: &Perm| grpdcard::group::invert(p);
    match name {
        "C1" => 1,
        "C2" | "C3" | "C4" | "C5" | "C6" | "C7" | "C8" | "C9" | "C10" | "C11" | "C12" => {
            let k: usize = name[1..].parse().unwrap();
            of_order_dividing(k).len() as u64
        }
        "C2xC2" => {
            let xs = of_order_dividing(2);
            xs.iter()
                .map(|x| xs.iter().filter(|y| commute(x, y)).count() as u64)
                .sum()
        }
        "C2xC2xC2" => {
            let xs = of_order_dividing(2);
            let mut total = 0u64;
            for x in &xs {
                for y in &xs {
                    if !commute(x, y) {
                        continue;
                    }
                    total += xs.iter().filter(|z| commute(x, z) && commute(y, z)).count() as u64;
                }
            }
            total
        }
        "C4xC2" => {
            let xs = of_order_dividing(4);
            let ys = of_order_dividing(2);
            xs.iter()
                .map(|x| ys.iter().filter(|y| commute(x, y)).count() as u64)
                .sum()
        }
        "C6xC2" => {
            let xs = of_order_dividing(6);
            let ys = of_order_dividing(2);
            xs.iter()
                .map(|x| ys.iter().filter(|y| commute(x, y)).count() as u64)
                .sum()
        }
        "C3xC3" => {
            let xs = of_order_dividing(3);
            xs.iter()
                .map(|x| xs.iter().filter(|y| commute(x, y)).count() as u64)
                .sum()
        }
        "S3" | "D4" | "D5" | "D6" => {
            // ⟨r, s | rᵏ = s² = e, s r s⁻¹ = r⁻¹⟩
            let k: usize = match name {
                "S3" => 3,
                "D4" => 4,
                "D5" => 5,
                _ => 6,
            };
            let rs = of_order_dividing(k);
            let ss = of_order_dividing(2);
            let mut total = 0u64;
            for r in &rs {
                let r_inv = inv(r);
                for s in &ss {
                    if compose(&compose(s, r), &inv(s)) == r_inv {
                        total += 1;
                    }
                }
            }
            total
        }
        "Q8" | "Dic3" => {
            // ⟨a, b | a²ᵐ = e, b² = aᵐ, b a b⁻¹ = a⁻¹⟩
            let m: usize = if name == "Q8" { 2 } else { 3 };
            let a_s = of_order_dividing(2 * m);
            let mut total = 0u64;
            for a in &a_s {
                let a_inv = inv(a);
                let a_m = pow(a, m);
                for b in perms.iter() {
                    if compose(b, b) == a_m && compose(&compose(b, a), &inv(b)) == a_inv {
                        total += 1;
                    }
                }
            }
            total
        }
        "A4" => {
            // ⟨s, t | s² = t³ = (s t)³ = e⟩
            let ss = of_order_dividing(2);
            let ts = of_order_dividing(3);
            let mut total = 0u64;
            for s in &ss {
                for t in &ts {
                    if pow(&compose(s, t), 3) == id {
                        total += 1;
                    }
                }
            }
            total
        }
        other => panic!("no presentation for {other}"),
    }
}


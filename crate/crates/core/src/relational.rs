//! Finite relational structures: homomorphism counting, quotients by
//! partitions, the hom/injective decomposition, and the counting-based
//! isomorphism test.
//!
//! Structures are compared up to isomorphism through a canonical form that
//! minimizes the relation encoding over all universe permutations, so the
//! universe is capped at [`MAX_CANONICAL_UNIVERSE`] elements for those
//! operations.

use std::collections::HashSet;

use thiserror::Error;

use crate::group::all_perms;

/// Factorial canonicalization cap.
pub const MAX_CANONICAL_UNIVERSE: usize = 8;
/// Bell-number cap for the partition sum.
pub const MAX_PARTITION_UNIVERSE: usize = 6;
/// Cap on total relation cells (`Σ nᵃ`) when enumerating all structures.
pub const MAX_ENUMERATION_CELLS: u32 = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationalError {
    #[error("signatures differ")]
    SignatureMismatch,
    #[error("relation {relation} expects arity {expected}, tuple has length {got}")]
    ArityMismatch { relation: usize, expected: usize, got: usize },
    #[error("tuple entry {entry} is outside the universe of size {universe}")]
    EntryOutOfRange { entry: usize, universe: usize },
    #[error("universe size {size} exceeds the cap {max}")]
    UniverseTooLarge { size: usize, max: usize },
    #[error("bound {bound} is smaller than a structure of size {needed}")]
    BoundTooSmall { bound: usize, needed: usize },
    #[error("enumeration space of {cells} relation cells exceeds the cap {max}")]
    EnumerationTooLarge { cells: u32, max: u32 },
    #[error("partition is not a surjection onto an initial block range")]
    InvalidPartition,
}

/// A finite set with a tuple of finitary relations. Tuples are kept sorted
/// and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RelationalStructure {
    signature: Vec<usize>,
    n: usize,
    relations: Vec<Vec<Vec<usize>>>,
}

impl RelationalStructure {
    pub fn new(
        signature: Vec<usize>,
        n: usize,
        relations: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self, RelationalError> {
        if relations.len() != signature.len() {
            return Err(RelationalError::SignatureMismatch);
        }
        let mut cleaned = Vec::with_capacity(relations.len());
        for (i, tuples) in relations.into_iter().enumerate() {
            let arity = signature[i];
            for t in &tuples {
                if t.len() != arity {
                    return Err(RelationalError::ArityMismatch {
                        relation: i,
                        expected: arity,
                        got: t.len(),
                    });
                }
                for &e in t {
                    if e >= n {
                        return Err(RelationalError::EntryOutOfRange { entry: e, universe: n });
                    }
                }
            }
            let mut tuples = tuples;
            tuples.sort();
            tuples.dedup();
            cleaned.push(tuples);
        }
        Ok(RelationalStructure { signature, n, relations: cleaned })
    }

    /// A digraph (single binary relation) on `n` vertices.
    pub fn digraph(n: usize, edges: &[(usize, usize)]) -> Result<Self, RelationalError> {
        Self::new(vec![2], n, vec![edges.iter().map(|&(a, b)| vec![a, b]).collect()])
    }

    pub fn empty(signature: Vec<usize>) -> Self {
        let relations = vec![Vec::new(); signature.len()];
        RelationalStructure { signature, n: 0, relations }
    }

    pub fn signature(&self) -> &[usize] {
        &self.signature
    }

    pub fn universe_size(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Vec<Vec<usize>>] {
        &self.relations
    }

    fn relabel(&self, perm: &[usize]) -> RelationalStructure {
        let relations = self
            .relations
            .iter()
            .map(|tuples| {
                let mut mapped: Vec<Vec<usize>> =
                    tuples.iter().map(|t| t.iter().map(|&e| perm[e]).collect()).collect();
                mapped.sort();
                mapped
            })
            .collect();
        RelationalStructure { signature: self.signature.clone(), n: self.n, relations }
    }

    /// Canonical form: the minimum relabeling over all universe
    /// permutations.
    pub fn canonical_form(&self) -> Result<RelationalStructure, RelationalError> {
        if self.n > MAX_CANONICAL_UNIVERSE {
            return Err(RelationalError::UniverseTooLarge {
                size: self.n,
                max: MAX_CANONICAL_UNIVERSE,
            });
        }
        let mut best: Option<RelationalStructure> = None;
        for perm in all_perms(self.n) {
            let candidate = self.relabel(&perm);
            if best.as_ref().is_none_or(|b| candidate.relations < b.relations) {
                best = Some(candidate);
            }
        }
        Ok(best.unwrap_or_else(|| self.clone()))
    }
}

/// Backtracking isomorphism search, independent of the canonical form.
pub fn are_isomorphic(
    a: &RelationalStructure,
    b: &RelationalStructure,
) -> Result<bool, RelationalError> {
    if a.signature != b.signature {
        return Err(RelationalError::SignatureMismatch);
    }
    if a.n != b.n {
        return Ok(false);
    }
    if a.relations.iter().zip(&b.relations).any(|(ra, rb)| ra.len() != rb.len()) {
        return Ok(false);
    }
    let b_sets: Vec<HashSet<&[usize]>> =
        b.relations.iter().map(|r| r.iter().map(|t| t.as_slice()).collect()).collect();
    let mut map = vec![usize::MAX; a.n];
    let mut used = vec![false; a.n];
    fn rec(
        a: &RelationalStructure,
        b_sets: &[HashSet<&[usize]>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        k: usize,
    ) -> bool {
        if k == a.n {
            // a bijection preserving relations forwards, with equal relation
            // sizes, is an isomorphism
            return true;
        }
        'candidates: for v in 0..a.n {
            if used[v] {
                continue;
            }
            map[k] = v;
            for (i, tuples) in a.relations.iter().enumerate() {
                for t in tuples {
                    if t.iter().any(|&e| e > k) || !t.contains(&k) {
                        continue;
                    }
                    let image: Vec<usize> = t.iter().map(|&e| map[e]).collect();
                    if !b_sets[i].contains(image.as_slice()) {
                        map[k] = usize::MAX;
                        continue 'candidates;
                    }
                }
            }
            used[v] = true;
            if rec(a, b_sets, map, used, k + 1) {
                return true;
            }
            used[v] = false;
            map[k] = usize::MAX;
        }
        false
    }
    Ok(rec(a, &b_sets, &mut map, &mut used, 0))
}

/// Number of relation-preserving maps `c → a`.
pub fn count_homs(
    c: &RelationalStructure,
    a: &RelationalStructure,
) -> Result<u64, RelationalError> {
    count_maps(c, a, false)
}

/// Number of injective relation-preserving maps `c → a`.
pub fn count_injective_homs(
    c: &RelationalStructure,
    a: &RelationalStructure,
) -> Result<u64, RelationalError> {
    count_maps(c, a, true)
}

fn count_maps(
    c: &RelationalStructure,
    a: &RelationalStructure,
    injective: bool,
) -> Result<u64, RelationalError> {
    if c.signature != a.signature {
        return Err(RelationalError::SignatureMismatch);
    }
    if injective && c.n > a.n {
        return Ok(0);
    }
    // tuples become checkable at the depth of their largest element
    let mut checks: Vec<Vec<(usize, &Vec<usize>)>> = vec![Vec::new(); c.n];
    for (i, tuples) in c.relations.iter().enumerate() {
        for t in tuples {
            if let Some(&max) = t.iter().max() {
                checks[max].push((i, t));
            } else if !a.relations[i].contains(&Vec::new()) {
                // nullary tuple with no counterpart in the target
                return Ok(0);
            }
        }
    }
    let a_sets: Vec<HashSet<&[usize]>> =
        a.relations.iter().map(|r| r.iter().map(|t| t.as_slice()).collect()).collect();
    let mut map = vec![0usize; c.n];
    let mut used = vec![false; a.n];
    let mut scratch = Vec::new();
    let mut count = 0u64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        c_n: usize,
        a_n: usize,
        checks: &[Vec<(usize, &Vec<usize>)>],
        a_sets: &[HashSet<&[usize]>],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        scratch: &mut Vec<usize>,
        injective: bool,
        k: usize,
        count: &mut u64,
    ) {
        if k == c_n {
            *count += 1;
            return;
        }
        'candidates: for v in 0..a_n {
            if injective && used[v] {
                continue;
            }
            map[k] = v;
            for &(i, t) in &checks[k] {
                scratch.clear();
                scratch.extend(t.iter().map(|&e| map[e]));
                if !a_sets[i].contains(scratch.as_slice()) {
                    continue 'candidates;
                }
            }
            if injective {
                used[v] = true;
            }
            rec(c_n, a_n, checks, a_sets, map, used, scratch, injective, k + 1, count);
            if injective {
                used[v] = false;
            }
        }
    }
    rec(c.n, a.n, &checks, &a_sets, &mut map, &mut used, &mut scratch, injective, 0, &mut count);
    Ok(count)
}

/// A partition of `{0, …, n−1}` into blocks `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    block_of: Vec<usize>,
    n_blocks: usize,
}

impl Partition {
    pub fn new(block_of: Vec<usize>) -> Result<Self, RelationalError> {
        let n_blocks = block_of.iter().max().map_or(0, |&m| m + 1);
        let mut seen = vec![false; n_blocks];
        for &b in &block_of {
            if b >= n_blocks {
                return Err(RelationalError::InvalidPartition);
            }
            seen[b] = true;
        }
        if !seen.into_iter().all(|s| s) {
            return Err(RelationalError::InvalidPartition);
        }
        Ok(Partition { block_of, n_blocks })
    }

    pub fn discrete(n: usize) -> Self {
        Partition { block_of: (0..n).collect(), n_blocks: n }
    }

    pub fn block_of(&self) -> &[usize] {
        &self.block_of
    }

    pub fn n_blocks(&self) -> usize {
        self.n_blocks
    }

    pub fn is_discrete(&self) -> bool {
        self.n_blocks == self.block_of.len()
    }
}

/// All partitions of `{0, …, n−1}` as restricted-growth strings, in
/// lexicographic order.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    if n == 0 {
        return vec![Partition { block_of: Vec::new(), n_blocks: 0 }];
    }
    let mut out = Vec::new();
    let mut rgs = vec![0usize; n];
    fn rec(rgs: &mut Vec<usize>, k: usize, max_used: usize, out: &mut Vec<Partition>) {
        if k == rgs.len() {
            out.push(Partition::new(rgs.clone()).expect("restricted growth strings are valid"));
            return;
        }
        for b in 0..=max_used + 1 {
            rgs[k] = b;
            rec(rgs, k + 1, max_used.max(b), out);
        }
    }
    rec(&mut rgs, 1, 0, &mut out);
    out
}

/// The image structure on the blocks of `theta`.
pub fn quotient_structure(
    c: &RelationalStructure,
    theta: &Partition,
) -> Result<RelationalStructure, RelationalError> {
    if theta.block_of.len() != c.n {
        return Err(RelationalError::InvalidPartition);
    }
    let relations: Vec<Vec<Vec<usize>>> = c
        .relations
        .iter()
        .map(|tuples| {
            let mut mapped: Vec<Vec<usize>> =
                tuples.iter().map(|t| t.iter().map(|&e| theta.block_of[e]).collect()).collect();
            mapped.sort();
            mapped.dedup();
            mapped
        })
        .collect();
    RelationalStructure::new(c.signature.clone(), theta.n_blocks, relations)
}

/// Both sides of `hom(C, A) = Σ_θ inj(C/θ, A)` over all partitions of the
/// universe of `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomInjIdentity {
    pub hom: u64,
    pub sum_over_partitions: u64,
    pub equal: bool,
}

pub fn verify_hom_inj_identity(
    c: &RelationalStructure,
    a: &RelationalStructure,
) -> Result<HomInjIdentity, RelationalError> {
    if c.signature != a.signature {
        return Err(RelationalError::SignatureMismatch);
    }
    if c.n > MAX_PARTITION_UNIVERSE {
        return Err(RelationalError::UniverseTooLarge { size: c.n, max: MAX_PARTITION_UNIVERSE });
    }
    let hom = count_homs(c, a)?;
    let mut sum = 0u64;
    for theta in all_partitions(c.n) {
        sum += count_injective_homs(&quotient_structure(c, &theta)?, a)?;
    }
    Ok(HomInjIdentity { hom, sum_over_partitions: sum, equal: hom == sum })
}

/// One canonical representative per isomorphism class of structures with
/// the given signature and universe size at most `max_n`, ordered by size
/// and then by relation encoding.
pub fn enumerate_structures(
    signature: &[usize],
    max_n: usize,
) -> Result<Vec<RelationalStructure>, RelationalError> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        if n > MAX_CANONICAL_UNIVERSE {
            return Err(RelationalError::UniverseTooLarge { size: n, max: MAX_CANONICAL_UNIVERSE });
        }
        // fixed cell order: relation index, then tuples lexicographically
        let mut cells: Vec<(usize, Vec<usize>)> = Vec::new();
        for (i, &arity) in signature.iter().enumerate() {
            if n == 0 && arity > 0 {
                continue;
            }
            let mut tuple = vec![0usize; arity];
            loop {
                cells.push((i, tuple.clone()));
                if arity == 0 {
                    break;
                }
                let mut pos = arity;
                let mut advanced = false;
                while pos > 0 {
                    pos -= 1;
                    tuple[pos] += 1;
                    if tuple[pos] < n {
                        advanced = true;
                        break;
                    }
                    tuple[pos] = 0;
                }
                if !advanced {
                    break;
                }
            }
        }
        let n_cells = cells.len() as u32;
        if n_cells > MAX_ENUMERATION_CELLS {
            return Err(RelationalError::EnumerationTooLarge {
                cells: n_cells,
                max: MAX_ENUMERATION_CELLS,
            });
        }
        let mut seen: HashSet<Vec<Vec<Vec<usize>>>> = HashSet::new();
        let mut reps: Vec<RelationalStructure> = Vec::new();
        for mask in 0u64..(1u64 << n_cells) {
            let mut relations: Vec<Vec<Vec<usize>>> = vec![Vec::new(); signature.len()];
            for (bit, (i, tuple)) in cells.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    relations[*i].push(tuple.clone());
                }
            }
            let s = RelationalStructure::new(signature.to_vec(), n, relations)?;
            let canon = s.canonical_form()?;
            if seen.insert(canon.relations.clone()) {
                reps.push(canon);
            }
        }
        reps.sort_by(|a, b| a.relations.cmp(&b.relations));
        out.extend(reps);
    }
    Ok(out)
}

/// Verdict of the homomorphism-counting isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LovaszVerdict {
    Distinguished { witness: RelationalStructure, hom_a: u64, hom_b: u64 },
    Indistinguishable { isomorphic: bool },
}

/// Compare hom counts from every structure of size at most `bound` (up to
/// isomorphism, in canonical order). If none differ, cross-check with the
/// direct isomorphism search; the counting theorem forces `isomorphic` to
/// be true in that case.
pub fn lovasz_iso_test(
    a: &RelationalStructure,
    b: &RelationalStructure,
    bound: usize,
) -> Result<LovaszVerdict, RelationalError> {
    if a.signature != b.signature {
        return Err(RelationalError::SignatureMismatch);
    }
    let needed = a.n.max(b.n);
    if bound < needed {
        return Err(RelationalError::BoundTooSmall { bound, needed });
    }
    let probes = enumerate_structures(&a.signature, bound)?;
    lovasz_iso_test_with(&probes, a, b)
}

/// The same test against a caller-supplied probe list (useful when testing
/// many pairs against one shared enumeration).
pub fn lovasz_iso_test_with(
    probes: &[RelationalStructure],
    a: &RelationalStructure,
    b: &RelationalStructure,
) -> Result<LovaszVerdict, RelationalError> {
    for c in probes {
        let hom_a = count_homs(c, a)?;
        let hom_b = count_homs(c, b)?;
        if hom_a != hom_b {
            return Ok(LovaszVerdict::Distinguished { witness: c.clone(), hom_a, hom_b });
        }
    }
    Ok(LovaszVerdict::Indistinguishable { isomorphic: are_isomorphic(a, b)? })
}

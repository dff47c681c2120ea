//! Permutations of `{0, …, d−1}` and finite permutation groups.

use std::collections::{HashMap, HashSet, VecDeque};

/// A permutation as its image list: `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn identity_perm(degree: usize) -> Perm {
    (0..degree).collect()
}

/// `compose(p, q)` applies `q` first: `i ↦ p[q[i]]`.
pub fn compose(p: &[usize], q: &[usize]) -> Perm {
    q.iter().map(|&i| p[i]).collect()
}

pub fn invert(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &pi) in p.iter().enumerate() {
        inv[pi] = i;
    }
    inv
}

pub fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    p.iter().all(|&i| {
        if i >= p.len() || seen[i] {
            false
        } else {
            seen[i] = true;
            true
        }
    })
}

/// All permutations of degree `d` in lexicographic order. The identity comes
/// first, which the symmetric-group Cayley table relies on.
pub fn all_perms(degree: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current = identity_perm(degree);
    loop {
        out.push(current.clone());
        if !next_perm(&mut current) {
            break;
        }
    }
    out
}

/// Advance to the lexicographically next permutation in place.
pub(crate) fn next_perm(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// A set of permutations closed under composition and inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Close the generators under composition. Elements come out sorted.
    pub fn from_generators(degree: usize, generators: &[Perm]) -> Self {
        assert!(generators.iter().all(|g| g.len() == degree && is_permutation(g)));
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut queue = VecDeque::new();
        let id = identity_perm(degree);
        seen.insert(id.clone());
        queue.push_back(id);
        while let Some(p) = queue.pop_front() {
            for g in generators {
                let q = compose(g, &p);
                if seen.insert(q.clone()) {
                    queue.push_back(q);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        PermGroup { degree, elements }
    }

    /// Wrap an already-closed element list.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Self {
        elements.sort();
        elements.dedup();
        let g = PermGroup { degree, elements };
        debug_assert!(g.is_closed());
        g
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, elements: vec![identity_perm(degree)] }
    }

    fn is_closed(&self) -> bool {
        self.elements.iter().all(|p| {
            self.elements
                .iter()
                .all(|q| self.elements.binary_search(&compose(p, q)).is_ok())
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &[usize]) -> bool {
        self.elements.binary_search_by(|e| e.as_slice().cmp(p)).is_ok()
    }
}

/// Index of each permutation within the lexicographic enumeration of its
/// symmetric group.
pub fn perm_ranks(perms: &[Perm]) -> HashMap<Perm, usize> {
    perms.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect()
}

//! Finite groups given by full Cayley tables.
//!
//! Element 0 is always the identity: `from_cayley` re-indexes its input so
//! that this holds, and every other constructor produces tables already in
//! that form. Orders are capped at [`MAX_GROUP_ORDER`] for validated input;
//! symmetric groups built internally as homomorphism targets may be larger
//! (up to degree [`MAX_SYM_DEGREE`]).

mod catalog;
mod hom;
mod perm;
mod subgroup;

pub use catalog::{small_groups, small_groups_up_to};
pub use hom::{
    are_isomorphic, count_homs, enumerate_homs, hom_predicates, quotient_group, GroupHom,
    HomPredicates,
};
pub use perm::{all_perms, compose, identity_perm, invert, is_permutation, Perm, PermGroup};
pub use subgroup::{
    all_subgroups, centralizer_order_in_sym, coset_action, coset_permutation_action,
    normal_subgroups, subgroups_up_to_conjugacy, CosetPerms, SubgroupClass,
};

use std::sync::Arc;

use thiserror::Error;

/// Largest order accepted by the validating constructors.
pub const MAX_GROUP_ORDER: usize = 512;

/// Largest degree for which a symmetric group is materialized as a Cayley
/// table. Beyond this the table no longer fits in reasonable memory.
pub const MAX_SYM_DEGREE: usize = 7;

/// Largest symmetric-group degree for centralizer computations, which
/// enumerate all `d!` permutations.
pub const MAX_CENTRALIZER_DEGREE: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("table is not square: row {row} has length {len}, expected {order}")]
    NotSquare { row: usize, len: usize, order: usize },
    #[error("table entry out of range: table[{a}][{b}] = {value}, order is {order}")]
    EntryOutOfRange { a: usize, b: usize, value: usize, order: usize },
    #[error("not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("not a Latin square: {which} {index} repeats an element")]
    NotLatinSquare { which: Line, index: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no two-sided inverse")]
    NoInverse { element: usize },
    #[error("group order {order} exceeds the cap {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("symmetric group degree {degree} exceeds the cap {max}")]
    DegreeTooLarge { degree: usize, max: usize },
    #[error("subset is not a normal subgroup")]
    NotNormal,
    #[error("subset is not a subgroup: {reason}")]
    NotSubgroup { reason: String },
    #[error("map is not a homomorphism: f({a}·{b}) ≠ f({a})·f({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("map length {len} does not match source order {order}")]
    MapLengthMismatch { len: usize, order: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => write!(f, "row"),
            Line::Column => write!(f, "column"),
        }
    }
}

/// A finite group as a Cayley table, with element 0 the identity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u16>, // row-major: table[a * order + b] = a·b
    inverse: Vec<u16>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order)
    }
}

impl FiniteGroup {
    /// Validate a Cayley table and canonicalize it so the identity is 0.
    ///
    /// Checks run in this order: shape and range, associativity (naming the
    /// first bad triple), Latin-square rows and columns, identity, inverses.
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Arc<Self>, GroupError> {
        let order = table.len();
        if order == 0 {
            return Err(GroupError::NoIdentity);
        }
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge { order, max: MAX_GROUP_ORDER });
        }
        for (row, r) in table.iter().enumerate() {
            if r.len() != order {
                return Err(GroupError::NotSquare { row, len: r.len(), order });
            }
            for (b, &value) in r.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange { a: row, b, value, order });
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = table[a][b];
                for c in 0..order {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(GroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for (i, row) in table.iter().enumerate() {
            let mut seen = vec![false; order];
            for &v in row {
                if seen[v] {
                    return Err(GroupError::NotLatinSquare { which: Line::Row, index: i });
                }
                seen[v] = true;
            }
        }
        for b in 0..order {
            let mut seen = vec![false; order];
            for row in table {
                if seen[row[b]] {
                    return Err(GroupError::NotLatinSquare { which: Line::Column, index: b });
                }
                seen[row[b]] = true;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or(GroupError::NoIdentity)?;
        for a in 0..order {
            let has_inverse =
                (0..order).any(|b| table[a][b] == identity && table[b][a] == identity);
            if !has_inverse {
                return Err(GroupError::NoInverse { element: a });
            }
        }
        // Relabel by the transposition 0 ↔ identity.
        let relabel = |x: usize| -> usize {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut flat = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                flat[relabel(a) * order + relabel(b)] = relabel(table[a][b]) as u16;
            }
        }
        Ok(Arc::new(Self::from_flat_trusted(order, flat)))
    }

    /// Build from a flat table already known to be a group with identity 0.
    pub(crate) fn from_flat_trusted(order: usize, table: Vec<u16>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!((0..order).all(|a| table[a] as usize == a && table[a * order] as usize == a));
        let mut inverse = vec![0u16; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a * order + b] == 0)
                .expect("every element has an inverse");
            debug_assert_eq!(table[b * order + a], 0);
            inverse[a] = b as u16;
        }
        FiniteGroup { order, table, inverse }
    }

    pub(crate) fn from_rows_trusted(rows: &[Vec<usize>]) -> Self {
        let order = rows.len();
        let mut flat = vec![0u16; order * order];
        for (a, row) in rows.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                flat[a * order + b] = v as u16;
            }
        }
        Self::from_flat_trusted(order, flat)
    }

    pub fn trivial() -> Arc<Self> {
        Arc::new(Self::from_flat_trusted(1, vec![0]))
    }

    /// Cyclic group of order `n ≥ 1`.
    pub fn cyclic(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let mut flat = vec![0u16; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[a * n + b] = ((a + b) % n) as u16;
            }
        }
        Arc::new(Self::from_flat_trusted(n, flat))
    }

    /// Dihedral group of order `2n` (`n ≥ 1`): rotations `r^i`, reflections `r^i s`.
    pub fn dihedral(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let order = 2 * n;
        let idx = |i: usize, j: usize| i + n * j;
        let mut flat = vec![0u16; order * order];
        for i in 0..n {
            for j in 0..2 {
                for k in 0..n {
                    for l in 0..2 {
                        // (r^i s^j)(r^k s^l), using s r^k = r^{-k} s
                        let out = if j == 0 {
                            idx((i + k) % n, l)
                        } else {
                            idx((i + n - k) % n, 1 - l)
                        };
                        flat[idx(i, j) * order + idx(k, l)] = out as u16;
                    }
                }
            }
        }
        Arc::new(Self::from_flat_trusted(order, flat))
    }

    /// Dicyclic group of order `4n` (`n ≥ 1`): `a` of order `2n`, `b² = aⁿ`,
    /// `b a b⁻¹ = a⁻¹`.
    pub fn dicyclic(n: usize) -> Arc<Self> {
        assert!(n >= 1);
        let m = 2 * n;
        let order = 4 * n;
        let idx = |i: usize, j: usize| i + m * j;
        let mut flat = vec![0u16; order * order];
        for i in 0..m {
            for j in 0..2 {
                for k in 0..m {
                    for l in 0..2 {
                        let out = if j == 0 {
                            idx((i + k) % m, l)
                        } else if l == 0 {
                            idx((i + m - k) % m, 1)
                        } else {
                            idx((i + m - k + n) % m, 0)
                        };
                        flat[idx(i, j) * order + idx(k, l)] = out as u16;
                    }
                }
            }
        }
        Arc::new(Self::from_flat_trusted(order, flat))
    }

    /// Symmetric group on `d` letters as a Cayley table. Elements are indexed
    /// by the lexicographic rank of the permutation, so the identity is 0.
    pub fn symmetric(d: usize) -> Result<Arc<Self>, GroupError> {
        if d > MAX_SYM_DEGREE {
            return Err(GroupError::DegreeTooLarge { degree: d, max: MAX_SYM_DEGREE });
        }
        let perms = all_perms(d);
        let ranks = perm::perm_ranks(&perms);
        let order = perms.len();
        let mut flat = vec![0u16; order * order];
        for (a, pa) in perms.iter().enumerate() {
            for (b, pb) in perms.iter().enumerate() {
                flat[a * order + b] = ranks[&compose(pa, pb)] as u16;
            }
        }
        Ok(Arc::new(Self::from_flat_trusted(order, flat)))
    }

    /// Close a set of permutations and return the abstract group on the
    /// resulting elements (in sorted permutation order; identity first).
    pub fn from_permutations(degree: usize, generators: &[Perm]) -> Result<Arc<Self>, GroupError> {
        let pg = PermGroup::from_generators(degree, generators);
        let order = pg.order();
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::OrderTooLarge { order, max: MAX_GROUP_ORDER });
        }
        let ranks = perm::perm_ranks(pg.elements());
        let mut flat = vec![0u16; order * order];
        for (a, pa) in pg.elements().iter().enumerate() {
            for (b, pb) in pg.elements().iter().enumerate() {
                flat[a * order + b] = ranks[&compose(pa, pb)] as u16;
            }
        }
        // Sorted permutations put the identity first.
        Ok(Arc::new(Self::from_flat_trusted(order, flat)))
    }

    pub fn direct_product(&self, other: &FiniteGroup) -> Arc<Self> {
        let n1 = self.order;
        let n2 = other.order;
        let order = n1 * n2;
        assert!(order <= u16::MAX as usize + 1);
        let idx = |a: usize, b: usize| a * n2 + b;
        let mut flat = vec![0u16; order * order];
        for a1 in 0..n1 {
            for b1 in 0..n2 {
                for a2 in 0..n1 {
                    for b2 in 0..n2 {
                        flat[idx(a1, b1) * order + idx(a2, b2)] =
                            idx(self.mul(a1, a2), other.mul(b1, b2)) as u16;
                    }
                }
            }
        }
        Arc::new(Self::from_flat_trusted(order, flat))
    }

    /// The subgroup on `elements` as a group in its own right, re-indexed by
    /// the sorted element list.
    pub fn subgroup_group(&self, elements: &[usize]) -> Result<Arc<Self>, GroupError> {
        let mut elems: Vec<usize> = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let pos = |x: usize| elems.binary_search(&x);
        let order = elems.len();
        let mut rows = vec![vec![0usize; order]; order];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                let p = self.mul(a, b);
                let k = pos(p).map_err(|_| GroupError::NotSubgroup {
                    reason: format!("{a}·{b} = {p} is outside the subset"),
                })?;
                rows[i][j] = k;
            }
        }
        if !elems.contains(&0) {
            return Err(GroupError::NotSubgroup { reason: "identity missing".into() });
        }
        Ok(Arc::new(Self::from_rows_trusted(&rows)))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// `g · a · g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, a: usize) -> usize {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != 0 {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn element_orders(&self) -> Vec<usize> {
        (0..self.order).map(|a| self.element_order(a)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The table as nested rows, for serialization.
    pub fn table_rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|a| (0..self.order).map(|b| self.mul(a, b)).collect())
            .collect()
    }

    /// Cyclic subgroup generated by `a`, sorted.
    pub fn cyclic_subgroup(&self, a: usize) -> Vec<usize> {
        let mut elems = vec![0];
        let mut x = a;
        while x != 0 {
            elems.push(x);
            x = self.mul(x, a);
        }
        elems.sort_unstable();
        elems
    }

    /// Closure of a subset under multiplication (hence a subgroup), sorted.
    pub fn closure(&self, seed: &[usize]) -> Vec<usize> {
        let mut in_set = vec![false; self.order];
        in_set[0] = true;
        let mut elems = vec![0usize];
        let mut frontier: Vec<usize> = Vec::new();
        for &s in seed {
            if !in_set[s] {
                in_set[s] = true;
                elems.push(s);
                frontier.push(s);
            }
        }
        while let Some(x) = frontier.pop() {
            // products with every current element, both orders
            for i in 0..elems.len() {
                let y = elems[i];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !in_set[p] {
                        in_set[p] = true;
                        elems.push(p);
                        frontier.push(p);
                    }
                }
            }
        }
        elems.sort_unstable();
        elems
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_from_table() {
        let g = FiniteGroup::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn c2_from_table() {
        let g = FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn non_associative_table_is_rejected_at_first_triple() {
        let err = FiniteGroup::from_cayley(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 1, 0]])
            .unwrap_err();
        assert_eq!(err, GroupError::NotAssociative { a: 1, b: 1, c: 1 });
    }

    #[test]
    fn latin_square_violation_is_reported() {
        // associative (constant-ish trick won't be associative; use a direct repeat)
        let err =
            FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 1]]).unwrap_err();
        // (1·1)·1 = 1·1 = 1, 1·(1·1) = 1 — associative on all triples, so the
        // repeated 1 in row 1 is the first failure.
        assert_eq!(err, GroupError::NotLatinSquare { which: Line::Row, index: 1 });
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // C2 written with identity at index 1
        let g = FiniteGroup::from_cayley(&[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 0), 0);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn cyclic_group_orders() {
        let g = FiniteGroup::cyclic(6);
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(2), 3);
        assert_eq!(g.element_order(3), 2);
    }

    #[test]
    fn dihedral_and_dicyclic_tables_validate() {
        for n in 1..=4 {
            let d = FiniteGroup::dihedral(n);
            FiniteGroup::from_cayley(&d.table_rows()).unwrap();
            let q = FiniteGroup::dicyclic(n);
            FiniteGroup::from_cayley(&q.table_rows()).unwrap();
        }
        // Q8 has a unique element of order 2
        let q8 = FiniteGroup::dicyclic(2);
        assert_eq!(q8.element_orders().iter().filter(|&&o| o == 2).count(), 1);
        assert!(!q8.is_abelian());
    }

    #[test]
    fn symmetric_group_of_degree_three() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        FiniteGroup::from_cayley(&s3.table_rows()).unwrap();
    }

    #[test]
    fn symmetric_degree_cap() {
        let err = FiniteGroup::symmetric(8).unwrap_err();
        assert!(matches!(err, GroupError::DegreeTooLarge { degree: 8, .. }));
    }

    #[test]
    fn direct_product_of_cyclics() {
        let v4 = FiniteGroup::cyclic(2).direct_product(&FiniteGroup::cyclic(2));
        assert_eq!(v4.order(), 4);
        assert!(v4.element_orders().iter().all(|&o| o <= 2));
        FiniteGroup::from_cayley(&v4.table_rows()).unwrap();
    }

    #[test]
    fn closure_generates_subgroup() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let whole = s3.closure(&[1, 2]);
        assert!(whole.len() == 6 || s3.subgroup_group(&whole).is_ok());
    }
}

//! Truncated power series and the generating functions built on them.
//!
//! [`Series`] is generic over the coefficient scalar; all the generating
//! functions in this crate use [`crate::RationalSeries`], i.e. exact rational
//! coefficients. A series carries its truncation order `N` and exactly
//! `N + 1` coefficients; arithmetic never extends a truncation, combining
//! two series truncates to the shorter one.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::group::{
    centralizer_order_in_sym, coset_permutation_action, subgroups_up_to_conjugacy, FiniteGroup,
    GroupError,
};
use crate::groupoid::FiniteGroupoid;
use crate::scalar::Scalar;
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("exp needs constant term 0")]
    ExpNonzeroConstant,
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A power series truncated at degree `trunc`, inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Series<T> {
    trunc: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    pub fn zero(trunc: usize) -> Self {
        Series { trunc, coeffs: vec![T::zero(); trunc + 1] }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.coeffs[0] = T::one();
        s
    }

    /// `c · x^k`, or zero if `k` exceeds the truncation.
    pub fn monomial(trunc: usize, k: usize, c: T) -> Self {
        let mut s = Self::zero(trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty());
        Series { trunc: coeffs.len() - 1, coeffs }
    }

    pub fn truncation(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, k: usize) -> &T {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (0..=trunc)
            .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
            .collect();
        Series { trunc, coeffs }
    }

    pub fn neg(&self) -> Self {
        Series {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let trunc = self.trunc.min(other.trunc);
        let mut coeffs = vec![T::zero(); trunc + 1];
        for i in 0..=trunc {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(trunc - i) {
                coeffs[i + j] =
                    coeffs[i + j].clone() + self.coeffs[i].clone() * other.coeffs[j].clone();
            }
        }
        Series { trunc, coeffs }
    }

    /// `exp` of a series with zero constant term, via the recurrence
    /// `n·b_n = Σ_{k=1..n} k·a_k·b_{n−k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::ExpNonzeroConstant);
        }
        let n = self.trunc;
        let mut b = vec![T::zero(); n + 1];
        b[0] = T::one();
        for m in 1..=n {
            let mut acc = T::zero();
            for k in 1..=m {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let k_scalar = T::from_usize(k).expect("scalar from usize");
                acc = acc + k_scalar * self.coeffs[k].clone() * b[m - k].clone();
            }
            b[m] = acc * T::recip_usize(m);
        }
        Ok(Series { trunc: n, coeffs: b })
    }

    /// Evaluate at a point by Horner's rule (a partial sum of the series).
    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }
}

/// Parameters of one irreducible summand in a semisimple representation
/// category: the dimension of the irreducible, and the size `q^d` of its
/// endomorphism field given by a prime power `q` and a degree `d`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepComponentParams {
    pub dim_v: usize,
    pub q: u64,
    pub d: u32,
}

impl RepComponentParams {
    pub fn new(dim_v: usize, q: u64, d: u32) -> Self {
        assert!(dim_v >= 1, "dimension must be positive");
        assert!(is_prime_power(q), "q must be a prime power");
        assert!(d >= 1);
        RepComponentParams { dim_v, q, d }
    }

    /// Size of the endomorphism field.
    pub fn field_size(&self) -> BigInt {
        BigInt::from(self.q).pow(self.d)
    }

    /// `a = q^d − 1`, the number of automorphisms of the irreducible.
    pub fn aut_count(&self) -> BigInt {
        self.field_size() - 1
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut q = q;
    let mut p = 0u64;
    for cand in 2..=q {
        if q % cand == 0 {
            p = cand;
            break;
        }
    }
    while q % p == 0 {
        q /= p;
    }
    q == 1
}

/// `#GL_n(F_Q) = Π_{i=0}^{n−1} (Qⁿ − Qⁱ)`, with `gl_order(0, Q) = 1`.
pub fn gl_order(n: usize, q_power: &BigInt) -> BigInt {
    let qn = q_power.pow(n as u32);
    let mut acc = BigInt::one();
    for i in 0..n {
        acc *= &qn - q_power.pow(i as u32);
    }
    acc
}

/// Order of the block upper triangular subgroup of `GL_n` over a field with
/// `a + 1` elements whose diagonal blocks have `a` choices:
/// `aⁿ·(a+1)^{n(n−1)/2}`.
pub fn borel_order(n: usize, a: &BigInt) -> BigInt {
    let t = n * n.saturating_sub(1) / 2;
    let field: BigInt = a + 1;
    a.pow(n as u32) * field.pow(t as u32)
}

/// The series `Φ_V(x) = Σ_n x^{n·dim V} / #GL_n(F_{q^d})`, truncated at `N`.
pub fn rep_component_series(p: &RepComponentParams, trunc: usize) -> crate::RationalSeries {
    let q_power = p.field_size();
    let mut s = Series::zero(trunc);
    let mut n = 0usize;
    loop {
        let deg = n * p.dim_v;
        if deg > trunc {
            break;
        }
        s.coeffs[deg] = Rat::new(BigInt::one(), gl_order(n, &q_power));
        n += 1;
    }
    s
}

/// Outcome of comparing `Σ 1/#GL_n` against the block-triangular bound.
#[derive(Debug, Clone, PartialEq)]
pub struct TamenessBound {
    /// `Σ_{n ≤ N} 1 / #GL_n(F_{q^d})`.
    pub partial_sum: Rat,
    /// `1 + 1/a + Σ_{2 ≤ n ≤ N} 1 / (aⁿ (a+1)^{T_{n−1}})`.
    pub bound: Rat,
    /// Termwise `#B_n ≤ #GL_n` for every `n ≤ N`.
    pub holds: bool,
}

/// Check, term by term, that reciprocals of `GL_n` orders are dominated by
/// reciprocals of the block-triangular subgroup orders.
pub fn tameness_bound_check(p: &RepComponentParams, trunc: usize) -> TamenessBound {
    let q_power = p.field_size();
    let a = p.aut_count();
    let mut partial_sum = Rat::zero();
    let mut bound = Rat::zero();
    let mut holds = true;
    for n in 0..=trunc {
        let gl = gl_order(n, &q_power);
        let b = borel_order(n, &a);
        if b > gl {
            holds = false;
        }
        partial_sum += Rat::new(BigInt::one(), gl);
        bound += Rat::new(BigInt::one(), b);
    }
    TamenessBound { partial_sum, bound, holds }
}

/// Exponent data for the generating function of finite G-sets: one term
/// `x^{#G/#H} / #C_{Sym(G/H)}(im θ)` per conjugacy class of subgroups.
pub fn gset_exponent_terms(g: &FiniteGroup) -> Result<Vec<(usize, u64)>, SeriesError> {
    let mut terms = Vec::new();
    for class in subgroups_up_to_conjugacy(g) {
        let action = coset_permutation_action(g, &class.representative);
        let c = centralizer_order_in_sym(&action.image)?;
        terms.push((class.index, c));
    }
    Ok(terms)
}

/// The exponential generating function of finite G-sets:
/// `exp(Σ_{[H ≤ G]} x^{#G/#H} / #C_{Sym(G/H)}(im θ))`.
///
/// The coefficient of `xⁿ` equals the number of G-actions on an n-element
/// set divided by `n!`.
pub fn gset_egf(g: &FiniteGroup, trunc: usize) -> Result<crate::RationalSeries, SeriesError> {
    let mut exponent: crate::RationalSeries = Series::zero(trunc);
    for (index, c) in gset_exponent_terms(g)? {
        if index <= trunc {
            exponent.coeffs[index] += Rat::new(BigInt::one(), BigInt::from(c));
        }
    }
    Ok(exponent.exp()?)
}

/// Per-subgroup-class factor series `Φ_H(x) = exp(x^{#G/#H} / #C)`; their
/// product equals [`gset_egf`].
pub fn gset_class_factors(
    g: &FiniteGroup,
    trunc: usize,
) -> Result<Vec<crate::RationalSeries>, SeriesError> {
    gset_exponent_terms(g)?
        .into_iter()
        .map(|(index, c)| {
            let mono = Series::monomial(trunc, index, Rat::new(BigInt::one(), BigInt::from(c)));
            Ok(mono.exp()?)
        })
        .collect()
}

/// The exact exponent whose exponential is the cardinality of the groupoid
/// of finite G-sets over a finite groupoid, plus its float evaluation.
pub fn gset_groupoid_exponent(g: &FiniteGroupoid) -> Result<(Rat, f64), SeriesError> {
    let mut exponent = Rat::zero();
    for component in g.skeleton().components() {
        for (_, c) in gset_exponent_terms(component.aut())? {
            exponent += Rat::new(BigInt::one(), BigInt::from(c));
        }
    }
    let value = rat_to_f64(&exponent).exp();
    Ok((exponent, value))
}

pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

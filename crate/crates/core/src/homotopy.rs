//! Homotopy cardinality of spaces described by the orders of their homotopy
//! groups, and the degree-2 image inequality realized through groupoid
//! factorization.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::functor::{ternary_factorize, GroupoidFunctor};
use crate::groupoid::FiniteGroupoid;
use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("component {component} lists a homotopy group of order 0 at level {level}")]
    ZeroHomotopyOrder { component: usize, level: usize },
}

/// A space with finitely many components, each described by the finite
/// orders `[#π₁, #π₂, …]` of its homotopy groups (trivial above the listed
/// levels). The empty component list is the empty space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiFiniteSpace {
    components: Vec<Vec<u64>>,
}

impl PiFiniteSpace {
    pub fn new(components: Vec<Vec<u64>>) -> Result<Self, HomotopyError> {
        for (ci, comp) in components.iter().enumerate() {
            for (li, &order) in comp.iter().enumerate() {
                if order == 0 {
                    return Err(HomotopyError::ZeroHomotopyOrder { component: ci, level: li + 1 });
                }
            }
        }
        Ok(PiFiniteSpace { components })
    }

    pub fn empty() -> Self {
        PiFiniteSpace { components: Vec::new() }
    }

    pub fn components(&self) -> &[Vec<u64>] {
        &self.components
    }
}

/// `Σ over components of Π_k (#π_k)^{(−1)^k}`: odd levels divide, even
/// levels multiply.
pub fn homotopy_cardinality(x: &PiFiniteSpace) -> Rat {
    let mut total = Rat::zero();
    for comp in &x.components {
        let mut term = Rat::one();
        for (li, &order) in comp.iter().enumerate() {
            let level = li + 1;
            let order = BigInt::from(order);
            if level % 2 == 1 {
                term /= Rat::from_integer(order);
            } else {
                term *= Rat::from_integer(order);
            }
        }
        total += term;
    }
    total
}

/// View a groupoid as a 1-truncated space: one component per isomorphism
/// class, with `π₁` the vertex group.
pub fn groupoid_to_pifinite(g: &FiniteGroupoid) -> PiFiniteSpace {
    let components = g
        .skeleton()
        .components()
        .iter()
        .map(|c| vec![c.aut().order() as u64])
        .collect();
    PiFiniteSpace { components }
}

/// Cardinalities of the degree-2 and degree-1 images of a functor, with the
/// even-level inequality `|im₂| ≥ |im₁|`.
#[derive(Debug, Clone, PartialEq)]
pub struct PostnikovCheck {
    pub im2_cardinality: Rat,
    pub im1_cardinality: Rat,
    pub inequality_holds: bool,
}

/// For groupoids the (2-connected, 2-truncated) image is the 2-coimage of
/// the three-stage factorization and the (1-connected, 1-truncated) image
/// is the 1-image.
pub fn postnikov_images_n12(f: &GroupoidFunctor) -> PostnikovCheck {
    let t = ternary_factorize(f);
    let im2_cardinality = t.im2.cardinality();
    let im1_cardinality = t.im1.cardinality();
    let inequality_holds = im2_cardinality >= im1_cardinality;
    PostnikovCheck { im2_cardinality, im1_cardinality, inequality_holds }
}

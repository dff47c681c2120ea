//! JSON schemas for every value the CLI reads or writes.
//!
//! Groups: `{"order": n, "table": [[...]]}` or
//! `{"permutations": {"degree": d, "generators": [[...]]}}`.
//!
//! Groupoids: explicit
//! `{"objects": [...], "morphisms": [{"id", "src", "dst"}], "compose": [[f, g, fg], ...]}`
//! (a triple `[f, g, fg]` means `fg = f∘g`, `g` applied first), or the
//! skeletal shorthand `{"components": [{"aut_order_table": [[...]]}]}` with
//! an optional per-component `objects` count.
//!
//! Coproducts of group homomorphisms:
//! `{"base": <group>, "components": [{"group": <group>, "map": [...]}]}`.
//!
//! Relational structures:
//! `{"signature": [2], "n": 3, "relations": [[[0,1],[1,2],[2,0]]]}`.
//!
//! Spaces: `{"components": [[3], [1,2]]}`. Series (output):
//! `{"truncation": N, "coeffs": ["1", "1", "1/2", ...]}`.

use std::collections::HashMap;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::group::{FiniteGroup, GroupError, GroupHom};
use crate::groupoid::{FiniteGroupoid, GroupoidError};
use crate::homotopy::{HomotopyError, PiFiniteSpace};
use crate::relational::{RelationalError, RelationalStructure};
use crate::relfin::{RelFinError, RelFinObject};
use crate::series::Series;
use crate::{Rat, RationalSeries};

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("duplicate id {id}")]
    DuplicateId { id: u64 },
    #[error("unknown id {id}")]
    UnknownId { id: u64 },
    #[error("order field is {declared} but the table has {actual} rows")]
    OrderMismatch { declared: usize, actual: usize },
    #[error("map length {len} does not match group order {order}")]
    MapLength { len: usize, order: usize },
    #[error("cannot parse rational '{text}'")]
    BadRational { text: String },
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Groupoid(#[from] GroupoidError),
    #[error(transparent)]
    RelFin(#[from] RelFinError),
    #[error(transparent)]
    Relational(#[from] RelationalError),
    #[error(transparent)]
    Homotopy(#[from] HomotopyError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupJson {
    Table { order: usize, table: Vec<Vec<usize>> },
    Permutations { permutations: PermSpecJson },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PermSpecJson {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
}

impl GroupJson {
    pub fn to_group(&self) -> Result<Arc<FiniteGroup>, JsonError> {
        match self {
            GroupJson::Table { order, table } => {
                if *order != table.len() {
                    return Err(JsonError::OrderMismatch { declared: *order, actual: table.len() });
                }
                Ok(FiniteGroup::from_cayley(table)?)
            }
            GroupJson::Permutations { permutations } => {
                Ok(FiniteGroup::from_permutations(permutations.degree, &permutations.generators)?)
            }
        }
    }

    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson::Table { order: g.order(), table: g.table_rows() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MorJson {
    pub id: u64,
    pub src: u64,
    pub dst: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupoidJson {
    Explicit { objects: Vec<u64>, morphisms: Vec<MorJson>, compose: Vec<(u64, u64, u64)> },
    Skeletal { components: Vec<SkeletalComponentJson> },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SkeletalComponentJson {
    pub aut_order_table: Vec<Vec<usize>>,
    #[serde(default = "one", skip_serializing_if = "is_one")]
    pub objects: usize,
}

fn one() -> usize {
    1
}

#[allow(clippy::trivially_copy_pass_by_ref)]
fn is_one(n: &usize) -> bool {
    *n == 1
}

impl GroupoidJson {
    pub fn to_groupoid(&self) -> Result<FiniteGroupoid, JsonError> {
        match self {
            GroupoidJson::Explicit { objects, morphisms, compose } => {
                let obj_index = index_ids(objects)?;
                let mor_ids: Vec<u64> = morphisms.iter().map(|m| m.id).collect();
                let mor_index = index_ids(&mor_ids)?;
                let mut mors = vec![(0usize, 0usize); morphisms.len()];
                for m in morphisms {
                    let src = *obj_index.get(&m.src).ok_or(JsonError::UnknownId { id: m.src })?;
                    let dst = *obj_index.get(&m.dst).ok_or(JsonError::UnknownId { id: m.dst })?;
                    mors[mor_index[&m.id]] = (src, dst);
                }
                let mut triples = Vec::with_capacity(compose.len());
                for &(f, g, h) in compose {
                    let fi = *mor_index.get(&f).ok_or(JsonError::UnknownId { id: f })?;
                    let gi = *mor_index.get(&g).ok_or(JsonError::UnknownId { id: g })?;
                    let hi = *mor_index.get(&h).ok_or(JsonError::UnknownId { id: h })?;
                    triples.push((fi, gi, hi));
                }
                Ok(FiniteGroupoid::new(objects.len(), mors, &triples)?)
            }
            GroupoidJson::Skeletal { components } => {
                let mut parts = Vec::with_capacity(components.len());
                for c in components {
                    let group = FiniteGroup::from_cayley(&c.aut_order_table)?;
                    parts.push((group, c.objects.max(1)));
                }
                Ok(FiniteGroupoid::from_components(&parts))
            }
        }
    }

    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        let objects: Vec<u64> = (0..g.n_objects() as u64).collect();
        let morphisms: Vec<MorJson> = (0..g.n_morphisms())
            .map(|m| {
                let mor = g.morphism(m);
                MorJson { id: m as u64, src: mor.src as u64, dst: mor.dst as u64 }
            })
            .collect();
        let mut compose: Vec<(u64, u64, u64)> =
            g.compose_entries().map(|(f, gg, h)| (f as u64, gg as u64, h as u64)).collect();
        compose.sort_unstable();
        GroupoidJson::Explicit { objects, morphisms, compose }
    }
}

fn index_ids(ids: &[u64]) -> Result<HashMap<u64, usize>, JsonError> {
    let mut sorted: Vec<u64> = ids.to_vec();
    sorted.sort_unstable();
    let mut index = HashMap::with_capacity(ids.len());
    for (i, &id) in sorted.iter().enumerate() {
        if index.insert(id, i).is_some() {
            return Err(JsonError::DuplicateId { id });
        }
    }
    Ok(index)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FunctorJson {
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelFinComponentJson {
    pub group: GroupJson,
    pub map: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelFinObjectJson {
    pub base: GroupJson,
    pub components: Vec<RelFinComponentJson>,
}

impl RelFinObjectJson {
    pub fn to_object(&self) -> Result<RelFinObject, JsonError> {
        let base = self.base.to_group()?;
        let mut components = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let group = c.group.to_group()?;
            if c.map.len() != group.order() {
                return Err(JsonError::MapLength { len: c.map.len(), order: group.order() });
            }
            components.push(GroupHom::new(group, Arc::clone(&base), &c.map)?);
        }
        Ok(RelFinObject::new(base, components)?)
    }

    pub fn from_object(o: &RelFinObject) -> Self {
        RelFinObjectJson {
            base: GroupJson::from_group(o.base()),
            components: o
                .components()
                .iter()
                .map(|c| RelFinComponentJson {
                    group: GroupJson::from_group(c.source()),
                    map: c.map(),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RelationalJson {
    pub signature: Vec<usize>,
    pub n: usize,
    pub relations: Vec<Vec<Vec<usize>>>,
}

impl RelationalJson {
    pub fn to_structure(&self) -> Result<RelationalStructure, JsonError> {
        Ok(RelationalStructure::new(self.signature.clone(), self.n, self.relations.clone())?)
    }

    pub fn from_structure(s: &RelationalStructure) -> Self {
        RelationalJson {
            signature: s.signature().to_vec(),
            n: s.universe_size(),
            relations: s.relations().to_vec(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PiFiniteJson {
    pub components: Vec<Vec<u64>>,
}

impl PiFiniteJson {
    pub fn to_space(&self) -> Result<PiFiniteSpace, JsonError> {
        Ok(PiFiniteSpace::new(self.components.clone())?)
    }

    pub fn from_space(x: &PiFiniteSpace) -> Self {
        PiFiniteJson { components: x.components().to_vec() }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesJson {
    pub truncation: usize,
    pub coeffs: Vec<String>,
}

impl SeriesJson {
    pub fn from_series(s: &RationalSeries) -> Self {
        SeriesJson {
            truncation: s.truncation(),
            coeffs: s.coeffs().iter().map(|c| c.to_string()).collect(),
        }
    }

    pub fn to_series(&self) -> Result<RationalSeries, JsonError> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|t| Rat::from_str(t).map_err(|_| JsonError::BadRational { text: t.clone() }))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs.len() != self.truncation + 1 {
            return Err(JsonError::BadRational { text: "coefficient count".into() });
        }
        Ok(Series::from_coeffs(coeffs))
    }
}

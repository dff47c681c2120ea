//! Serializable output shapes for `--json` mode.

use serde::{Deserialize, Serialize};

use grpdcard::json::{GroupoidJson, RelFinObjectJson, RelationalJson, SeriesJson};

#[derive(Debug, Serialize, Deserialize)]
pub struct RationalOutput {
    pub cardinality: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GsetCardOutput {
    pub exponent: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GlOrderOutput {
    pub order: String,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct RepBoundOutput {
    pub series: SeriesJson,
    pub partial_sum: String,
    pub bound: String,
    pub holds: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EquivOutput {
    pub equivalent: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct HomcountOutput {
    pub count: u64,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StageOutput {
    pub name: String,
    pub object_map: Vec<usize>,
    pub morphism_map: Vec<usize>,
    pub full: bool,
    pub faithful: bool,
    pub essentially_surjective: bool,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct FactorizationOutput {
    pub im2: GroupoidJson,
    pub im1: GroupoidJson,
    pub im2_cardinality: String,
    pub im1_cardinality: String,
    pub stages: Vec<StageOutput>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DistinguishOutput {
    pub distinguished: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RelFinObjectJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub left: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub right: Option<String>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct LovaszOutput {
    pub distinguished: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<RelationalJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_a: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hom_b: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub isomorphic: Option<bool>,
}

//! JSON form of target graphs:
//! `{"n": 3, "loops": [0, 1, 2], "edges": [[0, 1], [1, 2]], "weights": ["1", "2", "1/2"]}`.
//!
//! `loops` lists looped vertices, `edges` the non-loop edges with `u < v`, and
//! `weights` one exact fraction string per vertex.

use homlab_core::rational::{fraction_string, parse_fraction};
use homlab_core::{GraphError, TargetGraph};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TargetJson {
    pub n: usize,
    pub loops: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub weights: Vec<String>,
}

#[derive(Debug, thiserror::Error)]
pub enum TargetJsonError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("bad weight {0:?}")]
    Weight(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<&TargetGraph> for TargetJson {
    fn from(h: &TargetGraph) -> Self {
        TargetJson {
            n: h.n(),
            loops: h.looped_vertices(),
            edges: h.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            weights: h.weights().iter().map(fraction_string).collect(),
        }
    }
}

impl TryFrom<&TargetJson> for TargetGraph {
    type Error = TargetJsonError;

    fn try_from(j: &TargetJson) -> Result<Self, Self::Error> {
        let mut pairs: Vec<(usize, usize)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        pairs.extend(j.loops.iter().map(|&v| (v, v)));
        let weights = j.weights.iter().map(|w| parse_fraction(w).map_err(|_| TargetJsonError::Weight(w.clone()))).collect::<Result<Vec<_>, _>>()?;
        Ok(TargetGraph::from_edges(j.n, &pairs)?.with_weights(weights)?)
    }
}

pub fn to_json(h: &TargetGraph) -> String {
    serde_json::to_string(&TargetJson::from(h)).expect("plain data serializes")
}

pub fn from_json(s: &str) -> Result<TargetGraph, TargetJsonError> {
    let j: TargetJson = serde_json::from_str(s)?;
    TargetGraph::try_from(&j)
}

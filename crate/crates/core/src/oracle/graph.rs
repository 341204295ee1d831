use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::blocks::{block_partition, hom_target, is_balanced, BlockPartition, WeightSet};
use crate::error::Result;
use crate::linalg::q_to_string;
use crate::partitions::Partition;

use super::{HomQuery, Oracle};

/// A nonzero Hom space between two distinct weights.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomEdge {
    pub source: Partition,
    pub target: Partition,
    pub dim: usize,
}

/// Weights of `B_n(δ)` joined by the nonzero Hom spaces between them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockGraph {
    pub vertices: WeightSet,
    pub edges: Vec<HomEdge>,
}

/// Computes `dim Hom(Δ_n(λ), Δ_n(μ))` for every ordered pair of distinct
/// weights and keeps the nonzero ones.
pub fn block_graph(oracle: &Oracle, n: usize, delta: i64) -> Result<BlockGraph> {
    let vertices = WeightSet::new(n, delta);
    let w = &vertices.weights;
    let pairs: Vec<(usize, usize)> =
        (0..w.len()).flat_map(|i| (0..w.len()).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let dims = pairs
        .par_iter()
        .map(|&(i, j)| oracle.hom_dim(&HomQuery::new(n, delta, w[i].clone(), w[j].clone())))
        .collect::<Result<Vec<usize>>>()?;
    let edges = pairs
        .iter()
        .zip(dims)
        .filter(|(_, d)| *d > 0)
        .map(|(&(i, j), dim)| HomEdge { source: w[i].clone(), target: w[j].clone(), dim })
        .collect();
    Ok(BlockGraph { vertices, edges })
}

/// One verification outcome.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub params: Value,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    fn new(name: &str, params: Value, failure: Option<Value>) -> Self {
        let status = if failure.is_none() { "pass" } else { "fail" };
        Check { name: name.into(), params, status: status.into(), witness: failure }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }
}

/// Outcome of [`verify_blocks`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

fn part(p: &Partition) -> Value {
    json!(p.parts())
}

/// Compares the predicted block partition with computed Hom spaces,
/// homomorphism descents and central scalars.
pub fn verify_blocks(oracle: &Oracle, n: usize, delta: i64) -> Result<VerifyReport> {
    let params = json!({"n": n, "delta": delta});
    let mut checks = Vec::new();

    let blocks: Option<BlockPartition> = match block_partition(n, delta) {
        Ok(b) => {
            checks.push(Check::new("unique-minimal", params.clone(), None));
            Some(b)
        }
        Err(e) => {
            checks.push(Check::new("unique-minimal", params.clone(), Some(json!(e.to_string()))));
            None
        }
    };

    let graph = block_graph(oracle, n, delta)?;
    let unbalanced = graph.edges.iter().find(|e| !is_balanced(&e.source, &e.target, delta));
    checks.push(Check::new(
        "hom-edges-balanced",
        json!({"n": n, "delta": delta, "edges": graph.edges.len()}),
        unbalanced.map(|e| json!({"source": part(&e.source), "target": part(&e.target), "dim": e.dim})),
    ));

    let Some(blocks) = blocks else { return Ok(VerifyReport { checks }) };

    let descents = blocks
        .blocks
        .par_iter()
        .flat_map_iter(|class| class.members.iter().map(move |m| (class, m)))
        .map(|(class, start)| descent_failure(oracle, n, delta, start, &class.minimal))
        .collect::<Result<Vec<Option<Value>>>>()?;
    checks.push(Check::new("descent", params.clone(), descents.into_iter().flatten().next()));

    let mut scalar_failure = None;
    for class in &blocks.blocks {
        let mut seen: BTreeMap<String, &Partition> = BTreeMap::new();
        for m in &class.members {
            match oracle.central_scalar(n, delta, m) {
                Ok(s) => {
                    seen.insert(q_to_string(&s), m);
                }
                Err(e) => {
                    scalar_failure.get_or_insert(json!({"weight": part(m), "error": e.to_string()}));
                }
            }
        }
        if seen.len() > 1 {
            let detail: Vec<Value> = seen.iter().map(|(s, m)| json!({"scalar": s, "weight": part(m)})).collect();
            scalar_failure.get_or_insert(json!(detail));
        }
    }
    checks.push(Check::new("central-scalars", params, scalar_failure));
    Ok(VerifyReport { checks })
}

fn descent_failure(
    oracle: &Oracle,
    n: usize,
    delta: i64,
    start: &Partition,
    minimal: &Partition,
) -> Result<Option<Value>> {
    let mut cur = start.clone();
    loop {
        let next = match hom_target(&cur, delta) {
            Ok(Some(next)) => next,
            Ok(None) => {
                if &cur == minimal {
                    return Ok(None);
                }
                return Ok(Some(json!({"start": part(start), "stuck_at": part(&cur), "minimal": part(minimal)})));
            }
            Err(e) => return Ok(Some(json!({"start": part(start), "at": part(&cur), "error": e.to_string()}))),
        };
        let dim = oracle.hom_dim(&HomQuery::new(n, delta, cur.clone(), next.clone()))?;
        if dim == 0 {
            return Ok(Some(json!({"start": part(start), "source": part(&cur), "target": part(&next), "dim": 0})));
        }
        cur = next;
    }
}

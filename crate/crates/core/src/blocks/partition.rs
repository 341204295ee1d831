use petgraph::unionfind::UnionFind;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

use super::balanced::is_balanced;
use super::construct::is_weight;

/// The weights `Λ_n` of `B_n(δ)`: partitions of `n, n−2, …`, largest size
/// first, omitting `∅` when `δ = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightSet {
    pub n: usize,
    pub delta: i64,
    pub weights: Vec<Partition>,
}

impl WeightSet {
    pub fn new(n: usize, delta: i64) -> Self {
        let weights = (0..=n / 2)
            .flat_map(|t| Partition::all_of_size(n - 2 * t))
            .filter(|p| is_weight(p, delta))
            .collect();
        WeightSet { n, delta, weights }
    }

    pub fn contains(&self, p: &Partition) -> bool {
        self.weights.contains(p)
    }
}

/// One block: its unique smallest weight and all members.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockClass {
    pub minimal: Partition,
    pub members: Vec<Partition>,
}

/// The partition of `Λ_n` into blocks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockPartition {
    pub n: usize,
    pub delta: i64,
    pub blocks: Vec<BlockClass>,
}

impl BlockPartition {
    pub fn class_of(&self, p: &Partition) -> Option<&BlockClass> {
        self.blocks.iter().find(|c| c.members.contains(p))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("block partitions serialize")
    }
}

/// Groups `Λ_n` by the balanced relation, closing it transitively.
pub fn block_partition(n: usize, delta: i64) -> Result<BlockPartition> {
    let ws = WeightSet::new(n, delta);
    let w = &ws.weights;
    let edges: Vec<(usize, usize)> = (0..w.len())
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..w.len()).filter(move |&j| is_balanced(&w[i], &w[j], delta)).map(move |j| (i, j)))
        .collect();
    let mut uf = UnionFind::new(w.len());
    for (i, j) in edges {
        uf.union(i, j);
    }
    let labels = uf.into_labeling();
    let mut order: Vec<usize> = Vec::new();
    for &l in &labels {
        if !order.contains(&l) {
            order.push(l);
        }
    }
    let blocks = order
        .into_iter()
        .map(|l| {
            let members: Vec<Partition> = (0..w.len()).filter(|&i| labels[i] == l).map(|i| w[i].clone()).collect();
            let least = members.iter().map(Partition::size).min().unwrap_or(0);
            let smallest: Vec<&Partition> = members.iter().filter(|m| m.size() == least).collect();
            if smallest.len() != 1 {
                return Err(Error::Internal(format!(
                    "block of ({}) has {} smallest members at n = {n}, delta = {delta}",
                    members[0],
                    smallest.len()
                )));
            }
            Ok(BlockClass { minimal: smallest[0].clone(), members })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(BlockPartition { n, delta, blocks })
}

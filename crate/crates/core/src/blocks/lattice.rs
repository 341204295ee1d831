use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{skew_of, Cell, Partition, SkewShape};

use super::balanced::is_balanced;

/// The predicted submodule lattice for a skew of isolated matched pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticePrediction {
    pub m: usize,
    /// The pairs `(ε_i, ε_i′)`, the first box having the larger content.
    pub pairs: Vec<(Cell, Cell)>,
    /// Node `x ⊆ {1..m}` (sorted, 1-based) mapped to `λ − x`.
    pub nodes: BTreeMap<Vec<usize>, Partition>,
    /// Covers `(x, x ∪ {j})`.
    pub covers: Vec<(Vec<usize>, Vec<usize>)>,
}

impl LatticePrediction {
    pub fn to_dot(&self) -> String {
        let name = |x: &[usize]| format!("\"{{{}}}\"", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
        let mut out = String::from("digraph lattice {\n");
        for (x, p) in &self.nodes {
            out.push_str(&format!("  {} [label=\"({p})\"];\n", name(x)));
        }
        for (x, y) in &self.covers {
            out.push_str(&format!("  {} -> {};\n", name(x), name(y)));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the `2^m`-node superset lattice for `λ/μ` made of `2m` isolated
/// boxes paired by contents summing to `1 − δ`.
pub fn lattice_predict(lambda: &Partition, mu: &Partition, delta: i64) -> Result<LatticePrediction> {
    if !mu.is_contained_in(lambda) || !is_balanced(lambda, mu, delta) {
        return Err(Error::InvalidParameters(format!("({lambda}) and ({mu}) are not a balanced nested pair")));
    }
    let skew = skew_of(lambda, mu);
    let isolated = skew.components().iter().all(|c| c.len() == 1);
    if !isolated {
        return Err(Error::InvalidParameters("the skew is not made of isolated boxes".into()));
    }
    let mut pool: Vec<Cell> = skew.boxes().copied().collect();
    pool.sort_by_key(|b| (std::cmp::Reverse(b.content()), b.row));
    let mut pairs = Vec::new();
    while let Some(a) = pool.first().copied() {
        pool.remove(0);
        let k = pool
            .iter()
            .position(|b| b.content() + a.content() == 1 - delta)
            .ok_or_else(|| Error::InvalidParameters(format!("{a} has no partner")))?;
        pairs.push((a, pool.remove(k)));
    }
    let m = pairs.len();
    let mut nodes = BTreeMap::new();
    let mut covers = Vec::new();
    for mask in 0u32..(1 << m) {
        let x: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let boxes = SkewShape::new(x.iter().flat_map(|&i| [pairs[i - 1].0, pairs[i - 1].1]));
        nodes.insert(x.clone(), lambda.remove_boxes(&boxes)?);
        for j in 1..=m {
            if !x.contains(&j) {
                let mut y = x.clone();
                y.push(j);
                y.sort();
                covers.push((x.clone(), y));
            }
        }
    }
    Ok(LatticePrediction { m, pairs, nodes, covers })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        let l = Partition::of(&[2, 1]);
        let p = lattice_predict(&l, &l, 1).unwrap();
        assert_eq!(p.nodes.len(), 1);
        let p = lattice_predict(&Partition::of(&[3, 2]), &Partition::of(&[3]), 2);
        assert!(p.is_err());
        let p = lattice_predict(&Partition::of(&[2, 1]), &Partition::of(&[1]), 1).unwrap();
        assert_eq!((p.m, p.nodes.len(), p.covers.len()), (1, 2, 1));
        assert_eq!(p.nodes[&vec![1]], Partition::of(&[1]));
    }

    #[test]
    fn three_pairs() {
        let l = Partition::of(&[6, 5, 4, 3, 2, 1]);
        let m = Partition::of(&[5, 4, 3, 2, 1]);
        let p = lattice_predict(&l, &m, 1).unwrap();
        assert_eq!((p.m, p.nodes.len(), p.covers.len()), (3, 8, 12));
        assert_eq!(p.to_dot().matches("->").count(), 12);
        assert!(p.nodes.values().all(|q| is_balanced(q, &l, 1)));
        assert!(lattice_predict(&l, &m, 2).is_err());
    }
}

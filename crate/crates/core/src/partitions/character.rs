use std::collections::HashMap;

use super::Partition;
use crate::error::{Error, Result};

/// Irreducible character `χ^λ` at the class of the given cycle type, by the
/// Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    if lambda.size() != cycle_type.size() {
        return Err(Error::InvalidParameters(format!(
            "character of a partition of {} at a class of {}",
            lambda.size(),
            cycle_type.size()
        )));
    }
    let len = lambda.num_rows();
    let beta: Vec<usize> = (0..len).map(|i| lambda.part(i) + (len - 1 - i)).collect();
    let mut memo = HashMap::new();
    Ok(mn(beta, cycle_type.parts(), &mut memo))
}

fn mn(beta: Vec<usize>, rho: &[usize], memo: &mut HashMap<(Vec<usize>, usize), i64>) -> i64 {
    let Some((&r, rest)) = rho.split_first() else {
        return 1;
    };
    let key = (beta.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0;
    for (i, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut next = beta.clone();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        let v = mn(next, rest, memo);
        total += if between % 2 == 0 { v } else { -v };
    }
    memo.insert(key, total);
    total
}

/// Size of the conjugacy class of the given cycle type, `n!/z_ρ`.
pub fn class_size(cycle_type: &Partition) -> u128 {
    let n = cycle_type.size();
    let mut z: u128 = 1;
    let mut counts: HashMap<usize, u128> = HashMap::new();
    for &p in cycle_type.parts() {
        *counts.entry(p).or_default() += 1;
    }
    for (&part, &m) in &counts {
        z *= (part as u128).pow(m as u32);
        z *= (1..=m).product::<u128>();
    }
    let fact: u128 = (1..=n as u128).product();
    fact / z
}

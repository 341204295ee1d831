use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::partitions::{skew_of, Cell, Partition, SkewShape};

use super::balanced::{is_balanced, self_paired_content, vertical_pair_contents};
use super::hat::is_minimal;

/// The latest-row box of content `c` in `pool` that is not in `used`.
fn latest_with_content(pool: &BTreeSet<Cell>, used: &BTreeSet<Cell>, c: i64) -> Option<Cell> {
    pool.iter().filter(|b| b.content() == c && !used.contains(b)).max_by_key(|b| b.row).copied()
}

/// Adds every box of `λ` lying weakly right of and below a box of `s`.
fn quadrant_closure(lambda: &Partition, s: &mut BTreeSet<Cell>) {
    let mut extra = Vec::new();
    for b in s.iter() {
        for row in b.row..=lambda.num_rows() {
            for col in b.col..=lambda.part(row - 1) {
                extra.push(Cell { row, col });
            }
        }
    }
    s.extend(extra);
}

/// Closes `s` under quadrants in `λ` and partner repair from `λ/μ` until
/// stable; contents equal to `excluded` are never repaired.
fn stabilise(lambda: &Partition, skew: &BTreeSet<Cell>, delta: i64, s: &mut BTreeSet<Cell>) -> Result<()> {
    let star = self_paired_content(delta);
    loop {
        let before = s.len();
        quadrant_closure(lambda, s);
        loop {
            let deficit = s.iter().map(Cell::content).find(|&c| {
                Some(c) != star && count(s, c) > count(s, 1 - delta - c)
            });
            let Some(c) = deficit else { break };
            let partner = latest_with_content(skew, s, 1 - delta - c)
                .ok_or_else(|| Error::InvalidParameters(format!("no partner of content {} left in the skew", 1 - delta - c)))?;
            s.insert(partner);
        }
        if s.len() == before {
            return Ok(());
        }
    }
}

fn count(s: &BTreeSet<Cell>, c: i64) -> usize {
    s.iter().filter(|b| b.content() == c).count()
}

fn has_vertical_pair(s: &BTreeSet<Cell>, upper: i64) -> bool {
    s.iter().any(|b| b.content() == upper && s.contains(&Cell { row: b.row + 1, col: b.col }))
}

/// The skew `λ/μ^i` removed by the `i`-maximal balanced subpartition for
/// the removable box `ε_i` of `λ/μ`.
pub fn i_maximal_skew(lambda: &Partition, mu: &Partition, delta: i64, eps: Cell) -> Result<SkewShape> {
    if !mu.is_contained_in(lambda) || !is_balanced(lambda, mu, delta) {
        return Err(Error::InvalidParameters(format!("({lambda}) and ({mu}) are not a balanced nested pair")));
    }
    let skew: BTreeSet<Cell> = skew_of(lambda, mu).set().clone();
    if !skew.contains(&eps) || !lambda.removable_boxes().contains(&eps) {
        return Err(Error::InvalidParameters(format!("{eps} is not a removable box of the skew")));
    }
    let mut s = BTreeSet::from([eps]);
    let partner_content = 1 - delta - eps.content();
    if partner_content != eps.content() {
        let partner = latest_with_content(&skew, &s, partner_content)
            .ok_or_else(|| Error::InvalidParameters(format!("{eps} has no partner in the skew")))?;
        s.insert(partner);
    }
    stabilise(lambda, &skew, delta, &mut s)?;

    let all: BTreeSet<Cell> = lambda.boxes().into_iter().collect();
    let mut added = false;
    if let Some((upper, lower)) = vertical_pair_contents(delta) {
        if has_vertical_pair(&s, upper) {
            let x = latest_with_content(&all, &s, upper);
            let y = latest_with_content(&all, &s, lower);
            let (Some(x), Some(y)) = (x, y) else {
                return Err(Error::InvalidParameters("no unused vertical pair contents left".into()));
            };
            s.extend([x, y]);
            added = true;
        }
    } else if let Some(star) = self_paired_content(delta) {
        if s.iter().any(|b| b.content() == star) {
            let z = latest_with_content(&all, &s, star)
                .ok_or_else(|| Error::InvalidParameters("no unused self-paired box left".into()))?;
            s.insert(z);
            added = true;
        }
    }
    if added {
        stabilise(lambda, &skew, delta, &mut s)?;
    }

    let out = SkewShape::new(s);
    let rest = lambda
        .remove_boxes(&out)
        .map_err(|_| Error::InvalidParameters(format!("construction for {eps} does not leave a partition")))?;
    if !is_balanced(lambda, &rest, delta) {
        return Err(Error::InvalidParameters(format!("construction for {eps} is not balanced")));
    }
    Ok(out)
}

/// The `i`-maximal balanced subpartition `μ^i` for the removable box `ε_i`.
pub fn i_maximal_balanced_sub(lambda: &Partition, mu: &Partition, delta: i64, eps: Cell) -> Result<Partition> {
    let s = i_maximal_skew(lambda, mu, delta, eps)?;
    lambda.remove_boxes(&s)
}

/// The skew of a maximal balanced subpartition: an inclusion-minimal
/// `λ/μ^i`, ties broken by the least sorted box list.
pub fn maximal_balanced_skew(lambda: &Partition, mu: &Partition, delta: i64) -> Result<SkewShape> {
    if mu == lambda || !mu.is_contained_in(lambda) {
        return Err(Error::InvalidParameters(format!("({mu}) is not a proper subpartition of ({lambda})")));
    }
    if !is_balanced(lambda, mu, delta) {
        return Err(Error::InvalidParameters(format!("({lambda}) and ({mu}) are not balanced at delta = {delta}")));
    }
    let skew = skew_of(lambda, mu);
    let candidates: BTreeSet<SkewShape> = lambda
        .removable_boxes()
        .into_iter()
        .filter(|b| skew.contains(b))
        .filter_map(|b| i_maximal_skew(lambda, mu, delta, b).ok())
        .collect();
    let minimal = candidates
        .iter()
        .filter(|s| !candidates.iter().any(|o| o != *s && o.is_subset(s)))
        .min_by(|a, b| a.boxes().cmp(b.boxes()));
    minimal.cloned().ok_or_else(|| {
        Error::Internal(format!("no removable box of ({lambda})/({mu}) yields a balanced subpartition at delta = {delta}"))
    })
}

/// A maximal balanced subpartition `μ′` between `μ` and `λ`.
pub fn maximal_balanced_sub(lambda: &Partition, mu: &Partition, delta: i64) -> Result<Partition> {
    let s = maximal_balanced_skew(lambda, mu, delta)?;
    lambda.remove_boxes(&s)
}

/// Whether a partition is a weight of `B_n(δ)` for some `n`.
pub fn is_weight(p: &Partition, delta: i64) -> bool {
    delta != 0 || !p.is_empty()
}

/// The smallest weight contained in `λ` and balanced with it.
pub fn minimal_weight(lambda: &Partition, delta: i64) -> Result<Partition> {
    if !is_weight(lambda, delta) {
        return Err(Error::InvalidParameters("the empty partition is not a weight at delta = 0".into()));
    }
    let subs: Vec<Partition> = lambda
        .subpartitions()
        .into_iter()
        .filter(|m| is_weight(m, delta) && is_balanced(lambda, m, delta))
        .collect();
    let least = subs[0].size();
    let tied: Vec<&Partition> = subs.iter().take_while(|m| m.size() == least).collect();
    if tied.len() > 1 {
        return Err(Error::Internal(format!(
            "({lambda}) has {} balanced subpartitions of least size {least} at delta = {delta}",
            tied.len()
        )));
    }
    Ok(tied[0].clone())
}

/// Whether no strictly smaller weight inside `λ` is balanced with it.
pub fn is_minimal_exact(lambda: &Partition, delta: i64) -> bool {
    lambda
        .subpartitions()
        .into_iter()
        .take_while(|m| m.size() < lambda.size())
        .all(|m| !is_weight(&m, delta) || !is_balanced(lambda, &m, delta))
}

/// A strictly smaller weight predicted to receive a nonzero homomorphism
/// from `Δ_n(λ)`, or `None` when `λ` is minimal in its block.
pub fn hom_target(lambda: &Partition, delta: i64) -> Result<Option<Partition>> {
    let floor = minimal_weight(lambda, delta)?;
    if &floor == lambda {
        return Ok(None);
    }
    maximal_balanced_sub(lambda, &floor, delta).map(Some)
}

/// Agreement of the shape classifier with exhaustive search.
pub fn classifier_agrees(lambda: &Partition, delta: i64) -> bool {
    is_minimal(lambda, delta) == is_minimal_exact(lambda, delta)
}

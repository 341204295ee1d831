use std::collections::BTreeMap;

use crate::linalg::{q, Q};
use crate::partitions::{skew, Partition, SkewShape};
use crate::error::{Error, Result};

/// The self-paired content `(1−δ)/2`, when it is an integer.
pub fn self_paired_content(delta: i64) -> Option<i64> {
    ((1 - delta) % 2 == 0).then(|| (1 - delta) / 2)
}

/// For even `δ`: the contents `((2−δ)/2, −δ/2)` of the upper and lower box
/// of a vertical pair.
pub fn vertical_pair_contents(delta: i64) -> Option<(i64, i64)> {
    (delta % 2 == 0).then(|| ((2 - delta) / 2, -delta / 2))
}

fn content_counts(s: &SkewShape) -> BTreeMap<i64, usize> {
    let mut counts = BTreeMap::new();
    for b in s.boxes() {
        *counts.entry(b.content()).or_insert(0) += 1;
    }
    counts
}

/// Whether the boxes of `s` can be paired so that each pair's contents sum
/// to `1 − δ`.
pub fn has_pairing(s: &SkewShape, delta: i64) -> bool {
    let counts = content_counts(s);
    counts.iter().all(|(&c, &k)| {
        let partner = 1 - delta - c;
        if partner == c {
            k % 2 == 0
        } else {
            counts.get(&partner).copied().unwrap_or(0) == k
        }
    })
}

/// The column-parity condition for even `δ`: when some box of content
/// `(2−δ)/2` sits directly above a box of content `−δ/2` and no box of
/// content `(2−δ)/2` lies in a strictly greater column, the number of
/// content-`(2−δ)/2` boxes must be even.
pub fn column_condition(s: &SkewShape, delta: i64) -> bool {
    let Some((upper, _)) = vertical_pair_contents(delta) else { return true };
    let uppers: Vec<_> = s.boxes().filter(|b| b.content() == upper).collect();
    let max_col = uppers.iter().map(|b| b.col).max();
    let fires = uppers.iter().any(|b| {
        let below = crate::partitions::Cell { row: b.row + 1, col: b.col };
        s.contains(&below) && max_col.is_some_and(|m| m <= b.col)
    });
    !fires || uppers.len() % 2 == 0
}

fn side_ok(s: &SkewShape, delta: i64) -> bool {
    has_pairing(s, delta) && column_condition(s, delta)
}

/// Whether `λ` and `μ` are `δ`-balanced.
pub fn is_balanced(lambda: &Partition, mu: &Partition, delta: i64) -> bool {
    let (a, b) = skew(lambda, mu);
    side_ok(&a, delta) && side_ok(&b, delta)
}

/// `Σ_{d∈λ△τ} c(d) − t(1−δ)` where `2t = |λ△τ|`.
pub fn bias(lambda: &Partition, tau: &Partition, delta: i64) -> Result<Q> {
    let (a, b) = skew(lambda, tau);
    let size = a.len() + b.len();
    if size % 2 != 0 {
        return Err(Error::InvalidParameters(format!("odd symmetric difference between {lambda} and {tau}")));
    }
    let sum: i64 = a.contents().iter().chain(b.contents().iter()).sum();
    Ok(q(sum - (size as i64 / 2) * (1 - delta)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::of(x)
    }

    #[test]
    fn worked_examples() {
        let l = p(&[6, 4, 4, 2, 1]);
        assert!(is_balanced(&l, &l, 3));
        assert!(is_balanced(&p(&[6, 5, 5, 2, 1]), &p(&[6, 4, 1]), 2));
        assert!(!is_balanced(&p(&[6, 4, 4, 2, 1]), &p(&[5, 2, 2]), 1));
        assert!(!is_balanced(&p(&[5, 4, 4, 4, 4]), &p(&[5, 1, 1, 1, 1]), 2));
        assert!(is_balanced(&p(&[7, 6, 6, 5, 4, 4, 2]), &p(&[5, 3, 2, 2, 1, 1]), 1));
        assert!(!is_balanced(&p(&[7, 6, 6, 5, 4, 4, 2]), &p(&[5, 3, 2, 2, 2, 1]), 1));
    }

    #[test]
    fn biases() {
        assert_eq!(bias(&p(&[3, 1]), &p(&[3, 1]), 2).unwrap(), q(0));
        assert_eq!(bias(&p(&[6, 5, 5, 2, 1]), &p(&[6, 4, 1]), 2).unwrap(), q(0));
        assert_eq!(bias(&p(&[2]), &Partition::empty(), 2).unwrap(), q(2));
        assert!(bias(&p(&[2]), &p(&[1]), 2).is_err());
    }

    #[test]
    fn vertical_domino() {
        assert!(!is_balanced(&p(&[1, 1]), &Partition::empty(), 2));
        assert!(is_balanced(&p(&[2, 2]), &p(&[2]), 2));
    }
}

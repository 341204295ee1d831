use std::fmt;

use serde::Serialize;

use crate::partitions::{Cell, Partition, SkewShape};

/// One stripping step of the hat construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HatStep {
    /// Every row up to and including this one was removed.
    Rows(usize),
    /// Every column up to and including this one was removed.
    Columns(usize),
}

impl fmt::Display for HatStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HatStep::Rows(r) => write!(f, "rows 1..{r}"),
            HatStep::Columns(c) => write!(f, "columns 1..{c}"),
        }
    }
}

/// The remaining skew `λ̂` together with the stripping steps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HatTrace {
    pub remaining: SkewShape,
    pub steps: Vec<HatStep>,
}

/// Runs the hat construction and records each strip.
pub fn hat_trace(lambda: &Partition, delta: i64) -> HatTrace {
    let (mut top, mut left) = (0usize, 0usize);
    let mut steps = Vec::new();
    let region = |top: usize, left: usize| -> Vec<Cell> {
        lambda.boxes().into_iter().filter(|b| b.row > top && b.col > left).collect()
    };
    loop {
        let cells = region(top, left);
        let has_partner = |e: &Cell| cells.iter().any(|b| b != e && b.content() + e.content() == 1 - delta);
        // distance from (1−δ)/2, doubled
        let dist = |e: &Cell| (2 * e.content() - (1 - delta)).abs();
        let corners: Vec<Cell> = lambda.removable_boxes().into_iter().filter(|b| b.row > top && b.col > left).collect();
        let Some(far) = corners.iter().map(dist).max() else { break };
        let tied: Vec<&Cell> = corners.iter().filter(|e| dist(e) == far).collect();
        let eps = *tied.iter().find(|e| !has_partner(e)).unwrap_or(&tied[0]);
        if has_partner(eps) || far == 0 {
            break;
        }
        if 2 * eps.content() > 1 - delta {
            top = eps.row;
            steps.push(HatStep::Rows(top));
        } else {
            left = eps.col;
            steps.push(HatStep::Columns(left));
        }
    }
    HatTrace { remaining: SkewShape::new(region(top, left)), steps }
}

/// The skew `λ̂` left after stripping rows and columns that cannot take part
/// in a balanced removal.
pub fn hat(lambda: &Partition, delta: i64) -> SkewShape {
    hat_trace(lambda, delta).remaining
}

/// Shape test on `λ̂`: empty, one row, one column, or for even `δ` two rows
/// whose lower row ends in content `−δ/2`.
pub fn is_minimal(lambda: &Partition, delta: i64) -> bool {
    let h = hat(lambda, delta);
    let rows: std::collections::BTreeSet<usize> = h.boxes().map(|b| b.row).collect();
    let cols: std::collections::BTreeSet<usize> = h.boxes().map(|b| b.col).collect();
    if rows.len() <= 1 || cols.len() == 1 {
        return true;
    }
    if delta % 2 == 0 && rows.len() == 2 {
        let last = rows.iter().next_back().copied().unwrap_or(0);
        let end = h.boxes().filter(|b| b.row == last).map(|b| b.col).max().unwrap_or(0);
        return end as i64 - last as i64 == -delta / 2;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourteen_sequence() {
        let t = hat_trace(&Partition::of(&[7, 7, 6, 5, 4, 2, 1, 1]), 1);
        assert_eq!(t.steps, vec![HatStep::Columns(1), HatStep::Rows(2), HatStep::Columns(2), HatStep::Rows(3)]);
    }

    #[test]
    fn empty_hat() {
        assert!(hat(&Partition::empty(), 1).is_empty());
        assert!(is_minimal(&Partition::empty(), 1));
        assert!(!is_minimal(&Partition::of(&[2, 2]), 1));
    }
}

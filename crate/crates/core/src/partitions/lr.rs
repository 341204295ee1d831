use super::Partition;
use crate::error::{Error, Result};

/// Littlewood–Richardson coefficient `c^λ_{μη}`, by enumerating the ways
/// of adding the rows of `η` to `μ` one horizontal strip at a time, with
/// the labels of each row placed right to left and every label strictly
/// below the label with the same index in the previous row.
pub fn lr_coefficient(mu: &Partition, eta: &Partition, lambda: &Partition) -> u64 {
    if mu.size() + eta.size() != lambda.size() || !mu.is_contained_in(lambda) || !eta.is_contained_in(lambda) {
        return 0;
    }
    // `prev_rows[j]` is the row holding label `b_{i-1, j+1}` of the previous row.
    let rows = lambda.num_rows();
    let start: Vec<usize> = (0..rows).map(|r| mu.part(r)).collect();
    count(&start, eta.parts(), lambda, None)
}

fn count(shape: &[usize], eta_rest: &[usize], lambda: &Partition, prev_rows: Option<&[usize]>) -> u64 {
    let Some((&k, rest)) = eta_rest.split_first() else {
        return u64::from((0..shape.len()).all(|r| shape[r] == lambda.part(r)));
    };
    let mut total = 0;
    let mut added = vec![0; shape.len()];
    strips(shape, lambda, 0, k, &mut added, &mut |added| {
        // Labels b_{i1}, b_{i2}, .. sit right to left, so the rightmost box
        // (the topmost row with additions, since strips go up-right) is b_{i1}.
        let mut label_rows = Vec::with_capacity(k);
        for (r, &a) in added.iter().enumerate() {
            for _ in 0..a {
                label_rows.push(r);
            }
        }
        if let Some(prev) = prev_rows {
            if label_rows.iter().zip(prev).any(|(&r, &p)| r <= p) {
                return;
            }
        }
        let next: Vec<usize> = shape.iter().zip(added).map(|(s, a)| s + a).collect();
        total += count(&next, rest, lambda, Some(&label_rows));
    });
    total
}

/// Enumerates horizontal strips of size `k` on `shape` inside `lambda`.
fn strips(shape: &[usize], lambda: &Partition, row: usize, k: usize, added: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if k == 0 {
        f(added);
        return;
    }
    if row >= shape.len() {
        return;
    }
    let cap_above = if row == 0 { usize::MAX } else { shape[row - 1] };
    let max = lambda.part(row).min(cap_above).saturating_sub(shape[row]).min(k);
    for a in (0..=max).rev() {
        added[row] = a;
        strips(shape, lambda, row + 1, k - a, added, f);
    }
    added[row] = 0;
}

/// For a rectangle `λ = (a^b)` containing `μ`, the unique `η` with
/// `c^λ_{μη} ≠ 0`: its parts are the row lengths of `λ/μ` read bottom up.
/// Returns `None` when `λ/μ` is empty.
pub fn unique_rectangle_eta(mu: &Partition, lambda: &Partition) -> Result<Option<Partition>> {
    if !lambda.is_rectangle() {
        return Err(Error::InvalidPartition(format!("{lambda} is not a rectangle")));
    }
    if !mu.is_contained_in(lambda) {
        return Err(Error::InvalidPartition(format!("{mu} is not contained in {lambda}")));
    }
    if mu == lambda {
        return Ok(None);
    }
    let parts: Vec<usize> = (0..lambda.num_rows()).rev().map(|r| lambda.part(r) - mu.part(r)).collect();
    Partition::new(parts).map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: &[usize]) -> Partition {
        Partition::of(x)
    }

    #[test]
    fn small_coefficients() {
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[2]), &p(&[4, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 2]), &p(&[1, 1]), &p(&[4, 2])), 0);
        assert_eq!(lr_coefficient(&p(&[1]), &Partition::empty(), &p(&[1])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2]), &p(&[3, 2])), 1);
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), 2);
    }

    #[test]
    fn rectangle_eta() {
        assert_eq!(unique_rectangle_eta(&p(&[3, 3]), &p(&[3, 3])).unwrap(), None);
        assert_eq!(unique_rectangle_eta(&p(&[2, 1]), &p(&[3, 3])).unwrap(), Some(p(&[2, 1])));
        assert_eq!(unique_rectangle_eta(&p(&[3, 1]), &p(&[3, 3])).unwrap(), Some(p(&[2])));
        assert!(unique_rectangle_eta(&p(&[1]), &p(&[2, 1])).is_err());
    }
}

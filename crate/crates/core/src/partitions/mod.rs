//! Young-diagram combinatorics.

mod character;
mod lr;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use character::{class_size, mn_character};
pub use lr::{lr_coefficient, unique_rectangle_eta};

/// A partition, stored as its nonzero parts in weakly decreasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

/// A box of a Young diagram; rows and columns start at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "boxes are 1-indexed");
        Cell { row, col }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn charge(&self, delta: i64) -> i64 {
        delta - 1 + 2 * self.content()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A set of boxes in absolute coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    boxes: BTreeSet<Cell>,
}

impl SkewShape {
    pub fn new(boxes: impl IntoIterator<Item = Cell>) -> Self {
        SkewShape { boxes: boxes.into_iter().collect() }
    }

    pub fn boxes(&self) -> impl Iterator<Item = &Cell> + '_ {
        self.boxes.iter()
    }

    pub fn set(&self) -> &BTreeSet<Cell> {
        &self.boxes
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn contains(&self, b: &Cell) -> bool {
        self.boxes.contains(b)
    }

    /// Contents in box order (row-major).
    pub fn contents(&self) -> Vec<i64> {
        self.boxes.iter().map(Cell::content).collect()
    }

    pub fn count_content(&self, c: i64) -> usize {
        self.boxes.iter().filter(|b| b.content() == c).count()
    }

    pub fn is_subset(&self, other: &SkewShape) -> bool {
        self.boxes.is_subset(&other.boxes)
    }

    /// Boxes grouped into edge-connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<Cell>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for &start in &self.boxes {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            while let Some(b) = stack.pop() {
                let mut nbrs = vec![Cell { row: b.row + 1, col: b.col }, Cell { row: b.row, col: b.col + 1 }];
                if b.row > 1 {
                    nbrs.push(Cell { row: b.row - 1, col: b.col });
                }
                if b.col > 1 {
                    nbrs.push(Cell { row: b.row, col: b.col - 1 });
                }
                for nb in nbrs {
                    if self.boxes.contains(&nb) && seen.insert(nb) {
                        comp.push(nb);
                        stack.push(nb);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }
}

impl Partition {
    /// Validates weak decrease; trailing zeros are stripped.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has an interior zero")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[usize]) -> Self {
        Self::new(parts.to_vec()).expect("invalid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Part `i` (zero based), or zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn num_rows(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn has_box(&self, b: &Cell) -> bool {
        b.row >= 1 && b.col >= 1 && self.part(b.row - 1) >= b.col
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &len) in self.0.iter().enumerate() {
            for c in 1..=len {
                out.push(Cell { row: r + 1, col: c });
            }
        }
        out
    }

    pub fn as_skew(&self) -> SkewShape {
        SkewShape::new(self.boxes())
    }

    pub fn contents(&self) -> Vec<i64> {
        self.boxes().iter().map(Cell::content).collect()
    }

    pub fn content_sum(&self) -> i64 {
        self.contents().iter().sum()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition((1..=cols).map(|c| self.0.iter().filter(|&&p| p >= c).count()).collect())
    }

    /// Boxes whose addition gives a partition, sorted by content.
    pub fn addable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 0..=self.0.len() {
            let c = self.part(r) + 1;
            if r == 0 || self.part(r - 1) >= c {
                out.push(Cell { row: r + 1, col: c });
            }
        }
        out.sort_by_key(Cell::content);
        out
    }

    /// Boxes whose removal gives a partition, sorted by content.
    pub fn removable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 0..self.0.len() {
            if self.part(r + 1) < self.part(r) {
                out.push(Cell { row: r + 1, col: self.part(r) });
            }
        }
        out.sort_by_key(Cell::content);
        out
    }

    pub fn add_box(&self, b: &Cell) -> Result<Partition> {
        if !self.addable_boxes().contains(b) {
            return Err(Error::InvalidPartition(format!("{b} is not addable to {self}")));
        }
        let mut parts = self.0.clone();
        if b.row > parts.len() {
            parts.push(1);
        } else {
            parts[b.row - 1] += 1;
        }
        Ok(Partition(parts))
    }

    pub fn remove_box(&self, b: &Cell) -> Result<Partition> {
        if !self.removable_boxes().contains(b) {
            return Err(Error::InvalidPartition(format!("{b} is not removable from {self}")));
        }
        let mut parts = self.0.clone();
        parts[b.row - 1] -= 1;
        Partition::new(parts)
    }

    /// Removes a set of boxes; fails unless the result is a partition.
    pub fn remove_boxes(&self, boxes: &SkewShape) -> Result<Partition> {
        if !boxes.boxes().all(|b| self.has_box(b)) {
            return Err(Error::InvalidPartition(format!("boxes not inside {self}")));
        }
        let rest: BTreeSet<Cell> = self.boxes().into_iter().filter(|b| !boxes.contains(b)).collect();
        Partition::from_cells(&rest)
    }

    /// The partition occupying exactly the given boxes, if they form one.
    pub fn from_cells(cells: &BTreeSet<Cell>) -> Result<Partition> {
        let rows = cells.iter().map(|b| b.row).max().unwrap_or(0);
        let mut parts = vec![0; rows];
        for b in cells {
            parts[b.row - 1] += 1;
        }
        let p = Partition::new(parts).map_err(|_| Error::InvalidPartition("box set is not a Young diagram".into()))?;
        if p.size() != cells.len() || !cells.iter().all(|b| p.has_box(b)) {
            return Err(Error::InvalidPartition("box set is not a Young diagram".into()));
        }
        Ok(p)
    }

    /// Rowwise containment `[self] ⊆ [other]`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.0.len() <= other.0.len() && self.0.iter().enumerate().all(|(i, &p)| p <= other.part(i))
    }

    /// Rowwise minimum.
    pub fn intersection(&self, other: &Partition) -> Partition {
        let len = self.0.len().min(other.0.len());
        Partition((0..len).map(|i| self.part(i).min(other.part(i))).collect())
    }

    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// Every part even (vacuously true for ∅).
    pub fn is_even(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    /// Labels (zero based) in each row of the row-reading tableau.
    pub fn row_blocks(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut label = 0;
        for &len in &self.0 {
            out.push((label..label + len).collect());
            label += len;
        }
        out
    }

    /// Labels (zero based) in each column of the row-reading tableau.
    pub fn column_blocks(&self) -> Vec<Vec<usize>> {
        let rows = self.row_blocks();
        (0..self.part(0)).map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect()).collect()
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn specht_dim(&self) -> u64 {
        let conj = self.conjugate();
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for (k, b) in self.boxes().iter().enumerate() {
            num *= (k + 1) as u128;
            let hook = (self.part(b.row - 1) - b.col) + (conj.part(b.col - 1) - b.row) + 1;
            den *= hook as u128;
            let g = gcd(num, den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        (num / den) as u64
    }

    /// Number of standard Young tableaux, by peeling removable boxes.
    pub fn count_standard_tableaux(&self) -> u64 {
        fn go(p: &Partition, memo: &mut std::collections::HashMap<Partition, u64>) -> u64 {
            if p.is_empty() {
                return 1;
            }
            if let Some(&v) = memo.get(p) {
                return v;
            }
            let v = p.removable_boxes().iter().map(|b| go(&p.remove_box(b).expect("removable"), memo)).sum();
            memo.insert(p.clone(), v);
            v
        }
        go(self, &mut std::collections::HashMap::new())
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                go(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `self`, ordered by size then
    /// lexicographically decreasing.
    pub fn subpartitions(&self) -> Vec<Partition> {
        fn go(outer: &Partition, row: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if row >= outer.num_rows() {
                return;
            }
            for p in 1..=max.min(outer.part(row)) {
                cur.push(p);
                go(outer, row + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(self, 0, self.part(0), &mut Vec::new(), &mut out);
        out.sort_by(|a, b| a.size().cmp(&b.size()).then(b.cmp(a)));
        out
    }
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {x:?} in {s:?}")))
                    .and_then(|v| {
                        if v == 0 {
                            Err(Error::Parse(format!("zero part in {s:?}")))
                        } else {
                            Ok(v)
                        }
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// The skews `λ/(λ∩μ)` and `μ/(λ∩μ)` in absolute coordinates.
pub fn skew(lambda: &Partition, mu: &Partition) -> (SkewShape, SkewShape) {
    let meet = lambda.intersection(mu);
    let side = |p: &Partition| SkewShape::new(p.boxes().into_iter().filter(|b| !meet.has_box(b)));
    (side(lambda), side(mu))
}

/// Box set of `λ/μ` for `μ ⊆ λ`.
pub fn skew_of(lambda: &Partition, mu: &Partition) -> SkewShape {
    skew(lambda, mu).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contents_small() {
        assert!(Partition::empty().contents().is_empty());
        assert_eq!(Partition::of(&[1, 1]).contents(), vec![0, -1]);
        let mut c = Partition::of(&[6, 4, 4, 2, 1]).contents();
        c.sort();
        assert_eq!(c, vec![-4, -3, -2, -2, -1, -1, 0, 0, 0, 1, 1, 1, 2, 2, 3, 4, 5]);
    }

    #[test]
    fn addable_removable() {
        assert_eq!(Partition::of(&[2]).removable_boxes(), vec![Cell::new(1, 2)]);
        assert_eq!(Partition::empty().addable_boxes(), vec![Cell::new(1, 1)]);
        let l = Partition::of(&[6, 4, 4, 2, 1]);
        let rem: Vec<i64> = l.removable_boxes().iter().map(Cell::content).collect();
        let add: Vec<i64> = l.addable_boxes().iter().map(Cell::content).collect();
        assert_eq!(rem, vec![-4, -2, 1, 5]);
        assert_eq!(add, vec![-5, -3, -1, 3, 6]);
    }

    #[test]
    fn skews() {
        let l = Partition::of(&[6, 4, 4, 2, 1]);
        let (a, b) = skew(&l, &l);
        assert!(a.is_empty() && b.is_empty());
        let (a, b) = skew(&l, &Partition::of(&[5, 2, 2]));
        assert!(b.is_empty());
        let comps: Vec<usize> = a.components().iter().map(Vec::len).collect();
        assert_eq!(comps, vec![1, 4, 3]);
        let (a, b) = skew(&Partition::of(&[2]), &Partition::of(&[1, 1]));
        assert_eq!(a, SkewShape::new([Cell::new(1, 2)]));
        assert_eq!(b, SkewShape::new([Cell::new(2, 1)]));
    }

    #[test]
    fn charges_first_row() {
        let d = 7;
        let ch: Vec<i64> = (1..=3).map(|c| Cell::new(1, c).charge(d)).collect();
        assert_eq!(ch, vec![d - 1, d + 1, d + 3]);
    }

    #[test]
    fn parsing() {
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("6,4,4,2,1".parse::<Partition>().unwrap(), Partition::of(&[6, 4, 4, 2, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert_eq!(Partition::empty().to_string(), "0");
    }

    #[test]
    fn evenness() {
        assert!(Partition::of(&[2, 2]).is_even());
        assert!(!Partition::of(&[3, 1]).is_even());
        assert!(Partition::empty().is_even());
    }

    #[test]
    fn dims() {
        assert_eq!(Partition::of(&[5]).specht_dim(), 1);
        assert_eq!(Partition::of(&[1, 1, 1, 1]).specht_dim(), 1);
        assert_eq!(Partition::of(&[2, 1]).specht_dim(), 2);
        assert_eq!(Partition::of(&[3, 2, 1]).specht_dim(), 16);
        assert_eq!(Partition::of(&[4, 3, 2, 1]).specht_dim(), 768);
        for n in 0..=8 {
            for p in Partition::all_of_size(n) {
                assert_eq!(p.specht_dim(), p.count_standard_tableaux(), "{p}");
            }
        }
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=8).map(|n| Partition::all_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(Partition::of(&[2, 1]).subpartitions().len(), 5);
    }
}

//! Exact rational linear algebra: dense matrices and an incremental sparse
//! row reducer.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar.
pub type Q = BigRational;

/// Rational from an integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// `p/q` text form used in JSON output.
pub fn q_to_string(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse `p/q` or a plain integer.
pub fn q_parse(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().ok()?;
            let b: BigInt = b.trim().parse().ok()?;
            if b.is_zero() {
                None
            } else {
                Some(Q::new(a, b))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// `base^exp` for a small integer base; `0^0 = 1`.
pub fn int_pow(base: i64, exp: usize) -> BigInt {
    num_traits::pow(BigInt::from(base), exp)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Q>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self[(r, c)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn scalar(n: usize, s: &Q) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = s.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Q>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Q> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Q>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Q]) -> Vec<Q> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|r| {
                let mut acc = Q::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &Q) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * s).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    pub fn trace(&self) -> Q {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    /// Returns `Some(s)` when the matrix is `s` times the identity.
    pub fn as_scalar(&self) -> Option<Q> {
        if self.rows != self.cols {
            return None;
        }
        if self.rows == 0 {
            return Some(Q::zero());
        }
        let s = self[(0, 0)].clone();
        if *self == Matrix::scalar(self.rows, &s) {
            Some(s)
        } else {
            None
        }
    }

    pub fn rank(&self) -> usize {
        let mut red = RowReducer::new(self.cols);
        for r in 0..self.rows {
            red.add_dense(self.row(r));
        }
        red.rank()
    }

    /// Basis of the right kernel `{x : self * x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut red = RowReducer::new(self.cols);
        for r in 0..self.rows {
            red.add_dense(self.row(r));
        }
        red.nullspace()
    }

    pub fn det(&self) -> Q {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Q::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[(r, c)].is_zero()) else {
                return Q::zero();
            };
            if p != c {
                for k in 0..n {
                    a.data.swap(p * n + k, c * n + k);
                }
                det = -det;
            }
            let piv = a[(c, c)].clone();
            det *= &piv;
            for r in c + 1..n {
                if a[(r, c)].is_zero() {
                    continue;
                }
                let f = &a[(r, c)] / &piv;
                for k in c..n {
                    let v = &a[(c, k)] * &f;
                    a[(r, k)] -= v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for c in 0..n {
            let p = (c..n).find(|&r| !a[(r, c)].is_zero())?;
            if p != c {
                for k in 0..n {
                    a.data.swap(p * n + k, c * n + k);
                    inv.data.swap(p * n + k, c * n + k);
                }
            }
            let piv = a[(c, c)].clone();
            for k in 0..n {
                a[(c, k)] /= &piv;
                inv[(c, k)] /= &piv;
            }
            for r in 0..n {
                if r == c || a[(r, c)].is_zero() {
                    continue;
                }
                let f = a[(r, c)].clone();
                for k in 0..n {
                    let v = &a[(c, k)] * &f;
                    a[(r, k)] -= v;
                    let w = &inv[(c, k)] * &f;
                    inv[(r, k)] -= w;
                }
            }
        }
        Some(inv)
    }
}

/// Sparse rational row.
pub type SparseRow = BTreeMap<usize, Q>;

/// Incremental exact Gaussian elimination over sparse rows.
///
/// Rows are reduced against the current pivots as they arrive, so the rank
/// is always available and early exit is possible once it reaches the
/// column count.
#[derive(Clone, Debug)]
pub struct RowReducer {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

impl RowReducer {
    pub fn new(ncols: usize) -> Self {
        RowReducer { ncols, pivots: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_full(&self) -> bool {
        self.pivots.len() == self.ncols
    }

    pub fn add_dense(&mut self, row: &[Q]) -> bool {
        let sparse: SparseRow =
            row.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(i, v)| (i, v.clone())).collect();
        self.add(sparse)
    }

    pub fn add_integer(&mut self, row: &[BigInt]) -> bool {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, Q::from_integer(v.clone())))
            .collect();
        self.add(sparse)
    }

    /// Adds a row; returns true if it increased the rank.
    pub fn add(&mut self, mut row: SparseRow) -> bool {
        row.retain(|_, v| !v.is_zero());
        loop {
            let lead = {
                let mut found = None;
                for (&c, _) in row.iter() {
                    if self.pivots.contains_key(&c) {
                        found = Some(c);
                        break;
                    }
                }
                found
            };
            let Some(c) = lead else { break };
            let f = row[&c].clone();
            let prow = &self.pivots[&c];
            for (&k, v) in prow.iter() {
                let e = row.entry(k).or_insert_with(Q::zero);
                *e -= v * &f;
                if e.is_zero() {
                    row.remove(&k);
                }
            }
        }
        let Some((&lead, lv)) = row.iter().next() else { return false };
        let inv = lv.recip();
        for v in row.values_mut() {
            *v *= &inv;
        }
        // Keep earlier pivot rows free of the new pivot column.
        for prow in self.pivots.values_mut() {
            if let Some(f) = prow.get(&lead).cloned() {
                for (&k, v) in row.iter() {
                    let e = prow.entry(k).or_insert_with(Q::zero);
                    *e -= v * &f;
                    if e.is_zero() {
                        prow.remove(&k);
                    }
                }
            }
        }
        self.pivots.insert(lead, row);
        true
    }

    /// Whether `row` lies in the current row space.
    pub fn contains(&self, row: &[Q]) -> bool {
        let mut probe = self.clone();
        !probe.add_dense(row)
    }

    /// Basis of the solution space of the homogeneous system whose rows
    /// were added, one vector per free column.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            let mut v = vec![Q::zero(); self.ncols];
            v[free] = Q::one();
            for (&p, prow) in &self.pivots {
                if let Some(x) = prow.get(&free) {
                    v[p] = -x.clone();
                }
            }
            basis.push(v);
        }
        basis
    }

    pub fn nullity(&self) -> usize {
        self.ncols - self.pivots.len()
    }
}

/// Rank of a set of integer vectors.
pub fn integer_rank(vectors: &[Vec<BigInt>]) -> usize {
    let Some(first) = vectors.first() else { return 0 };
    let mut red = RowReducer::new(first.len());
    for v in vectors {
        red.add_integer(v);
    }
    red.rank()
}

/// Scales a rational vector to a primitive integer vector with positive
/// leading entry.
pub fn primitive_integer(v: &[Q]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * Q::from_integer(l.clone())).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() {
        let lead_neg = ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
        if lead_neg {
            g = -g;
        }
        for x in ints.iter_mut() {
            *x /= &g;
        }
    }
    ints
}

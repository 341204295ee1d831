//! Specht modules realised inside the tabloid permutation module.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::{ToPrimitive, Zero};

use crate::linalg::{q, Matrix, Q};
use crate::partitions::Partition;
use crate::perm::{self, Perm};

/// Dense square integer matrix, row major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    pub dim: usize,
    pub data: Vec<i64>,
}

impl IntMatrix {
    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.dim + c]
    }

    pub fn to_matrix(&self) -> Matrix {
        Matrix::from_rows((0..self.dim).map(|r| (0..self.dim).map(|c| q(self.get(r, c))).collect()).collect())
    }
}

/// The Specht module `S^μ` with its standard polytabloid basis.
///
/// Basis vectors are the polytabloids of the standard tableaux of shape `μ`,
/// ordered lexicographically by row-reading word. Coordinates are read off
/// at the tabloids of the standard tableaux themselves, which makes every
/// action matrix integral.
#[derive(Debug)]
pub struct SpechtModule {
    mu: Partition,
    /// Row of each box, boxes in row-major order.
    box_rows: Vec<usize>,
    /// Standard tableaux: label of each box in row-major order.
    tableaux: Vec<Vec<usize>>,
    /// Column-preserving box permutations with their signs.
    column_group: Vec<(Perm, i64)>,
    pivot_index: HashMap<Vec<u8>, usize>,
    /// Inverse transpose of the pivot matrix.
    pivot_inv_t: Vec<Vec<i64>>,
    form: IntMatrix,
    cache: Mutex<HashMap<Perm, Arc<IntMatrix>>>,
}

impl SpechtModule {
    pub fn new(mu: &Partition) -> Self {
        let boxes = mu.boxes();
        let box_rows: Vec<usize> = boxes.iter().map(|b| b.row - 1).collect();
        let tableaux = standard_tableaux(mu);
        let col_blocks: Vec<Vec<usize>> = (1..=mu.part(0))
            .map(|c| (0..boxes.len()).filter(|&k| boxes[k].col == c).collect())
            .collect();
        let column_group: Vec<(Perm, i64)> = perm::block_stabilizer(boxes.len(), &col_blocks)
            .into_iter()
            .map(|p| {
                let s = perm::sign(&p);
                (p, s)
            })
            .collect();
        let mut module = SpechtModule {
            mu: mu.clone(),
            box_rows,
            tableaux,
            column_group,
            pivot_index: HashMap::new(),
            pivot_inv_t: Vec::new(),
            form: IntMatrix { dim: 0, data: Vec::new() },
            cache: Mutex::new(HashMap::new()),
        };
        let f = module.tableaux.len();
        module.pivot_index =
            module.tableaux.iter().enumerate().map(|(j, t)| (module.tabloid_of(t), j)).collect();
        let mut pivot_t = Matrix::zeros(f, f);
        for (i, t) in module.tableaux.iter().enumerate() {
            for (j, c) in module.pivot_coords(t).into_iter().enumerate() {
                pivot_t[(j, i)] = q(c);
            }
        }
        let inv = pivot_t.inverse().expect("pivot matrix is unitriangular up to order");
        module.pivot_inv_t = (0..f)
            .map(|r| {
                (0..f)
                    .map(|c| {
                        let x = &inv[(r, c)];
                        assert!(x.is_integer(), "pivot inverse is integral");
                        x.to_integer().to_i64().expect("small entry")
                    })
                    .collect()
            })
            .collect();
        let expansions: Vec<HashMap<Vec<u8>, i64>> = module.tableaux.iter().map(|t| module.expand(t)).collect();
        let mut form = vec![0; f * f];
        for i in 0..f {
            for j in 0..f {
                form[i * f + j] = expansions[i]
                    .iter()
                    .map(|(tab, c)| c * expansions[j].get(tab).copied().unwrap_or(0))
                    .sum();
            }
        }
        module.form = IntMatrix { dim: f, data: form };
        module
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// Number of points permuted.
    pub fn degree(&self) -> usize {
        self.mu.size()
    }

    /// Standard tableaux as labels (1-based) of boxes in row-major order.
    pub fn tableaux(&self) -> Vec<Vec<usize>> {
        self.tableaux.iter().map(|t| t.iter().map(|x| x + 1).collect()).collect()
    }

    fn tabloid_of(&self, labels_by_box: &[usize]) -> Vec<u8> {
        let mut rows = vec![0u8; labels_by_box.len()];
        for (b, &l) in labels_by_box.iter().enumerate() {
            rows[l] = self.box_rows[b] as u8;
        }
        rows
    }

    /// Full tabloid expansion of the polytabloid of a (not necessarily
    /// standard) tableau.
    fn expand(&self, t: &[usize]) -> HashMap<Vec<u8>, i64> {
        let mut out: HashMap<Vec<u8>, i64> = HashMap::new();
        for (pi, s) in &self.column_group {
            let moved: Vec<usize> = (0..t.len()).map(|b| t[pi[b]]).collect();
            *out.entry(self.tabloid_of(&moved)).or_default() += s;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// Coefficients of the standard tabloids in the polytabloid of `t`.
    fn pivot_coords(&self, t: &[usize]) -> Vec<i64> {
        let mut c = vec![0; self.dim()];
        for (pi, s) in &self.column_group {
            let moved: Vec<usize> = (0..t.len()).map(|b| t[pi[b]]).collect();
            if let Some(&j) = self.pivot_index.get(&self.tabloid_of(&moved)) {
                c[j] += s;
            }
        }
        c
    }

    /// Basis coordinates of the polytabloid of an arbitrary tableau.
    fn coords(&self, t: &[usize]) -> Vec<i64> {
        let c = self.pivot_coords(t);
        self.pivot_inv_t.iter().map(|row| row.iter().zip(&c).map(|(a, b)| a * b).sum()).collect()
    }

    /// Integer matrix of a permutation of `{0, .., m-1}`, computed directly
    /// from the polytabloids `e_{gT}` and cached.
    pub fn perm_matrix_int(&self, g: &[usize]) -> Arc<IntMatrix> {
        assert_eq!(g.len(), self.degree(), "permutation degree mismatch");
        if let Some(m) = self.cache.lock().expect("cache lock").get(g) {
            return Arc::clone(m);
        }
        let f = self.dim();
        let mut data = vec![0; f * f];
        for (i, t) in self.tableaux.iter().enumerate() {
            let gt: Vec<usize> = t.iter().map(|&l| g[l]).collect();
            for (r, v) in self.coords(&gt).into_iter().enumerate() {
                data[r * f + i] = v;
            }
        }
        let m = Arc::new(IntMatrix { dim: f, data });
        self.cache.lock().expect("cache lock").insert(g.to_vec(), Arc::clone(&m));
        m
    }

    pub fn perm_matrix(&self, g: &[usize]) -> Matrix {
        self.perm_matrix_int(g).to_matrix()
    }

    /// Matrices of the adjacent transpositions `s_1, .., s_{m-1}`.
    pub fn gen_matrices(&self) -> Vec<Matrix> {
        let m = self.degree();
        (0..m.saturating_sub(1)).map(|i| self.perm_matrix(&perm::transposition(m, i, i + 1))).collect()
    }

    /// Gram matrix of the tabloid inner product on the basis.
    pub fn form(&self) -> Matrix {
        self.form.to_matrix()
    }

    pub fn form_int(&self) -> &IntMatrix {
        &self.form
    }

    /// Acts by a permutation, expanded as a word in the generator matrices.
    pub fn act_perm(&self, g: &[usize], v: &[Q]) -> crate::Result<Vec<Q>> {
        if g.len() != self.degree() || v.len() != self.dim() || !perm::is_perm(g) {
            return Err(crate::Error::ArityMismatch(format!(
                "permutation of {} points on a vector of length {} in S^{}",
                g.len(),
                v.len(),
                self.mu
            )));
        }
        let m = self.degree();
        let mut out = v.to_vec();
        for &i in perm::reduced_word(g).iter().rev() {
            let s = self.perm_matrix_int(&perm::transposition(m, i, i + 1));
            out = int_mat_vec(&s, &out);
        }
        Ok(out)
    }
}

fn int_mat_vec(m: &IntMatrix, v: &[Q]) -> Vec<Q> {
    (0..m.dim)
        .map(|r| {
            let mut acc = Q::zero();
            for (c, x) in v.iter().enumerate() {
                let a = m.get(r, c);
                if a != 0 && !x.is_zero() {
                    acc += x * q(a);
                }
            }
            acc
        })
        .collect()
}

/// Standard tableaux of shape `μ` as labels (zero based) of boxes in
/// row-major order, sorted by row-reading word.
pub fn standard_tableaux(mu: &Partition) -> Vec<Vec<usize>> {
    let boxes = mu.boxes();
    let index: HashMap<(usize, usize), usize> = boxes.iter().enumerate().map(|(k, b)| ((b.row, b.col), k)).collect();
    let n = boxes.len();
    let mut out = Vec::new();
    let mut filled = vec![usize::MAX; n];
    let mut row_fill = vec![0usize; mu.num_rows()];
    fn go(
        label: usize,
        n: usize,
        mu: &Partition,
        index: &HashMap<(usize, usize), usize>,
        row_fill: &mut Vec<usize>,
        filled: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if label == n {
            out.push(filled.clone());
            return;
        }
        for r in 0..mu.num_rows() {
            let c = row_fill[r];
            if c < mu.part(r) && (r == 0 || row_fill[r - 1] > c) {
                let k = index[&(r + 1, c + 1)];
                filled[k] = label;
                row_fill[r] += 1;
                go(label + 1, n, mu, index, row_fill, filled, out);
                row_fill[r] -= 1;
                filled[k] = usize::MAX;
            }
        }
    }
    go(0, n, mu, &index, &mut row_fill, &mut filled, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_dimensional() {
        let s = SpechtModule::new(&Partition::of(&[4]));
        assert_eq!(s.dim(), 1);
        assert!(s.gen_matrices().iter().all(|m| *m == Matrix::identity(1)));
        let s = SpechtModule::new(&Partition::of(&[1, 1, 1]));
        assert!(s.gen_matrices().iter().all(|m| *m == Matrix::scalar(1, &q(-1))));
        let s = SpechtModule::new(&Partition::empty());
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn braid_two_one() {
        let s = SpechtModule::new(&Partition::of(&[2, 1]));
        let g = s.gen_matrices();
        assert_eq!(s.dim(), 2);
        assert_eq!(g[0].mul(&g[1]).mul(&g[0]), g[1].mul(&g[0]).mul(&g[1]));
        assert_eq!(g[0].mul(&g[0]), Matrix::identity(2));
    }

    #[test]
    fn tableaux_order() {
        let t = standard_tableaux(&Partition::of(&[2, 1]));
        assert_eq!(t, vec![vec![0, 1, 2], vec![0, 2, 1]]);
    }

    #[test]
    fn direct_matrices_match_words() {
        let s = SpechtModule::new(&Partition::of(&[3, 2]));
        let basis: Vec<Vec<Q>> =
            (0..s.dim()).map(|i| (0..s.dim()).map(|j| if i == j { q(1) } else { q(0) }).collect()).collect();
        for g in perm::all(5) {
            let direct = s.perm_matrix(&g);
            for (i, e) in basis.iter().enumerate() {
                assert_eq!(s.act_perm(&g, e).unwrap(), direct.column(i));
            }
        }
    }
}

//! Cell modules `Δ_n(μ)` of the Brauer algebra.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::diagram::{concat, AlgebraElement, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{int_pow, q, Matrix, Q};
use crate::partitions::{mn_character, Partition};
use crate::perm::{self, Perm};
use crate::specht::SpechtModule;

/// A set of `t` disjoint northern arcs on `n` nodes (zero based, each arc
/// `(a, b)` with `a < b`, arcs sorted). The remaining nodes are free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartialOneRowDiagram {
    pub n: usize,
    pub arcs: Vec<(usize, usize)>,
}

impl PartialOneRowDiagram {
    pub fn new(n: usize, mut arcs: Vec<(usize, usize)>) -> Result<Self> {
        let mut used = vec![false; n];
        for a in arcs.iter_mut() {
            if a.0 > a.1 {
                *a = (a.1, a.0);
            }
            if a.1 >= n || a.0 == a.1 || used[a.0] || used[a.1] {
                return Err(Error::InvalidDiagram(format!("bad arc {a:?} on {n} nodes")));
            }
            used[a.0] = true;
            used[a.1] = true;
        }
        arcs.sort_unstable();
        Ok(PartialOneRowDiagram { n, arcs })
    }

    pub fn t(&self) -> usize {
        self.arcs.len()
    }

    pub fn free_nodes(&self) -> Vec<usize> {
        let mut used = vec![false; self.n];
        for &(a, b) in &self.arcs {
            used[a] = true;
            used[b] = true;
        }
        (0..self.n).filter(|&i| !used[i]).collect()
    }

    /// The `(n, n-2t)` diagram with these arcs whose free nodes run in
    /// order to the southern nodes.
    pub fn to_diagram(&self) -> BrauerDiagram {
        let free = self.free_nodes();
        let m = free.len();
        let mut pairs = self.arcs.clone();
        for (j, &f) in free.iter().enumerate() {
            pairs.push((f, self.n + j));
        }
        BrauerDiagram::from_pairs(self.n, m, &pairs).expect("valid one-row diagram")
    }

    /// Image of the arcs under a permutation.
    pub fn permuted(&self, g: &[usize]) -> Self {
        let arcs = self.arcs.iter().map(|&(a, b)| (g[a].min(g[b]), g[a].max(g[b]))).collect::<Vec<_>>();
        let mut arcs = arcs;
        arcs.sort_unstable();
        PartialOneRowDiagram { n: self.n, arcs }
    }
}

/// All partial one-row diagrams with `t` arcs on `n` nodes, sorted
/// lexicographically by arc list.
pub fn enumerate_v(n: usize, t: usize) -> Result<Vec<PartialOneRowDiagram>> {
    if 2 * t > n {
        return Err(Error::InvalidParameters(format!("V_{{{n},{t}}} needs 2t <= n")));
    }
    fn go(i: usize, n: usize, left: usize, used: &mut Vec<bool>, arcs: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if left == 0 {
            out.push(arcs.clone());
            return;
        }
        if i >= n {
            return;
        }
        if used[i] {
            go(i + 1, n, left, used, arcs, out);
            return;
        }
        go(i + 1, n, left, used, arcs, out);
        used[i] = true;
        for j in i + 1..n {
            if !used[j] {
                used[j] = true;
                arcs.push((i, j));
                go(i + 1, n, left - 1, used, arcs, out);
                arcs.pop();
                used[j] = false;
            }
        }
        used[i] = false;
    }
    let mut out = Vec::new();
    go(0, n, t, &mut vec![false; n], &mut Vec::new(), &mut out);
    let mut vs: Vec<PartialOneRowDiagram> =
        out.into_iter().map(|mut arcs| {
            arcs.sort_unstable();
            PartialOneRowDiagram { n, arcs }
        }).collect();
    vs.sort();
    Ok(vs)
}

/// Result of acting by a diagram on `X_v ⊗ x`: `δ^loops · (w, ρ(g) x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisImage {
    pub loops: usize,
    pub w: usize,
    pub g: Perm,
}

/// Operations needed by the homomorphism solvers.
pub trait BrauerModule: Sync {
    /// Number of strands.
    fn n(&self) -> usize;
    fn delta(&self) -> i64;
    fn dim(&self) -> usize;
    /// Action of a permutation of the strands.
    fn act_perm(&self, g: &[usize], v: &[BigInt]) -> Vec<BigInt>;
    /// Action of `X_{i,j}` (zero based, `i < j`).
    fn act_hook(&self, i: usize, j: usize, v: &[BigInt]) -> Vec<BigInt>;
    /// Trace of a permutation.
    fn perm_trace(&self, g: &[usize]) -> i64;
}

/// The cell module `Δ_n(μ)` with basis `X_v ⊗ T`, `v ∈ V_{n,t}` major and
/// standard tableaux `T` minor.
#[derive(Debug)]
pub struct CellModule {
    n: usize,
    delta: i64,
    mu: Partition,
    t: usize,
    vs: Vec<PartialOneRowDiagram>,
    v_index: HashMap<Vec<(usize, usize)>, usize>,
    specht: Arc<SpechtModule>,
    x_cache: Mutex<HashMap<(usize, usize), Arc<Matrix>>>,
}

impl CellModule {
    pub fn new(n: usize, delta: i64, mu: &Partition) -> Result<Self> {
        Self::with_specht(n, delta, Arc::new(SpechtModule::new(mu)))
    }

    /// Builds the module reusing an existing Specht module.
    pub fn with_specht(n: usize, delta: i64, specht: Arc<SpechtModule>) -> Result<Self> {
        let mu = specht.mu().clone();
        let m = mu.size();
        if m > n || (n - m) % 2 != 0 {
            return Err(Error::InvalidParameters(format!("{mu} is not a weight for n = {n}")));
        }
        if delta == 0 && m == 0 {
            return Err(Error::DeltaZero(format!("the empty weight is omitted for n = {n}")));
        }
        let t = (n - m) / 2;
        let vs = enumerate_v(n, t)?;
        let v_index = vs.iter().enumerate().map(|(i, v)| (v.arcs.clone(), i)).collect();
        Ok(CellModule { n, delta, mu, t, vs, v_index, specht, x_cache: Mutex::new(HashMap::new()) })
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn specht(&self) -> &SpechtModule {
        &self.specht
    }

    pub fn vs(&self) -> &[PartialOneRowDiagram] {
        &self.vs
    }

    pub fn f(&self) -> usize {
        self.specht.dim()
    }

    fn index_of(&self, v: &PartialOneRowDiagram) -> usize {
        self.v_index[&v.arcs]
    }

    /// Acts by a diagram on the basis block `v`; `None` when the result
    /// vanishes through loss of propagating lines.
    pub fn act_basis(&self, d: &BrauerDiagram, v: usize) -> Option<BasisImage> {
        let xv = self.vs[v].to_diagram();
        let (prod, loops) = concat(d, &xv).expect("square diagram of matching size");
        let m = self.mu.size();
        if prod.propagating() < m {
            return None;
        }
        let w = PartialOneRowDiagram { n: self.n, arcs: prod.northern_arcs() };
        let free = w.free_nodes();
        // free[i] reaches southern node pi[i]; the Specht factor is pi^{-1}.
        let pi: Perm = free.iter().map(|&f| prod.partner(f) - self.n).collect();
        Some(BasisImage { loops, w: self.index_of(&w), g: perm::inverse(&pi) })
    }

    /// Fast path of [`act_basis`](Self::act_basis) for a permutation.
    pub fn perm_basis(&self, g: &[usize], v: usize) -> (usize, Perm) {
        let src = &self.vs[v];
        let w = src.permuted(g);
        let images: Vec<usize> = src.free_nodes().iter().map(|&f| g[f]).collect();
        let mut sorted = images.clone();
        sorted.sort_unstable();
        let rank: Perm = images.iter().map(|x| sorted.binary_search(x).expect("present")).collect();
        (self.index_of(&w), rank)
    }

    /// Matrix of a single diagram.
    pub fn diagram_matrix(&self, d: &BrauerDiagram) -> Matrix {
        let f = self.f();
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for v in 0..self.vs.len() {
            let Some(img) = self.act_basis(d, v) else { continue };
            let w = int_pow(self.delta, img.loops);
            if w.is_zero() {
                continue;
            }
            let rho = self.specht.perm_matrix_int(&img.g);
            for r in 0..f {
                for c in 0..f {
                    let a = rho.get(r, c);
                    if a != 0 {
                        out[(img.w * f + r, v * f + c)] = Q::from_integer(&w * a);
                    }
                }
            }
        }
        out
    }

    pub fn element_matrix(&self, x: &AlgebraElement) -> Result<Matrix> {
        if x.n() != self.n || x.delta() != self.delta {
            return Err(Error::ArityMismatch(format!("element of B_{}({}) on Δ_{}", x.n(), x.delta(), self.n)));
        }
        let mut out = Matrix::zeros(self.dim(), self.dim());
        for (d, c) in x.terms() {
            out = out.add(&self.diagram_matrix(d).scale(c));
        }
        Ok(out)
    }

    pub fn perm_matrix(&self, g: &[usize]) -> Matrix {
        self.diagram_matrix(&BrauerDiagram::permutation(g))
    }

    /// Matrices of `s_1, .., s_{n-1}` followed by `X_{1,2}`.
    pub fn gen_actions(&self) -> Vec<Matrix> {
        let n = self.n;
        let mut out: Vec<Matrix> =
            (0..n.saturating_sub(1)).map(|i| self.perm_matrix(&perm::transposition(n, i, i + 1))).collect();
        if n >= 2 {
            out.push(self.diagram_matrix(&BrauerDiagram::hook(n, 0, 1)));
        }
        out
    }

    /// Matrix of `X_{i,j}` (1-based) as the conjugate `σ X_{1,2} σ^{-1}`.
    pub fn x_matrix(&self, i: usize, j: usize) -> Result<Arc<Matrix>> {
        if !(1 <= i && i < j && j <= self.n) {
            return Err(Error::InvalidParameters(format!("X_{{{i},{j}}} on {} strands", self.n)));
        }
        if let Some(m) = self.x_cache.lock().expect("cache lock").get(&(i, j)) {
            return Ok(Arc::clone(m));
        }
        let n = self.n;
        let mut sigma = perm::identity(n);
        let (a, b) = (i - 1, j - 1);
        // Build σ with σ(0) = a, σ(1) = b.
        let rest: Vec<usize> = (0..n).filter(|&k| k != a && k != b).collect();
        sigma[0] = a;
        sigma[1] = b;
        for (k, &r) in rest.iter().enumerate() {
            sigma[k + 2] = r;
        }
        let x12 = self.diagram_matrix(&BrauerDiagram::hook(n, 0, 1));
        let m = self.perm_matrix(&sigma).mul(&x12).mul(&self.perm_matrix(&perm::inverse(&sigma)));
        let m = Arc::new(m);
        self.x_cache.lock().expect("cache lock").insert((i, j), Arc::clone(&m));
        Ok(m)
    }

    /// The cellular bilinear form.
    pub fn gram_matrix(&self) -> Matrix {
        let f = self.f();
        let m = self.mu.size();
        let form = self.specht.form();
        let mut out = Matrix::zeros(self.dim(), self.dim());
        let diagrams: Vec<BrauerDiagram> = self.vs.iter().map(PartialOneRowDiagram::to_diagram).collect();
        for (vi, xv) in diagrams.iter().enumerate() {
            let top = xv.flip();
            for (wi, xw) in diagrams.iter().enumerate() {
                let (p, loops) = concat(&top, xw).expect("matching sizes");
                if p.propagating() < m {
                    continue;
                }
                let w = int_pow(self.delta, loops);
                if w.is_zero() {
                    continue;
                }
                let g = p.as_permutation().expect("full propagation");
                let block = form.mul(&self.specht.perm_matrix(&g));
                let s = Q::from_integer(w);
                for r in 0..f {
                    for c in 0..f {
                        out[(vi * f + r, wi * f + c)] = &block[(r, c)] * &s;
                    }
                }
            }
        }
        out
    }

    /// `Σ_{d∈[μ]} c(d) − t(δ−1)`, the predicted scalar of the central element.
    pub fn predicted_central_scalar(&self) -> Q {
        q(self.mu.content_sum() - self.t as i64 * (self.delta - 1))
    }

    /// Whether `T_n` acts as `(t(δ−1) − Σ c(d)) + Σ_{i<j} (i,j)`.
    pub fn t_action_check(&self) -> bool {
        let n = self.n;
        let mut t_mat = Matrix::zeros(self.dim(), self.dim());
        let mut transpositions = Matrix::zeros(self.dim(), self.dim());
        for i in 1..=n {
            for j in i + 1..=n {
                t_mat = t_mat.add(&self.x_matrix(i, j).expect("in range"));
                transpositions = transpositions.add(&self.perm_matrix(&perm::transposition(n, i - 1, j - 1)));
            }
        }
        let expected = Matrix::scalar(self.dim(), &-self.predicted_central_scalar()).add(&transpositions);
        t_mat == expected
    }

    /// Scalar by which the central element acts, read off its matrix;
    /// `None` if the action is not scalar.
    pub fn central_scalar(&self) -> Option<Q> {
        let z = crate::diagram::central_element(self.n, self.delta);
        self.element_matrix(&z).expect("matching algebra").as_scalar()
    }

    fn apply_blocks(&self, v: &[BigInt], mut image: impl FnMut(usize) -> Option<(BigInt, usize, Perm)>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim(), "vector length");
        let f = self.f();
        let mut out = vec![BigInt::zero(); self.dim()];
        for vi in 0..self.vs.len() {
            let block = &v[vi * f..(vi + 1) * f];
            if block.iter().all(Zero::is_zero) {
                continue;
            }
            let Some((scale, w, g)) = image(vi) else { continue };
            if scale.is_zero() {
                continue;
            }
            let rho = self.specht.perm_matrix_int(&g);
            for r in 0..f {
                let mut acc = BigInt::zero();
                for (c, x) in block.iter().enumerate() {
                    let a = rho.get(r, c);
                    if a != 0 && !x.is_zero() {
                        acc += x * a;
                    }
                }
                if !acc.is_zero() {
                    out[w * f + r] += acc * &scale;
                }
            }
        }
        out
    }

    /// Integer action of an arbitrary diagram.
    pub fn act_diagram_vec(&self, d: &BrauerDiagram, v: &[BigInt]) -> Vec<BigInt> {
        self.apply_blocks(v, |vi| self.act_basis(d, vi).map(|img| (int_pow(self.delta, img.loops), img.w, img.g)))
    }
}

impl BrauerModule for CellModule {
    fn n(&self) -> usize {
        self.n
    }

    fn delta(&self) -> i64 {
        self.delta
    }

    fn dim(&self) -> usize {
        self.vs.len() * self.specht.dim()
    }

    fn act_perm(&self, g: &[usize], v: &[BigInt]) -> Vec<BigInt> {
        self.apply_blocks(v, |vi| {
            let (w, h) = self.perm_basis(g, vi);
            Some((BigInt::from(1), w, h))
        })
    }

    fn act_hook(&self, i: usize, j: usize, v: &[BigInt]) -> Vec<BigInt> {
        self.act_diagram_vec(&BrauerDiagram::hook(self.n, i, j), v)
    }

    fn perm_trace(&self, g: &[usize]) -> i64 {
        let mut tr = 0;
        for vi in 0..self.vs.len() {
            let (w, h) = self.perm_basis(g, vi);
            if w == vi {
                let ct = Partition::new(perm::cycle_type(&h)).expect("cycle type");
                tr += mn_character(&self.mu, &ct).expect("sizes agree");
            }
        }
        tr
    }
}

/// `Δ_n(μ)` viewed as a `B_{n-1}`-module.
pub struct Restricted<'a, M: BrauerModule> {
    pub inner: &'a M,
}

impl<M: BrauerModule> Restricted<'_, M> {
    fn extend(&self, g: &[usize]) -> Perm {
        let mut h = g.to_vec();
        h.push(g.len());
        h
    }
}

impl<M: BrauerModule> BrauerModule for Restricted<'_, M> {
    fn n(&self) -> usize {
        self.inner.n() - 1
    }

    fn delta(&self) -> i64 {
        self.inner.delta()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn act_perm(&self, g: &[usize], v: &[BigInt]) -> Vec<BigInt> {
        self.inner.act_perm(&self.extend(g), v)
    }

    fn act_hook(&self, i: usize, j: usize, v: &[BigInt]) -> Vec<BigInt> {
        self.inner.act_hook(i, j, v)
    }

    fn perm_trace(&self, g: &[usize]) -> i64 {
        self.inner.perm_trace(&self.extend(g))
    }
}

/// Weights one box away from `λ`: `(down, up)` with `up` filtered to sizes
/// at most `n − 1`.
pub fn restriction_rule(lambda: &Partition, n: usize) -> Result<(Vec<Partition>, Vec<Partition>)> {
    if lambda.size() > n || (n - lambda.size()) % 2 != 0 {
        return Err(Error::InvalidParameters(format!("{lambda} is not a weight for n = {n}")));
    }
    let down = lambda.removable_boxes().iter().map(|b| lambda.remove_box(b).expect("removable")).collect();
    let up = if lambda.size() + 1 < n {
        lambda.addable_boxes().iter().map(|b| lambda.add_box(b).expect("addable")).collect()
    } else {
        Vec::new()
    };
    Ok((down, up))
}

/// `dim Δ_n(μ) = |V_{n,t}| · f^μ` without building the module.
pub fn cell_dim(n: usize, mu: &Partition) -> Option<u128> {
    let m = mu.size();
    if m > n || (n - m) % 2 != 0 {
        return None;
    }
    let t = (n - m) / 2;
    let fact = |k: usize| (1..=k as u128).product::<u128>();
    let v = fact(n) / (fact(t) * (1u128 << t) * fact(m));
    Some(v * mu.specht_dim() as u128)
}

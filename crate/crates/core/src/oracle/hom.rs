use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cell::{BrauerModule, CellModule, PartialOneRowDiagram};
use crate::diagram::{concat, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{int_pow, RowReducer, SparseRow, Q};
use crate::partitions::{class_size, mn_character, Partition};
use crate::perm::{self, Perm};

/// The generator `v0 = X_{v0} ⊗ T` of `Δ_n(λ)`: free nodes `0..m`, arcs
/// `(m, m+1), (m+2, m+3), …`.
fn base_diagram(n: usize, m: usize) -> PartialOneRowDiagram {
    let arcs = (0..(n - m) / 2).map(|k| (m + 2 * k, m + 2 * k + 1)).collect();
    PartialOneRowDiagram::new(n, arcs).expect("disjoint arcs")
}

/// How `X_{i,j}` moves the generator: zero, or `δ^k σ g̃` with `σ` carrying
/// `v0` to the new arc pattern and `g ∈ Σ_m`.
enum HookImage {
    Zero,
    Move { loops: usize, sigma: Perm, g: Perm },
}

fn hook_image(n: usize, m: usize, i: usize, j: usize) -> HookImage {
    let v0 = base_diagram(n, m).to_diagram();
    let (prod, loops) = concat(&BrauerDiagram::hook(n, i, j), &v0).expect("matching sizes");
    if prod.propagating() < m {
        return HookImage::Zero;
    }
    let w = PartialOneRowDiagram { n, arcs: prod.northern_arcs() };
    let free = w.free_nodes();
    let pi: Perm = free.iter().map(|&f| prod.partner(f) - n).collect();
    let mut sigma = vec![0; n];
    for (k, &f) in free.iter().enumerate() {
        sigma[k] = f;
    }
    for (k, &(a, b)) in w.arcs.iter().enumerate() {
        sigma[m + 2 * k] = a;
        sigma[m + 2 * k + 1] = b;
    }
    HookImage::Move { loops, sigma, g: perm::inverse(&pi) }
}

fn extend(g: &[usize], n: usize) -> Perm {
    let mut h = g.to_vec();
    h.extend(g.len()..n);
    h
}

fn add_vec(a: &mut [BigInt], b: &[BigInt]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

/// Applies `Σ_{σ ∈ Σ_S} sgn(σ)^s σ` on the strands `S` via the coset
/// factorization `Π_j (1 ± Σ_{i<j} (i j))`.
fn symmetrize<M: BrauerModule>(module: &M, labels: &[usize], signed: bool, v: Vec<BigInt>) -> Vec<BigInt> {
    let n = module.n();
    let mut cur = v;
    for j in 1..labels.len() {
        let mut acc = cur.clone();
        for &i in &labels[..j] {
            let moved = module.act_perm(&perm::transposition(n, i, labels[j]), &cur);
            if signed {
                for (x, y) in acc.iter_mut().zip(&moved) {
                    *x -= y;
                }
            } else {
                add_vec(&mut acc, &moved);
            }
        }
        cur = acc;
    }
    cur
}

/// `y_T = b_T a_T` for the row-reading tableau of `λ`.
fn young_project<M: BrauerModule>(module: &M, lambda: &Partition, v: Vec<BigInt>) -> Vec<BigInt> {
    let mut cur = v;
    for row in lambda.row_blocks() {
        cur = symmetrize(module, &row, false, cur);
    }
    for col in lambda.column_blocks() {
        cur = symmetrize(module, &col, true, cur);
    }
    cur
}

/// `[Res_{Σ_m} M : S^λ]` for the symmetric group on the first `m` strands.
fn isotypic_multiplicity<M: BrauerModule>(module: &M, lambda: &Partition) -> Result<usize> {
    let m = lambda.size();
    let n = module.n();
    let mut total = num_rational::Ratio::<i128>::zero();
    for rho in Partition::all_of_size(m) {
        let g = extend(&perm::from_cycle_type(rho.parts()), n);
        let chi = mn_character(lambda, &rho)? as i128;
        let tr = module.perm_trace(&g) as i128;
        total += num_rational::Ratio::from_integer(class_size(&rho) as i128 * chi * tr);
    }
    let fact: i128 = (1..=m as i128).product();
    let r = total / num_rational::Ratio::from_integer(fact);
    if !r.is_integer() || r < num_rational::Ratio::zero() {
        return Err(Error::Internal(format!("non-integral multiplicity {r} of S^{lambda}")));
    }
    Ok(r.to_integer() as usize)
}

/// A basis of `y_T M` made of integer vectors.
fn young_image_basis<M: BrauerModule>(module: &M, lambda: &Partition, r: usize, seed: u64) -> Result<Vec<Vec<BigInt>>> {
    let dim = module.dim();
    let mut red = RowReducer::new(dim);
    let mut basis = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidates = (0..r + 8)
        .map(|_| (0..dim).map(|_| BigInt::from(rng.gen_range(-3i64..=3))).collect::<Vec<_>>())
        .chain((0..dim).map(|k| {
            let mut e = vec![BigInt::zero(); dim];
            e[k] = BigInt::one();
            e
        }));
    while basis.len() < r {
        let Some(v) = candidates.next() else {
            return Err(Error::Internal(format!("spanned {} of {r} dimensions of the isotypic image", basis.len())));
        };
        let y = young_project(module, lambda, v);
        if red.add_integer(&y) {
            basis.push(y);
        }
    }
    Ok(basis)
}

/// `dim Hom(Δ_n(λ), M)` by solving for the image of the generator
/// `X_{v0} ⊗ T` inside `y_T M`.
pub fn hom_dim_reduced<M: BrauerModule>(lambda: &Partition, target: &M, seed: u64) -> Result<usize> {
    let n = target.n();
    let delta = target.delta();
    let m = lambda.size();
    if m > n || (n - m) % 2 != 0 {
        return Err(Error::InvalidParameters(format!("{lambda} is not a weight for n = {n}")));
    }
    let r = isotypic_multiplicity(target, lambda)?;
    if r == 0 {
        return Ok(0);
    }
    let zs = young_image_basis(target, lambda, r, seed)?;
    let mut red = RowReducer::new(r);
    let impose = |images: Vec<Vec<BigInt>>, red: &mut RowReducer| {
        for row in 0..target.dim() {
            let sparse: SparseRow = images
                .iter()
                .enumerate()
                .filter(|(_, v)| !v[row].is_zero())
                .map(|(k, v)| (k, Q::from_integer(v[row].clone())))
                .collect();
            if !sparse.is_empty() && red.add(sparse) && red.is_full() {
                return;
            }
        }
    };
    let t = (n - m) / 2;
    let mut stabilizer = Vec::new();
    if t >= 1 {
        stabilizer.push(perm::transposition(n, m, m + 1));
    }
    for k in 1..t {
        let a = m + 2 * (k - 1);
        stabilizer.push(perm::compose(&perm::transposition(n, a, a + 2), &perm::transposition(n, a + 1, a + 3)));
    }
    for h in stabilizer {
        let images = zs
            .iter()
            .map(|z| {
                let mut d = target.act_perm(&h, z);
                for (x, y) in d.iter_mut().zip(z) {
                    *x -= y;
                }
                d
            })
            .collect();
        impose(images, &mut red);
        if red.is_full() {
            return Ok(0);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            let images = match hook_image(n, m, i, j) {
                HookImage::Zero => zs.iter().map(|z| target.act_hook(i, j, z)).collect(),
                HookImage::Move { loops, sigma, g } => {
                    let scale = int_pow(delta, loops);
                    let g = extend(&g, n);
                    zs.iter()
                        .map(|z| {
                            let mut lhs = target.act_hook(i, j, z);
                            if !scale.is_zero() {
                                let rhs = target.act_perm(&sigma, &target.act_perm(&g, z));
                                for (x, y) in lhs.iter_mut().zip(rhs) {
                                    *x -= y * &scale;
                                }
                            }
                            lhs
                        })
                        .collect()
                }
            };
            impose(images, &mut red);
            if red.is_full() {
                return Ok(0);
            }
        }
    }
    Ok(red.nullity())
}

/// `dim Hom(Δ_n(λ), Δ_n(μ))` as the null space of the intertwining
/// equations `H·A_λ(g) = A_μ(g)·H` over the generators `s_i` and `X_{1,2}`.
pub fn hom_dim_dense(source: &CellModule, target: &CellModule) -> Result<usize> {
    if source.n() != target.n() || source.delta() != target.delta() {
        return Err(Error::ArityMismatch("modules over different algebras".into()));
    }
    let a = source.gen_actions();
    let b = target.gen_actions();
    let (ds, dt) = (source.dim(), target.dim());
    let unknowns = ds * dt;
    let mut red = RowReducer::new(unknowns);
    let var = |r: usize, c: usize| r * ds + c;
    for (ga, gb) in a.iter().zip(&b) {
        for r in 0..dt {
            for c in 0..ds {
                let mut row = SparseRow::new();
                for k in 0..ds {
                    push(&mut row, var(r, k), &ga[(k, c)]);
                }
                for k in 0..dt {
                    push(&mut row, var(k, c), &-gb[(r, k)].clone());
                }
                red.add(row);
                if red.is_full() {
                    return Ok(0);
                }
            }
        }
    }
    Ok(red.nullity())
}

fn push(row: &mut SparseRow, k: usize, v: &Q) {
    if v.is_zero() {
        return;
    }
    let e = row.entry(k).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        row.remove(&k);
    }
}

//! Brute-force verification: Hom dimensions between cell modules, central
//! scalars, Gram ranks, restriction multiplicities and block graphs.

mod graph;
mod hom;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::cell::{cell_dim, BrauerModule, CellModule};
use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::partitions::{class_size, lr_coefficient, mn_character, Partition};
use crate::perm;

pub use graph::{block_graph, verify_blocks, BlockGraph, Check, HomEdge, VerifyReport};
pub use hom::{hom_dim_dense, hom_dim_reduced};

/// Default cap on the dimension of modules the oracle builds.
pub const DEFAULT_MAX_DIM: usize = 400;

/// Environment variable overriding [`DEFAULT_MAX_DIM`].
pub const MAX_DIM_VAR: &str = "BRAUER_MAX_DIM";

/// Seed for the random spanning vectors of the reduced Hom route.
pub const DEFAULT_SEED: u64 = 0x5eed;

/// A request for `dim Hom(Δ_n(source), Δ_n(target))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HomQuery {
    pub n: usize,
    pub delta: i64,
    pub source: Partition,
    pub target: Partition,
}

impl HomQuery {
    pub fn new(n: usize, delta: i64, source: Partition, target: Partition) -> Self {
        HomQuery { n, delta, source, target }
    }
}

/// Builds and caches cell modules under a dimension cap.
#[derive(Debug)]
pub struct Oracle {
    limit: usize,
    seed: u64,
    modules: Mutex<HashMap<(usize, i64, Partition), Arc<CellModule>>>,
}

impl Oracle {
    pub fn new(limit: usize) -> Self {
        Oracle { limit, seed: DEFAULT_SEED, modules: Mutex::new(HashMap::new()) }
    }

    /// Reads the cap from `BRAUER_MAX_DIM`, falling back to the default.
    pub fn from_env() -> Self {
        let limit = std::env::var(MAX_DIM_VAR).ok().and_then(|s| s.parse().ok()).unwrap_or(DEFAULT_MAX_DIM);
        Oracle::new(limit)
    }

    /// Replaces the seed used by the reduced Hom route.
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    fn check_weight(n: usize, delta: i64, mu: &Partition) -> Result<()> {
        if mu.size() > n || (n - mu.size()) % 2 != 0 {
            return Err(Error::InvalidParameters(format!("({mu}) is not a weight for n = {n}")));
        }
        if delta == 0 && mu.is_empty() {
            return Err(Error::DeltaZero(format!("the empty weight is omitted for n = {n}")));
        }
        Ok(())
    }

    /// The cell module `Δ_n(μ)`, built once.
    pub fn module(&self, n: usize, delta: i64, mu: &Partition) -> Result<Arc<CellModule>> {
        Self::check_weight(n, delta, mu)?;
        let dim = cell_dim(n, mu).unwrap_or(u128::MAX);
        if dim > self.limit as u128 {
            return Err(Error::TooLarge { dim: dim.min(usize::MAX as u128) as usize, limit: self.limit });
        }
        let key = (n, delta, mu.clone());
        if let Some(m) = self.modules.lock().expect("module cache").get(&key) {
            return Ok(Arc::clone(m));
        }
        let built = Arc::new(CellModule::new(n, delta, mu)?);
        Ok(Arc::clone(self.modules.lock().expect("module cache").entry(key).or_insert(built)))
    }

    /// `dim Hom(Δ_n(source), Δ_n(target))`.
    pub fn hom_dim(&self, q: &HomQuery) -> Result<usize> {
        Self::check_weight(q.n, q.delta, &q.source)?;
        let target = self.module(q.n, q.delta, &q.target)?;
        hom_dim_reduced(&q.source, target.as_ref(), self.seed)
    }

    /// The same dimension from the full intertwiner system.
    pub fn hom_dim_dense(&self, q: &HomQuery) -> Result<usize> {
        let s = self.module(q.n, q.delta, &q.source)?;
        let t = self.module(q.n, q.delta, &q.target)?;
        hom_dim_dense(&s, &t)
    }

    /// Scalar of the central element on `Δ_n(μ)`, checked against
    /// `Σ_{d∈[μ]} c(d) − t(δ−1)`.
    pub fn central_scalar(&self, n: usize, delta: i64, mu: &Partition) -> Result<Q> {
        let module = self.module(n, delta, mu)?;
        let s = module
            .central_scalar()
            .ok_or_else(|| Error::Internal(format!("central element is not scalar on Δ_{n}({mu})")))?;
        if s != module.predicted_central_scalar() {
            return Err(Error::Internal(format!("central scalar {s} on Δ_{n}({mu}) differs from the content formula")));
        }
        Ok(s)
    }

    /// Rank of the cellular form on `Δ_n(μ)`.
    pub fn gram_rank(&self, n: usize, delta: i64, mu: &Partition) -> Result<usize> {
        Ok(self.module(n, delta, mu)?.gram_matrix().rank())
    }

    /// `[Res_{Σ_n} Δ_n(μ) : S^λ]` from characters, checked against the
    /// Littlewood–Richardson sum over even `η ⊢ 2t`.
    pub fn restriction_multiplicity(&self, n: usize, delta: i64, mu: &Partition, lambda: &Partition) -> Result<u64> {
        if lambda.size() != n {
            return Err(Error::InvalidParameters(format!("({lambda}) is not a partition of {n}")));
        }
        let module = self.module(n, delta, mu)?;
        let by_chars = character_multiplicity(module.as_ref(), lambda)?;
        let by_lr = lr_multiplicity(n, mu, lambda);
        if by_chars != by_lr {
            return Err(Error::Internal(format!(
                "restriction of Δ_{n}({mu}) to S^({lambda}): characters give {by_chars}, LR gives {by_lr}"
            )));
        }
        Ok(by_chars)
    }
}

/// `⟨χ^λ, tr_M⟩` over the symmetric group on all strands.
pub fn character_multiplicity<M: BrauerModule>(module: &M, lambda: &Partition) -> Result<u64> {
    let n = module.n();
    let mut total: i128 = 0;
    for rho in Partition::all_of_size(n) {
        let g = perm::from_cycle_type(rho.parts());
        total += class_size(&rho) as i128 * mn_character(lambda, &rho)? as i128 * module.perm_trace(&g) as i128;
    }
    let fact: i128 = (1..=n as i128).product();
    if total % fact != 0 || total < 0 {
        return Err(Error::Internal(format!("character inner product {total}/{fact} is not a multiplicity")));
    }
    Ok((total / fact) as u64)
}

/// `Σ_{η ⊢ 2t, η even} c^λ_{μη}`.
pub fn lr_multiplicity(n: usize, mu: &Partition, lambda: &Partition) -> u64 {
    let two_t = n - mu.size();
    Partition::all_of_size(two_t).iter().filter(|eta| eta.is_even()).map(|eta| lr_coefficient(mu, eta, lambda)).sum()
}

/// [`Oracle::hom_dim`] with the cap read from the environment.
pub fn hom_dim(q: &HomQuery) -> Result<usize> {
    Oracle::from_env().hom_dim(q)
}

/// [`Oracle::central_scalar`] with the cap read from the environment.
pub fn central_scalar(n: usize, delta: i64, mu: &Partition) -> Result<Q> {
    Oracle::from_env().central_scalar(n, delta, mu)
}

/// [`Oracle::gram_rank`] with the cap read from the environment.
pub fn gram_rank(n: usize, delta: i64, mu: &Partition) -> Result<usize> {
    Oracle::from_env().gram_rank(n, delta, mu)
}

/// [`Oracle::restriction_multiplicity`] with the cap read from the environment.
pub fn restriction_multiplicity(n: usize, delta: i64, mu: &Partition, lambda: &Partition) -> Result<u64> {
    Oracle::from_env().restriction_multiplicity(n, delta, mu, lambda)
}

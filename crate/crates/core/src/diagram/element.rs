use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::{concat, BrauerDiagram};
use crate::error::{Error, Result};
use crate::linalg::{int_pow, q, q_parse, q_to_string, Q};
use crate::partitions::Partition;
use crate::perm;

/// A formal rational combination of `(n, n)` diagrams in `B_n(δ)`.
#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    delta: i64,
    terms: BTreeMap<BrauerDiagram, Q>,
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(d, c)| format!("({c})[{d}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl AlgebraElement {
    pub fn zero(n: usize, delta: i64) -> Self {
        AlgebraElement { n, delta, terms: BTreeMap::new() }
    }

    pub fn from_diagram(d: BrauerDiagram, delta: i64) -> Self {
        Self::from_terms(d.n(), delta, [(d, Q::one())]).expect("square diagram")
    }

    pub fn from_terms(n: usize, delta: i64, terms: impl IntoIterator<Item = (BrauerDiagram, Q)>) -> Result<Self> {
        let mut out = Self::zero(n, delta);
        for (d, c) in terms {
            if d.n() != n || d.t() != n {
                return Err(Error::ArityMismatch(format!("diagram {d} in an element of B_{n}")));
            }
            out.add_term(d, c);
        }
        Ok(out)
    }

    pub fn identity(n: usize, delta: i64) -> Self {
        Self::from_diagram(BrauerDiagram::identity(n), delta)
    }

    pub fn permutation(g: &[usize], delta: i64) -> Self {
        Self::from_diagram(BrauerDiagram::permutation(g), delta)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn delta(&self) -> i64 {
        self.delta
    }

    pub fn terms(&self) -> &BTreeMap<BrauerDiagram, Q> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, d: &BrauerDiagram) -> Q {
        self.terms.get(d).cloned().unwrap_or_else(Q::zero)
    }

    fn add_term(&mut self, d: BrauerDiagram, c: Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(d.clone()).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&d);
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.n != other.n || self.delta != other.delta {
            return Err(Error::ArityMismatch(format!(
                "B_{}({}) versus B_{}({})",
                self.n, self.delta, other.n, other.delta
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (d, c) in &other.terms {
            out.add_term(d.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&-Q::one()))
    }

    pub fn scale(&self, s: &Q) -> Self {
        let mut out = Self::zero(self.n, self.delta);
        for (d, c) in &self.terms {
            out.add_term(d.clone(), c * s);
        }
        out
    }

    /// Bilinear extension of diagram concatenation, each loop contributing `δ`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.n, self.delta);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let (d, loops) = concat(a, b)?;
                let w = int_pow(self.delta, loops);
                if w.is_zero() {
                    continue;
                }
                out.add_term(d, ca * cb * Q::from_integer(w));
            }
        }
        Ok(out)
    }

    /// Anti-automorphism induced by flipping every diagram.
    pub fn flip(&self) -> Self {
        let mut out = Self::zero(self.n, self.delta);
        for (d, c) in &self.terms {
            out.add_term(d.flip(), c.clone());
        }
        out
    }

    /// JSON list of `{coeff: "p/q", diagram: "..."}`.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms.iter().map(|(d, c)| json!({"coeff": q_to_string(c), "diagram": d.to_string()})).collect(),
        )
    }

    pub fn from_json(v: &Value, n: usize, delta: i64) -> Result<Self> {
        let arr = v.as_array().ok_or_else(|| Error::Parse("expected a JSON array".into()))?;
        let mut terms = Vec::new();
        for item in arr {
            let c = item
                .get("coeff")
                .and_then(Value::as_str)
                .and_then(q_parse)
                .ok_or_else(|| Error::Parse("bad coeff".into()))?;
            let d: BrauerDiagram = item
                .get("diagram")
                .and_then(Value::as_str)
                .ok_or_else(|| Error::Parse("bad diagram".into()))?
                .parse()?;
            terms.push((d, c));
        }
        Self::from_terms(n, delta, terms)
    }
}

fn check_nonzero_delta(delta: i64, what: &str) -> Result<()> {
    if delta == 0 {
        return Err(Error::DeltaZero(format!("{what} needs division by delta")));
    }
    Ok(())
}

/// Diagram with vertical lines on `0..n-2t` and arcs `{k, k+1}` on the
/// remaining northern and southern nodes.
fn arc_diagram(n: usize, t: usize) -> BrauerDiagram {
    let m = n - 2 * t;
    let mut pairs: Vec<(usize, usize)> = (0..m).map(|i| (i, n + i)).collect();
    for k in 0..t {
        let a = m + 2 * k;
        pairs.push((a, a + 1));
        pairs.push((n + a, n + a + 1));
    }
    BrauerDiagram::from_pairs(n, n, &pairs).expect("valid arc diagram")
}

/// `e_{n,t} = δ^{-t}` times the diagram with `t` northern and southern arcs
/// on the last `2t` nodes; `t = 0` gives the identity for every `δ`.
pub fn e_t(n: usize, t: usize, delta: i64) -> Result<AlgebraElement> {
    if 2 * t > n {
        return Err(Error::InvalidParameters(format!("e_{{{n},{t}}} needs 2t <= n")));
    }
    if t == 0 {
        return Ok(AlgebraElement::identity(n, delta));
    }
    check_nonzero_delta(delta, "e_{n,t}")?;
    let s = Q::new(BigInt::one(), int_pow(delta, t));
    Ok(AlgebraElement::from_diagram(arc_diagram(n, t), delta).scale(&s))
}

/// `e_n = e_{n,1}`.
pub fn e(n: usize, delta: i64) -> Result<AlgebraElement> {
    if n < 2 {
        return Err(Error::InvalidParameters("e_n needs n >= 2".into()));
    }
    e_t(n, 1, delta)
}

/// `Φ_n(d) = δ^{-1}(d ⊗ U)`: embeds `B_{n-2}` into `e_n B_n e_n`.
pub fn phi(x: &AlgebraElement) -> Result<AlgebraElement> {
    check_nonzero_delta(x.delta, "Φ_n")?;
    let u = BrauerDiagram::hook(2, 0, 1);
    let s = Q::new(BigInt::one(), BigInt::from(x.delta));
    let terms = x.terms.iter().map(|(d, c)| (d.tensor(&u), c * &s));
    AlgebraElement::from_terms(x.n + 2, x.delta, terms)
}

/// The diagram underlying `ē_n`, built from an `(n-2, n-2)` diagram `d`:
/// `d` occupies northern nodes `1..n-2` and southern nodes `1..n-3, n`,
/// with a northern arc `{n-1, n}` and a southern arc `{n-2, n-1}`.
fn bar_diagram(d: &BrauerDiagram) -> BrauerDiagram {
    let k = d.n();
    let n = k + 2;
    let map = |x: usize| -> usize {
        if x < k {
            x
        } else {
            let j = x - k;
            if j + 1 < k {
                n + j
            } else {
                n + n - 1
            }
        }
    };
    let mut pairs: Vec<(usize, usize)> = d.pairs().into_iter().map(|(a, b)| (map(a), map(b))).collect();
    pairs.push((n - 2, n - 1));
    pairs.push((n + n - 3, n + n - 2));
    BrauerDiagram::from_pairs(n, n, &pairs).expect("valid bar diagram")
}

/// `Φ̄_n(d)`: embeds `B_{n-2}` into `ē_n B_n ē_n` for every `δ`.
pub fn phi_bar(x: &AlgebraElement) -> Result<AlgebraElement> {
    if x.n < 1 {
        return Err(Error::InvalidParameters("Φ̄_n needs n >= 3".into()));
    }
    let terms = x.terms.iter().map(|(d, c)| (bar_diagram(d), c.clone()));
    AlgebraElement::from_terms(x.n + 2, x.delta, terms)
}

/// An idempotent `ē_n` valid for every `δ`, including `δ = 0`: vertical lines
/// on `1..n-3`, the line `n-2` to `n'`, a northern arc `{n-1, n}` and a
/// southern arc `{(n-2)', (n-1)'}`.
pub fn e_bar(n: usize, delta: i64) -> Result<AlgebraElement> {
    if n < 3 {
        return Err(Error::InvalidParameters("ē_n needs n >= 3".into()));
    }
    phi_bar(&AlgebraElement::identity(n - 2, delta))
}

/// `X_{i,j}` for `1 <= i < j <= n`.
pub fn x_hook(n: usize, i: usize, j: usize, delta: i64) -> Result<AlgebraElement> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::InvalidParameters(format!("X_{{{i},{j}}} needs 1 <= i < j <= {n}")));
    }
    Ok(AlgebraElement::from_diagram(BrauerDiagram::hook(n, i - 1, j - 1), delta))
}

/// `T_n = Σ_{i<j} X_{i,j}`.
pub fn t_element(n: usize, delta: i64) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n, delta);
    for i in 0..n {
        for j in i + 1..n {
            out.add_term(BrauerDiagram::hook(n, i, j), Q::one());
        }
    }
    out
}

/// `Σ_{i<j} ((i,j) − X_{i,j})`, central in `B_n(δ)`.
pub fn central_element(n: usize, delta: i64) -> AlgebraElement {
    let mut out = AlgebraElement::zero(n, delta);
    for i in 0..n {
        for j in i + 1..n {
            out.add_term(BrauerDiagram::permutation(&perm::transposition(n, i, j)), Q::one());
            out.add_term(BrauerDiagram::hook(n, i, j), -Q::one());
        }
    }
    out
}

/// Young symmetrizer `e_λ = (f^λ/n!) Σ_{σ∈C, τ∈R} sgn(σ) στ` for the
/// row-reading tableau of shape `λ`.
pub fn young_symmetrizer(lambda: &Partition, n: usize, delta: i64) -> Result<AlgebraElement> {
    if lambda.size() != n {
        return Err(Error::InvalidParameters(format!("{lambda} is not a partition of {n}")));
    }
    let r_group = perm::block_stabilizer(n, &lambda.row_blocks());
    let c_group = perm::block_stabilizer(n, &lambda.column_blocks());
    let mut acc: BTreeMap<perm::Perm, i64> = BTreeMap::new();
    for sigma in &c_group {
        let s = perm::sign(sigma);
        for tau in &r_group {
            *acc.entry(perm::compose(sigma, tau)).or_default() += s;
        }
    }
    let fact: i64 = (1..=n as i64).product();
    let scale = Q::new(BigInt::from(lambda.specht_dim()), BigInt::from(fact));
    let terms = acc.into_iter().map(|(g, c)| (BrauerDiagram::permutation(&g), q(c) * &scale));
    AlgebraElement::from_terms(n, delta, terms)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> Q {
        Q::new(BigInt::from(1), BigInt::from(2))
    }

    #[test]
    fn e_examples() {
        let e8 = e(8, 3).unwrap();
        let d: BrauerDiagram = "n=8; 1-1' 2-2' 3-3' 4-4' 5-5' 6-6' 7-8 7'-8'".parse().unwrap();
        assert_eq!(e8, AlgebraElement::from_diagram(d, 3).scale(&Q::new(BigInt::from(1), BigInt::from(3))));
        assert_eq!(e_t(5, 0, 0).unwrap(), AlgebraElement::identity(5, 0));
        assert!(e(4, 0).is_err());
        assert!(e_t(4, 3, 1).is_err());
        let e2 = e(2, 5).unwrap();
        assert_eq!(e2.multiply(&e2).unwrap(), e2);
    }

    #[test]
    fn e_bar_idempotent_at_zero() {
        for n in 3..=6 {
            for delta in [0, 1, -2] {
                let x = e_bar(n, delta).unwrap();
                assert_eq!(x.multiply(&x).unwrap(), x, "n={n} delta={delta}");
            }
        }
    }

    #[test]
    fn symmetrizers_two() {
        let s1 = AlgebraElement::permutation(&[1, 0], 2);
        let id = AlgebraElement::identity(2, 2);
        let plus = id.add(&s1).unwrap().scale(&half());
        let minus = id.sub(&s1).unwrap().scale(&half());
        assert_eq!(young_symmetrizer(&Partition::of(&[2]), 2, 2).unwrap(), plus);
        assert_eq!(young_symmetrizer(&Partition::of(&[1, 1]), 2, 2).unwrap(), minus);
        let x = x_hook(2, 1, 2, 2).unwrap();
        assert!(x.multiply(&minus).unwrap().is_zero());
    }

    #[test]
    fn json_round_trip() {
        let x = t_element(3, -1).add(&central_element(3, -1)).unwrap().scale(&half());
        let v = x.to_json();
        assert_eq!(AlgebraElement::from_json(&v, 3, -1).unwrap(), x);
    }

    #[test]
    fn x_bounds() {
        assert!(x_hook(3, 2, 2, 1).is_err());
        assert!(x_hook(3, 0, 2, 1).is_err());
        assert!(x_hook(3, 2, 4, 1).is_err());
        let u = AlgebraElement::from_diagram(BrauerDiagram::hook(2, 0, 1), 4);
        assert_eq!(x_hook(2, 1, 2, 4).unwrap(), u);
    }
}

//! Brauer diagrams and the algebra `B_n(δ)`.

mod element;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Perm;

pub use element::{
    central_element, e, e_bar, e_t, phi, phi_bar, t_element, x_hook, young_symmetrizer, AlgebraElement,
};

/// A reduced `(n, t)` Brauer diagram: a perfect matching on `n` northern
/// nodes (indices `0..n`) and `t` southern nodes (indices `n..n+t`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BrauerDiagram {
    n: usize,
    t: usize,
    partner: Vec<usize>,
}

impl fmt::Debug for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl BrauerDiagram {
    /// Builds a diagram from its partner array.
    pub fn from_partner(n: usize, t: usize, partner: Vec<usize>) -> Result<Self> {
        if partner.len() != n + t {
            return Err(Error::InvalidDiagram(format!("expected {} nodes, got {}", n + t, partner.len())));
        }
        for (i, &j) in partner.iter().enumerate() {
            if j >= n + t || j == i || partner[j] != i {
                return Err(Error::InvalidDiagram(format!("node {i} is not matched consistently")));
            }
        }
        Ok(BrauerDiagram { n, t, partner })
    }

    /// Builds a diagram from pairs of node indices (southern nodes offset by `n`).
    pub fn from_pairs(n: usize, t: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut partner = vec![usize::MAX; n + t];
        for &(a, b) in pairs {
            if a >= n + t || b >= n + t || a == b || partner[a] != usize::MAX || partner[b] != usize::MAX {
                return Err(Error::InvalidDiagram(format!("bad pair ({a}, {b})")));
            }
            partner[a] = b;
            partner[b] = a;
        }
        if partner.contains(&usize::MAX) {
            return Err(Error::InvalidDiagram("some node is unmatched".into()));
        }
        Self::from_partner(n, t, partner)
    }

    pub fn identity(n: usize) -> Self {
        Self::permutation(&crate::perm::identity(n))
    }

    /// The diagram joining northern node `g(i)` to southern node `i`, so that
    /// products of permutation diagrams compose as permutations.
    pub fn permutation(g: &[usize]) -> Self {
        let n = g.len();
        let mut partner = vec![0; 2 * n];
        for (i, &gi) in g.iter().enumerate() {
            partner[gi] = n + i;
            partner[n + i] = gi;
        }
        BrauerDiagram { n, t: n, partner }
    }

    /// The `(n, n)` diagram with northern arc `{i, j}`, southern arc
    /// `{i', j'}` and vertical lines elsewhere (zero based).
    pub fn hook(n: usize, i: usize, j: usize) -> Self {
        let mut partner: Vec<usize> = (0..2 * n).map(|k| if k < n { k + n } else { k - n }).collect();
        partner[i] = j;
        partner[j] = i;
        partner[n + i] = n + j;
        partner[n + j] = n + i;
        BrauerDiagram { n, t: n, partner }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn partner(&self, node: usize) -> usize {
        self.partner[node]
    }

    pub fn partners(&self) -> &[usize] {
        &self.partner
    }

    /// Pairs `(a, b)` with `a < b`, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n + self.t).filter(|&a| a < self.partner[a]).map(|a| (a, self.partner[a])).collect()
    }

    pub fn propagating(&self) -> usize {
        (0..self.n).filter(|&i| self.partner[i] >= self.n).count()
    }

    /// Northern arcs as zero-based pairs.
    pub fn northern_arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n).filter(|&i| self.partner[i] < self.n && i < self.partner[i]).map(|i| (i, self.partner[i])).collect()
    }

    /// Southern arcs as zero-based southern positions.
    pub fn southern_arcs(&self) -> Vec<(usize, usize)> {
        (0..self.t)
            .filter(|&j| self.partner[self.n + j] >= self.n && self.n + j < self.partner[self.n + j])
            .map(|j| (j, self.partner[self.n + j] - self.n))
            .collect()
    }

    /// The permutation `g` with `self = permutation(g)`, if `self` is one.
    pub fn as_permutation(&self) -> Option<Perm> {
        if self.n != self.t || self.propagating() != self.n {
            return None;
        }
        Some((0..self.n).map(|i| self.partner[self.n + i]).collect())
    }

    /// Vertical reflection, exchanging the two boundaries.
    pub fn flip(&self) -> Self {
        let (n, t) = (self.n, self.t);
        let map = |k: usize| if k < n { t + k } else { k - n };
        let mut partner = vec![0; n + t];
        for k in 0..n + t {
            partner[map(k)] = map(self.partner[k]);
        }
        BrauerDiagram { n: t, t: n, partner }
    }

    /// `self ⊗ other`: juxtaposition, `self` on the left.
    pub fn tensor(&self, other: &BrauerDiagram) -> Self {
        let (n1, t1, n2, t2) = (self.n, self.t, other.n, other.t);
        let n = n1 + n2;
        let map1 = |k: usize| if k < n1 { k } else { n + (k - n1) };
        let map2 = |k: usize| if k < n2 { n1 + k } else { n + t1 + (k - n2) };
        let mut partner = vec![0; n + t1 + t2];
        for k in 0..n1 + t1 {
            partner[map1(k)] = map1(self.partner[k]);
        }
        for k in 0..n2 + t2 {
            partner[map2(k)] = map2(other.partner[k]);
        }
        BrauerDiagram { n, t: t1 + t2, partner }
    }

    /// All `(n, t)` diagrams in a fixed deterministic order.
    pub fn enumerate(n: usize, t: usize) -> Vec<BrauerDiagram> {
        fn go(partner: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            let Some(a) = partner.iter().position(|&p| p == usize::MAX) else {
                out.push(partner.clone());
                return;
            };
            for b in a + 1..partner.len() {
                if partner[b] == usize::MAX {
                    partner[a] = b;
                    partner[b] = a;
                    go(partner, out);
                    partner[a] = usize::MAX;
                    partner[b] = usize::MAX;
                }
            }
        }
        if (n + t) % 2 == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        go(&mut vec![usize::MAX; n + t], &mut out);
        out.into_iter().map(|partner| BrauerDiagram { n, t, partner }).collect()
    }
}

/// Stacks `a` above `b`, returning the reduced diagram and the number of
/// closed loops removed.
pub fn concat(a: &BrauerDiagram, b: &BrauerDiagram) -> Result<(BrauerDiagram, usize)> {
    if a.t != b.n {
        return Err(Error::ArityMismatch(format!("cannot stack ({},{}) above ({},{})", a.n, a.t, b.n, b.t)));
    }
    let (na, m, tb) = (a.n, a.t, b.t);
    let mut seen_mid = vec![false; m];
    let mut partner = vec![usize::MAX; na + tb];
    // Follow a path that has just entered the middle row at `mid` coming from `a`.
    let walk_from_a = |mut mid: usize, seen_mid: &mut Vec<bool>| -> usize {
        loop {
            seen_mid[mid] = true;
            let y = b.partner[mid];
            if y >= m {
                return na + (y - m);
            }
            seen_mid[y] = true;
            let x = a.partner[na + y];
            if x < na {
                return x;
            }
            mid = x - na;
        }
    };
    let walk_from_b = |mut mid: usize, seen_mid: &mut Vec<bool>| -> usize {
        loop {
            seen_mid[mid] = true;
            let x = a.partner[na + mid];
            if x < na {
                return x;
            }
            seen_mid[x - na] = true;
            let y = b.partner[x - na];
            if y >= m {
                return na + (y - m);
            }
            mid = y;
        }
    };
    for i in 0..na {
        if partner[i] != usize::MAX {
            continue;
        }
        let x = a.partner[i];
        let end = if x < na { x } else { walk_from_a(x - na, &mut seen_mid) };
        partner[i] = end;
        partner[end] = i;
    }
    for j in 0..tb {
        let node = na + j;
        if partner[node] != usize::MAX {
            continue;
        }
        let y = b.partner[m + j];
        let end = if y >= m { na + (y - m) } else { walk_from_b(y, &mut seen_mid) };
        partner[node] = end;
        partner[end] = node;
    }
    let mut loops = 0;
    for start in 0..m {
        if seen_mid[start] {
            continue;
        }
        loops += 1;
        let mut mid = start;
        loop {
            seen_mid[mid] = true;
            let y = b.partner[mid];
            seen_mid[y] = true;
            let x = a.partner[na + y] - na;
            if x == start {
                break;
            }
            mid = x;
        }
    }
    Ok((BrauerDiagram { n: na, t: tb, partner }, loops))
}

fn node_label(n: usize, k: usize) -> String {
    if k < n {
        format!("{}", k + 1)
    } else {
        format!("{}'", k - n + 1)
    }
}

impl fmt::Display for BrauerDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n == self.t {
            write!(f, "n={};", self.n)?;
        } else {
            write!(f, "n={},t={};", self.n, self.t)?;
        }
        for (a, b) in self.pairs() {
            write!(f, " {}-{}", node_label(self.n, a), node_label(self.n, b))?;
        }
        Ok(())
    }
}

impl FromStr for BrauerDiagram {
    type Err = Error;

    /// Parses `"n=4; 1-2 3-1' 4-2' 3'-4'"` (primed nodes are southern);
    /// `"n=4,t=2; ..."` gives a rectangular diagram.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in diagram {s:?}"));
        let (head, body) = s.split_once(';').ok_or_else(|| bad("missing ';'"))?;
        let mut n = None;
        let mut t = None;
        for field in head.split(',') {
            let (k, v) = field.split_once('=').ok_or_else(|| bad("malformed header"))?;
            let v: usize = v.trim().parse().map_err(|_| bad("malformed size"))?;
            match k.trim() {
                "n" => n = Some(v),
                "t" => t = Some(v),
                _ => return Err(bad("unknown header key")),
            }
        }
        let n = n.ok_or_else(|| bad("missing n"))?;
        let t = t.unwrap_or(n);
        let node = |tok: &str| -> Result<usize> {
            let (num, south) = match tok.strip_suffix('\'') {
                Some(x) => (x, true),
                None => (tok, false),
            };
            let k: usize = num.parse().map_err(|_| bad("malformed node"))?;
            let limit = if south { t } else { n };
            if k == 0 || k > limit {
                return Err(bad("node out of range"));
            }
            Ok(if south { n + k - 1 } else { k - 1 })
        };
        let mut pairs = Vec::new();
        for tok in body.split_whitespace() {
            let (a, b) = tok.split_once('-').ok_or_else(|| bad("malformed pair"))?;
            pairs.push((node(a)?, node(b)?));
        }
        BrauerDiagram::from_pairs(n, t, &pairs)
    }
}

//! Permutations of `{0, .., n-1}` stored as image vectors.

/// `p[i]` is the image of `i`.
pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

/// The transposition swapping `a` and `b`.
pub fn transposition(n: usize, a: usize, b: usize) -> Perm {
    let mut p = identity(n);
    p.swap(a, b);
    p
}

/// `g ∘ h`, i.e. apply `h` first.
pub fn compose(g: &[usize], h: &[usize]) -> Perm {
    h.iter().map(|&i| g[i]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (i, &j) in p.iter().enumerate() {
        inv[j] = i;
    }
    inv
}

pub fn is_perm(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &i in p {
        if i >= p.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    true
}

/// Cycle lengths in weakly decreasing order.
pub fn cycle_type(p: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; p.len()];
    let mut lens = Vec::new();
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        lens.push(len);
    }
    lens.sort_unstable_by(|a, b| b.cmp(a));
    lens
}

/// `+1` or `-1`.
pub fn sign(p: &[usize]) -> i64 {
    let even = cycle_type(p).iter().filter(|&&l| l % 2 == 0).count();
    if even % 2 == 0 {
        1
    } else {
        -1
    }
}

/// A permutation with the given cycle type, cycles on consecutive points.
pub fn from_cycle_type(cycles: &[usize]) -> Perm {
    let n: usize = cycles.iter().sum();
    let mut p = identity(n);
    let mut start = 0;
    for &len in cycles {
        for k in 0..len {
            p[start + k] = start + (k + 1) % len;
        }
        start += len;
    }
    p
}

/// Adjacent-transposition word `[i1, i2, ..]` (each `i` meaning `(i, i+1)`,
/// zero based) whose product `s_{i1} s_{i2} ..` equals `p`.
pub fn reduced_word(p: &[usize]) -> Vec<usize> {
    // Bubble sort `p` to the identity by right multiplication.
    let mut q = p.to_vec();
    let mut word = Vec::new();
    loop {
        let Some(i) = (0..q.len().saturating_sub(1)).find(|&i| q[i] > q[i + 1]) else { break };
        q.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

/// All permutations of `n` points in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    use itertools::Itertools;
    (0..n).permutations(n).collect()
}

/// All permutations of `n` points preserving each block setwise.
pub fn block_stabilizer(n: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![identity(n)];
    for block in blocks {
        let mut next = Vec::new();
        for local in all(block.len()) {
            for g in &out {
                let mut h = g.clone();
                for (k, &src) in block.iter().enumerate() {
                    h[src] = block[local[k]];
                }
                next.push(h);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let g = vec![1, 2, 0];
        let h = vec![0, 2, 1];
        assert_eq!(compose(&g, &h), vec![1, 0, 2]);
        assert_eq!(compose(&g, &inverse(&g)), identity(3));
    }

    #[test]
    fn signs_and_cycles() {
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
        assert_eq!(cycle_type(&[1, 0, 3, 4, 2]), vec![3, 2]);
        assert_eq!(cycle_type(&from_cycle_type(&[3, 2, 1])), vec![3, 2, 1]);
    }

    #[test]
    fn reduced_words_multiply_back() {
        for p in all(4) {
            let mut acc = identity(4);
            for &i in &reduced_word(&p) {
                acc = compose(&acc, &transposition(4, i, i + 1));
            }
            assert_eq!(acc, p);
        }
    }
}

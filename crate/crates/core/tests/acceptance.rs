//! One line per acceptance criterion: `criterion N [name]: PASS|FAIL`.

use std::time::{Duration, Instant};

use brauer::blocks::*;
use brauer::cell::{cell_dim, restriction_rule, CellModule};
use brauer::diagram::{self, AlgebraElement, BrauerDiagram};
use brauer::oracle::{verify_blocks, HomQuery, Oracle};
use brauer::partitions::{skew_of, Cell, Partition};
use brauer::perm;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p(x: &[usize]) -> Partition {
    Partition::of(x)
}

fn oracle() -> Oracle {
    Oracle::new(100_000)
}

fn report(id: u32, name: &str, failures: &[String], start: Instant, bound: Duration) {
    let elapsed = start.elapsed();
    let ok = failures.is_empty() && elapsed <= bound;
    let status = if ok { "PASS" } else { "FAIL" };
    println!("criterion {id} [{name}]: {status} in {:.2}s (bound {}s)", elapsed.as_secs_f64(), bound.as_secs());
    for f in failures.iter().take(12) {
        println!("    {f}");
    }
    if failures.len() > 12 {
        println!("    ... {} more", failures.len() - 12);
    }
    assert!(ok, "criterion {id} failed");
}

#[test]
fn criterion_01_balanced_fixtures() {
    let start = Instant::now();
    let cases = [
        (p(&[6, 4, 4, 2, 1]), p(&[6, 4, 4, 2, 1]), 3, true),
        (p(&[6, 5, 5, 2, 1]), p(&[6, 4, 1]), 2, true),
        (p(&[6, 4, 4, 2, 1]), p(&[5, 2, 2]), 1, false),
        (p(&[5, 4, 4, 4, 4]), p(&[5, 1, 1, 1, 1]), 2, false),
        (p(&[7, 6, 6, 5, 4, 4, 2]), p(&[5, 3, 2, 2, 2, 1]), 1, true),
    ];
    let mut failures = Vec::new();
    for (l, m, d, expect) in cases {
        let got = is_balanced(&l, &m, d);
        if got != expect {
            let size = skew_of(&l, &l.intersection(&m)).len() + skew_of(&m, &l.intersection(&m)).len();
            failures.push(format!("({l}) ({m}) delta {d}: expected {expect}, got {got}; symmetric difference has {size} boxes"));
        }
    }
    let near = is_balanced(&p(&[7, 6, 6, 5, 4, 4, 2]), &p(&[5, 3, 2, 2, 1, 1]), 1);
    println!("    note: one-box neighbour (7,6,6,5,4,4,2) (5,3,2,2,1,1) delta 1 balanced = {near}");
    report(1, "balanced fixtures", &failures, start, Duration::from_secs(1));
}

#[test]
fn criterion_02_two_box_homs() {
    let start = Instant::now();
    let o = oracle();
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 2..=6 {
        for delta in [-2, -1, 1, 2, 3] {
            for l in WeightSet::new(n, delta).weights {
                for m in l.subpartitions().into_iter().filter(|m| m.size() + 2 == l.size()) {
                    let s = skew_of(&l, &m);
                    let cs: Vec<i64> = s.contents();
                    let vertical = cs[0] - cs[1] == 1 && s.components().len() == 1 && {
                        let b: Vec<&Cell> = s.boxes().collect();
                        b[0].col == b[1].col
                    };
                    let expect = usize::from(cs[0] + cs[1] == 1 - delta && !vertical);
                    let got = o.hom_dim(&HomQuery::new(n, delta, l.clone(), m.clone())).unwrap();
                    checked += 1;
                    if got != expect {
                        failures.push(format!("n {n} delta {delta} ({l}) -> ({m}): expected {expect}, got {got}"));
                    }
                }
            }
        }
    }
    println!("    {checked} pairs");
    report(2, "two-box homomorphisms", &failures, start, Duration::from_secs(600));
}

#[test]
fn criterion_03_t_action() {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=6 {
        for delta in -2..=3 {
            for mu in WeightSet::new(n, delta).weights {
                if !CellModule::new(n, delta, &mu).unwrap().t_action_check() {
                    failures.push(format!("n {n} delta {delta} ({mu})"));
                }
            }
        }
    }
    report(3, "T_n action", &failures, start, Duration::from_secs(300));
}

#[test]
fn criterion_04_restriction_routes() {
    let start = Instant::now();
    let o = oracle();
    let mut failures = Vec::new();
    for n in 0..=7 {
        for mu in WeightSet::new(n, 1).weights {
            for l in Partition::all_of_size(n) {
                if let Err(e) = o.restriction_multiplicity(n, 1, &mu, &l) {
                    failures.push(format!("n {n} ({mu}) ({l}): {e}"));
                }
            }
        }
    }
    report(4, "restriction multiplicities", &failures, start, Duration::from_secs(600));
}

/// `(a, b, c)` when `λ/μ` is a nonempty `b × a` rectangle whose top left box
/// has content `c`.
fn rectangle(l: &Partition, m: &Partition) -> Option<(usize, usize, i64)> {
    let s = skew_of(l, m);
    let first = *s.boxes().next()?;
    let rows = s.boxes().map(|b| b.row).max()? - first.row + 1;
    let cols = s.boxes().map(|b| b.col).max()? - first.col + 1;
    let full = s.len() == rows * cols
        && s.boxes().all(|b| b.row >= first.row && b.col >= first.col);
    full.then_some((cols, rows, first.content()))
}

#[test]
fn criterion_05_rectangles() {
    let start = Instant::now();
    let o = oracle();
    let mut failures = Vec::new();
    let fixture = o.hom_dim(&HomQuery::new(4, 1, p(&[2, 2]), Partition::empty())).unwrap();
    if fixture != 1 {
        failures.push(format!("(2,2) -> () at delta 1: {fixture}"));
    }
    let mut counts = [0usize; 2];
    for size in 1..=6 {
        for delta in -2..=3 {
            for l in Partition::all_of_size(size) {
                for m in l.subpartitions() {
                    let Some((a, b, c)) = rectangle(&l, &m) else { continue };
                    if (delta == 0 && m.is_empty()) || a * b % 2 != 0 {
                        continue;
                    }
                    let holds = a % 2 == 0 && b as i64 == delta - 1 + a as i64 + 2 * c;
                    let got = o.hom_dim(&HomQuery::new(size, delta, l.clone(), m.clone())).unwrap();
                    counts[usize::from(holds)] += 1;
                    if got != usize::from(holds) {
                        failures.push(format!("delta {delta} ({l}) -> ({m}) a={a} b={b} c={c}: got {got}"));
                    }
                }
            }
        }
    }
    println!("    {} satisfying, {} violating", counts[1], counts[0]);
    report(5, "rectangle skews", &failures, start, Duration::from_secs(600));
}

#[test]
fn criterion_06_block_classification() {
    let start = Instant::now();
    let o = oracle();
    let mut failures = Vec::new();
    for n in 1..=6 {
        for delta in -2..=3 {
            let r = verify_blocks(&o, n, delta).unwrap();
            for c in r.checks.iter().filter(|c| !c.passed()) {
                failures.push(format!("n {n} delta {delta} {}: {:?}", c.name, c.witness));
            }
        }
    }
    report(6, "block classification", &failures, start, Duration::from_secs(1800));
}

#[test]
fn criterion_07_construction_fixtures() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let l = p(&[7, 6, 6, 5, 4, 4, 2]);
    match maximal_balanced_sub(&l, &p(&[5, 3, 2, 2, 2, 1]), 1) {
        Ok(t) if t == p(&[7, 6, 4, 4, 3, 2, 2]) => {}
        other => failures.push(format!("maximal subpartition for ({l}) (5,3,2,2,2,1): {other:?}")),
    }
    let near = maximal_balanced_sub(&l, &p(&[5, 3, 2, 2, 1, 1]), 1);
    println!("    note: with (5,3,2,2,1,1) in place of (5,3,2,2,2,1) the target is {near:?}");

    let steps = hat_trace(&p(&[7, 7, 6, 5, 4, 2, 1, 1]), 1).steps;
    let expect = vec![HatStep::Columns(1), HatStep::Rows(2), HatStep::Columns(2), HatStep::Rows(3)];
    if steps != expect {
        failures.push(format!("strip sequence {steps:?}"));
    }

    let seventeen = p(&[7, 6, 6, 5, 2, 2]);
    let h = hat(&seventeen, 1);
    let rows: std::collections::BTreeSet<usize> = h.boxes().map(|b| b.row).collect();
    if rows.len() != 1 {
        failures.push(format!("hat of ({seventeen}) has {} rows: {:?}", rows.len(), hat_trace(&seventeen, 1).steps));
    }
    if !is_minimal(&seventeen, 1) {
        let floor = minimal_weight(&seventeen, 1).unwrap();
        failures.push(format!("({seventeen}) classified non-minimal; exhaustive minimum in its class is ({floor})"));
    }
    report(7, "construction fixtures", &failures, start, Duration::from_secs(1));
}

#[test]
fn criterion_08_minimality_classifier() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut total = 0;
    for delta in -2..=3 {
        for size in 0..=10 {
            for l in Partition::all_of_size(size).into_iter().filter(|l| is_weight(l, delta)) {
                total += 1;
                let (shape, exact) = (is_minimal(&l, delta), is_minimal_exact(&l, delta));
                if shape != exact {
                    failures.push(format!("delta {delta} ({l}): classifier {shape}, exhaustive {exact}"));
                }
            }
        }
    }
    println!("    {} of {total} disagree", failures.len());
    report(8, "minimality classifier", &failures, start, Duration::from_secs(300));
}

/// Smallest `(λ, μ, δ)` with `λ/μ` four isolated boxes in two matched
/// pairs, searching sizes up to `max`.
fn lattice_instance(max: usize) -> Option<(Partition, Partition, i64)> {
    for size in 4..=max {
        for delta in -(size as i64)..=size as i64 {
            for l in Partition::all_of_size(size) {
                for m in l.subpartitions().into_iter().filter(|m| m.size() + 4 == size) {
                    if let Ok(pred) = lattice_predict(&l, &m, delta) {
                        if pred.m == 2 {
                            return Some((l, m, delta));
                        }
                    }
                }
            }
        }
    }
    None
}

#[test]
fn criterion_09_lattice_hom() {
    let start = Instant::now();
    let mut failures = Vec::new();
    let check = |l: &Partition, m: &Partition, delta: i64, failures: &mut Vec<String>| {
        let pred = lattice_predict(l, m, delta).unwrap();
        let nodes: Vec<&Partition> = pred.nodes.values().collect();
        for a in &nodes {
            for b in &nodes {
                if !is_balanced(a, b, delta) {
                    failures.push(format!("nodes ({a}) ({b}) not balanced"));
                }
            }
        }
        let d = oracle().hom_dim(&HomQuery::new(l.size(), delta, l.clone(), m.clone())).unwrap();
        if d != 1 {
            failures.push(format!("hom dim ({l}) -> ({m}) = {d}"));
        }
        d
    };
    match lattice_instance(9) {
        Some((l, m, delta)) => {
            check(&l, &m, delta, &mut failures);
        }
        None => {
            failures.push("no instance with |λ| <= 9: four isolated boxes need four removable corners".into());
            if let Some((l, m, delta)) = lattice_instance(10) {
                let mut extra = Vec::new();
                let d = check(&l, &m, delta, &mut extra);
                println!("    note: smallest instance ({l}) ({m}) delta {delta}: hom dim {d}, node failures {extra:?}");
            }
        }
    }
    report(9, "lattice homomorphism", &failures, start, Duration::from_secs(1200));
}

fn double_factorial(n: usize) -> usize {
    (1..=n).filter(|k| k % 2 == 1).product()
}

fn el(d: BrauerDiagram, delta: i64) -> AlgebraElement {
    AlgebraElement::from_diagram(d, delta)
}

#[test]
fn criterion_10_structural_suites() {
    let start = Instant::now();
    let mut failures = Vec::new();

    for n in 0..=5 {
        let count = BrauerDiagram::enumerate(n, n).len();
        if count != double_factorial(2 * n) {
            failures.push(format!("{count} diagrams on {n} strands"));
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let all = BrauerDiagram::enumerate(5, 5);
    let pick = |rng: &mut ChaCha8Rng| all[rng.gen_range(0..all.len())].clone();
    for _ in 0..300 {
        let (a, b, c) = (el(pick(&mut rng), 3), el(pick(&mut rng), 3), el(pick(&mut rng), 3));
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        if left != right {
            failures.push("associativity".into());
            break;
        }
    }

    for n in 2..=5 {
        for delta in [-1, 0, 2] {
            let s = |i: usize| el(BrauerDiagram::permutation(&perm::transposition(n, i, i + 1)), delta);
            let x = |i: usize| el(BrauerDiagram::hook(n, i, i + 1), delta);
            let one = AlgebraElement::identity(n, delta);
            for i in 0..n - 1 {
                let mut ok = s(i).multiply(&s(i)).unwrap() == one
                    && x(i).multiply(&x(i)).unwrap() == x(i).scale(&brauer::linalg::q(delta))
                    && s(i).multiply(&x(i)).unwrap() == x(i);
                if i + 2 < n {
                    let sss = |a: usize, b: usize| s(a).multiply(&s(b)).unwrap().multiply(&s(a)).unwrap();
                    let xxx = |a: usize, b: usize| x(a).multiply(&x(b)).unwrap().multiply(&x(a)).unwrap();
                    ok &= sss(i, i + 1) == sss(i + 1, i) && xxx(i, i + 1) == x(i) && xxx(i + 1, i) == x(i + 1);
                }
                for j in i + 2..n - 1 {
                    ok &= s(i).multiply(&s(j)).unwrap() == s(j).multiply(&s(i)).unwrap();
                }
                if !ok {
                    failures.push(format!("generator relations at n {n} delta {delta} i {i}"));
                }
            }
        }
    }

    let idem = |x: &AlgebraElement| x.multiply(x).unwrap() == *x;
    for delta in [-2, -1, 1, 2, 3] {
        for n in 2..=6 {
            for t in 0..=n / 2 {
                if !idem(&diagram::e_t(n, t, delta).unwrap()) {
                    failures.push(format!("e_({n},{t}) at delta {delta}"));
                }
            }
        }
    }
    for delta in -2..=3 {
        for n in 3..=6 {
            if !idem(&diagram::e_bar(n, delta).unwrap()) {
                failures.push(format!("bar e_{n} at delta {delta}"));
            }
        }
        for n in 1..=4 {
            for l in Partition::all_of_size(n) {
                if !idem(&diagram::young_symmetrizer(&l, n, delta).unwrap()) {
                    failures.push(format!("e_({l}) at delta {delta}"));
                }
            }
        }
    }

    for n in 1..=8 {
        for size in (n % 2..=n).step_by(2) {
            for l in Partition::all_of_size(size) {
                let (down, up) = restriction_rule(&l, n).unwrap();
                let res: u128 = down.iter().chain(&up).map(|m| cell_dim(n - 1, m).unwrap()).sum();
                if res != cell_dim(n, &l).unwrap() {
                    failures.push(format!("restriction dimension of ({l}) at n {n}"));
                }
                let ind: u128 = down
                    .iter()
                    .chain(l.addable_boxes().iter().map(|b| l.add_box(b).unwrap()).collect::<Vec<_>>().iter())
                    .map(|m| cell_dim(n + 1, m).unwrap())
                    .sum();
                if ind != cell_dim(n + 2, &l).unwrap() {
                    failures.push(format!("induction dimension of ({l}) at n {n}"));
                }
            }
        }
    }

    for delta in -2..=3 {
        for parity in 0..2 {
            let ws: Vec<Partition> =
                (0..=12).flat_map(Partition::all_of_size).filter(|q| q.size() % 2 == parity).collect();
            let bal: Vec<Vec<bool>> = ws.iter().map(|a| ws.iter().map(|b| is_balanced(a, b, delta)).collect()).collect();
            for i in 0..ws.len() {
                for j in 0..ws.len() {
                    if !bal[i][j] {
                        continue;
                    }
                    if let Some(k) = (0..ws.len()).find(|&k| bal[j][k] && !bal[i][k]) {
                        failures.push(format!("transitivity ({}) ({}) ({}) delta {delta}", ws[i], ws[j], ws[k]));
                    }
                }
            }
        }
    }
    report(10, "structural suites", &failures, start, Duration::from_secs(300));
}

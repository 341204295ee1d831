//! `brauer`: block queries, descent traces, construction dumps, verification
//! and rendering for the Brauer algebra `B_n(δ)`.

use std::process::ExitCode;

use brauer::blocks::{
    block_partition, hat_trace, hom_target, is_balanced, is_minimal, is_weight, lattice_predict,
    maximal_balanced_skew, maximal_balanced_sub, minimal_weight, LatticePrediction,
};
use brauer::oracle::{verify_blocks, HomQuery, Oracle, DEFAULT_SEED, MAX_DIM_VAR};
use brauer::partitions::{skew_of, Cell, Partition, SkewShape};
use brauer::Error;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "brauer", version, about = "Blocks of the Brauer algebra in characteristic zero")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed for randomized steps of the oracle.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Block partition of the cell modules of B_n(δ).
    Blocks {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
    },
    /// Whether two weights lie in the same block (exit 0 same, 1 different).
    SameBlock {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        a: Partition,
        #[arg(value_parser = parse_partition)]
        b: Partition,
    },
    /// Whether a weight is minimal in its block (exit 0 minimal, 1 not).
    Minimal {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Homomorphism target of λ, or the descent chain to the block minimum.
    HomTarget {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        /// Balanced subpartition to start the maximal construction from.
        #[arg(value_parser = parse_partition)]
        mu: Option<Partition>,
    },
    /// Predicted submodule lattice for a skew of isolated matched boxes.
    Lattice {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Partition,
    },
    /// Row and column stripping of λ towards its hat.
    Hat {
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
    },
    /// Check predicted blocks against the brute-force oracle (exit 1 on failure).
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
    },
    /// Young diagram, skew shape or (with --format dot) lattice.
    Render {
        /// Label boxes by charge instead of content; requires --delta.
        #[arg(long, requires = "delta")]
        charges: bool,
        #[arg(long, allow_negative_numbers = true)]
        delta: Option<i64>,
        #[arg(value_parser = parse_partition)]
        lambda: Partition,
        #[arg(value_parser = parse_partition)]
        mu: Option<Partition>,
    },
    /// Dimension of Hom(Δ_n(source), Δ_n(target)).
    HomDim {
        /// Defaults to the larger of the two sizes.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_negative_numbers = true)]
        delta: i64,
        #[arg(value_parser = parse_partition)]
        source: Partition,
        #[arg(value_parser = parse_partition)]
        target: Partition,
    },
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure of a verb: a message and its exit code.
#[derive(Debug)]
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::Internal(_)) { 3 } else { 2 };
        let message = match &e {
            Error::TooLarge { .. } => format!("{e}; raise {MAX_DIM_VAR} to allow it"),
            _ => e.to_string(),
        };
        Failure { code, message }
    }
}

/// Output of a verb and its exit code.
struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }

    fn predicate(text: String, holds: bool) -> Self {
        Outcome { text, code: if holds { 0 } else { 1 } }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("values serialize")
}

fn parts(p: &Partition) -> Value {
    json!(p.parts())
}

fn cells(s: &SkewShape) -> Value {
    json!(s.boxes().map(|b| [b.row, b.col]).collect::<Vec<_>>())
}

fn cell_list(s: &SkewShape) -> String {
    s.boxes().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn require_weight(p: &Partition, delta: i64) -> Result<(), Failure> {
    if is_weight(p, delta) {
        Ok(())
    } else {
        Err(Failure::usage("the empty partition is not a weight at delta 0"))
    }
}

fn require_format(format: Format, allowed: &[Format]) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure::usage(format!("format {format:?} is not available for this verb").to_lowercase()))
    }
}

/// Rows of right-aligned labels; `None` marks a box outside the skew.
fn grid(lambda: &Partition, label: impl Fn(&Cell) -> Option<i64>) -> String {
    if lambda.is_empty() {
        return "(empty)\n".into();
    }
    let texts: Vec<Vec<String>> = (1..=lambda.num_rows())
        .map(|r| {
            (1..=lambda.part(r - 1))
                .map(|c| label(&Cell::new(r, c)).map_or_else(|| ".".to_string(), |v| v.to_string()))
                .collect()
        })
        .collect();
    let width = texts.iter().flatten().map(String::len).max().unwrap_or(1);
    let mut out = String::new();
    for row in texts {
        let line: Vec<String> = row.iter().map(|t| format!("{t:>width$}")).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

fn node_name(x: &[usize]) -> String {
    format!("{{{}}}", x.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn lattice_text(p: &LatticePrediction) -> String {
    let mut out = format!("m = {}\n", p.m);
    for (i, (a, b)) in p.pairs.iter().enumerate() {
        out.push_str(&format!("pair {}: {a} {b}\n", i + 1));
    }
    for (x, q) in &p.nodes {
        out.push_str(&format!("{}: {q}\n", node_name(x)));
    }
    for (x, y) in &p.covers {
        out.push_str(&format!("{} -> {}\n", node_name(x), node_name(y)));
    }
    out
}

fn lattice_json(p: &LatticePrediction) -> Value {
    json!({
        "m": p.m,
        "pairs": p.pairs.iter().map(|(a, b)| [[a.row, a.col], [b.row, b.col]]).collect::<Vec<_>>(),
        "nodes": p.nodes.iter().map(|(x, q)| json!({"subset": x, "partition": parts(q)})).collect::<Vec<_>>(),
        "covers": p.covers.iter().map(|(x, y)| [x, y]).collect::<Vec<_>>(),
    })
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let format = cli.format;
    match cli.verb {
        Verb::Blocks { n, delta } => {
            require_format(format, &[Format::Text, Format::Json])?;
            let b = block_partition(n, delta)?;
            if format == Format::Json {
                return Ok(Outcome::ok(json_text(&b.to_json())));
            }
            let mut out = format!("n = {n}, delta = {delta}: {} blocks\n", b.blocks.len());
            for class in &b.blocks {
                let members: Vec<String> = class.members.iter().map(ToString::to_string).collect();
                out.push_str(&format!("[{}] {}\n", class.minimal, members.join(" ")));
            }
            Ok(Outcome::ok(out))
        }
        Verb::SameBlock { delta, a, b } => {
            require_format(format, &[Format::Text, Format::Json])?;
            require_weight(&a, delta)?;
            require_weight(&b, delta)?;
            let same = a.size() % 2 == b.size() % 2 && is_balanced(&a, &b, delta);
            let text = if format == Format::Json {
                json_text(&json!({"delta": delta, "a": parts(&a), "b": parts(&b), "same": same}))
            } else {
                format!("{}\n", if same { "same" } else { "different" })
            };
            Ok(Outcome::predicate(text, same))
        }
        Verb::Minimal { delta, lambda } => {
            require_format(format, &[Format::Text, Format::Json])?;
            require_weight(&lambda, delta)?;
            let floor = minimal_weight(&lambda, delta)?;
            let minimal = floor == lambda;
            let text = if format == Format::Json {
                json_text(&json!({
                    "delta": delta,
                    "partition": parts(&lambda),
                    "minimal": minimal,
                    "block_minimum": parts(&floor),
                    "shape_classifier": is_minimal(&lambda, delta),
                }))
            } else if minimal {
                format!("{lambda} (minimal)\n")
            } else {
                format!("{lambda} (not minimal; block minimum {floor})\n")
            };
            Ok(Outcome::predicate(text, minimal))
        }
        Verb::HomTarget { delta, lambda, mu } => {
            require_format(format, &[Format::Text, Format::Json])?;
            require_weight(&lambda, delta)?;
            if let Some(mu) = mu {
                require_weight(&mu, delta)?;
                let skew = maximal_balanced_skew(&lambda, &mu, delta)?;
                let target = maximal_balanced_sub(&lambda, &mu, delta)?;
                let text = if format == Format::Json {
                    json_text(&json!({"delta": delta, "lambda": parts(&lambda), "mu": parts(&mu), "skew": cells(&skew), "target": parts(&target)}))
                } else {
                    format!("{lambda} -> {target}\nremoved: {}\n", cell_list(&skew))
                };
                return Ok(Outcome::ok(text));
            }
            let mut steps = Vec::new();
            let mut current = lambda.clone();
            while let Some(next) = hom_target(&current, delta)? {
                steps.push((current.clone(), next.clone(), skew_of(&current, &next)));
                current = next;
            }
            let text = if format == Format::Json {
                let chain: Vec<Value> = steps
                    .iter()
                    .map(|(a, b, s)| json!({"source": parts(a), "target": parts(b), "skew": cells(s)}))
                    .collect();
                json_text(&json!({"delta": delta, "lambda": parts(&lambda), "steps": chain, "minimal": parts(&current)}))
            } else {
                let mut out = String::new();
                for (a, b, s) in &steps {
                    out.push_str(&format!("{a} -> {b}  removed: {}\n", cell_list(s)));
                }
                out.push_str(&format!("{current} (minimal)\n"));
                out
            };
            Ok(Outcome::ok(text))
        }
        Verb::Lattice { delta, lambda, mu } => {
            let p = lattice_predict(&lambda, &mu, delta)?;
            let text = match format {
                Format::Text => lattice_text(&p),
                Format::Json => json_text(&lattice_json(&p)),
                Format::Dot => p.to_dot(),
            };
            Ok(Outcome::ok(text))
        }
        Verb::Hat { delta, lambda } => {
            require_format(format, &[Format::Text, Format::Json])?;
            let trace = hat_trace(&lambda, delta);
            let minimal = is_minimal(&lambda, delta);
            let text = if format == Format::Json {
                let steps: Vec<String> = trace.steps.iter().map(ToString::to_string).collect();
                json_text(&json!({"delta": delta, "lambda": parts(&lambda), "steps": steps, "hat": cells(&trace.remaining), "minimal_shape": minimal}))
            } else {
                let mut out = String::new();
                for step in &trace.steps {
                    out.push_str(&format!("strip {step}\n"));
                }
                let shown = if trace.remaining.is_empty() { "(empty)".to_string() } else { cell_list(&trace.remaining) };
                out.push_str(&format!("hat: {shown}\nminimal shape: {minimal}\n"));
                out
            };
            Ok(Outcome::ok(text))
        }
        Verb::Verify { n, delta } => {
            require_format(format, &[Format::Text, Format::Json])?;
            let oracle = Oracle::from_env().with_seed(cli.seed);
            let report = verify_blocks(&oracle, n, delta)?;
            let text = if format == Format::Json {
                json_text(&report.to_json())
            } else {
                let mut out = String::new();
                for c in &report.checks {
                    out.push_str(&format!("{} {}: {}\n", c.name, c.params, c.status));
                    if let Some(w) = &c.witness {
                        out.push_str(&format!("  witness: {w}\n"));
                    }
                }
                out
            };
            Ok(Outcome::predicate(text, report.passed()))
        }
        Verb::Render { charges, delta, lambda, mu } => {
            if format == Format::Dot {
                let (Some(delta), Some(mu)) = (delta, mu) else {
                    return Err(Failure::usage("dot rendering draws a lattice and needs --delta and two partitions"));
                };
                return Ok(Outcome::ok(lattice_predict(&lambda, &mu, delta)?.to_dot()));
            }
            require_format(format, &[Format::Text])?;
            let inner = mu.unwrap_or_default();
            if !inner.is_contained_in(&lambda) {
                return Err(Failure::usage(format!("({inner}) is not contained in ({lambda})")));
            }
            let label = |b: &Cell| match (inner.has_box(b), charges, delta) {
                (true, _, _) => None,
                (false, true, Some(d)) => Some(b.charge(d)),
                _ => Some(b.content()),
            };
            Ok(Outcome::ok(grid(&lambda, label)))
        }
        Verb::HomDim { n, delta, source, target } => {
            require_format(format, &[Format::Text, Format::Json])?;
            let n = n.unwrap_or(source.size().max(target.size()));
            let oracle = Oracle::from_env().with_seed(cli.seed);
            let dim = oracle.hom_dim(&HomQuery::new(n, delta, source.clone(), target.clone()))?;
            let text = if format == Format::Json {
                json_text(&json!({"n": n, "delta": delta, "source": parts(&source), "target": parts(&target), "dim": dim}))
            } else {
                format!("{dim}\n")
            };
            Ok(Outcome::ok(text))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::try_parse().unwrap_or_else(|e| e.exit());
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            if !out.text.ends_with('\n') {
                println!();
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

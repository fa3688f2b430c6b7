//! Command-line front end for the combinatorics engine.
//!
//! One binary, one subcommand per library area. Every subcommand offers
//! `--format text|json`; JSON is emitted compactly with object keys in
//! sorted order, so a fixed invocation (including any `--seed`) produces
//! byte-identical output across runs and platforms. `--jobs` bounds the
//! worker threads of the few parallel computations and never changes the
//! result.
//!
//! Exit codes: 0 success, 1 negative domain verdict (rejected word, failed
//! structural check, empty match, pattern counterexample), 2 usage or data
//! error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::{BigRational, Zero};
use serde_json::{json, Value};

use combinet::automaton::{from_expr, language_difference, FiniteAutomaton, RationalExpr};
use combinet::catalan::{
    count_pi1_star_jobs, is_catalan, is_pair_matched, parse_match_word, pu_integral, pu_ratio,
    q_polynomial,
};
use combinet::grammar::{
    count_words, xn_distribution, CountTable, DistributionMode, Grammar, WordSource,
};
use combinet::graph::Multigraph;
use combinet::horn::{compute_t_jobs, compute_u_jobs, IndexTriple};
use combinet::linkage::{horn_probability, uniform_reidentification, DataTable};
use combinet::partition::{enumerate_set_partitions, Partition, RgsWord, SetPartition};
use combinet::rational::{decimal_str, rat_str};
use combinet::rng::seeded;
use combinet::semigroup::{LinearPattern, NumericalSemigroup, PatternVerdict};
use combinet::series::TruncatedSeries;
use combinet::tableaux::{enumerate_lr_fillings, lr_coefficient, SkewShape};
use combinet::word::Word;

#[derive(Parser)]
#[command(
    name = "combinet",
    version,
    about = "Exact combinatorics toolkit: index-set triples, tableau \
             coefficients, set partitions, automata, grammars, multigraphs, \
             circuit counts and linkage probabilities."
)]
struct Cli {
    /// Output as human-readable text or compact JSON.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for parallel computations (never affects results).
    #[arg(long, global = true, default_value_t = 1,
          value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible index-set triples over {1..n}.
    Horn(HornArgs),
    /// Coefficient of a skew-shape filling count, optionally listing fillings.
    Lr(LrArgs),
    /// Set partitions, growth words, and numerical semigroups.
    Partition(PartitionArgs),
    /// Finite automata: run words, enumerate, diff against an expression.
    Automaton(AutomatonArgs),
    /// Context-free grammars: exact counts, uniform samples, distributions.
    Grammar(GrammarArgs),
    /// Multigraph metrics: degrees, betweenness, distances, spectrum.
    Graph(GraphArgs),
    /// Nested pair-matched words and their circuit counts and limits.
    Catalan(CatalanArgs),
    /// Probability computations: record linkage and the coefficient formula.
    Dist(DistArgs),
    /// Truncated power series over exact rationals.
    Series(SeriesArgs),
}

// ---------------------------------------------------------------------------
// horn

#[derive(Args)]
struct HornArgs {
    /// Ground set size.
    #[arg(long)]
    n: usize,
    /// Subset size (1 <= r <= n).
    #[arg(long)]
    r: usize,
    /// Which set to print: the sum-identity set (u), the recursively
    /// filtered set (t), or the triples of u absent from t (diff).
    #[arg(long, value_enum, default_value_t = HornChoice::U)]
    set: HornChoice,
}

#[derive(Clone, Copy, ValueEnum)]
enum HornChoice {
    #[value(alias = "U")]
    U,
    #[value(alias = "T")]
    T,
    Diff,
}

fn run_horn(a: &HornArgs, format: Format, jobs: usize) -> Result<u8, String> {
    let err = |e: combinet::horn::HornError| e.to_string();
    let triples: Vec<IndexTriple> = match a.set {
        HornChoice::U => compute_u_jobs(a.n, a.r, jobs).map_err(err)?.triples().to_vec(),
        HornChoice::T => compute_t_jobs(a.n, a.r, jobs).map_err(err)?.triples().to_vec(),
        HornChoice::Diff => {
            let u = compute_u_jobs(a.n, a.r, jobs).map_err(err)?;
            let t = compute_t_jobs(a.n, a.r, jobs).map_err(err)?;
            u.difference(&t)
        }
    };
    match format {
        Format::Text => {
            for t in &triples {
                println!("{t}");
            }
        }
        Format::Json => {
            let rows: Vec<Value> = triples.iter().map(triple_json).collect();
            println!("{}", Value::Array(rows));
        }
    }
    Ok(0)
}

fn triple_json(t: &IndexTriple) -> Value {
    Value::Array(t.as_arrays().iter().map(|s| json!(s)).collect())
}

// ---------------------------------------------------------------------------
// lr

#[derive(Args)]
struct LrArgs {
    /// Outer shape, comma-separated parts ("0" for the empty partition).
    #[arg(long)]
    outer: String,
    /// Inner shape.
    #[arg(long)]
    inner: String,
    /// Content weight.
    #[arg(long)]
    content: String,
    /// Also print every valid filling as rows of integers.
    #[arg(long)]
    list: bool,
}

fn run_lr(a: &LrArgs, format: Format) -> Result<u8, String> {
    let outer = parse_partition("outer", &a.outer)?;
    let inner = parse_partition("inner", &a.inner)?;
    let content = parse_partition("content", &a.content)?;
    let coefficient = lr_coefficient(&outer, &inner, &content);
    let fillings = if a.list && coefficient > 0 {
        let skew = SkewShape::new(outer.clone(), inner.clone()).map_err(|e| e.to_string())?;
        enumerate_lr_fillings(&skew, &content).map_err(|e| e.to_string())?
    } else {
        Vec::new()
    };
    match format {
        Format::Text => {
            println!("{coefficient}");
            for f in &fillings {
                println!();
                println!("{f}");
            }
        }
        Format::Json => {
            let mut out = json!({ "coefficient": coefficient });
            if a.list {
                let rows: Vec<Value> =
                    fillings.iter().map(|f| json!(f.rows())).collect();
                out["fillings"] = Value::Array(rows);
            }
            println!("{out}");
        }
    }
    Ok(0)
}

fn parse_partition(name: &str, s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| format!("--{name}: {e}"))
}

// ---------------------------------------------------------------------------
// partition

#[derive(Args)]
struct PartitionArgs {
    #[command(subcommand)]
    verb: PartitionVerb,
}

#[derive(Subcommand)]
enum PartitionVerb {
    /// Growth word of a set partition in block notation.
    Word {
        /// Block notation, e.g. "{1,3|2,4}".
        #[arg(long)]
        blocks: String,
    },
    /// Block notation of a growth word.
    Blocks {
        /// A word whose letters first occur in alphabetical order.
        #[arg(long)]
        word: String,
    },
    /// All set partitions of {1..n} (n <= 12).
    List {
        #[arg(long)]
        n: usize,
    },
    /// Number of set partitions of {1..n} (n <= 12).
    Count {
        #[arg(long)]
        n: usize,
    },
    /// Numerical semigroup membership report, optionally checking a pattern.
    Semigroup {
        /// Comma-separated generators with gcd 1, e.g. "3,5".
        #[arg(long)]
        generators: String,
        /// Largest member listed and largest tuple entry for pattern checks;
        /// defaults to the conductor.
        #[arg(long)]
        bound: Option<u64>,
        /// Comma-separated nonzero coefficients of a linear pattern,
        /// e.g. "1,1,-1". Exit 1 reports a counterexample.
        #[arg(long)]
        pattern: Option<String>,
    },
}

fn run_partition(a: &PartitionArgs, format: Format) -> Result<u8, String> {
    match &a.verb {
        PartitionVerb::Word { blocks } => {
            let sp = SetPartition::parse(blocks).map_err(|e| e.to_string())?;
            let word = sp.to_word();
            match format {
                Format::Text => println!("{word}"),
                Format::Json => println!(
                    "{}",
                    json!({ "blocks": sp.to_string(), "word": word.to_string() })
                ),
            }
            Ok(0)
        }
        PartitionVerb::Blocks { word } => {
            let rgs = RgsWord::parse(word).map_err(|e| e.to_string())?;
            let sp = rgs.to_set_partition();
            match format {
                Format::Text => println!("{sp}"),
                Format::Json => println!(
                    "{}",
                    json!({ "blocks": sp.to_string(), "word": rgs.to_string() })
                ),
            }
            Ok(0)
        }
        PartitionVerb::List { n } => {
            let iter = enumerate_set_partitions(*n).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for sp in iter {
                        println!("{sp}");
                    }
                }
                Format::Json => {
                    let rows: Vec<Value> =
                        iter.map(|sp| Value::String(sp.to_string())).collect();
                    println!("{}", Value::Array(rows));
                }
            }
            Ok(0)
        }
        PartitionVerb::Count { n } => {
            let count = enumerate_set_partitions(*n).map_err(|e| e.to_string())?.count();
            match format {
                Format::Text => println!("{count}"),
                Format::Json => println!("{}", json!({ "count": count, "n": n })),
            }
            Ok(0)
        }
        PartitionVerb::Semigroup { generators, bound, pattern } => {
            run_semigroup(generators, *bound, pattern.as_deref(), format)
        }
    }
}

fn run_semigroup(
    generators: &str,
    bound: Option<u64>,
    pattern: Option<&str>,
    format: Format,
) -> Result<u8, String> {
    let sg = NumericalSemigroup::parse(generators).map_err(|e| e.to_string())?;
    let bound = bound.unwrap_or_else(|| sg.conductor());
    let members = sg.members_up_to(bound);
    let gaps = sg.gaps();
    let verdict = match pattern {
        Some(p) => {
            let p = LinearPattern::parse(p).map_err(|e| e.to_string())?;
            Some((p.clone(), sg.pattern_admitted(&p, bound).map_err(|e| e.to_string())?))
        }
        None => None,
    };
    let exit = match &verdict {
        Some((_, PatternVerdict::Counterexample { .. })) => 1,
        _ => 0,
    };
    match format {
        Format::Text => {
            println!("generators: {}", join(sg.generators()));
            println!("conductor: {}", sg.conductor());
            println!("gaps: {}", join(&gaps));
            println!("members up to {bound}: {}", join(&members));
            if let Some((p, v)) = &verdict {
                match v {
                    PatternVerdict::AdmittedUpToBound { bound } => {
                        println!("pattern {p}: admitted up to {bound}");
                    }
                    PatternVerdict::Counterexample { tuple, value } => {
                        println!(
                            "pattern {p}: counterexample ({}) -> {value}",
                            join(tuple)
                        );
                    }
                }
            }
        }
        Format::Json => {
            let mut out = json!({
                "generators": sg.generators(),
                "conductor": sg.conductor(),
                "gaps": gaps,
                "bound": bound,
                "members": members,
            });
            if let Some((p, v)) = &verdict {
                out["pattern"] = match v {
                    PatternVerdict::AdmittedUpToBound { bound } => json!({
                        "coefficients": p.coefficients(),
                        "verdict": "admitted",
                        "bound": bound,
                    }),
                    PatternVerdict::Counterexample { tuple, value } => json!({
                        "coefficients": p.coefficients(),
                        "verdict": "counterexample",
                        "tuple": tuple,
                        "value": value,
                    }),
                };
            }
            println!("{out}");
        }
    }
    Ok(exit)
}

fn join<T: std::fmt::Display>(xs: &[T]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

// ---------------------------------------------------------------------------
// automaton

#[derive(Args)]
struct AutomatonArgs {
    #[command(subcommand)]
    verb: AutomatonVerb,
}

#[derive(Subcommand)]
enum AutomatonVerb {
    /// Run a word through a machine; exit 0 = accepted, 1 = rejected.
    Run {
        /// Machine description (JSON file).
        #[arg(long)]
        machine: PathBuf,
        /// Input word; pass --word= for the empty word.
        #[arg(long)]
        word: String,
    },
    /// All accepted words of length at most a bound (<= 16).
    Enumerate {
        #[arg(long)]
        machine: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Words up to a length accepted by exactly one of the machine and an
    /// expression over +, juxtaposition, *, with 0 (empty language) and
    /// 1 (empty word). Informational: always exits 0.
    Diff {
        #[arg(long)]
        machine: PathBuf,
        /// E.g. "(ba)*a+(ba)*bba*b".
        #[arg(long)]
        expr: String,
        #[arg(long)]
        max_len: usize,
    },
}

fn run_automaton(a: &AutomatonArgs, format: Format) -> Result<u8, String> {
    match &a.verb {
        AutomatonVerb::Run { machine, word } => {
            let m = load_machine(machine)?;
            let accepted = m.accepts_str(word).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{}", if accepted { "accept" } else { "reject" }),
                Format::Json => {
                    println!("{}", json!({ "word": word, "accepted": accepted }))
                }
            }
            Ok(if accepted { 0 } else { 1 })
        }
        AutomatonVerb::Enumerate { machine, max_len } => {
            let m = load_machine(machine)?;
            let lang = m.enumerate_language(*max_len).map_err(|e| e.to_string())?;
            let words = lang.to_strings();
            match format {
                Format::Text => {
                    for w in &words {
                        println!("{}", show_word(w));
                    }
                }
                Format::Json => {
                    println!("{}", json!({ "max_len": max_len, "words": words }))
                }
            }
            Ok(0)
        }
        AutomatonVerb::Diff { machine, expr, max_len } => {
            let m = load_machine(machine)?;
            let e = parse_rational_expr(expr)?;
            let me = from_expr(m.alphabet(), &e).map_err(|e| e.to_string())?;
            let (only_m, only_e) =
                language_difference(&m, &me, *max_len).map_err(|e| e.to_string())?;
            let only_m: Vec<String> = only_m.iter().map(|w| w.to_string()).collect();
            let only_e: Vec<String> = only_e.iter().map(|w| w.to_string()).collect();
            match format {
                Format::Text => {
                    println!(
                        "machine only ({}): {}",
                        only_m.len(),
                        show_word_list(&only_m)
                    );
                    println!(
                        "expression only ({}): {}",
                        only_e.len(),
                        show_word_list(&only_e)
                    );
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "max_len": max_len,
                            "machine_only": only_m,
                            "expression_only": only_e,
                        })
                    );
                }
            }
            Ok(0)
        }
    }
}

fn load_machine(path: &PathBuf) -> Result<FiniteAutomaton, String> {
    FiniteAutomaton::from_json(&read_file(path)?).map_err(|e| e.to_string())
}

fn show_word(w: &str) -> &str {
    if w.is_empty() {
        "(empty)"
    } else {
        w
    }
}

fn show_word_list(words: &[String]) -> String {
    if words.is_empty() {
        return "-".to_string();
    }
    words.iter().map(|w| show_word(w)).collect::<Vec<_>>().join(" ")
}

/// Recursive-descent parser for rational expressions: union (`+`) binds
/// loosest, juxtaposition is product, postfix `*` binds tightest; `0` is the
/// empty language and `1` the empty word; any other non-operator character
/// is a letter. Whitespace is ignored.
fn parse_rational_expr(src: &str) -> Result<RationalExpr, String> {
    let chars: Vec<char> = src.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err("empty expression".to_string());
    }
    let mut pos = 0usize;
    let e = parse_union(&chars, &mut pos)?;
    if pos != chars.len() {
        return Err(format!("unexpected '{}' at position {}", chars[pos], pos + 1));
    }
    Ok(e)
}

fn parse_union(chars: &[char], pos: &mut usize) -> Result<RationalExpr, String> {
    let mut e = parse_product(chars, pos)?;
    while *pos < chars.len() && chars[*pos] == '+' {
        *pos += 1;
        e = RationalExpr::union(e, parse_product(chars, pos)?);
    }
    Ok(e)
}

fn parse_product(chars: &[char], pos: &mut usize) -> Result<RationalExpr, String> {
    let mut e = parse_starred(chars, pos)?;
    while *pos < chars.len() && !matches!(chars[*pos], '+' | ')' | '*') {
        e = RationalExpr::product(e, parse_starred(chars, pos)?);
    }
    Ok(e)
}

fn parse_starred(chars: &[char], pos: &mut usize) -> Result<RationalExpr, String> {
    let mut e = parse_atom(chars, pos)?;
    while *pos < chars.len() && chars[*pos] == '*' {
        *pos += 1;
        e = RationalExpr::star(e);
    }
    Ok(e)
}

fn parse_atom(chars: &[char], pos: &mut usize) -> Result<RationalExpr, String> {
    let Some(&c) = chars.get(*pos) else {
        return Err("unexpected end of expression".to_string());
    };
    *pos += 1;
    match c {
        '(' => {
            let e = parse_union(chars, pos)?;
            if chars.get(*pos) != Some(&')') {
                return Err(format!("missing ')' for '(' before position {}", *pos + 1));
            }
            *pos += 1;
            Ok(e)
        }
        '0' => Ok(RationalExpr::Empty),
        '1' => Ok(RationalExpr::epsilon()),
        '+' | '*' | ')' => Err(format!("unexpected '{c}' at position {}", *pos)),
        _ => Ok(RationalExpr::letter(c)),
    }
}

// ---------------------------------------------------------------------------
// grammar

#[derive(Args)]
struct GrammarArgs {
    #[command(subcommand)]
    verb: GrammarVerb,
}

#[derive(Subcommand)]
enum GrammarVerb {
    /// Exact number of words of one length.
    Count {
        /// Grammar file: one production per line, "S -> a S b | ;".
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Uniform random words of one length (deterministic in the seed).
    Sample {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        samples: u64,
        /// Generator seed; required so runs are reproducible.
        #[arg(long)]
        seed: u64,
    },
    /// Distribution of pattern occurrences over random words of one length.
    Xn {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        n: usize,
        /// Pattern over the grammar's terminal alphabet, e.g. "ab".
        #[arg(long)]
        pattern: String,
        /// Word model: independent uniform letters, or uniform over the
        /// grammar's words of the length.
        #[arg(long, value_enum)]
        source: SourceChoice,
        /// Estimate from this many samples instead of exact tallying.
        #[arg(long)]
        samples: Option<u64>,
        /// Generator seed; required with --samples.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SourceChoice {
    Uniform,
    Grammar,
}

fn run_grammar(a: &GrammarArgs, format: Format) -> Result<u8, String> {
    match &a.verb {
        GrammarVerb::Count { file, n } => {
            let g = load_grammar(file)?;
            let count = count_words(&g, *n).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{count}"),
                Format::Json => {
                    println!("{}", json!({ "n": n, "count": count.to_string() }))
                }
            }
            Ok(0)
        }
        GrammarVerb::Sample { file, n, samples, seed } => {
            let g = load_grammar(file)?;
            let table = CountTable::build(&g, *n).map_err(|e| e.to_string())?;
            let mut rng = seeded(*seed);
            let mut words = Vec::with_capacity(*samples as usize);
            for _ in 0..*samples {
                words.push(table.sample(*n, &mut rng).map_err(|e| e.to_string())?.to_string());
            }
            match format {
                Format::Text => {
                    for w in &words {
                        println!("{}", show_word(w));
                    }
                }
                Format::Json => {
                    println!("{}", json!({ "n": n, "seed": seed, "samples": words }))
                }
            }
            Ok(0)
        }
        GrammarVerb::Xn { file, n, pattern, source, samples, seed } => {
            let g = load_grammar(file)?;
            let pattern =
                Word::parse(g.terminals(), pattern).map_err(|e| e.to_string())?;
            let mode = match (samples, seed) {
                (None, None) => DistributionMode::Exact,
                (Some(s), Some(seed)) => {
                    DistributionMode::MonteCarlo { samples: *s, seed: *seed }
                }
                (Some(_), None) => {
                    return Err("--samples requires --seed for reproducibility".to_string())
                }
                (None, Some(_)) => {
                    return Err("--seed is only meaningful with --samples".to_string())
                }
            };
            let src = match source {
                SourceChoice::Uniform => WordSource::UniformWords(g.terminals()),
                SourceChoice::Grammar => WordSource::Grammar(&g),
            };
            let dist = xn_distribution(&src, *n, &pattern, mode).map_err(|e| e.to_string())?;
            let map = dist.to_string_map();
            match format {
                Format::Text => {
                    println!(
                        "{}",
                        serde_json::to_string(&map).expect("string map serializes")
                    );
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "n": n,
                            "pattern": pattern.to_string(),
                            "source": match source {
                                SourceChoice::Uniform => "uniform",
                                SourceChoice::Grammar => "grammar",
                            },
                            "samples": dist.samples(),
                            "distribution": map,
                        })
                    );
                }
            }
            Ok(0)
        }
    }
}

fn load_grammar(path: &PathBuf) -> Result<Grammar, String> {
    Grammar::parse(&read_file(path)?).map_err(|e| e.to_string())
}

// ---------------------------------------------------------------------------
// graph

#[derive(Args)]
struct GraphArgs {
    #[command(subcommand)]
    verb: GraphVerb,
}

#[derive(Subcommand)]
enum GraphVerb {
    /// Degrees, connectivity, betweenness, distances, and optional extras.
    Metrics {
        /// Edge list file: "n m" header then one "u v" line per edge;
        /// repeats are parallel edges, "u u" is a loop.
        #[arg(long)]
        edges: PathBuf,
        /// Include adjacency eigenvalues (12-digit decimal strings).
        #[arg(long)]
        spectrum: bool,
        /// Check the incidence-structure conditions for "v,b,r,k";
        /// exit 1 if they fail.
        #[arg(long, value_name = "V,B,R,K")]
        config: Option<String>,
    },
}

fn run_graph(a: &GraphArgs, format: Format, jobs: usize) -> Result<u8, String> {
    let GraphVerb::Metrics { edges, spectrum, config } = &a.verb;
    let g = Multigraph::parse_edge_list(&read_file(edges)?).map_err(|e| e.to_string())?;
    let degrees = g.degrees();
    let handshake = g.handshake_check();
    let connected = g.is_connected();
    let bipartite = g.is_bipartite();
    let betweenness: Vec<String> = g.betweenness_jobs(jobs).iter().map(rat_str).collect();
    let distances = if connected {
        let (mean, diameter) = g.distance_stats().map_err(|e| e.to_string())?;
        Some((rat_str(&mean), diameter))
    } else {
        None
    };
    let eigenvalues: Option<Vec<String>> = if *spectrum {
        let s = g.spectrum(1e-10).map_err(|e| e.to_string())?;
        Some(s.eigenvalues().iter().map(|&x| decimal_str(x, 12)).collect())
    } else {
        None
    };
    let config = match config {
        Some(quad) => {
            let nums: Vec<usize> = quad
                .split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| format!("--config: bad number '{p}'")))
                .collect::<Result<_, _>>()?;
            let [v, b, r, k] = nums[..] else {
                return Err("--config expects four numbers v,b,r,k".to_string());
            };
            Some((v, b, r, k, g.is_configuration(v, b, r, k)))
        }
        None => None,
    };
    let exit = match &config {
        Some((_, _, _, _, false)) => 1,
        _ => 0,
    };
    match format {
        Format::Text => {
            println!("vertices: {}", g.vertex_count());
            println!("edges: {}", g.edge_count());
            println!("degrees: {}", join(&degrees));
            println!("handshake: {}", if handshake { "ok" } else { "violated" });
            println!("connected: {}", yes_no(connected));
            println!("bipartite: {}", yes_no(bipartite));
            println!("betweenness: {}", betweenness.join(","));
            if let Some((mean, diameter)) = &distances {
                println!("mean distance: {mean}");
                println!("diameter: {diameter}");
            }
            if let Some(eigs) = &eigenvalues {
                println!("eigenvalues: {}", eigs.join(","));
            }
            if let Some((v, b, r, k, holds)) = &config {
                println!("configuration {v},{b},{r},{k}: {}", yes_no(*holds));
            }
        }
        Format::Json => {
            let mut out = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "degrees": degrees,
                "handshake": handshake,
                "connected": connected,
                "bipartite": bipartite,
                "betweenness": betweenness,
                "mean_distance": distances.as_ref().map(|(m, _)| m.clone()),
                "diameter": distances.as_ref().map(|(_, d)| *d),
            });
            if let Some(eigs) = &eigenvalues {
                out["eigenvalues"] = json!(eigs);
            }
            if let Some((v, b, r, k, holds)) = &config {
                out["configuration"] =
                    json!({ "v": v, "b": b, "r": r, "k": k, "holds": holds });
            }
            println!("{out}");
        }
    }
    Ok(exit)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---------------------------------------------------------------------------
// catalan

#[derive(Args)]
struct CatalanArgs {
    #[command(subcommand)]
    verb: CatalanVerb,
}

#[derive(Subcommand)]
enum CatalanVerb {
    /// Is the word pair-matched and nested? Exit 1 if not nested.
    Check {
        /// Letters whose first occurrences run a, b, c, ... in order.
        #[arg(long)]
        word: String,
    },
    /// Exact number of end-anchored circuits over {1..n} whose link values
    /// match the word.
    Count {
        #[arg(long)]
        word: String,
        #[arg(long)]
        n: u64,
    },
    /// Density of matching circuits: exact ratio at --n, seeded estimate
    /// with --mc, and the closed-form limit when known.
    Limit {
        #[arg(long)]
        word: String,
        /// Evaluate the exact count/n^(k+1) ratio at this range.
        #[arg(long)]
        n: Option<u64>,
        /// Estimate the limiting integral from this many samples.
        #[arg(long)]
        mc: Option<u64>,
        /// Generator seed; required with --mc.
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn run_catalan(a: &CatalanArgs, format: Format, jobs: usize) -> Result<u8, String> {
    match &a.verb {
        CatalanVerb::Check { word } => {
            let w = parse_match_word(word).map_err(|e| e.to_string())?;
            let paired = is_pair_matched(&w);
            let nested = is_catalan(&w);
            match format {
                Format::Text => {
                    println!("pair-matched: {}", yes_no(paired));
                    println!("catalan: {}", yes_no(nested));
                }
                Format::Json => println!(
                    "{}",
                    json!({ "word": word, "pair_matched": paired, "catalan": nested })
                ),
            }
            Ok(if nested { 0 } else { 1 })
        }
        CatalanVerb::Count { word, n } => {
            let w = parse_match_word(word).map_err(|e| e.to_string())?;
            let count = count_pi1_star_jobs(&w, *n, jobs).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{count}"),
                Format::Json => {
                    println!("{}", json!({ "word": word, "n": n, "count": count }))
                }
            }
            Ok(0)
        }
        CatalanVerb::Limit { word, n, mc, seed } => {
            let w = parse_match_word(word).map_err(|e| e.to_string())?;
            if n.is_none() && mc.is_none() {
                return Err("pass --n for an exact ratio and/or --mc for an estimate".to_string());
            }
            let ratio = match n {
                Some(n) => Some(rat_str(&pu_ratio(&w, *n).map_err(|e| e.to_string())?)),
                None => None,
            };
            let estimate = match (mc, seed) {
                (Some(samples), Some(seed)) => Some(decimal_str(
                    pu_integral(&w, *samples, *seed).map_err(|e| e.to_string())?,
                    9,
                )),
                (Some(_), None) => {
                    return Err("--mc requires --seed for reproducibility".to_string())
                }
                (None, Some(_)) => {
                    return Err("--seed is only meaningful with --mc".to_string())
                }
                (None, None) => None,
            };
            let limit = q_polynomial(&w).ok().map(|q| rat_str(&q.integrate01()));
            match format {
                Format::Text => {
                    if let (Some(n), Some(r)) = (n, &ratio) {
                        println!("ratio at n={n}: {r}");
                    }
                    if let (Some(samples), Some(e)) = (mc, &estimate) {
                        println!("estimate: {e} ({samples} samples)");
                    }
                    if let Some(l) = &limit {
                        println!("limit: {l}");
                    }
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "word": word,
                            "n": n,
                            "ratio": ratio,
                            "samples": mc,
                            "estimate": estimate,
                            "limit": limit,
                        })
                    );
                }
            }
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// dist

#[derive(Args)]
struct DistArgs {
    #[command(subcommand)]
    verb: DistVerb,
}

#[derive(Subcommand)]
enum DistVerb {
    /// Uniform re-identification probabilities for a value combination.
    /// Exit 1 when no row matches.
    Link {
        /// CSV file: first row = column names, first column = row index.
        #[arg(long)]
        table: PathBuf,
        /// Comma-separated column names to match on.
        #[arg(long)]
        cols: String,
        /// Comma-separated values, one per column.
        #[arg(long)]
        values: String,
    },
    /// The coefficient probability formula c/(3*2^(n+2)) with its factored
    /// denominator.
    HornProb {
        /// Outer shape.
        #[arg(long)]
        gamma: String,
        /// First inner shape.
        #[arg(long)]
        lambda: String,
        /// Second inner shape.
        #[arg(long)]
        mu: String,
        /// Box string length (>= 1).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
    },
}

fn run_dist(a: &DistArgs, format: Format) -> Result<u8, String> {
    match &a.verb {
        DistVerb::Link { table, cols, values } => {
            let t = DataTable::parse_csv(&read_file(table)?).map_err(|e| e.to_string())?;
            let cols: Vec<String> = cols.split(',').map(|s| s.trim().to_string()).collect();
            let values: Vec<String> =
                values.split(',').map(|s| s.trim().to_string()).collect();
            let result =
                uniform_reidentification(&t, &cols, &values).map_err(|e| e.to_string())?;
            match format {
                Format::Text => {
                    for (index, p) in result.probabilities() {
                        println!("{index}: {}", rat_str(p));
                    }
                    if result.is_empty_match() {
                        println!("linked: (none)");
                    } else {
                        println!("linked: {}", result.linked().join(" "));
                    }
                }
                Format::Json => {
                    let probabilities: Vec<Value> = result
                        .probabilities()
                        .iter()
                        .map(|(i, p)| json!([i, rat_str(p)]))
                        .collect();
                    println!(
                        "{}",
                        json!({
                            "probabilities": probabilities,
                            "linked": result.linked(),
                            "empty_match": result.is_empty_match(),
                        })
                    );
                }
            }
            Ok(if result.is_empty_match() { 1 } else { 0 })
        }
        DistVerb::HornProb { gamma, lambda, mu, n } => {
            let gamma = parse_partition("gamma", gamma)?;
            let lambda = parse_partition("lambda", lambda)?;
            let mu = parse_partition("mu", mu)?;
            let hp = horn_probability(&gamma, &lambda, &mu, *n);
            match format {
                Format::Text => {
                    println!("probability: {}", rat_str(&hp.probability));
                    println!("coefficient: {}", hp.coefficient);
                    println!("box strings: {}", hp.box_strings);
                    println!("symmetry order: {}", hp.symmetry_order);
                    println!("denominator: {}", hp.denominator);
                }
                Format::Json => {
                    println!(
                        "{}",
                        json!({
                            "probability": rat_str(&hp.probability),
                            "coefficient": hp.coefficient,
                            "box_strings": hp.box_strings.to_string(),
                            "symmetry_order": hp.symmetry_order,
                            "denominator": hp.denominator.to_string(),
                        })
                    );
                }
            }
            Ok(0)
        }
    }
}

// ---------------------------------------------------------------------------
// series

#[derive(Args)]
struct SeriesArgs {
    #[command(subcommand)]
    verb: SeriesVerb,
}

#[derive(Subcommand)]
enum SeriesVerb {
    /// Sequence construction 1/(1-A); needs zero constant term.
    Seq {
        /// Comma-separated rational coefficients c0,c1,..., e.g. "0,1,1".
        #[arg(long)]
        coeffs: String,
        /// Pad or truncate to this order first.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Product of two series (padded to a common order).
    Mul {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        order: Option<usize>,
    },
    /// k-th power of a series.
    Power {
        #[arg(long)]
        coeffs: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: Option<usize>,
    },
}

fn run_series(a: &SeriesArgs, format: Format) -> Result<u8, String> {
    let result = match &a.verb {
        SeriesVerb::Seq { coeffs, order } => {
            let s = parse_series(coeffs, *order)?;
            s.seq().map_err(|e| e.to_string())?
        }
        SeriesVerb::Mul { a, b, order } => {
            let sa = parse_series(a, *order)?;
            let sb = parse_series(b, *order)?;
            let target = sa.order().max(sb.order());
            let sa = pad_to(&sa, target);
            let sb = pad_to(&sb, target);
            sa.mul(&sb).map_err(|e| e.to_string())?
        }
        SeriesVerb::Power { coeffs, k, order } => parse_series(coeffs, *order)?.power(*k),
    };
    match format {
        Format::Text => println!("{result}"),
        Format::Json => println!("{}", json!({ "coefficients": result.to_strings() })),
    }
    Ok(0)
}

fn parse_series(s: &str, order: Option<usize>) -> Result<TruncatedSeries, String> {
    let parts: Vec<String> = s.split(',').map(|p| p.trim().to_string()).collect();
    let series = TruncatedSeries::parse_strings(&parts).map_err(|e| e.to_string())?;
    Ok(match order {
        Some(order) => pad_to(&series, order),
        None => series,
    })
}

/// Pads with zeros (or truncates) so the series has the given order.
fn pad_to(s: &TruncatedSeries, order: usize) -> TruncatedSeries {
    let mut coeffs: Vec<BigRational> = s.coeffs().to_vec();
    coeffs.resize(order + 1, BigRational::zero());
    TruncatedSeries::new(coeffs).expect("nonempty by construction")
}

// ---------------------------------------------------------------------------
// shared plumbing

fn read_file(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))
}

fn run(cli: &Cli) -> Result<u8, String> {
    let format = cli.format;
    let jobs = cli.jobs as usize;
    match &cli.command {
        Command::Horn(a) => run_horn(a, format, jobs),
        Command::Lr(a) => run_lr(a, format),
        Command::Partition(a) => run_partition(a, format),
        Command::Automaton(a) => run_automaton(a, format),
        Command::Grammar(a) => run_grammar(a, format),
        Command::Graph(a) => run_graph(a, format, jobs),
        Command::Catalan(a) => run_catalan(a, format, jobs),
        Command::Dist(a) => run_dist(a, format),
        Command::Series(a) => run_series(a, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

//! Command-line front end shared by the `deg`, `sym` and `llt` binaries.
//!
//! Exit codes: 0 when every check passes, 1 when a verification fails,
//! 2 for usage and input errors.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use dualeq::graph::{check_axioms, classify, standard_graph, to_dot, to_json, SignedColoredGraph};
use dualeq::llt::{
    d_graph, llt_polynomial, sweep_conjecture, twisted_class_expansion, twisted_classes, verify_two_tuple, inv,
};
use dualeq::symfunc::{extract_schur, lr_coefficients, qsym_from_json, qsym_to_json, schur_to_json};
use dualeq::tableaux::DEFAULT_SIZE_BOUND;
use dualeq::{fixtures, Error, Integer, Partition, SkewShape, TupleShape};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

#[derive(Clone, Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Worker threads for sweeps (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub jobs: Option<u64>,
    /// Largest shape size accepted; for `llt conjecture`, the sweep size (default 8).
    #[arg(long, global = true, value_parser = positive)]
    pub max_size: Option<usize>,
}

impl Common {
    pub fn bound(&self) -> usize {
        self.max_size.unwrap_or(DEFAULT_SIZE_BOUND)
    }
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

#[derive(Debug, Parser)]
#[command(name = "deg", about = "Signed colored graphs and dual equivalence axioms")]
pub struct DegCli {
    #[command(subcommand)]
    pub command: DegCommand,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum DegCommand {
    /// The standard dual equivalence graph of a partition.
    Standard { partition: String },
    /// Runs the six axiom checks.
    Check { file: String },
    /// Maps each component onto a standard graph.
    Classify {
        file: String,
        /// Fail when a component only covers its standard graph.
        #[arg(long)]
        require_iso: bool,
    },
    /// Generating function and its Schur expansion.
    Gf { file: String },
    /// Graphviz output.
    Dot { file: String },
}

#[derive(Debug, Parser)]
#[command(name = "sym", about = "Quasisymmetric expansions and Schur extraction")]
pub struct SymCli {
    #[command(subcommand)]
    pub command: SymCommand,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum SymCommand {
    /// Schur expansion of a QSym JSON file.
    Extract { file: String },
    /// Littlewood-Richardson expansion of s_mu * s_nu.
    Lr { mu: String, nu: String },
}

#[derive(Debug, Parser)]
#[command(name = "llt", about = "LLT polynomials and the D_i graphs")]
pub struct LltCli {
    #[command(subcommand)]
    pub command: LltCommand,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Subcommand)]
pub enum LltCommand {
    /// Fundamental expansion and Schur extraction of an LLT polynomial.
    Poly { shape: String },
    /// The D_i graph of a tuple shape.
    Graph {
        shape: String,
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        #[arg(long)]
        json: bool,
    },
    /// Strong dual equivalence check for a pair of shapes.
    Verify2 { first: String, second: String },
    /// Sweeps Schur positivity of D_i classes.
    Conjecture {
        #[arg(long, default_value_t = 4, value_parser = positive)]
        k: usize,
    },
    /// Twisted classes of S_n against their ribbon expansions.
    RibbonClasses { n: usize },
}

/// Which front end a parsed command line came from.
#[derive(Debug)]
pub enum Command {
    Deg(DegCommand),
    Sym(SymCommand),
    Llt(LltCommand),
}

/// Everything a run needs after parsing.
#[derive(Debug)]
pub struct RunConfig {
    pub command: Command,
    pub common: Common,
    pub fixture_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn verdict(pass: bool, stdout: String) -> Self {
        Outcome { code: if pass { 0 } else { 1 }, stdout, stderr: String::new() }
    }

    fn usage(msg: impl Into<String>) -> Self {
        let mut stderr = msg.into();
        if !stderr.ends_with('\n') {
            stderr.push('\n');
        }
        Outcome { code: 2, stdout: String::new(), stderr }
    }
}

/// Parses `argv`, whose first element names the tool (`deg`, `sym` or `llt`,
/// possibly as a path).
pub fn parse(argv: &[String]) -> Result<RunConfig, Outcome> {
    let tool = argv.first().map(|a| Path::new(a).file_stem().and_then(|s| s.to_str()).unwrap_or("")).unwrap_or("");
    let clap_fail = |e: clap::Error| {
        let text = e.render().to_string();
        match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
            _ => Outcome::usage(text),
        }
    };
    let (command, common) = match tool {
        "deg" => DegCli::try_parse_from(argv).map(|c| (Command::Deg(c.command), c.common)),
        "sym" => SymCli::try_parse_from(argv).map(|c| (Command::Sym(c.command), c.common)),
        "llt" => LltCli::try_parse_from(argv).map(|c| (Command::Llt(c.command), c.common)),
        other => return Err(Outcome::usage(format!("unknown tool {other:?}; expected deg, sym or llt"))),
    }
    .map_err(clap_fail)?;
    let fixture_dir = std::env::var_os("DEG_FIXTURES").map(PathBuf::from);
    Ok(RunConfig { command, common, fixture_dir })
}

/// Parses and runs one command line.
pub fn run(argv: &[String]) -> Outcome {
    match parse(argv) {
        Ok(cfg) => execute(&cfg),
        Err(out) => out,
    }
}

pub fn execute(cfg: &RunConfig) -> Outcome {
    let result = match &cfg.command {
        Command::Deg(c) => run_deg(c, cfg),
        Command::Sym(c) => run_sym(c, cfg),
        Command::Llt(c) => run_llt(c, cfg),
    };
    result.unwrap_or_else(|e| Outcome::usage(format!("error: {e}")))
}

/// Reads a graph file. Missing paths are looked up in `DEG_FIXTURES` and then
/// among the bundled fixtures by file stem.
pub fn load_graph(arg: &str, cfg: &RunConfig) -> Result<SignedColoredGraph, Error> {
    let path = Path::new(arg);
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or(arg).to_string();
    let mut candidates = vec![path.to_path_buf()];
    if let Some(dir) = &cfg.fixture_dir {
        candidates.push(dir.join(path.file_name().unwrap_or(path.as_os_str())));
    }
    for c in &candidates {
        if c.is_file() {
            let text = std::fs::read_to_string(c).map_err(|e| Error::Fixture(format!("{}: {e}", c.display())))?;
            return fixtures::load_text(&stem, &text);
        }
    }
    if cfg.fixture_dir.is_none() {
        if let Ok(text) = fixtures::fixture_text(&stem) {
            return fixtures::load_text(&stem, text);
        }
    }
    Err(Error::Fixture(format!("cannot read {arg}")))
}

fn check_size(size: usize, cfg: &RunConfig) -> Result<(), Error> {
    if size > cfg.common.bound() {
        return Err(Error::SizeBound { size, bound: cfg.common.bound() });
    }
    Ok(())
}

fn graph_text(g: &SignedColoredGraph) -> String {
    let mut s = String::new();
    writeln!(s, "n = {}, N = {}, vertices: {}, edges: {}", g.n(), g.big_n(), g.len(), g.edge_count()).unwrap();
    for v in 0..g.len() {
        write!(s, "{} {}", g.id(v), g.sigma(v)).unwrap();
        if let Some(st) = g.stats() {
            write!(s, " stat={}", st[v]).unwrap();
        }
        if let Some(l) = g.label(v) {
            write!(s, " [{l}]").unwrap();
        }
        s.push('\n');
    }
    for c in g.colors() {
        let pairs: Vec<String> = g.edges(c).into_iter().map(|(a, b)| format!("{}-{}", g.id(a), g.id(b))).collect();
        writeln!(s, "color {c}: {}", pairs.join(" ")).unwrap();
    }
    s
}

fn emit_graph(g: &SignedColoredGraph, format: Format) -> String {
    match format {
        Format::Text => graph_text(g),
        Format::Json => to_json(g),
        Format::Dot => to_dot(g),
    }
}

fn run_deg(c: &DegCommand, cfg: &RunConfig) -> Result<Outcome, Error> {
    let format = cfg.common.format;
    match c {
        DegCommand::Standard { partition } => {
            let p: Partition = partition.parse()?;
            check_size(p.size(), cfg)?;
            Ok(Outcome::ok(emit_graph(&standard_graph(&p), format)))
        }
        DegCommand::Check { file } => {
            let g = load_graph(file, cfg)?;
            let r = check_axioms(&g);
            let out = match format {
                Format::Json => {
                    let items: Vec<_> = r
                        .results
                        .iter()
                        .map(|a| json!({"axiom": a.axiom, "pass": a.passed, "color": a.color, "witness": a.witness}))
                        .collect();
                    json!({"pass": r.passed(), "axioms": items}).to_string() + "\n"
                }
                _ => r.to_string() + "\n",
            };
            Ok(Outcome::verdict(r.passed(), out))
        }
        DegCommand::Classify { file, require_iso } => {
            let g = load_graph(file, cfg)?;
            let cs = match classify(&g, false) {
                Ok(cs) => cs,
                Err(e) => return Ok(Outcome::verdict(false, format!("classification failed: {e}\n"))),
            };
            let strict_fail = *require_iso && cs.iter().any(|c| c.multiplicity > 1);
            let out = match format {
                Format::Json => {
                    let items: Vec<_> = cs
                        .iter()
                        .map(|c| {
                            json!({
                                "vertices": c.component.iter().map(|&v| g.id(v)).collect::<Vec<_>>(),
                                "lambda": c.lambda.to_string(),
                                "multiplicity": c.multiplicity,
                            })
                        })
                        .collect();
                    json!({"pass": !strict_fail, "components": items}).to_string() + "\n"
                }
                _ => {
                    let mut s = String::new();
                    for c in &cs {
                        let kind = if c.multiplicity == 1 {
                            "isomorphic to".to_string()
                        } else {
                            format!("{}-fold cover of", c.multiplicity)
                        };
                        writeln!(
                            s,
                            "component of {} ({} vertices): {kind} G[{}]",
                            g.id(c.component[0]),
                            c.component.len(),
                            c.lambda
                        )
                        .unwrap();
                    }
                    s
                }
            };
            Ok(Outcome::verdict(!strict_fail, out))
        }
        DegCommand::Gf { file } => {
            let g = load_graph(file, cfg)?;
            let f = g.generating_function::<Integer>();
            let e = extract_schur(&f);
            let out = match format {
                Format::Json => format!("{{\"qsym\": {}, \"schur\": {}}}\n", qsym_to_json(&f), schur_to_json(&e)),
                _ => format!("{f}\n{e}\n"),
            };
            Ok(Outcome::ok(out))
        }
        DegCommand::Dot { file } => Ok(Outcome::ok(to_dot(&load_graph(file, cfg)?))),
    }
}

fn run_sym(c: &SymCommand, cfg: &RunConfig) -> Result<Outcome, Error> {
    match c {
        SymCommand::Extract { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| Error::Fixture(format!("{file}: {e}")))?;
            let f = qsym_from_json::<Integer>(&text)?;
            check_size(f.degree(), cfg)?;
            let e = extract_schur(&f);
            let out = match cfg.common.format {
                Format::Json => schur_to_json(&e) + "\n",
                _ if e.residual().is_zero() => format!("{e}\n"),
                _ => format!("{e}\nnot in Schur span\n"),
            };
            Ok(Outcome::verdict(e.residual().is_zero(), out))
        }
        SymCommand::Lr { mu, nu } => {
            let (mu, nu): (Partition, Partition) = (mu.parse()?, nu.parse()?);
            check_size(mu.size() + nu.size(), cfg)?;
            let e = lr_coefficients::<Integer>(&mu, &nu)?;
            let out = match cfg.common.format {
                Format::Json => schur_to_json(&e) + "\n",
                _ => format!("{e}\n"),
            };
            Ok(Outcome::ok(out))
        }
    }
}

/// A single shape as `"(2,1)"`, `"2,1"`, `"()"` or `"(3,2)/(1)"`.
fn parse_component(s: &str) -> Result<SkewShape, Error> {
    let t: TupleShape = format!("({})", s.trim()).parse()?;
    match t.components() {
        [one] => Ok(one.clone()),
        _ => Err(Error::Parse(format!("expected one shape, got {s:?}"))),
    }
}

fn with_pool<T: Send>(cfg: &RunConfig, f: impl FnOnce() -> T + Send) -> Result<T, Error> {
    match cfg.common.jobs {
        None => Ok(f()),
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j as usize)
            .build()
            .map(|pool| pool.install(f))
            .map_err(|e| Error::Precondition(e.to_string())),
    }
}

fn run_llt(c: &LltCommand, cfg: &RunConfig) -> Result<Outcome, Error> {
    let bound = cfg.common.bound();
    match c {
        LltCommand::Poly { shape } => {
            let mu: TupleShape = shape.parse()?;
            check_size(mu.size(), cfg)?;
            let f = llt_polynomial::<Integer>(&mu, bound)?;
            let e = extract_schur(&f);
            let out = match cfg.common.format {
                Format::Json => format!("{{\"qsym\": {}, \"schur\": {}}}\n", qsym_to_json(&f), schur_to_json(&e)),
                _ => format!("{f}\n{e}\n"),
            };
            Ok(Outcome::ok(out))
        }
        LltCommand::Graph { shape, dot, json } => {
            let mu: TupleShape = shape.parse()?;
            check_size(mu.size(), cfg)?;
            let g = d_graph(&mu, bound)?;
            let format = if *dot {
                Format::Dot
            } else if *json {
                Format::Json
            } else {
                cfg.common.format
            };
            Ok(Outcome::ok(emit_graph(&g, format)))
        }
        LltCommand::Verify2 { first, second } => {
            let mu = TupleShape::new(vec![parse_component(first)?, parse_component(second)?])?;
            check_size(mu.size(), cfg)?;
            let r = verify_two_tuple(&mu, bound)?;
            let mut out = String::new();
            match cfg.common.format {
                Format::Json => {
                    let v = json!({
                        "shape": mu.to_string(),
                        "pass": r.passed(),
                        "dual_equivalence": r.dual_equivalence.failure.as_ref().map(|f| f.to_string()),
                        "axioms": r.axioms.to_string(),
                        "expansion": r.expansion.to_string(),
                    });
                    writeln!(out, "{v}").unwrap();
                }
                _ => {
                    if r.passed() {
                        writeln!(out, "{}", r.expansion).unwrap();
                    } else {
                        if let Some(f) = &r.dual_equivalence.failure {
                            writeln!(out, "not a strong dual equivalence: {f}").unwrap();
                        }
                        writeln!(out, "{}", r.axioms).unwrap();
                        writeln!(out, "{}", r.expansion).unwrap();
                    }
                }
            }
            Ok(Outcome::verdict(r.passed(), out))
        }
        LltCommand::Conjecture { k } => {
            let reports = with_pool(cfg, || sweep_conjecture(cfg.common.max_size.unwrap_or(8), *k))??;
            let mut out = String::new();
            for r in &reports {
                match cfg.common.format {
                    Format::Json => writeln!(out, "{}", r.to_json_line()).unwrap(),
                    _ => writeln!(out, "{r}").unwrap(),
                }
            }
            let pass = reports.iter().all(|r| r.passed());
            Ok(Outcome::verdict(pass, out))
        }
        LltCommand::RibbonClasses { n } => {
            check_size(*n, cfg)?;
            let mut out = String::new();
            let mut pass = true;
            for cls in twisted_classes(*n) {
                let ribbon = twisted_class_expansion::<Integer>(&cls)?;
                let mut sum = dualeq::symfunc::QSymExpansion::zero(*n);
                for w in &cls {
                    sum.add_monomial(dualeq::Signature::of_word(w), 0, Integer::from(1));
                }
                let direct = extract_schur(&sum);
                let ok = direct == ribbon;
                pass &= ok;
                let words: Vec<String> =
                    cls.iter().map(|w| w.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")).collect();
                let flag = *n >= 2 && cls[0][0] > cls[0][*n - 1];
                match cfg.common.format {
                    Format::Json => writeln!(
                        out,
                        "{}",
                        json!({
                            "class": words,
                            "inv": inv(&cls[0]),
                            "first_last_inversion": flag,
                            "expansion": ribbon.to_string(),
                            "pass": ok,
                        })
                    )
                    .unwrap(),
                    _ => writeln!(
                        out,
                        "{{{}}} inv={} first>last={flag}: {}{}",
                        words.join(", "),
                        inv(&cls[0]),
                        ribbon,
                        if ok { "" } else { " MISMATCH" }
                    )
                    .unwrap(),
                }
            }
            Ok(Outcome::verdict(pass, out))
        }
    }
}

//! `rookery` — command-line front end for the exact combinatorics engine.
//!
//! Every subcommand computes exactly (big integers and rationals, no
//! floating point), writes a single machine-readable payload to stdout,
//! and keeps diagnostics — status line and elapsed time — on stderr, so
//! identical invocations produce byte-identical stdout.  Exit codes:
//!
//! * `0` — success;
//! * `1` — a mathematical cross-check failed;
//! * `2` — malformed or out-of-range input;
//! * `3` — a configured resource cap was exceeded.
//!
//! Tabular results (rook vectors, polynomial coefficients, sequences,
//! matching counts) additionally support `--format csv` and
//! `--format latex`; the default everywhere is JSON.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use rookery::arrangements::{
    bounded_region_sequence, charpoly, region_counts, sequence_count_with,
    ArrangementReportJson, BoundType, CharpolyMethod, TruncatedAffineSpec,
};
use rookery::bijection::{
    exc_sub, gessel_polynomial_with, phi, phi_inverse, psi, psi_inverse, ColoredPlacementJson,
    FlatPlacementJson,
};
use rookery::boards::{
    catalan_board, factorial_polynomial, gjw_factorial_polynomial, linial_board, rook_numbers_with,
    shi_board, skew_ferrers, Board,
};
use rookery::error::{invalid, Error, Result};
use rookery::graphs::{
    chromatic_polynomial, complement, linial_graph, linial_matchings_by_size_with, GraphJson,
};
use rookery::multipoly::{uv_variable_names, MultiPoly, MultiPolyJson};
use rookery::poly::PolyJson;
use rookery::series::{
    verify_drake_inverse_with, verify_f_equation, verify_gessel_k2_equation_with,
    verify_ltree_egf_with, IdentityReport,
};
use rookery::trees::{count_class_with, TreeClass, TreeJson};
use rookery::verify::{run_all, SuiteReport};
use rookery::{IntPoly, Limits};

#[derive(Parser)]
#[command(
    name = "rookery",
    version,
    about = "Exact rook polynomials, tree bijections, arrangement regions, and series identities",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Rook numbers and factorial rook polynomials of boards.
    Boards {
        #[command(subcommand)]
        action: BoardsAction,
    },
    /// Counting labeled plane k-ary trees by class.
    Trees {
        #[command(subcommand)]
        action: TreesAction,
    },
    /// The placements-to-trees bijection, applied to JSON files.
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
    /// Gessel polynomials over colored rook placements.
    Gessel(GesselArgs),
    /// Truncated affine hyperplane arrangements.
    Arrangements {
        #[command(subcommand)]
        action: ArrangementsAction,
    },
    /// Bipartite graphs of Linial boards: chromatic polynomials, matchings.
    Graphs {
        #[command(subcommand)]
        action: GraphsAction,
    },
    /// Generating-function identity checks.
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// Aggregated cross-verification suites.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Linial,
    Catalan,
    Shi,
}

/// Board selection shared by the `boards` subcommands: either a named
/// family instance `--family --n --t`, or an inline skew shape
/// `--lambda 6,5,4 [--mu 3,2,1]`.
#[derive(Args)]
struct BoardArgs {
    /// Named board family.
    #[arg(long, value_enum, requires = "n", requires = "t", conflicts_with = "lambda")]
    family: Option<Family>,
    /// Number of parts for a family board.
    #[arg(long)]
    n: Option<usize>,
    /// Shift parameter for a family board.
    #[arg(long)]
    t: Option<u32>,
    /// Outer partition of an inline skew board, comma-separated.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    /// Inner partition of an inline skew board, comma-separated.
    #[arg(long, value_delimiter = ',', requires = "lambda")]
    mu: Option<Vec<u32>>,
}

impl BoardArgs {
    fn resolve(&self) -> Result<Board> {
        match (&self.family, &self.lambda) {
            (Some(family), None) => {
                let n = self.n.ok_or_else(|| invalid("--family requires --n"))?;
                let t = self.t.ok_or_else(|| invalid("--family requires --t"))?;
                match family {
                    Family::Linial => linial_board(t, n),
                    Family::Catalan => catalan_board(t, n),
                    Family::Shi => shi_board(t, n),
                }
            }
            (None, Some(lambda)) => skew_ferrers(lambda, self.mu.as_deref().unwrap_or(&[])),
            _ => Err(invalid("choose a board via --family --n --t or via --lambda [--mu]")),
        }
    }
}

/// Resource caps shared by enumeration-heavy subcommands.
#[derive(Args)]
struct LimitArgs {
    /// Cap on dynamic-programming states.
    #[arg(long)]
    max_states: Option<u64>,
    /// Cap on objects visited by enumerations.
    #[arg(long)]
    max_enum: Option<u64>,
}

impl LimitArgs {
    fn resolve(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(s) = self.max_states {
            limits.max_states = s;
        }
        if let Some(e) = self.max_enum {
            limits.max_enum = e;
        }
        limits
    }
}

#[derive(Subcommand)]
enum BoardsAction {
    /// The rook numbers r_0, ..., r_m of a board.
    RookVector {
        #[command(flatten)]
        board: BoardArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The factorial rook polynomial, computed by the rook-number route.
    FactorialPoly {
        #[command(flatten)]
        board: BoardArgs,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The same polynomial by the partition-lattice expansion.
    GjwPoly {
        #[command(flatten)]
        board: BoardArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Ltree,
    LtreeB,
    Increasing,
    RightIncreasing,
    All,
}

impl From<ClassArg> for TreeClass {
    fn from(c: ClassArg) -> TreeClass {
        match c {
            ClassArg::Ltree => TreeClass::Ltree,
            ClassArg::LtreeB => TreeClass::LtreeB,
            ClassArg::Increasing => TreeClass::Increasing,
            ClassArg::RightIncreasing => TreeClass::RightIncreasing,
            ClassArg::All => TreeClass::All,
        }
    }
}

#[derive(Subcommand)]
enum TreesAction {
    /// Count the trees of a class on n nodes with k slots.
    Count {
        #[arg(long, value_enum)]
        class: ClassArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum BijectionAction {
    /// Flat placement JSON -> colored placement, tree, and statistics.
    Forward {
        /// File holding {"n":..,"k":..,"f":[..]}.
        #[arg(long)]
        input: std::path::PathBuf,
    },
    /// Tree JSON -> colored placement and flat placement.
    Inverse {
        /// File holding {"n":..,"k":..,"root":..,"nodes":[..]}.
        #[arg(long)]
        input: std::path::PathBuf,
    },
}

#[derive(Args)]
struct GesselArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Evaluate at rational values instead of printing the polynomial,
    /// e.g. u1=1,u2=0,v1=1/2,v2=3 (all 2k variables required).
    #[arg(long)]
    eval: Option<String>,
    #[command(flatten)]
    limits: LimitArgs,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

/// Arrangement selection: a named family with `--a`, or explicit
/// `--a --b`.
#[derive(Args)]
struct ArrangementArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    a: u32,
    /// Right offset bound; omit it when --family fixes it.
    #[arg(long, conflicts_with = "family")]
    b: Option<u32>,
    #[arg(long, value_enum)]
    family: Option<Family>,
}

impl ArrangementArgs {
    fn resolve(&self) -> Result<TruncatedAffineSpec> {
        match (self.family, self.b) {
            (Some(Family::Linial), None) => TruncatedAffineSpec::linial(self.n, self.a),
            (Some(Family::Catalan), None) => TruncatedAffineSpec::catalan(self.n, self.a),
            (Some(Family::Shi), None) => TruncatedAffineSpec::shi(self.n, self.a),
            (None, Some(b)) => TruncatedAffineSpec::new(self.n, self.a, b),
            _ => Err(invalid("choose an arrangement via --family --a or via --a --b")),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    FiniteField,
}

impl From<MethodArg> for CharpolyMethod {
    fn from(m: MethodArg) -> CharpolyMethod {
        match m {
            MethodArg::Formula => CharpolyMethod::Formula,
            MethodArg::FiniteField => CharpolyMethod::FiniteField,
        }
    }
}

#[derive(Subcommand)]
enum ArrangementsAction {
    /// Characteristic polynomial plus Zaslavsky region counts.
    Charpoly {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Region and bounded-region counts.
    Regions {
        #[command(flatten)]
        arrangement: ArrangementArgs,
        #[arg(long, value_enum, default_value = "formula")]
        method: MethodArg,
    },
    /// Bounded-region counts of the extended Linial family for 1..=n.
    BoundedSeq {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Region counts recomputed through the sequence model.
    Sequences {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: u32,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum GraphsAction {
    /// Chromatic polynomial of the complement of the Linial graph G_{t,n}.
    Chromatic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Matchings of G_{t,n} by size, plus the maximum-matching count.
    Matchings {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        t: u32,
        #[command(flatten)]
        limits: LimitArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum IdentityArg {
    LtreeEgf,
    FEquation,
    Drake,
    GesselK2,
}

#[derive(Subcommand)]
enum SeriesAction {
    /// Check one generating-function identity to a given order.
    Verify {
        #[arg(long, value_enum)]
        identity: IdentityArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        order: usize,
        /// Rational parameters for drake / gessel-k2, e.g.
        /// u1=1/2,u2=1/3,v1=2,v2=3; defaults to a generic tuple.
        #[arg(long)]
        params: Option<String>,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

#[derive(Subcommand)]
enum VerifyAction {
    /// Run every invariant suite with ranges clamped to --max-n.
    All {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        limits: LimitArgs,
    },
}

// ---------------------------------------------------------------------
// Payload shapes.  Field order is fixed by declaration order, which is
// what keeps repeated invocations byte-identical.
// ---------------------------------------------------------------------

#[derive(Serialize)]
struct RookVectorPayload {
    r: Vec<String>,
}

#[derive(Serialize)]
struct TreeCountPayload {
    class: String,
    n: usize,
    k: usize,
    count: String,
}

#[derive(Serialize)]
struct ForwardPayload {
    g: ColoredPlacementJson,
    tree: TreeJson,
    exc: Vec<usize>,
    sub: Vec<usize>,
}

#[derive(Serialize)]
struct InversePayload {
    g: ColoredPlacementJson,
    f: FlatPlacementJson,
}

#[derive(Serialize)]
struct GesselValuePayload {
    n: usize,
    k: usize,
    value: String,
}

#[derive(Serialize)]
struct RegionsPayload {
    regions: String,
    bounded: String,
}

#[derive(Serialize)]
struct BoundedSeqPayload {
    a: u32,
    bounded: Vec<String>,
}

#[derive(Serialize)]
struct ChromaticPayload {
    graph: GraphJson,
    chromatic: PolyJson,
}

#[derive(Serialize)]
struct MatchingsPayload {
    graph: GraphJson,
    m: Vec<String>,
    maximum_size: usize,
    maximum_count: String,
}

#[derive(Serialize)]
struct VerifyPayload {
    max_n: usize,
    passed: bool,
    suites: Vec<SuiteReport>,
}

// ---------------------------------------------------------------------
// Rendering helpers for the non-JSON formats.
// ---------------------------------------------------------------------

fn json<T: Serialize>(payload: &T) -> String {
    serde_json::to_string(payload).expect("payload serialization cannot fail")
}

/// Two-column CSV with a header row.
fn csv_table(header: (&str, &str), rows: impl Iterator<Item = (String, String)>) -> String {
    let mut out = format!("{},{}\n", header.0, header.1);
    for (a, b) in rows {
        let _ = writeln!(out, "{a},{b}");
    }
    out.pop();
    out
}

/// Two-column LaTeX tabular with a header row.
fn latex_table(header: (&str, &str), rows: impl Iterator<Item = (String, String)>) -> String {
    let mut out = String::from("\\begin{tabular}{rr}\n");
    let _ = writeln!(out, "{} & {} \\\\", header.0, header.1);
    for (a, b) in rows {
        let _ = writeln!(out, "{a} & {b} \\\\");
    }
    out.push_str("\\end{tabular}");
    out
}

/// `x^{3} + 6x^{2} + 15x + 14`, highest degree first.
fn poly_latex(p: &IntPoly, var: &str) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (j, c) in p.coeffs().iter().enumerate().rev() {
        if num_traits::Zero::is_zero(c) {
            continue;
        }
        let magnitude = c.magnitude().to_string();
        if out.is_empty() {
            if c.sign() == num_bigint::Sign::Minus {
                out.push('-');
            }
        } else if c.sign() == num_bigint::Sign::Minus {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let coeff_is_one = c.magnitude() == &BigInt::one().magnitude().clone();
        if j == 0 || !coeff_is_one {
            out.push_str(&magnitude);
        }
        match j {
            0 => {}
            1 => out.push_str(var),
            _ => {
                let _ = write!(out, "{var}^{{{j}}}");
            }
        }
    }
    out
}

fn poly_payload(p: &IntPoly, var: &str, format: Format) -> String {
    match format {
        Format::Json => json(&PolyJson::from_poly(p, var)),
        Format::Csv => csv_table(
            ("degree", "coefficient"),
            p.coeffs().iter().enumerate().map(|(j, c)| (j.to_string(), c.to_string())),
        ),
        Format::Latex => poly_latex(p, var),
    }
}

fn multipoly_latex(p: &MultiPoly, names: &[String]) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (exps, coeff) in p.terms() {
        if out.is_empty() {
            if coeff.sign() == num_bigint::Sign::Minus {
                out.push('-');
            }
        } else if coeff.sign() == num_bigint::Sign::Minus {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let magnitude = coeff.magnitude().to_string();
        let constant_term = exps.iter().all(|&e| e == 0);
        if magnitude != "1" || constant_term {
            out.push_str(&magnitude);
        }
        for (name, &e) in names.iter().zip(exps) {
            match e {
                0 => {}
                1 => {
                    let _ = write!(out, "{}_{{{}}}", &name[..1], &name[1..]);
                }
                _ => {
                    let _ = write!(out, "{}_{{{}}}^{{{e}}}", &name[..1], &name[1..]);
                }
            }
        }
    }
    out
}

fn multipoly_csv(p: &MultiPoly, names: &[String]) -> String {
    let mut out = names.join(",");
    out.push_str(",coefficient\n");
    for (exps, coeff) in p.terms() {
        let row: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{},{}", row.join(","), coeff);
    }
    out.pop();
    out
}

// ---------------------------------------------------------------------
// Input parsing helpers.
// ---------------------------------------------------------------------

fn parse_rational(text: &str) -> Result<BigRational> {
    let parse_int = |s: &str| -> Result<BigInt> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|_| invalid(format!("cannot parse '{s}' as an integer")))
    };
    match text.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(invalid("zero denominator"));
            }
            Ok(BigRational::new(parse_int(num)?, den))
        }
        None => Ok(BigRational::from_integer(parse_int(text)?)),
    }
}

/// Parses `u1=..,u2=..,v1=..,v2=..` into the `u` and `v` vectors; every one
/// of the 2k variables must be assigned exactly once.
fn parse_uv_assignments(text: &str, k: usize) -> Result<(Vec<BigRational>, Vec<BigRational>)> {
    let mut u: Vec<Option<BigRational>> = vec![None; k];
    let mut v: Vec<Option<BigRational>> = vec![None; k];
    for piece in text.split(',') {
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| invalid(format!("expected name=value, got '{piece}'")))?;
        let name = name.trim();
        let (slots, index_text) = match name.split_at(1) {
            ("u", rest) => (&mut u, rest),
            ("v", rest) => (&mut v, rest),
            _ => return Err(invalid(format!("unknown variable '{name}'"))),
        };
        let index: usize = index_text
            .parse()
            .map_err(|_| invalid(format!("unknown variable '{name}'")))?;
        if index == 0 || index > k {
            return Err(invalid(format!("variable '{name}' out of range for k = {k}")));
        }
        if slots[index - 1].replace(parse_rational(value)?).is_some() {
            return Err(invalid(format!("variable '{name}' assigned twice")));
        }
    }
    let unwrap_all = |slots: Vec<Option<BigRational>>, letter: char| -> Result<Vec<BigRational>> {
        slots
            .into_iter()
            .enumerate()
            .map(|(i, s)| s.ok_or_else(|| invalid(format!("missing value for {letter}{}", i + 1))))
            .collect()
    };
    Ok((unwrap_all(u, 'u')?, unwrap_all(v, 'v')?))
}

fn read_json_file<T: serde::de::DeserializeOwned>(path: &std::path::Path) -> Result<T> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| invalid(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| invalid(format!("cannot parse {}: {e}", path.display())))
}

// ---------------------------------------------------------------------
// Command execution.
// ---------------------------------------------------------------------

/// A rendered payload plus the exit code it implies (0 or 1; input and
/// resource errors surface as `Err` instead).
struct Outcome {
    payload: String,
    exit: i32,
}

impl Outcome {
    fn ok(payload: String) -> Self {
        Outcome { payload, exit: 0 }
    }
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Boards { action } => execute_boards(action),
        Command::Trees { action } => execute_trees(action),
        Command::Bijection { action } => execute_bijection(action),
        Command::Gessel(args) => execute_gessel(args),
        Command::Arrangements { action } => execute_arrangements(action),
        Command::Graphs { action } => execute_graphs(action),
        Command::Series { action } => execute_series(action),
        Command::Verify { action } => execute_verify(action),
    }
}

fn execute_boards(action: BoardsAction) -> Result<Outcome> {
    match action {
        BoardsAction::RookVector { board, limits, format } => {
            let board = board.resolve()?;
            let vector = rook_numbers_with(&board, &limits.resolve())?;
            let payload = match format {
                Format::Json => json(&RookVectorPayload {
                    r: vector.counts().iter().map(|c| c.to_string()).collect(),
                }),
                Format::Csv => csv_table(
                    ("k", "r"),
                    vector
                        .counts()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| (k.to_string(), c.to_string())),
                ),
                Format::Latex => latex_table(
                    ("$k$", "$r_k$"),
                    vector
                        .counts()
                        .iter()
                        .enumerate()
                        .map(|(k, c)| (k.to_string(), c.to_string())),
                ),
            };
            Ok(Outcome::ok(payload))
        }
        BoardsAction::FactorialPoly { board, limits, format } => {
            let board = board.resolve()?;
            let _ = limits.resolve();
            let p = factorial_polynomial(&board)?;
            Ok(Outcome::ok(poly_payload(&p, "x", format)))
        }
        BoardsAction::GjwPoly { board, format } => {
            let board = board.resolve()?;
            let p = gjw_factorial_polynomial(&board)?;
            Ok(Outcome::ok(poly_payload(&p, "x", format)))
        }
    }
}

fn execute_trees(action: TreesAction) -> Result<Outcome> {
    match action {
        TreesAction::Count { class, n, k, limits } => {
            let tree_class: TreeClass = class.into();
            let count = count_class_with(n, k, tree_class, &limits.resolve())?;
            let class_name = match class {
                ClassArg::Ltree => "ltree",
                ClassArg::LtreeB => "ltree-b",
                ClassArg::Increasing => "increasing",
                ClassArg::RightIncreasing => "right-increasing",
                ClassArg::All => "all",
            };
            Ok(Outcome::ok(json(&TreeCountPayload {
                class: class_name.to_string(),
                n,
                k,
                count: count.to_string(),
            })))
        }
    }
}

fn execute_bijection(action: BijectionAction) -> Result<Outcome> {
    match action {
        BijectionAction::Forward { input } => {
            let flat: FlatPlacementJson = read_json_file(&input)?;
            let f = flat.to_placement()?;
            let g = phi(&f);
            let tree = psi(&g);
            let (exc, sub) = exc_sub(&g);
            let k = g.k();
            Ok(Outcome::ok(json(&ForwardPayload {
                g: ColoredPlacementJson::from_placement(&g),
                tree: TreeJson::from_tree(&tree),
                exc: (1..=k).map(|j| exc.part(j)).collect(),
                sub: (1..=k).map(|j| sub.part(j)).collect(),
            })))
        }
        BijectionAction::Inverse { input } => {
            let tree_json: TreeJson = read_json_file(&input)?;
            let tree = tree_json.to_tree()?;
            let g = psi_inverse(&tree);
            let f = phi_inverse(&g);
            Ok(Outcome::ok(json(&InversePayload {
                g: ColoredPlacementJson::from_placement(&g),
                f: FlatPlacementJson::from_placement(&f),
            })))
        }
    }
}

fn execute_gessel(args: GesselArgs) -> Result<Outcome> {
    let limits = args.limits.resolve();
    let poly = gessel_polynomial_with(args.n, args.k, &limits)?;
    if let Some(eval) = &args.eval {
        let (u, v) = parse_uv_assignments(eval, args.k)?;
        let point: Vec<BigRational> = u.into_iter().chain(v).collect();
        let value = poly.eval(&point)?;
        return Ok(Outcome::ok(json(&GesselValuePayload {
            n: args.n,
            k: args.k,
            value: value.to_string(),
        })));
    }
    let names = uv_variable_names(args.k);
    let payload = match args.format {
        Format::Json => json(&MultiPolyJson::from_poly(&poly, names)),
        Format::Csv => multipoly_csv(&poly, &names),
        Format::Latex => multipoly_latex(&poly, &names),
    };
    Ok(Outcome::ok(payload))
}

fn execute_arrangements(action: ArrangementsAction) -> Result<Outcome> {
    match action {
        ArrangementsAction::Charpoly { arrangement, method, format } => {
            let spec = arrangement.resolve()?;
            let chi = charpoly(&spec, method.into())?;
            let payload = match format {
                Format::Json => json(&ArrangementReportJson::new(&spec, &chi)),
                Format::Csv => csv_table(
                    ("degree", "coefficient"),
                    chi.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(j, c)| (j.to_string(), c.to_string())),
                ),
                Format::Latex => poly_latex(&chi, "q"),
            };
            Ok(Outcome::ok(payload))
        }
        ArrangementsAction::Regions { arrangement, method } => {
            let spec = arrangement.resolve()?;
            let (regions, bounded) = region_counts(&spec, method.into())?;
            Ok(Outcome::ok(json(&RegionsPayload {
                regions: regions.to_string(),
                bounded: bounded.to_string(),
            })))
        }
        ArrangementsAction::BoundedSeq { n, a, format } => {
            let sequence = bounded_region_sequence(a, n)?;
            let payload = match format {
                Format::Json => json(&BoundedSeqPayload {
                    a,
                    bounded: sequence.iter().map(|c| c.to_string()).collect(),
                }),
                Format::Csv => csv_table(
                    ("n", "bounded"),
                    sequence
                        .iter()
                        .enumerate()
                        .map(|(i, c)| ((i + 1).to_string(), c.to_string())),
                ),
                Format::Latex => latex_table(
                    ("$n$", "$b(\\mathcal{L}_{n-1})$"),
                    sequence
                        .iter()
                        .enumerate()
                        .map(|(i, c)| ((i + 1).to_string(), c.to_string())),
                ),
            };
            Ok(Outcome::ok(payload))
        }
        ArrangementsAction::Sequences { n, a, limits } => {
            let limits = limits.resolve();
            let regions = sequence_count_with(n, a, BoundType::Regions, &limits)?;
            let bounded = sequence_count_with(n, a, BoundType::Bounded, &limits)?;
            Ok(Outcome::ok(json(&RegionsPayload {
                regions: regions.to_string(),
                bounded: bounded.to_string(),
            })))
        }
    }
}

fn execute_graphs(action: GraphsAction) -> Result<Outcome> {
    match action {
        GraphsAction::Chromatic { n, t, format } => {
            let graph = linial_graph(t, n)?;
            let chromatic = chromatic_polynomial(&complement(&graph))?;
            let payload = match format {
                Format::Json => json(&ChromaticPayload {
                    graph: GraphJson::from_graph(&graph),
                    chromatic: PolyJson::from_poly(&chromatic, "x"),
                }),
                Format::Csv => csv_table(
                    ("degree", "coefficient"),
                    chromatic
                        .coeffs()
                        .iter()
                        .enumerate()
                        .map(|(j, c)| (j.to_string(), c.to_string())),
                ),
                Format::Latex => poly_latex(&chromatic, "x"),
            };
            Ok(Outcome::ok(payload))
        }
        GraphsAction::Matchings { n, t, limits, format } => {
            let graph = linial_graph(t, n)?;
            let m = linial_matchings_by_size_with(t, n, &limits.resolve())?;
            let maximum_size = m.len() - 1;
            let maximum_count = m[maximum_size].to_string();
            let payload = match format {
                Format::Json => json(&MatchingsPayload {
                    graph: GraphJson::from_graph(&graph),
                    m: m.iter().map(|c| c.to_string()).collect(),
                    maximum_size,
                    maximum_count,
                }),
                Format::Csv => csv_table(
                    ("k", "matchings"),
                    m.iter().enumerate().map(|(k, c)| (k.to_string(), c.to_string())),
                ),
                Format::Latex => latex_table(
                    ("$k$", "$m_k$"),
                    m.iter().enumerate().map(|(k, c)| (k.to_string(), c.to_string())),
                ),
            };
            Ok(Outcome::ok(payload))
        }
    }
}

/// Generic parameter tuple used by `drake` when `--params` is omitted:
/// `u_i = 1/(i+1)`, `v_i = i+1`.
fn default_drake_params(k: usize) -> (Vec<BigRational>, Vec<BigRational>) {
    let u = (1..=k)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i as i64 + 1)))
        .collect();
    let v = (1..=k)
        .map(|i| BigRational::from_integer(BigInt::from(i as i64 + 1)))
        .collect();
    (u, v)
}

fn execute_series(action: SeriesAction) -> Result<Outcome> {
    let SeriesAction::Verify { identity, k, order, params, limits } = action;
    let limits = limits.resolve();
    let report: IdentityReport = match identity {
        IdentityArg::LtreeEgf => {
            reject_params(&params, "ltree-egf")?;
            verify_ltree_egf_with(k, order, &limits)?
        }
        IdentityArg::FEquation => {
            reject_params(&params, "f-equation")?;
            verify_f_equation(k, order)?
        }
        IdentityArg::Drake => {
            let (u, v) = match &params {
                Some(text) => parse_uv_assignments(text, k)?,
                None => default_drake_params(k),
            };
            verify_drake_inverse_with(k, &u, &v, order, &limits)?
        }
        IdentityArg::GesselK2 => {
            if k != 2 {
                return Err(invalid("gessel-k2 requires --k 2"));
            }
            let (u, v) = match &params {
                Some(text) => parse_uv_assignments(text, 2)?,
                None => (vec![BigRational::one(); 2], vec![BigRational::one(); 2]),
            };
            verify_gessel_k2_equation_with(&u[0], &u[1], &v[0], &v[1], order, &limits)?
        }
    };
    let exit = if report.passed() { 0 } else { 1 };
    Ok(Outcome { payload: json(&report), exit })
}

fn reject_params(params: &Option<String>, identity: &str) -> Result<()> {
    if params.is_some() {
        Err(invalid(format!("--params does not apply to {identity}")))
    } else {
        Ok(())
    }
}

fn execute_verify(action: VerifyAction) -> Result<Outcome> {
    let VerifyAction::All { max_n, limits } = action;
    let suites = run_all(max_n, &limits.resolve());
    let passed = suites.iter().all(|s| s.passed);
    let payload = json(&VerifyPayload { max_n, passed, suites });
    Ok(Outcome { payload, exit: if passed { 0 } else { 1 } })
}

fn main() {
    let start = Instant::now();
    let cli = Cli::parse();
    let code = match execute(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.payload);
            let status = if outcome.exit == 0 { "ok" } else { "verification-failed" };
            eprintln!("status: {status} ({} ms)", start.elapsed().as_millis());
            outcome.exit
        }
        Err(e) => {
            let (status, code) = match e {
                Error::Verification(_) => ("verification-failed", 1),
                Error::InvalidInput(_) => ("invalid-input", 2),
                Error::ResourceLimit(_) => ("resource-limit", 3),
            };
            eprintln!("error: {e}");
            eprintln!("status: {status} ({} ms)", start.elapsed().as_millis());
            code
        }
    };
    std::process::exit(code);
}

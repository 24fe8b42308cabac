//! `setdec`: enumerate tableaux, apply crystal operators, verify crystal
//! axioms, test conjectures and expand K-theoretic Schur functions.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use setdec::graph::Axiom;
use setdec::tableau::FamilyId;
use setdec::StrictPartition;

#[derive(Parser, Debug)]
#[command(name = "setdec", version, about = "Crystals on set-valued shifted tableaux")]
pub struct Cli {
    /// Print a JSON report on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count (and optionally list) the members of a tableau family.
    Enumerate(EnumerateArgs),
    /// Apply one crystal operator to a tableau read from a JSON file.
    Apply(ApplyArgs),
    /// Print the weight generating polynomial of a family.
    Char(CharArgs),
    /// Write the crystal graph as a Graphviz file.
    Graph(GraphArgs),
    /// Check a set of crystal axioms and list the violations.
    Verify(VerifyArgs),
    /// Test a conjecture in a bounded range.
    Conjecture(ConjectureArgs),
    /// Expand a polynomial in the GP (or G) basis.
    Expand(ExpandArgs),
    /// Expand a product of two basis functions.
    Product(ProductArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Scope {
    /// Strict partition, as comma-separated parts.
    #[arg(long, value_parser = parse_shape)]
    shape: StrictPartition,
    /// Largest letter.
    #[arg(long)]
    n: usize,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[command(flatten)]
    scope: Scope,
    /// Bound on the number of entries (set-valued families).
    #[arg(long)]
    max_degree: Option<usize>,
    /// Also print every tableau.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OpName {
    #[value(name = "e")]
    E,
    #[value(name = "f")]
    F,
    #[value(name = "ebar")]
    Ebar,
    #[value(name = "fbar")]
    Fbar,
    #[value(name = "e'")]
    EPrime,
    #[value(name = "f'")]
    FPrime,
    #[value(name = "ebar'")]
    EbarPrime,
    #[value(name = "fbar'")]
    FbarPrime,
    #[value(name = "sigma'")]
    SigmaPrime,
}

#[derive(Args, Debug)]
pub struct ApplyArgs {
    #[arg(long, value_enum)]
    op: OpName,
    /// Operator index; for `ebar'`/`fbar'` an index above 1 selects the
    /// conjugated operator.
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Tableau file in the JSON format.
    #[arg(long)]
    tableau: PathBuf,
    /// Largest letter, needed by `sigma'` and the conjugated queer
    /// operators; defaults to the larger of `i + 1` and the largest entry.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct CharArgs {
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[command(flatten)]
    scope: Scope,
    /// Truncation degree.
    #[arg(long)]
    degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Ops {
    /// `e_i`, `f_i` (and `ē₁`, `f̄₁` with `--q`).
    Classical,
    /// The square-root operators `e′_i`, `f′_i` (and `ē′₁`, `f̄′₁`).
    Sqrt,
}

#[derive(Args, Debug, Clone)]
pub struct GraphSpec {
    /// `dectab` or `setdectab`.
    #[arg(long, value_parser = parse_family)]
    family: FamilyId,
    #[command(flatten)]
    scope: Scope,
    /// Degree bound for set-valued families (default: size of the shape + 2).
    #[arg(long)]
    max_degree: Option<usize>,
    #[arg(long, value_enum, default_value_t = Ops::Classical)]
    ops: Ops,
    /// Include the queer edges.
    #[arg(long)]
    q: bool,
}

#[derive(Args, Debug)]
pub struct GraphArgs {
    #[command(flatten)]
    spec: GraphSpec,
    /// Output DOT file; stdout if omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// gl, gl_seminormal, q, q_seminormal, sqrt_gl or sqrt_q.
    #[arg(long, value_parser = parse_axiom)]
    axioms: Axiom,
    #[command(flatten)]
    spec: GraphSpec,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Conjecture {
    /// Σ_λ = GP_λ through the degree bound.
    Ikeda,
    /// Every element of degree ≤ D is in the √q-component of T^highest.
    Connected,
    /// T^highest is the only √q-highest element of degree ≤ D.
    UniqueHighest,
}

#[derive(Args, Debug)]
pub struct ConjectureArgs {
    #[arg(value_enum)]
    which: Conjecture,
    #[command(flatten)]
    scope: Scope,
    /// Degree bound.
    #[arg(long)]
    degree: usize,
}

#[derive(Args, Debug)]
pub struct ExpandArgs {
    /// Expand in the GP basis (the default).
    #[arg(long, conflicts_with = "g")]
    gp: bool,
    /// Expand in the G basis instead.
    #[arg(long)]
    g: bool,
    /// Polynomial file: `{"n": .., "terms": {"1,0": 1, ..}}` or a bare term map.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    n: Option<usize>,
    /// Truncation degree.
    #[arg(long)]
    degree: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ProductKind {
    #[value(name = "G")]
    G,
    #[value(name = "GP")]
    GP,
}

#[derive(Args, Debug)]
pub struct ProductArgs {
    #[arg(long, value_enum, ignore_case = true)]
    kind: ProductKind,
    /// Left factor as comma-separated parts; empty for 1.
    #[arg(long, value_parser = parse_parts)]
    lhs: Parts,
    #[arg(long, value_parser = parse_parts)]
    rhs: Parts,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    degree: usize,
}

fn parse_shape(s: &str) -> Result<StrictPartition, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_family(s: &str) -> Result<FamilyId, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_axiom(s: &str) -> Result<Axiom, String> {
    s.parse()
}

/// A partition, not necessarily strict.
#[derive(Clone, Debug)]
pub struct Parts(Vec<u32>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    let s = s.trim();
    if s.is_empty() || s == "0" {
        return Ok(Parts(Vec::new()));
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|_| format!("'{p}' is not a positive integer")))
        .collect::<Result<_, _>>()?;
    if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(format!("{s} is not a partition"));
    }
    Ok(Parts(parts))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.exit_code())
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn parts_parsing() {
        assert_eq!(parse_parts("2,1,1").unwrap().0, vec![2, 1, 1]);
        assert_eq!(parse_parts("").unwrap().0, Vec::<u32>::new());
        assert!(parse_parts("1,2").is_err());
        assert!(parse_parts("2,0").is_err());
    }
}

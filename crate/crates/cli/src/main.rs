//! Command-line front end: every computation and verification as a
//! subcommand with reproducible text or JSON output.
//!
//! Exit codes: 0 pass, 2 mathematical failure, 3 step-budget exhaustion,
//! 4 usage or parse errors.

use clap::{Parser, Subcommand, ValueEnum};
use std::time::Instant;
use walg::exprio::{parse, print_ncpoly, render_expr, Report, ReportStatus};
use walg::invariants::{
    folding_degree_check, folding_pair, universality_row, universality_table, DynkinType,
    OrbitClass, SymmetricContext,
};
use walg::kleinian::{jacobi_check, KleinianRing};
use walg::ncpoly::{Family, Generator};
use walg::yangian::{
    build_algebra, central_element, central_element_closed_form, central_series_expand,
    confluence_check, generator_degrees, graded_dimension, verify_centrality, BuildOptions,
    CentralFormula, DVars, ElementError, Mode, YangianAlgebra, YangianError,
};
use walg::Parallelism;

const EXIT_PASS: i32 = 0;
const EXIT_MATH: i32 = 2;
const EXIT_BUDGET: i32 = 3;
const EXIT_USAGE: i32 = 4;

#[derive(Parser)]
#[command(name = "walg", version, about = "Exact workbench for a rank-two shifted Yangian, folding combinatorics and Kleinian brackets")]
struct Cli {
    /// Rank parameter: the ambient odd orthogonal algebra has rank n
    #[arg(long, global = true, default_value_t = 2)]
    n: u32,
    /// Algebra mode: full, or the gl / so truncated quotients
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Full)]
    mode: ModeArg,
    #[arg(long, global = true, default_value_t = 12)]
    degree_bound: u64,
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = OutputArg::Text)]
    output: OutputArg,
    /// Rewrite steps allowed per normal-form call
    #[arg(long, global = true, default_value_t = 1_000_000)]
    step_budget: u64,
    /// Rule file overriding the built-in relation table
    #[arg(long, global = true)]
    rules: Option<std::path::PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Full,
    Gl,
    So,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Full => Mode::Full,
            ModeArg::Gl => Mode::TruncatedGl,
            ModeArg::So => Mode::TruncatedSo,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormulaArg {
    Corrected,
    Printed,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrbitArg {
    Regular,
    Subregular,
    #[value(name = "two-jordan-blocks", alias = "twojordanblocks")]
    TwoJordanBlocks,
    Dim8,
    Other,
}

impl From<OrbitArg> for OrbitClass {
    fn from(o: OrbitArg) -> OrbitClass {
        match o {
            OrbitArg::Regular => OrbitClass::Regular,
            OrbitArg::Subregular => OrbitClass::Subregular,
            OrbitArg::TwoJordanBlocks => OrbitClass::TwoJordanBlocksC,
            OrbitArg::Dim8 => OrbitClass::Dim8G,
            OrbitArg::Other => OrbitClass::Other,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Central series coefficients from the series oracle and the closed
    /// form, with an equality verdict per coefficient
    Central {
        #[arg(long, default_value_t = 6)]
        r_max: u32,
        #[arg(long, value_enum, default_value_t = FormulaArg::Corrected)]
        formula: FormulaArg,
    },
    /// Reduce [Z^r, g] for each probe generator; passes when all vanish
    Verify {
        #[arg(long)]
        r: u32,
        /// Comma-separated generators, e.g. E^3,F^1
        #[arg(long, value_delimiter = ',')]
        probes: Vec<String>,
    },
    /// Seeded random check that reduction is associative and idempotent
    Confluence {
        #[arg(long, default_value_t = 200)]
        samples: u32,
    },
    /// PBW word counts per canonical degree
    Dims,
    /// Folding data and the degree-combinatorics verdict for a folded type,
    /// e.g. B2, C3, F4, G2
    Fold { target: String },
    /// Deformation-universality verdict for a type and orbit class
    Table1 {
        /// Simple type letter A-G
        dtype: String,
        #[arg(value_enum, ignore_case = true)]
        class: OrbitArg,
    },
    /// The sign action on elementary symmetric polynomials and the
    /// coinvariant kernel generators
    Coinv,
    /// Kleinian ring checks: defining relation, bracket table, Jacobi
    Kleinian {
        #[arg(long, default_value_t = 2)]
        m: u32,
    },
    /// PBW normal form of an expression
    Nf { expr: String },
    /// Parse an expression and echo its normalized form
    ParseCheck { expr: String },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn math(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_MATH,
            message: message.into(),
        }
    }
}

impl From<YangianError> for Failure {
    fn from(e: YangianError) -> Self {
        let code = match e {
            YangianError::BudgetExceeded { .. } => EXIT_BUDGET,
            YangianError::RuleFile { .. }
            | YangianError::RankTooSmall(_)
            | YangianError::Inadmissible { .. } => EXIT_USAGE,
            YangianError::RuleSynthesis(_) => EXIT_MATH,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<ElementError> for Failure {
    fn from(e: ElementError) -> Self {
        Failure::usage(e.to_string())
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            // clap uses 0 for --help/--version, 2 otherwise; usage errors are 4 here
            std::process::exit(if e.exit_code() == 0 { 0 } else { EXIT_USAGE });
        }
    };
    let output = cli.output;
    let start = Instant::now();
    match run(cli) {
        Ok(mut report) => {
            report.millis = start.elapsed().as_millis() as u64;
            match output {
                OutputArg::Json => println!("{}", report.to_json()),
                OutputArg::Text => print_text(&report),
            }
            std::process::exit(match report.status {
                ReportStatus::Pass => EXIT_PASS,
                ReportStatus::Fail => EXIT_MATH,
                ReportStatus::Error => EXIT_MATH,
            });
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn print_text(report: &Report) {
    println!("operation: {}", report.operation);
    for (k, v) in &report.params {
        println!("  {k}: {v}");
    }
    for w in &report.witnesses {
        println!("  {} => {}", w.input, w.output);
    }
    println!(
        "status: {} (steps {}, millis {})",
        match report.status {
            ReportStatus::Pass => "pass",
            ReportStatus::Fail => "fail",
            ReportStatus::Error => "error",
        },
        report.steps,
        report.millis
    );
}

fn build(cli: &Cli) -> Result<YangianAlgebra, Failure> {
    let rules = match &cli.rules {
        Some(path) => Some(
            std::fs::read_to_string(path)
                .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?,
        ),
        None => None,
    };
    Ok(build_algebra(
        cli.n,
        cli.mode.into(),
        BuildOptions {
            step_budget: cli.step_budget,
            rules,
        },
    )?)
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Central { r_max, formula } => cmd_central(&cli, r_max, formula),
        Command::Verify { r, ref probes } => cmd_verify(&cli, r, probes),
        Command::Confluence { samples } => cmd_confluence(&cli, samples),
        Command::Dims => cmd_dims(&cli),
        Command::Fold { ref target } => cmd_fold(target),
        Command::Table1 { ref dtype, class } => cmd_table1(dtype, class),
        Command::Coinv => cmd_coinv(&cli),
        Command::Kleinian { m } => cmd_kleinian(&cli, m),
        Command::Nf { ref expr } => cmd_nf(&cli, expr),
        Command::ParseCheck { ref expr } => cmd_parse_check(expr),
    }
}

fn cmd_central(cli: &Cli, r_max: u32, formula: FormulaArg) -> Result<Report, Failure> {
    if cli.n < 2 {
        return Err(Failure::usage(format!("n must be at least 2, got {}", cli.n)));
    }
    let flavor = match formula {
        FormulaArg::Corrected => CentralFormula::Corrected,
        FormulaArg::Printed => CentralFormula::Printed,
    };
    let mut report = Report::new("central")
        .param("n", cli.n)
        .param("r_max", r_max)
        .param(
            "formula",
            match formula {
                FormulaArg::Corrected => "corrected",
                FormulaArg::Printed => "printed",
            },
        );
    let dv = DVars::new(r_max.max(1));
    let oracle = central_series_expand(&dv, cli.n, r_max);
    let mut all_equal = true;
    for r in 0..=r_max {
        let closed = central_element_closed_form(&dv, cli.n, r, flavor);
        let closed_nc = dv.to_ncpoly(&closed);
        let oracle_nc = dv.to_ncpoly(&oracle[r as usize]);
        if closed == oracle[r as usize] {
            report.witness(format!("Z^{r}"), format!("{} [equal]", print_ncpoly(&closed_nc)));
        } else {
            all_equal = false;
            report.witness(
                format!("Z^{r}"),
                format!(
                    "closed form {} != series oracle {}",
                    print_ncpoly(&closed_nc),
                    print_ncpoly(&oracle_nc)
                ),
            );
        }
    }
    report.status = if all_equal {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    Ok(report)
}

fn parse_probe(text: &str) -> Result<Generator, Failure> {
    let err = || Failure::usage(format!("invalid probe `{text}`: expected D1^r, D2^r, E^r or F^r"));
    let (family, rest) = if let Some(rest) = text.strip_prefix("D1^") {
        (Family::D1, rest)
    } else if let Some(rest) = text.strip_prefix("D2^") {
        (Family::D2, rest)
    } else if let Some(rest) = text.strip_prefix("E^") {
        (Family::E, rest)
    } else if let Some(rest) = text.strip_prefix("F^") {
        (Family::F, rest)
    } else {
        return Err(err());
    };
    let superscript: u32 = rest.parse().map_err(|_| err())?;
    if superscript == 0 {
        return Err(err());
    }
    Ok(Generator::new(family, superscript))
}

fn cmd_verify(cli: &Cli, r: u32, probes: &[String]) -> Result<Report, Failure> {
    if probes.is_empty() {
        return Err(Failure::usage("at least one probe generator is required"));
    }
    let alg = build(cli)?;
    let probe_gens: Vec<Generator> = probes
        .iter()
        .map(|p| parse_probe(p.trim()))
        .collect::<Result<_, _>>()?;
    let mut report = Report::new("verify")
        .param("n", cli.n)
        .param("mode", alg.mode())
        .param("r", r)
        .param("probes", probes.join(","));
    let outcome = verify_centrality(&alg, r, &probe_gens)?;
    for (input, output, _) in &outcome.witnesses {
        report.witness(input.clone(), output.clone());
    }
    report.steps = outcome.steps;
    report.status = if outcome.all_zero {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    Ok(report)
}

fn cmd_confluence(cli: &Cli, samples: u32) -> Result<Report, Failure> {
    let alg = build(cli)?;
    let mut report = Report::new("confluence")
        .param("n", cli.n)
        .param("mode", alg.mode())
        .param("degree_bound", cli.degree_bound)
        .param("samples", samples)
        .param("seed", cli.seed);
    let outcome = confluence_check(
        &alg,
        cli.degree_bound,
        samples,
        cli.seed,
        Parallelism::default(),
    )?;
    report.steps = outcome.steps;
    report.witness(
        format!("{} random triples, degree <= {}", samples, cli.degree_bound),
        format!("{} failures", outcome.failures),
    );
    for (input, detail) in &outcome.witnesses {
        report.witness(input.clone(), detail.clone());
    }
    report.status = if outcome.failures == 0 {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    Ok(report)
}

fn cmd_dims(cli: &Cli) -> Result<Report, Failure> {
    let alg = build(cli)?;
    let mut report = Report::new("dims")
        .param("n", cli.n)
        .param("mode", alg.mode())
        .param("degree_bound", cli.degree_bound);
    if alg.mode() == Mode::Full {
        report = report.param(
            "note",
            "full mode: counts of the full PBW monoid, not a finite quotient",
        );
    }
    let degrees = generator_degrees(&alg, cli.degree_bound);
    report.witness(
        "generator degrees",
        degrees
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(","),
    );
    for (k, count) in graded_dimension(&alg, cli.degree_bound).iter().enumerate() {
        report.witness(format!("degree {k}"), count.to_string());
    }
    Ok(report)
}

fn parse_type_rank(target: &str) -> Result<(DynkinType, u32), Failure> {
    let err = || Failure::usage(format!("invalid type `{target}`: expected e.g. B2, C3, F4"));
    let mut chars = target.chars();
    let letter = chars.next().ok_or_else(err)?;
    let dtype = parse_type_letter(&letter.to_string())?;
    let rank: u32 = chars.as_str().parse().map_err(|_| err())?;
    Ok((dtype, rank))
}

fn parse_type_letter(letter: &str) -> Result<DynkinType, Failure> {
    match letter.to_ascii_uppercase().as_str() {
        "A" => Ok(DynkinType::A),
        "B" => Ok(DynkinType::B),
        "C" => Ok(DynkinType::C),
        "D" => Ok(DynkinType::D),
        "E" => Ok(DynkinType::E),
        "F" => Ok(DynkinType::F),
        "G" => Ok(DynkinType::G),
        other => Err(Failure::usage(format!("unknown simple type `{other}`"))),
    }
}

fn cmd_fold(target: &str) -> Result<Report, Failure> {
    let (dtype, rank) = parse_type_rank(target)?;
    let pair = folding_pair(dtype, rank).map_err(|e| Failure::usage(e.to_string()))?;
    let check = folding_degree_check(&pair);
    let mut report = Report::new("fold").param("folded", pair.folded.label());
    report.witness("unfolded type", pair.unfolded.label());
    report.witness("gamma0 order", pair.gamma0_order.to_string());
    report.witness(
        format!("{} degrees", pair.folded.label()),
        join(&pair.folded.degrees),
    );
    report.witness(
        format!("{} degrees", pair.unfolded.label()),
        join(&pair.unfolded.degrees),
    );
    report.witness(
        format!("{} Kazhdan degrees", pair.unfolded.label()),
        join(&pair.unfolded.kazhdan_degrees()),
    );
    report.witness("lambda0 (mod 4 = 0)", join(&check.lambda0_kazhdan));
    report.witness("lambda2 (mod 4 = 2)", join(&check.lambda2_kazhdan));
    report.witness(
        "hypothesis verdict",
        if check.pass {
            "pass: lambda0 degrees match the folded Kazhdan degrees".to_string()
        } else {
            format!(
                "fail: lambda0 has {} degrees versus folded rank {}",
                check.lambda0_kazhdan.len(),
                pair.folded.rank
            )
        },
    );
    Ok(report)
}

fn join(values: &[u32]) -> String {
    values
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

fn cmd_table1(dtype: &str, class: OrbitArg) -> Result<Report, Failure> {
    let t = parse_type_letter(dtype)?;
    let class: OrbitClass = class.into();
    let universal = universality_table(t, class).map_err(|e| Failure::usage(e.to_string()))?;
    let mut report = Report::new("table1")
        .param("type", t)
        .param("orbit_class", format!("{class:?}"));
    report.witness(
        format!("{t} / {class:?}"),
        if universal {
            "universal Poisson deformation".to_string()
        } else {
            format!("not universal (row: {})", universality_row(class))
        },
    );
    Ok(report)
}

fn cmd_coinv(cli: &Cli) -> Result<Report, Failure> {
    let ctx = SymmetricContext::new(cli.n).map_err(|e| Failure::usage(e.to_string()))?;
    let mut report = Report::new("coinv").param("n", cli.n);
    let mut pass = true;
    for j in 2..=2 * cli.n {
        let e = ctx
            .elementary_symmetric(j)
            .map_err(|e| Failure::math(e.to_string()))?;
        let twisted = ctx
            .gamma_action(&e)
            .map_err(|e| Failure::math(e.to_string()))?;
        let expected = if j % 2 == 0 { e.clone() } else { e.neg() };
        let ok = twisted == expected;
        pass &= ok;
        report.witness(
            format!("e_{j} . gamma"),
            format!("(-1)^{j} e_{j} [{}]", if ok { "ok" } else { "MISMATCH" }),
        );
    }
    let kernel = ctx
        .coinvariant_kernel()
        .map_err(|e| Failure::math(e.to_string()))?;
    let names: Vec<String> = (3..2 * cli.n).step_by(2).map(|j| format!("e_{j}")).collect();
    report.witness("coinvariant kernel", format!("({})", names.join(", ")));
    for (name, g) in names.iter().zip(&kernel) {
        report.witness(name.clone(), g.to_string());
    }
    report.status = if pass {
        ReportStatus::Pass
    } else {
        ReportStatus::Fail
    };
    Ok(report)
}

fn cmd_kleinian(cli: &Cli, m: u32) -> Result<Report, Failure> {
    let ring = KleinianRing::new(m).map_err(|e| Failure::usage(e.to_string()))?;
    let mut report = Report::new("kleinian").param("m", m);
    report.witness("relation", format!("u v = w^{m} holds identically"));
    match ring.bracket_table() {
        Ok(table) => {
            report.witness("{w, u}", table.wu.to_string());
            report.witness("{w, v}", table.wv.to_string());
            report.witness("{u, v}", table.uv.to_string());
        }
        Err(e) => {
            report.witness("bracket table", e.to_string());
            report.status = ReportStatus::Fail;
            return Ok(report);
        }
    }
    let bound = cli.degree_bound.min(12) as u32;
    let jac = jacobi_check(&ring, bound);
    report.witness(
        format!("Jacobi identity on monomial triples to degree {bound}"),
        format!("{} triples, {} failures", jac.triples, jac.failures),
    );
    if jac.failures > 0 {
        report.status = ReportStatus::Fail;
    }
    Ok(report)
}

fn cmd_nf(cli: &Cli, expr: &str) -> Result<Report, Failure> {
    let alg = build(cli)?;
    let element = alg.parse_element(expr)?;
    let reduced = alg.reduce(&element)?;
    let mut report = Report::new("nf")
        .param("n", cli.n)
        .param("mode", alg.mode());
    report.steps = reduced.steps;
    report.witness(expr, print_ncpoly(&reduced.poly));
    Ok(report)
}

fn cmd_parse_check(expr: &str) -> Result<Report, Failure> {
    let tree = parse(expr).map_err(|e| Failure::usage(e.to_string()))?;
    let mut report = Report::new("parse-check");
    report.witness(expr, render_expr(&tree));
    Ok(report)
}

//! `msn` — tables, identity checks, and moment conversions for the
//! shifted Stirling numbers, with JSON or CSV on stdout.
//!
//! Exit codes: 0 success (and every checked identity holding), 1 when a
//! verification finds a counterexample, 2 for input errors, 3 when a
//! phase-type matrix I - P is singular.

use std::io;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use msn_core::{
    convert, format_rational, parse_rational, poisson_moments, verify_all, verify_identity,
    Error, IdentityName, IdentityReport, MomentKind, MomentVector, Msn1Table, Msn2Table,
    PhaseType, RStirlingFirst, Rational, StirlingFirst, StirlingSecond,
};

#[derive(Parser)]
#[command(name = "msn", version, about = "Shifted Stirling number toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print triangle rows 0..n of a number family
    Table(TableArgs),
    /// Check one catalog identity, or all of them, on a parameter grid
    Verify(VerifyArgs),
    /// Compute or convert moment vectors
    #[command(subcommand)]
    Moments(MomentsCommand),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Msn1,
    Msn2,
    Stirling1,
    Stirling2,
    #[value(name = "r_stirling")]
    RStirling,
}

impl Family {
    fn as_str(self) -> &'static str {
        match self {
            Family::Msn1 => "msn1",
            Family::Msn2 => "msn2",
            Family::Stirling1 => "stirling1",
            Family::Stirling2 => "stirling2",
            Family::RStirling => "r_stirling",
        }
    }
}

#[derive(Args)]
struct TableArgs {
    /// Number family
    #[arg(value_enum)]
    family: Family,
    /// Highest row to print
    #[arg(long)]
    n: usize,
    /// Shift parameter, required for msn1/msn2 (rational, e.g. -3/7)
    #[arg(long, allow_hyphen_values = true)]
    k: Option<String>,
    /// Row offset, required for r_stirling
    #[arg(long)]
    r: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Catalog identity name, or "all"
    identity: String,
    /// Largest index the grid runs to
    #[arg(long)]
    n: usize,
    /// Comma-separated shift values, e.g. 0,1,-1,1/2
    #[arg(long, allow_hyphen_values = true)]
    k: String,
}

#[derive(Subcommand)]
enum MomentsCommand {
    /// Re-express a moment vector in another kind
    Convert(ConvertArgs),
    /// Ordinary / factorial / central moments of a Poisson law
    Poisson(PoissonArgs),
    /// Moments of a discrete phase-type law
    Ph(PhArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Ordinary,
    Factorial,
    Central,
}

impl From<KindArg> for MomentKind {
    fn from(k: KindArg) -> MomentKind {
        match k {
            KindArg::Ordinary => MomentKind::Ordinary,
            KindArg::Factorial => MomentKind::Factorial,
            KindArg::Central => MomentKind::Central,
        }
    }
}

#[derive(Args)]
struct ConvertArgs {
    /// Kind of the input values
    #[arg(long, value_enum)]
    from: KindArg,
    /// Kind to convert to
    #[arg(long, value_enum)]
    to: KindArg,
    /// Comma-separated moments starting with the order-0 value 1
    #[arg(long, allow_hyphen_values = true)]
    values: String,
    /// Mean of the distribution; required (and only accepted) with --from central
    #[arg(long, allow_hyphen_values = true)]
    mean: Option<String>,
}

#[derive(Args)]
struct PoissonArgs {
    /// Rate parameter (rational, positive)
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Highest moment order
    #[arg(long)]
    m: usize,
    /// Kind of moments to emit
    #[arg(long, value_enum, default_value_t = KindArg::Ordinary)]
    kind: KindArg,
}

#[derive(Args)]
struct PhArgs {
    /// Starting probabilities, comma-separated
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Transient matrix, rows separated by ';', entries by ','
    #[arg(long = "P", allow_hyphen_values = true)]
    transient: String,
    /// Highest moment order
    #[arg(long)]
    m: usize,
    /// Kind of moments to emit
    #[arg(long, value_enum, default_value_t = KindArg::Ordinary)]
    kind: KindArg,
}

#[derive(Serialize)]
struct TableDocument {
    family: &'static str,
    n_max: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    r: Option<usize>,
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct VerifyDocument {
    n_max: usize,
    k_values: Vec<String>,
    reports: Vec<ReportDocument>,
    all_pass: bool,
}

#[derive(Serialize)]
struct ReportDocument {
    identity: &'static str,
    parameter_ranges: String,
    checked: u64,
    pass: bool,
    failures: Vec<FailureDocument>,
}

#[derive(Serialize)]
struct FailureDocument {
    indices: Vec<i64>,
    k_values: Vec<String>,
    lhs: String,
    rhs: String,
}

impl From<IdentityReport> for ReportDocument {
    fn from(report: IdentityReport) -> Self {
        ReportDocument {
            identity: report.identity.as_str(),
            parameter_ranges: report.parameter_ranges.clone(),
            checked: report.checked,
            pass: report.pass(),
            failures: report
                .failures
                .iter()
                .map(|f| FailureDocument {
                    indices: f.indices.clone(),
                    k_values: f.k_values.iter().map(format_rational).collect(),
                    lhs: format_rational(&f.lhs),
                    rhs: format_rational(&f.rhs),
                })
                .collect(),
        }
    }
}

#[derive(Serialize)]
struct MomentsDocument {
    kind: &'static str,
    mean: String,
    values: Vec<String>,
}

impl From<&MomentVector> for MomentsDocument {
    fn from(v: &MomentVector) -> Self {
        MomentsDocument {
            kind: v.kind().as_str(),
            mean: format_rational(v.mean()),
            values: v.values().iter().map(format_rational).collect(),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    match run(cli.command, format) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::SingularMatrix { .. } => 3,
                _ => 2,
            })
        }
    }
}

fn run(command: Command, format: Format) -> Result<u8, Error> {
    match command {
        Command::Table(args) => {
            let doc = build_table(&args)?;
            match format {
                Format::Json => emit_json(&doc),
                Format::Csv => emit_table_csv(&doc),
            }
            Ok(0)
        }
        Command::Verify(args) => {
            let doc = run_verify(&args)?;
            let all_pass = doc.all_pass;
            match format {
                Format::Json => emit_json(&doc),
                Format::Csv => emit_verify_csv(&doc),
            }
            Ok(if all_pass { 0 } else { 1 })
        }
        Command::Moments(cmd) => {
            let vector = run_moments(cmd)?;
            let doc = MomentsDocument::from(&vector);
            match format {
                Format::Json => emit_json(&doc),
                Format::Csv => emit_moments_csv(&doc),
            }
            Ok(0)
        }
    }
}

fn build_table(args: &TableArgs) -> Result<TableDocument, Error> {
    let n = args.n;
    let reject = |flag: &str| -> Result<(), Error> {
        Err(Error::InvalidArgument(format!(
            "family {} does not take --{flag}",
            args.family.as_str()
        )))
    };
    let rows = match args.family {
        Family::Msn1 | Family::Msn2 => {
            if args.r.is_some() {
                reject("r")?;
            }
            let k = parse_required_k(args)?;
            if args.family == Family::Msn1 {
                let t = Msn1Table::new(n, &k);
                rational_rows(n, |i, j| t.get(i, j))
            } else {
                let t = Msn2Table::new(n, &k);
                rational_rows(n, |i, j| t.get(i, j))
            }
        }
        Family::Stirling1 | Family::Stirling2 => {
            if args.k.is_some() {
                reject("k")?;
            }
            if args.r.is_some() {
                reject("r")?;
            }
            if args.family == Family::Stirling1 {
                let t = StirlingFirst::new(n);
                integer_rows(n, |i, j| t.get(i, j))
            } else {
                let t = StirlingSecond::new(n);
                integer_rows(n, |i, j| t.get(i, j))
            }
        }
        Family::RStirling => {
            if args.k.is_some() {
                reject("k")?;
            }
            let r = args.r.ok_or_else(|| {
                Error::InvalidArgument("family r_stirling requires --r".into())
            })?;
            let t = RStirlingFirst::new(r, n.max(r));
            integer_rows(n, |i, j| t.get(i, j))
        }
    };
    Ok(TableDocument {
        family: args.family.as_str(),
        n_max: n,
        k: args.k.clone(),
        r: args.r,
        rows,
    })
}

fn parse_required_k(args: &TableArgs) -> Result<Rational, Error> {
    let raw = args.k.as_deref().ok_or_else(|| {
        Error::InvalidArgument(format!("family {} requires --k", args.family.as_str()))
    })?;
    parse_rational(raw)
}

fn rational_rows(n: usize, get: impl Fn(i64, i64) -> Rational) -> Vec<Vec<String>> {
    (0..=n as i64)
        .map(|i| (0..=i).map(|j| format_rational(&get(i, j))).collect())
        .collect()
}

fn integer_rows(n: usize, get: impl Fn(i64, i64) -> msn_core::Integer) -> Vec<Vec<String>> {
    (0..=n as i64)
        .map(|i| (0..=i).map(|j| get(i, j).to_string()).collect())
        .collect()
}

fn run_verify(args: &VerifyArgs) -> Result<VerifyDocument, Error> {
    let ks = parse_rational_list(&args.k)?;
    let reports: Vec<IdentityReport> = if args.identity == "all" {
        verify_all(args.n, &ks)
    } else {
        let name = IdentityName::from_str(&args.identity)?;
        vec![verify_identity(name, args.n, &ks)?]
    };
    let all_pass = reports.iter().all(IdentityReport::pass);
    Ok(VerifyDocument {
        n_max: args.n,
        k_values: ks.iter().map(|k| format_rational(k)).collect(),
        reports: reports.into_iter().map(ReportDocument::from).collect(),
        all_pass,
    })
}

fn run_moments(cmd: MomentsCommand) -> Result<MomentVector, Error> {
    match cmd {
        MomentsCommand::Convert(args) => {
            let values = parse_rational_list(&args.values)?;
            let input = match args.from {
                KindArg::Central => {
                    let raw = args.mean.as_deref().ok_or_else(|| {
                        Error::InvalidArgument("--from central requires --mean".into())
                    })?;
                    MomentVector::central(values, parse_rational(raw)?)?
                }
                _ => {
                    if args.mean.is_some() {
                        return Err(Error::InvalidArgument(
                            "--mean is only accepted with --from central".into(),
                        ));
                    }
                    match args.from {
                        KindArg::Ordinary => MomentVector::ordinary(values)?,
                        KindArg::Factorial => MomentVector::factorial(values)?,
                        KindArg::Central => unreachable!(),
                    }
                }
            };
            convert(&input, args.to.into())
        }
        MomentsCommand::Poisson(args) => {
            let lambda = parse_rational(&args.lambda)?;
            let ordinary = poisson_moments(&lambda, args.m)?;
            convert(&ordinary, args.kind.into())
        }
        MomentsCommand::Ph(args) => {
            let start = parse_rational_list(&args.p)?;
            let transient = args
                .transient
                .split(';')
                .map(parse_rational_list)
                .collect::<Result<Vec<_>, Error>>()?;
            let ph = PhaseType::new(start, transient)?;
            match args.kind {
                KindArg::Ordinary => Ok(ph.ordinary_moments(args.m)),
                KindArg::Factorial => Ok(ph.factorial_moments(args.m)),
                KindArg::Central => convert(&ph.ordinary_moments(args.m), MomentKind::Central),
            }
        }
    }
}

fn parse_rational_list(raw: &str) -> Result<Vec<Rational>, Error> {
    raw.split(',').map(parse_rational).collect()
}

fn emit_json<T: Serialize>(doc: &T) {
    println!("{}", serde_json::to_string_pretty(doc).expect("document serializes"));
}

fn csv_writer() -> csv::Writer<io::Stdout> {
    csv::WriterBuilder::new().flexible(true).from_writer(io::stdout())
}

/// One record per triangle row: family, shift (k or r, empty for the
/// classical triangles), row index, then the entries.
fn emit_table_csv(doc: &TableDocument) {
    let shift = doc
        .k
        .clone()
        .or_else(|| doc.r.map(|r| r.to_string()))
        .unwrap_or_default();
    let mut w = csv_writer();
    for (i, row) in doc.rows.iter().enumerate() {
        let mut record = vec![doc.family.to_string(), shift.clone(), i.to_string()];
        record.extend(row.iter().cloned());
        w.write_record(&record).expect("stdout record");
    }
    w.flush().expect("stdout flush");
}

/// One record per report, then one per recorded counterexample.
fn emit_verify_csv(doc: &VerifyDocument) {
    let mut w = csv_writer();
    for report in &doc.reports {
        w.write_record([
            report.identity,
            if report.pass { "pass" } else { "fail" },
            &report.checked.to_string(),
            &report.parameter_ranges,
        ])
        .expect("stdout record");
        for failure in &report.failures {
            let indices =
                failure.indices.iter().map(i64::to_string).collect::<Vec<_>>().join(";");
            w.write_record([
                report.identity,
                "failure",
                &indices,
                &failure.k_values.join(";"),
                &failure.lhs,
                &failure.rhs,
            ])
            .expect("stdout record");
        }
    }
    w.flush().expect("stdout flush");
}

/// Single record: kind, mean, then the values.
fn emit_moments_csv(doc: &MomentsDocument) {
    let mut record = vec![doc.kind.to_string(), doc.mean.clone()];
    record.extend(doc.values.iter().cloned());
    let mut w = csv_writer();
    w.write_record(&record).expect("stdout record");
    w.flush().expect("stdout flush");
}

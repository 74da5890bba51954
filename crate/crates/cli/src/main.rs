use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use nullvar::algebra::{build_algebra, LieAlgebra};
use nullvar::exterior::{binomial, Exterior};
use nullvar::grassmann::{equation_matrix, linear_membership, plucker};
use nullvar::nullspace::{chart, degenerate, is_nullspace, orbit_table};
use nullvar::report::{
    info_json, parse_params, parse_weight, run_suite, subspace_from_json, Corruption, Suite,
    SuiteConfig,
};
use nullvar::roots::TypeLabel;
use nullvar::Error;

const DEFAULT_MAX_G: usize = 10;

#[derive(Parser)]
#[command(name = "nullvar", version, about = "Maximal nullspaces of the invariant 3-form of a simple Lie algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct TypeArg {
    /// root system label, e.g. A2, B3, C2, D4
    #[arg(long = "type")]
    type_label: String,
}

#[derive(Subcommand)]
enum Command {
    /// Print dimensions of an algebra
    Info(TypeArg),
    /// Run a verification suite and write a JSON report
    Verify(VerifyArgs),
    /// Nullspace at chart parameters, one per simple root
    Chart {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
    },
    /// Compare the linear equations with the direct nullspace test
    Membership {
        #[command(flatten)]
        ty: TypeArg,
        /// Subspace or Matrix JSON file
        #[arg(long)]
        basis: PathBuf,
    },
    /// Matrix of the linear equations on Plücker coordinates
    Equations(TypeArg),
    /// Limit of a chart point under a one-parameter subgroup
    Degenerate {
        #[command(flatten)]
        ty: TypeArg,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<String>,
        /// Subspace JSON file, instead of --t
        #[arg(long, conflicts_with = "t")]
        basis: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        weight: String,
    },
    /// Orbit representatives for every zero pattern of chart parameters
    Orbits(TypeArg),
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    ty: TypeArg,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 50)]
    chart_samples: usize,
    #[arg(long, default_value_t = 5)]
    jacobian_points: usize,
    #[arg(long, default_value_t = 200)]
    membership_samples: usize,
    #[arg(long, default_value_t = 100)]
    zeta_samples: usize,
    /// check operator identities as matrices only up to this degree
    #[arg(long)]
    matrix_degree: Option<usize>,
    /// perturb one structure constant: i,j,k[,delta]
    #[arg(long)]
    corrupt_constant: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    no_timestamp: bool,
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn max_g() -> Result<usize, Failure> {
    match std::env::var("NULLVAR_MAX_G") {
        Ok(v) => v
            .parse()
            .map_err(|_| Failure::Usage(format!("NULLVAR_MAX_G must be an integer, got {v}"))),
        Err(_) => Ok(DEFAULT_MAX_G),
    }
}

fn algebra(ty: &TypeArg) -> Result<LieAlgebra, Failure> {
    let label: TypeLabel = ty.type_label.parse()?;
    Ok(build_algebra(label))
}

fn capped_algebra(ty: &TypeArg) -> Result<LieAlgebra, Failure> {
    let alg = algebra(ty)?;
    let cap = max_g()?;
    if alg.dim() > cap {
        return Err(Error::TooLarge { g: alg.dim(), cap }.into());
    }
    Ok(alg)
}

fn read_json(path: &PathBuf) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn print(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json prints"));
}

fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    let suite: Suite = args.suite.parse()?;
    let mut config = SuiteConfig::new(&args.ty.type_label, suite, args.seed);
    config.chart_samples = args.chart_samples;
    config.jacobian_points = args.jacobian_points;
    config.membership_samples = args.membership_samples;
    config.zeta_samples = args.zeta_samples;
    config.matrix_degree = args.matrix_degree;
    config.max_g = max_g()?;
    if let Some(c) = &args.corrupt_constant {
        config.corrupt = Some(c.parse::<Corruption>()?);
    }
    let report = run_suite(&config, !args.no_timestamp)?;
    let text = serde_json::to_string_pretty(&report.to_json()).expect("report prints");
    match &args.out {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    for r in report.failing() {
        eprintln!("FAIL {}: expected {} got {}", r.name, r.expected, r.got);
    }
    eprintln!(
        "{} records, {} failing",
        report.records.len(),
        report.failing().count()
    );
    if report.ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Info(ty) => print(&info_json(&algebra(&ty)?)),
        Command::Verify(args) => verify(&args)?,
        Command::Chart { ty, t } => {
            let alg = algebra(&ty)?;
            let p = chart(&alg, &parse_params(&t)?)?;
            print(&p.subspace.to_json());
        }
        Command::Membership { ty, basis } => {
            let alg = capped_algebra(&ty)?;
            let s = subspace_from_json(&alg, &read_json(&basis)?)?;
            let ext = Exterior::new(&alg);
            let p = plucker(&ext, &s)?;
            print(&json!({
                "is_nullspace": is_nullspace(&alg, &s),
                "linear_membership": linear_membership(&ext, &p),
            }));
        }
        Command::Equations(ty) => {
            let alg = capped_algebra(&ty)?;
            let ext = Exterior::new(&alg);
            let m = equation_matrix(&ext);
            let mut v = m.to_json();
            v["rank"] = json!(m.rank());
            v["ambient_plucker_dim"] = json!(binomial(alg.dim(), alg.d()));
            print(&v);
        }
        Command::Degenerate { ty, t, basis, weight } => {
            let alg = algebra(&ty)?;
            let s = match (t, basis) {
                (Some(t), None) => chart(&alg, &parse_params(&t)?)?.subspace,
                (None, Some(path)) => subspace_from_json(&alg, &read_json(&path)?)?,
                _ => return Err(Failure::Usage("one of --t or --basis is required".into())),
            };
            print(&degenerate(&alg, &s, &parse_weight(&weight)?)?.to_json());
        }
        Command::Orbits(ty) => {
            let alg = algebra(&ty)?;
            let table = orbit_table(&alg)?;
            print(&serde_json::to_value(table).expect("orbit table serializes"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

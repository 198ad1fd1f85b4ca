mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cacti_core::algebra::{format_rational, Polynomial};
use cacti_core::circles::CircleSet;
use cacti_core::closed_forms::{
    cacti_passport, circle_cacti_multi, constellations_1n_closed, constellations_1n_sum, Variant,
};
use cacti_core::error::Error;
use cacti_core::matrix_model::{big_f_series, f_series};
use cacti_core::monodromy::Passport;
use cacti_core::oracle::{
    total_volume, weighted_1n_count, weighted_cactus_count, weighted_constellation_count, TypeQuery,
};
use cacti_core::verify::{run_suite, Suite};
use num_rational::BigRational;

use config::Config;

#[derive(Parser)]
#[command(
    name = "cacti",
    version,
    about = "Exact counts of cacti, constellations and circle gluings"
)]
struct Cli {
    /// Worker threads; results do not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Defaults file with `key = value` lines (budget, max_degree, threads).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted counts from the closed forms and the oracles.
    #[command(subcommand)]
    Count(Count),
    /// Volume of a space of circle gluings.
    Volume(VolumeArgs),
    /// Series expansion of the generating function.
    ExpandF(ExpandArgs),
    /// Run a cross-validation suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum Count {
    Cacti {
        #[arg(long)]
        passport: String,
        #[arg(long, default_value = "corrected")]
        variant: Variant,
    },
    Constellations {
        #[arg(long)]
        passport: String,
        #[arg(long)]
        genus: usize,
        #[arg(long)]
        faces: usize,
    },
    OneN {
        /// One polygon size per color, e.g. "2,2,2".
        #[arg(long)]
        sizes: String,
    },
}

#[derive(Args)]
struct VolumeArgs {
    #[arg(long)]
    circles: String,
    #[arg(long, default_value_t = 0)]
    genus: usize,
    #[arg(long, default_value_t = 1)]
    faces: usize,
    /// Lengths are symbols; without it they must be numbers.
    #[arg(long)]
    symbolic: bool,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long)]
    circles: String,
    #[arg(long)]
    max_degree: usize,
    /// Emit the sum over topological types, with powers of N.
    #[arg(long = "with-N", alias = "with-n")]
    with_n: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: Suite,
    /// Seconds available; smaller budgets run smaller sizes.
    #[arg(long)]
    budget: Option<u64>,
}

enum Failure {
    Disagree,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Value, Failure>;

fn rational(x: &BigRational) -> Value {
    Value::String(format_rational(x))
}

fn agreement(body: Value, agree: bool) -> Outcome {
    println!("{body}");
    if agree {
        Ok(Value::Null)
    } else {
        Err(Failure::Disagree)
    }
}

fn count(c: Count) -> Outcome {
    match c {
        Count::Cacti { passport, variant } => {
            let x = Passport::parse(&passport)?;
            let formula = cacti_passport(&x, variant)?;
            let oracle = weighted_cactus_count(&x)?;
            let agree = formula == oracle;
            agreement(
                json!({"formula": rational(&formula), "oracle": rational(&oracle), "agree": agree}),
                agree,
            )
        }
        Count::Constellations {
            passport,
            genus,
            faces,
        } => {
            let x = Passport::parse(&passport)?;
            let oracle = weighted_constellation_count(&x, genus, faces)?;
            if genus == 0 && faces == 1 {
                let formula = cacti_passport(&x, Variant::Corrected)?;
                let agree = formula == oracle;
                return agreement(
                    json!({"formula": rational(&formula), "oracle": rational(&oracle), "agree": agree}),
                    agree,
                );
            }
            Ok(json!({"oracle": rational(&oracle)}))
        }
        Count::OneN { sizes } => {
            let sizes = parse_sizes(&sizes)?;
            let oracle = weighted_1n_count(&sizes)?;
            let sum = constellations_1n_sum(&sizes)?;
            let k = sizes.len();
            let n = sizes.iter().sum::<usize>() - k - 1;
            let formula = BigRational::from_integer(constellations_1n_closed(k, n)?);
            let agree = formula == oracle && sum == oracle;
            agreement(
                json!({
                    "formula": rational(&formula),
                    "sum": rational(&sum),
                    "oracle": rational(&oracle),
                    "agree": agree,
                }),
                agree,
            )
        }
    }
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|s| {
            s.parse::<usize>()
                .ok()
                .filter(|&x| x >= 2)
                .ok_or_else(|| Failure::Usage(format!("bad size {s:?}")))
        })
        .collect()
}

fn volume(a: VolumeArgs) -> Outcome {
    let set = CircleSet::parse(&a.circles)?;
    if a.symbolic && !set.is_symbolic() {
        return Err(Failure::Usage("--symbolic needs symbolic lengths".into()));
    }
    if !a.symbolic && !set.is_numeric() {
        return Err(Failure::Usage(
            "numeric lengths expected; pass --symbolic for symbols".into(),
        ));
    }
    let query = TypeQuery {
        genus: Some(a.genus),
        faces: Some(a.faces),
        connected: true,
        ..TypeQuery::default()
    };
    let v = total_volume(&set, &query)?;
    let show = |p: &Polynomial| -> Value {
        if a.symbolic {
            serde_json::to_value(p).expect("polynomial serializes")
        } else {
            rational(&p.constant_term())
        }
    };
    if a.genus == 0 && a.faces == 1 {
        let formula = circle_cacti_multi(&set)?;
        let agree = formula == v;
        return agreement(
            json!({"volume": show(&v), "formula": show(&formula), "agree": agree}),
            agree,
        );
    }
    Ok(json!({"volume": show(&v)}))
}

fn expand(a: ExpandArgs, config: &Config) -> Outcome {
    if a.max_degree > config.max_degree {
        return Err(Failure::Usage(format!(
            "--max-degree {} exceeds the ceiling {}",
            a.max_degree, config.max_degree
        )));
    }
    let set = CircleSet::parse(&a.circles)?;
    let series = if a.with_n {
        big_f_series(&set, a.max_degree)?
    } else {
        f_series(&set, a.max_degree)?
    };
    Ok(serde_json::to_value(&series).expect("polynomial serializes"))
}

fn verify(a: VerifyArgs, config: &Config) -> Outcome {
    let budget = a.budget.unwrap_or(config.budget);
    let report = run_suite(a.suite, a.suite.scale_for(budget))?;
    for c in &report.checks {
        eprintln!(
            "{} {}: {} vs {}",
            if c.pass { "ok  " } else { "FAIL" },
            c.name,
            c.lhs,
            c.rhs
        );
    }
    let passed = report.checks.iter().filter(|c| c.pass).count();
    eprintln!(
        "suite {}: {passed}/{} checks pass",
        report.suite,
        report.checks.len()
    );
    agreement(
        serde_json::to_value(&report).expect("report serializes"),
        report.pass,
    )
}

fn run(cli: Cli) -> Outcome {
    let config = match &cli.config {
        Some(path) => Config::load(path).map_err(Failure::Usage)?,
        None => Config::default(),
    };
    if let Some(threads) = cli.threads.or(config.threads) {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .map_err(|e| Failure::Usage(e.to_string()))?;
    }
    match cli.command {
        Command::Count(c) => count(c),
        Command::Volume(a) => volume(a),
        Command::ExpandF(a) => expand(a, &config),
        Command::Verify(a) => verify(a, &config),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Value::Null) => ExitCode::SUCCESS,
        Ok(v) => {
            println!("{v}");
            ExitCode::SUCCESS
        }
        Err(Failure::Disagree) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

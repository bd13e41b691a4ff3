//! Argument parsing and dispatch.

use crate::commands::{self, TableRange};
use crate::engine::Engine;
use crate::family::Family;
use crate::parse::{parse_chain_set, parse_sign_word};
use crate::report::{EhrhartView, ErrorReport, Format, HStarView, Render};
use crate::verify::{verify, Scale};
use clap::{Args, CommandFactory, Parser, Subcommand};
use cyclic_polytope::polytope::LatticeCounter;
use std::ffi::OsString;

#[derive(Debug, Parser)]
#[command(
    name = "cpoly",
    version,
    about = "Ehrhart data of consecutive-sum polytopes, cross-checked against cyclic order counts"
)]
pub struct Cli {
    /// Output format; `boustrophedon` defaults to csv, everything else to json.
    #[arg(long, value_enum, global = true)]
    pub format: Option<Format>,
    /// Worker threads (0 picks one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Live states the lattice point counter may hold before it switches to a
    /// table-free search.
    #[arg(long = "dp-budget", value_name = "STATES", global = true, default_value_t = LatticeCounter::default().state_budget)]
    pub dp_budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    /// The polytope where every K consecutive coordinates sum to at most 1.
    #[arg(long, num_args = 2, value_names = ["K", "N"])]
    pub hat: Option<Vec<usize>>,
    /// Constraint pairs `i-j,...`; needs `--n`.
    #[arg(long, value_name = "PAIRS")]
    pub chainset: Option<String>,
    #[arg(long, value_name = "N")]
    pub n: Option<usize>,
    /// A word over `+` and `-`.
    #[arg(long, value_name = "SIGNS", allow_hyphen_values = true)]
    pub signword: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count circular extensions through every available pipeline.
    Count(FamilyArgs),
    /// h*-polynomial and palindromicity.
    Hstar(FamilyArgs),
    /// Ehrhart polynomial with rational coefficients.
    Ehrhart {
        #[command(flatten)]
        family: FamilyArgs,
        /// Also list lattice point counts of the dilations 0..=T.
        #[arg(long, value_name = "T")]
        dilations: Option<u64>,
    },
    /// List the cyclic orders of a class, or nondecreasing parking functions.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long, value_name = "N")]
        parking: Option<usize>,
    },
    /// Refined boustrophedon array, one row `i1,...,ik,value` per entry.
    Boustrophedon {
        #[arg(long, num_args = 2, value_names = ["K", "N"], required = true)]
        hat: Vec<usize>,
    },
    /// h*-polynomials of the hat family over a range of k and n.
    Table {
        #[arg(long, default_value_t = 1)]
        k_min: usize,
        #[arg(long, default_value_t = 7)]
        k_max: usize,
        /// Largest n - k.
        #[arg(long, default_value_t = 5)]
        col_max: usize,
        #[arg(long, default_value_t = 10)]
        n_max: usize,
    },
    /// Run the invariant suite.
    Verify {
        #[arg(long, value_enum, default_value = "small")]
        scale: Scale,
    },
}

/// Exit code and text produced by one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Self {
            code: if passed { 0 } else { 1 },
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(message: impl std::fmt::Display) -> Self {
        let usage = Cli::command().render_usage();
        Self {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {message}\n\n{usage}\n"),
        }
    }
}

impl FamilyArgs {
    fn given(&self) -> bool {
        self.hat.is_some() || self.chainset.is_some() || self.signword.is_some()
    }

    fn resolve(&self) -> Result<Family, String> {
        let chosen = [
            self.hat.is_some(),
            self.chainset.is_some(),
            self.signword.is_some(),
        ];
        if chosen.iter().filter(|&&c| c).count() != 1 {
            return Err("choose exactly one of --hat, --chainset, --signword".to_string());
        }
        if self.n.is_some() && self.chainset.is_none() {
            return Err("--n only applies to --chainset".to_string());
        }
        if let Some(kn) = &self.hat {
            return Family::hat(kn[0], kn[1]).map_err(|e| e.to_string());
        }
        if let Some(text) = &self.chainset {
            let n = self.n.ok_or("--chainset needs --n")?;
            return parse_chain_set(text, n)
                .map(Family::Chain)
                .map_err(|e| e.to_string());
        }
        let text = self.signword.as_deref().unwrap_or_default();
        parse_sign_word(text)
            .map(Family::Sign)
            .map_err(|e| e.to_string())
    }
}

fn failure(e: impl std::fmt::Display, format: Format) -> Outcome {
    Outcome {
        code: 1,
        stdout: ErrorReport {
            error: e.to_string(),
        }
        .render(format),
        stderr: String::new(),
    }
}

fn dispatch(command: &Command, engine: &Engine, format: Option<Format>) -> Outcome {
    let fmt = format.unwrap_or(Format::Json);
    macro_rules! family {
        ($args:expr) => {
            match $args.resolve() {
                Ok(f) => f,
                Err(e) => return Outcome::usage(e),
            }
        };
    }
    match command {
        Command::Count(args) => {
            let family = family!(args);
            match commands::count(engine, &family) {
                Ok(r) => Outcome::ok(r.render(fmt), r.passed()),
                Err(e) => failure(e, fmt),
            }
        }
        Command::Hstar(args) => {
            let family = family!(args);
            match commands::polytope(engine, &family, None) {
                Ok(r) => Outcome::ok(HStarView(&r).render(fmt), true),
                Err(e) => failure(e, fmt),
            }
        }
        Command::Ehrhart { family, dilations } => {
            let family = family!(family);
            match commands::polytope(engine, &family, *dilations) {
                Ok(r) => Outcome::ok(EhrhartView(&r).render(fmt), true),
                Err(e) => failure(e, fmt),
            }
        }
        Command::Enumerate { family, parking } => match (parking, family.given()) {
            (Some(n), false) => {
                Outcome::ok(commands::enumerate_parking_functions(*n).render(fmt), true)
            }
            (Some(_), true) => {
                Outcome::usage("--parking cannot be combined with a polytope family")
            }
            (None, _) => {
                let family = family!(family);
                match commands::enumerate_orders(engine, &family) {
                    Ok(r) => Outcome::ok(r.render(fmt), true),
                    Err(e) => Outcome::usage(e),
                }
            }
        },
        Command::Boustrophedon { hat } => {
            let (k, n) = (hat[0], hat[1]);
            if !(2 <= k && k <= n) {
                return Outcome::usage(format!(
                    "boustrophedon needs 2 <= K <= N, got K={k}, N={n}"
                ));
            }
            match commands::boustrophedon(k, n) {
                Ok(r) => Outcome::ok(
                    r.render(format.unwrap_or(Format::Csv)),
                    r.discrepancies.is_empty(),
                ),
                Err(e) => failure(e, fmt),
            }
        }
        Command::Table {
            k_min,
            k_max,
            col_max,
            n_max,
        } => {
            let range = TableRange {
                k_min: *k_min,
                k_max: *k_max,
                col_max: *col_max,
                n_max: *n_max,
            };
            match commands::table(engine, range) {
                Ok(r) => Outcome::ok(r.render(fmt), r.all_match),
                Err(e) => failure(e, fmt),
            }
        }
        Command::Verify { scale } => {
            let r = verify(engine, *scale);
            Outcome::ok(r.render(fmt), r.passed)
        }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let mut text = e.render().to_string();
            if !e.use_stderr() {
                return Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                };
            }
            if !text.contains("Usage:") {
                text.push_str(&format!("\n{}\n", Cli::command().render_usage()));
            }
            return Outcome {
                code: 2,
                stdout: String::new(),
                stderr: text,
            };
        }
    };
    let engine = Engine::new(cli.threads, cli.dp_budget.max(1));
    engine.install(|| dispatch(&cli.command, &engine, cli.format))
}

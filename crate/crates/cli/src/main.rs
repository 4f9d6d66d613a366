use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cohomlab_core::algebra::Parity;
use cohomlab_core::graded::View;
use cohomlab_core::report::{self, Format, Rep, RunConfig, Space, Suite};
use cohomlab_core::Error;

#[derive(Parser)]
#[command(
    name = "cohomlab",
    version,
    about = "Symmetric group actions on the cohomology of configuration spaces"
)]
struct Cli {
    /// JSON file caching character tables between runs.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree-by-degree decomposition into irreducibles.
    Table(Common),
    /// Run verification suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = report::DEFAULT_SUITE_MAX_N)]
        max_n: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
    /// Multiplicity of the standard, sign or standard⊗sign representation per degree.
    Locate {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        rep: RepArg,
    },
    /// The antisymmetrizer spanning the sign representation (d odd).
    Antisym(Common),
    /// Graded dimensions, optionally of the S_{n-1}-invariants.
    Dims {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        quotient: bool,
    },
    /// Character table of S_n, or one named or irreducible character.
    Character {
        #[arg(long)]
        n: usize,
        /// trivial, sign, standard, regular, or a partition such as "(3,1)".
        #[arg(long)]
        name: Option<String>,
        #[arg(long, value_enum, default_value_t = FormatArg::Text)]
        format: FormatArg,
    },
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value_t = ParityArg::Odd)]
    parity: ParityArg,
    #[arg(long, value_enum, default_value_t = SpaceArg::Conf)]
    space: SpaceArg,
    #[arg(long, value_enum, default_value_t = ViewArg::Canonical)]
    view: ViewArg,
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ParityArg {
    Even,
    Odd,
}

#[derive(Clone, Copy, ValueEnum)]
enum SpaceArg {
    Conf,
    Deconed,
}

#[derive(Clone, Copy, ValueEnum)]
enum ViewArg {
    Canonical,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum RepArg {
    Standard,
    Sign,
    StandardSign,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Tables,
    Global,
    Extended,
    Rewriting,
    Location,
    Lowdegree,
    Characters,
    All,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        }
    }
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Global => Suite::Global,
            SuiteArg::Extended => Suite::Extended,
            SuiteArg::Rewriting => Suite::Rewriting,
            SuiteArg::Location => Suite::Location,
            SuiteArg::Lowdegree => Suite::Lowdegree,
            SuiteArg::Characters => Suite::Characters,
            SuiteArg::All => Suite::All,
        }
    }
}

impl From<RepArg> for Rep {
    fn from(r: RepArg) -> Self {
        match r {
            RepArg::Standard => Rep::Standard,
            RepArg::Sign => Rep::Sign,
            RepArg::StandardSign => Rep::StandardSign,
        }
    }
}

impl Common {
    fn config(&self, quotient: bool) -> RunConfig {
        RunConfig {
            n: self.n,
            parity: match self.parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            },
            space: match self.space {
                SpaceArg::Conf => Space::Conf,
                SpaceArg::Deconed => Space::Deconed,
            },
            view: match self.view {
                ViewArg::Canonical => View::Canonical,
                ViewArg::Extended => View::Extended,
            },
            format: self.format.into(),
            quotient,
            ..RunConfig::default()
        }
    }
}

/// Exit code 1 is reserved for failed checks; everything else a caller can
/// fix by changing the arguments is a usage error.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::NotGenuine { .. } => 1,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<(String, bool), Error> {
    match cli.command {
        Command::Table(c) => Ok((report::cmd_table(&c.config(false))?, true)),
        Command::Locate { common, rep } => {
            Ok((report::cmd_locate(&common.config(false), rep.into())?, true))
        }
        Command::Antisym(c) => {
            let out = report::cmd_antisym(&c.config(false))?;
            Ok((out, true))
        }
        Command::Dims { common, quotient } => {
            Ok((report::cmd_dims(&common.config(quotient))?, true))
        }
        Command::Character { n, name, format } => Ok((
            report::cmd_character(n, name.as_deref(), format.into())?,
            true,
        )),
        Command::Verify {
            suite,
            max_n,
            format,
        } => {
            let r = report::run_suite(suite.into(), max_n)?;
            Ok((report::render_report(&r, format.into()), r.all_passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cli.cache.clone();
    if let Some(path) = &cache {
        if let Err(e) = report::load_cache(path) {
            eprintln!("warning: ignoring cache {}: {e}", path.display());
        }
    }
    let result = run(cli);
    if let Some(path) = &cache {
        if let Err(e) = report::save_cache(path, report::HARD_MAX_N) {
            eprintln!("warning: could not write cache {}: {e}", path.display());
        }
    }
    match result {
        Ok((out, passed)) => {
            print!("{out}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

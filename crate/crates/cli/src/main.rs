use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use conjq_cli::{
    cmd_check, cmd_classes, cmd_product_check, cmd_survey, cmd_witness, CheckOptions, CliError,
    ExitStatus, GroupSource, Outcome, QuandleSpec, SurveyConfig,
};

/// Conjugation quandles of finite groups: connectedness, the Hayashi
/// property and good classes.
#[derive(Debug, Parser)]
#[command(name = "conjq", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List conjugacy classes with sizes and element orders.
    Classes {
        #[command(flatten)]
        group: GroupArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Build Cl_G(e) and report connectedness, Hayashi and goodness.
    Check {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_name = "CYCLES")]
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Explicit witness in a symmetric or alternating group of degree >= 5.
    Witness {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_name = "CYCLES")]
        element: String,
        #[command(flatten)]
        common: Common,
    },
    /// Check every class of every group in the given sources.
    Survey {
        /// `standard`, a family name (`cyclic`, `dihedral`, ...), a catalog
        /// spec, or `file:PATH`. Repeatable.
        #[arg(long = "catalog", value_name = "SOURCE")]
        catalog: Vec<String>,
        /// Group file; repeatable.
        #[arg(long = "file", value_name = "PATH")]
        file: Vec<PathBuf>,
        #[arg(long, default_value_t = 500)]
        max_order: usize,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Hayashi property of a product of two class quandles.
    ProductCheck {
        /// `SOURCE@CYCLES`, e.g. `symmetric:3@(1 2)`.
        left: String,
        right: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Args)]
struct GroupArgs {
    /// Catalog group, e.g. `symmetric:5`, `dihedral:10`, `cyclic:2*cyclic:3`.
    #[arg(
        long,
        value_name = "FAMILY:PARAM",
        conflicts_with = "file",
        required_unless_present = "file"
    )]
    catalog: Option<String>,
    /// Group file (see docs/group-file-format.md).
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl GroupArgs {
    fn source(&self) -> Result<GroupSource, CliError> {
        match (&self.catalog, &self.file) {
            (Some(spec), _) => Ok(GroupSource::Catalog(spec.parse()?)),
            (None, Some(path)) => Ok(GroupSource::File(path.clone())),
            (None, None) => Err(CliError::Usage("give --catalog or --file".into())),
        }
    }
}

#[derive(Debug, Args)]
struct Common {
    /// Enumeration bound for groups and orbits.
    #[arg(long, default_value_t = conjq_core::group::DEFAULT_BOUND)]
    bound: usize,
    /// Run every cross-check.
    #[arg(long)]
    audit: bool,
    /// Seed for sampled checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Write the JSON report here.
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Write the CSV summary here.
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
}

impl Common {
    fn options(&self) -> CheckOptions {
        CheckOptions {
            bound: self.bound,
            audit: self.audit,
            seed: self.seed,
        }
    }
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|e| CliError::Output {
        path: path.display().to_string(),
        message: e.to_string(),
    })
}

fn run(cli: Cli) -> Result<(Outcome, Common), CliError> {
    match cli.command {
        Command::Classes { group, common } => {
            Ok((cmd_classes(&group.source()?, common.bound)?, common))
        }
        Command::Check {
            group,
            element,
            common,
        } => Ok((
            cmd_check(&group.source()?, &element, common.options())?,
            common,
        )),
        Command::Witness {
            group,
            element,
            common,
        } => Ok((
            cmd_witness(&group.source()?, &element, common.options())?,
            common,
        )),
        Command::Survey {
            catalog,
            file,
            max_order,
            jobs,
            common,
        } => {
            let mut names = catalog;
            names.extend(file.iter().map(|p| format!("file:{}", p.display())));
            let mut config = SurveyConfig::new(&names, max_order, common.bound)?;
            config.audit = common.audit;
            config.seed = common.seed;
            config.jobs = jobs;
            Ok((cmd_survey(&config)?, common))
        }
        Command::ProductCheck {
            left,
            right,
            common,
        } => {
            let (left, right): (QuandleSpec, QuandleSpec) = (left.parse()?, right.parse()?);
            Ok((cmd_product_check(&left, &right, common.options())?, common))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                ExitStatus::Usage as u8
            } else {
                0
            });
        }
    };
    let result = run(cli).and_then(|(outcome, common)| {
        if let Some(path) = &common.json {
            write(path, &outcome.envelope.to_json())?;
        }
        if let Some(path) = &common.csv {
            let text = outcome.csv().map_err(|e| CliError::Output {
                path: path.display().to_string(),
                message: e.to_string(),
            })?;
            write(path, &text)?;
        }
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            print!("{}", outcome.summary);
            ExitCode::from(outcome.status as u8)
        }
        Err(e) => {
            eprintln!("conjq: {e}");
            ExitCode::from(e.exit_status() as u8)
        }
    }
}

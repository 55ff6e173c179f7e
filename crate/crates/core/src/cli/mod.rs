//! Command-line front end.

mod commands;
mod config;
mod inputs;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{cmd_check, cmd_roundtrip, cmd_uml2vdm, cmd_vdm2uml, default_puml_path};
pub use config::{load_config, ConfigFlags, UsageError, ENV_GAMMA0, ENV_GAMMA1};
pub use report::{RunReport, EXIT_FAILURE, EXIT_IO, EXIT_OK, EXIT_USAGE};

use crate::model::Ordering;

#[derive(Debug, Parser)]
#[command(
    name = "vdmuml",
    version,
    about = "Translate between VDM++ and PlantUML class diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Translate .vdmpp files or directories into one .puml diagram
    Vdm2uml {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Translate a .puml diagram into skeleton .vdmpp files, one per class
    Uml2vdm {
        input: PathBuf,
        /// Output directory, default is the directory of the input
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Translate to UML and back and compare each class
    Roundtrip {
        #[arg(required = true)]
        inputs: Vec<PathBuf>,
        #[command(flatten)]
        config: ConfigArgs,
    },
    /// Parse and validate a .vdmpp file, a directory or a .puml file
    Check { input: PathBuf },
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Capacity of set, seq and optional types (maps get twice this)
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    gamma0: Option<String>,
    /// Capacity of product and union types
    #[arg(long, value_name = "N", allow_hyphen_values = true)]
    gamma1: Option<String>,
    #[arg(long, value_enum)]
    ordering: Option<OrderingArg>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum OrderingArg {
    Input,
    Alpha,
}

impl ConfigArgs {
    fn flags(&self) -> ConfigFlags {
        ConfigFlags {
            gamma0: self.gamma0.clone(),
            gamma1: self.gamma1.clone(),
            ordering: self.ordering.map(|o| match o {
                OrderingArg::Input => Ordering::InputOrder,
                OrderingArg::Alpha => Ordering::Alphabetical,
            }),
        }
    }
}

/// Runs one invocation. `args` includes the program name; `env` looks up
/// environment variables.
pub fn run<I, T, E>(args: I, env: E) -> RunReport
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
    E: Fn(&str) -> Option<String>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let mut report = RunReport::default();
            let text = e.render().to_string();
            return if e.use_stderr() {
                report.diag(text.trim_end());
                report.finish(EXIT_USAGE)
            } else {
                report.say(text.trim_end());
                report.finish(EXIT_OK)
            };
        }
    };
    let config = |c: &ConfigArgs| {
        load_config(&c.flags(), &env).map_err(|e| {
            let mut report = RunReport::default();
            report.diag(format!("error: {e}"));
            report.finish(EXIT_USAGE)
        })
    };
    match cli.command {
        Command::Vdm2uml {
            inputs,
            output,
            config: c,
        } => match config(&c) {
            Ok(cfg) => cmd_vdm2uml(&inputs, output.as_deref(), &cfg),
            Err(r) => r,
        },
        Command::Uml2vdm { input, output } => cmd_uml2vdm(&input, output.as_deref()),
        Command::Roundtrip { inputs, config: c } => match config(&c) {
            Ok(cfg) => cmd_roundtrip(&inputs, &cfg),
            Err(r) => r,
        },
        Command::Check { input } => cmd_check(&input),
    }
}

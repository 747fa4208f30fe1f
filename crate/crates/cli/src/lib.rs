//! The `hopfkit` command line: parse a job, run the requested checks, render a report.

pub mod commands;
pub mod job;
pub mod report;

use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use hopfkit_core::exactlin::Field;

pub use job::{Command, Format, InputError, JobSpec};
pub use report::{reverify_witnesses, Outcome, Report, Status};

pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "hopfkit",
    version,
    about = "Exact checks for Hopf monads on finite structures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Check the bialgebra or comonoid axioms.
    Validate(JobArgs),
    /// Decide whether a bialgebra is Hopf by five equivalent criteria.
    Hopf(JobArgs),
    /// Solve for the antipode.
    Antipode(JobArgs),
    /// Fusion operators, opmonoidal structure and pre-Hopf decisions.
    Fusion(JobArgs),
    /// Entwinings with the bundled comonoids.
    Entwine(JobArgs),
    /// Entwined modules, coinvariants and the fundamental theorem.
    Hopfmod(JobArgs),
    /// Galois grouplike elements.
    Galois(JobArgs),
    /// Monads on finite sets and presheaves.
    Finset(JobArgs),
    /// List bundled inputs.
    ListCorpus {
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print a bundled input in file form.
    Export { name: String },
}

#[derive(Debug, Args)]
pub struct JobArgs {
    /// Input file, or the name of a bundled input.
    pub input: String,
    /// Reinterpret structure constants over `Q` or `Fp:<p>`.
    #[arg(long)]
    pub field: Option<String>,
    /// Largest dimension of test objects `V`.
    #[arg(long, default_value_t = job::DEFAULT_DIM_BOUND)]
    pub dim_bound: usize,
    /// Skeleton bound for finite-set monads, or largest set in the presheaf inventory.
    #[arg(long)]
    pub max: Option<usize>,
    /// Raise the bialgebra dimension cap or the presheaf poset cap.
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Include wall-clock time in the report.
    #[arg(long)]
    pub timing: bool,
}

impl JobArgs {
    pub fn into_job(self, command: Command) -> Result<JobSpec, InputError> {
        let field = self
            .field
            .map(|s| {
                s.parse::<Field>()
                    .map_err(|e| InputError(format!("--field: {e}")))
            })
            .transpose()?;
        if self.dim_bound == 0 {
            return Err(InputError("--dim-bound must be positive".into()));
        }
        if self.max == Some(0) {
            return Err(InputError("--max must be positive".into()));
        }
        Ok(JobSpec {
            command,
            input: self.input,
            field,
            dim_bound: self.dim_bound,
            max: self.max,
            cap: self.cap,
            format: self.format,
            timing: self.timing,
        })
    }
}

/// Runs a job; input problems are reported as errors, everything else as a report.
pub fn run(job: &JobSpec) -> Result<Report, InputError> {
    let start = Instant::now();
    let entry = job::resolve(job)?;
    let mut report = Report::new(job.echo());
    let r = &mut report;
    match job.command {
        Command::Validate => commands::validate(job, entry, r),
        Command::Hopf => commands::hopf(job, entry, r),
        Command::Antipode => commands::antipode(job, entry, r),
        Command::Fusion => commands::fusion(job, entry, r),
        Command::Entwine => commands::entwine(job, entry, r),
        Command::Hopfmod => commands::hopfmod(job, entry, r),
        Command::Galois => commands::galois(job, entry, r),
        Command::Finset => commands::finset(job, entry, r),
    }?;
    if job.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Rendered output and exit code.
pub struct Invocation {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Text => report.to_text(),
        Format::Machine => report.to_machine(),
    }
}

/// Parses arguments (program name first) and runs them.
pub fn invoke<I, T>(args: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return Invocation {
                code,
                stdout,
                stderr,
            };
        }
    };
    let (command, args) = match cli.command {
        CliCommand::ListCorpus { format } => {
            let names = hopfkit_core::corpus::names();
            let stdout = match format {
                Format::Text => names.iter().map(|n| format!("{n}\n")).collect(),
                Format::Machine => {
                    let mut s = serde_json::to_string_pretty(&names).expect("names serialize");
                    s.push('\n');
                    s
                }
            };
            return Invocation {
                code: 0,
                stdout,
                stderr: String::new(),
            };
        }
        CliCommand::Export { name } => {
            return match hopfkit_core::corpus::load(&name) {
                Some(entry) => Invocation {
                    code: 0,
                    stdout: entry.to_json() + "\n",
                    stderr: String::new(),
                },
                None => Invocation {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: format!("input error: {name}: no bundled corpus entry\n"),
                },
            };
        }
        CliCommand::Validate(a) => (Command::Validate, a),
        CliCommand::Hopf(a) => (Command::Hopf, a),
        CliCommand::Antipode(a) => (Command::Antipode, a),
        CliCommand::Fusion(a) => (Command::Fusion, a),
        CliCommand::Entwine(a) => (Command::Entwine, a),
        CliCommand::Hopfmod(a) => (Command::Hopfmod, a),
        CliCommand::Galois(a) => (Command::Galois, a),
        CliCommand::Finset(a) => (Command::Finset, a),
    };
    match args
        .into_job(command)
        .and_then(|job| run(&job).map(|r| (job, r)))
    {
        Ok((job, report)) => Invocation {
            code: report.outcome().exit_code(),
            stdout: render(&report, job.format),
            stderr: String::new(),
        },
        Err(e) => Invocation {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("{e}\n"),
        },
    }
}

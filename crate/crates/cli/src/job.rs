//! Jobs and input resolution.

use std::path::Path;

use clap::ValueEnum;
use hopfkit_core::bialgebra::{Bialgebra, StructureFile};
use hopfkit_core::corpus::{self, CorpusEntry};
use hopfkit_core::exactlin::Field;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Validate,
    Hopf,
    Antipode,
    Fusion,
    Entwine,
    Hopfmod,
    Galois,
    Finset,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::Hopf => "hopf",
            Command::Antipode => "antipode",
            Command::Fusion => "fusion",
            Command::Entwine => "entwine",
            Command::Hopfmod => "hopfmod",
            Command::Galois => "galois",
            Command::Finset => "finset",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Text,
    Machine,
}

pub const DEFAULT_DIM_BOUND: usize = 2;
pub const BIALGEBRA_DIM_CAP: usize = 12;
pub const POSET_CAP: usize = 4;
/// Default skeleton for finite-set monads.
pub const DEFAULT_SKELETON: usize = 3;
/// Default largest set in the presheaf inventory.
pub const DEFAULT_PRESHEAF_SET: usize = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub input: String,
    pub field: Option<Field>,
    pub dim_bound: usize,
    pub max: Option<usize>,
    /// Overrides the bialgebra dimension cap and the presheaf poset cap.
    pub cap: Option<usize>,
    pub format: Format,
    pub timing: bool,
}

impl JobSpec {
    pub fn new(command: Command, input: impl Into<String>) -> Self {
        JobSpec {
            command,
            input: input.into(),
            field: None,
            dim_bound: DEFAULT_DIM_BOUND,
            max: None,
            cap: None,
            format: Format::Machine,
            timing: false,
        }
    }

    pub fn echo(&self) -> JobEcho {
        JobEcho {
            command: self.command.name().to_string(),
            input: self.input.clone(),
            field: self.field.map(|f| f.to_string()),
            dim_bound: self.dim_bound,
            max: self.max,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JobEcho {
    pub command: String,
    pub input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    pub dim_bound: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max: Option<usize>,
}

/// Input problems: unreadable files, parse errors, or inputs the command cannot take.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("input error: {0}")]
pub struct InputError(pub String);

/// Loads `input` as a file if one exists at that path, otherwise as a bundled corpus name,
/// then applies a `--field` override to structure-constant inputs.
pub fn resolve(job: &JobSpec) -> Result<CorpusEntry, InputError> {
    let path = Path::new(&job.input);
    let entry = if path.is_file() {
        let text =
            std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", job.input)))?;
        corpus::parse_input(&text).map_err(|e| InputError(format!("{}: {e}", job.input)))?
    } else {
        corpus::load(&job.input).ok_or_else(|| {
            InputError(format!(
                "{}: no such file or bundled corpus entry",
                job.input
            ))
        })?
    };
    match (job.field, entry) {
        (None, entry) => Ok(entry),
        (Some(_), CorpusEntry::Monad(_)) => {
            Err(InputError("--field does not apply to monad inputs".into()))
        }
        (Some(f), CorpusEntry::Bialgebra(b)) => {
            let file = StructureFile {
                field: f,
                ..b.to_file()
            };
            file.to_bialgebra()
                .map(CorpusEntry::Bialgebra)
                .map_err(|e| InputError(format!("reading over {f}: {e}")))
        }
        (Some(f), CorpusEntry::Comonoid(c)) => {
            let file = StructureFile {
                field: f,
                ..c.to_file()
            };
            file.to_comonoid()
                .map(CorpusEntry::Comonoid)
                .map_err(|e| InputError(format!("reading over {f}: {e}")))
        }
    }
}

/// A bialgebra input within the dimension cap that satisfies every axiom.
pub fn require_bialgebra(job: &JobSpec, entry: CorpusEntry) -> Result<Bialgebra, InputError> {
    let CorpusEntry::Bialgebra(b) = entry else {
        return Err(InputError(format!(
            "{} needs a bialgebra input",
            job.command.name()
        )));
    };
    let cap = job.cap.unwrap_or(BIALGEBRA_DIM_CAP);
    if b.dim() > cap {
        return Err(InputError(format!(
            "dimension {} exceeds the cap {cap} (raise it with --cap)",
            b.dim()
        )));
    }
    let report = b.validate();
    if !report.all_pass() {
        let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
        return Err(InputError(format!(
            "not a bialgebra: {} fails (run validate for witnesses)",
            failed.join(", ")
        )));
    }
    Ok(b)
}

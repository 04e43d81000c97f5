//! Command line: argument parsing, dispatch and exit codes.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use polardeg_core::polar::{cone_apex_set, pol_degree};
use polardeg_core::transversality::{check_admissible, hyperplane_in_hypersurface, special_points};
use polardeg_core::{Error, LinearForm};

use crate::input::{parse_hyperplane, parse_input, InputError, InputSpec};
use crate::pipeline::{decompose, prepare, Settings};
use crate::report::{self, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_NOT_ADMISSIBLE: i32 = 2;
pub const EXIT_GENERICITY: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_INPUT: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "polardeg", version, about = "Polar degree of projective hypersurfaces and its decomposition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Input file with `vars:` and `f:` lines
    #[arg(short = 'f', long = "file")]
    pub file: PathBuf,
    /// Base seed for generic choices (overrides the file)
    #[arg(long)]
    pub seed: Option<u64>,
    /// Agreeing seeds required for a generic value (overrides the file)
    #[arg(long)]
    pub trials: Option<usize>,
    /// Emit JSON instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Polar degree of {f = 0}
    Pol(Common),
    /// pol = alpha + beta for a hyperplane
    Decompose {
        #[command(flatten)]
        common: Common,
        /// Linear form defining the hyperplane (overrides the file)
        #[arg(long)]
        hyperplane: Option<String>,
        /// Print per-stage timings to stderr
        #[arg(long)]
        timings: bool,
    },
    /// Points with positive generic sectional Milnor number
    SpecialPoints(Common),
    /// Whether f is a cone, with its apex space
    IsCone(Common),
    /// Admissibility of a hyperplane
    Admissible {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        hyperplane: Option<String>,
    },
}

/// What a run produced.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, message: impl Into<String>) -> Self {
        let mut stderr = message.into();
        stderr.push('\n');
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::GenericityFailure(_) => EXIT_GENERICITY,
        Error::NonAdmissible(_) | Error::HyperplaneInHypersurface => EXIT_NOT_ADMISSIBLE,
        Error::Parse { .. } | Error::NotLinear(_) | Error::ZeroForm | Error::NotHomogeneous => EXIT_INPUT,
        _ => EXIT_FAILURE,
    }
}

fn core_error(e: Error) -> Outcome {
    Outcome::error(exit_code(&e), format!("error: {e}"))
}

fn load(common: &Common) -> Result<(InputSpec, Settings), Outcome> {
    let text = std::fs::read_to_string(&common.file)
        .map_err(|e| Outcome::error(EXIT_INPUT, format!("error: cannot read {}: {e}", common.file.display())))?;
    let spec = parse_input(&text).map_err(|e| {
        let msg = match &e {
            InputError::Syntax { .. } => format!("error: {}: {e}", common.file.display()),
            InputError::Invalid(_) => format!("error: {}: {e}", common.file.display()),
        };
        Outcome::error(EXIT_INPUT, msg)
    })?;
    let mut settings = Settings::for_input(&spec).map_err(|m| Outcome::error(EXIT_INPUT, format!("error: {m}")))?;
    if let Some(s) = common.seed {
        settings.seed = s;
    }
    if let Some(t) = common.trials {
        if t == 0 {
            return Err(Outcome::error(EXIT_INPUT, "error: --trials must be positive"));
        }
        settings.trials = t;
    }
    Ok((spec, settings))
}

fn hyperplane(spec: &InputSpec, arg: &Option<String>) -> Result<LinearForm, Outcome> {
    match (arg, &spec.hyperplane) {
        (Some(expr), _) => parse_hyperplane(expr, &spec.ring)
            .map_err(|e| Outcome::error(EXIT_INPUT, format!("error: --hyperplane: {e}"))),
        (None, Some(h)) => Ok(h.clone()),
        (None, None) => Err(Outcome::error(
            EXIT_INPUT,
            "error: a hyperplane is required (--hyperplane or a 'hyperplane:' line)",
        )),
    }
}

fn format_of(common: &Common) -> Format {
    if common.json {
        Format::Json
    } else {
        Format::Text
    }
}

pub fn run(cli: Cli) -> Outcome {
    match execute(cli) {
        Ok(o) | Err(o) => o,
    }
}

fn execute(cli: Cli) -> Result<Outcome, Outcome> {
    match cli.command {
        Command::Pol(common) => {
            let (spec, settings) = load(&common)?;
            let engine = settings.engine();
            let prepared = prepare(&engine, &spec.f).map_err(core_error)?;
            let pol = pol_degree(&engine, &prepared.f, settings.seed, settings.trials).map_err(core_error)?;
            Ok(Outcome::ok(match format_of(&common) {
                Format::Json => report::render_json(&report::pol_json(&pol, prepared.reduced, settings.seed)),
                Format::Text => report::pol_text(&pol, prepared.reduced),
            }))
        }
        Command::Decompose {
            common,
            hyperplane: h,
            timings,
        } => {
            let (spec, settings) = load(&common)?;
            let form = hyperplane(&spec, &h)?;
            let engine = settings.engine();
            let prepared = prepare(&engine, &spec.f).map_err(core_error)?;
            let r = decompose(&engine, &prepared, &form, &settings).map_err(core_error)?;
            let stdout = match format_of(&common) {
                Format::Json => report::render_json(&report::decomposition_json(&r)),
                Format::Text => report::decomposition_text(&r),
            };
            let mut stderr = String::new();
            if timings {
                for (stage, d) in &r.timings {
                    stderr.push_str(&format!("{stage}: {:.3} s\n", d.as_secs_f64()));
                }
            }
            let code = if !r.admissible() {
                EXIT_NOT_ADMISSIBLE
            } else if r.failed() {
                stderr.push_str("error: a consistency check FAILED, see the report\n");
                EXIT_FAILURE
            } else {
                EXIT_OK
            };
            Ok(Outcome { code, stdout, stderr })
        }
        Command::SpecialPoints(common) => {
            let (spec, settings) = load(&common)?;
            let engine = settings.engine();
            let prepared = prepare(&engine, &spec.f).map_err(core_error)?;
            let s = special_points(&engine, &prepared.f, settings.seed).map_err(core_error)?;
            Ok(Outcome::ok(match format_of(&common) {
                Format::Json => report::render_json(&report::special_points_json(&s)),
                Format::Text => report::special_points_text(&s),
            }))
        }
        Command::IsCone(common) => {
            let (spec, settings) = load(&common)?;
            let engine = settings.engine();
            let prepared = prepare(&engine, &spec.f).map_err(core_error)?;
            let c = cone_apex_set(&prepared.f).map_err(core_error)?;
            Ok(Outcome::ok(match format_of(&common) {
                Format::Json => report::render_json(&report::cone_json(&c)),
                Format::Text => report::cone_text(&c),
            }))
        }
        Command::Admissible { common, hyperplane: h } => {
            let (spec, settings) = load(&common)?;
            let form = hyperplane(&spec, &h)?;
            let engine = settings.engine();
            let prepared = prepare(&engine, &spec.f).map_err(core_error)?;
            if hyperplane_in_hypersurface(&prepared.f, &form).map_err(core_error)? {
                return Err(core_error(Error::HyperplaneInHypersurface));
            }
            let a = check_admissible(&engine, &prepared.f, &form).map_err(core_error)?;
            let stdout = match format_of(&common) {
                Format::Json => report::render_json(&report::admissibility_json(&a, &prepared.f)),
                Format::Text => report::admissibility_text(&a, &prepared.f),
            };
            let code = if a.is_admissible() { EXIT_OK } else { EXIT_NOT_ADMISSIBLE };
            Ok(Outcome {
                code,
                stdout,
                stderr: String::new(),
            })
        }
    }
}

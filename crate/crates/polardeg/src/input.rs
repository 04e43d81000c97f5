//! Input files.
//!
//! ```text
//! # comment
//! vars: x y z
//! f: x*(x*y + z^2)
//! hyperplane: z
//! point: [0;1;0]
//! seed: 7
//! trials: 3
//! ```
//!
//! Only `f:` is required. Without `vars:` the variables are taken in order of
//! first appearance in `f`.

use polardeg_core::parse::identifiers;
use polardeg_core::{parse_linear_form, parse_polynomial, Error, LinearForm, Polynomial, Rational, Ring};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum InputError {
    #[error("line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Invalid(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InputSpec {
    pub ring: Ring,
    /// As written in the file.
    pub f: Polynomial,
    pub hyperplane: Option<LinearForm>,
    pub point: Option<Vec<Rational>>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
}

impl InputSpec {
    pub fn degree(&self) -> u32 {
        self.f.degree().unwrap_or(0)
    }

    /// `n` of the ambient `P^n`.
    pub fn projective_dim(&self) -> usize {
        self.ring.nvars() - 1
    }
}

#[derive(Default)]
struct Fields<'a> {
    vars: Option<(usize, usize, &'a str)>,
    f: Option<(usize, usize, &'a str)>,
    hyperplane: Option<(usize, usize, &'a str)>,
    point: Option<(usize, usize, &'a str)>,
    seed: Option<(usize, usize, &'a str)>,
    trials: Option<(usize, usize, &'a str)>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> InputError {
    InputError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Maps a core parse error inside a value that starts at `column` of `line`.
fn located(e: Error, line: usize, column: usize) -> InputError {
    match e {
        Error::Parse { column: c, message, .. } => syntax(line, column + c - 1, message),
        other => syntax(line, column, other.to_string()),
    }
}

fn split_fields(text: &str) -> Result<Fields<'_>, InputError> {
    let mut fields = Fields::default();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let Some(colon) = content.find(':') else {
            let col = content.len() - content.trim_start().len() + 1;
            return Err(syntax(line, col, "expected 'key: value'"));
        };
        let key = content[..colon].trim();
        let rest = &content[colon + 1..];
        let value = rest.trim();
        let lead = rest.len() - rest.trim_start().len();
        let column = content[..colon + 1 + lead].chars().count() + 1;
        let slot = match key {
            "vars" => &mut fields.vars,
            "f" => &mut fields.f,
            "hyperplane" => &mut fields.hyperplane,
            "point" => &mut fields.point,
            "seed" => &mut fields.seed,
            "trials" => &mut fields.trials,
            _ => {
                let col = content.len() - content.trim_start().len() + 1;
                return Err(syntax(line, col, format!("unknown key '{key}'")));
            }
        };
        if slot.is_some() {
            return Err(syntax(line, 1, format!("duplicate key '{key}'")));
        }
        *slot = Some((line, column, value));
    }
    Ok(fields)
}

fn parse_vars(line: usize, column: usize, value: &str) -> Result<Ring, InputError> {
    let names: Vec<&str> = value
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .collect();
    if names.is_empty() {
        return Err(syntax(line, column, "no variables given"));
    }
    for (i, name) in names.iter().enumerate() {
        let ok = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !ok {
            return Err(syntax(line, column, format!("invalid variable name '{name}'")));
        }
        if names[..i].contains(name) {
            return Err(syntax(line, column, format!("variable '{name}' listed twice")));
        }
    }
    Ok(Ring::new(&names))
}

fn parse_rational(token: &str) -> Option<Rational> {
    let empty: [&str; 0] = [];
    let p = parse_polynomial(token, &Ring::new(&empty)).ok()?;
    Some(p.constant_term())
}

/// `[0;1;0]`, `0 1 0` or `0, 1/2, 1`.
pub fn parse_point(value: &str, nvars: usize) -> Result<Vec<Rational>, String> {
    let inner = value.trim().trim_start_matches('[').trim_end_matches(']');
    let mut out = Vec::new();
    for tok in inner
        .split(|c: char| c.is_whitespace() || c == ';' || c == ',')
        .filter(|s| !s.is_empty())
    {
        out.push(parse_rational(tok).ok_or_else(|| format!("'{tok}' is not a rational number"))?);
    }
    if out.len() != nvars {
        return Err(format!("point has {} coordinates, expected {nvars}", out.len()));
    }
    if out.iter().all(|c| *c == Rational::from_integer(0.into())) {
        return Err("the zero vector is not a projective point".into());
    }
    Ok(out)
}

/// A hyperplane given as a linear expression in the variables of `ring`.
pub fn parse_hyperplane(value: &str, ring: &Ring) -> Result<LinearForm, Error> {
    LinearForm::new(parse_linear_form(value, ring)?)
}

pub fn parse_input(text: &str) -> Result<InputSpec, InputError> {
    let fields = split_fields(text)?;
    let Some((fl, fc, fsrc)) = fields.f else {
        return Err(InputError::Invalid("missing 'f:' line".into()));
    };
    let ring = match fields.vars {
        Some((l, c, v)) => parse_vars(l, c, v)?,
        None => {
            let names = identifiers(fsrc).map_err(|e| located(e, fl, fc))?;
            if names.is_empty() {
                return Err(syntax(fl, fc, "f has no variables; add a 'vars:' line"));
            }
            Ring::new(&names)
        }
    };
    if ring.nvars() < 2 {
        return Err(InputError::Invalid("at least two variables are needed".into()));
    }
    let f = parse_polynomial(fsrc, &ring).map_err(|e| located(e, fl, fc))?;
    if f.is_zero() || f.is_constant() {
        return Err(InputError::Invalid("f must be a nonconstant polynomial".into()));
    }
    if !f.is_homogeneous() {
        return Err(InputError::Invalid("f is not homogeneous".into()));
    }
    let hyperplane = match fields.hyperplane {
        Some((l, c, v)) => Some(parse_hyperplane(v, &ring).map_err(|e| located(e, l, c))?),
        None => None,
    };
    let point = match fields.point {
        Some((l, c, v)) => Some(parse_point(v, ring.nvars()).map_err(|m| syntax(l, c, m))?),
        None => None,
    };
    let seed = match fields.seed {
        Some((l, c, v)) => Some(v.parse::<u64>().map_err(|_| syntax(l, c, "seed must be a non-negative integer"))?),
        None => None,
    };
    let trials = match fields.trials {
        Some((l, c, v)) => match v.parse::<usize>() {
            Ok(t) if t > 0 => Some(t),
            _ => return Err(syntax(l, c, "trials must be a positive integer")),
        },
        None => None,
    };
    Ok(InputSpec {
        ring,
        f,
        hyperplane,
        point,
        seed,
        trials,
    })
}

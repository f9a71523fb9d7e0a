//! Plain-text `key = value` configuration files.
//!
//! ```text
//! # Fig. 2 working point
//! omega3 = 0+1.5j
//! omega4 = 1.5
//! kappa1 = 0.5
//! kappa2 = 0.5
//! ```
//!
//! Missing keys fall back to [`SystemParams::default`]. Unknown keys are
//! rejected.

use std::path::Path;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params::SystemParams;

/// Keys understood by [`params_from_entries`].
pub const PARAM_KEYS: &[&str] = &[
    "g1", "g2", "omega3", "omega4", "delta1", "delta2", "delta3", "delta4", "kappa1", "kappa2",
    "mu1", "mu2",
];

#[derive(Clone, Debug, PartialEq)]
pub struct Entry {
    pub line: usize,
    pub key: String,
    pub value: String,
}

/// Splits a document into entries. `#` starts a comment; blank lines are
/// skipped; duplicate keys are an error.
pub fn parse_entries(text: &str) -> Result<Vec<Entry>> {
    let mut entries: Vec<Entry> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or_else(|| Error::Config {
            line,
            message: format!("expected `key = value`, got `{content}`"),
        })?;
        let key = key.trim().to_ascii_lowercase();
        let value = value.trim().to_string();
        if key.is_empty() {
            return Err(Error::Config {
                line,
                message: "empty key".into(),
            });
        }
        if let Some(prev) = entries.iter().find(|e| e.key == key) {
            return Err(Error::Config {
                line,
                message: format!("duplicate key `{key}` (first set on line {})", prev.line),
            });
        }
        entries.push(Entry { line, key, value });
    }
    Ok(entries)
}

/// Parses `re`, `re+imj`, `re-imj` or `imj`.
pub fn parse_complex(s: &str) -> Option<Complex64> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return None;
    }
    let Some(body) = s.strip_suffix(['j', 'i']) else {
        return s.parse::<f64>().ok().map(|re| Complex64::new(re, 0.0));
    };
    // Split at the last sign that is not the leading one or part of an exponent.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| (bytes[i] == b'+' || bytes[i] == b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    match split {
        Some(i) => {
            let re = body[..i].parse::<f64>().ok()?;
            let im_str = &body[i..];
            let im = match im_str {
                "+" => 1.0,
                "-" => -1.0,
                _ => im_str.parse::<f64>().ok()?,
            };
            Some(Complex64::new(re, im))
        }
        None => {
            let im = match body {
                "" | "+" => 1.0,
                "-" => -1.0,
                _ => body.parse::<f64>().ok()?,
            };
            Some(Complex64::new(0.0, im))
        }
    }
}

pub(crate) fn real_value(e: &Entry) -> Result<f64> {
    e.value.parse::<f64>().map_err(|_| Error::Config {
        line: e.line,
        message: format!("`{}` expects a real number, got `{}`", e.key, e.value),
    })
}

pub(crate) fn complex_value(e: &Entry) -> Result<Complex64> {
    parse_complex(&e.value).ok_or_else(|| Error::Config {
        line: e.line,
        message: format!(
            "`{}` expects a complex number (`re` or `re+imj`), got `{}`",
            e.key, e.value
        ),
    })
}

/// Builds parameters from entries, starting from `base`. Any key outside
/// [`PARAM_KEYS`] is an error.
pub fn params_from_entries(entries: &[Entry], base: SystemParams) -> Result<SystemParams> {
    let mut p = base;
    for e in entries {
        match e.key.as_str() {
            "g1" => p.g1 = complex_value(e)?,
            "g2" => p.g2 = complex_value(e)?,
            "omega3" => p.omega3 = complex_value(e)?,
            "omega4" => p.omega4 = complex_value(e)?,
            "mu1" => p.mu1 = complex_value(e)?,
            "mu2" => p.mu2 = complex_value(e)?,
            "delta1" => p.delta1 = real_value(e)?,
            "delta2" => p.delta2 = real_value(e)?,
            "delta3" => p.delta3 = real_value(e)?,
            "delta4" => p.delta4 = real_value(e)?,
            "kappa1" => p.kappa1 = real_value(e)?,
            "kappa2" => p.kappa2 = real_value(e)?,
            other => {
                return Err(Error::Config {
                    line: e.line,
                    message: format!("unknown key `{other}`"),
                })
            }
        }
    }
    p.validate()?;
    Ok(p)
}

pub fn parse_params(text: &str) -> Result<SystemParams> {
    params_from_entries(&parse_entries(text)?, SystemParams::default())
}

pub fn load_params(path: impl AsRef<Path>) -> Result<SystemParams> {
    parse_params(&std::fs::read_to_string(path)?)
}

fn fmt_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        format!("{}", z.re)
    } else if z.im < 0.0 {
        format!("{}{}j", z.re, z.im)
    } else {
        format!("{}+{}j", z.re, z.im)
    }
}

/// Inverse of [`parse_params`]. Uses shortest round-trip float formatting.
pub fn render_params(p: &SystemParams) -> String {
    format!(
        "g1 = {}\ng2 = {}\nomega3 = {}\nomega4 = {}\ndelta1 = {}\ndelta2 = {}\ndelta3 = {}\n\
         delta4 = {}\nkappa1 = {}\nkappa2 = {}\nmu1 = {}\nmu2 = {}\n",
        fmt_complex(p.g1),
        fmt_complex(p.g2),
        fmt_complex(p.omega3),
        fmt_complex(p.omega4),
        p.delta1,
        p.delta2,
        p.delta3,
        p.delta4,
        p.kappa1,
        p.kappa2,
        fmt_complex(p.mu1),
        fmt_complex(p.mu2),
    )
}

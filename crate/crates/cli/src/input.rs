//! Polynomial text and input sources.
//!
//! Dense form lists coefficients from the constant term up, separated by
//! whitespace: `-2 0 1` is `X² − 2`. Sparse form lists `exponent:coefficient`
//! terms: `0:-2 2:1`. The Unicode minus sign is accepted in both.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::str::FromStr;

use cfroots::families::FamilySpec;
use cfroots::{IntPoly, Rational};
use num_bigint::BigInt;

use crate::{CliError, CliResult};

fn normalize(text: &str) -> String {
    text.replace('\u{2212}', "-")
}

fn parse_int(token: &str) -> CliResult<BigInt> {
    BigInt::from_str(token).map_err(|_| CliError::Parse(format!("'{token}' is not an integer")))
}

pub fn parse_poly(text: &str) -> CliResult<IntPoly> {
    let text = normalize(text);
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.is_empty() {
        return Err(CliError::Parse("empty polynomial".into()));
    }
    let sparse = tokens.iter().filter(|t| t.contains(':')).count();
    let coeffs = if sparse == 0 {
        tokens
            .iter()
            .map(|t| parse_int(t))
            .collect::<CliResult<Vec<_>>>()?
    } else if sparse == tokens.len() {
        let mut terms = Vec::with_capacity(tokens.len());
        for t in &tokens {
            let (e, c) = t.split_once(':').expect("token contains ':'");
            let e: usize = e
                .parse()
                .map_err(|_| CliError::Parse(format!("'{e}' is not an exponent in '{t}'")))?;
            terms.push((e, parse_int(c)?));
        }
        let top = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::default(); top + 1];
        let mut seen = vec![false; top + 1];
        for (e, c) in terms {
            if std::mem::replace(&mut seen[e], true) {
                return Err(CliError::Parse(format!("exponent {e} given twice")));
            }
            coeffs[e] = c;
        }
        coeffs
    } else {
        return Err(CliError::Parse(
            "mixes dense coefficients and e:c terms".into(),
        ));
    };
    let a = IntPoly::new(coeffs);
    if a.is_zero() {
        return Err(CliError::Parse(
            "polynomial has no nonzero coefficient".into(),
        ));
    }
    Ok(a)
}

/// Dense form, single spaces.
pub fn format_poly(a: &IntPoly) -> String {
    a.to_string()
}

/// `p/q` in lowest terms, or a plain integer.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn parse_rational(s: &str) -> CliResult<Rational> {
    let s = normalize(s);
    Rational::from_str(s.trim()).map_err(|_| CliError::Parse(format!("'{s}' is not a rational")))
}

pub enum Source {
    Text(String),
    File(PathBuf),
    Family(FamilySpec),
    Stdin,
}

#[derive(Clone, Debug)]
pub struct Input {
    pub descriptor: String,
    pub poly: IntPoly,
}

pub fn describe_family(spec: &FamilySpec) -> String {
    use cfroots::families::Family;
    match spec.family {
        Family::Random | Family::MonicRandom => format!(
            "{}({}, seed={}, bound={})",
            spec.family, spec.degree, spec.seed, spec.coeff_bound
        ),
        _ => format!("{}({})", spec.family, spec.degree),
    }
}

/// One polynomial per non-blank line; lines starting with `#` are skipped.
fn parse_lines(text: &str) -> CliResult<Vec<Input>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let poly = parse_poly(line).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("line {}: {msg}", i + 1)),
            other => other,
        })?;
        out.push(Input {
            descriptor: format_poly(&poly),
            poly,
        });
    }
    if out.is_empty() {
        return Err(CliError::Parse("no polynomial in input".into()));
    }
    Ok(out)
}

pub fn read_inputs(source: Source) -> CliResult<Vec<Input>> {
    match source {
        Source::Text(text) => {
            let poly = parse_poly(&text)?;
            Ok(vec![Input {
                descriptor: format_poly(&poly),
                poly,
            }])
        }
        Source::File(path) => {
            let text = fs::read_to_string(&path)
                .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
            parse_lines(&text)
        }
        Source::Stdin => {
            let mut text = String::new();
            std::io::stdin().read_to_string(&mut text)?;
            parse_lines(&text)
        }
        Source::Family(spec) => Ok(vec![Input {
            descriptor: describe_family(&spec),
            poly: spec.build()?,
        }]),
    }
}

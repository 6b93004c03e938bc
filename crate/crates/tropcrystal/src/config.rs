//! Argument parsing helpers and the mapping from core errors to exit codes.

use std::fmt;
use std::path::Path;

use tropcrystal_core::braid::{parse_fixture, TransitionTable};
use tropcrystal_core::rootdata::{canonical_longest_word, CartanData, Family};
use tropcrystal_core::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// An error with the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Budget(_) => EXIT_BUDGET,
            Error::InvalidType { .. }
            | Error::LetterOutOfRange { .. }
            | Error::NotReduced
            | Error::NotLongest
            | Error::NotEquivalent
            | Error::Dimension { .. }
            | Error::UnsupportedMinor(_)
            | Error::Unsupported(_)
            | Error::Parse(_)
            | Error::InvalidMove(_) => EXIT_USAGE,
            // a computation disagreed with itself
            Error::NotDivisible { .. } | Error::NotSubtractionFree(_) | Error::Overflow(_) | Error::Invalid(_) => {
                EXIT_CHECK_FAILED
            }
        };
        CliError { code, message: e.to_string() }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn family(s: &str) -> CliResult<Family> {
    let mut chars = s.chars();
    match (chars.next(), chars.next()) {
        (Some(c), None) => Family::from_letter(c.to_ascii_uppercase())
            .ok_or_else(|| CliError::usage(format!("unknown family {s:?}; expected one of A B C D E F G"))),
        _ => Err(CliError::usage(format!("family must be a single letter, got {s:?}"))),
    }
}

pub fn cartan(f: Family, rank: usize) -> CliResult<CartanData> {
    Ok(CartanData::new(f, rank)?)
}

/// `"1212"` or `"1,2,1,2"`; letters above 9 need the comma form.
pub fn word(s: &str) -> CliResult<Vec<usize>> {
    let s = s.trim();
    let parts: Vec<String> = if s.contains(',') {
        s.split(',').map(|p| p.trim().to_string()).collect()
    } else {
        s.chars().map(String::from).collect()
    };
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| CliError::usage(format!("bad letter {p:?} in word {s:?}"))))
        .collect()
}

/// A comma-separated integer vector.
pub fn point(s: &str) -> CliResult<Vec<i64>> {
    s.split(',')
        .map(|p| p.trim().parse::<i64>().map_err(|_| CliError::usage(format!("bad coordinate {p:?} in {s:?}"))))
        .collect()
}

/// The given word checked to be a reduced word of `w_0`, or the canonical one.
pub fn longest_word(c: &CartanData, w: Option<&str>) -> CliResult<Vec<usize>> {
    match w {
        Some(s) => {
            let w = word(s)?;
            c.check_word(&w)?;
            if !tropcrystal_core::rootdata::is_longest(c, &w) {
                return Err(Error::NotLongest.into());
            }
            Ok(w)
        }
        None => Ok(canonical_longest_word(c.family(), c.rank())?),
    }
}

/// Transition maps read from a fixture file instead of the built-in table.
pub fn transitions(path: &Path) -> CliResult<TransitionTable> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(TransitionTable::from_solutions(parse_fixture(&text)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_and_points() {
        assert_eq!(word("1212").unwrap(), vec![1, 2, 1, 2]);
        assert_eq!(word("1, 10,2").unwrap(), vec![1, 10, 2]);
        assert!(word("1x").is_err());
        assert_eq!(point("1,-2, 3").unwrap(), vec![1, -2, 3]);
        assert_eq!(family("g").unwrap(), Family::G);
        assert_eq!(family("H").unwrap_err().code, EXIT_USAGE);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::from(Error::Budget("x".into())).code, EXIT_BUDGET);
        assert_eq!(CliError::from(Error::NotLongest).code, EXIT_USAGE);
        let c = cartan(Family::A, 2).unwrap();
        assert_eq!(longest_word(&c, Some("12")).unwrap_err().code, EXIT_USAGE);
        assert_eq!(longest_word(&c, Some("212")).unwrap(), vec![2, 1, 2]);
    }
}

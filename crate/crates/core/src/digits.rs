//! Digit words over `D = {0, …, max |η(c)| - 1}`.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A finite word of digits. Concatenation is word concatenation, never
/// integer arithmetic.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DigitWord(Vec<u32>);

impl DigitWord {
    pub fn new(digits: Vec<u32>) -> Self {
        DigitWord(digits)
    }

    pub fn digits(&self) -> &[u32] {
        &self.0
    }

    pub fn into_digits(self) -> Vec<u32> {
        self.0
    }

    pub fn concat(&self, other: &[u32]) -> DigitWord {
        let mut v = Vec::with_capacity(self.0.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(other);
        DigitWord(v)
    }

    /// Renders with an explicit separator between digits.
    pub fn render_with(&self, sep: &str) -> String {
        self.0
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl Deref for DigitWord {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for DigitWord {
    fn from(v: Vec<u32>) -> Self {
        DigitWord(v)
    }
}

impl From<&[u32]> for DigitWord {
    fn from(v: &[u32]) -> Self {
        DigitWord(v.to_vec())
    }
}

/// Juxtaposed when every digit is below 10, comma-separated otherwise.
impl fmt::Display for DigitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.0.iter().any(|&d| d >= 10) {
            return f.pad(&self.render_with(""));
        }
        let mut text = self.render_with(",");
        if self.0.len() == 1 {
            // a lone multi-digit value keeps a comma so it reads back as one digit
            text.push(',');
        }
        f.pad(&text)
    }
}

/// Accepts `0010010`, `1,0,11,3` and the empty string.
impl FromStr for DigitWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(DigitWord::default());
        }
        let bad = || Error::InvalidDigits(s.to_string());
        let digits = if s.contains(',') {
            s.strip_suffix(',')
                .unwrap_or(s)
                .split(',')
                .map(|t| t.trim().parse::<u32>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).ok_or_else(bad))
                .collect::<Result<Vec<_>>>()?
        };
        Ok(DigitWord(digits))
    }
}

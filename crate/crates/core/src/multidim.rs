//! Neutral blocks, padding, and representations of integer vectors.

use std::fmt;

use num_bigint::{BigInt, BigUint};

use crate::decompose::tail;
use crate::digits::DigitWord;
use crate::error::{Error, Result};
use crate::periodic::PeriodicPoint;

/// Length-`p` blocks that can be inserted after the sign digit without
/// changing either the automaton output or the value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeutralWords {
    /// `0^p`, inserted into nonnegative words.
    pub w_min: DigitWord,
    /// The largest tail below `η^p(u_{-1})`, inserted into negative words.
    pub w_max: DigitWord,
}

impl PeriodicPoint {
    pub fn neutral_words(&self) -> NeutralWords {
        let s = self.substitution();
        let p = self.period();
        let w_min = tail(s, p, self.right(), &BigUint::from(0u8)).expect("0 is below any image length");
        let last = s.image_length(self.left(), p) - 1u8;
        let w_max = tail(s, p, self.left(), &last).expect("last position is in range");
        NeutralWords { w_min, w_max }
    }

    /// Inserts neutral blocks after the sign digit until `w` has length `target`.
    pub fn pad(&self, w: &[u32], target: usize) -> Result<DigitWord> {
        let first = *w.first().ok_or(Error::EmptyWord)?;
        if first > 1 {
            return Err(Error::BadSignDigit(first));
        }
        if target < w.len() {
            return Err(Error::PadTooShort {
                target,
                len: w.len(),
            });
        }
        let p = self.period();
        if !(target - w.len()).is_multiple_of(p) || target % p != 1 % p {
            return Err(Error::LengthClass {
                len: target,
                period: p,
            });
        }
        let neutral = self.neutral_words();
        let block = if first == 0 { neutral.w_min } else { neutral.w_max };
        let mut out = Vec::with_capacity(target);
        out.push(first);
        for _ in 0..(target - w.len()) / p {
            out.extend_from_slice(&block);
        }
        out.extend_from_slice(&w[1..]);
        Ok(DigitWord::new(out))
    }

    /// Strips leading neutral blocks, recovering the canonical word.
    pub fn unpad(&self, w: &[u32]) -> Result<DigitWord> {
        let first = *w.first().ok_or(Error::EmptyWord)?;
        if first > 1 {
            return Err(Error::BadSignDigit(first));
        }
        let neutral = self.neutral_words();
        let block = if first == 0 { neutral.w_min } else { neutral.w_max };
        let p = self.period();
        let mut rest = &w[1..];
        while rest.len() >= p && rest[..p] == block[..] {
            rest = &rest[p..];
        }
        let mut out = vec![first];
        out.extend_from_slice(rest);
        Ok(DigitWord::new(out))
    }
}

/// Equal-length padded representations of the coordinates of a vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    rows: Vec<DigitWord>,
}

impl RepMatrix {
    pub fn new(rows: Vec<DigitWord>) -> Result<Self> {
        if let Some(first) = rows.first() {
            if rows.iter().any(|r| r.len() != first.len()) {
                return Err(Error::MismatchedRowLengths);
            }
        }
        Ok(RepMatrix { rows })
    }

    pub fn rows(&self) -> &[DigitWord] {
        &self.rows
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// The same data read as a word over `D^d`: one tuple per column.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.width())
            .map(|j| self.rows.iter().map(|r| r[j]).collect())
            .collect()
    }

    /// `(d1,…,dd)` tuples separated by spaces.
    pub fn render_columns(&self) -> String {
        self.columns()
            .iter()
            .map(|c| {
                let parts: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("({})", parts.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

fn check_compatible(points: &[PeriodicPoint]) -> Result<()> {
    if let Some(first) = points.first() {
        if points
            .iter()
            .any(|p| p.period() != first.period() || p.substitution() != first.substitution())
        {
            return Err(Error::MismatchedSystems);
        }
    }
    Ok(())
}

/// Pads each `rep(points[i], n[i])` to the longest of them.
pub fn rep_zd(points: &[PeriodicPoint], n: &[BigInt]) -> Result<RepMatrix> {
    check_compatible(points)?;
    if points.len() != n.len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            got: n.len(),
        });
    }
    let reps: Vec<_> = points.iter().zip(n).map(|(pp, n)| pp.rep_big(n)).collect();
    let t = reps.iter().map(|r| r.len()).max().unwrap_or(0);
    let rows = points
        .iter()
        .zip(&reps)
        .map(|(pp, r)| pp.pad(r, t))
        .collect::<Result<Vec<_>>>()?;
    RepMatrix::new(rows)
}

/// Row-wise value of a matrix produced by [`rep_zd`] (or any padded rows).
pub fn val_zd(points: &[PeriodicPoint], m: &RepMatrix) -> Result<Vec<BigInt>> {
    check_compatible(points)?;
    if points.len() != m.rows().len() {
        return Err(Error::DimensionMismatch {
            expected: points.len(),
            got: m.rows().len(),
        });
    }
    points.iter().zip(m.rows()).map(|(pp, r)| pp.val(r)).collect()
}

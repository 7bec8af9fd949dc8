//! Two-sided periodic points with growing seeds.

use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::substitution::{Letter, Substitution, Word};

/// The pair `u_{-1}|u_0` at the origin of a two-sided word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Seed {
    pub left: Letter,
    pub right: Letter,
}

/// A two-sided word `u` with `η^p(u) = u`, identified by its growing seed and
/// its minimal period `p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodicPoint {
    substitution: Substitution,
    seed: Seed,
    period: usize,
}

/// Length of the cycle of `f` through `a`, or `None` if `a` is not on a cycle.
fn cycle_length(size: usize, a: Letter, f: impl Fn(Letter) -> Letter) -> Option<usize> {
    let mut cur = a;
    for step in 1..=size {
        cur = f(cur);
        if cur == a {
            return Some(step);
        }
    }
    None
}

/// All seeds of two-sided periodic points with growing seed letters, with
/// their minimal periods, sorted by left letter then right letter.
pub fn enumerate_seeds(s: &Substitution) -> Vec<(Seed, usize)> {
    let n = s.alphabet_size();
    let lefts: Vec<(Letter, usize)> = s
        .letters()
        .filter(|&b| s.is_growing(b))
        .filter_map(|b| cycle_length(n, b, |x| s.last_letter(x)).map(|c| (b, c)))
        .collect();
    let rights: Vec<(Letter, usize)> = s
        .letters()
        .filter(|&a| s.is_growing(a))
        .filter_map(|a| cycle_length(n, a, |x| s.first_letter(x)).map(|c| (a, c)))
        .collect();
    let mut out = Vec::with_capacity(lefts.len() * rights.len());
    for &(left, cl) in &lefts {
        for &(right, cr) in &rights {
            out.push((Seed { left, right }, cl.lcm(&cr)));
        }
    }
    out
}

impl PeriodicPoint {
    /// Validates a seed given as letters.
    pub fn new(substitution: Substitution, seed: Seed) -> Result<Self> {
        let n = substitution.alphabet_size();
        for a in [seed.left, seed.right] {
            if !substitution.is_growing(a) {
                return Err(Error::SeedNotGrowing(substitution.name(a).to_string()));
            }
        }
        let cl = cycle_length(n, seed.left, |x| substitution.last_letter(x)).ok_or_else(|| {
            Error::SeedNotPeriodic {
                letter: substitution.name(seed.left).to_string(),
                side: "last",
            }
        })?;
        let cr = cycle_length(n, seed.right, |x| substitution.first_letter(x)).ok_or_else(|| {
            Error::SeedNotPeriodic {
                letter: substitution.name(seed.right).to_string(),
                side: "first",
            }
        })?;
        Ok(PeriodicPoint {
            substitution,
            seed,
            period: cl.lcm(&cr),
        })
    }

    /// Parses a seed in `LEFT|RIGHT` form.
    pub fn from_seed_text(substitution: Substitution, text: &str) -> Result<Self> {
        let (l, r) = text
            .split_once('|')
            .ok_or_else(|| Error::MalformedSeed(text.to_string()))?;
        let (l, r) = (l.trim(), r.trim());
        if l.is_empty() || r.is_empty() || r.contains('|') {
            return Err(Error::MalformedSeed(text.to_string()));
        }
        let letter = |name: &str| {
            substitution
                .letter(name)
                .ok_or_else(|| Error::UnknownSeedLetter(name.to_string()))
        };
        let seed = Seed {
            left: letter(l)?,
            right: letter(r)?,
        };
        PeriodicPoint::new(substitution, seed)
    }

    pub fn substitution(&self) -> &Substitution {
        &self.substitution
    }

    pub fn seed(&self) -> Seed {
        self.seed
    }

    /// The minimal period `p`.
    pub fn period(&self) -> usize {
        self.period
    }

    /// `u_0`.
    pub fn right(&self) -> Letter {
        self.seed.right
    }

    /// `u_{-1}`.
    pub fn left(&self) -> Letter {
        self.seed.left
    }

    pub fn seed_text(&self) -> String {
        let s = &self.substitution;
        format!("{}|{}", s.name(self.seed.left), s.name(self.seed.right))
    }

    /// `u_lo … u_{hi-1}`, by materializing `η^{pk}` of the seed letters.
    ///
    /// Brute force; meant as an oracle for small ranges.
    pub fn expand_segment(&self, lo: i64, hi: i64) -> Word {
        if lo >= hi {
            return Word::new();
        }
        let s = &self.substitution;
        let p = self.period;
        let need_right = hi.max(0) as usize;
        let need_left = (-lo).max(0) as usize;
        let mut right = vec![self.seed.right];
        while right.len() < need_right {
            right = s.apply_n(&right, p);
        }
        let mut left = vec![self.seed.left];
        while left.len() < need_left {
            left = s.apply_n(&left, p);
        }
        let mut out = Word::with_capacity((hi - lo) as usize);
        for i in lo..hi {
            out.push(if i >= 0 {
                right[i as usize]
            } else {
                left[left.len() - (-i) as usize]
            });
        }
        out
    }
}

impl fmt::Display for PeriodicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (period {})", self.seed_text(), self.period)
    }
}

//! Complement numeration systems for `Z` and `Z^d` built from two-sided
//! periodic points of substitutions.
//!
//! Every integer `n` gets a canonical digit word `rep(n)` starting with `0`
//! when `n >= 0` and with `1` when `n < 0`. Feeding `rep(n)` to the automaton
//! of the periodic point returns its letter at position `n`.
//!
//! ```
//! use dumont_thomas::systems;
//!
//! let fib = systems::point("fibonacci", "b|a").unwrap();
//! assert_eq!(fib.rep(10).to_string(), "0010010");
//! assert_eq!(fib.rep(-6).to_string(), "1001010");
//! assert_eq!(fib.val(&fib.rep(-6)).unwrap(), (-6).into());
//! let s = fib.substitution();
//! assert_eq!(s.name(fib.letter_at(-1)), "b");
//! ```
//!
//! The runnable programs under `examples/` cover each capability in turn.

pub mod automaton;
pub mod cli;
pub mod compat;
pub mod decompose;
pub mod digits;
pub mod error;
pub mod lengths;
pub mod multidim;
pub mod numeration;
pub mod periodic;
pub mod substitution;
pub mod systems;

pub use automaton::{Dfao, State};
pub use decompose::{decompose, tail, AdmissibleSequence};
pub use digits::DigitWord;
pub use error::{Error, Result};
pub use multidim::{rep_zd, val_zd, NeutralWords, RepMatrix};
pub use numeration::{cmp, SignedRep};
pub use periodic::{enumerate_seeds, PeriodicPoint, Seed};
pub use substitution::{Letter, Substitution, Word};

pub use num_bigint::BigInt;

//! Admissible sequences: the tail map and the quotient/remainder split that
//! drives the representation recurrence.

use num_bigint::{BigInt, BigUint};
use num_traits::ToPrimitive;

use crate::digits::DigitWord;
use crate::error::{Error, Result};
use crate::lengths::descend;
use crate::periodic::PeriodicPoint;
use crate::substitution::{Letter, Substitution, Word};

/// An `x`-admissible sequence `(m_i, a_i)` for `i = k-1 … 0`: each `m_i a_i`
/// is a prefix of `η(a_{i+1})`, with `a_k = x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleSequence {
    pub anchor: Letter,
    /// `(m_i, a_i)` from `i = k-1` down to `i = 0`.
    pub entries: Vec<(Word, Letter)>,
}

impl AdmissibleSequence {
    /// `|m_{k-1}| ⊙ … ⊙ |m_0|`.
    pub fn digits(&self) -> DigitWord {
        DigitWord::new(self.entries.iter().map(|(m, _)| m.len() as u32).collect())
    }

    /// `a_0`, the letter at the decomposed position; the anchor when `k = 0`.
    pub fn final_letter(&self) -> Letter {
        self.entries.last().map_or(self.anchor, |(_, a)| *a)
    }

    /// `η^{k-1}(m_{k-1}) ⋯ η^0(m_0)`, materialized.
    pub fn prefix_word(&self, s: &Substitution) -> Word {
        let k = self.entries.len();
        self.entries
            .iter()
            .enumerate()
            .flat_map(|(t, (m, _))| s.apply_n(m, k - 1 - t))
            .collect()
    }
}

fn check_range(s: &Substitution, levels: usize, x: Letter, n: &BigUint) -> Result<()> {
    let bound = s.image_length(x, levels);
    if n >= &bound {
        return Err(Error::OutOfRange {
            n: n.to_string(),
            bound: bound.to_string(),
        });
    }
    Ok(())
}

fn descend_any(s: &Substitution, levels: usize, x: Letter, n: &BigUint) -> (Vec<u32>, Vec<usize>) {
    let table = s.lengths(levels);
    match n.to_u64().filter(|&v| v < u64::MAX) {
        Some(v) => {
            let d = descend(&table, s.raw_images(), x.index(), levels, v);
            (d.digits, d.letters)
        }
        None => {
            let d = descend(&table, s.raw_images(), x.index(), levels, n.clone());
            (d.digits, d.letters)
        }
    }
}

/// `tail_{η,levels,x}(n)`: the digit word of the unique `x`-admissible
/// sequence spelling the length-`n` prefix of `η^levels(x)`.
pub fn tail(s: &Substitution, levels: usize, x: Letter, n: &BigUint) -> Result<DigitWord> {
    check_range(s, levels, x, n)?;
    Ok(DigitWord::new(descend_any(s, levels, x, n).0))
}

/// The full admissible sequence behind [`tail`], prefixes and letters included.
pub fn decompose(s: &Substitution, levels: usize, x: Letter, n: &BigUint) -> Result<AdmissibleSequence> {
    check_range(s, levels, x, n)?;
    let (digits, letters) = descend_any(s, levels, x, n);
    let mut current = x;
    let mut entries = Vec::with_capacity(levels);
    for (d, a) in digits.into_iter().zip(letters) {
        let m = s.image(current)[..d as usize].to_vec();
        let a = Letter(a);
        entries.push((m, a));
        current = a;
    }
    Ok(AdmissibleSequence { anchor: x, entries })
}

impl PeriodicPoint {
    /// The `u`-quotient `q` and `u`-remainder `r` of `n ∉ {-1, 0}`:
    /// `rep(n) = rep(q) ⊙ tail_{η,p,u_q}(r)`.
    pub fn quotient_remainder(&self, n: impl Into<BigInt>) -> Result<(BigInt, BigUint)> {
        let n = n.into();
        let e = self
            .expand(&n)
            .ok_or_else(|| Error::DegeneratePosition(n.to_string()))?;
        let p = self.period();
        let k = e.located.levels;
        let mut high = Vec::with_capacity(k - p + 1);
        high.push(e.located.sign);
        high.extend_from_slice(&e.digits[..k - p]);
        let q = self.val(&high)?;
        let r = e.residuals.get(k - p);
        Ok((q, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Dfao;
    use crate::systems;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn tail_examples() {
        let t = systems::load("tribonacci").unwrap();
        let a = t.letter("a").unwrap();
        assert_eq!(tail(&t, 3, a, &big(4)).unwrap().to_string(), "100");
        assert_eq!(tail(&t, 3, a, &big(0)).unwrap().to_string(), "000");
        assert_eq!(tail(&t, 2, a, &big(3)).unwrap().to_string(), "11");
        assert_eq!(tail(&t, 3, a, &big(6)).unwrap().to_string(), "110");
        assert!(matches!(tail(&t, 3, a, &big(7)), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn decompose_examples() {
        let phi = systems::load("fibonacci").unwrap();
        let a = phi.letter("a").unwrap();
        let b = phi.letter("b").unwrap();
        let d = decompose(&phi, 2, a, &big(2)).unwrap();
        assert_eq!(d.entries, vec![(vec![a], b), (vec![], a)]);
        assert_eq!(d.digits().to_string(), "10");
        assert_eq!(d.prefix_word(&phi), phi.apply_n(&[a], 2)[..2].to_vec());

        let t = systems::load("tribonacci").unwrap();
        let ta = t.letter("a").unwrap();
        let d = decompose(&t, 3, ta, &big(6)).unwrap();
        assert_eq!(d.final_letter(), ta);
        assert_eq!(d.digits().to_string(), "110");

        for k in 0..5 {
            let d = decompose(&t, k, ta, &big(0)).unwrap();
            assert!(d.entries.iter().all(|(m, _)| m.is_empty()));
            assert_eq!(d.final_letter(), t.apply_n(&[ta], k)[0]);
        }
    }

    #[test]
    fn quotient_remainder_examples() {
        let gamma = systems::point("fibonacci", "b|a").unwrap();
        assert_eq!(gamma.quotient_remainder(10).unwrap(), (BigInt::from(3), big(2)));
        assert_eq!(gamma.quotient_remainder(-2).unwrap(), (BigInt::from(-1), big(0)));
        let beta = systems::point("psi2", "b|a").unwrap();
        assert_eq!(beta.quotient_remainder(7).unwrap(), (BigInt::from(3), big(1)));
        assert!(matches!(gamma.quotient_remainder(0), Err(Error::DegeneratePosition(_))));
        assert!(matches!(gamma.quotient_remainder(-1), Err(Error::DegeneratePosition(_))));
    }

    #[test]
    fn quotient_remainder_recurrence() {
        for pp in systems::reference_points() {
            let s = pp.substitution();
            let p = pp.period();
            let seg = pp.expand_segment(-600, 600);
            let at = |i: &BigInt| seg[(i.to_i64().unwrap() + 600) as usize];
            for n in (-500i64..=500).filter(|n| *n != 0 && *n != -1) {
                let (q, r) = pp.quotient_remainder(n).unwrap();
                let nb = BigInt::from(n);
                if n >= 1 {
                    assert!(q >= BigInt::from(0) && q < nb);
                } else {
                    assert!(q > nb && q <= BigInt::from(-1));
                }
                let uq = at(&q);
                let low = tail(s, p, uq, &r).unwrap();
                assert_eq!(pp.rep(q.clone()).concat(&low), *pp.rep(n).word(), "{pp} n={n}");
                // u_n = η^p(u_q)[r]
                let img = s.apply_n(&[uq], p);
                assert_eq!(img[r.to_usize().unwrap()], at(&nb), "{pp} n={n}");
            }
        }
    }

    #[test]
    fn admissible_sequence_invariants() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (name, _) in systems::BUNDLED {
            let s = systems::load(name).unwrap();
            let dfao_letters: Vec<Letter> = s.letters().collect();
            for &x in &dfao_letters {
                for k in 0..=6 {
                    let bound = s.image_length(x, k).to_u64().unwrap();
                    let materialized = s.apply_n(&[x], k);
                    for _ in 0..20 {
                        let n = rng.gen_range(0..bound);
                        let d = decompose(&s, k, x, &big(n)).unwrap();
                        // prefix property and admissibility
                        let mut parent = x;
                        for (m, a) in &d.entries {
                            let img = s.image(parent);
                            assert_eq!(&img[..m.len()], &m[..]);
                            assert_eq!(img[m.len()], *a);
                            parent = *a;
                        }
                        assert_eq!(d.prefix_word(&s), materialized[..n as usize].to_vec());
                        assert_eq!(d.final_letter(), materialized[n as usize]);
                        // automaton compatibility: a_i = A_{η,x}(|m_{k-1}| … |m_i|)
                        let digits = d.digits();
                        for (i, (_, a)) in d.entries.iter().enumerate() {
                            assert_eq!(Dfao::eval_from(&s, x, &digits[..=i]).unwrap(), *a);
                        }
                    }
                }
            }
        }
    }
}

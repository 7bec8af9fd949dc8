//! Two's complement and its Fibonacci analogue, implemented directly from
//! their value maps so they can be checked against the substitution-based
//! systems.
//!
//! Words are written most significant digit first: `w = w_{k-1} ⋯ w_0`.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};

use crate::digits::DigitWord;
use crate::error::{Error, Result};

fn check_binary(w: &[u32]) -> Result<()> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    match w.iter().find(|&&d| d > 1) {
        Some(&d) => Err(Error::NonBinaryDigit(d)),
        None => Ok(()),
    }
}

/// `Σ w_i 2^i − w_{k-1} 2^k`.
pub fn val_2c(w: &[u32]) -> Result<BigInt> {
    check_binary(w)?;
    let k = w.len();
    let mut acc = BigInt::zero();
    for &d in w {
        acc = (acc << 1) + d;
    }
    if w[0] == 1 {
        acc -= BigInt::one() << k;
    }
    Ok(acc)
}

fn bits(mut m: BigUint, width: usize) -> Vec<u32> {
    let mut out = vec![0u32; width];
    for slot in out.iter_mut().rev() {
        *slot = if m.bit(0) { 1 } else { 0 };
        m >>= 1;
    }
    out
}

/// The unique word outside `00D* ∪ 11D*` with value `n`.
pub fn rep_2c(n: &BigInt) -> DigitWord {
    match n.sign() {
        Sign::NoSign => DigitWord::new(vec![0]),
        Sign::Plus => {
            let width = n.magnitude().bits() as usize + 1;
            DigitWord::new(bits(n.magnitude().clone(), width))
        }
        Sign::Minus => {
            // shortest k with -2^(k-1) <= n, doubling then scanning down
            let m = n.magnitude();
            let mut k = 1usize;
            while (BigUint::one() << (k - 1)) < *m {
                k *= 2;
            }
            while k > 1 && (BigUint::one() << (k - 2)) >= *m {
                k -= 1;
            }
            let word = (BigUint::one() << k) - m;
            DigitWord::new(bits(word, k))
        }
    }
}

/// `F_0 = 1, F_1 = 2, F_n = F_{n-1} + F_{n-2}`, memoized.
#[derive(Debug, Clone)]
pub struct FibSequence {
    values: Vec<BigUint>,
}

impl Default for FibSequence {
    fn default() -> Self {
        FibSequence {
            values: vec![BigUint::from(1u8), BigUint::from(2u8)],
        }
    }
}

impl FibSequence {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, i: usize) -> &BigUint {
        while self.values.len() <= i {
            let n = self.values.len();
            let next = &self.values[n - 1] + &self.values[n - 2];
            self.values.push(next);
        }
        &self.values[i]
    }
}

/// `Σ w_i F_i − w_{k-1} F_k`.
pub fn val_fc(w: &[u32]) -> Result<BigInt> {
    check_binary(w)?;
    let k = w.len();
    let mut fib = FibSequence::new();
    let mut acc = BigUint::zero();
    for (i, &d) in w.iter().rev().enumerate() {
        if d == 1 {
            acc += fib.get(i);
        }
    }
    let mut acc = BigInt::from(acc);
    if w[0] == 1 {
        acc -= BigInt::from(fib.get(k).clone());
    }
    Ok(acc)
}

/// Greedy Zeckendorf digits of `m` on `F_0, …, F_{width-1}`, most
/// significant first. Requires `m < F_width`.
fn zeckendorf(fib: &mut FibSequence, mut m: BigUint, width: usize) -> Vec<u32> {
    let mut out = vec![0u32; width];
    for i in (0..width).rev() {
        let f = fib.get(i).clone();
        if f <= m {
            m -= f;
            out[width - 1 - i] = 1;
        }
    }
    debug_assert!(m.is_zero());
    out
}

/// The unique odd-length word with no factor `11` and no prefix `000` or
/// `101` whose value is `n`.
///
/// For `n >= 0` this is `0` followed by the Zeckendorf expansion, padded with
/// one more `0` when needed for odd length. A negative word of odd length
/// `L >= 3` is `10` followed by a Zeckendorf expansion `z < F_{L-3}` and has
/// value `z − F_{L-2}`, so `L` is the least odd length with `−F_{L-2} <= n`.
pub fn rep_fc(n: &BigInt) -> DigitWord {
    let mut fib = FibSequence::new();
    match n.sign() {
        Sign::NoSign => DigitWord::new(vec![0]),
        Sign::Plus => {
            let m = n.magnitude().clone();
            let mut top = 0;
            while fib.get(top + 1) <= &m {
                top += 1;
            }
            let z = zeckendorf(&mut fib, m, top + 1);
            let mut out = vec![0];
            if (z.len() + 1).is_multiple_of(2) {
                out.push(0);
            }
            out.extend(z);
            DigitWord::new(out)
        }
        Sign::Minus => {
            let m = n.magnitude();
            if m.is_one() {
                return DigitWord::new(vec![1]);
            }
            let mut len = 3;
            while fib.get(len - 2) < m {
                len += 2;
            }
            let z = fib.get(len - 2).clone() - m;
            let mut out = vec![1, 0];
            out.extend(zeckendorf(&mut fib, z, len - 2));
            DigitWord::new(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn val_2c_examples() {
        assert_eq!(val_2c(&w("10")), Ok(b(-2)));
        assert_eq!(val_2c(&w("011")), Ok(b(3)));
        assert_eq!(val_2c(&w("1011")), Ok(b(-5)));
        assert_eq!(val_2c(&w("0")), Ok(b(0)));
        assert_eq!(val_2c(&w("0100")), Ok(b(4)));
        assert_eq!(val_2c(&w("012")), Err(Error::NonBinaryDigit(2)));
        assert_eq!(val_2c(&[]), Err(Error::EmptyWord));
    }

    /// Canonical two's complement words of length <= 12, found by enumeration.
    fn brute_force_2c(n: i64) -> Option<String> {
        for len in 1..=12usize {
            for bitsv in 0u32..(1 << len) {
                let word: Vec<u32> = (0..len).rev().map(|i| (bitsv >> i) & 1).collect();
                if len >= 2 && word[0] == word[1] {
                    continue;
                }
                if val_2c(&word).unwrap() == b(n) {
                    return Some(DigitWord::new(word).to_string());
                }
            }
        }
        None
    }

    #[test]
    fn rep_2c_examples() {
        assert_eq!(rep_2c(&b(-4)).to_string(), "100");
        assert_eq!(rep_2c(&b(2)).to_string(), "010");
        assert_eq!(rep_2c(&b(0)).to_string(), "0");
        assert_eq!(rep_2c(&b(-1)).to_string(), "1");
        assert_eq!(rep_2c(&b(-100)).to_string(), "10011100");
        assert_eq!(brute_force_2c(-100).as_deref(), Some("10011100"));
        for n in -300..=300 {
            assert_eq!(Some(rep_2c(&b(n)).to_string()), brute_force_2c(n), "n={n}");
        }
    }

    #[test]
    fn val_fc_examples() {
        assert_eq!(val_fc(&w("100")), Ok(b(-2)));
        assert_eq!(val_fc(&w("0")), Ok(b(0)));
        assert_eq!(val_fc(&w("1")), Ok(b(-1)));
        assert_eq!(val_fc(&w("0010010")), Ok(b(10)));
    }

    fn in_fc_language(word: &[u32]) -> bool {
        word.len() % 2 == 1
            && !word.windows(2).any(|p| p == [1, 1])
            && !word.starts_with(&[0, 0, 0])
            && !word.starts_with(&[1, 0, 1])
    }

    #[test]
    fn rep_fc_examples() {
        assert_eq!(rep_fc(&b(10)).to_string(), "0010010");
        assert_eq!(rep_fc(&b(-5)).to_string(), "10000");
        assert_eq!(rep_fc(&b(0)).to_string(), "0");
        assert_eq!(rep_fc(&b(-1)).to_string(), "1");
        assert_eq!(rep_fc(&b(-6)).to_string(), "1001010");
    }

    #[test]
    fn rep_fc_matches_enumeration_of_the_language() {
        // every word of the language up to length 11, keyed by value
        let mut seen = std::collections::HashMap::new();
        for len in (1..=11usize).step_by(2) {
            for bitsv in 0u32..(1 << len) {
                let word: Vec<u32> = (0..len).rev().map(|i| (bitsv >> i) & 1).collect();
                if in_fc_language(&word) {
                    let v = val_fc(&word).unwrap();
                    assert!(seen.insert(v, word).is_none(), "value collision");
                }
            }
        }
        for n in -50i64..=50 {
            assert_eq!(rep_fc(&b(n)).digits(), &seen[&b(n)][..], "n={n}");
        }
    }

    #[test]
    fn inversion_and_canonicity() {
        for n in -3000i64..=3000 {
            let r2 = rep_2c(&b(n));
            assert_eq!(val_2c(&r2), Ok(b(n)));
            assert!(r2.len() == 1 || r2[0] != r2[1]);
            let rf = rep_fc(&b(n));
            assert_eq!(val_fc(&rf), Ok(b(n)));
            assert!(in_fc_language(&rf), "n={n} {rf}");
        }
        let huge = BigInt::from(10u8).pow(40);
        for n in [huge.clone(), -huge] {
            assert_eq!(val_2c(&rep_2c(&n)).unwrap(), n);
            assert_eq!(val_fc(&rep_fc(&n)).unwrap(), n);
        }
    }

    #[test]
    fn fib_sequence() {
        let mut f = FibSequence::new();
        let got: Vec<u64> = (0..8).map(|i| u64::try_from(f.get(i).clone()).unwrap()).collect();
        assert_eq!(got, vec![1, 2, 3, 5, 8, 13, 21, 34]);
    }
}

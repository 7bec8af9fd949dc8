//! The signed representation map `rep_u: Z → {0,1}D*`, its inverse, the
//! canonicity test and the total order `≺`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Deref;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::digits::DigitWord;
use crate::error::{Error, Result};
use crate::lengths::{descend, Descent, LengthTable};
use crate::periodic::PeriodicPoint;
use crate::substitution::Letter;

/// A canonical representation `rep_u(n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedRep(DigitWord);

impl SignedRep {
    pub fn word(&self) -> &DigitWord {
        &self.0
    }

    pub fn into_word(self) -> DigitWord {
        self.0
    }

    /// The sign digit: 0 for nonnegative values, 1 for negative ones.
    pub fn sign_digit(&self) -> u32 {
        self.0[0]
    }
}

impl Deref for SignedRep {
    type Target = DigitWord;

    fn deref(&self) -> &DigitWord {
        &self.0
    }
}

impl fmt::Display for SignedRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<SignedRep> for DigitWord {
    fn from(r: SignedRep) -> Self {
        r.0
    }
}

/// Where a nonzero, non-minus-one position sits in the substitution tree.
pub(crate) struct Located {
    pub sign: u32,
    pub start: Letter,
    pub levels: usize,
    pub table: Arc<LengthTable>,
    residual: BigUint,
}

/// The residual-position descent for `n`.
pub(crate) struct Expansion {
    pub located: Located,
    pub digits: Vec<u32>,
    pub residuals: Residuals,
}

/// Residual positions before each level, kept at the width they were computed in.
pub(crate) enum Residuals {
    Small(Vec<u64>),
    Big(Vec<BigUint>),
}

impl Residuals {
    pub fn get(&self, i: usize) -> BigUint {
        match self {
            Residuals::Small(v) => BigUint::from(v[i]),
            Residuals::Big(v) => v[i].clone(),
        }
    }
}

/// Smallest `k = pℓ`, `ℓ >= 1`, with `accept(table, k)`.
fn level_search(
    pp: &PeriodicPoint,
    accept: impl Fn(&LengthTable, usize) -> bool,
) -> (usize, Arc<LengthTable>) {
    let p = pp.period();
    let s = pp.substitution();
    let mut cap = 8 * p;
    loop {
        let table = s.lengths(cap);
        // seed letters start (end) their own images, so lengths never
        // shrink along multiples of p and acceptance is monotone
        let top = table.levels() / p;
        if top >= 1 && accept(&table, top * p) {
            let (mut lo, mut hi) = (1, top);
            while lo < hi {
                let mid = lo + (hi - lo) / 2;
                if accept(&table, mid * p) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            return (lo * p, table);
        }
        cap *= 2;
    }
}

impl PeriodicPoint {
    pub(crate) fn locate(&self, n: &BigInt) -> Option<Located> {
        match n.sign() {
            Sign::NoSign => None,
            Sign::Plus => {
                let m = n.magnitude();
                let a = self.right().index();
                let (k, table) = match m.to_u64().filter(|&v| v < u64::MAX) {
                    Some(v) => level_search(self, |t, k| t.length_sat(k, a) > v),
                    None => level_search(self, |t, k| t.length(k, a) > m),
                };
                Some(Located {
                    sign: 0,
                    start: self.right(),
                    levels: k,
                    table,
                    residual: m.clone(),
                })
            }
            Sign::Minus => {
                let m = n.magnitude();
                if m == &BigUint::from(1u8) {
                    return None;
                }
                let b = self.left().index();
                let (k, table) = match m.to_u64().filter(|&v| v < u64::MAX) {
                    Some(v) => level_search(self, |t, k| t.length_sat(k, b) >= v),
                    None => level_search(self, |t, k| t.length(k, b) >= m),
                };
                let residual = table.length(k, b) - m;
                Some(Located {
                    sign: 1,
                    start: self.left(),
                    levels: k,
                    table,
                    residual,
                })
            }
        }
    }

    pub(crate) fn expand(&self, n: &BigInt) -> Option<Expansion> {
        let located = self.locate(n)?;
        let images = self.substitution().raw_images();
        let start = located.start.index();
        let k = located.levels;
        let (digits, residuals) = match located.residual.to_u64().filter(|&v| v < u64::MAX) {
            Some(v) if located.table.length_sat(k, start) < u64::MAX => {
                let d: Descent<u64> = descend(&located.table, images, start, k, v);
                (d.digits, Residuals::Small(d.residuals))
            }
            _ => {
                let d = descend(&located.table, images, start, k, located.residual.clone());
                (d.digits, Residuals::Big(d.residuals))
            }
        };
        Some(Expansion {
            located,
            digits,
            residuals,
        })
    }

    /// `rep_u(n)`.
    pub fn rep(&self, n: impl Into<BigInt>) -> SignedRep {
        self.rep_big(&n.into())
    }

    pub fn rep_big(&self, n: &BigInt) -> SignedRep {
        match self.expand(n) {
            None => SignedRep(DigitWord::new(vec![if n.is_zero() { 0 } else { 1 }])),
            Some(e) => {
                let mut digits = Vec::with_capacity(e.digits.len() + 1);
                digits.push(e.located.sign);
                digits.extend(e.digits);
                SignedRep(DigitWord::new(digits))
            }
        }
    }

    /// Walks `w` through the automaton and sums the lengths of the skipped
    /// prefixes, level by level.
    fn checked_sum(&self, w: &[u32]) -> Result<BigInt> {
        let first = *w.first().ok_or(Error::EmptyWord)?;
        if first > 1 {
            return Err(Error::BadSignDigit(first));
        }
        let p = self.period();
        if !(w.len() - 1).is_multiple_of(p) {
            return Err(Error::LengthClass {
                len: w.len(),
                period: p,
            });
        }
        let s = self.substitution();
        let images = s.raw_images();
        let k = w.len() - 1;
        let start = if first == 0 { self.right() } else { self.left() };
        let table = s.lengths(k);
        // path check and fast accumulation in one pass
        let mut state = start.index();
        let mut small: Option<u64> = Some(0);
        for (t, &d) in w[1..].iter().enumerate() {
            let image = &images[state];
            if d as usize >= image.len() {
                return Err(Error::NoTransition {
                    state: s.name(Letter(state)).to_string(),
                    digit: d,
                    position: t + 1,
                });
            }
            let j = k - 1 - t;
            small = small.and_then(|acc| {
                let add = table.prefix_row::<u64>(j, state)[d as usize];
                if add == u64::MAX {
                    None
                } else {
                    acc.checked_add(add)
                }
            });
            state = image[d as usize];
        }
        let sum = match small {
            Some(v) => BigUint::from(v),
            None => {
                let mut acc = BigUint::zero();
                let mut state = start.index();
                for (t, &d) in w[1..].iter().enumerate() {
                    acc += &table.prefix_row::<BigUint>(k - 1 - t, state)[d as usize];
                    state = images[state][d as usize];
                }
                acc
            }
        };
        let sum = BigInt::from(sum);
        Ok(if first == 0 {
            sum
        } else {
            sum - BigInt::from(table.length(k, start.index()).clone())
        })
    }

    /// The integer a (possibly padded) accepted word stands for.
    pub fn val(&self, w: &[u32]) -> Result<BigInt> {
        self.checked_sum(w)
    }

    /// Whether `w` is `rep_u(n)` for some `n`.
    pub fn is_canonical(&self, w: &[u32]) -> bool {
        if self.checked_sum(w).is_err() {
            return false;
        }
        let p = self.period();
        if w.len() < p + 1 {
            return true;
        }
        let neutral = self.neutral_words();
        let block = &w[1..=p];
        match w[0] {
            0 => block != neutral.w_min.digits(),
            _ => block != neutral.w_max.digits(),
        }
    }
}

fn check_signed(w: &[u32]) -> Result<u32> {
    let first = *w.first().ok_or(Error::EmptyWord)?;
    if first > 1 {
        return Err(Error::BadSignDigit(first));
    }
    Ok(first)
}

/// The total order `≺` on `{0,1}D*`: negative words (leading 1) first in
/// reverse-radix order, then nonnegative words in radix order.
pub fn cmp(a: &[u32], b: &[u32]) -> Result<Ordering> {
    let sa = check_signed(a)?;
    let sb = check_signed(b)?;
    Ok(match (sa, sb) {
        (1, 0) => Ordering::Less,
        (0, 1) => Ordering::Greater,
        (0, _) => a.len().cmp(&b.len()).then_with(|| a.cmp(b)),
        _ => b.len().cmp(&a.len()).then_with(|| a.cmp(b)),
    })
}

/// [`cmp`] for words already known to be signed; panics otherwise.
pub fn cmp_signed(a: &[u32], b: &[u32]) -> Ordering {
    cmp(a, b).expect("signed digit words")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::Dfao;
    use crate::systems;
    use proptest::prelude::*;

    fn w(s: &str) -> DigitWord {
        s.parse().unwrap()
    }

    #[test]
    fn rep_examples() {
        let gamma = systems::point("fibonacci", "b|a").unwrap();
        let delta = systems::point("fibonacci", "a|a").unwrap();
        let tau = systems::point("tribonacci", "c|a").unwrap();
        let chi = systems::point("mu_intro", "c|a").unwrap();
        let alpha = systems::point("thue_morse", "a|a").unwrap();
        let xi = systems::point("rho_nonprimitive", "b|a").unwrap();
        assert_eq!(gamma.rep(10).to_string(), "0010010");
        assert_eq!(tau.rep(-5).to_string(), "1010110");
        assert_eq!(chi.rep(4).to_string(), "020");
        assert_eq!(alpha.rep(-2).to_string(), "110");
        assert_eq!(delta.rep(-2).to_string(), "101");
        assert_eq!(xi.rep(9).to_string(), "0100000000");
        for pp in systems::reference_points() {
            assert_eq!(pp.rep(0).to_string(), "0");
            assert_eq!(pp.rep(-1).to_string(), "1");
        }
    }

    #[test]
    fn val_examples() {
        let gamma = systems::point("fibonacci", "b|a").unwrap();
        let tau = systems::point("tribonacci", "c|a").unwrap();
        assert_eq!(gamma.val(&w("0010010")), Ok(BigInt::from(10)));
        assert_eq!(tau.val(&w("1011011")), Ok(BigInt::from(-1)));
        assert_eq!(gamma.val(&w("0")), Ok(BigInt::from(0)));
        assert!(matches!(
            gamma.val(&w("011")),
            Err(Error::NoTransition { digit: 1, position: 2, .. })
        ));
        assert!(matches!(gamma.val(&w("01")), Err(Error::LengthClass { .. })));
        assert_eq!(gamma.val(&[]), Err(Error::EmptyWord));
        assert_eq!(gamma.val(&[2, 0, 0]), Err(Error::BadSignDigit(2)));
    }

    #[test]
    fn is_canonical_examples() {
        let gamma = systems::point("fibonacci", "b|a").unwrap();
        let beta = systems::point("psi2", "b|a").unwrap();
        assert!(gamma.is_canonical(&w("100")));
        assert!(!gamma.is_canonical(&w("101")));
        assert!(!gamma.is_canonical(&w("10100")));
        assert!(!gamma.is_canonical(&w("01")));
        assert!(!gamma.is_canonical(&w("000")));
        assert!(!beta.is_canonical(&w("00")));
        assert!(beta.is_canonical(&w("10")));
        assert!(!beta.is_canonical(&[]));
        assert!(!beta.is_canonical(&[3]));
    }

    #[test]
    fn cmp_examples() {
        let chain = ["10", "1", "0", "01"];
        for pair in chain.windows(2) {
            assert_eq!(cmp(&w(pair[0]), &w(pair[1])), Ok(Ordering::Less));
        }
        assert_eq!(cmp(&w("100"), &w("101")), Ok(Ordering::Less));
        assert_eq!(cmp(&w("0110"), &w("0110")), Ok(Ordering::Equal));
        // the displayed chain for D = {0, 1}
        let chain = [
            "100", "101", "110", "111", "10", "11", "1", "0", "00", "01", "000", "001", "010",
            "011",
        ];
        for pair in chain.windows(2) {
            assert_eq!(cmp(&w(pair[0]), &w(pair[1])), Ok(Ordering::Less), "{pair:?}");
        }
        assert_eq!(cmp(&[], &w("0")), Err(Error::EmptyWord));
        assert_eq!(cmp(&w("2"), &w("0")), Err(Error::BadSignDigit(2)));
    }

    #[test]
    fn round_trip_monotone_and_length_class_on_reference_points() {
        for pp in systems::reference_points() {
            let p = pp.period();
            let mut prev = pp.rep(-1001);
            for n in -1000i64..=1000 {
                let r = pp.rep(n);
                assert_eq!(pp.val(&r), Ok(BigInt::from(n)), "{pp} n={n}");
                assert_eq!(cmp(&prev, &r), Ok(Ordering::Less), "{pp} n={n}");
                assert_eq!(r.sign_digit() == 0, n >= 0);
                assert_eq!((r.len() - 1) % p, 0);
                assert!(pp.is_canonical(&r), "{pp} n={n} {r}");
                prev = r;
            }
        }
    }

    #[test]
    fn image_is_language_minus_neutral_cones() {
        // Enumerate canonical words of length <= 4p+1 by automaton paths,
        // sort them by ≺, align "0" with 0 and compare against rep.
        for pp in systems::reference_points() {
            let p = pp.period();
            let dfao = Dfao::new(&pp);
            let mut words: Vec<Vec<u32>> = Vec::new();
            for l in 0..=4 {
                for word in dfao.enumerate_language(l * p + 1) {
                    if pp.is_canonical(&word) {
                        words.push(word.into_digits());
                    }
                }
            }
            words.sort_by(|a, b| cmp_signed(a, b));
            let zero = words.iter().position(|x| x == &[0]).unwrap() as i64;
            for (i, word) in words.iter().enumerate() {
                let n = i as i64 - zero;
                assert_eq!(pp.rep(n).digits(), &word[..], "{pp} n={n}");
            }
        }
    }

    #[test]
    fn big_values_round_trip() {
        let gamma = systems::point("fibonacci", "b|a").unwrap();
        for e in [19u32, 20, 25, 40, 60] {
            for sign in [1i64, -1] {
                let n = BigInt::from(10u8).pow(e) * sign;
                let r = gamma.rep_big(&n);
                assert_eq!(gamma.val(&r).unwrap(), n);
                let m = &n + 1;
                assert_eq!(cmp(&r, &gamma.rep_big(&m)), Ok(Ordering::Less));
            }
        }
        // around the u64 boundary
        let xi = systems::point("psi2", "b|a").unwrap();
        for off in -3i64..=3 {
            let n = BigInt::from(u64::MAX) + off;
            assert_eq!(xi.val(&xi.rep_big(&n)).unwrap(), n);
            let n = -BigInt::from(u64::MAX) + off;
            assert_eq!(xi.val(&xi.rep_big(&n)).unwrap(), n);
        }
    }

    proptest! {
        #[test]
        fn cmp_is_a_total_order(
            a in prop::collection::vec(0u32..3, 0..6),
            b in prop::collection::vec(0u32..3, 0..6),
            c in prop::collection::vec(0u32..3, 0..6),
            sa in 0u32..2, sb in 0u32..2, sc in 0u32..2,
        ) {
            let a: Vec<u32> = std::iter::once(sa).chain(a).collect();
            let b: Vec<u32> = std::iter::once(sb).chain(b).collect();
            let c: Vec<u32> = std::iter::once(sc).chain(c).collect();
            let ab = cmp_signed(&a, &b);
            prop_assert_eq!(ab, cmp_signed(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && cmp_signed(&b, &c) != Ordering::Greater {
                prop_assert_ne!(cmp_signed(&a, &c), Ordering::Greater);
            }
        }

        #[test]
        fn rep_round_trips_on_wide_range(n in -10i64.pow(15)..10i64.pow(15), idx in 0usize..7) {
            let pp = &systems::reference_points()[idx];
            if idx != 6 {
                let r = pp.rep(n);
                prop_assert_eq!(pp.val(&r).unwrap(), BigInt::from(n));
            }
        }
    }
}

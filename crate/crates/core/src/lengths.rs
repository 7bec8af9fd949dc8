//! Iterated image lengths `|η^j(c)|` and the per-level prefix sums used by
//! every descent through the substitution tree.
//!
//! Each quantity is stored twice: exactly as a [`BigUint`] and as a
//! saturating `u64`. The saturated copy is exact whenever it is below
//! `u64::MAX`, so comparisons against a residual `n < u64::MAX` stay correct.

use std::ops::SubAssign;

use num_bigint::BigUint;
use num_traits::Zero;

/// Length data for levels `0..levels()`.
#[derive(Debug, Clone)]
pub struct LengthTable {
    /// `lengths[j][c] = |η^j(c)|`, for `j` in `0..=levels`.
    lengths: Vec<Vec<BigUint>>,
    lengths_sat: Vec<Vec<u64>>,
    /// `prefix[j][c][i] = |η^j(η(c)[..i])|`, for `j` in `0..levels`.
    prefix: Vec<Vec<Vec<BigUint>>>,
    prefix_sat: Vec<Vec<Vec<u64>>>,
}

impl LengthTable {
    pub(crate) fn new(letters: usize) -> Self {
        LengthTable {
            lengths: vec![vec![BigUint::from(1u8); letters]],
            lengths_sat: vec![vec![1; letters]],
            prefix: Vec::new(),
            prefix_sat: Vec::new(),
        }
    }

    /// Number of levels with prefix sums; lengths are known one level further.
    pub fn levels(&self) -> usize {
        self.prefix.len()
    }

    pub(crate) fn extend_to(&mut self, images: &[Vec<usize>], levels: usize) {
        while self.prefix.len() < levels {
            let j = self.prefix.len();
            let len = &self.lengths[j];
            let len_sat = &self.lengths_sat[j];
            let mut rows = Vec::with_capacity(images.len());
            let mut rows_sat = Vec::with_capacity(images.len());
            let mut next = Vec::with_capacity(images.len());
            let mut next_sat = Vec::with_capacity(images.len());
            for image in images {
                let mut row = Vec::with_capacity(image.len() + 1);
                let mut row_sat = Vec::with_capacity(image.len() + 1);
                let mut acc = BigUint::zero();
                let mut acc_sat = 0u64;
                row.push(acc.clone());
                row_sat.push(acc_sat);
                for &b in image {
                    acc += &len[b];
                    acc_sat = acc_sat.saturating_add(len_sat[b]);
                    row.push(acc.clone());
                    row_sat.push(acc_sat);
                }
                next.push(acc);
                next_sat.push(acc_sat);
                rows.push(row);
                rows_sat.push(row_sat);
            }
            self.prefix.push(rows);
            self.prefix_sat.push(rows_sat);
            self.lengths.push(next);
            self.lengths_sat.push(next_sat);
        }
    }

    /// `|η^level(letter)|`; requires `level <= levels()`.
    pub fn length(&self, level: usize, letter: usize) -> &BigUint {
        &self.lengths[level][letter]
    }

    /// Saturating `|η^level(letter)|`; `u64::MAX` means "at least `u64::MAX`".
    pub fn length_sat(&self, level: usize, letter: usize) -> u64 {
        self.lengths_sat[level][letter]
    }

    pub(crate) fn prefix_row<T: Measure>(&self, level: usize, letter: usize) -> &[T] {
        T::row(self, level, letter)
    }
}

/// Integer types the descent can run on.
pub(crate) trait Measure: Ord + Clone + for<'a> SubAssign<&'a Self> {
    fn row(table: &LengthTable, level: usize, letter: usize) -> &[Self];
}

impl Measure for u64 {
    fn row(table: &LengthTable, level: usize, letter: usize) -> &[u64] {
        &table.prefix_sat[level][letter]
    }
}

impl Measure for BigUint {
    fn row(table: &LengthTable, level: usize, letter: usize) -> &[BigUint] {
        &table.prefix[level][letter]
    }
}

/// Result of descending from `start` through `levels` levels of the tree.
#[derive(Debug, Clone)]
pub(crate) struct Descent<T> {
    /// Digits from the top level `levels - 1` down to level 0.
    pub digits: Vec<u32>,
    /// Letter `a_i` reached after each digit, aligned with `digits`.
    pub letters: Vec<usize>,
    /// Residual before each level, aligned with `digits`.
    pub residuals: Vec<T>,
}

/// Walks the unique admissible sequence for position `n` below `η^levels(start)`.
///
/// Requires `n < |η^levels(start)|` and `table.levels() >= levels`.
pub(crate) fn descend<T: Measure>(
    table: &LengthTable,
    images: &[Vec<usize>],
    start: usize,
    levels: usize,
    mut n: T,
) -> Descent<T> {
    let mut digits = Vec::with_capacity(levels);
    let mut letters = Vec::with_capacity(levels);
    let mut residuals = Vec::with_capacity(levels);
    let mut current = start;
    for j in (0..levels).rev() {
        let row: &[T] = table.prefix_row(j, current);
        let image = &images[current];
        // row[0] = 0 <= n < row[image.len()]
        let i = (row.partition_point(|x| *x <= n) - 1).min(image.len() - 1);
        residuals.push(n.clone());
        n -= &row[i];
        digits.push(i as u32);
        current = image[i];
        letters.push(current);
    }
    Descent {
        digits,
        letters,
        residuals,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fibonacci_images() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![0]]
    }

    #[test]
    fn lengths_follow_fibonacci_numbers() {
        let mut t = LengthTable::new(2);
        t.extend_to(&fibonacci_images(), 6);
        let got: Vec<u64> = (0..=6).map(|j| t.length_sat(j, 0)).collect();
        assert_eq!(got, vec![1, 2, 3, 5, 8, 13, 21]);
        assert_eq!(t.length(6, 0), &BigUint::from(21u8));
    }

    #[test]
    fn saturated_copy_caps_at_max() {
        let mut t = LengthTable::new(2);
        t.extend_to(&[vec![0, 0], vec![1]], 70);
        assert_eq!(t.length_sat(63, 0), 1u64 << 63);
        assert_eq!(t.length_sat(64, 0), u64::MAX);
        assert_eq!(t.length(64, 0), &(BigUint::from(1u8) << 64));
        assert_eq!(t.length_sat(70, 1), 1);
    }

    #[test]
    fn descent_agrees_between_widths() {
        let images = fibonacci_images();
        let mut t = LengthTable::new(2);
        t.extend_to(&images, 10);
        for n in 0..89u64 {
            let small = descend(&t, &images, 0, 10, n);
            let big = descend(&t, &images, 0, 10, BigUint::from(n));
            assert_eq!(small.digits, big.digits);
            assert_eq!(small.letters, big.letters);
        }
    }
}

//! Two's complement and the Fibonacci complement arise from periodic points,
//! shown here against direct implementations of both.

use dumont_thomas::compat::{rep_2c, rep_fc};
use dumont_thomas::{systems, BigInt};

fn main() {
    let beta = systems::point("psi2", "b|a").expect("bundled");
    let gamma = systems::point("fibonacci", "b|a").expect("bundled");
    println!("{:>4}  {:>8} {:>8}  {:>9} {:>9}", "n", "psi2", "2c", "fibonacci", "fc");
    for n in -8i64..=8 {
        let nb = BigInt::from(n);
        let (a, b) = (beta.rep(n), rep_2c(&nb));
        let (c, d) = (gamma.rep(n), rep_fc(&nb));
        assert_eq!(*a.word(), b);
        assert_eq!(*c.word(), d);
        println!("{n:>4}  {a:>8} {b:>8}  {c:>9} {d:>9}");
    }

    let mismatches = (-100_000i64..=100_000)
        .filter(|&n| *gamma.rep(n).word() != rep_fc(&BigInt::from(n)))
        .count();
    println!("fibonacci mismatches on |n| <= 10^5: {mismatches}");
}

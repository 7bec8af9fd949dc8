//! Prints `rep(n)` for a range of integers on every reference periodic point
//! and checks that `val` inverts it.
//!
//! cargo run --example representations -- -12 12

use dumont_thomas::systems;

fn main() {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (lo, hi) = match args[..] {
        [lo, hi] => (lo, hi),
        _ => (-10, 10),
    };
    let points = systems::reference_points();

    print!("{:>5}", "n");
    for (name, seed) in systems::REFERENCE_POINTS {
        print!("  {:>14}", format!("{name} {seed}"));
    }
    println!();
    for n in (lo..=hi).rev() {
        print!("{n:>5}");
        for pp in &points {
            let r = pp.rep(n);
            assert_eq!(pp.val(&r).unwrap(), n.into());
            print!("  {r:>14}");
        }
        println!();
    }
}

//! Builds a numeration system from a substitution given on the command line
//! (or a default one), listing its periodic points first.
//!
//! cargo run --example custom_substitution -- 'a -> aab; b -> ba'

use dumont_thomas::{enumerate_seeds, PeriodicPoint, Substitution};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "a -> abb; b -> ba".into())
        .replace(';', "\n");
    let s: Substitution = match text.parse() {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(1);
        }
    };
    print!("{s}");

    for (seed, period) in enumerate_seeds(&s) {
        let pp = PeriodicPoint::new(s.clone(), seed).unwrap();
        let reps: Vec<String> = (-4..=4).map(|n| pp.rep(n).to_string()).collect();
        println!("{}|{} (period {period}): {}", s.name(seed.left), s.name(seed.right), reps.join(" "));
    }
}

//! Positions inside `η^k(x)` as paths in the substitution tree: tails,
//! admissible sequences and the quotient/remainder split of an integer.

use dumont_thomas::{decompose, systems, tail};
use num_bigint::BigUint;

fn main() {
    let t = systems::load("tribonacci").expect("bundled");
    let a = t.letter("a").unwrap();

    for p in 1..=3 {
        let size = t.image_length(a, p);
        let tails: Vec<String> = (0u32..)
            .map(BigUint::from)
            .take_while(|n| n < &size)
            .map(|n| tail(&t, p, a, &n).unwrap().to_string())
            .collect();
        println!("level {p}: {}", tails.join(" "));
    }

    let n = BigUint::from(5u8);
    let d = decompose(&t, 3, a, &n).unwrap();
    println!("\nposition 5 of {}:", t.render(&t.apply_n(&[a], 3)));
    for (m, letter) in &d.entries {
        println!("  prefix {:<3} then {}", t.render(m), t.name(*letter));
    }
    println!("  digits {}, letter {}", d.digits(), t.name(d.final_letter()));

    let gamma = systems::point("fibonacci", "b|a").unwrap();
    for n in [10, -2, 100] {
        let (q, r) = gamma.quotient_remainder(n).unwrap();
        println!("rep({n}) = {}: quotient {q}, remainder {r}", gamma.rep(n));
    }
}

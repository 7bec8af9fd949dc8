//! Writes the automaton of a periodic point as Graphviz DOT.
//!
//! cargo run --example dot_export -- mu_intro 'c|a' | dot -Tsvg > mu.svg

use dumont_thomas::{systems, Dfao};

fn main() {
    let mut args = std::env::args().skip(1);
    let system = args.next().unwrap_or_else(|| "fibonacci".into());
    let seed = args.next().unwrap_or_else(|| "b|a".into());
    match systems::point(&system, &seed) {
        Ok(pp) => print!("{}", Dfao::new(&pp).to_dot()),
        Err(e) => {
            eprintln!("{system} {seed}: {e}");
            std::process::exit(1);
        }
    }
}

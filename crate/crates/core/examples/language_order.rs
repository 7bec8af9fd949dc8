//! Canonical words are exactly the automaton's words minus two neutral
//! cones; sorting them by the signed order reproduces `rep`.

use dumont_thomas::numeration::cmp_signed;
use dumont_thomas::{systems, Dfao};

fn main() {
    let chi = systems::point("mu_intro", "c|a").expect("bundled");
    let dfao = Dfao::new(&chi);

    let mut words = Vec::new();
    for len in 1..=3 {
        let all = dfao.enumerate_language(len);
        let total = all.len();
        words.extend(all.into_iter().filter(|w| chi.is_canonical(w)));
        println!("length {len}: {total} words accepted");
    }
    words.sort_by(|a, b| cmp_signed(a, b));
    let zero = words.iter().position(|w| w.digits() == [0]).unwrap() as i64;

    for (i, w) in words.iter().enumerate() {
        let n = i as i64 - zero;
        assert_eq!(chi.rep(n).word(), w);
        print!("{n}:{w} ");
    }
    println!();
}

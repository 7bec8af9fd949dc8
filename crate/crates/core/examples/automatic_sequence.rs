//! Reads letters of a two-sided periodic point through its automaton and
//! compares them with brute-force iteration of the substitution.

use dumont_thomas::{systems, BigInt, Dfao};

fn main() {
    let tau = systems::point("tribonacci", "c|a").expect("bundled");
    let s = tau.substitution();
    let dfao = Dfao::new(&tau);

    let radius = 30i64;
    let from_automaton: String = (-radius..radius)
        .map(|n| s.name(tau.letter_at_with(&dfao, &BigInt::from(n))).to_string())
        .collect();
    let brute = s.render(&tau.expand_segment(-radius, radius));
    println!("automaton  {}|{}", &from_automaton[..radius as usize], &from_automaton[radius as usize..]);
    println!("expansion  {}|{}", &brute[..radius as usize], &brute[radius as usize..]);
    assert_eq!(from_automaton, brute);

    // far from the origin only the automaton is practical
    let far: BigInt = BigInt::from(10u8).pow(30) + 7;
    let r = tau.rep_big(&far);
    println!("letter at 10^30 + 7 is {} (read from a {}-digit word)", s.name(dfao.eval(&r).unwrap()), r.len());
}

//! Neutral blocks, padding to a common width, and representations of
//! integer vectors as words over tuples of digits.

use dumont_thomas::{rep_zd, systems, val_zd, BigInt};

fn main() {
    let tau = systems::point("tribonacci", "c|a").expect("bundled");
    let neutral = tau.neutral_words();
    println!("W_min = {}, W_max = {}", neutral.w_min, neutral.w_max);

    for n in [-10, -5, -1, 0, 3, 10] {
        let r = tau.rep(n);
        let padded = tau.pad(&r, 10).unwrap();
        println!("{n:>4}  {r:>8}  {padded}");
        assert_eq!(tau.val(&padded).unwrap(), n.into());
    }

    let v = [BigInt::from(-1), BigInt::from(8), BigInt::from(-30)];
    let points = vec![tau; v.len()];
    let m = rep_zd(&points, &v).unwrap();
    print!("\n{m}");
    println!("{}", m.render_columns());
    assert_eq!(val_zd(&points, &m).unwrap(), v);
}

//! Bundled substitution configs and the reference periodic points built on them.

use crate::error::Result;
use crate::periodic::PeriodicPoint;
use crate::substitution::Substitution;

/// `(name, config text)` for every bundled substitution.
pub const BUNDLED: [(&str, &str); 6] = [
    ("thue_morse", include_str!("../systems/thue_morse.sub")),
    ("psi2", include_str!("../systems/psi2.sub")),
    ("fibonacci", include_str!("../systems/fibonacci.sub")),
    ("tribonacci", include_str!("../systems/tribonacci.sub")),
    ("mu_intro", include_str!("../systems/mu_intro.sub")),
    ("rho_nonprimitive", include_str!("../systems/rho_nonprimitive.sub")),
];

/// The seven reference periodic points as `(system, seed)`.
pub const REFERENCE_POINTS: [(&str, &str); 7] = [
    ("thue_morse", "a|a"),
    ("psi2", "b|a"),
    ("fibonacci", "b|a"),
    ("fibonacci", "a|a"),
    ("tribonacci", "c|a"),
    ("mu_intro", "c|a"),
    ("rho_nonprimitive", "b|a"),
];

pub fn bundled(name: &str) -> Option<&'static str> {
    BUNDLED.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Parses a bundled substitution by name.
///
/// # Panics
/// If `name` is not bundled.
pub fn load(name: &str) -> Result<Substitution> {
    let text = bundled(name).unwrap_or_else(|| panic!("no bundled system named `{name}`"));
    Substitution::parse(text)
}

/// A periodic point on a bundled substitution.
pub fn point(name: &str, seed: &str) -> Result<PeriodicPoint> {
    PeriodicPoint::from_seed_text(load(name)?, seed)
}

/// All seven reference points, in [`REFERENCE_POINTS`] order.
pub fn reference_points() -> Vec<PeriodicPoint> {
    REFERENCE_POINTS
        .iter()
        .map(|(n, s)| point(n, s).expect("bundled reference points are valid"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_periods() {
        let periods: Vec<usize> = reference_points().iter().map(|p| p.period()).collect();
        assert_eq!(periods, vec![2, 1, 2, 2, 3, 1, 1]);
    }
}

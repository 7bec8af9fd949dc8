//! The `dtnum` command line front end.
//!
//! Exit status: 0 on success, 1 on domain errors (bad word, bad seed, failed
//! check), 2 on usage errors.

use std::cmp::Ordering;
use std::fmt;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::automaton::Dfao;
use crate::compat;
use crate::digits::DigitWord;
use crate::multidim::rep_zd;
use crate::numeration::cmp_signed;
use crate::periodic::{enumerate_seeds, PeriodicPoint};
use crate::substitution::Substitution;
use crate::systems;

#[derive(Debug, Parser)]
#[command(name = "dtnum", version, about = "Complement numeration systems from periodic points of substitutions")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Args)]
struct SystemArgs {
    /// Bundled system name or path to a substitution file.
    #[arg(long)]
    system: String,
    /// Seed as `LEFT|RIGHT`.
    #[arg(long)]
    seed: String,
    /// Separator placed between digits on output and expected on input.
    #[arg(long = "digit-sep")]
    digit_sep: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the representation of each integer.
    Rep {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long = "n", allow_hyphen_values = true)]
        n_flag: Vec<BigInt>,
        #[arg(allow_negative_numbers = true)]
        n: Vec<BigInt>,
    },
    /// Print the integer each (possibly padded) word stands for.
    Val {
        #[command(flatten)]
        sys: SystemArgs,
        words: Vec<String>,
    },
    /// Print the letter of the periodic point at each position.
    LetterAt {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long = "n", allow_hyphen_values = true)]
        n_flag: Vec<BigInt>,
        #[arg(allow_negative_numbers = true)]
        n: Vec<BigInt>,
    },
    /// List the seeds of two-sided periodic points and their periods.
    Seeds {
        #[arg(long)]
        system: String,
    },
    /// Print a TSV table of representations.
    Table {
        #[arg(long)]
        system: Option<String>,
        #[arg(long)]
        seed: Option<String>,
        /// Tabulate all seven reference periodic points side by side.
        #[arg(long, conflicts_with_all = ["system", "seed"])]
        reference: bool,
        #[arg(long, default_value_t = -10, allow_hyphen_values = true)]
        from: i64,
        #[arg(long, default_value_t = 10, allow_hyphen_values = true)]
        to: i64,
        #[arg(long = "digit-sep")]
        digit_sep: Option<String>,
    },
    /// Print the automaton in Graphviz DOT format.
    Dot {
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Print representations padded with neutral blocks to a common width.
    Pad {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long)]
        width: usize,
        #[arg(long = "n", allow_hyphen_values = true)]
        n_flag: Vec<BigInt>,
        #[arg(allow_negative_numbers = true)]
        n: Vec<BigInt>,
    },
    /// Represent an integer vector (one `--n` per coordinate).
    Zd {
        #[arg(long)]
        system: String,
        /// One seed for all coordinates, or one per coordinate.
        #[arg(long, required = true)]
        seed: Vec<String>,
        #[arg(long = "n", allow_hyphen_values = true, required = true)]
        n: Vec<BigInt>,
        #[arg(long = "digit-sep")]
        digit_sep: Option<String>,
    },
    /// Two's complement and Fibonacci complement reference systems.
    Compat {
        #[arg(long, value_enum)]
        system: CompatSystem,
        #[command(subcommand)]
        action: CompatAction,
    },
    /// Sweep positions checking the automaton against brute-force expansion,
    /// the value round trip and monotonicity.
    Check {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 1000)]
        range: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CompatSystem {
    #[value(name = "2c")]
    TwosComplement,
    #[value(name = "fc")]
    FibonacciComplement,
}

#[derive(Debug, Subcommand)]
enum CompatAction {
    Rep {
        #[arg(allow_negative_numbers = true)]
        n: Vec<BigInt>,
    },
    Val { words: Vec<String> },
    /// Compare against the substitution-based system on `[-range, range]`.
    Verify {
        #[arg(long, default_value_t = 10000)]
        range: u32,
    },
}

/// A domain error reported with status 1.
#[derive(Debug)]
struct Failure(String);

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn load_system(name: &str) -> std::result::Result<Substitution, Failure> {
    let text = match systems::bundled(name) {
        Some(t) => t.to_string(),
        None => std::fs::read_to_string(name)
            .map_err(|e| Failure(format!("cannot read system `{name}`: {e}")))?,
    };
    Ok(Substitution::parse(&text)?)
}

fn load_point(system: &str, seed: &str) -> std::result::Result<PeriodicPoint, Failure> {
    Ok(PeriodicPoint::from_seed_text(load_system(system)?, seed)?)
}

fn render(w: &DigitWord, sep: Option<&str>) -> String {
    match sep {
        Some(s) => w.render_with(s),
        None => w.to_string(),
    }
}

fn parse_word(text: &str, sep: Option<&str>) -> std::result::Result<DigitWord, Failure> {
    match sep {
        Some(s) if !s.is_empty() => text
            .split(s)
            .map(|t| t.trim().parse::<u32>().map_err(|_| Failure(format!("invalid digit word `{text}`"))))
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(DigitWord::new),
        _ => Ok(text.parse()?),
    }
}

fn positions(flag: Vec<BigInt>, positional: Vec<BigInt>) -> std::result::Result<Vec<BigInt>, Failure> {
    let all: Vec<BigInt> = flag.into_iter().chain(positional).collect();
    if all.is_empty() {
        return Err(Failure("no integer given".into()));
    }
    Ok(all)
}

/// Outcome of a `check` sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub points: usize,
    pub failures: Vec<String>,
}

/// Checks, for every `|n| <= range`: the automaton letter against
/// brute-force expansion, `val(rep(n)) = n`, and `rep(n) ≺ rep(n + 1)`.
pub fn check_point(pp: &PeriodicPoint, range: u32) -> CheckReport {
    let m = range as i64;
    let dfao = Dfao::new(pp);
    let oracle = pp.expand_segment(-m, m + 1);
    let s = pp.substitution();
    let mut failures = Vec::new();
    let mut next = pp.rep(-m);
    for n in -m..=m {
        let r = next;
        next = pp.rep(n + 1);
        let nb = BigInt::from(n);
        let letter = pp.letter_at_with(&dfao, &nb);
        let expected = oracle[(n + m) as usize];
        if letter != expected {
            failures.push(format!(
                "letter at {n}: automaton gives {}, expansion gives {}",
                s.name(letter),
                s.name(expected)
            ));
        }
        match pp.val(&r) {
            Ok(v) if v == nb => {}
            other => failures.push(format!("val(rep({n})) = {other:?}")),
        }
        if cmp_signed(&r, &next) != Ordering::Less {
            failures.push(format!("rep({n}) = {r} is not below rep({}) = {next}", n + 1));
        }
    }
    CheckReport {
        points: (2 * m + 1) as usize,
        failures,
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Outcome {
    match cli.command {
        Command::Rep { sys, n_flag, n } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            for n in positions(n_flag, n)? {
                writeln!(out, "{}", render(&pp.rep_big(&n), sys.digit_sep.as_deref()))?;
            }
        }
        Command::Val { sys, words } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            if words.is_empty() {
                return Err(Failure("no word given".into()));
            }
            for w in words {
                let word = parse_word(&w, sys.digit_sep.as_deref())?;
                writeln!(out, "{}", pp.val(&word)?)?;
            }
        }
        Command::LetterAt { sys, n_flag, n } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            let dfao = Dfao::new(&pp);
            for n in positions(n_flag, n)? {
                let a = pp.letter_at_with(&dfao, &n);
                writeln!(out, "{}", pp.substitution().name(a))?;
            }
        }
        Command::Seeds { system } => {
            let s = load_system(&system)?;
            for (seed, p) in enumerate_seeds(&s) {
                writeln!(out, "{}|{}\t{p}", s.name(seed.left), s.name(seed.right))?;
            }
        }
        Command::Table {
            system,
            seed,
            reference,
            from,
            to,
            digit_sep,
        } => {
            let (points, headers): (Vec<PeriodicPoint>, Vec<String>) = if reference {
                let pts = systems::reference_points();
                let hs = systems::REFERENCE_POINTS
                    .iter()
                    .map(|(n, s)| format!("{n}:{s}"))
                    .collect();
                (pts, hs)
            } else {
                match (system, seed) {
                    (Some(system), Some(seed)) => (vec![load_point(&system, &seed)?], vec!["rep".to_string()]),
                    _ => return Err(Failure("table needs --system and --seed, or --reference".into())),
                }
            };
            writeln!(out, "n\t{}", headers.join("\t"))?;
            let rows: Vec<i64> = if from <= to {
                (from..=to).collect()
            } else {
                (to..=from).rev().collect()
            };
            for n in rows {
                let cells: Vec<String> = points
                    .iter()
                    .map(|pp| render(&pp.rep(n), digit_sep.as_deref()))
                    .collect();
                writeln!(out, "{n}\t{}", cells.join("\t"))?;
            }
        }
        Command::Dot { sys } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            write!(out, "{}", Dfao::new(&pp).to_dot())?;
        }
        Command::Pad { sys, width, n_flag, n } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            for n in positions(n_flag, n)? {
                let padded = pp.pad(&pp.rep_big(&n), width)?;
                writeln!(out, "{}", render(&padded, sys.digit_sep.as_deref()))?;
            }
        }
        Command::Zd {
            system,
            seed,
            n,
            digit_sep,
        } => {
            let s = load_system(&system)?;
            let seeds: Vec<&String> = match seed.len() {
                1 => vec![&seed[0]; n.len()],
                k if k == n.len() => seed.iter().collect(),
                k => {
                    return Err(Failure(format!(
                        "{k} seeds given for {} coordinates",
                        n.len()
                    )))
                }
            };
            let points = seeds
                .into_iter()
                .map(|t| PeriodicPoint::from_seed_text(s.clone(), t))
                .collect::<crate::Result<Vec<_>>>()?;
            let m = rep_zd(&points, &n)?;
            for r in m.rows() {
                writeln!(out, "{}", render(r, digit_sep.as_deref()))?;
            }
            writeln!(out, "{}", m.render_columns())?;
        }
        Command::Compat { system, action } => compat_command(system, action, out)?,
        Command::Check { sys, range } => {
            let pp = load_point(&sys.system, &sys.seed)?;
            let report = check_point(&pp, range);
            if report.failures.is_empty() {
                writeln!(out, "OK (3 properties × {} points)", report.points)?;
            } else {
                for f in &report.failures {
                    writeln!(out, "{f}")?;
                }
                return Err(Failure(format!(
                    "FAIL ({} failures over {} points)",
                    report.failures.len(),
                    report.points
                )));
            }
        }
    }
    Ok(())
}

type RepFn = fn(&BigInt) -> DigitWord;
type ValFn = fn(&[u32]) -> crate::Result<BigInt>;

fn compat_command(system: CompatSystem, action: CompatAction, out: &mut dyn Write) -> Outcome {
    let (rep, val): (RepFn, ValFn) = match system {
        CompatSystem::TwosComplement => (compat::rep_2c, compat::val_2c),
        CompatSystem::FibonacciComplement => (compat::rep_fc, compat::val_fc),
    };
    match action {
        CompatAction::Rep { n } => {
            for n in positions(Vec::new(), n)? {
                writeln!(out, "{}", rep(&n))?;
            }
        }
        CompatAction::Val { words } => {
            for w in words {
                writeln!(out, "{}", val(&w.parse::<DigitWord>()?)?)?;
            }
        }
        CompatAction::Verify { range } => {
            let pp = match system {
                CompatSystem::TwosComplement => systems::point("psi2", "b|a")?,
                CompatSystem::FibonacciComplement => systems::point("fibonacci", "b|a")?,
            };
            let m = range as i64;
            let mut mismatches = 0usize;
            for n in -m..=m {
                let nb = BigInt::from(n);
                let expected = rep(&nb);
                let got = pp.rep(n);
                if got.word() != &expected || val(&expected).ok() != Some(nb) {
                    mismatches += 1;
                    writeln!(out, "{n}: {got} vs {expected}")?;
                }
            }
            if mismatches > 0 {
                return Err(Failure(format!("FAIL ({mismatches} mismatches)")));
            }
            writeln!(out, "OK ({} points, {} agrees with {})", 2 * m + 1, pp.seed_text(), pp.substitution_label())?;
        }
    }
    Ok(())
}

impl PeriodicPoint {
    fn substitution_label(&self) -> String {
        self.substitution().to_string().trim_end().replace('\n', ", ")
    }
}

/// Parses `args` (program name first) and runs the command, writing normal
/// output to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let target: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

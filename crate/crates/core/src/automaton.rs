//! The deterministic finite automaton with output attached to a periodic
//! point: letter states read digits along the substitution tree, and a
//! `start` state reads the sign digit.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::digits::DigitWord;
use crate::error::{Error, Result};
use crate::periodic::PeriodicPoint;
use crate::substitution::{Letter, Substitution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum State {
    Start,
    Letter(Letter),
}

/// States are `start` plus the letters; every letter state outputs itself.
/// `δ(start, 0) = u_0`, `δ(start, 1) = u_{-1}`, `δ(c, i) = η(c)[i]`.
#[derive(Debug, Clone)]
pub struct Dfao {
    names: Vec<String>,
    transitions: Vec<Vec<Letter>>,
    start: [Letter; 2],
}

impl Dfao {
    pub fn new(pp: &PeriodicPoint) -> Self {
        let s = pp.substitution();
        Dfao {
            names: s.letters().map(|a| s.name(a).to_string()).collect(),
            transitions: s.letters().map(|a| s.image(a).to_vec()).collect(),
            start: [pp.right(), pp.left()],
        }
    }

    pub fn state_count(&self) -> usize {
        self.names.len() + 1
    }

    /// `δ(state, digit)`, if defined.
    pub fn step(&self, state: State, digit: u32) -> Option<Letter> {
        match state {
            State::Start => self.start.get(digit as usize).copied(),
            State::Letter(c) => self.transitions[c.index()].get(digit as usize).copied(),
        }
    }

    /// Outgoing edges of a state, by ascending digit.
    pub fn edges(&self, state: State) -> &[Letter] {
        match state {
            State::Start => &self.start,
            State::Letter(c) => &self.transitions[c.index()],
        }
    }

    fn state_name(&self, state: State) -> &str {
        match state {
            State::Start => "start",
            State::Letter(c) => &self.names[c.index()],
        }
    }

    /// The state reached from `state` after reading `w`.
    pub fn eval_at(&self, state: State, w: &[u32]) -> Result<State> {
        let mut cur = state;
        for (position, &digit) in w.iter().enumerate() {
            cur = State::Letter(self.step(cur, digit).ok_or_else(|| Error::NoTransition {
                state: self.state_name(cur).to_string(),
                digit,
                position,
            })?);
        }
        Ok(cur)
    }

    /// `A_{η,s}(w)`: the output after reading a nonempty `w` from `start`.
    pub fn eval(&self, w: &[u32]) -> Result<Letter> {
        match self.eval_at(State::Start, w)? {
            State::Letter(a) => Ok(a),
            State::Start => Err(Error::EmptyWord),
        }
    }

    /// `A_{η,x}(w)` computed straight from the substitution.
    pub fn eval_from(s: &Substitution, x: Letter, w: &[u32]) -> Result<Letter> {
        let mut cur = x;
        for (position, &digit) in w.iter().enumerate() {
            cur = *s
                .image(cur)
                .get(digit as usize)
                .ok_or_else(|| Error::NoTransition {
                    state: s.name(cur).to_string(),
                    digit,
                    position,
                })?;
        }
        Ok(cur)
    }

    /// All words of exactly `length` digits readable from `start`, in
    /// lexicographic order.
    pub fn enumerate_language(&self, length: usize) -> Vec<DigitWord> {
        self.enumerate_from(State::Start, length)
    }

    /// All words of exactly `length` digits readable from `state`.
    pub fn enumerate_from(&self, state: State, length: usize) -> Vec<DigitWord> {
        let mut out = Vec::new();
        let mut path = Vec::with_capacity(length);
        self.dfs(state, length, &mut path, &mut out);
        out
    }

    fn dfs(&self, state: State, left: usize, path: &mut Vec<u32>, out: &mut Vec<DigitWord>) {
        if left == 0 {
            out.push(DigitWord::from(&path[..]));
            return;
        }
        for (d, &next) in self.edges(state).iter().enumerate() {
            path.push(d as u32);
            self.dfs(State::Letter(next), left - 1, path, out);
            path.pop();
        }
    }

    /// Graphviz rendering with stable node and edge order.
    pub fn to_dot(&self) -> String {
        let quote = |s: &str| format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""));
        let mut out = String::new();
        out.push_str("digraph dfao {\n");
        out.push_str("  rankdir=LR;\n");
        out.push_str("  node [shape=box];\n");
        out.push_str("  __entry [shape=point, label=\"\"];\n");
        out.push_str("  __start [shape=plaintext, label=\"start\"];\n");
        for (i, name) in self.names.iter().enumerate() {
            let _ = writeln!(out, "  n{i} [label={}];", quote(name));
        }
        out.push_str("  __entry -> __start;\n");
        for (d, c) in self.start.iter().enumerate() {
            let _ = writeln!(out, "  __start -> n{} [label=\"{d}\"];", c.index());
        }
        for (i, image) in self.transitions.iter().enumerate() {
            for (d, c) in image.iter().enumerate() {
                let _ = writeln!(out, "  n{i} -> n{} [label=\"{d}\"];", c.index());
            }
        }
        out.push_str("}\n");
        out
    }
}

impl PeriodicPoint {
    /// The `n`-th letter of the two-sided word, read off by feeding `rep(n)`
    /// to the automaton.
    pub fn letter_at(&self, n: impl Into<BigInt>) -> Letter {
        self.letter_at_with(&Dfao::new(self), &n.into())
    }

    /// [`PeriodicPoint::letter_at`] reusing a prebuilt automaton.
    pub fn letter_at_with(&self, dfao: &Dfao, n: &BigInt) -> Letter {
        dfao.eval(&self.rep_big(n))
            .expect("representations are accepted by their automaton")
    }
}

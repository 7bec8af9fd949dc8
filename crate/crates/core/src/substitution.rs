//! Alphabets, substitutions and iterated image lengths.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, RwLock};

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::lengths::LengthTable;

/// An interned letter; the index of its name in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub(crate) usize);

impl Letter {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite word over the alphabet of a substitution.
pub type Word = Vec<Letter>;

/// A morphism with nonempty images and at least one growing letter.
///
/// Clones share one append-only cache of iterated image lengths.
#[derive(Clone)]
pub struct Substitution {
    names: Vec<String>,
    index: HashMap<String, Letter>,
    images: Vec<Vec<Letter>>,
    raw: Vec<Vec<usize>>,
    growing: Vec<bool>,
    cache: Arc<RwLock<Arc<LengthTable>>>,
}

impl fmt::Debug for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (a, image) in self.images.iter().enumerate() {
            m.entry(&self.names[a], &self.render(image));
        }
        m.finish()
    }
}

impl PartialEq for Substitution {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.images == other.images
    }
}

impl Eq for Substitution {}

fn valid_letter(name: &str) -> bool {
    !name.is_empty()
        && !name
            .chars()
            .any(|c| c.is_whitespace() || matches!(c, '|' | '-' | '>' | ',' | '#'))
}

impl Substitution {
    /// Builds a substitution from `(letter, image)` rules given in alphabet order.
    pub fn from_rules<S: AsRef<str>>(rules: &[(S, Vec<S>)]) -> Result<Self> {
        let numbered: Vec<_> = rules
            .iter()
            .enumerate()
            .map(|(i, (l, img))| {
                (
                    i + 1,
                    l.as_ref().to_string(),
                    img.iter().map(|s| s.as_ref().to_string()).collect(),
                )
            })
            .collect();
        Self::build(numbered)
    }

    fn build(rules: Vec<(usize, String, Vec<String>)>) -> Result<Self> {
        if rules.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut names = Vec::with_capacity(rules.len());
        let mut index = HashMap::new();
        for (line, name, _) in &rules {
            if !valid_letter(name) {
                return Err(Error::InvalidLetter {
                    line: *line,
                    letter: name.clone(),
                });
            }
            if index.insert(name.clone(), Letter(names.len())).is_some() {
                return Err(Error::DuplicateRule {
                    line: *line,
                    letter: name.clone(),
                });
            }
            names.push(name.clone());
        }
        let mut images = Vec::with_capacity(rules.len());
        for (line, name, image) in &rules {
            if image.is_empty() {
                return Err(Error::EmptyImage {
                    line: *line,
                    letter: name.clone(),
                });
            }
            let letters = image
                .iter()
                .map(|t| {
                    index.get(t).copied().ok_or_else(|| Error::UnknownLetter {
                        line: *line,
                        letter: t.clone(),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            images.push(letters);
        }
        let raw: Vec<Vec<usize>> = images
            .iter()
            .map(|w| w.iter().map(|l| l.0).collect())
            .collect();
        let growing = compute_growing(&raw);
        if !growing.iter().any(|&g| g) {
            return Err(Error::NoGrowingLetter);
        }
        let cache = Arc::new(RwLock::new(Arc::new(LengthTable::new(names.len()))));
        Ok(Substitution {
            names,
            index,
            images,
            raw,
            growing,
            cache,
        })
    }

    /// Parses the rule format: one `LETTER -> IMAGE` per line, `#` comments.
    ///
    /// Image tokens are whitespace-separated letters; a token that is not a
    /// letter name is split into single-character letters.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rules: Vec<(usize, String, Vec<String>)> = Vec::new();
        for (i, raw_line) in text.lines().enumerate() {
            let line = i + 1;
            let body = raw_line.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let (lhs, rhs) = body.split_once("->").ok_or_else(|| Error::MalformedRule {
                line,
                text: body.to_string(),
            })?;
            let lhs = lhs.trim();
            if lhs.split_whitespace().count() != 1 {
                return Err(Error::MalformedRule {
                    line,
                    text: body.to_string(),
                });
            }
            let tokens = rhs.split_whitespace().map(str::to_string).collect();
            rules.push((line, lhs.to_string(), tokens));
        }
        // Expand juxtaposed single-character letters now that the alphabet is known.
        let known: HashMap<String, ()> = rules.iter().map(|(_, n, _)| (n.clone(), ())).collect();
        for (line, _, image) in &mut rules {
            let mut expanded = Vec::with_capacity(image.len());
            for token in image.drain(..) {
                if known.contains_key(&token) {
                    expanded.push(token);
                } else if token
                    .chars()
                    .all(|c| known.contains_key(c.encode_utf8(&mut [0; 4])))
                {
                    expanded.extend(token.chars().map(String::from));
                } else {
                    let bad = token
                        .chars()
                        .map(String::from)
                        .find(|c| !known.contains_key(c))
                        .unwrap_or(token);
                    return Err(Error::UnknownLetter {
                        line: *line,
                        letter: bad,
                    });
                }
            }
            *image = expanded;
        }
        Self::build(rules)
    }

    pub fn alphabet_size(&self) -> usize {
        self.names.len()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len()).map(Letter)
    }

    pub fn letter(&self, name: &str) -> Option<Letter> {
        self.index.get(name).copied()
    }

    pub fn name(&self, a: Letter) -> &str {
        &self.names[a.0]
    }

    pub fn image(&self, a: Letter) -> &[Letter] {
        &self.images[a.0]
    }

    /// Size of the digit alphabet `{0, …, max |η(c)| - 1}`.
    pub fn digit_count(&self) -> usize {
        self.images.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub(crate) fn raw_images(&self) -> &[Vec<usize>] {
        &self.raw
    }

    /// Renders a word, juxtaposing letters when every name is one character.
    pub fn render(&self, w: &[Letter]) -> String {
        let single = self.names.iter().all(|n| n.chars().count() == 1);
        let parts: Vec<&str> = w.iter().map(|&a| self.name(a)).collect();
        parts.join(if single { "" } else { " " })
    }

    /// Parses a word in the same token format as rule images.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut out = Vec::new();
        for token in text.split_whitespace() {
            if let Some(a) = self.letter(token) {
                out.push(a);
                continue;
            }
            for c in token.chars() {
                let s = c.to_string();
                out.push(self.letter(&s).ok_or(Error::UnknownLetter {
                    line: 0,
                    letter: s,
                })?);
            }
        }
        Ok(out)
    }

    /// `η(w)`: the concatenation of the images of the letters of `w`.
    pub fn apply(&self, w: &[Letter]) -> Word {
        w.iter()
            .flat_map(|&a| self.images[a.0].iter().copied())
            .collect()
    }

    /// `η^k(w)`, materialized.
    pub fn apply_n(&self, w: &[Letter], k: usize) -> Word {
        let mut cur = w.to_vec();
        for _ in 0..k {
            cur = self.apply(&cur);
        }
        cur
    }

    /// A snapshot of the length cache covering at least `levels` levels.
    pub fn lengths(&self, levels: usize) -> Arc<LengthTable> {
        {
            let guard = self.cache.read().unwrap_or_else(|e| e.into_inner());
            if guard.levels() >= levels {
                return Arc::clone(&guard);
            }
        }
        let mut guard = self.cache.write().unwrap_or_else(|e| e.into_inner());
        if guard.levels() < levels {
            let target = levels.max(2 * guard.levels()).max(8);
            let mut table = LengthTable::clone(&guard);
            table.extend_to(&self.raw, target);
            *guard = Arc::new(table);
        }
        Arc::clone(&guard)
    }

    /// `|η^k(a)|`, without materializing `η^k(a)`.
    pub fn image_length(&self, a: Letter, k: usize) -> BigUint {
        self.lengths(k).length(k, a.0).clone()
    }

    pub fn is_growing(&self, a: Letter) -> bool {
        self.growing[a.0]
    }

    /// Letters `a` with `|η^k(a)| → ∞`, in alphabet order.
    pub fn growing_letters(&self) -> Vec<Letter> {
        self.letters().filter(|&a| self.is_growing(a)).collect()
    }

    /// The letter `η(a)` starts with.
    pub fn first_letter(&self, a: Letter) -> Letter {
        self.images[a.0][0]
    }

    /// The letter `η(a)` ends with.
    pub fn last_letter(&self, a: Letter) -> Letter {
        *self.images[a.0].last().expect("images are nonempty")
    }

    /// First letter of `η^k(a)`.
    pub fn first_letter_n(&self, a: Letter, k: usize) -> Letter {
        (0..k).fold(a, |x, _| self.first_letter(x))
    }

    /// Last letter of `η^k(a)`.
    pub fn last_letter_n(&self, a: Letter, k: usize) -> Letter {
        (0..k).fold(a, |x, _| self.last_letter(x))
    }
}

impl FromStr for Substitution {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Substitution::parse(s)
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, image) in self.images.iter().enumerate() {
            writeln!(f, "{} -> {}", self.names[a], self.render(image))?;
        }
        Ok(())
    }
}

/// A letter is growing iff it reaches, in the occurrence graph, a letter that
/// lies on a cycle and has `|η^n(c)| >= 2` where `n` is the alphabet size.
fn compute_growing(images: &[Vec<usize>]) -> Vec<bool> {
    let n = images.len();
    // reach[a][b]: b is reachable from a by a path of length >= 1
    let mut reach = vec![vec![false; n]; n];
    for (a, row) in reach.iter_mut().enumerate() {
        let mut stack: Vec<usize> = images[a].clone();
        while let Some(b) = stack.pop() {
            if !row[b] {
                row[b] = true;
                stack.extend(images[b].iter().copied());
            }
        }
    }
    let mut table = LengthTable::new(n);
    table.extend_to(images, n);
    let expanding: Vec<bool> = (0..n)
        .map(|c| reach[c][c] && table.length_sat(n, c) >= 2)
        .collect();
    (0..n)
        .map(|a| expanding[a] || (0..n).any(|c| reach[a][c] && expanding[c]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sub(text: &str) -> Substitution {
        Substitution::parse(text).unwrap()
    }

    fn names(s: &Substitution, w: &[Letter]) -> Vec<String> {
        w.iter().map(|&a| s.name(a).to_string()).collect()
    }

    #[test]
    fn parses_fibonacci() {
        let s = sub("a -> ab\nb -> a");
        assert_eq!(s.alphabet_size(), 2);
        assert_eq!(s.digit_count(), 2);
        assert_eq!(s.render(s.image(s.letter("a").unwrap())), "ab");
        assert_eq!(s.render(s.image(s.letter("b").unwrap())), "a");
    }

    #[test]
    fn parses_multichar_letters_and_comments() {
        let s = sub("# comment\n\nx1 -> x1 y2  # trailing\ny2 -> x1\n");
        assert_eq!(s.alphabet_size(), 2);
        let x = s.letter("x1").unwrap();
        assert_eq!(names(&s, s.image(x)), vec!["x1", "y2"]);
        assert_eq!(s.render(s.image(x)), "x1 y2");
    }

    #[test]
    fn rejects_bad_configs() {
        assert_eq!(Substitution::parse("a -> a"), Err(Error::NoGrowingLetter));
        assert!(matches!(
            Substitution::parse("a -> ab\nb -> "),
            Err(Error::EmptyImage { line: 2, .. })
        ));
        assert!(matches!(
            Substitution::parse("a -> ab"),
            Err(Error::UnknownLetter { line: 1, .. })
        ));
        assert!(matches!(
            Substitution::parse("a -> ab\nb -> a\na -> b"),
            Err(Error::DuplicateRule { line: 3, .. })
        ));
        assert!(matches!(
            Substitution::parse("a ab"),
            Err(Error::MalformedRule { line: 1, .. })
        ));
        assert_eq!(Substitution::parse("# nothing\n"), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn apply_examples() {
        let phi = sub("a -> ab\nb -> a");
        let ab = phi.parse_word("ab").unwrap();
        assert_eq!(phi.render(&phi.apply(&ab)), "aba");
        assert!(phi.apply(&[]).is_empty());

        let trib = sub("a -> ab\nb -> ac\nc -> a");
        let a = trib.parse_word("a").unwrap();
        assert_eq!(trib.render(&trib.apply_n(&a, 3)), "abacaba");
    }

    #[test]
    fn image_length_examples() {
        let phi = sub("a -> ab\nb -> a");
        let a = phi.letter("a").unwrap();
        assert_eq!(phi.image_length(a, 6), BigUint::from(21u8));
        assert_eq!(phi.image_length(a, 0), BigUint::from(1u8));

        let rho = sub("a -> ac\nb -> cb\nc -> c");
        let c = rho.letter("c").unwrap();
        assert_eq!(rho.image_length(c, 10), BigUint::from(1u8));
        for a in rho.letters() {
            assert_eq!(rho.image_length(a, 0), BigUint::from(1u8));
        }
    }

    #[test]
    fn growing_letters_examples() {
        let rho = sub("a -> ac\nb -> cb\nc -> c");
        assert_eq!(names(&rho, &rho.growing_letters()), vec!["a", "b"]);
        let phi = sub("a -> ab\nb -> a");
        assert_eq!(names(&phi, &phi.growing_letters()), vec!["a", "b"]);
        let mu = sub("a -> abc\nb -> c\nc -> ac");
        assert_eq!(names(&mu, &mu.growing_letters()), vec!["a", "b", "c"]);
        // a letter that only reaches a non-growing cycle
        let s = sub("a -> b\nb -> b\nc -> cc");
        assert_eq!(names(&s, &s.growing_letters()), vec!["c"]);
        // growth through a chain into a growing cycle
        let s = sub("a -> b\nb -> c\nc -> cd\nd -> d");
        assert_eq!(names(&s, &s.growing_letters()), vec!["a", "b", "c"]);
    }

    #[test]
    fn growing_letters_match_length_growth_on_bundled() {
        for (name, text) in crate::systems::BUNDLED {
            let s = sub(text);
            let k = 4 * s.alphabet_size() + 8;
            for a in s.letters() {
                let grows = s.image_length(a, k) > s.image_length(a, k - 2 * s.alphabet_size());
                assert_eq!(grows, s.is_growing(a), "{name} letter {}", s.name(a));
            }
        }
    }

    fn arb_substitution() -> impl Strategy<Value = Substitution> {
        (1usize..=4)
            .prop_flat_map(|n| {
                prop::collection::vec(prop::collection::vec(0..n, 1..=3), n)
            })
            .prop_filter_map("needs a growing letter", |imgs| {
                let rules: Vec<(String, Vec<String>)> = imgs
                    .iter()
                    .enumerate()
                    .map(|(i, img)| {
                        (
                            format!("l{i}"),
                            img.iter().map(|j| format!("l{j}")).collect(),
                        )
                    })
                    .collect();
                Substitution::from_rules(&rules).ok()
            })
    }

    proptest! {
        #[test]
        fn image_length_matches_materialized(s in arb_substitution(), k in 0usize..=12) {
            for a in s.letters() {
                let w = s.apply_n(&[a], k);
                prop_assert_eq!(s.image_length(a, k), BigUint::from(w.len()));
                prop_assert!(s.image_length(a, k + 1) >= s.image_length(a, k));
            }
        }

        #[test]
        fn growing_letters_match_length_growth(s in arb_substitution()) {
            let k = 4 * s.alphabet_size() + 8;
            for a in s.letters() {
                let grows = s.image_length(a, k) > s.image_length(a, k - 2 * s.alphabet_size());
                prop_assert_eq!(grows, s.is_growing(a));
            }
        }

        #[test]
        fn apply_is_a_morphism(
            s in arb_substitution(),
            u in prop::collection::vec(0usize..4, 0..8),
            v in prop::collection::vec(0usize..4, 0..8),
        ) {
            let n = s.alphabet_size();
            let u: Word = u.into_iter().map(|i| Letter(i % n)).collect();
            let v: Word = v.into_iter().map(|i| Letter(i % n)).collect();
            let mut uv = u.clone();
            uv.extend(&v);
            let mut expected = s.apply(&u);
            expected.extend(s.apply(&v));
            prop_assert_eq!(s.apply(&uv), expected);
        }
    }
}

//! The symplectic basis letters `A_i, B_i` and words over them.
//!
//! Letters are totally ordered `A_1 < B_1 < A_2 < B_2 < ...` so that every
//! sweep and every serialization is deterministic.

use std::fmt;

use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LetterKind {
    A,
    B,
}

/// One basis letter of `H`, e.g. `a3` or `b1`. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    // Field order matters: deriving Ord gives A_1 < B_1 < A_2 < B_2 < ...
    index: u32,
    kind: LetterKind,
}

impl Letter {
    pub fn a(index: u32) -> Self {
        assert!(index >= 1, "letter indices are 1-based");
        Letter { index, kind: LetterKind::A }
    }

    pub fn b(index: u32) -> Self {
        assert!(index >= 1, "letter indices are 1-based");
        Letter { index, kind: LetterKind::B }
    }

    pub fn index(&self) -> u32 {
        self.index
    }

    pub fn kind(&self) -> LetterKind {
        self.kind
    }

    pub fn is_valid_for_genus(&self, genus: u32) -> bool {
        self.index >= 1 && self.index <= genus
    }

    /// All `2g` basis letters in the fixed order.
    pub fn alphabet(genus: u32) -> Vec<Letter> {
        let mut out = Vec::with_capacity(2 * genus as usize);
        for i in 1..=genus {
            out.push(Letter::a(i));
            out.push(Letter::b(i));
        }
        out
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut chars = s.chars();
        let kind = match chars.next() {
            Some('a') => LetterKind::A,
            Some('b') => LetterKind::B,
            _ => return Err(Error::Parse(format!("bad letter `{s}`"))),
        };
        let index: u32 = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter `{s}`")))?;
        if index == 0 {
            return Err(Error::Parse(format!("bad letter `{s}` (indices start at 1)")));
        }
        Ok(Letter { index, kind })
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            LetterKind::A => 'a',
            LetterKind::B => 'b',
        };
        write!(f, "{}{}", k, self.index)
    }
}

/// The intersection pairing: `(A_i . B_j) = delta_ij`,
/// `(B_i . A_j) = -delta_ij`, all other pairings zero. The sign is pinned by
/// the requirement that `X -> sum_i (X.A_i) B_i - (X.B_i) A_i` is `-1_H`.
pub fn pairing(x: Letter, y: Letter) -> i64 {
    if x.index != y.index {
        return 0;
    }
    match (x.kind, y.kind) {
        (LetterKind::A, LetterKind::B) => 1,
        (LetterKind::B, LetterKind::A) => -1,
        _ => 0,
    }
}

/// A finite word over the letters. The empty word is the unit of the tensor
/// algebra. Words order by degree first, then lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn single(letter: Letter) -> Self {
        Word(vec![letter])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().map(|l| l.index()).max().unwrap_or(0)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, range: std::ops::Range<usize>) -> Word {
        Word(self.0[range].to_vec())
    }

    /// The cyclic permutation `X_1 X_2 ... X_m -> X_2 ... X_m X_1`.
    pub fn cyclic_shift(&self) -> Word {
        if self.0.len() <= 1 {
            return self.clone();
        }
        let mut v = Vec::with_capacity(self.0.len());
        v.extend_from_slice(&self.0[1..]);
        v.push(self.0[0]);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        let mut v = self.0.clone();
        v.reverse();
        Word(v)
    }

    /// Letters sorted into the canonical order; the image in `Sym(H)`.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort();
        Word(v)
    }

    /// Parses a concatenation like `a1b1a2`; the empty string (or `"1"`) is
    /// the empty word.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let chars: Vec<char> = s.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if c != 'a' && c != 'b' {
                return Err(Error::Parse(format!("bad word `{s}` at `{c}`")));
            }
            let mut j = i + 1;
            while j < chars.len() && chars[j].is_ascii_digit() {
                j += 1;
            }
            if j == i + 1 {
                return Err(Error::Parse(format!("bad word `{s}`: `{c}` has no index")));
            }
            let token: String = chars[i..j].iter().collect();
            letters.push(Letter::parse(&token)?);
            i = j;
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for l in &self.0 {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

/// All words of the given degree over the genus-`g` alphabet, in canonical
/// order.
pub fn words_of_degree(genus: u32, degree: usize) -> Vec<Word> {
    let alphabet = Letter::alphabet(genus);
    let mut out = vec![Word::empty()];
    for _ in 0..degree {
        let mut next = Vec::with_capacity(out.len() * alphabet.len());
        for w in &out {
            for &l in &alphabet {
                next.push(w.concat(&Word::single(l)));
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_order_is_a1_b1_a2_b2() {
        let mut letters = vec![Letter::b(2), Letter::a(1), Letter::a(2), Letter::b(1)];
        letters.sort();
        assert_eq!(
            letters,
            vec![Letter::a(1), Letter::b(1), Letter::a(2), Letter::b(2)]
        );
    }

    #[test]
    fn pairing_table() {
        assert_eq!(pairing(Letter::a(1), Letter::b(1)), 1);
        assert_eq!(pairing(Letter::a(1), Letter::a(2)), 0);
        assert_eq!(pairing(Letter::b(1), Letter::a(1)), -1);
        // Skew-symmetry over a small alphabet.
        for x in Letter::alphabet(3) {
            for y in Letter::alphabet(3) {
                assert_eq!(pairing(x, y), -pairing(y, x));
            }
        }
    }

    #[test]
    fn word_parse_and_display() {
        let w = Word::parse("a1b1a12").unwrap();
        assert_eq!(w.degree(), 3);
        assert_eq!(w.to_string(), "a1b1a12");
        assert_eq!(Word::parse("").unwrap(), Word::empty());
        assert_eq!(Word::parse("1").unwrap(), Word::empty());
        assert!(Word::parse("a0").is_err());
        assert!(Word::parse("c1").is_err());
        assert!(Word::parse("ab").is_err());
    }

    #[test]
    fn cyclic_shift_two_letter_word() {
        let w = Word::parse("a1b1").unwrap();
        assert_eq!(w.cyclic_shift(), Word::parse("b1a1").unwrap());
    }

    #[test]
    fn word_order_degree_then_lex() {
        let mut ws = vec![
            Word::parse("b1").unwrap(),
            Word::parse("a1a1").unwrap(),
            Word::parse("a1").unwrap(),
            Word::empty(),
        ];
        ws.sort();
        assert_eq!(
            ws,
            vec![
                Word::empty(),
                Word::parse("a1").unwrap(),
                Word::parse("b1").unwrap(),
                Word::parse("a1a1").unwrap(),
            ]
        );
    }

    #[test]
    fn words_enumeration_count() {
        assert_eq!(words_of_degree(1, 3).len(), 8);
        assert_eq!(words_of_degree(2, 2).len(), 16);
        assert_eq!(words_of_degree(2, 0), vec![Word::empty()]);
    }
}

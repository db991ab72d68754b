//! Words over the two-letter alphabet `{x, y}`.
//!
//! The empty word is the unit of the free algebra and prints as `"1"`.
//! Words are ordered by length first, then lexicographically with `x < y`;
//! this is the canonical term order used everywhere for printing and
//! deterministic iteration.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// One of the two generators.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    X,
    Y,
}

impl Letter {
    /// The letter with `x` and `y` exchanged.
    pub fn swapped(self) -> Letter {
        match self {
            Letter::X => Letter::Y,
            Letter::Y => Letter::X,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::X => 'x',
            Letter::Y => 'y',
        }
    }
}

/// A finite word over `{x, y}`; possibly empty.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word { letters: Vec::new() }
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word { letters }
    }

    pub fn single(l: Letter) -> Word {
        Word { letters: vec![l] }
    }

    /// `x^a`.
    pub fn x_pow(a: usize) -> Word {
        Word { letters: vec![Letter::X; a] }
    }

    /// `y^b`.
    pub fn y_pow(b: usize) -> Word {
        Word { letters: vec![Letter::Y; b] }
    }

    /// `z_k = y x^(k-1)` for `k >= 1`.
    pub fn z_block(k: usize) -> Word {
        assert!(k >= 1, "z_block requires k >= 1");
        let mut letters = Vec::with_capacity(k);
        letters.push(Letter::Y);
        letters.extend(std::iter::repeat(Letter::X).take(k - 1));
        Word { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.letters.last().copied()
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn prepend(&self, l: Letter) -> Word {
        let mut letters = Vec::with_capacity(self.len() + 1);
        letters.push(l);
        letters.extend_from_slice(&self.letters);
        Word { letters }
    }

    pub fn append(&self, l: Letter) -> Word {
        let mut letters = self.letters.clone();
        letters.push(l);
        Word { letters }
    }

    /// The word with the letter order reversed (no letter swap).
    pub fn reversed(&self) -> Word {
        let mut letters = self.letters.clone();
        letters.reverse();
        Word { letters }
    }

    /// Reverse the word and swap `x <-> y`; this is the dual map on words.
    pub fn tau_image(&self) -> Word {
        let letters = self.letters.iter().rev().map(|l| l.swapped()).collect();
        Word { letters }
    }

    pub fn subword(&self, range: std::ops::Range<usize>) -> Word {
        Word { letters: self.letters[range].to_vec() }
    }

    /// Number of leading `x` letters.
    pub fn leading_x_run(&self) -> usize {
        self.letters.iter().take_while(|&&l| l == Letter::X).count()
    }

    /// Number of trailing `y` letters.
    pub fn trailing_y_run(&self) -> usize {
        self.letters.iter().rev().take_while(|&&l| l == Letter::Y).count()
    }

    pub fn count(&self, l: Letter) -> usize {
        self.letters.iter().filter(|&&c| c == l).count()
    }

    /// Nonempty, starts with `y` and ends with `x`.
    pub fn is_admissible(&self) -> bool {
        self.first() == Some(Letter::Y) && self.last() == Some(Letter::X)
    }

    /// Split off the leading `z_k` block of a word starting with `y`:
    /// returns `(k, rest)` with `self = z_k · rest`.
    pub fn split_leading_z(&self) -> Option<(usize, Word)> {
        if self.first() != Some(Letter::Y) {
            return None;
        }
        let mut k = 1;
        while k < self.len() && self.letters[k] == Letter::X {
            k += 1;
        }
        Some((k, self.subword(k..self.len())))
    }

    /// Split off the trailing `z_m` block (the last `y` together with the
    /// `x`-run after it): returns `(prefix, m)` with `self = prefix · z_m`.
    /// `None` when the word contains no `y`.
    pub fn split_trailing_z(&self) -> Option<(Word, usize)> {
        let pos = self.letters.iter().rposition(|&l| l == Letter::Y)?;
        Some((self.subword(0..pos), self.len() - pos))
    }

    /// All `2^len` words of exactly the given length, in canonical order.
    pub fn all_of_len(len: usize) -> Vec<Word> {
        let mut out = Vec::with_capacity(1 << len);
        for bits in 0u64..(1 << len) {
            let letters = (0..len)
                .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Letter::X } else { Letter::Y })
                .collect();
            out.push(Word { letters });
        }
        out
    }

    /// All words of length `min_len..=max_len`, in canonical order.
    pub fn all_up_to(min_len: usize, max_len: usize) -> Vec<Word> {
        (min_len..=max_len).flat_map(Word::all_of_len).collect()
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s == "1" {
            return Ok(Word::empty());
        }
        if s.is_empty() {
            return Err(Error::Parse("empty word literal".into()));
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            match c {
                'x' => letters.push(Letter::X),
                'y' => letters.push(Letter::Y),
                _ => return Err(Error::Parse(format!("invalid letter {c:?} in word literal"))),
            }
        }
        Ok(Word { letters })
    }
}

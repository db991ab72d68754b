//! Sparse polynomials in the free noncommutative algebra over the rationals
//! generated by `x` and `y`.
//!
//! Terms are kept in canonical form: zero coefficients are dropped and words
//! are ordered by (length, lexicographic). The concatenation product makes
//! this the Hoffman algebra `h`; the subspace predicates [`NcPoly::in_h0`],
//! [`NcPoly::in_h1`] and [`NcPoly::in_hprime`] identify the classical
//! subalgebras.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::word::{Letter, Word};

/// A finite rational linear combination of words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct NcPoly {
    terms: BTreeMap<Word, BigRational>,
}

impl NcPoly {
    pub fn zero() -> NcPoly {
        NcPoly { terms: BTreeMap::new() }
    }

    /// The algebra unit, i.e. the empty word with coefficient one.
    pub fn one() -> NcPoly {
        NcPoly::from_word(Word::empty())
    }

    pub fn from_word(w: Word) -> NcPoly {
        let mut terms = BTreeMap::new();
        terms.insert(w, BigRational::one());
        NcPoly { terms }
    }

    pub fn monomial(w: Word, coeff: BigRational) -> NcPoly {
        let mut p = NcPoly::zero();
        p.add_term(w, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, BigRational)>) -> NcPoly {
        let mut p = NcPoly::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    /// `x`.
    pub fn gen_x() -> NcPoly {
        NcPoly::from_word(Word::single(Letter::X))
    }

    /// `y`.
    pub fn gen_y() -> NcPoly {
        NcPoly::from_word(Word::single(Letter::Y))
    }

    /// `z = x + y`.
    pub fn z() -> NcPoly {
        NcPoly::gen_x().add(&NcPoly::gen_y())
    }

    /// `e0 = x`.
    pub fn e0() -> NcPoly {
        NcPoly::gen_x()
    }

    /// `e1 = -y`.
    pub fn e1() -> NcPoly {
        NcPoly::gen_y().neg()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigRational)> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coeff(&self, w: &Word) -> BigRational {
        self.terms.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeff(&Word::empty())
    }

    /// Maximum word length in the support (0 for the zero polynomial).
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, w: Word, c: BigRational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &NcPoly) -> NcPoly {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c.clone())).collect(),
        }
    }

    pub fn scale(&self, q: &BigRational) -> NcPoly {
        if q.is_zero() {
            return NcPoly::zero();
        }
        NcPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c * q)).collect(),
        }
    }

    /// Concatenation product.
    pub fn concat(&self, other: &NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    /// `w · self` for a single word `w`.
    pub fn concat_word_left(&self, w: &Word) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(u, c)| (w.concat(u), c.clone())).collect(),
        }
    }

    /// `self · w` for a single word `w`.
    pub fn concat_word_right(&self, w: &Word) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(u, c)| (u.concat(w), c.clone())).collect(),
        }
    }

    /// Left-concatenate a single letter.
    pub fn prepend(&self, l: Letter) -> NcPoly {
        NcPoly {
            terms: self.terms.iter().map(|(u, c)| (u.prepend(l), c.clone())).collect(),
        }
    }

    /// `self^n` under concatenation.
    pub fn concat_pow(&self, n: usize) -> NcPoly {
        let mut out = NcPoly::one();
        for _ in 0..n {
            out = out.concat(self);
        }
        out
    }

    /// Extend a map on words linearly to the polynomial.
    pub fn map_words(&self, mut f: impl FnMut(&Word) -> NcPoly) -> NcPoly {
        let mut out = NcPoly::zero();
        for (w, c) in &self.terms {
            out = out.add(&f(w).scale(c));
        }
        out
    }

    /// Every word empty, or starting with `y` and ending with `x`.
    pub fn in_h0(&self) -> bool {
        self.terms.keys().all(|w| w.is_empty() || w.is_admissible())
    }

    /// Every word empty or starting with `y`.
    pub fn in_h1(&self) -> bool {
        self.terms.keys().all(|w| w.is_empty() || w.first() == Some(Letter::Y))
    }

    /// No constant term.
    pub fn in_hprime(&self) -> bool {
        !self.terms.contains_key(&Word::empty())
    }
}

impl std::ops::Add for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        NcPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        NcPoly::sub(self, rhs)
    }
}

impl std::ops::Mul for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.concat(rhs)
    }
}

impl std::ops::Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        NcPoly::neg(self)
    }
}

pub(crate) fn fmt_rational_prefix(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    first: bool,
    body: &str,
) -> fmt::Result {
    let mag = c.abs();
    let sign = c.is_negative();
    match (first, sign) {
        (true, false) => {}
        (true, true) => write!(f, "-")?,
        (false, false) => write!(f, " + ")?,
        (false, true) => write!(f, " - ")?,
    }
    if body.is_empty() {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "{body}")
    } else {
        write!(f, "{mag}*{body}")
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            fmt_rational_prefix(f, c, first, &w.to_string())?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for NcPoly {
    type Err = Error;

    /// Parses signed rational combinations such as `"2*yy + yx - 1/3*xyx"`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial literal".into()));
        }
        let mut out = NcPoly::zero();
        let mut rest = s;
        let mut sign = BigRational::one();
        // Leading sign.
        if let Some(r) = rest.strip_prefix('-') {
            sign = -sign;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            let end = rest
                .char_indices()
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let term = rest[..end].trim();
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in {s:?}")));
            }
            let (coeff, word) = match term.split_once('*') {
                Some((q, w)) => {
                    let q: BigRational = q
                        .trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad coefficient in {term:?}")))?;
                    (q, w.trim().parse::<Word>()?)
                }
                None => {
                    // Either a bare word or a bare rational constant.
                    if let Ok(w) = term.parse::<Word>() {
                        (BigRational::one(), w)
                    } else {
                        let q: BigRational = term
                            .parse()
                            .map_err(|_| Error::Parse(format!("bad term {term:?}")))?;
                        (q, Word::empty())
                    }
                }
            };
            out.add_term(word, coeff * &sign);
            if end == rest.len() {
                break;
            }
            sign = if rest.as_bytes()[end] == b'-' {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            rest = rest[end + 1..].trim_start();
        }
        Ok(out)
    }
}

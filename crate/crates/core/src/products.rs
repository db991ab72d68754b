//! The products on the word algebra: shuffle, harmonic (stuffle), the signed
//! symmetric harmonic product with its lattice-path evaluation, the
//! `circledast` product on words with a tail z-block, and the diamond
//! operators `y^n ◇ w` together with the maps `f_n`.

use num_rational::BigRational;
use num_traits::One;

use crate::error::Error;
use crate::poly::NcPoly;
use crate::word::{Letter, Word};

/// Shuffle product. Bilinear, commutative, associative, unit 1.
pub fn shuffle(p: &NcPoly, q: &NcPoly) -> NcPoly {
    let mut out = NcPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out = out.add(&shuffle_words(u, v).scale(&(a * b)));
        }
    }
    out
}

fn shuffle_words(u: &Word, v: &Word) -> NcPoly {
    if u.is_empty() {
        return NcPoly::from_word(v.clone());
    }
    if v.is_empty() {
        return NcPoly::from_word(u.clone());
    }
    let (u1, urest) = (u.letters()[0], u.subword(1..u.len()));
    let (v1, vrest) = (v.letters()[0], v.subword(1..v.len()));
    shuffle_words(&urest, v)
        .prepend(u1)
        .add(&shuffle_words(u, &vrest).prepend(v1))
}

/// Harmonic (stuffle) product on `h1`, via the z-block recursion
/// `z_k u * z_l v = z_k(u * z_l v) + z_l(z_k u * v) + z_{k+l}(u * v)`.
///
/// Rejects operands with a word outside `h1`.
pub fn harmonic(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, Error> {
    for r in [p, q] {
        if !r.in_h1() {
            let w = r.words().find(|w| !w.is_empty() && w.first() != Some(Letter::Y));
            return Err(Error::NotInH1(w.map(|w| w.to_string()).unwrap_or_default()));
        }
    }
    let mut out = NcPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            out = out.add(&harmonic_words(u, v).scale(&(a * b)));
        }
    }
    Ok(out)
}

fn harmonic_words(u: &Word, v: &Word) -> NcPoly {
    if u.is_empty() {
        return NcPoly::from_word(v.clone());
    }
    if v.is_empty() {
        return NcPoly::from_word(u.clone());
    }
    let (k, urest) = u.split_leading_z().expect("h1 word");
    let (l, vrest) = v.split_leading_z().expect("h1 word");
    let mut out = harmonic_words(&urest, v).concat_word_left(&Word::z_block(k));
    out = out.add(&harmonic_words(u, &vrest).concat_word_left(&Word::z_block(l)));
    out.add(&harmonic_words(&urest, &vrest).concat_word_left(&Word::z_block(k + l)))
}

// The symmetric harmonic product is defined on the e-letter basis
// e0 = x, e1 = -y. Internally we work with plain words read as e-words
// (letter X meaning e0, letter Y meaning e1); converting a polynomial to the
// e-basis flips the sign of each word by the parity of its y-count.

fn to_e_basis(p: &NcPoly) -> NcPoly {
    NcPoly::from_terms(p.terms().map(|(w, c)| {
        let sign = if w.count(Letter::Y) % 2 == 0 { c.clone() } else { -c.clone() };
        (w.clone(), sign)
    }))
}

fn from_e_basis(p: &NcPoly) -> NcPoly {
    to_e_basis(p)
}

fn e_letter_mul(a: Letter, b: Letter) -> Letter {
    if a == Letter::Y && b == Letter::Y {
        Letter::Y
    } else {
        Letter::X
    }
}

fn check_hprime(p: &NcPoly, q: &NcPoly) -> Result<(), Error> {
    if !p.in_hprime() || !q.in_hprime() {
        return Err(Error::ConstantTerm("symmetric harmonic product".into()));
    }
    Ok(())
}

/// Symmetric harmonic product on `h'`, by the defining recursion.
pub fn sym_harmonic(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, Error> {
    check_hprime(p, q)?;
    let (ep, eq) = (to_e_basis(p), to_e_basis(q));
    let mut out = NcPoly::zero();
    for (u, a) in ep.terms() {
        for (v, b) in eq.terms() {
            out = out.add(&sym_words(u, v).scale(&(a * b)));
        }
    }
    Ok(from_e_basis(&out))
}

/// Recursion on nonempty e-words.
fn sym_words(u: &Word, v: &Word) -> NcPoly {
    debug_assert!(!u.is_empty() && !v.is_empty());
    let a = u.letters()[0];
    let b = v.letters()[0];
    if u.len() == 1 {
        // e_a against a whole word: multiply every letter index by a.
        let w = Word::from_letters(v.letters().iter().map(|&l| e_letter_mul(a, l)).collect());
        return NcPoly::from_word(w);
    }
    if v.len() == 1 {
        let w = Word::from_letters(u.letters().iter().map(|&l| e_letter_mul(b, l)).collect());
        return NcPoly::from_word(w);
    }
    let urest = u.subword(1..u.len());
    let vrest = v.subword(1..v.len());
    let ab = e_letter_mul(a, b);
    let inner = sym_words(&urest, v)
        .add(&sym_words(u, &vrest))
        .sub(&sym_words(&urest, &vrest).prepend(Letter::X));
    inner.prepend(ab)
}

/// Symmetric harmonic product evaluated by explicit lattice-path enumeration;
/// same contract as [`sym_harmonic`], used as a cross-validation oracle.
///
/// Paths go from (0,0) to (m,n) with unit steps right/up plus a diagonal
/// step composed of two half-steps; the half-integer midpoint contributes the
/// letter `e0` and a sign flip.
pub fn sym_harmonic_paths(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, Error> {
    check_hprime(p, q)?;
    let (ep, eq) = (to_e_basis(p), to_e_basis(q));
    let mut out = NcPoly::zero();
    for (u, a) in ep.terms() {
        for (v, b) in eq.terms() {
            out = out.add(&paths_words(u, v).scale(&(a * b)));
        }
    }
    Ok(from_e_basis(&out))
}

fn paths_words(u: &Word, v: &Word) -> NcPoly {
    let (m, n) = (u.len() - 1, v.len() - 1);
    let mut out = NcPoly::zero();
    let mut prefix: Vec<Letter> = vec![e_letter_mul(u.letters()[0], v.letters()[0])];
    walk(u, v, 0, 0, false, &mut prefix, &mut out, m, n);
    out
}

#[allow(clippy::too_many_arguments)]
fn walk(
    u: &Word,
    v: &Word,
    i: usize,
    j: usize,
    negate: bool,
    prefix: &mut Vec<Letter>,
    out: &mut NcPoly,
    m: usize,
    n: usize,
) {
    if i == m && j == n {
        let c = if negate { -BigRational::one() } else { BigRational::one() };
        out.add_term(Word::from_letters(prefix.clone()), c);
        return;
    }
    if i < m {
        prefix.push(e_letter_mul(u.letters()[i + 1], v.letters()[j]));
        walk(u, v, i + 1, j, negate, prefix, out, m, n);
        prefix.pop();
    }
    if j < n {
        prefix.push(e_letter_mul(u.letters()[i], v.letters()[j + 1]));
        walk(u, v, i, j + 1, negate, prefix, out, m, n);
        prefix.pop();
    }
    if i < m && j < n {
        // Diagonal: half-integer midpoint emits e0 and flips the sign.
        prefix.push(Letter::X);
        prefix.push(e_letter_mul(u.letters()[i + 1], v.letters()[j + 1]));
        walk(u, v, i + 1, j + 1, !negate, prefix, out, m, n);
        prefix.pop();
        prefix.pop();
    }
}

/// `w1 z_m ⊛ w2 z_n = (w1 * w2) z_{m+n}`.
///
/// Every word of both operands must split as `w' z_m` with `w'` in `h1`.
pub fn circledast(p: &NcPoly, q: &NcPoly) -> Result<NcPoly, Error> {
    let mut out = NcPoly::zero();
    for (u, a) in p.terms() {
        for (v, b) in q.terms() {
            let (u1, m) = split_checked(u)?;
            let (v1, n) = split_checked(v)?;
            let prod = harmonic(&NcPoly::from_word(u1), &NcPoly::from_word(v1))?;
            out = out.add(&prod.concat_word_right(&Word::z_block(m + n)).scale(&(a * b)));
        }
    }
    Ok(out)
}

fn split_checked(w: &Word) -> Result<(Word, usize), Error> {
    let (prefix, m) = w
        .split_trailing_z()
        .ok_or_else(|| Error::BadZDecomposition(w.to_string()))?;
    if !(prefix.is_empty() || prefix.first() == Some(Letter::Y)) {
        return Err(Error::BadZDecomposition(w.to_string()));
    }
    Ok((prefix, m))
}

/// `y^n ◇ w`, by the two diamond recursions. Only powers of `y` are needed
/// on the left anywhere in this crate, which keeps the recursion closed.
pub fn diamond_ypow(n: usize, w: &NcPoly) -> NcPoly {
    w.map_words(|v| diamond_word(n, v))
}

fn diamond_word(n: usize, w: &Word) -> NcPoly {
    if n == 0 {
        return NcPoly::from_word(w.clone());
    }
    if w.is_empty() {
        return NcPoly::from_word(Word::y_pow(n));
    }
    let rest = w.subword(1..w.len());
    match w.letters()[0] {
        // y^n ◇ y w2 = y (y^n ◇ w2) - y (y^{n-1} ◇ x w2)
        Letter::Y => diamond_word(n, &rest)
            .prepend(Letter::Y)
            .sub(&diamond_word(n - 1, &rest.prepend(Letter::X)).prepend(Letter::Y)),
        // y^n ◇ x w2 = x (y^n ◇ w2) + y (y^{n-1} ◇ x w2)
        Letter::X => diamond_word(n, &rest)
            .prepend(Letter::X)
            .add(&diamond_word(n - 1, w).prepend(Letter::Y)),
    }
}

/// `f_n(w) = y^n ◇ w - (y^{n-1} ◇ w) y`, with `f_n = 0` for `n < 0` and
/// `f_0 = id`.
pub fn f_n(n: i64, w: &NcPoly) -> NcPoly {
    match n {
        _ if n < 0 => NcPoly::zero(),
        0 => w.clone(),
        _ => {
            let n = n as usize;
            let head = diamond_ypow(n, w);
            let tail = diamond_ypow(n - 1, w).concat_word_right(&Word::single(Letter::Y));
            head.sub(&tail)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> NcPoly {
        s.parse().unwrap()
    }

    /// Brute-force shuffle by enumerating all interleavings of two words.
    fn shuffle_oracle(u: &Word, v: &Word) -> NcPoly {
        let total = u.len() + v.len();
        let mut out = NcPoly::zero();
        for mask in 0u64..(1 << total) {
            if mask.count_ones() as usize != u.len() {
                continue;
            }
            let (mut iu, mut iv) = (0, 0);
            let mut letters = Vec::with_capacity(total);
            let mut ok = true;
            for pos in 0..total {
                if mask >> pos & 1 == 1 {
                    if iu >= u.len() {
                        ok = false;
                        break;
                    }
                    letters.push(u.letters()[iu]);
                    iu += 1;
                } else {
                    if iv >= v.len() {
                        ok = false;
                        break;
                    }
                    letters.push(v.letters()[iv]);
                    iv += 1;
                }
            }
            if ok {
                out.add_term(Word::from_letters(letters), BigRational::one());
            }
        }
        out
    }

    /// Independent stuffle: enumerate pairs of order-preserving surjective
    /// placements of the two index tuples onto a common chain.
    fn stuffle_oracle(u: &[u32], v: &[u32]) -> NcPoly {
        fn placements(len: usize, slots: usize) -> Vec<Vec<usize>> {
            // strictly increasing maps {0..len} -> {0..slots}
            fn rec(len: usize, slots: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if cur.len() == len {
                    out.push(cur.clone());
                    return;
                }
                for s in start..slots {
                    cur.push(s);
                    rec(len, slots, s + 1, cur, out);
                    cur.pop();
                }
            }
            let mut out = Vec::new();
            rec(len, slots, 0, &mut Vec::new(), &mut out);
            out
        }
        let mut out = NcPoly::zero();
        for slots in u.len().max(v.len())..=u.len() + v.len() {
            for pu in placements(u.len(), slots) {
                for pv in placements(v.len(), slots) {
                    let mut onto = vec![false; slots];
                    for &s in pu.iter().chain(pv.iter()) {
                        onto[s] = true;
                    }
                    if !onto.iter().all(|&b| b) {
                        continue;
                    }
                    let mut parts = vec![0u32; slots];
                    for (i, &s) in pu.iter().enumerate() {
                        parts[s] += u[i];
                    }
                    for (i, &s) in pv.iter().enumerate() {
                        parts[s] += v[i];
                    }
                    let mut w = Word::empty();
                    for &k in &parts {
                        w = w.concat(&Word::z_block(k as usize));
                    }
                    out.add_term(w, BigRational::one());
                }
            }
        }
        out
    }

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn shuffle_spec_examples() {
        // x ⧢ y
        assert_eq!(shuffle(&p("x"), &p("y")), p("xy + yx"));
        // 1 ⧢ w = w
        assert_eq!(shuffle(&NcPoly::one(), &p("yxy")), p("yxy"));
        // yx ⧢ y, frozen from the interleaving oracle
        let got = shuffle(&p("yx"), &p("y"));
        assert_eq!(got, shuffle_oracle(&word("yx"), &word("y")));
        assert_eq!(got, p("yxy + 2*yyx"));
    }

    #[test]
    fn shuffle_matches_oracle_on_short_words() {
        for u in Word::all_up_to(0, 3) {
            for v in Word::all_up_to(0, 3) {
                assert_eq!(
                    shuffle(&NcPoly::from_word(u.clone()), &NcPoly::from_word(v.clone())),
                    shuffle_oracle(&u, &v),
                    "u={u} v={v}"
                );
            }
        }
    }

    #[test]
    fn harmonic_spec_examples() {
        let got = harmonic(&p("y"), &p("y")).unwrap();
        assert_eq!(got, stuffle_oracle(&[1], &[1]));
        assert_eq!(got, p("2*yy + yx"));

        assert_eq!(harmonic(&NcPoly::one(), &p("yx")).unwrap(), p("yx"));

        let got = harmonic(&p("y"), &p("yx")).unwrap();
        assert_eq!(got, stuffle_oracle(&[1], &[2]));
        assert_eq!(got, p("yyx + yxy + yxx"));
    }

    #[test]
    fn harmonic_matches_stuffle_oracle() {
        let cases: [(&[u32], &[u32]); 5] =
            [(&[1, 1], &[2]), (&[2], &[2]), (&[1, 2], &[1]), (&[2, 1], &[1, 1]), (&[3], &[1, 2])];
        for (u, v) in cases {
            let uw: Word = u.iter().fold(Word::empty(), |w, &k| w.concat(&Word::z_block(k as usize)));
            let vw: Word = v.iter().fold(Word::empty(), |w, &k| w.concat(&Word::z_block(k as usize)));
            assert_eq!(
                harmonic(&NcPoly::from_word(uw), &NcPoly::from_word(vw)).unwrap(),
                stuffle_oracle(u, v)
            );
        }
    }

    #[test]
    fn harmonic_rejects_non_h1() {
        assert!(harmonic(&p("xy"), &p("y")).is_err());
    }

    #[test]
    fn sym_harmonic_spec_examples() {
        assert_eq!(sym_harmonic(&p("x"), &p("x")).unwrap(), p("x"));
        assert_eq!(sym_harmonic(&p("y"), &p("y")).unwrap(), p("-y"));
        assert_eq!(sym_harmonic(&p("y"), &p("x")).unwrap(), p("-x"));
        // yx ⁓* y, frozen from the path oracle
        let got = sym_harmonic(&p("yx"), &p("y")).unwrap();
        assert_eq!(got, sym_harmonic_paths(&p("yx"), &p("y")).unwrap());
        assert_eq!(got, p("-yx"));
    }

    #[test]
    fn sym_harmonic_paths_spec_examples() {
        assert_eq!(sym_harmonic_paths(&p("x"), &p("x")).unwrap(), p("x"));
        assert_eq!(sym_harmonic_paths(&p("y"), &p("y")).unwrap(), p("-y"));
    }

    #[test]
    fn sym_harmonic_rejects_constant() {
        assert!(sym_harmonic(&p("1 + x"), &p("y")).is_err());
        assert!(sym_harmonic_paths(&p("y"), &NcPoly::one()).is_err());
    }

    #[test]
    fn circledast_spec_examples() {
        assert_eq!(circledast(&p("y"), &p("y")).unwrap(), p("yx"));
        assert_eq!(circledast(&p("y"), &p("yx")).unwrap(), p("yxx"));
        assert_eq!(circledast(&p("yy"), &p("yx")).unwrap(), p("yyxx"));
        assert!(circledast(&p("xy"), &p("y")).is_err());
        assert!(circledast(&p("x"), &p("y")).is_err());
    }

    #[test]
    fn diamond_spec_examples() {
        assert_eq!(diamond_ypow(1, &NcPoly::one()), p("y"));
        assert_eq!(diamond_ypow(1, &p("y")), p("yy - yx"));
        assert_eq!(diamond_ypow(1, &p("x")), p("xy + yx"));
    }

    #[test]
    fn f_n_spec_examples() {
        assert_eq!(f_n(-1, &p("yx")), NcPoly::zero());
        assert_eq!(f_n(0, &p("xy")), p("xy"));
        assert_eq!(f_n(1, &p("y")), p("-yx"));
    }
}

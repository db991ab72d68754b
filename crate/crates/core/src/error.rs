//! Error type shared by the library.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Error {
    /// A word outside `h1` (neither empty nor starting with `y`) was fed to
    /// an operation defined on `h1` only.
    NotInH1(String),
    /// A constant term was fed to the symmetric harmonic product, which is
    /// defined on `h'` (polynomials without constant term) only.
    ConstantTerm(String),
    /// A word whose tail-z decomposition leaves a prefix outside `h1`.
    BadZDecomposition(String),
    /// A word outside `h0` where an admissible combination was required.
    NotInH0(String),
    /// An index that is not admissible (positive parts, last part >= 2).
    NotAdmissible(String),
    /// Series operands live over different parameter sets.
    ProfileMismatch(String),
    /// A coefficient outside the truncation profile was requested.
    OutsideProfile(String),
    /// Nonzero constant term where a zero one was required (substitution,
    /// exponential).
    NonzeroConstantTerm,
    /// Constant term is not one where a unit series was required (logarithm,
    /// geometric inverse).
    ConstantTermNotOne,
    /// Exact series division failed: the divisor does not divide the series.
    NotDivisible(String),
    /// The Euler-Mascheroni symbol failed to cancel in a gamma-series
    /// combination that must be free of it.
    GammaResidual(String),
    /// Numeric evaluation hit the Euler-Mascheroni symbol.
    GammaInEval,
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotInH1(w) => write!(f, "word {w} is not in h1 (empty or starting with y)"),
            Error::ConstantTerm(ctx) => {
                write!(f, "constant term not allowed in {ctx} (operands must lie in h')")
            }
            Error::BadZDecomposition(w) => {
                write!(f, "word {w} has no tail-z decomposition with prefix in h1")
            }
            Error::NotInH0(w) => write!(f, "word {w} is not in h0 (empty or in y..x)"),
            Error::NotAdmissible(s) => write!(f, "index {s} is not admissible"),
            Error::ProfileMismatch(s) => write!(f, "series parameter sets differ: {s}"),
            Error::OutsideProfile(s) => write!(f, "coefficient {s} lies outside the truncation profile"),
            Error::NonzeroConstantTerm => write!(f, "series has a nonzero constant term"),
            Error::ConstantTermNotOne => write!(f, "series constant term is not one"),
            Error::NotDivisible(s) => write!(f, "exact division failed: {s}"),
            Error::GammaResidual(s) => write!(f, "Euler-Mascheroni symbol did not cancel: {s}"),
            Error::GammaInEval => write!(f, "cannot evaluate the Euler-Mascheroni symbol numerically"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

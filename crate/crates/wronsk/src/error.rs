//! Domain errors shared by the algebraic modules.

use std::fmt;

use crate::wronskian::WronskianClass;

#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// The operation needs a nonzero polynomial.
    ZeroPolynomial,
    /// `t -> t + a` with `a != 0` on a Laurent polynomial with negative exponents.
    UnsupportedShiftOfPrincipalPart,
    /// An exponent vector that must be pairwise distinct has a repeat.
    RepeatedExponent,
    /// A linear combination of the family reduced to the zero polynomial.
    LinearlyDependent,
    /// Two reduced elements are constants, which certifies linear dependence.
    TwoConstants,
    /// The family's Wronskian is not a nonzero constant; carries the classification.
    NotConstantWronskian(WronskianClass),
    /// An input expected to be a pure polynomial has negative exponents.
    NotPolynomial,
    /// The discovered monomial set fails to express the family; indicates a bug.
    BasisExpressionFailed,
    SingularMatrix,
    /// Exponents for a Laurent witness must sum to n choose 2.
    ExponentSumViolation,
    /// The Wronskian vanishes identically where a nonzero one is required.
    ZeroWronskian,
    /// Every component of the hodograph is zero.
    HodographVanishes,
    /// The invariant numerator vanishes identically (degenerate curve).
    ZeroNumerator,
    /// The family has at most one distinct pole; use the Laurent path instead.
    NotEnoughPoles,
    /// The family has no poles at all.
    NoPoles,
    InvalidConfig(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroPolynomial => write!(f, "the zero polynomial has no such coefficient"),
            Error::UnsupportedShiftOfPrincipalPart => write!(
                f,
                "cannot shift a Laurent polynomial with negative exponents by a nonzero amount"
            ),
            Error::RepeatedExponent => write!(f, "exponents must be pairwise distinct"),
            Error::LinearlyDependent => write!(f, "the functions are linearly dependent"),
            Error::TwoConstants => write!(
                f,
                "two reduced elements are constant, so the functions are linearly dependent"
            ),
            Error::NotConstantWronskian(class) => {
                write!(f, "the Wronskian is not a nonzero constant: {}", class)
            }
            Error::NotPolynomial => write!(f, "expected pure polynomials without negative exponents"),
            Error::BasisExpressionFailed => write!(
                f,
                "internal consistency violation: family not expressible over its monomial basis"
            ),
            Error::SingularMatrix => write!(f, "the matrix is singular"),
            Error::ExponentSumViolation => {
                write!(f, "exponents must sum to n(n-1)/2")
            }
            Error::ZeroWronskian => write!(f, "the Wronskian vanishes identically"),
            Error::HodographVanishes => write!(f, "every hodograph component is zero"),
            Error::ZeroNumerator => write!(f, "the invariant numerator vanishes identically"),
            Error::NotEnoughPoles => write!(
                f,
                "the family has fewer than two distinct poles; use the Laurent machinery"
            ),
            Error::NoPoles => write!(f, "the family has no poles"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

impl From<crate::laurent::UnsupportedShiftOfPrincipalPart> for Error {
    fn from(_: crate::laurent::UnsupportedShiftOfPrincipalPart) -> Self {
        Error::UnsupportedShiftOfPrincipalPart
    }
}

//! Sparse Laurent polynomials over ℚ.
//!
//! A `LaurentPoly` is a finite sum of terms `c · t^e` with integer exponents
//! of either sign, stored as an ordered exponent → coefficient map. The zero
//! polynomial is the empty map; no stored coefficient is zero. Values are
//! immutable after construction and safe to share across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Rational>,
}

/// Raised by [`LaurentPoly::shift`] when the substitution `t -> t + a`,
/// `a != 0`, is applied to a polynomial with negative exponents: the result
/// would leave the Laurent ring (it is an infinite series).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnsupportedShiftOfPrincipalPart;

impl fmt::Display for UnsupportedShiftOfPrincipalPart {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot shift a Laurent polynomial with negative exponents by a nonzero amount"
        )
    }
}

impl std::error::Error for UnsupportedShiftOfPrincipalPart {}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The variable `t`.
    pub fn var() -> Self {
        Self::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, c)
    }

    pub fn constant_i64(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `c · t^e`; the zero polynomial when `c = 0`.
    pub fn monomial(exponent: i64, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly { terms }
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, summing
    /// duplicates and dropping zero coefficients.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in iter {
            if c.is_zero() {
                continue;
            }
            let entry = terms.entry(e).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for `c · t^0`, including zero.
    pub fn is_constant(&self) -> bool {
        self.terms.len() <= 1 && self.terms.keys().all(|&e| e == 0)
    }

    /// The value of a constant polynomial, if it is one.
    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            Some(Rational::zero())
        } else if self.is_constant() {
            self.terms.get(&0).cloned()
        } else {
            None
        }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        self.terms
            .get(&exponent)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Largest exponent present; `None` for the zero polynomial.
    pub fn degree_max(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Smallest exponent present; `None` for the zero polynomial.
    pub fn degree_min(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Coefficient at the maximum degree; `None` for the zero polynomial.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Coefficient at the minimum degree; `None` for the zero polynomial.
    pub fn trailing_coeff(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// True when no exponent is negative (the zero polynomial counts).
    pub fn is_polynomial(&self) -> bool {
        self.degree_min().map_or(true, |m| m >= 0)
    }

    pub fn scale(&self, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e, v * c)).collect(),
        }
    }

    /// Multiplies by `c · t^k`, a unit of the Laurent ring when `c != 0`.
    pub fn mul_monomial(&self, k: i64, c: &Rational) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, v)| (e + k, v * c)).collect(),
        }
    }

    /// Termwise derivative: `c · t^e` maps to `c·e · t^(e-1)`.
    pub fn derivative(&self) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(&e, _)| e != 0)
                .map(|(&e, c)| (e - 1, c * Rational::from_integer(BigInt::from(e)))),
        )
    }

    pub fn derivative_n(&self, order: usize) -> LaurentPoly {
        let mut p = self.clone();
        for _ in 0..order {
            p = p.derivative();
        }
        p
    }

    pub fn pow(&self, n: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation at `x`. `None` when `x = 0` and the polynomial has
    /// negative exponents.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if x.is_zero() && self.degree_min().is_some_and(|m| m < 0) {
            return None;
        }
        let mut acc = Rational::zero();
        for (e, c) in self.terms() {
            let p = if e >= 0 {
                pow_rational(x, e as u32)
            } else {
                let q = pow_rational(x, (-e) as u32);
                Rational::one() / q
            };
            acc += c * p;
        }
        Some(acc)
    }

    /// Exact substitution `t -> t + a`. Identity for `a = 0`; rejected for
    /// nonzero `a` when negative exponents are present.
    pub fn shift(&self, a: &Rational) -> Result<LaurentPoly, UnsupportedShiftOfPrincipalPart> {
        if a.is_zero() {
            return Ok(self.clone());
        }
        if !self.is_polynomial() {
            return Err(UnsupportedShiftOfPrincipalPart);
        }
        let mut out = Vec::new();
        for (e, c) in self.terms() {
            // (t + a)^e expanded by the binomial theorem.
            let e = e as u32;
            let mut binom = Rational::one();
            let mut apow = Rational::one();
            for k in (0..=e).rev() {
                out.push((k as i64, c * &binom * &apow));
                if k > 0 {
                    binom = binom * Rational::from_integer(BigInt::from(k))
                        / Rational::from_integer(BigInt::from(e - k + 1));
                    apow *= a;
                }
            }
        }
        Ok(LaurentPoly::from_terms(out))
    }

    /// Quotient and remainder of polynomial division in ℚ[t].
    /// Both operands must be genuine polynomials and `divisor` nonzero.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> (LaurentPoly, LaurentPoly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        assert!(
            self.is_polynomial() && divisor.is_polynomial(),
            "div_rem is defined on polynomials"
        );
        let dd = divisor.degree_max().unwrap();
        let dlead = divisor.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        let mut quo = LaurentPoly::zero();
        while let Some(rd) = rem.degree_max() {
            if rd < dd {
                break;
            }
            let c = rem.leading_coeff().unwrap() / &dlead;
            let mono = LaurentPoly::monomial(rd - dd, c);
            rem = &rem - &(&mono * divisor);
            quo = &quo + &mono;
        }
        (quo, rem)
    }

    /// Exact division in the Laurent ring; `None` when the division leaves
    /// a remainder. Monomial factors `t^k` are units, so both operands are
    /// normalized to genuine polynomials first.
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let a = self.degree_min().unwrap();
        let b = divisor.degree_min().unwrap();
        let num = self.mul_monomial(-a, &Rational::one());
        let den = divisor.mul_monomial(-b, &Rational::one());
        let (q, r) = num.div_rem(&den);
        if r.is_zero() {
            Some(q.mul_monomial(a - b, &Rational::one()))
        } else {
            None
        }
    }

    /// Monic polynomial gcd in ℚ[t].
    pub fn gcd(&self, other: &LaurentPoly) -> LaurentPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading_coeff().unwrap().clone();
        a.scale(&(Rational::one() / lead))
    }
}

fn pow_rational(x: &Rational, n: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, c.clone()))),
        )
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::from_terms(
            self.terms()
                .map(|(e, c)| (e, c.clone()))
                .chain(rhs.terms().map(|(e, c)| (e, -c.clone()))),
        )
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in self.terms() {
            for (eb, cb) in rhs.terms() {
                let e = ea + eb;
                let entry = out.entry(e).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        LaurentPoly { terms: out }
    }
}

/// Canonical text rendering: terms in ascending exponent, exponent 0 bare,
/// exponent 1 as `t`, negative exponents as `t^-k`, coefficients as reduced
/// fractions `p/q`. This is the fixture format for golden tests.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{}", mag)?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}", mag)?;
                }
                write!(f, "t")?;
                if e != 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    #[test]
    fn add_cancels_and_keeps_identity() {
        // (t^2 + t) + (-t) = t^2
        assert_eq!(&p(&[(2, 1), (1, 1)]) + &p(&[(1, -1)]), p(&[(2, 1)]));
        let f = p(&[(3, 2), (-1, 5)]);
        assert_eq!(&f + &LaurentPoly::zero(), f);
    }

    #[test]
    fn add_matches_hand_expansion() {
        // (t^2 - 1 + t^-1) - (t^2 + t - t^-2) = -t - 1 + t^-1 + t^-2
        let a = p(&[(2, 1), (0, -1), (-1, 1)]);
        let b = p(&[(2, 1), (1, 1), (-2, -1)]);
        assert_eq!(&a - &b, p(&[(1, -1), (0, -1), (-1, 1), (-2, 1)]));
    }

    #[test]
    fn scale_examples() {
        assert_eq!(p(&[(3, 1)]).scale(&rat_int(0)), LaurentPoly::zero());
        assert_eq!(p(&[(2, 2)]).scale(&rat(-1, 2)), p(&[(2, -1)]));
        assert_eq!(
            p(&[(1, 1), (0, -2)]).scale(&rat_int(2)),
            p(&[(1, 2), (0, -4)])
        );
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[(-1, 1)]) * &p(&[(1, 1)]), p(&[(0, 1)]));
        assert_eq!(
            &p(&[(1, 1), (0, 1)]) * &p(&[(1, 1), (0, -1)]),
            p(&[(2, 1), (0, -1)])
        );
        assert_eq!(&p(&[(-2, 1)]) * &LaurentPoly::one(), p(&[(-2, 1)]));
    }

    #[test]
    fn degree_additivity() {
        let f = p(&[(4, 3), (-2, 1)]);
        let g = p(&[(5, -1), (0, 7)]);
        let fg = &f * &g;
        assert_eq!(fg.degree_max(), Some(9));
        assert_eq!(fg.degree_min(), Some(-2));
    }

    #[test]
    fn derivative_examples() {
        // d/dt (t^2 + t) = 2t + 1
        assert_eq!(p(&[(2, 1), (1, 1)]).derivative(), p(&[(1, 2), (0, 1)]));
        // d/dt t^-1 = -t^-2
        assert_eq!(p(&[(-1, 1)]).derivative(), p(&[(-2, -1)]));
        assert_eq!(p(&[(0, 5)]).derivative(), LaurentPoly::zero());
    }

    #[test]
    fn degree_extremes() {
        let f = p(&[(2, 1), (0, -1), (-1, 1)]);
        assert_eq!(f.degree_max(), Some(2));
        assert_eq!(f.degree_min(), Some(-1));
        let g = p(&[(1, 1), (-2, 1)]);
        assert_eq!(g.degree_max(), Some(1));
        assert_eq!(g.degree_min(), Some(-2));
        assert_eq!(LaurentPoly::zero().degree_max(), None);
        assert_eq!(LaurentPoly::zero().degree_min(), None);
        assert_eq!(p(&[(0, 5)]).degree_min(), Some(0));
    }

    #[test]
    fn leading_and_trailing() {
        assert_eq!(p(&[(2, 2)]).leading_coeff(), Some(&rat_int(2)));
        assert_eq!(p(&[(1, 1), (-2, 1)]).trailing_coeff(), Some(&rat_int(1)));
        assert_eq!(p(&[(3, -1), (0, 5)]).leading_coeff(), Some(&rat_int(-1)));
        assert_eq!(LaurentPoly::zero().leading_coeff(), None);
    }

    #[test]
    fn shift_examples() {
        // (t + 1)^2 = t^2 + 2t + 1
        assert_eq!(
            p(&[(2, 1)]).shift(&rat_int(1)).unwrap(),
            p(&[(2, 1), (1, 2), (0, 1)])
        );
        let f = p(&[(2, 1), (-3, 4)]);
        assert_eq!(f.shift(&rat_int(0)).unwrap(), f);
        // (t + 2) - 2 = t
        assert_eq!(p(&[(1, 1), (0, -2)]).shift(&rat_int(2)).unwrap(), p(&[(1, 1)]));
        assert_eq!(
            p(&[(-1, 1)]).shift(&rat_int(1)),
            Err(UnsupportedShiftOfPrincipalPart)
        );
    }

    #[test]
    fn eval_exact() {
        let f = p(&[(2, 1), (0, -1), (-1, 1)]);
        // f(2) = 4 - 1 + 1/2 = 7/2
        assert_eq!(f.eval(&rat_int(2)), Some(rat(7, 2)));
        assert_eq!(f.eval(&rat_int(0)), None);
        assert_eq!(p(&[(1, 3)]).eval(&rat_int(0)), Some(rat_int(0)));
    }

    #[test]
    fn div_rem_and_exact() {
        let f = p(&[(2, 1), (0, -1)]); // t^2 - 1
        let g = p(&[(1, 1), (0, 1)]); // t + 1
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, p(&[(1, 1), (0, -1)]));
        assert!(r.is_zero());
        assert_eq!(f.div_exact(&g), Some(p(&[(1, 1), (0, -1)])));
        assert_eq!(f.div_exact(&p(&[(1, 1), (0, 2)])), None);
        // Laurent units divide exactly.
        assert_eq!(p(&[(-3, 6)]).div_exact(&p(&[(-1, 2)])), Some(p(&[(-2, 3)])));
    }

    #[test]
    fn gcd_monic() {
        let f = &p(&[(1, 1), (0, -1)]) * &p(&[(1, 2), (0, 2)]); // (t-1)(2t+2)
        let g = &p(&[(1, 1), (0, 1)]) * &p(&[(1, 1), (0, 3)]); // (t+1)(t+3)
        assert_eq!(f.gcd(&g), p(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p(&[(0, -8)]).to_string(), "-8");
        assert_eq!(p(&[(2, 1), (1, 1)]).to_string(), "t + t^2");
        assert_eq!(
            p(&[(-5, 6), (-3, -8), (-2, -12), (-1, -3), (0, 2)]).to_string(),
            "6t^-5 - 8t^-3 - 12t^-2 - 3t^-1 + 2"
        );
        let half_t = LaurentPoly::monomial(2, rat(1, 2));
        assert_eq!(half_t.to_string(), "1/2t^2");
        assert_eq!(p(&[(1, -1)]).to_string(), "-t");
    }
}

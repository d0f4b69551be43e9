//! Rational functions over ℚ with factored denominators.
//!
//! A `RationalFunction` is `scalar · numerator / Π (t - β_j)^(m_j)` with a
//! monic polynomial numerator that does not vanish at any listed pole, and
//! poles sorted by location. This canonical form makes equality structural
//! and keeps every operation exact. The module also houses the pole-profile
//! analysis: partial fractions, the shift taking a pole to the origin, the
//! Wronskian over ℚ(t), and the n = 2 impossibility verdict for families
//! with at least two distinct poles.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::rational::Rational;
use crate::wronskian::{determinant_bareiss, wronskian_matrix};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    scalar: Rational,
    numerator: LaurentPoly,
    poles: Vec<(Rational, u32)>,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            scalar: Rational::one(),
            numerator: LaurentPoly::zero(),
            poles: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_laurent(&LaurentPoly::one())
    }

    /// `scalar · numerator / Π (t - β)^m`, normalized to canonical form:
    /// duplicate poles merged, common linear factors cancelled, the
    /// numerator made monic.
    pub fn new(scalar: Rational, numerator: LaurentPoly, poles: Vec<(Rational, u32)>) -> Self {
        assert!(numerator.is_polynomial(), "numerator must be a polynomial");
        if scalar.is_zero() || numerator.is_zero() {
            return Self::zero();
        }
        let mut merged: Vec<(Rational, u32)> = Vec::new();
        for (beta, m) in poles {
            if m == 0 {
                continue;
            }
            match merged.iter_mut().find(|(b, _)| *b == beta) {
                Some((_, order)) => *order += m,
                None => merged.push((beta, m)),
            }
        }
        let mut num = numerator;
        for (beta, order) in merged.iter_mut() {
            while *order > 0 && num.eval(beta).unwrap().is_zero() {
                let factor = LaurentPoly::from_terms([
                    (1, Rational::one()),
                    (0, -beta.clone()),
                ]);
                num = num.div_exact(&factor).expect("root divides exactly");
                *order -= 1;
            }
        }
        merged.retain(|(_, m)| *m > 0);
        merged.sort_by(|a, b| a.0.cmp(&b.0));
        let lead = num.leading_coeff().unwrap().clone();
        RationalFunction {
            scalar: scalar * &lead,
            numerator: num.scale(&(Rational::one() / lead)),
            poles: merged,
        }
    }

    /// Embeds a Laurent polynomial: negative exponents become a pole at 0.
    pub fn from_laurent(p: &LaurentPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let m = p.degree_min().unwrap();
        if m >= 0 {
            Self::new(Rational::one(), p.clone(), Vec::new())
        } else {
            Self::new(
                Rational::one(),
                p.mul_monomial(-m, &Rational::one()),
                vec![(Rational::zero(), (-m) as u32)],
            )
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn scalar(&self) -> &Rational {
        &self.scalar
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// `scalar · numerator`, the effective numerator polynomial.
    pub fn scaled_numerator(&self) -> LaurentPoly {
        self.numerator.scale(&self.scalar)
    }

    pub fn poles(&self) -> &[(Rational, u32)] {
        &self.poles
    }

    /// The full denominator `Π (t - β)^m` as a polynomial.
    pub fn denominator(&self) -> LaurentPoly {
        product_of_factors(&self.poles)
    }

    pub fn pole_order(&self, beta: &Rational) -> u32 {
        self.poles
            .iter()
            .find(|(b, _)| b == beta)
            .map_or(0, |(_, m)| *m)
    }

    /// Signed order at a point: pole order when positive, negated root
    /// multiplicity when the function vanishes there, 0 otherwise.
    pub fn order_at(&self, x: &Rational) -> i64 {
        assert!(!self.is_zero(), "the zero function has no order");
        let pole = self.pole_order(x);
        if pole > 0 {
            return pole as i64;
        }
        let factor = LaurentPoly::from_terms([(1, Rational::one()), (0, -x.clone())]);
        let mut mult = 0i64;
        let mut num = self.numerator.clone();
        while num.eval(x).unwrap().is_zero() {
            num = num.div_exact(&factor).expect("root divides exactly");
            mult += 1;
        }
        -mult
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.pole_order(x) > 0 {
            return None;
        }
        let den = self.denominator().eval(x).unwrap();
        Some(&self.scalar * self.numerator.eval(x).unwrap() / den)
    }

    pub fn neg(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            scalar: -self.scalar.clone(),
            numerator: self.numerator.clone(),
            poles: self.poles.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        RationalFunction {
            scalar: &self.scalar * c,
            numerator: self.numerator.clone(),
            poles: self.poles.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let union = union_profile(&[self.clone(), other.clone()]);
        let a = self.lift_numerator(&union);
        let b = other.lift_numerator(&union);
        Self::new(Rational::one(), &a + &b, union)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut poles = self.poles.clone();
        poles.extend(other.poles.iter().cloned());
        Self::new(
            &self.scalar * &other.scalar,
            &self.numerator * &other.numerator,
            poles,
        )
    }

    /// Exact derivative via the quotient rule: with `D = Π (t-β)^m`,
    /// `(N/D)' = (N'·L - N·Σ m_j L_j) / (D · L)` where `L = Π (t-β)` and
    /// `L_j` omits the j-th factor.
    pub fn derivative(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.poles.is_empty() {
            return Self::new(self.scalar.clone(), self.numerator.derivative(), Vec::new());
        }
        let simple: Vec<(Rational, u32)> =
            self.poles.iter().map(|(b, _)| (b.clone(), 1)).collect();
        let l = product_of_factors(&simple);
        let mut correction = LaurentPoly::zero();
        for (j, (beta, m)) in self.poles.iter().enumerate() {
            let mut lj = LaurentPoly::one();
            for (k, (other, _)) in self.poles.iter().enumerate() {
                if k != j {
                    let factor =
                        LaurentPoly::from_terms([(1, Rational::one()), (0, -other.clone())]);
                    lj = &lj * &factor;
                }
            }
            let _ = beta;
            correction = &correction + &lj.scale(&Rational::from_integer((*m).into()));
        }
        let num = &(&self.numerator.derivative() * &l) - &(&self.numerator * &correction);
        let poles: Vec<(Rational, u32)> = self
            .poles
            .iter()
            .map(|(b, m)| (b.clone(), m + 1))
            .collect();
        Self::new(self.scalar.clone(), num, poles)
    }

    /// `f(t + a)` exactly: the numerator is shifted, every pole moves to
    /// `β - a`.
    pub fn shift(&self, a: &Rational) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let num = self.numerator.shift(a).expect("numerator is a polynomial");
        let poles = self
            .poles
            .iter()
            .map(|(b, m)| (b - a, *m))
            .collect();
        Self::new(self.scalar.clone(), num, poles)
    }

    /// Back to the Laurent ring when the only pole (if any) sits at 0.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        match self.poles.as_slice() {
            [] => Some(self.scaled_numerator()),
            [(beta, m)] if beta.is_zero() => {
                Some(self.scaled_numerator().mul_monomial(-(*m as i64), &Rational::one()))
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.poles.is_empty() && self.numerator.is_constant()
    }

    pub fn constant_value(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if self.is_constant() {
            Some(self.scalar.clone())
        } else {
            None
        }
    }

    /// Numerator of `self · Π (t - β)^M` over the given profile, which must
    /// contain this function's poles. The result is a polynomial.
    fn lift_numerator(&self, profile: &[(Rational, u32)]) -> LaurentPoly {
        let mut acc = self.scaled_numerator();
        for (beta, order) in profile {
            let own = self.pole_order(beta);
            assert!(*order >= own);
            let factor = LaurentPoly::from_terms([(1, Rational::one()), (0, -beta.clone())]);
            for _ in 0..(order - own) {
                acc = &acc * &factor;
            }
        }
        acc
    }
}

fn product_of_factors(poles: &[(Rational, u32)]) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (beta, m) in poles {
        let factor = LaurentPoly::from_terms([(1, Rational::one()), (0, -beta.clone())]);
        for _ in 0..*m {
            acc = &acc * &factor;
        }
    }
    acc
}

/// Union of the families' poles with the per-pole maximum order.
fn union_profile(rfs: &[RationalFunction]) -> Vec<(Rational, u32)> {
    let mut out: Vec<(Rational, u32)> = Vec::new();
    for rf in rfs {
        for (beta, m) in rf.poles() {
            match out.iter_mut().find(|(b, _)| b == beta) {
                Some((_, order)) => *order = (*order).max(*m),
                None => out.push((beta.clone(), *m)),
            }
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// The poles of a family with their maximum orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PoleProfile {
    pub poles: Vec<(Rational, u32)>,
}

pub fn family_pole_profile(rfs: &[RationalFunction]) -> PoleProfile {
    PoleProfile {
        poles: union_profile(rfs),
    }
}

/// Shifts the family by `t -> t + a` so that a pole lands on the origin:
/// `a = 0` when a pole is already there, otherwise the smallest pole in
/// canonical order. The Wronskian class and value are unchanged.
pub fn normalize_pole_to_origin(
    rfs: &[RationalFunction],
) -> Result<(Vec<RationalFunction>, Rational), Error> {
    let profile = family_pole_profile(rfs);
    if profile.poles.is_empty() {
        return Err(Error::NoPoles);
    }
    let a = if profile.poles.iter().any(|(b, _)| b.is_zero()) {
        Rational::zero()
    } else {
        profile.poles[0].0.clone()
    };
    let shifted = rfs.iter().map(|rf| rf.shift(&a)).collect();
    Ok((shifted, a))
}

/// Exact partial fraction decomposition.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialFractions {
    pub polynomial_part: LaurentPoly,
    pub principal_parts: Vec<PrincipalPart>,
}

/// The principal part at one pole: `coefficients[k]` multiplies
/// `(t - pole)^-(k+1)`, `k = 0 .. order-1`; the deepest coefficient is
/// nonzero.
#[derive(Debug, Clone, PartialEq)]
pub struct PrincipalPart {
    pub pole: Rational,
    pub coefficients: Vec<Rational>,
}

impl PartialFractions {
    /// Recombines the decomposition; equals the decomposed function exactly.
    pub fn recombine(&self) -> RationalFunction {
        let mut acc = RationalFunction::from_laurent(&self.polynomial_part);
        for part in &self.principal_parts {
            for (k, c) in part.coefficients.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let term = RationalFunction::new(
                    c.clone(),
                    LaurentPoly::one(),
                    vec![(part.pole.clone(), (k + 1) as u32)],
                );
                acc = acc.add(&term);
            }
        }
        acc
    }
}

/// Splits a rational function into its polynomial part and the principal
/// part at each pole. The coefficients at pole β of order m come from the
/// exact power-series division of the shifted remainder by the shifted
/// co-factor denominator, truncated at order m.
pub fn partial_fractions(rf: &RationalFunction) -> PartialFractions {
    if rf.is_zero() {
        return PartialFractions {
            polynomial_part: LaurentPoly::zero(),
            principal_parts: Vec::new(),
        };
    }
    let den = rf.denominator();
    let (quotient, remainder) = rf.scaled_numerator().div_rem(&den);
    let mut parts = Vec::new();
    for (beta, m) in rf.poles() {
        let m = *m as usize;
        // E = D / (t - β)^m, regular and nonvanishing at β.
        let factor = LaurentPoly::from_terms([(1, Rational::one()), (0, -beta.clone())]);
        let mut cofactor = den.clone();
        for _ in 0..m {
            cofactor = cofactor.div_exact(&factor).expect("factor divides");
        }
        let r_shift = remainder.shift(beta).expect("polynomial shift");
        let e_shift = cofactor.shift(beta).expect("polynomial shift");
        let series = series_divide(&r_shift, &e_shift, m);
        // series[j] multiplies (t - β)^(j - m).
        let coefficients: Vec<Rational> =
            (0..m).map(|k| series[m - 1 - k].clone()).collect();
        parts.push(PrincipalPart {
            pole: beta.clone(),
            coefficients,
        });
    }
    PartialFractions {
        polynomial_part: quotient,
        principal_parts: parts,
    }
}

/// First `count` coefficients of the power series `r / e`, where `e(0) != 0`.
fn series_divide(r: &LaurentPoly, e: &LaurentPoly, count: usize) -> Vec<Rational> {
    let e0 = e.coeff(0);
    assert!(!e0.is_zero());
    let mut g: Vec<Rational> = Vec::with_capacity(count);
    for j in 0..count {
        let mut acc = r.coeff(j as i64);
        for (k, gk) in g.iter().enumerate() {
            acc -= gk * e.coeff((j - k) as i64);
        }
        g.push(acc / &e0);
    }
    g
}

/// The leading principal coefficient at a listed pole β of order m:
/// `lim (t-β)^m · f(t) = scalar · N(β) / E(β)`.
fn top_principal_coeff(rf: &RationalFunction, beta: &Rational) -> Rational {
    let m = rf.pole_order(beta);
    assert!(m > 0);
    let mut e = Rational::one();
    for (other, k) in rf.poles() {
        if other == beta {
            continue;
        }
        let base = beta - other;
        for _ in 0..*k {
            e *= &base;
        }
    }
    rf.scalar() * rf.numerator().eval(beta).unwrap() / e
}

/// The Wronskian of a rational family, by memoized Laplace expansion with
/// exact rational-function arithmetic.
pub fn wronskian_rational(rfs: &[RationalFunction]) -> RationalFunction {
    assert!(!rfs.is_empty());
    let n = rfs.len();
    let mut rows: Vec<Vec<RationalFunction>> = vec![rfs.to_vec()];
    for k in 1..n {
        let prev = &rows[k - 1];
        rows.push(prev.iter().map(RationalFunction::derivative).collect());
    }
    let full: u32 = (1 << n) - 1;
    let mut memo = std::collections::HashMap::new();
    rf_expand(&rows, full, &mut memo)
}

fn rf_expand(
    m: &[Vec<RationalFunction>],
    mask: u32,
    memo: &mut std::collections::HashMap<u32, RationalFunction>,
) -> RationalFunction {
    if mask == 0 {
        return RationalFunction::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let n = m.len();
    let row = n - mask.count_ones() as usize;
    let mut acc = RationalFunction::zero();
    let mut sign_pos = true;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = rf_expand(m, mask & !(1 << col), memo);
            let contrib = entry.mul(&sub);
            acc = if sign_pos {
                acc.add(&contrib)
            } else {
                acc.sub(&contrib)
            };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Structurally independent second route: lift the family over the common
/// denominator `D`, take the polynomial Wronskian by Bareiss elimination,
/// and divide by `D^n` (the identity `W(f·g_1, .., f·g_n) = f^n · W(g)`).
pub fn wronskian_rational_via_lift(rfs: &[RationalFunction]) -> RationalFunction {
    assert!(!rfs.is_empty());
    let n = rfs.len();
    let profile = union_profile(rfs);
    let numerators: Vec<LaurentPoly> = rfs.iter().map(|rf| rf.lift_numerator(&profile)).collect();
    let w_poly = determinant_bareiss(&wronskian_matrix(&numerators));
    let poles: Vec<(Rational, u32)> = profile
        .iter()
        .map(|(b, m)| (b.clone(), m * n as u32))
        .collect();
    RationalFunction::new(Rational::one(), w_poly, poles)
}

/// True when the family is linearly independent over ℚ, decided exactly by
/// the rank of the lifted coefficient matrix.
pub fn are_linearly_independent(rfs: &[RationalFunction]) -> bool {
    if rfs.iter().any(RationalFunction::is_zero) {
        return false;
    }
    let profile = union_profile(rfs);
    let numerators: Vec<LaurentPoly> = rfs.iter().map(|rf| rf.lift_numerator(&profile)).collect();
    let exponents: Vec<i64> = {
        let mut set = std::collections::BTreeSet::new();
        for p in &numerators {
            set.extend(p.terms().map(|(e, _)| e));
        }
        set.into_iter().collect()
    };
    let m = crate::matrix::QMatrix::from_fn(rfs.len(), exponents.len(), |i, j| {
        numerators[i].coeff(exponents[j])
    });
    m.rank() == rfs.len()
}

/// Witness data for the two-function impossibility verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct ImpossibilityVerdict {
    /// Always false: the Wronskian of an independent pair with two or more
    /// distinct poles is never a nonzero constant.
    pub is_constant: bool,
    /// Reparametrization applied before the analysis (`t -> t + shift`).
    pub shift: Rational,
    pub beta1: Rational,
    /// Maximum pole order at the origin across the (shifted) pair.
    pub k: u32,
    /// Maximum pole order at `beta1`.
    pub l1: u32,
    /// The proof's linear factor `(K - L1)·t - K·β1`; nonzero at 0 and β1.
    pub f_linear: LaurentPoly,
    /// Predicted signed orders of the Wronskian at 0 and β1 from the local
    /// expansion of the prepared pair; verified against the computed
    /// Wronskian. In the clean shape they are exactly K+1 and L1+1.
    pub predicted_order_origin: i64,
    pub predicted_order_beta1: i64,
    /// The exact Wronskian of the shifted pair.
    pub wronskian: RationalFunction,
}

/// Verifies, with an exact witness, that `W(rf1, rf2)` cannot be a nonzero
/// constant when the pair is independent with at least two distinct poles.
pub fn check_n2_impossibility(
    rf1: &RationalFunction,
    rf2: &RationalFunction,
) -> Result<ImpossibilityVerdict, Error> {
    if rf1.is_zero() || rf2.is_zero() || !are_linearly_independent(&[rf1.clone(), rf2.clone()]) {
        return Err(Error::LinearlyDependent);
    }
    let profile = family_pole_profile(&[rf1.clone(), rf2.clone()]);
    if profile.poles.len() < 2 {
        return Err(Error::NotEnoughPoles);
    }
    let (shifted, shift) = normalize_pole_to_origin(&[rf1.clone(), rf2.clone()])?;
    let wronskian = wronskian_rational(&shifted);

    let origin = Rational::zero();
    let mut q1 = shifted[0].clone();
    let mut q2 = shifted[1].clone();
    if q2.pole_order(&origin) > q1.pole_order(&origin) {
        std::mem::swap(&mut q1, &mut q2);
    }
    // Gauss-like preparation at the origin: q1 ends as the sole carrier of
    // the deepest t^-K term.
    while q1.pole_order(&origin) == q2.pole_order(&origin) && q1.pole_order(&origin) > 0 {
        let c = top_principal_coeff(&q2, &origin) / top_principal_coeff(&q1, &origin);
        q2 = q2.sub(&q1.scale(&c));
        if q2.is_zero() {
            return Err(Error::LinearlyDependent);
        }
    }
    let k = q1.pole_order(&origin);
    debug_assert!(k > 0);

    let beta1 = union_profile(&[q1.clone(), q2.clone()])
        .iter()
        .map(|(b, _)| b.clone())
        .find(|b| !b.is_zero())
        .expect("two distinct poles are present");
    let l1 = q1.pole_order(&beta1).max(q2.pole_order(&beta1));
    // Tie-break at β1 by reducing q1 with q2, which cannot disturb q1's
    // dominance at the origin.
    while q1.pole_order(&beta1) == q2.pole_order(&beta1) && q1.pole_order(&beta1) > 0 {
        let c = top_principal_coeff(&q1, &beta1) / top_principal_coeff(&q2, &beta1);
        q1 = q1.sub(&q2.scale(&c));
        debug_assert!(!q1.is_zero());
    }

    let f_linear = LaurentPoly::from_terms([
        (1, Rational::from_integer((k as i64 - l1 as i64).into())),
        (0, -(Rational::from_integer((k as i64).into()) * &beta1)),
    ]);
    let f_at_zero = -(Rational::from_integer((k as i64).into()) * &beta1);
    let f_at_beta1 = -(Rational::from_integer((l1 as i64).into()) * &beta1);
    assert!(!f_at_zero.is_zero() && !f_at_beta1.is_zero());

    let predicted_order_origin = q1.order_at(&origin) + q2.order_at(&origin) + 1;
    let predicted_order_beta1 = q1.order_at(&beta1) + q2.order_at(&beta1) + 1;
    assert_eq!(
        wronskian.order_at(&origin),
        predicted_order_origin,
        "predicted pole order at the origin must match the computed Wronskian"
    );
    assert_eq!(
        wronskian.order_at(&beta1),
        predicted_order_beta1,
        "predicted pole order at beta1 must match the computed Wronskian"
    );
    assert!(
        !wronskian.is_constant(),
        "the Wronskian of an independent pair with two poles cannot be constant"
    );

    Ok(ImpossibilityVerdict {
        is_constant: false,
        shift,
        beta1,
        k,
        l1,
        f_linear,
        predicted_order_origin,
        predicted_order_beta1,
        wronskian,
    })
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let num = self.scaled_numerator();
        if self.poles.is_empty() {
            return write!(f, "{}", num);
        }
        if num.num_terms() > 1 {
            write!(f, "({})", num)?;
        } else {
            write!(f, "{}", num)?;
        }
        write!(f, "/")?;
        let factors: Vec<String> = self
            .poles
            .iter()
            .map(|(beta, m)| {
                let base = if beta.is_zero() {
                    "t".to_string()
                } else if beta.is_negative() {
                    format!("(t + {})", -beta.clone())
                } else {
                    format!("(t - {})", beta)
                };
                if *m == 1 {
                    base
                } else {
                    format!("{}^{}", base, m)
                }
            })
            .collect();
        if factors.len() == 1 {
            write!(f, "{}", factors[0])
        } else {
            write!(f, "({})", factors.join(" "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    fn inv_t(order: u32) -> RationalFunction {
        RationalFunction::new(
            rat_int(1),
            LaurentPoly::one(),
            vec![(rat_int(0), order)],
        )
    }

    fn inv_linear(beta: i64, order: u32) -> RationalFunction {
        RationalFunction::new(
            rat_int(1),
            LaurentPoly::one(),
            vec![(rat_int(beta), order)],
        )
    }

    #[test]
    fn canonicalization_cancels_common_factors() {
        // (t^2 - t) / (t (t - 1)^2) = 1/(t - 1)
        let rf = RationalFunction::new(
            rat_int(1),
            p(&[(2, 1), (1, -1)]),
            vec![(rat_int(0), 1), (rat_int(1), 2)],
        );
        assert_eq!(rf, inv_linear(1, 1));
        assert_eq!(rf.to_string(), "1/(t - 1)");
    }

    #[test]
    fn scalar_keeps_numerator_monic() {
        let rf = RationalFunction::new(rat_int(1), p(&[(1, 3), (0, 3)]), vec![(rat_int(0), 1)]);
        assert_eq!(rf.scalar(), &rat_int(3));
        assert_eq!(rf.numerator(), &p(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn arithmetic_roundtrip() {
        let a = inv_t(1);
        let b = inv_linear(1, 1);
        let sum = a.add(&b);
        // 1/t + 1/(t-1) = (2t - 1)/(t(t-1))
        assert_eq!(sum.scaled_numerator(), p(&[(1, 2), (0, -1)]));
        assert_eq!(sum.poles(), &[(rat_int(0), 1), (rat_int(1), 1)]);
        assert_eq!(sum.sub(&b), a);
        assert!(a.sub(&a).is_zero());

        let prod = a.mul(&b);
        assert_eq!(prod.poles(), &[(rat_int(0), 1), (rat_int(1), 1)]);
    }

    #[test]
    fn derivative_matches_laurent_case() {
        // d/dt 1/t = -1/t^2
        let d = inv_t(1).derivative();
        assert_eq!(d, inv_t(2).neg());
        // d/dt 1/(t-1)^2 = -2/(t-1)^3
        let d = inv_linear(1, 2).derivative();
        assert_eq!(d, inv_linear(1, 3).scale(&rat_int(-2)));
        // Polynomial-only functions differentiate termwise.
        let d = RationalFunction::from_laurent(&p(&[(2, 3)])).derivative();
        assert_eq!(d, RationalFunction::from_laurent(&p(&[(1, 6)])));
    }

    #[test]
    fn shift_moves_poles() {
        let rf = inv_linear(2, 1);
        let moved = rf.shift(&rat_int(2));
        assert_eq!(moved, inv_t(1));
        assert_eq!(rf.shift(&rat_int(0)), rf);
    }

    #[test]
    fn laurent_embedding_roundtrip() {
        let f = p(&[(2, 1), (-3, 5), (0, -2)]);
        let rf = RationalFunction::from_laurent(&f);
        assert_eq!(rf.poles(), &[(rat_int(0), 3)]);
        assert_eq!(rf.to_laurent(), Some(f));
        assert_eq!(inv_linear(1, 1).to_laurent(), None);
    }

    #[test]
    fn pole_profiles() {
        let fam = vec![inv_t(1), inv_linear(1, 2)];
        assert_eq!(
            family_pole_profile(&fam).poles,
            vec![(rat_int(0), 1), (rat_int(1), 2)]
        );
        let fam = vec![inv_t(1).add(&inv_t(3)), inv_t(1)];
        assert_eq!(family_pole_profile(&fam).poles, vec![(rat_int(0), 3)]);
        let fam = vec![RationalFunction::from_laurent(&p(&[(2, 1)]))];
        assert!(family_pole_profile(&fam).poles.is_empty());
    }

    #[test]
    fn normalization_examples() {
        let fam = vec![inv_linear(1, 1), inv_linear(2, 1)];
        let (shifted, a) = normalize_pole_to_origin(&fam).unwrap();
        assert_eq!(a, rat_int(1));
        assert_eq!(
            family_pole_profile(&shifted).poles,
            vec![(rat_int(0), 1), (rat_int(1), 1)]
        );

        let fam = vec![inv_t(1), inv_linear(1, 1)];
        let (shifted, a) = normalize_pole_to_origin(&fam).unwrap();
        assert_eq!(a, rat_int(0));
        assert_eq!(shifted, fam);

        let fam = vec![inv_linear(-3, 1)];
        let (shifted, a) = normalize_pole_to_origin(&fam).unwrap();
        assert_eq!(a, rat_int(-3));
        assert_eq!(shifted[0], inv_t(1));

        let fam = vec![RationalFunction::from_laurent(&p(&[(1, 1)]))];
        assert_eq!(normalize_pole_to_origin(&fam), Err(Error::NoPoles));
    }

    #[test]
    fn partial_fraction_examples() {
        // 1/(t(t-1)) = -1/t + 1/(t-1)
        let rf = RationalFunction::new(
            rat_int(1),
            LaurentPoly::one(),
            vec![(rat_int(0), 1), (rat_int(1), 1)],
        );
        let pf = partial_fractions(&rf);
        assert!(pf.polynomial_part.is_zero());
        assert_eq!(
            pf.principal_parts,
            vec![
                PrincipalPart {
                    pole: rat_int(0),
                    coefficients: vec![rat_int(-1)],
                },
                PrincipalPart {
                    pole: rat_int(1),
                    coefficients: vec![rat_int(1)],
                },
            ]
        );
        assert_eq!(pf.recombine(), rf);

        let rf = RationalFunction::from_laurent(&p(&[(2, 1)]));
        let pf = partial_fractions(&rf);
        assert_eq!(pf.polynomial_part, p(&[(2, 1)]));
        assert!(pf.principal_parts.is_empty());

        let rf = inv_t(2);
        let pf = partial_fractions(&rf);
        assert_eq!(
            pf.principal_parts,
            vec![PrincipalPart {
                pole: rat_int(0),
                coefficients: vec![rat_int(0), rat_int(1)],
            }]
        );
        assert_eq!(pf.recombine(), rf);
    }

    #[test]
    fn wronskian_of_two_simple_poles() {
        // W(1/t, 1/(t-1)) = -1/(t^2 (t-1)^2)
        let w = wronskian_rational(&[inv_t(1), inv_linear(1, 1)]);
        assert_eq!(w.scalar(), &rat_int(-1));
        assert_eq!(w.numerator(), &LaurentPoly::one());
        assert_eq!(w.poles(), &[(rat_int(0), 2), (rat_int(1), 2)]);

        // W(1/t, t) = 2/t
        let w = wronskian_rational(&[inv_t(1), RationalFunction::from_laurent(&p(&[(1, 1)]))]);
        assert_eq!(w, inv_t(1).scale(&rat_int(2)));
    }

    #[test]
    fn lift_route_agrees_with_direct_route() {
        let fam = vec![
            inv_t(2).add(&RationalFunction::from_laurent(&p(&[(1, 3)]))),
            inv_linear(1, 1),
            RationalFunction::from_laurent(&p(&[(2, 1), (0, -1)])),
        ];
        assert_eq!(wronskian_rational(&fam), wronskian_rational_via_lift(&fam));
    }

    #[test]
    fn wronskian_agrees_with_laurent_engine() {
        let fs = vec![p(&[(6, 1)]), p(&[(-1, 1)]), p(&[(-2, 1)])];
        let rfs: Vec<RationalFunction> =
            fs.iter().map(RationalFunction::from_laurent).collect();
        let w = wronskian_rational(&rfs);
        assert_eq!(
            w.to_laurent().unwrap(),
            crate::wronskian::wronskian(&fs)
        );
    }

    #[test]
    fn impossibility_worked_examples() {
        // (1/t, 1/(t-1)): K = L1 = 1, f = -1, orders (2, 2).
        let v = check_n2_impossibility(&inv_t(1), &inv_linear(1, 1)).unwrap();
        assert!(!v.is_constant);
        assert_eq!((v.k, v.l1), (1, 1));
        assert_eq!(v.f_linear, p(&[(0, -1)]));
        assert_eq!(v.predicted_order_origin, 2);
        assert_eq!(v.predicted_order_beta1, 2);
        assert_eq!(v.wronskian.poles(), &[(rat_int(0), 2), (rat_int(1), 2)]);

        // (1/t^2, 1/(t-1)): orders 3 at 0 and 2 at 1.
        let v = check_n2_impossibility(&inv_t(2), &inv_linear(1, 1)).unwrap();
        assert_eq!((v.k, v.l1), (2, 1));
        assert_eq!(v.predicted_order_origin, 3);
        assert_eq!(v.predicted_order_beta1, 2);
        // f(t) = (K - L1) t - K β1 = t - 2
        assert_eq!(v.f_linear, p(&[(1, 1), (0, -2)]));

        let dependent = check_n2_impossibility(&inv_t(1), &inv_t(1).scale(&rat_int(2)));
        assert_eq!(dependent, Err(Error::LinearlyDependent));

        let single_pole = check_n2_impossibility(&inv_t(1), &inv_t(2));
        assert_eq!(single_pole, Err(Error::NotEnoughPoles));
    }

    #[test]
    fn impossibility_with_shared_pole_structure() {
        // Both functions carry both poles; the preparation has to do work.
        let rf1 = inv_t(1).add(&inv_linear(1, 1));
        let rf2 = inv_t(1).sub(&inv_linear(1, 1));
        let v = check_n2_impossibility(&rf1, &rf2).unwrap();
        assert!(!v.is_constant);
        assert_eq!(
            v.wronskian.order_at(&rat_int(0)),
            v.predicted_order_origin
        );

        // q2 keeps a shallower pole at the origin after preparation.
        let rf1 = inv_t(2);
        let rf2 = inv_t(1).add(&inv_linear(1, 1));
        let v = check_n2_impossibility(&rf1, &rf2).unwrap();
        assert!(!v.is_constant);
        assert_eq!(v.predicted_order_origin, 2 + 1 + 1);
    }

    #[test]
    fn display_roundtrip_shapes() {
        assert_eq!(inv_t(1).to_string(), "1/t");
        assert_eq!(inv_t(2).to_string(), "1/t^2");
        assert_eq!(inv_linear(1, 2).to_string(), "1/(t - 1)^2");
        let rf = RationalFunction::new(
            rat_int(1),
            p(&[(2, 1), (0, 1)]),
            vec![(rat_int(0), 1), (rat_int(1), 1)],
        );
        assert_eq!(rf.to_string(), "(1 + t^2)/(t (t - 1))");
        let rf = RationalFunction::new(rat(-1, 2), LaurentPoly::one(), vec![(rat(-1, 2), 1)]);
        assert_eq!(rf.to_string(), "-1/2/(t + 1/2)");
    }

    #[test]
    fn eval_and_orders() {
        let rf = RationalFunction::new(
            rat_int(1),
            p(&[(1, 1), (0, -3)]),
            vec![(rat_int(1), 2)],
        );
        assert_eq!(rf.order_at(&rat_int(1)), 2);
        assert_eq!(rf.order_at(&rat_int(3)), -1);
        assert_eq!(rf.order_at(&rat_int(5)), 0);
        assert_eq!(rf.eval(&rat_int(1)), None);
        assert_eq!(rf.eval(&rat_int(2)), Some(rat_int(-1)));
    }
}

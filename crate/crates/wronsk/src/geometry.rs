//! Geometric consequences for parametric curves: hyperplane containment,
//! hodograph analysis, recognition of affine images of the rational normal
//! curve, and the curvature/torsion numerator with its vanishing report.

use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::characterize::characterize_poly;
use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::QMatrix;
use crate::rational::{rat, Rational};
use crate::roots::{count_real_roots, rational_roots};
use crate::wronskian::{classify, wronskian, WronskianClass};

/// A parametric curve `y(t) = (p_1(t), .., p_n(t))`, n >= 2.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    pub components: Vec<LaurentPoly>,
}

impl Curve {
    /// At least two components are required; a meaningful curve also has a
    /// non-constant component, but degenerate inputs are accepted so the
    /// downstream diagnostics (e.g. a vanishing hodograph) can fire.
    pub fn new(components: Vec<LaurentPoly>) -> Result<Curve, Error> {
        if components.len() < 2 {
            return Err(Error::InvalidConfig(
                "a curve needs at least 2 components".into(),
            ));
        }
        Ok(Curve { components })
    }

    pub fn dimension(&self) -> usize {
        self.components.len()
    }

    pub fn is_polynomial(&self) -> bool {
        self.components.iter().all(LaurentPoly::is_polynomial)
    }
}

/// The affine hyperplane `normal · x = constant`, normalized so the first
/// nonzero normal entry is 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Hyperplane {
    pub normal: Vec<Rational>,
    pub constant: Rational,
}

impl Hyperplane {
    /// Exact check that the curve satisfies the hyperplane identically.
    pub fn contains(&self, curve: &Curve) -> bool {
        let mut acc = LaurentPoly::constant(-self.constant.clone());
        for (a, p) in self.normal.iter().zip(&curve.components) {
            acc = &acc + &p.scale(a);
        }
        acc.is_zero()
    }
}

/// The classification of `det(y, y', .., y^(n-1))`.
pub fn curve_wronskian(curve: &Curve) -> WronskianClass {
    classify(&curve.components)
}

/// Finds an affine hyperplane containing the curve, if one exists: the
/// exact solution space of `Σ α_i p_i(t) - c = 0` over the coefficient
/// vectors of the components and the constant function. When the space has
/// dimension > 1, the basis element with the earliest pivot is returned.
pub fn hyperplane_containment(curve: &Curve) -> Option<Hyperplane> {
    hyperplane_basis(curve).into_iter().next()
}

/// Every hyperplane in the normalized solution basis.
pub fn hyperplane_basis(curve: &Curve) -> Vec<Hyperplane> {
    let n = curve.dimension();
    let mut exponents: BTreeSet<i64> = curve
        .components
        .iter()
        .flat_map(|p| p.terms().map(|(e, _)| e))
        .collect();
    exponents.insert(0);
    let rows: Vec<i64> = exponents.into_iter().collect();
    // Columns: one per component plus one for the constant; rows: one per
    // occurring exponent. A null vector (α, γ) gives Σ α_i p_i + γ = 0.
    let m = QMatrix::from_fn(rows.len(), n + 1, |i, j| {
        if j < n {
            curve.components[j].coeff(rows[i])
        } else if rows[i] == 0 {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    m.nullspace()
        .into_iter()
        .filter_map(|v| {
            let alpha = &v[..n];
            let lead = alpha.iter().find(|a| !a.is_zero())?;
            let scale = Rational::one() / lead.clone();
            Some(Hyperplane {
                normal: alpha.iter().map(|a| a * &scale).collect(),
                constant: -(&v[n] * &scale),
            })
        })
        .collect()
}

/// The componentwise first derivative.
pub fn hodograph(curve: &Curve) -> Result<Curve, Error> {
    let comps: Vec<LaurentPoly> = curve.components.iter().map(LaurentPoly::derivative).collect();
    if comps.iter().all(LaurentPoly::is_zero) {
        return Err(Error::HodographVanishes);
    }
    Ok(Curve { components: comps })
}

/// If the curve is an affine image `M · (t, t^2, .., t^n)ᵀ + b` of the
/// rational normal curve, returns the exact witness `(M, b)`.
pub fn is_affine_rnc(curve: &Curve) -> Option<(QMatrix, Vec<Rational>)> {
    if !curve.is_polynomial() {
        return None;
    }
    let hodo = hodograph(curve).ok()?;
    let ch = characterize_poly(&hodo.components).ok()?;
    let n = curve.dimension();
    // Termwise integration: hodograph = Ã · (1, .., t^(n-1))ᵀ gives
    // curve - curve(0) = Ã · diag(1, 1/2, .., 1/n) · (t, .., t^n)ᵀ.
    let d = QMatrix::from_fn(n, n, |i, j| {
        if i == j {
            rat(1, (i + 1) as i64)
        } else {
            Rational::zero()
        }
    });
    let m = ch.matrix_a.matmul(&d);
    let b: Vec<Rational> = curve
        .components
        .iter()
        .map(|p| p.eval(&Rational::zero()).unwrap())
        .collect();
    let basis: Vec<LaurentPoly> = (1..=n)
        .map(|j| LaurentPoly::monomial(j as i64, Rational::one()))
        .collect();
    let rebuilt: Vec<LaurentPoly> = m
        .apply_to_functions(&basis)
        .into_iter()
        .zip(&b)
        .map(|(p, bi)| &p + &LaurentPoly::constant(bi.clone()))
        .collect();
    assert_eq!(rebuilt, curve.components, "affine witness must reconstruct");
    Some((m, b))
}

/// The numerator of the curvature (n = 2) / torsion (n = 3) formulas:
/// `det(x', x'', .., x^(n))`, i.e. the Wronskian of the hodograph.
pub fn invariant_numerator(curve: &Curve) -> LaurentPoly {
    let derived: Vec<LaurentPoly> = curve.components.iter().map(LaurentPoly::derivative).collect();
    wronskian(&derived)
}

/// Exact report on where the curvature/torsion numerator vanishes.
#[derive(Debug, Clone, PartialEq)]
pub struct VanishingReport {
    /// True iff no vanishing point exists over ℂ.
    pub is_constant: bool,
    pub numerator: LaurentPoly,
    pub rational_roots: Vec<Rational>,
    /// Distinct real roots, by an exact Sturm count over (-∞, ∞).
    pub real_root_count: usize,
}

pub fn vanishing_invariant_report(curve: &Curve) -> Result<VanishingReport, Error> {
    if !curve.is_polynomial() {
        return Err(Error::NotPolynomial);
    }
    let numerator = invariant_numerator(curve);
    if numerator.is_zero() {
        return Err(Error::ZeroNumerator);
    }
    if numerator.is_constant() {
        return Ok(VanishingReport {
            is_constant: true,
            numerator,
            rational_roots: Vec::new(),
            real_root_count: 0,
        });
    }
    Ok(VanishingReport {
        is_constant: false,
        rational_roots: rational_roots(&numerator),
        real_root_count: count_real_roots(&numerator),
        numerator,
    })
}

/// Componentwise `t -> t + a`; the Wronskian class and value are preserved.
pub fn reparametrize_shift(curve: &Curve, a: &Rational) -> Result<Curve, Error> {
    let comps = curve
        .components
        .iter()
        .map(|p| p.shift(a))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Curve { components: comps })
}

//! Witness decompositions for families with a nonzero constant Wronskian.
//!
//! A polynomial family has a nonzero constant Wronskian exactly when it is
//! `A · (1, t, .., t^(n-1))ᵀ` for a nonsingular `A`; a Laurent family
//! exactly when it is `A · (t^(r_1), .., t^(r_n))ᵀ` with `A` nonsingular and
//! distinct integer exponents summing to `C(n, 2)`. Both directions are
//! implemented: `characterize_*` extracts the witness, `synthesize_*`
//! rebuilds a family from one.

use num_traits::Zero;

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::QMatrix;
use crate::rational::Rational;
use crate::reduction::monomial_basis_classified;
use crate::wronskian::{classify, superfactorial, vandermonde, wronskian, WronskianClass};

/// Witness for the polynomial characterization: the family equals
/// `matrix_a · (1, t, .., t^(n-1))ᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCharacterization {
    pub matrix_a: QMatrix,
    pub det_a: Rational,
}

/// Witness for the Laurent characterization: the family equals
/// `matrix_a · (t^(r_1), .., t^(r_n))ᵀ` with `Σ r_i = C(n, 2)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentCharacterization {
    pub matrix_a: QMatrix,
    pub det_a: Rational,
    pub exponents: Vec<i64>,
}

/// Decides the nonzero-constant property for pure polynomials and produces
/// the coefficient witness. Row `i` of the witness holds the coefficients
/// of `fs[i]` in the basis `(1, t, .., t^(n-1))`.
pub fn characterize_poly(fs: &[LaurentPoly]) -> Result<PolyCharacterization, Error> {
    assert!(!fs.is_empty());
    if fs.iter().any(|f| !f.is_polynomial()) {
        return Err(Error::NotPolynomial);
    }
    let class = classify(fs);
    let value = match &class {
        WronskianClass::NonzeroConstant(v) => v.clone(),
        WronskianClass::IdenticallyZero => return Err(Error::LinearlyDependent),
        WronskianClass::NonConstant(_) => return Err(Error::NotConstantWronskian(class)),
    };
    let n = fs.len();
    // The theorem caps every degree at n-1 once the Wronskian is a nonzero
    // constant; a violation here would be an engine bug.
    assert!(
        fs.iter().all(|f| f.degree_max().unwrap_or(0) <= (n as i64) - 1),
        "constant-Wronskian polynomial family exceeds degree n-1"
    );
    let matrix_a = QMatrix::from_fn(n, n, |i, j| fs[i].coeff(j as i64));
    let det_a = matrix_a.det();
    assert_eq!(
        value,
        &det_a * superfactorial(n),
        "witness determinant identity failed"
    );
    Ok(PolyCharacterization { matrix_a, det_a })
}

/// Decides the nonzero-constant property for Laurent families and produces
/// the monomial-basis witness.
pub fn characterize_laurent(fs: &[LaurentPoly]) -> Result<LaurentCharacterization, Error> {
    assert!(!fs.is_empty());
    let class = classify(fs);
    let value = match &class {
        WronskianClass::NonzeroConstant(v) => v.clone(),
        WronskianClass::IdenticallyZero => return Err(Error::LinearlyDependent),
        WronskianClass::NonConstant(_) => return Err(Error::NotConstantWronskian(class)),
    };
    let exponents = monomial_basis_classified(fs, &class)?;
    let n = fs.len();
    let matrix_a = QMatrix::from_fn(n, n, |i, j| fs[i].coeff(exponents[j]));
    let det_a = matrix_a.det();
    assert_eq!(
        value,
        &det_a * vandermonde(&exponents),
        "witness determinant identity failed"
    );
    Ok(LaurentCharacterization {
        matrix_a,
        det_a,
        exponents,
    })
}

/// `A · (1, t, .., t^(n-1))ᵀ` for nonsingular `A`; the result is guaranteed
/// to have the nonzero constant Wronskian `det(A) · 2!·3!⋯(n-1)!`.
pub fn synthesize_poly(a: &QMatrix) -> Result<Vec<LaurentPoly>, Error> {
    assert!(a.is_square());
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let n = a.rows();
    let basis: Vec<LaurentPoly> = (0..n)
        .map(|j| LaurentPoly::monomial(j as i64, Rational::from_integer(1.into())))
        .collect();
    Ok(a.apply_to_functions(&basis))
}

/// `A · (t^(r_1), .., t^(r_n))ᵀ` for nonsingular `A` and admissible
/// exponents; the Wronskian is `det(A) · V(r)`.
pub fn synthesize_laurent(a: &QMatrix, rs: &[i64]) -> Result<Vec<LaurentPoly>, Error> {
    assert!(a.is_square());
    assert_eq!(a.rows(), rs.len());
    let n = rs.len() as i64;
    let mut sorted = rs.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::RepeatedExponent);
    }
    if rs.iter().sum::<i64>() != n * (n - 1) / 2 {
        return Err(Error::ExponentSumViolation);
    }
    if a.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let basis: Vec<LaurentPoly> = rs
        .iter()
        .map(|&r| LaurentPoly::monomial(r, Rational::from_integer(1.into())))
        .collect();
    Ok(a.apply_to_functions(&basis))
}

/// Degree criterion for polynomial curves with nonvanishing Wronskian: the
/// Wronskian is a nonzero constant iff the family's maximum degree is n-1.
pub fn is_constant_by_degree(fs: &[LaurentPoly]) -> Result<bool, Error> {
    assert!(!fs.is_empty());
    if fs.iter().any(|f| !f.is_polynomial()) {
        return Err(Error::NotPolynomial);
    }
    let w = wronskian(fs);
    if w.is_zero() {
        return Err(Error::ZeroWronskian);
    }
    let n = fs.len() as i64;
    let d = fs.iter().filter_map(LaurentPoly::degree_max).max();
    let verdict = d == Some(n - 1);
    debug_assert_eq!(verdict, w.is_constant());
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    fn m(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn poly_witness_worked_example() {
        let fs = vec![p(&[(2, 1), (1, 1)]), p(&[(2, 2)]), p(&[(1, 1), (0, -2)])];
        let ch = characterize_poly(&fs).unwrap();
        assert_eq!(ch.matrix_a, m(&[&[0, 1, 1], &[0, 0, 2], &[-2, 1, 0]]));
        assert_eq!(ch.det_a, rat_int(-4));
        // -4 * 2! = -8 = W
        assert_eq!(&ch.det_a * superfactorial(3), rat_int(-8));
        assert_eq!(ch.matrix_a.apply_to_functions(&monomials(3)), fs);
    }

    fn monomials(n: usize) -> Vec<LaurentPoly> {
        (0..n).map(|j| p(&[(j as i64, 1)])).collect()
    }

    #[test]
    fn poly_identity_family() {
        let fs = monomials(4);
        let ch = characterize_poly(&fs).unwrap();
        assert_eq!(ch.matrix_a, QMatrix::identity(4));
        assert_eq!(ch.det_a, rat_int(1));
    }

    #[test]
    fn poly_rejections() {
        let fs = vec![p(&[(3, 1)]), p(&[(3, 1), (2, 1)]), p(&[(2, 1), (0, -2)])];
        match characterize_poly(&fs) {
            Err(Error::NotConstantWronskian(WronskianClass::NonConstant(w))) => {
                assert_eq!(w, p(&[(2, 12)]));
            }
            other => panic!("unexpected: {:?}", other),
        }
        assert_eq!(
            characterize_poly(&[p(&[(-1, 1)])]),
            Err(Error::NotPolynomial)
        );
        assert_eq!(
            characterize_poly(&[p(&[(1, 1)]), p(&[(1, 2)])]),
            Err(Error::LinearlyDependent)
        );
    }

    #[test]
    fn laurent_witness_worked_examples() {
        let fs = vec![p(&[(6, 1)]), p(&[(-1, 1)]), p(&[(-2, 1)])];
        let ch = characterize_laurent(&fs).unwrap();
        assert_eq!(ch.exponents, vec![6, -1, -2]);
        assert_eq!(ch.matrix_a, QMatrix::identity(3));
        assert_eq!(&ch.det_a * vandermonde(&ch.exponents), rat_int(-56));

        let fs = vec![p(&[(1, 1)]), p(&[(2, 1), (1, -1)]), p(&[(2, 1), (0, 1)])];
        let ch = characterize_laurent(&fs).unwrap();
        let mut r = ch.exponents.clone();
        r.sort_unstable();
        assert_eq!(r, vec![0, 1, 2]);
        assert_eq!(ch.exponents.iter().sum::<i64>(), 3);
        assert_eq!(&ch.det_a * vandermonde(&ch.exponents), rat_int(2));

        // Exponent sum -3 != 1 rules the pair out.
        let fs = vec![p(&[(-1, 1)]), p(&[(-2, 1)])];
        assert!(matches!(
            characterize_laurent(&fs),
            Err(Error::NotConstantWronskian(_))
        ));
    }

    #[test]
    fn synthesize_poly_examples() {
        let fs = synthesize_poly(&QMatrix::identity(3)).unwrap();
        assert_eq!(fs, monomials(3));
        assert_eq!(wronskian(&fs), p(&[(0, 2)]));

        let fs = synthesize_poly(&m(&[&[0, 1], &[1, 0]])).unwrap();
        assert_eq!(fs, vec![p(&[(1, 1)]), p(&[(0, 1)])]);
        assert_eq!(wronskian(&fs), p(&[(0, -1)]));

        assert_eq!(
            synthesize_poly(&m(&[&[1, 2], &[2, 4]])),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn synthesize_laurent_examples() {
        let fs = synthesize_laurent(&QMatrix::identity(3), &[6, -1, -2]).unwrap();
        assert_eq!(wronskian(&fs), p(&[(0, -56)]));

        let fs = synthesize_laurent(&QMatrix::identity(2), &[0, 1]).unwrap();
        assert_eq!(wronskian(&fs), p(&[(0, 1)]));

        assert_eq!(
            synthesize_laurent(&QMatrix::identity(2), &[0, 0]),
            Err(Error::RepeatedExponent)
        );
        assert_eq!(
            synthesize_laurent(&QMatrix::identity(2), &[0, 2]),
            Err(Error::ExponentSumViolation)
        );
        assert_eq!(
            synthesize_laurent(&m(&[&[1, 2], &[2, 4]]), &[0, 1]),
            Err(Error::SingularMatrix)
        );
    }

    #[test]
    fn synthesized_laurent_value_matches_det_times_vandermonde() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let rs = [2i64, 0, 1];
        for _ in 0..20 {
            let a = QMatrix::from_fn(3, 3, |_, _| rat_int(rng.gen_range(-9..=9)));
            if a.det().is_zero() {
                continue;
            }
            let fs = synthesize_laurent(&a, &rs).unwrap();
            let w = wronskian(&fs);
            assert_eq!(w, LaurentPoly::constant(&a.det() * vandermonde(&rs)));
        }
    }

    #[test]
    fn degree_criterion() {
        let fs = vec![p(&[(2, 1), (1, 1)]), p(&[(2, 2)]), p(&[(1, 1), (0, -2)])];
        assert_eq!(is_constant_by_degree(&fs), Ok(true));

        let fs = vec![p(&[(3, 1)]), p(&[(3, 1), (2, 1)]), p(&[(2, 1), (0, -2)])];
        assert_eq!(is_constant_by_degree(&fs), Ok(false));

        // W(1, t, t^3) = 6t, degree 3 != 2.
        let fs = vec![p(&[(0, 1)]), p(&[(1, 1)]), p(&[(3, 1)])];
        assert_eq!(is_constant_by_degree(&fs), Ok(false));

        let fs = vec![p(&[(1, 1)]), p(&[(1, 2)])];
        assert_eq!(is_constant_by_degree(&fs), Err(Error::ZeroWronskian));
    }

    #[test]
    fn single_constant_function() {
        let ch = characterize_poly(&[p(&[(0, 5)])]).unwrap();
        assert_eq!(ch.det_a, rat_int(5));
        assert!(matches!(
            characterize_poly(&[p(&[(1, 1)])]),
            Err(Error::NotConstantWronskian(_))
        ));
    }
}

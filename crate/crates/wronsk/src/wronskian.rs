//! Wronskian matrices, exact determinants and the three-way classification.
//!
//! The determinant is computed by memoized Laplace expansion for small
//! families and by fraction-free Bareiss elimination over the Laurent ring
//! for larger ones. Negative exponents are cleared per column with monomial
//! factors, which are units of the ring, so exactness is preserved.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::rational::{factorial, Rational};

/// Families at most this large go through cofactor expansion; larger ones
/// through Bareiss elimination. Tunable.
pub const COFACTOR_THRESHOLD: usize = 6;

/// Classification of a Wronskian determinant. The full determinant is
/// recoverable from any variant via [`WronskianClass::determinant`].
#[derive(Debug, Clone, PartialEq)]
pub enum WronskianClass {
    IdenticallyZero,
    NonzeroConstant(Rational),
    NonConstant(LaurentPoly),
}

impl WronskianClass {
    pub fn from_wronskian(w: LaurentPoly) -> Self {
        match w.constant_value() {
            Some(c) if c.is_zero() => WronskianClass::IdenticallyZero,
            Some(c) => WronskianClass::NonzeroConstant(c),
            None => WronskianClass::NonConstant(w),
        }
    }

    /// The full determinant this classification was built from.
    pub fn determinant(&self) -> LaurentPoly {
        match self {
            WronskianClass::IdenticallyZero => LaurentPoly::zero(),
            WronskianClass::NonzeroConstant(c) => LaurentPoly::constant(c.clone()),
            WronskianClass::NonConstant(w) => w.clone(),
        }
    }

    pub fn is_nonzero_constant(&self) -> bool {
        matches!(self, WronskianClass::NonzeroConstant(_))
    }

    pub fn constant_value(&self) -> Option<&Rational> {
        match self {
            WronskianClass::NonzeroConstant(c) => Some(c),
            _ => None,
        }
    }

    pub fn tag(&self) -> &'static str {
        match self {
            WronskianClass::IdenticallyZero => "identically_zero",
            WronskianClass::NonzeroConstant(_) => "nonzero_constant",
            WronskianClass::NonConstant(_) => "non_constant",
        }
    }
}

impl fmt::Display for WronskianClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WronskianClass::IdenticallyZero => write!(f, "identically zero"),
            WronskianClass::NonzeroConstant(c) => write!(f, "nonzero constant {}", c),
            WronskianClass::NonConstant(w) => write!(f, "non-constant {}", w),
        }
    }
}

/// Row `k` holds the `k`-th derivatives, `k = 0 .. n-1`; row 0 is the
/// functions themselves.
pub fn wronskian_matrix(fs: &[LaurentPoly]) -> Vec<Vec<LaurentPoly>> {
    assert!(!fs.is_empty(), "a Wronskian needs at least one function");
    let n = fs.len();
    let mut rows = Vec::with_capacity(n);
    rows.push(fs.to_vec());
    for k in 1..n {
        let prev: &Vec<LaurentPoly> = &rows[k - 1];
        rows.push(prev.iter().map(LaurentPoly::derivative).collect());
    }
    rows
}

/// The exact Wronskian determinant of the family.
pub fn wronskian(fs: &[LaurentPoly]) -> LaurentPoly {
    let m = wronskian_matrix(fs);
    determinant(&m)
}

/// Exact determinant of a square matrix of Laurent polynomials.
pub fn determinant(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    if m.len() <= COFACTOR_THRESHOLD {
        determinant_cofactor(m)
    } else {
        determinant_bareiss(m)
    }
}

/// Laplace expansion along rows, memoized on the set of surviving columns.
pub fn determinant_cofactor(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n));
    assert!(n <= 32, "cofactor path is for small matrices");
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u32, LaurentPoly> = HashMap::new();
    expand(m, full, &mut memo)
}

fn expand(m: &[Vec<LaurentPoly>], mask: u32, memo: &mut HashMap<u32, LaurentPoly>) -> LaurentPoly {
    if mask == 0 {
        return LaurentPoly::one();
    }
    if let Some(hit) = memo.get(&mask) {
        return hit.clone();
    }
    let n = m.len();
    let row = n - mask.count_ones() as usize;
    let mut acc = LaurentPoly::zero();
    let mut sign_pos = true;
    for col in 0..n {
        if mask & (1 << col) == 0 {
            continue;
        }
        let entry = &m[row][col];
        if !entry.is_zero() {
            let sub = expand(m, mask & !(1 << col), memo);
            let contrib = entry * &sub;
            acc = if sign_pos { &acc + &contrib } else { &acc - &contrib };
        }
        sign_pos = !sign_pos;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Fraction-free Bareiss elimination. Every interior division is exact by
/// the Bareiss identity; columns are premultiplied by `t^k` to clear
/// negative exponents and the monomial correction is divided back out at
/// the end.
pub fn determinant_bareiss(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let n = m.len();
    assert!(n > 0 && m.iter().all(|row| row.len() == n));
    let mut work: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut correction: i64 = 0;
    for col in 0..n {
        let min_exp = (0..n)
            .filter_map(|row| work[row][col].degree_min())
            .min()
            .unwrap_or(0);
        if min_exp < 0 {
            for row in work.iter_mut() {
                row[col] = row[col].mul_monomial(-min_exp, &Rational::one());
            }
            correction += min_exp;
        }
    }
    let mut sign_pos = true;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if work[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !work[r][k].is_zero());
            match swap {
                Some(r) => {
                    work.swap(k, r);
                    sign_pos = !sign_pos;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&work[k][k] * &work[i][j]) - &(&work[i][k] * &work[k][j]);
                work[i][j] = if num.is_zero() {
                    LaurentPoly::zero()
                } else {
                    num.div_exact(&prev)
                        .expect("Bareiss interior division must be exact")
                };
            }
            work[i][k] = LaurentPoly::zero();
        }
        prev = work[k][k].clone();
    }
    let mut det = work[n - 1][n - 1].clone();
    if !sign_pos {
        det = -&det;
    }
    det.mul_monomial(correction, &Rational::one())
}

/// Classifies the Wronskian of the family; the ground-truth oracle for the
/// higher-level modules.
pub fn classify(fs: &[LaurentPoly]) -> WronskianClass {
    WronskianClass::from_wronskian(wronskian(fs))
}

/// `V(d_1, .., d_n) = Π_{i<j} (d_j - d_i)`; zero iff two entries coincide.
pub fn vandermonde(ds: &[i64]) -> Rational {
    let mut acc = BigInt::one();
    for i in 0..ds.len() {
        for j in i + 1..ds.len() {
            acc *= BigInt::from(ds[j] - ds[i]);
        }
    }
    Rational::from_integer(acc)
}

/// Closed form for the Wronskian of monomials `b_i · t^{r_i}`:
/// `V(r) · Π b_i · t^(Σr - C(n,2))`.
pub fn monomial_wronskian(rs: &[i64], bs: &[Rational]) -> Result<LaurentPoly, Error> {
    assert_eq!(rs.len(), bs.len());
    if has_repeat(rs) {
        return Err(Error::RepeatedExponent);
    }
    let n = rs.len() as i64;
    let exponent = rs.iter().sum::<i64>() - n * (n - 1) / 2;
    let mut coeff = vandermonde(rs);
    for b in bs {
        coeff *= b;
    }
    Ok(LaurentPoly::monomial(exponent, coeff))
}

/// Degree of the Wronskian for pairwise-distinct maximum degrees:
/// `Σ d_i - C(n,2)`.
pub fn predicted_degree_max(ds: &[i64]) -> Result<i64, Error> {
    predicted_degree(ds)
}

/// Minimum degree of the Wronskian for pairwise-distinct minimum degrees:
/// `Σ e_i - C(n,2)`.
pub fn predicted_degree_min(es: &[i64]) -> Result<i64, Error> {
    predicted_degree(es)
}

fn predicted_degree(ds: &[i64]) -> Result<i64, Error> {
    if has_repeat(ds) {
        return Err(Error::RepeatedExponent);
    }
    let n = ds.len() as i64;
    Ok(ds.iter().sum::<i64>() - n * (n - 1) / 2)
}

fn has_repeat(ds: &[i64]) -> bool {
    let mut sorted = ds.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).any(|w| w[0] == w[1])
}

/// `W(1, t, .., t^(n-1)) = 2! · 3! ⋯ (n-1)!` (empty product for n <= 2).
pub fn superfactorial(n: usize) -> Rational {
    let mut acc = Rational::one();
    for k in 2..n {
        acc *= factorial(k as u64);
    }
    acc
}

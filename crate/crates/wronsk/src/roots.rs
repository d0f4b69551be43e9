//! Exact real-root counting and rational-root search for polynomials in
//! ℚ[t]. Root counting uses a Sturm sequence on the square-free part, so
//! multiple roots are counted once; no floating point anywhere.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::laurent::LaurentPoly;
use crate::rational::{sign, Rational};

/// Number of distinct real roots of a nonzero polynomial, by a Sturm
/// sequence evaluated at -∞ and +∞.
pub fn count_real_roots(f: &LaurentPoly) -> usize {
    assert!(f.is_polynomial() && !f.is_zero());
    // Roots at the origin are stripped off with the t^m factor so the
    // square-free part keeps a nonzero constant term.
    let m = f.degree_min().unwrap();
    let stripped = f.mul_monomial(-m, &Rational::one());
    let origin = usize::from(m > 0);
    if stripped.is_constant() {
        return origin;
    }
    let sf = square_free_part(&stripped);
    let chain = sturm_chain(&sf);
    let at_minus = sign_variations(&chain, End::NegInfinity);
    let at_plus = sign_variations(&chain, End::PosInfinity);
    origin + (at_minus - at_plus)
}

/// All rational roots of a nonzero polynomial, distinct and sorted.
/// Candidates p/q are read off the primitive integer form: p divides the
/// trailing coefficient and q the leading one.
pub fn rational_roots(f: &LaurentPoly) -> Vec<Rational> {
    assert!(f.is_polynomial() && !f.is_zero());
    let m = f.degree_min().unwrap();
    let stripped = f.mul_monomial(-m, &Rational::one());
    let mut roots = Vec::new();
    if m > 0 {
        roots.push(Rational::zero());
    }
    if stripped.is_constant() {
        return roots;
    }
    let prim = primitive_integer_form(&stripped);
    let lead = prim.leading_coeff().unwrap().numer().abs();
    let trail = prim.trailing_coeff().unwrap().numer().abs();
    for p in divisors(&trail) {
        for q in divisors(&lead) {
            for candidate in [
                Rational::new(p.clone(), q.clone()),
                Rational::new(-p.clone(), q.clone()),
            ] {
                if !roots.contains(&candidate)
                    && stripped.eval(&candidate).unwrap().is_zero()
                {
                    roots.push(candidate);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// `f / gcd(f, f')`: same roots, all simple.
pub fn square_free_part(f: &LaurentPoly) -> LaurentPoly {
    let g = f.gcd(&f.derivative());
    if g.is_constant() {
        return f.clone();
    }
    f.div_exact(&g).expect("gcd divides exactly")
}

fn sturm_chain(f: &LaurentPoly) -> Vec<LaurentPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let last = &chain[chain.len() - 1];
        if last.is_zero() {
            chain.pop();
            break;
        }
        let prev = &chain[chain.len() - 2];
        let (_, r) = prev.div_rem(last);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

#[derive(Clone, Copy)]
enum End {
    NegInfinity,
    PosInfinity,
}

fn sign_variations(chain: &[LaurentPoly], end: End) -> usize {
    let mut last = 0;
    let mut variations = 0;
    for p in chain {
        if p.is_zero() {
            continue;
        }
        let lead = sign(p.leading_coeff().unwrap());
        let s = match end {
            End::PosInfinity => lead,
            End::NegInfinity => {
                if p.degree_max().unwrap() % 2 == 0 {
                    lead
                } else {
                    -lead
                }
            }
        };
        if last != 0 && s != last {
            variations += 1;
        }
        last = s;
    }
    variations
}

/// Scales a polynomial to integer coefficients with content 1.
fn primitive_integer_form(f: &LaurentPoly) -> LaurentPoly {
    let mut lcm = BigInt::one();
    for (_, c) in f.terms() {
        lcm = lcm.lcm(c.denom());
    }
    let scaled = f.scale(&Rational::from_integer(lcm));
    let mut content = BigInt::zero();
    for (_, c) in scaled.terms() {
        content = content.gcd(c.numer());
    }
    scaled.scale(&Rational::new(BigInt::one(), content))
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    assert!(!n.is_zero());
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    loop {
        let dd = &d * &d;
        if dd > n {
            break;
        }
        if (&n % &d).is_zero() {
            out.push(d.clone());
            if dd != n {
                out.push(&n / &d);
            }
        }
        d += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|&(e, c)| (e, rat_int(c))))
    }

    #[test]
    fn counts_simple_cases() {
        // 6t has the single root 0.
        assert_eq!(count_real_roots(&p(&[(1, 6)])), 1);
        // t^2 + 1 has none.
        assert_eq!(count_real_roots(&p(&[(2, 1), (0, 1)])), 0);
        // t^2 - 2 has two irrational roots.
        assert_eq!(count_real_roots(&p(&[(2, 1), (0, -2)])), 2);
        // (t - 1)^2 counts once.
        assert_eq!(count_real_roots(&p(&[(2, 1), (1, -2), (0, 1)])), 1);
        // constants have no roots
        assert_eq!(count_real_roots(&p(&[(0, 4)])), 0);
        // t^3 (triple root at the origin) counts once.
        assert_eq!(count_real_roots(&p(&[(3, 1)])), 1);
    }

    #[test]
    fn counts_constructed_products() {
        // (t-1)(t+2)(t-3/2) * (t^2+1)
        let f = [
            p(&[(1, 1), (0, -1)]),
            p(&[(1, 1), (0, 2)]),
            &p(&[(1, 2), (0, -3)]) * &LaurentPoly::one(),
            p(&[(2, 1), (0, 1)]),
        ]
        .iter()
        .fold(LaurentPoly::one(), |acc, g| &acc * g);
        assert_eq!(count_real_roots(&f), 3);
    }

    #[test]
    fn rational_root_search() {
        // 6t -> {0}
        assert_eq!(rational_roots(&p(&[(1, 6)])), vec![rat_int(0)]);
        // (2t - 3)(t + 1) = 2t^2 - t - 3
        let f = p(&[(2, 2), (1, -1), (0, -3)]);
        assert_eq!(rational_roots(&f), vec![rat_int(-1), rat(3, 2)]);
        // t^2 - 2 has no rational roots.
        assert!(rational_roots(&p(&[(2, 1), (0, -2)])).is_empty());
        // t^2(t - 1): roots 0 and 1, each once.
        let f = &p(&[(2, 1)]) * &p(&[(1, 1), (0, -1)]);
        assert_eq!(rational_roots(&f), vec![rat_int(0), rat_int(1)]);
    }

    #[test]
    fn square_free() {
        let f = &p(&[(1, 1), (0, -1)]).pow(3) * &p(&[(1, 1), (0, 2)]);
        let sf = square_free_part(&f);
        assert_eq!(sf.degree_max(), Some(2));
        assert!(sf.eval(&rat_int(1)).unwrap().is_zero());
        assert!(sf.eval(&rat_int(-2)).unwrap().is_zero());
    }
}

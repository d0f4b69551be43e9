//! Wronskian-preserving Gauss-like reductions.
//!
//! The max pass subtracts scaled pivots until the maximum degrees of the
//! family are pairwise distinct; the min pass does the same for minimum
//! degrees. Each subtraction replaces `f_j` by `f_j - c · f_pivot`, which
//! leaves the Wronskian and the span unchanged. The max pass pivots the
//! earliest index inside a tied degree class and reduces the later ones;
//! the min pass pivots the latest index and reduces the earlier ones, so
//! that adding functions of strictly smaller maximum degree never disturbs
//! a victim's maximum degree.

use std::collections::BTreeMap;

use crate::error::Error;
use crate::laurent::LaurentPoly;
use crate::matrix::QMatrix;
use crate::rational::sign;
use crate::wronskian::{classify, WronskianClass};

/// A reduced family together with the exact row transform that produced it:
/// `reduced = transform · original`. `det(transform) = ±1` and its sign is
/// reported so callers can reconcile Wronskian values exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionOutcome {
    pub reduced: Vec<LaurentPoly>,
    pub transform: QMatrix,
    pub sign: i32,
}

impl ReductionOutcome {
    pub fn max_degrees(&self) -> Vec<i64> {
        self.reduced.iter().map(|f| f.degree_max().unwrap()).collect()
    }

    pub fn min_degrees(&self) -> Vec<i64> {
        self.reduced.iter().map(|f| f.degree_min().unwrap()).collect()
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Pass {
    Max,
    Min,
}

/// Reduces the family until the maximum degrees are pairwise distinct.
pub fn reduce_distinct_max(fs: &[LaurentPoly]) -> Result<ReductionOutcome, Error> {
    let (reduced, transform) = eliminate(fs, Pass::Max)?;
    Ok(outcome(reduced, transform))
}

/// Reduces the family until the minimum degrees are pairwise distinct.
pub fn reduce_distinct_min(fs: &[LaurentPoly]) -> Result<ReductionOutcome, Error> {
    let (reduced, transform) = eliminate(fs, Pass::Min)?;
    Ok(outcome(reduced, transform))
}

/// Runs the max pass, rearranges the result by descending maximum degree,
/// and runs the min pass on the rearranged family. The min pass then never
/// touches a maximum degree, so the paired outcomes satisfy `d_i >= e_i`
/// positionally.
pub fn reduce_both(fs: &[LaurentPoly]) -> Result<(ReductionOutcome, ReductionOutcome), Error> {
    let (reduced, transform) = eliminate(fs, Pass::Max)?;

    let mut order: Vec<usize> = (0..reduced.len()).collect();
    order.sort_by_key(|&i| (-reduced[i].degree_max().unwrap(), i));
    let sorted: Vec<LaurentPoly> = order.iter().map(|&i| reduced[i].clone()).collect();
    let permuted_transform = transform.permute_rows(&order);

    let (min_reduced, min_ops) = eliminate(&sorted, Pass::Min)?;
    let min_transform = min_ops.matmul(&permuted_transform);

    Ok((
        outcome(sorted, permuted_transform),
        outcome(min_reduced, min_transform),
    ))
}

fn outcome(reduced: Vec<LaurentPoly>, transform: QMatrix) -> ReductionOutcome {
    let sign = sign(&transform.det());
    debug_assert!(sign != 0, "reduction transforms are nonsingular");
    ReductionOutcome {
        reduced,
        transform,
        sign,
    }
}

fn eliminate(fs: &[LaurentPoly], pass: Pass) -> Result<(Vec<LaurentPoly>, QMatrix), Error> {
    assert!(!fs.is_empty(), "cannot reduce an empty family");
    if fs.iter().any(LaurentPoly::is_zero) {
        return Err(Error::LinearlyDependent);
    }
    let n = fs.len();
    let mut qs = fs.to_vec();
    let mut transform = QMatrix::identity(n);

    loop {
        let mut classes: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (i, q) in qs.iter().enumerate() {
            let d = match pass {
                Pass::Max => q.degree_max().unwrap(),
                Pass::Min => q.degree_min().unwrap(),
            };
            classes.entry(d).or_default().push(i);
        }
        let tied = match pass {
            Pass::Max => classes.iter().rev().find(|(_, v)| v.len() > 1),
            Pass::Min => classes.iter().find(|(_, v)| v.len() > 1),
        };
        let indices = match tied {
            Some((_, v)) => v.clone(),
            None => break,
        };
        let (pivot, victims) = match pass {
            Pass::Max => (indices[0], indices[1..].to_vec()),
            Pass::Min => (
                indices[indices.len() - 1],
                indices[..indices.len() - 1].to_vec(),
            ),
        };
        for v in victims {
            if qs[pivot].is_constant() && qs[v].is_constant() {
                return Err(Error::TwoConstants);
            }
            let c = match pass {
                Pass::Max => qs[v].leading_coeff().unwrap() / qs[pivot].leading_coeff().unwrap(),
                Pass::Min => qs[v].trailing_coeff().unwrap() / qs[pivot].trailing_coeff().unwrap(),
            };
            qs[v] = &qs[v] - &qs[pivot].scale(&c);
            transform.row_sub_scaled(v, pivot, &c);
            if qs[v].is_zero() {
                return Err(Error::LinearlyDependent);
            }
        }
    }
    Ok((qs, transform))
}

/// For a family with a nonzero constant Wronskian, the distinct exponents
/// `d_1..d_n` (in construction order, descending) such that `{t^(d_i)}`
/// spans the same space as the family. Verified by checking that every
/// input is supported exactly on those exponents.
pub fn monomial_basis(fs: &[LaurentPoly]) -> Result<Vec<i64>, Error> {
    let class = classify(fs);
    monomial_basis_classified(fs, &class)
}

pub(crate) fn monomial_basis_classified(
    fs: &[LaurentPoly],
    class: &WronskianClass,
) -> Result<Vec<i64>, Error> {
    if !class.is_nonzero_constant() {
        return Err(Error::NotConstantWronskian(class.clone()));
    }
    let (max_outcome, _) = reduce_both(fs)?;
    let basis = max_outcome.max_degrees();
    for f in fs {
        if f.terms().any(|(e, _)| !basis.contains(&e)) {
            return Err(Error::BasisExpressionFailed);
        }
    }
    Ok(basis)
}

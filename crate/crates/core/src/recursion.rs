//! Weight recurrences read off the reduced minimal polynomial, initial
//! conditions, propagation and brute-force verification.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::boolfn::{has_short_orbit, weight, Budget, Interpretation, RSFunctionSpec, WeightSequence};
use crate::error::{Error, Result};
use crate::linalg::BigPoly;

/// `w_n = sum_{i=1}^{D} c_i w_{n-i}`, asserted from `valid_from` on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecursionSpec {
    #[serde(with = "crate::decimal::vec")]
    pub coefficients: Vec<BigInt>,
    pub valid_from: u32,
}

impl RecursionSpec {
    /// Reads `q = x^D + a_{D-1} x^{D-1} + ... + a_0` as `c_i = -a_{D-i}`.
    /// `first_n` is the index of the first initial condition; the
    /// recurrence is asserted from `first_n + D`.
    pub fn from_polynomial(q: &BigPoly, first_n: u32) -> Result<Self> {
        let d = q
            .degree()
            .ok_or_else(|| Error::Polynomial("zero polynomial has no recursion".into()))?;
        if !q.is_monic() {
            return Err(Error::Polynomial(format!("{q} is not monic")));
        }
        if d == 0 || q.coeff(0).is_zero() {
            return Err(Error::Polynomial(format!("{q} must have a nonzero constant term")));
        }
        let coefficients = (1..=d).map(|i| -q.coeff(d - i)).collect();
        Ok(RecursionSpec { coefficients, valid_from: first_n + d as u32 })
    }

    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// The monic polynomial this recursion came from.
    pub fn polynomial(&self) -> BigPoly {
        let d = self.order();
        let mut c: Vec<BigInt> = (0..d).map(|k| -&self.coefficients[d - 1 - k]).collect();
        c.push(BigInt::one());
        BigPoly::new(c)
    }

    /// `sum c_i w_{n-i}` given the `D` preceding values, oldest first.
    fn next(&self, window: &[BigInt]) -> BigInt {
        let d = self.order();
        debug_assert_eq!(window.len(), d);
        self.coefficients
            .iter()
            .enumerate()
            .map(|(i, c)| c * &window[d - 1 - i])
            .sum()
    }
}

/// First index at which a spec's weights are brute-forced as initial
/// conditions: one past the largest top index.
pub fn first_initial_n(spec: &RSFunctionSpec) -> u32 {
    spec.max_top() + 1
}

/// The first `D` weights from `max top + 1` on, by enumeration.
pub fn initial_conditions(
    spec: &RSFunctionSpec,
    rec: &RecursionSpec,
    interpretation: Interpretation,
    budget: Budget,
) -> Result<WeightSequence> {
    let start = first_initial_n(spec);
    let d = rec.order() as u32;
    let needed = start + d - 1;
    if needed > budget.max_n {
        return Err(Error::InitialConditionsInfeasible {
            order: rec.order(),
            needed,
            budget: budget.max_n,
        });
    }
    let values = (start..=needed)
        .into_par_iter()
        .map(|n| weight(spec, n, interpretation, budget).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    WeightSequence::new(start, values)
}

/// Extends `initial` (exactly `D` values) to `count` values.
pub fn propagate(rec: &RecursionSpec, initial: &WeightSequence, count: usize) -> Result<WeightSequence> {
    let d = rec.order();
    if initial.len() != d {
        return Err(Error::Dimension(format!(
            "need {d} initial values, got {}",
            initial.len()
        )));
    }
    let mut values = initial.values.clone();
    while values.len() < count {
        let next = rec.next(&values[values.len() - d..]);
        values.push(next);
    }
    values.truncate(count);
    WeightSequence::new(initial.start_n, values)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Residual {
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n_lo: u32,
    pub n_hi: u32,
    pub interpretation: Interpretation,
    pub weights: WeightSequence,
    /// `w_n - sum c_i w_{n-i}` for every `n` with a full window.
    pub residuals: Vec<Residual>,
    pub nonzero: Vec<u32>,
    /// Earliest `n` from which every checked residual vanishes.
    pub holds_from: Option<u32>,
    pub valid_from: u32,
    /// Whether every residual at or after `valid_from` vanishes.
    pub holds_from_valid_from: bool,
    /// Values of `n` at which some generator has a short orbit.
    pub short_n: Vec<u32>,
}

pub fn verify_recursion(
    spec: &RSFunctionSpec,
    rec: &RecursionSpec,
    n_lo: u32,
    n_hi: u32,
    interpretation: Interpretation,
    budget: Budget,
) -> Result<VerificationReport> {
    budget.check(n_hi)?;
    if n_lo < spec.max_top() || n_hi < n_lo {
        return Err(Error::Dimension(format!(
            "verification range {n_lo}..={n_hi} must start at or above {}",
            spec.max_top()
        )));
    }
    let values = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| weight(spec, n, interpretation, budget).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    let weights = WeightSequence::new(n_lo, values)?;
    let d = rec.order();
    let residuals: Vec<Residual> = (d..weights.len())
        .map(|i| Residual {
            n: n_lo + i as u32,
            value: &weights.values[i] - rec.next(&weights.values[i - d..i]),
        })
        .collect();
    let nonzero: Vec<u32> = residuals.iter().filter(|r| !r.value.is_zero()).map(|r| r.n).collect();
    let holds_from = match nonzero.last() {
        None => residuals.first().map(|r| r.n),
        Some(&last) if last < n_hi => Some(last + 1),
        Some(_) => None,
    };
    let holds_from_valid_from = nonzero.iter().all(|&n| n < rec.valid_from);
    let short_n = (n_lo..=n_hi)
        .map(|n| has_short_orbit(spec, n).map(|s| (n, s)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter_map(|(n, s)| s.then_some(n))
        .collect();
    Ok(VerificationReport {
        n_lo,
        n_hi,
        interpretation,
        weights,
        residuals,
        nonzero,
        holds_from,
        valid_from: rec.valid_from,
        holds_from_valid_from,
        short_n,
    })
}

/// How a displayed weight was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMethod {
    Brute,
    Propagated,
    ShortReplaced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaggedWeight {
    pub n: u32,
    #[serde(with = "crate::decimal")]
    pub value: BigInt,
    pub method: WeightMethod,
}

/// Weights as the reference pipeline displays them: initial conditions
/// are enumerated with every rotated copy counted (the sequence the
/// recursion tracks), the rest is propagated, and positions where a
/// generator's orbit is short are then recomputed under `interpretation`.
pub fn display_weights(
    spec: &RSFunctionSpec,
    rec: &RecursionSpec,
    count: usize,
    interpretation: Interpretation,
    budget: Budget,
) -> Result<Vec<TaggedWeight>> {
    let start = first_initial_n(spec);
    let d = rec.order();
    let mut out: Vec<TaggedWeight> = if count <= d {
        let end = start + count as u32;
        budget.check(end.saturating_sub(1))?;
        (start..end)
            .map(|n| {
                weight(spec, n, Interpretation::FullSum, budget).map(|w| TaggedWeight {
                    n,
                    value: BigInt::from(w),
                    method: WeightMethod::Brute,
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else {
        let initial = initial_conditions(spec, rec, Interpretation::FullSum, budget)?;
        let all = propagate(rec, &initial, count)?;
        all.values
            .into_iter()
            .enumerate()
            .map(|(i, value)| TaggedWeight {
                n: start + i as u32,
                value,
                method: if i < d { WeightMethod::Brute } else { WeightMethod::Propagated },
            })
            .collect()
    };
    for tw in &mut out {
        if !has_short_orbit(spec, tw.n)? {
            continue;
        }
        let brute_same = tw.method == WeightMethod::Brute && interpretation == Interpretation::FullSum;
        if brute_same || tw.n > budget.max_n {
            continue;
        }
        tw.value = BigInt::from(weight(spec, tw.n, interpretation, budget)?);
        tw.method = WeightMethod::ShortReplaced;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn coefficient_convention() {
        let q = BigPoly::from_i64(&[-4, -2, 2, 2, 1]);
        let r = RecursionSpec::from_polynomial(&q, 4).unwrap();
        assert_eq!(r.coefficients, big(&[-2, -2, 2, 4]));
        assert_eq!(r.valid_from, 8);
        assert_eq!(r.polynomial(), q);
        let q = BigPoly::from_i64(&[-8, 4, 4, 2, -2, -2, 1]);
        let r = RecursionSpec::from_polynomial(&q, 7).unwrap();
        assert_eq!(r.coefficients, big(&[2, 2, -2, -4, -4, 8]));
        let r = RecursionSpec::from_polynomial(&BigPoly::from_i64(&[-2, 1]), 2).unwrap();
        assert_eq!(r.coefficients, big(&[2]));
    }

    #[test]
    fn rejects_bad_polynomials() {
        assert!(RecursionSpec::from_polynomial(&BigPoly::from_i64(&[-2, 2]), 1).is_err());
        assert!(RecursionSpec::from_polynomial(&BigPoly::from_i64(&[0, 1]), 1).is_err());
        assert!(RecursionSpec::from_polynomial(&BigPoly::zero(), 1).is_err());
        assert!(RecursionSpec::from_polynomial(&BigPoly::one(), 1).is_err());
    }

    #[test]
    fn doubling() {
        let r = RecursionSpec::from_polynomial(&BigPoly::from_i64(&[-2, 1]), 1).unwrap();
        let init = WeightSequence::new(1, big(&[1])).unwrap();
        let seq = propagate(&r, &init, 5).unwrap();
        assert_eq!(seq.values, big(&[1, 2, 4, 8, 16]));
        assert!(propagate(&r, &WeightSequence::new(1, big(&[1, 2])).unwrap(), 5).is_err());
    }

    #[test]
    fn infeasible_initial_conditions() {
        let spec = RSFunctionSpec::from_indices(&[&[1, 3, 11]]).unwrap();
        let rec = RecursionSpec { coefficients: vec![BigInt::one(); 145], valid_from: 157 };
        let err = initial_conditions(&spec, &rec, Interpretation::OrbitDistinct, Budget::default()).unwrap_err();
        assert_eq!(err, Error::InitialConditionsInfeasible { order: 145, needed: 156, budget: 28 });
    }

    #[test]
    fn verify_linear() {
        let spec = RSFunctionSpec::from_indices(&[&[1]]).unwrap();
        let rec = RecursionSpec::from_polynomial(&BigPoly::from_i64(&[-2, 1]), 2).unwrap();
        let rep = verify_recursion(&spec, &rec, 1, 20, Interpretation::OrbitDistinct, Budget::default()).unwrap();
        assert!(rep.nonzero.is_empty());
        assert_eq!(rep.holds_from, Some(2));
        assert!(rep.holds_from_valid_from);
    }
}

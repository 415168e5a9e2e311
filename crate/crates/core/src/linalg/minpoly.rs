use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::dependence::DependenceFinder;
use super::modp::{primes, Crt, ModMatrix};
use super::{BigPoly, SparseIntMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MinPolyMethod {
    /// Picks by dimension: dense up to 64, modular above.
    #[default]
    Auto,
    /// First linear dependence among the flattened powers `I, A, A^2, ...`.
    #[serde(rename = "dense")]
    DenseDependence,
    /// Least common multiple of minimal polynomials relative to random vectors.
    VectorLcm,
    /// Multi-modular candidates combined by Chinese remaindering.
    Modular,
}

impl MinPolyMethod {
    pub fn resolve(self, dim: usize) -> MinPolyMethod {
        match self {
            MinPolyMethod::Auto if dim <= 64 => MinPolyMethod::DenseDependence,
            MinPolyMethod::Auto => MinPolyMethod::Modular,
            m => m,
        }
    }
}

impl fmt::Display for MinPolyMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            MinPolyMethod::Auto => "auto",
            MinPolyMethod::DenseDependence => "dense",
            MinPolyMethod::VectorLcm => "vector-lcm",
            MinPolyMethod::Modular => "modular",
        })
    }
}

impl FromStr for MinPolyMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(MinPolyMethod::Auto),
            "dense" | "dense-dependence" => Ok(MinPolyMethod::DenseDependence),
            "vector-lcm" => Ok(MinPolyMethod::VectorLcm),
            "modular" => Ok(MinPolyMethod::Modular),
            _ => Err(Error::Parse(format!("unknown minimal polynomial method {s:?}"))),
        }
    }
}

const MAX_RANDOM_VECTORS: usize = 64;
const MAX_PRIMES: usize = 512;

/// Monic minimal polynomial of `a`. Whatever the method, the result is
/// checked to annihilate `a` exactly before it is returned.
pub fn minimal_polynomial(a: &SparseIntMatrix, method: MinPolyMethod, seed: u64) -> Result<BigPoly> {
    if a.dim() == 0 {
        return Ok(BigPoly::one());
    }
    let p = match method.resolve(a.dim()) {
        MinPolyMethod::DenseDependence => dense_dependence(a)?,
        MinPolyMethod::VectorLcm => vector_lcm(a, seed)?,
        MinPolyMethod::Modular => modular(a, seed)?,
        MinPolyMethod::Auto => unreachable!("resolved above"),
    };
    if !p.is_monic() || !annihilates(&p, a) {
        return Err(Error::MinPoly(format!("candidate {p} failed exact verification")));
    }
    Ok(p)
}

fn monic_from_dependence(dep: Vec<BigInt>) -> Result<BigPoly> {
    let p = BigPoly::new(dep);
    if !p.is_monic() {
        // a monic divisor of an integer minimal polynomial has integer
        // coefficients, so a primitive dependence must end in 1
        return Err(Error::MinPoly(format!("dependence {p} is not monic")));
    }
    Ok(p)
}

fn dense_dependence(a: &SparseIntMatrix) -> Result<BigPoly> {
    let dim = a.dim();
    let mut finder = DependenceFinder::new(dim * dim);
    let mut power: Vec<Vec<BigInt>> = (0..dim)
        .map(|c| {
            let mut col = vec![BigInt::zero(); dim];
            col[c] = BigInt::one();
            col
        })
        .collect();
    loop {
        let flat: Vec<BigInt> = power.iter().flatten().cloned().collect();
        if let Some(dep) = finder.push(flat) {
            return monic_from_dependence(dep);
        }
        if finder.count() > dim + 1 {
            return Err(Error::MinPoly("no dependence among dim + 1 powers".into()));
        }
        power = power.iter().map(|col| a.mul_vec(col)).collect();
    }
}

fn random_vector(rng: &mut ChaCha8Rng, dim: usize) -> Vec<BigInt> {
    (0..dim).map(|_| BigInt::from(rng.gen_range(-(1i64 << 15)..=(1i64 << 15)))).collect()
}

/// Minimal polynomial of `a` relative to `u`, exactly.
fn krylov_exact(a: &SparseIntMatrix, u: Vec<BigInt>) -> Result<BigPoly> {
    let mut finder = DependenceFinder::new(a.dim());
    let mut v = u;
    loop {
        let next = a.mul_vec(&v);
        if let Some(dep) = finder.push(v) {
            return monic_from_dependence(dep);
        }
        if finder.count() > a.dim() + 1 {
            return Err(Error::MinPoly("Krylov sequence never became dependent".into()));
        }
        v = next;
    }
}

fn vector_lcm(a: &SparseIntMatrix, seed: u64) -> Result<BigPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cand = krylov_exact(a, random_vector(&mut rng, a.dim()))?;
    for _ in 0..MAX_RANDOM_VECTORS {
        let u = random_vector(&mut rng, a.dim());
        if apply_poly(&cand, a, &u).iter().all(Zero::is_zero) {
            if annihilates(&cand, a) {
                return Ok(cand);
            }
            continue;
        }
        let m = krylov_exact(a, u)?;
        cand = cand.lcm_monic(&m)?;
    }
    Err(Error::MinPoly("vector-lcm did not converge".into()))
}

fn modular(a: &SparseIntMatrix, seed: u64) -> Result<BigPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut crt: Option<Crt> = None;
    let mut last: Option<Vec<BigInt>> = None;
    let mut rejected: Option<Vec<BigInt>> = None;
    for p in primes().take(MAX_PRIMES) {
        let q = ModMatrix::new(a, p).minpoly(&mut rng, 2);
        match crt.as_mut() {
            Some(c) if q.len() < c.len() => continue,
            Some(c) if q.len() == c.len() => c.add(&q, p),
            _ => {
                crt = Some(Crt::new(&q, p));
                last = None;
                continue;
            }
        }
        let sym = crt.as_ref().expect("initialized").symmetric();
        if last.as_ref() == Some(&sym) && rejected.as_ref() != Some(&sym) {
            let cand = BigPoly::new(sym.clone());
            if cand.is_monic() && annihilates(&cand, a) {
                return Ok(cand);
            }
            rejected = Some(sym.clone());
        }
        last = Some(sym);
    }
    Err(Error::MinPoly("modular reconstruction did not stabilize".into()))
}

/// `p(A) u`, exactly, by Horner.
pub fn apply_poly(p: &BigPoly, a: &SparseIntMatrix, u: &[BigInt]) -> Vec<BigInt> {
    let mut acc = vec![BigInt::zero(); a.dim()];
    for c in p.coeffs().iter().rev() {
        acc = a.mul_vec(&acc);
        if !c.is_zero() {
            for (x, y) in acc.iter_mut().zip(u) {
                *x += c * y;
            }
        }
    }
    acc
}

/// Column `i` of `p(A)`, using in-place big-integer updates.
fn poly_column(p: &BigPoly, cols: &[Vec<(usize, i64)>], i: usize) -> Vec<BigInt> {
    let dim = cols.len();
    let mut acc = vec![BigInt::zero(); dim];
    let mut tmp = vec![BigInt::zero(); dim];
    let mut first = true;
    for c in p.coeffs().iter().rev() {
        if !first {
            tmp.iter_mut().for_each(Zero::set_zero);
            for (col, x) in acc.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for &(r, v) in &cols[col] {
                    match v {
                        1 => tmp[r] += x,
                        -1 => tmp[r] -= x,
                        2 => {
                            tmp[r] += x;
                            tmp[r] += x;
                        }
                        _ => tmp[r] += x * v,
                    }
                }
            }
            std::mem::swap(&mut acc, &mut tmp);
        }
        first = false;
        acc[i] += c;
    }
    acc
}

/// Whether `p(A) = 0`, evaluated exactly column by column.
pub fn annihilates(p: &BigPoly, a: &SparseIntMatrix) -> bool {
    if p.is_zero() {
        return true;
    }
    match a.small_columns() {
        Some(cols) => (0..a.dim())
            .into_par_iter()
            .all(|i| poly_column(p, &cols, i).iter().all(Zero::is_zero)),
        None => evaluate_poly_at_matrix(p, a).is_zero(),
    }
}

/// `sum p_i A^i`, exactly.
pub fn evaluate_poly_at_matrix(p: &BigPoly, a: &SparseIntMatrix) -> SparseIntMatrix {
    let dim = a.dim();
    let cols: Vec<Vec<(usize, BigInt)>> = match a.small_columns() {
        Some(small) => (0..dim)
            .into_par_iter()
            .map(|i| sparse(poly_column(p, &small, i)))
            .collect(),
        None => (0..dim)
            .into_par_iter()
            .map(|i| {
                let mut e = vec![BigInt::zero(); dim];
                e[i] = BigInt::one();
                sparse(apply_poly(p, a, &e))
            })
            .collect(),
    };
    SparseIntMatrix::from_columns(dim, cols)
}

fn sparse(v: Vec<BigInt>) -> Vec<(usize, BigInt)> {
    v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()
}

//! Word-size prime field arithmetic and minimal polynomials modulo a prime.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;

use super::SparseIntMatrix;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

#[inline]
fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `2^62`, descending.
pub fn primes() -> impl Iterator<Item = u64> {
    let mut c = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_prime(c) {
            c -= 2;
        }
        let p = c;
        c -= 2;
        Some(p)
    })
}

pub fn reduce(x: &BigInt, p: u64) -> u64 {
    let m = BigInt::from(p);
    let r = ((x % &m) + &m) % &m;
    r.to_u64().expect("residue fits")
}

/// Matrix reduced modulo `p`, stored by columns.
pub struct ModMatrix {
    pub p: u64,
    dim: usize,
    cols: Vec<Vec<(usize, u64)>>,
}

impl ModMatrix {
    pub fn new(a: &SparseIntMatrix, p: u64) -> Self {
        let cols = (0..a.dim())
            .map(|c| {
                a.column(c)
                    .iter()
                    .map(|(r, v)| (*r, reduce(v, p)))
                    .filter(|(_, v)| *v != 0)
                    .collect()
            })
            .collect();
        ModMatrix { p, dim: a.dim(), cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_vec_into(&self, x: &[u64], y: &mut [u64]) {
        y.iter_mut().for_each(|v| *v = 0);
        for (c, &xc) in x.iter().enumerate() {
            if xc == 0 {
                continue;
            }
            for &(r, a) in &self.cols[c] {
                y[r] = add_mod(y[r], mul_mod(a, xc, self.p), self.p);
            }
        }
    }

    /// `q(A) v`, by Horner.
    pub fn poly_apply(&self, q: &[u64], v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut acc = vec![0u64; self.dim];
        let mut tmp = vec![0u64; self.dim];
        for &c in q.iter().rev() {
            self.mul_vec_into(&acc, &mut tmp);
            std::mem::swap(&mut acc, &mut tmp);
            if c != 0 {
                for (a, &x) in acc.iter_mut().zip(v) {
                    *a = add_mod(*a, mul_mod(c, x, p), p);
                }
            }
        }
        acc
    }

    pub fn random_vector<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        (0..self.dim).map(|_| rng.gen_range(0..self.p)).collect()
    }

    /// Monic minimal polynomial of `A` relative to `v` (ascending).
    pub fn krylov_minpoly(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut pivots: Vec<usize> = Vec::new();
        let mut rows: Vec<Vec<u64>> = Vec::new();
        let mut combs: Vec<Vec<u64>> = Vec::new();
        let mut current = v.to_vec();
        let mut next = vec![0u64; self.dim];
        for k in 0..=self.dim {
            let mut w = current.clone();
            let mut comb = vec![0u64; k + 1];
            comb[k] = 1;
            for ((&piv, row), rc) in pivots.iter().zip(&rows).zip(&combs) {
                let f = w[piv];
                if f == 0 {
                    continue;
                }
                for (x, &r) in w.iter_mut().zip(row) {
                    if r != 0 {
                        *x = sub_mod(*x, mul_mod(f, r, p), p);
                    }
                }
                for (x, &r) in comb.iter_mut().zip(rc) {
                    if r != 0 {
                        *x = sub_mod(*x, mul_mod(f, r, p), p);
                    }
                }
            }
            match w.iter().position(|&x| x != 0) {
                None => return comb,
                Some(piv) => {
                    let inv = inv_mod(w[piv], p);
                    w.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
                    comb.iter_mut().for_each(|x| *x = mul_mod(*x, inv, p));
                    pivots.push(piv);
                    rows.push(w);
                    combs.push(comb);
                }
            }
            self.mul_vec_into(&current, &mut next);
            std::mem::swap(&mut current, &mut next);
        }
        unreachable!("Krylov sequence must become dependent within dim + 1 steps")
    }

    /// Minimal polynomial of `A` modulo `p`: least common multiple of
    /// Krylov minimal polynomials until `checks` consecutive random vectors
    /// are annihilated. Always a divisor of the true minimal polynomial mod p.
    pub fn minpoly<R: Rng>(&self, rng: &mut R, checks: usize) -> Vec<u64> {
        let v = self.random_vector(rng);
        let mut q = self.krylov_minpoly(&v);
        let mut passed = 0;
        while passed < checks {
            let w = self.random_vector(rng);
            if self.poly_apply(&q, &w).iter().all(|&x| x == 0) {
                passed += 1;
            } else {
                passed = 0;
                let m = self.krylov_minpoly(&w);
                q = lcm_mod(&q, &m, self.p);
            }
        }
        q
    }
}

fn trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn make_monic(a: Vec<u64>, p: u64) -> Vec<u64> {
    let a = trim(a);
    match a.last() {
        Some(&l) if l != 1 => {
            let inv = inv_mod(l, p);
            a.into_iter().map(|x| mul_mod(x, inv, p)).collect()
        }
        _ => a,
    }
}

/// Quotient and remainder of `a / b` over `F_p`.
pub fn div_rem_mod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by zero polynomial");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mul_mod(r[k + db], inv, p);
        if c == 0 {
            continue;
        }
        q[k] = c;
        for (i, &bc) in b.iter().enumerate() {
            r[k + i] = sub_mod(r[k + i], mul_mod(c, bc, p), p);
        }
    }
    (trim(q), trim(r))
}

pub fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    make_monic(a, p)
}

pub fn mul_poly_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut c = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            c[i + j] = add_mod(c[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(c)
}

pub fn lcm_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let g = gcd_mod(a, b, p);
    let (q, r) = div_rem_mod(a, &g, p);
    debug_assert!(r.is_empty());
    make_monic(mul_poly_mod(&q, b, p), p)
}

/// Incremental Chinese remaindering of a coefficient vector, with
/// reconstruction into the symmetric range.
pub struct Crt {
    modulus: BigUint,
    residues: Vec<BigUint>,
}

impl Crt {
    pub fn new(first: &[u64], p: u64) -> Self {
        Crt {
            modulus: BigUint::from(p),
            residues: first.iter().map(|&x| BigUint::from(x)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.residues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn add(&mut self, values: &[u64], p: u64) {
        assert_eq!(values.len(), self.residues.len());
        let m_mod_p = (&self.modulus % p).to_u64().expect("fits");
        let inv = inv_mod(m_mod_p, p);
        for (x, &r) in self.residues.iter_mut().zip(values) {
            let x_mod_p = (&*x % p).to_u64().expect("fits");
            let t = mul_mod(sub_mod(r, x_mod_p, p), inv, p);
            *x += &self.modulus * t;
        }
        self.modulus *= p;
    }

    pub fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1;
        let m = BigInt::from(self.modulus.clone());
        self.residues
            .iter()
            .map(|x| {
                let xi = BigInt::from(x.clone());
                if *x > half {
                    xi - &m
                } else {
                    xi
                }
            })
            .collect()
    }

    pub fn modulus_bits(&self) -> u64 {
        self.modulus.bits()
    }
}

pub fn abs_max_bits(v: &[BigInt]) -> u64 {
    v.iter().map(|x| x.abs().bits()).max().unwrap_or(0)
}

#[allow(dead_code)]
pub(crate) fn is_zero_vec(v: &[BigInt]) -> bool {
    v.iter().all(Zero::is_zero)
}

//! Independent oracles: everything here works straight from the
//! definitions, one input row at a time.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rotsym::boolfn::{Interpretation, RSFunctionSpec, TruthTable};

/// `x_i` at row `j` of an `n`-variable table, most significant bit first.
pub fn var(j: u64, i: u32, n: u32) -> bool {
    (j >> (n - i)) & 1 == 1
}

pub fn monomial_bits(indices: &[u32], n: u32) -> Vec<bool> {
    (0..1u64 << n).map(|j| indices.iter().all(|&i| var(j, i, n))).collect()
}

pub fn table_bits(t: &TruthTable) -> Vec<bool> {
    (0..t.len()).map(|j| t.get(j)).collect()
}

/// Index set of a generator shifted by `k` positions, wrapped mod `n`.
pub fn rotated(indices: &[u32], k: u32, n: u32) -> Vec<u32> {
    let mut v: Vec<u32> = indices.iter().map(|&i| (i - 1 + k) % n + 1).collect();
    v.sort_unstable();
    v
}

pub fn eval_spec(spec: &RSFunctionSpec, n: u32, interp: Interpretation, j: u64) -> bool {
    let mut acc = false;
    for g in spec.generators() {
        let idx = g.indices();
        match interp {
            Interpretation::FullSum => {
                for k in 0..n {
                    acc ^= rotated(idx, k, n).iter().all(|&i| var(j, i, n));
                }
            }
            Interpretation::OrbitDistinct => {
                let orbit: BTreeSet<Vec<u32>> = (0..n).map(|k| rotated(idx, k, n)).collect();
                for m in orbit {
                    acc ^= m.iter().all(|&i| var(j, i, n));
                }
            }
        }
    }
    acc
}

pub fn brute_weight(spec: &RSFunctionSpec, n: u32, interp: Interpretation) -> u64 {
    // Each generator's monomial list, expanded once.
    let mut monos: Vec<Vec<u32>> = Vec::new();
    for g in spec.generators() {
        let idx = g.indices();
        match interp {
            Interpretation::FullSum => monos.extend((0..n).map(|k| rotated(idx, k, n))),
            Interpretation::OrbitDistinct => {
                let orbit: BTreeSet<Vec<u32>> = (0..n).map(|k| rotated(idx, k, n)).collect();
                monos.extend(orbit);
            }
        }
    }
    let masks: Vec<u64> = monos
        .iter()
        .map(|m| m.iter().fold(0u64, |acc, &i| acc | 1 << (n - i)))
        .collect();
    (0..1u64 << n)
        .filter(|&j| masks.iter().filter(|&&m| j & m == m).count() % 2 == 1)
        .count() as u64
}

/// The level-`v` mask over `n` variables, straight from its definition:
/// the last of `2^(top - v + 1)` portions of the monomial's table, each
/// entry repeated `2^(top - v)` times.
pub fn mu_oracle(indices: &[u32], v: u32, n: u32) -> Vec<bool> {
    let top = *indices.last().unwrap();
    let t = monomial_bits(indices, n);
    let parts = 1usize << (top - v + 1);
    let size = t.len() / parts;
    let stretch = 1usize << (top - v);
    t[t.len() - size..]
        .iter()
        .flat_map(|&b| std::iter::repeat_n(b, stretch))
        .collect()
}

/// All strictly increasing index lists starting at 1 with top at most `max_top`.
pub fn patterns_from_one(max_top: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    for mask in 0u32..1 << (max_top - 1) {
        let mut v = vec![1];
        v.extend((2..=max_top).filter(|&i| mask >> (i - 2) & 1 == 1));
        out.push(v);
    }
    out
}

/// The acceptance battery of specs.
pub const BATTERY: &[&str] = &["1,2,4", "1,3,5", "1,2;1,3", "1,2,3,4", "1,2,5;1", "1,4;1,2,3"];

/// Rank of integer rows modulo a prime, by plain elimination.
pub fn rank_mod_p(rows: &[Vec<i128>], p: i128) -> usize {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.rem_euclid(p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = pow_mod(m[rank][c], p - 2, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c] * inv % p;
                let pivot = m[rank].clone();
                for (x, y) in m[r][c..].iter_mut().zip(&pivot[c..]) {
                    *x = (*x - f * y).rem_euclid(p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn pow_mod(mut a: i128, mut e: i128, p: i128) -> i128 {
    let mut r = 1;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

struct Row {
    pivot: usize,
    values: Vec<BigInt>,
    combination: Vec<BigInt>,
}

/// Incremental fraction-free elimination that reports the first vector
/// lying in the rational span of its predecessors.
///
/// Every stored row is zero at the pivots of earlier rows, so a new vector
/// is reduced by a single pass over the rows in insertion order.
pub struct DependenceFinder {
    len: usize,
    count: usize,
    rows: Vec<Row>,
}

impl DependenceFinder {
    pub fn new(len: usize) -> Self {
        DependenceFinder { len, count: 0, rows: Vec::new() }
    }

    /// Number of vectors pushed so far.
    pub fn count(&self) -> usize {
        self.count
    }

    /// Appends `v`. Returns the dependence `c` with `sum c_i v_i = 0` over
    /// the vectors pushed so far (including `v`), as a primitive integer
    /// vector whose last entry is positive, when `v` is dependent.
    pub fn push(&mut self, v: Vec<BigInt>) -> Option<Vec<BigInt>> {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let index = self.count;
        self.count += 1;
        let mut w = v;
        let mut comb = vec![BigInt::zero(); index + 1];
        comb[index] = BigInt::one();
        for row in &self.rows {
            let f = w[row.pivot].clone();
            if f.is_zero() {
                continue;
            }
            let p = &row.values[row.pivot];
            for (x, r) in w.iter_mut().zip(&row.values) {
                if !r.is_zero() {
                    *x = &*x * p - &f * r;
                } else if !x.is_zero() {
                    *x *= p;
                }
            }
            for (i, x) in comb.iter_mut().enumerate() {
                let r = row.combination.get(i);
                match r {
                    Some(r) if !r.is_zero() => *x = &*x * p - &f * r,
                    _ => *x *= p,
                }
            }
            remove_content(&mut w, &mut comb);
        }
        match w.iter().position(|x| !x.is_zero()) {
            Some(pivot) => {
                self.rows.push(Row { pivot, values: w, combination: comb });
                None
            }
            None => {
                let g = comb.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
                let sign_fix = comb.last().is_some_and(Signed::is_negative);
                for c in &mut comb {
                    *c /= &g;
                    if sign_fix {
                        *c = -&*c;
                    }
                }
                Some(comb)
            }
        }
    }
}

fn remove_content(w: &mut [BigInt], comb: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in w.iter().chain(comb.iter()) {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in w.iter_mut().chain(comb.iter_mut()) {
        *x /= &g;
    }
}

/// Shortest prefix of `vectors` with a nontrivial rational dependence.
pub fn first_dependence(vectors: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let len = vectors.first()?.len();
    let mut finder = DependenceFinder::new(len);
    vectors.iter().find_map(|v| finder.push(v.clone()))
}

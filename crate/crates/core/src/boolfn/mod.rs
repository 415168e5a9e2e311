//! Monomials, rotation orbits, truth tables and weights of rotation
//! symmetric Boolean functions.

mod pattern;
mod runs;
mod table;
mod weight;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use pattern::{MonomialPattern, RSFunctionSpec};
pub use runs::Runs;
pub use table::TruthTable;
pub use weight::{weight, weight_chunked, weight_sequence, Budget, WeightSequence, DEFAULT_CHUNK_LOG2};

pub(crate) use runs::{ones_pow, zeros_pow};

use crate::error::{Error, Result};

/// How the function is read at "short" `n`, where a generator's rotation
/// orbit has fewer than `n` members.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Interpretation {
    /// XOR over the distinct monomials of every orbit.
    #[default]
    OrbitDistinct,
    /// XOR over all `n` rotated copies of every generator, reduced mod 2.
    FullSum,
}

impl fmt::Display for Interpretation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Interpretation::OrbitDistinct => "orbit-distinct",
            Interpretation::FullSum => "full-sum",
        })
    }
}

impl FromStr for Interpretation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "orbit-distinct" => Ok(Interpretation::OrbitDistinct),
            "full-sum" => Ok(Interpretation::FullSum),
            _ => Err(Error::Parse(format!("unknown interpretation {s:?}"))),
        }
    }
}

/// Value of the monomial at row `j` of the `n`-variable truth table.
pub fn eval_monomial_at(pattern: &MonomialPattern, n: u32, j: u64) -> Result<bool> {
    pattern.check_fits(n)?;
    if n < 64 && j >> n != 0 {
        return Err(Error::RowOutOfRange { row: j, n });
    }
    Ok(pattern
        .indices()
        .iter()
        .all(|&i| (j >> (n - i)) & 1 == 1))
}

/// Nested run-length form of the monomial's truth table:
/// `0_{2^{n-k_1}} (0_{2^{n-k_2}} ( ... (0_{2^{n-k_m}} 1_{2^{n-k_m}})_{2^{k_m-k_{m-1}-1}} ... )_{2^{k_2-k_1-1}})_{2^{k_1-1}}`.
pub fn monomial_runs(pattern: &MonomialPattern, n: u32) -> Result<Runs> {
    pattern.check_fits(n)?;
    let k = pattern.indices();
    let m = k.len();
    let mut inner = Runs::seq(vec![zeros_pow(n - k[m - 1]), ones_pow(n - k[m - 1])]);
    for i in (0..m - 1).rev() {
        inner = Runs::seq(vec![
            zeros_pow(n - k[i]),
            Runs::repeat(inner, 1u64 << (k[i + 1] - k[i] - 1)),
        ]);
    }
    Ok(Runs::repeat(inner, 1u64 << (k[0] - 1)))
}

pub fn monomial_truth_table(pattern: &MonomialPattern, n: u32) -> Result<TruthTable> {
    Ok(monomial_runs(pattern, n)?.to_table(n))
}

/// The distinct images of a monomial's support under the cyclic shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub n: u32,
    pub members: Vec<MonomialPattern>,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Fewer than `n` distinct rotations.
    pub fn is_short(&self) -> bool {
        self.members.len() < self.n as usize
    }

    /// How often each member occurs among the `n` rotated copies.
    pub fn multiplicity(&self) -> usize {
        self.n as usize / self.members.len()
    }
}

pub fn rotation_orbit(pattern: &MonomialPattern, n: u32) -> Result<Orbit> {
    pattern.check_fits(n)?;
    let mut members: Vec<MonomialPattern> = (0..n).map(|c| pattern.rotated(c, n)).collect();
    members.sort();
    members.dedup();
    Ok(Orbit { n, members })
}

/// Whether any generator of `spec` has a short orbit at `n`.
pub fn has_short_orbit(spec: &RSFunctionSpec, n: u32) -> Result<bool> {
    for g in spec.generators() {
        if rotation_orbit(g, n)?.is_short() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// The monomials that survive mod 2 in the `n`-variable member of the family.
pub fn active_monomials(
    spec: &RSFunctionSpec,
    n: u32,
    interpretation: Interpretation,
) -> Result<Vec<MonomialPattern>> {
    if n < spec.max_top() {
        return Err(Error::IndexOutOfRange { index: spec.max_top(), n });
    }
    let mut counts: BTreeMap<MonomialPattern, usize> = BTreeMap::new();
    for g in spec.generators() {
        let orbit = rotation_orbit(g, n)?;
        let mult = match interpretation {
            Interpretation::OrbitDistinct => 1,
            Interpretation::FullSum => orbit.multiplicity(),
        };
        for m in orbit.members {
            *counts.entry(m).or_default() += mult;
        }
    }
    Ok(counts
        .into_iter()
        .filter(|(_, c)| c % 2 == 1)
        .map(|(m, _)| m)
        .collect())
}

/// Full truth table of `f_n`, assembled from closed-form monomial tables.
pub fn mrs_truth_table(
    spec: &RSFunctionSpec,
    n: u32,
    interpretation: Interpretation,
) -> Result<TruthTable> {
    let mut t = TruthTable::zeros(n);
    for m in active_monomials(spec, n, interpretation)? {
        t.xor_assign(&monomial_truth_table(&m, n)?);
    }
    Ok(t)
}

/// Applies the cyclic shift `rho` to the input row `j`:
/// `(x_1, ..., x_n) -> (x_2, ..., x_n, x_1)`.
pub fn rotate_row(j: u64, n: u32) -> u64 {
    let top = (j >> (n - 1)) & 1;
    ((j << 1) | top) & ((1u64 << n) - 1)
}

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A monomial `x_{k_1} x_{k_2} ... x_{k_m}` given by its strictly increasing,
/// 1-based variable indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialPattern(Vec<u32>);

impl MonomialPattern {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::InvalidPattern("empty monomial".into()));
        }
        if indices[0] == 0 {
            return Err(Error::InvalidPattern("variable indices are 1-based".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPattern(format!(
                "indices must be strictly increasing: {indices:?}"
            )));
        }
        Ok(MonomialPattern(indices))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Largest variable index.
    pub fn top(&self) -> u32 {
        *self.0.last().expect("nonempty by construction")
    }

    pub fn first(&self) -> u32 {
        self.0[0]
    }

    pub fn is_linear(&self) -> bool {
        self.0.len() == 1
    }

    /// Indices reduced to 1..=n after adding `shift` to each one, re-sorted.
    pub(crate) fn rotated(&self, shift: u32, n: u32) -> MonomialPattern {
        let mut v: Vec<u32> = self.0.iter().map(|&i| (i - 1 + shift) % n + 1).collect();
        v.sort_unstable();
        MonomialPattern(v)
    }

    pub(crate) fn check_fits(&self, n: u32) -> Result<()> {
        if self.top() > n {
            return Err(Error::IndexOutOfRange { index: self.top(), n });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for MonomialPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let indices = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u32>()
                    .map_err(|_| Error::Parse(format!("malformed index {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        MonomialPattern::new(indices)
    }
}

/// A rotation symmetric function family `f_n`, given as a sum of monomial
/// rotation symmetric functions. Every generator starts at variable 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RSFunctionSpec {
    generators: Vec<MonomialPattern>,
}

impl RSFunctionSpec {
    pub fn new(generators: Vec<MonomialPattern>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::InvalidSpec("at least one generator is required".into()));
        }
        for g in &generators {
            if g.first() != 1 {
                return Err(Error::InvalidSpec(format!(
                    "generator {{{g}}} must be entered in the correct form, beginning with 1"
                )));
            }
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::InvalidSpec(format!("duplicate generator {{{g}}}")));
            }
        }
        if generators.iter().filter(|g| g.is_linear()).count() > 1 {
            return Err(Error::InvalidSpec("at most one linear generator is allowed".into()));
        }
        Ok(RSFunctionSpec { generators })
    }

    /// Convenience constructor from raw index lists.
    pub fn from_indices(gens: &[&[u32]]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|g| MonomialPattern::new(g.to_vec()))
            .collect::<Result<Vec<_>>>()?;
        RSFunctionSpec::new(gens)
    }

    pub fn generators(&self) -> &[MonomialPattern] {
        &self.generators
    }

    pub fn nonlinear(&self) -> impl Iterator<Item = &MonomialPattern> {
        self.generators.iter().filter(|g| !g.is_linear())
    }

    pub fn linear_count(&self) -> usize {
        self.generators.iter().filter(|g| g.is_linear()).count()
    }

    pub fn is_pure_linear(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_linear()
    }

    /// Largest top index over all generators; the smallest valid `n`.
    pub fn max_top(&self) -> u32 {
        self.generators.iter().map(MonomialPattern::top).max().unwrap_or(1)
    }

    /// Sum of the top indices of the nonlinear generators.
    pub fn top_sum(&self) -> u32 {
        self.nonlinear().map(MonomialPattern::top).sum()
    }

    /// Bit width of an operation state: one bit per level `2..=top` of every
    /// nonlinear generator.
    pub fn state_width(&self) -> u32 {
        self.nonlinear().map(|g| g.top() - 1).sum()
    }
}

impl fmt::Display for RSFunctionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for RSFunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty spec".into()));
        }
        let gens = s
            .split(';')
            .map(str::parse::<MonomialPattern>)
            .collect::<Result<Vec<_>>>()?;
        RSFunctionSpec::new(gens)
    }
}

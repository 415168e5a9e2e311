//! Streaming Hamming-weight computation. The table is never materialized:
//! rows are evaluated 64 at a time, with the six lowest variables laid out
//! as fixed lane patterns of a machine word and the remaining variables
//! constant across the word.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{active_monomials, Interpretation, MonomialPattern, RSFunctionSpec};
use crate::error::{Error, Result};

/// Chunk size used by [`weight`], as a power of two in table rows.
pub const DEFAULT_CHUNK_LOG2: u32 = 16;

/// Largest variable count the enumerator will attempt.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_n: u32,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: 28 }
    }
}

impl Budget {
    pub fn check(&self, n: u32) -> Result<()> {
        if n > self.max_n {
            return Err(Error::EnumerationBudget { n, budget: self.max_n });
        }
        Ok(())
    }
}

const LANE_MASKS: [u64; 6] = [
    0xAAAA_AAAA_AAAA_AAAA,
    0xCCCC_CCCC_CCCC_CCCC,
    0xF0F0_F0F0_F0F0_F0F0,
    0xFF00_FF00_FF00_FF00,
    0xFFFF_0000_FFFF_0000,
    0xFFFF_FFFF_0000_0000,
];

/// One monomial compiled for word-at-a-time evaluation.
#[derive(Debug, Clone, Copy)]
struct Term {
    /// Bits of the word index that must all be set.
    word_bits: u64,
    /// AND of the lane patterns of the low variables.
    lanes: u64,
}

struct Bitsliced {
    n: u32,
    terms: Vec<Term>,
}

impl Bitsliced {
    fn compile(monomials: &[MonomialPattern], n: u32) -> Self {
        let terms = monomials
            .iter()
            .map(|m| {
                let mut t = Term { word_bits: 0, lanes: !0 };
                for &i in m.indices() {
                    // x_i is bit (n - i) of the row index.
                    let bit = n - i;
                    if bit < 6 {
                        t.lanes &= LANE_MASKS[bit as usize];
                    } else {
                        t.word_bits |= 1u64 << (bit - 6);
                    }
                }
                t
            })
            .collect();
        Bitsliced { n, terms }
    }

    fn eval_word(&self, w: u64) -> u64 {
        self.terms.iter().fold(0u64, |acc, t| {
            if w & t.word_bits == t.word_bits {
                acc ^ t.lanes
            } else {
                acc
            }
        })
    }

    fn word_count(&self) -> u64 {
        if self.n >= 6 {
            1u64 << (self.n - 6)
        } else {
            1
        }
    }

    fn valid_lanes(&self) -> u64 {
        if self.n >= 6 {
            !0
        } else {
            (1u64 << (1u32 << self.n)) - 1
        }
    }

    fn popcount(&self, chunk_log2: u32) -> u64 {
        let words = self.word_count();
        let words_per_chunk = 1u64 << chunk_log2.saturating_sub(6);
        let chunks = words.div_ceil(words_per_chunk);
        let valid = self.valid_lanes();
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let lo = c * words_per_chunk;
                let hi = (lo + words_per_chunk).min(words);
                (lo..hi)
                    .map(|w| u64::from((self.eval_word(w) & valid).count_ones()))
                    .sum::<u64>()
            })
            .sum()
    }
}

/// Weight of `f_n` with an explicit chunk size (`2^chunk_log2` rows per
/// chunk, at least one word).
pub fn weight_chunked(
    spec: &RSFunctionSpec,
    n: u32,
    interpretation: Interpretation,
    budget: Budget,
    chunk_log2: u32,
) -> Result<u64> {
    budget.check(n)?;
    let monomials = active_monomials(spec, n, interpretation)?;
    Ok(Bitsliced::compile(&monomials, n).popcount(chunk_log2))
}

pub fn weight(
    spec: &RSFunctionSpec,
    n: u32,
    interpretation: Interpretation,
    budget: Budget,
) -> Result<u64> {
    weight_chunked(spec, n, interpretation, budget, DEFAULT_CHUNK_LOG2)
}

/// Consecutive weights `w_{start_n}, w_{start_n + 1}, ...`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightSequence {
    pub start_n: u32,
    #[serde(with = "crate::decimal::vec")]
    pub values: Vec<BigInt>,
}

impl WeightSequence {
    /// Checks `0 <= values[i] <= 2^(start_n + i)`.
    pub fn new(start_n: u32, values: Vec<BigInt>) -> Result<Self> {
        for (i, v) in values.iter().enumerate() {
            let n = start_n + i as u32;
            if v.sign() == num_bigint::Sign::Minus || *v > (BigInt::from(1) << n) {
                return Err(Error::WeightOutOfRange { n });
            }
        }
        Ok(WeightSequence { start_n, values })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn end_n(&self) -> u32 {
        self.start_n + self.values.len() as u32
    }

    pub fn get(&self, n: u32) -> Option<&BigInt> {
        n.checked_sub(self.start_n)
            .and_then(|i| self.values.get(i as usize))
    }
}

pub fn weight_sequence(
    spec: &RSFunctionSpec,
    n_from: u32,
    n_to: u32,
    interpretation: Interpretation,
    budget: Budget,
) -> Result<WeightSequence> {
    budget.check(n_to)?;
    let values = (n_from..=n_to)
        .map(|n| weight(spec, n, interpretation, budget).map(BigInt::from))
        .collect::<Result<Vec<_>>>()?;
    WeightSequence::new(n_from, values)
}

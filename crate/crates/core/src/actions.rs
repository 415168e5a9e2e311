//! Generator actions: the masks a generating monomial XORs onto the right
//! half of a truth table, and how they split when the table is halved.
//!
//! For a generator `x_1 x_{c_2} ... x_{c_d}` and a level `1 <= v <= c_d`,
//! the level-`v` mask over `n` variables is obtained by cutting the
//! monomial's `n`-variable truth table into `2^(c_d - v + 1)` equal portions,
//! keeping the last one and repeating each of its entries `2^(c_d - v)`
//! times, giving a sequence of length `2^(n - 1)`. Level 1 is the all-ones
//! mask, i.e. complementation.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::boolfn::{eval_monomial_at, ones_pow, zeros_pow, MonomialPattern, RSFunctionSpec, Runs, TruthTable};
use crate::error::{Error, Result};

/// The level-`v` action of a generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MuAction {
    pattern: MonomialPattern,
    v: u32,
}

impl MuAction {
    pub fn new(pattern: MonomialPattern, v: u32) -> Result<Self> {
        check_generator(&pattern)?;
        check_level(&pattern, v)?;
        Ok(MuAction { pattern, v })
    }

    pub fn pattern(&self) -> &MonomialPattern {
        &self.pattern
    }

    pub fn level(&self) -> u32 {
        self.v
    }

    /// XORs the mask onto a table over `n - 1` variables.
    pub fn apply(&self, table: &TruthTable) -> Result<TruthTable> {
        let mask = mu_sequence_closed_form(&self.pattern, self.v, table.n() + 1)?;
        Ok(table.xor(&mask))
    }
}

fn check_generator(pattern: &MonomialPattern) -> Result<()> {
    if pattern.first() != 1 {
        return Err(Error::InvalidPattern(format!(
            "actions are defined only for generators starting at 1, got {{{pattern}}}"
        )));
    }
    Ok(())
}

fn check_level(pattern: &MonomialPattern, v: u32) -> Result<()> {
    if v == 0 || v > pattern.top() {
        return Err(Error::LevelOutOfRange { v, top: pattern.top() });
    }
    Ok(())
}

fn check_args(pattern: &MonomialPattern, v: u32, n: u32) -> Result<()> {
    check_generator(pattern)?;
    check_level(pattern, v)?;
    if n < pattern.top() || n == 0 {
        return Err(Error::IndexOutOfRange { index: pattern.top(), n });
    }
    Ok(())
}

/// The level-`v` mask built literally: portion, isolate, stretch. Uses the
/// direct monomial evaluator, not the closed-form tables.
pub fn mu_sequence_definitional(pattern: &MonomialPattern, v: u32, n: u32) -> Result<TruthTable> {
    check_args(pattern, v, n)?;
    let top = pattern.top();
    let parts_log2 = top - v + 1;
    let stretch_log2 = top - v;
    let portion_len_log2 = n - parts_log2;
    let base = ((1u64 << parts_log2) - 1) << portion_len_log2;
    let mut out = TruthTable::zeros(n - 1);
    for j in 0..out.len() {
        if eval_monomial_at(pattern, n, base + (j >> stretch_log2))? {
            out.set(j, true);
        }
    }
    Ok(out)
}

/// Nested run-length form of the level-`v` mask.
///
/// Only the generator indices `c_t` with `v > c_d - c_t + 1` survive the
/// isolation step; they reappear as the variables `c_t - c_d + v - 1` of an
/// `(n - 1)`-variable monomial, so the mask is
/// `(0_{2^{n+c_d-c_s-v}} ( ... (0_{2^{n-v}} 1_{2^{n-v}})_{2^{c_d-c_{d-1}-1}} ... ))_{2^{v-c_d+c_s-2}}`
/// where `c_s` is the smallest surviving index.
pub fn mu_sequence_closed_form(pattern: &MonomialPattern, v: u32, n: u32) -> Result<TruthTable> {
    Ok(mu_runs(pattern, v, n)?.to_table(n - 1))
}

pub fn mu_runs(pattern: &MonomialPattern, v: u32, n: u32) -> Result<Runs> {
    check_args(pattern, v, n)?;
    if v == 1 {
        return Ok(ones_pow(n - 1));
    }
    let c = pattern.indices();
    let top = pattern.top();
    let d = c.len();
    // smallest t with v > top - c[t] + 1
    let s = (0..d).find(|&t| v + c[t] > top + 1).expect("the top index always survives for v >= 2");
    let mut inner = Runs::seq(vec![zeros_pow(n - v), ones_pow(n - v)]);
    for t in (s..d - 1).rev() {
        inner = Runs::seq(vec![
            zeros_pow(n + top - c[t] - v),
            Runs::repeat(inner, 1u64 << (c[t + 1] - c[t] - 1)),
        ]);
    }
    Ok(Runs::repeat(inner, 1u64 << (v + c[s] - top - 2)))
}

/// Levels at which an action vanishes from the left half when the table
/// splits: `{ c_d - c_t + 2 : t = 2..d }`. Always contains 2.
pub fn break_levels(pattern: &MonomialPattern) -> BTreeSet<u32> {
    let top = pattern.top();
    pattern.indices()[1..].iter().map(|&c| top - c + 2).collect()
}

/// What a half-table receives after a split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind", content = "level")]
pub enum HalfAction {
    None,
    /// Action at the given level (always at least 2).
    Action(u32),
    Complement,
}

impl HalfAction {
    fn level(v: u32) -> HalfAction {
        if v == 1 {
            HalfAction::Complement
        } else {
            HalfAction::Action(v)
        }
    }

    /// XOR the corresponding mask onto `half` (a table over `n - 1`
    /// variables, where the action lives over `n` variables).
    fn apply(&self, pattern: &MonomialPattern, half: &TruthTable) -> Result<TruthTable> {
        match *self {
            HalfAction::None => Ok(half.clone()),
            HalfAction::Complement => Ok(half.complement()),
            HalfAction::Action(v) => {
                let mask = mu_sequence_closed_form(pattern, v, half.n() + 1)?;
                Ok(half.xor(&mask))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitOutcome {
    pub left: HalfAction,
    pub right: HalfAction,
}

pub fn split_action(pattern: &MonomialPattern, v: u32) -> Result<SplitOutcome> {
    check_generator(pattern)?;
    check_level(pattern, v)?;
    let outcome = if v == 1 {
        SplitOutcome { left: HalfAction::Complement, right: HalfAction::Complement }
    } else if break_levels(pattern).contains(&v) {
        SplitOutcome { left: HalfAction::None, right: HalfAction::level(v - 1) }
    } else {
        SplitOutcome { left: HalfAction::level(v - 1), right: HalfAction::level(v - 1) }
    };
    debug_assert_ne!(outcome.right, HalfAction::None);
    Ok(outcome)
}

/// Checks that applying the level-`v` action over `n` variables to `table`
/// (over `n - 1` variables) equals applying the split halves separately.
pub fn split_identity_check(
    pattern: &MonomialPattern,
    v: u32,
    n: u32,
    table: &TruthTable,
) -> Result<bool> {
    check_args(pattern, v, n)?;
    if n < 2 || table.n() != n - 1 || n - 1 < pattern.top() {
        return Err(Error::Dimension(format!(
            "split check needs n > top and a table over n - 1 = {} variables",
            n.saturating_sub(1)
        )));
    }
    let whole = table.xor(&mu_sequence_closed_form(pattern, v, n)?);
    let outcome = split_action(pattern, v)?;
    let (l, r) = table.halves();
    let l = outcome.left.apply(pattern, &l)?;
    let r = outcome.right.apply(pattern, &r)?;
    Ok(TruthTable::concat(&l, &r) == whole)
}

/// The top-level action each nonlinear generator adds to a right half.
pub fn fresh_actions(spec: &RSFunctionSpec) -> Vec<MuAction> {
    spec.nonlinear()
        .map(|g| MuAction { pattern: g.clone(), v: g.top() })
        .collect()
}

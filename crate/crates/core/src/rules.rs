//! Operation states and the rules matrix.
//!
//! A state records which generator actions (levels `2..=top`) are active on
//! a half-table. It is packed generator-major, the first nonlinear
//! generator in the most significant bits; inside a generator's
//! `top - 1`-bit field, level `v` is the bit of value `2^(top - v)`.
//! Level 1, the complement, is never stored: it is tracked as a sign.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::actions::{break_levels, split_action, HalfAction};
use crate::boolfn::{MonomialPattern, RSFunctionSpec};
use crate::error::{Error, Result};
use crate::linalg::SparseIntMatrix;

/// Packed set of active generator actions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OperationState(pub u64);

#[derive(Debug, Clone)]
struct Field {
    pattern: MonomialPattern,
    top: u32,
    shift: u32,
    mask: u64,
    breaks: u64,
}

/// Bit layout of operation states for one spec.
#[derive(Debug, Clone)]
pub struct StateLayout {
    fields: Vec<Field>,
    width: u32,
    linear_count: usize,
}

impl StateLayout {
    pub fn new(spec: &RSFunctionSpec) -> Self {
        let width = spec.state_width();
        let mut remaining = width;
        let fields = spec
            .nonlinear()
            .map(|g| {
                let top = g.top();
                remaining -= top - 1;
                let breaks = break_levels(g)
                    .into_iter()
                    .fold(0u64, |m, v| m | 1u64 << (top - v));
                Field {
                    pattern: g.clone(),
                    top,
                    shift: remaining,
                    mask: (1u64 << (top - 1)) - 1,
                    breaks,
                }
            })
            .collect();
        StateLayout { fields, width, linear_count: spec.linear_count() }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn state_count(&self) -> u64 {
        1u64 << self.width
    }

    /// Active levels of each nonlinear generator.
    pub fn decode(&self, s: OperationState) -> Vec<BTreeSet<u32>> {
        self.fields
            .iter()
            .map(|f| {
                let bits = (s.0 >> f.shift) & f.mask;
                (2..=f.top).filter(|v| bits >> (f.top - v) & 1 == 1).collect()
            })
            .collect()
    }

    pub fn encode(&self, levels: &[BTreeSet<u32>]) -> Result<OperationState> {
        if levels.len() != self.fields.len() {
            return Err(Error::Dimension("one level set per nonlinear generator".into()));
        }
        let mut s = 0u64;
        for (f, set) in self.fields.iter().zip(levels) {
            for &v in set {
                if v < 2 || v > f.top {
                    return Err(Error::LevelOutOfRange { v, top: f.top });
                }
                s |= 1u64 << (f.shift + f.top - v);
            }
        }
        Ok(OperationState(s))
    }

    /// State of the left half after a split: levels in the break set vanish,
    /// every other level `v` becomes `v - 1`.
    pub fn left_child(&self, s: OperationState) -> OperationState {
        let mut out = 0u64;
        for f in &self.fields {
            let bits = (s.0 >> f.shift) & f.mask;
            out |= ((bits & !f.breaks) << 1) << f.shift;
        }
        OperationState(out)
    }

    /// State of the right half after a split, and the complement parity.
    /// Every level shifts down, level 2 turning into a complement, then every
    /// generator adds its fresh top-level action. Each linear generator
    /// contributes one more complement.
    pub fn right_child(&self, s: OperationState) -> (OperationState, bool) {
        let mut out = 0u64;
        let mut parity = self.linear_count % 2 == 1;
        for f in &self.fields {
            let bits = (s.0 >> f.shift) & f.mask;
            if (bits >> (f.top - 2)) & 1 == 1 {
                parity = !parity;
            }
            out |= (((bits << 1) & f.mask) | 1) << f.shift;
        }
        (OperationState(out), parity)
    }

    /// Children computed action by action from the splitting rules; an
    /// independent route to [`left_child`](Self::left_child) and
    /// [`right_child`](Self::right_child).
    pub fn children_by_rules(&self, s: OperationState) -> Result<(OperationState, OperationState, bool)> {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut parity = self.linear_count % 2 == 1;
        for (f, active) in self.fields.iter().zip(self.decode(s)) {
            let mut l = BTreeSet::new();
            let mut r = BTreeSet::new();
            for v in active {
                let split = split_action(&f.pattern, v)?;
                match split.left {
                    HalfAction::Action(w) => {
                        l.insert(w);
                    }
                    HalfAction::Complement => {
                        return Err(Error::InvalidSpec("left half cannot be complemented".into()))
                    }
                    HalfAction::None => {}
                }
                match split.right {
                    HalfAction::Action(w) => {
                        r.insert(w);
                    }
                    HalfAction::Complement => parity = !parity,
                    HalfAction::None => {}
                }
            }
            r.insert(f.top);
            left.push(l);
            right.push(r);
        }
        Ok((self.encode(&left)?, self.encode(&right)?, parity))
    }
}

/// Largest state width the matrix builder will accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixBudget {
    pub max_width: u32,
}

impl Default for MatrixBudget {
    fn default() -> Self {
        MatrixBudget { max_width: 24 }
    }
}

/// The rules matrix: column `j` lists the states produced when state `j`
/// splits, with the last index standing for the complement bookkeeping.
#[derive(Debug, Clone)]
pub struct RulesMatrix {
    raw_dim: usize,
    raw: Vec<(usize, usize, i64)>,
    kept: Vec<usize>,
    matrix: SparseIntMatrix,
}

impl RulesMatrix {
    pub fn raw_dimension(&self) -> usize {
        self.raw_dim
    }

    pub fn dimension(&self) -> usize {
        self.kept.len()
    }

    /// Entries of the unpruned matrix, sorted by `(row, col)`.
    pub fn raw_entries(&self) -> &[(usize, usize, i64)] {
        &self.raw
    }

    /// Raw indices that survive pruning, ascending.
    pub fn pruned_index_map(&self) -> &[usize] {
        &self.kept
    }

    /// The pruned matrix.
    pub fn matrix(&self) -> &SparseIntMatrix {
        &self.matrix
    }

    pub fn raw_matrix(&self) -> SparseIntMatrix {
        SparseIntMatrix::from_triplets(
            self.raw_dim,
            self.raw.iter().map(|&(r, c, v)| (r, c, BigInt::from(v))),
        )
        .expect("raw entries are in range")
    }
}

pub fn build_rules_matrix(spec: &RSFunctionSpec, budget: MatrixBudget) -> Result<RulesMatrix> {
    if spec.is_pure_linear() {
        return Err(Error::LinearSpec);
    }
    let layout = StateLayout::new(spec);
    if layout.width() > budget.max_width {
        return Err(Error::MatrixBudget { width: layout.width(), budget: budget.max_width });
    }
    let states = layout.state_count() as usize;
    let last = states;
    let columns: Vec<Vec<(usize, i64)>> = (0..states)
        .into_par_iter()
        .map(|j| {
            let s = OperationState(j as u64);
            let left = layout.left_child(s).0 as usize;
            let (right, odd) = layout.right_child(s);
            let mut col = vec![(left, 1)];
            if odd {
                col.push((right.0 as usize, -1));
                col.push((last, 1));
            } else {
                col.push((right.0 as usize, 1));
            }
            col
        })
        .collect();
    let mut acc: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (j, col) in columns.into_iter().enumerate() {
        for (r, v) in col {
            *acc.entry((r, j)).or_default() += v;
        }
    }
    acc.insert((last, last), 2);
    let raw: Vec<(usize, usize, i64)> =
        acc.into_iter().filter(|(_, v)| *v != 0).map(|((r, c), v)| (r, c, v)).collect();
    let raw_dim = states + 1;
    let kept = prune(raw_dim, &raw);
    let mut new_index = vec![usize::MAX; raw_dim];
    for (i, &k) in kept.iter().enumerate() {
        new_index[k] = i;
    }
    let matrix = SparseIntMatrix::from_triplets(
        kept.len(),
        raw.iter()
            .filter(|(r, c, _)| new_index[*r] != usize::MAX && new_index[*c] != usize::MAX)
            .map(|&(r, c, v)| (new_index[r], new_index[c], BigInt::from(v))),
    )?;
    Ok(RulesMatrix { raw_dim, raw, kept, matrix })
}

/// Deletes, row and column together, every index whose row is entirely
/// zero, until none is left.
fn prune(dim: usize, entries: &[(usize, usize, i64)]) -> Vec<usize> {
    let mut row_count = vec![0usize; dim];
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); dim];
    for &(r, c, _) in entries {
        row_count[r] += 1;
        col_rows[c].push(r);
    }
    let mut alive = vec![true; dim];
    let mut queue: Vec<usize> = (0..dim).filter(|&i| row_count[i] == 0).collect();
    while let Some(i) = queue.pop() {
        if !alive[i] {
            continue;
        }
        alive[i] = false;
        for &r in &col_rows[i] {
            row_count[r] -= 1;
            if row_count[r] == 0 && alive[r] {
                queue.push(r);
            }
        }
    }
    (0..dim).filter(|&i| alive[i]).collect()
}

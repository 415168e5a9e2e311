//! Run-length expressions such as `0_{2^3} (0_{2^1} 1_{2^1})_{2^2}`, the
//! notation in which the closed-form truth tables are written.

use super::table::TruthTable;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Runs {
    Zeros(u64),
    Ones(u64),
    Seq(Vec<Runs>),
    Repeat(Box<Runs>, u64),
}

impl Runs {
    pub fn seq(parts: Vec<Runs>) -> Runs {
        Runs::Seq(parts)
    }

    pub fn repeat(inner: Runs, times: u64) -> Runs {
        Runs::Repeat(Box::new(inner), times)
    }

    pub fn len(&self) -> u64 {
        match self {
            Runs::Zeros(k) | Runs::Ones(k) => *k,
            Runs::Seq(parts) => parts.iter().map(Runs::len).sum(),
            Runs::Repeat(inner, t) => inner.len() * t,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Writes the expression into `table` starting at bit `offset`, returning
    /// the offset just past it. Zero runs are skipped since the table is
    /// assumed to be zero there.
    fn write(&self, table: &mut TruthTable, offset: u64) -> u64 {
        match self {
            Runs::Zeros(k) => offset + k,
            Runs::Ones(k) => {
                table.set_range(offset, *k);
                offset + k
            }
            Runs::Seq(parts) => parts.iter().fold(offset, |o, p| p.write(table, o)),
            Runs::Repeat(inner, t) => (0..*t).fold(offset, |o, _| inner.write(table, o)),
        }
    }

    /// Materializes into a table over `n` variables; the expression must have
    /// length exactly `2^n`.
    pub fn to_table(&self, n: u32) -> TruthTable {
        assert_eq!(self.len(), 1u64 << n, "run expression length must be 2^n");
        let mut t = TruthTable::zeros(n);
        self.write(&mut t, 0);
        t
    }
}

/// `0_{2^e}` and friends.
pub(crate) fn zeros_pow(e: u32) -> Runs {
    Runs::Zeros(1u64 << e)
}

pub(crate) fn ones_pow(e: u32) -> Runs {
    Runs::Ones(1u64 << e)
}

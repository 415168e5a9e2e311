use std::fmt;

/// Truth table of a function of `n` variables. Bit `j` is the value at the
/// input whose binary expansion, most significant bit first, is
/// `(x_1, ..., x_n)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    words: Vec<u64>,
}

impl TruthTable {
    pub fn zeros(n: u32) -> Self {
        let words = vec![0u64; Self::word_count(n)];
        TruthTable { n, words }
    }

    pub fn ones(n: u32) -> Self {
        let mut t = Self::zeros(n);
        t.set_range(0, t.len());
        t
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u64) -> bool) -> Self {
        let mut t = Self::zeros(n);
        for j in 0..t.len() {
            if f(j) {
                t.set(j, true);
            }
        }
        t
    }

    /// Parses a string of `0`/`1` characters of length `2^n`.
    pub fn from_bit_string(s: &str) -> Option<Self> {
        let len = s.len() as u64;
        if !len.is_power_of_two() {
            return None;
        }
        let n = len.trailing_zeros();
        let mut t = Self::zeros(n);
        for (j, c) in s.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => t.set(j as u64, true),
                _ => return None,
            }
        }
        Some(t)
    }

    fn word_count(n: u32) -> usize {
        if n >= 6 {
            1usize << (n - 6)
        } else {
            1
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> u64 {
        1u64 << self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, j: u64) -> bool {
        debug_assert!(j < self.len());
        (self.words[(j >> 6) as usize] >> (j & 63)) & 1 == 1
    }

    pub fn set(&mut self, j: u64, bit: bool) {
        debug_assert!(j < self.len());
        let w = &mut self.words[(j >> 6) as usize];
        if bit {
            *w |= 1 << (j & 63);
        } else {
            *w &= !(1 << (j & 63));
        }
    }

    /// Sets bits `start..start + len` to one.
    pub fn set_range(&mut self, start: u64, len: u64) {
        let end = start + len;
        debug_assert!(end <= self.len());
        let mut j = start;
        while j < end {
            let bit = j & 63;
            let take = (64 - bit).min(end - j);
            let mask = if take == 64 { !0 } else { ((1u64 << take) - 1) << bit };
            self.words[(j >> 6) as usize] |= mask;
            j += take;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn xor_assign(&mut self, other: &TruthTable) {
        assert_eq!(self.n, other.n, "table sizes differ");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &TruthTable) -> TruthTable {
        let mut t = self.clone();
        t.xor_assign(other);
        t
    }

    pub fn complement(&self) -> TruthTable {
        self.xor(&TruthTable::ones(self.n))
    }

    /// First and second half (`x_1 = 0` and `x_1 = 1`), each over `n - 1`
    /// variables.
    pub fn halves(&self) -> (TruthTable, TruthTable) {
        assert!(self.n >= 1, "cannot split a 0-variable table");
        let half = self.len() / 2;
        let left = TruthTable::from_fn(self.n - 1, |j| self.get(j));
        let right = TruthTable::from_fn(self.n - 1, |j| self.get(half + j));
        (left, right)
    }

    /// `left || right`, a table over one more variable.
    pub fn concat(left: &TruthTable, right: &TruthTable) -> TruthTable {
        assert_eq!(left.n, right.n, "table sizes differ");
        let half = left.len();
        TruthTable::from_fn(left.n + 1, |j| {
            if j < half {
                left.get(j)
            } else {
                right.get(j - half)
            }
        })
    }

    /// Portion `index` (0-based) after cutting the table into `2^parts_log2`
    /// equal pieces, as a table over `n - parts_log2` variables.
    pub fn portion(&self, parts_log2: u32, index: u64) -> TruthTable {
        assert!(parts_log2 <= self.n);
        let m = self.n - parts_log2;
        let base = index << m;
        TruthTable::from_fn(m, |j| self.get(base + j))
    }

    pub fn to_bit_string(&self) -> String {
        (0..self.len()).map(|j| if self.get(j) { '1' } else { '0' }).collect()
    }
}

impl fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n <= 8 {
            write!(f, "TruthTable({}: {})", self.n, self.to_bit_string())
        } else {
            write!(f, "TruthTable({} vars, weight {})", self.n, self.weight())
        }
    }
}

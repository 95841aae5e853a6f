//! Dense 0,1-matrices backed by a row-major bit array.

/// Row-major 0,1-matrix. Rows and columns are 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroOneMatrix {
    rows: usize,
    cols: usize,
    bits: Vec<u64>,
}

impl ZeroOneMatrix {
    pub fn zeros(rows: usize, cols: usize) -> ZeroOneMatrix {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        let words = (rows * cols).div_ceil(64);
        ZeroOneMatrix { rows, cols, bits: vec![0; words] }
    }

    pub fn ones(rows: usize, cols: usize) -> ZeroOneMatrix {
        let mut m = ZeroOneMatrix::zeros(rows, cols);
        for w in &mut m.bits {
            *w = !0;
        }
        m
    }

    pub fn identity(n: usize) -> ZeroOneMatrix {
        let mut m = ZeroOneMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from `0`/`1` character rows, e.g. `["110", "011"]`.
    pub fn from_rows(rows: &[&str]) -> ZeroOneMatrix {
        assert!(!rows.is_empty());
        let cols = rows[0].len();
        let mut m = ZeroOneMatrix::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged row {i}");
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '0' => {}
                    '1' => m.set(i, j, true),
                    other => panic!("invalid matrix character {other:?}"),
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    fn index(&self, r: usize, c: usize) -> (usize, u64) {
        debug_assert!(r < self.rows && c < self.cols);
        let bit = r * self.cols + c;
        (bit / 64, 1u64 << (bit % 64))
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        let (word, mask) = self.index(r, c);
        self.bits[word] & mask != 0
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        let (word, mask) = self.index(r, c);
        if value {
            self.bits[word] |= mask;
        } else {
            self.bits[word] &= !mask;
        }
    }

    /// Matrix with every entry flipped.
    pub fn complement(&self) -> ZeroOneMatrix {
        let mut out = self.clone();
        for w in &mut out.bits {
            *w = !*w;
        }
        // Mask the tail so padding bits stay zero.
        let used = self.rows * self.cols;
        if used % 64 != 0 {
            let last = out.bits.len() - 1;
            out.bits[last] &= (1u64 << (used % 64)) - 1;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Rows holding a 1 in column `c`.
    pub fn column_support(&self, c: usize) -> Vec<usize> {
        (0..self.rows).filter(|&r| self.get(r, c)).collect()
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// True when the 1's of every column are consecutive under the row order
    /// `order` (`order[p]` = row placed at position `p`).
    pub fn is_c1p_order(&self, order: &[usize]) -> bool {
        if order.len() != self.rows {
            return false;
        }
        for c in 0..self.cols {
            let mut first = None;
            let mut last = 0;
            let mut count = 0usize;
            for (p, &r) in order.iter().enumerate() {
                if self.get(r, c) {
                    first.get_or_insert(p);
                    last = p;
                    count += 1;
                }
            }
            if let Some(first) = first {
                if last - first + 1 != count {
                    return false;
                }
            }
        }
        true
    }

    /// True when the 0's of every column are consecutive under `order`.
    pub fn is_c0p_order(&self, order: &[usize]) -> bool {
        self.complement().is_c1p_order(order)
    }

    /// True when the 1's of every column are circularly consecutive under
    /// `order` (a single run once the positions are read around a cycle).
    pub fn is_circ1p_order(&self, order: &[usize]) -> bool {
        if order.len() != self.rows {
            return false;
        }
        for c in 0..self.cols {
            let ones: Vec<bool> = order.iter().map(|&r| self.get(r, c)).collect();
            // Count maximal runs of 1's cyclically; a circular arrangement
            // has at most one.
            let n = ones.len();
            let starts = (0..n)
                .filter(|&p| ones[p] && !ones[(p + n - 1) % n])
                .count();
            if starts > 1 {
                return false;
            }
        }
        true
    }
}

impl std::fmt::Display for ZeroOneMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for r in 0..self.rows {
            for c in 0..self.cols {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_roundtrip() {
        let mut m = ZeroOneMatrix::zeros(5, 13);
        m.set(4, 12, true);
        m.set(0, 0, true);
        m.set(2, 7, true);
        assert!(m.get(4, 12) && m.get(0, 0) && m.get(2, 7));
        assert_eq!(m.count_ones(), 3);
        m.set(2, 7, false);
        assert_eq!(m.count_ones(), 2);
    }

    #[test]
    fn complement_is_involutive() {
        let m = ZeroOneMatrix::from_rows(&["101", "010", "110"]);
        assert_eq!(m.complement().complement(), m);
        assert_eq!(m.complement().count_ones(), 9 - m.count_ones());
    }

    #[test]
    fn consecutive_order_checks() {
        let m = ZeroOneMatrix::from_rows(&["10", "11", "01"]);
        assert!(m.is_c1p_order(&[0, 1, 2]));
        assert!(!m.is_c1p_order(&[1, 0, 2])); // splits column 1 (rows 1 and 2)
        let split = ZeroOneMatrix::from_rows(&["1", "0", "1"]);
        assert!(!split.is_c1p_order(&[0, 1, 2]));
        assert!(split.is_c1p_order(&[1, 0, 2]));
        assert!(split.is_circ1p_order(&[0, 1, 2])); // wraps around
        assert!(ZeroOneMatrix::from_rows(&["1", "1", "1"]).is_circ1p_order(&[0, 1, 2]));
    }
}

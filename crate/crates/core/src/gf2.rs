//! GF(2) row reduction over bit-packed rows.
//!
//! Rows are `u64` words holding up to 64 columns. The basis keeps rows in
//! reduced echelon form with a fixed low-to-high pivot order, so ranks,
//! membership tests, and the complement transversal are all deterministic.

/// A row-reduced GF(2) basis with at most 64 columns.
#[derive(Debug, Clone)]
pub(crate) struct Gf2Basis {
    ncols: usize,
    /// Echelon rows, sorted by pivot column.
    rows: Vec<u64>,
    /// Pivot column of each row.
    pivots: Vec<usize>,
}

impl Gf2Basis {
    pub(crate) fn new(ncols: usize) -> Self {
        debug_assert!(ncols <= 64);
        Gf2Basis {
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` against the basis; the remainder is zero iff `v` is in
    /// the span.
    pub(crate) fn reduce(&self, mut v: u64) -> u64 {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if (v >> p) & 1 == 1 {
                v ^= row;
            }
        }
        v
    }

    pub(crate) fn contains(&self, v: u64) -> bool {
        self.reduce(v) == 0
    }

    /// Inserts `v` if independent; returns false when `v` is already in
    /// the span.
    pub(crate) fn insert(&mut self, v: u64) -> bool {
        let r = self.reduce(v);
        if r == 0 {
            return false;
        }
        let pivot = r.trailing_zeros() as usize;
        // Back-substitute to keep the reduced form.
        for row in self.rows.iter_mut() {
            if (*row >> pivot) & 1 == 1 {
                *row ^= r;
            }
        }
        let pos = self.pivots.partition_point(|&p| p < pivot);
        self.rows.insert(pos, r);
        self.pivots.insert(pos, pivot);
        true
    }

    /// Standard basis vectors at the non-pivot columns. Their subset sums
    /// form a deterministic transversal of the quotient by the span.
    pub(crate) fn complement_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_membership() {
        let mut b = Gf2Basis::new(4);
        assert!(b.insert(0b0011));
        assert!(b.insert(0b0101));
        assert!(!b.insert(0b0110)); // xor of the first two
        assert_eq!(b.rank(), 2);
        assert!(b.contains(0b0110));
        assert!(!b.contains(0b1000));
    }

    #[test]
    fn complement_spans_quotient() {
        let mut b = Gf2Basis::new(4);
        b.insert(0b0011);
        b.insert(0b1100);
        let comp = b.complement_columns();
        assert_eq!(comp.len(), 2);
        // Every vector decomposes as span + complement-subset.
        for v in 0u64..16 {
            let r = b.reduce(v);
            let mut rebuilt = 0u64;
            for &c in &comp {
                if (r >> c) & 1 == 1 {
                    rebuilt |= 1 << c;
                }
            }
            // The reduced remainder must be supported on complement columns.
            assert_eq!(r, rebuilt);
        }
    }
}

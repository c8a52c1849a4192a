//! Incremental sparse Gauss-Jordan elimination over ℚ(i), used to compute
//! kernels of ansatz systems.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::gauss::GaussRat;

pub type SparseRow = BTreeMap<usize, GaussRat>;

/// Reduced row echelon form, built one equation at a time. Every stored row
/// has coefficient 1 at its pivot and 0 at every other pivot column.
#[derive(Clone, Debug, Default)]
pub struct Eliminator {
    ncols: usize,
    pivots: BTreeMap<usize, SparseRow>,
}

fn axpy(row: &mut SparseRow, factor: &GaussRat, other: &SparseRow) {
    for (&c, v) in other {
        let delta = factor * v;
        let entry = row.entry(c).or_insert_with(GaussRat::zero);
        *entry -= &delta;
        if entry.is_zero() {
            row.remove(&c);
        }
    }
}

impl Eliminator {
    pub fn new(ncols: usize) -> Self {
        Eliminator {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Add the equation `Σ row[c]·x_c = 0`.
    pub fn push(&mut self, mut row: SparseRow) {
        row.retain(|_, v| !v.is_zero());
        let hits: Vec<usize> = row
            .keys()
            .copied()
            .filter(|c| self.pivots.contains_key(c))
            .collect();
        for c in hits {
            if let Some(f) = row.get(&c).cloned() {
                axpy(&mut row, &f, &self.pivots[&c]);
            }
        }
        let Some((&pc, pv)) = row.iter().next() else {
            return;
        };
        let inv = pv.inv().unwrap();
        if !inv.is_one() {
            for v in row.values_mut() {
                *v = &*v * &inv;
            }
        }
        for other in self.pivots.values_mut() {
            if let Some(f) = other.get(&pc).cloned() {
                axpy(other, &f, &row);
            }
        }
        self.pivots.insert(pc, row);
    }

    /// Kernel basis, one vector per free column, in column order.
    pub fn kernel(&self) -> Vec<Vec<GaussRat>> {
        let mut basis = Vec::new();
        for free in 0..self.ncols {
            if self.pivots.contains_key(&free) {
                continue;
            }
            let mut v = vec![GaussRat::zero(); self.ncols];
            v[free] = GaussRat::one();
            for (&p, row) in &self.pivots {
                if let Some(c) = row.get(&free) {
                    v[p] = -c;
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(entries: &[(usize, i64)]) -> SparseRow {
        entries.iter().map(|&(c, v)| (c, GaussRat::from_i64(v))).collect()
    }

    #[test]
    fn kernel_of_small_system() {
        // x0 + x1 − x2 = 0, x1 + 2x2 = 0, duplicate of the first
        let mut e = Eliminator::new(3);
        e.push(row(&[(0, 1), (1, 1), (2, -1)]));
        e.push(row(&[(1, 1), (2, 2)]));
        e.push(row(&[(0, 2), (1, 2), (2, -2)]));
        assert_eq!(e.rank(), 2);
        let k = e.kernel();
        assert_eq!(k.len(), 1);
        let expect: Vec<GaussRat> = [3, -2, 1].iter().map(|&v| GaussRat::from_i64(v)).collect();
        assert_eq!(k[0], expect);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        let mut e = Eliminator::new(2);
        e.push(row(&[(0, 1), (1, 1)]));
        e.push(row(&[(0, 1), (1, -1)]));
        assert!(e.kernel().is_empty());
    }
}

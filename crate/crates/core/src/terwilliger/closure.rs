use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::block::{BlockMatrix, ClassLayout};
use crate::error::{Error, Result};
use crate::linalg::{EchelonBasis, Rat, RatMatrix};
use crate::scheme::GroupScheme;

/// Default cap on stored matrix entries across a span basis.
pub const DEFAULT_ENTRY_CAP: usize = 1 << 24;

/// A subalgebra of the element-indexed matrices that contains every
/// `E_i^*`, stored as one echelon basis per block `(i, k)`.
#[derive(Clone, Debug)]
pub struct TerwilligerBasis {
    layout: ClassLayout,
    /// `(i, k) -> [(j, E_i^* A_j E_k^*)]` over the nonzero products.
    pieces: BTreeMap<(usize, usize), Vec<(usize, RatMatrix)>>,
    blocks: BTreeMap<(usize, usize), EchelonBasis>,
    t0_rank: usize,
    closed: bool,
}

fn matrix_of(layout: &ClassLayout, i: usize, k: usize, v: &[Rat]) -> RatMatrix {
    RatMatrix::from_vec(layout.size(i), layout.size(k), v.to_vec()).expect("block length")
}

/// Span of the `E_i^* A_j E_k^*` with `p_{ij}^k != 0`. These have disjoint
/// supports, so the rank must equal the nonzero-triple count.
pub fn t0_basis(scheme: &GroupScheme) -> Result<TerwilligerBasis> {
    let layout = ClassLayout::new(scheme.partition());
    let g = scheme.group();
    let part = scheme.partition();
    let r = layout.class_count();
    let mut pieces = BTreeMap::new();
    let mut blocks = BTreeMap::new();
    let mut t0_rank = 0;
    for i in 0..r {
        for k in 0..r {
            let mut by_j: BTreeMap<usize, RatMatrix> = BTreeMap::new();
            for (row, &x) in layout.class(i).iter().enumerate() {
                let xi = g.inv(x);
                for (col, &y) in layout.class(k).iter().enumerate() {
                    let j = part.class_of(g.mul(y, xi));
                    by_j.entry(j)
                        .or_insert_with(|| RatMatrix::zeros(layout.size(i), layout.size(k)))
                        .set(row, col, Rat::one());
                }
            }
            let mut basis = EchelonBasis::new(layout.block_len(i, k));
            for m in by_j.values() {
                if !basis.insert(m.as_slice().to_vec())? {
                    return Err(Error::InternalInconsistency(format!(
                        "dependent T0 spanning matrix in block ({i},{k})"
                    )));
                }
            }
            t0_rank += basis.rank();
            pieces.insert((i, k), by_j.into_iter().collect::<Vec<_>>());
            blocks.insert((i, k), basis);
        }
    }
    let triples = scheme.nonzero_triple_count();
    if t0_rank != triples {
        return Err(Error::InternalInconsistency(format!(
            "T0 rank {t0_rank} differs from nonzero triple count {triples}"
        )));
    }
    Ok(TerwilligerBasis {
        layout,
        pieces,
        blocks,
        t0_rank,
        closed: false,
    })
}

/// `T(G)`: the closure of `T0` under multiplication by the spanning
/// matrices `E_i^* A_j E_k^*` on both sides.
pub fn terwilliger_closure(scheme: &GroupScheme, entry_cap: usize) -> Result<TerwilligerBasis> {
    let mut t = t0_basis(scheme)?;
    t.close(entry_cap)?;
    Ok(t)
}

impl TerwilligerBasis {
    pub fn layout(&self) -> &ClassLayout {
        &self.layout
    }

    pub fn rank(&self) -> usize {
        self.blocks.values().map(EchelonBasis::rank).sum()
    }

    pub fn t0_rank(&self) -> usize {
        self.t0_rank
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    /// Only meaningful once closed.
    pub fn triply_regular(&self) -> bool {
        self.rank() == self.t0_rank
    }

    pub fn block_basis(&self, i: usize, k: usize) -> &EchelonBasis {
        &self.blocks[&(i, k)]
    }

    /// Nonzero `E_i^* A_j E_k^*` blocks for the given `(i, k)`, keyed by `j`.
    pub fn pieces(&self, i: usize, k: usize) -> &[(usize, RatMatrix)] {
        &self.pieces[&(i, k)]
    }

    pub fn stored_entries(&self) -> usize {
        self.blocks
            .iter()
            .map(|(&(i, k), b)| b.rank() * self.layout.block_len(i, k))
            .sum()
    }

    /// Basis elements, block by block.
    pub fn basis_matrices(&self) -> Vec<BlockMatrix> {
        let mut out = Vec::with_capacity(self.rank());
        for (&(i, k), b) in &self.blocks {
            for v in b.vectors() {
                out.push(BlockMatrix::single(i, k, matrix_of(&self.layout, i, k, v)));
            }
        }
        out
    }

    pub fn contains(&self, m: &BlockMatrix) -> bool {
        m.blocks().all(|(&(i, k), b)| {
            self.blocks[&(i, k)].contains(b.as_slice()).expect("block length")
        })
    }

    fn close(&mut self, entry_cap: usize) -> Result<()> {
        let r = self.layout.class_count();
        let mut work: Vec<((usize, usize), RatMatrix)> = Vec::new();
        for (&key, ps) in &self.pieces {
            for (_, m) in ps {
                work.push((key, m.clone()));
            }
        }
        work.reverse();
        let mut entries = self.stored_entries();
        if entries > entry_cap {
            return Err(Error::DimensionLimitExceeded {
                entries,
                cap: entry_cap,
            });
        }
        while let Some(((a, k), m)) = work.pop() {
            let mut products = Vec::new();
            for i in 0..r {
                for (_, left) in &self.pieces[&(i, a)] {
                    products.push(((i, k), left.matmul(&m)));
                }
            }
            for k2 in 0..r {
                for (_, right) in &self.pieces[&(k, k2)] {
                    products.push(((a, k2), m.matmul(right)));
                }
            }
            for (key, p) in products {
                let basis = self.blocks.get_mut(&key).expect("all blocks present");
                let residue = basis.reduce(p.as_slice())?;
                if residue.iter().all(Zero::is_zero) {
                    continue;
                }
                basis.insert(residue.clone())?;
                entries += self.layout.block_len(key.0, key.1);
                if entries > entry_cap {
                    return Err(Error::DimensionLimitExceeded {
                        entries,
                        cap: entry_cap,
                    });
                }
                work.push((key, matrix_of(&self.layout, key.0, key.1, &residue)));
            }
        }
        self.closed = true;
        Ok(())
    }

    /// The whole span flattened to `|G|^2` coordinates; for cross-checks on small groups.
    pub fn to_dense_span(&self) -> EchelonBasis {
        let n = self.layout.order();
        let mut out = EchelonBasis::new(n * n);
        for m in self.basis_matrices() {
            out.insert(m.to_dense(&self.layout).into_vec()).expect("n^2 coordinates");
        }
        out
    }
}

/// `A_0, ..., A_d, E_0^*, ..., E_d^*` as dense matrices, in that order.
pub fn scheme_generators(scheme: &GroupScheme) -> Vec<RatMatrix> {
    let r = scheme.rank();
    let mut gens: Vec<RatMatrix> = (0..r)
        .map(|i| scheme.adjacency_matrix(i).expect("valid class index"))
        .collect();
    gens.extend((0..r).map(|i| scheme.dual_idempotent(i).expect("valid class index")));
    gens
}

/// Smallest subspace containing the generators and closed under
/// multiplication by each generator on both sides. Contains the generated
/// algebra whenever the identity is among the generators.
pub fn algebra_closure(generators: &[RatMatrix], entry_cap: usize) -> Result<EchelonBasis> {
    let n = generators.first().map_or(0, RatMatrix::rows);
    for g in generators {
        if !g.is_square() || g.rows() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.rows(),
            });
        }
    }
    let mut basis = EchelonBasis::new(n * n);
    let mut work: Vec<RatMatrix> = Vec::new();
    let push = |basis: &mut EchelonBasis, work: &mut Vec<RatMatrix>, m: RatMatrix| -> Result<()> {
        let residue = basis.reduce(m.as_slice())?;
        if residue.iter().all(Zero::is_zero) {
            return Ok(());
        }
        basis.insert(residue.clone())?;
        let entries = basis.rank() * n * n;
        if entries > entry_cap {
            return Err(Error::DimensionLimitExceeded {
                entries,
                cap: entry_cap,
            });
        }
        work.push(RatMatrix::from_vec(n, n, residue).expect("n^2 entries"));
        Ok(())
    };
    for g in generators {
        push(&mut basis, &mut work, g.clone())?;
    }
    while let Some(w) = work.pop() {
        for g in generators {
            push(&mut basis, &mut work, g.matmul(&w))?;
            push(&mut basis, &mut work, w.matmul(g))?;
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{frobenius_field_group, symmetric};
    use crate::group::cyclic;
    use crate::scheme::build_scheme;

    #[test]
    fn identity_closure() {
        let b = algebra_closure(&[RatMatrix::identity(3)], DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(b.rank(), 1);
    }

    #[test]
    fn cyclic_two() {
        let s = build_scheme(&cyclic(2));
        let t = terwilliger_closure(&s, DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!((t.t0_rank(), t.rank()), (4, 4));
    }

    #[test]
    fn order_six_matches_dense() {
        let s = build_scheme(&frobenius_field_group(3, 1, 64).unwrap());
        let t = terwilliger_closure(&s, DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(t.rank(), 11);
        assert!(t.triply_regular());
        let dense = algebra_closure(&scheme_generators(&s), DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(dense, t.to_dense_span());
    }

    #[test]
    fn s4_closure_agrees_with_dense() {
        let s = build_scheme(&symmetric(4, 64).unwrap());
        let t = terwilliger_closure(&s, DEFAULT_ENTRY_CAP).unwrap();
        assert!(t.rank() >= t.t0_rank());
        let dense = algebra_closure(&scheme_generators(&s), DEFAULT_ENTRY_CAP).unwrap();
        assert_eq!(dense, t.to_dense_span());
    }

    #[test]
    fn entry_cap() {
        let s = build_scheme(&cyclic(6));
        let err = terwilliger_closure(&s, 10).unwrap_err();
        assert!(matches!(err, Error::DimensionLimitExceeded { .. }));
    }
}

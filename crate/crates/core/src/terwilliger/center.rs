use num_traits::Zero;

use super::block::{BlockMatrix, ClassLayout};
use super::closure::TerwilligerBasis;
use crate::error::Result;
use crate::linalg::{EchelonBasis, Rat, RatMatrix};

/// Basis of `Z(T)`. A central element commutes with every `E_i^*`, so it is
/// block diagonal; the unknowns are its coordinates over the diagonal-block
/// bases, and the equations are `z_ii L - L z_kk = 0` for every spanning
/// block `L = E_i^* A_j E_k^*`.
pub fn center_basis(t: &TerwilligerBasis) -> Result<Vec<BlockMatrix>> {
    let layout = t.layout();
    let r = layout.class_count();
    let diag: Vec<Vec<RatMatrix>> = (0..r)
        .map(|i| {
            t.block_basis(i, i)
                .vectors()
                .iter()
                .map(|v| RatMatrix::from_vec(layout.size(i), layout.size(i), v.clone()).expect("square block"))
                .collect()
        })
        .collect();
    let mut offset = vec![0usize; r + 1];
    for i in 0..r {
        offset[i + 1] = offset[i] + diag[i].len();
    }
    let unknowns = offset[r];
    let mut equations = EchelonBasis::new(unknowns);

    for i in 0..r {
        for k in 0..r {
            for (_, l) in t.pieces(i, k) {
                let left: Vec<RatMatrix> = diag[i].iter().map(|b| b.matmul(l)).collect();
                let right: Vec<RatMatrix> = diag[k].iter().map(|b| l.matmul(b)).collect();
                for entry in 0..layout.block_len(i, k) {
                    let mut row = vec![Rat::zero(); unknowns];
                    for (s, m) in left.iter().enumerate() {
                        row[offset[i] + s] += &m.as_slice()[entry];
                    }
                    for (s, m) in right.iter().enumerate() {
                        row[offset[k] + s] -= &m.as_slice()[entry];
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        equations.insert(row)?;
                    }
                }
            }
        }
    }

    let solutions = equations.null_space();
    Ok(solutions
        .vectors()
        .iter()
        .map(|c| {
            let mut z = BlockMatrix::zero();
            for i in 0..r {
                let mut block = RatMatrix::zeros(layout.size(i), layout.size(i));
                for (s, b) in diag[i].iter().enumerate() {
                    let coeff = &c[offset[i] + s];
                    if !coeff.is_zero() {
                        block = &block + &b.scale(coeff);
                    }
                }
                z.set_block(i, i, block);
            }
            z
        })
        .collect())
}

/// Concatenated diagonal blocks of a block-diagonal matrix.
pub fn flatten_diagonal(layout: &ClassLayout, m: &BlockMatrix) -> Vec<Rat> {
    let mut out = Vec::new();
    for i in 0..layout.class_count() {
        match m.block(i, i) {
            Some(b) => out.extend_from_slice(b.as_slice()),
            None => out.extend(std::iter::repeat_with(Rat::zero).take(layout.block_len(i, i))),
        }
    }
    out
}

pub fn unflatten_diagonal(layout: &ClassLayout, v: &[Rat]) -> BlockMatrix {
    let mut out = BlockMatrix::zero();
    let mut at = 0;
    for i in 0..layout.class_count() {
        let len = layout.block_len(i, i);
        let block = RatMatrix::from_vec(layout.size(i), layout.size(i), v[at..at + len].to_vec())
            .expect("square block");
        out.set_block(i, i, block);
        at += len;
    }
    out
}

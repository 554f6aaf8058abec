//! Matrices indexed by group elements, stored in blocks `E_i^* M E_k^*`
//! along the conjugacy-class partition.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::group::ConjugacyPartition;
use crate::linalg::{Rat, RatMatrix};

/// Which class each element sits in and its position inside the class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassLayout {
    classes: Vec<Vec<usize>>,
    slot: Vec<(usize, usize)>,
}

impl ClassLayout {
    pub fn new(partition: &ConjugacyPartition) -> Self {
        let classes = partition.classes().to_vec();
        let n = classes.iter().map(Vec::len).sum();
        let mut slot = vec![(0, 0); n];
        for (i, c) in classes.iter().enumerate() {
            for (pos, &x) in c.iter().enumerate() {
                slot[x] = (i, pos);
            }
        }
        ClassLayout { classes, slot }
    }

    pub fn order(&self) -> usize {
        self.slot.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn size(&self, i: usize) -> usize {
        self.classes[i].len()
    }

    pub fn slot(&self, x: usize) -> (usize, usize) {
        self.slot[x]
    }

    pub fn block_len(&self, i: usize, k: usize) -> usize {
        self.size(i) * self.size(k)
    }
}

/// Sparse collection of nonzero blocks; `(i, k)` holds a `|C_i| x |C_k|` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlockMatrix {
    blocks: BTreeMap<(usize, usize), RatMatrix>,
}

impl BlockMatrix {
    pub fn zero() -> Self {
        BlockMatrix::default()
    }

    pub fn identity(layout: &ClassLayout) -> Self {
        let mut m = BlockMatrix::zero();
        for i in 0..layout.class_count() {
            m.set_block(i, i, RatMatrix::identity(layout.size(i)));
        }
        m
    }

    pub fn single(i: usize, k: usize, block: RatMatrix) -> Self {
        let mut m = BlockMatrix::zero();
        m.set_block(i, k, block);
        m
    }

    /// Stores `block` at `(i, k)`, dropping it when zero.
    pub fn set_block(&mut self, i: usize, k: usize, block: RatMatrix) {
        if block.is_zero() {
            self.blocks.remove(&(i, k));
        } else {
            self.blocks.insert((i, k), block);
        }
    }

    pub fn block(&self, i: usize, k: usize) -> Option<&RatMatrix> {
        self.blocks.get(&(i, k))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (&(usize, usize), &RatMatrix)> {
        self.blocks.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_block_diagonal(&self) -> bool {
        self.blocks.keys().all(|&(i, k)| i == k)
    }

    pub fn mul(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut out: BTreeMap<(usize, usize), RatMatrix> = BTreeMap::new();
        for (&(i, a), left) in &self.blocks {
            for (&(_, k), right) in other.blocks.range((a, 0)..(a + 1, 0)) {
                let prod = left.matmul(right);
                match out.get_mut(&(i, k)) {
                    Some(acc) => *acc = &*acc + &prod,
                    None => {
                        out.insert((i, k), prod);
                    }
                }
            }
        }
        out.retain(|_, m| !m.is_zero());
        BlockMatrix { blocks: out }
    }

    pub fn add(&self, other: &BlockMatrix) -> BlockMatrix {
        let mut out = self.clone();
        for (&(i, k), b) in &other.blocks {
            let sum = match out.blocks.get(&(i, k)) {
                Some(a) => a + b,
                None => b.clone(),
            };
            out.set_block(i, k, sum);
        }
        out
    }

    pub fn sub(&self, other: &BlockMatrix) -> BlockMatrix {
        self.add(&other.scale(&-Rat::from_integer(1.into())))
    }

    pub fn scale(&self, s: &Rat) -> BlockMatrix {
        if s.is_zero() {
            return BlockMatrix::zero();
        }
        BlockMatrix {
            blocks: self.blocks.iter().map(|(&key, m)| (key, m.scale(s))).collect(),
        }
    }

    pub fn trace(&self) -> Rat {
        self.blocks
            .iter()
            .filter(|((i, k), _)| i == k)
            .fold(Rat::zero(), |acc, (_, m)| acc + m.trace())
    }

    /// Dense matrix in element order.
    pub fn to_dense(&self, layout: &ClassLayout) -> RatMatrix {
        let n = layout.order();
        let mut out = RatMatrix::zeros(n, n);
        for (&(i, k), m) in &self.blocks {
            for (r, &x) in layout.class(i).iter().enumerate() {
                for (c, &y) in layout.class(k).iter().enumerate() {
                    let v = m.get(r, c);
                    if !v.is_zero() {
                        out.set(x, y, v.clone());
                    }
                }
            }
        }
        out
    }

    pub fn from_dense(layout: &ClassLayout, m: &RatMatrix) -> BlockMatrix {
        let r = layout.class_count();
        let mut out = BlockMatrix::zero();
        for i in 0..r {
            for k in 0..r {
                let block = RatMatrix::from_fn(layout.size(i), layout.size(k), |a, b| {
                    m.get(layout.class(i)[a], layout.class(k)[b]).clone()
                });
                out.set_block(i, k, block);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::frobenius_field_group;
    use crate::group::conjugacy_classes;
    use crate::linalg::rat::int;

    fn layout() -> ClassLayout {
        ClassLayout::new(&conjugacy_classes(&frobenius_field_group(3, 1, 64).unwrap()))
    }

    #[test]
    fn dense_round_trip() {
        let l = layout();
        let m = RatMatrix::from_fn(6, 6, |r, c| int((r * 6 + c) as i64 % 5));
        let b = BlockMatrix::from_dense(&l, &m);
        assert_eq!(b.to_dense(&l), m);
    }

    #[test]
    fn product_matches_dense() {
        let l = layout();
        let x = RatMatrix::from_fn(6, 6, |r, c| int((r + 2 * c) as i64 % 3 - 1));
        let y = RatMatrix::from_fn(6, 6, |r, c| int((3 * r + c) as i64 % 4));
        let bx = BlockMatrix::from_dense(&l, &x);
        let by = BlockMatrix::from_dense(&l, &y);
        assert_eq!(bx.mul(&by).to_dense(&l), x.matmul(&y));
        assert_eq!(bx.sub(&by).to_dense(&l), &x - &y);
        assert_eq!(BlockMatrix::identity(&l).to_dense(&l), RatMatrix::identity(6));
        assert_eq!(bx.trace(), x.trace());
    }
}

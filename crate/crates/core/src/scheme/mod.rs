//! The group association scheme on the conjugacy classes of a finite group.
//!
//! Relations are `x ~_i y` iff `y x^-1` lies in class `C_i`; the base point for
//! dual idempotents is always the identity.

mod verify;

pub use verify::{verify_scheme_axioms, AxiomCheck, SchemeVerification};

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{conjugacy_classes, ConjugacyPartition, FiniteGroup};
use crate::linalg::rat::rat;
use crate::linalg::RatMatrix;

#[derive(Clone, Debug)]
pub struct GroupScheme {
    group: FiniteGroup,
    partition: ConjugacyPartition,
    class_sizes: Vec<usize>,
    /// `p_{ij}^k` for `i <= j`, nonzero entries only.
    tensor: BTreeMap<(usize, usize, usize), u64>,
}

/// Counts `p_{ij}^k = |{a in C_i : z a^-1 in C_j}|` for a fixed `z in C_k`,
/// all `(i, j)` in one pass over the group. Returns the full ordered table.
fn count_from(g: &FiniteGroup, part: &ConjugacyPartition, z: usize) -> BTreeMap<(usize, usize), u64> {
    let mut counts = BTreeMap::new();
    for a in g.elements() {
        let i = part.class_of(a);
        let j = part.class_of(g.mul(z, g.inv(a)));
        *counts.entry((i, j)).or_insert(0) += 1;
    }
    counts
}

pub fn build_scheme(group: &FiniteGroup) -> GroupScheme {
    let partition = conjugacy_classes(group);
    let class_sizes = partition.sizes();
    let mut tensor = BTreeMap::new();
    for k in 0..partition.len() {
        let z = partition.class(k)[0];
        let counts = count_from(group, &partition, z);
        for (&(i, j), &c) in &counts {
            let mirrored = counts.get(&(j, i)).copied().unwrap_or(0);
            assert_eq!(c, mirrored, "group schemes are commutative: p_{i}{j}^{k}");
            if i <= j {
                tensor.insert((i, j, k), c);
            }
        }
    }
    GroupScheme {
        group: group.clone(),
        partition,
        class_sizes,
        tensor,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcWitness {
    pub h: usize,
    pub i: usize,
    /// Every `j` with `p_{ij}^h != 0`; never of length one.
    pub js: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcVerdict {
    pub almost_commutative: bool,
    pub witness: Option<AcWitness>,
}

impl GroupScheme {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn partition(&self) -> &ConjugacyPartition {
        &self.partition
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Number of classes, `d + 1`.
    pub fn rank(&self) -> usize {
        self.class_sizes.len()
    }

    pub fn d(&self) -> usize {
        self.rank() - 1
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn p(&self, i: usize, j: usize, k: usize) -> u64 {
        let key = if i <= j { (i, j, k) } else { (j, i, k) };
        self.tensor.get(&key).copied().unwrap_or(0)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.rank() {
            return Err(Error::IndexOutOfRange {
                index: i,
                len: self.rank(),
            });
        }
        Ok(())
    }

    /// All ordered `(i, j, k)` with `p_{ij}^k != 0`, sorted.
    pub fn nonzero_triples(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(2 * self.tensor.len());
        for &(i, j, k) in self.tensor.keys() {
            out.push((i, j, k));
            if i != j {
                out.push((j, i, k));
            }
        }
        out.sort_unstable();
        out
    }

    pub fn nonzero_triple_count(&self) -> usize {
        self.tensor.keys().map(|&(i, j, _)| if i == j { 1 } else { 2 }).sum()
    }

    /// Nonzero entries `[i, j, k, p]` over all ordered `(i, j)`.
    pub fn tensor_entries(&self) -> Vec<[u64; 4]> {
        self.nonzero_triples()
            .into_iter()
            .map(|(i, j, k)| [i as u64, j as u64, k as u64, self.p(i, j, k)])
            .collect()
    }

    /// `(p_{ij}^k)_k`, the class-sum product `C_i C_j` in the class basis.
    pub fn class_product_expansion(&self, i: usize, j: usize) -> Result<Vec<u64>> {
        self.check_index(i)?;
        self.check_index(j)?;
        Ok((0..self.rank()).map(|k| self.p(i, j, k)).collect())
    }

    pub fn adjacency_matrix(&self, i: usize) -> Result<RatMatrix> {
        self.check_index(i)?;
        let g = &self.group;
        Ok(RatMatrix::from_fn(g.order(), g.order(), |x, y| {
            let rel = self.partition.class_of(g.mul(y, g.inv(x)));
            rat(i64::from(rel == i), 1)
        }))
    }

    pub fn dual_idempotent(&self, i: usize) -> Result<RatMatrix> {
        self.check_index(i)?;
        let diag: Vec<_> = self
            .group
            .elements()
            .map(|y| rat(i64::from(self.partition.class_of(y) == i), 1))
            .collect();
        Ok(RatMatrix::diagonal(&diag))
    }

    /// For every ordered `h != i` exactly one `j` has `p_{ij}^h != 0`.
    pub fn is_almost_commutative(&self) -> AcVerdict {
        let r = self.rank();
        let mut partners: Vec<Vec<usize>> = vec![Vec::new(); r * r];
        for (i, j, h) in self.nonzero_triples() {
            partners[h * r + i].push(j);
        }
        for h in 0..r {
            for i in (0..r).filter(|&i| i != h) {
                let js = &partners[h * r + i];
                if js.len() != 1 {
                    return AcVerdict {
                        almost_commutative: false,
                        witness: Some(AcWitness { h, i, js: js.clone() }),
                    };
                }
            }
        }
        AcVerdict {
            almost_commutative: true,
            witness: None,
        }
    }

    pub fn report(&self, with_tensor: bool) -> SchemeReport {
        let ac = self.is_almost_commutative();
        SchemeReport {
            label: self.group.label().to_string(),
            order: self.order(),
            d: self.d(),
            class_sizes: self.class_sizes.clone(),
            class_representatives: self.partition.classes().iter().map(|c| c[0]).collect(),
            inverse_class: (0..self.rank()).map(|i| self.partition.inverse_class(i)).collect(),
            nonzero_triples: self.nonzero_triple_count(),
            almost_commutative: ac.almost_commutative,
            witness: ac.witness,
            tensor: with_tensor.then(|| self.tensor_entries()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SchemeReport {
    pub label: String,
    pub order: usize,
    pub d: usize,
    pub class_sizes: Vec<usize>,
    pub class_representatives: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub nonzero_triples: usize,
    pub almost_commutative: bool,
    pub witness: Option<AcWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tensor: Option<Vec<[u64; 4]>>,
}

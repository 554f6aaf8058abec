use std::collections::VecDeque;

use num_traits::Zero;
use serde::Serialize;

use super::block::{BlockMatrix, ClassLayout};
use super::center::flatten_diagonal;
use super::closure::TerwilligerBasis;
use super::idempotents::primary_idempotent_blocks;
use crate::error::{Error, Result};
use crate::linalg::{min_poly, rational_roots, EchelonBasis, Poly, Rat, RatMatrix};

/// Generic central elements tried per piece before giving up on it.
pub const MAX_ATTEMPTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ComponentRole {
    Primary,
    Nonprimary,
    /// A central idempotent whose piece of the center did not split over the rationals.
    Unsplit,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub role: ComponentRole,
    /// `dim f T f`.
    pub dim: usize,
    /// `dim f Z(T)`; 1 for a simple component.
    pub center_dim: usize,
    pub idempotent: BlockMatrix,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SplitStatus {
    Complete,
    PartialSplit { residual_degrees: Vec<usize> },
}

#[derive(Clone, Debug)]
pub struct WedderburnReport {
    pub dim_t: usize,
    pub dim_z: usize,
    pub primary_dim: usize,
    /// Primary first, then the rest by decreasing dimension.
    pub components: Vec<Component>,
    pub split_status: SplitStatus,
    pub layout: ClassLayout,
}

impl WedderburnReport {
    pub fn nonprimary_component_dims(&self) -> Vec<usize> {
        self.components
            .iter()
            .filter(|c| c.role != ComponentRole::Primary)
            .map(|c| c.dim)
            .collect()
    }

    pub fn primary(&self) -> Option<&Component> {
        self.components.iter().find(|c| c.role == ComponentRole::Primary)
    }

    pub fn idempotent_dense(&self, index: usize) -> RatMatrix {
        self.components[index].idempotent.to_dense(&self.layout)
    }

    /// Each idempotent squares to itself, distinct ones multiply to zero, and
    /// together they sum to the identity.
    pub fn idempotents_consistent(&self) -> bool {
        let fs: Vec<&BlockMatrix> = self.components.iter().map(|c| &c.idempotent).collect();
        let mut sum = BlockMatrix::zero();
        for (a, f) in fs.iter().enumerate() {
            if &f.mul(f) != *f {
                return false;
            }
            for g in &fs[a + 1..] {
                if !f.mul(g).is_zero() || !g.mul(f).is_zero() {
                    return false;
                }
            }
            sum = sum.add(f);
        }
        sum == BlockMatrix::identity(&self.layout)
    }
}

/// `dim e Z(T)`, stopping once it exceeds `stop_above`.
fn piece_dim(layout: &ClassLayout, e: &BlockMatrix, center: &[BlockMatrix], stop_above: usize) -> Result<usize> {
    let width = flatten_diagonal(layout, e).len();
    let mut span = EchelonBasis::new(width);
    for z in center {
        span.insert(flatten_diagonal(layout, &e.mul(z)))?;
        if span.rank() > stop_above {
            break;
        }
    }
    Ok(span.rank())
}

/// Eigenprojections of the central element `w` inside the piece `e`, one per
/// rational eigenvalue. A central element is diagonalizable and block
/// diagonal, so its minimal polynomial is the lcm of those of its diagonal
/// blocks and each projection can be formed block by block.
fn rational_projections(w: &BlockMatrix, e: &BlockMatrix) -> Result<Vec<BlockMatrix>> {
    let blocks: Vec<(usize, &RatMatrix)> = e
        .blocks()
        .map(|(&(i, _), _)| i)
        .map(|i| (i, w.block(i, i)))
        .filter_map(|(i, b)| b.map(|b| (i, b)))
        .collect();
    let mut local: Vec<(usize, Poly, Vec<Rat>)> = Vec::new();
    let mut eigenvalues: Vec<Rat> = Vec::new();
    for &(i, b) in &blocks {
        let mu = min_poly(b);
        let found = rational_roots(&mu);
        if !found.exhaustive {
            log::warn!("rational root search on a block of size {} was not exhaustive", b.rows());
        }
        eigenvalues.extend(found.roots.iter().cloned());
        local.push((i, mu, found.roots));
    }
    eigenvalues.sort();
    eigenvalues.dedup();

    let mut out = Vec::new();
    for lambda in &eigenvalues {
        let mut p = BlockMatrix::zero();
        for ((i, mu, roots), &(_, b)) in local.iter().zip(&blocks) {
            if !roots.contains(lambda) {
                continue;
            }
            let (cofactor, rem) = mu.div_rem(&Poly::linear(lambda));
            debug_assert!(rem.is_zero());
            let value = cofactor.eval(lambda);
            if value.is_zero() {
                return Err(Error::InternalInconsistency(format!(
                    "central element has a repeated eigenvalue {lambda}"
                )));
            }
            p.set_block(*i, *i, cofactor.eval_matrix(b).scale(&value.recip()));
        }
        let f = e.mul(&p);
        if f.is_zero() {
            continue;
        }
        if f.mul(&f) != f {
            return Err(Error::InternalInconsistency("eigenprojection is not idempotent".into()));
        }
        out.push(f);
    }
    Ok(out)
}

enum Outcome {
    Final,
    Split(Vec<BlockMatrix>),
    Stuck,
}

fn try_split(layout: &ClassLayout, e: &BlockMatrix, center: &[BlockMatrix]) -> Result<Outcome> {
    if piece_dim(layout, e, center, 1)? <= 1 {
        return Ok(Outcome::Final);
    }
    for attempt in 1..=MAX_ATTEMPTS {
        let mut z = BlockMatrix::zero();
        for (b, c) in center.iter().enumerate() {
            z = z.add(&c.scale(&Rat::from_integer((1 + attempt * b).into())));
        }
        let w = e.mul(&z);
        let mut parts = rational_projections(&w, e)?;
        let rest = parts.iter().fold(e.clone(), |acc, f| acc.sub(f));
        if !rest.is_zero() {
            parts.push(rest);
        }
        if parts.len() > 1 {
            return Ok(Outcome::Split(parts));
        }
        log::debug!("central element attempt {attempt} does not split this piece");
    }
    Ok(Outcome::Stuck)
}

/// Rank of `f T f = f T` for a central block-diagonal `f`, block by block.
pub fn component_dim(t: &TerwilligerBasis, f: &BlockMatrix) -> Result<usize> {
    let layout = t.layout();
    let r = layout.class_count();
    let mut dim = 0;
    for i in 0..r {
        let Some(fi) = f.block(i, i) else { continue };
        for k in 0..r {
            let mut span = EchelonBasis::new(layout.block_len(i, k));
            for v in t.block_basis(i, k).vectors() {
                let b = RatMatrix::from_vec(layout.size(i), layout.size(k), v.clone())
                    .expect("block length");
                span.insert(fi.matmul(&b).into_vec())?;
            }
            dim += span.rank();
        }
    }
    Ok(dim)
}

/// Splits the identity into central idempotents using the rational
/// eigenprojections of generic central elements `sum_b (1 + a b) z_b`
/// (attempt `a = 1, 2, ...`), recursing on pieces of the center that stay
/// composite. Irrational eigenvalues leave an `Unsplit` piece.
pub fn split_center(t: &TerwilligerBasis, center: &[BlockMatrix]) -> Result<WedderburnReport> {
    let layout = t.layout();
    let primary = primary_idempotent_blocks(layout);
    let mut queue = VecDeque::from([BlockMatrix::identity(layout)]);
    let mut finished: Vec<(BlockMatrix, usize, bool)> = Vec::new();
    while let Some(e) = queue.pop_front() {
        match try_split(layout, &e, center)? {
            Outcome::Final => finished.push((e, 1, true)),
            Outcome::Split(parts) => queue.extend(parts),
            Outcome::Stuck => {
                let m = piece_dim(layout, &e, center, usize::MAX)?;
                finished.push((e, m, false));
            }
        }
    }
    let mut components = Vec::with_capacity(finished.len());
    let mut residual_degrees = Vec::new();
    for (f, center_dim, simple) in finished {
        let role = if !simple {
            residual_degrees.push(center_dim);
            ComponentRole::Unsplit
        } else if f == primary {
            ComponentRole::Primary
        } else {
            ComponentRole::Nonprimary
        };
        components.push(Component {
            role,
            dim: component_dim(t, &f)?,
            center_dim,
            idempotent: f,
        });
    }
    components.sort_by_key(|c| (c.role, std::cmp::Reverse(c.dim)));
    let d1 = layout.class_count();
    Ok(WedderburnReport {
        dim_t: t.rank(),
        dim_z: center.len(),
        primary_dim: d1 * d1,
        components,
        split_status: if residual_degrees.is_empty() {
            SplitStatus::Complete
        } else {
            SplitStatus::PartialSplit { residual_degrees }
        },
        layout: layout.clone(),
    })
}

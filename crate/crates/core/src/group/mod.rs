//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..n` with the identity pinned at 0. Every
//! matrix built downstream is indexed by these same integers.

mod classes;
mod perm;
mod subgroup;

pub use classes::{conjugacy_classes, ConjugacyPartition};
pub use perm::{group_from_permutations, group_from_permutations_bounded, PermutationClosure};
pub use subgroup::{
    center, derived_subgroup, is_elementary_abelian, lower_central_series, SubgroupSet,
};

use crate::error::{Error, Result};

/// Default cap on group order. Terwilliger algebra closure memory grows like
/// `dim T * n^2`, so larger groups are out of reach anyway.
pub const DEFAULT_MAX_ORDER: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
    label: String,
}

impl FiniteGroup {
    /// Builds a group from a full Cayley table, validating the Latin-square
    /// property, that element 0 is the identity, and associativity.
    pub fn from_table(table: Vec<Vec<usize>>, label: impl Into<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut mul = Vec::with_capacity(n * n);
        for (r, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {r} has length {}", row.len())));
            }
            mul.extend_from_slice(row);
        }
        let g = Self::from_flat(n, mul, label)?;
        g.check_associative()?;
        Ok(g)
    }

    /// Latin-square and identity checks; associativity is the caller's promise.
    pub(crate) fn from_flat(n: usize, mul: Vec<usize>, label: impl Into<String>) -> Result<Self> {
        debug_assert_eq!(mul.len(), n * n);
        let mut seen = vec![false; n];
        for r in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for c in 0..n {
                let x = mul[r * n + c];
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(format!("row {r} is not a permutation")));
                }
            }
        }
        for c in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for r in 0..n {
                if std::mem::replace(&mut seen[mul[r * n + c]], true) {
                    return Err(Error::InvalidTable(format!("column {c} is not a permutation")));
                }
            }
        }
        for g in 0..n {
            if mul[g] != g || mul[g * n] != g {
                return Err(Error::InvalidTable("element 0 is not the identity".into()));
            }
        }
        let mut inv = vec![0; n];
        for g in 0..n {
            inv[g] = (0..n)
                .find(|&h| mul[g * n + h] == 0)
                .expect("Latin square row contains the identity");
        }
        Ok(FiniteGroup {
            order: n,
            mul,
            inv,
            label: label.into(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// `by * g * by^-1`
    #[inline]
    pub fn conjugate(&self, g: usize, by: usize) -> usize {
        self.mul(self.mul(by, g), self.inv(by))
    }

    /// `[a, b] = a^-1 b^-1 a b`
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Exhaustive associativity check.
    pub fn check_associative(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Error::InvalidTable(format!(
                            "not associative at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Identity, inverse, Latin-square and associativity checks together.
    pub fn verify_axioms(&self) -> Result<()> {
        let g = Self::from_flat(self.order, self.mul.clone(), self.label.clone())?;
        if g.inv != self.inv {
            return Err(Error::InvalidTable("inverse table disagrees with products".into()));
        }
        self.check_associative()
    }

    /// Sorted multiset of element orders; a cheap isomorphism invariant.
    pub fn element_order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|g| self.element_order(g)).collect();
        v.sort_unstable();
        v
    }
}

pub fn cyclic(n: usize) -> FiniteGroup {
    assert!(n >= 1, "cyclic group needs n >= 1");
    let mul = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
    let inv = (0..n).map(|a| (n - a) % n).collect();
    FiniteGroup {
        order: n,
        mul,
        inv,
        label: format!("Z{n}"),
    }
}

/// `G x H` on index pairs `(g, h) -> g * |H| + h`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup, max_order: usize) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > max_order {
        return Err(Error::ClosureLimitExceeded {
            reached: n,
            max: max_order,
        });
    }
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        let (ag, ah) = (a / nh, a % nh);
        for b in 0..n {
            let (bg, bh) = (b / nh, b % nh);
            mul.push(g.mul(ag, bg) * nh + h.mul(ah, bh));
        }
    }
    let inv = (0..n).map(|a| g.inv(a / nh) * nh + h.inv(a % nh)).collect();
    Ok(FiniteGroup {
        order: n,
        mul,
        inv,
        label: format!("{}x{}", g.label(), h.label()),
    })
}

/// `H ⋊ K` with `(h1, k1)(h2, k2) = (h1 * action[k1](h2), k1 k2)`, pairs
/// flattened as `h * |K| + k`.
///
/// `action[k]` is the permutation of H's elements induced by `k`; it must be
/// an automorphism and `k -> action[k]` a homomorphism.
pub fn semidirect_product(
    h: &FiniteGroup,
    k: &FiniteGroup,
    action: &[Vec<usize>],
    max_order: usize,
) -> Result<FiniteGroup> {
    let (nh, nk) = (h.order(), k.order());
    if action.len() != nk {
        return Err(Error::DimensionMismatch {
            expected: nk,
            found: action.len(),
        });
    }
    let n = nh * nk;
    if n > max_order {
        return Err(Error::ClosureLimitExceeded {
            reached: n,
            max: max_order,
        });
    }
    for (ki, phi) in action.iter().enumerate() {
        let mut seen = vec![false; nh];
        if phi.len() != nh || phi.iter().any(|&x| x >= nh || std::mem::replace(&mut seen[x], true))
        {
            return Err(Error::ActionNotAutomorphism { k: ki });
        }
        for a in 0..nh {
            for b in 0..nh {
                if phi[h.mul(a, b)] != h.mul(phi[a], phi[b]) {
                    return Err(Error::ActionNotAutomorphism { k: ki });
                }
            }
        }
    }
    for k1 in 0..nk {
        for k2 in 0..nk {
            let composed = &action[k.mul(k1, k2)];
            if (0..nh).any(|x| composed[x] != action[k1][action[k2][x]]) {
                return Err(Error::ActionNotHomomorphism { k1, k2 });
            }
        }
    }
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        let (ah, ak) = (a / nk, a % nk);
        for b in 0..n {
            let (bh, bk) = (b / nk, b % nk);
            mul.push(h.mul(ah, action[ak][bh]) * nk + k.mul(ak, bk));
        }
    }
    let g = FiniteGroup::from_flat(n, mul, format!("{}:{}", h.label(), k.label()))?;
    Ok(g)
}

/// `G / N` with cosets indexed in order of their least element, plus the
/// projection `g -> index of gN`.
pub fn quotient(g: &FiniteGroup, n: &SubgroupSet) -> Result<(FiniteGroup, Vec<usize>)> {
    if let Some(by) = n.normality_witness(g) {
        return Err(Error::NotNormal { by });
    }
    let order = g.order();
    let mut rep_of = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if rep_of[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &m in n.members() {
            rep_of[g.mul(x, m)] = idx;
        }
    }
    let q = reps.len();
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            mul.push(rep_of[g.mul(a, b)]);
        }
    }
    let quotient = FiniteGroup::from_flat(q, mul, format!("{}/N{}", g.label(), n.order()))?;
    Ok((quotient, rep_of))
}

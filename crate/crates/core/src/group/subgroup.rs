use super::FiniteGroup;
use crate::error::{Error, Result};

/// A subgroup as a sorted list of element indices of its parent group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubgroupSet {
    members: Vec<usize>,
    parent_order: usize,
}

impl SubgroupSet {
    /// Subgroup generated by `gens` (closure under multiplication suffices in a finite group).
    pub fn generated_by(g: &FiniteGroup, gens: &[usize]) -> Self {
        let mut inside = vec![false; g.order()];
        inside[0] = true;
        let mut members = vec![0];
        let mut head = 0;
        for &x in gens {
            if !inside[x] {
                inside[x] = true;
                members.push(x);
            }
        }
        while head < members.len() {
            let a = members[head];
            for &s in gens {
                let p = g.mul(a, s);
                if !inside[p] {
                    inside[p] = true;
                    members.push(p);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        SubgroupSet {
            members,
            parent_order: g.order(),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        SubgroupSet {
            members: g.elements().collect(),
            parent_order: g.order(),
        }
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        SubgroupSet {
            members: vec![0],
            parent_order: g.order(),
        }
    }

    /// Validates closure before accepting an arbitrary element set.
    pub fn from_members(g: &FiniteGroup, mut members: Vec<usize>) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        let s = SubgroupSet {
            members,
            parent_order: g.order(),
        };
        if !s.contains(0) {
            return Err(Error::PreconditionUnmet("subset lacks the identity".into()));
        }
        for &a in &s.members {
            if !s.contains(g.inv(a)) || s.members.iter().any(|&b| !s.contains(g.mul(a, b))) {
                return Err(Error::PreconditionUnmet("subset is not closed".into()));
            }
        }
        Ok(s)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.parent_order
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.binary_search(&x).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.members.iter().all(|&x| other.contains(x))
    }

    /// An element whose conjugation moves the subgroup, if any.
    pub fn normality_witness(&self, g: &FiniteGroup) -> Option<usize> {
        g.elements()
            .find(|&by| self.members.iter().any(|&m| !self.contains(g.conjugate(m, by))))
    }

    pub fn is_normal_in(&self, g: &FiniteGroup) -> bool {
        self.normality_witness(g).is_none()
    }

    pub fn is_abelian_in(&self, g: &FiniteGroup) -> bool {
        self.members
            .iter()
            .all(|&a| self.members.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }
}

/// Subgroup generated by `[a, b]` for `a` in `a_set`, `b` in `b_set`.
fn commutator_subgroup(g: &FiniteGroup, a_set: &[usize], b_set: &[usize]) -> SubgroupSet {
    let mut seen = vec![false; g.order()];
    let mut gens = Vec::new();
    for &a in a_set {
        for &b in b_set {
            let c = g.commutator(a, b);
            if c != 0 && !std::mem::replace(&mut seen[c], true) {
                gens.push(c);
            }
        }
    }
    SubgroupSet::generated_by(g, &gens)
}

pub fn derived_subgroup(g: &FiniteGroup) -> SubgroupSet {
    let all: Vec<usize> = g.elements().collect();
    commutator_subgroup(g, &all, &all)
}

pub fn center(g: &FiniteGroup) -> SubgroupSet {
    let members = g
        .elements()
        .filter(|&z| g.elements().all(|x| g.mul(z, x) == g.mul(x, z)))
        .collect();
    SubgroupSet {
        members,
        parent_order: g.order(),
    }
}

/// `γ1 = G, γ(k+1) = [γk, G]`, listed until the first repeat (which is not repeated).
pub fn lower_central_series(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let all: Vec<usize> = g.elements().collect();
    let mut series = vec![SubgroupSet::whole(g)];
    loop {
        let next = commutator_subgroup(g, series.last().unwrap().members(), &all);
        if &next == series.last().unwrap() {
            return series;
        }
        series.push(next);
    }
}

fn smallest_prime_factor(n: usize) -> usize {
    (2..=n).find(|p| n.is_multiple_of(*p)).unwrap_or(n)
}

/// Abelian with every non-identity element of one prime order `p`.
/// The trivial subgroup qualifies with no prime.
pub fn is_elementary_abelian(s: &SubgroupSet, g: &FiniteGroup) -> (bool, Option<usize>) {
    if s.is_trivial() {
        return (true, None);
    }
    if !s.is_abelian_in(g) {
        return (false, None);
    }
    let p = smallest_prime_factor(s.order());
    let ok = s.members().iter().skip(1).all(|&x| g.element_order(x) == p);
    (ok, ok.then_some(p))
}

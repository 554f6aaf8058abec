use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{
    center, conjugacy_classes, derived_subgroup, is_elementary_abelian, lower_central_series,
    quotient, FiniteGroup, SubgroupSet,
};
use crate::scheme::GroupScheme;

/// Every class outside `G'` is a coset of `G'`. Abelian groups pass
/// degenerately: `G' = {e}` and every class is a singleton.
pub fn is_camina_group(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    conjugacy_classes(g)
        .classes()
        .iter()
        .filter(|c| !derived.contains(c[0]))
        .all(|c| is_coset(g, c, &derived))
}

fn is_coset(g: &FiniteGroup, class: &[usize], n: &SubgroupSet) -> bool {
    class.len() == n.order() && n.members().iter().all(|&m| class.binary_search(&g.mul(class[0], m)).is_ok())
}

/// `(G, K)` is a Camina pair: each `g` outside `K` is conjugate to all of `gK`.
pub fn is_camina_pair(g: &FiniteGroup, k: &SubgroupSet) -> Result<bool> {
    if let Some(by) = k.normality_witness(g) {
        return Err(Error::NotNormal { by });
    }
    let part = conjugacy_classes(g);
    Ok(g.elements().filter(|&x| !k.contains(x)).all(|x| {
        let c = part.class_of(x);
        k.members().iter().all(|&m| part.class_of(g.mul(x, m)) == c)
    }))
}

/// The pair-lemma condition `C_i C_j = C_j` for classes `C_i` inside `K`
/// and `C_j` outside it, read off the intersection numbers.
pub fn pair_product_condition(scheme: &GroupScheme, k: &SubgroupSet) -> bool {
    let part = scheme.partition();
    let r = scheme.rank();
    let inside: Vec<usize> = (0..r).filter(|&i| k.contains(part.class(i)[0])).collect();
    let outside: Vec<usize> = (0..r).filter(|&j| !k.contains(part.class(j)[0])).collect();
    inside.iter().all(|&i| {
        outside.iter().all(|&j| {
            (0..r).all(|h| (scheme.p(i, j, h) != 0) == (h == j))
        })
    })
}

/// `|C_G(x)| = |C_{G/K}(xK)|` for every `x` outside `K`.
fn centralizer_condition(g: &FiniteGroup, k: &SubgroupSet) -> Result<bool> {
    let (q, proj) = quotient(g, k)?;
    let cent = |grp: &FiniteGroup, x: usize| grp.elements().filter(|&y| grp.mul(x, y) == grp.mul(y, x)).count();
    Ok(g.elements()
        .filter(|&x| !k.contains(x))
        .all(|x| cent(g, x) == cent(&q, proj[x])))
}

/// Nontrivial cosets conjugate in `G/K` have conjugate representatives in `G`.
fn lifting_condition(g: &FiniteGroup, k: &SubgroupSet) -> Result<bool> {
    let (q, proj) = quotient(g, k)?;
    let qpart = conjugacy_classes(&q);
    let part = conjugacy_classes(g);
    let outside: Vec<usize> = g.elements().filter(|&x| !k.contains(x)).collect();
    Ok(outside.iter().all(|&x| {
        outside.iter().all(|&y| {
            qpart.class_of(proj[x]) != qpart.class_of(proj[y]) || part.class_of(x) == part.class_of(y)
        })
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaminaPairCheck {
    pub definition: bool,
    /// `C_i C_j = C_j` on the scheme; `None` when `K` is trivial.
    pub product_condition: Option<bool>,
    pub centralizer_condition: Option<bool>,
    pub lifting_condition: Option<bool>,
}

impl CaminaPairCheck {
    pub fn consistent(&self) -> bool {
        [self.product_condition, self.centralizer_condition, self.lifting_condition]
            .iter()
            .flatten()
            .all(|&c| c == self.definition)
    }
}

/// The definition plus the equivalent pair-lemma conditions; the quotient
/// based ones only with `deep`.
pub fn camina_pair_check(scheme: &GroupScheme, k: &SubgroupSet, deep: bool) -> Result<CaminaPairCheck> {
    let g = scheme.group();
    let definition = is_camina_pair(g, k)?;
    let nontrivial = !k.is_trivial();
    Ok(CaminaPairCheck {
        definition,
        product_condition: nontrivial.then(|| pair_product_condition(scheme, k)),
        centralizer_condition: if nontrivial && deep { Some(centralizer_condition(g, k)?) } else { None },
        lifting_condition: if nontrivial && deep { Some(lifting_condition(g, k)?) } else { None },
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CaminaPGroup {
    pub prime: u64,
    pub nilpotency_class: usize,
}

/// `Some(p)` when `n = p^k` with `k >= 1`.
pub fn prime_power_base(n: usize) -> Option<u64> {
    if n < 2 {
        return None;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d))?;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    (m == 1).then_some(p as u64)
}

pub fn nilpotency_class(g: &FiniteGroup) -> Option<usize> {
    let series = lower_central_series(g);
    series.last().filter(|s| s.is_trivial()).map(|_| series.len() - 1)
}

/// A nonabelian Camina group of prime-power order, with its nilpotency class.
pub fn is_camina_p_group(g: &FiniteGroup) -> Option<CaminaPGroup> {
    let prime = prime_power_base(g.order())?;
    if g.is_abelian() || !is_camina_group(g) {
        return None;
    }
    Some(CaminaPGroup {
        prime,
        nilpotency_class: nilpotency_class(g)?,
    })
}

/// `G'` consists of exactly two classes, `{e}` and `G' \ {e}`.
pub fn derived_two_classes(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    let inside = conjugacy_classes(g)
        .classes()
        .iter()
        .filter(|c| derived.contains(c[0]))
        .count();
    !derived.is_trivial() && inside == 2
}

/// Normal subgroups of `G` contained in `G'`, as unions of classes.
pub fn normal_subgroups_in_derived(g: &FiniteGroup) -> Vec<SubgroupSet> {
    let derived = derived_subgroup(g);
    let classes: Vec<Vec<usize>> = conjugacy_classes(g)
        .classes()
        .iter()
        .filter(|c| derived.contains(c[0]))
        .cloned()
        .collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut found = vec![SubgroupSet::trivial(g)];
    seen.insert(found[0].members().to_vec());
    let mut head = 0;
    while head < found.len() {
        let base = found[head].clone();
        for c in &classes {
            if base.contains(c[0]) {
                continue;
            }
            let mut gens = base.members().to_vec();
            gens.extend_from_slice(c);
            let next = SubgroupSet::generated_by(g, &gens);
            if seen.insert(next.members().to_vec()) {
                found.push(next);
            }
        }
        head += 1;
    }
    found.sort_by_key(|n| (n.order(), n.members().to_vec()));
    found
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientCheck {
    pub normal_order: usize,
    pub camina: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaminaStructureReport {
    /// Classes are `x G'`, `x gamma_3` or `{x}` by layer of the lower central series.
    pub class_shapes: Option<bool>,
    /// For class 3: series `{e} < Z < G' < G`, `[G:G'] = p^(2n)`, `[G':Z] = p^n` with `n`
    /// even, and both factors elementary abelian.
    pub class_three_indices: Option<bool>,
    pub center_elementary_abelian: Option<bool>,
    pub center_in_derived: bool,
    /// `G/N` is Camina for each normal `N <= G'`.
    pub quotients: Vec<QuotientCheck>,
}

impl CaminaStructureReport {
    pub fn passed(&self) -> bool {
        [self.class_shapes, self.class_three_indices, self.center_elementary_abelian]
            .iter()
            .flatten()
            .all(|&b| b)
            && self.center_in_derived
            && self.quotients.iter().all(|q| q.camina)
    }
}

fn class_shapes(g: &FiniteGroup, gamma2: &SubgroupSet, gamma3: &SubgroupSet) -> bool {
    let part = conjugacy_classes(g);
    g.elements().all(|x| {
        let class = part.class(part.class_of(x));
        if !gamma2.contains(x) {
            is_coset(g, class, gamma2) && class.binary_search(&x).is_ok()
        } else if !gamma3.contains(x) {
            is_coset(g, class, gamma3)
        } else {
            class == [x]
        }
    })
}

fn elementary_abelian_group(g: &FiniteGroup) -> bool {
    is_elementary_abelian(&SubgroupSet::whole(g), g).0
}

fn class_three_indices(g: &FiniteGroup, p: u64, series: &[SubgroupSet]) -> bool {
    let z = center(g);
    let derived = &series[1];
    if series.len() != 4 || series[2] != z {
        return false;
    }
    let top = g.order() / derived.order();
    let mid = derived.order() / z.order();
    let n = (1..64u32).find(|&n| (p as usize).checked_pow(n) == Some(mid));
    let Some(n) = n else { return false };
    if n % 2 != 0 || (p as usize).checked_pow(2 * n) != Some(top) {
        return false;
    }
    let factor_ok = |big: &SubgroupSet, small: &SubgroupSet| -> bool {
        let Ok(sub) = FiniteGroup::from_table(
            big.members()
                .iter()
                .map(|&a| big.members().iter().map(|&b| big.members().binary_search(&g.mul(a, b)).unwrap()).collect())
                .collect(),
            "sub",
        ) else {
            return false;
        };
        let inner: Vec<usize> = small.members().iter().map(|&m| big.members().binary_search(&m).unwrap()).collect();
        let Ok(inner) = SubgroupSet::from_members(&sub, inner) else { return false };
        quotient(&sub, &inner).is_ok_and(|(q, _)| elementary_abelian_group(&q))
    };
    factor_ok(&SubgroupSet::whole(g), derived) && factor_ok(derived, &z)
}

pub fn camina_structure_checks(g: &FiniteGroup) -> Result<CaminaStructureReport> {
    if g.is_abelian() || !is_camina_group(g) {
        return Err(Error::PreconditionUnmet("a nonabelian Camina group is required".into()));
    }
    let derived = derived_subgroup(g);
    let z = center(g);
    let pgroup = is_camina_p_group(g);
    let series = lower_central_series(g);
    let gamma3 = series.get(2).cloned().unwrap_or_else(|| SubgroupSet::trivial(g));
    let mut quotients = Vec::new();
    for n in normal_subgroups_in_derived(g) {
        let (q, _) = quotient(g, &n)?;
        quotients.push(QuotientCheck {
            normal_order: n.order(),
            camina: is_camina_group(&q),
        });
    }
    Ok(CaminaStructureReport {
        class_shapes: pgroup.map(|_| class_shapes(g, &derived, &gamma3)),
        class_three_indices: pgroup
            .filter(|c| c.nilpotency_class == 3)
            .map(|c| class_three_indices(g, c.prime, &series)),
        center_elementary_abelian: pgroup.map(|_| is_elementary_abelian(&z, g).0 || z.is_trivial()),
        center_in_derived: z.is_subset_of(&derived),
        quotients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral8, heisenberg, quaternion8, symmetric};
    use crate::scheme::build_scheme;

    #[test]
    fn camina_groups() {
        assert!(is_camina_group(&dihedral8()));
        assert!(is_camina_group(&crate::group::cyclic(4)));
        assert!(!is_camina_group(&symmetric(4, 64).unwrap()));
    }

    #[test]
    fn pairs() {
        let d8 = dihedral8();
        assert!(is_camina_pair(&d8, &derived_subgroup(&d8)).unwrap());
        let s4 = symmetric(4, 64).unwrap();
        let a4 = derived_subgroup(&s4);
        assert_eq!(a4.order(), 12);
        assert!(!is_camina_pair(&s4, &a4).unwrap());
        let check = camina_pair_check(&build_scheme(&s4), &a4, true).unwrap();
        assert!(check.consistent(), "{check:?}");
        // a non-normal subgroup
        let h = SubgroupSet::generated_by(&s4, &[s4.elements().find(|&x| s4.element_order(x) == 2).unwrap()]);
        if h.normality_witness(&s4).is_some() {
            assert!(matches!(is_camina_pair(&s4, &h), Err(Error::NotNormal { .. })));
        }
    }

    #[test]
    fn p_groups() {
        let h = heisenberg(3, 64).unwrap();
        assert_eq!(is_camina_p_group(&h), Some(CaminaPGroup { prime: 3, nilpotency_class: 2 }));
        assert_eq!(is_camina_p_group(&quaternion8()).map(|c| c.nilpotency_class), Some(2));
        assert!(!derived_two_classes(&h));
        assert!(derived_two_classes(&quaternion8()));
        let report = camina_structure_checks(&h).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.quotients.len(), 2);
    }

    #[test]
    fn structure_precondition() {
        assert!(matches!(
            camina_structure_checks(&crate::group::cyclic(4)),
            Err(Error::PreconditionUnmet(_))
        ));
    }

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power_base(27), Some(3));
        assert_eq!(prime_power_base(12), None);
        assert_eq!(prime_power_base(1), None);
    }
}

//! Camina-type predicates and the four-family prediction of which groups
//! have an almost commutative Terwilliger algebra, checked against the
//! intersection-number criterion.

mod camina;

pub use camina::{
    camina_pair_check, camina_structure_checks, derived_two_classes, is_camina_group,
    is_camina_p_group, is_camina_pair, nilpotency_class, normal_subgroups_in_derived,
    pair_product_condition, prime_power_base, CaminaPGroup, CaminaPairCheck,
    CaminaStructureReport, QuotientCheck,
};

use serde::Serialize;

use crate::group::{
    center, conjugacy_classes, derived_subgroup, is_elementary_abelian, FiniteGroup,
};
use crate::scheme::{build_scheme, AcWitness, GroupScheme};

/// Order 2^k with `Z(G) = G'` of order 2.
fn is_extraspecial_two_group(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    prime_power_base(g.order()) == Some(2) && derived.order() == 2 && center(g) == derived
}

/// `Z_p^r ⋊ Z_(p^r - 1)` acting through a field: Camina, `G'` is two
/// classes, not an extraspecial 2-group, `G'` elementary abelian of order
/// `q` and `|G| = q (q - 1)`.
pub fn is_frobenius_field_family(g: &FiniteGroup) -> bool {
    let derived = derived_subgroup(g);
    let q = derived.order();
    is_camina_group(g)
        && derived_two_classes(g)
        && !is_extraspecial_two_group(g)
        && is_elementary_abelian(&derived, g).0
        && g.order() == q * (q - 1)
}

/// Order 72, class sizes `{1, 8, 9, 18, 18, 18}`, `|G'| = 18`, trivial center.
/// An invariant fingerprint of `(Z3 x Z3) ⋊ Q8`, not an isomorphism test.
pub fn is_three2_q8_fingerprint(g: &FiniteGroup) -> bool {
    if g.order() != 72 {
        return false;
    }
    let mut sizes = conjugacy_classes(g).sizes();
    sizes.sort_unstable();
    sizes == [1, 8, 9, 18, 18, 18] && derived_subgroup(g).order() == 18 && center(g).is_trivial()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyVerdict {
    pub is_abelian: bool,
    pub is_camina: bool,
    pub is_camina_p_group: bool,
    pub prime: Option<u64>,
    pub camina_class: Option<usize>,
    pub is_frobenius_field_family: bool,
    pub is_three2_q8_fingerprint: bool,
    pub derived_two_classes: bool,
    pub predicted_ac: bool,
    pub evidence: Vec<String>,
}

pub fn predicted_almost_commutative(g: &FiniteGroup) -> FamilyVerdict {
    let is_abelian = g.is_abelian();
    let is_camina = is_camina_group(g);
    let pgroup = is_camina_p_group(g);
    let frob = is_frobenius_field_family(g);
    let fingerprint = is_three2_q8_fingerprint(g);
    let mut evidence = Vec::new();
    if is_abelian {
        evidence.push("abelian".to_string());
    }
    if let Some(c) = pgroup {
        evidence.push(format!("nonabelian Camina {}-group of class {}", c.prime, c.nilpotency_class));
    }
    if frob {
        evidence.push(format!("Frobenius field family with |G'| = {}", derived_subgroup(g).order()));
    }
    if fingerprint {
        evidence.push("matches the (Z3 x Z3):Q8 fingerprint".to_string());
    }
    if evidence.is_empty() {
        evidence.push("in none of the four families".to_string());
    }
    FamilyVerdict {
        is_abelian,
        is_camina,
        is_camina_p_group: pgroup.is_some(),
        prime: pgroup.map(|c| c.prime),
        camina_class: pgroup.map(|c| c.nilpotency_class),
        is_frobenius_field_family: frob,
        is_three2_q8_fingerprint: fingerprint,
        derived_two_classes: derived_two_classes(g),
        predicted_ac: is_abelian || pgroup.is_some() || frob || fingerprint,
        evidence,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassProductWitness {
    pub i: usize,
    pub j: usize,
    /// Classes met by the product set `C_i C_j`.
    pub classes_hit: Vec<usize>,
}

/// For every pair of classes with `C_j` not the inverse class of `C_i`, the
/// product set `C_i C_j` is a single class. Computed on element sets.
pub fn class_product_property(g: &FiniteGroup) -> Result<(), ClassProductWitness> {
    let part = conjugacy_classes(g);
    let r = part.len();
    let mut mark = vec![false; g.order()];
    for i in 0..r {
        for j in 0..r {
            if j == part.inverse_class(i) {
                continue;
            }
            mark.iter_mut().for_each(|m| *m = false);
            for &x in part.class(i) {
                for &y in part.class(j) {
                    mark[g.mul(x, y)] = true;
                }
            }
            let mut hit: Vec<usize> = g.elements().filter(|&z| mark[z]).map(|z| part.class_of(z)).collect();
            hit.sort_unstable();
            hit.dedup();
            let full = hit.len() == 1 && part.class(hit[0]).iter().all(|&z| mark[z]);
            if !full {
                return Err(ClassProductWitness { i, j, classes_hit: hit });
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheck {
    pub verdict: FamilyVerdict,
    pub measured_ac: bool,
    pub ac_witness: Option<AcWitness>,
    pub class_product_property: bool,
    pub class_product_witness: Option<ClassProductWitness>,
    /// Prediction agrees with the measured verdict, and the class-product
    /// property holds exactly when the algebra is almost commutative.
    pub consistent: bool,
}

pub fn cross_check_scheme(scheme: &GroupScheme) -> CrossCheck {
    let g = scheme.group();
    let verdict = predicted_almost_commutative(g);
    let ac = scheme.is_almost_commutative();
    let product = class_product_property(g);
    let holds = product.is_ok();
    CrossCheck {
        consistent: verdict.predicted_ac == ac.almost_commutative && holds == ac.almost_commutative,
        verdict,
        measured_ac: ac.almost_commutative,
        ac_witness: ac.witness,
        class_product_property: holds,
        class_product_witness: product.err(),
    }
}

pub fn cross_check(g: &FiniteGroup) -> CrossCheck {
    cross_check_scheme(&build_scheme(g))
}

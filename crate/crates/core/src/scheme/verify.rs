use std::collections::BTreeMap;

use serde::Serialize;

use super::{count_from, GroupScheme};

/// Matrix-level product checks run up to this order unless deep verification is requested.
pub const MATRIX_CHECK_LIMIT: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub passed: bool,
    /// `false` when the check was not run at this group order.
    pub ran: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeVerification {
    pub checks: Vec<AxiomCheck>,
}

impl SchemeVerification {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    fn push(&mut self, name: &'static str, failure: Option<String>) {
        self.checks.push(AxiomCheck {
            name,
            passed: failure.is_none(),
            ran: true,
            detail: failure.unwrap_or_default(),
        });
    }
}

/// Checks the scheme axioms, commutativity and the tensor identities.
/// `A_i A_j = sum_k p_{ij}^k A_k` is compared entrywise by integer counting
/// when `|G| <= 128`, or at any order with `deep`.
pub fn verify_scheme_axioms(s: &GroupScheme, deep: bool) -> SchemeVerification {
    let g = &s.group;
    let part = &s.partition;
    let n = g.order();
    let r = s.rank();
    let mut report = SchemeVerification { checks: Vec::new() };

    report.push(
        "a0_is_identity",
        (part.class(0) != [g.identity()]).then(|| format!("C0 = {:?}", part.class(0))),
    );

    let mut seen = vec![0usize; n];
    for c in part.classes() {
        for &x in c {
            seen[x] += 1;
        }
    }
    let empty = part.classes().iter().position(Vec::is_empty);
    report.push(
        "partition_of_all_ones",
        match (empty, seen.iter().position(|&c| c != 1)) {
            (Some(i), _) => Some(format!("A_{i} is zero")),
            (_, Some(x)) => Some(format!("element {x} covered {} times", seen[x])),
            _ => None,
        },
    );

    let transpose_failure = (0..r).find_map(|i| {
        let ip = part.inverse_class(i);
        let mut inv: Vec<usize> = part.class(i).iter().map(|&x| g.inv(x)).collect();
        inv.sort_unstable();
        (inv != part.class(ip)).then(|| format!("inverses of C{i} are not C{ip}"))
    });
    report.push("transpose_closed", transpose_failure);

    // representative independence and commutativity, from every z
    let mut rep_failure = None;
    let mut comm_failure = None;
    for z in g.elements() {
        let k = part.class_of(z);
        let counts = count_from(g, part, z);
        for (&(i, j), &c) in &counts {
            if rep_failure.is_none() && s.p(i, j, k) != c {
                rep_failure = Some(format!("p_{i}{j}^{k} differs at z = {z}"));
            }
            if comm_failure.is_none() && counts.get(&(j, i)) != Some(&c) {
                comm_failure = Some(format!("p_{i}{j}^{k} != p_{j}{i}^{k}"));
            }
        }
        let total: u64 = counts.values().sum();
        if rep_failure.is_none() && total != n as u64 {
            rep_failure = Some(format!("counts at z = {z} sum to {total}"));
        }
    }
    report.push("representative_independence", rep_failure);
    report.push("commutative", comm_failure);

    let mut mass = None;
    let mut identity_row = None;
    let mut pairing = None;
    for i in 0..r {
        for j in 0..r {
            let lhs: u64 = (0..r).map(|k| s.p(i, j, k) * s.class_sizes[k] as u64).sum();
            let rhs = (s.class_sizes[i] * s.class_sizes[j]) as u64;
            if mass.is_none() && lhs != rhs {
                mass = Some(format!("sum_k p_{i}{j}^k |C_k| = {lhs} != {rhs}"));
            }
            let expected0 = if j == part.inverse_class(i) { s.class_sizes[i] as u64 } else { 0 };
            if pairing.is_none() && s.p(i, j, 0) != expected0 {
                pairing = Some(format!("p_{i}{j}^0 = {}", s.p(i, j, 0)));
            }
        }
        for k in 0..r {
            if identity_row.is_none() && (s.p(0, i, k) != u64::from(i == k) || s.p(i, 0, k) != u64::from(i == k)) {
                identity_row = Some(format!("p_0{i}^{k} = {}", s.p(0, i, k)));
            }
        }
    }
    report.push("mass_balance", mass);
    report.push("identity_row", identity_row);
    report.push("inverse_pairing", pairing);

    if deep || n <= MATRIX_CHECK_LIMIT {
        report.push("products_in_span", product_check(s));
    } else {
        report.checks.push(AxiomCheck {
            name: "products_in_span",
            passed: true,
            ran: false,
            detail: format!("skipped above order {MATRIX_CHECK_LIMIT}"),
        });
    }
    report
}

/// `(A_i A_j)_{xz} = |{y : y x^-1 in C_i, z y^-1 in C_j}|` must equal
/// `p_{ij}^{class(z x^-1)}` for every `x, z` and every `(i, j)`.
fn product_check(s: &GroupScheme) -> Option<String> {
    let g = &s.group;
    let part = &s.partition;
    let r = s.rank();
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for x in g.elements() {
        let xi = g.inv(x);
        for z in g.elements() {
            counts.clear();
            for y in g.elements() {
                let i = part.class_of(g.mul(y, xi));
                let j = part.class_of(g.mul(z, g.inv(y)));
                *counts.entry((i, j)).or_insert(0) += 1;
            }
            let k = part.class_of(g.mul(z, xi));
            for i in 0..r {
                for j in 0..r {
                    let got = counts.get(&(i, j)).copied().unwrap_or(0);
                    if got != s.p(i, j, k) {
                        return Some(format!("(A_{i} A_{j})[{x},{z}] = {got} != p_{i}{j}^{k}"));
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{dihedral8, quaternion8};
    use crate::scheme::build_scheme;

    #[test]
    fn small_groups_pass() {
        for g in [quaternion8(), dihedral8()] {
            let v = verify_scheme_axioms(&build_scheme(&g), false);
            assert!(v.all_passed(), "{v:?}");
            assert!(v.get("products_in_span").unwrap().ran);
        }
    }

    #[test]
    fn detects_tampering() {
        let mut s = build_scheme(&quaternion8());
        let key = *s.tensor.keys().last().unwrap();
        *s.tensor.get_mut(&key).unwrap() += 1;
        let v = verify_scheme_axioms(&s, false);
        assert!(!v.all_passed());
        assert!(!v.get("representative_independence").unwrap().passed);
    }
}

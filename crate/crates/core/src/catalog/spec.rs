use serde::{Deserialize, Serialize};

use super::*;
use crate::group::group_from_permutations_bounded;

/// A group description as accepted on the command line and in batch files,
/// e.g. `{"family": "frobenius_field", "p": 3, "r": 2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { n: usize },
    Abelian { orders: Vec<usize> },
    FrobeniusField { p: u64, r: u32 },
    Heisenberg { p: u64 },
    ExtraspecialExpP2 { p: u64 },
    Q8 {},
    D8 {},
    #[serde(rename = "three2_q8")]
    Three2Q8 {},
    Dihedral { n: usize },
    Symmetric { n: usize },
    Metacyclic { m: usize, k: usize, r: usize },
    Perm { generators: Vec<Vec<usize>> },
}

impl GroupSpec {
    pub fn build(&self, max_order: usize) -> Result<FiniteGroup> {
        let fixed = |g: FiniteGroup| {
            check_order(g.order(), max_order)?;
            Ok(g)
        };
        match self {
            GroupSpec::Cyclic { n } => abelian(&[*n], max_order),
            GroupSpec::Abelian { orders } => abelian(orders, max_order),
            GroupSpec::FrobeniusField { p, r } => frobenius_field_group(*p, *r, max_order),
            GroupSpec::Heisenberg { p } => heisenberg(*p, max_order),
            GroupSpec::ExtraspecialExpP2 { p } => extraspecial_exp_p2(*p, max_order),
            GroupSpec::Q8 {} => fixed(quaternion8()),
            GroupSpec::D8 {} => fixed(dihedral8()),
            GroupSpec::Three2Q8 {} => {
                check_order(72, max_order)?;
                Ok(three2_q8())
            }
            GroupSpec::Dihedral { n } => dihedral(*n, max_order),
            GroupSpec::Symmetric { n } => symmetric(*n, max_order),
            GroupSpec::Metacyclic { m, k, r } => metacyclic(*m, *k, *r, max_order),
            GroupSpec::Perm { generators } => {
                Ok(group_from_permutations_bounded(generators, max_order)?.group)
            }
        }
    }

    /// Short stable name used in reports and file names.
    pub fn name(&self) -> String {
        match self {
            GroupSpec::Cyclic { n } => format!("cyclic_{n}"),
            GroupSpec::Abelian { orders } => format!(
                "abelian_{}",
                orders.iter().map(usize::to_string).collect::<Vec<_>>().join("_")
            ),
            GroupSpec::FrobeniusField { p, r } => format!("frobenius_field_{p}_{r}"),
            GroupSpec::Heisenberg { p } => format!("heisenberg_{p}"),
            GroupSpec::ExtraspecialExpP2 { p } => format!("extraspecial_exp_p2_{p}"),
            GroupSpec::Q8 {} => "q8".into(),
            GroupSpec::D8 {} => "d8".into(),
            GroupSpec::Three2Q8 {} => "three2_q8".into(),
            GroupSpec::Dihedral { n } => format!("dihedral_{n}"),
            GroupSpec::Symmetric { n } => format!("symmetric_{n}"),
            GroupSpec::Metacyclic { m, k, r } => format!("metacyclic_{m}_{k}_{r}"),
            GroupSpec::Perm { generators } => format!(
                "perm_{}x{}",
                generators.len(),
                generators.first().map_or(0, Vec::len)
            ),
        }
    }
}

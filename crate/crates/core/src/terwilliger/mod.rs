//! The Terwilliger algebra `T(G)` of a group scheme at the identity: its
//! spanning set `T0`, exact closure, center and Wedderburn components.

mod block;
mod center;
mod closure;
mod idempotents;
mod split;

pub use block::{BlockMatrix, ClassLayout};
pub use center::{center_basis, flatten_diagonal, unflatten_diagonal};
pub use closure::{
    algebra_closure, scheme_generators, t0_basis, terwilliger_closure, TerwilligerBasis,
    DEFAULT_ENTRY_CAP,
};
pub use idempotents::{
    frobenius_b, primary_idempotent, primary_idempotent_blocks, verify_frobenius_ideal,
    FrobeniusIdealReport, Multiple, ProductOutcome,
};
pub use split::{
    component_dim, split_center, Component, ComponentRole, SplitStatus, WedderburnReport,
    MAX_ATTEMPTS,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::scheme::{build_scheme, GroupScheme};

/// Above this order an abelian group's `T(G)` has `|G|^2` dimensions and the
/// pipeline logs a warning.
pub const ABELIAN_WARN_ORDER: usize = 24;

/// Everything the end-to-end pipeline produces for one group.
#[derive(Clone, Debug)]
pub struct Pipeline {
    pub scheme: GroupScheme,
    pub algebra: TerwilligerBasis,
    pub center: Vec<BlockMatrix>,
    pub wedderburn: WedderburnReport,
    pub almost_commutative: bool,
}

pub fn run_pipeline(scheme: GroupScheme, entry_cap: usize) -> Result<Pipeline> {
    let g = scheme.group();
    if g.is_abelian() && g.order() > ABELIAN_WARN_ORDER {
        log::warn!(
            "abelian group of order {} gives dim T = {}",
            g.order(),
            g.order() * g.order()
        );
    }
    let almost_commutative = scheme.is_almost_commutative().almost_commutative;
    let algebra = terwilliger_closure(&scheme, entry_cap)?;
    if almost_commutative && !algebra.triply_regular() {
        return Err(Error::InternalInconsistency(format!(
            "almost commutative but dim T = {} exceeds dim T0 = {}",
            algebra.rank(),
            algebra.t0_rank()
        )));
    }
    let center = center_basis(&algebra)?;
    let wedderburn = split_center(&algebra, &center)?;
    Ok(Pipeline {
        scheme,
        algebra,
        center,
        wedderburn,
        almost_commutative,
    })
}

pub fn wedderburn_report(g: &FiniteGroup) -> Result<WedderburnReport> {
    Ok(run_pipeline(build_scheme(g), DEFAULT_ENTRY_CAP)?.wedderburn)
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub index: usize,
    pub role: ComponentRole,
    pub dim: usize,
    pub center_dim: usize,
}

/// JSON shape of a pipeline run.
#[derive(Clone, Debug, Serialize)]
pub struct TwaReport {
    pub label: String,
    pub order: usize,
    pub d: usize,
    #[serde(rename = "dim_T")]
    pub dim_t: usize,
    #[serde(rename = "dim_T0")]
    pub dim_t0: usize,
    #[serde(rename = "dim_Z")]
    pub dim_z: usize,
    pub primary_dim: usize,
    pub triply_regular: bool,
    pub almost_commutative: bool,
    pub components: Vec<ComponentSummary>,
    pub split_status: SplitStatus,
    pub idempotents_verified: bool,
}

impl Pipeline {
    pub fn report(&self) -> TwaReport {
        let w = &self.wedderburn;
        TwaReport {
            label: self.scheme.group().label().to_string(),
            order: self.scheme.order(),
            d: self.scheme.d(),
            dim_t: w.dim_t,
            dim_t0: self.algebra.t0_rank(),
            dim_z: w.dim_z,
            primary_dim: w.primary_dim,
            triply_regular: self.algebra.triply_regular(),
            almost_commutative: self.almost_commutative,
            components: w
                .components
                .iter()
                .enumerate()
                .map(|(index, c)| ComponentSummary {
                    index,
                    role: c.role,
                    dim: c.dim,
                    center_dim: c.center_dim,
                })
                .collect(),
            split_status: w.split_status.clone(),
            idempotents_verified: w.idempotents_consistent(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{frobenius_field_group, symmetric};
    use crate::group::cyclic;

    #[test]
    fn abelian_single_component() {
        let w = wedderburn_report(&cyclic(6)).unwrap();
        assert_eq!((w.dim_t, w.dim_z), (36, 1));
        assert_eq!(w.components.len(), 1);
        assert_eq!(w.components[0].role, ComponentRole::Primary);
        assert_eq!(w.split_status, SplitStatus::Complete);
    }

    #[test]
    fn frobenius_four() {
        let w = wedderburn_report(&frobenius_field_group(2, 2, 64).unwrap()).unwrap();
        assert_eq!(w.dim_t, 19);
        assert_eq!(w.dim_z, 4);
        assert_eq!(w.primary().unwrap().dim, 16);
        assert_eq!(w.nonprimary_component_dims(), vec![1, 1, 1]);
        assert!(w.idempotents_consistent());
    }

    #[test]
    fn s4_dimensions_add_up() {
        let w = wedderburn_report(&symmetric(4, 64).unwrap()).unwrap();
        let total: usize = w.components.iter().map(|c| c.dim).sum();
        if w.split_status == SplitStatus::Complete {
            assert_eq!(total, w.dim_t);
            assert_eq!(w.components.len(), w.dim_z);
        }
        assert!(w.idempotents_consistent());
    }
}

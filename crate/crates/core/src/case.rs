//! Everything derived from one (cusp triple, symmetry group) pair.

use crate::action::GroupAction;
use crate::cusp::{CuspTriple, MilnorLattice};
use crate::error::Result;
use crate::orbit::{build_orbit_space, OrbitSpace};
use crate::resolution::{build_hat_basis, HatBasis, ZModel};
use crate::symmetry::{
    cohomology_dims, compute_stats, gabrielov_numbers, DimensionReport, GabrielovNumbers,
    GroupStats, SymmetryGroup,
};

#[derive(Debug, Clone)]
pub struct Case {
    pub triple: CuspTriple,
    pub group: SymmetryGroup,
    pub stats: GroupStats,
    pub gabrielov: GabrielovNumbers,
    pub dims: DimensionReport,
    pub lattice: MilnorLattice,
    pub action: GroupAction,
    pub orbit: OrbitSpace,
    pub z_model: ZModel,
    pub hat: HatBasis,
}

impl Case {
    pub fn new(group: SymmetryGroup) -> Result<Self> {
        let lattice = MilnorLattice::build(group.triple());
        Case::with_lattice(group, lattice)
    }

    /// Builds the case on a caller-supplied lattice. Verification failures
    /// on a tampered lattice are how the negative paths get exercised.
    pub fn with_lattice(group: SymmetryGroup, lattice: MilnorLattice) -> Result<Self> {
        let triple = *group.triple();
        let stats = compute_stats(&group)?;
        let gabrielov = gabrielov_numbers(&triple, &group, &stats)?;
        let dims = cohomology_dims(&triple, &stats, &gabrielov);
        let action = GroupAction::build(&lattice, &group)?;
        let orbit = build_orbit_space(&lattice, &action, &gabrielov)?;
        let z_model = ZModel::build(&orbit, &stats, &gabrielov)?;
        let hat = build_hat_basis(&orbit, &stats, &z_model)?;
        Ok(Case {
            triple,
            group,
            stats,
            gabrielov,
            dims,
            lattice,
            action,
            orbit,
            z_model,
            hat,
        })
    }
}

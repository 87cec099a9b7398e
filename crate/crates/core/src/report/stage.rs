//! Which basis a diagram is drawn in.

use super::graph::{to_graph, DynkinGraph};
use super::registry::{Registry, Strategy};
use crate::case::Case;
use crate::error::Result;
use crate::exact::{BasisLabel, BilinearSpace};

pub trait DiagramStage: Strategy {
    fn space(&self, case: &Case) -> Result<BilinearSpace>;

    /// Basis vectors left out of the drawing.
    fn dropped(&self) -> &'static [BasisLabel];

    fn graph(&self, case: &Case) -> Result<DynkinGraph> {
        Ok(to_graph(&self.space(case)?, self.dropped()))
    }
}

/// Full Milnor lattice including `d_mu'`.
pub struct Milnor;
/// Milnor lattice modulo the radical: the plain T diagram.
pub struct MilnorQuotient;
/// Orbit space `W` on the classes of the T basis.
pub struct Orbit;
/// Hat basis of `H_3(Y, Z)`: the star diagram.
pub struct Resolution;

impl Strategy for Milnor {
    fn name(&self) -> &'static str {
        "milnor"
    }
    fn summary(&self) -> &'static str {
        "distinguished basis of H_2(V) with d_mu'"
    }
}

impl DiagramStage for Milnor {
    fn space(&self, case: &Case) -> Result<BilinearSpace> {
        Ok(case.lattice.space().clone())
    }
    fn dropped(&self) -> &'static [BasisLabel] {
        &[]
    }
}

impl Strategy for MilnorQuotient {
    fn name(&self) -> &'static str {
        "milnor-quotient"
    }
    fn summary(&self) -> &'static str {
        "H_2(V)/<d0> on the T basis"
    }
}

impl DiagramStage for MilnorQuotient {
    fn space(&self, case: &Case) -> Result<BilinearSpace> {
        Ok(case.lattice.space().clone())
    }
    fn dropped(&self) -> &'static [BasisLabel] {
        &[BasisLabel::MuPrime]
    }
}

impl Strategy for Orbit {
    fn name(&self) -> &'static str {
        "orbit"
    }
    fn summary(&self) -> &'static str {
        "H_2(W)/<dbar0>, edges weighted n_i"
    }
}

impl DiagramStage for Orbit {
    fn space(&self, case: &Case) -> Result<BilinearSpace> {
        Ok(case.orbit.space().clone())
    }
    fn dropped(&self) -> &'static [BasisLabel] {
        &[BasisLabel::Delta0Bar]
    }
}

impl Strategy for Resolution {
    fn name(&self) -> &'static str {
        "resolution"
    }
    fn summary(&self) -> &'static str {
        "H_3(Y,Z)/<dhat0>: star with Gabrielov-number arms"
    }
}

impl DiagramStage for Resolution {
    fn space(&self, case: &Case) -> Result<BilinearSpace> {
        case.hat.to_space(&case.z_model)
    }
    fn dropped(&self) -> &'static [BasisLabel] {
        &[BasisLabel::Delta0Hat]
    }
}

pub fn stages() -> Registry<dyn DiagramStage> {
    let mut r: Registry<dyn DiagramStage> = Registry::new();
    r.register(Box::new(Milnor))
        .register(Box::new(MilnorQuotient))
        .register(Box::new(Orbit))
        .register(Box::new(Resolution));
    r
}

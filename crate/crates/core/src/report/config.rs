//! JSON job configuration.

use serde::{Deserialize, Serialize};

use crate::case::Case;
use crate::cusp::{CuspTriple, MilnorLattice};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::symmetry::{GroupElement, SymmetryGroup};

/// One generator `(num_1, num_2, num_3) / den`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorSpec {
    pub num: [i64; 3],
    pub den: i64,
}

/// Hooks for exercising failure paths end to end. Never set in real jobs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TestHooks {
    /// Replace `<d1, d^1_1>` (or `<d1, d_mu'>` when arm 1 is empty) in the
    /// Milnor Gram with a wrong value before anything is derived from it.
    #[serde(default)]
    pub corrupt_gram: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub gamma: [u32; 3],
    #[serde(default)]
    pub generators: Vec<GeneratorSpec>,
    #[serde(default)]
    pub order_bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub test_hooks: Option<TestHooks>,
}

impl JobConfig {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    pub fn triple(&self) -> Result<CuspTriple> {
        CuspTriple::new(self.gamma)
    }

    /// Validates the triple and every generator, then closes the group.
    pub fn group(&self) -> Result<SymmetryGroup> {
        let triple = self.triple()?;
        let gens = self
            .generators
            .iter()
            .map(|g| GroupElement::from_fractions(g.num, g.den))
            .collect::<Result<Vec<_>>>()?;
        SymmetryGroup::generate(&triple, &gens)
    }

    pub fn build_case(&self) -> Result<Case> {
        let group = self.group()?;
        let mut lattice = MilnorLattice::build(group.triple());
        if self.test_hooks.as_ref().is_some_and(|h| h.corrupt_gram) {
            let other = lattice.arm_index(1, 1).unwrap_or(lattice.mu_prime_index());
            let current = lattice.space().gram()[(lattice.center_index(), other)].clone();
            lattice = lattice.with_corrupted_entry(
                lattice.center_index(),
                other,
                current + Rational::one(),
            );
        }
        Case::with_lattice(group, lattice)
    }
}

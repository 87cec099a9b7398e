//! Human- and machine-readable summary of one case.

use std::fmt::Write;

use serde::Serialize;

use crate::cusp::CuspTriple;
use crate::error::Result;
use crate::symmetry::{
    cohomology_dims, compute_stats, gabrielov_numbers, AgeEntry, DimensionReport, GroupElement,
    SymmetryGroup,
};

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub gamma_prime: CuspTriple,
    pub delta: i128,
    pub order: usize,
    pub generators: Vec<GroupElement>,
    pub elements: Vec<AgeEntry>,
    pub n: [usize; 3],
    pub j_g: usize,
    pub order_identity: bool,
    pub gamma: [u32; 3],
    pub gabrielov_numbers: Vec<u32>,
    pub dimensions: DimensionReport,
}

pub fn analyze(group: &SymmetryGroup) -> Result<AnalysisReport> {
    let t = group.triple();
    let stats = compute_stats(group)?;
    let gab = gabrielov_numbers(t, group, &stats)?;
    let dims = cohomology_dims(t, &stats, &gab);
    Ok(AnalysisReport {
        gamma_prime: *t,
        delta: t.delta(),
        order: stats.order,
        generators: group.generators(),
        elements: stats.age_table.clone(),
        n: stats.n,
        j_g: stats.j_g,
        order_identity: stats.order_identity,
        gamma: gab.gamma,
        gabrielov_numbers: gab.multiset,
        dimensions: dims,
    })
}

impl AnalysisReport {
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let [p, q, r] = self.gamma_prime.gamma_prime();
        writeln!(w, "cusp gamma' = ({p},{q},{r}), Delta = {}", self.delta).unwrap();
        let gens: Vec<String> = self.generators.iter().map(ToString::to_string).collect();
        writeln!(w, "|G| = {} generated by [{}]", self.order, gens.join(", ")).unwrap();
        writeln!(w, "elements (exponents / age / N_g):").unwrap();
        for e in &self.elements {
            writeln!(
                w,
                "  {:<24} {:>3} {:>3}",
                e.element.to_string(),
                e.age,
                e.fixed_dim
            )
            .unwrap();
        }
        let [n1, n2, n3] = self.n;
        writeln!(w, "n = ({n1},{n2},{n3}), j_G = {}", self.j_g).unwrap();
        writeln!(
            w,
            "order identity: {} = 1 + 2*{} + {} ... {}",
            self.order,
            self.j_g,
            self.n.iter().map(|n| n - 1).sum::<usize>(),
            if self.order_identity { "ok" } else { "FAILED" }
        )
        .unwrap();
        let [g1, g2, g3] = self.gamma;
        writeln!(w, "gamma = ({g1},{g2},{g3})").unwrap();
        let gab: Vec<String> = self
            .gabrielov_numbers
            .iter()
            .map(ToString::to_string)
            .collect();
        writeln!(w, "Gabrielov numbers: {}", gab.join(",")).unwrap();
        let d = &self.dimensions;
        writeln!(w, "mu' = {}", d.milnor_number).unwrap();
        writeln!(w, "dim H_2(Y) = {} (#age 1 = {})", d.h2_y, d.age_one_count).unwrap();
        writeln!(w, "dim H_4(Y) = {}", d.h4_y).unwrap();
        writeln!(w, "dim H_2(Y,Z) = {}", d.h2_y_z).unwrap();
        writeln!(w, "dim H_3(Y,Z) = {}", d.h3_y_z).unwrap();
        writeln!(w, "dim H^2(V)^G = {}", d.h2_v_invariant).unwrap();
        out
    }
}

//! Intersection form on the orbit space `W = V/G`, computed by summing the
//! Milnor form over the group.

use crate::action::GroupAction;
use crate::cusp::MilnorLattice;
use crate::error::{Error, Result};
use crate::exact::{BasisLabel, BilinearSpace, LatticeVector, Matrix, Rational};
use crate::symmetry::{GabrielovNumbers, GroupStats};

/// `<u, v>_W = sum_{g in G} <u, g(v)>_V` for Milnor-lattice representatives.
pub fn orbit_pairing(
    lat: &MilnorLattice,
    action: &GroupAction,
    u: &LatticeVector,
    v: &LatticeVector,
) -> Result<Rational> {
    let mut total = Rational::zero();
    for m in action.matrices() {
        total += lat.space().pair(u, &m.apply(v))?;
    }
    Ok(total)
}

/// `H_2(W; Q)` on the basis `dbar1, dbar^i_j (j < gamma_i), dbar0`.
///
/// Orbit classes reuse the `Center`/`Arm` labels of their representatives;
/// only the radical class gets its own label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSpace {
    space: BilinearSpace,
    representatives: Vec<LatticeVector>,
}

impl OrbitSpace {
    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    /// Milnor-lattice representative of each basis class, in basis order.
    pub fn representatives(&self) -> &[LatticeVector] {
        &self.representatives
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }
}

/// Basis labels and representatives of the orbit classes, in the fixed
/// order centre, arms (axis then index), radical.
fn orbit_representatives(
    lat: &MilnorLattice,
    gab: &GabrielovNumbers,
) -> Result<(Vec<BasisLabel>, Vec<LatticeVector>)> {
    let mut labels = vec![BasisLabel::Center];
    let mut reps = vec![LatticeVector::unit(lat.dim(), lat.center_index())];
    for axis in 1..=3 {
        for index in 1..gab.gamma(axis) as usize {
            labels.push(BasisLabel::Arm { axis, index });
            reps.push(lat.arm_cycle(axis, index as i64)?);
        }
    }
    labels.push(BasisLabel::Delta0Bar);
    reps.push(lat.delta0().clone());
    Ok((labels, reps))
}

pub fn build_orbit_space(
    lat: &MilnorLattice,
    action: &GroupAction,
    gab: &GabrielovNumbers,
) -> Result<OrbitSpace> {
    let (labels, reps) = orbit_representatives(lat, gab)?;
    let n = reps.len();
    let mut gram = Matrix::zeros(n, n);
    for a in 0..n {
        for b in 0..n {
            gram[(a, b)] = orbit_pairing(lat, action, &reps[a], &reps[b])?;
        }
    }
    let space = BilinearSpace::new(labels, gram)
        .map_err(|e| Error::Consistency(format!("brute-force orbit Gram is malformed: {e}")))?;
    Ok(OrbitSpace {
        space,
        representatives: reps,
    })
}

/// The closed-form value of `<a, b>_W` for two orbit basis labels:
/// `2 j_G - 2` at the centre, `-2 n_i` on arm `i`, `n_i` along each edge,
/// zero otherwise.
pub fn closed_form_orbit_entry(a: &BasisLabel, b: &BasisLabel, stats: &GroupStats) -> Rational {
    use BasisLabel::{Arm, Center};
    let n = |axis: usize| Rational::from(stats.n(axis));
    match (*a, *b) {
        (Center, Center) => Rational::from(2 * stats.j_g as i64 - 2),
        (Arm { axis: i, index: j }, Arm { axis: k, index: l }) if i == k => {
            if j == l {
                -(Rational::from(2) * n(i))
            } else if j.abs_diff(l) == 1 {
                n(i)
            } else {
                Rational::zero()
            }
        }
        (Center, Arm { axis, index: 1 }) | (Arm { axis, index: 1 }, Center) => n(axis),
        _ => Rational::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub entries_checked: usize,
    pub representative_checks: usize,
}

const CHECK: &str = "orbit-lemma";

pub fn verify_orbit_lemma(
    lat: &MilnorLattice,
    action: &GroupAction,
    orbit: &OrbitSpace,
    stats: &GroupStats,
    gab: &GabrielovNumbers,
) -> Result<OrbitReport> {
    let basis = orbit.space().basis();
    let gram = orbit.space().gram();
    for (a, la) in basis.iter().enumerate() {
        for (b, lb) in basis.iter().enumerate() {
            let expected = closed_form_orbit_entry(la, lb, stats);
            if gram[(a, b)] != expected {
                return Err(Error::verification(
                    CHECK,
                    format!(
                        "<{la}, {lb}>_W = {} but the closed form gives {expected}",
                        gram[(a, b)]
                    ),
                ));
            }
        }
    }

    let mut representative_checks = 0;
    for axis in 1..=3 {
        let period = i64::from(gab.gamma(axis));
        for j in 1..period {
            let rep = lat.arm_cycle(axis, j)?;
            let shifted = lat.arm_cycle(axis, j + period)?;
            for idx in 0..lat.dim() {
                let v = LatticeVector::unit(lat.dim(), idx);
                let lhs = orbit_pairing(lat, action, &rep, &v)?;
                let rhs = orbit_pairing(lat, action, &shifted, &v)?;
                if lhs != rhs {
                    return Err(Error::verification(
                        CHECK,
                        format!(
                            "representative dependence on axis {axis}: d^{axis}_{j} and d^{axis}_{} pair differently with {}",
                            j + period,
                            lat.space().basis()[idx]
                        ),
                    ));
                }
                representative_checks += 1;
            }
        }
    }
    Ok(OrbitReport {
        entries_checked: basis.len() * basis.len(),
        representative_checks,
    })
}

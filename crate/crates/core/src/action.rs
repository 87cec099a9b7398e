//! The action of a diagonal symmetry group on the Milnor lattice, as exact
//! integer matrices in the distinguished basis.

use crate::cusp::MilnorLattice;
use crate::error::{Error, Result};
use crate::exact::{fixed_subspace_dim, LatticeVector, Matrix, Rational};
use crate::symmetry::{GabrielovNumbers, GroupElement, SymmetryGroup};

/// Matrix of one group element; column `c` is the image of basis vector `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMatrix {
    pub element: GroupElement,
    pub matrix: Matrix,
}

impl ActionMatrix {
    pub fn apply(&self, v: &LatticeVector) -> LatticeVector {
        LatticeVector::new(self.matrix.mul_vec(v.coords()))
    }
}

/// Image of `d1`: `d1 + sum_i sum_{j=1}^{a_i} d^i_j - age(g) d0`.
pub fn image_of_center(lat: &MilnorLattice, g: &GroupElement) -> Result<LatticeVector> {
    let shifts = g.shifts(lat.triple())?;
    let mut v = LatticeVector::unit(lat.dim(), lat.center_index());
    for (axis, &a) in (1..=3).zip(&shifts) {
        for j in 1..=a {
            v = &v + &lat.arm_cycle(axis, j)?;
        }
    }
    Ok(v.add_scaled(&Rational::from(-i64::from(g.age())), lat.delta0()))
}

pub fn action_matrix(lat: &MilnorLattice, g: &GroupElement) -> Result<ActionMatrix> {
    g.check_symmetry_of(lat.triple())
        .map_err(|_| Error::Input(format!("{g} is not a symmetry of f for {}", lat.triple())))?;
    let shifts = g.shifts(lat.triple())?;
    let dim = lat.dim();
    let mut columns: Vec<Vec<Rational>> = vec![Vec::new(); dim];

    let center = image_of_center(lat, g)?;
    columns[lat.mu_prime_index()] = (lat.delta0() + &center).into_coords();
    columns[lat.center_index()] = center.into_coords();
    for (axis, &a) in (1..=3).zip(&shifts) {
        for j in 1..lat.triple().arm(axis) as usize {
            let idx = lat.arm_index(axis, j).expect("j is on the arm");
            columns[idx] = lat.arm_cycle(axis, j as i64 + a)?.into_coords();
        }
    }
    let matrix = Matrix::from_columns(&columns);
    if !matrix.is_integral() {
        return Err(Error::Consistency(format!(
            "action matrix of {g} has a non-integral entry"
        )));
    }
    Ok(ActionMatrix {
        element: g.clone(),
        matrix,
    })
}

/// Action matrices for every element, in the group's element order.
#[derive(Debug, Clone)]
pub struct GroupAction {
    matrices: Vec<ActionMatrix>,
}

impl GroupAction {
    pub fn build(lat: &MilnorLattice, group: &SymmetryGroup) -> Result<Self> {
        let matrices = group
            .elements()
            .iter()
            .map(|g| action_matrix(lat, g))
            .collect::<Result<_>>()?;
        Ok(GroupAction { matrices })
    }

    pub fn matrices(&self) -> &[ActionMatrix] {
        &self.matrices
    }

    pub fn get(&self, g: &GroupElement) -> Option<&ActionMatrix> {
        self.matrices.iter().find(|m| &m.element == g)
    }

    /// Dimension of the lattice's rational subspace fixed by all of G.
    pub fn invariant_dim(&self, dim: usize) -> usize {
        let mats: Vec<Matrix> = self.matrices.iter().map(|m| m.matrix.clone()).collect();
        fixed_subspace_dim(&mats, dim)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionReport {
    pub elements_checked: usize,
    pub invariant_dim: usize,
    pub expected_invariant_dim: usize,
}

const CHECK: &str = "group-action";

/// Isometry, homomorphism, `g(d0) = d0`, and the invariant dimension
/// `2 + sum (gamma_i - 1)`.
pub fn verify_action(
    lat: &MilnorLattice,
    group: &SymmetryGroup,
    action: &GroupAction,
    gab: &GabrielovNumbers,
) -> Result<ActionReport> {
    let gram = lat.space().gram();
    for m in action.matrices() {
        let g = &m.element;
        let pulled = &(&m.matrix.transpose() * gram) * &m.matrix;
        if &pulled != gram {
            return Err(Error::verification(
                CHECK,
                format!("{g} is not an isometry of the Milnor form"),
            ));
        }
        if &m.apply(lat.delta0()) != lat.delta0() {
            return Err(Error::verification(CHECK, format!("{g} moves d0")));
        }
        let mut power = m.matrix.clone();
        for _ in 1..g.order() {
            power = &power * &m.matrix;
        }
        if power != Matrix::identity(lat.dim()) {
            return Err(Error::verification(
                CHECK,
                format!("{g}: M^{} is not the identity", g.order()),
            ));
        }
    }
    for mg in action.matrices() {
        for mh in action.matrices() {
            let (g, h) = (&mg.element, &mh.element);
            let gh = g.compose(h);
            let expected = action.get(&gh).ok_or_else(|| {
                Error::verification(CHECK, format!("{g} + {h} = {gh} is not in G"))
            })?;
            if &mg.matrix * &mh.matrix != expected.matrix {
                return Err(Error::verification(
                    CHECK,
                    format!("M_g M_h != M_(g+h) for g = {g}, h = {h}"),
                ));
            }
        }
    }
    let invariant_dim = action.invariant_dim(lat.dim());
    let expected = 2 + gab.gamma.iter().map(|&g| g as usize - 1).sum::<usize>();
    if invariant_dim != expected {
        return Err(Error::verification(
            CHECK,
            format!("invariant subspace has dimension {invariant_dim}, expected {expected}"),
        ));
    }
    Ok(ActionReport {
        elements_checked: group.order(),
        invariant_dim,
        expected_invariant_dim: expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cusp::CuspTriple;
    use crate::exact::BasisLabel;
    use crate::symmetry::{compute_stats, gabrielov_numbers};

    fn setup(
        gamma: [u32; 3],
        gens: &[([i64; 3], i64)],
    ) -> (MilnorLattice, SymmetryGroup, GabrielovNumbers) {
        let t = CuspTriple::new(gamma).unwrap();
        let gens: Vec<_> = gens
            .iter()
            .map(|&(n, d)| GroupElement::from_fractions(n, d).unwrap())
            .collect();
        let g = SymmetryGroup::generate(&t, &gens).unwrap();
        let gab = gabrielov_numbers(&t, &g, &compute_stats(&g).unwrap()).unwrap();
        (MilnorLattice::build(&t), g, gab)
    }

    #[test]
    fn identity_acts_trivially() {
        let (lat, _, _) = setup([2, 3, 7], &[]);
        let m = action_matrix(&lat, &GroupElement::identity()).unwrap();
        assert_eq!(m.matrix, Matrix::identity(11));
    }

    #[test]
    fn center_image_pairs_to_one_for_666() {
        let (lat, _, _) = setup([6, 6, 6], &[]);
        let g = GroupElement::from_fractions([1, 1, 1], 3).unwrap();
        let d1 = LatticeVector::unit(lat.dim(), lat.center_index());
        let gd1 = action_matrix(&lat, &g).unwrap().apply(&d1);
        assert_eq!(lat.space().pair(&d1, &gd1).unwrap(), Rational::one());
        assert_eq!(lat.space().pair(&gd1, &gd1).unwrap(), Rational::from(-2));
    }

    #[test]
    fn third_arm_fixed_by_quarter_turn() {
        let (lat, _, _) = setup([4, 4, 4], &[]);
        let m = action_matrix(&lat, &GroupElement::from_fractions([1, 3, 0], 4).unwrap()).unwrap();
        for j in 1..4 {
            let v = lat
                .space()
                .basis_vector(&BasisLabel::Arm { axis: 3, index: j })
                .unwrap();
            assert_eq!(m.apply(&v), v);
        }
    }

    #[test]
    fn rejects_non_symmetry() {
        let (lat, _, _) = setup([4, 4, 4], &[]);
        let g = GroupElement::from_fractions([1, 2, 0], 3).unwrap();
        assert!(matches!(action_matrix(&lat, &g), Err(Error::Input(_))));
    }

    #[test]
    fn verification_on_named_groups() {
        let (lat, g, gab) = setup([2, 3, 7], &[]);
        let a = GroupAction::build(&lat, &g).unwrap();
        assert_eq!(verify_action(&lat, &g, &a, &gab).unwrap().invariant_dim, 11);

        let (lat, g, gab) = setup([6, 6, 6], &[([1, 1, 1], 3)]);
        let a = GroupAction::build(&lat, &g).unwrap();
        let r = verify_action(&lat, &g, &a, &gab).unwrap();
        assert_eq!((lat.dim(), r.invariant_dim), (17, 5));

        let (lat, g, gab) = setup([4, 4, 4], &[([1, 3, 0], 4)]);
        let a = GroupAction::build(&lat, &g).unwrap();
        let r = verify_action(&lat, &g, &a, &gab).unwrap();
        assert_eq!((lat.dim(), r.invariant_dim), (11, 5));
    }

    #[test]
    fn corrupted_gram_fails_isometry() {
        let (lat, g, gab) = setup([4, 4, 4], &[([1, 3, 0], 4)]);
        let bad = lat.with_corrupted_entry(0, 1, Rational::from(2));
        let a = GroupAction::build(&bad, &g).unwrap();
        let err = verify_action(&bad, &g, &a, &gab).unwrap_err();
        assert!(matches!(err, Error::Verification { .. }));
    }

    /// Reynolds-operator oracle: the invariant subspace is the image of
    /// `sum_g M_g`, so its dimension is that matrix's rank.
    #[test]
    fn invariant_dim_matches_averaging_rank() {
        for (gamma, gens) in [
            ([4, 4, 4], vec![([1, 3, 0], 4)]),
            ([4, 4, 4], vec![([1, 1, 0], 2)]),
            ([6, 6, 6], vec![([1, 1, 1], 3)]),
            ([6, 6, 6], vec![([1, 5, 0], 6), ([0, 1, 1], 2)]),
        ] {
            let (lat, g, _) = setup(gamma, &gens);
            let a = GroupAction::build(&lat, &g).unwrap();
            let mut total = Matrix::zeros(lat.dim(), lat.dim());
            for m in a.matrices() {
                for r in 0..lat.dim() {
                    for c in 0..lat.dim() {
                        total[(r, c)] = &total[(r, c)] + &m.matrix[(r, c)];
                    }
                }
            }
            assert_eq!(total.rank(), a.invariant_dim(lat.dim()), "{g}");
        }
    }

    /// Recovers `g(d1)` modulo `d0` by solving the linear conditions
    /// `<g(d1), g(d^i_j)> = <d1, d^i_j>` in the quotient lattice, with the
    /// `d1`-coordinate pinned to 1, and compares with the closed formula.
    #[test]
    fn center_image_solves_isometry_equations() {
        for (gamma, gen) in [
            ([4, 4, 4], ([1, 3, 0], 4)),
            ([4, 4, 4], ([1, 1, 0], 2)),
            ([6, 6, 6], ([1, 1, 1], 3)),
            ([6, 6, 6], ([2, 2, 2], 3)),
            ([3, 3, 4], ([1, 2, 0], 3)),
            ([2, 4, 8], ([2, 1, 1], 4)),
        ] {
            let (lat, _, _) = setup(gamma, &[gen]);
            let g = GroupElement::from_fractions(gen.0, gen.1).unwrap();
            let m = action_matrix(&lat, &g).unwrap();
            let q = lat.quotient_space();
            let n = q.dim();
            // Drop d_mu' by substituting d_mu' = d0 + d1 = d1 in the quotient.
            let reduce = |v: &LatticeVector| -> LatticeVector {
                let mut c = v.coords()[..n].to_vec();
                c[0] = &c[0] + &v.coords()[lat.mu_prime_index()];
                LatticeVector::new(c)
            };
            let mut rows = Vec::new();
            let mut rhs = Vec::new();
            for idx in 1..n {
                let image = reduce(&m.apply(&LatticeVector::unit(lat.dim(), idx)));
                let row = q.gram().mul_vec(image.coords());
                rows.push(row);
                rhs.push(q.gram()[(0, idx)].clone());
            }
            let mut pin = vec![Rational::zero(); n];
            pin[0] = Rational::one();
            rows.push(pin);
            rhs.push(Rational::one());
            let mut aug: Vec<Vec<Rational>> = rows;
            for (r, b) in aug.iter_mut().zip(&rhs) {
                r.push(b.clone());
            }
            let (rref, pivots) = Matrix::from_rows(aug).rref();
            assert_eq!(
                pivots.len(),
                n,
                "system must have a unique solution for {g}"
            );
            assert!(pivots.iter().all(|&p| p < n), "system inconsistent for {g}");
            let solution: Vec<Rational> = (0..n).map(|r| rref[(r, n)].clone()).collect();
            let formula = reduce(&image_of_center(&lat, &g).unwrap());
            assert_eq!(solution, formula.into_coords(), "{g}");
        }
    }
}

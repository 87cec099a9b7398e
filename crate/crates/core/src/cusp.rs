//! The cusp polynomial `x1^p + x2^q + x3^r - c x1 x2 x3` and its Milnor
//! lattice with the T-shaped distinguished basis.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{BasisLabel, BilinearSpace, LatticeVector, Matrix, Rational};

/// `p q r - q r - p r - p q`. The cusp is hyperbolic exactly when this is
/// positive.
pub fn delta_invariant(gamma: [u32; 3]) -> i128 {
    let [a, b, c] = gamma.map(i128::from);
    a * b * c - b * c - a * c - a * b
}

/// Exponents `(gamma'_1, gamma'_2, gamma'_3)` of a hyperbolic cusp.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 3]", into = "[u32; 3]")]
pub struct CuspTriple([u32; 3]);

impl CuspTriple {
    pub fn new(gamma: [u32; 3]) -> Result<Self> {
        if gamma.contains(&0) {
            return Err(Error::Input(format!(
                "cusp exponents must be positive, got {gamma:?}"
            )));
        }
        let delta = delta_invariant(gamma);
        if delta <= 0 {
            let [a, b, c] = gamma;
            return Err(Error::InvalidTriple(a, b, c, delta));
        }
        Ok(CuspTriple(gamma))
    }

    pub fn gamma_prime(&self) -> [u32; 3] {
        self.0
    }

    /// `gamma'_i` for a 1-based axis.
    pub fn arm(&self, axis: usize) -> u32 {
        self.0[axis - 1]
    }

    pub fn delta(&self) -> i128 {
        delta_invariant(self.0)
    }

    /// `mu' = 2 + sum (gamma'_i - 1)`.
    pub fn milnor_number(&self) -> usize {
        2 + self.0.iter().map(|&g| g as usize - 1).sum::<usize>()
    }
}

impl TryFrom<[u32; 3]> for CuspTriple {
    type Error = Error;
    fn try_from(gamma: [u32; 3]) -> Result<Self> {
        CuspTriple::new(gamma)
    }
}

impl From<CuspTriple> for [u32; 3] {
    fn from(t: CuspTriple) -> [u32; 3] {
        t.0
    }
}

impl fmt::Display for CuspTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "({a},{b},{c})")
    }
}

pub fn milnor_number(t: &CuspTriple) -> usize {
    t.milnor_number()
}

/// `H_2(V; Z)` with basis `d1, d^1_1..d^1_{p-1}, d^2_.., d^3_.., d_mu'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MilnorLattice {
    triple: CuspTriple,
    space: BilinearSpace,
    delta0: LatticeVector,
}

impl MilnorLattice {
    pub fn build(triple: &CuspTriple) -> Self {
        let mu = triple.milnor_number();
        let mut basis = Vec::with_capacity(mu);
        basis.push(BasisLabel::Center);
        for axis in 1..=3 {
            for index in 1..triple.arm(axis) as usize {
                basis.push(BasisLabel::Arm { axis, index });
            }
        }
        basis.push(BasisLabel::MuPrime);
        debug_assert_eq!(basis.len(), mu);

        let one = Rational::one();
        let mut gram = Matrix::zeros(mu, mu);
        let mut link = |a: usize, b: usize, w: &Rational| {
            gram[(a, b)] = w.clone();
            gram[(b, a)] = w.clone();
        };
        let center = 0;
        let mu_prime = mu - 1;
        let mut offset = 1;
        for axis in 1..=3 {
            let len = triple.arm(axis) as usize - 1;
            if len > 0 {
                link(center, offset, &one);
                link(mu_prime, offset, &one);
            }
            for j in 1..len {
                link(offset + j - 1, offset + j, &one);
            }
            offset += len;
        }
        link(mu_prime, center, &Rational::from(-2));
        for i in 0..mu {
            gram[(i, i)] = Rational::from(-2);
        }

        let space =
            BilinearSpace::new(basis, gram).expect("Milnor Gram is symmetric by construction");
        // d0 = d_mu' - d1
        let mut c = vec![Rational::zero(); mu];
        c[mu_prime] = Rational::one();
        c[center] = -Rational::one();
        let delta0 = LatticeVector::new(c);
        MilnorLattice {
            triple: *triple,
            space,
            delta0,
        }
    }

    /// Same lattice with one symmetric Gram entry replaced; only used to
    /// exercise the verification failure path.
    pub fn with_corrupted_entry(&self, a: usize, b: usize, value: Rational) -> Self {
        let mut rows: Vec<Vec<Rational>> = (0..self.dim())
            .map(|r| self.space.gram().row(r).to_vec())
            .collect();
        rows[a][b] = value.clone();
        rows[b][a] = value;
        let space = BilinearSpace::new(self.space.basis().to_vec(), Matrix::from_rows(rows))
            .expect("symmetric edit keeps the Gram symmetric");
        MilnorLattice {
            space,
            ..self.clone()
        }
    }

    pub fn triple(&self) -> &CuspTriple {
        &self.triple
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn delta0(&self) -> &LatticeVector {
        &self.delta0
    }

    pub fn center_index(&self) -> usize {
        0
    }

    pub fn mu_prime_index(&self) -> usize {
        self.dim() - 1
    }

    /// Position of the basis vector `d^axis_j`, `1 <= j < gamma'_axis`.
    pub fn arm_index(&self, axis: usize, j: usize) -> Option<usize> {
        if !(1..=3).contains(&axis) || j == 0 || j >= self.triple.arm(axis) as usize {
            return None;
        }
        let before: usize = (1..axis).map(|a| self.triple.arm(a) as usize - 1).sum();
        Some(1 + before + j - 1)
    }

    /// Coordinates of `d^axis_j` for any integer `j`, with the cyclic
    /// convention `d^i_{gamma'_i} = d0 - sum_{k < gamma'_i} d^i_k`.
    pub fn arm_cycle(&self, axis: usize, j: i64) -> Result<LatticeVector> {
        if !(1..=3).contains(&axis) {
            return Err(Error::Input(format!("axis {axis} is outside 1..=3")));
        }
        let period = i64::from(self.triple.arm(axis));
        let r = j.rem_euclid(period) as usize;
        if r != 0 {
            let idx = self.arm_index(axis, r).expect("residue lies on the arm");
            return Ok(LatticeVector::unit(self.dim(), idx));
        }
        let mut c = self.delta0.clone().into_coords();
        for k in 1..period as usize {
            let idx = self.arm_index(axis, k).expect("k lies on the arm");
            c[idx] -= &Rational::one();
        }
        Ok(LatticeVector::new(c))
    }

    /// `H_2(V)/<d0>` on the basis without `d_mu'`: the plain T diagram.
    pub fn quotient_space(&self) -> BilinearSpace {
        self.space.without(&[BasisLabel::MuPrime])
    }
}

pub fn build_milnor_lattice(t: &CuspTriple) -> MilnorLattice {
    MilnorLattice::build(t)
}

pub fn milnor_quotient_space(lat: &MilnorLattice) -> BilinearSpace {
    lat.quotient_space()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn triple(a: u32, b: u32, c: u32) -> CuspTriple {
        CuspTriple::new([a, b, c]).unwrap()
    }

    fn lbl(axis: usize, index: usize) -> BasisLabel {
        BasisLabel::Arm { axis, index }
    }

    #[test]
    fn delta_values() {
        assert_eq!(delta_invariant([2, 3, 7]), 1);
        assert_eq!(delta_invariant([4, 4, 4]), 16);
        assert_eq!(delta_invariant([3, 3, 3]), 0);
        assert_eq!(
            CuspTriple::new([3, 3, 3]),
            Err(Error::InvalidTriple(3, 3, 3, 0))
        );
        assert!(matches!(
            CuspTriple::new([2, 3, 6]),
            Err(Error::InvalidTriple(_, _, _, 0))
        ));
        assert!(
            matches!(CuspTriple::new([1, 5, 9]), Err(Error::InvalidTriple(_, _, _, d)) if d < 0)
        );
        assert!(matches!(CuspTriple::new([0, 5, 9]), Err(Error::Input(_))));
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(triple(2, 3, 7).milnor_number(), 11);
        assert_eq!(triple(4, 4, 4).milnor_number(), 11);
        assert_eq!(triple(6, 6, 6).milnor_number(), 17);
    }

    #[test]
    fn gram_of_237() {
        let lat = MilnorLattice::build(&triple(2, 3, 7));
        let s = lat.space();
        let v = |l: BasisLabel| s.basis_vector(&l).unwrap();
        assert_eq!(
            s.pair(&v(BasisLabel::MuPrime), &v(BasisLabel::Center))
                .unwrap(),
            Rational::from(-2)
        );
        assert_eq!(
            s.pair(&v(BasisLabel::MuPrime), &v(lbl(3, 1))).unwrap(),
            Rational::one()
        );
        assert_eq!(
            s.pair(&v(lbl(3, 5)), &v(lbl(3, 6))).unwrap(),
            Rational::one()
        );
        assert_eq!(
            s.pair(&v(lbl(3, 2)), &v(lbl(2, 2))).unwrap(),
            Rational::zero()
        );
        let d0 = lat.delta0();
        assert!(s.pair(d0, d0).unwrap().is_zero());
        for i in 0..lat.dim() {
            assert!(s
                .pair(d0, &LatticeVector::unit(lat.dim(), i))
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn radical_of_237_is_delta0() {
        let lat = MilnorLattice::build(&triple(2, 3, 7));
        let rad = lat.space().radical_basis();
        assert_eq!(rad.len(), 1);
        // delta0 = d_mu' - d1 must be a multiple of the computed generator.
        let r = &rad[0];
        let scale =
            &lat.delta0().coords()[lat.mu_prime_index()] / &r.coords()[lat.mu_prime_index()];
        assert_eq!(&r.scale(&scale), lat.delta0());
    }

    #[test]
    fn radical_of_444_has_rank_one() {
        let lat = MilnorLattice::build(&triple(4, 4, 4));
        assert_eq!(lat.space().radical_basis().len(), 1);
        assert_eq!(lat.space().gram().rank(), lat.dim() - 1);
    }

    #[test]
    fn arm_cycle_cases() {
        let t = triple(4, 4, 4);
        let lat = MilnorLattice::build(&t);
        let s = lat.space();
        assert_eq!(
            lat.arm_cycle(2, 2).unwrap(),
            s.basis_vector(&lbl(2, 2)).unwrap()
        );
        let wrapped = lat.arm_cycle(1, 4).unwrap();
        let mut expected = lat.delta0().clone();
        for k in 1..4 {
            expected = &expected - &s.basis_vector(&lbl(1, k)).unwrap();
        }
        assert_eq!(wrapped, expected);
        assert_eq!(s.pair(&wrapped, &wrapped).unwrap(), Rational::from(-2));
        assert_eq!(lat.arm_cycle(1, 0).unwrap(), wrapped);
        assert!(lat.arm_cycle(0, 1).is_err());
        assert!(lat.arm_cycle(4, 1).is_err());
    }

    #[test]
    fn quotient_of_237() {
        let lat = MilnorLattice::build(&triple(2, 3, 7));
        let q = lat.quotient_space();
        assert_eq!(q.dim(), 10);
        assert!(q.radical_basis().is_empty());
        let v = |l: BasisLabel| q.basis_vector(&l).unwrap();
        assert_eq!(
            q.pair(&v(BasisLabel::Center), &v(lbl(2, 1))).unwrap(),
            Rational::one()
        );
        assert_eq!(
            q.pair(&v(lbl(1, 1)), &v(lbl(2, 1))).unwrap(),
            Rational::zero()
        );
        let full = lat.space().gram();
        let n = lat.dim() - 1;
        let idx: Vec<usize> = (0..n).collect();
        assert_eq!(q.gram(), &full.select(&idx, &idx));
    }

    fn valid_triple() -> impl Strategy<Value = CuspTriple> {
        (2u32..9, 2u32..9, 2u32..12)
            .prop_filter_map("Delta > 0", |(a, b, c)| CuspTriple::new([a, b, c]).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn lattice_invariants(t in valid_triple()) {
            let lat = MilnorLattice::build(&t);
            prop_assert_eq!(lat.dim(), t.milnor_number());
            let g = lat.space().gram();
            for i in 0..lat.dim() {
                prop_assert_eq!(&g[(i, i)], &Rational::from(-2));
            }
            let rad = lat.space().radical_basis();
            prop_assert_eq!(rad.len(), 1);
            let d0 = lat.delta0();
            prop_assert!(lat.space().pair(d0, d0).unwrap().is_zero());
            prop_assert!(g.mul_vec(d0.coords()).iter().all(Rational::is_zero));
        }

        #[test]
        fn arm_cycle_is_periodic(t in valid_triple(), axis in 1usize..4, j in -20i64..20) {
            let lat = MilnorLattice::build(&t);
            let p = i64::from(t.arm(axis));
            prop_assert_eq!(lat.arm_cycle(axis, j).unwrap(), lat.arm_cycle(axis, j + p).unwrap());
        }
    }
}

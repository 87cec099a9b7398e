//! Labeled bilinear spaces and the vectors that live in them.

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{Matrix, Rational};
use crate::error::{Error, Result};

/// Which class of the orbit space an `h^!`-image comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum OrbitClass {
    Center,
    Arm { axis: usize, index: usize },
    Delta0,
}

/// Name of one basis vector. Axes are 1-based, matching the usual
/// `delta^i_j` notation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisLabel {
    /// `delta_1`, the central vanishing cycle (also its orbit and hat images).
    Center,
    /// `delta^axis_index` on one arm of the T (or its orbit class).
    Arm { axis: usize, index: usize },
    /// `delta_{mu'}`, the extra vertex joined to the centre by a -2 edge.
    MuPrime,
    /// The orbit class of the radical generator.
    Delta0Bar,
    /// `h^!` image of an orbit-space class inside the resolution model.
    HClass(OrbitClass),
    /// Exceptional curve `E^axis_{point,root}` over one singular point of W.
    Exceptional {
        axis: usize,
        point: usize,
        root: usize,
    },
    /// Exceptional class `E^axis_root` in the resolution Y.
    YExceptional { axis: usize, root: usize },
    /// Hat-basis arm vector `delta^axis_{index,sheet}`.
    HatArm {
        axis: usize,
        index: usize,
        sheet: usize,
    },
    /// The hat radical vector `h^!(delta0bar / |G|)`.
    Delta0Hat,
}

impl BasisLabel {
    /// Identifier safe for DOT node names and JSON ids.
    pub fn id(&self) -> String {
        match *self {
            BasisLabel::Center => "d1".into(),
            BasisLabel::Arm { axis, index } => format!("d_{axis}_{index}"),
            BasisLabel::MuPrime => "dmu".into(),
            BasisLabel::Delta0Bar => "d0bar".into(),
            BasisLabel::HClass(OrbitClass::Center) => "h_d1".into(),
            BasisLabel::HClass(OrbitClass::Arm { axis, index }) => format!("h_d_{axis}_{index}"),
            BasisLabel::HClass(OrbitClass::Delta0) => "h_d0bar".into(),
            BasisLabel::Exceptional { axis, point, root } => format!("e_{axis}_{point}_{root}"),
            BasisLabel::YExceptional { axis, root } => format!("ey_{axis}_{root}"),
            BasisLabel::HatArm { axis, index, sheet } => format!("d_{axis}_{index}_{sheet}"),
            BasisLabel::Delta0Hat => "d0hat".into(),
        }
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BasisLabel::Center => write!(f, "d1"),
            BasisLabel::Arm { axis, index } => write!(f, "d^{axis}_{index}"),
            BasisLabel::MuPrime => write!(f, "d_mu'"),
            BasisLabel::Delta0Bar => write!(f, "dbar0"),
            BasisLabel::HClass(OrbitClass::Center) => write!(f, "h(d1)"),
            BasisLabel::HClass(OrbitClass::Arm { axis, index }) => write!(f, "h(d^{axis}_{index})"),
            BasisLabel::HClass(OrbitClass::Delta0) => write!(f, "h(dbar0)"),
            BasisLabel::Exceptional { axis, point, root } => {
                write!(f, "E^{axis}_{{{point},{root}}}")
            }
            BasisLabel::YExceptional { axis, root } => write!(f, "E^{axis}_{root}"),
            BasisLabel::HatArm { axis, index, sheet } => write!(f, "d^{axis}_{{{index},{sheet}}}"),
            BasisLabel::Delta0Hat => write!(f, "dhat0"),
        }
    }
}

/// A finite-dimensional rational space with a labeled basis and a symmetric
/// Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearSpace {
    basis: Vec<BasisLabel>,
    gram: Matrix,
}

/// Coordinates relative to the basis of some [`BilinearSpace`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticeVector {
    coords: Vec<Rational>,
}

impl LatticeVector {
    pub fn new(coords: Vec<Rational>) -> Self {
        LatticeVector { coords }
    }

    pub fn zero(dim: usize) -> Self {
        LatticeVector {
            coords: vec![Rational::zero(); dim],
        }
    }

    pub fn unit(dim: usize, index: usize) -> Self {
        let mut v = LatticeVector::zero(dim);
        v.coords[index] = Rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Rational::is_zero)
    }

    pub fn scale(&self, factor: &Rational) -> LatticeVector {
        LatticeVector {
            coords: self.coords.iter().map(|c| c * factor).collect(),
        }
    }

    /// `self + factor * other`.
    pub fn add_scaled(&self, factor: &Rational, other: &LatticeVector) -> LatticeVector {
        assert_eq!(self.dim(), other.dim(), "vector dimension mismatch");
        LatticeVector {
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + factor * b)
                .collect(),
        }
    }
}

impl Add for &LatticeVector {
    type Output = LatticeVector;
    fn add(self, rhs: &LatticeVector) -> LatticeVector {
        self.add_scaled(&Rational::one(), rhs)
    }
}

impl Sub for &LatticeVector {
    type Output = LatticeVector;
    fn sub(self, rhs: &LatticeVector) -> LatticeVector {
        self.add_scaled(&-Rational::one(), rhs)
    }
}

impl Neg for &LatticeVector {
    type Output = LatticeVector;
    fn neg(self) -> LatticeVector {
        self.scale(&-Rational::one())
    }
}

impl BilinearSpace {
    pub fn new(basis: Vec<BasisLabel>, gram: Matrix) -> Result<Self> {
        if gram.rows() != basis.len() || gram.cols() != basis.len() {
            return Err(Error::Input(format!(
                "gram is {}x{} but the basis has {} labels",
                gram.rows(),
                gram.cols(),
                basis.len()
            )));
        }
        if !gram.is_symmetric() {
            return Err(Error::Input("gram matrix is not symmetric".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = basis.iter().find(|l| !seen.insert(**l)) {
            return Err(Error::Input(format!("duplicate basis label {dup}")));
        }
        Ok(BilinearSpace { basis, gram })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisLabel] {
        &self.basis
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.basis.iter().position(|l| l == label)
    }

    pub fn basis_vector(&self, label: &BasisLabel) -> Result<LatticeVector> {
        self.index_of(label)
            .map(|i| LatticeVector::unit(self.dim(), i))
            .ok_or_else(|| Error::Input(format!("label {label} is not in this space")))
    }

    fn check_member(&self, v: &LatticeVector) -> Result<()> {
        if v.dim() == self.dim() {
            Ok(())
        } else {
            Err(Error::Input(format!(
                "vector of length {} does not belong to a space of dimension {}",
                v.dim(),
                self.dim()
            )))
        }
    }

    /// `u^T * gram * v`.
    pub fn pair(&self, u: &LatticeVector, v: &LatticeVector) -> Result<Rational> {
        self.check_member(u)?;
        self.check_member(v)?;
        let mut acc = Rational::zero();
        for (r, ur) in u.coords.iter().enumerate() {
            if ur.is_zero() {
                continue;
            }
            for (c, vc) in v.coords.iter().enumerate() {
                let g = &self.gram[(r, c)];
                if !vc.is_zero() && !g.is_zero() {
                    acc += ur * g * vc;
                }
            }
        }
        Ok(acc)
    }

    /// Exact basis of the radical `{ v : <v, w> = 0 for all w }`.
    pub fn radical_basis(&self) -> Vec<LatticeVector> {
        self.gram
            .null_space()
            .into_iter()
            .map(LatticeVector::new)
            .collect()
    }

    /// Reflection of `v` in the hyperplane orthogonal to `root`, for the
    /// sign convention where roots have self-pairing -2:
    /// `v + <v, root> root`.
    pub fn reflect(&self, root: &LatticeVector, v: &LatticeVector) -> Result<LatticeVector> {
        let norm = self.pair(root, root)?;
        if norm != Rational::from(-2) {
            return Err(Error::Input(format!(
                "reflection root must have self-pairing -2, got {norm}"
            )));
        }
        let coeff = self.pair(v, root)?;
        Ok(v.add_scaled(&coeff, root))
    }

    /// Gram matrix of an arbitrary family of vectors.
    pub fn gram_of(&self, vectors: &[LatticeVector]) -> Result<Matrix> {
        let n = vectors.len();
        let mut m = Matrix::zeros(n, n);
        for a in 0..n {
            for b in a..n {
                let p = self.pair(&vectors[a], &vectors[b])?;
                m[(b, a)] = p.clone();
                m[(a, b)] = p;
            }
        }
        Ok(m)
    }

    /// The subspace spanned by the retained basis labels, with the
    /// restricted Gram matrix.
    pub fn without(&self, drop: &[BasisLabel]) -> BilinearSpace {
        let keep: Vec<usize> = (0..self.dim())
            .filter(|&i| !drop.contains(&self.basis[i]))
            .collect();
        BilinearSpace {
            basis: keep.iter().map(|&i| self.basis[i]).collect(),
            gram: self.gram.select(&keep, &keep),
        }
    }

    /// Orthogonal direct sum. Labels must remain distinct.
    pub fn direct_sum(parts: &[&BilinearSpace]) -> Result<BilinearSpace> {
        let dim: usize = parts.iter().map(|p| p.dim()).sum();
        let mut gram = Matrix::zeros(dim, dim);
        let mut basis = Vec::with_capacity(dim);
        let mut offset = 0;
        for p in parts {
            for r in 0..p.dim() {
                for c in 0..p.dim() {
                    gram[(offset + r, offset + c)] = p.gram[(r, c)].clone();
                }
            }
            basis.extend_from_slice(&p.basis);
            offset += p.dim();
        }
        BilinearSpace::new(basis, gram)
    }

    /// A space whose Gram is the given family's Gram, labeled as given.
    pub fn spanned_by(
        &self,
        labels: Vec<BasisLabel>,
        vectors: &[LatticeVector],
    ) -> Result<BilinearSpace> {
        if labels.len() != vectors.len() {
            return Err(Error::Input("one label per vector required".into()));
        }
        BilinearSpace::new(labels, self.gram_of(vectors)?)
    }
}

/// Negated Cartan matrix of type `A_{n-1}` (size `n - 1`): diagonal -2,
/// adjacent entries 1.
pub fn neg_cartan_a(n: usize) -> Matrix {
    let size = n.saturating_sub(1);
    let mut m = Matrix::zeros(size, size);
    for i in 0..size {
        m[(i, i)] = Rational::from(-2);
        if i + 1 < size {
            m[(i, i + 1)] = Rational::one();
            m[(i + 1, i)] = Rational::one();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a_space(n: usize) -> BilinearSpace {
        let basis = (1..n)
            .map(|k| BasisLabel::YExceptional { axis: 1, root: k })
            .collect();
        BilinearSpace::new(basis, neg_cartan_a(n)).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn pair_on_a2() {
        let s = a_space(3);
        let e1 = LatticeVector::unit(2, 0);
        let e2 = LatticeVector::unit(2, 1);
        assert_eq!(s.pair(&e1, &e1).unwrap(), Rational::from(-2));
        assert_eq!(s.pair(&e1, &e2).unwrap(), Rational::one());
        assert_eq!(
            s.pair(&e1, &LatticeVector::zero(2)).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn pair_rejects_foreign_vectors() {
        let s = a_space(3);
        let err = s.pair(&LatticeVector::unit(3, 0), &LatticeVector::unit(2, 0));
        assert!(matches!(err, Err(Error::Input(_))));
    }

    #[test]
    fn radical_of_nondegenerate_and_null_spaces() {
        assert!(a_space(3).radical_basis().is_empty());
        let null = BilinearSpace::new(vec![BasisLabel::Delta0Bar], Matrix::zeros(1, 1)).unwrap();
        assert_eq!(null.radical_basis(), vec![LatticeVector::unit(1, 0)]);
    }

    #[test]
    fn reflections() {
        let a1 = a_space(2);
        let e = LatticeVector::unit(1, 0);
        assert_eq!(
            a1.reflect(&e, &e).unwrap(),
            LatticeVector::new(vec![Rational::from(-1)])
        );

        let a2 = a_space(3);
        let lambda1 = LatticeVector::new(vec![q(2, 3), q(1, 3)]);
        let e1 = LatticeVector::unit(2, 0);
        assert_eq!(
            a2.reflect(&e1, &lambda1).unwrap(),
            LatticeVector::new(vec![q(-1, 3), q(1, 3)])
        );

        let a3 = a_space(4);
        let e3 = LatticeVector::unit(3, 2);
        let orth = LatticeVector::unit(3, 0);
        assert_eq!(a3.reflect(&e3, &orth).unwrap(), orth);
    }

    #[test]
    fn reflect_rejects_non_roots() {
        let a2 = a_space(3);
        let not_root = LatticeVector::new(vec![Rational::from(2), Rational::zero()]);
        assert!(a2.reflect(&not_root, &LatticeVector::unit(2, 0)).is_err());
    }

    #[test]
    fn rejects_asymmetric_and_duplicate() {
        let asym = Matrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(BilinearSpace::new(vec![BasisLabel::Center, BasisLabel::MuPrime], asym).is_err());
        assert!(BilinearSpace::new(
            vec![BasisLabel::Center, BasisLabel::Center],
            Matrix::zeros(2, 2)
        )
        .is_err());
    }

    fn arb_space() -> impl Strategy<Value = (BilinearSpace, Vec<i64>, Vec<i64>, Vec<i64>)> {
        (1usize..6).prop_flat_map(|n| {
            (
                proptest::collection::vec(-3i64..4, n * n),
                proptest::collection::vec(-5i64..6, n),
                proptest::collection::vec(-5i64..6, n),
                proptest::collection::vec(-5i64..6, n),
            )
                .prop_map(move |(raw, u, v, w)| {
                    let mut g = Matrix::zeros(n, n);
                    for r in 0..n {
                        for c in 0..n {
                            let (a, b) = (r.min(c), r.max(c));
                            g[(r, c)] = Rational::from(raw[a * n + b]);
                        }
                    }
                    let basis = (0..n)
                        .map(|k| BasisLabel::YExceptional { axis: 1, root: k })
                        .collect();
                    (BilinearSpace::new(basis, g).unwrap(), u, v, w)
                })
        })
    }

    fn vecq(v: &[i64], d: i64) -> LatticeVector {
        LatticeVector::new(v.iter().map(|&x| Rational::new(x, d)).collect())
    }

    proptest! {
        #[test]
        fn pair_is_symmetric_and_bilinear((s, u, v, w) in arb_space(), a in -4i64..5, d in 1i64..5) {
            let (u, v, w) = (vecq(&u, d), vecq(&v, 1), vecq(&w, 3));
            prop_assert_eq!(s.pair(&u, &v).unwrap(), s.pair(&v, &u).unwrap());
            let a = Rational::from(a);
            let lhs = s.pair(&u.add_scaled(&a, &w), &v).unwrap();
            let rhs = s.pair(&u, &v).unwrap() + &a * s.pair(&w, &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn radical_vectors_pair_to_zero((s, _u, _v, _w) in arb_space()) {
            let dim = s.dim();
            for r in s.radical_basis() {
                for i in 0..dim {
                    prop_assert!(s.pair(&r, &LatticeVector::unit(dim, i)).unwrap().is_zero());
                }
            }
        }

        #[test]
        fn reflection_is_involutive_isometry(n in 2usize..8, root in 0usize..7, u in proptest::collection::vec(-6i64..7, 7), v in proptest::collection::vec(-6i64..7, 7)) {
            let s = a_space(n);
            let dim = n - 1;
            let r = LatticeVector::unit(dim, root % dim);
            let u = vecq(&u[..dim], 5);
            let v = vecq(&v[..dim], 2);
            let ru = s.reflect(&r, &u).unwrap();
            let rv = s.reflect(&r, &v).unwrap();
            prop_assert_eq!(s.reflect(&r, &ru).unwrap(), u.clone());
            prop_assert_eq!(s.pair(&ru, &rv).unwrap(), s.pair(&u, &v).unwrap());
        }
    }
}

//! Rational model of `H_2(Z; Q)` for the exceptional fibre `Z` of the
//! crepant resolution: the orbit form plus one `A_{n_i - 1}` root lattice
//! over each singular point of `W`, mutually orthogonal.
//!
//! The hat basis built here spans `H_3(Y, Z; Q)`; its Gram matrix is the
//! star-shaped diagram with arms of the Gabrielov lengths.

use crate::error::{Error, Result};
use crate::exact::{
    neg_cartan_a, BasisLabel, BilinearSpace, LatticeVector, Matrix, OrbitClass, Rational,
};
use crate::orbit::OrbitSpace;
use crate::symmetry::{DimensionReport, GabrielovNumbers, GroupStats};

/// `A_{n-1}` root lattice with basis `E_1..E_{n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootBlock {
    pub axis: usize,
    pub point: usize,
    pub n: usize,
    pub space: BilinearSpace,
}

impl RootBlock {
    pub fn new(axis: usize, point: usize, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::Input(format!("A_(n-1) block needs n >= 2, got {n}")));
        }
        let basis = (1..n)
            .map(|root| BasisLabel::Exceptional { axis, point, root })
            .collect();
        Ok(RootBlock {
            axis,
            point,
            n,
            space: BilinearSpace::new(basis, neg_cartan_a(n))?,
        })
    }
}

fn a_space(n: usize) -> Result<BilinearSpace> {
    RootBlock::new(1, 1, n).map(|b| b.space)
}

/// First fundamental weight `((n-1) E_1 + ... + E_{n-1}) / n` of `A_{n-1}`.
pub fn fundamental_weight(n: usize) -> Result<LatticeVector> {
    if n < 2 {
        return Err(Error::Input(format!(
            "fundamental weight needs n >= 2, got {n}"
        )));
    }
    let denom = n as i64;
    Ok(LatticeVector::new(
        (1..n)
            .map(|k| Rational::new(denom - k as i64, denom))
            .collect(),
    ))
}

/// `lambda_0 = Lambda_1`, `lambda_k = w_k(lambda_{k-1})` where `w_k` is the
/// reflection in the simple root `E_k`.
pub fn lambda_sequence(n: usize) -> Result<Vec<LatticeVector>> {
    let space = a_space(n)?;
    let mut seq = vec![fundamental_weight(n)?];
    for k in 1..n {
        let root = LatticeVector::unit(n - 1, k - 1);
        let next = space.reflect(&root, &seq[k - 1])?;
        seq.push(next);
    }
    Ok(seq)
}

/// Checks that the lambda vectors pair to `-(n-1)/n` with themselves and
/// `1/n` with each other.
pub fn verify_lambda_lemma(n: usize) -> Result<()> {
    let space = a_space(n)?;
    let seq = lambda_sequence(n)?;
    let gram = space.gram_of(&seq)?;
    let diag = Rational::new(-(n as i64 - 1), n as i64);
    let off = Rational::new(1, n as i64);
    for a in 0..n {
        for b in 0..n {
            let expected = if a == b { &diag } else { &off };
            if &gram[(a, b)] != expected {
                return Err(Error::verification(
                    "lambda-lemma",
                    format!(
                        "n = {n}: <lambda_{a}, lambda_{b}> = {} but expected {expected}",
                        gram[(a, b)]
                    ),
                ));
            }
        }
    }
    // The reflections telescope: lambda_k = Lambda_1 - E_1 - ... - E_k.
    let lambda1 = fundamental_weight(n)?;
    for (k, v) in seq.iter().enumerate() {
        let mut expected = lambda1.clone();
        for r in 0..k {
            expected = &expected - &LatticeVector::unit(n - 1, r);
        }
        if v != &expected {
            return Err(Error::verification(
                "lambda-lemma",
                format!("n = {n}: lambda_{k} differs from Lambda_1 - E_1 - ... - E_{k}"),
            ));
        }
    }
    Ok(())
}

/// The orthogonal sum `h^!(H_2(W)) + sum A_{n_i - 1}` standing in for
/// `H_2(Z; Q)`, together with the target space of `iota_*`.
#[derive(Debug, Clone)]
pub struct ZModel {
    space: BilinearSpace,
    orbit_dim: usize,
    blocks: Vec<(RootBlock, usize)>,
    y_space: BilinearSpace,
    n: [usize; 3],
    gamma: [u32; 3],
}

fn h_label(label: &BasisLabel) -> BasisLabel {
    match *label {
        BasisLabel::Center => BasisLabel::HClass(OrbitClass::Center),
        BasisLabel::Arm { axis, index } => BasisLabel::HClass(OrbitClass::Arm { axis, index }),
        _ => BasisLabel::HClass(OrbitClass::Delta0),
    }
}

impl ZModel {
    pub fn build(orbit: &OrbitSpace, stats: &GroupStats, gab: &GabrielovNumbers) -> Result<Self> {
        let h_block = BilinearSpace::new(
            orbit.space().basis().iter().map(h_label).collect(),
            orbit.space().gram().clone(),
        )?;
        let mut blocks = Vec::new();
        let mut offset = h_block.dim();
        for axis in 1..=3 {
            let n = stats.n(axis);
            if n < 2 {
                continue;
            }
            for point in 1..=gab.gamma(axis) as usize {
                let block = RootBlock::new(axis, point, n)?;
                let dim = block.space.dim();
                blocks.push((block, offset));
                offset += dim;
            }
        }
        let mut parts: Vec<&BilinearSpace> = vec![&h_block];
        parts.extend(blocks.iter().map(|(b, _)| &b.space));
        let space = BilinearSpace::direct_sum(&parts)?;

        let mut y_parts = Vec::new();
        for axis in 1..=3 {
            let n = stats.n(axis);
            if n >= 2 {
                let basis = (1..n)
                    .map(|root| BasisLabel::YExceptional { axis, root })
                    .collect();
                y_parts.push(BilinearSpace::new(basis, neg_cartan_a(n))?);
            }
        }
        let y_space = BilinearSpace::direct_sum(&y_parts.iter().collect::<Vec<_>>())?;

        Ok(ZModel {
            space,
            orbit_dim: h_block.dim(),
            blocks,
            y_space,
            n: stats.n,
            gamma: gab.gamma,
        })
    }

    pub fn space(&self) -> &BilinearSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn orbit_dim(&self) -> usize {
        self.orbit_dim
    }

    pub fn root_blocks(&self) -> impl Iterator<Item = &RootBlock> {
        self.blocks.iter().map(|(b, _)| b)
    }

    /// Space spanned by the exceptional classes `E^i_k` of `Y`.
    pub fn y_space(&self) -> &BilinearSpace {
        &self.y_space
    }

    /// `h^!`: orbit-space coordinates placed in the orbit block.
    pub fn h_shriek(&self, orbit_coords: &LatticeVector) -> Result<LatticeVector> {
        if orbit_coords.dim() != self.orbit_dim {
            return Err(Error::Input(format!(
                "orbit vector has length {}, expected {}",
                orbit_coords.dim(),
                self.orbit_dim
            )));
        }
        let mut c = orbit_coords.coords().to_vec();
        c.resize(self.dim(), Rational::zero());
        Ok(LatticeVector::new(c))
    }

    /// Root-block coordinates for the point `(axis, point)` placed in Z.
    pub fn embed_block(
        &self,
        axis: usize,
        point: usize,
        local: &LatticeVector,
    ) -> Result<LatticeVector> {
        let (block, offset) = self
            .blocks
            .iter()
            .find(|(b, _)| b.axis == axis && b.point == point)
            .ok_or_else(|| Error::Input(format!("no root block at axis {axis}, point {point}")))?;
        if local.dim() != block.space.dim() {
            return Err(Error::Input(
                "root-block vector has the wrong length".into(),
            ));
        }
        let mut c = vec![Rational::zero(); self.dim()];
        for (k, x) in local.coords().iter().enumerate() {
            c[offset + k] = x.clone();
        }
        Ok(LatticeVector::new(c))
    }

    /// `iota_*`: `E^i_{j,k} -> E^i_k`, `h^!`-classes to zero.
    pub fn iota_pushforward(&self, v: &LatticeVector) -> Result<LatticeVector> {
        if v.dim() != self.dim() {
            return Err(Error::Input("vector does not live in the Z model".into()));
        }
        let mut out = vec![Rational::zero(); self.y_space.dim()];
        for (block, offset) in &self.blocks {
            for root in 1..block.n {
                let target = BasisLabel::YExceptional {
                    axis: block.axis,
                    root,
                };
                let idx = self
                    .y_space
                    .index_of(&target)
                    .expect("every axis with n > 1 has a Y block");
                out[idx] += &v.coords()[offset + root - 1];
            }
        }
        Ok(LatticeVector::new(out))
    }

    pub fn n(&self, axis: usize) -> usize {
        self.n[axis - 1]
    }

    pub fn gamma(&self, axis: usize) -> u32 {
        self.gamma[axis - 1]
    }
}

pub fn build_z_model(
    orbit: &OrbitSpace,
    stats: &GroupStats,
    gab: &GabrielovNumbers,
) -> Result<ZModel> {
    ZModel::build(orbit, stats, gab)
}

pub fn iota_pushforward(zm: &ZModel, v: &LatticeVector) -> Result<LatticeVector> {
    zm.iota_pushforward(v)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatArm {
    pub axis: usize,
    pub index: usize,
    pub sheet: usize,
    pub vector: LatticeVector,
}

impl HatArm {
    pub fn label(&self) -> BasisLabel {
        BasisLabel::HatArm {
            axis: self.axis,
            index: self.index,
            sheet: self.sheet,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatBasis {
    pub delta0_hat: LatticeVector,
    pub delta1_hat: LatticeVector,
    /// Ordered by axis, then index, then sheet.
    pub arms: Vec<HatArm>,
}

impl HatBasis {
    /// `B-hat` followed by `dhat0`.
    pub fn vectors_with_radical(&self) -> Vec<LatticeVector> {
        let mut v = vec![self.delta1_hat.clone()];
        v.extend(self.arms.iter().map(|a| a.vector.clone()));
        v.push(self.delta0_hat.clone());
        v
    }

    pub fn labels_with_radical(&self) -> Vec<BasisLabel> {
        let mut l = vec![BasisLabel::Center];
        l.extend(self.arms.iter().map(HatArm::label));
        l.push(BasisLabel::Delta0Hat);
        l
    }

    /// The Gram matrix of `B-hat + {dhat0}` as a space of its own.
    pub fn to_space(&self, zm: &ZModel) -> Result<BilinearSpace> {
        zm.space()
            .spanned_by(self.labels_with_radical(), &self.vectors_with_radical())
    }
}

pub fn build_hat_basis(orbit: &OrbitSpace, stats: &GroupStats, zm: &ZModel) -> Result<HatBasis> {
    let ob = orbit.space();
    let orbit_vec = |label: &BasisLabel| ob.basis_vector(label);
    let order = Rational::from(stats.order);

    let delta0_hat = zm.h_shriek(&orbit_vec(&BasisLabel::Delta0Bar)?.scale(&order.recip()))?;
    let delta1_hat = zm.h_shriek(&orbit_vec(&BasisLabel::Center)?)?;

    let mut arms = Vec::new();
    for axis in 1..=3 {
        let n = zm.n(axis);
        let lambdas = if n > 1 {
            lambda_sequence(n)?
        } else {
            Vec::new()
        };
        for index in 1..zm.gamma(axis) as usize {
            let bar = orbit_vec(&BasisLabel::Arm { axis, index })?;
            if n == 1 {
                arms.push(HatArm {
                    axis,
                    index,
                    sheet: 0,
                    vector: zm.h_shriek(&bar)?,
                });
                continue;
            }
            let base = zm.h_shriek(&bar.scale(&Rational::new(1, n as i64)))?;
            for (sheet, lambda) in lambdas.iter().enumerate() {
                let here = zm.embed_block(axis, index, lambda)?;
                let next = zm.embed_block(axis, index + 1, lambda)?;
                arms.push(HatArm {
                    axis,
                    index,
                    sheet,
                    vector: &(&base + &here) - &next,
                });
            }
        }
    }
    arms.sort_by_key(|a| (a.axis, a.index, a.sheet));
    Ok(HatBasis {
        delta0_hat,
        delta1_hat,
        arms,
    })
}

/// Closed-form `<a, b>_Z` for two hat labels: the star diagram with centre
/// `2 j_G - 2`, every arm vertex `-2`, and unit edges along each sheet.
pub fn closed_form_hat_entry(a: &BasisLabel, b: &BasisLabel, stats: &GroupStats) -> Rational {
    use BasisLabel::{Center, HatArm};
    match (*a, *b) {
        (Center, Center) => Rational::from(2 * stats.j_g as i64 - 2),
        (
            HatArm {
                axis: i,
                index: j,
                sheet: k,
            },
            HatArm {
                axis: i2,
                index: j2,
                sheet: k2,
            },
        ) if i == i2 && k == k2 => {
            if j == j2 {
                Rational::from(-2)
            } else if j.abs_diff(j2) == 1 {
                Rational::one()
            } else {
                Rational::zero()
            }
        }
        (Center, HatArm { index: 1, .. }) | (HatArm { index: 1, .. }, Center) => Rational::one(),
        _ => Rational::zero(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HatReport {
    /// `|B-hat| + 1`.
    pub basis_size: usize,
    pub rank: usize,
    /// Whether the Gram of `B-hat + {dhat0}` has only integer entries.
    /// Informational only.
    pub gram_is_integral: bool,
    /// Dimension of `iota_*` applied to all exceptional curves.
    pub iota_image_dim: usize,
}

const CHECK: &str = "hat-lemma";

pub fn verify_hat_lemma(
    zm: &ZModel,
    hb: &HatBasis,
    stats: &GroupStats,
    dims: &DimensionReport,
) -> Result<HatReport> {
    let hat_space = hb.to_space(zm)?;
    let labels = hat_space.basis();
    let gram = hat_space.gram();
    let radical = labels.len() - 1;
    for a in 0..radical {
        for b in 0..radical {
            let expected = closed_form_hat_entry(&labels[a], &labels[b], stats);
            if gram[(a, b)] != expected {
                return Err(Error::verification(
                    CHECK,
                    format!(
                        "<{}, {}>_Z = {} but the closed form gives {expected}",
                        labels[a],
                        labels[b],
                        gram[(a, b)]
                    ),
                ));
            }
        }
    }
    for idx in 0..zm.dim() {
        let e = LatticeVector::unit(zm.dim(), idx);
        if !zm.space().pair(&hb.delta0_hat, &e)?.is_zero() {
            return Err(Error::verification(
                CHECK,
                format!("dhat0 pairs nontrivially with {}", zm.space().basis()[idx]),
            ));
        }
    }

    let vectors = hb.vectors_with_radical();
    let coords: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let rank = Matrix::from_rows(coords).rank();
    if vectors.len() != dims.h3_y_z || rank != vectors.len() {
        return Err(Error::verification(
            CHECK,
            format!(
                "hat basis has {} vectors of rank {rank}; dim H_3(Y,Z) = {}",
                vectors.len(),
                dims.h3_y_z
            ),
        ));
    }

    for (v, label) in vectors.iter().zip(hb.labels_with_radical()) {
        if !zm.iota_pushforward(v)?.is_zero() {
            return Err(Error::verification(
                CHECK,
                format!("iota_* of {label} is nonzero"),
            ));
        }
    }

    let images: Vec<Vec<Rational>> = zm
        .space()
        .basis()
        .iter()
        .enumerate()
        .filter(|(_, l)| matches!(l, BasisLabel::Exceptional { .. }))
        .map(|(idx, _)| {
            zm.iota_pushforward(&LatticeVector::unit(zm.dim(), idx))
                .map(LatticeVector::into_coords)
        })
        .collect::<Result<_>>()?;
    let iota_image_dim = if images.is_empty() {
        0
    } else {
        Matrix::from_rows(images).rank()
    };
    if iota_image_dim != stats.stabilizer_excess() {
        return Err(Error::verification(
            CHECK,
            format!(
                "iota_* image has dimension {iota_image_dim}, expected sum (n_i - 1) = {}",
                stats.stabilizer_excess()
            ),
        ));
    }

    Ok(HatReport {
        basis_size: vectors.len(),
        rank,
        gram_is_integral: gram.is_integral(),
        iota_image_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn fundamental_weights() {
        assert_eq!(
            fundamental_weight(2).unwrap(),
            LatticeVector::new(vec![q(1, 2)])
        );
        assert_eq!(
            fundamental_weight(3).unwrap(),
            LatticeVector::new(vec![q(2, 3), q(1, 3)])
        );
        assert!(fundamental_weight(1).is_err());
        for n in 2..8 {
            let w = fundamental_weight(n).unwrap();
            assert_eq!(
                a_space(n).unwrap().pair(&w, &w).unwrap(),
                q(-(n as i64 - 1), n as i64)
            );
        }
    }

    #[test]
    fn lambda_sequences() {
        let s2 = lambda_sequence(2).unwrap();
        assert_eq!(
            s2,
            vec![
                LatticeVector::new(vec![q(1, 2)]),
                LatticeVector::new(vec![q(-1, 2)])
            ]
        );
        let s3 = lambda_sequence(3).unwrap();
        assert_eq!(s3.len(), 3);
        assert_eq!(s3[1], LatticeVector::new(vec![q(-1, 3), q(1, 3)]));
        assert!(lambda_sequence(0).is_err());
    }

    #[test]
    fn lambda_lemma_small_ranks() {
        for n in 2..=12 {
            verify_lambda_lemma(n).unwrap();
        }
    }

    #[test]
    fn root_block_is_negated_cartan() {
        let b = RootBlock::new(3, 2, 4).unwrap();
        assert_eq!(
            b.space.gram(),
            &Matrix::from_i64_rows(&[&[-2, 1, 0], &[1, -2, 1], &[0, 1, -2]])
        );
        assert!(RootBlock::new(1, 1, 1).is_err());
    }
}

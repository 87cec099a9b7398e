//! Finite abelian diagonal symmetry groups of the cusp polynomial inside
//! SL(3,C), their age grading, and the numbers derived from it.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::cusp::CuspTriple;
use crate::error::{Error, Result};
use crate::exact::Rational;

/// Diagonal element `x_i -> exp(2 pi i alpha_i) x_i` with each exponent
/// in `[0, 1)` and integral exponent sum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement([Rational; 3]);

impl GroupElement {
    /// Reduces each exponent mod 1 and checks the SL(3,C) condition.
    pub fn new(exponents: [Rational; 3]) -> Result<Self> {
        let exps = exponents.map(|a| a.fract_positive());
        let sum: Rational = exps.iter().sum();
        if !sum.is_integer() {
            let shown = GroupElement(exps.clone()).to_string();
            return Err(Error::NotSpecialLinear(shown, sum.fract_positive()));
        }
        Ok(GroupElement(exps))
    }

    /// `(num_1/den, num_2/den, num_3/den)`, the config-file form.
    pub fn from_fractions(num: [i64; 3], den: i64) -> Result<Self> {
        if den <= 0 {
            return Err(Error::Input(format!(
                "generator denominator must be positive, got {den}"
            )));
        }
        GroupElement::new(num.map(|n| Rational::new(n, den)))
    }

    pub fn identity() -> Self {
        GroupElement([Rational::zero(), Rational::zero(), Rational::zero()])
    }

    pub fn exponents(&self) -> &[Rational; 3] {
        &self.0
    }

    /// Exponent on a 1-based axis.
    pub fn exponent(&self, axis: usize) -> &Rational {
        &self.0[axis - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement([0, 1, 2].map(|i| (&self.0[i] + &other.0[i]).fract_positive()))
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement(self.0.clone().map(|a| (-a).fract_positive()))
    }

    /// Multiplicative order: lcm of the exponent denominators.
    pub fn order(&self) -> usize {
        let d = Rational::common_denominator(self.0.iter());
        usize::try_from(d).expect("element order fits in usize")
    }

    /// `alpha_1 + alpha_2 + alpha_3`, an integer in `0..=2`.
    pub fn age(&self) -> u32 {
        let sum: Rational = self.0.iter().sum();
        sum.to_i64().expect("SL condition makes the age integral") as u32
    }

    /// Dimension of the fixed locus in C^3.
    pub fn fixed_dim(&self) -> usize {
        self.0.iter().filter(|a| a.is_zero()).count()
    }

    /// `gamma'_i * alpha_i` must be integral for `x_i^{gamma'_i}` to be
    /// invariant.
    pub fn check_symmetry_of(&self, t: &CuspTriple) -> Result<()> {
        for axis in 1..=3 {
            let scaled = self.exponent(axis) * Rational::from(t.arm(axis) as i64);
            if !scaled.is_integer() {
                return Err(Error::NotSymmetry(self.to_string()));
            }
        }
        Ok(())
    }

    /// Integer shifts `a_i = gamma'_i alpha_i` in `0..gamma'_i`.
    pub fn shifts(&self, t: &CuspTriple) -> Result<[i64; 3]> {
        self.check_symmetry_of(t)?;
        Ok([1, 2, 3].map(|axis| {
            (self.exponent(axis) * Rational::from(t.arm(axis) as i64))
                .to_i64()
                .expect("checked integral above")
        }))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.0;
        write!(f, "({a},{b},{c})")
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// A finite subgroup of the diagonal symmetries of one cusp polynomial.
/// Elements are kept sorted, so two equal groups compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetryGroup {
    triple: CuspTriple,
    elements: Vec<GroupElement>,
}

impl SymmetryGroup {
    pub fn trivial(t: &CuspTriple) -> Self {
        SymmetryGroup {
            triple: *t,
            elements: vec![GroupElement::identity()],
        }
    }

    /// Subgroup generated by `gens`, checked to be symmetries of `t`.
    pub fn generate(t: &CuspTriple, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            g.check_symmetry_of(t)?;
        }
        Ok(SymmetryGroup {
            triple: *t,
            elements: closure(gens),
        })
    }

    pub fn triple(&self) -> &CuspTriple {
        &self.triple
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    /// The stabilizer `K_i` of the coordinate `x_axis`.
    pub fn coordinate_stabilizer(&self, axis: usize) -> Vec<&GroupElement> {
        self.elements
            .iter()
            .filter(|g| g.exponent(axis).is_zero())
            .collect()
    }

    /// A short generator list, picked greedily from the sorted elements.
    pub fn generators(&self) -> Vec<GroupElement> {
        let mut gens = Vec::new();
        let mut span = closure(&gens);
        for g in &self.elements {
            if span.binary_search(g).is_err() {
                gens.push(g.clone());
                span = closure(&gens);
            }
        }
        gens
    }
}

impl fmt::Display for SymmetryGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(ToString::to_string).collect();
        if gens.is_empty() {
            write!(f, "{} / {{id}}", self.triple)
        } else {
            write!(f, "{} / <{}>", self.triple, gens.join(", "))
        }
    }
}

/// Closure under composition, returned sorted and including the identity.
fn closure(gens: &[GroupElement]) -> Vec<GroupElement> {
    let mut seen: BTreeSet<GroupElement> = BTreeSet::new();
    let mut queue = VecDeque::from([GroupElement::identity()]);
    while let Some(g) = queue.pop_front() {
        if seen.contains(&g) {
            continue;
        }
        for h in gens {
            let next = g.compose(h);
            if !seen.contains(&next) {
                queue.push_back(next);
            }
        }
        seen.insert(g);
    }
    seen.into_iter().collect()
}

/// `<h, g>` as the union of the cosets `h + k g`, or `None` when its order
/// would exceed `max_order`. `h` must be a sorted subgroup.
fn extend(h: &[GroupElement], g: &GroupElement, max_order: usize) -> Option<Vec<GroupElement>> {
    let mut steps = vec![GroupElement::identity()];
    let mut step = g.clone();
    while h.binary_search(&step).is_err() {
        steps.push(step.clone());
        step = step.compose(g);
    }
    if h.len() * steps.len() > max_order {
        return None;
    }
    let mut out: Vec<GroupElement> = steps
        .iter()
        .flat_map(|s| h.iter().map(move |x| x.compose(s)))
        .collect();
    out.sort();
    Some(out)
}

pub fn close_generators(t: &CuspTriple, gens: &[GroupElement]) -> Result<SymmetryGroup> {
    SymmetryGroup::generate(t, gens)
}

pub fn age(g: &GroupElement) -> u32 {
    g.age()
}

pub fn fixed_dim(g: &GroupElement) -> usize {
    g.fixed_dim()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgeEntry {
    pub element: GroupElement,
    pub age: u32,
    pub fixed_dim: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupStats {
    pub order: usize,
    /// `n_i = |K_i|`.
    pub n: [usize; 3],
    /// Elements of age 1 with an isolated fixed point.
    pub j_g: usize,
    pub age_table: Vec<AgeEntry>,
    /// `|G| = 1 + 2 j_G + sum (n_i - 1)`.
    pub order_identity: bool,
}

impl GroupStats {
    pub fn n(&self, axis: usize) -> usize {
        self.n[axis - 1]
    }

    /// `sum (n_i - 1)`.
    pub fn stabilizer_excess(&self) -> usize {
        self.n.iter().map(|n| n - 1).sum()
    }
}

pub fn compute_stats(group: &SymmetryGroup) -> Result<GroupStats> {
    let age_table: Vec<AgeEntry> = group
        .elements()
        .iter()
        .map(|g| AgeEntry {
            element: g.clone(),
            age: g.age(),
            fixed_dim: g.fixed_dim(),
        })
        .collect();
    let n = [1, 2, 3].map(|axis| group.coordinate_stabilizer(axis).len());
    let j_g = age_table
        .iter()
        .filter(|e| e.age == 1 && e.fixed_dim == 0)
        .count();
    let order = group.order();
    let stats = GroupStats {
        order,
        n,
        j_g,
        age_table,
        order_identity: order == 1 + 2 * j_g + n.iter().map(|x| x - 1).sum::<usize>(),
    };
    if !stats.order_identity {
        return Err(Error::Consistency(format!(
            "order identity fails for {group}: |G| = {order}, j_G = {j_g}, n = {n:?}"
        )));
    }
    Ok(stats)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GabrielovNumbers {
    /// `gamma_i = gamma'_i / |G/K_i|` per axis.
    pub gamma: [u32; 3],
    /// Each `gamma_i` repeated `n_i` times, ones dropped.
    pub multiset: Vec<u32>,
}

impl GabrielovNumbers {
    pub fn gamma(&self, axis: usize) -> u32 {
        self.gamma[axis - 1]
    }
}

impl fmt::Display for GabrielovNumbers {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.multiset.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

pub fn gabrielov_numbers(
    t: &CuspTriple,
    group: &SymmetryGroup,
    stats: &GroupStats,
) -> Result<GabrielovNumbers> {
    let mut gamma = [0u32; 3];
    for axis in 1..=3 {
        let quotient = group.order() / stats.n(axis);
        let arm = t.arm(axis) as usize;
        if !group.order().is_multiple_of(stats.n(axis)) || !arm.is_multiple_of(quotient) {
            return Err(Error::Consistency(format!(
                "|G/K_{axis}| = {}/{} does not divide gamma'_{axis} = {arm}",
                group.order(),
                stats.n(axis)
            )));
        }
        gamma[axis - 1] = (arm / quotient) as u32;
    }
    let multiset = (1..=3)
        .flat_map(|axis| std::iter::repeat_n(gamma[axis - 1], stats.n(axis)))
        .filter(|&g| g != 1)
        .collect();
    Ok(GabrielovNumbers { gamma, multiset })
}

/// Dimensions of the homology groups attached to the crepant resolution.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DimensionReport {
    pub milnor_number: usize,
    /// `dim H_2(Y) = j_G + sum (n_i - 1)`.
    pub h2_y: usize,
    /// `#{g : age(g) = 1}`, which must equal `h2_y`.
    pub age_one_count: usize,
    /// `dim H_4(Y) = j_G`.
    pub h4_y: usize,
    /// `dim H_2(Y, Z) = j_G`.
    pub h2_y_z: usize,
    /// `dim H_3(Y, Z) = 2 + sum n_i (gamma_i - 1)`.
    pub h3_y_z: usize,
    /// `dim H^2(V)^G = 2 + sum (gamma_i - 1)`.
    pub h2_v_invariant: usize,
}

pub fn cohomology_dims(
    t: &CuspTriple,
    stats: &GroupStats,
    gab: &GabrielovNumbers,
) -> DimensionReport {
    let arms = |w: &dyn Fn(usize) -> usize| -> usize {
        (1..=3)
            .map(|axis| w(axis) * (gab.gamma(axis) as usize - 1))
            .sum()
    };
    DimensionReport {
        milnor_number: t.milnor_number(),
        h2_y: stats.j_g + stats.stabilizer_excess(),
        age_one_count: stats.age_table.iter().filter(|e| e.age == 1).count(),
        h4_y: stats.j_g,
        h2_y_z: stats.j_g,
        h3_y_z: 2 + arms(&|axis| stats.n(axis)),
        h2_v_invariant: 2 + arms(&|_| 1),
    }
}

/// Every element of the maximal diagonal symmetry group of `t` in SL(3,C):
/// `alpha_i in (1/gamma'_i) Z / Z` with integral exponent sum. Sorted.
pub fn maximal_group_elements(t: &CuspTriple) -> Vec<GroupElement> {
    let [p, q, r] = t.gamma_prime().map(i64::from);
    let mut out = Vec::new();
    for a in 0..p {
        for b in 0..q {
            for c in 0..r {
                let exps = [
                    Rational::new(a, p),
                    Rational::new(b, q),
                    Rational::new(c, r),
                ];
                if let Ok(g) = GroupElement::new(exps) {
                    out.push(g);
                }
            }
        }
    }
    out.sort();
    out
}

/// All subgroups of the maximal symmetry group with order at most
/// `max_order`, sorted by order and then by element list.
///
/// Grows subgroups one generator at a time from the trivial group. The
/// maximal group is enumerated in full first, so the cost is exponential in
/// the size of the exponents.
pub fn enumerate_symmetry_groups(t: &CuspTriple, max_order: usize) -> Vec<SymmetryGroup> {
    let all = maximal_group_elements(t);
    let mut found: BTreeSet<Vec<GroupElement>> = BTreeSet::new();
    let mut frontier = vec![vec![GroupElement::identity()]];
    if max_order >= 1 {
        found.insert(frontier[0].clone());
    }
    while let Some(h) = frontier.pop() {
        for g in &all {
            if h.binary_search(g).is_ok() {
                continue;
            }
            let Some(bigger) = extend(&h, g, max_order) else {
                continue;
            };
            if found.insert(bigger.clone()) {
                frontier.push(bigger);
            }
        }
    }
    let mut groups: Vec<SymmetryGroup> = found
        .into_iter()
        .map(|elements| SymmetryGroup {
            triple: *t,
            elements,
        })
        .collect();
    groups.sort_by(|a, b| {
        a.order()
            .cmp(&b.order())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    groups
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: u32, b: u32, c: u32) -> CuspTriple {
        CuspTriple::new([a, b, c]).unwrap()
    }

    fn el(num: [i64; 3], den: i64) -> GroupElement {
        GroupElement::from_fractions(num, den).unwrap()
    }

    #[test]
    fn cyclic_closure_of_quarter_turn() {
        let g = close_generators(&t(4, 4, 4), &[el([1, 3, 0], 4)]).unwrap();
        assert_eq!(
            g.elements(),
            &[
                el([0, 0, 0], 1),
                el([1, 3, 0], 4),
                el([1, 1, 0], 2),
                el([3, 1, 0], 4)
            ]
            .into_iter()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect::<Vec<_>>()[..]
        );
        assert_eq!(g.order(), 4);
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        let g = close_generators(&t(2, 3, 7), &[]).unwrap();
        assert!(g.is_trivial());
        assert_eq!(g, SymmetryGroup::trivial(&t(2, 3, 7)));
    }

    #[test]
    fn rejects_non_sl_and_non_symmetry() {
        let err = GroupElement::from_fractions([3, 2, 0], 6).unwrap_err();
        assert!(matches!(err, Error::NotSpecialLinear(_, _)));
        assert!(err.to_string().contains("not in SL(3,C)"));

        let g = el([1, 2, 0], 3);
        let err = close_generators(&t(4, 4, 4), &[g]).unwrap_err();
        assert!(matches!(err, Error::NotSymmetry(_)));
        assert!(err.to_string().contains("not a symmetry of f"));
    }

    #[test]
    fn ages_and_fixed_dims() {
        assert_eq!(age(&GroupElement::identity()), 0);
        assert_eq!(age(&el([1, 1, 1], 3)), 1);
        assert_eq!(age(&el([2, 2, 2], 3)), 2);
        assert_eq!(fixed_dim(&GroupElement::identity()), 3);
        assert_eq!(fixed_dim(&el([1, 3, 0], 4)), 1);
        assert_eq!(fixed_dim(&el([1, 1, 1], 3)), 0);
    }

    #[test]
    fn stats_of_named_groups() {
        let g = close_generators(&t(4, 4, 4), &[el([1, 3, 0], 4)]).unwrap();
        let s = compute_stats(&g).unwrap();
        assert_eq!((s.n, s.j_g, s.order), ([1, 1, 4], 0, 4));

        let g = close_generators(&t(6, 6, 6), &[el([1, 1, 1], 3)]).unwrap();
        let s = compute_stats(&g).unwrap();
        assert_eq!((s.n, s.j_g, s.order), ([1, 1, 1], 1, 3));

        let s = compute_stats(&SymmetryGroup::trivial(&t(2, 3, 7))).unwrap();
        assert_eq!((s.n, s.j_g, s.order), ([1, 1, 1], 0, 1));
        assert!(s.order_identity);
    }

    #[test]
    fn gabrielov_numbers_of_named_groups() {
        let tr = t(4, 4, 4);
        let g = close_generators(&tr, &[el([1, 3, 0], 4)]).unwrap();
        let gab = gabrielov_numbers(&tr, &g, &compute_stats(&g).unwrap()).unwrap();
        assert_eq!(gab.gamma, [1, 1, 4]);
        assert_eq!(gab.multiset, vec![4, 4, 4, 4]);

        let tr = t(6, 6, 6);
        let g = close_generators(&tr, &[el([1, 1, 1], 3)]).unwrap();
        let gab = gabrielov_numbers(&tr, &g, &compute_stats(&g).unwrap()).unwrap();
        assert_eq!(gab.gamma, [2, 2, 2]);
        assert_eq!(gab.multiset, vec![2, 2, 2]);

        let tr = t(2, 3, 7);
        let g = SymmetryGroup::trivial(&tr);
        let gab = gabrielov_numbers(&tr, &g, &compute_stats(&g).unwrap()).unwrap();
        assert_eq!(gab.gamma, [2, 3, 7]);
        assert_eq!(gab.to_string(), "2,3,7");
    }

    fn dims(tr: CuspTriple, gens: &[GroupElement]) -> DimensionReport {
        let g = close_generators(&tr, gens).unwrap();
        let s = compute_stats(&g).unwrap();
        let gab = gabrielov_numbers(&tr, &g, &s).unwrap();
        cohomology_dims(&tr, &s, &gab)
    }

    #[test]
    fn dimension_formulas() {
        let d = dims(t(4, 4, 4), &[el([1, 3, 0], 4)]);
        assert_eq!((d.h2_y, d.h4_y, d.h3_y_z, d.h2_v_invariant), (3, 0, 14, 5));
        let d = dims(t(6, 6, 6), &[el([1, 1, 1], 3)]);
        assert_eq!((d.h2_y, d.h4_y, d.h3_y_z, d.h2_v_invariant), (1, 1, 5, 5));
        let d = dims(t(2, 3, 7), &[]);
        assert_eq!((d.h2_y, d.h4_y, d.h3_y_z), (0, 0, 11));
        assert_eq!(d.h3_y_z, d.milnor_number);
    }

    #[test]
    fn enumeration_of_237_is_trivial() {
        let groups = enumerate_symmetry_groups(&t(2, 3, 7), 100);
        assert_eq!(groups.len(), 1);
        assert!(groups[0].is_trivial());
        assert_eq!(maximal_group_elements(&t(2, 3, 7)).len(), 1);
    }

    #[test]
    fn enumeration_of_444_up_to_four() {
        let tr = t(4, 4, 4);
        let groups = enumerate_symmetry_groups(&tr, 4);
        assert!(groups.iter().all(|g| g.order() <= 4));
        for gens in [
            vec![el([1, 1, 0], 2)],
            vec![el([1, 3, 0], 4)],
            vec![el([3, 0, 1], 4)],
            vec![el([0, 1, 3], 4)],
            vec![el([0, 1, 1], 2)],
        ] {
            let g = close_generators(&tr, &gens).unwrap();
            assert!(groups.contains(&g), "missing {g}");
        }
        assert_eq!(enumerate_symmetry_groups(&tr, 1).len(), 1);
    }

    #[test]
    fn inverse_ages_complement() {
        for g in maximal_group_elements(&t(6, 6, 6)) {
            if g.is_identity() {
                continue;
            }
            assert_eq!(g.age() + g.inverse().age(), 3 - g.fixed_dim() as u32, "{g}");
            assert!(g.compose(&g.inverse()).is_identity());
        }
    }
}

//! Named verification checks run against a [`Case`].

use serde::Serialize;

use super::emit::formats;
use super::registry::{Registry, Strategy};
use super::stage::{stages, DiagramStage, MilnorQuotient, Orbit, Resolution};
use crate::action::verify_action;
use crate::case::Case;
use crate::cusp::CuspTriple;
use crate::error::{Error, Result};
use crate::exact::{BasisLabel, Rational};
use crate::orbit::{orbit_pairing, verify_orbit_lemma};
use crate::resolution::{verify_hat_lemma, verify_lambda_lemma};
use crate::symmetry::{enumerate_symmetry_groups, GroupElement, SymmetryGroup};

pub trait Check: Strategy {
    /// Returns a one-line summary on success.
    fn run(&self, case: &Case) -> Result<String>;
}

fn fail(check: &str, detail: impl Into<String>) -> Error {
    Error::verification(check, detail)
}

pub struct OrderIdentity;
pub struct GroupActionCheck;
pub struct OrbitLemma;
pub struct LambdaLemma;
pub struct HatLemma;
pub struct DiagramShape;

impl Strategy for OrderIdentity {
    fn name(&self) -> &'static str {
        "order-identity"
    }
    fn summary(&self) -> &'static str {
        "|G| = 1 + 2 j_G + sum (n_i - 1) and the age counts behind it"
    }
}

impl Check for OrderIdentity {
    fn run(&self, case: &Case) -> Result<String> {
        let name = self.name();
        let s = &case.stats;
        if !s.order_identity {
            return Err(fail(
                name,
                format!("|G| = {} but 1 + 2 j_G + sum (n_i - 1) differs", s.order),
            ));
        }
        if case.dims.age_one_count != case.dims.h2_y {
            return Err(fail(
                name,
                format!(
                    "#{{age = 1}} = {} but j_G + sum (n_i - 1) = {}",
                    case.dims.age_one_count, case.dims.h2_y
                ),
            ));
        }
        let line_fixers = s
            .age_table
            .iter()
            .filter(|e| e.age == 1 && e.fixed_dim == 1)
            .count();
        if line_fixers != s.stabilizer_excess() {
            return Err(fail(
                name,
                format!(
                    "#{{age 1, N_g = 1}} = {line_fixers}, expected {}",
                    s.stabilizer_excess()
                ),
            ));
        }
        for e in s.age_table.iter().filter(|e| !e.element.is_identity()) {
            let inv = e.element.inverse().age();
            if e.age + inv != 3 - e.fixed_dim as u32 {
                return Err(fail(
                    name,
                    format!(
                        "age({}) + age(inverse) = {} != 3 - N_g",
                        e.element,
                        e.age + inv
                    ),
                ));
            }
        }
        for axis in 1..=3 {
            let (g, gp) = (case.gabrielov.gamma(axis), case.triple.arm(axis));
            if g == 0 || gp % g != 0 {
                return Err(fail(
                    name,
                    format!("gamma_{axis} = {g} does not divide gamma'_{axis} = {gp}"),
                ));
            }
        }
        Ok(format!(
            "|G| = {} = 1 + 2*{} + {}",
            s.order,
            s.j_g,
            s.stabilizer_excess()
        ))
    }
}

impl Strategy for GroupActionCheck {
    fn name(&self) -> &'static str {
        "group-action"
    }
    fn summary(&self) -> &'static str {
        "isometry, homomorphism, fixed d0, invariant dimension"
    }
}

impl Check for GroupActionCheck {
    fn run(&self, case: &Case) -> Result<String> {
        let r = verify_action(&case.lattice, &case.group, &case.action, &case.gabrielov)?;
        Ok(format!(
            "{} elements; invariant dimension {}",
            r.elements_checked, r.invariant_dim
        ))
    }
}

impl Strategy for OrbitLemma {
    fn name(&self) -> &'static str {
        "orbit-lemma"
    }
    fn summary(&self) -> &'static str {
        "brute-force orbit Gram equals the closed form"
    }
}

impl Check for OrbitLemma {
    fn run(&self, case: &Case) -> Result<String> {
        let r = verify_orbit_lemma(
            &case.lattice,
            &case.action,
            &case.orbit,
            &case.stats,
            &case.gabrielov,
        )?;
        // Replacing a representative by a G-translate leaves the pairing alone.
        let reps = case.orbit.representatives();
        for g in case.group.generators() {
            let m = case.action.get(&g).expect("generators are elements");
            for (a, u) in reps.iter().enumerate() {
                let gu = m.apply(u);
                for (b, v) in reps.iter().enumerate() {
                    let lhs = orbit_pairing(&case.lattice, &case.action, &gu, v)?;
                    let rhs = &case.orbit.space().gram()[(a, b)];
                    if &lhs != rhs {
                        return Err(fail(
                            self.name(),
                            format!(
                                "translating representative {} by {g} changes its pairing",
                                case.orbit.space().basis()[a]
                            ),
                        ));
                    }
                }
            }
        }
        Ok(format!(
            "{} entries; {} representative checks",
            r.entries_checked, r.representative_checks
        ))
    }
}

impl Strategy for LambdaLemma {
    fn name(&self) -> &'static str {
        "lambda-lemma"
    }
    fn summary(&self) -> &'static str {
        "pairings of the reflected fundamental weights"
    }
}

impl Check for LambdaLemma {
    fn run(&self, case: &Case) -> Result<String> {
        let mut ns: Vec<usize> = case.stats.n.iter().copied().filter(|&n| n > 1).collect();
        ns.sort_unstable();
        ns.dedup();
        for &n in &ns {
            verify_lambda_lemma(n)?;
        }
        Ok(format!("ranks {ns:?}"))
    }
}

impl Strategy for HatLemma {
    fn name(&self) -> &'static str {
        "hat-lemma"
    }
    fn summary(&self) -> &'static str {
        "star Gram, radical dhat0, rank formula, kernel of iota_*"
    }
}

impl Check for HatLemma {
    fn run(&self, case: &Case) -> Result<String> {
        let r = verify_hat_lemma(&case.z_model, &case.hat, &case.stats, &case.dims)?;
        Ok(format!(
            "{} independent vectors = dim H_3(Y,Z); Gram integral: {}",
            r.basis_size, r.gram_is_integral
        ))
    }
}

impl Strategy for DiagramShape {
    fn name(&self) -> &'static str {
        "diagrams"
    }
    fn summary(&self) -> &'static str {
        "resolution vertex weights, trivial-group reduction, deterministic output"
    }
}

impl Check for DiagramShape {
    fn run(&self, case: &Case) -> Result<String> {
        let name = self.name();
        let star = Resolution.graph(case)?;
        let centre = BasisLabel::Center.id();
        for v in &star.vertices {
            let expected = if v.id == centre {
                Rational::from(2 * case.stats.j_g as i64 - 2)
            } else {
                Rational::from(-2)
            };
            if v.self_intersection != expected {
                return Err(fail(
                    name,
                    format!(
                        "resolution vertex {} has self-intersection {}",
                        v.label, v.self_intersection
                    ),
                ));
            }
        }
        if case.group.is_trivial() {
            let t = MilnorQuotient
                .space(case)?
                .without(MilnorQuotient.dropped());
            let o = Orbit.space(case)?.without(Orbit.dropped());
            let h = Resolution.space(case)?.without(Resolution.dropped());
            if t.gram() != o.gram() || t.gram() != h.gram() {
                return Err(fail(
                    name,
                    "trivial group: T, orbit and star diagrams differ",
                ));
            }
        }
        for stage in stages().iter() {
            for format in formats().iter() {
                let a = format.render(&stage.graph(case)?);
                let b = format.render(&stage.graph(case)?);
                if a != b {
                    return Err(fail(
                        name,
                        format!(
                            "{} {} output is not deterministic",
                            stage.name(),
                            format.name()
                        ),
                    ));
                }
            }
        }
        Ok(format!("{} star vertices", star.vertices.len()))
    }
}

pub fn checks() -> Registry<dyn Check> {
    let mut r: Registry<dyn Check> = Registry::new();
    r.register(Box::new(OrderIdentity))
        .register(Box::new(GroupActionCheck))
        .register(Box::new(OrbitLemma))
        .register(Box::new(LambdaLemma))
        .register(Box::new(HatLemma))
        .register(Box::new(DiagramShape));
    r
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub case: String,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckOutcome> {
        self.outcomes.iter().filter(|o| !o.passed)
    }
}

pub fn run_checks(case: &Case, registry: &Registry<dyn Check>) -> VerificationReport {
    let outcomes = registry
        .iter()
        .map(|c| match c.run(case) {
            Ok(detail) => CheckOutcome {
                check: c.name().to_string(),
                passed: true,
                detail,
            },
            Err(e) => CheckOutcome {
                check: c.name().to_string(),
                passed: false,
                detail: e.to_string(),
            },
        })
        .collect();
    VerificationReport {
        case: case.group.to_string(),
        outcomes,
    }
}

/// Cusp triples whose subgroups the self-test sweeps.
pub const CATALOG_TRIPLES: [[u32; 3]; 4] = [[2, 3, 7], [4, 4, 4], [6, 6, 6], [3, 3, 4]];

/// A named instance: `gamma'` and its generators as `(num, den)`.
pub type NamedGroup = ([u32; 3], &'static [([i64; 3], i64)]);

pub const CATALOG_GROUPS: [NamedGroup; 4] = [
    ([2, 3, 7], &[]),
    ([4, 4, 4], &[([1, 3, 0], 4)]),
    ([4, 4, 4], &[([1, 1, 0], 2)]),
    ([6, 6, 6], &[([1, 1, 1], 3)]),
];

pub const DEFAULT_ORDER_BOUND: usize = 36;

/// The named instances followed by every enumerated subgroup of the catalog
/// triples up to `order_bound`, without repeats.
pub fn catalog_groups(order_bound: usize) -> Result<Vec<SymmetryGroup>> {
    let mut out: Vec<SymmetryGroup> = Vec::new();
    for (gamma, gens) in CATALOG_GROUPS {
        let t = CuspTriple::new(gamma)?;
        let gens = gens
            .iter()
            .map(|&(n, d)| GroupElement::from_fractions(n, d))
            .collect::<Result<Vec<_>>>()?;
        out.push(SymmetryGroup::generate(&t, &gens)?);
    }
    for gamma in CATALOG_TRIPLES {
        let t = CuspTriple::new(gamma)?;
        for g in enumerate_symmetry_groups(&t, order_bound) {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct SelftestReport {
    pub order_bound: usize,
    pub lambda_ranks: Vec<usize>,
    pub lambda_failures: Vec<String>,
    pub cases: Vec<VerificationReport>,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.lambda_failures.is_empty() && self.cases.iter().all(VerificationReport::passed)
    }
}

/// The lambda lemma for `n = 2..=12`, then every check on every catalog
/// case. Cases run on scoped threads; results keep catalog order.
pub fn selftest(order_bound: usize) -> Result<SelftestReport> {
    let lambda_ranks: Vec<usize> = (2..=12).collect();
    let lambda_failures = lambda_ranks
        .iter()
        .filter_map(|&n| verify_lambda_lemma(n).err().map(|e| e.to_string()))
        .collect();
    let groups = catalog_groups(order_bound)?;
    let registry = checks();
    let cases = std::thread::scope(|scope| {
        let handles: Vec<_> = groups
            .iter()
            .map(|g| {
                let registry = &registry;
                scope.spawn(move || match Case::new(g.clone()) {
                    Ok(case) => run_checks(&case, registry),
                    Err(e) => VerificationReport {
                        case: g.to_string(),
                        outcomes: vec![CheckOutcome {
                            check: "build".into(),
                            passed: false,
                            detail: e.to_string(),
                        }],
                    },
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    Ok(SelftestReport {
        order_bound,
        lambda_ranks,
        lambda_failures,
        cases,
    })
}

//! Candidate `(a,b)`-fundamental triplets `(X, E, Delta)`: the fundamental
//! divisor, a condition-by-condition validation report, normalization and
//! the Cartier multiplier.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::elimination::{eliminate, EliminationError, ResolutionModel};
use crate::geometry::{
    degree_on_curve, total_degree, CurveRole, GeometryError, Location, SubschemePoint,
    WeightedConfig,
};
use crate::picard::{canonical_class, intersect, rat, DivisorClass, Rational, Surface};

/// Errors raised while building triplets.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripletError {
    #[error("multi-index ({a},{b}) must satisfy 1/2 <= b/a < 1 with a, b positive")]
    BadIndex { a: u32, b: u32 },
    #[error("-aK - E is not divisible by b")]
    NoIntegralSolution,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error("point {point} refers to {role}, which is not a component of E")]
    UnknownRole { point: u32, role: CurveRole },
    #[error("point {point}: {0} and {1} do not meet", .roles.0, .roles.1)]
    NotACrossing {
        point: u32,
        roles: (CurveRole, CurveRole),
    },
    #[error("two points sit at the crossing of {0} and {1}")]
    CrossingUsedTwice(CurveRole, CurveRole),
    #[error("point id {0} is used twice")]
    DuplicatePointId(u32),
    #[error("Cartier multiplier {0} is outside {{1, 2, 3, 5}}")]
    UnexpectedCartierMultiplier(u32),
}

/// The multi-index `(a, b)` with `1/2 <= b/a < 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    a: u32,
    b: u32,
}

impl MultiIndex {
    pub fn new(a: u32, b: u32) -> Result<Self, TripletError> {
        if a == 0 || b == 0 || b >= a || 2 * b < a {
            return Err(TripletError::BadIndex { a, b });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn b(&self) -> u32 {
        self.b
    }

    /// The weight `s = a - b` used in the elimination.
    pub fn s(&self) -> i64 {
        i64::from(self.a - self.b)
    }

    /// `b/a`.
    pub fn ratio(&self) -> Rational {
        Rational::new(i64::from(self.b), i64::from(self.a))
    }

    /// `b > 1`, the range covered by the enumeration.
    pub fn in_enumeration_scope(&self) -> bool {
        self.b > 1
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A candidate triplet.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripletConfig {
    index: MultiIndex,
    config: WeightedConfig,
    points: Vec<SubschemePoint>,
}

impl TripletConfig {
    /// Checks that every point refers to components of `E`, that crossings
    /// are genuine and used at most once, and that ids are distinct.
    pub fn new(
        index: MultiIndex,
        config: WeightedConfig,
        points: Vec<SubschemePoint>,
    ) -> Result<Self, TripletError> {
        let mut ids = BTreeSet::new();
        let mut crossings = BTreeSet::new();
        for p in &points {
            if !ids.insert(p.id()) {
                return Err(TripletError::DuplicatePointId(p.id()));
            }
            for role in p.location().roles() {
                if !config.contains(&role) {
                    return Err(TripletError::UnknownRole {
                        point: p.id(),
                        role,
                    });
                }
            }
            if let Location::AtIntersection(r1, r2) = p.location() {
                if !config.meets(&r1, &r2) {
                    return Err(TripletError::NotACrossing {
                        point: p.id(),
                        roles: (r1, r2),
                    });
                }
                if !crossings.insert((r1, r2)) {
                    return Err(TripletError::CrossingUsedTwice(r1, r2));
                }
            }
        }
        Ok(Self {
            index,
            config,
            points,
        })
    }

    pub fn index(&self) -> MultiIndex {
        self.index
    }

    pub fn config(&self) -> &WeightedConfig {
        &self.config
    }

    pub fn points(&self) -> &[SubschemePoint] {
        &self.points
    }

    pub fn surface(&self) -> Surface {
        self.config.surface()
    }

    /// The fundamental divisor `L` with `bL = -aK - E`.
    pub fn fundamental_divisor(&self) -> Result<DivisorClass, TripletError> {
        fundamental_divisor(self.index, &self.config)
    }

    /// `deg Delta` (zero for an empty subscheme).
    pub fn degree(&self) -> u32 {
        total_degree(&self.points).unwrap_or(0)
    }

    /// Elimination with weight `a - b` and the fundamental divisor.
    pub fn eliminate(&self) -> Result<ResolutionModel, TripletEliminationError> {
        let l = self
            .fundamental_divisor()
            .map_err(|_| TripletEliminationError::NoFundamentalDivisor)?;
        eliminate(&self.config, &self.points, self.index.s(), &l)
            .map_err(TripletEliminationError::Elimination)
    }
}

/// Failure of [`TripletConfig::eliminate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TripletEliminationError {
    #[error("the triplet has no integral fundamental divisor")]
    NoFundamentalDivisor,
    #[error(transparent)]
    Elimination(EliminationError),
}

/// `L = (-aK_X - E)/b` when integral.
pub fn fundamental_divisor(
    index: MultiIndex,
    config: &WeightedConfig,
) -> Result<DivisorClass, TripletError> {
    let k = canonical_class(config.surface());
    let num = k.scale(rat(-i64::from(index.a()))) - config.class();
    let l = num.scale(Rational::new(1, i64::from(index.b())));
    if l.is_integral() {
        Ok(l)
    } else {
        Err(TripletError::NoIntegralSolution)
    }
}

/// The checks performed by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// The subscheme has degree at least 2.
    Degree,
    /// Every coefficient of `E` is an integer in `1..a`.
    CoefficientRange,
    /// `-aK - E` is divisible by `b`.
    IntegralFundamentalDivisor,
    /// `K + L` is nef and `(K + L).L > 0`.
    AdjointNef,
    /// `(L.E_i) = deg(Delta cap E_i)` for every component.
    ComponentDegrees,
    /// Balance equation and coefficient bound at every point.
    PointBalance,
    /// Extra conditions on `F_n` when `K + L` is not big.
    NonBigNormalForm,
    /// `E_M` is effective with coefficients in `0..a` and `L_M` is trivial
    /// on its support.
    EliminationEffective,
    /// `(E.gamma) <= 0` for every `(-1)`-curve `gamma` of `X`.
    MinusOneCurves,
}

impl Condition {
    pub const ALL: [Condition; 9] = [
        Condition::Degree,
        Condition::CoefficientRange,
        Condition::IntegralFundamentalDivisor,
        Condition::AdjointNef,
        Condition::ComponentDegrees,
        Condition::PointBalance,
        Condition::NonBigNormalForm,
        Condition::EliminationEffective,
        Condition::MinusOneCurves,
    ];

    /// Short identifier `C1` to `C9`.
    pub fn id(&self) -> &'static str {
        match self {
            Condition::Degree => "C1",
            Condition::CoefficientRange => "C2",
            Condition::IntegralFundamentalDivisor => "C3",
            Condition::AdjointNef => "C4",
            Condition::ComponentDegrees => "C5",
            Condition::PointBalance => "C6",
            Condition::NonBigNormalForm => "C7",
            Condition::EliminationEffective => "C8",
            Condition::MinusOneCurves => "C9",
        }
    }

    /// The mathematical statement being checked.
    pub fn reference(&self) -> &'static str {
        match self {
            Condition::Degree => "Delta satisfies the (nu1)-condition and deg Delta >= 2",
            Condition::CoefficientRange => "coeff E is contained in {1, ..., a-1}",
            Condition::IntegralFundamentalDivisor => "there is a divisor L with bL ~ -aK_X - E",
            Condition::AdjointNef => "K_X + L is nef and (K_X + L . L) > 0",
            Condition::ComponentDegrees => "(L . E_1) = deg(Delta cap E_1) for every component E_1",
            Condition::PointBalance => {
                "ml = (a-b)k with (a-b)(k-l) < a on one component; m1 + m2 l2 = (a-b)k with (a-b)(k-l2) < a at a crossing"
            }
            Condition::NonBigNormalForm => {
                "K_X + L not big on F_n: Delta misses sigma, and every other section D in E has n + D^2 >= deg(Delta cap D), with coeff_sigma E >= coeff_D E at equality"
            }
            Condition::EliminationEffective => {
                "E_M is effective, coeff E_M lies in {1, ..., a-1} and L_M is trivial on its support"
            }
            Condition::MinusOneCurves => "(E . gamma) <= 0 for every (-1)-curve gamma on X",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Outcome of one condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionResult {
    pub condition: Condition,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail for every condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub results: Vec<ConditionResult>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ConditionResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn failed(&self, condition: Condition) -> bool {
        self.results
            .iter()
            .any(|r| r.condition == condition && !r.passed)
    }
}

fn outcome(condition: Condition, problems: Vec<String>, note: &str) -> ConditionResult {
    ConditionResult {
        condition,
        passed: problems.is_empty(),
        detail: if problems.is_empty() {
            note.to_string()
        } else {
            problems.join("; ")
        },
    }
}

/// Local balance check at one point; returns a description of the failure.
fn point_balance(t: &TripletConfig, p: &SubschemePoint) -> Option<String> {
    let a = rat(i64::from(t.index.a()));
    let s = rat(t.index.s());
    let k = rat(i64::from(p.degree()));
    match p.location() {
        Location::GenericOnSurface => Some(format!(
            "point {} lies on no component, so mult_P E = 0 < a-b",
            p.id()
        )),
        Location::OnCurve(role) => {
            let m = t.config.coeff_of(&role);
            let l = rat(i64::from(p.contact(&role)));
            if m * l != s * k {
                Some(format!(
                    "point {}: m l = {} but (a-b) k = {}",
                    p.id(),
                    m * l,
                    s * k
                ))
            } else if s * (k - l) >= a {
                Some(format!(
                    "point {}: (a-b)(k-l) = {} >= a",
                    p.id(),
                    s * (k - l)
                ))
            } else {
                None
            }
        }
        Location::AtIntersection(..) => {
            let (tr, other) = p.crossing_branches().expect("crossing");
            let m1 = t.config.coeff_of(&tr);
            let m2 = t.config.coeff_of(&other);
            let l2 = rat(i64::from(p.contact(&other)));
            if m1 + m2 * l2 != s * k {
                Some(format!(
                    "point {}: m1 + m2 l2 = {} but (a-b) k = {}",
                    p.id(),
                    m1 + m2 * l2,
                    s * k
                ))
            } else if s * (k - l2) >= a {
                Some(format!(
                    "point {}: (a-b)(k-l2) = {} >= a",
                    p.id(),
                    s * (k - l2)
                ))
            } else {
                None
            }
        }
    }
}

/// True when a role is a section of `F_n` other than the minimal section.
fn is_other_section(role: &CurveRole, surface: Surface) -> bool {
    match role {
        CurveRole::SectionAtInfinity => true,
        CurveRole::IrreducibleMember(c) => {
            matches!(surface, Surface::Hirzebruch(_)) && c.first() == Rational::one()
        }
        _ => false,
    }
}

/// Checks the sufficient conditions for `(X, E, Delta)` to be an
/// `(a,b)`-fundamental triplet, reporting every condition.
pub fn validate(t: &TripletConfig) -> ValidationReport {
    let surface = t.surface();
    let a = i64::from(t.index.a());
    let mut results = Vec::with_capacity(9);

    // C1
    let deg = t.degree();
    let mut problems = Vec::new();
    if deg < 2 {
        problems.push(format!("deg Delta = {deg} < 2"));
    }
    results.push(outcome(
        Condition::Degree,
        problems,
        &format!("deg Delta = {deg}"),
    ));

    // C2
    let mut problems = Vec::new();
    if t.config.components().is_empty() {
        problems.push("E is zero".to_string());
    }
    for c in t.config.components() {
        if !c.coeff.is_integer() || c.coeff < Rational::one() || c.coeff > rat(a - 1) {
            problems.push(format!(
                "coefficient {} of {} outside 1..{}",
                c.coeff,
                c.role,
                a - 1
            ));
        }
    }
    results.push(outcome(Condition::CoefficientRange, problems, "ok"));

    // C3
    let l_class = t.fundamental_divisor().ok();
    let problems = if l_class.is_none() {
        vec![format!(
            "-{}K - E is not divisible by {}",
            t.index.a(),
            t.index.b()
        )]
    } else {
        Vec::new()
    };
    let note = l_class.map(|l| format!("L = {l}")).unwrap_or_default();
    results.push(outcome(
        Condition::IntegralFundamentalDivisor,
        problems,
        &note,
    ));

    let missing_l = || vec!["needs an integral fundamental divisor".to_string()];
    let Some(l) = l_class else {
        for c in [
            Condition::AdjointNef,
            Condition::ComponentDegrees,
            Condition::PointBalance,
            Condition::NonBigNormalForm,
            Condition::EliminationEffective,
        ] {
            results.push(outcome(c, missing_l(), ""));
        }
        results.push(minus_one_curves(t));
        results.sort_by_key(|r| r.condition);
        return ValidationReport { results };
    };

    // C4
    let adjoint = canonical_class(surface) + l;
    let adj_dot_l = intersect(&adjoint, &l).expect("same surface");
    let nef = adjoint.is_nef();
    let mut problems = Vec::new();
    if !nef {
        problems.push(format!("K + L = {adjoint} is not nef"));
    }
    if adj_dot_l <= Rational::zero() {
        problems.push(format!("(K + L . L) = {adj_dot_l} <= 0"));
    }
    results.push(outcome(Condition::AdjointNef, problems, "ok"));

    // C5
    let mut problems = Vec::new();
    for c in t.config.components() {
        let class = c.role.class(surface).expect("validated configuration");
        let ld = intersect(&l, &class).expect("same surface");
        let dd = degree_on_curve(&t.config, &t.points, &c.role).expect("component");
        if ld != rat(i64::from(dd)) {
            problems.push(format!(
                "(L . {}) = {} but deg(Delta cap {}) = {}",
                c.role, ld, c.role, dd
            ));
        }
    }
    results.push(outcome(Condition::ComponentDegrees, problems, "ok"));

    // C6
    let problems = t
        .points
        .iter()
        .filter_map(|p| point_balance(t, p))
        .collect();
    results.push(outcome(Condition::PointBalance, problems, "ok"));

    // C7
    let non_big = matches!(surface, Surface::Hirzebruch(_)) && nef && adjoint.square().is_zero();
    let mut problems = Vec::new();
    let mut note = "K + L is big or X = P2".to_string();
    if !nef {
        note = "not evaluated: K + L is not nef".to_string();
    } else if non_big {
        note = "ok".to_string();
        let n = surface.hirzebruch_degree().expect("hirzebruch");
        if n == 0 {
            problems.push("on F0 every point lies on a minimal section".to_string());
        }
        for p in &t.points {
            if p.contact(&CurveRole::MinimalSection) > 0 {
                problems.push(format!("point {} lies on sigma", p.id()));
            }
        }
        let coeff_sigma = t.config.coeff_of(&CurveRole::MinimalSection);
        for c in t.config.components() {
            if !is_other_section(&c.role, surface) {
                continue;
            }
            let class = c.role.class(surface).expect("validated");
            let lhs = rat(i64::from(n)) + class.square();
            let dd = rat(i64::from(
                degree_on_curve(&t.config, &t.points, &c.role).expect("component"),
            ));
            if lhs < dd {
                problems.push(format!(
                    "n + ({})^2 = {} < deg(Delta cap {}) = {}",
                    c.role, lhs, c.role, dd
                ));
            } else if lhs == dd && coeff_sigma < c.coeff {
                problems.push(format!(
                    "equality for {} but coeff_sigma E = {} < {}",
                    c.role, coeff_sigma, c.coeff
                ));
            }
        }
    }
    results.push(outcome(Condition::NonBigNormalForm, problems, &note));

    // C8
    let mut problems = Vec::new();
    if t.points.is_empty() {
        problems.push("empty subscheme".to_string());
    } else {
        match eliminate(&t.config, &t.points, t.index.s(), &l) {
            Err(e) => problems.push(e.to_string()),
            Ok(model) => {
                for c in model.curves() {
                    if c.em_coeff.is_zero() {
                        continue;
                    }
                    if !c.em_coeff.is_integer() || c.em_coeff > rat(a - 1) {
                        problems.push(format!(
                            "coefficient {} on {} outside 1..{}",
                            c.em_coeff,
                            c.id,
                            a - 1
                        ));
                    }
                    if !c.lm_intersection.is_zero() {
                        problems.push(format!(
                            "(L_M . {}) = {} on the support of E_M",
                            c.id, c.lm_intersection
                        ));
                    }
                }
            }
        }
    }
    results.push(outcome(Condition::EliminationEffective, problems, "ok"));

    // C9
    results.push(minus_one_curves(t));
    ValidationReport { results }
}

fn minus_one_curves(t: &TripletConfig) -> ConditionResult {
    let mut problems = Vec::new();
    if t.surface() == Surface::Hirzebruch(1) {
        let e_sigma = intersect(&t.config.class(), &DivisorClass::sigma(1)).expect("same surface");
        if e_sigma > Rational::zero() {
            problems.push(format!("(E . sigma) = {e_sigma} > 0 on F1"));
        }
    }
    outcome(Condition::MinusOneCurves, problems, "ok")
}

/// True when no `d >= 2` dividing both `a` and `b` divides every
/// coefficient of `E`.
pub fn is_normalized(t: &TripletConfig) -> bool {
    let g = t.index.a().gcd(&t.index.b());
    (2..=g).filter(|d| g.is_multiple_of(*d)).all(|d| {
        let d = i64::from(d);
        t.config
            .components()
            .iter()
            .any(|c| !c.coeff.is_integer() || c.coeff.to_integer() % d != 0)
    })
}

/// The factor `m = gcd(a, b)`, so that `b/a = b_0/a_0` in lowest terms with
/// `a = m a_0`.
pub fn cartier_multiplier(t: &TripletConfig) -> Result<u32, TripletError> {
    let m = t.index.a().gcd(&t.index.b());
    if [1, 2, 3, 5].contains(&m) {
        Ok(m)
    } else {
        Err(TripletError::UnexpectedCartierMultiplier(m))
    }
}

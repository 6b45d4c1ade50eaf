//! Combinatorial models of the weighted curve configuration `E`, of the
//! curvilinear subscheme `Delta` and of multiplicity sequences.
//!
//! Points are never given coordinates. A point of `Delta` is described by the
//! components of `E` it lies on, its degree `k` and its contact `l` with each
//! of those components.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::picard::{intersect, rat, DivisorClass, Rational, Surface};

/// Errors raised while building or querying configurations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("role {role} does not exist on {surface}")]
    RoleSurfaceMismatch { role: CurveRole, surface: Surface },
    #[error("role {0} appears twice in the configuration")]
    DuplicateRole(CurveRole),
    #[error("coefficient of {role} must be positive, got {coeff}")]
    NonPositiveCoefficient { role: CurveRole, coeff: Rational },
    #[error("{0} and {1} meet in more than one point or not transversally")]
    NotSimpleNormalCrossing(CurveRole, CurveRole),
    #[error("the configuration has more than one {0}")]
    RepeatedSpecialRole(&'static str),
    #[error("a member class must be integral and effective, got {0}")]
    BadMemberClass(DivisorClass),
    #[error("the subscheme is empty")]
    EmptySubscheme,
    #[error("point {point}: degree must be positive")]
    ZeroDegree { point: u32 },
    #[error("point {point}: contact {contact} with {role} exceeds degree {degree}")]
    ContactExceedsDegree {
        point: u32,
        role: CurveRole,
        contact: u32,
        degree: u32,
    },
    #[error("point {point}: contact with incident curve {role} must be at least 1")]
    ZeroContact { point: u32, role: CurveRole },
    #[error("point {point}: contact given for non-incident curve {role}")]
    NonIncidentContact { point: u32, role: CurveRole },
    #[error("point {point}: missing contact for incident curve {role}")]
    MissingContact { point: u32, role: CurveRole },
    #[error("point {point}: both contacts at a crossing exceed 1")]
    NoTransversalBranch { point: u32 },
    #[error("point {point}: a crossing needs two distinct curves")]
    DegenerateCrossing { point: u32 },
    #[error("role {0} is not part of the configuration")]
    UnknownRole(CurveRole),
    #[error("multiplicity sequences have lengths {0} and {1}")]
    LengthMismatch(usize, usize),
    #[error("resulting arithmetic genus {0} is negative")]
    NegativeGenus(i64),
    #[error("multiplicity bounds need a class on a Hirzebruch surface")]
    NotHirzebruch,
}

/// The role an irreducible component of `E` plays on the surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveRole {
    /// A line on `P^2`, distinguished by an id.
    Line(u32),
    /// The minimal section `sigma` of `F_n`.
    MinimalSection,
    /// A fiber of `F_n`, distinguished by an id.
    Fiber(u32),
    /// A section in `|sigma + n l|` disjoint from `sigma`.
    SectionAtInfinity,
    /// Any other smooth rational curve, recorded by its class.
    IrreducibleMember(DivisorClass),
}

impl CurveRole {
    /// Divisor class of the curve on `surface`.
    pub fn class(&self, surface: Surface) -> Result<DivisorClass, GeometryError> {
        let mismatch = || GeometryError::RoleSurfaceMismatch {
            role: *self,
            surface,
        };
        match (self, surface) {
            (CurveRole::Line(_), Surface::ProjectivePlane) => Ok(DivisorClass::line()),
            (CurveRole::MinimalSection, Surface::Hirzebruch(n)) => Ok(DivisorClass::sigma(n)),
            (CurveRole::Fiber(_), Surface::Hirzebruch(n)) => Ok(DivisorClass::fiber(n)),
            (CurveRole::SectionAtInfinity, Surface::Hirzebruch(n)) => {
                Ok(DivisorClass::sigma_infinity(n))
            }
            (CurveRole::IrreducibleMember(c), s) if c.surface() == s => Ok(*c),
            _ => Err(mismatch()),
        }
    }

    /// True for roles that only exist on `F_n`.
    pub fn is_hirzebruch_role(&self) -> bool {
        matches!(
            self,
            CurveRole::MinimalSection | CurveRole::Fiber(_) | CurveRole::SectionAtInfinity
        )
    }

    /// Parses the textual form produced by `Display`, using `surface` to
    /// read member classes.
    pub fn parse(text: &str, surface: Surface) -> Option<CurveRole> {
        let text = text.trim();
        if text == "sigma" {
            return Some(CurveRole::MinimalSection);
        }
        if text == "sigma_inf" {
            return Some(CurveRole::SectionAtInfinity);
        }
        let (head, tail) = text.split_once(':')?;
        match head {
            "line" => tail.parse().ok().map(CurveRole::Line),
            "fiber" => tail.parse().ok().map(CurveRole::Fiber),
            "member" => {
                let coeffs: Option<Vec<Rational>> =
                    tail.split(',').map(|c| parse_rational(c.trim())).collect();
                DivisorClass::from_coeffs(surface, &coeffs?)
                    .ok()
                    .map(CurveRole::IrreducibleMember)
            }
            _ => None,
        }
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().ok()?;
            let q: i64 = q.trim().parse().ok()?;
            if q == 0 {
                None
            } else {
                Some(Rational::new(p, q))
            }
        }
        None => text.trim().parse().ok().map(rat),
    }
}

impl fmt::Display for CurveRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveRole::Line(i) => write!(f, "line:{i}"),
            CurveRole::MinimalSection => write!(f, "sigma"),
            CurveRole::Fiber(i) => write!(f, "fiber:{i}"),
            CurveRole::SectionAtInfinity => write!(f, "sigma_inf"),
            CurveRole::IrreducibleMember(c) => {
                let parts: Vec<String> = c.coeffs().iter().map(|x| x.to_string()).collect();
                write!(f, "member:{}", parts.join(","))
            }
        }
    }
}

/// One irreducible component of `E` with its coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Component {
    pub role: CurveRole,
    pub coeff: Rational,
}

impl Component {
    pub fn new(role: CurveRole, coeff: Rational) -> Self {
        Self { role, coeff }
    }
}

/// A weighted simple normal crossing configuration of curves.
///
/// Two components meet in exactly one transversal point when their
/// classes intersect to 1 and are disjoint when they intersect to 0. No
/// three components pass through a common point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedConfig {
    surface: Surface,
    components: Vec<Component>,
}

impl WeightedConfig {
    /// Validates and stores the components, sorted by role.
    pub fn new(surface: Surface, mut components: Vec<Component>) -> Result<Self, GeometryError> {
        components.sort();
        let mut seen = BTreeSet::new();
        let mut sigma_inf = 0;
        for c in &components {
            let class = c.role.class(surface)?;
            if let CurveRole::IrreducibleMember(m) = c.role {
                let effective = m.coeffs().iter().all(|x| *x >= Rational::zero());
                if !m.is_integral() || !effective || m.is_zero() {
                    return Err(GeometryError::BadMemberClass(m));
                }
            }
            debug_assert_eq!(class.surface(), surface);
            if c.coeff <= Rational::zero() {
                return Err(GeometryError::NonPositiveCoefficient {
                    role: c.role,
                    coeff: c.coeff,
                });
            }
            if !seen.insert(c.role) {
                return Err(GeometryError::DuplicateRole(c.role));
            }
            if c.role == CurveRole::SectionAtInfinity {
                sigma_inf += 1;
            }
        }
        if sigma_inf > 1 {
            return Err(GeometryError::RepeatedSpecialRole("section at infinity"));
        }
        for (i, c1) in components.iter().enumerate() {
            for c2 in &components[i + 1..] {
                let x = intersect(&c1.role.class(surface)?, &c2.role.class(surface)?)
                    .expect("same surface");
                if x != Rational::zero() && x != Rational::one() {
                    return Err(GeometryError::NotSimpleNormalCrossing(c1.role, c2.role));
                }
            }
        }
        Ok(Self {
            surface,
            components,
        })
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// Components sorted by role.
    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn contains(&self, role: &CurveRole) -> bool {
        self.components.iter().any(|c| c.role == *role)
    }

    /// Coefficient of `role` in `E`, zero when absent.
    pub fn coeff_of(&self, role: &CurveRole) -> Rational {
        self.components
            .iter()
            .find(|c| c.role == *role)
            .map(|c| c.coeff)
            .unwrap_or_else(Rational::zero)
    }

    /// Class of `E`.
    pub fn class(&self) -> DivisorClass {
        self.components
            .iter()
            .fold(DivisorClass::zero(self.surface), |acc, c| {
                acc + c
                    .role
                    .class(self.surface)
                    .expect("validated")
                    .scale(c.coeff)
            })
    }

    /// Class of a component of the configuration.
    pub fn class_of(&self, role: &CurveRole) -> Result<DivisorClass, GeometryError> {
        if !self.contains(role) {
            return Err(GeometryError::UnknownRole(*role));
        }
        role.class(self.surface)
    }

    /// True when both roles are components and meet in a point.
    pub fn meets(&self, r1: &CurveRole, r2: &CurveRole) -> bool {
        if r1 == r2 || !self.contains(r1) || !self.contains(r2) {
            return false;
        }
        let c1 = r1.class(self.surface).expect("validated");
        let c2 = r2.class(self.surface).expect("validated");
        intersect(&c1, &c2).expect("same surface") == Rational::one()
    }

    /// All unordered pairs of components that meet, each as `(smaller, larger)`.
    pub fn crossings(&self) -> Vec<(CurveRole, CurveRole)> {
        let mut out = Vec::new();
        for (i, c1) in self.components.iter().enumerate() {
            for c2 in &self.components[i + 1..] {
                if self.meets(&c1.role, &c2.role) {
                    out.push((c1.role, c2.role));
                }
            }
        }
        out
    }
}

/// Where a point of `Delta` sits relative to `E`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Location {
    /// On exactly one component.
    OnCurve(CurveRole),
    /// At the crossing of two components, stored in increasing order.
    AtIntersection(CurveRole, CurveRole),
    /// On no component of `E`.
    GenericOnSurface,
}

impl Location {
    /// Builds a crossing location with its roles in canonical order.
    pub fn crossing(r1: CurveRole, r2: CurveRole) -> Self {
        if r1 <= r2 {
            Location::AtIntersection(r1, r2)
        } else {
            Location::AtIntersection(r2, r1)
        }
    }

    /// Roles of `E` through the point.
    pub fn roles(&self) -> Vec<CurveRole> {
        match self {
            Location::OnCurve(r) => vec![*r],
            Location::AtIntersection(r1, r2) => vec![*r1, *r2],
            Location::GenericOnSurface => Vec::new(),
        }
    }
}

/// One point `P` of the support of `Delta` with its local data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubschemePoint {
    id: u32,
    location: Location,
    degree: u32,
    contacts: BTreeMap<CurveRole, u32>,
}

impl SubschemePoint {
    /// Validates the local data of a point.
    pub fn new(
        id: u32,
        location: Location,
        degree: u32,
        contacts: BTreeMap<CurveRole, u32>,
    ) -> Result<Self, GeometryError> {
        if degree == 0 {
            return Err(GeometryError::ZeroDegree { point: id });
        }
        let location = match location {
            Location::AtIntersection(r1, r2) if r1 == r2 => {
                return Err(GeometryError::DegenerateCrossing { point: id })
            }
            Location::AtIntersection(r1, r2) => Location::crossing(r1, r2),
            other => other,
        };
        let incident = location.roles();
        for role in contacts.keys() {
            if !incident.contains(role) {
                return Err(GeometryError::NonIncidentContact {
                    point: id,
                    role: *role,
                });
            }
        }
        for role in &incident {
            let contact = *contacts.get(role).ok_or(GeometryError::MissingContact {
                point: id,
                role: *role,
            })?;
            if contact == 0 {
                return Err(GeometryError::ZeroContact {
                    point: id,
                    role: *role,
                });
            }
            if contact > degree {
                return Err(GeometryError::ContactExceedsDegree {
                    point: id,
                    role: *role,
                    contact,
                    degree,
                });
            }
        }
        if incident.len() == 2 && incident.iter().all(|r| contacts[r] > 1) {
            return Err(GeometryError::NoTransversalBranch { point: id });
        }
        Ok(Self {
            id,
            location,
            degree,
            contacts,
        })
    }

    /// A point lying on a single component.
    pub fn on_curve(
        id: u32,
        role: CurveRole,
        degree: u32,
        contact: u32,
    ) -> Result<Self, GeometryError> {
        Self::new(
            id,
            Location::OnCurve(role),
            degree,
            BTreeMap::from([(role, contact)]),
        )
    }

    /// A point at the crossing of `transversal` and `other`; the contact with
    /// `transversal` is 1 and the contact with `other` is `contact`.
    pub fn at_crossing(
        id: u32,
        transversal: CurveRole,
        other: CurveRole,
        degree: u32,
        contact: u32,
    ) -> Result<Self, GeometryError> {
        Self::new(
            id,
            Location::crossing(transversal, other),
            degree,
            BTreeMap::from([(transversal, 1), (other, contact)]),
        )
    }

    /// A point on no component of `E`.
    pub fn generic(id: u32, degree: u32) -> Result<Self, GeometryError> {
        Self::new(id, Location::GenericOnSurface, degree, BTreeMap::new())
    }

    pub fn id(&self) -> u32 {
        self.id
    }

    pub fn location(&self) -> Location {
        self.location
    }

    /// `mult_P Delta`.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn contacts(&self) -> &BTreeMap<CurveRole, u32> {
        &self.contacts
    }

    /// `mult_P(Delta cap role)`, zero when the point is not on `role`.
    pub fn contact(&self, role: &CurveRole) -> u32 {
        self.contacts.get(role).copied().unwrap_or(0)
    }

    /// Same point with a different id.
    pub fn with_id(&self, id: u32) -> Self {
        Self { id, ..self.clone() }
    }

    /// At a crossing, the branch with contact 1 and the other branch. When
    /// both contacts are 1 the smaller role is the transversal one.
    pub fn crossing_branches(&self) -> Option<(CurveRole, CurveRole)> {
        match self.location {
            Location::AtIntersection(r1, r2) => {
                if self.contacts[&r1] == 1 {
                    Some((r1, r2))
                } else {
                    Some((r2, r1))
                }
            }
            _ => None,
        }
    }

    /// Multiplicity sequence of a smooth curve `role` along the chain of
    /// blow-ups at this point: `contact` ones followed by zeros.
    pub fn multiplicity_sequence(&self, role: &CurveRole) -> MultiplicitySequence {
        let l = self.contact(role) as usize;
        let mut v = vec![1; l];
        v.resize(self.degree as usize, 0);
        MultiplicitySequence(v)
    }
}

/// Multiplicities `(m_1, ..., m_k)` of a curve along a sequence of blow-ups.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiplicitySequence(pub Vec<u32>);

/// `deg Delta`, the sum of the degrees of the points.
pub fn total_degree(points: &[SubschemePoint]) -> Result<u32, GeometryError> {
    if points.is_empty() {
        return Err(GeometryError::EmptySubscheme);
    }
    Ok(points.iter().map(|p| p.degree).sum())
}

/// `deg(Delta cap role)`, the sum of the contacts with `role`.
pub fn degree_on_curve(
    config: &WeightedConfig,
    points: &[SubschemePoint],
    role: &CurveRole,
) -> Result<u32, GeometryError> {
    if !config.contains(role) {
        return Err(GeometryError::UnknownRole(*role));
    }
    Ok(points.iter().map(|p| p.contact(role)).sum())
}

/// Arithmetic genus of the strict transform: `2p_a(C_M) = 2p_a(C) - sum m_i(m_i - 1)`.
pub fn genus_drop(p_a: i64, seq: &MultiplicitySequence) -> Result<i64, GeometryError> {
    let drop: i64 = seq
        .0
        .iter()
        .map(|&m| i64::from(m) * (i64::from(m) - 1))
        .sum();
    let twice = 2 * p_a - drop;
    debug_assert!(twice % 2 == 0);
    let g = twice / 2;
    if g < 0 {
        Err(GeometryError::NegativeGenus(g))
    } else {
        Ok(g)
    }
}

/// `(K_{M/X} . C_M) = sum m_i`.
pub fn relative_canonical_degree(seq: &MultiplicitySequence) -> i64 {
    seq.0.iter().map(|&m| i64::from(m)).sum()
}

/// `(C_1,M . C_2,M) = (C_1 . C_2) - sum m_{1,i} m_{2,i}`.
pub fn intersection_after(
    c1c2: i64,
    seq1: &MultiplicitySequence,
    seq2: &MultiplicitySequence,
) -> Result<i64, GeometryError> {
    if seq1.0.len() != seq2.0.len() {
        return Err(GeometryError::LengthMismatch(seq1.0.len(), seq2.0.len()));
    }
    let sum: i64 = seq1
        .0
        .iter()
        .zip(&seq2.0)
        .map(|(&a, &b)| i64::from(a) * i64::from(b))
        .sum();
    Ok(c1c2 - sum)
}

/// Lower bound `k_1 + k_2 - k` for the intersection number of two smooth
/// curves meeting `Delta` in subschemes of degrees `k_1` and `k_2`, where
/// `k = deg Delta`.
pub fn two_curve_lower_bound(k1: i64, k2: i64, k: i64) -> i64 {
    k1 + k2 - k
}

/// Upper bound for `mult_P D` on `F_n` for `D = s sigma + t l` effective:
/// `t` when `n >= 1` and `P` is off `sigma`, and always `s + coeff_{l_P} D`.
pub fn toric_mult_bound(
    d: &DivisorClass,
    p_on_sigma: bool,
    coeff_fiber_through_p: Rational,
) -> Result<Rational, GeometryError> {
    let n = d
        .surface()
        .hirzebruch_degree()
        .ok_or(GeometryError::NotHirzebruch)?;
    let s = d.first();
    let t = d.second();
    let mut bound = s + coeff_fiber_through_p;
    if n >= 1 && !p_on_sigma && t < bound {
        bound = t;
    }
    Ok(bound)
}

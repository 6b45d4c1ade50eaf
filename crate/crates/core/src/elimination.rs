//! Elimination of a curvilinear subscheme: the chain of blow-ups
//! `phi: M -> X` over each point of `Delta`, the divisors `K_{M/X}`,
//! `E_M = phi^*E - s K_{M/X}` and `L_M = phi^*L - K_{M/X}`, and the dual graph.
//!
//! Over a point `P` of degree `k` the exceptional locus is a straight chain
//! `G_1 - G_2 - ... - G_k` with self-intersections `-2, ..., -2, -1` and
//! `K_{M/X}` has coefficient `i` on `G_i`. A smooth component of `E` with
//! contact `l` at `P` passes through the first `l` centres, so its pull-back
//! has coefficient `min(i, l)` on `G_i`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{One, Zero};
use petgraph::graph::UnGraph;
use thiserror::Error;

use crate::geometry::{CurveRole, Location, SubschemePoint, WeightedConfig};
use crate::picard::{intersect, rat, DivisorClass, Rational, Surface};

/// Errors raised by [`eliminate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EliminationError {
    #[error("the subscheme is empty")]
    EmptySubscheme,
    #[error("E_M is not effective: coefficient {value} on {curve}")]
    NegativeCoefficient { curve: CurveId, value: Rational },
    #[error("point {point}: contact exceeds degree")]
    ContactExceedsDegree { point: u32 },
    #[error("point {point}: role {role} is not a component of E")]
    UnknownRole { point: u32, role: CurveRole },
    #[error("point {point}: {0} and {1} do not meet", .roles.0, .roles.1)]
    NotACrossing {
        point: u32,
        roles: (CurveRole, CurveRole),
    },
    #[error("two points of the subscheme sit at the crossing of {0} and {1}")]
    CrossingUsedTwice(CurveRole, CurveRole),
    #[error("point id {0} is used twice")]
    DuplicatePointId(u32),
    #[error("the weight s must be nonnegative, got {0}")]
    NegativeWeight(i64),
    #[error("the fundamental divisor lives on {found}, the configuration on {expected}")]
    SurfaceMismatch { expected: Surface, found: Surface },
}

/// A curve on the eliminated surface `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveId {
    /// Strict transform of a component of `E`.
    Strict(CurveRole),
    /// The curve `G_index` (1-based) of the chain over the point with id `point`.
    Chain { point: u32, index: u32 },
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::Strict(role) => write!(f, "{role}"),
            CurveId::Chain { point, index } => write!(f, "G{point}.{index}"),
        }
    }
}

/// How a point of `Delta` sits on `E`, with the data used by the
/// closed-form coefficient formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointSituation {
    /// On no component.
    Bare,
    /// On one component with coefficient `m` and contact `l`.
    OneComponent {
        role: CurveRole,
        m: Rational,
        l: u32,
    },
    /// At a crossing; the first branch has contact 1 and coefficient `m1`,
    /// the second has contact `l2` and coefficient `m2`.
    TwoComponents {
        transversal: CurveRole,
        m1: Rational,
        other: CurveRole,
        m2: Rational,
        l2: u32,
    },
}

/// The chain `G_1, ..., G_k` over one point of `Delta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalChain {
    pub point: u32,
    pub situation: PointSituation,
    pub self_intersections: Vec<i64>,
    pub kmx_coeffs: Vec<i64>,
    pub em_coeffs: Vec<Rational>,
    pub lm_intersections: Vec<Rational>,
}

impl ExceptionalChain {
    pub fn len(&self) -> usize {
        self.self_intersections.len()
    }

    pub fn is_empty(&self) -> bool {
        self.self_intersections.is_empty()
    }
}

/// Strict transform of a component of `E`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictTransform {
    pub role: CurveRole,
    pub class: DivisorClass,
    pub coeff: Rational,
    pub self_intersection: i64,
    pub lm_intersection: Rational,
    /// Number of blow-up centres the curve passes through.
    pub kmx_intersection: i64,
}

/// Output of the elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolutionModel {
    surface: Surface,
    fundamental: DivisorClass,
    strict: Vec<StrictTransform>,
    chains: Vec<ExceptionalChain>,
    edges: BTreeSet<(CurveId, CurveId)>,
}

/// Summary of one curve of the model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveData {
    pub id: CurveId,
    pub self_intersection: i64,
    pub em_coeff: Rational,
    pub kmx_coeff: i64,
    pub lm_intersection: Rational,
}

fn ordered(a: CurveId, b: CurveId) -> (CurveId, CurveId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Classifies a point against the configuration.
pub fn point_situation(
    config: &WeightedConfig,
    point: &SubschemePoint,
) -> Result<PointSituation, EliminationError> {
    let check = |role: &CurveRole| {
        if config.contains(role) {
            Ok(())
        } else {
            Err(EliminationError::UnknownRole {
                point: point.id(),
                role: *role,
            })
        }
    };
    match point.location() {
        Location::GenericOnSurface => Ok(PointSituation::Bare),
        Location::OnCurve(role) => {
            check(&role)?;
            Ok(PointSituation::OneComponent {
                role,
                m: config.coeff_of(&role),
                l: point.contact(&role),
            })
        }
        Location::AtIntersection(r1, r2) => {
            check(&r1)?;
            check(&r2)?;
            if !config.meets(&r1, &r2) {
                return Err(EliminationError::NotACrossing {
                    point: point.id(),
                    roles: (r1, r2),
                });
            }
            let (t, o) = point.crossing_branches().expect("crossing");
            Ok(PointSituation::TwoComponents {
                transversal: t,
                m1: config.coeff_of(&t),
                other: o,
                m2: config.coeff_of(&o),
                l2: point.contact(&o),
            })
        }
    }
}

/// Closed-form coefficient of `E_M` on `G_i`, `1 <= i <= k`.
pub fn chain_coefficient(situation: &PointSituation, s: Rational, i: u32) -> Rational {
    let i_r = rat(i64::from(i));
    match *situation {
        PointSituation::Bare => -s * i_r,
        PointSituation::OneComponent { m, l, .. } => {
            if i <= l {
                i_r * (m - s)
            } else {
                m * rat(i64::from(l)) - s * i_r
            }
        }
        PointSituation::TwoComponents { m1, m2, l2, .. } => {
            if i <= l2 {
                i_r * (m2 - s) + m1
            } else {
                m1 + rat(i64::from(l2)) * m2 - i_r * s
            }
        }
    }
}

/// Computes the elimination of `points` with weight `s` and fundamental
/// divisor `l_class`.
pub fn eliminate(
    config: &WeightedConfig,
    points: &[SubschemePoint],
    s: i64,
    l_class: &DivisorClass,
) -> Result<ResolutionModel, EliminationError> {
    if points.is_empty() {
        return Err(EliminationError::EmptySubscheme);
    }
    if s < 0 {
        return Err(EliminationError::NegativeWeight(s));
    }
    let surface = config.surface();
    if l_class.surface() != surface {
        return Err(EliminationError::SurfaceMismatch {
            expected: surface,
            found: l_class.surface(),
        });
    }
    let s_r = rat(s);

    let mut ids = BTreeSet::new();
    let mut used_crossings = BTreeSet::new();
    let mut situations = Vec::with_capacity(points.len());
    for p in points {
        if !ids.insert(p.id()) {
            return Err(EliminationError::DuplicatePointId(p.id()));
        }
        if p.contacts().values().any(|&c| c > p.degree()) {
            return Err(EliminationError::ContactExceedsDegree { point: p.id() });
        }
        if let Location::AtIntersection(r1, r2) = p.location() {
            if !used_crossings.insert((r1, r2)) {
                return Err(EliminationError::CrossingUsedTwice(r1, r2));
            }
        }
        situations.push(point_situation(config, p)?);
    }

    let mut edges = BTreeSet::new();
    let mut chains = Vec::with_capacity(points.len());
    for (p, situation) in points.iter().zip(&situations) {
        let k = p.degree();
        let mut em = Vec::with_capacity(k as usize);
        for i in 1..=k {
            let c = chain_coefficient(situation, s_r, i);
            if c < Rational::zero() {
                return Err(EliminationError::NegativeCoefficient {
                    curve: CurveId::Chain {
                        point: p.id(),
                        index: i,
                    },
                    value: c,
                });
            }
            em.push(c);
        }
        let mut self_int = vec![-2; k as usize];
        *self_int.last_mut().expect("k >= 1") = -1;
        let mut lm = vec![Rational::zero(); k as usize];
        *lm.last_mut().expect("k >= 1") = Rational::one();
        let kmx = (1..=i64::from(k)).collect();
        for i in 1..k {
            edges.insert(ordered(
                CurveId::Chain {
                    point: p.id(),
                    index: i,
                },
                CurveId::Chain {
                    point: p.id(),
                    index: i + 1,
                },
            ));
        }
        let chain = |index| CurveId::Chain {
            point: p.id(),
            index,
        };
        match *situation {
            PointSituation::Bare => {}
            PointSituation::OneComponent { role, l, .. } => {
                edges.insert(ordered(CurveId::Strict(role), chain(l)));
            }
            PointSituation::TwoComponents {
                transversal,
                other,
                l2,
                ..
            } => {
                edges.insert(ordered(CurveId::Strict(transversal), chain(1)));
                edges.insert(ordered(CurveId::Strict(other), chain(l2)));
            }
        }
        chains.push(ExceptionalChain {
            point: p.id(),
            situation: *situation,
            self_intersections: self_int,
            kmx_coeffs: kmx,
            em_coeffs: em,
            lm_intersections: lm,
        });
    }

    for (r1, r2) in config.crossings() {
        if !used_crossings.contains(&(r1, r2)) {
            edges.insert(ordered(CurveId::Strict(r1), CurveId::Strict(r2)));
        }
    }

    let mut strict = Vec::with_capacity(config.components().len());
    for c in config.components() {
        let class = c.role.class(surface).expect("validated configuration");
        let sq = class.square();
        debug_assert!(sq.is_integer());
        let through: i64 = points.iter().map(|p| i64::from(p.contact(&c.role))).sum();
        let l_dot = intersect(l_class, &class).expect("same surface");
        strict.push(StrictTransform {
            role: c.role,
            class,
            coeff: c.coeff,
            self_intersection: sq.to_integer() - through,
            lm_intersection: l_dot - rat(through),
            kmx_intersection: through,
        });
    }

    Ok(ResolutionModel {
        surface,
        fundamental: *l_class,
        strict,
        chains,
        edges,
    })
}

impl ResolutionModel {
    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// The class `L` the model was built from.
    pub fn fundamental(&self) -> DivisorClass {
        self.fundamental
    }

    pub fn strict_transforms(&self) -> &[StrictTransform] {
        &self.strict
    }

    pub fn chains(&self) -> &[ExceptionalChain] {
        &self.chains
    }

    /// Edges of the full dual graph of `E_M + sum of exceptional curves`.
    pub fn edges(&self) -> &BTreeSet<(CurveId, CurveId)> {
        &self.edges
    }

    /// Every curve of the model: strict transforms first, then chains.
    pub fn curves(&self) -> Vec<CurveData> {
        let mut out = Vec::new();
        for st in &self.strict {
            out.push(CurveData {
                id: CurveId::Strict(st.role),
                self_intersection: st.self_intersection,
                em_coeff: st.coeff,
                kmx_coeff: 0,
                lm_intersection: st.lm_intersection,
            });
        }
        for ch in &self.chains {
            for i in 0..ch.len() {
                out.push(CurveData {
                    id: CurveId::Chain {
                        point: ch.point,
                        index: i as u32 + 1,
                    },
                    self_intersection: ch.self_intersections[i],
                    em_coeff: ch.em_coeffs[i],
                    kmx_coeff: ch.kmx_coeffs[i],
                    lm_intersection: ch.lm_intersections[i],
                });
            }
        }
        out
    }

    /// Data of a single curve.
    pub fn curve(&self, id: CurveId) -> Option<CurveData> {
        self.curves().into_iter().find(|c| c.id == id)
    }

    /// Intersection number of two curves of the model.
    pub fn intersection(&self, a: CurveId, b: CurveId) -> i64 {
        if a == b {
            return self.curve(a).map(|c| c.self_intersection).unwrap_or(0);
        }
        i64::from(self.edges.contains(&ordered(a, b)))
    }

    /// `(K_{M/X} . C)` from the intersection matrix.
    pub fn kmx_dot(&self, id: CurveId) -> i64 {
        self.chains
            .iter()
            .flat_map(|ch| {
                (0..ch.len()).map(move |i| {
                    (
                        CurveId::Chain {
                            point: ch.point,
                            index: i as u32 + 1,
                        },
                        ch.kmx_coeffs[i],
                    )
                })
            })
            .map(|(g, coeff)| coeff * self.intersection(g, id))
            .sum()
    }

    /// `(phi^* D . C)` for a class `D` on `X`: `D.C` on strict transforms and
    /// zero on exceptional curves.
    pub fn pullback_dot(&self, d: &DivisorClass, id: CurveId) -> Rational {
        match id {
            CurveId::Strict(role) => {
                let class = role.class(self.surface).expect("component of the model");
                intersect(d, &class).expect("same surface")
            }
            CurveId::Chain { .. } => Rational::zero(),
        }
    }

    /// `(K_M . C)` from `K_M = phi^* K_X + K_{M/X}`.
    pub fn canonical_dot(&self, id: CurveId) -> Rational {
        let k = crate::picard::canonical_class(self.surface);
        self.pullback_dot(&k, id) + rat(self.kmx_dot(id))
    }

    /// `(L_M . C)` from `L_M = phi^* L - K_{M/X}` and the intersection matrix.
    pub fn lm_dot(&self, id: CurveId) -> Rational {
        self.pullback_dot(&self.fundamental, id) - rat(self.kmx_dot(id))
    }

    /// Curves with positive coefficient in `E_M`.
    pub fn support(&self) -> Vec<CurveId> {
        self.curves()
            .into_iter()
            .filter(|c| c.em_coeff > Rational::zero())
            .map(|c| c.id)
            .collect()
    }
}

/// Which curves of the model become vertices of the dual graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphSelection {
    /// Curves with positive coefficient in `E_M`.
    SupportOfEm,
    /// Every exceptional curve of `phi` and every strict transform.
    FullExceptional,
}

/// A vertex of a dual graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    pub label: String,
    pub self_intersection: i64,
}

/// A simple graph with one vertex per curve, labelled by self-intersection.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: BTreeSet<(usize, usize)>,
}

impl DualGraph {
    /// Builds a graph from self-intersections and index pairs. Loops and
    /// out-of-range endpoints are dropped.
    pub fn from_parts(self_intersections: &[i64], edges: &[(usize, usize)]) -> Self {
        let vertices = self_intersections
            .iter()
            .enumerate()
            .map(|(i, &w)| Vertex {
                label: format!("v{i}"),
                self_intersection: w,
            })
            .collect();
        let n = self_intersections.len();
        let edges = edges
            .iter()
            .filter(|(a, b)| a != b && *a < n && *b < n)
            .map(|&(a, b)| (a.min(b), a.max(b)))
            .collect();
        Self { vertices, edges }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Neighbours of vertex `v`.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    /// Vertex sets of the connected components.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            let mut comp = Vec::new();
            seen[start] = true;
            while let Some(v) = stack.pop() {
                comp.push(v);
                for w in self.neighbours(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// True when every connected component is a tree.
    pub fn is_forest(&self) -> bool {
        self.edges.len() + self.connected_components().len() == self.vertices.len()
    }

    fn to_petgraph(&self) -> UnGraph<i64, ()> {
        let mut g = UnGraph::new_undirected();
        let idx: Vec<_> = self
            .vertices
            .iter()
            .map(|v| g.add_node(v.self_intersection))
            .collect();
        for &(a, b) in &self.edges {
            g.add_edge(idx[a], idx[b], ());
        }
        g
    }

    /// Isomorphism of graphs with vertices labelled by self-intersection.
    pub fn is_isomorphic(&self, other: &DualGraph) -> bool {
        if self.vertices.len() != other.vertices.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut w1: Vec<i64> = self.vertices.iter().map(|v| v.self_intersection).collect();
        let mut w2: Vec<i64> = other.vertices.iter().map(|v| v.self_intersection).collect();
        w1.sort_unstable();
        w2.sort_unstable();
        if w1 != w2 {
            return false;
        }
        petgraph::algo::is_isomorphic_matching(
            &self.to_petgraph(),
            &other.to_petgraph(),
            |a, b| a == b,
            |_, _| true,
        )
    }
}

/// The dual graph of the selected curves.
pub fn dual_graph_of(model: &ResolutionModel, which: GraphSelection) -> DualGraph {
    let curves = model.curves();
    let chosen: Vec<&CurveData> = curves
        .iter()
        .filter(|c| match which {
            GraphSelection::SupportOfEm => c.em_coeff > Rational::zero(),
            GraphSelection::FullExceptional => true,
        })
        .collect();
    let index: BTreeMap<CurveId, usize> =
        chosen.iter().enumerate().map(|(i, c)| (c.id, i)).collect();
    let vertices = chosen
        .iter()
        .map(|c| Vertex {
            label: c.id.to_string(),
            self_intersection: c.self_intersection,
        })
        .collect();
    let edges = model
        .edges()
        .iter()
        .filter_map(|(a, b)| match (index.get(a), index.get(b)) {
            (Some(&i), Some(&j)) => Some((i.min(j), i.max(j))),
            _ => None,
        })
        .collect();
    DualGraph { vertices, edges }
}

/// Curves contracted by the morphism to the log del Pezzo surface: the
/// non-terminal chain curves and the strict transforms of `E`.
pub fn exceptional_curves(model: &ResolutionModel) -> Vec<CurveId> {
    let mut out: Vec<CurveId> = model
        .strict_transforms()
        .iter()
        .map(|s| CurveId::Strict(s.role))
        .collect();
    for ch in model.chains() {
        for i in 1..ch.len() as u32 {
            out.push(CurveId::Chain {
                point: ch.point,
                index: i,
            });
        }
    }
    out.sort();
    out
}

/// Curves `C` of the model with `(L_M . C) = 0`.
pub fn zero_lm_curves(model: &ResolutionModel) -> Vec<CurveId> {
    let mut out: Vec<CurveId> = model
        .curves()
        .into_iter()
        .filter(|c| c.lm_intersection.is_zero())
        .map(|c| c.id)
        .collect();
    out.sort();
    out
}

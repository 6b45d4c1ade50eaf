//! Step-by-step blow-up simulator used as an oracle for the closed-form
//! elimination.
//!
//! The simulator performs the `k_P` monoidal transforms over every point one
//! at a time. It keeps the total transform coefficients of `E` and of the
//! relative canonical divisor on each new curve, together with the full
//! intersection matrix. It shares no code with the library beyond the input
//! types.

use std::collections::BTreeMap;

use delpezzo_core::{
    eliminate, intersect, rat, CurveId, CurveRole, DivisorClass, EliminationError, Location,
    Rational, SubschemePoint, Surface, WeightedConfig,
};
use rand::Rng;

/// One randomized input of the elimination.
#[derive(Debug, Clone)]
pub struct Case {
    pub config: WeightedConfig,
    pub points: Vec<SubschemePoint>,
    pub s: i64,
    pub l_class: DivisorClass,
}

/// Curve data produced by the simulator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimCurve {
    pub self_intersection: i64,
    /// Coefficient of the total transform of `E`.
    pub e_pullback: Rational,
    /// Coefficient of `K_{M/X}`.
    pub k_coeff: i64,
}

/// Result of the simulation.
#[derive(Debug, Clone)]
pub struct Simulation {
    pub curves: BTreeMap<CurveId, SimCurve>,
    /// Intersection numbers of distinct curves, keyed with the smaller id
    /// first.
    pub meets: BTreeMap<(CurveId, CurveId), i64>,
    pub order: Vec<CurveId>,
    pub surface: Surface,
    pub l_class: DivisorClass,
}

fn key(a: CurveId, b: CurveId) -> (CurveId, CurveId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl Simulation {
    pub fn meet(&self, a: CurveId, b: CurveId) -> i64 {
        if a == b {
            return self.curves[&a].self_intersection;
        }
        self.meets.get(&key(a, b)).copied().unwrap_or(0)
    }

    /// Coefficient of `E_M = phi^* E - s K_{M/X}`.
    pub fn em_coeff(&self, id: CurveId, s: i64) -> Rational {
        let c = &self.curves[&id];
        c.e_pullback - rat(s * c.k_coeff)
    }

    /// `(K_{M/X} . C)`.
    pub fn kmx_dot(&self, id: CurveId) -> i64 {
        self.curves
            .iter()
            .map(|(g, c)| c.k_coeff * self.meet(*g, id))
            .sum()
    }

    /// `(L_M . C)` for `L_M = phi^* L - K_{M/X}`.
    pub fn lm_dot(&self, id: CurveId) -> Rational {
        let pull = match id {
            CurveId::Strict(role) => {
                intersect(&self.l_class, &role.class(self.surface).unwrap()).unwrap()
            }
            CurveId::Chain { .. } => rat(0),
        };
        pull - rat(self.kmx_dot(id))
    }
}

/// Runs the blow-ups one centre at a time.
pub fn simulate(
    config: &WeightedConfig,
    points: &[SubschemePoint],
    l_class: &DivisorClass,
) -> Simulation {
    let surface = config.surface();
    let mut curves = BTreeMap::new();
    let mut meets = BTreeMap::new();
    let mut order = Vec::new();
    let comps = config.components();
    for c in comps {
        let class = c.role.class(surface).unwrap();
        curves.insert(
            CurveId::Strict(c.role),
            SimCurve {
                self_intersection: class.square().to_integer(),
                e_pullback: c.coeff,
                k_coeff: 0,
            },
        );
        order.push(CurveId::Strict(c.role));
    }
    for (i, c1) in comps.iter().enumerate() {
        for c2 in &comps[i + 1..] {
            let v = intersect(
                &c1.role.class(surface).unwrap(),
                &c2.role.class(surface).unwrap(),
            )
            .unwrap()
            .to_integer();
            if v != 0 {
                meets.insert(key(CurveId::Strict(c1.role), CurveId::Strict(c2.role)), v);
            }
        }
    }

    for p in points {
        let branches: Vec<(CurveRole, u32)> = p
            .location()
            .roles()
            .into_iter()
            .map(|r| (r, p.contact(&r)))
            .collect();
        let mut previous: Option<CurveId> = None;
        for j in 1..=p.degree() {
            let mut through: Vec<CurveId> = branches
                .iter()
                .filter(|(_, c)| *c >= j)
                .map(|(r, _)| CurveId::Strict(*r))
                .collect();
            if let Some(g) = previous {
                through.push(g);
            }
            let new = CurveId::Chain {
                point: p.id(),
                index: j,
            };
            let e_pullback = through
                .iter()
                .map(|c| curves[c].e_pullback)
                .fold(rat(0), |acc, v| acc + v);
            let k_coeff = 1 + through.iter().map(|c| curves[c].k_coeff).sum::<i64>();
            for (x, a) in through.iter().enumerate() {
                curves.get_mut(a).unwrap().self_intersection -= 1;
                for b in &through[x + 1..] {
                    *meets.entry(key(*a, *b)).or_insert(0) -= 1;
                }
                meets.insert(key(*a, new), 1);
            }
            curves.insert(
                new,
                SimCurve {
                    self_intersection: -1,
                    e_pullback,
                    k_coeff,
                },
            );
            order.push(new);
            previous = Some(new);
        }
    }
    meets.retain(|_, v| *v != 0);
    Simulation {
        curves,
        meets,
        order,
        surface,
        l_class: *l_class,
    }
}

/// Compares the closed-form elimination with the simulation. Returns a
/// description of the first disagreement.
pub fn check_case(case: &Case) -> Result<(), String> {
    let sim = simulate(&case.config, &case.points, &case.l_class);
    let first_negative = sim
        .order
        .iter()
        .copied()
        .find(|id| matches!(id, CurveId::Chain { .. }) && sim.em_coeff(*id, case.s) < rat(0));
    let model = match eliminate(&case.config, &case.points, case.s, &case.l_class) {
        Ok(m) => m,
        Err(EliminationError::NegativeCoefficient { curve, value }) => {
            return match first_negative {
                Some(id) if id == curve && sim.em_coeff(id, case.s) == value => Ok(()),
                other => Err(format!(
                    "closed form reports {curve} = {value}, simulation first negative {other:?}"
                )),
            };
        }
        Err(e) => return Err(format!("unexpected elimination error {e}")),
    };
    if let Some(id) = first_negative {
        return Err(format!("simulation has negative coefficient on {id}"));
    }
    let data = model.curves();
    if data.len() != sim.curves.len() {
        return Err(format!(
            "curve counts {} vs {}",
            data.len(),
            sim.curves.len()
        ));
    }
    for c in &data {
        let Some(sc) = sim.curves.get(&c.id) else {
            return Err(format!("simulation lacks {}", c.id));
        };
        if c.self_intersection != sc.self_intersection {
            return Err(format!(
                "{}: self-intersection {} vs {}",
                c.id, c.self_intersection, sc.self_intersection
            ));
        }
        if c.em_coeff != sim.em_coeff(c.id, case.s) {
            return Err(format!(
                "{}: E_M coefficient {} vs {}",
                c.id,
                c.em_coeff,
                sim.em_coeff(c.id, case.s)
            ));
        }
        if c.kmx_coeff != sc.k_coeff {
            return Err(format!(
                "{}: K_M/X coefficient {} vs {}",
                c.id, c.kmx_coeff, sc.k_coeff
            ));
        }
        if c.lm_intersection != sim.lm_dot(c.id) {
            return Err(format!(
                "{}: L_M intersection {} vs {}",
                c.id,
                c.lm_intersection,
                sim.lm_dot(c.id)
            ));
        }
    }
    for st in model.strict_transforms() {
        let kd = sim.kmx_dot(CurveId::Strict(st.role));
        if st.kmx_intersection != kd {
            return Err(format!(
                "{}: K_M/X intersection {} vs {kd}",
                st.role, st.kmx_intersection
            ));
        }
    }
    let sim_edges: Vec<(CurveId, CurveId)> = sim.meets.keys().copied().collect();
    let model_edges: Vec<(CurveId, CurveId)> = model.edges().iter().copied().collect();
    if sim_edges != model_edges {
        return Err(format!("edges differ: {model_edges:?} vs {sim_edges:?}"));
    }
    if let Some((pair, v)) = sim.meets.iter().find(|(_, v)| **v != 1) {
        return Err(format!("{pair:?} meet with multiplicity {v}"));
    }
    Ok(())
}

/// A random elimination input with `k_P <= 8` and coefficients and weight at
/// most 30.
pub fn random_case<R: Rng>(rng: &mut R) -> Case {
    let surface = if rng.random_bool(0.3) {
        Surface::ProjectivePlane
    } else {
        Surface::Hirzebruch(rng.random_range(0..=4))
    };
    let roles: Vec<CurveRole> = match surface {
        Surface::ProjectivePlane => (1..=rng.random_range(1..=3)).map(CurveRole::Line).collect(),
        Surface::Hirzebruch(_) => {
            let pool = [
                CurveRole::MinimalSection,
                CurveRole::Fiber(1),
                CurveRole::Fiber(2),
                CurveRole::SectionAtInfinity,
            ];
            let mut chosen: Vec<CurveRole> = pool
                .iter()
                .copied()
                .filter(|_| rng.random_bool(0.5))
                .collect();
            if chosen.is_empty() {
                chosen.push(pool[rng.random_range(0..pool.len())]);
            }
            chosen
        }
    };
    let components = roles
        .iter()
        .map(|r| delpezzo_core::Component::new(*r, rat(rng.random_range(1..=30))))
        .collect();
    let config = WeightedConfig::new(surface, components).unwrap();

    let mut crossings = config.crossings();
    let mut points = Vec::new();
    let count = rng.random_range(1..=3u32);
    for id in 0..count {
        let k = rng.random_range(1..=8u32);
        let choice = rng.random_range(0..10);
        let point = if choice < 2 && !crossings.is_empty() {
            let (r1, r2) = crossings.swap_remove(rng.random_range(0..crossings.len()));
            let (t, o) = if rng.random_bool(0.5) {
                (r1, r2)
            } else {
                (r2, r1)
            };
            SubschemePoint::at_crossing(id, t, o, k, rng.random_range(1..=k)).unwrap()
        } else if choice < 9 {
            let r = roles[rng.random_range(0..roles.len())];
            SubschemePoint::on_curve(id, r, k, rng.random_range(1..=k)).unwrap()
        } else {
            SubschemePoint::generic(id, k).unwrap()
        };
        points.push(point);
    }
    let l_class = match surface {
        Surface::ProjectivePlane => DivisorClass::plane(rat(rng.random_range(0..=12))),
        Surface::Hirzebruch(n) => {
            DivisorClass::hirzebruch_int(n, rng.random_range(0..=6), rng.random_range(0..=12))
        }
    };
    Case {
        config,
        points,
        s: rng.random_range(0..=30),
        l_class,
    }
}

/// Location of a point, for diagnostics.
pub fn describe(case: &Case) -> String {
    let pts: Vec<String> = case
        .points
        .iter()
        .map(|p| match p.location() {
            Location::OnCurve(r) => format!("{}@{r}:{}/{}", p.id(), p.contact(&r), p.degree()),
            Location::AtIntersection(r1, r2) => format!(
                "{}@{r1}x{r2}:{}/{}/{}",
                p.id(),
                p.contact(&r1),
                p.contact(&r2),
                p.degree()
            ),
            Location::GenericOnSurface => format!("{}@generic/{}", p.id(), p.degree()),
        })
        .collect();
    format!(
        "{} s={} E={:?} points=[{}]",
        case.config.surface(),
        case.s,
        case.config.components(),
        pts.join(" ")
    )
}

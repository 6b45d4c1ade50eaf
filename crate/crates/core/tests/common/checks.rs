//! Checks run over concrete triplets: single-field mutations, relabelling
//! and the numerical identities every fundamental triplet satisfies.

use std::collections::BTreeMap;

use delpezzo_core::{
    canonical_class, enumerate_surface, intersect, is_normalized, match_type, rat, validate,
    Component, CurveRole, DivisorClass, Location, MultiIndex, Pruning, SubschemePoint, Surface,
    TripletConfig, WeightedConfig,
};

use super::paper::ExcludedCase;

/// Outcome of the mutation check on one triplet.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct MutationTally {
    pub total: usize,
    /// Rejected at construction or by the validator.
    pub rejected: usize,
    /// Valid but divisible by a common factor of `a` and `b`.
    pub not_normalized: usize,
    /// Valid, normalized and recognised as a named type.
    pub relabelled: usize,
}

fn rebuild(
    t: &TripletConfig,
    comps: Vec<Component>,
    points: Vec<SubschemePoint>,
) -> Result<TripletConfig, String> {
    let config = WeightedConfig::new(t.surface(), comps).map_err(|e| e.to_string())?;
    TripletConfig::new(t.index(), config, points).map_err(|e| e.to_string())
}

/// Every single-field perturbation: a coefficient, a degree or a contact
/// moved by one.
pub fn mutations(t: &TripletConfig) -> Vec<(String, Result<TripletConfig, String>)> {
    let mut out = Vec::new();
    let comps = t.config().components().to_vec();
    for (j, c) in comps.iter().enumerate() {
        for delta in [-1, 1] {
            let mut cs = comps.clone();
            cs[j] = Component::new(c.role, c.coeff + rat(delta));
            out.push((
                format!("coeff {} {delta:+}", c.role),
                rebuild(t, cs, t.points().to_vec()),
            ));
        }
    }
    for (j, p) in t.points().iter().enumerate() {
        for delta in [-1i64, 1] {
            let degree = i64::from(p.degree()) + delta;
            let moved = u32::try_from(degree)
                .map_err(|e| e.to_string())
                .and_then(|d| {
                    SubschemePoint::new(p.id(), p.location(), d, p.contacts().clone())
                        .map_err(|e| e.to_string())
                });
            let mut pts = t.points().to_vec();
            out.push((
                format!("degree of point {} {delta:+}", p.id()),
                moved.and_then(|q| {
                    pts[j] = q;
                    rebuild(t, comps.clone(), pts)
                }),
            ));
        }
        for role in p.location().roles() {
            for delta in [-1i64, 1] {
                let mut contacts = p.contacts().clone();
                let c = i64::from(contacts[&role]) + delta;
                let moved = u32::try_from(c).map_err(|e| e.to_string()).and_then(|c| {
                    contacts.insert(role, c);
                    SubschemePoint::new(p.id(), p.location(), p.degree(), contacts)
                        .map_err(|e| e.to_string())
                });
                let mut pts = t.points().to_vec();
                out.push((
                    format!("contact of point {} with {role} {delta:+}", p.id()),
                    moved.and_then(|q| {
                        pts[j] = q;
                        rebuild(t, comps.clone(), pts)
                    }),
                ));
            }
        }
    }
    out
}

/// Every mutation of a valid triplet is rejected, unless it is itself a
/// valid triplet that is either not normalized or a named type.
pub fn check_mutations(t: &TripletConfig) -> Result<MutationTally, String> {
    if !validate(t).is_valid() {
        return Err("the unmutated triplet is not valid".into());
    }
    let mut tally = MutationTally::default();
    for (what, m) in mutations(t) {
        tally.total += 1;
        let Ok(m) = m else {
            tally.rejected += 1;
            continue;
        };
        if !validate(&m).is_valid() {
            tally.rejected += 1;
        } else if !is_normalized(&m) {
            tally.not_normalized += 1;
        } else if match_type(&m).is_some() {
            tally.relabelled += 1;
        } else {
            return Err(format!(
                "mutation `{what}` is valid, normalized and unnamed: {m:?}"
            ));
        }
    }
    Ok(tally)
}

fn relabel_role(r: CurveRole) -> CurveRole {
    match r {
        CurveRole::Line(i) => CurveRole::Line(100 - i),
        CurveRole::Fiber(i) => CurveRole::Fiber(100 - i),
        other => other,
    }
}

/// The same triplet with the ids of lines and fibers reversed.
pub fn relabelled(t: &TripletConfig) -> TripletConfig {
    let comps = t
        .config()
        .components()
        .iter()
        .map(|c| Component::new(relabel_role(c.role), c.coeff))
        .collect();
    let points = t
        .points()
        .iter()
        .map(|p| {
            let location = match p.location() {
                Location::OnCurve(r) => Location::OnCurve(relabel_role(r)),
                Location::AtIntersection(r1, r2) => {
                    Location::crossing(relabel_role(r1), relabel_role(r2))
                }
                Location::GenericOnSurface => Location::GenericOnSurface,
            };
            let contacts: BTreeMap<CurveRole, u32> = p
                .contacts()
                .iter()
                .map(|(r, c)| (relabel_role(*r), *c))
                .collect();
            SubschemePoint::new(p.id(), location, p.degree(), contacts).unwrap()
        })
        .collect();
    rebuild(t, comps, points).unwrap()
}

/// Validity, normalization and the type name do not depend on ids.
pub fn check_relabelling(t: &TripletConfig) -> Result<(), String> {
    let r = relabelled(t);
    if validate(&r).is_valid() != validate(t).is_valid() {
        return Err("validity changed under relabelling".into());
    }
    if is_normalized(&r) != is_normalized(t) {
        return Err("normalization changed under relabelling".into());
    }
    let names = (
        match_type(t).map(|l| l.instance),
        match_type(&r).map(|l| l.instance),
    );
    if names.0 != names.1 {
        return Err(format!("type changed under relabelling: {names:?}"));
    }
    Ok(())
}

/// `(a - b) deg Delta = (L . E)` and `mult_P E >= a - b` at every point.
pub fn check_degree_identities(t: &TripletConfig) -> Result<(), String> {
    let s = t.index().s();
    let l = t.fundamental_divisor().map_err(|e| e.to_string())?;
    let le = intersect(&l, &t.config().class()).map_err(|e| e.to_string())?;
    if rat(s * i64::from(t.degree())) != le {
        return Err(format!(
            "(a-b) deg = {} but L.E = {le}",
            s * i64::from(t.degree())
        ));
    }
    for p in t.points() {
        let mult = p
            .location()
            .roles()
            .iter()
            .map(|r| t.config().coeff_of(r))
            .fold(rat(0), |acc, c| acc + c);
        if mult < rat(s) {
            return Err(format!("mult of E at point {} is {mult} < {s}", p.id()));
        }
    }
    Ok(())
}

/// Number of triplets with `b/a = 1/2` and `b > 1` matching the numerical
/// data of an excluded case.
pub fn excluded_hits(case: &ExcludedCase, a_max: u32, pruning: Pruning) -> usize {
    let surface = match case.n {
        Some(n) => Surface::Hirzebruch(n),
        None => Surface::ProjectivePlane,
    };
    let mut hits = 0;
    // b = 1 is outside the scope of the classification
    for t in 2..=a_max / 2 {
        let index = MultiIndex::new(2 * t, t).unwrap();
        for trip in enumerate_surface(index, surface, pruning) {
            let l = trip.fundamental_divisor().unwrap();
            let adj = canonical_class(surface) + l;
            let big = adj.square() > rat(0);
            let h = match surface {
                Surface::ProjectivePlane => l.first(),
                Surface::Hirzebruch(_) => l.second(),
            };
            if h == rat(case.h) && big == case.big && case.k.is_none_or(|k| k == trip.degree()) {
                hits += 1;
            }
        }
    }
    hits
}

/// The numerical data of each excluded case is consistent for every `t`, so
/// the cells are searched and found empty rather than skipped.
pub fn excluded_cell_is_numerically_admissible(case: &ExcludedCase, t: i64) -> bool {
    let (a, b) = (2 * t, t);
    let (surface, l) = match case.n {
        Some(n) => {
            let h0 = if case.big { 3 } else { 2 };
            (
                Surface::Hirzebruch(n),
                DivisorClass::hirzebruch_int(n, h0, case.h),
            )
        }
        None => (Surface::ProjectivePlane, DivisorClass::plane(rat(case.h))),
    };
    let e = canonical_class(surface).scale(rat(-a)) - l.scale(rat(b));
    let effective = e.coeffs().iter().all(|c| *c >= rat(0)) && !e.is_zero();
    let le = intersect(&l, &e).unwrap();
    let k_ok = match case.k {
        Some(k) => le == rat(i64::from(k) * (a - b)),
        None => le.to_integer() % (a - b) == 0,
    };
    effective && k_ok
}

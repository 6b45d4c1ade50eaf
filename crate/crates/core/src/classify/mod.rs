//! Enumeration of normalized fundamental triplets within bounds, labelling
//! by type, and the derived fractional-index set.

mod catalog;
mod enumerate;

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;
use rayon::prelude::*;
use thiserror::Error;

use crate::elimination::{dual_graph_of, DualGraph, GraphSelection};
use crate::geometry::{Component, CurveRole, Location, SubschemePoint, WeightedConfig};
use crate::picard::{Rational, Surface};
use crate::triplet::{MultiIndex, TripletConfig};

pub use catalog::{catalog_class, match_type, table_rows, Instance, Labelled, TypeSpec, CATALOG};
pub use enumerate::Pruning;

/// Errors raised by the classification layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("validated triplet matches no known type: {0:?}")]
    UnclassifiedTriplet(Box<TripletConfig>),
    #[error("triplet does not eliminate: {0}")]
    Elimination(String),
}

/// Limits of an enumeration run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Largest Hirzebruch degree searched.
    pub n_max: u32,
    /// Largest `a` searched.
    pub a_max: u32,
    pub pruning: Pruning,
}

impl SearchBounds {
    pub fn new(n_max: u32, a_max: u32, pruning: Pruning) -> Self {
        Self {
            n_max,
            a_max,
            pruning,
        }
    }

    /// Every multi-index `(a, b)` with `b > 1` and `a <= a_max`.
    pub fn indices(&self) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        for a in 3..=self.a_max {
            for b in a.div_ceil(2)..a {
                if b > 1 {
                    out.push(MultiIndex::new(a, b).expect("range"));
                }
            }
        }
        out
    }
}

/// A classified type together with one realization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeRecord {
    /// Symbolic name of the type.
    pub label: String,
    /// Name with the concrete numbers of this instance.
    pub instance: String,
    /// Family parameters `n` and `m` where they apply.
    pub params: BTreeMap<String, i64>,
    pub index: MultiIndex,
    /// Canonical representative of the realizations.
    pub triplet: TripletConfig,
    /// Dual graph of `E_M`.
    pub graph: DualGraph,
    /// Number of distinct subscheme shapes realizing the type.
    pub realizations: usize,
    /// Dual-graph table row.
    pub table_row: &'static str,
}

/// Output of an enumeration: classified records and any validated
/// triplets matching no type.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Enumeration {
    pub records: Vec<TypeRecord>,
    pub unclassified: Vec<TripletConfig>,
}

fn relabel(role: &CurveRole, map: &BTreeMap<CurveRole, CurveRole>) -> CurveRole {
    map.get(role).copied().unwrap_or(*role)
}

fn rebuild(t: &TripletConfig, map: &BTreeMap<CurveRole, CurveRole>) -> TripletConfig {
    let comps = t
        .config()
        .components()
        .iter()
        .map(|c| Component::new(relabel(&c.role, map), c.coeff))
        .collect();
    let config = WeightedConfig::new(t.surface(), comps).expect("relabelled configuration");
    let mut points: Vec<SubschemePoint> = t
        .points()
        .iter()
        .map(|p| {
            let contacts = p
                .contacts()
                .iter()
                .map(|(r, c)| (relabel(r, map), *c))
                .collect();
            let location = match p.location() {
                Location::OnCurve(r) => Location::OnCurve(relabel(&r, map)),
                Location::AtIntersection(r1, r2) => {
                    Location::crossing(relabel(&r1, map), relabel(&r2, map))
                }
                Location::GenericOnSurface => Location::GenericOnSurface,
            };
            SubschemePoint::new(0, location, p.degree(), contacts).expect("relabelled point")
        })
        .collect();
    points.sort();
    let points = points
        .iter()
        .enumerate()
        .map(|(i, p)| p.with_id(u32::try_from(i).expect("few points")))
        .collect();
    TripletConfig::new(t.index(), config, points).expect("relabelled triplet")
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Representative of `t` up to renaming lines, fibers and points.
pub fn canonical_triplet(t: &TripletConfig) -> TripletConfig {
    let movable: Vec<CurveRole> = t
        .config()
        .components()
        .iter()
        .map(|c| c.role)
        .filter(|r| matches!(r, CurveRole::Line(_) | CurveRole::Fiber(_)))
        .collect();
    let target = |i: usize, r: &CurveRole| {
        let id = u32::try_from(i).expect("few components") + 1;
        match r {
            CurveRole::Line(_) => CurveRole::Line(id),
            _ => CurveRole::Fiber(id),
        }
    };
    if movable.len() <= 6 {
        permutations(movable.len())
            .into_iter()
            .map(|perm| {
                let map = movable
                    .iter()
                    .zip(&perm)
                    .map(|(r, &i)| (*r, target(i, r)))
                    .collect();
                rebuild(t, &map)
            })
            .min()
            .expect("at least one permutation")
    } else {
        // Fibers are pairwise disjoint, so sorting by local data is exact.
        let key = |r: &CurveRole| {
            let mut pts: Vec<_> = t
                .points()
                .iter()
                .filter(|p| p.contact(r) > 0)
                .map(|p| {
                    (
                        p.degree(),
                        p.contacts().values().copied().collect::<Vec<_>>(),
                    )
                })
                .collect();
            pts.sort();
            (t.config().coeff_of(r), pts)
        };
        let mut sorted = movable.clone();
        sorted.sort_by_key(key);
        let map = sorted
            .iter()
            .enumerate()
            .map(|(i, r)| (*r, target(i, r)))
            .collect();
        rebuild(t, &map)
    }
}

fn sort_key(r: &TypeRecord) -> impl Ord {
    let surface = match r.triplet.surface() {
        Surface::ProjectivePlane => (0u32, 0u32),
        Surface::Hirzebruch(n) => (1, n),
    };
    let mut coeffs: Vec<Rational> = r
        .triplet
        .config()
        .components()
        .iter()
        .map(|c| c.coeff)
        .collect();
    coeffs.sort();
    (
        r.index.a(),
        r.index.b(),
        surface,
        coeffs,
        r.triplet.clone(),
        r.label.clone(),
    )
}

/// Label, parameters and index of a type instance.
type GroupKey = (String, BTreeMap<String, i64>, MultiIndex);

/// Labels triplets and merges realizations of the same type instance.
fn collect(triplets: Vec<TripletConfig>) -> Result<Enumeration, ClassifyError> {
    let canon: BTreeSet<TripletConfig> = triplets.iter().map(canonical_triplet).collect();
    let mut groups: BTreeMap<GroupKey, Vec<(TripletConfig, Labelled)>> = BTreeMap::new();
    let mut unclassified = Vec::new();
    for t in canon {
        match match_type(&t) {
            Some(lab) => groups
                .entry((lab.label.clone(), lab.params.clone(), t.index()))
                .or_default()
                .push((t, lab)),
            None => unclassified.push(t),
        }
    }
    let mut records = Vec::new();
    for ((label, params, index), members) in groups {
        let realizations = members.len();
        let (triplet, lab) = members.into_iter().next().expect("nonempty group");
        records.push(label_record(
            triplet,
            lab,
            realizations,
            label,
            params,
            index,
        )?);
    }
    records.sort_by_key(sort_key);
    Ok(Enumeration {
        records,
        unclassified,
    })
}

fn label_record(
    triplet: TripletConfig,
    lab: Labelled,
    realizations: usize,
    label: String,
    params: BTreeMap<String, i64>,
    index: MultiIndex,
) -> Result<TypeRecord, ClassifyError> {
    let model = triplet
        .eliminate()
        .map_err(|e| ClassifyError::Elimination(e.to_string()))?;
    let graph = dual_graph_of(&model, GraphSelection::SupportOfEm);
    Ok(TypeRecord {
        label,
        instance: lab.instance,
        params,
        index,
        triplet,
        graph,
        realizations,
        table_row: lab.spec.table_row,
    })
}

/// Labels one validated normalized triplet.
pub fn label_type(t: &TripletConfig) -> Result<TypeRecord, ClassifyError> {
    let canon = canonical_triplet(t);
    let lab = match_type(&canon)
        .ok_or_else(|| ClassifyError::UnclassifiedTriplet(Box::new(t.clone())))?;
    let (label, params) = (lab.label.clone(), lab.params.clone());
    label_record(canon, lab, 1, label, params, t.index())
}

/// Normalized triplets on `P^2` with this index.
pub fn enumerate_p2(index: MultiIndex, pruning: Pruning) -> Result<Enumeration, ClassifyError> {
    collect(enumerate::triplets_p2(index, pruning))
}

/// Normalized triplets on `F_n`, `n <= n_max`, with `K + L` big.
pub fn enumerate_fn_big(
    index: MultiIndex,
    n_max: u32,
    pruning: Pruning,
) -> Result<Enumeration, ClassifyError> {
    let triplets = (0..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| enumerate::triplets_fn(index, n, true, pruning))
        .collect();
    collect(triplets)
}

/// Normalized triplets on `F_n`, `n <= n_max`, with `K + L` nef but not big.
pub fn enumerate_fn_small(
    index: MultiIndex,
    n_max: u32,
    pruning: Pruning,
) -> Result<Enumeration, ClassifyError> {
    let triplets = (0..=n_max)
        .into_par_iter()
        .flat_map_iter(|n| enumerate::triplets_fn(index, n, false, pruning))
        .collect();
    collect(triplets)
}

/// Normalized triplets on one surface for one index.
pub fn enumerate_surface(
    index: MultiIndex,
    surface: Surface,
    pruning: Pruning,
) -> Vec<TripletConfig> {
    match surface {
        Surface::ProjectivePlane => enumerate::triplets_p2(index, pruning),
        Surface::Hirzebruch(n) => {
            let mut v = enumerate::triplets_fn(index, n, true, pruning);
            v.extend(enumerate::triplets_fn(index, n, false, pruning));
            v
        }
    }
}

/// Every normalized triplet with `a <= a_max` and `n <= n_max`, labelled,
/// merged and sorted canonically.
pub fn enumerate_all(bounds: &SearchBounds) -> Result<Enumeration, ClassifyError> {
    let mut cells: Vec<(MultiIndex, Surface)> = Vec::new();
    for index in bounds.indices() {
        cells.push((index, Surface::ProjectivePlane));
        for n in 0..=bounds.n_max {
            cells.push((index, Surface::Hirzebruch(n)));
        }
    }
    let triplets: Vec<TripletConfig> = cells
        .into_par_iter()
        .flat_map_iter(|(index, surface)| enumerate_surface(index, surface, bounds.pruning))
        .collect();
    collect(triplets)
}

/// Enumeration restricted to one multi-index.
pub fn enumerate_index(
    index: MultiIndex,
    n_max: u32,
    pruning: Pruning,
) -> Result<Enumeration, ClassifyError> {
    let mut cells = vec![Surface::ProjectivePlane];
    cells.extend((0..=n_max).map(Surface::Hirzebruch));
    let triplets = cells
        .into_par_iter()
        .flat_map_iter(|surface| enumerate_surface(index, surface, pruning))
        .collect();
    collect(triplets)
}

/// `(2s + t)/(4s + t)` for `s >= 1`, `t` in `{4, 5, 6}`, in lowest terms
/// with denominator at most `cap`.
pub fn fractional_index_set(cap: u32) -> BTreeSet<Rational> {
    let mut out = BTreeSet::new();
    let cap = i64::from(cap);
    for t in 4..=6i64 {
        for s in 1.. {
            let r = Rational::new(2 * s + t, 4 * s + t);
            // the reduced denominator is at least (4s + t)/gcd and the gcd
            // divides 2t, so s beyond this bound never qualifies
            if 4 * s + t > cap * 2 * t {
                break;
            }
            if *r.denom() <= cap {
                out.insert(r);
            }
        }
    }
    out
}

/// The `s` with `r = (2s + t)/(4s + t)` for the given `t`, if one exists.
pub fn fractional_index_parameter(r: Rational, t: i64) -> Option<i64> {
    // r (4s + t) = 2s + t  <=>  s (4r - 2) = t (1 - r)
    let denom = r * Rational::from_integer(4) - Rational::from_integer(2);
    if denom == Rational::from_integer(0) {
        return None;
    }
    let s = Rational::from_integer(t) * (Rational::from_integer(1) - r) / denom;
    (s.is_integer() && s > Rational::from_integer(0)).then(|| s.to_integer())
}

/// True when `r` lies in the set described by [`fractional_index_set`].
pub fn in_fractional_index_set(r: Rational) -> bool {
    (4..=6).any(|t| fractional_index_parameter(r, t).is_some())
}

/// `gcd(a, b)` of a record, the factor relating `(a, b)` to the reduced
/// fraction.
pub fn record_multiplier(r: &TypeRecord) -> u32 {
    r.index.a().gcd(&r.index.b())
}

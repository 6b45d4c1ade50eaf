//! Exhaustive search for normalized fundamental triplets in one cell
//! `(X, (a, b))`.
//!
//! The search runs in three layers. The fundamental divisor `L` ranges over
//! the classes allowed by nefness of `K + L`; `E = -aK - bL` is split into
//! components of the curve vocabulary; and `Delta` is assembled from points
//! at crossings of `E` followed by points on single components. Every
//! candidate is checked by [`validate`].

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::Zero;

use crate::geometry::{Component, CurveRole, SubschemePoint, WeightedConfig};
use crate::picard::{canonical_class, intersect, rat, DivisorClass, Rational, Surface};
use crate::triplet::{is_normalized, validate, MultiIndex, TripletConfig};

/// Which filters the search applies on top of the validator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pruning {
    /// Restrict the search with the numerical claims of the case analysis.
    Claims,
    /// Only the conditions checked by the validator.
    Raw,
}

/// Numerical data of one candidate fundamental divisor.
#[derive(Debug, Clone, Copy)]
struct Cell {
    surface: Surface,
    index: MultiIndex,
    l: DivisorClass,
    e: DivisorClass,
    k: u32,
}

impl Cell {
    fn a(&self) -> i64 {
        i64::from(self.index.a())
    }

    fn s(&self) -> i64 {
        self.index.s()
    }

    fn is_half(&self) -> bool {
        2 * self.index.b() == self.index.a()
    }
}

fn int(r: Rational) -> i64 {
    debug_assert!(r.is_integer());
    r.to_integer()
}

/// `k = (L.E)/(a-b)` when it is a positive integer.
fn degree_of(index: MultiIndex, l: &DivisorClass, e: &DivisorClass) -> Option<u32> {
    let le = intersect(l, e).ok()?;
    if !le.is_integer() || le <= Rational::zero() {
        return None;
    }
    let le = le.to_integer();
    if le % index.s() != 0 {
        return None;
    }
    u32::try_from(le / index.s()).ok()
}

/// The cells of `P^2` for this index.
fn plane_cells(index: MultiIndex, pruning: Pruning) -> Vec<Cell> {
    let (a, b) = (i64::from(index.a()), i64::from(index.b()));
    let mut out = Vec::new();
    for h in 4.. {
        let e = 3 * a - h * b;
        if e < 1 {
            break;
        }
        let l = DivisorClass::plane(rat(h));
        let ec = DivisorClass::plane(rat(e));
        let Some(k) = degree_of(index, &l, &ec) else {
            continue;
        };
        if pruning == Pruning::Claims && !plane_claim(h, k, index) {
            continue;
        }
        out.push(Cell {
            surface: Surface::ProjectivePlane,
            index,
            l,
            e: ec,
            k,
        });
    }
    out
}

fn plane_claim(h: i64, k: u32, index: MultiIndex) -> bool {
    let r = index.ratio();
    let allowed = [
        (5, 5, (1, 2)),
        (4, 4, (2, 3)),
        (4, 5, (7, 11)),
        (4, 6, (3, 5)),
        (4, 7, (5, 9)),
        (4, 8, (1, 2)),
    ];
    allowed
        .iter()
        .any(|&(hh, kk, (p, q))| hh == h && kk == k && r == Rational::new(p, q))
}

/// Whether the cell has `K + L` big; `None` when `K + L` is not nef or
/// `(K + L . L) <= 0`.
fn adjoint_bigness(surface: Surface, l: &DivisorClass) -> Option<bool> {
    let adj = canonical_class(surface) + *l;
    if !adj.is_nef() || intersect(&adj, l).ok()? <= Rational::zero() {
        return None;
    }
    Some(adj.square() > Rational::zero())
}

/// The cells of `F_n` for this index with the requested bigness of `K + L`.
fn hirzebruch_cells(index: MultiIndex, n: u32, big: bool, pruning: Pruning) -> Vec<Cell> {
    let (a, b) = (i64::from(index.a()), i64::from(index.b()));
    let ni = i64::from(n);
    let surface = Surface::Hirzebruch(n);
    let mut out = Vec::new();
    for h0 in 2.. {
        let e0 = 2 * a - h0 * b;
        if e0 < 0 {
            break;
        }
        for h in 0.. {
            let e = (ni + 2) * a - h * b;
            if e < 0 {
                break;
            }
            if e0 == 0 && e == 0 {
                continue;
            }
            let l = DivisorClass::hirzebruch_int(n, h0, h);
            if adjoint_bigness(surface, &l) != Some(big) {
                continue;
            }
            let ec = DivisorClass::hirzebruch_int(n, e0, e);
            let Some(k) = degree_of(index, &l, &ec) else {
                continue;
            };
            let cell = Cell {
                surface,
                index,
                l,
                e: ec,
                k,
            };
            if pruning == Pruning::Claims && !hirzebruch_claim(&cell, h0, h) {
                continue;
            }
            out.push(cell);
        }
    }
    out
}

const BIG_TETRADS: [(u32, i64, (i64, i64), u32); 4] = [
    (2, 6, (3, 5), 3),
    (2, 6, (4, 7), 4),
    (2, 6, (7, 13), 5),
    (2, 7, (11, 21), 3),
];

const BIG_HALF_TRIPLES: [(u32, i64, u32); 9] = [
    (0, 3, 6),
    (0, 4, 4),
    (1, 5, 5),
    (1, 6, 3),
    (2, 6, 6),
    (2, 7, 4),
    (2, 8, 2),
    (3, 9, 3),
    (3, 10, 1),
];

fn hirzebruch_claim(cell: &Cell, h0: i64, h: i64) -> bool {
    let n = cell.surface.hirzebruch_degree().expect("hirzebruch");
    let big = adjoint_bigness(cell.surface, &cell.l) == Some(true);
    if big {
        if h0 != 3 {
            return false;
        }
        if cell.is_half() {
            BIG_HALF_TRIPLES.contains(&(n, h, cell.k))
        } else {
            BIG_TETRADS.iter().any(|&(nn, hh, (p, q), kk)| {
                nn == n && hh == h && kk == cell.k && cell.index.ratio() == Rational::new(p, q)
            })
        }
    } else {
        if h0 != 2 {
            return false;
        }
        if n == 1 && h == 4 && cell.is_half() {
            return true;
        }
        n >= 3 && h == 2 * i64::from(n) && (2..=8).contains(&cell.k)
    }
}

/// One way of writing `E` as a sum of components, before fibers or lines
/// receive ids.
#[derive(Debug, Clone)]
struct Split {
    sigma: i64,
    sigma_inf: i64,
    member: Option<(DivisorClass, i64)>,
    /// Fiber coefficients on `F_n`, line coefficients on `P^2`.
    parts: Vec<i64>,
}

impl Split {
    fn config(&self, surface: Surface) -> Option<WeightedConfig> {
        let mut comps = Vec::new();
        if self.sigma > 0 {
            comps.push(Component::new(CurveRole::MinimalSection, rat(self.sigma)));
        }
        if self.sigma_inf > 0 {
            comps.push(Component::new(
                CurveRole::SectionAtInfinity,
                rat(self.sigma_inf),
            ));
        }
        if let Some((class, c)) = self.member {
            comps.push(Component::new(CurveRole::IrreducibleMember(class), rat(c)));
        }
        for (i, &c) in self.parts.iter().enumerate() {
            let id = u32::try_from(i).expect("few parts") + 1;
            let role = match surface {
                Surface::ProjectivePlane => CurveRole::Line(id),
                Surface::Hirzebruch(_) => CurveRole::Fiber(id),
            };
            comps.push(Component::new(role, rat(c)));
        }
        WeightedConfig::new(surface, comps).ok()
    }
}

/// Non-increasing sequences of at most `max_parts` integers in
/// `lo..=hi` summing to `total`.
fn partitions(total: i64, max_parts: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    fn go(
        rest: i64,
        max_parts: usize,
        lo: i64,
        hi: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        if max_parts == 0 || lo > hi.min(rest) {
            return;
        }
        for part in (lo..=hi.min(rest)).rev() {
            if part * (max_parts as i64) < rest {
                break;
            }
            cur.push(part);
            go(rest - part, max_parts - 1, lo, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if total >= 0 && lo >= 1 {
        let max_parts = max_parts.min(usize::try_from(total).unwrap_or(0));
        go(total, max_parts, lo, hi, &mut Vec::new(), &mut out);
    }
    out
}

/// Curves other than lines, fibers, `sigma` and `sigma_inf` admitted as
/// components of `E`.
fn member_vocabulary(surface: Surface) -> Vec<DivisorClass> {
    match surface {
        Surface::ProjectivePlane => vec![DivisorClass::plane(rat(2))],
        Surface::Hirzebruch(0) => vec![DivisorClass::hirzebruch_int(0, 1, 1)],
        Surface::Hirzebruch(1) => vec![DivisorClass::hirzebruch_int(1, 2, 2)],
        Surface::Hirzebruch(3) => vec![DivisorClass::hirzebruch_int(3, 1, 4)],
        Surface::Hirzebruch(_) => vec![],
    }
}

fn plane_splits(cell: &Cell, pruning: Pruning) -> Vec<Split> {
    let a = cell.a();
    let e = int(cell.e.first());
    let h = int(cell.l.first());
    let mut out = Vec::new();
    // Each line needs contact h with Delta, and a point of Delta contributes
    // at most mult + 1 to the total contact with lines.
    let max_lines = usize::try_from(2 * i64::from(cell.k) / h).unwrap_or(0);
    let max_lines = match pruning {
        Pruning::Raw => max_lines,
        Pruning::Claims => {
            let two = matches!((h, cell.k), (4, 7) | (4, 8));
            max_lines.min(if two { 2 } else { 1 })
        }
    };
    for parts in partitions(e, max_lines, 1, a - 1) {
        out.push(Split {
            sigma: 0,
            sigma_inf: 0,
            member: None,
            parts,
        });
    }
    let conic_allowed = pruning == Pruning::Raw || (h == 4 && cell.k == 8 && cell.is_half());
    if conic_allowed && e % 2 == 0 && e / 2 < a {
        out.push(Split {
            sigma: 0,
            sigma_inf: 0,
            member: Some((DivisorClass::plane(rat(2)), e / 2)),
            parts: vec![],
        });
    }
    out
}

fn hirzebruch_splits(cell: &Cell, big: bool, pruning: Pruning) -> Vec<Split> {
    let n = cell.surface.hirzebruch_degree().expect("hirzebruch");
    let ni = i64::from(n);
    let a = cell.a();
    let s = cell.s();
    let e0 = int(cell.e.first());
    let e = int(cell.e.second());
    let h0 = int(cell.l.first());
    let h = int(cell.l.second());
    let max_fibers = usize::try_from(i64::from(cell.k) / h0).unwrap_or(0);

    let coeff_range = |c: i64| c == 0 || (1..a).contains(&c);
    let mut members: Vec<Option<DivisorClass>> = vec![None];
    members.extend(member_vocabulary(cell.surface).into_iter().map(Some));

    let claims = pruning == Pruning::Claims;
    let big_special =
        big && cell.is_half() && [(0, 3, 6), (1, 5, 5), (2, 6, 6)].contains(&(n, h, cell.k));
    let small_special =
        !big && [(3, 6), (3, 7), (3, 8), (4, 8)].contains(&(n, cell.k)) && h == 2 * ni;
    let small_f1 = !big && n == 1 && h == 4 && cell.is_half();

    let mut out = Vec::new();
    for member in members {
        let (p, q) = member.map_or((0, 0), |c| (int(c.first()), int(c.second())));
        if claims {
            if let Some(class) = member {
                let ok = if big {
                    big_special && n == 0
                } else if small_f1 {
                    true
                } else {
                    n == 3 && cell.k == 8 && class == DivisorClass::hirzebruch_int(3, 1, 4)
                };
                if !ok {
                    continue;
                }
            } else if small_f1 {
                continue;
            }
        }
        let member_max = if p > 0 { e0 / p } else { 0 };
        for cm in 0..=member_max {
            if member.is_some() != (cm > 0) || !coeff_range(cm) {
                continue;
            }
            for c_inf in 0..=(e0 - p * cm) {
                if !coeff_range(c_inf) {
                    continue;
                }
                if claims && c_inf > 0 {
                    let ok = if big {
                        big_special && n > 0 || n == 0
                    } else {
                        small_special
                    };
                    if !ok {
                        continue;
                    }
                }
                let c_sigma = e0 - p * cm - c_inf;
                if !coeff_range(c_sigma) {
                    continue;
                }
                if claims && !big && n >= 3 {
                    // coeff_sigma E >= s (4n - k) / (2n)
                    let k = i64::from(cell.k);
                    if 2 * ni * c_sigma < s * (4 * ni - k) {
                        continue;
                    }
                }
                let fiber_total = e - ni * c_inf - q * cm;
                if fiber_total < 0 {
                    continue;
                }
                let mut lo = 1;
                if claims && big {
                    lo = (a + 2) / 3;
                }
                if claims && !big && n >= 3 {
                    lo = lo.max(c_sigma - s);
                }
                for parts in partitions(fiber_total, max_fibers, lo, a - 1) {
                    out.push(Split {
                        sigma: c_sigma,
                        sigma_inf: c_inf,
                        member: member.map(|c| (c, cm)),
                        parts,
                    });
                }
            }
        }
    }
    out
}

/// Checks that only depend on `L` and the configuration: component degrees
/// are nonnegative, the extra conditions of the non-big case and the
/// `(-1)`-curve condition on `F_1`.
fn configuration_feasible(
    cell: &Cell,
    config: &WeightedConfig,
) -> Option<BTreeMap<CurveRole, u32>> {
    let mut required = BTreeMap::new();
    for c in config.components() {
        let class = config.class_of(&c.role).ok()?;
        let r = intersect(&cell.l, &class).ok()?;
        if r < Rational::zero() || !r.is_integer() {
            return None;
        }
        required.insert(c.role, u32::try_from(r.to_integer()).ok()?);
    }
    if let Surface::Hirzebruch(n) = cell.surface {
        if n == 1 {
            let e_sigma = intersect(&config.class(), &DivisorClass::sigma(1)).ok()?;
            if e_sigma > Rational::zero() {
                return None;
            }
        }
        let adj = canonical_class(cell.surface) + cell.l;
        if adj.square().is_zero() {
            if n == 0 {
                return None;
            }
            if required
                .get(&CurveRole::MinimalSection)
                .copied()
                .unwrap_or(0)
                > 0
            {
                return None;
            }
            let c_sigma = config.coeff_of(&CurveRole::MinimalSection);
            for c in config.components() {
                let class = config.class_of(&c.role).ok()?;
                let section = match c.role {
                    CurveRole::SectionAtInfinity => true,
                    CurveRole::IrreducibleMember(m) => m.first() == rat(1),
                    _ => false,
                };
                if !section {
                    continue;
                }
                let lhs = rat(i64::from(n)) + class.square();
                let d = rat(i64::from(required[&c.role]));
                if lhs < d || (lhs == d && c_sigma < c.coeff) {
                    return None;
                }
            }
        }
    }
    Some(required)
}

/// Candidate point at a crossing.
#[derive(Debug, Clone, Copy)]
struct CrossingPoint {
    transversal: CurveRole,
    other: CurveRole,
    degree: u32,
    contact: u32,
}

struct DeltaSearch<'a> {
    cell: &'a Cell,
    config: &'a WeightedConfig,
    crossings: Vec<(CurveRole, CurveRole)>,
    out: Vec<TripletConfig>,
}

impl DeltaSearch<'_> {
    fn coeff(&self, role: &CurveRole) -> i64 {
        int(self.config.coeff_of(role))
    }

    /// Options for a point at `(t, o)` with contact 1 on `t`.
    fn crossing_options(
        &self,
        t: CurveRole,
        o: CurveRole,
        min_contact: u32,
        remaining: &BTreeMap<CurveRole, u32>,
    ) -> Vec<CrossingPoint> {
        let s = self.cell.s();
        let a = self.cell.a();
        let (mt, mo) = (self.coeff(&t), self.coeff(&o));
        let mut v = Vec::new();
        if remaining[&t] == 0 {
            return v;
        }
        for l2 in min_contact..=remaining[&o] {
            let l2i = i64::from(l2);
            let total = mt + mo * l2i;
            if total % s != 0 {
                continue;
            }
            let k = total / s;
            if k < l2i || s * (k - l2i) >= a {
                continue;
            }
            v.push(CrossingPoint {
                transversal: t,
                other: o,
                degree: u32::try_from(k).expect("small degree"),
                contact: l2,
            });
        }
        v
    }

    fn run(&mut self, required: BTreeMap<CurveRole, u32>) {
        let mut chosen = Vec::new();
        self.crossing_step(0, required, &mut chosen);
    }

    fn crossing_step(
        &mut self,
        i: usize,
        remaining: BTreeMap<CurveRole, u32>,
        chosen: &mut Vec<CrossingPoint>,
    ) {
        if i == self.crossings.len() {
            self.fill_curves(&remaining, chosen);
            return;
        }
        let (r1, r2) = self.crossings[i];
        self.crossing_step(i + 1, remaining.clone(), chosen);
        let mut options = self.crossing_options(r1, r2, 1, &remaining);
        options.extend(self.crossing_options(r2, r1, 2, &remaining));
        for opt in options {
            let mut rem = remaining.clone();
            *rem.get_mut(&opt.transversal).expect("component") -= 1;
            *rem.get_mut(&opt.other).expect("component") -= opt.contact;
            chosen.push(opt);
            self.crossing_step(i + 1, rem, chosen);
            chosen.pop();
        }
    }

    /// Admissible contacts of a point lying on `role` alone.
    fn curve_parts(&self, role: &CurveRole) -> Option<(u32, u32)> {
        let s = self.cell.s();
        let a = self.cell.a();
        let m = self.coeff(role);
        if m < s {
            return None;
        }
        let step = s / m.gcd(&s);
        // l (m - s) < a
        let max = if m == s { i64::MAX } else { (a - 1) / (m - s) };
        if step > max {
            return None;
        }
        Some((
            u32::try_from(step).expect("small"),
            u32::try_from(max.min(i64::from(u32::MAX))).expect("small"),
        ))
    }

    fn fill_curves(&mut self, remaining: &BTreeMap<CurveRole, u32>, chosen: &[CrossingPoint]) {
        let mut per_role: Vec<(CurveRole, Vec<Vec<i64>>)> = Vec::new();
        for (role, &r) in remaining {
            if r == 0 {
                continue;
            }
            let Some((step, max)) = self.curve_parts(role) else {
                return;
            };
            if r % step != 0 {
                return;
            }
            let units = i64::from(r / step);
            let max_units = i64::from(max / step);
            let parts = partitions(units, usize::MAX, 1, max_units);
            if parts.is_empty() {
                return;
            }
            let parts = parts
                .into_iter()
                .map(|p| p.into_iter().map(|u| u * i64::from(step)).collect())
                .collect();
            per_role.push((*role, parts));
        }
        let mut pick = vec![0usize; per_role.len()];
        loop {
            self.emit(chosen, &per_role, &pick);
            let mut j = 0;
            loop {
                if j == pick.len() {
                    return;
                }
                pick[j] += 1;
                if pick[j] < per_role[j].1.len() {
                    break;
                }
                pick[j] = 0;
                j += 1;
            }
        }
    }

    fn emit(
        &mut self,
        chosen: &[CrossingPoint],
        per_role: &[(CurveRole, Vec<Vec<i64>>)],
        pick: &[usize],
    ) {
        let s = self.cell.s();
        let mut points = Vec::new();
        let mut id = 0u32;
        for c in chosen {
            let Ok(p) =
                SubschemePoint::at_crossing(id, c.transversal, c.other, c.degree, c.contact)
            else {
                return;
            };
            points.push(p);
            id += 1;
        }
        for ((role, options), &j) in per_role.iter().zip(pick) {
            let m = self.coeff(role);
            for &l in &options[j] {
                let k = u32::try_from(m * l / s).expect("small");
                let l = u32::try_from(l).expect("small");
                let Ok(p) = SubschemePoint::on_curve(id, *role, k, l) else {
                    return;
                };
                points.push(p);
                id += 1;
            }
        }
        let total: u32 = points.iter().map(SubschemePoint::degree).sum();
        if total != self.cell.k {
            return;
        }
        let Ok(t) = TripletConfig::new(self.cell.index, self.config.clone(), points) else {
            return;
        };
        if is_normalized(&t) && validate(&t).is_valid() {
            self.out.push(t);
        }
    }
}

fn search_cell(cell: &Cell, splits: Vec<Split>) -> Vec<TripletConfig> {
    let mut out = Vec::new();
    for split in splits {
        let Some(config) = split.config(cell.surface) else {
            continue;
        };
        let Some(required) = configuration_feasible(cell, &config) else {
            continue;
        };
        let mut search = DeltaSearch {
            cell,
            config: &config,
            crossings: config.crossings(),
            out: Vec::new(),
        };
        search.run(required);
        out.append(&mut search.out);
    }
    out
}

/// All normalized triplets on `P^2` with this index.
pub fn triplets_p2(index: MultiIndex, pruning: Pruning) -> Vec<TripletConfig> {
    plane_cells(index, pruning)
        .iter()
        .flat_map(|cell| search_cell(cell, plane_splits(cell, pruning)))
        .collect()
}

/// All normalized triplets on `F_n` with this index and `K + L` big
/// (`big = true`) or not big.
pub fn triplets_fn(index: MultiIndex, n: u32, big: bool, pruning: Pruning) -> Vec<TripletConfig> {
    hirzebruch_cells(index, n, big, pruning)
        .iter()
        .flat_map(|cell| search_cell(cell, hirzebruch_splits(cell, big, pruning)))
        .collect()
}

//! Classification of log del Pezzo surfaces of index `(a, b)` with
//! `1/2 <= b/a < 1` through their fundamental triplets `(X, E, Delta)` on
//! `P^2` and the Hirzebruch surfaces `F_n`.
//!
//! The crate is organised in layers: divisor classes ([`picard`]), weighted
//! curve configurations and curvilinear subschemes ([`geometry`]), the
//! elimination of a subscheme ([`elimination`]), triplet validation
//! ([`triplet`]) and enumeration with labelling ([`classify`]).

pub mod classify;
pub mod elimination;
pub mod geometry;
pub mod picard;
pub mod triplet;

pub use classify::*;
pub use elimination::{
    dual_graph_of, eliminate, exceptional_curves, zero_lm_curves, CurveId, DualGraph,
    EliminationError, GraphSelection, ResolutionModel,
};
pub use geometry::{Component, CurveRole, GeometryError, Location, SubschemePoint, WeightedConfig};
pub use picard::{
    arithmetic_genus, canonical_class, intersect, rat, DivisorClass, PicardError, Rational, Surface,
};
pub use triplet::{
    cartier_multiplier, fundamental_divisor, is_normalized, validate, Condition, MultiIndex,
    TripletConfig, TripletError, ValidationReport,
};

//! The JSON form of a triplet.
//!
//! ```json
//! {
//!   "index": {"a": 3, "b": 2},
//!   "surface": {"kind": "plane"},
//!   "components": [{"role": "line:1", "coeff": "1"}],
//!   "points": [
//!     {"id": 0, "location": {"on": "line:1"}, "degree": 4, "contacts": {"line:1": 4}}
//!   ]
//! }
//! ```
//!
//! Roles are written `line:i`, `fiber:i`, `sigma`, `sigma_inf` or
//! `member:c1,c2`. Rationals are strings `p` or `p/q`. A location is
//! `{"on": role}`, `{"at": [role, role]}` or `"generic"`.

use std::collections::BTreeMap;

use delpezzo_core::geometry::parse_rational;
use delpezzo_core::{
    Component, CurveRole, GeometryError, Location, MultiIndex, Rational, SubschemePoint, Surface,
    TripletConfig, TripletError, WeightedConfig,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Reasons a document does not describe a triplet.
#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("surface kind `hirzebruch` needs a degree `n`")]
    MissingDegree,
    #[error("surface kind `plane` takes no degree `n`")]
    UnexpectedDegree,
    #[error("`{0}` is not a curve role on this surface")]
    BadRole(String),
    #[error("`{0}` is not a rational number")]
    BadRational(String),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Triplet(#[from] TripletError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IndexDoc {
    pub a: u32,
    pub b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Plane,
    Hirzebruch,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceDoc {
    pub kind: SurfaceKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub role: String,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocationDoc {
    On(String),
    At([String; 2]),
    Generic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointDoc {
    /// Defaults to the position in the list.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<u32>,
    pub location: LocationDoc,
    pub degree: u32,
    #[serde(default)]
    pub contacts: BTreeMap<String, u32>,
}

/// A triplet as read from or written to disk.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TripletDocument {
    pub index: IndexDoc,
    pub surface: SurfaceDoc,
    pub components: Vec<ComponentDoc>,
    pub points: Vec<PointDoc>,
}

/// Writes a rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

impl SurfaceDoc {
    pub fn from_surface(surface: Surface) -> Self {
        match surface {
            Surface::ProjectivePlane => Self {
                kind: SurfaceKind::Plane,
                n: None,
            },
            Surface::Hirzebruch(n) => Self {
                kind: SurfaceKind::Hirzebruch,
                n: Some(n),
            },
        }
    }

    pub fn to_surface(self) -> Result<Surface, DocumentError> {
        match (self.kind, self.n) {
            (SurfaceKind::Plane, None) => Ok(Surface::ProjectivePlane),
            (SurfaceKind::Plane, Some(_)) => Err(DocumentError::UnexpectedDegree),
            (SurfaceKind::Hirzebruch, Some(n)) => Ok(Surface::Hirzebruch(n)),
            (SurfaceKind::Hirzebruch, None) => Err(DocumentError::MissingDegree),
        }
    }
}

fn role(text: &str, surface: Surface) -> Result<CurveRole, DocumentError> {
    CurveRole::parse(text, surface).ok_or_else(|| DocumentError::BadRole(text.to_string()))
}

impl TripletDocument {
    pub fn parse(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    pub fn from_triplet(t: &TripletConfig) -> Self {
        let components = t
            .config()
            .components()
            .iter()
            .map(|c| ComponentDoc {
                role: c.role.to_string(),
                coeff: format_rational(&c.coeff),
            })
            .collect();
        let points = t
            .points()
            .iter()
            .map(|p| PointDoc {
                id: Some(p.id()),
                location: match p.location() {
                    Location::OnCurve(r) => LocationDoc::On(r.to_string()),
                    Location::AtIntersection(r1, r2) => {
                        LocationDoc::At([r1.to_string(), r2.to_string()])
                    }
                    Location::GenericOnSurface => LocationDoc::Generic,
                },
                degree: p.degree(),
                contacts: p
                    .contacts()
                    .iter()
                    .map(|(r, c)| (r.to_string(), *c))
                    .collect(),
            })
            .collect();
        Self {
            index: IndexDoc {
                a: t.index().a(),
                b: t.index().b(),
            },
            surface: SurfaceDoc::from_surface(t.surface()),
            components,
            points,
        }
    }

    pub fn to_triplet(&self) -> Result<TripletConfig, DocumentError> {
        let surface = self.surface.to_surface()?;
        let index = MultiIndex::new(self.index.a, self.index.b)?;
        let components = self
            .components
            .iter()
            .map(|c| {
                let coeff = parse_rational(&c.coeff)
                    .ok_or_else(|| DocumentError::BadRational(c.coeff.clone()))?;
                Ok(Component::new(role(&c.role, surface)?, coeff))
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        let config = WeightedConfig::new(surface, components)?;
        let mut points = Vec::with_capacity(self.points.len());
        for (i, p) in self.points.iter().enumerate() {
            let id =
                p.id.unwrap_or(u32::try_from(i).expect("point count fits u32"));
            let location = match &p.location {
                LocationDoc::On(r) => Location::OnCurve(role(r, surface)?),
                LocationDoc::At([r1, r2]) => {
                    Location::crossing(role(r1, surface)?, role(r2, surface)?)
                }
                LocationDoc::Generic => Location::GenericOnSurface,
            };
            let contacts = p
                .contacts
                .iter()
                .map(|(r, c)| Ok((role(r, surface)?, *c)))
                .collect::<Result<BTreeMap<_, _>, DocumentError>>()?;
            points.push(SubschemePoint::new(id, location, p.degree, contacts)?);
        }
        Ok(TripletConfig::new(index, config, points)?)
    }
}

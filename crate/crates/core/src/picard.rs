//! Exact intersection theory on the Picard lattices of the projective plane
//! and of the Hirzebruch surfaces `F_n`.
//!
//! On `P^2` the lattice is spanned by the class `l` of a line with `l.l = 1`.
//! On `F_n` it is spanned by the minimal section `sigma` and a fiber `l` with
//! `sigma.sigma = -n`, `sigma.l = 1` and `l.l = 0`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Ratio;
use num_traits::{One, Zero};
use thiserror::Error;

/// Exact rational number used for every coefficient in the library.
pub type Rational = Ratio<i64>;

/// Shorthand for an integral rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// Errors raised by lattice arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PicardError {
    /// The two classes live on different surfaces.
    #[error("divisor classes live on different surfaces ({0} and {1})")]
    SurfaceMismatch(Surface, Surface),
    /// A coefficient vector has the wrong length for the surface.
    #[error("{surface} expects {expected} coefficient(s), got {got}")]
    BasisDimension {
        surface: Surface,
        expected: usize,
        got: usize,
    },
}

/// The ambient surface `X` of a fundamental triplet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Surface {
    /// The projective plane.
    ProjectivePlane,
    /// The Hirzebruch surface `F_n`.
    Hirzebruch(u32),
}

impl Surface {
    /// Degree `n` of a Hirzebruch surface, `None` for the plane.
    pub fn hirzebruch_degree(self) -> Option<u32> {
        match self {
            Surface::ProjectivePlane => None,
            Surface::Hirzebruch(n) => Some(n),
        }
    }

    /// Number of basis vectors of the Picard lattice.
    pub fn rank(self) -> usize {
        match self {
            Surface::ProjectivePlane => 1,
            Surface::Hirzebruch(_) => 2,
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::ProjectivePlane => write!(f, "P2"),
            Surface::Hirzebruch(n) => write!(f, "F{n}"),
        }
    }
}

/// A divisor class with exact rational coefficients.
///
/// On `P^2` only the first coefficient (the degree) is meaningful and the
/// second is kept at zero. On `F_n` the coefficients are `(c_sigma, c_l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    surface: Surface,
    coeffs: [Rational; 2],
}

impl DivisorClass {
    /// Builds a class from a coefficient slice whose length matches the rank.
    pub fn from_coeffs(surface: Surface, coeffs: &[Rational]) -> Result<Self, PicardError> {
        if coeffs.len() != surface.rank() {
            return Err(PicardError::BasisDimension {
                surface,
                expected: surface.rank(),
                got: coeffs.len(),
            });
        }
        let mut c = [Rational::zero(); 2];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(Self { surface, coeffs: c })
    }

    /// The zero class.
    pub fn zero(surface: Surface) -> Self {
        Self {
            surface,
            coeffs: [Rational::zero(); 2],
        }
    }

    /// `d * l` on the projective plane.
    pub fn plane(d: Rational) -> Self {
        Self {
            surface: Surface::ProjectivePlane,
            coeffs: [d, Rational::zero()],
        }
    }

    /// `s * sigma + t * l` on `F_n`.
    pub fn hirzebruch(n: u32, s: Rational, t: Rational) -> Self {
        Self {
            surface: Surface::Hirzebruch(n),
            coeffs: [s, t],
        }
    }

    /// Integral convenience constructor for `s * sigma + t * l` on `F_n`.
    pub fn hirzebruch_int(n: u32, s: i64, t: i64) -> Self {
        Self::hirzebruch(n, rat(s), rat(t))
    }

    /// The class of a line on `P^2`.
    pub fn line() -> Self {
        Self::plane(Rational::one())
    }

    /// The minimal section `sigma` of `F_n`.
    pub fn sigma(n: u32) -> Self {
        Self::hirzebruch_int(n, 1, 0)
    }

    /// The fiber class `l` of `F_n`.
    pub fn fiber(n: u32) -> Self {
        Self::hirzebruch_int(n, 0, 1)
    }

    /// The section at infinity `sigma_inf = sigma + n l`.
    pub fn sigma_infinity(n: u32) -> Self {
        Self::hirzebruch_int(n, 1, i64::from(n))
    }

    /// Surface carrying the class.
    pub fn surface(&self) -> Surface {
        self.surface
    }

    /// Coefficients in the standard basis (length 1 on `P^2`, 2 on `F_n`).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs[..self.surface.rank()]
    }

    /// Coefficient of `l` on `P^2`, or of `sigma` on `F_n`.
    pub fn first(&self) -> Rational {
        self.coeffs[0]
    }

    /// Coefficient of the fiber `l` on `F_n` (zero on `P^2`).
    pub fn second(&self) -> Rational {
        self.coeffs[1]
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_integer())
    }

    /// True when every coefficient is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs().iter().all(|c| c.is_zero())
    }

    /// Checked sum.
    pub fn checked_add(&self, other: &Self) -> Result<Self, PicardError> {
        same_surface(self, other)?;
        Ok(Self {
            surface: self.surface,
            coeffs: [
                self.coeffs[0] + other.coeffs[0],
                self.coeffs[1] + other.coeffs[1],
            ],
        })
    }

    /// Multiplies every coefficient by `k`.
    pub fn scale(&self, k: Rational) -> Self {
        Self {
            surface: self.surface,
            coeffs: [self.coeffs[0] * k, self.coeffs[1] * k],
        }
    }

    /// Self-intersection number.
    pub fn square(&self) -> Rational {
        intersect(self, self).expect("a class always lives on its own surface")
    }

    /// Nefness by the finite criterion: the nef cone of `P^2` is dual to
    /// `{l}` and that of `F_n` is dual to `{sigma, l}`.
    pub fn is_nef(&self) -> bool {
        match self.surface {
            Surface::ProjectivePlane => self.coeffs[0] >= Rational::zero(),
            Surface::Hirzebruch(n) => {
                let s = intersect(self, &DivisorClass::sigma(n)).expect("same surface");
                let l = intersect(self, &DivisorClass::fiber(n)).expect("same surface");
                s >= Rational::zero() && l >= Rational::zero()
            }
        }
    }

    /// Nef with positive self-intersection.
    pub fn is_nef_and_big(&self) -> bool {
        self.is_nef() && self.square() > Rational::zero()
    }
}

fn same_surface(a: &DivisorClass, b: &DivisorClass) -> Result<(), PicardError> {
    if a.surface == b.surface {
        Ok(())
    } else {
        Err(PicardError::SurfaceMismatch(a.surface, b.surface))
    }
}

/// # Panics
///
/// Panics when the summands live on different surfaces; use
/// [`DivisorClass::checked_add`] for a fallible version.
impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("divisor classes on the same surface")
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(self) -> Self {
        self.scale(-Rational::one())
    }
}

/// # Panics
///
/// Panics when the operands live on different surfaces.
impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul<DivisorClass> for Rational {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.scale(self)
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, rhs: DivisorClass) -> DivisorClass {
        rhs.scale(rat(self))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.surface {
            Surface::ProjectivePlane => write!(f, "{}l", self.coeffs[0]),
            Surface::Hirzebruch(_) => write!(f, "{}s+{}l", self.coeffs[0], self.coeffs[1]),
        }
    }
}

/// The symmetric bilinear intersection form.
pub fn intersect(c1: &DivisorClass, c2: &DivisorClass) -> Result<Rational, PicardError> {
    same_surface(c1, c2)?;
    let [a1, b1] = c1.coeffs;
    let [a2, b2] = c2.coeffs;
    Ok(match c1.surface {
        Surface::ProjectivePlane => a1 * a2,
        Surface::Hirzebruch(n) => -rat(i64::from(n)) * a1 * a2 + a1 * b2 + b1 * a2,
    })
}

/// The canonical class: `-3l` on `P^2`, `-2 sigma - (n+2) l` on `F_n`.
pub fn canonical_class(surface: Surface) -> DivisorClass {
    match surface {
        Surface::ProjectivePlane => DivisorClass::plane(rat(-3)),
        Surface::Hirzebruch(n) => DivisorClass::hirzebruch_int(n, -2, -(i64::from(n) + 2)),
    }
}

/// Arithmetic genus by adjunction, `p_a = C.(C + K)/2 + 1`.
pub fn arithmetic_genus(c: &DivisorClass) -> Rational {
    let k = canonical_class(c.surface);
    let ck = intersect(c, &(*c + k)).expect("same surface");
    ck / rat(2) + Rational::one()
}

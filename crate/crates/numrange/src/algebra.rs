//! Scalars, 2x2 complex matrices, unit vectors, and the Hopf map.
//!
//! Everything downstream (canonicalization, range geometry, sampling) is built
//! from the handful of exact operations defined here. The inner product is
//! conjugate-linear in the second slot: `<u, w> = u1 conj(w1) + u2 conj(w2)`.

use std::ops::{Add, Mul, Sub};

pub use num_complex::Complex64;

use crate::Error;

/// Accepted deviation of a squared norm from 1 in the unit-vector and
/// unit-sphere constructors.
pub const UNIT_NORM_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

fn ensure_finite(z: Complex64, what: &'static str) -> Result<(), Error> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::NonFinite { what })
    }
}

// ── Matrix2C ────────────────────────────────────────────────────────────────

/// A 2x2 complex matrix with finite entries, stored row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Matrix2C {
    a11: Complex64,
    a12: Complex64,
    a21: Complex64,
    a22: Complex64,
}

impl Matrix2C {
    /// Builds the matrix `[[a11, a12], [a21, a22]]`.
    ///
    /// Panics if any entry is NaN or infinite; use [`Matrix2C::try_new`] to
    /// handle that case as a value.
    pub fn new(a11: Complex64, a12: Complex64, a21: Complex64, a22: Complex64) -> Self {
        Self::try_new(a11, a12, a21, a22).expect("matrix entries must be finite")
    }

    /// Fallible constructor: rejects NaN and infinite entries.
    pub fn try_new(
        a11: Complex64,
        a12: Complex64,
        a21: Complex64,
        a22: Complex64,
    ) -> Result<Self, Error> {
        for z in [a11, a12, a21, a22] {
            ensure_finite(z, "matrix entry")?;
        }
        Ok(Self { a11, a12, a21, a22 })
    }

    /// The identity matrix.
    pub fn identity() -> Self {
        Self::diagonal(ONE, ONE)
    }

    /// The diagonal matrix `diag(d1, d2)`.
    pub fn diagonal(d1: Complex64, d2: Complex64) -> Self {
        Self::new(d1, ZERO, ZERO, d2)
    }

    pub fn a11(&self) -> Complex64 {
        self.a11
    }

    pub fn a12(&self) -> Complex64 {
        self.a12
    }

    pub fn a21(&self) -> Complex64 {
        self.a21
    }

    pub fn a22(&self) -> Complex64 {
        self.a22
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> Complex64 {
        self.a11 + self.a22
    }

    /// Determinant `a11 a22 - a12 a21`.
    pub fn det(&self) -> Complex64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    /// Conjugate transpose `A*`.
    pub fn adjoint(&self) -> Self {
        Self {
            a11: self.a11.conj(),
            a12: self.a21.conj(),
            a21: self.a12.conj(),
            a22: self.a22.conj(),
        }
    }

    /// Squared Frobenius norm: the sum of squared entry moduli, which equals
    /// `tr(A* A)`.
    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.a11.norm_sqr() + self.a12.norm_sqr() + self.a21.norm_sqr() + self.a22.norm_sqr()
    }

    /// Frobenius norm `sqrt(tr(A* A))`.
    pub fn frobenius_norm(&self) -> f64 {
        self.frobenius_norm_sqr().sqrt()
    }

    /// The plane transform `e^{i theta} A + v I`, a rotation and translation
    /// of the spectrum (and of the numerical range).
    ///
    /// Panics if `theta` or `v` is not finite.
    pub fn plane_transform(&self, theta: f64, v: Complex64) -> Self {
        assert!(theta.is_finite(), "rotation angle must be finite");
        assert!(v.re.is_finite() && v.im.is_finite(), "shift must be finite");
        let rot = Complex64::from_polar(1.0, theta);
        Self {
            a11: rot * self.a11 + v,
            a12: rot * self.a12,
            a21: rot * self.a21,
            a22: rot * self.a22 + v,
        }
    }

    /// Both roots of `det(A - l I) = 0` by the quadratic formula with the
    /// principal branch of the complex square root. The root with larger real
    /// part comes first; ties are broken by larger imaginary part. A repeated
    /// eigenvalue is returned twice.
    pub fn eigenvalues(&self) -> (Complex64, Complex64) {
        let half_tr = 0.5 * self.trace();
        let d = (half_tr * half_tr - self.det()).sqrt();
        let (l1, l2) = (half_tr + d, half_tr - d);
        if (l2.re, l2.im) > (l1.re, l1.im) {
            (l2, l1)
        } else {
            (l1, l2)
        }
    }

    /// Rayleigh quotient `<Ax, x>`, the point of the numerical range reached
    /// by the unit vector `x`.
    pub fn rayleigh(&self, x: &UnitVector2) -> Complex64 {
        let w1 = self.a11 * x.z1 + self.a12 * x.z2;
        let w2 = self.a21 * x.z1 + self.a22 * x.z2;
        w1 * x.z1.conj() + w2 * x.z2.conj()
    }
}

impl Add for Matrix2C {
    type Output = Matrix2C;

    fn add(self, rhs: Matrix2C) -> Matrix2C {
        Matrix2C {
            a11: self.a11 + rhs.a11,
            a12: self.a12 + rhs.a12,
            a21: self.a21 + rhs.a21,
            a22: self.a22 + rhs.a22,
        }
    }
}

impl Sub for Matrix2C {
    type Output = Matrix2C;

    fn sub(self, rhs: Matrix2C) -> Matrix2C {
        Matrix2C {
            a11: self.a11 - rhs.a11,
            a12: self.a12 - rhs.a12,
            a21: self.a21 - rhs.a21,
            a22: self.a22 - rhs.a22,
        }
    }
}

impl Mul for Matrix2C {
    type Output = Matrix2C;

    fn mul(self, rhs: Matrix2C) -> Matrix2C {
        Matrix2C {
            a11: self.a11 * rhs.a11 + self.a12 * rhs.a21,
            a12: self.a11 * rhs.a12 + self.a12 * rhs.a22,
            a21: self.a21 * rhs.a11 + self.a22 * rhs.a21,
            a22: self.a21 * rhs.a12 + self.a22 * rhs.a22,
        }
    }
}

// ── UnitVector2 ─────────────────────────────────────────────────────────────

/// A unit vector `x = (z1, z2)` in C^2.
///
/// Construction checks `|z1|^2 + |z2|^2 = 1` within [`UNIT_NORM_TOL`] and
/// rejects anything outside it; no silent renormalization happens anywhere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnitVector2 {
    z1: Complex64,
    z2: Complex64,
}

impl UnitVector2 {
    /// Validates and wraps the pair `(z1, z2)`.
    pub fn new(z1: Complex64, z2: Complex64) -> Result<Self, Error> {
        ensure_finite(z1, "vector component")?;
        ensure_finite(z2, "vector component")?;
        let deviation = (z1.norm_sqr() + z2.norm_sqr() - 1.0).abs();
        if deviation > UNIT_NORM_TOL {
            return Err(Error::NotUnit {
                deviation,
                tolerance: UNIT_NORM_TOL,
            });
        }
        Ok(Self { z1, z2 })
    }

    /// First standard basis vector `(1, 0)`.
    pub fn e1() -> Self {
        Self { z1: ONE, z2: ZERO }
    }

    /// Second standard basis vector `(0, 1)`.
    pub fn e2() -> Self {
        Self { z1: ZERO, z2: ONE }
    }

    pub fn z1(&self) -> Complex64 {
        self.z1
    }

    pub fn z2(&self) -> Complex64 {
        self.z2
    }
}

// ── SphereVector ────────────────────────────────────────────────────────────

/// A point `(s1, s2, s3)` on the real unit 2-sphere, checked to
/// [`UNIT_NORM_TOL`] on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SphereVector {
    s1: f64,
    s2: f64,
    s3: f64,
}

impl SphereVector {
    /// Validates and wraps the triple `(s1, s2, s3)`.
    pub fn new(s1: f64, s2: f64, s3: f64) -> Result<Self, Error> {
        if !(s1.is_finite() && s2.is_finite() && s3.is_finite()) {
            return Err(Error::NonFinite {
                what: "sphere coordinate",
            });
        }
        let deviation = (s1 * s1 + s2 * s2 + s3 * s3 - 1.0).abs();
        if deviation > UNIT_NORM_TOL {
            return Err(Error::NotUnit {
                deviation,
                tolerance: UNIT_NORM_TOL,
            });
        }
        Ok(Self { s1, s2, s3 })
    }

    /// Wraps coordinates that are unit by construction (used by [`hopf_map`],
    /// whose output satisfies the sphere equation identically).
    pub(crate) fn new_unchecked(s1: f64, s2: f64, s3: f64) -> Self {
        Self { s1, s2, s3 }
    }

    pub fn s1(&self) -> f64 {
        self.s1
    }

    pub fn s2(&self) -> f64 {
        self.s2
    }

    pub fn s3(&self) -> f64 {
        self.s3
    }

    /// The coordinates as `[s1, s2, s3]`.
    pub fn as_array(&self) -> [f64; 3] {
        [self.s1, self.s2, self.s3]
    }
}

// ── Hopf map ────────────────────────────────────────────────────────────────

/// The Hopf map from the unit sphere of C^2 onto the unit sphere of R^3:
///
/// `x = (z1, z2)  ->  (2 Re(conj(z1) z2), 2 Im(conj(z1) z2), |z2|^2 - |z1|^2)`.
///
/// Unit vectors that differ by a global phase land on the same point, and the
/// image satisfies `s1^2 + s2^2 + s3^2 = (|z1|^2 + |z2|^2)^2 = 1`.
pub fn hopf_map(x: &UnitVector2) -> SphereVector {
    let p = x.z1.conj() * x.z2;
    SphereVector::new_unchecked(2.0 * p.re, 2.0 * p.im, x.z2.norm_sqr() - x.z1.norm_sqr())
}

// ── Tests ───────────────────────────────────────────────────────────────────

//! Closed-form geometry of the numerical range.
//!
//! Two independent routes lead to the same ellipse. The direct route
//! ([`semi_axes`], [`numerical_range`]) reads the semi-axes off trace
//! invariants of the traceless part of `A` and the foci off the eigenvalues.
//! The structural route ([`canonicalize`]) conjugates `A` into the upper
//! triangular normal form `[[c, 2b], [0, -c]]` by a unitary change of basis
//! after rotating and shifting the spectrum; [`factor_decomposition`] then
//! writes the range map of that normal form as a linear image of the unit
//! sphere. Agreement of the two routes is enforced by the test suite.

use std::f64::consts::PI;

use crate::algebra::{hopf_map, Complex64, Matrix2C, SphereVector, UnitVector2};
use crate::Error;

/// Accepted deviation of `U U*` from the identity in [`PlaneTransform::new`].
pub const UNITARY_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

// ── Shapes ──────────────────────────────────────────────────────────────────

/// Degeneracy class of a numerical range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ShapeKind {
    /// Both semi-axes vanish: `W(A)` is the single point `tr(A)/2`.
    Point,
    /// Only the minor semi-axis vanishes: a line segment joining the
    /// eigenvalues (the normal case).
    Segment,
    /// The foci coincide but the radius is positive: a round disk.
    Disk,
    /// The generic case: a non-degenerate filled ellipse.
    Ellipse,
}

/// The numerical range of a 2x2 matrix as a possibly degenerate elliptical
/// disk: center, foci, semi-axes, major-axis direction, and degeneracy class.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeShape {
    kind: ShapeKind,
    center: Complex64,
    focus1: Complex64,
    focus2: Complex64,
    semi_major: f64,
    semi_minor: f64,
    orientation: f64,
}

impl RangeShape {
    pub fn kind(&self) -> ShapeKind {
        self.kind
    }

    /// Center of the ellipse, always `tr(A)/2`.
    pub fn center(&self) -> Complex64 {
        self.center
    }

    /// The foci (the eigenvalues of `A`), in eigenvalue order.
    pub fn foci(&self) -> (Complex64, Complex64) {
        (self.focus1, self.focus2)
    }

    pub fn semi_major(&self) -> f64 {
        self.semi_major
    }

    pub fn semi_minor(&self) -> f64 {
        self.semi_minor
    }

    /// Angle of the major axis in `[0, pi)`; `0` for points and disks, where
    /// no direction is distinguished.
    pub fn orientation(&self) -> f64 {
        self.orientation
    }

    /// Whether `z` lies in the range, up to `tol`, by the focal-sum test
    /// `|z - f1| + |z - f2| <= 2 semi_major + tol`. The same test covers all
    /// four degeneracy classes.
    pub fn contains(&self, z: Complex64, tol: f64) -> bool {
        assert!(tol.is_finite() && tol >= 0.0, "tolerance must be >= 0");
        (z - self.focus1).norm() + (z - self.focus2).norm() <= 2.0 * self.semi_major + tol
    }

    /// The boundary parametrization
    /// `center + e^{i orientation} (semi_major cos t + i semi_minor sin t)`.
    ///
    /// For a point this is constantly the center; for a segment it traces the
    /// segment twice per period.
    pub fn boundary_point(&self, t: f64) -> Complex64 {
        assert!(t.is_finite(), "parameter must be finite");
        let local = Complex64::new(self.semi_major * t.cos(), self.semi_minor * t.sin());
        self.center + Complex64::from_polar(1.0, self.orientation) * local
    }

    /// Distance from the center to the boundary in the direction `psi`
    /// (an angle in the plane). Only meaningful when `semi_minor > 0`.
    pub(crate) fn boundary_radius(&self, psi: f64) -> f64 {
        let u = psi - self.orientation;
        let (a, b) = (self.semi_major, self.semi_minor);
        a * b / ((b * u.cos()).powi(2) + (a * u.sin()).powi(2)).sqrt()
    }
}

// ── Plane transform and canonical form ──────────────────────────────────────

/// The bookkeeping of canonicalization: a spectrum rotation `theta`, a shift
/// `v = tr(A)/2`, and the unitary `U` of the basis change.
///
/// The canonical matrix is `U* (e^{i theta} (A - v I)) U`; a range point `z`
/// of the canonical matrix corresponds to `e^{-i theta} z + v` for `A`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneTransform {
    theta: f64,
    shift: Complex64,
    unitary: Matrix2C,
}

impl PlaneTransform {
    /// Validates that `theta` and `shift` are finite and that `unitary` is
    /// unitary within [`UNITARY_TOL`].
    pub fn new(theta: f64, shift: Complex64, unitary: Matrix2C) -> Result<Self, Error> {
        if !theta.is_finite() {
            return Err(Error::NonFinite {
                what: "rotation angle",
            });
        }
        if !(shift.re.is_finite() && shift.im.is_finite()) {
            return Err(Error::NonFinite { what: "shift" });
        }
        let d = unitary * unitary.adjoint() - Matrix2C::identity();
        let dev = [d.a11(), d.a12(), d.a21(), d.a22()]
            .into_iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        if dev > UNITARY_TOL {
            return Err(Error::NotUnitary {
                deviation: dev,
                tolerance: UNITARY_TOL,
            });
        }
        Ok(Self {
            theta,
            shift,
            unitary,
        })
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn shift(&self) -> Complex64 {
        self.shift
    }

    pub fn unitary(&self) -> Matrix2C {
        self.unitary
    }

    /// Maps a range point of the canonical matrix back to the plane of the
    /// original matrix: `z -> e^{-i theta} z + shift`.
    pub fn map_back(&self, z: Complex64) -> Complex64 {
        Complex64::from_polar(1.0, -self.theta) * z + self.shift
    }
}

/// Result of [`canonicalize`]: the parameters `b, c >= 0` of the normal form
/// `[[c, 2b], [0, -c]]` together with the transform that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CanonicalForm {
    b: f64,
    c: f64,
    transform: PlaneTransform,
}

impl CanonicalForm {
    /// Half the off-diagonal of the normal form; equals the minor semi-axis.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// The (real, nonnegative) eigenvalue of the normal form; half the focal
    /// distance of the range.
    pub fn c(&self) -> f64 {
        self.c
    }

    pub fn transform(&self) -> &PlaneTransform {
        &self.transform
    }

    /// The normal form `[[c, 2b], [0, -c]]` itself.
    pub fn canonical_matrix(&self) -> Matrix2C {
        Matrix2C::new(
            Complex64::new(self.c, 0.0),
            Complex64::new(2.0 * self.b, 0.0),
            ZERO,
            Complex64::new(-self.c, 0.0),
        )
    }

    /// Undoes the canonicalization: `e^{-i theta} (U T U*) + shift I`, which
    /// recovers the original matrix up to roundoff.
    pub fn reconstruct(&self) -> Matrix2C {
        let u = self.transform.unitary;
        let conjugated = u * self.canonical_matrix() * u.adjoint();
        conjugated.plane_transform(-self.transform.theta, self.transform.shift)
    }
}

// ── Direct route ────────────────────────────────────────────────────────────

/// Center of `W(A)`: `tr(A)/2`.
pub fn center(a: &Matrix2C) -> Complex64 {
    0.5 * a.trace()
}

/// Scale-relative length cutoff `1e-10 (1 + ||A||_F)` under which an axis or
/// focal distance is classified as zero.
pub fn degeneracy_threshold(a: &Matrix2C) -> f64 {
    1e-10 * (1.0 + a.frobenius_norm())
}

/// Semi-axes `(s_plus, s_minus)` of `W(A)` from trace invariants of the
/// traceless part `B = A - (tr(A)/2) I`:
///
/// `s_pm = (1/2) sqrt( tr(B* B) pm |tr(B^2)| )`.
///
/// `s_plus` is the major and `s_minus` the minor semi-axis; tiny negative
/// radicands from cancellation are clamped to zero.
pub fn semi_axes(a: &Matrix2C) -> (f64, f64) {
    let v = center(a);
    let b = *a - Matrix2C::diagonal(v, v);
    let gram = b.frobenius_norm_sqr();
    let m = (b * b).trace().norm();
    let s_plus = 0.5 * (gram + m).max(0.0).sqrt();
    let s_minus = 0.5 * (gram - m).max(0.0).sqrt();
    (s_plus, s_minus)
}

/// The numerical range of `A` as an explicit [`RangeShape`].
///
/// Foci are the eigenvalues, the semi-axes come from [`semi_axes`], and the
/// degeneracy class is decided against [`degeneracy_threshold`]: a vanishing
/// major axis gives a point, a vanishing minor axis a segment, coinciding
/// foci (with positive radius) a disk, and anything else an ellipse.
pub fn numerical_range(a: &Matrix2C) -> RangeShape {
    let (focus1, focus2) = a.eigenvalues();
    let (semi_major, semi_minor) = semi_axes(a);
    let tol = degeneracy_threshold(a);
    let focal = (focus1 - focus2).norm();

    let kind = if semi_major <= tol {
        ShapeKind::Point
    } else if semi_minor <= tol {
        ShapeKind::Segment
    } else if focal <= tol {
        ShapeKind::Disk
    } else {
        ShapeKind::Ellipse
    };

    // The major axis joins the foci; without distinct foci no direction is
    // distinguished and the orientation is fixed at 0.
    let orientation = if focal <= tol {
        0.0
    } else {
        (focus1 - focus2).arg().rem_euclid(PI)
    };

    RangeShape {
        kind,
        center: center(a),
        focus1,
        focus2,
        semi_major,
        semi_minor,
        orientation,
    }
}

/// Support function of `W(A)` in the direction `phi`: the largest eigenvalue
/// of the Hermitian part of `e^{-i phi} A`. Computed without reference to the
/// ellipse parameters, so it serves as an independent cross-check on them.
pub fn support_value(a: &Matrix2C, phi: f64) -> f64 {
    assert!(phi.is_finite(), "direction must be finite");
    let m = a.plane_transform(-phi, ZERO);
    // Hermitian part H = (M + M*)/2: real diagonal, h21 = conj(h12).
    let h11 = m.a11().re;
    let h22 = m.a22().re;
    let h12 = 0.5 * (m.a12() + m.a21().conj());
    let mid = 0.5 * (h11 + h22);
    let rad = ((0.5 * (h11 - h22)).powi(2) + h12.norm_sqr()).sqrt();
    mid + rad
}

// ── Structural route ────────────────────────────────────────────────────────

/// Unitarily triangularizes `A` into the normal form `[[c, 2b], [0, -c]]`
/// with `b, c >= 0`.
///
/// Steps: split off the shift `v = tr(A)/2`; let `lambda` be the eigenvalue
/// of the traceless part `B` carrying the principal-branch square root and
/// rotate by `theta = -arg(lambda)` so that `C = e^{i theta} B` has the real
/// eigenvalue `c = |lambda|`; Schur-triangularize `C` by a unitary whose
/// first column is a unit eigenvector for `c`; absorb the phase of the
/// remaining off-diagonal entry into the column phases.
pub fn canonicalize(a: &Matrix2C) -> CanonicalForm {
    let v = center(a);
    let traceless = *a - Matrix2C::diagonal(v, v);

    // Eigenvalue of the traceless part with the principal-branch sign. The
    // residual half-trace is kept in the formula so that `c` is exactly an
    // eigenvalue of the matrix we actually hold.
    let half_tr = 0.5 * traceless.trace();
    let lambda = half_tr + (half_tr * half_tr - traceless.det()).sqrt();
    let c = lambda.norm();
    let theta = if c == 0.0 { 0.0 } else { -lambda.arg() };
    let cm = traceless.plane_transform(theta, ZERO);

    let (x1, x2) = eigenvector_for(&cm, c);
    // Completing x to an orthonormal basis; y is orthogonal to x by design.
    let (y1, y2) = (-x2.conj(), x1.conj());

    // Off-diagonal of U* C U in that basis: 2 beta = <C y, x>.
    let cy1 = cm.a11() * y1 + cm.a12() * y2;
    let cy2 = cm.a21() * y1 + cm.a22() * y2;
    let two_beta = x1.conj() * cy1 + x2.conj() * cy2;
    let b = 0.5 * two_beta.norm();

    // Rotating the column phases oppositely multiplies the off-diagonal by
    // e^{-2i psi}, which makes it real and nonnegative.
    let psi = if two_beta.norm() == 0.0 {
        0.0
    } else {
        0.5 * two_beta.arg()
    };
    let px = Complex64::from_polar(1.0, psi);
    let py = px.conj();
    let unitary = Matrix2C::new(x1 * px, y1 * py, x2 * px, y2 * py);

    let transform =
        PlaneTransform::new(theta, v, unitary).expect("constructed basis change is unitary");
    CanonicalForm { b, c, transform }
}

/// A unit eigenvector of the rotated traceless matrix `cm` for its
/// nonnegative real eigenvalue `c`.
fn eigenvector_for(cm: &Matrix2C, c: f64) -> (Complex64, Complex64) {
    if cm.frobenius_norm_sqr() == 0.0 {
        // The zero matrix: every vector works, keep the basis unchanged.
        return (Complex64::new(1.0, 0.0), ZERO);
    }
    if c > 0.0 {
        // For traceless C with eigenvalues +/- c, the adjugate identity
        // (C - c)(C + c) = 0 makes every nonzero column of C + c I an
        // eigenvector for +c; the larger column is the stable choice.
        let cc = Complex64::new(c, 0.0);
        let col1 = (cm.a11() + cc, cm.a21());
        let col2 = (cm.a12(), cm.a22() + cc);
        let pick = if col2.0.norm_sqr() + col2.1.norm_sqr() > col1.0.norm_sqr() + col1.1.norm_sqr()
        {
            col2
        } else {
            col1
        };
        normalize(pick)
    } else {
        // c = 0 with C != 0: C is nilpotent and the eigenspace is its kernel,
        // read off the larger row.
        let row1 = (cm.a11(), cm.a12());
        let row2 = (cm.a21(), cm.a22());
        let (r1, r2) =
            if row2.0.norm_sqr() + row2.1.norm_sqr() > row1.0.norm_sqr() + row1.1.norm_sqr() {
                row2
            } else {
                row1
            };
        normalize((-r2, r1))
    }
}

fn normalize((u1, u2): (Complex64, Complex64)) -> (Complex64, Complex64) {
    let n = (u1.norm_sqr() + u2.norm_sqr()).sqrt();
    (u1 / n, u2 / n)
}

// ── Factorization through the sphere ────────────────────────────────────────

/// The factorization of the range map of the normal form `[[c, 2b], [0, -c]]`
/// through the unit sphere: a diagonal scaling `F` after a rotation `R`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FactorDecomposition {
    f: [f64; 3],
    r: [[f64; 3]; 3],
}

impl FactorDecomposition {
    /// Diagonal of the scaling `F = diag(sqrt(b^2 + c^2), b, 0)`.
    pub fn f(&self) -> [f64; 3] {
        self.f
    }

    /// The rotation matrix `R`, row-major.
    pub fn r(&self) -> [[f64; 3]; 3] {
        self.r
    }

    /// Applies `F R` to a sphere point. The first two components are the
    /// real and imaginary part of the range point `<T x, x>` for any unit
    /// `x` over the sphere point; the third is identically zero.
    pub fn apply(&self, s: &SphereVector) -> [f64; 3] {
        let sv = s.as_array();
        let mut out = [0.0; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = 0.0;
            for (j, v) in sv.iter().enumerate() {
                acc += self.r[i][j] * v;
            }
            *slot = self.f[i] * acc;
        }
        out
    }
}

/// Builds the factorization `w = F R s` of the range map of
/// `[[c, 2b], [0, -c]]` over the Hopf sphere coordinates `s`.
///
/// `F = diag(sqrt(b^2 + c^2), b, 0)` and `R` rotates the `s1 s3`-plane by the
/// angle with cosine `b / sqrt(b^2 + c^2)`; when `b = c = 0` the scaling is
/// zero and `R` is fixed to the identity by convention.
pub fn factor_decomposition(b: f64, c: f64) -> FactorDecomposition {
    assert!(
        b.is_finite() && c.is_finite() && b >= 0.0 && c >= 0.0,
        "normal-form parameters must be finite and nonnegative"
    );
    let rho = b.hypot(c);
    let f = [rho, b, 0.0];
    let r = if rho == 0.0 {
        [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]
    } else {
        let (cos, sin) = (b / rho, c / rho);
        [[cos, 0.0, -sin], [0.0, 1.0, 0.0], [sin, 0.0, cos]]
    };
    FactorDecomposition { f, r }
}

/// Evaluates the factored range map of `A` at the unit vector `x`: transports
/// `x` to the canonical basis, pushes it through the Hopf map and `F R`, and
/// maps the resulting plane point back. Equals `rayleigh` up to roundoff and
/// exists to make that identity directly checkable.
pub fn factored_range_point(a: &Matrix2C, x: &UnitVector2) -> Complex64 {
    let cf = canonicalize(a);
    let u = cf.transform().unitary();
    // First column of U* is conj of U's first column, etc.
    let uh = u.adjoint();
    let w1 = uh.a11() * x.z1() + uh.a12() * x.z2();
    let w2 = uh.a21() * x.z1() + uh.a22() * x.z2();
    let xc = UnitVector2::new(w1, w2).expect("unitary image of a unit vector is unit");
    let fd = factor_decomposition(cf.b(), cf.c());
    let w = fd.apply(&hopf_map(&xc));
    cf.transform().map_back(Complex64::new(w[0], w[1]))
}

// ── Tests ───────────────────────────────────────────────────────────────────

//! Seeded Monte-Carlo verification of the computed range.
//!
//! Unit vectors are drawn uniformly from the sphere of C^2 (four standard
//! normals, normalized) with a ChaCha8 stream, whose output is specified by
//! the cipher and therefore reproducible across platforms and releases for a
//! given seed. [`verify_inclusion`] pushes the samples through the Rayleigh
//! quotient and measures two one-sided errors against the closed-form shape:
//! how far any sample escapes it, and how far the samples stay from its
//! boundary.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::algebra::{Complex64, Matrix2C, UnitVector2};
use crate::range::{numerical_range, RangeShape, ShapeKind};
use crate::Error;

/// Number of angular sectors used when measuring boundary coverage.
const BINS: usize = 256;

/// Outcome of [`verify_inclusion`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleReport {
    n_samples: usize,
    max_violation: f64,
    boundary_gap: f64,
    seed: u64,
}

impl SampleReport {
    pub fn n_samples(&self) -> usize {
        self.n_samples
    }

    /// Largest amount by which any sampled range point escapes the shape,
    /// measured by the focal-sum excess; 0 when every sample is inside.
    pub fn max_violation(&self) -> f64 {
        self.max_violation
    }

    /// How far the sample cloud stays from the boundary: the largest
    /// shortfall between the boundary and the outermost sample, over angular
    /// sectors (or along the segment for degenerate shapes).
    pub fn boundary_gap(&self) -> f64 {
        self.boundary_gap
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }
}

/// Draws `n` unit vectors uniformly from the sphere of C^2.
///
/// Each vector consumes four standard normal deviates, in the order
/// `Re z1, Im z1, Re z2, Im z2`, which are then normalized; an all-zero draw
/// (possible only in principle) is redrawn. Identical `(n, seed)` always
/// yields the identical sequence.
pub fn sample_unit_vectors(n: usize, seed: u64) -> Vec<UnitVector2> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| draw_unit(&mut rng)).collect()
}

fn draw_unit(rng: &mut ChaCha8Rng) -> UnitVector2 {
    loop {
        let g: [f64; 4] = [
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
            StandardNormal.sample(rng),
        ];
        let norm_sqr: f64 = g.iter().map(|x| x * x).sum();
        if norm_sqr == 0.0 {
            continue;
        }
        let inv = 1.0 / norm_sqr.sqrt();
        let z1 = Complex64::new(g[0] * inv, g[1] * inv);
        let z2 = Complex64::new(g[2] * inv, g[3] * inv);
        return UnitVector2::new(z1, z2).expect("normalized draw is a unit vector");
    }
}

/// Draws `n` numerical-range points `<Ax, x>` for uniformly random unit `x`.
pub fn sample_range(a: &Matrix2C, n: usize, seed: u64) -> Vec<Complex64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| a.rayleigh(&draw_unit(&mut rng))).collect()
}

/// Samples the range of `a` and compares the cloud against the closed-form
/// shape. Returns `Error::EmptySample` when `n` is zero.
///
/// `max_violation` is the largest focal-sum excess over the major axis,
/// clamped at zero. `boundary_gap` is the largest distance by which the
/// outermost samples fail to reach the boundary: per angular sector around
/// the center for disks and ellipses, as the covering radius along the
/// segment plus the worst transverse scatter for segments, and as the
/// largest distance from the center for points.
pub fn verify_inclusion(a: &Matrix2C, n: usize, seed: u64) -> Result<SampleReport, Error> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let shape = numerical_range(a);
    let samples = sample_range(a, n, seed);

    let (f1, f2) = shape.foci();
    let reach = 2.0 * shape.semi_major();
    let mut max_violation = 0.0f64;
    for z in &samples {
        let excess = (z - f1).norm() + (z - f2).norm() - reach;
        max_violation = max_violation.max(excess);
    }

    let boundary_gap = match shape.kind() {
        ShapeKind::Point => samples
            .iter()
            .map(|z| (z - shape.center()).norm())
            .fold(0.0, f64::max),
        ShapeKind::Segment => segment_gap(&shape, &samples),
        ShapeKind::Disk | ShapeKind::Ellipse => angular_gap(&shape, &samples),
    };

    Ok(SampleReport {
        n_samples: n,
        max_violation,
        boundary_gap,
        seed,
    })
}

/// Largest shortfall between the boundary and the outermost sample of each
/// nonempty angular sector; sub-boundary reach counts, overshoot does not.
fn angular_gap(shape: &RangeShape, samples: &[Complex64]) -> f64 {
    // Farthest sample per sector, remembered with its exact direction.
    let mut farthest: Vec<Option<(f64, f64)>> = vec![None; BINS];
    for z in samples {
        let d = z - shape.center();
        let rho = d.norm();
        let psi = d.arg();
        let k = sector_of(psi);
        if farthest[k].is_none_or(|(best, _)| rho > best) {
            farthest[k] = Some((rho, psi));
        }
    }
    let mut gap = 0.0f64;
    for entry in farthest.into_iter().flatten() {
        let (rho, psi) = entry;
        gap = gap.max((shape.boundary_radius(psi) - rho).max(0.0));
    }
    gap
}

fn sector_of(psi: f64) -> usize {
    let frac = (psi + std::f64::consts::PI) / (2.0 * std::f64::consts::PI);
    ((frac * BINS as f64) as usize).min(BINS - 1)
}

/// Boundary gap for a segment shape: the worst transverse scatter combined
/// with the covering radius of the projected samples, probed at the midpoint
/// of each of [`BINS`] equal subdivisions and at both endpoints.
fn segment_gap(shape: &RangeShape, samples: &[Complex64]) -> f64 {
    let axis = Complex64::from_polar(1.0, shape.orientation());
    let half = shape.semi_major();

    let mut along: Vec<f64> = Vec::with_capacity(samples.len());
    let mut transverse = 0.0f64;
    for z in samples {
        let d = (z - shape.center()) * axis.conj();
        along.push(d.re);
        transverse = transverse.max(d.im.abs());
    }
    along.sort_unstable_by(f64::total_cmp);

    let step = 2.0 * half / BINS as f64;
    let probes = (0..BINS)
        .map(|k| -half + (k as f64 + 0.5) * step)
        .chain([-half, half]);
    let mut covering = 0.0f64;
    for p in probes {
        let i = along.partition_point(|&u| u < p);
        let mut nearest = f64::INFINITY;
        if i < along.len() {
            nearest = nearest.min((along[i] - p).abs());
        }
        if i > 0 {
            nearest = nearest.min((along[i - 1] - p).abs());
        }
        covering = covering.max(nearest);
    }
    transverse.max(covering)
}

/// Convex hull of a planar point set by Andrew's monotone chain.
///
/// Vertices come back in counterclockwise order with collinear and interior
/// points dropped; inputs of at most two points are returned unchanged.
pub fn convex_hull_2d(points: &[Complex64]) -> Vec<Complex64> {
    if points.len() <= 2 {
        return points.to_vec();
    }
    let mut pts = points.to_vec();
    pts.sort_unstable_by(|p, q| p.re.total_cmp(&q.re).then(p.im.total_cmp(&q.im)));
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }

    fn turns_left(o: Complex64, a: Complex64, b: Complex64) -> bool {
        (a.re - o.re) * (b.im - o.im) - (a.im - o.im) * (b.re - o.re) > 0.0
    }

    let mut hull: Vec<Complex64> = Vec::with_capacity(pts.len() + 1);
    // Lower hull over the sweep, then upper hull over the reversed sweep;
    // each pass drops its final point, which reappears as the next start.
    for pass in 0..2 {
        let base = hull.len();
        let sweep: Vec<Complex64> = if pass == 0 {
            pts.clone()
        } else {
            pts.iter().rev().copied().collect()
        };
        for p in sweep {
            while hull.len() >= base + 2
                && !turns_left(hull[hull.len() - 2], hull[hull.len() - 1], p)
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

// ── Tests ───────────────────────────────────────────────────────────────────

//! Output assembly: 17-significant-digit numbers, JSON documents, CSV tables.
//!
//! Numbers are printed as `{:.16e}` (one mantissa digit plus sixteen after
//! the point), which is enough for any f64 to round-trip exactly; negative
//! zero is normalized to zero so equal values always print identically. JSON
//! documents carry `"schema": 1` and are assembled with fixed key order.

use numrange::{Complex64, RangeShape, SampleReport, ShapeKind};

/// Formats with 17 significant digits, mapping -0 to 0.
pub fn fmt_g17(x: f64) -> String {
    let x = if x == 0.0 { 0.0 } else { x };
    format!("{x:.16e}")
}

fn complex_json(z: Complex64) -> String {
    format!("{{\"re\":{},\"im\":{}}}", fmt_g17(z.re), fmt_g17(z.im))
}

fn kind_name(kind: ShapeKind) -> &'static str {
    match kind {
        ShapeKind::Point => "point",
        ShapeKind::Segment => "segment",
        ShapeKind::Disk => "disk",
        ShapeKind::Ellipse => "ellipse",
    }
}

pub fn range_json(shape: &RangeShape) -> String {
    let (f1, f2) = shape.foci();
    format!(
        "{{\"schema\":1,\"kind\":\"{}\",\"center\":{},\"foci\":[{},{}],\"semi_major\":{},\"semi_minor\":{},\"orientation\":{}}}",
        kind_name(shape.kind()),
        complex_json(shape.center()),
        complex_json(f1),
        complex_json(f2),
        fmt_g17(shape.semi_major()),
        fmt_g17(shape.semi_minor()),
        fmt_g17(shape.orientation()),
    )
}

pub fn range_csv(shape: &RangeShape) -> String {
    let (f1, f2) = shape.foci();
    let mut out = String::from(
        "kind,center_re,center_im,focus1_re,focus1_im,focus2_re,focus2_im,semi_major,semi_minor,orientation\n",
    );
    out.push_str(&format!(
        "{},{},{},{},{},{},{},{},{},{}\n",
        kind_name(shape.kind()),
        fmt_g17(shape.center().re),
        fmt_g17(shape.center().im),
        fmt_g17(f1.re),
        fmt_g17(f1.im),
        fmt_g17(f2.re),
        fmt_g17(f2.im),
        fmt_g17(shape.semi_major()),
        fmt_g17(shape.semi_minor()),
        fmt_g17(shape.orientation()),
    ));
    out
}

fn boundary_params(n: usize) -> impl Iterator<Item = f64> {
    let step = 2.0 * std::f64::consts::PI / n as f64;
    (0..n).map(move |k| k as f64 * step)
}

pub fn boundary_json(shape: &RangeShape, n: usize) -> String {
    let mut out = format!("{{\"schema\":1,\"n\":{n},\"points\":[");
    for (k, t) in boundary_params(n).enumerate() {
        if k > 0 {
            out.push(',');
        }
        let z = shape.boundary_point(t);
        out.push_str(&format!(
            "{{\"t\":{},\"re\":{},\"im\":{}}}",
            fmt_g17(t),
            fmt_g17(z.re),
            fmt_g17(z.im)
        ));
    }
    out.push_str("]}");
    out
}

pub fn boundary_csv(shape: &RangeShape, n: usize) -> String {
    let mut out = String::from("t,re,im\n");
    for t in boundary_params(n) {
        let z = shape.boundary_point(t);
        out.push_str(&format!(
            "{},{},{}\n",
            fmt_g17(t),
            fmt_g17(z.re),
            fmt_g17(z.im)
        ));
    }
    out
}

pub fn sample_json(cloud: &[Complex64], seed: u64) -> String {
    let mut out = format!(
        "{{\"schema\":1,\"seed\":{seed},\"n\":{},\"points\":[",
        cloud.len()
    );
    for (k, z) in cloud.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push_str(&complex_json(*z));
    }
    out.push_str("]}");
    out
}

pub fn sample_csv(cloud: &[Complex64], seed: u64) -> String {
    let mut out = format!("# seed={seed}\nre,im\n");
    for z in cloud {
        out.push_str(&format!("{},{}\n", fmt_g17(z.re), fmt_g17(z.im)));
    }
    out
}

#[allow(clippy::too_many_arguments)]
pub fn verify_json(
    report: &SampleReport,
    delta_major: f64,
    delta_minor: f64,
    inclusion_tol: f64,
    consistency_tol: f64,
    pass: bool,
) -> String {
    format!(
        "{{\"schema\":1,\"n_samples\":{},\"seed\":{},\"max_violation\":{},\"boundary_gap\":{},\"axes_delta_major\":{},\"axes_delta_minor\":{},\"inclusion_tol\":{},\"consistency_tol\":{},\"pass\":{}}}",
        report.n_samples(),
        report.seed(),
        fmt_g17(report.max_violation()),
        fmt_g17(report.boundary_gap()),
        fmt_g17(delta_major),
        fmt_g17(delta_minor),
        fmt_g17(inclusion_tol),
        fmt_g17(consistency_tol),
        pass,
    )
}

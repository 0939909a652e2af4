//! Matrix and point parsing with entry-level diagnostics.
//!
//! Two input forms are accepted for matrices: a flat list of eight
//! comma-separated numbers in row-major (re, im) order, and a JSON array of
//! two rows of two `{"re": .., "im": ..}` objects. The form is chosen by the
//! first non-space character.

use numrange::{Complex64, Matrix2C};

/// Parses either matrix form; errors name the offending token or entry.
pub fn parse_matrix(text: &str) -> Result<Matrix2C, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("empty matrix input".into());
    }
    if trimmed.starts_with('[') {
        parse_json(trimmed)
    } else {
        parse_flat(trimmed)
    }
}

fn parse_flat(text: &str) -> Result<Matrix2C, String> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    if tokens.len() != 8 {
        return Err(format!(
            "expected 8 comma-separated numbers (re11,im11,re12,im12,re21,im21,re22,im22), found {}",
            tokens.len()
        ));
    }
    let mut values = [0.0f64; 8];
    for (i, token) in tokens.iter().enumerate() {
        values[i] = parse_value(token, || format!("entry {}", i + 1))?;
    }
    Ok(build(values))
}

fn parse_json(text: &str) -> Result<Matrix2C, String> {
    let root: serde_json::Value =
        serde_json::from_str(text).map_err(|e| format!("invalid JSON: {e}"))?;
    let rows = root
        .as_array()
        .ok_or("matrix JSON must be an array of two rows")?;
    if rows.len() != 2 {
        return Err(format!(
            "matrix JSON must have exactly 2 rows, found {}",
            rows.len()
        ));
    }
    let mut values = [0.0f64; 8];
    for (i, row) in rows.iter().enumerate() {
        let cells = row
            .as_array()
            .ok_or_else(|| format!("row {} must be an array of two entries", i + 1))?;
        if cells.len() != 2 {
            return Err(format!(
                "row {} must have exactly 2 entries, found {}",
                i + 1,
                cells.len()
            ));
        }
        for (j, cell) in cells.iter().enumerate() {
            for (k, part) in ["re", "im"].into_iter().enumerate() {
                let raw = cell.get(part).ok_or_else(|| {
                    format!(
                        "entry [{}][{}] is missing the \"{part}\" field",
                        i + 1,
                        j + 1
                    )
                })?;
                let v = raw.as_f64().ok_or_else(|| {
                    format!(
                        "entry [{}][{}] field \"{part}\" is not a number (got {raw})",
                        i + 1,
                        j + 1
                    )
                })?;
                if !v.is_finite() {
                    return Err(format!(
                        "entry [{}][{}] field \"{part}\" is not finite",
                        i + 1,
                        j + 1
                    ));
                }
                values[4 * i + 2 * j + k] = v;
            }
        }
    }
    Ok(build(values))
}

fn build(v: [f64; 8]) -> Matrix2C {
    Matrix2C::new(
        Complex64::new(v[0], v[1]),
        Complex64::new(v[2], v[3]),
        Complex64::new(v[4], v[5]),
        Complex64::new(v[6], v[7]),
    )
}

/// Parses a plane point given as `re,im`.
pub fn parse_point(text: &str) -> Result<Complex64, String> {
    let tokens: Vec<&str> = text.split(',').map(str::trim).collect();
    if tokens.len() != 2 {
        return Err(format!(
            "expected a point as re,im, found {} values",
            tokens.len()
        ));
    }
    let re = parse_value(tokens[0], || "point re".to_string())?;
    let im = parse_value(tokens[1], || "point im".to_string())?;
    Ok(Complex64::new(re, im))
}

fn parse_value(token: &str, what: impl Fn() -> String) -> Result<f64, String> {
    let v: f64 = token
        .parse()
        .map_err(|_| format!("{} ({token:?}) is not a number", what()))?;
    if !v.is_finite() {
        return Err(format!("{} ({token:?}) is not finite", what()));
    }
    Ok(v)
}

//! Point clouds (`x,y,…` per line) and strict lower-triangle distance files.

use std::fmt::Write;

use bifilt_core::FiniteMetric;

use super::{fmt_real, numbered, parse_real, parse_usize, ParseError};

/// Strips a `#` comment and surrounding whitespace.
fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

/// One point per line, comma-separated decimals; `#` starts a comment.
pub fn parse_points(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    let mut points: Vec<Vec<f64>> = Vec::new();
    for (line_no, raw) in numbered(text) {
        let body = content(raw);
        if body.is_empty() {
            continue;
        }
        let offset = raw.len() - raw.trim_start().len();
        let mut column = offset + 1;
        let mut coords = Vec::new();
        for part in body.split(',') {
            let lead = part.len() - part.trim_start().len();
            coords.push(parse_real(part, line_no, column + lead)?);
            column += part.len() + 1;
        }
        if let Some(first) = points.first() {
            if first.len() != coords.len() {
                return Err(ParseError::new(
                    line_no,
                    1,
                    format!(
                        "expected {} coordinates, found {}",
                        first.len(),
                        coords.len()
                    ),
                ));
            }
        }
        points.push(coords);
    }
    if points.is_empty() {
        return Err(ParseError::new(1, 1, "no points in input"));
    }
    Ok(points)
}

pub fn write_points(points: &[Vec<f64>]) -> String {
    let mut out = String::new();
    for p in points {
        let cells: Vec<String> = p.iter().map(|&v| fmt_real(v)).collect();
        writeln!(out, "{}", cells.join(",")).expect("writing to a String");
    }
    out
}

/// First line `n`, then `n(n−1)/2` lines `d[1][0], d[2][0], d[2][1], …`.
pub fn parse_distance_matrix(
    text: &str,
    allow_semimetric: bool,
) -> Result<FiniteMetric, ParseError> {
    let mut lines = numbered(text).filter(|(_, l)| !content(l).is_empty());
    let (first_no, first) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, 1, "empty distance file"))?;
    let n = parse_usize(content(first), first_no, 1)?;
    if n == 0 {
        return Err(ParseError::new(
            first_no,
            1,
            "a metric needs at least one point",
        ));
    }
    let expected = n * (n - 1) / 2;
    let mut values = Vec::with_capacity(expected);
    let mut last_no = first_no;
    for (line_no, raw) in lines {
        last_no = line_no;
        if values.len() == expected {
            return Err(ParseError::new(
                line_no,
                1,
                format!("more than {expected} entries"),
            ));
        }
        let v = parse_real(content(raw), line_no, 1)?;
        if v < 0.0 {
            return Err(ParseError::new(line_no, 1, "distances must be nonnegative"));
        }
        values.push(v);
    }
    if values.len() != expected {
        return Err(ParseError::new(
            last_no + 1,
            1,
            format!("expected {expected} entries, found {}", values.len()),
        ));
    }
    FiniteMetric::from_lower_triangle(n, &values, allow_semimetric)
        .map_err(|e| ParseError::new(first_no, 1, e.to_string()))
}

pub fn write_distance_matrix(m: &FiniteMetric) -> String {
    let mut out = format!("{}\n", m.len());
    for v in m.lower_triangle() {
        writeln!(out, "{}", fmt_real(v)).expect("writing to a String");
    }
    out
}

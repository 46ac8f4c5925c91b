//! `BIFIL v1`: a 1-critical bifiltration as a cell list with boundaries.
//!
//! ```text
//! BIFIL v1
//! grades_scale: 0 1 2
//! depth_max: 2
//! C 0 dim=0 k=1 t=0 bd=
//! C 2 dim=1 k=1 t=1 bd=0,1
//! ```
//!
//! A 0-cell is vertex number `j` if it is the `j`-th 0-cell in the file.

use std::fmt::Write;

use bifilt_core::bifiltration::{Bifiltration1Critical, BifiltrationCell};
use bifilt_core::Simplex;

use super::{
    field, fmt_real, numbered, parse_id_list, parse_real, parse_usize, tokens, Joined, ParseError,
};

const MAGIC: &str = "BIFIL v1";

pub fn write_bifil(b: &Bifiltration1Critical) -> String {
    let mut out = String::new();
    let grades: Vec<String> = b.grades().iter().map(|&g| fmt_real(g)).collect();
    writeln!(out, "{MAGIC}").unwrap();
    writeln!(out, "grades_scale: {}", grades.join(" ")).unwrap();
    writeln!(out, "depth_max: {}", b.depth_max()).unwrap();
    for (id, (cell, bd)) in b.cells().iter().zip(b.boundary_ids()).enumerate() {
        writeln!(
            out,
            "C {id} dim={} k={} t={} bd={}",
            cell.simplex.len() - 1,
            cell.depth,
            cell.t,
            Joined(&bd)
        )
        .unwrap();
    }
    out
}

pub fn parse_bifil(text: &str) -> Result<Bifiltration1Critical, ParseError> {
    let mut lines = numbered(text);
    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((no, _)) => return Err(ParseError::new(no, 1, format!("expected `{MAGIC}`"))),
        None => return Err(ParseError::new(1, 1, "empty input")),
    }
    let (no, g) = lines
        .next()
        .ok_or_else(|| ParseError::new(2, 1, "missing `grades_scale:` header"))?;
    let g = g
        .strip_prefix("grades_scale: ")
        .ok_or_else(|| ParseError::new(no, 1, "expected `grades_scale: …`"))?;
    let mut grades = Vec::new();
    for (col, tok) in tokens(g) {
        grades.push(parse_real(tok, no, 14 + col)?);
    }
    let (no, dm) = lines
        .next()
        .ok_or_else(|| ParseError::new(3, 1, "missing `depth_max:` header"))?;
    let dm = dm
        .strip_prefix("depth_max: ")
        .ok_or_else(|| ParseError::new(no, 1, "expected `depth_max: k`"))?;
    let depth_max = parse_usize(dm, no, 12)?;

    let mut cells: Vec<BifiltrationCell> = Vec::new();
    let mut vertex_count = 0u32;
    let mut last_no = no;
    for (no, line) in lines {
        last_no = no;
        let toks = tokens(line);
        if toks.len() != 6 || toks[0].1 != "C" {
            return Err(ParseError::new(no, 1, "expected `C <id> dim= k= t= bd=`"));
        }
        let (c, id) = toks[1];
        if parse_usize(id, no, c)? != cells.len() {
            return Err(ParseError::new(
                no,
                c,
                format!("expected cell id {}", cells.len()),
            ));
        }
        let (c, d) = toks[2];
        let dim = parse_usize(field(d, "dim", no, c)?, no, c + 4)?;
        let (c, k) = toks[3];
        let depth = parse_usize(field(k, "k", no, c)?, no, c + 2)?;
        if depth == 0 || depth > depth_max {
            return Err(ParseError::new(
                no,
                c,
                format!("depth must lie in 1..={depth_max}"),
            ));
        }
        let (c, t) = toks[4];
        let t = parse_usize(field(t, "t", no, c)?, no, c + 2)?;
        if t >= grades.len() {
            return Err(ParseError::new(no, c, "scale index out of range"));
        }
        let (c, bd) = toks[5];
        let bd = parse_id_list(field(bd, "bd", no, c)?, no, c + 3)?;
        let simplex = if dim == 0 {
            if !bd.is_empty() {
                return Err(ParseError::new(no, c, "a vertex has an empty boundary"));
            }
            vertex_count += 1;
            Simplex::from_sorted(vec![vertex_count - 1])
        } else {
            boundary_simplex(&cells, &bd, dim).ok_or_else(|| {
                ParseError::new(no, c, "boundary is not the facet set of a simplex")
            })?
        };
        cells.push(BifiltrationCell { simplex, depth, t });
    }
    let b = Bifiltration1Critical::new(grades, None, cells)
        .map_err(|e| ParseError::new(last_no, 1, e.to_string()))?;
    if b.depth_max() != depth_max && !b.cells().is_empty() {
        return Err(ParseError::new(
            3,
            12,
            format!("depth_max is {}", b.depth_max()),
        ));
    }
    Ok(b)
}

/// The simplex whose facets are exactly `bd`, if any.
fn boundary_simplex(cells: &[BifiltrationCell], bd: &[usize], dim: usize) -> Option<Simplex> {
    if bd.len() != dim + 1 || bd.windows(2).any(|w| w[0] >= w[1]) {
        return None;
    }
    let facets: Vec<&Simplex> = bd
        .iter()
        .map(|&i| cells.get(i).map(|c| &c.simplex))
        .collect::<Option<_>>()?;
    if facets.iter().any(|f| f.len() != dim) {
        return None;
    }
    let mut union = facets[0].clone();
    for f in &facets[1..] {
        union = union.union(f);
    }
    if union.len() != dim + 1 {
        return None;
    }
    let mut expected: Vec<Simplex> = union.facets().collect();
    expected.sort();
    let mut got: Vec<Simplex> = facets.into_iter().cloned().collect();
    got.sort();
    (expected == got).then_some(union)
}

//! `SEMIFIL v1`: a nerve semifiltration as vertex timelines, optionally
//! followed by its enumerated generators.
//!
//! ```text
//! SEMIFIL v1
//! grades: 0 1 2
//! scale_tag: none
//! max_dim: 2
//! V 0 b=0 d=2 merge=3 simplex=0
//! G depth=1 scale=0 members=0
//! ```

use std::fmt::Write;

use bifilt_core::{NerveCellGenerator, Semifiltration, Simplex, SimplexTimeline};

use super::{
    field, fmt_real, numbered, parse_id_list, parse_real, parse_usize, tokens, Joined, ParseError,
};

const MAGIC: &str = "SEMIFIL v1";

#[derive(Clone, Debug, PartialEq)]
pub struct ParsedSemifil {
    pub semifiltration: Semifiltration,
    /// Present iff the file had a generator section.
    pub generators: Option<Vec<NerveCellGenerator>>,
}

pub fn write_semifil(s: &Semifiltration, generators: Option<&[NerveCellGenerator]>) -> String {
    let mut out = String::new();
    let grades: Vec<String> = s.grades().iter().map(|&g| fmt_real(g)).collect();
    let w = &mut out;
    writeln!(w, "{MAGIC}").unwrap();
    writeln!(w, "grades: {}", grades.join(" ")).unwrap();
    writeln!(w, "scale_tag: {}", s.scale_tag().unwrap_or("none")).unwrap();
    writeln!(w, "max_dim: {}", s.max_dim()).unwrap();
    for (id, v) in s.vertices().iter().enumerate() {
        let d = v.d.map_or("inf".to_string(), |d| d.to_string());
        let merge = v.merge_next.map_or("none".to_string(), |m| m.to_string());
        writeln!(
            w,
            "V {id} b={} d={d} merge={merge} simplex={}",
            v.b,
            Joined(v.simplex.vertices())
        )
        .unwrap();
    }
    for g in generators.unwrap_or(&[]) {
        writeln!(
            w,
            "G depth={} scale={} members={}",
            g.depth_grade,
            g.scale_grade,
            Joined(&g.members)
        )
        .unwrap();
    }
    out
}

fn header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    key: &str,
    last: usize,
) -> Result<(usize, &'a str), ParseError> {
    let (no, line) = lines
        .next()
        .ok_or_else(|| ParseError::new(last + 1, 1, format!("missing `{key}:` header")))?;
    let rest = line
        .strip_prefix(key)
        .and_then(|r| r.strip_prefix(": "))
        .ok_or_else(|| ParseError::new(no, 1, format!("expected `{key}: …`")))?;
    Ok((no, rest))
}

pub fn parse_semifil(text: &str) -> Result<ParsedSemifil, ParseError> {
    let mut lines = numbered(text);
    match lines.next() {
        Some((_, MAGIC)) => {}
        Some((no, _)) => return Err(ParseError::new(no, 1, format!("expected `{MAGIC}`"))),
        None => return Err(ParseError::new(1, 1, "empty input")),
    }
    let (no, g) = header(&mut lines, "grades", 1)?;
    let prefix = "grades: ".len();
    let mut grades = Vec::new();
    for (col, tok) in tokens(g) {
        grades.push(parse_real(tok, no, prefix + col)?);
    }
    let (no, tag) = header(&mut lines, "scale_tag", no)?;
    if tag.is_empty() || tag.contains(char::is_whitespace) {
        return Err(ParseError::new(no, 12, "scale_tag must be a single token"));
    }
    let scale_tag = (tag != "none").then(|| tag.to_string());
    let (no, md) = header(&mut lines, "max_dim", no)?;
    let max_dim = parse_usize(md, no, 10)?;

    let mut vertices = Vec::new();
    let mut generators: Option<Vec<NerveCellGenerator>> = None;
    let mut last_no = no;
    for (no, line) in lines {
        last_no = no;
        let toks = tokens(line);
        match toks.first().map(|t| t.1) {
            Some("V") if generators.is_none() => {
                vertices.push(parse_vertex(&toks, no, vertices.len())?)
            }
            Some("G") => generators
                .get_or_insert_with(Vec::new)
                .push(parse_generator(&toks, no)?),
            _ => return Err(ParseError::new(no, 1, "expected a `V` or `G` record")),
        }
    }
    let semifiltration = Semifiltration::from_parts(grades, scale_tag, max_dim, vertices)
        .map_err(|e| ParseError::new(last_no, 1, e.to_string()))?;
    Ok(ParsedSemifil {
        semifiltration,
        generators,
    })
}

fn expect_len(toks: &[(usize, &str)], n: usize, no: usize) -> Result<(), ParseError> {
    if toks.len() == n {
        Ok(())
    } else {
        Err(ParseError::new(
            no,
            1,
            format!("expected {n} fields, found {}", toks.len()),
        ))
    }
}

fn parse_vertex(
    toks: &[(usize, &str)],
    no: usize,
    expected_id: usize,
) -> Result<SimplexTimeline, ParseError> {
    expect_len(toks, 6, no)?;
    let (c, id) = toks[1];
    if parse_usize(id, no, c)? != expected_id {
        return Err(ParseError::new(
            no,
            c,
            format!("expected vertex id {expected_id}"),
        ));
    }
    let (c, b) = toks[2];
    let b = parse_usize(field(b, "b", no, c)?, no, c + 2)?;
    let (c, d) = toks[3];
    let d = match field(d, "d", no, c)? {
        "inf" => None,
        v => Some(parse_usize(v, no, c + 2)?),
    };
    let (c, m) = toks[4];
    let merge_next = match field(m, "merge", no, c)? {
        "none" => None,
        v => Some(parse_usize(v, no, c + 6)?),
    };
    let (c, s) = toks[5];
    let ids = parse_id_list(field(s, "simplex", no, c)?, no, c + 8)?;
    let verts: Vec<u32> = ids
        .iter()
        .map(|&v| u32::try_from(v).map_err(|_| ParseError::new(no, c, "vertex id too large")))
        .collect::<Result<_, _>>()?;
    if verts.is_empty() || verts.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ParseError::new(
            no,
            c,
            "simplex must be nonempty and strictly increasing",
        ));
    }
    Ok(SimplexTimeline {
        simplex: Simplex::from_sorted(verts),
        b,
        d,
        merge_next,
    })
}

fn parse_generator(toks: &[(usize, &str)], no: usize) -> Result<NerveCellGenerator, ParseError> {
    expect_len(toks, 4, no)?;
    let (c, d) = toks[1];
    let depth_grade = parse_usize(field(d, "depth", no, c)?, no, c + 6)?;
    let (c, s) = toks[2];
    let scale_grade = parse_usize(field(s, "scale", no, c)?, no, c + 6)?;
    let (c, m) = toks[3];
    let members = parse_id_list(field(m, "members", no, c)?, no, c + 8)?;
    if members.is_empty() || members.windows(2).any(|w| w[0] >= w[1]) {
        return Err(ParseError::new(
            no,
            c,
            "members must be nonempty and strictly increasing",
        ));
    }
    Ok(NerveCellGenerator {
        members,
        depth_grade,
        scale_grade,
    })
}

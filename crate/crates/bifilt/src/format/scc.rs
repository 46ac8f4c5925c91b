//! Export in the `scc2020` chain-complex format.
//!
//! Both parameters grow upward in `scc2020`, so the depth coordinate is
//! written as `−k`; a cell of depth `k` born at grade `t` sits at
//! `(−k, r_t)`.

use std::fmt::Write;

use bifilt_core::bifiltration::Bifiltration1Critical;

use super::fmt_real;

pub fn write_scc(b: &Bifiltration1Critical) -> String {
    let cells = b.cells();
    let bd = b.boundary_ids();
    let top = cells.iter().map(|c| c.simplex.len() - 1).max().unwrap_or(0);
    // Position of each cell inside its dimension block.
    let mut index_in_dim = vec![0usize; cells.len()];
    let mut per_dim = vec![Vec::new(); top + 1];
    for (i, c) in cells.iter().enumerate() {
        let d = c.simplex.len() - 1;
        index_in_dim[i] = per_dim[d].len();
        per_dim[d].push(i);
    }
    let mut out = String::new();
    writeln!(out, "scc2020").unwrap();
    writeln!(out, "# axis k negated").unwrap();
    writeln!(out, "2").unwrap();
    let sizes: Vec<String> = per_dim.iter().rev().map(|v| v.len().to_string()).collect();
    writeln!(out, "{}", sizes.join(" ")).unwrap();
    for d in (0..=top).rev() {
        writeln!(out, "# dimension {d}").unwrap();
        for &i in &per_dim[d] {
            let c = &cells[i];
            let faces: Vec<String> = bd[i].iter().map(|&f| index_in_dim[f].to_string()).collect();
            let sep = if faces.is_empty() { "" } else { " " };
            writeln!(
                out,
                "{} {} ;{sep}{}",
                -(c.depth as i64),
                fmt_real(b.grades()[c.t]),
                faces.join(" ")
            )
            .unwrap();
        }
    }
    out
}

//! Brute-force subdivision filtration `𝒮(W)_k` and its bifiltered version.
//!
//! `𝒮(W)_k` is the subcomplex of the barycentric subdivision of `W` spanned
//! by flags `σ_1 ⊂ … ⊂ σ_m` with `dim σ_1 ≥ k − 1`. The construction is
//! exponential and only meant as ground truth for small inputs.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::filtration::CriticalFiltration;
use crate::simplex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// Default limit on the number of flags an oracle call may produce.
pub const DEFAULT_CELL_CAP: usize = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubdivisionOptions {
    /// Keep only flags of at most `max_dim + 1` simplices.
    pub max_dim: Option<usize>,
    pub cell_cap: usize,
}

impl Default for SubdivisionOptions {
    fn default() -> Self {
        SubdivisionOptions {
            max_dim: None,
            cell_cap: DEFAULT_CELL_CAP,
        }
    }
}

/// A subdivided complex. Vertex `i` is the barycenter of `labels[i]`;
/// labels are sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subdivision {
    pub labels: Vec<Simplex>,
    pub complex: SimplicialComplex,
}

impl Subdivision {
    /// Each cell as the sorted list of the simplices in its flag.
    pub fn labeled_cells(&self) -> BTreeSet<Vec<Simplex>> {
        self.complex
            .iter()
            .map(|cell| {
                let mut flag: Vec<Simplex> = cell
                    .vertices()
                    .iter()
                    .map(|&v| self.labels[v as usize].clone())
                    .collect();
                flag.sort();
                flag
            })
            .collect()
    }

    /// The flag of `cell` ordered by inclusion.
    pub fn flag(&self, cell: &Simplex) -> Vec<Simplex> {
        let mut chain: Vec<Simplex> = cell
            .vertices()
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect();
        chain.sort_by_key(Simplex::len);
        chain
    }

    pub fn vertex_of(&self, label: &Simplex) -> Option<u32> {
        self.labels.binary_search(label).ok().map(|i| i as u32)
    }
}

/// `𝒮(W)_k` for `k ≥ 1`.
pub fn subdivision_level(
    w: &SimplicialComplex,
    k: usize,
    opts: SubdivisionOptions,
) -> Result<Subdivision> {
    if k == 0 {
        return Err(Error::invalid("subdivision depth k must be at least 1"));
    }
    let labels: Vec<Simplex> = w.iter().filter(|s| s.len() >= k).cloned().collect();
    // cofaces[i]: ids of proper cofaces of labels[i].
    let cofaces: Vec<Vec<u32>> = labels
        .iter()
        .map(|s| {
            labels
                .iter()
                .enumerate()
                .filter(|(_, c)| c.len() > s.len() && s.is_face_of(c))
                .map(|(j, _)| j as u32)
                .collect()
        })
        .collect();
    let max_len = opts.max_dim.map_or(usize::MAX, |d| d + 1);
    let mut cells: BTreeSet<Simplex> = BTreeSet::new();
    let mut chain: Vec<u32> = Vec::new();
    for start in 0..labels.len() as u32 {
        chain.push(start);
        extend_flags(&cofaces, &mut chain, max_len, opts.cell_cap, &mut cells)?;
        chain.pop();
    }
    Ok(Subdivision {
        labels,
        complex: SimplicialComplex::from_closed_set(cells),
    })
}

fn extend_flags(
    cofaces: &[Vec<u32>],
    chain: &mut Vec<u32>,
    max_len: usize,
    cap: usize,
    cells: &mut BTreeSet<Simplex>,
) -> Result<()> {
    cells.insert(Simplex::new(chain.clone()));
    if cells.len() > cap {
        return Err(Error::CellCapExceeded { cap });
    }
    if chain.len() >= max_len {
        return Ok(());
    }
    let top = *chain.last().expect("chain is nonempty") as usize;
    for &next in &cofaces[top] {
        chain.push(next);
        extend_flags(cofaces, chain, max_len, cap, cells)?;
        chain.pop();
    }
    Ok(())
}

/// `𝒮(F_t)_k`, with `F_t` rebuilt from the maximal simplices alive at `t`.
pub fn subdivision_bifiltration_at(
    f: &CriticalFiltration,
    k: usize,
    t: usize,
    opts: SubdivisionOptions,
) -> Result<Subdivision> {
    let w = f.complex_at(t)?;
    subdivision_level(&w, k, opts)
}

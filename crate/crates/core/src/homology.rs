//! ℤ/2 simplicial homology by boundary-matrix column reduction.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::simplex::{Simplex, SimplicialComplex};
use crate::Result;

/// Sparse ℤ/2 boundary matrix `∂_i`: one sorted row list per `i`-simplex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrixZ2 {
    rows: usize,
    columns: Vec<Vec<u32>>,
}

impl BoundaryMatrixZ2 {
    /// `∂_i` of `complex`, rows and columns in lex order of the simplices.
    pub fn new(complex: &SimplicialComplex, i: usize) -> Self {
        let row_index: BTreeMap<&Simplex, u32> = complex
            .iter()
            .filter(|s| s.len() == i)
            .enumerate()
            .map(|(r, s)| (s, r as u32))
            .collect();
        let columns = complex
            .iter()
            .filter(|s| s.len() == i + 1)
            .map(|s| {
                if i == 0 {
                    return Vec::new();
                }
                let mut col: Vec<u32> = s.facets().map(|f| row_index[&f]).collect();
                col.sort_unstable();
                col
            })
            .collect();
        BoundaryMatrixZ2 {
            rows: row_index.len(),
            columns,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    /// Rank over ℤ/2 by standard left-to-right column reduction.
    pub fn rank(&self) -> usize {
        let mut pivot_owner: Vec<Option<usize>> = vec![None; self.rows];
        let mut reduced: Vec<Vec<u32>> = Vec::with_capacity(self.columns.len());
        let mut rank = 0;
        for col in &self.columns {
            let mut col = col.clone();
            while let Some(&low) = col.last() {
                match pivot_owner[low as usize] {
                    Some(owner) => col = symmetric_difference(&col, &reduced[owner]),
                    None => break,
                }
            }
            if let Some(&low) = col.last() {
                pivot_owner[low as usize] = Some(reduced.len());
                rank += 1;
            }
            reduced.push(col);
        }
        rank
    }

    /// True iff `self ∘ next = 0`, where `next` is the following boundary.
    pub fn composes_to_zero(&self, next: &BoundaryMatrixZ2) -> bool {
        next.columns.iter().all(|col| {
            let mut acc: Vec<u32> = Vec::new();
            for &j in col {
                acc = symmetric_difference(&acc, &self.columns[j as usize]);
            }
            acc.is_empty()
        })
    }
}

fn symmetric_difference(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// `β_0, …, β_{i_max}` of `complex` over ℤ/2.
///
/// Only simplices of dimension at most `i_max + 1` are read.
pub fn betti_numbers(complex: &SimplicialComplex, i_max: usize) -> Vec<usize> {
    let counts: Vec<usize> = (0..=i_max + 1)
        .map(|i| complex.iter().filter(|s| s.len() == i + 1).count())
        .collect();
    // ranks[i] = rank ∂_i, with ∂_0 = 0.
    let mut ranks = vec![0usize; i_max + 2];
    for (i, r) in ranks.iter_mut().enumerate().skip(1) {
        *r = BoundaryMatrixZ2::new(complex, i).rank();
    }
    (0..=i_max)
        .map(|i| counts[i] - ranks[i] - ranks[i + 1])
        .collect()
}

/// `β_i` of `complex` over ℤ/2.
pub fn betti(complex: &SimplicialComplex, i: usize) -> usize {
    betti_numbers(complex, i)[i]
}

/// Connected components of the 1-skeleton by union-find.
pub fn connected_components(complex: &SimplicialComplex) -> usize {
    let vertices: Vec<u32> = complex.vertices().collect();
    let index: BTreeMap<u32, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = vertices.len();
    for s in complex.iter().filter(|s| s.len() == 2) {
        let a = find(&mut parent, index[&s.vertices()[0]]);
        let b = find(&mut parent, index[&s.vertices()[1]]);
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}

/// Betti numbers on a rectangular grid of bigrades `(k, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiGrid {
    pub ks: Vec<usize>,
    pub ts: Vec<usize>,
    pub i_max: usize,
    /// `values[a][b][i] = β_i` at `(ks[a], ts[b])`.
    pub values: Vec<Vec<Vec<usize>>>,
}

impl BettiGrid {
    pub fn get(&self, k: usize, t: usize) -> Option<&[usize]> {
        let a = self.ks.iter().position(|&x| x == k)?;
        let b = self.ts.iter().position(|&x| x == t)?;
        Some(&self.values[a][b])
    }

    /// Bigrades where the two grids differ, with both Betti vectors.
    pub fn mismatches(&self, other: &BettiGrid) -> Vec<(usize, usize, Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for (a, &k) in self.ks.iter().enumerate() {
            for (b, &t) in self.ts.iter().enumerate() {
                let mine = &self.values[a][b];
                match other.get(k, t) {
                    Some(theirs) if theirs == mine.as_slice() => {}
                    Some(theirs) => out.push((k, t, mine.clone(), theirs.to_vec())),
                    None => out.push((k, t, mine.clone(), Vec::new())),
                }
            }
        }
        out
    }
}

/// Materializes each bigrade independently and records `β_0..=β_{i_max}`.
pub fn betti_grid(
    ks: &[usize],
    ts: &[usize],
    i_max: usize,
    mut materialize: impl FnMut(usize, usize) -> Result<SimplicialComplex>,
) -> Result<BettiGrid> {
    let mut values = Vec::with_capacity(ks.len());
    for &k in ks {
        let mut row = Vec::with_capacity(ts.len());
        for &t in ts {
            row.push(betti_numbers(&materialize(k, t)?, i_max));
        }
        values.push(row);
    }
    Ok(BettiGrid {
        ks: ks.to_vec(),
        ts: ts.to_vec(),
        i_max,
        values,
    })
}

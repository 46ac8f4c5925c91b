//! The nerve model of the subdivision bifiltration.
//!
//! At bigrade `(k, t)` the subdivision bifiltration is covered by the
//! complexes `𝒮(σ̄)_k` for `σ ∈ Σ_t`. Since `⋂ᵢ 𝒮(σ̄ᵢ)_k = 𝒮((⋂ᵢ σᵢ)‾)_k`, a
//! set `S ⊆ Σ_t` spans a nerve cell exactly when `|⋂S| ≥ k`. The nerve is
//! stored implicitly by the vertex timelines and materialized on demand.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::filtration::{CriticalFiltration, SimplexTimeline, SizeReport};
use crate::simplex::{sorted_intersection, Simplex, SimplicialComplex};
use crate::subdivision::DEFAULT_CELL_CAP;
use crate::{Error, Result};

/// Default nerve dimension cap.
pub const DEFAULT_MAX_DIM: usize = 2;

/// A set `S` of ever-maximal simplices that first spans a nerve cell at
/// scale `max b(σ)` and survives up to depth `|⋂S|`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct NerveCellGenerator {
    /// Nerve vertex ids, ascending.
    pub members: Vec<usize>,
    /// Largest depth `k` at which the cell exists, `dim(⋂S) + 1`.
    pub depth_grade: usize,
    /// Scale index `max b(σ)`.
    pub scale_grade: usize,
}

impl NerveCellGenerator {
    pub fn dim(&self) -> usize {
        self.members.len() - 1
    }
}

/// Vertices inserted and merged between grades `t − 1` and `t`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct StepRecord {
    /// Vertices born at `t`, ascending.
    pub inserted: Vec<usize>,
    /// `(dying vertex, merge target)` for vertices with `d = t`, ascending.
    pub merged: Vec<(usize, usize)>,
}

/// The nerve semifiltration over axes `(depth k, scale index t)`.
#[derive(Clone, PartialEq, Debug)]
pub struct Semifiltration {
    grades: Vec<f64>,
    scale_tag: Option<String>,
    max_dim: usize,
    vertices: Vec<SimplexTimeline>,
    alive: Vec<Vec<usize>>,
}

/// Builds the nerve model of `f` with cells of at most `k_max + 1` vertices.
pub fn build_nerve(f: &CriticalFiltration, k_max: usize) -> Semifiltration {
    Semifiltration {
        grades: f.grades().to_vec(),
        scale_tag: f.scale_tag().map(String::from),
        max_dim: k_max,
        vertices: f.timelines().to_vec(),
        alive: (0..f.num_grades())
            .map(|t| f.alive_ids(t).expect("grade in range").to_vec())
            .collect(),
    }
}

impl Semifiltration {
    /// Rebuilds a semifiltration from its vertex timelines, validating
    /// that they describe maximality intervals with valid merge targets.
    pub fn from_parts(
        grades: Vec<f64>,
        scale_tag: Option<String>,
        max_dim: usize,
        vertices: Vec<SimplexTimeline>,
    ) -> Result<Self> {
        if grades
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less))
        {
            return Err(Error::invalid("grades must be strictly increasing"));
        }
        let m = grades.len();
        let mut alive = alloc::vec![Vec::new(); m];
        for (id, v) in vertices.iter().enumerate() {
            if v.simplex.is_empty() {
                return Err(Error::invariant(format!(
                    "vertex {id} has an empty simplex"
                )));
            }
            let end = v.d.unwrap_or(m);
            if v.b >= end || end > m {
                return Err(Error::invariant(format!(
                    "vertex {id} has interval [{}, {end})",
                    v.b
                )));
            }
            match (v.d, v.merge_next) {
                (None, None) => {}
                (Some(d), Some(target)) => {
                    let tv = vertices.get(target).ok_or_else(|| {
                        Error::invariant(format!("vertex {id} merges into unknown {target}"))
                    })?;
                    if !tv.alive_at(d)
                        || !v.simplex.is_face_of(&tv.simplex)
                        || tv.simplex == v.simplex
                    {
                        return Err(Error::invariant(format!(
                            "vertex {id} has an invalid merge target {target}"
                        )));
                    }
                }
                _ => {
                    return Err(Error::invariant(format!(
                        "vertex {id}: merge target must be present iff death is finite"
                    )))
                }
            }
            for ids in &mut alive[v.b..end] {
                ids.push(id);
            }
        }
        for (t, ids) in alive.iter_mut().enumerate() {
            ids.sort_by(|&a, &b| vertices[a].simplex.cmp(&vertices[b].simplex));
            if ids
                .windows(2)
                .any(|w| vertices[w[0]].simplex == vertices[w[1]].simplex)
            {
                return Err(Error::invariant(format!(
                    "duplicate vertex simplex at grade {t}"
                )));
            }
        }
        Ok(Semifiltration {
            grades,
            scale_tag,
            max_dim,
            vertices,
            alive,
        })
    }

    pub fn grades(&self) -> &[f64] {
        &self.grades
    }

    pub fn num_grades(&self) -> usize {
        self.grades.len()
    }

    pub fn scale_tag(&self) -> Option<&str> {
        self.scale_tag.as_deref()
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn vertices(&self) -> &[SimplexTimeline] {
        &self.vertices
    }

    /// Largest depth at which some vertex exists.
    pub fn depth_max(&self) -> usize {
        self.vertices
            .iter()
            .map(|v| v.simplex.len())
            .max()
            .unwrap_or(0)
    }

    /// Vertex ids alive at `t`, in lex order of their simplices.
    pub fn alive_ids(&self, t: usize) -> Result<&[usize]> {
        self.check_grade(t)?;
        Ok(&self.alive[t])
    }

    fn check_grade(&self, t: usize) -> Result<()> {
        if t < self.grades.len() {
            Ok(())
        } else {
            Err(Error::GradeOutOfRange {
                index: t,
                len: self.grades.len(),
            })
        }
    }

    /// Vertex insertions and merges of the step into grade `t ≥ 1`.
    pub fn step(&self, t: usize) -> Result<StepRecord> {
        self.check_grade(t)?;
        let mut rec = StepRecord::default();
        for (id, v) in self.vertices.iter().enumerate() {
            if v.b == t {
                rec.inserted.push(id);
            }
            if v.d == Some(t) {
                rec.merged.push((id, v.merge_next.expect("validated")));
            }
        }
        Ok(rec)
    }

    /// The nerve at `(k, t)`, with vertex ids equal to nerve vertex ids.
    pub fn materialize(&self, k: usize, t: usize) -> Result<SimplicialComplex> {
        self.materialize_with_cap(k, t, DEFAULT_CELL_CAP)
    }

    pub fn materialize_with_cap(
        &self,
        k: usize,
        t: usize,
        cap: usize,
    ) -> Result<SimplicialComplex> {
        if k == 0 {
            return Err(Error::invalid("depth k must be at least 1"));
        }
        self.check_grade(t)?;
        let mut ids: Vec<usize> = self.alive[t]
            .iter()
            .copied()
            .filter(|&id| self.vertices[id].simplex.len() >= k)
            .collect();
        ids.sort_unstable();
        let mut cells = alloc::collections::BTreeSet::new();
        let mut err = None;
        self.for_each_cell(&ids, k, |members, _| {
            cells.insert(Simplex::from_sorted(
                members.iter().map(|&m| m as u32).collect(),
            ));
            if cells.len() > cap {
                err = Some(Error::CellCapExceeded { cap });
                false
            } else {
                true
            }
        });
        match err {
            Some(e) => Err(e),
            None => Ok(SimplicialComplex::from_closed_set(cells)),
        }
    }

    /// Visits every `S ⊆ ids` with `|S| ≤ max_dim + 1` and `|⋂S| ≥ min_common`,
    /// passing `S` and `⋂S`. Returning false stops the walk.
    fn for_each_cell(
        &self,
        ids: &[usize],
        min_common: usize,
        mut visit: impl FnMut(&[usize], &[u32]) -> bool,
    ) {
        let mut stack: Vec<usize> = Vec::new();
        let max_len = self.max_dim + 1;
        let mut go = true;
        for (i, &id) in ids.iter().enumerate() {
            if !go {
                break;
            }
            stack.push(id);
            let common = self.vertices[id].simplex.vertices().to_vec();
            go = self.walk(
                ids,
                i + 1,
                &common,
                min_common,
                max_len,
                &mut stack,
                &mut visit,
            );
            stack.pop();
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn walk(
        &self,
        ids: &[usize],
        start: usize,
        common: &[u32],
        min_common: usize,
        max_len: usize,
        stack: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize], &[u32]) -> bool,
    ) -> bool {
        if !visit(stack, common) {
            return false;
        }
        if stack.len() >= max_len {
            return true;
        }
        for (j, &id) in ids.iter().enumerate().skip(start) {
            let next = sorted_intersection(common, self.vertices[id].simplex.vertices());
            if next.len() < min_common {
                continue;
            }
            stack.push(id);
            let go = self.walk(ids, j + 1, &next, min_common, max_len, stack, visit);
            stack.pop();
            if !go {
                return false;
            }
        }
        true
    }

    /// All generators with at most `max_dim + 1` members, sorted by
    /// `(scale_grade, depth_grade, members)`.
    pub fn enumerate_generators(&self) -> Vec<NerveCellGenerator> {
        let mut out = Vec::new();
        for t in 0..self.grades.len() {
            let mut ids = self.alive[t].clone();
            ids.sort_unstable();
            self.for_each_cell(&ids, 1, |members, common| {
                if members.iter().any(|&m| self.vertices[m].b == t) {
                    out.push(NerveCellGenerator {
                        members: members.to_vec(),
                        depth_grade: common.len(),
                        scale_grade: t,
                    });
                }
                true
            });
        }
        out.sort_by(|a, b| {
            (a.scale_grade, a.depth_grade, &a.members).cmp(&(
                b.scale_grade,
                b.depth_grade,
                &b.members,
            ))
        });
        out
    }

    /// Generators per nerve dimension plus vertex merges.
    pub fn size_report(&self) -> SizeReport {
        let mut per_dim = alloc::vec![0usize; self.max_dim + 1];
        for g in self.enumerate_generators() {
            per_dim[g.dim()] += 1;
        }
        while per_dim.len() > 1 && per_dim.last() == Some(&0) {
            per_dim.pop();
        }
        let merges = self.vertices.iter().filter(|v| v.d.is_some()).count();
        SizeReport::new(per_dim, merges)
    }
}

//! Conversion of a nerve semifiltration into a 1-critical bifiltration.
//!
//! The depth-1 slice `A_{1,0} → A_{1,1} → …` is a simplicial tower whose
//! maps insert cells and collapse a dying vertex `σ` into its merge target
//! `τ`. Each collapse is replaced by coning the closed star of `σ` with apex
//! `τ`, which turns the tower into a filtration `A′_1`. A cell `C` of `A′_1`
//! born at `t_C` is placed at depth `|⋂_{σ∈C} σ|`, giving
//! `A′_{k,t} = {C : depth(C) ≥ k, t_C ≤ t}`.
//!
//! Collapse orientation is fixed: `σ` always goes into `τ`. The reverse
//! would rename `τ` to a vertex that is absent from deeper slices.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::filtration::SizeReport;
use crate::homology::{betti_grid, BettiGrid};
use crate::nerve::Semifiltration;
use crate::simplex::{sorted_intersection, Simplex, SimplicialComplex};
use crate::{Error, Result};

/// One factor of a depth-1 step map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ElementaryStep {
    Identity,
    /// Adds one cell whose facets are already present.
    Insert(Simplex),
    /// Sends vertex `from` to vertex `into`.
    Collapse {
        from: u32,
        into: u32,
    },
}

/// A cell of a 1-critical bifiltration, present at `(k, t)` iff
/// `k ≤ depth` and `t ≥ t_birth`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BifiltrationCell {
    pub simplex: Simplex,
    pub depth: usize,
    pub t: usize,
}

/// Cells sorted by `(t, dim, simplex)`, so every facet precedes its cofaces.
#[derive(Clone, PartialEq, Debug)]
pub struct Bifiltration1Critical {
    grades: Vec<f64>,
    scale_tag: Option<alloc::string::String>,
    cells: Vec<BifiltrationCell>,
}

impl Bifiltration1Critical {
    /// Sorts the cells and checks that both axes are inclusions.
    pub fn new(
        grades: Vec<f64>,
        scale_tag: Option<alloc::string::String>,
        mut cells: Vec<BifiltrationCell>,
    ) -> Result<Self> {
        cells.sort_by(|a, b| {
            (a.t, a.simplex.len(), &a.simplex).cmp(&(b.t, b.simplex.len(), &b.simplex))
        });
        let b = Bifiltration1Critical {
            grades,
            scale_tag,
            cells,
        };
        b.check_inclusions()?;
        Ok(b)
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

    pub fn cells(&self) -> &[BifiltrationCell] {
        &self.cells
    }

    pub fn depth_max(&self) -> usize {
        self.cells.iter().map(|c| c.depth).max().unwrap_or(0)
    }

    /// Every facet of a cell exists, at a larger-or-equal depth and an
    /// earlier-or-equal scale, and no simplex appears twice.
    pub fn check_inclusions(&self) -> Result<()> {
        let mut index: BTreeMap<&Simplex, &BifiltrationCell> = BTreeMap::new();
        for c in &self.cells {
            if c.simplex.is_empty() || c.depth == 0 {
                return Err(Error::invariant("cells must be nonempty with depth ≥ 1"));
            }
            if c.t >= self.grades.len() {
                return Err(Error::GradeOutOfRange {
                    index: c.t,
                    len: self.grades.len(),
                });
            }
            if index.insert(&c.simplex, c).is_some() {
                return Err(Error::invariant(format!(
                    "cell {:?} is listed twice",
                    c.simplex
                )));
            }
        }
        for c in &self.cells {
            for f in c.simplex.facets() {
                let Some(face) = index.get(&f) else {
                    return Err(Error::invariant(format!(
                        "facet {f:?} of {:?} is missing",
                        c.simplex
                    )));
                };
                if face.depth < c.depth || face.t > c.t {
                    return Err(Error::invariant(format!(
                        "facet {f:?} of {:?} is not included at its bigrade",
                        c.simplex
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn materialize(&self, k: usize, t: usize) -> Result<SimplicialComplex> {
        if t >= self.grades.len() {
            return Err(Error::GradeOutOfRange {
                index: t,
                len: self.grades.len(),
            });
        }
        Ok(SimplicialComplex::from_closed_set(
            self.cells
                .iter()
                .filter(|c| c.depth >= k && c.t <= t)
                .map(|c| c.simplex.clone())
                .collect(),
        ))
    }

    /// Every cell is a generator; there are no merges.
    pub fn size_report(&self) -> SizeReport {
        let mut per_dim: Vec<usize> = Vec::new();
        for c in &self.cells {
            let d = c.simplex.len() - 1;
            if per_dim.len() <= d {
                per_dim.resize(d + 1, 0);
            }
            per_dim[d] += 1;
        }
        SizeReport::new(per_dim, 0)
    }

    /// Index of each cell's codimension-one faces in `cells()`.
    pub fn boundary_ids(&self) -> Vec<Vec<usize>> {
        let index: BTreeMap<&Simplex, usize> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, c)| (&c.simplex, i))
            .collect();
        self.cells
            .iter()
            .map(|c| {
                let mut ids: Vec<usize> = c.simplex.facets().map(|f| index[&f]).collect();
                ids.sort_unstable();
                ids
            })
            .collect()
    }

    /// Drops the cell at `index` and everything containing it.
    pub fn without_cell(&self, index: usize) -> Result<Self> {
        let removed = self.cells[index].simplex.clone();
        let cells = self
            .cells
            .iter()
            .filter(|c| !removed.is_face_of(&c.simplex))
            .cloned()
            .collect();
        Bifiltration1Critical::new(self.grades.clone(), self.scale_tag.clone(), cells)
    }
}

fn depth_of(s: &Semifiltration, cell: &Simplex) -> usize {
    let vs = s.vertices();
    let mut it = cell.vertices().iter();
    let first = *it.next().expect("nonempty cell") as usize;
    let mut common = vs[first].simplex.vertices().to_vec();
    for &v in it {
        common = sorted_intersection(&common, vs[v as usize].simplex.vertices());
    }
    common.len()
}

fn sorted_by_dim_lex(cells: impl IntoIterator<Item = Simplex>) -> Vec<Simplex> {
    let mut v: Vec<Simplex> = cells.into_iter().collect();
    v.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    v
}

/// Factors each depth-1 step map. Entry `t` describes the map into grade
/// `t`; entry 0 builds `A_{1,0}` from nothing.
///
/// New vertices come first, then one pairwise collapse per dying vertex in
/// lex order of its simplex, then the remaining insertions by
/// `(dim, lex)`. Steps without change are `[Identity]`.
pub fn factor_steps(s: &Semifiltration) -> Result<Vec<Vec<ElementaryStep>>> {
    Ok(run_tower(s)?.steps)
}

struct Tower {
    steps: Vec<Vec<ElementaryStep>>,
    cells: BTreeMap<Simplex, usize>,
}

fn run_tower(s: &Semifiltration) -> Result<Tower> {
    let max_len = s.max_dim() + 1;
    let vs = s.vertices();
    let mut all: BTreeMap<Simplex, usize> = BTreeMap::new();
    let mut k_cur: BTreeSet<Simplex> = BTreeSet::new();
    let mut steps = Vec::with_capacity(s.num_grades());
    for t in 0..s.num_grades() {
        let target = s.materialize(1, t)?;
        let mut factors = Vec::new();
        let rec = s.step(t)?;
        let mut inserted: Vec<u32> = rec.inserted.iter().map(|&id| id as u32).collect();
        inserted.sort_by(|&a, &b| vs[a as usize].simplex.cmp(&vs[b as usize].simplex));
        for v in inserted {
            let cell = Simplex::vertex(v);
            k_cur.insert(cell.clone());
            all.entry(cell.clone()).or_insert(t);
            factors.push(ElementaryStep::Insert(cell));
        }
        let mut merged = rec.merged.clone();
        merged.sort_by(|a, b| vs[a.0].simplex.cmp(&vs[b.0].simplex));
        for (from, into) in merged {
            let (from, into) = (from as u32, into as u32);
            // Closed star of `from`, truncated so cone cells fit the cap.
            let mut base: BTreeSet<Simplex> = BTreeSet::new();
            for c in k_cur.iter().filter(|c| c.contains_vertex(from)) {
                for f in c.faces() {
                    if f.len() < max_len && !f.contains_vertex(into) {
                        base.insert(f);
                    }
                }
            }
            for f in sorted_by_dim_lex(base) {
                all.entry(f.with_vertex(into)).or_insert(t);
            }
            k_cur = k_cur
                .into_iter()
                .map(|c| {
                    if c.contains_vertex(from) {
                        c.without_vertex(from).with_vertex(into)
                    } else {
                        c
                    }
                })
                .collect();
            factors.push(ElementaryStep::Collapse { from, into });
        }
        if !k_cur.is_subset(target.simplices()) {
            return Err(Error::invariant(format!(
                "collapsed complex at grade {t} is not contained in the next slice"
            )));
        }
        let fresh: Vec<Simplex> = target
            .iter()
            .filter(|c| !k_cur.contains(*c))
            .cloned()
            .collect();
        for c in sorted_by_dim_lex(fresh) {
            if all.contains_key(&c) {
                return Err(Error::invariant(format!(
                    "cell {c:?} reappears at grade {t}"
                )));
            }
            all.insert(c.clone(), t);
            k_cur.insert(c.clone());
            factors.push(ElementaryStep::Insert(c));
        }
        if factors.is_empty() {
            factors.push(ElementaryStep::Identity);
        }
        steps.push(factors);
    }
    Ok(Tower { steps, cells: all })
}

/// The coned bifiltration `A′` of `s`, truncated to the same nerve
/// dimension cap.
pub fn kerber_schreiber(s: &Semifiltration) -> Result<Bifiltration1Critical> {
    let tower = run_tower(s)?;
    let cells = tower
        .cells
        .into_iter()
        .map(|(simplex, t)| BifiltrationCell {
            depth: depth_of(s, &simplex),
            simplex,
            t,
        })
        .collect();
    Bifiltration1Critical::new(s.grades().to_vec(), s.scale_tag().map(Into::into), cells)
}

/// Follows merge targets from `id` to the vertex that never dies.
pub fn representative(s: &Semifiltration, mut id: usize) -> usize {
    while let Some(next) = s.vertices()[id].merge_next {
        id = next;
    }
    id
}

fn grid_axes(s: &Semifiltration, b: &Bifiltration1Critical) -> Result<(Vec<usize>, Vec<usize>)> {
    if s.grades() != b.grades() {
        return Err(Error::invalid("grade axes of the two models differ"));
    }
    let depth = s.depth_max().max(b.depth_max());
    Ok(((1..=depth.max(1)).collect(), (0..s.num_grades()).collect()))
}

/// Betti grids of both models over every bigrade, `i ≤ i_max`.
pub fn weak_equivalence_grids(
    s: &Semifiltration,
    b: &Bifiltration1Critical,
    i_max: usize,
) -> Result<(BettiGrid, BettiGrid)> {
    let (ks, ts) = grid_axes(s, b)?;
    let left = betti_grid(&ks, &ts, i_max, |k, t| s.materialize(k, t))?;
    let right = betti_grid(&ks, &ts, i_max, |k, t| b.materialize(k, t))?;
    Ok((left, right))
}

/// True iff `β_i` of `s` and `b` agree at every bigrade for `i ≤ i_max`.
pub fn verify_weak_equivalence_grid(
    s: &Semifiltration,
    b: &Bifiltration1Critical,
    i_max: usize,
) -> Result<bool> {
    let (left, right) = weak_equivalence_grids(s, b, i_max)?;
    Ok(left.mismatches(&right).is_empty())
}

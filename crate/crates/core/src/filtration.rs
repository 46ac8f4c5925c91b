//! One-parameter filtrations stored by their maximal simplices.
//!
//! A [`CriticalFiltration`] keeps, for each critical grade `t`, the set
//! `Σ_t` of maximal simplices of `F_t`. Every simplex that is maximal at some
//! grade gets a [`SimplexTimeline`] recording the interval `[b, d)` on which
//! it is maximal and the lex-min maximal coface it merges into at `d`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::graph::{maximal_cliques, neighborhood_graph, Graph};
use crate::metric::{rips_critical_radii, FiniteMetric};
use crate::simplex::{Simplex, SimplicialComplex};
use crate::{Error, Result};

/// Maximality interval of one ever-maximal simplex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplexTimeline {
    pub simplex: Simplex,
    /// First grade index at which the simplex is maximal.
    pub b: usize,
    /// First grade index at which a proper coface exists; `None` for ∞.
    pub d: Option<usize>,
    /// Timeline id of the lex-min maximal coface at grade `d`.
    pub merge_next: Option<usize>,
}

impl SimplexTimeline {
    /// True iff the simplex is maximal at grade `t`.
    pub fn alive_at(&self, t: usize) -> bool {
        self.b <= t && self.d.is_none_or(|d| t < d)
    }
}

/// A filtration over ascending real grades, given by `Σ_t` per grade.
#[derive(Clone, PartialEq, Debug)]
pub struct CriticalFiltration {
    grades: Vec<f64>,
    maximal: Vec<Vec<Simplex>>,
    scale_tag: Option<String>,
    timelines: Vec<SimplexTimeline>,
    /// Timeline ids of `Σ_t`, in lex order of their simplices.
    alive: Vec<Vec<usize>>,
}

impl CriticalFiltration {
    /// Builds a filtration from per-grade maximal simplices.
    ///
    /// Each `Σ_t` is sorted and deduplicated. Fails if the grades are not
    /// strictly increasing, some `Σ_t` is not an antichain, or the
    /// complexes do not grow.
    pub fn from_maximal(
        grades: Vec<f64>,
        maximal: Vec<Vec<Simplex>>,
        scale_tag: Option<String>,
    ) -> Result<Self> {
        if grades.len() != maximal.len() {
            return Err(Error::DimensionMismatch {
                left: grades.len(),
                right: maximal.len(),
            });
        }
        if grades
            .windows(2)
            .any(|w| w[0].partial_cmp(&w[1]) != Some(core::cmp::Ordering::Less))
        {
            return Err(Error::invalid("grades must be strictly increasing"));
        }
        let mut maximal = maximal;
        for (t, sigma) in maximal.iter_mut().enumerate() {
            sigma.retain(|s| !s.is_empty());
            sigma.sort();
            sigma.dedup();
            for (i, a) in sigma.iter().enumerate() {
                for b in &sigma[i + 1..] {
                    if a.is_face_of(b) || b.is_face_of(a) {
                        return Err(Error::invariant(format!(
                            "Σ at grade {t} is not an antichain: {a:?} and {b:?}"
                        )));
                    }
                }
            }
        }
        let (timelines, alive) = compute_timelines(&maximal)?;
        Ok(CriticalFiltration {
            grades,
            maximal,
            scale_tag,
            timelines,
            alive,
        })
    }

    /// Clique filtration of one graph per grade; the graphs must grow.
    pub fn from_graphs(
        grades: Vec<f64>,
        graphs: &[Graph],
        scale_tag: Option<String>,
    ) -> Result<Self> {
        let maximal = graphs
            .iter()
            .map(|g| maximal_cliques(g).into_cliques())
            .collect();
        Self::from_maximal(grades, maximal, scale_tag)
    }

    /// Clique filtration of `n` vertices given the grade at which each edge
    /// `{i, j}` appears (`edge_grade(i, j)` with `i < j`, `None` if never).
    pub fn from_edge_grades(
        n: usize,
        grades: Vec<f64>,
        edge_grade: impl Fn(usize, usize) -> Option<usize>,
    ) -> Result<Self> {
        let mut pairs: Vec<(usize, usize, usize)> = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if let Some(t) = edge_grade(i, j) {
                    if t >= grades.len() {
                        return Err(Error::GradeOutOfRange {
                            index: t,
                            len: grades.len(),
                        });
                    }
                    pairs.push((t, i, j));
                }
            }
        }
        pairs.sort_unstable();
        let mut graphs = Vec::with_capacity(grades.len());
        let mut g = Graph::new(n);
        let mut next = 0;
        for t in 0..grades.len() {
            while next < pairs.len() && pairs[next].0 <= t {
                g.add_edge(pairs[next].1, pairs[next].2);
                next += 1;
            }
            graphs.push(g.clone());
        }
        Self::from_graphs(grades, &graphs, None)
    }

    /// The Rips filtration: grades are [`rips_critical_radii`], `Σ_t` the
    /// maximal cliques of the neighborhood graph at each grade.
    pub fn from_clique_filtration(m: &FiniteMetric) -> Self {
        let grades = rips_critical_radii(m);
        let graphs: Vec<Graph> = grades.iter().map(|&r| neighborhood_graph(m, r)).collect();
        Self::from_graphs(grades, &graphs, None)
            .expect("neighborhood graphs over ascending radii form a filtration")
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

    pub fn with_scale_tag(mut self, tag: Option<String>) -> Self {
        self.scale_tag = tag;
        self
    }

    /// `Σ_t`, lexicographically sorted.
    pub fn maximal_at(&self, t: usize) -> Result<&[Simplex]> {
        self.check_grade(t)?;
        Ok(&self.maximal[t])
    }

    pub fn timelines(&self) -> &[SimplexTimeline] {
        &self.timelines
    }

    /// Timeline ids of `Σ_t`, in lex order of their simplices.
    pub fn alive_ids(&self, t: usize) -> Result<&[usize]> {
        self.check_grade(t)?;
        Ok(&self.alive[t])
    }

    /// `F_t` as a face-closed complex.
    pub fn complex_at(&self, t: usize) -> Result<SimplicialComplex> {
        self.check_grade(t)?;
        Ok(SimplicialComplex::from_maximal(
            self.maximal[t].iter().cloned(),
        ))
    }

    /// Least grade index with `σ ∈ F_t`.
    pub fn birth_of(&self, sigma: &Simplex) -> Option<usize> {
        (0..self.grades.len()).find(|&t| self.maximal[t].iter().any(|m| sigma.is_face_of(m)))
    }

    pub fn check_grade(&self, t: usize) -> Result<()> {
        if t < self.grades.len() {
            Ok(())
        } else {
            Err(Error::GradeOutOfRange {
                index: t,
                len: self.grades.len(),
            })
        }
    }

    /// Image of timeline `id` (alive at `t`) under the consecutive-step
    /// composite `Σ_t → Σ_{t'}`.
    pub fn composite_map(&self, id: usize, t: usize, t_prime: usize) -> usize {
        debug_assert!(self.timelines[id].alive_at(t) && t <= t_prime);
        let mut cur = id;
        for step in (t + 1)..=t_prime {
            let tl = &self.timelines[cur];
            if tl.d == Some(step) {
                cur = tl.merge_next.expect("finite death has a merge target");
            }
        }
        cur
    }

    /// Timeline id of the lex-min simplex of `Σ_{t'}` containing `σ`.
    pub fn direct_map(&self, sigma: &Simplex, t_prime: usize) -> Option<usize> {
        self.alive[t_prime]
            .iter()
            .copied()
            .find(|&id| sigma.is_face_of(&self.timelines[id].simplex))
    }

    /// All `(t, t', id)` where the direct lex-min map `Σ_t → Σ_{t'}`
    /// disagrees with the composite of consecutive steps.
    pub fn functoriality_report(&self) -> Vec<FunctorialityMismatch> {
        let mut out = Vec::new();
        let m = self.grades.len();
        for t in 0..m {
            for &id in &self.alive[t] {
                for t_prime in (t + 2)..m {
                    let composite = self.composite_map(id, t, t_prime);
                    let direct = self
                        .direct_map(&self.timelines[id].simplex, t_prime)
                        .expect("filtration is monotone");
                    if composite != direct {
                        out.push(FunctorialityMismatch {
                            from_grade: t,
                            to_grade: t_prime,
                            source: id,
                            direct,
                            composite,
                        });
                    }
                }
            }
        }
        out
    }

    /// `m_k`: the number of sets `S` of ever-maximal simplices with
    /// `1 ≤ |S| ≤ k + 1` that are jointly maximal at some grade.
    ///
    /// A set is counted at `t = max b(σ)`, where it is a subset of `Σ_t`
    /// containing at least one simplex born at `t`. Saturates at `u64::MAX`.
    pub fn count_mk(&self, k: usize) -> u64 {
        let mut total: u128 = 0;
        for t in 0..self.grades.len() {
            let alive = self.alive[t].len() as u128;
            let new = self.alive[t]
                .iter()
                .filter(|&&id| self.timelines[id].b == t)
                .count() as u128;
            for j in 1..=(k as u128 + 1) {
                total = total
                    .saturating_add(binomial(alive, j).saturating_sub(binomial(alive - new, j)));
            }
        }
        u64::try_from(total).unwrap_or(u64::MAX)
    }

    /// `m_k` by explicit enumeration of subsets of every `Σ_t`, deduplicated
    /// across grades. Exponential; for cross-checking on small inputs.
    pub fn count_mk_enumerated(&self, k: usize) -> u64 {
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for ids in &self.alive {
            let mut stack = Vec::new();
            enumerate_subsets(ids, k + 1, 0, &mut stack, &mut |s| {
                seen.insert(s.to_vec());
            });
        }
        seen.len() as u64
    }

    /// Checks `σ ∈ Σ_t ⇔ b ≤ t < d` by recomputing membership per grade.
    pub fn check_timelines(&self) -> Result<()> {
        let index: BTreeMap<&Simplex, usize> = self
            .timelines
            .iter()
            .enumerate()
            .map(|(i, tl)| (&tl.simplex, i))
            .collect();
        for (t, sigma) in self.maximal.iter().enumerate() {
            for s in sigma {
                let id = *index
                    .get(s)
                    .ok_or_else(|| Error::invariant(format!("{s:?} has no timeline")))?;
                if !self.timelines[id].alive_at(t) {
                    return Err(Error::invariant(format!(
                        "{s:?} maximal at {t} outside its timeline"
                    )));
                }
            }
        }
        for tl in &self.timelines {
            for t in 0..self.grades.len() {
                if tl.alive_at(t) && self.maximal[t].binary_search(&tl.simplex).is_err() {
                    return Err(Error::invariant(format!(
                        "{:?} not maximal at {t} inside its timeline",
                        tl.simplex
                    )));
                }
            }
            if let (Some(d), Some(target)) = (tl.d, tl.merge_next) {
                let target = &self.timelines[target];
                if !(tl.simplex.is_face_of(&target.simplex) && tl.simplex != target.simplex)
                    || !target.alive_at(d)
                {
                    return Err(Error::invariant(format!(
                        "bad merge target for {:?}",
                        tl.simplex
                    )));
                }
            }
        }
        Ok(())
    }
}

/// One disagreement found by [`CriticalFiltration::functoriality_report`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FunctorialityMismatch {
    pub from_grade: usize,
    pub to_grade: usize,
    pub source: usize,
    pub direct: usize,
    pub composite: usize,
}

fn compute_timelines(maximal: &[Vec<Simplex>]) -> Result<(Vec<SimplexTimeline>, Vec<Vec<usize>>)> {
    let mut timelines: Vec<SimplexTimeline> = Vec::new();
    let mut alive: Vec<Vec<usize>> = Vec::with_capacity(maximal.len());
    let mut dead: BTreeSet<Simplex> = BTreeSet::new();
    // Simplex → timeline id for the previous grade's Σ.
    let mut prev: BTreeMap<Simplex, usize> = BTreeMap::new();
    for (t, sigma) in maximal.iter().enumerate() {
        let mut cur: BTreeMap<Simplex, usize> = BTreeMap::new();
        let mut ids = Vec::with_capacity(sigma.len());
        for s in sigma {
            let id = match prev.get(s) {
                Some(&id) => id,
                None => {
                    if dead.contains(s) {
                        return Err(Error::invariant(format!(
                            "{s:?} becomes maximal again at grade {t}"
                        )));
                    }
                    timelines.push(SimplexTimeline {
                        simplex: s.clone(),
                        b: t,
                        d: None,
                        merge_next: None,
                    });
                    timelines.len() - 1
                }
            };
            cur.insert(s.clone(), id);
            ids.push(id);
        }
        for (s, &id) in &prev {
            if cur.contains_key(s) {
                continue;
            }
            let target = sigma.iter().find(|m| s.is_face_of(m)).ok_or_else(|| {
                Error::invariant(format!("{s:?} disappears at grade {t}; not a filtration"))
            })?;
            timelines[id].d = Some(t);
            timelines[id].merge_next = Some(cur[target]);
            dead.insert(s.clone());
        }
        alive.push(ids);
        prev = cur;
    }
    // Ids are in (birth, lex) order.
    Ok((timelines, alive))
}

fn enumerate_subsets(
    ids: &[usize],
    max_len: usize,
    start: usize,
    stack: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    for i in start..ids.len() {
        stack.push(ids[i]);
        let mut sorted = stack.clone();
        sorted.sort_unstable();
        visit(&sorted);
        if stack.len() < max_len {
            enumerate_subsets(ids, max_len, i + 1, stack, visit);
        }
        stack.pop();
    }
}

pub(crate) fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Generator-level size accounting of a semifiltration or bifiltration.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SizeReport {
    /// Generators of each dimension (cells not in the image of an earlier
    /// structure map).
    pub generators_per_dim: Vec<usize>,
    /// Vertex-merge relations; an upper bound standing in for the first
    /// Betti number of the degree-0 chain module.
    pub merge_events: usize,
    /// Sum of all generators plus merge events.
    pub total: usize,
}

impl SizeReport {
    pub fn new(generators_per_dim: Vec<usize>, merge_events: usize) -> Self {
        let total = generators_per_dim.iter().sum::<usize>() + merge_events;
        SizeReport {
            generators_per_dim,
            merge_events,
            total,
        }
    }
}

//! Abstract simplices and finite simplicial complexes.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

/// A simplex stored as its strictly increasing vertex list.
///
/// The derived ordering is lexicographic on the vertex sequence, which is the
/// order used for every lex-min tie-break in the crate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Simplex(Vec<u32>);

impl Simplex {
    /// Builds a simplex from arbitrary vertices, sorting and deduplicating.
    pub fn new(mut vertices: Vec<u32>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    /// Wraps an already strictly increasing vertex list.
    pub fn from_sorted(vertices: Vec<u32>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertex(v: u32) -> Self {
        Simplex(alloc::vec![v])
    }

    pub fn vertices(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<u32> {
        self.0
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Geometric dimension; the empty simplex has dimension -1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains_vertex(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// True if every vertex of `self` is a vertex of `other`.
    pub fn is_face_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn intersection(&self, other: &Simplex) -> Simplex {
        Simplex(sorted_intersection(&self.0, &other.0))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                core::cmp::Ordering::Less => {
                    out.push(self.0[i]);
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    out.push(other.0[j]);
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    out.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Simplex(out)
    }

    /// Returns `self ∪ {v}`.
    pub fn with_vertex(&self, v: u32) -> Simplex {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut out = self.0.clone();
                out.insert(pos, v);
                Simplex(out)
            }
        }
    }

    /// Returns `self \ {v}`.
    pub fn without_vertex(&self, v: u32) -> Simplex {
        Simplex(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// Codimension-one faces, in the order obtained by deleting vertex
    /// 0, 1, 2, ... of the sorted list.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = if self.0.len() > 1 { self.0.len() } else { 0 };
        (0..n).map(move |skip| {
            Simplex(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| i != skip)
                    .map(|(_, &v)| v)
                    .collect(),
            )
        })
    }

    /// All nonempty faces including `self`.
    pub fn faces(&self) -> Vec<Simplex> {
        let n = self.0.len();
        assert!(n < 32, "faces() of a simplex with {n} vertices");
        (1u32..(1u32 << n))
            .map(|mask| {
                Simplex(
                    (0..n)
                        .filter(|&i| mask & (1 << i) != 0)
                        .map(|i| self.0[i])
                        .collect(),
                )
            })
            .collect()
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl From<&[u32]> for Simplex {
    fn from(v: &[u32]) -> Self {
        Simplex::new(v.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Simplex {
    fn from(v: [u32; N]) -> Self {
        Simplex::new(v.to_vec())
    }
}

pub(crate) fn sorted_intersection(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => i += 1,
            core::cmp::Ordering::Greater => j += 1,
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// A finite abstract simplicial complex, closed under taking faces.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct SimplicialComplex {
    simplices: BTreeSet<Simplex>,
}

impl SimplicialComplex {
    pub fn new() -> Self {
        Self::default()
    }

    /// The closure of the given simplices under faces.
    pub fn from_maximal<I>(generators: I) -> Self
    where
        I: IntoIterator<Item = Simplex>,
    {
        let mut complex = Self::new();
        for s in generators {
            complex.insert_closed(&s);
        }
        complex
    }

    /// Wraps a set that the caller guarantees is already face-closed.
    pub fn from_closed_set(simplices: BTreeSet<Simplex>) -> Self {
        debug_assert!(simplices
            .iter()
            .all(|s| s.facets().all(|f| simplices.contains(&f))));
        SimplicialComplex { simplices }
    }

    /// Inserts `s` together with all of its faces.
    pub fn insert_closed(&mut self, s: &Simplex) {
        if s.is_empty() || self.simplices.contains(s) {
            return;
        }
        for f in s.facets() {
            self.insert_closed(&f);
        }
        self.simplices.insert(s.clone());
    }

    /// Inserts `s` whose facets must already be present.
    pub fn insert_unchecked(&mut self, s: Simplex) -> bool {
        debug_assert!(s.facets().all(|f| self.simplices.contains(&f)));
        self.simplices.insert(s)
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.simplices.contains(s)
    }

    pub fn len(&self) -> usize {
        self.simplices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.simplices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.simplices.iter()
    }

    pub fn simplices(&self) -> &BTreeSet<Simplex> {
        &self.simplices
    }

    /// Largest simplex dimension, -1 for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    /// Number of simplices of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = Vec::new();
        for s in &self.simplices {
            let d = s.dim() as usize;
            if f.len() <= d {
                f.resize(d + 1, 0);
            }
            f[d] += 1;
        }
        f
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> + '_ {
        self.simplices
            .iter()
            .filter(|s| s.len() == 1)
            .map(|s| s.vertices()[0])
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.simplices.is_subset(&other.simplices)
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<Simplex> = BTreeSet::new();
        for s in &self.simplices {
            for f in s.facets() {
                covered.insert(f);
            }
        }
        self.simplices
            .iter()
            .filter(|s| !covered.contains(*s))
            .cloned()
            .collect()
    }

    /// Subcomplex of simplices of dimension at most `max_dim`.
    pub fn skeleton(&self, max_dim: usize) -> SimplicialComplex {
        SimplicialComplex {
            simplices: self
                .simplices
                .iter()
                .filter(|s| s.len() <= max_dim + 1)
                .cloned()
                .collect(),
        }
    }

    /// Intersection of two complexes (again a complex).
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        SimplicialComplex {
            simplices: self
                .simplices
                .intersection(&other.simplices)
                .cloned()
                .collect(),
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .map(|s| if s.len() % 2 == 1 { 1 } else { -1 })
            .sum()
    }
}

impl FromIterator<Simplex> for SimplicialComplex {
    fn from_iter<T: IntoIterator<Item = Simplex>>(iter: T) -> Self {
        Self::from_maximal(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_is_sorted_and_deduplicated() {
        let s = Simplex::new(alloc::vec![3, 1, 2, 1]);
        assert_eq!(s.vertices(), &[1, 2, 3]);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn face_relation() {
        let t = Simplex::from([0, 1, 2]);
        assert!(Simplex::from([0, 2]).is_face_of(&t));
        assert!(!Simplex::from([0, 3]).is_face_of(&t));
        assert!(Simplex::default().is_face_of(&t));
        assert_eq!(t.facets().count(), 3);
        assert_eq!(t.faces().len(), 7);
    }

    #[test]
    fn closure_of_triangle() {
        let c = SimplicialComplex::from_maximal([Simplex::from([0, 1, 2])]);
        assert_eq!(c.f_vector(), alloc::vec![3, 3, 1]);
        assert_eq!(c.euler_characteristic(), 1);
        assert_eq!(c.maximal_simplices(), alloc::vec![Simplex::from([0, 1, 2])]);
    }

    #[test]
    fn lexicographic_order_is_prefix_first() {
        assert!(Simplex::from([0, 1]) < Simplex::from([0, 1, 2]));
        assert!(Simplex::from([0, 1, 2]) < Simplex::from([0, 2]));
    }
}

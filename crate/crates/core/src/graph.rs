//! Neighborhood graphs, maximal clique enumeration and witness families.

use alloc::vec;
use alloc::vec::Vec;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::metric::{FiniteMetric, Norm, PointCloudLp};
use crate::simplex::Simplex;
use crate::{Error, Result};

/// Fixed-width bitset over vertex ids.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BitSet {
    words: Vec<u64>,
}

impl BitSet {
    pub fn new(n: usize) -> Self {
        BitSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::new(n);
        for i in 0..n {
            s.insert(i);
        }
        s
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    pub fn and_not(&self, other: &BitSet) -> BitSet {
        BitSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    pub fn intersection_count(&self, other: &BitSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * 64 + bit)
            })
        })
    }
}

/// Simple undirected graph stored as symmetric adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                g.add_edge(i, j);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::new(n);
        for &(a, b) in edges {
            g.add_edge(a, b);
        }
        g
    }

    /// Adds `{a, b}`; self-loops are ignored.
    pub fn add_edge(&mut self, a: usize, b: usize) {
        if a != b {
            self.rows[a].insert(b);
            self.rows[b].insert(a);
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.rows[a].contains(b)
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count()
    }

    /// Edges `(i, j)` with `i < j`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.n {
            for j in self.rows[i].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn is_clique(&self, vertices: &[u32]) -> bool {
        vertices.iter().enumerate().all(|(i, &a)| {
            vertices[i + 1..]
                .iter()
                .all(|&b| self.adjacent(a as usize, b as usize))
        })
    }
}

/// Maximal cliques as sorted vertex lists, in lexicographic order.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct CliqueSet {
    cliques: Vec<Simplex>,
}

impl CliqueSet {
    pub fn from_unsorted(mut cliques: Vec<Simplex>) -> Self {
        cliques.sort();
        cliques.dedup();
        CliqueSet { cliques }
    }

    pub fn cliques(&self) -> &[Simplex] {
        &self.cliques
    }

    pub fn into_cliques(self) -> Vec<Simplex> {
        self.cliques
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.cliques.binary_search(s).is_ok()
    }
}

/// Edge `{i, j}` iff `d(i, j) ≤ 2r`.
pub fn neighborhood_graph(m: &FiniteMetric, r: f64) -> Graph {
    let n = m.len();
    let mut g = Graph::new(n);
    let two_r = 2.0 * r;
    for i in 0..n {
        for j in (i + 1)..n {
            if m.get(i, j) <= two_r {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// All maximal cliques by Bron–Kerbosch with Tomita pivoting, with the
/// outer level run in degeneracy order.
pub fn maximal_cliques(g: &Graph) -> CliqueSet {
    let n = g.len();
    let mut out = Vec::new();
    let mut current = Vec::new();
    let mut processed = BitSet::new(n);
    for v in degeneracy_order(g) {
        let nbrs = g.neighbors(v);
        let p = nbrs.and_not(&processed);
        let x = nbrs.and(&processed);
        current.push(v as u32);
        pivot_expand(g, &mut current, p, x, &mut out);
        current.pop();
        processed.insert(v);
    }
    CliqueSet::from_unsorted(out)
}

fn pivot_expand(
    g: &Graph,
    current: &mut Vec<u32>,
    mut p: BitSet,
    mut x: BitSet,
    out: &mut Vec<Simplex>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(Simplex::new(current.clone()));
        }
        return;
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| p.intersection_count(g.neighbors(u)))
        .expect("p is nonempty");
    let candidates: Vec<usize> = p.and_not(g.neighbors(pivot)).iter().collect();
    for v in candidates {
        let nbrs = g.neighbors(v);
        current.push(v as u32);
        pivot_expand(g, current, p.and(nbrs), x.and(nbrs), out);
        current.pop();
        p.remove(v);
        x.insert(v);
    }
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| degree[v])
            .expect("vertices remain");
        removed[v] = true;
        order.push(v);
        for u in g.neighbors(v).iter() {
            if !removed[u] {
                degree[u] -= 1;
            }
        }
    }
    order
}

/// The cocktail party graph on `2n` vertices: edge `{i, j}` iff `|i − j| ≠ n`.
pub fn cocktail_graph(n: usize) -> Graph {
    let mut g = Graph::new(2 * n);
    for i in 0..2 * n {
        for j in (i + 1)..2 * n {
            if j - i != n {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// `count = 2n` points `(cos(πi/n), sin(πi/n))` on the unit circle in ℓ2.
///
/// For `0 < delta < 0.1` the neighborhood graph at `r = 1 − delta` is the
/// cocktail party graph `C_n` (antipodes are `i` and `i + n`).
pub fn circle_points(count: usize, delta: f64) -> Result<PointCloudLp> {
    if count % 2 == 1 {
        return Err(Error::invalid("circle_points needs an even count"));
    }
    if !(delta > 0.0 && delta < 0.1) {
        return Err(Error::invalid("circle_points needs 0 < delta < 0.1"));
    }
    let n = (count / 2) as f64;
    let coords = (0..count)
        .map(|i| {
            let angle = core::f64::consts::PI * i as f64 / n;
            vec![libm::cos(angle), libm::sin(angle)]
        })
        .collect();
    PointCloudLp::new(coords, Norm::L2)
}

/// Uniform double in `[0, 1)` from the top 53 bits.
#[inline]
pub fn uniform_f64(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// `n` i.i.d. uniform points in `[0,1]²` from a SplitMix64-seeded
/// xoshiro256** stream, read as `x_0, y_0, x_1, y_1, ...`.
pub fn random_unit_square(n: usize, seed: u64) -> PointCloudLp {
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let coords = (0..n)
        .map(|_| {
            let x = uniform_f64(&mut rng);
            let y = uniform_f64(&mut rng);
            vec![x, y]
        })
        .collect();
    PointCloudLp::new(coords, Norm::L2).expect("finite coordinates")
}

/// Maximal clique count of the `r`-neighborhood graph of `n` seeded
/// uniform points in the unit square.
pub fn random_square_clique_count(n: usize, r: f64, seed: u64) -> usize {
    let m = FiniteMetric::from_points(&random_unit_square(n, seed));
    maximal_cliques(&neighborhood_graph(&m, r)).len()
}

//! Finite metric spaces from ℓp point clouds, explicit matrices and graphs.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Triangle-inequality slack accepted for explicit matrices.
pub const TRIANGLE_TOLERANCE: f64 = 1e-9;

/// An ℓp norm exponent `p ∈ [1, ∞]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Norm(f64);

impl Norm {
    pub const L1: Norm = Norm(1.0);
    pub const L2: Norm = Norm(2.0);
    pub const LINF: Norm = Norm(f64::INFINITY);

    pub fn new(p: f64) -> Result<Norm> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidExponent(p));
        }
        Ok(Norm(p))
    }

    pub fn exponent(self) -> f64 {
        self.0
    }

    pub fn is_infinite(self) -> bool {
        self.0 == f64::INFINITY
    }

    /// The exponent `q` with `1/p + 1/q = 1`.
    pub fn dual(self) -> Norm {
        if self.0 == 1.0 {
            Norm::LINF
        } else if self.is_infinite() {
            Norm::L1
        } else {
            Norm(self.0 / (self.0 - 1.0))
        }
    }

    /// `‖x‖_p`.
    pub fn norm(self, x: &[f64]) -> f64 {
        let p = self.0;
        if p == 1.0 {
            x.iter().map(|v| v.abs()).sum()
        } else if p == 2.0 {
            libm::sqrt(x.iter().map(|v| v * v).sum())
        } else if self.is_infinite() {
            x.iter().fold(0.0, |m, v| m.max(v.abs()))
        } else {
            // Scale by the max entry so large p does not overflow.
            let scale = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
            if scale == 0.0 {
                return 0.0;
            }
            let s: f64 = x.iter().map(|v| libm::pow(v.abs() / scale, p)).sum();
            scale * libm::pow(s, 1.0 / p)
        }
    }

    /// `‖a − b‖_p` for equal-length vectors.
    pub fn distance(self, a: &[f64], b: &[f64]) -> f64 {
        debug_assert_eq!(a.len(), b.len());
        let diff: Vec<f64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
        self.norm(&diff)
    }
}

/// `‖a − b‖_p`, with `p = f64::INFINITY` for the max norm.
pub fn lp_distance(a: &[f64], b: &[f64], p: f64) -> Result<f64> {
    let norm = Norm::new(p)?;
    if a.len() != b.len() {
        return Err(Error::DimensionMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(norm.distance(a, b))
}

/// A finite point set in ℝ^d with the ℓp metric.
#[derive(Clone, Debug, PartialEq)]
pub struct PointCloudLp {
    dim: usize,
    norm: Norm,
    coords: Vec<Vec<f64>>,
}

impl PointCloudLp {
    pub fn new(coords: Vec<Vec<f64>>, norm: Norm) -> Result<Self> {
        let dim = coords.first().map_or(0, Vec::len);
        for (i, c) in coords.iter().enumerate() {
            if c.len() != dim {
                return Err(Error::DimensionMismatch {
                    left: dim,
                    right: c.len(),
                });
            }
            if c.iter().any(|v| !v.is_finite()) {
                return Err(Error::invalid(format!(
                    "point {i} has a non-finite coordinate"
                )));
            }
        }
        Ok(PointCloudLp { dim, norm, coords })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> &[Vec<f64>] {
        &self.coords
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i]
    }

    pub fn with_norm(&self, norm: Norm) -> PointCloudLp {
        PointCloudLp {
            norm,
            ..self.clone()
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Provenance {
    Points(PointCloudLp),
    Explicit,
}

/// Symmetric distance data on `n` points, indexed in input order.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteMetric {
    n: usize,
    dist: Vec<f64>,
    provenance: Provenance,
}

impl FiniteMetric {
    pub fn from_points(points: &PointCloudLp) -> FiniteMetric {
        let n = points.len();
        let mut dist = vec![0.0; n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let d = points.norm.distance(points.point(i), points.point(j));
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        FiniteMetric {
            n,
            dist,
            provenance: Provenance::Points(points.clone()),
        }
    }

    /// Builds a metric from a full row-major `n × n` matrix.
    ///
    /// Symmetry, zero diagonal and nonnegativity are always enforced; the
    /// triangle inequality only when `allow_semimetric` is false.
    pub fn from_matrix(n: usize, dist: Vec<f64>, allow_semimetric: bool) -> Result<FiniteMetric> {
        if dist.len() != n * n {
            return Err(Error::DimensionMismatch {
                left: n * n,
                right: dist.len(),
            });
        }
        for i in 0..n {
            if dist[i * n + i] != 0.0 {
                return Err(Error::NotAMetric(format!("zero diagonal at {i}")));
            }
            for j in 0..n {
                let d = dist[i * n + j];
                if !d.is_finite() || d < 0.0 {
                    return Err(Error::NotAMetric(format!(
                        "nonnegativity at ({i},{j}): {d}"
                    )));
                }
                if d != dist[j * n + i] {
                    return Err(Error::NotAMetric(format!("symmetry at ({i},{j})")));
                }
            }
        }
        let m = FiniteMetric {
            n,
            dist,
            provenance: Provenance::Explicit,
        };
        if !allow_semimetric {
            if let Some((i, j, k)) = m.triangle_violation(TRIANGLE_TOLERANCE) {
                return Err(Error::NotAMetric(format!(
                    "the triangle inequality at ({i},{j},{k})"
                )));
            }
        }
        Ok(m)
    }

    /// Builds a metric from the strict lower triangle, row by row:
    /// `d[1][0], d[2][0], d[2][1], d[3][0], ...`.
    pub fn from_lower_triangle(
        n: usize,
        lower: &[f64],
        allow_semimetric: bool,
    ) -> Result<FiniteMetric> {
        let expected = n * n.saturating_sub(1) / 2;
        if lower.len() != expected {
            return Err(Error::DimensionMismatch {
                left: expected,
                right: lower.len(),
            });
        }
        let mut dist = vec![0.0; n * n];
        let mut it = lower.iter();
        for i in 1..n {
            for j in 0..i {
                let d = *it.next().expect("length checked");
                dist[i * n + j] = d;
                dist[j * n + i] = d;
            }
        }
        FiniteMetric::from_matrix(n, dist, allow_semimetric)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.dist[i * self.n + j]
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Strict lower triangle in the distance-file order.
    pub fn lower_triangle(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for i in 1..self.n {
            for j in 0..i {
                out.push(self.get(i, j));
            }
        }
        out
    }

    pub fn diameter(&self) -> f64 {
        self.dist.iter().fold(0.0, |m, &d| m.max(d))
    }

    /// First triple where `d(i,k) > d(i,j) + d(j,k) + tol`, if any.
    pub fn triangle_violation(&self, tol: f64) -> Option<(usize, usize, usize)> {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if self.get(i, k) > self.get(i, j) + self.get(j, k) + tol {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// Sub-metric on the first `count` points.
    pub fn restrict(&self, count: usize) -> FiniteMetric {
        let count = count.min(self.n);
        let mut dist = Vec::with_capacity(count * count);
        for i in 0..count {
            for j in 0..count {
                dist.push(self.get(i, j));
            }
        }
        let provenance = match &self.provenance {
            Provenance::Points(p) => Provenance::Points(
                PointCloudLp::new(p.coords[..count].to_vec(), p.norm).expect("sub-cloud"),
            ),
            Provenance::Explicit => Provenance::Explicit,
        };
        FiniteMetric {
            n: count,
            dist,
            provenance,
        }
    }
}

/// Twice the BFS hop metric of a connected graph on `n` vertices.
pub fn doubled_shortest_path_metric(n: usize, edges: &[(usize, usize)]) -> Result<FiniteMetric> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return Err(Error::invalid(format!(
                "edge ({a},{b}) out of range for {n} vertices"
            )));
        }
        if a != b {
            adj[a].push(b);
            adj[b].push(a);
        }
    }
    let mut dist = vec![0.0; n * n];
    for src in 0..n {
        let mut hops = vec![usize::MAX; n];
        hops[src] = 0;
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if hops[v] == usize::MAX {
                    hops[v] = hops[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (dst, &h) in hops.iter().enumerate() {
            if h == usize::MAX {
                return Err(Error::Disconnected);
            }
            dist[src * n + dst] = 2.0 * h as f64;
        }
    }
    Ok(FiniteMetric {
        n,
        dist,
        provenance: Provenance::Explicit,
    })
}

/// Sorts ascending and removes exact duplicates.
pub(crate) fn sorted_unique(mut values: Vec<f64>) -> Vec<f64> {
    values.sort_by(f64::total_cmp);
    values.dedup();
    values
}

/// `{0} ∪ {d(i,j)/2 : i < j}`, ascending, exact duplicates removed.
pub fn rips_critical_radii(m: &FiniteMetric) -> Vec<f64> {
    let mut values = vec![0.0];
    for i in 0..m.len() {
        for j in (i + 1)..m.len() {
            values.push(m.get(i, j) / 2.0);
        }
    }
    sorted_unique(values)
}

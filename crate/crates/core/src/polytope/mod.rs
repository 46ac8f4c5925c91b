//! Polytopes approximating ℓp balls and their intersection-graph filtration.

mod dudley;
mod filtration;
pub mod lp;
mod packing;

pub use dudley::{
    dudley_parameters, dudley_polytope, exact_box_template, facet_bound, DudleyParameters,
};
pub use filtration::{
    from_tangencies, polytope_filtration, sandwich_check_polytope, tangency_radius,
    PolytopeFiltration, TANGENCY_ITERATIONS,
};
pub use packing::{sphere_packing, Packing, SPHERE_RADIUS};

use alloc::vec::Vec;

use crate::{Error, Result};

/// `{x : a·x ≤ b}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Halfspace {
    pub a: Vec<f64>,
    pub b: f64,
}

impl Halfspace {
    pub fn new(a: Vec<f64>, b: f64) -> Result<Self> {
        if a.iter().all(|&c| c == 0.0) || a.iter().any(|c| !c.is_finite()) || !b.is_finite() {
            return Err(Error::invalid(
                "halfspace normal must be finite and nonzero",
            ));
        }
        Ok(Halfspace { a, b })
    }

    pub fn value(&self, x: &[f64]) -> f64 {
        self.a.iter().zip(x).map(|(a, x)| a * x).sum()
    }
}

/// Intersection of finitely many halfspaces in ℝ^dim.
#[derive(Clone, Debug, PartialEq)]
pub struct Polytope {
    dim: usize,
    halfspaces: Vec<Halfspace>,
    origin_template: bool,
}

impl Polytope {
    pub fn new(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self> {
        if halfspaces.is_empty() {
            return Err(Error::invalid("a polytope needs at least one halfspace"));
        }
        if let Some(h) = halfspaces.iter().find(|h| h.a.len() != dim) {
            return Err(Error::DimensionMismatch {
                left: dim,
                right: h.a.len(),
            });
        }
        Ok(Polytope {
            dim,
            halfspaces,
            origin_template: false,
        })
    }

    /// Marks this polytope as a unit-ball template centered at the origin.
    pub fn into_template(mut self) -> Self {
        self.origin_template = true;
        self
    }

    /// The axis-aligned box `∏ [lo_i, hi_i]`.
    pub fn axis_box(lo: &[f64], hi: &[f64]) -> Result<Self> {
        if lo.len() != hi.len() {
            return Err(Error::DimensionMismatch {
                left: lo.len(),
                right: hi.len(),
            });
        }
        let d = lo.len();
        let mut hs = Vec::with_capacity(2 * d);
        for i in 0..d {
            let mut e = alloc::vec![0.0; d];
            e[i] = 1.0;
            hs.push(Halfspace::new(e.clone(), hi[i])?);
            e[i] = -1.0;
            hs.push(Halfspace::new(e, -lo[i])?);
        }
        Polytope::new(d, hs)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    pub fn facet_count(&self) -> usize {
        self.halfspaces.len()
    }

    pub fn is_template(&self) -> bool {
        self.origin_template
    }

    pub fn contains(&self, x: &[f64], tol: f64) -> bool {
        self.halfspaces.iter().all(|h| h.value(x) <= h.b + tol)
    }

    /// `center + radius · self`; `radius = 0` gives the point `center`
    /// when `self` is bounded.
    pub fn homothet(&self, center: &[f64], radius: f64) -> Polytope {
        Polytope {
            dim: self.dim,
            halfspaces: self
                .halfspaces
                .iter()
                .map(|h| Halfspace {
                    a: h.a.clone(),
                    b: radius * h.b + h.value(center),
                })
                .collect(),
            origin_template: false,
        }
    }

    /// True iff `{a·x ≤ b}` of both polytopes has a common solution.
    pub fn intersects(&self, other: &Polytope) -> Result<bool> {
        polytopes_intersect(self, other)
    }

    /// Vertices by brute-force facet intersection; supports `dim ∈ {2, 3}`.
    pub fn vertices(&self, tol: f64) -> Result<Vec<Vec<f64>>> {
        match self.dim {
            2 => Ok(self.vertices_2d(tol)),
            3 => Ok(self.vertices_3d(tol)),
            d => Err(Error::invalid(alloc::format!(
                "vertex enumeration needs dimension 2 or 3, not {d}"
            ))),
        }
    }

    fn vertices_2d(&self, tol: f64) -> Vec<Vec<f64>> {
        let hs = &self.halfspaces;
        let mut out = Vec::new();
        for i in 0..hs.len() {
            for j in (i + 1)..hs.len() {
                let (a, b) = (&hs[i], &hs[j]);
                let det = a.a[0] * b.a[1] - a.a[1] * b.a[0];
                if det.abs() < 1e-14 {
                    continue;
                }
                let x = (a.b * b.a[1] - a.a[1] * b.b) / det;
                let y = (a.a[0] * b.b - a.b * b.a[0]) / det;
                let v = alloc::vec![x, y];
                if self.contains(&v, tol) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// Clips each facet plane to a polygon against the other halfspaces.
    fn vertices_3d(&self, tol: f64) -> Vec<Vec<f64>> {
        let hs = &self.halfspaces;
        let mut out: Vec<Vec<f64>> = Vec::new();
        let big = 1e6;
        for (i, h) in hs.iter().enumerate() {
            let n = normalize3(&h.a);
            let scale = libm::sqrt(dot3(&h.a, &h.a));
            let origin: [f64; 3] = [n[0] * h.b / scale, n[1] * h.b / scale, n[2] * h.b / scale];
            let helper = if n[0].abs() < 0.9 {
                [1.0, 0.0, 0.0]
            } else {
                [0.0, 1.0, 0.0]
            };
            let u = normalize3(&cross3(&n, &helper));
            let v = cross3(&n, &u);
            let mut poly: Vec<[f64; 2]> =
                alloc::vec![[-big, -big], [big, -big], [big, big], [-big, big]];
            for (j, g) in hs.iter().enumerate() {
                if j == i || poly.is_empty() {
                    continue;
                }
                // g.a·(origin + s u + t v) ≤ g.b
                let cu = dot3(&g.a, &u);
                let cv = dot3(&g.a, &v);
                let c0 = g.b - dot3(&g.a, &origin);
                poly = clip_polygon(&poly, cu, cv, c0);
            }
            for p in poly {
                let x: Vec<f64> = (0..3)
                    .map(|k| origin[k] + p[0] * u[k] + p[1] * v[k])
                    .collect();
                if self.contains(&x, tol) {
                    out.push(x);
                }
            }
        }
        out
    }
}

fn dot3(a: &[f64], b: &[f64]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross3(a: &[f64], b: &[f64]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize3(a: &[f64]) -> [f64; 3] {
    let n = libm::sqrt(dot3(a, a));
    [a[0] / n, a[1] / n, a[2] / n]
}

/// Sutherland–Hodgman clip of a convex polygon by `cu·s + cv·t ≤ c0`.
fn clip_polygon(poly: &[[f64; 2]], cu: f64, cv: f64, c0: f64) -> Vec<[f64; 2]> {
    let f = |p: &[f64; 2]| cu * p[0] + cv * p[1] - c0;
    let mut out = Vec::with_capacity(poly.len() + 1);
    for i in 0..poly.len() {
        let p = poly[i];
        let q = poly[(i + 1) % poly.len()];
        let (fp, fq) = (f(&p), f(&q));
        if fp <= 0.0 {
            out.push(p);
        }
        if (fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0) {
            let s = fp / (fp - fq);
            out.push([p[0] + s * (q[0] - p[0]), p[1] + s * (q[1] - p[1])]);
        }
    }
    out
}

/// Feasibility of the combined halfspace system of `p` and `q`.
pub fn polytopes_intersect(p: &Polytope, q: &Polytope) -> Result<bool> {
    if p.dim != q.dim {
        return Err(Error::DimensionMismatch {
            left: p.dim,
            right: q.dim,
        });
    }
    let rows: Vec<(&[f64], f64)> = p
        .halfspaces
        .iter()
        .chain(&q.halfspaces)
        .map(|h| (h.a.as_slice(), h.b))
        .collect();
    lp::is_feasible(&rows, p.dim)
}

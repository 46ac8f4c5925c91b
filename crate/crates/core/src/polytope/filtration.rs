//! The filtered intersection graph of polytope homothets `x + r·P`.

use alloc::vec;
use alloc::vec::Vec;

use super::{dudley_polytope, exact_box_template, polytopes_intersect, Polytope};
use crate::filtration::CriticalFiltration;
use crate::metric::{rips_critical_radii, sorted_unique, FiniteMetric, PointCloudLp};
use crate::{Error, Result};

pub const TANGENCY_ITERATIONS: usize = 40;

/// Pairwise tangency radii and the clique filtration they induce.
#[derive(Clone, Debug, PartialEq)]
pub struct PolytopeFiltration {
    pub template: Polytope,
    /// Row-major `n × n` tangency radii, zero on the diagonal.
    pub tangency: Vec<f64>,
    pub filtration: CriticalFiltration,
}

impl PolytopeFiltration {
    pub fn len(&self) -> usize {
        libm::sqrt(self.tangency.len() as f64) as usize
    }

    pub fn is_empty(&self) -> bool {
        self.tangency.is_empty()
    }

    pub fn tangency(&self, i: usize, j: usize) -> f64 {
        self.tangency[i * self.len() + j]
    }
}

/// Upper end of the bisection bracket for the least `r` with
/// `(x + rP) ∩ (y + rP) ≠ ∅`, in 40 halvings of `[0, ‖x − y‖_p / 2]`.
pub fn tangency_radius(template: &Polytope, x: &[f64], y: &[f64], initial_hi: f64) -> Result<f64> {
    if x == y {
        return Ok(0.0);
    }
    let meets = |r: f64| polytopes_intersect(&template.homothet(x, r), &template.homothet(y, r));
    let mut hi = if initial_hi > 0.0 { initial_hi } else { 1.0 };
    let mut doublings = 0;
    while !meets(hi)? {
        hi *= 2.0;
        doublings += 1;
        if doublings > 200 {
            return Err(Error::invariant(
                "template homothets never meet; unbounded template?",
            ));
        }
    }
    let mut lo = 0.0;
    for _ in 0..TANGENCY_ITERATIONS {
        let mid = 0.5 * (lo + hi);
        if meets(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

/// The polytope filtration of `X`: a Dudley template for `(d, p, ε)`, or the
/// exact unit box when `exact_box` is set (which requires `p = ∞`).
///
/// Grades are `{0}` plus the distinct tangency radii; the edge `{i, j}`
/// appears at the tangency radius of the pair.
pub fn polytope_filtration(
    x: &PointCloudLp,
    epsilon: f64,
    exact_box: bool,
) -> Result<PolytopeFiltration> {
    let template = if exact_box {
        if !x.norm().is_infinite() {
            return Err(Error::invalid("exact boxes are only valid for p = ∞"));
        }
        exact_box_template(x.dim().max(1))?
    } else {
        dudley_polytope(x.dim().max(1), x.norm(), epsilon)?
    };
    let pairs: Vec<(usize, usize)> = (0..x.len())
        .flat_map(|i| ((i + 1)..x.len()).map(move |j| (i, j)))
        .collect();
    let radii = pairs
        .iter()
        .map(|&(i, j)| {
            let hi = x.norm().distance(x.point(i), x.point(j)) / 2.0;
            tangency_radius(&template, x.point(i), x.point(j), hi)
        })
        .collect::<Result<Vec<f64>>>()?;
    from_tangencies(x.len(), template, &pairs, &radii)
}

/// Assembles a [`PolytopeFiltration`] from precomputed pairwise radii.
pub fn from_tangencies(
    n: usize,
    template: Polytope,
    pairs: &[(usize, usize)],
    radii: &[f64],
) -> Result<PolytopeFiltration> {
    let mut tangency = vec![0.0; n * n];
    for (&(i, j), &r) in pairs.iter().zip(radii) {
        tangency[i * n + j] = r;
        tangency[j * n + i] = r;
    }
    let mut grades = radii.to_vec();
    grades.push(0.0);
    let grades = sorted_unique(grades);
    let grade_of = |r: f64| {
        grades
            .binary_search_by(|g| g.total_cmp(&r))
            .expect("grade present")
    };
    let filtration = CriticalFiltration::from_edge_grades(n, grades.clone(), |i, j| {
        Some(grade_of(tangency[i * n + j]))
    })?;
    Ok(PolytopeFiltration {
        template,
        tangency,
        filtration,
    })
}

/// `G(X)_r ⊆ 𝒫(X)_r ⊆ G(X)_{r(1+ε)}` on edges at every grade of either
/// filtration, allowing `tol` of slack on the radius.
pub fn sandwich_check_polytope(x: &PointCloudLp, pf: &PolytopeFiltration, epsilon: f64) -> bool {
    let m = FiniteMetric::from_points(x);
    let tol = 1e-9 * m.diameter().max(1.0);
    let mut radii = rips_critical_radii(&m);
    radii.extend_from_slice(pf.filtration.grades());
    let radii = sorted_unique(radii);
    let n = x.len();
    radii.iter().all(|&r| {
        (0..n).all(|i| {
            ((i + 1)..n).all(|j| {
                let d = m.get(i, j);
                let t = pf.tangency(i, j);
                let lower = d > 2.0 * r || t <= r + tol;
                let upper = t > r || d <= 2.0 * r * (1.0 + epsilon) + tol;
                lower && upper
            })
        })
    })
}

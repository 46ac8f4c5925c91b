//! Dudley-style outer polytopes for the unit ℓp ball.
//!
//! A scaled ℓp ball `A = B^p_ρ` sits inside the Euclidean unit ball. For each
//! point `w` of a `(δ, δ/2)`-packing of the radius-3 sphere, the supporting
//! halfspace of `A` at its nearest point `n(w)` is kept. Then
//! `A ⊆ P ⊆ A + (δ²/4) B²`, and rescaling by `1/ρ` gives
//! `B^p_1 ⊆ P ⊆ B^p_{1+ε}` for the parameters below.

use alloc::vec::Vec;

use super::packing::sphere_packing;
use super::{Halfspace, Polytope};
use crate::metric::Norm;
use crate::{Error, Result};

/// Relative shrink applied to ε before building facets.
pub const EPSILON_SHRINK: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DudleyParameters {
    pub dim: usize,
    pub norm: Norm,
    pub epsilon: f64,
    /// `d^{|1/2 − 1/p|}`.
    pub d_prime: f64,
    /// Euclidean slack allowed around the scaled template.
    pub epsilon_prime: f64,
    /// Packing covering radius.
    pub delta: f64,
    /// Radius of the ℓp ball used as the template inside `B²_1`.
    pub rho: f64,
}

pub fn dudley_parameters(d: usize, norm: Norm, epsilon: f64) -> Result<DudleyParameters> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::invalid("epsilon must lie in (0, 1)"));
    }
    if d == 0 {
        return Err(Error::invalid("dimension must be at least 1"));
    }
    let p = norm.exponent();
    let inv_p = if norm.is_infinite() { 0.0 } else { 1.0 / p };
    let d_prime = libm::pow(d as f64, (0.5 - inv_p).abs());
    let epsilon_prime = epsilon * (1.0 - EPSILON_SHRINK) / d_prime;
    // h ≤ δ²/(4(2 − 2δ)) ≤ ε′ needs δ ≤ 7/8; capping at 1/2 leaves room.
    let delta = libm::sqrt(epsilon_prime).min(0.5);
    let rho = if p >= 2.0 { 1.0 / d_prime } else { 1.0 };
    Ok(DudleyParameters {
        dim: d,
        norm,
        epsilon,
        d_prime,
        epsilon_prime,
        delta,
        rho,
    })
}

/// `f(4√d/ε)` with `f(λ) = 2d(1 + 6√λ)^{d−1}`, the facet-count guarantee.
pub fn facet_bound(d: usize, epsilon: f64) -> f64 {
    let lambda = 4.0 * libm::sqrt(d as f64) / epsilon;
    2.0 * d as f64 * libm::pow(1.0 + 6.0 * libm::sqrt(lambda), d as f64 - 1.0)
}

/// A polytope `P` with `B^p_1 ⊆ P ⊆ B^p_{1+ε}`.
pub fn dudley_polytope(d: usize, norm: Norm, epsilon: f64) -> Result<Polytope> {
    let params = dudley_parameters(d, norm, epsilon)?;
    if d == 1 {
        return Ok(Polytope::axis_box(&[-1.0], &[1.0])?.into_template());
    }
    let packing = sphere_packing(d, params.delta)?;
    let dual = norm.dual();
    let mut halfspaces = Vec::with_capacity(packing.len());
    for w in &packing.points {
        let nearest = project_onto_ball(w, norm, params.rho);
        let diff: Vec<f64> = w.iter().zip(&nearest).map(|(a, b)| a - b).collect();
        let len = Norm::L2.norm(&diff);
        let a: Vec<f64> = diff.iter().map(|c| c / len).collect();
        let b = dual.norm(&a);
        halfspaces.push(Halfspace::new(a, b)?);
    }
    Ok(Polytope::new(d, halfspaces)?.into_template())
}

/// The exact unit ℓ∞ ball `[−1, 1]^d`.
pub fn exact_box_template(d: usize) -> Result<Polytope> {
    let lo = alloc::vec![-1.0; d];
    let hi = alloc::vec![1.0; d];
    Ok(Polytope::axis_box(&lo, &hi)?.into_template())
}

/// Euclidean projection of `w` onto `{x : ‖x‖_p ≤ rho}`.
pub(crate) fn project_onto_ball(w: &[f64], norm: Norm, rho: f64) -> Vec<f64> {
    if norm.norm(w) <= rho {
        return w.to_vec();
    }
    let p = norm.exponent();
    if p == 2.0 {
        let n = Norm::L2.norm(w);
        return w.iter().map(|c| c * rho / n).collect();
    }
    if norm.is_infinite() {
        return w.iter().map(|c| c.clamp(-rho, rho)).collect();
    }
    let abs: Vec<f64> = w.iter().map(|c| c.abs()).collect();
    let mags = if p == 1.0 {
        project_simplex(&abs, rho)
    } else {
        project_lp_magnitudes(&abs, p, rho)
    };
    w.iter()
        .zip(mags)
        .map(|(c, m)| if *c < 0.0 { -m } else { m })
        .collect()
}

/// Projection of a nonnegative vector onto `{u ≥ 0 : Σu = rho}`.
fn project_simplex(v: &[f64], rho: f64) -> Vec<f64> {
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cumulative = 0.0;
    let mut theta = 0.0;
    for (i, &s) in sorted.iter().enumerate() {
        cumulative += s;
        let candidate = (cumulative - rho) / (i + 1) as f64;
        if s > candidate {
            theta = candidate;
        }
    }
    v.iter().map(|&x| (x - theta).max(0.0)).collect()
}

/// Solves `u_i + μ u_i^{p−1} = v_i` with `Σ u_i^p = rho^p` by nested bisection.
fn project_lp_magnitudes(v: &[f64], p: f64, rho: f64) -> Vec<f64> {
    let solve = |mu: f64| -> Vec<f64> {
        v.iter()
            .map(|&vi| {
                let (mut lo, mut hi) = (0.0, vi);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if mid + mu * libm::pow(mid, p - 1.0) > vi {
                        hi = mid;
                    } else {
                        lo = mid;
                    }
                }
                0.5 * (lo + hi)
            })
            .collect()
    };
    let target = libm::pow(rho, p);
    let mass = |u: &[f64]| u.iter().map(|&x| libm::pow(x, p)).sum::<f64>();
    let mut hi = 1.0;
    while mass(&solve(hi)) > target {
        hi *= 2.0;
    }
    let mut lo = 0.0;
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mass(&solve(mid)) > target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    solve(hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projections_land_on_the_sphere() {
        let w = [2.0, -1.0, 0.5];
        for p in [1.0, 1.5, 2.0, 3.0, f64::INFINITY] {
            let norm = Norm::new(p).unwrap();
            let x = project_onto_ball(&w, norm, 1.0);
            assert!((norm.norm(&x) - 1.0).abs() < 1e-9, "p={p}");
        }
    }

    #[test]
    fn projection_is_nearest() {
        // Compare with a dense scan of the unit ℓ3 circle.
        let norm = Norm::new(3.0).unwrap();
        let w = [2.5, 1.2];
        let x = project_onto_ball(&w, norm, 1.0);
        let best = Norm::L2.distance(&w, &x);
        for i in 0..20_000 {
            let t = core::f64::consts::TAU * i as f64 / 20_000.0;
            let dir = [libm::cos(t), libm::sin(t)];
            let n = norm.norm(&dir);
            let y = [dir[0] / n, dir[1] / n];
            assert!(Norm::L2.distance(&w, &y) >= best - 1e-9);
        }
    }

    #[test]
    fn inner_containment_is_exact() {
        for p in [1.0, 2.0, f64::INFINITY] {
            let norm = Norm::new(p).unwrap();
            let poly = dudley_polytope(2, norm, 0.25).unwrap();
            for h in poly.halfspaces() {
                assert!(norm.dual().norm(&h.a) <= h.b);
            }
        }
    }

    #[test]
    fn one_dimensional_interval() {
        let poly = dudley_polytope(1, Norm::L2, 0.5).unwrap();
        assert_eq!(poly.facet_count(), 2);
        assert!(poly.contains(&[1.0], 0.0) && !poly.contains(&[1.0 + 1e-9], 0.0));
    }

    #[test]
    fn epsilon_range() {
        assert!(dudley_polytope(2, Norm::L2, 0.0).is_err());
        assert!(dudley_polytope(2, Norm::L2, 1.0).is_err());
    }

    #[test]
    fn outer_containment_in_the_plane() {
        for (p, eps) in [(2.0, 0.25), (f64::INFINITY, 0.25), (1.0, 0.5)] {
            let norm = Norm::new(p).unwrap();
            let poly = dudley_polytope(2, norm, eps).unwrap();
            let verts = poly.vertices(1e-9).unwrap();
            assert!(!verts.is_empty());
            for v in verts {
                assert!(norm.norm(&v) <= 1.0 + eps + 1e-6, "p={p}: {v:?}");
            }
            assert!((poly.facet_count() as f64) <= facet_bound(2, eps));
        }
    }
}

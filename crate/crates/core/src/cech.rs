//! Intrinsic Čech filtrations and the √2-approximation model.
//!
//! `ℐ(X)_r` contains `σ` iff some `x ∈ X` has `d(x, y) ≤ r` for all `y ∈ σ`,
//! so its maximal simplices are the containment-maximal balls `B(x)_r`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::filtration::CriticalFiltration;
use crate::graph::{maximal_cliques, neighborhood_graph};
use crate::metric::{rips_critical_radii, sorted_unique, FiniteMetric};
use crate::nerve::{build_nerve, Semifiltration};
use crate::simplex::Simplex;

/// Scale tag of [`j_model`]: stored grade `g` stands for radius `g/√2`.
pub const DIV_SQRT2: &str = "div_sqrt2";

/// Relative slack used when comparing radii across a √2 rescale.
pub const RESCALE_TOLERANCE: f64 = 1e-12;

/// The ball `B(center)_radius` inside `X`.
#[derive(Clone, PartialEq, Debug)]
pub struct BallSimplex {
    pub center: usize,
    pub radius: f64,
    pub members: Simplex,
}

pub fn ball(m: &FiniteMetric, center: usize, radius: f64) -> Simplex {
    Simplex::from_sorted(
        (0..m.len())
            .filter(|&y| m.get(center, y) <= radius)
            .map(|y| y as u32)
            .collect(),
    )
}

/// Containment-maximal balls of radius `r`, one per distinct vertex set,
/// witnessed by the smallest center, in lex order of the members.
pub fn maximal_balls(m: &FiniteMetric, radius: f64) -> Vec<BallSimplex> {
    let balls: Vec<Simplex> = (0..m.len()).map(|x| ball(m, x, radius)).collect();
    let mut out: Vec<BallSimplex> = Vec::new();
    for (x, b) in balls.iter().enumerate() {
        let dominated = balls
            .iter()
            .enumerate()
            .any(|(y, c)| (b != c && b.is_face_of(c)) || (b == c && y < x));
        if !dominated {
            out.push(BallSimplex {
                center: x,
                radius,
                members: b.clone(),
            });
        }
    }
    out.sort_by(|a, b| a.members.cmp(&b.members));
    out
}

/// Critical radii `{0} ∪ {d(i, j)}` of the intrinsic Čech filtration.
pub fn cech_critical_radii(m: &FiniteMetric) -> Vec<f64> {
    let mut values = alloc::vec![0.0];
    for i in 0..m.len() {
        for j in (i + 1)..m.len() {
            values.push(m.get(i, j));
        }
    }
    sorted_unique(values)
}

/// `ℐ(X)` with its maximal simplices and timelines.
pub fn intrinsic_cech_timelines(m: &FiniteMetric) -> CriticalFiltration {
    let grades = cech_critical_radii(m);
    let maximal = grades
        .iter()
        .map(|&r| maximal_balls(m, r).into_iter().map(|b| b.members).collect())
        .collect();
    CriticalFiltration::from_maximal(grades, maximal, None).expect("balls grow with the radius")
}

/// `𝒥(X)`: the nerve model of `ℐ(X)` tagged as rescaled by `1/√2`.
///
/// Grades are stored unscaled; the tag records the conversion.
pub fn j_model(m: &FiniteMetric, k_max: usize) -> Semifiltration {
    let f = intrinsic_cech_timelines(m).with_scale_tag(Some(String::from(DIV_SQRT2)));
    build_nerve(&f, k_max)
}

/// Query radius represented by a stored grade under `scale_tag`.
pub fn query_radius(grade: f64, scale_tag: Option<&str>) -> f64 {
    match scale_tag {
        Some(DIV_SQRT2) => grade / core::f64::consts::SQRT_2,
        _ => grade,
    }
}

fn cech_maximal(m: &FiniteMetric, r: f64) -> Vec<Simplex> {
    maximal_balls(m, r).into_iter().map(|b| b.members).collect()
}

fn contained_in_some(s: &Simplex, family: &[Simplex]) -> bool {
    family.iter().any(|c| s.is_face_of(c))
}

/// `ℐ(X)_r ⊆ ℛ(X)_r ⊆ ℐ(X)_{2r}` at every critical radius of either side.
///
/// Rips uses `d ≤ 2r` for edges and Čech uses balls of radius `r`, so both
/// are indexed by the same query radius.
pub fn sandwich_check_cech_rips(m: &FiniteMetric) -> bool {
    let mut radii = rips_critical_radii(m);
    radii.extend(cech_critical_radii(m));
    let radii = sorted_unique(radii);
    radii.iter().all(|&r| {
        let cech = cech_maximal(m, r);
        let cech_2r = cech_maximal(m, 2.0 * r);
        let g = neighborhood_graph(m, r);
        let rips = maximal_cliques(&g).into_cliques();
        cech.iter().all(|s| g.is_clique(s.vertices()))
            && rips.iter().all(|s| contained_in_some(s, &cech_2r))
    })
}

/// `𝒥(X)_r ⊆ ℛ(X)_{√2 r}` and `ℛ(X)_r ⊆ 𝒥(X)_{√2 r}` on the union of
/// critical radii, with the √2 factor applied once per comparison.
pub fn j_interleaving_check(m: &FiniteMetric) -> bool {
    let sqrt2 = core::f64::consts::SQRT_2;
    let slack = 1.0 + RESCALE_TOLERANCE;
    let mut radii = rips_critical_radii(m);
    radii.extend(cech_critical_radii(m).into_iter().map(|g| g / sqrt2));
    let radii = sorted_unique(radii);
    radii.iter().all(|&r| {
        // 𝒥(X)_r = ℐ(X)_{√2 r}.
        let j_r = cech_maximal(m, sqrt2 * r);
        let rips_up = neighborhood_graph(m, sqrt2 * r * slack);
        let rips_r = maximal_cliques(&neighborhood_graph(m, r)).into_cliques();
        let j_up = cech_maximal(m, 2.0 * r * slack);
        j_r.iter().all(|s| rips_up.is_clique(s.vertices()))
            && rips_r.iter().all(|s| contained_in_some(s, &j_up))
    })
}

//! `(δ, δ/2)`-packings of the radius-3 sphere in ℝ^d.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::metric::Norm;
use crate::{Error, Result};

pub const SPHERE_RADIUS: f64 = 3.0;

/// Points of the radius-3 sphere that cover it within `delta` and are
/// pairwise at least `delta / 2` apart, both in ℓ2.
#[derive(Clone, Debug, PartialEq)]
pub struct Packing {
    pub dim: usize,
    pub delta: f64,
    pub points: Vec<Vec<f64>>,
}

impl Packing {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// ℓ2 distance from `x` to the nearest packing point.
    pub fn distance_to(&self, x: &[f64]) -> f64 {
        self.points
            .iter()
            .map(|w| Norm::L2.distance(w, x))
            .fold(f64::INFINITY, f64::min)
    }

    pub fn min_separation(&self) -> f64 {
        let mut best = f64::INFINITY;
        for (i, a) in self.points.iter().enumerate() {
            for b in &self.points[i + 1..] {
                best = best.min(Norm::L2.distance(a, b));
            }
        }
        best
    }
}

/// Grid sample of `[−3, 3]^d` pushed onto the sphere and greedily thinned.
///
/// The grid spacing `h ≤ δ/(2√d)` keeps every sphere point within `h√d/2`
/// of a grid point, hence within `h√d ≤ δ/2` of a projected one; only grid
/// points within `h√d/2` of the sphere are projected. Thinning in
/// lexicographic grid order then keeps a point iff it is at least `δ/2`
/// from all kept points.
pub fn sphere_packing(d: usize, delta: f64) -> Result<Packing> {
    if d < 1 {
        return Err(Error::invalid("packing dimension must be at least 1"));
    }
    if !(delta > 0.0 && delta < 2.0 * SPHERE_RADIUS) {
        return Err(Error::invalid("packing delta must lie in (0, 6)"));
    }
    if d == 1 {
        return Ok(Packing {
            dim: 1,
            delta,
            points: vec![vec![-SPHERE_RADIUS], vec![SPHERE_RADIUS]],
        });
    }
    let sqrt_d = libm::sqrt(d as f64);
    let steps = libm::ceil(2.0 * SPHERE_RADIUS / (delta / (2.0 * sqrt_d))) as usize;
    let h = 2.0 * SPHERE_RADIUS / steps as f64;
    let shell = h * sqrt_d / 2.0;
    let sep = delta / 2.0;

    let mut kept: Vec<Vec<f64>> = Vec::new();
    let mut buckets: BTreeMap<Vec<i64>, Vec<usize>> = BTreeMap::new();
    let mut index = vec![0usize; d];
    let mut g = vec![0.0; d];
    'grid: loop {
        for (c, &i) in g.iter_mut().zip(&index) {
            *c = -SPHERE_RADIUS + h * i as f64;
        }
        let norm = Norm::L2.norm(&g);
        if norm > 0.0 && (norm - SPHERE_RADIUS).abs() <= shell {
            let p: Vec<f64> = g.iter().map(|c| c * SPHERE_RADIUS / norm).collect();
            let key: Vec<i64> = p.iter().map(|c| libm::floor(c / sep) as i64).collect();
            if !near_kept(&p, &key, &kept, &buckets, sep) {
                buckets.entry(key).or_default().push(kept.len());
                kept.push(p);
            }
        }
        // Advance the odometer, last coordinate fastest.
        let mut axis = d;
        loop {
            if axis == 0 {
                break 'grid;
            }
            axis -= 1;
            index[axis] += 1;
            if index[axis] <= steps {
                break;
            }
            index[axis] = 0;
        }
    }
    Ok(Packing {
        dim: d,
        delta,
        points: kept,
    })
}

fn near_kept(
    p: &[f64],
    key: &[i64],
    kept: &[Vec<f64>],
    buckets: &BTreeMap<Vec<i64>, Vec<usize>>,
    sep: f64,
) -> bool {
    let d = key.len();
    let mut offset = vec![-1i64; d];
    let mut probe = vec![0i64; d];
    loop {
        for i in 0..d {
            probe[i] = key[i] + offset[i];
        }
        if let Some(ids) = buckets.get(&probe) {
            if ids.iter().any(|&id| Norm::L2.distance(&kept[id], p) < sep) {
                return true;
            }
        }
        let mut axis = d;
        loop {
            if axis == 0 {
                return false;
            }
            axis -= 1;
            offset[axis] += 1;
            if offset[axis] <= 1 {
                break;
            }
            offset[axis] = -1;
        }
    }
}

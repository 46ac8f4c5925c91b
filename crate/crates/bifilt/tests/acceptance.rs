//! Acceptance suite: one line per criterion, nonzero exit on any gating failure.

use std::collections::BTreeSet;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use bifilt::commands::polytope_filtration_parallel;
use bifilt_core::bifiltration::{kerber_schreiber, verify_weak_equivalence_grid, BifiltrationCell};
use bifilt_core::cech::{intrinsic_cech_timelines, j_interleaving_check, sandwich_check_cech_rips};
use bifilt_core::graph::{
    circle_points, cocktail_graph, maximal_cliques, neighborhood_graph, random_square_clique_count,
    random_unit_square, uniform_f64, Graph,
};
use bifilt_core::homology::betti_numbers;
use bifilt_core::metric::doubled_shortest_path_metric;
use bifilt_core::nerve::build_nerve;
use bifilt_core::polytope::{
    dudley_polytope, facet_bound, polytopes_intersect, sandwich_check_polytope, Polytope,
};
use bifilt_core::subdivision::{
    subdivision_bifiltration_at, subdivision_level, Subdivision, SubdivisionOptions,
};
use bifilt_core::{CriticalFiltration, FiniteMetric, Norm, Simplex, SimplicialComplex};
use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;
use rayon::prelude::*;

type Check = Result<String, String>;

struct Suite {
    failures: Vec<usize>,
}

impl Suite {
    fn run(
        &mut self,
        id: usize,
        name: &str,
        gating: bool,
        budget: Option<Duration>,
        f: impl FnOnce() -> Check,
    ) {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed();
        let result = match (result, budget) {
            (Ok(_), Some(b)) if elapsed > b => {
                Err(format!("exceeded the {:.0} s budget", b.as_secs_f64()))
            }
            (r, _) => r,
        };
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d.as_str()),
            Err(d) => ("FAIL", d.as_str()),
        };
        let status = if gating { status } else { "INFO" };
        println!(
            "criterion {id:>2} {status} {name} [{:.2} s] {detail}",
            elapsed.as_secs_f64()
        );
        if gating && result.is_err() {
            self.failures.push(id);
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn doubled_cocktail(n: usize) -> FiniteMetric {
    doubled_shortest_path_metric(2 * n, &cocktail_graph(n).edges()).unwrap()
}

/// Seeded ℓ₂ clouds and doubled cocktail metrics shared by criteria 3, 4 and 12.
fn oracle_inputs() -> Vec<(String, FiniteMetric)> {
    let mut out: Vec<(String, FiniteMetric)> = [4, 5, 6, 5, 6]
        .iter()
        .enumerate()
        .map(|(seed, &n)| {
            (
                format!("cloud(n={n},seed={seed})"),
                FiniteMetric::from_points(&random_unit_square(n, seed as u64)),
            )
        })
        .collect();
    for n in [2, 3] {
        out.push((format!("doubled-C{n}"), doubled_cocktail(n)));
    }
    out
}

fn grade_index(f: &CriticalFiltration, r: f64) -> usize {
    f.grades()
        .iter()
        .position(|&g| g == r)
        .expect("grade present")
}

fn criterion_1() -> Check {
    for n in 1..=12 {
        let count = maximal_cliques(&cocktail_graph(n)).len();
        ensure(count == 1 << n, || format!("n={n}: {count} cliques"))?;
    }
    Ok("2^n maximal cliques for n = 1..12".into())
}

fn criterion_2() -> Check {
    for n in 2..=8 {
        let x = circle_points(2 * n, 0.01).map_err(|e| e.to_string())?;
        let g = neighborhood_graph(&FiniteMetric::from_points(&x), 0.99);
        let non_neighbor = |i: usize| -> Vec<usize> {
            (0..2 * n)
                .filter(|&j| j != i && !g.adjacent(i, j))
                .collect()
        };
        for i in 0..2 * n {
            let miss = non_neighbor(i);
            ensure(miss.len() == 1, || {
                format!("n={n}: vertex {i} misses {miss:?}")
            })?;
            ensure(non_neighbor(miss[0]) == vec![i], || {
                format!("n={n}: non-antipodal pair at {i}")
            })?;
        }
        let count = maximal_cliques(&g).len();
        ensure(count == 1 << n, || format!("n={n}: {count} cliques"))?;
    }
    Ok("C_n with 2^n cliques for n = 2..8".into())
}

fn criterion_3() -> Check {
    let opts = SubdivisionOptions {
        max_dim: Some(3),
        ..Default::default()
    };
    let mut checked = 0;
    for (name, m) in oracle_inputs() {
        let f = CriticalFiltration::from_clique_filtration(&m);
        let s = build_nerve(&f, 3);
        let bigrades: Vec<(usize, usize)> = (1..=4)
            .flat_map(|k| (0..f.num_grades()).map(move |t| (k, t)))
            .collect();
        let bad: Vec<(usize, usize)> = bigrades
            .par_iter()
            .filter(|&&(k, t)| {
                let oracle = subdivision_bifiltration_at(&f, k, t, opts).unwrap();
                betti_numbers(&oracle.complex, 2) != betti_numbers(&s.materialize(k, t).unwrap(), 2)
            })
            .copied()
            .collect();
        ensure(bad.is_empty(), || format!("{name}: mismatch at {bad:?}"))?;
        checked += bigrades.len();
    }
    Ok(format!("{checked} bigrades agree"))
}

fn isolated_labels(sd: &Subdivision, k: usize) -> BTreeSet<Simplex> {
    let mut touched = BTreeSet::new();
    for cell in sd.complex.iter().filter(|c| c.len() == 2) {
        touched.extend(cell.vertices().iter().copied());
    }
    (0..sd.labels.len() as u32)
        .filter(|v| !touched.contains(v) && sd.labels[*v as usize].len() == k)
        .map(|v| sd.labels[v as usize].clone())
        .collect()
}

fn criterion_4() -> Check {
    let opts = SubdivisionOptions {
        max_dim: Some(1),
        ..Default::default()
    };
    for (name, m) in oracle_inputs() {
        let f = CriticalFiltration::from_clique_filtration(&m);
        let top = f.timelines().iter().map(|v| v.simplex.len()).max().unwrap();
        let mut births = 0u64;
        let mut previous: Vec<BTreeSet<Simplex>> = vec![BTreeSet::new(); top + 1];
        let mut isolated_at = Vec::new();
        for t in 0..f.num_grades() {
            let mut row = vec![BTreeSet::new(); top + 1];
            for (k, slot) in row.iter_mut().enumerate().skip(1) {
                *slot = isolated_labels(&subdivision_bifiltration_at(&f, k, t, opts).unwrap(), k);
                births += slot.difference(&previous[k]).count() as u64;
            }
            isolated_at.push(row.clone());
            previous = row;
        }
        let m0 = f.count_mk(0);
        ensure(births == m0, || {
            format!("{name}: {births} isolated births, m0 = {m0}")
        })?;
        for v in f.timelines() {
            ensure(
                isolated_at[v.b][v.simplex.len()].contains(&v.simplex),
                || format!("{name}: {:?} not isolated at its birth", v.simplex),
            )?;
        }
    }
    Ok("isolated births equal m0 on all inputs".into())
}

fn random_subset(rng: &mut Xoshiro256StarStar, n: u32) -> Vec<u32> {
    loop {
        let v: Vec<u32> = (0..n).filter(|_| rng.next_u64() & 1 == 1).collect();
        if !v.is_empty() {
            return v;
        }
    }
}

fn criterion_5() -> Check {
    let mut rng = Xoshiro256StarStar::seed_from_u64(5);
    let opts = SubdivisionOptions::default();
    let closure = |s: &Simplex| SimplicialComplex::from_maximal([s.clone()]);
    for trial in 0..100 {
        let n = 3 + (rng.next_u64() % 4) as u32;
        let maximal: Vec<Simplex> = (0..2 + rng.next_u64() % 3)
            .map(|_| Simplex::new(random_subset(&mut rng, n)))
            .collect();
        let w = SimplicialComplex::from_maximal(maximal);
        let simplices: Vec<&Simplex> = w.iter().collect();
        let family: Vec<Simplex> = (0..2 + rng.next_u64() % 2)
            .map(|_| simplices[(rng.next_u64() % simplices.len() as u64) as usize].clone())
            .collect();
        let common = family[1..]
            .iter()
            .fold(family[0].clone(), |acc, s| acc.intersection(s));
        for k in 1..=4 {
            let mut left: Option<BTreeSet<Vec<Simplex>>> = None;
            for s in &family {
                let cells = subdivision_level(&closure(s), k, opts)
                    .unwrap()
                    .labeled_cells();
                left = Some(match left {
                    None => cells,
                    Some(acc) => acc.intersection(&cells).cloned().collect(),
                });
            }
            let right = if common.is_empty() {
                BTreeSet::new()
            } else {
                subdivision_level(&closure(&common), k, opts)
                    .unwrap()
                    .labeled_cells()
            };
            ensure(left.unwrap() == right, || {
                format!("trial {trial}, k={k}: {family:?}")
            })?;
        }
    }
    Ok("100 random families, k = 1..4".into())
}

fn criterion_6() -> Check {
    for seed in 0..10u64 {
        let n = 3 + seed as usize % 8;
        let m = FiniteMetric::from_points(&random_unit_square(n, 100 + seed));
        ensure(sandwich_check_cech_rips(&m), || {
            format!("seed {seed}: Čech/Rips sandwich fails")
        })?;
        ensure(j_interleaving_check(&m), || {
            format!("seed {seed}: rescaled interleaving fails")
        })?;
    }
    Ok("10 clouds, |X| = 3..10".into())
}

fn criterion_7() -> Check {
    let mut worst: f64 = 0.0;
    for seed in 0..10u64 {
        let n = 3 + seed as usize;
        let m = FiniteMetric::from_points(&random_unit_square(n, 200 + seed));
        let f = intrinsic_cech_timelines(&m);
        for k in 0..=2u32 {
            let mk = f.count_mk(k as usize);
            let bound = (n as u64).pow(k + 2);
            ensure(mk <= bound, || {
                format!("n={n}, k={k}: m_k = {mk} > {bound}")
            })?;
            if n <= 8 {
                let enumerated = f.count_mk_enumerated(k as usize);
                ensure(mk == enumerated, || {
                    format!("n={n}, k={k}: formula {mk} vs enumeration {enumerated}")
                })?;
            }
            worst = worst.max(mk as f64 / bound as f64);
        }
    }
    Ok(format!("max m_k / |X|^(k+2) = {worst:.4}"))
}

fn criterion_8() -> Check {
    let opts = SubdivisionOptions {
        max_dim: Some(1),
        ..Default::default()
    };
    for n in 2..=4 {
        let f = CriticalFiltration::from_clique_filtration(&doubled_cocktail(n));
        let t = grade_index(&f, 1.0);
        let b0 = betti_numbers(&build_nerve(&f, 1).materialize(n, t).unwrap(), 0)[0];
        ensure(b0 == 1 << n, || format!("n={n}: nerve β0 = {b0}"))?;
        if n <= 3 {
            let oracle = subdivision_bifiltration_at(&f, n, t, opts).unwrap();
            let ob0 = betti_numbers(&oracle.complex, 0)[0];
            ensure(ob0 == 1 << n, || format!("n={n}: oracle β0 = {ob0}"))?;
        }
    }
    Ok("β0 = 2^n at (n, r=1) for n = 2..4".into())
}

fn criterion_9() -> Check {
    let mut summary = Vec::new();
    for d in [2, 3] {
        for p in [1.0, 2.0, f64::INFINITY] {
            let norm = Norm::new(p).unwrap();
            for eps in [0.5, 0.25] {
                let poly = dudley_polytope(d, norm, eps).map_err(|e| e.to_string())?;
                for h in poly.halfspaces() {
                    ensure(norm.dual().norm(&h.a) <= h.b, || {
                        format!("d={d} p={p} ε={eps}: inner containment")
                    })?;
                }
                let verts = poly.vertices(1e-9).map_err(|e| e.to_string())?;
                ensure(!verts.is_empty(), || {
                    format!("d={d} p={p} ε={eps}: no vertices")
                })?;
                for v in &verts {
                    let r = norm.norm(v);
                    ensure(r <= 1.0 + eps + 1e-6, || {
                        format!("d={d} p={p} ε={eps}: vertex at norm {r}")
                    })?;
                }
                let bound = facet_bound(d, eps);
                ensure(poly.facet_count() as f64 <= bound, || {
                    format!(
                        "d={d} p={p} ε={eps}: {} facets > {bound}",
                        poly.facet_count()
                    )
                })?;
                summary.push(poly.facet_count().to_string());
            }
        }
    }
    Ok(format!("facet counts {}", summary.join(",")))
}

fn criterion_10() -> Check {
    let eps = 0.25;
    for p in [1.0, 2.0, f64::INFINITY] {
        let norm = Norm::new(p).unwrap();
        for seed in 0..5u64 {
            let x = random_unit_square(8, 300 + seed).with_norm(norm);
            let pf = polytope_filtration_parallel(&x, eps, false).map_err(|e| e.to_string())?;
            ensure(sandwich_check_polytope(&x, &pf, eps), || {
                format!("p={p} seed={seed}: sandwich fails")
            })?;
            // Direct checks at the two ends of each pair's allowed window.
            for i in 0..8 {
                for j in (i + 1)..8 {
                    let d = norm.distance(x.point(i), x.point(j));
                    let meet = |r: f64| {
                        polytopes_intersect(
                            &pf.template.homothet(x.point(i), r),
                            &pf.template.homothet(x.point(j), r),
                        )
                        .unwrap()
                    };
                    let hi = d / 2.0 * (1.0 + 1e-9);
                    let lo = d / (2.0 * (1.0 + eps)) * (1.0 - 1e-9);
                    ensure(meet(hi) && !meet(lo), || {
                        format!("p={p} seed={seed}: pair ({i},{j})")
                    })?;
                }
            }
        }
    }
    Ok("15 clouds, 3 norms".into())
}

/// Maximal sets of boxes sharing a point, found by testing each anchor
/// `(lo[i_1][0], …, lo[i_d][d−1])`.
fn anchor_cliques(lo: &[Vec<f64>], hi: &[Vec<f64>]) -> BTreeSet<Vec<u32>> {
    let n = lo.len();
    let d = lo[0].len();
    let mut sets: BTreeSet<Vec<u32>> = BTreeSet::new();
    let mut idx = vec![0usize; d];
    loop {
        let anchor: Vec<f64> = (0..d).map(|c| lo[idx[c]][c]).collect();
        let members: Vec<u32> = (0..n)
            .filter(|&b| (0..d).all(|c| lo[b][c] <= anchor[c] && anchor[c] <= hi[b][c]))
            .map(|b| b as u32)
            .collect();
        if !members.is_empty() {
            sets.insert(members);
        }
        let mut c = 0;
        while c < d {
            idx[c] += 1;
            if idx[c] < n {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
        if c == d {
            break;
        }
    }
    let subset = |a: &Vec<u32>, b: &Vec<u32>| a.len() < b.len() && a.iter().all(|v| b.contains(v));
    sets.iter()
        .filter(|a| !sets.iter().any(|b| subset(a, b)))
        .cloned()
        .collect()
}

fn criterion_11() -> Check {
    let mut rng = Xoshiro256StarStar::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for trial in 0..40 {
        let d: usize = 2 + trial % 2;
        let n = 4 + (rng.next_u64() % 9) as usize;
        let lo: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..d).map(|_| uniform_f64(&mut rng)).collect())
            .collect();
        let hi: Vec<Vec<f64>> = lo
            .iter()
            .map(|l| {
                l.iter()
                    .map(|&a| a + 0.05 + 0.45 * uniform_f64(&mut rng))
                    .collect()
            })
            .collect();
        let boxes: Vec<Polytope> = lo
            .iter()
            .zip(&hi)
            .map(|(l, h)| Polytope::axis_box(l, h).unwrap())
            .collect();
        let mut g = Graph::new(n);
        for i in 0..n {
            for j in (i + 1)..n {
                if polytopes_intersect(&boxes[i], &boxes[j]).unwrap() {
                    g.add_edge(i, j);
                }
            }
        }
        let cliques: BTreeSet<Vec<u32>> = maximal_cliques(&g)
            .cliques()
            .iter()
            .map(|c| c.vertices().to_vec())
            .collect();
        let bound = (n as f64).powi(d as i32);
        ensure((cliques.len() as f64) <= bound, || {
            format!("trial {trial}: {} cliques", cliques.len())
        })?;
        let anchors = anchor_cliques(&lo, &hi);
        ensure(cliques == anchors, || {
            format!("trial {trial}: cliques differ from anchor enumeration")
        })?;
        worst = worst.max(cliques.len() as f64 / bound);
    }
    Ok(format!("40 families, max count / |V|^d = {worst:.4}"))
}

/// Antichain families that only ever gain maximal simplices.
fn no_collapse_filtration(rng: &mut Xoshiro256StarStar) -> CriticalFiltration {
    let mut family: Vec<Simplex> = Vec::new();
    let mut per_grade = Vec::new();
    for _ in 0..4 {
        for _ in 0..3 {
            let s = Simplex::new(random_subset(rng, 7));
            if family.iter().all(|f| !f.is_face_of(&s) && !s.is_face_of(f)) {
                family.push(s);
            }
        }
        per_grade.push(family.clone());
    }
    // Drop grades that add nothing so the grades stay distinct critical values.
    let mut maximal: Vec<Vec<Simplex>> = Vec::new();
    for g in per_grade {
        if maximal.last() != Some(&g) {
            maximal.push(g);
        }
    }
    let grades = (0..maximal.len()).map(|t| t as f64).collect();
    CriticalFiltration::from_maximal(grades, maximal, None).unwrap()
}

fn criterion_12() -> Check {
    let mut ratios = Vec::new();
    for (name, m) in oracle_inputs() {
        let s = build_nerve(&CriticalFiltration::from_clique_filtration(&m), 3);
        let b = kerber_schreiber(&s).map_err(|e| format!("{name}: {e}"))?;
        b.check_inclusions().map_err(|e| format!("{name}: {e}"))?;
        let ok = verify_weak_equivalence_grid(&s, &b, 2).map_err(|e| e.to_string())?;
        ensure(ok, || format!("{name}: Betti grids differ"))?;
        let ratio = b.size_report().total as f64 / s.size_report().total as f64;
        ratios.push(format!("{name}={ratio:.2}"));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(12);
    for trial in 0..20 {
        let f = no_collapse_filtration(&mut rng);
        let s = build_nerve(&f, 2);
        ensure(s.vertices().iter().all(|v| v.d.is_none()), || {
            format!("trial {trial}: has merges")
        })?;
        let b = kerber_schreiber(&s).map_err(|e| e.to_string())?;
        let expected: BTreeSet<(Simplex, usize, usize)> = s
            .enumerate_generators()
            .into_iter()
            .map(|g| {
                (
                    Simplex::new(g.members.iter().map(|&v| v as u32).collect()),
                    g.depth_grade,
                    g.scale_grade,
                )
            })
            .collect();
        let got: BTreeSet<(Simplex, usize, usize)> = b
            .cells()
            .iter()
            .map(|BifiltrationCell { simplex, depth, t }| (simplex.clone(), *depth, *t))
            .collect();
        ensure(got == expected && b.cells().len() == expected.len(), || {
            format!("trial {trial}: cells differ")
        })?;
    }
    Ok(format!(
        "size ratio total(A')/total(A): {}",
        ratios.join(" ")
    ))
}

fn bifilt(args: &[&str], threads: &str) -> Result<std::process::Output, String> {
    Command::new(env!("CARGO_BIN_EXE_bifilt"))
        .args(args)
        .env("BIFILT_THREADS", threads)
        .output()
        .map_err(|e| e.to_string())
}

/// Runs every pipeline in `dir` and returns all produced bytes.
fn pipeline_outputs(dir: &Path, threads: &str) -> Result<Vec<(String, Vec<u8>)>, String> {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let tri = data.join("tri.csv");
    let sq = data.join("square8.csv");
    let c2 = data.join("cocktail2.dist");
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let s = |path: &Path| path.to_string_lossy().into_owned();
    let runs: Vec<Vec<String>> = vec![
        vec![
            "rips-nerve".into(),
            "--input".into(),
            s(&sq),
            "--max-dim".into(),
            "3".into(),
            "--output".into(),
            p("rips.semifil"),
        ],
        vec![
            "cech".into(),
            "--input".into(),
            s(&sq),
            "--metric".into(),
            "l1".into(),
            "--output".into(),
            p("cech.semifil"),
        ],
        vec![
            "polytope".into(),
            "--input".into(),
            s(&sq),
            "--p".into(),
            "2".into(),
            "--epsilon".into(),
            "0.5".into(),
            "--dump-template".into(),
            p("template.csv"),
            "--output".into(),
            p("poly.semifil"),
        ],
        vec![
            "bifiltrate".into(),
            "--input".into(),
            p("rips.semifil"),
            "--output".into(),
            p("rips.bifil"),
            "--export".into(),
            "scc".into(),
        ],
        vec![
            "oracle".into(),
            "--input".into(),
            s(&tri),
            "--k".into(),
            "1".into(),
            "--t".into(),
            "1".into(),
        ],
        vec![
            "validate".into(),
            "--input".into(),
            s(&c2),
            "--max-dim".into(),
            "4".into(),
            "--imax".into(),
            "2".into(),
        ],
        vec![
            "stats".into(),
            "--input".into(),
            s(&c2),
            "--kmax".into(),
            "3".into(),
        ],
    ];
    let mut out = Vec::new();
    for args in &runs {
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let o = bifilt(&refs, threads)?;
        if !o.status.success() {
            return Err(format!(
                "{} exited with {:?}: {}",
                args[0],
                o.status.code(),
                String::from_utf8_lossy(&o.stderr)
            ));
        }
        let stdout = String::from_utf8_lossy(&o.stdout)
            .replace(&dir.to_string_lossy().into_owned(), "<dir>");
        out.push((format!("{} stdout", args[0]), stdout.into_bytes()));
    }
    for name in [
        "rips.semifil",
        "cech.semifil",
        "template.csv",
        "poly.semifil",
        "rips.bifil",
        "rips.bifil.scc",
    ] {
        out.push((
            name.to_string(),
            std::fs::read(dir.join(name)).map_err(|e| e.to_string())?,
        ));
    }
    Ok(out)
}

fn criterion_13() -> Check {
    let a = tempfile::tempdir().map_err(|e| e.to_string())?;
    let b = tempfile::tempdir().map_err(|e| e.to_string())?;
    let first = pipeline_outputs(a.path(), "1")?;
    let second = pipeline_outputs(b.path(), "4")?;
    for ((name, x), (_, y)) in first.iter().zip(&second) {
        ensure(x == y, || format!("{name} differs between runs"))?;
    }
    let reparsed = bifilt::format::parse_bifil(&String::from_utf8_lossy(
        &first.iter().find(|o| o.0 == "rips.bifil").unwrap().1,
    ));
    ensure(reparsed.is_ok(), || {
        "emitted BIFIL does not re-parse".into()
    })?;
    Ok(format!(
        "{} artifacts identical across runs and thread counts",
        first.len()
    ))
}

fn criterion_14() -> Check {
    let mut medians = Vec::new();
    let mut rows = Vec::new();
    for n in [50, 100, 200, 400] {
        let mut counts: Vec<usize> = (0..5)
            .map(|seed| random_square_clique_count(n, 0.2, seed))
            .collect();
        counts.sort_unstable();
        medians.push(counts[2]);
        rows.push(format!("n={n}: median {} of {counts:?}", counts[2]));
    }
    let monotone = medians.windows(2).all(|w| w[0] <= w[1]);
    let text = format!("{} monotone={monotone}", rows.join("; "));
    if monotone {
        Ok(text)
    } else {
        Err(text)
    }
}

fn main() -> ExitCode {
    let mut suite = Suite {
        failures: Vec::new(),
    };
    let secs = |s| Some(Duration::from_secs(s));
    suite.run(1, "cocktail cliques", true, secs(10), criterion_1);
    suite.run(2, "circle witness", true, None, criterion_2);
    suite.run(3, "nerve oracle equivalence", true, secs(300), criterion_3);
    suite.run(4, "H0 lower bound", true, None, criterion_4);
    suite.run(5, "subdivision intersection law", true, None, criterion_5);
    suite.run(6, "Čech sandwich", true, None, criterion_6);
    suite.run(7, "m_k bound", true, None, criterion_7);
    suite.run(8, "√2 lower-bound witness", true, None, criterion_8);
    suite.run(9, "polytope guarantees", true, secs(30), criterion_9);
    suite.run(10, "intersection-graph sandwich", true, None, criterion_10);
    suite.run(11, "box clique oracle", true, None, criterion_11);
    suite.run(12, "bifiltration conversion", true, None, criterion_12);
    suite.run(13, "determinism", true, None, criterion_13);
    suite.run(
        14,
        "random square clique growth (demonstrative)",
        false,
        None,
        criterion_14,
    );
    if suite.failures.is_empty() {
        println!("acceptance: all gating criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {:?}", suite.failures);
        ExitCode::FAILURE
    }
}

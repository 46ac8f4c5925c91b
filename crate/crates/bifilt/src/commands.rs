use std::fmt::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use bifilt_core::bifiltration::{kerber_schreiber, Bifiltration1Critical};
use bifilt_core::cech::{intrinsic_cech_timelines, j_model};
use bifilt_core::filtration::SizeReport;
use bifilt_core::graph::random_square_clique_count;
use bifilt_core::homology::{betti_numbers, connected_components};
use bifilt_core::nerve::build_nerve;
use bifilt_core::polytope::{
    dudley_polytope, exact_box_template, from_tangencies, sandwich_check_polytope, tangency_radius,
    Polytope, PolytopeFiltration,
};
use bifilt_core::subdivision::{subdivision_bifiltration_at, SubdivisionOptions};
use bifilt_core::{CriticalFiltration, FiniteMetric, PointCloudLp, Semifiltration};
use rayon::prelude::*;

use crate::cli::{parse_exponent, Cli, Command, Export, InputArgs, InputFormat, Model, Rescale};
use crate::error::{exit, CliError};
use crate::format::{self, ParseError};
use crate::io::{read_text, write_atomic};

/// What a command prints and the status it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Caps the global rayon pool at `BIFILT_THREADS` when set.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var("BIFILT_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            CliError::Usage(format!(
                "BIFILT_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    // A pool that is already built (e.g. in tests) is left alone.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

pub enum Loaded {
    Points(PointCloudLp),
    Metric(FiniteMetric),
}

impl Loaded {
    pub fn metric(&self) -> FiniteMetric {
        match self {
            Loaded::Points(x) => FiniteMetric::from_points(x),
            Loaded::Metric(m) => m.clone(),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Loaded::Points(x) => x.len(),
            Loaded::Metric(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn parse_err(path: &Path, err: ParseError) -> CliError {
    CliError::Parse {
        path: path.to_path_buf(),
        err,
    }
}

pub fn load_points(
    path: &Path,
    norm: bifilt_core::Norm,
    max_points: Option<usize>,
) -> Result<PointCloudLp, CliError> {
    let mut coords = format::parse_points(&read_text(path)?).map_err(|e| parse_err(path, e))?;
    if let Some(n) = max_points {
        coords.truncate(n.max(1));
    }
    Ok(PointCloudLp::new(coords, norm)?)
}

pub fn load_input(args: &InputArgs) -> Result<Loaded, CliError> {
    let path = args
        .input
        .as_deref()
        .ok_or_else(|| CliError::Usage("--input is required".into()))?;
    let distance = match args.format {
        InputFormat::Distance => true,
        InputFormat::Points => false,
        InputFormat::Auto => path.extension().is_some_and(|e| e == "dist"),
    };
    if distance {
        let m = format::parse_distance_matrix(&read_text(path)?, args.allow_semimetric)
            .map_err(|e| parse_err(path, e))?;
        Ok(Loaded::Metric(match args.max_points {
            Some(n) => m.restrict(n.max(1)),
            None => m,
        }))
    } else {
        Ok(Loaded::Points(load_points(
            path,
            args.metric,
            args.max_points,
        )?))
    }
}

/// The scale filtration whose subdivision bifiltration a model represents.
pub fn model_filtration(model: Model, m: &FiniteMetric) -> CriticalFiltration {
    match model {
        Model::Rips => CriticalFiltration::from_clique_filtration(m),
        Model::Cech => intrinsic_cech_timelines(m),
    }
}

/// The polytope filtration with pairwise tangencies computed in parallel.
pub fn polytope_filtration_parallel(
    x: &PointCloudLp,
    epsilon: f64,
    exact_box: bool,
) -> Result<PolytopeFiltration, CliError> {
    let d = x.dim().max(1);
    let template: Polytope = if exact_box {
        if !x.norm().is_infinite() {
            return Err(CliError::Usage("--exact-box requires --p inf".into()));
        }
        exact_box_template(d)?
    } else {
        dudley_polytope(d, x.norm(), epsilon)?
    };
    let n = x.len();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
        .collect();
    let radii = pairs
        .par_iter()
        .map(|&(i, j)| {
            let hi = x.norm().distance(x.point(i), x.point(j)) / 2.0;
            tangency_radius(&template, x.point(i), x.point(j), hi)
        })
        .collect::<Result<Vec<f64>, _>>()?;
    Ok(from_tangencies(n, template, &pairs, &radii)?)
}

fn write_nerve(s: &Semifiltration, output: &Path, no_generators: bool) -> Result<String, CliError> {
    let generators = (!no_generators).then(|| s.enumerate_generators());
    write_atomic(output, &format::write_semifil(s, generators.as_deref()))?;
    let mut out = format!(
        "wrote {}: {} grades, {} vertex timelines",
        output.display(),
        s.num_grades(),
        s.vertices().len()
    );
    if let Some(g) = &generators {
        write!(out, ", {} generators", g.len()).unwrap();
    }
    out.push('\n');
    Ok(out)
}

/// Size reports as aligned columns, one row per model.
pub fn size_table(reports: &[(&str, &SizeReport)]) -> String {
    let dims = reports
        .iter()
        .map(|(_, r)| r.generators_per_dim.len())
        .max()
        .unwrap_or(0);
    let mut out = format!("{:<14}", "model");
    for d in 0..dims {
        write!(out, "{:>10}", format!("dim{d}")).unwrap();
    }
    writeln!(out, "{:>10}{:>10}", "merges", "total").unwrap();
    for (label, r) in reports {
        write!(out, "{label:<14}").unwrap();
        for d in 0..dims {
            write!(
                out,
                "{:>10}",
                r.generators_per_dim.get(d).copied().unwrap_or(0)
            )
            .unwrap();
        }
        writeln!(out, "{:>10}{:>10}", r.merge_events, r.total).unwrap();
    }
    out
}

/// Per-bigrade agreement of Betti numbers, rows `k`, columns `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgreementMatrix {
    pub title: String,
    pub ks: Vec<usize>,
    pub ts: Vec<usize>,
    pub agree: Vec<Vec<bool>>,
}

impl AgreementMatrix {
    pub fn passed(&self) -> bool {
        self.agree.iter().flatten().all(|&b| b)
    }

    pub fn render(&self) -> String {
        let mut out = format!("{}\n k\\t", self.title);
        for t in &self.ts {
            write!(out, " {t:>3}").unwrap();
        }
        out.push('\n');
        for (k, row) in self.ks.iter().zip(&self.agree) {
            write!(out, "{k:>4}").unwrap();
            for &ok in row {
                out.push_str(if ok { "  ok" } else { "  XX" });
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub nerve_vs_oracle: AgreementMatrix,
    pub bifiltration_vs_nerve: AgreementMatrix,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.nerve_vs_oracle.passed() && self.bifiltration_vs_nerve.passed()
    }

    pub fn render(&self) -> String {
        let mut out = self.nerve_vs_oracle.render();
        out.push_str(&self.bifiltration_vs_nerve.render());
        out.push_str(if self.passed() { "PASS\n" } else { "FAIL\n" });
        out
    }
}

fn betti_checked(c: &bifilt_core::SimplicialComplex, imax: usize) -> Result<Vec<usize>, CliError> {
    let b = betti_numbers(c, imax);
    let cc = connected_components(c);
    if b[0] != cc {
        return Err(bifilt_core::Error::invariant(format!(
            "β₀ = {} but the complex has {cc} components",
            b[0]
        ))
        .into());
    }
    Ok(b)
}

/// Compares the nerve model of `f`, its 1-critical conversion and the
/// subdivision oracle at every `(k, t)` with `k ≤ kmax`, in degrees `≤ imax`.
pub fn validate_filtration(
    f: &CriticalFiltration,
    max_dim: usize,
    imax: usize,
    kmax: Option<usize>,
    cell_cap: usize,
) -> Result<ValidationReport, CliError> {
    if max_dim < imax + 1 {
        return Err(CliError::Usage(format!(
            "--max-dim must be at least imax + 1 = {}",
            imax + 1
        )));
    }
    let s = build_nerve(f, max_dim);
    let b = kerber_schreiber(&s)?;
    let kmax = kmax.unwrap_or_else(|| s.depth_max().max(1));
    let ks: Vec<usize> = (1..=kmax).collect();
    let ts: Vec<usize> = (0..f.num_grades()).collect();
    let opts = SubdivisionOptions {
        max_dim: Some(imax + 1),
        cell_cap,
    };
    let bigrades: Vec<(usize, usize)> = ks
        .iter()
        .flat_map(|&k| ts.iter().map(move |&t| (k, t)))
        .collect();
    let cells = bigrades
        .par_iter()
        .map(|&(k, t)| -> Result<(bool, bool), CliError> {
            let oracle = subdivision_bifiltration_at(f, k, t, opts)?;
            let expected = betti_checked(&oracle.complex, imax)?;
            let nerve = betti_checked(&s.materialize(k, t)?, imax)?;
            let bifil = betti_checked(&b.materialize(k, t)?, imax)?;
            Ok((expected == nerve, nerve == bifil))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let matrix = |title: &str, pick: fn(&(bool, bool)) -> bool| AgreementMatrix {
        title: title.to_string(),
        ks: ks.clone(),
        ts: ts.clone(),
        agree: cells
            .chunks(ts.len().max(1))
            .map(|row| row.iter().map(pick).collect())
            .collect(),
    };
    Ok(ValidationReport {
        nerve_vs_oracle: matrix("nerve vs subdivision oracle", |c| c.0),
        bifiltration_vs_nerve: matrix("1-critical vs nerve", |c| c.1),
    })
}

/// `β_i` of both models at every bigrade.
pub fn check_conversion(
    s: &Semifiltration,
    b: &Bifiltration1Critical,
    imax: usize,
) -> Result<AgreementMatrix, CliError> {
    let ks: Vec<usize> = (1..=s.depth_max().max(b.depth_max()).max(1)).collect();
    let ts: Vec<usize> = (0..s.num_grades()).collect();
    let agree = ks
        .par_iter()
        .map(|&k| {
            ts.iter()
                .map(|&t| {
                    let left = betti_numbers(&s.materialize(k, t)?, imax);
                    let right = betti_numbers(&b.materialize(k, t)?, imax);
                    Ok(left == right)
                })
                .collect::<Result<Vec<bool>, CliError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(AgreementMatrix {
        title: "1-critical vs nerve".into(),
        ks,
        ts,
        agree,
    })
}

fn scc_path(output: &Path) -> PathBuf {
    let mut p = output.as_os_str().to_owned();
    p.push(".scc");
    PathBuf::from(p)
}

pub fn run(cli: Cli) -> Result<Outcome, CliError> {
    match cli.command {
        Command::RipsNerve {
            input,
            max_dim,
            output,
            no_generators,
        } => {
            let f = model_filtration(Model::Rips, &load_input(&input)?.metric());
            Ok(Outcome::ok(write_nerve(
                &build_nerve(&f, max_dim),
                &output,
                no_generators,
            )?))
        }
        Command::Cech {
            input,
            max_dim,
            rescale,
            output,
            no_generators,
        } => {
            let m = load_input(&input)?.metric();
            let s = match rescale {
                Rescale::Sqrt2 => j_model(&m, max_dim),
                Rescale::None => build_nerve(&intrinsic_cech_timelines(&m), max_dim),
            };
            Ok(Outcome::ok(write_nerve(&s, &output, no_generators)?))
        }
        Command::Polytope {
            input,
            p,
            epsilon,
            exact_box,
            dump_template,
            max_points,
            max_dim,
            output,
            no_generators,
        } => {
            let norm = parse_exponent(&p).map_err(CliError::Usage)?;
            if !(epsilon > 0.0 && epsilon.is_finite()) {
                return Err(CliError::Usage("--epsilon must be positive".into()));
            }
            let x = load_points(&input, norm, max_points)?;
            let pf = polytope_filtration_parallel(&x, epsilon, exact_box)?;
            if !sandwich_check_polytope(&x, &pf, epsilon) {
                return Err(bifilt_core::Error::invariant(
                    "polytope filtration is not sandwiched by the Rips filtration",
                )
                .into());
            }
            let mut out = format!(
                "template: {} facets in dimension {}\n",
                pf.template.facet_count(),
                pf.template.dim()
            );
            if let Some(path) = dump_template {
                let mut text = String::new();
                for h in pf.template.halfspaces() {
                    let mut row: Vec<String> = h.a.iter().map(|&v| format::fmt_real(v)).collect();
                    row.push(format::fmt_real(h.b));
                    writeln!(text, "{}", row.join(" ")).unwrap();
                }
                write_atomic(&path, &text)?;
                writeln!(out, "wrote {}", path.display()).unwrap();
            }
            out.push_str(&write_nerve(
                &build_nerve(&pf.filtration, max_dim),
                &output,
                no_generators,
            )?);
            Ok(Outcome::ok(out))
        }
        Command::Bifiltrate {
            input,
            output,
            export,
            check,
        } => {
            let parsed =
                format::parse_semifil(&read_text(&input)?).map_err(|e| parse_err(&input, e))?;
            let s = parsed.semifiltration;
            if let Some(g) = &parsed.generators {
                if *g != s.enumerate_generators() {
                    return Err(bifilt_core::Error::invariant(
                        "generator section does not match the vertex timelines",
                    )
                    .into());
                }
            }
            let b = kerber_schreiber(&s)?;
            write_atomic(&output, &format::write_bifil(&b))?;
            let (before, after) = (s.size_report(), b.size_report());
            let mut out = size_table(&[("semifiltration", &before), ("bifiltration", &after)]);
            writeln!(
                out,
                "size ratio: {:.4}",
                after.total as f64 / before.total.max(1) as f64
            )
            .unwrap();
            writeln!(out, "wrote {}", output.display()).unwrap();
            if export == Some(Export::Scc) {
                let path = scc_path(&output);
                write_atomic(&path, &format::write_scc(&b))?;
                writeln!(out, "wrote {}", path.display()).unwrap();
            }
            if let Some(imax) = check {
                let m = check_conversion(&s, &b, imax)?;
                out.push_str(&m.render());
                if !m.passed() {
                    return Ok(Outcome {
                        stdout: out,
                        code: exit::MISMATCH,
                    });
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Validate {
            input,
            model,
            max_dim,
            imax,
            kmax,
            cell_cap,
        } => {
            let f = model_filtration(model, &load_input(&input)?.metric());
            let report = validate_filtration(&f, max_dim, imax, kmax, cell_cap)?;
            let code = if report.passed() { 0 } else { exit::MISMATCH };
            Ok(Outcome {
                stdout: report.render(),
                code,
            })
        }
        Command::Oracle {
            input,
            model,
            k,
            t,
            max_dim,
            cell_cap,
            output,
        } => {
            let f = model_filtration(model, &load_input(&input)?.metric());
            let sd =
                subdivision_bifiltration_at(&f, k, t, SubdivisionOptions { max_dim, cell_cap })?;
            let mut text = String::new();
            for cell in sd.complex.iter() {
                let labels: Vec<String> = sd
                    .flag(cell)
                    .iter()
                    .map(|s| format!("[{}]", format::Joined(s.vertices())))
                    .collect();
                writeln!(text, "{}", labels.join(" ")).unwrap();
            }
            match output {
                Some(path) => {
                    write_atomic(&path, &text)?;
                    Ok(Outcome::ok(format!(
                        "wrote {}: {} cells\n",
                        path.display(),
                        sd.complex.len()
                    )))
                }
                None => Ok(Outcome::ok(text)),
            }
        }
        Command::Stats {
            input,
            model,
            kmax,
            max_dim,
            csv,
            random_n,
            radius,
            seeds,
        } => {
            if !random_n.is_empty() {
                let mut out = String::from("n,r,seed,max_cliques,elapsed_ms\n");
                for &n in &random_n {
                    for &seed in &seeds {
                        let start = Instant::now();
                        let count = random_square_clique_count(n, radius, seed);
                        let ms = start.elapsed().as_secs_f64() * 1e3;
                        writeln!(
                            out,
                            "{n},{},{seed},{count},{ms:.3}",
                            format::fmt_real(radius)
                        )
                        .unwrap();
                    }
                }
                return Ok(Outcome::ok(out));
            }
            let loaded = load_input(&input)?;
            let f = model_filtration(model, &loaded.metric());
            let s = build_nerve(&f, max_dim);
            let nerve = s.size_report();
            let bifil = kerber_schreiber(&s)?.size_report();
            let mut rows: Vec<(String, u64)> = vec![
                ("points".into(), loaded.len() as u64),
                ("grades".into(), f.num_grades() as u64),
            ];
            rows.extend((0..=kmax).map(|k| (format!("m_{k}"), f.count_mk(k))));
            let out = if csv {
                let mut out = String::from("quantity,value\n");
                for (name, v) in &rows {
                    writeln!(out, "{name},{v}").unwrap();
                }
                for (label, r) in [("nerve", &nerve), ("bifiltration", &bifil)] {
                    for (d, g) in r.generators_per_dim.iter().enumerate() {
                        writeln!(out, "{label}.dim{d},{g}").unwrap();
                    }
                    writeln!(out, "{label}.merges,{}", r.merge_events).unwrap();
                    writeln!(out, "{label}.total,{}", r.total).unwrap();
                }
                out
            } else {
                let mut out = String::new();
                for (name, v) in &rows {
                    writeln!(out, "{name:<8}{v:>12}").unwrap();
                }
                out.push('\n');
                out.push_str(&size_table(&[("nerve", &nerve), ("bifiltration", &bifil)]));
                out
            };
            Ok(Outcome::ok(out))
        }
    }
}

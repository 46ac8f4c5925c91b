use bifilt_core::bifiltration::kerber_schreiber;
use bifilt_core::cech::{j_model, query_radius, DIV_SQRT2};
use bifilt_core::graph::{circle_points, cocktail_graph};
use bifilt_core::homology::betti_numbers;
use bifilt_core::metric::doubled_shortest_path_metric;
use bifilt_core::nerve::build_nerve;
use bifilt_core::subdivision::{subdivision_bifiltration_at, SubdivisionOptions};
use bifilt_core::{CriticalFiltration, FiniteMetric, Simplex};

fn last_grade_at_most(f: &CriticalFiltration, r: f64) -> usize {
    f.grades().iter().rposition(|&g| g <= r).unwrap()
}

#[test]
fn cocktail_three_components() {
    let m = doubled_shortest_path_metric(6, &cocktail_graph(3).edges()).unwrap();
    let f = CriticalFiltration::from_clique_filtration(&m);
    let t = last_grade_at_most(&f, 1.0);
    let nerve = build_nerve(&f, 2).materialize(3, t).unwrap();
    assert_eq!(betti_numbers(&nerve, 0), vec![8]);
    let oracle = subdivision_bifiltration_at(
        &f,
        3,
        t,
        SubdivisionOptions {
            max_dim: Some(1),
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(betti_numbers(&oracle.complex, 0), vec![8]);
}

#[test]
fn doubled_c2_cycle_at_depth_one() {
    let m = doubled_shortest_path_metric(4, &cocktail_graph(2).edges()).unwrap();
    let f = CriticalFiltration::from_clique_filtration(&m);
    let nerve = build_nerve(&f, 2)
        .materialize(1, last_grade_at_most(&f, 1.0))
        .unwrap();
    assert_eq!(nerve.f_vector(), vec![4, 4]);
    assert_eq!(betti_numbers(&nerve, 1), vec![1, 1]);
}

#[test]
fn circle_cliques_are_tetrahedra() {
    let x = circle_points(8, 0.01).unwrap();
    let f = CriticalFiltration::from_clique_filtration(&FiniteMetric::from_points(&x));
    let t = last_grade_at_most(&f, 0.99);
    assert_eq!(f.maximal_at(t).unwrap().len(), 16);
    let nerve = build_nerve(&f, 1).materialize(4, t).unwrap();
    assert_eq!(nerve.f_vector(), vec![16]);
}

#[test]
fn j_model_is_tagged_and_rescaled() {
    let m = FiniteMetric::from_lower_triangle(3, &[2.0, 2.0, 2.0], false).unwrap();
    let s = j_model(&m, 2);
    assert_eq!(s.scale_tag(), Some(DIV_SQRT2));
    assert_eq!(s.grades(), &[0.0, 2.0]);
    assert!((query_radius(2.0, s.scale_tag()) - std::f64::consts::SQRT_2).abs() < 1e-15);
    assert_eq!(s.vertices()[3].simplex, Simplex::from([0, 1, 2]));
}

#[test]
fn triangle_bifiltration_sizes() {
    let m = FiniteMetric::from_lower_triangle(3, &[4.0, 4.0, 4.0], false).unwrap();
    let s = build_nerve(&CriticalFiltration::from_clique_filtration(&m), 2);
    assert_eq!(s.size_report().generators_per_dim, vec![4]);
    assert_eq!(s.size_report().merge_events, 3);
    let b = kerber_schreiber(&s).unwrap();
    assert_eq!(b.size_report().merge_events, 0);
    assert!(b.check_inclusions().is_ok());
}

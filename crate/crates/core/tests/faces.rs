use udk_core::constructions::*;
use udk_core::faces::*;
use udk_core::geometry::Point;
use udk_core::model::Drawing;
use udk_core::numeric::QField;

fn p(x: QField, y: QField) -> Point {
    Point::new(x, y)
}

fn triangle() -> Drawing {
    Drawing::new(
        vec![
            Point::origin(),
            p(QField::one(), QField::zero()),
            p(QField::ratio(1, 2), QField::new(0, 1, 1, 2)),
        ],
        vec![(0, 1), (1, 2), (0, 2)],
    )
}

fn unit_x() -> Drawing {
    Drawing::new(
        vec![
            p(QField::ratio(-1, 2), QField::zero()),
            p(QField::ratio(1, 2), QField::zero()),
            p(QField::zero(), QField::ratio(-1, 2)),
            p(QField::zero(), QField::ratio(1, 2)),
        ],
        vec![(0, 1), (2, 3)],
    )
}

#[test]
fn crossing_free_split_is_everything() {
    let d = triangle();
    for mode in [SplitMode::Exact, SplitMode::Greedy] {
        let s = plane_subgraph(&d, mode).unwrap();
        assert_eq!(s.e0, vec![0, 1, 2]);
        assert!(s.e1.is_empty());
    }
    let fd = face_decomposition(&d, &plane_subgraph(&d, SplitMode::Exact).unwrap());
    assert_eq!((fd.faces.len(), fd.f3, fd.f_ge5), (2, 2, 0));
    let g = gt_bound_check(&d, &plane_subgraph(&d, SplitMode::Exact).unwrap());
    assert!(g.p1_holds && g.p2_holds);
    let ledger = discharging_audit(&d, &plane_subgraph(&d, SplitMode::Exact).unwrap()).unwrap();
    assert!(ledger.passed && ledger.transfers.is_empty());
    assert!(ledger.faces.iter().all(|f| f.h == 0));
}

#[test]
fn unit_x_split_and_halfedges() {
    let d = unit_x();
    let s = plane_subgraph(&d, SplitMode::Exact).unwrap();
    assert_eq!((s.e0.clone(), s.e1.clone()), (vec![0], vec![1]));
    let hs = halfedge_extraction(&d, &s).unwrap();
    assert_eq!(hs.halfedges.len(), 2);
    assert!(hs.halfedges.iter().all(|h| h.first_crossed == 0 && h.face == 0));
    let r = matchstick_reduction(&d).unwrap();
    assert_eq!(r.e(), 1);
}

#[test]
fn isolated_vertex_inside_triangle() {
    let mut v = triangle().vertices().to_vec();
    v.push(p(QField::ratio(1, 2), QField::new(0, 1, 1, 6)));
    let d = Drawing::new(v, vec![(0, 1), (1, 2), (0, 2)]);
    let fd = face_decomposition(&d, &plane_subgraph(&d, SplitMode::Greedy).unwrap());
    let inner = fd.faces.iter().find(|f| f.bounded).unwrap();
    assert_eq!((inner.components, inner.size, inner.t), (2, 3, 3));
}

#[test]
fn rhombus_with_diagonal() {
    let t = triangle();
    let mut v = t.vertices().to_vec();
    v.push(p(QField::new(3, 2, 0, 1), QField::new(0, 1, 1, 2)));
    let d = Drawing::new(v, vec![(0, 1), (1, 2), (0, 2), (1, 3), (2, 3)]);
    let fd = face_decomposition(&d, &plane_subgraph(&d, SplitMode::Exact).unwrap());
    assert_eq!((fd.f3, fd.f_ge5), (2, 0));
    assert_eq!(fd.faces[0].size, 4);
}

#[test]
fn generated_drawings_pass_audit() {
    let mut ds = vec![rook_block_default().unwrap(), dodecagon().unwrap()];
    ds.extend((2..=3).map(|k| dodecagon_grid(k).unwrap()));
    ds.push(spiral_construction(300).unwrap());
    for d in &ds {
        for mode in [SplitMode::Exact, SplitMode::Greedy] {
            let s = plane_subgraph(d, mode).unwrap();
            assert!(s.is_plane() && s.is_maximal());
            let ledger = discharging_audit(d, &s).unwrap();
            assert!(ledger.passed, "{:?}", ledger.diagnostics);
            assert!(ledger.euler_identity && ledger.conserved);
        }
        let x = udk_core::arrangement::crossing_report(d).unwrap().count();
        let r = matchstick_reduction(d).unwrap();
        assert!(r.e() >= d.e() - x);
        assert_eq!(udk_core::arrangement::crossing_report(&r).unwrap().count(), 0);
    }
}

fn apex_triangle() -> Vec<Point> {
    vec![
        p(QField::ratio(1, 2), QField::new(0, 1, 1, 2)),
        Point::origin(),
        p(QField::one(), QField::zero()),
    ]
}

/// Apex `v0` with two unit edges leaving through the base; `below` are
/// horizontal unit edges at `y = −1/40`, given by their left x-coordinate.
fn apex_gadget(below: &[QField]) -> (Drawing, Vec<usize>) {
    let mut v = apex_triangle();
    let apex = v[0].clone();
    v.push(apex.add(&p(QField::ratio(-5, 13), QField::ratio(-12, 13))));
    v.push(apex.add(&p(QField::ratio(5, 13), QField::ratio(-12, 13))));
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (0, 3), (0, 4)];
    for x in below {
        let i = v.len();
        v.push(p(x.clone(), QField::ratio(-1, 40)));
        v.push(p(x + &QField::one(), QField::ratio(-1, 40)));
        edges.push((i, i + 1));
    }
    let d = Drawing::new(v, edges);
    let e0: Vec<usize> = (0..d.e())
        .filter(|&i| {
            let e = d.edges()[i];
            e != (0, 3) && e != (0, 4)
        })
        .collect();
    (d, e0)
}

fn check_valid(d: &Drawing) {
    assert!(udk_core::model::validate_drawing(d).is_valid());
    assert!(udk_core::arrangement::crossing_report(d).unwrap().is_k_plane(2));
}

#[test]
fn type_one_gadget_flips_once() {
    let mut v = apex_triangle();
    v.rotate_left(1); // v0=(0,0), v1=(1,0), v2=apex
    v.push(p(QField::ratio(3, 5), QField::ratio(4, 5)));
    v.push(p(QField::ratio(2, 5), QField::ratio(4, 5)));
    let d = Drawing::new(v, vec![(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)]);
    check_valid(&d);
    let e0: Vec<usize> =
        [(0, 1), (1, 2), (0, 2)].iter().map(|&e| d.edge_index(e).unwrap()).collect();
    let s = PlaneSplit::from_e0(&d, &e0).unwrap();
    let bad = bad_triangle_classify(&d, &s).unwrap();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].kind, 1);
    let f3 = face_decomposition(&d, &s).f3;
    let r = flip_repair(&d, s).unwrap();
    assert_eq!(r.flips, 1);
    assert_eq!(r.e0.len(), 3);
    assert!(face_decomposition(&d, &r).f3 < f3);
    assert!(bad_triangle_classify(&d, &r).unwrap().is_empty());
}

#[test]
fn type_two_and_three_gadgets_flip_away() {
    for (below, kind) in [
        (vec![QField::ratio(-1, 2)], 2u8),
        (vec![QField::zero()], 3),
    ] {
        let (d, e0) = apex_gadget(&below);
        check_valid(&d);
        let s = PlaneSplit::from_e0(&d, &e0).unwrap();
        let bad = bad_triangle_classify(&d, &s).unwrap();
        assert_eq!(bad.iter().map(|t| t.kind).collect::<Vec<_>>(), vec![kind]);
        let before = s.e0.len();
        let r = flip_repair(&d, s).unwrap();
        assert_eq!(r.flips, 1);
        assert_eq!(r.e0.len(), before);
        assert!(r.is_plane());
        assert!(bad_triangle_classify(&d, &r).unwrap().is_empty());
        assert!(discharging_audit(&d, &r).unwrap().passed);
    }
}

#[test]
fn type_four_gadget_gets_a_helper() {
    let (d, e0) = apex_gadget(&[QField::ratio(-1, 2), QField::ratio(3, 5)]);
    check_valid(&d);
    let s = plane_subgraph(&d, SplitMode::Exact).unwrap();
    assert_eq!(s.e0, e0);
    let bad = bad_triangle_classify(&d, &s).unwrap();
    assert_eq!(bad.len(), 1);
    assert_eq!(bad[0].kind, 4);
    let ledger = discharging_audit(&d, &s).unwrap();
    assert_eq!(ledger.transfers.len(), 1);
    let t = &ledger.transfers[0];
    assert!(ledger.faces[t.from].size >= 5);
    assert_eq!(ledger.faces[t.to].c, -1);
    assert_eq!(ledger.faces[t.to].c_final, 0);
    assert!(ledger.passed, "{:?}", ledger.diagnostics);
}

#[test]
fn exact_mode_refuses_large_inputs() {
    let d = dodecagon().unwrap();
    assert!(matches!(
        plane_subgraph_with_limit(&d, SplitMode::Exact, 10),
        Err(udk_core::Error::TooLarge { .. })
    ));
}

#[test]
fn gt_bounds_on_small_generated() {
    for d in [dodecagon().unwrap(), dodecagon_grid(2).unwrap()] {
        let s = plane_subgraph(&d, SplitMode::Exact).unwrap();
        let g = gt_bound_check(&d, &s);
        assert!(g.p1_holds && g.p2_holds, "{g:?}");
    }
}

#[test]
fn dodecagon_split_bound() {
    let d = dodecagon().unwrap();
    let x = udk_core::arrangement::crossing_report(&d).unwrap().count();
    let s = plane_subgraph(&d, SplitMode::Exact).unwrap();
    assert!(s.e0.len() >= 72 - x);
}

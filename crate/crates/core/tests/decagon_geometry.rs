//! The regular-decagon surface as a geometric oracle for the tracer: its
//! horizontal and vertical cylinder structure is known in closed form in
//! the golden field.

use veech_core::exact::{rat_i64, CycNum};
use veech_core::flatsurf::{
    build_prototype, cylinder_decomposition, decagon_surface, extract_prototype, find_involution,
    intersection_matrix, moduli_commensurability, solve_geometry, validate_surface,
    verify_period_identities, Direction, PrototypeParams, DEFAULT_TRACE_BUDGET,
};

fn sqrt5() -> CycNum {
    CycNum::root(5, 1)
        .add(&CycNum::root(5, 4))
        .sub(&CycNum::root(5, 2))
        .sub(&CycNum::root(5, 3))
}

fn phi() -> CycNum {
    CycNum::one().add(&sqrt5()).scale(&rat_i64(1, 2))
}

#[test]
fn decagon_horizontal_structure() {
    let s = decagon_surface();
    let dec = cylinder_decomposition(&s, Direction::Horizontal, DEFAULT_TRACE_BUDGET).unwrap();
    assert_eq!(dec.cylinders.len(), 2);
    // widths: (phi + 2)/2 (wide) and sqrt5/2 (narrow); heights 1 and phi-1
    let wide_b = phi().add(&CycNum::from_int(2)).scale(&rat_i64(1, 2));
    let narrow_b = sqrt5().scale(&rat_i64(1, 2));
    let wide_h = CycNum::one();
    let narrow_h = phi().sub(&CycNum::one());
    let mut found_wide = false;
    let mut found_narrow = false;
    for c in &dec.cylinders {
        if c.width == wide_b && c.height == wide_h {
            found_wide = true;
        }
        if c.width == narrow_b && c.height == narrow_h {
            found_narrow = true;
        }
    }
    assert!(found_wide, "wide cylinder data");
    assert!(found_narrow, "narrow cylinder data");
    assert_eq!(dec.total_area(), s.area());
}

#[test]
fn decagon_vertical_structure() {
    let s = decagon_surface();
    let dec = cylinder_decomposition(&s, Direction::Vertical, DEFAULT_TRACE_BUDGET).unwrap();
    assert_eq!(dec.cylinders.len(), 3);
    assert_eq!(dec.total_area(), s.area());
    let (ok, ints) = moduli_commensurability(&dec.moduli());
    assert!(ok, "vertical moduli must be commensurable");
    let mut ints = ints.unwrap();
    ints.sort_unstable();
    assert_eq!(ints, vec![1, 1, 2]);
}

#[test]
fn decagon_intersection_and_identities() {
    let s = decagon_surface();
    let h = cylinder_decomposition(&s, Direction::Horizontal, DEFAULT_TRACE_BUDGET).unwrap();
    let v = cylinder_decomposition(&s, Direction::Vertical, DEFAULT_TRACE_BUDGET).unwrap();
    let e = intersection_matrix(&h, &v).unwrap();
    assert_eq!(e.row_count(), 2);
    assert_eq!(e.col_count(), 3);
    let h_h: Vec<CycNum> = h.cylinders.iter().map(|c| c.height.clone()).collect();
    let b_h: Vec<CycNum> = h.cylinders.iter().map(|c| c.width.clone()).collect();
    let h_v: Vec<CycNum> = v.cylinders.iter().map(|c| c.height.clone()).collect();
    let b_v: Vec<CycNum> = v.cylinders.iter().map(|c| c.width.clone()).collect();
    // the true moduli are irrational here, so check the two linear
    // identity families directly in exact arithmetic
    for i in 0..2 {
        let mut s1 = CycNum::zero();
        for j in 0..3 {
            s1 = s1.add(&h_v[j].scale(&rat_i64(e.entry(i, j) as i64, 1)));
        }
        assert_eq!(s1, b_h[i], "width identity row {}", i);
    }
    for j in 0..3 {
        let mut s2 = CycNum::zero();
        for i in 0..2 {
            s2 = s2.add(&h_h[i].scale(&rat_i64(e.entry(i, j) as i64, 1)));
        }
        assert_eq!(s2, b_v[j], "width identity column {}", j);
    }
    // area conservation both ways
    assert_eq!(h.total_area(), v.total_area());
}

#[test]
fn decagon_involution() {
    let s = decagon_surface();
    let report = validate_surface(&s, DEFAULT_TRACE_BUDGET);
    assert_eq!(report.genus, 2);
    assert_eq!(report.zero_orders, vec![1, 1]);
    assert_eq!(report.horizontal_cylinders, Some(2));
    let inv = report.involution.as_ref().expect("decomposition succeeded");
    assert!(inv.exists, "hyperelliptic involution must exist");
    assert_eq!(inv.fixed_points, 6);
    assert!(inv.zeros_swapped);
    assert!(report.passes_for_genus(2));
}

/// The staircase with the decagon's normalized parameters and zero twist:
/// same horizontal data, vertical direction periodic with the corner
/// cylinder of modulus one.
#[test]
fn decagon_parameters_staircase() {
    let one = CycNum::one();
    let h = vec![one.clone(), phi().sub(&one)];
    let b = vec![
        phi().add(&CycNum::from_int(2)).scale(&rat_i64(1, 2)),
        sqrt5().scale(&rat_i64(1, 2)),
    ];
    let w = vec![phi().scale(&rat_i64(1, 2))];
    let t = vec![CycNum::zero()];
    let params = PrototypeParams::new(2, h.clone(), b.clone(), w.clone(), t).unwrap();
    let s = build_prototype(&params).unwrap();
    let report = validate_surface(&s, DEFAULT_TRACE_BUDGET);
    assert!(report.passes_for_genus(2), "report: {:?}", report);

    let hdec = cylinder_decomposition(&s, Direction::Horizontal, DEFAULT_TRACE_BUDGET).unwrap();
    let vdec = cylinder_decomposition(&s, Direction::Vertical, DEFAULT_TRACE_BUDGET).unwrap();
    assert_eq!(hdec.cylinders.len(), 2);
    assert_eq!(vdec.cylinders.len(), 3);
    let (ok, ints) = moduli_commensurability(&vdec.moduli());
    assert!(ok);
    let mut ints = ints.unwrap();
    ints.sort_unstable();
    assert_eq!(ints, vec![1, 1, 2]);

    let e = intersection_matrix(&hdec, &vdec).unwrap();
    // with zero twist the matrix is the staircase matrix up to column order
    let mut cols: Vec<Vec<u64>> = (0..3).map(|j| vec![e.entry(0, j), e.entry(1, j)]).collect();
    cols.sort();
    assert_eq!(cols, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);

    // round trip through the parameter extraction
    let inv = find_involution(&s, &hdec);
    assert!(inv.exists);
    for first in 0..2 {
        if let Some(px) = extract_prototype(&hdec, &inv, first) {
            if px.heights[0].is_one() {
                assert_eq!(px.heights, h);
                assert_eq!(px.widths, b);
                assert_eq!(px.slit_widths, w);
                assert!(px.twists[0].is_zero());
                return;
            }
        }
    }
    panic!("extraction did not recover the parameters");
}

/// The solved geometry from the staircase matrix and moduli (2,1,1)
/// reproduces the decagon's heights exactly.
#[test]
fn decagon_solve_round_trip() {
    let e = veech_core::flatsurf::IntersectionMatrix::new(vec![vec![1, 1, 0], vec![0, 1, 1]])
        .unwrap();
    // columns: corner of cylinder 1, the long slit cylinder, corner of
    // cylinder 2; true moduli are (1, 1/2, 1/2)
    let m = [rat_i64(1, 1), rat_i64(1, 2), rat_i64(1, 2)];
    let b_h = [
        phi().add(&CycNum::from_int(2)).scale(&rat_i64(1, 2)),
        sqrt5().scale(&rat_i64(1, 2)),
    ];
    let sol = solve_geometry(&b_h, &m, &e).unwrap();
    assert_eq!(sol.h_h[0], CycNum::one());
    assert_eq!(sol.h_h[1], phi().sub(&CycNum::one()));
    assert!(verify_period_identities(&e, &sol.h_h, &b_h, &sol.h_v, &sol.b_v, &m));
    // h_v = (u_1, w_1, u_2) = (1, phi/2, (phi-1)/2)
    assert_eq!(sol.h_v[0], CycNum::one());
    assert_eq!(sol.h_v[1], phi().scale(&rat_i64(1, 2)));
    assert_eq!(sol.h_v[2], phi().sub(&CycNum::one()).scale(&rat_i64(1, 2)));
}

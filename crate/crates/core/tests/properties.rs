use std::f64::consts::PI;

use proptest::prelude::*;

use ckgeom::cayley_klein::{Kind, Model};
use ckgeom::conic::Conic;
use ckgeom::io::Scene;
use ckgeom::lab::{random_scene, verify, Constraint, SceneSpec};
use ckgeom::measure;
use ckgeom::oriented::coherent_orientation;
use ckgeom::projective::{
    collinearity, concurrency, cr, cr_lines, harmonic_conjugate, incidence, join_unchecked as join, meet_unchecked as meet, separates,
    HomLine, HomPoint, LineChart, Quadrangle, OPPOSITE_SIDES,
};
use ckgeom::rays;
use ckgeom::scalar::{rel_diff, Scalar};
use ckgeom::triangle::{nx, pv, TriangleConfig};
use ckgeom::trig::{self, RightAngled};

const TOL: f64 = 1e-9;

fn point() -> impl Strategy<Value = HomPoint> {
    (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(x, y)| HomPoint::affine(x, y))
}

fn interior() -> impl Strategy<Value = HomPoint> {
    (0.0..0.9f64, 0.0..2.0 * PI).prop_map(|(r, t)| HomPoint::affine(r * t.cos(), r * t.sin()))
}

fn kind() -> impl Strategy<Value = Kind> {
    prop_oneof![Just(Kind::Hyperbolic), Just(Kind::Elliptic)]
}

fn on(p: &HomPoint, q: &HomPoint, t: f64) -> HomPoint {
    HomPoint::from_vec(p.coords() * Scalar::new(t.cos(), 0.0) + q.coords() * Scalar::new(t.sin(), 0.0)).unwrap()
}

/// Four points on a line with parameters spread apart.
fn quadruple() -> impl Strategy<Value = ([HomPoint; 4], [f64; 4])> {
    (point(), point(), prop::array::uniform4(0.0..PI)).prop_filter_map("spread", |(p, q, t)| {
        if p.separation(&q) < 0.1 {
            return None;
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if (t[i] - t[j]).abs() < 0.05 || (t[i] - t[j]).abs() > PI - 0.05 {
                    return None;
                }
            }
        }
        Some((t.map(|s| on(&p, &q, s)), t))
    })
}

fn scene(seed: u64, kind: Kind) -> TriangleConfig {
    random_scene(&SceneSpec::new(seed, kind, Constraint::Generic)).unwrap()
}

fn same_pair(a: (HomPoint, HomPoint), b: (HomPoint, HomPoint), tol: f64) -> bool {
    (a.0.same_as(&b.0, tol) && a.1.same_as(&b.1, tol)) || (a.0.same_as(&b.1, tol) && a.1.same_as(&b.0, tol))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn cross_ratio_identities((q, _) in quadruple(), e in 0.0..PI) {
        let [a, b, c, d] = q;
        let x = cr(&a, &b, &c, &d);
        prop_assert!(rel_diff(cr(&a, &b, &d, &c), x.inv()) <= TOL);
        prop_assert!(rel_diff(cr(&a, &c, &b, &d), Scalar::new(1.0, 0.0) - x) <= TOL);
        let e = on(&a, &b, e);
        prop_assume!([a, b, c, d].iter().all(|p| p.separation(&e) > 0.05));
        prop_assert!(rel_diff(x, cr(&a, &b, &e, &d) * cr(&a, &b, &c, &e)) <= TOL);
    }

    #[test]
    fn projection_invariance((q, _) in quadruple(), o in point(), m1 in point(), m2 in point()) {
        let l = join(&q[0], &q[1]);
        let m = join(&m1, &m2);
        prop_assume!(incidence(&o, &l) > 0.05 && incidence(&o, &m) > 0.05 && m1.separation(&m2) > 0.1);
        let img = q.map(|p| meet(&join(&o, &p), &m));
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| img[i].separation(&img[j]) > 1e-3)));
        prop_assert!(rel_diff(cr(&q[0], &q[1], &q[2], &q[3]), cr(&img[0], &img[1], &img[2], &img[3])) <= 1e-8);
    }

    #[test]
    fn harmonic_conjugate_is_an_involution((q, _) in quadruple()) {
        let [a, b, c, _] = q;
        let h = harmonic_conjugate(&a, &b, &c).unwrap();
        prop_assert!(harmonic_conjugate(&a, &b, &h).unwrap().same_as(&c, 1e-8));
    }

    #[test]
    fn separation_matches_interleaving((q, t) in quadruple()) {
        let [a, b, c, d] = q;
        let inside = |s: f64| (t[0].min(t[1]) < s) && (s < t[0].max(t[1]));
        let interleaved = inside(t[2]) != inside(t[3]);
        prop_assert_eq!(separates(&a, &b, &c, &d).unwrap(), interleaved);
        prop_assert_eq!(cr(&a, &b, &c, &d).re < 0.0, interleaved);
    }

    #[test]
    fn diagonal_triangle_is_harmonic(v in prop::array::uniform4(point())) {
        prop_assume!((0..4).all(|i| collinearity(&v[(i + 1) % 4], &v[(i + 2) % 4], &v[(i + 3) % 4]) > 0.05));
        let q = Quadrangle::new(v).unwrap();
        let d = q.diagonal_points();
        for k in 0..3 {
            let ((i, j), (m, n)) = OPPOSITE_SIDES[k];
            let l = join(&d[(k + 1) % 3], &d[(k + 2) % 3]);
            let x = meet(&l, &q.side(i, j));
            let y = meet(&l, &q.side(m, n));
            let r = cr(&d[(k + 1) % 3], &d[(k + 2) % 3], &x, &y);
            prop_assert!((r + 1.0).norm() <= 1e-8, "{r}");
        }
    }

    #[test]
    fn polarity_preserves_cross_ratios(k in kind(), (q, _) in quadruple()) {
        let m = Model::of_kind(k);
        let l = join(&q[0], &q[1]);
        prop_assume!(m.absolute.tangency(&l) > 1e-3);
        let x = cr(&q[0], &q[1], &q[2], &q[3]);
        let polars = q.map(|p| m.polar(&p));
        prop_assert!(rel_diff(cr_lines(&polars[0], &polars[1], &polars[2], &polars[3]), x) <= 1e-8);
        let conj = q.map(|p| m.conj(&p, &l));
        prop_assert!(rel_diff(cr(&conj[0], &conj[1], &conj[2], &conj[3]), x) <= 1e-8);
    }

    #[test]
    fn pole_and_polar_are_inverse(k in kind(), p in point(), x in point()) {
        let m = Model::of_kind(k);
        prop_assert!(m.pole(&m.polar(&p)).same_as(&p, 1e-10));
        prop_assume!(p.separation(&x) > 1e-3);
        let q = join(&p, &x);
        prop_assert!(incidence(&m.pole(&q), &m.polar(&p)) <= 1e-10);
    }

    #[test]
    fn inscribed_quadrangle_is_self_polar(t in prop::array::uniform4(0.0..2.0 * PI)) {
        let v = t.map(|s| HomPoint::affine(s.cos(), s.sin()));
        prop_assume!((0..4).all(|i| (i + 1..4).all(|j| v[i].separation(&v[j]) > 0.05)));
        let d = Quadrangle::new(v).unwrap().diagonal_points();
        let c = Conic::unit_circle();
        for i in 0..3 {
            prop_assert!(c.pole_of(&join(&d[nx(i)], &d[pv(i)])).same_as(&d[i], 1e-8));
        }
    }

    #[test]
    fn polar_drawn_from_quadrangle(p in interior(), x in point(), y in point()) {
        let c = Conic::unit_circle();
        prop_assume!(p.separation(&x) > 0.05 && p.separation(&y) > 0.05 && collinearity(&p, &x, &y) > 0.05);
        let l = c.polar_by_quadrangle(&p, &x, &y).unwrap();
        prop_assert!(l.same_as(&c.polar_of(&p), 1e-8));
    }

    #[test]
    fn four_point_lemma(k in kind(), a in point(), b in point()) {
        let m = Model::of_kind(k);
        prop_assume!(a.separation(&b) > 0.05);
        let l = join(&a, &b);
        prop_assume!(m.absolute.tangency(&l) > 1e-3 && m.absolute.residual(&a) > 1e-3 && m.absolute.residual(&b) > 1e-3);
        let [u, v] = m.absolute_points(&l);
        let (ap, bp) = (m.conj(&a, &l), m.conj(&b, &l));
        let lhs = cr(&a, &b, &bp, &ap) * 4.0;
        let rhs = cr(&u, &v, &a, &b) + cr(&u, &v, &b, &a) + 2.0;
        prop_assert!(rel_diff(lhs, rhs) <= 1e-8);
    }

    #[test]
    fn squared_cosine_is_cosh_squared(a in interior(), b in interior()) {
        prop_assume!(a.separation(&b) > 1e-3);
        let m = Model::hyperbolic();
        let d = measure::klein_distance(&a, &b);
        let c = m.squared_trig(&a, &b).unwrap().c;
        prop_assert!(rel_diff(c, Scalar::new(d.cosh().powi(2), 0.0)) <= 1e-9);
        prop_assert!((m.distance(&a, &b).unwrap() - d).abs() <= 1e-9 * d.max(1.0));
    }

    #[test]
    fn squared_cosine_of_lines(p in interior(), q1 in interior(), q2 in interior()) {
        prop_assume!(p.separation(&q1) > 0.05 && p.separation(&q2) > 0.05 && collinearity(&p, &q1, &q2) > 1e-3);
        let m = Model::hyperbolic();
        let (a, b) = (join(&p, &q1), join(&p, &q2));
        let th = measure::klein_angle(&p, &q1, &q2);
        let c = m.squared_trig_lines(&a, &b).unwrap().c;
        prop_assert!(rel_diff(c, Scalar::new(th.cos().powi(2), 0.0)) <= 1e-9);
        prop_assert!((m.angle_lines(&a, &b).unwrap() - th.min(PI - th)).abs() <= 1e-9);
    }

    #[test]
    fn interior_midpoint_bisects(a in interior(), b in interior()) {
        prop_assume!(a.separation(&b) > 1e-3);
        let m = Model::hyperbolic();
        let (q1, q2) = m.midpoints(&a, &b).unwrap();
        let q = if m.is_interior(&q1) { q1 } else { q2 };
        let d = measure::klein_distance(&a, &b);
        prop_assert!((measure::klein_distance(&a, &q) - d / 2.0).abs() <= 1e-9);
        prop_assert!((measure::klein_distance(&q, &b) - d / 2.0).abs() <= 1e-9);
    }

    #[test]
    fn midpoints_are_harmonic_twice(k in kind(), a in point(), b in point()) {
        let m = Model::of_kind(k);
        prop_assume!(a.separation(&b) > 0.05);
        let l = join(&a, &b);
        prop_assume!(m.absolute.tangency(&l) > 1e-3 && m.absolute.residual(&a) > 1e-3 && m.absolute.residual(&b) > 1e-3);
        let (q, qp) = m.midpoints(&a, &b).unwrap();
        let [u, v] = m.absolute_points(&l);
        prop_assert!((cr(&a, &b, &q, &qp) + 1.0).norm() <= 1e-8);
        prop_assert!((cr(&u, &v, &q, &qp) + 1.0).norm() <= 1e-8);
        let (ap, bp) = (m.conj(&a, &l), m.conj(&b, &l));
        prop_assert!(same_pair((q, qp), m.midpoints(&ap, &bp).unwrap(), 1e-7));
    }

    #[test]
    fn midpoint_constructions_agree(k in kind(), a in point(), b in point()) {
        let m = Model::of_kind(k);
        prop_assume!(a.separation(&b) > 0.05);
        let l = join(&a, &b);
        prop_assume!(m.absolute.tangency(&l) > 1e-2 && m.absolute.residual(&a) > 1e-2 && m.absolute.residual(&b) > 1e-2);
        let mids = m.midpoints(&a, &b).unwrap();
        prop_assert!(same_pair(mids, m.midpoints_by_pole(&a, &b).unwrap(), 1e-7));
        prop_assert!(same_pair(mids, m.midpoints_by_polars(&a, &b).unwrap(), 1e-7));
    }

    #[test]
    fn polars_of_midpoints_bisect(k in kind(), a in point(), b in point()) {
        let m = Model::of_kind(k);
        prop_assume!(a.separation(&b) > 0.05);
        let l = join(&a, &b);
        prop_assume!(m.absolute.tangency(&l) > 1e-3 && m.absolute.residual(&a) > 1e-3 && m.absolute.residual(&b) > 1e-3);
        let (q, qp) = m.midpoints(&a, &b).unwrap();
        let (pa, pb, pq, pqp) = (m.polar(&a), m.polar(&b), m.polar(&q), m.polar(&qp));
        prop_assert!((cr_lines(&pa, &pb, &pq, &pqp) + 1.0).norm() <= 1e-8);
        prop_assert!(m.conjugacy(&pq, &pqp) <= 1e-9);
        if k == Kind::Elliptic {
            let x = m.angle_lines(&pq, &pa).unwrap();
            let y = m.angle_lines(&pq, &pb).unwrap();
            prop_assert!((x - y).abs() <= 1e-8);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangles_are_perspective_in_pairs(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let (v, w, d, dp) = (t.vertex, t.pvertex, t.def(), t.pdef());
        for (x, y) in [(&v, &w), (&v, &d), (&v, &dp), (&w, &d), (&w, &dp), (&d, &dp)] {
            let l = [0, 1, 2].map(|i| join(&x[i], &y[i]));
            prop_assert!(concurrency(&l[0], &l[1], &l[2]) <= TOL);
        }
    }

    #[test]
    fn orthocenter_is_self_dual(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let p = TriangleConfig::new(t.model, t.pvertex[0], t.pvertex[1], t.pvertex[2]).unwrap();
        prop_assert!(p.h.same_as(&t.h, 1e-9));
    }

    #[test]
    fn side_bisectors_are_medial_altitudes(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let d = t.def();
        for i in 0..3 {
            let bisector = join(&t.pvertex[i], &d[i]);
            prop_assert!(t.model.conjugacy(&bisector, &join(&d[nx(i)], &d[pv(i)])) <= 1e-9);
        }
    }

    #[test]
    fn midpoints_are_diagonal_points(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        for i in 0..3 {
            let (e, f) = (t.mids[nx(i)], t.mids[pv(i)]);
            let q = Quadrangle::new([e.0, e.1, f.0, f.1]).unwrap().diagonal_points();
            for p in [t.mids[i].0, t.mids[i].1, t.vertex[i]] {
                prop_assert!(q.iter().any(|x| x.same_as(&p, 1e-8)));
            }
        }
    }

    #[test]
    fn midpoint_quadrilateral(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        prop_assert!(t.midpoint_quadrilateral_residual() <= TOL);
    }

    #[test]
    fn oriented_squares(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let ot = coherent_orientation(&t).unwrap();
        prop_assert!(ot.square_residual().unwrap() <= 1e-8);
    }

    #[test]
    fn altitude_split_gives_law_of_sines(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let [a, b, c] = t.vertex;
        let f = t.foot[0];
        prop_assume!(f.separation(&b) > 1e-3 && f.separation(&c) > 1e-3 && f.separation(&a) > 1e-3);
        let (Ok(x), Ok(y)) = (RightAngled::new(t.model, f, a, b), RightAngled::new(t.model, f, a, c)) else {
            return Err(TestCaseError::reject("degenerate split"));
        };
        prop_assert!(x.identity_residuals().unwrap()[1] <= 1e-8);
        prop_assert!(y.identity_residuals().unwrap()[1] <= 1e-8);
        let (_, dev) = trig::squared_law_of_sines(&t).unwrap();
        prop_assert!(dev <= 1e-8);
    }

    #[test]
    fn complementary_midpoints_are_conconic(seed in any::<u64>(), k in kind()) {
        let t = scene(seed, k);
        let (fit, carnot) = trig::complementary_midpoints_conic(&t).unwrap();
        prop_assert!(fit <= 1e-8 && carnot <= 1e-8);
    }

    #[test]
    fn isosceles_iff_concurrent(seed in any::<u64>(), k in kind()) {
        let iso = random_scene(&SceneSpec::new(seed, k, Constraint::Isosceles)).unwrap();
        prop_assert!(iso.isosceles_concurrency(0) <= 1e-9);
        let t = scene(seed, k);
        prop_assert!((0..3).all(|i| t.isosceles_concurrency(i) > 1e-9 || t.is_isosceles_at(i)));
    }

    #[test]
    fn ray_angle_laws(p in interior(), q1 in interior(), q2 in interior()) {
        prop_assume!(p.separation(&q1) > 0.05 && p.separation(&q2) > 0.05 && collinearity(&p, &q1, &q2) > 1e-3);
        let c = Conic::unit_circle();
        let r1 = rays::ray_through(&c, &p, &q1).unwrap();
        let r2 = rays::ray_through(&c, &p, &q2).unwrap();
        let th = rays::angle_between_rays_on(&c, &r1, &r2).unwrap();
        let un = th.min(2.0 * PI - th);
        let la = Model::hyperbolic().angle_lines(&r1.carrier, &r2.carrier).unwrap();
        prop_assert!((un.min(PI - un) - la).abs() <= 1e-9);
        let (c1, c2) = rays::ray_cosines(&c, &r1, &r2).unwrap();
        prop_assert_eq!(c2.re > 0.0, un < PI / 2.0);
        prop_assert!((c1 - c2).norm() <= 1e-9);
        let back = rays::angle_between_rays_on(&c, &r2, &r1).unwrap();
        prop_assert!(((th + back) % (2.0 * PI)).abs() <= 1e-9 || ((th + back) - 2.0 * PI).abs() <= 1e-9);
    }

    #[test]
    fn scene_round_trip(k in kind(), pts in prop::collection::vec(point(), 1..6)) {
        let mut s = Scene::new(Model::of_kind(k));
        for (i, p) in pts.iter().enumerate() {
            s = s.with_point(&format!("P{i}"), *p);
        }
        let f = s.to_file();
        let again = ckgeom::io::SceneFile::from_json(&f.to_json(), true).unwrap().parse().unwrap().to_file();
        prop_assert_eq!(f, again);
    }
}

#[test]
fn certificates_are_deterministic() {
    for id in ["desargues", "nine_point_conic", "table_5_1"] {
        let mut a = verify(id, Kind::Hyperbolic, 42, 50, None).unwrap();
        let mut b = verify(id, Kind::Hyperbolic, 42, 50, None).unwrap();
        a.wall_time = 0.0;
        b.wall_time = 0.0;
        assert_eq!(a, b);
    }
}

#[test]
fn line_chart_round_trip() {
    let l = HomLine::new(1.0, -2.0, 0.5);
    let ch = LineChart::new(&l);
    let p = ch.point([Scalar::new(0.3, 0.0), Scalar::new(1.0, 0.0)]).unwrap();
    assert!(incidence(&p, &l) < 1e-15);
}

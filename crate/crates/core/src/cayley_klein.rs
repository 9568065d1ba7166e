//! Cayley-Klein metric: distances and angles through cross ratios with the
//! absolute conic, midpoints, point symmetries, the squared ratios C, S, T
//! with their geometric readings, and oriented segments with cc and ss.

use crate::conic::{harmonic_homology, Conic, ConicClass, M3};
use crate::error::{GeomError, Result};
use crate::projective::{
    cross, cross_ratio_raw, join, join_unchecked, meet_unchecked, norm, BinaryForm, HomLine, HomPoint, LineChart, Quadrangle, V3,
};
use crate::scalar::{rel_diff, tol, ExtScalar, Scalar, ONE, ZERO};

/// Hyperbolic for a real absolute conic, elliptic for an imaginary one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Hyperbolic,
    Elliptic,
}

/// A Cayley-Klein plane: the projective plane with an absolute conic.
#[derive(Clone, Copy, Debug)]
pub struct Model {
    pub absolute: Conic,
    pub kind: Kind,
}

impl Model {
    pub fn new(absolute: Conic) -> Result<Self> {
        let kind = match absolute.class() {
            ConicClass::Real => Kind::Hyperbolic,
            ConicClass::Imaginary => Kind::Elliptic,
            ConicClass::Degenerate => return Err(GeomError::DegenerateConic),
            ConicClass::Complex => return Err(GeomError::KindMismatch),
        };
        Ok(Model { absolute, kind })
    }

    /// Klein disk model with the unit circle as absolute.
    pub fn hyperbolic() -> Self {
        Model::new(Conic::unit_circle()).expect("unit circle")
    }

    /// Elliptic plane with absolute `x² + y² + z² = 0`.
    pub fn elliptic() -> Self {
        Model::new(Conic::imaginary_unit()).expect("imaginary unit conic")
    }

    pub fn of_kind(kind: Kind) -> Self {
        match kind {
            Kind::Hyperbolic => Self::hyperbolic(),
            Kind::Elliptic => Self::elliptic(),
        }
    }

    pub fn polar(&self, p: &HomPoint) -> HomLine {
        self.absolute.polar_of(p)
    }

    pub fn pole(&self, l: &HomLine) -> HomPoint {
        self.absolute.pole_of(l)
    }

    /// Conjugate point of `Q` on `p`.
    pub fn conj(&self, q: &HomPoint, p: &HomLine) -> HomPoint {
        self.absolute.conj_point(q, p)
    }

    /// Conjugate line of `q` through `P`.
    pub fn conj_line(&self, q: &HomLine, p: &HomPoint) -> HomLine {
        self.absolute.conj_line(q, p)
    }

    pub fn on_absolute(&self, p: &HomPoint) -> bool {
        self.absolute.contains(p, tol())
    }

    /// True for points of the hyperbolic plane (interior of the absolute),
    /// and for every real point of the elliptic plane.
    pub fn is_interior(&self, p: &HomPoint) -> bool {
        match self.kind {
            Kind::Hyperbolic => p.is_real() && self.absolute.is_interior(p),
            Kind::Elliptic => p.is_real(),
        }
    }

    /// The two points of the absolute on a line.
    pub fn absolute_points(&self, l: &HomLine) -> [HomPoint; 2] {
        self.absolute.line_meet(l).points
    }

    fn check_in_model(&self, p: &HomPoint, err: GeomError) -> Result<()> {
        if self.is_interior(p) {
            Ok(())
        } else {
            Err(err)
        }
    }

    /// Distance between two points of the plane: `½|ln (UVAB)|` in the
    /// hyperbolic case, `½|arg (UVAB)|` in the elliptic case. The elliptic value
    /// lies in `[0, π/2]` and measures the shorter of the two segments; the
    /// other one has length `π − d`.
    pub fn distance(&self, a: &HomPoint, b: &HomPoint) -> Result<f64> {
        self.check_in_model(a, GeomError::PointOutsideModel)?;
        self.check_in_model(b, GeomError::PointOutsideModel)?;
        if a.separation(b) <= tol() {
            return Ok(0.0);
        }
        let l = join_unchecked(a, b);
        let [u, v] = self.absolute_points(&l);
        let x = cross_ratio_raw(u.coords(), v.coords(), a.coords(), b.coords());
        Ok(match self.kind {
            Kind::Hyperbolic => 0.5 * x.norm().ln().abs(),
            Kind::Elliptic => 0.5 * x.arg().abs(),
        })
    }

    /// Angle between two lines through a point of the plane, in `[0, π/2]`.
    /// Lines do not distinguish an angle from its supplement; the returned
    /// value is the acute one.
    pub fn angle_lines(&self, a: &HomLine, b: &HomLine) -> Result<f64> {
        if a.separation(b) <= tol() {
            return Ok(0.0);
        }
        let p = meet_unchecked(a, b);
        self.check_in_model(&p, GeomError::VertexOutsideModel)?;
        // Polarity carries the tangents from P to the absolute points of its polar.
        let [u, v] = self.absolute_points(&self.polar(&p));
        let x = cross_ratio_raw(u.coords(), v.coords(), self.pole(a).coords(), self.pole(b).coords());
        Ok(0.5 * x.arg().abs())
    }

    /// Scale-free conjugacy residual `|aᵀ M⁻¹ b|`.
    pub fn conjugacy(&self, a: &HomLine, b: &HomLine) -> f64 {
        let pa = self.pole(a);
        self.absolute.bilinear(pa.coords(), self.pole(b).coords()).norm()
            / (self.absolute.matrix().norm() * norm(pa.coords()) * norm(self.pole(b).coords()))
    }

    pub fn is_perpendicular(&self, a: &HomLine, b: &HomLine) -> bool {
        self.conjugacy(a, b) <= tol()
    }

    /// The two midpoints of `AB`, in canonical order.
    ///
    /// They are the common harmonic pair of `{A, B}` and of the absolute points
    /// of `AB`. On a tangent line they are the contact point and its harmonic
    /// conjugate with respect to `A, B`.
    pub fn midpoints(&self, a: &HomPoint, b: &HomPoint) -> Result<(HomPoint, HomPoint)> {
        if self.on_absolute(a) || self.on_absolute(b) {
            return Err(GeomError::EndpointOnConic);
        }
        let l = join(a, b)?;
        Ok(self.midpoints_on(&l, a, b))
    }

    /// Midpoints from the quadrangle `Φ·PA, Φ·PB` with `P` the pole of `AB`.
    pub fn midpoints_by_pole(&self, a: &HomPoint, b: &HomPoint) -> Result<(HomPoint, HomPoint)> {
        let p = self.pole(&join(a, b)?);
        let [a1, a2] = self.absolute_points(&join(&p, a)?);
        let [b1, b2] = self.absolute_points(&join(&p, b)?);
        other_diagonal_points([a1, a2, b1, b2], &p)
    }

    /// Midpoints from the quadrangle `Φ·ρ(A), Φ·ρ(B)`.
    pub fn midpoints_by_polars(&self, a: &HomPoint, b: &HomPoint) -> Result<(HomPoint, HomPoint)> {
        let p = self.pole(&join(a, b)?);
        let [a1, a2] = self.absolute_points(&self.polar(a));
        let [b1, b2] = self.absolute_points(&self.polar(b));
        other_diagonal_points([a1, a2, b1, b2], &p)
    }

    /// Midpoints of `AB` on a known carrier, without validation.
    pub fn midpoints_on(&self, l: &HomLine, a: &HomPoint, b: &HomPoint) -> (HomPoint, HomPoint) {
        let chart = LineChart::new(l);
        let q = self.absolute.restrict(&chart);
        let (x, y) = (chart.coords(a), chart.coords(b));
        // Forms s with s(A, B) = 0 and apolar to the absolute.
        let r1 = V3::new(x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1]);
        let r2 = V3::new(q.c, -Scalar::new(2.0, 0.0) * q.b, q.a);
        let s = cross(&r1, &r2);
        let f = BinaryForm { a: s[0], b: s[1], c: s[2] };
        let (u, v) = f.roots().unwrap_or(([ONE, ZERO], [ZERO, ONE]));
        let mut m = [chart.point(u).expect("root"), chart.point(v).expect("root")];
        m.sort_by(|p, q| p.canonical_cmp(q));
        (m[0], m[1])
    }

    /// Midpoints of `A B_p`, also those of `A_p B`.
    pub fn complementary_midpoints(&self, a: &HomPoint, b: &HomPoint) -> Result<(HomPoint, HomPoint)> {
        if self.on_absolute(a) || self.on_absolute(b) {
            return Err(GeomError::EndpointOnConic);
        }
        let l = join(a, b)?;
        let bp = self.conj(b, &l);
        Ok(self.midpoints_on(&l, a, &bp))
    }

    /// The symmetry with center `Q`: the harmonic homology with center `Q`
    /// and axis the polar of `Q`.
    pub fn point_symmetry(&self, q: &HomPoint, p: &HomPoint) -> Result<HomPoint> {
        if self.on_absolute(q) {
            return Err(GeomError::CenterOnConic);
        }
        Ok(crate::conic::apply(&self.symmetry_matrix(q), p))
    }

    pub fn symmetry_matrix(&self, q: &HomPoint) -> M3 {
        harmonic_homology(q, &self.polar(q))
    }

    /// The squared ratios of a segment: `C = (A B B_p A_p)`, `S = 1 − C`, `T = S / C`.
    pub fn squared_trig(&self, a: &HomPoint, b: &HomPoint) -> Result<SquaredTrig> {
        if self.on_absolute(a) || self.on_absolute(b) {
            return Err(GeomError::EndpointOnConic);
        }
        let l = join(a, b)?;
        let (ap, bp) = (self.conj(a, &l), self.conj(b, &l));
        if b.same_as(&ap, tol()) {
            return Ok(SquaredTrig { c: ZERO, s: ONE, t: ExtScalar::Infinity });
        }
        let c = cross_ratio_raw(a.coords(), b.coords(), bp.coords(), ap.coords());
        let s = ONE - c;
        Ok(SquaredTrig { c, s, t: ExtScalar::ratio(s, c) })
    }

    /// Squared ratios of the angle between two lines: those of the segment
    /// joining their poles.
    pub fn squared_trig_lines(&self, a: &HomLine, b: &HomLine) -> Result<SquaredTrig> {
        self.squared_trig(&self.pole(a), &self.pole(b))
    }

    /// Position class of a segment and the geometric reading of its ratios.
    pub fn trig_case(&self, a: &HomPoint, b: &HomPoint) -> Result<TrigCase> {
        if !a.is_real() || !b.is_real() {
            return Err(GeomError::NonRealInput);
        }
        if self.kind == Kind::Elliptic {
            return Ok(TrigCase::Elliptic);
        }
        let l = join(a, b)?;
        if self.absolute.is_tangent(&l) {
            return Ok(TrigCase::Tangent);
        }
        Ok(match (self.is_interior(a), self.is_interior(b)) {
            (true, true) => TrigCase::InteriorInterior,
            (true, false) => TrigCase::InteriorExterior,
            (false, true) => TrigCase::ExteriorInterior,
            (false, false) => {
                if self.absolute.line_meet(&l).status == Some(crate::conic::MeetStatus::Secant) {
                    TrigCase::ExteriorSecant
                } else {
                    TrigCase::ExteriorLine
                }
            }
        })
    }

    /// The ratios of a segment with their geometric translation, computed
    /// independently from measured distances and angles.
    pub fn translate_trig(&self, a: &HomPoint, b: &HomPoint) -> Result<TrigValue> {
        let ratios = self.squared_trig(a, b)?;
        let case = self.trig_case(a, b)?;
        let l = join(a, b)?;
        let (ap, bp) = (self.conj(a, &l), self.conj(b, &l));
        let (magnitude, geometric) = match case {
            TrigCase::Elliptic => {
                let d = self.distance(a, b)?;
                (d, circular(d))
            }
            TrigCase::InteriorInterior => {
                let d = self.distance(a, b)?;
                (d, hyperbolic(d))
            }
            TrigCase::InteriorExterior => {
                let d = self.distance(a, &bp)?;
                (d, mixed(d))
            }
            TrigCase::ExteriorInterior => {
                let d = self.distance(&ap, b)?;
                (d, mixed(d))
            }
            TrigCase::ExteriorSecant => {
                let d = self.distance(&ap, &bp)?;
                (d, hyperbolic(d))
            }
            TrigCase::ExteriorLine => {
                let t = self.angle_lines(&self.polar(a), &self.polar(b))?;
                (t, circular(t))
            }
            TrigCase::Tangent => (0.0, [1.0, 0.0, 0.0]),
        };
        Ok(TrigValue { case, ratios, magnitude, geometric })
    }

    /// A segment with preferred midpoint and complementary midpoint, chosen
    /// by index in canonical order.
    pub fn orient_segment(&self, a: &HomPoint, b: &HomPoint, mid: usize, comp: usize) -> Result<OrientedSegment> {
        let (m0, m1) = self.midpoints(a, b)?;
        let (c0, c1) = self.complementary_midpoints(a, b)?;
        Ok(OrientedSegment::new(self, *a, *b, if mid == 0 { m0 } else { m1 }, if comp == 0 { c0 } else { c1 }))
    }
}

fn circular(d: f64) -> [f64; 3] {
    let (c, s) = (d.cos().powi(2), d.sin().powi(2));
    [c, s, s / c]
}

fn hyperbolic(d: f64) -> [f64; 3] {
    let (c, s) = (d.cosh().powi(2), -d.sinh().powi(2));
    [c, s, s / c]
}

fn mixed(d: f64) -> [f64; 3] {
    let (c, s) = (-d.sinh().powi(2), d.cosh().powi(2));
    [c, s, s / c]
}

/// The squared ratios of a segment.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SquaredTrig {
    pub c: Scalar,
    pub s: Scalar,
    pub t: ExtScalar,
}

/// Position of a segment relative to the absolute conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigCase {
    /// Elliptic plane: `cos² d, sin² d, tan² d`.
    Elliptic,
    /// Both endpoints interior: `cosh² d, −sinh² d, −tanh² d`.
    InteriorInterior,
    /// `A` interior, `B` exterior: `−sinh², cosh², −coth²` of `d(A, B_p)`.
    InteriorExterior,
    /// `A` exterior, `B` interior: `−sinh², cosh², −coth²` of `d(A_p, B)`.
    ExteriorInterior,
    /// Both exterior on a secant line: `cosh², −sinh², −tanh²` of `d(A_p, B_p)`.
    ExteriorSecant,
    /// Both exterior on an exterior line: `cos², sin², tan²` of the angle between the polars.
    ExteriorLine,
    /// Tangent carrier.
    Tangent,
}

impl TrigCase {
    pub fn name(&self) -> &'static str {
        match self {
            TrigCase::Elliptic => "elliptic",
            TrigCase::InteriorInterior => "hyp-int-int",
            TrigCase::InteriorExterior => "hyp-int-ext",
            TrigCase::ExteriorInterior => "hyp-ext-int",
            TrigCase::ExteriorSecant => "hyp-ext-ext-secant",
            TrigCase::ExteriorLine => "hyp-angle",
            TrigCase::Tangent => "tangent",
        }
    }
}

/// Projective ratios of a segment next to their geometric values.
#[derive(Clone, Copy, Debug)]
pub struct TrigValue {
    pub case: TrigCase,
    pub ratios: SquaredTrig,
    /// The measured distance or angle the geometric values are built from.
    pub magnitude: f64,
    /// Geometric `[C, S, T]`.
    pub geometric: [f64; 3],
}

impl TrigValue {
    /// Largest relative deviation between the projective and geometric values.
    pub fn residual(&self) -> f64 {
        let r = &self.ratios;
        let mut e = rel_diff(r.c, Scalar::new(self.geometric[0], 0.0)).max(rel_diff(r.s, Scalar::new(self.geometric[1], 0.0)));
        if let ExtScalar::Finite(t) = r.t {
            e = e.max(rel_diff(t, Scalar::new(self.geometric[2], 0.0)));
        }
        e
    }
}

/// Direction of traversal of an oriented segment.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Reverse,
}

/// A segment with a preferred midpoint `D` and complementary midpoint `G`.
#[derive(Clone, Copy, Debug)]
pub struct OrientedSegment {
    pub a: HomPoint,
    pub b: HomPoint,
    pub mid: HomPoint,
    pub comp: HomPoint,
    pub ap: HomPoint,
    pub bp: HomPoint,
}

impl OrientedSegment {
    pub fn new(model: &Model, a: HomPoint, b: HomPoint, mid: HomPoint, comp: HomPoint) -> Self {
        let l = join_unchecked(&a, &b);
        OrientedSegment { a, b, mid, comp, ap: model.conj(&a, &l), bp: model.conj(&b, &l) }
    }

    /// `cc(AB) = (A B B_p D)`, `cc(BA) = (B A A_p D)`.
    pub fn cc(&self, dir: Direction) -> Scalar {
        match dir {
            Direction::Forward => cross_ratio_raw(self.a.coords(), self.b.coords(), self.bp.coords(), self.mid.coords()),
            Direction::Reverse => cross_ratio_raw(self.b.coords(), self.a.coords(), self.ap.coords(), self.mid.coords()),
        }
    }

    /// `ss(AB) = (A B_p B G)`, `ss(BA) = (B A_p A G)`.
    pub fn ss(&self, dir: Direction) -> Scalar {
        match dir {
            Direction::Forward => cross_ratio_raw(self.a.coords(), self.bp.coords(), self.b.coords(), self.comp.coords()),
            Direction::Reverse => cross_ratio_raw(self.b.coords(), self.ap.coords(), self.a.coords(), self.comp.coords()),
        }
    }
}

/// `cc(XY) = (X Y Y_p D)` for a segment and one of its midpoints.
pub fn cc_of(x: &HomPoint, y: &HomPoint, yp: &HomPoint, d: &HomPoint) -> Scalar {
    cross_ratio_raw(x.coords(), y.coords(), yp.coords(), d.coords())
}

/// `ss(XY) = (X Y_p Y G)` for a segment and one of its complementary midpoints.
pub fn ss_of(x: &HomPoint, y: &HomPoint, yp: &HomPoint, g: &HomPoint) -> Scalar {
    cross_ratio_raw(x.coords(), yp.coords(), y.coords(), g.coords())
}

/// The two diagonal points of a quadrangle other than the one nearest `P`.
fn other_diagonal_points(v: [HomPoint; 4], p: &HomPoint) -> Result<(HomPoint, HomPoint)> {
    let d = Quadrangle::new(v)?.diagonal_points();
    let k = (0..3).min_by(|&i, &j| d[i].separation(p).partial_cmp(&d[j].separation(p)).unwrap()).unwrap();
    Ok((d[(k + 1) % 3], d[(k + 2) % 3]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::cr;
    use crate::scalar::{approx_eq, re};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn pt(x: f64, y: f64) -> HomPoint {
        HomPoint::affine(x, y)
    }

    #[test]
    fn distance_examples() {
        let m = Model::hyperbolic();
        let d = m.distance(&pt(0.0, 0.0), &pt(0.5, 0.0)).unwrap();
        assert!((d - 0.5f64.atanh()).abs() < 1e-12);
        assert!((d - 0.5 * 3f64.ln()).abs() < 1e-12);
        assert_eq!(m.distance(&pt(0.3, 0.1), &pt(0.3, 0.1)).unwrap(), 0.0);
        assert_eq!(m.distance(&pt(0.0, 0.0), &pt(2.0, 0.0)), Err(GeomError::PointOutsideModel));
        // Klein model oracle: cosh d = (1 − p·q) / sqrt((1 − |p|²)(1 − |q|²)).
        let (p, q): ((f64, f64), (f64, f64)) = ((0.3, -0.4), (-0.5, 0.2));
        let k = (1.0 - p.0 * q.0 - p.1 * q.1) / ((1.0 - p.0 * p.0 - p.1 * p.1) * (1.0 - q.0 * q.0 - q.1 * q.1)).sqrt();
        let d = m.distance(&pt(p.0, p.1), &pt(q.0, q.1)).unwrap();
        assert!((d.cosh() - k).abs() < 1e-12);
    }

    #[test]
    fn elliptic_line_has_length_pi() {
        let m = Model::elliptic();
        // Three points on the line z = 0 at angles 0, π/3, 2π/3.
        let q = |t: f64| HomPoint::new(t.cos(), t.sin(), 0.0);
        let (a, b, c) = (q(0.0), q(PI / 3.0), q(2.0 * PI / 3.0));
        let total = m.distance(&a, &b).unwrap() + m.distance(&b, &c).unwrap() + m.distance(&c, &a).unwrap();
        assert!((total - PI).abs() < 1e-12);
        let d = m.distance(&q(0.0), &q(2.0)).unwrap();
        assert!((d - (PI - 2.0)).abs() < 1e-12);
    }

    #[test]
    fn angle_examples() {
        let m = Model::hyperbolic();
        let (x, diag) = (HomLine::new(0.0, 1.0, 0.0), HomLine::new(1.0, -1.0, 0.0));
        assert!((m.angle_lines(&x, &diag).unwrap() - FRAC_PI_4).abs() < 1e-12);
        assert_eq!(m.angle_lines(&x, &x).unwrap(), 0.0);
        let y = m.conj_line(&x, &pt(0.2, 0.0));
        assert!((m.angle_lines(&x, &y).unwrap() - FRAC_PI_2).abs() < 1e-12);
        let far = meet_unchecked(&HomLine::new(1.0, 0.0, -2.0), &x);
        let through_far = join_unchecked(&far, &pt(0.0, 1.0));
        assert_eq!(m.angle_lines(&x, &through_far), Err(GeomError::VertexOutsideModel));
    }

    #[test]
    fn perpendicularity() {
        let m = Model::hyperbolic();
        assert!(m.is_perpendicular(&HomLine::new(0.0, 1.0, 0.0), &HomLine::new(1.0, 0.0, 0.0)));
        assert!(!m.is_perpendicular(&HomLine::new(0.0, 1.0, 0.0), &HomLine::new(1.0, -1.0, 0.0)));
    }

    #[test]
    fn midpoint_examples() {
        let m = Model::hyperbolic();
        let (a, b) = (pt(-0.5, 0.0), pt(0.5, 0.0));
        let (q, qp) = m.midpoints(&a, &b).unwrap();
        let want = [pt(0.0, 0.0), HomPoint::new(1.0, 0.0, 0.0)];
        assert!(want.iter().any(|w| w.same_as(&q, 1e-14)) && want.iter().any(|w| w.same_as(&qp, 1e-14)));
        assert_eq!(m.midpoints(&pt(1.0, 0.0), &b), Err(GeomError::EndpointOnConic));
        let (a, b) = (pt(0.1, 0.4), pt(-0.6, 0.2));
        let (q, qp) = m.midpoints(&a, &b).unwrap();
        let [u, v] = m.absolute_points(&join_unchecked(&a, &b));
        assert!(approx_eq(cr(&a, &b, &q, &qp), re(-1.0), 1e-12));
        assert!(approx_eq(cr(&u, &v, &q, &qp), re(-1.0), 1e-12));
    }

    #[test]
    fn point_symmetry_examples() {
        let m = Model::hyperbolic();
        let p = m.point_symmetry(&pt(0.0, 0.0), &pt(0.5, 0.0)).unwrap();
        assert!(p.same_as(&pt(-0.5, 0.0), 1e-15));
        let q = pt(0.2, 0.3);
        let on_axis = meet_unchecked(&m.polar(&q), &HomLine::new(0.0, 1.0, 0.0));
        assert!(m.point_symmetry(&q, &on_axis).unwrap().same_as(&on_axis, 1e-14));
        assert_eq!(m.point_symmetry(&pt(1.0, 0.0), &q), Err(GeomError::CenterOnConic));
    }

    #[test]
    fn squared_trig_examples() {
        let m = Model::hyperbolic();
        let t = m.squared_trig(&pt(0.0, 0.0), &pt(0.5, 0.0)).unwrap();
        assert!(approx_eq(t.c, re(4.0 / 3.0), 1e-12));
        assert!(approx_eq(t.s, re(-1.0 / 3.0), 1e-12));
        let a = pt(0.3, 0.1);
        let l = HomLine::new(0.0, 1.0, -0.1);
        let right = m.conj(&a, &l);
        let t = m.squared_trig(&a, &right).unwrap();
        assert_eq!((t.c, t.s, t.t), (ZERO, ONE, ExtScalar::Infinity));
    }

    #[test]
    fn oriented_segment_examples() {
        let m = Model::hyperbolic();
        let (a, b) = (pt(0.0, 0.0), pt(0.5, 0.0));
        let s0 = m.orient_segment(&a, &b, 0, 0).unwrap();
        let s1 = m.orient_segment(&a, &b, 1, 1).unwrap();
        assert!(approx_eq(s0.cc(Direction::Forward), -s1.cc(Direction::Forward), 1e-12));
        for s in [s0, s1] {
            assert!(approx_eq(s.cc(Direction::Forward), s.cc(Direction::Reverse), 1e-12));
            assert!(approx_eq(s.ss(Direction::Forward), -s.ss(Direction::Reverse), 1e-12));
            assert!(approx_eq(s.cc(Direction::Forward).powi(2), re(4.0 / 3.0), 1e-12));
            assert!(approx_eq(s.ss(Direction::Forward).powi(2), re(-1.0 / 3.0), 1e-12));
        }
        let cc = [s0, s1].map(|s| s.cc(Direction::Forward).re);
        assert!(cc.iter().any(|c| (c - 2.0 / 3f64.sqrt()).abs() < 1e-12));
    }
}

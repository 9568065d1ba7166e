//! Conics as symmetric 3×3 matrices: polarity, conjugacy, line sections,
//! fitting through points, cross ratio over a conic and the eleven-point conic.

use nalgebra::{DMatrix, Matrix3, SymmetricEigen, Vector3, SVD};

use crate::error::{GeomError, Result};
use crate::projective::{
    self, cross, dot, harmonic_unchecked, incidence, join_unchecked, meet_unchecked, norm, quadrangular_involution, BinaryForm, HomLine,
    HomPoint, LineChart, Quadrangle, OPPOSITE_SIDES, V3,
};
use crate::scalar::{tol, Scalar, ONE, ZERO};

pub type M3 = Matrix3<Scalar>;

/// Class of a conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    /// Real coefficients, indefinite: has real points.
    Real,
    /// Real coefficients, definite: no real points.
    Imaginary,
    /// Singular matrix.
    Degenerate,
    /// Nondegenerate with coefficients that admit no real representative.
    Complex,
}

/// A conic `Pᵀ M P = 0`.
#[derive(Clone, Copy, Debug)]
pub struct Conic {
    m: M3,
    inv: Option<M3>,
    class: ConicClass,
    /// Sign of the eigenvalue whose sign occurs once (real class only).
    lone_sign: f64,
}

fn scale_to_unit(m: &M3) -> M3 {
    let mut k = ZERO;
    for x in m.iter() {
        if x.norm() > k.norm() {
            k = *x;
        }
    }
    if k == ZERO {
        *m
    } else {
        m / k
    }
}

fn singular_values(m: &M3) -> Vec<f64> {
    let mut s: Vec<f64> = m.singular_values().iter().copied().collect();
    s.sort_by(|a, b| a.partial_cmp(b).unwrap());
    s
}

impl Conic {
    /// Builds a conic from a matrix, symmetrizing it. The degeneracy threshold
    /// is relative: the smallest singular value against the largest.
    pub fn new(m: M3) -> Self {
        let sym = (m + m.transpose()) * Scalar::new(0.5, 0.0);
        let mut m = scale_to_unit(&sym);
        let s = singular_values(&m);
        let degenerate = s[0] <= tol() * s[2];
        let real = m.iter().all(|x| x.im.abs() <= tol() * x.norm().max(1.0));
        if real {
            m = m.map(|x| Scalar::new(x.re, 0.0));
        }
        let (class, lone_sign) = if degenerate {
            (ConicClass::Degenerate, 0.0)
        } else if real {
            let ev = SymmetricEigen::new(m.map(|x| x.re)).eigenvalues;
            let pos = ev.iter().filter(|&&e| e > 0.0).count();
            match pos {
                0 | 3 => (ConicClass::Imaginary, 0.0),
                1 => (ConicClass::Real, 1.0),
                _ => (ConicClass::Real, -1.0),
            }
        } else {
            (ConicClass::Complex, 0.0)
        };
        let inv = if degenerate { None } else { m.try_inverse() };
        Conic { m, inv, class, lone_sign }
    }

    pub fn from_real(rows: [[f64; 3]; 3]) -> Self {
        Self::new(Matrix3::from_fn(|i, j| Scalar::new(rows[i][j], 0.0)))
    }

    /// `x² + y² − z² = 0`.
    pub fn unit_circle() -> Self {
        Self::from_real([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, -1.0]])
    }

    /// `x² + y² + z² = 0`.
    pub fn imaginary_unit() -> Self {
        Self::from_real([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    }

    /// Symmetric matrix from the coefficients of
    /// `a x² + b xy + c y² + d xz + e yz + f z²`.
    pub fn from_coefficients(v: [Scalar; 6]) -> Self {
        let h = Scalar::new(0.5, 0.0);
        let [a, b, c, d, e, f] = v;
        Self::new(Matrix3::new(a, b * h, d * h, b * h, c, e * h, d * h, e * h, f))
    }

    pub fn matrix(&self) -> &M3 {
        &self.m
    }

    pub fn class(&self) -> ConicClass {
        self.class
    }

    pub fn is_degenerate(&self) -> bool {
        self.class == ConicClass::Degenerate
    }

    /// `Pᵀ M Q`.
    pub fn bilinear(&self, p: &V3, q: &V3) -> Scalar {
        dot(p, &(self.m * q))
    }

    pub fn value(&self, p: &HomPoint) -> Scalar {
        self.bilinear(p.coords(), p.coords())
    }

    /// `l M⁻¹ l`, zero exactly for tangent lines.
    pub fn dual_value(&self, l: &HomLine) -> Scalar {
        match &self.inv {
            Some(inv) => dot(l.coords(), &(inv * l.coords())),
            None => ZERO,
        }
    }

    /// Scale-free residual `|PᵀMP| / (‖M‖ ‖P‖²)`.
    pub fn residual(&self, p: &HomPoint) -> f64 {
        let v = p.coords();
        self.value(p).norm() / (self.m.norm() * norm(v) * norm(v))
    }

    pub fn contains(&self, p: &HomPoint, tol: f64) -> bool {
        self.residual(p) <= tol
    }

    /// Scale-free tangency residual of a line.
    pub fn tangency(&self, l: &HomLine) -> f64 {
        match &self.inv {
            Some(inv) => self.dual_value(l).norm() / (inv.norm() * norm(l.coords()).powi(2)),
            None => 0.0,
        }
    }

    pub fn is_tangent(&self, l: &HomLine) -> bool {
        self.tangency(l) <= tol()
    }

    /// True when a real point lies inside a real conic.
    pub fn is_interior(&self, p: &HomPoint) -> bool {
        self.class == ConicClass::Real && self.value(p).re * self.lone_sign > 0.0
    }

    /// Polar line of `P`.
    pub fn polar(&self, p: &HomPoint) -> Result<HomLine> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        Ok(self.polar_of(p))
    }

    /// Pole of `l`.
    pub fn pole(&self, l: &HomLine) -> Result<HomPoint> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        Ok(self.pole_of(l))
    }

    /// Polar of a point of a nondegenerate conic.
    pub fn polar_of(&self, p: &HomPoint) -> HomLine {
        HomLine::from_vec(self.m * p.coords()).expect("nondegenerate conic")
    }

    pub fn pole_of(&self, l: &HomLine) -> HomPoint {
        let inv = self.inv.as_ref().expect("nondegenerate conic");
        HomPoint::from_vec(inv * l.coords()).expect("nondegenerate conic")
    }

    /// The restriction of the conic to a line as a binary form on its chart.
    pub fn restrict(&self, chart: &LineChart) -> BinaryForm {
        BinaryForm { a: self.bilinear(&chart.p, &chart.p), b: self.bilinear(&chart.p, &chart.q), c: self.bilinear(&chart.q, &chart.q) }
    }

    /// Intersection of the conic with a line.
    pub fn line_meet(&self, l: &HomLine) -> LineConicMeet {
        let chart = LineChart::new(l);
        let f = self.restrict(&chart);
        let (r1, r2) = f.roots().unwrap_or(([ONE, ZERO], [ZERO, ONE]));
        let mut points = [chart.point(r1).expect("root"), chart.point(r2).expect("root")];
        points.sort_by(|a, b| a.canonical_cmp(b));
        let d = f.discriminant();
        let scale = f.b.norm_sqr().max((f.a * f.c).norm()).max(f64::MIN_POSITIVE);
        let status = if self.class == ConicClass::Degenerate {
            None
        } else if d.norm() <= tol() * scale {
            Some(MeetStatus::Tangent)
        } else if l.is_real() && matches!(self.class, ConicClass::Real | ConicClass::Imaginary) {
            // On a real chart of a real line the discriminant is real.
            let re_chart = chart.p.iter().chain(chart.q.iter()).all(|x| x.im == 0.0);
            let dr = if re_chart { d.re } else { self.real_discriminant(l) };
            Some(if dr > 0.0 { MeetStatus::Secant } else { MeetStatus::Exterior })
        } else {
            None
        };
        LineConicMeet { status, points }
    }

    fn real_discriminant(&self, l: &HomLine) -> f64 {
        // -lᵀ adj(M) l has the sign of the discriminant on a real line.
        let adj = self.m.map(|x| x.re).try_inverse().map(|i| i * self.m.map(|x| x.re).determinant());
        match adj {
            Some(a) => {
                let v = l.coords().map(|x| x.re);
                -(v.transpose() * a * v)[(0, 0)]
            }
            None => 0.0,
        }
    }

    /// Conjugate point of `Q` on the line `p`: the meet of `p` with the polar of `Q`.
    pub fn conjugate_point(&self, q: &HomPoint, p: &HomLine) -> Result<HomPoint> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        if incidence(q, p) > tol() {
            return Err(GeomError::PointNotOnLine);
        }
        if self.is_tangent(p) {
            return Err(GeomError::TangentLine);
        }
        Ok(self.conj_point(q, p))
    }

    /// Conjugate point without validation.
    pub fn conj_point(&self, q: &HomPoint, p: &HomLine) -> HomPoint {
        HomPoint::from_vec(cross(p.coords(), &(self.m * q.coords()))).unwrap_or(*q)
    }

    /// Conjugate line of `q` through `P`: the join of `P` with the pole of `q`.
    pub fn conjugate_line(&self, q: &HomLine, p: &HomPoint) -> Result<HomLine> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        if incidence(p, q) > tol() {
            return Err(GeomError::PointNotOnLine);
        }
        if self.contains(p, tol()) {
            return Err(GeomError::PointOnConic);
        }
        Ok(self.conj_line(q, p))
    }

    pub fn conj_line(&self, q: &HomLine, p: &HomPoint) -> HomLine {
        join_unchecked(p, &self.pole_of(q))
    }

    /// Second intersection of the conic with the line through `A` (on the
    /// conic) and `R`.
    pub fn second_point(&self, a: &HomPoint, r: &V3) -> Option<HomPoint> {
        let a = a.coords();
        let v = a * self.bilinear(r, r) - r * (Scalar::new(2.0, 0.0) * self.bilinear(a, r));
        HomPoint::from_vec(v)
    }

    /// Polar of `P` drawn from the quadrangle cut out by two secants through
    /// `P` towards `X` and `Y`: the line through its other two diagonal points.
    pub fn polar_by_quadrangle(&self, p: &HomPoint, x: &HomPoint, y: &HomPoint) -> Result<HomLine> {
        let [a1, a2] = self.line_meet(&join_unchecked(p, x)).points;
        let [b1, b2] = self.line_meet(&join_unchecked(p, y)).points;
        let d = Quadrangle::new([a1, a2, b1, b2])?.diagonal_points();
        let k = (0..3).min_by(|&i, &j| d[i].separation(p).partial_cmp(&d[j].separation(p)).unwrap()).unwrap();
        Ok(join_unchecked(&d[(k + 1) % 3], &d[(k + 2) % 3]))
    }

    /// Conic points obtained by rational parametrization from a base point.
    pub fn points_from(&self, base: &HomPoint, n: usize) -> Vec<HomPoint> {
        let chart = LineChart::new(&HomLine::from_vec(base.coords().map(|x| x.conj())).expect("nonzero"));
        (0..n)
            .filter_map(|k| {
                let t = (k as f64 + 0.5) * std::f64::consts::PI / n as f64;
                let r = chart.p * Scalar::new(t.cos(), 0.0) + chart.q * Scalar::new(t.sin(), 0.0);
                self.second_point(base, &r)
            })
            .collect()
    }

    /// Cross ratio of four points of the conic over it, seen from the
    /// conic point `x`.
    pub fn cross_ratio_from(&self, x: &HomPoint, pts: [&HomPoint; 4]) -> Scalar {
        let line = |p: &HomPoint| {
            if p.separation(x) <= 1e-12 {
                self.polar_of(x)
            } else {
                join_unchecked(x, p)
            }
        };
        let l = pts.map(line);
        projective::cross_ratio_raw(l[0].coords(), l[1].coords(), l[2].coords(), l[3].coords())
    }

    /// Cross ratio `(ABCD)` over the conic.
    ///
    /// The auxiliary point is the candidate conic point farthest from the
    /// four inputs; a second candidate is evaluated as a consistency check.
    pub fn cross_ratio_on_conic(&self, a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<Scalar> {
        let (v, w) = self.cross_ratio_on_conic_checked(a, b, c, d)?;
        if crate::scalar::rel_diff(v, w) > 1e3 * tol() {
            return Err(GeomError::IndeterminateRatio);
        }
        Ok(v)
    }

    /// The cross ratio over the conic from two different auxiliary points.
    pub fn cross_ratio_on_conic_checked(&self, a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<(Scalar, Scalar)> {
        if self.is_degenerate() {
            return Err(GeomError::DegenerateConic);
        }
        let pts = [a, b, c, d];
        if pts.iter().any(|p| !self.contains(p, tol())) {
            return Err(GeomError::PointNotOnConic);
        }
        let mut cands = self.points_from(a, 8);
        cands.extend(self.points_from(b, 8));
        let score = |x: &HomPoint| pts.iter().map(|p| p.separation(x)).fold(f64::INFINITY, f64::min);
        cands.sort_by(|x, y| score(y).partial_cmp(&score(x)).unwrap());
        Ok((self.cross_ratio_from(&cands[0], pts), self.cross_ratio_from(&cands[1], pts)))
    }

    /// Image of the conic under a collineation `X ↦ H X`.
    pub fn transform(&self, h: &M3) -> Option<Conic> {
        let hi = h.try_inverse()?;
        Some(Conic::new(hi.transpose() * self.m * hi))
    }
}

/// Position of a real line relative to a real conic.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MeetStatus {
    Exterior,
    Tangent,
    Secant,
}

/// The two points of a line on a conic.
#[derive(Clone, Copy, Debug)]
pub struct LineConicMeet {
    /// `None` when the data are not real.
    pub status: Option<MeetStatus>,
    pub points: [HomPoint; 2],
}

fn veronese(p: &V3) -> [Scalar; 6] {
    let n = Scalar::new(norm(p).powi(2), 0.0);
    [p[0] * p[0] / n, p[0] * p[1] / n, p[1] * p[1] / n, p[0] * p[2] / n, p[1] * p[2] / n, p[2] * p[2] / n]
}

/// The conic through five points.
///
/// The coefficient vector spans the null space of the Veronese design matrix.
/// Collinear triples produce a degenerate conic; four collinear points leave a
/// two-dimensional null space and are rejected.
pub fn conic_through_five(points: &[HomPoint; 5]) -> Result<Conic> {
    fit_conic(points)
}

/// Least-squares conic through at least five points.
pub fn fit_conic(points: &[HomPoint]) -> Result<Conic> {
    if points.len() < 5 {
        return Err(GeomError::DegenerateInput);
    }
    let rows = points.len().max(6);
    let mut a = DMatrix::<Scalar>::zeros(rows, 6);
    for (i, p) in points.iter().enumerate() {
        for (j, v) in veronese(p.coords()).iter().enumerate() {
            a[(i, j)] = *v;
        }
    }
    let svd = SVD::new(a, false, true);
    let vt = svd.v_t.expect("v_t");
    let s = &svd.singular_values;
    let mut order: Vec<usize> = (0..6).collect();
    order.sort_by(|&i, &j| s[i].partial_cmp(&s[j]).unwrap());
    let smax = s[order[5]];
    if s[order[1]] <= tol() * smax {
        return Err(GeomError::DegenerateInput);
    }
    let row = order[0];
    let c: Vec<Scalar> = (0..6).map(|j| vt[(row, j)].conj()).collect();
    Ok(Conic::from_coefficients([c[0], c[1], c[2], c[3], c[4], c[5]]))
}

/// Largest conic residual of a point set.
pub fn max_residual(conic: &Conic, points: &[HomPoint]) -> f64 {
    points.iter().map(|p| conic.residual(p)).fold(0.0, f64::max)
}

/// The eleven-point conic of a quadrangle and a line.
#[derive(Clone, Debug)]
pub struct ElevenPointConic {
    pub conic: Conic,
    /// Fixed points of the quadrangular involution on the line.
    pub fixed: [HomPoint; 2],
    pub diagonal: [HomPoint; 3],
    /// Harmonic conjugates of the side traces with respect to the side vertices,
    /// in the side order 01, 23, 02, 13, 03, 12.
    pub harmonic: [HomPoint; 6],
}

impl ElevenPointConic {
    pub fn points(&self) -> Vec<HomPoint> {
        let mut v = self.fixed.to_vec();
        v.extend(self.diagonal);
        v.extend(self.harmonic);
        v
    }
}

/// Builds the eleven points and the conic through them. The conic is fitted
/// from the nine points other than the fixed points, which are then part of
/// the returned point set for verification.
pub fn eleven_point_conic(q: &Quadrangle, l: &HomLine) -> Result<ElevenPointConic> {
    let sigma = quadrangular_involution(q, l, true)?;
    let (i, j) = sigma.fixed_points();
    let diagonal = projective::diagonal_triangle(q)?;
    let mut harmonic = Vec::with_capacity(6);
    for &((a, b), (c, d)) in OPPOSITE_SIDES.iter() {
        for (u, v) in [(a, b), (c, d)] {
            let t = meet_unchecked(&q.side(u, v), l);
            harmonic.push(harmonic_unchecked(&q.v[u], &q.v[v], &t));
        }
    }
    let harmonic: [HomPoint; 6] = harmonic.try_into().expect("six sides");
    let mut members = diagonal.to_vec();
    members.extend(harmonic);
    let conic = fit_conic(&members)?;
    Ok(ElevenPointConic { conic, fixed: [i, j], diagonal, harmonic })
}

/// The harmonic homology with center `c` and axis `a` as a matrix.
pub fn harmonic_homology(c: &HomPoint, a: &HomLine) -> M3 {
    let cv = c.coords();
    let av = a.coords();
    let k = Scalar::new(2.0, 0.0) / dot(av, cv);
    M3::identity() - (cv * av.transpose()) * k
}

pub fn apply(h: &M3, p: &HomPoint) -> HomPoint {
    HomPoint::from_vec(h * p.coords()).unwrap_or(*p)
}

pub fn real_vec(x: f64, y: f64, z: f64) -> V3 {
    Vector3::new(Scalar::new(x, 0.0), Scalar::new(y, 0.0), Scalar::new(z, 0.0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{approx_eq, re, I};

    fn circle_point(t: f64) -> HomPoint {
        HomPoint::affine(t.cos(), t.sin())
    }

    #[test]
    fn classification() {
        assert_eq!(Conic::unit_circle().class(), ConicClass::Real);
        assert_eq!(Conic::imaginary_unit().class(), ConicClass::Imaginary);
        let pair = Conic::from_real([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 0.0]]);
        assert_eq!(pair.class(), ConicClass::Degenerate);
        assert!(Conic::unit_circle().is_interior(&HomPoint::affine(0.3, 0.2)));
        assert!(!Conic::unit_circle().is_interior(&HomPoint::affine(1.3, 0.2)));
    }

    #[test]
    fn polar_examples() {
        let c = Conic::unit_circle();
        assert!(c.polar(&HomPoint::affine(0.0, 0.0)).unwrap().same_as(&HomLine::at_infinity(), 1e-15));
        assert!(c.polar(&HomPoint::affine(1.0, 0.0)).unwrap().same_as(&HomLine::new(1.0, 0.0, -1.0), 1e-15));
        assert!(c.pole(&HomLine::new(0.0, 1.0, 0.0)).unwrap().same_as(&HomPoint::new(0.0, 1.0, 0.0), 1e-15));
        assert!(c.pole(&HomLine::at_infinity()).unwrap().same_as(&HomPoint::affine(0.0, 0.0), 1e-15));
        let t = c.polar_of(&circle_point(0.7));
        assert!(c.pole(&t).unwrap().same_as(&circle_point(0.7), 1e-14));
        let pair = Conic::from_real([[1.0, 0.0, 0.0], [0.0, -1.0, 0.0], [0.0, 0.0, 0.0]]);
        assert_eq!(pair.polar(&HomPoint::affine(1.0, 2.0)), Err(GeomError::DegenerateConic));
    }

    #[test]
    fn line_meet_examples() {
        let c = Conic::unit_circle();
        let m = c.line_meet(&HomLine::new(0.0, 1.0, 0.0));
        assert_eq!(m.status, Some(MeetStatus::Secant));
        assert!(m.points[0].same_as(&HomPoint::affine(-1.0, 0.0), 1e-14));
        assert!(m.points[1].same_as(&HomPoint::affine(1.0, 0.0), 1e-14));
        let m = c.line_meet(&HomLine::new(1.0, 0.0, -2.0));
        assert_eq!(m.status, Some(MeetStatus::Exterior));
        let s3 = 3f64.sqrt();
        let want = [HomPoint::complex(re(2.0), I * s3, re(1.0)), HomPoint::complex(re(2.0), -I * s3, re(1.0))];
        for p in m.points {
            assert!(want.iter().any(|w| w.same_as(&p, 1e-14)));
        }
        assert_eq!(c.line_meet(&HomLine::new(1.0, 0.0, -1.0)).status, Some(MeetStatus::Tangent));
        let m = Conic::imaginary_unit().line_meet(&HomLine::new(0.3, -1.0, 0.2));
        assert!(m.points.iter().all(|p| !p.is_real()));
        assert!(m.points.iter().all(|p| Conic::imaginary_unit().residual(p) < 1e-14));
    }

    #[test]
    fn conjugacy_examples() {
        let c = Conic::unit_circle();
        let x = HomLine::new(0.0, 1.0, 0.0);
        let q = c.conjugate_point(&HomPoint::affine(0.0, 0.0), &x).unwrap();
        assert!(q.same_as(&HomPoint::new(1.0, 0.0, 0.0), 1e-15));
        let on = HomPoint::affine(1.0, 0.0);
        assert!(c.conjugate_point(&on, &x).unwrap().same_as(&on, 1e-15));
        assert_eq!(c.conjugate_point(&HomPoint::affine(0.0, 1.0), &x), Err(GeomError::PointNotOnLine));
        assert_eq!(c.conjugate_point(&on, &HomLine::new(1.0, 0.0, -1.0)), Err(GeomError::TangentLine));
        let y = c.conjugate_line(&x, &HomPoint::affine(0.0, 0.0)).unwrap();
        assert!(y.same_as(&HomLine::new(1.0, 0.0, 0.0), 1e-15));
        let tangent = HomLine::new(1.0, 0.0, -1.0);
        let ext = HomPoint::affine(1.0, 2.0);
        assert!(c.conjugate_line(&tangent, &ext).unwrap().same_as(&tangent, 1e-14));
        assert_eq!(c.conjugate_line(&tangent, &on), Err(GeomError::PointOnConic));
    }

    #[test]
    fn fit_recovers_circle() {
        let pts: [HomPoint; 5] = [0.1, 1.0, 2.2, 3.5, 5.0].map(circle_point);
        let c = conic_through_five(&pts).unwrap();
        let m = c.matrix();
        let k = m[(0, 0)];
        assert!(approx_eq(m[(1, 1)] / k, re(1.0), 1e-12));
        assert!(approx_eq(m[(2, 2)] / k, re(-1.0), 1e-12));
        assert!((m[(0, 1)] / k).norm() < 1e-12);
        let three = [
            HomPoint::affine(0.0, 0.0),
            HomPoint::affine(1.0, 0.0),
            HomPoint::affine(2.0, 0.0),
            HomPoint::affine(0.0, 1.0),
            HomPoint::affine(1.0, 2.0),
        ];
        assert_eq!(conic_through_five(&three).unwrap().class(), ConicClass::Degenerate);
        let four = [
            HomPoint::affine(0.0, 0.0),
            HomPoint::affine(1.0, 0.0),
            HomPoint::affine(2.0, 0.0),
            HomPoint::affine(3.0, 0.0),
            HomPoint::affine(1.0, 2.0),
        ];
        assert!(matches!(conic_through_five(&four), Err(GeomError::DegenerateInput)));
    }

    #[test]
    fn cross_ratio_on_circle() {
        let c = Conic::unit_circle();
        let q = std::f64::consts::FRAC_PI_2;
        let v = c.cross_ratio_on_conic(&circle_point(0.0), &circle_point(2.0 * q), &circle_point(q), &circle_point(3.0 * q)).unwrap();
        assert!(approx_eq(v, re(-1.0), 1e-12));
        let (a, b, cc, d) = (circle_point(0.3), circle_point(1.1), circle_point(2.9), circle_point(4.0));
        let (v1, v2) = c.cross_ratio_on_conic_checked(&a, &b, &cc, &d).unwrap();
        assert!(approx_eq(v1, v2, 1e-12));
        let w = c.cross_ratio_on_conic(&a, &b, &d, &cc).unwrap();
        assert!(approx_eq(v1 * w, re(1.0), 1e-12));
        assert_eq!(c.cross_ratio_on_conic(&a, &b, &cc, &HomPoint::affine(0.0, 0.0)), Err(GeomError::PointNotOnConic));
    }

    #[test]
    fn nine_point_circle() {
        // Triangle, orthocenter and the line at infinity.
        let (a, b, c) = (HomPoint::affine(0.0, 2.0), HomPoint::affine(-1.0, 0.0), HomPoint::affine(1.5, 0.0));
        let h = HomPoint::affine(0.0, 0.75);
        let q = Quadrangle::new([a, b, c, h]).unwrap();
        let e = eleven_point_conic(&q, &HomLine::at_infinity()).unwrap();
        assert!(max_residual(&e.conic, &e.points()) < 1e-12);
        // Circular points lie on it: the conic is a circle.
        let circ = HomPoint::complex(re(1.0), I, re(0.0));
        assert!(e.conic.residual(&circ) < 1e-12);
        let center = e.conic.pole_of(&HomLine::at_infinity());
        let (x, y) = center.to_affine().unwrap();
        assert!((x.re - 0.125).abs() < 1e-12 && (y.re - 0.6875).abs() < 1e-12);
    }

    #[test]
    fn eleven_point_line_through_vertex() {
        let q = Quadrangle::new([
            HomPoint::affine(0.0, 0.0),
            HomPoint::affine(1.0, 0.0),
            HomPoint::affine(1.0, 1.0),
            HomPoint::affine(0.0, 1.0),
        ])
        .unwrap();
        let diag = HomLine::new(1.0, -1.0, 0.0);
        assert!(matches!(eleven_point_conic(&q, &diag), Err(GeomError::LineThroughVertex)));
    }

    #[test]
    fn homology_preserves_circle() {
        let c = Conic::unit_circle();
        let center = HomPoint::affine(0.3, -0.2);
        let h = harmonic_homology(&center, &c.polar_of(&center));
        for t in [0.2, 1.4, 2.8] {
            assert!(c.residual(&apply(&h, &circle_point(t))) < 1e-14);
        }
        let p = HomPoint::affine(0.5, 0.1);
        assert!(apply(&h, &apply(&h, &p)).same_as(&p, 1e-14));
    }
}

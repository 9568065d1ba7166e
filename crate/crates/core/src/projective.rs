//! Homogeneous points and lines of the complex projective plane, incidence,
//! cross ratios, harmonic conjugacy, involutions on a line and quadrangles.
//!
//! Coordinates are triples of complex numbers. A triple is stored normalized
//! so that its largest-modulus component equals 1, which makes the stored
//! representative canonical and turns the realness test into a plain check of
//! imaginary parts.
//!
//! Cross ratios use the bracket form. With `O` a point off the common line
//! and `[XY] = det(O, X, Y)`,
//!
//! ```text
//! (ABCD) = [AC][BD] / ([BC][AD])
//! ```
//!
//! which equals `([AC]/[BC]) : ([AD]/[BD])` in any affine chart of the line,
//! and does not depend on `O` or on the representatives.

use crate::error::{GeomError, Result};
use crate::scalar::{is_real, tol, ExtScalar, Scalar, ONE, ZERO};
use nalgebra::Vector3;

pub type V3 = Vector3<Scalar>;

// ── vector helpers ──────────────────────────────────────────────────────────

/// Euclidean (hermitian) norm of a complex triple.
pub fn norm(v: &V3) -> f64 {
    (v[0].norm_sqr() + v[1].norm_sqr() + v[2].norm_sqr()).sqrt()
}

/// Divide by the largest-modulus component. Returns `None` for the zero vector.
pub fn normalize(v: &V3) -> Option<V3> {
    let k = argmax_modulus(v);
    let m = v[k];
    if m.norm() == 0.0 || !m.re.is_finite() || !m.im.is_finite() {
        return None;
    }
    let mut out = v / m;
    out[k] = ONE;
    Some(out)
}

fn argmax_modulus(v: &V3) -> usize {
    let mut k = 0;
    for i in 1..3 {
        if v[i].norm() > v[k].norm() {
            k = i;
        }
    }
    k
}

/// Bilinear (non-conjugating) dot product.
#[inline]
pub fn dot(a: &V3, b: &V3) -> Scalar {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

#[inline]
pub fn cross(a: &V3, b: &V3) -> V3 {
    Vector3::new(a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])
}

#[inline]
pub fn det3(a: &V3, b: &V3, c: &V3) -> Scalar {
    dot(a, &cross(b, c))
}

pub fn conj(v: &V3) -> V3 {
    v.map(|x| x.conj())
}

/// `sin` of the angle between two complex triples seen as lines through the origin.
fn separation(a: &V3, b: &V3) -> f64 {
    norm(&cross(a, b)) / (norm(a) * norm(b))
}

fn all_real(v: &V3, tol: f64) -> bool {
    v.iter().all(|x| is_real(*x, tol))
}

// ── points and lines ────────────────────────────────────────────────────────

macro_rules! hom_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Clone, Copy, Debug, PartialEq)]
        pub struct $name(V3);

        impl $name {
            /// Builds from a real triple. Panics on the zero triple.
            pub fn new(x: f64, y: f64, z: f64) -> Self {
                Self::from_vec(Vector3::new(Scalar::new(x, 0.0), Scalar::new(y, 0.0), Scalar::new(z, 0.0))).expect("zero triple")
            }

            pub fn complex(x: Scalar, y: Scalar, z: Scalar) -> Self {
                Self::from_vec(Vector3::new(x, y, z)).expect("zero triple")
            }

            /// Normalizes any nonzero finite triple.
            pub fn from_vec(v: V3) -> Option<Self> {
                normalize(&v).map(Self)
            }

            pub fn coords(&self) -> &V3 {
                &self.0
            }

            pub fn to_array(&self) -> [Scalar; 3] {
                [self.0[0], self.0[1], self.0[2]]
            }

            pub fn is_real(&self) -> bool {
                all_real(&self.0, tol())
            }

            pub fn is_real_tol(&self, tol: f64) -> bool {
                all_real(&self.0, tol)
            }

            /// Complex conjugate element.
            pub fn conj(&self) -> Self {
                Self(conj(&self.0))
            }

            /// Real representative (imaginary parts dropped).
            pub fn real_part(&self) -> [f64; 3] {
                [self.0[0].re, self.0[1].re, self.0[2].re]
            }

            /// Projective equality up to tolerance.
            pub fn same_as(&self, other: &Self, tol: f64) -> bool {
                separation(&self.0, &other.0) <= tol
            }

            /// Distance-like separation in `[0, 1]`: sine of the angle between representatives.
            pub fn separation(&self, other: &Self) -> f64 {
                separation(&self.0, &other.0)
            }

            /// Canonical order: lexicographic on real parts, then on imaginary parts.
            pub fn canonical_cmp(&self, other: &Self) -> std::cmp::Ordering {
                let key = |v: &V3| [v[0].re, v[1].re, v[2].re, v[0].im, v[1].im, v[2].im];
                let (a, b) = (key(&self.0), key(&other.0));
                for i in 0..6 {
                    let d = a[i] - b[i];
                    if d.abs() > 1e-12 {
                        return a[i].partial_cmp(&b[i]).unwrap_or(std::cmp::Ordering::Equal);
                    }
                }
                std::cmp::Ordering::Equal
            }
        }
    };
}

hom_type!(HomPoint, "A point of the complex projective plane, up to scale.");
hom_type!(HomLine, "A line of the complex projective plane, up to scale.");

impl HomPoint {
    /// The affine point `(x, y)` of the standard chart.
    pub fn affine(x: f64, y: f64) -> Self {
        Self::new(x, y, 1.0)
    }

    /// Affine coordinates in the standard chart, if finite.
    pub fn to_affine(&self) -> Option<(Scalar, Scalar)> {
        let z = self.0[2];
        if z.norm() < 1e-300 {
            None
        } else {
            Some((self.0[0] / z, self.0[1] / z))
        }
    }
}

impl HomLine {
    /// The line at infinity of the standard chart.
    pub fn at_infinity() -> Self {
        Self::new(0.0, 0.0, 1.0)
    }
}

/// Incidence residual `|l·P| / (|l| |P|)`.
pub fn incidence(p: &HomPoint, l: &HomLine) -> f64 {
    dot(p.coords(), l.coords()).norm() / (norm(p.coords()) * norm(l.coords()))
}

pub fn on_line(p: &HomPoint, l: &HomLine, tol: f64) -> bool {
    incidence(p, l) <= tol
}

/// The line through two points.
pub fn join(p: &HomPoint, q: &HomPoint) -> Result<HomLine> {
    let c = cross(p.coords(), q.coords());
    if norm(&c) <= tol() * norm(p.coords()) * norm(q.coords()) {
        return Err(GeomError::CoincidentPoints);
    }
    HomLine::from_vec(c).ok_or(GeomError::CoincidentPoints)
}

/// The intersection point of two lines.
pub fn meet(a: &HomLine, b: &HomLine) -> Result<HomPoint> {
    let c = cross(a.coords(), b.coords());
    if norm(&c) <= tol() * norm(a.coords()) * norm(b.coords()) {
        return Err(GeomError::CoincidentLines);
    }
    HomPoint::from_vec(c).ok_or(GeomError::CoincidentLines)
}

/// Join without the coincidence check; for constructions known to be generic.
/// Returns the normalized cross product, falling back to an arbitrary line only
/// for exactly equal inputs.
pub fn join_unchecked(p: &HomPoint, q: &HomPoint) -> HomLine {
    HomLine::from_vec(cross(p.coords(), q.coords())).unwrap_or(HomLine::at_infinity())
}

pub fn meet_unchecked(a: &HomLine, b: &HomLine) -> HomPoint {
    HomPoint::from_vec(cross(a.coords(), b.coords())).unwrap_or(HomPoint::new(0.0, 0.0, 1.0))
}

/// Collinearity residual `|det(P, Q, R)|` of normalized triples.
pub fn collinearity(p: &HomPoint, q: &HomPoint, r: &HomPoint) -> f64 {
    det3(p.coords(), q.coords(), r.coords()).norm()
}

/// Concurrency residual `|det(a, b, c)|` of normalized triples.
pub fn concurrency(a: &HomLine, b: &HomLine, c: &HomLine) -> f64 {
    det3(a.coords(), b.coords(), c.coords()).norm()
}

/// Largest collinearity residual of a point set against the line through its
/// two most separated members.
pub fn collinearity_many(points: &[HomPoint]) -> f64 {
    let (i, j) = most_separated(points.iter().map(|p| *p.coords()).collect::<Vec<_>>().as_slice());
    let l = join_unchecked(&points[i], &points[j]);
    points.iter().map(|p| dot(p.coords(), l.coords()).norm()).fold(0.0, f64::max)
}

/// Largest concurrency residual of a set of lines.
pub fn concurrency_many(lines: &[HomLine]) -> f64 {
    let (i, j) = most_separated(lines.iter().map(|l| *l.coords()).collect::<Vec<_>>().as_slice());
    let p = meet_unchecked(&lines[i], &lines[j]);
    lines.iter().map(|l| dot(p.coords(), l.coords()).norm()).fold(0.0, f64::max)
}

fn most_separated(v: &[V3]) -> (usize, usize) {
    let mut best = (0, 1.min(v.len() - 1));
    let mut s = -1.0;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            let t = separation(&v[i], &v[j]);
            if t > s {
                s = t;
                best = (i, j);
            }
        }
    }
    best
}

// ── cross ratios ────────────────────────────────────────────────────────────

/// Reference point off the line spanned by the quadruple.
fn reference_off_line(v: [&V3; 4]) -> Option<V3> {
    let mut best: Option<V3> = None;
    let mut s = 0.0;
    for (i, j) in [(0, 1), (2, 3), (0, 2), (1, 3), (0, 3), (1, 2)] {
        let c = cross(v[i], v[j]);
        let n = norm(&c);
        if n > s {
            s = n;
            best = Some(c);
        }
    }
    best.map(|l| conj(&l) / Scalar::new(s, 0.0))
}

fn bracket(o: &V3, x: &V3, y: &V3) -> Scalar {
    det3(o, x, y)
}

/// Cross ratio of four collinear triples (points) or concurrent triples (lines)
/// without validation. Returns ∞ as a non-finite scalar and 0/0 as NaN.
pub fn cross_ratio_raw(a: &V3, b: &V3, c: &V3, d: &V3) -> Scalar {
    let Some(o) = reference_off_line([a, b, c, d]) else {
        return Scalar::new(f64::NAN, f64::NAN);
    };
    let n = bracket(&o, a, c) * bracket(&o, b, d);
    let m = bracket(&o, b, c) * bracket(&o, a, d);
    n / m
}

/// Cross ratio of four points or lines given as elements.
pub fn cr(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Scalar {
    cross_ratio_raw(a.coords(), b.coords(), c.coords(), d.coords())
}

pub fn cr_lines(a: &HomLine, b: &HomLine, c: &HomLine, d: &HomLine) -> Scalar {
    cross_ratio_raw(a.coords(), b.coords(), c.coords(), d.coords())
}

fn cross_ratio_checked(v: [&V3; 4], dual: bool) -> Result<ExtScalar> {
    let t = tol();
    let Some(o) = reference_off_line(v) else {
        return Err(GeomError::IndeterminateRatio);
    };
    // `o` is the conjugate of the carrier; the carrier itself tests incidence.
    let carrier = conj(&o);
    let res = v.iter().map(|x| dot(x, &carrier).norm() / norm(x)).fold(0.0, f64::max);
    if res > t {
        return Err(if dual { GeomError::NotConcurrent(res) } else { GeomError::NotCollinear(res) });
    }
    let [a, b, c, d] = v;
    let zero = |x: &V3, y: &V3| separation(x, y) <= t;
    let br = |x: &V3, y: &V3| if zero(x, y) { ZERO } else { bracket(&o, x, y) };
    let n = br(a, c) * br(b, d);
    let m = br(b, c) * br(a, d);
    match (n == ZERO, m == ZERO) {
        (true, true) => Err(GeomError::IndeterminateRatio),
        (false, true) => Ok(ExtScalar::Infinity),
        _ => Ok(ExtScalar::Finite(n / m)),
    }
}

/// Cross ratio `(ABCD)` of four collinear points, extended by ∞.
///
/// Coincidences yield 0, 1 or ∞; patterns giving 0/0 raise
/// [`GeomError::IndeterminateRatio`].
pub fn cross_ratio_points_ext(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<ExtScalar> {
    cross_ratio_checked([a.coords(), b.coords(), c.coords(), d.coords()], false)
}

/// Cross ratio `(ABCD)` of four collinear points. An infinite value is
/// reported as [`GeomError::InfiniteRatio`]; use [`cross_ratio_points_ext`] to
/// receive it as a value.
pub fn cross_ratio_points(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<Scalar> {
    cross_ratio_points_ext(a, b, c, d)?.finite().ok_or(GeomError::InfiniteRatio)
}

pub fn cross_ratio_lines_ext(a: &HomLine, b: &HomLine, c: &HomLine, d: &HomLine) -> Result<ExtScalar> {
    cross_ratio_checked([a.coords(), b.coords(), c.coords(), d.coords()], true)
}

/// Cross ratio `(abcd)` of four concurrent lines.
pub fn cross_ratio_lines(a: &HomLine, b: &HomLine, c: &HomLine, d: &HomLine) -> Result<Scalar> {
    cross_ratio_lines_ext(a, b, c, d)?.finite().ok_or(GeomError::InfiniteRatio)
}

/// Coefficients `(α, β)` with `C = αA + βB`, for `C` on the line `AB`.
fn decompose(a: &V3, b: &V3, c: &V3) -> (Scalar, Scalar) {
    let o = conj(&cross(a, b));
    let ab = bracket(&o, a, b);
    (bracket(&o, c, b) / ab, bracket(&o, a, c) / ab)
}

/// Harmonic conjugate of `C` with respect to `A, B`: the point `D` with `(ABCD) = -1`.
pub fn harmonic_conjugate(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> Result<HomPoint> {
    let t = tol();
    if a.same_as(b, t) || c.same_as(a, t) || c.same_as(b, t) {
        return Err(GeomError::DegenerateTriple);
    }
    let res = collinearity(a, b, c);
    if res > t {
        return Err(GeomError::NotCollinear(res));
    }
    Ok(harmonic_unchecked(a, b, c))
}

/// Harmonic conjugate without validation.
pub fn harmonic_unchecked(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> HomPoint {
    let (al, be) = decompose(a.coords(), b.coords(), c.coords());
    HomPoint::from_vec(a.coords() * al - b.coords() * be).unwrap_or(*c)
}

/// Dual harmonic conjugate of line `c` with respect to lines `a, b`.
pub fn harmonic_conjugate_line(a: &HomLine, b: &HomLine, c: &HomLine) -> HomLine {
    let (al, be) = decompose(a.coords(), b.coords(), c.coords());
    HomLine::from_vec(a.coords() * al - b.coords() * be).unwrap_or(*c)
}

/// Whether the pair `A, B` separates the pair `C, D` on a real line.
pub fn separates(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<bool> {
    if ![a, b, c, d].iter().all(|p| p.is_real()) {
        return Err(GeomError::NonRealInput);
    }
    match cross_ratio_points_ext(a, b, c, d)? {
        ExtScalar::Finite(x) => Ok(x.re < 0.0),
        ExtScalar::Infinity => Ok(false),
    }
}

// ── charts and binary forms on a line ──────────────────────────────────────

/// Two-point basis of a line: every point of the line is `x·P + y·Q`.
#[derive(Clone, Copy, Debug)]
pub struct LineChart {
    pub line: HomLine,
    pub p: V3,
    pub q: V3,
    o: V3,
    pqo: Scalar,
}

impl LineChart {
    pub fn new(line: &HomLine) -> Self {
        let l = line.coords();
        let mut k = 0;
        for i in 1..3 {
            if l[i].norm() < l[k].norm() {
                k = i;
            }
        }
        let mut e = Vector3::from_element(ZERO);
        e[k] = ONE;
        let p = normalize(&cross(l, &e)).expect("line chart");
        let q = normalize(&cross(l, &conj(&p))).expect("line chart");
        let o = conj(l);
        let pqo = det3(&p, &q, &o);
        LineChart { line: *line, p, q, o, pqo }
    }

    pub fn coords(&self, x: &HomPoint) -> [Scalar; 2] {
        let v = x.coords();
        [det3(v, &self.q, &self.o) / self.pqo, det3(&self.p, v, &self.o) / self.pqo]
    }

    pub fn point(&self, xy: [Scalar; 2]) -> Option<HomPoint> {
        HomPoint::from_vec(self.p * xy[0] + self.q * xy[1])
    }
}

/// Binary quadratic form `a x² + 2b xy + c y²` on a line chart.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinaryForm {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
}

impl BinaryForm {
    /// Polar (symmetric bilinear) form evaluated at two chart vectors.
    pub fn polar(&self, x: [Scalar; 2], y: [Scalar; 2]) -> Scalar {
        self.a * x[0] * y[0] + self.b * (x[0] * y[1] + x[1] * y[0]) + self.c * x[1] * y[1]
    }

    pub fn discriminant(&self) -> Scalar {
        self.b * self.b - self.a * self.c
    }

    /// The two roots `(x : y)`, computed without cancellation. A double root is
    /// returned twice. `None` for the zero form.
    pub fn roots(&self) -> Option<([Scalar; 2], [Scalar; 2])> {
        let (a, b, c) = (self.a, self.b, self.c);
        let scale = a.norm().max(b.norm()).max(c.norm());
        if scale == 0.0 {
            return None;
        }
        let r = (b * b - a * c).sqrt();
        let q = if (b + r).norm() >= (b - r).norm() { -(b + r) } else { -(b - r) };
        if q.norm() <= 1e-14 * scale {
            // b ≈ 0 and ac ≈ 0: a double root at whichever axis kills the form.
            let root = if c.norm() > a.norm() { [ONE, ZERO] } else { [ZERO, ONE] };
            return Some((root, root));
        }
        Some(([q, a], [c, q]))
    }
}

// ── involutions on a line ──────────────────────────────────────────────────

/// An involution on a line, stored as the symmetric bilinear form whose
/// conjugate pairs are the pairs of the involution. The action matrix on the
/// chart is `J·S` with `J = [[0, 1], [-1, 0]]`.
#[derive(Clone, Copy, Debug)]
pub struct LineInvolution {
    pub chart: LineChart,
    pub form: BinaryForm,
}

fn pair_row(x: [Scalar; 2], y: [Scalar; 2]) -> V3 {
    Vector3::new(x[0] * y[0], x[0] * y[1] + x[1] * y[0], x[1] * y[1])
}

impl LineInvolution {
    /// The involution on `line` exchanging `x1 ↔ y1` and `x2 ↔ y2`.
    /// A pair with equal members declares a fixed point.
    pub fn from_pairs(line: &HomLine, p1: (HomPoint, HomPoint), p2: (HomPoint, HomPoint)) -> Result<Self> {
        let chart = LineChart::new(line);
        let r1 = pair_row(chart.coords(&p1.0), chart.coords(&p1.1));
        let r2 = pair_row(chart.coords(&p2.0), chart.coords(&p2.1));
        let s = cross(&r1, &r2);
        if norm(&s) <= 1e-14 * norm(&r1) * norm(&r2) {
            return Err(GeomError::DegenerateInput);
        }
        Ok(Self::from_form(chart, BinaryForm { a: s[0], b: s[1], c: s[2] }))
    }

    /// Harmonic conjugacy with respect to two points of a line.
    pub fn harmonic(line: &HomLine, f1: &HomPoint, f2: &HomPoint) -> Result<Self> {
        Self::from_pairs(line, (*f1, *f1), (*f2, *f2))
    }

    fn from_form(chart: LineChart, form: BinaryForm) -> Self {
        let k = form.a.norm().max(form.b.norm()).max(form.c.norm());
        let k = Scalar::new(k, 0.0);
        LineInvolution { chart, form: BinaryForm { a: form.a / k, b: form.b / k, c: form.c / k } }
    }

    /// The 2×2 action matrix on the chart of the line.
    pub fn action(&self) -> [[Scalar; 2]; 2] {
        let BinaryForm { a, b, c } = self.form;
        [[b, c], [-a, -b]]
    }

    pub fn apply(&self, x: &HomPoint) -> HomPoint {
        let v = self.chart.coords(x);
        let m = self.action();
        let y = [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]];
        if y[0].norm() + y[1].norm() <= 1e-14 * (v[0].norm() + v[1].norm()) {
            return *x;
        }
        self.chart.point(y).unwrap_or(*x)
    }

    /// Residual of the pairing `x ↔ y`.
    pub fn pair_residual(&self, x: &HomPoint, y: &HomPoint) -> f64 {
        let (u, v) = (self.chart.coords(x), self.chart.coords(y));
        let n = |w: [Scalar; 2]| (w[0].norm_sqr() + w[1].norm_sqr()).sqrt();
        self.form.polar(u, v).norm() / (n(u) * n(v))
    }

    /// True when the form is singular: the involution degenerates to a double point.
    pub fn is_degenerate(&self) -> bool {
        self.form.discriminant().norm() <= 1e-12
    }

    /// The two fixed points (possibly imaginary, coincident when degenerate).
    pub fn fixed_points(&self) -> (HomPoint, HomPoint) {
        let (r1, r2) = self.form.roots().expect("nonzero form");
        (self.chart.point(r1).expect("root"), self.chart.point(r2).expect("root"))
    }
}

/// Fixed points of an involution.
pub fn involution_fixed_points(s: &LineInvolution) -> (HomPoint, HomPoint) {
    s.fixed_points()
}

// ── quadrangles ─────────────────────────────────────────────────────────────

/// Four points, no three collinear.
#[derive(Clone, Copy, Debug)]
pub struct Quadrangle {
    pub v: [HomPoint; 4],
}

/// Index pairs of the three pairs of opposite sides.
pub const OPPOSITE_SIDES: [((usize, usize), (usize, usize)); 3] = [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))];

impl Quadrangle {
    pub fn new(v: [HomPoint; 4]) -> Result<Self> {
        let t = tol();
        for (i, j, k) in [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)] {
            if collinearity(&v[i], &v[j], &v[k]) <= t {
                return Err(GeomError::DegenerateQuadrangle);
            }
        }
        Ok(Quadrangle { v })
    }

    pub fn side(&self, i: usize, j: usize) -> HomLine {
        join_unchecked(&self.v[i], &self.v[j])
    }

    /// Diagonal points `01·23`, `02·13`, `03·12`.
    pub fn diagonal_points(&self) -> [HomPoint; 3] {
        OPPOSITE_SIDES.map(|((i, j), (k, l))| meet_unchecked(&self.side(i, j), &self.side(k, l)))
    }
}

/// The diagonal triangle of a quadrangle.
pub fn diagonal_triangle(q: &Quadrangle) -> Result<[HomPoint; 3]> {
    let d = q.diagonal_points();
    if collinearity(&d[0], &d[1], &d[2]) <= tol() {
        return Err(GeomError::DegenerateQuadrangle);
    }
    Ok(d)
}

/// The involution cut on `l` by the three pairs of opposite sides of `q`.
///
/// If `l` passes through a vertex, that vertex is a double point and the
/// result is degenerate; `strict` turns this case into an error.
pub fn quadrangular_involution(q: &Quadrangle, l: &HomLine, strict: bool) -> Result<LineInvolution> {
    let t = tol();
    if let Some(k) = (0..4).find(|&k| incidence(&q.v[k], l) <= t) {
        if strict {
            return Err(GeomError::LineThroughVertex);
        }
        let v = q.v[k];
        return LineInvolution::from_pairs(l, (v, v), (v, v)).or_else(|_| {
            let chart = LineChart::new(l);
            let c = chart.coords(&v);
            // (c1 y - c2 x)² has the vertex as its double root.
            let f = BinaryForm { a: c[1] * c[1], b: -c[0] * c[1], c: c[0] * c[0] };
            Ok(LineInvolution::from_form(chart, f))
        });
    }
    let traces: Vec<(HomPoint, HomPoint)> =
        OPPOSITE_SIDES.iter().map(|&((i, j), (k, m))| (meet_unchecked(&q.side(i, j), l), meet_unchecked(&q.side(k, m), l))).collect();
    // Use the two best separated pairs.
    let spread = |p: &(HomPoint, HomPoint)| p.0.separation(&p.1);
    let mut idx = [0usize, 1, 2];
    idx.sort_by(|a, b| spread(&traces[*b]).partial_cmp(&spread(&traces[*a])).unwrap());
    LineInvolution::from_pairs(l, traces[idx[0]], traces[idx[1]])
}

/// Point of a line seen as a scalar multiple combination, used by samplers.
pub fn point_on_line(a: &HomPoint, b: &HomPoint, s: Scalar, t: Scalar) -> Option<HomPoint> {
    HomPoint::from_vec(a.coords() * s + b.coords() * t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{approx_eq, re};

    fn x(t: f64) -> HomPoint {
        HomPoint::affine(t, 0.0)
    }

    #[test]
    fn join_examples() {
        let l = join(&HomPoint::new(1.0, 0.0, 1.0), &HomPoint::new(0.0, 1.0, 1.0)).unwrap();
        assert!(l.same_as(&HomLine::new(1.0, 1.0, -1.0), 1e-12));
        let l = join(&HomPoint::new(0.0, 0.0, 1.0), &HomPoint::new(1.0, 0.0, 1.0)).unwrap();
        assert!(l.same_as(&HomLine::new(0.0, 1.0, 0.0), 1e-12));
        let p = HomPoint::new(1.0, 0.0, 0.0);
        assert_eq!(join(&p, &p), Err(GeomError::CoincidentPoints));
    }

    #[test]
    fn meet_examples() {
        let p = meet(&HomLine::new(0.0, 1.0, 0.0), &HomLine::new(1.0, 0.0, 0.0)).unwrap();
        assert!(p.same_as(&HomPoint::new(0.0, 0.0, 1.0), 1e-12));
        let p = meet(&HomLine::new(1.0, 1.0, -1.0), &HomLine::new(1.0, -1.0, 0.0)).unwrap();
        assert!(p.same_as(&HomPoint::new(1.0, 1.0, 2.0), 1e-12));
        assert_eq!(meet(&HomLine::new(0.0, 1.0, 0.0), &HomLine::new(0.0, 2.0, 0.0)), Err(GeomError::CoincidentLines));
    }

    #[test]
    fn cross_ratio_examples() {
        let v = cross_ratio_points(&x(0.0), &x(1.0), &x(2.0), &x(3.0)).unwrap();
        assert!(approx_eq(v, re(4.0 / 3.0), 1e-14));
        let v = cross_ratio_points(
            &HomPoint::new(0.0, 0.0, 1.0),
            &HomPoint::new(1.0, 0.0, 0.0),
            &HomPoint::new(1.0, 0.0, 1.0),
            &HomPoint::new(-1.0, 0.0, 1.0),
        )
        .unwrap();
        assert!(approx_eq(v, re(-1.0), 1e-14));
    }

    #[test]
    fn cross_ratio_coincidences() {
        let (a, b, c) = (x(0.0), x(1.0), x(2.0));
        assert!(approx_eq(cross_ratio_points(&a, &b, &c, &c).unwrap(), re(1.0), 1e-14));
        assert!(approx_eq(cross_ratio_points(&a, &b, &a, &c).unwrap(), re(0.0), 1e-14));
        assert_eq!(cross_ratio_points_ext(&a, &b, &c, &a).unwrap(), ExtScalar::Infinity);
        assert_eq!(cross_ratio_points(&a, &b, &c, &a), Err(GeomError::InfiniteRatio));
        assert!(approx_eq(cross_ratio_points(&a, &b, &a, &b).unwrap(), re(0.0), 1e-14));
        assert_eq!(cross_ratio_points_ext(&a, &a, &a, &b), Err(GeomError::IndeterminateRatio));
        assert!(matches!(cross_ratio_points(&a, &b, &c, &HomPoint::affine(0.0, 1.0)), Err(GeomError::NotCollinear(_))));
    }

    #[test]
    fn harmonic_pencil() {
        let v = cross_ratio_lines(
            &HomLine::new(0.0, 1.0, 0.0),
            &HomLine::new(1.0, 0.0, 0.0),
            &HomLine::new(1.0, -1.0, 0.0),
            &HomLine::new(1.0, 1.0, 0.0),
        )
        .unwrap();
        assert!(approx_eq(v, re(-1.0), 1e-14));
        let a = HomLine::new(0.0, 1.0, 0.0);
        let r = cross_ratio_lines_ext(&a, &HomLine::new(1.0, 0.0, 0.0), &HomLine::new(1.0, -1.0, 0.0), &a);
        assert_eq!(r, Ok(ExtScalar::Infinity));
    }

    #[test]
    fn harmonic_conjugate_examples() {
        let d = harmonic_conjugate(&x(0.0), &x(2.0), &x(1.0)).unwrap();
        assert!(d.same_as(&HomPoint::new(1.0, 0.0, 0.0), 1e-14));
        let d = harmonic_conjugate(&x(0.0), &x(1.0), &x(2.0)).unwrap();
        assert!(d.same_as(&x(2.0 / 3.0), 1e-14));
        assert_eq!(harmonic_conjugate(&x(0.0), &x(1.0), &x(1.0)), Err(GeomError::DegenerateTriple));
    }

    #[test]
    fn separation_examples() {
        assert!(separates(&x(0.0), &x(2.0), &x(1.0), &x(3.0)).unwrap());
        assert!(!separates(&x(0.0), &x(1.0), &x(2.0), &x(3.0)).unwrap());
        let c = HomPoint::complex(re(1.0), crate::scalar::I, re(1.0));
        assert_eq!(separates(&x(0.0), &x(1.0), &x(2.0), &c), Err(GeomError::NonRealInput));
    }

    #[test]
    fn square_diagonals() {
        let q = Quadrangle::new([
            HomPoint::affine(0.0, 0.0),
            HomPoint::affine(1.0, 0.0),
            HomPoint::affine(1.0, 1.0),
            HomPoint::affine(0.0, 1.0),
        ])
        .unwrap();
        let d = diagonal_triangle(&q).unwrap();
        // 01·23 and 03·12 are the side directions at infinity, 02·13 the center.
        assert!(d[0].same_as(&HomPoint::new(1.0, 0.0, 0.0), 1e-14));
        assert!(d[1].same_as(&HomPoint::affine(0.5, 0.5), 1e-14));
        assert!(d[2].same_as(&HomPoint::new(0.0, 1.0, 0.0), 1e-14));
        let bad = Quadrangle::new([x(0.0), x(1.0), x(2.0), HomPoint::affine(0.0, 1.0)]);
        assert!(matches!(bad, Err(GeomError::DegenerateQuadrangle)));
    }

    #[test]
    fn involution_fixed_points_examples() {
        let l = HomLine::new(0.0, 1.0, 0.0);
        let s = LineInvolution::harmonic(&l, &x(0.0), &x(1.0)).unwrap();
        let (f, g) = s.fixed_points();
        let mut fs = [f, g];
        fs.sort_by(|a, b| a.canonical_cmp(b));
        assert!(fs[0].same_as(&x(0.0), 1e-12) && fs[1].same_as(&x(1.0), 1e-12));
        // t ↦ -1/t has fixed points ±i.
        let s = LineInvolution::from_pairs(&l, (x(1.0), x(-1.0)), (x(2.0), x(-0.5))).unwrap();
        let (f, g) = s.fixed_points();
        assert!(!f.is_real() && !g.is_real());
        assert!(f.same_as(&g.conj(), 1e-12));
        let (fx, _) = f.to_affine().unwrap();
        assert!((fx.norm() - 1.0).abs() < 1e-12 && fx.re.abs() < 1e-12);
    }

    #[test]
    fn involution_through_vertex_is_degenerate() {
        let q = Quadrangle::new([
            HomPoint::affine(0.0, 0.0),
            HomPoint::affine(1.0, 0.2),
            HomPoint::affine(0.3, 1.0),
            HomPoint::affine(-0.7, 0.5),
        ])
        .unwrap();
        let l = HomLine::new(1.0, -2.0, 0.0);
        let s = quadrangular_involution(&q, &l, false).unwrap();
        let (f, g) = s.fixed_points();
        assert!(f.same_as(&q.v[0], 1e-9) && g.same_as(&q.v[0], 1e-9));
        assert!(matches!(quadrangular_involution(&q, &l, true), Err(GeomError::LineThroughVertex)));
    }
}

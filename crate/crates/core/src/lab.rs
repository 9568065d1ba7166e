//! Seeded scene sampling, the theorem registry and certificates.
//!
//! Every trial draws from a ChaCha20 stream keyed by `seed_from_u64(seed)`
//! with the stream number set to the trial index, so certificates do not
//! depend on scheduling.

use std::f64::consts::PI;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cayley_klein::{Kind, Model};
use crate::conic::{self, conic_through_five, max_residual};
use crate::error::{GeomError, Result};
use crate::measure;
use crate::oriented::{coherent_orientation, magic_triangle};
use crate::projective::{
    collinearity, collinearity_many, concurrency, harmonic_unchecked, join_unchecked as join, meet_unchecked as meet, HomLine, HomPoint,
    LineInvolution, Quadrangle, OPPOSITE_SIDES, V3,
};
use crate::rays;
use crate::scalar::{Scalar, ONE};
use crate::triangle::{
    best_line, max_incidence, midpoint_quadrilateral_residual, noncollinear_assignments, nx, pick, pv, Pair, TriangleConfig,
};
use crate::trig::{self, classify, GeneralizedTriangleKind, RightAngled};

/// Radius of the disk holding sampled interior points.
pub const INTERIOR_RADIUS: f64 = 0.9;
/// Annulus holding sampled exterior points.
pub const ANNULUS: (f64, f64) = (1.1, 3.0);
pub const RETRY_CAP: usize = 1000;
/// Smallest separation of sampled points and lines.
pub const GUARD: f64 = 1e-4;
/// Displacement of a hypothesis point in perturbed trials.
pub const PERTURBATION: f64 = 1e-3;
/// Residual a perturbed trial must exceed to count as detected.
pub const DETECTION: f64 = 1e-7;
/// Residual below which an experimental claim counts as holding.
pub const CONJECTURE_EPS: f64 = 1e-6;

/// Outcome of a failed sampling attempt or check.
#[derive(Debug)]
pub enum Reject {
    Resample,
    Fail(GeomError),
}

impl From<GeomError> for Reject {
    fn from(e: GeomError) -> Self {
        Reject::Fail(e)
    }
}

pub type Check<T> = std::result::Result<T, Reject>;

trait OrResample<T> {
    fn or_resample(self) -> Check<T>;
}

impl<T> OrResample<T> for Result<T> {
    fn or_resample(self) -> Check<T> {
        self.map_err(|_| Reject::Resample)
    }
}

fn require(ok: bool) -> Check<()> {
    if ok {
        Ok(())
    } else {
        Err(Reject::Resample)
    }
}

/// Sampling bounds in the standard chart.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Bounds {
    pub interior: f64,
    pub annulus: (f64, f64),
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { interior: INTERIOR_RADIUS, annulus: ANNULUS }
    }
}

/// Random source and samplers of a single trial.
pub struct Trial {
    rng: ChaCha20Rng,
    pub model: Model,
    pub bounds: Bounds,
    eps: Option<f64>,
    bent: bool,
}

impl Trial {
    pub fn new(kind: Kind, seed: u64, index: u64, eps: Option<f64>) -> Self {
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Trial { rng, model: Model::of_kind(kind), bounds: Bounds::default(), eps, bent: false }
    }

    pub fn kind(&self) -> Kind {
        self.model.kind
    }

    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        self.rng.gen_range(lo..hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    fn ring_point(&mut self, r0: f64, r1: f64) -> HomPoint {
        let r = (self.range(0.0, 1.0) * (r1 * r1 - r0 * r0) + r0 * r0).sqrt();
        let t = self.range(0.0, 2.0 * PI);
        HomPoint::affine(r * t.cos(), r * t.sin())
    }

    fn unit_vector(&mut self) -> [f64; 3] {
        loop {
            let v = [self.range(-1.0, 1.0), self.range(-1.0, 1.0), self.range(-1.0, 1.0)];
            let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
            if n > 0.1 && n <= 1.0 {
                return [v[0] / n, v[1] / n, v[2] / n];
            }
        }
    }

    fn sphere_point(&mut self) -> HomPoint {
        let v = self.unit_vector();
        HomPoint::new(v[0], v[1], v[2])
    }

    /// Interior point: in the disk for the hyperbolic plane, anywhere for the
    /// elliptic plane.
    pub fn interior(&mut self) -> HomPoint {
        match self.kind() {
            Kind::Hyperbolic => self.ring_point(0.0, self.bounds.interior),
            Kind::Elliptic => self.sphere_point(),
        }
    }

    pub fn exterior(&mut self) -> HomPoint {
        match self.kind() {
            Kind::Hyperbolic => self.ring_point(self.bounds.annulus.0, self.bounds.annulus.1),
            Kind::Elliptic => self.sphere_point(),
        }
    }

    /// Interior or exterior with equal odds.
    pub fn point(&mut self) -> HomPoint {
        if self.coin() {
            self.interior()
        } else {
            self.exterior()
        }
    }

    pub fn points<const N: usize>(&mut self) -> Check<[HomPoint; N]> {
        let p = [(); N].map(|_| self.point());
        guard_points(&p)?;
        Ok(p)
    }

    pub fn line(&mut self) -> Check<HomLine> {
        let [p, q] = self.points::<2>()?;
        Ok(join(&p, &q))
    }

    /// Random point of the line `PQ`.
    pub fn on_line(&mut self, p: &HomPoint, q: &HomPoint) -> HomPoint {
        let t = self.range(0.0, PI);
        HomPoint::from_vec(p.coords() * Scalar::new(t.cos(), 0.0) + q.coords() * Scalar::new(t.sin(), 0.0)).unwrap_or(*p)
    }

    /// Displaces the first point passed in a perturbed trial.
    pub fn bend(&mut self, p: HomPoint) -> HomPoint {
        match self.eps {
            Some(eps) if !self.bent => {
                self.bent = true;
                let u = self.unit_vector();
                let w = V3::new(Scalar::new(u[0], 0.0), Scalar::new(u[1], 0.0), Scalar::new(u[2], 0.0));
                HomPoint::from_vec(p.coords() + w * Scalar::new(eps, 0.0)).unwrap_or(p)
            }
            _ => p,
        }
    }

    /// Displaces a point by `eps` along a given direction in a perturbed trial.
    pub fn bend_along(&mut self, p: HomPoint, w: V3) -> HomPoint {
        match self.eps {
            Some(eps) if !self.bent && w.norm() > 0.0 => {
                self.bent = true;
                HomPoint::from_vec(p.coords() + w * Scalar::new(eps / w.norm(), 0.0)).unwrap_or(p)
            }
            _ => p,
        }
    }

    /// A triangle configuration passing the conditioning guard.
    pub fn config(&mut self, v: [HomPoint; 3]) -> Check<TriangleConfig> {
        let cfg = TriangleConfig::new(self.model, v[0], v[1], v[2]).or_resample()?;
        guard_config(&cfg)?;
        Ok(cfg)
    }

    /// Triangle with vertices anywhere and no conjugate sides.
    pub fn triangle(&mut self) -> Check<TriangleConfig> {
        let v = [self.point(), self.point(), self.point()];
        let cfg = self.config(v)?;
        guard_oblique(&cfg)?;
        Ok(cfg)
    }

    pub fn interior_triangle(&mut self) -> Check<TriangleConfig> {
        let v = [self.interior(), self.interior(), self.interior()];
        let cfg = self.config(v)?;
        guard_oblique(&cfg)?;
        Ok(cfg)
    }

    /// Triangle of a given generalized kind with no conjugate sides.
    pub fn generalized(&mut self, kind: GeneralizedTriangleKind) -> Check<TriangleConfig> {
        use GeneralizedTriangleKind::*;
        let inside = match (self.kind(), kind) {
            (Kind::Elliptic, EllipticTriangle) => 3,
            (Kind::Hyperbolic, HyperbolicTriangle) => 3,
            (Kind::Hyperbolic, TwoRightAngleQuadrilateral) => 2,
            (Kind::Hyperbolic, RightAngledPentagon) => 1,
            (Kind::Hyperbolic, RightAngledHexagon) => 0,
            (Kind::Hyperbolic, Stellate) => self.index(3),
            _ => return Err(Reject::Fail(GeomError::KindMismatch)),
        };
        if kind == RightAngledHexagon {
            return self.hexagon();
        }
        let mut v = [0, 1, 2].map(|i| if i < inside { self.interior() } else { self.exterior() });
        let k = self.index(3);
        v.rotate_left(k);
        let cfg = self.config(v)?;
        guard_oblique(&cfg)?;
        require(classify(&cfg) == kind)?;
        Ok(cfg)
    }

    /// Triangle whose sides are three chords of the disk with pairwise
    /// disjoint caps.
    fn hexagon(&mut self) -> Check<TriangleConfig> {
        let side = [0, 1, 2].map(|_| {
            let t = self.range(0.0, 2.0 * PI);
            let d = self.range(0.1, self.bounds.interior);
            HomLine::new(t.cos(), t.sin(), -d)
        });
        let v = [0, 1, 2].map(|i| meet(&side[nx(i)], &side[pv(i)]));
        guard_points(&v)?;
        let cfg = self.config(v)?;
        guard_oblique(&cfg)?;
        require(classify(&cfg) == GeneralizedTriangleKind::RightAngledHexagon)?;
        Ok(cfg)
    }

    /// Right-angled figure of a given kind, right angle at `A`.
    pub fn right_angled(&mut self, kind: GeneralizedTriangleKind) -> Check<RightAngled> {
        use GeneralizedTriangleKind::*;
        let ra = match self.kind() {
            Kind::Elliptic => {
                require(kind == EllipticTriangle).map_err(|_| Reject::Fail(GeomError::KindMismatch))?;
                let a = measure::sphere(&self.sphere_point());
                let u = self.orthogonal(&a);
                let w = cross3(&a, &u);
                let (tb, tc) = (self.range(0.1, 1.4), self.range(0.1, 1.4));
                let b = combine(&a, &u, tc);
                let c = combine(&a, &w, tb);
                let p = |x: [f64; 3]| HomPoint::new(x[0], x[1], x[2]);
                RightAngled::new(self.model, p(a), p(b), p(c)).or_resample()?
            }
            Kind::Hyperbolic => {
                let (b_in, c_in) = match kind {
                    HyperbolicTriangle => (true, true),
                    LambertQuadrilateral => {
                        let f = self.coin();
                        (f, !f)
                    }
                    RightAngledPentagon => (false, false),
                    _ => return Err(Reject::Fail(GeomError::KindMismatch)),
                };
                let a = self.interior();
                let t = self.range(0.0, PI);
                let c_line = join(&a, &chart_shift(&a, t.cos(), t.sin()));
                let b_line = join(&a, &self.model.pole(&c_line));
                let b = self.along(&a, &c_line, b_in)?;
                let c = self.along(&a, &b_line, c_in)?;
                RightAngled::new(self.model, a, b, c).or_resample()?
            }
        };
        guard_config(&ra.cfg)?;
        let m = &ra.cfg.model;
        let side = &ra.cfg.side;
        require(m.conjugacy(&side[0], &side[1]) >= GUARD && m.conjugacy(&side[0], &side[2]) >= GUARD)?;
        require(ra.kind() == kind)?;
        if self.kind() == Kind::Elliptic {
            let l = elliptic_lifts(&ra.cfg.vertex);
            require(dot3(&l[1], &l[2]) > 0.0)?;
        }
        Ok(ra)
    }

    fn orthogonal(&mut self, a: &[f64; 3]) -> [f64; 3] {
        loop {
            let v = self.unit_vector();
            let k = dot3(a, &v);
            let w = [v[0] - k * a[0], v[1] - k * a[1], v[2] - k * a[2]];
            let n = dot3(&w, &w).sqrt();
            if n > 0.1 {
                return [w[0] / n, w[1] / n, w[2] / n];
            }
        }
    }

    /// Point of a line through `a` in the requested region of the chart.
    fn along(&mut self, a: &HomPoint, l: &HomLine, interior: bool) -> Check<HomPoint> {
        let w = l.real_part();
        let n = (w[0] * w[0] + w[1] * w[1]).sqrt();
        for _ in 0..100 {
            let s = self.range(-4.0, 4.0);
            let p = chart_shift(a, -s * w[1] / n, s * w[0] / n);
            let (x, y) = p.to_affine().map(|(x, y)| (x.re, y.re)).unwrap_or((9.0, 9.0));
            let r = (x * x + y * y).sqrt();
            let ok = if interior { r < self.bounds.interior } else { r >= self.bounds.annulus.0 && r <= self.bounds.annulus.1 };
            if ok && r > 0.0 {
                return Ok(p);
            }
        }
        Err(Reject::Resample)
    }

    /// Triangle symmetric in a line through its first vertex.
    pub fn isosceles(&mut self) -> Check<TriangleConfig> {
        let a = self.point();
        let axis = join(&a, &self.point());
        let b = self.point();
        let refl = conic::harmonic_homology(&self.model.pole(&axis), &axis);
        let c = conic::apply(&refl, &b);
        self.config([a, b, c])
    }
}

fn chart_shift(a: &HomPoint, dx: f64, dy: f64) -> HomPoint {
    let (x, y) = a.to_affine().map(|(x, y)| (x.re, y.re)).unwrap_or((0.0, 0.0));
    HomPoint::affine(x + dx, y + dy)
}

fn dot3(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

fn cross3(u: &[f64; 3], v: &[f64; 3]) -> [f64; 3] {
    [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]
}

fn combine(a: &[f64; 3], u: &[f64; 3], t: f64) -> [f64; 3] {
    [0, 1, 2].map(|i| t.cos() * a[i] + t.sin() * u[i])
}

/// Unit vectors of the vertices with the second and third in the hemisphere
/// of the first.
pub fn elliptic_lifts(v: &[HomPoint; 3]) -> [[f64; 3]; 3] {
    let a = measure::sphere(&v[0]);
    let fix = |p: &HomPoint| {
        let x = measure::sphere(p);
        if dot3(&a, &x) < 0.0 {
            x.map(|c| -c)
        } else {
            x
        }
    };
    [a, fix(&v[1]), fix(&v[2])]
}

/// Resamples unless all pairs of points are separated.
pub fn guard_points(p: &[HomPoint]) -> Check<()> {
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            require(p[i].separation(&p[j]) >= GUARD)?;
        }
    }
    Ok(())
}

pub fn guard_lines(l: &[HomLine]) -> Check<()> {
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            require(l[i].separation(&l[j]) >= GUARD)?;
        }
    }
    Ok(())
}

fn guard_pairs(p: &[Pair; 3]) -> Check<()> {
    for x in p {
        require(x.0.separation(&x.1) >= GUARD)?;
    }
    Ok(())
}

/// Conditioning guard of a triangle configuration.
pub fn guard_config(cfg: &TriangleConfig) -> Check<()> {
    let mut pts = cfg.vertex.to_vec();
    pts.extend(cfg.pvertex);
    guard_points(&pts)?;
    let mut lines = cfg.side.to_vec();
    lines.extend(cfg.pside);
    guard_lines(&lines)?;
    let v = &cfg.vertex;
    require(collinearity(&v[0], &v[1], &v[2]) >= GUARD)?;
    if cfg.model.kind == Kind::Hyperbolic {
        for p in &pts {
            require(cfg.model.absolute.residual(p) >= GUARD)?;
        }
        for l in &lines {
            require(cfg.model.absolute.tangency(l) >= GUARD)?;
        }
    }
    for pairs in [&cfg.mids, &cfg.pmids, &cfg.comps, &cfg.pcomps, &cfg.magic_mids] {
        guard_pairs(pairs)?;
    }
    let r = trig::side_ratios(cfg).or_resample()?;
    for t in r.side.iter().chain(&r.pside) {
        require(t.s.norm() >= GUARD * GUARD)?;
    }
    Ok(())
}

/// No two sides close to conjugate.
pub fn guard_oblique(cfg: &TriangleConfig) -> Check<()> {
    for i in 0..3 {
        require(cfg.model.conjugacy(&cfg.side[nx(i)], &cfg.side[pv(i)]) >= GUARD)?;
    }
    Ok(())
}

// ── scenes ──────────────────────────────────────────────────────────────────

/// Constraint on a sampled triangle.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Constraint {
    Generic,
    Interior,
    Isosceles,
    Generalized(GeneralizedTriangleKind),
    RightAngled(GeneralizedTriangleKind),
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SceneSpec {
    pub seed: u64,
    pub geometry: Kind,
    pub constraint: Constraint,
    pub bounds: Bounds,
}

impl SceneSpec {
    pub fn new(seed: u64, geometry: Kind, constraint: Constraint) -> Self {
        SceneSpec { seed, geometry, constraint, bounds: Bounds::default() }
    }
}

/// Deterministic triangle for a scene spec.
pub fn random_scene(spec: &SceneSpec) -> Result<TriangleConfig> {
    let mut t = Trial::new(spec.geometry, spec.seed, 0, None);
    t.bounds = spec.bounds;
    retry(&mut t, |t| match spec.constraint {
        Constraint::Generic => t.triangle(),
        Constraint::Interior => t.interior_triangle(),
        Constraint::Isosceles => t.isosceles(),
        Constraint::Generalized(k) => t.generalized(k),
        Constraint::RightAngled(k) => t.right_angled(k).map(|r| r.cfg),
    })
}

fn retry<T>(t: &mut Trial, mut f: impl FnMut(&mut Trial) -> Check<T>) -> Result<T> {
    for _ in 0..RETRY_CAP {
        t.bent = false;
        match f(t) {
            Ok(x) => return Ok(x),
            Err(Reject::Resample) => continue,
            Err(Reject::Fail(e)) => return Err(e),
        }
    }
    Err(GeomError::SamplingExhausted(RETRY_CAP))
}

/// First accepted sample of the stream `(seed, index)`.
pub fn sample<T>(kind: Kind, seed: u64, index: u64, f: impl FnMut(&mut Trial) -> Check<T>) -> Result<T> {
    retry(&mut Trial::new(kind, seed, index, None), f)
}

// ── oracle ──────────────────────────────────────────────────────────────────

/// Cross ratio of collinear points from the affine parameters `t = (u·P)/(w·P)`.
/// A point at infinity of the chart drops out as in the harmonic ratio.
pub fn oracle_cross_ratio_with(u: &[f64; 3], w: &[f64; 3], p: [&HomPoint; 4]) -> Result<Scalar> {
    let lin = |f: &[f64; 3], x: &HomPoint| {
        let c = x.coords();
        c[0] * f[0] + c[1] * f[1] + c[2] * f[2]
    };
    let scale = p.iter().map(|x| lin(w, x).norm().max(lin(u, x).norm())).fold(0.0, f64::max);
    let t: Vec<Option<Scalar>> = p
        .iter()
        .map(|x| {
            let d = lin(w, x);
            if d.norm() <= 1e-12 * scale {
                None
            } else {
                Some(lin(u, x) / d)
            }
        })
        .collect();
    if t.iter().filter(|x| x.is_none()).count() > 1 || scale == 0.0 {
        return Err(GeomError::ChartDegenerate);
    }
    let f = |i: usize, j: usize| match (t[i], t[j]) {
        (Some(x), Some(y)) => y - x,
        _ => ONE,
    };
    let den = f(1, 2) * f(0, 3);
    if den.norm() == 0.0 {
        return Err(GeomError::ChartDegenerate);
    }
    Ok(f(0, 2) * f(1, 3) / den)
}

/// [`oracle_cross_ratio_with`] in the coordinate chart best suited to the line.
pub fn oracle_cross_ratio(a: &HomPoint, b: &HomPoint, c: &HomPoint, d: &HomPoint) -> Result<Scalar> {
    let l = join(a, b);
    let lc = l.coords();
    // Parameter along the coordinate the line depends on least.
    let k = (0..3).max_by(|&i, &j| lc[i].norm().partial_cmp(&lc[j].norm()).unwrap()).unwrap();
    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
    let mut u = [0.0; 3];
    let mut w = [0.0; 3];
    u[i] = 1.0;
    w[j] = 1.0;
    let r = oracle_cross_ratio_with(&u, &w, [a, b, c, d]);
    match r {
        Err(GeomError::ChartDegenerate) => {
            w[j] = 0.0;
            w[k] = 1.0;
            oracle_cross_ratio_with(&u, &w, [a, b, c, d])
        }
        _ => r,
    }
}

// ── theorem checks ──────────────────────────────────────────────────────────

fn desargues_direct(t: &mut Trial) -> Check<f64> {
    let [o, a, b, c] = t.points::<4>()?;
    let v = [a, b, c];
    let mut w = [t.on_line(&o, &a), t.on_line(&o, &b), t.on_line(&o, &c)];
    let mut all = vec![o];
    all.extend(v);
    all.extend(w);
    guard_points(&all)?;
    require(collinearity(&a, &b, &c) >= GUARD && collinearity(&w[0], &w[1], &w[2]) >= GUARD)?;
    w[0] = t.bend(w[0]);
    let x = [0, 1, 2].map(|i| meet(&join(&v[nx(i)], &v[pv(i)]), &join(&w[nx(i)], &w[pv(i)])));
    Ok(collinearity(&x[0], &x[1], &x[2]))
}

fn desargues_converse(t: &mut Trial) -> Check<f64> {
    let l = t.line()?;
    let [a, b, c, a2] = t.points::<4>()?;
    let v = [a, b, c];
    let x = [0, 1, 2].map(|i| meet(&join(&v[nx(i)], &v[pv(i)]), &l));
    let b2 = t.on_line(&a2, &x[2]);
    let c2 = meet(&join(&a2, &x[1]), &join(&b2, &x[0]));
    let mut w = [a2, b2, c2];
    let mut all = v.to_vec();
    all.extend(w);
    all.extend(x);
    guard_points(&all)?;
    require(collinearity(&a, &b, &c) >= GUARD && collinearity(&w[0], &w[1], &w[2]) >= GUARD)?;
    w[2] = t.bend(w[2]);
    let lines = [0, 1, 2].map(|i| join(&v[i], &w[i]));
    guard_lines(&lines)?;
    Ok(concurrency(&lines[0], &lines[1], &lines[2]))
}

fn check_desargues(t: &mut Trial) -> Check<f64> {
    if t.coin() {
        let r = desargues_direct(t)?;
        Ok(r.max(desargues_converse(t)?))
    } else {
        let r = desargues_converse(t)?;
        Ok(r.max(desargues_direct(t)?))
    }
}

fn random_conic(t: &mut Trial) -> Check<(conic::Conic, HomPoint)> {
    let p = t.points::<5>()?;
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                require(collinearity(&p[i], &p[j], &p[k]) >= GUARD)?;
            }
        }
    }
    let c = conic_through_five(&p).or_resample()?;
    require(!c.is_degenerate())?;
    Ok((c, p[0]))
}

fn check_pascal(t: &mut Trial) -> Check<f64> {
    let five = t.points::<5>()?;
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                require(collinearity(&five[i], &five[j], &five[k]) >= GUARD)?;
            }
        }
    }
    let c = conic_through_five(&five).or_resample()?;
    require(!c.is_degenerate())?;
    let q = t.point();
    let mut h = five.to_vec();
    h.push(c.second_point(&five[0], q.coords()).ok_or(Reject::Resample)?);
    guard_points(&h)?;
    let normal = c.matrix() * h[5].coords();
    h[5] = t.bend_along(h[5], normal.map(|x| Scalar::new(x.re, 0.0)));
    let p = [0, 1, 2].map(|k| meet(&join(&h[k], &h[k + 1]), &join(&h[k + 3], &h[(k + 4) % 6])));
    guard_points(&p)?;
    Ok(collinearity(&p[0], &p[1], &p[2]))
}

fn check_chasles(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let v = &cfg.vertex;
    let mut w = cfg.pvertex;
    w[0] = t.bend(w[0]);
    let l = [0, 1, 2].map(|i| join(&v[i], &w[i]));
    let a = &cfg.a0;
    Ok(concurrency(&l[0], &l[1], &l[2]).max(collinearity(&a[0], &a[1], &a[2])))
}

fn check_pappus(t: &mut Trial) -> Check<f64> {
    let v = t.points::<4>()?;
    for i in 0..4 {
        require(collinearity(&v[(i + 1) % 4], &v[(i + 2) % 4], &v[(i + 3) % 4]) >= GUARD)?;
    }
    let q = Quadrangle::new(v).or_resample()?;
    let l = t.line()?;
    let pair = |q: &Quadrangle, k: usize| {
        let ((a, b), (c, d)) = OPPOSITE_SIDES[k];
        (meet(&q.side(a, b), &l), meet(&q.side(c, d), &l))
    };
    let (p0, p1) = (pair(&q, 0), pair(&q, 1));
    guard_points(&[p0.0, p0.1, p1.0, p1.1])?;
    let sigma = LineInvolution::from_pairs(&l, p0, p1).or_resample()?;
    let mut w = v;
    w[0] = t.bend(w[0]);
    let p2 = pair(&Quadrangle { v: w }, 2);
    Ok(sigma.pair_residual(&p2.0, &p2.1))
}

fn check_altitudes(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let mut w = cfg.pvertex;
    w[0] = t.bend(w[0]);
    let l = [0, 1, 2].map(|i| join(&cfg.vertex[i], &w[i]));
    Ok(concurrency(&l[0], &l[1], &l[2]))
}

fn tangent_side_mids(t: &mut Trial) -> Check<([Pair; 3], [HomLine; 3])> {
    let phi = t.range(0.0, 2.0 * PI);
    let tp = HomPoint::affine(phi.cos(), phi.sin());
    let l = t.model.polar(&tp);
    let s = [t.range(0.2, 2.0), -t.range(0.2, 2.0)];
    let [b, c] = s.map(|s| chart_shift(&tp, -s * phi.sin(), s * phi.cos()));
    let a = t.point();
    guard_points(&[a, b, c, tp])?;
    require(collinearity(&a, &b, &c) >= GUARD)?;
    let m = &t.model;
    let side = [l, join(&c, &a), join(&a, &b)];
    for x in &side[1..] {
        require(m.absolute.tangency(x) >= GUARD)?;
    }
    let v = [a, b, c];
    let mids = [0, 1, 2].map(|i| m.midpoints_on(&side[i], &v[nx(i)], &v[pv(i)]));
    guard_pairs(&mids)?;
    Ok((mids, side))
}

fn check_midpoint_quadrilateral(t: &mut Trial) -> Check<f64> {
    let (mut mids, side) = if t.kind() == Kind::Hyperbolic && t.coin() {
        tangent_side_mids(t)?
    } else {
        let cfg = t.triangle()?;
        (cfg.mids, cfg.side)
    };
    mids[0].0 = t.bend(mids[0].0);
    let r = [[0, 0, 0], [1, 0, 0]].map(|ch| midpoint_quadrilateral_residual(&mids, &ch, &side));
    Ok(r[0].min(r[1]))
}

fn family(t: &mut Trial, cfg: &TriangleConfig, apex: &[HomPoint; 3], mids: &[Pair; 3]) -> Check<f64> {
    let chs = noncollinear_assignments(mids);
    require(chs.len() == 4)?;
    let mut r: f64 = 0.0;
    for ch in chs {
        let mut d = [0, 1, 2].map(|i| pick(&mids[i], ch[i]));
        d[0] = t.bend(d[0]);
        let l = [0, 1, 2].map(|i| join(&apex[i], &d[i]));
        guard_lines(&l)?;
        r = r.max(concurrency(&l[0], &l[1], &l[2]));
    }
    let _ = cfg;
    Ok(r)
}

fn check_medians(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    family(t, &cfg, &cfg.vertex, &cfg.mids)
}

fn check_side_bisectors(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    family(t, &cfg, &cfg.pvertex, &cfg.mids)
}

fn check_angle_bisectors(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    family(t, &cfg, &cfg.vertex, &cfg.pmids)
}

fn check_pseudo_spieker(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let mut d = cfg.def();
    let dp = cfg.pdef();
    d[0] = t.bend(d[0]);
    let l = [0, 1, 2].map(|i| join(&d[i], &dp[i]));
    guard_lines(&l)?;
    Ok(concurrency(&l[0], &l[1], &l[2]))
}

fn check_pseudomedians(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let (x, y) = (cfg.pseudo(), cfg.ppseudo());
    let mut dv = x.double_vertex;
    dv[0] = t.bend(dv[0]);
    let l = [0, 1, 2].map(|i| join(&cfg.vertex[i], &dv[i]));
    let v = &cfg.vertex;
    let mut r = concurrency(&l[0], &l[1], &l[2]).max(concurrency(&y.median[0], &y.median[1], &y.median[2]));
    for i in 0..3 {
        r = r.max(x.mid[i].separation(&harmonic_unchecked(&v[nx(i)], &v[pv(i)], &cfg.a0[i])));
    }
    Ok(r)
}

fn check_pseudobisectors(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let (x, y) = (cfg.pseudo(), cfg.ppseudo());
    let mut m = x.mid;
    m[0] = t.bend(m[0]);
    let l = [0, 1, 2].map(|i| join(&cfg.pvertex[i], &m[i]));
    let mut r = concurrency(&l[0], &l[1], &l[2]);
    for i in 0..3 {
        r = r.max(crate::projective::incidence(&x.p, &join(&cfg.vertex[i], &cfg.a1[i])));
        r = r.max(crate::projective::incidence(&y.p, &join(&cfg.pvertex[i], &cfg.a1[i])));
        r = r.max(collinearity(&cfg.pvertex[i], &x.double_vertex[i], &cfg.a1[i]));
    }
    Ok(r)
}

fn check_euler(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let (x, y) = (cfg.pseudo(), cfg.ppseudo());
    let p = t.bend(x.p);
    let pts = [cfg.h, x.n, y.n, p, y.p];
    let e = best_line(&pts);
    Ok(collinearity_many(&pts).max(cfg.model.conjugacy(&e, &cfg.orthic_axis())))
}

fn check_orthic_pole(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let o = cfg.orthic_points();
    let np = t.bend(cfg.ppseudo().n);
    let pole = cfg.model.pole(&best_line(&o));
    Ok(collinearity(&o[0], &o[1], &o[2]).max(pole.separation(&np)))
}

fn check_nine_point(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let np = cfg.nine_point_conic()?;
    let mut pts = np.points();
    guard_points(&pts)?;
    pts[8] = t.bend(pts[8]);
    let five = [pts[0], pts[1], pts[2], pts[3], pts[4]];
    let c = conic_through_five(&five)?;
    Ok(max_residual(&c, &pts[5..]))
}

fn check_pascal_line(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let np = cfg.nine_point_conic()?;
    let (f, n) = (np.feet, np.pseudo_mid);
    let hex = [t.bend(f[0]), n[1], f[2], n[0], f[1], n[2]];
    guard_points(&hex)?;
    let p = [0, 1, 2].map(|k| meet(&join(&hex[k], &hex[k + 1]), &join(&hex[k + 3], &hex[(k + 4) % 6])));
    Ok(max_incidence(&p, &np.euler_line))
}

fn check_eleven_point(t: &mut Trial) -> Check<f64> {
    let v = t.points::<4>()?;
    for i in 0..4 {
        require(collinearity(&v[(i + 1) % 4], &v[(i + 2) % 4], &v[(i + 3) % 4]) >= GUARD)?;
    }
    let q = Quadrangle::new(v).or_resample()?;
    let l = t.line()?;
    for p in &v {
        require(crate::projective::incidence(p, &l) >= GUARD)?;
    }
    let e = conic::eleven_point_conic(&q, &l).or_resample()?;
    let mut pts = e.points();
    guard_points(&pts)?;
    let k = pts.len() - 1;
    pts[k] = t.bend(pts[k]);
    let five = [pts[2], pts[3], pts[4], pts[5], pts[6]];
    let c = conic_through_five(&five)?;
    let rest: Vec<HomPoint> = pts.iter().enumerate().filter(|(i, _)| !(2..7).contains(i)).map(|(_, p)| *p).collect();
    Ok(max_residual(&c, &rest))
}

fn check_six_points(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let mut pts = trig::six_points(&cfg.side, &cfg.pside);
    guard_points(&pts)?;
    pts[0] = t.bend(pts[0]);
    Ok(trig::conconic_residual(&pts)?.0)
}

fn check_complementary(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let c = &cfg.comps;
    let mut pts = [c[0].0, c[0].1, c[1].0, c[1].1, c[2].0, c[2].1];
    guard_points(&pts)?;
    pts[0] = t.bend(pts[0]);
    let (r, _) = trig::conconic_residual(&pts)?;
    let (_, carnot) = trig::complementary_midpoints_conic(&cfg)?;
    Ok(r.max(carnot).max(trig::complementary_harmonic_residual(&cfg)))
}

fn check_magic(t: &mut Trial) -> Check<f64> {
    let mut cfg = t.triangle()?;
    cfg.magic_mids[0].0 = t.bend(cfg.magic_mids[0].0);
    Ok(magic_triangle(&cfg).max())
}

fn right_kinds(k: Kind) -> &'static [GeneralizedTriangleKind] {
    use GeneralizedTriangleKind::*;
    match k {
        Kind::Elliptic => &[EllipticTriangle],
        Kind::Hyperbolic => &[HyperbolicTriangle, LambertQuadrilateral, RightAngledPentagon],
    }
}

fn random_right(t: &mut Trial) -> Check<RightAngled> {
    let kinds = right_kinds(t.kind());
    let k = kinds[t.index(kinds.len())];
    t.right_angled(k)
}

fn check_t(t: &mut Trial, k: usize) -> Check<f64> {
    let ra = random_right(t)?;
    let r = ra.identity_residuals()?[k];
    let d = if k >= 2 { ra.derived_residuals()?[k - 2] } else { 0.0 };
    Ok(r.max(d))
}

fn check_t1(t: &mut Trial) -> Check<f64> {
    check_t(t, 0)
}
fn check_t2(t: &mut Trial) -> Check<f64> {
    check_t(t, 1)
}
fn check_t3(t: &mut Trial) -> Check<f64> {
    check_t(t, 2)
}
fn check_t4(t: &mut Trial) -> Check<f64> {
    check_t(t, 3)
}
fn check_t5(t: &mut Trial) -> Check<f64> {
    check_t(t, 4)
}
fn check_t6(t: &mut Trial) -> Check<f64> {
    check_t(t, 5)
}

/// `[a, b, c, β, γ]` of a right-angled figure measured on the hyperboloid or
/// the sphere, with the labels of the unsquared table.
pub fn measure_right_angled(ra: &RightAngled) -> Result<[f64; 5]> {
    use GeneralizedTriangleKind::*;
    let kind = ra.kind();
    let m = &ra.cfg.model;
    if kind == LambertQuadrilateral && m.is_interior(&ra.cfg.vertex[1]) {
        return measure_right_angled(&ra.swapped()?);
    }
    let t = &ra.cfg;
    let (a0, b0, c0) = (t.vertex[0], t.vertex[1], t.vertex[2]);
    let (ba, bc, ca, cb) = (t.conj[1][0], t.conj[1][2], t.conj[2][0], t.conj[2][1]);
    let d = measure::klein_distance;
    Ok(match kind {
        EllipticTriangle => {
            let (s, a) = measure::sphere_triangle(elliptic_lifts(&t.vertex));
            [s[0], s[1], s[2], a[1], a[2]]
        }
        HyperbolicTriangle => {
            [d(&b0, &c0), d(&c0, &a0), d(&a0, &b0), measure::klein_angle(&b0, &a0, &c0), measure::klein_angle(&c0, &a0, &b0)]
        }
        LambertQuadrilateral => [d(&ba, &c0), d(&c0, &a0), d(&a0, &bc), d(&bc, &ba), measure::klein_angle(&c0, &a0, &ba)],
        RightAngledPentagon => [d(&ba, &ca), d(&cb, &a0), d(&a0, &bc), d(&bc, &ba), d(&ca, &cb)],
        _ => return Err(GeomError::KindMismatch),
    })
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(x.abs()).max(y.abs())
}

fn check_table(t: &mut Trial) -> Check<f64> {
    let ra = random_right(t)?;
    let kind = ra.kind();
    let rows = trig::table_rows(kind, measure_right_angled(&ra)?)?;
    let r = rows.iter().map(|&(l, r)| rel(l, r)).fold(0.0, f64::max);
    Ok(r.max(trig::table_5_1(kind, &ra)?.residual()))
}

fn check_law_sines_sq(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    Ok(trig::squared_law_of_sines(&cfg)?.1)
}

/// Residual of the squared law of cosines, failing when the closing branch
/// is not unique.
pub fn law_cosines_sq_residual(cfg: &TriangleConfig, eps: f64) -> Result<f64> {
    let b = trig::squared_law_of_cosines(cfg)?;
    Ok(b.iter().map(|x| if x.tie(eps) { 1.0 } else { x.residual() }).fold(0.0, f64::max))
}

fn check_law_cosines_sq(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    Ok(law_cosines_sq_residual(&cfg, 1e-8)?)
}

fn check_carnot_projective(t: &mut Trial) -> Check<f64> {
    let v = t.points::<3>()?;
    require(collinearity(&v[0], &v[1], &v[2]) >= GUARD)?;
    let side = [0, 1, 2].map(|i| join(&v[nx(i)], &v[pv(i)]));
    let (c, _) = random_conic(t)?;
    let mut six = side.map(|s| {
        let p = c.line_meet(&s).points;
        (p[0], p[1])
    });
    let l = t.line()?;
    let zero = side.map(|s| meet(&s, &l));
    let mut pts = vec![six[0].0, six[0].1, six[1].0, six[1].1, six[2].0, six[2].1];
    pts.extend(v);
    pts.extend(zero);
    guard_points(&pts)?;
    six[0].0 = t.bend(six[0].0);
    let p6 = [six[0].0, six[0].1, six[1].0, six[1].1, six[2].0, six[2].1];
    let (r, _) = trig::conconic_residual(&p6)?;
    Ok(r.max((trig::carnot_product(&v, &six, &zero) - ONE).norm()))
}

fn check_carnot_elliptic(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let v = cfg.vertex;
    let b = t.on_line(&v[2], &v[0]);
    let c = t.on_line(&v[0], &v[1]);
    guard_points(&[v[0], v[1], v[2], b, c])?;
    let d = trig::carnot_foot(&cfg, &[v[1], b, c]);
    let f = trig::fake_carnot_point(&cfg, &b, &c);
    guard_points(&[d, f, v[1], v[2]])?;
    let conc = trig::carnot_cosines(&cfg, &[d, b, c])?;
    let fake = trig::carnot_cosines(&cfg, &[f, b, c])?;
    let detected = fake.concurrency > 1e-6 && fake.class == trig::CarnotClass::Fake;
    Ok(conc.residual.max(conc.concurrency).max(fake.residual).max(if detected { 0.0 } else { 1.0 }))
}

fn perpendicular_feet(t: &mut Trial, cfg: &TriangleConfig) -> Check<[HomPoint; 3]> {
    let q = t.interior();
    let s = [0, 1, 2].map(|i| meet(&cfg.side[i], &join(&q, &cfg.pvertex[i])));
    for p in &s {
        require(cfg.model.is_interior(p) && cfg.model.absolute.residual(p) >= GUARD)?;
    }
    Ok(s)
}

fn check_carnot_hyperbolic(t: &mut Trial) -> Check<f64> {
    let cfg = t.interior_triangle()?;
    let feet = perpendicular_feet(t, &cfg)?;
    let conc = trig::carnot_hyperbolic(&cfg, &feet)?;
    let v = cfg.vertex;
    let star = [0, 1, 2].map(|i| {
        let s = t.range(0.05, 0.95);
        let (p, q) = (v[nx(i)].to_affine().unwrap(), v[pv(i)].to_affine().unwrap());
        HomPoint::affine((p.0 * s + q.0 * (1.0 - s)).re, (p.1 * s + q.1 * (1.0 - s)).re)
    });
    let other = trig::carnot_hyperbolic(&cfg, &star)?;
    require(other.concurrency > 1e-6)?;
    let detected = other.residual > 1e-6;
    Ok(conc.residual.max(conc.concurrency).max(if detected { 0.0 } else { 1.0 }))
}

fn check_carnot_hexagon(t: &mut Trial) -> Check<f64> {
    let cfg = t.generalized(GeneralizedTriangleKind::RightAngledHexagon)?;
    let feet = perpendicular_feet(t, &cfg)?;
    Ok(trig::carnot_hexagon(&cfg, &feet)?)
}

fn oriented(t: &mut Trial) -> Check<crate::oriented::OrientedTriangle> {
    let cfg = t.triangle()?;
    Ok(coherent_orientation(&cfg)?)
}

fn check_projective_sines(t: &mut Trial) -> Check<f64> {
    let ot = oriented(t)?;
    Ok(ot.law_of_sines().1.max(ot.square_residual()?).max(ot.pappus_residual()))
}

fn check_projective_cosines(t: &mut Trial) -> Check<f64> {
    let ot = oriented(t)?;
    Ok(ot.law_of_cosines().into_iter().chain(ot.dual_law_of_cosines()).fold(0.0, f64::max))
}

/// Residuals of the ray-angle formulas at a random origin: both cosine
/// formulas, the supplement relation, line-angle compatibility and an
/// independent angle oracle.
fn check_ray_angles(t: &mut Trial) -> Check<f64> {
    let m = t.model;
    let (conic, p, q1, q2, oracle) = match t.kind() {
        Kind::Hyperbolic => {
            let [p, q1, q2] = [t.interior(), t.interior(), t.interior()];
            guard_points(&[p, q1, q2])?;
            require(collinearity(&p, &q1, &q2) >= GUARD)?;
            (m.absolute, p, q1, q2, measure::klein_angle(&p, &q1, &q2))
        }
        Kind::Elliptic => {
            let p = measure::sphere(&t.sphere_point());
            let r = t.range(0.3, 1.2);
            let mut q = Vec::new();
            for _ in 0..2 {
                let u = t.orthogonal(&p);
                q.push(combine(&p, &u, t.range(0.05, 0.95) * r));
            }
            let h = |x: &[f64; 3]| HomPoint::new(x[0], x[1], x[2]);
            let (ph, q1, q2) = (h(&p), h(&q[0]), h(&q[1]));
            guard_points(&[ph, q1, q2])?;
            require(collinearity(&ph, &q1, &q2) >= GUARD)?;
            let circle = rays::circle_about(&m, &ph, r).or_resample()?;
            (circle, ph, q1, q2, measure::sphere_angle(&p, &q[0], &q[1]))
        }
    };
    let r1 = rays::ray_through(&conic, &p, &q1)?;
    let r2 = rays::ray_through(&conic, &p, &q2)?;
    let r2b = rays::opposite(&conic, &r2);
    let th = rays::angle_between_rays_on(&conic, &r1, &r2)?;
    let thb = rays::angle_between_rays_on(&conic, &r1, &r2b)?;
    let un = |x: f64| x.min(2.0 * PI - x);
    let (c1, c2) = rays::ray_cosines(&conic, &r1, &r2)?;
    let la = m.angle_lines(&r1.carrier, &r2.carrier)?;
    let u = un(th);
    Ok([
        (c1 - th.cos()).norm(),
        (c2 - th.cos()).norm(),
        (c1 - c2).norm(),
        (u + un(thb) - PI).abs(),
        (u.min(PI - u) - la).abs(),
        (u - oracle).abs(),
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

fn check_conjectures(t: &mut Trial) -> Check<f64> {
    let cfg = t.triangle()?;
    let r = cfg.experimental_conjectures()?;
    Ok(r.self_polar.max(r.symmetry_axis).max(r.center_axis.unwrap_or(0.0)))
}

// ── registry ────────────────────────────────────────────────────────────────

/// A registered theorem and its randomized check.
pub struct Theorem {
    pub id: &'static str,
    /// Checked against displaced hypotheses by the perturbation guard.
    pub incidence: bool,
    /// Counts towards pass or fail.
    pub gating: bool,
    pub hyperbolic: bool,
    pub elliptic: bool,
    pub tol: f64,
    pub check: fn(&mut Trial) -> Check<f64>,
}

impl Theorem {
    pub fn supports(&self, k: Kind) -> bool {
        match k {
            Kind::Hyperbolic => self.hyperbolic,
            Kind::Elliptic => self.elliptic,
        }
    }
}

const fn inc(id: &'static str, check: fn(&mut Trial) -> Check<f64>) -> Theorem {
    Theorem { id, incidence: true, gating: true, hyperbolic: true, elliptic: true, tol: 1e-9, check }
}

const fn metric(id: &'static str, check: fn(&mut Trial) -> Check<f64>) -> Theorem {
    Theorem { id, incidence: false, gating: true, hyperbolic: true, elliptic: true, tol: 1e-8, check }
}

pub static THEOREMS: &[Theorem] = &[
    inc("desargues", check_desargues),
    inc("pascal", check_pascal),
    inc("chasles", check_chasles),
    inc("pappus_involution", check_pappus),
    inc("altitudes", check_altitudes),
    inc("midpoint_quadrilateral", check_midpoint_quadrilateral),
    inc("medians", check_medians),
    inc("side_bisectors", check_side_bisectors),
    inc("angle_bisectors", check_angle_bisectors),
    inc("pseudo_spieker", check_pseudo_spieker),
    inc("pseudomedians", check_pseudomedians),
    inc("pseudobisectors", check_pseudobisectors),
    inc("euler_wildberger", check_euler),
    inc("orthic_axis_pole", check_orthic_pole),
    inc("nine_point_conic", check_nine_point),
    inc("pascal_line_hexagon", check_pascal_line),
    inc("eleven_point_conic", check_eleven_point),
    inc("six_points_conic", check_six_points),
    inc("complementary_midpoints_conic", check_complementary),
    inc("magic_midpoints", check_magic),
    metric("T1", check_t1),
    metric("T2", check_t2),
    metric("T3", check_t3),
    metric("T4", check_t4),
    metric("T5", check_t5),
    metric("T6", check_t6),
    metric("table_5_1", check_table),
    metric("law_sines_sq", check_law_sines_sq),
    metric("law_cosines_sq", check_law_cosines_sq),
    Theorem { tol: 1e-9, ..inc("carnot_projective", check_carnot_projective) },
    Theorem { hyperbolic: false, ..metric("carnot_elliptic", check_carnot_elliptic) },
    Theorem { elliptic: false, ..metric("carnot_hyperbolic_iff", check_carnot_hyperbolic) },
    Theorem { elliptic: false, ..metric("carnot_hexagon", check_carnot_hexagon) },
    metric("projective_sines", check_projective_sines),
    metric("projective_cosines", check_projective_cosines),
    Theorem { tol: 1e-9, ..metric("ray_angles", check_ray_angles) },
    Theorem { gating: false, ..metric("conjectures", check_conjectures) },
];

pub fn theorem(id: &str) -> Result<&'static Theorem> {
    THEOREMS.iter().find(|t| t.id == id).ok_or_else(|| GeomError::UnknownTheorem(id.to_string()))
}

pub fn theorem_ids() -> Vec<&'static str> {
    THEOREMS.iter().map(|t| t.id).collect()
}

pub fn geometry_name(k: Kind) -> &'static str {
    match k {
        Kind::Hyperbolic => "hyperbolic",
        Kind::Elliptic => "elliptic",
    }
}

// ── certificates ────────────────────────────────────────────────────────────

/// Result of running a theorem over independent trials.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct Certificate {
    pub theorem_id: String,
    pub geometry: String,
    pub seed: u64,
    pub trials: usize,
    pub max_residual: f64,
    /// Trial indices that failed; each names the stream `(seed, index)`.
    pub failures: Vec<u64>,
    pub tolerance: f64,
    pub wall_time: f64,
    pub gating: bool,
    /// The theorem does not apply to the geometry.
    pub skipped: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<serde_json::Value>,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.max_residual <= self.tolerance
    }

    /// Passed, or excluded from gating.
    pub fn ok(&self) -> bool {
        !self.gating || self.passed()
    }
}

/// Residual of one trial.
pub fn run_trial(th: &Theorem, kind: Kind, seed: u64, index: u64, eps: Option<f64>) -> Result<f64> {
    let mut t = Trial::new(kind, seed, index, eps);
    retry(&mut t, th.check)
}

/// Runs `trials` independent trials of a theorem. `tol` overrides the
/// theorem's default tolerance.
pub fn verify(id: &str, geometry: Kind, seed: u64, trials: usize, tol: Option<f64>) -> Result<Certificate> {
    let th = theorem(id)?;
    let tolerance = tol.unwrap_or(th.tol);
    let start = Instant::now();
    let mut cert = Certificate {
        theorem_id: th.id.to_string(),
        geometry: geometry_name(geometry).to_string(),
        seed,
        trials: 0,
        max_residual: 0.0,
        failures: Vec::new(),
        tolerance,
        wall_time: 0.0,
        gating: th.gating,
        skipped: !th.supports(geometry),
        stats: None,
    };
    if cert.skipped {
        return Ok(cert);
    }
    if th.id == "conjectures" {
        let stats = conjecture_stats(geometry, seed, trials);
        cert.trials = trials;
        cert.max_residual = stats.max_residual();
        cert.stats = Some(serde_json::to_value(&stats).expect("serializable"));
        cert.wall_time = start.elapsed().as_secs_f64();
        return Ok(cert);
    }
    let out: Vec<(u64, Result<f64>)> = (0..trials as u64).into_par_iter().map(|i| (i, run_trial(th, geometry, seed, i, None))).collect();
    cert.trials = trials;
    for (i, r) in out {
        match r {
            Ok(x) if x.is_finite() => {
                cert.max_residual = cert.max_residual.max(x);
                if x > tolerance {
                    cert.failures.push(i);
                }
            }
            _ => {
                cert.max_residual = f64::INFINITY;
                cert.failures.push(i);
            }
        }
    }
    cert.wall_time = start.elapsed().as_secs_f64();
    Ok(cert)
}

/// Share of perturbed trials whose residual exceeds [`DETECTION`].
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PerturbationReport {
    pub theorem_id: String,
    pub geometry: String,
    pub trials: usize,
    pub detected: usize,
}

impl PerturbationReport {
    pub fn fraction(&self) -> f64 {
        self.detected as f64 / self.trials.max(1) as f64
    }
}

pub fn perturbation(id: &str, geometry: Kind, seed: u64, trials: usize) -> Result<PerturbationReport> {
    let th = theorem(id)?;
    let detected = (0..trials as u64)
        .into_par_iter()
        .filter(|&i| match run_trial(th, geometry, seed, i, Some(PERTURBATION)) {
            Ok(x) => x > DETECTION || x.is_nan(),
            Err(GeomError::SamplingExhausted(_)) => false,
            Err(_) => true,
        })
        .count();
    Ok(PerturbationReport { theorem_id: th.id.to_string(), geometry: geometry_name(geometry).to_string(), trials, detected })
}

/// Counts of one experimental claim.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct ClaimStats {
    pub holds: usize,
    pub evaluated: usize,
    pub max_residual: f64,
}

impl ClaimStats {
    fn add(&mut self, r: Option<f64>) {
        if let Some(r) = r {
            self.evaluated += 1;
            if r <= CONJECTURE_EPS {
                self.holds += 1;
            }
            self.max_residual = self.max_residual.max(r);
        }
    }
}

/// Statistics of the three experimental claims about the nine-point conic.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct ConjectureStats {
    pub trials: usize,
    pub errors: usize,
    pub self_polar: ClaimStats,
    pub symmetry_axis: ClaimStats,
    pub center_axis: ClaimStats,
}

impl ConjectureStats {
    pub fn max_residual(&self) -> f64 {
        self.self_polar.max_residual.max(self.symmetry_axis.max_residual).max(self.center_axis.max_residual)
    }
}

pub fn conjecture_stats(geometry: Kind, seed: u64, trials: usize) -> ConjectureStats {
    let reports: Vec<Option<crate::triangle::ConjectureReport>> = (0..trials as u64)
        .into_par_iter()
        .map(|i| {
            let mut t = Trial::new(geometry, seed, i, None);
            retry(&mut t, |t| Ok(t.triangle()?.experimental_conjectures()?)).ok()
        })
        .collect();
    let mut s = ConjectureStats { trials, ..Default::default() };
    for r in reports {
        match r {
            Some(r) => {
                s.self_polar.add(Some(r.self_polar));
                s.symmetry_axis.add(Some(r.symmetry_axis));
                s.center_axis.add(r.center_axis);
            }
            None => s.errors += 1,
        }
    }
    s
}

/// Certificates of several theorems over several geometries.
pub fn verify_many(ids: &[&str], geometries: &[Kind], seed: u64, trials: usize, tol: Option<f64>) -> Result<Vec<Certificate>> {
    let mut out = Vec::new();
    for g in geometries {
        for id in ids {
            out.push(verify(id, *g, seed, trials, tol)?);
        }
    }
    Ok(out)
}

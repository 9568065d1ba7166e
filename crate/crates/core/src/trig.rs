//! Cross-ratio trigonometry: Menelaus, Ceva and Van Aubel formulas, the
//! squared identities of right-angled triangles and their unsquared table,
//! squared laws of sines and cosines, and Carnot's theorems.

use crate::cayley_klein::{Kind, Model, SquaredTrig};
use crate::conic::{self, MeetStatus};
use crate::error::{GeomError, Result};
use crate::projective::{
    collinearity, concurrency, cr, harmonic_unchecked, incidence, join_unchecked as join, meet_unchecked as meet, HomLine, HomPoint,
};
use crate::scalar::{rel_diff, tol, Scalar, ONE};
use crate::triangle::{nx, pv, Pair, TriangleConfig};

/// Threshold for deciding incidences and coincidences of constructed objects.
pub const CLASSIFY_EPS: f64 = 1e-7;

/// Threshold for accepting six input points as lying on a conic.
pub const CONCONIC_EPS: f64 = 1e-7;

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(x.abs()).max(y.abs())
}

/// Triangle `xyz` with transversals `r, s`.
#[derive(Clone, Copy, Debug)]
pub struct MenelausConfig {
    pub sides: [HomLine; 3],
    pub r: HomLine,
    pub s: HomLine,
    /// `X = y·z, Y = z·x, Z = x·y`.
    pub vertex: [HomPoint; 3],
    /// `X₀ = x·r, Y₀ = y·r, Z₀ = z·r`.
    pub zero: [HomPoint; 3],
    /// `X₁ = x·s, Y₁ = y·s, Z₁ = z·s`.
    pub one: [HomPoint; 3],
}

impl MenelausConfig {
    /// Checks that the five lines are distinct and no three are concurrent.
    pub fn new(sides: [HomLine; 3], r: HomLine, s: HomLine) -> Result<Self> {
        let lines = [sides[0], sides[1], sides[2], r, s];
        for i in 0..5 {
            for j in i + 1..5 {
                if lines[i].same_as(&lines[j], tol()) {
                    return Err(GeomError::GeneralPositionViolation("two lines coincide".into()));
                }
                for k in j + 1..5 {
                    if concurrency(&lines[i], &lines[j], &lines[k]) <= tol() {
                        return Err(GeomError::GeneralPositionViolation("three lines are concurrent".into()));
                    }
                }
            }
        }
        let vertex = [0, 1, 2].map(|i| meet(&sides[nx(i)], &sides[pv(i)]));
        let zero = sides.map(|x| meet(&x, &r));
        let one = sides.map(|x| meet(&x, &s));
        Ok(MenelausConfig { sides, r, s, vertex, zero, one })
    }

    /// `(XYZ₁Z₀)(YZX₁X₀)(ZXY₁Y₀)`.
    pub fn product(&self) -> Scalar {
        side_product(&self.vertex, &self.one, &self.zero)
    }

    pub fn residual(&self) -> f64 {
        (self.product() - ONE).norm()
    }
}

/// `(XYZ₁Z₀)(YZX₁X₀)(ZXY₁Y₀)` for points indexed by opposite vertex.
pub fn side_product(v: &[HomPoint; 3], p1: &[HomPoint; 3], p0: &[HomPoint; 3]) -> Scalar {
    (0..3).map(|i| cr(&v[nx(i)], &v[pv(i)], &p1[i], &p0[i])).product()
}

/// Menelaus product for three points on the sides of triangle `XYZ` against
/// reference line `r`.
pub fn menelaus_residual(v: &[HomPoint; 3], feet: &[HomPoint; 3], r: &HomLine) -> Result<f64> {
    let p0 = reference_points(v, r)?;
    Ok((side_product(v, feet, &p0) - ONE).norm())
}

fn reference_points(v: &[HomPoint; 3], r: &HomLine) -> Result<[HomPoint; 3]> {
    if v.iter().any(|x| incidence(x, r) <= tol()) {
        return Err(GeomError::DegenerateInput);
    }
    Ok([0, 1, 2].map(|i| meet(&join(&v[nx(i)], &v[pv(i)]), r)))
}

/// `|(XYZ₁Z₀)(YZX₁X₀)(ZXY₁Y₀) + 1|`: zero exactly when the cevians concur.
pub fn ceva_residual(v: &[HomPoint; 3], feet: &[HomPoint; 3], r: &HomLine) -> Result<f64> {
    let p0 = reference_points(v, r)?;
    Ok((side_product(v, feet, &p0) + ONE).norm())
}

/// Collinearity residual of the harmonic conjugates of the cevian feet.
pub fn ceva_harmonic_collinearity(v: &[HomPoint; 3], feet: &[HomPoint; 3]) -> f64 {
    let h = [0, 1, 2].map(|i| harmonic_unchecked(&v[nx(i)], &v[pv(i)], &feet[i]));
    collinearity(&h[0], &h[1], &h[2])
}

/// Both sides of `(XX₁QX₂) = (XYZ₁Z₀) + (XZY₁Y₀)`.
pub fn van_aubel(v: &[HomPoint; 3], feet: &[HomPoint; 3], r: &HomLine) -> Result<(Scalar, Scalar)> {
    if v.iter().any(|x| incidence(x, r) <= tol()) {
        return Err(GeomError::DegenerateInput);
    }
    let cev = [0, 1, 2].map(|i| join(&v[i], &feet[i]));
    if concurrency(&cev[0], &cev[1], &cev[2]) > CLASSIFY_EPS {
        return Err(GeomError::NonConcurrentCevians);
    }
    let (x, y, z) = (v[0], v[1], v[2]);
    let q = meet(&cev[1], &cev[2]);
    let x2 = meet(r, &cev[0]);
    let y0 = meet(r, &join(&x, &z));
    let z0 = meet(r, &join(&x, &y));
    let lhs = cr(&x, &feet[0], &q, &x2);
    let rhs = cr(&x, &y, &feet[2], &z0) + cr(&x, &z, &feet[1], &y0);
    Ok((lhs, rhs))
}

/// Shape of the non-euclidean figure produced by a triangle and its polar.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GeneralizedTriangleKind {
    EllipticTriangle,
    HyperbolicTriangle,
    LambertQuadrilateral,
    RightAngledPentagon,
    RightAngledHexagon,
    TwoRightAngleQuadrilateral,
    /// Any other arrangement; shares the projective checks only.
    Stellate,
}

impl GeneralizedTriangleKind {
    pub fn name(&self) -> &'static str {
        match self {
            Self::EllipticTriangle => "elliptic-triangle",
            Self::HyperbolicTriangle => "hyperbolic-triangle",
            Self::LambertQuadrilateral => "lambert-quadrilateral",
            Self::RightAngledPentagon => "right-angled-pentagon",
            Self::RightAngledHexagon => "right-angled-hexagon",
            Self::TwoRightAngleQuadrilateral => "two-right-angle-quadrilateral",
            Self::Stellate => "stellate",
        }
    }
}

fn secant(model: &Model, l: &HomLine) -> bool {
    model.absolute.line_meet(l).status == Some(MeetStatus::Secant)
}

/// Sign of `l·P` for a real point with positive last coordinate.
fn side_sign(p: &HomPoint, l: &HomLine) -> f64 {
    let v = p.real_part();
    let w = l.real_part();
    ((w[0] * v[0] + w[1] * v[1] + w[2] * v[2]) * v[2].signum()).signum()
}

/// Kind of a general triangle, from the positions of its vertices and sides.
pub fn classify(cfg: &TriangleConfig) -> GeneralizedTriangleKind {
    use GeneralizedTriangleKind::*;
    let m = &cfg.model;
    if m.kind == Kind::Elliptic {
        return EllipticTriangle;
    }
    let inside = cfg.vertex.map(|v| m.is_interior(&v));
    let n = inside.iter().filter(|&&b| b).count();
    match n {
        3 => HyperbolicTriangle,
        2 => {
            let k = (0..3).find(|&i| !inside[i]).unwrap();
            let (i, j) = (nx(k), pv(k));
            if secant(m, &cfg.side[i])
                && secant(m, &cfg.side[j])
                && side_sign(&cfg.vertex[i], &cfg.pside[k]) == side_sign(&cfg.vertex[j], &cfg.pside[k])
            {
                TwoRightAngleQuadrilateral
            } else {
                Stellate
            }
        }
        1 => {
            let k = (0..3).find(|&i| inside[i]).unwrap();
            if secant(m, &cfg.side[k]) {
                RightAngledPentagon
            } else {
                Stellate
            }
        }
        _ => {
            if (0..3).all(|i| secant(m, &cfg.side[i])) && hexagon_chords_unseparated(cfg) {
                RightAngledHexagon
            } else {
                Stellate
            }
        }
    }
}

/// No side line separates the chords of the other two sides.
fn hexagon_chords_unseparated(cfg: &TriangleConfig) -> bool {
    let m = &cfg.model;
    (0..3).all(|i| {
        let mut s = Vec::new();
        for j in [nx(i), pv(i)] {
            for p in m.absolute_points(&cfg.side[j]) {
                s.push(side_sign(&p, &cfg.side[i]));
            }
        }
        s.iter().all(|&x| x == s[0])
    })
}

fn sq(m: &Model, p: &HomPoint, q: &HomPoint) -> Result<SquaredTrig> {
    m.squared_trig(p, q)
}

/// Squared ratios of the sides of a triangle and of its polar triangle.
#[derive(Clone, Copy, Debug)]
pub struct SideRatios {
    /// Sides `a, b, c`.
    pub side: [SquaredTrig; 3],
    /// Polar sides `a' = B'C', b' = C'A', c' = A'B'`.
    pub pside: [SquaredTrig; 3],
}

pub fn side_ratios(cfg: &TriangleConfig) -> Result<SideRatios> {
    let m = &cfg.model;
    let mut side = [SquaredTrig { c: ONE, s: ONE, t: crate::scalar::ExtScalar::Finite(ONE) }; 3];
    let mut pside = side;
    for i in 0..3 {
        side[i] = sq(m, &cfg.vertex[nx(i)], &cfg.vertex[pv(i)])?;
        pside[i] = sq(m, &cfg.pvertex[nx(i)], &cfg.pvertex[pv(i)])?;
    }
    Ok(SideRatios { side, pside })
}

fn tan2(x: &SquaredTrig) -> Scalar {
    x.s / x.c
}

/// A triangle whose sides `b, c` are conjugate.
#[derive(Clone, Debug)]
pub struct RightAngled {
    pub cfg: TriangleConfig,
}

/// The six squared identities of a right-angled triangle.
pub const SQUARED_IDENTITIES: [&str; 6] = ["T1", "T2", "T3", "T4", "T5", "T6"];

impl RightAngled {
    pub fn new(model: Model, a: HomPoint, b: HomPoint, c: HomPoint) -> Result<Self> {
        let cfg = TriangleConfig::new(model, a, b, c)?;
        Self::from_config(cfg)
    }

    pub fn from_config(cfg: TriangleConfig) -> Result<Self> {
        if cfg.model.conjugacy(&cfg.side[1], &cfg.side[2]) > CLASSIFY_EPS {
            return Err(GeomError::GeneralPositionViolation("sides b and c are not conjugate".into()));
        }
        Ok(RightAngled { cfg })
    }

    /// The same figure with `B` and `C` exchanged.
    pub fn swapped(&self) -> Result<Self> {
        let v = self.cfg.vertex;
        Self::new(self.cfg.model, v[0], v[2], v[1])
    }

    /// Left and right sides of T1 to T6.
    pub fn identities(&self) -> Result<[(Scalar, Scalar); 6]> {
        let r = side_ratios(&self.cfg)?;
        let (a, b, c) = (&r.side[0], &r.side[1], &r.side[2]);
        let (bp, cp) = (&r.pside[1], &r.pside[2]);
        Ok([
            (a.c, b.c * c.c),
            (c.s, a.s * cp.s),
            (cp.c, c.c * bp.s),
            (tan2(c), tan2(a) * bp.c),
            (a.c, ONE / (tan2(bp) * tan2(cp))),
            (tan2(c), b.s * tan2(cp)),
        ])
    }

    pub fn identity_residuals(&self) -> Result<[f64; 6]> {
        Ok(self.identities()?.map(|(l, r)| rel_diff(l, r)))
    }

    /// T3 to T6 evaluated with the polar ratios replaced by the values T2
    /// forces from the sides alone: `S(b') = S(b)/S(a)`, `S(c') = S(c)/S(a)`.
    pub fn derived_residuals(&self) -> Result<[f64; 4]> {
        let r = side_ratios(&self.cfg)?;
        let (a, b, c) = (&r.side[0], &r.side[1], &r.side[2]);
        let sbp = b.s / a.s;
        let scp = c.s / a.s;
        let (cbp, ccp) = (ONE - sbp, ONE - scp);
        let (tbp, tcp) = (sbp / cbp, scp / ccp);
        Ok([rel_diff(ccp, c.c * sbp), rel_diff(tan2(c), tan2(a) * cbp), rel_diff(a.c, ONE / (tbp * tcp)), rel_diff(tan2(c), b.s * tcp)])
    }

    pub fn kind(&self) -> GeneralizedTriangleKind {
        use GeneralizedTriangleKind::*;
        let m = &self.cfg.model;
        if m.kind == Kind::Elliptic {
            return EllipticTriangle;
        }
        let v = &self.cfg.vertex;
        if !m.is_interior(&v[0]) {
            return Stellate;
        }
        match (m.is_interior(&v[1]), m.is_interior(&v[2])) {
            (true, true) => HyperbolicTriangle,
            (false, false) => {
                if secant(m, &self.cfg.side[0]) {
                    RightAngledPentagon
                } else {
                    Stellate
                }
            }
            _ => LambertQuadrilateral,
        }
    }
}

/// Rows of the unsquared table of a right-angled figure.
#[derive(Clone, Copy, Debug)]
pub struct Table51 {
    pub kind: GeneralizedTriangleKind,
    /// `[a, b, c, β, γ]` as measured on the figure.
    pub measures: [f64; 5],
    pub rows: [(f64, f64); 6],
}

impl Table51 {
    pub fn residual(&self) -> f64 {
        self.rows.iter().map(|&(l, r)| rel(l, r)).fold(0.0, f64::max)
    }
}

/// Evaluates the six unsquared relations of a right-angled figure of the
/// requested kind from measured lengths and angles.
pub fn table_5_1(kind: GeneralizedTriangleKind, ra: &RightAngled) -> Result<Table51> {
    use GeneralizedTriangleKind::*;
    if ra.kind() != kind {
        return Err(GeomError::KindMismatch);
    }
    let m = &ra.cfg.model;
    if kind == LambertQuadrilateral && m.is_interior(&ra.cfg.vertex[1]) {
        return table_5_1(kind, &ra.swapped()?);
    }
    let t = &ra.cfg;
    let (a0, b0, c0) = (t.vertex[0], t.vertex[1], t.vertex[2]);
    let (ba, bc, ca, cb) = (t.conj[1][0], t.conj[1][2], t.conj[2][0], t.conj[2][1]);
    let d = |p: &HomPoint, q: &HomPoint| m.distance(p, q);
    let measures = match kind {
        EllipticTriangle | HyperbolicTriangle => {
            [d(&b0, &c0)?, d(&c0, &a0)?, d(&a0, &b0)?, m.angle_lines(&t.side[2], &t.side[0])?, m.angle_lines(&t.side[0], &t.side[1])?]
        }
        LambertQuadrilateral => [d(&ba, &c0)?, d(&c0, &a0)?, d(&a0, &bc)?, d(&bc, &ba)?, m.angle_lines(&t.side[1], &t.side[0])?],
        RightAngledPentagon => [d(&ba, &ca)?, d(&cb, &a0)?, d(&a0, &bc)?, d(&bc, &ba)?, d(&ca, &cb)?],
        _ => return Err(GeomError::KindMismatch),
    };
    Ok(Table51 { kind, measures, rows: table_rows(kind, measures)? })
}

/// The six unsquared relations of a right-angled figure for measured
/// `[a, b, c, β, γ]`.
pub fn table_rows(kind: GeneralizedTriangleKind, measures: [f64; 5]) -> Result<[(f64, f64); 6]> {
    use GeneralizedTriangleKind::*;
    let [a, b, c, be, ga] = measures;
    let (sh, ch, th) = (f64::sinh, f64::cosh, f64::tanh);
    let coth = |x: f64| 1.0 / x.tanh();
    let cot = |x: f64| 1.0 / x.tan();
    Ok(match kind {
        EllipticTriangle => [
            (a.cos(), b.cos() * c.cos()),
            (c.sin(), a.sin() * ga.sin()),
            (ga.cos(), c.cos() * be.sin()),
            (c.tan(), a.tan() * be.cos()),
            (a.cos(), cot(be) * cot(ga)),
            (c.tan(), b.sin() * ga.tan()),
        ],
        HyperbolicTriangle => [
            (ch(a), ch(b) * ch(c)),
            (sh(c), sh(a) * ga.sin()),
            (ga.cos(), ch(c) * be.sin()),
            (th(c), th(a) * be.cos()),
            (ch(a), cot(be) * cot(ga)),
            (th(c), sh(b) * ga.tan()),
        ],
        LambertQuadrilateral => [
            (sh(a), sh(c) * ch(b)),
            (ch(c), ch(a) * ga.sin()),
            (ga.cos(), sh(c) * sh(be)),
            (coth(c), coth(a) * ch(be)),
            (sh(a), coth(be) * cot(ga)),
            (coth(c), sh(b) * ga.tan()),
        ],
        RightAngledPentagon => [
            (ch(a), sh(c) * sh(b)),
            (ch(c), sh(a) * sh(ga)),
            (ch(ga), sh(c) * sh(be)),
            (coth(c), th(a) * ch(be)),
            (ch(a), coth(be) * coth(ga)),
            (coth(c), ch(b) * th(ga)),
        ],
        _ => return Err(GeomError::KindMismatch),
    })
}

/// Ratios `S(a)/S(a')`, `S(b)/S(b')`, `S(c)/S(c')` and their largest pairwise
/// relative deviation.
pub fn squared_law_of_sines(cfg: &TriangleConfig) -> Result<([Scalar; 3], f64)> {
    let r = side_ratios(cfg)?;
    let q = [0, 1, 2].map(|i| r.side[i].s / r.pside[i].s);
    let dev = (0..3).map(|i| rel_diff(q[i], q[nx(i)])).fold(0.0, f64::max);
    Ok((q, dev))
}

/// Both square-root branches of `(√x ± √y)²` checked against a target.
#[derive(Clone, Copy, Debug)]
pub struct BranchCheck {
    pub plus: f64,
    pub minus: f64,
}

impl BranchCheck {
    fn new(target: Scalar, x: Scalar, y: Scalar) -> Self {
        let (u, v) = (x.sqrt(), y.sqrt());
        BranchCheck { plus: rel_diff(target, (u + v) * (u + v)), minus: rel_diff(target, (u - v) * (u - v)) }
    }

    pub fn residual(&self) -> f64 {
        self.plus.min(self.minus)
    }

    /// Exactly one branch closes the identity.
    pub fn unique(&self, eps: f64) -> bool {
        (self.plus <= eps) != (self.minus <= eps)
    }

    /// Both branches close the identity.
    pub fn tie(&self, eps: f64) -> bool {
        self.plus <= eps && self.minus <= eps
    }
}

/// `C(c) = (√(C(a)C(b)) ± √(S(a)S(b)C(c')))²` for each side in turn.
pub fn squared_law_of_cosines(cfg: &TriangleConfig) -> Result<[BranchCheck; 3]> {
    let r = side_ratios(cfg)?;
    Ok([0, 1, 2].map(|k| {
        let (i, j) = (nx(k), pv(k));
        let (a, b) = (&r.side[i], &r.side[j]);
        BranchCheck::new(r.side[k].c, a.c * b.c, a.s * b.s * r.pside[k].c)
    }))
}

/// For collinear `B, C, X` with `a₁ = BX`, `a₂ = CX`: the residual of
/// `(BXCC_a)² = T(a)/T(a₂)` and the branch check of
/// `C(a₁) = (√(C(a)C(a₂)) ± √(S(a)S(a₂)))²`.
pub fn cosine_sum_lemma(model: &Model, b: &HomPoint, c: &HomPoint, x: &HomPoint) -> Result<(f64, BranchCheck)> {
    let l = join(b, c);
    let ca = model.conj(c, &l);
    let a = sq(model, b, c)?;
    let a1 = sq(model, b, x)?;
    let a2 = sq(model, c, x)?;
    let k = cr(b, x, c, &ca);
    let r1 = rel_diff(k * k, tan2(&a) / tan2(&a2));
    Ok((r1, BranchCheck::new(a1.c, a.c * a2.c, a.s * a2.s)))
}

/// Product `(XYZ₀Z₁)(XYZ₀Z₂)(YZX₀X₁)(YZX₀X₂)(ZXY₀Y₁)(ZXY₀Y₂)` with points
/// indexed by the opposite vertex.
pub fn carnot_product(v: &[HomPoint; 3], six: &[Pair; 3], zero: &[HomPoint; 3]) -> Scalar {
    (0..3)
        .map(|i| {
            let (p, q) = (v[nx(i)], v[pv(i)]);
            cr(&p, &q, &zero[i], &six[i].0) * cr(&p, &q, &zero[i], &six[i].1)
        })
        .product()
}

/// Conic residual of six points: the sixth against the conic through the
/// first five.
pub fn conconic_residual(points: &[HomPoint; 6]) -> Result<(f64, conic::Conic)> {
    let five = [points[0], points[1], points[2], points[3], points[4]];
    let c = conic::conic_through_five(&five)?;
    Ok((c.residual(&points[5]), c))
}

/// `|product − 1|` for six conconic points on the sides and three points `X₀, Y₀, Z₀`.
pub fn carnot_projective_residual(v: &[HomPoint; 3], six: &[Pair; 3], zero: &[HomPoint; 3]) -> Result<f64> {
    let pts = [six[0].0, six[0].1, six[1].0, six[1].1, six[2].0, six[2].1];
    let (r, _) = conconic_residual(&pts)?;
    if r > CONCONIC_EPS {
        return Err(GeomError::PointsNotConconic(r));
    }
    Ok((carnot_product(v, six, zero) - ONE).norm())
}

/// `Z₀' = XY · X₀Y₀` and its harmonic conjugate with respect to `X, Y`.
pub fn carnot_converse_points(v: &[HomPoint; 3], x0: &HomPoint, y0: &HomPoint) -> (HomPoint, HomPoint) {
    let z0 = meet(&join(&v[0], &v[1]), &join(x0, y0));
    (z0, harmonic_unchecked(&v[0], &v[1], &z0))
}

/// `ζ_XY = ρ_z τ_XY ρ_z` on `z = XY`.
pub fn carnot_conjugate(model: &Model, x: &HomPoint, y: &HomPoint, w: &HomPoint) -> HomPoint {
    let z = join(x, y);
    let r = model.conj(w, &z);
    model.conj(&harmonic_unchecked(x, y, &r), &z)
}

/// How a point `A*` relates to the perpendicular foot `D*` of `b*·c*` on `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CarnotClass {
    Concurrent,
    Fake,
    Neither,
}

#[derive(Clone, Copy, Debug)]
pub struct CarnotReport {
    /// Relative residual of `C(a₁)C(b₁)C(c₁) = C(a₂)C(b₂)C(c₂)`.
    pub residual: f64,
    /// Concurrency residual of `a*, b*, c*`.
    pub concurrency: f64,
    pub class: CarnotClass,
}

/// Perpendiculars `A*A', B*B', C*C'`.
pub fn carnot_lines(cfg: &TriangleConfig, star: &[HomPoint; 3]) -> [HomLine; 3] {
    [0, 1, 2].map(|i| join(&star[i], &cfg.pvertex[i]))
}

/// `D* = a · A'(b*·c*)`.
pub fn carnot_foot(cfg: &TriangleConfig, star: &[HomPoint; 3]) -> HomPoint {
    let l = carnot_lines(cfg, star);
    let h = meet(&l[1], &l[2]);
    meet(&cfg.side[0], &join(&cfg.pvertex[0], &h))
}

/// A fake Carnot point on `a` for given `B*, C*`.
pub fn fake_carnot_point(cfg: &TriangleConfig, b_star: &HomPoint, c_star: &HomPoint) -> HomPoint {
    let d = carnot_foot(cfg, &[cfg.vertex[1], *b_star, *c_star]);
    carnot_conjugate(&cfg.model, &cfg.vertex[1], &cfg.vertex[2], &d)
}

pub fn carnot_cosines(cfg: &TriangleConfig, star: &[HomPoint; 3]) -> Result<CarnotReport> {
    for i in 0..3 {
        if incidence(&star[i], &cfg.side[i]) > CLASSIFY_EPS {
            return Err(GeomError::DegenerateInput);
        }
    }
    let m = &cfg.model;
    let v = &cfg.vertex;
    let mut p1 = ONE;
    let mut p2 = ONE;
    for i in 0..3 {
        p1 *= sq(m, &v[nx(i)], &star[i])?.c;
        p2 *= sq(m, &v[pv(i)], &star[i])?.c;
    }
    let l = carnot_lines(cfg, star);
    let concurrency = concurrency(&l[0], &l[1], &l[2]);
    let d = carnot_foot(cfg, star);
    let class = if star[0].same_as(&d, CLASSIFY_EPS) {
        CarnotClass::Concurrent
    } else if star[0].same_as(&carnot_conjugate(m, &v[1], &v[2], &d), CLASSIFY_EPS) {
        CarnotClass::Fake
    } else {
        CarnotClass::Neither
    };
    Ok(CarnotReport { residual: rel_diff(p1, p2), concurrency, class })
}

/// Hyperbolic Carnot: concurrency of the perpendiculars next to the residual
/// of `cosh a₁ cosh b₁ cosh c₁ = cosh a₂ cosh b₂ cosh c₂`.
#[derive(Clone, Copy, Debug)]
pub struct CarnotHyperbolic {
    pub concurrency: f64,
    pub residual: f64,
}

pub fn carnot_hyperbolic(cfg: &TriangleConfig, star: &[HomPoint; 3]) -> Result<CarnotHyperbolic> {
    let m = &cfg.model;
    if m.kind != Kind::Hyperbolic {
        return Err(GeomError::KindMismatch);
    }
    if cfg.vertex.iter().chain(star).any(|p| !m.is_interior(p)) {
        return Err(GeomError::PointOutsideModel);
    }
    let v = &cfg.vertex;
    let mut p1 = 1.0;
    let mut p2 = 1.0;
    for i in 0..3 {
        p1 *= m.distance(&v[nx(i)], &star[i])?.cosh();
        p2 *= m.distance(&v[pv(i)], &star[i])?.cosh();
    }
    let l = carnot_lines(cfg, star);
    Ok(CarnotHyperbolic { concurrency: concurrency(&l[0], &l[1], &l[2]), residual: rel(p1, p2) })
}

/// Carnot for a right-angled hexagon with alternate sides `a, b, c`:
/// residual of `sinh a₁ sinh b₁ sinh c₁ = sinh a₂ sinh b₂ sinh c₂`, with
/// `a₁ = d(B_a, A*)`, `a₂ = d(C_a, A*)` and cyclically.
pub fn carnot_hexagon(cfg: &TriangleConfig, star: &[HomPoint; 3]) -> Result<f64> {
    let m = &cfg.model;
    let mut p1 = 1.0;
    let mut p2 = 1.0;
    for i in 0..3 {
        p1 *= m.distance(&cfg.conj[nx(i)][i], &star[i])?.sinh();
        p2 *= m.distance(&cfg.conj[pv(i)][i], &star[i])?.sinh();
    }
    Ok(rel(p1, p2))
}

/// The six points `b·a', c·a', c·b', a·b', a·c', b·c'` in hexagon order
/// `B_a, C_a, C_b, A_b, A_c, B_c` for any two triangles given by sides.
pub fn six_points(side: &[HomLine; 3], pside: &[HomLine; 3]) -> [HomPoint; 6] {
    let p = |i: usize, j: usize| meet(&side[j], &pside[i]);
    [p(1, 0), p(2, 0), p(2, 1), p(0, 1), p(0, 2), p(1, 2)]
}

#[derive(Clone, Copy, Debug)]
pub struct SixPointsReport {
    pub residual: f64,
    pub degenerate: bool,
}

/// The conjugate points of the vertices on the sides lie on a conic.
pub fn six_points_conic_check(cfg: &TriangleConfig) -> Result<SixPointsReport> {
    let pts = six_points(&cfg.side, &cfg.pside);
    let (residual, c) = conconic_residual(&pts)?;
    Ok(SixPointsReport { residual, degenerate: c.is_degenerate() })
}

/// Complementary midpoints `G, G_a, H, H_b, I, I_c`: conic fit residual and
/// the Carnot product through `D_a, E_b, F_c`.
pub fn complementary_midpoints_conic(cfg: &TriangleConfig) -> Result<(f64, f64)> {
    let c = &cfg.comps;
    let pts = [c[0].0, c[0].1, c[1].0, c[1].1, c[2].0, c[2].1];
    let (r, _) = conconic_residual(&pts)?;
    let zero = cfg.def_other();
    let p = carnot_product(&cfg.vertex, &cfg.comps, &zero);
    Ok((r, (p - ONE).norm()))
}

/// Residual of `(GG_aDD_a) = −1` on each side.
pub fn complementary_harmonic_residual(cfg: &TriangleConfig) -> f64 {
    (0..3)
        .map(|i| {
            let (g, d) = (&cfg.comps[i], &cfg.mids[i]);
            (cr(&g.0, &g.1, &d.0, &d.1) + ONE).norm()
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::re;

    fn line(a: f64, b: f64, c: f64) -> HomLine {
        HomLine::new(a, b, c)
    }

    #[test]
    fn menelaus_generic() {
        let m = MenelausConfig::new(
            [line(1.0, 0.2, -0.3), line(-0.4, 1.0, 0.1), line(0.3, -0.7, 1.0)],
            line(0.5, 0.5, 1.0),
            line(-1.0, 0.3, 0.2),
        )
        .unwrap();
        assert!(m.residual() < 1e-12);
    }

    #[test]
    fn menelaus_affine_chart() {
        // Reference line at infinity: affine ratios.
        let v = [HomPoint::affine(0.0, 0.0), HomPoint::affine(4.0, 0.0), HomPoint::affine(0.0, 3.0)];
        let s = join(&HomPoint::affine(1.0, 3.0), &HomPoint::affine(3.0, -1.0));
        let feet = [0, 1, 2].map(|i| meet(&join(&v[nx(i)], &v[pv(i)]), &s));
        assert!(menelaus_residual(&v, &feet, &HomLine::at_infinity()).unwrap() < 1e-12);
    }

    #[test]
    fn menelaus_concurrent_lines_rejected() {
        let r =
            MenelausConfig::new([line(1.0, 0.0, 0.0), line(0.0, 1.0, 0.0), line(1.0, 1.0, 0.0)], line(0.5, 0.5, 1.0), line(-1.0, 0.3, 0.2));
        assert!(matches!(r, Err(GeomError::GeneralPositionViolation(_))));
    }

    #[test]
    fn ceva_and_van_aubel_medians() {
        let v = [HomPoint::affine(0.0, 0.0), HomPoint::affine(4.0, 0.0), HomPoint::affine(1.0, 3.0)];
        let mid = |p: &HomPoint, q: &HomPoint| {
            let (x, y) = (p.to_affine().unwrap(), q.to_affine().unwrap());
            HomPoint::affine((x.0.re + y.0.re) / 2.0, (x.1.re + y.1.re) / 2.0)
        };
        let feet = [0, 1, 2].map(|i| mid(&v[nx(i)], &v[pv(i)]));
        let r = HomLine::at_infinity();
        assert!(ceva_residual(&v, &feet, &r).unwrap() < 1e-12);
        assert!(ceva_harmonic_collinearity(&v, &feet) < 1e-12);
        let (l, rr) = van_aubel(&v, &feet, &r).unwrap();
        assert!((l - rr).norm() < 1e-12);
        // Each summand is -1 and the centroid splits a median 2:1.
        assert!((rr - re(-2.0)).norm() < 1e-12);
    }

    #[test]
    fn van_aubel_rejects_non_concurrent() {
        let v = [HomPoint::affine(0.0, 0.0), HomPoint::affine(4.0, 0.0), HomPoint::affine(1.0, 3.0)];
        let feet = [HomPoint::affine(2.0, 1.0), HomPoint::affine(0.5, 1.5), HomPoint::affine(3.0, 0.0)];
        assert_eq!(van_aubel(&v, &feet, &HomLine::at_infinity()).unwrap_err(), GeomError::NonConcurrentCevians);
    }

    fn right_hyp(a: (f64, f64), dir: (f64, f64), tb: f64, tc: f64) -> RightAngled {
        let m = Model::hyperbolic();
        let a = HomPoint::affine(a.0, a.1);
        let b_line = join(&a, &HomPoint::affine(a.real_part()[0] + dir.0, a.real_part()[1] + dir.1));
        let c_line = join(&a, &m.pole(&b_line));
        let along = |l: &HomLine, t: f64| {
            let w = l.real_part();
            let n = (w[0] * w[0] + w[1] * w[1]).sqrt();
            let p = a.real_part();
            HomPoint::affine(p[0] - t * w[1] / n, p[1] + t * w[0] / n)
        };
        RightAngled::new(m, a, along(&c_line, tb), along(&b_line, tc)).unwrap()
    }

    #[test]
    fn squared_identities_hyperbolic() {
        let ra = right_hyp((0.1, 0.2), (1.0, 0.3), 0.5, -0.4);
        assert_eq!(ra.kind(), GeneralizedTriangleKind::HyperbolicTriangle);
        for r in ra.identity_residuals().unwrap() {
            assert!(r < 1e-10);
        }
        for r in ra.derived_residuals().unwrap() {
            assert!(r < 1e-10);
        }
        let t = table_5_1(GeneralizedTriangleKind::HyperbolicTriangle, &ra).unwrap();
        assert!(t.residual() < 1e-10);
    }

    #[test]
    fn pythagoras_legs_artanh_half() {
        let m = Model::hyperbolic();
        let ra = RightAngled::new(m, HomPoint::affine(0.0, 0.0), HomPoint::affine(0.5, 0.0), HomPoint::affine(0.0, 0.5)).unwrap();
        let r = side_ratios(&ra.cfg).unwrap();
        // cosh(artanh ½) = 2/√3 for each leg, so C(a) = (4/3)².
        assert!((r.side[0].c - re(16.0 / 9.0)).norm() < 1e-12);
        assert!(ra.identity_residuals().unwrap()[0] < 1e-12);
    }

    #[test]
    fn table_lambert_and_pentagon() {
        let lam = right_hyp((0.1, 0.2), (1.0, 0.3), 1.6, -0.4);
        assert_eq!(lam.kind(), GeneralizedTriangleKind::LambertQuadrilateral);
        assert!(table_5_1(GeneralizedTriangleKind::LambertQuadrilateral, &lam).unwrap().residual() < 1e-10);
        let pent = right_hyp((0.05, 0.02), (1.0, 0.3), 1.2, -1.2);
        assert_eq!(pent.kind(), GeneralizedTriangleKind::RightAngledPentagon);
        assert!(table_5_1(GeneralizedTriangleKind::RightAngledPentagon, &pent).unwrap().residual() < 1e-10);
        assert_eq!(table_5_1(GeneralizedTriangleKind::HyperbolicTriangle, &pent).unwrap_err(), GeomError::KindMismatch);
    }

    fn hyp_cfg() -> TriangleConfig {
        TriangleConfig::new(Model::hyperbolic(), HomPoint::affine(0.1, 0.5), HomPoint::affine(-0.4, -0.2), HomPoint::affine(0.5, -0.3))
            .unwrap()
    }

    #[test]
    fn squared_laws() {
        let t = hyp_cfg();
        assert!(squared_law_of_sines(&t).unwrap().1 < 1e-10);
        for b in squared_law_of_cosines(&t).unwrap() {
            assert!(b.residual() < 1e-10);
            assert!(b.unique(1e-9));
        }
    }

    #[test]
    fn cosine_sum() {
        let m = Model::hyperbolic();
        let (b, c, x) = (HomPoint::affine(-0.5, 0.1), HomPoint::affine(0.6, 0.3), HomPoint::affine(0.05, 0.2));
        let (r1, br) = cosine_sum_lemma(&m, &b, &c, &x).unwrap();
        assert!(r1 < 1e-10);
        assert!(br.residual() < 1e-10);
    }

    #[test]
    fn carnot_altitude_feet() {
        let t = hyp_cfg();
        let r = carnot_cosines(&t, &t.foot).unwrap();
        assert!(r.residual < 1e-10);
        assert!(r.concurrency < 1e-12);
        assert_eq!(r.class, CarnotClass::Concurrent);
        let h = carnot_hyperbolic(&t, &t.foot).unwrap();
        assert!(h.residual < 1e-10);
    }

    #[test]
    fn fake_carnot_points() {
        let t = TriangleConfig::new(
            Model::elliptic(),
            HomPoint::new(1.0, 0.2, 0.3),
            HomPoint::new(-0.3, 1.0, 0.5),
            HomPoint::new(0.2, -0.4, 1.0),
        )
        .unwrap();
        let bs = t.conj[0][1];
        let bstar = harmonic_unchecked(&t.vertex[2], &t.vertex[0], &bs);
        let cstar = t.mids[2].0;
        let astar = fake_carnot_point(&t, &bstar, &cstar);
        let r = carnot_cosines(&t, &[astar, bstar, cstar]).unwrap();
        assert!(r.residual < 1e-9);
        assert!(r.concurrency > 1e-6);
        assert_eq!(r.class, CarnotClass::Fake);
    }

    #[test]
    fn conics_of_the_triangle() {
        let t = hyp_cfg();
        let s = six_points_conic_check(&t).unwrap();
        assert!(s.residual < 1e-10);
        assert!(!s.degenerate);
        let (fit, carnot) = complementary_midpoints_conic(&t).unwrap();
        assert!(fit < 1e-10);
        assert!(carnot < 1e-10);
        assert!(complementary_harmonic_residual(&t) < 1e-10);
    }

    #[test]
    fn carnot_projective_converse() {
        let c = conic::Conic::from_real([[1.0, 0.1, 0.0], [0.1, 2.0, 0.3], [0.0, 0.3, -1.0]]);
        let v = [HomPoint::affine(0.1, 0.05), HomPoint::affine(2.0, 0.4), HomPoint::affine(-0.3, 1.8)];
        let six: [Pair; 3] = [0, 1, 2].map(|i| {
            let m = c.line_meet(&join(&v[nx(i)], &v[pv(i)]));
            (m.points[0], m.points[1])
        });
        let t = line(0.3, -1.0, 2.5);
        let zero = [0, 1, 2].map(|i| meet(&join(&v[nx(i)], &v[pv(i)]), &t));
        assert!(carnot_projective_residual(&v, &six, &zero).unwrap() < 1e-10);
        let (z0, h) = carnot_converse_points(&v, &zero[0], &zero[1]);
        assert!(z0.same_as(&zero[2], 1e-12));
        let moved = [zero[0], zero[1], h];
        assert!(carnot_projective_residual(&v, &six, &moved).unwrap() < 1e-10);
        assert!(collinearity(&moved[0], &moved[1], &moved[2]) > 1e-3);
    }
}

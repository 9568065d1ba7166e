//! Angles between rays from the cross ratio over a conic.

use std::f64::consts::PI;

use crate::cayley_klein::Model;
use crate::conic::{Conic, M3};
use crate::error::{GeomError, Result};
use crate::projective::{concurrency, incidence, join_unchecked as join, separates, HomLine, HomPoint, V3};
use crate::scalar::{tol, Scalar};

/// A ray from an interior point `origin` along `carrier` to the conic point `end`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Ray {
    pub origin: HomPoint,
    pub carrier: HomLine,
    pub end: HomPoint,
}

/// The two rays into which `P` divides the line `a`, ordered as the conic
/// points of `a` in canonical order.
pub fn split_rays_on(conic: &Conic, p: &HomPoint, a: &HomLine) -> Result<(Ray, Ray)> {
    if !conic.is_interior(p) {
        return Err(GeomError::PointNotInterior);
    }
    if incidence(p, a) > tol() {
        return Err(GeomError::LineNotThroughPoint);
    }
    let [e1, e2] = conic.line_meet(a).points;
    let ray = |end| Ray { origin: *p, carrier: *a, end };
    Ok((ray(e1), ray(e2)))
}

/// [`split_rays_on`] for the absolute conic of a model.
pub fn split_rays(model: &Model, p: &HomPoint, a: &HomLine) -> Result<(Ray, Ray)> {
    split_rays_on(&model.absolute, p, a)
}

/// The ray from `P` through the point `Q`.
pub fn ray_through(conic: &Conic, p: &HomPoint, q: &HomPoint) -> Result<Ray> {
    if p.same_as(q, tol()) {
        return Err(GeomError::CoincidentPoints);
    }
    let (r1, r2) = split_rays_on(conic, p, &join(p, q))?;
    if separates(p, &r1.end, q, &r2.end)? {
        Ok(r1)
    } else {
        Ok(r2)
    }
}

/// The other ray of the carrier.
pub fn opposite(conic: &Conic, r: &Ray) -> Ray {
    let [e1, e2] = conic.line_meet(&r.carrier).points;
    let end = if e1.separation(&r.end) <= e2.separation(&r.end) { e2 } else { e1 };
    Ray { end, ..*r }
}

/// Contact points `U, V` of the tangents from `P`, ordered so that angles
/// increase counterclockwise in the chart where `P` has its largest coordinate.
pub fn contact_points(conic: &Conic, p: &HomPoint) -> Result<(HomPoint, HomPoint)> {
    let [u, v] = conic.line_meet(&conic.polar(p)?).points;
    let c = p.coords();
    let k = (0..3).max_by(|&i, &j| c[i].norm().partial_cmp(&c[j].norm()).unwrap()).unwrap();
    let (i, j) = ((k + 1) % 3, (k + 2) % 3);
    let base = c / c[k];
    let step = |n: usize| {
        let mut w = base;
        w[n] += Scalar::new(1e-4, 0.0);
        HomPoint::from_vec(w).expect("nonzero")
    };
    let ri = ray_through(conic, p, &step(i))?;
    let rj = ray_through(conic, p, &step(j))?;
    let x = conic.cross_ratio_on_conic(&u, &v, &ri.end, &rj.end)?;
    Ok(if x.arg() >= 0.0 { (u, v) } else { (v, u) })
}

fn check_origins(r1: &Ray, r2: &Ray) -> Result<()> {
    if !r1.origin.same_as(&r2.origin, tol()) {
        return Err(GeomError::DifferentOrigins);
    }
    Ok(())
}

fn wrap(t: f64) -> f64 {
    let t = if t < 0.0 { t + 2.0 * PI } else { t };
    if t >= 2.0 * PI {
        0.0
    } else {
        t
    }
}

/// Angle in `[0, 2π)` from `r₁` to `r₂`, `(1/i) log (U V A₁ B₁)` over the conic.
pub fn angle_between_rays_on(conic: &Conic, r1: &Ray, r2: &Ray) -> Result<f64> {
    check_origins(r1, r2)?;
    if r1.end.same_as(&r2.end, tol()) {
        return Ok(0.0);
    }
    let (u, v) = contact_points(conic, &r1.origin)?;
    let x = conic.cross_ratio_on_conic(&u, &v, &r1.end, &r2.end)?;
    Ok(wrap(x.arg()))
}

/// [`angle_between_rays_on`] for the absolute conic of a model.
pub fn angle_between_rays(model: &Model, r1: &Ray, r2: &Ray) -> Result<f64> {
    angle_between_rays_on(&model.absolute, r1, r2)
}

/// Cosines of the angle from the two cross ratio formulas:
/// `2(A₁B₁B₂A₂) − 1` and `(A₁B₁B′₁A′₁)` with the conjugate lines at the origin.
pub fn ray_cosines(conic: &Conic, r1: &Ray, r2: &Ray) -> Result<(Scalar, Scalar)> {
    check_origins(r1, r2)?;
    let p = r1.origin;
    let (a1, b1) = (r1.end, r2.end);
    let (a2, b2) = (opposite(conic, r1).end, opposite(conic, r2).end);
    let c1 = conic.cross_ratio_on_conic(&a1, &b1, &b2, &a2)? * 2.0 - 1.0;
    let [ap1, ap2] = conic.line_meet(&conic.conj_line(&r1.carrier, &p)).points;
    let [bp1, bp2] = conic.line_meet(&conic.conj_line(&r2.carrier, &p)).points;
    let (l1, l2) = (join(&a1, &b2), join(&b1, &a2));
    let skew =
        |x: &HomPoint, y: &HomPoint, z: &HomPoint, w: &HomPoint| concurrency(&l1, &l2, &join(x, y)).max(concurrency(&l1, &l2, &join(z, w)));
    let bp = if skew(&ap1, &bp1, &ap2, &bp2) <= skew(&ap1, &bp2, &ap2, &bp1) { bp1 } else { bp2 };
    let ap = ap1;
    let c2 = conic.cross_ratio_on_conic(&a1, &b1, &bp, &ap)?;
    Ok((c1, c2))
}

/// The circle `(PᵀΦX)² = k (PᵀΦP)(XᵀΦX)` of radius `r` about an interior
/// point, with `k = cos² r` in the elliptic plane and `cosh² r` in the
/// hyperbolic plane.
pub fn circle_about(model: &Model, p: &HomPoint, r: f64) -> Result<Conic> {
    use crate::cayley_klein::Kind;
    if !model.is_interior(p) {
        return Err(GeomError::PointNotInterior);
    }
    let k = match model.kind {
        Kind::Elliptic => r.cos().powi(2),
        Kind::Hyperbolic => r.cosh().powi(2),
    };
    let phi = model.absolute.matrix();
    let fp: V3 = phi * p.coords();
    let pp = model.absolute.bilinear(p.coords(), p.coords());
    let m: M3 = fp * fp.transpose() - phi * (pp * k);
    let c = Conic::new(m);
    if c.is_degenerate() {
        return Err(GeomError::DegenerateConic);
    }
    Ok(c)
}

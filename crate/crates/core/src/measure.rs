//! Metric measurements computed from vector models, independent of cross
//! ratios: the hyperboloid for the Klein disk and the unit sphere for the
//! elliptic plane.

use crate::projective::HomPoint;

fn affine(p: &HomPoint) -> [f64; 2] {
    let v = p.real_part();
    [v[0] / v[2], v[1] / v[2]]
}

/// Point of the hyperboloid `x² + y² − z² = −1` above an interior Klein point.
pub fn hyperboloid(p: &HomPoint) -> [f64; 3] {
    let [x, y] = affine(p);
    let w = (1.0 - x * x - y * y).sqrt();
    [x / w, y / w, 1.0 / w]
}

fn minkowski(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] - u[2] * v[2]
}

/// Hyperbolic distance between interior points, `cosh d = −⟨P, Q⟩`.
pub fn klein_distance(p: &HomPoint, q: &HomPoint) -> f64 {
    let (u, v) = (hyperboloid(p), hyperboloid(q));
    (-minkowski(&u, &v)).max(1.0).acosh()
}

/// Angle in `[0, π]` at interior vertex `a` between the rays towards `b` and `c`.
pub fn klein_angle(a: &HomPoint, b: &HomPoint, c: &HomPoint) -> f64 {
    let x = hyperboloid(a);
    let tangent = |p: &HomPoint| {
        let y = hyperboloid(p);
        let k = minkowski(&x, &y);
        [y[0] + k * x[0], y[1] + k * x[1], y[2] + k * x[2]]
    };
    let (tb, tc) = (tangent(b), tangent(c));
    let cos = minkowski(&tb, &tc) / (minkowski(&tb, &tb) * minkowski(&tc, &tc)).sqrt();
    cos.clamp(-1.0, 1.0).acos()
}

/// Unit vector representing a real point of the elliptic plane.
pub fn sphere(p: &HomPoint) -> [f64; 3] {
    let v = p.real_part();
    let n = (v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt();
    [v[0] / n, v[1] / n, v[2] / n]
}

fn dot(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    u[0] * v[0] + u[1] * v[1] + u[2] * v[2]
}

/// Great-circle distance in `[0, π]` between two unit vectors.
pub fn sphere_distance(u: &[f64; 3], v: &[f64; 3]) -> f64 {
    dot(u, v).clamp(-1.0, 1.0).acos()
}

/// Spherical angle in `[0, π]` at `a` between the arcs towards `b` and `c`.
pub fn sphere_angle(a: &[f64; 3], b: &[f64; 3], c: &[f64; 3]) -> f64 {
    let t = |p: &[f64; 3]| {
        let k = dot(a, p);
        [p[0] - k * a[0], p[1] - k * a[1], p[2] - k * a[2]]
    };
    let (tb, tc) = (t(b), t(c));
    (dot(&tb, &tc) / (dot(&tb, &tb) * dot(&tc, &tc)).sqrt()).clamp(-1.0, 1.0).acos()
}

/// Sides `a, b, c` and angles `α, β, γ` of the spherical triangle with the
/// given unit-vector vertices.
pub fn sphere_triangle(v: [[f64; 3]; 3]) -> ([f64; 3], [f64; 3]) {
    let sides = [0, 1, 2].map(|i| sphere_distance(&v[(i + 1) % 3], &v[(i + 2) % 3]));
    let angles = [0, 1, 2].map(|i| sphere_angle(&v[i], &v[(i + 1) % 3], &v[(i + 2) % 3]));
    (sides, angles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_from_center() {
        let d = klein_distance(&HomPoint::affine(0.0, 0.0), &HomPoint::affine(0.5, 0.0));
        assert!((d - 0.5f64.atanh()).abs() < 1e-14);
    }

    #[test]
    fn angle_at_center() {
        let o = HomPoint::affine(0.0, 0.0);
        let a = klein_angle(&o, &HomPoint::affine(0.5, 0.0), &HomPoint::affine(0.0, 0.3));
        assert!((a - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
    }

    #[test]
    fn octant_triangle() {
        let (s, a) = sphere_triangle([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]]);
        for x in s.iter().chain(&a) {
            assert!((x - std::f64::consts::FRAC_PI_2).abs() < 1e-14);
        }
    }
}

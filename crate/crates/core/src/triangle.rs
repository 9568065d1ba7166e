//! A triangle together with its polar triangle and every derived object:
//! conjugate points and lines, midpoints of all kinds, altitudes and the
//! orthocenter, classical centers, pseudocenters, the Euler-Wildberger line,
//! the orthic axis and the nine-point conic.
//!
//! Objects are indexed cyclically. Vertex `i` is opposite side `i`; the
//! polar side `i` is the polar of vertex `i` and the polar vertex `i` is the
//! pole of side `i`. For `A, B, C` the indices are `0, 1, 2`.

use crate::cayley_klein::Model;
use crate::conic::{self, Conic};
use crate::error::{GeomError, Result};
use crate::projective::{
    collinearity, concurrency, harmonic_unchecked, incidence, join_unchecked as join, meet_unchecked as meet, HomLine, HomPoint,
};
use crate::scalar::{rel_diff, tol};

/// Threshold separating exactly collinear midpoint triples from generic ones.
pub const COLLINEAR_EPS: f64 = 1e-7;

#[inline]
pub fn nx(i: usize) -> usize {
    (i + 1) % 3
}

#[inline]
pub fn pv(i: usize) -> usize {
    (i + 2) % 3
}

/// The two points of a pair, selected by index.
pub type Pair = (HomPoint, HomPoint);

pub fn pick(p: &Pair, k: usize) -> HomPoint {
    if k == 0 {
        p.0
    } else {
        p.1
    }
}

pub fn other(p: &Pair, k: usize) -> HomPoint {
    pick(p, 1 - k)
}

/// A triangle, its polar triangle and the named objects built from them.
#[derive(Clone, Debug)]
pub struct TriangleConfig {
    pub model: Model,
    /// `A, B, C`.
    pub vertex: [HomPoint; 3],
    /// `a = BC, b = CA, c = AB`.
    pub side: [HomLine; 3],
    /// `A', B', C'`: poles of the sides.
    pub pvertex: [HomPoint; 3],
    /// `a', b', c'`: polars of the vertices.
    pub pside: [HomLine; 3],
    /// `conj[i][j]`: the conjugate point of vertex `i` on side `j` (`A_b = conj[0][1]`).
    pub conj: [[HomPoint; 3]; 3],
    /// `conj_line[i][j]`: the conjugate line of side `i` through vertex `j` (`a_B = conj_line[0][1]`).
    pub conj_line: [[HomLine; 3]; 3],
    /// Midpoints of `BC, CA, AB`.
    pub mids: [Pair; 3],
    /// Midpoints of `B'C', C'A', A'B'`.
    pub pmids: [Pair; 3],
    /// Complementary midpoints `G, H, I`: midpoints of `B C_a`, `C A_b`, `A B_c`.
    pub comps: [Pair; 3],
    /// Complementary midpoints `G', H', I'`: midpoints of `B' A_c`, `C' B_a`, `A' C_b`.
    pub pcomps: [Pair; 3],
    /// Magic triangle sides `B_c C_b`, `C_a A_c`, `A_b B_a`.
    pub magic_side: [HomLine; 3],
    /// Magic triangle vertices.
    pub magic_vertex: [HomPoint; 3],
    /// Magic midpoints: midpoints of `B_c C_b`, `C_a A_c`, `A_b B_a`.
    pub magic_mids: [Pair; 3],
    /// `A_0 = a·a'`.
    pub a0: [HomPoint; 3],
    /// Altitudes `AA', BB', CC'`.
    pub altitude: [HomLine; 3],
    /// Orthocenter.
    pub h: HomPoint,
    /// Polar of the orthocenter.
    pub h_line: HomLine,
    /// Feet of the altitudes.
    pub foot: [HomPoint; 3],
    /// `A_1 = b_C · c_B`: poles of the magic sides.
    pub a1: [HomPoint; 3],
    /// Chosen midpoint indices for `D, E, F` and `D', E', F'`.
    pub choice: [usize; 3],
    pub pchoice: [usize; 3],
}

fn violation(msg: &str) -> GeomError {
    GeomError::GeneralPositionViolation(msg.to_string())
}

impl TriangleConfig {
    /// Builds the configuration, checking general position.
    pub fn new(model: Model, a: HomPoint, b: HomPoint, c: HomPoint) -> Result<Self> {
        let t = tol();
        let vertex = [a, b, c];
        if collinearity(&a, &b, &c) <= t {
            return Err(violation("vertices are collinear"));
        }
        if vertex.iter().any(|v| model.on_absolute(v)) {
            return Err(violation("a vertex lies on the absolute conic"));
        }
        let side = [0, 1, 2].map(|i| join(&vertex[nx(i)], &vertex[pv(i)]));
        if side.iter().any(|s| model.absolute.is_tangent(s)) {
            return Err(violation("a side is tangent to the absolute conic"));
        }
        let pvertex = side.map(|s| model.pole(&s));
        let pside = vertex.map(|v| model.polar(&v));
        for p in &pvertex {
            if vertex.iter().any(|v| v.same_as(p, t)) {
                return Err(violation("a vertex of the polar triangle is a vertex of the triangle"));
            }
        }
        let conj = [0, 1, 2].map(|i| [0, 1, 2].map(|j| meet(&side[j], &pside[i])));
        let conj_line = [0, 1, 2].map(|i| [0, 1, 2].map(|j| join(&vertex[j], &pvertex[i])));
        let mid = |p: &HomPoint, q: &HomPoint| model.midpoints_on(&join(p, q), p, q);
        let mids = [0, 1, 2].map(|i| mid(&vertex[nx(i)], &vertex[pv(i)]));
        let pmids = [0, 1, 2].map(|i| mid(&pvertex[nx(i)], &pvertex[pv(i)]));
        let comps = [0, 1, 2].map(|i| mid(&vertex[nx(i)], &conj[pv(i)][i]));
        let pcomps = [0, 1, 2].map(|i| mid(&pvertex[nx(i)], &conj[i][pv(i)]));
        let magic_ends = [0, 1, 2].map(|i| (conj[nx(i)][pv(i)], conj[pv(i)][nx(i)]));
        let magic_side = magic_ends.map(|(p, q)| join(&p, &q));
        let magic_vertex = [0, 1, 2].map(|i| meet(&magic_side[nx(i)], &magic_side[pv(i)]));
        let magic_mids = magic_ends.map(|(p, q)| mid(&p, &q));
        let a0 = [0, 1, 2].map(|i| meet(&side[i], &pside[i]));
        let altitude = [0, 1, 2].map(|i| join(&vertex[i], &pvertex[i]));
        let h = meet(&altitude[0], &altitude[1]);
        let h_line = model.polar(&h);
        let foot = [0, 1, 2].map(|i| meet(&side[i], &altitude[i]));
        let a1 = [0, 1, 2].map(|i| meet(&conj_line[nx(i)][pv(i)], &conj_line[pv(i)][nx(i)]));
        let mut cfg = TriangleConfig {
            model,
            vertex,
            side,
            pvertex,
            pside,
            conj,
            conj_line,
            mids,
            pmids,
            comps,
            pcomps,
            magic_side,
            magic_vertex,
            magic_mids,
            a0,
            altitude,
            h,
            h_line,
            foot,
            a1,
            choice: [0; 3],
            pchoice: [0; 3],
        };
        cfg.choice = choose(&cfg.mids, &cfg.a0).ok_or_else(|| violation("no admissible midpoints of the triangle"))?;
        cfg.pchoice = choose(&cfg.pmids, &cfg.a0).ok_or_else(|| violation("no admissible midpoints of the polar triangle"))?;
        Ok(cfg)
    }

    /// Chosen midpoints `D, E, F`.
    pub fn def(&self) -> [HomPoint; 3] {
        [0, 1, 2].map(|i| pick(&self.mids[i], self.choice[i]))
    }

    /// The other midpoints `D_a, E_b, F_c`.
    pub fn def_other(&self) -> [HomPoint; 3] {
        [0, 1, 2].map(|i| other(&self.mids[i], self.choice[i]))
    }

    /// Chosen midpoints `D', E', F'`.
    pub fn pdef(&self) -> [HomPoint; 3] {
        [0, 1, 2].map(|i| pick(&self.pmids[i], self.pchoice[i]))
    }

    pub fn pdef_other(&self) -> [HomPoint; 3] {
        [0, 1, 2].map(|i| other(&self.pmids[i], self.pchoice[i]))
    }

    /// Number of conjugate side pairs.
    pub fn conjugate_side_pairs(&self) -> usize {
        (0..3).filter(|&i| self.model.is_perpendicular(&self.side[nx(i)], &self.side[pv(i)])).count()
    }

    /// Deviation from `(B_1 B_2 A C) = (C_1 C_2 A B)` under the best labeling of
    /// the absolute points of the sides through vertex `i`.
    pub fn isosceles_residual(&self, i: usize) -> f64 {
        let (j, k) = (nx(i), pv(i));
        let a = self.vertex[i];
        // Side k joins vertex i and vertex j; side j joins vertex k and vertex i.
        let bq = self.model.absolute_points(&self.side[j]);
        let cq = self.model.absolute_points(&self.side[k]);
        let (b, c) = (self.vertex[j], self.vertex[k]);
        let mut best = f64::INFINITY;
        for (b1, b2) in [(bq[0], bq[1]), (bq[1], bq[0])] {
            for (c1, c2) in [(cq[0], cq[1]), (cq[1], cq[0])] {
                let x = crate::projective::cr(&b1, &b2, &a, &c);
                let y = crate::projective::cr(&c1, &c2, &a, &b);
                best = best.min(rel_diff(x, y));
            }
        }
        best
    }

    pub fn is_isosceles_at(&self, i: usize) -> bool {
        self.isosceles_residual(i) <= tol()
    }

    /// True when within ten times the tolerance of being isosceles somewhere.
    pub fn is_marginal(&self) -> bool {
        (0..3).any(|i| self.isosceles_residual(i) <= 10.0 * tol())
    }

    /// Concurrency residual of `a, a'` and the magic side `ã`.
    pub fn isosceles_concurrency(&self, i: usize) -> f64 {
        concurrency(&self.side[i], &self.pside[i], &self.magic_side[i])
    }

    /// Residuals of the midpoint quadrilateral: the four collinear triples
    /// `D_a E F`, `D E_b F`, `D E F_c`, `D_a E_b F_c` and the diagonal lines.
    pub fn midpoint_quadrilateral_residual(&self) -> f64 {
        midpoint_quadrilateral_residual(&self.mids, &self.choice, &self.side)
    }
}

/// Assignment indices for a triple of midpoint pairs: non-collinear and
/// avoiding the points `A_0, B_0, C_0`. First valid in lexicographic order.
pub fn choose(mids: &[Pair; 3], a0: &[HomPoint; 3]) -> Option<[usize; 3]> {
    for bits in 0..8usize {
        let ch = [bits >> 2 & 1, bits >> 1 & 1, bits & 1];
        let p = [0, 1, 2].map(|i| pick(&mids[i], ch[i]));
        if collinearity(&p[0], &p[1], &p[2]) <= COLLINEAR_EPS {
            continue;
        }
        if (0..3).any(|i| p[i].same_as(&a0[i], COLLINEAR_EPS)) {
            continue;
        }
        return Some(ch);
    }
    None
}

/// All non-collinear assignments of a triple of midpoint pairs.
pub fn noncollinear_assignments(mids: &[Pair; 3]) -> Vec<[usize; 3]> {
    (0..8usize)
        .map(|bits| [bits >> 2 & 1, bits >> 1 & 1, bits & 1])
        .filter(|ch| {
            let p = [0, 1, 2].map(|i| pick(&mids[i], ch[i]));
            collinearity(&p[0], &p[1], &p[2]) > COLLINEAR_EPS
        })
        .collect()
}

/// Residual of the midpoint quadrilateral theorem for midpoint pairs on the
/// sides of a triangle.
pub fn midpoint_quadrilateral_residual(mids: &[Pair; 3], choice: &[usize; 3], side: &[HomLine; 3]) -> f64 {
    let d = [0, 1, 2].map(|i| pick(&mids[i], choice[i]));
    let o = [0, 1, 2].map(|i| other(&mids[i], choice[i]));
    let triples = [[o[0], d[1], d[2]], [d[0], o[1], d[2]], [d[0], d[1], o[2]], [o[0], o[1], o[2]]];
    let mut r = triples.iter().map(|t| collinearity(&t[0], &t[1], &t[2])).fold(0.0, f64::max);
    for i in 0..3 {
        r = r.max(incidence(&d[i], &side[i])).max(incidence(&o[i], &side[i]));
    }
    r
}

/// A center with the midpoint assignment defining it and its concurrency residual.
#[derive(Clone, Copy, Debug)]
pub struct Center {
    pub assignment: [usize; 3],
    pub point: HomPoint,
    pub residual: f64,
}

fn center_of(lines: [HomLine; 3], assignment: [usize; 3]) -> Center {
    Center { assignment, point: meet(&lines[0], &lines[1]), residual: concurrency(&lines[0], &lines[1], &lines[2]) }
}

/// Pseudocenters of a triangle given by vertices, sides, and the poles of
/// its sides.
#[derive(Clone, Copy, Debug)]
pub struct Pseudo {
    /// Vertices of the double triangle.
    pub double_vertex: [HomPoint; 3],
    /// Pseudomedians `A A''`.
    pub median: [HomLine; 3],
    /// Pseudobarycenter.
    pub n: HomPoint,
    /// Pseudomidpoints `N_A, N_B, N_C`.
    pub mid: [HomPoint; 3],
    /// Pseudobisectors `A' N_A`.
    pub bisector: [HomLine; 3],
    /// Pseudocircumcenter.
    pub p: HomPoint,
}

fn pseudo(vertex: &[HomPoint; 3], side: &[HomLine; 3], pvertex: &[HomPoint; 3], a0: &[HomPoint; 3]) -> Pseudo {
    let dside = [0, 1, 2].map(|i| join(&a0[i], &vertex[i]));
    let double_vertex = [0, 1, 2].map(|i| meet(&dside[nx(i)], &dside[pv(i)]));
    let median = [0, 1, 2].map(|i| join(&vertex[i], &double_vertex[i]));
    let n = meet(&median[0], &median[1]);
    let mid = [0, 1, 2].map(|i| meet(&median[i], &side[i]));
    let bisector = [0, 1, 2].map(|i| join(&pvertex[i], &mid[i]));
    let p = meet(&bisector[0], &bisector[1]);
    Pseudo { double_vertex, median, n, mid, bisector, p }
}

/// Every center of the configuration.
#[derive(Clone, Debug)]
pub struct CentersReport {
    pub orthocenter: HomPoint,
    pub barycenters: Vec<Center>,
    pub circumcenters: Vec<Center>,
    pub incenters: Vec<Center>,
    pub pseudo_spieker: Center,
    pub pseudo: Pseudo,
    pub ppseudo: Pseudo,
    pub euler_line: HomLine,
    pub orthic_axis: HomLine,
}

impl TriangleConfig {
    /// Orthocenter concurrency residual.
    pub fn altitude_residual(&self) -> f64 {
        concurrency(&self.altitude[0], &self.altitude[1], &self.altitude[2])
    }

    /// Barycenters, circumcenters and incenters for every non-collinear
    /// midpoint assignment.
    pub fn classical_centers(&self) -> (Vec<Center>, Vec<Center>, Vec<Center>) {
        let v = &self.vertex;
        let mut bary = Vec::new();
        let mut circ = Vec::new();
        for ch in noncollinear_assignments(&self.mids) {
            let d = [0, 1, 2].map(|i| pick(&self.mids[i], ch[i]));
            bary.push(center_of([0, 1, 2].map(|i| join(&v[i], &d[i])), ch));
            circ.push(center_of([0, 1, 2].map(|i| join(&self.pvertex[i], &d[i])), ch));
        }
        let mut inc = Vec::new();
        for ch in noncollinear_assignments(&self.pmids) {
            let d = [0, 1, 2].map(|i| pick(&self.pmids[i], ch[i]));
            inc.push(center_of([0, 1, 2].map(|i| join(&v[i], &d[i])), ch));
        }
        (bary, circ, inc)
    }

    /// Meet of `DD', EE', FF'` for the chosen midpoints.
    pub fn pseudo_spieker(&self) -> Center {
        self.spieker_for(self.choice, self.pchoice)
    }

    pub fn spieker_for(&self, ch: [usize; 3], pch: [usize; 3]) -> Center {
        let d = [0, 1, 2].map(|i| pick(&self.mids[i], ch[i]));
        let dp = [0, 1, 2].map(|i| pick(&self.pmids[i], pch[i]));
        center_of([0, 1, 2].map(|i| join(&d[i], &dp[i])), ch)
    }

    /// Pseudocenters of the triangle.
    pub fn pseudo(&self) -> Pseudo {
        pseudo(&self.vertex, &self.side, &self.pvertex, &self.a0)
    }

    /// Pseudocenters of the polar triangle.
    pub fn ppseudo(&self) -> Pseudo {
        pseudo(&self.pvertex, &self.pside, &self.vertex, &self.a0)
    }

    /// Line through `H, N, N', P, P'`, spanned by its two most separated points.
    pub fn euler_line(&self) -> HomLine {
        let (x, y) = (self.pseudo(), self.ppseudo());
        best_line(&[self.h, x.n, y.n, x.p, y.p])
    }

    /// Points `a·H_B H_C`, `b·H_C H_A`, `c·H_A H_B` of the orthic axis.
    pub fn orthic_points(&self) -> [HomPoint; 3] {
        [0, 1, 2].map(|i| meet(&self.side[i], &join(&self.foot[nx(i)], &self.foot[pv(i)])))
    }

    pub fn orthic_axis(&self) -> HomLine {
        best_line(&self.orthic_points())
    }

    pub fn centers(&self) -> CentersReport {
        let (barycenters, circumcenters, incenters) = self.classical_centers();
        CentersReport {
            orthocenter: self.h,
            barycenters,
            circumcenters,
            incenters,
            pseudo_spieker: self.pseudo_spieker(),
            pseudo: self.pseudo(),
            ppseudo: self.ppseudo(),
            euler_line: self.euler_line(),
            orthic_axis: self.orthic_axis(),
        }
    }
}

/// Line through the two most separated points of a set.
pub fn best_line(points: &[HomPoint]) -> HomLine {
    let mut best = (0, 1);
    let mut s = -1.0;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let t = points[i].separation(&points[j]);
            if t > s {
                s = t;
                best = (i, j);
            }
        }
    }
    join(&points[best.0], &points[best.1])
}

/// Largest incidence residual of points against a line.
pub fn max_incidence(points: &[HomPoint], l: &HomLine) -> f64 {
    points.iter().map(|p| incidence(p, l)).fold(0.0, f64::max)
}

/// The nine-point conic and its named points.
#[derive(Clone, Debug)]
pub struct NinePointConic {
    pub conic: Conic,
    pub feet: [HomPoint; 3],
    /// Pseudomidpoints, as harmonic conjugates of `A_0` with respect to `B, C`.
    pub pseudo_mid: [HomPoint; 3],
    /// Harmonic conjugates of `h_a·h` with respect to `A, H`, built from the
    /// R-point quadrangles.
    pub l: [HomPoint; 3],
    /// Opposite-side meets of the hexagon `H_A N_B H_C N_A H_B N_C`.
    pub pascal_points: [HomPoint; 3],
    pub euler_line: HomLine,
}

impl NinePointConic {
    pub fn points(&self) -> [HomPoint; 9] {
        [
            self.feet[0],
            self.feet[1],
            self.feet[2],
            self.pseudo_mid[0],
            self.pseudo_mid[1],
            self.pseudo_mid[2],
            self.l[0],
            self.l[1],
            self.l[2],
        ]
    }

    /// Residual of the points not used to fit a conic through the first five.
    pub fn fit_residual(&self) -> Result<f64> {
        let pts = self.points();
        let five: [HomPoint; 5] = [pts[0], pts[1], pts[2], pts[3], pts[4]];
        let c = conic::conic_through_five(&five)?;
        Ok(conic::max_residual(&c, &pts[5..]))
    }

    pub fn pascal_residual(&self) -> f64 {
        max_incidence(&self.pascal_points, &self.euler_line)
    }
}

impl TriangleConfig {
    /// The nine-point conic: the eleven-point conic of `{A, B, C, H}` and `h`.
    pub fn nine_point_conic(&self) -> Result<NinePointConic> {
        let v = &self.vertex;
        let pseudo_mid = [0, 1, 2].map(|i| harmonic_unchecked(&v[nx(i)], &v[pv(i)], &self.a0[i]));
        let r = [0, 1, 2].map(|i| join(&self.a0[i], &self.h));
        let l = [0, 1, 2].map(|k| {
            let (i, j) = (nx(k), pv(k));
            let rij = meet(&r[i], &self.side[j]);
            let rji = meet(&r[j], &self.side[i]);
            meet(&join(&rij, &rji), &self.altitude[k])
        });
        let f = self.foot;
        let n = pseudo_mid;
        let hex = [f[0], n[1], f[2], n[0], f[1], n[2]];
        let pascal_points = [0, 1, 2].map(|k| {
            let s1 = join(&hex[k], &hex[k + 1]);
            let s2 = join(&hex[k + 3], &hex[(k + 4) % 6]);
            meet(&s1, &s2)
        });
        let mut all = f.to_vec();
        all.extend(n);
        all.extend(l);
        let conic = conic::fit_conic(&all)?;
        Ok(NinePointConic { conic, feet: f, pseudo_mid, l, pascal_points, euler_line: self.euler_line() })
    }
}

/// Residuals of the three experimental claims about `e` and the nine-point conic.
#[derive(Clone, Copy, Debug, Default)]
pub struct ConjectureReport {
    /// Midpoints of `HP` and the pole of `e` self-polar for both conics.
    pub self_polar: f64,
    /// Reflection in `e` preserves the nine-point conic.
    pub symmetry_axis: f64,
    /// A midpoint of `HP` is a center of the nine-point conic and the
    /// perpendicular to `e` through it is an axis. `None` when the conic is not
    /// an ellipse of the plane.
    pub center_axis: Option<f64>,
}

impl TriangleConfig {
    pub fn experimental_conjectures(&self) -> Result<ConjectureReport> {
        let np = self.nine_point_conic()?;
        let gamma = np.conic;
        let phi = self.model.absolute;
        let e = np.euler_line;
        let pole_e = self.model.pole(&e);
        let p = self.pseudo().p;
        let (m1, m2) = self.model.midpoints(&self.h, &p)?;
        let tri = [m1, m2, pole_e];
        let conj = |c: &Conic, x: &HomPoint, y: &HomPoint| {
            c.bilinear(x.coords(), y.coords()).norm()
                / (c.matrix().norm() * crate::projective::norm(x.coords()) * crate::projective::norm(y.coords()))
        };
        let mut self_polar: f64 = 0.0;
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            self_polar = self_polar.max(conj(&phi, &tri[i], &tri[j])).max(conj(&gamma, &tri[i], &tri[j]));
        }
        let pts = np.points();
        let refl = conic::harmonic_homology(&pole_e, &e);
        let symmetry_axis = pts.iter().map(|x| gamma.residual(&conic::apply(&refl, x))).fold(0.0, f64::max);
        let ellipse = match self.model.kind {
            crate::cayley_klein::Kind::Elliptic => true,
            crate::cayley_klein::Kind::Hyperbolic => {
                // No real point of the absolute lies on the conic.
                let samples = gamma_absolute_meets_real(&gamma, &phi);
                !samples
            }
        };
        let center_axis = if ellipse {
            let score = |m: &HomPoint| {
                let sym = self.model.symmetry_matrix(m);
                let perp = self.model.conj_line(&e, m);
                let axis = conic::harmonic_homology(&self.model.pole(&perp), &perp);
                pts.iter().map(|x| gamma.residual(&conic::apply(&sym, x)).max(gamma.residual(&conic::apply(&axis, x)))).fold(0.0, f64::max)
            };
            Some(score(&m1).min(score(&m2)))
        } else {
            None
        };
        Ok(ConjectureReport { self_polar, symmetry_axis, center_axis })
    }
}

/// Whether a conic meets the real absolute conic in a real point, by sampling
/// the absolute.
fn gamma_absolute_meets_real(gamma: &Conic, phi: &Conic) -> bool {
    let n = 720;
    let base = HomPoint::affine(1.0, 0.0);
    let pts = if phi.contains(&base, 1e-12) { phi.points_from(&base, n) } else { return false };
    let vals: Vec<f64> = pts.iter().map(|p| gamma.value(p).re * p.coords()[2].re.signum()).collect();
    vals.windows(2).any(|w| w[0].signum() != w[1].signum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_klein::Model;

    fn hyp(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> TriangleConfig {
        TriangleConfig::new(Model::hyperbolic(), HomPoint::affine(a.0, a.1), HomPoint::affine(b.0, b.1), HomPoint::affine(c.0, c.1))
            .unwrap()
    }

    #[test]
    fn notation() {
        let t = hyp((0.1, 0.5), (-0.4, -0.2), (0.5, -0.3));
        // A_b lies on b and on a'.
        assert!(incidence(&t.conj[0][1], &t.side[1]) < 1e-14);
        assert!(incidence(&t.conj[0][1], &t.pside[0]) < 1e-14);
        // a_B passes through B and A'.
        assert!(incidence(&t.vertex[1], &t.conj_line[0][1]) < 1e-14);
        assert!(t.model.is_perpendicular(&t.conj_line[0][1], &t.side[0]));
        // Magic vertex Ã is collinear with A and A'.
        assert!(collinearity(&t.magic_vertex[0], &t.vertex[0], &t.pvertex[0]) < 1e-12);
        // A_1 is the pole of the magic side.
        assert!(t.model.pole(&t.magic_side[0]).same_as(&t.a1[0], 1e-12));
    }

    #[test]
    fn altitudes_concur() {
        let t = hyp((0.1, 0.5), (-0.4, -0.2), (0.5, -0.3));
        assert!(t.altitude_residual() < 1e-12);
        let e = TriangleConfig::new(
            Model::elliptic(),
            HomPoint::new(1.0, 0.2, 0.3),
            HomPoint::new(-0.3, 1.0, 0.5),
            HomPoint::new(0.2, -0.4, 1.0),
        )
        .unwrap();
        assert!(e.altitude_residual() < 1e-12);
    }

    #[test]
    fn vertex_on_absolute_rejected() {
        let r =
            TriangleConfig::new(Model::hyperbolic(), HomPoint::affine(1.0, 0.0), HomPoint::affine(0.0, 0.2), HomPoint::affine(-0.3, -0.1));
        assert!(matches!(r, Err(GeomError::GeneralPositionViolation(_))));
    }

    #[test]
    fn symmetric_triangle() {
        // Symmetric about the x-axis with A on the axis.
        let t = hyp((0.6, 0.0), (-0.3, 0.4), (-0.3, -0.4));
        assert!(t.is_isosceles_at(0));
        assert!(!t.is_isosceles_at(1));
        assert!(t.isosceles_concurrency(0) < 1e-12);
        let x_axis = HomLine::new(0.0, 1.0, 0.0);
        let c = t.centers();
        assert!(incidence(&c.pseudo.n, &x_axis) < 1e-12);
        assert!(c.euler_line.same_as(&x_axis, 1e-12));
        assert!(c.barycenters.iter().any(|b| incidence(&b.point, &x_axis) < 1e-12));
    }

    #[test]
    fn equilateral_triangle() {
        let r = 0.5;
        let p = |k: f64| {
            let t = 2.0 * std::f64::consts::PI * k / 3.0;
            (r * t.cos(), r * t.sin())
        };
        let t = hyp(p(0.0), p(1.0), p(2.0));
        assert!((0..3).all(|i| t.is_isosceles_at(i)));
        let d = t.def();
        assert!(collinearity(&d[0], &d[1], &d[2]) > COLLINEAR_EPS);
        assert!((0..3).all(|i| !d[i].same_as(&t.a0[i], 1e-9)));
    }

    #[test]
    fn generic_centers() {
        let t = hyp((0.1, 0.5), (-0.4, -0.2), (0.5, -0.3));
        assert!(t.midpoint_quadrilateral_residual() < 1e-12);
        let c = t.centers();
        assert_eq!(c.barycenters.len(), 4);
        assert_eq!(c.incenters.len(), 4);
        for x in c.barycenters.iter().chain(&c.circumcenters).chain(&c.incenters) {
            assert!(x.residual < 1e-12);
        }
        assert!(c.pseudo_spieker.residual < 1e-12);
        let e = c.euler_line;
        assert!(max_incidence(&[c.orthocenter, c.pseudo.n, c.ppseudo.n, c.pseudo.p, c.ppseudo.p], &e) < 1e-12);
        assert!(t.model.pole(&c.orthic_axis).same_as(&c.ppseudo.n, 1e-10));
        // A A_1 passes through P.
        assert!(incidence(&c.pseudo.p, &join(&t.vertex[0], &t.a1[0])) < 1e-12);
        assert!(incidence(&c.ppseudo.p, &join(&t.pvertex[0], &t.a1[0])) < 1e-12);
        // N_A is the harmonic conjugate of A_0 with respect to B, C.
        let na = harmonic_unchecked(&t.vertex[1], &t.vertex[2], &t.a0[0]);
        assert!(na.same_as(&c.pseudo.mid[0], 1e-12));
    }

    #[test]
    fn nine_point_conic_generic() {
        let t = hyp((0.1, 0.5), (-0.4, -0.2), (0.5, -0.3));
        let np = t.nine_point_conic().unwrap();
        assert!(np.fit_residual().unwrap() < 1e-10);
        assert!(np.pascal_residual() < 1e-12);
        // L_A is the harmonic conjugate of h_a·h with respect to A, H.
        let q = meet(&t.altitude[0], &t.h_line);
        assert!(harmonic_unchecked(&t.vertex[0], &t.h, &q).same_as(&np.l[0], 1e-12));
    }
}

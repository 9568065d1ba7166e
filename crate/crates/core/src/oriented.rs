//! Magic midpoints, coherent orientation of a triangle and its polar, and the
//! unsquared projective laws of sines and cosines with their geometric
//! readings.

use crate::cayley_klein::{cc_of, ss_of, Kind};
use crate::error::{GeomError, Result};
use crate::measure;
use crate::projective::{collinearity, cr, incidence, join_unchecked as join, meet_unchecked as meet, HomPoint};
use crate::scalar::{rel_diff, Scalar, I, ONE};
use crate::triangle::{nx, other, pick, pv, Pair, TriangleConfig, COLLINEAR_EPS};
use crate::trig::{classify, GeneralizedTriangleKind, CLASSIFY_EPS};

/// Distance between two unordered pairs of points.
pub fn pair_distance(p: &Pair, q: &Pair) -> f64 {
    let d1 = p.0.separation(&q.0).max(p.1.separation(&q.1));
    let d2 = p.0.separation(&q.1).max(p.1.separation(&q.0));
    d1.min(d2)
}

/// The two diagonal points of the quadrangle `{P, P₂, Q, Q₂}` off the
/// meet of the lines `PP₂` and `QQ₂`.
pub fn cross_pair(p: &Pair, q: &Pair) -> Pair {
    (meet(&join(&p.0, &q.0), &join(&p.1, &q.1)), meet(&join(&p.0, &q.1), &join(&p.1, &q.0)))
}

/// Residuals of the characterizations of the magic midpoints at each vertex.
#[derive(Clone, Copy, Debug, Default)]
pub struct MagicReport {
    /// Diagonal points of the complementary midpoints of the adjacent sides.
    pub item1: f64,
    /// Same for the polar triangle.
    pub item2: f64,
    /// Midpoints of the opposite side of the magic triangle.
    pub item3: f64,
    /// Diagonal points of the midpoints of the side and its polar side, or
    /// the isosceles degeneration.
    pub item4: f64,
    /// `D, D_a` harmonic with `a·HI, a·H_bI_c`.
    pub j_lemma: f64,
    /// `(GG_aDD_a) = −1`.
    pub g_lemma: f64,
    pub isosceles: [bool; 3],
}

impl MagicReport {
    pub fn max(&self) -> f64 {
        [self.item1, self.item2, self.item3, self.item4, self.j_lemma, self.g_lemma].into_iter().fold(0.0, f64::max)
    }
}

pub fn magic_triangle(cfg: &TriangleConfig) -> MagicReport {
    let mut r = MagicReport::default();
    for i in 0..3 {
        let (j, k) = (nx(i), pv(i));
        let magic = cfg.magic_mids[i];
        r.item1 = r.item1.max(pair_distance(&magic, &cross_pair(&cfg.comps[j], &cfg.comps[k])));
        r.item2 = r.item2.max(pair_distance(&magic, &cross_pair(&cfg.pcomps[j], &cfg.pcomps[k])));
        let (bt, ct) = (cfg.magic_vertex[j], cfg.magic_vertex[k]);
        let m3 = cfg.model.midpoints_on(&join(&bt, &ct), &bt, &ct);
        r.item3 = r.item3.max(pair_distance(&magic, &m3));
        let iso = cfg.is_isosceles_at(i);
        r.isosceles[i] = iso;
        let (d, dp) = (cfg.mids[i], cfg.pmids[i]);
        let item4 = if !iso {
            pair_distance(&magic, &cross_pair(&d, &dp))
        } else {
            let a0 = cfg.a0[i];
            let mut best = f64::INFINITY;
            for (on, off) in [(magic.0, magic.1), (magic.1, magic.0)] {
                let c = (0..4).map(|b| collinearity(&off, &pick(&d, b >> 1), &pick(&dp, b & 1))).fold(f64::INFINITY, f64::min);
                best = best.min(on.separation(&a0).max(c));
            }
            best
        };
        r.item4 = r.item4.max(item4);
        let (h, ii) = (cfg.comps[j], cfg.comps[k]);
        let j = [(ii.0, ii.1), (ii.1, ii.0)]
            .iter()
            .map(|(i0, i1)| {
                let j1 = meet(&cfg.side[i], &join(&h.0, i0));
                let j2 = meet(&cfg.side[i], &join(&h.1, i1));
                if j1.separation(&j2) <= COLLINEAR_EPS {
                    f64::INFINITY
                } else {
                    (cr(&j1, &j2, &d.0, &d.1) + ONE).norm()
                }
            })
            .fold(f64::INFINITY, f64::min);
        r.j_lemma = r.j_lemma.max(j);
        let g = cfg.comps[i];
        r.g_lemma = r.g_lemma.max((cr(&g.0, &g.1, &d.0, &d.1) + ONE).norm());
    }
    r
}

/// Indices of the preferred points of every pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub mid: [usize; 3],
    pub pmid: [usize; 3],
    pub magic: [usize; 3],
    pub comp: [usize; 3],
    pub pcomp: [usize; 3],
}

fn bits3(b: usize) -> [usize; 3] {
    [b >> 2 & 1, b >> 1 & 1, b & 1]
}

fn admissible(pairs: &[Pair; 3], a0: &[HomPoint; 3], ch: &[usize; 3]) -> bool {
    let p = [0, 1, 2].map(|i| pick(&pairs[i], ch[i]));
    collinearity(&p[0], &p[1], &p[2]) > COLLINEAR_EPS && (0..3).all(|i| !p[i].same_as(&a0[i], COLLINEAR_EPS))
}

/// Every label assignment satisfying the definition of a coherently oriented
/// triangle, in lexicographic order of midpoints, polar midpoints, magic
/// midpoints, then complementary midpoints.
pub fn coherent_orientations(cfg: &TriangleConfig) -> Vec<Orientation> {
    let mut out = Vec::new();
    for mb in 0..8 {
        let mid = bits3(mb);
        if !admissible(&cfg.mids, &cfg.a0, &mid) {
            continue;
        }
        let d = [0, 1, 2].map(|i| pick(&cfg.mids[i], mid[i]));
        for pb in 0..8 {
            let pmid = bits3(pb);
            if !admissible(&cfg.pmids, &cfg.a0, &pmid) {
                continue;
            }
            let dp = [0, 1, 2].map(|i| pick(&cfg.pmids[i], pmid[i]));
            let ddp = [0, 1, 2].map(|i| join(&d[i], &dp[i]));
            for gb in 0..8 {
                let magic = bits3(gb);
                let m = [0, 1, 2].map(|i| pick(&cfg.magic_mids[i], magic[i]));
                if collinearity(&m[0], &m[1], &m[2]) <= COLLINEAR_EPS {
                    continue;
                }
                if (0..3).any(|i| incidence(&m[i], &ddp[i]) > CLASSIFY_EPS) {
                    continue;
                }
                for cb in 0..64 {
                    let comp = bits3(cb >> 3);
                    let pcomp = bits3(cb & 7);
                    let g = [0, 1, 2].map(|i| pick(&cfg.comps[i], comp[i]));
                    let gp = [0, 1, 2].map(|i| pick(&cfg.pcomps[i], pcomp[i]));
                    let ok = (0..3).all(|i| {
                        incidence(&m[i], &join(&g[nx(i)], &g[pv(i)])) <= CLASSIFY_EPS
                            && incidence(&m[i], &join(&gp[nx(i)], &gp[pv(i)])) <= CLASSIFY_EPS
                    });
                    if ok {
                        out.push(Orientation { mid, pmid, magic, comp, pcomp });
                    }
                }
            }
        }
    }
    out
}

/// A triangle with a coherent orientation.
#[derive(Clone, Debug)]
pub struct OrientedTriangle {
    pub cfg: TriangleConfig,
    pub orientation: Orientation,
}

/// First coherent orientation in search order.
pub fn coherent_orientation(cfg: &TriangleConfig) -> Result<OrientedTriangle> {
    if cfg.conjugate_side_pairs() > 0 {
        return Err(GeomError::GeneralPositionViolation("the triangle is right-angled".into()));
    }
    let o = coherent_orientations(cfg).into_iter().next().ok_or(GeomError::NoCoherentAssignment)?;
    Ok(OrientedTriangle { cfg: cfg.clone(), orientation: o })
}

impl OrientedTriangle {
    pub fn new(cfg: TriangleConfig, orientation: Orientation) -> Self {
        OrientedTriangle { cfg, orientation }
    }

    pub fn d(&self, i: usize) -> HomPoint {
        pick(&self.cfg.mids[i], self.orientation.mid[i])
    }

    pub fn dp(&self, i: usize) -> HomPoint {
        pick(&self.cfg.pmids[i], self.orientation.pmid[i])
    }

    pub fn g(&self, i: usize) -> HomPoint {
        pick(&self.cfg.comps[i], self.orientation.comp[i])
    }

    pub fn gp(&self, i: usize) -> HomPoint {
        pick(&self.cfg.pcomps[i], self.orientation.pcomp[i])
    }

    pub fn magic(&self, i: usize) -> HomPoint {
        pick(&self.cfg.magic_mids[i], self.orientation.magic[i])
    }

    /// `cc` of side `i` of the triangle: `cc(BC) = (B C C_a D)`.
    pub fn cc(&self, i: usize) -> Scalar {
        let t = &self.cfg;
        cc_of(&t.vertex[nx(i)], &t.vertex[pv(i)], &t.conj[pv(i)][i], &self.d(i))
    }

    /// `ss(BC) = (B C_a C G)`.
    pub fn ss(&self, i: usize) -> Scalar {
        let t = &self.cfg;
        ss_of(&t.vertex[nx(i)], &t.vertex[pv(i)], &t.conj[pv(i)][i], &self.g(i))
    }

    /// `cc(B'C') = (B' C' A_c D')`.
    pub fn pcc(&self, i: usize) -> Scalar {
        let t = &self.cfg;
        cc_of(&t.pvertex[nx(i)], &t.pvertex[pv(i)], &t.conj[i][pv(i)], &self.dp(i))
    }

    /// `ss(B'C') = (B' A_c C' G')`.
    pub fn pss(&self, i: usize) -> Scalar {
        let t = &self.cfg;
        ss_of(&t.pvertex[nx(i)], &t.pvertex[pv(i)], &t.conj[i][pv(i)], &self.gp(i))
    }

    /// `[cc, ss, cc', ss']` for each side.
    pub fn values(&self) -> [[Scalar; 4]; 3] {
        [0, 1, 2].map(|i| [self.cc(i), self.ss(i), self.pcc(i), self.pss(i)])
    }

    /// Residuals of `cc(BC) = −ss(AB)ss(CA)cc(B'C') − cc(AB)cc(CA)` for each side.
    pub fn law_of_cosines(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| {
            let (j, k) = (nx(i), pv(i));
            rel_diff(self.cc(i), -self.ss(k) * self.ss(j) * self.pcc(i) - self.cc(k) * self.cc(j))
        })
    }

    /// Residuals of the dual law with the roles of the triangles exchanged.
    pub fn dual_law_of_cosines(&self) -> [f64; 3] {
        [0, 1, 2].map(|i| {
            let (j, k) = (nx(i), pv(i));
            rel_diff(self.pcc(i), -self.pss(k) * self.pss(j) * self.cc(i) - self.pcc(k) * self.pcc(j))
        })
    }

    /// Ratios `ss/ss'` per side and their largest pairwise deviation.
    pub fn law_of_sines(&self) -> ([Scalar; 3], f64) {
        let q = [0, 1, 2].map(|i| self.ss(i) / self.pss(i));
        (q, (0..3).map(|i| rel_diff(q[i], q[nx(i)])).fold(0.0, f64::max))
    }

    /// Residual of `cc² = C` and `ss² = S` on all six sides.
    pub fn square_residual(&self) -> Result<f64> {
        let r = crate::trig::side_ratios(&self.cfg)?;
        let mut e: f64 = 0.0;
        for i in 0..3 {
            e = e.max(rel_diff(self.cc(i) * self.cc(i), r.side[i].c));
            e = e.max(rel_diff(self.ss(i) * self.ss(i), r.side[i].s));
            e = e.max(rel_diff(self.pcc(i) * self.pcc(i), r.pside[i].c));
            e = e.max(rel_diff(self.pss(i) * self.pss(i), r.pside[i].s));
        }
        Ok(e)
    }

    /// `DD'` is the Pappus line of the hexagon `E I H F H_b I_c`.
    pub fn pappus_residual(&self) -> f64 {
        let t = &self.cfg;
        (0..3)
            .map(|i| {
                let (j, k) = (nx(i), pv(i));
                let (e, f) = (self.d(j), self.d(k));
                let (h, hb) = (self.g(j), other(&t.comps[j], self.orientation.comp[j]));
                let (ii, ic) = (self.g(k), other(&t.comps[k], self.orientation.comp[k]));
                let hex = [e, ii, h, f, hb, ic];
                let line = join(&self.d(i), &self.dp(i));
                (0..3)
                    .map(|s| {
                        let p = meet(&join(&hex[s], &hex[s + 1]), &join(&hex[s + 3], &hex[(s + 4) % 6]));
                        incidence(&p, &line)
                    })
                    .fold(0.0, f64::max)
            })
            .fold(0.0, f64::max)
    }
}

/// Geometric reading of the unsquared laws on a generalized triangle.
#[derive(Clone, Debug)]
pub struct TranslationReport {
    pub kind: GeneralizedTriangleKind,
    /// For triangles: the smallest deviation, over coherent orientations, of
    /// `cc, ss, cc', ss'` from their predicted trigonometric values.
    pub value_residual: Option<f64>,
    /// Residuals of the measured non-euclidean laws.
    pub laws: Vec<(String, f64)>,
    /// Largest residual of the projective laws over all coherent orientations.
    pub projective: f64,
    pub orientations: usize,
}

fn rel(x: f64, y: f64) -> f64 {
    (x - y).abs() / 1f64.max(x.abs()).max(y.abs())
}

fn value_gap(ot: &OrientedTriangle, pred: &[[Scalar; 4]; 3]) -> f64 {
    let v = ot.values();
    let mut e: f64 = 0.0;
    for i in 0..3 {
        for k in 0..4 {
            e = e.max(rel_diff(v[i][k], pred[i][k]));
        }
    }
    e
}

/// Measures the figure, checks the geometric laws and matches the projective
/// values against their predicted geometric readings.
pub fn translate(cfg: &TriangleConfig) -> Result<TranslationReport> {
    use GeneralizedTriangleKind::*;
    let kind = classify(cfg);
    let all = coherent_orientations(cfg);
    if all.is_empty() {
        return Err(GeomError::NoCoherentAssignment);
    }
    let oriented: Vec<OrientedTriangle> = all.iter().map(|o| OrientedTriangle::new(cfg.clone(), *o)).collect();
    let projective = oriented
        .iter()
        .map(|ot| {
            let l = ot.law_of_cosines().into_iter().chain(ot.dual_law_of_cosines()).fold(0.0, f64::max);
            l.max(ot.law_of_sines().1)
        })
        .fold(0.0, f64::max);
    let best = |preds: &[[[Scalar; 4]; 3]]| {
        oriented.iter().map(|ot| preds.iter().map(|p| value_gap(ot, p)).fold(f64::INFINITY, f64::min)).fold(f64::INFINITY, f64::min)
    };
    let v = &cfg.vertex;
    let mut laws = Vec::new();
    let value_residual = match kind {
        EllipticTriangle => {
            let (s, a) = measure::sphere_triangle(v.map(|p| measure::sphere(&p)));
            for i in 0..3 {
                let (j, k) = (nx(i), pv(i));
                laws.push((
                    "cos a = sin c sin b cos α + cos c cos b".to_string(),
                    rel(s[i].cos(), s[k].sin() * s[j].sin() * a[i].cos() + s[k].cos() * s[j].cos()),
                ));
            }
            let q = [0, 1, 2].map(|i| s[i].sin() / a[i].sin());
            laws.push(("sin a / sin α".to_string(), rel(q[0], q[1]).max(rel(q[1], q[2]))));
            let pred = [0, 1, 2].map(|i| [-s[i].cos(), -s[i].sin(), a[i].cos(), -a[i].sin()].map(|x| Scalar::new(x, 0.0)));
            Some(best(&[pred]))
        }
        HyperbolicTriangle => {
            let s = [0, 1, 2].map(|i| measure::klein_distance(&v[nx(i)], &v[pv(i)]));
            let a = [0, 1, 2].map(|i| measure::klein_angle(&v[i], &v[nx(i)], &v[pv(i)]));
            for i in 0..3 {
                let (j, k) = (nx(i), pv(i));
                laws.push((
                    "cosh a = -sinh c sinh b cos α + cosh c cosh b".to_string(),
                    rel(s[i].cosh(), -s[k].sinh() * s[j].sinh() * a[i].cos() + s[k].cosh() * s[j].cosh()),
                ));
            }
            let q = [0, 1, 2].map(|i| s[i].sinh() / a[i].sin());
            laws.push(("sinh a / sin α".to_string(), rel(q[0], q[1]).max(rel(q[1], q[2]))));
            let pred = |sign: f64| {
                [0, 1, 2].map(|i| {
                    [Scalar::new(-s[i].cosh(), 0.0), I * sign * s[i].sinh(), Scalar::new(a[i].cos(), 0.0), Scalar::new(a[i].sin(), 0.0)]
                })
            };
            Some(best(&[pred(1.0), pred(-1.0)]))
        }
        TwoRightAngleQuadrilateral => {
            let k = (0..3).find(|&i| !cfg.model.is_interior(&v[i])).unwrap();
            let (ia, ib) = (nx(k), pv(k));
            let (pa, pb) = (v[ia], v[ib]);
            // Feet of the perpendiculars from the exterior vertex's polar.
            let fa = cfg.conj[k][ia];
            let fb = cfg.conj[k][ib];
            let d = measure::klein_distance;
            let a = d(&pb, &fa);
            let b = d(&pa, &fb);
            let c = d(&pa, &pb);
            let g = d(&fa, &fb);
            let al = measure::klein_angle(&pa, &pb, &fb);
            let be = measure::klein_angle(&pb, &pa, &fa);
            let (sh, ch) = (f64::sinh, f64::cosh);
            laws.push((
                "cos α = sinh γ sin β sinh a − cosh γ cos β".to_string(),
                rel(al.cos(), sh(g) * be.sin() * sh(a) - ch(g) * be.cos()),
            ));
            laws.push(("sinh a = −sinh c cosh b cos α + cosh c sinh b".to_string(), rel(sh(a), -sh(c) * ch(b) * al.cos() + ch(c) * sh(b))));
            laws.push(("cosh c = cosh a cosh b cosh γ − sinh a sinh b".to_string(), rel(ch(c), ch(a) * ch(b) * ch(g) - sh(a) * sh(b))));
            laws.push((
                "cosh γ = sin α sin β cosh c − cos α cos β".to_string(),
                rel(ch(g), al.sin() * be.sin() * ch(c) - al.cos() * be.cos()),
            ));
            None
        }
        RightAngledHexagon => {
            let t = cfg;
            let d = measure::klein_distance;
            // Sides lie on a, b, c; the alternate sides on the polars.
            let s = [0, 1, 2].map(|i| d(&t.conj[nx(i)][i], &t.conj[pv(i)][i]));
            let p = [0, 1, 2].map(|i| d(&t.conj[i][nx(i)], &t.conj[i][pv(i)]));
            let (sh, ch) = (f64::sinh, f64::cosh);
            for i in 0..3 {
                let (j, k) = (nx(i), pv(i));
                laws.push((
                    "cosh a = sinh c sinh b cosh α − cosh c cosh b".to_string(),
                    rel(ch(s[i]), sh(s[k]) * sh(s[j]) * ch(p[i]) - ch(s[k]) * ch(s[j])),
                ));
            }
            let q = [0, 1, 2].map(|i| sh(s[i]) / sh(p[i]));
            laws.push(("sinh a / sinh α".to_string(), rel(q[0], q[1]).max(rel(q[1], q[2]))));
            None
        }
        _ => None,
    };
    if cfg.model.kind == Kind::Elliptic && kind != EllipticTriangle {
        return Err(GeomError::KindMismatch);
    }
    Ok(TranslationReport { kind, value_residual, laws, projective, orientations: all.len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley_klein::Model;

    fn hyp() -> TriangleConfig {
        TriangleConfig::new(Model::hyperbolic(), HomPoint::affine(0.1, 0.5), HomPoint::affine(-0.4, -0.2), HomPoint::affine(0.5, -0.3))
            .unwrap()
    }

    fn ell() -> TriangleConfig {
        TriangleConfig::new(Model::elliptic(), HomPoint::new(1.0, 0.2, 0.3), HomPoint::new(-0.3, 1.0, 0.5), HomPoint::new(0.2, -0.4, 1.0))
            .unwrap()
    }

    #[test]
    fn magic_generic() {
        for t in [hyp(), ell()] {
            let r = magic_triangle(&t);
            assert!(r.max() < 1e-9, "{r:?}");
        }
    }

    #[test]
    fn magic_isosceles() {
        let t =
            TriangleConfig::new(Model::hyperbolic(), HomPoint::affine(0.6, 0.0), HomPoint::affine(-0.3, 0.4), HomPoint::affine(-0.3, -0.4))
                .unwrap();
        let r = magic_triangle(&t);
        assert!(r.isosceles[0]);
        assert!(r.max() < 1e-9, "{r:?}");
    }

    #[test]
    fn orientation_and_laws() {
        for t in [hyp(), ell()] {
            let all = coherent_orientations(&t);
            assert!(!all.is_empty());
            for o in all {
                let ot = OrientedTriangle::new(t.clone(), o);
                for r in ot.law_of_cosines().into_iter().chain(ot.dual_law_of_cosines()) {
                    assert!(r < 1e-9);
                }
                assert!(ot.law_of_sines().1 < 1e-9);
                assert!(ot.square_residual().unwrap() < 1e-9);
                assert!(ot.pappus_residual() < 1e-9);
            }
        }
    }

    #[test]
    fn translations() {
        for t in [hyp(), ell()] {
            let r = translate(&t).unwrap();
            assert!(r.value_residual.unwrap() < 1e-9, "{r:?}");
            for (_, x) in &r.laws {
                assert!(*x < 1e-9);
            }
        }
    }

    fn hyp_at(p: [(f64, f64); 3]) -> TriangleConfig {
        let [a, b, c] = p.map(|(x, y)| HomPoint::affine(x, y));
        TriangleConfig::new(Model::hyperbolic(), a, b, c).unwrap()
    }

    #[test]
    fn quadrilateral_and_hexagon() {
        let q = translate(&hyp_at([(0.1, 0.1), (0.5, -0.2), (1.5, 0.5)])).unwrap();
        assert_eq!(q.kind, GeneralizedTriangleKind::TwoRightAngleQuadrilateral, "{q:?}");
        let h = translate(&hyp_at([(0.7, 1.2), (-1.45, 0.05), (0.72, -1.25)])).unwrap();
        assert_eq!(h.kind, GeneralizedTriangleKind::RightAngledHexagon, "{h:?}");
        for r in [q, h] {
            assert!(r.projective < 1e-9);
            for (name, x) in &r.laws {
                assert!(*x < 1e-9, "{name}: {x}");
            }
        }
    }
}

//! SVG figures in the chart square `[−3.2, 3.2]²`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cayley_klein::{Kind, Model};
use crate::conic::{Conic, ConicClass};
use crate::io::{Scene, SceneError};
use crate::oriented::magic_triangle;
use crate::projective::{join_unchecked as join, meet_unchecked as meet, HomLine, HomPoint};
use crate::triangle::{nx, other, pick, pv, TriangleConfig};
use crate::trig::MenelausConfig;

pub const HALF_WIDTH: f64 = 3.2;
const MARK: f64 = 0.08;

pub const FIGURES: [&str; 5] = ["triangle-polar", "euler-line", "midpoint-quadrilateral", "menelaus", "magic-midpoints"];

#[derive(Debug, Error)]
pub enum FigureError {
    #[error("unknown figure `{0}`")]
    UnknownFigure(String),
    #[error("figure `{0}` needs a real absolute conic")]
    ImaginaryConic(String),
    #[error(transparent)]
    Scene(#[from] SceneError),
    #[error(transparent)]
    Geom(#[from] crate::GeomError),
}

/// Built-in scene: a triangle with interior vertices in the Klein disk and a
/// transversal through `R, S`.
pub fn builtin_scene() -> Scene {
    Scene::new(Model::hyperbolic())
        .with_point("A", HomPoint::affine(0.1, 0.5))
        .with_point("B", HomPoint::affine(-0.4, -0.2))
        .with_point("C", HomPoint::affine(0.5, -0.3))
        .with_point("R", HomPoint::affine(-1.5, 1.0))
        .with_point("S", HomPoint::affine(1.6, 0.4))
}

/// Real affine coordinates, `None` for complex points and points at infinity.
pub fn chart(p: &HomPoint) -> Option<(f64, f64)> {
    if !p.is_real() {
        return None;
    }
    let v = p.real_part();
    if v[2].abs() < 1e-12 * v[0].abs().max(v[1].abs()) {
        return None;
    }
    Some((v[0] / v[2], v[1] / v[2]))
}

fn inside(x: f64, y: f64) -> bool {
    x.abs() <= HALF_WIDTH && y.abs() <= HALF_WIDTH
}

/// Endpoints of a real line clipped to the chart square.
pub fn clip_line(l: &HomLine) -> Option<((f64, f64), (f64, f64))> {
    let [a, b, c] = l.real_part();
    let h = HALF_WIDTH;
    let mut pts: Vec<(f64, f64)> = Vec::new();
    if b.abs() > 1e-15 {
        for x in [-h, h] {
            let y = -(a * x + c) / b;
            if y.abs() <= h {
                pts.push((x, y));
            }
        }
    }
    if a.abs() > 1e-15 {
        for y in [-h, h] {
            let x = -(b * y + c) / a;
            if x.abs() <= h {
                pts.push((x, y));
            }
        }
    }
    if pts.len() < 2 {
        return None;
    }
    let dir = (-b, a);
    let key = |p: &(f64, f64)| p.0 * dir.0 + p.1 * dir.1;
    pts.sort_by(|p, q| key(p).partial_cmp(&key(q)).unwrap());
    Some((pts[0], pts[pts.len() - 1]))
}

/// SVG document under construction.
pub struct Svg {
    body: String,
}

impl Default for Svg {
    fn default() -> Self {
        Self::new()
    }
}

impl Svg {
    pub fn new() -> Self {
        Svg { body: String::new() }
    }

    pub fn comment(&mut self, s: &str) {
        let _ = writeln!(self.body, "<!-- {} -->", s.replace("--", "- -"));
    }

    /// Labeled point; points outside the square become an arrow on its edge.
    pub fn point(&mut self, id: &str, label: &str, p: &HomPoint, class: &str) {
        if !p.is_real() {
            self.comment(&format!("{id} is not real"));
            return;
        }
        let v = p.real_part();
        match chart(p) {
            Some((x, y)) if inside(x, y) => {
                let _ = writeln!(
                    self.body,
                    r#"<circle id="{id}" class="{class}" cx="{x:.6}" cy="{:.6}" r="0.03"/><text x="{:.6}" y="{:.6}">{label}</text>"#,
                    -y,
                    x + 0.05,
                    -y - 0.05
                );
            }
            _ => {
                let (dx, dy) = match chart(p) {
                    Some(xy) => xy,
                    None => (v[0], v[1]),
                };
                let s = HALF_WIDTH / dx.abs().max(dy.abs());
                let (x, y) = (dx * s, dy * s);
                let n = (dx * dx + dy * dy).sqrt();
                let (ux, uy) = (dx / n * 0.12, dy / n * 0.12);
                let _ = writeln!(
                    self.body,
                    r#"<polygon id="{id}" class="offcanvas" points="{:.6},{:.6} {:.6},{:.6} {:.6},{:.6}"/><text x="{:.6}" y="{:.6}">{label}</text>"#,
                    x,
                    -y,
                    x - ux - uy * 0.5,
                    -(y - uy + ux * 0.5),
                    x - ux + uy * 0.5,
                    -(y - uy - ux * 0.5),
                    x - 2.5 * ux,
                    -(y - 2.5 * uy)
                );
            }
        }
    }

    pub fn line(&mut self, l: &HomLine, class: &str) {
        if !l.is_real() {
            self.comment("line is not real");
            return;
        }
        if let Some(((x0, y0), (x1, y1))) = clip_line(l) {
            self.raw_line(x0, y0, x1, y1, class);
        }
    }

    fn raw_line(&mut self, x0: f64, y0: f64, x1: f64, y1: f64, class: &str) {
        let _ = writeln!(self.body, r#"<line class="{class}" x1="{x0:.6}" y1="{:.6}" x2="{x1:.6}" y2="{:.6}"/>"#, -y0, -y1);
    }

    /// Segment between two points, or the whole line when one is off the chart.
    pub fn segment(&mut self, p: &HomPoint, q: &HomPoint, class: &str) {
        match (chart(p), chart(q)) {
            (Some((x0, y0)), Some((x1, y1))) if inside(x0, y0) && inside(x1, y1) => self.raw_line(x0, y0, x1, y1, class),
            _ => self.line(&join(p, q), class),
        }
    }

    /// Small square at the meet of two conjugate lines.
    pub fn right_angle(&mut self, a: &HomLine, b: &HomLine) {
        let Some((x, y)) = chart(&meet(a, b)) else { return };
        if !inside(x, y) {
            return;
        }
        let dir = |l: &HomLine| {
            let [p, q, _] = l.real_part();
            let n = (p * p + q * q).sqrt();
            (-q / n * MARK, p / n * MARK)
        };
        let (u, v) = (dir(a), dir(b));
        let _ = writeln!(
            self.body,
            r#"<polygon class="right-angle" points="{x:.6},{:.6} {:.6},{:.6} {:.6},{:.6} {:.6},{:.6}"/>"#,
            -y,
            x + u.0,
            -(y + u.1),
            x + u.0 + v.0,
            -(y + u.1 + v.1),
            x + v.0,
            -(y + v.1)
        );
    }

    /// A real conic: an ellipse element when bounded, a sampled path otherwise.
    pub fn conic(&mut self, c: &Conic, class: &str) {
        if c.class() != ConicClass::Real {
            self.comment("conic has no real points");
            return;
        }
        let m = c.matrix().map(|x| x.re);
        let (a, b, d) = (m[(0, 0)], m[(0, 1)], m[(1, 1)]);
        let det = a * d - b * b;
        if det.abs() > 1e-12 * (a.abs() + d.abs()).powi(2) && det > 0.0 {
            let (e, f, g) = (m[(0, 2)], m[(1, 2)], m[(2, 2)]);
            let cx = -(d * e - b * f) / det;
            let cy = -(a * f - b * e) / det;
            let k = g + e * cx + f * cy;
            let tr = a + d;
            let disc = ((a - d) * (a - d) / 4.0 + b * b).sqrt();
            let (l1, l2) = (tr / 2.0 + disc, tr / 2.0 - disc);
            let (r1, r2) = ((-k / l1).sqrt(), (-k / l2).sqrt());
            let theta = if b.abs() < 1e-15 && a <= d { 0.0 } else { (l1 - a).atan2(b).to_degrees() };
            let _ = writeln!(
                self.body,
                r#"<ellipse class="{class}" cx="0" cy="0" rx="{r1:.6}" ry="{r2:.6}" transform="translate({cx:.6} {:.6}) rotate({:.6})"/>"#,
                -cy, -theta
            );
            return;
        }
        self.sampled_conic(c, class);
    }

    fn sampled_conic(&mut self, c: &Conic, class: &str) {
        let base = (0..64).find_map(|k| {
            let t = -HALF_WIDTH + 0.1 * k as f64;
            let meet = c.line_meet(&HomLine::new(0.0, 1.0, -t));
            meet.points.into_iter().find(|p| p.is_real() && c.residual(p) < 1e-9)
        });
        let Some(base) = base else {
            self.comment("conic has no real points in the chart");
            return;
        };
        let n = 720;
        let mut path = String::new();
        let mut pen = false;
        for k in 0..=n {
            let t = std::f64::consts::PI * k as f64 / n as f64;
            let r = crate::conic::real_vec(t.cos(), t.sin(), 0.0);
            let p = c.second_point(&base, &r);
            match p.as_ref().and_then(chart) {
                Some((x, y)) if x.abs() <= 3.0 * HALF_WIDTH && y.abs() <= 3.0 * HALF_WIDTH => {
                    let _ = write!(path, "{}{x:.5},{:.5} ", if pen { "L" } else { "M" }, -y);
                    pen = true;
                }
                _ => pen = false,
            }
        }
        let _ = writeln!(self.body, r#"<path class="{class}" d="{}"/>"#, path.trim_end());
    }

    pub fn text(&mut self, x: f64, y: f64, s: &str) {
        let _ = writeln!(self.body, r#"<text x="{x:.6}" y="{:.6}">{s}</text>"#, -y);
    }

    pub fn finish(self, title: &str) -> String {
        let h = HALF_WIDTH;
        format!(
            concat!(
                r#"<?xml version="1.0" encoding="UTF-8"?>"#,
                "\n",
                r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="640" height="640">"#,
                "\n<title>{}</title>\n<defs><clipPath id=\"chart\"><rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\"/></clipPath></defs>\n",
                "<style>line,path,ellipse{{fill:none;stroke-width:0.01;stroke:#444}} .absolute{{stroke:#000;stroke-width:0.015}} ",
                ".polar{{stroke:#c33}} .construction{{stroke:#999;stroke-dasharray:0.04 0.03}} .euler{{stroke:#36c}} ",
                ".diagonal{{stroke:#393;stroke-width:0.02}} circle{{fill:#000}} .offcanvas{{fill:#c60}} ",
                ".right-angle{{fill:none;stroke:#c33;stroke-width:0.008}} text{{font-size:0.12px;font-family:sans-serif}}</style>\n",
                "<g clip-path=\"url(#chart)\">\n{}</g>\n</svg>\n"
            ),
            -h,
            -h,
            2.0 * h,
            2.0 * h,
            title,
            -h,
            -h,
            2.0 * h,
            2.0 * h,
            self.body
        )
    }
}

fn triangle(scene: &Scene) -> Result<TriangleConfig, FigureError> {
    let v = ["A", "B", "C"].map(|n| scene.point(n));
    let [a, b, c] = v;
    Ok(TriangleConfig::new(scene.model, a?, b?, c?)?)
}

fn need_real(name: &str, scene: &Scene) -> Result<(), FigureError> {
    if scene.model.kind == Kind::Elliptic {
        return Err(FigureError::ImaginaryConic(name.to_string()));
    }
    Ok(())
}

const NAMES: [&str; 3] = ["A", "B", "C"];
const PNAMES: [&str; 3] = ["A′", "B′", "C′"];

fn draw_triangle(svg: &mut Svg, cfg: &TriangleConfig, polar: bool) {
    for i in 0..3 {
        svg.segment(&cfg.vertex[nx(i)], &cfg.vertex[pv(i)], "side");
        svg.point(NAMES[i], NAMES[i], &cfg.vertex[i], "vertex");
        if polar {
            svg.line(&cfg.pside[i], "polar");
            svg.point(&format!("{}p", NAMES[i]), PNAMES[i], &cfg.pvertex[i], "pvertex");
        }
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if cfg.model.conjugacy(&cfg.side[i], &cfg.side[j]) < 1e-6 {
                svg.right_angle(&cfg.side[i], &cfg.side[j]);
            }
        }
        for j in 0..3 {
            if cfg.model.conjugacy(&cfg.side[i], &cfg.pside[j]) < 1e-6 {
                svg.right_angle(&cfg.side[i], &cfg.pside[j]);
            }
        }
    }
}

fn absolute(svg: &mut Svg, m: &Model) {
    svg.conic(&m.absolute, "absolute");
}

/// Renders a named figure for the triangle `A, B, C` of a scene.
pub fn figure(name: &str, scene: &Scene) -> Result<String, FigureError> {
    if !FIGURES.contains(&name) {
        return Err(FigureError::UnknownFigure(name.to_string()));
    }
    let cfg = triangle(scene)?;
    let mut svg = Svg::new();
    match name {
        "triangle-polar" => {
            absolute(&mut svg, &scene.model);
            draw_triangle(&mut svg, &cfg, true);
            for i in 0..3 {
                let (d, e) = cfg.mids[i];
                svg.point(&format!("M{}1", NAMES[i]), &format!("D{}", NAMES[i].to_lowercase()), &d, "midpoint");
                svg.point(&format!("M{}2", NAMES[i]), &format!("E{}", NAMES[i].to_lowercase()), &e, "midpoint");
            }
        }
        "euler-line" => {
            need_real(name, scene)?;
            absolute(&mut svg, &scene.model);
            draw_triangle(&mut svg, &cfg, false);
            let np = cfg.nine_point_conic()?;
            svg.conic(&np.conic, "nine-point");
            svg.line(&np.euler_line, "euler");
            let (x, y) = (cfg.pseudo(), cfg.ppseudo());
            for (id, label, p) in [("H", "H", cfg.h), ("N", "N", x.n), ("Np", "N′", y.n), ("P", "P", x.p), ("Pp", "P′", y.p)] {
                svg.point(id, label, &p, "center");
            }
            for i in 0..3 {
                svg.segment(&cfg.vertex[i], &cfg.foot[i], "construction");
            }
        }
        "midpoint-quadrilateral" => {
            need_real(name, scene)?;
            absolute(&mut svg, &scene.model);
            let d = [0, 1, 2].map(|i| pick(&cfg.mids[i], cfg.choice[i]));
            let o = [0, 1, 2].map(|i| other(&cfg.mids[i], cfg.choice[i]));
            for t in [[o[0], d[1], d[2]], [d[0], o[1], d[2]], [d[0], d[1], o[2]], [o[0], o[1], o[2]]] {
                svg.line(&join(&t[0], &t[1]), "quadrilateral");
            }
            for i in 0..3 {
                svg.line(&cfg.side[i], "diagonal");
                svg.point(NAMES[i], NAMES[i], &cfg.vertex[i], "vertex");
                svg.point(&format!("D{i}"), &format!("D{}", i + 1), &d[i], "midpoint");
                svg.point(&format!("E{i}"), &format!("E{}", i + 1), &o[i], "midpoint");
            }
        }
        "menelaus" => {
            let r = join(&scene.point("R")?, &scene.point("S")?);
            let s = cfg.model.polar(&cfg.h);
            let mc = MenelausConfig::new(cfg.side, r, s)?;
            draw_triangle(&mut svg, &cfg, false);
            svg.line(&r, "transversal");
            svg.line(&s, "construction");
            for i in 0..3 {
                svg.line(&cfg.side[i], "construction");
                svg.point(&format!("Z{i}"), &format!("{}₀", NAMES[i]), &mc.zero[i], "zero");
                svg.point(&format!("O{i}"), &format!("{}₁", NAMES[i]), &mc.one[i], "one");
            }
            let p = mc.product();
            svg.text(-3.1, -3.05, &format!("product = {:.9} {:+.2e}i", p.re, p.im));
        }
        "magic-midpoints" => {
            need_real(name, scene)?;
            absolute(&mut svg, &scene.model);
            draw_triangle(&mut svg, &cfg, true);
            for i in 0..3 {
                let (m1, m2) = cfg.magic_mids[i];
                svg.point(&format!("T{i}1"), &format!("{}̃", NAMES[i]), &m1, "magic");
                svg.point(&format!("T{i}2"), &format!("{}̃", NAMES[i]), &m2, "magic");
                svg.line(&cfg.magic_side[i], "magic");
            }
            let r = magic_triangle(&cfg);
            svg.text(-3.1, -3.05, &format!("max residual {:.2e}", r.max()));
        }
        _ => unreachable!(),
    }
    Ok(svg.finish(name))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clip_horizontal() {
        let ((x0, y0), (x1, y1)) = clip_line(&HomLine::new(0.0, 1.0, -1.0)).unwrap();
        assert!((y0 - 1.0).abs() < 1e-12 && (y1 - 1.0).abs() < 1e-12);
        assert!((x0.abs() - HALF_WIDTH).abs() < 1e-12 && (x1.abs() - HALF_WIDTH).abs() < 1e-12);
    }

    #[test]
    fn unit_circle_is_an_ellipse() {
        let mut s = Svg::new();
        s.conic(&Conic::unit_circle(), "absolute");
        let out = s.finish("t");
        assert!(out.contains(r#"rx="1.000000" ry="1.000000""#));
    }

    #[test]
    fn every_figure_renders() {
        let scene = builtin_scene();
        for f in FIGURES {
            let out = figure(f, &scene).unwrap();
            assert!(out.starts_with("<?xml") && out.ends_with("</svg>\n"));
        }
    }

    #[test]
    fn unknown_figure() {
        assert!(matches!(figure("nope", &builtin_scene()), Err(FigureError::UnknownFigure(_))));
    }
}

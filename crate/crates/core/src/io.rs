//! JSON scenes: a conic and named points, complex numbers as `[re, im]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::cayley_klein::Model;
use crate::conic::{Conic, M3};
use crate::projective::{HomPoint, V3};
use crate::scalar::Scalar;

pub type Complex = [f64; 2];

#[derive(Debug, Error)]
pub enum SceneError {
    #[error("malformed scene: {0}")]
    Malformed(String),
    #[error("unknown field `{0}`")]
    UnknownField(String),
    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("invalid absolute conic: {0}")]
    Conic(crate::GeomError),
    #[error("point `{0}` is the zero vector")]
    ZeroPoint(String),
}

/// On-disk scene.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SceneFile {
    pub conic: [[Complex; 3]; 3],
    pub points: BTreeMap<String, [Complex; 3]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub styles: BTreeMap<String, String>,
}

const FIELDS: [&str; 4] = ["conic", "points", "labels", "styles"];

/// A parsed scene: the model of its conic and its named points.
#[derive(Clone, Debug)]
pub struct Scene {
    pub model: Model,
    pub points: BTreeMap<String, HomPoint>,
    pub labels: BTreeMap<String, String>,
    pub styles: BTreeMap<String, String>,
}

fn scalar(c: &Complex) -> Scalar {
    Scalar::new(c[0], c[1])
}

fn complex(s: Scalar) -> Complex {
    [s.re, s.im]
}

impl SceneFile {
    /// Parses JSON; in strict mode unknown top-level fields are rejected.
    pub fn from_json(text: &str, strict: bool) -> Result<Self, SceneError> {
        let v: Value = serde_json::from_str(text).map_err(|e| SceneError::Malformed(e.to_string()))?;
        if strict {
            let obj = v.as_object().ok_or_else(|| SceneError::Malformed("expected an object".into()))?;
            if let Some(k) = obj.keys().find(|k| !FIELDS.contains(&k.as_str())) {
                return Err(SceneError::UnknownField(k.clone()));
            }
        }
        serde_json::from_value(v).map_err(|e| SceneError::Malformed(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn parse(&self) -> Result<Scene, SceneError> {
        let m = M3::from_fn(|i, j| scalar(&self.conic[i][j]));
        let model = Model::new(Conic::new(m)).map_err(SceneError::Conic)?;
        let mut points = BTreeMap::new();
        for (name, c) in &self.points {
            let v = V3::new(scalar(&c[0]), scalar(&c[1]), scalar(&c[2]));
            let p = HomPoint::from_vec(v).ok_or_else(|| SceneError::ZeroPoint(name.clone()))?;
            points.insert(name.clone(), p);
        }
        Ok(Scene { model, points, labels: self.labels.clone(), styles: self.styles.clone() })
    }
}

impl Scene {
    pub fn new(model: Model) -> Self {
        Scene { model, points: BTreeMap::new(), labels: BTreeMap::new(), styles: BTreeMap::new() }
    }

    pub fn with_point(mut self, name: &str, p: HomPoint) -> Self {
        self.points.insert(name.to_string(), p);
        self
    }

    pub fn point(&self, name: &str) -> Result<HomPoint, SceneError> {
        self.points.get(name).copied().ok_or_else(|| SceneError::UnknownPoint(name.to_string()))
    }

    /// Serializable form with normalized coordinates.
    pub fn to_file(&self) -> SceneFile {
        let m = self.model.absolute.matrix();
        let conic = [0, 1, 2].map(|i| [0, 1, 2].map(|j| complex(m[(i, j)])));
        let points = self
            .points
            .iter()
            .map(|(k, p)| {
                let c = p.coords();
                (k.clone(), [complex(c[0]), complex(c[1]), complex(c[2])])
            })
            .collect();
        SceneFile { conic, points, labels: self.labels.clone(), styles: self.styles.clone() }
    }
}

/// Reads and parses a scene file.
pub fn load_scene(path: &std::path::Path, strict: bool) -> Result<Scene, SceneError> {
    let text = std::fs::read_to_string(path).map_err(|e| SceneError::Malformed(e.to_string()))?;
    SceneFile::from_json(&text, strict)?.parse()
}

#[cfg(test)]
mod tests {
    use super::*;

    const DISK: &str = r#"{
        "conic": [[[1,0],[0,0],[0,0]],[[0,0],[1,0],[0,0]],[[0,0],[0,0],[-1,0]]],
        "points": {"A": [[0,0],[0,0],[1,0]], "B": [[1,0],[0,0],[2,0]]}
    }"#;

    #[test]
    fn parses_disk() {
        let s = SceneFile::from_json(DISK, true).unwrap().parse().unwrap();
        assert_eq!(s.model.kind, crate::cayley_klein::Kind::Hyperbolic);
        let b = s.point("B").unwrap().to_affine().unwrap();
        assert!((b.0.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn strict_rejects_unknown() {
        let text = DISK.replacen('{', r#"{"extra": 1,"#, 1);
        assert!(matches!(SceneFile::from_json(&text, true), Err(SceneError::UnknownField(_))));
        assert!(SceneFile::from_json(&text, false).is_ok());
    }

    #[test]
    fn round_trip() {
        let s = SceneFile::from_json(DISK, true).unwrap().parse().unwrap();
        let f = s.to_file();
        let again = SceneFile::from_json(&f.to_json(), true).unwrap();
        assert_eq!(f, again);
    }

    #[test]
    fn unknown_point() {
        let s = SceneFile::from_json(DISK, true).unwrap().parse().unwrap();
        assert!(matches!(s.point("Z"), Err(SceneError::UnknownPoint(_))));
    }
}

//! JSON instance files.
//!
//! ```json
//! { "kind": "BNM", "geometry": "circle", "n": 1,
//!   "points": [ { "x": "0/1", "y": "1/1", "angle": "1/4", "color": "blue" }, ... ],
//!   "annotations": { "family": "bnm-perm", "sigma": [1] },
//!   "meta": { "family": "bnm-perm", "seed": null, ... } }
//! ```
//!
//! Every number that is not a count is a `p/q` string.

use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::adversaries::{AnnotatedInstance, Hidden};
use crate::error::{Error, Result};
use crate::geometry::{Color, GeometryClass, Instance, Kind, Point};
use crate::rational::Rational;

/// Generator identifier written into `meta.generator`.
pub const GENERATOR: &str = concat!("ncm-core ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointRecord {
    pub x: Rational,
    pub y: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub angle: Option<Rational>,
    pub color: Option<Color>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceFile {
    pub kind: Kind,
    pub geometry: GeometryClass,
    pub n: usize,
    pub points: Vec<PointRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub annotations: Option<Hidden>,
    #[serde(default)]
    pub meta: Value,
}

impl InstanceFile {
    pub fn new(ai: &AnnotatedInstance, meta: Value) -> Self {
        let inst = &ai.instance;
        InstanceFile {
            kind: inst.kind(),
            geometry: inst.geometry(),
            n: inst.n(),
            points: inst
                .points()
                .iter()
                .map(|p| PointRecord {
                    x: p.x.clone(),
                    y: p.y.clone(),
                    angle: p.angle.clone(),
                    color: p.color,
                })
                .collect(),
            annotations: match ai.hidden {
                Hidden::None => None,
                ref h => Some(h.clone()),
            },
            meta,
        }
    }

    pub fn to_annotated(&self) -> Result<AnnotatedInstance> {
        let points = self
            .points
            .iter()
            .map(|r| {
                let p = match &r.angle {
                    Some(a) => Point::on_circle(a.clone()),
                    None => Point::new(r.x.clone(), r.y.clone()),
                };
                p.with_color(r.color)
            })
            .collect();
        let instance = Instance::new(points, self.kind, self.geometry)?;
        if instance.n() != self.n {
            return Err(Error::InvalidInstance(format!(
                "header says n = {} but there are {} points",
                self.n,
                self.points.len()
            )));
        }
        Ok(AnnotatedInstance {
            instance,
            hidden: self.annotations.clone().unwrap_or(Hidden::None),
        })
    }
}

pub fn to_json(ai: &AnnotatedInstance, meta: Value) -> String {
    serde_json::to_string_pretty(&InstanceFile::new(ai, meta)).expect("instance serializes")
}

pub fn from_json(text: &str) -> Result<(AnnotatedInstance, Value)> {
    let file: InstanceFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    Ok((file.to_annotated()?, file.meta))
}

pub fn write_instance(path: &Path, ai: &AnnotatedInstance, meta: Value) -> Result<()> {
    std::fs::write(path, to_json(ai, meta) + "\n").map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn read_instance(path: &Path) -> Result<(AnnotatedInstance, Value)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    from_json(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversaries::{bnm_red_instance, markov_instance};
    use crate::codecs::Permutation;
    use crate::random::{random_general, seeded_rng};
    use serde_json::json;

    #[test]
    fn roundtrip_preserves_points_and_annotations() {
        let cases = vec![
            bnm_red_instance(&Permutation::new(vec![2, 1, 4, 3]).unwrap()).unwrap(),
            markov_instance(12, 7).unwrap(),
            AnnotatedInstance::plain(random_general(Kind::Mnm, 4, &mut seeded_rng(1))),
        ];
        for ai in cases {
            let text = to_json(&ai, json!({"family": "test"}));
            let (back, meta) = from_json(&text).unwrap();
            assert_eq!(back.instance.points(), ai.instance.points());
            assert_eq!(back.hidden, ai.hidden);
            assert_eq!(meta["family"], "test");
        }
    }

    #[test]
    fn rationals_are_strings() {
        let ai = bnm_red_instance(&Permutation::new(vec![1]).unwrap()).unwrap();
        let v: Value = serde_json::from_str(&to_json(&ai, Value::Null)).unwrap();
        assert_eq!(v["points"][0]["angle"], "1/4");
        assert_eq!(v["points"][1]["color"], "red");
        assert_eq!(v["kind"], "BNM");
    }

    #[test]
    fn rejects_bad_files() {
        assert!(matches!(from_json("{"), Err(Error::Parse(_))));
        let bad = r#"{"kind":"MNM","geometry":"general","n":1,"points":[{"x":"0","y":"0","color":null}]}"#;
        assert!(matches!(from_json(bad), Err(Error::InvalidInstance(_))));
        let lying = r#"{"kind":"MNM","geometry":"general","n":2,
            "points":[{"x":"0","y":"0","color":null},{"x":"1","y":"0","color":null}]}"#;
        assert!(from_json(lying).is_err());
    }
}

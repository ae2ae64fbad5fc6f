//! The configuration file format: three labeled circles and, optionally, the
//! three vertices.
//!
//! ```json
//! {"circles":{"a":{"center":2.0,"radius":3.0},"b":{"center":0.0,"radius":2.0},"c":{"center":-2.0,"radius":3.0}}}
//! ```
//!
//! Without `vertices` the circles are relabeled by center order and intersected.
//! With `vertices` the file is taken literally, so a tampered figure can be fed to
//! the checks unchanged.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{build_triple, Semicircle, TripleConfig, UpperHalfPoint};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CircleSet {
    pub a: Semicircle,
    pub b: Semicircle,
    pub c: Semicircle,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VertexSet {
    pub a: UpperHalfPoint,
    pub b: UpperHalfPoint,
    pub c: UpperHalfPoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub circles: CircleSet,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<VertexSet>,
}

impl ConfigFile {
    /// Circles only; the vertices are recomputed on load.
    pub fn circles_of(t: &TripleConfig) -> Self {
        ConfigFile { circles: CircleSet { a: t.circle_a, b: t.circle_b, c: t.circle_c }, vertices: None }
    }

    /// Circles and vertices exactly as stored in `t`.
    pub fn full(t: &TripleConfig) -> Self {
        ConfigFile {
            vertices: Some(VertexSet { a: t.vertex_a, b: t.vertex_b, c: t.vertex_c }),
            ..Self::circles_of(t)
        }
    }

    pub fn to_config(&self) -> Result<TripleConfig> {
        let c = self.circles;
        match self.vertices {
            None => build_triple(c.a, c.b, c.c),
            Some(v) => Ok(TripleConfig {
                circle_a: c.a,
                circle_b: c.b,
                circle_c: c.c,
                vertex_a: v.a,
                vertex_b: v.b,
                vertex_c: v.c,
            }),
        }
    }
}

pub fn parse_config(text: &str) -> Result<ConfigFile> {
    serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("config JSON: {e}")))
}

pub fn config_to_json(t: &TripleConfig) -> String {
    serde_json::to_string(&ConfigFile::circles_of(t)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const EXAMPLE: &str = r#"{"circles":{"a":{"center":2.0,"radius":3.0},"b":{"center":0.0,"radius":2.0},"c":{"center":-2.0,"radius":3.0}}}"#;

    #[test]
    fn parses_and_builds() {
        let t = parse_config(EXAMPLE).unwrap().to_config().unwrap();
        assert_eq!(t.circle_c.center_x, -2.0);
        assert!((t.vertex_b.x).abs() < 1e-15);
        assert_eq!(config_to_json(&t), EXAMPLE);
    }

    #[test]
    fn labels_follow_center_order() {
        let swapped = EXAMPLE.replace("\"center\":2.0", "\"center\":9.0").replace("\"center\":-2.0", "\"center\":2.0");
        let t = parse_config(&swapped).unwrap().to_config();
        // centers 9 / 0 / 2 relabel to c=0, b=2, a=9
        if let Ok(t) = t {
            assert_eq!(t.circle_c.center_x, 0.0);
        }
    }

    #[test]
    fn explicit_vertices_are_kept() {
        let t = parse_config(EXAMPLE).unwrap().to_config().unwrap();
        let mut f = ConfigFile::full(&t);
        f.vertices.as_mut().unwrap().a.y += 1e-3;
        let text = serde_json::to_string(&f).unwrap();
        let back = parse_config(&text).unwrap().to_config().unwrap();
        assert_eq!(back.vertex_a.y, t.vertex_a.y + 1e-3);
    }

    #[test]
    fn malformed_input() {
        assert!(matches!(parse_config("{"), Err(Error::InvalidInput(_))));
        assert!(matches!(parse_config(r#"{"circles":{"a":{"center":1,"radius":1}}}"#), Err(Error::InvalidInput(_))));
    }
}

//! File formats: fan documents (JSON and a plain ray-list text form),
//! triangulation documents and deterministic command reports.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{self, IntVector};
use crate::triang::{LatticeSimplex, Triangulation};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanDocument {
    pub schema_version: String,
    pub ambient_rank: usize,
    pub rays: Vec<Vec<i64>>,
    /// Generating cones as ray index lists; faces are completed on load.
    pub cones: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub metadata: BTreeMap<String, String>,
}

fn json_error(e: serde_json::Error) -> Error {
    use serde_json::error::Category;
    match e.classify() {
        Category::Syntax | Category::Eof => Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
        Category::Data => Error::Schema(e.to_string()),
        Category::Io => Error::Io(e.to_string()),
    }
}

pub fn parse_document(bytes: &[u8]) -> Result<FanDocument> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 1,
        column: e.valid_up_to() + 1,
        message: "input is not UTF-8".into(),
    })?;
    let doc: FanDocument = serde_json::from_str(text).map_err(json_error)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema_version {:?}",
            doc.schema_version
        )));
    }
    for (i, r) in doc.rays.iter().enumerate() {
        if r.len() != doc.ambient_rank {
            return Err(Error::Schema(format!(
                "ray {i} has {} coordinates, expected {}",
                r.len(),
                doc.ambient_rank
            )));
        }
    }
    for cone in &doc.cones {
        if let Some(&bad) = cone.iter().find(|&&i| i >= doc.rays.len()) {
            return Err(Error::Schema(format!("cone {cone:?} references missing ray {bad}")));
        }
    }
    Ok(doc)
}

impl FanDocument {
    pub fn to_fan(&self) -> Result<Fan> {
        Fan::from_i64(self.ambient_rank, &self.rays, &self.cones)
    }

    /// Canonical document of a fan: its rays and sorted maximal cones.
    pub fn from_fan(f: &Fan, metadata: BTreeMap<String, String>) -> Result<Self> {
        let rays = f
            .rays()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        x.to_i64()
                            .ok_or_else(|| Error::Schema(format!("coordinate {x} exceeds 64 bits")))
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            schema_version: SCHEMA_VERSION.into(),
            ambient_rank: f.ambient_rank(),
            rays,
            cones: f.maximal_cones(),
            metadata,
        })
    }

    pub fn canonicalize(&self) -> Result<Self> {
        Self::from_fan(&self.to_fan()?, self.metadata.clone())
    }
}

/// Parses a fan document; input starting with `{` is JSON, anything else is
/// read as a ray list.
pub fn parse_fan(bytes: &[u8]) -> Result<Fan> {
    let trimmed = bytes.iter().find(|b| !b.is_ascii_whitespace());
    if trimmed == Some(&b'{') {
        parse_document(bytes)?.to_fan()
    } else {
        let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
            line: 1,
            column: e.valid_up_to() + 1,
            message: "input is not UTF-8".into(),
        })?;
        parse_ray_text(text)
    }
}

pub fn emit_document(doc: &FanDocument) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

pub fn emit_fan(f: &Fan, name: &str) -> Result<String> {
    let mut meta = BTreeMap::new();
    if !name.is_empty() {
        meta.insert("name".to_string(), name.to_string());
    }
    Ok(emit_document(&FanDocument::from_fan(f, meta)?))
}

/// Reads rays written as `(1,0) (0,1) (-1,-1)`, optionally followed by a line
/// `cones: 0 1; 1 2; 2 0`. Without a cones line, planar rays are completed
/// by joining angularly consecutive rays less than a half-turn apart.
pub fn parse_ray_text(text: &str) -> Result<Fan> {
    let mut rays: Vec<IntVector> = Vec::new();
    let mut cones: Option<Vec<Vec<usize>>> = None;
    for (ln, line) in text.lines().enumerate() {
        let line_no = ln + 1;
        let content = line.split('#').next().unwrap_or("");
        if let Some(rest) = content.trim_start().strip_prefix("cones:") {
            let offset = content.len() - rest.len();
            let mut list = Vec::new();
            for group in rest.split(';') {
                let ids: Vec<&str> = group
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .collect();
                if ids.is_empty() {
                    continue;
                }
                let cone = ids
                    .iter()
                    .map(|s| {
                        s.parse::<usize>().map_err(|_| Error::Parse {
                            line: line_no,
                            column: offset + rest.find(s).unwrap_or(0) + 1,
                            message: format!("bad ray index {s:?}"),
                        })
                    })
                    .collect::<Result<Vec<_>>>()?;
                list.push(cone);
            }
            cones = Some(list);
            continue;
        }
        let bytes = content.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let ch = bytes[i] as char;
            if ch.is_whitespace() || ch == ',' {
                i += 1;
                continue;
            }
            let err = |col: usize, message: String| Error::Parse {
                line: line_no,
                column: col + 1,
                message,
            };
            if ch != '(' {
                return Err(err(i, format!("expected '(' but found {ch:?}")));
            }
            let close = content[i..]
                .find(')')
                .map(|p| i + p)
                .ok_or_else(|| err(i, "unclosed '('".into()))?;
            let coords = content[i + 1..close]
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<BigInt>()
                        .map_err(|_| err(i + 1, format!("bad coordinate {:?}", s.trim())))
                })
                .collect::<Result<IntVector>>()?;
            rays.push(coords);
            i = close + 1;
        }
    }
    let n = rays
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::Schema("no rays given".into()))?;
    let cones = match cones {
        Some(c) => c,
        None if n == 2 => planar_completion(&rays),
        None => return Err(Error::Schema("a cones: line is required outside rank 2".into())),
    };
    Fan::from_maximal(n, rays, cones)
}

fn planar_completion(rays: &[IntVector]) -> Vec<Vec<usize>> {
    let half = |v: &IntVector| -> u8 { u8::from(!(v[1].is_positive() || (v[1].is_zero() && v[0].is_positive()))) };
    let cross = |a: &IntVector, b: &IntVector| &a[0] * &b[1] - &a[1] * &b[0];
    let mut order: Vec<usize> = (0..rays.len()).collect();
    order.sort_by(|&i, &j| {
        half(&rays[i])
            .cmp(&half(&rays[j]))
            .then_with(|| BigInt::zero().cmp(&cross(&rays[i], &rays[j])))
    });
    let m = order.len();
    (0..m)
        .filter_map(|k| {
            let (a, b) = (order[k], order[(k + 1) % m]);
            (a != b && cross(&rays[a], &rays[b]).is_positive()).then(|| {
                let mut c = vec![a, b];
                c.sort_unstable();
                c
            })
        })
        .collect()
}

pub fn emit_ray_text(f: &Fan) -> String {
    let rays: Vec<String> = f.rays().iter().map(|r| lattice::fmt_vector(r)).collect();
    let cones: Vec<String> = f
        .maximal_cones()
        .iter()
        .map(|c| c.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
        .collect();
    format!("{}\ncones: {}\n", rays.join(" "), cones.join("; "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TriangulationDocument {
    pub schema_version: String,
    /// Vertices of the simplex Δ.
    pub simplex: Vec<Vec<i64>>,
    /// All lattice points of Δ in sorted order; cells index into this list.
    pub points: Vec<Vec<i64>>,
    pub cells: Vec<Vec<usize>>,
}

impl TriangulationDocument {
    pub fn from_triangulation(t: &Triangulation) -> Result<Self> {
        let to_i64 = |p: &IntVector| -> Result<Vec<i64>> {
            p.iter()
                .map(|x| {
                    x.to_i64()
                        .ok_or_else(|| Error::Schema("coordinate exceeds 64 bits".into()))
                })
                .collect()
        };
        let s = t.simplex();
        Ok(Self {
            schema_version: SCHEMA_VERSION.into(),
            simplex: s
                .vertices()
                .iter()
                .map(|&i| to_i64(&s.points()[i]))
                .collect::<Result<_>>()?,
            points: s.points().iter().map(to_i64).collect::<Result<_>>()?,
            cells: t.cells().to_vec(),
        })
    }

    pub fn to_triangulation(&self) -> Result<Triangulation> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(Error::Schema(format!(
                "unsupported schema_version {:?}",
                self.schema_version
            )));
        }
        let vertices: Vec<IntVector> = self.simplex.iter().map(|v| lattice::int_vec(v)).collect();
        let simplex = LatticeSimplex::from_vertices(&vertices)?;
        let listed: Vec<IntVector> = self.points.iter().map(|v| lattice::int_vec(v)).collect();
        if listed != simplex.points() {
            return Err(Error::Schema(
                "points do not match the lattice points of the simplex".into(),
            ));
        }
        Triangulation::new(simplex, self.cells.clone())
    }
}

pub fn parse_triangulation(bytes: &[u8]) -> Result<Triangulation> {
    let doc: TriangulationDocument = serde_json::from_slice(bytes).map_err(json_error)?;
    doc.to_triangulation()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

impl InputDigest {
    pub fn of(path: &str, bytes: &[u8]) -> Self {
        Self {
            path: path.to_string(),
            sha256: sha256_hex(bytes),
        }
    }
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// Machine-readable output of one command; contains nothing run-dependent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    pub tool: &'static str,
    pub version: &'static str,
    pub schema_version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub result: serde_json::Value,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Vec<InputDigest>, result: serde_json::Value) -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            inputs,
            result,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

//! JSON file formats for algebras, relations and representations.
//!
//! Slots are 1-based in every file. Unknown fields are rejected.

use std::collections::HashSet;
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{abstract_from_concrete, AbstractAlgebra};
use crate::error::{input, Error, Result};
use crate::func::{ConcreteAlgebra, PartialFunctionTable};
use crate::relation::BinRelation;
use crate::represent::{PointOrigin, PointUniverse, Representation, RepresentationPart, UniverseKind};
use crate::word::{CompositionWord, Coord};
use crate::Flavor;

pub const ALGEBRA_FORMAT: &str = "mengerkit-algebra-v1";
pub const RELATION_FORMAT: &str = "mengerkit-relation-v1";
pub const REPRESENTATION_FORMAT: &str = "mengerkit-representation-v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Abstract,
    Concrete,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraDoc {
    format: String,
    kind: AlgebraKind,
    flavor: Flavor,
    n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    zero: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    mann: Option<Vec<Vec<Vec<usize>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    superposition: Option<Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    functions: Option<Vec<Vec<Option<usize>>>>,
}

/// An algebra as read from a file.
#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraFile {
    Abstract(AbstractAlgebra),
    Concrete(ConcreteAlgebra),
}

impl AlgebraFile {
    /// The abstract algebra, abstracting a concrete one (which must be
    /// closed).
    pub fn to_abstract(&self) -> Result<AbstractAlgebra> {
        match self {
            AlgebraFile::Abstract(a) => Ok(a.clone()),
            AlgebraFile::Concrete(c) => abstract_from_concrete(c),
        }
    }

    pub fn concrete(&self) -> Option<&ConcreteAlgebra> {
        match self {
            AlgebraFile::Abstract(_) => None,
            AlgebraFile::Concrete(c) => Some(c),
        }
    }
}

fn check_format(found: &str, expected: &str) -> Result<()> {
    if found != expected {
        return input(format!("field `format`: expected \"{expected}\", found \"{found}\""));
    }
    Ok(())
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed file: {e}")))
}

fn to_json<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("serializable");
    s.push('\n');
    s
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display())))
}

fn forbid<T>(field: &str, value: &Option<T>, why: &str) -> Result<()> {
    if value.is_some() {
        return input(format!("field `{field}` is not allowed {why}"));
    }
    Ok(())
}

fn require<'a, T>(field: &str, value: &'a Option<T>) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::Input(format!("missing field `{field}`")))
}

/// Flattens a nested array of depth `depth` whose every level has `size`
/// entries.
fn flatten_nested(v: &Value, depth: usize, size: usize, out: &mut Vec<usize>, path: &mut String) -> Result<()> {
    if depth == 0 {
        let x = v
            .as_u64()
            .ok_or_else(|| Error::Input(format!("field `superposition{path}`: expected an index")))?;
        out.push(x as usize);
        return Ok(());
    }
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Input(format!("field `superposition{path}`: expected an array")))?;
    if arr.len() != size {
        return input(format!(
            "field `superposition{path}`: expected {size} entries, found {}",
            arr.len()
        ));
    }
    for (k, item) in arr.iter().enumerate() {
        let len = path.len();
        path.push_str(&format!("[{k}]"));
        flatten_nested(item, depth - 1, size, out, path)?;
        path.truncate(len);
    }
    Ok(())
}

fn nest(flat: &[usize], depth: usize, size: usize) -> Value {
    if depth == 0 {
        return Value::from(flat[0]);
    }
    let stride = flat.len() / size.max(1);
    Value::Array(
        (0..size)
            .map(|k| nest(&flat[k * stride..(k + 1) * stride], depth - 1, size))
            .collect(),
    )
}

pub fn algebra_from_json(text: &str) -> Result<AlgebraFile> {
    let doc: AlgebraDoc = parse(text)?;
    check_format(&doc.format, ALGEBRA_FORMAT)?;
    let n = doc.n;
    match doc.kind {
        AlgebraKind::Abstract => {
            forbid("base_size", &doc.base_size, "in an abstract algebra")?;
            forbid("functions", &doc.functions, "in an abstract algebra")?;
            let size = *require("size", &doc.size)?;
            let mann = require("mann", &doc.mann)?;
            if mann.len() != n {
                return input(format!("field `mann`: expected {n} tables, found {}", mann.len()));
            }
            let mut flat_mann = Vec::with_capacity(n);
            for (i, t) in mann.iter().enumerate() {
                if t.len() != size || t.iter().any(|row| row.len() != size) {
                    return input(format!("field `mann[{i}]`: expected a {size}×{size} table"));
                }
                flat_mann.push(t.concat());
            }
            let sup = match (doc.flavor, &doc.superposition) {
                (Flavor::Menger, Some(v)) => {
                    let mut flat = Vec::new();
                    flatten_nested(v, n + 1, size, &mut flat, &mut String::new())?;
                    Some(flat)
                }
                (Flavor::Menger, None) => return input("missing field `superposition` (flavor is menger)"),
                (Flavor::Plain, Some(_)) => return input("field `superposition` is not allowed when flavor is plain"),
                (Flavor::Plain, None) => None,
            };
            let alg = AbstractAlgebra::from_tables(n, size, flat_mann, sup)?;
            if doc.zero != alg.zero() {
                return input(format!(
                    "field `zero`: file says {:?}, the tables give {:?}",
                    doc.zero,
                    alg.zero()
                ));
            }
            Ok(AlgebraFile::Abstract(alg))
        }
        AlgebraKind::Concrete => {
            forbid("size", &doc.size, "in a concrete algebra")?;
            forbid("zero", &doc.zero, "in a concrete algebra")?;
            forbid("mann", &doc.mann, "in a concrete algebra")?;
            forbid("superposition", &doc.superposition, "in a concrete algebra")?;
            let base = *require("base_size", &doc.base_size)?;
            let functions = require("functions", &doc.functions)?
                .iter()
                .enumerate()
                .map(|(k, f)| {
                    PartialFunctionTable::from_entries(n, base, f)
                        .map_err(|e| Error::Input(format!("field `functions[{k}]`: {e}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(AlgebraFile::Concrete(ConcreteAlgebra::new(
                n, base, doc.flavor, functions,
            )?))
        }
    }
}

pub fn algebra_to_json(alg: &AlgebraFile) -> String {
    let doc = match alg {
        AlgebraFile::Abstract(a) => {
            let m = a.size();
            AlgebraDoc {
                format: ALGEBRA_FORMAT.into(),
                kind: AlgebraKind::Abstract,
                flavor: a.flavor(),
                n: a.arity(),
                size: Some(m),
                zero: a.zero(),
                mann: Some(
                    (1..=a.arity())
                        .map(|i| {
                            a.mann_table(i)
                                .chunks(m.max(1))
                                .take(m)
                                .map(<[usize]>::to_vec)
                                .collect()
                        })
                        .collect(),
                ),
                superposition: a.superposition_table().map(|t| nest(&t, a.arity() + 1, m)),
                base_size: None,
                functions: None,
            }
        }
        AlgebraFile::Concrete(c) => AlgebraDoc {
            format: ALGEBRA_FORMAT.into(),
            kind: AlgebraKind::Concrete,
            flavor: c.flavor(),
            n: c.arity(),
            size: None,
            zero: None,
            mann: None,
            superposition: None,
            base_size: Some(c.base_size()),
            functions: Some(c.functions().iter().map(PartialFunctionTable::entries).collect()),
        },
    };
    to_json(&doc)
}

pub fn load_algebra(path: &Path) -> Result<AlgebraFile> {
    algebra_from_json(&read(path)?)
}

pub fn save_algebra(path: &Path, alg: &AlgebraFile) -> Result<()> {
    write(path, &algebra_to_json(alg))
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationDoc {
    format: String,
    size: usize,
    matrix: Vec<Vec<u8>>,
}

pub fn relation_from_json(text: &str) -> Result<BinRelation> {
    let doc: RelationDoc = parse(text)?;
    check_format(&doc.format, RELATION_FORMAT)?;
    if doc.matrix.len() != doc.size {
        return input(format!(
            "field `matrix`: expected {} rows, found {}",
            doc.size,
            doc.matrix.len()
        ));
    }
    for (k, row) in doc.matrix.iter().enumerate() {
        if row.len() != doc.size {
            return input(format!(
                "field `matrix[{k}]`: expected {} entries, found {}",
                doc.size,
                row.len()
            ));
        }
        if let Some(v) = row.iter().find(|&&v| v > 1) {
            return input(format!("field `matrix[{k}]`: entry {v} is not 0 or 1"));
        }
    }
    BinRelation::from_matrix(&doc.matrix)
}

pub fn relation_to_json(r: &BinRelation) -> String {
    to_json(&RelationDoc {
        format: RELATION_FORMAT.into(),
        size: r.size(),
        matrix: r.to_matrix(),
    })
}

pub fn load_relation(path: &Path) -> Result<BinRelation> {
    relation_from_json(&read(path)?)
}

pub fn save_relation(path: &Path, r: &BinRelation) -> Result<()> {
    write(path, &relation_to_json(r))
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum UniverseKindDoc {
    Canonical,
    Base,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum OriginDoc {
    Carrier,
    Units,
    Base,
    Words(Vec<CompositionWord>),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct UniverseDoc {
    kind: UniverseKindDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    flavor: Option<Flavor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    base_size: Option<usize>,
    points: Vec<Vec<Coord>>,
    origins: Vec<OriginDoc>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PartDoc {
    label: String,
    /// Index into the document's universe list.
    universe: usize,
    values: Vec<Vec<Option<usize>>>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepresentationDoc {
    format: String,
    n: usize,
    carrier_size: usize,
    universes: Vec<UniverseDoc>,
    parts: Vec<PartDoc>,
}

/// Parts sharing a universe share it in the file as well.
pub fn representation_to_json(rep: &Representation) -> String {
    let mut universes: Vec<&Arc<PointUniverse>> = Vec::new();
    let mut parts = Vec::new();
    for part in rep.parts() {
        let idx = match universes
            .iter()
            .position(|u| Arc::ptr_eq(u, part.universe()) || ***u == **part.universe())
        {
            Some(k) => k,
            None => {
                universes.push(part.universe());
                universes.len() - 1
            }
        };
        parts.push(PartDoc {
            label: part.label().to_string(),
            universe: idx,
            values: part.values().to_vec(),
        });
    }
    let universes = universes
        .into_iter()
        .map(|u| UniverseDoc {
            kind: match u.kind() {
                UniverseKind::Canonical { .. } => UniverseKindDoc::Canonical,
                UniverseKind::Base { .. } => UniverseKindDoc::Base,
            },
            flavor: match u.kind() {
                UniverseKind::Canonical { flavor } => Some(flavor),
                UniverseKind::Base { .. } => None,
            },
            base_size: match u.kind() {
                UniverseKind::Canonical { .. } => None,
                UniverseKind::Base { base_size } => Some(base_size),
            },
            points: u.points().to_vec(),
            origins: u
                .origins()
                .iter()
                .map(|o| match o {
                    PointOrigin::Carrier => OriginDoc::Carrier,
                    PointOrigin::Units => OriginDoc::Units,
                    PointOrigin::Base => OriginDoc::Base,
                    PointOrigin::Word(ws) => OriginDoc::Words(ws.clone()),
                })
                .collect(),
        })
        .collect();
    to_json(&RepresentationDoc {
        format: REPRESENTATION_FORMAT.into(),
        n: rep.arity(),
        carrier_size: rep.carrier_size(),
        universes,
        parts,
    })
}

pub fn representation_from_json(text: &str) -> Result<Representation> {
    let doc: RepresentationDoc = parse(text)?;
    check_format(&doc.format, REPRESENTATION_FORMAT)?;
    let universes = doc
        .universes
        .into_iter()
        .enumerate()
        .map(|(k, u)| {
            let field = |name: &str| format!("field `universes[{k}].{name}`");
            let kind = match (u.kind, u.flavor, u.base_size) {
                (UniverseKindDoc::Canonical, Some(flavor), None) => UniverseKind::Canonical { flavor },
                (UniverseKindDoc::Base, None, Some(base_size)) => UniverseKind::Base { base_size },
                (UniverseKindDoc::Canonical, _, _) => {
                    return input(format!("{}: canonical universes take `flavor` only", field("kind")))
                }
                (UniverseKindDoc::Base, _, _) => {
                    return input(format!("{}: base universes take `base_size` only", field("kind")))
                }
            };
            let origins = u
                .origins
                .into_iter()
                .map(|o| match o {
                    OriginDoc::Carrier => PointOrigin::Carrier,
                    OriginDoc::Units => PointOrigin::Units,
                    OriginDoc::Base => PointOrigin::Base,
                    OriginDoc::Words(ws) => PointOrigin::Word(ws),
                })
                .collect();
            PointUniverse::from_points(kind, doc.n, u.points, origins)
                .map(Arc::new)
                .map_err(|e| Error::Input(format!("field `universes[{k}]`: {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut parts = Vec::with_capacity(doc.parts.len());
    for (k, p) in doc.parts.into_iter().enumerate() {
        let universe = universes
            .get(p.universe)
            .ok_or_else(|| Error::Input(format!("field `parts[{k}].universe`: no universe {}", p.universe)))?;
        parts.push(
            RepresentationPart::new(p.label, universe.clone(), p.values)
                .map_err(|e| Error::Input(format!("field `parts[{k}]`: {e}")))?,
        );
    }
    Representation::new(doc.n, doc.carrier_size, parts)
}

pub fn load_representation(path: &Path) -> Result<Representation> {
    representation_from_json(&read(path)?)
}

pub fn save_representation(path: &Path, rep: &Representation) -> Result<()> {
    write(path, &representation_to_json(rep))
}

/// Groups representation parts by universe, in first-use order. Mainly for
/// callers that want to iterate universes of a loaded file.
pub fn universes_of(rep: &Representation) -> Vec<Arc<PointUniverse>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in rep.parts() {
        if seen.insert(Arc::as_ptr(p.universe())) {
            out.push(p.universe().clone());
        }
    }
    out
}

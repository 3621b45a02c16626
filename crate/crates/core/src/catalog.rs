//! Named designs and how to resolve a design argument.
//!
//! A design argument is either a catalog name such as `pg23`, `boolean:3` or
//! `quadratic:3:1`, or a path to a design JSON file.

use std::path::Path;

use serde::Serialize;

use crate::designs::{families, Hypergraph};
use crate::error::{Error, Result};

/// One catalog member, as listed by `catalog list` and `GET /designs`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub family: &'static str,
    pub n: usize,
    pub blocks: usize,
    pub lambda: Option<usize>,
    pub description: &'static str,
}

/// Families and the parameter forms each accepts.
pub const FAMILIES: &[(&str, &str)] = &[
    ("pg23", "pg23"),
    ("ag24", "ag24"),
    ("boolean", "boolean:m, 2 <= m <= 6"),
    ("symplectic", "symplectic:m, m in {2, 3}"),
    ("quadratic", "quadratic:m:eps, (m, eps) in {(2,0), (3,0), (3,1)}"),
    ("pairs", "pairs:n, 3 <= n <= 32"),
    ("inflation", "inflation:alpha, alpha in {1, 2}"),
];

/// The standard members, in listing order.
pub const STANDARD: &[&str] = &[
    "pg23",
    "ag24",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "boolean:5",
    "symplectic:2",
    "symplectic:3",
    "quadratic:2:0",
    "quadratic:3:0",
    "quadratic:3:1",
    "pairs:3",
    "pairs:4",
    "pairs:5",
    "pairs:6",
    "inflation:2",
];

fn describe(family: &str) -> &'static str {
    match family {
        "pg23" => "projective plane of order 3",
        "ag24" => "affine plane of order 4",
        "boolean" => "zero-sum quadruples of GF(2)^m",
        "symplectic" => "zero-sum quadruples of GF(2)^2m with even form sum",
        "quadratic" => "zero-sum quadruples on the points of a quadratic form class",
        "pairs" => "quadruples {x_i, y_i, x_j, y_j} on n pairs",
        _ => "Boolean systems on the lines of a projective plane",
    }
}

fn parse_u32(s: &str, name: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::UnknownCatalogEntry(format!("{name}: {s:?} is not a number")))
}

/// Builds a catalog design by name.
pub fn design(name: &str) -> Result<Hypergraph> {
    let parts: Vec<&str> = name.split(':').collect();
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    match parts.as_slice() {
        ["pg23"] => Ok(families::pg23()),
        ["ag24"] => Ok(families::ag24()),
        ["boolean", m] => families::boolean_system(parse_u32(m, name)?),
        ["symplectic", m] => families::symplectic_system(parse_u32(m, name)?),
        ["quadratic", m, e] => families::quadratic_system(parse_u32(m, name)?, parse_u32(e, name)?),
        ["pairs", n] => families::pairs_hypergraph(parse_u32(n, name)? as usize),
        ["inflation", a] => families::inflated_plane(parse_u32(a, name)?),
        _ => Err(unknown()),
    }
}

/// The family a name belongs to, if any.
pub fn family_of(name: &str) -> Option<&'static str> {
    let head = name.split(':').next()?;
    FAMILIES.iter().find(|(f, _)| *f == head).map(|(f, _)| *f)
}

/// A catalog name, or else a path to a design JSON file.
pub fn resolve(arg: &str) -> Result<Hypergraph> {
    if family_of(arg).is_some() && !Path::new(arg).is_file() {
        return design(arg);
    }
    let text = std::fs::read_to_string(arg).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => Error::UnknownCatalogEntry(arg.to_string()),
        _ => Error::Io(e),
    })?;
    Hypergraph::from_json(&text)
}

pub fn entry(name: &str) -> Result<CatalogEntry> {
    let h = design(name)?;
    let family = family_of(name).expect("a design that resolves has a family");
    Ok(CatalogEntry {
        name: name.to_string(),
        family,
        n: h.n(),
        blocks: h.blocks().len(),
        lambda: h.lambda(),
        description: describe(family),
    })
}

/// Every standard member.
pub fn list() -> Vec<CatalogEntry> {
    STANDARD
        .iter()
        .map(|name| entry(name).expect("standard members build"))
        .collect()
}

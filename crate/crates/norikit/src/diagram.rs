//! Diagrams (directed multigraphs) and representations assigning free
//! module ranks to vertices and exact matrices to edges. Vertex and edge
//! ids are strings ordered lexicographically, which fixes every basis
//! order downstream.

use std::collections::BTreeMap;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact_linalg::{parse_rational, ExactMatrix, Ring, Scalar};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub id: String,
    pub src: String,
    pub dst: String,
}

/// A directed multigraph. Unlike a category, composition of edges is not
/// defined. Multi-edges and loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl Diagram {
    pub fn new(mut vertices: Vec<String>, mut edges: Vec<Edge>) -> Result<Self> {
        vertices.sort();
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidRepresentation("duplicate vertex id".into()));
        }
        edges.sort_by(|a, b| a.id.cmp(&b.id));
        if edges.windows(2).any(|w| w[0].id == w[1].id) {
            return Err(Error::InvalidRepresentation("duplicate edge id".into()));
        }
        for e in &edges {
            if !vertices.contains(&e.src) {
                return Err(Error::UnknownVertex(e.src.clone()));
            }
            if !vertices.contains(&e.dst) {
                return Err(Error::UnknownVertex(e.dst.clone()));
            }
        }
        Ok(Diagram { vertices, edges })
    }

    pub fn empty() -> Self {
        Diagram { vertices: Vec::new(), edges: Vec::new() }
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Edges in lexicographic id order.
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn has_vertex(&self, id: &str) -> bool {
        self.vertices.binary_search_by(|v| v.as_str().cmp(id)).is_ok()
    }

    /// The full subdiagram on `vs`: exactly those vertices together with
    /// every edge whose endpoints both survive.
    pub fn full_subdiagram(&self, vs: &[String]) -> Result<Diagram> {
        for v in vs {
            if !self.has_vertex(v) {
                return Err(Error::UnknownVertex(v.clone()));
            }
        }
        let mut vertices: Vec<String> = vs.to_vec();
        vertices.sort();
        vertices.dedup();
        let edges = self
            .edges
            .iter()
            .filter(|e| vertices.contains(&e.src) && vertices.contains(&e.dst))
            .cloned()
            .collect();
        Ok(Diagram { vertices, edges })
    }

    /// Is `sub` the full subdiagram of `self` on its own vertex set?
    pub fn is_full_subdiagram(&self, sub: &Diagram) -> bool {
        match self.full_subdiagram(sub.vertices()) {
            Ok(d) => &d == sub,
            Err(_) => false,
        }
    }
}

/// A representation: free modules `R^rank(v)` on vertices and matrices of
/// shape `rank(dst) x rank(src)` on edges, acting on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    pub diagram: Diagram,
    pub ring: Ring,
    pub rank: BTreeMap<String, usize>,
    pub edge_matrix: BTreeMap<String, ExactMatrix>,
}

/// A single validation finding, carrying the offending id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    MissingRank(String),
    MissingMatrix(String),
    ShapeMismatch(String),
    RingMismatch(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingRank(v) => write!(f, "vertex `{v}` has no rank"),
            Violation::MissingMatrix(e) => write!(f, "edge `{e}` has no matrix"),
            Violation::ShapeMismatch(e) => write!(f, "edge `{e}` has a matrix of the wrong shape"),
            Violation::RingMismatch(e) => write!(f, "edge `{e}` has a matrix over the wrong ring"),
        }
    }
}

impl Representation {
    /// Reports every missing rank, shape mismatch or ring mismatch; an
    /// empty list means the representation is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for v in self.diagram.vertices() {
            if !self.rank.contains_key(v) {
                out.push(Violation::MissingRank(v.clone()));
            }
        }
        for e in self.diagram.edges() {
            let Some(m) = self.edge_matrix.get(&e.id) else {
                out.push(Violation::MissingMatrix(e.id.clone()));
                continue;
            };
            if m.ring() != self.ring {
                out.push(Violation::RingMismatch(e.id.clone()));
                continue;
            }
            let (Some(&rs), Some(&rd)) = (self.rank.get(&e.src), self.rank.get(&e.dst)) else {
                continue;
            };
            if m.rows() != rd || m.cols() != rs {
                out.push(Violation::ShapeMismatch(e.id.clone()));
            }
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    pub fn rank_of(&self, vertex: &str) -> usize {
        self.rank[vertex]
    }

    /// Restriction along a full subdiagram: ranks and matrices are copied
    /// for the surviving vertices and edges.
    pub fn restrict(&self, sub: &Diagram) -> Result<Representation> {
        if !self.diagram.is_full_subdiagram(sub) {
            return Err(Error::NotASubdiagram(format!(
                "[{}]",
                sub.vertices().join(", ")
            )));
        }
        let rank = sub
            .vertices()
            .iter()
            .filter_map(|v| self.rank.get(v).map(|&r| (v.clone(), r)))
            .collect();
        let edge_matrix = sub
            .edges()
            .iter()
            .filter_map(|e| self.edge_matrix.get(&e.id).map(|m| (e.id.clone(), m.clone())))
            .collect();
        Ok(Representation { diagram: sub.clone(), ring: self.ring, rank, edge_matrix })
    }

    /// Restriction to the full subdiagram on a vertex subset.
    pub fn restrict_to(&self, vs: &[String]) -> Result<Representation> {
        let sub = self.diagram.full_subdiagram(vs)?;
        self.restrict(&sub)
    }
}

// --- JSON input format ---

#[derive(Deserialize)]
struct RepFile {
    ring: String,
    vertices: Vec<VertexFile>,
    edges: Vec<EdgeFile>,
}

#[derive(Deserialize)]
struct VertexFile {
    id: String,
    rank: usize,
}

#[derive(Deserialize)]
struct EdgeFile {
    id: String,
    src: String,
    dst: String,
    matrix: Vec<Vec<String>>,
}

/// Parses the JSON representation format. Matrix entries are strings
/// (optional sign, integer, or `p/q`); a fractional entry in a Z file
/// parses into a Q matrix so that `validate` can report the ring
/// mismatch against the edge id.
pub fn representation_from_json(text: &str) -> Result<Representation> {
    let file: RepFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let ring = match file.ring.as_str() {
        "Q" => Ring::Q,
        "Z" => Ring::Z,
        other => return Err(Error::Parse(format!("unknown ring `{other}`"))),
    };
    let vertices: Vec<String> = file.vertices.iter().map(|v| v.id.clone()).collect();
    let rank: BTreeMap<String, usize> = file.vertices.into_iter().map(|v| (v.id, v.rank)).collect();
    let mut edges = Vec::new();
    let mut edge_matrix = BTreeMap::new();
    for e in file.edges {
        let matrix = parse_matrix(&e.id, ring, &e.matrix)?;
        edges.push(Edge { id: e.id.clone(), src: e.src, dst: e.dst });
        edge_matrix.insert(e.id, matrix);
    }
    let diagram = Diagram::new(vertices, edges)?;
    Ok(Representation { diagram, ring, rank, edge_matrix })
}

fn parse_matrix(edge: &str, ring: Ring, rows: &[Vec<String>]) -> Result<ExactMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rationals = Vec::with_capacity(rows.len());
    let mut integral = true;
    for row in rows {
        if row.len() != cols {
            return Err(Error::Parse(format!("edge `{edge}`: ragged matrix rows")));
        }
        let mut out = Vec::with_capacity(cols);
        for cell in row {
            let r = parse_rational(cell)
                .map_err(|e| Error::Parse(format!("edge `{edge}`: {e}")))?;
            integral &= r.is_integer();
            out.push(r);
        }
        rationals.push(out);
    }
    let target = if ring == Ring::Z && !integral { Ring::Q } else { ring };
    let data = rationals
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|r| match target {
                    Ring::Q => Scalar::Rat(r),
                    Ring::Z => Scalar::Int(r.to_integer()),
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rows(target, data)
}

/// Parses the whitespace matrix text format (one row per line). The ring
/// is inferred: Z when every entry is integral, Q otherwise.
pub fn matrix_from_text(text: &str) -> Result<ExactMatrix> {
    let mut rows: Vec<Vec<String>> = Vec::new();
    for line in text.lines() {
        let cells: Vec<String> = line.split_whitespace().map(str::to_string).collect();
        if !cells.is_empty() {
            rows.push(cells);
        }
    }
    if rows.is_empty() {
        return Err(Error::Parse("empty matrix".into()));
    }
    let integral = rows
        .iter()
        .flatten()
        .map(|c| parse_rational(c))
        .collect::<Result<Vec<_>>>()?
        .iter()
        .all(|r| r.is_integer());
    let ring = if integral { Ring::Z } else { Ring::Q };
    parse_matrix("<text>", ring, &rows)
}

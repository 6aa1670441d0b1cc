//! Text file formats: edge lists, hypergraphs, graph6 lists, polynomial
//! JSON, class CSV and enumeration checkpoints.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use trifree_core::graph6::{parse_graph6, write_graph6};
use trifree_core::hypergraph::CliqueHypergraph;
use trifree_core::{Graph, Poly};

use crate::error::{CliError, Result};

/// Lines with comments (`#`) and surrounding blanks removed, with their
/// 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_usize(field: &str, line: usize, what: &str) -> Result<usize> {
    field.parse().map_err(|_| CliError::format(format!("{what} line {line}"), format!("expected an integer, got {field:?}")))
}

/// Edge list: one `u v` pair per line. An optional first line holding a
/// single integer gives the vertex count; otherwise it is one more than the
/// largest label.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text).peekable();
    let mut n = None;
    if let Some(&(no, first)) = lines.peek() {
        let fields: Vec<&str> = first.split_whitespace().collect();
        if fields.len() == 1 {
            n = Some(parse_usize(fields[0], no, "edge list")?);
            lines.next();
        }
    }
    let mut edges = Vec::new();
    for (no, line) in lines {
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(CliError::format(format!("edge list line {no}"), "expected `u v`"));
        }
        edges.push((parse_usize(fields[0], no, "edge list")?, parse_usize(fields[1], no, "edge list")?));
    }
    let n = match n {
        Some(n) => n,
        None if edges.is_empty() => return Err(CliError::format("edge list", "no edges and no vertex count")),
        None => edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0) + 1,
    };
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Hypergraph text: `v r`, then `r` lines of vertex indices.
pub fn parse_hypergraph(text: &str) -> Result<CliqueHypergraph> {
    let mut lines = content_lines(text);
    let (no, header) = lines.next().ok_or_else(|| CliError::format("hypergraph", "empty input"))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(CliError::format(format!("hypergraph line {no}"), "expected `v r`"));
    }
    let v = parse_usize(head[0], no, "hypergraph")?;
    let r = parse_usize(head[1], no, "hypergraph")?;
    let mut edges = Vec::with_capacity(r);
    for (no, line) in lines {
        let e = line.split_whitespace().map(|f| parse_usize(f, no, "hypergraph")).collect::<Result<Vec<_>>>()?;
        edges.push(e);
    }
    if edges.len() != r {
        return Err(CliError::format("hypergraph", format!("header announces {r} hyperedges, found {}", edges.len())));
    }
    let uniformity = edges.first().map_or(3, Vec::len);
    if edges.iter().any(|e| e.len() != uniformity) {
        return Err(CliError::format("hypergraph", "hyperedges must all have the same size"));
    }
    // a k-clique hypergraph has C(k,2) vertices per hyperedge
    let k = (3..).find(|k| k * (k - 1) / 2 >= uniformity).unwrap_or(3);
    Ok(CliqueHypergraph::new(v, edges, k)?)
}

pub fn write_hypergraph(h: &CliqueHypergraph) -> String {
    let mut out = format!("{} {}\n", h.vertex_count(), h.edge_count());
    for e in h.hyperedges() {
        let fields: Vec<String> = e.iter().map(usize::to_string).collect();
        out.push_str(&fields.join(" "));
        out.push('\n');
    }
    out
}

/// One graph6 string per non-empty line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    content_lines(text)
        .map(|(no, l)| parse_graph6(l).map_err(|e| CliError::format(format!("graph6 line {no}"), e.to_string())))
        .collect()
}

pub fn write_graph6_lines(graphs: &[Graph]) -> String {
    graphs.iter().map(|g| write_graph6(g) + "\n").collect()
}

/// `{"coeffs": ["1", "0", "0", "-3", ...]}`, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub coeffs: Vec<String>,
}

impl From<&Poly> for PolyJson {
    fn from(p: &Poly) -> Self {
        let coeffs = if p.is_zero() { vec!["0".into()] } else { p.coeffs().iter().map(BigInt::to_string).collect() };
        PolyJson { coeffs }
    }
}

impl PolyJson {
    pub fn to_poly(&self) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(|_| CliError::format("polynomial", format!("bad coefficient {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly::new(coeffs))
    }
}

/// One CSV row per class: canonical graph6, triangle count and the
/// space-separated coefficients of `Φ_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRow {
    pub graph6: String,
    pub triangles: usize,
    pub coeffs: String,
}

impl ClassRow {
    pub fn new(g: &Graph, phi: &Poly) -> Self {
        let coeffs: Vec<String> = PolyJson::from(phi).coeffs;
        ClassRow { graph6: write_graph6(g), triangles: g.triangle_count(), coeffs: coeffs.join(" ") }
    }
}

pub fn write_class_csv<W: Write>(w: W, rows: &[ClassRow]) -> Result<()> {
    let mut csv = csv::Writer::from_writer(w);
    for r in rows {
        csv.serialize(r)?;
    }
    csv.flush()?;
    Ok(())
}

pub fn read_class_csv(text: &str) -> Result<Vec<ClassRow>> {
    csv::Reader::from_reader(text.as_bytes()).deserialize().map(|r| r.map_err(CliError::from)).collect()
}

/// Resumable enumeration state: plain text `n m next_rank`. The classes
/// found so far sit next to it in `<path>.classes`, one graph6 per line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub n: usize,
    pub m: usize,
    pub next_rank: u64,
}

impl Checkpoint {
    pub fn classes_path(path: &Path) -> PathBuf {
        let mut p = path.as_os_str().to_owned();
        p.push(".classes");
        PathBuf::from(p)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let bad = || CliError::format("checkpoint", format!("expected `n m next_rank`, got {:?}", text.trim()));
        if fields.len() != 3 {
            return Err(bad());
        }
        Ok(Checkpoint {
            n: fields[0].parse().map_err(|_| bad())?,
            m: fields[1].parse().map_err(|_| bad())?,
            next_rank: fields[2].parse().map_err(|_| bad())?,
        })
    }

    /// Loads a checkpoint and its classes, or `None` if the file is absent.
    pub fn load(path: &Path) -> Result<Option<(Checkpoint, Vec<Graph>)>> {
        if !path.exists() {
            return Ok(None);
        }
        let cp = Checkpoint::parse(&fs::read_to_string(path).map_err(|e| CliError::io(path, e))?)?;
        let classes_path = Checkpoint::classes_path(path);
        let classes = match fs::read_to_string(&classes_path) {
            Ok(text) => parse_graph6_lines(&text)?,
            Err(e) if e.kind() == std::io::ErrorKind::NotFound && cp.next_rank == 0 => Vec::new(),
            Err(e) => return Err(CliError::io(classes_path, e)),
        };
        Ok(Some((cp, classes)))
    }

    /// Writes the classes, then the checkpoint, each via rename, so a crash
    /// never leaves a checkpoint ahead of its classes.
    pub fn save(&self, path: &Path, classes: &[Graph]) -> Result<()> {
        write_atomic(&Checkpoint::classes_path(path), &write_graph6_lines(classes))?;
        write_atomic(path, &format!("{} {} {}\n", self.n, self.m, self.next_rank))
    }
}

fn write_atomic(path: &Path, text: &str) -> Result<()> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, text).map_err(|e| CliError::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| CliError::io(path, e))
}

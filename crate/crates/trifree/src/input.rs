//! Graph sources: named constructions, graph6 strings, files and stdin.

use std::fs;
use std::io::Read;
use std::path::Path;

use trifree_core::corpus::{cycle, octahedron, petersen, wheel};
use trifree_core::graph::{candidate_g1, candidate_g2, candidate_g3, complete, complete_bipartite, mantel_plus_one};
use trifree_core::graph6::parse_graph6;
use trifree_core::Graph;

use crate::error::{CliError, Result};
use crate::formats::parse_edge_list;

/// Names accepted by [`construct`].
pub const CONSTRUCTIONS: &str =
    "mantel+1:N, g1, g2, g3, K:A,B (complete bipartite), K:N or complete:N, cycle:N, wheel:N, petersen, octahedron";

fn number(text: &str, name: &str) -> Result<usize> {
    text.trim().parse().map_err(|_| CliError::Usage(format!("bad number {text:?} in construction {name:?}")))
}

/// Builds a named graph, e.g. `mantel+1:6`, `g2` or `K:3,3`.
pub fn construct(name: &str) -> Result<Graph> {
    let (head, arg) = match name.split_once(':') {
        Some((h, a)) => (h, Some(a)),
        None => (name, None),
    };
    let g = match (head.to_ascii_lowercase().as_str(), arg) {
        ("g1", None) => candidate_g1(),
        ("g2", None) => candidate_g2(),
        ("g3", None) => candidate_g3(),
        ("petersen", None) => petersen(),
        ("octahedron", None) => octahedron(),
        ("mantel+1", Some(a)) => mantel_plus_one(number(a, name)?)?,
        ("complete", Some(a)) => complete(number(a, name)?)?,
        ("cycle", Some(a)) => cycle(number(a, name)?)?,
        ("wheel", Some(a)) => wheel(number(a, name)?)?,
        ("k", Some(a)) => match a.split_once(',') {
            Some((x, y)) => complete_bipartite(number(x, name)?, number(y, name)?)?,
            None => complete(number(a, name)?)?,
        },
        _ => return Err(CliError::Usage(format!("unknown construction {name:?}; known: {CONSTRUCTIONS}"))),
    };
    Ok(g)
}

/// Reads a graph file: a single graph6 line, or an edge list.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_graph_text(&text).map_err(|e| match e {
        CliError::Format { message, .. } => CliError::format(path.display().to_string(), message),
        other => other,
    })
}

/// A lone token that is not a number is graph6; anything else is an edge
/// list.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let tokens: Vec<&str> = text.split_whitespace().collect();
    if tokens.len() == 1 && tokens[0].parse::<usize>().is_err() {
        return parse_graph6(tokens[0]).map_err(|e| CliError::format("graph6", e.to_string()));
    }
    parse_edge_list(text)
}

/// `--graph VALUE`: a named construction, an existing file, or graph6.
pub fn resolve_graph_arg(value: &str) -> Result<Graph> {
    if let Ok(g) = construct(value) {
        return Ok(g);
    }
    let path = Path::new(value);
    if path.is_file() {
        return read_graph_file(path);
    }
    parse_graph6(value.trim()).map_err(|e| {
        CliError::Usage(format!("{value:?} is not a construction, a file or a graph6 string ({e})"))
    })
}

/// A single graph6 line from standard input.
pub fn read_stdin_graph() -> Result<Graph> {
    let mut text = String::new();
    std::io::stdin().read_to_string(&mut text).map_err(|e| CliError::io("<stdin>", e))?;
    let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| CliError::Usage("no graph6 on stdin".into()))?;
    parse_graph6(line).map_err(|e| CliError::format("stdin", e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use trifree_core::graph6::write_graph6;

    #[test]
    fn constructions() {
        assert_eq!(construct("mantel+1:6").unwrap(), mantel_plus_one(6).unwrap());
        assert_eq!(construct("K:3,3").unwrap(), complete_bipartite(3, 3).unwrap());
        assert_eq!(construct("K:4").unwrap(), complete(4).unwrap());
        assert_eq!(construct("complete:5").unwrap(), complete(5).unwrap());
        assert_eq!(construct("G2").unwrap(), candidate_g2());
        assert!(construct("mantel+1:x").is_err());
        assert!(construct("nope").is_err());
        assert!(construct("mantel+1:70").is_err());
    }

    #[test]
    fn graph_arguments() {
        let k4 = complete(4).unwrap();
        assert_eq!(resolve_graph_arg("C~").unwrap(), k4);
        assert_eq!(resolve_graph_arg("g1").unwrap(), candidate_g1());
        assert!(resolve_graph_arg("not a graph").is_err());
        assert_eq!(parse_graph_text(&format!("{}\n", write_graph6(&k4))).unwrap(), k4);
        assert_eq!(parse_graph_text("0 1\n1 2\n0 2\n").unwrap(), complete(3).unwrap());
    }
}

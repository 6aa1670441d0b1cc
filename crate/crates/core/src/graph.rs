//! Simple undirected graphs on at most 62 vertices.
//!
//! Each vertex owns one `u64` adjacency row. Edges are indexed by the
//! lexicographic order of the pairs `(u, v)`, `u < v`, that are present;
//! every other module (hypergraph vertices, subset masks, sampling order)
//! relies on this single convention.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 62;

#[inline]
const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with bits `lo..hi` set.
#[inline]
const fn range_mask(lo: usize, hi: usize) -> u64 {
    if hi <= lo {
        0
    } else {
        (u64::MAX >> (64 - (hi - lo))) << lo
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_VERTICES],
}

/// A triangle `u < v < w` together with the indices of its edges
/// `uv`, `uw` and `vw` (in that order).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub edges: [usize; 3],
}

/// Lookup from vertex pairs to lexicographic edge indices.
#[derive(Clone, Debug)]
pub struct EdgeIndexer {
    row_start: Vec<usize>,
    adj: [u64; MAX_VERTICES],
}

impl EdgeIndexer {
    /// Index of edge `{u, v}`, or `None` when it is not an edge.
    pub fn index(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        if u == v || v >= self.row_start.len() || self.adj[u] & bit(v) == 0 {
            return None;
        }
        let before = (self.adj[u] & range_mask(u + 1, v)).count_ones() as usize;
        Some(self.row_start[u] + before)
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { n, adj: [0; MAX_VERTICES] })
    }

    /// Builds a graph from an explicit edge list.
    ///
    /// Rejects out-of-range vertices, self-loops and repeated pairs
    /// (in either orientation).
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows. Rows must be symmetric, loop-free
    /// and confined to the low `rows.len()` bits.
    pub fn from_rows(rows: &[u64]) -> Result<Self> {
        let mut g = Graph::empty(rows.len())?;
        let n = rows.len();
        let mask = range_mask(0, n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if row & bit(u) != 0 {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u] = row;
        }
        for u in 0..n {
            let mut row = g.adj[u];
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                if g.adj[v] & bit(u) == 0 {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "adjacency not symmetric at ({u}, {v})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.adj[u] & bit(v) != 0 {
            return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        Ok(())
    }

    /// Copy of `self` with one more edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Neighbour bitset of `v`.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    /// Adjacency rows of the `n` vertices.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    /// Edges in canonical (lexicographic) order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut row = self.adj[u] & !range_mask(0, u + 1);
            while row != 0 {
                let v = row.trailing_zeros() as usize;
                row &= row - 1;
                out.push((u, v));
            }
        }
        out
    }

    pub fn edge_indexer(&self) -> EdgeIndexer {
        let mut row_start = Vec::with_capacity(self.n);
        let mut acc = 0;
        for u in 0..self.n {
            row_start.push(acc);
            acc += (self.adj[u] & !range_mask(0, u + 1)).count_ones() as usize;
        }
        EdgeIndexer { row_start, adj: self.adj }
    }

    /// Lexicographic index of edge `{u, v}`.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        self.edge_indexer().index(u, v)
    }

    /// All triangles, ordered by vertex triple.
    pub fn triangles(&self) -> Vec<Triangle> {
        let idx = self.edge_indexer();
        let mut out = Vec::new();
        for u in 0..self.n {
            let mut vs = self.adj[u] & !range_mask(0, u + 1);
            while vs != 0 {
                let v = vs.trailing_zeros() as usize;
                vs &= vs - 1;
                let mut ws = self.adj[u] & self.adj[v] & !range_mask(0, v + 1);
                while ws != 0 {
                    let w = ws.trailing_zeros() as usize;
                    ws &= ws - 1;
                    let e = |a, b| idx.index(a, b).expect("triangle edge present");
                    out.push(Triangle { vertices: [u, v, w], edges: [e(u, v), e(u, w), e(v, w)] });
                }
            }
        }
        out
    }

    /// Number of triangles, t(G).
    pub fn triangle_count(&self) -> usize {
        let mut t = 0;
        for u in 0..self.n {
            let mut vs = self.adj[u] & !range_mask(0, u + 1);
            while vs != 0 {
                let v = vs.trailing_zeros() as usize;
                vs &= vs - 1;
                t += (self.adj[u] & self.adj[v] & !range_mask(0, v + 1)).count_ones() as usize;
            }
        }
        t
    }

    /// Vertex sets (ascending) of all copies of `K_k`, in lexicographic order.
    pub fn cliques(&self, k: usize) -> Vec<Vec<usize>> {
        fn extend(g: &Graph, k: usize, cand: u64, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                cur.push(v);
                extend(g, k, cand & g.adj[v] & !range_mask(0, v + 1), cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if k == 0 || k > self.n {
            return out;
        }
        let mut cur = Vec::with_capacity(k);
        extend(self, k, range_mask(0, self.n), &mut cur, &mut out);
        out
    }

    /// Relabels vertices: vertex `perm[i]` of `self` becomes vertex `i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::InvalidArgument(alloc::format!(
                "permutation of length {} for {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in perm.iter().enumerate() {
            if v >= self.n || pos[v] != usize::MAX {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
            pos[v] = i;
        }
        let mut g = Graph::empty(self.n)?;
        for (i, &v) in perm.iter().enumerate() {
            let mut row = self.adj[v];
            while row != 0 {
                let w = row.trailing_zeros() as usize;
                row &= row - 1;
                g.adj[i] |= bit(pos[w]);
            }
        }
        Ok(g)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

/// The complete graph `K_n`.
pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    for u in 0..n {
        g.adj[u] = range_mask(0, n) & !bit(u);
    }
    Ok(g)
}

/// `K_{a,b}` with part A = `0..a` and part B = `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidArgument("both parts must be non-empty".into()));
    }
    let n = a.saturating_add(b);
    let mut g = Graph::empty(n)?;
    let (pa, pb) = (range_mask(0, a), range_mask(a, n));
    for u in 0..a {
        g.adj[u] = pb;
    }
    for v in a..n {
        g.adj[v] = pa;
    }
    Ok(g)
}

/// `K_{⌊n/2⌋,⌈n/2⌉}` plus the edge between the first two vertices of the
/// larger part B. Has `⌊n²/4⌋ + 1` edges and exactly `⌊n/2⌋` triangles.
pub fn mantel_plus_one(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidArgument(alloc::format!("mantel_plus_one needs n >= 3, got {n}")));
    }
    let a = n / 2;
    complete_bipartite(a, n - a)?.with_edge(a, a + 1)
}

/// `K_{3,3}` plus the two-edge star `{3,4}, {3,5}` inside part B.
pub fn candidate_g1() -> Graph {
    let g = complete_bipartite(3, 3).expect("fixed size");
    Graph::from_edges(6, &[g.edges(), alloc::vec![(3, 4), (3, 5)]].concat()).expect("fixed graph")
}

/// `K_{3,3}` plus one edge in each part.
pub fn candidate_g2() -> Graph {
    let g = complete_bipartite(3, 3).expect("fixed size");
    Graph::from_edges(6, &[g.edges(), alloc::vec![(0, 1), (3, 4)]].concat()).expect("fixed graph")
}

/// `K_{2,4}` plus the path `2-3-4-5` inside the part of size 4.
pub fn candidate_g3() -> Graph {
    let g = complete_bipartite(2, 4).expect("fixed size");
    Graph::from_edges(6, &[g.edges(), alloc::vec![(2, 3), (3, 4), (4, 5)]].concat())
        .expect("fixed graph")
}

/// The three 6-vertex, 11-edge candidates compared at two edges above the
/// Mantel threshold.
pub fn six_vertex_candidates() -> (Graph, Graph, Graph) {
    (candidate_g1(), candidate_g2(), candidate_g3())
}

//! Canonical forms for isomorphism dedup of small graphs.
//!
//! The canonical form is the graph6 string of the relabeling that maximises
//! the column-ordered upper-triangle bit string, among labelings that list
//! the colour classes of a stable colour refinement in colour order. The
//! refinement only uses label-free information, so the maximum is an
//! isomorphism invariant. Branches are cut when the partial string falls
//! below the best found, and when the candidate is a twin of a sibling
//! already explored (swapping twins is an automorphism fixing the prefix).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANON_MAX_VERTICES: usize = 10;

/// Stable vertex colouring; colours are ranks `0..k` of sorted signatures.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut classes = usize::MAX;
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = bits(g.neighbors(v)).map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let k = ranks.len();
        colour = next;
        if k == classes {
            return colour;
        }
        classes = k;
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let v = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(v)
        }
    })
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    /// Colour required at each position.
    slot_colour: Vec<usize>,
    colour: Vec<usize>,
    perm: Vec<usize>,
    used: u64,
    cols: Vec<u64>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    generation: u64,
}

impl Search<'_> {
    /// Column `j` of the relabeled matrix when `v` takes position `j`;
    /// position 0 maps to the most significant of the `j` bits.
    fn column(&self, j: usize, v: usize) -> u64 {
        let row = self.g.neighbors(v);
        let mut c = 0u64;
        for i in 0..j {
            c = (c << 1) | ((row >> self.perm[i]) & 1);
        }
        c
    }

    fn twins(&self, u: usize, w: usize) -> bool {
        let (nu, nw) = (self.g.neighbors(u), self.g.neighbors(w));
        nu & !(1 << w) == nw & !(1 << u)
    }

    /// `tight`: the prefix before position `j` equals the best prefix.
    fn run(&mut self, j: usize, mut tight: bool) {
        if j == self.n {
            if !tight || self.best.is_none() {
                self.best = Some((self.cols.clone(), self.perm.clone()));
                self.generation += 1;
            }
            return;
        }
        let want = self.slot_colour[j];
        let mut tried: Vec<usize> = Vec::new();
        for v in 0..self.n {
            if self.used & (1 << v) != 0 || self.colour[v] != want {
                continue;
            }
            if tried.iter().any(|&u| self.twins(u, v)) {
                continue;
            }
            tried.push(v);
            let c = self.column(j, v);
            let child_tight = match &self.best {
                Some((best, _)) if tight => {
                    if c < best[j] {
                        continue;
                    }
                    c == best[j]
                }
                Some(_) => false,
                None => false,
            };
            self.perm.push(v);
            self.cols.push(c);
            self.used |= 1 << v;
            let gen = self.generation;
            self.run(j + 1, child_tight);
            self.used &= !(1 << v);
            self.cols.pop();
            self.perm.pop();
            if self.generation != gen {
                // the new best extends the current prefix
                tight = true;
            }
        }
    }
}

/// Canonical relabeling: position `i` of the result holds original vertex
/// `perm[i]`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    let n = g.vertex_count();
    if n > CANON_MAX_VERTICES {
        return Err(Error::LimitExceeded {
            what: "vertex count for canonical form",
            value: n,
            limit: CANON_MAX_VERTICES,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let colour = refine(g);
    let mut slot_colour = colour.clone();
    slot_colour.sort_unstable();
    let mut s = Search {
        g,
        n,
        slot_colour,
        colour,
        perm: Vec::with_capacity(n),
        used: 0,
        cols: vec![0; 0],
        best: None,
        generation: 0,
    };
    s.run(0, false);
    Ok(s.best.expect("at least one labeling").1)
}

/// Canonically relabeled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    g.relabel(&canonical_labeling(g)?)
}

/// Canonical byte string: equal for two graphs iff they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(graph6::encode(&canonical_graph(g)?))
}

//! graph6 encoding, short form only (n ≤ 62).
//!
//! Header byte `n + 63`, then the upper triangle of the adjacency matrix
//! in column order (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per
//! byte, each byte offset by 63.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn write_graph6(g: &Graph) -> String {
    let bytes = encode(g);
    String::from_utf8(bytes).expect("graph6 is ASCII")
}

/// graph6 bytes of `g`.
pub fn encode(g: &Graph) -> Vec<u8> {
    let n = g.vertex_count();
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.neighbors(j);
        for i in 0..j {
            acc = (acc << 1) | ((col >> i) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    out
}

/// Parses one graph6 string. Surrounding whitespace and an optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim().as_bytes();
    if let Some(rest) = s.strip_prefix(b">>graph6<<") {
        s = rest;
    }
    let (&head, body) = s.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(alloc::format!("invalid header byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    if n > MAX_VERTICES {
        return Err(Error::Graph6(alloc::format!(
            "only the short form (n <= {MAX_VERTICES}) is supported"
        )));
    }
    let want = data_len(n);
    if body.len() < want {
        return Err(Error::Graph6(alloc::format!(
            "truncated: expected {want} data bytes, found {}",
            body.len()
        )));
    }
    if body.len() > want {
        return Err(Error::Graph6(alloc::format!(
            "trailing data: expected {want} data bytes, found {}",
            body.len()
        )));
    }
    let mut rows = [0u64; MAX_VERTICES];
    let mut bits = body.iter().flat_map(|&b| {
        let v = b.wrapping_sub(63);
        (0..6).rev().map(move |k| (b, (v >> k) & 1))
    });
    for j in 1..n {
        for i in 0..j {
            let (b, x) = bits.next().expect("length checked");
            if !(63..=126).contains(&b) {
                return Err(Error::Graph6(alloc::format!("invalid data byte {b:#04x}")));
            }
            if x == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    for (b, x) in bits {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(alloc::format!("invalid data byte {b:#04x}")));
        }
        if x != 0 {
            return Err(Error::Graph6("non-zero padding bits".into()));
        }
    }
    Graph::from_rows(&rows[..n])
}

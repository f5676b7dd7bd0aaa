//! graph6 / digraph6 codecs and DOT output.
//!
//! The codecs follow the published byte encodings bit-exactly: sizes are
//! written in the shortest form, padding bits must be zero, and digraph6
//! inputs must decode to antisymmetric loop-free digraphs (that last check
//! is ours, not the format's).

use crate::constructions::Label;
use crate::error::{Error, Result};
use crate::graph::{OrientedGraph, UndirectedGraph};

const GRAPH6_HEADER: &str = ">>graph6<<";
const DIGRAPH6_HEADER: &str = ">>digraph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    let err = || Error::Format("truncated size field".into());
    let first = *bytes.first().ok_or_else(err)?;
    if first != b'~' {
        check_byte(first)?;
        return Ok(((first - 63) as usize, 1));
    }
    let second = *bytes.get(1).ok_or_else(err)?;
    if second != b'~' {
        if bytes.len() < 4 {
            return Err(err());
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            check_byte(b)?;
            n = n << 6 | (b - 63) as usize;
        }
        return Ok((n, 4));
    }
    if bytes.len() < 8 {
        return Err(err());
    }
    let mut n = 0usize;
    for &b in &bytes[2..8] {
        check_byte(b)?;
        n = n << 6 | (b - 63) as usize;
    }
    Ok((n, 8))
}

fn check_byte(b: u8) -> Result<()> {
    if !(63..=126).contains(&b) {
        return Err(Error::Format(format!("byte {b} outside the printable range")));
    }
    Ok(())
}

fn encode_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - i);
            }
        }
        out.push(63 + value);
    }
}

fn decode_bits(bytes: &[u8], count: usize) -> Result<Vec<bool>> {
    let needed = count.div_ceil(6);
    if bytes.len() != needed {
        return Err(Error::Format(format!(
            "expected {needed} data bytes, got {}",
            bytes.len()
        )));
    }
    let mut bits = Vec::with_capacity(needed * 6);
    for &b in bytes {
        check_byte(b)?;
        let value = b - 63;
        for i in 0..6 {
            bits.push(value >> (5 - i) & 1 == 1);
        }
    }
    if bits[count..].iter().any(|&b| b) {
        return Err(Error::Format("nonzero padding bits".into()));
    }
    bits.truncate(count);
    Ok(bits)
}

/// Writes a graph in graph6: the size field followed by the upper triangle
/// of the adjacency matrix in column order.
pub fn write_graph6(g: &UndirectedGraph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    encode_bits(&bits, &mut out);
    String::from_utf8(out).expect("graph6 bytes are printable")
}

/// Parses graph6, with or without the optional `>>graph6<<` marker.
pub fn parse_graph6(text: &str) -> Result<UndirectedGraph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, consumed) = decode_size(bytes)?;
    let pairs = n * n.saturating_sub(1) / 2;
    let bits = decode_bits(&bytes[consumed..], pairs)?;
    let mut edges = Vec::new();
    let mut idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    UndirectedGraph::new(n, edges)
}

/// Writes an oriented graph in digraph6: `&`, the size field, then the full
/// adjacency matrix in row order.
pub fn write_digraph6(d: &OrientedGraph) -> String {
    let n = d.order();
    let mut out = vec![b'&'];
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            bits.push(d.has_arc(i, j));
        }
    }
    encode_bits(&bits, &mut out);
    String::from_utf8(out).expect("digraph6 bytes are printable")
}

/// Parses digraph6. Inputs whose matrix carries a loop or an opposite arc
/// pair are rejected (the orientation types hold antisymmetric digraphs
/// only); the opposite-arc case surfaces as `Error::OppositeArcs`.
pub fn parse_digraph6(text: &str) -> Result<OrientedGraph> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(DIGRAPH6_HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let rest = bytes
        .strip_prefix(b"&")
        .ok_or_else(|| Error::Format("digraph6 must start with '&'".into()))?;
    let (n, consumed) = decode_size(rest)?;
    let bits = decode_bits(&rest[consumed..], n * n)?;
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if bits[i * n + j] {
                arcs.push((i, j));
            }
        }
    }
    OrientedGraph::new(n, arcs)
}

/// DOT rendering of an undirected graph.
pub fn write_dot_undirected(g: &UndirectedGraph, labels: Option<&[Label]>) -> String {
    let mut out = String::from("graph {\n");
    push_nodes(&mut out, g.order(), labels);
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push('}');
    out
}

/// DOT rendering of an oriented graph, with structured-target labels when
/// provided.
pub fn write_dot_oriented(d: &OrientedGraph, labels: Option<&[Label]>) -> String {
    let mut out = String::from("digraph {\n");
    push_nodes(&mut out, d.order(), labels);
    for (u, v) in d.arcs() {
        out.push_str(&format!("  {u} -> {v};\n"));
    }
    out.push('}');
    out
}

fn push_nodes(out: &mut String, n: usize, labels: Option<&[Label]>) {
    match labels {
        Some(labels) => {
            for (v, label) in labels.iter().enumerate() {
                out.push_str(&format!("  {v} [label=\"{label}\"];\n"));
            }
        }
        None => {
            for v in 0..n {
                out.push_str(&format!("  {v};\n"));
            }
        }
    }
}

//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed six bits per printable byte.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn err(position: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { position, reason: reason.into() }
}

fn sextet(bytes: &[u8], pos: usize) -> Result<u8> {
    match bytes.get(pos) {
        Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
        Some(&b) => Err(err(pos, format!("byte {b:#04x} is outside the graph6 range 63..=126"))),
        None => Err(err(pos, "unexpected end of input")),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are accepted.
pub fn decode(line: &str) -> Result<Graph> {
    let trimmed = line.trim();
    let offset = if trimmed.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &trimmed.as_bytes()[offset..];
    if bytes.is_empty() {
        return Err(err(offset, "empty graph6 string"));
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let mut n = 0usize;
        for k in 1..=3 {
            n = (n << 6) | sextet(bytes, k)? as usize;
        }
        (n, 4)
    } else {
        let mut n = 0usize;
        for k in 2..=7 {
            n = (n << 6) | sextet(bytes, k)? as usize;
        }
        (n, 8)
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            offset + bytes.len().min(expected),
            format!("expected {expected} bytes for {n} vertices, found {}", bytes.len()),
        ));
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sextet(bytes, pos).map_err(|e| shift_err(e, offset))?;
                pos += 1;
            }
            if (current >> (5 - k % 6)) & 1 == 1 {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    if k % 6 != 0 && current & ((1u8 << (6 - k % 6)) - 1) != 0 {
        return Err(err(offset + pos - 1, "nonzero padding bits"));
    }
    Ok(g)
}

fn shift_err(e: Error, offset: usize) -> Error {
    match e {
        Error::Graph6 { position, reason } => Error::Graph6 { position: position + offset, reason },
        other => other,
    }
}

/// Parses a file of graph6 lines, skipping blank lines.
pub fn decode_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode).collect()
}

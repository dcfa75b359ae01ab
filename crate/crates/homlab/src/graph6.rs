//! graph6 encoding of simple graphs.
//!
//! Layout: `N(n)` followed by the upper triangle read column by column
//! (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), six bits per byte, each byte offset
//! by 63. `N(n)` is one byte for `n <= 62`, `~` plus three bytes for
//! `n <= 258047`, and `~~` plus six bytes beyond that.

use homlab_core::SimpleGraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {0:#04x} outside the graph6 range 63..=126")]
    BadByte(u8),
    #[error("graph6 string truncated: expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("nonzero padding bits")]
    Padding,
}

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn encode(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(&mut out, n);
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn sextet(b: u8) -> Result<usize, Graph6Error> {
    if (63..=126).contains(&b) {
        Ok((b - 63) as usize)
    } else {
        Err(Graph6Error::BadByte(b))
    }
}

/// Accepts an optional `>>graph6<<` header and surrounding whitespace.
pub fn decode(s: &str) -> Result<SimpleGraph, Graph6Error> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let truncated = |expected| Graph6Error::Length { expected, found: bytes.len() };
    let (n, body) = if bytes[0] != 126 {
        (sextet(bytes[0])?, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(truncated(8));
        }
        let n = bytes[2..8].iter().try_fold(0usize, |acc, &b| Ok::<_, Graph6Error>(acc << 6 | sextet(b)?))?;
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(truncated(4));
        }
        let n = bytes[1..4].iter().try_fold(0usize, |acc, &b| Ok::<_, Graph6Error>(acc << 6 | sextet(b)?))?;
        (n, &bytes[4..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::Length { expected, found: body.len() });
    }
    let values: Vec<usize> = body.iter().map(|&b| sextet(b)).collect::<Result<_, _>>()?;
    let bit = |k: usize| (values[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (bits..expected * 6).any(bit) {
        return Err(Graph6Error::Padding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::build(n, &edges).expect("graph6 edges are in range and loop-free"))
}

//! graph6 encoding (one graph per ASCII line).
//!
//! The size header is one byte for `n < 63` and `126` followed by three
//! 6-bit bytes for `63 <= n < 258048`. The body packs the upper triangle
//! column by column: `x(0,1), x(0,2), x(1,2), x(0,3), ...`, six bits per
//! byte, zero-padded.

use crate::error::Graph6Error;
use crate::graph::Graph;

const LONG_FORM_LIMIT: usize = 258_048;

/// Encodes `g` as a graph6 line (no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n < LONG_FORM_LIMIT, "graph6 long form covers n < 258048");
    let mut out: Vec<u8> = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
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

/// Decodes one graph6 line. Surrounding whitespace is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let mut vals = Vec::with_capacity(bytes.len());
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { byte, offset });
        }
        vals.push(byte - 63);
    }

    let (n, body) = if vals[0] < 63 {
        (vals[0] as usize, &vals[1..])
    } else {
        if vals.len() < 4 || vals[1] == 63 {
            // vals[1] == 63 would introduce the 8-byte form (n >= 258048).
            return Err(Graph6Error::BadHeader);
        }
        let n = ((vals[1] as usize) << 12) | ((vals[2] as usize) << 6) | vals[3] as usize;
        if n < 63 {
            return Err(Graph6Error::BadHeader);
        }
        (n, &vals[4..])
    };

    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    let pad = expected * 6 - nbits;
    if pad > 0 && body[expected - 1] & ((1u8 << pad) - 1) != 0 {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut g = Graph::try_new(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            if body[bit / 6] >> (5 - bit % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            bit += 1;
        }
    }
    Ok(g)
}

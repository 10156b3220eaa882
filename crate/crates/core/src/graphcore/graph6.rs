//! graph6 text encoding and the one-graph-per-line corpus format.
//!
//! Layout: a size header (`n + 63` for `n < 63`, otherwise `~` followed by
//! three 6-bit bytes), then the upper triangle of the adjacency matrix in
//! column-major order `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per
//! byte with the high bit first and each byte offset by 63.

use std::io::{BufRead, Write};

use super::graph::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n < 63 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let rows = g.rows();
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for row in &rows[..j] {
            chunk = (chunk << 1) | ((row >> j) & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset,
        reason: reason.to_string(),
    };
    let sixbits = |i: usize| -> Result<u8> {
        match bytes.get(i) {
            Some(&b) if (63..=126).contains(&b) => Ok(b - 63),
            Some(_) => Err(err(i, "byte outside the printable range 63..=126")),
            None => Err(err(i, "unexpected end of input")),
        }
    };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.get(1) == Some(&126) {
            return Err(err(1, "8-byte size header not supported"));
        }
        let mut n = 0usize;
        for i in 1..4 {
            n = (n << 6) | sixbits(i)? as usize;
        }
        (n, 4)
    } else {
        (sixbits(0)? as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(err(0, &format!("{n} vertices exceeds the {MAX_VERTICES}-vertex limit")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = pos + bits.div_ceil(6);
    if bytes.len() != expected {
        return Err(err(
            bytes.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, got {}", bytes.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    let mut current = 0u8;
    for j in 1..n {
        for i in 0..j {
            if k % 6 == 0 {
                current = sixbits(pos)?;
                pos += 1;
            }
            if (current >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 && current & ((1 << (6 - bits % 6)) - 1) != 0 {
        return Err(err(pos - 1, "nonzero padding bits"));
    }
    Graph::new(n, &edges)
}

/// Reads a corpus: one graph6 string per line; blank lines and lines
/// starting with `#` are skipped. An optional `>>graph6<<` prefix is accepted.
pub fn read_corpus<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
        let g = decode(line).map_err(|e| match e {
            Error::Graph6 { offset, reason } => Error::Graph6 {
                offset,
                reason: format!("line {}: {reason}", lineno + 1),
            },
            other => other,
        })?;
        graphs.push(g);
    }
    Ok(graphs)
}

pub fn write_corpus<W: Write>(mut writer: W, graphs: &[Graph]) -> Result<()> {
    for g in graphs {
        writeln!(writer, "{}", encode(g))?;
    }
    Ok(())
}

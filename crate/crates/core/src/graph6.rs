//! graph6 text encoding.
//!
//! Only the one-byte size header is supported, so `n <= 62`. The body is the
//! upper triangle of the adjacency matrix in column order
//! `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into 6-bit groups that are
//! each offset by 63.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{vertex_cap, Graph};

/// Largest vertex count expressible with a one-byte size header.
pub const MAX_GRAPH6_VERTICES: usize = 62;

/// Optional stream header written by some gtools programs.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("graph6 supports at most {MAX_GRAPH6_VERTICES} vertices here (multi-byte size headers are not implemented), got {0}")]
    TooLarge(usize),
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("graph6 body for {n} vertices needs {expected} characters, found {found}")]
    BadLength {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("nonzero padding bits in the last graph6 character")]
    NonzeroPadding,
    #[error("graph6 header declares {n} vertices, above the vertex cap of {cap}")]
    ExceedsCap { n: usize, cap: usize },
    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Graph6Error>,
    },
    #[error("read failed: {0}")]
    Io(String),
}

/// How decoding treats nonzero padding bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Padding {
    #[default]
    Strict,
    /// Ignore the bits and log a warning.
    Lenient,
}

/// Number of body characters for `n` vertices.
pub fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let col = g.row(j);
        for i in 0..j {
            acc = acc << 1 | (col >> i & 1) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    decode_graph6_with(text, Padding::Strict)
}

pub fn decode_graph6_with(text: &str, padding: Padding) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadChar { offset, byte });
        }
    }
    if header == 126 {
        return Err(Graph6Error::TooLarge(MAX_GRAPH6_VERTICES + 1));
    }
    let n = (header - 63) as usize;
    if n > vertex_cap() {
        return Err(Graph6Error::ExceedsCap {
            n,
            cap: vertex_cap(),
        });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: body.len(),
        });
    }
    let bits = n * n.saturating_sub(1) / 2;
    if !bits.is_multiple_of(6) {
        let last = body[expected - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1u8 << pad) - 1) != 0 {
            match padding {
                Padding::Strict => return Err(Graph6Error::NonzeroPadding),
                Padding::Lenient => log::warn!("ignoring nonzero graph6 padding in {text:?}"),
            }
        }
    }

    let mut g = Graph::empty(n).expect("n checked against cap");
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - 63;
            if group >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j, true);
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Reads graph6 lines, skipping blank lines and any `>>graph6<<` header.
pub fn read_graph6_lines<R: BufRead>(reader: R) -> Graph6Lines<R> {
    Graph6Lines {
        lines: reader.lines(),
        line: 0,
        padding: Padding::Strict,
    }
}

pub struct Graph6Lines<R> {
    lines: io::Lines<R>,
    line: usize,
    padding: Padding,
}

impl<R> Graph6Lines<R> {
    pub fn padding(mut self, padding: Padding) -> Self {
        self.padding = padding;
        self
    }
}

impl<R: BufRead> Iterator for Graph6Lines<R> {
    type Item = Result<Graph, Graph6Error>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            let raw = match self.lines.next()? {
                Ok(l) => l,
                Err(e) => return Some(Err(Graph6Error::Io(e.to_string()))),
            };
            self.line += 1;
            let atom = strip_header(raw.trim_end_matches(['\r', '\n']));
            if atom.is_empty() {
                continue;
            }
            return Some(
                decode_graph6_with(atom, self.padding).map_err(|e| Graph6Error::Line {
                    line: self.line,
                    source: Box::new(e),
                }),
            );
        }
    }
}

/// Drops a leading `>>graph6<<` marker if present.
pub fn strip_header(line: &str) -> &str {
    line.strip_prefix(GRAPH6_HEADER).unwrap_or(line)
}

/// Writes one newline-terminated atom per graph.
pub fn write_graph6_lines<'a, W, I>(mut out: W, graphs: I) -> io::Result<()>
where
    W: Write,
    I: IntoIterator<Item = &'a Graph>,
{
    for g in graphs {
        let atom = encode_graph6(g).map_err(|e| io::Error::new(io::ErrorKind::InvalidInput, e))?;
        writeln!(out, "{atom}")?;
    }
    out.flush()
}

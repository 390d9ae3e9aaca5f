//! graph6 and plain edge-list encodings.
//!
//! graph6: the vertex count as `63 + n` (or `~` followed by 18 bits, or `~~`
//! followed by 36 bits), then the upper-triangle bits `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...` packed big-endian six to a byte, each byte offset by 63
//! and the last one zero-padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &[u8] = b">>graph6<<";

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        msg: msg.into(),
    }
}

/// Decode a single graph6 record. A trailing newline is tolerated; anything
/// else after the declared bit field is an error.
pub fn parse_graph6(line: &[u8]) -> Result<Graph> {
    let mut bytes = line.strip_prefix(HEADER).unwrap_or(line);
    while let [rest @ .., b'\n' | b'\r'] = bytes {
        bytes = rest;
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!(
            "byte {b} outside the printable range 63..=126"
        )));
    }
    let (n, body) = match bytes {
        [] => return Err(parse_err("empty record")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(parse_err("truncated 36-bit vertex count"));
            }
            (read_sextets(&rest[..6]), &rest[6..])
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(parse_err("truncated 18-bit vertex count"));
            }
            (read_sextets(&rest[..3]), &rest[3..])
        }
        [first, rest @ ..] => (u64::from(first - 63), rest),
    };
    if n > MAX_VERTICES as u64 {
        return Err(Error::TooManyVertices(n as usize));
    }
    let n = n as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let want = bits.div_ceil(6);
    if body.len() != want {
        return Err(parse_err(format!(
            "expected {want} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_sextets(bytes: &[u8]) -> u64 {
    bytes.iter().fold(0, |acc, &b| acc << 6 | u64::from(b - 63))
}

/// Encode `g` as graph6 (no header, no newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + (n >> shift & 0x3f) as u8);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

/// Records of a graph6 stream, one per line; blank lines and lines starting
/// with `#` are skipped. Items carry their 1-based line number.
pub struct Graph6Reader<R> {
    inner: R,
    line_no: usize,
    buf: Vec<u8>,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(inner: R) -> Self {
        Graph6Reader {
            inner,
            line_no: 0,
            buf: Vec::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    type Item = (usize, Result<Graph>);

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            self.line_no += 1;
            match self.inner.read_until(b'\n', &mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => {
                    return Some((
                        self.line_no,
                        Err(Error::Parse {
                            line: self.line_no,
                            msg: e.to_string(),
                        }),
                    ))
                }
            }
            let trimmed = self.buf.trim_ascii();
            if trimmed.is_empty() || trimmed.starts_with(b"#") {
                continue;
            }
            let line = self.line_no;
            let parsed = parse_graph6(trimmed).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line, msg },
                other => other,
            });
            return Some((line, parsed));
        }
    }
}

/// Parse every record of an in-memory graph6 stream.
pub fn parse_graph6_stream(text: &str) -> Result<Vec<Graph>> {
    Graph6Reader::new(text.as_bytes()).map(|(_, g)| g).collect()
}

/// An edge list together with the duplicate edges that were collapsed.
#[derive(Debug, Clone)]
pub struct ParsedEdgeList {
    pub graph: Graph,
    pub duplicates: Vec<(usize, usize)>,
}

/// Parse `"n m"` followed by `m` lines `"u v"` (0-indexed). Blank lines and
/// `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<ParsedEdgeList> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_pair(hline, header)?;
    let mut g = Graph::empty(n).map_err(|_| Error::Parse {
        line: hline,
        msg: format!("{n} vertices exceeds the 64-vertex limit"),
    })?;
    let mut duplicates = Vec::new();
    let mut seen = 0;
    for (line, text) in lines {
        let [u, v] = parse_pair(line, text)?;
        if u >= n || v >= n {
            return Err(Error::Parse {
                line,
                msg: format!("vertex {} out of range for n = {n}", u.max(v)),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line,
                msg: format!("loop at vertex {u}"),
            });
        }
        if g.has_edge(u, v) {
            duplicates.push((u.min(v), u.max(v)));
        }
        g.set_edge(u, v);
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(ParsedEdgeList {
        graph: g,
        duplicates,
    })
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let mut it = text.split_whitespace().map(str::parse::<usize>);
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected two non-negative integers, got {text:?}"),
        }),
    }
}

/// `"n m"` then one sorted `"u v"` line per edge, each newline-terminated.
pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

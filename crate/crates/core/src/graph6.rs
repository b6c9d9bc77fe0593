//! The graph6 text encoding: a size field followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use thiserror::Error;

use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;
/// Largest order the single-byte size form can carry.
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;
const LONG_MAX: usize = 68_719_476_735;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range")]
    BadByte { offset: usize, byte: u8 },
    #[error("size field truncated at offset {offset}")]
    TruncatedSize { offset: usize },
    #[error("{n} vertices need {expected} adjacency bytes after offset {offset}, found {found}")]
    Length { n: usize, offset: usize, expected: usize, found: usize },
    #[error("order {0} is too large to encode")]
    TooLarge(usize),
}

fn value(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (BIAS..=BIAS + 63).contains(&b) => Ok(b - BIAS),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::TruncatedSize { offset }),
    }
}

/// Reads `count` six-bit groups starting at `offset` as one big-endian number.
fn wide(bytes: &[u8], offset: usize, count: usize) -> Result<usize, Graph6Error> {
    (offset..offset + count).try_fold(0usize, |acc, i| Ok((acc << 6) | value(bytes, i)? as usize))
}

/// Decodes one graph6 line. A leading `>>graph6<<` header and surrounding
/// whitespace are ignored; byte offsets in errors count from the first byte
/// after them.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let line = line.trim();
    let body = line.strip_prefix(HEADER).unwrap_or(line).as_bytes();
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (n, start) = if body[0] != b'~' {
        (value(body, 0)? as usize, 1)
    } else if body.get(1) != Some(&b'~') {
        (wide(body, 1, 3)?, 4)
    } else {
        (wide(body, 2, 6)?, 8)
    };

    let bits = n as u128 * (n as u128).saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let found = body.len() - start;
    if found as u128 != expected {
        let expected = usize::try_from(expected).unwrap_or(usize::MAX);
        return Err(Graph6Error::Length { n, offset: start, expected, found });
    }
    let mut g = Graph::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = value(body, start + k / 6)?;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j).expect("indices below n");
            }
            k += 1;
        }
    }
    // padding bits are still range-checked
    for offset in start + k.div_ceil(6)..body.len() {
        value(body, offset)?;
    }
    Ok(g)
}

/// Encodes `g` in canonical graph6 form, without a header.
pub fn encode_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_wide = |out: &mut Vec<u8>, x: usize, count: usize| {
        for i in (0..count).rev() {
            out.push(((x >> (6 * i)) & 63) as u8 + BIAS);
        }
    };
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        push_wide(&mut out, n, 3);
    } else if n <= LONG_MAX {
        out.extend(b"~~");
        push_wide(&mut out, n, 6);
    } else {
        return Err(Graph6Error::TooLarge(n));
    }
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                (acc, filled) = (0, 0);
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(parse_graph6("C~").unwrap(), Graph::complete(4));
        assert_eq!(parse_graph6("D??").unwrap(), Graph::new(5));
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), Graph::complete(4));
        // path 0-1-2: bits (0,1)=1 (0,2)=0 (1,2)=1 -> 101000
        assert_eq!(parse_graph6("Bg").unwrap(), Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::Length { n: 4, offset: 1, expected: 1, found: 2 }));
        assert_eq!(parse_graph6("D ?"), Err(Graph6Error::BadByte { offset: 1, byte: b' ' }));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::TruncatedSize { offset: 2 }));
        assert_eq!(parse_graph6("\x7f"), Err(Graph6Error::BadByte { offset: 0, byte: 0x7f }));
    }

    #[test]
    fn medium_size_form_round_trips() {
        let mut g = Graph::new(70);
        for v in 0..69 {
            g.add_edge(v, v + 1).unwrap();
        }
        let text = encode_graph6(&g).unwrap();
        assert!(text.starts_with("~?@E"));
        assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn all_graphs_on_four_vertices_round_trip() {
        let pairs: Vec<(usize, usize)> = (1..4).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        for mask in 0u32..64 {
            let g = Graph::from_edges(4, pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e))
                .unwrap();
            let text = encode_graph6(&g).unwrap();
            assert_eq!(parse_graph6(&text).unwrap(), g);
            assert_eq!(encode_graph6(&parse_graph6(&text).unwrap()).unwrap(), text);
        }
    }
}

//! graph6 and plain edge-list interchange.

use super::{Graph, GraphError};

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Standard graph6: size prefix, then the upper triangle column by column
/// (`x(0,1) x(0,2) x(1,2) x(0,3) ...`), six bits per printable byte.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n < 258_048 {
        out.push(126);
        push_sextets(&mut out, n as u64, 3);
    } else {
        out.push(126);
        out.push(126);
        push_sextets(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

fn push_sextets(out: &mut Vec<u8>, value: u64, count: usize) {
    for k in (0..count).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + 63);
    }
}

pub fn graph6_decode(text: &str) -> Result<Graph, GraphError> {
    let trimmed = text.trim_end_matches(['\n', '\r']);
    let (start, body) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (GRAPH6_HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    let err = |offset: usize, reason: &str| GraphError::Graph6 {
        offset: start + offset,
        reason: reason.to_string(),
    };
    if body.is_empty() {
        return Err(err(0, "empty input"));
    }
    if let Some(i) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(i, "byte outside the printable range 63..=126"));
    }
    let sextets = |from: usize, count: usize| -> Result<u64, GraphError> {
        if body.len() < from + count {
            return Err(err(body.len(), "truncated vertex count"));
        }
        Ok(body[from..from + count]
            .iter()
            .fold(0u64, |acc, &b| acc << 6 | (b - 63) as u64))
    };
    let (n, header_len) = if body[0] != 126 {
        ((body[0] - 63) as u64, 1)
    } else if body.len() > 1 && body[1] == 126 {
        (sextets(2, 6)?, 8)
    } else {
        (sextets(1, 3)?, 4)
    };
    let n = usize::try_from(n).map_err(|_| err(0, "vertex count too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = header_len + bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(
            body.len().min(expected),
            &format!("expected {expected} bytes for {n} vertices, found {}", body.len()),
        ));
    }

    let mut g = Graph::empty(n);
    let data = &body[header_len..];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j).expect("decoded edge is in range");
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        if last & ((1 << (6 - bits % 6)) - 1) != 0 {
            return Err(err(header_len + data.len() - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// `"n m"` on the first line, then one `"u v"` line per edge, LF-terminated.
pub fn edge_list_encode(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn edge_list_decode(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let err = |line: usize, reason: String| GraphError::EdgeList { line, reason };
    let parse_pair = |line: usize, s: &str| -> Result<(usize, usize), GraphError> {
        let fields: Vec<&str> = s.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(err(line, format!("expected two integers, found {:?}", s)));
        }
        let num = |f: &str| {
            f.parse::<usize>()
                .map_err(|_| err(line, format!("not a non-negative integer: {f:?}")))
        };
        Ok((num(fields[0])?, num(fields[1])?))
    };

    let (line, header) = lines.next().ok_or_else(|| err(1, "missing header".into()))?;
    let (n, m) = parse_pair(line, header)?;
    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, text) in lines {
        let (u, v) = parse_pair(line, text)?;
        match g.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => return Err(err(line, format!("duplicate edge {u} {v}"))),
            Err(e) => return Err(err(line, e.to_string())),
        }
        seen += 1;
    }
    if seen != m {
        return Err(err(
            line,
            format!("header declares {m} edges but {seen} were listed"),
        ));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_complete, make_cycle, make_path};

    #[test]
    fn triangle_code() {
        // n = 3 -> 'B'; bits 111 padded to 111000 = 56 -> 'w'.
        assert_eq!(graph6_encode(&make_complete(3).unwrap()), "Bw");
        assert_eq!(graph6_decode("Bw").unwrap(), make_complete(3).unwrap());
    }

    #[test]
    fn known_codes() {
        assert_eq!(graph6_encode(&Graph::empty(0)), "?");
        assert_eq!(graph6_encode(&make_complete(2).unwrap()), "A_");
        // P_4 0-1-2-3: x01=1 x02=0 x12=1 x03=0 x13=0 x23=1 -> 101001 = 41.
        assert_eq!(graph6_encode(&make_path(4).unwrap()), "Ch");
        assert_eq!(graph6_encode(&make_complete(5).unwrap()), "D~{");
    }

    #[test]
    fn roundtrip_and_header() {
        let c4 = make_cycle(4).unwrap();
        assert_eq!(graph6_decode(&graph6_encode(&c4)).unwrap(), c4);
        assert_eq!(graph6_decode(">>graph6<<Bw\n").unwrap(), make_complete(3).unwrap());
        let big = make_cycle(70).unwrap();
        let code = graph6_encode(&big);
        assert!(code.starts_with('~'));
        assert_eq!(graph6_decode(&code).unwrap(), big);
    }

    #[test]
    fn decode_errors() {
        assert!(matches!(graph6_decode(""), Err(GraphError::Graph6 { offset: 0, .. })));
        assert!(matches!(graph6_decode("B "), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(graph6_decode("Bww"), Err(GraphError::Graph6 { .. })));
        // 'x' = 57 = 111001: padding bits set.
        assert!(matches!(graph6_decode("Bx"), Err(GraphError::Graph6 { offset: 1, .. })));
    }

    #[test]
    fn edge_list() {
        let p3 = make_path(3).unwrap();
        let text = edge_list_encode(&p3);
        assert_eq!(text, "3 2\n0 1\n1 2\n");
        assert_eq!(edge_list_decode(&text).unwrap(), p3);
        assert!(matches!(
            edge_list_decode("3 2\n0 1\n"),
            Err(GraphError::EdgeList { .. })
        ));
        assert!(matches!(
            edge_list_decode("3 1\n0 x\n"),
            Err(GraphError::EdgeList { line: 2, .. })
        ));
        assert!(edge_list_decode("3 1\n0 3\n").is_err());
    }
}

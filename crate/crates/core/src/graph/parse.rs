use crate::error::{ParseError, Result};

use super::{CoxeterGraph, Label};

pub(super) fn parse_graph(text: &str) -> Result<CoxeterGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingVertices)?;
    let mut names: Vec<String> = Vec::new();
    for name in header.split_whitespace() {
        if names.iter().any(|n| n == name) {
            return Err(ParseError::DuplicateVertex { line: header_line, name: name.to_string() }.into());
        }
        names.push(name.to_string());
    }

    let mut edges: Vec<(usize, usize, Label)> = Vec::new();
    for (line, content) in lines {
        let fields: Vec<&str> = content.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::MalformedEdge { line, found: fields.len() }.into());
        }
        let lookup = |name: &str| {
            names
                .iter()
                .position(|n| n == name)
                .ok_or_else(|| ParseError::UnknownVertex { line, name: name.to_string() })
        };
        let s = lookup(fields[0])?;
        let t = lookup(fields[1])?;
        let m = parse_label(fields[2], line)?;
        if s == t {
            return Err(ParseError::SelfLabel { line, name: names[s].clone() }.into());
        }
        if let Some(&(_, _, prev)) = edges
            .iter()
            .find(|(a, b, _)| (*a, *b) == (s, t) || (*a, *b) == (t, s))
        {
            if prev != m {
                return Err(ParseError::ConflictingLabel {
                    line,
                    s: names[s].clone(),
                    t: names[t].clone(),
                }
                .into());
            }
        }
        edges.push((s, t, m));
    }

    CoxeterGraph::new(names, edges)
}

fn parse_label(token: &str, line: usize) -> Result<Label, ParseError> {
    if token == "inf" {
        return Ok(Label::Infinite);
    }
    let value: u64 = token
        .parse()
        .map_err(|_| ParseError::MalformedInteger { line, token: token.to_string() })?;
    if value < 2 {
        return Err(ParseError::LabelTooSmall { line, label: value });
    }
    let value = u32::try_from(value)
        .map_err(|_| ParseError::MalformedInteger { line, token: token.to_string() })?;
    Ok(Label::Finite(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn parse_err(text: &str) -> ParseError {
        match parse_graph(text) {
            Err(Error::Parse(e)) => e,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn no_edges_defaults_to_two() {
        let g = parse_graph("a b\n").unwrap();
        assert_eq!(g.rank(), 2);
        assert_eq!(g.label(0, 1), Label::Finite(2));
    }

    #[test]
    fn transcribes_labels() {
        let g = parse_graph("a b c\na b inf\nb c 3\n").unwrap();
        assert_eq!(g.label(0, 1), Label::Infinite);
        assert_eq!(g.label(1, 2), Label::Finite(3));
        assert_eq!(g.label(0, 2), Label::Finite(2));
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_graph("# A3\n\na b c\n# edges\na b 3\n\nb c 3\n").unwrap();
        assert_eq!(g.label(0, 1), Label::Finite(3));
        assert_eq!(g.label(1, 2), Label::Finite(3));
    }

    #[test]
    fn rejects_label_below_two() {
        assert_eq!(parse_err("a b\na b 1\n"), ParseError::LabelTooSmall { line: 2, label: 1 });
        assert_eq!(parse_err("a b\na b 0\n"), ParseError::LabelTooSmall { line: 2, label: 0 });
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(parse_err(""), ParseError::MissingVertices));
        assert!(matches!(parse_err("a b a\n"), ParseError::DuplicateVertex { .. }));
        assert!(matches!(parse_err("a b\na c 3\n"), ParseError::UnknownVertex { line: 2, .. }));
        assert!(matches!(parse_err("a b\na a 3\n"), ParseError::SelfLabel { .. }));
        assert!(matches!(parse_err("a b\na b three\n"), ParseError::MalformedInteger { .. }));
        assert!(matches!(parse_err("a b\na b -3\n"), ParseError::MalformedInteger { .. }));
        assert!(matches!(parse_err("a b\na b\n"), ParseError::MalformedEdge { found: 2, .. }));
        assert!(matches!(parse_err("a b\na b 3\nb a 4\n"), ParseError::ConflictingLabel { .. }));
    }

    #[test]
    fn repeated_identical_edge_is_fine() {
        let g = parse_graph("a b\na b 5\nb a 5\n").unwrap();
        assert_eq!(g.label(0, 1), Label::Finite(5));
    }
}

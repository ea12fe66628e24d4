//! Text format for Θ:
//!
//! ```text
//! vertices: a b c d
//! gamma: a-b b-c c-d d-a
//! lambda: a-c b-d
//! ```
//!
//! Directives may repeat; `#` starts a comment.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{validate_vertex_name, SimplicialGraph};
use crate::theta::{build_theta, ThetaGraph};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

/// Split `a-b` into its endpoints.
pub fn parse_edge(token: &str, line: usize) -> Result<(String, String)> {
    let mut parts = token.split('-');
    match (parts.next(), parts.next(), parts.next()) {
        (Some(a), Some(b), None) if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
        _ => Err(parse_error(line, format!("malformed edge {token:?}"))),
    }
}

fn check_unique_edges(edges: &[(String, String)], what: &str, line_of: &[usize]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for ((a, b), &line) in edges.iter().zip(line_of) {
        let key = if a <= b { (a, b) } else { (b, a) };
        if !seen.insert(key) {
            return Err(parse_error(line, format!("duplicate {what} edge {a}-{b}")));
        }
    }
    Ok(())
}

pub fn parse_theta(text: &str) -> Result<ThetaGraph> {
    let mut vertices: Vec<String> = Vec::new();
    let mut declared = BTreeSet::new();
    let mut gamma = Vec::new();
    let mut gamma_lines = Vec::new();
    let mut lambda = Vec::new();
    let mut lambda_lines = Vec::new();
    let mut saw_vertices = false;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| parse_error(line, "expected `vertices:`, `gamma:` or `lambda:`"))?;
        match key.trim() {
            "vertices" => {
                saw_vertices = true;
                for v in rest.split_whitespace() {
                    validate_vertex_name(v).map_err(|_| parse_error(line, format!("invalid vertex name {v:?}")))?;
                    if !declared.insert(v.to_string()) {
                        return Err(parse_error(line, format!("vertex {v} declared twice")));
                    }
                    vertices.push(v.to_string());
                }
            }
            "gamma" => {
                for tok in rest.split_whitespace() {
                    gamma.push(parse_edge(tok, line)?);
                    gamma_lines.push(line);
                }
            }
            "lambda" => {
                for tok in rest.split_whitespace() {
                    lambda.push(parse_edge(tok, line)?);
                    lambda_lines.push(line);
                }
            }
            other => return Err(parse_error(line, format!("unknown directive {other:?}"))),
        }
    }
    if !saw_vertices {
        return Err(parse_error(0, "missing `vertices:` directive"));
    }
    check_unique_edges(&gamma, "gamma", &gamma_lines)?;
    check_unique_edges(&lambda, "lambda", &lambda_lines)?;
    let g = SimplicialGraph::new(&vertices, gamma.iter().map(|(a, b)| (a.as_str(), b.as_str())))?;
    build_theta(g, lambda.iter().map(|(a, b)| (a.as_str(), b.as_str())))
}

pub fn emit_theta(theta: &ThetaGraph) -> String {
    let gamma = theta.gamma();
    let edges = |pairs: Vec<(String, String)>| -> String {
        pairs.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(" ")
    };
    let lambda: Vec<(String, String)> = theta
        .lambda_edges()
        .iter()
        .map(|&(a, b)| (theta.name(a).to_string(), theta.name(b).to_string()))
        .collect();
    format!(
        "vertices: {}\ngamma: {}\nlambda: {}\n",
        gamma.names().join(" "),
        edges(gamma.edge_names()),
        edges(lambda)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_family, FamilySpec};

    #[test]
    fn parses_c4_with_comments() {
        let t = parse_theta("# square\nvertices: a b c d\ngamma: a-b b-c c-d d-a  # cycle\nlambda: a-c b-d\n").unwrap();
        assert_eq!(t.component_count(), 2);
        assert_eq!(t.gamma().edge_count(), 4);
    }

    #[test]
    fn emitted_families_parse_back() {
        for spec in FamilySpec::fixture_suite() {
            let t = make_family(&spec).unwrap();
            assert_eq!(parse_theta(&emit_theta(&t)).unwrap(), t, "{spec}");
        }
    }

    #[test]
    fn rejects_bad_input() {
        let dup = parse_theta("vertices: a b\ngamma: a-b b-a\n");
        assert!(matches!(dup, Err(Error::Parse { line: 2, .. })));
        let dup_v = parse_theta("vertices: a a\n");
        assert!(matches!(dup_v, Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_theta("gamma: a-b\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_theta("vertices: a b\nedges: a-b\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_theta("vertices: a b\ngamma: a-b-c\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_theta("vertices: a b\ngamma: a-z\n"), Err(Error::UnknownVertex("z".into())));
        assert_eq!(
            parse_theta("vertices: a b\ngamma: a-b\nlambda: a-b\n"),
            Err(Error::LambdaNotInComplement("a".into(), "b".into()))
        );
        assert!(matches!(parse_theta("vertices: a|b\n"), Err(Error::Parse { .. })));
    }
}

//! Plain-text input formats: circuit lists, GF(p) matrices, multigraphs.
//!
//! All three formats share the conventions: `#` starts a comment, blank lines
//! are skipped, tokens are whitespace separated, and the first significant
//! line identifies the format.
//!
//! ```text
//! n 4            gfmatrix 2 3 7      graph 4 6
//! 1 2 3          1 0 0 0 1 1 1       1 2
//! 1 2 4          0 1 0 1 0 1 1       1 3
//! ...            0 0 1 1 1 0 1       ...
//! ```

use crate::circuits::CircuitFamily;
use crate::error::{Error, Result};
use crate::gf::GfMatrix;
use crate::graph::MultiGraph;
use crate::subset::{ElementSubset, MAX_GROUND_SIZE};

/// A parsed input file, whichever format it declared.
#[derive(Clone, Debug, PartialEq)]
pub enum ParsedInput {
    Circuits(CircuitFamily),
    Matrix(GfMatrix),
    Graph(MultiGraph),
}

/// Significant lines with their 1-based line numbers.
fn significant_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, line)| {
            let line = line.split('#').next().unwrap_or("").trim();
            (i + 1, line)
        })
        .filter(|(_, line)| !line.is_empty())
        .collect()
}

fn parse_token<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        msg: format!("expected {what}, found `{token}`"),
    })
}

/// Dispatches on the first significant line's leading token.
pub fn parse_input(text: &str) -> Result<ParsedInput> {
    let lines = significant_lines(text);
    let Some(&(line, first)) = lines.first() else {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    };
    match first.split_whitespace().next().unwrap_or("") {
        "n" => parse_circuit_lines(&lines).map(ParsedInput::Circuits),
        "gfmatrix" => parse_matrix_lines(&lines).map(ParsedInput::Matrix),
        "graph" => parse_graph_lines(&lines).map(ParsedInput::Graph),
        other => Err(Error::Parse {
            line,
            msg: format!("expected a header starting with `n`, `gfmatrix`, or `graph`, found `{other}`"),
        }),
    }
}

pub fn parse_circuit_text(text: &str) -> Result<CircuitFamily> {
    parse_circuit_lines(&significant_lines(text))
}

fn parse_circuit_lines(lines: &[(usize, &str)]) -> Result<CircuitFamily> {
    let Some(&(line, header)) = lines.first() else {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    };
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("n") {
        return Err(Error::Parse { line, msg: "expected header `n <size>`".into() });
    }
    let n: u64 = match (tokens.next(), tokens.next()) {
        (Some(tok), None) => parse_token(line, tok, "a ground set size")?,
        _ => return Err(Error::Parse { line, msg: "expected header `n <size>`".into() }),
    };
    let mut raw: Vec<Vec<u32>> = Vec::new();
    for &(line, body) in &lines[1..] {
        let mut circuit = Vec::new();
        for token in body.split_whitespace() {
            circuit.push(parse_token(line, token, "an element index")?);
        }
        raw.push(circuit);
    }
    CircuitFamily::validate(n, &raw)
}

/// Parses the circuit-list format as a bare subset list: the ground set size
/// and the listed subsets, with element range checks but none of the circuit
/// family axioms. Candidate subfamilies for basis testing go through here —
/// two circuits of the same matroid need not satisfy elimination on their
/// own.
pub fn parse_subset_list(text: &str) -> Result<(u32, Vec<ElementSubset>)> {
    let lines = significant_lines(text);
    let Some(&(line, header)) = lines.first() else {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    };
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("n") {
        return Err(Error::Parse { line, msg: "expected header `n <size>`".into() });
    }
    let n: u32 = match (tokens.next(), tokens.next()) {
        (Some(tok), None) => parse_token(line, tok, "a ground set size")?,
        _ => return Err(Error::Parse { line, msg: "expected header `n <size>`".into() }),
    };
    if u64::from(n) > MAX_GROUND_SIZE as u64 {
        return Err(Error::GroundSetTooLarge { n: n.into() });
    }
    let mut subsets = Vec::new();
    for &(line, body) in &lines[1..] {
        let mut elements = Vec::new();
        for token in body.split_whitespace() {
            let e: u32 = parse_token(line, token, "an element index")?;
            if e < 1 || e > n {
                return Err(Error::Parse {
                    line,
                    msg: format!("element {e} outside 1..={n}"),
                });
            }
            elements.push(e);
        }
        subsets.push(ElementSubset::from_elements(elements)?);
    }
    Ok((n, subsets))
}

pub fn parse_matrix_text(text: &str) -> Result<GfMatrix> {
    parse_matrix_lines(&significant_lines(text))
}

fn parse_matrix_lines(lines: &[(usize, &str)]) -> Result<GfMatrix> {
    let Some(&(line, header)) = lines.first() else {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 4 || tokens[0] != "gfmatrix" {
        return Err(Error::Parse {
            line,
            msg: "expected header `gfmatrix <modulus> <rows> <cols>`".into(),
        });
    }
    let modulus: u64 = parse_token(line, tokens[1], "a modulus")?;
    let rows: usize = parse_token(line, tokens[2], "a row count")?;
    let cols: usize = parse_token(line, tokens[3], "a column count")?;
    let body = &lines[1..];
    if body.len() != rows {
        return Err(Error::Parse {
            line,
            msg: format!("expected {rows} matrix rows, found {}", body.len()),
        });
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for &(line, row) in body {
        let row_entries: Vec<&str> = row.split_whitespace().collect();
        if row_entries.len() != cols {
            return Err(Error::Parse {
                line,
                msg: format!("expected {cols} entries, found {}", row_entries.len()),
            });
        }
        for token in row_entries {
            entries.push(parse_token::<i64>(line, token, "a field entry")?);
        }
    }
    GfMatrix::new(modulus, rows, cols, &entries)
}

pub fn parse_graph_text(text: &str) -> Result<MultiGraph> {
    parse_graph_lines(&significant_lines(text))
}

fn parse_graph_lines(lines: &[(usize, &str)]) -> Result<MultiGraph> {
    let Some(&(line, header)) = lines.first() else {
        return Err(Error::Parse { line: 1, msg: "empty input".into() });
    };
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 3 || tokens[0] != "graph" {
        return Err(Error::Parse {
            line,
            msg: "expected header `graph <vertices> <edges>`".into(),
        });
    }
    let vertices: u32 = parse_token(line, tokens[1], "a vertex count")?;
    let edge_count: usize = parse_token(line, tokens[2], "an edge count")?;
    let body = &lines[1..];
    if body.len() != edge_count {
        return Err(Error::Parse {
            line,
            msg: format!("expected {edge_count} edge lines, found {}", body.len()),
        });
    }
    let mut edges = Vec::with_capacity(edge_count);
    for &(line, pair) in body {
        let ends: Vec<&str> = pair.split_whitespace().collect();
        if ends.len() != 2 {
            return Err(Error::Parse {
                line,
                msg: format!("expected `u v`, found `{pair}`"),
            });
        }
        edges.push((
            parse_token(line, ends[0], "a vertex")?,
            parse_token(line, ends[1], "a vertex")?,
        ));
    }
    MultiGraph::new(vertices, edges)
}

/// Renders a circuit family back into the circuit-list format.
pub fn circuit_file_text(family: &CircuitFamily) -> String {
    let mut out = format!("n {}\n", family.n());
    for c in family.circuits() {
        let parts: Vec<String> = c.iter().map(|e| e.to_string()).collect();
        out.push_str(&parts.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_circuit_lists_with_comments() {
        let text = "# a line\n\nn 4\n1 2 3  # trailing note\n1 2 4\n1 3 4\n2 3 4\n";
        let fam = parse_circuit_text(text).unwrap();
        assert_eq!(fam.n(), 4);
        assert_eq!(fam.len(), 4);
        match parse_input(text).unwrap() {
            ParsedInput::Circuits(f) => assert_eq!(f, fam),
            other => panic!("wrong dispatch: {other:?}"),
        }
    }

    #[test]
    fn reports_parse_errors_with_line_numbers() {
        let err = parse_circuit_text("n 4\n1 x 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_circuit_text("m 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_input("").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_input("widget 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn parses_matrices() {
        let text = "gfmatrix 2 2 3\n1 0 1\n0 1 1\n";
        let m = parse_matrix_text(text).unwrap();
        assert_eq!((m.modulus(), m.rows(), m.cols()), (2, 2, 3));
        assert_eq!(m.rank(), 2);
        let err = parse_matrix_text("gfmatrix 2 2 3\n1 0 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
        let err = parse_matrix_text("gfmatrix 2 1 3\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn parses_graphs() {
        let text = "graph 3 3\n1 2\n2 3\n3 1\n";
        let g = parse_graph_text(text).unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let err = parse_graph_text("graph 3 2\n1 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));
    }

    #[test]
    fn subset_lists_skip_family_axioms() {
        // {1,2,3} and {1,2,4} violate elimination as a standalone family but
        // are a perfectly good candidate subfamily.
        let (n, subsets) = parse_subset_list("n 4\n1 2 3\n1 2 4\n").unwrap();
        assert_eq!(n, 4);
        assert_eq!(subsets.len(), 2);
        assert_eq!(subsets[0].to_string(), "{1,2,3}");
        let (_, none) = parse_subset_list("n 4\n").unwrap();
        assert!(none.is_empty());
        let err = parse_subset_list("n 4\n1 5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn circuit_round_trip() {
        let text = "n 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n";
        let fam = parse_circuit_text(text).unwrap();
        assert_eq!(circuit_file_text(&fam), text);
        let again = parse_circuit_text(&circuit_file_text(&fam)).unwrap();
        assert_eq!(again, fam);
    }
}

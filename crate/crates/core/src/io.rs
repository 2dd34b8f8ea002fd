//! JSON input files and canonical complex output.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::auxiliary::{AlphaAssignment, AlphaPair};
use crate::chromatic::Graph;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ComplexFile {
    #[serde(default)]
    name: Option<String>,
    vertices: Vec<String>,
    #[serde(default)]
    facets: Option<Vec<Vec<String>>>,
    #[serde(default)]
    minimal_nonfaces: Option<Vec<Vec<String>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    #[serde(default)]
    name: Option<String>,
    graph_vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

/// A complex file or a graph file.
#[derive(Debug, Clone)]
pub enum Input {
    Complex {
        name: Option<String>,
        complex: SimplicialComplex,
    },
    Graph {
        name: Option<String>,
        graph: Graph,
    },
}

fn parse_err(e: serde_json::Error) -> Error {
    Error::Parse(e.to_string())
}

pub fn parse_complex(text: &str) -> Result<(Option<String>, SimplicialComplex)> {
    let f: ComplexFile = serde_json::from_str(text).map_err(parse_err)?;
    let complex = match (f.facets, f.minimal_nonfaces) {
        (Some(facets), None) => SimplicialComplex::from_facets(&f.vertices, &facets)?,
        (None, Some(gens)) => SimplicialComplex::from_minimal_nonfaces(&f.vertices, &gens)?,
        _ => {
            return Err(Error::Parse(
                "exactly one of \"facets\" and \"minimal_nonfaces\" must be given".into(),
            ))
        }
    };
    Ok((f.name, complex))
}

pub fn parse_graph(text: &str) -> Result<(Option<String>, Graph)> {
    let f: GraphFile = serde_json::from_str(text).map_err(parse_err)?;
    Ok((f.name, Graph::new(&f.graph_vertices, &f.edges)?))
}

/// Dispatches on the presence of `"graph_vertices"`.
pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text).map_err(parse_err)?;
    if v.get("graph_vertices").is_some() {
        let (name, graph) = parse_graph(text)?;
        Ok(Input::Graph { name, graph })
    } else {
        let (name, complex) = parse_complex(text)?;
        Ok(Input::Complex { name, complex })
    }
}

pub fn parse_alpha(text: &str) -> Result<AlphaAssignment> {
    let pairs: Vec<AlphaPair> = serde_json::from_str(text).map_err(parse_err)?;
    AlphaAssignment::new(pairs)
}

/// Sorted vertices, lexicographically sorted facets and minimal nonfaces.
pub fn complex_to_json(s: &SimplicialComplex, name: Option<&str>) -> Value {
    let mut v = json!({
        "vertices": s.vertices(),
        "facets": s.facets(),
        "minimal_nonfaces": s.minimal_nonface_labels(),
    });
    if let Some(n) = name {
        v["name"] = n.into();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_round_trip() {
        let text = r#"{"name":"sq","vertices":["d","c","b","a"],"minimal_nonfaces":[["b","d"],["a","c"]]}"#;
        let (name, s) = parse_complex(text).unwrap();
        assert_eq!(name.as_deref(), Some("sq"));
        let out = complex_to_json(&s, None);
        assert_eq!(out["minimal_nonfaces"], json!([["a", "c"], ["b", "d"]]));
        let again = json!({"vertices": out["vertices"], "facets": out["facets"]}).to_string();
        assert_eq!(parse_complex(&again).unwrap().1, s);
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            parse_complex(r#"{"vertices":["a"]}"#),
            Err(Error::Parse(_))
        ));
        let both = r#"{"vertices":["a"],"facets":[["a"]],"minimal_nonfaces":[]}"#;
        assert!(matches!(parse_complex(both), Err(Error::Parse(_))));
        let e = parse_complex("{\n\"vertices\": [1]}")
            .unwrap_err()
            .to_string();
        assert!(e.contains("line 2"), "{e}");
    }

    #[test]
    fn graphs_and_alpha() {
        let g = r#"{"graph_vertices":["1","2","3"],"edges":[["1","2"],["2","3"]]}"#;
        assert!(matches!(parse_input(g).unwrap(), Input::Graph { .. }));
        let a =
            parse_alpha(r#"[{"sigma":["a","c"],"alpha":["a"]},{"sigma":["b","d"],"alpha":["b"]}]"#)
                .unwrap();
        assert_eq!(a.len(), 2);
        assert!(parse_alpha(r#"[{"sigma":["a","c"],"alpha":[]}]"#).is_err());
    }
}

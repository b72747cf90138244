//! Graph JSON (`{"n", "edges", "labels"?}`) and plain edge-list text.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// Where a constructed graph came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub family: String,
    pub parameters: BTreeMap<String, u64>,
    pub loops_removed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

impl GraphJson {
    pub fn into_graph(self) -> Result<Graph, GraphError> {
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        let g = Graph::from_edges(self.n, &edges)?;
        match self.labels {
            Some(labels) if labels.len() != self.n => {
                Err(GraphError::Parse(format!("{} labels for {} vertices", labels.len(), self.n)))
            }
            Some(labels) => Ok(g.with_labels(labels)),
            None => Ok(g),
        }
    }
}

impl Graph {
    pub fn to_json_model(&self) -> GraphJson {
        GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
            labels: self.labels.clone(),
            provenance: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_model()).expect("graph JSON serialises")
    }

    pub fn from_json(text: &str) -> Result<Graph, GraphError> {
        let model: GraphJson = serde_json::from_str(text).map_err(|e| GraphError::Parse(e.to_string()))?;
        model.into_graph()
    }

    /// `n <count>` header followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| GraphError::Parse("empty edge list".into()))?;
        let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["n", count] => count.parse::<usize>().map_err(|e| GraphError::Parse(e.to_string()))?,
            _ => return Err(GraphError::Parse(format!("expected 'n <count>' header, got '{header}'"))),
        };
        let mut edges = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [u, v] = parts.as_slice() else {
                return Err(GraphError::Parse(format!("bad edge line '{line}'")));
            };
            let parse = |s: &str| s.parse::<usize>().map_err(|e| GraphError::Parse(e.to_string()));
            edges.push((parse(u)?, parse(v)?));
        }
        Graph::from_edges(n, &edges)
    }

    /// Parses either format, choosing JSON when the text starts with `{`.
    pub fn parse_any(text: &str) -> Result<Graph, GraphError> {
        if text.trim_start().starts_with('{') {
            Graph::from_json(text)
        } else {
            Graph::from_edge_list(text)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::families::cycle;
    use super::*;

    #[test]
    fn json_sorted_edges() {
        let g = Graph::from_edges(4, &[(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(g.to_json(), r#"{"n":4,"edges":[[0,1],[0,2],[2,3]]}"#);
    }

    #[test]
    fn json_accepts_provenance_and_labels() {
        let text = r#"{"n":2,"edges":[[1,0]],"labels":["a","b"],
            "provenance":{"family":"x","parameters":{"q":5},"loops_removed":[1]}}"#;
        let g = Graph::from_json(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1)]);
        assert_eq!(g.labels().unwrap(), &["a".to_string(), "b".to_string()]);
        assert!(Graph::from_json(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
        assert!(Graph::from_json(r#"{"n":2,"edges":[],"labels":["a"]}"#).is_err());
    }

    #[test]
    fn edge_list_format() {
        let c5 = cycle(5);
        let text = c5.to_edge_list();
        assert!(text.starts_with("n 5\n0 1\n0 4\n"));
        assert_eq!(Graph::from_edge_list(&text).unwrap(), c5);
        assert_eq!(Graph::parse_any(&c5.to_json()).unwrap(), c5);
        assert!(Graph::from_edge_list("5\n0 1").is_err());
        assert!(Graph::from_edge_list("n 3\n0 1 2").is_err());
    }
}

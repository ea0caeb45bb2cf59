use std::collections::{BTreeMap, HashMap};
use std::fmt::Write;

use serde_json::Value;

use crate::error::{Error, Result};
use crate::tableaux::Signature;

use super::SignedColoredGraph;

/// Canonical JSON: one vertex per line, edge lists keyed by color in
/// numeric order, endpoints given by vertex id.
pub fn to_json(g: &SignedColoredGraph) -> String {
    let mut s = String::new();
    writeln!(s, "{{\"n\": {}, \"N\": {},", g.n(), g.big_n()).unwrap();
    s.push_str(" \"vertices\": [");
    for v in 0..g.len() {
        s.push_str(if v == 0 { "\n" } else { ",\n" });
        write!(s, "  {{\"id\": {}, \"sigma\": \"{}\"", g.id(v), g.sigma(v)).unwrap();
        if let Some(st) = g.stats() {
            write!(s, ", \"stat\": {}", st[v]).unwrap();
        }
        if let Some(l) = g.label(v) {
            write!(s, ", \"label\": {}", serde_json::to_string(l).unwrap()).unwrap();
        }
        s.push('}');
    }
    s.push_str("],\n \"edges\": {");
    for (k, c) in g.colors().enumerate() {
        if k > 0 {
            s.push(',');
        }
        write!(s, "\n  \"{c}\": [").unwrap();
        let pairs: Vec<String> = g.edges(c).into_iter().map(|(a, b)| format!("[{}, {}]", g.id(a), g.id(b))).collect();
        s.push_str(&pairs.join(", "));
        s.push(']');
    }
    s.push_str("}}\n");
    s
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn uint(v: &Value, what: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| bad(format!("{what} must be a nonnegative integer")))
}

pub fn from_json(text: &str) -> Result<SignedColoredGraph> {
    let root: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let n = uint(root.get("n").ok_or_else(|| bad("missing \"n\""))?, "n")? as usize;
    let big_n = uint(root.get("N").ok_or_else(|| bad("missing \"N\""))?, "N")? as usize;
    let verts = root.get("vertices").and_then(Value::as_array).ok_or_else(|| bad("missing \"vertices\" array"))?;
    let mut ids = Vec::with_capacity(verts.len());
    let mut sigma = Vec::with_capacity(verts.len());
    let mut stats = Vec::new();
    let mut labels = Vec::new();
    for v in verts {
        ids.push(uint(v.get("id").ok_or_else(|| bad("vertex without \"id\""))?, "id")?);
        let s = v.get("sigma").and_then(Value::as_str).ok_or_else(|| bad("vertex without \"sigma\""))?;
        sigma.push(s.parse::<Signature>()?);
        if let Some(st) = v.get("stat") {
            stats.push(uint(st, "stat")? as u32);
        }
        if let Some(l) = v.get("label") {
            labels.push(l.as_str().ok_or_else(|| bad("label must be a string"))?.to_string());
        }
    }
    let stat = match stats.len() {
        0 => None,
        l if l == ids.len() => Some(stats),
        _ => return Err(bad("\"stat\" must be given on every vertex or none")),
    };
    let index: HashMap<u64, usize> = ids.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let mut edges = BTreeMap::new();
    if let Some(obj) = root.get("edges") {
        let obj = obj.as_object().ok_or_else(|| bad("\"edges\" must be an object"))?;
        for (key, list) in obj {
            let c: usize = key.parse().map_err(|_| bad(format!("bad color key {key:?}")))?;
            let list = list.as_array().ok_or_else(|| bad(format!("edges of color {c} must be a list")))?;
            let mut pairs = Vec::with_capacity(list.len());
            for e in list {
                let pair = e.as_array().filter(|p| p.len() == 2).ok_or_else(|| bad("edge must be a pair of ids"))?;
                let mut ends = [0usize; 2];
                for (slot, x) in ends.iter_mut().zip(pair) {
                    let id = uint(x, "edge endpoint")?;
                    *slot = *index
                        .get(&id)
                        .ok_or_else(|| Error::InvalidGraph(format!("edge of color {c} names unknown vertex {id}")))?;
                }
                pairs.push((ends[0], ends[1]));
            }
            edges.insert(c, pairs);
        }
    }
    let g = SignedColoredGraph::new(n, big_n, ids, sigma, &edges, stat)?;
    match labels.len() {
        0 => Ok(g),
        l if l == g.len() => Ok(g.with_labels(labels)),
        _ => Err(bad("\"label\" must be given on every vertex or none")),
    }
}

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan"];

/// Graphviz text. Parallel edges of several colors are drawn once with a
/// compound label and take the color of the smallest.
pub fn to_dot(g: &SignedColoredGraph) -> String {
    let mut s = String::from("graph G {\n  node [shape=box];\n");
    for v in 0..g.len() {
        writeln!(s, "  v{} [label=\"{}\\n{}\"];", g.id(v), g.id(v), g.sigma(v)).unwrap();
    }
    let mut merged: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for c in g.colors() {
        for e in g.edges(c) {
            merged.entry(e).or_default().push(c);
        }
    }
    for ((a, b), cs) in merged {
        let label: Vec<String> = cs.iter().map(usize::to_string).collect();
        let color = PALETTE[(cs[0] - 2) % PALETTE.len()];
        writeln!(s, "  v{} -- v{} [label=\"{}\", color={color}];", g.id(a), g.id(b), label.join(",")).unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::standard_graph;

    #[test]
    fn round_trip() {
        for lam in ["3,2", "2,2,1", "4", "1"] {
            let g = standard_graph(&lam.parse().unwrap());
            let text = to_json(&g);
            let back = from_json(&text).unwrap();
            assert_eq!(back, g);
            assert_eq!(to_json(&back), text);
        }
    }

    #[test]
    fn json_shape() {
        let g = standard_graph(&"2,1".parse().unwrap());
        let v: Value = serde_json::from_str(&to_json(&g)).unwrap();
        assert_eq!(v["n"], 3);
        assert_eq!(v["edges"]["2"].as_array().unwrap().len(), 1);
        assert_eq!(v["vertices"][0]["sigma"].as_str().unwrap().len(), 2);
    }

    #[test]
    fn rejects_unknown_endpoint() {
        let text = r#"{"n": 3, "N": 3, "vertices": [{"id": 0, "sigma": "+-"}], "edges": {"2": [[0, 7]]}}"#;
        assert!(matches!(from_json(text), Err(Error::InvalidGraph(_))));
        assert!(from_json("{").is_err());
    }

    #[test]
    fn dot_merges_double_edges() {
        let g = standard_graph(&"3,2".parse().unwrap());
        let d = to_dot(&g);
        assert_eq!(d.matches(" -- ").count(), 4);
        assert_eq!(d.matches("label=\"2,3\"").count(), 1);
        assert_eq!(d.matches("label=\"3,4\"").count(), 1);
    }
}

//! Simple undirected graphs and the combinatorial enumerators built on them.
//!
//! Vertices are dense ids `0..n`. Neighbor lists are kept sorted, so every
//! enumeration in this crate visits vertices in a deterministic order.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Immutable simple graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

/// A simple cycle in canonical form: the smallest vertex comes first and the
/// second vertex is smaller than the last one.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cycle(Vec<usize>);

impl Cycle {
    /// Canonicalizes a cyclic vertex sequence. Returns `None` for fewer than
    /// three vertices or repeated vertices.
    pub fn from_sequence(vertices: &[usize]) -> Option<Cycle> {
        let k = vertices.len();
        if k < 3 {
            return None;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != k {
            return None;
        }
        let start = (0..k).min_by_key(|&i| vertices[i]).unwrap();
        let forward: Vec<usize> = (0..k).map(|i| vertices[(start + i) % k]).collect();
        if forward[1] < forward[k - 1] {
            Some(Cycle(forward))
        } else {
            let mut backward = Vec::with_capacity(k);
            backward.push(forward[0]);
            backward.extend(forward[1..].iter().rev());
            Some(Cycle(backward))
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    /// Bit mask of the cycle's vertices; requires ids below 64.
    pub(crate) fn mask(&self) -> u64 {
        self.0.iter().fold(0u64, |m, &v| m | (1u64 << v))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// Result of [`Graph::induced_subgraph`]: the relabeled subgraph and, for each
/// new vertex id, the original id it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[i64; 2]>,
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Parallel edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("self-loop at vertex {u}"),
                });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        let mut twice = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: twice / 2,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Length of the shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        let n = self.n();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Every simple cycle of length `3..=max_len`, each exactly once, in
    /// canonical form and lexicographic order.
    pub fn enumerate_cycles(&self, max_len: usize) -> Vec<Cycle> {
        let mut out = Vec::new();
        if max_len < 3 {
            return out;
        }
        let n = self.n();
        let mut on_path = vec![false; n];
        let mut path = Vec::with_capacity(max_len);
        for root in 0..n {
            path.push(root);
            on_path[root] = true;
            self.extend_path(root, max_len, &mut path, &mut on_path, &mut out);
            on_path[root] = false;
            path.pop();
        }
        out.sort();
        out
    }

    // Rooted DFS over vertices larger than the root. A closing edge back to
    // the root is reported only when path[1] < path[last], which keeps one of
    // the two traversal directions.
    fn extend_path(
        &self,
        root: usize,
        max_len: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
    ) {
        let cur = *path.last().unwrap();
        for &w in &self.adjacency[cur] {
            if w == root {
                if path.len() >= 3 && path[1] < cur {
                    out.push(Cycle(path.clone()));
                }
            } else if w > root && !on_path[w] && path.len() < max_len {
                path.push(w);
                on_path[w] = true;
                self.extend_path(root, max_len, path, on_path, out);
                on_path[w] = false;
                path.pop();
            }
        }
    }

    pub fn cycles_through_vertex(&self, v: usize, max_len: usize) -> Result<Vec<Cycle>> {
        self.check_vertex(v)?;
        Ok(self
            .enumerate_cycles(max_len)
            .into_iter()
            .filter(|c| c.contains(v))
            .collect())
    }

    /// Induced subgraph on `vertices`, relabeled `0..k` by ascending original id.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut original = vertices.to_vec();
        original.sort_unstable();
        original.dedup();
        for &v in &original {
            self.check_vertex(v)?;
        }
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let mut adjacency = vec![Vec::new(); original.len()];
        let mut twice = 0;
        for (i, &v) in original.iter().enumerate() {
            adjacency[i] = self.adjacency[v]
                .iter()
                .filter(|&&w| index[w] != usize::MAX)
                .map(|&w| index[w])
                .collect();
            twice += adjacency[i].len();
        }
        Ok(InducedSubgraph {
            graph: Graph {
                adjacency,
                edge_count: twice / 2,
            },
            original,
        })
    }

    pub fn vertex_deleted(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        Ok(self.induced_subgraph(&keep)?.graph)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::VertexOutOfRange { vertex: perm.len(), n });
        }
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::VertexOutOfRange { vertex: p, n });
            }
            seen[p] = true;
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n();
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect::<Vec<_>>();
        Graph::from_edges(shift + other.n(), edges).expect("valid by construction")
    }

    /// Per-vertex neighbor bit masks. Only meaningful for `n <= 64`.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        debug_assert!(self.n() <= 64);
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &w| m | (1u64 << w)))
            .collect()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n() })
        }
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n(),
            edges: self.edges().map(|(u, v)| [u as i64, v as i64]).collect(),
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parses the line-oriented edge-list format: an optional `n <N>` header,
/// `#` comments, and `u v` edge lines.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges = Vec::new();
    let mut max_id: Option<usize> = None;
    let mut seen_edge = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse { line: line_no, message };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "n" {
            if seen_edge || declared.is_some() {
                return Err(err("header `n <N>` must precede all edges".into()));
            }
            if tokens.len() != 2 {
                return Err(err(format!("malformed header `{line}`")));
            }
            let n = tokens[1]
                .parse::<usize>()
                .map_err(|_| err(format!("invalid vertex count `{}`", tokens[1])))?;
            declared = Some(n);
            continue;
        }
        if tokens.len() != 2 {
            return Err(err(format!("expected `u v`, got `{line}`")));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            let id = tok
                .parse::<i64>()
                .map_err(|_| err(format!("invalid vertex id `{tok}`")))?;
            if id < 0 {
                return Err(err(format!("negative vertex id {id}")));
            }
            *slot = id as usize;
        }
        if ends[0] == ends[1] {
            return Err(err(format!("self-loop at vertex {}", ends[0])));
        }
        if let Some(n) = declared {
            if let Some(&bad) = ends.iter().find(|&&v| v >= n) {
                return Err(err(format!("vertex {bad} exceeds declared n = {n}")));
            }
        }
        seen_edge = true;
        max_id = Some(max_id.map_or(ends[0].max(ends[1]), |m| m.max(ends[0]).max(ends[1])));
        edges.push((ends[0], ends[1]));
    }

    let n = declared.unwrap_or_else(|| max_id.map_or(0, |m| m + 1));
    Graph::from_edges(n, edges)
}

/// Parses `{"n": N, "edges": [[u, v], ...]}`.
pub fn parse_json_graph(text: &str) -> Result<Graph> {
    let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    let mut edges = Vec::with_capacity(doc.edges.len());
    for (i, [u, v]) in doc.edges.iter().copied().enumerate() {
        let bad = |message: String| Error::Parse {
            line: 0,
            message: format!("edge #{i}: {message}"),
        };
        if u < 0 || v < 0 {
            return Err(bad(format!("negative vertex id in [{u}, {v}]")));
        }
        if u == v {
            return Err(bad(format!("self-loop at vertex {u}")));
        }
        if u as usize >= doc.n || v as usize >= doc.n {
            return Err(bad(format!("[{u}, {v}] exceeds n = {}", doc.n)));
        }
        edges.push((u as usize, v as usize));
    }
    Graph::from_edges(doc.n, edges)
}

/// Dispatches on the first non-blank character: `{` selects JSON.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json_graph(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn read_graph(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::from(e).with_path(path.display().to_string()))?;
    parse_graph(&text).map_err(|e| e.with_path(path.display().to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn parse_single_edge() {
        let g = parse_edge_list("0 1").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn parse_triangle_and_dedup() {
        let g = parse_edge_list("0 1\n1 2\n2 0").unwrap();
        assert_eq!(g, complete(3));
        let g = parse_edge_list("0 1\n0 1").unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_header_and_comments() {
        let g = parse_edge_list("# a path\nn 5\n\n0 1\n# mid\n1 2\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn parse_errors_name_line() {
        let cases = [
            ("0 1\n2 2", 2),
            ("0 1\n1 -3", 2),
            ("0 x", 1),
            ("0 1 2", 1),
            ("n 2\n0 5", 2),
        ];
        for (text, line) in cases {
            match parse_edge_list(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} -> {other:?}"),
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let g = petersen();
        let back = parse_graph(&g.to_json()).unwrap();
        assert_eq!(g, back);
        assert!(parse_json_graph(r#"{"n": 2, "edges": [[0, 0]]}"#).is_err());
        assert!(parse_json_graph(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
        assert!(parse_json_graph(r#"{"n": 2, "edges": [[-1, 0]]}"#).is_err());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(complete(3).max_degree(), 2);
        assert_eq!(star(5).max_degree(), 4);
        assert_eq!(Graph::empty(3).max_degree(), 0);
    }

    #[test]
    fn girth_examples() {
        assert_eq!(complete(3).girth(), Some(3));
        assert_eq!(cycle(5).girth(), Some(5));
        assert_eq!(path(4).girth(), None);
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(hypercube(3).girth(), Some(4));
    }

    #[test]
    fn cycle_examples() {
        let k3 = complete(3).enumerate_cycles(3);
        assert_eq!(k3.len(), 1);
        assert_eq!(k3[0].vertices(), &[0, 1, 2]);
        let c4 = cycle(4).enumerate_cycles(4);
        assert_eq!(c4.len(), 1);
        assert_eq!(c4[0].vertices(), &[0, 1, 2, 3]);
        let k4 = complete(4).enumerate_cycles(4);
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        assert!(complete(4).enumerate_cycles(2).is_empty());
    }

    #[test]
    fn cycles_through_vertex_examples() {
        assert_eq!(cycle(4).cycles_through_vertex(0, 4).unwrap().len(), 1);
        let k4 = complete(4).cycles_through_vertex(0, 4).unwrap();
        assert_eq!(k4.iter().filter(|c| c.len() == 3).count(), 3);
        assert_eq!(k4.iter().filter(|c| c.len() == 4).count(), 3);
        for v in 0..4 {
            assert!(path(4).cycles_through_vertex(v, 4).unwrap().is_empty());
        }
        assert!(matches!(
            path(4).cycles_through_vertex(4, 4),
            Err(Error::VertexOutOfRange { vertex: 4, n: 4 })
        ));
    }

    #[test]
    fn canonical_cycle_form() {
        let c = Cycle::from_sequence(&[3, 1, 0, 2]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 3, 2]);
        let c = Cycle::from_sequence(&[2, 0, 1]).unwrap();
        assert_eq!(c.vertices(), &[0, 1, 2]);
        assert!(Cycle::from_sequence(&[0, 1]).is_none());
        assert!(Cycle::from_sequence(&[0, 1, 0]).is_none());
    }

    #[test]
    fn induced_subgraph_examples() {
        let sub = complete(4).induced_subgraph(&[0, 1, 2]).unwrap();
        assert_eq!(sub.graph, complete(3));
        let sub = cycle(4).induced_subgraph(&[0, 2]).unwrap();
        assert_eq!(sub.graph, Graph::empty(2));
        assert_eq!(sub.original, vec![0, 2]);
        assert_eq!(cycle(4).induced_subgraph(&[]).unwrap().graph.n(), 0);
        assert!(cycle(4).induced_subgraph(&[7]).is_err());
    }

    #[test]
    fn vertex_deleted_examples() {
        for v in 0..3 {
            assert_eq!(complete(3).vertex_deleted(v).unwrap(), complete(2));
        }
        assert_eq!(complete(2).vertex_deleted(0).unwrap(), Graph::empty(1));
        assert_eq!(cycle(4).vertex_deleted(0).unwrap(), path(3));
        assert!(cycle(4).vertex_deleted(4).is_err());
    }

    #[test]
    fn relabel_rejects_non_permutation() {
        assert!(path(3).relabel(&[0, 0, 1]).is_err());
        assert!(path(3).relabel(&[0, 1]).is_err());
    }
}

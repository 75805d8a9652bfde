//! Test corpora: every connected graph on a few vertices, up to isomorphism,
//! and the named families used by the validation suites.

use std::collections::BTreeSet;

use crate::generators::*;
use crate::graph::Graph;

/// A labelled corpus entry.
#[derive(Clone, Debug)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
}

impl NamedGraph {
    pub fn new(name: impl Into<String>, graph: Graph) -> NamedGraph {
        NamedGraph {
            name: name.into(),
            graph,
        }
    }
}

// Upper-triangle adjacency bits, row-major: bit index of (i, j), i < j.
fn pair_bit(n: usize, i: usize, j: usize) -> usize {
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

fn encode(n: usize, adj: &[u32], perm: &[usize]) -> u64 {
    // perm[new] = old
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            if adj[perm[i]] >> perm[j] & 1 == 1 {
                code |= 1u64 << pair_bit(n, i, j);
            }
        }
    }
    code
}

/// Canonical code: the largest encoding over vertex orders that list
/// vertices by nondecreasing degree. Isomorphic graphs share a code.
fn canonical_code(n: usize, adj: &[u32]) -> u64 {
    let deg: Vec<u32> = adj.iter().map(|m| m.count_ones()).collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| deg[v]);
    // degree classes as consecutive blocks of `order`
    let mut blocks: Vec<(usize, usize)> = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || deg[order[i]] != deg[order[start]] {
            blocks.push((start, i));
            start = i;
        }
    }
    let mut best = 0u64;
    permute_blocks(&mut order, &blocks, 0, &mut |perm| {
        best = best.max(encode(n, adj, perm));
    });
    best
}

fn permute_blocks(order: &mut Vec<usize>, blocks: &[(usize, usize)], b: usize, f: &mut impl FnMut(&[usize])) {
    if b == blocks.len() {
        f(order);
        return;
    }
    let (lo, hi) = blocks[b];
    heap_permute(order, lo, hi - lo, &mut |o| permute_blocks(o, blocks, b + 1, f));
}

// Heap's algorithm on order[lo..hi].
fn heap_permute(order: &mut Vec<usize>, lo: usize, k: usize, f: &mut impl FnMut(&mut Vec<usize>)) {
    if k <= 1 {
        f(order);
        return;
    }
    for i in 0..k - 1 {
        heap_permute(order, lo, k - 1, f);
        if k.is_multiple_of(2) {
            order.swap(lo + i, lo + k - 1);
        } else {
            order.swap(lo, lo + k - 1);
        }
    }
    heap_permute(order, lo, k - 1, f);
}

fn decode(n: usize, code: u64) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, edges).expect("decoded graph is simple")
}

fn adjacency_rows(n: usize, code: u64) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for i in 0..n {
        for j in i + 1..n {
            if code >> pair_bit(n, i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

/// Canonical codes of all graphs on `n` vertices up to isomorphism, built by
/// adding one vertex at a time with every possible neighborhood.
fn all_graph_codes(n: usize) -> BTreeSet<u64> {
    let mut level: BTreeSet<u64> = BTreeSet::from([0]);
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = adjacency_rows(size - 1, code);
            for nbrs in 0u32..(1 << (size - 1)) {
                let mut adj = base.clone();
                adj.push(nbrs);
                for (v, row) in adj.iter_mut().enumerate().take(size - 1) {
                    if nbrs >> v & 1 == 1 {
                        *row |= 1 << (size - 1);
                    }
                }
                next.insert(canonical_code(size, &adj));
            }
        }
        level = next;
    }
    if n == 0 {
        BTreeSet::new()
    } else {
        level
    }
}

/// All connected graphs on `n` vertices, one per isomorphism class.
/// Intended for `n <= 8`.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 8, "connected_graphs is exhaustive; n = {n} is too large");
    if n == 0 {
        return Vec::new();
    }
    all_graph_codes(n)
        .into_iter()
        .map(|code| decode(n, code))
        .filter(Graph::is_connected)
        .collect()
}

/// Every connected graph with 1..=7 vertices plus complete graphs, cycles,
/// paths and the Petersen graph.
pub fn specialization_corpus() -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 1..=7 {
        for (i, g) in connected_graphs(n).into_iter().enumerate() {
            out.push(NamedGraph::new(format!("conn{n}-{i}"), g));
        }
    }
    out.extend(named_families());
    out
}

/// `K_1..K_6`, `C_3..C_12`, `P_1..P_12` and Petersen.
pub fn named_families() -> Vec<NamedGraph> {
    let mut out = Vec::new();
    for n in 1..=6 {
        out.push(NamedGraph::new(format!("K{n}"), complete(n)));
    }
    for n in 3..=12 {
        out.push(NamedGraph::new(format!("C{n}"), cycle(n)));
    }
    for n in 1..=12 {
        out.push(NamedGraph::new(format!("P{n}"), path(n)));
    }
    out.push(NamedGraph::new("Petersen", petersen()));
    out
}

/// Graphs with at most 14 vertices and maximum degree between 2 and 4 for
/// the approximation suites.
pub fn approximation_corpus() -> Vec<NamedGraph> {
    vec![
        NamedGraph::new("K3", complete(3)),
        NamedGraph::new("K4", complete(4)),
        NamedGraph::new("K5", complete(5)),
        NamedGraph::new("C8", cycle(8)),
        NamedGraph::new("P10", path(10)),
        NamedGraph::new("Q3", hypercube(3)),
        NamedGraph::new("Petersen", petersen()),
        NamedGraph::new("Grid3x4", grid(3, 4)),
        NamedGraph::new("Star5", star(5)),
        NamedGraph::new("C12(1,2)", circulant(12, &[1, 2])),
        NamedGraph::new("Heawood", heawood()),
        NamedGraph::new("C14(1,3)", circulant(14, &[1, 3])),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_graph_counts() {
        // OEIS A001349
        let want = [1, 1, 2, 6, 21, 112];
        for (n, &w) in (1..=6).zip(&want) {
            assert_eq!(connected_graphs(n).len(), w, "n = {n}");
        }
    }

    #[test]
    fn all_graph_counts() {
        // OEIS A000088
        let want = [1, 2, 4, 11, 34, 156];
        for (n, &w) in (1..=6).zip(&want) {
            assert_eq!(all_graph_codes(n).len(), w, "n = {n}");
        }
    }

    #[test]
    fn pair_bits_are_dense() {
        let n = 7;
        let mut bits: Vec<usize> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| pair_bit(n, i, j)))
            .collect();
        bits.sort_unstable();
        assert_eq!(bits, (0..21).collect::<Vec<_>>());
    }
}

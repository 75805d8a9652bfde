//! Named graph families.

use crate::graph::Graph;

fn build(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    Graph::from_edges(n, edges).expect("generator produces a simple graph")
}

pub fn complete(n: usize) -> Graph {
    build(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// The cycle `C_n` for `n >= 3`; smaller `n` falls back to the path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    build(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn path(n: usize) -> Graph {
    build(n, (1..n).map(|i| (i - 1, i)))
}

/// Star with `n` vertices: center 0 joined to `1..n`.
pub fn star(n: usize) -> Graph {
    build(n, (1..n).map(|i| (0, i)))
}

pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    build(10, outer.chain(spokes).chain(inner))
}

pub fn grid(rows: usize, cols: usize) -> Graph {
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            if c + 1 < cols {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < rows {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    build(rows * cols, edges)
}

pub fn hypercube(dim: u32) -> Graph {
    let n = 1usize << dim;
    build(
        n,
        (0..n).flat_map(|u| (0..dim).map(move |b| (u, u ^ (1 << b))).filter(|&(u, v)| u < v)),
    )
}

/// Circulant graph: `i ~ i ± j (mod n)` for each jump `j`.
pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
    build(
        n,
        (0..n)
            .flat_map(|i| jumps.iter().map(move |&j| (i, (i + j) % n)))
            .filter(|&(u, v)| u != v),
    )
}

/// Heawood graph: the incidence graph of the Fano plane (cubic, girth 6).
pub fn heawood() -> Graph {
    let ring = (0..14).map(|i| (i, (i + 1) % 14));
    let chords = (0..14).step_by(2).map(|i| (i, (i + 5) % 14));
    build(14, ring.chain(chords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_sizes() {
        assert_eq!(complete(5).edge_count(), 10);
        assert_eq!(cycle(7).edge_count(), 7);
        assert_eq!(path(1).edge_count(), 0);
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(grid(3, 4).edge_count(), 17);
        assert_eq!(hypercube(3).edge_count(), 12);
        assert_eq!(circulant(14, &[1, 2]).max_degree(), 4);
        let h = heawood();
        assert_eq!(h.edge_count(), 21);
        assert!((0..14).all(|v| h.degree(v) == 3));
        assert_eq!(h.girth(), Some(6));
    }
}

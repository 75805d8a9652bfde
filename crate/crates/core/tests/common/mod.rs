//! Brute-force oracles shared by the integration tests. None of them use the
//! library's enumerators.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use sesquivalent::Graph;

/// `(v, e, c) -> count` by scanning every edge subset and classifying the
/// components of the spanning subgraph it induces.
pub fn brute_phi(g: &Graph) -> BTreeMap<(u32, u32, u32), u64> {
    let n = g.n();
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 24, "brute_phi: too many edges");
    let mut out = BTreeMap::new();
    for mask in 0u32..(1 << edges.len()) {
        let mut parent: Vec<usize> = (0..n).collect();
        let mut deg = vec![0usize; n];
        let chosen: Vec<(usize, usize)> = (0..edges.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| edges[i])
            .collect();
        for &(u, v) in &chosen {
            deg[u] += 1;
            deg[v] += 1;
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru] = rv;
        }
        let mut comp_vertices = vec![0usize; n];
        let mut comp_edges = vec![0usize; n];
        let mut comp_max_deg = vec![0usize; n];
        for (v, &d) in deg.iter().enumerate() {
            let r = find(&mut parent, v);
            comp_vertices[r] += 1;
            comp_max_deg[r] = comp_max_deg[r].max(d);
        }
        for &(u, _) in &chosen {
            let r = find(&mut parent, u);
            comp_edges[r] += 1;
        }
        let (mut iso, mut single, mut cycles) = (0u32, 0u32, 0u32);
        let mut ok = true;
        for r in 0..n {
            match (comp_vertices[r], comp_edges[r]) {
                (0, _) => {}
                (1, 0) => iso += 1,
                (2, 1) => single += 1,
                (k, m) if k == m && comp_max_deg[r] == 2 => cycles += 1,
                _ => {
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            *out.entry((iso, single, cycles)).or_insert(0) += 1;
        }
    }
    out
}

fn find(parent: &mut [usize], v: usize) -> usize {
    let mut r = v;
    while parent[r] != r {
        r = parent[r];
    }
    let mut v = v;
    while parent[v] != r {
        let next = parent[v];
        parent[v] = r;
        v = next;
    }
    r
}

/// Coefficient map of the library polynomial, for comparison with [`brute_phi`].
pub fn poly_map(p: &sesquivalent::SesquivalentPolynomial) -> BTreeMap<(u32, u32, u32), u64> {
    p.poly()
        .terms()
        .map(|(m, c)| ((m.v, m.e, m.c), u64::try_from(c.clone()).expect("nonnegative count")))
        .collect()
}

/// `det(λI - A)` at an integer `λ`, by Gaussian elimination over the rationals.
pub fn char_poly_at(g: &Graph, lambda: i64) -> BigRational {
    let n = g.n();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = if i == j {
                        lambda
                    } else if g.has_edge(i, j) {
                        -1
                    } else {
                        0
                    };
                    BigRational::from_integer(BigInt::from(v))
                })
                .collect()
        })
        .collect();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &p;
            let (top, bottom) = m.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &f * src;
            }
        }
    }
    det
}

/// Evaluates integer coefficients (ascending) at an integer point.
pub fn eval_int_poly(coeffs: &[BigInt], t: i64) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * t + c)
}

/// Matching counts by scanning edge subsets for pairwise disjointness.
pub fn brute_matching_counts(g: &Graph) -> Vec<u64> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 24, "brute_matching_counts: too many edges");
    let mut counts = vec![0u64; g.n() / 2 + 1];
    'outer: for mask in 0u32..(1 << edges.len()) {
        let mut used = 0u64;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                let bits = 1u64 << u | 1u64 << v;
                if used & bits != 0 {
                    continue 'outer;
                }
                used |= bits;
            }
        }
        counts[mask.count_ones() as usize] += 1;
    }
    counts
}

/// Number of `k`-cycles by checking every cyclic vertex sequence that starts
/// at its minimum, divided by the two orientations.
pub fn brute_cycle_count(g: &Graph, k: usize) -> usize {
    fn extend(g: &Graph, k: usize, path: &mut Vec<usize>, count: &mut usize) {
        if path.len() == k {
            if g.has_edge(*path.last().unwrap(), path[0]) {
                *count += 1;
            }
            return;
        }
        for v in path[0] + 1..g.n() {
            if !path.contains(&v) && g.has_edge(*path.last().unwrap(), v) {
                path.push(v);
                extend(g, k, path, count);
                path.pop();
            }
        }
    }
    if k < 3 {
        return 0;
    }
    let mut count = 0;
    for s in 0..g.n() {
        extend(g, k, &mut vec![s], &mut count);
    }
    count / 2
}

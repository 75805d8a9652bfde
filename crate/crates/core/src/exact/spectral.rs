use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::UniPoly;
use crate::graph::Graph;

/// `det(λI - A)` by the Faddeev–LeVerrier recurrence in exact integers.
///
/// `M_1 = I`, `c_{n-k} = -tr(A M_k) / k`, `M_{k+1} = A M_k + c_{n-k} I`.
/// Every division is exact for integer matrices.
pub fn char_poly_det_oracle(g: &Graph) -> UniPoly {
    let n = g.n();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    if n == 0 {
        return UniPoly::new(coeffs);
    }
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    for k in 1..=n {
        // A M, using the sparse adjacency of A
        let am: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| g.neighbors(i).iter().map(|&l| &m[l][j]).sum::<BigInt>())
                    .collect()
            })
            .collect();
        let trace: BigInt = (0..n).map(|i| &am[i][i]).sum();
        let (q, r) = (-trace).div_rem(&BigInt::from(k));
        debug_assert!(r.is_zero());
        coeffs[n - k] = q.clone();
        m = am;
        for (i, row) in m.iter_mut().enumerate() {
            row[i] += &q;
        }
    }
    UniPoly::new(coeffs)
}

/// Number of matchings of each size, by direct recursion over the edge list.
pub fn matching_counts_direct(g: &Graph) -> Vec<BigInt> {
    fn go(edges: &[(usize, usize)], used: &mut [bool], size: usize, counts: &mut Vec<BigInt>) {
        if counts.len() <= size {
            counts.resize(size + 1, BigInt::zero());
        }
        counts[size] += 1;
        for (i, &(u, v)) in edges.iter().enumerate() {
            if !used[u] && !used[v] {
                used[u] = true;
                used[v] = true;
                go(&edges[i + 1..], used, size + 1, counts);
                used[u] = false;
                used[v] = false;
            }
        }
    }
    let edges: Vec<_> = g.edges().collect();
    let mut counts = Vec::new();
    go(&edges, &mut vec![false; g.n()], 0, &mut counts);
    counts
}

/// Distinct complex roots of `p` from companion-matrix eigenvalues of its
/// square-free part, each refined by a few Newton steps.
pub fn distinct_roots(p: &UniPoly) -> Vec<Complex64> {
    let sf = p.squarefree_part();
    let deg = match sf.degree() {
        Some(d) if d >= 1 => d,
        _ => return Vec::new(),
    };
    let c: Vec<f64> = sf.coeffs().iter().map(|b| b.to_f64().unwrap_or(f64::NAN)).collect();
    let lead = c[deg];
    let mut companion = DMatrix::<f64>::zeros(deg, deg);
    for i in 1..deg {
        companion[(i, i - 1)] = 1.0;
    }
    for i in 0..deg {
        companion[(i, deg - 1)] = -c[i] / lead;
    }
    let deriv = sf.derivative();
    companion
        .complex_eigenvalues()
        .iter()
        .map(|&z0| {
            let mut z = z0;
            for _ in 0..4 {
                let d = deriv.eval_complex(z);
                if d.norm() == 0.0 {
                    break;
                }
                let step = sf.eval_complex(z) / d;
                if !step.is_finite() {
                    break;
                }
                z -= step;
            }
            z
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn det_oracle_examples() {
        assert_eq!(char_poly_det_oracle(&complete(2)), UniPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(char_poly_det_oracle(&complete(3)), UniPoly::from_i64(&[-2, -3, 0, 1]));
        assert_eq!(char_poly_det_oracle(&cycle(4)), UniPoly::from_i64(&[0, 0, -4, 0, 1]));
        assert_eq!(char_poly_det_oracle(&Graph::empty(0)), UniPoly::from_i64(&[1]));
    }

    #[test]
    fn matching_counts() {
        let to_i64 = |v: Vec<BigInt>| v.iter().map(|b| b.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(to_i64(matching_counts_direct(&complete(4))), vec![1, 6, 3]);
        assert_eq!(to_i64(matching_counts_direct(&petersen())), vec![1, 15, 75, 145, 90, 6]);
    }

    #[test]
    fn roots_of_star_matching_polynomial() {
        // x^4 (x^2 - 5) for the star on 6 vertices
        let p = UniPoly::from_i64(&[0, 0, 0, 0, -5, 0, 1]);
        let mut roots: Vec<f64> = distinct_roots(&p).iter().map(|z| z.re).collect();
        roots.sort_by(f64::total_cmp);
        let s5 = 5f64.sqrt();
        for (r, e) in roots.iter().zip([-s5, 0.0, s5]) {
            assert!((r - e).abs() < 1e-12);
        }
    }
}

//! Exact computation of the sesquivalent polynomial.
//!
//! A sesquivalent subgraph of `G` is a spanning subgraph whose components are
//! isolated vertices, single edges, or simple cycles. The polynomial weights
//! each one by `x` per isolated vertex, `y` per edge component and `z` per
//! cycle component.

mod poly;
mod spectral;

use std::collections::HashMap;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};
use crate::walk::Walker;

pub use poly::{Monomial, SesquivalentPolynomial, TriPoly, UniPoly};
pub use spectral::{char_poly_det_oracle, distinct_roots, matching_counts_direct};

pub const DEFAULT_ENUM_LIMIT: usize = 16;

/// Hard ceiling imposed by the 64-bit vertex masks used during enumeration.
pub const MAX_ENUM_VERTICES: usize = 64;

/// One sesquivalent subgraph, given by its components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesquivalentSubgraph {
    pub isolated: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub cycles: Vec<Cycle>,
}

impl SesquivalentSubgraph {
    pub fn v(&self) -> usize {
        self.isolated.len()
    }

    pub fn e(&self) -> usize {
        self.edges.len()
    }

    pub fn c(&self) -> usize {
        self.cycles.len()
    }

    /// `v + 2e + Σ |C|`, which equals the host's vertex count.
    pub fn covered(&self) -> usize {
        self.v() + 2 * self.e() + self.cycles.iter().map(Cycle::len).sum::<usize>()
    }

    pub fn monomial(&self) -> Monomial {
        Monomial::new(self.v() as u32, self.e() as u32, self.c() as u32)
    }
}

/// Exact enumeration with a configurable vertex-count guard.
#[derive(Clone, Copy, Debug)]
pub struct ExactEngine {
    enum_limit: usize,
}

impl Default for ExactEngine {
    fn default() -> Self {
        ExactEngine {
            enum_limit: DEFAULT_ENUM_LIMIT,
        }
    }
}

impl ExactEngine {
    /// The limit is clamped to [`MAX_ENUM_VERTICES`].
    pub fn new(enum_limit: usize) -> ExactEngine {
        ExactEngine {
            enum_limit: enum_limit.min(MAX_ENUM_VERTICES),
        }
    }

    pub fn enum_limit(&self) -> usize {
        self.enum_limit
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        if g.n() > self.enum_limit {
            Err(Error::SizeLimit {
                n: g.n(),
                limit: self.enum_limit,
            })
        } else {
            Ok(())
        }
    }

    /// Calls `f` once for every sesquivalent subgraph of `g`.
    pub fn for_each_sesquivalent<F>(&self, g: &Graph, mut f: F) -> Result<()>
    where
        F: FnMut(&SesquivalentSubgraph),
    {
        self.check(g)?;
        let walker = Walker::new(g, g.n());
        walker.walk(walker.full_mask(), true, &mut |s| {
            let h = SesquivalentSubgraph {
                isolated: {
                    let mut iso = s.isolated.clone();
                    iso.sort_unstable();
                    iso
                },
                edges: s.edges.clone(),
                cycles: s.cycles.iter().map(|&i| walker.cycle(i).clone()).collect(),
            };
            f(&h);
        });
        Ok(())
    }

    pub fn enumerate_sesquivalent(&self, g: &Graph) -> Result<Vec<SesquivalentSubgraph>> {
        let mut out = Vec::new();
        self.for_each_sesquivalent(g, |h| out.push(h.clone()))?;
        Ok(out)
    }

    pub fn phi_polynomial(&self, g: &Graph) -> Result<SesquivalentPolynomial> {
        self.check(g)?;
        let walker = Walker::new(g, g.n());
        let mut counts: HashMap<Monomial, u64> = HashMap::new();
        walker.walk(walker.full_mask(), true, &mut |s| {
            let m = Monomial::new(s.isolated.len() as u32, s.edges.len() as u32, s.cycles.len() as u32);
            *counts.entry(m).or_insert(0) += 1;
        });
        let mut poly = TriPoly::zero();
        for (m, count) in counts {
            poly.add_term(m, BigInt::from(count));
        }
        Ok(SesquivalentPolynomial::from_parts(g.n(), poly))
    }

    pub fn phi_eval(&self, g: &Graph, x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
        Ok(self.phi_polynomial(g)?.eval(x, y, z))
    }

    /// `Φ_G(λ, -1, -2)` as an integer polynomial in `λ`.
    pub fn char_poly_sachs(&self, g: &Graph) -> Result<UniPoly> {
        Ok(self.phi_polynomial(g)?.poly().specialize_yz(-1, -2))
    }

    /// `Φ_G(x, -1, 0)`, the matching polynomial.
    pub fn matching_poly(&self, g: &Graph) -> Result<UniPoly> {
        Ok(self.phi_polynomial(g)?.poly().specialize_yz(-1, 0))
    }

    /// `∂Φ_G/∂x - Σ_a Φ_{G-a}`; identically zero.
    pub fn derivative_identity_residual(&self, g: &Graph) -> Result<TriPoly> {
        let mut residual = self.phi_polynomial(g)?.poly().derivative_x();
        for a in 0..g.n() {
            let deck = self.phi_polynomial(&g.vertex_deleted(a)?)?;
            residual = &residual - deck.poly();
        }
        Ok(residual)
    }
}

pub fn enumerate_sesquivalent(g: &Graph) -> Result<Vec<SesquivalentSubgraph>> {
    ExactEngine::default().enumerate_sesquivalent(g)
}

pub fn phi_polynomial(g: &Graph) -> Result<SesquivalentPolynomial> {
    ExactEngine::default().phi_polynomial(g)
}

pub fn phi_eval(g: &Graph, x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    ExactEngine::default().phi_eval(g, x, y, z)
}

pub fn char_poly_sachs(g: &Graph) -> Result<UniPoly> {
    ExactEngine::default().char_poly_sachs(g)
}

pub fn matching_poly(g: &Graph) -> Result<UniPoly> {
    ExactEngine::default().matching_poly(g)
}

pub fn derivative_identity_residual(g: &Graph) -> Result<TriPoly> {
    ExactEngine::default().derivative_identity_residual(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    fn tri(terms: &[(u32, u32, u32, i64)]) -> TriPoly {
        let mut p = TriPoly::zero();
        for &(v, e, c, k) in terms {
            p.add_term(Monomial::new(v, e, c), k.into());
        }
        p
    }

    #[test]
    fn subgraph_counts() {
        assert_eq!(enumerate_sesquivalent(&complete(2)).unwrap().len(), 2);
        assert_eq!(enumerate_sesquivalent(&complete(3)).unwrap().len(), 5);
        assert_eq!(enumerate_sesquivalent(&complete(4)).unwrap().len(), 17);
    }

    #[test]
    fn every_subgraph_balances() {
        for h in enumerate_sesquivalent(&petersen()).unwrap() {
            assert_eq!(h.covered(), 10);
        }
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(
            phi_polynomial(&complete(3)).unwrap().poly(),
            &tri(&[(3, 0, 0, 1), (1, 1, 0, 3), (0, 0, 1, 1)])
        );
        assert_eq!(
            phi_polynomial(&cycle(4)).unwrap().poly(),
            &tri(&[(4, 0, 0, 1), (2, 1, 0, 4), (0, 2, 0, 2), (0, 0, 1, 1)])
        );
        assert_eq!(
            phi_polynomial(&complete(4)).unwrap().poly(),
            &tri(&[(4, 0, 0, 1), (2, 1, 0, 6), (0, 2, 0, 3), (1, 0, 1, 4), (0, 0, 1, 3)])
        );
        assert_eq!(
            phi_polynomial(&complete(4)).unwrap().to_string(),
            "x^4 + 6x^2y + 4xz + 3y^2 + 3z"
        );
    }

    #[test]
    fn evaluation_examples() {
        assert_eq!(phi_eval(&complete(3), c(2.0), c(-1.0), c(-2.0)).unwrap(), c(0.0));
        for g in [complete(4), petersen(), Graph::empty(3)] {
            assert_eq!(phi_eval(&g, c(1.0), c(0.0), c(0.0)).unwrap(), c(1.0));
        }
        assert_eq!(phi_eval(&cycle(4), c(1.0), c(1.0), c(1.0)).unwrap(), c(8.0));
    }

    #[test]
    fn char_poly_examples() {
        assert_eq!(
            char_poly_sachs(&complete(3)).unwrap(),
            UniPoly::from_i64(&[-2, -3, 0, 1])
        );
        assert_eq!(
            char_poly_sachs(&complete(4)).unwrap(),
            UniPoly::from_i64(&[-3, -8, -6, 0, 1])
        );
        assert_eq!(
            char_poly_sachs(&Graph::empty(4)).unwrap(),
            UniPoly::from_i64(&[0, 0, 0, 0, 1])
        );
    }

    #[test]
    fn matching_poly_examples() {
        assert_eq!(matching_poly(&complete(2)).unwrap(), UniPoly::from_i64(&[-1, 0, 1]));
        assert_eq!(matching_poly(&path(3)).unwrap(), UniPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(
            matching_poly(&complete(4)).unwrap(),
            UniPoly::from_i64(&[3, 0, -6, 0, 1])
        );
    }

    #[test]
    fn derivative_identity_examples() {
        for g in [complete(2), complete(3), Graph::empty(5), petersen()] {
            assert!(derivative_identity_residual(&g).unwrap().is_zero());
        }
    }

    #[test]
    fn size_guard() {
        let g = cycle(17);
        assert!(matches!(phi_polynomial(&g), Err(Error::SizeLimit { n: 17, limit: 16 })));
        assert!(ExactEngine::new(20).phi_polynomial(&g).is_ok());
        assert_eq!(ExactEngine::new(1000).enum_limit(), MAX_ENUM_VERTICES);
    }

    #[test]
    fn empty_graph_polynomial_is_one() {
        let p = phi_polynomial(&Graph::empty(0)).unwrap();
        assert_eq!(p.poly(), &tri(&[(0, 0, 0, 1)]));
    }
}

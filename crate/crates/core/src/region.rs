//! Zero-free region analytics for bounded-degree graphs.
//!
//! For maximum degree `Δ >= 2` and an auxiliary `a > 0`, write
//! `c = (Δ-1)e^a`, `α = (Δ-1)²/Δ` and `B = α(e^a - 1)`. The polynomial does
//! not vanish when `|x| > c` and `|y| + c/(|x| - c)·|z| <= B`. This is the
//! Fernández–Procacci criterion for the gas of edge and cycle polymers with
//! activities `y/x²` and `z/x^k`, after bounding the number of `k`-cycles
//! through a vertex by `Δ(Δ-1)^(k-2)`.

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A complex evaluation point `(x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
}

impl Point {
    pub fn new(x: Complex64, y: Complex64, z: Complex64) -> Point {
        Point { x, y, z }
    }

    pub fn real(x: f64, y: f64, z: f64) -> Point {
        Point::new(Complex64::new(x, 0.0), Complex64::new(y, 0.0), Complex64::new(z, 0.0))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FailedCondition {
    #[serde(rename = "x-condition")]
    XCondition,
    #[serde(rename = "main-inequality")]
    MainInequality,
}

impl fmt::Display for FailedCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedCondition::XCondition => "x-condition",
            FailedCondition::MainInequality => "main-inequality",
        })
    }
}

/// `α_Δ = (Δ-1)²/Δ`.
pub fn alpha(delta: usize) -> f64 {
    let d = delta as f64;
    (d - 1.0) * (d - 1.0) / d
}

/// Derived constants of the region for a fixed `Δ` and `a`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegionParams {
    pub delta_max: usize,
    pub a: f64,
    pub alpha: f64,
    /// `(Δ-1)e^a`, the threshold `|x|` must exceed.
    pub c: f64,
    /// `α(e^a - 1)`, the right-hand side of the main inequality.
    pub b: f64,
    pub girth: Option<usize>,
}

impl RegionParams {
    pub fn new(delta_max: usize, a: f64, girth: Option<usize>) -> Result<RegionParams> {
        if delta_max < 2 {
            return Err(Error::UnsupportedDegree { delta: delta_max });
        }
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidAuxiliary(a));
        }
        let alpha = alpha(delta_max);
        Ok(RegionParams {
            delta_max,
            a,
            alpha,
            c: (delta_max as f64 - 1.0) * a.exp(),
            b: alpha * a.exp_m1(),
            girth,
        })
    }

    /// Factor applied to the cycle term: `r^(g-3)` with `r = c/|x|` when a
    /// girth `g > 3` is supplied, else 1.
    fn girth_factor(&self, abs_x: f64) -> f64 {
        match self.girth {
            Some(g) if g > 3 => (self.c / abs_x).powf((g - 3) as f64),
            _ => 1.0,
        }
    }

    /// `|y| + c/(|x| - c)·|z|` (girth-scaled), or `+∞` when `|x| <= c`.
    pub fn lhs(&self, p: &Point) -> f64 {
        let ax = p.x.norm();
        if ax <= self.c {
            return f64::INFINITY;
        }
        p.y.norm() + self.c / (ax - self.c) * p.z.norm() * self.girth_factor(ax)
    }

    pub fn certify(&self, p: &Point) -> RegionCertificate {
        let ax = p.x.norm();
        let lhs = self.lhs(p);
        let failed = if ax <= self.c {
            Some(FailedCondition::XCondition)
        } else if lhs > self.b {
            Some(FailedCondition::MainInequality)
        } else {
            None
        };
        RegionCertificate {
            inside: failed.is_none(),
            lhs,
            rhs: self.b,
            delta_slack: self.b - p.y.norm(),
            a: self.a,
            c: self.c,
            alpha: self.alpha,
            failed,
        }
    }
}

/// Verdict of the region test with every quantity that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RegionCertificate {
    pub inside: bool,
    pub lhs: f64,
    pub rhs: f64,
    pub delta_slack: f64,
    pub a: f64,
    pub c: f64,
    pub alpha: f64,
    pub failed: Option<FailedCondition>,
}

impl RegionCertificate {
    /// Strict version of the test: `|x| > c` and `lhs < rhs`.
    pub fn strictly_inside(&self) -> bool {
        self.inside && self.lhs < self.rhs
    }
}

pub fn certify_region(delta: usize, a: f64, p: &Point, girth: Option<usize>) -> Result<RegionCertificate> {
    Ok(RegionParams::new(delta, a, girth)?.certify(p))
}

/// Per-vertex polymer counts of a concrete graph: incident edges and the
/// number of cycles of each length through the vertex.
#[derive(Clone, Debug)]
pub struct AnchoredPolymers {
    degrees: Vec<usize>,
    // cycles[v][k] = number of k-cycles through v
    cycles: Vec<Vec<usize>>,
}

impl AnchoredPolymers {
    pub fn new(g: &Graph) -> AnchoredPolymers {
        let n = g.n();
        let mut cycles = vec![vec![0usize; n + 1]; n];
        for cyc in g.enumerate_cycles(n) {
            for &v in cyc.vertices() {
                cycles[v][cyc.len()] += 1;
            }
        }
        AnchoredPolymers {
            degrees: (0..n).map(|v| g.degree(v)).collect(),
            cycles,
        }
    }

    pub fn cycle_counts(&self, v: usize) -> &[usize] {
        &self.cycles[v]
    }

    /// `Σ_{γ ∋ v} |ω(γ)| e^{a|V(γ)|}` with `ω(e) = y/x²`, `ω(C_k) = z/x^k`.
    pub fn fp_sum(&self, p: &Point, a: f64, v: usize) -> Result<f64> {
        if v >= self.degrees.len() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.degrees.len(),
            });
        }
        let ax = p.x.norm();
        if ax == 0.0 {
            return Err(Error::ZeroX);
        }
        let ratio = a.exp() / ax;
        let mut sum = self.degrees[v] as f64 * p.y.norm() * ratio * ratio;
        let az = p.z.norm();
        for (k, &count) in self.cycles[v].iter().enumerate().skip(3) {
            if count > 0 {
                sum += count as f64 * az * ratio.powi(k as i32);
            }
        }
        Ok(sum)
    }
}

/// Exact anchored polymer sum at `v` (left side of the Fernández–Procacci
/// condition).
pub fn fp_sum_exact(g: &Graph, p: &Point, a: f64, v: usize) -> Result<f64> {
    AnchoredPolymers::new(g).fp_sum(p, a, v)
}

/// Closed-form upper bound on [`fp_sum_exact`] for any graph of maximum
/// degree at most `Δ`:
/// `Δe^{2a}|y|/|x|² + Δ|z|/(Δ-1)² · r^g/(1-r)` with `r = (Δ-1)e^a/|x|` and
/// `g` the girth (3 when not supplied).
pub fn fp_sum_bound(delta: usize, p: &Point, a: f64, girth: Option<usize>) -> Result<f64> {
    let params = RegionParams::new(delta, a, girth)?;
    let ax = p.x.norm();
    if ax <= params.c {
        return Err(Error::DivergentSeries {
            abs_x: ax,
            threshold: params.c,
        });
    }
    let d = delta as f64;
    let r = params.c / ax;
    let g = girth.map_or(3.0, |g| g.max(3) as f64);
    let edge = d * (2.0 * a).exp() * p.y.norm() / (ax * ax);
    let cycle = d * p.z.norm() / ((d - 1.0) * (d - 1.0)) * r.powf(g) / (1.0 - r);
    Ok(edge + cycle)
}

/// Maximizer of the `z`-budget over `t = e^a`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OptimalA {
    pub t_star: f64,
    pub a_star: f64,
    /// `1 + |y|/α < t* < |x|/(Δ-1)`.
    pub admissible: bool,
}

/// `t* = sqrt(s(1 + |y|/α))` with `s = |x|/(Δ-1)`.
pub fn optimal_a(delta: usize, abs_x: f64, abs_y: f64) -> Result<OptimalA> {
    if delta < 2 {
        return Err(Error::UnsupportedDegree { delta });
    }
    let alpha = alpha(delta);
    let scale = abs_x / (delta as f64 - 1.0);
    let lower = 1.0 + abs_y / alpha;
    let t_star = (scale * lower).sqrt();
    Ok(OptimalA {
        t_star,
        a_star: t_star.ln(),
        admissible: lower < t_star && t_star < scale,
    })
}

/// `g(t) = (s/t - 1)(α(t - 1) - |y|)` with `s = |x|/(Δ-1)`: the largest `|z|`
/// certified at `a = ln t`.
pub fn g_of_t(delta: usize, abs_x: f64, abs_y: f64, t: f64) -> f64 {
    let alpha = alpha(delta);
    let scale = abs_x / (delta as f64 - 1.0);
    (scale / t - 1.0) * (alpha * (t - 1.0) - abs_y)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ZBudget {
    pub a: f64,
    pub z_max: f64,
    /// The raw budget was negative and has been clamped to zero.
    pub clamped: bool,
}

/// Largest certified `|z|` at the given `a`, or at the optimal `a` when
/// `a` is `None`.
pub fn z_max(delta: usize, abs_x: f64, abs_y: f64, a: Option<f64>) -> Result<ZBudget> {
    let a = match a {
        Some(a) => a,
        None => resolve_a(delta, abs_x, abs_y)?,
    };
    let params = RegionParams::new(delta, a, None)?;
    if abs_x <= params.c {
        return Err(Error::OutsideRegion {
            reason: FailedCondition::XCondition,
        });
    }
    let raw = (abs_x - params.c) / params.c * (params.b - abs_y);
    Ok(ZBudget {
        a,
        z_max: raw.max(0.0),
        clamped: raw < 0.0,
    })
}

/// Default auxiliary parameter: the optimum `a*`.
///
/// `t*` is the geometric mean of the two roots of `g`, so it lies strictly
/// between them exactly when the admissible interval is nonempty. When it
/// does not, no `a` yields a positive budget.
pub fn resolve_a(delta: usize, abs_x: f64, abs_y: f64) -> Result<f64> {
    let opt = optimal_a(delta, abs_x, abs_y)?;
    if opt.admissible {
        Ok(opt.a_star)
    } else {
        let reason = if abs_x / (delta as f64 - 1.0) <= 1.0 {
            FailedCondition::XCondition
        } else {
            FailedCondition::MainInequality
        };
        Err(Error::OutsideRegion { reason })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    const LN2: f64 = std::f64::consts::LN_2;

    #[test]
    fn certify_examples() {
        let cert = certify_region(3, LN2, &Point::real(20.0, -1.0, 0.1), None).unwrap();
        assert!(cert.inside);
        assert!((cert.lhs - 1.025).abs() < 1e-12);
        assert!((cert.rhs - 4.0 / 3.0).abs() < 1e-12);
        assert!((cert.delta_slack - 1.0 / 3.0).abs() < 1e-12);

        let cert = certify_region(3, LN2, &Point::real(3.0, 0.0, 0.0), None).unwrap();
        assert!(!cert.inside);
        assert_eq!(cert.failed, Some(FailedCondition::XCondition));
        assert!((cert.c - 4.0).abs() < 1e-12);

        for delta in 2..7 {
            let cert = certify_region(delta, 0.5, &Point::real(100.0, 0.0, 0.0), None).unwrap();
            assert!(cert.inside);
            assert_eq!(cert.lhs, 0.0);
        }
    }

    #[test]
    fn boundary_counts_as_inside() {
        let params = RegionParams::new(3, LN2, None).unwrap();
        let p = Point::real(20.0, params.b, 0.0);
        let cert = params.certify(&p);
        assert!(cert.inside);
        assert!(!cert.strictly_inside());
    }

    #[test]
    fn low_degree_rejected() {
        assert!(matches!(
            certify_region(1, 1.0, &Point::real(5.0, 0.0, 0.0), None),
            Err(Error::UnsupportedDegree { delta: 1 })
        ));
        assert!(certify_region(2, 0.0, &Point::real(5.0, 0.0, 0.0), None).is_err());
    }

    #[test]
    fn fp_sum_exact_examples() {
        let p = Point::real(20.0, -1.0, 0.1);
        for v in 0..4 {
            let s = fp_sum_exact(&cycle(4), &p, LN2, v).unwrap();
            assert!((s - 0.02001).abs() < 1e-15);
        }
        let q = Point::real(20.0, -1.0, 7.0);
        let s = fp_sum_exact(&path(5), &q, LN2, 2).unwrap();
        assert!((s - 2.0 * 4.0 / 400.0).abs() < 1e-15);
        assert_eq!(
            fp_sum_exact(&complete(2), &Point::real(3.0, 0.0, 1.0), 1.0, 0).unwrap(),
            0.0
        );
        assert!(matches!(
            fp_sum_exact(&complete(2), &Point::real(0.0, 1.0, 1.0), 1.0, 0),
            Err(Error::ZeroX)
        ));
    }

    #[test]
    fn fp_sum_bound_examples() {
        let b = fp_sum_bound(3, &Point::real(20.0, -1.0, 0.1), LN2, None).unwrap();
        assert!((b - 0.03075).abs() < 1e-14);
        let b = fp_sum_bound(3, &Point::real(20.0, -1.0, 0.0), LN2, None).unwrap();
        assert!((b - 3.0 * 4.0 / 400.0).abs() < 1e-15);
        let b = fp_sum_bound(3, &Point::real(1e12, -1.0, 0.1), LN2, None).unwrap();
        assert!(b < 1e-20);
        assert!(matches!(
            fp_sum_bound(3, &Point::real(4.0, -1.0, 0.1), LN2, None),
            Err(Error::DivergentSeries { .. })
        ));
    }

    #[test]
    fn optimal_a_examples() {
        let opt = optimal_a(3, 20.0, 1.0).unwrap();
        assert!((opt.t_star - 17.5f64.sqrt()).abs() < 1e-12);
        assert!((opt.a_star - 1.431_1).abs() < 1e-4);
        assert!(opt.admissible);
        let opt = optimal_a(3, 20.0, 0.0).unwrap();
        assert!((opt.t_star - 10f64.sqrt()).abs() < 1e-12);
        // s = 1.5 < 1 + |y|/α = 1.75: empty interval
        let opt = optimal_a(3, 3.0, 1.0).unwrap();
        assert!(!opt.admissible);
    }

    #[test]
    fn g_of_t_examples() {
        let s = 10.0;
        assert_eq!(g_of_t(3, 20.0, 1.0, s), 0.0);
        assert!(g_of_t(3, 20.0, 1.0, 1.0 + 0.75).abs() < 1e-15);
        let t = optimal_a(3, 20.0, 1.0).unwrap().t_star;
        let closed = 4.0 / 3.0 * s + (4.0 / 3.0 + 1.0) - 2.0 * 4.0 / 3.0 * t;
        assert!((g_of_t(3, 20.0, 1.0, t) - closed).abs() < 1e-12);
        assert!((closed - 4.5111).abs() < 1e-4);
    }

    #[test]
    fn z_max_examples() {
        let at_opt = z_max(3, 20.0, 1.0, None).unwrap();
        assert!((at_opt.z_max - 4.5111).abs() < 1e-4);
        let at_ln2 = z_max(3, 20.0, 1.0, Some(LN2)).unwrap();
        assert!((at_ln2.z_max - 4.0 / 3.0).abs() < 1e-12);
        let clamped = z_max(2, 20.0, 1.0, Some(LN2)).unwrap();
        assert_eq!(clamped.z_max, 0.0);
        assert!(clamped.clamped);
        assert!(matches!(z_max(3, 3.0, 1.0, None), Err(Error::OutsideRegion { .. })));
    }

    #[test]
    fn girth_refinement_shrinks_lhs() {
        let p = Point::real(20.0, -1.0, 3.0);
        let plain = certify_region(3, LN2, &p, None).unwrap();
        let refined = certify_region(3, LN2, &p, Some(5)).unwrap();
        assert!(refined.lhs < plain.lhs);
        let r: f64 = 4.0 / 20.0;
        assert!(((refined.lhs - 1.0) - (plain.lhs - 1.0) * r * r).abs() < 1e-12);
    }
}

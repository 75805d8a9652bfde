//! Deterministic approximation of `Φ_G(x, y, z)` by Taylor truncation of
//! `log F(t)`, where `F(t) = t^n Φ_G(x/t, y, z)`.
//!
//! Inside the certified region `F` has no zeros on the disk `|t| <= ρ` with
//! `ρ = |x| / (c(1 + |z|/δ))`, so truncating `log F` after
//! `m = ⌈ln(n/((ρ-1)ε)) / ln ρ⌉` terms costs at most `ε` at `t = 1`.
//! The Taylor coefficients of `F̃ = F/x^n` are sums of induced-subgraph
//! weights `λ(G[U])` over vertex subsets of size `k`, and `log F̃` follows
//! by the formal power-series logarithm.

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::SesquivalentPolynomial;
use crate::graph::Graph;
use crate::region::{resolve_a, FailedCondition, Point, RegionParams};
use crate::walk::Walker;

pub const DEFAULT_M_CAP: usize = 12;

#[derive(Clone, Copy, Debug)]
pub struct ApproxConfig {
    /// Analytic degree bound; defaults to `max(max_degree(G), 2)`.
    pub delta: Option<usize>,
    pub m_cap: usize,
}

impl Default for ApproxConfig {
    fn default() -> Self {
        ApproxConfig {
            delta: None,
            m_cap: DEFAULT_M_CAP,
        }
    }
}

impl ApproxConfig {
    pub fn analytic_delta(&self, g: &Graph) -> Result<usize> {
        let max_degree = g.max_degree();
        match self.delta {
            Some(delta) if delta < max_degree => Err(Error::DeltaBelowMaxDegree { delta, max_degree }),
            Some(delta) => Ok(delta),
            None => Ok(max_degree.max(2)),
        }
    }
}

#[derive(Clone, Copy, Debug, Serialize)]
pub struct InterpolationPlan {
    #[serde(serialize_with = "ser_point")]
    pub point: Point,
    pub n: usize,
    pub delta: usize,
    pub a: f64,
    pub c: f64,
    pub alpha: f64,
    pub b: f64,
    pub delta_slack: f64,
    pub rho: f64,
    pub m: usize,
    pub epsilon: f64,
    /// `n / ((m+1)(ρ-1)ρ^m)`, the certified bound on the truncation error.
    pub tail_bound: f64,
}

/// Bound on `|log F(1) - T_m(1)|` for a zero-free disk of radius `rho`.
pub fn tail_bound(n: usize, rho: f64, m: usize) -> f64 {
    n as f64 / ((m as f64 + 1.0) * (rho - 1.0) * rho.powi(m as i32))
}

/// Smallest truncation order certified by the tail bound.
pub fn truncation_order(n: usize, rho: f64, epsilon: f64) -> usize {
    if n == 0 {
        return 0;
    }
    let m = ((n as f64 / ((rho - 1.0) * epsilon)).ln() / rho.ln()).ceil();
    if m > 0.0 {
        m as usize
    } else {
        0
    }
}

/// Sizes the zero-free disk and the truncation order at `point`.
///
/// `a` defaults to the optimal auxiliary parameter. The point must satisfy
/// the region inequality strictly.
pub fn make_plan(
    g: &Graph,
    point: &Point,
    a: Option<f64>,
    epsilon: f64,
    config: &ApproxConfig,
) -> Result<InterpolationPlan> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::InvalidEpsilon(epsilon));
    }
    if point.x.is_zero() {
        return Err(Error::ZeroX);
    }
    let delta = config.analytic_delta(g)?;
    let a = match a {
        Some(a) => a,
        None => resolve_a(delta, point.x.norm(), point.y.norm())?,
    };
    let params = RegionParams::new(delta, a, None)?;
    let cert = params.certify(point);
    if let Some(reason) = cert.failed {
        return Err(Error::OutsideRegion { reason });
    }
    if !cert.strictly_inside() {
        return Err(Error::OutsideRegion {
            reason: FailedCondition::MainInequality,
        });
    }
    let delta_slack = cert.delta_slack;
    let rho = point.x.norm() / (params.c * (1.0 + point.z.norm() / delta_slack));
    let n = g.n();
    let m = truncation_order(n, rho, epsilon);
    if m > config.m_cap {
        return Err(Error::TruncationCap { m, cap: config.m_cap });
    }
    Ok(InterpolationPlan {
        point: *point,
        n,
        delta,
        a,
        c: params.c,
        alpha: params.alpha,
        b: params.b,
        delta_slack,
        rho,
        m,
        epsilon,
        tail_bound: tail_bound(n, rho, m),
    })
}

/// Coefficients of `F̃(t) = F(t)/x^n` from the full polynomial:
/// `[t^k] F̃ = x^{-k} Σ_{n - v(H) = k} y^{e(H)} z^{c(H)}`.
pub fn normalized_interpolation_coefficients(poly: &SesquivalentPolynomial, point: &Point) -> Vec<Complex64> {
    let n = poly.n();
    let mut out = vec![Complex64::zero(); n + 1];
    let inv_x = point.x.inv();
    for (m, coef) in poly.poly().terms() {
        let k = n - m.v as usize;
        let w = inv_x.powu(k as u32) * point.y.powu(m.e) * point.z.powu(m.c);
        out[k] += w * num_traits::ToPrimitive::to_f64(coef).unwrap_or(f64::NAN);
    }
    out
}

/// `F(t) = t^n Φ_G(x/t, y, z)`, with `F(0) = x^n`.
pub fn interpolation_value(poly: &SesquivalentPolynomial, point: &Point, t: Complex64) -> Complex64 {
    if t.is_zero() {
        return point.x.powu(poly.n() as u32);
    }
    t.powu(poly.n() as u32) * poly.eval(point.x / t, point.y, point.z)
}

/// `λ(J) = x^{-k} Σ y^{e(S)} z^{c(S)}` over spanning sesquivalent subgraphs
/// `S` of `J` without isolated vertices.
pub fn lambda_weight(j: &Graph, point: &Point) -> Result<Complex64> {
    if point.x.is_zero() {
        return Err(Error::ZeroX);
    }
    if j.n() > crate::exact::MAX_ENUM_VERTICES {
        return Err(Error::SizeLimit {
            n: j.n(),
            limit: crate::exact::MAX_ENUM_VERTICES,
        });
    }
    let walker = Walker::new(j, j.n());
    let mut sum = Complex64::zero();
    walker.walk(walker.full_mask(), false, &mut |s| {
        sum += point.y.powu(s.edges.len() as u32) * point.z.powu(s.cycles.len() as u32);
    });
    Ok(sum * point.x.inv().powu(j.n() as u32))
}

/// `a_0..a_m` of `F̃`, with `a_k = Σ_{|U| = k} λ(G[U])`.
///
/// Subsets are visited in colex order; any subset containing a vertex with
/// no neighbor inside it has weight zero and is skipped.
pub fn series_coefficients(g: &Graph, point: &Point, m: usize) -> Result<Vec<Complex64>> {
    if point.x.is_zero() {
        return Err(Error::ZeroX);
    }
    let n = g.n();
    if n > crate::exact::MAX_ENUM_VERTICES {
        return Err(Error::SizeLimit {
            n,
            limit: crate::exact::MAX_ENUM_VERTICES,
        });
    }
    let top = m.min(n);
    let walker = Walker::new(g, top);
    let masks = g.neighbor_masks();
    let inv_x = point.x.inv();
    let mut out = vec![Complex64::zero(); m + 1];
    out[0] = Complex64::new(1.0, 0.0);

    for (k, slot) in out.iter_mut().enumerate().take(top + 1).skip(1) {
        let mut acc = Complex64::zero();
        for_each_k_subset(n, k, |u| {
            let mut rest = u;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if masks[v] & u == 0 {
                    return;
                }
            }
            let mut lambda = Complex64::zero();
            walker.walk(u, false, &mut |s| {
                lambda += point.y.powu(s.edges.len() as u32) * point.z.powu(s.cycles.len() as u32);
            });
            acc += lambda;
        });
        *slot = acc * inv_x.powu(k as u32);
    }
    Ok(out)
}

// k-subsets of 0..n as bit masks in increasing numeric (colex) order.
fn for_each_k_subset<F: FnMut(u64)>(n: usize, k: usize, mut f: F) {
    if k > n {
        return;
    }
    if k == 0 {
        f(0);
        return;
    }
    let limit: u128 = 1u128 << n;
    let mut s: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    loop {
        f(s);
        let c = s & s.wrapping_neg();
        let r = s as u128 + c as u128;
        if r >= limit {
            break;
        }
        let r = r as u64;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

/// `[t^k] log(Σ a_j t^j)` for `k = 0..=m`, via
/// `k b_k = k a_k - Σ_{j=1}^{k-1} j b_j a_{k-j}`. `b_0 = 0` since `a_0 = 1`.
pub fn series_log(a: &[Complex64]) -> Result<Vec<Complex64>> {
    let Some(&a0) = a.first() else {
        return Ok(Vec::new());
    };
    if (a0 - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
        return Err(Error::NotNormalized(a0));
    }
    // a_j vanishes past `deg`, so only the last `deg` terms of the sum survive
    let deg = a.iter().rposition(|x| !x.is_zero()).unwrap_or(0);
    let mut b = vec![Complex64::zero(); a.len()];
    for k in 1..a.len() {
        let mut acc = a[k] * k as f64;
        for j in k.saturating_sub(deg).max(1)..k {
            acc -= b[j] * a[k - j] * j as f64;
        }
        b[k] = acc / k as f64;
    }
    Ok(b)
}

/// Truncated Taylor series of `log F` at `t = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct TruncatedLogSeries {
    /// `b_0..b_m`, with `b_0 = n·Log(x)` on the principal branch.
    #[serde(serialize_with = "ser_complex_vec")]
    pub b: Vec<Complex64>,
    pub tail_bound: f64,
}

impl TruncatedLogSeries {
    /// Inverse power sums of the zeros of `F̃`: `p_j = -j b_j`.
    pub fn power_sums(&self) -> Vec<Complex64> {
        self.b.iter().enumerate().skip(1).map(|(j, b)| -b * j as f64).collect()
    }

    /// `T_m(1) = Σ b_k`.
    pub fn log_value(&self) -> Complex64 {
        self.b.iter().sum()
    }
}

#[derive(Clone, Debug)]
pub struct Approximation {
    pub phi_hat: Complex64,
    pub plan: InterpolationPlan,
    pub series: TruncatedLogSeries,
    /// Normalized coefficients `a_0..a_m` the series was built from.
    pub coefficients: Vec<Complex64>,
}

pub fn approximate_with_plan(g: &Graph, plan: InterpolationPlan) -> Result<Approximation> {
    let a = series_coefficients(g, &plan.point, plan.m)?;
    let mut b = series_log(&a)?;
    b[0] = plan.point.x.ln() * plan.n as f64;
    let series = TruncatedLogSeries {
        b,
        tail_bound: plan.tail_bound,
    };
    Ok(Approximation {
        phi_hat: series.log_value().exp(),
        plan,
        series,
        coefficients: a,
    })
}

/// Approximates `Φ_G(x, y, z)` as `Φ̂ = Φ e^η` with `|η| <= ε`.
pub fn approximate_phi(
    g: &Graph,
    point: &Point,
    a: Option<f64>,
    epsilon: f64,
    config: &ApproxConfig,
) -> Result<Approximation> {
    let plan = make_plan(g, point, a, epsilon, config)?;
    approximate_with_plan(g, plan)
}

fn ser_complex_vec<S: serde::Serializer>(v: &[Complex64], s: S) -> std::result::Result<S::Ok, S::Error> {
    v.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>().serialize(s)
}

fn ser_point<S: serde::Serializer>(p: &Point, s: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Pt {
        x: [f64; 2],
        y: [f64; 2],
        z: [f64; 2],
    }
    Pt {
        x: [p.x.re, p.x.im],
        y: [p.y.re, p.y.im],
        z: [p.z.re, p.z.im],
    }
    .serialize(s)
}

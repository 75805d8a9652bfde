//! Corpus-wide validation suites driven by `sesq validate`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corpus::{approximation_corpus, specialization_corpus, NamedGraph};
use crate::error::Error;
use crate::exact::{char_poly_det_oracle, distinct_roots, matching_counts_direct, ExactEngine, UniPoly};
use crate::interpolator::{
    approximate_with_plan, make_plan, normalized_interpolation_coefficients, series_coefficients, ApproxConfig,
};
use crate::region::{fp_sum_bound, g_of_t, optimal_a, z_max, AnchoredPolymers, Point, RegionParams};

pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Specialization,
    Region,
    Optimality,
    Approx,
}

impl Suite {
    pub const ALL: [Suite; 4] = [Suite::Specialization, Suite::Region, Suite::Optimality, Suite::Approx];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Specialization => "specialization",
            Suite::Region => "region",
            Suite::Optimality => "optimality",
            Suite::Approx => "approx",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Accepts a suite name, optionally with an `-only` suffix.
impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Suite, String> {
        let base = s.strip_suffix("-only").unwrap_or(s);
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == base)
            .ok_or_else(|| format!("unknown suite `{s}` (expected one of specialization, region, optimality, approx)"))
    }
}

#[derive(Clone, Debug)]
pub struct ValidateOptions {
    pub suites: Vec<Suite>,
    pub seed: u64,
    pub region_points: usize,
    pub approx_points_per_graph: usize,
    pub enum_limit: usize,
    /// Additional graphs appended to every corpus.
    pub extra: Vec<NamedGraph>,
}

impl Default for ValidateOptions {
    fn default() -> Self {
        ValidateOptions {
            suites: Suite::ALL.to_vec(),
            seed: DEFAULT_SEED,
            region_points: 1000,
            approx_points_per_graph: 10,
            enum_limit: crate::exact::DEFAULT_ENUM_LIMIT,
            extra: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(suite: Suite) -> SuiteReport {
        SuiteReport {
            suite: suite.name().to_string(),
            ..Default::default()
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn run(opts: &ValidateOptions) -> Vec<SuiteReport> {
    opts.suites
        .iter()
        .map(|suite| match suite {
            Suite::Specialization => specialization_suite(opts),
            Suite::Region => region_suite(opts),
            Suite::Optimality => optimality_suite(opts),
            Suite::Approx => approx_suite(opts),
        })
        .collect()
}

fn random_phase(rng: &mut impl Rng, modulus: f64) -> Complex64 {
    Complex64::from_polar(modulus, rng.gen_range(-PI..PI))
}

/// Draws `(point, a)` strictly inside the certified region for degree bound
/// `delta`: `a ∈ [0.05, 1.5]`, `|x| = c(1+s)` with `s` log-uniform in
/// `[0.05, 5]`, and `|y|`, `|z|` at most 95% of their remaining budgets.
pub fn sample_interior_point(rng: &mut impl Rng, delta: usize) -> (Point, f64) {
    let a = rng.gen_range(0.05..1.5);
    let params = RegionParams::new(delta, a, None).expect("delta >= 2 and a > 0");
    let s = rng.gen_range(0.05f64.ln()..5f64.ln()).exp();
    let abs_x = params.c * (1.0 + s);
    let abs_y = params.b * rng.gen_range(0.0..0.95);
    let budget = (params.b - abs_y) * (abs_x - params.c) / params.c;
    let abs_z = budget * rng.gen_range(0.0..0.95);
    let point = Point::new(
        random_phase(rng, abs_x),
        random_phase(rng, abs_y),
        random_phase(rng, abs_z),
    );
    (point, a)
}

/// Matching polynomial `Σ (-1)^k m_k x^{n-2k}` from matching counts.
pub fn matching_poly_from_counts(n: usize, counts: &[BigInt]) -> UniPoly {
    let mut coeffs = vec![BigInt::from(0); n + 1];
    for (k, m) in counts.iter().enumerate() {
        coeffs[n - 2 * k] = if k % 2 == 0 { m.clone() } else { -m.clone() };
    }
    UniPoly::new(coeffs)
}

fn specialization_suite(opts: &ValidateOptions) -> SuiteReport {
    let engine = ExactEngine::new(opts.enum_limit);
    let mut report = SuiteReport::new(Suite::Specialization);
    let mut corpus = specialization_corpus();
    corpus.extend(opts.extra.iter().cloned());
    for NamedGraph { name, graph } in &corpus {
        let poly = match engine.phi_polynomial(graph) {
            Ok(p) => p,
            Err(e) => {
                report.check(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let sachs = poly.poly().specialize_yz(-1, -2);
        report.check(sachs == char_poly_det_oracle(graph), || {
            format!("{name}: Φ(λ,-1,-2) differs from det(λI - A)")
        });

        let matching = poly.poly().specialize_yz(-1, 0);
        let direct = matching_poly_from_counts(graph.n(), &matching_counts_direct(graph));
        report.check(matching == direct, || {
            format!("{name}: Φ(x,-1,0) differs from direct matching count")
        });

        let delta = graph.max_degree();
        if delta >= 2 {
            let bound = 2.0 * ((delta - 1) as f64).sqrt() + 1e-9;
            for root in distinct_roots(&matching) {
                report.check(root.im.abs() < 1e-7 && root.re.abs() <= bound, || {
                    format!("{name}: matching root {root} outside [-{bound}, {bound}]")
                });
            }
        }

        if graph.n() <= 8 {
            let ok = engine
                .derivative_identity_residual(graph)
                .map(|r| r.is_zero())
                .unwrap_or(false);
            report.check(ok, || format!("{name}: derivative identity residual is nonzero"));
        }
    }
    report
}

fn region_suite(opts: &ValidateOptions) -> SuiteReport {
    let engine = ExactEngine::new(opts.enum_limit);
    let mut report = SuiteReport::new(Suite::Region);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut corpus = specialization_corpus();
    corpus.extend(opts.extra.iter().cloned());
    for NamedGraph { name, graph } in corpus.iter().filter(|g| g.graph.n() <= 12 && g.graph.max_degree() >= 2) {
        let Ok(poly) = engine.phi_polynomial(graph) else {
            continue;
        };
        let anchored = AnchoredPolymers::new(graph);
        let delta = graph.max_degree();
        for _ in 0..opts.region_points {
            let (p, a) = sample_interior_point(&mut rng, delta);
            let value = poly.eval(p.x, p.y, p.z);
            let normalized = value.norm() / p.x.norm().powi(graph.n() as i32);
            report.check(normalized > 1e-10, || {
                format!("{name}: |Φ|/|x|^n = {normalized:e} at {p:?}")
            });

            let bound = fp_sum_bound(delta, &p, a, None).unwrap_or(f64::INFINITY);
            let worst = (0..graph.n())
                .map(|v| anchored.fp_sum(&p, a, v).unwrap_or(f64::INFINITY))
                .fold(0.0, f64::max);
            report.check(worst <= bound * (1.0 + 1e-12), || {
                format!("{name}: anchored sum {worst} exceeds bound {bound}")
            });
            report.check(bound <= a.exp_m1() * (1.0 + 1e-12), || {
                format!("{name}: bound {bound} exceeds e^a - 1 = {}", a.exp_m1())
            });
        }
    }
    report
}

/// Least-squares fit of `z ≈ slope·X + k·√X + b`; returns `slope`.
pub fn fit_linear_sqrt_slope(xs: &[f64], zs: &[f64]) -> f64 {
    let design = DMatrix::from_fn(xs.len(), 3, |i, j| match j {
        0 => xs[i],
        1 => xs[i].sqrt(),
        _ => 1.0,
    });
    let rhs = DVector::from_column_slice(zs);
    let svd = design.svd(true, true);
    let coef = svd.solve(&rhs, 1e-14).expect("full-rank design");
    coef[0]
}

fn optimality_suite(opts: &ValidateOptions) -> SuiteReport {
    let mut report = SuiteReport::new(Suite::Optimality);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x0917);
    for _ in 0..50 {
        let delta = rng.gen_range(2..=6usize);
        let alpha = crate::region::alpha(delta);
        let abs_y = rng.gen_range(0.0..3.0);
        let lower = 1.0 + abs_y / alpha;
        let abs_x = (delta as f64 - 1.0) * lower * lower * rng.gen_range(1.2..100.0);
        let scale = abs_x / (delta as f64 - 1.0);
        let opt = optimal_a(delta, abs_x, abs_y).expect("delta >= 2");
        report.check(opt.admissible, || {
            format!("Δ={delta} |x|={abs_x} |y|={abs_y}: t* not admissible")
        });
        let best = g_of_t(delta, abs_x, abs_y, opt.t_star);
        for i in 0..1000 {
            let t = lower + (scale - lower) * (i as f64 + 0.5) / 1000.0;
            let g = g_of_t(delta, abs_x, abs_y, t);
            report.check(best >= g - 1e-12 * best.abs(), || {
                format!("Δ={delta} |x|={abs_x} |y|={abs_y}: g({t}) = {g} > g(t*) = {best}")
            });
        }
        let t1 = rng.gen_range(lower..scale);
        let t2 = rng.gen_range(t1..scale);
        let mid = g_of_t(delta, abs_x, abs_y, 0.5 * (t1 + t2));
        let chord = 0.5 * (g_of_t(delta, abs_x, abs_y, t1) + g_of_t(delta, abs_x, abs_y, t2));
        report.check(t2 <= t1 || mid > chord, || format!("g not concave on [{t1}, {t2}]"));
    }

    let worked = z_max(3, 20.0, 1.0, None).map(|b| b.z_max).unwrap_or(f64::NAN);
    report.check((worked - 4.5111).abs() <= 1e-3, || {
        format!("g(t*) at Δ=3, |x|=20, |y|=1 is {worked}")
    });

    let xs = [1e2, 1e3, 1e4, 1e5];
    for abs_y in [0.0, 1.0] {
        let zs: Vec<f64> = xs
            .iter()
            .map(|&x| z_max(3, x, abs_y, None).map(|b| b.z_max).unwrap_or(f64::NAN))
            .collect();
        let slope = fit_linear_sqrt_slope(&xs, &zs);
        report.check((slope / (2.0 / 3.0) - 1.0).abs() < 0.01, || {
            format!("|y|={abs_y}: fitted slope {slope} vs 2/3")
        });
    }
    let ratio = z_max(3, 1e5, 0.0, None).map(|b| b.z_max / 1e5).unwrap_or(f64::NAN);
    report.check((ratio / (2.0 / 3.0) - 1.0).abs() < 0.01, || {
        format!("z_max/|x| at 1e5 is {ratio}")
    });
    report
}

fn approx_suite(opts: &ValidateOptions) -> SuiteReport {
    let engine = ExactEngine::new(opts.enum_limit);
    let mut report = SuiteReport::new(Suite::Approx);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0xa990);
    let config = ApproxConfig { delta: None, m_cap: 64 };
    let mut corpus = approximation_corpus();
    corpus.extend(opts.extra.iter().filter(|g| g.graph.n() <= 14).cloned());
    for NamedGraph { name, graph } in &corpus {
        let Ok(poly) = engine.phi_polynomial(graph) else {
            continue;
        };
        let delta = config.analytic_delta(graph).expect("default delta");
        for eps in [0.1, 0.01] {
            let mut done = 0;
            let mut attempts = 0;
            while done < opts.approx_points_per_graph && attempts < 50 * opts.approx_points_per_graph {
                attempts += 1;
                let (p, a) = sample_interior_point(&mut rng, delta);
                let plan = match make_plan(graph, &p, Some(a), eps, &config) {
                    Ok(plan) => plan,
                    Err(Error::TruncationCap { .. }) => continue,
                    Err(e) => {
                        report.check(false, || format!("{name}: {e}"));
                        continue;
                    }
                };
                done += 1;
                let approx = match approximate_with_plan(graph, plan) {
                    Ok(r) => r,
                    Err(e) => {
                        report.check(false, || format!("{name}: {e}"));
                        continue;
                    }
                };
                let exact = poly.eval(p.x, p.y, p.z);
                let eta = (approx.phi_hat / exact).ln().norm();
                report.check(eta <= eps, || format!("{name}: |η| = {eta} > ε = {eps} at {p:?}"));
                report.check(eta <= plan.tail_bound + 1e-9, || {
                    format!("{name}: |η| = {eta} above tail bound {}", plan.tail_bound)
                });
            }
        }
        if graph.n() <= 12 {
            for _ in 0..5 {
                let (p, _) = sample_interior_point(&mut rng, delta);
                let n = graph.n();
                let Ok(fast) = series_coefficients(graph, &p, n) else {
                    continue;
                };
                let reference = normalized_interpolation_coefficients(&poly, &p);
                let abs_p = Point::real(p.x.norm(), p.y.norm(), p.z.norm());
                let scale = normalized_interpolation_coefficients(&poly, &abs_p);
                for k in 0..=n {
                    let diff = (fast[k] - reference[k]).norm();
                    report.check(diff <= 1e-10 * scale[k].re.max(f64::MIN_POSITIVE), || {
                        format!("{name}: a_{k} differs by {diff:e}")
                    });
                }
            }
        }
    }
    report
}

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent triple of `x^v y^e z^c`. Ordered lexicographically by `(v, e, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Monomial {
    pub v: u32,
    pub e: u32,
    pub c: u32,
}

impl Monomial {
    pub const fn new(v: u32, e: u32, c: u32) -> Monomial {
        Monomial { v, e, c }
    }

    pub fn eval(&self, x: Complex64, y: Complex64, z: Complex64) -> Complex64 {
        x.powu(self.v) * y.powu(self.e) * z.powu(self.c)
    }
}

/// Sparse trivariate polynomial with integer coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl TriPoly {
    pub fn zero() -> TriPoly {
        TriPoly::default()
    }

    pub fn monomial(m: Monomial, coef: impl Into<BigInt>) -> TriPoly {
        let mut p = TriPoly::zero();
        p.add_term(m, coef.into());
        p
    }

    pub fn add_term(&mut self, m: Monomial, coef: BigInt) {
        if coef.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += coef;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: Monomial) -> BigInt {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Terms in lexicographic `(v, e, c)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn derivative_x(&self) -> TriPoly {
        let mut out = TriPoly::zero();
        for (m, coef) in &self.terms {
            if m.v > 0 {
                out.add_term(Monomial::new(m.v - 1, m.e, m.c), coef * BigInt::from(m.v));
            }
        }
        out
    }

    /// Double-precision evaluation, summing monomials in lexicographic order.
    pub fn eval(&self, x: Complex64, y: Complex64, z: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::zero(), |acc, (m, coef)| {
            acc + m.eval(x, y, z) * coef.to_f64().unwrap_or(f64::NAN)
        })
    }

    /// Sum of `|coef| |x|^v |y|^e |z|^c`; the natural scale for rounding
    /// error in [`TriPoly::eval`].
    pub fn abs_mass(&self, x: Complex64, y: Complex64, z: Complex64) -> f64 {
        let (ax, ay, az) = (x.norm(), y.norm(), z.norm());
        self.terms
            .iter()
            .map(|(m, coef)| {
                coef.abs().to_f64().unwrap_or(f64::INFINITY)
                    * ax.powi(m.v as i32)
                    * ay.powi(m.e as i32)
                    * az.powi(m.c as i32)
            })
            .sum()
    }

    /// Substitutes integers for `y` and `z`, leaving a polynomial in `x`.
    pub fn specialize_yz(&self, y: i64, z: i64) -> UniPoly {
        let (y, z) = (BigInt::from(y), BigInt::from(z));
        let mut coeffs: Vec<BigInt> = Vec::new();
        for (m, coef) in &self.terms {
            let v = m.v as usize;
            if coeffs.len() <= v {
                coeffs.resize(v + 1, BigInt::zero());
            }
            coeffs[v] += coef * num_traits::pow(y.clone(), m.e as usize) * num_traits::pow(z.clone(), m.c as usize);
        }
        UniPoly::new(coeffs)
    }
}

impl Add for &TriPoly {
    type Output = TriPoly;
    fn add(self, rhs: &TriPoly) -> TriPoly {
        let mut out = self.clone();
        for (m, coef) in &rhs.terms {
            out.add_term(*m, coef.clone());
        }
        out
    }
}

impl Neg for &TriPoly {
    type Output = TriPoly;
    fn neg(self) -> TriPoly {
        TriPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Sub for &TriPoly {
    type Output = TriPoly;
    fn sub(self, rhs: &TriPoly) -> TriPoly {
        self + &(-rhs)
    }
}

impl Mul for &TriPoly {
    type Output = TriPoly;
    fn mul(self, rhs: &TriPoly) -> TriPoly {
        let mut out = TriPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(Monomial::new(ma.v + mb.v, ma.e + mb.e, ma.c + mb.c), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for TriPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest x-power first reads naturally: x^3 + 3xy + z
        for (i, (m, coef)) in self.terms.iter().rev().enumerate() {
            let neg = coef.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = coef.abs();
            let bare = m.v == 0 && m.e == 0 && m.c == 0;
            if !mag.is_one() || bare {
                write!(f, "{mag}")?;
            }
            for (sym, pow) in [("x", m.v), ("y", m.e), ("z", m.c)] {
                match pow {
                    0 => {}
                    1 => write!(f, "{sym}")?,
                    p => write!(f, "{sym}^{p}")?,
                }
            }
        }
        Ok(())
    }
}

/// The generating polynomial of sesquivalent subgraphs of a host graph on
/// `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SesquivalentPolynomial {
    n: usize,
    poly: TriPoly,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    v: u32,
    e: u32,
    c: u32,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    n: usize,
    terms: Vec<TermJson>,
}

impl SesquivalentPolynomial {
    pub(crate) fn from_parts(n: usize, poly: TriPoly) -> SesquivalentPolynomial {
        SesquivalentPolynomial { n, poly }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn poly(&self) -> &TriPoly {
        &self.poly
    }

    pub fn into_poly(self) -> TriPoly {
        self.poly
    }

    pub fn coefficient(&self, v: u32, e: u32, c: u32) -> BigInt {
        self.poly.coefficient(Monomial::new(v, e, c))
    }

    pub fn eval(&self, x: Complex64, y: Complex64, z: Complex64) -> Complex64 {
        self.poly.eval(x, y, z)
    }

    /// `Φ(1, 1, 1)`: the number of sesquivalent subgraphs.
    pub fn subgraph_count(&self) -> BigInt {
        self.poly.terms().map(|(_, c)| c.clone()).sum()
    }

    /// Polynomial of the disjoint union of the two host graphs.
    pub fn disjoint_product(&self, other: &SesquivalentPolynomial) -> SesquivalentPolynomial {
        SesquivalentPolynomial {
            n: self.n + other.n,
            poly: &self.poly * &other.poly,
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let doc = PolynomialJson {
            n: self.n,
            terms: self
                .poly
                .terms()
                .map(|(m, coef)| TermJson {
                    v: m.v,
                    e: m.e,
                    c: m.c,
                    coef: coef.to_string(),
                })
                .collect(),
        };
        serde_json::to_value(doc).expect("polynomial serializes")
    }

    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(text: &str) -> Result<SesquivalentPolynomial> {
        let doc: PolynomialJson = serde_json::from_str(text)?;
        let mut poly = TriPoly::zero();
        for t in doc.terms {
            let coef: BigInt = t.coef.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("invalid coefficient `{}`", t.coef),
            })?;
            poly.add_term(Monomial::new(t.v, t.e, t.c), coef);
        }
        Ok(SesquivalentPolynomial { n: doc.n, poly })
    }
}

impl fmt::Display for SesquivalentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Univariate integer polynomial, coefficients stored lowest degree first.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> UniPoly {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> UniPoly {
        UniPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Coefficients of `t^0, t^1, ...`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients from the leading term down to the constant term.
    pub fn descending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        )
    }

    pub fn eval_complex(&self, t: Complex64) -> Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * t + c.to_f64().unwrap_or(f64::NAN))
    }

    /// `self / gcd(self, self')`, made primitive with positive leading
    /// coefficient. Its roots are the distinct roots of `self`.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) < 1 {
            return self.clone();
        }
        let p = to_rational(self);
        let g = rational_gcd(p.clone(), to_rational(&self.derivative()));
        let (q, _) = rational_divmod(&p, &g);
        primitive(&q)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || k == 0 {
                write!(f, "{mag}")?;
            }
            match k {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{k}")?,
            }
        }
        Ok(())
    }
}

fn to_rational(p: &UniPoly) -> Vec<BigRational> {
    p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect()
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn rational_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() > db && !rem.is_empty() {
        let shift = rem.len() - 1 - db;
        let factor = rem.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &factor * bc;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

fn rational_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = rational_divmod(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn primitive(p: &[BigRational]) -> UniPoly {
    use num_integer::Integer;
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().is_some_and(Signed::is_negative) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    if gcd.is_zero() {
        return UniPoly::new(Vec::new());
    }
    UniPoly::new(ints.into_iter().map(|c| c / &gcd * &sign).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_reads_highest_first() {
        let mut p = TriPoly::zero();
        p.add_term(Monomial::new(3, 0, 0), 1.into());
        p.add_term(Monomial::new(1, 1, 0), 3.into());
        p.add_term(Monomial::new(0, 0, 1), 1.into());
        assert_eq!(p.to_string(), "x^3 + 3xy + z");
        assert_eq!(UniPoly::from_i64(&[-2, -3, 0, 1]).to_string(), "λ^3 - 3λ - 2");
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = TriPoly::monomial(Monomial::new(1, 0, 0), 5);
        assert!((&p - &p).is_zero());
    }

    #[test]
    fn squarefree_part_strips_repeated_roots() {
        // x^4 (x^2 - 5)
        let p = UniPoly::from_i64(&[0, 0, 0, 0, -5, 0, 1]);
        assert_eq!(p.squarefree_part(), UniPoly::from_i64(&[0, -5, 0, 1]));
        // (x^2 - 1)^2
        let p = UniPoly::from_i64(&[1, 0, -2, 0, 1]);
        assert_eq!(p.squarefree_part(), UniPoly::from_i64(&[-1, 0, 1]));
    }

    #[test]
    fn json_terms_are_sorted() {
        let mut p = TriPoly::zero();
        p.add_term(Monomial::new(0, 0, 1), 3.into());
        p.add_term(Monomial::new(4, 0, 0), 1.into());
        let sp = SesquivalentPolynomial::from_parts(4, p);
        let json = sp.to_json();
        assert_eq!(
            json,
            r#"{"n":4,"terms":[{"v":0,"e":0,"c":1,"coef":"3"},{"v":4,"e":0,"c":0,"coef":"1"}]}"#
        );
        assert_eq!(SesquivalentPolynomial::from_json(&json).unwrap(), sp);
    }
}

//! Exact univariate integer polynomials and the coefficient-sequence
//! predicates used by the analysis checks.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::report::{CheckReport, Verdict};

/// Integer polynomial with ascending coefficients (index = degree). The
/// highest stored coefficient is always nonzero; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// `c * t^deg`
    pub fn monomial(deg: usize, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); deg + 1];
        coeffs[deg] = c;
        IntPolynomial { coeffs }
    }

    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `t^k - 1`
    pub fn x_pow_minus_one(k: usize) -> Self {
        let mut p = Self::monomial(k, 1);
        p.coeffs[0] -= 1;
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Panics if the coefficient does not fit in an `i64`.
    pub fn coeff_i64(&self, i: usize) -> i64 {
        self.coeff(i).to_i64().expect("coefficient fits in i64")
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn evaluate(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }

    pub fn evaluate_i64(&self, at: i64) -> BigInt {
        self.evaluate(&BigInt::from(at))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Quotient and remainder; fails if some leading coefficient division is
    /// not exact over the integers.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor
            .leading()
            .ok_or_else(|| Error::Invalid("division by the zero polynomial".into()))?;
        let dd = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let (q, r) = rem[i].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(Self::new(rem).to_string()));
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] -= &q * c;
            }
            quot[i - dd] = q;
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; a nonzero remainder is reported as an error.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision(r.to_string()))
        }
    }

    /// `t^n * p(1/t)`.
    pub fn reciprocal(&self, n: usize) -> Result<Self> {
        match self.degree() {
            None => Ok(Self::zero()),
            Some(d) if d > n => Err(Error::Invalid(format!(
                "reciprocal exponent {n} is below the degree {d}"
            ))),
            Some(_) => {
                let mut coeffs = vec![BigInt::zero(); n + 1];
                for (i, c) in self.coeffs.iter().enumerate() {
                    coeffs[n - i] = c.clone();
                }
                Ok(Self::new(coeffs))
            }
        }
    }

    /// `p(t + delta)` by Horner's rule.
    pub fn translate(&self, delta: i64) -> Self {
        let lin = Self::from_i64s(&[delta, 1]);
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| {
            &(&acc * &lin) + &Self::monomial(0, c.clone())
        })
    }

    /// `p(t - 1)`.
    pub fn substitute_shift(&self) -> Self {
        self.translate(-1)
    }

    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let unit = mag.is_one();
            match deg {
                0 => out.push_str(&mag.to_string()),
                _ => {
                    if !unit {
                        out.push_str(&format!("{mag}*"));
                    }
                    out.push_str(var);
                    if deg > 1 {
                        out.push_str(&format!("^{deg}"));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum WireCoeff {
    Small(i64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct WirePoly {
    coeffs: Vec<WireCoeff>,
}

/// Serialized as `{"coeffs": [...]}`; coefficients outside the `i64` range
/// are written as decimal strings.
impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WirePoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| match c.to_i64() {
                    Some(v) => WireCoeff::Small(v),
                    None => WireCoeff::Big(c.to_string()),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WirePoly::deserialize(d)?;
        let coeffs = wire
            .coeffs
            .into_iter()
            .map(|c| match c {
                WireCoeff::Small(v) => Ok(BigInt::from(v)),
                WireCoeff::Big(s) => s.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

/// How signed sequences are fed to the log-concavity test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LogConcavityMode {
    #[default]
    Literal,
    Absolute,
}

impl LogConcavityMode {
    pub fn name(self) -> &'static str {
        match self {
            LogConcavityMode::Literal => "literal",
            LogConcavityMode::Absolute => "absolute",
        }
    }
}

fn lc_holds(seq: &[BigInt], i: usize, mode: LogConcavityMode) -> bool {
    let (a, b, c) = (&seq[i - 1], &seq[i], &seq[i + 1]);
    match mode {
        LogConcavityMode::Literal => a * c <= b * b,
        LogConcavityMode::Absolute => a.abs() * c.abs() <= b * b,
    }
}

/// Checks `e[i-1] * e[i+1] <= e[i]^2` for every interior index of the
/// half-open `window`.
pub fn is_log_concave(
    seq: &[BigInt],
    window: std::ops::Range<usize>,
    mode: LogConcavityMode,
) -> Result<CheckReport> {
    if window.start > window.end || window.end > seq.len() {
        return Err(Error::Invalid(format!(
            "window {window:?} outside sequence of length {}",
            seq.len()
        )));
    }
    let w = &seq[window.clone()];
    let mut report = CheckReport::pass("log_concave");
    for i in 1..w.len().saturating_sub(1) {
        if !lc_holds(w, i, mode) {
            report = CheckReport::fail(
                "log_concave",
                format!(
                    "i={}: {}*{} > {}^2",
                    window.start + i,
                    w[i - 1],
                    w[i + 1],
                    w[i]
                ),
            )
            .with_detail("first_violation", (window.start + i) as u64);
            break;
        }
    }
    report.set_detail("mode", mode.name());
    report.set_detail(
        "sequence",
        serde_json::Value::Array(w.iter().map(big_to_json).collect()),
    );
    Ok(report)
}

pub fn is_log_concave_i64(seq: &[i64], mode: LogConcavityMode) -> CheckReport {
    let big: Vec<BigInt> = seq.iter().map(|&x| BigInt::from(x)).collect();
    is_log_concave(&big, 0..big.len(), mode).expect("full window is valid")
}

/// Largest half-open window `[lo, hi)` on which the sequence is log concave.
pub fn largest_log_concave_window(seq: &[BigInt], mode: LogConcavityMode) -> (usize, usize) {
    if seq.len() <= 2 {
        return (0, seq.len());
    }
    let mut best = (0, 2);
    let mut run_start: Option<usize> = None;
    for i in 1..seq.len() - 1 {
        if lc_holds(seq, i, mode) {
            let start = *run_start.get_or_insert(i);
            let cand = (start - 1, i + 2);
            if cand.1 - cand.0 > best.1 - best.0 {
                best = cand;
            }
        } else {
            run_start = None;
        }
    }
    best
}

/// Checks `b[lo+i] = sign * b[hi-i]` over the window between the lowest and
/// highest nonzero coefficients.
pub fn is_signed_palindrome(p: &IntPolynomial, sign: i32) -> CheckReport {
    let (Some(lo), Some(hi)) = (p.low_degree(), p.degree()) else {
        return CheckReport::new("signed_palindrome", Verdict::NotApplicable)
            .with_detail("reason", "zero polynomial");
    };
    let s = BigInt::from(sign);
    let mut pairs = Vec::new();
    let mut witness = None;
    for i in 0..=(hi - lo) / 2 {
        let (a, b) = (p.coeff(lo + i), p.coeff(hi - i));
        pairs.push(serde_json::json!([
            lo + i,
            big_to_json(&a),
            hi - i,
            big_to_json(&b)
        ]));
        if witness.is_none() && a != &s * &b {
            witness = Some(format!("t^{} has {a}, t^{} has {b}", lo + i, hi - i));
        }
    }
    let mut report = match witness {
        None => CheckReport::pass("signed_palindrome"),
        Some(w) => CheckReport::fail("signed_palindrome", w),
    };
    report.set_detail("sign", sign);
    report.set_detail("window", serde_json::json!([lo, hi]));
    report.set_detail("pairs", serde_json::Value::Array(pairs));
    report
}

/// Nonnegative coefficients with degree-1 and degree-2 coefficients both at
/// least 3.
pub fn brenti_criterion(p: &IntPolynomial) -> CheckReport {
    let three = BigInt::from(3);
    let name = "brenti_criterion";
    let report = if let Some((i, c)) = p.coeffs().iter().enumerate().find(|(_, c)| c.is_negative())
    {
        CheckReport::fail(name, format!("coefficient of degree {i} is negative ({c})"))
    } else if p.coeff(1) < three {
        CheckReport::fail(name, format!("a_1 = {} < 3", p.coeff(1)))
    } else if p.coeff(2) < three {
        CheckReport::fail(name, format!("a_2 = {} < 3", p.coeff(2)))
    } else {
        CheckReport::pass(name)
    };
    report.with_detail("polynomial", p.to_string())
}

pub(crate) fn big_to_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => v.into(),
        None => c.to_string().into(),
    }
}

pub(crate) fn bigs_to_json(cs: &[BigInt]) -> serde_json::Value {
    serde_json::Value::Array(cs.iter().map(big_to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p(&[1, -1]) * &p(&[1, 1]), p(&[1, 0, -1]));
        assert_eq!(p(&[1, 0, -1]).exact_div(&p(&[1, -1])).unwrap(), p(&[1, 1]));
        assert_eq!(p(&[0, -1, 0, 1]).evaluate_i64(3), BigInt::from(24));
    }

    #[test]
    fn inexact_division_reports_remainder() {
        let err = p(&[1, 0, 1]).exact_div(&p(&[-1, 1])).unwrap_err();
        assert_eq!(err, Error::InexactDivision("2".into()));
        assert!(matches!(
            p(&[1, 1]).exact_div(&p(&[0, 2])),
            Err(Error::InexactDivision(_))
        ));
    }

    #[test]
    fn normalization_drops_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0, 0]).degree(), None);
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(p(&[1, 0, -1]).reciprocal(3).unwrap(), p(&[0, -1, 0, 1]));
        assert_eq!(p(&[1]).reciprocal(0).unwrap(), p(&[1]));
        assert_eq!(p(&[1, 1]).reciprocal(1).unwrap(), p(&[1, 1]));
        assert!(p(&[1, 0, 1]).reciprocal(1).is_err());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p(&[0, 0, 1]).substitute_shift(), p(&[1, -2, 1]));
        assert_eq!(p(&[1]).substitute_shift(), p(&[1]));
        // f = (1, 2), d = 1: (t - 1) + 2 equals the h-side t + 1.
        let f_side = &p(&[-1, 1]) + &p(&[2]);
        assert_eq!(f_side, p(&[1, 1]));
    }

    #[test]
    fn pretty_printing() {
        assert_eq!(
            p(&[0, -6, 11, -6, 1]).to_string(),
            "t^4 - 6*t^3 + 11*t^2 - 6*t"
        );
        assert_eq!(p(&[1, -1, 1]).display_in("x"), "x^2 - x + 1");
        assert_eq!(p(&[-1]).to_string(), "-1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, -1]).to_string(), "-t");
    }

    #[test]
    fn log_concavity_examples() {
        assert!(is_log_concave_i64(&[1, 3, 3, 1], LogConcavityMode::Literal).passed());
        let r = is_log_concave_i64(&[1, 1, 2], LogConcavityMode::Literal);
        assert!(!r.passed());
        assert_eq!(r.details["first_violation"], 1);
        // alternating signs are fine literally, and in absolute mode
        assert!(is_log_concave_i64(&[1, -3, 3, -1], LogConcavityMode::Absolute).passed());
    }

    #[test]
    fn largest_window() {
        let seq: Vec<BigInt> = [1, 1, 2, 2, 2, 9]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        // i=1 fails, i=2..3 hold, i=4 fails
        assert_eq!(
            largest_log_concave_window(&seq, LogConcavityMode::Literal),
            (1, 5)
        );
    }

    #[test]
    fn signed_palindrome_examples() {
        assert!(is_signed_palindrome(&p(&[1, 3, 3, 1]), 1).passed());
        assert!(is_signed_palindrome(&p(&[0, -1, 0, 3, 0, -3, 0, 1]), -1).passed());
        assert!(!is_signed_palindrome(&p(&[1, 2]), 1).passed());
        assert_eq!(
            is_signed_palindrome(&p(&[]), 1).verdict,
            Verdict::NotApplicable
        );
    }

    #[test]
    fn brenti_examples() {
        assert!(brenti_criterion(&p(&[1, 3, 3])).passed());
        let r = brenti_criterion(&p(&[1, 2, 5]));
        assert!(!r.passed());
        assert!(r.witness.unwrap().contains("a_1"));
        assert!(brenti_criterion(&p(&[0, 3, 3, 1])).passed());
    }

    #[test]
    fn serde_shape() {
        let poly = p(&[0, -1, 1]);
        let json = serde_json::to_string(&poly).unwrap();
        assert_eq!(json, r#"{"coeffs":[0,-1,1]}"#);
        let big = IntPolynomial::monomial(1, BigInt::from(i64::MAX) * 4);
        let back: IntPolynomial =
            serde_json::from_str(&serde_json::to_string(&big).unwrap()).unwrap();
        assert_eq!(back, big);
    }
}

//! Cyclotomic polynomials, the complexes `K_A` inside the join of discrete
//! vertex groups of prime sizes, and the homology / top-h experiments on
//! them.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::auxiliary::{chromatic_via_auxiliary, lift_with_apex};
use crate::chromatic::chromatic_polynomial;
use crate::complex::SimplicialComplex;
use crate::error::{check_guard, Error, Result};
use crate::hilbert::{h_vector, top_h_identity};
use crate::homology::reduced_homology;
use crate::poly::{big_to_json, IntPolynomial};
use crate::report::{CheckReport, Verdict};

pub const ORDER_LIMIT: u64 = 1_000_000;
/// Generator-count bound under which cyclcheck also runs the direct
/// chromatic enumeration as a spot check.
pub const DIRECT_CHECK_GENERATORS: usize = 20;

fn factor(mut n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            primes.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        primes.push(n);
    }
    primes
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n) == [n]
}

pub fn euler_phi(n: u64) -> u64 {
    factor(n).iter().fold(n, |acc, p| acc / p * (p - 1))
}

/// In place: `a ← a · (x^d - 1)`; `a` must have room at the top.
fn mul_binomial(a: &mut [BigInt], deg: usize, d: usize) {
    for i in (0..=deg + d).rev() {
        let shifted = if i >= d {
            a[i - d].clone()
        } else {
            BigInt::zero()
        };
        a[i] = shifted - &a[i];
    }
}

/// `a / (x^d - 1)` for a polynomial of degree `deg`, checking the remainder.
fn div_binomial(a: &mut [BigInt], deg: usize, d: usize) -> Result<()> {
    if deg < d {
        return Err(Error::InexactDivision(format!(
            "degree {deg} below divisor degree {d}"
        )));
    }
    // a[i] = q[i-d] - q[i]
    let mut q = vec![BigInt::zero(); deg - d + 1];
    for i in (d..=deg).rev() {
        let above = if i <= deg - d {
            q[i].clone()
        } else {
            BigInt::zero()
        };
        q[i - d] = &a[i] + above;
    }
    for i in 0..d {
        let qi = if i <= deg - d { &q[i] } else { &BigInt::zero() };
        if !(&a[i] + qi).is_zero() {
            return Err(Error::InexactDivision(format!(
                "nonzero remainder dividing by x^{d} - 1"
            )));
        }
    }
    for (i, slot) in a.iter_mut().enumerate().take(deg + 1) {
        *slot = if i <= deg - d {
            std::mem::take(&mut q[i])
        } else {
            BigInt::zero()
        };
    }
    Ok(())
}

/// `Φ_n` via `Π_{d | n} (x^d - 1)^{μ(n/d)}`, reducing first to the
/// squarefree kernel `s` with `Φ_n(x) = Φ_s(x^{n/s})`.
pub fn cyclotomic_polynomial(n: u64) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::Invalid("cyclotomic order must be positive".into()));
    }
    check_guard("cyclotomic order", ORDER_LIMIT as u128, n as u128)?;
    let primes = factor(n);
    let s: u64 = primes.iter().product();
    let mut num = Vec::new();
    let mut den = Vec::new();
    for mask in 0u32..1 << primes.len() {
        // divisor d = s / Π(chosen primes), μ(s/d) = (-1)^|chosen|
        let removed: u64 = (0..primes.len())
            .filter(|&i| mask & 1 << i != 0)
            .map(|i| primes[i])
            .product();
        let d = (s / removed) as usize;
        if mask.count_ones() % 2 == 0 {
            num.push(d);
        } else {
            den.push(d);
        }
    }
    let top: usize = num.iter().sum();
    let mut a = vec![BigInt::zero(); top + 1];
    a[0] = BigInt::one();
    let mut deg = 0;
    for &d in &num {
        mul_binomial(&mut a, deg, d);
        deg += d;
    }
    for &d in &den {
        div_binomial(&mut a, deg, d)?;
        deg -= d;
    }
    a.truncate(deg + 1);
    let stretch = (n / s) as usize;
    let mut coeffs = vec![BigInt::zero(); deg * stretch + 1];
    for (i, c) in a.into_iter().enumerate() {
        coeffs[i * stretch] = c;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// How the facet indices `A ∪ {φ(n)+1, ..., n}` are turned into residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Labeling {
    /// Index `k` is residue `k mod n` (so `n` becomes 0).
    Zero,
    /// Index `k` is residue `(k - 1) mod n`.
    One,
    /// Index `k` is residue `k`, and the tail stops at `n - 1`.
    Truncated,
}

impl Labeling {
    pub const ALL: [Labeling; 3] = [Labeling::Zero, Labeling::One, Labeling::Truncated];

    pub fn name(self) -> &'static str {
        match self {
            Labeling::Zero => "zero",
            Labeling::One => "one",
            Labeling::Truncated => "truncated",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicSpec {
    primes: Vec<u64>,
    n: u64,
    phi: u64,
}

impl CyclotomicSpec {
    pub fn new(mut primes: Vec<u64>) -> Result<Self> {
        if primes.is_empty() {
            return Err(Error::Invalid("at least one prime is required".into()));
        }
        if let Some(p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        primes.sort_unstable();
        if primes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("primes must be distinct".into()));
        }
        let n = primes
            .iter()
            .try_fold(1u64, |acc, &p| acc.checked_mul(p))
            .unwrap_or(u64::MAX);
        check_guard("cyclotomic order", ORDER_LIMIT as u128, n as u128)?;
        Ok(CyclotomicSpec {
            phi: euler_phi(n),
            primes,
            n,
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> u64 {
        self.phi
    }

    pub fn d(&self) -> usize {
        self.primes.len()
    }

    /// Vertex labels, grouped by prime: `a, b, ...` when they fit in the
    /// alphabet, otherwise `g{i}r{k}`.
    pub fn vertex_labels(&self) -> Vec<Vec<String>> {
        let total: u64 = self.primes.iter().sum();
        let mut next = 0u8;
        self.primes
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                (0..p)
                    .map(|k| {
                        if total <= 26 {
                            next += 1;
                            ((b'a' + next - 1) as char).to_string()
                        } else {
                            format!("g{}r{:02}", i + 1, k)
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// The facet of residue `j`: vertex `j mod p_i` from group `i`.
    pub fn facet_of_residue(&self, j: u64) -> Result<Vec<String>> {
        if j >= self.n {
            return Err(Error::Invalid(format!(
                "residue {j} out of range 0..{}",
                self.n
            )));
        }
        let groups = self.vertex_labels();
        Ok(self
            .primes
            .iter()
            .zip(&groups)
            .map(|(&p, g)| g[(j % p) as usize].clone())
            .collect())
    }

    /// Residues of the facets indexed by `A ∪ tail` under `labeling`.
    pub fn facet_residues(&self, a: &BTreeSet<u64>, labeling: Labeling) -> BTreeSet<u64> {
        let n = self.n;
        let tail_end = if labeling == Labeling::Truncated {
            n - 1
        } else {
            n
        };
        a.iter()
            .copied()
            .chain(self.phi + 1..=tail_end)
            .map(|k| match labeling {
                Labeling::Zero | Labeling::Truncated => k % n,
                Labeling::One => (k + n - 1) % n,
            })
            .collect()
    }

    /// `K_A`: the `(d-2)`-skeleton of the join together with the facets of
    /// the residues from [`facet_residues`](Self::facet_residues).
    pub fn build_k_a(&self, a: &BTreeSet<u64>, labeling: Labeling) -> Result<SimplicialComplex> {
        if self.d() < 2 {
            return Err(Error::Invalid("K_A needs at least two primes".into()));
        }
        if let Some(j) = a.iter().find(|&&j| j > self.phi) {
            return Err(Error::Invalid(format!(
                "index {j} exceeds phi(n) = {}",
                self.phi
            )));
        }
        let groups = self.vertex_labels();
        let labels: Vec<String> = groups.iter().flatten().cloned().collect();
        check_guard("vertex count", 25, labels.len() as u128)?;
        let mut faces: Vec<Vec<String>> = Vec::new();
        // (d-2)-skeleton: one vertex from each of d-1 groups
        for skip in 0..groups.len() {
            let chosen: Vec<&Vec<String>> = groups
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, g)| g)
                .collect();
            let mut acc: Vec<Vec<String>> = vec![Vec::new()];
            for g in chosen {
                acc = acc
                    .into_iter()
                    .flat_map(|f| {
                        g.iter().map(move |v| {
                            let mut f = f.clone();
                            f.push(v.clone());
                            f
                        })
                    })
                    .collect();
            }
            faces.extend(acc);
        }
        for j in self.facet_residues(a, labeling) {
            faces.push(self.facet_of_residue(j)?);
        }
        SimplicialComplex::from_facets(&labels, &faces)
    }
}

fn conventions_detail(labelings: &[Labeling]) -> serde_json::Value {
    labelings
        .iter()
        .map(|l| l.name())
        .collect::<Vec<_>>()
        .into()
}

/// Expected `(rank, torsion)` in degrees `d-2` and `d-1`, everything else
/// trivial.
fn cycltop_expectation(c: &BigInt) -> [(usize, Vec<BigInt>); 2] {
    if c.is_zero() {
        [(1, vec![]), (1, vec![])]
    } else if c.abs() > BigInt::one() {
        [(0, vec![c.abs()]), (0, vec![])]
    } else {
        [(0, vec![]), (0, vec![])]
    }
}

/// Reduced homology of `K_{{j}}` against the expectation from `c_j` of
/// `Φ_n`, once per labeling. Passes if any labeling matches.
pub fn check_cycltop(spec: &CyclotomicSpec, j: u64, labelings: &[Labeling]) -> Result<CheckReport> {
    let phi_n = cyclotomic_polynomial(spec.n())?;
    let c = phi_n.coeff(j as usize);
    let d = spec.d() as isize;
    let expect = cycltop_expectation(&c);
    let mut subs = Vec::new();
    for &lab in labelings {
        let k = spec.build_k_a(&BTreeSet::from([j]), lab)?;
        let h = reduced_homology(&k)?;
        let mut mismatch = None;
        for g in &h {
            let want = match g.degree - (d - 2) {
                0 => expect[0].clone(),
                1 => expect[1].clone(),
                _ => (0, vec![]),
            };
            if (g.rank, g.torsion.clone()) != want {
                mismatch.get_or_insert(format!(
                    "degree {}: got {g}, expected rank {} torsion {:?}",
                    g.degree,
                    want.0,
                    want.1.iter().map(ToString::to_string).collect::<Vec<_>>()
                ));
            }
        }
        let torsion_d2 = h
            .iter()
            .find(|g| g.degree == d - 2)
            .map(|g| g.torsion.clone())
            .unwrap_or_default();
        let order: BigInt = torsion_d2.iter().product();
        let mut sub = match mismatch {
            None => CheckReport::pass(lab.name()),
            Some(w) => CheckReport::fail(lab.name(), w),
        };
        let f = k.f_vector();
        sub.set_detail("f_vector", f);
        sub.set_detail("homology", serde_json::to_value(&h).expect("serializable"));
        sub.set_detail(
            "homology_text",
            h.iter()
                .map(|g| format!("H~{} = {g}", g.degree))
                .collect::<Vec<_>>(),
        );
        sub.set_detail("torsion_order_degree_d_minus_2", big_to_json(&order));
        sub.set_detail("h_top_identity", top_h_identity(&k).passed());
        subs.push(sub);
    }
    let verdict = Verdict::from_bool(subs.iter().any(CheckReport::passed));
    let mut report = CheckReport::new("cycltop", verdict)
        .with_detail("primes", spec.primes().to_vec())
        .with_detail("n", spec.n())
        .with_detail("phi_n", spec.phi())
        .with_detail("j", j)
        .with_detail("c_j", big_to_json(&c))
        .with_detail("labelings", conventions_detail(labelings));
    report.sub_reports = subs;
    Ok(report)
}

/// Apex lift `S_j` of `K_{{j}}`; compares `(-1)^d + h_d(K_{{j}})` with the
/// dichotomy `1 + (-1)^d` (when `c_j = 0`) or `(-1)^d`. The literal
/// constant term of `χ_c(S_j)` is recorded alongside.
pub fn check_cyclcheck(
    spec: &CyclotomicSpec,
    j: u64,
    labelings: &[Labeling],
) -> Result<CheckReport> {
    let phi_n = cyclotomic_polynomial(spec.n())?;
    let c = phi_n.coeff(j as usize);
    let d = spec.d();
    let sign = if d.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let expected = if c.is_zero() { &sign + 1 } else { sign.clone() };
    let mut subs = Vec::new();
    for &lab in labelings {
        let t = spec.build_k_a(&BTreeSet::from([j]), lab)?;
        let (s, _) = lift_with_apex(&t)?;
        let chi_c = chromatic_via_auxiliary(&t, s.vertex_count())?;
        let h = h_vector(&t);
        let h_d = h.top().clone();
        let value = &sign + &h_d;
        let identity = top_h_identity(&t);
        let mut sub = if value == expected {
            CheckReport::pass(lab.name())
        } else {
            CheckReport::fail(
                lab.name(),
                format!("(-1)^d + h_d = {value}, expected {expected}"),
            )
        };
        sub.set_detail("h_d", big_to_json(&h_d));
        sub.set_detail("value", big_to_json(&value));
        sub.set_detail("literal_constant_term", big_to_json(&chi_c.coeff(0)));
        sub.set_detail("chi_c", chi_c.to_string());
        sub.set_detail("generators", s.minimal_nonfaces().len() as u64);
        if s.minimal_nonfaces().len() <= DIRECT_CHECK_GENERATORS {
            sub.set_detail(
                "direct_enumeration_agrees",
                chromatic_polynomial(&s)? == chi_c,
            );
        }
        sub.sub_reports.push(identity);
        subs.push(sub);
    }
    let verdict = Verdict::from_bool(subs.iter().any(CheckReport::passed));
    let mut report = CheckReport::new("cyclcheck", verdict)
        .with_detail("primes", spec.primes().to_vec())
        .with_detail("n", spec.n())
        .with_detail("d", d as u64)
        .with_detail("j", j)
        .with_detail("c_j", big_to_json(&c))
        .with_detail("expected", big_to_json(&expected))
        .with_detail("labelings", conventions_detail(labelings));
    report.sub_reports = subs;
    Ok(report)
}

/// Runs `check` for every `j` in `0..=φ(n)`. Passes when a single
/// labeling passes for every `j`.
pub fn scan<F>(spec: &CyclotomicSpec, mode: &str, check: F) -> Result<CheckReport>
where
    F: Fn(u64) -> Result<CheckReport>,
{
    let subs = (0..=spec.phi()).map(check).collect::<Result<Vec<_>>>()?;
    let labelings: Vec<String> = subs
        .first()
        .map(|r| r.sub_reports.iter().map(|s| s.check.clone()).collect())
        .unwrap_or_default();
    let mut failing = serde_json::Map::new();
    for lab in &labelings {
        let js: Vec<u64> = subs
            .iter()
            .filter(|r| !r.sub(lab).is_some_and(CheckReport::passed))
            .map(|r| r.details["j"].as_u64().expect("j recorded"))
            .collect();
        failing.insert(lab.clone(), js.into());
    }
    let uniform: Vec<&String> = labelings
        .iter()
        .filter(|l| failing[l.as_str()].as_array().is_some_and(Vec::is_empty))
        .collect();
    let name = format!("{mode}_scan");
    let mut report = if uniform.is_empty() {
        CheckReport::fail(name, "no labeling passes for every j")
    } else {
        CheckReport::pass(name)
    };
    report.set_detail("primes", spec.primes().to_vec());
    report.set_detail("failing_j_by_labeling", serde_json::Value::Object(failing));
    report.set_detail(
        "labelings_passing_all_j",
        uniform.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
    );
    report.sub_reports = subs;
    Ok(report)
}

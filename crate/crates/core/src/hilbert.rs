//! Coarsely graded Hilbert series of Stanley–Reisner rings: the numerator
//! `K(t)` over `(1-t)^n`, f/h-vector conversions and their cross-checks.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::complex::{card, NonfaceFamily, SimplicialComplex};
use crate::enumerate::accumulate_terms;
use crate::error::{check_guard, Error, Result};
use crate::poly::{bigs_to_json, IntPolynomial};
use crate::report::CheckReport;

/// Degree limit for [`standard_monomial_count`].
pub const MONOMIAL_DEGREE_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum KSource {
    InclusionExclusion,
    FromH,
}

/// Hilbert-series numerator, tagged with the route that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KPolynomial {
    pub poly: IntPolynomial,
    pub source: KSource,
}

/// `h_0..h_d` with `d = dim + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HVector {
    pub entries: Vec<BigInt>,
}

impl HVector {
    pub fn d(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn as_polynomial(&self) -> IntPolynomial {
        IntPolynomial::new(self.entries.clone())
    }

    pub fn top(&self) -> &BigInt {
        self.entries.last().expect("h-vector has h_0")
    }

    pub fn to_i64s(&self) -> Vec<i64> {
        use num_traits::ToPrimitive;
        self.entries
            .iter()
            .map(|h| h.to_i64().expect("h entry fits in i64"))
            .collect()
    }
}

fn binom(n: usize, k: usize) -> BigInt {
    if k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn sign(k: usize) -> BigInt {
    if k.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// `Σ_{I ⊆ [r]} (-1)^{|I|} t^{|σ_I|}` with `σ_I` the union of the generators
/// in `I` (the degree of the lcm of squarefree monomials).
pub fn numerator_by_inclusion_exclusion(gens: &NonfaceFamily) -> Result<KPolynomial> {
    let mut counts = accumulate_terms(gens.generators(), false, 65, |node| {
        (card(node.union), node.sign())
    })?;
    counts[0] += 1;
    Ok(KPolynomial {
        poly: IntPolynomial::new(counts.into_iter().map(BigInt::from).collect()),
        source: KSource::InclusionExclusion,
    })
}

/// `h_j = Σ_{i≤j} (-1)^{j-i} C(d-i, j-i) f_{i-1}`
pub fn h_from_f(f: &[BigInt], d: usize) -> Result<HVector> {
    if f.len() != d + 1 {
        return Err(Error::Invalid(format!(
            "f-vector of length {} for d = {d}",
            f.len()
        )));
    }
    if !f[0].is_one() {
        return Err(Error::Invalid(format!("f_-1 must be 1, got {}", f[0])));
    }
    let entries = (0..=d)
        .map(|j| {
            (0..=j)
                .map(|i| sign(j - i) * binom(d - i, j - i) * &f[i])
                .sum()
        })
        .collect();
    Ok(HVector { entries })
}

/// `f_{j-1} = Σ_{i≤j} C(d-i, j-i) h_i`
pub fn f_from_h(h: &HVector, d: usize) -> Result<Vec<BigInt>> {
    if h.entries.len() != d + 1 {
        return Err(Error::Invalid(format!(
            "h-vector of length {} for d = {d}",
            h.entries.len()
        )));
    }
    Ok((0..=d)
        .map(|j| (0..=j).map(|i| binom(d - i, j - i) * &h.entries[i]).sum())
        .collect())
}

pub fn f_vector_big(s: &SimplicialComplex) -> Vec<BigInt> {
    s.f_vector().into_iter().map(BigInt::from).collect()
}

pub fn h_vector(s: &SimplicialComplex) -> HVector {
    let f = f_vector_big(s);
    let d = f.len() - 1;
    h_from_f(&f, d).expect("f-vector of a complex is consistent")
}

/// `h_S(t) (1-t)^{n-d}`
pub fn numerator_from_h(s: &SimplicialComplex) -> KPolynomial {
    let h = h_vector(s);
    let gap = (s.vertex_count() - h.d()) as u32;
    KPolynomial {
        poly: &h.as_polynomial() * &IntPolynomial::from_i64s(&[1, -1]).pow(gap),
        source: KSource::FromH,
    }
}

/// Dimension of the degree-`m` piece of the face ring: each face `F`
/// contributes the `C(m-1, |F|-1)` monomials of degree `m` with support `F`.
pub fn standard_monomial_count(s: &SimplicialComplex, m: usize) -> Result<BigInt> {
    check_guard("monomial degree", MONOMIAL_DEGREE_LIMIT as u128, m as u128)?;
    if m == 0 {
        return Ok(BigInt::one());
    }
    Ok(s.f_vector()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(size, &count)| binom(m - 1, size - 1) * count)
        .sum())
}

/// Coefficients `0..=m_max` of the power series `K(t) / (1-t)^n`.
pub fn series_coefficients(k: &IntPolynomial, n: usize, m_max: usize) -> Vec<BigInt> {
    // 1/(1-t)^n = Σ_j C(n-1+j, j) t^j, which is just 1 when n = 0
    let inv = |j: usize| -> BigInt {
        if n == 0 {
            if j == 0 {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        } else {
            binom(n - 1 + j, j)
        }
    };
    (0..=m_max)
        .map(|m| (0..=m).map(|j| k.coeff(j) * inv(m - j)).sum())
        .collect()
}

/// `h_d = (-1)^{d-1} (χ - 1)`, checked exactly.
pub fn top_h_identity(s: &SimplicialComplex) -> CheckReport {
    let h = h_vector(s);
    let (chi, _) = s.euler_characteristics();
    let d = h.d();
    let expected = if d % 2 == 1 { chi - 1 } else { 1 - chi };
    let ok = *h.top() == BigInt::from(expected);
    let report = if ok {
        CheckReport::pass("top_h_entry")
    } else {
        CheckReport::fail(
            "top_h_entry",
            format!("h_d = {} but (-1)^(d-1)(chi-1) = {expected}", h.top()),
        )
    };
    report
        .with_detail("h_d", crate::poly::big_to_json(h.top()))
        .with_detail("chi", chi)
        .with_detail("d", d as u64)
}

/// Both numerator routes and the series-vs-monomial-count comparison up to
/// degree `m_max`.
pub fn cross_check(s: &SimplicialComplex, m_max: usize) -> Result<CheckReport> {
    let ie = numerator_by_inclusion_exclusion(s.minimal_nonfaces())?;
    let fh = numerator_from_h(s);
    let mut report = if ie.poly == fh.poly {
        CheckReport::pass("hilbert_cross_check")
    } else {
        CheckReport::fail(
            "hilbert_cross_check",
            format!("inclusion-exclusion {} vs from-h {}", ie.poly, fh.poly),
        )
    };
    let series = series_coefficients(&ie.poly, s.vertex_count(), m_max);
    let counts = (0..=m_max)
        .map(|m| standard_monomial_count(s, m))
        .collect::<Result<Vec<_>>>()?;
    if let Some(m) = (0..=m_max).find(|&m| series[m] != counts[m]) {
        report = CheckReport::fail(
            "hilbert_cross_check",
            format!(
                "degree {m}: series {} vs monomial count {}",
                series[m], counts[m]
            ),
        );
    }
    report.set_detail("k_inclusion_exclusion", ie.poly.to_string());
    report.set_detail("k_from_h", fh.poly.to_string());
    report.set_detail("series", bigs_to_json(&series));
    report.set_detail("monomial_counts", bigs_to_json(&counts));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
        let g: Vec<Vec<&str>> = gens.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_minimal_nonfaces(labels, &g).unwrap()
    }

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn inclusion_exclusion_examples() {
        let one = NonfaceFamily::new(vec![0b11]).unwrap();
        assert_eq!(
            numerator_by_inclusion_exclusion(&one).unwrap().poly,
            p(&[1, 0, -1])
        );
        let sq = NonfaceFamily::new(vec![0b0101, 0b1010]).unwrap();
        assert_eq!(
            numerator_by_inclusion_exclusion(&sq).unwrap().poly,
            p(&[1, 0, -2, 0, 1])
        );
        let none = NonfaceFamily::default();
        assert_eq!(
            numerator_by_inclusion_exclusion(&none).unwrap().poly,
            p(&[1])
        );
    }

    #[test]
    fn h_from_f_examples() {
        assert_eq!(
            h_from_f(&big(&[1, 6, 12, 8]), 3).unwrap().entries,
            big(&[1, 3, 3, 1])
        );
        assert_eq!(h_from_f(&big(&[1, 3]), 1).unwrap().entries, big(&[1, 2]));
        let simplex = nf(&["1", "2", "3", "4"], &[]);
        assert_eq!(h_vector(&simplex).entries, big(&[1, 0, 0, 0, 0]));
        assert!(h_from_f(&big(&[1, 3]), 2).is_err());
        assert!(h_from_f(&big(&[2, 3]), 1).is_err());
    }

    #[test]
    fn f_from_h_inverts() {
        let h = HVector {
            entries: big(&[1, 3, 3, 1]),
        };
        assert_eq!(f_from_h(&h, 3).unwrap(), big(&[1, 6, 12, 8]));
    }

    #[test]
    fn numerator_from_h_examples() {
        let two = nf(&["a", "b"], &[&["a", "b"]]);
        assert_eq!(numerator_from_h(&two).poly, p(&[1, 0, -1]));
        let oct = nf(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "c"], &["b", "d"], &["e", "f"]],
        );
        assert_eq!(numerator_from_h(&oct).poly, p(&[1, 0, -1]).pow(3));
        assert_eq!(numerator_from_h(&nf(&["x", "y"], &[])).poly, p(&[1]));
    }

    #[test]
    fn monomial_count_examples() {
        assert_eq!(
            standard_monomial_count(&nf(&["x", "y"], &[]), 2).unwrap(),
            BigInt::from(3)
        );
        let two = nf(&["a", "b"], &[&["a", "b"]]);
        assert_eq!(standard_monomial_count(&two, 3).unwrap(), BigInt::from(2));
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(standard_monomial_count(&tri, 2).unwrap(), BigInt::from(6));
        assert!(standard_monomial_count(&tri, 13).unwrap_err().is_guard());
    }

    #[test]
    fn ghost_vertices_in_numerators() {
        let t =
            SimplicialComplex::from_minimal_nonfaces_relaxed(&["a", "b"], &[vec!["a"], vec!["b"]])
                .unwrap();
        let ie = numerator_by_inclusion_exclusion(t.minimal_nonfaces())
            .unwrap()
            .poly;
        assert_eq!(ie, p(&[1, -2, 1]));
        assert_eq!(numerator_from_h(&t).poly, ie);
        assert!(cross_check(&t, 6).unwrap().passed());
    }

    #[test]
    fn top_entry() {
        let oct = nf(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "c"], &["b", "d"], &["e", "f"]],
        );
        assert!(top_h_identity(&oct).passed());
        assert!(top_h_identity(&SimplicialComplex::void()).passed());
    }
}

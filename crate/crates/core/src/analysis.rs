//! Uniform matroid and octahedron instances, log concavity of h/f/χ_c
//! sequences, Dehn–Sommerville symmetry and the signed reciprocity of χ_c.

use num_bigint::BigInt;

use crate::auxiliary::{
    auxiliary_complex, chromatic_via_auxiliary, verify_main_theorem, AlphaAssignment,
};
use crate::chromatic::chromatic_polynomial;
use crate::complex::{card, SimplicialComplex};
use crate::enumerate::WALK_LIMIT;
use crate::error::{check_guard, Error, Result};
use crate::hilbert::{f_vector_big, h_vector};
use crate::poly::{
    bigs_to_json, is_log_concave, is_signed_palindrome, largest_log_concave_window, IntPolynomial,
    LogConcavityMode,
};
use crate::report::{CheckReport, Verdict};

/// Independence complex of `U_n^r`: all subsets of `{1..n}` of size at most
/// `r`.
pub fn uniform_matroid_complex(n: usize, r: usize) -> Result<SimplicialComplex> {
    if r == 0 || r > n {
        return Err(Error::Invalid(format!(
            "need 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    check_guard("uniform matroid size n", 20, n as u128)?;
    let mut labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
    labels.sort();
    // the family of all (r+1)-subsets does not depend on label order
    let gens: Vec<u64> = (0..1u64 << n).filter(|&m| card(m) == r + 1).collect();
    SimplicialComplex::from_nonface_masks(labels, gens, false)
}

/// Boundary of the octahedron on `a..f`; the diagonals are `{a,c}`,
/// `{b,d}`, `{e,f}`.
pub fn octahedron_boundary() -> SimplicialComplex {
    SimplicialComplex::from_minimal_nonfaces(
        &["a", "b", "c", "d", "e", "f"],
        &[vec!["a", "c"], vec!["b", "d"], vec!["e", "f"]],
    )
    .expect("fixed fixture")
}

fn lc_sub(name: &str, seq: &[BigInt], mode: LogConcavityMode) -> CheckReport {
    let mut r = is_log_concave(seq, 0..seq.len(), mode).expect("full window");
    r.check = name.to_string();
    let (lo, hi) = largest_log_concave_window(seq, mode);
    r.set_detail("largest_window", serde_json::json!([lo, hi]));
    r
}

/// χ_c(S), through the auxiliary complex when an assignment is supplied.
fn chi_c(s: &SimplicialComplex, assign: Option<&AlphaAssignment>) -> Result<IntPolynomial> {
    match assign {
        Some(a) => {
            a.check_matches(s)?;
            chromatic_via_auxiliary(&auxiliary_complex(a)?, s.vertex_count())
        }
        None => chromatic_polynomial(s),
    }
}

/// Log concavity of the h-vector, the f-vector, the coefficients of χ_c
/// and those of χ_c(t - 1). Passes when every computed sub-check passes.
pub fn log_concavity_report(
    s: &SimplicialComplex,
    assign: Option<&AlphaAssignment>,
    mode: LogConcavityMode,
) -> Result<CheckReport> {
    let mut subs = vec![
        lc_sub("h_vector", &h_vector(s).entries, mode),
        lc_sub("f_vector", &f_vector_big(s), mode),
    ];
    let computable = assign.is_some() || s.minimal_nonfaces().len() <= WALK_LIMIT;
    if computable {
        let chi = chi_c(s, assign)?;
        let mut c = lc_sub("chromatic", chi.coeffs(), mode);
        c.set_detail("polynomial", chi.to_string());
        subs.push(c);
        let shifted = chi.translate(-1);
        let mut c = lc_sub("chromatic_translate", shifted.coeffs(), mode);
        c.set_detail("polynomial", shifted.to_string());
        subs.push(c);
    }
    let verdict = Verdict::from_bool(subs.iter().all(CheckReport::passed));
    let mut report = CheckReport::new("log_concavity", verdict)
        .with_detail("mode", mode.name())
        .with_detail("chromatic_computed", computable);
    report.sub_reports = subs;
    Ok(report)
}

/// `h_i = h_{d-i}` for all `i`.
pub fn dehn_sommerville_check(s: &SimplicialComplex) -> CheckReport {
    let h = h_vector(s).entries;
    let d = h.len() - 1;
    let report = match (0..=d).find(|&i| h[i] != h[d - i]) {
        None => CheckReport::pass("dehn_sommerville"),
        Some(i) => CheckReport::fail(
            "dehn_sommerville",
            format!("h_{i} = {} but h_{} = {}", h[i], d - i, h[d - i]),
        ),
    };
    report.with_detail("h_vector", bigs_to_json(&h))
}

/// Signed palindromicity of `χ_c(S)` with sign `(-1)^{n_T - d_T}`.
pub fn reciprocity_report(s: &SimplicialComplex, assign: &AlphaAssignment) -> Result<CheckReport> {
    let theorem = verify_main_theorem(s, assign)?;
    if !theorem.passed() {
        return Err(Error::Invalid(
            "the K-form identity fails for this assignment, so reciprocity does not apply".into(),
        ));
    }
    let t = auxiliary_complex(assign)?;
    let chi = chromatic_via_auxiliary(&t, s.vertex_count())?;
    let m = t.vertex_count() - t.dimension_plus_one();
    let sign = if m % 2 == 0 { 1 } else { -1 };
    let pal = is_signed_palindrome(&chi, sign);
    let mut report = CheckReport::new("reciprocity", pal.verdict)
        .with_detail("chi_c", chi.to_string())
        .with_detail("sign", sign)
        .with_detail("n_t", t.vertex_count() as u64)
        .with_detail("d_t", t.dimension_plus_one() as u64)
        .with_sub(pal)
        .with_sub(dehn_sommerville_check(&t));
    if is_octahedron(&t) {
        let (c5, c3) = (chi.coeff(5), chi.coeff(3));
        let literal = if c5 == c3 {
            CheckReport::pass("literal_t5_equals_t3")
        } else {
            CheckReport::fail(
                "literal_t5_equals_t3",
                format!("t^5 has {c5}, t^3 has {c3}"),
            )
        };
        report
            .sub_reports
            .push(literal.with_detail("informational", true));
    }
    Ok(report)
}

/// Six vertices, three pairwise disjoint two-element minimal nonfaces
/// covering them.
fn is_octahedron(t: &SimplicialComplex) -> bool {
    let g = t.minimal_nonfaces().generators();
    t.vertex_count() == 6
        && g.len() == 3
        && g.iter().all(|&x| card(x) == 2)
        && g.iter().fold(0, |a, &x| a | x) == t.all_vertices()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::auxiliary::{lift_disjoint, lift_with_apex};

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn uniform() {
        assert_eq!(
            uniform_matroid_complex(4, 2).unwrap().f_vector(),
            vec![1, 4, 6]
        );
        let u = uniform_matroid_complex(9, 6).unwrap();
        assert_eq!(u.minimal_nonfaces().len(), 36);
        assert_eq!(u.f_vector(), vec![1, 9, 36, 84, 126, 126, 84]);
        assert_eq!(h_vector(&u).entries, big(&[1, 3, 6, 10, 15, 21, 28]));
        let u12 = uniform_matroid_complex(12, 2).unwrap();
        assert!(u12.is_face(&["10", "12"]).unwrap());
        assert!(!u12.is_face(&["1", "10", "12"]).unwrap());
        let (s, _) = lift_with_apex(&uniform_matroid_complex(5, 2).unwrap()).unwrap();
        assert!(s
            .minimal_nonface_labels()
            .iter()
            .all(|g| g.len() == 4 && g.contains(&"q".to_string())));
        assert!(uniform_matroid_complex(3, 4).is_err());
    }

    #[test]
    fn octahedron() {
        let o = octahedron_boundary();
        assert_eq!(o.f_vector(), vec![1, 6, 12, 8]);
        assert_eq!(h_vector(&o).entries, big(&[1, 3, 3, 1]));
        assert_eq!(o.dimension(), 2);
        assert!(dehn_sommerville_check(&o).passed());
    }

    #[test]
    fn dehn_sommerville() {
        let three =
            SimplicialComplex::from_facets(&["a", "b", "c"], &[vec!["a"], vec!["b"], vec!["c"]])
                .unwrap();
        assert!(!dehn_sommerville_check(&three).passed());
        let two = SimplicialComplex::from_facets(&["a", "b"], &[vec!["a"], vec!["b"]]).unwrap();
        assert!(dehn_sommerville_check(&two).passed());
    }

    #[test]
    fn reciprocity() {
        let (s, a) = lift_disjoint(&octahedron_boundary()).unwrap();
        let r = reciprocity_report(&s, &a).unwrap();
        assert!(r.passed());
        assert_eq!(r.details["chi_c"], "t^9 - 3*t^7 + 3*t^5 - t^3");
        assert_eq!(r.details["sign"], -1);
        assert!(!r.sub("literal_t5_equals_t3").unwrap().passed());
        let (s, a) = lift_with_apex(&octahedron_boundary()).unwrap();
        let r = reciprocity_report(&s, &a).unwrap();
        assert!(r.passed());
        assert_eq!(r.details["chi_c"], "t^7 - 3*t^5 + 3*t^3 - t");
        let three =
            SimplicialComplex::from_facets(&["a", "b", "c"], &[vec!["a"], vec!["b"], vec!["c"]])
                .unwrap();
        let (s, a) = lift_with_apex(&three).unwrap();
        assert!(!reciprocity_report(&s, &a).unwrap().passed());
    }

    #[test]
    fn log_concavity() {
        let u = uniform_matroid_complex(9, 6).unwrap();
        let r = log_concavity_report(&u, None, LogConcavityMode::Literal).unwrap();
        assert!(r.sub("h_vector").unwrap().passed());
        assert!(r.sub("f_vector").unwrap().passed());
        let r =
            log_concavity_report(&octahedron_boundary(), None, LogConcavityMode::Literal).unwrap();
        assert!(r.sub("h_vector").unwrap().passed());
    }
}

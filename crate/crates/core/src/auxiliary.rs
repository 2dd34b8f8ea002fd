//! Companion-set assignments `σ_i ↦ α_i`, the auxiliary complex `T(S)`
//! whose minimal nonfaces are the `α_i`, the apex and disjoint lifts that
//! produce such an `S` from any `T`, and the identity checks relating
//! `χ_c(S)` to the Hilbert numerator of `T`.

use std::collections::BTreeSet;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::chromatic::{chromatic_polynomial, fresh_label};
use crate::complex::{bits, card, is_subset, lex_cmp, SimplicialComplex, VertexSet};
use crate::enumerate::{component_count, walk_subsets};
use crate::error::{check_guard, Error, Result};
use crate::hilbert::{h_vector, numerator_by_inclusion_exclusion, numerator_from_h};
use crate::poly::{big_to_json, brenti_criterion, IntPolynomial};
use crate::report::{CheckReport, Verdict};

/// Generator-count limit for the `2^r` scans in this module.
pub const SCAN_GENERATORS: usize = 20;
/// Limit on the number of α choices tried by [`search_alpha`].
pub const SEARCH_LIMIT: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaPair {
    pub sigma: Vec<String>,
    pub alpha: Vec<String>,
}

/// Pairs `(σ_i, α_i)` with `|α_i| = |σ_i| - 1`. The α sets live on their own
/// ground set, independent of the vertices of `S`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AlphaAssignment {
    pairs: Vec<AlphaPair>,
}

/// Index-space view of an assignment.
struct Masks {
    sigma_ground: Vec<String>,
    alpha_ground: Vec<String>,
    sigma: Vec<VertexSet>,
    alpha: Vec<VertexSet>,
}

fn ground(sets: impl Iterator<Item = Vec<String>>) -> Result<Vec<String>> {
    let g: BTreeSet<String> = sets.flatten().collect();
    check_guard("ground set size", 64, g.len() as u128)?;
    Ok(g.into_iter().collect())
}

fn to_mask(ground: &[String], set: &[String]) -> VertexSet {
    set.iter()
        .map(|l| ground.binary_search(l).expect("label in ground set"))
        .fold(0, |m, i| m | 1 << i)
}

fn dedup_sorted(mut v: Vec<String>) -> Vec<String> {
    v.sort();
    v.dedup();
    v
}

impl AlphaAssignment {
    pub fn new(pairs: Vec<AlphaPair>) -> Result<Self> {
        let pairs: Vec<AlphaPair> = pairs
            .into_iter()
            .map(|p| AlphaPair {
                sigma: dedup_sorted(p.sigma),
                alpha: dedup_sorted(p.alpha),
            })
            .collect();
        for p in &pairs {
            if p.alpha.len() + 1 != p.sigma.len() {
                return Err(Error::Invalid(format!(
                    "|alpha| must be |sigma| - 1 for sigma {:?}, alpha {:?}",
                    p.sigma, p.alpha
                )));
            }
        }
        Ok(AlphaAssignment { pairs })
    }

    pub fn pairs(&self) -> &[AlphaPair] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    fn masks(&self) -> Result<Masks> {
        let sigma_ground = ground(self.pairs.iter().map(|p| p.sigma.clone()))?;
        let alpha_ground = ground(self.pairs.iter().map(|p| p.alpha.clone()))?;
        let sigma = self
            .pairs
            .iter()
            .map(|p| to_mask(&sigma_ground, &p.sigma))
            .collect();
        let alpha = self
            .pairs
            .iter()
            .map(|p| to_mask(&alpha_ground, &p.alpha))
            .collect();
        Ok(Masks {
            sigma_ground,
            alpha_ground,
            sigma,
            alpha,
        })
    }

    /// The σ sets must be exactly the minimal nonfaces of `s`.
    pub fn check_matches(&self, s: &SimplicialComplex) -> Result<()> {
        let mine: BTreeSet<Vec<String>> = self.pairs.iter().map(|p| p.sigma.clone()).collect();
        let theirs: BTreeSet<Vec<String>> = s.minimal_nonface_labels().into_iter().collect();
        if mine != theirs || mine.len() != self.pairs.len() {
            return Err(Error::Invalid(
                "assignment sigma sets differ from the minimal nonfaces of the complex".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyIMode {
    /// Intersection-cardinality clause only for `|I| >= 2`.
    #[default]
    Literal,
    /// Intersection-cardinality clause for every nonempty `I`.
    Strict,
}

impl PropertyIMode {
    pub fn name(self) -> &'static str {
        match self {
            PropertyIMode::Literal => "literal",
            PropertyIMode::Strict => "strict",
        }
    }
}

fn describe(ground: &[String], set: VertexSet) -> String {
    let names: Vec<&str> = bits(set).map(|i| ground[i].as_str()).collect();
    format!("{{{}}}", names.join(","))
}

fn describe_family(ground: &[String], sets: &[VertexSet], members: VertexSet) -> String {
    let parts: Vec<String> = bits(members).map(|i| describe(ground, sets[i])).collect();
    format!("[{}]", parts.join(", "))
}

/// Orders candidate witnesses by `|I|`, then lexicographically in the index
/// list.
fn smaller_witness(a: VertexSet, b: VertexSet) -> bool {
    card(a) < card(b) || (card(a) == card(b) && lex_cmp(a, b).is_lt())
}

fn union_of(sets: &[VertexSet], members: VertexSet) -> VertexSet {
    bits(members).fold(0, |acc, i| acc | sets[i])
}

/// Intersection property on the assignment. Families `J = I + {p}` are
/// scanned in increasing bitmask order, `p` from the largest member of `J`
/// down; the witness is the first offending `(I, p)`.
pub fn check_property_i(assign: &AlphaAssignment, mode: PropertyIMode) -> Result<CheckReport> {
    let r = assign.len();
    check_guard("generator count", SCAN_GENERATORS as u128, r as u128)?;
    let m = assign.masks()?;
    let min_size = match mode {
        PropertyIMode::Literal => 2,
        PropertyIMode::Strict => 1,
    };
    let mut best: Option<(VertexSet, usize, String)> = None;
    'scan: for family in 1..(1u64 << r) {
        if card(family) < 2 {
            continue;
        }
        let mut ps: Vec<usize> = bits(family).collect();
        ps.reverse();
        for p in ps {
            let members = family & !(1 << p);
            let (s_i, a_i) = (union_of(&m.sigma, members), union_of(&m.alpha, members));
            let (s_cap, a_cap) = (s_i & m.sigma[p], a_i & m.alpha[p]);
            let problem = if s_cap == 0 {
                (a_cap != 0).then(|| "sigma sets disjoint but alpha sets meet".to_string())
            } else if card(members) >= min_size && card(a_cap) + 1 != card(s_cap) {
                Some(format!(
                    "|alpha_I ∩ alpha_p| = {} but |sigma_I ∩ sigma_p| = {}",
                    card(a_cap),
                    card(s_cap)
                ))
            } else {
                None
            };
            if let Some(why) = problem {
                best = Some((members, p, why));
                break 'scan;
            }
        }
    }
    let report = match best {
        None => CheckReport::pass("property_i"),
        Some((members, p, why)) => CheckReport::fail(
            "property_i",
            format!(
                "I={}, p={}: {why}",
                describe_family(&m.sigma_ground, &m.sigma, members),
                describe(&m.sigma_ground, m.sigma[p])
            ),
        )
        .with_detail(
            "witness_i",
            bits(members).map(|i| i as u64 + 1).collect::<Vec<_>>(),
        )
        .with_detail("witness_p", p as u64 + 1),
    };
    Ok(report.with_detail("mode", mode.name()))
}

/// `|α_I| = |σ_I| - c(I)` for every nonempty `I`; the witness is the
/// smallest failing `I`.
pub fn check_target_invariant(assign: &AlphaAssignment) -> Result<CheckReport> {
    let r = assign.len();
    check_guard("generator count", SCAN_GENERATORS as u128, r as u128)?;
    let m = assign.masks()?;
    Ok(target_invariant_on(&m.sigma, &m.alpha).map_or_else(
        || CheckReport::pass("target_invariant"),
        |members| {
            let chosen: Vec<VertexSet> = bits(members).map(|i| m.sigma[i]).collect();
            let (su, au) = (union_of(&m.sigma, members), union_of(&m.alpha, members));
            CheckReport::fail(
                "target_invariant",
                format!(
                    "I={}: |sigma_I| - c(I) = {} - {} but |alpha_I| = {}",
                    describe_family(&m.sigma_ground, &m.sigma, members),
                    card(su),
                    component_count(&chosen),
                    card(au)
                ),
            )
            .with_detail(
                "witness_i",
                bits(members).map(|i| i as u64 + 1).collect::<Vec<_>>(),
            )
        },
    ))
}

fn target_invariant_on(sigma: &[VertexSet], alpha: &[VertexSet]) -> Option<VertexSet> {
    let mut best: Option<VertexSet> = None;
    walk_subsets(sigma, true, |node| {
        let members = node.members.iter().fold(0u64, |a, &i| a | 1 << i);
        if best.is_some_and(|b| !smaller_witness(members, b)) {
            return;
        }
        let au = union_of(alpha, members);
        if card(au) + node.component_count() != card(node.union) {
            best = Some(members);
        }
    })
    .expect("generator count already guarded");
    best
}

/// First assignment (in lexicographic order of the α choices) with each
/// `α_i = σ_i` minus one element passing the target invariant.
pub fn search_alpha(s: &SimplicialComplex) -> Result<Option<AlphaAssignment>> {
    let gens = s.minimal_nonfaces().generators();
    check_guard(
        "generator count",
        SCAN_GENERATORS as u128,
        gens.len() as u128,
    )?;
    let space: u128 = gens.iter().map(|&g| card(g) as u128).product();
    check_guard("alpha search space", SEARCH_LIMIT, space)?;
    // choice k for σ removes its (|σ|-1-k)-th element, so k = 0 gives the
    // lexicographically smallest α
    let elems: Vec<Vec<usize>> = gens.iter().map(|&g| bits(g).collect()).collect();
    let mut choice = vec![0usize; gens.len()];
    loop {
        let alpha: Vec<VertexSet> = gens
            .iter()
            .zip(&elems)
            .zip(&choice)
            .map(|((&g, e), &k)| g & !(1 << e[e.len() - 1 - k]))
            .collect();
        if target_invariant_on(gens, &alpha).is_none() {
            let pairs = gens
                .iter()
                .zip(&alpha)
                .map(|(&g, &a)| AlphaPair {
                    sigma: s.labels_of(g),
                    alpha: s.labels_of(a),
                })
                .collect();
            return AlphaAssignment::new(pairs).map(Some);
        }
        let mut i = gens.len();
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            choice[i] += 1;
            if choice[i] < elems[i].len() {
                break;
            }
            choice[i] = 0;
        }
    }
}

/// `T(S)`: the complex on the α ground set with minimal nonfaces `α_i`.
/// Singleton α sets are allowed and make their vertex a non-face.
pub fn auxiliary_complex(assign: &AlphaAssignment) -> Result<SimplicialComplex> {
    let m = assign.masks()?;
    for (i, &a) in m.alpha.iter().enumerate() {
        for (j, &b) in m.alpha.iter().enumerate() {
            if i != j && is_subset(a, b) {
                return Err(Error::NotAntichain(
                    describe(&m.alpha_ground, a),
                    describe(&m.alpha_ground, b),
                ));
            }
        }
    }
    let gens: Vec<Vec<String>> = assign.pairs.iter().map(|p| p.alpha.clone()).collect();
    SimplicialComplex::from_minimal_nonfaces_relaxed(&m.alpha_ground, &gens)
}

/// Adjoins one fresh vertex `q` to every minimal nonface of `t`.
pub fn lift_with_apex(t: &SimplicialComplex) -> Result<(SimplicialComplex, AlphaAssignment)> {
    let q = fresh_label(t.vertices(), "q");
    let alphas = t.minimal_nonface_labels();
    let pairs: Vec<AlphaPair> = alphas
        .iter()
        .map(|a| {
            let mut sigma = a.clone();
            sigma.push(q.clone());
            AlphaPair {
                sigma,
                alpha: a.clone(),
            }
        })
        .collect();
    let mut labels = t.vertices().to_vec();
    labels.push(q);
    let gens: Vec<Vec<String>> = pairs.iter().map(|p| p.sigma.clone()).collect();
    let s = SimplicialComplex::from_minimal_nonfaces(&labels, &gens)?;
    Ok((s, AlphaAssignment::new(pairs)?))
}

/// Adjoins a distinct fresh vertex to each minimal nonface of `t`; the
/// nonfaces of `t` must be pairwise disjoint.
pub fn lift_disjoint(t: &SimplicialComplex) -> Result<(SimplicialComplex, AlphaAssignment)> {
    let gens = t.minimal_nonfaces().generators();
    for (i, &a) in gens.iter().enumerate() {
        if let Some(&b) = gens[i + 1..].iter().find(|&&b| a & b != 0) {
            return Err(Error::NotDisjoint(
                describe(t.vertices(), a),
                describe(t.vertices(), b),
            ));
        }
    }
    let mut labels = t.vertices().to_vec();
    let mut pairs = Vec::with_capacity(gens.len());
    for (i, &g) in gens.iter().enumerate() {
        let q = fresh_label(&labels, &format!("q{}", i + 1));
        labels.push(q.clone());
        let alpha = t.labels_of(g);
        let mut sigma = alpha.clone();
        sigma.push(q);
        pairs.push(AlphaPair { sigma, alpha });
    }
    let sigma_gens: Vec<Vec<String>> = pairs.iter().map(|p| p.sigma.clone()).collect();
    let s = SimplicialComplex::from_minimal_nonfaces(&labels, &sigma_gens)?;
    Ok((s, AlphaAssignment::new(pairs)?))
}

/// `t^{n_S} K_T(1/t)` with `K_T` obtained from the h-vector of `T`; this
/// avoids the `2^r` enumeration and is the route for large `r`.
pub fn chromatic_via_auxiliary(t: &SimplicialComplex, n_s: usize) -> Result<IntPolynomial> {
    numerator_from_h(t).poly.reciprocal(n_s)
}

/// Compares `χ_c(S)` with `t^{n_S} K_T(1/t)` (the verdict) and with
/// `t^{n_S} h_T(1/t)` (recorded only).
pub fn verify_main_theorem(s: &SimplicialComplex, assign: &AlphaAssignment) -> Result<CheckReport> {
    assign.check_matches(s)?;
    let lhs = chromatic_polynomial(s)?;
    let t = auxiliary_complex(assign)?;
    let n_s = s.vertex_count();
    let k_t = numerator_by_inclusion_exclusion(t.minimal_nonfaces())?.poly;
    let h_t = h_vector(&t);
    let compare = |name: &str, p: &IntPolynomial| -> (CheckReport, String) {
        match p.reciprocal(n_s) {
            Ok(rhs) if rhs == lhs => (CheckReport::pass(name), rhs.to_string()),
            Ok(rhs) => (
                CheckReport::fail(name, format!("{lhs} != {rhs}")),
                rhs.to_string(),
            ),
            Err(e) => (CheckReport::fail(name, e.to_string()), "n/a".into()),
        }
    };
    let (k_form, rhs_k) = compare("k_form", &k_t);
    let (h_form, rhs_h) = compare("h_form", &h_t.as_polynomial());
    let mut report = CheckReport::new("main_theorem", k_form.verdict);
    report.set_detail("chi_c", lhs.to_string());
    report.set_detail("k_t", k_t.to_string());
    report.set_detail(
        "h_t",
        serde_json::Value::Array(h_t.entries.iter().map(big_to_json).collect()),
    );
    report.set_detail("n_s", n_s as u64);
    report.set_detail("n_t", t.vertex_count() as u64);
    report.set_detail("d_t", h_t.d() as u64);
    report.set_detail("rhs_k_form", rhs_k);
    report.set_detail("rhs_h_form", rhs_h);
    report.set_detail("verdict_anchor", "k_form");
    report.sub_reports.push(k_form);
    report
        .sub_reports
        .push(h_form.with_detail("informational", true));
    report.sub_reports.push(check_target_invariant(assign)?);
    Ok(report)
}

fn constant_component_check(s: &SimplicialComplex, a: usize) -> Result<CheckReport> {
    let gens = s.minimal_nonfaces().generators();
    check_guard(
        "generator count",
        SCAN_GENERATORS as u128,
        gens.len() as u128,
    )?;
    let mut witness: Option<(VertexSet, usize)> = None;
    walk_subsets(gens, true, |node| {
        if witness.is_none() && node.component_count() != a {
            let members = node.members.iter().fold(0u64, |acc, &i| acc | 1 << i);
            witness = Some((members, node.component_count()));
        }
    })?;
    Ok(match witness {
        None => CheckReport::pass("components"),
        Some((members, c)) => CheckReport::fail(
            "components",
            format!(
                "c({}) = {c} != {a}",
                describe_family(s.vertices(), gens, members)
            ),
        ),
    })
}

/// Checks `c(I) = a` for all nonempty `I` and then
/// `χ_c(S) - t^n = t^{n+a} (K_S(1/t) - 1)` as polynomials.
pub fn verify_constant_component(s: &SimplicialComplex, a: usize) -> Result<CheckReport> {
    let components = constant_component_check(s, a)?;
    let n = s.vertex_count();
    let chi = chromatic_polynomial(s)?;
    let lhs = &chi - &IntPolynomial::monomial(n, 1);
    let k = numerator_by_inclusion_exclusion(s.minimal_nonfaces())?.poly;
    let tail = &k - &IntPolynomial::one();
    let identity = match tail.reciprocal(n + a) {
        Ok(rhs) if rhs == lhs => CheckReport::pass("identity").with_detail("rhs", rhs.to_string()),
        Ok(rhs) => CheckReport::fail("identity", format!("{lhs} != {rhs}"))
            .with_detail("rhs", rhs.to_string()),
        Err(_) => CheckReport::fail("identity", "negative powers of t do not cancel"),
    };
    let verdict = Verdict::from_bool(components.passed() && identity.passed());
    Ok(CheckReport::new("constant_component", verdict)
        .with_detail("a", a as u64)
        .with_detail("chi_c", chi.to_string())
        .with_detail("k", k.to_string())
        .with_sub(components)
        .with_sub(identity))
}

/// Window of `K_S` coefficients starting at degree `a`, shifted to degree
/// 0, tested with the Brenti criterion. Requires `c(I) = a` throughout.
pub fn hilbert_polynomial_window(
    s: &SimplicialComplex,
    a: usize,
) -> Result<(IntPolynomial, CheckReport)> {
    let components = constant_component_check(s, a)?;
    if !components.passed() {
        return Err(Error::Invalid(format!(
            "component count is not constantly {a}: {}",
            components.witness.unwrap_or_default()
        )));
    }
    let k = numerator_by_inclusion_exclusion(s.minimal_nonfaces())?.poly;
    let window: Vec<_> = k.coeffs().iter().skip(a).cloned().collect();
    let p = IntPolynomial::new(window.clone());
    if window.is_empty() {
        let report = CheckReport::new("hilbert_window", Verdict::NotApplicable)
            .with_detail("reason", "empty coefficient window")
            .with_detail("k", k.to_string());
        return Ok((p, report));
    }
    let one = num_bigint::BigInt::from(1);
    let three = num_bigint::BigInt::from(3);
    let all_positive = window.iter().all(|c| *c >= one);
    let two_slots = p.coeff(1) >= three && p.coeff(2) >= three;
    let brenti = brenti_criterion(&p);
    let report = CheckReport::new("hilbert_window", brenti.verdict)
        .with_detail("a", a as u64)
        .with_detail("k", k.to_string())
        .with_detail("window", crate::poly::bigs_to_json(&window))
        .with_detail("hypothesis_coefficients_at_least_1", all_positive)
        .with_detail("hypothesis_two_slots_at_least_3", two_slots)
        .with_sub(brenti);
    Ok((p, report))
}

/// Random search for a complex with constant component count 1 whose
/// Hilbert window passes the Brenti criterion. Returns the first hit.
pub fn search_window_instance<R: Rng>(
    rng: &mut R,
    trials: usize,
    max_n: usize,
) -> Option<SimplicialComplex> {
    for _ in 0..trials {
        let n = rng.gen_range(3..=max_n);
        let r = rng.gen_range(1..=5);
        let s = crate::random::pairwise_intersecting_complex(rng, n, r);
        if let Ok((_, report)) = hilbert_polynomial_window(&s, 1) {
            if report.passed() {
                return Some(s);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
        let g: Vec<Vec<&str>> = gens.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_minimal_nonfaces(labels, &g).unwrap()
    }

    fn assign(pairs: &[(&[&str], &[&str])]) -> AlphaAssignment {
        AlphaAssignment::new(
            pairs
                .iter()
                .map(|(s, a)| AlphaPair {
                    sigma: s.iter().map(|x| x.to_string()).collect(),
                    alpha: a.iter().map(|x| x.to_string()).collect(),
                })
                .collect(),
        )
        .unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn k1_assignment() -> AlphaAssignment {
        assign(&[
            (&["a", "b"], &["b"]),
            (&["c", "d"], &["c"]),
            (&["c", "e"], &["d"]),
            (&["d", "e"], &["e"]),
            (&["a", "e"], &["a"]),
        ])
    }

    #[test]
    fn property_i_examples() {
        let sq = assign(&[(&["a", "c"], &["a"]), (&["b", "d"], &["b"])]);
        for mode in [PropertyIMode::Literal, PropertyIMode::Strict] {
            assert!(check_property_i(&sq, mode).unwrap().passed());
        }
        let star = assign(&[
            (&["a", "x"], &["x"]),
            (&["a", "y"], &["y"]),
            (&["a", "z"], &["z"]),
        ]);
        for mode in [PropertyIMode::Literal, PropertyIMode::Strict] {
            assert!(check_property_i(&star, mode).unwrap().passed());
        }
        let strict = check_property_i(&k1_assignment(), PropertyIMode::Strict).unwrap();
        assert!(!strict.passed());
    }

    #[test]
    fn k1_named_pair_violates_strict_clause() {
        // I = {β2, β3}, p = β4: |σ_I ∩ σ_4| = |{d,e}| = 2, |α_I ∩ α_4| = 0
        let a = k1_assignment();
        let m = a.masks().unwrap();
        let members = 0b00110;
        let s_cap = union_of(&m.sigma, members) & m.sigma[3];
        let a_cap = union_of(&m.alpha, members) & m.alpha[3];
        assert_eq!((card(s_cap), card(a_cap)), (2, 0));
    }

    #[test]
    fn target_invariant_examples() {
        let sq = assign(&[(&["a", "c"], &["a"]), (&["b", "d"], &["b"])]);
        assert!(check_target_invariant(&sq).unwrap().passed());
        let r = check_target_invariant(&k1_assignment()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.details["witness_i"], serde_json::json!([2, 3, 4]));
        assert!(r.witness.unwrap().contains("3 - 1 but |alpha_I| = 3"));
    }

    #[test]
    fn alpha_search() {
        let sq = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        let found = search_alpha(&sq).unwrap().unwrap();
        assert_eq!(found.pairs()[0].alpha, vec!["a"]);
        assert_eq!(found.pairs()[1].alpha, vec!["b"]);
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(
            search_alpha(&tri).unwrap().unwrap().pairs()[0].alpha,
            vec!["1", "2"]
        );
        let k1 = nf(
            &["a", "b", "c", "d", "e"],
            &[
                &["a", "b"],
                &["c", "d"],
                &["c", "e"],
                &["d", "e"],
                &["a", "e"],
            ],
        );
        assert_eq!(search_alpha(&k1).unwrap(), None);
    }

    #[test]
    fn auxiliary_complexes() {
        let sq = assign(&[(&["a", "c"], &["a"]), (&["b", "d"], &["b"])]);
        let t = auxiliary_complex(&sq).unwrap();
        assert_eq!(t.vertex_count(), 2);
        assert_eq!(t.facet_masks(), &[0]);
        let tri = assign(&[(&["1", "2", "3"], &["1", "2"])]);
        assert_eq!(auxiliary_complex(&tri).unwrap().f_vector(), vec![1, 2]);
        let bad = assign(&[(&["1", "2", "3"], &["1", "2"]), (&["1", "4"], &["1"])]);
        assert!(matches!(
            auxiliary_complex(&bad),
            Err(Error::NotAntichain(..))
        ));
    }

    #[test]
    fn lifts() {
        let two = nf(&["1", "2"], &[&["1", "2"]]);
        let (s, a) = lift_with_apex(&two).unwrap();
        assert_eq!(s.minimal_nonface_labels(), vec![vec!["1", "2", "q"]]);
        assert!(check_target_invariant(&a).unwrap().passed());
        let (s, _) = lift_with_apex(&nf(&["x", "y"], &[])).unwrap();
        assert!(s.is_full_simplex());
        assert_eq!(s.vertex_count(), 3);

        let (s, _) = lift_disjoint(&two).unwrap();
        assert_eq!(s.minimal_nonface_labels(), vec![vec!["1", "2", "q1"]]);
        let path = nf(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        assert!(matches!(lift_disjoint(&path), Err(Error::NotDisjoint(..))));
    }

    #[test]
    fn main_theorem_fixtures() {
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        let a = search_alpha(&tri).unwrap().unwrap();
        let r = verify_main_theorem(&tri, &a).unwrap();
        assert!(r.passed());
        assert!(!r.sub("h_form").unwrap().passed());
        assert_eq!(r.details["rhs_h_form"], "t^3 + t^2");

        let sq = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        let a = search_alpha(&sq).unwrap().unwrap();
        let r = verify_main_theorem(&sq, &a).unwrap();
        assert!(r.passed());
        assert_eq!(r.details["chi_c"], "t^4 - 2*t^3 + t^2");
    }

    #[test]
    fn constant_component() {
        let path = nf(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let r = verify_constant_component(&path, 1).unwrap();
        assert!(r.passed(), "{}", r.render());
        assert_eq!(r.sub("identity").unwrap().details["rhs"], "-2*t^2 + t");
        let sq = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        let r = verify_constant_component(&sq, 1).unwrap();
        assert!(!r.sub("components").unwrap().passed());
    }

    #[test]
    fn hilbert_window() {
        let path = nf(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let (w, r) = hilbert_polynomial_window(&path, 1).unwrap();
        assert_eq!(w, p(&[0, -2, 1]));
        assert_eq!(r.verdict, Verdict::Fail);
        let (_, r) = hilbert_polynomial_window(&nf(&["1", "2"], &[]), 1).unwrap();
        assert_eq!(r.verdict, Verdict::NotApplicable);
        let sq = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        assert!(hilbert_polynomial_window(&sq, 1).is_err());
    }
}

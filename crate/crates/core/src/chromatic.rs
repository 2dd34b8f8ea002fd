//! Simplicial chromatic polynomials by inclusion–exclusion over subsets of
//! minimal nonfaces, the finite point-count oracle, graph chromatic
//! polynomials and the addition–contraction experiment.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::complex::{bits, card, is_subset, SimplicialComplex, VertexSet};
use crate::enumerate::{accumulate_terms, component_count as components_of};
use crate::error::{check_guard, Error, Result};
use crate::poly::IntPolynomial;
use crate::report::CheckReport;

/// `q^n` limit for [`finite_model_count`].
pub const MODEL_COUNT_LIMIT: u128 = 100_000_000;
/// Vertex limit for deletion–contraction.
pub const GRAPH_LIMIT: usize = 12;

/// Number of connected components of the intersection graph of `sets`.
pub fn component_count<S: AsRef<str>>(sets: &[Vec<S>]) -> Result<usize> {
    if sets.is_empty() {
        return Err(Error::Invalid("component count of an empty family".into()));
    }
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for l in sets.iter().flatten() {
        let next = index.len();
        index.entry(l.as_ref()).or_insert(next);
    }
    check_guard("distinct labels", 64, index.len() as u128)?;
    let masks: Vec<VertexSet> = sets
        .iter()
        .map(|s| s.iter().fold(0, |m, l| m | 1 << index[l.as_ref()]))
        .collect();
    Ok(components_of(&masks))
}

/// `t^n + Σ_{∅≠I} (-1)^{|I|} t^{n - |σ_I| + c(I)}` over subsets `I` of the
/// minimal nonfaces, where `σ_I` is the union and `c(I)` the number of
/// components of the intersection graph.
pub fn chromatic_polynomial(s: &SimplicialComplex) -> Result<IntPolynomial> {
    let n = s.vertex_count();
    let gens = s.minimal_nonfaces().generators();
    let mut counts = accumulate_terms(gens, true, n + 1, |node| {
        (n - card(node.union) + node.component_count(), node.sign())
    })?;
    counts[n] += 1;
    Ok(IntPolynomial::new(
        counts.into_iter().map(BigInt::from).collect(),
    ))
}

/// Number of tuples in `{1..q}^n` in which, for every minimal nonface, the
/// coordinates indexed by that nonface are not all equal.
pub fn finite_model_count(s: &SimplicialComplex, q: u64) -> Result<u64> {
    let n = s.vertex_count();
    check_guard(
        "q^n",
        MODEL_COUNT_LIMIT,
        (q as u128).saturating_pow(n as u32),
    )?;
    // constraints are checked once their highest vertex is assigned
    let mut closing: Vec<Vec<VertexSet>> = vec![Vec::new(); n];
    for g in s.minimal_nonfaces().iter() {
        closing[63 - g.leading_zeros() as usize].push(g);
    }
    fn go(k: usize, n: usize, q: u64, coords: &mut Vec<u64>, closing: &[Vec<VertexSet>]) -> u64 {
        if k == n {
            return 1;
        }
        let mut total = 0;
        for x in 0..q {
            coords[k] = x;
            let violated = closing[k].iter().any(|&g| bits(g).all(|i| coords[i] == x));
            if !violated {
                total += go(k + 1, n, q, coords, closing);
            }
        }
        total
    }
    let mut coords = vec![0; n];
    Ok(go(0, n, q, &mut coords, &closing))
}

/// Simple graph on labelled vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<S: AsRef<str>, T: AsRef<str>>(labels: &[S], edges: &[(T, T)]) -> Result<Self> {
        let mut vertices: Vec<String> = labels.iter().map(|l| l.as_ref().to_string()).collect();
        vertices.sort();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateLabel(w[0].clone()));
        }
        check_guard("graph vertex count", 64, vertices.len() as u128)?;
        let idx = |l: &str| {
            vertices
                .binary_search_by(|v| v.as_str().cmp(l))
                .map_err(|_| Error::UnknownLabel(l.to_string()))
        };
        let mut out = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let (i, j) = (idx(a.as_ref())?, idx(b.as_ref())?);
            if i == j {
                return Err(Error::Invalid(format!("loop at `{}`", vertices[i])));
            }
            let e = (i.min(j), i.max(j));
            if out.contains(&e) {
                return Err(Error::Invalid(format!(
                    "duplicate edge {}-{}",
                    vertices[e.0], vertices[e.1]
                )));
            }
            out.push(e);
        }
        out.sort();
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    pub fn complete(n: usize) -> Self {
        let labels: Vec<String> = (1..=n).map(|i| i.to_string()).collect();
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
        Graph::new(&labels, &edges).expect("complete graph is simple")
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

fn falling_factorial(n: usize) -> IntPolynomial {
    (0..n).fold(IntPolynomial::one(), |acc, k| {
        &acc * &IntPolynomial::from_i64s(&[-(k as i64), 1])
    })
}

fn deletion_contraction(
    adj: Vec<u64>,
    memo: &mut HashMap<Vec<u64>, IntPolynomial>,
) -> IntPolynomial {
    let n = adj.len();
    let edge = (0..n).find_map(|u| {
        let higher = adj[u] >> (u + 1);
        (higher != 0).then(|| (u, u + 1 + higher.trailing_zeros() as usize))
    });
    let Some((u, v)) = edge else {
        return IntPolynomial::monomial(n, 1);
    };
    let degree_sum: usize = adj.iter().map(|a| a.count_ones() as usize).sum();
    if degree_sum == n * (n - 1) {
        return falling_factorial(n);
    }
    if let Some(p) = memo.get(&adj) {
        return p.clone();
    }
    let mut deleted = adj.clone();
    deleted[u] &= !(1 << v);
    deleted[v] &= !(1 << u);
    // contract v into u, then drop v and shift higher indices down
    let mut merged = deleted.clone();
    merged[u] |= merged[v];
    for w in bits(merged[v]) {
        merged[w] |= 1 << u;
    }
    let low_mask = (1u64 << v) - 1;
    let contracted: Vec<u64> = merged
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != v)
        .map(|(_, &a)| {
            let a = a & !(1 << v);
            (a & low_mask) | ((a >> 1) & !low_mask)
        })
        .collect();
    let p = &deletion_contraction(deleted, memo) - &deletion_contraction(contracted, memo);
    memo.insert(adj, p.clone());
    p
}

/// Chromatic polynomial of a graph by deletion–contraction.
pub fn graph_chromatic(g: &Graph) -> Result<IntPolynomial> {
    check_guard(
        "graph vertex count",
        GRAPH_LIMIT as u128,
        g.vertices.len() as u128,
    )?;
    let mut adj = vec![0u64; g.vertices.len()];
    for &(a, b) in &g.edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    Ok(deletion_contraction(adj, &mut HashMap::new()))
}

/// The complex whose minimal nonfaces are the edges of `g`.
pub fn complex_of_graph(g: &Graph) -> Result<SimplicialComplex> {
    let gens: Vec<Vec<&str>> = g
        .edges
        .iter()
        .map(|&(a, b)| vec![g.vertices[a].as_str(), g.vertices[b].as_str()])
        .collect();
    SimplicialComplex::from_minimal_nonfaces(&g.vertices, &gens)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ContractionConvention {
    /// Keep only the faces disjoint from the contracted nonface.
    RemoveOnly,
    /// Additionally adjoin a vertex standing in for the contracted nonface.
    #[default]
    MergeVertex,
}

impl ContractionConvention {
    pub const ALL: [ContractionConvention; 2] = [
        ContractionConvention::MergeVertex,
        ContractionConvention::RemoveOnly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ContractionConvention::RemoveOnly => "remove_only",
            ContractionConvention::MergeVertex => "merge_vertex",
        }
    }
}

pub(crate) fn fresh_label(taken: &[String], base: &str) -> String {
    let mut label = base.to_string();
    while taken.contains(&label) {
        label.push('\'');
    }
    label
}

fn nonface_mask<S: AsRef<str>>(s: &SimplicialComplex, sigma: &[S]) -> Result<VertexSet> {
    let mask = s.mask_of(sigma)?;
    if !s.minimal_nonfaces().iter().any(|g| g == mask) {
        let names: Vec<&str> = sigma.iter().map(|x| x.as_ref()).collect();
        return Err(Error::NotMinimalNonface(format!("{{{}}}", names.join(","))));
    }
    Ok(mask)
}

/// Tidied contraction of `s` along the minimal nonface `sigma`.
pub fn tidied_contraction<S: AsRef<str>>(
    s: &SimplicialComplex,
    sigma: &[S],
    convention: ContractionConvention,
) -> Result<SimplicialComplex> {
    let sigma_mask = nonface_mask(s, sigma)?;
    let rest = s.all_vertices() & !sigma_mask;
    match convention {
        ContractionConvention::RemoveOnly => s.induced(rest),
        ContractionConvention::MergeVertex => {
            let sigma_names: Vec<String> = s.labels_of(sigma_mask);
            let merged = fresh_label(s.vertices(), &format!("v_{}", sigma_names.join("")));
            let mut labels = s.labels_of(rest);
            labels.push(merged.clone());
            let mut faces: Vec<Vec<String>> = Vec::new();
            for tau in (0..=rest).filter(|&m| is_subset(m, rest)) {
                if !s.contains_face(tau) {
                    continue;
                }
                let mut names = s.labels_of(tau);
                if bits(sigma_mask).all(|x| s.contains_face(tau | 1 << x)) {
                    names.push(merged.clone());
                }
                faces.push(names);
            }
            SimplicialComplex::from_facets(&labels, &faces)
        }
    }
}

/// `S ∪ {σ}` for a minimal nonface `σ`.
pub fn add_face<S: AsRef<str>>(s: &SimplicialComplex, sigma: &[S]) -> Result<SimplicialComplex> {
    let sigma_mask = nonface_mask(s, sigma)?;
    let mut faces = s.facets();
    faces.push(s.labels_of(sigma_mask));
    SimplicialComplex::from_facets(s.vertices(), &faces)
}

/// Residual `χ_c(S) - χ_c(S ∪ {σ}) + χ_c(S/σ)` for each contraction
/// convention; a convention passes when its residual vanishes.
pub fn verify_addition_contraction<S: AsRef<str>>(
    s: &SimplicialComplex,
    sigma: &[S],
) -> Result<CheckReport> {
    let base = chromatic_polynomial(s)?;
    let added = chromatic_polynomial(&add_face(s, sigma)?)?;
    let mut report = CheckReport::pass("addition_contraction")
        .with_detail("chi_s", base.to_string())
        .with_detail("chi_s_with_sigma", added.to_string());
    for conv in ContractionConvention::ALL {
        let contracted = tidied_contraction(s, sigma, conv)?;
        let chi = chromatic_polynomial(&contracted)?;
        let residual = &(&base - &added) + &chi;
        let sub = if residual.is_zero() {
            CheckReport::pass(conv.name())
        } else {
            CheckReport::fail(conv.name(), format!("residual {residual}"))
        };
        report.sub_reports.push(
            sub.with_detail("residual", residual.to_string())
                .with_detail("chi_contraction", chi.to_string())
                .with_detail("contraction_vertices", contracted.vertex_count() as u64),
        );
    }
    let merge_ok = report.sub_reports[0].passed();
    report.verdict = crate::report::Verdict::from_bool(merge_ok);
    report.set_detail(
        "default_convention",
        ContractionConvention::MergeVertex.name(),
    );
    Ok(report)
}

/// Compares `χ_c(q)` with [`finite_model_count`] for `q = 0..=q_max`.
pub fn verify_finite_models(s: &SimplicialComplex, q_max: u64) -> Result<CheckReport> {
    let chi = chromatic_polynomial(s)?;
    let mut witness = None;
    for q in 0..=q_max {
        let (value, count) = (
            chi.evaluate_i64(q as i64),
            BigInt::from(finite_model_count(s, q)?),
        );
        if value != count {
            witness = Some(format!("q={q}: polynomial {value}, count {count}"));
            break;
        }
    }
    let report = match witness {
        None => CheckReport::pass("finite_models"),
        Some(w) => CheckReport::fail("finite_models", w),
    };
    Ok(report
        .with_detail("q_max", q_max)
        .with_detail("chi_c", chi.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
        let g: Vec<Vec<&str>> = gens.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_minimal_nonfaces(labels, &g).unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn component_count_examples() {
        assert_eq!(
            component_count(&[vec!["a", "c"], vec!["b", "d"]]).unwrap(),
            2
        );
        assert_eq!(
            component_count(&[vec!["1", "2"], vec!["2", "3"]]).unwrap(),
            1
        );
        assert_eq!(
            component_count(&[vec!["1", "2"], vec!["2", "3"], vec!["4", "5"]]).unwrap(),
            2
        );
        assert!(component_count::<&str>(&[]).is_err());
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(
            chromatic_polynomial(&nf(&["1", "2", "3"], &[])).unwrap(),
            p(&[0, 0, 0, 1])
        );
        let k4 = complex_of_graph(&Graph::complete(4)).unwrap();
        assert_eq!(chromatic_polynomial(&k4).unwrap(), p(&[0, -6, 11, -6, 1]));
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(chromatic_polynomial(&tri).unwrap(), p(&[0, -1, 0, 1]));
        assert_eq!(
            chromatic_polynomial(&SimplicialComplex::void()).unwrap(),
            p(&[1])
        );
    }

    #[test]
    fn model_count_examples() {
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(finite_model_count(&tri, 3).unwrap(), 24);
        let sq = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        assert_eq!(finite_model_count(&sq, 2).unwrap(), 4);
        assert_eq!(finite_model_count(&nf(&["1", "2"], &[]), 5).unwrap(), 25);
        assert!(finite_model_count(&tri, 1000).unwrap_err().is_guard());
        for q in 0..5 {
            assert_eq!(
                chromatic_polynomial(&tri).unwrap().evaluate_i64(q as i64),
                BigInt::from(finite_model_count(&tri, q).unwrap())
            );
        }
    }

    #[test]
    fn graph_examples() {
        assert_eq!(
            graph_chromatic(&Graph::complete(3)).unwrap(),
            p(&[0, 2, -3, 1])
        );
        let path = Graph::new(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(graph_chromatic(&path).unwrap(), p(&[0, 1, -2, 1]));
        let empty: &[(&str, &str)] = &[];
        let edgeless = Graph::new(&["a", "b", "c", "d"], empty).unwrap();
        assert_eq!(graph_chromatic(&edgeless).unwrap(), p(&[0, 0, 0, 0, 1]));
        assert!(Graph::new(&["a"], &[("a", "a")]).is_err());
        assert!(Graph::new(&["a", "b"], &[("a", "b"), ("b", "a")]).is_err());
    }

    #[test]
    fn deletion_contraction_on_cycle() {
        // C_4: (t-1)^4 + (t-1)
        let c4 = Graph::new(
            &["1", "2", "3", "4"],
            &[("1", "2"), ("2", "3"), ("3", "4"), ("1", "4")],
        )
        .unwrap();
        let expect = &p(&[-1, 1]).pow(4) + &p(&[-1, 1]);
        assert_eq!(graph_chromatic(&c4).unwrap(), expect);
    }

    #[test]
    fn contraction_conventions() {
        let two = nf(&["1", "2"], &[&["1", "2"]]);
        let merged =
            tidied_contraction(&two, &["1", "2"], ContractionConvention::MergeVertex).unwrap();
        assert_eq!(merged.vertex_count(), 1);
        let removed =
            tidied_contraction(&two, &["1", "2"], ContractionConvention::RemoveOnly).unwrap();
        assert_eq!(removed, SimplicialComplex::void());

        let path = nf(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let merged =
            tidied_contraction(&path, &["1", "2"], ContractionConvention::MergeVertex).unwrap();
        assert_eq!(merged.vertices(), &["3".to_string(), "v_12".to_string()]);
        assert_eq!(merged.minimal_nonface_labels(), vec![vec!["3", "v_12"]]);
        assert!(matches!(
            tidied_contraction(&path, &["1", "3"], ContractionConvention::MergeVertex),
            Err(Error::NotMinimalNonface(_))
        ));
    }

    #[test]
    fn addition_contraction_residuals() {
        let two = nf(&["1", "2"], &[&["1", "2"]]);
        let r = verify_addition_contraction(&two, &["1", "2"]).unwrap();
        assert!(r.passed());
        assert!(r.sub("merge_vertex").unwrap().passed());
        let remove = r.sub("remove_only").unwrap();
        assert!(!remove.passed());
        assert_eq!(remove.details["residual"], "-t + 1");

        let path = nf(&["1", "2", "3"], &[&["1", "2"], &["2", "3"]]);
        let r = verify_addition_contraction(&path, &["1", "2"]).unwrap();
        assert_eq!(r.details["chi_s"], "t^3 - 2*t^2 + t");
        assert_eq!(r.details["chi_s_with_sigma"], "t^3 - t^2");
        assert_eq!(
            r.sub("merge_vertex").unwrap().details["chi_contraction"],
            "t^2 - t"
        );
        assert!(r.sub("merge_vertex").unwrap().passed());
        assert!(!r.sub("remove_only").unwrap().passed());
    }
}

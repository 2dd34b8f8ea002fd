//! Seeded random instances for sweeps and property tests.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::chromatic::Graph;
use crate::complex::{card, is_subset, SimplicialComplex, VertexSet};

/// `a, b, c, ...` for up to 26 vertices, `v01, v02, ...` beyond that.
pub fn vertex_labels(n: usize) -> Vec<String> {
    if n <= 26 {
        (0..n)
            .map(|i| ((b'a' + i as u8) as char).to_string())
            .collect()
    } else {
        (1..=n).map(|i| format!("v{i:02}")).collect()
    }
}

fn random_set<R: Rng>(rng: &mut R, n: usize, min: usize, max: usize) -> VertexSet {
    let size = rng.gen_range(min..=max.min(n));
    let mut idx: Vec<usize> = (0..n).collect();
    idx.shuffle(rng);
    idx[..size].iter().fold(0, |m, &i| m | 1 << i)
}

fn antichain<R: Rng>(
    rng: &mut R,
    n: usize,
    r: usize,
    accept: impl Fn(&[VertexSet], VertexSet) -> bool,
) -> Vec<VertexSet> {
    let mut gens: Vec<VertexSet> = Vec::with_capacity(r);
    if n < 2 {
        return gens;
    }
    for _ in 0..r * 20 {
        if gens.len() == r {
            break;
        }
        let g = random_set(rng, n, 2, 4);
        if gens.iter().all(|&h| !is_subset(g, h) && !is_subset(h, g)) && accept(&gens, g) {
            gens.push(g);
        }
    }
    gens
}

fn from_masks(n: usize, gens: &[VertexSet]) -> SimplicialComplex {
    let labels = vertex_labels(n);
    let sets: Vec<Vec<&str>> = gens
        .iter()
        .map(|&g| {
            crate::complex::bits(g)
                .map(|i| labels[i].as_str())
                .collect()
        })
        .collect();
    SimplicialComplex::from_minimal_nonfaces(&labels, &sets).expect("generated antichain is valid")
}

/// Complex on `n` vertices with up to `r` minimal nonfaces of size 2..=4.
pub fn random_complex<R: Rng>(rng: &mut R, n: usize, r: usize) -> SimplicialComplex {
    let gens = antichain(rng, n, r, |_, _| true);
    from_masks(n, &gens)
}

/// Like [`random_complex`] but every two minimal nonfaces meet, so every
/// subfamily has one intersection component.
pub fn pairwise_intersecting_complex<R: Rng>(rng: &mut R, n: usize, r: usize) -> SimplicialComplex {
    let gens = antichain(rng, n, r, |gens, g| gens.iter().all(|&h| h & g != 0));
    from_masks(n, &gens)
}

/// Pairwise disjoint minimal nonfaces, each of size at least 2.
pub fn disjoint_nonface_complex<R: Rng>(rng: &mut R, n: usize, r: usize) -> SimplicialComplex {
    let gens = antichain(rng, n, r, |gens, g| gens.iter().all(|&h| h & g == 0));
    debug_assert!(gens.iter().all(|&g| card(g) >= 2));
    from_masks(n, &gens)
}

/// Erdős–Rényi graph on `n` vertices.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let labels = vertex_labels(n);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    Graph::new(&labels, &edges).expect("simple graph")
}

//! Finite abstract simplicial complexes on labelled vertices, stored in
//! canonical form with both the facet and the minimal-nonface description.
//!
//! Vertex labels are sorted lexicographically and vertex `i` is bit `i` of a
//! [`VertexSet`]. Every conversion between the two descriptions scans all
//! `2^n` vertex subsets, so complexes are limited to [`SCAN_LIMIT`] vertices.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::{check_guard, Error, Result};

pub type VertexSet = u64;

/// Largest vertex count accepted by the exhaustive subset scans.
pub const SCAN_LIMIT: usize = 25;

pub fn bits(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn card(set: VertexSet) -> usize {
    set.count_ones() as usize
}

pub fn is_subset(a: VertexSet, b: VertexSet) -> bool {
    a & !b == 0
}

/// Lexicographic order of the ascending index lists of two sets.
pub fn lex_cmp(a: VertexSet, b: VertexSet) -> Ordering {
    bits(a).cmp(bits(b))
}

pub(crate) fn sort_lex(sets: &mut [VertexSet]) {
    sets.sort_by(|&a, &b| lex_cmp(a, b));
}

/// Generators of a squarefree monomial ideal: an antichain of nonempty
/// vertex sets, kept in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct NonfaceFamily {
    generators: Vec<VertexSet>,
}

impl NonfaceFamily {
    /// Validates the antichain condition and sorts.
    pub fn new(mut generators: Vec<VertexSet>) -> Result<Self> {
        if generators.contains(&0) {
            return Err(Error::EmptyGenerator);
        }
        sort_lex(&mut generators);
        generators.dedup();
        for (i, &a) in generators.iter().enumerate() {
            for (j, &b) in generators.iter().enumerate() {
                if i != j && is_subset(a, b) {
                    return Err(Error::NotAntichain(fmt_set(a), fmt_set(b)));
                }
            }
        }
        Ok(NonfaceFamily { generators })
    }

    pub fn generators(&self) -> &[VertexSet] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.generators.iter().copied()
    }
}

fn fmt_set(set: VertexSet) -> String {
    let items: Vec<String> = bits(set).map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<VertexSet>,
    nonfaces: NonfaceFamily,
}

fn sorted_labels<S: AsRef<str>>(labels: &[S]) -> Result<Vec<String>> {
    let mut out: Vec<String> = labels.iter().map(|s| s.as_ref().to_string()).collect();
    out.sort();
    if let Some(w) = out.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel(w[0].clone()));
    }
    check_guard("vertex count", SCAN_LIMIT as u128, out.len() as u128)?;
    Ok(out)
}

fn mask_of<S: AsRef<str>>(vertices: &[String], set: &[S]) -> Result<VertexSet> {
    set.iter().try_fold(0, |acc, l| {
        let l = l.as_ref();
        vertices
            .binary_search_by(|v| v.as_str().cmp(l))
            .map(|i| acc | (1 << i))
            .map_err(|_| Error::UnknownLabel(l.to_string()))
    })
}

/// `face[m]` for every subset `m` of an `n`-set, from a downward-closed
/// generating family (facets).
fn face_table_from_facets(n: usize, facets: &[VertexSet]) -> Vec<bool> {
    let size = 1usize << n;
    let mut face = vec![false; size];
    for &f in facets {
        face[f as usize] = true;
    }
    for m in (0..size).rev() {
        if face[m] {
            continue;
        }
        face[m] = (0..n).any(|i| m & (1 << i) == 0 && face[m | (1 << i)]);
    }
    face
}

/// `face[m]` for every subset `m`, from an upward-closed generating family
/// (minimal nonfaces).
fn face_table_from_nonfaces(n: usize, gens: &[VertexSet]) -> Vec<bool> {
    let size = 1usize << n;
    let mut nonface = vec![false; size];
    for &g in gens {
        nonface[g as usize] = true;
    }
    for m in 0..size {
        if nonface[m] {
            continue;
        }
        nonface[m] = (0..n).any(|i| m & (1 << i) != 0 && nonface[m ^ (1 << i)]);
    }
    nonface.into_iter().map(|x| !x).collect()
}

fn facets_of(n: usize, face: &[bool]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = (0..face.len())
        .filter(|&m| face[m] && (0..n).all(|i| m & (1 << i) != 0 || !face[m | (1 << i)]))
        .map(|m| m as VertexSet)
        .collect();
    sort_lex(&mut out);
    out
}

fn minimal_nonfaces_of(n: usize, face: &[bool]) -> Vec<VertexSet> {
    let mut out: Vec<VertexSet> = (0..face.len())
        .filter(|&m| !face[m] && (0..n).all(|i| m & (1 << i) == 0 || face[m ^ (1 << i)]))
        .map(|m| m as VertexSet)
        .collect();
    sort_lex(&mut out);
    out
}

impl SimplicialComplex {
    /// Builds a complex from its (not necessarily maximal) faces. Every label
    /// must occur in some listed face.
    pub fn from_facets<S: AsRef<str>, T: AsRef<str>>(
        labels: &[S],
        facets: &[Vec<T>],
    ) -> Result<Self> {
        let vertices = sorted_labels(labels)?;
        let masks = facets
            .iter()
            .map(|f| mask_of(&vertices, f))
            .collect::<Result<Vec<_>>>()?;
        Self::from_facet_masks(vertices, &masks)
    }

    pub(crate) fn from_facet_masks(vertices: Vec<String>, masks: &[VertexSet]) -> Result<Self> {
        let n = vertices.len();
        check_guard("vertex count", SCAN_LIMIT as u128, n as u128)?;
        let covered = masks.iter().fold(0, |acc, m| acc | m);
        if let Some(i) = (0..n).find(|&i| covered & (1 << i) == 0) {
            return Err(Error::IsolatedVertex(vertices[i].clone()));
        }
        let mut masks = masks.to_vec();
        masks.push(0);
        let face = face_table_from_facets(n, &masks);
        let facets = facets_of(n, &face);
        let nonfaces = NonfaceFamily {
            generators: minimal_nonfaces_of(n, &face),
        };
        Ok(SimplicialComplex {
            vertices,
            facets,
            nonfaces,
        })
    }

    /// Builds the complex whose faces are the vertex sets containing no
    /// generator. Singleton generators are rejected.
    pub fn from_minimal_nonfaces<S: AsRef<str>, T: AsRef<str>>(
        labels: &[S],
        gens: &[Vec<T>],
    ) -> Result<Self> {
        let vertices = sorted_labels(labels)?;
        let masks = gens
            .iter()
            .map(|g| mask_of(&vertices, g))
            .collect::<Result<Vec<_>>>()?;
        Self::from_nonface_masks(vertices, masks, false)
    }

    /// Like [`from_minimal_nonfaces`](Self::from_minimal_nonfaces) but
    /// allows singleton generators ("ghost" vertices that are not faces).
    /// Used for auxiliary complexes, whose ground set need not be covered.
    pub fn from_minimal_nonfaces_relaxed<S: AsRef<str>, T: AsRef<str>>(
        labels: &[S],
        gens: &[Vec<T>],
    ) -> Result<Self> {
        let vertices = sorted_labels(labels)?;
        let masks = gens
            .iter()
            .map(|g| mask_of(&vertices, g))
            .collect::<Result<Vec<_>>>()?;
        Self::from_nonface_masks(vertices, masks, true)
    }

    pub(crate) fn from_nonface_masks(
        vertices: Vec<String>,
        masks: Vec<VertexSet>,
        relaxed: bool,
    ) -> Result<Self> {
        let n = vertices.len();
        check_guard("vertex count", SCAN_LIMIT as u128, n as u128)?;
        let family = NonfaceFamily::new(masks)?;
        if !relaxed {
            if let Some(&g) = family.generators.iter().find(|&&g| card(g) == 1) {
                return Err(Error::SingletonGenerator(
                    vertices[g.trailing_zeros() as usize].clone(),
                ));
            }
        }
        let face = face_table_from_nonfaces(n, &family.generators);
        let facets = facets_of(n, &face);
        Ok(SimplicialComplex {
            vertices,
            facets,
            nonfaces: family,
        })
    }

    /// The complex `{∅}` on no vertices.
    pub fn void() -> Self {
        SimplicialComplex {
            vertices: Vec::new(),
            facets: vec![0],
            nonfaces: NonfaceFamily::default(),
        }
    }

    /// Full simplex on the given labels.
    pub fn simplex<S: AsRef<str>>(labels: &[S]) -> Result<Self> {
        let none: &[Vec<String>] = &[];
        Self::from_minimal_nonfaces(labels, none)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.vertices.is_empty() {
            0
        } else {
            VertexSet::MAX >> (64 - self.vertices.len())
        }
    }

    pub fn facet_masks(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn minimal_nonfaces(&self) -> &NonfaceFamily {
        &self.nonfaces
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.vertices
            .binary_search_by(|v| v.as_str().cmp(label))
            .ok()
    }

    pub fn mask_of<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSet> {
        mask_of(&self.vertices, labels)
    }

    pub fn labels_of(&self, set: VertexSet) -> Vec<String> {
        bits(set).map(|i| self.vertices[i].clone()).collect()
    }

    pub fn facets(&self) -> Vec<Vec<String>> {
        self.facets.iter().map(|&f| self.labels_of(f)).collect()
    }

    pub fn minimal_nonface_labels(&self) -> Vec<Vec<String>> {
        self.nonfaces.iter().map(|g| self.labels_of(g)).collect()
    }

    pub fn contains_face(&self, set: VertexSet) -> bool {
        !self.nonfaces.iter().any(|g| is_subset(g, set))
    }

    pub fn is_face<S: AsRef<str>>(&self, labels: &[S]) -> Result<bool> {
        Ok(self.contains_face(self.mask_of(labels)?))
    }

    /// Vertices whose singleton is not a face (possible only in relaxed
    /// complexes).
    pub fn ghost_vertices(&self) -> VertexSet {
        self.nonfaces
            .iter()
            .filter(|&g| card(g) == 1)
            .fold(0, |a, g| a | g)
    }

    /// All faces, the empty face included, ordered by size and then
    /// lexicographically.
    pub fn faces(&self) -> Vec<VertexSet> {
        let n = self.vertices.len();
        let mut out: Vec<VertexSet> = (0..1u64 << n).filter(|&m| self.contains_face(m)).collect();
        out.sort_by(|&a, &b| card(a).cmp(&card(b)).then(lex_cmp(a, b)));
        out
    }

    pub fn faces_of_dim(&self, k: isize) -> Vec<VertexSet> {
        self.faces()
            .into_iter()
            .filter(|&f| card(f) as isize == k + 1)
            .collect()
    }

    /// `(f_{-1}, f_0, ..., f_{d-1})`
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.dimension_plus_one() + 1];
        for m in 0..1u64 << self.vertices.len() {
            if self.contains_face(m) {
                f[card(m)] += 1;
            }
        }
        f
    }

    /// `d = dim + 1`, the size of the largest face.
    pub fn dimension_plus_one(&self) -> usize {
        self.facets.iter().map(|&f| card(f)).max().unwrap_or(0)
    }

    pub fn dimension(&self) -> isize {
        self.dimension_plus_one() as isize - 1
    }

    /// `(χ, χ̃)` with `χ = Σ_{i≥0} (-1)^i f_i` and `χ̃ = χ - 1`.
    pub fn euler_characteristics(&self) -> (i64, i64) {
        let chi: i64 = self
            .f_vector()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| if k % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum();
        (chi, chi - 1)
    }

    pub fn is_full_simplex(&self) -> bool {
        self.nonfaces.is_empty()
    }

    /// Join with a complex on disjoint labels.
    pub fn join(&self, other: &SimplicialComplex) -> Result<Self> {
        let mine: BTreeSet<&String> = self.vertices.iter().collect();
        if let Some(dup) = other.vertices.iter().find(|v| mine.contains(v)) {
            return Err(Error::LabelCollision(dup.clone()));
        }
        let mut labels = self.vertices.clone();
        labels.extend(other.vertices.iter().cloned());
        let gens: Vec<Vec<String>> = self
            .minimal_nonface_labels()
            .into_iter()
            .chain(other.minimal_nonface_labels())
            .collect();
        Self::from_minimal_nonfaces_relaxed(&labels, &gens)
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: usize) -> Result<Self> {
        let dim = self.dimension();
        if (k as isize) > dim {
            return Err(Error::Invalid(format!(
                "skeleton dimension {k} exceeds dim {dim}"
            )));
        }
        let keep: Vec<VertexSet> = self
            .faces()
            .into_iter()
            .filter(|&f| card(f) <= k + 1)
            .collect();
        Self::from_facet_masks(self.vertices.clone(), &keep)
    }

    /// Subcomplex induced on a vertex subset, relabelled onto that subset.
    pub fn induced(&self, keep: VertexSet) -> Result<Self> {
        let kept: Vec<usize> = bits(keep).collect();
        let labels: Vec<String> = kept.iter().map(|&i| self.vertices[i].clone()).collect();
        let remap = |set: VertexSet| -> VertexSet {
            kept.iter()
                .enumerate()
                .filter(|(_, &old)| set & (1 << old) != 0)
                .fold(0, |acc, (new, _)| acc | (1 << new))
        };
        let gens = self
            .nonfaces
            .iter()
            .filter(|&g| is_subset(g, keep))
            .map(remap)
            .collect();
        Self::from_nonface_masks(labels, gens, true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(labels: &[&str], facets: &[&[&str]]) -> SimplicialComplex {
        let f: Vec<Vec<&str>> = facets.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_facets(labels, &f).unwrap()
    }

    fn nf(labels: &[&str], gens: &[&[&str]]) -> SimplicialComplex {
        let g: Vec<Vec<&str>> = gens.iter().map(|f| f.to_vec()).collect();
        SimplicialComplex::from_minimal_nonfaces(labels, &g).unwrap()
    }

    #[test]
    fn triangle_boundary_and_simplex() {
        let tri = cx(&["1", "2", "3"], &[&["1", "2"], &["1", "3"], &["2", "3"]]);
        assert_eq!(tri.dimension(), 1);
        assert_eq!(tri.minimal_nonface_labels(), vec![vec!["1", "2", "3"]]);
        let full = cx(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(full.dimension(), 2);
        assert!(full.is_full_simplex());
        assert_eq!(full.f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(full.euler_characteristics().0, 1);
    }

    #[test]
    fn square_both_directions() {
        let sq = cx(
            &["a", "b", "c", "d"],
            &[&["a", "b"], &["b", "c"], &["c", "d"], &["d", "a"]],
        );
        assert_eq!(
            sq.minimal_nonface_labels(),
            vec![vec!["a", "c"], vec!["b", "d"]]
        );
        let back = nf(&["a", "b", "c", "d"], &[&["a", "c"], &["b", "d"]]);
        assert_eq!(back, sq);
        assert_eq!(
            back.facets(),
            vec![
                vec!["a", "b"],
                vec!["a", "d"],
                vec!["b", "c"],
                vec!["c", "d"]
            ]
        );
        assert!(!sq.is_face(&["a", "c"]).unwrap());
    }

    #[test]
    fn nonface_constructions() {
        let tri = nf(&["1", "2", "3"], &[&["1", "2", "3"]]);
        assert_eq!(tri.facets().len(), 3);
        let full = nf(&["1", "2"], &[]);
        assert_eq!(full.facets(), vec![vec!["1", "2"]]);
    }

    #[test]
    fn construction_errors() {
        let e = SimplicialComplex::from_facets(&["a", "a"], &[vec!["a"]]).unwrap_err();
        assert_eq!(e, Error::DuplicateLabel("a".into()));
        let e = SimplicialComplex::from_facets(&["a"], &[vec!["b"]]).unwrap_err();
        assert_eq!(e, Error::UnknownLabel("b".into()));
        let e = SimplicialComplex::from_facets(&["a", "b"], &[vec!["a"]]).unwrap_err();
        assert_eq!(e, Error::IsolatedVertex("b".into()));
        let e = SimplicialComplex::from_minimal_nonfaces(
            &["a", "b", "c"],
            &[vec!["a", "b"], vec!["a", "b", "c"]],
        )
        .unwrap_err();
        assert!(matches!(e, Error::NotAntichain(..)));
        let empty: Vec<&str> = vec![];
        let e = SimplicialComplex::from_minimal_nonfaces(&["a"], &[empty]).unwrap_err();
        assert_eq!(e, Error::EmptyGenerator);
        let e = SimplicialComplex::from_minimal_nonfaces(&["a", "b"], &[vec!["a"]]).unwrap_err();
        assert_eq!(e, Error::SingletonGenerator("a".into()));
        let many: Vec<String> = (0..26).map(|i| format!("v{i:02}")).collect();
        let e = SimplicialComplex::simplex(&many).unwrap_err();
        assert!(e.is_guard());
    }

    #[test]
    fn relaxed_allows_ghosts() {
        let t =
            SimplicialComplex::from_minimal_nonfaces_relaxed(&["a", "b"], &[vec!["a"], vec!["b"]])
                .unwrap();
        assert_eq!(t.facet_masks(), &[0]);
        assert_eq!(t.f_vector(), vec![1]);
        assert_eq!(t.dimension(), -1);
        assert_eq!(t.ghost_vertices(), 0b11);
    }

    #[test]
    fn void_complex() {
        let v = SimplicialComplex::from_facets::<&str, &str>(&[], &[]).unwrap();
        assert_eq!(v, SimplicialComplex::void());
        assert_eq!(v.f_vector(), vec![1]);
        assert_eq!(v.euler_characteristics(), (0, -1));
    }

    #[test]
    fn face_counts() {
        let two = nf(&["a", "b"], &[&["a", "b"]]);
        assert_eq!(two.f_vector(), vec![1, 2]);
        assert_eq!(two.euler_characteristics().1, 1);
        // octahedron boundary
        let oct = nf(
            &["a", "b", "c", "d", "e", "f"],
            &[&["a", "c"], &["b", "d"], &["e", "f"]],
        );
        assert_eq!(oct.f_vector(), vec![1, 6, 12, 8]);
    }

    #[test]
    fn join_and_skeleton() {
        let two = nf(&["a", "b"], &[&["a", "b"]]);
        let three = nf(&["c", "d", "e"], &[&["c", "d"], &["c", "e"], &["d", "e"]]);
        let k23 = two.join(&three).unwrap();
        assert_eq!(k23.facets().len(), 6);
        assert_eq!(k23.dimension(), 1);
        assert!(matches!(two.join(&two), Err(Error::LabelCollision(_))));
        let full = nf(&["1", "2", "3"], &[]);
        let pts = full.skeleton(0).unwrap();
        assert_eq!(pts.f_vector(), vec![1, 3]);
        assert!(full.skeleton(3).is_err());
    }
}

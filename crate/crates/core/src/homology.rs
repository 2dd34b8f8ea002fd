//! Reduced integer homology through Smith normal forms of boundary matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::complex::{bits, card, SimplicialComplex, VertexSet};
use crate::error::{check_guard, Error, Result};
use crate::poly::bigs_to_json;

pub const FACE_LIMIT: usize = 5000;
pub const SNF_LIMIT: usize = 500;

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged matrix rows".into()));
        }
        Ok(IntegerMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().flatten().map(|&x| BigInt::from(x)).collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &IntegerMatrix) -> Result<IntegerMatrix> {
        if self.cols != other.rows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = IntegerMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] -= q * row[src]
    fn sub_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            if !v.is_zero() {
                self.data[dst * self.cols + j] -= v;
            }
        }
    }

    fn sub_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            if !v.is_zero() {
                self.data[i * self.cols + dst] -= v;
            }
        }
    }
}

/// Nonzero invariant factors `d_1 | d_2 | ... | d_rank`, all positive.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<Vec<BigInt>> {
    check_guard(
        "matrix size min(rows, cols)",
        SNF_LIMIT as u128,
        m.rows.min(m.cols) as u128,
    )?;
    let mut a = m.clone();
    let mut out = Vec::new();
    let mut t = 0;
    while t < a.rows && t < a.cols {
        // smallest nonzero magnitude in the trailing block
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..a.rows {
            for j in t..a.cols {
                let v = a.get(i, j);
                if !v.is_zero() && pivot.is_none_or(|(pi, pj)| v.abs() < a.get(pi, pj).abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        loop {
            let p = a.get(t, t).clone();
            let mut dirty = false;
            for i in t + 1..a.rows {
                if !a.get(i, t).is_zero() {
                    let q = a.get(i, t).div_floor(&p);
                    a.sub_row(i, t, &q);
                    dirty |= !a.get(i, t).is_zero();
                }
            }
            for j in t + 1..a.cols {
                if !a.get(t, j).is_zero() {
                    let q = a.get(t, j).div_floor(&p);
                    a.sub_col(j, t, &q);
                    dirty |= !a.get(t, j).is_zero();
                }
            }
            if dirty {
                // move the smallest remainder in row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..a.rows {
                    if !a.get(i, t).is_zero() && a.get(i, t).abs() < a.get(best.0, best.1).abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..a.cols {
                    if !a.get(t, j).is_zero() && a.get(t, j).abs() < a.get(best.0, best.1).abs() {
                        best = (t, j);
                    }
                }
                a.swap_rows(t, best.0);
                a.swap_cols(t, best.1);
                continue;
            }
            // divisibility: fold an offending row into row t
            let offender =
                (t + 1..a.rows).find(|&i| (t + 1..a.cols).any(|j| !a.get(i, j).is_multiple_of(&p)));
            match offender {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    a.sub_row(t, i, &minus_one);
                }
                None => break,
            }
        }
        out.push(a.get(t, t).abs());
        t += 1;
    }
    Ok(out)
}

fn faces_by_size(s: &SimplicialComplex) -> Vec<Vec<VertexSet>> {
    let mut out = vec![Vec::new(); s.dimension_plus_one() + 1];
    for f in s.faces() {
        out[card(f)].push(f);
    }
    out
}

fn boundary_from(lower: &[VertexSet], upper: &[VertexSet]) -> Result<IntegerMatrix> {
    check_guard(
        "face count",
        FACE_LIMIT as u128,
        lower.len().max(upper.len()) as u128,
    )?;
    let row_of: HashMap<VertexSet, usize> =
        lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let mut m = IntegerMatrix::zeros(lower.len(), upper.len());
    for (j, &tau) in upper.iter().enumerate() {
        for (pos, v) in bits(tau).enumerate() {
            let sign = if pos % 2 == 0 { 1 } else { -1 };
            m.set(row_of[&(tau & !(1 << v))], j, BigInt::from(sign));
        }
    }
    Ok(m)
}

/// `∂_k` from k-faces to (k-1)-faces; `∂_0` lands on the empty face.
pub fn boundary_matrix(s: &SimplicialComplex, k: usize) -> Result<IntegerMatrix> {
    if k as isize > s.dimension() {
        return Err(Error::Invalid(format!(
            "degree {k} exceeds dimension {}",
            s.dimension()
        )));
    }
    let faces = faces_by_size(s);
    boundary_from(&faces[k], &faces[k + 1])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub degree: isize,
    pub rank: usize,
    #[serde(serialize_with = "ser_torsion")]
    pub torsion: Vec<BigInt>,
}

fn ser_torsion<S: serde::Serializer>(t: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    bigs_to_json(t).serialize(s)
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H̃_k` for `k = -1, ..., dim S`.
pub fn reduced_homology(s: &SimplicialComplex) -> Result<Vec<HomologyGroup>> {
    let faces = faces_by_size(s);
    let top = faces.len() - 1;
    // invariants[k] = SNF of the map from size-(k+1) faces to size-k faces
    let mut invariants: Vec<Vec<BigInt>> = vec![Vec::new()];
    for size in 1..=top {
        invariants.push(smith_normal_form(&boundary_from(
            &faces[size - 1],
            &faces[size],
        )?)?);
    }
    invariants.push(Vec::new());
    Ok((0..=top)
        .map(|size| {
            let out_rank = invariants[size].len();
            let in_snf = &invariants[size + 1];
            HomologyGroup {
                degree: size as isize - 1,
                rank: faces[size].len() - out_rank - in_snf.len(),
                torsion: in_snf.iter().filter(|d| !d.is_one()).cloned().collect(),
            }
        })
        .collect())
}

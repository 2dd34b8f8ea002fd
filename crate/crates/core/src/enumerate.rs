//! Depth-first enumeration of all nonempty subsets of a generator family,
//! carrying the running union and the connected components of the
//! intersection graph incrementally.
//!
//! Each DFS node adds one generator to its parent's subset. The union is a
//! single OR; the component list of the child is the parent's list with every
//! component meeting the new generator merged into it, so a node costs
//! `O(c)` with `c` the parent's component count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::complex::VertexSet;
use crate::error::{check_guard, Result};

/// Largest generator count walked exhaustively.
pub const WALK_LIMIT: usize = 25;

/// One visited subset `I`.
#[derive(Debug, Clone, Copy)]
pub struct SubsetNode<'a> {
    /// `|I|`
    pub size: usize,
    /// Union of the generators in `I`.
    pub union: VertexSet,
    /// Vertex supports of the connected components of the intersection
    /// graph on `I`; empty when component tracking is off.
    pub components: &'a [VertexSet],
    /// Indices in `I`, in increasing order.
    pub members: &'a [usize],
}

impl SubsetNode<'_> {
    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    pub fn sign(&self) -> i64 {
        if self.size.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

struct Walker<'g, F> {
    gens: &'g [VertexSet],
    track: bool,
    levels: Vec<Vec<VertexSet>>,
    members: Vec<usize>,
    visit: F,
}

impl<F: FnMut(&SubsetNode<'_>)> Walker<'_, F> {
    fn descend(&mut self, from: usize, depth: usize, union: VertexSet) {
        for i in from..self.gens.len() {
            self.push(i, depth, union);
        }
    }

    fn push(&mut self, i: usize, depth: usize, union: VertexSet) {
        let g = self.gens[i];
        if self.track {
            let (head, tail) = self.levels.split_at_mut(depth + 1);
            let parent = &head[depth];
            let child = &mut tail[0];
            child.clear();
            let mut merged = g;
            for &c in parent {
                if c & g != 0 {
                    merged |= c;
                } else {
                    child.push(c);
                }
            }
            child.push(merged);
        }
        self.members.push(i);
        let union = union | g;
        let node = SubsetNode {
            size: depth + 1,
            union,
            components: &self.levels[depth + 1],
            members: &self.members,
        };
        (self.visit)(&node);
        self.descend(i + 1, depth + 1, union);
        self.members.pop();
    }
}

/// Visits every nonempty subset of `gens` in DFS order (lexicographic in the
/// index lists). `track_components` enables the component lists.
pub fn walk_subsets<F>(gens: &[VertexSet], track_components: bool, visit: F) -> Result<()>
where
    F: FnMut(&SubsetNode<'_>),
{
    check_guard("generator count", WALK_LIMIT as u128, gens.len() as u128)?;
    let mut walker = Walker {
        gens,
        track: track_components,
        levels: vec![Vec::with_capacity(gens.len()); gens.len() + 1],
        members: Vec::with_capacity(gens.len()),
        visit,
    };
    walker.descend(0, 0, 0);
    Ok(())
}

/// Sums `sign` into slot `index` for every nonempty subset, where
/// `(index, sign) = term(node)`. The top-level DFS branches are spread over
/// worker threads, each with a private accumulator; integer addition makes
/// the merged result independent of scheduling.
pub fn accumulate_terms<F>(
    gens: &[VertexSet],
    track_components: bool,
    slots: usize,
    term: F,
) -> Result<Vec<i64>>
where
    F: Fn(&SubsetNode<'_>) -> (usize, i64) + Sync,
{
    check_guard("generator count", WALK_LIMIT as u128, gens.len() as u128)?;
    let r = gens.len();
    let workers = if r < 14 {
        1
    } else {
        std::thread::available_parallelism()
            .map_or(1, |n| n.get())
            .min(r)
    };
    let next = AtomicUsize::new(0);
    let total = Mutex::new(vec![0i64; slots]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| {
                let mut acc = vec![0i64; slots];
                let mut walker = Walker {
                    gens,
                    track: track_components,
                    levels: vec![Vec::with_capacity(r); r + 1],
                    members: Vec::with_capacity(r),
                    visit: |node: &SubsetNode<'_>| {
                        let (idx, s) = term(node);
                        acc[idx] += s;
                    },
                };
                loop {
                    let i = next.fetch_add(1, Ordering::Relaxed);
                    if i >= r {
                        break;
                    }
                    walker.push(i, 0, 0);
                }
                drop(walker);
                let mut total = total.lock().expect("accumulator lock");
                for (t, a) in total.iter_mut().zip(acc) {
                    *t += a;
                }
            });
        }
    });
    Ok(total.into_inner().expect("accumulator lock"))
}

/// Connected components of the intersection graph of `sets` (two sets are
/// adjacent when they share a vertex), computed directly by union-find.
pub fn component_count(sets: &[VertexSet]) -> usize {
    let mut parent: Vec<usize> = (0..sets.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i] & sets[j] != 0 {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    (0..sets.len())
        .filter(|&i| find(&mut parent, i) == i)
        .count()
}

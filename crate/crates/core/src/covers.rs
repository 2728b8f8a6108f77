//! Exhaustive census of maximal independent sets and minimal vertex covers.
//!
//! A set is a minimal vertex cover exactly when its complement is a maximal
//! independent set, so covers are produced by complementing the maximal
//! independent sets. This census is the ground truth every faster check is
//! compared against.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};
use crate::LimitError;

/// Every maximal independent set and minimal cover of a graph, with the
/// derived size statistics.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverCensus {
    pub maximal_independent_sets: Vec<VertexSet>,
    /// `minimal_vertex_covers[k]` is the complement of
    /// `maximal_independent_sets[k]`.
    pub minimal_vertex_covers: Vec<VertexSet>,
    /// Cover size to number of minimal covers of that size.
    pub size_histogram: BTreeMap<usize, usize>,
    pub is_unmixed: bool,
    pub covering_number: usize,
    pub independence_number: usize,
}

impl CoverCensus {
    fn from_mis(g: &Graph, maximal_independent_sets: Vec<VertexSet>) -> Self {
        let minimal_vertex_covers: Vec<VertexSet> = maximal_independent_sets
            .iter()
            .map(|s| g.complement_of(s))
            .collect();
        let mut size_histogram = BTreeMap::new();
        for c in &minimal_vertex_covers {
            *size_histogram.entry(c.len()).or_insert(0) += 1;
        }
        let covering_number = size_histogram.keys().next().copied().unwrap_or(0);
        let independence_number = maximal_independent_sets
            .iter()
            .map(VertexSet::len)
            .max()
            .unwrap_or(0);
        CoverCensus {
            is_unmixed: size_histogram.len() == 1,
            maximal_independent_sets,
            minimal_vertex_covers,
            size_histogram,
            covering_number,
            independence_number,
        }
    }
}

struct MisEnumerator<'a> {
    adj: &'a [u64],
    cap: usize,
    found: Vec<u64>,
}

impl MisEnumerator<'_> {
    fn closed(&self, v: usize) -> u64 {
        self.adj[v] | 1 << v
    }

    /// `candidates`: vertices still addable to `current`; `excluded`:
    /// vertices left out so far that no member of `current` dominates yet.
    /// `current` is maximal once both are empty.
    fn branch(
        &mut self,
        current: u64,
        mut candidates: u64,
        mut excluded: u64,
    ) -> Result<(), LimitError> {
        if candidates == 0 {
            if excluded == 0 {
                if self.found.len() == self.cap {
                    return Err(LimitError::CapExceeded { cap: self.cap });
                }
                self.found.push(current);
            }
            return Ok(());
        }
        // Any maximal extension contains the pivot or one of its neighbors,
        // so branching over candidates in N[pivot] is enough. Pick the
        // pivot with the fewest such candidates.
        let mut pivot_branch = candidates;
        let mut pool = candidates | excluded;
        while pool != 0 {
            let u = pool.trailing_zeros() as usize;
            pool &= pool - 1;
            let b = candidates & self.closed(u);
            if b.count_ones() < pivot_branch.count_ones() {
                pivot_branch = b;
            }
        }
        while pivot_branch != 0 {
            let v = pivot_branch.trailing_zeros() as usize;
            pivot_branch &= pivot_branch - 1;
            let keep = !self.closed(v);
            self.branch(current | 1 << v, candidates & keep, excluded & keep)?;
            candidates &= !(1u64 << v);
            excluded |= 1 << v;
        }
        Ok(())
    }
}

/// All maximal independent sets, in lexicographic order of their sorted
/// members. Fails if the graph has more than 64 vertices or more than `cap`
/// sets exist.
pub fn enumerate_mis(g: &Graph, cap: usize) -> Result<Vec<VertexSet>, LimitError> {
    let vertex_count = g.vertex_count();
    let adj = g
        .neighbor_masks()
        .ok_or(LimitError::TooLarge { vertex_count })?;
    let all = if vertex_count == 64 {
        u64::MAX
    } else {
        (1u64 << vertex_count) - 1
    };
    let mut e = MisEnumerator {
        adj: &adj,
        cap,
        found: Vec::new(),
    };
    e.branch(0, all, 0)?;
    let mut sets: Vec<VertexSet> = e.found.into_iter().map(VertexSet::from_mask).collect();
    sets.sort();
    debug_assert!(sets.iter().all(|s| is_maximal_independent(g, s)));
    Ok(sets)
}

/// Complements of [`enumerate_mis`], in the same order.
pub fn enumerate_minimal_covers(g: &Graph, cap: usize) -> Result<Vec<VertexSet>, LimitError> {
    Ok(enumerate_mis(g, cap)?
        .iter()
        .map(|s| g.complement_of(s))
        .collect())
}

/// Full census; `is_unmixed` is true iff every minimal cover has the same
/// size.
pub fn is_unmixed_bruteforce(g: &Graph, cap: usize) -> Result<CoverCensus, LimitError> {
    Ok(CoverCensus::from_mis(g, enumerate_mis(g, cap)?))
}

/// Independent, and every vertex outside has a neighbor inside.
pub fn is_maximal_independent(g: &Graph, set: &VertexSet) -> bool {
    g.is_independent(set)
        && g.vertices()
            .filter(|&v| !set.contains(v))
            .all(|v| g.neighbors(v).iter().any(|&u| set.contains(u)))
}

/// Inclusion-minimal vertex cover.
pub fn is_minimal_cover(g: &Graph, cover: &VertexSet) -> bool {
    g.is_vertex_cover(cover)
        && cover.iter().all(|v| {
            let smaller: VertexSet = cover.iter().filter(|&u| u != v).collect();
            !g.is_vertex_cover(&smaller)
        })
}

/// Reference enumeration over all `2^n` subsets, for graphs with at most
/// 20 vertices. Same output order as [`enumerate_mis`].
pub fn enumerate_mis_naive(g: &Graph) -> Vec<VertexSet> {
    let n = g.vertex_count();
    assert!(n <= 20, "naive enumeration is limited to 20 vertices");
    let mut sets: Vec<VertexSet> = (0u64..1 << n)
        .map(VertexSet::from_mask)
        .filter(|s| is_maximal_independent(g, s))
        .collect();
    sets.sort();
    sets
}

//! r-partitions, clique-row structures and their search.
//!
//! An [`RPartition`] splits the vertex set into `r` nonempty parts; it is
//! proper when no edge lies inside a part. A [`StarStructure`] is an
//! `n x r` matrix of distinct vertices whose columns form a proper
//! partition and whose rows are `r`-cliques.

use serde::Serialize;

use crate::graph::{Graph, Vertex, VertexSet};
use crate::LimitError;

/// Unordered partition of the vertex set. Parts are kept sorted by their
/// smallest member, so derived equality is equality of set families.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct RPartition {
    parts: Vec<VertexSet>,
}

impl RPartition {
    /// Wraps `parts` without validating them.
    pub fn new(parts: Vec<VertexSet>) -> Self {
        let mut parts = parts;
        // disjoint sorted sets: lexicographic order is order by smallest member
        parts.sort();
        RPartition { parts }
    }

    /// Partition from a color per vertex (colors `0..r`, all used).
    pub fn from_coloring(colors: &[usize], r: usize) -> Self {
        let mut parts = vec![VertexSet::new(); r];
        for (v, &c) in colors.iter().enumerate() {
            parts[c].insert(v);
        }
        RPartition::new(parts)
    }

    pub fn r(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: Vertex) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }

    pub fn labeled(&self, g: &Graph) -> Vec<Vec<String>> {
        self.parts.iter().map(|p| p.labeled(g)).collect()
    }
}

/// Structural defects of a partition (as opposed to internal edges).
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("a partition needs at least 2 parts, got {0}")]
    TooFewParts(usize),
    #[error("part {0} is empty")]
    EmptyPart(usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(Vertex),
    #[error("vertex {0} lies in more than one part")]
    Overlap(Vertex),
    #[error("vertex {0} is in no part")]
    Missing(Vertex),
    #[error(transparent)]
    Limit(#[from] LimitError),
}

/// Outcome of a properness check on a well-formed partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Properness {
    Proper,
    InternalEdge { part: usize, edge: (Vertex, Vertex) },
}

impl Properness {
    pub fn is_proper(&self) -> bool {
        matches!(self, Properness::Proper)
    }
}

fn check_cover_exactly(g: &Graph, parts: &[VertexSet]) -> Result<(), PartitionError> {
    let mut owner = vec![false; g.vertex_count()];
    for (k, part) in parts.iter().enumerate() {
        if part.is_empty() {
            return Err(PartitionError::EmptyPart(k));
        }
        for v in part.iter() {
            if v >= g.vertex_count() {
                return Err(PartitionError::OutOfRange(v));
            }
            if owner[v] {
                return Err(PartitionError::Overlap(v));
            }
            owner[v] = true;
        }
    }
    match owner.iter().position(|&seen| !seen) {
        Some(v) => Err(PartitionError::Missing(v)),
        None => Ok(()),
    }
}

fn first_internal_edge(g: &Graph, parts: &[VertexSet]) -> Properness {
    for (k, part) in parts.iter().enumerate() {
        for u in part.iter() {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| v > u && part.contains(v)) {
                return Properness::InternalEdge {
                    part: k,
                    edge: (u, v),
                };
            }
        }
    }
    Properness::Proper
}

/// Checks that `p` is a partition of `V(g)` into at least two nonempty
/// parts, then reports the first edge inside a part, if any.
pub fn validate_r_partition(g: &Graph, p: &RPartition) -> Result<Properness, PartitionError> {
    if p.r() < 2 {
        return Err(PartitionError::TooFewParts(p.r()));
    }
    check_cover_exactly(g, p.parts())?;
    Ok(first_internal_edge(g, p.parts()))
}

/// Clique-row structure: `rows[j][i]` is the row-`j` vertex of column `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct StarStructure {
    rows: Vec<Vec<Vertex>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StarShapeError {
    #[error("a structure needs at least one row")]
    NoRows,
    #[error("a structure needs at least one column")]
    NoColumns,
    #[error("row {row} has {len} cells, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
}

impl StarStructure {
    /// Rectangular matrix of cells, rows first. Vertex-level checks are
    /// left to [`validate_star`].
    pub fn new(rows: Vec<Vec<Vertex>>) -> Result<Self, StarShapeError> {
        let expected = rows.first().ok_or(StarShapeError::NoRows)?.len();
        if expected == 0 {
            return Err(StarShapeError::NoColumns);
        }
        if let Some((row, cells)) = rows.iter().enumerate().find(|(_, c)| c.len() != expected) {
            return Err(StarShapeError::Ragged {
                row,
                len: cells.len(),
                expected,
            });
        }
        Ok(StarStructure { rows })
    }

    /// Number of rows.
    pub fn n(&self) -> usize {
        self.rows.len()
    }

    /// Number of columns.
    pub fn r(&self) -> usize {
        self.rows[0].len()
    }

    pub fn cell(&self, row: usize, column: usize) -> Vertex {
        self.rows[row][column]
    }

    pub fn row(&self, row: usize) -> &[Vertex] {
        &self.rows[row]
    }

    pub fn rows(&self) -> &[Vec<Vertex>] {
        &self.rows
    }

    pub fn column(&self, column: usize) -> VertexSet {
        self.rows.iter().map(|row| row[column]).collect()
    }

    pub fn columns(&self) -> Vec<VertexSet> {
        (0..self.r()).map(|i| self.column(i)).collect()
    }

    /// Columns as an unordered partition.
    pub fn column_partition(&self) -> RPartition {
        RPartition::new(self.columns())
    }

    /// `(row, column)` of every vertex, indexed by vertex. Assumes the
    /// structure is valid for a graph with `vertex_count` vertices.
    pub fn positions(&self, vertex_count: usize) -> Vec<(usize, usize)> {
        let mut pos = vec![(usize::MAX, usize::MAX); vertex_count];
        for (j, row) in self.rows.iter().enumerate() {
            for (i, &v) in row.iter().enumerate() {
                pos[v] = (j, i);
            }
        }
        pos
    }

    pub fn labeled(&self, g: &Graph) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|row| row.iter().map(|&v| g.label(v).to_string()).collect())
            .collect()
    }
}

/// First reason a structure fails to certify the clique-row condition.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum StarViolation {
    #[error("{vertex_count} vertices cannot be split into {r} equal columns")]
    NotDivisible { vertex_count: usize, r: usize },
    #[error("structure has {cells} cells but the graph has {vertex_count} vertices")]
    Coverage { cells: usize, vertex_count: usize },
    #[error("cell vertex {vertex} is out of range")]
    OutOfRange { vertex: Vertex },
    #[error("vertex {vertex} appears in more than one cell")]
    DuplicateCell { vertex: Vertex },
    #[error("column {column} contains the edge {{{}, {}}}", edge.0, edge.1)]
    PartInternalEdge {
        column: usize,
        edge: (Vertex, Vertex),
    },
    #[error("row {row} is not a clique: {{{}, {}}} is not an edge", pair.0, pair.1)]
    MissingRowEdge { row: usize, pair: (Vertex, Vertex) },
}

/// Checks every invariant of a clique-row structure against `g`.
pub fn validate_star(g: &Graph, s: &StarStructure) -> Result<(), StarViolation> {
    let vertex_count = g.vertex_count();
    if !vertex_count.is_multiple_of(s.r()) {
        return Err(StarViolation::NotDivisible {
            vertex_count,
            r: s.r(),
        });
    }
    if s.n() * s.r() != vertex_count {
        return Err(StarViolation::Coverage {
            cells: s.n() * s.r(),
            vertex_count,
        });
    }
    let mut seen = vec![false; vertex_count];
    for &v in s.rows().iter().flatten() {
        if v >= vertex_count {
            return Err(StarViolation::OutOfRange { vertex: v });
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(StarViolation::DuplicateCell { vertex: v });
        }
    }
    if let Properness::InternalEdge { part, edge } = first_internal_edge(g, &s.columns()) {
        return Err(StarViolation::PartInternalEdge { column: part, edge });
    }
    for (j, row) in s.rows().iter().enumerate() {
        for (a, &u) in row.iter().enumerate() {
            if let Some(&v) = row[a + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                return Err(StarViolation::MissingRowEdge {
                    row: j,
                    pair: (u, v),
                });
            }
        }
    }
    Ok(())
}

/// Why no clique-row structure was returned.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "reason")]
pub enum StarAbsence {
    /// `|V|` is not a multiple of `r`.
    NotDivisible { vertex_count: usize, r: usize },
    /// The empty graph has no nonempty columns.
    NoVertices,
    /// The search space was exhausted.
    Exhausted,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StarSearch {
    Found(StarStructure),
    Absent(StarAbsence),
}

impl StarSearch {
    pub fn found(self) -> Option<StarStructure> {
        match self {
            StarSearch::Found(s) => Some(s),
            StarSearch::Absent(_) => None,
        }
    }
}

struct StarSearcher<'a> {
    adj: &'a [u64],
    r: usize,
    budget: u64,
    nodes: u64,
    rows: Vec<Vec<Vertex>>,
}

impl StarSearcher<'_> {
    fn tick(&mut self) -> Result<(), LimitError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(LimitError::BudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }

    /// Covers `unassigned` with disjoint r-cliques, pivoting on the lowest
    /// unassigned vertex; on each complete cover tries to orient the rows.
    fn cover_rows(&mut self, unassigned: u64) -> Result<Option<Vec<Vec<Vertex>>>, LimitError> {
        self.tick()?;
        if unassigned == 0 {
            return self.orient_rows();
        }
        let pivot = unassigned.trailing_zeros() as usize;
        let mut clique = vec![pivot];
        let candidates = unassigned & self.adj[pivot];
        self.extend_clique(unassigned, &mut clique, candidates)
    }

    fn extend_clique(
        &mut self,
        unassigned: u64,
        clique: &mut Vec<Vertex>,
        candidates: u64,
    ) -> Result<Option<Vec<Vec<Vertex>>>, LimitError> {
        if clique.len() == self.r {
            let used = clique.iter().fold(0u64, |m, &v| m | 1 << v);
            self.rows.push(clique.clone());
            let found = self.cover_rows(unassigned & !used)?;
            self.rows.pop();
            return Ok(found);
        }
        let needed = (self.r - clique.len()) as u32;
        let mut rest = candidates;
        while rest != 0 {
            if rest.count_ones() < needed {
                break;
            }
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            self.tick()?;
            clique.push(v);
            let found = self.extend_clique(unassigned, clique, rest & self.adj[v])?;
            clique.pop();
            if found.is_some() {
                return Ok(found);
            }
        }
        Ok(None)
    }

    /// Assigns each row's vertices to distinct columns keeping columns
    /// independent. Row 0 fixes the column order.
    fn orient_rows(&mut self) -> Result<Option<Vec<Vec<Vertex>>>, LimitError> {
        let mut oriented = vec![self.rows[0].clone()];
        let mut column_masks: Vec<u64> = self.rows[0].iter().map(|&v| 1u64 << v).collect();
        if self.orient_from(1, &mut oriented, &mut column_masks)? {
            Ok(Some(oriented))
        } else {
            Ok(None)
        }
    }

    fn orient_from(
        &mut self,
        j: usize,
        oriented: &mut Vec<Vec<Vertex>>,
        column_masks: &mut [u64],
    ) -> Result<bool, LimitError> {
        if j == self.rows.len() {
            return Ok(true);
        }
        let row = self.rows[j].clone();
        let mut slots = vec![usize::MAX; self.r];
        self.place(j, &row, 0, &mut slots, oriented, column_masks)
    }

    /// Places `row[k..]` into free columns; `slots[i]` is the vertex put in
    /// column `i` so far.
    fn place(
        &mut self,
        j: usize,
        row: &[Vertex],
        k: usize,
        slots: &mut Vec<Vertex>,
        oriented: &mut Vec<Vec<Vertex>>,
        column_masks: &mut [u64],
    ) -> Result<bool, LimitError> {
        if k == row.len() {
            oriented.push(slots.clone());
            if self.orient_from(j + 1, oriented, column_masks)? {
                return Ok(true);
            }
            oriented.pop();
            return Ok(false);
        }
        let v = row[k];
        for column in 0..self.r {
            if slots[column] != usize::MAX || column_masks[column] & self.adj[v] != 0 {
                continue;
            }
            self.tick()?;
            slots[column] = v;
            column_masks[column] |= 1 << v;
            let done = self.place(j, row, k + 1, slots, oriented, column_masks)?;
            column_masks[column] &= !(1u64 << v);
            slots[column] = usize::MAX;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}

/// Exact backtracking search for a clique-row structure with `r` columns.
///
/// Rows are found first (a cover of `V` by disjoint `r`-cliques, pivoting on
/// the lowest uncovered vertex and trying cliques through it in
/// lexicographic order), then the row members are assigned to columns so
/// that every column is independent. Both phases backtrack; the combined
/// number of search nodes is bounded by `budget`.
pub fn find_star_structure(g: &Graph, r: usize, budget: u64) -> Result<StarSearch, PartitionError> {
    if r < 2 {
        return Err(PartitionError::TooFewParts(r));
    }
    let vertex_count = g.vertex_count();
    if !vertex_count.is_multiple_of(r) {
        return Ok(StarSearch::Absent(StarAbsence::NotDivisible {
            vertex_count,
            r,
        }));
    }
    if vertex_count == 0 {
        return Ok(StarSearch::Absent(StarAbsence::NoVertices));
    }
    let adj = g
        .neighbor_masks()
        .ok_or(LimitError::TooLarge { vertex_count })?;
    let all = if vertex_count == 64 {
        u64::MAX
    } else {
        (1u64 << vertex_count) - 1
    };
    let mut searcher = StarSearcher {
        adj: &adj,
        r,
        budget,
        nodes: 0,
        rows: Vec::new(),
    };
    Ok(match searcher.cover_rows(all)? {
        Some(rows) => StarSearch::Found(StarStructure::new(rows).expect("rectangular rows")),
        None => StarSearch::Absent(StarAbsence::Exhausted),
    })
}

/// BFS 2-coloring turned into a partition. Each component's lowest vertex
/// goes to the part of vertex 0; if that leaves the second part empty (an
/// edgeless graph), the highest isolated vertex is moved over. `None` when
/// the graph has an odd cycle or fewer than two vertices.
pub fn bipartition(g: &Graph) -> Option<RPartition> {
    if g.vertex_count() < 2 {
        return None;
    }
    let mut colors: Vec<usize> = g.two_coloring()?.into_iter().map(usize::from).collect();
    if colors.iter().all(|&c| c == 0) {
        let last = g.vertex_count() - 1;
        colors[last] = 1;
    }
    Some(RPartition::from_coloring(&colors, 2))
}

/// All proper partitions of `V(g)` into exactly `r` nonempty independent
/// parts, each listed once as an unordered family.
///
/// Vertices are assigned in index order to an existing part or to the next
/// unopened one (restricted growth), so every unordered partition is
/// produced exactly once; the output is sorted.
pub fn enumerate_r_partitions(
    g: &Graph,
    r: usize,
    cap: usize,
) -> Result<Vec<RPartition>, PartitionError> {
    if r < 2 {
        return Err(PartitionError::TooFewParts(r));
    }
    let vertex_count = g.vertex_count();
    let adj = g
        .neighbor_masks()
        .ok_or(LimitError::TooLarge { vertex_count })?;
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(r);
    let mut colors = vec![0usize; vertex_count];
    grow_partition(&adj, r, 0, &mut parts, &mut colors, cap, &mut out)?;
    out.sort();
    Ok(out)
}

fn grow_partition(
    adj: &[u64],
    r: usize,
    v: Vertex,
    parts: &mut Vec<u64>,
    colors: &mut [usize],
    cap: usize,
    out: &mut Vec<RPartition>,
) -> Result<(), LimitError> {
    let n = adj.len();
    if r - parts.len() > n - v {
        return Ok(());
    }
    if v == n {
        if out.len() == cap {
            return Err(LimitError::CapExceeded { cap });
        }
        out.push(RPartition::from_coloring(colors, r));
        return Ok(());
    }
    for c in 0..parts.len() {
        if parts[c] & adj[v] == 0 {
            parts[c] |= 1 << v;
            colors[v] = c;
            grow_partition(adj, r, v + 1, parts, colors, cap, out)?;
            parts[c] &= !(1u64 << v);
        }
    }
    if parts.len() < r {
        parts.push(1 << v);
        colors[v] = parts.len() - 1;
        grow_partition(adj, r, v + 1, parts, colors, cap, out)?;
        parts.pop();
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete_graph, fixture, FixtureName};
    use crate::DEFAULT_NODE_BUDGET;

    fn set<const N: usize>(v: [Vertex; N]) -> VertexSet {
        VertexSet::from(v)
    }

    #[test]
    fn five_cover_fixture_partition_is_proper() {
        let f = fixture(FixtureName::Example33);
        let p = f.partition.expect("fixture declares parts");
        assert_eq!(validate_r_partition(&f.graph, &p), Ok(Properness::Proper));
    }

    #[test]
    fn k3_improper_partition_reports_edge() {
        let (g, _) = complete_graph(3);
        let p = RPartition::new(vec![set([0, 1]), set([2])]);
        assert_eq!(
            validate_r_partition(&g, &p),
            Ok(Properness::InternalEdge {
                part: 0,
                edge: (0, 1)
            })
        );
    }

    #[test]
    fn structural_errors_are_distinct() {
        let (g, _) = complete_graph(3);
        let overlap = RPartition::new(vec![set([0, 1]), set([1, 2])]);
        assert_eq!(
            validate_r_partition(&g, &overlap),
            Err(PartitionError::Overlap(1))
        );
        let missing = RPartition::new(vec![set([0]), set([1])]);
        assert_eq!(
            validate_r_partition(&g, &missing),
            Err(PartitionError::Missing(2))
        );
        let single = RPartition::new(vec![set([0, 1, 2])]);
        assert_eq!(
            validate_r_partition(&g, &single),
            Err(PartitionError::TooFewParts(1))
        );
    }

    #[test]
    fn printed_tripartition_is_proper() {
        let g = fixture(FixtureName::Section2Tripartite).graph;
        let p = RPartition::new(vec![set([0, 1, 2]), set([3, 4]), set([5])]);
        assert!(validate_r_partition(&g, &p).unwrap().is_proper());
    }

    #[test]
    fn star_violations() {
        let g = fixture(FixtureName::Example33).graph;
        let s = StarStructure::new(vec![vec![0, 1, 2, 3]]).unwrap();
        assert_eq!(
            validate_star(&g, &s),
            Err(StarViolation::NotDivisible {
                vertex_count: 6,
                r: 4
            })
        );

        let (k4, _) = complete_graph(4);
        let dup = StarStructure::new(vec![vec![0, 1], vec![1, 3]]).unwrap();
        assert_eq!(
            validate_star(&k4, &dup),
            Err(StarViolation::DuplicateCell { vertex: 1 })
        );
        let bad_column = StarStructure::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            validate_star(&k4, &bad_column),
            Err(StarViolation::PartInternalEdge {
                column: 0,
                edge: (0, 2)
            })
        );

        let crossed = Graph::from_edges(4, [(0, 3), (1, 2)]).unwrap();
        let s = StarStructure::new(vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(
            validate_star(&crossed, &s),
            Err(StarViolation::MissingRowEdge {
                row: 0,
                pair: (0, 1)
            })
        );
    }

    #[test]
    fn ragged_rows_rejected() {
        assert_eq!(
            StarStructure::new(vec![vec![0, 1], vec![2]]),
            Err(StarShapeError::Ragged {
                row: 1,
                len: 1,
                expected: 2
            })
        );
        assert_eq!(StarStructure::new(vec![]), Err(StarShapeError::NoRows));
    }

    #[test]
    fn k4_star_is_forced() {
        let (g, s) = complete_graph(4);
        assert_eq!(validate_star(&g, &s), Ok(()));
        let found = find_star_structure(&g, 4, DEFAULT_NODE_BUDGET).unwrap();
        assert_eq!(found, StarSearch::Found(s));
    }

    #[test]
    fn six_vertices_have_no_four_column_structure() {
        let g = fixture(FixtureName::Example33).graph;
        assert_eq!(
            find_star_structure(&g, 4, DEFAULT_NODE_BUDGET).unwrap(),
            StarSearch::Absent(StarAbsence::NotDivisible {
                vertex_count: 6,
                r: 4
            })
        );
    }

    #[test]
    fn double_clique_rows_are_the_two_k4s() {
        let g = fixture(FixtureName::Example31Right).graph;
        let s = find_star_structure(&g, 4, DEFAULT_NODE_BUDGET)
            .unwrap()
            .found()
            .unwrap();
        assert_eq!(validate_star(&g, &s), Ok(()));
        let rows: Vec<VertexSet> = s
            .rows()
            .iter()
            .map(|r| r.iter().copied().collect())
            .collect();
        assert_eq!(rows, vec![set([0, 1, 2, 3]), set([4, 5, 6, 7])]);
    }

    #[test]
    fn search_budget_is_enforced() {
        let (g, _) = complete_graph(4);
        assert_eq!(
            find_star_structure(&g, 4, 2),
            Err(PartitionError::Limit(LimitError::BudgetExceeded {
                budget: 2
            }))
        );
    }

    #[test]
    fn bipartitions() {
        let p3 = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            bipartition(&p3),
            Some(RPartition::new(vec![set([0, 2]), set([1])]))
        );
        assert_eq!(bipartition(&complete_graph(3).0), None);
        let c6 = Graph::from_edges(6, (0..6).map(|v| (v, (v + 1) % 6))).unwrap();
        assert_eq!(
            bipartition(&c6),
            Some(RPartition::new(vec![set([0, 2, 4]), set([1, 3, 5])]))
        );
        assert_eq!(bipartition(&Graph::empty(1)), None);
        assert_eq!(
            bipartition(&Graph::empty(2)),
            Some(RPartition::new(vec![set([0]), set([1])]))
        );
    }

    #[test]
    fn r_partition_enumeration() {
        let p4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(
            enumerate_r_partitions(&p4, 2, 100).unwrap(),
            vec![bipartition(&p4).unwrap()]
        );
        assert!(enumerate_r_partitions(&complete_graph(3).0, 2, 100)
            .unwrap()
            .is_empty());

        let g = fixture(FixtureName::Section2Tripartite).graph;
        let all = enumerate_r_partitions(&g, 3, 1000).unwrap();
        assert!(all.contains(&RPartition::new(vec![
            set([0, 1, 2]),
            set([3, 4]),
            set([5])
        ])));
        assert!(all.contains(&RPartition::new(vec![
            set([0, 1]),
            set([3, 4]),
            set([2, 5])
        ])));
        assert!(all
            .iter()
            .all(|p| validate_r_partition(&g, p).unwrap().is_proper()));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn partition_cap() {
        let g = Graph::empty(6);
        assert_eq!(
            enumerate_r_partitions(&g, 2, 3),
            Err(PartitionError::Limit(LimitError::CapExceeded { cap: 3 }))
        );
        // Stirling S(6,2) = 31
        assert_eq!(enumerate_r_partitions(&g, 2, 100).unwrap().len(), 31);
    }
}

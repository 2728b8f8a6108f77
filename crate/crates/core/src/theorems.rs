//! Unmixedness criteria.
//!
//! For a graph with a clique-row structure (`n` rows that are `r`-cliques,
//! `r` independent columns) the graph is unmixed iff no row `q` admits a
//! choice of one neighbor `w_i` for each row vertex `x_qi` such that the set
//! `{w_1, ..., w_r}` is independent. [`theorem23_condition`] decides this by
//! a depth-first search over such choices. The remaining checkers implement
//! the classical criteria for bipartite graphs (perfect matchings with
//! complete bipartite neighborhoods; ordered matchings with a transitivity
//! rule) and the tripartite two-condition criterion, all of which are used
//! to cross-validate the general procedure.

use serde::Serialize;

use crate::covers::is_unmixed_bruteforce;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::matching::{enumerate_perfect_matchings, MatchingCertificate};
use crate::partition::{validate_star, StarStructure, StarViolation};
use crate::LimitError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("invalid clique-row structure: {0}")]
    InvalidStructure(#[from] StarViolation),
    #[error("the graph is not unmixed")]
    NotUnmixed,
    #[error("structure has {got} columns, expected {expected}")]
    WrongColumnCount { expected: usize, got: usize },
    #[error(transparent)]
    Limit(#[from] LimitError),
}

/// A failed hypothesis of one of the bipartite criteria.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HypothesisError {
    #[error("not connected")]
    NotConnected,
    #[error("not bipartite")]
    NotBipartite,
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("needs at least 2 vertices")]
    TooSmall,
    #[error(transparent)]
    Limit(#[from] LimitError),
}

/// Independent neighbor choice certifying that a graph is not unmixed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem23Witness {
    /// 1-based row index `q`.
    pub row: usize,
    /// Distinct members of the chosen tuple; an independent set.
    pub tuple: VertexSet,
    /// `(x_qi, w_i)` for `i = 1..r`: each row vertex with its chosen
    /// neighbor.
    pub assignment: Vec<(Vertex, Vertex)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem23Verdict {
    pub holds: bool,
    pub witness: Option<Theorem23Witness>,
}

/// Searches row `q` for an independent neighbor tuple. Choices are made
/// for `i` ascending and neighbors ascending; a prefix whose distinct
/// members already span an edge is abandoned.
fn independent_tuple(g: &Graph, row: &[Vertex]) -> Option<Vec<Vertex>> {
    fn dfs(
        g: &Graph,
        row: &[Vertex],
        chosen: &mut Vec<Vertex>,
        distinct: &mut Vec<Vertex>,
    ) -> bool {
        let i = chosen.len();
        if i == row.len() {
            return true;
        }
        for &w in g.neighbors(row[i]) {
            let fresh = !distinct.contains(&w);
            if fresh && distinct.iter().any(|&d| g.has_edge(d, w)) {
                continue;
            }
            chosen.push(w);
            if fresh {
                distinct.push(w);
            }
            if dfs(g, row, chosen, distinct) {
                return true;
            }
            if fresh {
                distinct.pop();
            }
            chosen.pop();
        }
        false
    }
    let mut chosen = Vec::with_capacity(row.len());
    let mut distinct = Vec::with_capacity(row.len());
    dfs(g, row, &mut chosen, &mut distinct).then_some(chosen)
}

/// Decides the row-tuple condition. Rows are scanned in ascending order,
/// so the returned witness is the first one in canonical order.
pub fn theorem23_condition(g: &Graph, s: &StarStructure) -> Result<Theorem23Verdict, TheoremError> {
    validate_star(g, s)?;
    for (q, row) in s.rows().iter().enumerate() {
        if let Some(chosen) = independent_tuple(g, row) {
            let witness = Theorem23Witness {
                row: q + 1,
                tuple: chosen.iter().copied().collect(),
                assignment: row.iter().copied().zip(chosen).collect(),
            };
            return Ok(Theorem23Verdict {
                holds: false,
                witness: Some(witness),
            });
        }
    }
    Ok(Theorem23Verdict {
        holds: true,
        witness: None,
    })
}

/// Unmixedness of a graph carrying a valid clique-row structure.
pub fn theorem23_is_unmixed(g: &Graph, s: &StarStructure) -> Result<bool, TheoremError> {
    Ok(theorem23_condition(g, s)?.holds)
}

/// For an unmixed graph with a valid structure: every minimal cover has
/// `(r - 1) * n` vertices and the independence number is `n`.
pub fn lemma22_check(g: &Graph, s: &StarStructure, cap: usize) -> Result<bool, TheoremError> {
    validate_star(g, s)?;
    let census = is_unmixed_bruteforce(g, cap)?;
    if !census.is_unmixed {
        return Err(TheoremError::NotUnmixed);
    }
    let cover_size = (s.r() - 1) * s.n();
    Ok(census
        .minimal_vertex_covers
        .iter()
        .all(|c| c.len() == cover_size)
        && census.independence_number == s.n())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BipartiteVerdict {
    pub holds: bool,
    /// The perfect matching that satisfies the criterion, if any.
    pub matching: Option<MatchingCertificate>,
    /// Ordered pairs `(x_i, y_i)` when the criterion produced a labeling.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<Vec<(Vertex, Vertex)>>,
    /// Why the criterion fails, when it does.
    pub reason: Option<String>,
}

impl BipartiteVerdict {
    fn fail(reason: &str) -> Self {
        BipartiteVerdict {
            holds: false,
            matching: None,
            labeling: None,
            reason: Some(reason.to_string()),
        }
    }
}

/// Is the subgraph induced on `N(u) ∪ N(v)` complete bipartite? In a
/// bipartite graph `N(v)` lies on `u`'s side and `N(u)` on `v`'s side, so
/// this asks for every pair across the two neighborhoods to be adjacent.
fn neighborhood_complete(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.neighbors(v)
        .iter()
        .all(|&a| g.neighbors(u).iter().all(|&b| g.has_edge(a, b)))
}

/// Connected bipartite graph: unmixed iff some perfect matching `F` has a
/// complete bipartite `G_e` for every `e ∈ F`. Matchings are tried in
/// enumeration order; the first success is returned.
pub fn ravindra_check(g: &Graph, cap: usize) -> Result<BipartiteVerdict, HypothesisError> {
    if g.vertex_count() < 2 {
        return Err(HypothesisError::TooSmall);
    }
    if !g.is_connected() {
        return Err(HypothesisError::NotConnected);
    }
    if g.two_coloring().is_none() {
        return Err(HypothesisError::NotBipartite);
    }
    let matchings = enumerate_perfect_matchings(g, cap)?;
    if matchings.is_empty() {
        return Ok(BipartiteVerdict::fail("no perfect matching"));
    }
    for mut m in matchings {
        let flags: Vec<bool> = m
            .edges
            .iter()
            .map(|&(u, v)| neighborhood_complete(g, u, v))
            .collect();
        let ok = flags.iter().all(|&f| f);
        m.neighborhood_complete = Some(flags);
        if ok {
            return Ok(BipartiteVerdict {
                holds: true,
                matching: Some(m),
                labeling: None,
                reason: None,
            });
        }
    }
    Ok(BipartiteVerdict::fail(
        "no perfect matching with complete bipartite neighborhoods",
    ))
}

/// First violation of the transitivity rule for the labeling, as
/// `(i, j, k)`: `x_i ~ y_j` and `x_j ~ y_k` but not `x_i ~ y_k`.
fn transitivity_violation(g: &Graph, pairs: &[(Vertex, Vertex)]) -> Option<(usize, usize, usize)> {
    let m = pairs.len();
    for i in 0..m {
        for j in 0..m {
            if j == i || !g.has_edge(pairs[i].0, pairs[j].1) {
                continue;
            }
            for k in 0..m {
                if k != i
                    && k != j
                    && g.has_edge(pairs[j].0, pairs[k].1)
                    && !g.has_edge(pairs[i].0, pairs[k].1)
                {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Bipartite graph without isolated vertices: unmixed iff the vertices can
/// be labeled `x_1..x_g`, `y_1..y_g` with `x_i ~ y_i` for all `i` and
/// `x_i ~ y_j`, `x_j ~ y_k` implying `x_i ~ y_k` for distinct `i, j, k`.
/// Candidate labelings come from the perfect matchings, oriented by the
/// 2-coloring (any orientation choice per component gives the same
/// verdict).
pub fn villarreal_check(g: &Graph, cap: usize) -> Result<BipartiteVerdict, HypothesisError> {
    if let Some(v) = g.isolated_vertices().next() {
        return Err(HypothesisError::IsolatedVertex(v));
    }
    let colors = g.two_coloring().ok_or(HypothesisError::NotBipartite)?;
    let components = g.components();
    let component_count = components.iter().max().map_or(0, |&c| c + 1);
    let mut balance = vec![0i64; component_count];
    for v in g.vertices() {
        balance[components[v]] += if colors[v] == 0 { 1 } else { -1 };
    }
    if balance.iter().any(|&b| b != 0) {
        return Ok(BipartiteVerdict::fail("unequal parts"));
    }
    let matchings = enumerate_perfect_matchings(g, cap)?;
    if matchings.is_empty() {
        return Ok(BipartiteVerdict::fail("no perfect matching"));
    }
    for m in matchings {
        let pairs: Vec<(Vertex, Vertex)> = m
            .edges
            .iter()
            .map(|&(u, v)| if colors[u] == 0 { (u, v) } else { (v, u) })
            .collect();
        if transitivity_violation(g, &pairs).is_none() {
            return Ok(BipartiteVerdict {
                holds: true,
                matching: Some(m),
                labeling: Some(pairs),
                reason: None,
            });
        }
    }
    Ok(BipartiteVerdict::fail(
        "every perfect matching violates the transitivity condition",
    ))
}

/// Which of the two tripartite conditions failed, with the offending
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaghighiViolation {
    pub condition: u8,
    /// 1-based row index `q`.
    pub row: usize,
    /// `(u_i, v_j, w_k)` for condition 1, `(r, s, t)` for condition 2.
    pub vertices: [Vertex; 3],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HaghighiVerdict {
    pub holds: bool,
    pub violation: Option<HaghighiViolation>,
}

const PERMUTATIONS_3: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

fn spans_edge(g: &Graph, set: [Vertex; 3]) -> bool {
    g.has_edge(set[0], set[1]) || g.has_edge(set[0], set[2]) || g.has_edge(set[1], set[2])
}

/// Tripartite criterion for structures with rows `{u_i, v_i, w_i}`:
///
/// 1. if `u_i ~ x_q`, `v_j ~ y_q`, `w_k ~ z_q` with `i, j, k, q` distinct
///    and `(x_q, y_q, z_q)` a permutation of row `q`, then
///    `{u_i, v_j, w_k}` spans an edge;
/// 2. if `r ~ x_q`, `s ~ y_q`, `t ~ z_q` where `r, s` share a column
///    (possibly `r = s`) and `t` lies in another column, then `{r, s, t}`
///    spans an edge.
pub fn haghighi_check(g: &Graph, s: &StarStructure) -> Result<HaghighiVerdict, TheoremError> {
    if s.r() != 3 {
        return Err(TheoremError::WrongColumnCount {
            expected: 3,
            got: s.r(),
        });
    }
    validate_star(g, s)?;
    let n = s.n();
    let column_of = s.positions(g.vertex_count());
    let fail = |condition, q: usize, vertices| {
        Ok(HaghighiVerdict {
            holds: false,
            violation: Some(HaghighiViolation {
                condition,
                row: q + 1,
                vertices,
            }),
        })
    };

    for q in 0..n {
        for perm in PERMUTATIONS_3 {
            let [x, y, z] = perm.map(|c| s.cell(q, c));
            for i in (0..n).filter(|&i| i != q) {
                let u = s.cell(i, 0);
                if !g.has_edge(u, x) {
                    continue;
                }
                for j in (0..n).filter(|&j| j != q && j != i) {
                    let v = s.cell(j, 1);
                    if !g.has_edge(v, y) {
                        continue;
                    }
                    for k in (0..n).filter(|&k| k != q && k != i && k != j) {
                        let w = s.cell(k, 2);
                        if g.has_edge(w, z) && !spans_edge(g, [u, v, w]) {
                            return fail(1, q, [u, v, w]);
                        }
                    }
                }
            }
        }
    }

    for q in 0..n {
        for perm in PERMUTATIONS_3 {
            let [x, y, z] = perm.map(|c| s.cell(q, c));
            for r in g.neighbors(x).iter().copied() {
                let column = column_of[r].1;
                for s_ in g
                    .neighbors(y)
                    .iter()
                    .copied()
                    .filter(|&v| column_of[v].1 == column)
                {
                    for t in g
                        .neighbors(z)
                        .iter()
                        .copied()
                        .filter(|&v| column_of[v].1 != column)
                    {
                        if !spans_edge(g, [r, s_, t]) {
                            return fail(2, q, [r, s_, t]);
                        }
                    }
                }
            }
        }
    }
    Ok(HaghighiVerdict {
        holds: true,
        violation: None,
    })
}

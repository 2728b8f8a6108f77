//! Perfect matching enumeration.

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::LimitError;

/// A set of disjoint edges, each stored as `(u, v)` with `u < v`, sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchingCertificate {
    pub edges: Vec<(Vertex, Vertex)>,
    pub perfect: bool,
    /// Per edge `{u, v}`: whether the subgraph induced on `N(u) ∪ N(v)` is
    /// complete bipartite. Filled in by the Ravindra check only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub neighborhood_complete: Option<Vec<bool>>,
}

impl MatchingCertificate {
    pub fn new(g: &Graph, mut edges: Vec<(Vertex, Vertex)>) -> Self {
        for e in &mut edges {
            *e = (e.0.min(e.1), e.0.max(e.1));
        }
        edges.sort_unstable();
        let perfect = 2 * edges.len() == g.vertex_count() && is_matching(g, &edges);
        MatchingCertificate {
            edges,
            perfect,
            neighborhood_complete: None,
        }
    }

    /// Partner of every vertex, `None` where unmatched.
    pub fn partners(&self, vertex_count: usize) -> Vec<Option<Vertex>> {
        let mut mate = vec![None; vertex_count];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

/// Edges of `g`, pairwise disjoint.
pub fn is_matching(g: &Graph, edges: &[(Vertex, Vertex)]) -> bool {
    let mut used = vec![false; g.vertex_count()];
    edges.iter().all(|&(u, v)| {
        g.has_edge(u, v)
            && !std::mem::replace(&mut used[u], true)
            && !std::mem::replace(&mut used[v], true)
    })
}

/// All perfect matchings, found by always matching the lowest uncovered
/// vertex to each of its uncovered neighbors in ascending order. Empty when
/// `|V|` is odd.
pub fn enumerate_perfect_matchings(
    g: &Graph,
    cap: usize,
) -> Result<Vec<MatchingCertificate>, LimitError> {
    let mut out = Vec::new();
    if g.vertex_count() % 2 == 1 {
        return Ok(out);
    }
    let mut covered = vec![false; g.vertex_count()];
    let mut chosen = Vec::with_capacity(g.vertex_count() / 2);
    extend(g, 0, &mut covered, &mut chosen, cap, &mut out)?;
    Ok(out)
}

fn extend(
    g: &Graph,
    from: Vertex,
    covered: &mut [bool],
    chosen: &mut Vec<(Vertex, Vertex)>,
    cap: usize,
    out: &mut Vec<MatchingCertificate>,
) -> Result<(), LimitError> {
    let Some(u) = (from..g.vertex_count()).find(|&v| !covered[v]) else {
        if out.len() == cap {
            return Err(LimitError::CapExceeded { cap });
        }
        out.push(MatchingCertificate::new(g, chosen.clone()));
        return Ok(());
    };
    covered[u] = true;
    for &v in g.neighbors(u) {
        if covered[v] {
            continue;
        }
        covered[v] = true;
        chosen.push((u, v));
        extend(g, u + 1, covered, chosen, cap, out)?;
        chosen.pop();
        covered[v] = false;
    }
    covered[u] = false;
    Ok(())
}

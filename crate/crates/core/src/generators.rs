//! Reference fixtures and instance families with clique-row structures.
//!
//! All generated structures place the row-`j`, column-`i` cell at vertex
//! `j * r + i`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256StarStar;

use crate::format::{parse_graph, GraphFile};
use crate::graph::{Graph, Vertex};
use crate::partition::StarStructure;

/// Largest number of optional cross pairs an exhaustive sweep accepts.
pub const MAX_EXHAUSTIVE_PAIRS: usize = 24;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeneratorError {
    #[error("r must be at least {min}, got {r}")]
    InvalidR { r: usize, min: usize },
    #[error("n must be at least 1")]
    InvalidN,
    #[error("edge probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("cross pair ({0}, {0}) would join two vertices of one column")]
    SameColumn(usize),
    #[error("cross pair ({inner}, {outer}) is out of range for r = {r}")]
    CrossOutOfRange {
        inner: usize,
        outer: usize,
        r: usize,
    },
    #[error("{pairs} optional pairs exceed the exhaustive cap of {MAX_EXHAUSTIVE_PAIRS}")]
    TooManyPairs { pairs: usize },
    #[error("instance index {index} out of range ({count} instances)")]
    IndexOutOfRange { index: u64, count: u64 },
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
}

fn rows_clique_graph(r: usize, n: usize) -> (Graph, StarStructure) {
    let mut g = Graph::empty(r * n);
    for j in 0..n {
        for a in 0..r {
            for b in a + 1..r {
                g.add_edge(j * r + a, j * r + b).expect("in range");
            }
        }
    }
    let rows = (0..n).map(|j| (j * r..(j + 1) * r).collect()).collect();
    (g, StarStructure::new(rows).expect("rectangular"))
}

/// `K_m` with its single-row structure (`r = m`, `n = 1`).
pub fn complete_graph(m: usize) -> (Graph, StarStructure) {
    assert!(m >= 1, "complete_graph needs at least one vertex");
    rows_clique_graph(m, 1)
}

/// Two `K_r` rows, vertices `0..r` and `r..2r`, plus an edge from row-1
/// column `i` to row-2 column `j` for every `(i, j)` in `cross`.
pub fn double_clique(
    r: usize,
    cross: &[(usize, usize)],
) -> Result<(Graph, StarStructure), GeneratorError> {
    if r < 2 {
        return Err(GeneratorError::InvalidR { r, min: 2 });
    }
    let (mut g, s) = rows_clique_graph(r, 2);
    for &(inner, outer) in cross {
        if inner >= r || outer >= r {
            return Err(GeneratorError::CrossOutOfRange { inner, outer, r });
        }
        if inner == outer {
            return Err(GeneratorError::SameColumn(inner));
        }
        g.add_edge(inner, r + outer).expect("in range");
    }
    Ok((g, s))
}

/// Pairs of cells in different rows and different columns, in
/// lexicographic order of vertex ids. These are the only edges a
/// clique-row structure leaves optional.
pub fn optional_pairs(r: usize, n: usize) -> Vec<(Vertex, Vertex)> {
    let mut pairs = Vec::new();
    for a in 0..r * n {
        for b in a + 1..r * n {
            if a / r != b / r && a % r != b % r {
                pairs.push((a, b));
            }
        }
    }
    pairs
}

fn check_dims(r: usize, n: usize) -> Result<(), GeneratorError> {
    if r < 2 {
        return Err(GeneratorError::InvalidR { r, min: 2 });
    }
    if n < 1 {
        return Err(GeneratorError::InvalidN);
    }
    Ok(())
}

/// Rows are `K_r`'s; every optional pair becomes an edge independently
/// with probability `p`.
///
/// The generator is xoshiro256** seeded through SplitMix64
/// (`Xoshiro256StarStar::seed_from_u64`). Pairs are visited in the order
/// of [`optional_pairs`]; each consumes one 64-bit draw `x` and becomes an
/// edge iff `(x >> 11) * 2^-53 < p`.
pub fn random_star_graph(
    r: usize,
    n: usize,
    p: f64,
    seed: u64,
) -> Result<(Graph, StarStructure), GeneratorError> {
    check_dims(r, n)?;
    if !(0.0..=1.0).contains(&p) {
        return Err(GeneratorError::InvalidProbability(p));
    }
    let mut rng = Xoshiro256StarStar::seed_from_u64(seed);
    let (mut g, s) = rows_clique_graph(r, n);
    for (a, b) in optional_pairs(r, n) {
        let unit = (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
        if unit < p {
            g.add_edge(a, b).expect("in range");
        }
    }
    Ok((g, s))
}

/// Every graph obtained from `n` disjoint `K_r` rows by adding a subset of
/// the optional pairs. Subset `k` adds pair `t` iff bit `t` of `k` is set.
pub struct ExhaustiveStarGraphs {
    r: usize,
    n: usize,
    pairs: Vec<(Vertex, Vertex)>,
    next: u64,
    end: u64,
}

impl ExhaustiveStarGraphs {
    pub fn len(&self) -> u64 {
        self.end
    }

    pub fn is_empty(&self) -> bool {
        self.end == 0
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Instance number `index` of the sweep.
    pub fn instance(&self, index: u64) -> Result<(Graph, StarStructure), GeneratorError> {
        if index >= self.end {
            return Err(GeneratorError::IndexOutOfRange {
                index,
                count: self.end,
            });
        }
        let (mut g, s) = rows_clique_graph(self.r, self.n);
        for (t, &(a, b)) in self.pairs.iter().enumerate() {
            if index >> t & 1 == 1 {
                g.add_edge(a, b).expect("in range");
            }
        }
        Ok((g, s))
    }
}

impl Iterator for ExhaustiveStarGraphs {
    type Item = (Graph, StarStructure);

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.instance(self.next).ok()?;
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

pub fn exhaustive_star_graphs(r: usize, n: usize) -> Result<ExhaustiveStarGraphs, GeneratorError> {
    check_dims(r, n)?;
    let pairs = optional_pairs(r, n);
    if pairs.len() > MAX_EXHAUSTIVE_PAIRS {
        return Err(GeneratorError::TooManyPairs { pairs: pairs.len() });
    }
    let end = 1u64 << pairs.len();
    Ok(ExhaustiveStarGraphs {
        r,
        n,
        pairs,
        next: 0,
        end,
    })
}

/// Graphs transcribed from the reference figures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixtureName {
    /// Six vertices, 4-partite, unmixed, no clique-row structure.
    Example33,
    /// Two `K_4` rows with eight cross edges.
    Example31Left,
    /// Two `K_4` rows with four cross edges.
    Example31Right,
    /// Tripartite graph with two distinct tripartitions.
    Section2Tripartite,
}

impl FixtureName {
    pub const ALL: [FixtureName; 4] = [
        FixtureName::Example33,
        FixtureName::Example31Left,
        FixtureName::Example31Right,
        FixtureName::Section2Tripartite,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FixtureName::Example33 => "example_3_3",
            FixtureName::Example31Left => "example_3_1_left",
            FixtureName::Example31Right => "example_3_1_right",
            FixtureName::Section2Tripartite => "section_2_tripartite",
        }
    }

    /// Fixture file contents in the graph format.
    pub fn text(self) -> &'static str {
        match self {
            FixtureName::Example33 => include_str!("../fixtures/example_3_3.graph"),
            FixtureName::Example31Left => include_str!("../fixtures/example_3_1_left.graph"),
            FixtureName::Example31Right => include_str!("../fixtures/example_3_1_right.graph"),
            FixtureName::Section2Tripartite => {
                include_str!("../fixtures/section_2_tripartite.graph")
            }
        }
    }
}

impl fmt::Display for FixtureName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FixtureName {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureName::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| GeneratorError::UnknownFixture(s.to_string()))
    }
}

pub fn fixture(name: FixtureName) -> GraphFile {
    parse_graph(name.text()).expect("embedded fixtures parse")
}

/// Description of one generated instance.
#[derive(Clone, Debug, PartialEq)]
pub enum InstanceSpec {
    Complete {
        m: usize,
    },
    DoubleClique {
        r: usize,
        cross: Vec<(usize, usize)>,
    },
    RandomStar {
        r: usize,
        n: usize,
        edge_probability: f64,
        seed: u64,
    },
    /// Instance `index` of [`exhaustive_star_graphs`].
    ExhaustiveStar {
        r: usize,
        n: usize,
        index: u64,
    },
    Fixture(FixtureName),
}

impl InstanceSpec {
    pub fn build(&self) -> Result<GraphFile, GeneratorError> {
        let (graph, star) = match self {
            InstanceSpec::Complete { m } => {
                if *m < 1 {
                    return Err(GeneratorError::InvalidR { r: *m, min: 1 });
                }
                complete_graph(*m)
            }
            InstanceSpec::DoubleClique { r, cross } => double_clique(*r, cross)?,
            InstanceSpec::RandomStar {
                r,
                n,
                edge_probability,
                seed,
            } => random_star_graph(*r, *n, *edge_probability, *seed)?,
            InstanceSpec::ExhaustiveStar { r, n, index } => {
                exhaustive_star_graphs(*r, *n)?.instance(*index)?
            }
            InstanceSpec::Fixture(name) => return Ok(fixture(*name)),
        };
        Ok(GraphFile {
            graph,
            partition: None,
            star: Some(star),
            warnings: Vec::new(),
        })
    }
}

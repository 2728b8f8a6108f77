//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use clap::Parser;
use unmixed::cli::{run, Cli};
use unmixed::covers::is_unmixed_bruteforce;
use unmixed::generators::{
    complete_graph, exhaustive_star_graphs, fixture, random_star_graph, FixtureName,
};
use unmixed::matching::enumerate_perfect_matchings;
use unmixed::partition::{bipartition, enumerate_r_partitions, validate_star, RPartition};
use unmixed::theorems::{
    haghighi_check, lemma22_check, ravindra_check, theorem23_is_unmixed, villarreal_check,
};
use unmixed::{Graph, VertexSet, DEFAULT_ENUMERATION_CAP as CAP};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn named(g: &Graph, names: &[&str]) -> VertexSet {
    names
        .iter()
        .map(|name| {
            g.labels()
                .iter()
                .position(|l| l == name)
                .unwrap_or_else(|| panic!("no vertex {name}"))
        })
        .collect()
}

fn oracle(g: &Graph) -> bool {
    is_unmixed_bruteforce(g, CAP).unwrap().is_unmixed
}

fn five_cover_graph() -> Outcome {
    let g = fixture(FixtureName::Example33).graph;
    let census = is_unmixed_bruteforce(&g, CAP).unwrap();
    ensure!(census.is_unmixed, "not unmixed");
    ensure!(
        census.minimal_vertex_covers.len() == 5,
        "{} minimal covers",
        census.minimal_vertex_covers.len()
    );
    ensure!(
        census.minimal_vertex_covers.iter().all(|c| c.len() == 4),
        "cover sizes {:?}",
        census.size_histogram
    );
    for names in [
        ["y1", "y3", "y5", "y6"],
        ["y2", "y3", "y4", "y1"],
        ["y2", "y3", "y4", "y5"],
        ["y1", "y4", "y6", "y2"],
        ["y1", "y4", "y6", "y3"],
    ] {
        ensure!(
            census.minimal_vertex_covers.contains(&named(&g, &names)),
            "missing cover {names:?}"
        );
    }
    ensure!(
        census.independence_number == 2,
        "independence number {}",
        census.independence_number
    );
    Ok("5 covers of size 4, independence number 2".into())
}

fn complete_graphs() -> Outcome {
    for n in 3..=8 {
        let (g, s) = complete_graph(n);
        let census = is_unmixed_bruteforce(&g, CAP).unwrap();
        ensure!(census.is_unmixed, "K{n} not unmixed");
        ensure!(
            census.covering_number == n - 1,
            "K{n} covering number {}",
            census.covering_number
        );
        ensure!(
            census.minimal_vertex_covers.len() == n,
            "K{n} has {} covers",
            census.minimal_vertex_covers.len()
        );
        ensure!(
            theorem23_is_unmixed(&g, &s).unwrap(),
            "K{n} single row rejected"
        );
    }
    Ok("K3..K8".into())
}

fn double_cliques() -> Outcome {
    for name in [FixtureName::Example31Left, FixtureName::Example31Right] {
        let f = fixture(name);
        let s = f.star.ok_or(format!("{name}: no rows"))?;
        ensure!(
            (s.r(), s.n()) == (4, 2),
            "{name}: {}x{} structure",
            s.n(),
            s.r()
        );
        ensure!(
            validate_star(&f.graph, &s).is_ok(),
            "{name}: structure invalid"
        );
        ensure!(
            theorem23_is_unmixed(&f.graph, &s).unwrap(),
            "{name}: condition fails"
        );
        let census = is_unmixed_bruteforce(&f.graph, CAP).unwrap();
        ensure!(census.is_unmixed, "{name}: oracle says mixed");
        ensure!(
            census.minimal_vertex_covers.iter().all(|c| c.len() == 6),
            "{name}: {:?}",
            census.size_histogram
        );
        ensure!(
            census.independence_number == 2,
            "{name}: independence number {}",
            census.independence_number
        );
        ensure!(
            lemma22_check(&f.graph, &s, CAP).unwrap(),
            "{name}: cover size check failed"
        );
    }
    Ok("both fixtures, covers of size 6".into())
}

const RANDOM_SWEEPS: [(usize, usize, f64); 4] =
    [(3, 2, 0.3), (3, 2, 0.7), (3, 3, 0.5), (4, 2, 0.5)];
const SAMPLES: u64 = 1000;

fn oracle_equivalence() -> Outcome {
    let mut total = 0;
    for n in 1..=3 {
        let sweep = exhaustive_star_graphs(2, n).unwrap();
        for index in 0..sweep.len() {
            let (g, s) = sweep.instance(index).unwrap();
            ensure!(
                theorem23_is_unmixed(&g, &s).unwrap() == oracle(&g),
                "mismatch r=2 n={n} index={index}"
            );
            total += 1;
        }
    }
    for (r, n, p) in RANDOM_SWEEPS {
        for seed in 0..SAMPLES {
            let (g, s) = random_star_graph(r, n, p, seed).unwrap();
            ensure!(
                theorem23_is_unmixed(&g, &s).unwrap() == oracle(&g),
                "mismatch r={r} n={n} p={p} seed={seed}"
            );
            total += 1;
        }
    }
    Ok(format!("{total} instances, 0 mismatches"))
}

fn specializations() -> Outcome {
    let mut bipartite = 0;
    for n in 1..=3 {
        let sweep = exhaustive_star_graphs(2, n).unwrap();
        for index in 0..sweep.len() {
            let (g, s) = sweep.instance(index).unwrap();
            ensure!(
                g.two_coloring().is_some(),
                "r=2 n={n} index={index} not bipartite"
            );
            let villarreal = villarreal_check(&g, CAP).unwrap().holds;
            ensure!(
                villarreal == theorem23_is_unmixed(&g, &s).unwrap(),
                "villarreal disagrees: n={n} index={index}"
            );
            bipartite += 1;
        }
    }
    let mut tripartite = 0;
    // n = 4 makes the distinct-index condition non-vacuous
    for (n, p) in [(2, 0.3), (2, 0.7), (3, 0.5), (4, 0.3)] {
        for seed in 0..200 {
            let (g, s) = random_star_graph(3, n, p, seed).unwrap();
            let haghighi = haghighi_check(&g, &s).unwrap().holds;
            ensure!(
                haghighi == theorem23_is_unmixed(&g, &s).unwrap(),
                "haghighi disagrees: n={n} p={p} seed={seed}"
            );
            tripartite += 1;
        }
    }
    Ok(format!(
        "{bipartite} bipartite, {tripartite} tripartite instances"
    ))
}

fn ravindra() -> Outcome {
    let mut rng = common::rng(2024);
    let (mut with_matching, mut without) = (0, 0);
    while with_matching < 250 {
        let g = common::random_connected_bipartite(&mut rng, 10);
        let verdict = ravindra_check(&g, CAP).unwrap();
        let expected = oracle(&g);
        ensure!(
            verdict.holds == expected,
            "disagreement on {:?}",
            g.edges().collect::<Vec<_>>()
        );
        if enumerate_perfect_matchings(&g, CAP).unwrap().is_empty() {
            ensure!(!verdict.holds, "holds without a perfect matching");
            without += 1;
        } else {
            with_matching += 1;
        }
    }
    Ok(format!(
        "{with_matching} graphs with a perfect matching, {without} without"
    ))
}

/// Labeled connected bipartite graphs on 2..=7 vertices.
const CONNECTED_BIPARTITE: [usize; 6] = [1, 3, 19, 195, 3031, 67263];

fn bipartition_uniqueness() -> Outcome {
    let mut connected = 0;
    for n in 2..=7 {
        let before = connected;
        for (g, side1) in common::bipartite_graphs(n) {
            if !g.is_connected() {
                continue;
            }
            let sides = RPartition::new(vec![
                VertexSet::from_mask(!side1 & ((1 << n) - 1)),
                VertexSet::from_mask(side1),
            ]);
            let b = bipartition(&g).ok_or(format!("no bipartition for {g:?}"))?;
            ensure!(b == sides, "bipartition differs from the generating sides");
            let all = enumerate_r_partitions(&g, 2, CAP).unwrap();
            ensure!(
                all == vec![b],
                "{} bipartitions of a connected graph",
                all.len()
            );
            connected += 1;
        }
        let expected = CONNECTED_BIPARTITE[n - 2];
        ensure!(
            connected - before == expected,
            "{} connected graphs on {n} vertices, expected {expected}",
            connected - before
        );
    }
    let f = fixture(FixtureName::Section2Tripartite);
    let g = &f.graph;
    let all = enumerate_r_partitions(g, 3, CAP).unwrap();
    ensure!(all.len() >= 2, "{} tripartitions", all.len());
    for printed in [
        [&["a1", "a2", "a3"][..], &["a4", "a5"], &["a6"]],
        [&["a1", "a2"][..], &["a4", "a5"], &["a3", "a6"]],
    ] {
        let p = RPartition::new(printed.iter().map(|names| named(g, names)).collect());
        ensure!(all.contains(&p), "missing tripartition {printed:?}");
    }
    Ok(format!(
        "{connected} connected bipartite graphs, {} tripartitions of the fixture",
        all.len()
    ))
}

fn determinism() -> Outcome {
    let args = [
        "unmixed",
        "--json",
        "equiv",
        "--r",
        "3",
        "--n",
        "2",
        "--samples",
        "200",
        "--prob",
        "0.5",
        "--seed",
        "7",
    ];
    let json = || {
        let outcome = run(Cli::try_parse_from(args).unwrap());
        outcome
            .report
            .expect("equiv reports")
            .to_json_without_timing()
    };
    let (first, second) = (json(), json());
    ensure!(first == second, "reports differ");
    Ok(format!("{} identical bytes", first.len()))
}

fn main() {
    let criteria: [Criterion; 8] = [
        (
            "1 five-cover unmixed graph",
            five_cover_graph,
            Duration::from_secs(1),
        ),
        ("2 complete graphs", complete_graphs, Duration::from_secs(1)),
        (
            "3 double-clique graphs",
            double_cliques,
            Duration::from_secs(1),
        ),
        (
            "4 structure decision vs census",
            oracle_equivalence,
            Duration::from_secs(300),
        ),
        (
            "5 bipartite and tripartite criteria",
            specializations,
            Duration::from_secs(300),
        ),
        (
            "6 perfect-matching criterion",
            ravindra,
            Duration::from_secs(300),
        ),
        (
            "7 bipartition uniqueness",
            bipartition_uniqueness,
            Duration::from_secs(300),
        ),
        ("8 equiv determinism", determinism, Duration::from_secs(300)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|msg| {
            if elapsed < limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match result {
            Ok(msg) => println!("PASS {name}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}

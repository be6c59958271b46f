//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_UNATTAINABLE` are checked exactly as stated
//! and are expected to print FAIL. The run aborts if any other criterion
//! fails, or if a listed one starts passing.

mod common;

use std::time::{Duration, Instant};

use common::{
    all_connected_graphs, all_graphs, brute_max_weight_clique, girth6_corpus, girth7_corpus, random_connected,
    random_tree, rng,
};
use graphroot::generators::{complete, cycle, subdivision};
use graphroot::iso::is_isomorphic_bounded;
use graphroot::oracle::{find_roots, RootQuery};
use graphroot::reduction::{build_instance, extract_partition, validate_splitting, Partition, SetSplittingInstance};
use graphroot::root6::{recognize_girth6, root_with_neighborhood, EdgeInstance, NeighborhoodInstance};
use graphroot::root7::recognize_root7;
use graphroot::{
    check_square_root, enumerate_maximal_cliques, girth, max_weight_clique, square, Graph, Reason, VertexSet,
};
use rand::Rng;

const GIRTH7_MIN_CORPUS: usize = 200;
const GIRTH7_TIME: Duration = Duration::from_secs(60);
const GIRTH6_TIME: Duration = Duration::from_secs(120);
const ORACLE_RANDOM: usize = 100;
const UNIQUENESS_SAMPLES: usize = 100;
const UNIQUENESS_MAX_N: usize = 20;
const REDUCTION_TIME: Duration = Duration::from_secs(600);
const SCALING_SIZES: [usize; 3] = [100, 200, 400];
const SCALING_MAX_SLOPE: f64 = 3.5;
const ISO_BOUND: usize = 256;

const KNOWN_UNATTAINABLE: [(usize, &str); 2] = [
    (
        3,
        "the square of S(K4) satisfies condition (ii); recognition stops at TOO_MANY_CLIQUES",
    ),
    (8, "the constructed graph has no triangle-free square root"),
];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn criterion1() -> Outcome {
    let corpus = girth7_corpus();
    let start = Instant::now();
    let mut bad = 0;
    for h in &corpus {
        assert!(h.is_connected() && girth(h).at_least(7));
        let ok = recognize_root7(&square(h))
            .root()
            .is_some_and(|r| is_isomorphic_bounded(r, h, ISO_BOUND).unwrap());
        bad += usize::from(!ok);
    }
    let t = start.elapsed();
    outcome(
        corpus.len() >= GIRTH7_MIN_CORPUS && bad == 0 && t <= GIRTH7_TIME,
        format!(
            "{} graphs, {bad} failures, {} (limit {})",
            corpus.len(),
            secs(t),
            secs(GIRTH7_TIME)
        ),
    )
}

fn criterion2() -> Outcome {
    let corpus = girth6_corpus();
    let start = Instant::now();
    let mut bad = 0;
    for h in &corpus {
        assert!(h.is_connected() && girth(h).at_least(6) && h.n() <= 100);
        let g = square(h);
        let ok = recognize_girth6(&g)
            .root()
            .is_some_and(|r| girth(r).at_least(6) && check_square_root(r, &g));
        bad += usize::from(!ok);
    }
    let t = start.elapsed();
    outcome(
        bad == 0 && t <= GIRTH6_TIME,
        format!(
            "{} graphs, {bad} failures, {} (limit {})",
            corpus.len(),
            secs(t),
            secs(GIRTH6_TIME)
        ),
    )
}

fn criterion3() -> Outcome {
    let g = square(&subdivision(&complete(4)));
    let r7 = recognize_root7(&g).reason();
    let r6 = recognize_girth6(&g).is_yes();
    let shown = r7.map_or("YES".to_string(), |r| r.code().to_string());
    outcome(
        r7 == Some(Reason::CondII) && r6,
        format!(
            "root7 = {shown} (expected COND_II), root6 = {}",
            if r6 { "YES" } else { "NO" }
        ),
    )
}

fn oracle_exists(g: &Graph, k: usize) -> Option<bool> {
    let found = find_roots(&RootQuery::new(g.clone()).girth_min(k)).ok()?;
    found.exhausted.then_some(!found.roots.is_empty())
}

fn criterion4() -> Outcome {
    let mut graphs: Vec<Graph> = (1..=7).flat_map(all_connected_graphs).collect();
    let exhaustive = graphs.len();
    let mut r = rng(4);
    for i in 0..ORACLE_RANDOM {
        let n = 8 + i % 2;
        let g = if i < ORACLE_RANDOM / 2 {
            random_connected(n, r.gen_range(0.3..0.9), &mut r)
        } else {
            square(&random_connected(n, r.gen_range(0.15..0.4), &mut r))
        };
        graphs.push(g);
    }
    let (mut disagreements, mut yes7, mut yes6) = (0, 0, 0);
    for g in &graphs {
        let r7 = recognize_root7(g).is_yes();
        let r6 = recognize_girth6(g).is_yes();
        yes7 += usize::from(r7);
        yes6 += usize::from(r6);
        disagreements += usize::from(oracle_exists(g, 7) != Some(r7));
        disagreements += usize::from(oracle_exists(g, 6) != Some(r6));
    }
    outcome(
        disagreements == 0,
        format!(
            "{exhaustive} graphs n<=7 + {ORACLE_RANDOM} random n=8,9; {yes7} girth-7 and {yes6} girth-6 squares; {disagreements} disagreements"
        ),
    )
}

fn criterion5() -> Outcome {
    let mut r = rng(5);
    let mut pool: Vec<Graph> = girth6_corpus()
        .into_iter()
        .filter(|h| (3..=UNIQUENESS_MAX_N).contains(&h.n()))
        .collect();
    while pool.len() < UNIQUENESS_SAMPLES {
        let n = r.gen_range(6..=UNIQUENESS_MAX_N);
        pool.push(if pool.len().is_multiple_of(2) {
            random_tree(n, &mut r)
        } else {
            common::sparse_with_girth(n, r.gen_range(1..5), 6, &mut r)
        });
    }
    let (mut exact, mut unique) = (0, 0);
    for h in &pool {
        assert!(girth(h).at_least(6));
        let v = r.gen_range(0..h.n());
        let g = square(h);
        let inst = NeighborhoodInstance::new(&g, v, h.neighborhood(v)).unwrap();
        exact += usize::from(root_with_neighborhood(&inst).as_ref() == Some(h));
        let q = RootQuery::new(g.clone())
            .forbid([3, 5])
            .fix_neighborhood(v, h.neighborhood(v));
        let found = find_roots(&q).unwrap();
        unique += usize::from(found.exhausted && found.roots == vec![h.clone()]);
    }
    let n = pool.len();
    outcome(
        n >= UNIQUENESS_SAMPLES && exact == n && unique == n,
        format!("{n} samples; neighbourhood root exact {exact}/{n}; oracle unique {unique}/{n}"),
    )
}

fn criterion6() -> Outcome {
    let (mut edges, mut violations) = (0, 0);
    for h in girth6_corpus().into_iter().chain(girth7_corpus()) {
        let g = square(&h);
        for (x, y) in h.edges() {
            edges += 1;
            let inst = EdgeInstance::new(&g, x, y).unwrap();
            violations += usize::from(inst.common_components().len() > 2);
        }
    }
    outcome(violations == 0, format!("{edges} root edges, {violations} violations"))
}

fn criterion7() -> Outcome {
    let mut over = 0;
    let corpus = girth7_corpus();
    for h in &corpus {
        over += usize::from(!enumerate_maximal_cliques(&square(h), Some(h.n())).complete);
    }
    let octa = square(&cycle(6));
    let octa_all = enumerate_maximal_cliques(&octa, None).len();
    let octa_capped = !enumerate_maximal_cliques(&octa, Some(6)).complete;

    let mut r = rng(7);
    let (mut checked, mut mismatches) = (0, 0);
    for n in 1..=8 {
        for g in all_graphs(n) {
            let w: Vec<f64> = (0..n).map(|_| r.gen_range(1..=9) as f64).collect();
            checked += 1;
            mismatches += usize::from(max_weight_clique(&g, &w, 1000).ok() != Some(brute_max_weight_clique(&g, &w)));
        }
    }
    outcome(
        over == 0 && octa_all == 8 && octa_capped && mismatches == 0,
        format!(
            "{over}/{} corpus squares over n cliques; C6^2 has {octa_all} cliques, cap 6 exceeded: {octa_capped}; max-weight clique {mismatches} mismatches over {checked} graphs",
            corpus.len()
        ),
    )
}

fn criterion8() -> Outcome {
    let ss = SetSplittingInstance::sample();
    let listed_split = validate_splitting(
        &ss,
        &Partition {
            block1: vec![1, 3, 5],
            block2: vec![2, 4],
        },
    );
    let ri = build_instance(&ss).unwrap();
    let start = Instant::now();
    let found = find_roots(&RootQuery::new(ri.graph.clone()).girth_exact(4)).unwrap();
    let t = start.elapsed();
    let tails_ok = found.roots.iter().all(|h| {
        (1..=ss.m()).all(|j| {
            let tail: VertexSet = (1..=3).map(|k| ri.tail(j, k)).collect();
            h.neighborhood(ri.subset(j)).difference(&tail) == ri.members(j)
        })
    });
    let extracted_ok = found
        .roots
        .iter()
        .all(|h| extract_partition(&ri, h).is_ok_and(|x| validate_splitting(&ss, &x.partition)));
    outcome(
        !found.roots.is_empty() && t <= REDUCTION_TIME && tails_ok && extracted_ok && listed_split,
        format!(
            "{} vertices; girth-4 roots found: {} (exhausted: {}, {} nodes, {}); tails ok: {tails_ok}; extraction ok: {extracted_ok}; {{u1,u3,u5}}/{{u2,u4}} valid: {listed_split}",
            ri.graph.n(),
            found.roots.len(),
            found.exhausted,
            found.nodes,
            secs(t)
        ),
    )
}

fn criterion9() -> Outcome {
    let ss = SetSplittingInstance::new(2, vec![vec![1], vec![2]]).unwrap();
    let g = build_instance(&ss).unwrap().graph;
    let mut parts = Vec::new();
    let mut pass = g.n() == 15;
    for (label, q) in [
        ("girth_exact=4", RootQuery::new(g.clone()).girth_exact(4)),
        ("girth_min=3", RootQuery::new(g.clone()).girth_min(3)),
    ] {
        let start = Instant::now();
        let found = find_roots(&q).unwrap();
        let t = start.elapsed();
        pass &= found.roots.is_empty() && found.exhausted && t <= REDUCTION_TIME;
        parts.push(format!(
            "{label}: {} roots, exhausted {}, {}",
            found.roots.len(),
            found.exhausted,
            secs(t)
        ));
    }
    outcome(pass, format!("{} vertices; {}", g.n(), parts.join("; ")))
}

fn criterion10() -> Outcome {
    let mut r = rng(10);
    let mut points = Vec::new();
    for &n in &SCALING_SIZES {
        let squares: Vec<Graph> = (0..3).map(|_| square(&random_tree(n, &mut r))).collect();
        let mut runs: Vec<f64> = (0..5)
            .map(|_| {
                let start = Instant::now();
                for g in &squares {
                    assert!(recognize_root7(g).is_yes());
                }
                start.elapsed().as_secs_f64()
            })
            .collect();
        runs.sort_by(f64::total_cmp);
        points.push(((n as f64).ln(), runs[runs.len() / 2].ln()));
    }
    let k = points.len() as f64;
    let (mx, my) = (
        points.iter().map(|p| p.0).sum::<f64>() / k,
        points.iter().map(|p| p.1).sum::<f64>() / k,
    );
    let slope = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum::<f64>()
        / points.iter().map(|p| (p.0 - mx).powi(2)).sum::<f64>();
    let times: Vec<String> = points.iter().map(|p| format!("{:.4}s", p.1.exp())).collect();
    outcome(
        slope <= SCALING_MAX_SLOPE,
        format!("n = {SCALING_SIZES:?}, median times {times:?}, log-log slope {slope:.2} (limit {SCALING_MAX_SLOPE})"),
    )
}

fn main() {
    let criteria: [fn() -> Outcome; 10] = [
        criterion1,
        criterion2,
        criterion3,
        criterion4,
        criterion5,
        criterion6,
        criterion7,
        criterion8,
        criterion9,
        criterion10,
    ];
    let mut surprises = Vec::new();
    for (i, run) in criteria.iter().enumerate() {
        let id = i + 1;
        let o = run();
        println!(
            "criterion {id:>2}: {} | {}",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
        let known = KNOWN_UNATTAINABLE.iter().find(|(k, _)| *k == id);
        match (o.pass, known) {
            (false, Some((_, why))) => println!("              known: {why}"),
            (false, None) => surprises.push(format!("criterion {id} failed")),
            (true, Some(_)) => surprises.push(format!("criterion {id} passed but is listed as unattainable")),
            (true, None) => {}
        }
    }
    assert!(surprises.is_empty(), "{}", surprises.join("; "));
}

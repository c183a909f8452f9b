//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use edgeflip::bits::BitVec;
use edgeflip::corpus::{self, builtins, connected_graphs, generated_corpus};
use edgeflip::edge_space::{coset_representative, edge_neighborhood};
use edgeflip::flip::{apply_move, generate_subgroup, group_order_bruteforce};
use edgeflip::matrix::orbit_labels;
use edgeflip::orbit::{bfs_labels, classification_labels, Puzzle};
use edgeflip::solver::{bfs_distances, solve, verify_sequence, Solution};
use edgeflip::structure::{closed_under_product, groups_isomorphic, structure, SemidirectModel};
use edgeflip::vertex_flip::{
    all_y_specs, build_y, classify_y, line_graph_transport, pi1, vertex_generators, vertex_group_order_bruteforce,
    VertexGroupDescriptor, YGraphSpec,
};
use edgeflip::{EdgeSet, Graph, Move, VertexSet};
use num_bigint::BigUint;

/// Large enough for every group met below; the biggest has 2^16 * 5! elements.
const BIG_CAP: usize = 8_000_000;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn config(m: usize, mask: u64) -> EdgeSet {
    EdgeSet::from_bits(BitVec::from_u64(m, mask))
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// Graphs with `n >= 3` and at most `max_m` edges from the generated corpus.
fn corpus_upto(max_m: usize) -> Vec<Graph> {
    generated_corpus(5, max_m).into_iter().filter(|g| g.n() >= 3).collect()
}

fn group_orders() -> Outcome {
    let cases = [
        ("K3", corpus::complete(3), 24u64),
        ("P4", corpus::path(4), 24),
        ("K1,4", corpus::star(5), 120),
        ("C4", corpus::cycle(4), 96),
        ("C5", corpus::cycle(5), 1920),
        ("K4", corpus::complete(4), 1536),
        ("paw", corpus::paw(), 96),
    ];
    let mut seen = Vec::new();
    for (name, g, expected) in cases {
        let found = group_order_bruteforce(&g, BIG_CAP).map_err(|e| e.to_string())?;
        let formula = structure(&g).map_err(|e| e.to_string())?.order;
        ensure(big(found as u64) == formula && formula == big(expected), || {
            format!("{name}: enumerated {found}, formula {formula}, expected {expected}")
        })?;
        seen.push(format!("{name}={found}"));
    }
    Ok(seen.join(" "))
}

fn star_orders() -> Outcome {
    let mut seen = Vec::new();
    for (n, expected) in [(3, 6u64), (4, 24), (5, 120)] {
        let found = group_order_bruteforce(&corpus::star(n), BIG_CAP).map_err(|e| e.to_string())?;
        ensure(found as u64 == expected, || format!("star on {n} vertices: {found}, expected {expected}"))?;
        seen.push(format!("n={n}:{found}"));
    }
    Ok(seen.join(" "))
}

fn orbit_partitions() -> Outcome {
    let graphs = corpus_upto(8);
    let mut configs = 0u64;
    for g in &graphs {
        let p = Puzzle::new(g.clone()).map_err(|e| e.to_string())?;
        let m = g.m();
        let all: Vec<usize> = (0..m).collect();
        let closed = classification_labels(&p).map_err(|e| e.to_string())?;
        let brute = bfs_labels(g, &all).map_err(|e| e.to_string())?;
        ensure(closed == brute, || format!("full generators disagree on {:?}", g.edges()))?;

        let tree = p.tree().edges().to_vec();
        let tree_only = bfs_labels(g, &tree).map_err(|e| e.to_string())?;
        let reps: Vec<EdgeSet> = (0..1u64 << m)
            .map(|x| coset_representative(g, p.tree(), &config(m, x)).unwrap())
            .collect();
        for x in 0..1usize << m {
            if reps[x].is_empty() {
                ensure(tree_only[x] == closed[x], || format!("tree moves on {:?}, config {x:b}", g.edges()))?;
            }
        }
        for &eps in p.cosets().cotree() {
            let mut moves = tree.clone();
            moves.push(eps);
            let restricted = bfs_labels(g, &moves).map_err(|e| e.to_string())?;
            for x in 0..1usize << m {
                if reps[x].contains(eps) {
                    ensure(restricted[x] == closed[x], || {
                        format!("tree plus edge {eps} on {:?}, config {x:b}", g.edges())
                    })?;
                }
            }
        }
        configs += 1 << m;
    }
    Ok(format!("{} graphs, {configs} configurations", graphs.len()))
}

fn orbit_census() -> Outcome {
    let mut seen = Vec::new();
    for (name, g, expected) in [
        ("K3", corpus::complete(3), vec![1u64, 3, 4]),
        ("C4", corpus::cycle(4), vec![1, 4, 3, 4, 4]),
    ] {
        let p = Puzzle::new(g.clone()).map_err(|e| e.to_string())?;
        let descriptors = p.descriptors(1 << 20).map_err(|e| e.to_string())?;
        let sizes: Vec<BigUint> = descriptors.iter().map(|d| p.orbit_size(d).unwrap()).collect();
        ensure(sizes == expected.iter().map(|&s| big(s)).collect::<Vec<_>>(), || {
            format!("{name}: closed-form sizes {sizes:?}")
        })?;
        ensure(p.orbit_count().unwrap() == big(expected.len() as u64), || format!("{name}: orbit count"))?;
        let labels = bfs_labels(&g, &(0..g.m()).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for l in labels {
            *counts.entry(l).or_default() += 1;
        }
        let mut brute: Vec<u64> = counts.into_values().collect();
        let mut want = expected.clone();
        brute.sort_unstable();
        want.sort_unstable();
        ensure(brute == want, || format!("{name}: enumerated sizes {brute:?}"))?;
        seen.push(format!("{name}={expected:?}"));
    }
    Ok(seen.join(" "))
}

/// A few 7-vertex graphs; exhaustive isomorphism classes stop at 6 vertices.
fn seven_vertex_graphs() -> Vec<Graph> {
    let mut out = vec![corpus::complete(7), corpus::cycle(7), corpus::path(7), corpus::star(7)];
    let mut wheel: Vec<(usize, usize)> = (1..7).map(|v| (0, v)).collect();
    wheel.extend((1..7).map(|v| (v, v % 6 + 1)));
    out.push(Graph::new(7, &wheel).unwrap());
    let mut chords: Vec<(usize, usize)> = (1..7).map(|v| (v - 1, v)).collect();
    chords.extend([(0, 6), (0, 3), (2, 5), (1, 4)]);
    out.push(Graph::new(7, &chords).unwrap());
    out
}

fn sw_updates() -> Outcome {
    let graphs: Vec<Graph> = (3..=6).flat_map(connected_graphs).chain(seven_vertex_graphs()).collect();
    let mut checked = 0u64;
    for g in &graphs {
        let n = g.n();
        let p = Puzzle::new(g.clone()).map_err(|e| e.to_string())?;
        let b = p.basis();
        for mask in 0u64..1 << (n - 1) {
            let bond = b.compose(&VertexSet::from_members(n, (1..n).filter(|v| mask >> (v - 1) & 1 == 1)));
            for e in 0..g.m() {
                let mut target = edge_neighborhood(g, e).unwrap();
                target.add_assign(&apply_move(g, &bond, Move(e)).unwrap());
                let direct = b.simple_weight(&target).map_err(|e| e.to_string())?;
                let predicted = p.sw_update_predict(&bond, e).map_err(|e| e.to_string())?;
                ensure(direct == predicted, || {
                    format!("{:?}, bond mask {mask:b}, edge {e}: predicted {predicted}, direct {direct}", g.edges())
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{} graphs, {checked} (G, edge) pairs", graphs.len()))
}

fn gamma_image() -> Outcome {
    let mut seen = Vec::new();
    for (name, g) in [("K3", corpus::complete(3)), ("C4", corpus::cycle(4)), ("K4", corpus::complete(4))] {
        let model = SemidirectModel::new(g.clone()).map_err(|e| e.to_string())?;
        let group = generate_subgroup(&g, &(0..g.m()).collect::<Vec<_>>(), BIG_CAP).map_err(|e| e.to_string())?;
        let mut image = group.iter().map(|x| model.gamma(x)).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        image.sort();
        image.dedup();
        ensure(image.len() == group.len(), || format!("{name}: image {} vs group {}", image.len(), group.len()))?;
        ensure(big(image.len() as u64) == structure(&g).unwrap().order, || format!("{name}: image size"))?;
        ensure(image.iter().all(|x| model.is_member(x)), || format!("{name}: translation outside the allowed part"))?;
        ensure(closed_under_product(&model, &image).map_err(|e| e.to_string())?, || format!("{name}: not closed"))?;
        seen.push(format!("{name}={}", image.len()));
    }
    Ok(seen.join(" "))
}

fn isomorphism_criterion() -> Outcome {
    let graphs: Vec<(String, Graph)> = builtins()
        .into_iter()
        .map(|(n, g)| (n.to_string(), g))
        .chain(corpus_upto(6).into_iter().enumerate().map(|(i, g)| (format!("gen{i}"), g)))
        .collect();
    let mut orders: Vec<usize> = Vec::new();
    for (_, g) in &graphs {
        orders.push(group_order_bruteforce(g, BIG_CAP).map_err(|e| e.to_string())?);
    }
    let mut pairs = 0;
    for (i, (na, a)) in graphs.iter().enumerate() {
        for (j, (nb, b)) in graphs.iter().enumerate() {
            let verdict = groups_isomorphic(a, b).map_err(|e| e.to_string())?;
            let same_shape = a.n() == b.n() && a.m() == b.m();
            ensure(verdict == same_shape, || format!("{na} vs {nb}: verdict {verdict}"))?;
            if verdict {
                ensure(orders[i] == orders[j], || format!("{na} vs {nb}: orders {} and {}", orders[i], orders[j]))?;
            }
            pairs += 1;
        }
    }
    let c4 = group_order_bruteforce(&corpus::cycle(4), BIG_CAP).unwrap();
    let paw = group_order_bruteforce(&corpus::paw(), BIG_CAP).unwrap();
    ensure(c4 == 96 && paw == 96, || format!("C4 {c4}, paw {paw}"))?;
    Ok(format!("{pairs} ordered pairs, C4 and paw both {c4}"))
}

/// Brute-force vertex-flip order of every one-hub graph on `3..=7` vertices.
fn one_hub_orders() -> &'static [(YGraphSpec, BigUint)] {
    static TABLE: std::sync::OnceLock<Vec<(YGraphSpec, BigUint)>> = std::sync::OnceLock::new();
    TABLE.get_or_init(|| {
        (3..=7)
            .flat_map(all_y_specs)
            .map(|spec| {
                let order = vertex_group_order_bruteforce(&build_y(&spec), BIG_CAP).expect("cap");
                (spec, order)
            })
            .collect()
    })
}

fn one_hub_classification() -> Outcome {
    let fig = YGraphSpec::new(5, vec![2, 4]).unwrap();
    ensure(pi1(&fig) == 2, || format!("invariant {}", pi1(&fig)))?;
    let desc = classify_y(&fig).map_err(|e| e.to_string())?;
    ensure(desc == VertexGroupDescriptor::SemidirectTwoGroup { exponent: 4, degree: 5 }, || format!("{desc}"))?;
    ensure(desc.order() == Some(big(1920)), || format!("{desc} order"))?;
    let found = vertex_group_order_bruteforce(&build_y(&fig), BIG_CAP).map_err(|e| e.to_string())?;
    ensure(found == big(1920), || format!("enumerated {found}"))?;

    let mut classified = 0;
    for (spec, order) in one_hub_orders() {
        let m = spec.m();
        let p = pi1(spec);
        let fact = |k: usize| (2..=k as u64).fold(big(1), |acc, i| acc * i);
        let expected = if p == 1 || p == m - 1 {
            Some(fact(m + 1))
        } else if p == 2 || p == m - 2 {
            let k = if m % 2 == 1 { m - 1 } else { m - 2 };
            Some((big(1) << k) * fact(m))
        } else {
            None
        };
        if let Some(expected) = expected {
            ensure(*order == expected, || format!("{spec}: enumerated {order}, expected {expected}"))?;
            ensure(classify_y(spec).unwrap().order() == Some(expected), || format!("{spec}: descriptor"))?;
            classified += 1;
        }
    }
    Ok(format!("{desc} = {found}; {classified} classified specs with m <= 7 agree"))
}

fn line_graph_transport_check() -> Outcome {
    let graphs: Vec<Graph> = generated_corpus(5, 8).into_iter().filter(|g| g.m() >= 1).collect();
    for g in &graphs {
        let t = line_graph_transport(g).map_err(|e| e.to_string())?;
        let line = t.line();
        ensure(t.mapping() == (0..g.m()).collect::<Vec<_>>(), || "index map".into())?;
        let edge_labels = bfs_labels(g, &(0..g.m()).collect::<Vec<_>>()).map_err(|e| e.to_string())?;
        let vertex_labels = orbit_labels(line.n(), &vertex_generators(line)).map_err(|e| e.to_string())?;
        ensure(edge_labels == vertex_labels, || format!("orbits differ on {:?}", g.edges()))?;
        let edge_order = group_order_bruteforce(g, BIG_CAP).map_err(|e| e.to_string())?;
        let vertex_order = vertex_group_order_bruteforce(line, BIG_CAP).map_err(|e| e.to_string())?;
        ensure(big(edge_order as u64) == vertex_order, || {
            format!("{:?}: edge order {edge_order}, vertex order {vertex_order}", g.edges())
        })?;
    }
    Ok(format!("{} graphs with 1 <= m <= 8", graphs.len()))
}

fn solver_agreement() -> Outcome {
    let graphs = corpus_upto(7);
    let mut pairs = 0u64;
    for g in &graphs {
        let m = g.m();
        let p = Puzzle::new(g.clone()).map_err(|e| e.to_string())?;
        for a in 0..1u64 << m {
            let start = config(m, a);
            let dist = bfs_distances(g, &start).map_err(|e| e.to_string())?;
            for b in 0..1u64 << m {
                let target = config(m, b);
                let ok = match solve(&p, &start, &target, 1 << 20).map_err(|e| e.to_string())? {
                    Solution::Solved(w) => {
                        verify_sequence(g, &start, &w).map_err(|e| e.to_string())? == target
                            && dist.get(&target) == Some(&w.len())
                    }
                    Solution::Unsolvable { .. } => !dist.contains_key(&target),
                    Solution::CapExceeded { .. } => false,
                };
                ensure(ok, || format!("{:?}: {a:b} -> {b:b}", g.edges()))?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{} graphs, {pairs} pairs", graphs.len()))
}

fn equal_invariant_equal_order() -> Outcome {
    let mut groups: BTreeMap<(usize, usize), Vec<(&YGraphSpec, &BigUint)>> = BTreeMap::new();
    for (spec, order) in one_hub_orders() {
        groups.entry((spec.m(), pi1(spec))).or_default().push((spec, order));
    }
    for ((m, p), members) in &groups {
        let first = members[0].1;
        for (spec, order) in members {
            ensure(*order == first, || format!("m={m}, pi1={p}: {spec} has {order}, {} has {first}", members[0].0))?;
        }
    }
    let unclassified: Vec<String> = groups
        .iter()
        .filter(|(_, v)| matches!(classify_y(v[0].0), Ok(VertexGroupDescriptor::UnclassifiedByPi1 { .. })))
        .map(|((m, p), v)| format!("m={m},pi1={p}:{}", v[0].1))
        .collect();
    Ok(format!("{} (m, pi1) classes; unclassified orders {}", groups.len(), unclassified.join(" ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("group-order-reproduction", group_orders),
        ("star-groups", star_orders),
        ("orbit-classification-vs-bfs", orbit_partitions),
        ("orbit-census", orbit_census),
        ("simple-weight-updates", sw_updates),
        ("gamma-monomorphism-and-image", gamma_image),
        ("isomorphism-criterion", isomorphism_criterion),
        ("one-hub-invariant-classification", one_hub_classification),
        ("line-graph-transport", line_graph_transport_check),
        ("solver-vs-bfs", solver_agreement),
        ("equal-invariant-equal-order", equal_invariant_equal_order),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name} ({secs:.1}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({secs:.1}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

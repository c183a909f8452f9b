//! Closed forms against brute force on the shipped corpus.

use num_bigint::BigUint;
use serde::Serialize;

use crate::corpus;
use crate::edge_space::EdgeSet;
use crate::error::Result;
use crate::flip::{group_order_bruteforce, DEFAULT_GROUP_CAP};
use crate::graph::Graph;
use crate::matrix::orbit_labels;
use crate::orbit::{bfs_labels, classification_labels, Puzzle};
use crate::solver::{bfs_distances, solve, verify_sequence, Solution};
use crate::structure::structure;
use crate::vertex_flip::{line_graph_transport, vertex_generators, vertex_group_order_bruteforce};

/// Exhaustive solver checks run on graphs with at most this many edges.
const SOLVER_EDGE_LIMIT: usize = 5;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub graph: String,
    pub check: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SelfCheckReport {
    pub checks: Vec<CheckResult>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

fn record(out: &mut Vec<CheckResult>, graph: &str, check: &'static str, passed: bool, detail: String) {
    out.push(CheckResult {
        graph: graph.to_string(),
        check,
        passed,
        detail,
    });
}

fn check_graph(name: &str, g: &Graph, out: &mut Vec<CheckResult>) -> Result<()> {
    let puzzle = Puzzle::new(g.clone())?;
    let all: Vec<usize> = (0..g.m()).collect();

    let closed = classification_labels(&puzzle)?;
    let brute = bfs_labels(g, &all)?;
    record(out, name, "orbit-partition", closed == brute, String::new());

    let descriptors = puzzle.descriptors(usize::MAX)?;
    let total: BigUint = descriptors
        .iter()
        .map(|d| puzzle.orbit_size(d))
        .sum::<Result<BigUint>>()?;
    let sums_ok = total == BigUint::from(1u64) << g.m() && BigUint::from(descriptors.len()) == puzzle.orbit_count()?;
    record(out, name, "orbit-census", sums_ok, format!("{} orbits", descriptors.len()));

    let predicted = structure(g)?.order;
    let found = group_order_bruteforce(g, DEFAULT_GROUP_CAP)?;
    record(
        out,
        name,
        "group-order",
        predicted == BigUint::from(found),
        format!("predicted {predicted}, enumerated {found}"),
    );

    let transport = line_graph_transport(g)?;
    let line = transport.line();
    let vertex_labels = orbit_labels(line.n(), &vertex_generators(line))?;
    let vertex_order = vertex_group_order_bruteforce(line, DEFAULT_GROUP_CAP)?;
    record(
        out,
        name,
        "line-graph-transport",
        vertex_labels == brute && vertex_order == BigUint::from(found),
        format!("vertex-flip order {vertex_order}"),
    );

    if g.m() <= SOLVER_EDGE_LIMIT {
        let mut ok = true;
        for a in 0..1u64 << g.m() {
            let start = EdgeSet::from_bits(crate::bits::BitVec::from_u64(g.m(), a));
            let dist = bfs_distances(g, &start)?;
            for b in 0..1u64 << g.m() {
                let target = EdgeSet::from_bits(crate::bits::BitVec::from_u64(g.m(), b));
                ok &= match solve(&puzzle, &start, &target, usize::MAX)? {
                    Solution::Solved(w) => {
                        dist.get(&target) == Some(&w.len()) && verify_sequence(g, &start, &w)? == target
                    }
                    Solution::Unsolvable { .. } => !dist.contains_key(&target),
                    Solution::CapExceeded { .. } => false,
                };
            }
        }
        record(out, name, "solver", ok, format!("{} pairs", 1u64 << (2 * g.m())));
    }
    Ok(())
}

/// Runs every check on every built-in graph.
pub fn run_selfcheck() -> Result<SelfCheckReport> {
    let mut checks = Vec::new();
    for (name, g) in corpus::builtins() {
        check_graph(name, &g, &mut checks)?;
    }
    Ok(SelfCheckReport { checks })
}

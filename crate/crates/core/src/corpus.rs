//! Named graph families and the built-in test corpus.

use crate::graph::Graph;
use crate::vertex_flip::{build_y, YGraphSpec};

/// Complete graph `K_n`.
pub fn complete(n: usize) -> Graph {
    let pairs: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &pairs).expect("complete graph")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &pairs).expect("path graph")
}

/// Cycle `0 - 1 - ... - (n-1) - 0`, `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "a simple cycle needs at least 3 vertices");
    let mut pairs: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    pairs.push((0, n - 1));
    Graph::new(n, &pairs).expect("cycle graph")
}

/// Star `K_{1,n-1}` on `n` vertices with hub 0.
pub fn star(n: usize) -> Graph {
    let pairs: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Graph::new(n, &pairs).expect("star graph")
}

/// Triangle with a pendant vertex: `n = 4`, `m = 4`.
pub fn paw() -> Graph {
    Graph::new(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).expect("paw graph")
}

fn y(m: usize, attachments: &[usize]) -> Graph {
    build_y(&YGraphSpec::new(m, attachments.to_vec()).expect("valid Y spec"))
}

/// The shipped corpus, in a fixed order.
pub fn builtins() -> Vec<(&'static str, Graph)> {
    vec![
        ("k3", complete(3)),
        ("p3", path(3)),
        ("p4", path(4)),
        ("k1_3", star(4)),
        ("k1_4", star(5)),
        ("c4", cycle(4)),
        ("c5", cycle(5)),
        ("k4", complete(4)),
        ("paw", paw()),
        ("y5_2_4", y(5, &[2, 4])),
        ("y6_4", y(6, &[4])),
        ("y6_2_4", y(6, &[2, 4])),
    ]
}

pub fn builtin(name: &str) -> Option<Graph> {
    builtins().into_iter().find(|(n, _)| *n == name).map(|(_, g)| g)
}

/// One representative of every isomorphism class of connected graphs on
/// exactly `n` vertices (`n <= 6`). Representatives are the lexicographically
/// smallest edge mask over all relabelings.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!((1..=6).contains(&n), "exhaustive generation limited to n <= 6");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let index = |a: usize, b: usize| pairs.iter().position(|&p| p == (a.min(b), a.max(b))).unwrap();
    let perms = permutations(n);
    // relabel tables: for each permutation, the image of every pair slot
    let tables: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| pairs.iter().map(|&(a, b)| index(p[a], p[b])).collect())
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let canonical = tables.iter().all(|t| {
            let mut image = 0u32;
            for (slot, &to) in t.iter().enumerate() {
                if mask >> slot & 1 == 1 {
                    image |= 1 << to;
                }
            }
            image >= mask
        });
        if !canonical {
            continue;
        }
        let edges: Vec<_> = (0..pairs.len())
            .filter(|&s| mask >> s & 1 == 1)
            .map(|s| pairs[s])
            .collect();
        if let Ok(g) = Graph::new(n, &edges) {
            out.push(g);
        }
    }
    out
}

/// Connected graphs up to isomorphism on `1..=max_n` vertices, plus the
/// built-ins, filtered to at most `max_m` edges.
pub fn generated_corpus(max_n: usize, max_m: usize) -> Vec<Graph> {
    let mut out: Vec<Graph> = (1..=max_n).flat_map(connected_graphs).collect();
    out.extend(builtins().into_iter().map(|(_, g)| g));
    out.retain(|g| g.m() <= max_m);
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_class_counts() {
        // OEIS A001349
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn builtin_shapes() {
        let shapes: Vec<(usize, usize)> = builtins().iter().map(|(_, g)| (g.n(), g.m())).collect();
        assert_eq!(
            shapes,
            vec![(3, 3), (3, 2), (4, 3), (4, 3), (5, 4), (4, 4), (5, 5), (4, 6), (4, 4), (5, 5), (6, 5), (6, 6)]
        );
    }
}

//! Finite simple connected graphs with a canonical edge order.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Largest edge count accepted by the exhaustive path searches.
pub const PATH_SEARCH_LIMIT: usize = 20;

/// A finite simple connected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically; the
/// position of a pair in that list is its edge index everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Validates and canonicalizes a vertex count and list of vertex pairs.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        let mut edges = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::NotSimple(a, b));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::NotSimple(w[0].0, w[0].1));
        }
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in &edges {
            neighbors[u].push(v);
            neighbors[v].push(u);
        }
        for list in &mut neighbors {
            list.sort_unstable();
        }
        let g = Graph {
            n,
            edges,
            neighbors,
        };
        if g.bfs_order(0).len() != n {
            return Err(Error::NotConnected);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<(usize, usize)> {
        self.edges.get(index).copied().ok_or(Error::EdgeOutOfRange {
            edge: index,
            m: self.m(),
        })
    }

    /// Canonical index of the edge joining `a` and `b`, if present.
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&(a.min(b), a.max(b))).ok()
    }

    /// Neighbours of `v`, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn check_edge(&self, e: usize) -> Result<()> {
        self.edge(e).map(|_| ())
    }

    pub fn is_adjacent(&self, a: usize, b: usize) -> bool {
        self.neighbors[a].binary_search(&b).is_ok()
    }

    pub fn is_tree(&self) -> bool {
        self.m() + 1 == self.n
    }

    /// Cycle rank `m - n + 1`: the number of edges outside any spanning tree.
    pub fn cycle_rank(&self) -> usize {
        self.m() + 1 - self.n
    }

    fn bfs_order(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut order = vec![start];
        seen[start] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in &self.neighbors[v] {
                if !seen[w] {
                    seen[w] = true;
                    order.push(w);
                }
            }
        }
        order
    }
}

/// The edge indices of a spanning tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpanningTree {
    edges: Vec<usize>,
    member: Vec<bool>,
}

impl SpanningTree {
    /// Validates an arbitrary edge subset as a spanning tree of `g`.
    pub fn from_edges(g: &Graph, edges: &[usize]) -> Result<Self> {
        let mut sorted = edges.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() + 1 != g.n() {
            return Err(Error::InvalidTree(format!(
                "{} edges given, a spanning tree of this graph has {}",
                sorted.len(),
                g.n() - 1
            )));
        }
        let mut uf = UnionFind::new(g.n());
        for &e in &sorted {
            let (u, v) = g.edge(e)?;
            if !uf.union(u, v) {
                return Err(Error::InvalidTree(format!("edge {e} closes a cycle")));
            }
        }
        let mut member = vec![false; g.m()];
        for &e in &sorted {
            member[e] = true;
        }
        Ok(SpanningTree {
            edges: sorted,
            member,
        })
    }

    /// Edge indices, ascending.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn contains(&self, e: usize) -> bool {
        self.member.get(e).copied().unwrap_or(false)
    }

    /// Edges outside the tree, ascending.
    pub fn cotree_edges(&self) -> Vec<usize> {
        (0..self.member.len()).filter(|&e| !self.member[e]).collect()
    }

    /// The unique tree path from `from` to `to` as a vertex sequence.
    pub fn path(&self, g: &Graph, from: usize, to: usize) -> Result<Vec<usize>> {
        g.check_vertex(from)?;
        g.check_vertex(to)?;
        let mut parent = vec![usize::MAX; g.n()];
        parent[from] = from;
        let mut queue = VecDeque::from([from]);
        while let Some(v) = queue.pop_front() {
            if v == to {
                break;
            }
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX && self.contains(g.edge_index(v, w).unwrap()) {
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let mut path = vec![to];
        let mut v = to;
        while v != from {
            v = parent[v];
            path.push(v);
        }
        path.reverse();
        Ok(path)
    }
}

/// Breadth-first spanning tree from vertex 0, visiting neighbours in
/// ascending label order.
pub fn spanning_tree(g: &Graph) -> SpanningTree {
    let mut seen = vec![false; g.n()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    let mut tree = Vec::with_capacity(g.n() - 1);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                tree.push(g.edge_index(v, w).expect("neighbour without edge"));
                queue.push_back(w);
            }
        }
    }
    SpanningTree::from_edges(g, &tree).expect("BFS tree of a connected graph")
}

/// Every spanning tree of `g`, by exhaustive subset search. Desk scale only.
pub fn all_spanning_trees(g: &Graph) -> Result<Vec<SpanningTree>> {
    if g.m() > PATH_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "m",
            value: g.m(),
            limit: PATH_SEARCH_LIMIT,
        });
    }
    let k = g.n() - 1;
    let mut trees = Vec::new();
    for mask in 0u32..(1u32 << g.m()) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let edges: Vec<usize> = (0..g.m()).filter(|&e| mask >> e & 1 == 1).collect();
        if let Ok(t) = SpanningTree::from_edges(g, &edges) {
            trees.push(t);
        }
    }
    Ok(trees)
}

/// Line graph: vertex `i` is edge `i` of `g`; two vertices are adjacent when
/// the corresponding edges share exactly one endpoint.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    if g.m() == 0 {
        return Err(Error::InvalidArgument(
            "line graph of an edgeless graph has no vertices".into(),
        ));
    }
    let mut pairs = Vec::new();
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        for (j, &(c, d)) in g.edges().iter().enumerate().skip(i + 1) {
            let shared = usize::from(a == c || a == d) + usize::from(b == c || b == d);
            if shared == 1 {
                pairs.push((i, j));
            }
        }
    }
    Graph::new(g.m(), &pairs)
}

fn check_k(k: usize, max: usize, what: &str) -> Result<()> {
    if k == 0 || k > max {
        return Err(Error::InvalidArgument(format!(
            "path length {k} outside 1..={max} {what}"
        )));
    }
    Ok(())
}

/// Whether `g` contains a simple path with exactly `k` edges.
pub fn has_path_of_k_edges(g: &Graph, k: usize) -> Result<bool> {
    if g.m() > PATH_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "m",
            value: g.m(),
            limit: PATH_SEARCH_LIMIT,
        });
    }
    check_k(k, g.m(), "edges")?;

    fn extend(g: &Graph, v: usize, remaining: usize, on_path: &mut [bool]) -> bool {
        if remaining == 0 {
            return true;
        }
        for &w in g.neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                let found = extend(g, w, remaining - 1, on_path);
                on_path[w] = false;
                if found {
                    return true;
                }
            }
        }
        false
    }

    let mut on_path = vec![false; g.n()];
    Ok((0..g.n()).any(|start| {
        on_path[start] = true;
        let found = extend(g, start, k, &mut on_path);
        on_path[start] = false;
        found
    }))
}

/// Whether some `k` vertices of `g` induce a path.
pub fn has_induced_path_of_k_vertices(g: &Graph, k: usize) -> Result<bool> {
    if g.n() > PATH_SEARCH_LIMIT {
        return Err(Error::SizeLimit {
            what: "n",
            value: g.n(),
            limit: PATH_SEARCH_LIMIT,
        });
    }
    check_k(k, g.n(), "vertices")?;

    // grows paths whose newest vertex is adjacent to the previous one and to
    // no earlier one, which is exactly the induced-path condition
    fn extend(g: &Graph, path: &mut Vec<usize>, k: usize) -> bool {
        if path.len() == k {
            return true;
        }
        let last = *path.last().unwrap();
        for &w in g.neighbors(last) {
            if path.contains(&w) {
                continue;
            }
            let chordless = path[..path.len() - 1].iter().all(|&p| !g.is_adjacent(p, w));
            if chordless {
                path.push(w);
                let found = extend(g, path, k);
                path.pop();
                if found {
                    return true;
                }
            }
        }
        false
    }

    Ok((0..g.n()).any(|start| extend(g, &mut vec![start], k)))
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut cur = x;
        while self.parent[cur] != root {
            let next = self.parent[cur];
            self.parent[cur] = root;
            cur = next;
        }
        root
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

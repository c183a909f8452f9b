//! Vertex flipping: a lit vertex toggles all of its neighbours.
//!
//! Edge flipping on `X` is vertex flipping on the line graph `L(X)` with
//! edge `i` of `X` playing vertex `i` of `L(X)`; the two generator sets are
//! literally the same matrices. The one-hub family `Y` (a path `1 - ... -
//! (m-1)` plus edges from vertex `0` to chosen path vertices) has an integer
//! invariant that pins down its vertex-flipping group in four cases.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::edge_space::{EdgeSet, VertexSet};
use crate::error::{Error, Result};
use crate::graph::{line_graph, Graph};
use crate::matrix::{cayley_order, FlipGenerator};
use crate::perm::Permutation;
use crate::structure::factorial;

/// `s_v`: if `v` is lit, toggle its neighbourhood.
pub fn vertex_move(g: &Graph, u: &VertexSet, v: usize) -> Result<VertexSet> {
    g.check_vertex(v)?;
    if u.universe() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: u.universe(),
        });
    }
    let mut out = u.clone();
    if u.contains(v) {
        for &w in g.neighbors(v) {
            out.toggle(w);
        }
    }
    Ok(out)
}

pub fn vertex_generator(g: &Graph, v: usize) -> Result<FlipGenerator> {
    g.check_vertex(v)?;
    Ok(FlipGenerator::new(
        v,
        VertexSet::from_members(g.n(), g.neighbors(v).iter().copied()).into_bits(),
    ))
}

pub fn vertex_generators(g: &Graph) -> Vec<FlipGenerator> {
    (0..g.n()).map(|v| vertex_generator(g, v).unwrap()).collect()
}

/// Order of the vertex-flipping group by Cayley enumeration.
pub fn vertex_group_order_bruteforce(g: &Graph, cap: usize) -> Result<BigUint> {
    Ok(BigUint::from(cayley_order(g.n(), &vertex_generators(g), cap)?))
}

/// Edge configurations of `X` and vertex configurations of `L(X)` under the
/// index bijection.
#[derive(Clone, Debug)]
pub struct LineGraphTransport {
    source: Graph,
    line: Graph,
}

impl LineGraphTransport {
    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn line(&self) -> &Graph {
        &self.line
    }

    /// Line-graph vertex for each source edge; the identity by construction.
    pub fn mapping(&self) -> Vec<usize> {
        (0..self.source.m()).collect()
    }

    pub fn to_vertices(&self, config: &EdgeSet) -> Result<VertexSet> {
        if config.universe() != self.source.m() {
            return Err(Error::DimensionMismatch {
                expected: self.source.m(),
                found: config.universe(),
            });
        }
        Ok(VertexSet::from_bits(config.bits().clone()))
    }

    pub fn to_edges(&self, set: &VertexSet) -> Result<EdgeSet> {
        if set.universe() != self.line.n() {
            return Err(Error::DimensionMismatch {
                expected: self.line.n(),
                found: set.universe(),
            });
        }
        Ok(EdgeSet::from_bits(set.bits().clone()))
    }
}

pub fn line_graph_transport(x: &Graph) -> Result<LineGraphTransport> {
    Ok(LineGraphTransport {
        line: line_graph(x)?,
        source: x.clone(),
    })
}

/// A member of the one-hub family: `m` vertices, path on `1..m`, and hub
/// `0` joined to each listed path vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct YGraphSpec {
    m: usize,
    attachments: Vec<usize>,
}

impl YGraphSpec {
    pub fn new(m: usize, attachments: Vec<usize>) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidSpec(why));
        if m < 2 {
            return bad(format!("need at least 2 vertices, got {m}"));
        }
        if attachments.is_empty() {
            return bad("the hub needs at least one attachment".into());
        }
        if attachments.windows(2).any(|w| w[0] >= w[1]) {
            return bad(format!("attachments {attachments:?} must be strictly increasing"));
        }
        if attachments.iter().any(|&i| i == 0 || i >= m) {
            return bad(format!("attachments {attachments:?} must lie in 1..={}", m - 1));
        }
        Ok(YGraphSpec { m, attachments })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn attachments(&self) -> &[usize] {
        &self.attachments
    }
}

impl fmt::Display for YGraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.attachments.iter().map(usize::to_string).collect();
        write!(f, "Y(m={}, {{{}}})", self.m, parts.join(","))
    }
}

pub fn build_y(spec: &YGraphSpec) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (1..spec.m - 1).map(|j| (j, j + 1)).collect();
    pairs.extend(spec.attachments.iter().map(|&i| (0, i)));
    Graph::new(spec.m, &pairs).expect("a valid spec always yields a connected simple graph")
}

/// Alternating sum `-i_1 + i_2 - ...`, plus `m` when the number of
/// attachments is odd. Always in `1..m`.
pub fn pi1(spec: &YGraphSpec) -> usize {
    let signed: i64 = spec
        .attachments
        .iter()
        .enumerate()
        .map(|(t, &i)| if t % 2 == 0 { -(i as i64) } else { i as i64 })
        .sum();
    let value = if spec.attachments.len() % 2 == 1 {
        signed + spec.m as i64
    } else {
        signed
    };
    assert!(
        (1..spec.m as i64).contains(&value),
        "invariant {value} out of range for {spec}"
    );
    value as usize
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexGroupDescriptor {
    Symmetric { degree: usize },
    SemidirectTwoGroup { exponent: usize, degree: usize },
    UnclassifiedByPi1 { pi1: usize },
}

impl VertexGroupDescriptor {
    /// Group order, when the group is identified.
    pub fn order(&self) -> Option<BigUint> {
        match *self {
            VertexGroupDescriptor::Symmetric { degree } => Some(factorial(degree)),
            VertexGroupDescriptor::SemidirectTwoGroup { exponent, degree } => {
                Some((BigUint::one() << exponent) * factorial(degree))
            }
            VertexGroupDescriptor::UnclassifiedByPi1 { .. } => None,
        }
    }
}

impl fmt::Display for VertexGroupDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexGroupDescriptor::Symmetric { degree } => write!(f, "S_{degree}"),
            VertexGroupDescriptor::SemidirectTwoGroup { exponent, degree } => {
                write!(f, "(Z/2Z)^{exponent} x| S_{degree}")
            }
            VertexGroupDescriptor::UnclassifiedByPi1 { pi1 } => write!(f, "unclassified (pi1 = {pi1})"),
        }
    }
}

pub fn classify_y(spec: &YGraphSpec) -> Result<VertexGroupDescriptor> {
    let m = spec.m;
    if m < 3 {
        return Err(Error::InvalidSpec(format!(
            "group classification needs m >= 3, got {m}"
        )));
    }
    let p = pi1(spec);
    Ok(if p == 1 || p == m - 1 {
        VertexGroupDescriptor::Symmetric { degree: m + 1 }
    } else if p == 2 || p == m - 2 {
        VertexGroupDescriptor::SemidirectTwoGroup {
            exponent: if m % 2 == 1 { m - 1 } else { m - 2 },
            degree: m,
        }
    } else {
        VertexGroupDescriptor::UnclassifiedByPi1 { pi1: p }
    })
}

/// Every one-hub parameter set on `m` vertices, attachments in ascending bitmask order.
pub fn all_y_specs(m: usize) -> Vec<YGraphSpec> {
    assert!((2..=24).contains(&m), "spec enumeration needs 2 <= m <= 24");
    (1u32..1 << (m - 1))
        .map(|mask| {
            let attachments = (0..m - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 1).collect();
            YGraphSpec::new(m, attachments).unwrap()
        })
        .collect()
}

/// A path `0 - 1 - ... - (m-1)` with one extra edge, its line graph, and a
/// matching member of the one-hub family.
#[derive(Clone, Debug)]
pub struct PathPlusEdge {
    pub graph: Graph,
    /// Endpoints of the extra edge; the second is a new vertex `m` for a
    /// pendant edge.
    pub extra: (usize, usize),
    pub spec: YGraphSpec,
    /// `relabel[i]` is the hub-family vertex playing line-graph vertex `i`.
    pub relabel: Vec<usize>,
}

impl PathPlusEdge {
    /// Whether `relabel` carries the line graph exactly onto the one-hub graph.
    pub fn verify(&self) -> Result<bool> {
        let line = line_graph(&self.graph)?;
        let y = build_y(&self.spec);
        if line.n() != y.n() || line.m() != y.m() || Permutation::new(self.relabel.clone()).is_err() {
            return Ok(false);
        }
        Ok(line
            .edges()
            .iter()
            .all(|&(a, b)| y.is_adjacent(self.relabel[a], self.relabel[b])))
    }
}

/// All ways to add one edge to the path on `m` vertices (`m - 1` edges):
/// a chord between two vertices at distance at least 2, or a pendant edge to
/// a new vertex. The line graph always has `m` vertices.
pub fn path_plus_edge_family(m: usize) -> Result<Vec<PathPlusEdge>> {
    if m < 3 {
        return Err(Error::InvalidArgument(format!("family needs m >= 3, got {m}")));
    }
    let path: Vec<(usize, usize)> = (1..m).map(|v| (v - 1, v)).collect();
    let mut extras: Vec<(usize, usize)> = (0..m)
        .flat_map(|a| (a + 2..m).map(move |b| (a, b)))
        .collect();
    extras.extend((0..m).map(|a| (a, m)));
    let mut out = Vec::new();
    for (a, b) in extras {
        let pendant = b == m;
        let n = if pendant { m + 1 } else { m };
        let mut pairs = path.clone();
        pairs.push((a, b));
        let graph = Graph::new(n, &pairs)?;
        // path edge {j, j+1} becomes path vertex j + 1, the extra edge the hub
        let relabel: Vec<usize> = graph
            .edges()
            .iter()
            .map(|&(u, v)| if (u, v) == (a, b) { 0 } else { u + 1 })
            .collect();
        // the extra edge meets path edges {a-1,a} and {a,a+1}, and for a chord
        // also {b-1,b} and {b,b+1}; those that exist become attachments
        let mut attachments: Vec<usize> = vec![a, a + 1];
        if !pendant {
            attachments.extend([b, b + 1]);
        }
        attachments.retain(|&i| (1..m).contains(&i));
        let spec = YGraphSpec::new(m, attachments)?;
        out.push(PathPlusEdge {
            graph,
            extra: (a, b),
            spec,
            relabel,
        });
    }
    Ok(out)
}

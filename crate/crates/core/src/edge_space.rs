//! Edge space and bond space of a graph over GF(2).
//!
//! An [`EdgeSet`] is a subset of edges, i.e. a vector of the edge space with
//! symmetric difference as addition. The bond space is the span of the vertex
//! cuts `E(v)`; it has dimension `n - 1` and the cuts `E(v)` for `v != 0` form
//! its simple basis.

use std::fmt;

use crate::bits::{BitVec, Echelon};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree};

macro_rules! gf2_set {
    ($name:ident, $what:literal) => {
        #[doc = concat!("A subset of ", $what, ", viewed as a GF(2) vector indexed by label.")]
        #[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(BitVec);

        impl $name {
            pub fn empty(len: usize) -> Self {
                $name(BitVec::zeros(len))
            }

            /// Set containing the listed members; repeated members cancel.
            pub fn from_members<I: IntoIterator<Item = usize>>(len: usize, members: I) -> Self {
                $name(BitVec::from_indices(len, members))
            }

            pub fn from_bits(bits: BitVec) -> Self {
                $name(bits)
            }

            pub fn bits(&self) -> &BitVec {
                &self.0
            }

            pub fn into_bits(self) -> BitVec {
                self.0
            }

            /// Dimension of the ambient space.
            pub fn universe(&self) -> usize {
                self.0.len()
            }

            pub fn contains(&self, i: usize) -> bool {
                i < self.0.len() && self.0.get(i)
            }

            pub fn count(&self) -> usize {
                self.0.count_ones()
            }

            pub fn is_empty(&self) -> bool {
                self.0.is_zero()
            }

            pub fn toggle(&mut self, i: usize) {
                self.0.toggle(i);
            }

            /// Members in ascending order.
            pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
                self.0.ones()
            }

            /// Symmetric difference, i.e. GF(2) addition.
            pub fn sym_diff(&self, other: &Self) -> Result<Self> {
                if self.universe() != other.universe() {
                    return Err(Error::DimensionMismatch {
                        expected: self.universe(),
                        found: other.universe(),
                    });
                }
                Ok($name(self.0.xor(&other.0)))
            }

            /// In-place symmetric difference. Panics on a dimension mismatch.
            pub fn add_assign(&mut self, other: &Self) {
                self.0.xor_assign(&other.0);
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.members()).finish()
            }
        }
    };
}

gf2_set!(EdgeSet, "the edges of a graph");
gf2_set!(VertexSet, "the vertices of a graph");

/// The vertex cut `E(v)`: edges incident to `v`.
pub fn vertex_cut(g: &Graph, v: usize) -> Result<EdgeSet> {
    g.check_vertex(v)?;
    Ok(EdgeSet::from_members(
        g.m(),
        g.neighbors(v).iter().map(|&w| g.edge_index(v, w).unwrap()),
    ))
}

/// The edge cut `E(U)`: edges with exactly one endpoint in `U`.
pub fn edge_cut(g: &Graph, u: &VertexSet) -> Result<EdgeSet> {
    if u.universe() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: u.universe(),
        });
    }
    Ok(EdgeSet::from_members(
        g.m(),
        g.edges()
            .iter()
            .enumerate()
            .filter(|(_, &(a, b))| u.contains(a) != u.contains(b))
            .map(|(i, _)| i),
    ))
}

/// `E(ε) = E({x, y})` for the edge `ε = {x, y}`: the edges sharing exactly one
/// endpoint with `ε`.
pub fn edge_neighborhood(g: &Graph, e: usize) -> Result<EdgeSet> {
    let (x, y) = g.edge(e)?;
    let mut cut = vertex_cut(g, x)?;
    cut.add_assign(&vertex_cut(g, y)?);
    Ok(cut)
}

/// All vertex cuts `E(0), ..., E(n-1)`.
pub fn vertex_cuts(g: &Graph) -> Vec<EdgeSet> {
    (0..g.n()).map(|v| vertex_cut(g, v).unwrap()).collect()
}

/// The simple basis `{E(v) | v != 0}` of the bond space, anchored at vertex 0,
/// with its reduced echelon form cached for decomposition queries.
#[derive(Clone, Debug)]
pub struct SimpleBasis {
    n: usize,
    m: usize,
    cuts: Vec<EdgeSet>,
    echelon: Echelon,
}

impl SimpleBasis {
    pub const ANCHOR: usize = 0;

    pub fn new(g: &Graph) -> Result<Self> {
        if g.n() < 2 {
            return Err(Error::InvalidArgument(
                "the bond space of a one-vertex graph is trivial".into(),
            ));
        }
        let cuts = vertex_cuts(g);
        let vectors: Vec<BitVec> = cuts[1..].iter().map(|c| c.bits().clone()).collect();
        let echelon = Echelon::new(g.m(), &vectors);
        assert_eq!(
            echelon.rank(),
            g.n() - 1,
            "vertex cuts of a connected graph must have rank n - 1"
        );
        Ok(SimpleBasis {
            n: g.n(),
            m: g.m(),
            cuts,
            echelon,
        })
    }

    pub fn anchor(&self) -> usize {
        Self::ANCHOR
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Basis vectors `E(1), ..., E(n-1)` in vertex order.
    pub fn vectors(&self) -> &[EdgeSet] {
        &self.cuts[1..]
    }

    /// The vertex cut `E(v)` for any vertex, anchor included.
    pub fn cut(&self, v: usize) -> &EdgeSet {
        &self.cuts[v]
    }

    pub fn cuts(&self) -> &[EdgeSet] {
        &self.cuts
    }

    /// The unique `S ⊆ V - {0}` with `sum_{v in S} E(v) == target`, or
    /// [`Error::NotInBond`].
    pub fn decompose(&self, target: &EdgeSet) -> Result<VertexSet> {
        if target.universe() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: target.universe(),
            });
        }
        let coeffs = self.echelon.decompose(target.bits()).ok_or(Error::NotInBond)?;
        Ok(VertexSet::from_members(self.n, coeffs.ones().map(|i| i + 1)))
    }

    pub fn contains(&self, target: &EdgeSet) -> bool {
        target.universe() == self.m && self.echelon.contains(target.bits())
    }

    /// Simple weight: the size of the decomposition.
    pub fn simple_weight(&self, target: &EdgeSet) -> Result<usize> {
        Ok(self.decompose(target)?.count())
    }

    /// `sum_{v in S} E(v)`.
    pub fn compose(&self, set: &VertexSet) -> EdgeSet {
        let mut out = EdgeSet::empty(self.m);
        for v in set.members() {
            out.add_assign(&self.cuts[v]);
        }
        out
    }
}

pub fn simple_basis(g: &Graph) -> Result<SimpleBasis> {
    SimpleBasis::new(g)
}

pub fn delta_decompose(b: &SimpleBasis, target: &EdgeSet) -> Result<VertexSet> {
    b.decompose(target)
}

pub fn simple_weight(b: &SimpleBasis, target: &EdgeSet) -> Result<usize> {
    b.simple_weight(target)
}

/// Solver for coset representatives: a basis of the whole edge space made of
/// the simple basis followed by the singletons of the edges outside `T`.
#[derive(Clone, Debug)]
pub struct CosetBasis {
    n: usize,
    m: usize,
    cotree: Vec<usize>,
    echelon: Echelon,
}

impl CosetBasis {
    pub fn new(g: &Graph, tree: &SpanningTree) -> Self {
        let cotree = tree.cotree_edges();
        let mut vectors: Vec<BitVec> = (1..g.n())
            .map(|v| vertex_cut(g, v).unwrap().into_bits())
            .collect();
        vectors.extend(cotree.iter().map(|&e| BitVec::unit(g.m(), e)));
        let echelon = Echelon::new(g.m(), &vectors);
        assert_eq!(
            echelon.rank(),
            g.m(),
            "simple basis plus cotree singletons must span the edge space"
        );
        CosetBasis {
            n: g.n(),
            m: g.m(),
            cotree,
            echelon,
        }
    }

    /// Edges outside the tree, ascending.
    pub fn cotree(&self) -> &[usize] {
        &self.cotree
    }

    /// The unique `F ⊆ E - T` with `config + F` in the bond space.
    pub fn representative(&self, config: &EdgeSet) -> Result<EdgeSet> {
        if config.universe() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: config.universe(),
            });
        }
        let coeffs = self
            .echelon
            .decompose(config.bits())
            .expect("full-rank basis decomposes everything");
        let offset = self.n - 1;
        Ok(EdgeSet::from_members(
            self.m,
            coeffs
                .ones()
                .filter(|&i| i >= offset)
                .map(|i| self.cotree[i - offset]),
        ))
    }
}

pub fn coset_representative(g: &Graph, tree: &SpanningTree, config: &EdgeSet) -> Result<EdgeSet> {
    CosetBasis::new(g, tree).representative(config)
}

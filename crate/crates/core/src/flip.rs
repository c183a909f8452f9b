//! The edge-flipping action: moves, their matrices, words, and the
//! homomorphism `alpha` onto the symmetric group on the vertex cuts.
//!
//! Configurations are column vectors acted on from the left. A word lists
//! moves in application order, so the word `[a, b]` is the element
//! `rho_b * rho_a`.

use std::collections::HashMap;
use std::fmt;

use crate::bits::BitVec;
use crate::edge_space::{edge_neighborhood, vertex_cuts, EdgeSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, SpanningTree};
use crate::matrix::{cayley_closure, cayley_order, FlipGenerator, Gf2Matrix};
use crate::perm::Permutation;

/// Default element budget for Cayley-graph enumeration.
pub const DEFAULT_GROUP_CAP: usize = 2_000_000;

/// An element of the edge-flipping group, as an `m x m` matrix over GF(2).
pub type GroupElement = Gf2Matrix;

/// Selecting the edge with this canonical index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Move(pub usize);

/// Moves in application order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSequence(pub Vec<Move>);

impl MoveSequence {
    pub fn new(edges: impl IntoIterator<Item = usize>) -> Self {
        MoveSequence(edges.into_iter().map(Move).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().map(|m| m.0)
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.edges().map(|e| e.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// The generator of edge `e` as a flip: black `e` toggles `E(e)`.
pub fn flip_generator(g: &Graph, e: usize) -> Result<FlipGenerator> {
    let toggle = edge_neighborhood(g, e)?;
    Ok(FlipGenerator::new(e, toggle.into_bits()))
}

/// Generators for every edge, in canonical order.
pub fn flip_generators(g: &Graph) -> Vec<FlipGenerator> {
    (0..g.m()).map(|e| flip_generator(g, e).unwrap()).collect()
}

fn check_config(g: &Graph, config: &EdgeSet) -> Result<()> {
    if config.universe() != g.m() {
        return Err(Error::DimensionMismatch {
            expected: g.m(),
            found: config.universe(),
        });
    }
    Ok(())
}

/// One move: if the selected edge is black, every edge sharing exactly one
/// endpoint with it changes colour; otherwise nothing happens.
pub fn apply_move(g: &Graph, config: &EdgeSet, mv: Move) -> Result<EdgeSet> {
    check_config(g, config)?;
    let toggle = edge_neighborhood(g, mv.0)?;
    if config.contains(mv.0) {
        config.sym_diff(&toggle)
    } else {
        Ok(config.clone())
    }
}

/// Matrix of the move on edge `e`.
pub fn generator(g: &Graph, e: usize) -> Result<GroupElement> {
    Ok(flip_generator(g, e)?.matrix())
}

/// `a ∘ b`: first `b`, then `a`.
pub fn compose(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    a.mul(b)
}

pub fn identity(g: &Graph) -> GroupElement {
    Gf2Matrix::identity(g.m())
}

/// The group element performing the moves of `word` in order.
pub fn element_of_word(g: &Graph, word: &MoveSequence) -> Result<GroupElement> {
    let mut elem = identity(g);
    for e in word.edges() {
        elem.left_apply_flip(&flip_generator(g, e)?);
    }
    Ok(elem)
}

/// Lookup from vertex cut to vertex, valid for `n >= 3` where the cuts are
/// pairwise distinct.
#[derive(Clone, Debug)]
pub struct CutIndex {
    cuts: Vec<EdgeSet>,
    by_cut: HashMap<BitVec, usize>,
}

impl CutIndex {
    pub fn new(g: &Graph) -> Result<Self> {
        if g.n() < 3 {
            return Err(Error::DegreeTooSmall { n: g.n() });
        }
        let cuts = vertex_cuts(g);
        let by_cut = cuts
            .iter()
            .enumerate()
            .map(|(v, c)| (c.bits().clone(), v))
            .collect::<HashMap<_, _>>();
        debug_assert_eq!(by_cut.len(), g.n());
        Ok(CutIndex { cuts, by_cut })
    }

    pub fn vertex_of(&self, cut: &EdgeSet) -> Option<usize> {
        self.by_cut.get(cut.bits()).copied()
    }

    pub fn cut(&self, v: usize) -> &EdgeSet {
        &self.cuts[v]
    }

    /// The permutation `v -> w` with `elem E(v) == E(w)`.
    pub fn alpha(&self, elem: &GroupElement) -> Result<Permutation> {
        if elem.dim() != self.cuts.first().map_or(0, EdgeSet::universe) {
            return Err(Error::DimensionMismatch {
                expected: self.cuts[0].universe(),
                found: elem.dim(),
            });
        }
        let images = self
            .cuts
            .iter()
            .enumerate()
            .map(|(v, cut)| {
                let image = EdgeSet::from_bits(elem.apply(cut.bits()));
                self.vertex_of(&image).ok_or(Error::NotAVertexCutImage { vertex: v })
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(images).map_err(|_| Error::NotAVertexCutImage { vertex: 0 })
    }
}

/// How `elem` permutes the vertex cuts.
pub fn alpha(g: &Graph, elem: &GroupElement) -> Result<Permutation> {
    CutIndex::new(g)?.alpha(elem)
}

/// A word in tree-edge moves whose image under `alpha` is the transposition
/// of `E(u)` and `E(v)`: along the tree path `u = u_0, ..., u_k = v` with
/// edges `e_i = {u_i, u_{i+1}}` it is `[e_{k-1}, ..., e_1, e_0, e_1, ..., e_{k-1}]`.
pub fn word_for_transposition(g: &Graph, tree: &SpanningTree, u: usize, v: usize) -> Result<MoveSequence> {
    if g.n() < 3 {
        return Err(Error::DegreeTooSmall { n: g.n() });
    }
    if u == v {
        g.check_vertex(u)?;
        return Err(Error::SameVertex);
    }
    let path = tree.path(g, u, v)?;
    let steps: Vec<usize> = path
        .windows(2)
        .map(|w| g.edge_index(w[0], w[1]).expect("tree path edge"))
        .collect();
    let k = steps.len();
    let word = (0..k).rev().chain(1..k).map(|i| steps[i]);
    Ok(MoveSequence::new(word))
}

/// All elements of the subgroup generated by the moves on `gens`.
pub fn generate_subgroup(g: &Graph, gens: &[usize], cap: usize) -> Result<Vec<GroupElement>> {
    let flips = gens
        .iter()
        .map(|&e| flip_generator(g, e))
        .collect::<Result<Vec<_>>>()?;
    cayley_closure(g.m(), &flips, cap)
}

/// Order of the subgroup generated by the moves on `gens`.
pub fn subgroup_order(g: &Graph, gens: &[usize], cap: usize) -> Result<usize> {
    let flips = gens
        .iter()
        .map(|&e| flip_generator(g, e))
        .collect::<Result<Vec<_>>>()?;
    cayley_order(g.m(), &flips, cap)
}

/// Order of the full edge-flipping group by Cayley enumeration.
pub fn group_order_bruteforce(g: &Graph, cap: usize) -> Result<usize> {
    cayley_order(g.m(), &flip_generators(g), cap)
}

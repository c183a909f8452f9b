//! Closed-form orbits of the edge-flipping group on configurations.
//!
//! Every configuration splits uniquely as `F + G` with `F` a subset of the
//! edges outside the spanning tree and `G` in the bond space. The orbit is
//! determined by `F` together with:
//!
//! * for `F` empty, the simple weight of `G` up to `i <-> n - i`;
//! * for `F` nonempty and `n` odd, nothing else (the whole coset);
//! * for `F` nonempty and `n` even, the parity of the simple weight of `G`.
//!
//! Brute-force enumeration lives here too, but only as a test oracle.

use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rustc_hash::FxHashSet;

use crate::edge_space::{CosetBasis, EdgeSet, SimpleBasis};
use crate::error::{Error, Result};
use crate::flip::{flip_generator, flip_generators};
use crate::graph::{spanning_tree, Graph, SpanningTree};
use crate::matrix::FlipGenerator;

/// Which orbit inside a coset of the bond space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrbitClass {
    /// Bond-space orbit of simple weight `i` or `n - i`, normalized to the smaller.
    SimpleWeight(usize),
    /// A whole nonzero coset (`n` odd).
    FullCoset,
    /// Even simple weight half of a nonzero coset (`n` even).
    EvenPart,
    /// Odd simple weight half of a nonzero coset (`n` even).
    OddPart,
}

impl OrbitClass {
    /// Stable label used in JSON output.
    pub fn label(&self) -> String {
        match self {
            OrbitClass::SimpleWeight(i) => format!("SW({i})"),
            OrbitClass::FullCoset => "full".into(),
            OrbitClass::EvenPart => "even".into(),
            OrbitClass::OddPart => "odd".into(),
        }
    }

    pub fn parse(label: &str) -> Result<Self> {
        match label {
            "full" => Ok(OrbitClass::FullCoset),
            "even" => Ok(OrbitClass::EvenPart),
            "odd" => Ok(OrbitClass::OddPart),
            _ => label
                .strip_prefix("SW(")
                .and_then(|rest| rest.strip_suffix(')'))
                .and_then(|i| i.parse().ok())
                .map(OrbitClass::SimpleWeight)
                .ok_or_else(|| Error::Parse(format!("unknown orbit class {label:?}"))),
        }
    }
}

impl fmt::Display for OrbitClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// Canonical name of an orbit: coset representative plus class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrbitDescriptor {
    pub coset_rep: EdgeSet,
    pub class: OrbitClass,
}

/// A graph together with the spanning tree, simple basis and coset solver
/// every orbit query needs.
#[derive(Clone, Debug)]
pub struct Puzzle {
    graph: Graph,
    tree: SpanningTree,
    basis: SimpleBasis,
    cosets: CosetBasis,
    generators: Vec<FlipGenerator>,
}

impl Puzzle {
    /// Uses the breadth-first spanning tree.
    pub fn new(graph: Graph) -> Result<Self> {
        let tree = spanning_tree(&graph);
        Self::with_tree(graph, tree)
    }

    pub fn with_tree(graph: Graph, tree: SpanningTree) -> Result<Self> {
        let basis = SimpleBasis::new(&graph)?;
        let cosets = CosetBasis::new(&graph, &tree);
        let generators = flip_generators(&graph);
        Ok(Puzzle {
            graph,
            tree,
            basis,
            cosets,
            generators,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn tree(&self) -> &SpanningTree {
        &self.tree
    }

    pub fn basis(&self) -> &SimpleBasis {
        &self.basis
    }

    pub fn cosets(&self) -> &CosetBasis {
        &self.cosets
    }

    pub fn generators(&self) -> &[FlipGenerator] {
        &self.generators
    }

    fn n(&self) -> usize {
        self.graph.n()
    }

    fn require_three(&self) -> Result<()> {
        if self.n() < 3 {
            Err(Error::DegreeTooSmall { n: self.n() })
        } else {
            Ok(())
        }
    }

    /// Largest normalized simple-weight label, `ceil((n - 1) / 2)`.
    pub fn max_weight_label(&self) -> usize {
        self.n() / 2
    }

    pub fn classify(&self, config: &EdgeSet) -> Result<OrbitDescriptor> {
        self.require_three()?;
        let coset_rep = self.cosets.representative(config)?;
        let bond_part = config.sym_diff(&coset_rep)?;
        let sw = self.basis.simple_weight(&bond_part)?;
        let n = self.n();
        let class = if coset_rep.is_empty() {
            OrbitClass::SimpleWeight(sw.min(n - sw))
        } else if n % 2 == 1 {
            OrbitClass::FullCoset
        } else if sw % 2 == 0 {
            OrbitClass::EvenPart
        } else {
            OrbitClass::OddPart
        };
        Ok(OrbitDescriptor { coset_rep, class })
    }

    pub fn same_orbit(&self, a: &EdgeSet, b: &EdgeSet) -> Result<bool> {
        Ok(self.classify(a)? == self.classify(b)?)
    }

    fn validate(&self, desc: &OrbitDescriptor) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidDescriptor(why.to_string()));
        if desc.coset_rep.universe() != self.graph.m() {
            return bad("coset representative has the wrong dimension");
        }
        if desc.coset_rep.members().any(|e| self.tree.contains(e)) {
            return bad("coset representative uses spanning-tree edges");
        }
        let n = self.n();
        match desc.class {
            OrbitClass::SimpleWeight(i) => {
                if !desc.coset_rep.is_empty() {
                    return bad("simple-weight classes belong to the bond space itself");
                }
                if i > self.max_weight_label() {
                    return bad("simple-weight label out of range");
                }
            }
            OrbitClass::FullCoset => {
                if desc.coset_rep.is_empty() || n % 2 == 0 {
                    return bad("full-coset orbits need a nonzero coset and odd n");
                }
            }
            OrbitClass::EvenPart | OrbitClass::OddPart => {
                if desc.coset_rep.is_empty() || n % 2 == 1 {
                    return bad("half-coset orbits need a nonzero coset and even n");
                }
            }
        }
        Ok(())
    }

    /// Number of configurations in the orbit.
    pub fn orbit_size(&self, desc: &OrbitDescriptor) -> Result<BigUint> {
        self.require_three()?;
        self.validate(desc)?;
        let n = self.n();
        Ok(match desc.class {
            OrbitClass::SimpleWeight(i) => {
                let low = binomial(n - 1, i);
                if i == n - i {
                    low
                } else {
                    low + binomial(n - 1, n - i)
                }
            }
            OrbitClass::FullCoset => BigUint::one() << (n - 1),
            OrbitClass::EvenPart | OrbitClass::OddPart => BigUint::one() << (n - 2),
        })
    }

    /// Number of orbits on the whole edge space.
    pub fn orbit_count(&self) -> Result<BigUint> {
        self.require_three()?;
        let halves = if self.n() % 2 == 1 { 1u32 } else { 2 };
        let nonzero_cosets = (BigUint::one() << self.graph.cycle_rank()) - 1u32;
        Ok(BigUint::from(self.max_weight_label() + 1) + nonzero_cosets * halves)
    }

    /// Every orbit descriptor, bond-space orbits first, then cosets in
    /// ascending bitmask order of their representatives.
    pub fn descriptors(&self, limit: usize) -> Result<Vec<OrbitDescriptor>> {
        self.require_three()?;
        let count = self.orbit_count()?;
        if count > BigUint::from(limit) {
            return Err(Error::CapExceeded { cap: limit });
        }
        let m = self.graph.m();
        let mut out: Vec<OrbitDescriptor> = (0..=self.max_weight_label())
            .map(|i| OrbitDescriptor {
                coset_rep: EdgeSet::empty(m),
                class: OrbitClass::SimpleWeight(i),
            })
            .collect();
        let cotree = self.cosets.cotree();
        let classes: &[OrbitClass] = if self.n() % 2 == 1 {
            &[OrbitClass::FullCoset]
        } else {
            &[OrbitClass::EvenPart, OrbitClass::OddPart]
        };
        for mask in 1u64..(1u64 << cotree.len()) {
            let rep = EdgeSet::from_members(m, (0..cotree.len()).filter(|&i| mask >> i & 1 == 1).map(|i| cotree[i]));
            for &class in classes {
                out.push(OrbitDescriptor {
                    coset_rep: rep.clone(),
                    class,
                });
            }
        }
        Ok(out)
    }

    /// Simple weight of `E(e) + rho_e G` predicted from `sw(G)` and the overlap
    /// of `G`'s decomposition with that of `E(e)`, without applying the move.
    /// Here `rho_e G` is `G + E(e)` when `e` is black in `G` and `G` otherwise.
    pub fn sw_update_predict(&self, bond: &EdgeSet, e: usize) -> Result<usize> {
        let delta_g = self.basis.decompose(bond)?;
        let i = delta_g.count();
        let (x, y) = self.graph.edge(e)?;
        let mut cut = self.basis.cut(x).clone();
        cut.add_assign(self.basis.cut(y));
        let delta_e = self.basis.decompose(&cut)?;
        let overlap = delta_g.bits().and(delta_e.bits()).count_ones();
        let anchor = self.basis.anchor();
        let n = self.n();
        Ok(if x != anchor && y != anchor {
            match overlap {
                0 => i + 2,
                1 => i,
                _ => i - 2,
            }
        } else if i >= 1 && overlap == i - 1 {
            i
        } else {
            n - i - 2
        })
    }
}

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigUint::one(), |acc, j| acc * (n - j) / (j + 1))
}

pub fn classify(puzzle: &Puzzle, config: &EdgeSet) -> Result<OrbitDescriptor> {
    puzzle.classify(config)
}

pub fn same_orbit(puzzle: &Puzzle, a: &EdgeSet, b: &EdgeSet) -> Result<bool> {
    puzzle.same_orbit(a, b)
}

pub fn orbit_size(puzzle: &Puzzle, desc: &OrbitDescriptor) -> Result<BigUint> {
    puzzle.orbit_size(desc)
}

pub fn orbit_count(puzzle: &Puzzle) -> Result<BigUint> {
    puzzle.orbit_count()
}

pub fn sw_update_predict(puzzle: &Puzzle, bond: &EdgeSet, e: usize) -> Result<usize> {
    puzzle.sw_update_predict(bond, e)
}

/// Breadth-first closure of `config` under all moves. Sorted.
pub fn enumerate_orbit(g: &Graph, config: &EdgeSet, cap: usize) -> Result<Vec<EdgeSet>> {
    let moves: Vec<usize> = (0..g.m()).collect();
    enumerate_orbit_with_moves(g, config, &moves, cap)
}

/// Breadth-first closure of `config` under the moves on the listed edges only.
pub fn enumerate_orbit_with_moves(g: &Graph, config: &EdgeSet, moves: &[usize], cap: usize) -> Result<Vec<EdgeSet>> {
    if config.universe() != g.m() {
        return Err(Error::DimensionMismatch {
            expected: g.m(),
            found: config.universe(),
        });
    }
    let gens = moves
        .iter()
        .map(|&e| flip_generator(g, e))
        .collect::<Result<Vec<_>>>()?;
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let mut seen = FxHashSet::default();
    seen.insert(config.bits().clone());
    let mut queue = VecDeque::from([config.bits().clone()]);
    while let Some(cur) = queue.pop_front() {
        for gen in &gens {
            if !cur.get(gen.pivot()) {
                continue;
            }
            let next = gen.apply(&cur);
            if !seen.contains(&next) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<EdgeSet> = seen.into_iter().map(EdgeSet::from_bits).collect();
    out.sort();
    Ok(out)
}

/// Partition of all `2^m` configurations by closed-form descriptor; entry
/// `x` (a configuration read as a bitmask) is the smallest mask sharing its
/// descriptor.
pub fn classification_labels(puzzle: &Puzzle) -> Result<Vec<u32>> {
    let m = puzzle.graph().m();
    if m > 24 {
        return Err(Error::SizeLimit {
            what: "m",
            value: m,
            limit: 24,
        });
    }
    let mut first: std::collections::HashMap<OrbitDescriptor, u32> = Default::default();
    (0..1u32 << m)
        .map(|x| {
            let cfg = EdgeSet::from_bits(crate::bits::BitVec::from_u64(m, x as u64));
            let desc = puzzle.classify(&cfg)?;
            Ok(*first.entry(desc).or_insert(x))
        })
        .collect()
}

/// The same partition computed by brute force from the moves on `moves`.
pub fn bfs_labels(g: &Graph, moves: &[usize]) -> Result<Vec<u32>> {
    let gens = moves
        .iter()
        .map(|&e| flip_generator(g, e))
        .collect::<Result<Vec<_>>>()?;
    crate::matrix::orbit_labels(g.m(), &gens)
}

//! The edge-flipping group as a semidirect product.
//!
//! Fix a spanning tree with cotree edges `c_1 < ... < c_r`, `r = m - n + 1`.
//! A group element `g` is recorded as the tuple `({c_i} + g{c_i})_i` of
//! bond-space vectors together with the permutation it induces on the vertex
//! cuts. Permutations act on tuples by relabeling vertex cuts; products
//! twist the right tuple by the left permutation.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edge_space::{EdgeSet, SimpleBasis};
use crate::error::{Error, Result};
use crate::flip::{generate_subgroup, CutIndex, GroupElement};
use crate::graph::{spanning_tree, Graph, SpanningTree};
use crate::perm::Permutation;

/// Groups up to this order get exhaustive homomorphism checks.
pub const EXHAUSTIVE_PAIR_LIMIT: usize = 200;
/// Pairs drawn when the group is too large for exhaustive checks.
pub const SAMPLED_PAIRS: usize = 2000;
const SAMPLE_SEED: u64 = 0x5eed_f11b;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemidirectElement {
    /// One bond-space vector per cotree edge, in ascending edge order.
    pub translations: Vec<EdgeSet>,
    pub perm: Permutation,
}

impl fmt::Debug for SemidirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("").field(&self.translations).field(&self.perm).finish()
    }
}

/// `sigma` acting on a bond-space vector: decompose over the cuts, move each
/// cut `E(v)` to `E(sigma(v))`, add back up.
pub fn theta_apply_one(b: &SimpleBasis, sigma: &Permutation, x: &EdgeSet) -> Result<EdgeSet> {
    if sigma.degree() != b.n() {
        return Err(Error::DimensionMismatch {
            expected: b.n(),
            found: sigma.degree(),
        });
    }
    let coords = b.decompose(x)?;
    let mut out = EdgeSet::empty(b.m());
    for v in coords.members() {
        out.add_assign(b.cut(sigma.apply(v)));
    }
    Ok(out)
}

pub fn theta_apply(b: &SimpleBasis, sigma: &Permutation, tuple: &[EdgeSet]) -> Result<Vec<EdgeSet>> {
    tuple.iter().map(|x| theta_apply_one(b, sigma, x)).collect()
}

/// `(G, s)(H, t) = (G + s.H, s t)`.
pub fn semidirect_mul(b: &SimpleBasis, a: &SemidirectElement, c: &SemidirectElement) -> Result<SemidirectElement> {
    if a.translations.len() != c.translations.len() {
        return Err(Error::DimensionMismatch {
            expected: a.translations.len(),
            found: c.translations.len(),
        });
    }
    let twisted = theta_apply(b, &a.perm, &c.translations)?;
    let translations = a
        .translations
        .iter()
        .zip(&twisted)
        .map(|(x, y)| x.sym_diff(y))
        .collect::<Result<Vec<_>>>()?;
    Ok(SemidirectElement {
        translations,
        perm: a.perm.compose(&c.perm)?,
    })
}

/// Everything needed to map group elements into the product model of one
/// graph with one spanning tree.
#[derive(Clone, Debug)]
pub struct SemidirectModel {
    graph: Graph,
    basis: SimpleBasis,
    cotree: Vec<usize>,
    cuts: CutIndex,
}

impl SemidirectModel {
    pub fn new(graph: Graph) -> Result<Self> {
        let tree = spanning_tree(&graph);
        Self::with_tree(graph, &tree)
    }

    pub fn with_tree(graph: Graph, tree: &SpanningTree) -> Result<Self> {
        let cuts = CutIndex::new(&graph)?;
        let basis = SimpleBasis::new(&graph)?;
        Ok(SemidirectModel {
            cotree: tree.cotree_edges(),
            graph,
            basis,
            cuts,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn basis(&self) -> &SimpleBasis {
        &self.basis
    }

    pub fn cotree(&self) -> &[usize] {
        &self.cotree
    }

    pub fn identity(&self) -> SemidirectElement {
        SemidirectElement {
            translations: vec![EdgeSet::empty(self.graph.m()); self.cotree.len()],
            perm: Permutation::identity(self.graph.n()),
        }
    }

    pub fn theta_apply(&self, sigma: &Permutation, tuple: &[EdgeSet]) -> Result<Vec<EdgeSet>> {
        theta_apply(&self.basis, sigma, tuple)
    }

    pub fn mul(&self, a: &SemidirectElement, c: &SemidirectElement) -> Result<SemidirectElement> {
        semidirect_mul(&self.basis, a, c)
    }

    pub fn gamma(&self, elem: &GroupElement) -> Result<SemidirectElement> {
        let m = self.graph.m();
        if elem.dim() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: elem.dim(),
            });
        }
        let perm = self.cuts.alpha(elem)?;
        let translations = self
            .cotree
            .iter()
            .map(|&c| {
                let unit = EdgeSet::from_members(m, [c]);
                let image = EdgeSet::from_bits(elem.apply(unit.bits()));
                unit.sym_diff(&image)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SemidirectElement { translations, perm })
    }

    /// Whether `x` may appear as a translation: in the bond space, and of
    /// even simple weight when `n` is even.
    pub fn component_allowed(&self, x: &EdgeSet) -> bool {
        match self.basis.simple_weight(x) {
            Ok(w) => self.graph.n() % 2 == 1 || w % 2 == 0,
            Err(_) => false,
        }
    }

    pub fn is_member(&self, elem: &SemidirectElement) -> bool {
        elem.translations.len() == self.cotree.len()
            && elem.perm.degree() == self.graph.n()
            && elem.translations.iter().all(|x| self.component_allowed(x))
    }
}

pub fn gamma(g: &Graph, tree: &SpanningTree, elem: &GroupElement) -> Result<SemidirectElement> {
    SemidirectModel::with_tree(g.clone(), tree)?.gamma(elem)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ParityBranch {
    Odd,
    Even,
}

impl ParityBranch {
    pub fn as_str(self) -> &'static str {
        match self {
            ParityBranch::Odd => "odd",
            ParityBranch::Even => "even",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureDescriptor {
    pub n: usize,
    pub m: usize,
    pub branch: ParityBranch,
    /// The 2-group factor is `(Z/2Z)^k`.
    pub k: usize,
    pub order: BigUint,
}

impl fmt::Display for StructureDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "S_{}", self.n)
        } else {
            write!(f, "(Z/2Z)^{} x| S_{}", self.k, self.n)
        }
    }
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, i| acc * i)
}

pub fn structure(g: &Graph) -> Result<StructureDescriptor> {
    let n = g.n();
    if n < 3 {
        return Err(Error::DegreeTooSmall { n });
    }
    let r = g.cycle_rank();
    let (branch, k) = if n % 2 == 1 {
        (ParityBranch::Odd, (n - 1) * r)
    } else {
        (ParityBranch::Even, (n - 2) * r)
    };
    Ok(StructureDescriptor {
        n,
        m: g.m(),
        branch,
        k,
        order: (BigUint::one() << k) * factorial(n),
    })
}

/// Same `n` and same `m` (both graphs with `n >= 3`).
pub fn groups_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool> {
    for g in [g1, g2] {
        if g.n() < 3 {
            return Err(Error::DegreeTooSmall { n: g.n() });
        }
    }
    Ok(g1.n() == g2.n() && g1.m() == g2.m())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureReport {
    pub descriptor: StructureDescriptor,
    /// Order found by Cayley enumeration.
    pub group_order: usize,
    pub order_matches: bool,
    pub pairs_checked: usize,
    pub exhaustive_pairs: bool,
    pub homomorphism: bool,
    pub image_size: usize,
    pub injective: bool,
    pub components_allowed: bool,
    pub surjective: bool,
}

impl StructureReport {
    pub fn passed(&self) -> bool {
        self.order_matches && self.homomorphism && self.injective && self.components_allowed && self.surjective
    }
}

/// Enumerates the group and checks it against the product model.
pub fn verify_structure(g: &Graph, cap: usize) -> Result<StructureReport> {
    let descriptor = structure(g)?;
    let model = SemidirectModel::new(g.clone())?;
    let all: Vec<GroupElement> = generate_subgroup(g, &(0..g.m()).collect::<Vec<_>>(), cap)?;
    let images = all.iter().map(|e| model.gamma(e)).collect::<Result<Vec<_>>>()?;

    let order = all.len();
    let exhaustive = order <= EXHAUSTIVE_PAIR_LIMIT;
    let pairs: Vec<(usize, usize)> = if exhaustive {
        (0..order).flat_map(|a| (0..order).map(move |b| (a, b))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        (0..SAMPLED_PAIRS)
            .map(|_| (rng.gen_range(0..order), rng.gen_range(0..order)))
            .collect()
    };
    let mut homomorphism = true;
    for &(a, b) in &pairs {
        let product = all[a].mul(&all[b])?;
        if model.gamma(&product)? != model.mul(&images[a], &images[b])? {
            homomorphism = false;
            break;
        }
    }

    let distinct: HashSet<&SemidirectElement> = images.iter().collect();
    let image_size = distinct.len();
    Ok(StructureReport {
        order_matches: BigUint::from(order) == descriptor.order,
        group_order: order,
        pairs_checked: pairs.len(),
        exhaustive_pairs: exhaustive,
        homomorphism,
        image_size,
        injective: image_size == order,
        components_allowed: images.iter().all(|x| model.is_member(x)),
        surjective: BigUint::from(image_size) == descriptor.order,
        descriptor,
    })
}

/// Whether a finite set of model elements is closed under the product.
pub fn closed_under_product(model: &SemidirectModel, set: &[SemidirectElement]) -> Result<bool> {
    let members: HashSet<&SemidirectElement> = set.iter().collect();
    for a in set {
        for c in set {
            if !members.contains(&model.mul(a, c)?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

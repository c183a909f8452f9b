//! Square GF(2) matrices packed row after row into machine words, and the
//! lit-only flip generators `x -> x + x[pivot] * toggle` that span both the
//! edge-flipping and the vertex-flipping groups.

use std::fmt;

use rustc_hash::FxHashSet;
use smallvec::SmallVec;

use crate::bits::{words_for, BitVec};
use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn read_bits(words: &[u64], offset: usize, len: usize) -> u64 {
    debug_assert!(len <= WORD && len > 0);
    let w = offset / WORD;
    let b = offset % WORD;
    let mut value = words[w] >> b;
    if b + len > WORD {
        value |= words[w + 1] << (WORD - b);
    }
    if len == WORD {
        value
    } else {
        value & ((1u64 << len) - 1)
    }
}

#[inline]
fn xor_bits(words: &mut [u64], offset: usize, len: usize, value: u64) {
    debug_assert!(len <= WORD && len > 0);
    let w = offset / WORD;
    let b = offset % WORD;
    words[w] ^= value << b;
    if b + len > WORD {
        words[w + 1] ^= value >> (WORD - b);
    }
}

/// A `dim x dim` matrix over GF(2). Row `i` occupies bits
/// `[i * dim, (i + 1) * dim)` of the packed storage, so matrices up to 8x8
/// fit in a single word. Acts on column vectors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2Matrix {
    dim: u32,
    packed: SmallVec<[u64; 2]>,
}

impl Gf2Matrix {
    pub fn zeros(dim: usize) -> Self {
        Gf2Matrix {
            dim: dim as u32,
            packed: SmallVec::from_elem(0, words_for(dim * dim)),
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: &[BitVec]) -> Self {
        let dim = rows.len();
        let mut m = Self::zeros(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "matrix row length mismatch");
            m.xor_row(i, row);
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[BitVec]) -> Self {
        let dim = columns.len();
        let mut m = Self::zeros(dim);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim, "matrix column length mismatch");
            for i in col.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim as usize
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        let d = self.dim();
        assert!(i < d && j < d);
        let bit = i * d + j;
        (self.packed[bit / WORD] >> (bit % WORD)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        let d = self.dim();
        assert!(i < d && j < d);
        let bit = i * d + j;
        let mask = 1u64 << (bit % WORD);
        if value {
            self.packed[bit / WORD] |= mask;
        } else {
            self.packed[bit / WORD] &= !mask;
        }
    }

    pub fn row(&self, i: usize) -> BitVec {
        let d = self.dim();
        let mut words = SmallVec::<[u64; 1]>::from_elem(0, words_for(d));
        let mut done = 0;
        while done < d {
            let len = (d - done).min(WORD);
            words[done / WORD] = read_bits(&self.packed, i * d + done, len);
            done += len;
        }
        BitVec::from_words(d, &words)
    }

    pub fn column(&self, j: usize) -> BitVec {
        let d = self.dim();
        BitVec::from_indices(d, (0..d).filter(|&i| self.get(i, j)))
    }

    fn xor_row(&mut self, i: usize, value: &BitVec) {
        let d = self.dim();
        let words = value.words();
        let mut done = 0;
        while done < d {
            let len = (d - done).min(WORD);
            xor_bits(&mut self.packed, i * d + done, len, words[done / WORD]);
            done += len;
        }
    }

    /// `self * x`.
    pub fn apply(&self, x: &BitVec) -> BitVec {
        let d = self.dim();
        assert_eq!(x.len(), d, "vector length does not match matrix dimension");
        BitVec::from_indices(d, (0..d).filter(|&i| self.row(i).dot(x)))
    }

    /// Matrix product `self * rhs`, i.e. the map "first `rhs`, then `self`".
    pub fn mul(&self, rhs: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: rhs.dim(),
            });
        }
        let d = self.dim();
        let rhs_rows: Vec<BitVec> = (0..d).map(|k| rhs.row(k)).collect();
        let mut out = Gf2Matrix::zeros(d);
        for i in 0..d {
            let mut acc = BitVec::zeros(d);
            for k in self.row(i).ones() {
                acc.xor_assign(&rhs_rows[k]);
            }
            out.xor_row(i, &acc);
        }
        Ok(out)
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.dim())
    }

    /// Rank over GF(2); equal to `dim` exactly when the matrix is invertible.
    pub fn rank(&self) -> usize {
        let rows: Vec<BitVec> = (0..self.dim()).map(|i| self.row(i)).collect();
        crate::bits::Echelon::new(self.dim(), &rows).rank()
    }

    /// Replaces `self` with `g * self` for the flip generator `g`: every row
    /// listed in the generator's toggle set absorbs the pivot row.
    #[inline]
    pub fn left_apply_flip(&mut self, g: &FlipGenerator) {
        let d = self.dim();
        debug_assert_eq!(d, g.toggle.len());
        let mut done = 0;
        while done < d {
            let len = (d - done).min(WORD);
            let pivot_chunk = read_bits(&self.packed, g.pivot * d + done, len);
            if pivot_chunk != 0 {
                for &t in &g.toggle_list {
                    xor_bits(&mut self.packed, t * d + done, len, pivot_chunk);
                }
            }
            done += len;
        }
    }

    /// Packed storage in little-endian byte order; the canonical sort key.
    pub fn packed_bytes(&self) -> Vec<u8> {
        self.packed.iter().flat_map(|w| w.to_le_bytes()).collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        write!(f, "Gf2Matrix[")?;
        for i in 0..d {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..d {
                write!(f, "{}", u8::from(self.get(i, j)))?;
            }
        }
        write!(f, "]")
    }
}

/// The linear involution `x -> x + x[pivot] * toggle` with `toggle[pivot] == 0`.
///
/// A move on a black edge (or lit vertex) `pivot` toggles its neighbours;
/// on a white one it does nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlipGenerator {
    pivot: usize,
    toggle: BitVec,
    toggle_list: Vec<usize>,
}

impl FlipGenerator {
    pub fn new(pivot: usize, toggle: BitVec) -> Self {
        assert!(pivot < toggle.len(), "pivot out of range");
        assert!(!toggle.get(pivot), "a flip generator must not toggle its own pivot");
        let toggle_list = toggle.ones().collect();
        FlipGenerator {
            pivot,
            toggle,
            toggle_list,
        }
    }

    pub fn pivot(&self) -> usize {
        self.pivot
    }

    pub fn toggle(&self) -> &BitVec {
        &self.toggle
    }

    pub fn apply(&self, x: &BitVec) -> BitVec {
        let mut out = x.clone();
        self.apply_in_place(&mut out);
        out
    }

    #[inline]
    pub fn apply_in_place(&self, x: &mut BitVec) {
        if x.get(self.pivot) {
            x.xor_assign(&self.toggle);
        }
    }

    /// Explicit matrix: the identity with `toggle` added to column `pivot`.
    pub fn matrix(&self) -> Gf2Matrix {
        let d = self.toggle.len();
        let mut m = Gf2Matrix::identity(d);
        for i in self.toggle.ones() {
            m.set(i, self.pivot, true);
        }
        m
    }
}

/// Breadth-first closure of the identity under left multiplication by the
/// generators. Returns every element, sorted by packed bytes.
pub fn cayley_closure(dim: usize, gens: &[FlipGenerator], cap: usize) -> Result<Vec<Gf2Matrix>> {
    let mut all: Vec<Gf2Matrix> = cayley_visit(dim, gens, cap)?.into_iter().collect();
    all.sort_unstable_by(|a, b| a.packed.iter().cmp(b.packed.iter()));
    Ok(all)
}

/// Order of the group generated by `gens`, without materialising a listing.
pub fn cayley_order(dim: usize, gens: &[FlipGenerator], cap: usize) -> Result<usize> {
    if dim * dim <= 128 {
        return cayley_order_compact(dim, gens, cap);
    }
    Ok(cayley_visit(dim, gens, cap)?.len())
}

/// Same search with each matrix packed into one `u128`; a plain counter
/// for groups in the millions.
fn cayley_order_compact(dim: usize, gens: &[FlipGenerator], cap: usize) -> Result<usize> {
    for g in gens {
        assert_eq!(g.toggle.len(), dim, "generator dimension mismatch");
    }
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    let row_mask: u128 = if dim == 0 { 0 } else { (1u128 << dim) - 1 };
    let identity: u128 = (0..dim).fold(0, |acc, i| acc | 1u128 << (i * dim + i));
    let shifts: Vec<(u32, Vec<u32>)> = gens
        .iter()
        .map(|g| {
            let p = (g.pivot * dim) as u32;
            (p, g.toggle_list.iter().map(|&t| (t * dim) as u32).collect())
        })
        .collect();
    let mut seen: FxHashSet<u128> = FxHashSet::default();
    seen.insert(identity);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &elem in &frontier {
            for (pivot, toggles) in &shifts {
                let row = elem >> pivot & row_mask;
                if row == 0 {
                    continue;
                }
                let candidate = toggles.iter().fold(elem, |acc, &t| acc ^ row << t);
                if !seen.contains(&candidate) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(candidate);
                    next.push(candidate);
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

/// Orbit partition of all `2^dim` vectors under the generated group: entry
/// `x` is the smallest vector (read as an integer) in the orbit of `x`.
pub fn orbit_labels(dim: usize, gens: &[FlipGenerator]) -> Result<Vec<u32>> {
    const LIMIT: usize = 24;
    if dim > LIMIT {
        return Err(Error::SizeLimit {
            what: "dimension",
            value: dim,
            limit: LIMIT,
        });
    }
    let masks: Vec<(usize, u32)> = gens
        .iter()
        .map(|g| (g.pivot, g.toggle.to_u64() as u32))
        .collect();
    let total = 1usize << dim;
    let mut label = vec![u32::MAX; total];
    let mut stack = Vec::new();
    // ascending starts make the first visitor the smallest member
    for start in 0..total as u32 {
        if label[start as usize] != u32::MAX {
            continue;
        }
        label[start as usize] = start;
        stack.push(start);
        while let Some(x) = stack.pop() {
            for &(pivot, toggle) in &masks {
                if x >> pivot & 1 == 1 {
                    let y = x ^ toggle;
                    if label[y as usize] == u32::MAX {
                        label[y as usize] = start;
                        stack.push(y);
                    }
                }
            }
        }
    }
    Ok(label)
}

fn cayley_visit(dim: usize, gens: &[FlipGenerator], cap: usize) -> Result<FxHashSet<Gf2Matrix>> {
    for g in gens {
        assert_eq!(g.toggle.len(), dim, "generator dimension mismatch");
    }
    let identity = Gf2Matrix::identity(dim);
    let mut seen = FxHashSet::default();
    if cap == 0 {
        return Err(Error::CapExceeded { cap });
    }
    seen.insert(identity.clone());
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for elem in &frontier {
            for g in gens {
                let mut candidate = elem.clone();
                candidate.left_apply_flip(g);
                if !seen.contains(&candidate) {
                    if seen.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    seen.insert(candidate.clone());
                    next.push(candidate);
                }
            }
        }
        frontier = next;
    }
    Ok(seen)
}

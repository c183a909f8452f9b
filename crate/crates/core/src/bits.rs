//! Packed GF(2) vectors and Gaussian elimination over the two-element field.
//!
//! Vectors up to 64 coordinates live inline in a single machine word; longer
//! vectors spill to the heap transparently.

use std::fmt;

use smallvec::SmallVec;

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A vector over GF(2) of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: SmallVec<[u64; 1]>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: SmallVec::from_elem(0, words_for(len)),
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    /// Builds a vector with the listed coordinates set. Repeated indices cancel.
    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.toggle(i);
        }
        v
    }

    /// Vector whose low `len` bits are taken from `bits`. Requires `len <= 64`.
    pub fn from_u64(len: usize, bits: u64) -> Self {
        assert!(len <= WORD);
        let mut v = Self::zeros(len);
        if len > 0 {
            let mask = if len == WORD { !0 } else { (1u64 << len) - 1 };
            v.words[0] = bits & mask;
        }
        v
    }

    /// Low 64 coordinates packed into a word. Requires `len <= 64`.
    pub fn to_u64(&self) -> u64 {
        assert!(self.len <= WORD);
        self.words.first().copied().unwrap_or(0)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        let bit = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= bit;
        } else {
            self.words[i / WORD] &= !bit;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    /// In-place GF(2) addition. Panics on a length mismatch.
    #[inline]
    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "GF(2) vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn and(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "GF(2) vector length mismatch");
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
        out
    }

    /// Parity of the coordinatewise product.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "GF(2) vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of set coordinates, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let b = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + b)
            })
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    pub(crate) fn from_words(len: usize, words: &[u64]) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        BitVec {
            len,
            words: SmallVec::from_slice(words),
        }
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "BitVec({s})")
    }
}

/// Reduced row-echelon form of a list of vectors, remembering for every row
/// which input vectors were summed to produce it.
///
/// Decomposition against the stored rows answers span membership and yields
/// the coordinates with respect to the inputs in one pass.
#[derive(Clone, Debug)]
pub struct Echelon {
    dim: usize,
    inputs: usize,
    rows: Vec<EchelonRow>,
}

#[derive(Clone, Debug)]
struct EchelonRow {
    pivot: usize,
    vector: BitVec,
    combination: BitVec,
}

impl Echelon {
    /// Eliminates `vectors`, each of length `dim`. Dependent inputs are
    /// dropped from the row set; [`Echelon::rank`] reports how many survive.
    pub fn new(dim: usize, vectors: &[BitVec]) -> Self {
        let inputs = vectors.len();
        let mut rows: Vec<EchelonRow> = Vec::with_capacity(inputs.min(dim));
        for (idx, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), dim, "GF(2) vector length mismatch");
            let mut vector = v.clone();
            let mut combination = BitVec::unit(inputs, idx);
            for row in &rows {
                if vector.get(row.pivot) {
                    vector.xor_assign(&row.vector);
                    combination.xor_assign(&row.combination);
                }
            }
            let Some(pivot) = vector.first_one() else {
                continue;
            };
            // keep the form reduced: the new pivot column is cleared everywhere else
            for row in rows.iter_mut() {
                if row.vector.get(pivot) {
                    row.vector.xor_assign(&vector);
                    row.combination.xor_assign(&combination);
                }
            }
            rows.push(EchelonRow {
                pivot,
                vector,
                combination,
            });
        }
        Echelon { dim, inputs, rows }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coefficients `c` with `sum_i c_i * inputs[i] == target`, or `None` when
    /// `target` is outside the span. Unique whenever the inputs are independent.
    pub fn decompose(&self, target: &BitVec) -> Option<BitVec> {
        assert_eq!(target.len(), self.dim, "GF(2) vector length mismatch");
        let mut rest = target.clone();
        let mut coeffs = BitVec::zeros(self.inputs);
        for row in &self.rows {
            if rest.get(row.pivot) {
                rest.xor_assign(&row.vector);
                coeffs.xor_assign(&row.combination);
            }
        }
        rest.is_zero().then_some(coeffs)
    }

    pub fn contains(&self, target: &BitVec) -> bool {
        self.decompose(target).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bit_ops_cross_word_boundary() {
        let mut v = BitVec::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        let w = BitVec::from_indices(130, [64, 100]);
        let s = v.xor(&w);
        assert_eq!(s.ones().collect::<Vec<_>>(), vec![0, 100, 129]);
        assert!(v.dot(&w));
        assert_eq!(v.first_one(), Some(0));
    }

    #[test]
    fn from_indices_cancels_repeats() {
        let v = BitVec::from_indices(5, [1, 3, 1]);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3]);
    }

    #[test]
    fn echelon_rank_and_decompose() {
        // columns of K3's vertex cuts: E(0)={0,1}, E(1)={0,2}, E(2)={1,2}
        let cuts = [
            BitVec::from_indices(3, [0, 1]),
            BitVec::from_indices(3, [0, 2]),
            BitVec::from_indices(3, [1, 2]),
        ];
        let ech = Echelon::new(3, &cuts);
        assert_eq!(ech.rank(), 2);
        assert!(ech.decompose(&BitVec::from_indices(3, [0])).is_none());

        let basis = Echelon::new(3, &cuts[1..]);
        let c = basis.decompose(&cuts[0]).unwrap();
        assert_eq!(c.ones().collect::<Vec<_>>(), vec![0, 1]);
    }

    #[test]
    fn echelon_of_nothing() {
        let ech = Echelon::new(4, &[]);
        assert_eq!(ech.rank(), 0);
        assert_eq!(ech.decompose(&BitVec::zeros(4)), Some(BitVec::zeros(0)));
        assert!(!ech.contains(&BitVec::unit(4, 2)));
    }
}

//! Sparse tensors over the basis of a finite-dimensional space, the wedge
//! construction used throughout, and the square coefficient matrix of an
//! r-matrix.
//!
//! Indices are 1-based everywhere in the public API, matching the usual
//! `e_1, ..., e_n` basis notation. Wedges carry no `1/k!` normalization:
//! `wedge(x, y) = x (x) y - y (x) x`, and the k-fold wedge is the full
//! signed sum over the symmetric group.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::Scalar;

/// Element of the `arity`-fold tensor power of an n-dimensional space,
/// stored sparsely by basis index tuple.
#[derive(Clone, PartialEq, Debug)]
pub struct Tensor<S> {
    arity: usize,
    dim: usize,
    coeffs: BTreeMap<Vec<usize>, S>,
}

impl<S: Ring> Tensor<S> {
    pub fn zero(arity: usize, dim: usize) -> Self {
        assert!(arity >= 1, "tensor arity must be at least 1");
        Tensor {
            arity,
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis tensor `e_{idx[0]} (x) ... (x) e_{idx[k-1]}`.
    pub fn basis(dim: usize, idx: &[usize]) -> Result<Self> {
        let mut t = Tensor::zero(idx.len(), dim);
        t.add_term(idx, S::one())?;
        Ok(t)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &S)> {
        self.coeffs.iter()
    }

    /// Coefficient at a basis index tuple (zero if absent).
    pub fn coeff(&self, idx: &[usize]) -> S {
        self.coeffs.get(idx).cloned().unwrap_or_else(S::zero)
    }

    fn check_idx(&self, idx: &[usize]) -> Result<()> {
        if idx.len() != self.arity {
            return Err(Error::DimensionMismatch {
                expected: self.arity,
                got: idx.len(),
            });
        }
        for &i in idx {
            if i < 1 || i > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    dim: self.dim,
                });
            }
        }
        Ok(())
    }

    /// Adds `coeff` at `idx`, merging and dropping exact cancellations.
    pub fn add_term(&mut self, idx: &[usize], coeff: S) -> Result<()> {
        self.check_idx(idx)?;
        self.add_term_unchecked(idx, coeff);
        Ok(())
    }

    pub(crate) fn add_term_unchecked(&mut self, idx: &[usize], coeff: S) {
        if coeff.is_zero() {
            return;
        }
        match self.coeffs.entry(idx.to_vec()) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                let total = slot.get().clone() + coeff;
                if total.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = total;
                }
            }
        }
    }

    pub fn add(&self, other: &Tensor<S>) -> Tensor<S> {
        assert_eq!((self.arity, self.dim), (other.arity, other.dim));
        let mut out = self.clone();
        for (idx, c) in &other.coeffs {
            out.add_term_unchecked(idx, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tensor<S>) -> Tensor<S> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Tensor<S> {
        self.map(|c| -c.clone())
    }

    pub fn scale(&self, by: &S) -> Tensor<S> {
        if by.is_zero() {
            return Tensor::zero(self.arity, self.dim);
        }
        self.map(|c| c.clone() * by.clone())
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> Tensor<T> {
        let mut out = Tensor::zero(self.arity, self.dim);
        for (idx, c) in &self.coeffs {
            out.add_term_unchecked(idx, f(c));
        }
        out
    }

    /// Swaps tensor slots `p` and `q` (1-based).
    pub fn permute_factors(&self, p: usize, q: usize) -> Result<Tensor<S>> {
        for slot in [p, q] {
            if slot < 1 || slot > self.arity {
                return Err(Error::SlotOutOfRange {
                    slot,
                    arity: self.arity,
                });
            }
        }
        let mut out = Tensor::zero(self.arity, self.dim);
        for (idx, c) in &self.coeffs {
            let mut swapped = idx.clone();
            swapped.swap(p - 1, q - 1);
            out.add_term_unchecked(&swapped, c.clone());
        }
        Ok(out)
    }

    /// True when every adjacent slot transposition negates the tensor,
    /// i.e. the tensor is totally antisymmetric.
    pub fn is_fully_antisymmetric(&self) -> bool {
        for p in 1..self.arity {
            let swapped = self
                .permute_factors(p, p + 1)
                .expect("adjacent slots are in range");
            if swapped != self.neg() {
                return false;
            }
        }
        true
    }
}

impl Tensor<Scalar> {
    /// Substitutes rational values for symbolic parameters in every
    /// coefficient.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<String, crate::scalar::Rational>,
    ) -> Tensor<Scalar> {
        self.map(|c| c.substitute(bindings))
    }
}

/// All permutations of `0..k` with their signs.
pub(crate) fn signed_permutations(k: usize) -> Vec<(Vec<usize>, i8)> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<(Vec<usize>, i8)>) {
        let k = used.len();
        if cur.len() == k {
            let mut inversions = 0;
            for a in 0..k {
                for b in a + 1..k {
                    if cur[a] > cur[b] {
                        inversions += 1;
                    }
                }
            }
            out.push((cur.clone(), if inversions % 2 == 0 { 1 } else { -1 }));
            return;
        }
        for v in 0..k {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// Sign of the permutation sorting `idx` ascending; `None` if an index
/// repeats.
pub(crate) fn sort_with_sign(idx: &[usize]) -> Option<(Vec<usize>, i8)> {
    let mut sorted: Vec<usize> = idx.to_vec();
    let mut sign = 1i8;
    // Insertion sort, counting swaps.
    for i in 1..sorted.len() {
        let mut j = i;
        while j > 0 && sorted[j - 1] > sorted[j] {
            sorted.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((sorted, sign))
    }
}

/// Signed sum over all slot orderings of the outer product: the k-fold
/// wedge without any factorial normalization.
pub fn wedge<S: Ring>(dim: usize, vectors: &[Vec<S>]) -> Result<Tensor<S>> {
    let k = vectors.len();
    assert!(k >= 1, "wedge of no vectors");
    for v in vectors {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    let mut out = Tensor::zero(k, dim);
    for (perm, sign) in signed_permutations(k) {
        // Outer product of vectors[perm[0]], ..., vectors[perm[k-1]],
        // walking all index tuples odometer-style.
        let mut idx = vec![1usize; k];
        'tuples: loop {
            let mut coeff = S::one();
            let mut vanished = false;
            for slot in 0..k {
                let factor = &vectors[perm[slot]][idx[slot] - 1];
                if factor.is_zero() {
                    vanished = true;
                    break;
                }
                coeff = coeff * factor.clone();
            }
            if !vanished {
                if sign < 0 {
                    coeff = -coeff;
                }
                out.add_term_unchecked(&idx, coeff);
            }
            let mut slot = k;
            while slot > 0 {
                slot -= 1;
                if idx[slot] < dim {
                    idx[slot] += 1;
                    for later in idx.iter_mut().skip(slot + 1) {
                        *later = 1;
                    }
                    continue 'tuples;
                }
            }
            break;
        }
    }
    Ok(out)
}

/// Wedge of basis vectors `e_{idx[0]} ^ ... ^ e_{idx[k-1]}`.
pub fn wedge_basis<S: Ring>(dim: usize, idx: &[usize]) -> Result<Tensor<S>> {
    for &i in idx {
        if i < 1 || i > dim {
            return Err(Error::IndexOutOfRange { index: i, dim });
        }
    }
    let mut out = Tensor::zero(idx.len(), dim);
    for (perm, sign) in signed_permutations(idx.len()) {
        let permuted: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        let coeff = if sign < 0 { -S::one() } else { S::one() };
        out.add_term_unchecked(&permuted, coeff);
    }
    Ok(out)
}

/// Canonical name of the symbolic r-matrix entry in row `i`, column `j`.
pub fn r_entry_name(i: usize, j: usize) -> String {
    format!("a_{i}_{j}")
}

/// Square coefficient matrix of `r = sum_{i,j} a^{ij} e_i (x) e_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct RMatrix<S> {
    dim: usize,
    entries: Vec<Vec<S>>,
}

impl<S: Ring> RMatrix<S> {
    pub fn zero(dim: usize) -> Self {
        RMatrix {
            dim,
            entries: vec![vec![S::zero(); dim]; dim],
        }
    }

    pub fn from_rows(entries: Vec<Vec<S>>) -> Result<Self> {
        let dim = entries.len();
        for row in &entries {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
        }
        Ok(RMatrix { dim, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry `a^{ij}` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &S {
        &self.entries[i - 1][j - 1]
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: S) -> Result<()> {
        for idx in [i, j] {
            if idx < 1 || idx > self.dim {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    dim: self.dim,
                });
            }
        }
        self.entries[i - 1][j - 1] = v;
        Ok(())
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.require_skew_symmetric().is_ok()
    }

    /// Checks `a^{ii} = 0` and `a^{ji} = -a^{ij}`, reporting the first
    /// offending entry.
    pub fn require_skew_symmetric(&self) -> Result<()> {
        for i in 1..=self.dim {
            for j in i..=self.dim {
                let mirror = -self.entry(j, i).clone();
                if *self.entry(i, j) != mirror {
                    return Err(Error::NotSkewSymmetric { i, j });
                }
            }
        }
        Ok(())
    }

    /// Skew matrix from the strictly-upper entries; the lower triangle is
    /// filled with the negations.
    pub fn skew_from_upper(dim: usize, upper: &[(usize, usize, S)]) -> Result<Self> {
        let mut m = RMatrix::zero(dim);
        for (i, j, v) in upper {
            if *i >= *j {
                return Err(Error::Parse(format!(
                    "skew input must use strictly upper entries, got ({i},{j})"
                )));
            }
            m.set_entry(*i, *j, v.clone())?;
            m.set_entry(*j, *i, -v.clone())?;
        }
        Ok(m)
    }

    pub fn map<T: Ring>(&self, f: impl Fn(&S) -> T) -> RMatrix<T> {
        RMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(&f).collect())
                .collect(),
        }
    }
}

impl RMatrix<Scalar> {
    /// Fully symbolic skew matrix: `a_i_j` above the diagonal, mirrored
    /// negatively below, zero diagonal. Only `i < j` names are introduced.
    pub fn symbolic_skew(dim: usize) -> Self {
        let mut m = RMatrix::zero(dim);
        for i in 1..=dim {
            for j in i + 1..=dim {
                let v = Scalar::var(&r_entry_name(i, j));
                m.set_entry(i, j, v.clone()).unwrap();
                m.set_entry(j, i, -v).unwrap();
            }
        }
        m
    }

    /// Fully symbolic unconstrained matrix: every entry its own parameter.
    pub fn symbolic_full(dim: usize) -> Self {
        let mut m = RMatrix::zero(dim);
        for i in 1..=dim {
            for j in 1..=dim {
                m.set_entry(i, j, Scalar::var(&r_entry_name(i, j))).unwrap();
            }
        }
        m
    }
}

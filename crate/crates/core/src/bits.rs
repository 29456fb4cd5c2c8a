//! Packed bit rows and the GF(2) row basis used for rank and membership.

use std::fmt;

const WORD: usize = 64;

/// Fixed-length bit vector stored in 64-bit words, bit `i` at word `i / 64`.
///
/// Bits past `len` in the last word are always zero, so word-wise equality,
/// hashing and popcounts never see garbage.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    len: usize,
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_bools<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut row = BitRow::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            if b {
                row.set(i, true);
            }
        }
        row
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
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitRow) -> BitRow {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Parity of `popcount(self & other)`.
    #[inline]
    pub fn dot(&self, other: &BitRow) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    /// `popcount(self & other)`.
    #[inline]
    pub fn and_count(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `popcount(self | other)`.
    #[inline]
    pub fn or_count(&self, other: &BitRow) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a | b).count_ones() as usize)
            .sum()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &BitRow) -> BitRow {
        let mut out = BitRow::zeros(self.len + other.len);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        if self.len.is_multiple_of(WORD) {
            let start = self.len / WORD;
            out.words[start..start + other.words.len()].copy_from_slice(&other.words);
        } else {
            for i in other.iter_ones() {
                out.set(self.len + i, true);
            }
        }
        out
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let tz = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Display for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitRow({self})")
    }
}

/// Incremental XOR basis over GF(2).
///
/// Each stored row is reduced against every earlier row, so reducing a query
/// against the rows in insertion order clears every pivot. Alongside each row
/// we keep which input rows were XORed together to produce it.
#[derive(Clone, Debug)]
pub struct RowBasis {
    width: usize,
    inputs: usize,
    rows: Vec<(usize, BitRow, BitRow)>,
}

impl RowBasis {
    pub fn new(width: usize) -> Self {
        RowBasis {
            width,
            inputs: 0,
            rows: Vec::new(),
        }
    }

    /// Basis of `rows`, recording combinations against their indices.
    pub fn from_rows(width: usize, rows: &[BitRow]) -> Self {
        let mut basis = RowBasis::new(width);
        basis.inputs = rows.len();
        for (i, row) in rows.iter().enumerate() {
            let mut combo = BitRow::zeros(rows.len());
            combo.set(i, true);
            basis.insert_with(row.clone(), combo);
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Inserts a row with no combination tracking. Returns false if it was
    /// already in the span.
    pub fn insert(&mut self, row: BitRow) -> bool {
        let combo = BitRow::zeros(self.inputs);
        self.insert_with(row, combo)
    }

    fn insert_with(&mut self, mut row: BitRow, mut combo: BitRow) -> bool {
        debug_assert_eq!(row.len(), self.width);
        for (pivot, basis_row, basis_combo) in &self.rows {
            if row.get(*pivot) {
                row.xor_assign(basis_row);
                combo.xor_assign(basis_combo);
            }
        }
        match row.first_one() {
            Some(pivot) => {
                self.rows.push((pivot, row, combo));
                true
            }
            None => false,
        }
    }

    pub fn in_span(&self, row: &BitRow) -> bool {
        self.solve(row).is_some()
    }

    /// Subset of input rows whose XOR equals `row`, if one exists.
    pub fn solve(&self, row: &BitRow) -> Option<BitRow> {
        let mut residual = row.clone();
        let mut combo = BitRow::zeros(self.inputs);
        for (pivot, basis_row, basis_combo) in &self.rows {
            if residual.get(*pivot) {
                residual.xor_assign(basis_row);
                combo.xor_assign(basis_combo);
            }
        }
        residual.is_zero().then_some(combo)
    }

    /// Fully reduced row-echelon rows, sorted by pivot column.
    pub fn reduced_rows(&self) -> Vec<BitRow> {
        let mut rows: Vec<(usize, BitRow)> =
            self.rows.iter().map(|(p, r, _)| (*p, r.clone())).collect();
        rows.sort_by_key(|(p, _)| *p);
        for i in 0..rows.len() {
            let (pivot, pivot_row) = rows[i].clone();
            for (j, (_, other)) in rows.iter_mut().enumerate() {
                if j != i && other.get(pivot) {
                    other.xor_assign(&pivot_row);
                }
            }
        }
        rows.into_iter().map(|(_, r)| r).collect()
    }
}

/// Rank over GF(2) of a list of equal-width rows.
pub fn rank(width: usize, rows: &[BitRow]) -> usize {
    let mut basis = RowBasis::new(width);
    rows.iter().filter(|r| basis.insert((*r).clone())).count()
}

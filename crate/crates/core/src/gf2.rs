//! Dense vectors and matrices over GF(2).
//!
//! Bits are packed little-endian into `u64` words: coordinate `j` of a vector
//! lives in bit `j % 64` of word `j / 64`. Bits past `len` are always zero so
//! that word-level equality, hashing and popcounts are exact.

use std::fmt;

use crate::error::{Error, Result};

/// Hard cap on the number of variables, so `N = 2^m <= 65536`.
pub const MAX_M: usize = 16;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self {
            len,
            words: vec![!0; words_for(len)],
        };
        v.clear_padding();
        v
    }

    /// Unit vector with a single one at `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let mut v = Self::zeros(0);
        for b in bits {
            v.push(b);
        }
        v
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut v = Self::zeros(len);
        for &i in ones {
            v.set(i, true);
        }
        v
    }

    /// Parses a string of `0`/`1` characters; whitespace and `_` are ignored.
    pub fn parse_binary(s: &str) -> Result<Self> {
        let mut v = Self::zeros(0);
        for ch in s.chars() {
            match ch {
                '0' => v.push(false),
                '1' => v.push(true),
                c if c.is_whitespace() || c == '_' => {}
                c => return Err(Error::Parse(format!("unexpected character {c:?} in bit string"))),
            }
        }
        Ok(v)
    }

    /// Parses hex text where the first digit holds coordinates 0..4, most
    /// significant bit first. Trailing bits beyond `len` must be zero.
    pub fn from_hex(s: &str, len: usize) -> Result<Self> {
        let digits: Vec<char> = s.trim().chars().collect();
        if digits.len() != len.div_ceil(4) {
            return Err(Error::Parse(format!(
                "hex row {s:?} has {} digits, expected {} for length {len}",
                digits.len(),
                len.div_ceil(4)
            )));
        }
        let mut v = Self::zeros(len);
        for (d, ch) in digits.iter().enumerate() {
            let nibble = ch
                .to_digit(16)
                .ok_or_else(|| Error::Parse(format!("invalid hex digit {ch:?}")))?;
            for b in 0..4 {
                if nibble >> (3 - b) & 1 == 1 {
                    let j = 4 * d + b;
                    if j >= len {
                        return Err(Error::Parse(format!("hex row {s:?} sets bit {j} beyond length {len}")));
                    }
                    v.set(j, true);
                }
            }
        }
        Ok(v)
    }

    pub fn to_hex(&self) -> String {
        let mut out = String::with_capacity(self.len.div_ceil(4));
        for d in 0..self.len.div_ceil(4) {
            let mut nibble = 0u32;
            for b in 0..4 {
                let j = 4 * d + b;
                if j < self.len && self.get(j) {
                    nibble |= 1 << (3 - b);
                }
            }
            out.push(char::from_digit(nibble, 16).unwrap());
        }
        out
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
        self.words[i / WORD] >> (i % WORD) & 1 == 1
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
        assert!(i < self.len, "bit index {i} out of range for length {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn push(&mut self, bit: bool) {
        if self.len.is_multiple_of(WORD) {
            self.words.push(0);
        }
        self.len += 1;
        self.set(self.len - 1, bit);
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Index of the lowest set coordinate.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * WORD + t)
                }
            })
        })
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "xor of vectors with different lengths");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    /// Component-wise (Schur) product.
    pub fn and(&self, other: &BitVector) -> BitVector {
        assert_eq!(self.len, other.len, "and of vectors with different lengths");
        BitVector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect(),
        }
    }

    /// Scalar product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "dot of vectors with different lengths");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Applies the coordinate permutation `j -> len - 1 - j`.
    pub fn reversed(&self) -> BitVector {
        let mut out = BitVector::zeros(self.len);
        for j in self.iter_ones() {
            out.set(self.len - 1 - j, true);
        }
        out
    }

    fn clear_padding(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Row-major dense matrix over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            data: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Builds a matrix from rows. `cols` is needed so that empty matrices keep
    /// their width.
    pub fn from_rows(cols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape {
                op: "from_rows",
                left: (rows.len(), cols),
                right: (1, bad.len()),
            });
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    /// Convenience constructor from `0`/`1` strings of equal length.
    pub fn parse_rows(rows: &[&str]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|r| BitVector::parse_binary(r))
            .collect::<Result<Vec<_>>>()?;
        let cols = parsed.first().map_or(0, BitVector::len);
        Self::from_rows(cols, parsed)
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn column(&self, j: usize) -> BitVector {
        BitVector::from_bits(self.data.iter().map(|r| r.get(j)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = BitMatrix::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                out.data[j].set(i, true);
            }
        }
        out
    }

    pub fn select_rows(&self, indices: &[usize]) -> BitMatrix {
        BitMatrix {
            rows: indices.len(),
            cols: self.cols,
            data: indices.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Vertical concatenation `[self; other]`.
    pub fn stack(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != other.cols {
            return Err(Error::Shape {
                op: "stack",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(BitMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Row vector times matrix.
    pub fn left_mul_vector(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.rows {
            return Err(Error::Shape {
                op: "vector_mul",
                left: (1, v.len()),
                right: self.shape(),
            });
        }
        let mut out = BitVector::zeros(self.cols);
        for k in v.iter_ones() {
            out.xor_assign(&self.data[k]);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        mat_mul(self, other)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && self.data.iter().enumerate().all(|(i, r)| r.weight() == 1 && r.get(i))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    /// Lower triangular with ones on the diagonal.
    pub fn is_lower_unitriangular(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.get(i) && r.iter_ones().all(|j| j <= i))
    }

    /// Upper triangular with ones on the diagonal.
    pub fn is_upper_unitriangular(&self) -> bool {
        self.is_square()
            && self
                .data
                .iter()
                .enumerate()
                .all(|(i, r)| r.get(i) && r.iter_ones().all(|j| j >= i))
    }

    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.data.iter().all(|r| r.weight() == 1)
            && self.transpose().data.iter().all(|c| c.weight() == 1)
    }

    pub fn inverse(&self) -> Result<BitMatrix> {
        mat_inverse(self)
    }

    pub fn rank(&self) -> usize {
        rank(self)
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.data.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        write!(f, "{self}")
    }
}

/// Product `a * b` over GF(2), computed as XORs of rows of `b`.
pub fn mat_mul(a: &BitMatrix, b: &BitMatrix) -> Result<BitMatrix> {
    if a.cols != b.rows {
        return Err(Error::Shape {
            op: "mat_mul",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let data = a
        .data
        .iter()
        .map(|row| {
            let mut out = BitVector::zeros(b.cols);
            for k in row.iter_ones() {
                out.xor_assign(&b.data[k]);
            }
            out
        })
        .collect();
    Ok(BitMatrix {
        rows: a.rows,
        cols: b.cols,
        data,
    })
}

/// Gauss-Jordan inverse. Singular input is an error.
pub fn mat_inverse(a: &BitMatrix) -> Result<BitMatrix> {
    if !a.is_square() {
        return Err(Error::Shape {
            op: "mat_inverse",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let n = a.rows;
    let mut work = a.data.clone();
    let mut inv = BitMatrix::identity(n).data;
    for col in 0..n {
        let pivot = (col..n).find(|&r| work[r].get(col)).ok_or(Error::Singular)?;
        work.swap(col, pivot);
        inv.swap(col, pivot);
        let (pw, pi) = (work[col].clone(), inv[col].clone());
        for r in 0..n {
            if r != col && work[r].get(col) {
                work[r].xor_assign(&pw);
                inv[r].xor_assign(&pi);
            }
        }
    }
    Ok(BitMatrix {
        rows: n,
        cols: n,
        data: inv,
    })
}

/// Row rank over GF(2).
pub fn rank(a: &BitMatrix) -> usize {
    let mut basis = EchelonBasis::new(a.cols);
    for r in &a.data {
        basis.insert(r.clone());
    }
    basis.rank()
}

/// True iff `v` lies in the row space of `a`.
pub fn row_space_member(a: &BitMatrix, v: &BitVector) -> Result<bool> {
    if v.len() != a.cols {
        return Err(Error::Shape {
            op: "row_space_member",
            left: a.shape(),
            right: (1, v.len()),
        });
    }
    Ok(EchelonBasis::from_matrix(a).contains(v))
}

/// Dimension of the intersection of the row spaces of `a` and `b`.
pub fn intersection_dim(a: &BitMatrix, b: &BitMatrix) -> Result<usize> {
    let stacked = a.stack(b)?;
    Ok(rank(a) + rank(b) - rank(&stacked))
}

/// Kronecker product `a (x) b`.
pub fn kronecker(a: &BitMatrix, b: &BitMatrix) -> BitMatrix {
    let rows = a.rows * b.rows;
    let cols = a.cols * b.cols;
    let mut out = BitMatrix::zeros(rows, cols);
    for i in 0..a.rows {
        for j in a.data[i].iter_ones() {
            for k in 0..b.rows {
                for l in b.data[k].iter_ones() {
                    out.data[i * b.rows + k].set(j * b.cols + l, true);
                }
            }
        }
    }
    out
}

/// `base^{(x) n}`; `n = 0` gives the 1x1 identity.
pub fn kronecker_power(base: &BitMatrix, n: usize) -> Result<BitMatrix> {
    let limit = 1usize << MAX_M;
    let too_big = |d: usize| d > 1 && d.checked_pow(n as u32).is_none_or(|s| s > limit);
    if too_big(base.rows) || too_big(base.cols) {
        return Err(Error::SizeLimit { m: n, max: MAX_M });
    }
    let mut out = BitMatrix::identity(1);
    for _ in 0..n {
        out = kronecker(&out, base);
    }
    Ok(out)
}

/// Basis of the null space `{x : a x^t = 0}`, i.e. the dual of the row space.
pub fn null_space(a: &BitMatrix) -> BitMatrix {
    let n = a.cols;
    let mut basis = EchelonBasis::new(n);
    for r in &a.data {
        basis.insert(r.clone());
    }
    let pivots: Vec<usize> = basis.pivots().collect();
    let is_pivot = {
        let mut v = vec![false; n];
        for &p in &pivots {
            v[p] = true;
        }
        v
    };
    let rows = (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut x = BitVector::unit(n, free);
            for (row, &p) in basis.rows.iter().zip(&basis.pivot_cols) {
                if row.get(free) {
                    x.set(p, true);
                }
            }
            x
        })
        .collect();
    BitMatrix::from_rows(n, rows).expect("null space rows have matrix width")
}

/// Incrementally maintained reduced row echelon basis.
///
/// The pivot of a row is its lowest set column; every stored row is zero on
/// the pivots of all other rows, so reduction is a single pass.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    cols: usize,
    rows: Vec<BitVector>,
    pivot_cols: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
            pivot_cols: Vec::new(),
        }
    }

    pub fn from_matrix(a: &BitMatrix) -> Self {
        let mut basis = Self::new(a.cols);
        for r in &a.data {
            basis.insert(r.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivot_cols.iter().copied()
    }

    pub fn reduce(&self, mut v: BitVector) -> BitVector {
        assert_eq!(v.len(), self.cols, "vector length does not match basis width");
        for (row, &p) in self.rows.iter().zip(&self.pivot_cols) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Inserts `v`; returns false when it was already in the span.
    pub fn insert(&mut self, v: BitVector) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.first_one() else {
            return false;
        };
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        self.rows.push(r);
        self.pivot_cols.push(p);
        true
    }

    pub fn to_matrix(&self) -> BitMatrix {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&k| self.pivot_cols[k]);
        BitMatrix {
            rows: self.rows.len(),
            cols: self.cols,
            data: order.into_iter().map(|k| self.rows[k].clone()).collect(),
        }
    }
}

/// True iff the two matrices span the same row space.
pub fn same_row_space(a: &BitMatrix, b: &BitMatrix) -> Result<bool> {
    let ra = rank(a);
    Ok(ra == rank(b) && ra == rank(&a.stack(b)?))
}

/// True iff the row space of `a` is contained in that of `b`.
pub fn row_space_contained(a: &BitMatrix, b: &BitMatrix) -> Result<bool> {
    if a.cols != b.cols {
        return Err(Error::Shape {
            op: "row_space_contained",
            left: a.shape(),
            right: b.shape(),
        });
    }
    let basis = EchelonBasis::from_matrix(b);
    Ok(a.data.iter().all(|r| basis.contains(r)))
}

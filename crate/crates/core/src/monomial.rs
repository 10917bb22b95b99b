//! The ring `R_m = F2[x_0..x_{m-1}] / (x_i^2 - x_i)`.
//!
//! A [`Monomial`] is a bitmask over variable indices, a [`Polynomial`] is a
//! set of monomials (addition is symmetric difference), and a
//! [`MonomialSet`] is a defining set of a monomial code. Row `i` of
//! `G_N = [[1,0],[1,1]]^{(x) m}` is the evaluation of the monomial on the
//! complement of the bits of `i`, which is the bridge used throughout the
//! crate between row indices and monomials.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector, MAX_M};

fn check_m(m: usize) -> Result<()> {
    if m > MAX_M {
        Err(Error::SizeLimit { m, max: MAX_M })
    } else {
        Ok(())
    }
}

#[inline]
fn full_mask(m: usize) -> u32 {
    ((1u64 << m) - 1) as u32
}

/// Term order used when printing: `a` precedes `b` iff `a` contains the
/// lowest variable on which they differ. The constant comes last.
pub fn display_order(a: u32, b: u32) -> Ordering {
    if a == b {
        return Ordering::Equal;
    }
    let d = (a ^ b).trailing_zeros();
    if a >> d & 1 == 1 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    m: u8,
    mask: u32,
}

impl Monomial {
    pub fn new(mask: u32, m: usize) -> Result<Self> {
        check_m(m)?;
        if mask & !full_mask(m) != 0 {
            return Err(Error::Validation(format!(
                "monomial mask {mask:#b} uses variables beyond x{}",
                m.saturating_sub(1)
            )));
        }
        Ok(Self { m: m as u8, mask })
    }

    pub fn one(m: usize) -> Self {
        Self { m: m as u8, mask: 0 }
    }

    /// `x_0 x_1 ... x_{m-1}`.
    pub fn full(m: usize) -> Self {
        Self {
            m: m as u8,
            mask: full_mask(m),
        }
    }

    pub fn from_vars(vars: &[usize], m: usize) -> Result<Self> {
        let mut mask = 0u32;
        for &v in vars {
            if v >= m {
                return Err(Error::Validation(format!("variable x{v} outside m = {m}")));
            }
            mask |= 1 << v;
        }
        Self::new(mask, m)
    }

    /// The monomial whose evaluation is row `i` of `G_N`: `x^{bin(2^m-1-i)}`.
    pub fn from_index(i: usize, m: usize) -> Result<Self> {
        check_m(m)?;
        let n = 1usize << m;
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        Ok(Self {
            m: m as u8,
            mask: (n - 1 - i) as u32,
        })
    }

    /// Row index of this monomial in `G_N`.
    pub fn index(&self) -> usize {
        (full_mask(self.m()) ^ self.mask) as usize
    }

    #[inline]
    pub fn mask(&self) -> u32 {
        self.mask
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn degree(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Variable indices in ascending order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.m()).filter(|&i| self.mask >> i & 1 == 1).collect()
    }

    pub fn contains_var(&self, i: usize) -> bool {
        i < self.m() && self.mask >> i & 1 == 1
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.mask & !other.mask == 0
    }

    /// Multiplicative complement `x_0...x_{m-1} / f`.
    pub fn complement(&self) -> Monomial {
        Monomial {
            m: self.m,
            mask: full_mask(self.m()) ^ self.mask,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.m, other.m, "monomials over different rings");
        Monomial {
            m: self.m,
            mask: self.mask | other.mask,
        }
    }

    /// `psi(x_{i1}...x_{is}) = (1 + x_{i1})...(1 + x_{is})`, i.e. the sum of
    /// all divisors.
    pub fn psi(&self) -> Polynomial {
        let mut terms = BTreeSet::new();
        let mut sub = self.mask;
        loop {
            terms.insert(sub);
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & self.mask;
        }
        Polynomial { m: self.m, terms }
    }

    /// Coordinate `k` is `f(bin(2^m - 1 - k))`, so the result is row
    /// `self.index()` of `G_N`.
    pub fn evaluate(&self) -> BitVector {
        let n = 1usize << self.m();
        let mut v = BitVector::zeros(n);
        let mask = self.mask as usize;
        for k in 0..n {
            if k & mask == 0 {
                v.set(k, true);
            }
        }
        v
    }

    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "1" {
            return Ok(Self::one(m));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty monomial".into()));
        }
        let mut vars = Vec::new();
        for part in s.split('x').skip(1) {
            let part = part.trim_start_matches('_');
            let v: usize = part
                .parse()
                .map_err(|_| Error::Parse(format!("bad variable {part:?} in monomial {s:?}")))?;
            vars.push(v);
        }
        if !s.starts_with('x') {
            return Err(Error::Parse(format!("monomial {s:?} must start with x")));
        }
        Self::from_vars(&vars, m)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.mask == 0 {
            return f.write_str("1");
        }
        for i in self.support() {
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub fn index_to_monomial(i: usize, m: usize) -> Result<Monomial> {
    Monomial::from_index(i, m)
}

pub fn monomial_to_index(f: &Monomial) -> usize {
    f.index()
}

pub fn complement(f: &Monomial) -> Monomial {
    f.complement()
}

pub fn psi_expand(f: &Monomial) -> Polynomial {
    f.psi()
}

/// Element of `R_m`: a set of monomials with GF(2) cancellation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    m: u8,
    terms: BTreeSet<u32>,
}

impl Polynomial {
    pub fn zero(m: usize) -> Self {
        Self {
            m: m as u8,
            terms: BTreeSet::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Monomial::one(m).into()
    }

    /// Sums the given monomials; repeated terms cancel in pairs.
    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(m: usize, monomials: I) -> Self {
        let mut p = Self::zero(m);
        for f in monomials {
            assert_eq!(f.m(), m, "monomial over a different ring");
            p.toggle(f.mask);
        }
        p
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending mask order.
    pub fn terms(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.terms.iter().map(move |&mask| Monomial { m: self.m, mask })
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        self.terms.contains(&f.mask)
    }

    fn toggle(&mut self, mask: u32) {
        if !self.terms.remove(&mask) {
            self.terms.insert(mask);
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.m, other.m, "polynomials over different rings");
        Polynomial {
            m: self.m,
            terms: self.terms.symmetric_difference(&other.terms).copied().collect(),
        }
    }

    /// Product in `R_m`: monomials multiply by OR-ing masks.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.m, other.m, "polynomials over different rings");
        let mut out = Polynomial::zero(self.m());
        for &a in &self.terms {
            for &b in &other.terms {
                out.toggle(a | b);
            }
        }
        out
    }

    /// Termwise multiplicative complement.
    pub fn complement(&self) -> Polynomial {
        let full = full_mask(self.m());
        Polynomial {
            m: self.m,
            terms: self.terms.iter().map(|&t| t ^ full).collect(),
        }
    }

    /// `psi` extended additively.
    pub fn psi(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.m());
        for f in self.terms() {
            out = out.add(&f.psi());
        }
        out
    }

    pub fn evaluate(&self) -> BitVector {
        let n = 1usize << self.m();
        let mut v = BitVector::zeros(n);
        for k in 0..n {
            let ones = self.terms.iter().filter(|&&t| k & t as usize == 0).count();
            if ones & 1 == 1 {
                v.set(k, true);
            }
        }
        v
    }

    /// Parses `+`-separated monomials such as `x0x1 + x2 + 1`; `0` is the
    /// zero polynomial.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        check_m(m)?;
        if s.trim() == "0" {
            return Ok(Self::zero(m));
        }
        let mut p = Self::zero(m);
        for part in s.split('+') {
            p.toggle(Monomial::parse(part, m)?.mask);
        }
        Ok(p)
    }
}

impl From<Monomial> for Polynomial {
    fn from(f: Monomial) -> Self {
        Polynomial {
            m: f.m,
            terms: BTreeSet::from([f.mask]),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut masks: Vec<u32> = self.terms.iter().copied().collect();
        masks.sort_by(|&a, &b| display_order(a, b));
        for (k, mask) in masks.into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}", Monomial { m: self.m, mask })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub fn evaluate(p: &Polynomial) -> BitVector {
    p.evaluate()
}

pub fn poly_mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
    a.mul(b)
}

/// `f` divides `g`.
pub fn leq_w(f: &Monomial, g: &Monomial) -> bool {
    f.divides(g)
}

/// Shift order between monomials of equal degree: positionwise comparison of
/// the ascending supports.
pub fn leq_sh(f: &Monomial, g: &Monomial) -> Result<bool> {
    if f.degree() != g.degree() {
        return Err(Error::Validation(format!(
            "shift order needs equal degrees, got deg({f}) = {} and deg({g}) = {}",
            f.degree(),
            g.degree()
        )));
    }
    Ok(f.support().iter().zip(g.support()).all(|(a, b)| *a <= b))
}

/// The order `f <= g`: some `g*` with `f <=_sh g* | g`. The witness is the
/// `deg(f)` largest variables of `g`.
pub fn leq(f: &Monomial, g: &Monomial) -> bool {
    assert_eq!(f.m, g.m, "monomials over different rings");
    let (fs, gs) = (f.support(), g.support());
    if fs.len() > gs.len() {
        return false;
    }
    fs.iter().zip(&gs[gs.len() - fs.len()..]).all(|(a, b)| a <= b)
}

/// Definition-level check of `leq`, searching all `deg(f)`-subsets of `g`.
pub fn leq_exhaustive(f: &Monomial, g: &Monomial) -> bool {
    let d = f.degree();
    let mut sub = g.mask;
    loop {
        if sub.count_ones() as usize == d {
            let star = Monomial { m: g.m, mask: sub };
            if leq_sh(f, &star).unwrap_or(false) {
                return true;
            }
        }
        if sub == 0 {
            return false;
        }
        sub = (sub - 1) & g.mask;
    }
}

/// Immediate predecessors of `f` under the elementary moves that generate
/// the order: drop one variable, or shift one variable `x_i` to `x_{i-1}`
/// when `x_{i-1}` is absent.
fn elementary_predecessors(mask: u32, m: usize) -> impl Iterator<Item = u32> {
    (0..m).filter(move |&i| mask >> i & 1 == 1).flat_map(move |i| {
        let dropped = Some(mask & !(1 << i));
        let shifted = (i > 0 && mask >> (i - 1) & 1 == 0).then(|| (mask & !(1 << i)) | (1 << (i - 1)));
        dropped.into_iter().chain(shifted)
    })
}

/// A set of monomials over `m` variables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialSet {
    m: u8,
    members: BTreeSet<u32>,
}

impl MonomialSet {
    pub fn empty(m: usize) -> Self {
        Self {
            m: m as u8,
            members: BTreeSet::new(),
        }
    }

    /// All of `M_m`.
    pub fn all(m: usize) -> Self {
        Self {
            m: m as u8,
            members: (0..=full_mask(m)).collect(),
        }
    }

    pub fn from_monomials<I: IntoIterator<Item = Monomial>>(m: usize, monomials: I) -> Self {
        let mut s = Self::empty(m);
        for f in monomials {
            s.insert(f);
        }
        s
    }

    /// Monomials of the rows `indices` of `G_N`.
    pub fn from_indices(indices: &[usize], m: usize) -> Result<Self> {
        let mut s = Self::empty(m);
        for &i in indices {
            s.insert(Monomial::from_index(i, m)?);
        }
        Ok(s)
    }

    /// The decreasing interval `[1, f]`.
    pub fn interval(f: &Monomial) -> Self {
        decreasing_closure(&Self::from_monomials(f.m(), [*f]))
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn insert(&mut self, f: Monomial) -> bool {
        assert_eq!(f.m, self.m, "monomial over a different ring");
        self.members.insert(f.mask)
    }

    pub fn remove(&mut self, f: &Monomial) -> bool {
        self.members.remove(&f.mask)
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        f.m == self.m && self.members.contains(&f.mask)
    }

    /// Members in ascending mask order.
    pub fn iter(&self) -> impl Iterator<Item = Monomial> + '_ {
        self.members.iter().map(move |&mask| Monomial { m: self.m, mask })
    }

    /// Row indices of the members, ascending.
    pub fn indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.iter().map(|f| f.index()).collect();
        v.sort_unstable();
        v
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.iter().map(|f| f.degree()).max()
    }

    /// The degree-`r` layer `I_r`.
    pub fn layer(&self, r: usize) -> MonomialSet {
        Self {
            m: self.m,
            members: self
                .members
                .iter()
                .copied()
                .filter(|t| t.count_ones() as usize == r)
                .collect(),
        }
    }

    pub fn complement_each(&self) -> MonomialSet {
        let full = full_mask(self.m());
        Self {
            m: self.m,
            members: self.members.iter().map(|t| t ^ full).collect(),
        }
    }

    /// `M_m` minus this set.
    pub fn set_complement(&self) -> MonomialSet {
        Self {
            m: self.m,
            members: (0..=full_mask(self.m()))
                .filter(|t| !self.members.contains(t))
                .collect(),
        }
    }

    pub fn is_subset(&self, other: &MonomialSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn union(&self, other: &MonomialSet) -> MonomialSet {
        Self {
            m: self.m,
            members: self.members.union(&other.members).copied().collect(),
        }
    }

    pub fn is_decreasing(&self) -> bool {
        is_decreasing(self)
    }

    /// Generator matrix of `C(I)`, rows in ascending row-index order.
    pub fn generator(&self) -> BitMatrix {
        let rows = self
            .indices()
            .into_iter()
            .map(|i| Monomial::from_index(i, self.m()).unwrap().evaluate())
            .collect();
        BitMatrix::from_rows(1 << self.m(), rows).expect("evaluations have length 2^m")
    }
}

impl fmt::Debug for MonomialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub fn is_decreasing(s: &MonomialSet) -> bool {
    s.members
        .iter()
        .all(|&f| elementary_predecessors(f, s.m()).all(|g| s.members.contains(&g)))
}

pub fn decreasing_closure(s: &MonomialSet) -> MonomialSet {
    let mut out = s.clone();
    let mut stack: Vec<u32> = s.members.iter().copied().collect();
    while let Some(f) = stack.pop() {
        for g in elementary_predecessors(f, s.m()) {
            if out.members.insert(g) {
                stack.push(g);
            }
        }
    }
    out
}

/// Element `(B, eps)` of the lower-triangular affine group `LTA(m, 2)`.
///
/// Row `i` of `B` is stored as a mask of the strictly lower entries
/// `b_{i,j}`, `j < i`; the diagonal is implicitly one.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LtaTransform {
    m: u8,
    lower: Vec<u32>,
    eps: u32,
}

impl LtaTransform {
    pub fn identity(m: usize) -> Self {
        Self {
            m: m as u8,
            lower: vec![0; m],
            eps: 0,
        }
    }

    /// Validates that `b` is lower unitriangular.
    pub fn new(b: &BitMatrix, eps: &[bool]) -> Result<Self> {
        let m = b.rows();
        check_m(m)?;
        if !b.is_lower_unitriangular() {
            return Err(Error::Validation(
                "LTA matrix must be lower triangular with unit diagonal".into(),
            ));
        }
        if eps.len() != m {
            return Err(Error::Validation(format!(
                "translation has length {}, expected {m}",
                eps.len()
            )));
        }
        let lower = (0..m)
            .map(|i| (0..i).filter(|&j| b.get(i, j)).fold(0u32, |acc, j| acc | 1 << j))
            .collect();
        let eps = eps.iter().enumerate().fold(0u32, |acc, (i, &e)| acc | (e as u32) << i);
        Ok(Self { m: m as u8, lower, eps })
    }

    /// `lower[i]` holds `b_{i,j}` for `j < i` as bit `j`.
    pub fn from_masks(m: usize, lower: Vec<u32>, eps: u32) -> Result<Self> {
        check_m(m)?;
        if lower.len() != m {
            return Err(Error::Validation(format!("expected {m} rows, got {}", lower.len())));
        }
        for (i, &row) in lower.iter().enumerate() {
            if row >> i != 0 {
                return Err(Error::Validation(format!(
                    "row {i} has entries on or above the diagonal"
                )));
            }
        }
        if eps & !full_mask(m) != 0 {
            return Err(Error::Validation("translation uses variables beyond m".into()));
        }
        Ok(Self { m: m as u8, lower, eps })
    }

    /// Restriction to the subgroup `LTA(m,2)_g`: translations only on
    /// `ind(g)`, and `b_{i,j}` only for `i in ind(g)`, `j not in ind(g)`.
    pub fn restricted_to(&self, g: &Monomial) -> Self {
        let s = g.mask();
        Self {
            m: self.m,
            lower: self
                .lower
                .iter()
                .enumerate()
                .map(|(i, &row)| if s >> i & 1 == 1 { row & !s } else { 0 })
                .collect(),
            eps: self.eps & s,
        }
    }

    pub fn m(&self) -> usize {
        self.m as usize
    }

    /// Linear form substituted for `x_i`.
    pub fn image_of_var(&self, i: usize) -> Polynomial {
        let m = self.m();
        let mut p = Polynomial::from(Monomial {
            m: self.m,
            mask: 1 << i,
        });
        for j in 0..i {
            if self.lower[i] >> j & 1 == 1 {
                p = p.add(
                    &Monomial {
                        m: self.m,
                        mask: 1 << j,
                    }
                    .into(),
                );
            }
        }
        if self.eps >> i & 1 == 1 {
            p = p.add(&Polynomial::one(m));
        }
        p
    }
}

/// Substitutes `x_i <- x_i + sum_{j<i} b_{i,j} x_j + eps_i` into `f`.
pub fn apply_affine(f: &Monomial, t: &LtaTransform) -> Polynomial {
    assert_eq!(f.m(), t.m(), "transform over a different ring");
    f.support()
        .into_iter()
        .fold(Polynomial::one(f.m()), |acc, i| acc.mul(&t.image_of_var(i)))
}

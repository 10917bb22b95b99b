//! Plain polar, PAC and generalized polynomial polar codes.

mod profile;
mod spec_file;

use std::fmt;

use rand::Rng;

use crate::error::{Error, Result};
use crate::gf2::{kronecker_power, mat_inverse, mat_mul, BitMatrix, BitVector, MAX_M};
use crate::monomial::{Monomial, MonomialSet, Polynomial};

pub use profile::{beta_profile, beta_profile_exact, build_info_set, ProfileMethod, ReliabilityProfile};
pub use spec_file::{PretransformSpec, ProfileSpec, SpecFile};

/// `G_N = [[1,0],[1,1]]^{(x) m}`.
pub fn polar_kernel(m: usize) -> Result<BitMatrix> {
    if m > MAX_M {
        return Err(Error::SizeLimit { m, max: MAX_M });
    }
    let g2 = BitMatrix::parse_rows(&["10", "11"]).expect("static kernel");
    kronecker_power(&g2, m)
}

fn check_bits(p: &[u8]) -> Result<()> {
    if let Some(b) = p.iter().find(|&&b| b > 1) {
        return Err(Error::Validation(format!("coefficient {b} is not a bit")));
    }
    Ok(())
}

/// Upper-triangular banded Toeplitz matrix: row `i` carries `p_0..p_l`
/// starting at column `i`, truncated at column `n-1`.
pub fn toeplitz_matrix(p: &[u8], n: usize) -> Result<BitMatrix> {
    check_bits(p)?;
    match p.first() {
        Some(1) => {}
        Some(_) => return Err(Error::Validation("Toeplitz coefficients must start with p0 = 1".into())),
        None => return Err(Error::Validation("empty Toeplitz coefficient vector".into())),
    }
    if p.len() > n {
        return Err(Error::Validation(format!("{} coefficients exceed size {n}", p.len())));
    }
    let mut out = BitMatrix::zeros(n, n);
    for i in 0..n {
        for (t, &b) in p.iter().enumerate() {
            if b == 1 && i + t < n {
                out.set(i, i + t, true);
            }
        }
    }
    Ok(out)
}

/// Upper unitriangular `n x n` matrix with i.i.d. uniform strictly-upper bits.
pub fn random_upper_unitriangular<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BitMatrix {
    let mut out = BitMatrix::identity(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<bool>() {
                out.set(i, j, true);
            }
        }
    }
    out
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Pretransform {
    Identity,
    /// Convolution with `p`, `p_0 = 1`.
    Toeplitz(Vec<u8>),
    Matrix(BitMatrix),
}

impl Pretransform {
    pub fn toeplitz(p: &[u8]) -> Self {
        Pretransform::Toeplitz(p.to_vec())
    }

    /// Parses a bit string such as `1011`.
    pub fn toeplitz_from_str(bits: &str) -> Result<Self> {
        let p = bits
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse(format!("invalid Toeplitz bit {c:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(Pretransform::Toeplitz(p))
    }

    pub fn matrix(&self, n: usize) -> Result<BitMatrix> {
        match self {
            Pretransform::Identity => Ok(BitMatrix::identity(n)),
            Pretransform::Toeplitz(p) => toeplitz_matrix(p, n),
            Pretransform::Matrix(p) => {
                if p.shape() != (n, n) {
                    return Err(Error::Validation(format!(
                        "pretransform is {}x{}, expected {n}x{n}",
                        p.rows(),
                        p.cols()
                    )));
                }
                Ok(p.clone())
            }
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Hash)]
pub enum PretransformClass {
    Identity,
    /// Upper triangular with unit diagonal.
    Upper,
    /// Lower triangular with unit diagonal.
    Lower,
    General,
}

impl PretransformClass {
    pub fn of(p: &BitMatrix) -> Self {
        if p.is_identity() {
            PretransformClass::Identity
        } else if p.is_upper_unitriangular() {
            PretransformClass::Upper
        } else if p.is_lower_unitriangular() {
            PretransformClass::Lower
        } else {
            PretransformClass::General
        }
    }

    /// Identity counts as upper.
    pub fn is_upper(self) -> bool {
        matches!(self, PretransformClass::Identity | PretransformClass::Upper)
    }
}

impl fmt::Display for PretransformClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PretransformClass::Identity => "identity",
            PretransformClass::Upper => "upper",
            PretransformClass::Lower => "lower",
            PretransformClass::General => "general",
        })
    }
}

/// `(m, A, P)`: the declarative identity of a code.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CodeSpec {
    m: usize,
    info_set: Vec<usize>,
    pretransform: Pretransform,
    class: PretransformClass,
}

impl CodeSpec {
    pub fn new(m: usize, info_set: &[usize], pretransform: Pretransform) -> Result<Self> {
        if m > MAX_M {
            return Err(Error::SizeLimit { m, max: MAX_M });
        }
        let n = 1usize << m;
        let mut a = info_set.to_vec();
        a.sort_unstable();
        if a.is_empty() {
            return Err(Error::Validation("information set is empty".into()));
        }
        if let Some(w) = a.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Validation(format!("index {} repeated in information set", w[0])));
        }
        if let Some(&i) = a.last().filter(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: i, bound: n });
        }
        let p = pretransform.matrix(n)?;
        let class = PretransformClass::of(&p);
        if class == PretransformClass::General {
            mat_inverse(&p).map_err(|_| Error::Validation("explicit pretransform is singular".into()))?;
        }
        Ok(Self {
            m,
            info_set: a,
            pretransform,
            class,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        1 << self.m
    }

    pub fn k(&self) -> usize {
        self.info_set.len()
    }

    /// `A`, ascending.
    pub fn info_set(&self) -> &[usize] {
        &self.info_set
    }

    /// `A^c`, ascending.
    pub fn frozen_set(&self) -> Vec<usize> {
        let mut is_info = vec![false; self.n()];
        for &i in &self.info_set {
            is_info[i] = true;
        }
        (0..self.n()).filter(|&i| !is_info[i]).collect()
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.info_set.binary_search(&i).is_err()
    }

    pub fn pretransform(&self) -> &Pretransform {
        &self.pretransform
    }

    pub fn class(&self) -> PretransformClass {
        self.class
    }

    pub fn pretransform_matrix(&self) -> BitMatrix {
        self.pretransform.matrix(self.n()).expect("validated at construction")
    }

    /// Monomials `I` attached to `A`.
    pub fn info_monomials(&self) -> MonomialSet {
        MonomialSet::from_indices(&self.info_set, self.m).expect("validated at construction")
    }

    /// Same `(m, A)` with the identity pretransform.
    pub fn without_pretransform(&self) -> CodeSpec {
        CodeSpec {
            m: self.m,
            info_set: self.info_set.clone(),
            pretransform: Pretransform::Identity,
            class: PretransformClass::Identity,
        }
    }
}

/// A [`CodeSpec`] with its realized generator.
#[derive(Clone, Debug)]
pub struct Code {
    spec: CodeSpec,
    transform_product: BitMatrix,
    generator: BitMatrix,
}

pub fn build_code(spec: &CodeSpec) -> Result<Code> {
    let g = polar_kernel(spec.m)?;
    let transform_product = match spec.pretransform {
        Pretransform::Identity => g,
        _ => mat_mul(&spec.pretransform_matrix(), &g)?,
    };
    let generator = transform_product.select_rows(&spec.info_set);
    Ok(Code {
        spec: spec.clone(),
        transform_product,
        generator,
    })
}

impl Code {
    pub fn new(spec: &CodeSpec) -> Result<Self> {
        build_code(spec)
    }

    pub fn spec(&self) -> &CodeSpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n()
    }

    pub fn k(&self) -> usize {
        self.spec.k()
    }

    pub fn m(&self) -> usize {
        self.spec.m
    }

    /// Rows `A` of `P G_N`.
    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// `P G_N`.
    pub fn transform_product(&self) -> &BitMatrix {
        &self.transform_product
    }

    /// Generator of the plain polar code with the same `A`.
    pub fn polar_generator(&self) -> BitMatrix {
        self.spec.info_monomials().generator()
    }

    pub fn encode(&self, v: &BitVector) -> Result<BitVector> {
        encode(self, v)
    }
}

/// Places `v` on the positions `A` of a length-`N` vector.
fn embed(spec: &CodeSpec, v: &BitVector) -> Result<BitVector> {
    if v.len() != spec.k() {
        return Err(Error::Validation(format!(
            "message has {} bits, code dimension is {}",
            v.len(),
            spec.k()
        )));
    }
    let mut out = BitVector::zeros(spec.n());
    for j in v.iter_ones() {
        out.set(spec.info_set[j], true);
    }
    Ok(out)
}

/// `c = v_A P G_N`, frozen positions zero.
pub fn encode(code: &Code, v: &BitVector) -> Result<BitVector> {
    let u = embed(&code.spec, v)?;
    code.transform_product.left_mul_vector(&u)
}

/// `x = u G_N` by the butterfly: `x_k` is the sum of `u_i` over `i` whose
/// bits contain those of `k`.
pub fn polar_transform(u: &BitVector) -> BitVector {
    let n = u.len();
    assert!(n.is_power_of_two(), "length {n} is not a power of two");
    let mut x: Vec<bool> = u.iter().collect();
    let mut b = 1;
    while b < n {
        for i in 0..n {
            if i & b == 0 && x[i | b] {
                x[i] = !x[i];
            }
        }
        b <<= 1;
    }
    BitVector::from_bits(x)
}

/// Encoding through the pretransform directly (convolution `v * p` for
/// Toeplitz) followed by [`polar_transform`].
pub fn encode_via_convolution(spec: &CodeSpec, v: &BitVector) -> Result<BitVector> {
    let v = embed(spec, v)?;
    let n = spec.n();
    let u = match &spec.pretransform {
        Pretransform::Identity => v,
        Pretransform::Toeplitz(p) => {
            let mut u = BitVector::zeros(n);
            for i in v.iter_ones() {
                for (t, &b) in p.iter().enumerate() {
                    if b == 1 && i + t < n {
                        u.flip(i + t);
                    }
                }
            }
            u
        }
        Pretransform::Matrix(p) => p.left_mul_vector(&v)?,
    };
    Ok(polar_transform(&u))
}

/// The polynomial whose evaluation is row `i` of `P G_N`.
pub fn row_polynomial(spec: &CodeSpec, i: usize) -> Result<Polynomial> {
    let n = spec.n();
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, bound: n });
    }
    let row = match &spec.pretransform {
        Pretransform::Identity => BitVector::unit(n, i),
        Pretransform::Toeplitz(p) => BitVector::from_indices(
            n,
            &p.iter()
                .enumerate()
                .filter(|&(t, &b)| b == 1 && i + t < n)
                .map(|(t, _)| i + t)
                .collect::<Vec<_>>(),
        ),
        Pretransform::Matrix(p) => p.row(i).clone(),
    };
    Ok(Polynomial::from_monomials(
        spec.m,
        row.iter_ones()
            .map(|j| Monomial::from_index(j, spec.m).expect("column in range")),
    ))
}

/// `H = P^{-1}`.
pub fn deconvolve(spec: &CodeSpec) -> Result<BitMatrix> {
    mat_inverse(&spec.pretransform_matrix())
}

//! Duals of monomial codes and of upper polynomial polar codes.

use rayon::prelude::*;

use crate::construction::{polar_kernel, row_polynomial, Code, CodeSpec};
use crate::error::{Error, Result};
use crate::gf2::{mat_inverse, mat_mul, null_space, rank, BitMatrix, BitVector};
use crate::monomial::{Monomial, Polynomial};

/// Permutation matrix swapping `i` with `2^m - 1 - i`.
pub fn make_q_pi(m: usize) -> BitMatrix {
    let n = 1usize << m;
    let rows = (0..n).map(|i| BitVector::unit(n, n - 1 - i)).collect();
    BitMatrix::from_rows(n, rows).expect("unit rows have width n")
}

/// `Q_pi` together with `G_N`.
#[derive(Clone, Debug)]
pub struct DualityKit {
    m: usize,
    q_pi: BitMatrix,
    g: BitMatrix,
}

impl DualityKit {
    pub fn new(m: usize) -> Result<Self> {
        Ok(Self {
            m,
            q_pi: make_q_pi(m),
            g: polar_kernel(m)?,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q_pi(&self) -> &BitMatrix {
        &self.q_pi
    }

    pub fn g(&self) -> &BitMatrix {
        &self.g
    }

    /// `Q_pi G_N Q_pi`, whose row `i` is `ev(psi(x^{bin(i)}))`.
    pub fn psi_matrix(&self) -> BitMatrix {
        let n = 1usize << self.m;
        let rows = (0..n).map(|i| self.g.row(n - 1 - i).reversed()).collect();
        BitMatrix::from_rows(n, rows).expect("rows have width n")
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub struct GIdentityReport {
    /// `G = G^{-1}`.
    pub self_inverse: bool,
    /// `Q_pi G = (G Q_pi)^{-1}`.
    pub q_g_inverse: bool,
    /// `(G Q_pi)^2 = Q_pi G`.
    pub square: bool,
    /// `G Q_pi G = Q_pi G Q_pi`.
    pub braid: bool,
}

impl GIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.self_inverse && self.q_g_inverse && self.square && self.braid
    }
}

pub fn check_g_identities(m: usize) -> Result<GIdentityReport> {
    let kit = DualityKit::new(m)?;
    let (g, q) = (&kit.g, &kit.q_pi);
    let gq = mat_mul(g, q)?;
    let qg = mat_mul(q, g)?;
    Ok(GIdentityReport {
        self_inverse: mat_mul(g, g)?.is_identity(),
        q_g_inverse: mat_mul(&qg, &gq)?.is_identity(),
        square: mat_mul(&gq, &gq)? == qg,
        braid: mat_mul(&gq, g)? == mat_mul(&qg, q)?,
    })
}

/// `ev(p1) . ev(p2) = 0`, decided by the absence of `x_0...x_{m-1}` from
/// `p1 p2`.
pub fn orthogonal_eval(p1: &Polynomial, p2: &Polynomial) -> bool {
    !p1.mul(p2).contains(&Monomial::full(p1.m()))
}

fn require_upper(spec: &CodeSpec, what: &str) -> Result<()> {
    if spec.class().is_upper() {
        Ok(())
    } else {
        Err(Error::TheoremScope(format!(
            "{what} is only defined for upper unitriangular pretransforms, got {}",
            spec.class()
        )))
    }
}

/// `M_{i,j}`: parity of the terms `g` of `P_j` with `g-check | f_i-check`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MMatrix {
    pub matrix: BitMatrix,
    pub spec: CodeSpec,
}

fn m_entry(row_poly: &Polynomial, i: usize, m: usize) -> bool {
    let fi_check = Monomial::from_index(i, m).expect("row in range").complement();
    row_poly.terms().filter(|g| g.complement().divides(&fi_check)).count() % 2 == 1
}

/// Definitional construction from the row polynomials.
pub fn m_matrix(spec: &CodeSpec) -> Result<MMatrix> {
    require_upper(spec, "the M-matrix")?;
    let (n, m) = (spec.n(), spec.m());
    let polys = (0..n).map(|j| row_polynomial(spec, j)).collect::<Result<Vec<_>>>()?;
    let rows: Vec<BitVector> = (0..n)
        .into_par_iter()
        .map(|i| BitVector::from_bits(polys.iter().map(|p| m_entry(p, i, m))))
        .collect();
    Ok(MMatrix {
        matrix: BitMatrix::from_rows(n, rows)?,
        spec: spec.clone(),
    })
}

/// `G_N P^t`.
pub fn m_matrix_product(spec: &CodeSpec) -> Result<BitMatrix> {
    mat_mul(&polar_kernel(spec.m())?, &spec.pretransform_matrix().transpose())
}

/// Whether row `j` of `P G_N` interferes with `ev(f_i-check)`. Rows ahead of
/// `i` never do.
pub fn backward_support_check(spec: &CodeSpec, i: usize, j: usize) -> Result<bool> {
    require_upper(spec, "the backward support check")?;
    let n = spec.n();
    for idx in [i, j] {
        if idx >= n {
            return Err(Error::IndexOutOfRange { index: idx, bound: n });
        }
    }
    if j > i {
        return Ok(false);
    }
    Ok(m_entry(&row_polynomial(spec, j)?, i, spec.m()))
}

/// `(P^t)^{-1} G_N`, lower unitriangular whenever `P` is upper unitriangular.
pub fn dual_lower_factor(spec: &CodeSpec) -> Result<BitMatrix> {
    let pt_inv = mat_inverse(&spec.pretransform_matrix())?.transpose();
    mat_mul(&pt_inv, &polar_kernel(spec.m())?)
}

/// Generator of the dual of an upper polynomial polar code: rows `A^c` of
/// `(P^t)^{-1} Q_pi G_N Q_pi`, ascending.
pub fn dual_generator(code: &Code) -> Result<BitMatrix> {
    dual_generator_checked(code, cfg!(debug_assertions))
}

/// As [`dual_generator`]; with `cross_check` the product
/// `(P^t)^{-1} G_N Q_pi G_N` is also formed and compared.
pub fn dual_generator_checked(code: &Code, cross_check: bool) -> Result<BitMatrix> {
    let spec = code.spec();
    require_upper(spec, "the closed-form dual")?;
    let frozen = spec.frozen_set();
    let kit = DualityKit::new(spec.m())?;
    let pt_inv = mat_inverse(&spec.pretransform_matrix())?.transpose();
    let selected = pt_inv.select_rows(&frozen);
    let dual = mat_mul(&selected, &kit.psi_matrix())?;
    if cross_check {
        let gqg = mat_mul(&mat_mul(&kit.g, &kit.q_pi)?, &kit.g)?;
        if mat_mul(&selected, &gqg)? != dual {
            return Err(Error::Verification("the two closed forms of the dual disagree".into()));
        }
    }
    Ok(dual)
}

/// True iff `dual` generates exactly the dual of `code`.
pub fn verify_duality(code: &Code, dual: &BitMatrix) -> Result<bool> {
    let g = code.generator();
    if dual.cols() != g.cols() {
        return Err(Error::Shape {
            op: "verify_duality",
            left: dual.shape(),
            right: g.shape(),
        });
    }
    let orthogonal = dual
        .row_vectors()
        .iter()
        .all(|d| g.row_vectors().iter().all(|r| !d.dot(r)));
    Ok(orthogonal && rank(dual) + rank(g) == code.n())
}

/// Dual of an arbitrary code by kernel computation.
pub fn generic_kernel_dual(code: &Code) -> BitMatrix {
    null_space(code.generator())
}

/// Both descriptions of the dual of the monomial code `C_G(A)`.
#[derive(Clone, Debug)]
pub struct MonomialDual {
    /// `psi(f-check)` for every frozen monomial `f`.
    pub psi_basis: Vec<Polynomial>,
    /// Rows `(A^c)-check` of `G_N Q_pi`.
    pub matrix_form: BitMatrix,
    /// Row indices of the complemented frozen monomials, ascending.
    pub complemented_indices: Vec<usize>,
}

impl MonomialDual {
    pub fn psi_generator(&self, m: usize) -> BitMatrix {
        BitMatrix::from_rows(1 << m, self.psi_basis.iter().map(Polynomial::evaluate).collect())
            .expect("evaluations have length 2^m")
    }
}

pub fn dual_monomial_code(info_set: &[usize], m: usize) -> Result<MonomialDual> {
    let spec = CodeSpec::new(m, info_set, crate::construction::Pretransform::Identity)?;
    let n = spec.n();
    let frozen = spec.frozen_set();
    let psi_basis = frozen
        .iter()
        .map(|&i| Ok(Monomial::from_index(i, m)?.complement().psi()))
        .collect::<Result<Vec<_>>>()?;
    let mut complemented_indices: Vec<usize> = frozen.iter().map(|&i| n - 1 - i).collect();
    complemented_indices.sort_unstable();
    let gq = mat_mul(&polar_kernel(m)?, &make_q_pi(m))?;
    Ok(MonomialDual {
        psi_basis,
        matrix_form: gq.select_rows(&complemented_indices),
        complemented_indices,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::{build_code, random_upper_unitriangular, Pretransform};
    use crate::gf2::same_row_space;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const PAC_FROZEN: [usize; 16] = [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 32, 33];

    fn pac_spec(p: &[u8]) -> CodeSpec {
        let a: Vec<usize> = (0..64).filter(|i| !PAC_FROZEN.contains(i)).collect();
        CodeSpec::new(6, &a, Pretransform::toeplitz(p)).unwrap()
    }

    fn poly(s: &str) -> Polynomial {
        Polynomial::parse(s, 6).unwrap()
    }

    #[test]
    fn q_pi_examples() {
        assert_eq!(make_q_pi(1), BitMatrix::parse_rows(&["01", "10"]).unwrap());
        for m in 0..=8 {
            let q = make_q_pi(m);
            assert!(q.is_permutation());
            assert!(mat_mul(&q, &q).unwrap().is_identity());
            assert_eq!(q.transpose(), q);
        }
    }

    #[test]
    fn psi_matrix_rows() {
        for m in 0..=5 {
            let kit = DualityKit::new(m).unwrap();
            let direct = mat_mul(&mat_mul(kit.q_pi(), kit.g()).unwrap(), kit.q_pi()).unwrap();
            assert_eq!(kit.psi_matrix(), direct);
            for i in 0..1usize << m {
                let f = Monomial::new(i as u32, m).unwrap();
                assert_eq!(direct.row(i), &f.psi().evaluate());
            }
        }
    }

    #[test]
    fn g_identities_small() {
        for m in [1, 2, 6] {
            assert!(check_g_identities(m).unwrap().all_hold(), "m={m}");
        }
    }

    #[test]
    fn orthogonality_examples() {
        let full = Polynomial::from(Monomial::full(6));
        assert!(orthogonal_eval(&full, &Polynomial::zero(6)));
        assert!(!orthogonal_eval(&full, &full));
        let pg_check = poly("x2x3 + x1x2x3 + x0x1x2x3");
        assert!(!orthogonal_eval(&pg_check.psi(), &poly("x4x5")));
    }

    #[test]
    fn orthogonality_matches_dot_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for m in 1..=5 {
            for _ in 0..200 {
                let mut rand_poly = || {
                    Polynomial::from_monomials(
                        m,
                        (0..rng.gen_range(0..6)).map(|_| Monomial::new(rng.gen::<u32>() & ((1 << m) - 1), m).unwrap()),
                    )
                };
                let (a, b) = (rand_poly(), rand_poly());
                assert_eq!(orthogonal_eval(&a, &b), !a.evaluate().dot(&b.evaluate()));
            }
        }
    }

    #[test]
    fn m_matrix_identity_is_g() {
        let spec = CodeSpec::new(4, &[0], Pretransform::Identity).unwrap();
        assert_eq!(m_matrix(&spec).unwrap().matrix, polar_kernel(4).unwrap());
    }

    #[test]
    fn m_matrix_printed_block() {
        let mm = m_matrix(&pac_spec(&[1, 0, 1, 1])).unwrap().matrix;
        let expected = [
            "1000000000",
            "1100000000",
            "0010000000",
            "1011000000",
            "1110100000",
            "1001110000",
            "0101001000",
            "1111101100",
            "1000011010",
            "1100010111",
        ];
        for (i, row) in expected.iter().enumerate() {
            let got: String = (0..10).map(|j| if mm.get(i, j) { '1' } else { '0' }).collect();
            assert_eq!(&got, row, "row {i}");
        }
        assert!(mm.is_lower_unitriangular());
    }

    #[test]
    fn m_matrix_equals_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for m in 1..=5 {
            for _ in 0..10 {
                let p = random_upper_unitriangular(1 << m, &mut rng);
                let spec = CodeSpec::new(m, &[0], Pretransform::Matrix(p)).unwrap();
                assert_eq!(m_matrix(&spec).unwrap().matrix, m_matrix_product(&spec).unwrap());
            }
        }
    }

    #[test]
    fn m_matrix_rejects_lower() {
        let lower = BitMatrix::parse_rows(&["10", "11"]).unwrap();
        let spec = CodeSpec::new(1, &[0], Pretransform::Matrix(lower)).unwrap();
        assert!(matches!(m_matrix(&spec), Err(Error::TheoremScope(_))));
    }

    #[test]
    fn backward_checks() {
        let spec = pac_spec(&[1, 0, 1, 1]);
        let row3: Vec<bool> = (0..4).map(|j| backward_support_check(&spec, 3, j).unwrap()).collect();
        assert_eq!(row3, vec![true, false, true, true]);
        for i in 0..64 {
            assert!(backward_support_check(&spec, i, i).unwrap());
            if i + 1 < 64 {
                assert!(!backward_support_check(&spec, i, i + 1).unwrap());
            }
        }
    }

    #[test]
    fn pac_dual() {
        let code = build_code(&pac_spec(&[1, 0, 1, 1])).unwrap();
        let d = dual_generator_checked(&code, true).unwrap();
        assert_eq!(d.shape(), (16, 64));
        assert_eq!(rank(&d), 16);
        assert!(verify_duality(&code, &d).unwrap());
        assert!(!verify_duality(&code, code.generator()).unwrap());
        assert!(dual_lower_factor(code.spec()).unwrap().is_lower_unitriangular());
    }

    #[test]
    fn full_rate_dual_is_empty() {
        let all: Vec<usize> = (0..8).collect();
        let code = build_code(&CodeSpec::new(3, &all, Pretransform::toeplitz(&[1, 1])).unwrap()).unwrap();
        let d = dual_generator(&code).unwrap();
        assert_eq!(d.shape(), (0, 8));
        assert!(verify_duality(&code, &d).unwrap());
    }

    #[test]
    fn monomial_dual_forms() {
        let d = dual_monomial_code(&[7], 3).unwrap();
        assert_eq!(d.matrix_form.rows(), 7);
        assert!(d.matrix_form.row_vectors().iter().all(|r| r.weight() % 2 == 0));
        assert!(same_row_space(&d.matrix_form, &d.psi_generator(3)).unwrap());
        let all: Vec<usize> = (0..8).collect();
        assert_eq!(dual_monomial_code(&all, 3).unwrap().matrix_form.rows(), 0);
    }

    #[test]
    fn monomial_dual_of_decreasing_set() {
        let spec = pac_spec(&[1]);
        let code = build_code(&spec).unwrap();
        let d = dual_monomial_code(spec.info_set(), 6).unwrap();
        assert!(verify_duality(&code, &d.matrix_form).unwrap());
        let info = spec.info_monomials();
        assert!(info.is_decreasing());
        let checked = info.complement_each().set_complement();
        assert!(checked.is_decreasing());
        assert!(same_row_space(&d.matrix_form, &checked.generator()).unwrap());
        assert!(same_row_space(&dual_generator(&code).unwrap(), &checked.generator()).unwrap());
    }

    #[test]
    fn generic_kernel_matches_closed_form() {
        let code = build_code(&pac_spec(&[1, 1])).unwrap();
        assert!(same_row_space(&generic_kernel_dual(&code), &dual_generator(&code).unwrap()).unwrap());
    }
}

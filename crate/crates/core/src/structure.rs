//! Monomial sub- and supercodes of generalized polynomial polar codes.

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::construction::{build_code, random_upper_unitriangular, row_polynomial, Code, CodeSpec, Pretransform};
use crate::duality::dual_generator;
use crate::error::{Error, Result};
use crate::gf2::{intersection_dim, BitMatrix, EchelonBasis};
use crate::monomial::{Monomial, MonomialSet};

/// Inclusive range of row indices; empty when `lo > hi`.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Interval {
    pub lo: usize,
    pub hi: usize,
}

impl Interval {
    /// `[lo, n - 1]`.
    pub fn tail(lo: usize, n: usize) -> Self {
        Self {
            lo,
            hi: n.wrapping_sub(1),
        }
    }

    pub fn len(&self) -> usize {
        if self.lo > self.hi {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn indices(&self) -> Vec<usize> {
        if self.is_empty() {
            Vec::new()
        } else {
            (self.lo..=self.hi).collect()
        }
    }

    /// Generator of the monomial code on these row indices.
    pub fn generator(&self, m: usize) -> BitMatrix {
        MonomialSet::from_indices(&self.indices(), m)
            .expect("interval inside [0, N)")
            .generator()
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            f.write_str("[]")
        } else {
            write!(f, "[{}, {}]", self.lo, self.hi)
        }
    }
}

fn require_upper(code: &Code, what: &str) -> Result<()> {
    if code.spec().class().is_upper() {
        Ok(())
    } else {
        Err(Error::TheoremScope(format!(
            "{what} needs an upper unitriangular pretransform, got {}",
            code.spec().class()
        )))
    }
}

/// `[max(A^c) + 1, N - 1]`, whose monomial code lies inside the code.
pub fn decreasing_subcode(code: &Code) -> Result<(Interval, usize)> {
    require_upper(code, "the decreasing subcode")?;
    let n = code.n();
    let lo = code.spec().frozen_set().last().map_or(0, |&f| f + 1);
    let interval = Interval::tail(lo, n);
    let basis = EchelonBasis::from_matrix(code.generator());
    for i in interval.indices() {
        if !basis.contains(&Monomial::from_index(i, code.m())?.evaluate()) {
            return Err(Error::Verification(format!("row {i} of G_N is missing from the code")));
        }
    }
    Ok((interval, interval.len()))
}

/// `[min(A), N - 1]`, whose monomial code contains the code.
pub fn monomial_supercode_bound(code: &Code) -> Result<(Interval, usize)> {
    require_upper(code, "the monomial supercode bound")?;
    let interval = Interval::tail(code.spec().info_set()[0], code.n());
    let basis = EchelonBasis::from_matrix(&interval.generator(code.m()));
    if let Some(j) = code.generator().row_vectors().iter().position(|r| !basis.contains(r)) {
        return Err(Error::Verification(format!(
            "generator row {j} escapes the interval code"
        )));
    }
    Ok((interval, interval.len()))
}

/// All monomials whose evaluation is a codeword.
pub fn largest_monomial_subcode(code: &Code) -> MonomialSet {
    let basis = EchelonBasis::from_matrix(code.generator());
    let m = code.m();
    MonomialSet::from_monomials(
        m,
        (0..code.n())
            .map(|i| Monomial::from_index(i, m).expect("index in range"))
            .filter(|f| basis.contains(&f.evaluate())),
    )
}

/// Union of the terms of the generator row polynomials.
pub fn smallest_monomial_supercode(code: &Code) -> MonomialSet {
    let spec = code.spec();
    let mut out = MonomialSet::empty(spec.m());
    for &i in spec.info_set() {
        for f in row_polynomial(spec, i).expect("index in range").terms() {
            out.insert(f);
        }
    }
    out
}

/// Dimension of the intersection with the plain polar code on the same `A`.
pub fn polar_intersection(code: &Code) -> usize {
    intersection_dim(code.generator(), &code.polar_generator()).expect("same length")
}

/// Monomial interval codes bracketing the dual.
#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Sandwich {
    /// Contained in the dual: `[N - min(A), N - 1]`.
    pub lower: Interval,
    /// Contains the dual: `[N - 1 - max(A^c), N - 1]`.
    pub upper: Interval,
}

pub fn dual_sandwich(code: &Code) -> Result<Sandwich> {
    require_upper(code, "the dual sandwich")?;
    let n = code.n();
    let lower = Interval::tail(n - code.spec().info_set()[0], n);
    let upper = match code.spec().frozen_set().last() {
        Some(&f) => Interval::tail(n - 1 - f, n),
        None => Interval::tail(n, n),
    };
    let dual = dual_generator(code)?;
    let dual_basis = EchelonBasis::from_matrix(&dual);
    if lower
        .generator(code.m())
        .row_vectors()
        .iter()
        .any(|r| !dual_basis.contains(r))
    {
        return Err(Error::Verification(format!("C_G({lower}) is not inside the dual")));
    }
    let upper_basis = EchelonBasis::from_matrix(&upper.generator(code.m()));
    if dual.row_vectors().iter().any(|r| !upper_basis.contains(r)) {
        return Err(Error::Verification(format!("the dual escapes C_G({upper})")));
    }
    Ok(Sandwich { lower, upper })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureReport {
    pub k: usize,
    pub decreasing_subcode_dim: usize,
    pub monomial_supercode_dim: usize,
    pub largest_monomial_subcode: MonomialSet,
    pub smallest_monomial_supercode: MonomialSet,
    pub polar_intersection_dim: usize,
}

impl StructureReport {
    pub fn analyze(code: &Code) -> Result<Self> {
        Ok(Self {
            k: code.k(),
            decreasing_subcode_dim: decreasing_subcode(code)?.1,
            monomial_supercode_dim: monomial_supercode_bound(code)?.1,
            largest_monomial_subcode: largest_monomial_subcode(code),
            smallest_monomial_supercode: smallest_monomial_supercode(code),
            polar_intersection_dim: polar_intersection(code),
        })
    }

    /// `decreasing <= subcode <= k <= supercode <= N - min(A)`.
    pub fn chain_holds(&self) -> bool {
        self.sweep_row().chain_holds()
    }

    pub fn sweep_row(&self) -> SweepRow {
        SweepRow {
            k: self.k,
            intersection_dim: self.polar_intersection_dim,
            largest_monomial_subcode_dim: self.largest_monomial_subcode.len(),
            smallest_supercode_dim: self.smallest_monomial_supercode.len(),
            decreasing_lb: self.decreasing_subcode_dim,
            supercode_ub: self.monomial_supercode_dim,
        }
    }
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SweepRow {
    pub k: usize,
    pub intersection_dim: usize,
    pub largest_monomial_subcode_dim: usize,
    pub smallest_supercode_dim: usize,
    pub decreasing_lb: usize,
    pub supercode_ub: usize,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str =
        "k,intersection_dim,largest_monomial_subcode_dim,smallest_supercode_dim,decreasing_lb,supercode_ub";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.k,
            self.intersection_dim,
            self.largest_monomial_subcode_dim,
            self.smallest_supercode_dim,
            self.decreasing_lb,
            self.supercode_ub
        )
    }

    pub fn chain_holds(&self) -> bool {
        self.decreasing_lb <= self.largest_monomial_subcode_dim
            && self.largest_monomial_subcode_dim <= self.k
            && self.intersection_dim <= self.k
            && self.k <= self.smallest_supercode_dim
            && self.smallest_supercode_dim <= self.supercode_ub
    }
}

/// One structure report per `k`, with `A` taken from `info_set_for(k)`.
pub fn structure_sweep<F>(m: usize, ks: &[usize], pretransform: &Pretransform, info_set_for: F) -> Result<Vec<SweepRow>>
where
    F: Fn(usize) -> Result<Vec<usize>> + Sync,
{
    ks.par_iter()
        .map(|&k| {
            let spec = CodeSpec::new(m, &info_set_for(k)?, pretransform.clone())?;
            Ok(StructureReport::analyze(&build_code(&spec)?)?.sweep_row())
        })
        .collect()
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct Summary {
    pub mean: f64,
    pub min: usize,
    pub max: usize,
    pub histogram: BTreeMap<usize, usize>,
}

impl Summary {
    fn of(values: &[usize]) -> Self {
        let mut histogram = BTreeMap::new();
        for &v in values {
            *histogram.entry(v).or_insert(0) += 1;
        }
        Self {
            mean: values.iter().sum::<usize>() as f64 / values.len() as f64,
            min: values.iter().copied().min().unwrap_or(0),
            max: values.iter().copied().max().unwrap_or(0),
            histogram,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct EnsembleStats {
    pub m: usize,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
    pub intersection: Summary,
    pub largest_subcode: Summary,
    pub supercode: Summary,
    pub assumption: &'static str,
}

pub const ENSEMBLE_ASSUMPTION: &str = "strictly-upper pretransform entries are i.i.d. uniform bits";

/// Statistics over random upper unitriangular pretransforms. Sample `s` draws
/// from ChaCha8 seeded by `seed` on stream `s`, so results do not depend on
/// the thread count.
pub fn random_upper_ensemble(m: usize, info_set: &[usize], samples: usize, seed: u64) -> Result<EnsembleStats> {
    if samples == 0 {
        return Err(Error::Validation("ensemble needs at least one sample".into()));
    }
    let base = CodeSpec::new(m, info_set, Pretransform::Identity)?;
    let polar = base.info_monomials().generator();
    let per_sample = (0..samples)
        .into_par_iter()
        .map(|s| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(s as u64);
            let p = random_upper_unitriangular(base.n(), &mut rng);
            let code = build_code(&CodeSpec::new(m, info_set, Pretransform::Matrix(p))?)?;
            Ok((
                intersection_dim(code.generator(), &polar)?,
                largest_monomial_subcode(&code).len(),
                smallest_monomial_supercode(&code).len(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let column = |f: fn(&(usize, usize, usize)) -> usize| per_sample.iter().map(f).collect::<Vec<_>>();
    Ok(EnsembleStats {
        m,
        k: base.k(),
        samples,
        seed,
        intersection: Summary::of(&column(|t| t.0)),
        largest_subcode: Summary::of(&column(|t| t.1)),
        supercode: Summary::of(&column(|t| t.2)),
        assumption: ENSEMBLE_ASSUMPTION,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::beta_profile_exact;
    use rand::Rng;

    const PAC_FROZEN: [usize; 16] = [0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 32, 33];

    fn pac_code(p: &[u8]) -> Code {
        let a: Vec<usize> = (0..64).filter(|i| !PAC_FROZEN.contains(i)).collect();
        build_code(&CodeSpec::new(6, &a, Pretransform::toeplitz(p)).unwrap()).unwrap()
    }

    fn mono(s: &str) -> Monomial {
        Monomial::parse(s, 6).unwrap()
    }

    #[test]
    fn pac_example_structure() {
        let code = pac_code(&[1, 0, 1, 1]);
        let (interval, dim) = decreasing_subcode(&code).unwrap();
        assert_eq!((interval, dim), (Interval { lo: 34, hi: 63 }, 30));
        let interval_set = MonomialSet::from_indices(&interval.indices(), 6).unwrap();
        assert_eq!(interval_set, MonomialSet::interval(&mono("x0x2x3x4")));
        let sub = largest_monomial_subcode(&code);
        assert_eq!(sub.len(), 32);
        assert!(interval_set.is_subset(&sub));
        assert!(sub.contains(&mono("x2x5")) && sub.contains(&mono("x0x1x3x5")));
        assert_eq!(polar_intersection(&code), 42);
        assert_eq!(monomial_supercode_bound(&code).unwrap().1, 57);
        let sup = smallest_monomial_supercode(&code).len();
        assert!((48..=57).contains(&sup));
    }

    #[test]
    fn identity_pretransform_is_its_own_monomial_code() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for m in 1..=6 {
            for _ in 0..5 {
                let a: Vec<usize> = (0..1 << m).filter(|_| rng.gen::<bool>()).collect();
                if a.is_empty() {
                    continue;
                }
                let spec = CodeSpec::new(m, &a, Pretransform::Identity).unwrap();
                let code = build_code(&spec).unwrap();
                assert_eq!(largest_monomial_subcode(&code), spec.info_monomials());
                assert_eq!(smallest_monomial_supercode(&code), spec.info_monomials());
                assert_eq!(polar_intersection(&code), a.len());
            }
        }
    }

    #[test]
    fn full_rate_cases() {
        let all: Vec<usize> = (0..16).collect();
        let code = build_code(&CodeSpec::new(4, &all, Pretransform::toeplitz(&[1, 1])).unwrap()).unwrap();
        assert_eq!(decreasing_subcode(&code).unwrap().1, 16);
        assert_eq!(monomial_supercode_bound(&code).unwrap().1, 16);
        let s = dual_sandwich(&code).unwrap();
        assert!(s.lower.is_empty() && s.upper.is_empty());
    }

    #[test]
    fn pac_sandwich() {
        let code = pac_code(&[1, 0, 1, 1]);
        let s = dual_sandwich(&code).unwrap();
        assert_eq!(s.lower, Interval { lo: 57, hi: 63 });
        assert_eq!(s.upper, Interval { lo: 30, hi: 63 });
        assert!(s.lower.len() <= 16 && 16 <= s.upper.len());
    }

    #[test]
    fn sweep_chain_and_bounds() {
        let profile = beta_profile_exact(6, 1, 4).unwrap();
        let ks: Vec<usize> = (14..=50).collect();
        let rows = structure_sweep(6, &ks, &Pretransform::toeplitz(&[1, 1]), |k| profile.info_set(k)).unwrap();
        assert_eq!(rows.len(), 37);
        for row in &rows {
            assert!(row.chain_holds(), "{row:?}");
            let a = profile.info_set(row.k).unwrap();
            let frozen_max = (0..64).filter(|i| !a.contains(i)).max().unwrap();
            assert_eq!(row.decreasing_lb, 63 - frozen_max);
            assert_eq!(row.supercode_ub, 64 - a[0]);
        }
        assert!(rows.iter().any(|r| r.smallest_supercode_dim < r.supercode_ub));
    }

    #[test]
    fn ensemble_is_deterministic() {
        let a = beta_profile_exact(5, 1, 4).unwrap().info_set(20).unwrap();
        let x = random_upper_ensemble(5, &a, 16, 7).unwrap();
        let y = random_upper_ensemble(5, &a, 16, 7).unwrap();
        assert_eq!(x, y);
        assert!(x.intersection.max <= 20);
        assert!(random_upper_ensemble(5, &a, 0, 7).is_err());
    }

    #[test]
    fn ensemble_identity_draw() {
        // with N = 2 the single free bit is zero for some seed, giving the polar code itself
        let seed = (0..64)
            .find(|&s| {
                let mut rng = ChaCha8Rng::seed_from_u64(s);
                rng.set_stream(0);
                random_upper_unitriangular(2, &mut rng).is_identity()
            })
            .unwrap();
        let stats = random_upper_ensemble(1, &[0], 1, seed).unwrap();
        assert_eq!(stats.intersection.min, 1);
    }

    #[test]
    fn csv_row() {
        let row = StructureReport::analyze(&pac_code(&[1, 0, 1, 1])).unwrap().sweep_row();
        assert_eq!(SweepRow::CSV_HEADER.split(',').count(), row.to_csv().split(',').count());
        assert!(row.to_csv().starts_with("48,42,32,"));
    }
}

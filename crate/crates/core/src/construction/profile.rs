//! Reliability orderings of the synthetic channels.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::gf2::MAX_M;

#[derive(Clone, PartialEq, Debug)]
pub enum ProfileMethod {
    /// `beta = 2^(num/den)`, compared exactly.
    Beta {
        num: u32,
        den: u32,
    },
    /// Arbitrary real `beta`, compared in floating point.
    BetaFloat(f64),
    Explicit,
}

/// A permutation of `[0, N)` from least to most reliable.
#[derive(Clone, PartialEq, Debug)]
pub struct ReliabilityProfile {
    m: usize,
    ordering: Vec<usize>,
    method: ProfileMethod,
}

impl ReliabilityProfile {
    pub fn explicit(m: usize, ordering: Vec<usize>) -> Result<Self> {
        check_m(m)?;
        let n = 1usize << m;
        if ordering.len() != n {
            return Err(Error::Validation(format!(
                "ordering has {} entries, expected {n}",
                ordering.len()
            )));
        }
        let mut seen = vec![false; n];
        for &i in &ordering {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Validation(format!("ordering is not a permutation (entry {i})")));
            }
        }
        Ok(Self {
            m,
            ordering,
            method: ProfileMethod::Explicit,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        1 << self.m
    }

    /// Least reliable first.
    pub fn ordering(&self) -> &[usize] {
        &self.ordering
    }

    pub fn method(&self) -> &ProfileMethod {
        &self.method
    }

    /// `rank[i]` is the position of index `i` counted from the most
    /// reliable (rank 0).
    pub fn reliability_rank(&self) -> Vec<usize> {
        let n = self.n();
        let mut rank = vec![0; n];
        for (pos, &i) in self.ordering.iter().enumerate() {
            rank[i] = n - 1 - pos;
        }
        rank
    }

    /// The `k` most reliable indices, ascending.
    pub fn info_set(&self, k: usize) -> Result<Vec<usize>> {
        build_info_set(self, k)
    }
}

fn check_m(m: usize) -> Result<()> {
    if m > MAX_M {
        Err(Error::SizeLimit { m, max: MAX_M })
    } else {
        Ok(())
    }
}

pub fn build_info_set(profile: &ReliabilityProfile, k: usize) -> Result<Vec<usize>> {
    let n = profile.n();
    if k == 0 || k > n {
        return Err(Error::Validation(format!("k = {k} outside [1, {n}]")));
    }
    let mut a = profile.ordering[n - k..].to_vec();
    a.sort_unstable();
    Ok(a)
}

/// Floating-point beta-expansion: scores within a relative `1e-12` of each
/// other are treated as ties and resolved by the smaller index.
pub fn beta_profile(m: usize, beta: f64) -> Result<ReliabilityProfile> {
    check_m(m)?;
    if !(beta > 1.0 && beta.is_finite()) {
        return Err(Error::Validation(format!("beta = {beta} must exceed 1")));
    }
    let n = 1usize << m;
    let powers: Vec<f64> = (0..m).map(|j| beta.powi(j as i32)).collect();
    let score = |i: usize| -> f64 { (0..m).filter(|j| i >> j & 1 == 1).map(|j| powers[j]).sum() };
    let mut scored: Vec<(f64, usize)> = (0..n).map(|i| (score(i), i)).collect();
    scored.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
    let mut start = 0;
    while start < n {
        let mut end = start + 1;
        while end < n && scored[end].0 - scored[end - 1].0 <= 1e-12 * scored[end].0.max(1.0) {
            end += 1;
        }
        scored[start..end].sort_by_key(|s| s.1);
        start = end;
    }
    Ok(ReliabilityProfile {
        m,
        ordering: scored.into_iter().map(|s| s.1).collect(),
        method: ProfileMethod::BetaFloat(beta),
    })
}

/// Exact comparison of scores in the lattice `Z[alpha]`, `alpha = 2^(1/den)`.
struct LatticeScores {
    den: usize,
    /// `coeffs[i][b]` is the coefficient of `alpha^b` in the score of `i`.
    coeffs: Vec<Vec<u128>>,
    alpha_powers: Vec<f64>,
}

impl LatticeScores {
    fn new(m: usize, num: u32, den: u32) -> Self {
        let (num, den) = (num as usize, den as usize);
        let n = 1usize << m;
        let coeffs = (0..n)
            .map(|i| {
                let mut c = vec![0u128; den];
                for j in (0..m).filter(|j| i >> j & 1 == 1) {
                    c[(num * j) % den] += 1u128 << ((num * j) / den);
                }
                c
            })
            .collect();
        let alpha_powers = (0..den).map(|b| 2f64.powf(b as f64 / den as f64)).collect();
        Self {
            den,
            coeffs,
            alpha_powers,
        }
    }

    fn cmp(&self, x: usize, y: usize) -> Ordering {
        let d: Vec<i128> = self.coeffs[x]
            .iter()
            .zip(&self.coeffs[y])
            .map(|(&a, &b)| a as i128 - b as i128)
            .collect();
        if d.iter().all(|&v| v == 0) {
            return x.cmp(&y);
        }
        let approx: f64 = d.iter().zip(&self.alpha_powers).map(|(&v, &a)| v as f64 * a).sum();
        let magnitude: f64 = d
            .iter()
            .zip(&self.alpha_powers)
            .map(|(&v, &a)| (v as f64).abs() * a)
            .sum();
        if approx.abs() > magnitude * 1e-12 {
            return approx.partial_cmp(&0.0).expect("finite");
        }
        self.exact_sign(&d)
    }

    /// Sign of `sum_b d_b alpha^b`, which is nonzero because `x^den - 2` is
    /// irreducible. With `A_b = floor(2^p alpha^b)` the scaled sum differs
    /// from `sum d_b A_b` by less than `sum |d_b|`.
    fn exact_sign(&self, d: &[i128]) -> Ordering {
        use num_bigint::BigInt;
        let err: BigInt = d.iter().map(|&v| BigInt::from(v.unsigned_abs())).sum();
        let mut p = 128u32;
        loop {
            let mut t = BigInt::from(0);
            for (b, &v) in d.iter().enumerate() {
                if v == 0 {
                    continue;
                }
                let power = BigUint::one() << (p as usize * self.den + b);
                let a_b = power.nth_root(self.den as u32);
                t += BigInt::from(v) * BigInt::from(a_b);
            }
            let abs_t = if t < BigInt::from(0) { -t.clone() } else { t.clone() };
            if abs_t >= err {
                return t.sign().cmp(&num_bigint::Sign::NoSign);
            }
            p *= 2;
        }
    }
}

/// Beta-expansion with `beta = 2^(num/den)`: index `i` scores
/// `sum_{bit j of i} beta^j`, least reliable first, compared exactly.
pub fn beta_profile_exact(m: usize, num: u32, den: u32) -> Result<ReliabilityProfile> {
    check_m(m)?;
    if num == 0 || den == 0 || den > 64 {
        return Err(Error::Validation(format!(
            "beta = 2^({num}/{den}) must have num >= 1 and 1 <= den <= 64"
        )));
    }
    if m > 0 && (num as usize * (m - 1)) / den as usize > 100 {
        return Err(Error::Validation(format!(
            "beta = 2^({num}/{den}) is too large for exact scores at m = {m}"
        )));
    }
    let scores = LatticeScores::new(m, num, den);
    let mut ordering: Vec<usize> = (0..1usize << m).collect();
    ordering.sort_by(|&x, &y| scores.cmp(x, y));
    Ok(ReliabilityProfile {
        m,
        ordering,
        method: ProfileMethod::Beta { num, den },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn m6_frozen_set() {
        let p = beta_profile_exact(6, 1, 4).unwrap();
        let mut least: Vec<usize> = p.ordering()[..16].to_vec();
        least.sort_unstable();
        assert_eq!(least, vec![0, 1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 16, 17, 18, 32, 33]);
        let a = build_info_set(&p, 48).unwrap();
        assert_eq!(a.len(), 48);
        assert!(!a.contains(&33) && a.contains(&7));
    }

    #[test]
    fn small_cases() {
        assert_eq!(beta_profile_exact(1, 1, 4).unwrap().ordering(), &[0, 1]);
        assert_eq!(
            build_info_set(&beta_profile_exact(3, 1, 4).unwrap(), 8).unwrap(),
            (0..8).collect::<Vec<_>>()
        );
        let a = build_info_set(&beta_profile_exact(5, 1, 4).unwrap(), 31).unwrap();
        assert_eq!(a, (1..32).collect::<Vec<_>>());
        assert!(build_info_set(&beta_profile_exact(3, 1, 4).unwrap(), 0).is_err());
        assert!(build_info_set(&beta_profile_exact(3, 1, 4).unwrap(), 9).is_err());
    }

    #[test]
    fn float_path_agrees_with_exact() {
        for m in 0..=10 {
            for den in 1..=8 {
                let exact = beta_profile_exact(m, 1, den).unwrap();
                let float = beta_profile(m, 2f64.powf(1.0 / den as f64)).unwrap();
                assert_eq!(exact.ordering(), float.ordering(), "m={m} den={den}");
            }
        }
    }

    #[test]
    fn integer_beta_orders_by_value() {
        // beta = 2 makes the score equal to the index itself
        let p = beta_profile_exact(6, 1, 1).unwrap();
        assert_eq!(p.ordering(), (0..64).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn exact_sign_handles_near_ties() {
        let s = LatticeScores::new(1, 1, 2);
        // convergents of sqrt 2 alternate around it
        assert_eq!(s.exact_sign(&[-4, 3]), Ordering::Greater);
        assert_eq!(s.exact_sign(&[-24, 17]), Ordering::Greater);
        assert_eq!(s.exact_sign(&[-99, 70]), Ordering::Less);
        assert_eq!(s.exact_sign(&[665857, -470832]), Ordering::Greater);
    }

    #[test]
    fn explicit_validation() {
        assert!(ReliabilityProfile::explicit(1, vec![1, 0]).is_ok());
        assert!(ReliabilityProfile::explicit(1, vec![1, 1]).is_err());
        assert!(ReliabilityProfile::explicit(1, vec![0]).is_err());
        assert!(beta_profile(3, 1.0).is_err());
        assert!(beta_profile_exact(3, 0, 4).is_err());
    }

    #[test]
    fn rank_is_inverse_of_ordering() {
        let p = beta_profile_exact(4, 1, 4).unwrap();
        let rank = p.reliability_rank();
        assert_eq!(rank[15], 0);
        assert_eq!(rank[0], 15);
    }
}

//! Minimum-weight codewords: orbit formulas, distance bounds and exact
//! enumeration.

use std::fmt;
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use crate::construction::{Code, ReliabilityProfile};
use crate::duality::{dual_generator, generic_kernel_dual};
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::monomial::{Monomial, MonomialSet};

/// Default cap on the number of candidate supports in [`count_weight_w`].
pub const DEFAULT_BUDGET: u128 = 5_000_000_000;
/// Default cap on the dimension in [`full_weight_enum`].
pub const DEFAULT_MAX_ENUM_K: usize = 28;

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LambdaProfile {
    pub monomial: String,
    /// `(i, lambda_f(x_i))` for `i` in `ind(f)`, ascending.
    pub per_variable: Vec<(usize, usize)>,
    pub total: usize,
}

/// `lambda_f(x_i) = |{j < i : j not in ind(f)}|`.
pub fn lambda_profile(f: &Monomial) -> LambdaProfile {
    let per_variable: Vec<(usize, usize)> = f
        .support()
        .into_iter()
        .map(|i| (i, (0..i).filter(|&j| !f.contains_var(j)).count()))
        .collect();
    LambdaProfile {
        monomial: f.to_string(),
        total: per_variable.iter().map(|p| p.1).sum(),
        per_variable,
    }
}

/// `lambda_f(g) = sum of lambda_f(x_i)` over the variables of a divisor `g`.
pub fn lambda_of_divisor(f: &Monomial, g: &Monomial) -> Result<usize> {
    if !g.divides(f) {
        return Err(Error::Validation(format!("{g} does not divide {f}")));
    }
    Ok(lambda_profile(f)
        .per_variable
        .iter()
        .filter(|(i, _)| g.contains_var(*i))
        .map(|p| p.1)
        .sum())
}

/// `2^{deg(f) + |lambda_f|}`.
pub fn orbit_size(f: &Monomial) -> u128 {
    1u128 << (f.degree() + lambda_profile(f).total)
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightMethod {
    Formula,
    DualParityEnumeration,
    FullEnumeration,
}

impl fmt::Display for WeightMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightMethod::Formula => "formula",
            WeightMethod::DualParityEnumeration => "dual-parity-enumeration",
            WeightMethod::FullEnumeration => "full-enumeration",
        })
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct WeightReport {
    pub wmin: u64,
    pub count_at_wmin: u128,
    pub method: WeightMethod,
    pub lower_bound: Option<u128>,
}

/// Minimum weight and its multiplicity for a decreasing monomial code.
pub fn min_weight_count_formula(set: &MonomialSet) -> Result<WeightReport> {
    let r = set
        .max_degree()
        .ok_or_else(|| Error::Validation("empty monomial set has no minimum weight".into()))?;
    if !set.is_decreasing() {
        return Err(Error::NotDecreasing(format!("{set:?}")));
    }
    Ok(WeightReport {
        wmin: 1 << (set.m() - r),
        count_at_wmin: set.layer(r).iter().map(|f| orbit_size(&f)).sum(),
        method: WeightMethod::Formula,
        lower_bound: None,
    })
}

/// Minimum distance of an upper polynomial polar code and the bound on its
/// minimum-weight count.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DistanceBound {
    pub r: usize,
    pub wmin: u64,
    /// Count for the interval code `[max(A^c) + 1, N - 1]`.
    pub lower_bound: u128,
    /// Count for the plain polar code on `A`.
    pub polar_count: u128,
    pub interval_lo: usize,
}

impl DistanceBound {
    pub fn is_tight(&self) -> bool {
        self.lower_bound == self.polar_count
    }
}

fn bound_for_info_set(info: &MonomialSet, interval_lo: usize) -> Result<DistanceBound> {
    let polar = min_weight_count_formula(info)?;
    let m = info.m();
    let r = m - polar.wmin.trailing_zeros() as usize;
    let lower_bound = (interval_lo..1 << m)
        .map(|i| Monomial::from_index(i, m).expect("index in range"))
        .filter(|f| f.degree() == r)
        .map(|f| orbit_size(&f))
        .sum();
    Ok(DistanceBound {
        r,
        wmin: polar.wmin,
        lower_bound,
        polar_count: polar.count_at_wmin,
        interval_lo,
    })
}

pub fn min_distance_lower_bound(code: &Code) -> Result<DistanceBound> {
    let spec = code.spec();
    if !spec.class().is_upper() {
        return Err(Error::TheoremScope(format!(
            "distance preservation needs an upper unitriangular pretransform, got {}",
            spec.class()
        )));
    }
    let lo = spec.frozen_set().last().map_or(0, |&f| f + 1);
    bound_for_info_set(&spec.info_monomials(), lo)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Column syndromes `H e_j` packed into words.
struct Syndromes {
    words: usize,
    cols: Vec<u64>,
}

impl Syndromes {
    fn new(h: &BitMatrix) -> Self {
        let words = h.rows().div_ceil(64).max(1);
        let mut cols = vec![0u64; h.cols() * words];
        for (r, row) in h.row_vectors().iter().enumerate() {
            for j in row.iter_ones() {
                cols[j * words + r / 64] |= 1 << (r % 64);
            }
        }
        Self { words, cols }
    }

    fn col(&self, j: usize) -> &[u64] {
        &self.cols[j * self.words..(j + 1) * self.words]
    }

    /// Weight-`w` zero-syndrome supports whose smallest coordinate is `first`.
    fn count_from(&self, first: usize, w: usize, n: usize) -> u128 {
        let words = self.words;
        let mut prefix = vec![0u64; (w + 1) * words];
        prefix[words..2 * words].copy_from_slice(self.col(first));
        let mut idx = vec![0usize; w];
        idx[0] = first;
        let mut depth = 1;
        let mut count = 0u128;
        if w == 1 {
            return self.col(first).iter().all(|&x| x == 0) as u128;
        }
        idx[1] = first;
        loop {
            idx[depth] += 1;
            if idx[depth] + (w - 1 - depth) >= n {
                depth -= 1;
                if depth == 0 {
                    return count;
                }
                continue;
            }
            let (lo, hi) = prefix.split_at_mut((depth + 1) * words);
            let prev = &lo[depth * words..];
            let col = self.col(idx[depth]);
            for t in 0..words {
                hi[t] = prev[t] ^ col[t];
            }
            if depth + 1 == w {
                if hi[..words].iter().all(|&x| x == 0) {
                    count += 1;
                }
            } else {
                depth += 1;
                idx[depth] = idx[depth - 1];
            }
        }
    }
}

fn parity_matrix(code: &Code) -> Result<BitMatrix> {
    if code.spec().class().is_upper() {
        dual_generator(code)
    } else {
        Ok(generic_kernel_dual(code))
    }
}

/// Number of codewords of weight exactly `w`, by testing every weight-`w`
/// support against the parity checks.
pub fn count_weight_w(code: &Code, w: usize, budget: u128) -> Result<u128> {
    let n = code.n();
    if w == 0 {
        return Ok(1);
    }
    if w > n {
        return Ok(0);
    }
    let required = binomial(n, w);
    if required > budget {
        return Err(Error::BudgetExceeded { required, budget });
    }
    let syn = Syndromes::new(&parity_matrix(code)?);
    Ok((0..=n - w)
        .into_par_iter()
        .map(|first| syn.count_from(first, w, n))
        .sum())
}

/// Exact minimum weight and multiplicity by scanning weights upward.
pub fn min_weight_by_enumeration(code: &Code, budget: u128) -> Result<WeightReport> {
    let mut spent = 0u128;
    for w in 1..=code.n() {
        spent += binomial(code.n(), w);
        if spent > budget {
            return Err(Error::BudgetExceeded {
                required: spent,
                budget,
            });
        }
        let c = count_weight_w(code, w, budget)?;
        if c > 0 {
            return Ok(WeightReport {
                wmin: w as u64,
                count_at_wmin: c,
                method: WeightMethod::DualParityEnumeration,
                lower_bound: None,
            });
        }
    }
    unreachable!("a nonzero code has a nonzero codeword")
}

/// Weight distribution `A_0..A_N` by Gray-code iteration over all messages.
pub fn full_weight_enum(code: &Code, max_k: usize) -> Result<Vec<u128>> {
    let (n, k) = (code.n(), code.k());
    if k > max_k {
        return Err(Error::BudgetExceeded {
            required: 1u128 << k,
            budget: 1u128 << max_k,
        });
    }
    let words = n.div_ceil(64);
    let rows: Vec<&[u64]> = code.generator().row_vectors().iter().map(|r| r.words()).collect();
    let split = k.min(8);
    let low = k - split;
    let partial = (0..1usize << split)
        .into_par_iter()
        .map(|high| {
            let mut hist = vec![0u128; n + 1];
            let mut c = vec![0u64; words];
            for b in 0..split {
                if high >> b & 1 == 1 {
                    for (x, y) in c.iter_mut().zip(rows[low + b]) {
                        *x ^= y;
                    }
                }
            }
            hist[c.iter().map(|x| x.count_ones() as usize).sum::<usize>()] += 1;
            for step in 1..1usize << low {
                let bit = step.trailing_zeros() as usize;
                for (x, y) in c.iter_mut().zip(rows[bit]) {
                    *x ^= y;
                }
                hist[c.iter().map(|x| x.count_ones() as usize).sum::<usize>()] += 1;
            }
            hist
        })
        .reduce(
            || vec![0u128; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    Ok(partial)
}

/// `(wmin, A_wmin)` read off a weight distribution.
pub fn min_weight_of_distribution(dist: &[u128]) -> Option<(usize, u128)> {
    dist.iter()
        .enumerate()
        .skip(1)
        .find(|(_, &c)| c > 0)
        .map(|(w, &c)| (w, c))
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BoundsRow {
    pub codim: usize,
    pub wmin: u64,
    pub lower_bound: u128,
    pub polar_count: u128,
    pub tight: bool,
}

impl BoundsRow {
    pub const CSV_HEADER: &'static str = "codim,wmin,lower_bound,polar_count,tight";

    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{},{}",
            self.codim, self.wmin, self.lower_bound, self.polar_count, self.tight
        )
    }
}

/// One row per co-dimension `N - k` in `codims`, with `A` the `k` most
/// reliable indices of `profile`.
pub fn bounds_rows(profile: &ReliabilityProfile, codims: RangeInclusive<usize>) -> Result<Vec<BoundsRow>> {
    let (m, n) = (profile.m(), profile.n());
    codims
        .into_par_iter()
        .map(|codim| {
            if codim == 0 || codim >= n {
                return Err(Error::Validation(format!(
                    "co-dimension {codim} outside [1, {}]",
                    n - 1
                )));
            }
            let order = profile.ordering();
            let info = MonomialSet::from_indices(&order[codim..], m)?;
            if !info.is_decreasing() {
                return Err(Error::NotDecreasing(format!("information set at co-dimension {codim}")));
            }
            let lo = order[..codim].iter().max().expect("codim >= 1") + 1;
            let b = bound_for_info_set(&info, lo)?;
            Ok(BoundsRow {
                codim,
                wmin: b.wmin,
                lower_bound: b.lower_bound,
                polar_count: b.polar_count,
                tight: b.is_tight(),
            })
        })
        .collect()
}

/// Rows for `N - k = 2..N-1`.
pub fn bounds_table(m: usize, profile: &ReliabilityProfile) -> Result<Vec<BoundsRow>> {
    if profile.m() != m {
        return Err(Error::Validation(format!(
            "profile is for m = {}, not {m}",
            profile.m()
        )));
    }
    let n = 1usize << m;
    if n <= 2 {
        return Ok(Vec::new());
    }
    bounds_rows(profile, 2..=n - 1)
}

/// Co-dimensions `1..N-1` where no upper pretransform can lower the
/// minimum-weight count.
pub fn non_improvable_codimensions(m: usize, profile: &ReliabilityProfile) -> Result<Vec<BoundsRow>> {
    if profile.m() != m {
        return Err(Error::Validation(format!(
            "profile is for m = {}, not {m}",
            profile.m()
        )));
    }
    let n = 1usize << m;
    if n < 2 {
        return Ok(Vec::new());
    }
    Ok(bounds_rows(profile, 1..=n - 1)?
        .into_iter()
        .filter(|r| r.tight)
        .collect())
}

/// Maximal runs of consecutive values, e.g. `[1,2,3,7]` gives `[(1,3),(7,7)]`.
pub fn ranges(values: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &v in values {
        match out.last_mut() {
            Some(last) if last.1 + 1 == v => last.1 = v,
            _ => out.push((v, v)),
        }
    }
    out
}

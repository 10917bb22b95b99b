//! JSON code-spec files.
//!
//! ```json
//! {"m": 6, "k": 48,
//!  "profile": {"method": "beta", "beta_num": 1, "beta_den": 4},
//!  "pretransform": {"kind": "toeplitz", "p": [1, 0, 1, 1]}}
//! ```

use serde::{Deserialize, Serialize};

use super::{beta_profile_exact, build_info_set, CodeSpec, Pretransform, ReliabilityProfile};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(tag = "method", rename_all = "lowercase", deny_unknown_fields)]
pub enum ProfileSpec {
    /// `beta = 2^(beta_num / beta_den)`.
    Beta {
        beta_num: u32,
        beta_den: u32,
    },
    Explicit {
        order: Vec<usize>,
    },
}

impl ProfileSpec {
    pub fn realize(&self, m: usize) -> Result<ReliabilityProfile> {
        match self {
            ProfileSpec::Beta { beta_num, beta_den } => beta_profile_exact(m, *beta_num, *beta_den),
            ProfileSpec::Explicit { order } => ReliabilityProfile::explicit(m, order.clone()),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Default, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum PretransformSpec {
    #[default]
    Identity,
    Toeplitz {
        p: Vec<u8>,
    },
    Matrix {
        rows_hex: Vec<String>,
    },
}

impl PretransformSpec {
    pub fn realize(&self, m: usize) -> Result<Pretransform> {
        Ok(match self {
            PretransformSpec::Identity => Pretransform::Identity,
            PretransformSpec::Toeplitz { p } => Pretransform::Toeplitz(p.clone()),
            PretransformSpec::Matrix { rows_hex } => {
                let n = 1usize << m;
                let rows = rows_hex
                    .iter()
                    .map(|h| BitVector::from_hex(h, n))
                    .collect::<Result<Vec<_>>>()?;
                Pretransform::Matrix(BitMatrix::from_rows(n, rows)?)
            }
        })
    }

    pub fn from_pretransform(p: &Pretransform) -> Self {
        match p {
            Pretransform::Identity => PretransformSpec::Identity,
            Pretransform::Toeplitz(p) => PretransformSpec::Toeplitz { p: p.clone() },
            Pretransform::Matrix(p) => PretransformSpec::Matrix {
                rows_hex: p.row_vectors().iter().map(BitVector::to_hex).collect(),
            },
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub m: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub info_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub profile: Option<ProfileSpec>,
    #[serde(default)]
    pub pretransform: PretransformSpec,
}

impl SpecFile {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("spec files always serialize")
    }

    /// Normalized form with an explicit information set.
    pub fn from_code_spec(spec: &CodeSpec) -> Self {
        Self {
            m: spec.m(),
            info_set: Some(spec.info_set().to_vec()),
            k: None,
            profile: None,
            pretransform: PretransformSpec::from_pretransform(spec.pretransform()),
        }
    }

    pub fn to_code_spec(&self) -> Result<CodeSpec> {
        let a = match (&self.info_set, self.k, &self.profile) {
            (Some(a), None, None) => a.clone(),
            (None, Some(k), Some(profile)) => build_info_set(&profile.realize(self.m)?, k)?,
            (Some(_), _, _) => {
                return Err(Error::Validation(
                    "give either info_set or k with profile, not both".into(),
                ))
            }
            _ => {
                return Err(Error::Validation(
                    "spec needs info_set, or k together with profile".into(),
                ))
            }
        };
        CodeSpec::new(self.m, &a, self.pretransform.realize(self.m)?)
    }
}

//! Turning command-line flags into code specs and profiles.

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use polycode::construction::{PretransformSpec, ProfileSpec, ReliabilityProfile, SpecFile};
use polycode::gf2::{BitMatrix, MAX_M};
use polycode::{CodeSpec, Error, Pretransform};

pub const MAX_M_VAR: &str = "POLYCODE_MAX_M";

pub fn max_m() -> Result<usize> {
    match std::env::var(MAX_M_VAR) {
        Ok(v) => {
            let cap: usize = v
                .trim()
                .parse()
                .with_context(|| format!("{MAX_M_VAR}={v:?} is not an integer"))?;
            Ok(cap.min(MAX_M))
        }
        Err(_) => Ok(MAX_M),
    }
}

pub fn check_m(m: usize) -> Result<()> {
    let max = max_m()?;
    if m > max {
        return Err(Error::SizeLimit { m, max }.into());
    }
    Ok(())
}

#[derive(Args, Debug, Clone)]
pub struct ProfileArgs {
    /// Bhattacharyya-style profile with beta = 2^(1/q).
    #[arg(long, default_value_t = 4, conflicts_with = "profile_file")]
    pub beta_q: u32,
    /// JSON profile, e.g. {"method":"explicit","order":[...]}.
    #[arg(long)]
    pub profile_file: Option<PathBuf>,
}

impl ProfileArgs {
    pub fn spec(&self) -> Result<ProfileSpec> {
        if let Some(path) = &self.profile_file {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(serde_json::from_str(&text).map_err(Error::from)?);
        }
        if self.beta_q == 0 {
            bail!(Error::Validation("--beta-q must be positive".into()));
        }
        Ok(ProfileSpec::Beta {
            beta_num: 1,
            beta_den: self.beta_q,
        })
    }

    pub fn realize(&self, m: usize) -> Result<ReliabilityProfile> {
        check_m(m)?;
        Ok(self.spec()?.realize(m)?)
    }
}

#[derive(Args, Debug, Clone)]
#[group(id = "pretransform_choice", multiple = false)]
pub struct PretransformArgs {
    /// Toeplitz pretransform coefficients p_0 p_1 ..., e.g. 1011.
    #[arg(long, visible_alias = "p")]
    pub pac: Option<String>,
    #[arg(long)]
    pub identity: bool,
    /// N lines of N binary digits.
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
}

impl PretransformArgs {
    pub fn realize(&self) -> Result<Pretransform> {
        if let Some(bits) = &self.pac {
            return Ok(Pretransform::toeplitz_from_str(bits)?);
        }
        if let Some(path) = &self.matrix_file {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
            return Ok(Pretransform::Matrix(BitMatrix::parse_rows(&lines)?));
        }
        Ok(Pretransform::Identity)
    }
}

#[derive(Args, Debug, Clone)]
pub struct SpecArgs {
    /// JSON code-spec file.
    #[arg(long, conflicts_with_all = ["m", "k", "info_set", "pretransform_choice", "profile_file"])]
    pub spec: Option<PathBuf>,
    #[arg(long)]
    pub m: Option<usize>,
    /// Dimension; the information set is taken from the profile.
    #[arg(long, conflicts_with = "info_set")]
    pub k: Option<usize>,
    /// Explicit information set, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub info_set: Option<Vec<usize>>,
    #[command(flatten)]
    pub profile: ProfileArgs,
    #[command(flatten)]
    pub pretransform: PretransformArgs,
}

impl SpecArgs {
    pub fn m(&self) -> Result<usize> {
        let m = match (&self.spec, self.m) {
            (Some(_), _) => self.spec_file()?.m,
            (None, Some(m)) => m,
            (None, None) => bail!(Error::Validation("give --m or --spec".into())),
        };
        check_m(m)?;
        Ok(m)
    }

    fn spec_file(&self) -> Result<SpecFile> {
        if let Some(path) = &self.spec {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            return Ok(SpecFile::from_json(&text)?);
        }
        let m = self.m()?;
        let pretransform = PretransformSpec::from_pretransform(&self.pretransform.realize()?);
        let (info_set, k, profile) = match (&self.info_set, self.k) {
            (Some(a), _) => (Some(a.clone()), None, None),
            (None, Some(k)) => (None, Some(k), Some(self.profile.spec()?)),
            (None, None) => bail!(Error::Validation("give --k or --info-set".into())),
        };
        Ok(SpecFile {
            m,
            info_set,
            k,
            profile,
            pretransform,
        })
    }

    pub fn code_spec(&self) -> Result<CodeSpec> {
        let file = self.spec_file()?;
        check_m(file.m)?;
        Ok(file.to_code_spec()?)
    }

    /// Pretransform for commands that vary the information set themselves.
    pub fn sweep_inputs(&self) -> Result<(usize, Pretransform, ReliabilityProfile)> {
        if let Some(path) = &self.spec {
            let file = self.spec_file()?;
            check_m(file.m)?;
            let profile = match &file.profile {
                Some(p) => p.realize(file.m)?,
                None => bail!(Error::Validation(format!("{} has no profile to sweep", path.display()))),
            };
            return Ok((file.m, file.pretransform.realize(file.m)?, profile));
        }
        if self.k.is_some() || self.info_set.is_some() {
            bail!(Error::Validation(
                "a sweep chooses k itself; drop --k/--info-set".into()
            ));
        }
        let m = self.m()?;
        Ok((m, self.pretransform.realize()?, self.profile.realize(m)?))
    }
}

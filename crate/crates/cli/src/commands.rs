use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, ValueEnum};
use polycode::construction::{encode_via_convolution, polar_kernel, polar_transform, row_polynomial, SpecFile};
use polycode::duality::{
    dual_generator_checked, dual_lower_factor, dual_monomial_code, generic_kernel_dual, verify_duality,
};
use polycode::gf2::{intersection_dim, mat_mul, same_row_space};
use polycode::structure::{
    decreasing_subcode, dual_sandwich, monomial_supercode_bound, random_upper_ensemble, structure_sweep,
    StructureReport, Summary, SweepRow,
};
use polycode::weights::{
    bounds_table, count_weight_w, full_weight_enum, min_distance_lower_bound, min_weight_by_enumeration,
    min_weight_count_formula, min_weight_of_distribution, non_improvable_codimensions, ranges, BoundsRow, WeightMethod,
    WeightReport, DEFAULT_BUDGET, DEFAULT_MAX_ENUM_K,
};
use polycode::{build_code, BitVector, Code, CodeSpec, Error, Monomial, Pretransform};
use serde_json::{json, Value};

use crate::render::{json, list, pairs, Format, Table};
use crate::source::{check_m, ProfileArgs, SpecArgs};

#[derive(Copy, Clone, PartialEq, Eq, Debug, Default, ValueEnum)]
pub enum Verify {
    #[default]
    Off,
    CrossCheck,
}

pub struct Ctx {
    pub format: Option<Format>,
    pub verify: Verify,
}

impl Ctx {
    fn format(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn cross_check(&self) -> bool {
        self.verify == Verify::CrossCheck
    }
}

fn mismatch(what: impl Into<String>) -> anyhow::Error {
    Error::Verification(what.into()).into()
}

fn describe_pretransform(spec: &CodeSpec) -> String {
    match spec.pretransform() {
        Pretransform::Identity => "identity".into(),
        Pretransform::Toeplitz(p) => {
            format!(
                "{} (toeplitz {})",
                spec.class(),
                p.iter().map(u8::to_string).collect::<String>()
            )
        }
        Pretransform::Matrix(_) => format!("{} (explicit matrix)", spec.class()),
    }
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Also write the normalized spec file here.
    #[arg(long)]
    pub spec_out: Option<PathBuf>,
}

pub fn construct(args: &ConstructArgs, ctx: &Ctx) -> Result<String> {
    let spec = args.spec.code_spec()?;
    let code = build_code(&spec)?;
    if ctx.cross_check() {
        check_encoders(&code)?;
    }
    let normalized = SpecFile::from_code_spec(&spec);
    if let Some(path) = &args.spec_out {
        fs::write(path, normalized.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    let frozen = spec.frozen_set();
    Ok(match ctx.format(Format::Pretty) {
        Format::Pretty => pairs(&[
            ("N", spec.n().to_string()),
            ("K", spec.k().to_string()),
            ("pretransform", describe_pretransform(&spec)),
            ("A", list(spec.info_set())),
            ("A^c", list(&frozen)),
        ]),
        Format::Csv => {
            let mut t = Table::new("n,k,class,info_set,frozen_set");
            t.push([
                spec.n().to_string(),
                spec.k().to_string(),
                spec.class().to_string(),
                list(spec.info_set()),
                list(&frozen),
            ]);
            t.csv()
        }
        Format::Json => json(&json!({
            "n": spec.n(),
            "k": spec.k(),
            "pretransform_class": spec.class().to_string(),
            "info_set": spec.info_set(),
            "frozen_set": frozen,
            "spec": serde_json::from_str::<Value>(&normalized.to_json())?,
        })),
    })
}

/// Generator rows against the convolution encoder, or against `P` rows pushed
/// through the butterfly when there is no Toeplitz form.
fn check_encoders(code: &Code) -> Result<()> {
    let spec = code.spec();
    let p = spec.pretransform_matrix();
    for (t, &i) in spec.info_set().iter().enumerate() {
        let v = BitVector::unit(spec.k(), t);
        let expected = match spec.pretransform() {
            Pretransform::Toeplitz(_) => encode_via_convolution(spec, &v)?,
            _ => polar_transform(p.row(i)),
        };
        if code.encode(&v)? != expected {
            return Err(mismatch(format!("encoders disagree on row {i}")));
        }
    }
    Ok(())
}

#[derive(Args, Debug)]
pub struct ShowRowsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Row range a:b, inclusive.
    #[arg(long)]
    pub rows: Option<String>,
}

fn parse_range(s: &str, bound: usize) -> Result<(usize, usize)> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::Validation(format!("range {s:?} is not of the form a:b")))?;
    let parse = |x: &str| -> Result<usize> {
        x.trim()
            .parse()
            .map_err(|_| Error::Validation(format!("{x:?} is not a non-negative integer")).into())
    };
    let (a, b) = (parse(a)?, parse(b)?);
    if a > b || b >= bound {
        bail!(Error::Validation(format!(
            "range {a}:{b} must satisfy a <= b < {bound}"
        )));
    }
    Ok((a, b))
}

pub fn show_rows(args: &ShowRowsArgs, ctx: &Ctx) -> Result<String> {
    let spec = args.spec.code_spec()?;
    let (n, m) = (spec.n(), spec.m());
    let (lo, hi) = match &args.rows {
        Some(r) => parse_range(r, n)?,
        None => (0, n - 1),
    };
    let rows_pg = if ctx.cross_check() {
        Some(mat_mul(&spec.pretransform_matrix(), &polar_kernel(m)?)?)
    } else {
        None
    };
    let mut t =
        Table::new("index,monomial,polynomial,complement_index,complement_monomial,complement_polynomial,frozen");
    for i in lo..=hi {
        let f = Monomial::from_index(i, m)?;
        let p = row_polynomial(&spec, i)?;
        if let Some(g) = &rows_pg {
            if &p.evaluate() != g.row(i) {
                return Err(mismatch(format!(
                    "row {i}: polynomial does not evaluate to the generator row"
                )));
            }
        }
        t.push([
            i.to_string(),
            f.to_string(),
            p.to_string(),
            (n - 1 - i).to_string(),
            f.complement().to_string(),
            p.complement().to_string(),
            spec.is_frozen(i).to_string(),
        ]);
    }
    Ok(match ctx.format(Format::Pretty) {
        Format::Pretty => t.pretty(),
        Format::Csv => t.csv(),
        Format::Json => json(&Value::Array(
            t.rows
                .iter()
                .map(|r| {
                    json!({
                        "index": i_of(&r[0]),
                        "monomial": r[1],
                        "polynomial": r[2],
                        "complement_index": i_of(&r[3]),
                        "complement_monomial": r[4],
                        "complement_polynomial": r[5],
                        "frozen": r[6] == "true",
                    })
                })
                .collect(),
        )),
    })
}

fn i_of(s: &str) -> usize {
    s.parse().expect("index cells are integers")
}

#[derive(Args, Debug)]
pub struct DualArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Kernel computation for pretransforms outside the closed form.
    #[arg(long)]
    pub generic_kernel: bool,
}

pub fn dual(args: &DualArgs, ctx: &Ctx) -> Result<String> {
    let spec = args.spec.code_spec()?;
    let code = build_code(&spec)?;
    let upper = spec.class().is_upper();
    if !upper && !args.generic_kernel {
        bail!(Error::TheoremScope(format!(
            "{} pretransform: the closed-form dual covers identity and upper unitriangular pretransforms only \
             (--generic-kernel computes a kernel basis instead)",
            spec.class()
        )));
    }
    let (dual, method) = if upper {
        (dual_generator_checked(&code, ctx.cross_check())?, "closed form")
    } else {
        (generic_kernel_dual(&code), "generic kernel (outside the closed form)")
    };
    let verified = verify_duality(&code, &dual)?;
    if ctx.cross_check() && !same_row_space(&dual, &generic_kernel_dual(&code))? {
        return Err(mismatch("closed-form dual differs from the kernel of the generator"));
    }
    let mut info: Vec<(&str, String)> = vec![
        ("dual dimension", dual.rows().to_string()),
        ("method", method.into()),
        ("verified", verified.to_string()),
    ];
    let mut extra = serde_json::Map::new();
    if upper {
        let lower = dual_lower_factor(&spec)?.is_lower_unitriangular();
        let sandwich = dual_sandwich(&code)?;
        info.push(("lower factor unitriangular", lower.to_string()));
        info.push(("contains", format!("C_G({})", sandwich.lower)));
        info.push(("inside", format!("C_G({})", sandwich.upper)));
        extra.insert("lower_factor_unitriangular".into(), json!(lower));
        extra.insert("sandwich".into(), json!(sandwich));
    }
    if spec.pretransform() == &Pretransform::Identity {
        let md = dual_monomial_code(spec.info_set(), spec.m())?;
        let same = same_row_space(&dual, &md.matrix_form)?;
        info.push(("equals C_G(complemented A^c)", same.to_string()));
        extra.insert("monomial_dual_match".into(), json!(same));
    }
    let hex: Vec<String> = dual.row_vectors().iter().map(BitVector::to_hex).collect();
    let out = match ctx.format(Format::Pretty) {
        Format::Pretty => {
            let mut s = pairs(&info);
            s += "rows:\n";
            for h in &hex {
                s += &format!("  {h}\n");
            }
            s
        }
        Format::Csv => {
            let mut t = Table::new("row,hex");
            for (r, h) in hex.iter().enumerate() {
                t.push([r.to_string(), h.clone()]);
            }
            t.csv()
        }
        Format::Json => {
            let mut obj = serde_json::Map::new();
            obj.insert("dimension".into(), json!(dual.rows()));
            obj.insert("method".into(), json!(method));
            obj.insert("verified".into(), json!(verified));
            obj.extend(extra);
            obj.insert("rows_hex".into(), json!(hex));
            json(&Value::Object(obj))
        }
    };
    if !verified {
        eprint!("{out}");
        return Err(mismatch("dual generator failed verification"));
    }
    Ok(out)
}

#[derive(Args, Debug)]
pub struct StructureArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Sweep k over a:b using the profile.
    #[arg(long, conflicts_with = "random")]
    pub sweep: Option<String>,
    /// Ensemble of n random upper unitriangular pretransforms.
    #[arg(long)]
    pub random: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

fn rank_intersection(code: &Code) -> Result<usize> {
    Ok(intersection_dim(
        code.generator(),
        &code.spec().info_monomials().generator(),
    )?)
}

fn sweep_table(rows: &[SweepRow]) -> Table {
    let mut t = Table::new(SweepRow::CSV_HEADER);
    for r in rows {
        t.push(r.to_csv().split(',').map(str::to_owned));
    }
    t
}

pub fn structure(args: &StructureArgs, ctx: &Ctx) -> Result<String> {
    if let Some(range) = &args.sweep {
        let (m, pretransform, profile) = args.spec.sweep_inputs()?;
        let (a, b) = parse_range(range, (1 << m) + 1)?;
        if a == 0 {
            bail!(Error::Validation("sweep dimensions start at 1".into()));
        }
        let ks: Vec<usize> = (a..=b).collect();
        let rows = structure_sweep(m, &ks, &pretransform, |k| profile.info_set(k))?;
        if ctx.cross_check() {
            for row in &rows {
                let code = build_code(&CodeSpec::new(m, &profile.info_set(row.k)?, pretransform.clone())?)?;
                if rank_intersection(&code)? != row.intersection_dim || !row.chain_holds() {
                    return Err(mismatch(format!("sweep row k={} fails its cross-check", row.k)));
                }
            }
        }
        let t = sweep_table(&rows);
        return Ok(match ctx.format(Format::Csv) {
            Format::Csv => t.csv(),
            Format::Pretty => t.pretty(),
            Format::Json => json(&json!(rows)),
        });
    }
    let spec = args.spec.code_spec()?;
    if let Some(samples) = args.random {
        let seed = args
            .seed
            .ok_or_else(|| Error::Validation("--random needs --seed for reproducible output".into()))?;
        let stats = random_upper_ensemble(spec.m(), spec.info_set(), samples, seed)?;
        let summaries: [(&str, &Summary); 3] = [
            ("intersection_dim", &stats.intersection),
            ("largest_monomial_subcode_dim", &stats.largest_subcode),
            ("smallest_supercode_dim", &stats.supercode),
        ];
        let mut t = Table::new("statistic,mean,min,max");
        for (name, s) in summaries {
            t.push([
                name.to_owned(),
                format!("{:.4}", s.mean),
                s.min.to_string(),
                s.max.to_string(),
            ]);
        }
        return Ok(match ctx.format(Format::Pretty) {
            Format::Csv => t.csv(),
            Format::Pretty => {
                let head = pairs(&[
                    ("samples", stats.samples.to_string()),
                    ("seed", stats.seed.to_string()),
                    ("K", stats.k.to_string()),
                    ("assumption", stats.assumption.into()),
                ]);
                head + &t.pretty()
            }
            Format::Json => json(&json!(stats)),
        });
    }
    let code = build_code(&spec)?;
    let report = StructureReport::analyze(&code)?;
    if ctx.cross_check() && (rank_intersection(&code)? != report.polar_intersection_dim || !report.chain_holds()) {
        return Err(mismatch("structure report fails its cross-check"));
    }
    let (dec_interval, _) = decreasing_subcode(&code)?;
    let (sup_interval, _) = monomial_supercode_bound(&code)?;
    let row = report.sweep_row();
    Ok(match ctx.format(Format::Pretty) {
        Format::Csv => sweep_table(&[row]).csv(),
        Format::Pretty => pairs(&[
            ("K", row.k.to_string()),
            ("pretransform", describe_pretransform(&spec)),
            (
                "decreasing subcode",
                format!("C_G({dec_interval}), dimension {}", row.decreasing_lb),
            ),
            ("largest monomial subcode", row.largest_monomial_subcode_dim.to_string()),
            ("intersection with C_G(A)", row.intersection_dim.to_string()),
            ("smallest monomial supercode", row.smallest_supercode_dim.to_string()),
            (
                "supercode bound",
                format!("C_G({sup_interval}), dimension {}", row.supercode_ub),
            ),
            ("chain holds", report.chain_holds().to_string()),
        ]),
        Format::Json => json(&json!({
            "row": row,
            "decreasing_interval": dec_interval,
            "supercode_interval": sup_interval,
            "largest_monomial_subcode": report.largest_monomial_subcode.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "chain_holds": report.chain_holds(),
        })),
    })
}

#[derive(Args, Debug)]
pub struct WeightsArgs {
    #[command(flatten)]
    pub spec: SpecArgs,
    /// Count codewords of exactly this weight.
    #[arg(long)]
    pub w: Option<usize>,
    /// Candidate supports the enumerators may test.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u128,
}

fn exact_min_weight(code: &Code, budget: u128) -> Result<WeightReport> {
    if code.k() <= DEFAULT_MAX_ENUM_K.min(24) {
        let (w, c) = min_weight_of_distribution(&full_weight_enum(code, DEFAULT_MAX_ENUM_K)?)
            .ok_or_else(|| Error::Validation("code has no nonzero codeword".into()))?;
        return Ok(WeightReport {
            wmin: w as u64,
            count_at_wmin: c,
            method: WeightMethod::FullEnumeration,
            lower_bound: None,
        });
    }
    Ok(min_weight_by_enumeration(code, budget)?)
}

pub fn weights(args: &WeightsArgs, ctx: &Ctx) -> Result<String> {
    let spec = args.spec.code_spec()?;
    let code = build_code(&spec)?;
    if let Some(w) = args.w {
        let count = count_weight_w(&code, w, args.budget)?;
        if ctx.cross_check() && code.k() <= DEFAULT_MAX_ENUM_K {
            let dist = full_weight_enum(&code, DEFAULT_MAX_ENUM_K)?;
            if dist.get(w).copied().unwrap_or(0) != count {
                return Err(mismatch(format!(
                    "weight-{w} count disagrees with the full enumeration"
                )));
            }
        }
        return Ok(match ctx.format(Format::Pretty) {
            Format::Pretty => pairs(&[("w", w.to_string()), ("count", count.to_string())]),
            Format::Csv => format!("w,count\n{w},{count}\n"),
            Format::Json => json(&json!({"w": w, "count": count})),
        });
    }
    let info = spec.info_monomials();
    let report = if spec.class().is_upper() && info.is_decreasing() {
        let bound = min_distance_lower_bound(&code)?;
        if spec.pretransform() == &Pretransform::Identity {
            WeightReport {
                lower_bound: Some(bound.lower_bound),
                ..min_weight_count_formula(&info)?
            }
        } else {
            WeightReport {
                wmin: bound.wmin,
                count_at_wmin: count_weight_w(&code, bound.wmin as usize, args.budget)?,
                method: WeightMethod::DualParityEnumeration,
                lower_bound: Some(bound.lower_bound),
            }
        }
    } else {
        exact_min_weight(&code, args.budget)?
    };
    if ctx.cross_check() {
        let exact = exact_min_weight(&code, args.budget)?;
        if (exact.wmin, exact.count_at_wmin) != (report.wmin, report.count_at_wmin) {
            return Err(mismatch(format!(
                "exhaustive search gives wmin {} count {}",
                exact.wmin, exact.count_at_wmin
            )));
        }
    }
    let lb = report.lower_bound.map_or("-".to_owned(), |b| b.to_string());
    Ok(match ctx.format(Format::Pretty) {
        Format::Pretty => pairs(&[
            ("wmin", report.wmin.to_string()),
            ("count", report.count_at_wmin.to_string()),
            ("lower bound", lb),
            ("method", report.method.to_string()),
        ]),
        Format::Csv => format!(
            "wmin,count,lower_bound,method\n{},{},{},{}\n",
            report.wmin, report.count_at_wmin, lb, report.method
        ),
        Format::Json => json(&json!({
            "wmin": report.wmin,
            "count": report.count_at_wmin,
            "lower_bound": report.lower_bound,
            "method": report.method.to_string(),
        })),
    })
}

#[derive(Args, Debug)]
pub struct TablesArgs {
    #[arg(long)]
    pub m: usize,
    #[command(flatten)]
    pub profile: ProfileArgs,
    /// Only the co-dimensions whose bound is tight, as ranges.
    #[arg(long)]
    pub non_improvable: bool,
}

fn bounds_table_out(rows: &[BoundsRow]) -> Table {
    let mut t = Table::new(BoundsRow::CSV_HEADER);
    for r in rows {
        t.push(r.to_csv().split(',').map(str::to_owned));
    }
    t
}

/// Re-derives `wmin` and the polar count of each row by enumeration when
/// affordable. Returns the number of rows checked.
fn cross_check_rows(m: usize, rows: &[BoundsRow], profile: &polycode::ReliabilityProfile) -> Result<usize> {
    let mut checked = 0;
    for row in rows {
        let code = build_code(&CodeSpec::new(
            m,
            &profile.info_set((1 << m) - row.codim)?,
            Pretransform::Identity,
        )?)?;
        let exact = match exact_min_weight(&code, DEFAULT_BUDGET) {
            Ok(r) => r,
            Err(e) if matches!(e.downcast_ref::<Error>(), Some(Error::BudgetExceeded { .. })) => continue,
            Err(e) => return Err(e),
        };
        if (exact.wmin, exact.count_at_wmin) != (row.wmin, row.polar_count) {
            return Err(mismatch(format!(
                "co-dimension {}: enumeration gives {exact:?}",
                row.codim
            )));
        }
        checked += 1;
    }
    Ok(checked)
}

pub fn tables(args: &TablesArgs, ctx: &Ctx) -> Result<String> {
    check_m(args.m)?;
    if args.m < 2 {
        bail!(Error::Validation("tables need m >= 2".into()));
    }
    let profile = args.profile.realize(args.m)?;
    let rows = if args.non_improvable {
        non_improvable_codimensions(args.m, &profile)?
    } else {
        bounds_table(args.m, &profile)?
    };
    if ctx.cross_check() {
        let checked = cross_check_rows(args.m, &rows, &profile)?;
        eprintln!("cross-checked {checked} of {} rows by enumeration", rows.len());
    }
    if args.non_improvable {
        let spans = ranges(&rows.iter().map(|r| r.codim).collect::<Vec<_>>());
        return Ok(match ctx.format(Format::Csv) {
            Format::Csv => {
                let mut t = Table::new("lo,hi");
                for (lo, hi) in &spans {
                    t.push([lo.to_string(), hi.to_string()]);
                }
                t.csv()
            }
            Format::Pretty => {
                spans
                    .iter()
                    .map(|(lo, hi)| format!("[{lo},{hi}]"))
                    .collect::<Vec<_>>()
                    .join(" U ")
                    + "\n"
            }
            Format::Json => json(&json!({"ranges": spans, "rows": rows})),
        });
    }
    let t = bounds_table_out(&rows);
    Ok(match ctx.format(Format::Csv) {
        Format::Csv => t.csv(),
        Format::Pretty => t.pretty(),
        Format::Json => json(&json!(rows)),
    })
}

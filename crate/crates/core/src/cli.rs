//! The `divtorus` command line: verification campaigns with text or JSON reports.
//!
//! Exit codes: 0 when every check agrees with the predicted structure, 1 on a
//! mathematical inconsistency, 2 on a usage or configuration error.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::divfield::{self, FieldSum, VectorField};
use crate::error::{Error, Result};
use crate::fmodule::{self, Degree, GradedVector, ModuleSpec};
use crate::generation::{self, ClosureReport, TruncationBox, Verdict};
use crate::linalg;
use crate::rational::{self, Rational};
use crate::sl_rep::{self, IrrepDump};
use crate::weight_core::{self, AlphaOffset, WeightLabel};

pub const SEED_ENV: &str = "DIVTORUS_SEED";

pub const MAX_RANK: usize = 4;
pub const MAX_RADIUS: i64 = 3;
/// Upper bound on `(2 B_out + 1)^(N+1)`, the number of degrees in the outer box.
pub const MAX_BOX_DEGREES: u64 = 6561;

const ALGEBRA_SAMPLES: usize = 200;
const ORACLE_RADIUS: i64 = 2;
const EQUIVARIANCE_SAMPLES: usize = 10;

#[derive(Parser, Debug)]
#[command(name = "divtorus", version, about = "Exact checks for torus vector-field modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Jacobi identity, bracket closure and the derivation oracle on random fields.
    VerifyAlgebra(CommonArgs),
    /// Truncated submodule closure from sampled seeds, compared with the predicted structure.
    Irreducibility(IrreducibilityArgs),
    /// Kernels and images of the maps psi_k on every degree of the outer box.
    Derham(CommonArgs),
    /// Offset of the lowest weight, checked against weight enumeration.
    Kappa(CommonArgs),
    /// Theta-string census of the weights of V(lambda).
    ThetaStrings(CommonArgs),
    /// The representation matrices as JSON.
    DumpIrrep(CommonArgs),
}

#[derive(Args, Debug, Clone)]
struct CommonArgs {
    /// Rank of sl_{N+1}; the torus has dimension N+1.
    #[arg(long = "N", default_value_t = 2)]
    rank: usize,
    /// Highest weight label, e.g. "1,1" (default omega_1).
    #[arg(long)]
    lambda: Option<String>,
    /// Comma-separated rationals, e.g. "1/2,0,0" (default 1/2 then zeros).
    #[arg(long, allow_hyphen_values = true)]
    sigma: Option<String>,
    /// Generator radius: fields D(u, r) with |r|_inf <= R.
    #[arg(long = "R", default_value_t = 2, allow_hyphen_values = true)]
    radius: i64,
    #[arg(long, default_value_t = 4, allow_hyphen_values = true)]
    box_out: i64,
    #[arg(long, default_value_t = 2, allow_hyphen_values = true)]
    box_in: i64,
    /// PRNG seed; DIVTORUS_SEED takes precedence.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct IrreducibilityArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Draw the seed inside a known submodule.
    #[arg(long, value_enum)]
    seed_in: Option<SeedIn>,
    /// Seed the whole fiber at a degree; only "-sigma" is accepted.
    #[arg(long, allow_hyphen_values = true)]
    seed_at: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeedIn {
    #[value(name = "W")]
    W,
}

/// The resolved configuration, embedded in every report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(rename = "N")]
    pub rank: usize,
    pub lambda: String,
    pub sigma: Vec<String>,
    #[serde(rename = "R")]
    pub radius: i64,
    pub box_out: i64,
    pub box_in: i64,
    pub seed: u64,
    pub seed_in: Option<String>,
    pub seed_at: Option<String>,
    pub out: Option<String>,
    pub format: Format,
}

impl RunConfig {
    /// Defaults of the command line for `command`.
    pub fn new(command: &str, rank: usize) -> Self {
        let mut sigma = vec!["0".to_string(); rank + 1];
        sigma[0] = "1/2".into();
        Self {
            command: command.into(),
            rank,
            lambda: default_lambda(rank),
            sigma,
            radius: 2,
            box_out: 4,
            box_in: 2,
            seed: 0,
            seed_in: None,
            seed_at: None,
            out: None,
            format: Format::Text,
        }
    }

    pub fn label(&self) -> Result<WeightLabel> {
        let label = WeightLabel::parse(&self.lambda)?;
        if label.rank() != self.rank {
            return Err(Error::LabelLength {
                got: label.rank(),
                expected: self.rank,
            });
        }
        Ok(label)
    }

    pub fn sigma_values(&self) -> Result<Vec<Rational>> {
        self.sigma.iter().map(|s| rational::parse(s)).collect()
    }

    pub fn bounds(&self) -> Result<TruncationBox> {
        TruncationBox::new(self.box_out, self.box_in, vec![0; self.rank + 1])
    }

    /// The outer box, refused when it has more than `MAX_BOX_DEGREES` degrees.
    pub fn desk_bounds(&self) -> Result<TruncationBox> {
        let bounds = self.bounds()?;
        let side = (2 * self.box_out + 1) as u64;
        if side.checked_pow(self.rank as u32 + 1).is_none_or(|d| d > MAX_BOX_DEGREES) {
            return Err(Error::BoundExceeded(format!(
                "outer box has {side}^{} degrees, limit {MAX_BOX_DEGREES}",
                self.rank + 1
            )));
        }
        Ok(bounds)
    }

    /// Desk-scale limits shared by all commands.
    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 || self.rank > MAX_RANK {
            return Err(Error::BoundExceeded(format!("N must lie in 1..={MAX_RANK}, got {}", self.rank)));
        }
        if !(0..=MAX_RADIUS).contains(&self.radius) {
            return Err(Error::BoundExceeded(format!("R must lie in 0..={MAX_RADIUS}, got {}", self.radius)));
        }
        self.bounds()?;
        let sigma = self.sigma_values()?;
        if sigma.len() != self.rank + 1 {
            return Err(Error::LengthMismatch {
                got: sigma.len(),
                expected: self.rank + 1,
            });
        }
        self.label()?;
        Ok(())
    }
}

fn default_lambda(rank: usize) -> String {
    label_string(&WeightLabel::fundamental(rank, 1))
}

fn label_string(label: &WeightLabel) -> String {
    label.0.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn degree_string(n: &[i64]) -> String {
    format!("({})", n.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
}

// ---------------------------------------------------------------- verify-algebra

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckCount {
    pub passed: usize,
    pub total: usize,
}

impl CheckCount {
    fn record(&mut self, ok: bool) {
        self.total += 1;
        self.passed += usize::from(ok);
    }

    pub fn all_pass(&self) -> bool {
        self.passed == self.total
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraReport {
    pub config: RunConfig,
    pub jacobi: CheckCount,
    pub closure: CheckCount,
    /// Bracket against the commutator of derivations on monomials `|m|_inf <= 2`.
    pub oracle: CheckCount,
    pub consistent: bool,
}

pub fn verify_algebra(config: &RunConfig) -> Result<AlgebraReport> {
    config.validate()?;
    let mut rng = generation::rng(config.seed);
    let monomials = divfield::lattice_box(config.rank + 1, ORACLE_RADIUS);
    let mut jacobi = CheckCount { passed: 0, total: 0 };
    let mut closure = jacobi.clone();
    let mut oracle = jacobi.clone();
    for _ in 0..ALGEBRA_SAMPLES {
        let f = generation::random_divergence_free(&mut rng, config.rank, config.radius);
        let g = generation::random_divergence_free(&mut rng, config.rank, config.radius);
        let h = generation::random_divergence_free(&mut rng, config.rank, config.radius);
        let mut sum = FieldSum::new();
        sum.add(&divfield::bracket(&f, &divfield::bracket(&g, &h)?)?);
        sum.add(&divfield::bracket(&g, &divfield::bracket(&h, &f)?)?);
        sum.add(&divfield::bracket(&h, &divfield::bracket(&f, &g)?)?);
        jacobi.record(sum.is_zero());
        let fg = divfield::bracket(&f, &g)?;
        closure.record(fg.is_divergence_zero());
        for m in &monomials {
            oracle.record(commutator_matches(&f, &g, &fg, m));
        }
    }
    let consistent = jacobi.all_pass() && closure.all_pass() && oracle.all_pass();
    Ok(AlgebraReport {
        config: config.clone(),
        jacobi,
        closure,
        oracle,
        consistent,
    })
}

/// `[f, g] t^m = f(g t^m) - g(f t^m)`, both sides as multiples of `t^{m+r+s}`.
fn commutator_matches(f: &VectorField, g: &VectorField, fg: &VectorField, m: &[i64]) -> bool {
    let (cg, mg) = divfield::on_monomial(g, m);
    let (cfg, _) = divfield::on_monomial(f, &mg);
    let (cf, mf) = divfield::on_monomial(f, m);
    let (cgf, _) = divfield::on_monomial(g, &mf);
    let (lhs, _) = divfield::on_monomial(fg, m);
    lhs == cg * cfg - cf * cgf
}

fn render_algebra(r: &AlgebraReport) -> String {
    let line = |name: &str, c: &CheckCount| {
        let status = if c.all_pass() { "pass" } else { "FAIL" };
        format!("{name}: {}/{} {status}\n", c.passed, c.total)
    };
    let mut s = line("jacobi", &r.jacobi);
    s += &line("bracket closure", &r.closure);
    s += &line("derivation oracle", &r.oracle);
    s
}

// ---------------------------------------------------------------- irreducibility

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityReport {
    pub config: RunConfig,
    pub prediction: String,
    pub closure: ClosureReport,
    pub consistent: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Prediction {
    Module,
    Known(&'static str),
    ModuleOrQuotient,
}

impl Prediction {
    fn describe(self) -> String {
        match self {
            Prediction::Module => Verdict::FillsModule.to_string(),
            Prediction::Known(p) => format!("{} ({p})", Verdict::FillsKnownSubmodule),
            Prediction::ModuleOrQuotient => {
                format!("{} or {}", Verdict::FillsModule, Verdict::FillsQuotientPattern)
            }
        }
    }

    fn accepts(self, report: &ClosureReport) -> bool {
        match self {
            Prediction::Module => report.verdict == Verdict::FillsModule,
            Prediction::Known(p) => {
                report.verdict == Verdict::FillsKnownSubmodule && report.pattern.as_deref() == Some(p)
            }
            Prediction::ModuleOrQuotient => {
                matches!(report.verdict, Verdict::FillsModule | Verdict::FillsQuotientPattern)
            }
        }
    }
}

pub fn irreducibility(config: &RunConfig) -> Result<IrreducibilityReport> {
    config.validate()?;
    let spec = ModuleSpec::new(config.rank, &config.label()?, config.sigma_values()?)?;
    let bounds = config.desk_bounds()?;
    let mut rng = generation::rng(config.seed);
    let minuscule = spec.wedge_degree().is_some();
    if (config.seed_in.is_some() || config.seed_at.is_some()) && !minuscule {
        return Err(Error::Precondition(format!(
            "--seed-in and --seed-at need a minuscule label, got {}",
            config.lambda
        )));
    }
    if config.seed_in.is_some() && config.seed_at.is_some() {
        return Err(Error::Precondition("--seed-in and --seed-at are exclusive".into()));
    }
    let candidates = degrees_by_distance(&bounds);

    let (seeds, description, prediction) = if let Some(at) = &config.seed_at {
        if at != "-sigma" {
            return Err(Error::Parse(format!("--seed-at accepts only \"-sigma\", got {at:?}")));
        }
        let n = spec
            .minus_sigma()
            .ok_or_else(|| Error::Precondition("--seed-at -sigma needs integral sigma".into()))?;
        if !bounds.in_outer(&n) {
            return Err(Error::Precondition(format!("-sigma = {n:?} lies outside the outer box")));
        }
        let seeds = (0..spec.dim())
            .map(|i| GradedVector::homogeneous(n.clone(), spec.rep().unit(i)))
            .collect::<Vec<_>>();
        (seeds, format!("full fiber at -sigma = {}", degree_string(&n)), Prediction::Known("W~"))
    } else if config.seed_in.is_some() {
        let mut found = None;
        for n in &candidates {
            if let Some(v) = generation::random_in_w(&mut rng, &spec, n.clone())? {
                found = Some((n.clone(), v));
                break;
            }
        }
        let (n, v) = found.ok_or_else(|| Error::Precondition("W vanishes on the inner box".into()))?;
        (vec![v], format!("random vector of W at {}", degree_string(&n)), Prediction::Known("W"))
    } else if minuscule {
        let mut found = None;
        for n in &candidates {
            if let Some(v) = generation::random_outside_w_tilde(&mut rng, &spec, n.clone())? {
                found = Some((n.clone(), v));
                break;
            }
        }
        match found {
            Some((n, v)) => (
                vec![v],
                format!("random vector outside W~ at {}", degree_string(&n)),
                Prediction::ModuleOrQuotient,
            ),
            None => {
                let n = candidates[0].clone();
                (
                    vec![generation::random_homogeneous(&mut rng, &spec, n.clone())],
                    format!("random vector at {}", degree_string(&n)),
                    Prediction::Module,
                )
            }
        }
    } else {
        let n = candidates[0].clone();
        (
            vec![generation::random_homogeneous(&mut rng, &spec, n.clone())],
            format!("random vector at {}", degree_string(&n)),
            Prediction::Module,
        )
    };
    let mut outcome = generation::closure(&spec, &seeds, &bounds, config.radius)?;
    outcome.report.seeds = format!("{description}, prng seed {}", config.seed);
    let consistent = prediction.accepts(&outcome.report);
    Ok(IrreducibilityReport {
        config: config.clone(),
        prediction: prediction.describe(),
        closure: outcome.report,
        consistent,
    })
}

fn render_irreducibility(r: &IrreducibilityReport) -> String {
    let c = &r.closure;
    let mut s = String::new();
    let _ = writeln!(
        s,
        "F^sigma({}) with sigma = ({}), dim {}",
        r.config.lambda,
        c.spec.sigma.join(","),
        c.spec.dim
    );
    let _ = writeln!(s, "seeds: {}", c.seeds);
    let _ = writeln!(
        s,
        "box: outer {}, inner {}; R = {} ({} generators); {} iterations, {} vectors accepted",
        c.bounds.outer_radius, c.bounds.inner_radius, c.generator_radius, c.generators, c.iterations, c.accepted
    );
    let _ = writeln!(s, "degree  rank/expected");
    for d in &c.degrees {
        let _ = writeln!(s, "{}  {}/{}", degree_string(&d.n), d.rank, d.expected);
    }
    let verdict = match &c.pattern {
        Some(p) => format!("{} ({p})", c.verdict),
        None => c.verdict.to_string(),
    };
    let _ = writeln!(s, "verdict: {verdict}");
    let _ = writeln!(s, "predicted: {}", r.prediction);
    s
}

// ---------------------------------------------------------------- derham

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerhamFiber {
    pub n: Vec<i64>,
    pub kernel_rank: usize,
    pub image_rank: usize,
    pub quotient_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerhamDegree {
    pub k: usize,
    pub fiber_dim: usize,
    /// Degrees where `ker psi_k` equals the `W~_k` piece.
    pub kernel_matches: CheckCount,
    /// Degrees where `im psi_k` equals the `W_{k+1}` piece.
    pub image_matches: CheckCount,
    /// Degrees where `dim F / W~_k` is `C(N+1,k) - C(N,k-1)`, or 0 at `n = -sigma`.
    pub quotient_matches: CheckCount,
    /// Degrees where `psi_{k+1} psi_k = 0`; empty for `k = N`.
    pub composition: CheckCount,
    pub equivariance: CheckCount,
    pub fibers: Vec<DerhamFiber>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerhamReport {
    pub config: RunConfig,
    pub degrees: usize,
    pub table: Vec<DerhamDegree>,
    pub consistent: bool,
}

pub fn derham(config: &RunConfig) -> Result<DerhamReport> {
    config.validate()?;
    let sigma = config.sigma_values()?;
    let rank = config.rank;
    let degrees = config.desk_bounds()?.outer_degrees();
    let mut rng = generation::rng(config.seed);
    let generators = divfield::generators(rank, config.radius);
    let mut table = Vec::new();
    for k in 0..=rank {
        let source = ModuleSpec::wedge(rank, k, sigma.clone())?;
        let target = fmodule::psi_target(&source)?;
        let next = if k < rank {
            Some(fmodule::psi_target(&target)?)
        } else {
            None
        };
        let generic_quotient = fmodule::binomial(rank + 1, k) - if k == 0 { 0 } else { fmodule::binomial(rank, k - 1) };
        let mut row = DerhamDegree {
            k,
            fiber_dim: source.dim(),
            kernel_matches: CheckCount { passed: 0, total: 0 },
            image_matches: CheckCount { passed: 0, total: 0 },
            quotient_matches: CheckCount { passed: 0, total: 0 },
            composition: CheckCount { passed: 0, total: 0 },
            equivariance: CheckCount { passed: 0, total: 0 },
            fibers: Vec::with_capacity(degrees.len()),
        };
        for n in &degrees {
            let m = fmodule::psi_matrix(&source, &target, n)?;
            let kernel = linalg::kernel(&m, source.dim());
            let image = linalg::image(&m, source.dim());
            let w_tilde = fmodule::w_tilde_piece(&source, n)?;
            row.kernel_matches.record(kernel.same_space(&w_tilde));
            row.image_matches.record(image.same_space(&fmodule::w_piece(&target, n)?));
            let quotient_dim = source.dim() - w_tilde.rank();
            let at_minus_sigma = source.shifted(n).iter().all(num_traits::Zero::is_zero);
            row.quotient_matches
                .record(quotient_dim == if at_minus_sigma { 0 } else { generic_quotient });
            if let Some(next) = &next {
                let m2 = fmodule::psi_matrix(&target, next, n)?;
                let product = linalg::mat_mul(&m2, &m);
                row.composition.record(product.iter().flatten().all(num_traits::Zero::is_zero));
            }
            row.fibers.push(DerhamFiber {
                n: n.clone(),
                kernel_rank: kernel.rank(),
                image_rank: image.rank(),
                quotient_dim,
            });
        }
        for _ in 0..EQUIVARIANCE_SAMPLES {
            let f = &generators[rand::Rng::random_range(&mut rng, 0..generators.len())];
            let n = degrees[rand::Rng::random_range(&mut rng, 0..degrees.len())].clone();
            let v = generation::random_homogeneous(&mut rng, &source, n);
            let lhs = fmodule::psi(&source, &target, &fmodule::act(&source, f, &v)?)?;
            let rhs = fmodule::act(&target, f, &fmodule::psi(&source, &target, &v)?)?;
            row.equivariance.record(lhs == rhs);
        }
        table.push(row);
    }
    let consistent = table.iter().all(|r| {
        r.kernel_matches.all_pass()
            && r.image_matches.all_pass()
            && r.quotient_matches.all_pass()
            && r.composition.all_pass()
            && r.equivariance.all_pass()
    });
    Ok(DerhamReport {
        config: config.clone(),
        degrees: degrees.len(),
        table,
        consistent,
    })
}

fn render_derham(r: &DerhamReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "sigma = ({}), {} degrees", r.config.sigma.join(","), r.degrees);
    let _ = writeln!(s, "k  dim  ker  im  F/W~  ker=W~  im=W  quotient  equivariance");
    let mut composition = true;
    for row in &r.table {
        // ranks are constant away from n = -sigma, where the quotient vanishes
        let generic = row
            .fibers
            .iter()
            .find(|f| f.quotient_dim != 0)
            .or_else(|| row.fibers.first());
        let (ker, im, q) = generic.map_or((0, 0, 0), |f| (f.kernel_rank, f.image_rank, f.quotient_dim));
        let count = |c: &CheckCount| format!("{}/{}", c.passed, c.total);
        let _ = writeln!(
            s,
            "{}  {}  {}  {}  {}  {}  {}  {}  {}",
            row.k,
            row.fiber_dim,
            ker,
            im,
            q,
            count(&row.kernel_matches),
            count(&row.image_matches),
            count(&row.quotient_matches),
            count(&row.equivariance)
        );
        for f in row.fibers.iter().filter(|f| f.kernel_rank != ker) {
            let _ = writeln!(
                s,
                "   enlarged kernel at n = {}: rank {} (generic {ker})",
                degree_string(&f.n),
                f.kernel_rank
            );
        }
        composition &= row.composition.all_pass();
    }
    let _ = writeln!(s, "psi∘psi = 0: {}", if composition { "pass" } else { "FAIL" });
    s
}

// ---------------------------------------------------------------- kappa

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KappaReport {
    pub config: RunConfig,
    pub kappa: Vec<i64>,
    /// The deepest weight among the enumerated weights of `V(lambda)`.
    pub enumerated: Vec<i64>,
    pub matches: bool,
    /// `kappa_j = kappa_{N+1-j}`.
    pub symmetric: bool,
    pub consistent: bool,
}

/// The deepest weight of `V(lambda)` by multiplicity enumeration.
pub fn enumerated_lowest(lambda: &WeightLabel) -> Result<AlphaOffset> {
    let weights = weight_core::weight_multiplicities(lambda)?;
    let max_depth = weights.keys().map(AlphaOffset::depth).max();
    let deepest: Vec<&AlphaOffset> = weights.keys().filter(|w| Some(w.depth()) == max_depth).collect();
    match deepest.as_slice() {
        [w] => Ok((*w).clone()),
        _ => Err(Error::Verification(format!(
            "{} weights of maximal depth in V({})",
            deepest.len(),
            label_string(lambda)
        ))),
    }
}

pub fn kappa(config: &RunConfig) -> Result<KappaReport> {
    config.validate()?;
    let lambda = config.label()?;
    let k = weight_core::kappa(&lambda)?;
    let e = enumerated_lowest(&lambda)?;
    let symmetric = k.0.iter().eq(k.0.iter().rev());
    let matches = k == e;
    Ok(KappaReport {
        config: config.clone(),
        kappa: k.0,
        enumerated: e.0,
        matches,
        symmetric,
        consistent: matches && symmetric,
    })
}

fn render_kappa(r: &KappaReport) -> String {
    let tag = if r.matches {
        "[matches enumeration]".to_string()
    } else {
        format!("[MISMATCH: enumeration gives {}]", AlphaOffset(r.enumerated.clone()))
    };
    format!("{} {tag}\n", AlphaOffset(r.kappa.clone()))
}

// ---------------------------------------------------------------- theta-strings

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaReport {
    pub config: RunConfig,
    /// `1 + sum C_i`.
    pub length: i64,
    pub strings: usize,
    pub longest: i64,
    /// Tops of the strings of maximal length.
    pub maximal_tops: Vec<Vec<i64>>,
    pub within_bound: bool,
    pub through_lambda_maximal: bool,
    pub tops_admissible: bool,
    pub unique: bool,
    /// Uniqueness is predicted for `N = 2` and for `(1,0,...,0,1)`.
    pub unique_predicted: bool,
    pub consistent: bool,
}

pub fn theta(config: &RunConfig) -> Result<ThetaReport> {
    config.validate()?;
    let lambda = config.label()?;
    let data = weight_core::theta_string_data(&lambda)?;
    let weights: BTreeSet<AlphaOffset> = weight_core::weight_multiplicities(&lambda)?.into_keys().collect();
    let strings = weight_core::theta_strings(&weights)?;
    let longest = strings.iter().map(|s| s.length).max().unwrap_or(0);
    let maximal: Vec<&AlphaOffset> = strings
        .iter()
        .filter(|s| s.length == data.length)
        .map(|s| &s.top)
        .collect();
    let zero = AlphaOffset::zero(config.rank);
    let through_lambda_maximal = strings.iter().any(|s| s.top == zero && s.length == data.length);
    let tops_admissible = maximal.iter().all(|t| data.is_admissible_top(t));
    let unique = maximal.len() == 1;
    let n = config.rank;
    let unique_predicted = n == 2
        || (n >= 2 && lambda.0.iter().enumerate().all(|(i, &c)| c == i64::from(i == 0 || i == n - 1)));
    let within_bound = longest <= data.length;
    Ok(ThetaReport {
        config: config.clone(),
        length: data.length,
        strings: strings.len(),
        longest,
        maximal_tops: maximal.iter().map(|t| t.0.clone()).collect(),
        within_bound,
        through_lambda_maximal,
        tops_admissible,
        unique,
        unique_predicted,
        consistent: within_bound && through_lambda_maximal && tops_admissible && (unique || !unique_predicted),
    })
}

fn render_theta(r: &ThetaReport) -> String {
    let mut s = if r.unique {
        format!("length {}, unique maximal string\n", r.length)
    } else {
        format!("length {}, {} maximal strings\n", r.length, r.maximal_tops.len())
    };
    let tops: Vec<String> = r.maximal_tops.iter().map(|t| AlphaOffset(t.clone()).to_string()).collect();
    let _ = writeln!(s, "tops: {}", tops.join(" "));
    let _ = writeln!(
        s,
        "{} strings; longest {}; string through lambda maximal: {}; tops admissible: {}",
        r.strings, r.longest, r.through_lambda_maximal, r.tops_admissible
    );
    s
}

// ---------------------------------------------------------------- dump-irrep

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DumpReport {
    pub config: RunConfig,
    pub weyl_dimension: u64,
    pub irrep: IrrepDump,
    pub consistent: bool,
}

pub fn dump_irrep(config: &RunConfig) -> Result<DumpReport> {
    config.validate()?;
    let lambda = config.label()?;
    let rep = sl_rep::build_irrep(config.rank, &lambda)?;
    let weyl = weight_core::weyl_dimension(&lambda)?;
    let commutes = sl_rep::check_commutation(&rep).is_ok();
    Ok(DumpReport {
        config: config.clone(),
        weyl_dimension: weyl,
        irrep: rep.to_dump(),
        consistent: commutes && rep.dim() as u64 == weyl,
    })
}

fn render_dump(r: &DumpReport) -> String {
    let mut s = format!(
        "V({}) of sl_{}: dim {} (Weyl formula {})\n",
        label_string(&WeightLabel(r.irrep.lambda.clone())),
        r.irrep.rank + 1,
        r.irrep.dim,
        r.weyl_dimension
    );
    for (i, w) in r.irrep.weights.iter().enumerate() {
        let _ = writeln!(s, "v{i}: weight {}", AlphaOffset(w.clone()));
    }
    s
}

// ---------------------------------------------------------------- driver

/// Result of one invocation: exit code and the text for each stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(message: String) -> Self {
        Self {
            code: 2,
            stdout: String::new(),
            stderr: message,
        }
    }
}

/// Exit code for a library error: mathematical failures are 1, the rest 2.
pub fn error_code(err: &Error) -> i32 {
    match err {
        Error::Verification(_) | Error::Construction(_) => 1,
        _ => 2,
    }
}

/// Runs the command line `args` (including the program name). `env_seed` is
/// the value of `DIVTORUS_SEED`, if set.
pub fn run<I, T>(args: I, env_seed: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let config = match resolve(&cli, env_seed) {
        Ok(c) => c,
        Err(e) => return Outcome::usage(format!("error: {e}\n")),
    };
    match execute(&config) {
        Ok((consistent, text)) => {
            let code = if consistent { 0 } else { 1 };
            match &config.out {
                Some(path) => match std::fs::write(path, &text) {
                    Ok(()) => Outcome {
                        code,
                        stdout: String::new(),
                        stderr: format!("wrote {path}\n"),
                    },
                    Err(e) => Outcome::usage(format!("error: cannot write {path}: {e}\n")),
                },
                None => Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                },
            }
        }
        Err(e) => Outcome {
            code: error_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Entry point for the binary: reads the process arguments and environment.
pub fn main_with_env() -> i32 {
    let env_seed = std::env::var(SEED_ENV).ok();
    let out = run(std::env::args_os(), env_seed.as_deref());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

fn resolve(cli: &Cli, env_seed: Option<&str>) -> Result<RunConfig> {
    let (name, common, seed_in, seed_at) = match &cli.command {
        Command::VerifyAlgebra(c) => ("verify-algebra", c, None, None),
        Command::Irreducibility(a) => (
            "irreducibility",
            &a.common,
            a.seed_in.map(|_| "W".to_string()),
            a.seed_at.clone(),
        ),
        Command::Derham(c) => ("derham", c, None, None),
        Command::Kappa(c) => ("kappa", c, None, None),
        Command::ThetaStrings(c) => ("theta-strings", c, None, None),
        Command::DumpIrrep(c) => ("dump-irrep", c, None, None),
    };
    let mut config = RunConfig::new(name, common.rank);
    if let Some(l) = &common.lambda {
        config.lambda = l.clone();
    }
    if let Some(s) = &common.sigma {
        config.sigma = rational::parse_list(s)?.iter().map(rational::format).collect();
    }
    config.radius = common.radius;
    config.box_out = common.box_out;
    config.box_in = common.box_in;
    config.seed = match env_seed {
        Some(s) => s
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{SEED_ENV} must be an unsigned integer, got {s:?}")))?,
        None => common.seed,
    };
    config.seed_in = seed_in;
    config.seed_at = seed_at;
    config.out = common.out.as_ref().map(|p| p.display().to_string());
    config.format = common.format;
    config.validate()?;
    Ok(config)
}

/// Runs the configured command; returns consistency and the rendered report.
pub fn execute(config: &RunConfig) -> Result<(bool, String)> {
    fn emit<T: Serialize>(config: &RunConfig, report: &T, text: impl FnOnce(&T) -> String) -> Result<String> {
        Ok(match config.format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(report).map_err(|e| Error::Construction(e.to_string()))?;
                s.push('\n');
                s
            }
            Format::Text => text(report),
        })
    }
    match config.command.as_str() {
        "verify-algebra" => {
            let r = verify_algebra(config)?;
            Ok((r.consistent, emit(config, &r, render_algebra)?))
        }
        "irreducibility" => {
            let r = irreducibility(config)?;
            Ok((r.consistent, emit(config, &r, render_irreducibility)?))
        }
        "derham" => {
            let r = derham(config)?;
            Ok((r.consistent, emit(config, &r, render_derham)?))
        }
        "kappa" => {
            let r = kappa(config)?;
            Ok((r.consistent, emit(config, &r, render_kappa)?))
        }
        "theta-strings" => {
            let r = theta(config)?;
            Ok((r.consistent, emit(config, &r, render_theta)?))
        }
        "dump-irrep" => {
            let r = dump_irrep(config)?;
            Ok((r.consistent, emit(config, &r, render_dump)?))
        }
        other => Err(Error::Parse(format!("unknown command {other:?}"))),
    }
}

/// Inner-box degrees, nearest the centre first.
fn degrees_by_distance(bounds: &TruncationBox) -> Vec<Degree> {
    let mut out = bounds.inner_degrees();
    out.sort_by_key(|n| {
        let d = n.iter().zip(&bounds.center).map(|(a, c)| (a - c).abs()).max();
        (d, n.clone())
    });
    out
}

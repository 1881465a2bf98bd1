//! Certificates, orbit reports and verification suites behind the `redrep` binary.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use redrep::analysis::{composition_series_limited, is_simple_limited, is_uniserial_limited};
use redrep::functors::{construct_l0_via_u, coset_weight, predicted_multiset, predicted_subregular_factors, u_ambient, u_image};
use redrep::uea::baby_verma_limited;
use redrep::{
    AlgebraKind, CompSeries, Coords, Error, Limits, Matrix, ModuleRep, PChar, Permutation, RootDatum,
    Weight,
};
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = concat!("redrep/", env!("CARGO_PKG_VERSION"));

/// Failures of a command, each with its process exit code.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("resource limit: {0}")]
    Limit(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 2,
            CliError::Limit(_) => 3,
            CliError::Assertion(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } | Error::DimensionGuard { .. } => CliError::Limit(e.to_string()),
            Error::InvalidInput(_)
            | Error::RankNotDivisible { .. }
            | Error::NotInAlcove
            | Error::NotStandardLevi { .. }
            | Error::NotApplicable { .. }
            | Error::ZeroFactor { .. } => CliError::Invalid(e.to_string()),
            Error::NotDiagonalizable
            | Error::NotSimple
            | Error::NotSubmodule
            | Error::InconsistentLabel
            | Error::StructureViolation(_) => CliError::Assertion(e.to_string()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algebra {
    Gl,
    Sl,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChiKind {
    Regular,
    Subregular,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Regular3,
    Subregular3,
    Glcorpus,
    Uembed,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Regular3 => "regular3",
            Suite::Subregular3 => "subregular3",
            Suite::Glcorpus => "glcorpus",
            Suite::Uembed => "uembed",
        }
    }
}

/// A weight in both coordinate systems.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightRecord {
    pub cartan: Vec<u32>,
    pub eps: Vec<u32>,
}

impl WeightRecord {
    pub fn of(w: &Weight) -> Self {
        let cartan = w.to_system(Coords::Cartan);
        let eps = match w.system() {
            Coords::Eps => w.clone(),
            Coords::Cartan => w.lift(),
        };
        WeightRecord { cartan: cartan.coords().to_vec(), eps: eps.coords().to_vec() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub algebra: Algebra,
    pub chi_kind: ChiKind,
    pub lambda: WeightRecord,
    pub n: usize,
    pub p: u32,
    pub tool_version: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCount {
    pub multiplicity: usize,
    pub weight: WeightRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorRecord {
    pub dim: usize,
    pub label: WeightRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flags {
    /// Absent when `p ∤ n`.
    pub in_w_dot_zero: Option<bool>,
    pub simple: bool,
    pub uniserial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub cartan: Vec<Vec<Vec<u32>>>,
    pub lowering: Vec<Vec<Vec<u32>>>,
    pub raising: Vec<Vec<Vec<u32>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Results {
    /// Bottom-up composition factors.
    pub composition: Vec<FactorRecord>,
    pub cross_checks: Vec<CrossCheck>,
    pub dim: usize,
    pub flags: Flags,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<MatrixDump>,
    pub weight_character: Vec<WeightCount>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub meta: Meta,
    pub results: Results,
}

impl Certificate {
    pub fn all_checks_pass(&self) -> bool {
        self.results.cross_checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificates serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("bad certificate: {e}")))
    }

    pub fn to_table(&self) -> String {
        let m = &self.meta;
        let r = &self.results;
        let mut out = String::new();
        let _ = writeln!(out, "{} {}  n={} p={}  chi={}", m.tool_version, algebra_name(m.algebra), m.n, m.p, chi_name(m.chi_kind));
        let _ = writeln!(out, "lambda      cartan {:?}  eps {:?}", m.lambda.cartan, m.lambda.eps);
        let _ = writeln!(out, "dim         {}", r.dim);
        let w0 = r.flags.in_w_dot_zero.map_or("n/a".to_string(), |b| b.to_string());
        let _ = writeln!(out, "simple      {}", r.flags.simple);
        let _ = writeln!(out, "uniserial   {}", r.flags.uniserial);
        let _ = writeln!(out, "in W.0      {w0}");
        let _ = writeln!(out, "composition ({} factors, bottom up)", r.composition.len());
        for (k, f) in r.composition.iter().enumerate() {
            let _ = writeln!(out, "  {:>3}  dim {:>6}  label {:?}", k, f.dim, native(&f.label, m.algebra));
        }
        let _ = writeln!(out, "weights ({} distinct)", r.weight_character.len());
        for w in r.weight_character.iter().take(32) {
            let _ = writeln!(out, "  {:?} x{}", native(&w.weight, m.algebra), w.multiplicity);
        }
        if r.weight_character.len() > 32 {
            let _ = writeln!(out, "  ... {} more", r.weight_character.len() - 32);
        }
        let _ = writeln!(out, "checks");
        for c in &r.cross_checks {
            let _ = writeln!(out, "  {:<28} {}", c.name, if c.passed { "ok" } else { "FAILED" });
        }
        out
    }
}

fn native(w: &WeightRecord, algebra: Algebra) -> &[u32] {
    match algebra {
        Algebra::Gl => &w.eps,
        Algebra::Sl => &w.cartan,
    }
}

fn algebra_name(a: Algebra) -> &'static str {
    match a {
        Algebra::Gl => "gl",
        Algebra::Sl => "sl",
    }
}

fn chi_name(c: ChiKind) -> &'static str {
    match c {
        ChiKind::Regular => "regular",
        ChiKind::Subregular => "subregular",
    }
}

/// Parse `"1,0,2"` into residues mod `p`; negative entries are reduced.
pub fn parse_lambda(text: &str, p: u32) -> Result<Vec<i64>, CliError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map(|x| x.rem_euclid(p.max(1) as i64))
                .map_err(|_| CliError::Invalid(format!("bad weight entry {s:?}")))
        })
        .collect()
}

fn datum_for(n: usize, p: u32, algebra: Algebra) -> Result<RootDatum, CliError> {
    let kind = match algebra {
        Algebra::Gl => AlgebraKind::GeneralLinear,
        Algebra::Sl => AlgebraKind::SpecialLinear,
    };
    Ok(RootDatum::new(n, p, kind)?)
}

fn weight_for(datum: &RootDatum, coords: &[i64]) -> Result<Weight, CliError> {
    let want = match datum.kind() {
        AlgebraKind::GeneralLinear => datum.n(),
        AlgebraKind::SpecialLinear => datum.n() - 1,
    };
    if coords.len() != want {
        return Err(CliError::Invalid(format!(
            "lambda needs {want} entries ({} coordinates), got {}",
            match datum.kind() {
                AlgebraKind::GeneralLinear => "epsilon",
                AlgebraKind::SpecialLinear => "Cartan",
            },
            coords.len()
        )));
    }
    Ok(Weight::from_signed(coords, datum.coords(), datum.p()))
}

/// Inputs of the `decompose` command.
#[derive(Clone, Debug)]
pub struct DecomposeRequest {
    pub n: usize,
    pub p: u32,
    pub algebra: Algebra,
    pub chi: ChiKind,
    pub lambda: Vec<i64>,
    pub dump_matrices: bool,
    pub max_dim: Option<u128>,
}

fn check(name: &str, passed: bool) -> CrossCheck {
    CrossCheck { name: name.to_string(), passed }
}

fn dump(m: &ModuleRep) -> MatrixDump {
    let rows = |v: &[Matrix]| v.iter().map(Matrix::to_rows).collect();
    MatrixDump { cartan: rows(m.cartan()), lowering: rows(m.lowering()), raising: rows(m.raising()) }
}

/// Build `Z_χ(λ)`, decompose it and run every applicable cross-check.
pub fn decompose(req: &DecomposeRequest) -> Result<Certificate, CliError> {
    let datum = datum_for(req.n, req.p, req.algebra)?;
    let chi = match req.chi {
        ChiKind::Regular => PChar::regular(req.n, req.p)?,
        ChiKind::Subregular => PChar::subregular(req.n, req.p)?,
    };
    let lambda = weight_for(&datum, &req.lambda)?;
    let mut limits = Limits::default();
    if let Some(cap) = req.max_dim {
        limits.max_dim = cap;
    }
    let z = baby_verma_limited(&datum, &chi, &lambda, &limits)?;
    let series = composition_series_limited(&z, &limits)?;
    let uniserial = is_uniserial_limited(&z, &limits)?;
    let in_w0 = match datum.in_w_dot_zero(&lambda) {
        Ok(b) => Some(b),
        Err(Error::RankNotDivisible { .. }) => None,
        Err(e) => return Err(e.into()),
    };

    let mut checks = vec![
        check("structure", z.check_all_relations().all_pass()),
        check("series_total_dimension", series.total_dim() == z.dim()),
        check("factors_simple", factors_simple(&series, &limits)?),
    ];
    let base = (req.p as usize).pow(datum.num_positive_roots() as u32 - 1);
    match (req.chi, datum.kind()) {
        (ChiKind::Regular, AlgebraKind::SpecialLinear) => {
            checks.push(check("regular_divisibility", series.dims().iter().all(|&d| d % base == 0)));
            if let Some(linked) = in_w0 {
                let ok = if linked {
                    series.len() == req.p as usize && series.multiset().len() == 1 && series.dims().iter().all(|&d| d == base)
                } else {
                    series.len() == 1
                };
                checks.push(check("w_dot_zero_dichotomy", ok));
            }
        }
        (ChiKind::Regular, AlgebraKind::GeneralLinear) => {
            checks.push(check("regular_gl_simple", series.len() == 1));
        }
        (ChiKind::Subregular, kind) => {
            if (2..=8).contains(&req.n) {
                let predicted = predicted_subregular_factors(&datum, &lambda)?;
                checks.push(check("predicted_multiplicities", predicted_multiset(&predicted) == series.multiset()));
                let dims_ok = series
                    .factors
                    .iter()
                    .all(|f| predicted.iter().any(|q| q.label == f.label && q.dim == f.dim));
                checks.push(check("predicted_dimensions", dims_ok));
            }
            if kind == AlgebraKind::GeneralLinear {
                checks.push(check("multiplicity_free", series.multiset().values().all(|&k| k == 1)));
                checks.push(check("uniserial", uniserial));
            }
        }
    }

    let mut weight_character: Vec<WeightCount> = z
        .character()
        .into_iter()
        .map(|(w, k)| WeightCount { multiplicity: k, weight: WeightRecord::of(&w) })
        .collect();
    weight_character.sort_by(|a, b| native(&a.weight, req.algebra).cmp(native(&b.weight, req.algebra)));

    Ok(Certificate {
        meta: Meta {
            algebra: req.algebra,
            chi_kind: req.chi,
            lambda: WeightRecord::of(&lambda),
            n: req.n,
            p: req.p,
            tool_version: TOOL_VERSION.to_string(),
        },
        results: Results {
            composition: series
                .factors
                .iter()
                .map(|f| FactorRecord { dim: f.dim, label: WeightRecord::of(&f.label) })
                .collect(),
            cross_checks: checks,
            dim: z.dim(),
            flags: Flags { in_w_dot_zero: in_w0, simple: series.len() == 1, uniserial },
            matrices: req.dump_matrices.then(|| dump(&z)),
            weight_character,
        },
    })
}

fn factors_simple(series: &CompSeries, limits: &Limits) -> Result<bool, CliError> {
    for f in &series.factors {
        if !is_simple_limited(&f.module, limits)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredictedRecord {
    pub dim: usize,
    pub j: usize,
    pub label: WeightRecord,
    pub lambda_j: WeightRecord,
    pub multiplicity: usize,
}

/// Alcove data of a weight, computed without building any module.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub algebra: Algebra,
    /// `None` when `p ∤ n`.
    pub in_w_dot_zero: Option<bool>,
    pub lambda: WeightRecord,
    pub lambda0: WeightRecord,
    /// `λ_i = σ^i.λ0`, `i = 0, …, n-1`.
    pub lambda_i: Vec<WeightRecord>,
    /// `m(λ_i, α_{n-1})`.
    pub m_i: Vec<u32>,
    pub n: usize,
    pub p: u32,
    pub predicted_factors: Vec<PredictedRecord>,
    /// `(r_0, …, r_{n-1})`.
    pub r: Vec<u32>,
    pub tool_version: String,
    /// One-based images of `w` with `w.λ0 = λ`.
    pub w: Vec<usize>,
}

impl OrbitReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_table(&self) -> String {
        let a = self.algebra;
        let mut out = String::new();
        let _ = writeln!(out, "{} {}  n={} p={}", self.tool_version, algebra_name(a), self.n, self.p);
        let _ = writeln!(out, "lambda   {:?}", native(&self.lambda, a));
        let _ = writeln!(out, "lambda0  {:?}", native(&self.lambda0, a));
        let _ = writeln!(out, "w        {:?}", self.w);
        let _ = writeln!(out, "r        {:?}", self.r);
        let w0 = self.in_w_dot_zero.map_or("n/a".to_string(), |b| if b { "yes".into() } else { "no".into() });
        let _ = writeln!(out, "in W.0   {w0}");
        let _ = writeln!(out, "cosets");
        for (i, (l, m)) in self.lambda_i.iter().zip(&self.m_i).enumerate() {
            let _ = writeln!(out, "  lambda_{i} {:?}  m {}", native(l, a), m);
        }
        let _ = writeln!(out, "predicted factors (subregular chi)");
        for f in &self.predicted_factors {
            let _ = writeln!(out, "  j={}  label {:?}  dim {}  multiplicity {}", f.j, native(&f.label, a), f.dim, f.multiplicity);
        }
        out
    }
}

pub fn orbit(n: usize, p: u32, algebra: Algebra, lambda: &[i64]) -> Result<OrbitReport, CliError> {
    let datum = datum_for(n, p, algebra)?;
    let lambda = weight_for(&datum, lambda)?;
    let (lambda0, w) = datum.alcove_representative(&lambda)?;
    let r = datum.r_coefficients(&lambda0)?;
    let lambda_i: Vec<Weight> = (0..n).map(|i| coset_weight(&datum, &lambda0, i)).collect();
    let m_i = lambda_i.iter().map(|l| datum.m_exponent(l, n - 1)).collect();
    let in_w0 = match datum.in_w_dot_zero(&lambda) {
        Ok(b) => Some(b),
        Err(Error::RankNotDivisible { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let predicted = if n <= 8 { predicted_subregular_factors(&datum, &lambda)? } else { Vec::new() };
    Ok(OrbitReport {
        algebra,
        in_w_dot_zero: in_w0,
        lambda: WeightRecord::of(&lambda),
        lambda0: WeightRecord::of(&lambda0),
        lambda_i: lambda_i.iter().map(WeightRecord::of).collect(),
        m_i,
        n,
        p,
        predicted_factors: predicted
            .into_iter()
            .map(|f| PredictedRecord {
                dim: f.dim,
                j: f.j,
                label: WeightRecord::of(&f.label),
                lambda_j: WeightRecord::of(&f.lambda_j),
                multiplicity: f.multiplicity,
            })
            .collect(),
        r,
        tool_version: TOOL_VERSION.to_string(),
        w: w.one_based(),
    })
}

/// One named claim of a verification suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub detail: String,
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub claims: Vec<Claim>,
    pub suite: String,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let _ = writeln!(out, "{} {:<40} {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
        }
        let passed = self.claims.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{}: {passed}/{} claims pass", self.suite, self.claims.len());
        out
    }
}

fn claim(name: impl Into<String>, outcome: Result<String, String>) -> Claim {
    match outcome {
        Ok(detail) => Claim { detail, name: name.into(), passed: true },
        Err(detail) => Claim { detail, name: name.into(), passed: false },
    }
}

type Case = Box<dyn Fn() -> Claim + Send + Sync>;

/// Run independent cases on scoped threads and collate them in case order.
fn run_cases(cases: Vec<Case>) -> Vec<Claim> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(cases.len().max(1));
    let mut out: Vec<Option<Claim>> = vec![None; cases.len()];
    let next = std::sync::atomic::AtomicUsize::new(0);
    let results = std::sync::Mutex::new(&mut out);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                if k >= cases.len() {
                    break;
                }
                let c = (cases[k])();
                results.lock().expect("no poisoned workers")[k] = Some(c);
            });
        }
    });
    out.into_iter().map(|c| c.expect("every case ran")).collect()
}

fn series_of(datum: &RootDatum, chi: &PChar, lambda: &Weight) -> Result<(ModuleRep, CompSeries), String> {
    let z = baby_verma_limited(datum, chi, lambda, &Limits::default()).map_err(|e| e.to_string())?;
    let s = composition_series_limited(&z, &Limits::default()).map_err(|e| e.to_string())?;
    Ok((z, s))
}

fn suite_regular3() -> Vec<Case> {
    let datum = RootDatum::sl(3, 3).expect("valid datum");
    datum
        .all_weights()
        .into_iter()
        .map(|lambda| {
            let datum = datum.clone();
            Box::new(move || {
                let outcome = (|| {
                    let chi = PChar::regular(3, 3).map_err(|e| e.to_string())?;
                    let (_, s) = series_of(&datum, &chi, &lambda)?;
                    let linked = datum.in_w_dot_zero(&lambda).map_err(|e| e.to_string())?;
                    let detail = format!("in W.0 {linked}, dims {:?}", s.dims());
                    let ok = if linked {
                        s.len() == 3 && s.multiset().len() == 1 && s.dims() == vec![9, 9, 9]
                    } else {
                        s.len() == 1 && s.total_dim() == 27
                    };
                    if ok {
                        Ok(detail)
                    } else {
                        Err(detail)
                    }
                })();
                claim(format!("regular sl3 Z({lambda})"), outcome)
            }) as Case
        })
        .collect()
}

fn suite_subregular3() -> Vec<Case> {
    let cases: [(&str, [i64; 2]); 4] = [("a", [0, 0]), ("b", [2, 2]), ("c", [1, 0]), ("d", [0, 1])];
    cases
        .into_iter()
        .map(|(tag, c)| {
            Box::new(move || {
                let outcome = (|| {
                    let datum = RootDatum::sl(3, 3).map_err(|e| e.to_string())?;
                    let chi = PChar::subregular(3, 3).map_err(|e| e.to_string())?;
                    let lambda = Weight::cartan(&c, 3);
                    let (z, s) = series_of(&datum, &chi, &lambda)?;
                    let mut dims = s.dims();
                    dims.sort_unstable();
                    let shape_ok = match tag {
                        "a" => dims == vec![9, 9, 9] && s.multiset().len() == 1,
                        "b" => dims == vec![27],
                        _ => dims == vec![9, 18] && s.multiset().len() == 2,
                    };
                    let predicted = predicted_multiset(&predicted_subregular_factors(&datum, &lambda).map_err(|e| e.to_string())?);
                    let mut linkage_ok = true;
                    for mu in datum.parabolic_dot_orbit(&lambda, &[1]) {
                        let (other, t) = series_of(&datum, &chi, &mu)?;
                        linkage_ok &= other.character() == z.character() && t.multiset() == s.multiset();
                    }
                    let detail = format!("dims {dims:?}, W_I linkage {linkage_ok}");
                    if shape_ok && linkage_ok && predicted == s.multiset() {
                        Ok(detail)
                    } else {
                        Err(detail)
                    }
                })();
                claim(format!("subregular sl3 case ({tag}) Z({},{})", c[0], c[1]), outcome)
            }) as Case
        })
        .collect()
}

fn suite_glcorpus() -> Vec<Case> {
    let datum = RootDatum::gl(3, 3).expect("valid datum");
    let mut cases: Vec<Case> = Vec::new();
    for lambda in datum.all_weights() {
        let datum = datum.clone();
        cases.push(Box::new(move || {
            let outcome = (|| {
                let chi = PChar::regular(3, 3).map_err(|e| e.to_string())?;
                let (_, s) = series_of(&datum, &chi, &lambda)?;
                if s.len() == 1 {
                    Ok("simple".to_string())
                } else {
                    Err(format!("dims {:?}", s.dims()))
                }
            })();
            claim(format!("regular gl3 Z({lambda}) simple"), outcome)
        }));
    }
    for l0 in [[0, 0, 0], [1, 0, 0], [1, 2, 0]] {
        for i in 0..3 {
            let datum = datum.clone();
            cases.push(Box::new(move || {
                let outcome = (|| {
                    let chi = PChar::subregular(3, 3).map_err(|e| e.to_string())?;
                    let lambda0 = Weight::eps(&l0, 3);
                    let li = coset_weight(&datum, &lambda0, i);
                    let (z, s) = series_of(&datum, &chi, &li)?;
                    let uniserial = is_uniserial_limited(&z, &Limits::default()).map_err(|e| e.to_string())?;
                    let r = datum.r_coefficients(&lambda0).map_err(|e| e.to_string())?;
                    let mut dims = s.dims();
                    dims.sort_unstable();
                    let mut want: Vec<usize> = r.iter().filter(|&&x| x > 0).map(|&x| 9 * x as usize).collect();
                    want.sort_unstable();
                    let free = s.multiset().values().all(|&k| k == 1);
                    let detail = format!("uniserial {uniserial}, multiplicity-free {free}, dims {dims:?}, r {r:?}");
                    if uniserial && free && dims == want {
                        Ok(detail)
                    } else {
                        Err(detail)
                    }
                })();
                claim(format!("subregular gl3 Z(lambda_{i}), lambda0 = eps{l0:?}"), outcome)
            }));
        }
    }
    cases
}

fn suite_uembed() -> Vec<Case> {
    let order_case: Case = Box::new(|| {
        let outcome = (|| {
            let ambient = u_ambient(3, 3, &Limits::default()).map_err(|e| e.to_string())?;
            let first = u_image(&ambient, &[1, 2, 3]).map_err(|e| e.to_string())?;
            for w in Permutation::all(3) {
                let im = u_image(&ambient, &w.one_based()).map_err(|e| e.to_string())?;
                if im.basis() != first.basis() {
                    return Err(format!("order {:?} differs", w.one_based()));
                }
            }
            Ok(format!("all 6 orders agree, image dim {}", first.rank()))
        })();
        claim("u-image independent of factor order", outcome)
    });
    let build_case: Case = Box::new(|| {
        let outcome = (|| {
            let l0 = construct_l0_via_u(3, 3).map_err(|e| e.to_string())?;
            let datum = RootDatum::sl(3, 3).map_err(|e| e.to_string())?;
            let chi = PChar::regular(3, 3).map_err(|e| e.to_string())?;
            let (_, s) = series_of(&datum, &chi, &Weight::cartan(&[0, 0], 3))?;
            let simple = is_simple_limited(&l0, &Limits::default()).map_err(|e| e.to_string())?;
            let same_character = s.factors.first().is_some_and(|f| f.module.character() == l0.character());
            let detail = format!("dim {}, simple {simple}, character match {same_character}", l0.dim());
            if l0.dim() == 9 && simple && same_character {
                Ok(detail)
            } else {
                Err(detail)
            }
        })();
        claim("u-image is the simple L_chi(0) of dim 9", outcome)
    });
    vec![order_case, build_case]
}

pub fn verify(suite: Suite) -> SuiteReport {
    let cases = match suite {
        Suite::Regular3 => suite_regular3(),
        Suite::Subregular3 => suite_subregular3(),
        Suite::Glcorpus => suite_glcorpus(),
        Suite::Uembed => suite_uembed(),
    };
    SuiteReport { claims: run_cases(cases), suite: suite.name().to_string() }
}

/// Text of a certificate in the requested format.
pub fn render(cert: &Certificate, format: Format) -> String {
    match format {
        Format::Json => cert.to_json(),
        Format::Table => cert.to_table(),
    }
}

/// Measured label → multiplicity from a certificate, keyed by native coordinates.
pub fn measured_multiset(cert: &Certificate) -> BTreeMap<Vec<u32>, usize> {
    let mut out = BTreeMap::new();
    for f in &cert.results.composition {
        *out.entry(native(&f.label, cert.meta.algebra).to_vec()).or_insert(0) += 1;
    }
    out
}

/// Predicted label → multiplicity from an orbit report, keyed by native coordinates.
pub fn predicted_multiset_of(report: &OrbitReport) -> BTreeMap<Vec<u32>, usize> {
    report
        .predicted_factors
        .iter()
        .map(|f| (native(&f.label, report.algebra).to_vec(), f.multiplicity))
        .collect()
}

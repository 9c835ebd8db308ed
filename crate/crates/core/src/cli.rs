//! Command-line front end for the `twchev` binary.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::chevalley::{compute_structure_constants, fix_signs_for_rho};
use crate::groups::AdjointGroup;
use crate::rings::{
    AnyRing, DecidableSubring, FiniteFieldSq, GaussianIntegersSixth, GaussianRationals, GfSubfield, InvolutiveRing,
    RingDescriptor,
};
use crate::roots::{classify_orbits, ClassKind, DiagramPermutation, RootKind, RootSystem};
use crate::twist::{twisted_basis, TwistedSystem};
use crate::verifiers::{
    check_normalizer_sample, verify_basis, verify_generation, verify_group_relations, verify_recovery, verify_signs,
    verify_tangent_identities, RecoveryCoefficients, TangentCoefficients, VerificationReport,
};

#[derive(Debug, Parser)]
#[command(name = "twchev", version, about = "Twisted Chevalley algebras and groups over rings with involution")]
struct Cli {
    /// Write the JSON output to this path.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Roots, the diagram symmetry and the twisted classes.
    Rootsys {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// Sign-normalised structure constants and the signs of the symmetry.
    Constants {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        twist: Option<String>,
    },
    /// The twisted basis in Chevalley coordinates.
    Twistedbasis {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        ring: String,
    },
    /// A class generator as an adjoint matrix.
    Generators {
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        ring: String,
        /// A root of the class, e.g. `a1` or `a1+a2`.
        #[arg(long)]
        class: String,
        /// `t=<elem>` and, for A2 classes, `u=<elem>`.
        #[arg(long = "param")]
        params: Vec<String>,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long = "type")]
        kind: String,
        #[arg(long)]
        twist: Option<String>,
        #[arg(long)]
        ring: String,
        /// Extension ring for the normalizer suite.
        #[arg(long)]
        ext: Option<String>,
        /// Samples for the normalizer suite.
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, hide = true)]
        mutate: bool,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tangent,
    Generation,
    Recovery,
    Normalizer,
    Signs,
    Basis,
    Groups,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Tangent => "tangent",
            Suite::Generation => "generation",
            Suite::Recovery => "recovery",
            Suite::Normalizer => "normalizer",
            Suite::Signs => "signs",
            Suite::Basis => "basis",
            Suite::Groups => "groups",
            Suite::All => "all",
        }
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("invalid value for {flag}: {message}")]
    Usage { flag: &'static str, message: String },
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Run(String),
}

impl CliError {
    fn usage(flag: &'static str, message: impl fmt::Display) -> Self {
        CliError::Usage { flag, message: message.to_string() }
    }

    /// The flag named by a usage error.
    pub fn flag(&self) -> Option<&'static str> {
        match self {
            CliError::Usage { flag, .. } => Some(flag),
            _ => None,
        }
    }
}

/// The ring argument: a ring descriptor or the subring `Z[i][1/6]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingArg {
    Ring(RingDescriptor),
    GaussianIntegersSixth,
}

impl RingArg {
    fn parse(s: &str) -> Result<Self, CliError> {
        let norm: String = s.chars().filter(|c| !c.is_whitespace()).collect::<String>().to_ascii_lowercase();
        if matches!(norm.as_str(), "gaussian-integers[1/6]" | "z[i][1/6]") {
            return Ok(RingArg::GaussianIntegersSixth);
        }
        s.parse().map(RingArg::Ring).map_err(|e| CliError::usage("--ring", e))
    }

    /// The ring the algebraic suites run over.
    pub fn working(&self) -> RingDescriptor {
        match self {
            RingArg::Ring(d) => d.clone(),
            RingArg::GaussianIntegersSixth => RingDescriptor::GaussianRationals,
        }
    }
}

impl fmt::Display for RingArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingArg::Ring(d) => write!(f, "{d}"),
            RingArg::GaussianIntegersSixth => write!(f, "gaussian-integers[1/6]"),
        }
    }
}

/// A declared pair `R ⊂ S` for the normalizer suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubringPair {
    GaussianSixth,
    Gf { p: u32, sub: u32, ext: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistConfig {
    pub kind: RootKind,
    /// 0-based images of the simple roots.
    pub rho: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Action {
    Rootsys,
    Constants,
    Twistedbasis { ring: RingArg },
    Generators { ring: RingArg, class: String, t: String, u: Option<String> },
    Verify { suite: Suite, ring: RingArg, pair: Option<SubringPair>, samples: usize, mutate: bool },
}

/// A validated invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub twist: TwistConfig,
    pub action: Action,
    pub seed: u64,
    pub json: Option<PathBuf>,
}

fn parse_twist(kind: &str, twist: Option<&str>) -> Result<TwistConfig, CliError> {
    let kind: RootKind = kind.parse().map_err(|e| CliError::usage("--type", e))?;
    let system = RootSystem::new(kind).map_err(|e| CliError::usage("--type", e))?;
    let rho = match twist.map(str::trim) {
        None | Some("standard") => DiagramPermutation::standard(&system),
        Some(list) => {
            let images: Vec<usize> = list
                .split(',')
                .map(|x| x.trim().parse::<usize>().ok().and_then(|i| i.checked_sub(1)))
                .collect::<Option<_>>()
                .ok_or_else(|| CliError::usage("--twist", format!("expected 1-based images like 3,2,1, got {list}")))?;
            DiagramPermutation::new(&system, images).map_err(|e| CliError::usage("--twist", e))?
        }
    };
    Ok(TwistConfig { kind, rho: rho.as_slice().to_vec() })
}

/// Reject rings that lack `1/2`, an antifixed unit, or `1/3` when the
/// twist has `A2` classes.
fn check_ring(twist: &TwistConfig, ring: &RingArg) -> Result<(), CliError> {
    let built = ring.working().build().map_err(|e| CliError::usage("--ring", e))?;
    let name = ring.to_string();
    if !built.has_half() {
        return Err(CliError::usage("--ring", format!("{name} has no 1/2")));
    }
    if built.antifixed_unit().is_err() {
        return Err(CliError::usage("--ring", format!("{name} has no invertible θ-antifixed element")));
    }
    let system = RootSystem::new(twist.kind).expect("validated");
    let rho = DiagramPermutation::new(&system, twist.rho.clone()).expect("validated");
    if classify_orbits(&system, &rho).count(ClassKind::A2) > 0 && !built.has_third() {
        return Err(CliError::usage("--ring", format!("{name} has no 1/3, needed by the A2 classes of {}", twist.kind)));
    }
    Ok(())
}

fn subring_pair(ring: &RingArg, ext: Option<&str>) -> Result<SubringPair, CliError> {
    let ext = ext.map(|e| e.parse::<RingDescriptor>().map_err(|err| CliError::usage("--ext", err))).transpose()?;
    match (ring, ext) {
        (RingArg::GaussianIntegersSixth, None | Some(RingDescriptor::GaussianRationals)) => Ok(SubringPair::GaussianSixth),
        (RingArg::Ring(RingDescriptor::GaussianRationals), None) => Ok(SubringPair::GaussianSixth),
        (RingArg::Ring(RingDescriptor::FiniteFieldSq { p, k }), ext) => {
            let big = match ext {
                None => 3 * k,
                Some(RingDescriptor::FiniteFieldSq { p: q, k: big }) if q == *p => big,
                Some(other) => return Err(CliError::usage("--ext", format!("{other} does not contain gf({p},{k})"))),
            };
            let ambient = FiniteFieldSq::new(*p, big).map_err(|e| CliError::usage("--ext", e))?;
            GfSubfield::new(ambient, *k).map_err(|e| CliError::usage("--ext", e))?;
            Ok(SubringPair::Gf { p: *p, sub: *k, ext: big })
        }
        (_, Some(other)) => Err(CliError::usage("--ext", format!("no declared subring pair {ring} inside {other}"))),
        (_, None) => Err(CliError::usage("--ring", format!("no declared extension for {ring}; use gaussian-rationals or gf(p,k)"))),
    }
}

/// Parse and validate a command line (including the program name).
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv)?;
    let (twist, action) = match &cli.command {
        Command::Rootsys { kind, twist } => (parse_twist(kind, twist.as_deref())?, Action::Rootsys),
        Command::Constants { kind, twist } => (parse_twist(kind, twist.as_deref())?, Action::Constants),
        Command::Twistedbasis { kind, twist, ring } => {
            let tw = parse_twist(kind, twist.as_deref())?;
            let ring = RingArg::parse(ring)?;
            check_ring(&tw, &ring)?;
            (tw, Action::Twistedbasis { ring })
        }
        Command::Generators { kind, twist, ring, class, params } => {
            let tw = parse_twist(kind, twist.as_deref())?;
            let ring = RingArg::parse(ring)?;
            check_ring(&tw, &ring)?;
            let system = RootSystem::new(tw.kind).expect("validated");
            system.parse_root(class).map_err(|e| CliError::usage("--class", e))?;
            let (mut t, mut u) = (None, None);
            for p in params {
                match p.split_once('=') {
                    Some(("t", v)) => t = Some(v.to_string()),
                    Some(("u", v)) => u = Some(v.to_string()),
                    _ => return Err(CliError::usage("--param", format!("expected t=<elem> or u=<elem>, got {p}"))),
                }
            }
            let t = t.ok_or_else(|| CliError::usage("--param", "missing t=<elem>"))?;
            (tw, Action::Generators { ring, class: class.clone(), t, u })
        }
        Command::Verify { suite, kind, twist, ring, ext, samples, mutate } => {
            let tw = parse_twist(kind, twist.as_deref())?;
            let ring = RingArg::parse(ring)?;
            check_ring(&tw, &ring)?;
            if *mutate && !(suite.includes(Suite::Tangent) || suite.includes(Suite::Recovery)) {
                return Err(CliError::usage("--mutate", "applies to the tangent and recovery suites"));
            }
            let pair = if suite.includes(Suite::Normalizer) {
                Some(subring_pair(&ring, ext.as_deref())?)
            } else if ext.is_some() {
                return Err(CliError::usage("--ext", "only used by the normalizer suite"));
            } else {
                None
            };
            (tw, Action::Verify { suite: *suite, ring, pair, samples: *samples, mutate: *mutate })
        }
    };
    Ok(RunConfig { twist, action, seed: cli.seed, json: cli.json })
}

/// Text for the terminal, JSON for `--json`, and whether everything passed.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub text: String,
    pub json: Value,
    pub success: bool,
}

impl RunOutput {
    pub fn exit_code(&self) -> i32 {
        if self.success {
            0
        } else {
            1
        }
    }
}

fn system_and_rho(tw: &TwistConfig) -> (RootSystem, DiagramPermutation) {
    let system = RootSystem::new(tw.kind).expect("validated");
    let rho = DiagramPermutation::new(&system, tw.rho.clone()).expect("validated");
    (system, rho)
}

/// Chevalley basis vector names: `H1`, `X[a1+a2]`.
fn basis_name(system: &RootSystem, k: usize) -> String {
    if k < system.rank() {
        format!("H{}", k + 1)
    } else {
        format!("X[{}]", system.root(k - system.rank()))
    }
}

fn rootsys(tw: &TwistConfig) -> RunOutput {
    let (system, rho) = system_and_rho(tw);
    let classes = classify_orbits(&system, &rho);
    let mut text = format!("type {}  rank {}  roots {}  rho {}\n", tw.kind, system.rank(), system.len(), rho.cycles());
    let mut class_json = Vec::new();
    for c in 0..classes.len() {
        let cls = classes.class(c);
        let members: Vec<String> = cls.members.iter().map(|&m| system.root(m).to_string()).collect();
        text.push_str(&format!("class {c} {} [{}]\n", cls.kind, members.join(", ")));
        class_json.push(json!({ "kind": cls.kind.to_string(), "members": members }));
    }
    let json = json!({
        "type": tw.kind.to_string(),
        "rank": system.rank(),
        "cartan": system.cartan(),
        "positive_roots": (0..system.num_positive()).map(|i| system.root(i).to_string()).collect::<Vec<_>>(),
        "rho": rho.cycles(),
        "classes": class_json,
        "counts": {
            "A1": classes.count(ClassKind::A1),
            "A1^2": classes.count(ClassKind::A1Sq),
            "A2": classes.count(ClassKind::A2),
        },
    });
    RunOutput { text, json, success: true }
}

fn constants(tw: &TwistConfig) -> Result<RunOutput, CliError> {
    let (system, rho) = system_and_rho(tw);
    let table = fix_signs_for_rho(&compute_structure_constants(&system), &rho).map_err(|e| CliError::Run(e.to_string()))?;
    let mut text = String::new();
    let mut n_json = Vec::new();
    for (i, j, n) in table.constants() {
        let (a, b) = (system.root(i).to_string(), system.root(j).to_string());
        text.push_str(&format!("N {a} {b} {n:+}\n"));
        n_json.push(json!([a, b, n]));
    }
    let mut eps_json = Vec::new();
    for r in 0..system.len() {
        let a = system.root(r).to_string();
        text.push_str(&format!("eps {a} {:+}\n", table.epsilon(r)));
        eps_json.push(json!([a, table.epsilon(r)]));
    }
    let json = json!({ "type": tw.kind.to_string(), "rho": rho.cycles(), "N": n_json, "eps": eps_json });
    Ok(RunOutput { text, json, success: true })
}

fn twistedbasis_over<R: InvolutiveRing>(tw: &TwistConfig, ring: R) -> Result<RunOutput, CliError> {
    let (system, rho) = system_and_rho(tw);
    let sys = TwistedSystem::with_rho(&system, &rho, ring).map_err(|e| CliError::Run(e.to_string()))?;
    let basis = twisted_basis(&sys).map_err(|e| CliError::Run(e.to_string()))?;
    let ring = sys.ring();
    let mut text = format!("twisted basis of {} over {} ({} elements, a = {})\n", tw.kind, ring.name(), basis.len(), ring.format(basis.antifixed_unit()));
    let mut elems = Vec::new();
    for e in basis.elements() {
        let label = e.label.render(&system, sys.classes());
        let terms: Vec<(String, String)> = e
            .vector
            .coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !ring.is_zero(c))
            .map(|(k, c)| (basis_name(&system, k), ring.format(c)))
            .collect();
        let rendered: Vec<String> = terms.iter().map(|(b, c)| format!("({c})*{b}")).collect();
        text.push_str(&format!("{label} = {}\n", rendered.join(" + ")));
        elems.push(json!({ "label": label, "coordinates": terms.into_iter().map(|(b, c)| (b, Value::String(c))).collect::<serde_json::Map<String, Value>>() }));
    }
    let json = json!({
        "type": tw.kind.to_string(),
        "ring": ring.name(),
        "antifixed_unit": ring.format(basis.antifixed_unit()),
        "count": basis.len(),
        "elements": elems,
    });
    Ok(RunOutput { text, json, success: true })
}

fn generators_over<R: InvolutiveRing>(tw: &TwistConfig, ring: R, class: &str, t: &str, u: Option<&str>) -> Result<RunOutput, CliError> {
    let (system, rho) = system_and_rho(tw);
    let sys = TwistedSystem::with_rho(&system, &rho, ring).map_err(|e| CliError::Run(e.to_string()))?;
    let group = AdjointGroup::new(sys);
    let ring = group.ring();
    let root = system.parse_root(class).map_err(|e| CliError::usage("--class", e))?;
    let c = group.system().classes().class_of(root);
    let parse = |s: &str| ring.parse_elem(s).map_err(|e| CliError::usage("--param", e));
    let t = parse(t)?;
    let u = u.map(parse).transpose()?;
    let g = group.twisted_generator(c, &t, u.as_ref()).map_err(|e| CliError::usage("--param", e))?;
    let cls = group.system().classes().class(c);
    let word: Vec<String> = g
        .word
        .iter()
        .map(|tok| match tok {
            crate::groups::Token::X { root, t } => format!("x[{}]({})", system.root(*root), ring.format(t)),
            crate::groups::Token::Torus(v) => format!("h({})", v.iter().map(|x| ring.format(x)).collect::<Vec<_>>().join(",")),
        })
        .collect();
    let fixed = group.is_sigma_fixed(&g);
    let det = g.matrix.determinant(ring).map(|d| ring.format(&d));
    let rows: Vec<Vec<String>> = (0..g.matrix.rows()).map(|i| g.matrix.row(i).iter().map(|x| ring.format(x)).collect()).collect();
    let mut text = format!("class {} {} = {}\nsigma-fixed {fixed}  det {}\n", cls.kind, system.root(cls.representative()), word.join(" "), det.clone().unwrap_or_default());
    for i in 0..g.matrix.rows() {
        for j in 0..g.matrix.cols() {
            let x = g.matrix.get(i, j);
            let diag_one = i == j && ring.is_one(x);
            if !ring.is_zero(x) && !diag_one {
                text.push_str(&format!("  [{} <- {}] {}\n", basis_name(&system, i), basis_name(&system, j), ring.format(x)));
            }
        }
    }
    let json = json!({
        "type": tw.kind.to_string(),
        "ring": ring.name(),
        "class": { "kind": cls.kind.to_string(), "representative": system.root(cls.representative()).to_string() },
        "word": word,
        "sigma_fixed": fixed,
        "determinant": det,
        "basis": (0..group.dim()).map(|k| basis_name(&system, k)).collect::<Vec<_>>(),
        "matrix": rows,
    });
    Ok(RunOutput { text, json, success: fixed })
}

fn suites_over<R: InvolutiveRing>(tw: &TwistConfig, ring: R, suite: Suite, seed: u64, mutate: bool) -> Result<Vec<VerificationReport>, CliError> {
    let (system, rho) = system_and_rho(tw);
    let mut out = Vec::new();
    if suite.includes(Suite::Signs) {
        out.push(verify_signs(tw.kind));
    }
    let sys = TwistedSystem::with_rho(&system, &rho, ring).map_err(|e| CliError::Run(e.to_string()))?;
    if suite.includes(Suite::Basis) {
        out.push(verify_basis(&sys));
    }
    let group = AdjointGroup::new(sys);
    if suite.includes(Suite::Groups) {
        out.push(verify_group_relations(&group, seed));
    }
    if suite.includes(Suite::Tangent) {
        let coeffs = if mutate { TangentCoefficients::mutated() } else { TangentCoefficients::default() };
        out.push(verify_tangent_identities(&group, &coeffs, seed).map_err(|e| CliError::Run(e.to_string()))?);
    }
    if suite.includes(Suite::Generation) {
        out.push(verify_generation(&group));
    }
    if suite.includes(Suite::Recovery) {
        let coeffs = if mutate { RecoveryCoefficients::single_mutations()[0].1 } else { RecoveryCoefficients::default() };
        out.push(verify_recovery(&group, &coeffs));
    }
    Ok(out)
}

fn normalizer_over<S: InvolutiveRing, Sub: DecidableSubring<S>>(tw: &TwistConfig, ext: S, sub: &Sub, seed: u64, samples: usize) -> Result<VerificationReport, CliError> {
    let (system, rho) = system_and_rho(tw);
    let sys = TwistedSystem::with_rho(&system, &rho, ext).map_err(|e| CliError::Run(e.to_string()))?;
    Ok(check_normalizer_sample(&AdjointGroup::new(sys), sub, seed, samples))
}

macro_rules! dispatch {
    ($desc:expr, $ring:ident => $body:expr) => {{
        match $desc {
            RingDescriptor::GaussianRationals => {
                let $ring = GaussianRationals;
                $body
            }
            RingDescriptor::FiniteFieldSq { p, k } => {
                let $ring = FiniteFieldSq::new(*p, *k).map_err(|e| CliError::usage("--ring", e))?;
                $body
            }
            other => {
                let $ring: AnyRing = other.build().map_err(|e| CliError::usage("--ring", e))?;
                $body
            }
        }
    }};
}

fn verify(cfg: &RunConfig, suite: Suite, ring: &RingArg, pair: Option<&SubringPair>, samples: usize, mutate: bool) -> Result<RunOutput, CliError> {
    let tw = &cfg.twist;
    let working = ring.working();
    let mut reports = dispatch!(&working, r => suites_over(tw, r, suite, cfg.seed, mutate)?);
    if let Some(pair) = pair.filter(|_| suite.includes(Suite::Normalizer)) {
        let rep = match pair {
            SubringPair::GaussianSixth => normalizer_over(tw, GaussianRationals, &GaussianIntegersSixth::new(), cfg.seed, samples)?,
            SubringPair::Gf { p, sub, ext } => {
                let big = FiniteFieldSq::new(*p, *ext).map_err(|e| CliError::usage("--ext", e))?;
                let subfield = GfSubfield::new(big.clone(), *sub).map_err(|e| CliError::usage("--ext", e))?;
                normalizer_over(tw, big, &subfield, cfg.seed, samples)?
            }
        };
        reports.push(rep);
    }
    let mut report = if suite == Suite::All || reports.len() != 1 {
        let mut all = VerificationReport::new(suite.name());
        for r in reports {
            all.absorb(r);
        }
        all
    } else {
        reports.pop().expect("one report")
    };
    report.set_config("type", tw.kind.to_string());
    report.set_config("ring", ring.to_string());
    report.set_config("working_ring", working.to_string());
    report.set_config("seed", cfg.seed);
    if mutate {
        report.set_config("mutate", true);
    }
    let mut text = String::new();
    for c in &report.checks {
        let status = match c.status {
            crate::verifiers::Status::Pass => "PASS",
            crate::verifiers::Status::Fail => "FAIL",
        };
        match (&c.witness, c.status) {
            (Some(w), crate::verifiers::Status::Fail) => text.push_str(&format!("{status} {} {w}\n", c.id)),
            _ => text.push_str(&format!("{status} {}\n", c.id)),
        }
    }
    let (pass, fail) = report.count();
    text.push_str(&format!("suite {}: {pass} passed, {fail} failed ({} ms)\n", report.suite, report.elapsed_ms));
    let success = report.all_pass();
    let json = serde_json::to_value(&report).expect("report serialises");
    Ok(RunOutput { text, json, success })
}

/// Execute a validated configuration without touching stdout or files.
pub fn run(cfg: &RunConfig) -> Result<RunOutput, CliError> {
    let tw = &cfg.twist;
    match &cfg.action {
        Action::Rootsys => Ok(rootsys(tw)),
        Action::Constants => constants(tw),
        Action::Twistedbasis { ring } => dispatch!(&ring.working(), r => twistedbasis_over(tw, r)),
        Action::Generators { ring, class, t, u } => {
            dispatch!(&ring.working(), r => generators_over(tw, r, class, t, u.as_deref()))
        }
        Action::Verify { suite, ring, pair, samples, mutate } => verify(cfg, *suite, ring, pair.as_ref(), *samples, *mutate),
    }
}

/// Run, print the text output and write JSON when requested; returns the exit code.
pub fn execute(cfg: &RunConfig) -> Result<i32, CliError> {
    let out = run(cfg)?;
    print!("{}", out.text);
    if let Some(path) = &cfg.json {
        let body = serde_json::to_string_pretty(&out.json).expect("json value serialises");
        std::fs::write(path, body + "\n").map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(out.exit_code())
}

/// Entry point used by the binary.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match parse_args(argv).and_then(|cfg| execute(&cfg)) {
        Ok(code) => code,
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            e.exit_code()
        }
        Err(e) => {
            eprintln!("twchev: {e}");
            2
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<RunConfig, CliError> {
        parse_args(std::iter::once("twchev").chain(s.split_whitespace()))
    }

    #[test]
    fn valid_verify_config() {
        let cfg = parse("verify --suite all --type A3 --ring gaussian-rationals").unwrap();
        assert_eq!(cfg.twist.kind, RootKind::A(3));
        assert!(matches!(cfg.action, Action::Verify { suite: Suite::All, pair: Some(SubringPair::GaussianSixth), .. }));
    }

    #[test]
    fn usage_errors_name_the_flag() {
        assert_eq!(parse("verify --type A4 --ring gf(2,1)").unwrap_err().flag(), Some("--ring"));
        assert_eq!(parse("rootsys --type B2").unwrap_err().flag(), Some("--type"));
        assert_eq!(parse("twistedbasis --type A3 --ring rationals").unwrap_err().flag(), Some("--ring"));
        assert_eq!(parse("verify --type A4 --ring gf(3,1)").unwrap_err().flag(), Some("--ring"));
        assert_eq!(parse("rootsys --type A3 --twist 2,1,3").unwrap_err().flag(), Some("--twist"));
        assert_eq!(parse("verify --suite tangent --type A3 --ring gaussian-rationals --ext gf(3,3)").unwrap_err().flag(), Some("--ext"));
        assert_eq!(parse("verify --suite normalizer --type A3 --ring gf(3,1) --ext gf(3,2)").unwrap_err().flag(), Some("--ext"));
        assert!(matches!(parse("rootsys"), Err(CliError::Clap(_))));
    }

    #[test]
    fn normalizer_pair_defaults() {
        let cfg = parse("verify --suite normalizer --type A3 --ring gf(3,1)").unwrap();
        assert!(matches!(cfg.action, Action::Verify { pair: Some(SubringPair::Gf { p: 3, sub: 1, ext: 3 }), .. }));
        let cfg = parse("verify --suite normalizer --type A3 --ring gaussian-integers[1/6]").unwrap();
        assert!(matches!(cfg.action, Action::Verify { pair: Some(SubringPair::GaussianSixth), .. }));
    }

    #[test]
    fn rootsys_and_constants_output() {
        let out = run(&parse("rootsys --type A3").unwrap()).unwrap();
        assert_eq!(out.json["rho"], "(1 3)(2)");
        assert_eq!(out.json["positive_roots"].as_array().unwrap().len(), 6);
        let out = run(&parse("constants --type A3").unwrap()).unwrap();
        assert!(out.text.lines().any(|l| l.starts_with("N a1 a2 ")));
        assert_eq!(out.text.lines().filter(|l| l.starts_with("eps ")).count(), 12);
    }

    #[test]
    fn generator_command() {
        let out = run(&parse("generators --type A3 --ring gaussian-rationals --class a1 --param t=1+i").unwrap()).unwrap();
        assert!(out.success);
        assert_eq!(out.json["word"].as_array().unwrap().len(), 2);
        let err = run(&parse("generators --type A3 --ring gaussian-rationals --class a2 --param t=i").unwrap()).unwrap_err();
        assert_eq!(err.flag(), Some("--param"));
    }

    #[test]
    fn verify_exit_codes() {
        let ok = run(&parse("verify --suite tangent --type A3 --ring gaussian-rationals").unwrap()).unwrap();
        assert_eq!(ok.exit_code(), 0);
        let bad = run(&parse("verify --suite tangent --type A3 --ring gaussian-rationals --mutate").unwrap()).unwrap();
        assert_eq!(bad.exit_code(), 1);
    }
}

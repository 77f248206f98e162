//! Argument parsing and dispatch for the `rbalg` binary.
//!
//! Every command produces a [`RunReport`]. Its status decides the exit code:
//! 0 for pass, 1 for a failed mathematical check (with witnesses), 2 for bad
//! input or an unsupported request.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use rbalg::catalog::{self, ClassicalFamily};
use rbalg::cohomology::{self, Bimodule, FirstCohomology, Representation};
use rbalg::decomposition::{self, Decomposition};
use rbalg::json as js;
use rbalg::post;
use rbalg::rota_baxter::{self as rb, RbOperator, DEFAULT_SEARCH_BUDGET};
use rbalg::{Algebra, Error, FieldSpec, Kind, Law, Report, Scalar};

#[derive(Debug, Parser)]
#[command(name = "rbalg", version, about = "Exact checks for Rota-Baxter operators, post-structures and decompositions")]
pub struct Cli {
    /// Print the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Field for catalog algebras: `Q` or `Fp:<p>`.
    #[arg(long, global = true, default_value = "Q")]
    pub field: String,
    /// Candidate budget for exhaustive search.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Optional features to enable, e.g. `d4`.
    #[arg(long, global = true, value_delimiter = ',')]
    pub features: Vec<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Flavor {
    Lie,
    Assoc,
}

#[derive(Debug, clap::Args)]
pub struct RbArgs {
    /// Catalog name or path to an algebra JSON file.
    #[arg(long)]
    pub algebra: String,
    /// Path to an operator JSON file, or `zero` / `neg-id`.
    #[arg(long)]
    pub rb: String,
    /// Weight; overrides the weight stored in the operator file.
    #[arg(long)]
    pub weight: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List registered catalog algebras with their dimensions.
    Catalog,
    /// Invariant fingerprint of an algebra.
    Fingerprint {
        #[arg(long)]
        algebra: String,
    },
    /// Check the law of the algebra's declared kind.
    VerifyAlgebra {
        #[arg(long)]
        algebra: String,
    },
    /// Check the Rota-Baxter identity and the homomorphism property.
    VerifyRb(RbArgs),
    /// Print the algebra induced by a Rota-Baxter operator.
    Induce(RbArgs),
    /// Build the tower of induced algebras.
    Tower {
        #[command(flatten)]
        rb: RbArgs,
        #[arg(long, default_value_t = 1)]
        steps: usize,
    },
    /// Enumerate all Rota-Baxter operators over a prime field.
    SearchRb {
        #[arg(long)]
        algebra: String,
        #[arg(long, default_value = "1")]
        weight: String,
    },
    /// Check the post-Lie axioms of a structure file.
    VerifyPostLie {
        #[arg(long)]
        input: PathBuf,
    },
    /// Check the post-associative axioms of a structure file.
    VerifyPostAssoc {
        #[arg(long)]
        input: PathBuf,
    },
    /// Post-structure induced by a weight-1 Rota-Baxter operator.
    FromRb {
        #[command(flatten)]
        rb: RbArgs,
        #[arg(long, value_enum, default_value = "assoc")]
        flavor: Flavor,
    },
    /// Recover `R(x) = x ≻ 1` from a post-associative structure.
    ExtractRb {
        #[arg(long)]
        input: PathBuf,
    },
    /// Commutator descent of a post-associative structure.
    Descend {
        #[arg(long)]
        input: PathBuf,
    },
    /// First cohomology of a module or bimodule.
    H1 {
        #[arg(long, value_enum)]
        flavor: Flavor,
        /// Catalog name or algebra file, used with `--module`.
        #[arg(long)]
        algebra: Option<String>,
        /// `trivial`, `adjoint` or `natural` (Lie); `regular` (assoc).
        #[arg(long)]
        module: Option<String>,
        /// Representation or bimodule JSON file.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Matrix file for a map to test as a cocycle.
        #[arg(long)]
        cocycle: Option<PathBuf>,
    },
    /// Decomposition checks and named instances.
    #[command(subcommand)]
    Decompose(DecomposeCommand),
}

#[derive(Debug, Subcommand)]
pub enum DecomposeCommand {
    /// Sum, properness and directness of a decomposition file.
    Verify {
        #[arg(long)]
        input: PathBuf,
    },
    /// A named decomposition of so(7) or so(8).
    Instance { name: String },
    /// The sl_n + φ(sl_n) decomposition of sl_n ⋉ V(n).
    Counterexample {
        #[arg(long)]
        n: usize,
    },
    /// Nilpotency of the components and the ambient algebra.
    Nilsum {
        #[arg(long)]
        input: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub verb: String,
    pub status: Status,
    pub payload: Value,
    pub witnesses: Vec<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl RunReport {
    fn pass(verb: &str, payload: Value) -> Self {
        RunReport {
            verb: verb.to_string(),
            status: Status::Pass,
            payload,
            witnesses: Vec::new(),
            error: None,
        }
    }

    fn checked(verb: &str, payload: Value, witnesses: Vec<Value>) -> Self {
        let status = if witnesses.is_empty() { Status::Pass } else { Status::Fail };
        RunReport {
            verb: verb.to_string(),
            status,
            payload,
            witnesses,
            error: None,
        }
    }

    fn from_report(verb: &str, payload: Value, report: &Report) -> Self {
        RunReport::checked(verb, payload, witnesses(report))
    }

    fn error(verb: &str, err: &Error) -> Self {
        RunReport {
            verb: verb.to_string(),
            status: Status::Error,
            payload: Value::Null,
            witnesses: Vec::new(),
            error: Some(err.to_string()),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.status {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let status = match self.status {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Error => "ERROR",
        };
        let mut out = format!("{}: {status}\n", self.verb);
        if let Some(e) = &self.error {
            let _ = writeln!(out, "  error: {e}");
        }
        if let Value::Object(map) = &self.payload {
            for (k, v) in map {
                let _ = writeln!(out, "  {k}: {}", compact(v));
            }
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "  witness: {}", compact(w));
        }
        out
    }
}

fn compact(v: &Value) -> String {
    const LIMIT: usize = 400;
    let s = v.to_string();
    if s.len() > LIMIT {
        let cut = (0..=LIMIT).rev().find(|&i| s.is_char_boundary(i)).unwrap_or(0);
        format!("{}... ({} bytes, use --json)", &s[..cut], s.len())
    } else {
        s
    }
}

fn witnesses(report: &Report) -> Vec<Value> {
    report.violations.iter().map(|v| serde_json::to_value(v).expect("violation serializes")).collect()
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable payload")
}

/// Parsed global options shared by all commands.
struct Context {
    field: FieldSpec,
    budget: u64,
    features: Vec<String>,
}

const KNOWN_FEATURES: [&str; 1] = ["d4"];

pub fn dispatch(cli: &Cli) -> RunReport {
    let verb = verb_name(&cli.command);
    match run(cli, &verb) {
        Ok(report) => report,
        Err(e) => failure_from_error(&verb, e),
    }
}

/// Errors that carry a mathematical witness become failures, the rest are errors.
fn failure_from_error(verb: &str, e: Error) -> RunReport {
    let witness = match &e {
        Error::NotRotaBaxter(v) | Error::NotCocycle(v) | Error::NotRbDerived(v) => Some(to_value(v.as_ref())),
        Error::TowerFailure { level, reason } => Some(json!({"level": level, "reason": reason})),
        _ => None,
    };
    match witness {
        Some(w) => RunReport {
            verb: verb.to_string(),
            status: Status::Fail,
            payload: json!({ "reason": e.to_string() }),
            witnesses: vec![w],
            error: None,
        },
        None => RunReport::error(verb, &e),
    }
}

fn verb_name(c: &Command) -> String {
    match c {
        Command::Catalog => "catalog",
        Command::Fingerprint { .. } => "fingerprint",
        Command::VerifyAlgebra { .. } => "verify-algebra",
        Command::VerifyRb(_) => "verify-rb",
        Command::Induce(_) => "induce",
        Command::Tower { .. } => "tower",
        Command::SearchRb { .. } => "search-rb",
        Command::VerifyPostLie { .. } => "verify-post-lie",
        Command::VerifyPostAssoc { .. } => "verify-post-assoc",
        Command::FromRb { .. } => "from-rb",
        Command::ExtractRb { .. } => "extract-rb",
        Command::Descend { .. } => "descend",
        Command::H1 { .. } => "h1",
        Command::Decompose(DecomposeCommand::Verify { .. }) => "decompose verify",
        Command::Decompose(DecomposeCommand::Instance { .. }) => "decompose instance",
        Command::Decompose(DecomposeCommand::Counterexample { .. }) => "decompose counterexample",
        Command::Decompose(DecomposeCommand::Nilsum { .. }) => "decompose nilsum",
    }
    .to_string()
}

fn run(cli: &Cli, verb: &str) -> rbalg::Result<RunReport> {
    let field: FieldSpec = cli.field.parse()?;
    for f in &cli.features {
        if !KNOWN_FEATURES.contains(&f.as_str()) {
            return Err(Error::Parse(format!("unknown feature {f:?}")));
        }
    }
    let ctx = Context {
        field,
        budget: cli.budget.unwrap_or(DEFAULT_SEARCH_BUDGET),
        features: cli.features.clone(),
    };
    match &cli.command {
        Command::Catalog => {
            let list: Vec<Value> = catalog::catalog_list().into_iter().map(|(name, dim)| json!({"name": name, "dim": dim})).collect();
            Ok(RunReport::pass(verb, json!({ "algebras": list })))
        }
        Command::Fingerprint { algebra } => {
            let a = load_algebra(algebra, ctx.field)?;
            Ok(RunReport::pass(verb, json!({ "kind": js::kind_name(a.kind()), "fingerprint": to_value(&a.fingerprint()) })))
        }
        Command::VerifyAlgebra { algebra } => verify_algebra(verb, algebra, &ctx),
        Command::VerifyRb(args) => {
            let (a, r) = load_rb(args, &ctx)?;
            let report = rb::verify_rb(&a, &r)?;
            let report = if report.pass() { report.merge(rb::check_rb_homomorphisms(&a, &r)?) } else { report };
            let payload = json!({ "dim": a.dim(), "weight": r.weight().to_fraction_string(), "rota_baxter": report.pass() });
            Ok(RunReport::from_report(verb, payload, &report))
        }
        Command::Induce(args) => {
            let (a, r) = load_rb(args, &ctx)?;
            let induced = rb::induced_algebra(&a, &r)?;
            Ok(RunReport::pass(verb, json!({ "algebra": to_value(&js::algebra_to_json(&induced)) })))
        }
        Command::Tower { rb: args, steps } => tower(verb, args, *steps, &ctx),
        Command::SearchRb { algebra, weight } => {
            let a = load_algebra(algebra, ctx.field)?;
            let w = a.field().parse_scalar(weight)?;
            let found = rb::search_rb_exhaustive(&a, &w, ctx.budget)?;
            let spectrum = found.iter().filter(|r| rb::spectrum_check(r)).count();
            let payload = json!({
                "count": found.len(),
                "spectrum_in_0_minus1": spectrum,
                "operators": found.iter().map(|r| to_value(&js::rb_to_json(r))).collect::<Vec<_>>(),
            });
            Ok(RunReport::pass(verb, payload))
        }
        Command::VerifyPostLie { input } => {
            let p = js::post_lie_from_json(&read_json(input)?)?;
            let report = p.verify();
            Ok(RunReport::from_report(verb, json!({ "dim": p.dim(), "post_lie": report.pass() }), &report))
        }
        Command::VerifyPostAssoc { input } => {
            let p = js::post_assoc_from_json(&read_json(input)?)?;
            let report = p.verify();
            let payload = json!({ "dim": p.dim(), "axioms": report.axioms.pass(), "postAs7": report.derived.pass() });
            let mut w = witnesses(&report.axioms);
            w.extend(witnesses(&report.derived));
            Ok(RunReport::checked(verb, payload, w))
        }
        Command::FromRb { rb: args, flavor } => {
            let (a, r) = load_rb(args, &ctx)?;
            let payload = match flavor {
                Flavor::Assoc => to_value(&js::post_assoc_to_json(&post::from_rb_assoc(&a, &r)?)),
                Flavor::Lie => {
                    let n = if a.kind() == Kind::Associative { a.commutator_algebra()? } else { a };
                    to_value(&js::post_lie_to_json(&post::from_rb_lie(&n, &r)?))
                }
            };
            Ok(RunReport::pass(verb, json!({ "structure": payload })))
        }
        Command::ExtractRb { input } => {
            let p = js::post_assoc_from_json(&read_json(input)?)?;
            let r = post::extract_rb(&p)?;
            Ok(RunReport::pass(verb, json!({ "rb": to_value(&js::rb_to_json(&r)) })))
        }
        Command::Descend { input } => {
            let p = js::post_assoc_from_json(&read_json(input)?)?;
            let l = post::commutator_descent(&p)?;
            Ok(RunReport::pass(verb, json!({ "structure": to_value(&js::post_lie_to_json(&l)) })))
        }
        Command::H1 {
            flavor,
            algebra,
            module,
            input,
            cocycle,
        } => h1(verb, *flavor, algebra.as_deref(), module.as_deref(), input.as_deref(), cocycle.as_deref(), &ctx),
        Command::Decompose(d) => decompose(verb, d, &ctx),
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> rbalg::Result<T> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(serde_json::from_str(&text)?)
}

fn is_file(arg: &str) -> bool {
    Path::new(arg).is_file()
}

/// A catalog name, or a JSON file whose declared kind is re-verified.
fn load_algebra(arg: &str, field: FieldSpec) -> rbalg::Result<Algebra> {
    if is_file(arg) {
        js::algebra_from_json(&read_json(Path::new(arg))?)
    } else {
        catalog::by_name(arg, field)
    }
}

fn verify_algebra(verb: &str, arg: &str, ctx: &Context) -> rbalg::Result<RunReport> {
    let (product, kind) = if is_file(arg) {
        let j: js::AlgebraJson = read_json(Path::new(arg))?;
        let field: FieldSpec = j.field.parse()?;
        (js::tensor_from_json(field, j.dim, &j.sc)?, js::parse_kind(&j.kind)?)
    } else {
        let a = catalog::by_name(arg, ctx.field)?;
        (a.product().clone(), a.kind())
    };
    let report = match kind {
        Kind::Associative => product.check_law(Law::Associativity),
        Kind::Lie => product.check_law(Law::Lie),
        Kind::General => Report::default(),
    };
    let payload = json!({ "dim": product.dim(), "field": product.field().to_string(), "kind": js::kind_name(kind) });
    Ok(RunReport::from_report(verb, payload, &report))
}

fn load_rb(args: &RbArgs, ctx: &Context) -> rbalg::Result<(Algebra, RbOperator)> {
    let a = load_algebra(&args.algebra, ctx.field)?;
    let field = a.field();
    let weight = args.weight.as_deref().map(|w| field.parse_scalar(w)).transpose()?;
    let r = match args.rb.as_str() {
        "zero" => RbOperator::zero(field, a.dim(), weight.unwrap_or_else(|| field.one())),
        "neg-id" => RbOperator::negative_weight_identity(field, a.dim(), weight.unwrap_or_else(|| field.one())),
        path => {
            let value: Value = read_json(Path::new(path))?;
            let stored = if value.get("matrix").is_some() {
                js::rb_from_json(&serde_json::from_value(value)?)?
            } else {
                RbOperator::new(js::matrix_from_json(&serde_json::from_value(value)?)?, field.one())?
            };
            match weight {
                Some(w) => RbOperator::new(stored.matrix().clone(), w)?,
                None => stored,
            }
        }
    };
    Ok((a, r))
}

fn tower(verb: &str, args: &RbArgs, steps: usize, ctx: &Context) -> rbalg::Result<RunReport> {
    let (a, r) = load_rb(args, ctx)?;
    let t = rb::tower(&a, &r, steps)?;
    let mut report = Report::default();
    if r.weight().is_one() {
        for i in 1..=steps {
            report = report.merge(rb::kernel_chain(&t, i)?);
        }
    }
    let payload = json!({
        "steps": steps,
        "kernel_chain_checked": r.weight().is_one(),
        "levels": t.levels.iter().map(|l| to_value(&js::algebra_to_json(l))).collect::<Vec<_>>(),
    });
    Ok(RunReport::from_report(verb, payload, &report))
}

fn natural_representation(name: &str, field: FieldSpec) -> rbalg::Result<Representation> {
    let unknown = || Error::Unsupported(format!("no natural module registered for {name:?}"));
    let (head, n) = name.split_once(':').ok_or_else(unknown)?;
    let n: usize = n.parse().map_err(|_| unknown())?;
    let family = match head {
        "gl" => ClassicalFamily::Gl,
        "sl" => ClassicalFamily::Sl,
        "so" => ClassicalFamily::So,
        "sp" => ClassicalFamily::Sp,
        _ => return Err(unknown()),
    };
    let (mats, _) = catalog::classical_matrices(family, n, field)?;
    let size = mats.first().map_or(0, |m| m.rows());
    Representation::new(catalog::make_classical_lie(family, n, field)?, size, mats)
}

fn cohomology_payload(c: &FirstCohomology) -> Value {
    json!({ "z1_dim": c.z1.dim(), "b1_dim": c.b1.dim(), "h1_dim": c.h1_dim() })
}

fn h1(
    verb: &str,
    flavor: Flavor,
    algebra: Option<&str>,
    module: Option<&str>,
    input: Option<&Path>,
    cocycle: Option<&Path>,
    ctx: &Context,
) -> rbalg::Result<RunReport> {
    let map = cocycle.map(|p| js::cocycle_from_json(&read_json(p)?)).transpose()?;
    match flavor {
        Flavor::Lie => {
            let rep = match (input, algebra) {
                (Some(p), _) => js::representation_from_json(&read_json(p)?)?,
                (None, Some(a)) => match module.unwrap_or("adjoint") {
                    "trivial" => Representation::trivial(&load_algebra(a, ctx.field)?, 1)?,
                    "adjoint" => Representation::adjoint(&load_algebra(a, ctx.field)?)?,
                    "natural" => natural_representation(a, ctx.field)?,
                    other => return Err(Error::Parse(format!("unknown Lie module {other:?}"))),
                },
                (None, None) => return Err(Error::Parse("h1 needs --input or --algebra".into())),
            };
            let c = cohomology::z1_b1_lie(&rep);
            let mut payload = cohomology_payload(&c);
            let mut report = Report::default();
            if let Some(d) = map {
                report = rep.cocycle_report(&d)?;
                if report.pass() && rep.alg.field().is_rationals() && rep.alg.is_semisimple()? {
                    let m = cohomology::whitehead_split(&rep, &d)?;
                    payload["whitehead_m"] = json!(m.iter().map(Scalar::to_fraction_string).collect::<Vec<_>>());
                }
            }
            Ok(RunReport::from_report(verb, payload, &report))
        }
        Flavor::Assoc => {
            let bim = match (input, algebra) {
                (Some(p), _) => js::bimodule_from_json(&read_json(p)?)?,
                (None, Some(a)) => match module.unwrap_or("regular") {
                    "regular" => Bimodule::regular(&load_algebra(a, ctx.field)?)?,
                    other => return Err(Error::Parse(format!("unknown bimodule {other:?}"))),
                },
                (None, None) => return Err(Error::Parse("h1 needs --input or --algebra".into())),
            };
            let c = cohomology::z1_b1_assoc(&bim);
            let report = match map {
                Some(d) => bim.cocycle_report(&d)?,
                None => Report::default(),
            };
            Ok(RunReport::from_report(verb, cohomology_payload(&c), &report))
        }
    }
}

fn decomposition_payload(d: &Decomposition) -> rbalg::Result<(Value, rbalg::decomposition::DecompositionReport)> {
    let r = d.verify()?;
    let payload = json!({
        "ambient_dim": d.ambient.dim(),
        "s1_dim": d.s1.dim(),
        "s2_dim": d.s2.dim(),
        "intersection_dim": r.intersection.dim(),
        "is_sum": r.is_sum,
        "is_proper": r.is_proper,
        "is_direct": r.is_direct,
    });
    Ok((payload, r))
}

fn decompose(verb: &str, cmd: &DecomposeCommand, ctx: &Context) -> rbalg::Result<RunReport> {
    match cmd {
        DecomposeCommand::Verify { input } => {
            let d = js::decomposition_from_json(&read_json(input)?)?;
            let (payload, r) = decomposition_payload(&d)?;
            let mut w = Vec::new();
            if !r.is_sum {
                let sum = d.s1.sum(&d.s2)?;
                w.push(json!({"check": "is_sum", "sum_dim": sum.dim(), "ambient_dim": d.ambient.dim()}));
            }
            Ok(RunReport::checked(verb, payload, w))
        }
        DecomposeCommand::Instance { name } => {
            if name.starts_with("D4") && !ctx.features.iter().any(|f| f == "d4") {
                return Err(Error::FeatureDisabled(name.clone()));
            }
            let d = decomposition::onishchik_instance(name)?;
            let (mut payload, r) = decomposition_payload(&d)?;
            let (c1, c2) = d.classify_components()?;
            let inter = d.ambient.restrict(&r.intersection)?;
            payload["name"] = json!(name);
            payload["components_semisimple"] = json!([c1.semisimple, c2.semisimple]);
            payload["intersection_fingerprint"] = to_value(&inter.fingerprint().invariant_part());
            let mut w = Vec::new();
            for (check, ok) in [("is_sum", r.is_sum), ("is_proper", r.is_proper)] {
                if !ok {
                    w.push(json!({ "check": check }));
                }
            }
            Ok(RunReport::checked(verb, payload, w))
        }
        DecomposeCommand::Counterexample { n } => {
            let (_, ad, phi) = decomposition::counterexample_maps(*n)?;
            let d = decomposition::counterexample(*n)?;
            let (mut payload, r) = decomposition_payload(&d)?;
            let (c1, c2) = d.classify_components()?;
            let perfect = d.ambient.is_perfect_lie()?;
            let semisimple = d.ambient.is_semisimple()?;
            let ad_sq_zero = ad.mul(&ad)?.is_zero();
            let automorphism = d.ambient.homomorphism_violations(&d.ambient, &phi, "automorphism").is_empty();
            payload["n"] = json!(n);
            payload["ad_x_squared_zero"] = json!(ad_sq_zero);
            payload["phi_automorphism"] = json!(automorphism);
            payload["components_semisimple"] = json!([c1.semisimple, c2.semisimple]);
            payload["ambient_perfect"] = json!(perfect);
            payload["ambient_semisimple"] = json!(semisimple);
            let expected = [
                ("is_sum", r.is_sum),
                ("ad_x_squared_zero", ad_sq_zero),
                ("phi_automorphism", automorphism),
                ("components_semisimple", c1.semisimple == Some(true) && c2.semisimple == Some(true)),
                ("ambient_perfect", perfect),
                ("ambient_not_semisimple", !semisimple),
            ];
            let w = expected.iter().filter(|(_, ok)| !ok).map(|(c, _)| json!({ "check": c })).collect();
            Ok(RunReport::checked(verb, payload, w))
        }
        DecomposeCommand::Nilsum { input } => {
            let d = js::decomposition_from_json(&read_json(input)?)?;
            let n = d.nilpotent_sum_check()?;
            let w = if n.alarm { vec![json!({ "check": "kegel", "verdicts": to_value(&n) })] } else { Vec::new() };
            Ok(RunReport::checked(verb, to_value(&n), w))
        }
    }
}

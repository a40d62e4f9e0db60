//! Command-line front end. JSON in (files or stdin), JSON out.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 budget exceeded.

use crate::complex::{minimal_prime_candidates_with, CandidateOptions, Minimality, SimplicialComplex};
use crate::ideals::{
    dim_via_jacobian, eta_parameterization, i_delta_gens, j_delta_gens, k_delta_gens, l_gens,
    l_gens_in_s, q_delta_gens, segre_margin_gens, segre_parameterization, sigma_parameterization,
    IdealError, IdealSpec, QMethod, RingContext,
};
use crate::io::{
    complex_from_json, complex_to_json, ideal_from_json, ideal_to_json, parse_face, parse_facets,
    parse_shape, table_from_json, table_to_json, IoError,
};
use crate::poly::{
    buchberger, intersect, radical_member, saturate, Budget, PolyError, Polynomial, TermOrder,
};
use crate::table::{Shape, Table, TableError};
use crate::verify::{run_all, run_check_with, CheckOptions, Status};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use thiserror::Error;

#[derive(Debug, Parser)]
#[command(name = "margalg", version, about = "Independence ideals of multi-way contingency tables")]
pub struct Cli {
    /// Step budget for Gröbner computations (overrides MARGALG_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Margin table A_J of a table.
    #[command(visible_alias = "marg")]
    Margins {
        #[arg(long)]
        table: String,
        /// Face as comma-separated 1-based axes; empty for the grand total.
        #[arg(long, allow_hyphen_values = true)]
        face: String,
    },
    /// Complete independence, and Δ-independence when a complex is given.
    Indep {
        #[arg(long)]
        table: String,
        #[command(flatten)]
        complex: ComplexArgs,
    },
    /// Split a table into its independent part and a zero-margin remainder.
    Decompose {
        #[arg(long)]
        table: String,
        /// Use the unnormalized product of one-way margins.
        #[arg(long)]
        strict_statcor: bool,
    },
    /// The complex of faces on which the remainder has zero margins.
    Detect {
        #[arg(long)]
        table: String,
    },
    /// Generators of a named ideal.
    Gens(GensArgs),
    /// Reduced Gröbner basis of an ideal.
    Gb {
        #[arg(long)]
        ideal: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
        order: OrderArg,
    },
    /// Ideal (or radical) membership of a polynomial.
    Member {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
        #[arg(long)]
        radical: bool,
    },
    /// Saturation I : f^∞.
    Saturate {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        poly: String,
    },
    /// Intersection of two ideals in the same ring.
    Intersect {
        #[arg(long)]
        ideal: String,
        #[arg(long)]
        other: String,
    },
    /// Candidate minimal primes over I_Δ.
    MinPrimes {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        complex: ComplexArgs,
        /// Skip the pairwise containment test.
        #[arg(long)]
        no_minimality: bool,
    },
    /// Dimension of a parameterized image via the Jacobian rank.
    Dim {
        #[arg(long)]
        shape: String,
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long, value_enum)]
        kind: DimKind,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        facets_only: bool,
    },
    /// Run named checks; one JSON report per line.
    Verify {
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        check: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Attempt the full intersection in decomposition-4facet.
        #[arg(long)]
        full_intersection: bool,
    },
}

#[derive(Debug, Args)]
pub struct ComplexArgs {
    /// Complex JSON file, or `-` for stdin.
    #[arg(long, conflicts_with = "facets")]
    pub complex: Option<String>,
    /// Facets such as "1,2;1,3;2,3".
    #[arg(long)]
    pub facets: Option<String>,
}

#[derive(Debug, Args)]
pub struct GensArgs {
    #[arg(long, value_enum)]
    pub kind: GensKind,
    #[arg(long)]
    pub shape: String,
    #[command(flatten)]
    pub complex: ComplexArgs,
    /// Face for Segre and L.
    #[arg(long, allow_hyphen_values = true)]
    pub face: Option<String>,
    /// Build S_Δ on the facets only.
    #[arg(long)]
    pub facets_only: bool,
    /// Emit L in S_Δ instead of R.
    #[arg(long)]
    pub in_s: bool,
    /// Degree-capped lattice binomials for Q_Delta (not necessarily generating).
    #[arg(long)]
    pub degree_cap: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GensKind {
    #[value(name = "Segre")]
    Segre,
    #[value(name = "I_Delta")]
    IDelta,
    #[value(name = "L")]
    L,
    #[value(name = "K_Delta")]
    KDelta,
    #[value(name = "J_Delta")]
    JDelta,
    #[value(name = "Q_Delta")]
    QDelta,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OrderArg {
    Grevlex,
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum DimKind {
    /// σ_Δ: S_Δ → Y.
    Sigma,
    /// η_Δ: S_Δ → Y•.
    Eta,
    /// The Segre map R → Y.
    Segre,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Domain(String),
    #[error("{0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Budget(_) => 3,
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Poly(p) => p.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Ideal(i) => i.into(),
            other => CliError::Domain(other.to_string()),
        }
    }
}

impl From<TableError> for CliError {
    fn from(e: TableError) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(stderr, "{e}")
            } else {
                write!(stdout, "{e}")
            };
            return code;
        }
    };
    let budget = cli.budget.map(Budget::new).unwrap_or_else(Budget::from_env);
    let mut ctx = Ctx { stdin, stdout, stderr, budget };
    match execute(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

struct Ctx<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
    stderr: &'a mut dyn Write,
    budget: Budget,
}

impl Ctx<'_> {
    fn read_json(&mut self, source: &str) -> Result<Value, CliError> {
        let text = if source == "-" {
            let mut s = String::new();
            self.stdin
                .read_to_string(&mut s)
                .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
            s
        } else {
            std::fs::read_to_string(source).map_err(|e| CliError::Usage(format!("cannot read {source}: {e}")))?
        };
        serde_json::from_str(&text).map_err(|e| CliError::Domain(format!("malformed JSON in {source}: {e}")))
    }

    fn emit(&mut self, v: &Value) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(v).expect("values serialize");
        writeln!(self.stdout, "{text}").map_err(|e| CliError::Domain(e.to_string()))
    }

    fn table(&mut self, source: &str) -> Result<Table, CliError> {
        let v = self.read_json(source)?;
        Ok(table_from_json(&v)?)
    }

    fn ideal(&mut self, source: &str) -> Result<IdealSpec, CliError> {
        let v = self.read_json(source)?;
        Ok(ideal_from_json(&v)?)
    }

    fn complex(&mut self, args: &ComplexArgs, n: usize) -> Result<Option<SimplicialComplex>, CliError> {
        match (&args.complex, &args.facets) {
            (Some(src), _) => {
                let v = self.read_json(src)?;
                let c = complex_from_json(&v)?;
                if c.n() != n {
                    return Err(CliError::Domain(format!("complex on {} vertices, expected {n}", c.n())));
                }
                Ok(Some(c))
            }
            (None, Some(list)) => {
                let facets = parse_facets(list).map_err(|e| CliError::Usage(e.to_string()))?;
                SimplicialComplex::new(n, facets)
                    .map(Some)
                    .map_err(|e| CliError::Usage(e.to_string()))
            }
            (None, None) => Ok(None),
        }
    }

    fn require_complex(&mut self, args: &ComplexArgs, n: usize) -> Result<SimplicialComplex, CliError> {
        self.complex(args, n)?
            .ok_or_else(|| CliError::Usage("a complex is required (--complex FILE or --facets LIST)".into()))
    }
}

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn shape_arg(s: &str) -> Result<Shape, CliError> {
    parse_shape(s).map_err(usage)
}

fn parse_in(spec: &IdealSpec, src: &str) -> Result<Polynomial, CliError> {
    Polynomial::parse(spec.ring.ring(), src).map_err(|e| CliError::Usage(format!("--poly: {e}")))
}

fn execute(cmd: Command, ctx: &mut Ctx<'_>) -> Result<i32, CliError> {
    let budget = ctx.budget;
    match cmd {
        Command::Margins { table, face } => {
            let face = parse_face(&face).map_err(usage)?;
            let t = ctx.table(&table)?;
            let m = t.marginalize(&face)?;
            ctx.emit(&table_to_json(&m))?;
        }
        Command::Indep { table, complex } => {
            let t = ctx.table(&table)?;
            let c = ctx.complex(&complex, t.shape().rank())?;
            let mut out = json!({ "completely_independent": t.is_completely_independent() });
            if let Some(c) = c {
                out["delta_independent"] = json!(t.is_delta_independent(&c)?);
                out["complex"] = complex_to_json(&c);
            }
            ctx.emit(&out)?;
        }
        Command::Decompose { table, strict_statcor } => {
            let t = ctx.table(&table)?;
            let (i, z) = if strict_statcor { t.decompose_strict()? } else { t.decompose()? };
            ctx.emit(&json!({ "independent": table_to_json(&i), "remainder": table_to_json(&z) }))?;
        }
        Command::Detect { table } => {
            let t = ctx.table(&table)?;
            ctx.emit(&complex_to_json(&t.detect_complex()?))?;
        }
        Command::Gens(args) => gens(args, ctx)?,
        Command::Gb { ideal, order } => {
            let spec = ctx.ideal(&ideal)?;
            let ring = match order {
                OrderArg::Grevlex => spec.ring.ring().with_order(TermOrder::GrevLex),
                OrderArg::Lex => spec.ring.ring().with_order(TermOrder::Lex),
            };
            let gens = spec
                .generators
                .iter()
                .map(|g| g.with_ring(&ring))
                .collect::<Result<Vec<_>, _>>()?;
            let gb = buchberger(&ring, &gens, budget)?;
            let generators = gb
                .generators()
                .iter()
                .map(|g| g.with_ring(spec.ring.ring()))
                .collect::<Result<Vec<_>, _>>()?;
            let mut v = ideal_to_json(&IdealSpec::new(spec.name.clone(), spec.ring.clone(), generators));
            // Keep the order's display sequence.
            v["generators"] = json!(gb.generators().iter().map(|g| g.to_string()).collect::<Vec<_>>());
            ctx.emit(&v)?;
        }
        Command::Member { ideal, poly, radical } => {
            let spec = ctx.ideal(&ideal)?;
            let p = parse_in(&spec, &poly)?;
            if radical {
                let m = radical_member(&p, &spec.generators, budget)?;
                ctx.emit(&json!({ "radical_member": m }))?;
            } else {
                let gb = buchberger(spec.ring.ring(), &spec.generators, budget)?;
                let nf = gb.normal_form(&p)?;
                ctx.emit(&json!({ "member": nf.is_zero(), "normal_form": nf.to_string() }))?;
            }
        }
        Command::Saturate { ideal, poly } => {
            let spec = ctx.ideal(&ideal)?;
            let f = parse_in(&spec, &poly)?;
            let gens = saturate(&spec.generators, &f, budget)?;
            ctx.emit(&ideal_to_json(&IdealSpec::new(spec.name.clone(), spec.ring.clone(), gens)))?;
        }
        Command::Intersect { ideal, other } => {
            let a = ctx.ideal(&ideal)?;
            let b = ctx.ideal(&other)?;
            if !a.ring.ring().same_vars(b.ring.ring()) {
                return Err(CliError::Domain("ideals live in different rings".into()));
            }
            let gens = intersect(&a.generators, &b.generators, budget)?;
            ctx.emit(&ideal_to_json(&IdealSpec::new(a.name.clone(), a.ring.clone(), gens)))?;
        }
        Command::MinPrimes { shape, complex, no_minimality } => {
            let sh = shape_arg(&shape)?;
            let c = ctx.require_complex(&complex, sh.rank())?;
            let opts = CandidateOptions { check_minimality: !no_minimality, budget };
            let cands = minimal_prime_candidates_with(&sh, &c, opts)?;
            let out: Vec<Value> = cands
                .iter()
                .map(|cand| {
                    let mut v = serde_json::to_value(&cand.descriptor).expect("descriptor serializes");
                    v["minimal"] = match cand.minimality {
                        Minimality::Minimal => json!(true),
                        Minimality::NotMinimal { .. } => json!(false),
                        Minimality::Unchecked => Value::Null,
                    };
                    v["l_faces"] = json!(cand.l_faces.iter().map(|f| f.members().to_vec()).collect::<Vec<_>>());
                    v
                })
                .collect();
            ctx.emit(&json!({ "complex": complex_to_json(&c), "candidates": out }))?;
        }
        Command::Dim { shape, complex, kind, seed, facets_only } => {
            let sh = shape_arg(&shape)?;
            let param = match kind {
                DimKind::Segre => segre_parameterization(&sh).1,
                DimKind::Sigma | DimKind::Eta => {
                    let c = ctx.require_complex(&complex, sh.rank())?;
                    let s = if facets_only {
                        RingContext::s_delta_facets_only(&sh, &c)?
                    } else {
                        RingContext::s_delta(&sh, &c)?
                    };
                    match kind {
                        DimKind::Sigma => sigma_parameterization(&s).1,
                        _ => eta_parameterization(&s).1,
                    }
                }
            };
            ctx.emit(&json!({ "dimension": dim_via_jacobian(&param, seed), "seed": seed }))?;
        }
        Command::Verify { check, all, seed, full_intersection } => {
            let opts = CheckOptions { budget, seed, full_intersection };
            let reports = if all {
                run_all(opts)
            } else {
                let id = check.expect("clap requires --check without --all");
                vec![run_check_with(&id, opts).map_err(usage)?]
            };
            let mut code = 0;
            for r in &reports {
                writeln!(ctx.stdout, "{}", r.to_json_line()).map_err(|e| CliError::Domain(e.to_string()))?;
                let _ = writeln!(ctx.stderr, "{} {} in {:.3}s", r.id, r.status, r.elapsed.as_secs_f64());
                code = code.max(match r.status {
                    Status::Pass => 0,
                    Status::Fail => 1,
                    Status::BudgetExceeded => 3,
                });
            }
            return Ok(code);
        }
    }
    Ok(0)
}

fn gens(args: GensArgs, ctx: &mut Ctx<'_>) -> Result<(), CliError> {
    let sh = shape_arg(&args.shape)?;
    let face = args.face.as_deref().map(parse_face).transpose().map_err(usage)?;
    let need_face = || face.clone().ok_or_else(|| CliError::Usage("--face is required for this kind".into()));
    let s_ring = |ctx: &mut Ctx<'_>| -> Result<RingContext, CliError> {
        let c = ctx.require_complex(&args.complex, sh.rank())?;
        Ok(if args.facets_only {
            RingContext::s_delta_facets_only(&sh, &c)?
        } else {
            RingContext::s_delta(&sh, &c)?
        })
    };
    let mut extra = None;
    let spec = match args.kind {
        GensKind::Segre => segre_margin_gens(&sh, &need_face()?)?,
        GensKind::IDelta => {
            let c = ctx.require_complex(&args.complex, sh.rank())?;
            i_delta_gens(&sh, &c)?
        }
        GensKind::L if args.in_s => l_gens_in_s(&s_ring(ctx)?, &need_face()?)?,
        GensKind::L => l_gens(&sh, &need_face()?)?,
        GensKind::KDelta => {
            let (spec, counts) = k_delta_gens(&s_ring(ctx)?)?;
            extra = Some(json!({
                "variables": counts.variables, "raw": counts.raw,
                "minimal": counts.minimal, "dim_t": counts.dim_t,
            }));
            spec
        }
        GensKind::JDelta => j_delta_gens(&s_ring(ctx)?)?,
        GensKind::QDelta => {
            let method = args.degree_cap.map_or(QMethod::Elimination, QMethod::DegreeCap);
            q_delta_gens(&s_ring(ctx)?, method, ctx.budget)?
        }
    };
    let mut v = ideal_to_json(&spec);
    if let Some(counts) = extra {
        v["counts"] = counts;
    }
    if args.degree_cap.is_some() {
        v["generating"] = json!(false);
    }
    ctx.emit(&v)
}

/// Entry point used by the binary.
pub fn main_from_env() -> i32 {
    let stdin = &mut std::io::stdin().lock();
    let stdout = &mut std::io::stdout().lock();
    let stderr = &mut std::io::stderr().lock();
    run(std::env::args_os(), stdin, stdout, stderr)
}

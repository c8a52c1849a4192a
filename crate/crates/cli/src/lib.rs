//! Argument parsing and dispatch for the `lfk` binary. Every subcommand
//! produces a [`Report`] that is printed as one JSON document.

pub mod corpus;

use std::path::PathBuf;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use lfk_core::classify::{
    build_pencil, curvature_dichotomy, verify_log_decomposition, verify_model_a, verify_model_b,
    Branch, LogDecomposition,
};
use lfk_core::levi::{
    decompose, extract_holomorphic_sigma, is_integrable, levi_distribution, log_identity_check,
    primitive_real_part, tangent_to_levels,
};
use lfk_core::mirror::{
    common_real_factor, complexify_form, decomplexify_form, form_symmetry, mirror_form,
    symmetric_quotient,
};
use lfk_core::pencil::{
    axis, axis_first_integral_check, certify, k_constancy, member_integrability, pencil_condition,
    solve_theta_with, verify_theta, Pencil, SolverParams,
};
use lfk_core::projective::{
    binary_space, bidegree_check, descent_check, rational_integral_form, radial_check, residue_sum_check,
};
use lfk_core::{
    parse_form, parse_poly, parse_ratfun, poly_gcd, Bidegree, DForm, Error, Flavor, GaussRat,
    ParseError, Poly, RatFun, Report, VField, VarSpace, Verdict,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "lfk", version, about = "Exact checks for Levi-flat 1-forms and integrable pencils")]
pub struct Cli {
    /// Number of complex coordinates.
    #[arg(long, global = true, default_value_t = 1)]
    pub dim: usize,
    #[arg(long, global = true, value_enum, default_value_t = FlavorArg::Real)]
    pub flavor: FlavorArg,
    /// Number coordinates from 0 (z0, z1, ...).
    #[arg(long, global = true)]
    pub homogeneous: bool,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FlavorArg {
    /// Coordinates z and zb.
    Real,
    /// Coordinates z and w.
    Complexified,
}

#[derive(Subcommand, Debug, Serialize)]
#[serde(untagged)]
pub enum Cmd {
    /// Frobenius condition a /\ da = 0.
    CheckIntegrable(FormArg),
    /// eta, omega_sharp, the Levi distribution and a holomorphic sigma.
    LeviExtract(FormArg),
    /// Replace zb by w (or back with --inverse).
    Complexify(ExprArg),
    /// Conjugate coefficients and swap the two variable blocks.
    Mirror(ExprArg),
    /// df /\ sigma /\ conj(sigma) = 0.
    TangentLevels(TangentArgs),
    /// eta1 /\ d eta2 + eta2 /\ d eta1 = 0 and both members integrable.
    PencilCondition(PencilConditionArgs),
    /// Solve d eta_i = theta /\ eta_i within a degree-bounded ansatz.
    PencilTheta(PencilSolveArgs),
    /// Curvature of the connection form and the coefficient certificates.
    Curvature(PencilSolveArgs),
    /// Build the complexified pencil of a real form and report its curvature case.
    ClassifyDichotomy(DichotomyArgs),
    /// omega = h |psi|^2 Re(tau) with tau closed.
    VerifyModelA(ModelAArgs),
    /// omega = Re(kappa d rho) with the constancy condition.
    VerifyModelB(ModelBArgs),
    /// theta = sum lambda_j dF_j/F_j + d(G / prod F_j^k_j).
    VerifyLog(LogArgs),
    /// Radial, bidegree and residue conditions in homogeneous coordinates.
    ProjectiveCheck(ProjectiveArgs),
    /// Re(kappa d rho) from rho = F/G and binary forms R, S.
    RationalIntegral(RationalIntegralArgs),
    /// Single algebraic operations on parsed inputs.
    Algebra(AlgebraArgs),
    /// Logarithmic-derivative identity for z2*dz1 - lambda*z1*dz2, lambda a negative integer.
    Identity(IdentityArgs),
    /// Run a directory of JSON cases.
    #[serde(skip)]
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand, Debug)]
pub enum CorpusAction {
    Run { dir: PathBuf },
}

#[derive(Args, Debug, Serialize)]
pub struct FormArg {
    #[arg(long)]
    pub form: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ExprArg {
    #[arg(long)]
    pub expr: String,
    #[arg(long)]
    pub inverse: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct TangentArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub sigma: String,
}

#[derive(Args, Debug, Serialize)]
pub struct PencilArgs {
    #[arg(long)]
    pub eta1: String,
    #[arg(long)]
    pub eta2: String,
}

#[derive(Args, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct PencilConditionArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub pencil: PencilArgs,
    /// Also check integrability of a*eta1 + b*eta2, given as "a,b".
    #[arg(long)]
    pub member: Option<String>,
    /// Also check dF /\ eta1 /\ eta2 = 0.
    #[arg(long)]
    pub first_integral: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraOp {
    /// Parse and print a
    Eval,
    /// gcd(a, b)
    Gcd,
    /// a / b, exact
    ExactDiv,
    /// Bidegree of a
    Bidegree,
    /// a /\ b
    Wedge,
    /// Contraction of a by the complex radial field
    ContractRadial,
    /// Symmetric numerator and denominator for a/b
    SymmetricQuotient,
    /// Real factor of a
    CommonRealFactor,
    /// a with common real factors of its coefficients removed
    PrimitiveRealPart,
}

#[derive(Args, Debug, Serialize)]
pub struct AlgebraArgs {
    #[arg(long, value_enum)]
    pub op: AlgebraOp,
    #[arg(long)]
    pub a: String,
    #[arg(long)]
    pub b: Option<String>,
}

#[derive(Args, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub struct SolverArgs {
    /// Largest numerator degree in the ansatz.
    #[arg(long, env = "LFK_DEGREE_BOUND")]
    pub degree_bound: Option<u32>,
    /// Fixed denominator of theta.
    #[arg(long)]
    pub denominator: Option<String>,
    /// Attempts with a raised bound when no solution exists.
    #[arg(long, default_value_t = 2)]
    pub retries: u32,
}

#[derive(Args, Debug, Serialize)]
pub struct PencilSolveArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub pencil: PencilArgs,
    #[command(flatten)]
    #[serde(flatten)]
    pub solver: SolverArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct DichotomyArgs {
    #[arg(long)]
    pub form: String,
    #[command(flatten)]
    #[serde(flatten)]
    pub solver: SolverArgs,
}

#[derive(Args, Debug, Serialize)]
pub struct ModelAArgs {
    #[arg(long)]
    pub form: String,
    #[arg(long)]
    pub tau: String,
    #[arg(long)]
    pub psi: String,
    #[arg(long, default_value = "1")]
    pub h: String,
}

#[derive(Args, Debug, Serialize)]
pub struct ModelBArgs {
    #[arg(long)]
    pub form: String,
    #[arg(long)]
    pub kappa: String,
    #[arg(long)]
    pub rho: String,
}

#[derive(Args, Debug, Serialize)]
pub struct LogParts {
    /// Comma-separated residues.
    #[arg(long)]
    pub residues: Option<String>,
    /// Comma-separated pole factors.
    #[arg(long)]
    pub factors: Option<String>,
    /// Numerator of the exact part.
    #[arg(long, default_value = "0")]
    pub exact: String,
    /// Comma-separated pole orders of the exact part.
    #[arg(long)]
    pub exponents: Option<String>,
}

#[derive(Args, Debug, Serialize)]
pub struct LogArgs {
    #[arg(long)]
    pub theta: String,
    #[command(flatten)]
    #[serde(flatten)]
    pub parts: LogParts,
}

#[derive(Args, Debug, Serialize)]
#[command(group(ArgGroup::new("mode").required(true).args(["form", "eta", "factors"])))]
pub struct ProjectiveArgs {
    /// Real form: full descent check with d inferred.
    #[arg(long)]
    pub form: Option<String>,
    /// Type (1,0) form: radial check, plus bidegree when --d is given.
    #[arg(long)]
    pub eta: Option<String>,
    #[arg(long, requires = "eta")]
    pub d: Option<u32>,
    #[command(flatten)]
    #[serde(flatten)]
    pub parts: LogParts,
}

#[derive(Args, Debug, Serialize)]
pub struct RationalIntegralArgs {
    #[arg(long)]
    pub f: String,
    #[arg(long)]
    pub g: String,
    /// Binary form in u1, u2.
    #[arg(long)]
    pub r: String,
    /// Binary form in u1, u2.
    #[arg(long)]
    pub s: String,
    /// Divide out a common real factor of the coefficients.
    #[arg(long)]
    pub cancel: bool,
}

#[derive(Args, Debug, Serialize)]
pub struct IdentityArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub lambda: i64,
}

/// Result of one invocation.
#[derive(Clone, Debug)]
pub struct Run {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
    pub json: Option<Value>,
}

enum Failure {
    Parse { flag: String, err: ParseError },
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = std::result::Result<Report, Failure>;

struct Ctx {
    space: VarSpace,
}

impl Ctx {
    fn parse<T>(
        &self,
        flag: &str,
        text: &str,
        space: &VarSpace,
        f: fn(&str, &VarSpace) -> Result<T, ParseError>,
    ) -> Result<T, Failure> {
        f(text, space).map_err(|err| Failure::Parse {
            flag: flag.to_string(),
            err,
        })
    }

    fn form(&self, flag: &str, text: &str) -> Result<DForm, Failure> {
        self.parse(flag, text, &self.space, parse_form)
    }

    fn fun(&self, flag: &str, text: &str) -> Result<RatFun, Failure> {
        self.parse(flag, text, &self.space, parse_ratfun)
    }

    fn poly(&self, flag: &str, text: &str) -> Result<Poly, Failure> {
        self.parse(flag, text, &self.space, parse_poly)
    }

    fn list<T>(&self, text: &str, item: impl Fn(&str) -> Result<T, Failure>) -> Result<Vec<T>, Failure> {
        if text.trim().is_empty() {
            return Ok(Vec::new());
        }
        text.split(',').map(|s| item(s.trim())).collect()
    }

    fn constant(&self, flag: &str, text: &str) -> Result<GaussRat, Failure> {
        let f = self.fun(flag, text)?;
        f.constant_value().ok_or_else(|| Failure::Parse {
            flag: flag.to_string(),
            err: ParseError {
                column: 1,
                message: format!("expected a constant, found {}", f),
            },
        })
    }

    fn log_parts(&self, parts: &LogParts) -> Result<LogDecomposition, Failure> {
        let factors = self.list(parts.factors.as_deref().unwrap_or(""), |s| self.poly("factors", s))?;
        let residues = match &parts.residues {
            Some(r) => self.list(r, |s| self.constant("residues", s))?,
            None => vec![GaussRat::from_i64(0); factors.len()],
        };
        let exponents = match &parts.exponents {
            Some(e) => self.list(e, |s| {
                s.parse::<u32>().map_err(|e| Failure::Parse {
                    flag: "exponents".into(),
                    err: ParseError {
                        column: 1,
                        message: e.to_string(),
                    },
                })
            })?,
            None => vec![0; factors.len()],
        };
        Ok(LogDecomposition {
            residues,
            pole_factors: factors,
            exact_num: self.poly("exact", &parts.exact)?,
            exponents,
        })
    }

    fn solver(&self, s: &SolverArgs) -> Result<SolverParams, Failure> {
        Ok(SolverParams {
            degree_bound: s.degree_bound,
            denominator: s.denominator.as_deref().map(|d| self.poly("denominator", d)).transpose()?,
            retries: s.retries,
        })
    }
}

fn pencil_of(ctx: &Ctx, a: &PencilArgs) -> Result<Pencil, Failure> {
    Ok(Pencil::new(ctx.form("eta1", &a.eta1)?, ctx.form("eta2", &a.eta2)?)?)
}

fn algebra(ctx: &Ctx, a: &AlgebraArgs) -> Outcome {
    let mut r = Report::new();
    let b = || -> Result<&str, Failure> {
        a.b.as_deref()
            .ok_or_else(|| Error::Precondition("this operation needs --b".into()).into())
    };
    match a.op {
        AlgebraOp::Eval => {
            let f = ctx.form("a", &a.a)?;
            r.output("degree", f.degree()).output("result", f);
        }
        AlgebraOp::Gcd => {
            let (p, q) = (ctx.poly("a", &a.a)?, ctx.poly("b", b()?)?);
            let g = poly_gcd(&p, &q)?;
            let divides = |x: &Poly| g.is_zero() || x.exact_div(&g).is_ok();
            r.check_zero("divides_a", "gcd divides a", divides(&p), &g);
            r.check_zero("divides_b", "gcd divides b", divides(&q), &g);
            r.output("result", g);
        }
        AlgebraOp::ExactDiv => {
            let (p, q) = (ctx.poly("a", &a.a)?, ctx.poly("b", b()?)?);
            match p.exact_div(&q) {
                Ok(d) => {
                    r.pass("divisible", "b divides a");
                    r.output("result", d);
                }
                Err(Error::NotDivisible) => {
                    r.fail("divisible", "b divides a", format!("{} / {}", p, q));
                }
                Err(e) => return Err(e.into()),
            }
        }
        AlgebraOp::Bidegree => {
            let bd = match ctx.poly("a", &a.a)?.bidegree()? {
                Bidegree::Pure(p, q) => format!("({}, {})", p, q),
                Bidegree::Mixed => "mixed".into(),
            };
            r.output("result", bd);
        }
        AlgebraOp::Wedge => {
            r.output("result", ctx.form("a", &a.a)?.wedge(&ctx.form("b", b()?)?)?);
        }
        AlgebraOp::ContractRadial => {
            let f = ctx.form("a", &a.a)?;
            r.output("result", f.contract(&VField::radial(ctx.space))?);
        }
        AlgebraOp::SymmetricQuotient => {
            let q = symmetric_quotient(&ctx.poly("a", &a.a)?, &ctx.poly("b", b()?)?)?;
            r.output("g_tilde", &q.g_tilde).output("h_tilde", &q.h_tilde);
            match &q.obstruction {
                Some(c) => {
                    r.info("rebalanced", format!("no square root of {} in Q(i)", c));
                    r.output("obstruction", c);
                }
                None => {
                    r.pass("rebalanced", "both parts (*)-symmetric");
                }
            }
        }
        AlgebraOp::CommonRealFactor => {
            let f = common_real_factor(&ctx.poly("a", &a.a)?)?;
            r.output("result", f.map_or_else(|| "none".to_string(), |f| f.to_string()));
        }
        AlgebraOp::PrimitiveRealPart => {
            let (f, removed) = primitive_real_part(&ctx.form("a", &a.a)?)?;
            r.output("result", f).output("removed", removed);
        }
    }
    Ok(r)
}

fn dispatch(ctx: &Ctx, cmd: &Cmd) -> Outcome {
    let mut r = Report::new();
    match cmd {
        Cmd::CheckIntegrable(a) => return Ok(is_integrable(&ctx.form("form", &a.form)?)?),
        Cmd::LeviExtract(a) => {
            let dec = decompose(&ctx.form("form", &a.form)?)?;
            r.output("eta", &dec.eta)
                .output("omega_sharp", &dec.omega_sharp)
                .output("levi", levi_distribution(&dec)?);
            match extract_holomorphic_sigma(&dec.eta) {
                Ok((phi, sigma)) => {
                    r.pass("holomorphic", "eta = phi * sigma with sigma holomorphic");
                    r.output("phi", phi).output("sigma", sigma);
                }
                Err(Error::NotHolomorphic { ratio }) => {
                    r.fail("holomorphic", "coefficient ratios of eta depend on z only", ratio);
                }
                Err(e) => return Err(e.into()),
            }
        }
        Cmd::Complexify(a) => {
            let e = ctx.form("expr", &a.expr)?;
            let out = if a.inverse {
                decomplexify_form(&e)?
            } else {
                complexify_form(&e)?
            };
            let sym = if a.inverse { &e } else { &out };
            r.output("star_symmetric", form_symmetry(sym).symmetric);
            r.output("result", out);
        }
        Cmd::Mirror(a) => {
            let e = ctx.form("expr", &a.expr)?;
            let m = mirror_form(&e);
            r.output("star_symmetric", m == e);
            r.output("result", m);
        }
        Cmd::TangentLevels(a) => {
            return Ok(tangent_to_levels(&ctx.fun("f", &a.f)?, &ctx.form("sigma", &a.sigma)?)?)
        }
        Cmd::PencilCondition(a) => {
            let (e1, e2) = (ctx.form("eta1", &a.pencil.eta1)?, ctx.form("eta2", &a.pencil.eta2)?);
            r = pencil_condition(&e1, &e2)?;
            if a.member.is_some() || a.first_integral.is_some() {
                let p = Pencil::new(e1, e2)?;
                if let Some(m) = &a.member {
                    let ab = ctx.list(m, |s| ctx.constant("member", s))?;
                    if ab.len() != 2 {
                        return Err(Error::Precondition("--member takes two coefficients".into()).into());
                    }
                    r.absorb("member", member_integrability(&p, &ab[0], &ab[1])?);
                }
                if let Some(f) = &a.first_integral {
                    r.absorb("first_integral", axis_first_integral_check(&ctx.fun("first-integral", f)?, &p)?);
                }
            }
        }
        Cmd::Algebra(a) => return algebra(ctx, a),
        Cmd::PencilTheta(a) => {
            let p = pencil_of(ctx, &a.pencil)?;
            let cert = solve_theta_with(&p, &ctx.solver(&a.solver)?)?;
            r.absorb("theta", verify_theta(&p, &cert.theta)?);
            r.info("kernel_dim", cert.kernel_dim.to_string());
            r.output("theta", &cert.theta)
                .output("curvature", &cert.curvature)
                .output("denominator", &cert.denominator)
                .output("degree_bound", cert.degree_bound);
        }
        Cmd::Curvature(a) => {
            let p = pencil_of(ctx, &a.pencil)?;
            let cert = certify(&p, &ctx.solver(&a.solver)?)?;
            r.absorb("theta", verify_theta(&p, &cert.theta)?);
            r.info("flat", cert.is_flat().to_string());
            r.output("theta", &cert.theta)
                .output("curvature", &cert.curvature)
                .output("axis", axis(&p)?);
            if let Some(alpha) = &cert.alpha {
                r.output("alpha", alpha);
            }
            if let Some((m1, m2)) = &cert.mu {
                r.output("mu1", m1).output("mu2", m2);
            }
            if let Some(k) = &cert.k {
                r.output("k1", &k.0).output("k2", &k.1);
                r.absorb("k", k_constancy(&cert.alpha_or_zero(), k, &p)?);
            }
        }
        Cmd::ClassifyDichotomy(a) => {
            let omega = ctx.form("form", &a.form)?;
            let d = curvature_dichotomy(&omega, &ctx.solver(&a.solver)?)?;
            let mut rep = d.report;
            let branch = match d.branch {
                Branch::ZeroCurvature => "zero_curvature",
                Branch::NonzeroCurvature => "nonzero_curvature",
            };
            rep.output("branch", branch)
                .output("eta_c", &d.pencil.eta_c)
                .output("phi", &d.pencil.phi)
                .output("sigma", &d.pencil.sigma);
            return Ok(rep);
        }
        Cmd::VerifyModelA(a) => {
            let omega = ctx.form("form", &a.form)?;
            let rep = verify_model_a(&omega, &ctx.form("tau", &a.tau)?, &ctx.poly("psi", &a.psi)?, &ctx.fun("h", &a.h)?)?;
            if rep.is_pass() {
                r = rep;
                let cp = build_pencil(&omega)?;
                r.pass("build_pencil", "complexified pencil is integrable");
                r.absorb("pencil", pencil_condition(&cp.pencil.eta1, &cp.pencil.eta2)?);
                return Ok(r);
            }
            return Ok(rep);
        }
        Cmd::VerifyModelB(a) => {
            return Ok(verify_model_b(
                &ctx.form("form", &a.form)?,
                &ctx.fun("kappa", &a.kappa)?,
                &ctx.fun("rho", &a.rho)?,
            )?)
        }
        Cmd::VerifyLog(a) => {
            let theta = ctx.form("theta", &a.theta)?;
            return Ok(verify_log_decomposition(&theta, &ctx.log_parts(&a.parts)?)?);
        }
        Cmd::ProjectiveCheck(a) => {
            if let Some(f) = &a.form {
                let (pf, rep) = descent_check(&ctx.form("form", f)?)?;
                r = rep;
                if let Some(pf) = pf {
                    r.output("d", pf.degree_d);
                }
            } else if let Some(e) = &a.eta {
                let eta = ctx.form("eta", e)?;
                r.absorb("radial", radial_check(&eta)?);
                if let Some(d) = a.d {
                    r.absorb("bidegree", bidegree_check(&eta, d)?);
                }
            } else {
                r = residue_sum_check(&ctx.log_parts(&a.parts)?)?;
            }
        }
        Cmd::RationalIntegral(a) => {
            let b = binary_space();
            let rr = ctx.parse("r", &a.r, &b, parse_poly)?;
            let ss = ctx.parse("s", &a.s, &b, parse_poly)?;
            let ex = rational_integral_form(&ctx.poly("f", &a.f)?, &ctx.poly("g", &a.g)?, &rr, &ss, a.cancel)?;
            r.absorb("integrable", is_integrable(&ex.omega)?);
            r.absorb("model_b", verify_model_b(&ex.omega, &ex.kappa, &ex.rho)?);
            let dec = decompose(&ex.omega)?;
            r.absorb("radial", radial_check(&dec.eta)?);
            r.absorb("bidegree", bidegree_check(&dec.eta, ex.d)?);
            let (_, desc) = descent_check(&ex.omega)?;
            r.absorb("descent", desc);
            r.output("omega", &ex.omega)
                .output("kappa", &ex.kappa)
                .output("rho", &ex.rho)
                .output("d", ex.d)
                .output("removed", &ex.removed);
        }
        Cmd::Identity(a) => return Ok(log_identity_check(a.lambda)?),
        Cmd::Corpus { .. } => unreachable!("corpus runs are dispatched separately"),
    }
    Ok(r)
}

fn command_name(argv: &[String]) -> String {
    let mut skip = false;
    for a in argv.iter().skip(1) {
        if skip {
            skip = false;
            continue;
        }
        if a == "--dim" || a == "--flavor" {
            skip = true;
        } else if !a.starts_with('-') {
            return a.clone();
        }
    }
    String::new()
}

fn exit_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail | Verdict::Error => EXIT_FAIL,
    }
}

fn render(command: &str, inputs: Value, rep: &Report, millis: u128) -> Value {
    let mut v = json!({ "command": command, "inputs": inputs });
    let body = serde_json::to_value(rep).expect("reports serialize");
    if let (Some(out), Value::Object(m)) = (v.as_object_mut(), body) {
        out.extend(m);
    }
    v["millis"] = json!(millis);
    v
}

fn finish(json: Value, code: i32) -> Run {
    Run {
        stdout: serde_json::to_string_pretty(&json).expect("json") + "\n",
        stderr: String::new(),
        code,
        json: Some(json),
    }
}

/// Run one command line (including the program name).
pub fn run<I, S>(argv: I) -> Run
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Run {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_PASS,
                    json: None,
                },
                _ => Run {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_UNSUPPORTED,
                    json: None,
                },
            };
        }
    };
    let command = command_name(&argv);
    if let Cmd::Corpus {
        action: CorpusAction::Run { dir },
    } = &cli.command
    {
        let start = Instant::now();
        let rep = corpus::run_dir(dir);
        let inputs = json!({ "dir": dir.display().to_string() });
        let code = exit_code(rep.verdict);
        return finish(render("corpus", inputs, &rep, start.elapsed().as_millis()), code);
    }
    if cli.dim == 0 {
        return Run {
            stdout: String::new(),
            stderr: "error: --dim must be at least 1\n".into(),
            code: EXIT_UNSUPPORTED,
            json: None,
        };
    }
    let flavor = match cli.flavor {
        FlavorArg::Real => Flavor::RealPaired,
        FlavorArg::Complexified => Flavor::Complexified,
    };
    let space = if cli.homogeneous {
        VarSpace::homogeneous(cli.dim, flavor)
    } else {
        VarSpace::new(cli.dim, flavor)
    };
    let mut inputs = serde_json::to_value(&cli.command).unwrap_or(Value::Null);
    if let Value::Object(m) = &mut inputs {
        m.insert("dim".into(), json!(cli.dim));
        m.insert("flavor".into(), json!(cli.flavor));
        m.insert("homogeneous".into(), json!(cli.homogeneous));
    }
    let start = Instant::now();
    let outcome = dispatch(&Ctx { space }, &cli.command);
    let millis = start.elapsed().as_millis();
    match outcome {
        Ok(rep) => {
            let code = exit_code(rep.verdict);
            finish(render(&command, inputs, &rep, millis), code)
        }
        Err(Failure::Core(e)) => {
            let rep = Report::error("error", &e);
            finish(render(&command, inputs, &rep, millis), EXIT_FAIL)
        }
        Err(Failure::Parse { flag, err }) => {
            let rep = Report::error("parse", format!("--{}: {}", flag, err));
            finish(render(&command, inputs, &rep, millis), EXIT_PARSE)
        }
    }
}

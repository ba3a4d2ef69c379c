//! `ncfit`: command-line front end. Every command prints one JSON report
//! on stdout; exit status 0 = success/pass, 1 = a relation or invariant
//! failed, 2 = usage or input error.

use std::io::Write;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ncfit::algebra::{adjoint_star, nrd, GroupAlgebraMatrix};
use ncfit::arith::Rational;
use ncfit::cyclotomic::{distribution_check, distribution_check_flipped, euler_family_check, DistributionRow};
use ncfit::detfun::{det_free, ses_iso, swap_order_sign, ExactSequence, GradedInvertible};
use ncfit::exterior::{
    epsilon_m, epsilon_support, in_kernel_wedge, pair, rubin_membership, wedge_elements, wedge_homs, RubinVerdict,
};
use ncfit::fitting::{
    annihilation_check, fit_classical_oracle, fit_matrix, fit_transpose, xi_approx, Budget,
};
use ncfit::groups::{group, group_from_catalog, Group};
use ncfit::io::{
    central_from_json, central_json, element_json, group_json, lattice_json, matrix_from_json, matrix_json, to_value,
    vectors_from_json, SCHEMA_VERSION,
};
use ncfit::suite::{self, SuiteConfig};
use ncfit::Error;

/// Environment variable holding the default budget as a JSON object.
const BUDGET_ENV: &str = "NCALG_BUDGET";

#[derive(Parser)]
#[command(name = "ncfit", version, about = "Reduced norms, Whitehead orders and Fitting invariants of group rings")]
struct Cli {
    /// Leave the timestamp out of the report, making output byte-reproducible.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Pretty-print the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    /// Enumeration budget as JSON (inline or @file); fields not given keep
    /// their defaults. Falls back to $NCALG_BUDGET.
    #[arg(long, global = true)]
    budget: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArg {
    /// Catalog group, e.g. C6, D4, S3, Q8, A4, S4, C2xC3.
    #[arg(long)]
    group: String,
}

#[derive(Args)]
struct MatrixArg {
    #[command(flatten)]
    group: GroupArg,
    /// Matrix as JSON (inline or @file): a record {entries: [[elem]]} or a
    /// bare array of rows; elements are {"label": "p/q"} maps or dense arrays.
    #[arg(long)]
    matrix: String,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a catalog group.
    Group {
        #[arg(long)]
        name: String,
        #[arg(long, value_delimiter = ',')]
        params: Vec<u64>,
    },
    /// Reduced norm of a square matrix.
    Nrd(MatrixArg),
    /// The adjoint M* with M·M* = M*·M = Nrd(M)·I.
    Adjoint(MatrixArg),
    /// Budgeted approximation of the Whitehead order ξ(Z[G]).
    Xi(GroupArg),
    /// The a-th Fitting invariant of the module presented by a matrix.
    Fit {
        #[command(flatten)]
        m: MatrixArg,
        #[arg(long, default_value_t = 0)]
        a: usize,
        /// Use ι_#(Mᵀ) (square matrices only).
        #[arg(long)]
        transpose: bool,
        /// Also compute the classical Fitting ideal (abelian groups).
        #[arg(long)]
        oracle: bool,
    },
    /// Check that x annihilates the cokernel of a square matrix.
    Annihilate {
        #[command(flatten)]
        m: MatrixArg,
        /// Central element: {"values": [...]} or a central group-ring element.
        #[arg(long)]
        x: String,
    },
    /// Wedge of elements (or, with --homs, of homomorphisms) of A^k.
    Wedge {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        k: usize,
        /// Array of vectors, each an array of k elements.
        #[arg(long)]
        vectors: String,
        #[arg(long)]
        homs: bool,
    },
    /// Pair a wedge of homomorphisms with a wedge of elements.
    Pair {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        homs: String,
        #[arg(long)]
        elements: String,
    },
    /// The canonical kernel element ε_M of a d'×d matrix, d' > d.
    Epsilon(MatrixArg),
    /// Rubin-lattice membership of (scale)·∧elements in the lattice
    /// generated by the given vectors.
    Rubin {
        #[command(flatten)]
        group: GroupArg,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        elements: String,
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        scale: Option<String>,
    },
    /// Determinant lines: d(P) for a basis, or the isomorphism of a split
    /// exact sequence given by θ, φ and a section.
    Det {
        #[command(flatten)]
        group: GroupArg,
        /// Basis of A^r as the rows of a square matrix.
        #[arg(long, conflicts_with_all = ["theta", "phi", "section"])]
        basis: Option<String>,
        #[arg(long, requires_all = ["phi", "section"])]
        theta: Option<String>,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long)]
        section: Option<String>,
    },
    /// Cyclotomic distribution relation for one pair or a whole family.
    Cyclo {
        #[arg(long, requires = "ell", conflicts_with_all = ["fmax", "ellmax"])]
        f: Option<u64>,
        #[arg(long)]
        ell: Option<u64>,
        #[arg(long, default_value_t = 30)]
        fmax: u64,
        #[arg(long, default_value_t = 13)]
        ellmax: u64,
        /// Use σ_ℓ in place of σ_ℓ⁻¹ (a convention guard that should fail).
        #[arg(long)]
        flipped: bool,
    },
    /// Run a seeded property suite.
    Suite {
        /// oracle, nrd-props, adjoint, pairing, epsilon, theta, detfun,
        /// annihilation, xi, cyclo, or all.
        #[arg(long)]
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per randomized check (default: the full acceptance sizes).
        #[arg(long)]
        cases: Option<usize>,
    },
}

enum Failure {
    Usage(String),
    Math(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Internal(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(Value, bool, Option<u64>), Failure>;

fn read_json(s: &str) -> Result<Value, Failure> {
    let text = match s.strip_prefix('@') {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?,
        None => s.to_string(),
    };
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("invalid JSON: {e}")))
}

fn budget(cli: &Cli) -> Result<Budget, Failure> {
    let src = match &cli.budget {
        Some(b) => Some(b.clone()),
        None => std::env::var(BUDGET_ENV).ok().filter(|s| !s.trim().is_empty()),
    };
    match src {
        None => Ok(Budget::default()),
        Some(s) => serde_json::from_value(read_json(&s)?).map_err(|e| Failure::Usage(format!("invalid budget: {e}"))),
    }
}

fn matrix(m: &MatrixArg) -> Result<GroupAlgebraMatrix<Rational>, Failure> {
    let g = group(&m.group.group)?;
    parse_matrix(&g, &m.matrix)
}

fn parse_matrix(g: &Group, s: &str) -> Result<GroupAlgebraMatrix<Rational>, Failure> {
    let m = matrix_from_json(&read_json(s)?, Some(g))?;
    if m.group() != g {
        return Err(Failure::Usage(format!("matrix is over {}, expected {}", m.group().name(), g.name())));
    }
    Ok(m)
}

fn graded_json(x: &GradedInvertible) -> Value {
    let factors: Vec<Value> = x
        .factors()
        .iter()
        .map(|f| json!({"label": f.label, "dual": f.dual, "grading": f.grading}))
        .collect();
    json!({"factors": factors, "coeff": central_json(x.coeff()), "grading": x.grading()})
}

fn row_json(r: &DistributionRow) -> Value {
    json!({"f": r.f, "ell": r.ell, "lhs": to_value(&r.lhs), "rhs": to_value(&r.rhs),
           "verdict": if r.pass { "pass" } else { "fail" }})
}

fn vectors_json(v: &[Vec<ncfit::algebra::GroupAlgebraElement<Rational>>]) -> Value {
    Value::Array(v.iter().map(|x| Value::Array(x.iter().map(element_json).collect())).collect())
}

fn run(cli: &Cli) -> Outcome {
    let ok = |v: Value| Ok((v, true, None));
    match &cli.command {
        Command::Group { name, params } => {
            let g = group_from_catalog(name, params)?;
            let irreps: Vec<Value> = g
                .irreps()
                .iter()
                .map(|r| json!({"degree": r.degree(), "character": to_value(r.character())}))
                .collect();
            ok(json!({
                "group": group_json(&g),
                "order": g.order(),
                "abelian": g.is_abelian(),
                "exponent": g.exponent(),
                "classes": g.classes(),
                "irreps": irreps,
            }))
        }
        Command::Nrd(m) => {
            let m = matrix(m)?;
            ok(json!({"nrd": central_json(&nrd(&m)?)}))
        }
        Command::Adjoint(m) => {
            let m = matrix(m)?;
            ok(json!({"adjoint": matrix_json(&adjoint_star(&m)?), "nrd": central_json(&nrd(&m)?)}))
        }
        Command::Xi(g) => {
            let g = group(&g.group)?;
            ok(json!({"xi": lattice_json(&xi_approx(&g, &budget(cli)?)?)}))
        }
        Command::Fit { m, a, transpose, oracle } => {
            let mat = matrix(m)?;
            let b = budget(cli)?;
            let fit = if *transpose { fit_transpose(&mat, *a, &b)? } else { fit_matrix(&mat, *a, &b)? };
            let mut out = json!({"a": a, "fit": lattice_json(&fit)});
            if *oracle {
                let target = if *transpose { mat.hash_transpose() } else { mat };
                let classical = fit_classical_oracle(&target, *a)?;
                let agree = classical == fit;
                out["oracle"] = lattice_json(&classical);
                out["agree"] = json!(agree);
                return Ok((out, agree, None));
            }
            ok(out)
        }
        Command::Annihilate { m, x } => {
            let mat = matrix(m)?;
            let x = central_from_json(mat.group(), &read_json(x)?)?;
            let r = annihilation_check(&mat, &x)?;
            let out = json!({
                "annihilates": r.annihilates,
                "y": r.y.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                "cokernel": r.cokernel.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            Ok((out, r.annihilates, None))
        }
        Command::Wedge { group: g, k, vectors, homs } => {
            let g = group(&g.group)?;
            let v = vectors_from_json(&g, &read_json(vectors)?)?;
            if *homs {
                ok(json!({"hom_wedge": to_value(&wedge_homs(&g, *k, &v)?)}))
            } else {
                ok(json!({"wedge": to_value(&wedge_elements(&g, *k, &v)?)}))
            }
        }
        Command::Pair { group: g, k, homs, elements } => {
            let g = group(&g.group)?;
            let h = vectors_from_json(&g, &read_json(homs)?)?;
            let e = vectors_from_json(&g, &read_json(elements)?)?;
            let p = pair(&wedge_homs(&g, *k, &h)?, &wedge_elements(&g, *k, &e)?)?;
            let mut out = json!({"pairing": to_value(&p)});
            if let Some(c) = p.as_central() {
                out["value"] = central_json(&c);
            }
            ok(out)
        }
        Command::Epsilon(m) => {
            let mat = matrix(m)?;
            let e = epsilon_m(&mat)?;
            let support = epsilon_support(&mat);
            let consistent = (0..mat.group().num_irreps()).all(|chi| e.component_is_zero(chi) != support[chi]);
            let in_kernel = in_kernel_wedge(&e, &mat)?;
            let out = json!({"epsilon": to_value(&e), "support": support, "in_kernel": in_kernel});
            Ok((out, consistent && in_kernel, None))
        }
        Command::Rubin { group: g, k, elements, lattice, scale } => {
            let g = group(&g.group)?;
            let e = vectors_from_json(&g, &read_json(elements)?)?;
            let gens = vectors_from_json(&g, &read_json(lattice)?)?;
            let mut x = wedge_elements(&g, *k, &e)?;
            if let Some(s) = scale {
                x = x.scale(&central_from_json(&g, &read_json(s)?)?)?;
            }
            let b = budget(cli)?;
            let xi = xi_approx(&g, &b)?;
            let verdict = match rubin_membership(&x, &gens, &xi, &b)? {
                RubinVerdict::CertifiedNo { witness, value } => {
                    json!({"verdict": "certified-no", "witness": vectors_json(&witness), "value": central_json(&value)})
                }
                RubinVerdict::Undecided { witness, value } => {
                    json!({"verdict": "undecided", "witness": vectors_json(&witness), "value": central_json(&value)})
                }
                RubinVerdict::PassedBudget { checked } => json!({"verdict": "passed-budget", "checked": checked}),
                RubinVerdict::ExactYes => json!({"verdict": "exact-yes"}),
            };
            ok(json!({"element": to_value(&x), "rubin": verdict}))
        }
        Command::Det { group: g, basis, theta, phi, section } => {
            let g = group(&g.group)?;
            if let Some(b) = basis {
                return ok(json!({"det": graded_json(&det_free("P", &parse_matrix(&g, b)?)?)}));
            }
            let (Some(t), Some(p), Some(s)) = (theta, phi, section) else {
                return Err(Failure::Usage("det needs --basis, or --theta with --phi and --section".into()));
            };
            let seq = ExactSequence::new(parse_matrix(&g, t)?, parse_matrix(&g, p)?, parse_matrix(&g, s)?)?;
            let iso = ses_iso(&seq, ("P1", "P3"))?;
            let (sign, commutes) = swap_order_sign(&seq)?;
            let out = json!({
                "assembled_nrd": central_json(&iso.assembled_nrd),
                "image": graded_json(&iso.image),
                "order_swap_sign": central_json(&sign),
                "order_swap_commutes": commutes,
            });
            Ok((out, commutes, None))
        }
        Command::Cyclo { f, ell, fmax, ellmax, flipped } => {
            let rows = match (f, ell) {
                (Some(f), Some(l)) => {
                    vec![if *flipped { distribution_check_flipped(*f, *l)? } else { distribution_check(*f, *l)? }]
                }
                _ if *flipped => ncfit::cyclotomic::admissible_pairs(*fmax, *ellmax)
                    .iter()
                    .map(|&(f, l)| distribution_check_flipped(f, l))
                    .collect::<Result<_, _>>()?,
                _ => euler_family_check(*fmax, *ellmax)?,
            };
            let pass = rows.iter().all(|r| r.pass);
            let out = json!({"rows": rows.iter().map(row_json).collect::<Vec<_>>(), "count": rows.len(), "all_pass": pass});
            Ok((out, pass, None))
        }
        Command::Suite { name, seed, cases } => {
            let cfg = SuiteConfig {
                seed: *seed,
                budget: budget(cli)?,
                cases: *cases,
            };
            let reports = suite::run(name, &cfg)?;
            let pass = reports.iter().all(|r| r.pass);
            let out = json!({
                "suites": to_value(&reports),
                "pass": pass,
                "replay": {"command": "suite", "name": name, "seed": seed, "cases": cases, "budget": to_value(&cfg.budget)},
            });
            Ok((out, pass, Some(*seed)))
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Group { .. } => "group",
        Command::Nrd(_) => "nrd",
        Command::Adjoint(_) => "adjoint",
        Command::Xi(_) => "xi",
        Command::Fit { .. } => "fit",
        Command::Annihilate { .. } => "annihilate",
        Command::Wedge { .. } => "wedge",
        Command::Pair { .. } => "pair",
        Command::Epsilon(_) => "epsilon",
        Command::Rubin { .. } => "rubin",
        Command::Det { .. } => "det",
        Command::Cyclo { .. } => "cyclo",
        Command::Suite { .. } => "suite",
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = json!({"schema_version": SCHEMA_VERSION, "command": command_name(&cli.command)});
    if !cli.no_timestamp {
        let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
        report["timestamp"] = json!(now);
    }
    let code = match run(&cli) {
        Ok((result, pass, seed)) => {
            if let Some(s) = seed {
                report["seed"] = json!(s);
            }
            report["status"] = json!(if pass { "pass" } else { "fail" });
            report["result"] = result;
            if pass { 0 } else { 1 }
        }
        Err(Failure::Math(msg)) => {
            report["status"] = json!("fail");
            report["error"] = json!(msg);
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `ncfit --help` for usage.");
            return ExitCode::from(2);
        }
    };
    let text = if cli.pretty {
        serde_json::to_string_pretty(&report)
    } else {
        serde_json::to_string(&report)
    };
    // a closed pipe (e.g. `| head`) is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{}", text.expect("serializable report"));
    ExitCode::from(code)
}

//! The `hompoisson` command-line driver.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check fails,
//! 2 on usage, parse or I/O errors.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use hompoisson::catalog::{self, build_catalog, CatalogObject, Params};
use hompoisson::check::{
    check_admissible, check_cyclic_associator, check_hom_associative, check_hom_flexible,
    check_hom_poisson, check_morphism, check_multiplicative,
};
use hompoisson::construct::{
    commutator_poisson, depolarize, polarize, tensor, twist, twist_unchecked,
};
use hompoisson::poly::PoissonBracket;
use hompoisson::power::{check_criterion_34, check_power_assoc_up_to};
use hompoisson::specfile::{emit_spec_string, parse_map, parse_spec, SpecObject};
use hompoisson::{witness, CheckReport, Error, HomAlgebra, Rational, Scalar};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "hompoisson",
    version,
    about = "Exact checks for (non-commutative) Hom-Poisson algebras"
)]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Antisymmetry, Hom-Jacobi, Hom-associativity, Hom-Leibniz (and
    /// commutativity when claimed).
    HomPoisson,
    Multiplicative,
    HomAssociative,
    Admissible,
    Flexible,
    CyclicAssociator,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run an identity suite on an algebra file.
    Check {
        spec: PathBuf,
        /// Defaults to hom-poisson for Hom-Poisson files and hom-associative
        /// for Hom-algebra files.
        #[arg(long, value_enum)]
        suite: Option<Suite>,
    },
    /// Twist an algebra by a linear map read from a map file.
    Twist {
        spec: PathBuf,
        #[arg(long = "by")]
        map: PathBuf,
        /// Skip the weak-morphism check.
        #[arg(long)]
        force: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Tensor product of two Hom-Poisson algebras with commutative products.
    Tensor {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The algebra (A, [,], μ, α) with commutator bracket of a
    /// Hom-associative algebra.
    Commutator {
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split a Hom-algebra product into bracket and symmetric product.
    Polarize {
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recombine a Hom-Poisson algebra into the single product {,} + μ.
    Depolarize {
        spec: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Hom-power associativity up to a given power.
    Power {
        spec: PathBuf,
        #[arg(long = "max-n", default_value_t = 4)]
        max_n: usize,
    },
    /// Build a catalog structure, or list the catalog when no name is given.
    Catalog {
        name: Option<String>,
        /// Parameter as name=value with a rational value, e.g. zeta=1/2.
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Rational)>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a scripted non-rigidity or rigidity computation and print its residuals.
    Witness {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(witness::WITNESS_NAMES))]
        name: String,
        #[arg(long = "param", value_parser = parse_param)]
        params: Vec<(String, Rational)>,
    },
}

fn parse_param(text: &str) -> Result<(String, Rational), String> {
    let (name, value) = text
        .split_once('=')
        .ok_or_else(|| format!("expected name=value, got `{text}`"))?;
    let value = hompoisson::parse_scalar(value.trim())
        .ok_or_else(|| format!("`{value}` is not an exact rational (use p/q)"))?;
    Ok((name.trim().to_string(), value))
}

/// Outcome of a command before rendering.
enum Outcome {
    Report(CheckReport),
    Reports(Vec<CheckReport>),
    Text {
        body: String,
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Precondition(_) => EXIT_FAIL,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

/// Runs the driver on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_PASS
            };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    let format = cli.format;
    match execute(cli.command) {
        Ok(outcome) => render(outcome, format, out, err),
        Err(f) => {
            if format == Format::Json {
                let _ = writeln!(
                    out,
                    "{}",
                    serde_json::json!({ "error": f.message, "exit": f.code })
                );
            }
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn render(outcome: Outcome, format: Format, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let reports = match outcome {
        Outcome::Report(r) => vec![r],
        Outcome::Reports(rs) => rs,
        Outcome::Text { body, output } => {
            return match output {
                Some(path) => match std::fs::write(&path, body) {
                    Ok(()) => {
                        if format == Format::Json {
                            let _ = writeln!(
                                out,
                                "{}",
                                serde_json::json!({ "written": path.display().to_string() })
                            );
                        } else {
                            let _ = writeln!(out, "wrote {}", path.display());
                        }
                        EXIT_PASS
                    }
                    Err(e) => {
                        let _ = writeln!(err, "error: cannot write {}: {e}", path.display());
                        EXIT_USAGE
                    }
                },
                None => {
                    let _ = write!(out, "{body}");
                    EXIT_PASS
                }
            };
        }
    };
    match format {
        Format::Text => {
            for r in &reports {
                let _ = write!(out, "{r}");
            }
        }
        Format::Json => {
            let value = if reports.len() == 1 {
                reports[0].to_json()
            } else {
                serde_json::Value::Array(reports.iter().map(CheckReport::to_json).collect())
            };
            let _ = writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&value).expect("serializable")
            );
        }
    }
    exit_code(&reports)
}

/// 0 when every report passes, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().all(|r| r.passed) {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn load(path: &Path) -> Result<SpecObject<Rational>, Failure> {
    Ok(parse_spec(path)?)
}

fn load_poisson(path: &Path) -> Result<hompoisson::HomPoissonAlgebra, Failure> {
    match load(path)? {
        SpecObject::HomPoisson(p) => Ok(p),
        SpecObject::HomAlgebra(_) => Err(usage(format!(
            "{}: expected a hom-poisson file",
            path.display()
        ))),
    }
}

fn load_algebra(path: &Path) -> Result<HomAlgebra, Failure> {
    match load(path)? {
        SpecObject::HomAlgebra(a) => Ok(a),
        SpecObject::HomPoisson(_) => Err(usage(format!(
            "{}: expected a hom-algebra file",
            path.display()
        ))),
    }
}

fn emitted(object: SpecObject<Rational>, output: Option<PathBuf>) -> Outcome {
    Outcome::Text {
        body: emit_spec_string(&object),
        output,
    }
}

fn execute(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Check { spec, suite } => check(&load(&spec)?, suite),
        Command::Twist {
            spec,
            map,
            force,
            output,
        } => {
            let beta = parse_map::<Rational>(&map)?;
            let twisted = match load(&spec)? {
                SpecObject::HomPoisson(p) => {
                    if p.dim() != beta.dim() {
                        return Err(Error::DimensionMismatch {
                            expected: p.dim(),
                            found: beta.dim(),
                        }
                        .into());
                    }
                    if force {
                        SpecObject::HomPoisson(twist_unchecked(&p, &beta)?)
                    } else {
                        let report = check_morphism(&beta, &p, &p, true);
                        if !report.passed {
                            return Ok(Outcome::Report(report));
                        }
                        SpecObject::HomPoisson(twist(&p, &beta)?)
                    }
                }
                SpecObject::HomAlgebra(a) => {
                    if a.dim() != beta.dim() {
                        return Err(Error::DimensionMismatch {
                            expected: a.dim(),
                            found: beta.dim(),
                        }
                        .into());
                    }
                    if !force {
                        let report = check_morphism(&beta, &a, &a, true);
                        if !report.passed {
                            return Ok(Outcome::Report(report));
                        }
                    }
                    let mu = a.mu().post_map(&beta)?;
                    let alpha = beta.compose(a.alpha())?;
                    SpecObject::HomAlgebra(HomAlgebra::new(a.basis().to_vec(), mu, alpha)?)
                }
            };
            Ok(emitted(twisted, output))
        }
        Command::Tensor { a, b, output } => {
            let (a, b) = (load_poisson(&a)?, load_poisson(&b)?);
            Ok(emitted(SpecObject::HomPoisson(tensor(&a, &b)?), output))
        }
        Command::Commutator { spec, output } => {
            let a = load_algebra(&spec)?;
            Ok(emitted(
                SpecObject::HomPoisson(commutator_poisson(&a)?),
                output,
            ))
        }
        Command::Polarize { spec, output } => {
            let a = load_algebra(&spec)?;
            Ok(emitted(SpecObject::HomPoisson(polarize(&a)), output))
        }
        Command::Depolarize { spec, output } => {
            let p = load_poisson(&spec)?;
            Ok(emitted(SpecObject::HomAlgebra(depolarize(&p)), output))
        }
        Command::Power { spec, max_n } => {
            if max_n < 2 {
                return Err(usage("--max-n must be at least 2"));
            }
            let a = load_algebra(&spec)?;
            let powers = check_power_assoc_up_to(&a, max_n)?;
            let mut reports = vec![powers];
            if check_multiplicative(&a).passed {
                reports.push(check_criterion_34(&a)?);
            }
            Ok(Outcome::Reports(reports))
        }
        Command::Catalog {
            name,
            params,
            output,
        } => {
            let Some(name) = name else {
                return Ok(Outcome::Text {
                    body: catalog_listing(),
                    output,
                });
            };
            let params = collect_params(params)?;
            catalog_outcome(&name, &params, output)
        }
        Command::Witness { name, params } => {
            let params = collect_params(params)?;
            Ok(Outcome::Report(run_witness(&name, &params)?))
        }
    }
}

fn collect_params(list: Vec<(String, Rational)>) -> Result<Params, Failure> {
    let mut params = Params::new();
    for (k, v) in list {
        if params.insert(k.clone(), v).is_some() {
            return Err(usage(format!("parameter `{k}` given twice")));
        }
    }
    Ok(params)
}

fn check(object: &SpecObject<Rational>, suite: Option<Suite>) -> Result<Outcome, Failure> {
    let report = match (object, suite) {
        (SpecObject::HomPoisson(p), None | Some(Suite::HomPoisson)) => check_hom_poisson(p),
        (SpecObject::HomPoisson(p), Some(Suite::Multiplicative)) => check_multiplicative(p),
        (SpecObject::HomAlgebra(a), None | Some(Suite::HomAssociative)) => check_hom_associative(a),
        (SpecObject::HomAlgebra(a), Some(Suite::Multiplicative)) => check_multiplicative(a),
        (SpecObject::HomAlgebra(a), Some(Suite::Admissible)) => check_admissible(a),
        (SpecObject::HomAlgebra(a), Some(Suite::Flexible)) => check_hom_flexible(a),
        (SpecObject::HomAlgebra(a), Some(Suite::CyclicAssociator)) => check_cyclic_associator(a),
        (_, Some(s)) => {
            return Err(usage(format!(
                "suite {} does not apply to this kind of file",
                s.to_possible_value().expect("named variant").get_name()
            )))
        }
    };
    Ok(Outcome::Report(report))
}

fn catalog_listing() -> String {
    let mut out = String::new();
    for e in catalog::ENTRIES {
        let params: Vec<String> = e.params.iter().map(|(n, d)| format!("{n}={d}")).collect();
        out.push_str(&format!("{:<20} {}\n", e.name, e.summary));
        if !params.is_empty() {
            out.push_str(&format!("{:<20} params: {}\n", "", params.join(" ")));
        }
    }
    out
}

fn describe_substitution(s: &hompoisson::Substitution) -> Vec<(String, String)> {
    s.generators()
        .iter()
        .zip(s.images())
        .map(|(g, img)| (format!("alpha({g})"), img.to_string()))
        .collect()
}

fn catalog_outcome(
    name: &str,
    params: &Params,
    output: Option<PathBuf>,
) -> Result<Outcome, Failure> {
    let object = build_catalog(name, params)?;
    let described = |identity: &str, rows: Vec<(String, String)>| {
        let report = rows
            .into_iter()
            .fold(CheckReport::pass(identity), |r, (k, v)| r.with_detail(k, v));
        Ok(Outcome::Report(report))
    };
    match object {
        CatalogObject::HomPoisson(p) | CatalogObject::Truncated { algebra: p, .. } => {
            Ok(emitted(SpecObject::HomPoisson(p), output))
        }
        CatalogObject::HomAlgebra(a) => Ok(emitted(SpecObject::HomAlgebra(a), output)),
        _ if output.is_some() => Err(usage(format!(
            "{name} is infinite-dimensional and has no spec file; omit -o"
        ))),
        CatalogObject::LiePoisson { structure, alpha } => {
            let gens = PoissonBracket::<Rational>::generators(&structure).join(", ");
            let mut rows = vec![("generators".to_string(), gens)];
            rows.extend(describe_substitution(&alpha));
            described("sl2-linear-poisson", rows)
        }
        CatalogObject::Symplectic { structure, phi } => {
            let gens = PoissonBracket::<Rational>::generators(&structure).join(", ");
            let mut rows = vec![("generators".to_string(), gens)];
            rows.extend(describe_substitution(&phi));
            described("symplectic", rows)
        }
        CatalogObject::FreePoly { generators, alpha } => {
            let mut rows = vec![("generators".to_string(), generators.join(", "))];
            rows.extend(describe_substitution(&alpha));
            described("free-poly", rows)
        }
    }
}

fn param(params: &Params, name: &str, default: i64) -> Rational {
    params
        .get(name)
        .cloned()
        .unwrap_or_else(|| Rational::from_int(default))
}

fn small_count(params: &Params, name: &str, default: i64, max: i64) -> Result<usize, Failure> {
    let v = param(params, name, default);
    if !v.is_integer() || v < Rational::from_int(1) || v > Rational::from_int(max) {
        return Err(usage(format!(
            "{name} must be an integer between 1 and {max}"
        )));
    }
    Ok(v.to_integer().to_string().parse().expect("small integer"))
}

fn allow_only(params: &Params, allowed: &[&str]) -> Result<(), Failure> {
    match params.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(usage(format!(
            "unknown parameter `{k}` (allowed: {})",
            allowed.join(", ")
        ))),
        None => Ok(()),
    }
}

fn run_witness(name: &str, params: &Params) -> Result<CheckReport, Failure> {
    Ok(match name {
        "free-poly" => {
            allow_only(params, &["shift"])?;
            witness::free_poly_witness(&param(params, "shift", 1))?
        }
        "matrix" => {
            allow_only(params, &["n"])?;
            witness::matrix_witness(small_count(params, "n", 2, 3)?)?
        }
        "sl2" => {
            allow_only(params, &["lambda"])?;
            witness::sl2_witness(&param(params, "lambda", 2))?
        }
        "symplectic" => {
            allow_only(params, &["n", "c", "i"])?;
            let n = small_count(params, "n", 1, 8)?;
            let i = small_count(params, "i", 1, 2 * n as i64)?;
            let c = vec![param(params, "c", 1); 2 * n];
            witness::symplectic_witness(&c, i - 1)?
        }
        "heisenberg" => {
            allow_only(params, &[])?;
            witness::heisenberg_witness()?
        }
        other => return Err(usage(format!("unknown witness `{other}`"))),
    })
}

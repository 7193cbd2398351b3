use std::collections::BTreeMap;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use y5::exact::{parse_rational, vec_str, RatMatrix, Rational};
use y5::geometry::{standard_a_basis, ConicRef, GeometryContext, LineRef};
use y5::jumping::{conic_is_jumping, jump_order, jumping_consistency};
use y5::monads::{equivariant_gamma2, random_instanton, random_line, special_instanton, MonadData};
use y5::p1bundles::{hyper_h, restrict_monad_to_line, splitting_type};
use y5::report::{analyze, foundations, render, splitting_cross_check, RunConfig, VERSION};

#[derive(Parser)]
#[command(name = "y5", version, about = "Instanton monads on the quintic del Pezzo threefold")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random fiber points per membership check (or samples for foundations).
    #[arg(long, default_value_t = 8)]
    budget: usize,
    /// Bound on the integers used for random coefficients.
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(i64).range(1..))]
    height: i64,
    #[arg(long)]
    out: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify the geometry, representation theory and cohomology of Y.
    Foundations {
        #[command(flatten)]
        common: Common,
        /// JSON file with three 5×5 antisymmetric matrices replacing the built-in basis of A.
        #[arg(long, hide = true)]
        a_basis: Option<String>,
    },
    /// Sample a verified monad of charge n.
    Sample {
        #[arg(short, long)]
        n: usize,
        #[command(flatten)]
        common: Common,
        /// Force a line of jump order 2 (charge 3 only).
        #[arg(long)]
        special: bool,
        /// The line for --special, as "x1,x2,x3".
        #[arg(long)]
        line: Option<String>,
        /// Emit the SL2-equivariant charge-2 datum instead of sampling.
        #[arg(long)]
        equivariant: bool,
    },
    /// Full analysis of a monad file.
    Analyze {
        file: String,
        #[command(flatten)]
        common: Common,
    },
    /// Restrict a monad to a line (splitting type) or a conic (hypercohomology).
    Restrict {
        file: String,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        line: Option<String>,
        /// Linear form w on V cutting the conic, as "w0,...,w4".
        #[arg(long)]
        conic: Option<String>,
    },
    /// Line/conic jumping consistency suite for a monad file.
    Consistency {
        file: String,
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50)]
        trials: usize,
    },
}

enum Failure {
    Math(Value),
    Usage(String),
}

fn parse_vec(s: &str, len: usize) -> Result<Vec<Rational>, Failure> {
    let v: Result<Vec<Rational>, _> = s.split(',').map(|x| parse_rational(x.trim())).collect();
    let v = v.map_err(|e| Failure::Usage(format!("cannot parse '{s}': {e}")))?;
    if v.len() != len {
        return Err(Failure::Usage(format!("expected {len} comma-separated rationals, got {}", v.len())));
    }
    Ok(v)
}

fn config(name: &str, c: &Common, flags: BTreeMap<String, String>) -> RunConfig {
    RunConfig {
        command: name.into(),
        seed: c.seed,
        budget: c.budget,
        height: c.height,
        out: c.out.clone(),
        flags,
    }
}

fn context() -> Result<GeometryContext, Failure> {
    GeometryContext::build().map_err(|e| Failure::Math(json!({ "error": e.to_string() })))
}

fn load_monad(ctx: &GeometryContext, path: &str) -> Result<MonadData, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    MonadData::from_json(ctx, &text).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_basis(path: &str) -> Result<[RatMatrix; 3], Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("cannot read {path}: {e}")))?;
    let raw: Vec<Vec<Vec<String>>> =
        serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
    let mut out = Vec::new();
    for m in raw {
        let rows: Result<Vec<Vec<Rational>>, _> =
            m.iter().map(|r| r.iter().map(|x| parse_rational(x)).collect()).collect();
        let rows = rows.map_err(|e| Failure::Usage(format!("{path}: {e}")))?;
        if rows.len() != 5 || rows.iter().any(|r| r.len() != 5) {
            return Err(Failure::Usage(format!("{path}: each form must be 5×5")));
        }
        out.push(RatMatrix::from_rows(&rows));
    }
    out.try_into().map_err(|_| Failure::Usage(format!("{path}: expected three forms")))
}

/// Returns the output and whether the run passed.
fn run(cmd: Command) -> Result<(String, bool, Option<String>), Failure> {
    match cmd {
        Command::Foundations { common, a_basis } => {
            let basis = match &a_basis {
                Some(p) => load_basis(p)?,
                None => standard_a_basis(),
            };
            let mut flags = BTreeMap::new();
            if let Some(p) = &a_basis {
                flags.insert("a_basis".into(), p.clone());
            }
            let f = foundations(basis, common.seed, common.budget);
            let mut j = f.json;
            j["config"] = json!(config("foundations", &common, flags));
            if let Some(name) = &f.first_failure {
                eprintln!("foundations: check failed: {name}");
            }
            Ok((render(&j), f.passed, common.out))
        }
        Command::Sample { n, common, special, line, equivariant } => {
            if !(2..=3).contains(&n) {
                return Err(Failure::Usage(format!("charge {n} is not supported (use 2 or 3)")));
            }
            if special && n != 3 {
                return Err(Failure::Usage("--special needs -n 3".into()));
            }
            if equivariant && (n != 2 || special) {
                return Err(Failure::Usage("--equivariant needs -n 2".into()));
            }
            let ctx = context()?;
            let mut flags = BTreeMap::from([("n".to_string(), n.to_string())]);
            let result = if equivariant {
                flags.insert("equivariant".into(), "true".into());
                equivariant_gamma2(&ctx).map(|m| {
                    let verdict = y5::monads::check_membership(&ctx, &m, common.budget, common.seed);
                    y5::monads::Sampled { monad: m, attempts: 1, verdict }
                })
            } else if special {
                let a = match &line {
                    Some(s) => LineRef::new(parse_vec(s, 3)?).map_err(|e| Failure::Usage(e.to_string()))?,
                    None => random_line(&mut y5::sampling::substream(common.seed, 99), 5),
                };
                flags.insert("special".into(), "true".into());
                flags.insert("line".into(), vec_str(&a.a).join(","));
                special_instanton(&ctx, &a, common.seed, common.height, common.budget)
            } else {
                random_instanton(&ctx, n, common.seed, common.height, common.budget)
            };
            let cfg = config("sample", &common, flags);
            match result {
                Ok(s) => {
                    let meta = json!({
                        "seed": common.seed,
                        "height": common.height,
                        "attempts": s.attempts,
                        "membership": s.verdict,
                        "version": VERSION,
                        "config": cfg,
                    });
                    let passed = s.verdict.passed;
                    let mut text = s.monad.to_json(Some(meta));
                    text.push('\n');
                    Ok((text, passed, common.out))
                }
                Err(e) => Err(Failure::Math(json!({ "version": VERSION, "config": cfg, "error": e.to_string() }))),
            }
        }
        Command::Analyze { file, common } => {
            let ctx = context()?;
            let m = load_monad(&ctx, &file)?;
            let cfg = config("analyze", &common, BTreeMap::from([("file".to_string(), file.clone())]));
            let a = analyze(&ctx, &m, &cfg);
            Ok((render(&a.json), a.passed, common.out))
        }
        Command::Restrict { file, common, line, conic } => {
            let ctx = context()?;
            let m = load_monad(&ctx, &file)?;
            let mut flags = BTreeMap::from([("file".to_string(), file.clone())]);
            let mut out = serde_json::Map::new();
            out.insert("version".into(), json!(VERSION));
            let passed;
            match (&line, &conic) {
                (Some(s), None) => {
                    flags.insert("line".into(), s.clone());
                    let a = LineRef::new(parse_vec(s, 3)?).map_err(|e| Failure::Usage(e.to_string()))?;
                    let c = restrict_monad_to_line(&ctx, &m, &a)
                        .map_err(|e| Failure::Math(json!({ "error": e.to_string() })))?;
                    let st = splitting_type(&c, 2, m.charge() as i64 + 2);
                    let k = jump_order(&ctx, &m, &a);
                    out.insert("line".into(), json!(vec_str(&a.a)));
                    out.insert("terms".into(), json!(c.terms));
                    out.insert("corank".into(), json!(k));
                    match st {
                        Ok(st) => {
                            passed = st.degrees() == vec![-(k as i64), k as i64];
                            out.insert("splitting".into(), json!(st.degrees()));
                        }
                        Err(e) => {
                            passed = false;
                            out.insert("splitting_error".into(), json!(e.to_string()));
                        }
                    }
                    out.insert("agrees_with_corank".into(), json!(passed));
                }
                (None, Some(s)) => {
                    flags.insert("conic".into(), s.clone());
                    let w = ConicRef::new(parse_vec(s, 5)?).map_err(|e| Failure::Usage(e.to_string()))?;
                    let v = conic_is_jumping(&ctx, &m, &w, common.height.max(1) * 4)
                        .map_err(|e| Failure::Math(json!({ "error": e.to_string() })))?;
                    out.insert("conic".into(), json!(vec_str(&w.w)));
                    out.insert("jumping".into(), json!(v.jumping));
                    out.insert("method".into(), json!(v.method));
                    out.insert("status".into(), json!(v.status));
                    out.insert(
                        "rational_components".into(),
                        json!(v.rational_components.iter().map(|l| vec_str(&l.a)).collect::<Vec<_>>()),
                    );
                    if let Some(p) = (v.method == y5::jumping::JumpMethod::SmoothCohomology)
                        .then(|| ctx.find_rational_point(&w, common.height.max(1) * 4))
                        .flatten()
                    {
                        if let Ok(param) = ctx.smooth_conic_parametrization(&w, &p) {
                            if let Ok(c) = y5::p1bundles::restrict_monad_to_conic(&ctx, &m, &param) {
                                let h = hyper_h(&c, 0);
                                out.insert(
                                    "hypercohomology".into(),
                                    json!(h.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>()),
                                );
                            }
                        }
                    }
                    passed = v.status == y5::jumping::JumpStatus::Decided;
                }
                _ => return Err(Failure::Usage("give exactly one of --line or --conic".into())),
            }
            out.insert("config".into(), json!(config("restrict", &common, flags)));
            Ok((render(&Value::Object(out)), passed, common.out))
        }
        Command::Consistency { file, common, trials } => {
            let ctx = context()?;
            let m = load_monad(&ctx, &file)?;
            let flags = BTreeMap::from([("file".to_string(), file.clone()), ("trials".to_string(), trials.to_string())]);
            let r = jumping_consistency(&ctx, &m, trials, (trials / 5).max(1), common.seed, &[])
                .map_err(|e| Failure::Math(json!({ "error": e.to_string() })))?;
            let splits = splitting_cross_check(&ctx, &m, 10, &[], common.seed);
            let passed = r.passed() && splits.iter().all(|s| s.agrees);
            let j = json!({
                "version": VERSION,
                "config": config("consistency", &common, flags),
                "consistency": r,
                "splitting_cross_check": splits,
                "passed": passed,
            });
            Ok((render(&j), passed, common.out))
        }
    }
}

fn emit(text: &str, out: Option<&str>) -> Result<(), String> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| format!("cannot write {p}: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, passed, out)) => {
            if let Err(e) = emit(&text, out.as_deref()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Math(v)) => {
            print!("{}", render(&v));
            if let Some(e) = v.get("error").and_then(|e| e.as_str()) {
                eprintln!("error: {e}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

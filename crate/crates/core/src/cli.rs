//! Command-line front end. [`run`] is the whole program minus process exit,
//! so tests can drive it in-process.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::algebra::{boxtimes, boxtimes_polar, dual_module, duality_check, kawamura, ModuleClass, PModule, ScalarModule};
use crate::error::{Error, Result};
use crate::families::{atomic_module, d2_fuse, gp_canonical, gp_fuse, prime_words, random_module, AtomicLabel, GpVector, D2};
use crate::io::{complex, matrix, module_value, num, parse_module_unchecked, render, Format, ModuleMeta};
use crate::structure::{atomic_part, classify_parts, decompose_full, equivalent, Label};

/// Files are accepted up to this Pythagorean residual even when `--tol` is
/// tighter, so that entries written with eight decimals still load.
pub const FILE_TOL_FLOOR: f64 = 1e-8;

#[derive(Parser, Debug)]
#[command(name = "pmod", version, about = "Fusion, duals and decompositions of Pythagorean modules")]
pub struct Cli {
    /// Relative tolerance for rank, kernel and validation decisions.
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,
    /// Longest word searched for atoms (default: twice the dimension).
    #[arg(long, global = true)]
    pub max_word_len: Option<usize>,
    /// Seed for randomized steps; required by decompose, equiv and sample.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the Pythagorean identity and report the module class.
    Validate { file: PathBuf },
    /// Fusion product of two modules.
    Fuse {
        a: PathBuf,
        b: PathBuf,
        /// Use the polar form instead of the direct formula.
        #[arg(long)]
        polar: bool,
    },
    /// Kawamura product of two modules of any arity.
    Kfuse { a: PathBuf, b: PathBuf },
    /// Dual module, optionally with the rigidity check.
    Dual {
        file: PathBuf,
        #[arg(long)]
        check: bool,
    },
    /// Irreducible decomposition of a full module.
    Decompose { file: PathBuf },
    /// Dimensions of the complete, atomic and diffuse parts.
    Classify { file: PathBuf },
    /// Unitary equivalence of two modules.
    Equiv { a: PathBuf, b: PathBuf },
    /// Atomic module of a label, or the atoms found inside a module file.
    Atomic(AtomicArgs),
    /// Fusion of two GP vectors given as JSON lists of [[re, im], [re, im]] pairs.
    GpFuse {
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        #[arg(long, allow_hyphen_values = true)]
        zt: String,
    },
    /// Closed-form fusion of two diagonal/anti-diagonal modules.
    D2Fuse { a: PathBuf, b: PathBuf },
    /// Random module of a given class.
    Sample {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        class: ClassArg,
        /// Number of zero eigenvalues planted in the first leg (class M only).
        #[arg(long, default_value_t = 0)]
        zero_eigs: usize,
    },
    /// Canonical prime binary words of a given length.
    PrimeWords {
        #[arg(long)]
        len: usize,
    },
}

#[derive(Args, Debug)]
pub struct AtomicArgs {
    /// Module file to search for atoms.
    #[arg(conflicts_with_all = ["word", "phase"], required_unless_present = "word")]
    pub file: Option<PathBuf>,
    /// Prime binary word of the label.
    #[arg(long)]
    pub word: Option<String>,
    /// Unit phase of the label as `re,im`.
    #[arg(long, allow_hyphen_values = true, default_value = "1,0")]
    pub phase: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassArg {
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "N", alias = "n")]
    N,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Exit code of a library error: 2 for bad input, 1 for domain failures.
pub fn exit_code(e: &Error) -> i32 {
    if e.is_input_error() || matches!(e, Error::NotPrime(_) | Error::NotD2Shape(_)) {
        2
    } else {
        1
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: text }
            } else {
                Outcome { code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let format = match cli.format {
        OutputFormat::Json => Format::Json,
        OutputFormat::Text => Format::Text,
    };
    match execute(&cli) {
        Ok(v) => Outcome { code: 0, stdout: render(&v, format), stderr: String::new() },
        Err(e) => Outcome { code: exit_code(&e), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn load(path: &Path, tol: f64) -> Result<PModule> {
    let (m, _) = parse_module_unchecked(&read(path)?)?;
    let ftol = tol.max(FILE_TOL_FLOOR);
    let v = m.validate(ftol);
    if !v.pass {
        return Err(Error::PythagoreanViolation { residual: v.residual, tol: ftol });
    }
    Ok(m)
}

fn need_seed(cli: &Cli, command: &str) -> Result<u64> {
    cli.seed.ok_or_else(|| Error::InvalidArgument(format!("{command} needs --seed")))
}

fn class_name(m: &PModule, tol: f64) -> &'static str {
    if m.arity() != 2 {
        "none"
    } else if m.in_class(ModuleClass::N, tol) {
        "N"
    } else if m.in_class(ModuleClass::M, tol) {
        "M"
    } else {
        "none"
    }
}

fn module_report(m: &PModule, name: &str) -> Value {
    let mut v = module_value(m, &ModuleMeta { name: Some(name.into()), ..Default::default() });
    v["residual"] = num(m.pythagorean_residual());
    v
}

fn parse_complex(s: &str) -> Result<Complex64> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let bad = || Error::InvalidArgument(format!("expected `re,im`, got {s:?}"));
    match parts.as_slice() {
        [re, im] => Ok(Complex64::new(re.parse().map_err(|_| bad())?, im.parse().map_err(|_| bad())?)),
        [re] => Ok(Complex64::new(re.parse().map_err(|_| bad())?, 0.0)),
        _ => Err(bad()),
    }
}

fn parse_gp(s: &str, tol: f64) -> Result<GpVector> {
    let raw: Vec<[[f64; 2]; 2]> = serde_json::from_str(s).map_err(|e| Error::Parse(format!("GP vector: {e}")))?;
    let z = GpVector::from_pairs(
        &raw.iter().map(|[a, b]| (Complex64::new(a[0], a[1]), Complex64::new(b[0], b[1]))).collect::<Vec<_>>(),
    );
    if z.is_empty() {
        return Err(Error::Shape("GP vector is empty".into()));
    }
    let r = z.residual();
    if r > tol.max(FILE_TOL_FLOOR) {
        return Err(Error::PythagoreanViolation { residual: r, tol: tol.max(FILE_TOL_FLOOR) });
    }
    Ok(z)
}

fn gp_value(z: &GpVector) -> Value {
    Value::Array(z.entries.iter().map(|s| json!([complex(s.a), complex(s.b)])).collect())
}

fn scalar_value(s: &ScalarModule) -> Value {
    json!({"a": complex(s.a), "b": complex(s.b)})
}

fn label_value(l: &AtomicLabel) -> Value {
    json!({"word": l.word(), "phase": complex(l.phase())})
}

fn execute(cli: &Cli) -> Result<Value> {
    let tol = cli.tol;
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(format!("--tol must be positive, got {tol}")));
    }
    match &cli.command {
        Command::Validate { file } => {
            let (m, meta) = parse_module_unchecked(&read(file)?)?;
            let v = m.validate(tol.max(FILE_TOL_FLOOR));
            if !v.pass {
                return Err(Error::PythagoreanViolation { residual: v.residual, tol: tol.max(FILE_TOL_FLOOR) });
            }
            let mut out = json!({
                "arity": m.arity(),
                "dim": m.dim(),
                "residual": num(v.residual),
                "pass": v.pass,
                "class": class_name(&m, tol),
            });
            if let Some(n) = meta.name {
                out["name"] = json!(n);
            }
            Ok(out)
        }
        Command::Fuse { a, b, polar } => {
            let (m, mt) = (load(a, tol)?, load(b, tol)?);
            let p = if *polar { boxtimes_polar(&m, &mt, tol)? } else { boxtimes(&m, &mt, tol)? };
            Ok(module_report(&p, "fuse"))
        }
        Command::Kfuse { a, b } => {
            let (m, mt) = (load(a, tol)?, load(b, tol)?);
            Ok(module_report(&kawamura(&m, &mt), "kfuse"))
        }
        Command::Dual { file, check } => {
            let m = load(file, tol)?;
            let d = dual_module(&m, tol)?;
            let mut out = module_report(&d, "dual");
            if *check {
                let r = duality_check(&m, tol)?;
                out["duality"] = json!({
                    "quantum_dim": num(r.quantum_dim),
                    "ev_factor": complex(r.ev_factor),
                    "ev_residual": num(r.ev_residual),
                    "coev_factor": complex(r.coev_factor),
                    "coev_residual": num(r.coev_residual),
                    "zigzag_residual": num(r.zigzag_residual),
                });
            }
            Ok(out)
        }
        Command::Decompose { file } => {
            let seed = need_seed(cli, "decompose")?;
            let m = load(file, tol)?;
            let rep = decompose_full(&m, seed, tol)?;
            let summands: Vec<Value> = rep
                .summands
                .iter()
                .map(|s| {
                    let label = match &s.label {
                        Some(Label::Atomic(l)) => json!({"atomic": label_value(l)}),
                        Some(Label::Gp(z)) => json!({"gp": gp_value(z)}),
                        None => Value::Null,
                    };
                    json!({
                        "dim": s.dim(),
                        "tag": s.tag.as_str(),
                        "label": label,
                        "fingerprint": Value::Array(s.fingerprint.iter().map(|z| complex(*z)).collect()),
                        "isometry": matrix(&s.isometry),
                    })
                })
                .collect();
            Ok(json!({
                "p_dimension": rep.p_dimension,
                "residual_dimension": rep.residual_dimension,
                "summand_count": summands.len(),
                "summands": summands,
                "confidence": rep.confidence.as_str(),
                "seed": rep.seed,
            }))
        }
        Command::Classify { file } => {
            let m = load(file, tol)?;
            let len = cli.max_word_len.unwrap_or(2 * m.dim());
            let r = classify_parts(&m, len, tol)?;
            Ok(json!({
                "p_dimension": r.p_dimension,
                "complete_dim": r.complete_dimension,
                "atomic_dim": r.atomic_dimension,
                "diffuse_dim": r.diffuse_dimension,
                "residual_dim": r.residual_dimension,
                "atomic_labels": Value::Array(r.atomic_labels.iter().map(label_value).collect()),
                "diffuse_certified_at": r.diffuse_level,
                "max_word_len": len,
                "confidence": r.confidence.as_str(),
            }))
        }
        Command::Equiv { a, b } => {
            let seed = need_seed(cli, "equiv")?;
            let (m, mt) = (load(a, tol)?, load(b, tol)?);
            let e = equivalent(&m, &mt, tol, seed)?;
            let mut out = json!({"verdict": e.verdict.as_str(), "reason": e.reason, "seed": seed});
            if let Some(u) = &e.witness {
                out["witness"] = matrix(u);
            }
            Ok(out)
        }
        Command::Atomic(args) => match (&args.file, &args.word) {
            (Some(file), _) => {
                let m = load(file, tol)?;
                let len = cli.max_word_len.unwrap_or(2 * m.dim());
                let found = atomic_part(&m, len, tol)?;
                let atoms: Vec<Value> = found
                    .iter()
                    .map(|a| json!({"label": label_value(&a.label), "dim": a.dim(), "isometry": matrix(&a.isometry)}))
                    .collect();
                Ok(json!({"max_word_len": len, "count": atoms.len(), "atoms": atoms}))
            }
            (None, Some(word)) => {
                let label = AtomicLabel::new(word, parse_complex(&args.phase)?)?;
                let mut out = module_report(&atomic_module(&label), "atomic");
                out["label"] = label_value(&label);
                Ok(out)
            }
            (None, None) => Err(Error::InvalidArgument("atomic needs a module file or --word".into())),
        },
        Command::GpFuse { z, zt } => {
            let (z, zt) = (parse_gp(z, tol)?, parse_gp(zt, tol)?);
            let ys = gp_fuse(&z, &zt)?;
            let vectors: Vec<Value> = ys
                .iter()
                .map(|y| {
                    let (c, aperiodic) = gp_canonical(y);
                    json!({"len": y.len(), "vector": gp_value(y), "canonical": gp_value(&c), "aperiodic": aperiodic})
                })
                .collect();
            Ok(json!({"count": vectors.len(), "vectors": vectors}))
        }
        Command::D2Fuse { a, b } => {
            let (m, mt) = (load(a, tol)?, load(b, tol)?);
            let (x, y) = (D2::from_module(&m, tol.max(FILE_TOL_FLOOR))?, D2::from_module(&mt, tol.max(FILE_TOL_FLOOR))?);
            let blocks: Vec<Value> = d2_fuse(&x, &y, tol)
                .iter()
                .map(|b| {
                    let split = match &b.split {
                        Some(s) => Value::Array(s.iter().map(scalar_value).collect()),
                        None => Value::Null,
                    };
                    json!({
                        "a": [complex(b.block.a1), complex(b.block.a2)],
                        "b": [complex(b.block.b1), complex(b.block.b2)],
                        "carrier": matrix(&b.carrier),
                        "split": split,
                    })
                })
                .collect();
            Ok(json!({"blocks": blocks}))
        }
        Command::Sample { dim, class, zero_eigs } => {
            let seed = need_seed(cli, "sample")?;
            if *dim == 0 {
                return Err(Error::InvalidArgument("--dim must be positive".into()));
            }
            let (c, tag) = match class {
                ClassArg::M => (ModuleClass::M, "M"),
                ClassArg::N => (ModuleClass::N, "N"),
            };
            let m = random_module(*dim, c, seed, *zero_eigs)?;
            Ok(module_value(&m, &ModuleMeta { name: Some("sample".into()), seed: Some(seed), class_tag: Some(tag.into()) }))
        }
        Command::PrimeWords { len } => {
            let words = prime_words(*len);
            Ok(json!({"len": len, "count": words.len(), "words": words}))
        }
    }
}


use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use chromhilb::analysis::{
    dehn_sommerville_check, log_concavity_report, reciprocity_report, uniform_matroid_complex,
};
use chromhilb::auxiliary::{
    auxiliary_complex, check_property_i, hilbert_polynomial_window, lift_disjoint, lift_with_apex,
    search_alpha, verify_constant_component, verify_main_theorem, AlphaAssignment, PropertyIMode,
};
use chromhilb::chromatic::{
    chromatic_polynomial, complex_of_graph, finite_model_count, graph_chromatic,
    verify_addition_contraction, ContractionConvention,
};
use chromhilb::cyclotomic::{
    check_cyclcheck, check_cycltop, cyclotomic_polynomial, scan, CyclotomicSpec, Labeling,
};
use chromhilb::hilbert::{
    cross_check, f_vector_big, h_vector, numerator_by_inclusion_exclusion, numerator_from_h,
};
use chromhilb::homology::reduced_homology;
use chromhilb::io::{complex_to_json, parse_alpha, parse_complex, parse_input, Input};
use chromhilb::poly::LogConcavityMode;
use chromhilb::sweep::{rows_to_csv, run_sweep};
use chromhilb::{CheckReport, Error, SimplicialComplex};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "chromhilb",
    version,
    about = "Simplicial chromatic polynomials and Hilbert numerators"
)]
struct Cli {
    /// Human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Merge,
    Remove,
}

#[derive(Clone, Copy, ValueEnum)]
enum LiftMode {
    Apex,
    Disjoint,
}

#[derive(Clone, Copy, ValueEnum)]
enum CycloMode {
    Cycltop,
    Cyclcheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum LabelingArg {
    Zero,
    One,
    Truncated,
}

#[derive(Clone, Copy, ValueEnum)]
enum LcMode {
    Literal,
    Absolute,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of a complex or graph file.
    Chromatic { file: PathBuf },
    /// Brute-force count of configurations over {1..q}.
    OracleCount {
        file: PathBuf,
        #[arg(long)]
        q: u64,
    },
    /// Addition-contraction residuals along a minimal nonface.
    VerifyAc {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        nonface: Vec<String>,
        #[arg(long, value_enum)]
        convention: Option<ConventionArg>,
    },
    /// Hilbert numerator, h-vector and f-vector.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        expand: Option<usize>,
    },
    /// Compares χ_c(S) with the reversed numerator of T(S).
    VerifyTheorem {
        file: PathBuf,
        /// JSON list of {sigma, alpha} pairs.
        #[arg(long, conflicts_with = "search")]
        alpha: Option<PathBuf>,
        /// Search for an assignment (the default when --alpha is absent).
        #[arg(long)]
        search: bool,
    },
    /// Builds S from T by adjoining new vertices to its minimal nonfaces.
    Lift {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "apex")]
        mode: LiftMode,
    },
    /// Constant component count identity.
    VerifyCc {
        file: PathBuf,
        #[arg(long)]
        a: usize,
    },
    /// Coefficient window of K_S and the Brenti criterion.
    HilbWindow {
        file: PathBuf,
        #[arg(long)]
        a: usize,
    },
    /// Reduced integer homology.
    Homology { file: PathBuf },
    /// Cyclotomic polynomial Φ_n.
    CycloPoly {
        #[arg(long)]
        n: u64,
    },
    /// Homology or top-h experiment on K_A with A = {j}; all j when --j is omitted.
    CycloCheck {
        /// Distinct primes, comma separated.
        #[arg(long, value_delimiter = ',', required = true)]
        primes: Vec<u64>,
        #[arg(long)]
        j: Option<u64>,
        #[arg(long, value_enum, default_value = "cycltop")]
        mode: CycloMode,
        /// Single labeling; all three when omitted.
        #[arg(long, value_enum)]
        labeling: Option<LabelingArg>,
    },
    /// Log concavity of h, f and χ_c coefficient sequences.
    Logconcavity {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "literal")]
        mode: LcMode,
    },
    /// Palindromicity of the h-vector.
    DehnSommerville { file: PathBuf },
    /// Signed palindromicity of χ_c.
    Reciprocity {
        file: PathBuf,
        #[arg(long)]
        alpha: Option<PathBuf>,
    },
    /// Uniform matroid independence complex U_n^r.
    Uniform {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum)]
        lift: Option<LiftMode>,
    },
    /// Seeded randomized property sweep, CSV output.
    Sweep {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// JSON result plus its text rendering.
struct Output {
    json: Value,
    text: String,
}

impl Output {
    fn report(r: CheckReport) -> Self {
        Output {
            text: r.render(),
            json: serde_json::to_value(&r).expect("report serializes"),
        }
    }
}

fn joined<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(", ")
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn located<T>(path: &Path, r: chromhilb::Result<T>) -> Res<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Failure::Lib(Error::Parse(format!("{}: {m}", path.display()))),
        other => Failure::Lib(other),
    })
}

fn load_complex(path: &Path) -> Res<SimplicialComplex> {
    Ok(located(path, parse_complex(&read(path)?))?.1)
}

fn load_alpha(path: &Path) -> Res<AlphaAssignment> {
    located(path, parse_alpha(&read(path)?))
}

fn alpha_or_search(s: &SimplicialComplex, alpha: Option<&PathBuf>) -> Res<Option<AlphaAssignment>> {
    match alpha {
        Some(p) => Ok(Some(load_alpha(p)?)),
        None => Ok(search_alpha(s)?),
    }
}

fn labelings(arg: Option<LabelingArg>) -> Vec<Labeling> {
    match arg {
        None => Labeling::ALL.to_vec(),
        Some(LabelingArg::Zero) => vec![Labeling::Zero],
        Some(LabelingArg::One) => vec![Labeling::One],
        Some(LabelingArg::Truncated) => vec![Labeling::Truncated],
    }
}

fn lift(t: &SimplicialComplex, mode: LiftMode) -> Res<(SimplicialComplex, AlphaAssignment)> {
    Ok(match mode {
        LiftMode::Apex => lift_with_apex(t)?,
        LiftMode::Disjoint => lift_disjoint(t)?,
    })
}

fn lift_name(mode: LiftMode) -> &'static str {
    match mode {
        LiftMode::Apex => "apex",
        LiftMode::Disjoint => "disjoint",
    }
}

fn conventions(cmd: &Command) -> Value {
    let contraction = match cmd {
        Command::VerifyAc {
            convention: Some(ConventionArg::Remove),
            ..
        } => ContractionConvention::RemoveOnly,
        _ => ContractionConvention::MergeVertex,
    };
    let labeling: Vec<&str> = match cmd {
        Command::CycloCheck { labeling, .. } => {
            labelings(*labeling).iter().map(|l| l.name()).collect()
        }
        _ => Labeling::ALL.iter().map(|l| l.name()).collect(),
    };
    let lc = match cmd {
        Command::Logconcavity {
            mode: LcMode::Absolute,
            ..
        } => LogConcavityMode::Absolute,
        _ => LogConcavityMode::Literal,
    };
    json!({
        "sign_convention": "direct",
        "contraction_convention": contraction.name(),
        "labeling": labeling,
        "log_concavity_mode": lc.name(),
        "property_i_modes": [PropertyIMode::Literal.name(), PropertyIMode::Strict.name()],
    })
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Chromatic { .. } => "chromatic",
        Command::OracleCount { .. } => "oracle-count",
        Command::VerifyAc { .. } => "verify-ac",
        Command::Hilbert { .. } => "hilbert",
        Command::VerifyTheorem { .. } => "verify-theorem",
        Command::Lift { .. } => "lift",
        Command::VerifyCc { .. } => "verify-cc",
        Command::HilbWindow { .. } => "hilb-window",
        Command::Homology { .. } => "homology",
        Command::CycloPoly { .. } => "cyclo-poly",
        Command::CycloCheck { .. } => "cyclo-check",
        Command::Logconcavity { .. } => "logconcavity",
        Command::DehnSommerville { .. } => "dehn-sommerville",
        Command::Reciprocity { .. } => "reciprocity",
        Command::Uniform { .. } => "uniform",
        Command::Sweep { .. } => "sweep",
    }
}

fn run(cmd: &Command) -> Res<Output> {
    match cmd {
        Command::Chromatic { file } => {
            let (poly, extra) = match located(file, parse_input(&read(file)?))? {
                Input::Complex { complex, .. } => (chromatic_polynomial(&complex)?, Value::Null),
                Input::Graph { graph, .. } => {
                    let via_complex = chromatic_polynomial(&complex_of_graph(&graph)?)?;
                    let dc = graph_chromatic(&graph)?;
                    let agree = dc == via_complex;
                    (
                        via_complex,
                        json!({"deletion_contraction": dc.to_string(), "agrees": agree}),
                    )
                }
            };
            let mut json = json!({"polynomial": poly.to_string(), "coeffs": poly});
            if !extra.is_null() {
                json["graph"] = extra;
            }
            Ok(Output {
                text: poly.to_string(),
                json,
            })
        }
        Command::OracleCount { file, q } => {
            let s = load_complex(file)?;
            let count = finite_model_count(&s, *q)?;
            let value = chromatic_polynomial(&s)?.evaluate_i64(*q as i64);
            let agrees = value == count.into();
            Ok(Output {
                text: format!("count = {count}\npolynomial value = {value}\nagrees = {agrees}"),
                json: json!({"q": q, "count": count, "polynomial_value": value.to_string(), "agrees": agrees}),
            })
        }
        Command::VerifyAc {
            file,
            nonface,
            convention,
        } => {
            let s = load_complex(file)?;
            let mut r = verify_addition_contraction(&s, nonface)?;
            if let Some(c) = convention {
                let name = match c {
                    ConventionArg::Merge => ContractionConvention::MergeVertex.name(),
                    ConventionArg::Remove => ContractionConvention::RemoveOnly.name(),
                };
                r.verdict = r.sub(name).expect("both conventions reported").verdict;
                r.set_detail("selected_convention", name);
            }
            Ok(Output::report(r))
        }
        Command::Hilbert { file, expand } => {
            let s = load_complex(file)?;
            let k = numerator_by_inclusion_exclusion(s.minimal_nonfaces())
                .or_else(|_| Ok::<_, Error>(numerator_from_h(&s)))?;
            let h = h_vector(&s);
            let f = f_vector_big(&s);
            let mut json = json!({
                "k": k.poly.to_string(),
                "k_coeffs": k.poly,
                "k_source": format!("{:?}", k.source),
                "h_vector": h.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "f_vector": f.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "d": h.d(),
                "n": s.vertex_count(),
            });
            let mut text = format!(
                "K(t) = {}\nh = ({})\nf = ({})\nd = {}\nn = {}\n",
                k.poly,
                joined(&h.entries),
                joined(&f),
                h.d(),
                s.vertex_count()
            );
            if let Some(m) = expand {
                let r = cross_check(&s, *m)?;
                text.push_str(&r.render());
                json["expansion"] = serde_json::to_value(&r).expect("report serializes");
            }
            Ok(Output { json, text })
        }
        Command::VerifyTheorem { file, alpha, .. } => {
            let s = load_complex(file)?;
            match alpha_or_search(&s, alpha.as_ref())? {
                None => Ok(Output::report(
                    CheckReport::new("main_theorem", chromhilb::Verdict::NotApplicable)
                        .with_detail("alpha_search", "NOT_FOUND"),
                )),
                Some(a) => {
                    let mut r = verify_main_theorem(&s, &a)?;
                    r.set_detail("alpha", serde_json::to_value(&a).expect("serializable"));
                    r.sub_reports
                        .push(check_property_i(&a, PropertyIMode::Literal)?);
                    let mut strict = check_property_i(&a, PropertyIMode::Strict)?;
                    strict.check = "property_i_strict".into();
                    r.sub_reports.push(strict);
                    Ok(Output::report(r))
                }
            }
        }
        Command::Lift { file, mode } => {
            let t = load_complex(file)?;
            let (s, a) = lift(&t, *mode)?;
            let json = json!({
                "mode": lift_name(*mode),
                "complex": complex_to_json(&s, None),
                "alpha": a,
                "chi_c": chromatic_polynomial(&s).map(|p| p.to_string()).unwrap_or_default(),
            });
            Ok(Output {
                text: serde_json::to_string_pretty(&json).expect("json"),
                json,
            })
        }
        Command::VerifyCc { file, a } => Ok(Output::report(verify_constant_component(
            &load_complex(file)?,
            *a,
        )?)),
        Command::HilbWindow { file, a } => {
            let (_, r) = hilbert_polynomial_window(&load_complex(file)?, *a)?;
            Ok(Output::report(r))
        }
        Command::Homology { file } => {
            let h = reduced_homology(&load_complex(file)?)?;
            let text = std::iter::once(format!("{:>6}  {:>5}  torsion", "degree", "betti"))
                .chain(h.iter().map(|g| {
                    let t: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
                    format!("{:>6}  {:>5}  {}", g.degree, g.rank, t.join(","))
                }))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output {
                json: json!({"homology": h}),
                text,
            })
        }
        Command::CycloPoly { n } => {
            let p = cyclotomic_polynomial(*n)?;
            Ok(Output {
                text: p.display_in("x"),
                json: json!({"n": n, "polynomial": p.display_in("x"), "coeffs": p}),
            })
        }
        Command::CycloCheck {
            primes,
            j,
            mode,
            labeling,
        } => {
            let spec = CyclotomicSpec::new(primes.clone())?;
            let labs = labelings(*labeling);
            let one = |j: u64| match mode {
                CycloMode::Cycltop => check_cycltop(&spec, j, &labs),
                CycloMode::Cyclcheck => check_cyclcheck(&spec, j, &labs),
            };
            let r = match j {
                Some(j) if *j > spec.phi() => {
                    return Err(Failure::Usage(format!(
                        "--j must be at most phi(n) = {}",
                        spec.phi()
                    )))
                }
                Some(j) => one(*j)?,
                None => {
                    let name = match mode {
                        CycloMode::Cycltop => "cycltop",
                        CycloMode::Cyclcheck => "cyclcheck",
                    };
                    scan(&spec, name, one)?
                }
            };
            Ok(Output::report(r))
        }
        Command::Logconcavity { file, alpha, mode } => {
            let s = load_complex(file)?;
            let a = alpha.as_ref().map(|p| load_alpha(p)).transpose()?;
            let mode = match mode {
                LcMode::Literal => LogConcavityMode::Literal,
                LcMode::Absolute => LogConcavityMode::Absolute,
            };
            Ok(Output::report(log_concavity_report(&s, a.as_ref(), mode)?))
        }
        Command::DehnSommerville { file } => {
            Ok(Output::report(dehn_sommerville_check(&load_complex(file)?)))
        }
        Command::Reciprocity { file, alpha } => {
            let s = load_complex(file)?;
            let a = alpha_or_search(&s, alpha.as_ref())?.ok_or_else(|| {
                Failure::Lib(Error::Invalid("no valid alpha assignment found".into()))
            })?;
            Ok(Output::report(reciprocity_report(&s, &a)?))
        }
        Command::Uniform { n, r, lift: mode } => {
            let u = uniform_matroid_complex(*n, *r)?;
            let h = h_vector(&u);
            let mut json = json!({
                "complex": complex_to_json(&u, Some(&format!("U_{n}^{r}"))),
                "f_vector": u.f_vector(),
                "h_vector": h.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
            });
            let mut text = format!("f = {:?}\nh = ({})\n", u.f_vector(), joined(&h.entries));
            if let Some(mode) = mode {
                let (s, a) = lift(&u, *mode)?;
                let t = auxiliary_complex(&a)?;
                let chi = chromhilb::auxiliary::chromatic_via_auxiliary(&t, s.vertex_count())?;
                json["lift"] = json!({
                    "mode": lift_name(*mode),
                    "minimal_nonface_count": s.minimal_nonfaces().len(),
                    "vertices": s.vertices(),
                    "chi_c": chi.to_string(),
                });
                text.push_str(&format!("lift ({}) chi_c = {chi}\n", lift_name(*mode)));
            }
            Ok(Output { json, text })
        }
        Command::Sweep { seed, count, out } => {
            let csv = rows_to_csv(&run_sweep(*seed, *count)?)?;
            match out {
                Some(p) => {
                    std::fs::write(p, &csv)
                        .map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
                    Ok(Output {
                        json: json!({"out": p.display().to_string(), "rows": csv.lines().count() - 1}),
                        text: format!("wrote {}", p.display()),
                    })
                }
                None => Ok(Output {
                    json: Value::String(csv.clone()),
                    text: csv,
                }),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            let raw_csv = matches!(cli.command, Command::Sweep { out: None, .. });
            let body = if cli.pretty || raw_csv {
                out.text.trim_end().to_string()
            } else {
                let envelope = json!({
                    "command": command_name(&cli.command),
                    "conventions": conventions(&cli.command),
                    "result": out.json,
                });
                serde_json::to_string(&envelope).expect("json")
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) if e.is_guard() => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

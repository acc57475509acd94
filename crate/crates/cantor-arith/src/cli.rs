//! Command-line front end. One thin binary dispatches to the library:
//! `check`, `image`, `measure`, `intersect`, `verify`, `fermat`.
//!
//! Exit status: 0 on pass / Proved / determined answer, 1 on assertion
//! failure, Inconclusive or Unknown, 2 on usage or input errors.
//! Output is deterministic: identical arguments and files give identical
//! bytes. Every rational in a report is an exact string; decimal fields
//! are non-normative renderings.

use crate::apps;
use crate::enclosure::{constant_enclosure, ConstantName};
use crate::error::{Error, Result};
use crate::expr::parse_expr;
use crate::image::{
    image_exact, image_outer, outer_measure_sequence, scaled_intersection, Exactness, ImageResult,
    IntersectAnswer, Scale,
};
use crate::interval::{union_decimal, IntervalUnion};
use crate::rational::{decimal_string, parse_rational, rational_string};
use crate::set_spec::load_system;
use crate::svg::render_rows;
use crate::system::{CantorSystem, SelfSimilarSystem};
use crate::theorems::{
    check_cor_arithmetic_two, check_cor_astels_ext, check_cor_interval_two,
    check_cor_multiplication, check_cor_sum, check_thm_arithmetic_sss, check_thm_cantor,
    check_thm_intersection, check_thm_main, check_thm_ratio_two, ArithmeticTwoMode, Conclusion,
    Status, TheoremId, Verdict,
};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Debug, Parser)]
#[command(
    name = "cantor-arith",
    about = "Verified exact arithmetic on Cantor and self-similar sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Debug, Args)]
struct CommonSets {
    /// Set-specification file (repeat once per coordinate)
    #[arg(long = "set", value_name = "FILE")]
    sets: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a theorem checker and print its verdict
    Check {
        /// Theorem id: cantor | cor-sum | cor-interval-two | intersection |
        /// arithmetic | cor-arithmetic-two | cor-multiplication | ratio-two |
        /// main | astels-ext
        theorem: String,
        /// Expression f over x1..xd (where the theorem takes one)
        #[arg(long = "f")]
        expr: Option<String>,
        #[command(flatten)]
        sets: CommonSets,
        /// Scale a (intersection checker)
        #[arg(long)]
        a: Option<String>,
        /// Scale b (intersection checker)
        #[arg(long)]
        b: Option<String>,
        /// Mode for cor-arithmetic-two: interval | interior
        #[arg(long)]
        mode: Option<String>,
        /// Cylinder word for coordinate 1 in interior mode (comma-separated
        /// 0-based map indices; empty for the whole hull)
        #[arg(long, value_name = "WORD")]
        word1: Option<String>,
        /// Cylinder word for coordinate 2 in interior mode
        #[arg(long, value_name = "WORD")]
        word2: Option<String>,
        /// Corner-search depth for cor-multiplication
        #[arg(long, default_value_t = 2)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compute an image: outer cover at a depth, or exact via a theorem
    Image {
        #[arg(long = "f")]
        expr: String,
        #[command(flatten)]
        sets: CommonSets,
        /// Refinement depth for the outer cover
        #[arg(long, default_value_t = 1)]
        depth: u32,
        /// Prove exactness through this theorem instead of covering
        #[arg(long)]
        theorem: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Outer-measure sequence of an image at depths 0..=max-depth
    Measure {
        #[arg(long = "f")]
        expr: String,
        #[command(flatten)]
        sets: CommonSets,
        #[arg(long, default_value_t = 6)]
        max_depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decide whether a·K₁ ∩ b·K₂ is nonempty (0 excluded)
    Intersect {
        #[command(flatten)]
        sets: CommonSets,
        /// Rational ("3/2") or constant name (e | pi | sqrt2)
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Enclosure precision in bits for constant scales
        #[arg(long, default_value_t = 128)]
        precision: u32,
        #[arg(long, default_value_t = 1)]
        depth: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run a scripted verification and print its report
    Verify {
        /// App id: steinhaus | examples-3 | division-set | erdos-straus |
        /// constants | cc-measure | thickness-criteria
        app: String,
        /// Scaling extensions for erdos-straus
        #[arg(long, default_value_t = 2)]
        m: u32,
        /// Scale range for division-set
        #[arg(long, default_value_t = 4)]
        n: u32,
        /// Depth cap for cc-measure
        #[arg(long, default_value_t = 8)]
        max_depth: u32,
        /// λ for constants
        #[arg(long, default_value = "1/3")]
        lambda: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Fermat-equation tooling on the two-branch λ system
    Fermat {
        #[command(subcommand)]
        sub: FermatCommand,
    },
}

#[derive(Debug, Subcommand)]
enum FermatCommand {
    /// Admissible α ranges of the solution bracket at (λ, n, k)
    Ranges {
        #[arg(long, default_value = "1/3")]
        lambda: String,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        k: i64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The x = y solution family: 2^(1/n) containment and λ-scaling closure
    Family {
        #[arg(long, default_value = "1/3")]
        lambda: String,
        #[arg(long, default_value_t = 10)]
        n_max: u32,
        #[arg(long, default_value_t = 3)]
        m_max: u32,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Entry point used by the binary and by tests. Returns the exit status.
pub fn run<I, S>(args: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints its own help/version through this path
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn dispatch(cmd: Command) -> Result<i32> {
    match cmd {
        Command::Check {
            theorem,
            expr,
            sets,
            a,
            b,
            mode,
            word1,
            word2,
            depth,
            format,
        } => cmd_check(
            &theorem, expr, sets, a, b, mode, word1, word2, depth, format,
        ),
        Command::Image {
            expr,
            sets,
            depth,
            theorem,
            format,
        } => cmd_image(&expr, sets, depth, theorem, format),
        Command::Measure {
            expr,
            sets,
            max_depth,
            format,
        } => cmd_measure(&expr, sets, max_depth, format),
        Command::Intersect {
            sets,
            a,
            b,
            precision,
            depth,
            format,
        } => cmd_intersect(sets, &a, &b, precision, depth, format),
        Command::Verify {
            app,
            m,
            n,
            max_depth,
            lambda,
            format,
        } => cmd_verify(&app, m, n, max_depth, &lambda, format),
        Command::Fermat { sub } => cmd_fermat(sub),
    }
}

fn load_all(sets: &CommonSets, expected: Option<usize>) -> Result<Vec<CantorSystem>> {
    if let Some(n) = expected {
        if sets.sets.len() != n {
            return Err(Error::Usage(format!(
                "expected {n} --set files, got {}",
                sets.sets.len()
            )));
        }
    } else if sets.sets.len() < 2 {
        return Err(Error::Usage("need at least two --set files".into()));
    }
    sets.sets.iter().map(|p| load_system(p)).collect()
}

fn self_similar_only(systems: Vec<CantorSystem>) -> Result<Vec<SelfSimilarSystem>> {
    systems
        .into_iter()
        .map(|s| match s {
            CantorSystem::SelfSimilar(ss) => Ok(ss),
            CantorSystem::Moran(_) => Err(Error::Usage(
                "this theorem needs self-similar systems".into(),
            )),
        })
        .collect()
}

fn require_expr(expr: Option<String>, dims: usize) -> Result<crate::expr::Expr> {
    let text = expr.ok_or_else(|| Error::Usage("this theorem needs --f".into()))?;
    parse_expr(&text, dims)
}

fn parse_word(word: Option<String>) -> Result<Vec<usize>> {
    match word {
        None => Ok(Vec::new()),
        Some(w) if w.trim().is_empty() => Ok(Vec::new()),
        Some(w) => w
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Usage(format!("bad map index `{tok}` in word")))
            })
            .collect(),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    theorem: &str,
    expr: Option<String>,
    sets: CommonSets,
    a: Option<String>,
    b: Option<String>,
    mode: Option<String>,
    word1: Option<String>,
    word2: Option<String>,
    depth: u32,
    format: Format,
) -> Result<i32> {
    let id = TheoremId::parse(theorem)?;
    let verdict = match id {
        TheoremId::Cantor => {
            let systems = load_all(&sets, None)?;
            check_thm_cantor(&require_expr(expr, systems.len())?, &systems)?
        }
        TheoremId::CorSum => check_cor_sum(&load_all(&sets, None)?)?,
        TheoremId::CorIntervalTwo => {
            let systems = load_all(&sets, Some(2))?;
            check_cor_interval_two(&require_expr(expr, 2)?, &systems[0], &systems[1])?
        }
        TheoremId::Intersection => {
            let systems = load_all(&sets, Some(2))?;
            let ra = parse_rational(&a.ok_or_else(|| Error::Usage("needs --a".into()))?)?;
            let rb = parse_rational(&b.ok_or_else(|| Error::Usage("needs --b".into()))?)?;
            check_thm_intersection(&systems[0], &systems[1], &ra, &rb)?
        }
        TheoremId::ArithmeticSss => {
            let systems = self_similar_only(load_all(&sets, None)?)?;
            check_thm_arithmetic_sss(&require_expr(expr, systems.len())?, &systems)?
        }
        TheoremId::CorArithmeticTwo => {
            let systems = self_similar_only(load_all(&sets, Some(2))?)?;
            let mode = match mode.as_deref().unwrap_or("interval") {
                "interval" => ArithmeticTwoMode::Interval,
                "interior" => ArithmeticTwoMode::Interior {
                    word1: parse_word(word1)?,
                    word2: parse_word(word2)?,
                },
                other => return Err(Error::Usage(format!("unknown mode `{other}`"))),
            };
            check_cor_arithmetic_two(&require_expr(expr, 2)?, &systems[0], &systems[1], mode)?
        }
        TheoremId::CorMultiplication => {
            let systems = self_similar_only(load_all(&sets, Some(2))?)?;
            check_cor_multiplication(&systems[0], &systems[1], depth)?
        }
        TheoremId::RatioTwo => {
            let systems = load_all(&sets, Some(2))?;
            check_thm_ratio_two(&require_expr(expr, 2)?, &systems[0], &systems[1])?
        }
        TheoremId::Main => {
            let systems = load_all(&sets, None)?;
            check_thm_main(&require_expr(expr, systems.len())?, &systems)?
        }
        TheoremId::AstelsExt => check_cor_astels_ext(&load_all(&sets, None)?)?,
    };
    emit_verdict(&verdict, format)?;
    Ok(if verdict.is_proved() { 0 } else { 1 })
}

#[derive(Serialize)]
struct WitnessOut {
    name: String,
    value: String,
    decimal: String,
}

#[derive(Serialize)]
struct UnionOut {
    parts: Vec<[String; 2]>,
    decimal: String,
}

#[derive(Serialize)]
struct ConclusionOut {
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    image: Option<UnionOut>,
    #[serde(skip_serializing_if = "Option::is_none")]
    intersects: Option<bool>,
}

#[derive(Serialize)]
struct VerdictOut {
    theorem_id: String,
    status: &'static str,
    witness: Vec<WitnessOut>,
    notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    conclusion: Option<ConclusionOut>,
}

fn union_out(u: &IntervalUnion) -> UnionOut {
    UnionOut {
        parts: u
            .parts()
            .iter()
            .map(|p| [rational_string(p.lo()), rational_string(p.hi())])
            .collect(),
        decimal: union_decimal(u, 20),
    }
}

fn emit_verdict(v: &Verdict, format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let out = VerdictOut {
                theorem_id: v.theorem.as_str().to_string(),
                status: match v.status {
                    Status::Proved => "Proved",
                    Status::Inconclusive => "Inconclusive",
                },
                witness: v
                    .witness
                    .iter()
                    .map(|(n, r)| WitnessOut {
                        name: n.clone(),
                        value: rational_string(r),
                        decimal: decimal_string(r, 20),
                    })
                    .collect(),
                notes: v.notes.clone(),
                conclusion: v.conclusion.as_ref().map(|c| match c {
                    Conclusion::Image(u) => ConclusionOut {
                        kind: "image",
                        image: Some(union_out(u)),
                        intersects: None,
                    },
                    Conclusion::Membership(m) => ConclusionOut {
                        kind: "membership",
                        image: None,
                        intersects: Some(*m),
                    },
                }),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
        }
        Format::Text => {
            println!("theorem: {}", v.theorem.as_str());
            println!(
                "status: {}",
                match v.status {
                    Status::Proved => "Proved",
                    Status::Inconclusive => "Inconclusive",
                }
            );
            for (name, value) in &v.witness {
                println!(
                    "  {name} = {} ({})",
                    rational_string(value),
                    decimal_string(value, 12)
                );
            }
            for n in &v.notes {
                println!("  note: {n}");
            }
            match &v.conclusion {
                Some(Conclusion::Image(u)) => println!("image: {u}"),
                Some(Conclusion::Membership(m)) => {
                    println!("intersects: {}", if *m { "yes" } else { "no" })
                }
                None => {}
            }
        }
        Format::Svg => return Err(Error::Usage("svg output applies to `image` only".into())),
    }
    Ok(())
}

fn cmd_image(
    expr: &str,
    sets: CommonSets,
    depth: u32,
    theorem: Option<String>,
    format: Format,
) -> Result<i32> {
    let systems = load_all(&sets, None)?;
    let f = parse_expr(expr, systems.len())?;
    let result: ImageResult = match theorem {
        Some(id) => {
            let verdict = match TheoremId::parse(&id)? {
                TheoremId::Cantor => check_thm_cantor(&f, &systems)?,
                TheoremId::CorSum => check_cor_sum(&systems)?,
                TheoremId::CorIntervalTwo => check_cor_interval_two(&f, &systems[0], &systems[1])?,
                TheoremId::ArithmeticSss => {
                    check_thm_arithmetic_sss(&f, &self_similar_only(systems.clone())?)?
                }
                TheoremId::RatioTwo => check_thm_ratio_two(&f, &systems[0], &systems[1])?,
                other => {
                    return Err(Error::Usage(format!(
                        "theorem `{}` does not certify an exact image",
                        other.as_str()
                    )))
                }
            };
            image_exact(&verdict)?
        }
        None => image_outer(&f, &systems, depth)?,
    };
    match format {
        Format::Svg => {
            let mut rows = Vec::new();
            for d in 0..=result.depth {
                rows.push((format!("depth {d}"), image_outer(&f, &systems, d)?.set));
            }
            print!("{}", render_rows(&rows));
        }
        Format::Json => {
            #[derive(Serialize)]
            struct ImageOut {
                exactness: &'static str,
                depth: u32,
                #[serde(skip_serializing_if = "Option::is_none")]
                theorem_id: Option<String>,
                set: UnionOut,
                measure: String,
            }
            let out = ImageOut {
                exactness: match result.exactness {
                    Exactness::Exact => "exact",
                    Exactness::Outer => "outer",
                },
                depth: result.depth,
                theorem_id: result.theorem.map(|t| t.as_str().to_string()),
                set: union_out(&result.set),
                measure: rational_string(&result.set.measure()),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
        }
        Format::Text => {
            println!(
                "{} image at depth {}: {}",
                match result.exactness {
                    Exactness::Exact => "exact",
                    Exactness::Outer => "outer",
                },
                result.depth,
                result.set
            );
            println!("  ≈ {}", union_decimal(&result.set, 12));
            println!("  measure = {}", rational_string(&result.set.measure()));
        }
    }
    Ok(0)
}

fn cmd_measure(expr: &str, sets: CommonSets, max_depth: u32, format: Format) -> Result<i32> {
    let systems = load_all(&sets, None)?;
    let f = parse_expr(expr, systems.len())?;
    let depths: Vec<u32> = (0..=max_depth).collect();
    let seq = outer_measure_sequence(&f, &systems, &depths)?;
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct MeasureOut {
                depths: Vec<u32>,
                measures: Vec<String>,
                decimals: Vec<String>,
            }
            let out = MeasureOut {
                depths,
                measures: seq.iter().map(rational_string).collect(),
                decimals: seq.iter().map(|r| decimal_string(r, 20)).collect(),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&out).expect("serializable")
            );
        }
        _ => {
            for (d, m) in depths.iter().zip(&seq) {
                println!(
                    "depth {d}: {} ({})",
                    rational_string(m),
                    decimal_string(m, 12)
                );
            }
        }
    }
    Ok(0)
}

fn parse_scale(text: &str, precision: u32) -> Result<Scale> {
    if let Ok(r) = parse_rational(text) {
        return Ok(Scale::Exact(r));
    }
    let name: ConstantName = text.parse()?;
    Ok(Scale::Enclosed(constant_enclosure(name, precision)?))
}

fn cmd_intersect(
    sets: CommonSets,
    a: &str,
    b: &str,
    precision: u32,
    depth: u32,
    format: Format,
) -> Result<i32> {
    let systems = load_all(&sets, Some(2))?;
    let sa = parse_scale(a, precision)?;
    let sb = parse_scale(b, precision)?;
    let answer = scaled_intersection(&systems[0], &systems[1], &sa, &sb, depth)?;
    let label = match answer {
        IntersectAnswer::Intersect => "intersect",
        IntersectAnswer::Disjoint => "disjoint",
        IntersectAnswer::Unknown => "unknown",
    };
    match format {
        Format::Json => println!("{{\n  \"answer\": \"{label}\"\n}}"),
        _ => println!("{label}"),
    }
    Ok(if answer == IntersectAnswer::Unknown {
        1
    } else {
        0
    })
}

fn cmd_verify(
    app: &str,
    m: u32,
    n: u32,
    max_depth: u32,
    lambda: &str,
    format: Format,
) -> Result<i32> {
    let report = match app {
        "steinhaus" => apps::verify_steinhaus()?,
        "examples-3" => apps::verify_examples_3()?,
        "division-set" => apps::verify_division_set(n)?,
        "erdos-straus" => apps::erdos_straus_cover(m)?,
        "constants" => apps::constants_intersections(&parse_rational(lambda)?)?,
        "cc-measure" => apps::cc_measure_experiment(max_depth)?.0,
        "thickness-criteria" => apps::verify_thickness_criteria()?,
        other => return Err(Error::Usage(format!("unknown verification `{other}`"))),
    };
    match format {
        Format::Json => {
            println!(
                "{}",
                serde_json::to_string_pretty(&report).expect("serializable")
            )
        }
        _ => print!("{}", report.render_text()),
    }
    Ok(if report.pass { 0 } else { 1 })
}

fn cmd_fermat(sub: FermatCommand) -> Result<i32> {
    match sub {
        FermatCommand::Ranges {
            lambda,
            n,
            k,
            format,
        } => {
            let bracket = apps::fermat_alpha_ranges(&parse_rational(&lambda)?, n, k)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct RangeOut {
                        kind: &'static str,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        lo: Option<String>,
                        #[serde(skip_serializing_if = "Option::is_none")]
                        hi: Option<String>,
                    }
                    #[derive(Serialize)]
                    struct BracketOut {
                        lambda: String,
                        n: u32,
                        k: i64,
                        line1: RangeOut,
                        line2: RangeOut,
                    }
                    let render = |r: &apps::AlphaRange| match r {
                        apps::AlphaRange::Empty => RangeOut {
                            kind: "empty",
                            lo: None,
                            hi: None,
                        },
                        apps::AlphaRange::Bounded { lo, hi } => RangeOut {
                            kind: "bounded",
                            lo: Some(rational_string(lo)),
                            hi: Some(rational_string(hi)),
                        },
                        apps::AlphaRange::Unbounded { lo } => RangeOut {
                            kind: "unbounded",
                            lo: Some(rational_string(lo)),
                            hi: None,
                        },
                    };
                    let out = BracketOut {
                        lambda: rational_string(&bracket.lambda),
                        n: bracket.n,
                        k: bracket.k,
                        line1: render(&bracket.line1),
                        line2: render(&bracket.line2),
                    };
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&out).expect("serializable")
                    );
                }
                _ => {
                    println!(
                        "lambda = {}, n = {}, k = {}",
                        rational_string(&bracket.lambda),
                        bracket.n,
                        bracket.k
                    );
                    println!("line 1 (y = (1+α)x): α ∈ {}", bracket.line1);
                    println!("line 2 (x = (1+α)y): α ∈ {}", bracket.line2);
                }
            }
            Ok(0)
        }
        FermatCommand::Family {
            lambda,
            n_max,
            m_max,
            format,
        } => {
            let report = apps::fermat_solution_family(&parse_rational(&lambda)?, n_max, m_max)?;
            match format {
                Format::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report).expect("serializable")
                    )
                }
                _ => print!("{}", report.render_text()),
            }
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}

/// Convenience for `fn main`.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}

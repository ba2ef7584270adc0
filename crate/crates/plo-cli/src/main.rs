//! Command-line surface for the `plo` library.
//!
//! Reads maps from `--in FILE` or stdin (plain node lists or JSON
//! documents, sniffed), writes results to `--out FILE` or stdout as text
//! or JSON, and never renders a rational as a decimal. Exit codes: 0 for
//! success (a clean "none found" included), 1 for usage or input errors,
//! 2 for a failed verification run, 3 for a resource cap.

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use plo::{
    bouncepoints, bump_code, check_injectivity, corners, crossing_pair, detect_transition_chain,
    io as plio, maximal_towers, model_bump, nested_tower, one_bump, orbitals, run_verify,
    search_transition_chain, signed_orbitals, wreath_generators, BallSearch, Direction, GenSet,
    Interval, PLMap, Rat, SignedOrbital, Tower, VerifyOptions, SUITES,
};

#[derive(Parser)]
#[command(
    name = "plo",
    version,
    about = "Exact computations with piecewise-linear homeomorphisms of [0,1]"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct InArg {
    /// Input file of maps, plain text or JSON; stdin when omitted
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct OutArgs {
    /// Output file; stdout when omitted
    #[arg(long = "out", value_name = "FILE")]
    output: Option<PathBuf>,
    /// Output encoding
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Evaluate every input map at a rational point
    Eval {
        /// Point in [0,1], written as p/q
        point: String,
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compose the input maps in order into a single map
    Compose {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List each input map's orbitals with their directions
    Orbitals {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Detect a transition chain among the input maps' orbitals, or search
    /// the ball of the generated group when --radius is given
    Chains {
        /// Search words up to this length instead of only the inputs
        #[arg(long)]
        radius: Option<usize>,
        /// Element cap for the ball search
        #[arg(long, default_value_t = 100_000)]
        cap: usize,
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Enumerate maximal towers among the input maps' signed orbitals
    Towers {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Check that every orbital lies inside a fundamental domain of every
    /// strictly larger one
    Fundamental {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Compute pairwise-disjoint witness intervals for maps forming a tower
    Witness {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List bouncepoints of a pair of maps
    Bounce {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// List corners of a pair of maps
    Corners {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Encode single-orbital bumps against each other and check the codes
    /// stay pairwise distinct
    Phi {
        #[command(flatten)]
        input: InArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Emit a named construction as a map document
    Build {
        /// One of: model, one-bump L R, crossing-pair, nested DEPTH,
        /// wreath IL IR OL OR
        target: String,
        /// Rational or integer parameters for the target
        args: Vec<String>,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Render the input maps as a standalone SVG plot
    Svg {
        /// Pixel width of the unit square
        #[arg(long, default_value_t = 400)]
        scale: u32,
        /// Pixel margin around the square
        #[arg(long, default_value_t = 40)]
        margin: u32,
        #[command(flatten)]
        input: InArg,
        /// Output file; stdout when omitted
        #[arg(long = "out", value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Run named property suites with a deterministic seed
    Verify {
        /// Suites to run; all of them when omitted
        suites: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per suite
        #[arg(long, default_value_t = 100)]
        size: usize,
        #[command(flatten)]
        out: OutArgs,
    },
}

enum CliError {
    Lib(plo::Error),
    File(PathBuf, std::io::Error),
    Stdio(std::io::Error),
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::File(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Stdio(e) => write!(f, "stdin: {e}"),
            CliError::Usage(msg) => write!(f, "{msg}"),
        }
    }
}

impl From<plo::Error> for CliError {
    fn from(e: plo::Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Lib(plo::Error::ResourceLimit(_)) => ExitCode::from(3),
            _ => ExitCode::from(1),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let started = Instant::now();
    let outcome = run(cli.command);
    eprintln!("completed in {:.3}s", started.elapsed().as_secs_f64());
    match outcome {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn read_input(input: &InArg) -> Result<Vec<(String, PLMap)>, CliError> {
    let text = match &input.input {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| CliError::File(path.clone(), e))?
        }
        None => std::io::read_to_string(std::io::stdin()).map_err(CliError::Stdio)?,
    };
    Ok(plio::load_maps(&text)?)
}

fn read_maps(input: &InArg) -> Result<Vec<(String, PLMap)>, CliError> {
    let maps = read_input(input)?;
    if maps.is_empty() {
        return Err(CliError::Usage("input contains no maps".to_string()));
    }
    Ok(maps)
}

fn read_pair(input: &InArg) -> Result<((String, PLMap), (String, PLMap)), CliError> {
    let mut maps = read_maps(input)?;
    if maps.len() != 2 {
        return Err(CliError::Usage(format!(
            "expected exactly two maps, found {}",
            maps.len()
        )));
    }
    let second = maps.pop().unwrap();
    let first = maps.pop().unwrap();
    Ok((first, second))
}

fn write_output(output: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, content).map_err(|e| CliError::File(path.clone(), e))
        }
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn emit(out: &OutArgs, text: String, value: serde_json::Value) -> Result<(), CliError> {
    let content = match out.format {
        Format::Text => text,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
            s.push('\n');
            s
        }
    };
    write_output(&out.output, &content)
}

fn direction_name(d: Direction) -> &'static str {
    match d {
        Direction::Right => "right",
        Direction::Left => "left",
    }
}

fn parse_rat(text: &str) -> Result<Rat, CliError> {
    Rat::from_str(text).map_err(|_| CliError::Usage(format!("not a rational: {text}")))
}

fn run(cmd: Cmd) -> Result<ExitCode, CliError> {
    match cmd {
        Cmd::Eval { point, input, out } => {
            let x = parse_rat(&point)?;
            if x < Rat::zero() || x > Rat::one() {
                return Err(CliError::Usage(format!("point {x} is outside [0,1]")));
            }
            let maps = read_maps(&input)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for (name, m) in &maps {
                let y = m.at(&x);
                text.push_str(&format!("{name}: {y}\n"));
                items.push(json!({ "name": name, "point": x, "value": y }));
            }
            emit(&out, text, json!(items))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Compose { input, out } => {
            let maps = read_maps(&input)?;
            let product = maps
                .iter()
                .fold(PLMap::identity(), |acc, (_, m)| acc.then(m));
            let named = vec![("product".to_string(), product)];
            emit(
                &out,
                plio::render_text(&named),
                serde_json::to_value(plio::documents(&named)).expect("maps serialize"),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Orbitals { input, out } => {
            let maps = read_maps(&input)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for (name, m) in &maps {
                let signed: Vec<SignedOrbital> = signed_orbitals(std::slice::from_ref(m));
                if signed.is_empty() {
                    text.push_str(&format!("{name}: fixes every point\n"));
                } else {
                    let pieces: Vec<String> = signed
                        .iter()
                        .map(|s| format!("{} {}", s.orbital(), direction_name(s.direction())))
                        .collect();
                    text.push_str(&format!("{name}: {}\n", pieces.join("; ")));
                }
                let os: Vec<serde_json::Value> = signed
                    .iter()
                    .map(|s| {
                        json!({
                            "left": s.orbital().left(),
                            "right": s.orbital().right(),
                            "direction": direction_name(s.direction()),
                        })
                    })
                    .collect();
                items.push(json!({ "name": name, "orbitals": os }));
            }
            emit(&out, text, json!(items))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chains {
            radius,
            cap,
            input,
            out,
        } => {
            let maps = read_maps(&input)?;
            match radius {
                None => {
                    let bare: Vec<PLMap> = maps.iter().map(|(_, m)| m.clone()).collect();
                    match detect_transition_chain(&bare) {
                        Some(cert) => {
                            emit(
                                &out,
                                format!("transition chain: {cert}\n"),
                                json!({ "certificate": cert }),
                            )?;
                        }
                        None => {
                            emit(
                                &out,
                                "no transition chain\n".to_string(),
                                json!({ "certificate": null }),
                            )?;
                        }
                    }
                }
                Some(radius) => {
                    let gens = GenSet::new("input", maps.iter().map(|(_, m)| m.clone()).collect());
                    let found = search_transition_chain(&gens, radius, cap)?;
                    let text = match &found {
                        BallSearch::Found { certificate, words } => format!(
                            "transition chain from words {} and {}: {certificate}\n",
                            words.0, words.1
                        ),
                        BallSearch::NoneWithinRadius { radius, elements } => format!(
                            "no transition chain among {elements} elements within radius {radius}\n"
                        ),
                    };
                    emit(&out, text, serde_json::to_value(&found).expect("search serializes"))?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Towers { input, out } => {
            let maps = read_maps(&input)?;
            let bare: Vec<PLMap> = maps.iter().map(|(_, m)| m.clone()).collect();
            let pool = signed_orbitals(&bare);
            let towers = maximal_towers(&pool);
            let mut text = String::new();
            for t in &towers {
                text.push_str(&format!("{t}\n"));
            }
            if towers.is_empty() {
                text.push_str("no orbitals\n");
            }
            emit(&out, text, serde_json::to_value(&towers).expect("towers serialize"))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Fundamental { input, out } => {
            let maps = read_maps(&input)?;
            let bare: Vec<PLMap> = maps.iter().map(|(_, m)| m.clone()).collect();
            let pool = signed_orbitals(&bare);
            match plo::chain::fundamental_violation(&pool) {
                None => {
                    emit(
                        &out,
                        "fundamental: every orbital lies inside a fundamental domain of every larger one\n"
                            .to_string(),
                        json!({ "fundamental": true, "violation": null }),
                    )?;
                }
                Some((inner, outer)) => {
                    emit(
                        &out,
                        format!(
                            "not fundamental: {} escapes every fundamental domain of {}\n",
                            inner.orbital(),
                            outer.orbital()
                        ),
                        json!({
                            "fundamental": false,
                            "violation": { "inner": inner.orbital(), "outer": outer.orbital() },
                        }),
                    )?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Witness { input, out } => {
            let maps = read_maps(&input)?;
            let bare: Vec<PLMap> = maps.iter().map(|(_, m)| m.clone()).collect();
            let tower = Tower::new(signed_orbitals(&bare))?;
            let ws = plo::witness_intervals(&tower)?;
            let mut text = String::new();
            let mut items = Vec::new();
            for (w, e) in ws.iter().zip(tower.elements()) {
                text.push_str(&format!("{w} inside {}\n", e.orbital()));
                items.push(json!({ "orbital": e.orbital(), "witness": w }));
            }
            emit(&out, text, json!(items))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bounce { input, out } => {
            let ((_, f), (_, g)) = read_pair(&input)?;
            let points = bouncepoints(&f, &g);
            emit(&out, render_points(&points), json!(points))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Corners { input, out } => {
            let ((_, f), (_, g)) = read_pair(&input)?;
            let points = corners(&f, &g);
            emit(&out, render_points(&points), json!(points))?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Phi { input, out } => {
            let maps = read_maps(&input)?;
            let bare: Vec<PLMap> = maps.iter().map(|(_, m)| m.clone()).collect();
            let first = orbitals(&bare[0]);
            if first.len() != 1 {
                return Err(CliError::Usage(format!(
                    "phi needs single-orbital bumps; {} has {} orbitals",
                    maps[0].0,
                    first.len()
                )));
            }
            let orbital = first.into_iter().next().unwrap();
            let report = check_injectivity(&bare, &orbital)?;
            let mut text = String::new();
            let mut codes = Vec::new();
            for (name, m) in &maps {
                let code = bump_code(m, &orbital, &bare)?;
                text.push_str(&format!("{name}: {code}\n"));
                codes.push(json!({ "name": name, "code": code }));
            }
            text.push_str(&format!(
                "{} bumps on {orbital}: {} distinct codes, {} collisions\n",
                report.total,
                report.distinct_codes,
                report.collisions.len()
            ));
            emit(
                &out,
                text,
                json!({ "orbital": orbital, "codes": codes, "report": report }),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Build { target, args, out } => {
            let named = build_target(&target, &args)?;
            emit(
                &out,
                plio::render_text(&named),
                serde_json::to_value(plio::documents(&named)).expect("maps serialize"),
            )?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Svg {
            scale,
            margin,
            input,
            output,
        } => {
            let maps = read_maps(&input)?;
            let svg = plo::svg::render_svg(&maps, &plo::svg::SvgOptions { scale, margin });
            write_output(&output, &svg)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify {
            suites,
            seed,
            size,
            out,
        } => {
            let chosen: Vec<&str> = if suites.is_empty() {
                SUITES.to_vec()
            } else {
                suites.iter().map(String::as_str).collect()
            };
            let report = run_verify(&chosen, &VerifyOptions { seed, size })?;
            let passed = report.passed;
            emit(&out, report.to_text(), serde_json::to_value(&report).expect("report serializes"))?;
            Ok(if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn render_points(points: &[Rat]) -> String {
    if points.is_empty() {
        "none\n".to_string()
    } else {
        let mut s = points
            .iter()
            .map(Rat::to_string)
            .collect::<Vec<_>>()
            .join(" ");
        s.push('\n');
        s
    }
}

fn build_target(target: &str, args: &[String]) -> Result<Vec<(String, PLMap)>, CliError> {
    let want = |n: usize| -> Result<(), CliError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!(
                "{target} takes {n} argument{}, found {}",
                if n == 1 { "" } else { "s" },
                args.len()
            )))
        }
    };
    match target {
        "model" => {
            want(0)?;
            Ok(vec![("model".to_string(), model_bump())])
        }
        "one-bump" => {
            want(2)?;
            let a = interval_from(&args[0], &args[1])?;
            Ok(vec![("bump".to_string(), one_bump(&a))])
        }
        "crossing-pair" => {
            want(0)?;
            let (f, g) = crossing_pair();
            Ok(vec![("f".to_string(), f), ("g".to_string(), g)])
        }
        "nested" => {
            want(1)?;
            let depth: usize = args[0]
                .parse()
                .map_err(|_| CliError::Usage(format!("not a depth: {}", args[0])))?;
            let (gens, _) = nested_tower(depth)?;
            Ok(gens
                .generators()
                .iter()
                .enumerate()
                .map(|(i, m)| (gens.label(i), m.clone()))
                .collect())
        }
        "wreath" => {
            want(4)?;
            let inner = interval_from(&args[0], &args[1])?;
            let outer = interval_from(&args[2], &args[3])?;
            let gens = wreath_generators(&inner, &outer)?;
            let mut gs = gens.generators().iter();
            let h = gs.next().expect("wreath has two generators").clone();
            let f = gs.next().expect("wreath has two generators").clone();
            Ok(vec![("h".to_string(), h), ("f".to_string(), f)])
        }
        other => Err(CliError::Usage(format!(
            "unknown construction: {other} (try model, one-bump, crossing-pair, nested, wreath)"
        ))),
    }
}

fn interval_from(left: &str, right: &str) -> Result<Interval, CliError> {
    let l = parse_rat(left)?;
    let r = parse_rat(right)?;
    Ok(Interval::try_new(l, r)?)
}

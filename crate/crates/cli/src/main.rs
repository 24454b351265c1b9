use std::fmt::Write as _;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cutseq::bouwmoller as bm;
use cutseq::coding::{characterize, derivation_itinerary, hexagon_scheme, square_scheme, VerdictStatus, Word};
use cutseq::exact::{parse_vec2, Direction};
use cutseq::farey::{farey_map, recognize_direction, DirectionInterval};
use cutseq::surface::{self, render_svg, trace, trace_segments, SurfacePresentation, SvgOptions, Trajectory};
use cutseq::teich;
use cutseq::torus;
use cutseq::verify::{run_suite, Suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "cutseq", version, about = "Cutting sequences on Veech surfaces, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Trace a trajectory and print its cutting sequence.
    Trace {
        #[command(flatten)]
        traj: TrajArgs,
        /// Print a JSON object instead of the bare letters.
        #[arg(long)]
        json: bool,
    },
    /// Run normalize-and-derive rounds on a word.
    Derive {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, value_enum, default_value_t = SchemeId::Hexagon)]
        scheme: SchemeId,
        #[arg(long, default_value_t = 3)]
        rounds: usize,
    },
    /// Read the Farey expansion of the direction off a hexagon cutting sequence.
    Recognize {
        #[command(flatten)]
        word: WordArgs,
        #[arg(long, default_value_t = 6)]
        depth: usize,
    },
    /// Run a verification suite (or `all`) and print a JSON report.
    Verify {
        /// Suite name, or `all`.
        suite: String,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Write an SVG figure.
    Render {
        #[command(subcommand)]
        what: RenderCmd,
    },
    /// The square torus checks.
    SquareVerify {
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Translate a hexagon cutting sequence into the parallelogram alphabet.
    Dict {
        #[arg(long)]
        letters: String,
    },
    /// The word showing that derivation and the dictionary do not commute.
    Noncommute,
    /// Bouw-Möller surface M(3,4).
    Bm {
        #[command(subcommand)]
        what: BmCmd,
    },
    /// Teichmüller disk.
    Teich {
        #[command(subcommand)]
        what: TeichCmd,
    },
}

#[derive(Subcommand)]
enum RenderCmd {
    /// Polygons with a traced trajectory.
    Polygon {
        #[command(flatten)]
        traj: TrajArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Graph of the hexagon Farey map on directions, as a sampled polyline.
    Farey {
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Triangle (or ideal hexagon) tessellation of the disk.
    Tessellation {
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Draw only the sides of the ideal hexagons.
        #[arg(long)]
        hexagons: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Subcommand)]
enum BmCmd {
    /// Derivation on R1 against the trace on R2 for random trajectories.
    Verify {
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 60)]
        n: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Horizontal cylinders of R1 and their inverse moduli.
    Moduli,
    /// The grid graph and its validation against both orthogonal presentations.
    Graph,
}

#[derive(Subcommand)]
enum TeichCmd {
    /// Labels of the sides crossed by the ray of a direction.
    Code {
        /// Direction as an exact vector `x,y`.
        #[arg(long)]
        theta: String,
        #[arg(long, default_value_t = 8)]
        depth: usize,
    },
}

#[derive(Args)]
struct TrajArgs {
    #[arg(long, value_enum, default_value_t = SurfaceId::Hexagon)]
    surface: SurfaceId,
    /// Direction as an exact vector `x,y`.
    #[arg(long)]
    dir: String,
    /// Start point `x,y` inside a polygon.
    #[arg(long)]
    start: String,
    #[arg(long, default_value_t = 20)]
    n: usize,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct WordArgs {
    /// File holding the word; whitespace is ignored.
    #[arg(long)]
    word: Option<PathBuf>,
    #[arg(long)]
    letters: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum SurfaceId {
    Hexagon,
    Square,
    Parallelogram,
    BmR1,
    BmR2,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeId {
    Hexagon,
    Square,
    Bm,
}

fn presentation(s: SurfaceId) -> SurfacePresentation {
    match s {
        SurfaceId::Hexagon => surface::hexagon(),
        SurfaceId::Square => surface::square(),
        SurfaceId::Parallelogram => surface::parallelogram(),
        SurfaceId::BmR1 => bm::build_r1(),
        SurfaceId::BmR2 => bm::build_r2(),
    }
}

fn trajectory(a: &TrajArgs) -> Result<(SurfacePresentation, Trajectory)> {
    let dir = Direction::new(parse_vec2(&a.dir).with_context(|| format!("bad direction {:?}", a.dir))?)?;
    let start = parse_vec2(&a.start).with_context(|| format!("bad start {:?}", a.start))?;
    Ok((presentation(a.surface), Trajectory::new(start, dir)))
}

impl WordArgs {
    fn read(&self) -> Result<Word> {
        let text = match (&self.word, &self.letters) {
            (Some(p), _) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
            (None, Some(s)) => s.clone(),
            (None, None) => bail!("give --word or --letters"),
        };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        Ok(Word::from(s.as_str()))
    }
}

fn print_json(v: &impl serde::Serialize) -> Result<()> {
    emit(&serde_json::to_string_pretty(v)?)
}

/// Writes one line to stdout; a closed pipe is not an error.
fn emit(line: &str) -> Result<()> {
    match writeln!(std::io::stdout().lock(), "{line}") {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn write_out(path: &Path, svg: &str) -> Result<()> {
    std::fs::write(path, svg).with_context(|| format!("writing {}", path.display()))
}

fn direction_json(d: &Direction) -> Value {
    let (x, y) = d.vector().to_f64();
    json!({ "exact": [d.vector().x.to_string(), d.vector().y.to_string()], "angle": y.atan2(x) })
}

fn interval_json(i: &DirectionInterval) -> Value {
    json!({ "lo": direction_json(&i.lo), "hi": direction_json(&i.hi) })
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check the command made passed.
fn run(cli: Cli) -> Result<bool> {
    match cli.cmd {
        Cmd::Trace { traj, json } => {
            let (s, t) = trajectory(&traj)?;
            let w = trace(&s, &t, traj.n)?;
            if json {
                print_json(&json!({ "surface": s.name, "n": traj.n, "word": w }))?;
            } else {
                emit(&w.pretty())?;
            }
            Ok(true)
        }
        Cmd::Derive { word, scheme, rounds } => derive(&word.read()?, scheme, rounds),
        Cmd::Recognize { word, depth } => {
            let w = word.read()?;
            let r = recognize_direction(&hexagon_scheme(), &w, depth)?;
            print_json(&json!({ "expansion": r.entries, "interval": interval_json(&r.interval) }))?;
            Ok(true)
        }
        Cmd::Verify { suite, samples, seed } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse().map_err(anyhow::Error::msg)?]
            };
            let cfg = SuiteConfig { samples, seed };
            let reports: Vec<_> = suites.into_iter().map(|s| run_suite(s, &cfg)).collect();
            let ok = reports.iter().all(|r| r.passed);
            if reports.len() == 1 {
                print_json(&reports[0])?;
            } else {
                print_json(&json!({ "passed": ok, "suites": reports }))?;
            }
            Ok(ok)
        }
        Cmd::SquareVerify { samples, seed } => {
            let r = run_suite(Suite::Square, &SuiteConfig { samples, seed });
            print_json(&r)?;
            Ok(r.passed)
        }
        Cmd::Render { what } => render(what),
        Cmd::Dict { letters } => {
            let w = Word::from(letters.as_str());
            let d = torus::hex_to_parallelogram(&w)?;
            print_json(&json!({ "hexagon": w, "parallelogram": d }))?;
            Ok(true)
        }
        Cmd::Noncommute => {
            let r = torus::noncommutation_witness()?;
            print_json(&r)?;
            Ok(!r.commute)
        }
        Cmd::Bm { what } => match what {
            BmCmd::Verify { samples, n, seed } => {
                let r = bm::verify_theorem_main(samples, n, seed)?;
                print_json(&r)?;
                Ok(r.matched == r.samples)
            }
            BmCmd::Moduli => {
                let r = bm::cylinder_modulus_check()?;
                print_json(&r)?;
                Ok(r.cylinders == 3 && r.all_equal_two_plus_root2)
            }
            BmCmd::Graph => {
                let g = bm::bm_grid_graph();
                let v1 = bm::validate_grid_graph(&g, &bm::build_r1_perp(), bm::PieceFamily::Vertical)?;
                let v2 = bm::validate_grid_graph(&g, &bm::build_r2_perp(), bm::PieceFamily::Horizontal)?;
                let ok = v1.diffs.is_empty() && v2.diffs.is_empty();
                print_json(&json!({ "graph": g, "validations": [v1, v2] }))?;
                Ok(ok)
            }
        },
        Cmd::Teich { what: TeichCmd::Code { theta, depth } } => {
            let d = Direction::new(parse_vec2(&theta).with_context(|| format!("bad direction {theta:?}"))?)?;
            let c = teich::teich_cutting_sequence(&d, depth)?;
            let end = teich::ray_endpoint(&d)?;
            print_json(&json!({ "labels": c.labels, "farey_entries": c.farey_entries(), "endpoint": end }))?;
            Ok(true)
        }
    }
}

fn derive(w: &Word, scheme: SchemeId, rounds: usize) -> Result<bool> {
    match scheme {
        SchemeId::Hexagon | SchemeId::Square => {
            let sch = if matches!(scheme, SchemeId::Hexagon) { hexagon_scheme() } else { square_scheme() };
            let (it, err) = derivation_itinerary(&sch, w, rounds);
            let mut out = json!({ "itinerary": it, "error": err.as_ref().map(|e| e.to_string()) });
            let mut ok = err.is_none();
            if matches!(scheme, SchemeId::Hexagon) {
                let v = characterize(&sch, w, rounds);
                ok &= v.status == VerdictStatus::Pass;
                out["verdict"] = serde_json::to_value(&v)?;
            }
            print_json(&out)?;
            Ok(ok)
        }
        SchemeId::Bm => {
            // the derived word lives on R2, so only one round is defined here
            let (n, k) = bm::bm_scheme().normal_form(w)?;
            let d = bm::bm_derive(&n)?;
            print_json(&json!({ "diagram": k, "normal_form": n, "derived": d }))?;
            Ok(true)
        }
    }
}

fn render(what: RenderCmd) -> Result<bool> {
    match what {
        RenderCmd::Polygon { traj, out } => {
            let (s, t) = trajectory(&traj)?;
            let segs = trace_segments(&s, &t, traj.n)?;
            write_out(&out, &render_svg(&s, &segs, &SvgOptions::default()))?;
        }
        RenderCmd::Farey { samples, out } => write_out(&out, &farey_svg(samples)?)?,
        RenderCmd::Tessellation { depth, hexagons, out } => write_out(&out, &teich::tessellation_svg(depth, hexagons))?,
    }
    Ok(true)
}

/// Angle of the image against angle of the direction, one polyline per
/// branch so jumps are not joined.
fn farey_svg(samples: usize) -> Result<String> {
    use std::f64::consts::PI;
    let (size, m) = (480.0, 20.0);
    let px = |a: f64| m + a / PI * (size - 2.0 * m);
    let py = |a: f64| size - m - a / PI * (size - 2.0 * m);
    let mut branches: Vec<(usize, Vec<(f64, f64)>)> = Vec::new();
    for k in 1..samples {
        let theta = PI * k as f64 / samples as f64;
        let d = teich::direction_from_angle(theta)?;
        let Ok((i, img)) = farey_map(&d) else { continue };
        let (x, y) = img.upper().vector().to_f64();
        let p = (px(theta), py(y.atan2(x)));
        match branches.last_mut() {
            Some((j, pts)) if *j == i => pts.push(p),
            _ => branches.push((i, vec![p])),
        }
    }
    let mut svg = String::new();
    writeln!(svg, r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" height="{size}">"#)?;
    writeln!(svg, r#"<rect x="{m}" y="{m}" width="{w}" height="{w}" fill="none" stroke="gray"/>"#, w = size - 2.0 * m)?;
    for (_, pts) in branches {
        let s: Vec<String> = pts.iter().map(|(x, y)| format!("{x:.2},{y:.2}")).collect();
        writeln!(svg, r#"<polyline fill="none" stroke="black" stroke-width="1" points="{}"/>"#, s.join(" "))?;
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}

//! Seeded verification suites with JSON reports. Each suite draws its
//! samples from one ChaCha8 stream, so a seed fixes the whole report.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::bouwmoller::{self as bm, PieceFamily};
use crate::coding::{
    arrows_to_letters, augmented_d0, derive_sandwich, generate, generation_diagram, hexagon_gamma, hexagon_scheme,
    letters_to_arrows, square_scheme, substitution_apply, CodingScheme, Word,
};
use crate::exact::{fe, sector_of, Direction, SectorScheme, Vec2};
use crate::farey::{farey_expansion, gauss_acceleration_check, recognize_direction, FareyError};
use crate::sampling;
use crate::surface::{
    affine_image, augmented_hexagon, hex_to_parallelogram_map, hexagon, parallelogram, square, trace,
    SurfaceError, SurfacePresentation, Trajectory,
};
use crate::teich::{self, TeichError};
use crate::torus::{self, TorusError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Central,
    Derivability,
    Recognition,
    Generation,
    Square,
    Dictionary,
    BmConstants,
    BmMain,
    Teich,
    Structural,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::Central,
        Suite::Derivability,
        Suite::Recognition,
        Suite::Generation,
        Suite::Square,
        Suite::Dictionary,
        Suite::BmConstants,
        Suite::BmMain,
        Suite::Teich,
        Suite::Structural,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Central => "central",
            Suite::Derivability => "derivability",
            Suite::Recognition => "recognition",
            Suite::Generation => "generation",
            Suite::Square => "square",
            Suite::Dictionary => "dictionary",
            Suite::BmConstants => "bm-constants",
            Suite::BmMain => "bm-main",
            Suite::Teich => "teich",
            Suite::Structural => "structural",
        }
    }

    /// Default number of main samples.
    pub fn default_samples(self) -> usize {
        match self {
            Suite::Central => 1000,
            Suite::Derivability => 200,
            Suite::Recognition | Suite::Generation | Suite::Teich => 100,
            Suite::Square | Suite::Dictionary => 200,
            Suite::BmMain => 500,
            Suite::BmConstants | Suite::Structural => 0,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}; expected one of {}", Suite::ALL.map(|x| x.name()).join(", ")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: Value,
}

impl Check {
    fn new(name: &str, passed: bool, detail: Value) -> Self {
        Check { name: name.into(), passed, detail }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub seed: u64,
    pub samples: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub samples: Option<usize>,
    pub seed: u64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { samples: None, seed: 7 }
    }
}

pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> SuiteReport {
    let n = cfg.samples.unwrap_or(suite.default_samples());
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let checks = match suite {
        Suite::Central => central(&mut rng, n),
        Suite::Derivability => derivability(&mut rng, n),
        Suite::Recognition => recognition(&mut rng, n),
        Suite::Generation => generation(&mut rng, n),
        Suite::Square => square_suite(&mut rng, n),
        Suite::Dictionary => dictionary(&mut rng, n),
        Suite::BmConstants => bm_constants(),
        Suite::BmMain => bm_main(cfg.seed, n),
        Suite::Teich => teich_suite(&mut rng, n),
        Suite::Structural => structural(&mut rng),
    };
    SuiteReport { suite, seed: cfg.seed, samples: n, passed: checks.iter().all(|c| c.passed), checks }
}

fn vertex_hit(e: &SurfaceError) -> bool {
    matches!(e, SurfaceError::VertexHit(_))
}

/// Traces `n` letters from a fresh trajectory in direction `d`, redrawing
/// the start point after vertex hits.
fn traced(rng: &mut ChaCha8Rng, s: &SurfacePresentation, d: &Direction, n: usize) -> (Trajectory, Word) {
    loop {
        let t = sampling::trajectory(rng, s, d.clone());
        match trace(s, &t, n) {
            Ok(w) => return (t, w),
            Err(e) if vertex_hit(&e) => continue,
            Err(e) => panic!("tracer failed on a sampled trajectory: {e}"),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CentralCase {
    pub derived: String,
    pub sheared: String,
    pub offset: Option<usize>,
}

/// Sandwich derivative of the hexagon sequence of `τ` against the
/// sequence of `Ψ_γ τ`.
pub fn central_case(t: &Trajectory, n: usize) -> Result<CentralCase, SurfaceError> {
    let h = hexagon();
    let w = trace(&h, t, n)?;
    let core = derive_sandwich(&w).map_err(|_| SurfaceError::NotInside)?.word;
    let w2 = trace(&h, &affine_image(&h, &hexagon_gamma(), t)?, n)?;
    Ok(CentralCase { offset: core.find_in(&w2), derived: core.as_str(), sheared: w2.as_str() })
}

fn central(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let h = hexagon();
    let (mut matched, mut redrawn) = (0, 0);
    let mut failures = Vec::new();
    let mut done = 0;
    while done < samples {
        let d = sampling::hexagon_sector_direction(rng, 0);
        let t = sampling::trajectory(rng, &h, d);
        match central_case(&t, 60) {
            Ok(c) => {
                done += 1;
                if c.offset.is_some() {
                    matched += 1;
                } else if failures.len() < 5 {
                    failures.push(c);
                }
            }
            Err(_) => redrawn += 1,
        }
    }
    vec![Check::new(
        "derived sequence is an aligned window of the sheared trajectory",
        matched == samples,
        json!({ "samples": samples, "pass": matched, "fail": samples - matched, "redrawn": redrawn, "failures": failures }),
    )]
}

/// Rounds of derivation in the original letters, normalizing by the sector
/// the renormalized direction actually lies in. Returns the first round
/// whose window is not admissible in that sector's diagram.
fn derivation_rounds(
    sch: &CodingScheme,
    w: &Word,
    labels: &[usize],
    rounds: usize,
) -> Result<Option<usize>, usize> {
    let mut cur = w.clone();
    for (j, &s) in labels.iter().enumerate().take(rounds + 1) {
        if cur.len() < 3 {
            return Err(j);
        }
        if !sch.diagrams[s].admits(&cur) {
            return Ok(Some(j));
        }
        if j < rounds {
            let p = &sch.symmetry.perms[s];
            let d = derive_sandwich(&p.apply_word(&cur).expect("alphabet")).expect("length checked");
            cur = p.inverse().apply_word(&d.word).expect("alphabet");
        }
    }
    Ok(None)
}

fn derivability(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    const ROUNDS: usize = 5;
    let h = hexagon();
    let sch = hexagon_scheme();
    let (mut ok, mut lost, mut exhausted) = (0, 0, 0);
    let mut witnesses = Vec::new();
    for k in 0..samples {
        let d = sampling::hexagon_sector_direction(rng, k % 6);
        let labels = teich::teich_cutting_sequence(&d, ROUNDS + 1).expect("sampled directions are interior").labels;
        let t = loop {
            let t = sampling::trajectory(rng, &h, d.clone());
            if trace(&h, &t, 1).is_ok() {
                break t;
            }
        };
        // longer windows for directions that shed letters quickly
        let mut result = Err(0);
        for n in [400, 1600, 6400] {
            match trace(&h, &t, n) {
                Ok(w) => {
                    result = derivation_rounds(&sch, &w, &labels, ROUNDS);
                    if result.is_ok() {
                        break;
                    }
                }
                Err(_) => break,
            }
        }
        match result {
            Ok(None) => ok += 1,
            Ok(Some(j)) => {
                lost += 1;
                if witnesses.len() < 5 {
                    witnesses.push(json!({ "direction": format!("{:?}", d.vector()), "round": j }));
                }
            }
            Err(_) => exhausted += 1,
        }
    }
    vec![Check::new(
        "five derivation rounds stay admissible",
        ok == samples,
        json!({ "samples": samples, "pass": ok, "lost_admissibility": lost, "window_exhausted": exhausted, "witnesses": witnesses }),
    )]
}

fn recognition(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    const WINDOW: usize = 400;
    const DEPTH: usize = 6;
    const FINE_DEPTH: usize = 25;
    const FINE_WIDTH: f64 = 1e-3;
    let h = hexagon();
    let sch = hexagon_scheme();
    let (mut ok, mut wrong, mut ambiguous, mut short, mut fine, mut undecidable) = (0, 0, 0, 0, 0, 0);
    for k in 0..samples {
        let d = sampling::hexagon_sector_direction(rng, k % 6);
        let (t, w) = traced(rng, &h, &d, WINDOW);
        let truth = farey_expansion(&d, DEPTH).expect("interior direction");
        match recognize_direction(&sch, &w, DEPTH) {
            Ok(r) if r.entries == truth.entries => ok += 1,
            Ok(_) => wrong += 1,
            Err(e) => {
                if matches!(e, FareyError::Ambiguous { .. }) {
                    ambiguous += 1;
                } else {
                    short += 1;
                }
                undecidable += indistinguishable_direction(&t, &w, &truth).is_some() as usize;
            }
        }
        if farey_expansion(&d, FINE_DEPTH).map(|e| e.interval.width_f64() < FINE_WIDTH).unwrap_or(false) {
            fine += 1;
        }
    }
    vec![
        Check::new(
            "recognized itinerary equals the Farey expansion",
            ok == samples,
            json!({
                "samples": samples, "window": WINDOW, "depth": DEPTH, "pass": ok, "wrong": wrong,
                "ambiguous": ambiguous, "window_too_short": short,
                "same_window_other_itinerary": undecidable,
            }),
        ),
        Check::new(
            "deep expansion intervals are narrow",
            fine * 100 >= samples * 95,
            json!({ "samples": samples, "depth": FINE_DEPTH, "max_width": FINE_WIDTH, "narrow": fine }),
        ),
    ]
}

/// A direction just outside the itinerary interval of `truth` whose
/// trajectory from the same start has the same window `w`. When one exists
/// the window cannot decide the itinerary at that depth.
pub fn indistinguishable_direction(
    t: &Trajectory,
    w: &Word,
    truth: &crate::farey::FareyExpansionPrefix,
) -> Option<Direction> {
    let (lo, hi) = (truth.interval.lo.vector(), truth.interval.hi.vector());
    let depth = truth.entries.len() - 1;
    let h = hexagon();
    for (a, b) in [(lo, hi), (hi, lo)] {
        for k in [1000, 100, 10, 2, 1] {
            // a + (a - b)/k lies beyond a, outside the interval
            let v = a + &(a - b).scale(&crate::exact::FieldElement::ratio(1, k));
            let Ok(d) = Direction::new(v) else { continue };
            if !matches!(farey_expansion(&d, depth), Ok(e) if e.entries != truth.entries) {
                continue;
            }
            if trace(&h, &Trajectory::new(t.start.clone(), d.clone()), w.len()).ok().as_ref() == Some(w) {
                return Some(d);
            }
        }
    }
    None
}

fn generation(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let sch = hexagon_scheme();
    let (mut derived_ok, mut subst_ok, mut total) = (0, 0, 0);
    let mut failures = Vec::new();
    for j in 1..=5 {
        for _ in 0..samples {
            let len = rng.gen_range(4..40);
            let w = sampling::admissible_walk(rng, &sch.diagrams[j], len);
            total += 1;
            let g = generate(&w, j, 0).expect("walk is admissible");
            let back = derive_sandwich(&g).expect("long enough").word;
            if back == w.slice(1, w.len() - 1) && sch.diagrams[0].admits(&g) {
                derived_ok += 1;
            } else if failures.len() < 5 {
                failures.push(json!({ "diagram": j, "word": w.as_str(), "generated": g.as_str(), "derived": back.as_str() }));
            }
            let arrows = letters_to_arrows(&w, j).expect("walk is admissible");
            let via = substitution_apply(j, &arrows).and_then(|a| arrows_to_letters(&a, 0));
            if via.as_ref() == Ok(&g) {
                subst_ok += 1;
            } else if failures.len() < 5 {
                failures.push(json!({ "diagram": j, "word": w.as_str(), "substituted": format!("{via:?}") }));
            }
        }
    }
    vec![
        Check::new(
            "deriving a generated word gives back its interior",
            derived_ok == total,
            json!({ "samples": total, "pass": derived_ok, "failures": failures }),
        ),
        Check::new(
            "arrow substitutions agree with generation",
            subst_ok == total,
            json!({ "samples": total, "pass": subst_ok }),
        ),
    ]
}

fn square_trajectory(rng: &mut ChaCha8Rng) -> Trajectory {
    let d = sampling::direction_between(rng, &Vec2::ints(1, 0), &Vec2::ints(1, 1));
    sampling::trajectory(rng, &square(), d)
}

fn square_suite(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    let (mut ok, mut done) = (0, 0);
    while done < samples {
        let t = square_trajectory(rng);
        match torus::square_case(&torus::square_gamma_prime(), &t, 60) {
            Ok(c) => {
                done += 1;
                ok += c.offset.is_some() as usize;
            }
            Err(TorusError::Surface(e)) if vertex_hit(&e) => {}
            Err(e) => panic!("{e}"),
        }
    }
    checks.push(Check::new(
        "sandwich derivation with the orientation-reversing shear",
        ok == samples,
        json!({ "samples": samples, "pass": ok }),
    ));

    let mut witness = None;
    let (mut collapsed, mut tried) = (0, 0);
    while tried < 40 {
        let t = square_trajectory(rng);
        let (Ok(c), Ok(col)) = (torus::square_case(&torus::square_gamma(), &t, 60), torus::sigma_collapse(&t, 60)) else {
            continue;
        };
        tried += 1;
        collapsed += col.equal as usize;
        if witness.is_none() && c.offset.is_none() {
            witness = Some(c);
        }
    }
    checks.push(Check::new(
        "one-cylinder shear has a failure witness",
        witness.is_some() && collapsed == tried,
        json!({ "witness": witness, "collapsed": collapsed, "samples": tried }),
    ));

    let mut gauss = Vec::new();
    for n in 1..=6i64 {
        let mut slopes = Vec::new();
        while slopes.len() < 20 {
            let q = rng.gen_range(10..400i64);
            let p = rng.gen_range(1..q);
            // p/q in [1/(n+1), 1/n]
            if p * (n + 1) >= q && p * n <= q {
                slopes.push((p, q));
            }
        }
        gauss.push(gauss_acceleration_check(n as u32, &slopes));
    }
    checks.push(Check::new(
        "Gauss branches are accelerated Farey branches",
        gauss.iter().all(|g| g.identity_holds && g.branches_consistent),
        json!(gauss),
    ));

    let (mut same, mut windows) = (0, 0);
    while windows < 100 {
        let t = square_trajectory(rng);
        let Ok(w) = trace(&square(), &t, 120) else { continue };
        match (torus::series_derive(&w), torus::accelerated_single_steps(&w)) {
            (Ok(a), Ok(b)) => {
                windows += 1;
                same += (a == b) as usize;
            }
            // too few blocks to read the block lengths
            (Err(_), Err(_)) => {}
            _ => windows += 1,
        }
    }
    checks.push(Check::new(
        "Series derivation is accelerated single steps",
        same == windows,
        json!({ "samples": windows, "pass": same }),
    ));
    checks
}

fn dictionary(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let h = hexagon();
    let p = parallelogram();
    let map = hex_to_parallelogram_map();
    let (mut ok, mut done) = (0, 0);
    let mut failures = Vec::new();
    while done < samples {
        let d = sampling::hexagon_sector_direction(rng, 0);
        let t = sampling::trajectory(rng, &h, d.clone());
        let Ok(w) = trace(&h, &t, 60) else { continue };
        let Ok(start) = map.apply(&t.start) else { continue };
        let Ok(wp) = trace(&p, &Trajectory::new(start, d), 200) else { continue };
        done += 1;
        let dict = torus::hex_to_parallelogram(&w).expect("sector 0 word");
        if dict.find_in(&wp).is_some() {
            ok += 1;
        } else if failures.len() < 5 {
            failures.push(json!({ "hexagon": w.as_str(), "dictionary": dict.as_str(), "parallelogram": wp.as_str() }));
        }
    }
    let r = torus::noncommutation_witness().expect("fixed word");
    let words_match = r.word.starts_with("BCBC")
        && r.derived.contains("BCBC")
        && r.dictionary.contains("A′B′B′A′B′B′")
        && !r.derived_of_dictionary.contains('B');
    vec![
        Check::new(
            "dictionary turns hexagon sequences into parallelogram sequences",
            ok == samples,
            json!({ "samples": samples, "pass": ok, "failures": failures }),
        ),
        Check::new("derivation and dictionary do not commute", words_match && !r.commute, json!(r)),
    ]
}

fn bm_constants() -> Vec<Check> {
    let r1 = bm::build_r1();
    let r2 = bm::build_r2();
    let s = bm::sigma();
    let pipeline = bm::bm_shear_pipeline();
    let moduli = bm::cylinder_modulus_check();
    let shape = crate::exact::Mat2::new(fe("1/2r2"), fe("1/2+1/2r2"), fe("0"), fe("1/2r3"));
    vec![
        Check::new("area of R1", r1.area == fe("4+2r2"), json!({ "area": r1.area })),
        Check::new(
            "R2 scaled by a has the area of R1",
            &r2.area * &bm::r2_scale_sq() == r1.area && r2.area == fe("r3+r6"),
            json!({ "shape_area": r2.area, "a_squared": bm::r2_scale_sq() }),
        ),
        Check::new(
            "shear matrix",
            s.shape == shape && s.scale_sq == fe("2/3r6") && s.effective_det() == fe("1") && pipeline.overlay_ok,
            json!(pipeline),
        ),
        match moduli {
            Ok(m) => Check::new(
                "three horizontal cylinders of inverse modulus 2+√2",
                m.cylinders == 3 && m.all_equal_two_plus_root2 && m.gamma_det == fe("1") && m.gamma_trace == fe("2"),
                json!(m),
            ),
            Err(e) => Check::new("three horizontal cylinders of inverse modulus 2+√2", false, json!(e.to_string())),
        },
    ]
}

fn bm_main(seed: u64, samples: usize) -> Vec<Check> {
    match bm::verify_theorem_main(samples, 60, seed) {
        Ok(r) => vec![Check::new(
            "derived R1 sequence is an aligned window of the R2 sequence",
            r.matched == r.samples,
            json!({ "samples": r.samples, "pass": r.matched, "fail": r.samples - r.matched, "redrawn": r.redrawn, "failures": r.failures.iter().take(5).collect::<Vec<_>>() }),
        )],
        Err(e) => vec![Check::new("derived R1 sequence is an aligned window of the R2 sequence", false, json!(e.to_string()))],
    }
}

fn teich_suite(rng: &mut ChaCha8Rng, samples: usize) -> Vec<Check> {
    let mut checks = Vec::new();

    let mut farey_ok = 0;
    let mut repeats = 0;
    for k in 0..samples {
        let d = sampling::hexagon_sector_direction(rng, k % 6);
        let c = teich::teich_cutting_sequence(&d, 9).expect("interior");
        repeats += !c.no_immediate_repeats() as usize;
        farey_ok += (c.farey_entries() == farey_expansion(&d, 8).expect("interior").entries && c.labels[0] == k % 6) as usize;
    }
    checks.push(Check::new(
        "cutting sequence of the ray is the Farey itinerary",
        farey_ok == samples && repeats == 0,
        json!({ "samples": samples, "depth": 8, "pass": farey_ok, "adjacent_repeats": repeats }),
    ));

    let mut geo_ok = 0;
    let geo_samples = samples.div_ceil(2);
    for _ in 0..geo_samples {
        let i = rng.gen_range(0..6);
        let d = sampling::hexagon_sector_direction(rng, i);
        geo_ok += teich::geometric_crossing_check(&d, 3).map(|r| r.passed).unwrap_or(false) as usize;
    }
    let generators = {
        let [a, b, e] = teich::triangle_sides();
        teich::is_reflection_in(&teich::alpha(), &a)
            && teich::is_reflection_in(&teich::beta(), &b)
            && teich::is_reflection_in(&teich::gamma(), &e)
    };
    checks.push(Check::new(
        "labels agree with exact geodesic crossings",
        geo_ok == geo_samples && generators,
        json!({ "samples": geo_samples, "levels": 3, "pass": geo_ok, "generators_reflect_triangle_sides": generators }),
    ));

    let mut worst: f64 = 0.0;
    for _ in 0..50 {
        let theta = rng.gen_range(0.01..std::f64::consts::PI - 0.01);
        let Ok(d) = teich::direction_from_angle(theta) else { continue };
        let Ok(e) = teich::ray_endpoint(&d) else { continue };
        let t = d.angle_f64();
        let a = std::f64::consts::PI - 2.0 * t;
        worst = worst.max((e.disk.0 - a.cos()).hypot(e.disk.1 - a.sin()));
    }
    checks.push(Check::new("ray endpoints in the disk", worst < 1e-12, json!({ "samples": 50, "max_error": worst })));

    let h = hexagon();
    let (mut ok, mut done, mut exhausted) = (0, 0, 0);
    while done < samples {
        let d = sampling::hexagon_sector_direction(rng, done % 6);
        let t = sampling::trajectory(rng, &h, d);
        let r = match teich::fact3_check(&t, 4, 800) {
            Err(TeichError::WindowTooShort(_)) => teich::fact3_check(&t, 4, 6000),
            r => r,
        };
        match r {
            Ok(r) => {
                done += 1;
                ok += r.passed as usize;
            }
            Err(TeichError::Surface(e)) if vertex_hit(&e) => {}
            Err(TeichError::WindowTooShort(_)) => {
                done += 1;
                exhausted += 1;
            }
            Err(e) => panic!("{e}"),
        }
    }
    checks.push(Check::new(
        "derived sequences are sequences of the renormalized trajectory",
        ok == samples,
        json!({ "samples": samples, "depth": 4, "pass": ok, "window_exhausted": exhausted }),
    ));
    checks
}

/// Consecutive pairs seen in traces in each sector, against the arrows of
/// the sector's diagram.
fn diagram_table_check<F>(rng: &mut ChaCha8Rng, name: &str, s: &SurfacePresentation, sch: &CodingScheme, mut dir: F) -> Check
where
    F: FnMut(&mut ChaCha8Rng, usize) -> Direction,
{
    let mut bad = Vec::new();
    for (i, dgm) in sch.diagrams.iter().enumerate() {
        let mut seen = BTreeSet::new();
        for _ in 0..40 {
            let d = dir(rng, i);
            let (_, w) = traced(rng, s, &d, 60);
            if !dgm.admits(&w) {
                bad.push(format!("{}: {} not admissible", dgm.name, w.as_str()));
            }
            seen.extend(w.letters.windows(2).map(|p| (p[0], p[1])));
        }
        let arrows: BTreeSet<(char, char)> = dgm.edges.iter().map(|e| (e.from, e.to)).collect();
        if seen != arrows {
            bad.push(format!("{}: observed {seen:?}", dgm.name));
        }
    }
    Check::new(name, bad.is_empty(), json!({ "diagrams": sch.diagrams.len(), "problems": bad }))
}

fn structural(rng: &mut ChaCha8Rng) -> Vec<Check> {
    let mut checks = Vec::new();

    let g = bm::bm_grid_graph();
    let v1 = bm::validate_grid_graph(&g, &bm::build_r1_perp(), PieceFamily::Vertical);
    let v2 = bm::validate_grid_graph(&g, &bm::build_r2_perp(), PieceFamily::Horizontal);
    let grid_ok = matches!((&v1, &v2), (Ok(a), Ok(b)) if a.passed() && b.passed() && a.right == b.right && a.top == b.top);
    checks.push(Check::new(
        "grid graph reconstructs both orthogonal gluings",
        grid_ok,
        json!({ "r1": v1.map_err(|e| e.to_string()), "r2": v2.map_err(|e| e.to_string()) }),
    ));

    let mut perm_bad = Vec::new();
    let h = hexagon();
    let hs = crate::coding::hexagon_symmetry();
    for i in 0..6 {
        for _ in 0..10 {
            let d = sampling::hexagon_sector_direction(rng, i);
            let (t, w) = traced(rng, &h, &d, 40);
            let m = &hs.matrices[i];
            let moved = Trajectory::new(m.apply(&t.start), t.direction.transform(m).expect("invertible"));
            let ok = trace(&h, &moved, 40).ok() == hs.perms[i].apply_word(&w).ok()
                && sector_of(&moved.direction.upper(), SectorScheme::Hexagon).unique() == Some(0);
            if !ok {
                perm_bad.push(format!("hexagon pi_{i}"));
            }
        }
    }
    let r1 = bm::build_r1();
    let bs = bm::bm_symmetry();
    for i in 0..16 {
        let mut done = 0;
        while done < 10 {
            let d = sampling::octant_direction(rng, bm::sector_octant(i));
            let t = Trajectory::new(sampling::interior_point(rng, &r1, 0), d);
            let m = &bs.matrices[i];
            let moved = Trajectory::new(m.apply(&t.start), t.direction.transform(m).expect("invertible"));
            let (Ok(w), Ok(w2)) = (trace(&r1, &t, 40), trace(&r1, &moved, 40)) else { continue };
            done += 1;
            if bs.perms[i].apply_word(&w).ok() != Some(w2)
                || sector_of(&moved.direction, SectorScheme::BouwMoller).unique() != Some(0)
            {
                perm_bad.push(format!("R1 pi_{i}"));
            }
        }
    }
    checks.push(Check::new(
        "symmetry permutations match the geometry",
        perm_bad.is_empty(),
        json!({ "hexagon": 6, "bouw_moller": 16, "problems": perm_bad }),
    ));

    let b = crate::exact::hexagon_boundaries();
    checks.push(diagram_table_check(rng, "hexagon diagrams", &h, &hexagon_scheme(), |r, i| {
        sampling::hexagon_sector_direction(r, i)
    }));
    checks.push(diagram_table_check(rng, "square diagrams", &square(), &square_scheme(), |r, i| {
        let (lo, hi) = if i == 0 { (Vec2::ints(1, 0), Vec2::ints(1, 1)) } else { (Vec2::ints(1, 1), Vec2::ints(0, 1)) };
        sampling::direction_between(r, &lo, &hi)
    }));
    checks.push(diagram_table_check(rng, "Bouw-Moller diagrams", &r1, &bm::bm_scheme(), |r, i| {
        sampling::octant_direction(r, bm::sector_octant(i))
    }));

    // labelled tables: the letters read between two sides
    let aug = augmented_hexagon();
    let table = augmented_d0();
    let mut seen = BTreeSet::new();
    for _ in 0..200 {
        let d = sampling::direction_between(rng, &b[0], &b[1]);
        let (_, w) = traced(rng, &aug, &d, 80);
        let mut last = None;
        let mut between = String::new();
        for c in w.letters {
            if c.is_ascii_uppercase() {
                let l = std::mem::take(&mut between);
                if let Some(p) = last {
                    seen.insert((p, c, l));
                }
                last = Some(c);
            } else {
                between.push(c);
            }
        }
    }
    let want: BTreeSet<(char, char, String)> = table.edges.iter().map(|e| (e.from, e.to, e.label.clone())).collect();
    checks.push(Check::new(
        "augmented first diagram matches the diagonals",
        seen == want,
        json!({ "observed": seen.iter().map(|(a, b, l)| format!("{a}{l}{b}")).collect::<Vec<_>>() }),
    ));

    let labelled = bm::bm_d0();
    let mut d0_bad = Vec::new();
    for _ in 0..60 {
        let d = sampling::octant_direction(rng, bm::sector_octant(0));
        let t = sampling::trajectory(rng, &r1, d);
        if let Ok(w) = trace(&r1, &t, 60) {
            if !labelled.admits(&w) {
                d0_bad.push(w.as_str());
            }
        }
    }
    let gen_ok = (1..=5).all(|j| {
        let g = generation_diagram(j);
        g.edges.iter().all(|e| generate(&Word::new(vec![e.from, e.to]), j, 0).is_ok())
    });
    checks.push(Check::new(
        "labelled Bouw-Moller and generation tables are consistent",
        d0_bad.is_empty() && gen_ok,
        json!({ "bm_d0_problems": d0_bad, "generation_tables": gen_ok }),
    ));
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
            assert_eq!(serde_json::to_value(s).unwrap(), json!(s.name()));
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_are_deterministic() {
        let cfg = SuiteConfig { samples: Some(10), seed: 3 };
        let a = serde_json::to_string(&run_suite(Suite::Central, &cfg)).unwrap();
        let b = serde_json::to_string(&run_suite(Suite::Central, &cfg)).unwrap();
        assert_eq!(a, b);
        assert!(run_suite(Suite::Central, &cfg).passed);
        assert!(run_suite(Suite::BmConstants, &cfg).passed);
    }
}

//! The Teichmüller disk of the hexagon: the triangle group generated by
//! `α, β, γ`, the ideal hexagon tessellation, geodesic rays `r_θ`, their
//! cutting sequences and the link with derivation.
//!
//! A matrix `ν` stands for the point `νᵀ·i` of the upper half plane, which
//! is invariant under rotations on the left. A Veech element `η` acting on
//! the right then moves points by the Möbius map of `ηᵀ` (with `z̄` when
//! `det η = -1`), and the ray of `g_t^θ` ends at `-tan θ`.

use serde::{Deserialize, Serialize};

use crate::coding::{aligned, derive_sandwich, hexagon_gamma, hexagon_scheme, hexagon_symmetry, CodingError, Word};
use crate::exact::{fe, hexagon_boundaries, sector_of, Direction, ExactError, FieldElement, Mat2, SectorScheme, Vec2};
use crate::surface::{affine_image, hexagon, trace, SurfaceError, Trajectory};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TeichError {
    #[error("direction is horizontal or vertical")]
    Degenerate,
    #[error("direction at step {step} lies on a sector boundary {sectors:?}")]
    Boundary { step: usize, sectors: Vec<usize> },
    #[error("window exhausted at level {0}")]
    WindowTooShort(usize),
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// A point of `∂H = R ∪ {∞}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BoundaryPoint {
    Finite(FieldElement),
    Infinity,
}

impl BoundaryPoint {
    /// Disk image under `φ(z) = (z-i)/(z+i)`, as a float pair.
    pub fn to_disk(&self) -> (f64, f64) {
        match self {
            BoundaryPoint::Infinity => (1.0, 0.0),
            BoundaryPoint::Finite(x) => {
                let x = x.to_f64();
                let n = x * x + 1.0;
                ((x * x - 1.0) / n, -2.0 * x / n)
            }
        }
    }
}

/// Point `x + iy` of the upper half plane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HyperbolicPoint {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl HyperbolicPoint {
    pub fn i() -> Self {
        HyperbolicPoint { x: FieldElement::zero(), y: FieldElement::one() }
    }

    pub fn to_disk(&self) -> (f64, f64) {
        disk_f64(self.x.to_f64(), self.y.to_f64())
    }
}

fn disk_f64(x: f64, y: f64) -> (f64, f64) {
    // (z - i)/(z + i)
    let (nr, ni) = (x, y - 1.0);
    let (dr, di) = (x, y + 1.0);
    let n = dr * dr + di * di;
    ((nr * dr + ni * di) / n, (ni * dr - nr * di) / n)
}

/// Geodesic of `H` given by its two distinct endpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Geodesic {
    pub a: BoundaryPoint,
    pub b: BoundaryPoint,
}

impl Geodesic {
    pub fn new(a: BoundaryPoint, b: BoundaryPoint) -> Self {
        assert!(a != b, "geodesic endpoints coincide");
        Geodesic { a, b }
    }

    /// Same geodesic regardless of endpoint order.
    pub fn same(&self, o: &Geodesic) -> bool {
        (self.a == o.a && self.b == o.b) || (self.a == o.b && self.b == o.a)
    }

    fn power(&self, x: &FieldElement, y2: &FieldElement) -> i32 {
        match (&self.a, &self.b) {
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => ((x - a) * (x - b) + y2.clone()).sign(),
            (BoundaryPoint::Finite(a), BoundaryPoint::Infinity) | (BoundaryPoint::Infinity, BoundaryPoint::Finite(a)) => {
                (x - a).sign()
            }
            _ => unreachable!("endpoints are distinct"),
        }
    }

    /// Side of the geodesic a point lies on: `±1`, or `0` on it.
    pub fn side(&self, p: &HyperbolicPoint) -> i32 {
        self.power(&p.x, &(&p.y * &p.y))
    }

    /// Side of a boundary point; `0` means it is an endpoint. `∞` is on the
    /// outer side of a semicircle.
    pub fn boundary_side(&self, p: &BoundaryPoint) -> i32 {
        match p {
            BoundaryPoint::Finite(x) => self.power(x, &FieldElement::zero()),
            BoundaryPoint::Infinity => match (&self.a, &self.b) {
                (BoundaryPoint::Finite(_), BoundaryPoint::Finite(_)) => 1,
                _ => 0,
            },
        }
    }

    /// Float polyline of the geodesic in the disk model.
    pub fn disk_polyline(&self, samples: usize) -> Vec<(f64, f64)> {
        let ts = (1..samples).map(|k| std::f64::consts::PI * k as f64 / samples as f64);
        let inner: Vec<(f64, f64)> = match (&self.a, &self.b) {
            (BoundaryPoint::Finite(a), BoundaryPoint::Finite(b)) => {
                let (a, b) = (a.to_f64(), b.to_f64());
                let (c, r) = ((a + b) / 2.0, (b - a).abs() / 2.0);
                ts.map(|t| disk_f64(c + r * t.cos(), r * t.sin())).collect()
            }
            (BoundaryPoint::Finite(a), _) => {
                let a = a.to_f64();
                ts.map(|t| disk_f64(a, (t / 2.0).tan())).collect()
            }
            (_, BoundaryPoint::Finite(b)) => {
                let b = b.to_f64();
                ts.rev().map(|t| disk_f64(b, (t / 2.0).tan())).collect()
            }
            _ => unreachable!(),
        };
        let mut out = vec![self.a.to_disk()];
        out.extend(inner);
        out.push(self.b.to_disk());
        out
    }
}

/// Möbius action of `m` (`det m = ±1`), conjugating `z` when the
/// determinant is negative.
pub fn mobius_boundary(m: &Mat2, p: &BoundaryPoint) -> BoundaryPoint {
    let (num, den) = match p {
        BoundaryPoint::Finite(x) => (&m.a * x + m.b.clone(), &m.c * x + m.d.clone()),
        BoundaryPoint::Infinity => (m.a.clone(), m.c.clone()),
    };
    if den.is_zero() {
        BoundaryPoint::Infinity
    } else {
        BoundaryPoint::Finite(num.checked_div(&den).expect("nonzero"))
    }
}

pub fn mobius_point(m: &Mat2, p: &HyperbolicPoint) -> HyperbolicPoint {
    let r2 = &p.x * &p.x + &p.y * &p.y;
    let cx = &m.c * &p.x + m.d.clone();
    let den = &cx * &cx + &(&m.c * &m.c) * &(&p.y * &p.y);
    let re = &(&m.a * &m.c) * &r2 + &(&m.a * &m.d + &m.b * &m.c) * &p.x + &m.b * &m.d;
    let im = &m.det().abs() * &p.y;
    HyperbolicPoint { x: re.checked_div(&den).expect("nonzero"), y: im.checked_div(&den).expect("nonzero") }
}

pub fn mobius_geodesic(m: &Mat2, g: &Geodesic) -> Geodesic {
    Geodesic::new(mobius_boundary(m, &g.a), mobius_boundary(m, &g.b))
}

/// `α`, reflection in the horizontal side of the fundamental triangle.
pub fn alpha() -> Mat2 {
    Mat2::ints(1, 0, 0, -1)
}

/// `β`, reflection in the side at angle `π/3`.
pub fn beta() -> Mat2 {
    Mat2::new(fe("1/2"), fe("1/2r3"), fe("1/2r3"), fe("-1/2"))
}

/// `γ`, reflection in the side `E₀`.
pub fn gamma() -> Mat2 {
    hexagon_gamma()
}

/// `ν_i`, the hexagon symmetry sending sector `i` to sector `0`.
pub fn nu(i: usize) -> Mat2 {
    hexagon_symmetry().matrices[i].clone()
}

/// `γᵢ = νᵢ⁻¹ γ νᵢ`, reflection in `Eᵢ`.
pub fn gamma_i(i: usize) -> Mat2 {
    let n = nu(i);
    &(&n.inv().expect("orthogonal") * &gamma()) * &n
}

/// Where the right action of `η` sends the half plane: Möbius map of `ηᵀ`.
pub fn right_action(eta: &Mat2) -> Mat2 {
    eta.transpose()
}

/// Sides of the fundamental triangle: the one fixed by `α`, by `β`, and `E₀`
/// (fixed by `γ`). Its vertices are `i`, `0` and `-√3/3`.
pub fn triangle_sides() -> [Geodesic; 3] {
    let f = |s: &str| BoundaryPoint::Finite(fe(s));
    [
        Geodesic::new(f("0"), BoundaryPoint::Infinity),
        Geodesic::new(f("-1/3r3"), f("r3")),
        e0(),
    ]
}

pub fn e0() -> Geodesic {
    Geodesic::new(BoundaryPoint::Finite(fe("0")), BoundaryPoint::Finite(fe("-1/3r3")))
}

/// `Eᵢ = E₀νᵢ`.
pub fn hexagon_sides() -> Vec<Geodesic> {
    (0..6).map(|i| mobius_geodesic(&right_action(&nu(i)), &e0())).collect()
}

/// True when `m` is an orientation-reversing involution fixing `g`
/// pointwise and swapping its two sides.
pub fn is_reflection_in(m: &Mat2, g: &Geodesic) -> bool {
    let mm = m * m;
    if !mm.is_identity() || m.det() != fe("-1") {
        return false;
    }
    let a = right_action(m);
    if mobius_boundary(&a, &g.a) != g.a || mobius_boundary(&a, &g.b) != g.b {
        return false;
    }
    // a point off the geodesic changes side
    let probe = [HyperbolicPoint::i(), HyperbolicPoint { x: fe("1/7"), y: fe("2") }];
    probe.iter().filter(|p| g.side(p) != 0).all(|p| g.side(&mobius_point(&a, p)) == -g.side(p))
}

/// Reduced word `w₀ w₁ … w_{k-1}` addressing the ideal hexagon
/// `𝓔 γ_{w_{k-1}} ⋯ γ_{w₀}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TessellationAddress {
    pub word: Vec<usize>,
}

impl TessellationAddress {
    pub fn is_reduced(&self) -> bool {
        self.word.iter().all(|&s| s < 6) && self.word.windows(2).all(|p| p[0] != p[1])
    }

    /// Möbius matrix carrying `𝓔` onto this hexagon.
    pub fn placement(&self) -> Mat2 {
        self.word.iter().fold(Mat2::identity(), |acc, &s| &acc * &right_action(&gamma_i(s)))
    }

    pub fn centre(&self) -> HyperbolicPoint {
        mobius_point(&self.placement(), &HyperbolicPoint::i())
    }

    /// Sides of this hexagon; side `j` carries label `j`.
    pub fn sides(&self) -> Vec<Geodesic> {
        let m = self.placement();
        hexagon_sides().iter().map(|g| mobius_geodesic(&m, g)).collect()
    }
}

/// Limit point of `r_θ`: `-tan θ` exactly, with its disk shadow.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RayEndpoint {
    pub half_plane: FieldElement,
    pub disk: (f64, f64),
    /// Argument of the disk point, in `(-π, π]`.
    pub disk_angle: f64,
}

pub fn ray_endpoint(d: &Direction) -> Result<RayEndpoint, TeichError> {
    let v = d.vector();
    if v.x.is_zero() || v.y.is_zero() {
        return Err(TeichError::Degenerate);
    }
    let x = -v.y.checked_div(&v.x)?;
    let disk = BoundaryPoint::Finite(x.clone()).to_disk();
    Ok(RayEndpoint { half_plane: x, disk, disk_angle: disk.1.atan2(disk.0) })
}

/// Labels of the sides crossed by `r_θ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeichCuttingSequence {
    pub labels: Vec<usize>,
}

impl TeichCuttingSequence {
    /// Hexagon entered after crossing `k` sides.
    pub fn address(&self, k: usize) -> TessellationAddress {
        TessellationAddress { word: self.labels[..k].to_vec() }
    }

    pub fn no_immediate_repeats(&self) -> bool {
        self.labels.windows(2).all(|p| p[0] != p[1])
    }

    /// The same path read as a Farey itinerary: step `k` records where
    /// `ν_{s_{k-1}}` puts sector `s_k`.
    pub fn farey_entries(&self) -> Vec<usize> {
        let b = hexagon_boundaries();
        self.labels
            .iter()
            .enumerate()
            .map(|(k, &s)| {
                if k == 0 {
                    return s;
                }
                let mid = Direction::new(&b[s] + &b[s + 1]).expect("nonzero");
                let moved = mid.transform(&nu(self.labels[k - 1])).expect("invertible").upper();
                sector_of(&moved, SectorScheme::Hexagon).unique().expect("interior")
            })
            .collect()
    }
}

/// First `k` labels: emit the sector `i` of the current direction, then
/// reflect it by `γᵢ`.
pub fn teich_cutting_sequence(d: &Direction, k: usize) -> Result<TeichCuttingSequence, TeichError> {
    ray_endpoint(d)?;
    let mut labels = Vec::with_capacity(k);
    let mut cur = d.upper();
    for step in 0..k {
        let s = sector_of(&cur, SectorScheme::Hexagon);
        let i = s.unique().ok_or(TeichError::Boundary { step, sectors: s.indices })?;
        labels.push(i);
        cur = cur.transform(&gamma_i(i))?.upper();
    }
    Ok(TeichCuttingSequence { labels })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossingLevel {
    pub level: usize,
    pub combinatorial: usize,
    /// Sides of the current hexagon, other than the entry side, that
    /// separate `i` from the endpoint.
    pub geometric: Vec<usize>,
    /// The entry side equals the previous exit side.
    pub entry_consistent: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CrossingReport {
    pub endpoint: FieldElement,
    pub levels: Vec<CrossingLevel>,
    pub passed: bool,
}

/// Compares the combinatorial labels with exact intersections of the
/// geodesic from `i` to `-tan θ` against the sides of the hexagons it
/// visits, for `levels + 1` hexagons.
pub fn geometric_crossing_check(d: &Direction, levels: usize) -> Result<CrossingReport, TeichError> {
    let x = BoundaryPoint::Finite(ray_endpoint(d)?.half_plane);
    let seq = teich_cutting_sequence(d, levels + 1)?;
    let start = HyperbolicPoint::i();
    let mut out = Vec::new();
    let mut prev_exit: Option<Geodesic> = None;
    for k in 0..=levels {
        let sides = seq.address(k).sides();
        let entry = k.checked_sub(1).map(|j| seq.labels[j]);
        let geometric: Vec<usize> = (0..6)
            .filter(|&j| Some(j) != entry)
            .filter(|&j| {
                let g = &sides[j];
                g.side(&start) * g.boundary_side(&x) < 0
            })
            .collect();
        let entry_consistent = match (&prev_exit, entry) {
            (Some(p), Some(j)) => p.same(&sides[j]),
            _ => true,
        };
        prev_exit = Some(sides[seq.labels[k]].clone());
        out.push(CrossingLevel { level: k, combinatorial: seq.labels[k], geometric, entry_consistent });
    }
    let passed = out.iter().all(|l| l.entry_consistent && l.geometric == [l.combinatorial]);
    Ok(CrossingReport { endpoint: x_value(&x), levels: out, passed })
}

fn x_value(p: &BoundaryPoint) -> FieldElement {
    match p {
        BoundaryPoint::Finite(x) => x.clone(),
        BoundaryPoint::Infinity => unreachable!(),
    }
}

/// `Ψ_{γᵢ} = νᵢ⁻¹ ∘ Ψ_γ ∘ νᵢ` on a hexagon trajectory.
pub fn psi_gamma_i(i: usize, t: &Trajectory) -> Result<Trajectory, TeichError> {
    let h = hexagon();
    let n = nu(i);
    let inv = n.inv()?;
    let moved = Trajectory::new(n.apply(&t.start), t.direction.transform(&n)?);
    let sheared = affine_image(&h, &gamma(), &moved)?;
    Ok(Trajectory::new(inv.apply(&sheared.start), sheared.direction.transform(&inv)?))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fact3Level {
    pub level: usize,
    pub label: usize,
    pub diagram: usize,
    pub combinatorial: String,
    /// Offset of the combinatorial word in the two-sided trace window of
    /// `τ^{(level)}`.
    pub offset: Option<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Fact3Report {
    pub levels: Vec<Fact3Level>,
    pub passed: bool,
}

fn two_sided(t: &Trajectory, n: usize) -> Result<Word, TeichError> {
    let h = hexagon();
    let fwd = trace(&h, t, n)?;
    let rev = Trajectory::new(t.start.clone(), Direction::new(-t.direction.vector())?);
    let back = trace(&h, &rev, n)?;
    let mut letters: Vec<char> = back.letters.into_iter().rev().collect();
    letters.extend(fwd.letters);
    Ok(Word::new(letters))
}

/// Derives the `n`-letter cutting sequence of `τ` `k` times, keeping the
/// original labels (`w^{(j+1)} = π⁻¹ (π w^{(j)})'`), and compares each
/// `w^{(j)}` with a trace of `τ^{(j)} = Ψ_{γ_{s_{j-1}}} ⋯ Ψ_{γ_{s_0}} τ`.
pub fn fact3_check(t: &Trajectory, k: usize, n: usize) -> Result<Fact3Report, TeichError> {
    let h = hexagon();
    let sch = hexagon_scheme();
    let seq = teich_cutting_sequence(&t.direction, k + 1)?;
    let mut w = trace(&h, t, n)?;
    let mut tau = t.clone();
    let mut levels = Vec::new();
    for j in 0..=k {
        if w.len() < 3 {
            return Err(TeichError::WindowTooShort(j));
        }
        let (normal, diagram) = sch.normal_form(&w).map_err(|e| match e {
            CodingError::Ambiguous(_) => TeichError::WindowTooShort(j),
            e => e.into(),
        })?;
        // the derived letters are a subset of the crossings, so a little
        // slack around the core is enough
        let window = two_sided(&tau, w.len() + 16)?;
        levels.push(Fact3Level {
            level: j,
            label: seq.labels[j],
            diagram,
            combinatorial: w.as_str(),
            offset: aligned(&w, &window),
        });
        if j < k {
            let p = &sch.symmetry.perms[diagram];
            w = p.inverse().apply_word(&derive_sandwich(&normal)?.word)?;
            tau = psi_gamma_i(seq.labels[j], &tau)?;
        }
    }
    let passed = levels.iter().all(|l| l.offset.is_some() && l.label == l.diagram);
    Ok(Fact3Report { levels, passed })
}

/// SVG of the triangle tessellation (`hexagons = false`) or of the ideal
/// hexagon tessellation, out to `depth` reflections, in the disk model.
pub fn tessellation_svg(depth: usize, hexagons: bool) -> String {
    let size = 600.0;
    let to_px = |(x, y): (f64, f64)| ((x + 1.05) * size / 2.1, (1.05 - y) * size / 2.1);
    let mut geodesics: Vec<Geodesic> = Vec::new();
    let mut push = |g: Geodesic| {
        if !geodesics.iter().any(|h| h.same(&g)) {
            geodesics.push(g);
        }
    };
    let mut frontier = vec![TessellationAddress { word: vec![] }];
    for level in 0..=depth {
        let mut next = Vec::new();
        for a in &frontier {
            let m = a.placement();
            for g in hexagon_sides() {
                push(mobius_geodesic(&m, &g));
            }
            if !hexagons {
                for i in 0..6 {
                    let r = right_action(&nu(i));
                    for g in &triangle_sides()[..2] {
                        push(mobius_geodesic(&m, &mobius_geodesic(&r, g)));
                    }
                }
            }
            if level < depth {
                for s in 0..6 {
                    if a.word.last() != Some(&s) {
                        let mut w = a.word.clone();
                        w.push(s);
                        next.push(TessellationAddress { word: w });
                    }
                }
            }
        }
        frontier = next;
    }
    let mut body = String::new();
    body.push_str(&format!(
        "<circle cx=\"{:.2}\" cy=\"{:.2}\" r=\"{:.2}\" fill=\"none\" stroke=\"black\"/>\n",
        size / 2.0,
        size / 2.0,
        size / 2.1
    ));
    for g in &geodesics {
        let pts: Vec<String> = g
            .disk_polyline(48)
            .into_iter()
            .map(to_px)
            .map(|(x, y)| format!("{x:.2},{y:.2}"))
            .collect();
        body.push_str(&format!(
            "<polyline points=\"{}\" fill=\"none\" stroke=\"steelblue\" stroke-width=\"0.8\"/>\n",
            pts.join(" ")
        ));
    }
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n{body}</svg>\n"
    )
}

/// Unit vector shadow of a direction, handy for sampling by angle.
pub fn direction_from_angle(theta: f64) -> Result<Direction, TeichError> {
    let den = 1_000_000i64;
    let x = FieldElement::ratio((theta.cos() * den as f64).round() as i64, den);
    let y = FieldElement::ratio((theta.sin() * den as f64).round() as i64, den);
    Ok(Direction::new(Vec2::new(x, y))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions_and_reflections() {
        for m in [alpha(), beta(), gamma()] {
            assert!((&m * &m).is_identity());
        }
        let [sa, sb, se] = triangle_sides();
        assert!(is_reflection_in(&alpha(), &sa));
        assert!(is_reflection_in(&beta(), &sb));
        assert!(is_reflection_in(&gamma(), &se));
        assert!(!is_reflection_in(&alpha(), &sb));
        assert!(!is_reflection_in(&gamma(), &sa));
    }

    #[test]
    fn triangle_in_the_disk() {
        let [sa, sb, _] = triangle_sides();
        // the α side is the horizontal diameter, β's boundary end is at angle 2π/3
        let (x, y) = sa.a.to_disk();
        assert!((x + 1.0).abs() < 1e-12 && y.abs() < 1e-12);
        let (x, y) = sb.a.to_disk();
        assert!((y.atan2(x) - 2.0 * std::f64::consts::PI / 3.0).abs() < 1e-12);
        assert_eq!(HyperbolicPoint::i().to_disk(), (0.0, 0.0));
    }

    #[test]
    fn endpoints() {
        let e = ray_endpoint(&Direction::from_ints(1, 1).unwrap()).unwrap();
        assert_eq!(e.half_plane, fe("-1"));
        assert!((e.disk_angle - std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        let e = ray_endpoint(&Direction::new(Vec2::new(fe("r3"), fe("1"))).unwrap()).unwrap();
        assert_eq!(e.half_plane, fe("-1/3r3"));
        assert_eq!(ray_endpoint(&Direction::from_ints(0, 1).unwrap()).unwrap_err(), TeichError::Degenerate);
        for k in 1..50 {
            let theta = std::f64::consts::PI * k as f64 / 50.0 + 0.003;
            let d = direction_from_angle(theta).unwrap();
            let e = ray_endpoint(&d).unwrap();
            let t = d.angle_f64();
            let want = ((std::f64::consts::PI - 2.0 * t).cos(), (std::f64::consts::PI - 2.0 * t).sin());
            assert!((e.disk.0 - want.0).abs() < 1e-12 && (e.disk.1 - want.1).abs() < 1e-12, "{theta}");
        }
    }

    #[test]
    fn sides_are_reflected_by_their_gamma() {
        let sides = hexagon_sides();
        for (i, s) in sides.iter().enumerate() {
            assert!(is_reflection_in(&gamma_i(i), s), "E{i}");
        }
        for i in 0..6 {
            for j in i + 1..6 {
                assert!(!sides[i].same(&sides[j]));
            }
        }
    }

    #[test]
    fn first_label_is_the_sector() {
        let d = Direction::from_ints(5, 1).unwrap();
        let s = teich_cutting_sequence(&d, 6).unwrap();
        assert_eq!(s.labels[0], 0);
        assert!(s.no_immediate_repeats());
        let d = Direction::from_ints(-1, 3).unwrap();
        assert_eq!(teich_cutting_sequence(&d, 1).unwrap().labels, vec![3]);
    }

    #[test]
    fn addresses() {
        let a = TessellationAddress { word: vec![0, 2, 0] };
        assert!(a.is_reduced());
        assert!(!TessellationAddress { word: vec![1, 1] }.is_reduced());
        // neighbours across side j differ by one generator
        let b = TessellationAddress { word: vec![0, 2, 0, 4] };
        assert!(a.sides()[4].same(&b.sides()[4]));
    }

    #[test]
    fn svg_draws() {
        let s = tessellation_svg(1, true);
        assert!(s.starts_with("<svg") && s.matches("<polyline").count() >= 6);
    }
}

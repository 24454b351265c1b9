//! The Bouw-Möller surface M(3,4): the octagon-and-two-squares
//! presentation R₁, the hexagons-and-triangles presentation R₂, the affine
//! map between them, the sixteen direction sectors and the derivation
//! operator that turns R₁ cutting sequences into R₂ cutting sequences.

mod grid;

pub use grid::{bm_grid_graph, validate_grid_graph, GridEdge, GridGraph, GridValidation, GridVertex, PieceFamily};

use serde::{Deserialize, Serialize};

use crate::coding::{CodingError, CodingScheme, Permutation, SymmetryData, TransitionDiagram, Word};
use crate::exact::{fe, sector_of, Direction, ExactError, FieldElement, Mat2, ScaledMatrix, SectorScheme, Vec2};
use crate::surface::{
    cylinder_decomposition, locate, trace, CutAndPaste, Piece, Polygon, SurfaceError, SurfacePresentation,
    Trajectory,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BmError {
    #[error("direction is not inside the first sector (sectors {0:?})")]
    OutsideSector(Vec<usize>),
    #[error("presentations do not overlay: {0}")]
    Overlay(String),
    #[error(transparent)]
    Coding(#[from] CodingError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

fn v(x: &str, y: &str) -> Vec2 {
    Vec2::new(fe(x), fe(y))
}

fn labels(s: &str) -> Vec<char> {
    s.chars().collect()
}

/// Octagon vertices with unit sides, starting at the bottom of the right side.
fn octagon() -> Vec<Vec2> {
    vec![
        v("1/2+1/2r2", "-1/2"),
        v("1/2+1/2r2", "1/2"),
        v("1/2", "1/2+1/2r2"),
        v("-1/2", "1/2+1/2r2"),
        v("-1/2-1/2r2", "1/2"),
        v("-1/2-1/2r2", "-1/2"),
        v("-1/2", "-1/2-1/2r2"),
        v("1/2", "-1/2-1/2r2"),
    ]
}

/// Square sitting on the top side of the octagon.
fn upright_square() -> Vec<Vec2> {
    vec![v("-1/2", "1/2+1/2r2"), v("1/2", "1/2+1/2r2"), v("1/2", "3/2+1/2r2"), v("-1/2", "3/2+1/2r2")]
}

/// Square turned by π/4, sitting on the upper-left side of the octagon.
fn tilted_square() -> Vec<Vec2> {
    vec![v("-1/2-1/2r2", "1/2"), v("-1/2", "1/2+1/2r2"), v("-1/2-1/2r2", "1/2+r2"), v("-1/2-r2", "1/2+1/2r2")]
}

/// R₁: the regular octagon (sides `C D E F G H A B` counterclockwise from
/// the right), the square `E G A C` and the turned square `F H B D`.
pub fn build_r1() -> SurfacePresentation {
    SurfacePresentation::new(
        "bm-r1",
        vec![Polygon::new(octagon()), Polygon::new(upright_square()), Polygon::new(tilted_square())],
        vec![labels("CDEFGHAB"), labels("EGAC"), labels("FHBD")],
    )
    .expect("R1 is valid")
}

/// Polygon with the given side lengths and directions `kπ/3`.
fn semi_regular(start: Vec2, sides: &[(&FieldElement, usize)]) -> Polygon {
    let dirs = [v("1", "0"), v("1/2", "1/2r3"), v("-1/2", "1/2r3"), v("-1", "0"), v("-1/2", "-1/2r3"), v("1/2", "-1/2r3")];
    let mut out = vec![start];
    for (len, k) in &sides[..sides.len() - 1] {
        let next = out.last().unwrap() + &dirs[*k].scale(len);
        out.push(next);
    }
    Polygon::new(out)
}

/// R₂ in shape units: two semi-regular hexagons with sides `1` and `√2/2`
/// and two equilateral triangles of side `√2/2`. The true side length `a`
/// has `a² = 2√6/3` (see [`r2_scale_sq`]). Labels `a`…`i` stand for `A′`…`I′`.
pub fn build_r2() -> SurfacePresentation {
    let (l, s) = (fe("1"), fe("1/2r2"));
    let hex1 = semi_regular(v("0", "0"), &[(&l, 0), (&s, 1), (&l, 2), (&s, 3), (&l, 4), (&s, 5)]);
    let hex2 = semi_regular(v("3", "0"), &[(&s, 0), (&l, 1), (&s, 2), (&l, 3), (&s, 4), (&l, 5)]);
    let up = semi_regular(v("0", "-2"), &[(&s, 0), (&s, 2), (&s, 4)]);
    let down = semi_regular(v("3", "-2"), &[(&s, 1), (&s, 3), (&s, 5)]);
    SurfacePresentation::new(
        "bm-r2",
        vec![hex1, hex2, up, down],
        vec![labels("bhfacg"), labels("ecibdf"), labels("agh"), labels("dei")],
    )
    .expect("R2 is valid")
}

/// `a²` for R₂, chosen so that both presentations have the same area.
pub fn r2_scale_sq() -> FieldElement {
    fe("2/3r6")
}

/// R₁ sheared so that the horizontal and `3π/4` decompositions are orthogonal.
pub fn build_r1_perp() -> SurfacePresentation {
    let mut s = build_r1().transform(&sigma1()).expect("shear is invertible");
    s.name = "bm-r1-perp".into();
    s
}

/// R₂ with the horizontal and `π/3` decompositions made orthogonal.
pub fn build_r2_perp() -> SurfacePresentation {
    let mut s = build_r2().transform(&sigma3().inv().expect("unipotent")).expect("shear is invertible");
    s.name = "bm-r2-perp".into();
    s
}

pub fn sigma1() -> Mat2 {
    Mat2::ints(1, 1, 0, 1)
}

pub fn sigma2() -> ScaledMatrix {
    ScaledMatrix::new(Mat2::new(fe("1/2r2"), fe("0"), fe("0"), fe("1/2r3")), r2_scale_sq()).expect("positive scale")
}

pub fn sigma3() -> Mat2 {
    Mat2::new(fe("1"), fe("1/3r3"), fe("0"), fe("1"))
}

/// `σ = σ₃σ₂σ₁`.
pub fn sigma() -> ScaledMatrix {
    &(&ScaledMatrix::from(sigma3()) * &sigma2()) * &ScaledMatrix::from(sigma1())
}

/// R₁ cut along the diagonals `G′ F′ I′` of the octagon, the anti-diagonal
/// `C′` of the square and the horizontal diagonal `B′` of the turned
/// square, reassembled along `B C F G` into two hexagons and two triangles.
/// Polygon order and labels follow [`build_r2`].
pub fn assembly() -> SurfacePresentation {
    let o = octagon();
    let hex1 = Polygon::new(vec![
        o[7].clone(),
        v("1/2+r2", "-1/2-1/2r2"),
        o[0].clone(),
        o[4].clone(),
        v("-3/2-1/2r2", "1/2"),
        o[5].clone(),
    ]);
    let hex2 = Polygon::new(vec![
        o[0].clone(),
        v("3/2+1/2r2", "-1/2"),
        o[1].clone(),
        o[3].clone(),
        v("-1/2-r2", "1/2+1/2r2"),
        o[4].clone(),
    ]);
    let up = Polygon::new(vec![o[6].clone(), o[7].clone(), o[5].clone()]);
    let down = Polygon::new(vec![o[1].clone(), o[2].clone(), o[3].clone()]);
    SurfacePresentation::new(
        "bm-assembly",
        vec![hex1, hex2, up, down],
        vec![labels("bhfacg"), labels("ecibdf"), labels("agh"), labels("dei")],
    )
    .expect("assembly is valid")
}

/// `Υ_S`: the eight pieces of R₁ moved by translations onto the assembly.
pub fn upsilon() -> CutAndPaste {
    let o = octagon();
    let sq = upright_square();
    let tl = tilted_square();
    let tri = |a: &Vec2, b: &Vec2, c: &Vec2| Polygon::new(vec![a.clone(), b.clone(), c.clone()]);
    let quad = |i: [usize; 4]| Polygon::new(i.iter().map(|&k| o[k].clone()).collect());
    let piece = |source_poly, region, translation, target_poly| Piece { source_poly, region, translation, target_poly };
    let pieces = vec![
        piece(0, tri(&o[6], &o[7], &o[5]), Vec2::zero(), 2),
        piece(0, quad([7, 0, 4, 5]), Vec2::zero(), 0),
        piece(0, quad([0, 1, 3, 4]), Vec2::zero(), 1),
        piece(0, tri(&o[1], &o[2], &o[3]), Vec2::zero(), 3),
        // square halves on either side of its anti-diagonal
        piece(1, tri(&sq[0], &sq[1], &sq[3]), v("1+1/2r2", "-1-1/2r2"), 1),
        piece(1, tri(&sq[1], &sq[2], &sq[3]), v("-1-1/2r2", "-1-1/2r2"), 0),
        // turned square halves on either side of its horizontal diagonal
        piece(2, tri(&tl[0], &tl[1], &tl[3]), Vec2::zero(), 1),
        piece(2, tri(&tl[3], &tl[1], &tl[2]), v("1+r2", "-1-r2"), 0),
    ];
    CutAndPaste::new(build_r1(), assembly(), pieces).expect("cut and paste tiles")
}

/// True when `a` is `b` translated, with the same labels up to a cyclic shift.
fn overlay_shift(a: &Polygon, la: &[char], b: &Polygon, lb: &[char]) -> Option<Vec2> {
    let n = a.len();
    if b.len() != n {
        return None;
    }
    (0..n).find_map(|r| {
        let t = b.vertex(r) - a.vertex(0);
        let same = (0..n).all(|k| &(a.vertex(k) + &t) == b.vertex(k + r) && la[k] == lb[(k + r) % n]);
        same.then_some(t)
    })
}

/// The affine map `Ψ_σ : R₁ → R₂` with derivative `σ`: `Υ_S`, then the
/// shape of `σ`, then the translation putting each polygon onto R₂.
#[derive(Clone, Debug)]
pub struct BmAffineMap {
    pub upsilon: CutAndPaste,
    pub sigma: ScaledMatrix,
    pub r2: SurfacePresentation,
    /// Target R₂ polygon and translation for each assembly polygon.
    pub placement: Vec<(usize, Vec2)>,
}

impl BmAffineMap {
    pub fn new() -> Result<Self, BmError> {
        let upsilon = upsilon();
        let sigma = sigma();
        let r2 = build_r2();
        let image = upsilon.target.transform(&sigma)?;
        let mut placement = Vec::new();
        for (i, p) in image.polygons.iter().enumerate() {
            let hit = r2
                .polygons
                .iter()
                .enumerate()
                .find_map(|(j, q)| overlay_shift(p, &image.labels[i], q, &r2.labels[j]).map(|t| (j, t)));
            match hit {
                Some(h) => placement.push(h),
                None => return Err(BmError::Overlay(format!("assembly polygon {i} matches no R2 polygon"))),
            }
        }
        Ok(BmAffineMap { upsilon, sigma, r2, placement })
    }

    pub fn apply_point(&self, p: &Vec2) -> Result<Vec2, BmError> {
        let q = self.upsilon.apply(p)?;
        let target = locate(&self.upsilon.target, &q)?;
        Ok(&self.sigma.apply_shape(&q) + &self.placement[target].1)
    }

    pub fn apply(&self, t: &Trajectory) -> Result<Trajectory, BmError> {
        let d = Direction::new(self.sigma.apply_shape(t.direction.vector()))?;
        Ok(Trajectory::new(self.apply_point(&t.start)?, d))
    }
}

/// `ν₀ … ν₁₅`, each sending sector `Σᵢ` onto `Σ₀`, with the label
/// permutations they induce on R₁.
pub fn bm_symmetry() -> SymmetryData {
    let m = |a: &str, b: &str, c: &str, d: &str| Mat2::new(fe(a), fe(b), fe(c), fe(d));
    let r1 = Mat2::ints(1, 0, 0, -1);
    let first: Vec<Mat2> = vec![
        Mat2::identity(),
        m("1/2r2", "-1/2r2", "-1/2r2", "-1/2r2"),
        m("1/2r2", "-1/2r2", "1/2r2", "1/2r2"),
        // reflection in the line at 3π/4
        m("0", "-1", "-1", "0"),
        Mat2::ints(0, -1, 1, 0),
        m("-1/2r2", "-1/2r2", "-1/2r2", "1/2r2"),
        m("-1/2r2", "-1/2r2", "1/2r2", "-1/2r2"),
        Mat2::ints(-1, 0, 0, 1),
    ];
    let mut matrices = first.clone();
    matrices.extend(first.iter().rev().map(|n| n * &r1));
    let perms = [
        "",
        "(AD)(BC)(EH)(FG)",
        "(ABCDEFGH)",
        "(AC)(DH)(EG)",
        "(ACEG)(BDFH)",
        "(AB)(CH)(DG)(EF)",
        "(ADGBEHCF)",
        "(BH)(CG)(DF)",
        "(AE)(BF)(CG)(DH)",
        "(AH)(BG)(CF)(DE)",
        "(AFCHEBGD)",
        "(AG)(BF)(CE)",
        "(AGEC)(BHFD)",
        "(AF)(BE)(CD)(GH)",
        "(AHGFEDCB)",
        "(AE)(BD)(FH)",
    ]
    .iter()
    .map(|c| Permutation::from_cycles("ABCDEFGH", c))
    .collect();
    SymmetryData { matrices, perms }
}

/// First transition diagram with the crossings of the new sides on its arrows.
pub fn bm_d0() -> TransitionDiagram {
    TransitionDiagram::new(
        "D0",
        "ABCDEFGH",
        &[
            ('H', 'B', ""),
            ('B', 'H', "g"),
            ('B', 'G', ""),
            ('F', 'B', "b"),
            ('F', 'D', ""),
            ('D', 'F', "i"),
            ('D', 'E', ""),
            ('A', 'H', ""),
            ('G', 'A', ""),
            ('G', 'C', "c"),
            ('C', 'G', "f"),
            ('C', 'F', ""),
            ('E', 'C', ""),
        ],
    )
}

/// The sixteen diagrams `Dᵢ = πᵢ⁻¹ · D₀` with the symmetry data.
pub fn bm_scheme() -> CodingScheme {
    let symmetry = bm_symmetry();
    let d0 = bm_d0().unlabeled();
    let diagrams = symmetry.perms.iter().enumerate().map(|(i, p)| d0.relabel(format!("D{i}"), &p.inverse())).collect();
    CodingScheme { name: "bouw-moller".into(), alphabet: "ABCDEFGH".into(), diagrams, symmetry }
}

/// Derivation of a word admissible in `D₀`: interpolate the arrow labels,
/// keep `A D E H` as their primed versions and drop `B C F G`.
pub fn bm_derive(w: &Word) -> Result<Word, BmError> {
    let aug = bm_d0().interpolate(w)?;
    Ok(Word::new(
        aug.letters
            .iter()
            .filter_map(|&c| match c {
                'A' | 'D' | 'E' | 'H' => Some(c.to_ascii_lowercase()),
                'B' | 'C' | 'F' | 'G' => None,
                other => Some(other),
            })
            .collect(),
    ))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ShearPipeline {
    pub sigma1: Mat2,
    pub sigma2: ScaledMatrix,
    pub sigma3: Mat2,
    pub sigma: ScaledMatrix,
    pub effective_det: FieldElement,
    /// `Υ_S` tiles exactly and `σ` carries its image onto R₂ polygon by polygon.
    pub overlay_ok: bool,
}

pub fn bm_shear_pipeline() -> ShearPipeline {
    let s = sigma();
    ShearPipeline {
        sigma1: sigma1(),
        sigma2: sigma2(),
        sigma3: sigma3(),
        effective_det: s.effective_det(),
        sigma: s,
        overlay_ok: BmAffineMap::new().is_ok(),
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremCase {
    pub derived: String,
    pub r2_trace: String,
    pub offset: Option<usize>,
}

/// One trajectory of R₁ in `Σ₀`: the derived R₁ sequence against the R₂
/// sequence of its image under `Ψ_σ`. Arrow labels can make the derived
/// word as long as the window it came from, so the R₂ window gets `n`
/// letters beyond the derived length.
pub fn theorem_case(map: &BmAffineMap, t: &Trajectory, n: usize) -> Result<TheoremCase, BmError> {
    let s = sector_of(&t.direction, SectorScheme::BouwMoller);
    if s.unique() != Some(0) {
        return Err(BmError::OutsideSector(s.indices));
    }
    let w = trace(&build_r1(), t, n)?;
    let derived = bm_derive(&w)?;
    let w2 = trace(&map.r2, &map.apply(t)?, n + derived.len())?;
    Ok(TheoremCase { offset: derived.find_in(&w2), derived: derived.as_str(), r2_trace: w2.as_str() })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TheoremReport {
    pub samples: usize,
    pub matched: usize,
    /// Samples redrawn because the trajectory met a vertex or a piece boundary.
    pub redrawn: usize,
    pub failures: Vec<TheoremCase>,
}

/// Seeded random `Σ₀` trajectories of R₁, checked with [`theorem_case`].
pub fn verify_theorem_main(samples: usize, n: usize, seed: u64) -> Result<TheoremReport, BmError> {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let map = BmAffineMap::new()?;
    let r1 = build_r1();
    let mut report = TheoremReport { samples, matched: 0, redrawn: 0, failures: Vec::new() };
    let mut done = 0;
    while done < samples {
        let d = crate::sampling::octant_direction(&mut rng, 7);
        let t = crate::sampling::trajectory(&mut rng, &r1, d);
        match theorem_case(&map, &t, n) {
            Ok(c) => {
                done += 1;
                if c.offset.is_some() {
                    report.matched += 1;
                } else {
                    report.failures.push(c);
                }
            }
            Err(BmError::Surface(_)) => report.redrawn += 1,
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

/// Sector `Σᵢ` as the octant index used by the samplers.
pub fn sector_octant(i: usize) -> usize {
    (23 - i) % 16
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ModulusReport {
    pub cylinders: usize,
    pub inverse_moduli: Vec<FieldElement>,
    pub all_equal_two_plus_root2: bool,
    pub gamma: Mat2,
    pub gamma_det: FieldElement,
    pub gamma_trace: FieldElement,
}

/// Horizontal cylinders of R₁ and the parabolic `γ = [[1, 2+√2], [0, 1]]`
/// that acts as a single Dehn twist on each of them.
pub fn cylinder_modulus_check() -> Result<ModulusReport, BmError> {
    let d = cylinder_decomposition(&build_r1(), &Direction::from_ints(1, 0)?)?;
    let mu: Vec<FieldElement> = d.cylinders.iter().map(|c| c.inverse_modulus.clone()).collect();
    let target = fe("2+r2");
    let gamma = Mat2::new(fe("1"), target.clone(), fe("0"), fe("1"));
    Ok(ModulusReport {
        cylinders: mu.len(),
        all_equal_two_plus_root2: mu.iter().all(|m| *m == target),
        inverse_moduli: mu,
        gamma_det: gamma.det(),
        gamma_trace: gamma.trace(),
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::octant_boundaries;

    #[test]
    fn areas() {
        assert_eq!(build_r1().area, fe("4+2r2"));
        assert_eq!(&build_r2().area * &r2_scale_sq(), build_r1().area);
        assert_eq!(build_r2().area, fe("r3+r6"));
    }

    #[test]
    fn sigma_matrix() {
        let s = sigma();
        assert_eq!(s.shape, Mat2::new(fe("1/2r2"), fe("1/2+1/2r2"), fe("0"), fe("1/2r3")));
        assert_eq!(s.scale_sq, fe("2/3r6"));
        assert_eq!(s.effective_det(), fe("1"));
    }

    #[test]
    fn upsilon_tiles_and_overlays() {
        upsilon().validate().unwrap();
        let m = BmAffineMap::new().unwrap();
        let mut targets: Vec<usize> = m.placement.iter().map(|p| p.0).collect();
        targets.sort_unstable();
        assert_eq!(targets, vec![0, 1, 2, 3]);
    }

    #[test]
    fn short_sides_of_r2() {
        let r2 = build_r2();
        for (p, poly) in r2.polygons.iter().enumerate() {
            for k in 0..poly.len() {
                let l = poly.edge(k).norm_sq();
                assert!(l == fe("1") || l == fe("1/2"), "{p} {k}");
            }
        }
    }

    #[test]
    fn symmetries_send_sectors_to_the_first() {
        let sym = bm_symmetry();
        let b = octant_boundaries();
        for i in 0..16 {
            let k = sector_octant(i);
            let mid = Direction::new(&b[k] + &b[(k + 1) % 16]).unwrap();
            assert_eq!(sector_of(&mid, SectorScheme::BouwMoller).unique(), Some(i));
            let img = mid.transform(&sym.matrices[i]).unwrap();
            assert_eq!(sector_of(&img, SectorScheme::BouwMoller).unique(), Some(0), "nu_{i}");
            assert!(sym.perms[i].is_bijection());
            let det = sym.matrices[i].det();
            assert!(det == fe("1") || det == fe("-1"));
        }
    }

    #[test]
    fn sigma_transports_the_first_sector() {
        let s = sigma();
        let lo = Direction::new(s.apply_shape(&v("-1-r2", "1"))).unwrap();
        assert_eq!(lo, Direction::new(v("-1/2", "1/2r3")).unwrap());
        let hi = Direction::new(s.apply_shape(&v("-1", "0"))).unwrap();
        assert_eq!(hi, Direction::from_ints(-1, 0).unwrap());
    }

    #[test]
    fn derivation_examples() {
        assert_eq!(bm_derive(&Word::from("BH")).unwrap(), Word::from("gh"));
        let w = bm_derive(&Word::from("AHBGCFDE")).unwrap();
        assert_eq!(w.as_str(), "ahcde");
        assert!(w.letters.iter().all(|c| !"BCFG".contains(*c)));
        assert!(bm_derive(&Word::from("AB")).is_err());
    }

    #[test]
    fn moduli() {
        let r = cylinder_modulus_check().unwrap();
        assert_eq!(r.cylinders, 3);
        assert!(r.all_equal_two_plus_root2);
        assert_eq!((r.gamma_det, r.gamma_trace), (fe("1"), fe("2")));
    }

    #[test]
    fn horizontal_is_a_boundary() {
        let map = BmAffineMap::new().unwrap();
        let t = Trajectory::new(v("1/7", "1/9"), Direction::from_ints(-1, 0).unwrap());
        assert!(matches!(theorem_case(&map, &t, 10), Err(BmError::OutsideSector(_))));
    }
}

//! Seeded generators for exact random directions and trajectories.

use rand::Rng;

use crate::coding::{TransitionDiagram, Word};
use crate::exact::{hexagon_boundaries, octant_boundaries, Direction, FieldElement, Vec2};
use crate::surface::{locate, SurfacePresentation, Trajectory};

/// Rational in `(lo, hi)` with denominator up to `den`.
pub fn rational<R: Rng>(rng: &mut R, lo: f64, hi: f64, den: i64) -> FieldElement {
    loop {
        let q = rng.gen_range(den / 2..=den);
        let p = rng.gen_range((lo * q as f64).ceil() as i64..=(hi * q as f64).floor() as i64);
        let x = p as f64 / q as f64;
        if x > lo && x < hi {
            return FieldElement::ratio(p, q);
        }
    }
}

/// Direction strictly inside the cone between `a` and `b`, away from both rays.
pub fn direction_between<R: Rng>(rng: &mut R, a: &Vec2, b: &Vec2) -> Direction {
    let t = rational(rng, 0.02, 0.98, 997);
    // a small √2 component keeps the slope off every lattice direction
    let wobble = FieldElement::sqrt2().scale(&num_rational::BigRational::new(1.into(), 1009.into()));
    let t = &t + &(&wobble * &rational(rng, -1.0, 1.0, 13));
    let v = &a.scale(&(&FieldElement::one() - &t)) + &b.scale(&t);
    Direction::new(v).expect("nonzero")
}

/// Direction in hexagon sector `i` (`[iπ/6, (i+1)π/6]`).
pub fn hexagon_sector_direction<R: Rng>(rng: &mut R, i: usize) -> Direction {
    let b = hexagon_boundaries();
    direction_between(rng, &b[i], &b[i + 1])
}

/// Direction in the sector between angles `kπ/8` and `(k+1)π/8`, `k ∈ 0..16`.
pub fn octant_direction<R: Rng>(rng: &mut R, k: usize) -> Direction {
    let b = octant_boundaries();
    direction_between(rng, &b[k % 16], &b[(k + 1) % 16])
}

/// A rational point in the interior of polygon `poly` of `s`.
pub fn interior_point<R: Rng>(rng: &mut R, s: &SurfacePresentation, poly: usize) -> Vec2 {
    let p = &s.polygons[poly];
    let c = p.centroid();
    loop {
        let k = p.len();
        let j = rng.gen_range(0..k);
        let a = p.vertex(j);
        let b = p.vertex((j + 1) % k);
        let u = rational(rng, 0.01, 0.97, 211);
        let v = rational(rng, 0.01, 0.97, 211);
        let one = FieldElement::one();
        let (u, v) = if (&u + &v).to_f64() < 1.0 { (u, v) } else { (&one - &u, &one - &v) };
        let q = &(&c + &(a - &c).scale(&u)) + &(b - &c).scale(&v);
        if locate(s, &q) == Ok(poly) {
            return q;
        }
    }
}

/// A trajectory starting in a random polygon, in direction `d`.
pub fn trajectory<R: Rng>(rng: &mut R, s: &SurfacePresentation, d: Direction) -> Trajectory {
    let poly = rng.gen_range(0..s.polygons.len());
    Trajectory::new(interior_point(rng, s, poly), d)
}

/// Random walk of `len` letters along the arrows of `d`.
pub fn admissible_walk<R: Rng>(rng: &mut R, d: &TransitionDiagram, len: usize) -> Word {
    let mut cur = d.nodes[rng.gen_range(0..d.nodes.len())];
    let mut out = vec![cur];
    while out.len() < len {
        let next: Vec<char> = d.edges.iter().filter(|e| e.from == cur).map(|e| e.to).collect();
        cur = next[rng.gen_range(0..next.len())];
        out.push(cur);
    }
    Word::new(out)
}

use serde::{Deserialize, Serialize};

use super::{is_internal_label, Polygon, SurfaceError, SurfacePresentation};
use crate::coding::Word;
use crate::exact::{Direction, FieldElement, Vec2};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Trajectory {
    pub start: Vec2,
    pub direction: Direction,
}

impl Trajectory {
    pub fn new(start: Vec2, direction: Direction) -> Self {
        Trajectory { start, direction }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    pub label: char,
    pub poly: usize,
    pub side: usize,
}

/// Polygon whose interior contains `p`.
pub fn locate(s: &SurfacePresentation, p: &Vec2) -> Result<usize, SurfaceError> {
    let mut boundary = false;
    for (i, poly) in s.polygons.iter().enumerate() {
        match poly.side_of(p) {
            1 => return Ok(i),
            0 => boundary = true,
            _ => {}
        }
    }
    Err(if boundary { SurfaceError::OnBoundary } else { SurfaceError::NotInside })
}

/// `cross(e_k, d)` for every side of every polygon.
fn side_dens(s: &SurfacePresentation, d: &Vec2) -> Vec<Vec<FieldElement>> {
    s.polygons
        .iter()
        .map(|p| (0..p.len()).map(|k| p.edge(k).cross(d)).collect())
        .collect()
}

/// Exit side of the line `q + T d` from a convex polygon: the smallest
/// exit parameter among sides facing away from `d`. Returns the side
/// with its parameter as the fraction `num / den` (`den < 0`).
fn exit_side(
    poly: &Polygon,
    dens: &[FieldElement],
    q: &Vec2,
) -> (usize, FieldElement, FieldElement) {
    let mut best: Option<(usize, FieldElement, FieldElement)> = None;
    for (k, den) in dens.iter().enumerate() {
        if den.sign() >= 0 {
            continue;
        }
        let num = poly.edge(k).cross(&(poly.vertex(k) - q));
        let better = match &best {
            None => true,
            Some((_, bn, bd)) => (&num * bd - bn * den).sign() < 0,
        };
        if better {
            best = Some((k, num, den.clone()));
        }
    }
    best.expect("a bounded polygon has an exit side")
}

fn hits_vertex(poly: &Polygon, k: usize, q: &Vec2, d: &Vec2) -> bool {
    d.cross(&(poly.vertex(k) - q)).is_zero() || d.cross(&(poly.vertex(k + 1) - q)).is_zero()
}

/// Side crossings of the trajectory from `start` in polygon `poly`, until
/// `n` labeled sides have been crossed.
pub fn trace_crossings(
    s: &SurfacePresentation,
    poly: usize,
    start: &Vec2,
    d: &Direction,
    n: usize,
) -> Result<Vec<Crossing>, SurfaceError> {
    let d = d.vector();
    let dens = side_dens(s, d);
    let mut q = start.clone();
    let mut p = poly;
    let mut out = Vec::with_capacity(n);
    let mut steps = 0usize;
    while out.len() < n {
        let polygon = &s.polygons[p];
        let (k, _, _) = exit_side(polygon, &dens[p], &q);
        if hits_vertex(polygon, k, &q, d) {
            return Err(SurfaceError::VertexHit(out.len()));
        }
        let label = s.labels[p][k];
        if !is_internal_label(label) {
            out.push(Crossing { label, poly: p, side: k });
        }
        let pr = &s.pairing[p][k];
        q = &q + &pr.translation;
        p = pr.target.poly;
        steps += 1;
        if steps > 64 * (n + 1) {
            return Err(SurfaceError::StepBound);
        }
    }
    Ok(out)
}

/// Cutting sequence: the first `n` labels crossed.
pub fn trace(s: &SurfacePresentation, t: &Trajectory, n: usize) -> Result<Word, SurfaceError> {
    let p = locate(s, &t.start)?;
    let c = trace_crossings(s, p, &t.start, &t.direction, n)?;
    Ok(Word::new(c.into_iter().map(|c| c.label).collect()))
}

/// Moves the point `start` of polygon `poly` along the straight vector `w`,
/// crossing sides as needed. Returns the final polygon and point.
pub fn flow(
    s: &SurfacePresentation,
    poly: usize,
    start: &Vec2,
    w: &Vec2,
) -> Result<(usize, Vec2), SurfaceError> {
    if w.is_zero() {
        return Ok((poly, start.clone()));
    }
    let dens = side_dens(s, w);
    let mut q = start.clone();
    let mut p = poly;
    for step in 0..100_000 {
        let polygon = &s.polygons[p];
        let (k, num, den) = exit_side(polygon, &dens[p], &q);
        // parameter 1 reached before the exit: num/den > 1 with den < 0
        match (&num - &den).sign() {
            s if s < 0 => return Ok((p, &q + w)),
            0 => return Err(SurfaceError::OnBoundary),
            _ => {}
        }
        if hits_vertex(polygon, k, &q, w) {
            return Err(SurfaceError::VertexHit(step));
        }
        let pr = &s.pairing[p][k];
        q = &q + &pr.translation;
        p = pr.target.poly;
    }
    Err(SurfaceError::StepBound)
}

/// Float segments of the first `n` crossings, one per polygon visit, for
/// drawing.
pub fn trace_segments(
    s: &SurfacePresentation,
    t: &Trajectory,
    n: usize,
) -> Result<Vec<(usize, (f64, f64), (f64, f64))>, SurfaceError> {
    let d = t.direction.vector();
    let dens = side_dens(s, d);
    let mut p = locate(s, &t.start)?;
    let mut q = t.start.clone();
    let mut from = q.clone();
    let mut segs = Vec::new();
    for i in 0..n {
        let polygon = &s.polygons[p];
        let (k, num, den) = exit_side(polygon, &dens[p], &q);
        if hits_vertex(polygon, k, &q, d) {
            return Err(SurfaceError::VertexHit(i));
        }
        let tt = num.checked_div(&den)?;
        let hit = &q + &d.scale(&tt);
        segs.push((p, from.to_f64(), hit.to_f64()));
        let pr = &s.pairing[p][k];
        from = &hit + &pr.translation;
        q = &q + &pr.translation;
        p = pr.target.poly;
    }
    Ok(segs)
}

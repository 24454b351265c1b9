use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{Polygon, SurfaceError, SurfacePresentation};
use crate::exact::{FieldElement, Vec2};

/// A convex region of one source polygon, moved rigidly by `translation`
/// into polygon `target_poly` of the target presentation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Piece {
    pub source_poly: usize,
    pub region: Polygon,
    pub translation: Vec2,
    pub target_poly: usize,
}

/// Piecewise translation between two presentations of the same surface.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CutAndPaste {
    pub source: SurfacePresentation,
    pub target: SurfacePresentation,
    pub pieces: Vec<Piece>,
}

/// True when the interiors of two convex polygons do not meet, decided by
/// an exact separating-axis test over the sides of both.
pub fn convex_disjoint(a: &Polygon, b: &Polygon) -> bool {
    let separates = |p: &Polygon, q: &Polygon| {
        (0..p.len()).any(|k| {
            let e = p.edge(k);
            q.vertices.iter().all(|v| e.cross(&(v - p.vertex(k))).sign() <= 0)
        })
    };
    separates(a, b) || separates(b, a)
}

impl CutAndPaste {
    pub fn new(
        source: SurfacePresentation,
        target: SurfacePresentation,
        pieces: Vec<Piece>,
    ) -> Result<Self, SurfaceError> {
        let m = CutAndPaste { source, target, pieces };
        m.validate()?;
        Ok(m)
    }

    /// Image of `p`; on shared piece boundaries the first listed piece wins.
    pub fn apply(&self, p: &Vec2) -> Result<Vec2, SurfaceError> {
        self.pieces
            .iter()
            .find(|pc| pc.region.contains_closed(p))
            .map(|pc| p + &pc.translation)
            .ok_or(SurfaceError::NotInside)
    }

    /// Tiling checks: pieces are convex, lie in their polygons, do not
    /// overlap on either side, and account for the whole area exactly.
    pub fn validate(&self) -> Result<(), SurfaceError> {
        let bad = |m: String| Err(SurfaceError::BadCut(m));
        let mut area = FieldElement::zero();
        for (i, pc) in self.pieces.iter().enumerate() {
            if !pc.region.is_strictly_convex() {
                return bad(format!("piece {i} is not convex"));
            }
            let src = &self.source.polygons[pc.source_poly];
            if !pc.region.vertices.iter().all(|v| src.contains_closed(v)) {
                return bad(format!("piece {i} leaves source polygon {}", pc.source_poly));
            }
            let moved = pc.region.translate(&pc.translation);
            let dst = &self.target.polygons[pc.target_poly];
            if !moved.vertices.iter().all(|v| dst.contains_closed(v)) {
                return bad(format!("piece {i} leaves target polygon {}", pc.target_poly));
            }
            area = area + pc.region.area();
        }
        for i in 0..self.pieces.len() {
            for j in i + 1..self.pieces.len() {
                let (a, b) = (&self.pieces[i], &self.pieces[j]);
                if a.source_poly == b.source_poly && !convex_disjoint(&a.region, &b.region) {
                    return bad(format!("pieces {i} and {j} overlap in the source"));
                }
                let (ma, mb) = (a.region.translate(&a.translation), b.region.translate(&b.translation));
                if a.target_poly == b.target_poly && !convex_disjoint(&ma, &mb) {
                    return bad(format!("pieces {i} and {j} overlap in the target"));
                }
            }
        }
        if area != self.source.area || area != self.target.area {
            return bad(format!("piece area {area} differs from surface area"));
        }
        Ok(())
    }
}

fn as_integer(x: &FieldElement) -> Option<BigInt> {
    x.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
}

fn from_int(n: &BigInt) -> FieldElement {
    FieldElement::from_rational(&BigRational::from_integer(n.clone()))
}

/// Basis of the lattice generated by the side translations of a
/// single-polygon genus-one presentation.
pub fn lattice_basis(s: &SurfacePresentation) -> Result<(Vec2, Vec2), SurfaceError> {
    if s.polygons.len() != 1 || s.genus() != 1 {
        return Err(SurfaceError::NotGenusOne);
    }
    let ts: Vec<&Vec2> = s.pairing[0].iter().map(|p| &p.translation).collect();
    for u in &ts {
        for v in &ts {
            let det = u.cross(v);
            if det.abs() != s.area {
                continue;
            }
            let integral = ts.iter().all(|t| {
                let a = t.cross(v).checked_div(&det).ok();
                let b = u.cross(t).checked_div(&det).ok();
                a.and_then(|a| as_integer(&a)).is_some() && b.and_then(|b| as_integer(&b)).is_some()
            });
            if integral {
                return Ok(((*u).clone(), (*v).clone()));
            }
        }
    }
    Err(SurfaceError::NotGenusOne)
}

/// Reduces `p` modulo the translation lattice into the interior of the
/// fundamental polygon.
pub fn torus_reduce(s: &SurfacePresentation, p: &Vec2) -> Result<Vec2, SurfaceError> {
    let (u, v) = lattice_basis(s)?;
    let det = u.cross(&v);
    let a = p.cross(&v).checked_div(&det)?.floor();
    let b = u.cross(p).checked_div(&det)?.floor();
    let base = &(p - &u.scale(&from_int(&a))) - &v.scale(&from_int(&b));
    let poly = &s.polygons[0];
    let mut boundary = false;
    for i in -3i64..=3 {
        for j in -3i64..=3 {
            let q = &(&base + &u.scale(&i.into())) + &v.scale(&j.into());
            match poly.side_of(&q) {
                1 => return Ok(q),
                0 => boundary = true,
                _ => {}
            }
        }
    }
    Err(if boundary { SurfaceError::OnBoundary } else { SurfaceError::NotInside })
}

/// Image of a trajectory under the torus automorphism induced by a linear
/// map preserving the lattice: start `m·p` reduced, direction `m·d`.
pub fn affine_image(
    s: &SurfacePresentation,
    m: &crate::exact::Mat2,
    t: &super::Trajectory,
) -> Result<super::Trajectory, SurfaceError> {
    let start = torus_reduce(s, &m.apply(&t.start))?;
    Ok(super::Trajectory::new(start, t.direction.transform(m)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fe;
    use crate::surface::{hex_to_parallelogram_map, hexagon, square};

    #[test]
    fn disjointness() {
        let sq = |x: i64, y: i64| {
            Polygon::new(vec![Vec2::ints(x, y), Vec2::ints(x + 1, y), Vec2::ints(x + 1, y + 1), Vec2::ints(x, y + 1)])
        };
        assert!(convex_disjoint(&sq(0, 0), &sq(1, 0)));
        assert!(convex_disjoint(&sq(0, 0), &sq(1, 1)));
        let half = Polygon::new(vec![Vec2::new(fe("1/2"), 0.into()), Vec2::ints(2, 0), Vec2::ints(2, 1)]);
        assert!(!convex_disjoint(&sq(0, 0), &half));
    }

    #[test]
    fn reduce_is_identity_inside_and_lattice_periodic() {
        let h = hexagon();
        let p = Vec2::new(fe("1/5"), fe("-1/7"));
        assert_eq!(torus_reduce(&h, &p).unwrap(), p);
        let (u, v) = lattice_basis(&h).unwrap();
        let far = &(&p + &u.scale(&5.into())) - &v.scale(&3.into());
        assert_eq!(torus_reduce(&h, &far).unwrap(), p);
        let s = square();
        let q = Vec2::new(fe("17/3"), fe("-2/5"));
        assert_eq!(torus_reduce(&s, &q).unwrap(), Vec2::new(fe("2/3"), fe("3/5")));
    }

    #[test]
    fn hexagon_vertices_under_parallelogram_map() {
        let m = hex_to_parallelogram_map();
        m.validate().unwrap();
        let hex = &m.source.polygons[0];
        let par = &m.target.polygons[0];
        // one vertex class lands on the parallelogram corners
        for k in [0, 2, 4] {
            let w = m.apply(hex.vertex(k)).unwrap();
            assert!(par.vertices.contains(&w), "vertex {k} -> {w}");
        }
        // the other class is a single interior marked point
        for k in [1, 3, 5] {
            let w = m.apply(hex.vertex(k)).unwrap();
            let w = if par.contains_strict(&w) { w } else { torus_reduce(&m.target, &w).unwrap() };
            assert_eq!(w, Vec2::new(fe("1/2"), fe("1/2r3")));
        }
        let inner = Vec2::new(fe("1/10"), fe("1/10"));
        assert_eq!(m.apply(&inner).unwrap(), inner);
    }

    #[test]
    fn overlapping_pieces_are_rejected() {
        let m = hex_to_parallelogram_map();
        let mut pieces = m.pieces.clone();
        pieces.push(pieces[0].clone());
        assert!(CutAndPaste::new(m.source.clone(), m.target.clone(), pieces).is_err());
    }
}

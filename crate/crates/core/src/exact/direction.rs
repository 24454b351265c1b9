use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::{ExactError, FieldElement, Mat2, Vec2};

/// An oriented direction in the plane, stored as a nonzero vector.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Direction {
    v: Vec2,
}

impl Direction {
    pub fn new(v: Vec2) -> Result<Self, ExactError> {
        if v.is_zero() {
            return Err(ExactError::ZeroVector);
        }
        Ok(Direction { v })
    }

    pub fn from_ints(x: i64, y: i64) -> Result<Self, ExactError> {
        Self::new(Vec2::ints(x, y))
    }

    pub fn vector(&self) -> &Vec2 {
        &self.v
    }

    /// `cot θ = x / y`, absent for horizontal directions.
    pub fn cot(&self) -> Option<FieldElement> {
        self.v.x.checked_div(&self.v.y).ok()
    }

    /// Same oriented direction: positive multiples.
    pub fn same_oriented(&self, o: &Direction) -> bool {
        self.v.cross(&o.v).is_zero() && self.v.dot(&o.v).sign() > 0
    }

    /// Same unoriented direction: any nonzero multiple.
    pub fn same_line(&self, o: &Direction) -> bool {
        self.v.cross(&o.v).is_zero()
    }

    pub fn transform(&self, m: &Mat2) -> Result<Direction, ExactError> {
        Direction::new(m.apply(&self.v))
    }

    /// Representative with angle in `[0, π]`.
    pub fn upper(&self) -> Direction {
        if self.v.y.sign() < 0 {
            Direction { v: -&self.v }
        } else {
            self.clone()
        }
    }

    pub fn angle_f64(&self) -> f64 {
        let (x, y) = self.v.to_f64();
        y.atan2(x)
    }
}

impl PartialEq for Direction {
    fn eq(&self, o: &Self) -> bool {
        self.same_oriented(o)
    }
}

/// Orders nonzero vectors by polar angle in `[0, 2π)`.
pub fn angle_cmp(u: &Vec2, v: &Vec2) -> Ordering {
    let half = |w: &Vec2| {
        let sy = w.y.sign();
        if sy > 0 || (sy == 0 && w.x.sign() > 0) {
            0
        } else {
            1
        }
    };
    match half(u).cmp(&half(v)) {
        Ordering::Equal => 0.cmp(&u.cross(v).sign()),
        o => o,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SectorScheme {
    /// Six sectors `[iπ/6, (i+1)π/6]` covering `[0, π]`.
    Hexagon,
    /// Sixteen sectors `[π-(i+1)π/8, π-iπ/8]`, indexed clockwise from π.
    BouwMoller,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SectorResult {
    pub indices: Vec<usize>,
    pub boundary: bool,
}

impl SectorResult {
    pub fn unique(&self) -> Option<usize> {
        (!self.boundary).then(|| self.indices[0])
    }
}

fn fe(s: &str) -> FieldElement {
    s.parse().expect("constant")
}

/// Boundary rays at angles `kπ/6`, `k = 0..=6`.
pub fn hexagon_boundaries() -> Vec<Vec2> {
    let r3 = FieldElement::sqrt3();
    let one = FieldElement::one();
    let zero = FieldElement::zero();
    vec![
        Vec2::new(one.clone(), zero.clone()),
        Vec2::new(r3.clone(), one.clone()),
        Vec2::new(one.clone(), r3.clone()),
        Vec2::new(zero.clone(), one.clone()),
        Vec2::new(-&one, r3.clone()),
        Vec2::new(-&r3, one.clone()),
        Vec2::new(-&one, zero),
    ]
}

/// Boundary rays at angles `kπ/8`, `k = 0..16`.
pub fn octant_boundaries() -> Vec<Vec2> {
    let t = fe("-1+r2");
    let one = FieldElement::one();
    let zero = FieldElement::zero();
    let first = vec![
        Vec2::new(one.clone(), zero.clone()),
        Vec2::new(one.clone(), t.clone()),
        Vec2::new(one.clone(), one.clone()),
        Vec2::new(t.clone(), one.clone()),
        Vec2::new(zero.clone(), one.clone()),
        Vec2::new(-&t, one.clone()),
        Vec2::new(-&one, one.clone()),
        Vec2::new(-&one, t.clone()),
    ];
    let mut all = first.clone();
    all.extend(first.iter().map(|v| -v));
    all
}

/// Locates `v` among rays sorted by angle; `rays[0]` must have angle 0.
fn locate(v: &Vec2, rays: &[Vec2]) -> (usize, bool) {
    for (k, r) in rays.iter().enumerate() {
        if r.cross(v).is_zero() && r.dot(v).sign() > 0 {
            return (k, true);
        }
    }
    let mut k = 0;
    while k + 1 < rays.len() && angle_cmp(&rays[k + 1], v) == Ordering::Less {
        k += 1;
    }
    (k, false)
}

pub fn sector_of(d: &Direction, scheme: SectorScheme) -> SectorResult {
    match scheme {
        SectorScheme::Hexagon => {
            let u = d.upper();
            let (k, on_ray) = locate(u.vector(), &hexagon_boundaries());
            if on_ray {
                let indices = match k {
                    0 => vec![0],
                    6 => vec![5],
                    _ => vec![k - 1, k],
                };
                SectorResult { indices, boundary: true }
            } else {
                SectorResult { indices: vec![k], boundary: false }
            }
        }
        SectorScheme::BouwMoller => {
            // φ = π - θ is the angle of the mirrored vector (-x, y)
            let w = Vec2::new(-&d.vector().x, d.vector().y.clone());
            let (k, on_ray) = locate(&w, &octant_boundaries());
            if on_ray {
                SectorResult { indices: vec![(k + 15) % 16, k], boundary: true }
            } else {
                SectorResult { indices: vec![k], boundary: false }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hexagon_sector_examples() {
        let d = Direction::new(Vec2::new(fe("2+r3"), 1.into())).unwrap();
        assert_eq!(sector_of(&d, SectorScheme::Hexagon), SectorResult { indices: vec![0], boundary: false });
        let b = Direction::new(Vec2::new(fe("r3"), 1.into())).unwrap();
        assert_eq!(sector_of(&b, SectorScheme::Hexagon), SectorResult { indices: vec![0, 1], boundary: true });
        let down = Direction::new(Vec2::new(fe("-2-r3"), (-1).into())).unwrap();
        assert_eq!(sector_of(&down, SectorScheme::Hexagon).indices, vec![0]);
        let left = Direction::from_ints(-3, 1).unwrap();
        assert_eq!(sector_of(&left, SectorScheme::Hexagon).indices, vec![5]);
    }

    #[test]
    fn octant_sector_examples() {
        // 15π/16 lies strictly between 7π/8 and π
        let t = fe("-1+r2");
        let mid = Vec2::new(-(&FieldElement::one() + &t), t.clone());
        let d = Direction::new(mid).unwrap();
        assert_eq!(sector_of(&d, SectorScheme::BouwMoller), SectorResult { indices: vec![0], boundary: false });
        let d7 = Direction::from_ints(10, 1).unwrap();
        assert_eq!(sector_of(&d7, SectorScheme::BouwMoller).indices, vec![7]);
        let d8 = Direction::from_ints(10, -1).unwrap();
        assert_eq!(sector_of(&d8, SectorScheme::BouwMoller).indices, vec![8]);
        let horiz = Direction::from_ints(-1, 0).unwrap();
        assert!(sector_of(&horiz, SectorScheme::BouwMoller).boundary);
    }

    #[test]
    fn sector_matches_float_angle() {
        for k in 1..200 {
            let x = (k as i64 * 37) % 101 - 50;
            let y = (k as i64 * 53) % 97 - 48;
            let Ok(d) = Direction::from_ints(x, y) else { continue };
            let th = d.upper().angle_f64();
            let r = sector_of(&d, SectorScheme::Hexagon);
            if !r.boundary {
                assert_eq!(r.indices[0], (th / (std::f64::consts::PI / 6.0)).floor() as usize);
            }
            let phi = (std::f64::consts::PI - d.angle_f64()).rem_euclid(2.0 * std::f64::consts::PI);
            let r = sector_of(&d, SectorScheme::BouwMoller);
            if !r.boundary {
                assert_eq!(r.indices[0], (phi / (std::f64::consts::PI / 8.0)).floor() as usize);
            }
        }
    }
}

//! The hexagon Farey map, itineraries with their nested direction
//! intervals, direction recognition from cutting sequences, and the square
//! Gauss-map acceleration identity.

use serde::{Deserialize, Serialize};

use crate::coding::{derive_sandwich, generate, CodingScheme, Word};
use crate::exact::{hexagon_boundaries, sector_of, Direction, ExactError, Mat2, SectorScheme, Vec2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FareyError {
    #[error("iterate {step} lies on a sector boundary {sectors:?}")]
    Boundary { step: usize, sectors: Vec<usize> },
    #[error("entry {0} breaks the itinerary constraint")]
    BadEntry(usize),
    #[error("derivation is ambiguous at round {step}: {diagrams:?}")]
    Ambiguous { step: usize, diagrams: Vec<usize>, reached: Vec<usize> },
    #[error("window exhausted at round {step}")]
    WindowTooShort { step: usize, reached: Vec<usize> },
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Branch `Fᵢ` as a matrix: `γ·νᵢ`.
pub fn hexagon_branch(i: usize) -> Mat2 {
    let sym = crate::coding::hexagon_symmetry();
    &crate::coding::hexagon_gamma() * &sym.matrices[i]
}

/// One step of the Farey map; returns the sector used and the image in `[0, π]`.
pub fn farey_map(d: &Direction) -> Result<(usize, Direction), FareyError> {
    let s = sector_of(d, SectorScheme::Hexagon);
    let i = s.unique().ok_or(FareyError::Boundary { step: 0, sectors: s.indices })?;
    Ok((i, d.transform(&hexagon_branch(i))?.upper()))
}

/// Closed set of directions between `lo` and `hi` (angles in `[0, π]`, `lo ≤ hi`).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DirectionInterval {
    pub lo: Direction,
    pub hi: Direction,
}

impl DirectionInterval {
    fn from_pair(a: Direction, b: Direction) -> Self {
        let (a, b) = (a.upper(), b.upper());
        if a.vector().cross(b.vector()).sign() >= 0 {
            DirectionInterval { lo: a, hi: b }
        } else {
            DirectionInterval { lo: b, hi: a }
        }
    }

    pub fn sector(i: usize) -> Self {
        let b = hexagon_boundaries();
        DirectionInterval { lo: Direction::new(b[i].clone()).unwrap(), hi: Direction::new(b[i + 1].clone()).unwrap() }
    }

    pub fn contains(&self, d: &Direction) -> bool {
        let u = d.upper();
        let v = u.vector();
        // the horizontal direction at angle π has the same upper form as angle 0
        let at_pi = v.y.is_zero() && self.hi.vector().y.is_zero() && self.hi.vector().x.sign() < 0;
        let at_zero = v.y.is_zero() && self.lo.vector().y.is_zero() && self.lo.vector().x.sign() > 0;
        if at_pi || at_zero {
            return true;
        }
        self.lo.vector().cross(v).sign() >= 0 && v.cross(self.hi.vector()).sign() >= 0
    }

    pub fn contains_interval(&self, o: &DirectionInterval) -> bool {
        self.contains(&o.lo) && self.contains(&o.hi)
    }

    /// Angular width in radians, as a float shadow.
    pub fn width_f64(&self) -> f64 {
        let a = self.lo.angle_f64();
        let mut b = self.hi.angle_f64();
        if b < a {
            b += std::f64::consts::PI;
        }
        b - a
    }

    fn pull_back(&self, m: &Mat2) -> Result<Self, ExactError> {
        let inv = m.inv()?;
        Ok(Self::from_pair(self.lo.transform(&inv)?, self.hi.transform(&inv)?))
    }
}

/// Itinerary `[s₀; s₁, …, s_k]` and the directions sharing it.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FareyExpansionPrefix {
    pub entries: Vec<usize>,
    pub interval: DirectionInterval,
}

/// `Σ[s₀; …; s_k]`, computed from the last entry outwards by inverse branches.
pub fn prefix_interval(entries: &[usize]) -> Result<DirectionInterval, FareyError> {
    for (j, &s) in entries.iter().enumerate() {
        if s > 5 || (j > 0 && s == 0) {
            return Err(FareyError::BadEntry(j));
        }
    }
    let Some((&last, rest)) = entries.split_last() else {
        return Err(FareyError::BadEntry(0));
    };
    let mut iv = DirectionInterval::sector(last);
    for &s in rest.iter().rev() {
        iv = iv.pull_back(&hexagon_branch(s))?;
    }
    Ok(iv)
}

pub fn farey_expansion(d: &Direction, k: usize) -> Result<FareyExpansionPrefix, FareyError> {
    let mut entries = Vec::with_capacity(k + 1);
    let mut cur = d.upper();
    for step in 0..=k {
        let s = sector_of(&cur, SectorScheme::Hexagon);
        let i = s.unique().ok_or(FareyError::Boundary { step, sectors: s.indices })?;
        entries.push(i);
        if step < k {
            cur = cur.transform(&hexagon_branch(i))?.upper();
        }
    }
    let interval = prefix_interval(&entries)?;
    Ok(FareyExpansionPrefix { entries, interval })
}

/// Reads the itinerary off a cutting sequence: the admissible diagram of
/// each derivation round. After the first round the first diagram is
/// excluded and a candidate must regenerate a factor of the previous
/// window; a round with several surviving candidates is ambiguous. Errors
/// carry the entries reached so far.
pub fn recognize_direction(scheme: &CodingScheme, w: &Word, k: usize) -> Result<FareyExpansionPrefix, FareyError> {
    let mut entries: Vec<usize> = Vec::with_capacity(k + 1);
    let mut parent: Option<Word> = None;
    let mut cur = w.clone();
    for step in 0..=k {
        if cur.len() < 2 {
            return Err(FareyError::WindowTooShort { step, reached: entries });
        }
        let cands: Vec<usize> = scheme
            .admissible(&cur)
            .into_iter()
            .filter(|&c| match (&parent, entries.last()) {
                (Some(p), Some(&prev)) => {
                    c != 0 && generate(&cur, c, prev).map(|g| g.find_in(p).is_some()).unwrap_or(false)
                }
                _ => true,
            })
            .collect();
        let c = match cands.as_slice() {
            [] => return Err(FareyError::WindowTooShort { step, reached: entries }),
            [c] => *c,
            _ => return Err(FareyError::Ambiguous { step, diagrams: cands, reached: entries }),
        };
        entries.push(c);
        if step == k {
            break;
        }
        let normal = scheme.symmetry.perms[c].apply_word(&cur).map_err(|_| FareyError::BadEntry(step))?;
        let d = derive_sandwich(&normal).map_err(|_| FareyError::WindowTooShort { step: step + 1, reached: entries.clone() })?;
        parent = Some(std::mem::replace(&mut cur, d.word));
    }
    let interval = prefix_interval(&entries)?;
    Ok(FareyExpansionPrefix { entries, interval })
}

/// Square Farey branches in slope coordinates on `[0, 1]`: `F₀ = σ⁻¹` on
/// `[0, 1/2]` and `F₁ = ν₁σ⁻¹` on `[1/2, 1]`, with `σ = [[1,1],[0,1]]`.
pub fn square_branch(i: usize) -> Mat2 {
    let sigma_inv = Mat2::ints(1, -1, 0, 1);
    match i {
        0 => sigma_inv,
        _ => &Mat2::ints(0, 1, 1, 0) * &sigma_inv,
    }
}

/// Branch of the square Farey map used at a direction `(x, y)` with `0 ≤ y ≤ x`.
pub fn square_sector(v: &Vec2) -> usize {
    if (&v.x - &(&v.y + &v.y)).sign() >= 0 {
        0
    } else {
        1
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GaussReport {
    pub n: u32,
    pub samples: usize,
    /// `F₁∘F₀ⁿ⁻¹` and the Gauss branch agree on every sample.
    pub identity_holds: bool,
    /// Each factor was applied inside its own branch domain.
    pub branches_consistent: bool,
}

/// Checks `Gₙ = F₁∘F₀ⁿ⁻¹` on `[1/(n+1), 1/n]` at the given rational slopes
/// `p/q`, where `Gₙ(t) = 1/t − n`.
pub fn gauss_acceleration_check(n: u32, slopes: &[(i64, i64)]) -> GaussReport {
    let mut identity_holds = true;
    let mut branches_consistent = true;
    for &(p, q) in slopes {
        let v = Vec2::ints(q, p);
        let mut w = v.clone();
        for _ in 1..n {
            branches_consistent &= square_sector(&w) == 0;
            w = square_branch(0).apply(&w);
        }
        branches_consistent &= square_sector(&w) == 1 || (&w.x - &(&w.y + &w.y)).is_zero();
        w = square_branch(1).apply(&w);
        // Gₙ(p/q) = (q − n p)/p as the direction (p, q − n p)
        let g = Vec2::ints(p, q - n as i64 * p);
        identity_holds &= w.cross(&g).is_zero() && w.dot(&g).sign() >= 0;
    }
    GaussReport { n, samples: slopes.len(), identity_holds, branches_consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fe;

    fn dir(x: &str, y: &str) -> Direction {
        Direction::new(Vec2::new(fe(x), fe(y))).unwrap()
    }

    #[test]
    fn farey_examples() {
        let (i, img) = farey_map(&dir("2+r3", "1")).unwrap();
        assert_eq!(i, 0);
        assert_eq!(img.cot().unwrap(), fe("-2+r3"));
        // the boundary π/6 is fixed by the first branch
        let b = dir("r3", "1");
        assert!(b.transform(&hexagon_branch(0)).unwrap().upper().same_line(&b));
        assert!(matches!(farey_map(&b), Err(FareyError::Boundary { .. })));
    }

    #[test]
    fn branches_map_sectors_onto_the_upper_range() {
        let target = DirectionInterval { lo: dir("r3", "1"), hi: dir("-1", "0") };
        for i in 0..6 {
            let s = DirectionInterval::sector(i);
            let img = DirectionInterval::from_pair(
                s.lo.transform(&hexagon_branch(i)).unwrap(),
                s.hi.transform(&hexagon_branch(i)).unwrap(),
            );
            assert!(img.lo.same_line(&target.lo) && img.hi.same_line(&target.hi), "F_{i}");
        }
    }

    #[test]
    fn expansion_intervals_contain_the_direction() {
        let d = dir("7/3", "1+1/5r2");
        let e = farey_expansion(&d, 8).unwrap();
        assert_eq!(e.entries.len(), 9);
        assert!(e.entries[1..].iter().all(|&s| (1..=5).contains(&s)));
        for k in 0..8 {
            let a = prefix_interval(&e.entries[..=k]).unwrap();
            let b = prefix_interval(&e.entries[..=k + 1]).unwrap();
            assert!(a.contains(&d) && a.contains_interval(&b), "depth {k}");
        }
        assert!(prefix_interval(&[1, 0]).is_err());
    }

    #[test]
    fn gauss_branches() {
        assert!(gauss_acceleration_check(1, &[(1, 2), (3, 4), (1, 1)]).identity_holds);
        let r = gauss_acceleration_check(2, &[(2, 5), (1, 3), (1, 2)]);
        assert!(r.identity_holds && r.branches_consistent);
        // the identity fails outside its interval
        assert!(!gauss_acceleration_check(3, &[(2, 5)]).branches_consistent);
    }
}

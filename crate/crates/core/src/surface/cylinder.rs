use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{SurfaceError, SurfacePresentation};
use crate::exact::{Direction, FieldElement, Vec2};

const MAX_CUTS: usize = 1500;

/// Part of a polygon between two consecutive cut heights, measured by
/// `h(x) = cross(d, x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Strip {
    pub poly: usize,
    pub lo: FieldElement,
    pub hi: FieldElement,
    /// Length of the middle leaf in units of `|d|`.
    pub chord: FieldElement,
    pub next: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Cylinder {
    /// Indices into `CylinderDecomposition::strips`, in flow order.
    pub strips: Vec<usize>,
    /// True width, when `|d|` lies in the field.
    pub width: Option<FieldElement>,
    pub height: Option<FieldElement>,
    pub inverse_modulus: FieldElement,
    pub area: FieldElement,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CylinderDecomposition {
    pub direction: Direction,
    pub strips: Vec<Strip>,
    pub cylinders: Vec<Cylinder>,
}

impl CylinderDecomposition {
    pub fn total_area(&self) -> FieldElement {
        self.cylinders.iter().fold(FieldElement::zero(), |a, c| a + c.area.clone())
    }
}

fn in_open(x: &FieldElement, a: &FieldElement, b: &FieldElement) -> bool {
    a < x && x < b
}

/// Decomposes the surface into cylinders of closed leaves in direction `d`.
///
/// Every polygon vertex counts as a marked point, so leaves through a
/// vertex always bound cylinders. Cut heights are pushed along the flow
/// until they close up; a non-periodic direction exhausts the cut budget.
pub fn cylinder_decomposition(
    s: &SurfacePresentation,
    d: &Direction,
) -> Result<CylinderDecomposition, SurfaceError> {
    let dv = d.vector();
    let h = |x: &Vec2| dv.cross(x);
    let mut cuts: Vec<BTreeSet<FieldElement>> =
        s.polygons.iter().map(|p| p.vertices.iter().map(h).collect()).collect();

    // (p, k, lo, hi, q, shift) for every side the flow exits through
    let mut exits = Vec::new();
    for (p, poly) in s.polygons.iter().enumerate() {
        for k in 0..poly.len() {
            if poly.edge(k).cross(dv).sign() < 0 {
                let (a, b) = (h(poly.vertex(k)), h(poly.vertex(k + 1)));
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                let pr = &s.pairing[p][k];
                exits.push((p, k, lo, hi, pr.target.poly, h(&pr.translation)));
            }
        }
    }

    // each new cut travels forward through exit sides and backward through
    // the sides glued to them
    let mut work: Vec<(usize, FieldElement)> =
        cuts.iter().enumerate().flat_map(|(p, cs)| cs.iter().map(move |c| (p, c.clone()))).collect();
    let mut total: usize = cuts.iter().map(BTreeSet::len).sum();
    while let Some((p, c)) = work.pop() {
        for (ep, _, lo, hi, q, dh) in &exits {
            let moved = if *ep == p && in_open(&c, lo, hi) {
                Some((*q, &c + dh))
            } else if *q == p && in_open(&(&c - dh), lo, hi) {
                Some((*ep, &c - dh))
            } else {
                None
            };
            if let Some((r, x)) = moved {
                if cuts[r].insert(x.clone()) {
                    work.push((r, x));
                    total += 1;
                }
            }
        }
        if total > MAX_CUTS {
            return Err(SurfaceError::NoDecomposition("leaves do not close up".into()));
        }
    }

    let n2 = dv.norm_sq();
    let perp = Vec2::new(-&dv.y, dv.x.clone());
    let half = FieldElement::ratio(1, 2);
    let mut strips = Vec::new();
    let mut first_strip = Vec::new();
    for (p, poly) in s.polygons.iter().enumerate() {
        first_strip.push(strips.len());
        let hs: Vec<&FieldElement> = cuts[p].iter().collect();
        for w in hs.windows(2) {
            let (lo, hi) = (w[0].clone(), w[1].clone());
            let mid = (&lo + &hi) * half.clone();
            let x0 = perp.scale(&mid.checked_div(&n2)?);
            let mut t_in = None;
            let mut t_out = None;
            for k in 0..poly.len() {
                let den = poly.edge(k).cross(dv);
                if den.is_zero() {
                    continue;
                }
                let (a, b) = (h(poly.vertex(k)), h(poly.vertex(k + 1)));
                if !(in_open(&mid, &a, &b) || in_open(&mid, &b, &a)) {
                    continue;
                }
                let t = poly.edge(k).cross(&(poly.vertex(k) - &x0)).checked_div(&den)?;
                if den.sign() < 0 {
                    t_out = Some(t);
                } else {
                    t_in = Some(t);
                }
            }
            let (Some(t_in), Some(t_out)) = (t_in, t_out) else {
                return Err(SurfaceError::NoDecomposition(format!("strip of polygon {p} has no chord")));
            };
            strips.push(Strip { poly: p, lo, hi, chord: t_out - t_in, next: usize::MAX });
        }
    }
    let find = |p: usize, x: &FieldElement, strips: &[Strip]| {
        strips[first_strip[p]..]
            .iter()
            .position(|st| st.poly == p && &st.lo < x && x < &st.hi)
            .map(|i| i + first_strip[p])
    };
    for i in 0..strips.len() {
        let mid = (&strips[i].lo + &strips[i].hi) * half.clone();
        let (_, _, _, _, q, dh) = exits
            .iter()
            .find(|(p, _, lo, hi, _, _)| *p == strips[i].poly && in_open(&mid, lo, hi))
            .ok_or_else(|| SurfaceError::NoDecomposition("strip has no exit side".into()))?;
        let j = find(*q, &(&mid + dh), &strips)
            .ok_or_else(|| SurfaceError::NoDecomposition("exit lands outside every strip".into()))?;
        if strips[j].lo != &strips[i].lo + dh || strips[j].hi != &strips[i].hi + dh {
            return Err(SurfaceError::NoDecomposition("strips are not aligned".into()));
        }
        strips[i].next = j;
    }

    let norm = n2.sqrt_simple();
    let mut seen = vec![false; strips.len()];
    let mut cylinders = Vec::new();
    for i in 0..strips.len() {
        if seen[i] {
            continue;
        }
        let mut cyc = Vec::new();
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            cyc.push(j);
            j = strips[j].next;
        }
        let dh = &strips[i].hi - &strips[i].lo;
        let circ = cyc.iter().fold(FieldElement::zero(), |a, &k| a + strips[k].chord.clone());
        let inverse_modulus = (&circ * &n2).checked_div(&dh)?;
        let area = &circ * &dh;
        let (width, height) = match &norm {
            Some(r) => (Some(&circ * r), Some(dh.checked_div(r)?)),
            None => (None, None),
        };
        cylinders.push(Cylinder { strips: cyc, width, height, inverse_modulus, area });
    }
    Ok(CylinderDecomposition { direction: d.clone(), strips, cylinders })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::fe;
    use crate::surface::{diamond, hexagon, parallelogram, square};

    fn horizontal() -> Direction {
        Direction::from_ints(1, 0).unwrap()
    }

    #[test]
    fn hexagon_horizontal_is_one_cylinder() {
        let c = cylinder_decomposition(&hexagon(), &horizontal()).unwrap();
        assert_eq!(c.cylinders.len(), 1);
        let cyl = &c.cylinders[0];
        assert_eq!(cyl.height, Some(fe("1/2r3")));
        assert_eq!(cyl.width, Some(fe("3")));
        assert_eq!(cyl.inverse_modulus, fe("2r3"));
    }

    #[test]
    fn diamond_horizontal_has_modulus_two() {
        let c = cylinder_decomposition(&diamond(), &horizontal()).unwrap();
        assert_eq!(c.cylinders.len(), 1);
        assert_eq!(c.cylinders[0].inverse_modulus, fe("2"));
    }

    #[test]
    fn areas_add_up() {
        for s in [hexagon(), square(), diamond(), parallelogram()] {
            for (x, y) in [(1, 0), (0, 1), (1, 1), (3, 1), (2, -1)] {
                let d = Direction::from_ints(x, y).unwrap();
                if let Ok(c) = cylinder_decomposition(&s, &d) {
                    assert_eq!(c.total_area(), s.area, "{} {x},{y}", s.name);
                }
            }
        }
        let sq = cylinder_decomposition(&square(), &Direction::from_ints(2, 1).unwrap()).unwrap();
        assert_eq!(sq.total_area(), fe("1"));
    }

    #[test]
    fn irrational_slope_has_no_decomposition() {
        let d = Direction::new(Vec2::new(fe("r2"), 1.into())).unwrap();
        assert!(cylinder_decomposition(&square(), &d).is_err());
    }
}

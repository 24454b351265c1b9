use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use super::{ExactError, FieldElement};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vec2 {
    pub x: FieldElement,
    pub y: FieldElement,
}

impl Vec2 {
    pub fn new(x: FieldElement, y: FieldElement) -> Self {
        Vec2 { x, y }
    }

    pub fn zero() -> Self {
        Vec2::new(FieldElement::zero(), FieldElement::zero())
    }

    pub fn ints(x: i64, y: i64) -> Self {
        Vec2::new(x.into(), y.into())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// `self.x * o.y - self.y * o.x`
    pub fn cross(&self, o: &Vec2) -> FieldElement {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn dot(&self, o: &Vec2) -> FieldElement {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn norm_sq(&self) -> FieldElement {
        self.dot(self)
    }

    pub fn scale(&self, k: &FieldElement) -> Vec2 {
        Vec2::new(&self.x * k, &self.y * k)
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.x.to_f64(), self.y.to_f64())
    }

    /// Midpoint-style affine combination `(self + o) / 2`.
    pub fn midpoint(&self, o: &Vec2) -> Vec2 {
        (self + o).scale(&FieldElement::ratio(1, 2))
    }
}

impl<'a> Add<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn add(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl<'a> Sub<&'a Vec2> for &'a Vec2 {
    type Output = Vec2;
    fn sub(self, o: &Vec2) -> Vec2 {
        Vec2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl Add for Vec2 {
    type Output = Vec2;
    fn add(self, o: Vec2) -> Vec2 {
        &self + &o
    }
}

impl Sub for Vec2 {
    type Output = Vec2;
    fn sub(self, o: Vec2) -> Vec2 {
        &self - &o
    }
}

impl Neg for &Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        Vec2::new(-&self.x, -&self.y)
    }
}

impl Neg for Vec2 {
    type Output = Vec2;
    fn neg(self) -> Vec2 {
        -&self
    }
}

impl fmt::Debug for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Display for Vec2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Row-major 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2 {
    pub a: FieldElement,
    pub b: FieldElement,
    pub c: FieldElement,
    pub d: FieldElement,
}

impl Mat2 {
    pub fn new(a: FieldElement, b: FieldElement, c: FieldElement, d: FieldElement) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn ints(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn identity() -> Self {
        Mat2::ints(1, 0, 0, 1)
    }

    pub fn det(&self) -> FieldElement {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> FieldElement {
        &self.a + &self.d
    }

    pub fn apply(&self, v: &Vec2) -> Vec2 {
        Vec2::new(&self.a * &v.x + &self.b * &v.y, &self.c * &v.x + &self.d * &v.y)
    }

    pub fn inv(&self) -> Result<Mat2, ExactError> {
        let det = self.det();
        if det.is_zero() {
            return Err(ExactError::Singular);
        }
        let k = det.inv()?;
        Ok(Mat2::new(&self.d * &k, -(&self.b * &k), -(&self.c * &k), &self.a * &k))
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.a.clone(), self.c.clone(), self.b.clone(), self.d.clone())
    }

    pub fn scale(&self, k: &FieldElement) -> Mat2 {
        Mat2::new(&self.a * k, &self.b * k, &self.c * k, &self.d * k)
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat2::identity()
    }

    /// Reflection across the line through the origin at angle φ, given
    /// `cos 2φ` and `sin 2φ`.
    pub fn reflection(cos2: FieldElement, sin2: FieldElement) -> Mat2 {
        Mat2::new(cos2.clone(), sin2.clone(), sin2, -cos2)
    }

    /// Rotation given `cos` and `sin` of its angle.
    pub fn rotation(cos: FieldElement, sin: FieldElement) -> Mat2 {
        Mat2::new(cos.clone(), -sin.clone(), sin, cos)
    }

    pub fn pow(&self, n: u32) -> Mat2 {
        (0..n).fold(Mat2::identity(), |acc, _| &acc * self)
    }

    pub fn to_f64(&self) -> [[f64; 2]; 2] {
        [[self.a.to_f64(), self.b.to_f64()], [self.c.to_f64(), self.d.to_f64()]]
    }
}

impl<'a> Mul<&'a Mat2> for &'a Mat2 {
    type Output = Mat2;
    fn mul(self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, o: Mat2) -> Mat2 {
        &self * &o
    }
}

impl fmt::Debug for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// `s * shape` where only `s^2 = scale_sq` is stored.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ScaledMatrix {
    pub shape: Mat2,
    pub scale_sq: FieldElement,
}

impl ScaledMatrix {
    pub fn new(shape: Mat2, scale_sq: FieldElement) -> Result<Self, ExactError> {
        if scale_sq.sign() <= 0 {
            return Err(ExactError::NonPositiveScale);
        }
        Ok(ScaledMatrix { shape, scale_sq })
    }

    pub fn unscaled(shape: Mat2) -> Self {
        ScaledMatrix { shape, scale_sq: FieldElement::one() }
    }

    /// Determinant of `s * shape`, i.e. `s^2 * det(shape)`.
    pub fn effective_det(&self) -> FieldElement {
        &self.scale_sq * &self.shape.det()
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        Ok(ScaledMatrix { shape: self.shape.inv()?, scale_sq: self.scale_sq.inv()? })
    }

    /// Applies the shape only; the positive scalar is dropped.
    pub fn apply_shape(&self, v: &Vec2) -> Vec2 {
        self.shape.apply(v)
    }
}

impl<'a> Mul<&'a ScaledMatrix> for &'a ScaledMatrix {
    type Output = ScaledMatrix;
    fn mul(self, o: &ScaledMatrix) -> ScaledMatrix {
        ScaledMatrix { shape: &self.shape * &o.shape, scale_sq: &self.scale_sq * &o.scale_sq }
    }
}

impl From<Mat2> for ScaledMatrix {
    fn from(m: Mat2) -> Self {
        ScaledMatrix::unscaled(m)
    }
}

/// Anything that acts linearly on the plane up to a positive scalar.
pub trait LinearShape {
    fn shape(&self) -> &Mat2;
}

impl LinearShape for Mat2 {
    fn shape(&self) -> &Mat2 {
        self
    }
}

impl LinearShape for ScaledMatrix {
    fn shape(&self) -> &Mat2 {
        &self.shape
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn fe(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    #[test]
    fn identity_apply() {
        let v = Vec2::new(1.into(), FieldElement::sqrt3());
        assert_eq!(Mat2::identity().apply(&v), v);
    }

    #[test]
    fn hexagon_gamma_is_involution() {
        let g = Mat2::new((-1).into(), fe("2r3"), 0.into(), 1.into());
        assert!((&g * &g).is_identity());
        assert_eq!(g.det(), FieldElement::from_i64(-1));
    }

    #[test]
    fn singular_inverse_errors() {
        let m = Mat2::ints(1, 2, 2, 4);
        assert_eq!(m.inv(), Err(ExactError::Singular));
    }

    #[test]
    fn scaled_product() {
        let s1 = ScaledMatrix::unscaled(Mat2::ints(1, 1, 0, 1));
        let s2 = ScaledMatrix::new(
            Mat2::new(fe("1/2r2"), 0.into(), 0.into(), fe("1/2r3")),
            fe("2/3r6"),
        )
        .unwrap();
        let s3 = ScaledMatrix::unscaled(Mat2::new(1.into(), fe("1/3r3"), 0.into(), 1.into()));
        let s = &(&s3 * &s2) * &s1;
        assert_eq!(
            s.shape,
            Mat2::new(fe("1/2r2"), fe("1/2+1/2r2"), 0.into(), fe("1/2r3"))
        );
        assert_eq!(s.scale_sq, fe("2/3r6"));
        assert_eq!(s.shape.det(), fe("1/4r6"));
        assert_eq!(s.effective_det(), FieldElement::one());
    }

    fn arb_fe() -> impl Strategy<Value = FieldElement> {
        (proptest::array::uniform4(-50i64..50), 1i64..20)
            .prop_map(|(c, d)| FieldElement::from_ints(c, d))
    }

    fn arb_mat() -> impl Strategy<Value = Mat2> {
        (arb_fe(), arb_fe(), arb_fe(), arb_fe()).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn inverse_round_trip(m in arb_mat(), n in arb_mat()) {
            prop_assume!(!m.det().is_zero() && !n.det().is_zero());
            let mi = m.inv().unwrap();
            prop_assert!((&mi * &m).is_identity());
            let prod = &m * &n;
            prop_assert_eq!(&(&prod * &n.inv().unwrap()), &m);
            prop_assert_eq!(prod.det(), &m.det() * &n.det());
        }
    }
}

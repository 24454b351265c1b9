use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::ExactError;

/// Element `q0 + q1*√2 + q2*√3 + q3*√6` of the biquadratic field Q(√2, √3).
///
/// Stored as four integer numerators over one positive common denominator,
/// always reduced, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    num: [BigInt; 4],
    den: BigInt,
}

const RADICANDS: [u32; 4] = [1, 2, 3, 6];

impl FieldElement {
    fn from_parts(num: [BigInt; 4], den: BigInt) -> Self {
        let mut x = FieldElement { num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            for n in self.num.iter_mut() {
                *n = -std::mem::take(n);
            }
            self.den = -std::mem::take(&mut self.den);
        }
        if self.num.iter().all(Zero::is_zero) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let mut g = self.den.clone();
        for n in &self.num {
            if !n.is_zero() {
                g = g.gcd(n);
                if g.is_one() {
                    return;
                }
            }
        }
        for n in self.num.iter_mut() {
            *n = &*n / &g;
        }
        self.den = &self.den / &g;
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    pub fn from_i64(n: i64) -> Self {
        FieldElement {
            num: [BigInt::from(n), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            den: BigInt::one(),
        }
    }

    /// The rational `n/d`. Panics if `d == 0`.
    pub fn ratio(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::from_parts(
            [BigInt::from(n), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            BigInt::from(d),
        )
    }

    pub fn from_rational(q: &BigRational) -> Self {
        Self::from_parts(
            [q.numer().clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
            q.denom().clone(),
        )
    }

    /// Builds `c[0] + c[1]√2 + c[2]√3 + c[3]√6` from rational coefficients.
    pub fn from_coeffs(c: [BigRational; 4]) -> Self {
        let den = c.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = [0, 1, 2, 3].map(|i| c[i].numer() * (&den / c[i].denom()));
        Self::from_parts(num, den)
    }

    /// Integer coefficients over a common denominator `den`.
    pub fn from_ints(c: [i64; 4], den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_parts(c.map(BigInt::from), BigInt::from(den))
    }

    pub fn sqrt2() -> Self {
        Self::from_ints([0, 1, 0, 0], 1)
    }

    pub fn sqrt3() -> Self {
        Self::from_ints([0, 0, 1, 0], 1)
    }

    pub fn sqrt6() -> Self {
        Self::from_ints([0, 0, 0, 1], 1)
    }

    pub fn coeffs(&self) -> [BigRational; 4] {
        [0, 1, 2, 3].map(|i| BigRational::new(self.num[i].clone(), self.den.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Image under √2 ↦ -√2.
    pub fn conj2(&self) -> Self {
        let [a, b, c, d] = self.num.clone();
        FieldElement { num: [a, -b, c, -d], den: self.den.clone() }
    }

    /// Image under √3 ↦ -√3.
    pub fn conj3(&self) -> Self {
        let [a, b, c, d] = self.num.clone();
        FieldElement { num: [a, b, -c, -d], den: self.den.clone() }
    }

    /// Field norm down to Q (product of the four conjugates).
    pub fn norm(&self) -> BigRational {
        let y = self * &self.conj2();
        let n = &y * &y.conj3();
        n.as_rational().expect("norm is rational")
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let c2 = self.conj2();
        let y = self * &c2;
        let c3 = y.conj3();
        let n = (&y * &c3).as_rational().expect("norm is rational");
        let top = &c2 * &c3;
        Ok(top.scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self::from_parts(
            self.num.clone().map(|n| n * q.numer()),
            &self.den * q.denom(),
        )
    }

    pub fn scale_i64(&self, k: i64) -> Self {
        let k = BigInt::from(k);
        Self::from_parts(self.num.clone().map(|n| n * &k), self.den.clone())
    }

    pub fn sign(&self) -> i32 {
        if self.is_zero() {
            return 0;
        }
        if let Some(s) = self.float_filter_sign() {
            return s;
        }
        self.refined_sign()
    }

    fn float_filter_sign(&self) -> Option<i32> {
        let roots = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let mut sum = 0.0;
        let mut mag = 0.0;
        for (n, r) in self.num.iter().zip(roots) {
            let t = n.to_f64()? * r;
            if !t.is_finite() {
                return None;
            }
            sum += t;
            mag += t.abs();
        }
        let bound = mag * 1e-12;
        if sum > bound {
            Some(1)
        } else if sum < -bound {
            Some(-1)
        } else {
            None
        }
    }

    /// Interval evaluation with dyadic enclosures of the radicals, doubling
    /// the precision until the enclosure excludes zero.
    fn refined_sign(&self) -> i32 {
        let mut bits: u32 = 64;
        loop {
            let scale = BigInt::one() << bits;
            let mut lo = &self.num[0] * &scale;
            let mut hi = lo.clone();
            for i in 1..4 {
                let n = &self.num[i];
                if n.is_zero() {
                    continue;
                }
                let r_lo = (BigInt::from(RADICANDS[i]) << (2 * bits)).sqrt();
                let r_hi = &r_lo + 1u32;
                if n.is_positive() {
                    lo += n * &r_lo;
                    hi += n * &r_hi;
                } else {
                    lo += n * &r_hi;
                    hi += n * &r_lo;
                }
            }
            if lo.is_positive() {
                return 1;
            }
            if hi.is_negative() {
                return -1;
            }
            bits *= 2;
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    pub fn to_f64(&self) -> f64 {
        let roots = [1.0, 2f64.sqrt(), 3f64.sqrt(), 6f64.sqrt()];
        let d = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut s = 0.0;
        for (n, r) in self.num.iter().zip(roots) {
            s += n.to_f64().unwrap_or(f64::NAN) / d * r;
        }
        s
    }

    /// Largest integer not exceeding the element.
    pub fn floor(&self) -> BigInt {
        if let Some(q) = self.as_rational() {
            return q.floor().to_integer();
        }
        let guess = self.to_f64().floor();
        let mut n = BigInt::from(guess as i64);
        loop {
            let nf = FieldElement::from_parts(
                [n.clone(), BigInt::zero(), BigInt::zero(), BigInt::zero()],
                BigInt::one(),
            );
            if (self - &nf).sign() < 0 {
                n -= 1;
                continue;
            }
            let next = &nf + &FieldElement::one();
            if (self - &next).sign() >= 0 {
                n += 1;
                continue;
            }
            return n;
        }
    }

    /// Square root when the element is `r^2 * k` with `r` rational and
    /// `k` one of 1, 2, 3, 6, or a square of a simple two-term element.
    pub fn sqrt_simple(&self) -> Option<Self> {
        if self.sign() < 0 {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(q) = self.as_rational() {
            for (i, k) in RADICANDS.iter().enumerate() {
                let t = &q / BigRational::from_integer(BigInt::from(*k));
                if let Some(r) = rational_sqrt(&t) {
                    let mut c = [0, 1, 2, 3].map(|_| BigRational::zero());
                    c[i] = r;
                    return Some(Self::from_coeffs(c));
                }
            }
        }
        None
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).sign().cmp(&0)
    }
}

impl<'a> Add<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn add(self, o: &FieldElement) -> FieldElement {
        if self.den == o.den {
            let num = [0, 1, 2, 3].map(|i| &self.num[i] + &o.num[i]);
            return FieldElement::from_parts(num, self.den.clone());
        }
        let num = [0, 1, 2, 3].map(|i| &self.num[i] * &o.den + &o.num[i] * &self.den);
        FieldElement::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Sub<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn sub(self, o: &FieldElement) -> FieldElement {
        if self.den == o.den {
            let num = [0, 1, 2, 3].map(|i| &self.num[i] - &o.num[i]);
            return FieldElement::from_parts(num, self.den.clone());
        }
        let num = [0, 1, 2, 3].map(|i| &self.num[i] * &o.den - &o.num[i] * &self.den);
        FieldElement::from_parts(num, &self.den * &o.den)
    }
}

impl<'a> Mul<&'a FieldElement> for &'a FieldElement {
    type Output = FieldElement;
    fn mul(self, o: &FieldElement) -> FieldElement {
        let [a0, a1, a2, a3] = &self.num;
        let [b0, b1, b2, b3] = &o.num;
        let c0 = a0 * b0 + (a1 * b1) * 2 + (a2 * b2) * 3 + (a3 * b3) * 6;
        let c1 = a0 * b1 + a1 * b0 + (a2 * b3 + a3 * b2) * 3;
        let c2 = a0 * b2 + a2 * b0 + (a1 * b3 + a3 * b1) * 2;
        let c3 = a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1;
        FieldElement::from_parts([c0, c1, c2, c3], &self.den * &o.den)
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { num: self.num.clone().map(|n| -n), den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                (&self).$m(&o)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, o: &FieldElement) -> FieldElement {
                (&self).$m(o)
            }
        }
        impl<'a> $tr<FieldElement> for &'a FieldElement {
            type Output = FieldElement;
            fn $m(self, o: FieldElement) -> FieldElement {
                self.$m(&o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_i64(n)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let names = ["", "√2", "√3", "√6"];
        let mut first = true;
        for (q, name) in self.coeffs().iter().zip(names) {
            if q.is_zero() {
                continue;
            }
            let neg = q.is_negative();
            let a = q.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if name.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{a}{name}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({self})")
    }
}

/// Parses sums of terms such as `1/2`, `-3/4*r3`, `2√6`, `r2`.
/// Radicals are written `rK`, `sK` or `√K` for K in {2, 3, 6}.
impl FromStr for FieldElement {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, ExactError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(ExactError::Parse(s.to_string()));
        }
        let mut terms = Vec::new();
        let mut cur = String::new();
        for (i, ch) in compact.char_indices() {
            if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('/') {
                terms.push(std::mem::take(&mut cur));
            }
            cur.push(ch);
        }
        terms.push(cur);
        let mut acc = FieldElement::zero();
        for t in terms {
            acc = acc + parse_term(&t).ok_or_else(|| ExactError::Parse(s.to_string()))?;
        }
        Ok(acc)
    }
}

fn parse_term(t: &str) -> Option<FieldElement> {
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let radical_at = body.find(['r', 's', '√']);
    let (coef_str, radical) = match radical_at {
        Some(idx) => {
            let (c, r) = body.split_at(idx);
            let r = r.trim_start_matches(['r', 's', '√']);
            (c.trim_end_matches('*'), Some(r))
        }
        None => (body, None),
    };
    let coef = if coef_str.is_empty() {
        BigRational::one()
    } else if let Some((n, d)) = coef_str.split_once('/') {
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        BigRational::new(n.parse().ok()?, d)
    } else {
        BigRational::from_integer(coef_str.parse().ok()?)
    };
    let coef = if neg { -coef } else { coef };
    let slot = match radical {
        None => 0,
        Some("2") => 1,
        Some("3") => 2,
        Some("6") => 3,
        Some(_) => return None,
    };
    let mut c = [0, 1, 2, 3].map(|_| BigRational::zero());
    c[slot] = coef;
    Some(FieldElement::from_coeffs(c))
}

impl Serialize for FieldElement {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        let parts: Vec<String> = self.coeffs().iter().map(|q| q.to_string()).collect();
        parts.serialize(ser)
    }
}

impl<'de> Deserialize<'de> for FieldElement {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let parts: Vec<String> = Vec::deserialize(de)?;
        if parts.len() != 4 {
            return Err(serde::de::Error::custom("expected four rational coefficients"));
        }
        let mut c = [0, 1, 2, 3].map(|_| BigRational::zero());
        for (slot, p) in c.iter_mut().zip(&parts) {
            *slot = p.parse::<BigRational>().map_err(serde::de::Error::custom)?;
        }
        Ok(FieldElement::from_coeffs(c))
    }
}

impl num_traits::Zero for FieldElement {
    fn zero() -> Self {
        FieldElement::zero()
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::Sign;

    fn sign_of(b: &BigInt) -> i32 {
        match b.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    fn fe(s: &str) -> FieldElement {
        s.parse().unwrap()
    }

    /// Sign via nested squaring: a + b√3 with a, b in Q(√2), and the same
    /// rule inside Q(√2).
    fn oracle_sign(x: &FieldElement) -> i32 {
        let c = x.coeffs();
        let sgn_q = |q: &BigRational| sign_of(&q.numer().clone()) * sign_of(q.denom());
        let sign_q2 = |a: &BigRational, b: &BigRational| -> i32 {
            let (sa, sb) = (sgn_q(a), sgn_q(b));
            if sa == 0 {
                return sb;
            }
            if sb == 0 || sa == sb {
                return sa;
            }
            let two = BigRational::from_integer(2.into());
            sa * sgn_q(&(a * a - two * b * b))
        };
        let a = (c[0].clone(), c[1].clone());
        let b = (c[2].clone(), c[3].clone());
        let sa = sign_q2(&a.0, &a.1);
        let sb = sign_q2(&b.0, &b.1);
        if sa == 0 {
            return sb;
        }
        if sb == 0 || sa == sb {
            return sa;
        }
        let two = BigRational::from_integer(2.into());
        let three = BigRational::from_integer(3.into());
        let six = BigRational::from_integer(6.into());
        // a^2 - 3 b^2 expanded over Q(√2)
        let r0 = &a.0 * &a.0 + &two * &a.1 * &a.1 - &three * (&b.0 * &b.0 + &two * &b.1 * &b.1);
        let r1 = &two * &a.0 * &a.1 - &six * &b.0 * &b.1;
        sa * sign_q2(&r0, &r1)
    }

    #[test]
    fn sign_examples() {
        assert_eq!(FieldElement::zero().sign(), 0);
        assert_eq!(fe("-1+2r3").sign(), 1);
        assert_eq!(fe("7-5r2").sign(), -1);
    }

    #[test]
    fn sign_near_cancellation_needs_refinement() {
        // 665857/470832 is a convergent of √2; the gap is about 1e-12
        let x = fe("665857-470832r2");
        assert_eq!(x.sign(), 1);
        assert_eq!(x.refined_sign(), 1);
        assert_eq!(oracle_sign(&x), 1);
        let y = fe("-665857+470832r2");
        assert_eq!(y.refined_sign(), -1);
    }

    #[test]
    fn arithmetic_identities() {
        assert_eq!(FieldElement::sqrt2() * FieldElement::sqrt3(), FieldElement::sqrt6());
        assert_eq!(FieldElement::sqrt6() * FieldElement::sqrt6(), FieldElement::from_i64(6));
        assert_eq!(FieldElement::sqrt2() * FieldElement::sqrt6(), fe("2r3"));
        let x = fe("1/3 - 2r2 + 5/7r3 + r6");
        assert_eq!(&x * &x.inv().unwrap(), FieldElement::one());
        assert!(FieldElement::zero().inv().is_err());
    }

    #[test]
    fn floor_and_sqrt() {
        assert_eq!(fe("2r3").floor(), BigInt::from(3));
        assert_eq!(fe("-2r3").floor(), BigInt::from(-4));
        assert_eq!(fe("7/2").floor(), BigInt::from(3));
        assert_eq!(fe("8").sqrt_simple(), Some(fe("2r2")));
        assert_eq!(fe("3/4").sqrt_simple(), Some(fe("1/2r3")));
        assert_eq!(fe("5").sqrt_simple(), None);
    }

    #[test]
    fn parse_and_display_round_trip() {
        let x = fe("-1/2 + 3r2 - r3 + 2/5√6");
        let again: FieldElement = x.to_string().replace('√', "r").parse().unwrap();
        assert_eq!(x, again);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"["-1/2","3","-1","2/5"]"#);
        let back: FieldElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    use proptest::prelude::*;

    fn arb_fe() -> impl Strategy<Value = FieldElement> {
        (proptest::array::uniform4(-2000i64..2000), 1i64..500)
            .prop_map(|(c, d)| FieldElement::from_ints(c, d))
    }

    proptest! {
        #[test]
        fn sign_matches_nested_squaring(x in arb_fe()) {
            prop_assert_eq!(x.sign(), oracle_sign(&x));
            prop_assert_eq!(x.refined_sign_or_zero(), oracle_sign(&x));
        }

        #[test]
        fn inverse_round_trips(x in arb_fe()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), FieldElement::one());
        }

        #[test]
        fn ring_laws(a in arb_fe(), b in arb_fe(), c in arb_fe()) {
            prop_assert_eq!(&a * &(&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
        }

        #[test]
        fn sign_agrees_with_floats(x in arb_fe()) {
            let f = x.to_f64();
            if f.abs() > 1e-6 {
                prop_assert_eq!(x.sign(), if f > 0.0 { 1 } else { -1 });
            }
        }
    }

    impl FieldElement {
        fn refined_sign_or_zero(&self) -> i32 {
            if self.is_zero() {
                0
            } else {
                self.refined_sign()
            }
        }
    }
}

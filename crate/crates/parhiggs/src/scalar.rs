//! Exact scalar tower: rationals, rational functions in one deformation
//! variable `h`, and complex floats with tolerance-based comparison.
//!
//! All deformation limits (`q2 -> q1` and friends) are computed by working in
//! the rational-function field `Q(h)` and cancelling common powers of `h`
//! exactly, so no numerical limit is ever taken.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Default comparison tolerance for the float backend.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Polynomial helpers over `BigRational` coefficient vectors (ascending
/// degree, trailing zeros trimmed). Used to implement the `h`-rational
/// function backend.
pub(crate) mod hp {
    use super::*;

    pub fn trim(mut v: Vec<BigRational>) -> Vec<BigRational> {
        while v.last().map(|c| c.is_zero()).unwrap_or(false) {
            v.pop();
        }
        v
    }

    pub fn is_zero(v: &[BigRational]) -> bool {
        v.iter().all(|c| c.is_zero())
    }

    pub fn deg(v: &[BigRational]) -> Option<usize> {
        v.iter().rposition(|c| !c.is_zero())
    }

    pub fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let n = a.len().max(b.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            out.push(x + y);
        }
        trim(out)
    }

    pub fn neg(a: &[BigRational]) -> Vec<BigRational> {
        a.iter().map(|c| -c.clone()).collect()
    }

    pub fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        add(a, &neg(b))
    }

    pub fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        if is_zero(a) || is_zero(b) {
            return vec![];
        }
        let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    out[i + j] += x * y;
                }
            }
        }
        trim(out)
    }

    pub fn scale(a: &[BigRational], c: &BigRational) -> Vec<BigRational> {
        trim(a.iter().map(|x| x * c).collect())
    }

    /// Euclidean remainder of `a` by `b` (`b` nonzero).
    pub fn rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let db = deg(b).expect("rem by zero polynomial");
        let lead = b[db].clone();
        let mut r = trim(a.to_vec());
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / &lead;
            let shift = dr - db;
            for (j, bc) in b.iter().enumerate().take(db + 1) {
                let t = bc * &c;
                r[j + shift] -= t;
            }
            r = trim(r);
        }
        r
    }

    /// Monic gcd of `a` and `b`.
    pub fn gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut x = trim(a.to_vec());
        let mut y = trim(b.to_vec());
        while !is_zero(&y) {
            let r = rem(&x, &y);
            x = y;
            y = r;
        }
        if let Some(d) = deg(&x) {
            let lead = x[d].clone();
            x = scale(&x, &(BigRational::one() / lead));
        }
        x
    }

    /// Exact quotient; panics if the division is not exact.
    pub fn exact_div(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let db = deg(b).expect("division by zero polynomial");
        let lead = b[db].clone();
        let mut r = trim(a.to_vec());
        let mut q = vec![
            BigRational::zero();
            deg(&r).map(|da| da.saturating_sub(db) + 1).unwrap_or(1)
        ];
        while let Some(dr) = deg(&r) {
            if dr < db {
                break;
            }
            let c = &r[dr] / &lead;
            let shift = dr - db;
            q[shift] = c.clone();
            for (j, bc) in b.iter().enumerate().take(db + 1) {
                let t = bc * &c;
                r[j + shift] -= t;
            }
            r = trim(r);
        }
        assert!(is_zero(&r), "exact_div: division was not exact");
        trim(q)
    }

    pub fn eval(a: &[BigRational], x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in a.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(a: &[BigRational], x: f64) -> f64 {
        let mut acc = 0.0;
        for c in a.iter().rev() {
            acc = acc * x + c.to_f64().unwrap_or(f64::NAN);
        }
        acc
    }
}

/// A reduced rational function in the deformation variable `h`:
/// coprime numerator/denominator, denominator monic and nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFn {
    num: Vec<BigRational>,
    den: Vec<BigRational>,
}

impl RatFn {
    fn reduced(num: Vec<BigRational>, den: Vec<BigRational>) -> RatFn {
        let num = hp::trim(num);
        let mut den = hp::trim(den);
        assert!(!hp::is_zero(&den), "RatFn with zero denominator");
        let mut num = num;
        if hp::is_zero(&num) {
            return RatFn {
                num: vec![],
                den: vec![BigRational::one()],
            };
        }
        let g = hp::gcd(&num, &den);
        if hp::deg(&g) != Some(0) {
            num = hp::exact_div(&num, &g);
            den = hp::exact_div(&den, &g);
        }
        let lead = den[hp::deg(&den).unwrap()].clone();
        if !lead.is_one() {
            let inv = BigRational::one() / lead;
            num = hp::scale(&num, &inv);
            den = hp::scale(&den, &inv);
        }
        RatFn { num, den }
    }

    pub fn numerator(&self) -> &[BigRational] {
        &self.num
    }

    pub fn denominator(&self) -> &[BigRational] {
        &self.den
    }

    fn is_constant(&self) -> bool {
        self.num.len() <= 1 && self.den.len() == 1
    }

    fn as_constant(&self) -> BigRational {
        debug_assert!(self.is_constant());
        if self.num.is_empty() {
            BigRational::zero()
        } else {
            &self.num[0] / &self.den[0]
        }
    }
}

/// A scalar from the exact tower or the float backend.
#[derive(Clone)]
pub enum Scalar {
    /// Exact rational number.
    Rat(BigRational),
    /// Exact rational function in the deformation variable `h` (non-constant).
    RatFn(RatFn),
    /// Complex float, compared with [`DEFAULT_TOL`].
    Float(Complex64),
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{}", r),
            Scalar::RatFn(rf) => write!(f, "({:?})/({:?})", rf.num, rf.den),
            Scalar::Float(c) => write!(f, "{}+{}i", c.re, c.im),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Scalar {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_i64(v: i64) -> Scalar {
        Scalar::Rat(BigRational::from_integer(BigInt::from(v)))
    }

    pub fn rat(num: i64, den: i64) -> Scalar {
        assert!(den != 0);
        Scalar::Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(r: BigRational) -> Scalar {
        Scalar::Rat(r)
    }

    pub fn float(re: f64, im: f64) -> Scalar {
        Scalar::Float(Complex64::new(re, im))
    }

    /// The deformation variable `h`.
    pub fn h() -> Scalar {
        Scalar::RatFn(RatFn {
            num: vec![BigRational::zero(), BigRational::one()],
            den: vec![BigRational::one()],
        })
    }

    /// Canonical constructor for an h-rational function; demotes constants.
    pub fn ratfn(num: Vec<BigRational>, den: Vec<BigRational>) -> Scalar {
        let rf = RatFn::reduced(num, den);
        if rf.is_constant() {
            Scalar::Rat(rf.as_constant())
        } else {
            Scalar::RatFn(rf)
        }
    }

    /// Parse an exact rational from `"p"` or `"p/q"`.
    pub fn parse_rat(s: &str) -> Result<Scalar> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt> {
            t.trim().parse::<BigInt>().map_err(|_| Error::ParseError {
                location: t.to_string(),
                detail: "expected an integer".into(),
            })
        };
        if let Some((n, d)) = s.split_once('/') {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::ParseError {
                    location: s.to_string(),
                    detail: "zero denominator".into(),
                });
            }
            Ok(Scalar::Rat(BigRational::new(parse_int(n)?, den)))
        } else {
            Ok(Scalar::Rat(BigRational::from_integer(parse_int(s)?)))
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::RatFn(_) => false, // non-constant by invariant
            Scalar::Float(c) => c.norm() <= DEFAULT_TOL,
        }
    }

    pub fn is_exact(&self) -> bool {
        !matches!(self, Scalar::Float(_))
    }

    pub fn as_rat(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            _ => None,
        }
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Scalar::Rat(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Scalar::RatFn(_) => panic!("cannot convert a non-constant h-function to a float"),
            Scalar::Float(c) => *c,
        }
    }

    /// Lift to the h-function representation (numerator, denominator).
    fn as_ratfn(&self) -> RatFn {
        match self {
            Scalar::Rat(r) => RatFn {
                num: hp::trim(vec![r.clone()]),
                den: vec![BigRational::one()],
            },
            Scalar::RatFn(rf) => rf.clone(),
            Scalar::Float(_) => panic!("cannot mix float and h-function scalars"),
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        fr: impl Fn(&BigRational, &BigRational) -> BigRational,
        ff: impl Fn(Complex64, Complex64) -> Complex64,
        fh: impl Fn(&RatFn, &RatFn) -> Scalar,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(fr(a, b)),
            (Scalar::Float(a), Scalar::Float(b)) => Scalar::Float(ff(*a, *b)),
            (Scalar::Float(a), Scalar::Rat(_)) => Scalar::Float(ff(*a, other.to_complex())),
            (Scalar::Rat(_), Scalar::Float(b)) => Scalar::Float(ff(self.to_complex(), *b)),
            _ => fh(&self.as_ratfn(), &other.as_ratfn()),
        }
    }

    pub fn add_s(&self, other: &Scalar) -> Scalar {
        self.binop(
            other,
            |a, b| a + b,
            |a, b| a + b,
            |a, b| {
                let num = hp::add(&hp::mul(&a.num, &b.den), &hp::mul(&b.num, &a.den));
                Scalar::ratfn(num, hp::mul(&a.den, &b.den))
            },
        )
    }

    pub fn sub_s(&self, other: &Scalar) -> Scalar {
        self.add_s(&other.neg_s())
    }

    pub fn mul_s(&self, other: &Scalar) -> Scalar {
        self.binop(
            other,
            |a, b| a * b,
            |a, b| a * b,
            |a, b| Scalar::ratfn(hp::mul(&a.num, &b.num), hp::mul(&a.den, &b.den)),
        )
    }

    pub fn neg_s(&self) -> Scalar {
        match self {
            Scalar::Rat(r) => Scalar::Rat(-r.clone()),
            Scalar::RatFn(rf) => Scalar::RatFn(RatFn {
                num: hp::neg(&rf.num),
                den: rf.den.clone(),
            }),
            Scalar::Float(c) => Scalar::Float(-c),
        }
    }

    pub fn inv_s(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    Err(Error::DivisionByZero("inverse of zero".into()))
                } else {
                    Ok(Scalar::Rat(BigRational::one() / r.clone()))
                }
            }
            Scalar::RatFn(rf) => Ok(Scalar::ratfn(rf.den.clone(), rf.num.clone())),
            Scalar::Float(c) => {
                if c.norm() == 0.0 {
                    Err(Error::DivisionByZero("inverse of zero float".into()))
                } else {
                    Ok(Scalar::Float(c.inv()))
                }
            }
        }
    }

    pub fn div_s(&self, other: &Scalar) -> Result<Scalar> {
        Ok(self.mul_s(&other.inv_s()?))
    }

    /// Nonnegative integer power.
    pub fn pow_u(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_s(&base);
            }
            base = base.mul_s(&base.clone());
            e >>= 1;
        }
        acc
    }

    /// Exact substitution `h = 0` after reduction.
    pub fn limit_h0(&self) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) | Scalar::Float(_) => Ok(self.clone()),
            Scalar::RatFn(rf) => {
                let d0 = hp::eval(&rf.den, &BigRational::zero());
                if d0.is_zero() {
                    Err(Error::PoleAtLimit(format!("{:?}", self)))
                } else {
                    let n0 = hp::eval(&rf.num, &BigRational::zero());
                    Ok(Scalar::Rat(n0 / d0))
                }
            }
        }
    }

    /// Exact substitution of a rational value for `h`.
    pub fn eval_h(&self, v: &BigRational) -> Result<Scalar> {
        match self {
            Scalar::Rat(_) | Scalar::Float(_) => Ok(self.clone()),
            Scalar::RatFn(rf) => {
                let d = hp::eval(&rf.den, v);
                if d.is_zero() {
                    Err(Error::DivisionByZero(format!("denominator vanishes at h={}", v)))
                } else {
                    Ok(Scalar::Rat(hp::eval(&rf.num, v) / d))
                }
            }
        }
    }

    /// Float evaluation at a real `h` (identity on constants).
    pub fn eval_h_f64(&self, v: f64) -> Complex64 {
        match self {
            Scalar::Rat(r) => Complex64::new(r.to_f64().unwrap_or(f64::NAN), 0.0),
            Scalar::Float(c) => *c,
            Scalar::RatFn(rf) => {
                Complex64::new(hp::eval_f64(&rf.num, v) / hp::eval_f64(&rf.den, v), 0.0)
            }
        }
    }

    /// Order of vanishing at `h = 0`: positive for zeros, negative for poles.
    /// Constants map to 0 (or `None` for the zero scalar).
    pub fn h_order(&self) -> Option<i64> {
        match self {
            Scalar::Rat(r) => {
                if r.is_zero() {
                    None
                } else {
                    Some(0)
                }
            }
            Scalar::Float(_) => Some(0),
            Scalar::RatFn(rf) => {
                let vn = rf.num.iter().position(|c| !c.is_zero())? as i64;
                let vd = rf
                    .den
                    .iter()
                    .position(|c| !c.is_zero())
                    .expect("nonzero denominator") as i64;
                Some(vn - vd)
            }
        }
    }

    /// Exact square root of a rational perfect square.
    pub fn sqrt_exact(&self) -> Option<Scalar> {
        let r = self.as_rat()?;
        if r.is_negative() {
            return None;
        }
        let n = r.numer().sqrt();
        let d = r.denom().sqrt();
        if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
            Some(Scalar::Rat(BigRational::new(n, d)))
        } else {
            None
        }
    }

    pub fn approx_eq(&self, other: &Scalar, tol: f64) -> bool {
        match (self.is_exact(), other.is_exact()) {
            (true, true) => self.exact_eq(other),
            _ => (self.to_complex() - other.to_complex()).norm() <= tol,
        }
    }

    fn exact_eq(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::RatFn(a), Scalar::RatFn(b)) => a == b,
            // Rat vs non-constant RatFn can never be equal (canonical form).
            _ => false,
        }
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, DEFAULT_TOL)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $call:ident) => {
        impl $trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$call(rhs)
            }
        }
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$call(&rhs)
            }
        }
    };
}

impl_binop!(Add, add, add_s);
impl_binop!(Sub, sub, sub_s);
impl_binop!(Mul, mul, mul_s);

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.div_s(rhs).expect("division by zero scalar")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).div(&rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_s()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.neg_s()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::rat(n, d)
    }

    #[test]
    fn rational_field_ops() {
        let a = r(1, 3);
        let b = r(1, 6);
        assert_eq!(a.add_s(&b), r(1, 2));
        assert_eq!(a.sub_s(&b), r(1, 6));
        assert_eq!(a.mul_s(&b), r(1, 18));
        assert_eq!(a.div_s(&b).unwrap(), r(2, 1));
        assert_eq!(a.neg_s().add_s(&a), Scalar::zero());
    }

    #[test]
    fn h_cancellation_limit() {
        let h = Scalar::h();
        // h/h -> 1
        let x = h.div_s(&h).unwrap();
        assert_eq!(x.limit_h0().unwrap(), Scalar::one());
        // (3h^2+h)/h -> 1 at h=0
        let num = Scalar::from_i64(3).mul_s(&h).mul_s(&h).add_s(&h);
        let y = num.div_s(&h).unwrap();
        assert_eq!(y.limit_h0().unwrap(), Scalar::one());
        // 1/h -> pole
        let z = Scalar::one().div_s(&h).unwrap();
        assert!(matches!(z.limit_h0(), Err(Error::PoleAtLimit(_))));
    }

    #[test]
    fn ratfn_demotes_constants() {
        let h = Scalar::h();
        let c = h.sub_s(&h).add_s(&r(5, 7));
        assert!(matches!(c, Scalar::Rat(_)));
        let d = h.mul_s(&h).div_s(&h.mul_s(&h)).unwrap();
        assert_eq!(d, Scalar::one());
    }

    #[test]
    fn limit_agrees_with_small_h_float() {
        // ((1+h)^3 - 1)/h -> 3
        let h = Scalar::h();
        let one = Scalar::one();
        let e = one.add_s(&h).pow_u(3).sub_s(&one).div_s(&h).unwrap();
        let exact = e.limit_h0().unwrap();
        assert_eq!(exact, Scalar::from_i64(3));
        let approx = e.eval_h_f64(1e-8).re;
        assert!((approx - 3.0).abs() < 1e-6);
    }

    #[test]
    fn h_order_and_sqrt() {
        let h = Scalar::h();
        assert_eq!(h.h_order(), Some(1));
        assert_eq!(Scalar::one().div_s(&h).unwrap().h_order(), Some(-1));
        assert_eq!(r(9, 4).sqrt_exact().unwrap(), r(3, 2));
        assert!(r(2, 1).sqrt_exact().is_none());
        assert!(r(-1, 1).sqrt_exact().is_none());
    }

    #[test]
    fn float_tolerance_equality() {
        let a = Scalar::float(1.0, 0.0);
        let b = Scalar::float(1.0 + 1e-12, 0.0);
        assert_eq!(a, b);
        let c = Scalar::float(1.0 + 1e-6, 0.0);
        assert!(a != c);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(Scalar::parse_rat("3/4").unwrap(), r(3, 4));
        assert_eq!(Scalar::parse_rat("-7").unwrap(), Scalar::from_i64(-7));
        assert!(Scalar::parse_rat("1/0").is_err());
        assert!(Scalar::parse_rat("x").is_err());
    }
}

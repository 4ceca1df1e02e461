//! Univariate polynomials in `z` over the scalar tower, with a formal degree
//! bound carried alongside the coefficients (so a degree deficit encodes
//! roots at infinity).

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Polynomial with coefficients in ascending degree and a formal bound.
/// Trailing zeros up to the bound are permitted.
#[derive(Clone, Debug)]
pub struct Poly {
    coeffs: Vec<Scalar>,
    bound: usize,
}

impl Poly {
    pub fn new(coeffs: Vec<Scalar>, bound: usize) -> Poly {
        assert!(
            coeffs.len() <= bound + 1,
            "coefficient list exceeds the formal degree bound"
        );
        Poly { coeffs, bound }
    }

    /// Bound inferred from the coefficient list length.
    pub fn from_coeffs(coeffs: Vec<Scalar>) -> Poly {
        let bound = coeffs.len().saturating_sub(1);
        Poly { coeffs, bound }
    }

    pub fn zero(bound: usize) -> Poly {
        Poly {
            coeffs: vec![],
            bound,
        }
    }

    pub fn constant(c: Scalar, bound: usize) -> Poly {
        Poly {
            coeffs: vec![c],
            bound,
        }
    }

    /// The monomial `z - a` with bound 1.
    pub fn linear(a: &Scalar) -> Poly {
        Poly::from_coeffs(vec![a.neg_s(), Scalar::one()])
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn with_bound(mut self, bound: usize) -> Poly {
        assert!(self.degree().map(|d| d <= bound).unwrap_or(true));
        self.bound = bound;
        self
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Actual degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn leading(&self) -> Option<Scalar> {
        self.degree().map(|d| self.coeff(d))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_s(x).add_s(c);
        }
        acc
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i).add_s(&other.coeff(i)));
        }
        Poly {
            coeffs: out,
            bound: self.bound.max(other.bound),
        }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| c.neg_s()).collect(),
            bound: self.bound,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|x| x.mul_s(c)).collect(),
            bound: self.bound,
        }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.bound + other.bound);
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add_s(&a.mul_s(b));
            }
        }
        Poly {
            coeffs: out,
            bound: self.bound + other.bound,
        }
    }

    /// Multiply by `z^k` (raises the bound by `k`).
    pub fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero(self.bound + k);
        }
        let mut out = vec![Scalar::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Poly {
            coeffs: out,
            bound: self.bound + k,
        }
    }

    pub fn derivative(&self) -> Poly {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().skip(1) {
            out.push(c.mul_s(&Scalar::from_i64(i as i64)));
        }
        Poly {
            coeffs: out,
            bound: self.bound.saturating_sub(1),
        }
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d
            .degree()
            .ok_or_else(|| Error::DivisionByZero("polynomial division by zero".into()))?;
        let lead = d.coeff(dd);
        let mut r: Vec<Scalar> = self.coeffs.clone();
        let trim = |v: &mut Vec<Scalar>| {
            while v.last().map(|c| c.is_zero()).unwrap_or(false) {
                v.pop();
            }
        };
        trim(&mut r);
        let mut q = vec![Scalar::zero(); r.len().saturating_sub(dd) + 1];
        while r.len() > dd {
            let dr = r.len() - 1;
            let c = r[dr].div_s(&lead)?;
            let shift = dr - dd;
            q[shift] = c.clone();
            for j in 0..=dd {
                r[j + shift] = r[j + shift].sub_s(&d.coeff(j).mul_s(&c));
            }
            trim(&mut r);
        }
        Ok((
            Poly::from_coeffs(q),
            Poly {
                coeffs: r,
                bound: if dd == 0 { 0 } else { dd - 1 },
            },
        ))
    }

    /// Exact quotient; errors if the division has a remainder.
    pub fn exact_div(&self, d: &Poly) -> Result<Poly> {
        let (q, r) = self.divrem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Domain("polynomial division was not exact".into()))
        }
    }

    /// Monic gcd over the scalar field (exact backends).
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        if let Some(l) = a.leading() {
            a = a.scale(&l.inv_s()?);
        }
        Ok(a)
    }

    /// Taylor coefficients of order `0..=order` at the point `c`, i.e. the
    /// coefficients of `self` expanded in powers of `z - c`.
    pub fn taylor_at(&self, c: &Scalar, order: usize) -> Result<Vec<Scalar>> {
        let lin = Poly::linear(c);
        let mut rest = self.clone();
        let mut out = Vec::with_capacity(order + 1);
        for _ in 0..=order {
            let (q, r) = rest.divrem(&lin)?;
            out.push(r.coeff(0));
            rest = q;
        }
        Ok(out)
    }

    /// `z^m * self(1/z)` for `m = bound`: reversal against the formal bound.
    pub fn reverse(&self) -> Poly {
        let mut out = vec![Scalar::zero(); self.bound + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[self.bound - i] = c.clone();
        }
        Poly {
            coeffs: out,
            bound: self.bound,
        }
    }

    /// Coefficient at the formal degree bound (zero on a degree deficit).
    pub fn top(&self) -> Scalar {
        self.coeff(self.bound)
    }

    /// Exact `h -> 0` limit, coefficientwise.
    pub fn limit_h0(&self) -> Result<Poly> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| c.limit_h0())
            .collect::<Result<Vec<_>>>()?;
        Ok(Poly {
            coeffs,
            bound: self.bound,
        })
    }

    /// Exact coefficientwise equality (no bound comparison).
    pub fn same_poly(&self, other: &Poly) -> bool {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n).all(|i| self.coeff(i) == other.coeff(i))
    }
}

/// Build the monic polynomial with the given finite roots.
pub fn poly_from_roots(roots: &[Scalar]) -> Poly {
    let mut p = Poly::from_coeffs(vec![Scalar::one()]);
    for r in roots {
        p = p.mul(&Poly::linear(r));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: i64) -> Scalar {
        Scalar::from_i64(v)
    }

    #[test]
    fn eval_basics() {
        // f = z - 1 at 1 -> 0
        let f = Poly::linear(&s(1));
        assert_eq!(f.eval(&s(1)), Scalar::zero());
        // f = 2z - 1 at 4 -> 7
        let f = Poly::from_coeffs(vec![s(-1), s(2)]);
        assert_eq!(f.eval(&s(4)), s(7));
        // zero polynomial
        assert_eq!(Poly::zero(3).eval(&s(17)), Scalar::zero());
    }

    #[test]
    fn mul_div_roundtrip() {
        let a = poly_from_roots(&[s(4), s(5)]);
        let b = Poly::from_coeffs(vec![s(3), s(0), s(1)]);
        let p = a.mul(&b);
        assert!(p.exact_div(&a).unwrap().same_poly(&b));
        let (q, r) = p.add(&Poly::constant(s(1), 0)).divrem(&a).unwrap();
        assert!(q.same_poly(&b));
        assert_eq!(r.coeff(0), s(1));
    }

    #[test]
    fn taylor_coefficients() {
        // (z-2)^3 + 5(z-2) + 7 at c=2: [7, 5, 0, 1]
        let c = s(2);
        let lin = Poly::linear(&c);
        let f = lin.mul(&lin).mul(&lin).add(&lin.scale(&s(5))).add(&Poly::constant(s(7), 0));
        let t = f.taylor_at(&c, 3).unwrap();
        assert_eq!(t, vec![s(7), s(5), s(0), s(1)]);
    }

    #[test]
    fn reverse_and_top() {
        // f = z with bound 2: reverse = z (coefficients [0,1,0] -> [0,1,0])
        let f = Poly::new(vec![s(0), s(1)], 2);
        let r = f.reverse();
        assert_eq!(r.coeff(0), s(0));
        assert_eq!(r.coeff(1), s(1));
        assert_eq!(f.top(), s(0));
        assert_eq!(f.degree(), Some(1));
    }

    #[test]
    fn gcd_of_shared_root() {
        let a = poly_from_roots(&[s(1), s(2)]);
        let b = poly_from_roots(&[s(2), s(3)]);
        let g = a.gcd(&b).unwrap();
        assert!(g.same_poly(&Poly::linear(&s(2))));
    }
}

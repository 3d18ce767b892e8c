//! Rational functions in reduced form.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{Poly, Rational};

/// `num / den` with `gcd(num, den) = 1` and `den` monic. Scalars live in the
/// numerator, and zero is always `0/1`, so equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduces `num / den` to lowest terms with a monic denominator.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(RatFunc::zero());
        }
        let g = Poly::gcd(&num, &den)?;
        let num = num.exact_div(&g)?;
        let den = den.exact_div(&g)?;
        let lc = den
            .leading_coeff()
            .cloned()
            .expect("nonzero denominator")
            .recip();
        Ok(RatFunc {
            num: num.scale(&lc),
            den: den.scale(&lc),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(Poly::one())
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc::from_poly(Poly::constant(c))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn into_parts(self) -> (Poly, Poly) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("product of monic denominators is nonzero")
    }

    pub fn sub(&self, rhs: &RatFunc) -> RatFunc {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of monic denominators is nonzero")
    }

    pub fn div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn neg(&self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> RatFunc {
        RatFunc {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// `self(n + k)`; shifting preserves coprimality and monicity.
    pub fn shift(&self, k: i64) -> RatFunc {
        RatFunc {
            num: self.num.shift(k),
            den: self.den.shift(k),
        }
    }
}

impl From<Poly> for RatFunc {
    fn from(p: Poly) -> Self {
        RatFunc::from_poly(p)
    }
}

/// `num` alone when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    #[test]
    fn reduce_cancels_common_factor() {
        let num = &p(&[3, 1]) * &p(&[1, 1]);
        let den = &(&p(&[1, 1]) * &p(&[2, 1])) * &p(&[1, 1]);
        let r = RatFunc::new(num, den).unwrap();
        assert_eq!(r.num(), &p(&[3, 1]));
        assert_eq!(r.den(), &(&p(&[1, 1]) * &p(&[2, 1])));
    }

    #[test]
    fn reduce_zero_numerator() {
        let r = RatFunc::new(Poly::zero(), p(&[0, 0, 1])).unwrap();
        assert_eq!(r, RatFunc::zero());
        assert!(r.den().is_one());
    }

    #[test]
    fn reduce_constant_ratio() {
        let r = RatFunc::new(p(&[2, 2]), p(&[4, 4])).unwrap();
        assert_eq!(r.num(), &Poly::constant(rat(1, 2)));
        assert!(r.den().is_one());
    }

    #[test]
    fn reduce_zero_denominator() {
        assert_eq!(
            RatFunc::new(p(&[1]), Poly::zero()),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn display_monic_denominator() {
        // -2(2n+1)/(4n+1)
        let r = RatFunc::new(p(&[-2, -4]), p(&[1, 4])).unwrap();
        assert_eq!(r.to_string(), "(-n - 1/2)/(n + 1/4)");
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(p(&[1]), p(&[0, 1])).unwrap();
        let b = RatFunc::new(p(&[1]), p(&[1, 1])).unwrap();
        // 1/n - 1/(n+1) = 1/(n(n+1))
        let d = a.sub(&b);
        assert_eq!(d, RatFunc::new(p(&[1]), p(&[0, 1, 1])).unwrap());
        assert_eq!(d.mul(&RatFunc::from_poly(p(&[0, 1, 1]))), RatFunc::one());
        assert_eq!(a.div(&a).unwrap(), RatFunc::one());
        assert!(a.div(&RatFunc::zero()).is_err());
    }
}

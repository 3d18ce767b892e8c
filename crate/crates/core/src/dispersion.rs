//! Resultants, integer roots, and the dispersion of two polynomials.
//!
//! `dis(a, b)` is the largest `k >= 0` such that `a(n)` and `b(n + k)` share a
//! nonconstant factor, or `-1` when there is none. The candidate shifts are
//! the nonnegative integer roots of `R(h) = Res_n(a(n), b(n + h))`; each one
//! is confirmed by an explicit gcd before it is reported.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{rat_int, Poly, Rational};

/// Outcome of a dispersion computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DispersionResult {
    /// Largest shift with a nontrivial common factor, or `-1`.
    pub value: i64,
    /// Every shift `k >= 0` with `gcd(a(n), b(n + k))` nonconstant, ascending,
    /// paired with that monic gcd.
    pub witnesses: Vec<(i64, Poly)>,
}

impl DispersionResult {
    fn none() -> Self {
        DispersionResult {
            value: -1,
            witnesses: Vec::new(),
        }
    }
}

/// `Res(a, b) = lc(a)^deg(b) * prod b(alpha)` over the roots of `a`.
/// A constant `c` against `b` of degree `m` gives `c^m`.
pub fn resultant(a: &Poly, b: &Poly) -> Result<Rational> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("first resultant argument"));
    }
    if b.is_zero() {
        return Err(Error::ZeroPolynomial("second resultant argument"));
    }
    let mut x = a.clone();
    let mut y = b.clone();
    let mut acc = Rational::one();
    loop {
        let m = x.degree().expect("nonzero");
        let n = y.degree().expect("nonzero");
        if n == 0 {
            return Ok(acc * pow(y.leading_coeff().expect("nonzero"), m));
        }
        if m == 0 {
            return Ok(acc * pow(x.leading_coeff().expect("nonzero"), n));
        }
        let r = x.rem(&y)?;
        let Some(dr) = r.degree() else {
            return Ok(Rational::zero());
        };
        // Res(x, y) = (-1)^(mn) Res(y, x) = (-1)^(mn) lc(y)^(m - dr) Res(y, r)
        acc *= pow(y.leading_coeff().expect("nonzero"), m - dr);
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        x = y;
        y = r;
    }
}

fn pow(c: &Rational, e: usize) -> Rational {
    num_traits::pow(c.clone(), e)
}

/// `R(h) = Res_n(a(n), b(n + h))` as a polynomial in `h`, by evaluating at
/// `deg(a) * deg(b) + 1` integer points and interpolating.
pub fn shifted_resultant(a: &Poly, b: &Poly) -> Result<Poly> {
    let (Some(da), Some(db)) = (a.degree(), b.degree()) else {
        return Err(Error::ZeroPolynomial("resultant argument"));
    };
    let points = (0..=(da * db) as i64)
        .map(|h| Ok((rat_int(h), resultant(a, &b.shift(h))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(interpolate(&points))
}

/// Interpolation through distinct nodes: Newton divided differences, then
/// the nested form expanded from the inside out.
pub fn interpolate(points: &[(Rational, Rational)]) -> Poly {
    let xs: Vec<&Rational> = points.iter().map(|(x, _)| x).collect();
    let mut coef: Vec<Rational> = points.iter().map(|(_, y)| y.clone()).collect();
    for level in 1..coef.len() {
        for i in (level..coef.len()).rev() {
            coef[i] = (&coef[i] - &coef[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // c_0 + (x - x_0)(c_1 + (x - x_1)(c_2 + ...))
    let mut acc: Vec<Rational> = Vec::with_capacity(coef.len());
    for i in (0..coef.len()).rev() {
        // acc <- acc * (x - x_i) + c_i
        acc.insert(0, Rational::zero());
        for j in 0..acc.len() - 1 {
            let t = &acc[j + 1] * xs[i];
            acc[j] -= t;
        }
        acc[0] += &coef[i];
    }
    Poly::from_coeffs(acc)
}

/// All integer roots of a nonzero polynomial.
///
/// Denominators are cleared to a primitive integer polynomial, the root 0 is
/// split off as a power of the variable, and the remaining candidates are the
/// divisors of the trailing coefficient (both signs) that lie inside an exact
/// bound on the root moduli.
pub fn integer_roots(p: &Poly) -> Result<BTreeSet<BigInt>> {
    if p.is_zero() {
        return Err(Error::InfiniteRoots);
    }
    let mut roots = BTreeSet::new();
    let ints = p.primitive_integer_coeffs();
    let low = ints.iter().take_while(|c| c.is_zero()).count();
    if low > 0 {
        roots.insert(BigInt::zero());
    }
    let q = &ints[low..];
    if q.len() <= 1 {
        return Ok(roots);
    }
    let trailing = q[0].abs();
    let bound = root_modulus_bound(q);
    let is_root = |x: &BigInt| {
        q.iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
            .is_zero()
    };
    let mut consider = |d: BigInt| {
        if d < bound {
            let neg = -&d;
            if is_root(&d) {
                roots.insert(d);
            }
            if is_root(&neg) {
                roots.insert(neg);
            }
        }
    };
    let sqrt = trailing.sqrt();
    if bound <= sqrt {
        let mut d = BigInt::one();
        while d < bound {
            if (&trailing % &d).is_zero() {
                consider(d.clone());
            }
            d += 1;
        }
    } else {
        let mut d = BigInt::one();
        while d <= sqrt {
            if (&trailing % &d).is_zero() {
                consider(&trailing / &d);
                consider(d.clone());
            }
            d += 1;
        }
    }
    Ok(roots)
}

/// Smallest `X` (up to a factor of two) with `|c_n| X^n > sum |c_i| X^i`;
/// every complex root then has modulus below `X`.
fn root_modulus_bound(coeffs: &[BigInt]) -> BigInt {
    let dominates = |x: &BigInt| {
        let (lead, rest) = coeffs.split_last().expect("nonempty");
        let mut pw = BigInt::one();
        let mut tail = BigInt::zero();
        for c in rest {
            tail += c.abs() * &pw;
            pw *= x;
        }
        lead.abs() * pw > tail
    };
    let mut hi = BigInt::one();
    while !dominates(&hi) {
        hi *= 2;
    }
    let mut lo = &hi / 2;
    // dominates(hi) holds; shrink towards the threshold
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / 2;
        if dominates(&mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    hi
}

/// Dispersion of `a` and `b`.
pub fn dispersion(a: &Poly, b: &Poly) -> Result<DispersionResult> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial("dispersion argument"));
    }
    if a.is_unit() || b.is_unit() {
        return Ok(DispersionResult::none());
    }
    let r = shifted_resultant(a, b)?;
    if r.is_zero() {
        return Err(Error::Internal(format!(
            "shifted resultant of {a} and {b} vanished identically"
        )));
    }
    let mut witnesses = Vec::new();
    for k in integer_roots(&r)?.into_iter().filter(|k| !k.is_negative()) {
        let k = k
            .to_i64()
            .ok_or_else(|| Error::Internal(format!("shift {k} out of range")))?;
        let g = Poly::gcd(a, &b.shift(k))?;
        if !g.is_unit() {
            witnesses.push((k, g));
        }
    }
    Ok(DispersionResult {
        value: witnesses.last().map_or(-1, |(k, _)| *k),
        witnesses,
    })
}

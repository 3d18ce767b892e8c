//! The converging gcd sequence and the universal denominator it stabilizes to.
//!
//! For nonzero `p0`, `pd` and an order `d`, let
//!
//! ```text
//! G_k(n) = gcd( p0(n) p0(n+1) ... p0(n+k-1),  pd(n-d) pd(n-d-1) ... pd(n-d-k+1) )
//! ```
//!
//! With `N = dis(pd(n-d), p0(n))`, no factor of either product can pair up
//! across a shift larger than `N`, so `G_k = G_{N+1}` for every `k > N`. The
//! limit is a universal denominator for `sum p_m(n) y(n+m) = p(n)`. Gosper's
//! first-order equation `a(n) y(n+1) - b(n) y(n) = b(n)` is the case
//! `p0 = b`, `pd = a`, `d = 1`, where `N` is the `k0 = dis(a(n-1), b(n))` of
//! the summation algorithm.

use crate::dispersion::dispersion;
use crate::error::{Error, Result};
use crate::poly::Poly;

/// The stabilized gcd sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GcdLimit {
    /// `dis(pd(n-d), p0(n))`, `-1` when the two never meet.
    pub k0: i64,
    /// `G_{k0+1}`, or `1` when `k0 = -1`.
    pub limit: Poly,
    /// `G_1, ..., G_{k0+1}`; empty when `k0 = -1`.
    pub trace: Vec<Poly>,
}

fn check_nonzero(p0: &Poly, pd: &Poly) -> Result<()> {
    if p0.is_zero() {
        return Err(Error::ZeroPolynomial("p0"));
    }
    if pd.is_zero() {
        return Err(Error::ZeroPolynomial("pd"));
    }
    Ok(())
}

/// `N = dis(pd(n-d), p0(n))`.
pub fn order_dispersion(p0: &Poly, pd: &Poly, d: usize) -> Result<i64> {
    check_nonzero(p0, pd)?;
    Ok(dispersion(&pd.shift(-(d as i64)), p0)?.value)
}

/// `gcd(f_1 f_2 ... f_r, other)` without expanding the left product, using
/// `gcd(xy, z) = gcd(x, z) * gcd(y, z / gcd(x, z))`.
pub(crate) fn gcd_with_product<'a>(
    factors: impl IntoIterator<Item = &'a Poly>,
    other: &Poly,
) -> Result<Poly> {
    let mut acc = Poly::one();
    let mut rest = other.monic();
    for f in factors {
        if rest.is_unit() {
            break;
        }
        let g = Poly::gcd(f, &rest)?;
        if !g.is_unit() {
            rest = rest.exact_div(&g)?;
            acc = &acc * &g;
        }
    }
    Ok(acc)
}

/// A single term `G_k` of the sequence.
pub fn gcd_term(p0: &Poly, pd: &Poly, d: usize, k: usize) -> Result<Poly> {
    check_nonzero(p0, pd)?;
    let d = d as i64;
    let left: Vec<Poly> = (0..k as i64).map(|j| p0.shift(j)).collect();
    let right = (0..k as i64).fold(Poly::one(), |r, j| &r * &pd.shift(-d - j));
    gcd_with_product(&left, &right)
}

/// Runs the sequence to its limit `G_{N+1}`, keeping every intermediate term.
pub fn gcd_limit(p0: &Poly, pd: &Poly, d: usize) -> Result<GcdLimit> {
    let k0 = order_dispersion(p0, pd, d)?;
    let mut trace = Vec::new();
    let mut left = Vec::new();
    let mut right = Poly::one();
    for j in 0..=k0 {
        left.push(p0.shift(j));
        right = &right * &pd.shift(-(d as i64) - j);
        trace.push(gcd_with_product(&left, &right)?);
    }
    let limit = trace.last().cloned().unwrap_or_else(Poly::one);
    Ok(GcdLimit { k0, limit, trace })
}

/// Closed form of the limit:
/// `gcd([p0(n+N)]_falling^(N+1), [pd(n-d)]_falling^(N+1))`, or `1` if `N = -1`.
pub fn universal_denominator(p0: &Poly, pd: &Poly, d: usize) -> Result<Poly> {
    let n = order_dispersion(p0, pd, d)?;
    if n < 0 {
        return Ok(Poly::one());
    }
    let len = n as usize + 1;
    // [p0(n+N)]_falling^(N+1) = p0(n+N) p0(n+N-1) ... p0(n)
    let top = p0.shift(n);
    let left: Vec<Poly> = (0..len as i64).map(|j| top.shift(-j)).collect();
    let right = pd.shift(-(d as i64)).falling_product(len);
    gcd_with_product(&left, &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    fn p(c: &[i64]) -> Poly {
        Poly::from_ints(c)
    }

    fn prod(ps: &[Poly]) -> Poly {
        ps.iter().fold(Poly::one(), |acc, q| &acc * q)
    }

    fn summation_example() -> (Poly, Poly) {
        // b = 2(4n+1)(2n+3), a = 4n+5
        (prod(&[p(&[2]), p(&[1, 4]), p(&[3, 2])]), p(&[5, 4]))
    }

    fn order_three() -> (Poly, Poly) {
        // p0 = -(n-1)(2n-1)(n+1), p3 = (n+4)(2n+1)(n+2)
        (
            prod(&[p(&[-1]), p(&[-1, 1]), p(&[-1, 2]), p(&[1, 1])]),
            prod(&[p(&[4, 1]), p(&[1, 2]), p(&[2, 1])]),
        )
    }

    #[test]
    fn gcd_term_examples() {
        let (b, a) = summation_example();
        assert_eq!(
            gcd_term(&b, &a, 1, 1).unwrap(),
            Poly::from_coeffs(vec![rat(1, 4), rat(1, 1)])
        );
        let (p0, p3) = order_three();
        assert_eq!(
            gcd_term(&p0, &p3, 3, 3).unwrap(),
            prod(&[p(&[0, 1]), p(&[-1, 1]), p(&[1, 1])])
        );
        assert!(gcd_term(&p(&[0, 1]), &p(&[5, 1]), 1, 1).unwrap().is_one());
    }

    #[test]
    fn gcd_limit_examples() {
        let (b, a) = summation_example();
        let lim = gcd_limit(&b, &a, 1).unwrap();
        assert_eq!(lim.k0, 0);
        assert_eq!(lim.limit, Poly::from_coeffs(vec![rat(1, 4), rat(1, 1)]));

        let (p0, p3) = order_three();
        let lim = gcd_limit(&p0, &p3, 3).unwrap();
        assert_eq!(lim.k0, 2);
        assert_eq!(lim.limit, prod(&[p(&[0, 1]), p(&[-1, 1]), p(&[1, 1])]));
        assert_eq!(lim.trace.len(), 3);
        for w in lim.trace.windows(2) {
            assert!(w[0].divides(&w[1]));
        }

        let lim = gcd_limit(&p(&[1, 1]), &p(&[1, 1]), 2).unwrap();
        assert_eq!(lim.k0, -1);
        assert!(lim.limit.is_one() && lim.trace.is_empty());
    }

    #[test]
    fn universal_denominator_examples() {
        let a = p(&[3, 1]);
        let b = &p(&[1, 1]) * &p(&[2, 1]);
        assert_eq!(universal_denominator(&b, &a, 1).unwrap(), b);

        let (p0, p3) = order_three();
        assert_eq!(
            universal_denominator(&p0, &p3, 3).unwrap(),
            prod(&[p(&[0, 1]), p(&[-1, 1]), p(&[1, 1])])
        );
        assert!(universal_denominator(&p(&[0, 1]), &p(&[-7, 1]), 1)
            .unwrap()
            .is_one());
        assert!(universal_denominator(&Poly::zero(), &p(&[1, 1]), 1).is_err());
    }

    #[test]
    fn factorwise_gcd_matches_expanded_gcd() {
        let factors = [p(&[1, 1]), p(&[1, 1]), p(&[0, 1]), p(&[1, 0, 1])];
        let other = prod(&[p(&[1, 1]), p(&[0, 1]), p(&[0, 1]), p(&[2, 1]), p(&[3])]);
        let expected = Poly::gcd(&prod(&factors), &other).unwrap();
        assert_eq!(gcd_with_product(&factors, &other).unwrap(), expected);
        assert_eq!(expected, prod(&[p(&[1, 1]), p(&[0, 1])]));
    }

    #[test]
    fn sequence_stays_at_limit() {
        let (p0, p3) = order_three();
        let lim = gcd_limit(&p0, &p3, 3).unwrap();
        for k in 3..7 {
            assert_eq!(gcd_term(&p0, &p3, 3, k).unwrap(), lim.limit);
        }
        assert_ne!(gcd_term(&p0, &p3, 3, 1).unwrap(), lim.limit);
    }
}

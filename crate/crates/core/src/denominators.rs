//! Abramov's iterative denominator, Petkovšek's GP loop, and the Gosper and
//! GP representations they produce.
//!
//! Both loops peel off shifted common factors one shift at a time. Abramov
//! starts from `(pd(n-d), p0(n))` and walks the shift down from `N` to 0; the
//! GP loop starts from `(a(n), b(n))` and walks up from 1 to `N + 1`.

use crate::convergence::order_dispersion;
use crate::dispersion::dispersion;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbramovTrace {
    /// `N = dis(pd(n-d), p0(n))`.
    pub n: i64,
    /// `d_N, d_{N-1}, ..., d_0`, each monic.
    pub d_list: Vec<Poly>,
    pub a0: Poly,
    pub b0: Poly,
    /// `prod_i [d_i(n)]_falling^(i+1)`.
    pub denominator: Poly,
}

impl AbramovTrace {
    /// `d_i` for `0 <= i <= N`.
    pub fn d(&self, i: usize) -> Option<&Poly> {
        let len = self.d_list.len();
        (i < len).then(|| &self.d_list[len - 1 - i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GpTrace {
    /// `N = dis(a(n-1), b(n))`.
    pub n: i64,
    /// `delta_1, ..., delta_{N+1}`, each monic.
    pub delta_list: Vec<Poly>,
    /// `a_{N+1}`.
    pub a_last: Poly,
    /// `b_{N+1}`.
    pub b_last: Poly,
    /// `prod_i [delta_i(n-1)]_falling^i`.
    pub u: Poly,
}

/// `r(n) = (anum(n) / bden(n)) * (c(n+1) / c(n))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperRep {
    /// The ratio being represented.
    pub ratio: RatFunc,
    pub c: Poly,
    pub anum: Poly,
    pub bden: Poly,
}

/// Result of checking a representation. Anything but `Valid` names the
/// failing condition and a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepCheck {
    Valid,
    /// `anum * c(n+1) / (bden * c(n))` is not the ratio.
    IdentityFails,
    /// `gcd(anum(n), bden(n+h))` is nonconstant.
    ShiftedCommonFactor {
        h: i64,
        common: Poly,
    },
    /// `gcd(c(n+1), bden(n))` is nonconstant.
    DenominatorOverlap {
        common: Poly,
    },
    /// `gcd(c(n), anum(n))` is nonconstant.
    NumeratorOverlap {
        common: Poly,
    },
}

impl RepCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, RepCheck::Valid)
    }
}

fn require_coprime(a: &Poly, b: &Poly) -> Result<()> {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial("numerator"));
    }
    if b.is_zero() {
        return Err(Error::ZeroPolynomial("denominator"));
    }
    let g = Poly::gcd(a, b)?;
    if !g.is_unit() {
        return Err(Error::NotCoprime(g.to_string()));
    }
    Ok(())
}

/// Abramov's loop: `A_{N+1} = pd(n-d)`, `B_{N+1} = p0(n)`, then for
/// `i = N, ..., 0`: `d_i = gcd(A_{i+1}(n), B_{i+1}(n+i))`,
/// `A_i = A_{i+1} / d_i`, `B_i = B_{i+1} / d_i(n-i)`.
pub fn abramov_reduce(p0: &Poly, pd: &Poly, d: usize) -> Result<AbramovTrace> {
    let n = order_dispersion(p0, pd, d)?;
    let mut a = pd.shift(-(d as i64));
    let mut b = p0.clone();
    let mut d_list = Vec::new();
    for i in (0..=n).rev() {
        let di = Poly::gcd(&a, &b.shift(i))?;
        a = a.exact_div(&di)?;
        b = b.exact_div(&di.shift(-i))?;
        d_list.push(di);
    }
    let denominator = d_list
        .iter()
        .rev()
        .enumerate()
        .fold(Poly::one(), |acc, (i, di)| {
            &acc * &di.falling_product(i + 1)
        });
    Ok(AbramovTrace {
        n,
        d_list,
        a0: a,
        b0: b,
        denominator,
    })
}

/// Petkovšek's loop on a coprime pair: `a_0 = a`, `b_0 = b`, then for
/// `i = 1, ..., N+1`: `delta_i = gcd(a_{i-1}(n), b_{i-1}(n+i))`,
/// `a_i = a_{i-1} / delta_i`, `b_i = b_{i-1} / delta_i(n-i)`.
pub fn gp_reduce(a: &Poly, b: &Poly) -> Result<GpTrace> {
    require_coprime(a, b)?;
    let n = order_dispersion(b, a, 1)?;
    let mut ai = a.clone();
    let mut bi = b.clone();
    let mut delta_list = Vec::new();
    for i in 1..=n + 1 {
        let delta = Poly::gcd(&ai, &bi.shift(i))?;
        ai = ai.exact_div(&delta)?;
        bi = bi.exact_div(&delta.shift(-i))?;
        delta_list.push(delta);
    }
    let u = delta_list
        .iter()
        .enumerate()
        .fold(Poly::one(), |acc, (i, delta)| {
            &acc * &delta.shift(-1).falling_product(i + 1)
        });
    Ok(GpTrace {
        n,
        delta_list,
        a_last: ai,
        b_last: bi,
        u,
    })
}

/// Gosper representation read off Abramov's loop for the first-order
/// equation of `a/b`: `c = G`, `anum = A_0(n+1)`, `bden = B_0(n)`.
pub fn gosper_rep_from_abramov(a: &Poly, b: &Poly) -> Result<GosperRep> {
    require_coprime(a, b)?;
    let trace = abramov_reduce(b, a, 1)?;
    Ok(GosperRep {
        ratio: RatFunc::new(a.clone(), b.clone())?,
        c: trace.denominator,
        anum: trace.a0.shift(1),
        bden: trace.b0,
    })
}

/// GP representation: `c = u`, `anum = a_{N+1}`, `bden = b_{N+1}`.
pub fn gp_rep_from_trace(a: &Poly, b: &Poly) -> Result<GosperRep> {
    let trace = gp_reduce(a, b)?;
    Ok(GosperRep {
        ratio: RatFunc::new(a.clone(), b.clone())?,
        c: trace.u,
        anum: trace.a_last,
        bden: trace.b_last,
    })
}

/// Identity plus `gcd(anum(n), bden(n+h)) = 1` for all `h >= 0`, decided by
/// the dispersion of `anum` and `bden`.
pub fn check_gosper_rep(rep: &GosperRep) -> RepCheck {
    let (num, den) = (rep.ratio.num(), rep.ratio.den());
    let lhs = &(num * &rep.c) * &rep.bden;
    let rhs = &(den * &rep.c.shift(1)) * &rep.anum;
    if rep.c.is_zero() || rep.bden.is_zero() || lhs != rhs {
        return RepCheck::IdentityFails;
    }
    if rep.anum.is_zero() {
        return RepCheck::IdentityFails;
    }
    match dispersion(&rep.anum, &rep.bden) {
        Ok(d) => match d.witnesses.into_iter().next() {
            Some((h, common)) => RepCheck::ShiftedCommonFactor { h, common },
            None => RepCheck::Valid,
        },
        Err(_) => RepCheck::IdentityFails,
    }
}

/// Gosper conditions plus `gcd(c(n+1), bden(n)) = 1` and `gcd(c(n), anum(n)) = 1`.
pub fn check_gp_rep(rep: &GosperRep) -> RepCheck {
    let base = check_gosper_rep(rep);
    if !base.is_valid() {
        return base;
    }
    let common = Poly::gcd(&rep.c.shift(1), &rep.bden).expect("nonzero");
    if !common.is_unit() {
        return RepCheck::DenominatorOverlap { common };
    }
    let common = Poly::gcd(&rep.c, &rep.anum).expect("nonzero");
    if !common.is_unit() {
        return RepCheck::NumeratorOverlap { common };
    }
    RepCheck::Valid
}

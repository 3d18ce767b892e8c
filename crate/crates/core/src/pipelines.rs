//! End-to-end algorithms: indefinite hypergeometric summation and rational
//! solutions of linear recurrences with polynomial coefficients.

use crate::convergence::{gcd_limit, order_dispersion, universal_denominator};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ratfunc::RatFunc;
use crate::solver::{poly_solutions, LinearRecurrence, SolutionSet};

/// Witness that `z_n = y(n) t_n` satisfies `z_{n+1} - z_n = t_n`, where
/// `ratio = t_{n+1} / t_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GosperCertificate {
    pub ratio: RatFunc,
    /// `dis(a(n-1), b(n))` for `ratio = a/b`.
    pub k0: i64,
    /// `G_1, ..., G_{k0+1}`.
    pub trace: Vec<Poly>,
    /// The universal denominator that was used.
    pub g: Poly,
    /// Polynomial solution of the cleared equation; may share factors with `g`.
    pub f: Poly,
    /// `f / g` in lowest terms.
    pub y: RatFunc,
}

/// Gosper's algorithm driven by the converging gcd sequence.
///
/// Returns `Ok(None)` when `t_n` has no hypergeometric antidifference.
pub fn gosper(ratio: &RatFunc) -> Result<Option<GosperCertificate>> {
    if ratio.is_zero() {
        return Err(Error::ZeroPolynomial("ratio"));
    }
    let (a, b) = (ratio.num(), ratio.den());
    let limit = gcd_limit(b, a, 1)?;
    let g = limit.limit.clone();
    let g1 = g.shift(1);
    // a(n) g(n) f(n+1) - b(n) g(n+1) f(n) = b(n) g(n) g(n+1)
    let rec = LinearRecurrence::new(vec![-&(b * &g1), a * &g], &(b * &g) * &g1)?;
    let solutions = poly_solutions(&rec);
    let Some(f) = solutions.particular().cloned() else {
        return Ok(None);
    };
    let y = RatFunc::new(f.clone(), g.clone())?;
    Ok(Some(GosperCertificate {
        ratio: ratio.clone(),
        k0: limit.k0,
        trace: limit.trace,
        g,
        f,
        y,
    }))
}

/// Checks `r(n) y(n+1) - y(n) = 1` exactly.
pub fn verify_gosper(cert: &GosperCertificate) -> bool {
    verify_antidifference(&cert.ratio, &cert.y)
}

/// `r(n) y(n+1) - y(n) = 1` with denominators cleared.
pub fn verify_antidifference(ratio: &RatFunc, y: &RatFunc) -> bool {
    let (a, b) = (ratio.num(), ratio.den());
    let (p, q) = (y.num(), y.den());
    let (p1, q1) = (p.shift(1), q.shift(1));
    let lhs = &(&(a * &p1) * q) - &(&(b * &q1) * p);
    lhs == &(b * &q1) * q
}

/// All rational solutions of a recurrence, as `f / denominator` for `f` in
/// the polynomial solution family of the cleared recurrence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalSolveResult {
    /// `dis(p_d(n-d), p_0(n))`.
    pub dispersion: i64,
    pub denominator: Poly,
    pub numerators: SolutionSet,
}

impl RationalSolveResult {
    pub fn has_solution(&self) -> bool {
        !self.numerators.is_empty()
    }

    pub fn particular(&self) -> Option<RatFunc> {
        self.numerators
            .particular()
            .map(|f| self.over_denominator(f))
    }

    pub fn basis(&self) -> Vec<RatFunc> {
        self.numerators
            .basis()
            .iter()
            .map(|f| self.over_denominator(f))
            .collect()
    }

    /// Whether `y` belongs to the returned family.
    pub fn contains(&self, y: &RatFunc) -> bool {
        let (num, den) = (y.num(), y.den());
        match (&self.denominator * num).divrem(den) {
            Ok((f, r)) if r.is_zero() => self.numerators.contains(&f),
            _ => false,
        }
    }

    fn over_denominator(&self, f: &Poly) -> RatFunc {
        RatFunc::new(f.clone(), self.denominator.clone()).expect("denominator is nonzero")
    }
}

/// Universal denominator from the closed gcd formula, then polynomial
/// numerators from the recurrence multiplied through by `prod_j G(n+j)`.
pub fn rational_solve(rec: &LinearRecurrence) -> Result<RationalSolveResult> {
    let d = rec.order();
    let (p0, pd) = (&rec.coeffs()[0], &rec.coeffs()[d]);
    let dispersion = order_dispersion(p0, pd, d)?;
    let denominator = universal_denominator(p0, pd, d)?;
    let shifted: Vec<Poly> = (0..=d as i64).map(|j| denominator.shift(j)).collect();
    let coeffs = rec
        .coeffs()
        .iter()
        .enumerate()
        .map(|(m, pm)| {
            shifted
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != m)
                .fold(pm.clone(), |acc, (_, g)| &acc * g)
        })
        .collect();
    let rhs = shifted.iter().fold(rec.rhs().clone(), |acc, g| &acc * g);
    let cleared = LinearRecurrence::new(coeffs, rhs)?;
    Ok(RationalSolveResult {
        dispersion,
        denominator,
        numerators: poly_solutions(&cleared),
    })
}

/// Checks `sum p_m(n) y(n+m) = p(n)` exactly.
pub fn verify_rational(rec: &LinearRecurrence, y: &RatFunc) -> bool {
    let d = rec.order();
    let nums: Vec<Poly> = (0..=d as i64).map(|m| y.num().shift(m)).collect();
    let dens: Vec<Poly> = (0..=d as i64).map(|m| y.den().shift(m)).collect();
    let lhs = rec
        .coeffs()
        .iter()
        .enumerate()
        .fold(Poly::zero(), |acc, (m, pm)| {
            let term = dens
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != m)
                .fold(pm * &nums[m], |t, (_, q)| &t * q);
            &acc + &term
        });
    let rhs = dens.iter().fold(rec.rhs().clone(), |acc, q| &acc * q);
    lhs == rhs
}

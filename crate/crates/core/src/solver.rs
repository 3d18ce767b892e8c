//! Polynomial solutions of `sum_{m=0}^{d} q_m(n) f(n+m) = q(n)`.
//!
//! The degree of a solution is bounded by rewriting the operator in the
//! forward-difference basis (`E^m = (1 + Delta)^m`); the coefficients of `f`
//! up to that bound are then found by exact linear algebra.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::dispersion::integer_roots;
use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::{Poly, Rational};

/// `sum_{m=0}^{d} coeffs[m](n) y(n+m) = rhs(n)` with `d >= 1` and both end
/// coefficients nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearRecurrence {
    coeffs: Vec<Poly>,
    rhs: Poly,
}

impl LinearRecurrence {
    pub fn new(coeffs: Vec<Poly>, rhs: Poly) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidRecurrence(
                "need at least two coefficients (order >= 1)".into(),
            ));
        }
        if coeffs[0].is_zero() {
            return Err(Error::InvalidRecurrence(
                "leading shift coefficient p_0 is zero".into(),
            ));
        }
        if coeffs.last().is_some_and(Poly::is_zero) {
            return Err(Error::InvalidRecurrence(
                "trailing shift coefficient p_d is zero".into(),
            ));
        }
        Ok(LinearRecurrence { coeffs, rhs })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn rhs(&self) -> &Poly {
        &self.rhs
    }

    /// `sum q_m(n) f(n+m)`.
    pub fn apply(&self, f: &Poly) -> Poly {
        self.coeffs
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (m, q)| &acc + &(q * &f.shift(m as i64)))
    }

    /// Whether `f` solves the recurrence exactly.
    pub fn is_solution(&self, f: &Poly) -> bool {
        self.apply(f) == self.rhs
    }

    pub fn delta_coeffs(&self) -> Vec<Poly> {
        delta_coeffs(&self.coeffs)
    }
}

/// Coefficients in the difference basis: `q*_j = sum_{m >= j} C(m, j) q_m`.
pub fn delta_coeffs(coeffs: &[Poly]) -> Vec<Poly> {
    (0..coeffs.len())
        .map(|j| {
            let mut binom = Rational::one();
            let mut acc = Poly::zero();
            for (m, q) in coeffs.iter().enumerate().skip(j) {
                if m > j {
                    // C(m, j) = C(m-1, j) * m / (m - j)
                    binom = binom * Rational::from_integer(BigInt::from(m))
                        / Rational::from_integer(BigInt::from(m - j));
                }
                acc = &acc + &q.scale(&binom);
            }
            acc
        })
        .collect()
}

/// Upper bound on the degree of any polynomial solution, or `-1` when only
/// the zero polynomial could qualify.
///
/// With `b = max_j (deg q*_j - j)`, a solution of degree `k` either cancels
/// the `n^(b+k)` term, which makes `k` a root of
/// `phi(z) = sum_{j attaining b} lc(q*_j) z (z-1) ... (z-j+1)`, or has
/// `deg rhs = b + k`.
pub fn degree_bound(rec: &LinearRecurrence) -> i64 {
    let star = rec.delta_coeffs();
    let b = star
        .iter()
        .enumerate()
        .filter(|(_, q)| !q.is_zero())
        .map(|(j, q)| q.degree_i64() - j as i64)
        .max()
        .expect("q*_d = q_d is nonzero");
    let z = Poly::var();
    let phi = star
        .iter()
        .enumerate()
        .filter(|(j, q)| !q.is_zero() && q.degree_i64() - *j as i64 == b)
        .fold(Poly::zero(), |acc, (j, q)| {
            let falling = z.falling_product(j);
            &acc + &falling.scale(q.leading_coeff().expect("nonzero"))
        });
    let root_bound = integer_roots(&phi)
        .expect("phi has a nonzero leading term")
        .into_iter()
        .filter(|r| !r.is_negative())
        .max()
        .and_then(|r| r.to_i64())
        .unwrap_or(-1);
    let rhs_bound = if rec.rhs.is_zero() {
        -1
    } else {
        (rec.rhs.degree_i64() - b).max(-1)
    };
    root_bound.max(rhs_bound)
}

/// Every polynomial solution: `particular + span(basis)`, or none at all.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    particular: Option<Poly>,
    basis: Vec<Poly>,
    degree_bound: i64,
}

impl SolutionSet {
    pub fn particular(&self) -> Option<&Poly> {
        self.particular.as_ref()
    }

    /// Homogeneous solutions, monic with distinct degrees; each basis
    /// element's leading coefficient is the only nonzero entry in that degree
    /// across the basis and the particular solution.
    pub fn basis(&self) -> &[Poly] {
        &self.basis
    }

    pub fn degree_bound(&self) -> i64 {
        self.degree_bound
    }

    pub fn is_empty(&self) -> bool {
        self.particular.is_none()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Whether `f` lies in the affine solution family.
    pub fn contains(&self, f: &Poly) -> bool {
        let Some(particular) = &self.particular else {
            return false;
        };
        let mut rest = f - particular;
        for b in &self.basis {
            let lead = b.degree().expect("basis elements are nonzero");
            let c = rest.coeff(lead);
            if !c.is_zero() {
                rest = &rest - &b.scale(&c);
            }
        }
        rest.is_zero()
    }
}

impl fmt::Display for SolutionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(particular) = &self.particular else {
            return f.write_str("no polynomial solution");
        };
        let mut wrote = false;
        if !particular.is_zero() || self.basis.is_empty() {
            write!(f, "{particular}")?;
            wrote = true;
        }
        for (i, b) in self.basis.iter().enumerate() {
            if wrote {
                f.write_str(" + ")?;
            }
            write!(f, "c{}*({b})", i + 1)?;
            wrote = true;
        }
        Ok(())
    }
}

/// Undetermined coefficients up to [`degree_bound`].
pub fn poly_solutions(rec: &LinearRecurrence) -> SolutionSet {
    let bound = degree_bound(rec);
    if bound < 0 {
        return SolutionSet {
            particular: rec.rhs.is_zero().then(Poly::zero),
            basis: Vec::new(),
            degree_bound: bound,
        };
    }
    let ncols = bound as usize + 1;
    let columns: Vec<Poly> = (0..ncols)
        .map(|i| rec.apply(&Poly::var().pow(i as u32)))
        .collect();
    let nrows = columns
        .iter()
        .chain(std::iter::once(&rec.rhs))
        .map(|p| p.coeffs().len())
        .max()
        .unwrap_or(0);
    let matrix = (0..nrows)
        .map(|t| columns.iter().map(|c| c.coeff(t)).collect())
        .collect();
    let rhs = (0..nrows).map(|t| rec.rhs.coeff(t)).collect();
    let sol = linalg::solve(matrix, rhs, ncols);

    let basis = canonical_basis(sol.nullspace, ncols);
    let particular = sol.particular.map(|x| {
        let mut p = Poly::from_coeffs(x);
        for b in &basis {
            let c = p.coeff(b.degree().expect("nonzero"));
            if !c.is_zero() {
                p = &p - &b.scale(&c);
            }
        }
        p
    });
    SolutionSet {
        particular,
        basis,
        degree_bound: bound,
    }
}

/// Reduced echelon form keyed on the highest degree, sorted by degree.
fn canonical_basis(vectors: Vec<Vec<Rational>>, ncols: usize) -> Vec<Poly> {
    let mut rows: Vec<Vec<Rational>> = vectors
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .collect();
    linalg::rref(&mut rows, ncols);
    let mut basis: Vec<Poly> = rows
        .into_iter()
        .map(|mut v| {
            v.reverse();
            Poly::from_coeffs(v)
        })
        .collect();
    basis.sort_by_key(|b| b.degree());
    basis
}

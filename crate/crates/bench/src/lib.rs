//! Fixed inputs for the criterion benches.

use unidenom::{parse_poly, parse_ratfunc, LinearRecurrence, Poly, RatFunc};

fn poly(text: &str) -> Poly {
    parse_poly(text).expect("fixture parses")
}

/// `(p0, pd, d)` with a common factor met at several shifts.
pub fn planted_pair() -> (Poly, Poly, usize) {
    (
        poly("(n+7)*(n-2)*(n^2+1)*(2*n+3)"),
        poly("(n+1)*(n^2-4*n+5)*(n-6)*(2*n-9)"),
        2,
    )
}

/// `(a, b)` with dispersion 12.
pub fn dispersion_pair() -> (Poly, Poly) {
    (
        poly("n*(n+3)*(n^2+n+1)*(n-5)"),
        poly("(n-12)*(n-4)*(n^2-5*n+7)*(n+9)"),
    )
}

pub fn gosper_ratio() -> RatFunc {
    parse_ratfunc("(4*n+5)/(2*(4*n+1)*(2*n+3))").expect("fixture parses")
}

/// A term ratio whose antidifference has a degree-4 denominator.
pub fn larger_gosper_ratio() -> RatFunc {
    // t_n = (n^2+1)/((n+1)(n+3)(2n+5)) differenced against its shift
    let z = parse_ratfunc("(n^2+1)/((n+1)*(n+3)*(2*n+5))").expect("fixture parses");
    let one = RatFunc::one();
    z.mul(&z.shift(1).sub(&one))
        .div(&z.sub(&one))
        .expect("nonzero")
}

pub fn order_three() -> LinearRecurrence {
    LinearRecurrence::new(
        vec![
            poly("-(n-1)*(2*n-1)*(n+1)"),
            poly("n*(n+2)*(2*n-3)"),
            poly("-(2*n+3)*(n+3)*(n+1)"),
            poly("(n+4)*(2*n+1)*(n+2)"),
        ],
        Poly::zero(),
    )
    .expect("valid recurrence")
}

#![allow(dead_code)]

//! Random instance generators and brute-force oracles shared by the
//! integration suites. The oracles only use gcds, determinants and direct
//! substitution, never the dispersion or denominator code they check.

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use unidenom::{rat, Poly, RatFunc, Rational};

pub fn rng(seed: u64) -> ChaCha8Rng {
    use rand::SeedableRng;
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn prod(ps: &[Poly]) -> Poly {
    ps.iter().fold(Poly::one(), |acc, q| &acc * q)
}

pub fn nonzero_scale(rng: &mut ChaCha8Rng) -> Rational {
    let num = loop {
        let v = rng.gen_range(-5i64..=5);
        if v != 0 {
            break v;
        }
    };
    rat(num, rng.gen_range(1..=3))
}

/// A base factor shape: `n`, `2n + 1`, `n^2 + 1`, `3n - 1` or `n^2 + n + 1`.
pub fn base_factor(rng: &mut ChaCha8Rng) -> Poly {
    match rng.gen_range(0..5) {
        0 => Poly::from_ints(&[0, 1]),
        1 => Poly::from_ints(&[1, 2]),
        2 => Poly::from_ints(&[1, 0, 1]),
        3 => Poly::from_ints(&[-1, 3]),
        _ => Poly::from_ints(&[1, 1, 1]),
    }
}

/// Product of shifted copies of base factors, total degree at most `max_deg`.
pub fn shifted_product(rng: &mut ChaCha8Rng, max_deg: usize, max_shift: i64) -> Poly {
    let mut out = Poly::constant(nonzero_scale(rng));
    let target = rng.gen_range(0..=max_deg);
    while out.degree().unwrap() < target {
        let f = base_factor(rng).shift(rng.gen_range(-max_shift..=max_shift));
        if out.degree().unwrap() + f.degree().unwrap() > max_deg {
            if f.degree() == Some(1) {
                break;
            }
            continue;
        }
        out = &out * &f;
    }
    out
}

/// `(p0, pd, d)` where the two polynomials share shifted copies of the same
/// factors. Shifts at most 8, degrees at most 5.
pub fn planted_pair(rng: &mut ChaCha8Rng) -> (Poly, Poly, usize) {
    let d = rng.gen_range(1..=3usize);
    let shared = base_factor(rng);
    let mut p0 = shared.shift(rng.gen_range(-8..=8));
    let mut pd = shared.shift(rng.gen_range(-8..=8));
    let room0 = 5 - p0.degree().unwrap();
    let roomd = 5 - pd.degree().unwrap();
    p0 = &p0 * &shifted_product(rng, room0, 8);
    pd = &pd * &shifted_product(rng, roomd, 8);
    (p0, pd, d)
}

/// A coprime pair `(a, b)` of degrees at most 4.
pub fn coprime_pair(rng: &mut ChaCha8Rng) -> (Poly, Poly) {
    loop {
        let a = shifted_product(rng, 4, 6);
        let b = shifted_product(rng, 4, 6);
        if Poly::gcd(&a, &b).unwrap().is_unit() {
            return (a, b);
        }
    }
}

/// Product of linear factors with integer roots in `[-6, 6]`, occasionally
/// times an irreducible quadratic; degree 1..=4.
pub fn integer_rooted(rng: &mut ChaCha8Rng) -> Poly {
    let deg = rng.gen_range(1..=4);
    let mut out = Poly::constant(nonzero_scale(rng));
    let mut left = deg;
    if deg >= 2 && rng.gen_bool(0.2) {
        out = &out * &Poly::from_ints(&[rng.gen_range(1..=4), 0, 1]).shift(rng.gen_range(-6..=6));
        left -= 2;
    }
    for _ in 0..left {
        out = &out * &Poly::linear_root(rat(rng.gen_range(-6..=6), 1));
    }
    out
}

/// Dispersion by scanning every shift in `0..=max_shift`.
pub fn brute_force_dispersion(a: &Poly, b: &Poly, max_shift: i64) -> (i64, Vec<i64>) {
    let hits: Vec<i64> = (0..=max_shift)
        .filter(|&k| Poly::gcd(a, &b.shift(k)).unwrap().degree() >= Some(1))
        .collect();
    (hits.last().copied().unwrap_or(-1), hits)
}

/// Determinant of the Sylvester matrix, by fraction-exact Gaussian elimination.
pub fn sylvester_resultant(a: &Poly, b: &Poly) -> Rational {
    use num_traits::Zero;
    let m = a.degree().unwrap();
    let n = b.degree().unwrap();
    let size = m + n;
    if size == 0 {
        return Rational::from_integer(1.into());
    }
    let mut rows = vec![vec![Rational::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs().iter().rev().enumerate() {
            rows[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs().iter().rev().enumerate() {
            rows[n + i][i + j] = c.clone();
        }
    }
    determinant(rows)
}

pub fn determinant(mut rows: Vec<Vec<Rational>>) -> Rational {
    use num_traits::{One, Zero};
    let size = rows.len();
    let mut det = Rational::one();
    for col in 0..size {
        let Some(p) = (col..size).find(|&r| !rows[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            rows.swap(p, col);
            det = -det;
        }
        let pivot = rows[col][col].clone();
        det *= &pivot;
        for r in col + 1..size {
            let factor = &rows[r][col] / &pivot;
            if factor.is_zero() {
                continue;
            }
            let (top, bottom) = rows.split_at_mut(r);
            for (dst, src) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *dst -= &factor * src;
            }
        }
    }
    det
}

/// Random rational function with small factors, never zero.
pub fn random_ratfunc(rng: &mut ChaCha8Rng) -> RatFunc {
    let num = shifted_product(rng, 2, 4);
    let den = shifted_product(rng, 2, 4);
    RatFunc::new(num, den).unwrap()
}

/// Random polynomial with small rational coefficients, degree up to `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> Poly {
    let len = rng.gen_range(0..=max_deg + 1);
    Poly::from_coeffs(
        (0..len)
            .map(|_| rat(rng.gen_range(-12..=12), rng.gen_range(1..=5)))
            .collect(),
    )
}

/// Planted rational solution: `(rec, f, g)` with `y = f/g` reduced,
/// `deg f, deg g <= 4` and `dis(g, g) <= 6`.
pub fn planted_rational(rng: &mut ChaCha8Rng) -> (unidenom::LinearRecurrence, Poly, Poly) {
    loop {
        let d = rng.gen_range(1..=2usize);
        let gdeg = rng.gen_range(1..=4);
        let offset = rng.gen_range(-3..=3);
        let g = prod(
            &(0..gdeg)
                .map(|_| Poly::linear_root(rat(offset + rng.gen_range(0..=6), 1)))
                .collect::<Vec<_>>(),
        );
        let f = random_poly(rng, 4);
        if f.is_zero() || !Poly::gcd(&f, &g).unwrap().is_unit() {
            continue;
        }
        let ps: Vec<Poly> = (0..=d)
            .map(|_| {
                let q = random_poly(rng, 2);
                if q.is_zero() {
                    Poly::one()
                } else {
                    q
                }
            })
            .collect();
        let coeffs = ps
            .iter()
            .enumerate()
            .map(|(m, q)| q * &g.shift(m as i64))
            .collect();
        let rhs = ps
            .iter()
            .enumerate()
            .fold(Poly::zero(), |acc, (m, q)| &acc + &(q * &f.shift(m as i64)));
        let rec = unidenom::LinearRecurrence::new(coeffs, rhs).unwrap();
        return (rec, f, g);
    }
}

//! Randomized invariants checked against independent oracles.

mod common;

use common::*;
use rand::Rng;
use unidenom::*;

#[test]
fn shifted_resultant_matches_sylvester_determinant() {
    let mut rng = rng(21);
    for _ in 0..40 {
        let a = shifted_product(&mut rng, 3, 5);
        let b = shifted_product(&mut rng, 3, 5);
        if a.degree() == Some(0) || b.degree() == Some(0) {
            continue;
        }
        let r = shifted_resultant(&a, &b).unwrap();
        for _ in 0..5 {
            let h = rng.gen_range(-20i64..=20);
            let expected = sylvester_resultant(&a, &b.shift(h));
            assert_eq!(r.eval(&rat(h, 1)), expected, "a = {a}, b = {b}, h = {h}");
        }
    }
}

#[test]
fn resultant_is_zero_exactly_on_common_factors() {
    let mut rng = rng(22);
    for _ in 0..100 {
        let a = integer_rooted(&mut rng);
        let b = integer_rooted(&mut rng);
        let shared = !Poly::gcd(&a, &b).unwrap().is_unit();
        assert_eq!(
            resultant(&a, &b).unwrap() == rat(0, 1),
            shared,
            "a = {a}, b = {b}"
        );
    }
}

#[test]
fn dispersion_witnesses_are_common_factors() {
    let mut rng = rng(23);
    for _ in 0..100 {
        let (p0, pd, _) = planted_pair(&mut rng);
        let res = dispersion(&p0, &pd).unwrap();
        for (k, g) in &res.witnesses {
            assert!(g.is_monic() && g.degree() >= Some(1));
            assert!(
                g.divides(&p0) && g.divides(&pd.shift(*k)),
                "p0 = {p0}, pd = {pd}, k = {k}"
            );
        }
        let (value, hits) = brute_force_dispersion(&p0, &pd, 40);
        assert_eq!(res.value, value);
        assert_eq!(res.witnesses.iter().map(|w| w.0).collect::<Vec<_>>(), hits);
    }
}

#[test]
fn trace_is_a_divisibility_chain_ending_at_the_limit() {
    let mut rng = rng(24);
    for _ in 0..60 {
        let (p0, pd, d) = planted_pair(&mut rng);
        let lim = gcd_limit(&p0, &pd, d).unwrap();
        assert_eq!(lim.trace.len() as i64, lim.k0 + 1);
        for w in lim.trace.windows(2) {
            assert!(
                w[0].divides(&w[1]),
                "G_k = {} does not divide G_(k+1) = {}",
                w[0],
                w[1]
            );
        }
        assert_eq!(lim.limit, universal_denominator(&p0, &pd, d).unwrap());
        for (k, g) in lim.trace.iter().enumerate() {
            assert_eq!(*g, gcd_term(&p0, &pd, d, k + 1).unwrap());
        }
    }
}

#[test]
fn returned_polynomials_are_monic() {
    let mut rng = rng(25);
    for _ in 0..60 {
        let (p0, pd, d) = planted_pair(&mut rng);
        let t = abramov_reduce(&p0, &pd, d).unwrap();
        assert!(t.d_list.iter().all(Poly::is_monic));
        assert!(t.denominator.is_monic());
        assert!(universal_denominator(&p0, &pd, d).unwrap().is_monic());
        assert!(gcd_limit(&p0, &pd, d)
            .unwrap()
            .trace
            .iter()
            .all(Poly::is_monic));
    }
    for _ in 0..60 {
        let (a, b) = coprime_pair(&mut rng);
        let t = gp_reduce(&a, &b).unwrap();
        assert!(t.delta_list.iter().all(Poly::is_monic));
        assert!(t.u.is_monic());
    }
}

#[test]
fn representations_reproduce_the_ratio() {
    let mut rng = rng(26);
    for _ in 0..100 {
        let (a, b) = coprime_pair(&mut rng);
        let ratio = RatFunc::new(a.clone(), b.clone()).unwrap();
        for rep in [
            gosper_rep_from_abramov(&a, &b).unwrap(),
            gp_rep_from_trace(&a, &b).unwrap(),
        ] {
            let rebuilt = RatFunc::new(&rep.anum * &rep.c.shift(1), &rep.bden * &rep.c).unwrap();
            assert_eq!(rebuilt, ratio, "a = {a}, b = {b}");
            assert_eq!(rep.ratio, ratio);
            assert!(check_gosper_rep(&rep).is_valid());
        }
        assert!(check_gp_rep(&gp_rep_from_trace(&a, &b).unwrap()).is_valid());
    }
}

#[test]
fn gosper_denominator_divides_the_limit() {
    let mut rng = rng(27);
    let mut done = 0;
    while done < 60 {
        let rz = random_ratfunc(&mut rng);
        let rz1 = rz.sub(&RatFunc::one());
        if rz1.is_zero() {
            continue;
        }
        let r = rz.mul(&rz.shift(1).sub(&RatFunc::one())).div(&rz1).unwrap();
        let cert = gosper(&r).unwrap().expect("planted antidifference");
        assert!(
            cert.y.den().divides(&cert.g),
            "y = {}, g = {}",
            cert.y,
            cert.g
        );
        assert_eq!(cert.g, universal_denominator(r.den(), r.num(), 1).unwrap());
        assert!(verify_antidifference(&r, &cert.y));
        done += 1;
    }
}

#[test]
fn planted_polynomial_solutions_are_recovered() {
    let mut rng = rng(28);
    for i in 0..300 {
        let d = rng.gen_range(1..=3usize);
        let coeffs: Vec<Poly> = (0..=d)
            .map(|_| loop {
                let q = random_poly(&mut rng, 2);
                if !q.is_zero() {
                    break q;
                }
            })
            .collect();
        let f = random_poly(&mut rng, 5);
        let homogeneous = LinearRecurrence::new(coeffs.clone(), Poly::zero()).unwrap();
        let rec = LinearRecurrence::new(coeffs, homogeneous.apply(&f)).unwrap();
        let sols = poly_solutions(&rec);
        assert!(sols.contains(&f), "instance {i}: f = {f} missing");
        assert!(
            f.degree_i64() <= sols.degree_bound(),
            "instance {i}: bound too small"
        );
        assert_eq!(sols.degree_bound(), degree_bound(&rec));
        if let Some(p) = sols.particular() {
            assert!(rec.is_solution(p));
        }
        for v in sols.basis() {
            assert!(homogeneous.is_solution(v));
        }
    }
}

#[test]
fn results_are_deterministic() {
    let mut rng = rng(29);
    for _ in 0..20 {
        let (rec, _, _) = planted_rational(&mut rng);
        assert_eq!(rational_solve(&rec).unwrap(), rational_solve(&rec).unwrap());
        let (p0, pd, d) = planted_pair(&mut rng);
        assert_eq!(
            abramov_reduce(&p0, &pd, d).unwrap(),
            abramov_reduce(&p0, &pd, d).unwrap()
        );
        assert_eq!(
            gcd_limit(&p0, &pd, d).unwrap(),
            gcd_limit(&p0, &pd, d).unwrap()
        );
    }
}

//! One function per subcommand. Each returns the JSON result together with
//! its plain-text rendering.

use std::fmt::Write as _;

use serde_json::{json, Value};
use unidenom::{
    abramov_reduce, check_gosper_rep, check_gp_rep, gcd_limit, gp_reduce, parse_poly,
    parse_ratfunc, rational_solve, verify_antidifference, verify_rational as check_rational, Error,
    GosperRep, LinearRecurrence, Poly, RatFunc, RepCheck,
};

use crate::encode;
use crate::Method;

pub enum Status {
    Ok,
    NoSolution,
}

pub struct Report {
    pub status: Status,
    pub result: Value,
    pub text: String,
}

impl Report {
    fn ok(result: Value, text: String) -> Self {
        Report {
            status: Status::Ok,
            result,
            text,
        }
    }
}

/// An input error; exit status 2.
pub struct Failure {
    pub message: String,
    /// The offending expression and the byte offset of a syntax error.
    pub location: Option<(String, usize)>,
}

impl Failure {
    pub fn plain(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            location: None,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::plain(e.to_string())
    }
}

fn in_expr(text: &str, e: Error) -> Failure {
    let location = match &e {
        Error::Syntax { offset, .. } if text.is_char_boundary(*offset) => {
            Some((text.to_string(), *offset))
        }
        _ => None,
    };
    Failure {
        message: format!("in {text:?}: {e}"),
        location,
    }
}

fn poly_arg(text: &str) -> Result<Poly, Failure> {
    parse_poly(text).map_err(|e| in_expr(text, e))
}

fn ratfunc_arg(text: &str) -> Result<RatFunc, Failure> {
    parse_ratfunc(text).map_err(|e| in_expr(text, e))
}

fn expect_count<'a>(exprs: &'a [String], names: &[&str]) -> Result<&'a [String], Failure> {
    if exprs.len() != names.len() {
        return Err(Failure::plain(format!(
            "expected {} expression{} ({}), found {}",
            names.len(),
            if names.len() == 1 { "" } else { "s" },
            names.join(" "),
            exprs.len()
        )));
    }
    Ok(exprs)
}

fn recurrence(coeffs: &[String], rhs: &str) -> Result<LinearRecurrence, Failure> {
    let coeffs = coeffs
        .iter()
        .map(|c| poly_arg(c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearRecurrence::new(coeffs, poly_arg(rhs)?)?)
}

fn numbered(text: &mut String, label: &str, first: i64, step: i64, ps: &[Poly]) {
    for (j, p) in ps.iter().enumerate() {
        let _ = writeln!(text, "  {label}_{} = {p}", first + step * j as i64);
    }
}

pub fn dispersion(exprs: &[String], verbose: bool) -> Result<Report, Failure> {
    let exprs = expect_count(exprs, &["A", "B"])?;
    let (a, b) = (poly_arg(&exprs[0])?, poly_arg(&exprs[1])?);
    let res = unidenom::dispersion(&a, &b)?;
    let mut text = format!("{}\n", res.value);
    if verbose {
        for (k, g) in &res.witnesses {
            let _ = writeln!(text, "  k = {k}: gcd = {g}");
        }
    }
    let witnesses: Vec<Value> = res
        .witnesses
        .iter()
        .map(|(k, g)| json!({"shift": k, "gcd": encode::poly(g)}))
        .collect();
    Ok(Report::ok(
        json!({"value": res.value, "witnesses": witnesses}),
        text,
    ))
}

pub fn denominator(
    order: usize,
    method: Method,
    exprs: &[String],
    verbose: bool,
) -> Result<Report, Failure> {
    if order == 0 {
        return Err(Failure::plain("--order must be at least 1"));
    }
    let exprs = expect_count(exprs, &["P0", "PD"])?;
    let (p0, pd) = (poly_arg(&exprs[0])?, poly_arg(&exprs[1])?);
    let mut text = String::new();
    let (n, denom, trace) = match method {
        Method::Explicit => {
            let lim = gcd_limit(&p0, &pd, order)?;
            if verbose {
                numbered(&mut text, "G", 1, 1, &lim.trace);
            }
            let trace = json!({"gcd_sequence": encode::polys(&lim.trace)});
            (lim.k0, lim.limit, trace)
        }
        Method::Abramov => {
            let t = abramov_reduce(&p0, &pd, order)?;
            if verbose {
                numbered(&mut text, "d", t.n, -1, &t.d_list);
                let _ = writeln!(text, "  A_0 = {}\n  B_0 = {}", t.a0, t.b0);
            }
            let trace = json!({
                "d_list": encode::polys(&t.d_list),
                "a0": encode::poly(&t.a0),
                "b0": encode::poly(&t.b0),
            });
            (t.n, t.denominator, trace)
        }
        Method::Gp => {
            if order != 1 {
                return Err(Failure::plain("--method gp needs --order 1"));
            }
            // p0 y(n) + p1 y(n+1) = 0 has ratio a/b with a = p1, b = -p0
            let ratio = RatFunc::new(pd.clone(), -&p0)?;
            let t = gp_reduce(ratio.num(), ratio.den())?;
            if verbose {
                numbered(&mut text, "delta", 1, 1, &t.delta_list);
                let _ = writeln!(text, "  a_N+1 = {}\n  b_N+1 = {}", t.a_last, t.b_last);
            }
            let trace = json!({
                "delta_list": encode::polys(&t.delta_list),
                "a_last": encode::poly(&t.a_last),
                "b_last": encode::poly(&t.b_last),
            });
            (t.n, t.u, trace)
        }
    };
    text.insert_str(0, &format!("N = {n}\ndenominator = {denom}\n"));
    let mut result = json!({"dispersion": n, "denominator": encode::poly(&denom)});
    if verbose {
        result["trace"] = trace;
    }
    Ok(Report::ok(result, text))
}

pub fn gosper(exprs: &[String], verbose: bool) -> Result<Report, Failure> {
    let exprs = expect_count(exprs, &["R"])?;
    let r = ratfunc_arg(&exprs[0])?;
    let Some(cert) = unidenom::gosper(&r)? else {
        return Ok(Report {
            status: Status::NoSolution,
            result: json!({"ratio": encode::ratfunc(&r), "summable": false}),
            text: "no hypergeometric antidifference\n".into(),
        });
    };
    let mut text = format!(
        "k0 = {}\ng = {}\nf = {}\ny = {}\n",
        cert.k0, cert.g, cert.f, cert.y
    );
    let mut result = json!({
        "ratio": encode::ratfunc(&r),
        "summable": true,
        "k0": cert.k0,
        "g": encode::poly(&cert.g),
        "f": encode::poly(&cert.f),
        "y": encode::ratfunc(&cert.y),
    });
    if verbose {
        numbered(&mut text, "G", 1, 1, &cert.trace);
        result["trace"] = json!({"gcd_sequence": encode::polys(&cert.trace)});
    }
    Ok(Report::ok(result, text))
}

fn describe_check(c: &RepCheck) -> Value {
    match c {
        RepCheck::Valid => json!({"valid": true}),
        RepCheck::IdentityFails => json!({"valid": false, "reason": "identity"}),
        RepCheck::ShiftedCommonFactor { h, common } => {
            json!({"valid": false, "reason": "shifted_common_factor", "h": h, "common": encode::poly(common)})
        }
        RepCheck::DenominatorOverlap { common } => {
            json!({"valid": false, "reason": "denominator_overlap", "common": encode::poly(common)})
        }
        RepCheck::NumeratorOverlap { common } => {
            json!({"valid": false, "reason": "numerator_overlap", "common": encode::poly(common)})
        }
    }
}

pub fn gp_rep(exprs: &[String], verbose: bool) -> Result<Report, Failure> {
    let exprs = expect_count(exprs, &["R"])?;
    let r = ratfunc_arg(&exprs[0])?;
    if r.is_zero() {
        return Err(Failure::plain("the ratio must be nonzero"));
    }
    let t = gp_reduce(r.num(), r.den())?;
    let rep = GosperRep {
        ratio: r.clone(),
        c: t.u.clone(),
        anum: t.a_last.clone(),
        bden: t.b_last.clone(),
    };
    let gosper_ok = check_gosper_rep(&rep);
    let gp_ok = check_gp_rep(&rep);
    let mut text = format!("c = {}\nanum = {}\nbden = {}\n", rep.c, rep.anum, rep.bden);
    let mut result = json!({
        "ratio": encode::ratfunc(&r),
        "dispersion": t.n,
        "c": encode::poly(&rep.c),
        "anum": encode::poly(&rep.anum),
        "bden": encode::poly(&rep.bden),
        "gosper_check": describe_check(&gosper_ok),
        "gp_check": describe_check(&gp_ok),
    });
    if verbose {
        numbered(&mut text, "delta", 1, 1, &t.delta_list);
        let _ = writeln!(
            text,
            "  gosper conditions: {}\n  gp conditions: {}",
            gosper_ok.is_valid(),
            gp_ok.is_valid()
        );
        result["trace"] = json!({"delta_list": encode::polys(&t.delta_list)});
    }
    Ok(Report::ok(result, text))
}

pub fn ratsolve(coeffs: &[String], rhs: &str, verbose: bool) -> Result<Report, Failure> {
    let rec = recurrence(coeffs, rhs)?;
    let res = rational_solve(&rec)?;
    let particular = res.particular();
    let basis = res.basis();
    let mut result = json!({
        "dispersion": res.dispersion,
        "denominator": encode::poly(&res.denominator),
        "particular": particular.as_ref().map_or(Value::Null, encode::ratfunc),
        "basis": basis.iter().map(encode::ratfunc).collect::<Vec<_>>(),
        "numerators": encode::solution_set(&res.numerators),
    });
    let mut text = format!(
        "N = {}\ndenominator = {}\n",
        res.dispersion, res.denominator
    );
    if verbose {
        let lim = gcd_limit(&rec.coeffs()[0], &rec.coeffs()[rec.order()], rec.order())?;
        numbered(&mut text, "G", 1, 1, &lim.trace);
        let _ = writeln!(text, "  numerators: {}", res.numerators);
        result["trace"] = json!({"gcd_sequence": encode::polys(&lim.trace)});
    }
    let Some(particular) = particular else {
        text.push_str("no rational solution\n");
        return Ok(Report {
            status: Status::NoSolution,
            result,
            text,
        });
    };
    let mut terms: Vec<String> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| format!("c{}*{b}", i + 1))
        .collect();
    if !particular.is_zero() || terms.is_empty() {
        terms.insert(0, particular.to_string());
    }
    let _ = writeln!(text, "y = {}", terms.join(" + "));
    Ok(Report::ok(result, text))
}

fn verdict(valid: bool) -> Report {
    Report {
        status: if valid {
            Status::Ok
        } else {
            Status::NoSolution
        },
        result: json!({"valid": valid}),
        text: if valid { "valid\n" } else { "invalid\n" }.into(),
    }
}

pub fn verify_gosper(exprs: &[String]) -> Result<Report, Failure> {
    let exprs = expect_count(exprs, &["R", "Y"])?;
    let r = ratfunc_arg(&exprs[0])?;
    let y = ratfunc_arg(&exprs[1])?;
    Ok(verdict(verify_antidifference(&r, &y)))
}

pub fn verify_rational(coeffs: &[String], rhs: &str, y: &[String]) -> Result<Report, Failure> {
    let rec = recurrence(coeffs, rhs)?;
    let y = expect_count(y, &["Y"])?;
    Ok(verdict(check_rational(&rec, &ratfunc_arg(&y[0])?)))
}

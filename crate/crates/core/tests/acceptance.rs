//! Acceptance criteria, run as a plain binary so every criterion prints its
//! own PASS/FAIL line. Exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use stringy_core::combinat::{binomial, eulerian_closed, eulerian_recurrence};
use stringy_core::exactnum::{int, rat, Rational};
use stringy_core::global::{
    estr_ci, euler_smooth_ci, goryunov_estr, segre_knorrer_estr, segre_knorrer_spec, solids_table,
    CompleteIntersectionSpec,
};
use stringy_core::localsing::{
    e_punctured, fermat_e, fermat_euler, fermat_hodge, link_hodge, link_hodge_from_series,
    milnor_number, poincare_series, poincare_series_a, FermatSpec, SingularityType,
};
use stringy_core::stringy::{
    assemble_estr, closed_estr, conjrem_estr, estr_euler, family_grid, ind_str, EulerMethod,
    StringyResult,
};
use stringy_core::UVPolynomial;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn s(r: u32, n: u32, ell: u32) -> SingularityType {
    SingularityType::new(r, n, ell).expect("valid triple")
}

/// `sum c_k (uv)^k`
fn t_poly(coeffs: &[(u32, i64)]) -> UVPolynomial {
    let mut p = UVPolynomial::zero();
    for &(k, c) in coeffs {
        p.add_term(k, k, int(c));
    }
    p
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn local_crepant_value() -> Check {
    let res = StringyResult::of(&s(3, 2, 3)).map_err(err)?;
    let expected = t_poly(&[(1, 1), (2, 7), (3, 1)]);
    ensure!(res.e_str.to_polynomial() == Some(expected.clone()), "E_str is {}", res.e_str);
    ensure!(res.euler_str == int(9), "e_str = {}", res.euler_str);
    ensure!(res.index_str == BigInt::one(), "ind_str = {}", res.index_str);
    let closed = closed_estr(&s(3, 2, 3)).map_err(err)?;
    ensure!(closed.equals_polynomial(&expected), "closed E_str = {closed}");
    Ok(())
}

fn node_family() -> Check {
    for n in (1..=99).step_by(2) {
        let res = StringyResult::of(&s(3, n, 2)).map_err(err)?;
        ensure!(res.euler_str == int(2), "n={n}: e_str = {}", res.euler_str);
        ensure!(res.index_str == BigInt::one(), "n={n}: ind_str = {}", res.index_str);
    }
    Ok(())
}

fn grid() -> Vec<SingularityType> {
    family_grid(3, 7, 24).collect()
}

fn closed_form_consistency() -> Check {
    let cases = grid();
    ensure!(cases.len() > 200, "grid unexpectedly small: {}", cases.len());
    for sing in cases {
        let assembled = assemble_estr(&sing).map_err(err)?;
        let closed = closed_estr(&sing).map_err(err)?;
        ensure!(assembled.equals(&closed), "{sing}: assembled and closed E_str differ");
        let limit = assembled.limit_at_one().map_err(err)?;
        let by_closed = estr_euler(&sing, EulerMethod::Closed).map_err(err)?;
        let by_strata = estr_euler(&sing, EulerMethod::Structural).map_err(err)?;
        ensure!(
            limit == by_closed && by_closed == by_strata,
            "{sing}: limit {limit}, closed {by_closed}, structural {by_strata}"
        );
    }
    Ok(())
}

fn parity_formulas() -> Check {
    for sing in grid().into_iter().filter(|s| s.ell() == 2) {
        let structural = estr_euler(&sing, EulerMethod::Structural).map_err(err)?;
        let parity = conjrem_estr(sing.r(), sing.n()).map_err(err)?;
        ensure!(structural == parity, "{sing}: structural {structural}, parity formula {parity}");
    }
    let mut reached = None;
    for n in (2..=60).step_by(2) {
        let e = estr_euler(&s(3, n, 2), EulerMethod::Structural).map_err(err)?;
        let expected = rat(2 * i64::from(n) + 3, i64::from(n) + 3);
        ensure!(e == expected, "n={n}: e_str = {e}, expected {expected}");
        if reached.is_none() && ind_str(&e) > BigInt::from(10) {
            reached = Some(n);
        }
    }
    ensure!(reached.is_some(), "ind_str never exceeds 10 for even n <= 60");
    let top = ind_str(&rat(2 * 60 + 3, 63));
    ensure!(top == BigInt::from(21), "ind_str at n=60 is {top}");
    Ok(())
}

fn quintic() -> Check {
    let smooth = euler_smooth_ci(4, &[5]).map_err(err)?;
    ensure!(smooth == BigInt::from(-200), "e(smooth quintic) = {smooth}");
    let spec = CompleteIntersectionSpec::new(4, vec![5], vec![(s(3, 2, 3), 9)]).map_err(err)?;
    let e = estr_ci(&spec).map_err(err)?;
    ensure!(e == int(16), "e_str = {e}");
    // published arithmetic: -200 + 9 (9 + 2^4 - 1)
    ensure!(int(-200) + int(9) * int(9 + 16 - 1) == e, "arithmetic mismatch");
    Ok(())
}

fn werner_cqq() -> Check {
    let spec = CompleteIntersectionSpec::new(6, vec![3, 2, 2], vec![(s(3, 2, 3), 4), (s(3, 1, 2), 18)])
        .map_err(err)?;
    let e = estr_ci(&spec).map_err(err)?;
    ensure!(e == int(-12), "e_str = {e}");
    let smooth = euler_smooth_ci(6, &[3, 2, 2]).map_err(err)?;
    ensure!(smooth == BigInt::from(-144), "e(smooth) = {smooth}");
    Ok(())
}

fn segre_knorrer_table() -> Check {
    // published row, n = 4..=15, with the n = 7 misprint replaced by 96/13
    let published = [
        (4, 8, 1),
        (5, 6, 1),
        (6, 27, 4),
        (7, 96, 13),
        (8, 160, 19),
        (9, 120, 13),
        (10, 175, 17),
        (11, 480, 43),
        (12, 648, 53),
        (13, 105, 8),
        (14, 539, 38),
        (15, 1344, 89),
    ];
    for (n, num, den) in published {
        let e = segre_knorrer_estr(n).map_err(err)?;
        ensure!(e == rat(num, den), "n={n}: {e} != {num}/{den}");
        let via_ci = estr_ci(&segre_knorrer_spec(n).map_err(err)?).map_err(err)?;
        ensure!(via_ci == e, "n={n}: complete-intersection route gives {via_ci}");
    }
    ensure!(segre_knorrer_estr(7).map_err(err)? != rat(96, 4), "n=7 reproduces the misprint");
    Ok(())
}

fn goryunov() -> Check {
    for kappa in 0..=5u32 {
        let e = goryunov_estr(5, kappa).map_err(err)?;
        let idx = ind_str(&e);
        if [0, 1, 3, 4].contains(&kappa) {
            ensure!(idx == BigInt::one(), "kappa={kappa}: e_str = {e}, ind_str = {idx}");
        }
    }
    let node = conjrem_estr(4, 1).map_err(err)?;
    ensure!(node == rat(4, 3), "conjrem_estr(4,1) = {node}");
    ensure!(ind_str(&node) == BigInt::from(3), "node index {}", ind_str(&node));
    let structural = estr_euler(&s(4, 1, 2), EulerMethod::Structural).map_err(err)?;
    ensure!(structural == node, "structural node value {structural}");
    Ok(())
}

fn solids() -> Check {
    let published: [(&str, u64, i64, i64); 5] = [
        ("A", 3, 12, 72),
        ("B", 12, 64, -324),
        ("C", 6, -32, -4212),
        ("D,E", 27, -111_616, -68_496_840),
        ("F", 39, -99_328, -62_828_136),
    ];
    let rows = solids_table().map_err(err)?;
    ensure!(rows.len() == published.len(), "{} rows", rows.len());
    for (row, (label, t4, d2, d3)) in rows.iter().zip(published) {
        ensure!(row.solid.label == label, "label {}", row.solid.label);
        ensure!(row.t4 == t4, "{label}: t4 = {}", row.t4);
        ensure!(row.estr_d2 == int(d2), "{label}: d=2 gives {}", row.estr_d2);
        ensure!(row.estr_d3 == int(d3), "{label}: d=3 gives {}", row.estr_d3);
    }
    Ok(())
}

fn property_suites() -> Check {
    for kappa in 0..=12u32 {
        for nu in 1..=4u32 {
            for xi in 0..=kappa {
                for lambda in 0..=i64::from(kappa) {
                    let rec = eulerian_recurrence(kappa, lambda, nu, xi);
                    let closed = eulerian_closed(kappa, lambda, nu, xi);
                    ensure!(
                        rec.is_integer() && rec.to_integer() == closed,
                        "S({kappa},{lambda}|{nu},{xi}): recurrence {rec}, closed {closed}"
                    );
                }
                for t in 0..=u64::from(kappa) {
                    let lhs = binomial(u64::from(nu) * t + u64::from(xi), u64::from(kappa));
                    let rhs: BigInt = (0..=i64::from(kappa))
                        .map(|l| {
                            eulerian_closed(kappa, l, nu, xi)
                                * binomial(t + u64::from(kappa) - l as u64, u64::from(kappa))
                        })
                        .sum();
                    ensure!(lhs == rhs, "generating identity fails at kappa={kappa} nu={nu} xi={xi} t={t}");
                }
            }
        }
    }
    for r in 2..=6u32 {
        for ell in 2..=r.min(6) {
            for n in 1..=12u32 {
                let Ok(sing) = SingularityType::new(r, n, ell) else { continue };
                let series = poincare_series_a(&sing);
                let general = poincare_series(&sing.weights()).map_err(err)?;
                ensure!(general == series, "{sing}: Poincare series routes differ");
                ensure!(
                    series.eval(&Rational::one()) == Rational::from_integer(milnor_number(&sing)),
                    "{sing}: Milnor number"
                );
                ensure!(e_punctured(&sing).eval_at_one().is_zero(), "{sing}: E(X - 0)(1,1) != 0");
                for p in 0..i64::from(r) {
                    let h = link_hodge(&sing, p).map_err(err)?;
                    ensure!(h == link_hodge_from_series(&sing, p).map_err(err)?, "{sing}: link routes at p={p}");
                    ensure!(h == link_hodge(&sing, i64::from(r) - 1 - p).map_err(err)?, "{sing}: link symmetry at p={p}");
                }
            }
        }
    }
    for ell in 2..=6 {
        for dim in 0..=6 {
            let f = FermatSpec::new(ell, dim).map_err(err)?;
            ensure!(
                fermat_e(&f).eval_at_one() == Rational::from_integer(fermat_euler(&f)),
                "Fermat({ell},{dim}) Euler number"
            );
            for p in 0..=i64::from(dim) {
                for q in 0..=i64::from(dim) {
                    ensure!(
                        fermat_hodge(&f, p, q).map_err(err)? == fermat_hodge(&f, q, p).map_err(err)?,
                        "Fermat({ell},{dim}) h^{p},{q} symmetry"
                    );
                }
            }
        }
    }
    Ok(())
}

fn sign_oracle() -> Check {
    let conifold = s(3, 1, 2);
    // (uv - 1)(1 + 2uv + (uv)^2)
    let expected_punctured = t_poly(&[(0, 1), (1, 2), (2, 1)]) * UVPolynomial::t_binomial(1);
    let punctured = e_punctured(&conifold);
    ensure!(punctured == expected_punctured, "E(X - 0) = {punctured}");
    let small_resolution = t_poly(&[(2, 1), (3, 1)]);
    let e = assemble_estr(&conifold).map_err(err)?;
    ensure!(e.equals_polynomial(&small_resolution), "E_str = {e}");
    // the opposite sign (-1)^r breaks both
    let mut inner = UVPolynomial::zero();
    for p in 0..3u32 {
        inner.add_term(p, p, int(1));
        inner.add_term(p, 2 - p, -Rational::from_integer(link_hodge(&conifold, i64::from(p)).map_err(err)?));
    }
    let flipped = inner.mul_t_binomial(1);
    ensure!(flipped != expected_punctured, "opposite sign reproduces the oracle");
    let mut other = e.clone();
    other.push(stringy_core::StringyTerm::polynomial(&flipped - &punctured));
    ensure!(!other.equals_polynomial(&small_resolution), "opposite sign also matches");
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1 local crepant value A_{2,3}^(3)", local_crepant_value),
        ("2 node family e_str = 2 for odd n <= 99", node_family),
        ("3 closed = assembled E_str, three-way e_str", closed_form_consistency),
        ("4 parity formulas and index growth", parity_formulas),
        ("5 quintic threefold -200 and 16", quintic),
        ("6 cubic-quadric-quadric e_str = -12", werner_cqq),
        ("7 Segre-Knorrer table", segre_knorrer_table),
        ("8 Goryunov quartics, N = 5", goryunov),
        ("9 solids table", solids),
        ("10 property suites", property_suites),
        ("11 sign oracle (conifold)", sign_oracle),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS  criterion {name}  ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of 11 acceptance criteria passed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

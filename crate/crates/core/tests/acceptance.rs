//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
//! failure.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use permclass::engine::{x_inflation_gf, PropertySet, USpec};
use permclass::enumerate::{enumerate_av, enumerate_naive, enumerate_xu, ClassSpec};
use permclass::ratfun::{
    catalan_functional, fixed_point_residual, separable_functional, solve_fixed_point,
    solve_fixed_point_system, Poly, Rational, RationalFunction,
};
use permclass::septree::{is_in_x, x_basis};
use permclass::{class_gf, Permutation};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = fn() -> Result<String, String>;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn spec(items: &[&str]) -> ClassSpec {
    let perms: Vec<Permutation> = items.iter().map(|s| p(s)).collect();
    ClassSpec::new(&perms).unwrap()
}

fn pool() -> Vec<ClassSpec> {
    vec![
        spec(&[]),
        spec(&["123"]),
        spec(&["231"]),
        spec(&["2143"]),
        spec(&["123", "3214"]),
    ]
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tail_i64(coeffs: Vec<i64>) -> Vec<i64> {
    coeffs[1..].to_vec()
}

fn fixed_point_counts(
    expected: &[i64],
    basis: &[&str],
    phi: fn(&permclass::PowerSeries) -> permclass::Result<permclass::PowerSeries>,
) -> Result<String, String> {
    let n = expected.len();
    let brute: Vec<i64> = enumerate_av(&spec(basis), n)
        .map_err(|e| e.to_string())?
        .counts
        .into_iter()
        .map(|c| c as i64)
        .collect();
    let series = solve_fixed_point(n, phi).map_err(|e| e.to_string())?;
    let analytic = tail_i64(series.integer_coeffs_i64().ok_or("non-integral series")?);
    ensure(brute == analytic, || {
        format!("enumeration {brute:?} vs series {analytic:?}")
    })?;
    ensure(brute == expected, || format!("got {brute:?}"))?;
    Ok(format!("{brute:?}"))
}

fn criterion1() -> Result<String, String> {
    fixed_point_counts(
        &[1, 2, 6, 22, 90, 394, 1806, 8558],
        &["2413", "3142"],
        separable_functional,
    )
}

fn criterion2() -> Result<String, String> {
    fixed_point_counts(
        &[1, 2, 5, 14, 42, 132, 429, 1430],
        &["231"],
        catalan_functional,
    )
}

fn criterion3() -> Result<String, String> {
    let with_empty = RationalFunction::from_i64(&[1, -3], &[1, -4, 2]).unwrap();
    let series = tail_i64(with_empty.series(8).unwrap().integer_coeffs_i64().unwrap());
    let basis: Vec<Permutation> = x_basis().to_vec();
    let brute: Vec<i64> = enumerate_av(&ClassSpec::new(&basis).unwrap(), 8)
        .map_err(|e| e.to_string())?
        .counts
        .into_iter()
        .map(|c| c as i64)
        .collect();
    ensure(series == brute, || {
        format!("series {series:?} vs enumeration {brute:?}")
    })?;
    let naive: Vec<i64> = enumerate_naive(8, is_in_x)
        .into_iter()
        .map(|c| c as i64)
        .collect();
    ensure(naive == brute, || format!("naive {naive:?}"))?;
    let engine = class_gf(&USpec::Trivial, &ClassSpec::empty()).map_err(|e| e.to_string())?;
    let shifted = &engine + &RationalFunction::one();
    ensure(shifted == with_empty, || {
        format!("engine gf + 1 = {shifted}")
    })?;
    Ok(format!("{brute:?}"))
}

fn criterion4() -> Result<String, String> {
    let x = RationalFunction::x();
    let g = x_inflation_gf(&x, &x).map_err(|e| e.to_string())?;
    let expected = RationalFunction::from_i64(&[0, 1, -2], &[1, -4, 2]).unwrap();
    ensure(g == expected, || format!("got {g}"))?;
    Ok(g.to_string())
}

fn criterion5() -> Result<String, String> {
    let perms: Vec<Permutation> = (1..=4).flat_map(Permutation::all).collect();
    let mut checked = 0usize;
    for b in pool() {
        let ps = PropertySet::new(b.basis());
        let profiles: Vec<_> = perms.iter().map(|x| ps.profile_of(x).unwrap()).collect();
        for (s, qs) in perms.iter().zip(&profiles) {
            for (t, qt) in perms.iter().zip(&profiles) {
                let sum = ps.profile_of(&s.direct_sum(t)).unwrap();
                ensure(sum == ps.combine_sum(qs, qt), || {
                    format!("B={:?}: {s}⊕{t}", b.basis())
                })?;
                let skew = ps.profile_of(&s.skew_sum(t)).unwrap();
                ensure(skew == ps.combine_skew(qs, qt), || {
                    format!("B={:?}: {s}⊖{t}", b.basis())
                })?;
                checked += 2;
            }
        }
    }
    Ok(format!("{checked} combinations, 0 violations"))
}

fn criterion6() -> Result<String, String> {
    let cl231 = USpec::finite_closure([&p("231")]).unwrap().0;
    let mut pairs = 0;
    for u in [USpec::Trivial, USpec::Increasing, cl231] {
        for b in pool() {
            let gf = class_gf(&u, &b).map_err(|e| format!("U={u} B={:?}: {e}", b.basis()))?;
            let s = gf.series(10).map_err(|e| e.to_string())?;
            ensure(s.is_nonnegative_integral(), || {
                format!("U={u} B={:?}: {gf} has a bad coefficient", b.basis())
            })?;
            let engine: Vec<BigInt> = s.integer_coeffs().unwrap()[1..].to_vec();
            let oracle: Vec<BigInt> = enumerate_xu(&u, &b, 10)
                .map_err(|e| e.to_string())?
                .counts
                .into_iter()
                .map(BigInt::from)
                .collect();
            ensure(engine == oracle, || {
                format!(
                    "U={u} B={:?}: engine {engine:?} vs oracle {oracle:?}",
                    b.basis()
                )
            })?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (U, B) pairs agree to order 10"))
}

fn random_poly(rng: &mut StdRng, max_deg: usize) -> Poly {
    let deg = rng.gen_range(0..=max_deg);
    Poly::from_coeffs(
        (0..=deg)
            .map(|_| {
                Rational::new(
                    rng.gen_range(-5i64..=5).into(),
                    rng.gen_range(1i64..=3).into(),
                )
            })
            .collect(),
    )
}

fn random_ratfun(rng: &mut StdRng) -> RationalFunction {
    let num = random_poly(rng, 3);
    let mut den = random_poly(rng, 2);
    while den.is_zero() {
        den = random_poly(rng, 2);
    }
    RationalFunction::new(num, den).unwrap()
}

/// Denominator with nonzero constant term, numerator divisible by x.
fn random_x_divisible(rng: &mut StdRng) -> RationalFunction {
    let num = &random_poly(rng, 2) * &Poly::x();
    let den = &(&random_poly(rng, 1) * &Poly::x())
        + &Poly::constant(Rational::from_integer(rng.gen_range(1i64..=4).into()));
    RationalFunction::new(num, den).unwrap()
}

#[allow(clippy::eq_op)]
fn criterion7() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    for k in 0..100 {
        let n = rng.gen_range(1..=3);
        let m: Vec<Vec<RationalFunction>> = (0..n)
            .map(|_| (0..n).map(|_| random_x_divisible(&mut rng)).collect())
            .collect();
        let v: Vec<RationalFunction> = (0..n).map(|_| random_ratfun(&mut rng)).collect();
        let h = solve_fixed_point_system(&m, &v).map_err(|e| format!("system {k}: {e}"))?;
        ensure(
            fixed_point_residual(&m, &h, &v)
                .iter()
                .all(RationalFunction::is_zero),
            || format!("system {k}: nonzero residual"),
        )?;
    }
    for k in 0..1000 {
        let (a, b, c) = (
            random_ratfun(&mut rng),
            random_ratfun(&mut rng),
            random_ratfun(&mut rng),
        );
        let ok = &a + &b == &b + &a
            && &a * &b == &b * &a
            && &(&a + &b) + &c == &a + &(&b + &c)
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && (&a - &a).is_zero()
            && (a.is_zero() || (&a * &a.recip().unwrap()).is_one());
        ensure(ok, || format!("triple {k}: ({a}, {b}, {c})"))?;
    }
    Ok("100 systems, 1000 triples".into())
}

fn criterion8() -> Result<String, String> {
    let b = spec(&["123"]);
    let gf = class_gf(&USpec::Trivial, &b).map_err(|e| e.to_string())?;
    let engine: Vec<BigInt> = gf
        .series(10)
        .map_err(|e| e.to_string())?
        .integer_coeffs()
        .ok_or("non-integral")?[1..]
        .to_vec();
    let oracle: Vec<BigInt> = enumerate_xu(&USpec::Trivial, &b, 10)
        .map_err(|e| e.to_string())?
        .counts
        .into_iter()
        .map(BigInt::from)
        .collect();
    ensure(engine == oracle, || {
        format!("engine {engine:?} vs oracle {oracle:?}")
    })?;
    let in_class = |pi: &Permutation| is_in_x(pi) && pi.avoids(&p("123"));
    for sigma in ["132", "213", "231", "312"] {
        let sigma = p(sigma);
        let witness = (3..=4)
            .flat_map(Permutation::all)
            .find(|pi| pi.avoids(&sigma) && !in_class(pi));
        ensure(witness.is_some(), || {
            format!("X ∩ Av(123) contains Av({sigma}) up to length 4")
        })?;
    }
    Ok(format!(
        "{gf}, contains none of Av(132), Av(213), Av(231), Av(312)"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, Duration); 8] = [
        ("separable counts", criterion1, Duration::from_secs(60)),
        ("Catalan counts", criterion2, Duration::from_secs(60)),
        (
            "X class series and generating function",
            criterion3,
            Duration::from_secs(60),
        ),
        (
            "closed form for the X class",
            criterion4,
            Duration::from_secs(1),
        ),
        (
            "profile homomorphism over the test pool",
            criterion5,
            Duration::from_secs(300),
        ),
        (
            "engine against enumeration",
            criterion6,
            Duration::from_secs(600),
        ),
        (
            "exact algebra properties",
            criterion7,
            Duration::from_secs(60),
        ),
        (
            "rational generating function for X ∩ Av(123)",
            criterion8,
            Duration::from_secs(60),
        ),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > *limit {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("PASS {} {name} [{elapsed:.2?}]: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name} [{elapsed:.2?}]: {why}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

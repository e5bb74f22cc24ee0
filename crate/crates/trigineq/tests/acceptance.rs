//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line. Tolerances and runtime budgets are pinned in the
//! assertions below.

use std::time::Instant;

use num_traits::{Signed, Zero};
use trigineq::cheb::{cheb_t, cheb_u, to_algebraic, Angle};
use trigineq::hp::Hp;
use trigineq::poly::Poly;
use trigineq::rat::{rat, rint, Rat};
use trigineq::series::{
    check_absolute_monotonicity, check_superadditive, w_coefficients, PowerSeries, WParams,
};
use trigineq::sturm::sturm_chain;
use trigineq::sums::{build, eval_exact, eval_float, FamilyId, FamilyTag, Kind, TrigSum};
use trigineq::verify::{
    certify_positive, check_sharpness, lemma3_kernel, run_lemma_checks, CertOptions,
    SharpnessClaim, Verdict,
};

fn report(criterion: u32, name: &str, pass: bool) {
    println!(
        "criterion {criterion} ({name}): {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {criterion} ({name}) failed");
}

#[test]
fn criterion_1_lemma3_kernel() {
    let start = Instant::now();
    let v = lemma3_kernel();
    let chain = sturm_chain(&v).unwrap();
    let roots = chain.count_roots(&rat(-1, 2), &rint(1), true, true);
    let pass = roots == 0 && v.sign_at(&rint(1)) == 1 && v.eval(&rint(1)) == rat(51, 10);
    let in_time = start.elapsed().as_secs_f64() < 1.0;
    report(1, "Lemma 3 kernel", pass && in_time);
}

#[test]
fn criterion_2_theorem5_table() {
    let start = Instant::now();
    let opts = CertOptions::default();
    let iv = (Angle::zero(), Angle::two_pi_thirds());
    let mut pass = true;
    for n in 1..=100u32 {
        let id = FamilyId::no_m(FamilyTag::PDiff, n);
        let r = to_algebraic(&build(&id).unwrap()).sin_part_in_t().unwrap();
        let expected_degree = (n as usize - 1).max(2);
        pass &= r.degree() == Some(expected_degree);
        let cert = certify_positive(&id, &Rat::zero(), (&iv.0, &iv.1), &opts).unwrap();
        pass &= cert.verdict == Verdict::Proved;
        let has_neg_half = cert.endpoint_zeros.iter().any(|z| z == "t=-1/2");
        pass &= has_neg_half == (n % 3 == 0);
    }
    // explicit low-order forms
    let r = |n: u32| {
        to_algebraic(&build(&FamilyId::no_m(FamilyTag::PDiff, n)).unwrap())
            .sin_part_in_t()
            .unwrap()
    };
    let q1 = &Poly::from_coeffs(vec![rint(2), rint(1)]) * &Poly::from_coeffs(vec![rint(1), rint(-1)]);
    pass &= r(1) == q1.scale(&rat(8, 9));
    pass &= r(2) == Poly::from_coeffs(vec![rint(13), rint(16), rint(-2)]).scale(&rat(4, 9));
    pass &= r(3) == Poly::from_coeffs(vec![rint(1), rint(4), rint(4)]).scale(&rat(52, 9));
    let in_time = start.elapsed().as_secs_f64() < 60.0;
    report(2, "Theorem 5 table n=1..100", pass && in_time);
}

#[test]
fn criterion_3_theorem_1_2_3_sweeps() {
    let start = Instant::now();
    let opts = CertOptions::default();
    let iv = (Angle::zero(), Angle::pi());
    let mut pass = true;
    for m in 1..=10u32 {
        for n in 1..=25u32 {
            // Theorem 1: B_n(m, x) > m
            let b = FamilyId::new(FamilyTag::B12, m, n);
            let cert =
                certify_positive(&b, &rint(m as i64), (&iv.0, &iv.1), &opts).unwrap();
            pass &= cert.verdict == Verdict::Proved;
            if n == 1 {
                // endpoint attainment B_1(m, pi) = m at t = -1
                pass &= cert.endpoint_zeros.iter().any(|z| z == "t=-1");
            }

            // Theorem 2: U_n > -1/4 (m = 1), U_n > 0 (m >= 2), V_n > 0
            let u = FamilyId::new(FamilyTag::U14, m, n);
            let u_bound = if m == 1 { rat(-1, 4) } else { Rat::zero() };
            let cert = certify_positive(&u, &u_bound, (&iv.0, &iv.1), &opts).unwrap();
            pass &= cert.verdict == Verdict::Proved;
            if m >= 2 {
                // endpoint attainment U_n(m, pi) = 0 at c = 0
                pass &= cert.endpoint_zeros.iter().any(|z| z == "c=0");
            }
            let v = FamilyId::new(FamilyTag::V15, m, n);
            let cert = certify_positive(&v, &Rat::zero(), (&iv.0, &iv.1), &opts).unwrap();
            pass &= cert.verdict == Verdict::Proved;
            // attainment V_n(m, 0) = 0: pure sine sum, cos part vanishes
            let (cv, _) = eval_exact(&build(&v).unwrap(), &rint(1));
            pass &= cv.is_zero();

            // Theorem 3: C_n, D_n > 0
            let c = FamilyId::new(FamilyTag::C16, m, n);
            let cert = certify_positive(&c, &Rat::zero(), (&iv.0, &iv.1), &opts).unwrap();
            pass &= cert.verdict == Verdict::Proved;
            // attainment C_n(m, pi) = 0 at c = 0
            pass &= cert.endpoint_zeros.iter().any(|z| z == "c=0");
            let d = FamilyId::new(FamilyTag::D17, m, n);
            let cert = certify_positive(&d, &Rat::zero(), (&iv.0, &iv.1), &opts).unwrap();
            pass &= cert.verdict == Verdict::Proved;
            // attainment D_n(m, 0) = 0: pure sine sum
            let (cv, _) = eval_exact(&build(&d).unwrap(), &rint(1));
            pass &= cv.is_zero();
        }
    }
    let in_time = start.elapsed().as_secs_f64() < 300.0;
    report(3, "Theorems 1-3 sweeps m<=10 n<=25", pass && in_time);
}

#[test]
fn criterion_4_identity_suite() {
    let mut pass = true;

    // recurrence (4.3): U_{n+1}(m+1) = U_{n+1}(m) + U_n(m+1), m, n <= 20
    for m in 1..=20u32 {
        for n in 1..=20u32 {
            let lhs = build(&FamilyId::new(FamilyTag::U14, m + 1, n + 1)).unwrap();
            let rhs = build(&FamilyId::new(FamilyTag::U14, m, n + 1))
                .unwrap()
                .add(&build(&FamilyId::new(FamilyTag::U14, m + 1, n)).unwrap());
            pass &= lhs == rhs;
        }
    }

    // averaging (5.2): D_{2n}(1) = (D_{2n-1}(1) + D_{2n+1}(1)) / 2, n <= 30
    for n in 1..=30u32 {
        let lhs = build(&FamilyId::new(FamilyTag::D17, 1, 2 * n)).unwrap();
        let rhs = build(&FamilyId::new(FamilyTag::D17, 1, 2 * n - 1))
            .unwrap()
            .add(&build(&FamilyId::new(FamilyTag::D17, 1, 2 * n + 1)).unwrap())
            .scale(&rat(1, 2));
        pass &= lhs == rhs;
    }

    // constant gap (3.2): B_n(m) - T_n(m) = binom(n+m, m) / 2
    for m in 1..=12u32 {
        for n in 1..=12u32 {
            let b = build(&FamilyId::new(FamilyTag::B12, m, n)).unwrap();
            let t = build(&FamilyId::new(FamilyTag::T31, m, n)).unwrap();
            let gap = Rat::from_integer(trigineq::sums::binom(
                n as u64 + m as u64,
                m as u64,
            )) * rat(1, 2);
            pass &= b.sub(&t) == TrigSum::from_constant(gap);
        }
    }

    // decomposition: V_n(m) = cos(x/2) A_n(m) + sin(x/2) B_n(m)
    let single = |kind: Kind, j: u32| {
        let mut s = TrigSum::new();
        s.add_term(kind, j, rint(1));
        s
    };
    for m in 1..=20u32 {
        for n in 1..=20u32 {
            let v = build(&FamilyId::new(FamilyTag::V15, m, n)).unwrap();
            let a = build(&FamilyId::new(FamilyTag::A11, m, n)).unwrap();
            let b = build(&FamilyId::new(FamilyTag::B12, m, n)).unwrap();
            let rhs = single(Kind::Cos, 1)
                .mul(&a)
                .add(&single(Kind::Sin, 1).mul(&b));
            pass &= v == rhs;
        }
    }

    // S_n reformulation: 18 (1-t)^2 R_n(t) = S-hat_n(t), n <= 40
    let one_minus_t_sq = {
        let lin = Poly::from_coeffs(vec![rint(1), rint(-1)]);
        &lin * &lin
    };
    for n in 1..=40u32 {
        let r = to_algebraic(&build(&FamilyId::no_m(FamilyTag::PDiff, n)).unwrap())
            .sin_part_in_t()
            .unwrap();
        let s_hat = to_algebraic(&build(&FamilyId::no_m(FamilyTag::S22, n)).unwrap())
            .sin_part_in_t()
            .unwrap();
        pass &= (&one_minus_t_sq * &r).scale(&rint(18)) == s_hat;
    }

    // Corollary antiderivative: d/dx of the Theta minorant equals
    // (2/9) sin(x) (1 + 2 cos(x))^2 exactly
    let lhs = trigineq::sums::corollary_minorant().derivative();
    let mut one_plus_2cos = TrigSum::from_constant(rint(1));
    one_plus_2cos.add_term(Kind::Cos, 2, rint(2));
    let rhs = single(Kind::Sin, 2)
        .mul(&one_plus_2cos.mul(&one_plus_2cos))
        .scale(&rat(2, 9));
    pass &= lhs == rhs;

    report(4, "exact identity suite", pass);
}

#[test]
fn criterion_5_sharpness_suite() {
    let mut pass = true;

    // |U_{2n-1}(1, x_n) + 1/4| < 1e-2 at n = 10^3, decreasing over 10^2..10^4
    let r = check_sharpness(SharpnessClaim::Th2NegQuarter, 4, 256);
    pass &= r.pass;
    pass &= r.sequence.len() == 3;
    let gaps: Vec<f64> = r.sequence.iter().map(|(_, _, g)| *g).collect();
    pass &= gaps[1] < 1e-2 && gaps[1] < gaps[0] && gaps[2] < gaps[1];

    // |P_1 ratio - 2/9| < 1e-7 at x = 1e-4
    let r = check_sharpness(SharpnessClaim::Th5TwoNinths, 4, 256);
    pass &= r.pass && r.final_gap < 1e-7;

    // |Theta_1 ratio - 2/27| < 1e-6 at x = 1e-3
    let r = check_sharpness(SharpnessClaim::CorTwo27ths, 3, 256);
    pass &= r.pass && r.final_gap < 1e-6;

    report(5, "sharpness suite", pass);
}

#[test]
fn criterion_6_lemma_machinery() {
    let mut pass = true;
    let reports = run_lemma_checks(24, 192, 48);
    let find = |lemma: &str, prefix: &str| -> Option<f64> {
        reports
            .iter()
            .find(|r| r.lemma_id == lemma)?
            .checks
            .iter()
            .find(|c| c.name.starts_with(prefix))?
            .value
    };
    // checkpoint values to 3 significant figures, precision >= 128 bits
    let l2 = find("L5", "L_2(1.1 pi/2)").unwrap();
    pass &= (l2 - 2.79).abs() < 0.005;
    let h = find("L7", "H(2.9, 1.21 pi)").unwrap();
    pass &= (h - 0.134).abs() < 0.0005;
    let margin = find("L5", "alpha").unwrap();
    pass &= (margin - 0.310).abs() < 0.0005;
    // all 40 Lemma 7 window checks
    pass &= reports
        .iter()
        .find(|r| r.lemma_id == "L7")
        .unwrap()
        .checks
        .iter()
        .find(|c| c.name.starts_with("H(2.5+k/100"))
        .unwrap()
        .pass;
    // L6 cubic positive for n = 21..60
    for n in 21..=60i64 {
        let val = rat(729, 100) * rint(n * n * n)
            + rat(369, 10) * rint(n * n)
            + rat(3438, 100) * rint(n)
            - rat(5778, 100);
        pass &= val.is_positive();
    }
    // every lemma report passes at n = 24
    pass &= reports.iter().all(|r| r.pass());
    report(6, "lemma machinery checkpoints", pass);
}

/// (1-x)^{m+1} (1 - 2wx + x^2) as a padded power series.
fn annihilator(m: u32, omega: &Rat, order: usize) -> PowerSeries {
    let mut pow = vec![rint(1)];
    for _ in 0..=m {
        let mut next = vec![Rat::zero(); pow.len() + 1];
        for (i, c) in pow.iter().enumerate() {
            next[i] = &next[i] + c;
            next[i + 1] = &next[i + 1] - c;
        }
        pow = next;
    }
    let quad = [rint(1), omega * rint(-2), rint(1)];
    let mut full = vec![Rat::zero(); pow.len() + 2];
    for (i, c) in pow.iter().enumerate() {
        for (j, q) in quad.iter().enumerate() {
            full[i + j] = &full[i + j] + &(c * q);
        }
    }
    full.resize(order + 1, Rat::zero());
    PowerSeries::from_coeffs(full)
}

#[test]
fn criterion_7_theorem6() {
    let start = Instant::now();
    let mut pass = true;

    // reconstruction of 1 - wx through order N - m - 3, N = 64
    let order = 64usize;
    let omegas = [rint(-1), rat(-1, 2), rint(0), rat(1, 2), rint(1)];
    for m in 1..=6u32 {
        for omega in &omegas {
            let p = WParams::new(m, omega.clone()).unwrap();
            let w = w_coefficients(&p, order);
            // W + m/(1-x) - (m-1): shift coefficient n by m (n >= 1) and
            // coefficient 0 by m - (m-1) = 1
            let shifted: Vec<Rat> = w
                .coeffs()
                .iter()
                .enumerate()
                .map(|(n, c)| if n == 0 { rint(1) } else { c + rint(m as i64) })
                .collect();
            let shifted = PowerSeries::from_coeffs(shifted);
            let ann = annihilator(m, omega, order);
            let prod = trigineq::series::cauchy_product(&shifted, &ann).unwrap();
            let upper = order - m as usize - 3;
            for n in 0..=upper {
                let expect = match n {
                    0 => rint(1),
                    1 => -omega,
                    _ => Rat::zero(),
                };
                pass &= prod.coeff(n) == &expect;
            }
        }
    }

    // positivity of coefficients 1..256 for m <= 10, w in steps of 1/4;
    // strict except at the boundary w = -1 where the order-1 coefficient is
    // exactly 1 + w = 0 (the family is nonnegative there, not strict)
    for m in 1..=10u32 {
        for k in -4..=4i64 {
            let omega = rat(k, 4);
            let p = WParams::new(m, omega.clone()).unwrap();
            let v = check_absolute_monotonicity(&p, 256);
            pass &= v.pass;
            let w = w_coefficients(&p, 256);
            if omega == rint(-1) {
                pass &= w.coeff(1).is_zero();
                pass &= (2..=256).all(|n| w.coeff(n).is_positive());
            } else {
                pass &= (1..=256).all(|n| w.coeff(n).is_positive());
            }
        }
    }

    // superadditivity sampling: 10^4 stratified points, m <= 5
    for m in 1..=5u32 {
        for k in [-1i64, 0, 1] {
            let p = WParams::new(m, rint(k)).unwrap();
            let r = check_superadditive(&p, 10_000, 128);
            pass &= r.pass;
        }
    }
    let in_time = start.elapsed().as_secs_f64() < 300.0;
    report(7, "Theorem 6 series engine", pass && in_time);
}

#[test]
fn criterion_8_property_suite() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x8a15);
    let mut pass = true;

    // Sturm vs known roots on 200 random polynomials with planted
    // rational roots (the scan oracle is the construction itself)
    for _ in 0..200 {
        let k = rng.gen_range(1..=5usize);
        let mut roots: Vec<Rat> = Vec::new();
        while roots.len() < k {
            let r = rat(rng.gen_range(-16i64..=16), rng.gen_range(1i64..=8));
            if !roots.contains(&r) {
                roots.push(r);
            }
        }
        let mut p = Poly::from_coeffs(vec![rat(
            rng.gen_range(1i64..=5),
            rng.gen_range(1i64..=3),
        )]);
        for r in &roots {
            p = &p * &Poly::from_coeffs(vec![-r, rint(1)]);
        }
        // optionally multiply in a rootless quadratic
        if rng.gen_bool(0.5) {
            p = &p * &Poly::from_coeffs(vec![rint(1), rint(0), rint(1)]);
        }
        let (a, b) = (rat(-5, 2), rat(5, 2));
        let expected = roots.iter().filter(|r| **r > a && **r < b).count();
        let chain = sturm_chain(&p).unwrap();
        pass &= chain.count_roots(&a, &b, false, false) == expected;
    }

    // Chebyshev identities: Pell, recurrence, interpolation at 1e-25
    for n in 1..=12usize {
        let pell = &(&cheb_t(n) * &cheb_t(n))
            - &(&(&cheb_u(n - 1) * &cheb_u(n - 1)) * &Poly::from_coeffs(vec![rint(-1), rint(0), rint(1)]));
        pass &= pell == Poly::from_coeffs(vec![rint(1)]);
        let rec = &(&Poly::from_coeffs(vec![rint(0), rint(2)]) * &cheb_t(n)) - &cheb_t(n - 1);
        pass &= rec == cheb_t(n + 1);
    }
    let p = 192usize;
    let tol = Hp::pow10_neg(25, p);
    for _ in 0..16 {
        let theta = Hp::from_f64(rng.gen_range(0.1..3.0), p);
        let c = theta.cos();
        let cf = c.to_f64();
        for j in 1..=8usize {
            let tj = cheb_t(j);
            let approx: f64 = tj
                .coeffs()
                .iter()
                .enumerate()
                .map(|(i, q)| {
                    use num_traits::ToPrimitive;
                    q.to_f64().unwrap() * cf.powi(i as i32)
                })
                .sum();
            // f64 sanity only; the exact check follows
            pass &= (approx - (j as f64 * theta.to_f64()).cos()).abs() < 1e-9;
            let mut acc = Hp::zero(p);
            for q in tj.coeffs().iter().rev() {
                acc = acc.mul(&c).add(&Hp::from_rat(q, p));
            }
            let diff = acc
                .sub(&theta.mul(&Hp::from_i64(j as i64, p)).cos())
                .abs();
            pass &= diff.cmp(&tol).is_lt();
        }
    }

    // eval_float vs eval_exact at rational c across the catalog, 1e-25
    let families: Vec<FamilyId> = vec![
        FamilyId::new(FamilyTag::A11, 2, 7),
        FamilyId::new(FamilyTag::B12, 3, 6),
        FamilyId::new(FamilyTag::T31, 2, 5),
        FamilyId::new(FamilyTag::U14, 1, 8),
        FamilyId::new(FamilyTag::V15, 2, 6),
        FamilyId::new(FamilyTag::C16, 1, 9),
        FamilyId::new(FamilyTag::D17, 2, 9),
        FamilyId::no_m(FamilyTag::P10, 7),
        FamilyId::no_m(FamilyTag::PDiff, 7),
        FamilyId::no_m(FamilyTag::Theta, 5),
        FamilyId::no_m(FamilyTag::ThetaDiff, 5),
        FamilyId::no_m(FamilyTag::S22, 9),
        FamilyId::no_m(FamilyTag::LN, 9),
        FamilyId::no_m(FamilyTag::F24, 4),
        FamilyId::no_m(FamilyTag::G25, 4),
        FamilyId::no_m(FamilyTag::H26, 4),
        FamilyId::no_m(FamilyTag::E5, 4),
        FamilyId::no_m(FamilyTag::Remark2_1, 6),
        FamilyId::no_m(FamilyTag::Remark2_2, 6),
        FamilyId::no_m(FamilyTag::Remark2_3, 6),
        FamilyId::no_m(FamilyTag::Remark2_4, 6),
        FamilyId::new(FamilyTag::TauSigned1, 1, 4),
        FamilyId::new(FamilyTag::TauSigned2, 1, 4),
    ];
    for id in &families {
        let s = build(id).unwrap();
        for _ in 0..8 {
            let c = rat(rng.gen_range(-90i64..=90), 100);
            let (cv, sv) = eval_exact(&s, &c);
            let c_hp = Hp::from_rat(&c, p);
            // x/2 = acos(c), sin(x/2) = sqrt(1 - c^2) >= 0
            let x = c_hp.acos().mul(&Hp::from_i64(2, p));
            let sin_u = Hp::from_i64(1, p).sub(&c_hp.mul(&c_hp)).sqrt();
            let exact = Hp::from_rat(&cv, p).add(&Hp::from_rat(&sv, p).mul(&sin_u));
            let float = eval_float(&s, &x);
            let diff = float.sub(&exact).abs();
            let scale = exact.abs().add(&Hp::from_i64(1, p));
            pass &= diff.div(&scale).cmp(&tol).is_lt();
        }
    }

    // CLI determinism: byte-identical reruns of the built binary
    let bin = env!("CARGO_BIN_EXE_trigineq");
    let run = |jobs: &str| {
        std::process::Command::new(bin)
            .args([
                "certify", "--family", "P_DIFF", "--n", "1..12", "--jobs", jobs,
            ])
            .output()
            .expect("binary runs")
    };
    let (a, b, c) = (run("1"), run("1"), run("4"));
    pass &= a.status.code() == Some(0);
    pass &= a.stdout == b.stdout && a.stdout == c.stdout && !a.stdout.is_empty();

    report(8, "property suite", pass);
}

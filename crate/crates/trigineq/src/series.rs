//! Truncated power series over exact rationals, and the absolute-monotonicity
//! machinery for the two-parameter family
//!
//! `W(x) = m - 1 - m/(1-x) + (1 - w*x) / ((1-x)^{m+1} (1 - 2wx + x^2))`.
//!
//! The Taylor coefficient of order `n >= 1` is `sum_k C(n-k+m, m) T_k(w) - m`
//! and order 0 vanishes; nonnegative coefficients with radius of convergence
//! 1 certify absolute monotonicity on (0,1) at the verified orders.

use crate::hp::Hp;
use crate::rat::{rint, Rat};
use crate::sums::binom;
use crate::Error;
use num_traits::{One, Signed, Zero};

/// Rational coefficient stream truncated at order `N` (orders `0..=N`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least order 0");
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }
}

/// Coefficients of `1/(1-x)^{m+1}`: order `n` is `C(n+m, m)`.
pub fn series_lambda(m: u32, order: usize) -> PowerSeries {
    let coeffs = (0..=order)
        .map(|n| Rat::from_integer(binom(n as u64 + m as u64, m as u64)))
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

/// Coefficients of `sum cos(n*theta) x^n` with `cos(theta) = omega`:
/// order `n` is `T_n(omega)`, generated by the Chebyshev recurrence.
pub fn series_phi(omega: &Rat, order: usize) -> Result<PowerSeries, Error> {
    if omega.abs() > Rat::one() {
        return Err(Error::OmegaOutOfRange(omega.to_string()));
    }
    let mut coeffs = Vec::with_capacity(order + 1);
    coeffs.push(Rat::one());
    if order >= 1 {
        coeffs.push(omega.clone());
    }
    let two_omega = omega * rint(2);
    for n in 2..=order {
        let next = &two_omega * &coeffs[n - 1] - &coeffs[n - 2];
        coeffs.push(next);
    }
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// Truncated Cauchy product; both inputs must share the truncation order.
pub fn cauchy_product(a: &PowerSeries, b: &PowerSeries) -> Result<PowerSeries, Error> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    let n = a.order();
    let coeffs = (0..=n)
        .map(|i| {
            let mut acc = Rat::zero();
            for k in 0..=i {
                acc = acc + a.coeff(k) * b.coeff(i - k);
            }
            acc
        })
        .collect();
    Ok(PowerSeries::from_coeffs(coeffs))
}

/// Parameters of the family: integer `m >= 1` and `omega` in `[-1, 1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WParams {
    pub m: u32,
    pub omega: Rat,
}

impl WParams {
    pub fn new(m: u32, omega: Rat) -> Result<Self, Error> {
        if m < 1 {
            return Err(Error::InvalidParams {
                family: "W".into(),
                reason: "m must be >= 1".into(),
            });
        }
        if omega.abs() > Rat::one() {
            return Err(Error::OmegaOutOfRange(omega.to_string()));
        }
        Ok(WParams { m, omega })
    }
}

/// Exact Taylor coefficients of `W` up to the truncation order.
pub fn w_coefficients(p: &WParams, order: usize) -> PowerSeries {
    let lambda = series_lambda(p.m, order);
    let phi = series_phi(&p.omega, order).expect("validated omega");
    let prod = cauchy_product(&lambda, &phi).expect("equal orders");
    let m_rat = rint(p.m as i64);
    let coeffs = prod
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, c)| {
            if n == 0 {
                Rat::zero() // m - 1 - m + 1
            } else {
                c - &m_rat
            }
        })
        .collect();
    PowerSeries::from_coeffs(coeffs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmVerdict {
    pub pass: bool,
    pub first_negative: Option<usize>,
    pub verified_order: usize,
}

/// Coefficient-level absolute monotonicity: all orders `0..=N` nonnegative.
/// Orders beyond the truncation are unverified and reported as such.
pub fn check_absolute_monotonicity(p: &WParams, order: usize) -> AmVerdict {
    let coeffs = w_coefficients(p, order);
    let first_negative = coeffs.coeffs().iter().position(|c| c.is_negative());
    AmVerdict {
        pass: first_negative.is_none(),
        first_negative,
        verified_order: order,
    }
}

/// Detector used for sanity tests: first negative coefficient of an
/// arbitrary series.
pub fn first_negative_index(s: &PowerSeries) -> Option<usize> {
    s.coeffs().iter().position(|c| c.is_negative())
}

/// Closed-form evaluation of `W` at high precision.
pub fn w_closed_form(p: &WParams, x: &Hp) -> Hp {
    let prec = x.precision();
    let one = Hp::from_i64(1, prec);
    let m_hp = Hp::from_i64(p.m as i64, prec);
    let omega = Hp::from_rat(&p.omega, prec);
    let one_minus_x = one.sub(x);
    let quad = one
        .sub(&Hp::from_i64(2, prec).mul(&omega).mul(x))
        .add(&x.mul(x));
    let numer = one.sub(&omega.mul(x));
    m_hp.sub(&one)
        .sub(&m_hp.div(&one_minus_x))
        .add(&numer.div(&one_minus_x.powi(p.m as usize + 1).mul(&quad)))
}

#[derive(Debug, Clone)]
pub struct SuperadditivityReport {
    pub pass: bool,
    pub samples: usize,
    pub worst_slack: f64,
    pub worst_point: (f64, f64),
}

/// Sampled check of `W(x) + W(y) <= W(x+y)` for `x, y >= 0`, `x + y < 1`.
/// Stratified: extra density near the blow-up boundary `x + y -> 1`, where
/// slack is smallest.
pub fn check_superadditive(p: &WParams, samples: usize, precision_bits: usize) -> SuperadditivityReport {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed + p.m as u64);
    let mut worst_slack = f64::INFINITY;
    let mut worst_point = (0.0, 0.0);
    let mut pass = true;
    let tol = Hp::pow10_neg(20, precision_bits);
    for i in 0..samples {
        // half the budget uniform, half pushed toward x + y -> 1
        let (sx, sy) = if i % 2 == 0 {
            let sx: f64 = rng.gen_range(0.0..1.0);
            let sy: f64 = rng.gen_range(0.0..(1.0 - sx));
            (sx, sy)
        } else {
            let total: f64 = 1.0 - 1e-6 * 10f64.powf(rng.gen_range(0.0..4.0));
            let frac: f64 = rng.gen_range(0.0..1.0);
            (total * frac, total * (1.0 - frac))
        };
        let sum = sx + sy;
        if sum >= 1.0 - 1e-6 {
            continue;
        }
        let x = Hp::from_f64(sx, precision_bits);
        let y = Hp::from_f64(sy, precision_bits);
        let slack = w_closed_form(p, &x.add(&y))
            .sub(&w_closed_form(p, &x))
            .sub(&w_closed_form(p, &y));
        let slack_f = slack.to_f64();
        if slack_f < worst_slack {
            worst_slack = slack_f;
            worst_point = (sx, sy);
        }
        if slack.add(&tol).is_negative() {
            pass = false;
        }
    }
    SuperadditivityReport {
        pass,
        samples,
        worst_slack,
        worst_point,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn lambda_coefficients() {
        assert_eq!(
            series_lambda(1, 3).coeffs(),
            &[rint(1), rint(2), rint(3), rint(4)]
        );
        assert!(series_lambda(0, 5).coeffs().iter().all(|c| c.is_one()));
        assert_eq!(series_lambda(2, 4).coeff(4), &rint(15));
    }

    #[test]
    fn phi_coefficients() {
        assert!(series_phi(&rint(1), 6).unwrap().coeffs().iter().all(|c| c.is_one()));
        let alt = series_phi(&rint(-1), 4).unwrap();
        assert_eq!(alt.coeffs(), &[rint(1), rint(-1), rint(1), rint(-1), rint(1)]);
        let zero = series_phi(&rint(0), 4).unwrap();
        assert_eq!(zero.coeffs(), &[rint(1), rint(0), rint(-1), rint(0), rint(1)]);
        assert!(series_phi(&rint(2), 4).is_err());
    }

    #[test]
    fn phi_satisfies_chebyshev_recurrence() {
        let omega = rat(3, 7);
        let s = series_phi(&omega, 32).unwrap();
        for n in 1..32 {
            let lhs = s.coeff(n + 1).clone();
            let rhs = &omega * rint(2) * s.coeff(n) - s.coeff(n - 1);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn cauchy_product_cases() {
        let geo = series_lambda(0, 5);
        let sq = cauchy_product(&geo, &geo).unwrap();
        for (n, c) in sq.coeffs().iter().enumerate() {
            assert_eq!(c, &rint(n as i64 + 1));
        }
        let mut unit = vec![rint(0); 6];
        unit[0] = rint(1);
        let unit = PowerSeries::from_coeffs(unit);
        assert_eq!(cauchy_product(&geo, &unit).unwrap(), geo);
        // lambda_1 * phi_1 = (1-x)^{-3}: order-2 coefficient is C(4,2) = 6
        let p = cauchy_product(&series_lambda(1, 4), &series_phi(&rint(1), 4).unwrap()).unwrap();
        assert_eq!(p.coeff(2), &rint(6));
        assert!(cauchy_product(&geo, &series_lambda(0, 9)).is_err());
    }

    #[test]
    fn w_coefficients_closed_cases() {
        // m=1, omega=1: c_n = (n+1)(n+2)/2 - 1
        let p = WParams::new(1, rint(1)).unwrap();
        let c = w_coefficients(&p, 12);
        for n in 1..=12i64 {
            assert_eq!(c.coeff(n as usize), &rat((n + 1) * (n + 2) / 2 - 1, 1));
        }
        assert_eq!(c.coeff(0), &rint(0));
        assert_eq!(c.coeff(1), &rint(2));
        // m=1, omega=-1, n=1: 2*1 + 1*(-1) - 1 = 0
        let p = WParams::new(1, rint(-1)).unwrap();
        assert_eq!(w_coefficients(&p, 4).coeff(1), &rint(0));
        // coefficient 0 always vanishes
        for m in 1..=6 {
            let p = WParams::new(m, rat(-3, 5)).unwrap();
            assert_eq!(w_coefficients(&p, 3).coeff(0), &rint(0));
        }
    }

    #[test]
    fn am_verdicts() {
        let p = WParams::new(3, rat(1, 2)).unwrap();
        let v = check_absolute_monotonicity(&p, 200);
        assert!(v.pass);
        // injected negative is detected at its index
        let mut coeffs = w_coefficients(&p, 20).coeffs().to_vec();
        coeffs[13] = rint(-1);
        assert_eq!(first_negative_index(&PowerSeries::from_coeffs(coeffs)), Some(13));
    }

    #[test]
    fn superadditivity_boundary_equality() {
        // x = 0: W(0) = 0, so slack is exactly W(y) - W(y) = 0
        let p = WParams::new(2, rint(0)).unwrap();
        let w0 = w_closed_form(&p, &Hp::zero(128));
        assert!(w0.abs().cmp(&Hp::pow10_neg(30, 128)).is_lt());
        let r = check_superadditive(&p, 500, 128);
        assert!(r.pass, "worst slack {}", r.worst_slack);
    }
}

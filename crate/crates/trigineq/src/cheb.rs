//! Chebyshev polynomials and the half-angle algebraic form.
//!
//! Every trigonometric sum in the catalog is canonicalized to harmonics
//! `j * x/2`. With `u = x/2` and `c = cos(u)`:
//!
//! - `cos(j*u)` maps to `T_j(c)`,
//! - `sin(j*u)` maps to `sin(u) * U_{j-1}(c)`,
//!
//! so each sum becomes `P(c) + sin(u) * Q(c)`. On `x` in `(0, 2*pi)` the
//! factor `sin(u)` is positive, which makes single-part forms sign-equivalent
//! to a polynomial on a rational `c`-interval. For pure integer-harmonic sums
//! the `c`-polynomials are even/odd and can be re-expressed in `t = cos(x) =
//! 2c^2 - 1`, the variable the Theorem 5 root-location statements live in.

use crate::poly::Poly;
use crate::rat::{rat, rint, Rat};
use crate::sums::{Kind, TrigSum};
use crate::Error;
use num_traits::{One, Zero};
use std::fmt;

/// Table of Chebyshev polynomials T_0..T_K and U_0..U_K.
pub struct ChebTable {
    t: Vec<Poly>,
    u: Vec<Poly>,
}

impl ChebTable {
    pub fn with_capacity(k: usize) -> Self {
        let two_x = Poly::from_i64(&[0, 2]);
        let mut t = Vec::with_capacity(k + 1);
        let mut u = Vec::with_capacity(k + 1);
        t.push(Poly::one());
        u.push(Poly::one());
        if k >= 1 {
            t.push(Poly::x());
            u.push(two_x.clone());
        }
        for i in 2..=k {
            t.push(&(&two_x * &t[i - 1]) - &t[i - 2]);
            u.push(&(&two_x * &u[i - 1]) - &u[i - 2]);
        }
        ChebTable { t, u }
    }

    pub fn capacity(&self) -> usize {
        self.t.len() - 1
    }

    /// Extend the table so indices up to `k` are available.
    pub fn grow_to(&mut self, k: usize) {
        let two_x = Poly::from_i64(&[0, 2]);
        if self.t.len() == 1 && k >= 1 {
            self.t.push(Poly::x());
            self.u.push(two_x.clone());
        }
        for i in self.t.len()..=k {
            self.t.push(&(&two_x * &self.t[i - 1]) - &self.t[i - 2]);
            self.u.push(&(&two_x * &self.u[i - 1]) - &self.u[i - 2]);
        }
    }

    /// T_k with T_k(cos theta) = cos(k theta).
    pub fn t(&self, k: usize) -> &Poly {
        &self.t[k]
    }

    /// U_k with U_k(cos theta) * sin theta = sin((k+1) theta).
    pub fn u(&self, k: usize) -> &Poly {
        &self.u[k]
    }
}

/// Standalone T_k.
pub fn cheb_t(k: usize) -> Poly {
    ChebTable::with_capacity(k).t(k).clone()
}

/// Standalone U_k.
pub fn cheb_u(k: usize) -> Poly {
    ChebTable::with_capacity(k).u(k).clone()
}

/// `P(c) + sin(u) * Q(c)` with `c = cos(u)`, `u = x/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfAngleForm {
    pub cos_part: Poly,
    pub sin_part: Poly,
}

impl HalfAngleForm {
    pub fn eval(&self, c: &Rat) -> (Rat, Rat) {
        (self.cos_part.eval(c), self.sin_part.eval(c))
    }

    /// For a pure integer-harmonic cosine sum the `c`-polynomial is even;
    /// rewrite it in `t = cos(x) = 2c^2 - 1`. `None` if odd terms appear.
    pub fn cos_part_in_t(&self) -> Option<Poly> {
        even_in_t(&self.cos_part)
    }

    /// For a pure integer-harmonic sine sum, `sin(u) * Q(c) = sin(x) * R(t)`
    /// with `Q(c) = 2c * R(2c^2 - 1)`. Returns `R`, or `None` if `Q` has
    /// even terms.
    pub fn sin_part_in_t(&self) -> Option<Poly> {
        if self.sin_part.is_zero() {
            return Some(Poly::zero());
        }
        let coeffs = self.sin_part.coeffs();
        if coeffs.iter().step_by(2).any(|c| !c.is_zero()) {
            return None;
        }
        let shifted = Poly::from_coeffs(coeffs.iter().skip(1).cloned().collect());
        even_in_t(&shifted).map(|p| p.scale(&rat(1, 2)))
    }
}

/// Substitute `c^2 = (t+1)/2` into an even polynomial in `c`.
fn even_in_t(p: &Poly) -> Option<Poly> {
    if p.coeffs().iter().skip(1).step_by(2).any(|c| !c.is_zero()) {
        return None;
    }
    let in_csq = Poly::from_coeffs(p.coeffs().iter().step_by(2).cloned().collect());
    let half_shift = Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]);
    Some(in_csq.compose(&half_shift))
}

thread_local! {
    static SHARED_TABLE: std::cell::RefCell<ChebTable> =
        std::cell::RefCell::new(ChebTable::with_capacity(8));
}

/// Convert a canonical sum to its half-angle form, exactly. Chebyshev rows
/// come from a growing per-thread table so repeated conversions do not
/// rebuild them.
pub fn to_algebraic(s: &TrigSum) -> HalfAngleForm {
    SHARED_TABLE.with(|cell| {
        let mut table = cell.borrow_mut();
        table.grow_to(s.max_harmonic() as usize);
        let mut cos_part = Poly::constant(s.constant().clone());
        let mut sin_part = Poly::zero();
        for (j, coeff, kind) in s.terms() {
            match kind {
                Kind::Cos => cos_part = &cos_part + &table.t(j as usize).scale(coeff),
                Kind::Sin => sin_part = &sin_part + &table.u(j as usize - 1).scale(coeff),
            }
        }
        HalfAngleForm { cos_part, sin_part }
    })
}

/// An exact angle, stored as a rational multiple of pi.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Angle {
    pi_mult: Rat,
}

impl Angle {
    pub fn pi_times(q: Rat) -> Self {
        Angle { pi_mult: q }
    }

    pub fn zero() -> Self {
        Angle::pi_times(Rat::zero())
    }

    pub fn pi() -> Self {
        Angle::pi_times(Rat::one())
    }

    pub fn two_pi() -> Self {
        Angle::pi_times(rint(2))
    }

    pub fn two_pi_thirds() -> Self {
        Angle::pi_times(rat(2, 3))
    }

    pub fn pi_mult(&self) -> &Rat {
        &self.pi_mult
    }

    /// cos of the angle, when rational (Niven's theorem dictionary).
    pub fn cos(&self) -> Option<Rat> {
        rational_cos(&self.pi_mult)
    }

    /// cos of half the angle, when rational.
    pub fn cos_half(&self) -> Option<Rat> {
        rational_cos(&(&self.pi_mult / rint(2)))
    }

    pub fn to_hp(&self, p: usize) -> crate::hp::Hp {
        crate::hp::Hp::pi(p).mul(&crate::hp::Hp::from_rat(&self.pi_mult, p))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        std::f64::consts::PI * self.pi_mult.to_f64().unwrap_or(f64::NAN)
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pi_mult.is_zero() {
            return write!(f, "0");
        }
        if self.pi_mult.is_one() {
            return write!(f, "pi");
        }
        if self.pi_mult.denom().is_one() {
            return write!(f, "{}pi", self.pi_mult.numer());
        }
        write!(f, "{}pi/{}", self.pi_mult.numer(), self.pi_mult.denom())
    }
}

impl Default for Angle {
    fn default() -> Self {
        Angle::zero()
    }
}

/// cos(q * pi) when rational. By Niven's theorem the only candidates are
/// q equivalent to 0, 1/3, 1/2, 2/3, 1 modulo symmetry.
pub fn rational_cos(q: &Rat) -> Option<Rat> {
    // reduce modulo 2 into [0, 2), then fold by cos(2pi - x) = cos(x)
    let two = rint(2);
    let mut q = q - (q / &two).floor() * &two;
    if q > Rat::one() {
        q = &two - &q;
    }
    let known = [
        (rint(0), rint(1)),
        (rat(1, 3), rat(1, 2)),
        (rat(1, 2), rint(0)),
        (rat(2, 3), rat(-1, 2)),
        (rint(1), rint(-1)),
    ];
    known.into_iter().find(|(k, _)| *k == q).map(|(_, v)| v)
}

/// Image of `x in (a, b)` under `c = cos(x/2)`, endpoints in increasing
/// order (the map is decreasing). Errors when either half-cosine is
/// irrational; the caller must then use the float path.
pub fn x_interval_to_c(a: &Angle, b: &Angle) -> Result<(Rat, Rat), Error> {
    let ca = a
        .cos_half()
        .ok_or_else(|| Error::IrrationalAngle(a.to_string()))?;
    let cb = b
        .cos_half()
        .ok_or_else(|| Error::IrrationalAngle(b.to_string()))?;
    Ok(if cb < ca { (cb, ca) } else { (ca, cb) })
}

/// Same map in the full-angle variable `t = cos(x)`.
pub fn x_interval_to_t(a: &Angle, b: &Angle) -> Result<(Rat, Rat), Error> {
    let ta = a
        .cos()
        .ok_or_else(|| Error::IrrationalAngle(a.to_string()))?;
    let tb = b
        .cos()
        .ok_or_else(|| Error::IrrationalAngle(b.to_string()))?;
    Ok(if tb < ta { (tb, ta) } else { (ta, tb) })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_order_polynomials() {
        assert_eq!(cheb_t(0), Poly::one());
        assert_eq!(cheb_t(2), Poly::from_i64(&[-1, 0, 2]));
        assert_eq!(cheb_t(3), Poly::from_i64(&[0, -3, 0, 4]));
        assert_eq!(cheb_u(0), Poly::one());
        assert_eq!(cheb_u(1), Poly::from_i64(&[0, 2]));
        assert_eq!(cheb_u(2), Poly::from_i64(&[-1, 0, 4]));
    }

    #[test]
    fn degrees_and_leading_coefficients() {
        let table = ChebTable::with_capacity(16);
        for k in 1..=16usize {
            assert_eq!(table.t(k).degree(), Some(k));
            assert_eq!(table.u(k).degree(), Some(k));
            let two_pow = |e: u32| Rat::from_integer(num_bigint::BigInt::from(2u8).pow(e));
            assert_eq!(*table.t(k).leading().unwrap(), two_pow(k as u32 - 1));
            assert_eq!(*table.u(k).leading().unwrap(), two_pow(k as u32));
        }
    }

    #[test]
    fn interval_maps() {
        let (lo, hi) = x_interval_to_c(&Angle::zero(), &Angle::pi()).unwrap();
        assert_eq!((lo, hi), (rint(0), rint(1)));
        let (lo, hi) = x_interval_to_c(&Angle::zero(), &Angle::two_pi()).unwrap();
        assert_eq!((lo, hi), (rint(-1), rint(1)));
        let (lo, hi) = x_interval_to_t(&Angle::zero(), &Angle::two_pi_thirds()).unwrap();
        assert_eq!((lo, hi), (rat(-1, 2), rint(1)));
        // pi/3 has an irrational half-cosine
        assert!(x_interval_to_c(&Angle::zero(), &Angle::pi_times(rat(1, 3))).is_err());
    }

    #[test]
    fn sin_x_converts_via_double_angle() {
        // sin(x) = 2 sin(x/2) cos(x/2): sin_part = 2c
        let mut s = TrigSum::new();
        s.add_term(Kind::Sin, 2, rint(1));
        let form = to_algebraic(&s);
        assert!(form.cos_part.is_zero());
        assert_eq!(form.sin_part, Poly::from_i64(&[0, 2]));
    }

    #[test]
    fn even_odd_t_rewrites() {
        // cos(x) -> T_2(c) = 2c^2 - 1, in t: just t
        let mut s = TrigSum::new();
        s.add_term(Kind::Cos, 2, rint(1));
        let form = to_algebraic(&s);
        assert_eq!(form.cos_part_in_t().unwrap(), Poly::x());
        // sin(2x) -> sin(x) * 2t
        let mut s = TrigSum::new();
        s.add_term(Kind::Sin, 4, rint(1));
        let form = to_algebraic(&s);
        assert_eq!(form.sin_part_in_t().unwrap(), Poly::from_i64(&[0, 2]));
    }
}

//! Catalog of trigonometric sums.
//!
//! All sums are canonicalized to half-angle harmonics: a term with harmonic
//! `j` means `sin(j*x/2)` or `cos(j*x/2)`. Integer-harmonic families use even
//! `j`, the `(k+1/2)x` families odd `j`, so one representation covers both
//! styles. A `cos` term with harmonic 0 folds into the constant; a `sin` term
//! with harmonic 0 is forbidden.

use crate::cheb::to_algebraic;
use crate::hp::Hp;
use crate::rat::{rat, rat_from_decimal, rint, Rat};
use crate::Error;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Kind {
    Sin,
    Cos,
}

/// Exact binomial coefficient; `k > N` yields 0 by convention.
pub fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

fn binom_rat(n: u64, k: u64) -> Rat {
    Rat::from_integer(binom(n, k))
}

/// A finite trigonometric sum with rational coefficients plus a constant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TrigSum {
    sin: BTreeMap<u32, Rat>,
    cos: BTreeMap<u32, Rat>,
    constant: Rat,
}

impl TrigSum {
    pub fn new() -> Self {
        TrigSum::default()
    }

    pub fn from_constant(c: Rat) -> Self {
        let mut s = TrigSum::new();
        s.constant = c;
        s
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    /// Add `coeff * kind(j * x/2)`. Zero results are pruned.
    pub fn add_term(&mut self, kind: Kind, harmonic: u32, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        if harmonic == 0 {
            match kind {
                Kind::Cos => self.constant = &self.constant + &coeff,
                Kind::Sin => panic!("sin term with harmonic 0"),
            }
            return;
        }
        let map = match kind {
            Kind::Sin => &mut self.sin,
            Kind::Cos => &mut self.cos,
        };
        let entry = map.entry(harmonic).or_insert_with(Rat::zero);
        *entry = &*entry + &coeff;
        if entry.is_zero() {
            map.remove(&harmonic);
        }
    }

    /// Terms in deterministic order: cosines by harmonic, then sines.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rat, Kind)> {
        self.cos
            .iter()
            .map(|(&j, c)| (j, c, Kind::Cos))
            .chain(self.sin.iter().map(|(&j, c)| (j, c, Kind::Sin)))
    }

    pub fn coeff(&self, kind: Kind, harmonic: u32) -> Rat {
        let map = match kind {
            Kind::Sin => &self.sin,
            Kind::Cos => &self.cos,
        };
        map.get(&harmonic).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.sin.is_empty() && self.cos.is_empty() && self.constant.is_zero()
    }

    pub fn max_harmonic(&self) -> u32 {
        let ms = self.sin.keys().next_back().copied().unwrap_or(0);
        let mc = self.cos.keys().next_back().copied().unwrap_or(0);
        ms.max(mc)
    }

    /// True when all harmonics are even, i.e. the sum lives in the full
    /// angle x.
    pub fn integer_harmonics_only(&self) -> bool {
        self.sin.keys().chain(self.cos.keys()).all(|j| j % 2 == 0)
    }

    pub fn add(&self, other: &TrigSum) -> TrigSum {
        let mut out = self.clone();
        out.constant = &out.constant + &other.constant;
        for (j, c, kind) in other.terms() {
            out.add_term(kind, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &TrigSum) -> TrigSum {
        self.add(&other.scale(&rint(-1)))
    }

    pub fn scale(&self, s: &Rat) -> TrigSum {
        if s.is_zero() {
            return TrigSum::new();
        }
        let mut out = TrigSum::new();
        out.constant = &self.constant * s;
        for (j, c, kind) in self.terms() {
            out.add_term(kind, j, c * s);
        }
        out
    }

    /// Exact product via the product-to-sum identities.
    pub fn mul(&self, other: &TrigSum) -> TrigSum {
        let mut out = TrigSum::new();
        // treat the constant as a cos term with harmonic 0
        let expand = |s: &TrigSum| -> Vec<(u32, Rat, Kind)> {
            let mut v: Vec<(u32, Rat, Kind)> =
                s.terms().map(|(j, c, k)| (j, c.clone(), k)).collect();
            if !s.constant.is_zero() {
                v.push((0, s.constant.clone(), Kind::Cos));
            }
            v
        };
        let half = rat(1, 2);
        for (ja, ca, ka) in expand(self) {
            for (jb, cb, kb) in expand(other) {
                let c = &(&ca * &cb) * &half;
                let sum = ja + jb;
                let diff = ja.abs_diff(jb);
                match (ka, kb) {
                    (Kind::Cos, Kind::Cos) => {
                        out.add_term(Kind::Cos, diff, c.clone());
                        out.add_term(Kind::Cos, sum, c);
                    }
                    (Kind::Sin, Kind::Sin) => {
                        out.add_term(Kind::Cos, diff, c.clone());
                        out.add_term(Kind::Cos, sum, -c);
                    }
                    (Kind::Sin, Kind::Cos) => {
                        out.add_term(Kind::Sin, sum, c.clone());
                        // sin((ja-jb)u) = sign * sin(|ja-jb| u)
                        if diff != 0 {
                            let signed = if ja >= jb { c } else { -c };
                            out.add_term(Kind::Sin, diff, signed);
                        }
                    }
                    (Kind::Cos, Kind::Sin) => {
                        out.add_term(Kind::Sin, sum, c.clone());
                        if diff != 0 {
                            let signed = if jb >= ja { c } else { -c };
                            out.add_term(Kind::Sin, diff, signed);
                        }
                    }
                }
            }
        }
        out
    }

    /// Term-wise derivative in x: d/dx sin(j x/2) = (j/2) cos(j x/2), etc.
    pub fn derivative(&self) -> TrigSum {
        let mut out = TrigSum::new();
        for (j, c, kind) in self.terms() {
            let factor = Rat::new(BigInt::from(j), BigInt::from(2u8));
            match kind {
                Kind::Sin => out.add_term(Kind::Cos, j, c * &factor),
                Kind::Cos => out.add_term(Kind::Sin, j, -(c * &factor)),
            }
        }
        out
    }
}

/// High-precision evaluation at `x`, using the precision carried by `x`
/// plus guard bits for the summation.
pub fn eval_float(s: &TrigSum, x: &Hp) -> Hp {
    let p = x.precision() + 64;
    let half_x = Hp::from_rat(&rat(1, 2), p).mul(x);
    let mut acc = Hp::from_rat(s.constant(), p);
    for (j, c, kind) in s.terms() {
        let arg = half_x.mul(&Hp::from_i64(j as i64, p));
        let f = match kind {
            Kind::Sin => arg.sin(),
            Kind::Cos => arg.cos(),
        };
        acc = acc.add(&f.mul(&Hp::from_rat(c, p)));
    }
    acc
}

/// Evaluate the half-angle form parts at rational `c = cos(x/2)`.
/// Full value is `cos_value + sin(x/2) * sin_u_coeff`.
pub fn eval_exact(s: &TrigSum, c: &Rat) -> (Rat, Rat) {
    to_algebraic(s).eval(c)
}

/// Which catalog family a sum comes from.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub enum FamilyTag {
    A11,
    B12,
    T31,
    U14,
    V15,
    C16,
    D17,
    P10,
    PDiff,
    Theta,
    ThetaDiff,
    S22,
    LN,
    F24,
    G25,
    H26,
    E5,
    Remark2_1,
    Remark2_2,
    Remark2_3,
    Remark2_4,
    TauSigned1,
    TauSigned2,
}

impl FamilyTag {
    pub fn uses_m(self) -> bool {
        matches!(
            self,
            FamilyTag::A11
                | FamilyTag::B12
                | FamilyTag::T31
                | FamilyTag::U14
                | FamilyTag::V15
                | FamilyTag::C16
                | FamilyTag::D17
                | FamilyTag::TauSigned1
                | FamilyTag::TauSigned2
        )
    }

    pub fn parse(s: &str) -> Option<FamilyTag> {
        Some(match s.to_ascii_uppercase().as_str() {
            "A11" => FamilyTag::A11,
            "B12" => FamilyTag::B12,
            "T31" => FamilyTag::T31,
            "U14" => FamilyTag::U14,
            "V15" => FamilyTag::V15,
            "C16" => FamilyTag::C16,
            "D17" => FamilyTag::D17,
            "P10" => FamilyTag::P10,
            "P_DIFF" => FamilyTag::PDiff,
            "THETA" => FamilyTag::Theta,
            "THETA_DIFF" => FamilyTag::ThetaDiff,
            "S22" => FamilyTag::S22,
            "L_N" => FamilyTag::LN,
            "F24" => FamilyTag::F24,
            "G25" => FamilyTag::G25,
            "H26" => FamilyTag::H26,
            "E5" => FamilyTag::E5,
            "REMARK2_1" => FamilyTag::Remark2_1,
            "REMARK2_2" => FamilyTag::Remark2_2,
            "REMARK2_3" => FamilyTag::Remark2_3,
            "REMARK2_4" => FamilyTag::Remark2_4,
            "TAU_SIGNED_1" | "TAU_SIGNED1" => FamilyTag::TauSigned1,
            "TAU_SIGNED_2" | "TAU_SIGNED2" => FamilyTag::TauSigned2,
            _ => return None,
        })
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::A11 => "A11",
            FamilyTag::B12 => "B12",
            FamilyTag::T31 => "T31",
            FamilyTag::U14 => "U14",
            FamilyTag::V15 => "V15",
            FamilyTag::C16 => "C16",
            FamilyTag::D17 => "D17",
            FamilyTag::P10 => "P10",
            FamilyTag::PDiff => "P_DIFF",
            FamilyTag::Theta => "THETA",
            FamilyTag::ThetaDiff => "THETA_DIFF",
            FamilyTag::S22 => "S22",
            FamilyTag::LN => "L_N",
            FamilyTag::F24 => "F24",
            FamilyTag::G25 => "G25",
            FamilyTag::H26 => "H26",
            FamilyTag::E5 => "E5",
            FamilyTag::Remark2_1 => "REMARK2_1",
            FamilyTag::Remark2_2 => "REMARK2_2",
            FamilyTag::Remark2_3 => "REMARK2_3",
            FamilyTag::Remark2_4 => "REMARK2_4",
            FamilyTag::TauSigned1 => "TAU_SIGNED_1",
            FamilyTag::TauSigned2 => "TAU_SIGNED_2",
        };
        f.write_str(s)
    }
}

/// A fully parameterized catalog entry. `m` is ignored by tags that do not
/// take it (validated to 1 there).
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize,
)]
pub struct FamilyId {
    pub tag: FamilyTag,
    pub m: u32,
    pub n: u32,
}

impl FamilyId {
    pub fn new(tag: FamilyTag, m: u32, n: u32) -> Self {
        FamilyId { tag, m, n }
    }

    pub fn no_m(tag: FamilyTag, n: u32) -> Self {
        FamilyId { tag, m: 1, n }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tag.uses_m() {
            write!(f, "{}(m={},n={})", self.tag, self.m, self.n)
        } else {
            write!(f, "{}(n={})", self.tag, self.n)
        }
    }
}

fn invalid(f: &FamilyId, reason: &str) -> Error {
    Error::InvalidParams {
        family: f.to_string(),
        reason: reason.to_string(),
    }
}

/// The `(1.11) - RHS` subtrahend `(4/9)sin x + (4/9)sin 2x + (2/9)sin 3x`.
fn theorem5_minorant() -> TrigSum {
    let mut s = TrigSum::new();
    s.add_term(Kind::Sin, 2, rat(4, 9));
    s.add_term(Kind::Sin, 4, rat(4, 9));
    s.add_term(Kind::Sin, 6, rat(2, 9));
    s
}

/// The Corollary RHS `(2/27)(1 - cos x)(13 + 10 cos x + 4 cos^2 x)`.
pub fn corollary_minorant() -> TrigSum {
    let mut one_minus_cos = TrigSum::from_constant(Rat::one());
    one_minus_cos.add_term(Kind::Cos, 2, rint(-1));
    let mut quad = TrigSum::from_constant(rint(13));
    quad.add_term(Kind::Cos, 2, rint(10));
    let mut cos_x = TrigSum::new();
    cos_x.add_term(Kind::Cos, 2, rint(1));
    let quad = quad.add(&cos_x.mul(&cos_x).scale(&rint(4)));
    one_minus_cos.mul(&quad).scale(&rat(2, 27))
}

fn tau2(k: u32) -> u32 {
    if k % 2 == 0 {
        k / 2
    } else {
        (k - 1) / 2
    }
}

/// Build the canonical sum for a catalog entry.
pub fn build(f: &FamilyId) -> Result<TrigSum, Error> {
    let m = f.m as u64;
    let n = f.n as u64;
    if f.tag.uses_m() && f.m < 1 {
        return Err(invalid(f, "m must be >= 1"));
    }
    if !f.tag.uses_m() && f.m != 1 {
        return Err(invalid(f, "family does not take an m parameter"));
    }
    let needs_positive_n = matches!(
        f.tag,
        FamilyTag::A11
            | FamilyTag::P10
            | FamilyTag::PDiff
            | FamilyTag::Theta
            | FamilyTag::ThetaDiff
            | FamilyTag::S22
            | FamilyTag::LN
            | FamilyTag::F24
            | FamilyTag::G25
            | FamilyTag::H26
    );
    if needs_positive_n && f.n < 1 {
        return Err(invalid(f, "n must be >= 1"));
    }

    let mut s = TrigSum::new();
    match f.tag {
        FamilyTag::A11 => {
            for k in 1..=n {
                s.add_term(Kind::Sin, 2 * k as u32, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::B12 => {
            for k in 0..=n {
                s.add_term(Kind::Cos, 2 * k as u32, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::T31 => {
            s = build(&FamilyId::new(FamilyTag::B12, f.m, f.n))?;
            let gap = binom_rat(n + m, m) * rat(1, 2);
            s = s.sub(&TrigSum::from_constant(binom_rat(n + m, m) - gap));
        }
        FamilyTag::U14 => {
            for k in 0..=n {
                s.add_term(Kind::Cos, 2 * k as u32 + 1, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::V15 => {
            for k in 0..=n {
                s.add_term(Kind::Sin, 2 * k as u32 + 1, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::C16 => {
            for k in (0..=n).step_by(2) {
                s.add_term(Kind::Cos, 2 * k as u32 + 1, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::D17 => {
            for k in (0..=n).step_by(2) {
                s.add_term(Kind::Sin, 2 * k as u32 + 1, binom_rat(n - k + m, m));
            }
        }
        FamilyTag::P10 => {
            for k in 1..=n {
                let c = rint(((n - k + 1) * (n - k + 2) * k) as i64);
                s.add_term(Kind::Sin, 2 * k as u32, c);
            }
        }
        FamilyTag::PDiff => {
            s = build(&FamilyId::no_m(FamilyTag::P10, f.n))?.sub(&theorem5_minorant());
        }
        FamilyTag::Theta => {
            // term-wise antiderivative of P10: coefficient a_k/k on 1 - cos(kx)
            for k in 1..=n {
                let c = rint(((n - k + 1) * (n - k + 2)) as i64);
                s.add_term(Kind::Cos, 2 * k as u32, -c.clone());
                s = s.add(&TrigSum::from_constant(c));
            }
        }
        FamilyTag::ThetaDiff => {
            s = build(&FamilyId::no_m(FamilyTag::Theta, f.n))?.sub(&corollary_minorant());
        }
        FamilyTag::S22 => {
            s.add_term(Kind::Sin, 2, rint((18 * n + 24) as i64));
            s.add_term(Kind::Sin, 2 * (n as u32 + 1), rint(-((9 * n + 27) as i64)));
            s.add_term(Kind::Sin, 2 * (n as u32 + 2), rint((9 * n) as i64));
            s.add_term(Kind::Sin, 8, rint(2));
            s.add_term(Kind::Sin, 10, rint(-1));
        }
        FamilyTag::LN => {
            s.add_term(Kind::Sin, 2, rint((18 * n + 24) as i64));
            s.add_term(Kind::Sin, 1, rint(-(18 * n as i64)));
            s = s.sub(&TrigSum::from_constant(rat_from_decimal("29.1")?));
        }
        // F24, G25, H26 live in the rescaled variable y = t/(n+2); harmonics
        // below are j * y/2.
        FamilyTag::F24 => {
            s.add_term(Kind::Sin, 2, rint(24));
            s.add_term(Kind::Sin, 8, rint(2));
            s.add_term(Kind::Sin, 10, rint(-1));
        }
        FamilyTag::G25 => {
            s.add_term(Kind::Sin, 2, rint(18 * n as i64));
            s.add_term(Kind::Sin, 2 * (n as u32 + 1), rint(-27));
        }
        FamilyTag::H26 => {
            s.add_term(Kind::Sin, 2 * (n as u32 + 2), rint(9 * n as i64));
            s.add_term(Kind::Sin, 2 * (n as u32 + 1), rint(-(9 * n as i64)));
        }
        FamilyTag::E5 => {
            let single = |kind: Kind, j: u32| {
                let mut t = TrigSum::new();
                t.add_term(kind, j, Rat::one());
                t
            };
            let sin_x = single(Kind::Sin, 2);
            let mut inner = sin_x.scale(&rint(2 * (n as i64 + 1)));
            inner = inner.sub(&single(Kind::Sin, 4 * (n as u32 + 1)));
            let first = sin_x.mul(&inner);
            let sin_half = single(Kind::Sin, 1);
            let sin_n1 = single(Kind::Sin, 2 * (n as u32 + 1));
            let second = sin_half
                .mul(&sin_half)
                .mul(&sin_n1.mul(&sin_n1))
                .scale(&rint(4));
            s = first.add(&second);
        }
        FamilyTag::Remark2_1 => s = build(&FamilyId::new(FamilyTag::U14, 1, f.n))?,
        FamilyTag::Remark2_2 => s = build(&FamilyId::new(FamilyTag::V15, 1, f.n))?,
        FamilyTag::Remark2_3 | FamilyTag::Remark2_4 => {
            let kind = if f.tag == FamilyTag::Remark2_3 {
                Kind::Cos
            } else {
                Kind::Sin
            };
            for k in 0..=(n / 2) {
                s.add_term(kind, 4 * k as u32 + 1, rint((n - 2 * k + 1) as i64));
            }
        }
        FamilyTag::TauSigned1 | FamilyTag::TauSigned2 => {
            for k in 0..=n {
                let t = if f.tag == FamilyTag::TauSigned1 {
                    k as u32
                } else {
                    tau2(k as u32)
                };
                let sign = if t % 2 == 0 { 1 } else { -1 };
                let c = Rat::new(BigInt::from(sign) * binom(n - k + m, m), (2 * k + 1).into());
                s.add_term(Kind::Sin, 2 * (2 * k as u32 + 1), c);
            }
        }
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::Hp;

    #[test]
    fn binom_examples() {
        assert_eq!(binom(5, 2), BigInt::from(10));
        assert_eq!(binom(9, 0), BigInt::one());
        assert_eq!(binom(3, 7), BigInt::zero());
        // Pascal
        assert_eq!(binom(7, 3), binom(6, 3) + binom(6, 2));
        assert_eq!(binom(7, 3), BigInt::from(35));
    }

    #[test]
    fn b12_n1_is_one_plus_cos() {
        // B_1(m,x) - m = 1 + cos(x), independent of m
        for m in [1u32, 3, 9] {
            let s = build(&FamilyId::new(FamilyTag::B12, m, 1)).unwrap();
            let shifted = s.sub(&TrigSum::from_constant(rint(m as i64)));
            assert_eq!(shifted.constant(), &rint(1));
            assert_eq!(shifted.coeff(Kind::Cos, 2), rint(1));
            assert_eq!(shifted.terms().count(), 1);
        }
    }

    #[test]
    fn p10_n1_single_term() {
        let s = build(&FamilyId::no_m(FamilyTag::P10, 1)).unwrap();
        assert_eq!(s.coeff(Kind::Sin, 2), rint(2));
        assert_eq!(s.terms().count(), 1);
    }

    #[test]
    fn pdiff_low_coefficients() {
        // a_1 = n(n+1) - 4/9, a_2 = 2(n-1)n - 4/9, a_3 = 3(n-2)(n-1) - 2/9
        for n in [3u32, 5, 12] {
            let s = build(&FamilyId::no_m(FamilyTag::PDiff, n)).unwrap();
            let nn = n as i64;
            assert_eq!(s.coeff(Kind::Sin, 2), rint(nn * (nn + 1)) - rat(4, 9));
            assert_eq!(s.coeff(Kind::Sin, 4), rint(2 * (nn - 1) * nn) - rat(4, 9));
            assert_eq!(
                s.coeff(Kind::Sin, 6),
                rint(3 * (nn - 2) * (nn - 1)) - rat(2, 9)
            );
        }
    }

    #[test]
    fn s22_at_pi_half_is_104() {
        let s = build(&FamilyId::no_m(FamilyTag::S22, 2)).unwrap();
        let x = Hp::pi(192).div(&Hp::from_i64(2, 192));
        let v = eval_float(&s, &x);
        let err = v.sub(&Hp::from_i64(104, 192)).abs();
        assert!(err.cmp(&Hp::pow10_neg(40, 192)).is_lt());
    }

    #[test]
    fn sin_only_sums_vanish_at_zero() {
        let s = build(&FamilyId::new(FamilyTag::V15, 2, 5)).unwrap();
        let v = eval_float(&s, &Hp::zero(128));
        assert!(v.is_zero());
    }

    #[test]
    fn v15_m1_n0_at_pi() {
        let s = build(&FamilyId::new(FamilyTag::V15, 1, 0)).unwrap();
        assert_eq!(s.coeff(Kind::Sin, 1), rint(1));
        let v = eval_float(&s, &Hp::pi(128));
        let err = v.sub(&Hp::from_i64(1, 128)).abs();
        assert!(err.cmp(&Hp::pow10_neg(30, 128)).is_lt());
    }

    #[test]
    fn eval_exact_b12() {
        // B_1(3,x) = 4 + cos(x); at t = 2c^2-1 = 1/2 the value is 9/2
        let s = build(&FamilyId::new(FamilyTag::B12, 3, 1)).unwrap();
        // c with 2c^2 - 1 = 1/2  =>  c^2 = 3/4; use the half-angle form in t
        // instead: pick c = sqrt(3)/2 irrational, so evaluate via cos_part
        // substitution check at a rational c and the defining identity.
        let form = crate::cheb::to_algebraic(&s);
        let in_t = form.cos_part_in_t().unwrap();
        assert_eq!(in_t.eval(&rat(1, 2)), rat(9, 2));
        assert!(form.sin_part.is_zero());
    }

    #[test]
    fn pdiff_sin_coeff_vanishes_at_t_neg_half_for_n3() {
        let s = build(&FamilyId::no_m(FamilyTag::PDiff, 3)).unwrap();
        let r = crate::cheb::to_algebraic(&s).sin_part_in_t().unwrap();
        assert_eq!(r.eval(&rat(-1, 2)), rint(0));
        // R_3 = (52/9)(1+2t)^2
        let expect = Poly::from_coeffs(vec![rat(52, 9), rat(208, 9), rat(208, 9)]);
        assert_eq!(r, expect);
    }

    use crate::poly::Poly;

    #[test]
    fn zero_sum_eval_exact() {
        let s = TrigSum::new();
        assert_eq!(eval_exact(&s, &rat(1, 3)), (rint(0), rint(0)));
    }

    #[test]
    fn invalid_params_are_named() {
        let err = build(&FamilyId::new(FamilyTag::A11, 0, 3)).unwrap_err();
        assert!(err.to_string().contains("m must be >= 1"));
        let err = build(&FamilyId::no_m(FamilyTag::P10, 0)).unwrap_err();
        assert!(err.to_string().contains("n must be >= 1"));
    }

    #[test]
    fn tau2_sign_pattern() {
        let signs: Vec<i32> = (0..4).map(|k| if tau2(k) % 2 == 0 { 1 } else { -1 }).collect();
        assert_eq!(signs, vec![1, 1, -1, -1]);
    }

    #[test]
    fn product_rule_cross_check() {
        // sin(x/2)*cos(x/2) = sin(x)/2
        let mut a = TrigSum::new();
        a.add_term(Kind::Sin, 1, rint(1));
        let mut b = TrigSum::new();
        b.add_term(Kind::Cos, 1, rint(1));
        let p = a.mul(&b);
        assert_eq!(p.coeff(Kind::Sin, 2), rat(1, 2));
        assert_eq!(p.terms().count(), 1);
        assert!(p.constant().is_zero());
    }

    #[test]
    fn derivative_matches_hand_computation() {
        // d/dx [cos(x)] = -sin(x)
        let mut a = TrigSum::new();
        a.add_term(Kind::Cos, 2, rint(1));
        let d = a.derivative();
        assert_eq!(d.coeff(Kind::Sin, 2), rint(-1));
    }
}

//! High-precision floating point evaluation, the oracle path.
//!
//! Thin wrapper around `astro_float::BigFloat` that carries the working
//! precision, rounds to nearest even, and keeps the shared constants cache
//! in a thread local. Default precision is 128 fractional bits; lemma checks
//! run at 192+ bits.

use astro_float::{BigFloat, Consts, RoundingMode, Sign};
use num_bigint::BigInt;
use num_traits::Signed;
use std::cell::RefCell;
use std::cmp::Ordering;

use crate::rat::Rat;

pub const DEFAULT_PRECISION_BITS: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constants cache"));
}

/// A high-precision value together with its working precision in bits.
#[derive(Clone, Debug)]
pub struct Hp {
    v: BigFloat,
    p: usize,
}

impl Hp {
    pub fn zero(p: usize) -> Self {
        Hp {
            v: BigFloat::from_i64(0, p),
            p,
        }
    }

    pub fn from_i64(n: i64, p: usize) -> Self {
        Hp {
            v: BigFloat::from_i64(n, p),
            p,
        }
    }

    pub fn from_f64(f: f64, p: usize) -> Self {
        Hp {
            v: BigFloat::from_f64(f, p),
            p,
        }
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        let digits = n.magnitude().to_u64_digits();
        if digits.is_empty() {
            return Hp::zero(p);
        }
        let sign = if n.is_negative() { Sign::Neg } else { Sign::Pos };
        let e = (64 * digits.len()) as astro_float::Exponent;
        let mut v = BigFloat::from_words(&digits, sign, e);
        let bits = 64 * digits.len();
        if bits > p {
            // keep the integer exact; precision widens to the integer size
            return Hp { v, p: bits };
        }
        v.set_precision(p, RM).expect("widening precision");
        Hp { v, p }
    }

    pub fn from_rat(r: &Rat, p: usize) -> Self {
        let num = Hp::from_bigint(r.numer(), p);
        let den = Hp::from_bigint(r.denom(), p);
        num.div(&den)
    }

    pub fn pi(p: usize) -> Self {
        let v = CONSTS.with(|cc| cc.borrow_mut().pi(p, RM));
        Hp { v, p }
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    fn wrap(&self, v: BigFloat) -> Hp {
        Hp { v, p: self.p }
    }

    pub fn add(&self, o: &Hp) -> Hp {
        let p = self.p.max(o.p);
        Hp {
            v: self.v.add(&o.v, p, RM),
            p,
        }
    }

    pub fn sub(&self, o: &Hp) -> Hp {
        let p = self.p.max(o.p);
        Hp {
            v: self.v.sub(&o.v, p, RM),
            p,
        }
    }

    pub fn mul(&self, o: &Hp) -> Hp {
        let p = self.p.max(o.p);
        Hp {
            v: self.v.mul(&o.v, p, RM),
            p,
        }
    }

    pub fn div(&self, o: &Hp) -> Hp {
        let p = self.p.max(o.p);
        Hp {
            v: self.v.div(&o.v, p, RM),
            p,
        }
    }

    pub fn neg(&self) -> Hp {
        self.wrap(self.v.neg())
    }

    pub fn abs(&self) -> Hp {
        self.wrap(self.v.abs())
    }

    pub fn powi(&self, n: usize) -> Hp {
        self.wrap(self.v.powi(n, self.p, RM))
    }

    pub fn sqrt(&self) -> Hp {
        self.wrap(self.v.sqrt(self.p, RM))
    }

    pub fn sin(&self) -> Hp {
        let v = CONSTS.with(|cc| self.v.sin(self.p, RM, &mut cc.borrow_mut()));
        self.wrap(v)
    }

    pub fn acos(&self) -> Hp {
        let v = CONSTS.with(|cc| self.v.acos(self.p, RM, &mut cc.borrow_mut()));
        self.wrap(v)
    }

    pub fn cos(&self) -> Hp {
        let v = CONSTS.with(|cc| self.v.cos(self.p, RM, &mut cc.borrow_mut()));
        self.wrap(v)
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.v.is_positive() && !self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative() && !self.v.is_zero()
    }

    pub fn cmp(&self, o: &Hp) -> Ordering {
        match self.v.cmp(&o.v) {
            Some(s) if s < 0 => Ordering::Less,
            Some(s) if s > 0 => Ordering::Greater,
            Some(_) => Ordering::Equal,
            None => panic!("NaN in high-precision comparison"),
        }
    }

    pub fn to_f64(&self) -> f64 {
        let Some((words, _n, sign, e, _inexact)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        if words.is_empty() || self.v.is_zero() {
            return 0.0;
        }
        let k = words.len();
        let mut frac = words[k - 1] as f64 / 2f64.powi(64);
        if k >= 2 {
            frac += words[k - 2] as f64 / 2f64.powi(128);
        }
        let val = frac * 2f64.powi(e);
        match sign {
            Sign::Neg => -val,
            Sign::Pos => val,
        }
    }

    /// `10^-digits` at this precision, for tolerance thresholds.
    pub fn pow10_neg(digits: usize, p: usize) -> Hp {
        let ten = Hp::from_i64(10, p);
        Hp::from_i64(1, p).div(&ten.powi(digits))
    }
}

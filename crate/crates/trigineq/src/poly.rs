//! Dense polynomials with exact rational coefficients.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the empty vector is the zero polynomial.

use crate::rat::{sign, Rat};
use crate::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The monomial `t`.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// Build from ascending-degree coefficients, dropping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of `t^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Horner evaluation, exact.
    pub fn eval(&self, a: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * a + c;
        }
        acc
    }

    /// Exact sign of `p(a)`.
    pub fn sign_at(&self, a: &Rat) -> i8 {
        sign(&self.eval(a))
    }

    pub fn derivative(&self) -> Poly {
        if self.coeffs.len() <= 1 {
            return Poly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(BigInt::from(k)))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Composition `self(inner(t))`, by Horner over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// Euclidean division: `self = q * quot + rem`, `deg rem < deg q`.
    pub fn divmod(&self, q: &Poly) -> Result<(Poly, Poly), Error> {
        let qdeg = q.degree().ok_or(Error::DivisionByZeroPoly)?;
        let qlead = q.leading().expect("nonzero divisor").clone();
        let mut rem = self.clone();
        let mut quot_coeffs = vec![Rat::zero(); self.coeffs.len().saturating_sub(qdeg)];
        while let Some(rdeg) = rem.degree() {
            if rdeg < qdeg {
                break;
            }
            let factor = rem.leading().expect("nonzero remainder") / &qlead;
            let shift = rdeg - qdeg;
            quot_coeffs[shift] = factor.clone();
            let mut new_coeffs = rem.coeffs.clone();
            for (k, qc) in q.coeffs.iter().enumerate() {
                new_coeffs[k + shift] = &new_coeffs[k + shift] - &(qc * &factor);
            }
            rem = Poly::from_coeffs(new_coeffs);
            debug_assert!(rem.degree().map_or(true, |d| d < rdeg));
        }
        Ok((Poly::from_coeffs(quot_coeffs), rem))
    }

    /// Pseudo-remainder scaled by a positive constant: a positive rational
    /// multiple of `self mod q`, computed without rational division so that
    /// integer inputs stay integral. Sign-safe for Sturm chains.
    pub fn pseudo_rem(&self, q: &Poly) -> Poly {
        let qdeg = q.degree().expect("nonzero divisor");
        let qlead = q.leading().expect("nonzero divisor").clone();
        let mut r = self.clone();
        let mut scalings = 0u32;
        while let Some(rdeg) = r.degree() {
            if rdeg < qdeg {
                break;
            }
            // r <- qlead * r - rlead * x^(rdeg - qdeg) * q
            let rlead = r.leading().expect("nonzero").clone();
            let shift = rdeg - qdeg;
            let mut coeffs = vec![Rat::zero(); rdeg + 1];
            for (k, c) in r.coeffs.iter().enumerate() {
                coeffs[k] = c * &qlead;
            }
            for (k, c) in q.coeffs.iter().enumerate() {
                coeffs[k + shift] = &coeffs[k + shift] - &(c * &rlead);
            }
            r = Poly::from_coeffs(coeffs);
            scalings += 1;
        }
        // total multiplier is qlead^scalings; make it positive
        if qlead.is_negative() && scalings % 2 == 1 {
            -&r
        } else {
            r
        }
    }

    /// Monic greatest common divisor via the primitive pseudo-remainder
    /// sequence (no rational-coefficient blowup).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.primitive_integer();
        let mut b = other.primitive_integer();
        while !b.is_zero() {
            if b.is_constant() {
                return Poly::one();
            }
            let r = a.pseudo_rem(&b).primitive_integer();
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Scale so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lead) => self.scale(&lead.recip()),
        }
    }

    /// Square-free part `self / gcd(self, self')`.
    pub fn square_free_part(&self) -> Poly {
        if self.is_constant() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        let (q, r) = self.divmod(&g).expect("gcd divides");
        debug_assert!(r.is_zero());
        q
    }

    /// Multiply by the positive rational that makes all coefficients integers
    /// with content 1. Sign-preserving; controls growth in Sturm remainders.
    pub fn primitive_integer(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(den_lcm.clone())).to_integer())
            .collect();
        let mut content = BigInt::zero();
        for i in &ints {
            content = content.gcd(i);
        }
        if content.is_zero() {
            content = BigInt::one();
        }
        Poly {
            coeffs: ints
                .into_iter()
                .map(|i| Rat::from_integer(i / &content))
                .collect(),
        }
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", c)?,
                1 => write!(f, "{}*t", c)?,
                _ => write!(f, "{}*t^{}", c, k)?,
            }
        }
        Ok(())
    }
}

//! Sturm chains and exact root counting on rational intervals.
//!
//! The chain is built on the square-free part of the input, so counts are
//! multiplicity-blind ("number of distinct roots"). Internally the chain is
//! a primitive integer pseudo-remainder sequence over `BigInt`: remainders
//! are scaled by positive constants only (sign-safe) and divided by their
//! content at every step, which keeps coefficients small without rational
//! arithmetic. Sign evaluations at rational points are homogenized to pure
//! integer Horner steps.

use crate::poly::Poly;
use crate::rat::Rat;
use crate::Error;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

type IntPoly = Vec<BigInt>;

fn trim(mut p: IntPoly) -> IntPoly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn degree(p: &IntPoly) -> Option<usize> {
    p.len().checked_sub(1)
}

/// Divide out the content (gcd of coefficients), preserving sign.
fn primitive(p: IntPoly) -> IntPoly {
    let mut content = BigInt::zero();
    for c in &p {
        content = content.gcd(c);
        if content.is_one() {
            return p;
        }
    }
    if content.is_zero() {
        return p;
    }
    p.into_iter().map(|c| c / &content).collect()
}

fn derivative(p: &IntPoly) -> IntPoly {
    p.iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect()
}

/// Pseudo-remainder scaled so the result is a positive multiple of the true
/// remainder `p mod q`.
fn pseudo_rem(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let qdeg = degree(q).expect("nonzero divisor");
    let qlead = q.last().expect("nonzero divisor").clone();
    let mut r = p.clone();
    let mut scalings = 0u32;
    while let Some(rdeg) = degree(&r) {
        if rdeg < qdeg {
            break;
        }
        let rlead = r.last().expect("nonzero").clone();
        let shift = rdeg - qdeg;
        let mut next = vec![BigInt::zero(); rdeg + 1];
        for (k, c) in r.iter().enumerate() {
            next[k] = c * &qlead;
        }
        for (k, c) in q.iter().enumerate() {
            next[k + shift] -= c * &rlead;
        }
        r = trim(next);
        scalings += 1;
    }
    if qlead.is_negative() && scalings % 2 == 1 {
        r.iter().map(|c| -c).collect()
    } else {
        r
    }
}

/// Primitive-PRS polynomial gcd (up to sign).
fn gcd_int(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = primitive(a.clone());
    let mut b = primitive(b.clone());
    while !b.is_empty() {
        if degree(&b) == Some(0) {
            return vec![BigInt::one()];
        }
        let r = primitive(pseudo_rem(&a, &b));
        a = b;
        b = r;
    }
    a
}

/// Exact division `p / g` for primitive `g` dividing `p` (Gauss's lemma
/// guarantees an integer quotient).
fn exact_div(p: &IntPoly, g: &IntPoly) -> IntPoly {
    let gdeg = degree(g).expect("nonzero divisor");
    let glead = g.last().expect("nonzero divisor");
    let mut rem = p.clone();
    let mut quot = vec![BigInt::zero(); p.len() - gdeg];
    while let Some(rdeg) = degree(&rem) {
        if rdeg < gdeg {
            break;
        }
        let factor = rem.last().expect("nonzero") / glead;
        let shift = rdeg - gdeg;
        quot[shift] = factor.clone();
        for (k, c) in g.iter().enumerate() {
            rem[k + shift] -= c * &factor;
        }
        rem = trim(rem);
    }
    debug_assert!(rem.is_empty(), "division was not exact");
    quot
}

/// Sign of `p(num/den)` via the homogenized integer Horner scheme
/// (`den > 0` as normalized by `BigRational`).
fn sign_eval(p: &IntPoly, num: &BigInt, den: &BigInt) -> i8 {
    let Some(d) = degree(p) else { return 0 };
    let mut acc = p[d].clone();
    let mut den_pow = BigInt::one();
    for k in (0..d).rev() {
        den_pow *= den;
        acc = acc * num + &p[k] * &den_pow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn to_int(p: &Poly) -> IntPoly {
    p.primitive_integer()
        .coeffs()
        .iter()
        .map(|c| c.numer().clone())
        .collect()
}

fn to_poly(p: &IntPoly) -> Poly {
    Poly::from_coeffs(p.iter().map(|c| Rat::from_integer(c.clone())).collect())
}

#[derive(Debug, Clone)]
pub struct SturmChain {
    ints: Vec<IntPoly>,
}

/// Build the Sturm chain of `p` (on its square-free part).
pub fn sturm_chain(p: &Poly) -> Result<SturmChain, Error> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let p_int = primitive(to_int(p));
    let p0 = if degree(&p_int) > Some(1) {
        let g = gcd_int(&p_int, &derivative(&p_int));
        if degree(&g) == Some(0) {
            p_int
        } else {
            primitive(exact_div(&p_int, &g))
        }
    } else {
        p_int
    };
    let mut ints = vec![p0.clone()];
    if degree(&p0) > Some(0) {
        let mut prev = p0;
        let mut cur = primitive(derivative(&prev));
        ints.push(cur.clone());
        while degree(&cur) > Some(0) {
            // next is minus a positive multiple of the true remainder
            let next: IntPoly = primitive(pseudo_rem(&prev, &cur))
                .iter()
                .map(|c| -c)
                .collect();
            ints.push(next.clone());
            prev = cur;
            cur = next;
        }
    }
    debug_assert!(ints
        .last()
        .is_some_and(|q| degree(q) == Some(0) || ints.len() == 1));
    Ok(SturmChain { ints })
}

impl SturmChain {
    /// The chain as rational polynomials (for inspection/tests).
    pub fn polys(&self) -> Vec<Poly> {
        self.ints.iter().map(to_poly).collect()
    }

    pub fn len(&self) -> usize {
        self.ints.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ints.is_empty()
    }

    /// The square-free polynomial the chain counts roots of.
    pub fn base(&self) -> Poly {
        to_poly(&self.ints[0])
    }

    fn base_is_constant(&self) -> bool {
        degree(&self.ints[0]) <= Some(0)
    }

    fn sign_of_base_at(&self, a: &Rat) -> i8 {
        sign_eval(&self.ints[0], a.numer(), a.denom())
    }

    /// Number of sign variations in the chain evaluated at `a` (zeros skipped).
    pub fn variations_at(&self, a: &Rat) -> usize {
        let (num, den) = (a.numer(), a.denom());
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.ints {
            let s = sign_eval(p, num, den);
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in the interval from `a` to `b` with explicit
    /// endpoint membership. Sturm's theorem gives the half-open `(a, b]`
    /// count as `V(a) - V(b)`; endpoint roots are then adjusted by exact
    /// sign tests.
    pub fn count_roots(&self, a: &Rat, b: &Rat, include_a: bool, include_b: bool) -> usize {
        assert!(a < b, "count_roots requires a < b");
        if self.base_is_constant() {
            return 0;
        }
        let mut count = self.variations_at(a) - self.variations_at(b);
        if include_a && self.sign_of_base_at(a) == 0 {
            count += 1;
        }
        if !include_b && self.sign_of_base_at(b) == 0 {
            count -= 1;
        }
        count
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rint};

    fn kernel_v() -> Poly {
        Poly::from_coeffs(vec![rat(11, 10), rint(-8), rint(12), rint(16), rint(-16)])
    }

    #[test]
    fn two_simple_roots() {
        let p = Poly::from_i64(&[-1, 0, 1]);
        let chain = sturm_chain(&p).unwrap();
        assert_eq!(chain.len(), 3);
        assert_eq!(
            chain.variations_at(&rint(-2)) - chain.variations_at(&rint(2)),
            2
        );
        // endpoint semantics
        assert_eq!(chain.count_roots(&rint(-1), &rint(1), false, false), 0);
        assert_eq!(chain.count_roots(&rint(-1), &rint(1), true, true), 2);
    }

    #[test]
    fn multiplicity_collapses() {
        let p = Poly::from_i64(&[1, -2, 1]); // (t-1)^2
        let chain = sturm_chain(&p).unwrap();
        assert_eq!(chain.len(), 2);
        assert_eq!(chain.count_roots(&rint(0), &rint(2), true, true), 1);
    }

    #[test]
    fn lemma3_kernel_has_no_root() {
        let chain = sturm_chain(&kernel_v()).unwrap();
        assert_eq!(chain.count_roots(&rat(-1, 2), &rint(1), true, true), 0);
        assert_eq!(kernel_v().sign_at(&rint(1)), 1);
    }

    #[test]
    fn zero_polynomial_is_an_error() {
        assert!(sturm_chain(&Poly::zero()).is_err());
    }

    #[test]
    fn constant_counts_zero() {
        let chain = sturm_chain(&Poly::constant(rat(3, 7))).unwrap();
        assert_eq!(chain.count_roots(&rint(-10), &rint(10), true, true), 0);
    }

    #[test]
    fn chain_ends_in_nonzero_constant() {
        let p = Poly::from_i64(&[3, -1, -3, 1, 2]);
        let chain = sturm_chain(&p).unwrap();
        let last = chain.polys().pop().unwrap();
        assert!(last.is_constant() && !last.is_zero());
    }

    #[test]
    fn wilkinson_style_product_counts() {
        // product of (t - k/3) for k = -6..=6: 13 roots in [-2, 2]
        let mut p = Poly::one();
        for k in -6..=6i64 {
            p = &p * &Poly::from_coeffs(vec![rat(-k, 3), rint(1)]);
        }
        let chain = sturm_chain(&p).unwrap();
        assert_eq!(chain.count_roots(&rint(-2), &rint(2), true, true), 13);
        assert_eq!(chain.count_roots(&rint(0), &rint(2), false, true), 6);
        assert_eq!(chain.count_roots(&rint(0), &rint(2), true, true), 7);
    }
}

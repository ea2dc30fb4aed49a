//! Exact integer and rational arithmetic.
//!
//! `BigInt` and `BigRat` come from the `num` family; `BigRational` keeps
//! itself reduced with a positive denominator, so structural equality is
//! value equality. This module adds the square/root tests and the univariate
//! polynomial type the curve code needs.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use num_bigint::BigInt;

/// Exact rational number, always held normalized.
pub type BigRat = num_rational::BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(n: i64, d: i64) -> BigRat {
    BigRat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(v: impl Into<BigInt>) -> BigRat {
    BigRat::from_integer(v.into())
}

/// Floor square root of a nonnegative integer, `None` for negative input.
pub fn isqrt(v: &BigInt) -> Option<BigInt> {
    if v.is_negative() {
        return None;
    }
    let k = v.sqrt();
    debug_assert!(&k * &k <= *v && (&k + 1u32) * (&k + 1u32) > *v);
    Some(k)
}

/// True iff `v = k^2` for some integer `k`.
pub fn is_square(v: &BigInt) -> bool {
    match isqrt(v) {
        Some(k) => &k * &k == *v,
        None => false,
    }
}

/// Exact integer `k`-th root, if one exists. Odd roots of negative numbers
/// are negative.
pub fn iroot_exact(v: &BigInt, k: u32) -> Option<BigInt> {
    assert!(k >= 1);
    if v.is_negative() {
        if k.is_multiple_of(2) {
            return None;
        }
        return iroot_exact(&-v, k).map(|r| -r);
    }
    let r = v.nth_root(k);
    if num_traits::pow(r.clone(), k as usize) == *v {
        Some(r)
    } else {
        None
    }
}

/// Nonnegative rational square root when numerator and denominator are both
/// perfect squares.
pub fn sqrt_exact(v: &BigRat) -> Option<BigRat> {
    root_exact(v, 2)
}

/// Exact rational `k`-th root (real branch; nonnegative for even `k`).
pub fn root_exact(v: &BigRat, k: u32) -> Option<BigRat> {
    let n = iroot_exact(v.numer(), k)?;
    let d = iroot_exact(v.denom(), k)?;
    Some(BigRat::new(n, d))
}

pub fn pow_rat(v: &BigRat, e: u32) -> BigRat {
    num_traits::pow(v.clone(), e as usize)
}

pub fn pow_int(v: &BigInt, e: u32) -> BigInt {
    num_traits::pow(v.clone(), e as usize)
}

/// Parses `"p"` or `"p/q"` into a normalized rational.
pub fn parse_rat(s: &str) -> Result<BigRat> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_int(n)?;
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            BigRat::new(n, d)
        }
        None => BigRat::from_integer(parse_int(s)?),
    };
    Ok(parsed)
}

pub fn parse_int(s: &str) -> Result<BigInt> {
    BigInt::from_str(s.trim()).map_err(|_| Error::Parse(format!("not an integer: {s:?}")))
}

/// `"p/q"` form, or `"p"` when the denominator is one.
pub fn fmt_rat(v: &BigRat) -> String {
    v.to_string()
}

/// Least common multiple of the denominators.
pub fn lcm_denominators<'a>(values: impl IntoIterator<Item = &'a BigRat>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Dense univariate polynomial over the rationals, coefficients indexed by
/// degree. Trailing zeros are trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn from_bigints<'a>(coeffs: impl IntoIterator<Item = &'a BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(|c| BigRat::from_integer(c.clone())).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn leading(&self) -> BigRat {
        self.coeffs.last().cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn eval(&self, x: &BigRat) -> BigRat {
        self.coeffs.iter().rev().fold(BigRat::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * rat_int(i as i64)).collect())
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            return a;
        }
        let lead = a.leading();
        a.scale(&lead.recip())
    }

    /// No repeated roots over an algebraic closure.
    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// The polynomial `z -> p(x0 + z)`.
    pub fn taylor_shift(&self, x0: &BigRat) -> UniPoly {
        // Horner in the ring of polynomials in z.
        let shift = UniPoly::new(vec![x0.clone(), BigRat::one()]);
        self.coeffs.iter().rev().fold(UniPoly::zero(), |acc, c| &(&acc * &shift) + &UniPoly::constant(c.clone()))
    }

    /// `z^n p(1/z)`; `n` must be at least the degree.
    pub fn reversed(&self, n: usize) -> UniPoly {
        assert!(self.coeffs.len() <= n + 1, "reversal degree below polynomial degree");
        let mut c = vec![BigRat::zero(); n + 1];
        for (i, v) in self.coeffs.iter().enumerate() {
            c[n - i] = v.clone();
        }
        UniPoly::new(c)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![BigRat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let show_coeff = i == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

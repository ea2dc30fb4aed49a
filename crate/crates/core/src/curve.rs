//! Weierstrass curves `y^2 = x^3 + a2 x^2 + a4 x + a6` over the rationals
//! with the chord-tangent group law.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_rat, parse_rat, root_exact, BigRat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassCurve {
    a2: BigRat,
    a4: BigRat,
    a6: BigRat,
}

/// Standard quantities of the model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveInvariants {
    pub discriminant: BigRat,
    pub c4: BigRat,
    pub c6: BigRat,
    pub j: BigRat,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: BigRat, y: BigRat },
}

impl CurvePoint {
    pub fn affine(x: BigRat, y: BigRat) -> Self {
        CurvePoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, CurvePoint::Infinity)
    }

    pub fn x(&self) -> Option<&BigRat> {
        match self {
            CurvePoint::Infinity => None,
            CurvePoint::Affine { x, .. } => Some(x),
        }
    }

    /// Digits in numerator plus denominator of `x`; zero at infinity.
    pub fn x_height_digits(&self) -> usize {
        match self {
            CurvePoint::Infinity => 0,
            CurvePoint::Affine { x, .. } => x.numer().abs().to_string().len() + x.denom().to_string().len(),
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Infinity => write!(f, "infinity"),
            CurvePoint::Affine { x, y } => write!(f, "({x}, {y})"),
        }
    }
}

fn b_values(a2: &BigRat, a4: &BigRat, a6: &BigRat) -> [BigRat; 4] {
    let four = BigRat::from_integer(4.into());
    let b2 = a2 * &four;
    let b4 = a4 * BigRat::from_integer(2.into());
    let b6 = a6 * &four;
    let b8 = a2 * a6 * &four - a4 * a4;
    [b2, b4, b6, b8]
}

fn invariants_of(a2: &BigRat, a4: &BigRat, a6: &BigRat) -> (BigRat, BigRat, BigRat) {
    let k = |v: i64| BigRat::from_integer(v.into());
    let [b2, b4, b6, b8] = b_values(a2, a4, a6);
    let c4 = &b2 * &b2 - k(24) * &b4;
    let c6 = -(&b2 * &b2 * &b2) + k(36) * &b2 * &b4 - k(216) * &b6;
    let disc = -(&b2 * &b2 * &b8) - k(8) * &b4 * &b4 * &b4 - k(27) * &b6 * &b6 + k(9) * &b2 * &b4 * &b6;
    (c4, c6, disc)
}

impl WeierstrassCurve {
    /// Rejects singular models.
    pub fn new(a2: BigRat, a4: BigRat, a6: BigRat) -> Result<Self> {
        let (_, _, disc) = invariants_of(&a2, &a4, &a6);
        if disc.is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(WeierstrassCurve { a2, a4, a6 })
    }

    pub fn from_ints(a2: i64, a4: i64, a6: i64) -> Result<Self> {
        let r = |v: i64| BigRat::from_integer(v.into());
        Self::new(r(a2), r(a4), r(a6))
    }

    pub fn coefficients(&self) -> [&BigRat; 3] {
        [&self.a2, &self.a4, &self.a6]
    }

    /// Right-hand side `x^3 + a2 x^2 + a4 x + a6`.
    pub fn rhs(&self, x: &BigRat) -> BigRat {
        ((x + &self.a2) * x + &self.a4) * x + &self.a6
    }

    pub fn invariants(&self) -> CurveInvariants {
        let (c4, c6, discriminant) = invariants_of(&self.a2, &self.a4, &self.a6);
        let j = &c4 * &c4 * &c4 / &discriminant;
        CurveInvariants { discriminant, c4, c6, j }
    }

    pub fn on_curve(&self, p: &CurvePoint) -> bool {
        match p {
            CurvePoint::Infinity => true,
            CurvePoint::Affine { x, y } => y * y == self.rhs(x),
        }
    }

    /// `y^2 - rhs(x)`, zero exactly for points on the curve.
    pub fn residual(&self, x: &BigRat, y: &BigRat) -> BigRat {
        y * y - self.rhs(x)
    }

    /// Checked point constructor.
    pub fn point(&self, x: BigRat, y: BigRat) -> Result<CurvePoint> {
        let p = CurvePoint::Affine { x, y };
        if self.on_curve(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    fn check(&self, p: &CurvePoint) -> Result<()> {
        if self.on_curve(p) {
            Ok(())
        } else {
            Err(Error::NotOnCurve(p.to_string()))
        }
    }

    pub fn negate(&self, p: &CurvePoint) -> CurvePoint {
        match p {
            CurvePoint::Infinity => CurvePoint::Infinity,
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
        }
    }

    pub fn add(&self, p: &CurvePoint, q: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add_unchecked(p, q))
    }

    pub fn double(&self, p: &CurvePoint) -> Result<CurvePoint> {
        self.add(p, p)
    }

    fn add_unchecked(&self, p: &CurvePoint, q: &CurvePoint) -> CurvePoint {
        let (x1, y1, x2, y2) = match (p, q) {
            (CurvePoint::Infinity, _) => return q.clone(),
            (_, CurvePoint::Infinity) => return p.clone(),
            (CurvePoint::Affine { x: x1, y: y1 }, CurvePoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1 + y2).is_zero() {
                // Inverse pair, including the vertical tangent at y = 0.
                return CurvePoint::Infinity;
            }
            let three = BigRat::from_integer(3.into());
            let two = BigRat::from_integer(2.into());
            (three * x1 * x1 + two.clone() * &self.a2 * x1 + &self.a4) / (two * y1)
        } else {
            (y2 - y1) / (x2 - x1)
        };
        let x3 = &slope * &slope - &self.a2 - x1 - x2;
        let y3 = slope * (x1 - &x3) - y1;
        let r = CurvePoint::Affine { x: x3, y: y3 };
        debug_assert!(self.on_curve(&r));
        r
    }

    /// `m p` by double-and-add; negative `m` negates.
    pub fn scalar_mul(&self, m: &BigInt, p: &CurvePoint) -> Result<CurvePoint> {
        self.check(p)?;
        let mut acc = CurvePoint::Infinity;
        let mut base = p.clone();
        let mut k = m.abs();
        while !k.is_zero() {
            if k.is_odd() {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if !k.is_zero() {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(if m.is_negative() { self.negate(&acc) } else { acc })
    }

    /// `[p, 2p, ..., count p]`.
    pub fn multiples(&self, p: &CurvePoint, count: usize) -> Result<Vec<CurvePoint>> {
        self.check(p)?;
        let mut out = Vec::with_capacity(count);
        let mut acc = CurvePoint::Infinity;
        for _ in 0..count {
            acc = self.add_unchecked(&acc, p);
            out.push(acc.clone());
        }
        Ok(out)
    }
}

impl fmt::Display for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = x^3")?;
        for (c, mono) in [(&self.a2, "x^2"), (&self.a4, "x"), (&self.a6, "")] {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if mono.is_empty() {
                write!(f, " {sign} {mag}")?;
            } else if mag.is_one() {
                write!(f, " {sign} {mono}")?;
            } else if mag.is_integer() {
                write!(f, " {sign} {mag}{mono}")?;
            } else {
                write!(f, " {sign} ({mag}){mono}")?;
            }
        }
        Ok(())
    }
}

/// The scaling `u > 0` with `c4' = u^4 c4` and `c6' = u^6 c6`, if the two
/// models are isomorphic over the rationals.
pub fn q_isomorphic(e1: &WeierstrassCurve, e2: &WeierstrassCurve) -> Option<BigRat> {
    let i1 = e1.invariants();
    let i2 = e2.invariants();
    if i1.c4.is_zero() != i2.c4.is_zero() || i1.c6.is_zero() != i2.c6.is_zero() {
        return None;
    }
    match (i1.c4.is_zero(), i1.c6.is_zero()) {
        (false, false) => {
            let r4 = &i2.c4 / &i1.c4;
            let r6 = &i2.c6 / &i1.c6;
            // u^2 = r6 / r4, and it must square to r4.
            let u2 = &r6 / &r4;
            if &u2 * &u2 != r4 {
                return None;
            }
            root_exact(&u2, 2)
        }
        (false, true) => root_exact(&(&i2.c4 / &i1.c4), 4),
        (true, false) => root_exact(&(&i2.c6 / &i1.c6), 6),
        (true, true) => unreachable!("nonsingular curves have c4 or c6 nonzero"),
    }
    .filter(|u| u.is_positive())
}

/// `{"a2","a4","a6"}` as `"p/q"` strings.
#[derive(Serialize, Deserialize)]
pub struct CurveWire {
    pub a2: String,
    pub a4: String,
    pub a6: String,
}

impl From<&WeierstrassCurve> for CurveWire {
    fn from(e: &WeierstrassCurve) -> Self {
        CurveWire { a2: fmt_rat(&e.a2), a4: fmt_rat(&e.a4), a6: fmt_rat(&e.a6) }
    }
}

impl TryFrom<&CurveWire> for WeierstrassCurve {
    type Error = Error;
    fn try_from(w: &CurveWire) -> Result<Self> {
        WeierstrassCurve::new(parse_rat(&w.a2)?, parse_rat(&w.a4)?, parse_rat(&w.a6)?)
    }
}

/// A point as `{"x","y"}` or the string `"infinity"`.
pub fn point_to_json(p: &CurvePoint) -> serde_json::Value {
    match p {
        CurvePoint::Infinity => serde_json::Value::String("infinity".into()),
        CurvePoint::Affine { x, y } => serde_json::json!({ "x": fmt_rat(x), "y": fmt_rat(y) }),
    }
}

pub fn point_from_json(v: &serde_json::Value) -> Result<CurvePoint> {
    if v.as_str() == Some("infinity") {
        return Ok(CurvePoint::Infinity);
    }
    let field = |k: &str| {
        v.get(k)
            .and_then(|s| s.as_str())
            .ok_or_else(|| Error::Parse(format!("point is missing {k:?}")))
            .and_then(parse_rat)
    };
    Ok(CurvePoint::Affine { x: field("x")?, y: field("y")? })
}

//! Quartic models `v^2 = q(x)`, conic parametrization and the birational map
//! to a Weierstrass model.
//!
//! The map is the classical one for `w^2 = a z^4 + b z^3 + c z^2 + d z + s^2`
//! (constant term a nonzero square). A known point is moved to `z = 0`,
//! either by translation `x = x0 + z` (affine seed) or by inversion
//! `x = 1/z, v = w/z^2` (square leading coefficient). With `s` chosen as the
//! *negated* seed ordinate, the point `(0, s)` goes to the identity and the
//! seed `(0, -s)` goes to `(-a2, a1 a2 - a3)` on the long model
//!
//! ```text
//! Y^2 + a1 XY + a3 Y = X^3 + a2 X^2 + a4 X + a6,
//! a1 = d/s, a2 = c - d^2/(4s^2), a3 = 2sb, a4 = -4s^2 a, a6 = a2 a4,
//! X = (2s(w+s) + dz)/z^2,  Y = (4s^2(w+s) + 2s(dz + cz^2) - d^2 z^2/(2s))/z^3,
//! z = (2s(X+c) - d^2/(2s))/Y,  w = -s + z(zX - d)/(2s).
//! ```
//!
//! Completing the square `y = Y + (a1 X + a3)/2` gives the `a1 = a3 = 0`
//! model used everywhere else.

use std::fmt;

use num_traits::{One, Zero};

use crate::arith::{fmt_rat, parse_rat, rat_int, sqrt_exact, BigRat, UniPoly};
use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticPoint {
    pub x: BigRat,
    pub v: BigRat,
}

impl QuarticPoint {
    pub fn new(x: BigRat, v: BigRat) -> Self {
        QuarticPoint { x, v }
    }
}

impl fmt::Display for QuarticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.v)
    }
}

/// `v^2 = q(x)` with `q` squarefree of degree 3 or 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuarticCurve {
    q: UniPoly,
}

impl QuarticCurve {
    pub fn new(q: UniPoly) -> Result<Self> {
        match q.degree() {
            Some(3) | Some(4) => {}
            d => {
                return Err(Error::InvalidParameter(format!(
                    "quartic model needs degree 3 or 4, got {}",
                    d.map_or("-inf".to_string(), |d| d.to_string())
                )))
            }
        }
        if !q.is_squarefree() {
            return Err(Error::NotSquarefree(q.to_string()));
        }
        Ok(QuarticCurve { q })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self> {
        Self::new(UniPoly::from_ints(coeffs))
    }

    pub fn poly(&self) -> &UniPoly {
        &self.q
    }

    pub fn on_quartic(&self, p: &QuarticPoint) -> bool {
        &p.v * &p.v == self.q.eval(&p.x)
    }

    /// `v^2 - q(x)`.
    pub fn residual(&self, p: &QuarticPoint) -> BigRat {
        &p.v * &p.v - self.q.eval(&p.x)
    }

    pub fn point(&self, x: BigRat, v: BigRat) -> Result<QuarticPoint> {
        let p = QuarticPoint { x, v };
        if self.on_quartic(&p) {
            Ok(p)
        } else {
            Err(Error::NotOnQuartic(p.to_string()))
        }
    }

    /// Whether `q(x) = q(-x)`.
    pub fn is_even(&self) -> bool {
        self.q.coeff(1).is_zero() && self.q.coeff(3).is_zero()
    }

    /// Coefficients `q0..q4` as `"p/q"` strings.
    pub fn to_wire(&self) -> Vec<String> {
        (0..=4).map(|i| fmt_rat(&self.q.coeff(i))).collect()
    }

    pub fn from_wire(coeffs: &[String]) -> Result<Self> {
        let c = coeffs.iter().map(|s| parse_rat(s)).collect::<Result<Vec<_>>>()?;
        Self::new(UniPoly::new(c))
    }

    /// Points with `x = n/d`, `|n| <= bound`, `1 <= d <= den_bound`, in
    /// increasing `(d, n)` order, `v >= 0` only.
    pub fn small_points(&self, bound: i64, den_bound: i64) -> Vec<QuarticPoint> {
        let mut out = Vec::new();
        for d in 1..=den_bound.max(1) {
            for n in -bound..=bound {
                if num_integer::gcd(n, d) != 1 && !(n == 0 && d == 1) {
                    continue;
                }
                let x = BigRat::new(n.into(), d.into());
                if let Some(v) = sqrt_exact(&self.q.eval(&x)) {
                    out.push(QuarticPoint { x, v });
                }
            }
        }
        out
    }
}

impl fmt::Display for QuarticCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v^2 = {}", self.q)
    }
}

/// `num(k) / den(k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalFunction {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl RationalFunction {
    pub fn eval(&self, k: &BigRat) -> Result<BigRat> {
        let d = self.den.eval(k);
        if d.is_zero() {
            return Err(Error::InvalidParameter(format!("k = {k} is a pole of the parametrization")));
        }
        Ok(self.num.eval(k) / d)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// `u^2 = A t^2 + B`, optionally with a known rational point `(t0, u0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conic {
    a: BigRat,
    b: BigRat,
    seed: Option<(BigRat, BigRat)>,
}

impl Conic {
    pub fn new(a: BigRat, b: BigRat) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::Degenerate("conic with A = 0".into()));
        }
        if b.is_zero() {
            return Err(Error::Degenerate("conic with B = 0 splits into lines".into()));
        }
        Ok(Conic { a, b, seed: None })
    }

    pub fn with_seed(self, t0: BigRat, u0: BigRat) -> Result<Self> {
        if &u0 * &u0 != &self.a * &t0 * &t0 + &self.b {
            return Err(Error::NotOnQuartic(format!("({t0}, {u0}) is not on u^2 = {}t^2 + {}", self.a, self.b)));
        }
        Ok(Conic { seed: Some((t0, u0)), ..self })
    }

    pub fn a(&self) -> &BigRat {
        &self.a
    }

    pub fn b(&self) -> &BigRat {
        &self.b
    }

    pub fn seed(&self) -> Option<&(BigRat, BigRat)> {
        self.seed.as_ref()
    }

    pub fn contains(&self, t: &BigRat, u: &BigRat) -> bool {
        u * u == &self.a * t * t + &self.b
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "u^2 = {}t^2 + {}", self.a, self.b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicParametrization {
    pub t: RationalFunction,
    pub u: RationalFunction,
}

impl ConicParametrization {
    pub fn eval(&self, k: &BigRat) -> Result<(BigRat, BigRat)> {
        Ok((self.t.eval(k)?, self.u.eval(k)?))
    }
}

/// Lines `u = u0 + k (t - t0)` through the seed meet the conic again at
/// `t = (t0 k^2 - 2 u0 k + A t0) / (k^2 - A)`,
/// `u = (-u0 k^2 + 2 A t0 k - A u0) / (k^2 - A)`.
pub fn conic_parametrize(c: &Conic) -> Result<ConicParametrization> {
    let (t0, u0) = c.seed.clone().ok_or_else(|| Error::InvalidParameter(format!("conic {c} has no seed point")))?;
    let a = c.a.clone();
    let two = rat_int(2);
    let den = UniPoly::new(vec![-a.clone(), BigRat::zero(), BigRat::one()]);
    let t_num = UniPoly::new(vec![&a * &t0, -(&two * &u0), t0.clone()]);
    let u_num = UniPoly::new(vec![-(&a * &u0), &two * &a * &t0, -u0]);
    Ok(ConicParametrization {
        t: RationalFunction { num: t_num, den: den.clone() },
        u: RationalFunction { num: u_num, den },
    })
}

/// Substitutes the parametrization of `c1` into `c2` (same `A`) and clears
/// the denominator: `V^2 = A t_num(k)^2 + B2 den(k)^2` with `V = v den(k)`.
/// Returns the quartic and `den`.
pub fn simultaneous_square_quartic(c1: &Conic, c2: &Conic) -> Result<(QuarticCurve, UniPoly)> {
    if c1.a != c2.a {
        return Err(Error::InvalidParameter(format!("conics {c1} and {c2} do not share A")));
    }
    let param = conic_parametrize(c1)?;
    let tn = &param.t.num;
    let den = &param.t.den;
    let n = &(tn * tn).scale(&c1.a) + &(den * den).scale(&c2.b);
    Ok((QuarticCurve::new(n)?, den.clone()))
}

/// Where the map's base point comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Seed {
    Point(QuarticPoint),
    /// Leading coefficient is a nonzero square; use the points at infinity.
    LeadSquare,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Chart {
    Translate(BigRat),
    Invert,
}

/// Birational map between a quartic and a Weierstrass model, with the seed's
/// image recorded.
#[derive(Clone, Debug)]
pub struct QuarticMap {
    source: QuarticCurve,
    target: WeierstrassCurve,
    chart: Chart,
    s: BigRat,
    c: BigRat,
    d: BigRat,
    a1: BigRat,
    a3: BigRat,
    seed_image: CurvePoint,
}

pub fn to_weierstrass(quartic: &QuarticCurve, seed: &Seed) -> Result<QuarticMap> {
    let (chart, local, s) = match seed {
        Seed::Point(p) => {
            if !quartic.on_quartic(p) {
                return Err(Error::NotOnQuartic(p.to_string()));
            }
            if p.v.is_zero() {
                return Err(Error::Degenerate(format!("seed {p} has v = 0")));
            }
            (Chart::Translate(p.x.clone()), quartic.q.taylor_shift(&p.x), -p.v.clone())
        }
        Seed::LeadSquare => {
            let lead = quartic.q.coeff(4);
            let root = sqrt_exact(&lead)
                .filter(|r| !r.is_zero())
                .ok_or_else(|| Error::Degenerate(format!("leading coefficient {lead} is not a nonzero square")))?;
            (Chart::Invert, quartic.q.reversed(4), -root)
        }
    };
    debug_assert_eq!(local.coeff(0), &s * &s);
    let (a, b, c, d) = (local.coeff(4), local.coeff(3), local.coeff(2), local.coeff(1));
    let two = rat_int(2);
    let four = rat_int(4);
    let s2 = &s * &s;
    let a1 = &d / &s;
    let a2 = &c - &d * &d / (&four * &s2);
    let a3 = &two * &s * &b;
    let a4 = -(&four * &s2 * &a);
    let a6 = &a2 * &a4;
    let target = WeierstrassCurve::new(&a2 + &a1 * &a1 / &four, &a4 + &a1 * &a3 / &two, &a6 + &a3 * &a3 / &four)?;
    // On an even quartic seeded at x = 0 (or at infinity) this is 2-torsion.
    let long_y = &a1 * &a2 - &a3;
    let x_img = -a2.clone();
    let y_img = &long_y + (&a1 * &x_img + &a3) / &two;
    let seed_image = CurvePoint::affine(x_img, y_img);
    debug_assert!(target.on_curve(&seed_image));
    Ok(QuarticMap { source: quartic.clone(), target, chart, s, c, d, a1, a3, seed_image })
}

impl QuarticMap {
    pub fn source(&self) -> &QuarticCurve {
        &self.source
    }

    pub fn target(&self) -> &WeierstrassCurve {
        &self.target
    }

    /// Image of the seed; never the identity.
    pub fn seed_image(&self) -> &CurvePoint {
        &self.seed_image
    }

    /// The quartic point sent to the identity, when it is affine.
    pub fn base_point(&self) -> Option<QuarticPoint> {
        match &self.chart {
            Chart::Translate(x0) => Some(QuarticPoint::new(x0.clone(), self.s.clone())),
            Chart::Invert => None,
        }
    }

    pub fn forward(&self, p: &QuarticPoint) -> Result<CurvePoint> {
        if !self.source.on_quartic(p) {
            return Err(Error::NotOnQuartic(p.to_string()));
        }
        let (z, w) = match &self.chart {
            Chart::Translate(x0) => (&p.x - x0, p.v.clone()),
            Chart::Invert => {
                if p.x.is_zero() {
                    return Err(Error::Exceptional { coordinate: "x = 0".into() });
                }
                let z = p.x.recip();
                let w = &p.v * &z * &z;
                (z, w)
            }
        };
        let s = &self.s;
        if z.is_zero() {
            return Ok(if &w == s { CurvePoint::Infinity } else { self.seed_image.clone() });
        }
        let two = rat_int(2);
        let (c, d) = (&self.c, &self.d);
        let ws = &w + s;
        let z2 = &z * &z;
        let x = (&two * s * &ws + d * &z) / &z2;
        let y_long = (rat_int(4) * s * s * &ws + &two * s * (d * &z + c * &z2) - d * d * &z2 / (&two * s)) / (&z2 * &z);
        let y = y_long + (&self.a1 * &x + &self.a3) / &two;
        let img = CurvePoint::affine(x, y);
        debug_assert!(self.target.on_curve(&img));
        Ok(img)
    }

    pub fn backward(&self, p: &CurvePoint) -> Result<QuarticPoint> {
        if !self.target.on_curve(p) {
            return Err(Error::NotOnCurve(p.to_string()));
        }
        let (x, y) = match p {
            CurvePoint::Infinity => {
                return self
                    .base_point()
                    .ok_or_else(|| Error::Exceptional { coordinate: "identity (base point at infinity)".into() })
            }
            CurvePoint::Affine { x, y } => (x, y),
        };
        let two = rat_int(2);
        let y_long = y - (&self.a1 * x + &self.a3) / &two;
        if y_long.is_zero() {
            return Err(Error::Exceptional { coordinate: format!("X = {x}") });
        }
        let s = &self.s;
        let (c, d) = (&self.c, &self.d);
        let z = (&two * s * (x + c) - d * d / (&two * s)) / &y_long;
        let w = -s.clone() + &z * (&z * x - d) / (&two * s);
        let q = match &self.chart {
            Chart::Translate(x0) => QuarticPoint::new(z + x0, w),
            Chart::Invert => {
                if z.is_zero() {
                    return Err(Error::Exceptional { coordinate: format!("X = {x} (point at infinity)") });
                }
                let x = z.recip();
                let v = &w * &x * &x;
                QuarticPoint::new(x, v)
            }
        };
        debug_assert!(self.source.on_quartic(&q));
        Ok(q)
    }
}

/// `backward(m * forward(seed))` for `m = 1..=count`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multiples {
    pub points: Vec<(usize, QuarticPoint)>,
    /// Multiples whose image is exceptional, with the reason.
    pub skipped: Vec<(usize, String)>,
}

impl QuarticMap {
    pub fn multiples(&self, count: usize) -> Result<Multiples> {
        let mut out = Multiples::default();
        for (i, point) in self.target.multiples(&self.seed_image, count)?.into_iter().enumerate() {
            let m = i + 1;
            match self.backward(&point) {
                Ok(q) => out.points.push((m, q)),
                Err(e @ Error::Exceptional { .. }) => out.skipped.push((m, e.to_string())),
                Err(e) => return Err(e),
            }
        }
        Ok(out)
    }
}

pub fn quartic_multiples(quartic: &QuarticCurve, seed: &Seed, count: usize) -> Result<Multiples> {
    to_weierstrass(quartic, seed)?.multiples(count)
}

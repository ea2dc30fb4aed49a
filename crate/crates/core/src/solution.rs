//! Solutions of `X^6 - Y^6 = W^n - Z^n`, with exact verification and the
//! weighted scaling that relates rational and integer solutions.
//!
//! The equation is weighted-homogeneous: `(X, Y, W, Z) -> (l^a X, l^a Y,
//! l^b W, l^b Z)` preserves it whenever `6a = nb`. Clearing denominators,
//! primitive reduction and "equal up to rescaling" comparisons all work in
//! terms of that action.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{pow_int, pow_rat, root_exact, BigInt, BigRat};
use crate::error::{Error, Result};
use crate::factor::{coprime_atoms, valuation};

/// Exponent of the right-hand side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EqKind {
    N2,
    N3,
    N4,
}

/// Exponents of the scaling action on `(X, Y)` and `(W, Z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScaleWeights {
    pub xy: u32,
    pub wz: u32,
}

impl EqKind {
    pub fn new(n: u32) -> Result<Self> {
        match n {
            2 => Ok(EqKind::N2),
            3 => Ok(EqKind::N3),
            4 => Ok(EqKind::N4),
            _ => Err(Error::InvalidParameter(format!("exponent n = {n} outside {{2, 3, 4}}"))),
        }
    }

    pub fn exponent(self) -> u32 {
        match self {
            EqKind::N2 => 2,
            EqKind::N3 => 3,
            EqKind::N4 => 4,
        }
    }

    /// Minimal weights with `6 * xy = n * wz`.
    pub fn weights(self) -> ScaleWeights {
        match self {
            EqKind::N2 => ScaleWeights { xy: 1, wz: 3 },
            EqKind::N3 => ScaleWeights { xy: 1, wz: 2 },
            EqKind::N4 => ScaleWeights { xy: 2, wz: 3 },
        }
    }
}

impl fmt::Display for EqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exponent())
    }
}

/// `X^6 - Y^6 == W^n - Z^n`, exactly.
pub fn verify(kind: EqKind, x: &BigRat, y: &BigRat, w: &BigRat, z: &BigRat) -> bool {
    let n = kind.exponent();
    pow_rat(x, 6) - pow_rat(y, 6) == pow_rat(w, n) - pow_rat(z, n)
}

pub fn verify_int(kind: EqKind, x: &BigInt, y: &BigInt, w: &BigInt, z: &BigInt) -> bool {
    let n = kind.exponent();
    pow_int(x, 6) - pow_int(y, 6) == pow_int(w, n) - pow_int(z, n)
}

/// Sign normalization shared by the integer and rational forms: sixth powers
/// ignore the sign of `X, Y`; even `n` ignores the sign of `W, Z`; for `n = 3`
/// the pair `(W, Z)` is swapped to `(-Z, -W)` when `W + Z < 0`.
fn canonical_parts<T>(kind: EqKind, [x, y, w, z]: [T; 4]) -> [T; 4]
where
    T: Signed + Clone,
{
    let (x, y) = (x.abs(), y.abs());
    match kind {
        EqKind::N2 | EqKind::N4 => [x, y, w.abs(), z.abs()],
        EqKind::N3 => {
            if (w.clone() + z.clone()).is_negative() {
                [x, y, -z, -w]
            } else {
                [x, y, w, z]
            }
        }
    }
}

/// A rational point on the equation; verified on construction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalSolution {
    kind: EqKind,
    x: BigRat,
    y: BigRat,
    w: BigRat,
    z: BigRat,
}

impl RationalSolution {
    pub fn new(kind: EqKind, x: BigRat, y: BigRat, w: BigRat, z: BigRat) -> Result<Self> {
        if !verify(kind, &x, &y, &w, &z) {
            return Err(Error::NotASolution(format!("n={kind}: ({x}, {y}, {w}, {z})")));
        }
        Ok(RationalSolution { kind, x, y, w, z })
    }

    pub fn kind(&self) -> EqKind {
        self.kind
    }

    pub fn components(&self) -> [&BigRat; 4] {
        [&self.x, &self.y, &self.w, &self.z]
    }

    /// Weighted action by a nonzero rational `lambda`.
    pub fn scaled(&self, lambda: &BigRat) -> RationalSolution {
        let wt = self.kind.weights();
        let a = pow_rat(lambda, wt.xy);
        let b = pow_rat(lambda, wt.wz);
        RationalSolution { kind: self.kind, x: &self.x * &a, y: &self.y * &a, w: &self.w * &b, z: &self.z * &b }
    }

    pub fn canonical(&self) -> RationalSolution {
        let [x, y, w, z] = canonical_parts(self.kind, [self.x.clone(), self.y.clone(), self.w.clone(), self.z.clone()]);
        RationalSolution { kind: self.kind, x, y, w, z }
    }

    pub fn to_integer(&self) -> Option<Solution> {
        if self.components().iter().all(|c| c.is_integer()) {
            Some(Solution {
                kind: self.kind,
                x: self.x.to_integer(),
                y: self.y.to_integer(),
                w: self.w.to_integer(),
                z: self.z.to_integer(),
            })
        } else {
            None
        }
    }
}

impl fmt::Display for RationalSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} X={} Y={} W={} Z={}", self.kind, self.x, self.y, self.w, self.z)
    }
}

/// An integer solution; verified on construction. For `n = 4`, `W` and `Z`
/// are the fourth-power bases (often written `R`, `S`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "SolutionWire", into = "SolutionWire")]
pub struct Solution {
    kind: EqKind,
    x: BigInt,
    y: BigInt,
    w: BigInt,
    z: BigInt,
}

impl Solution {
    pub fn new(kind: EqKind, x: BigInt, y: BigInt, w: BigInt, z: BigInt) -> Result<Self> {
        if !verify_int(kind, &x, &y, &w, &z) {
            return Err(Error::NotASolution(format!("n={kind}: ({x}, {y}, {w}, {z})")));
        }
        Ok(Solution { kind, x, y, w, z })
    }

    /// Convenience for small literals; panics if the tuple does not verify.
    pub fn from_i64(n: u32, x: i64, y: i64, w: i64, z: i64) -> Solution {
        let kind = EqKind::new(n).expect("exponent");
        Solution::new(kind, x.into(), y.into(), w.into(), z.into()).expect("not a solution")
    }

    pub fn kind(&self) -> EqKind {
        self.kind
    }

    pub fn x(&self) -> &BigInt {
        &self.x
    }

    pub fn y(&self) -> &BigInt {
        &self.y
    }

    pub fn w(&self) -> &BigInt {
        &self.w
    }

    pub fn z(&self) -> &BigInt {
        &self.z
    }

    pub fn components(&self) -> [&BigInt; 4] {
        [&self.x, &self.y, &self.w, &self.z]
    }

    pub fn to_rational(&self) -> RationalSolution {
        let r = |v: &BigInt| BigRat::from_integer(v.clone());
        RationalSolution { kind: self.kind, x: r(&self.x), y: r(&self.y), w: r(&self.w), z: r(&self.z) }
    }

    /// Both sides vanish: `X^6 = Y^6` and `W^n = Z^n`.
    pub fn is_trivial(&self) -> bool {
        let n = self.kind.exponent();
        self.x.abs() == self.y.abs() && pow_int(&self.w, n) == pow_int(&self.z, n)
    }

    /// Weighted action by an integer `lambda`.
    pub fn scaled(&self, lambda: &BigInt) -> Solution {
        let wt = self.kind.weights();
        let a = pow_int(lambda, wt.xy);
        let b = pow_int(lambda, wt.wz);
        Solution { kind: self.kind, x: &self.x * &a, y: &self.y * &a, w: &self.w * &b, z: &self.z * &b }
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} X={} Y={} W={} Z={}", self.kind, self.x, self.y, self.w, self.z)
    }
}

/// `{"n": int, "X": str, "Y": str, "W": str, "Z": str}`.
#[derive(Serialize, Deserialize)]
#[allow(non_snake_case)]
struct SolutionWire {
    n: u32,
    X: String,
    Y: String,
    W: String,
    Z: String,
}

impl From<Solution> for SolutionWire {
    fn from(s: Solution) -> Self {
        SolutionWire {
            n: s.kind.exponent(),
            X: s.x.to_string(),
            Y: s.y.to_string(),
            W: s.w.to_string(),
            Z: s.z.to_string(),
        }
    }
}

impl TryFrom<SolutionWire> for Solution {
    type Error = Error;
    fn try_from(w: SolutionWire) -> Result<Self> {
        use crate::arith::parse_int;
        Solution::new(EqKind::new(w.n)?, parse_int(&w.X)?, parse_int(&w.Y)?, parse_int(&w.W)?, parse_int(&w.Z)?)
    }
}

/// Smallest `lambda > 0` making the weighted rescaling integral, together
/// with the resulting integer solution.
pub fn clear_denominators_with_lambda(rs: &RationalSolution) -> (Solution, BigInt) {
    let wt = rs.kind.weights();
    let lcm_of = |a: &BigRat, b: &BigRat| -> BigUint { a.denom().lcm(b.denom()).magnitude().clone() };
    let l_xy = lcm_of(&rs.x, &rs.y);
    let l_wz = lcm_of(&rs.w, &rs.z);
    let mut lambda = BigUint::one();
    for atom in coprime_atoms([&l_xy, &l_wz]) {
        let need_xy = valuation(&l_xy, &atom).div_ceil(wt.xy);
        let need_wz = valuation(&l_wz, &atom).div_ceil(wt.wz);
        lambda *= num_traits::pow(atom, need_xy.max(need_wz) as usize);
    }
    let lambda = BigInt::from(lambda);
    let sol =
        rs.scaled(&BigRat::from_integer(lambda.clone())).to_integer().expect("clearing factor leaves a denominator");
    (sol, lambda)
}

pub fn clear_denominators(rs: &RationalSolution) -> Solution {
    clear_denominators_with_lambda(rs).0
}

/// Rescales by a caller-chosen `lambda`; fails if a denominator survives.
pub fn clear_with(rs: &RationalSolution, lambda: &BigInt) -> Result<Solution> {
    if lambda.is_zero() {
        return Err(Error::InvalidParameter("scaling factor must be nonzero".into()));
    }
    rs.scaled(&BigRat::from_integer(lambda.clone()))
        .to_integer()
        .ok_or_else(|| Error::InvalidParameter(format!("lambda = {lambda} does not clear denominators of {rs}")))
}

/// Divides out the largest `lambda` with `lambda^a | X, Y` and
/// `lambda^b | W, Z`. The all-zero solution is returned unchanged.
pub fn reduce_weighted_primitive(s: &Solution) -> Solution {
    let wt = s.kind.weights();
    let g_xy = s.x.gcd(&s.y).magnitude().clone();
    let g_wz = s.w.gcd(&s.z).magnitude().clone();
    if g_xy.is_zero() && g_wz.is_zero() {
        return s.clone();
    }
    // With both gcds nonzero only their common primes can contribute.
    let support = if g_xy.is_zero() || g_wz.is_zero() { &g_xy + &g_wz } else { g_xy.gcd(&g_wz) };
    if support.is_one() {
        return s.clone();
    }
    let mut lambda = BigUint::one();
    for atom in coprime_atoms([&support]) {
        let room = |g: &BigUint, w: u32| -> Option<u32> { (!g.is_zero()).then(|| valuation(g, &atom) / w) };
        let e = match (room(&g_xy, wt.xy), room(&g_wz, wt.wz)) {
            (Some(a), Some(b)) => a.min(b),
            (Some(a), None) | (None, Some(a)) => a,
            (None, None) => unreachable!(),
        };
        lambda *= num_traits::pow(atom, e as usize);
    }
    if lambda.is_one() {
        return s.clone();
    }
    let lambda = BigInt::from(lambda);
    let a = pow_int(&lambda, wt.xy);
    let b = pow_int(&lambda, wt.wz);
    Solution { kind: s.kind, x: &s.x / &a, y: &s.y / &a, w: &s.w / &b, z: &s.z / &b }
}

pub fn canonicalize(s: &Solution) -> Solution {
    let [x, y, w, z] = canonical_parts(s.kind, [s.x.clone(), s.y.clone(), s.w.clone(), s.z.clone()]);
    Solution { kind: s.kind, x, y, w, z }
}

/// Canonical, weighted-primitive representative.
pub fn normal_form(s: &Solution) -> Solution {
    canonicalize(&reduce_weighted_primitive(&canonicalize(s)))
}

/// The rational `lambda` with `to = lambda . from` under the weighted action,
/// if there is one. Both inputs should share a sign convention (compare
/// canonical forms when they do not).
pub fn weighted_scale_between(from: &RationalSolution, to: &RationalSolution) -> Option<BigRat> {
    if from.kind != to.kind {
        return None;
    }
    let wt = from.kind.weights();
    let pick = |idx: [usize; 2], w: u32| -> Option<Option<BigRat>> {
        let f = from.components();
        let t = to.components();
        idx.iter().find(|&&i| !f[i].is_zero()).map(|&i| root_exact(&(t[i] / f[i]), w))
    };
    let lambda = match pick([0, 1], wt.xy).or_else(|| pick([2, 3], wt.wz)) {
        Some(candidate) => candidate?,
        None => BigRat::one(),
    };
    if lambda.is_zero() {
        return None;
    }
    (from.scaled(&lambda) == *to).then_some(lambda)
}

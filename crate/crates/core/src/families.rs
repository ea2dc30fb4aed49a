//! Closed-form solution families.
//!
//! * `n = 2` factor splits: `X^6 - Y^6 = (a-b)(a+b)(a^2+ab+b^2)(a^2-ab+b^2)`
//!   with `X = a, Y = b`; any subset of the four factors times `t` becomes
//!   `W + Z`, the complementary product over `t` becomes `W - Z`.
//! * `n = 2` linear substitution `W = pt + a^3, Z = t + b^3`.
//! * `n = 3` closed form with `c = a^6 + b^6`.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::arith::{int, pow_int, BigInt};
use crate::error::{Error, Result};
use crate::solution::{normal_form, EqKind, Solution};

/// The four factors of `a^6 - b^6`.
pub const FACTOR_NAMES: [&str; 4] = ["a-b", "a+b", "a^2+ab+b^2", "a^2-ab+b^2"];

/// Which factors go into `W + Z` (bit `i` selects factor `F(i+1)`); the rest
/// go into `W - Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorSplit(u8);

impl FactorSplit {
    pub const CASE1: FactorSplit = FactorSplit(0b1010);
    pub const CASE2: FactorSplit = FactorSplit(0b1100);
    pub const CASE3: FactorSplit = FactorSplit(0b1011);
    pub const CASE4: FactorSplit = FactorSplit(0b1111);

    pub fn new(mask: u8) -> Result<Self> {
        if mask < 16 {
            Ok(FactorSplit(mask))
        } else {
            Err(Error::InvalidParameter(format!("split mask {mask} outside 0..16")))
        }
    }

    pub fn all() -> impl Iterator<Item = FactorSplit> {
        (0..16).map(FactorSplit)
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn contains(self, factor: usize) -> bool {
        self.0 & (1 << factor) != 0
    }

    pub fn complement(self) -> FactorSplit {
        FactorSplit(!self.0 & 0b1111)
    }
}

fn factors(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    let (a2, b2, ab) = (a * a, b * b, a * b);
    [a - b, a + b, &a2 + &ab + &b2, &a2 - &ab + &b2]
}

fn split_product(split: FactorSplit, f: &[BigInt; 4]) -> BigInt {
    (0..4).filter(|&i| split.contains(i)).fold(BigInt::one(), |acc, i| acc * &f[i])
}

/// `W + Z = S t`, `W - Z = C / t`, scaled by `2t` with weights `(1, 3)`:
/// `(2at, 2bt, 4t^2 (S t^2 + C), 4t^2 (S t^2 - C))`.
pub fn n2_factor_family(a: &BigInt, b: &BigInt, t: &BigInt, split: FactorSplit) -> Result<Solution> {
    if t.is_zero() {
        return Err(Error::InvalidParameter("t must be nonzero".into()));
    }
    let f = factors(a, b);
    let s = split_product(split, &f);
    let c = split_product(split.complement(), &f);
    let t2 = t * t;
    let four_t2 = &t2 * 4;
    let x = a * t * 2;
    let y = b * t * 2;
    let w = &four_t2 * (&s * &t2 + &c);
    let z = &four_t2 * (&s * &t2 - &c);
    Solution::new(EqKind::N2, x, y, w, z)
}

/// `(a(p^2-1), b(p^2-1), (p^2-1)^2 (a^3 p^2 - 2p b^3 + a^3), (p^2-1)^2 (2a^3 p - b^3 - b^3 p^2))`.
pub fn n2_method2(a: &BigInt, b: &BigInt, p: &BigInt) -> Result<Solution> {
    let m: BigInt = p * p - 1;
    if m.is_zero() {
        return Err(Error::InvalidParameter("p = +-1 makes p^2 - 1 vanish".into()));
    }
    let (a3, b3) = (pow_int(a, 3), pow_int(b, 3));
    let m2 = &m * &m;
    let p2 = p * p;
    let w = &m2 * (&a3 * &p2 - p * &b3 * 2 + &a3);
    let z = &m2 * (&a3 * p * 2 - &b3 - &b3 * &p2);
    Solution::new(EqKind::N2, a * &m, b * &m, w, z)
}

/// With `c = (a^2+b^2)(a^4-a^2b^2+b^4)`:
/// `(ac, bc, c a^2 (a^6 - 2b^6), c b^2 (b^6 - 2a^6))`.
pub fn n3_method1(a: &BigInt, b: &BigInt) -> Result<Solution> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::InvalidParameter("(a, b) = (0, 0)".into()));
    }
    let (a2, b2) = (a * a, b * b);
    let c = (&a2 + &b2) * (&a2 * &a2 - &a2 * &b2 + &b2 * &b2);
    let (a6, b6) = (pow_int(a, 6), pow_int(b, 6));
    let w = &c * &a2 * (&a6 - &b6 * 2);
    let z = &c * &b2 * (&b6 - &a6 * 2);
    Solution::new(EqKind::N3, a * &c, b * &c, w, z)
}

/// Stable family identifiers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyId {
    N2Split(FactorSplit),
    N2Method2,
    N3Method1,
}

impl FamilyId {
    /// Whether the third parameter is `t` (splits), `p` (method 2), or absent.
    pub fn third_param(self) -> Option<&'static str> {
        match self {
            FamilyId::N2Split(_) => Some("t"),
            FamilyId::N2Method2 => Some("p"),
            FamilyId::N3Method1 => None,
        }
    }

    /// Evaluates the family at one parameter point.
    pub fn eval(self, a: &BigInt, b: &BigInt, third: Option<&BigInt>) -> Result<Solution> {
        let need = |v: Option<&BigInt>| {
            v.cloned().ok_or_else(|| Error::InvalidParameter(format!("family {self} needs a third parameter")))
        };
        match self {
            FamilyId::N2Split(split) => n2_factor_family(a, b, &need(third)?, split),
            FamilyId::N2Method2 => n2_method2(a, b, &need(third)?),
            FamilyId::N3Method1 => n3_method1(a, b),
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyId::N2Split(FactorSplit::CASE1) => write!(f, "n2-case1"),
            FamilyId::N2Split(FactorSplit::CASE2) => write!(f, "n2-case2"),
            FamilyId::N2Split(FactorSplit::CASE3) => write!(f, "n2-case3"),
            FamilyId::N2Split(FactorSplit::CASE4) => write!(f, "n2-case4"),
            FamilyId::N2Split(s) => write!(f, "n2-split-{}", s.mask()),
            FamilyId::N2Method2 => write!(f, "n2-m2"),
            FamilyId::N3Method1 => write!(f, "n3-m1"),
        }
    }
}

impl FromStr for FamilyId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let id = match s {
            "n2-case1" => FamilyId::N2Split(FactorSplit::CASE1),
            "n2-case2" => FamilyId::N2Split(FactorSplit::CASE2),
            "n2-case3" => FamilyId::N2Split(FactorSplit::CASE3),
            "n2-case4" => FamilyId::N2Split(FactorSplit::CASE4),
            "n2-m2" => FamilyId::N2Method2,
            "n3-m1" => FamilyId::N3Method1,
            other => {
                let mask = other
                    .strip_prefix("n2-split-")
                    .and_then(|m| m.parse::<u8>().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown family id {other:?}")))?;
                FamilyId::N2Split(FactorSplit::new(mask)?)
            }
        };
        Ok(id)
    }
}

/// Inclusive integer ranges for `a`, `b` and the optional third parameter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamBox {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub third: Option<RangeInclusive<i64>>,
}

impl ParamBox {
    pub fn new(a: RangeInclusive<i64>, b: RangeInclusive<i64>, third: Option<RangeInclusive<i64>>) -> Self {
        ParamBox { a, b, third }
    }

    fn is_empty(&self) -> bool {
        self.a.is_empty() || self.b.is_empty() || self.third.as_ref().is_some_and(|t| t.is_empty())
    }
}

/// Evaluates a family over a box in lexicographic `(a, b, third)` order.
/// Points that violate the family's precondition (`t = 0`, `p = +-1`,
/// `a = b = 0`) are skipped. With `reduce`, outputs are brought to normal
/// form and deduplicated, keeping the first occurrence.
pub fn enumerate_family(id: FamilyId, params: &ParamBox, reduce: bool) -> Result<Vec<Solution>> {
    if params.is_empty() {
        return Err(Error::EmptyBox);
    }
    let thirds: Vec<Option<i64>> = match (id.third_param(), &params.third) {
        (Some(_), Some(r)) => r.clone().map(Some).collect(),
        (Some(name), None) => {
            return Err(Error::InvalidParameter(format!("family {id} needs a range for {name}")));
        }
        (None, _) => vec![None],
    };
    let mut out = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for a in params.a.clone() {
        for b in params.b.clone() {
            for third in &thirds {
                let third = third.map(int);
                let s = match id.eval(&int(a), &int(b), third.as_ref()) {
                    Ok(s) => s,
                    Err(Error::InvalidParameter(_)) => continue,
                    Err(e) => return Err(e),
                };
                if reduce {
                    let s = normal_form(&s);
                    if seen.insert(s.clone()) {
                        out.push(s);
                    }
                } else {
                    out.push(s);
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::canonicalize;

    fn i(v: i64) -> BigInt {
        int(v)
    }

    #[test]
    fn factor_split_examples() {
        let case = |s| n2_factor_family(&i(2), &i(1), &i(1), s).unwrap();
        assert_eq!(case(FactorSplit::CASE1), Solution::from_i64(2, 4, 2, 64, 8));
        assert_eq!(case(FactorSplit::CASE2), Solution::from_i64(2, 4, 2, 96, 72));
        assert_eq!(case(FactorSplit::CASE3), Solution::from_i64(2, 4, 2, 64, 8));
        assert_eq!(case(FactorSplit::CASE4), Solution::from_i64(2, 4, 2, 256, 248));
        for split in FactorSplit::all().filter(|s| s.contains(0)) {
            let s = n2_factor_family(&i(1), &i(1), &i(1), split).unwrap();
            assert!(s.is_trivial(), "{split:?}");
        }
        assert!(n2_factor_family(&i(2), &i(1), &i(0), FactorSplit::CASE1).is_err());
    }

    #[test]
    fn method2_examples() {
        assert_eq!(n2_method2(&i(2), &i(1), &i(2)).unwrap(), Solution::from_i64(2, 6, 3, 324, 243));
        let s = n2_method2(&i(1), &i(1), &i(0)).unwrap();
        assert_eq!(canonicalize(&s), Solution::from_i64(2, 1, 1, 1, 1));
        assert!(s.is_trivial());
        // Substitution oracle: m = 8, W = 64 (9 - 48 + 1), Z = 64 (6 - 8 - 72).
        let s = n2_method2(&i(1), &i(2), &i(3)).unwrap();
        assert_eq!(s, Solution::from_i64(2, 8, 16, -2432, -4736));
        assert_eq!(canonicalize(&s), Solution::from_i64(2, 8, 16, 2432, 4736));
        assert!(n2_method2(&i(1), &i(2), &i(1)).is_err());
        assert!(n2_method2(&i(1), &i(2), &i(-1)).is_err());
    }

    #[test]
    fn n3_examples() {
        assert_eq!(n3_method1(&i(2), &i(1)).unwrap(), Solution::from_i64(3, 130, 65, 16120, -8255));
        let s = n3_method1(&i(1), &i(1)).unwrap();
        assert_eq!(s, Solution::from_i64(3, 2, 2, -2, -2));
        assert_eq!(canonicalize(&s), Solution::from_i64(3, 2, 2, 2, 2));
        assert_eq!(n3_method1(&i(1), &i(0)).unwrap(), Solution::from_i64(3, 1, 0, 1, 0));
        assert!(n3_method1(&i(0), &i(0)).is_err());
    }

    #[test]
    fn ids_round_trip() {
        for s in ["n2-case1", "n2-case2", "n2-case3", "n2-case4", "n2-m2", "n3-m1", "n2-split-0", "n2-split-7"] {
            assert_eq!(s.parse::<FamilyId>().unwrap().to_string(), s);
        }
        assert_eq!("n2-split-10".parse::<FamilyId>().unwrap().to_string(), "n2-case1");
        assert!("n2-split-16".parse::<FamilyId>().is_err());
        assert!("n5-m1".parse::<FamilyId>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let id: FamilyId = "n2-case1".parse().unwrap();
        let sols = enumerate_family(id, &ParamBox::new(2..=2, 1..=1, Some(1..=3)), false).unwrap();
        assert_eq!(sols.len(), 3);
        assert_eq!(sols[0], Solution::from_i64(2, 4, 2, 64, 8));
        assert_ne!(sols[0], sols[1]);
        assert_ne!(sols[1], sols[2]);

        let sols = enumerate_family(FamilyId::N3Method1, &ParamBox::new(1..=2, 1..=2, None), false).unwrap();
        assert_eq!(sols.len(), 4);
        assert_eq!(sols.iter().filter(|s| s.is_trivial()).count(), 2);

        #[allow(clippy::reversed_empty_ranges)]
        let empty = ParamBox::new(1..=0, 1..=2, None);
        assert_eq!(enumerate_family(FamilyId::N3Method1, &empty, false), Err(Error::EmptyBox));
        let missing = ParamBox::new(1..=2, 1..=2, None);
        assert!(enumerate_family(FamilyId::N2Method2, &missing, false).is_err());
    }

    #[test]
    fn enumeration_skips_bad_points_and_dedups() {
        // t = 0 and p = +-1 are skipped rather than failing the whole run.
        let sols = enumerate_family(FamilyId::N2Method2, &ParamBox::new(1..=1, 2..=2, Some(-1..=1)), false).unwrap();
        assert_eq!(sols.len(), 1);
        let raw = enumerate_family(FamilyId::N3Method1, &ParamBox::new(1..=3, 1..=3, None), false).unwrap();
        let reduced = enumerate_family(FamilyId::N3Method1, &ParamBox::new(1..=3, 1..=3, None), true).unwrap();
        assert!(reduced.len() < raw.len());
        let mut uniq = reduced.clone();
        uniq.sort();
        uniq.dedup();
        assert_eq!(uniq.len(), reduced.len());
    }
}

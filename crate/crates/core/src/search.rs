//! Exhaustive search in a box, by meet in the middle on the shared value
//! `X^6 - Y^6 = W^n - Z^n`.
//!
//! Solutions are enumerated with `0 <= Y <= X <= xy_bound` (swapping `X, Y`
//! together with `W, Z` maps any solution there). For even `n`,
//! `0 <= Z <= W <= wz_bound`; for `n = 3`, `|W|, |Z| <= wz_bound` with
//! `W + Z >= 0`. Every tuple in that box is already in canonical form.

use num_traits::{Signed, ToPrimitive};
use rayon::prelude::*;
use rustc_hash::FxHashMap;

use crate::arith::BigInt;
use crate::error::{Error, Result};
use crate::solution::{reduce_weighted_primitive, verify_int, EqKind, Solution};

pub const MAX_XY_BOUND: u64 = 500;
pub const MAX_WZ_BOUND: u64 = 1_000_000;
/// Upper limit on `(W, Z)` pairs visited by one search.
pub const MAX_SCAN_PAIRS: u128 = 400_000_000;
/// Upper limit on trivial tuples written with `include_trivial`.
pub const MAX_TRIVIAL: u128 = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub kind: EqKind,
    pub xy_bound: u64,
    pub wz_bound: u64,
    pub include_trivial: bool,
    pub primitive_only: bool,
}

impl SearchSpec {
    pub fn new(kind: EqKind, xy_bound: u64, wz_bound: u64) -> Self {
        SearchSpec { kind, xy_bound, wz_bound, include_trivial: false, primitive_only: false }
    }

    pub fn with_trivial(mut self, on: bool) -> Self {
        self.include_trivial = on;
        self
    }

    pub fn with_primitive_only(mut self, on: bool) -> Self {
        self.primitive_only = on;
        self
    }

    /// `X = Y` and `W = Z`, both in range.
    fn trivial_count(&self) -> u128 {
        (self.xy_bound as u128 + 1) * (self.wz_bound as u128 + 1)
    }

    /// Rejects specs over the documented budget.
    pub fn check_budget(&self) -> Result<()> {
        if self.xy_bound > MAX_XY_BOUND {
            return Err(Error::Budget(format!("xy bound {} exceeds {MAX_XY_BOUND}", self.xy_bound)));
        }
        if self.wz_bound > MAX_WZ_BOUND {
            return Err(Error::Budget(format!("wz bound {} exceeds {MAX_WZ_BOUND}", self.wz_bound)));
        }
        if self.include_trivial && self.trivial_count() > MAX_TRIVIAL {
            return Err(Error::Budget(format!(
                "{} trivial tuples exceed the output cap {MAX_TRIVIAL}",
                self.trivial_count()
            )));
        }
        let pairs = scan_ranges(self).iter().map(|r| (r.2 - r.1 + 1).max(0) as u128).sum::<u128>();
        if pairs > MAX_SCAN_PAIRS {
            return Err(Error::Budget(format!("search would visit {pairs} (W, Z) pairs, over {MAX_SCAN_PAIRS}")));
        }
        Ok(())
    }
}

fn pow(v: i128, e: u32) -> i128 {
    v.pow(e)
}

/// Largest `w` with `w^e <= target`, for `target >= 0`.
fn iroot_floor(target: i128, e: u32) -> i128 {
    let mut r = (target as f64).powf(1.0 / e as f64) as i128;
    while r > 0 && pow(r, e) > target {
        r -= 1;
    }
    while pow(r + 1, e) <= target {
        r += 1;
    }
    r
}

fn max_value(spec: &SearchSpec) -> i128 {
    pow(spec.xy_bound as i128, 6)
}

/// `(Z, W_min, W_max)` for every `Z` whose scan range is nonempty: nontrivial
/// pairs in the canonical box with `0 < W^n - Z^n <= max X^6 - Y^6`.
fn scan_ranges(spec: &SearchSpec) -> Vec<(i128, i128, i128)> {
    let e = spec.kind.exponent();
    let b = spec.wz_bound as i128;
    let m = max_value(spec);
    let z_lo = if e == 3 { -b } else { 0 };
    (z_lo..=b)
        .filter_map(|z| {
            let w_lo = if e == 3 { (z + 1).max(-z) } else { z + 1 };
            // W^n <= m + Z^n; for n = 3 with Z < 0 the right side may go negative.
            let cap = m + pow(z, e);
            if cap < 0 {
                return None;
            }
            let w_hi = iroot_floor(cap, e).min(b);
            (w_lo <= w_hi).then_some((z, w_lo, w_hi))
        })
        .collect()
}

fn thread_cap() -> Option<usize> {
    std::env::var("DIO_THREADS").ok()?.trim().parse().ok().filter(|&n: &usize| n > 0)
}

fn to_solution(kind: EqKind, x: i128, y: i128, w: i128, z: i128) -> Solution {
    Solution::new(kind, x.into(), y.into(), w.into(), z.into()).expect("search emits verified tuples")
}

/// All canonical solutions in the box, sorted.
pub fn brute_search(spec: &SearchSpec) -> Result<Vec<Solution>> {
    spec.check_budget()?;
    let e = spec.kind.exponent();
    let xy = spec.xy_bound as i128;
    let mut table: FxHashMap<i128, Vec<(i128, i128)>> = FxHashMap::default();
    for x in 0..=xy {
        for y in 0..x {
            table.entry(pow(x, 6) - pow(y, 6)).or_default().push((x, y));
        }
    }
    let ranges = scan_ranges(spec);
    let scan = || {
        ranges
            .par_iter()
            .flat_map_iter(|&(z, w_lo, w_hi)| {
                let zn = pow(z, e);
                let table = &table;
                (w_lo..=w_hi).flat_map(move |w| {
                    let hits = table.get(&(pow(w, e) - zn)).map(|v| v.as_slice()).unwrap_or(&[]);
                    hits.iter().map(move |&(x, y)| (x, y, w, z))
                })
            })
            .collect::<Vec<_>>()
    };
    let hits = match thread_cap() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|err| Error::Budget(format!("thread pool: {err}")))?
            .install(scan),
        None => scan(),
    };
    let mut out: Vec<Solution> = hits.into_iter().map(|(x, y, w, z)| to_solution(spec.kind, x, y, w, z)).collect();
    if spec.include_trivial {
        for x in 0..=xy {
            for w in 0..=spec.wz_bound as i128 {
                out.push(to_solution(spec.kind, x, x, w, w));
            }
        }
    }
    if spec.primitive_only {
        out.retain(|s| &reduce_weighted_primitive(s) == s);
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Moves a tuple into the search box orientation: absolute values (sign of
/// `W, Z` kept for `n = 3`), `X >= Y`, and `W + Z >= 0` for `n = 3`.
fn orient(kind: EqKind, q: &[BigInt; 4]) -> [BigInt; 4] {
    let [x, y, w, z] = q.clone();
    let (x, y) = (x.abs(), y.abs());
    let (mut w, mut z) = if kind == EqKind::N3 { (w, z) } else { (w.abs(), z.abs()) };
    if x < y {
        std::mem::swap(&mut w, &mut z);
    }
    if kind == EqKind::N3 && (&w + &z).is_negative() {
        (w, z) = (-z, -w);
    }
    let (x, y) = if x < y { (y, x) } else { (x, y) };
    [x, y, w, z]
}

/// Whether `q` is in `brute_search(spec)`, decided directly: in range,
/// verifies, and passes the trivial/primitive filters. Tuples outside the
/// box are rejected.
pub fn contains(spec: &SearchSpec, q: &[BigInt; 4]) -> Result<bool> {
    let [x, y, w, z] = orient(spec.kind, q);
    let within = |v: &BigInt, b: u64| v.abs().to_u64().is_some_and(|a| a <= b);
    if !within(&x, spec.xy_bound) || !within(&w, spec.wz_bound) || !within(&z, spec.wz_bound) {
        return Err(Error::InvalidParameter(format!(
            "({}, {}, {}, {}) lies outside the box xy <= {}, wz <= {}",
            q[0], q[1], q[2], q[3], spec.xy_bound, spec.wz_bound
        )));
    }
    if !verify_int(spec.kind, &x, &y, &w, &z) {
        return Ok(false);
    }
    let s = Solution::new(spec.kind, x, y, w, z)?;
    if s.is_trivial() && !spec.include_trivial {
        return Ok(false);
    }
    Ok(!spec.primitive_only || reduce_weighted_primitive(&s) == s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quad(v: [i64; 4]) -> [BigInt; 4] {
        v.map(BigInt::from)
    }

    /// Direct quadruple loop over the canonical box.
    fn naive(spec: &SearchSpec) -> Vec<Solution> {
        let e = spec.kind.exponent();
        let (xy, b) = (spec.xy_bound as i128, spec.wz_bound as i128);
        let z_lo = if e == 3 { -b } else { 0 };
        let mut out = Vec::new();
        for x in 0..=xy {
            for y in 0..=x {
                for w in z_lo..=b {
                    for z in z_lo..=w {
                        if e == 3 && w + z < 0 {
                            continue;
                        }
                        if pow(x, 6) - pow(y, 6) == pow(w, e) - pow(z, e) {
                            let s = to_solution(spec.kind, x, y, w, z);
                            if spec.include_trivial || !s.is_trivial() {
                                out.push(s);
                            }
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    #[test]
    fn finds_known_solutions() {
        let found = brute_search(&SearchSpec::new(EqKind::N3, 10, 60)).unwrap();
        assert!(found.contains(&Solution::from_i64(3, 6, 2, 48, 40)));
        let found = brute_search(&SearchSpec::new(EqKind::N2, 5, 100)).unwrap();
        assert!(found.contains(&Solution::from_i64(2, 4, 2, 64, 8)));
    }

    #[test]
    fn tiny_box_with_trivial() {
        let found = brute_search(&SearchSpec::new(EqKind::N2, 2, 2).with_trivial(true)).unwrap();
        let nontrivial: Vec<_> = found.iter().filter(|s| !s.is_trivial()).collect();
        assert_eq!(found.len() - nontrivial.len(), 9);
        assert_eq!(nontrivial, [&Solution::from_i64(2, 1, 0, 1, 0)]);
    }

    #[test]
    fn agrees_with_naive_loop() {
        for spec in [
            SearchSpec::new(EqKind::N2, 4, 80),
            SearchSpec::new(EqKind::N3, 4, 40).with_trivial(true),
            SearchSpec::new(EqKind::N4, 5, 60),
            SearchSpec::new(EqKind::N3, 6, 30),
        ] {
            assert_eq!(brute_search(&spec).unwrap(), naive(&spec), "{spec:?}");
        }
    }

    #[test]
    fn contains_examples() {
        let spec = SearchSpec::new(EqKind::N3, 10, 60);
        assert!(contains(&spec, &quad([6, 2, 48, 40])).unwrap());
        assert!(!contains(&spec, &quad([6, 2, 48, 41])).unwrap());
        assert!(contains(&spec.with_trivial(true), &quad([1, 1, 1, 1])).unwrap());
        assert!(!contains(&spec, &quad([1, 1, 1, 1])).unwrap());
        assert!(contains(&spec, &quad([2, 6, 40, 48])).unwrap());
        assert!(contains(&spec, &quad([6, 2, -40, -48])).unwrap());
        assert!(contains(&spec, &quad([11, 2, 48, 40])).is_err());
        assert!(contains(&spec.with_primitive_only(true), &quad([6, 2, 48, 40])).map(|b| !b).unwrap());
    }

    #[test]
    fn contains_agrees_with_search() {
        let spec = SearchSpec::new(EqKind::N3, 4, 20).with_trivial(true);
        let found = brute_search(&spec).unwrap();
        for x in 0..=4i64 {
            for y in 0..=4 {
                for w in -20..=20i64 {
                    for z in -20..=20i64 {
                        let q = quad([x, y, w, z]);
                        let member = contains(&spec, &q).unwrap();
                        let oriented = orient(spec.kind, &q);
                        let listed = Solution::new(
                            spec.kind,
                            oriented[0].clone(),
                            oriented[1].clone(),
                            oriented[2].clone(),
                            oriented[3].clone(),
                        )
                        .is_ok_and(|s| found.contains(&s));
                        assert_eq!(member, listed, "{q:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_filter() {
        let spec = SearchSpec::new(EqKind::N3, 10, 60);
        let all = brute_search(&spec).unwrap();
        let prim = brute_search(&spec.with_primitive_only(true)).unwrap();
        assert!(prim.iter().all(|s| &reduce_weighted_primitive(s) == s));
        assert!(prim.contains(&Solution::from_i64(3, 3, 1, 12, 10)));
        assert!(!prim.contains(&Solution::from_i64(3, 6, 2, 48, 40)));
        assert!(prim.len() < all.len());
    }

    #[test]
    fn budget() {
        assert!(matches!(brute_search(&SearchSpec::new(EqKind::N2, 501, 10)), Err(Error::Budget(_))));
        assert!(matches!(brute_search(&SearchSpec::new(EqKind::N2, 10, 1_000_001)), Err(Error::Budget(_))));
        assert!(matches!(
            brute_search(&SearchSpec::new(EqKind::N2, 500, 1_000_000).with_trivial(true)),
            Err(Error::Budget(_))
        ));
        assert!(SearchSpec::new(EqKind::N2, 500, 1_000_000).check_budget().is_err());
        assert!(SearchSpec::new(EqKind::N2, 8, 300).check_budget().is_ok());
    }

    #[test]
    fn root_floor() {
        for e in [2, 3, 4] {
            for t in 0..2000i128 {
                let r = iroot_floor(t, e);
                assert!(pow(r, e) <= t && pow(r + 1, e) > t);
            }
        }
        assert_eq!(iroot_floor(pow(1_000_000, 4) - 1, 4), 999_999);
    }
}

//! The four elliptic-curve methods end to end: build the method's quartic from
//! its substitution identity, walk multiples of a seed point through the
//! Weierstrass model, and turn each quartic point into an integer solution.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::Serialize;

use crate::arith::{fmt_rat, parse_int, parse_rat, pow_int, rat_int, sqrt_exact, BigInt, BigRat, UniPoly};
use crate::error::{Error, Result};
use crate::quartic::{
    conic_parametrize, simultaneous_square_quartic, to_weierstrass, Conic, ConicParametrization, QuarticCurve,
    QuarticMap, QuarticPoint, Seed,
};
use crate::solution::{canonicalize, clear_denominators_with_lambda, EqKind, RationalSolution, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PipelineId {
    N2M3,
    N3M2,
    N4M1,
    N4M2,
}

impl PipelineId {
    pub fn all() -> [PipelineId; 4] {
        [PipelineId::N2M3, PipelineId::N3M2, PipelineId::N4M1, PipelineId::N4M2]
    }

    pub fn kind(self) -> EqKind {
        match self {
            PipelineId::N2M3 => EqKind::N2,
            PipelineId::N3M2 => EqKind::N3,
            PipelineId::N4M1 | PipelineId::N4M2 => EqKind::N4,
        }
    }

    /// Names of the integer parameters, in order.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            PipelineId::N2M3 | PipelineId::N3M2 => &["u"],
            PipelineId::N4M1 => &["a", "b"],
            PipelineId::N4M2 => &["a", "b", "c"],
        }
    }
}

impl fmt::Display for PipelineId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PipelineId::N2M3 => "n2-m3",
            PipelineId::N3M2 => "n3-m2",
            PipelineId::N4M1 => "n4-m1",
            PipelineId::N4M2 => "n4-m2",
        })
    }
}

impl FromStr for PipelineId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PipelineId::all()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| Error::Parse(format!("unknown pipeline '{s}' (expected n2-m3, n3-m2, n4-m1 or n4-m2)")))
    }
}

// ---------------------------------------------------------------------------
// Quartics and solution builders
// ---------------------------------------------------------------------------

fn nonzero(v: &BigInt, what: &str) -> Result<()> {
    if v.is_zero() {
        Err(Error::InvalidParameter(format!("{what} = 0 is degenerate")))
    } else {
        Ok(())
    }
}

fn on_or_reject(q: &QuarticCurve, p: &QuarticPoint) -> Result<()> {
    if q.on_quartic(p) {
        Ok(())
    } else {
        Err(Error::NotOnQuartic(format!("{p} is not on {q}")))
    }
}

/// Clears denominators with the minimal weighted `lambda`, then canonicalizes.
fn finish(rs: &RationalSolution) -> (Solution, BigInt) {
    let (s, lambda) = clear_denominators_with_lambda(rs);
    (canonicalize(&s), lambda)
}

/// `v^2 = 3u x^4 + 10u^3 x^2 + 3u^5`.
pub fn n2_method3_quartic(u: &BigInt) -> Result<QuarticCurve> {
    nonzero(u, "u")?;
    let c = [&pow_int(u, 5) * 3, BigInt::zero(), &pow_int(u, 3) * 10, BigInt::zero(), u * 3];
    QuarticCurve::new(UniPoly::from_bigints(&c))
}

/// `(x + u, x - u, v^2 + x, v^2 - x)` for a point `(x, v)` on the `u`-quartic.
pub fn n2_method3_rational(u: &BigInt, p: &QuarticPoint) -> Result<RationalSolution> {
    on_or_reject(&n2_method3_quartic(u)?, p)?;
    if p.x.is_zero() {
        return Err(Error::InvalidParameter("x = 0 is excluded (the identity divides by x)".into()));
    }
    let u = rat_int(u.clone());
    let t2 = &p.v * &p.v;
    RationalSolution::new(EqKind::N2, &p.x + &u, &p.x - &u, &t2 + &p.x, &t2 - &p.x)
}

pub fn n2_method3_solution(u: &BigInt, p: &QuarticPoint) -> Result<Solution> {
    Ok(finish(&n2_method3_rational(u, p)?).0)
}

/// `y^2 = 18u x^4 + (60u^3 - 3) x^2 + 18u^5`.
pub fn n3_method2_quartic(u: &BigInt) -> Result<QuarticCurve> {
    nonzero(u, "u")?;
    let c = [&pow_int(u, 5) * 18, BigInt::zero(), &pow_int(u, 3) * 60 - 3, BigInt::zero(), u * 18];
    QuarticCurve::new(UniPoly::from_bigints(&c))
}

/// With `t = y/3`: `(x + u, x - u, t + x, t - x)`.
pub fn n3_method2_rational(u: &BigInt, p: &QuarticPoint) -> Result<RationalSolution> {
    on_or_reject(&n3_method2_quartic(u)?, p)?;
    if p.x.is_zero() {
        return Err(Error::InvalidParameter("x = 0 is excluded (the identity divides by x)".into()));
    }
    let u = rat_int(u.clone());
    let t = &p.v / rat_int(3);
    RationalSolution::new(EqKind::N3, &p.x + &u, &p.x - &u, &t + &p.x, &t - &p.x)
}

pub fn n3_method2_solution(u: &BigInt, p: &QuarticPoint) -> Result<Solution> {
    Ok(finish(&n3_method2_rational(u, p)?).0)
}

/// `u^2 = (a^3 + b^3) t^2 + (a^3 - b^3)` and `v^2 = (a^3 + b^3) t^2 - (a^3 - b^3)`.
pub fn n4_method1_conics(a: &BigInt, b: &BigInt) -> Result<(Conic, Conic)> {
    let (a3, b3) = (pow_int(a, 3), pow_int(b, 3));
    let sum = rat_int(&a3 + &b3);
    let diff = rat_int(&a3 - &b3);
    if sum.is_zero() || diff.is_zero() {
        return Err(Error::InvalidParameter(format!("a = {a}, b = {b}: a = +-b makes a conic degenerate")));
    }
    Ok((Conic::new(sum.clone(), diff.clone())?, Conic::new(sum, -diff)?))
}

/// `(2at, 2bt, 2tu, 2tv)` for `(t, u, v)` on both conics.
pub fn n4_method1_rational(a: &BigInt, b: &BigInt, t: &BigRat, u: &BigRat, v: &BigRat) -> Result<RationalSolution> {
    let (c1, c2) = n4_method1_conics(a, b)?;
    if !c1.contains(t, u) || !c2.contains(t, v) {
        return Err(Error::NotOnQuartic(format!("(t, u, v) = ({t}, {u}, {v}) does not satisfy {c1} and {c2}")));
    }
    if t.is_zero() {
        return Err(Error::InvalidParameter("t = 0 gives only the zero solution".into()));
    }
    let two_t = rat_int(2) * t;
    RationalSolution::new(EqKind::N4, &two_t * rat_int(a.clone()), &two_t * rat_int(b.clone()), &two_t * u, &two_t * v)
}

pub fn n4_method1_solution(a: &BigInt, b: &BigInt, t: &BigRat, u: &BigRat, v: &BigRat) -> Result<Solution> {
    Ok(finish(&n4_method1_rational(a, b, t, u, v)?).0)
}

/// First point on `u^2 = A t^2 + B` with `t = n/d`, `|n| <= bound`, `d <= den_bound`,
/// scanning `d` upward and `n` as `0, 1, -1, 2, -2, ...`; positive `u`.
pub fn find_conic_point(c: &Conic, bound: i64, den_bound: i64) -> Option<(BigRat, BigRat)> {
    for d in 1..=den_bound.max(1) {
        for n in std::iter::once(0).chain((1..=bound).flat_map(|n| [n, -n])) {
            if num_integer::gcd(n, d) != 1 && !(n == 0 && d == 1) {
                continue;
            }
            let t = BigRat::new(n.into(), d.into());
            if let Some(u) = sqrt_exact(&(c.a() * &t * &t + c.b())) {
                return Some((t, u));
            }
        }
    }
    None
}

/// The method-1 `n = 4` data: the conic pair, the chord parametrization of
/// the first conic and the quartic in `k` obtained by substituting it into
/// the second (`V = v (k^2 - A)`).
#[derive(Clone, Debug)]
pub struct N4Method1 {
    pub a: BigInt,
    pub b: BigInt,
    pub conics: (Conic, Conic),
    pub param: ConicParametrization,
    pub quartic: QuarticCurve,
}

impl N4Method1 {
    /// Seeds the first conic with the first small rational point found.
    pub fn new(a: &BigInt, b: &BigInt) -> Result<Self> {
        let (c1, _) = n4_method1_conics(a, b)?;
        let (t0, u0) = find_conic_point(&c1, 100, 10)
            .ok_or_else(|| Error::NoSolutions(format!("no small rational point on {c1}")))?;
        Self::with_conic_seed(a, b, t0, u0)
    }

    pub fn with_conic_seed(a: &BigInt, b: &BigInt, t0: BigRat, u0: BigRat) -> Result<Self> {
        let (c1, c2) = n4_method1_conics(a, b)?;
        let c1 = c1.with_seed(t0, u0)?;
        let param = conic_parametrize(&c1)?;
        let (quartic, _) = simultaneous_square_quartic(&c1, &c2)?;
        Ok(N4Method1 { a: a.clone(), b: b.clone(), conics: (c1, c2), param, quartic })
    }

    /// `(k, V)` on the quartic to `(t, u, v)` on both conics.
    pub fn triple(&self, p: &QuarticPoint) -> Result<(BigRat, BigRat, BigRat)> {
        on_or_reject(&self.quartic, p)?;
        let (t, u) = self.param.eval(&p.x)?;
        let v = &p.v / self.param.t.den.eval(&p.x);
        Ok((t, u, v))
    }

    pub fn rational(&self, p: &QuarticPoint) -> Result<RationalSolution> {
        let (t, u, v) = self.triple(p)?;
        n4_method1_rational(&self.a, &self.b, &t, &u, &v)
    }
}

/// `V^2 = -(a^6 - b^6) U^4 + (a^6 - b^6) c^4`.
pub fn n4_method2_quartic(a: &BigInt, b: &BigInt, c: &BigInt) -> Result<QuarticCurve> {
    let d = pow_int(a, 6) - pow_int(b, 6);
    if d.is_zero() {
        return Err(Error::InvalidParameter(format!("a = {a}, b = {b}: a^6 = b^6 is degenerate")));
    }
    nonzero(c, "c")?;
    let coeffs = [&d * pow_int(c, 4), BigInt::zero(), BigInt::zero(), BigInt::zero(), -d];
    QuarticCurve::new(UniPoly::from_bigints(&coeffs))
}

/// With `t = V / (a^6 - b^6)`: `(at, bt, ct, Ut)`.
pub fn n4_method2_rational(a: &BigInt, b: &BigInt, c: &BigInt, p: &QuarticPoint) -> Result<RationalSolution> {
    on_or_reject(&n4_method2_quartic(a, b, c)?, p)?;
    if p.v.is_zero() {
        return Err(Error::InvalidParameter("V = 0 gives t = 0".into()));
    }
    let t = &p.v / rat_int(pow_int(a, 6) - pow_int(b, 6));
    RationalSolution::new(
        EqKind::N4,
        &t * rat_int(a.clone()),
        &t * rat_int(b.clone()),
        &t * rat_int(c.clone()),
        &t * &p.x,
    )
}

pub fn n4_method2_solution(a: &BigInt, b: &BigInt, c: &BigInt, p: &QuarticPoint) -> Result<Solution> {
    Ok(finish(&n4_method2_rational(a, b, c, p)?).0)
}

// ---------------------------------------------------------------------------
// Seed registry
// ---------------------------------------------------------------------------

fn qp(x: &str, v: &str) -> QuarticPoint {
    QuarticPoint::new(parse_rat(x).expect("registry literal"), parse_rat(v).expect("registry literal"))
}

/// Parameters of the published configuration of each method.
pub fn published_params(id: PipelineId) -> Vec<BigInt> {
    let v: &[i64] = match id {
        PipelineId::N2M3 => &[19],
        PipelineId::N3M2 => &[2],
        PipelineId::N4M1 => &[2, 1],
        PipelineId::N4M2 => &[2, 1, 4],
    };
    v.iter().map(|&x| BigInt::from(x)).collect()
}

/// Seed for the stream of a published configuration. For `n = 2` and `n = 3`
/// these are small points read off the quartic; for `n = 4` no small point
/// exists and the published doubled point is used.
pub fn registry_seed(id: PipelineId, params: &[BigInt]) -> Option<QuarticPoint> {
    if params != published_params(id).as_slice() {
        return None;
    }
    Some(match id {
        PipelineId::N2M3 => qp("76", "48013"),
        PipelineId::N3M2 => qp("4", "132"),
        PipelineId::N4M1 => published_n4m1_point(),
        PipelineId::N4M2 => published_n4m2_point(),
    })
}

/// Published doubled quartic point for `n = 2` (`u = 19`).
pub fn published_n2m3_point() -> QuarticPoint {
    qp("-14407111/765404", "3653190399329653/585843283216")
}

/// Published doubled quartic point for `n = 3` (`u = 2`).
pub fn published_n3m2_point() -> QuarticPoint {
    qp("-44/15", "6428/75")
}

/// Published doubled quartic point `(k, V)` for `n = 4`, method 1 (`(a, b) = (2, 1)`).
pub fn published_n4m1_point() -> QuarticPoint {
    qp("508773/142471", "-362848187502/20297985841")
}

/// Published doubled quartic point `(U, V)` for `n = 4`, method 2 (`(a, b, c) = (2, 1, 4)`).
pub fn published_n4m2_point() -> QuarticPoint {
    qp("452/463", "27175680/214369")
}

// ---------------------------------------------------------------------------
// Running a pipeline
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeedSource {
    /// The registry seed of a published configuration.
    Registry,
    Point(QuarticPoint),
    /// Points at infinity of a quartic with square leading coefficient.
    LeadSquare,
    /// First point with `v != 0` from a scan of `x = n`, `|n| <= 100`.
    Scan,
}

impl fmt::Display for SeedSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedSource::Registry => f.write_str("registry"),
            SeedSource::Point(p) => write!(f, "{},{}", p.x, p.v),
            SeedSource::LeadSquare => f.write_str("lead-square"),
            SeedSource::Scan => f.write_str("scan"),
        }
    }
}

impl FromStr for SeedSource {
    type Err = Error;

    /// `registry`, `lead-square`, `scan` or `x,v` with rational coordinates.
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "registry" => Ok(SeedSource::Registry),
            "lead-square" => Ok(SeedSource::LeadSquare),
            "scan" => Ok(SeedSource::Scan),
            _ => {
                let (x, v) = s
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("seed '{s}': expected registry, lead-square, scan or x,v")))?;
                Ok(SeedSource::Point(QuarticPoint::new(parse_rat(x.trim())?, parse_rat(v.trim())?)))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineConfig {
    pub id: PipelineId,
    pub params: Vec<BigInt>,
    pub seed: SeedSource,
    pub multiples: usize,
    /// Also emit `(-x, v)` for each point of an even quartic.
    pub mirror: bool,
}

impl PipelineConfig {
    pub fn new(id: PipelineId, params: Vec<BigInt>) -> Result<Self> {
        let cfg = PipelineConfig { id, params, seed: SeedSource::Registry, multiples: 1, mirror: false };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The published configuration; `n = 2` emits both branches so the
    /// printed orientation appears.
    pub fn published(id: PipelineId) -> Self {
        PipelineConfig {
            id,
            params: published_params(id),
            seed: SeedSource::Registry,
            multiples: 1,
            mirror: id == PipelineId::N2M3,
        }
    }

    pub fn with_seed(mut self, seed: SeedSource) -> Self {
        self.seed = seed;
        self
    }

    pub fn with_multiples(mut self, m: usize) -> Self {
        self.multiples = m;
        self
    }

    pub fn with_mirror(mut self, mirror: bool) -> Self {
        self.mirror = mirror;
        self
    }

    /// Parses comma-separated integer parameters, e.g. `"2,1,4"`.
    pub fn parse_params(s: &str) -> Result<Vec<BigInt>> {
        s.split(',').map(|p| parse_int(p.trim())).collect()
    }

    pub fn validate(&self) -> Result<()> {
        let names = self.id.param_names();
        if self.params.len() != names.len() {
            return Err(Error::InvalidParameter(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.id,
                names.len(),
                names.join(","),
                self.params.len()
            )));
        }
        if self.multiples == 0 {
            return Err(Error::InvalidParameter("multiples must be at least 1".into()));
        }
        Method::new(self.id, &self.params).map(|_| ())
    }
}

/// A method instantiated at fixed parameters.
#[derive(Clone, Debug)]
pub enum Method {
    N2M3(BigInt, QuarticCurve),
    N3M2(BigInt, QuarticCurve),
    N4M1(Box<N4Method1>),
    N4M2([BigInt; 3], QuarticCurve),
}

impl Method {
    pub fn new(id: PipelineId, params: &[BigInt]) -> Result<Self> {
        let p = |i: usize| {
            params
                .get(i)
                .cloned()
                .ok_or_else(|| Error::InvalidParameter(format!("{id}: missing parameter {}", id.param_names()[i])))
        };
        Ok(match id {
            PipelineId::N2M3 => Method::N2M3(p(0)?, n2_method3_quartic(&p(0)?)?),
            PipelineId::N3M2 => Method::N3M2(p(0)?, n3_method2_quartic(&p(0)?)?),
            PipelineId::N4M1 => Method::N4M1(Box::new(N4Method1::new(&p(0)?, &p(1)?)?)),
            PipelineId::N4M2 => {
                let (a, b, c) = (p(0)?, p(1)?, p(2)?);
                let q = n4_method2_quartic(&a, &b, &c)?;
                Method::N4M2([a, b, c], q)
            }
        })
    }

    pub fn quartic(&self) -> &QuarticCurve {
        match self {
            Method::N2M3(_, q) | Method::N3M2(_, q) | Method::N4M2(_, q) => q,
            Method::N4M1(m) => &m.quartic,
        }
    }

    pub fn rational(&self, p: &QuarticPoint) -> Result<RationalSolution> {
        match self {
            Method::N2M3(u, _) => n2_method3_rational(u, p),
            Method::N3M2(u, _) => n3_method2_rational(u, p),
            Method::N4M1(m) => m.rational(p),
            Method::N4M2([a, b, c], _) => n4_method2_rational(a, b, c, p),
        }
    }

    /// The canonical integer solution and the clearing factor used.
    pub fn solution(&self, p: &QuarticPoint) -> Result<(Solution, BigInt)> {
        Ok(finish(&self.rational(p)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigReport {
    pub id: String,
    pub params: Vec<String>,
    pub seed: String,
    pub multiples: usize,
    pub mirror: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Emitted {
    pub m: usize,
    pub branch: &'static str,
    pub point: [String; 2],
    pub rational: [String; 4],
    pub lambda: String,
    pub solution: Solution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub m: usize,
    pub branch: &'static str,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub config: ConfigReport,
    pub quartic: Vec<String>,
    pub emitted: Vec<Emitted>,
    pub skipped: Vec<Skipped>,
}

impl RunReport {
    pub fn solutions(&self) -> Vec<Solution> {
        self.emitted.iter().map(|e| e.solution.clone()).collect()
    }
}

/// The map used by a configuration.
pub fn pipeline_map(cfg: &PipelineConfig) -> Result<(Method, QuarticMap)> {
    cfg.validate()?;
    let method = Method::new(cfg.id, &cfg.params)?;
    let q = method.quartic();
    let seed = match &cfg.seed {
        SeedSource::Registry => Seed::Point(registry_seed(cfg.id, &cfg.params).ok_or_else(|| {
            Error::InvalidParameter(format!(
                "no registry seed for {} with parameters ({}); pass a seed point",
                cfg.id,
                cfg.params.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
            ))
        })?),
        SeedSource::Point(p) => Seed::Point(p.clone()),
        SeedSource::LeadSquare => Seed::LeadSquare,
        SeedSource::Scan => Seed::Point(
            q.small_points(100, 1)
                .into_iter()
                .find(|p| !p.v.is_zero())
                .ok_or_else(|| Error::NoSolutions(format!("no point with integer x, |x| <= 100, on {q}")))?,
        ),
    };
    let map = to_weierstrass(q, &seed)?;
    Ok((method, map))
}

/// Runs `cfg.multiples` multiples of the seed through the method. Points
/// failing a builder precondition are reported under `skipped`; the run
/// fails only when nothing is emitted.
pub fn run_pipeline(cfg: &PipelineConfig) -> Result<RunReport> {
    let (method, map) = pipeline_map(cfg)?;
    if cfg.mirror && !method.quartic().is_even() {
        return Err(Error::InvalidParameter(format!("mirror needs an even quartic, {} is not", method.quartic())));
    }
    let multiples = map.multiples(cfg.multiples)?;
    let mut emitted = Vec::new();
    let mut skipped: Vec<Skipped> = multiples
        .skipped
        .iter()
        .flat_map(|(m, reason)| {
            let branches: &[&'static str] = if cfg.mirror { &["primary", "mirror"] } else { &["primary"] };
            branches.iter().map(move |b| Skipped { m: *m, branch: b, reason: reason.clone() })
        })
        .collect();
    for (m, p) in &multiples.points {
        let mut branches = vec![("primary", p.clone())];
        if cfg.mirror {
            branches.push(("mirror", QuarticPoint::new(-p.x.clone(), p.v.clone())));
        }
        for (branch, point) in branches {
            match method.rational(&point) {
                Ok(rs) => {
                    let (solution, lambda) = finish(&rs);
                    let [x, y, w, z] = rs.components();
                    emitted.push(Emitted {
                        m: *m,
                        branch,
                        point: [fmt_rat(&point.x), fmt_rat(&point.v)],
                        rational: [fmt_rat(x), fmt_rat(y), fmt_rat(w), fmt_rat(z)],
                        lambda: lambda.to_string(),
                        solution,
                    });
                }
                Err(e) => skipped.push(Skipped { m: *m, branch, reason: e.to_string() }),
            }
        }
    }
    skipped.sort_by_key(|s| (s.m, s.branch));
    if emitted.is_empty() {
        let reasons: Vec<String> = skipped.iter().map(|s| format!("m={} {}: {}", s.m, s.branch, s.reason)).collect();
        return Err(Error::NoSolutions(format!("{} emitted nothing ({})", cfg.id, reasons.join("; "))));
    }
    Ok(RunReport {
        config: ConfigReport {
            id: cfg.id.to_string(),
            params: cfg.params.iter().map(|p| p.to_string()).collect(),
            seed: cfg.seed.to_string(),
            multiples: cfg.multiples,
            mirror: cfg.mirror,
        },
        quartic: method.quartic().to_wire(),
        emitted,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};
    use crate::solution::{clear_with, weighted_scale_between};

    fn pt(x: BigRat, v: BigRat) -> QuarticPoint {
        QuarticPoint::new(x, v)
    }

    fn sol(n: u32, parts: [&str; 4]) -> Solution {
        let [x, y, w, z] = parts.map(|p| parse_int(p).unwrap());
        Solution::new(EqKind::new(n).unwrap(), x, y, w, z).unwrap()
    }

    #[test]
    fn quartic_examples() {
        assert_eq!(
            n2_method3_quartic(&int(19)).unwrap(),
            QuarticCurve::from_ints(&[7428297, 0, 68590, 0, 57]).unwrap()
        );
        assert_eq!(n2_method3_quartic(&int(1)).unwrap(), QuarticCurve::from_ints(&[3, 0, 10, 0, 3]).unwrap());
        assert_eq!(n2_method3_quartic(&int(2)).unwrap(), QuarticCurve::from_ints(&[96, 0, 80, 0, 6]).unwrap());
        assert!(n2_method3_quartic(&int(0)).is_err());
        assert_eq!(n3_method2_quartic(&int(2)).unwrap(), QuarticCurve::from_ints(&[576, 0, 477, 0, 36]).unwrap());
        assert_eq!(n3_method2_quartic(&int(1)).unwrap(), QuarticCurve::from_ints(&[18, 0, 57, 0, 18]).unwrap());
        assert_eq!(n3_method2_quartic(&int(3)).unwrap(), QuarticCurve::from_ints(&[4374, 0, 1617, 0, 54]).unwrap());
        assert!(n3_method2_quartic(&int(0)).is_err());
        assert_eq!(
            n4_method2_quartic(&int(2), &int(1), &int(4)).unwrap(),
            QuarticCurve::from_ints(&[16128, 0, 0, 0, -63]).unwrap()
        );
        assert_eq!(
            n4_method2_quartic(&int(1), &int(0), &int(1)).unwrap(),
            QuarticCurve::from_ints(&[1, 0, 0, 0, -1]).unwrap()
        );
        assert_eq!(
            n4_method2_quartic(&int(2), &int(1), &int(1)).unwrap(),
            QuarticCurve::from_ints(&[63, 0, 0, 0, -63]).unwrap()
        );
        assert!(n4_method2_quartic(&int(1), &int(-1), &int(1)).is_err());
        assert!(n4_method2_quartic(&int(2), &int(1), &int(0)).is_err());
    }

    #[test]
    fn n2_builder_examples() {
        let s = n2_method3_solution(&int(19), &pt(rat(-76, 1), rat(48013, 1))).unwrap();
        assert_eq!(s, Solution::from_i64(2, 57, 95, 2305248093, 2305248245));
        let s = n2_method3_solution(&int(1), &pt(rat(1, 1), rat(4, 1))).unwrap();
        assert_eq!(s, Solution::from_i64(2, 2, 0, 17, 15));
        // Case 2Q: the minimal clearing factor is exactly the published scaling.
        let rs = n2_method3_rational(&int(19), &published_n2m3_point()).unwrap();
        let printed = sol(
            2,
            [
                "51880996630",
                "11079141384474",
                "977317944922183691537359421841783861640210",
                "977318891095178497546429988862159754468626",
            ],
        );
        let (s, lambda) = clear_denominators_with_lambda(&rs);
        assert_eq!(lambda, int(382702) * int(765404));
        assert_eq!(canonicalize(&s), printed);
        assert!(n2_method3_solution(&int(19), &pt(rat(76, 1), rat(1, 1))).is_err());
        // u = 3 puts (0, 27) on the quartic; x = 0 is still excluded.
        assert!(matches!(n2_method3_solution(&int(3), &pt(rat(0, 1), rat(27, 1))), Err(Error::InvalidParameter(_))));
    }

    #[test]
    fn n3_builder_examples() {
        let u = int(2);
        assert_eq!(n3_method2_solution(&u, &pt(rat(4, 1), rat(132, 1))).unwrap(), Solution::from_i64(3, 6, 2, 48, 40));
        assert_eq!(n3_method2_solution(&u, &pt(rat(-4, 1), rat(132, 1))).unwrap(), Solution::from_i64(3, 2, 6, 40, 48));
        let rs = n3_method2_rational(&u, &published_n3m2_point()).unwrap();
        let printed = Solution::from_i64(3, 210, 1110, 1297800, 1594800);
        assert_eq!(canonicalize(&clear_with(&rs, &int(225)).unwrap()), printed);
        assert_eq!(
            n3_method2_solution(&u, &published_n3m2_point()).unwrap(),
            Solution::from_i64(3, 14, 74, 5768, 7088)
        );
        assert!(n3_method2_solution(&u, &pt(rat(4, 1), rat(131, 1))).is_err());
    }

    #[test]
    fn n4_method1_examples() {
        let (c1, c2) = n4_method1_conics(&int(2), &int(1)).unwrap();
        assert_eq!((c1.a(), c1.b(), c2.a(), c2.b()), (&rat(9, 1), &rat(7, 1), &rat(9, 1), &rat(-7, 1)));
        let (c1, c2) = n4_method1_conics(&int(1), &int(2)).unwrap();
        assert_eq!((c1.b(), c2.b()), (&rat(-7, 1), &rat(7, 1)));
        assert!(n4_method1_conics(&int(1), &int(1)).is_err());
        assert!(n4_method1_conics(&int(1), &int(-1)).is_err());

        let (a, b) = (int(2), int(1));
        let t = parse_rat("-23058557761/12694682160").unwrap();
        let u = parse_rat("25632788161/4231560720").unwrap();
        let v = parse_rat("20158232639/4231560720").unwrap();
        let s = n4_method1_solution(&a, &b, &t, &u, &v).unwrap();
        let printed = sol(
            4,
            [
                "5241494398998670451811238179043229184000",
                "2620747199499335225905619089521614592000",
                "426395698533213485550190666430039500411758184842911016960000",
                "335327691756108236733334752764166296394632689254867671040000",
            ],
        );
        let lambda = weighted_scale_between(&s.to_rational(), &printed.to_rational()).unwrap();
        assert!(lambda.is_integer());
        // t = 1 gives v^2 = 2, so no integer triple sits there.
        assert!(n4_method1_solution(&a, &b, &rat(1, 1), &rat(4, 1), &rat(1, 1)).is_err());
        assert!(n4_method1_solution(&int(1), &int(-1), &rat(1, 1), &rat(0, 1), &rat(0, 1)).is_err());

        let m = N4Method1::new(&a, &b).unwrap();
        assert_eq!(m.conics.0.seed(), Some(&(rat(1, 1), rat(4, 1))));
        assert_eq!(m.quartic, QuarticCurve::from_ints(&[162, -1296, 864, -144, 2]).unwrap());
        let (t2, u2, v2) = m.triple(&published_n4m1_point()).unwrap();
        assert_eq!((t2, u2, v2), (t, -u, -v));
    }

    #[test]
    fn n4_method2_examples() {
        let (a, b, c) = (int(2), int(1), int(4));
        let rs = n4_method2_rational(&a, &b, &c, &published_n4m2_point()).unwrap();
        let printed = sol(4, ["184940423680", "92470211840", "79290987367715840", "19351796053027840"]);
        assert_eq!(canonicalize(&clear_with(&rs, &int(214369)).unwrap()), printed);
        assert_eq!(weighted_scale_between(&rs, &printed.to_rational()), Some(rat(214369, 1)));
        let (_, lambda) = clear_denominators_with_lambda(&rs);
        assert_eq!(lambda, int(463));
        assert_eq!(
            n4_method2_solution(&int(1), &int(0), &int(1), &pt(rat(0, 1), rat(1, 1))).unwrap(),
            Solution::from_i64(4, 1, 0, 1, 0)
        );
        assert!(crate::arith::sqrt_exact(&rat(16128, 1)).is_none());
        assert!(n4_method2_solution(&a, &b, &c, &pt(rat(0, 1), rat(127, 1))).is_err());
        assert!(matches!(
            n4_method2_solution(&int(1), &int(0), &int(1), &pt(rat(1, 1), rat(0, 1))),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn run_examples() {
        let cfg = PipelineConfig::new(PipelineId::N3M2, vec![int(2)]).unwrap();
        let report = run_pipeline(&cfg).unwrap();
        assert_eq!(report.solutions(), vec![Solution::from_i64(3, 6, 2, 48, 40)]);

        let report = run_pipeline(&PipelineConfig::published(PipelineId::N2M3)).unwrap();
        assert!(report.solutions().contains(&Solution::from_i64(2, 57, 95, 2305248093, 2305248245)));
        assert_eq!(report.emitted.len(), 2);

        let report = run_pipeline(&cfg.clone().with_multiples(3)).unwrap();
        let mut sols = report.solutions();
        assert_eq!(sols.len(), 3);
        sols.sort();
        sols.dedup();
        assert_eq!(sols.len(), 3);

        // The published doubled points come back at m = 1 from their seeds.
        for (id, point) in [(PipelineId::N4M1, published_n4m1_point()), (PipelineId::N4M2, published_n4m2_point())] {
            let report = run_pipeline(&PipelineConfig::published(id)).unwrap();
            assert_eq!(report.emitted[0].point, [fmt_rat(&point.x), fmt_rat(&point.v)]);
        }
    }

    #[test]
    fn config_validation() {
        assert!(PipelineConfig::new(PipelineId::N4M2, vec![int(2), int(1)]).is_err());
        assert!(PipelineConfig::new(PipelineId::N2M3, vec![int(0)]).is_err());
        let cfg = PipelineConfig::new(PipelineId::N2M3, vec![int(5)]).unwrap();
        assert!(matches!(run_pipeline(&cfg), Err(Error::InvalidParameter(_))));
        assert!(run_pipeline(&cfg.clone().with_multiples(0)).is_err());
        let mirror = PipelineConfig::published(PipelineId::N4M1).with_mirror(true);
        assert!(run_pipeline(&mirror).is_err());
        assert_eq!("n4-m2".parse::<PipelineId>().unwrap(), PipelineId::N4M2);
        assert!("n5-m1".parse::<PipelineId>().is_err());
        assert_eq!("4,132".parse::<SeedSource>().unwrap(), SeedSource::Point(pt(rat(4, 1), rat(132, 1))));
        assert_eq!("lead-square".parse::<SeedSource>().unwrap(), SeedSource::LeadSquare);
        assert!("4".parse::<SeedSource>().is_err());
    }

    #[test]
    fn scan_seed() {
        let cfg = PipelineConfig::new(PipelineId::N2M3, vec![int(19)]).unwrap().with_seed(SeedSource::Scan);
        let (_, map) = pipeline_map(&cfg).unwrap();
        assert_eq!(map.base_point().map(|p| p.x), Some(rat(-76, 1)));
    }
}

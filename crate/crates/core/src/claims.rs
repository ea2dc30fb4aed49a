//! Registry of every concrete number printed for the four curve methods and
//! the closed families, each checked exactly. Failures are data: they are
//! reported with an exact residual, never patched.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{fmt_rat, parse_int, parse_rat, pow_rat, BigRat, UniPoly};
use crate::curve::{q_isomorphic, CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::pipeline::{n4_method1_conics, pipeline_map, Method, PipelineConfig, PipelineId};
use crate::quartic::{QuarticCurve, QuarticPoint};
use crate::solution::EqKind;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Pass,
    Fail,
}

impl std::fmt::Display for Outcome {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "Pass",
            Outcome::Fail => "Fail",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Solution,
    CurvePoint,
    QuarticPoint,
    ConicTriple,
    ModelEquivalence,
    IdentityInstance,
}

/// Exact numbers as printed, all as decimal `"p/q"` strings.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Payload {
    /// A quadruple in print order; `labels` names each printed slot
    /// (`X`, `Y`, then `W`/`Z` or `R`/`S`).
    Solution { n: u32, labels: [String; 4], values: [String; 4] },
    /// `point` on `y^2 = x^3 + a2 x^2 + a4 x + a6`, `curve = [a2, a4, a6]`.
    CurvePoint { curve: [String; 3], point: [String; 2] },
    /// `double(point) == doubled` on the curve.
    Doubling { curve: [String; 3], point: [String; 2], doubled: [String; 2] },
    /// `point = [x, v]` on `v^2 = q0 + q1 x + ... + q4 x^4`.
    QuarticPoint { quartic: Vec<String>, point: [String; 2] },
    /// `(t, u, v)` on both method-1 conics for `(a, b)`.
    ConicTriple { a: String, b: String, t: String, u: String, v: String },
    /// The Weierstrass model derived from a method's quartic against a printed model.
    ModelEquivalence { method: String, params: Vec<String>, curve: [String; 3] },
    /// A method's quartic at fixed parameters against printed coefficients.
    QuarticIdentity { method: String, params: Vec<String>, quartic: Vec<String> },
    /// `numerator / denominator == value`.
    Quotient { numerator: String, denominator: String, value: String },
}

impl Payload {
    pub fn kind(&self) -> ClaimKind {
        match self {
            Payload::Solution { .. } => ClaimKind::Solution,
            Payload::CurvePoint { .. } | Payload::Doubling { .. } => ClaimKind::CurvePoint,
            Payload::QuarticPoint { .. } => ClaimKind::QuarticPoint,
            Payload::ConicTriple { .. } => ClaimKind::ConicTriple,
            Payload::ModelEquivalence { .. } => ClaimKind::ModelEquivalence,
            Payload::QuarticIdentity { .. } | Payload::Quotient { .. } => ClaimKind::IdentityInstance,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub location: String,
    pub kind: ClaimKind,
    pub payload: Payload,
    pub expected: Outcome,
    /// Outcome recorded as a baseline rather than pre-committed.
    #[serde(default)]
    pub informative: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub id: String,
    pub location: String,
    pub outcome: Outcome,
    pub residual: Option<String>,
}

fn strs<const N: usize>(v: [&str; N]) -> [String; N] {
    v.map(str::to_string)
}

fn vstrs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

fn claim(id: &str, location: &str, payload: Payload, expected: Outcome) -> Claim {
    Claim { id: id.into(), location: location.into(), kind: payload.kind(), payload, expected, informative: false }
}

fn informative(id: &str, location: &str, payload: Payload, expected: Outcome) -> Claim {
    Claim { informative: true, ..claim(id, location, payload, expected) }
}

const N2_CURVE: [&str; 3] = ["1", "-1564", "-18304"];
const N3_CURVE: [&str; 3] = ["1", "-122", "-444"];
const N4M1_CURVE: [&str; 3] = ["0", "-49", "0"];
const N4M2_CURVE: [&str; 3] = ["0", "196", "0"];

/// The built-in registry, ordered by id.
pub fn builtin_claims() -> Vec<Claim> {
    use Outcome::{Fail, Pass};
    let xyzw = strs(["X", "Y", "Z", "W"]);
    let xyrs = strs(["X", "Y", "R", "S"]);
    let mut claims = vec![
        claim(
            "n2-caseQ",
            "n=2, method 3, solution from Q",
            Payload::Solution { n: 2, labels: xyzw.clone(), values: strs(["57", "95", "2305248245", "2305248093"]) },
            Pass,
        ),
        claim(
            "n2-case2Q",
            "n=2, method 3, solution from 2Q",
            Payload::Solution {
                n: 2,
                labels: xyzw.clone(),
                values: strs([
                    "51880996630",
                    "11079141384474",
                    "977318891095178497546429988862159754468626",
                    "977317944922183691537359421841783861640210",
                ]),
            },
            Pass,
        ),
        claim(
            "n3-caseQ",
            "n=3, method 2, solution from Q",
            Payload::Solution { n: 3, labels: xyzw.clone(), values: strs(["6", "2", "40", "48"]) },
            Pass,
        ),
        claim(
            "n3-case2Q",
            "n=3, method 2, solution from 2Q",
            Payload::Solution { n: 3, labels: xyzw, values: strs(["210", "1110", "1594800", "1297800"]) },
            Pass,
        ),
        claim(
            "n4-m1-final",
            "n=4, method 1, final solution",
            Payload::Solution {
                n: 4,
                labels: xyrs.clone(),
                values: strs([
                    "5241494398998670451811238179043229184000",
                    "2620747199499335225905619089521614592000",
                    "426395698533213485550190666430039500411758184842911016960000",
                    "335327691756108236733334752764166296394632689254867671040000",
                ]),
            },
            Pass,
        ),
        claim(
            "n4-m2-final",
            "n=4, method 2, final solution",
            Payload::Solution {
                n: 4,
                labels: xyrs,
                values: strs(["184940423680", "92470211840", "79290987367715840", "19351796053027840"]),
            },
            Pass,
        ),
        claim(
            "n2-m3-gen-on-curve",
            "n=2, method 3, generator P on N^2 = M^3 + M^2 - 1564M - 18304",
            Payload::CurvePoint { curve: strs(N2_CURVE), point: strs(["-4973/289", "-303240/4913"]) },
            Pass,
        ),
        claim(
            "n2-m3-2P-on-curve",
            "n=2, method 3, doubled point 2P on the stated curve",
            Payload::CurvePoint {
                curve: strs(N2_CURVE),
                point: strs(["54247449481/815673600", "-9780470064206171/23295638016000"]),
            },
            Pass,
        ),
        claim(
            "n2-m3-2P-consistency",
            "n=2, method 3, 2P equals the double of P",
            Payload::Doubling {
                curve: strs(N2_CURVE),
                point: strs(["-4973/289", "-303240/4913"]),
                doubled: strs(["54247449481/815673600", "-9780470064206171/23295638016000"]),
            },
            Pass,
        ),
        claim(
            "n3-m2-gen-on-curve",
            "n=3, method 2, generator P = (17, 44) on N^2 = M^3 + M^2 - 122M - 444",
            Payload::CurvePoint { curve: strs(N3_CURVE), point: strs(["17", "44"]) },
            Fail,
        ),
        claim(
            "n3-m2-2P-on-curve",
            "n=3, method 2, doubled point 2P = (21, -93) on the stated curve",
            Payload::CurvePoint { curve: strs(N3_CURVE), point: strs(["21", "-93"]) },
            Fail,
        ),
        claim(
            "n3-m2-2P-consistency",
            "n=3, method 2, 2P = (21, -93) equals the double of (17, 44)",
            Payload::Doubling { curve: strs(N3_CURVE), point: strs(["17", "44"]), doubled: strs(["21", "-93"]) },
            Fail,
        ),
        claim(
            "n4-m1-gen-on-curve",
            "n=4, method 1, generator P on y^2 = x^3 - 49x",
            Payload::CurvePoint { curve: strs(N4M1_CURVE), point: strs(["112/9", "-980/27"]) },
            Pass,
        ),
        claim(
            "n4-m2-gen-on-curve",
            "n=4, method 2, generator P on y^2 = x^3 + 196x",
            Payload::CurvePoint { curve: strs(N4M2_CURVE), point: strs(["2", "20"]) },
            Pass,
        ),
        claim(
            "n2-m3-2Q-on-quartic",
            "n=2, method 3, quartic point 2Q on t^2 = 57x^4 + 68590x^2 + 7428297",
            Payload::QuarticPoint {
                quartic: vstrs(&["7428297", "0", "68590", "0", "57"]),
                point: strs(["-14407111/765404", "3653190399329653/585843283216"]),
            },
            Pass,
        ),
        claim(
            "n3-m2-2Q-on-quartic",
            "n=3, method 2, quartic point 2Q on y^2 = 36x^4 + 477x^2 + 576",
            Payload::QuarticPoint {
                quartic: vstrs(&["576", "0", "477", "0", "36"]),
                point: strs(["-44/15", "6428/75"]),
            },
            Pass,
        ),
        claim(
            "n4-m1-2Q-on-quartic",
            "n=4, method 1, quartic point 2Q on V^2 = 2k^4 - 144k^3 + 864k^2 - 1296k + 162",
            Payload::QuarticPoint {
                quartic: vstrs(&["162", "-1296", "864", "-144", "2"]),
                point: strs(["508773/142471", "-362848187502/20297985841"]),
            },
            Pass,
        ),
        claim(
            "n4-m2-2Q-on-quartic",
            "n=4, method 2, quartic point 2Q on V^2 = -63U^4 + 16128",
            Payload::QuarticPoint {
                quartic: vstrs(&["16128", "0", "0", "0", "-63"]),
                point: strs(["452/463", "27175680/214369"]),
            },
            Pass,
        ),
        claim(
            "n4-m1-conic-triple",
            "n=4, method 1, (t, u, v) on u^2 = 9t^2 + 7 and v^2 = 9t^2 - 7",
            Payload::ConicTriple {
                a: "2".into(),
                b: "1".into(),
                t: "-23058557761/12694682160".into(),
                u: "25632788161/4231560720".into(),
                v: "20158232639/4231560720".into(),
            },
            Pass,
        ),
        claim(
            "n2-m3-quartic",
            "n=2, method 3, quartic at u = 19",
            Payload::QuarticIdentity {
                method: "n2-m3".into(),
                params: vstrs(&["19"]),
                quartic: vstrs(&["7428297", "0", "68590", "0", "57"]),
            },
            Pass,
        ),
        claim(
            "n4-m1-quartic",
            "n=4, method 1, quartic in k after the chord substitution",
            Payload::QuarticIdentity {
                method: "n4-m1".into(),
                params: vstrs(&["2", "1"]),
                quartic: vstrs(&["162", "-1296", "864", "-144", "2"]),
            },
            Pass,
        ),
        claim(
            "n4-m2-quartic",
            "n=4, method 2, quartic at (a, b, c) = (2, 1, 4)",
            Payload::QuarticIdentity {
                method: "n4-m2".into(),
                params: vstrs(&["2", "1", "4"]),
                quartic: vstrs(&["16128", "0", "0", "0", "-63"]),
            },
            Pass,
        ),
        claim(
            "n4-m2-t-value",
            "n=4, method 2, t = V / (a^6 - b^6) from 2Q",
            Payload::Quotient {
                numerator: "27175680/214369".into(),
                denominator: "63".into(),
                value: "431360/214369".into(),
            },
            Pass,
        ),
        informative(
            "n2-m3-model",
            "n=2, method 3, derived model against N^2 = M^3 + M^2 - 1564M - 18304",
            Payload::ModelEquivalence { method: "n2-m3".into(), params: vstrs(&["19"]), curve: strs(N2_CURVE) },
            Pass,
        ),
        informative(
            "n3-m2-model",
            "n=3, method 2, derived model against N^2 = M^3 + M^2 - 122M - 444",
            Payload::ModelEquivalence { method: "n3-m2".into(), params: vstrs(&["2"]), curve: strs(N3_CURVE) },
            Fail,
        ),
        informative(
            "n4-m1-model",
            "n=4, method 1, derived model against y^2 = x^3 - 49x",
            Payload::ModelEquivalence { method: "n4-m1".into(), params: vstrs(&["2", "1"]), curve: strs(N4M1_CURVE) },
            Pass,
        ),
        informative(
            "n4-m2-model",
            "n=4, method 2, derived model against y^2 = x^3 + 196x",
            Payload::ModelEquivalence {
                method: "n4-m2".into(),
                params: vstrs(&["2", "1", "4"]),
                curve: strs(N4M2_CURVE),
            },
            Pass,
        ),
    ];
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

fn curve_of(c: &[String; 3]) -> Result<WeierstrassCurve> {
    WeierstrassCurve::new(parse_rat(&c[0])?, parse_rat(&c[1])?, parse_rat(&c[2])?)
}

fn point_of(p: &[String; 2]) -> Result<(BigRat, BigRat)> {
    Ok((parse_rat(&p[0])?, parse_rat(&p[1])?))
}

fn quartic_of(q: &[String]) -> Result<QuarticCurve> {
    QuarticCurve::new(UniPoly::new(q.iter().map(|c| parse_rat(c)).collect::<Result<_>>()?))
}

fn params_of(p: &[String]) -> Result<Vec<crate::arith::BigInt>> {
    p.iter().map(|s| parse_int(s)).collect()
}

/// `Ok(None)` on success, `Ok(Some(residual))` on an exact mismatch.
fn evaluate(p: &Payload) -> Result<Option<String>> {
    match p {
        Payload::Solution { n, labels, values } => {
            let kind = EqKind::new(*n)?;
            let slot = |names: &[&str]| {
                labels
                    .iter()
                    .position(|l| names.contains(&l.as_str()))
                    .ok_or_else(|| Error::Parse(format!("labels {labels:?} lack one of {names:?}")))
                    .and_then(|i| parse_rat(&values[i]))
            };
            let (x, y, w, z) = (slot(&["X"])?, slot(&["Y"])?, slot(&["W", "R"])?, slot(&["Z", "S"])?);
            let e = kind.exponent();
            let lhs = pow_rat(&x, 6) - pow_rat(&y, 6);
            let rhs = pow_rat(&w, e) - pow_rat(&z, e);
            Ok((lhs != rhs).then(|| format!("X^6 - Y^6 - (W^{e} - Z^{e}) = {}", fmt_rat(&(lhs - rhs)))))
        }
        Payload::CurvePoint { curve, point } => {
            let e = curve_of(curve)?;
            let (x, y) = point_of(point)?;
            let r = -e.residual(&x, &y);
            Ok((!num_traits::Zero::is_zero(&r)).then(|| format!("rhs(x) - y^2 = {}", fmt_rat(&r))))
        }
        Payload::Doubling { curve, point, doubled } => {
            let e = curve_of(curve)?;
            let (x, y) = point_of(point)?;
            let r = -e.residual(&x, &y);
            if !num_traits::Zero::is_zero(&r) {
                return Ok(Some(format!("P is not on the curve: rhs(x) - y^2 = {}", fmt_rat(&r))));
            }
            let d = e.double(&CurvePoint::affine(x, y))?;
            let (dx, dy) = point_of(doubled)?;
            let printed = CurvePoint::affine(dx, dy);
            Ok((d != printed).then(|| format!("double(P) = {d}, printed {printed}")))
        }
        Payload::QuarticPoint { quartic, point } => {
            let q = quartic_of(quartic)?;
            let (x, v) = point_of(point)?;
            let r = -q.residual(&QuarticPoint::new(x, v));
            Ok((!num_traits::Zero::is_zero(&r)).then(|| format!("q(x) - v^2 = {}", fmt_rat(&r))))
        }
        Payload::ConicTriple { a, b, t, u, v } => {
            let (c1, c2) = n4_method1_conics(&parse_int(a)?, &parse_int(b)?)?;
            let (t, u, v) = (parse_rat(t)?, parse_rat(u)?, parse_rat(v)?);
            let r1 = c1.a() * &t * &t + c1.b() - &u * &u;
            let r2 = c2.a() * &t * &t + c2.b() - &v * &v;
            Ok((!num_traits::Zero::is_zero(&r1) || !num_traits::Zero::is_zero(&r2))
                .then(|| format!("conic residuals {} and {}", fmt_rat(&r1), fmt_rat(&r2))))
        }
        Payload::ModelEquivalence { method, params, curve } => {
            let id: PipelineId = method.parse()?;
            let cfg = PipelineConfig::new(id, params_of(params)?)?;
            let (_, map) = pipeline_map(&cfg)?;
            let printed = curve_of(curve)?;
            let derived = map.target();
            Ok(match q_isomorphic(derived, &printed) {
                Some(_) => None,
                None => Some(format!(
                    "derived {derived} has j = {}, printed {printed} has j = {}",
                    fmt_rat(&derived.invariants().j),
                    fmt_rat(&printed.invariants().j)
                )),
            })
        }
        Payload::QuarticIdentity { method, params, quartic } => {
            let id: PipelineId = method.parse()?;
            let derived = Method::new(id, &params_of(params)?)?;
            let printed = quartic_of(quartic)?;
            Ok((derived.quartic() != &printed).then(|| format!("derived {}, printed {printed}", derived.quartic())))
        }
        Payload::Quotient { numerator, denominator, value } => {
            let d = parse_rat(denominator)?;
            if num_traits::Zero::is_zero(&d) {
                return Err(Error::InvalidParameter("zero denominator".into()));
            }
            let q = parse_rat(numerator)? / d;
            let printed = parse_rat(value)?;
            Ok((q != printed).then(|| format!("quotient is {}, printed {}", fmt_rat(&q), fmt_rat(&printed))))
        }
    }
}

pub fn check_claim(c: &Claim) -> Verdict {
    let (outcome, residual) = match evaluate(&c.payload) {
        Ok(None) => (Outcome::Pass, None),
        Ok(Some(r)) => (Outcome::Fail, Some(r)),
        Err(e) => (Outcome::Fail, Some(format!("malformed claim: {e}"))),
    };
    Verdict { id: c.id.clone(), location: c.location.clone(), outcome, residual }
}

/// Checks in parallel; the result is ordered by claim id.
pub fn check_all(claims: &[Claim]) -> Vec<Verdict> {
    let mut v: Vec<Verdict> = claims.par_iter().map(check_claim).collect();
    v.sort_by(|a, b| a.id.cmp(&b.id));
    v
}

/// Ids whose computed outcome differs from the expected one.
pub fn unexpected(claims: &[Claim], verdicts: &[Verdict]) -> Vec<String> {
    verdicts
        .iter()
        .filter(|v| claims.iter().find(|c| c.id == v.id).is_some_and(|c| c.expected != v.outcome))
        .map(|v| v.id.clone())
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Serialize)]
struct Discrepancy<'a> {
    id: &'a str,
    location: &'a str,
    residual: &'a str,
    informative: bool,
}

/// Text or JSON report: summary counts, every verdict, then the failing
/// claims under "discrepancies".
pub fn render_report(claims: &[Claim], verdicts: &[Verdict], format: ReportFormat) -> String {
    let mut sorted: Vec<&Verdict> = verdicts.iter().collect();
    sorted.sort_by(|a, b| a.id.cmp(&b.id));
    let is_informative = |id: &str| claims.iter().any(|c| c.id == id && c.informative);
    let pass = sorted.iter().filter(|v| v.outcome == Outcome::Pass).count();
    let fail = sorted.len() - pass;
    let unexpected = unexpected(claims, verdicts);
    let discrepancies: Vec<Discrepancy> = sorted
        .iter()
        .filter(|v| v.outcome == Outcome::Fail)
        .map(|v| Discrepancy {
            id: &v.id,
            location: &v.location,
            residual: v.residual.as_deref().unwrap_or(""),
            informative: is_informative(&v.id),
        })
        .collect();
    match format {
        ReportFormat::Json => {
            let doc = serde_json::json!({
                "summary": {"total": sorted.len(), "pass": pass, "fail": fail, "unexpected": unexpected},
                "verdicts": sorted,
                "discrepancies": discrepancies,
            });
            serde_json::to_string_pretty(&doc).expect("report serializes") + "\n"
        }
        ReportFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(
                out,
                "claims: {} checked, {pass} pass, {fail} fail, {} unexpected",
                sorted.len(),
                unexpected.len()
            );
            let width = sorted.iter().map(|v| v.id.len()).max().unwrap_or(0);
            for v in &sorted {
                let _ = writeln!(out, "{:<4}  {:<width$}  {}", v.outcome, v.id, v.location);
            }
            out.push_str("\ndiscrepancies:");
            if discrepancies.is_empty() {
                out.push_str(" none\n");
            } else {
                out.push('\n');
                for d in &discrepancies {
                    let tag = if d.informative { " [informative]" } else { "" };
                    let _ = writeln!(out, "  {}{tag}: {}\n    {}", d.id, d.location, d.residual);
                }
            }
            if !unexpected.is_empty() {
                let _ = writeln!(out, "\nunexpected outcomes: {}", unexpected.join(", "));
            }
            out
        }
    }
}

/// The committed baseline of claims and expected outcomes.
pub const BASELINE: &str = include_str!("../claims.json");

pub fn baseline_claims() -> Result<Vec<Claim>> {
    serde_json::from_str(BASELINE).map_err(|e| Error::Parse(format!("claims baseline: {e}")))
}

/// `claims` serialized as the baseline file.
pub fn baseline_json(claims: &[Claim]) -> String {
    serde_json::to_string_pretty(claims).expect("claims serialize") + "\n"
}

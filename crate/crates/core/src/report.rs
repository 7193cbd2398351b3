//! Verification suites and JSON reports shared by the CLI and the acceptance tests.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};

use crate::cohomology::{bbw_calibrated, chern_table_check, h_on_y, hilbert_polynomial, GLWeight, HOnY};
use crate::exact::{rat_str, vec_str, RatMatrix};
use crate::geometry::{combine, Bivector, GeometryContext, GeometryError};
use crate::jumping::{
    charge2_theta, jump_order, jumping_consistency, random_meeting_line, theta_polynomial, ConsistencyReport,
};
use crate::monads::{
    beta, check_membership, gamma_subspace, mi2_invariants, pfaffian_ratio, random_line, MonadData,
};
use crate::p1bundles::{restrict_monad_to_line, splitting_type};
use crate::rep::Rep;
use crate::sampling;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Everything that determines a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunConfig {
    pub command: String,
    pub seed: u64,
    pub budget: usize,
    pub height: i64,
    pub out: Option<String>,
    pub flags: BTreeMap<String, String>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct IncidenceCheck {
    pub pairs: usize,
    pub agree: usize,
    pub intersecting: usize,
}

/// Polarity test against the direct oracle σ(a₁)∧σ(a₂) ∈ Y; half the pairs are forced to meet.
pub fn incidence_check(ctx: &GeometryContext, pairs: usize, seed: u64) -> IncidenceCheck {
    let mut rng = sampling::substream(seed, 31);
    let mut r = IncidenceCheck { pairs: 0, agree: 0, intersecting: 0 };
    while r.pairs < pairs {
        let a1 = random_line(&mut rng, 7);
        let a2 = if r.pairs % 2 == 0 { random_meeting_line(ctx, &a1, &mut rng) } else { random_line(&mut rng, 7) };
        if a1 == a2 {
            continue;
        }
        let w = Bivector::wedge(&ctx.sigma(&a1), &ctx.sigma(&a2));
        let direct = ctx.is_on_y(&w);
        let polar = ctx.lines_intersect(&a1, &a2);
        r.pairs += 1;
        if direct == polar {
            r.agree += 1;
        }
        if direct {
            r.intersecting += 1;
        }
    }
    r
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct TripleCoverCheck {
    pub points: usize,
    pub total_three: usize,
    pub three_distinct: usize,
    pub closed_orbit_triple_root: bool,
}

pub fn triple_cover_check(ctx: &GeometryContext, points: usize, seed: u64) -> TripleCoverCheck {
    let mut rng = sampling::substream(seed, 32);
    let mut r = TripleCoverCheck { points, total_three: 0, three_distinct: 0, closed_orbit_triple_root: false };
    for _ in 0..points {
        let t = sampling::nonzero_int(&mut rng, 6);
        let (s, u) = (sampling::int(&mut rng, 6), sampling::int(&mut rng, 6));
        let l = ctx.lines_through_point(&ctx.orbit_point(&s, &t, &u));
        if l.total_multiplicity() == 3 {
            r.total_three += 1;
        }
        if l.distinct() == 3 {
            r.three_distinct += 1;
        }
    }
    let c = ctx.lines_through_point(&ctx.closed_orbit_point(&crate::rat(2), &crate::rat(-3)));
    r.closed_orbit_triple_root = c.multiplicities == vec![3];
    r
}

/// Rank 4 for every form among `samples` random combinations of the basis.
pub fn rank4_check(ctx: &GeometryContext, samples: usize, seed: u64) -> (usize, usize) {
    let mut rng = sampling::substream(seed, 33);
    let mut ok = 0;
    for _ in 0..samples {
        let c = sampling::nonzero_int_vec(&mut rng, 3, 9);
        if combine(&ctx.a_basis, &c).rank() == 4 {
            ok += 1;
        }
    }
    (samples, ok)
}

fn table_json(h: &HOnY) -> Value {
    match h {
        HOnY::Determined(t) => json!(t.iter().map(|(k, v)| (k.to_string(), *v)).collect::<BTreeMap<_, _>>()),
        HOnY::Indeterminate => json!("indeterminate"),
    }
}

fn is_table(h: &HOnY, expected: &[(usize, u64)]) -> bool {
    h.table().map(|t| t.iter().filter(|(_, v)| **v > 0).map(|(k, v)| (*k, *v)).collect::<Vec<_>>())
        == Some(expected.to_vec())
}

pub struct Foundations {
    pub json: Value,
    pub passed: bool,
    pub first_failure: Option<String>,
}

/// The foundations suite for a candidate basis of A.
pub fn foundations(a_basis: [RatMatrix; 3], seed: u64, samples: usize) -> Foundations {
    let ctx = match GeometryContext::build_from(a_basis) {
        Ok(c) => c,
        Err(e) => {
            let name = match &e {
                GeometryError::Invariant(n) => n.to_string(),
                other => other.to_string(),
            };
            return Foundations {
                json: json!({ "version": VERSION, "passed": false, "first_failure": name.clone(), "error": e.to_string() }),
                passed: false,
                first_failure: Some(name),
            };
        }
    };
    let mut checks: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| checks.push((name.to_string(), ok));

    push("context invariants", true);
    let (tested, ok) = rank4_check(&ctx, samples.max(200), seed);
    push("rank-4", tested == ok);

    let v_dec = ctx.v.decompose().map(|d| d.multiplicities).unwrap_or_default();
    let l2 = ctx.v.wedge2().decompose().map(|d| d.multiplicities).unwrap_or_default();
    let a_dec = ctx.a_rep.decompose().map(|d| d.multiplicities).unwrap_or_default();
    push("V irreducible of highest weight 4", v_dec == BTreeMap::from([(4, 1)]));
    push("wedge2 V = S6 + S2", l2 == BTreeMap::from([(2, 1), (6, 1)]));
    push("A = S2", a_dec == BTreeMap::from([(2, 1)]));
    let s4 = Rep::sym_power_of_w(4);
    push("sym2 of S2 has one invariant", Rep::sym_power_of_w(2).sym2().invariant_vectors().len() == 1);
    push("S4 has no invariant", s4.invariant_vectors().is_empty());

    push("bbw calibration", bbw_calibrated());
    let h_u = h_on_y(&GLWeight::u(), 0);
    let h_uperp = h_on_y(&GLWeight::u_perp(), 0);
    let h_om1 = h_on_y(&GLWeight::trivial(), -1);
    let h_q = h_on_y(&GLWeight::quotient(), 0);
    let h_hom = h_on_y(&GLWeight::hom_u_uperp(), 0);
    let h_o1 = h_on_y(&GLWeight::trivial(), 1);
    let h_o = h_on_y(&GLWeight::trivial(), 0);
    push("H(U) = 0", is_table(&h_u, &[]));
    push("H(U-perp) = 0", is_table(&h_uperp, &[]));
    push("H(O(-1)) = 0", is_table(&h_om1, &[]));
    push("H(V/U) = 5", is_table(&h_q, &[(0, 5)]));
    push("Hom(U, U-perp) = 3", is_table(&h_hom, &[(0, 3)]));
    push("h0(O(1)) = 7", is_table(&h_o1, &[(0, 7)]));
    push("H(O) = 1", is_table(&h_o, &[(0, 1)]));
    let chern = chern_table_check(2);
    let chern3 = chern_table_check(3);
    push("Chern identities", chern.all_ok && chern3.all_ok);

    let inc = incidence_check(&ctx, samples.max(200), seed);
    push("incidence oracle", inc.agree == inc.pairs && inc.intersecting > 0);
    let tri = triple_cover_check(&ctx, samples.max(50), seed);
    push(
        "triple cover",
        tri.total_three == tri.points && tri.three_distinct == tri.points && tri.closed_orbit_triple_root,
    );

    let first_failure = checks.iter().find(|c| !c.1).map(|c| c.0.clone());
    let passed = first_failure.is_none();
    let h0_o1 = h_o1.table().and_then(|t| t.get(&0).copied()).unwrap_or(0);
    let hilbert: Vec<String> = hilbert_polynomial().iter().map(rat_str).collect();
    let json = json!({
        "version": VERSION,
        "passed": passed,
        "first_failure": first_failure,
        "checks": checks.iter().map(|(k, v)| (k.clone(), *v)).collect::<BTreeMap<_, _>>(),
        "h0_OY1": h0_o1,
        "q": ctx.q.to_strings(),
        "polarity": ctx.polarity.to_strings(),
        "y0": ctx.y0.basis().to_strings(),
        "decompositions": {
            "V": v_dec, "wedge2_V": l2, "A": a_dec,
        },
        "cohomology_on_Y": {
            "U": table_json(&h_u), "U_perp": table_json(&h_uperp), "O(-1)": table_json(&h_om1),
            "V/U": table_json(&h_q), "Hom(U,U_perp)": table_json(&h_hom), "O(1)": table_json(&h_o1),
            "O": table_json(&h_o),
        },
        "hilbert_polynomial_coefficients": hilbert,
        "chern": chern,
        "incidence": inc,
        "triple_cover": tri,
        "rank4_samples": { "tested": tested, "rank4": ok },
    });
    Foundations { json, passed, first_failure }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SplittingCheck {
    pub line: Vec<String>,
    pub corank: usize,
    pub splitting: Option<Vec<i64>>,
    pub agrees: bool,
}

/// Splitting type on random lines (plus the given ones) against (−k, k), k = corank γ(a).
pub fn splitting_cross_check(
    ctx: &GeometryContext,
    m: &MonadData,
    lines: usize,
    extra: &[crate::geometry::LineRef],
    seed: u64,
) -> Vec<SplittingCheck> {
    let mut rng = sampling::substream(seed, 41);
    let mut all: Vec<_> = extra.to_vec();
    all.extend((0..lines).map(|_| random_line(&mut rng, 6)));
    let n = m.charge() as i64;
    all.into_iter()
        .map(|a| {
            let k = jump_order(ctx, m, &a);
            let st = restrict_monad_to_line(ctx, m, &a)
                .ok()
                .and_then(|c| splitting_type(&c, 2, n + 2).ok())
                .map(|s| s.degrees());
            let agrees = st.as_deref() == Some(&[-(k as i64), k as i64][..]) && (k as i64) < n;
            SplittingCheck { line: vec_str(&a.a), corank: k, splitting: st, agrees }
        })
        .collect()
}

pub struct Analysis {
    pub json: Value,
    pub passed: bool,
}

/// Full per-instanton analysis.
pub fn analyze(ctx: &GeometryContext, m: &MonadData, cfg: &RunConfig) -> Analysis {
    let seed = cfg.seed;
    let verdict = check_membership(ctx, m, cfg.budget, seed);
    let mut out = serde_json::Map::new();
    out.insert("version".into(), json!(VERSION));
    out.insert("config".into(), json!(cfg));
    out.insert("charge".into(), json!(m.charge()));
    out.insert("membership".into(), json!(verdict));
    out.insert("gamma_hat_consistent".into(), json!(m.consistent(ctx)));
    let theta = theta_polynomial(ctx, m);
    out.insert("theta_poly".into(), json!(theta.to_json_map(&["x1", "x2", "x3"])));
    out.insert("theta_nonzero".into(), json!(!theta.is_zero()));
    if !verdict.passed {
        out.insert("passed".into(), json!(false));
        return Analysis { json: Value::Object(out), passed: false };
    }
    let mut ok = !theta.is_zero();
    let mut known_jumping = Vec::new();
    if m.charge() == 2 {
        if let Ok(r) = mi2_invariants(ctx, m) {
            let th = charge2_theta(ctx, m, seed, 0).ok();
            let smooth = th.as_ref().and_then(|t| t.smooth_conic).unwrap_or(false);
            ok &= r.in_mon2 && smooth;
            out.insert(
                "mi2".into(),
                json!({
                    "Q2": rat_str(&r.q2),
                    "Q3": rat_str(&r.q3),
                    "F_conic": r.f_conic.to_strings(),
                    "in_Mon2": r.in_mon2,
                    "pfaffian_over_Q2Q3": pfaffian_ratio(ctx, m).map(|c| rat_str(&c)),
                    "theta_proportional_to_F": th.as_ref().and_then(|t| t.proportional_to_f),
                }),
            );
            out.insert("F_conic_is_q".into(), json!(r.f_is_q));
            out.insert("smooth_conic".into(), json!(smooth));
        }
    } else {
        match beta(ctx, m) {
            Ok(b) => {
                ok &= b.injective && b.complex_condition;
                out.insert("beta".into(), json!(b.beta.as_ref().map(|s| vec_str(s.plucker()))));
                out.insert("beta_injective".into(), json!(b.injective));
                out.insert("kernel_generator".into(), json!(b.kernel_generator.to_strings()));
                out.insert("special".into(), json!(b.special));
                out.insert("special_line".into(), json!(b.special_line.as_ref().map(|l| vec_str(&l.a))));
                if let Some(l) = &b.special_line {
                    out.insert(
                        "two_jumping_line".into(),
                        json!({ "line": vec_str(&l.a), "jump_order": jump_order(ctx, m, l) }),
                    );
                    known_jumping.push(l.clone());
                }
            }
            Err(e) => {
                ok = false;
                out.insert("beta_error".into(), json!(e.to_string()));
            }
        }
        match gamma_subspace(ctx, m) {
            Ok(g) => {
                ok &= g.rank == 3 && g.composite_vanishes;
                out.insert(
                    "gamma_subspace".into(),
                    json!({ "rank": g.rank, "composite_vanishes": g.composite_vanishes, "basis": g.basis.to_strings() }),
                );
            }
            Err(e) => {
                ok = false;
                out.insert("gamma_subspace_error".into(), json!(e.to_string()));
            }
        }
    }
    let splits = splitting_cross_check(ctx, m, 10, &known_jumping, seed);
    ok &= splits.iter().all(|s| s.agrees);
    out.insert("splitting_cross_check".into(), json!(splits));
    let cons: Result<ConsistencyReport, _> = jumping_consistency(ctx, m, 10, 3, seed, &known_jumping);
    match cons {
        Ok(c) => {
            ok &= c.passed();
            out.insert("consistency".into(), json!(c));
        }
        Err(e) => {
            ok = false;
            out.insert("consistency_error".into(), json!(e.to_string()));
        }
    }
    out.insert("passed".into(), json!(ok));
    Analysis { json: Value::Object(out), passed: ok }
}

/// Deterministic pretty JSON with a trailing newline.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

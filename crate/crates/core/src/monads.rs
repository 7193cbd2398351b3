//! Monad data γ ∈ A⊗S²H*, the membership test, and the charge-2 / charge-3 invariants.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    common_zero_degree, interpolate_binary_form, parse_rational, rat, rat_str, BinaryForm,
    RatMatrix, Rational,
};
use crate::geometry::{GeometryContext, LineRef, PointY, Subspace3};
use crate::p1bundles::{is_monad_of_bundles, restrict_monad_to_line, P1Error};
use crate::rep::Rep;
use crate::sampling::{self, SeededRng};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MonadError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("gamma component {0} is not symmetric")]
    NotSymmetric(usize),
    #[error("unsupported charge {0}")]
    Charge(usize),
    #[error("rank of gamma-hat is {0}, not an instanton candidate")]
    NotCandidate(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("gave up after {0} attempts")]
    Budget(usize),
    #[error(transparent)]
    Restriction(#[from] P1Error),
}

/// γ = Σ a_i ⊗ s_i with s_i symmetric n×n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonadData {
    n: usize,
    gamma: [RatMatrix; 3],
    gamma_hat: RatMatrix,
    kernel: Option<RatMatrix>,
}

#[derive(Serialize, Deserialize)]
struct MonadJson {
    charge: usize,
    gamma: Vec<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    meta: Option<serde_json::Value>,
}

/// (h⊗v, h′⊗v′) ↦ Σ s_i(h,h′)·a_i(v,v′).
pub fn gamma_hat(ctx: &GeometryContext, gamma: &[RatMatrix; 3]) -> RatMatrix {
    let n = gamma[0].rows();
    let mut g = RatMatrix::zeros(5 * n, 5 * n);
    for (s, a) in gamma.iter().zip(&ctx.a_basis) {
        g = g.add(&s.kron(a));
    }
    g
}

impl MonadData {
    pub fn new(ctx: &GeometryContext, gamma: [RatMatrix; 3]) -> Result<Self, MonadError> {
        let n = gamma[0].rows();
        if !(2..=3).contains(&n) {
            return Err(MonadError::Charge(n));
        }
        for (i, s) in gamma.iter().enumerate() {
            if s.rows() != n || s.cols() != n || !s.is_symmetric() {
                return Err(MonadError::NotSymmetric(i));
            }
        }
        let gamma_hat = gamma_hat(ctx, &gamma);
        let kernel = if n == 3 {
            let k = gamma_hat.kernel_basis();
            (k.len() == 1).then(|| RatMatrix::new(3, 5, k[0].clone()))
        } else {
            None
        };
        Ok(MonadData {
            n,
            gamma,
            gamma_hat,
            kernel,
        })
    }

    pub fn charge(&self) -> usize {
        self.n
    }

    pub fn gamma(&self) -> &[RatMatrix; 3] {
        &self.gamma
    }

    pub fn gamma_hat(&self) -> &RatMatrix {
        &self.gamma_hat
    }

    /// ker γ̂ reshaped to 3×5 (rows v_l), when n = 3 and the kernel is a line.
    pub fn kernel_rows(&self) -> Option<&RatMatrix> {
        self.kernel.as_ref()
    }

    /// Cached γ̂ agrees with a recomputation and is antisymmetric.
    pub fn consistent(&self, ctx: &GeometryContext) -> bool {
        self.gamma_hat.is_antisymmetric() && gamma_hat(ctx, &self.gamma) == self.gamma_hat
    }

    /// gᵀ s_i g for every component.
    pub fn change_basis(&self, ctx: &GeometryContext, g: &RatMatrix) -> Result<Self, MonadError> {
        let gamma = self.gamma.clone().map(|s| g.transpose().mul(&s).mul(g));
        MonadData::new(ctx, gamma)
    }

    /// Columns: the components of γ as vectors of S²H* (upper triangle).
    pub fn coefficient_matrix(&self) -> RatMatrix {
        let idx: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|i| (i..self.n).map(move |j| (i, j)))
            .collect();
        RatMatrix::from_fn(idx.len(), 3, |r, c| self.gamma[c][idx[r]].clone())
    }

    /// γ(x) = Σ (P·x)_i s_i, the symmetric matrix of γ at the line with coordinates x.
    pub fn gamma_at(&self, ctx: &GeometryContext, x: &[Rational]) -> RatMatrix {
        let lambda = ctx.polarity.mul_vec(x);
        let mut m = RatMatrix::zeros(self.n, self.n);
        for (l, s) in lambda.iter().zip(&self.gamma) {
            if !l.is_zero() {
                m = m.add(&s.scale(l));
            }
        }
        m
    }

    pub fn from_json(ctx: &GeometryContext, text: &str) -> Result<Self, MonadError> {
        let j: MonadJson =
            serde_json::from_str(text).map_err(|e| MonadError::Parse(e.to_string()))?;
        if j.gamma.len() != 3 {
            return Err(MonadError::Parse("gamma must have three components".into()));
        }
        let mut comps = Vec::new();
        for c in &j.gamma {
            if c.len() != j.charge || c.iter().any(|r| r.len() != j.charge) {
                return Err(MonadError::Parse(
                    "component shape does not match charge".into(),
                ));
            }
            let rows: Result<Vec<Vec<Rational>>, _> = c
                .iter()
                .map(|r| r.iter().map(|x| parse_rational(x)).collect())
                .collect();
            let rows = rows.map_err(|e| MonadError::Parse(e.to_string()))?;
            comps.push(RatMatrix::from_rows(&rows));
        }
        let gamma: [RatMatrix; 3] = comps.try_into().expect("three components");
        MonadData::new(ctx, gamma)
    }

    pub fn to_json(&self, meta: Option<serde_json::Value>) -> String {
        let j = MonadJson {
            charge: self.n,
            gamma: self.gamma.iter().map(|s| s.to_strings()).collect(),
            meta,
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }
}

/// γ′ at U: rows index H⊗U (basis of U), columns H*⊗U^⊥ (annihilator basis).
pub fn fiber_matrix(ctx: &GeometryContext, m: &MonadData, p: &PointY) -> RatMatrix {
    let n = m.charge();
    let ann = RatMatrix::from_cols(&p.annihilator());
    let u = p.basis();
    let mut out = RatMatrix::zeros(2 * n, 3 * n);
    for h in 0..n {
        for j in 0..2 {
            let uj = u.row(j);
            for l in 0..n {
                let mut cov = vec![Rational::zero(); 5];
                for (s, a) in m.gamma().iter().zip(&ctx.a_basis) {
                    let c = &s[(h, l)];
                    if c.is_zero() {
                        continue;
                    }
                    for (x, y) in cov.iter_mut().zip(a.transpose().mul_vec(&uj)) {
                        *x += c * y;
                    }
                }
                let coords = ann.solve(&cov).expect("a_i(u, -) annihilates U");
                for (k, c) in coords.into_iter().enumerate() {
                    out[(h * 2 + j, l * 3 + k)] = c;
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MembershipVerdict {
    pub charge: usize,
    pub gamma_hat_rank: usize,
    pub rank_condition: bool,
    pub coefficient_rank: usize,
    pub fiber_points_tested: usize,
    pub fiber_points_passed: usize,
    pub closed_orbit_certificate: bool,
    pub lines_tested: usize,
    pub lines_certified: usize,
    pub passed: bool,
    pub witness: Option<String>,
    pub probabilistically_complete: bool,
}

/// Decides (ii) exactly and certifies (i) by sampling and curve certificates.
pub fn check_membership(
    ctx: &GeometryContext,
    m: &MonadData,
    budget: usize,
    seed: u64,
) -> MembershipVerdict {
    let n = m.charge();
    let r = m.gamma_hat().rank();
    let mut v = MembershipVerdict {
        charge: n,
        gamma_hat_rank: r,
        rank_condition: r == 4 * n + 2,
        coefficient_rank: m.coefficient_matrix().rank(),
        fiber_points_tested: 0,
        fiber_points_passed: 0,
        closed_orbit_certificate: false,
        lines_tested: 0,
        lines_certified: 0,
        passed: false,
        witness: None,
        probabilistically_complete: true,
    };
    if !v.rank_condition {
        v.witness = Some(format!("rank of gamma-hat is {r}, expected {}", 4 * n + 2));
        return v;
    }
    let mut rng = sampling::substream(seed, 1);
    for _ in 0..budget {
        let t = sampling::nonzero_int(&mut rng, 5);
        let (s, u) = (sampling::int(&mut rng, 5), sampling::int(&mut rng, 5));
        let p = ctx.orbit_point(&s, &t, &u);
        v.fiber_points_tested += 1;
        if fiber_matrix(ctx, m, &p).rank() == 2 * n {
            v.fiber_points_passed += 1;
        } else if v.witness.is_none() {
            v.witness = Some(format!(
                "fiber rank drops at U = {:?}",
                p.basis().to_strings()
            ));
        }
    }
    v.closed_orbit_certificate = closed_orbit_certificate(ctx, m, &mut rng);
    if !v.closed_orbit_certificate && v.witness.is_none() {
        v.witness = Some("fiber rank drops somewhere on the closed orbit".into());
    }
    if v.coefficient_rank < 3 && v.witness.is_none() {
        v.witness = Some("gamma is not injective as a map from the dual of A".into());
    }
    for _ in 0..5 {
        let a = random_line(&mut rng, 6);
        v.lines_tested += 1;
        let ok = restrict_monad_to_line(ctx, m, &a)
            .map(|c| is_monad_of_bundles(&c, &mut rng))
            .unwrap_or(false);
        if ok {
            v.lines_certified += 1;
        } else if v.witness.is_none() {
            v.witness = Some(format!(
                "restriction to the line {:?} is not a monad of bundles",
                a.a
            ));
        }
    }
    v.passed = v.fiber_points_passed == v.fiber_points_tested
        && v.closed_orbit_certificate
        && v.coefficient_rank == 3
        && v.lines_certified == v.lines_tested;
    v
}

pub fn random_line(rng: &mut SeededRng, height: i64) -> LineRef {
    LineRef::new(sampling::nonzero_int_vec(rng, 3, height)).expect("nonzero")
}

// gcd of the 2n-minors of γ′ along U(s,t) = (sx+ty)³·W, via random projections.
fn closed_orbit_certificate(ctx: &GeometryContext, m: &MonadData, rng: &mut SeededRng) -> bool {
    let n = m.charge();
    let frames = ctx.closed_orbit_frames();
    let at = |t: &Rational| {
        // 5n × 2n: column (h, j) is the covector Σ_l Σ_i s_i[h][l] a_i(u_j, −) in H*⊗V*
        let us: Vec<Vec<Rational>> = frames.iter().map(|f| f.eval(&Rational::one(), t)).collect();
        let mut mm = RatMatrix::zeros(5 * n, 2 * n);
        for h in 0..n {
            for (j, u) in us.iter().enumerate() {
                for l in 0..n {
                    for (s, a) in m.gamma().iter().zip(&ctx.a_basis) {
                        let c = &s[(h, l)];
                        if c.is_zero() {
                            continue;
                        }
                        for (k, y) in a.transpose().mul_vec(u).into_iter().enumerate() {
                            mm[(l * 5 + k, h * 2 + j)] += c * y;
                        }
                    }
                }
            }
        }
        mm
    };
    let mut dets: Vec<BinaryForm> = Vec::new();
    for _ in 0..8 {
        let p = RatMatrix::from_fn(2 * n, 5 * n, |_, _| sampling::int(rng, 4));
        dets.push(interpolate_binary_form(6 * n, |t| p.mul(&at(t)).det()));
        if common_zero_degree(&dets) == 0 {
            return true;
        }
    }
    false
}

/// S²H* for H ≅ W in the monomial basis h1², h1h2, h2²; the matrix entry s12 is half
/// the h1h2 coordinate.
fn s2h_dual() -> Rep {
    Rep::sym_power_of_w(1).dual().sym2()
}

/// The invariant quadratic form on S²H* (a discriminant), normalized so D\[1\]\[1\] = 1.
pub fn q_h() -> RatMatrix {
    let inv = s2h_dual().dual().sym2().invariant_vectors();
    assert_eq!(inv.len(), 1, "unique invariant quadratic form on S2H*");
    let c = &inv[0];
    let pairs = [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)];
    let mut d = RatMatrix::zeros(3, 3);
    for (k, &(i, j)) in pairs.iter().enumerate() {
        if i == j {
            d[(i, i)] = c[k].clone();
        } else {
            d[(i, j)] = &c[k] / rat(2);
            d[(j, i)] = &c[k] / rat(2);
        }
    }
    let t = RatMatrix::from_rows(&[
        vec![rat(1), rat(0), rat(0)],
        vec![rat(0), rat(2), rat(0)],
        vec![rat(0), rat(0), rat(1)],
    ]);
    let d = t.mul(&d).mul(&t);
    let scale = d[(1, 1)].clone();
    assert!(!scale.is_zero(), "discriminant has an s12^2 term");
    d.scale(&scale.recip())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mi2Report {
    pub q2: Rational,
    pub q3: Rational,
    pub f_conic: RatMatrix,
    pub f_is_q: bool,
    pub in_mon2: bool,
}

/// Q3 = det Γ, F = Γᵀ q_H Γ, Q2 = ⟨F, q⟩ through the polarity.
pub fn mi2_invariants(ctx: &GeometryContext, m: &MonadData) -> Result<Mi2Report, MonadError> {
    if m.charge() != 2 {
        return Err(MonadError::Charge(m.charge()));
    }
    let g = m.coefficient_matrix();
    let q3 = g.det();
    let f = g.transpose().mul(&q_h()).mul(&g);
    let fp = f.mul(&ctx.polarity);
    let q2 = (0..3)
        .map(|i| fp[(i, i)].clone())
        .fold(Rational::zero(), |a, b| a + b);
    let f_is_q = !f.is_zero() && crate::exact::proportional(f.entries(), ctx.q.entries());
    let in_mon2 = !q2.is_zero() && !q3.is_zero();
    Ok(Mi2Report {
        q2,
        q3,
        f_conic: f,
        f_is_q,
        in_mon2,
    })
}

/// Pf(γ̂) / (Q2·Q3), when the denominator is nonzero.
pub fn pfaffian_ratio(ctx: &GeometryContext, m: &MonadData) -> Option<Rational> {
    let r = mi2_invariants(ctx, m).ok()?;
    let d = &r.q2 * &r.q3;
    if d.is_zero() {
        return None;
    }
    Some(m.gamma_hat().pfaffian().ok()? / d)
}

/// The SL₂-equivariant charge-2 datum with H ≅ W.
pub fn equivariant_gamma2(ctx: &GeometryContext) -> Result<MonadData, MonadError> {
    let inv = ctx.a_rep.tensor(&s2h_dual()).invariant_vectors();
    if inv.len() != 1 {
        return Err(MonadError::Invariant(format!(
            "invariant space has dimension {}",
            inv.len()
        )));
    }
    let c = crate::exact::normalize_projective(&inv[0]);
    let sym = |i: usize| {
        let x = |k: usize| c[i * 3 + k].clone();
        let half = x(1) / rat(2);
        RatMatrix::from_rows(&[vec![x(0), half.clone()], vec![half, x(2)]])
    };
    MonadData::new(ctx, [sym(0), sym(1), sym(2)])
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaReport {
    pub kernel_generator: RatMatrix,
    pub beta: Option<Subspace3>,
    pub injective: bool,
    pub complex_condition: bool,
    pub special: bool,
    pub special_line: Option<LineRef>,
}

/// β(E): the row span of the 3×5 kernel generator of γ̂.
pub fn beta(ctx: &GeometryContext, m: &MonadData) -> Result<BetaReport, MonadError> {
    if m.charge() != 3 {
        return Err(MonadError::Charge(m.charge()));
    }
    let r = m.gamma_hat().rank();
    let k = m.kernel_rows().ok_or(MonadError::NotCandidate(r))?.clone();
    let injective = k.rank() == 3;
    let flat = k.entries().to_vec();
    let complex_condition = m.gamma_hat().mul_vec(&flat).iter().all(|x| x.is_zero());
    let beta = if injective {
        Subspace3::new(k.clone()).ok()
    } else {
        None
    };
    let (special, special_line) = match &beta {
        Some(b) => is_special_for(ctx, m, b)?,
        None => (false, None),
    };
    Ok(BetaReport {
        kernel_generator: k,
        beta,
        injective,
        complex_condition,
        special,
        special_line,
    })
}

/// Special ⟺ some v ≠ 0 has a_i(k_j, v) = 0 for all i, j; then the line a with a(v,−) = 0.
fn is_special_for(
    ctx: &GeometryContext,
    m: &MonadData,
    b: &Subspace3,
) -> Result<(bool, Option<LineRef>), MonadError> {
    let ks = b.basis().to_rows();
    let mut rows = Vec::new();
    for kj in &ks {
        for a in &ctx.a_basis {
            rows.push(a.transpose().mul_vec(kj));
        }
    }
    let ker = RatMatrix::from_rows(&rows).kernel_basis();
    match ker.len() {
        0 => Ok((false, None)),
        1 => {
            let v = &ker[0];
            let cols: Vec<Vec<Rational>> = ctx.a_basis.iter().map(|a| a.mul_vec(v)).collect();
            let xs = RatMatrix::from_cols(&cols).kernel_basis();
            if xs.len() != 1 {
                return Err(MonadError::Invariant(format!(
                    "{} lines through the special vector",
                    xs.len()
                )));
            }
            let line =
                LineRef::new(xs[0].clone()).map_err(|e| MonadError::Invariant(e.to_string()))?;
            if !ctx.kappa(&line).same_as(b) {
                return Err(MonadError::Invariant(
                    "kappa of the special line differs from beta".into(),
                ));
            }
            let corank = 3 - m.gamma_at(ctx, &line.a).rank();
            if corank != 2 {
                return Err(MonadError::Invariant(format!(
                    "special line has corank {corank}, expected 2"
                )));
            }
            Ok((true, Some(line)))
        }
        d => Err(MonadError::Invariant(format!(
            "specialness kernel has dimension {d}"
        ))),
    }
}

pub fn is_special(
    ctx: &GeometryContext,
    m: &MonadData,
) -> Result<(bool, Option<LineRef>), MonadError> {
    let b = beta(ctx, m)?;
    Ok((b.special, b.special_line))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaSubspace {
    /// Rows: images of h_k in β⊗A, coordinates (j, i) ↦ s_i\[k\]\[j\].
    pub basis: RatMatrix,
    pub rank: usize,
    pub composite_vanishes: bool,
}

/// Image of H in β(E)⊗A, with its composite into V* through evaluation of A.
pub fn gamma_subspace(ctx: &GeometryContext, m: &MonadData) -> Result<GammaSubspace, MonadError> {
    let b = beta(ctx, m)?;
    if !b.injective {
        return Err(MonadError::Invariant("beta is not a 3-plane".into()));
    }
    let k = &b.kernel_generator;
    let basis = RatMatrix::from_fn(3, 9, |kk, c| m.gamma()[c % 3][(kk, c / 3)].clone());
    let mut composite_vanishes = true;
    for kk in 0..3 {
        let mut cov = vec![Rational::zero(); 5];
        for j in 0..3 {
            for (i, a) in ctx.a_basis.iter().enumerate() {
                let c = &m.gamma()[i][(kk, j)];
                if c.is_zero() {
                    continue;
                }
                for (x, y) in cov.iter_mut().zip(a.transpose().mul_vec(&k.row(j))) {
                    *x += c * y;
                }
            }
        }
        composite_vanishes &= cov.iter().all(|x| x.is_zero());
    }
    Ok(GammaSubspace {
        rank: basis.rank(),
        basis,
        composite_vanishes,
    })
}

fn random_symmetric(rng: &mut SeededRng, n: usize, height: i64) -> RatMatrix {
    let mut s = RatMatrix::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = sampling::int(rng, height);
            s[(i, j)] = x.clone();
            s[(j, i)] = x;
        }
    }
    s
}

#[derive(Clone, Debug)]
pub struct Sampled {
    pub monad: MonadData,
    pub attempts: usize,
    pub verdict: MembershipVerdict,
}

pub const ATTEMPT_BUDGET: usize = 40;

/// Rejection sampling of integer data with |entries| ≤ height until membership passes.
pub fn random_instanton(
    ctx: &GeometryContext,
    n: usize,
    seed: u64,
    height: i64,
    budget: usize,
) -> Result<Sampled, MonadError> {
    if !(2..=3).contains(&n) {
        return Err(MonadError::Charge(n));
    }
    let mut rng = sampling::substream(seed, 0);
    for attempt in 1..=ATTEMPT_BUDGET {
        let gamma = [0, 1, 2].map(|_| random_symmetric(&mut rng, n, height));
        let m = MonadData::new(ctx, gamma)?;
        let verdict = check_membership(ctx, &m, budget, seed.wrapping_add(attempt as u64));
        if verdict.passed {
            return Ok(Sampled {
                monad: m,
                attempts: attempt,
                verdict,
            });
        }
    }
    Err(MonadError::Budget(ATTEMPT_BUDGET))
}

/// Data with γ(x) = R prescribed at the given lines, the remaining freedom random.
pub fn prescribed_instanton(
    ctx: &GeometryContext,
    n: usize,
    constraints: &[(LineRef, RatMatrix)],
    seed: u64,
    height: i64,
    budget: usize,
) -> Result<Sampled, MonadError> {
    let idx: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let nu = 3 * idx.len();
    // unknown (i, p) = entry idx[p] of s_i
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (a, r) in constraints {
        let lambda = ctx.polarity.mul_vec(&a.a);
        for (p, &(h, l)) in idx.iter().enumerate() {
            let mut row = vec![Rational::zero(); nu];
            for (i, li) in lambda.iter().enumerate() {
                row[i * idx.len() + p] = li.clone();
            }
            rows.push(row);
            rhs.push(r[(h, l)].clone());
        }
    }
    let c = RatMatrix::from_rows(&rows);
    let particular = c
        .solve(&rhs)
        .ok_or_else(|| MonadError::Invariant("inconsistent prescriptions".into()))?;
    let ker = c.kernel_basis();
    let mut rng = sampling::substream(seed, 0);
    for attempt in 1..=ATTEMPT_BUDGET {
        let mut x = particular.clone();
        for k in &ker {
            let w = sampling::int(&mut rng, height);
            for (xi, ki) in x.iter_mut().zip(k) {
                *xi += &w * ki;
            }
        }
        let gamma = [0, 1, 2].map(|i| {
            let mut s = RatMatrix::zeros(n, n);
            for (p, &(h, l)) in idx.iter().enumerate() {
                s[(h, l)] = x[i * idx.len() + p].clone();
                s[(l, h)] = x[i * idx.len() + p].clone();
            }
            s
        });
        let m = MonadData::new(ctx, gamma)?;
        let verdict = check_membership(ctx, &m, budget, seed.wrapping_add(attempt as u64));
        if verdict.passed {
            return Ok(Sampled {
                monad: m,
                attempts: attempt,
                verdict,
            });
        }
    }
    Err(MonadError::Budget(ATTEMPT_BUDGET))
}

/// Random symmetric n×n integer matrix of the given rank.
pub fn symmetric_of_rank(rng: &mut SeededRng, n: usize, rank: usize, height: i64) -> RatMatrix {
    loop {
        let mut s = RatMatrix::zeros(n, n);
        for _ in 0..rank {
            let v = sampling::nonzero_int_vec(rng, n, height.max(1));
            let sign = sampling::nonzero_int(rng, 1);
            let vv = RatMatrix::from_fn(n, n, |i, j| &sign * &v[i] * &v[j]);
            s = s.add(&vv);
        }
        if s.rank() == rank {
            return s;
        }
    }
}

/// Charge-3 instanton with γ(a) of corank 2 at the given line.
pub fn special_instanton(
    ctx: &GeometryContext,
    a: &LineRef,
    seed: u64,
    height: i64,
    budget: usize,
) -> Result<Sampled, MonadError> {
    let mut rng = sampling::substream(seed, 7);
    let r = symmetric_of_rank(&mut rng, 3, 1, 3);
    prescribed_instanton(ctx, 3, &[(a.clone(), r)], seed, height, budget)
}

/// Corank of γ(a).
pub fn corank_at(ctx: &GeometryContext, m: &MonadData, a: &LineRef) -> usize {
    m.charge() - m.gamma_at(ctx, &a.a).rank()
}

/// Serializable summary of the monad datum.
pub fn gamma_strings(m: &MonadData) -> Vec<Vec<Vec<String>>> {
    m.gamma().iter().map(|s| s.to_strings()).collect()
}

pub fn rational_map(r: &BTreeMap<String, Rational>) -> BTreeMap<String, String> {
    r.iter().map(|(k, v)| (k.clone(), rat_str(v))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> GeometryContext {
        GeometryContext::build().unwrap()
    }

    #[test]
    fn q_h_is_discriminant() {
        let d = q_h();
        let expected = RatMatrix::from_rows(&[
            vec![rat(0), rat(0), crate::frac(-1, 2)],
            vec![rat(0), rat(1), rat(0)],
            vec![crate::frac(-1, 2), rat(0), rat(0)],
        ]);
        assert_eq!(d, expected);
    }

    #[test]
    fn equivariant_monad() {
        let c = ctx();
        let m = equivariant_gamma2(&c).unwrap();
        assert_eq!(m.gamma_hat().rank(), 10);
        let r = mi2_invariants(&c, &m).unwrap();
        assert!(r.in_mon2 && r.f_is_q);
        assert!(check_membership(&c, &m, 3, 1).passed);
    }

    #[test]
    fn zero_and_degenerate_fail() {
        let c = ctx();
        let z = MonadData::new(
            &c,
            [
                RatMatrix::zeros(2, 2),
                RatMatrix::zeros(2, 2),
                RatMatrix::zeros(2, 2),
            ],
        )
        .unwrap();
        let v = check_membership(&c, &z, 2, 1);
        assert!(!v.passed && !v.rank_condition);
        let s = RatMatrix::identity(2);
        let r1 = MonadData::new(&c, [s.clone(), s.scale(&rat(2)), s.scale(&rat(-1))]).unwrap();
        assert!(!check_membership(&c, &r1, 2, 1).passed);
    }

    #[test]
    fn json_round_trip() {
        let c = ctx();
        let m = equivariant_gamma2(&c).unwrap();
        let back = MonadData::from_json(&c, &m.to_json(None)).unwrap();
        assert_eq!(back, m);
        let bad = r#"{"charge":2,"gamma":[[["1","2"],["3","1"]],[["0","0"],["0","0"]],[["0","0"],["0","0"]]]}"#;
        assert_eq!(
            MonadData::from_json(&c, bad),
            Err(MonadError::NotSymmetric(0))
        );
    }
}

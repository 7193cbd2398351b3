//! Jumping lines and jumping conics of an instanton, read off its monad datum.

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    determinant_of_poly_matrix, BinaryForm, MultiPoly, RatMatrix, Rational, UniPoly,
};
use crate::geometry::{ConicRef, GeometryContext, LineRef, PointY};
use crate::monads::{corank_at, mi2_invariants, random_line, MonadData, MonadError};
use crate::p1bundles::{hyper_h, restrict_monad_to_conic, restrict_monad_to_line, P1Error};
use crate::sampling;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum JumpError {
    #[error(transparent)]
    Monad(#[from] MonadError),
    #[error(transparent)]
    Restriction(#[from] P1Error),
    #[error("geometry: {0}")]
    Geometry(String),
}

/// Entries of γ(x) as linear forms in the three coordinates of x.
fn gamma_linear(ctx: &GeometryContext, m: &MonadData) -> Vec<Vec<MultiPoly>> {
    let n = m.charge();
    let p = &ctx.polarity;
    (0..n)
        .map(|h| {
            (0..n)
                .map(|l| {
                    let c: Vec<Rational> = (0..3)
                        .map(|j| {
                            (0..3).fold(Rational::zero(), |acc, i| {
                                acc + &p[(i, j)] * &m.gamma()[i][(h, l)]
                            })
                        })
                        .collect();
                    MultiPoly::linear(&c)
                })
                .collect()
        })
        .collect()
}

/// det γ(x), a form of degree n on A.
pub fn theta_polynomial(ctx: &GeometryContext, m: &MonadData) -> MultiPoly {
    determinant_of_poly_matrix(&gamma_linear(ctx, m))
}

pub fn jump_order(ctx: &GeometryContext, m: &MonadData, a: &LineRef) -> usize {
    corank_at(ctx, m, a)
}

#[derive(Clone, Debug)]
pub struct ThetaReport {
    pub theta_poly: MultiPoly,
    pub corank_witnesses: Vec<(LineRef, usize)>,
    pub smooth_conic: Option<bool>,
    /// θ ∝ xᵀ(P F P)x, checked by exact division.
    pub proportional_to_f: Option<bool>,
}

pub fn charge2_theta(
    ctx: &GeometryContext,
    m: &MonadData,
    seed: u64,
    samples: usize,
) -> Result<ThetaReport, JumpError> {
    let r = mi2_invariants(ctx, m)?;
    let theta = theta_polynomial(ctx, m);
    let pfp = ctx.polarity.mul(&r.f_conic).mul(&ctx.polarity);
    let qf = MultiPoly::quadratic_form(&pfp);
    let prop = match theta.divide_exact(&qf) {
        Ok(Some(q)) => q.total_degree() == Some(0) && !q.is_zero(),
        _ => false,
    };
    let mut rng = sampling::substream(seed, 11);
    let corank_witnesses = (0..samples)
        .map(|_| {
            let a = random_line(&mut rng, 9);
            let k = jump_order(ctx, m, &a);
            (a, k)
        })
        .collect();
    Ok(ThetaReport {
        theta_poly: theta,
        corank_witnesses,
        smooth_conic: Some(!r.f_conic.det().is_zero()),
        proportional_to_f: Some(prop),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JumpMethod {
    SmoothCohomology,
    ComponentLines,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JumpStatus {
    Decided,
    UndecidedNeedsPoint,
    UndecidedDoubleLine,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicJumpVerdict {
    pub conic: ConicRef,
    pub jumping: bool,
    pub method: JumpMethod,
    pub status: JumpStatus,
    /// Rational component lines, when the components are defined over Q.
    pub rational_components: Vec<LineRef>,
}

/// Smooth conics: H•(E⊗U|_C) ≠ 0. Singular conics: some component line is jumping.
pub fn conic_is_jumping(
    ctx: &GeometryContext,
    m: &MonadData,
    w: &ConicRef,
    height: i64,
) -> Result<ConicJumpVerdict, JumpError> {
    let form = ctx
        .conic_form(w)
        .map_err(|e| JumpError::Geometry(e.to_string()))?;
    if form.singular {
        return singular_conic_verdict(ctx, m, w);
    }
    let undecided = ConicJumpVerdict {
        conic: w.clone(),
        jumping: false,
        method: JumpMethod::SmoothCohomology,
        status: JumpStatus::UndecidedNeedsPoint,
        rational_components: vec![],
    };
    let Some(p) = ctx.find_rational_point(w, height) else {
        return Ok(undecided);
    };
    smooth_conic_verdict(ctx, m, w, &p)
}

/// Smooth-conic test using a known rational point of the conic.
pub fn smooth_conic_verdict(
    ctx: &GeometryContext,
    m: &MonadData,
    w: &ConicRef,
    p: &PointY,
) -> Result<ConicJumpVerdict, JumpError> {
    let param = ctx
        .smooth_conic_parametrization(w, p)
        .map_err(|e| JumpError::Geometry(e.to_string()))?;
    let c = restrict_monad_to_conic(ctx, m, &param)?;
    let jumping = !hyper_h(&c, 0).is_empty();
    Ok(ConicJumpVerdict {
        conic: w.clone(),
        jumping,
        method: JumpMethod::SmoothCohomology,
        status: JumpStatus::Decided,
        rational_components: vec![],
    })
}

fn singular_conic_verdict(
    ctx: &GeometryContext,
    m: &MonadData,
    w: &ConicRef,
) -> Result<ConicJumpVerdict, JumpError> {
    let form = ctx
        .conic_form(w)
        .map_err(|e| JumpError::Geometry(e.to_string()))?;
    let mut v = ConicJumpVerdict {
        conic: w.clone(),
        jumping: false,
        method: JumpMethod::ComponentLines,
        status: JumpStatus::Decided,
        rational_components: vec![],
    };
    let ker = form.gram.kernel_basis();
    if ker.len() != 1 {
        v.status = JumpStatus::UndecidedDoubleLine;
        return Ok(v);
    }
    let node = PointY::from_bivector(&form.bivector(&ker[0]))
        .map_err(|e| JumpError::Geometry(e.to_string()))?;
    let through = ctx.lines_through_point(&node);
    let (u1, u2) = (through.u1.clone(), through.u2.clone());

    // rows a_i(u, −) at u = s·u1 + t·u2, as linear forms
    let rows: Vec<Vec<BinaryForm>> = ctx
        .a_basis
        .iter()
        .map(|a| {
            let r1 = a.transpose().mul_vec(&u1);
            let r2 = a.transpose().mul_vec(&u2);
            r1.into_iter()
                .zip(r2)
                .map(|(x, y)| BinaryForm::linear(x, y))
                .collect()
        })
        .collect();
    let wrow: Vec<BinaryForm> =
        w.w.iter()
            .map(|c| BinaryForm::constant(c.clone()))
            .collect();
    let mut all = rows.clone();
    all.push(wrow);
    let mut forms = vec![through.cubic.clone()];
    for r in crate::exact::combinations(4, 3) {
        for c in crate::exact::combinations(5, 3) {
            let mm: Vec<Vec<MultiPoly>> = r
                .iter()
                .map(|&i| c.iter().map(|&j| all[i][j].to_multipoly()).collect())
                .collect();
            let d = determinant_of_poly_matrix(&mm);
            if !d.is_zero() {
                let deg = d.total_degree().unwrap_or(0) as usize;
                forms.push(BinaryForm::from_multipoly(&d, deg));
            }
        }
    }
    let factors = common_factors(&forms);

    // kernel of the 5×3 matrix M(s,t) with M_ji = a_i(u, e_j): the line at u
    for f in factors {
        let x = line_vector_mod(&rows, &f)
            .ok_or_else(|| JumpError::Geometry("no line along a component".into()))?;
        if f.degree() == 1 {
            let (s, t) = (-f.coeffs()[1].clone(), f.coeffs()[0].clone());
            let xv: Vec<Rational> = x.iter().map(|c| c.eval(&s, &t)).collect();
            let a = LineRef::new(xv).map_err(|e| JumpError::Geometry(e.to_string()))?;
            if jump_order(ctx, m, &a) > 0 {
                v.jumping = true;
            }
            v.rational_components.push(a);
        } else {
            let theta = theta_along(ctx, m, &x);
            if divides(&f, &theta) {
                v.jumping = true;
            }
        }
    }
    Ok(v)
}

/// Irreducible rational factors of the squarefree gcd of the forms.
fn common_factors(forms: &[BinaryForm]) -> Vec<BinaryForm> {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    let mut g = UniPoly::zero();
    let mut at_inf = usize::MAX;
    for f in &nonzero {
        let u = f.dehomogenize();
        at_inf = at_inf.min(f.degree() - u.degree().unwrap_or(0));
        g = g.gcd(&u);
    }
    let g = g.squarefree_part();
    let mut out = Vec::new();
    if at_inf > 0 && at_inf != usize::MAX {
        // t = 0 ... the root at s = 0 is the form s
        out.push(BinaryForm::linear(Rational::one(), Rational::zero()));
    }
    match g.degree() {
        Some(1) => out.push(homogenize(&g, 1)),
        Some(2) => {
            let c = g.coeffs();
            let disc = &c[1] * &c[1] - Rational::from_integer(4.into()) * &c[0] * &c[2];
            match crate::geometry::rational_sqrt(&disc) {
                Some(r) => {
                    let two_a = &c[2] * Rational::from_integer(2.into());
                    for root in [(-&c[1] + &r) / &two_a, (-&c[1] - &r) / &two_a] {
                        // t − root·s
                        out.push(BinaryForm::linear(-root, Rational::one()));
                    }
                }
                None => out.push(homogenize(&g, 2)),
            }
        }
        // three components through one point cannot lie in a conic; keep the gcd whole
        Some(d) if d >= 3 => out.push(homogenize(&g, d)),
        _ => {}
    }
    out
}

// F(s,t) = s^d·g(t/s)
fn homogenize(g: &UniPoly, d: usize) -> BinaryForm {
    let mut c = g.coeffs().to_vec();
    c.resize(d + 1, Rational::zero());
    BinaryForm::new(d, c)
}

/// Line coordinates x(s,t) with Σ x_i a_i(u,−) = 0 along the factor f, taken as a cross product of two rows of the 5×3 matrix that is nonzero modulo f.
fn line_vector_mod(rows: &[Vec<BinaryForm>], f: &BinaryForm) -> Option<Vec<BinaryForm>> {
    // column j of `rows` is the row (a_1(u,e_j), a_2(u,e_j), a_3(u,e_j))
    let col = |j: usize| -> [BinaryForm; 3] {
        [rows[0][j].clone(), rows[1][j].clone(), rows[2][j].clone()]
    };
    for (j, k) in crate::exact::combinations(5, 2)
        .into_iter()
        .map(|c| (c[0], c[1]))
    {
        let (a, b) = (col(j), col(k));
        let cross = vec![
            a[1].mul(&b[2])
                .add(&a[2].mul(&b[1]).scale(&-Rational::one())),
            a[2].mul(&b[0])
                .add(&a[0].mul(&b[2]).scale(&-Rational::one())),
            a[0].mul(&b[1])
                .add(&a[1].mul(&b[0]).scale(&-Rational::one())),
        ];
        if cross.iter().any(|c| !divides(f, c)) {
            return Some(cross);
        }
    }
    None
}

/// θ(x(s,t)) for a vector of binary forms x.
fn theta_along(ctx: &GeometryContext, m: &MonadData, x: &[BinaryForm]) -> BinaryForm {
    let lin = gamma_linear(ctx, m);
    let xs: Vec<MultiPoly> = x.iter().map(|c| c.to_multipoly()).collect();
    let sub: Vec<Vec<MultiPoly>> = lin
        .iter()
        .map(|r| r.iter().map(|e| e.substitute(&xs)).collect())
        .collect();
    let d = determinant_of_poly_matrix(&sub);
    let deg = x[0].degree() * m.charge();
    if d.is_zero() {
        BinaryForm::zero(deg)
    } else {
        BinaryForm::from_multipoly(&d, deg)
    }
}

/// f | g for binary forms, via exact bivariate division.
fn divides(f: &BinaryForm, g: &BinaryForm) -> bool {
    if g.is_zero() {
        return true;
    }
    matches!(
        g.to_multipoly().divide_exact(&f.to_multipoly()),
        Ok(Some(_))
    )
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub singular_tested: usize,
    pub singular_agree: usize,
    pub singular_jumping: usize,
    pub smooth_tested: usize,
    pub smooth_jumping: usize,
    pub smooth_undecided: usize,
}

impl ConsistencyReport {
    pub fn passed(&self) -> bool {
        self.singular_agree == self.singular_tested
            && self.smooth_jumping == 0
            && self.smooth_undecided == 0
    }
}

/// A random line meeting the given one: a polarity-orthogonal direction.
pub fn random_meeting_line(
    ctx: &GeometryContext,
    a: &LineRef,
    rng: &mut sampling::SeededRng,
) -> LineRef {
    let plane = RatMatrix::from_rows(&[ctx.polarity.mul_vec(&a.a)]).kernel_basis();
    loop {
        let (c1, c2) = (sampling::int(rng, 5), sampling::int(rng, 5));
        let v: Vec<Rational> = plane[0]
            .iter()
            .zip(&plane[1])
            .map(|(x, y)| &c1 * x + &c2 * y)
            .collect();
        if let Ok(b) = LineRef::new(v) {
            if b != *a {
                return b;
            }
        }
    }
}

/// Line-level cohomological test: H•(E(−1)|_L) ≠ 0.
pub fn line_is_jumping_cohomologically(
    ctx: &GeometryContext,
    m: &MonadData,
    a: &LineRef,
) -> Result<bool, JumpError> {
    let c = restrict_monad_to_line(ctx, m, a)?;
    Ok(!hyper_h(&c, -1).is_empty())
}

/// Singular conics through intersecting rational line pairs, checked against the line rule
/// and the line-level cohomology; smooth conics through random points are expected not to jump.
pub fn jumping_consistency(
    ctx: &GeometryContext,
    m: &MonadData,
    singular_trials: usize,
    smooth_trials: usize,
    seed: u64,
    known_jumping: &[LineRef],
) -> Result<ConsistencyReport, JumpError> {
    let mut rng = sampling::substream(seed, 21);
    let mut rep = ConsistencyReport::default();
    for k in 0..singular_trials {
        let a1 = if !known_jumping.is_empty() && k % 2 == 0 {
            known_jumping[(k / 2) % known_jumping.len()].clone()
        } else {
            random_line(&mut rng, 6)
        };
        let a2 = random_meeting_line(ctx, &a1, &mut rng);
        let Some(w) = ctx.conic_through_lines(&a1, &a2) else {
            continue;
        };
        let verdict = conic_is_jumping(ctx, m, &w, 4)?;
        let by_lines = jump_order(ctx, m, &a1) > 0 || jump_order(ctx, m, &a2) > 0;
        let by_cohomology = line_is_jumping_cohomologically(ctx, m, &a1)?
            || line_is_jumping_cohomologically(ctx, m, &a2)?;
        rep.singular_tested += 1;
        if verdict.status == JumpStatus::Decided
            && verdict.jumping == by_lines
            && by_lines == by_cohomology
        {
            rep.singular_agree += 1;
        }
        if verdict.jumping {
            rep.singular_jumping += 1;
        }
    }
    for _ in 0..smooth_trials {
        let t = sampling::nonzero_int(&mut rng, 4);
        let (s, u) = (sampling::int(&mut rng, 4), sampling::int(&mut rng, 4));
        let p = ctx.orbit_point(&s, &t, &u);
        let ann = p.annihilator();
        let c = sampling::nonzero_int_vec(&mut rng, 3, 4);
        let wv: Vec<Rational> = (0..5)
            .map(|i| (0..3).fold(Rational::zero(), |acc, k| acc + &c[k] * &ann[k][i]))
            .collect();
        let w = ConicRef::new(wv).map_err(|e| JumpError::Geometry(e.to_string()))?;
        if ctx.conic_form(&w).map(|f| f.singular).unwrap_or(true) {
            continue;
        }
        rep.smooth_tested += 1;
        let v = smooth_conic_verdict(ctx, m, &w, &p)?;
        if v.jumping {
            rep.smooth_jumping += 1;
        }
    }
    Ok(rep)
}

/// The 3×3 matrix Θ in x, y, z, taken as given.
pub fn theta_matrix_example() -> Vec<Vec<MultiPoly>> {
    let v = |i: usize| MultiPoly::var(3, i);
    let z = || MultiPoly::zero(3);
    vec![
        vec![z(), v(0), v(1)],
        vec![v(0).neg(), v(1), v(2)],
        vec![v(1).neg(), v(2).neg(), z()],
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ThetaExampleReport {
    pub determinant: String,
    pub equals_y_cubed: bool,
    pub symmetric: bool,
    pub antisymmetric_part_nonzero: bool,
}

pub fn theta_example_report() -> ThetaExampleReport {
    let m = theta_matrix_example();
    let d = determinant_of_poly_matrix(&m);
    let y3 = MultiPoly::var(3, 1).pow(3);
    let symmetric = (0..3).all(|i| (0..3).all(|j| m[i][j] == m[j][i]));
    ThetaExampleReport {
        determinant: d.to_string_with(&["x", "y", "z"]),
        equals_y_cubed: d == y3,
        symmetric,
        antisymmetric_part_nonzero: !symmetric,
    }
}

/// Whether θ is proportional to the given quadratic form (exact).
pub fn theta_proportional(theta: &MultiPoly, q: &RatMatrix) -> bool {
    let qf = MultiPoly::quadratic_form(q);
    theta.is_proportional_to(&qf)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monads::equivariant_gamma2;

    #[test]
    fn theta_example() {
        let r = theta_example_report();
        assert!(r.equals_y_cubed);
        assert!(!r.symmetric);
    }

    #[test]
    fn equivariant_theta_is_polarity_conic() {
        let c = GeometryContext::build().unwrap();
        let m = equivariant_gamma2(&c).unwrap();
        let t = charge2_theta(&c, &m, 1, 5).unwrap();
        assert_eq!(t.smooth_conic, Some(true));
        assert_eq!(t.proportional_to_f, Some(true));
        assert!(theta_proportional(&t.theta_poly, &c.polarity));
    }
}

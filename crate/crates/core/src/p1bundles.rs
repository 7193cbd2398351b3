//! Complexes of split bundles on P¹, their hypercohomology and splitting types,
//! and restriction of monads to lines and conics of Y.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::exact::{
    common_zero_degree, maximal_minors, rat, sparse_rank, BinaryForm, PolyVec, RatMatrix, Rational,
    UniPoly,
};
use crate::geometry::{pair_index, triples, ConicParam, GeometryContext, LineRef};
use crate::monads::MonadData;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum P1Error {
    #[error("malformed complex: {0}")]
    Malformed(String),
    #[error("not locally free or rank mismatch: {0}")]
    NotLocallyFree(String),
    #[error("frame computation failed: {0}")]
    Frames(String),
}

/// Matrix of binary forms, entries indexed \[target\]\[source\].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<BinaryForm>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BinaryForm>) -> Self {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &BinaryForm {
        &self.entries[i * self.cols + j]
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self.get(i, j).eval(s, t))
    }
}

/// Bounded complex of sums of line bundles on P¹; terms\[k\] sits in degree start + k.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComplexOnP1 {
    pub start: i64,
    pub terms: Vec<Vec<i64>>,
    pub maps: Vec<PolyMatrix>,
}

fn deg_of(target: i64, source: i64) -> usize {
    (target - source).max(0) as usize
}

impl GradedComplexOnP1 {
    pub fn new(start: i64, terms: Vec<Vec<i64>>, maps: Vec<PolyMatrix>) -> Result<Self, P1Error> {
        let c = GradedComplexOnP1 { start, terms, maps };
        c.validate()?;
        Ok(c)
    }

    /// Single term, no maps.
    pub fn sheaf(twists: Vec<i64>) -> Self {
        GradedComplexOnP1 {
            start: 0,
            terms: vec![twists],
            maps: vec![],
        }
    }

    pub fn validate(&self) -> Result<(), P1Error> {
        if self.maps.len() + 1 != self.terms.len() {
            return Err(P1Error::Malformed(
                "need one map between consecutive terms".into(),
            ));
        }
        for (k, m) in self.maps.iter().enumerate() {
            let (src, tgt) = (&self.terms[k], &self.terms[k + 1]);
            if m.rows != tgt.len() || m.cols != src.len() {
                return Err(P1Error::Malformed(format!("map {k} has wrong shape")));
            }
            for (i, ti) in tgt.iter().enumerate() {
                for (j, sj) in src.iter().enumerate() {
                    let e = m.get(i, j);
                    if ti < sj {
                        if !e.is_zero() {
                            return Err(P1Error::Malformed(format!(
                                "map {k} entry ({i},{j}) has negative degree"
                            )));
                        }
                    } else if e.degree() != (ti - sj) as usize {
                        return Err(P1Error::Malformed(format!(
                            "map {k} entry ({i},{j}) has wrong degree"
                        )));
                    }
                }
            }
        }
        for k in 0..self.maps.len().saturating_sub(1) {
            let (a, b) = (&self.maps[k], &self.maps[k + 1]);
            for i in 0..b.rows {
                for j in 0..a.cols {
                    let d = deg_of(self.terms[k + 2][i], self.terms[k][j]);
                    let mut acc = BinaryForm::zero(d);
                    for l in 0..a.rows {
                        let (x, y) = (b.get(i, l), a.get(l, j));
                        if x.is_zero() || y.is_zero() {
                            continue;
                        }
                        acc = acc.add(&x.mul(y));
                    }
                    if !acc.is_zero() {
                        return Err(P1Error::Malformed(format!(
                            "maps {k} and {} do not compose to zero",
                            k + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn twisted(&self, e: i64) -> Self {
        GradedComplexOnP1 {
            start: self.start,
            terms: self
                .terms
                .iter()
                .map(|t| t.iter().map(|d| d + e).collect())
                .collect(),
            maps: self.maps.clone(),
        }
    }

    /// Tensor product with ⊕ O(e_k).
    pub fn tensor_split(&self, twists: &[i64]) -> Self {
        let r = twists.len();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                t.iter()
                    .flat_map(|d| twists.iter().map(move |e| d + e))
                    .collect()
            })
            .collect();
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let mut entries = Vec::with_capacity(m.rows * r * m.cols * r);
                for i in 0..m.rows * r {
                    for j in 0..m.cols * r {
                        let e = m.get(i / r, j / r);
                        entries.push(if i % r == j % r {
                            e.clone()
                        } else {
                            BinaryForm::zero(e.degree())
                        });
                    }
                }
                PolyMatrix::new(m.rows * r, m.cols * r, entries)
            })
            .collect();
        GradedComplexOnP1 {
            start: self.start,
            terms,
            maps,
        }
    }

    /// Σ_k (−1)^k Σ twists: degree of the cohomology sheaf when it sits in one spot.
    pub fn degree(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                if (self.start + k as i64) % 2 == 0 {
                    t.iter().sum::<i64>()
                } else {
                    -t.iter().sum::<i64>()
                }
            })
            .sum()
    }

    pub fn rank(&self) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                if (self.start + k as i64) % 2 == 0 {
                    t.len() as i64
                } else {
                    -(t.len() as i64)
                }
            })
            .sum()
    }

    /// χ of the twisted complex by Riemann–Roch on each term.
    pub fn euler_characteristic(&self, twist: i64) -> i64 {
        self.terms
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let x: i64 = t.iter().map(|d| d + twist + 1).sum();
                if (self.start + k as i64) % 2 == 0 {
                    x
                } else {
                    -x
                }
            })
            .sum()
    }

    /// The first map evaluated at [s:t].
    pub fn map_at(&self, k: usize, s: &Rational, t: &Rational) -> RatMatrix {
        self.maps[k].eval(s, t)
    }
}

// Čech block of one summand: chart 0 = {s ≠ 0}, 1 = {t ≠ 0}, 2 = overlap.
// Monomials s^(d−b) t^b are indexed by b; the truncation keeps exponents ≥ −N.
fn chart_range(chart: usize, d: i64, n: i64) -> (i64, i64) {
    match chart {
        0 => (0, d + n),
        1 => (-n, d),
        _ => (-n, d + n),
    }
}

/// Hypercohomology dimensions of c ⊗ O(twist), by the truncated Čech double complex.
pub fn hyper_h(c: &GradedComplexOnP1, twist: i64) -> BTreeMap<i64, usize> {
    let tw = c.twisted(twist);
    let min_d = tw.terms.iter().flatten().copied().min().unwrap_or(0);
    let n = (-min_d - 1).max(0);

    // layout[total degree] = list of (term k, summand j, chart) with offsets
    let lo = tw.start;
    let hi = tw.start + tw.terms.len() as i64; // Čech degree adds at most 1
    let mut layout: BTreeMap<i64, Vec<(usize, usize, usize, usize, i64, i64)>> = BTreeMap::new();
    let mut dims: BTreeMap<i64, usize> = BTreeMap::new();
    for (k, t) in tw.terms.iter().enumerate() {
        let p = tw.start + k as i64;
        for (j, &d) in t.iter().enumerate() {
            for chart in 0..3 {
                let q = if chart == 2 { 1 } else { 0 };
                let (a, b) = chart_range(chart, d, n);
                if b < a {
                    continue;
                }
                let deg = p + q;
                let off = dims.entry(deg).or_insert(0);
                layout
                    .entry(deg)
                    .or_default()
                    .push((k, j, chart, *off, a, b));
                *off += (b - a + 1) as usize;
            }
        }
    }
    let find = |deg: i64, k: usize, j: usize, chart: usize| -> Option<(usize, i64, i64)> {
        layout
            .get(&deg)?
            .iter()
            .find(|e| e.0 == k && e.1 == j && e.2 == chart)
            .map(|e| (e.3, e.4, e.5))
    };

    let mut ranks: BTreeMap<i64, usize> = BTreeMap::new();
    for deg in lo..=hi {
        let Some(blocks) = layout.get(&deg) else {
            continue;
        };
        // rows of Dᵀ: one per source basis element, entries (target index, value)
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for &(k, j, chart, off, a, b) in blocks {
            let p = tw.start + k as i64;
            let sign = if p % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            for e in a..=b {
                let mut row = Vec::new();
                if chart < 2 {
                    if let Some((o2, a2, b2)) = find(deg + 1, k, j, 2) {
                        if e >= a2 && e <= b2 {
                            let v = if chart == 1 {
                                sign.clone()
                            } else {
                                -sign.clone()
                            };
                            row.push((o2 + (e - a2) as usize, v));
                        }
                    }
                }
                if k < tw.maps.len() {
                    let m = &tw.maps[k];
                    for i in 0..m.rows {
                        let f = m.get(i, j);
                        if f.is_zero() {
                            continue;
                        }
                        if let Some((o2, a2, b2)) = find(deg + 1, k + 1, i, chart) {
                            for (r, cf) in f.coeffs().iter().enumerate() {
                                if cf.is_zero() {
                                    continue;
                                }
                                let e2 = e + r as i64;
                                if e2 >= a2 && e2 <= b2 {
                                    row.push((o2 + (e2 - a2) as usize, cf.clone()));
                                }
                            }
                        }
                    }
                }
                let _ = off;
                rows.push(row);
            }
        }
        ranks.insert(deg, sparse_rank(rows));
    }
    let mut out = BTreeMap::new();
    for (&deg, &dim) in &dims {
        let h = dim
            - ranks.get(&deg).copied().unwrap_or(0)
            - ranks.get(&(deg - 1)).copied().unwrap_or(0);
        if h > 0 {
            out.insert(deg, h);
        }
    }
    out
}

/// Multiset of degrees e ↦ multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SplittingType {
    pub parts: BTreeMap<i64, usize>,
}

impl SplittingType {
    pub fn from_list(v: &[i64]) -> Self {
        let mut parts = BTreeMap::new();
        for &e in v {
            *parts.entry(e).or_insert(0) += 1;
        }
        SplittingType { parts }
    }

    /// Degrees in ascending order with repetition.
    pub fn degrees(&self) -> Vec<i64> {
        self.parts
            .iter()
            .flat_map(|(e, m)| std::iter::repeat(*e).take(*m))
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.parts.values().sum()
    }

    /// k with type (−k, k), when the type has that shape.
    pub fn jump(&self) -> Option<i64> {
        match self.degrees().as_slice() {
            [a, b] if a + b == 0 => Some(*b),
            _ => None,
        }
    }
}

/// Splitting type of the degree-0 cohomology, from second differences of h⁰.
pub fn splitting_type(
    c: &GradedComplexOnP1,
    expected_rank: usize,
    window: i64,
) -> Result<SplittingType, P1Error> {
    let mut h0 = BTreeMap::new();
    for tw in -window - 2..=window {
        h0.insert(tw, hyper_h(c, tw).get(&0).copied().unwrap_or(0) as i64);
    }
    let mut parts = BTreeMap::new();
    for e in -window..=window {
        let m = h0[&-e] - 2 * h0[&(-e - 1)] + h0[&(-e - 2)];
        if m < 0 {
            return Err(P1Error::NotLocallyFree(format!(
                "negative multiplicity at degree {e}"
            )));
        }
        if m > 0 {
            parts.insert(e, m as usize);
        }
    }
    let st = SplittingType { parts };
    if st.rank() != expected_rank {
        return Err(P1Error::NotLocallyFree(format!(
            "recovered rank {} instead of {expected_rank}",
            st.rank()
        )));
    }
    let deg: i64 = st.degrees().iter().sum();
    if deg != c.degree() {
        return Err(P1Error::NotLocallyFree(format!(
            "recovered degree {deg} instead of {}",
            c.degree()
        )));
    }
    Ok(st)
}

/// All vectors of binary forms of the given degree killed by a linear constraint.
pub fn solve_polyvecs(
    dim: usize,
    degree: usize,
    constraint: impl Fn(&PolyVec) -> Vec<Rational>,
) -> Vec<PolyVec> {
    let mut unknowns = Vec::new();
    for i in 0..dim {
        for k in 0..=degree {
            let mut comps = vec![BinaryForm::zero(degree); dim];
            let mut c = vec![Rational::zero(); degree + 1];
            c[k] = Rational::one();
            comps[i] = BinaryForm::new(degree, c);
            unknowns.push(PolyVec::new(degree, comps));
        }
    }
    let cols: Vec<Vec<Rational>> = unknowns.iter().map(&constraint).collect();
    let m = RatMatrix::from_cols(&cols);
    m.kernel_basis()
        .into_iter()
        .map(|x| {
            let mut acc = PolyVec::new(degree, vec![BinaryForm::zero(degree); dim]);
            for (c, u) in x.iter().zip(&unknowns) {
                if !c.is_zero() {
                    acc = acc.add(&u.scale(c));
                }
            }
            acc
        })
        .collect()
}

/// Members of `candidates` extending `known` to a larger independent family.
fn extend_independent(known: &[PolyVec], candidates: &[PolyVec]) -> Vec<PolyVec> {
    let mut rows: Vec<Vec<Rational>> = known.iter().map(|p| p.flat()).collect();
    let mut out = Vec::new();
    for c in candidates {
        let mut trial = rows.clone();
        trial.push(c.flat());
        if RatMatrix::from_rows(&trial).rank() == trial.len() {
            rows = trial;
            out.push(c.clone());
        }
    }
    out
}

fn monomial(deg: usize, k: usize) -> BinaryForm {
    let mut c = vec![Rational::zero(); deg + 1];
    c[k] = Rational::one();
    BinaryForm::new(deg, c)
}

/// Frames of U and U^⊥ along a rational curve; twist of a frame = −degree.
#[derive(Clone, Debug)]
pub struct CurveFrames {
    pub u: Vec<PolyVec>,
    pub u_perp: Vec<PolyVec>,
}

impl CurveFrames {
    pub fn u_twists(&self) -> Vec<i64> {
        self.u.iter().map(|f| -(f.degree() as i64)).collect()
    }

    pub fn u_perp_twists(&self) -> Vec<i64> {
        self.u_perp.iter().map(|f| -(f.degree() as i64)).collect()
    }

    /// Both families are pointwise bases everywhere on P¹.
    pub fn nondegenerate(&self) -> bool {
        common_zero_degree(&maximal_minors(&self.u)) == 0
            && common_zero_degree(&maximal_minors(&self.u_perp)) == 0
    }
}

/// U|_L = O ⊕ O(−1) and U^⊥|_L = O² ⊕ O(−1) along the line L_a.
pub fn line_frames(ctx: &GeometryContext, a: &LineRef) -> Result<CurveFrames, P1Error> {
    let pencil = ctx.line_points(a);
    let fixed = PolyVec::constant(&pencil.sigma);
    let moving = pencil.moving();
    let ann = ctx.kappa(a).basis().kernel_basis();
    let consts: Vec<PolyVec> = ann.iter().map(|v| PolyVec::constant(v)).collect();
    let sols = solve_polyvecs(5, 1, |phi| {
        let mut v = phi.dot_const(&pencil.sigma).coeffs().to_vec();
        v.extend(phi.dot(&moving).coeffs().iter().cloned());
        v
    });
    let known: Vec<PolyVec> = consts
        .iter()
        .flat_map(|c| [c.mul_form(&monomial(1, 0)), c.mul_form(&monomial(1, 1))])
        .collect();
    let extra = extend_independent(&known, &sols);
    if extra.len() != 1 {
        return Err(P1Error::Frames(format!(
            "expected one linear frame of U-perp, found {}",
            extra.len()
        )));
    }
    let mut u_perp = consts;
    u_perp.push(extra[0].clone());
    let f = CurveFrames {
        u: vec![fixed, moving],
        u_perp,
    };
    if !f.nondegenerate() {
        return Err(P1Error::Frames("line frames degenerate".into()));
    }
    Ok(f)
}

/// u∧ω for u ∈ V and ω ∈ Λ²V, both polynomial, in Λ³ Plücker coordinates.
fn wedge_with(u: &PolyVec, omega: &[BinaryForm]) -> Vec<Rational> {
    let w = |i: usize, j: usize| &omega[pair_index(i, j)];
    let mut out = Vec::new();
    for (i, j, k) in triples() {
        let c = u.comps()[i]
            .mul(w(j, k))
            .add(&u.comps()[j].mul(w(i, k)).scale(&rat(-1)))
            .add(&u.comps()[k].mul(w(i, j)));
        out.extend(c.coeffs().iter().cloned());
    }
    out
}

/// U|_C = O(−1)² and U^⊥|_C = O ⊕ O(−1)² along a parametrized smooth conic.
pub fn conic_frames(param: &ConicParam) -> Result<CurveFrames, P1Error> {
    let omega = param.bivector_forms();
    let u = solve_polyvecs(5, 1, |x| wedge_with(x, &omega));
    if u.len() != 2 {
        return Err(P1Error::Frames(format!(
            "expected two linear frames of U, found {}",
            u.len()
        )));
    }
    let wconst = PolyVec::constant(&param.w.w);
    let sols = solve_polyvecs(5, 1, |phi| {
        let mut v = phi.dot(&u[0]).coeffs().to_vec();
        v.extend(phi.dot(&u[1]).coeffs().iter().cloned());
        v
    });
    let known = vec![
        wconst.mul_form(&monomial(1, 0)),
        wconst.mul_form(&monomial(1, 1)),
    ];
    let extra = extend_independent(&known, &sols);
    if extra.len() != 2 {
        return Err(P1Error::Frames(format!(
            "expected two linear frames of U-perp, found {}",
            extra.len()
        )));
    }
    let mut u_perp = vec![wconst];
    u_perp.extend(extra);
    let f = CurveFrames { u, u_perp };
    if !f.nondegenerate() {
        return Err(P1Error::Frames("conic frames degenerate".into()));
    }
    Ok(f)
}

/// The monad H⊗U → H*⊗U^⊥ (→ H'⊗O) pulled back along the frames, in degrees −1, 0, 1.
pub fn restrict_monad(
    ctx: &GeometryContext,
    m: &MonadData,
    frames: &CurveFrames,
) -> Result<GradedComplexOnP1, P1Error> {
    let n = m.charge();
    let (nu, np) = (frames.u.len(), frames.u_perp.len());
    let src: Vec<i64> = (0..n).flat_map(|_| frames.u_twists()).collect();
    let mid: Vec<i64> = (0..n).flat_map(|_| frames.u_perp_twists()).collect();

    // contracted forms M_hl = Σ_i s_i[h][l] a_i
    let mut entries = vec![BinaryForm::zero(0); mid.len() * src.len()];
    for h in 0..n {
        for (fi, f) in frames.u.iter().enumerate() {
            let col = h * nu + fi;
            for l in 0..n {
                let mut mhl = RatMatrix::zeros(5, 5);
                for (i, a) in ctx.a_basis.iter().enumerate() {
                    let c = &m.gamma()[i][(h, l)];
                    if !c.is_zero() {
                        mhl = mhl.add(&a.scale(c));
                    }
                }
                let phi = f.apply(&mhl.transpose());
                let coeffs = express_in_frames(&phi, &frames.u_perp)?;
                for (gi, c) in coeffs.into_iter().enumerate() {
                    entries[(l * np + gi) * src.len() + col] = c;
                }
            }
        }
    }
    let mut terms = vec![src.clone(), mid.clone()];
    let mut maps = vec![PolyMatrix::new(mid.len(), src.len(), entries)];
    if let Some(k) = m.kernel_rows() {
        let mut tail = Vec::new();
        for l in 0..n {
            for g in &frames.u_perp {
                tail.push(g.dot_const(&k.row(l)));
            }
        }
        terms.push(vec![0]);
        maps.push(PolyMatrix::new(1, mid.len(), tail));
    }
    GradedComplexOnP1::new(-1, terms, maps)
}

/// Coefficient forms c_g with φ = Σ_g c_g·g (deg c_g = deg φ − deg g, zero if negative).
fn express_in_frames(phi: &PolyVec, frames: &[PolyVec]) -> Result<Vec<BinaryForm>, P1Error> {
    let d = phi.degree();
    let mut cols = Vec::new();
    let mut index = Vec::new();
    for (gi, g) in frames.iter().enumerate() {
        if g.degree() > d {
            continue;
        }
        let e = d - g.degree();
        for k in 0..=e {
            cols.push(g.mul_form(&monomial(e, k)).flat());
            index.push((gi, e, k));
        }
    }
    let sol = if cols.is_empty() {
        if phi.is_zero() {
            Some(vec![])
        } else {
            None
        }
    } else {
        RatMatrix::from_cols(&cols).solve(&phi.flat())
    };
    let sol =
        sol.ok_or_else(|| P1Error::Frames("image does not lie in the target frames".into()))?;
    let mut out: Vec<BinaryForm> = frames
        .iter()
        .map(|g| {
            if g.degree() > d {
                BinaryForm::zero(0)
            } else {
                BinaryForm::zero(d - g.degree())
            }
        })
        .collect();
    for ((gi, e, k), x) in index.into_iter().zip(sol) {
        out[gi] = out[gi].add(&monomial(e, k).scale(&x));
    }
    Ok(out)
}

pub fn restrict_monad_to_line(
    ctx: &GeometryContext,
    m: &MonadData,
    a: &LineRef,
) -> Result<GradedComplexOnP1, P1Error> {
    restrict_monad(ctx, m, &line_frames(ctx, a)?)
}

/// The restricted monad tensored with U|_C = O(−1)².
pub fn restrict_monad_to_conic(
    ctx: &GeometryContext,
    m: &MonadData,
    param: &ConicParam,
) -> Result<GradedComplexOnP1, P1Error> {
    let frames = conic_frames(param)?;
    let c = restrict_monad(ctx, m, &frames)?;
    Ok(c.tensor_split(&frames.u_twists()))
}

/// Fiberwise injectivity of the first map and surjectivity of the last, everywhere on P¹.
/// Injectivity is tested through the gcd of determinants of random square projections.
pub fn is_monad_of_bundles(c: &GradedComplexOnP1, rng: &mut crate::sampling::SeededRng) -> bool {
    if !injective_everywhere(c, 0, rng) {
        return false;
    }
    if c.maps.len() > 1 {
        let last = &c.maps[c.maps.len() - 1];
        if last.rows != 1 || common_zero_degree(&last.entries) != 0 {
            return false;
        }
    }
    true
}

/// Map k has full column rank at every point of P¹.
pub fn injective_everywhere(
    c: &GradedComplexOnP1,
    k: usize,
    rng: &mut crate::sampling::SeededRng,
) -> bool {
    let m = &c.maps[k];
    let (rows, cols) = (m.rows, m.cols);
    if cols > rows {
        return false;
    }
    if m.eval(&Rational::zero(), &Rational::one()).rank() < cols {
        return false;
    }
    let (src, tgt) = (&c.terms[k], &c.terms[k + 1]);
    let bound: usize = (0..cols)
        .map(|j| tgt.iter().map(|ti| deg_of(*ti, src[j])).max().unwrap_or(0))
        .sum();
    let mut g: Option<UniPoly> = None;
    for _ in 0..8 {
        let p = RatMatrix::from_fn(cols, rows, |_, _| crate::sampling::int(rng, 6));
        let det = crate::exact::interpolate_binary_form(bound, |t| {
            p.mul(&m.eval(&Rational::one(), t)).det()
        });
        let u = det.dehomogenize();
        let next = match g {
            None => u,
            Some(prev) => prev.gcd(&u),
        };
        if !next.is_zero() && next.degree() == Some(0) {
            return true;
        }
        g = Some(next);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> BinaryForm {
        BinaryForm::linear(rat(a), rat(b))
    }

    #[test]
    fn line_bundle_cohomology() {
        let c = GradedComplexOnP1::sheaf(vec![-1, 1]);
        assert_eq!(hyper_h(&c, 0), BTreeMap::from([(0, 2)]));
        let c = GradedComplexOnP1::sheaf(vec![-3]);
        assert_eq!(hyper_h(&c, 0), BTreeMap::from([(1, 2)]));
        assert!(hyper_h(&c, -20).get(&0).is_none());
    }

    #[test]
    fn euler_sequence() {
        let m = PolyMatrix::new(2, 1, vec![lin(1, 0), lin(0, 1)]);
        let c = GradedComplexOnP1::new(-1, vec![vec![-1], vec![0, 0]], vec![m]).unwrap();
        assert_eq!(hyper_h(&c, 0), BTreeMap::from([(0, 2)]));
        assert_eq!(
            splitting_type(&c, 1, 3).unwrap(),
            SplittingType::from_list(&[1])
        );
    }

    #[test]
    fn trivial_presentation() {
        let c = GradedComplexOnP1::sheaf(vec![-1, 1]);
        assert_eq!(
            splitting_type(&c, 2, 3).unwrap(),
            SplittingType::from_list(&[-1, 1])
        );
        assert!(splitting_type(&c, 3, 3).is_err());
    }

    #[test]
    fn rejects_non_complex() {
        let a = PolyMatrix::new(1, 1, vec![lin(1, 0)]);
        let b = PolyMatrix::new(1, 1, vec![lin(0, 1)]);
        assert!(GradedComplexOnP1::new(0, vec![vec![0], vec![1], vec![2]], vec![a, b]).is_err());
    }
}

//! Y as a linear section of Gr(2,V), its lines P(A) and conics P(V*).
//!
//! Basis of V: e0..e4 = x⁴, x³y, x²y², xy³, y⁴. Elements of A are stored as
//! antisymmetric 5×5 matrices a with a(u,v) = uᵀ a v; sl₂ acts on V by the
//! contragredient of the monomial action, which is the action for which the
//! listed forms span an invariant subspace.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::exact::{
    common_zero_degree, determinant_of_poly_matrix, dot, is_zero_vec, normalize_projective,
    proportional, rat, BinaryForm, PolyVec, RatMatrix, Rational,
};
use crate::rep::Rep;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeometryError {
    #[error("context check failed: {0}")]
    Invariant(&'static str),
    #[error("zero vector where a projective point was expected")]
    ZeroVector,
    #[error("rows do not span a subspace of dimension {0}")]
    Rank(usize),
    #[error("conic is singular")]
    SingularConic,
    #[error("point does not lie on the conic")]
    NotOnConic,
    #[error("unexpected dimension {got} for {what}")]
    Dimension { what: &'static str, got: usize },
}

/// Index pairs (i, j), i < j, ordering the Plücker coordinates of Λ²V.
pub const PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

pub fn pair_index(i: usize, j: usize) -> usize {
    PAIRS
        .iter()
        .position(|&p| p == (i.min(j), i.max(j)))
        .expect("distinct indices")
}

pub fn unit(i: usize) -> Vec<Rational> {
    (0..5)
        .map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Element of Λ²V in Plücker coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Bivector(pub Vec<Rational>);

impl Bivector {
    pub fn zero() -> Self {
        Bivector(vec![Rational::zero(); 10])
    }

    pub fn wedge(u: &[Rational], v: &[Rational]) -> Self {
        Bivector(
            PAIRS
                .iter()
                .map(|&(i, j)| &u[i] * &v[j] - &u[j] * &v[i])
                .collect(),
        )
    }

    pub fn from_matrix(m: &RatMatrix) -> Self {
        Bivector(PAIRS.iter().map(|&(i, j)| m[(i, j)].clone()).collect())
    }

    pub fn to_matrix(&self) -> RatMatrix {
        let mut m = RatMatrix::zeros(5, 5);
        for (k, &(i, j)) in PAIRS.iter().enumerate() {
            m[(i, j)] = self.0[k].clone();
            m[(j, i)] = -self.0[k].clone();
        }
        m
    }

    pub fn add(&self, o: &Bivector) -> Bivector {
        Bivector(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: &Rational) -> Bivector {
        Bivector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.0)
    }

    /// Coordinates of ω∧ω, indexed by the omitted basis vector.
    pub fn wedge_square(&self) -> Vec<Rational> {
        let p = |i: usize, j: usize| &self.0[pair_index(i, j)];
        (0..5)
            .map(|m| {
                let r: Vec<usize> = (0..5).filter(|&k| k != m).collect();
                let (i, j, k, l) = (r[0], r[1], r[2], r[3]);
                rat(2) * (p(i, j) * p(k, l) - p(i, k) * p(j, l) + p(i, l) * p(j, k))
            })
            .collect()
    }

    pub fn is_decomposable(&self) -> bool {
        is_zero_vec(&self.wedge_square())
    }

    /// ⟨a, ω⟩ = Σ_{i<j} a_ij ω_ij.
    pub fn pair(&self, a: &RatMatrix) -> Rational {
        PAIRS
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (k, &(i, j))| {
                acc + &a[(i, j)] * &self.0[k]
            })
    }

    /// For a nonzero decomposable ω, a 2×5 basis of the plane it spans.
    pub fn span(&self) -> Option<RatMatrix> {
        if self.is_zero() || !self.is_decomposable() {
            return None;
        }
        let rows = self.to_matrix().row_space_basis();
        (rows.len() == 2).then(|| RatMatrix::from_rows(&rows))
    }

    /// g·(u∧v) = gu∧gv.
    pub fn act(&self, g: &RatMatrix) -> Bivector {
        Bivector::from_matrix(&g.mul(&self.to_matrix()).mul(&g.transpose()))
    }
}

/// A 2-plane U ⊂ V (point of Gr(2,V)); membership in Y is checked separately.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointY {
    u: RatMatrix,
}

impl PointY {
    pub fn new(u: RatMatrix) -> Result<Self, GeometryError> {
        if u.rows() != 2 || u.cols() != 5 || u.rank() != 2 {
            return Err(GeometryError::Rank(2));
        }
        Ok(PointY { u })
    }

    pub fn from_vectors(a: &[Rational], b: &[Rational]) -> Result<Self, GeometryError> {
        Self::new(RatMatrix::from_rows(&[a.to_vec(), b.to_vec()]))
    }

    pub fn from_bivector(w: &Bivector) -> Result<Self, GeometryError> {
        w.span().map(|u| PointY { u }).ok_or(GeometryError::Rank(2))
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.u
    }

    pub fn plucker(&self) -> Bivector {
        Bivector::wedge(&self.u.row(0), &self.u.row(1))
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.u.vstack(&RatMatrix::from_rows(&[v.to_vec()])).rank() == 2
    }

    /// Three vectors completing U to a basis of V.
    pub fn complement(&self) -> Vec<Vec<Rational>> {
        let mut m = self.u.clone();
        let mut out = Vec::new();
        for i in 0..5 {
            let cand = m.vstack(&RatMatrix::from_rows(&[unit(i)]));
            if cand.rank() == m.rows() + 1 {
                m = cand;
                out.push(unit(i));
            }
        }
        out
    }

    /// Basis of U^⊥ ⊂ V*.
    pub fn annihilator(&self) -> Vec<Vec<Rational>> {
        self.u.kernel_basis()
    }
}

/// A line of Y, named by a point of P(A) (coordinates in the A basis).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LineRef {
    pub a: Vec<Rational>,
}

impl LineRef {
    pub fn new(a: Vec<Rational>) -> Result<Self, GeometryError> {
        if a.len() != 3 || is_zero_vec(&a) {
            return Err(GeometryError::ZeroVector);
        }
        Ok(LineRef {
            a: normalize_projective(&a),
        })
    }
}

/// A conic of Y, named by a point of P(V*).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicRef {
    pub w: Vec<Rational>,
}

impl ConicRef {
    pub fn new(w: Vec<Rational>) -> Result<Self, GeometryError> {
        if w.len() != 5 || is_zero_vec(&w) {
            return Err(GeometryError::ZeroVector);
        }
        Ok(ConicRef {
            w: normalize_projective(&w),
        })
    }
}

/// Triples (i, j, k), i < j < k, ordering the Plücker coordinates of Λ³V.
pub fn triples() -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..5 {
        for j in i + 1..5 {
            for k in j + 1..5 {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// A 3-plane K ⊂ V with its Plücker vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace3 {
    k: RatMatrix,
    plucker: Vec<Rational>,
}

impl Subspace3 {
    pub fn new(k: RatMatrix) -> Result<Self, GeometryError> {
        if k.rows() != 3 || k.cols() != 5 {
            return Err(GeometryError::Rank(3));
        }
        let plucker: Vec<Rational> = triples()
            .into_iter()
            .map(|(i, j, l)| k.submatrix(&[0, 1, 2], &[i, j, l]).det())
            .collect();
        if is_zero_vec(&plucker) {
            return Err(GeometryError::Rank(3));
        }
        Ok(Subspace3 {
            k,
            plucker: normalize_projective(&plucker),
        })
    }

    pub fn from_vectors(vs: &[Vec<Rational>]) -> Result<Self, GeometryError> {
        Self::new(RatMatrix::from_rows(vs))
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.k
    }

    pub fn plucker(&self) -> &[Rational] {
        &self.plucker
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.k.vstack(&RatMatrix::from_rows(&[v.to_vec()])).rank() == 3
    }

    pub fn same_as(&self, o: &Subspace3) -> bool {
        self.plucker == o.plucker
    }
}

/// Line L_a: U(s,t) = span(σ(a), s·u1 + t·u2).
#[derive(Clone, Debug)]
pub struct LinePencil {
    pub sigma: Vec<Rational>,
    pub u1: Vec<Rational>,
    pub u2: Vec<Rational>,
}

impl LinePencil {
    pub fn point(&self, s: &Rational, t: &Rational) -> PointY {
        let m: Vec<Rational> = self
            .u1
            .iter()
            .zip(&self.u2)
            .map(|(a, b)| s * a + t * b)
            .collect();
        PointY::from_vectors(&self.sigma, &m).expect("pencil point has rank 2")
    }

    pub fn moving(&self) -> PolyVec {
        PolyVec::linear(&self.u1, &self.u2)
    }

    /// Plücker coordinates of σ∧(s·u1 + t·u2), linear in (s, t).
    pub fn plucker_forms(&self) -> Vec<BinaryForm> {
        let a = Bivector::wedge(&self.sigma, &self.u1);
        let b = Bivector::wedge(&self.sigma, &self.u2);
        a.0.iter()
            .zip(&b.0)
            .map(|(x, y)| BinaryForm::linear(x.clone(), y.clone()))
            .collect()
    }
}

/// Lines through a point: the cubic on P(U_P) cutting σ(P(A)) ∩ P(U_P).
#[derive(Clone, Debug)]
pub struct LinesThroughPoint {
    pub u1: Vec<Rational>,
    pub u2: Vec<Rational>,
    pub cubic: BinaryForm,
    pub multiplicities: Vec<usize>,
}

impl LinesThroughPoint {
    pub fn total_multiplicity(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn distinct(&self) -> usize {
        self.multiplicities.len()
    }
}

#[derive(Clone, Debug)]
pub struct ConicForm {
    /// Basis of A^⊥ ∩ Λ²(ker w).
    pub plane: Vec<Bivector>,
    pub gram: RatMatrix,
    pub singular: bool,
}

impl ConicForm {
    pub fn bivector(&self, x: &[Rational]) -> Bivector {
        let mut b = Bivector::zero();
        for (c, p) in x.iter().zip(&self.plane) {
            b = b.add(&p.scale(c));
        }
        b
    }

    pub fn value(&self, x: &[Rational]) -> Rational {
        dot(x, &self.gram.mul_vec(x))
    }

    /// Coordinates of ω in the plane basis, if ω lies in the plane.
    pub fn coordinates(&self, w: &Bivector) -> Option<Vec<Rational>> {
        let m = RatMatrix::from_cols(&self.plane.iter().map(|b| b.0.clone()).collect::<Vec<_>>());
        m.solve(&w.0)
    }
}

/// Degree-2 parametrization of a smooth conic through a chosen rational point.
#[derive(Clone, Debug)]
pub struct ConicParam {
    pub w: ConicRef,
    pub form: ConicForm,
    /// Plane coordinates x(s,t), quadratic forms.
    pub coords: Vec<BinaryForm>,
}

impl ConicParam {
    pub fn bivector_forms(&self) -> Vec<BinaryForm> {
        let mut out = vec![BinaryForm::zero(2); 10];
        for (x, p) in self.coords.iter().zip(&self.form.plane) {
            for (k, o) in out.iter_mut().enumerate() {
                *o = o.add(&x.scale(&p.0[k]));
            }
        }
        out
    }

    pub fn point(&self, s: &Rational, t: &Rational) -> PointY {
        let x: Vec<Rational> = self.coords.iter().map(|c| c.eval(s, t)).collect();
        PointY::from_bivector(&self.form.bivector(&x)).expect("conic point is decomposable")
    }
}

#[derive(Clone, Debug)]
pub struct GeometryContext {
    pub v: Rep,
    pub a_basis: [RatMatrix; 3],
    /// sl₂ acting on A in the basis a1, a2, a3.
    pub a_rep: Rep,
    pub aperp_basis: Vec<Bivector>,
    /// Spans the kernel of S²A → Λ⁴V* (a quadratic form on A*).
    pub q: RatMatrix,
    /// Invariant symmetric form on A, q⁻¹.
    pub polarity: RatMatrix,
    pub y0: PointY,
    /// Equivariant isomorphism from S⁴W (monomial action) to V.
    pub j: RatMatrix,
}

/// The three listed forms 3e1∧e2 − e0∧e3, 2e1∧e3 − e0∧e4, 3e2∧e3 − e1∧e4.
pub fn standard_a_basis() -> [RatMatrix; 3] {
    let form = |terms: &[(i64, usize, usize)]| {
        let mut m = RatMatrix::zeros(5, 5);
        for &(c, i, j) in terms {
            m[(i, j)] += rat(c);
            m[(j, i)] -= rat(c);
        }
        m
    };
    [
        form(&[(3, 1, 2), (-1, 0, 3)]),
        form(&[(2, 1, 3), (-1, 0, 4)]),
        form(&[(3, 2, 3), (-1, 1, 4)]),
    ]
}

/// (a∧b) on the four basis vectors other than e_m, for m = 0..4.
pub fn wedge_forms(a: &RatMatrix, b: &RatMatrix) -> Vec<Rational> {
    (0..5)
        .map(|m| {
            let r: Vec<usize> = (0..5).filter(|&k| k != m).collect();
            let (i, j, k, l) = (r[0], r[1], r[2], r[3]);
            let half = |x: &RatMatrix, y: &RatMatrix| {
                &x[(i, j)] * &y[(k, l)] - &x[(i, k)] * &y[(j, l)] + &x[(i, l)] * &y[(j, k)]
            };
            half(a, b) + half(b, a)
        })
        .collect()
}

fn s2_pairs() -> [(usize, usize); 6] {
    [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (2, 2)]
}

impl GeometryContext {
    pub fn build() -> Result<Self, GeometryError> {
        Self::build_from(standard_a_basis())
    }

    /// Builds the context from a candidate basis of A, verifying every invariant.
    pub fn build_from(a_basis: [RatMatrix; 3]) -> Result<Self, GeometryError> {
        let s4 = Rep::sym_power_of_w(4);
        let v = s4.dual().with_labels(s4.labels().to_vec());

        if !a_basis
            .iter()
            .all(|a| a.rows() == 5 && a.is_antisymmetric())
        {
            return Err(GeometryError::Invariant("antisymmetry"));
        }
        if !a_basis.iter().all(|a| a.rank() == 4) {
            return Err(GeometryError::Invariant("rank-4"));
        }
        // a few fixed combinations; random ones are exercised by the test suites
        for c in [
            [1, 1, 0],
            [1, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [1, -2, 3],
            [2, 1, -1],
        ] {
            let m = combine(&a_basis, &c.map(rat));
            if m.rank() != 4 {
                return Err(GeometryError::Invariant("rank-4"));
            }
        }

        // sl₂-stability: Z·a = −(Zᵀa + aZ) for Z acting on V
        let span = RatMatrix::from_cols(
            &a_basis
                .iter()
                .map(|a| a.entries().to_vec())
                .collect::<Vec<_>>(),
        );
        let mut ops = Vec::new();
        for z in v.operators() {
            let mut cols = Vec::new();
            for a in &a_basis {
                let za = z.transpose().mul(a).add(&a.mul(z)).scale(&rat(-1));
                let c = span
                    .solve(za.entries())
                    .ok_or(GeometryError::Invariant("sl2-stability"))?;
                cols.push(c);
            }
            ops.push(RatMatrix::from_cols(&cols));
        }
        let a_rep = Rep::new(
            vec!["a1".into(), "a2".into(), "a3".into()],
            ops[0].clone(),
            ops[1].clone(),
            ops[2].clone(),
        )
        .map_err(|_| GeometryError::Invariant("sl2-stability"))?;

        // A^⊥ ⊂ Λ²V
        let pairing = RatMatrix::from_rows(
            &a_basis
                .iter()
                .map(|a| PAIRS.iter().map(|&(i, j)| a[(i, j)].clone()).collect())
                .collect::<Vec<_>>(),
        );
        let aperp_basis: Vec<Bivector> = pairing.kernel_basis().into_iter().map(Bivector).collect();
        if aperp_basis.len() != 7 {
            return Err(GeometryError::Invariant("dim A-perp = 7"));
        }

        // kernel of S²A → Λ⁴V*
        let cols: Vec<Vec<Rational>> = s2_pairs()
            .iter()
            .map(|&(i, j)| wedge_forms(&a_basis[i], &a_basis[j]))
            .collect();
        let ker = RatMatrix::from_cols(&cols).kernel_basis();
        if ker.len() != 1 {
            return Err(GeometryError::Invariant("kernel of S2A -> V is a line"));
        }
        let c = normalize_projective(&ker[0]);
        let mut q = RatMatrix::zeros(3, 3);
        for (k, &(i, j)) in s2_pairs().iter().enumerate() {
            if i == j {
                q[(i, i)] = c[k].clone();
            } else {
                q[(i, j)] = &c[k] / rat(2);
                q[(j, i)] = &c[k] / rat(2);
            }
        }
        let polarity = q
            .inverse()
            .ok_or(GeometryError::Invariant("q nondegenerate"))?;

        let y0 = PointY::from_vectors(
            &[rat(1), rat(0), rat(0), rat(0), rat(-1)],
            &[rat(0), rat(0), rat(1), rat(0), rat(0)],
        )
        .map_err(|_| GeometryError::Invariant("y0 decomposable"))?;

        let hom = v.tensor(&s4.dual()).invariant_vectors();
        if hom.len() != 1 {
            return Err(GeometryError::Invariant("V and S4W are isomorphic"));
        }
        let j = RatMatrix::new(5, 5, normalize_projective(&hom[0]));

        let ctx = GeometryContext {
            v,
            a_basis,
            a_rep,
            aperp_basis,
            q,
            polarity,
            y0,
            j,
        };
        if !ctx.is_on_y(&ctx.y0.plucker()) {
            return Err(GeometryError::Invariant("y0 on Y"));
        }
        Ok(ctx)
    }

    pub fn form(&self, a: &[Rational]) -> RatMatrix {
        combine(&self.a_basis, a)
    }

    /// The 3 forms a_i(u, ·) as rows.
    pub fn contraction(&self, u: &[Rational]) -> RatMatrix {
        let row = RatMatrix::from_rows(&[u.to_vec()]);
        RatMatrix::from_rows(
            &self
                .a_basis
                .iter()
                .map(|a| row.mul(a).row(0))
                .collect::<Vec<_>>(),
        )
    }

    pub fn sigma(&self, a: &LineRef) -> Vec<Rational> {
        let k = self.form(&a.a).kernel_basis();
        assert_eq!(k.len(), 1, "nonzero forms in A have rank 4");
        normalize_projective(&k[0])
    }

    pub fn kappa(&self, a: &LineRef) -> Subspace3 {
        let k = self.contraction(&self.sigma(a)).kernel_basis();
        assert_eq!(k.len(), 3, "kappa is 3-dimensional");
        Subspace3::from_vectors(&k).expect("kernel basis is independent")
    }

    pub fn is_on_y(&self, w: &Bivector) -> bool {
        !w.is_zero() && w.is_decomposable() && self.a_basis.iter().all(|a| w.pair(a).is_zero())
    }

    pub fn point_on_y(&self, p: &PointY) -> bool {
        self.is_on_y(&p.plucker())
    }

    pub fn line_points(&self, a: &LineRef) -> LinePencil {
        let sigma = self.sigma(a);
        let k = self.kappa(a);
        let mut chosen = RatMatrix::from_rows(&[sigma.clone()]);
        let mut extra = Vec::new();
        for r in k.basis().to_rows() {
            let cand = chosen.vstack(&RatMatrix::from_rows(&[r.clone()]));
            if cand.rank() == chosen.rows() + 1 {
                chosen = cand;
                extra.push(r);
            }
        }
        LinePencil {
            sigma,
            u1: extra[0].clone(),
            u2: extra[1].clone(),
        }
    }

    pub fn bilinear_polarity(&self, a: &[Rational], b: &[Rational]) -> Rational {
        dot(a, &self.polarity.mul_vec(b))
    }

    pub fn lines_intersect(&self, a1: &LineRef, a2: &LineRef) -> bool {
        self.bilinear_polarity(&a1.a, &a2.a).is_zero()
    }

    pub fn line_is_special(&self, a: &LineRef) -> bool {
        self.bilinear_polarity(&a.a, &a.a).is_zero()
    }

    /// Line through two points of a common line of Y: the a killing both.
    pub fn line_through(&self, sigma: &[Rational]) -> Option<LineRef> {
        let m = self.contraction(sigma).transpose();
        let k = m.kernel_basis();
        (k.len() == 1).then(|| LineRef::new(k[0].clone()).unwrap())
    }

    pub fn lines_through_point(&self, p: &PointY) -> LinesThroughPoint {
        let u1 = p.basis().row(0);
        let u2 = p.basis().row(1);
        let b = p.complement();
        let mut m = Vec::new();
        for a in &self.a_basis {
            let mut row = Vec::new();
            for bj in &b {
                let c1 = dot(&u1, &a.mul_vec(bj));
                let c2 = dot(&u2, &a.mul_vec(bj));
                row.push(BinaryForm::linear(c1, c2).to_multipoly());
            }
            m.push(row);
        }
        let d = determinant_of_poly_matrix(&m);
        let cubic = if d.is_zero() {
            BinaryForm::zero(3)
        } else {
            BinaryForm::from_multipoly(&d, 3)
        };
        let multiplicities = cubic.root_multiplicities();
        LinesThroughPoint {
            u1,
            u2,
            cubic,
            multiplicities,
        }
    }

    /// The line through P at the point s·u1 + t·u2 of P(U_P), if that point is some σ(a).
    pub fn line_at(&self, p: &PointY, s: &Rational, t: &Rational) -> Option<LineRef> {
        let u: Vec<Rational> = p
            .basis()
            .row(0)
            .iter()
            .zip(p.basis().row(1))
            .map(|(x, y)| s * x + t * y)
            .collect();
        self.line_through(&u)
    }

    pub fn conics_through_point(&self, p: &PointY) -> RatMatrix {
        RatMatrix::from_rows(&p.annihilator())
    }

    pub fn line_meets_conic(&self, a: &LineRef, w: &ConicRef) -> bool {
        dot(&w.w, &self.sigma(a)).is_zero()
    }

    pub fn conic_contains_line(&self, a: &LineRef, w: &ConicRef) -> bool {
        self.kappa(a)
            .basis()
            .mul_vec(&w.w)
            .iter()
            .all(|x| x.is_zero())
    }

    /// The unique conic containing two distinct intersecting lines.
    pub fn conic_through_lines(&self, a1: &LineRef, a2: &LineRef) -> Option<ConicRef> {
        let k = self.kappa(a1).basis().vstack(self.kappa(a2).basis());
        let ann = k.kernel_basis();
        (ann.len() == 1).then(|| ConicRef::new(ann[0].clone()).unwrap())
    }

    pub fn conic_form(&self, w: &ConicRef) -> Result<ConicForm, GeometryError> {
        let kw = RatMatrix::from_rows(&[w.w.clone()]).kernel_basis();
        let idx: Vec<(usize, usize)> = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let gens: Vec<Bivector> = idx
            .iter()
            .map(|&(i, j)| Bivector::wedge(&kw[i], &kw[j]))
            .collect();
        let cond = RatMatrix::from_rows(
            &self
                .a_basis
                .iter()
                .map(|a| gens.iter().map(|g| g.pair(a)).collect())
                .collect::<Vec<_>>(),
        );
        let sol = cond.kernel_basis();
        if sol.len() != 3 {
            return Err(GeometryError::Dimension {
                what: "A-perp ∩ Λ²(ker w)",
                got: sol.len(),
            });
        }
        // ω∧ω on Λ²(ker w) in the basis k_i∧k_j: c01c23 − c02c13 + c03c12
        let pf = |c: &[Rational], d: &[Rational]| {
            (&c[0] * &d[5] + &c[5] * &d[0] - &c[1] * &d[4] - &c[4] * &d[1]
                + &c[2] * &d[3]
                + &c[3] * &d[2])
                / rat(2)
        };
        let gram = RatMatrix::from_fn(3, 3, |i, j| pf(&sol[i], &sol[j]));
        let plane = sol
            .iter()
            .map(|c| {
                let mut b = Bivector::zero();
                for (x, g) in c.iter().zip(&gens) {
                    b = b.add(&g.scale(x));
                }
                b
            })
            .collect();
        let singular = gram.det().is_zero();
        Ok(ConicForm {
            plane,
            gram,
            singular,
        })
    }

    pub fn point_on_conic(&self, w: &ConicRef, p: &PointY) -> bool {
        self.point_on_y(p) && p.basis().mul_vec(&w.w).iter().all(|x| x.is_zero())
    }

    /// Bounded-height search for a rational point of C_w.
    pub fn find_rational_point(&self, w: &ConicRef, height: i64) -> Option<PointY> {
        let f = self.conic_form(w).ok()?;
        let x = rational_zero_of_ternary(&f.gram, height)?;
        PointY::from_bivector(&f.bivector(&x)).ok()
    }

    pub fn smooth_conic_parametrization(
        &self,
        w: &ConicRef,
        p: &PointY,
    ) -> Result<ConicParam, GeometryError> {
        let form = self.conic_form(w)?;
        if form.singular {
            return Err(GeometryError::SingularConic);
        }
        if !self.point_on_conic(w, p) {
            return Err(GeometryError::NotOnConic);
        }
        let x0 = form
            .coordinates(&p.plucker())
            .ok_or(GeometryError::NotOnConic)?;
        let g = &form.gram;
        let gp = g.mul_vec(&x0);
        // r1 tangent at x0 (B(x0, r1) = 0, r1 ∉ ⟨x0⟩), r2 with B(x0, r2) ≠ 0
        let tangent = RatMatrix::from_rows(&[gp.clone()]).kernel_basis();
        let r1 = tangent
            .iter()
            .find(|r| RatMatrix::from_rows(&[x0.clone(), (*r).clone()]).rank() == 2)
            .cloned()
            .ok_or(GeometryError::SingularConic)?;
        let r2 = (0..3)
            .map(|i| (0..3).map(|k| rat((k == i) as i64)).collect::<Vec<_>>())
            .find(|e| !dot(&gp, e).is_zero())
            .ok_or(GeometryError::SingularConic)?;
        // x(s,t) = Q(r,r)·x0 − 2B(x0,r)·r, r = s·r1 + t·r2
        let r: Vec<BinaryForm> = r1
            .iter()
            .zip(&r2)
            .map(|(a, b)| BinaryForm::linear(a.clone(), b.clone()))
            .collect();
        let mut qrr = BinaryForm::zero(2);
        for i in 0..3 {
            for j in 0..3 {
                qrr = qrr.add(&r[i].mul(&r[j]).scale(&g[(i, j)]));
            }
        }
        let mut bpr = BinaryForm::zero(1);
        for i in 0..3 {
            bpr = bpr.add(&r[i].scale(&gp[i]));
        }
        let coords: Vec<BinaryForm> = (0..3)
            .map(|i| qrr.scale(&x0[i]).add(&bpr.mul(&r[i]).scale(&rat(-2))))
            .collect();
        Ok(ConicParam {
            w: w.clone(),
            form,
            coords,
        })
    }

    /// ρ(g)·y0 for g = [[1,s],[0,1]]·diag(t, 1/t)·[[1,0],[u,1]].
    pub fn orbit_point(&self, s: &Rational, t: &Rational, u: &Rational) -> PointY {
        let g = self.v.group_element(s, t, u);
        PointY::new(self.y0.basis().mul(&g.transpose())).expect("group elements are invertible")
    }

    /// Frames of the closed-orbit curve: J applied to (sx+ty)³·x and (sx+ty)³·y.
    pub fn closed_orbit_frames(&self) -> [PolyVec; 2] {
        let binom = [1, 3, 3, 1];
        let mk = |shift: usize| {
            let mut vs = vec![vec![Rational::zero(); 5]; 4];
            for k in 0..4 {
                vs[k][k + shift] = rat(binom[k]);
            }
            PolyVec::from_coeff_vectors(&vs).apply(&self.j)
        };
        [mk(0), mk(1)]
    }

    pub fn closed_orbit_point(&self, s: &Rational, t: &Rational) -> PointY {
        let [f, g] = self.closed_orbit_frames();
        PointY::from_vectors(&f.eval(s, t), &g.eval(s, t))
            .expect("closed orbit frames are independent")
    }
}

pub fn combine(basis: &[RatMatrix; 3], c: &[Rational]) -> RatMatrix {
    let mut m = RatMatrix::zeros(5, 5);
    for (x, a) in c.iter().zip(basis) {
        if !x.is_zero() {
            m = m.add(&a.scale(x));
        }
    }
    m
}

pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| Rational::new(n, d))
}

/// Nonzero rational x with xᵀGx = 0, searching two coordinates in [−h, h].
pub fn rational_zero_of_ternary(g: &RatMatrix, height: i64) -> Option<Vec<Rational>> {
    for k in 0..3 {
        if g[(k, k)].is_zero() {
            let mut e = vec![Rational::zero(); 3];
            e[k] = Rational::one();
            return Some(e);
        }
    }
    for h in 1..=height.max(1) {
        for k in 0..3 {
            let (i, j) = match k {
                0 => (1, 2),
                1 => (0, 2),
                _ => (0, 1),
            };
            for xi in -h..=h {
                for xj in -h..=h {
                    if xi.abs().max(xj.abs()) != h {
                        continue;
                    }
                    let (xi, xj) = (rat(xi), rat(xj));
                    let a = g[(k, k)].clone();
                    let b = rat(2) * (&g[(k, i)] * &xi + &g[(k, j)] * &xj);
                    let c = &g[(i, i)] * &xi * &xi
                        + rat(2) * &g[(i, j)] * &xi * &xj
                        + &g[(j, j)] * &xj * &xj;
                    let disc = &b * &b - rat(4) * &a * &c;
                    if let Some(r) = rational_sqrt(&disc) {
                        let xk = (-&b + r) / (rat(2) * &a);
                        let mut x = vec![Rational::zero(); 3];
                        x[i] = xi;
                        x[j] = xj;
                        x[k] = xk;
                        return Some(x);
                    }
                }
            }
        }
    }
    None
}

/// gcd degree of the 2×2 minors of a pair of frames; 0 means independent everywhere.
pub fn frames_degeneracy(frames: &[PolyVec]) -> usize {
    common_zero_degree(&crate::exact::maximal_minors(frames))
}

pub fn projective_eq(a: &[Rational], b: &[Rational]) -> bool {
    proportional(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::frac;

    fn ctx() -> GeometryContext {
        GeometryContext::build().unwrap()
    }

    fn line(a: [i64; 3]) -> LineRef {
        LineRef::new(a.iter().map(|&x| rat(x)).collect()).unwrap()
    }

    #[test]
    fn basis_entries() {
        let c = ctx();
        for a in &c.a_basis {
            assert!(a
                .entries()
                .iter()
                .all(|x| [-3, -2, -1, 0, 1, 2, 3].iter().any(|k| *x == rat(*k))));
            assert_eq!(a.rank(), 4);
        }
        assert_eq!(c.aperp_basis.len(), 7);
        assert!(!c.q.det().is_zero());
    }

    #[test]
    fn sigma_examples() {
        let c = ctx();
        assert_eq!(c.sigma(&line([0, 1, 0])), unit(2));
        assert_eq!(c.sigma(&line([1, 0, 0])), unit(4));
        assert_eq!(c.sigma(&line([0, 0, 1])), unit(0));
        assert_eq!(c.sigma(&line([0, 2, 0])), c.sigma(&line([0, 1, 0])));
    }

    #[test]
    fn kappa_example() {
        let c = ctx();
        let k = c.kappa(&line([0, 1, 0]));
        let expected = Subspace3::from_vectors(&[unit(0), unit(2), unit(4)]).unwrap();
        assert!(k.same_as(&expected));
    }

    #[test]
    fn on_y_examples() {
        let c = ctx();
        assert!(c.point_on_y(&c.y0));
        assert!(c.is_on_y(&Bivector::wedge(&unit(0), &unit(1))));
        let w = Bivector::wedge(&unit(0), &unit(4))
            .add(&Bivector::wedge(&unit(1), &unit(3)).scale(&rat(3)));
        assert!(!c.is_on_y(&w));
    }

    #[test]
    fn line_endpoints() {
        let c = ctx();
        let p = c.line_points(&line([0, 1, 0]));
        for (s, t) in [(1, 0), (0, 1), (2, 3)] {
            assert!(c.point_on_y(&p.point(&rat(s), &rat(t))));
        }
    }

    #[test]
    fn special_lines() {
        let c = ctx();
        assert!(c.line_is_special(&line([1, 0, 0])));
        assert!(c.line_is_special(&line([0, 0, 1])));
        assert!(!c.line_is_special(&line([0, 1, 0])));
        assert!(!c.lines_intersect(&line([1, 0, 0]), &line([0, 0, 1])));
    }

    #[test]
    fn meets_and_contains() {
        let c = ctx();
        let a = line([1, 0, 0]); // σ = y⁴
        assert!(c.line_meets_conic(&a, &ConicRef::new(unit(0)).unwrap()));
        assert!(!c.line_meets_conic(&a, &ConicRef::new(unit(4)).unwrap()));
        let b = line([0, 1, 0]); // κ = ⟨x⁴, x²y², y⁴⟩
        assert!(c.conic_contains_line(&b, &ConicRef::new(unit(1)).unwrap()));
        assert!(!c.conic_contains_line(&b, &ConicRef::new(unit(0)).unwrap()));
        assert!(
            c.conic_form(&ConicRef::new(unit(1)).unwrap())
                .unwrap()
                .singular
        );
    }

    #[test]
    fn open_and_closed_orbit_counts() {
        let c = ctx();
        assert_eq!(c.lines_through_point(&c.y0).multiplicities, vec![1, 1, 1]);
        let p = c.closed_orbit_point(&rat(1), &rat(0));
        assert!(c.point_on_y(&p));
        assert_eq!(c.lines_through_point(&p).multiplicities, vec![3]);
        let p = c.closed_orbit_point(&rat(2), &frac(-1, 3));
        assert_eq!(c.lines_through_point(&p).multiplicities, vec![3]);
    }

    #[test]
    fn equivariant_map_intertwines() {
        let c = ctx();
        let s4 = Rep::sym_power_of_w(4);
        for (z, zs) in c.v.operators().iter().zip(s4.operators()) {
            assert_eq!(z.mul(&c.j), c.j.mul(zs));
        }
    }

    #[test]
    fn conic_parametrization_through_seed() {
        let c = ctx();
        let p = c.orbit_point(&rat(1), &rat(2), &frac(1, 3));
        let w = ConicRef::new(p.annihilator()[0].clone()).unwrap();
        let f = c.conic_form(&w).unwrap();
        assert!(!f.singular);
        let par = c.smooth_conic_parametrization(&w, &p).unwrap();
        let seed = par.point(&rat(1), &rat(0)).plucker();
        assert!(projective_eq(&seed.0, &p.plucker().0));
        for (s, t) in [(0, 1), (1, 1), (3, -2)] {
            assert!(c.point_on_conic(&w, &par.point(&rat(s), &rat(t))));
        }
    }
}

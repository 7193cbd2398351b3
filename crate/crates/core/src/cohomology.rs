//! Cohomology of homogeneous bundles on Gr(2,5) and their restrictions to Y,
//! and the Chow ring of Y.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::exact::{frac, rat, rat_str, RatMatrix, Rational};

/// Σ^α U* ⊗ Σ^β (V/U)* on Gr(2,V).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GLWeight {
    pub alpha: [i64; 2],
    pub beta: [i64; 3],
}

impl GLWeight {
    pub fn new(alpha: [i64; 2], beta: [i64; 3]) -> Self {
        assert!(alpha[0] >= alpha[1], "alpha must be non-increasing");
        assert!(
            beta[0] >= beta[1] && beta[1] >= beta[2],
            "beta must be non-increasing"
        );
        GLWeight { alpha, beta }
    }

    pub fn trivial() -> Self {
        Self::new([0, 0], [0, 0, 0])
    }

    pub fn u() -> Self {
        Self::new([0, -1], [0, 0, 0])
    }

    pub fn u_dual() -> Self {
        Self::new([1, 0], [0, 0, 0])
    }

    /// V/U.
    pub fn quotient() -> Self {
        Self::new([0, 0], [0, 0, -1])
    }

    /// U^⊥ = (V/U)*.
    pub fn u_perp() -> Self {
        Self::new([0, 0], [1, 0, 0])
    }

    /// U* ⊗ U^⊥ = Hom(U, U^⊥).
    pub fn hom_u_uperp() -> Self {
        Self::new([1, 0], [1, 0, 0])
    }

    pub fn dual(&self) -> Self {
        Self::new(
            [-self.alpha[1], -self.alpha[0]],
            [-self.beta[2], -self.beta[1], -self.beta[0]],
        )
    }

    /// Concatenated GL₅ weight after twisting by O(t) = det U*^t.
    pub fn gl5(&self, twist: i64) -> [i64; 5] {
        [
            self.alpha[0] + twist,
            self.alpha[1] + twist,
            self.beta[0],
            self.beta[1],
            self.beta[2],
        ]
    }
}

/// Cohomological degree ↦ dimension (zero entries omitted).
pub type CohTable = BTreeMap<usize, u64>;

const RHO: [i64; 5] = [5, 4, 3, 2, 1];

fn weyl_dimension(l: &[i64; 5]) -> u64 {
    // l strictly decreasing (weight + ρ)
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for i in 0..5 {
        for j in i + 1..5 {
            num *= (l[i] - l[j]) as i128;
            den *= (j - i) as i128;
        }
    }
    (num / den) as u64
}

/// Borel–Bott–Weil on Gr(2,5).
pub fn bbw_gr25(weight: &GLWeight, twist: i64) -> CohTable {
    let w = weight.gl5(twist);
    let mut l = [0i64; 5];
    for i in 0..5 {
        l[i] = w[i] + RHO[i];
    }
    let distinct: BTreeSet<i64> = l.iter().copied().collect();
    let mut out = CohTable::new();
    if distinct.len() < 5 {
        return out;
    }
    let mut inversions = 0;
    for i in 0..5 {
        for j in i + 1..5 {
            if l[i] < l[j] {
                inversions += 1;
            }
        }
    }
    let mut sorted = l;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    out.insert(inversions, weyl_dimension(&sorted));
    out
}

pub fn euler_char_gr(weight: &GLWeight, twist: i64) -> i64 {
    bbw_gr25(weight, twist)
        .iter()
        .map(|(d, n)| if d % 2 == 0 { *n as i64 } else { -(*n as i64) })
        .sum()
}

fn binom3(p: usize) -> i64 {
    [1, 3, 3, 1][p]
}

/// Koszul E₁ contributions: (p, q, dim) with total degree q − p.
pub fn koszul_terms(weight: &GLWeight, twist: i64) -> Vec<(usize, usize, u64)> {
    let mut out = Vec::new();
    for p in 0..=3usize {
        for (q, n) in bbw_gr25(weight, twist - p as i64) {
            out.push((p, q, n * binom3(p) as u64));
        }
    }
    out
}

/// χ(Y, F(t)) from the Koszul resolution of O_Y by Λᵖ(A ⊗ O(−1)).
pub fn euler_char_on_y(weight: &GLWeight, twist: i64) -> i64 {
    (0..=3usize).map(|p| if p % 2 == 0 { 1 } else { -1 } * binom3(p) * euler_char_gr(weight, twist - p as i64)).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum HOnY {
    Determined(CohTable),
    Indeterminate,
}

impl HOnY {
    pub fn table(&self) -> Option<&CohTable> {
        match self {
            HOnY::Determined(t) => Some(t),
            HOnY::Indeterminate => None,
        }
    }
}

/// Cohomology on Y when the Koszul spectral sequence is forced: if the E₁ terms
/// of total degree in [0, 3] all share one degree k₀, then H^k₀ = (−1)^k₀ χ and
/// everything else vanishes (Y is a threefold).
pub fn h_on_y(weight: &GLWeight, twist: i64) -> HOnY {
    let degrees: BTreeSet<i64> = koszul_terms(weight, twist)
        .iter()
        .map(|&(p, q, _)| q as i64 - p as i64)
        .filter(|k| (0..=3).contains(k))
        .collect();
    let mut t = CohTable::new();
    match degrees.len() {
        0 => HOnY::Determined(t),
        1 => {
            let k0 = *degrees.iter().next().unwrap();
            let chi = euler_char_on_y(weight, twist);
            let v = if k0 % 2 == 0 { chi } else { -chi };
            if v < 0 {
                return HOnY::Indeterminate;
            }
            if v > 0 {
                t.insert(k0 as usize, v as u64);
            }
            HOnY::Determined(t)
        }
        _ => HOnY::Indeterminate,
    }
}

/// Coefficients (constant term first) of the cubic n ↦ χ(O_Y(n)), by interpolation.
pub fn hilbert_polynomial() -> Vec<Rational> {
    let pts: Vec<(i64, i64)> = (0..4)
        .map(|n| (n, euler_char_on_y(&GLWeight::trivial(), n)))
        .collect();
    let m = RatMatrix::from_fn(4, 4, |i, j| rat(pts[i].0.pow(j as u32)));
    let b: Vec<Rational> = pts.iter().map(|p| rat(p.1)).collect();
    m.solve(&b).expect("Vandermonde system is invertible")
}

/// Class a + bH + cL + dP in the Chow ring of Y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChowClass(pub [Rational; 4]);

impl ChowClass {
    pub fn new(c: [Rational; 4]) -> Self {
        ChowClass(c)
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        ChowClass(c.map(rat))
    }

    pub fn zero() -> Self {
        Self::from_i64([0, 0, 0, 0])
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    pub fn h() -> Self {
        Self::from_i64([0, 1, 0, 0])
    }

    pub fn l() -> Self {
        Self::from_i64([0, 0, 1, 0])
    }

    pub fn p() -> Self {
        Self::from_i64([0, 0, 0, 1])
    }

    pub fn add(&self, o: &ChowClass) -> ChowClass {
        ChowClass(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }

    pub fn sub(&self, o: &ChowClass) -> ChowClass {
        ChowClass(std::array::from_fn(|i| &self.0[i] - &o.0[i]))
    }

    pub fn scale(&self, c: &Rational) -> ChowClass {
        ChowClass(std::array::from_fn(|i| &self.0[i] * c))
    }

    /// H² = 5L, HL = P, L² = 0, HP = 0.
    pub fn mul(&self, o: &ChowClass) -> ChowClass {
        let [a0, a1, a2, a3] = &self.0;
        let [b0, b1, b2, b3] = &o.0;
        ChowClass([
            a0 * b0,
            a0 * b1 + a1 * b0,
            a0 * b2 + a2 * b0 + rat(5) * a1 * b1,
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1,
        ])
    }

    /// Sign (−1)^i on the codimension-i part.
    pub fn dual(&self) -> ChowClass {
        let [a0, a1, a2, a3] = &self.0;
        ChowClass([a0.clone(), -a1.clone(), a2.clone(), -a3.clone()])
    }

    pub fn part(&self, i: usize) -> ChowClass {
        let mut c = Self::zero();
        c.0[i] = self.0[i].clone();
        c
    }

    /// Inverse of a class with constant term 1.
    pub fn inverse_unipotent(&self) -> ChowClass {
        assert_eq!(self.0[0], rat(1), "constant term must be 1");
        let x = self.sub(&Self::one()).scale(&rat(-1));
        let x2 = x.mul(&x);
        Self::one().add(&x).add(&x2).add(&x2.mul(&x))
    }

    /// Chern character of a rank-r bundle with total Chern class c.
    pub fn ch_from_chern(rank: i64, c: &ChowClass) -> ChowClass {
        let c1 = c.part(1);
        let c2 = c.part(2);
        let c3 = c.part(3);
        let p2 = c1.mul(&c1).sub(&c2.scale(&rat(2)));
        let p3 = c1
            .mul(&c1)
            .mul(&c1)
            .sub(&c1.mul(&c2).scale(&rat(3)))
            .add(&c3.scale(&rat(3)));
        Self::from_i64([rank, 0, 0, 0])
            .add(&c1)
            .add(&p2.scale(&frac(1, 2)))
            .add(&p3.scale(&frac(1, 6)))
    }

    pub fn to_strings(&self) -> [String; 4] {
        std::array::from_fn(|i| rat_str(&self.0[i]))
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ChernReport {
    pub ch_u: [String; 4],
    pub ch_quotient: [String; 4],
    pub ch_u_perp: [String; 4],
    pub c_u_perp: [String; 4],
    pub h_cubed: [String; 4],
    pub checks: BTreeMap<String, bool>,
    pub all_ok: bool,
}

/// Chern-character identities for U, V/U, U^⊥ and for the monad of charge n.
pub fn chern_table_check(n: i64) -> ChernReport {
    let c_u = ChowClass::from_i64([1, -1, 2, 0]);
    let ch_u = ChowClass::ch_from_chern(2, &c_u);
    let c_q = c_u.inverse_unipotent();
    let ch_q = ChowClass::ch_from_chern(3, &c_q);
    let ch_uperp = ch_q.dual();
    let c_uperp = c_q.dual();
    let ch_udual = ch_u.dual();
    let five = ChowClass::from_i64([5, 0, 0, 0]);
    let h = ChowClass::h();
    let h3 = h.mul(&h).mul(&h);

    // E = cohomology of H⊗U → H*⊗U^⊥ → H'⊗O with dim H' = n − 2
    let ch_monad = ch_uperp
        .scale(&rat(n))
        .sub(&ch_u.scale(&rat(n)))
        .sub(&ChowClass::from_i64([n - 2, 0, 0, 0]));
    let ch_e = ChowClass::ch_from_chern(2, &ChowClass::from_i64([1, 0, n, 0]));

    let mut checks = BTreeMap::new();
    checks.insert(
        "ch(U) = 2 - H + L/2 + P/6".into(),
        ch_u == ChowClass::new([rat(2), rat(-1), frac(1, 2), frac(1, 6)]),
    );
    checks.insert("ch(U) + ch(V/U) = 5".into(), ch_u.add(&ch_q) == five);
    checks.insert(
        "ch(U^perp) + ch(U*) = 5".into(),
        ch_uperp.add(&ch_udual) == five,
    );
    checks.insert("c(U) c(V/U) = 1".into(), c_u.mul(&c_q) == ChowClass::one());
    checks.insert(
        "c(U^perp) = 1 - H + 3L - P".into(),
        c_uperp == ChowClass::from_i64([1, -1, 3, -1]),
    );
    checks.insert("H^3 = 5P".into(), h3 == ChowClass::from_i64([0, 0, 0, 5]));
    checks.insert(
        "ch(E) = 2 - nL".into(),
        ch_e == ChowClass::from_i64([2, 0, -n, 0]),
    );
    checks.insert("ch(monad) = ch(E)".into(), ch_monad == ch_e);
    let all_ok = checks.values().all(|&b| b);
    ChernReport {
        ch_u: ch_u.to_strings(),
        ch_quotient: ch_q.to_strings(),
        ch_u_perp: ch_uperp.to_strings(),
        c_u_perp: c_uperp.to_strings(),
        h_cubed: h3.to_strings(),
        checks,
        all_ok,
    }
}

/// Self-calibration of the weight conventions against O, O(1), U*, ω.
pub fn bbw_calibrated() -> bool {
    let t = GLWeight::trivial();
    bbw_gr25(&t, 0) == CohTable::from([(0, 1)])
        && bbw_gr25(&t, 1) == CohTable::from([(0, 10)])
        && bbw_gr25(&GLWeight::u_dual(), 0) == CohTable::from([(0, 5)])
        && bbw_gr25(&t, -5) == CohTable::from([(6, 1)])
}

pub fn is_zero_table(t: &CohTable) -> bool {
    t.values().all(|v| *v == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(t: &[(usize, u64)]) -> HOnY {
        HOnY::Determined(t.iter().copied().collect())
    }

    #[test]
    fn bbw_examples() {
        assert!(bbw_calibrated());
        assert_eq!(bbw_gr25(&GLWeight::quotient(), 0), CohTable::from([(0, 5)]));
        assert!(bbw_gr25(&GLWeight::u_perp(), 0).is_empty());
        assert!(bbw_gr25(&GLWeight::u(), 0).is_empty());
    }

    #[test]
    fn table_on_y() {
        assert_eq!(h_on_y(&GLWeight::hom_u_uperp(), 0), det(&[(0, 3)]));
        assert_eq!(h_on_y(&GLWeight::trivial(), -1), det(&[]));
        assert_eq!(h_on_y(&GLWeight::quotient(), 0), det(&[(0, 5)]));
        assert_eq!(h_on_y(&GLWeight::u(), 0), det(&[]));
        assert_eq!(h_on_y(&GLWeight::u_perp(), 0), det(&[]));
        assert_eq!(h_on_y(&GLWeight::trivial(), 1), det(&[(0, 7)]));
        assert_eq!(h_on_y(&GLWeight::trivial(), 0), det(&[(0, 1)]));
    }

    #[test]
    fn euler_characteristics() {
        assert_eq!(euler_char_on_y(&GLWeight::trivial(), 0), 1);
        assert_eq!(euler_char_on_y(&GLWeight::trivial(), 1), 7);
        assert_eq!(euler_char_on_y(&GLWeight::u(), 0), 0);
        assert_eq!(
            hilbert_polynomial(),
            vec![rat(1), frac(8, 3), frac(5, 2), frac(5, 6)]
        );
    }

    #[test]
    fn chern_table() {
        for n in [2, 3] {
            let r = chern_table_check(n);
            assert!(r.all_ok, "{:?}", r.checks);
        }
    }
}

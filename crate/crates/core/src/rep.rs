//! Finite-dimensional sl₂ representations in explicit bases.

use std::collections::BTreeMap;

use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::exact::{rat, RatMatrix, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepError {
    #[error("bracket relation {0} fails")]
    Bracket(&'static str),
    #[error("operator shapes do not match dimension {0}")]
    Shape(usize),
    #[error("H has a non-integral or non-semisimple weight structure")]
    Weights,
    #[error("negative multiplicity for highest weight {0}: not a representation")]
    NegativeMultiplicity(i64),
}

/// Basis labels plus the matrices of X, Y, H acting on column vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rep {
    labels: Vec<String>,
    x: RatMatrix,
    y: RatMatrix,
    h: RatMatrix,
}

/// Highest weight n ↦ number of copies of SⁿW.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct RepDecomposition {
    pub multiplicities: BTreeMap<u32, usize>,
}

impl RepDecomposition {
    pub fn dimension(&self) -> usize {
        self.multiplicities
            .iter()
            .map(|(n, m)| (*n as usize + 1) * m)
            .sum()
    }

    /// Highest weights with repetition, ascending.
    pub fn weights(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for (n, m) in &self.multiplicities {
            out.extend(std::iter::repeat(*n).take(*m));
        }
        out
    }
}

impl Rep {
    pub fn new(
        labels: Vec<String>,
        x: RatMatrix,
        y: RatMatrix,
        h: RatMatrix,
    ) -> Result<Rep, RepError> {
        let d = labels.len();
        for m in [&x, &y, &h] {
            if m.rows() != d || m.cols() != d {
                return Err(RepError::Shape(d));
            }
        }
        let r = Rep { labels, x, y, h };
        r.check_brackets()?;
        Ok(r)
    }

    pub fn check_brackets(&self) -> Result<(), RepError> {
        if self.x.commutator(&self.y) != self.h {
            return Err(RepError::Bracket("[X,Y] = H"));
        }
        if self.h.commutator(&self.x) != self.x.scale(&rat(2)) {
            return Err(RepError::Bracket("[H,X] = 2X"));
        }
        if self.h.commutator(&self.y) != self.y.scale(&rat(-2)) {
            return Err(RepError::Bracket("[H,Y] = -2Y"));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn x(&self) -> &RatMatrix {
        &self.x
    }

    pub fn y(&self) -> &RatMatrix {
        &self.y
    }

    pub fn h(&self) -> &RatMatrix {
        &self.h
    }

    pub fn operators(&self) -> [&RatMatrix; 3] {
        [&self.x, &self.y, &self.h]
    }

    /// Basis x^(n−i) y^i, X = x∂_y, Y = y∂_x, H = x∂_x − y∂_y.
    pub fn sym_power_of_w(n: usize) -> Rep {
        let d = n + 1;
        let mut x = RatMatrix::zeros(d, d);
        let mut y = RatMatrix::zeros(d, d);
        let mut h = RatMatrix::zeros(d, d);
        for i in 0..d {
            if i > 0 {
                x[(i - 1, i)] = rat(i as i64);
            }
            if i < n {
                y[(i + 1, i)] = rat((n - i) as i64);
            }
            h[(i, i)] = rat(n as i64 - 2 * i as i64);
        }
        let labels = (0..d).map(|i| monomial_label(n - i, i)).collect();
        Rep { labels, x, y, h }
    }

    pub fn trivial() -> Rep {
        Rep::sym_power_of_w(0)
    }

    /// Z acts by −Zᵀ.
    pub fn dual(&self) -> Rep {
        let neg_t = |m: &RatMatrix| m.transpose().scale(&rat(-1));
        Rep {
            labels: self.labels.iter().map(|l| format!("({l})*")).collect(),
            x: neg_t(&self.x),
            y: neg_t(&self.y),
            h: neg_t(&self.h),
        }
    }

    pub fn with_labels(&self, labels: Vec<String>) -> Rep {
        assert_eq!(labels.len(), self.dim());
        Rep {
            labels,
            ..self.clone()
        }
    }

    pub fn tensor(&self, other: &Rep) -> Rep {
        let i1 = RatMatrix::identity(self.dim());
        let i2 = RatMatrix::identity(other.dim());
        let op = |a: &RatMatrix, b: &RatMatrix| a.kron(&i2).add(&i1.kron(b));
        let mut labels = Vec::new();
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        Rep {
            labels,
            x: op(&self.x, &other.x),
            y: op(&self.y, &other.y),
            h: op(&self.h, &other.h),
        }
    }

    pub fn direct_sum(&self, other: &Rep) -> Rep {
        let (d1, d2) = (self.dim(), other.dim());
        let op = |a: &RatMatrix, b: &RatMatrix| {
            RatMatrix::from_fn(d1 + d2, d1 + d2, |i, j| {
                if i < d1 && j < d1 {
                    a[(i, j)].clone()
                } else if i >= d1 && j >= d1 {
                    b[(i - d1, j - d1)].clone()
                } else {
                    Rational::zero()
                }
            })
        };
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        Rep {
            labels,
            x: op(&self.x, &other.x),
            y: op(&self.y, &other.y),
            h: op(&self.h, &other.h),
        }
    }

    /// Basis e_i·e_j, i ≤ j, in lexicographic order.
    pub fn sym2(&self) -> Rep {
        let d = self.dim();
        let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i..d).map(move |j| (i, j))).collect();
        let idx = |i: usize, j: usize| {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            pairs.iter().position(|&p| p == (a, b)).unwrap()
        };
        let op = |z: &RatMatrix| {
            let mut m = RatMatrix::zeros(pairs.len(), pairs.len());
            for (c, &(i, j)) in pairs.iter().enumerate() {
                for k in 0..d {
                    if !z[(k, i)].is_zero() {
                        m[(idx(k, j), c)] += &z[(k, i)];
                    }
                    if !z[(k, j)].is_zero() {
                        m[(idx(i, k), c)] += &z[(k, j)];
                    }
                }
            }
            m
        };
        let labels = pairs
            .iter()
            .map(|&(i, j)| format!("{}·{}", self.labels[i], self.labels[j]))
            .collect();
        Rep {
            labels,
            x: op(&self.x),
            y: op(&self.y),
            h: op(&self.h),
        }
    }

    /// Basis e_i∧e_j, i < j, in lexicographic order.
    pub fn wedge2(&self) -> Rep {
        let d = self.dim();
        let pairs: Vec<(usize, usize)> = (0..d)
            .flat_map(|i| (i + 1..d).map(move |j| (i, j)))
            .collect();
        let op = |z: &RatMatrix| {
            let mut m = RatMatrix::zeros(pairs.len(), pairs.len());
            for (c, &(i, j)) in pairs.iter().enumerate() {
                // Z(e_i∧e_j) = Ze_i∧e_j + e_i∧Ze_j
                for k in 0..d {
                    for (coef, a, b) in [(&z[(k, i)], k, j), (&z[(k, j)], i, k)] {
                        if coef.is_zero() || a == b {
                            continue;
                        }
                        let (p, sign) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
                        let r = pairs.iter().position(|&q| q == p).unwrap();
                        m[(r, c)] += coef * rat(sign);
                    }
                }
            }
            m
        };
        let labels = pairs
            .iter()
            .map(|&(i, j)| format!("{}∧{}", self.labels[i], self.labels[j]))
            .collect();
        Rep {
            labels,
            x: op(&self.x),
            y: op(&self.y),
            h: op(&self.h),
        }
    }

    /// Multiplicity of each H-eigenvalue.
    pub fn weight_multiplicities(&self) -> Result<BTreeMap<i64, usize>, RepError> {
        let d = self.dim();
        let diagonal = (0..d).all(|i| (0..d).all(|j| i == j || self.h[(i, j)].is_zero()));
        let mut out = BTreeMap::new();
        if diagonal {
            for i in 0..d {
                let w = &self.h[(i, i)];
                if !w.is_integer() {
                    return Err(RepError::Weights);
                }
                *out.entry(w.to_integer().to_i64().ok_or(RepError::Weights)?)
                    .or_insert(0) += 1;
            }
            return Ok(out);
        }
        // weights of a d-dimensional rep lie in [−(d−1), d−1]
        let bound = d as i64;
        let mut total = 0;
        for w in -bound..=bound {
            let shifted = self.h.sub(&RatMatrix::identity(d).scale(&rat(w)));
            let k = d - shifted.rank();
            if k > 0 {
                out.insert(w, k);
                total += k;
            }
        }
        if total != d {
            return Err(RepError::Weights);
        }
        Ok(out)
    }

    /// Multiplicities m(n) = dim V_n − dim V_(n+2).
    pub fn decompose(&self) -> Result<RepDecomposition, RepError> {
        self.check_brackets()?;
        let wm = self.weight_multiplicities()?;
        let get = |w: i64| wm.get(&w).copied().unwrap_or(0) as i64;
        let mut dec = RepDecomposition::default();
        let top = wm.keys().copied().max().unwrap_or(0);
        for n in 0..=top.max(0) {
            let m = get(n) - get(n + 2);
            if m < 0 {
                return Err(RepError::NegativeMultiplicity(n));
            }
            if m > 0 {
                dec.multiplicities.insert(n as u32, m as usize);
            }
        }
        if dec.dimension() != self.dim() {
            return Err(RepError::Weights);
        }
        Ok(dec)
    }

    /// Basis of the joint kernel of X, Y, H.
    pub fn invariant_vectors(&self) -> Vec<Vec<Rational>> {
        self.x.vstack(&self.y).vstack(&self.h).kernel_basis()
    }

    /// exp(sX)·t^H·exp(uY); needs H diagonal and t ≠ 0.
    pub fn group_element(&self, s: &Rational, t: &Rational, u: &Rational) -> RatMatrix {
        let d = self.dim();
        let mut torus = RatMatrix::zeros(d, d);
        for i in 0..d {
            for j in 0..d {
                assert!(
                    i == j || self.h[(i, j)].is_zero(),
                    "group_element needs a diagonal H"
                );
            }
            let w = self.h[(i, i)]
                .to_integer()
                .to_i64()
                .expect("integral weight");
            torus[(i, i)] = pow_i(t, w);
        }
        exp_nilpotent(&self.x, s)
            .mul(&torus)
            .mul(&exp_nilpotent(&self.y, u))
    }
}

fn pow_i(t: &Rational, e: i64) -> Rational {
    let mut r = Rational::one();
    let base = if e < 0 { t.recip() } else { t.clone() };
    for _ in 0..e.unsigned_abs() {
        r *= &base;
    }
    r
}

/// exp(c·Z) for nilpotent Z.
pub fn exp_nilpotent(z: &RatMatrix, c: &Rational) -> RatMatrix {
    let d = z.rows();
    let step = z.scale(c);
    let mut term = RatMatrix::identity(d);
    let mut acc = term.clone();
    for k in 1..=d {
        term = term.mul(&step).scale(&rat(k as i64).recip());
        if term.is_zero() {
            return acc;
        }
        acc = acc.add(&term);
    }
    assert!(
        term.is_zero(),
        "exp_nilpotent called on a non-nilpotent matrix"
    );
    acc
}

fn monomial_label(a: usize, b: usize) -> String {
    let part = |v: &str, k: usize| match k {
        0 => String::new(),
        1 => v.to_string(),
        _ => format!("{v}^{k}"),
    };
    let s = format!("{}{}", part("x", a), part("y", b));
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(r: &Rep) -> Vec<u32> {
        r.decompose().unwrap().weights()
    }

    #[test]
    fn differentiation_rules() {
        let s2 = Rep::sym_power_of_w(2);
        let xy = vec![rat(0), rat(1), rat(0)];
        assert!(s2.h().mul_vec(&xy).iter().all(|c| c.is_zero()));
        let s4 = Rep::sym_power_of_w(4);
        let e = |i: usize| (0..5).map(|k| rat((k == i) as i64)).collect::<Vec<_>>();
        assert_eq!(
            s4.y().mul_vec(&e(0)),
            e(1).iter().map(|c| c * rat(4)).collect::<Vec<_>>()
        );
        assert_eq!(
            s4.x().mul_vec(&e(3)),
            e(2).iter().map(|c| c * rat(3)).collect::<Vec<_>>()
        );
        assert_eq!(s4.labels()[1], "x^3y");
    }

    #[test]
    fn functorial_constructions() {
        let w = Rep::sym_power_of_w(1);
        let l = w.wedge2();
        assert_eq!(l.dim(), 1);
        assert!(l.x().is_zero() && l.y().is_zero() && l.h().is_zero());
        assert_eq!(w.tensor(&w).dim(), 4);
        let s = w.dual().sym2();
        let wm = s.weight_multiplicities().unwrap();
        assert_eq!(wm.keys().copied().collect::<Vec<_>>(), vec![-2, 0, 2]);
        for r in [
            w.dual(),
            w.tensor(&w),
            s.clone(),
            Rep::sym_power_of_w(4).wedge2(),
        ] {
            r.check_brackets().unwrap();
        }
    }

    #[test]
    fn decompositions() {
        assert_eq!(dec(&Rep::sym_power_of_w(4).wedge2()), vec![2, 6]);
        assert_eq!(dec(&Rep::sym_power_of_w(2).sym2()), vec![0, 4]);
        assert_eq!(dec(&Rep::trivial()), vec![0]);
    }

    #[test]
    fn invariants() {
        assert_eq!(Rep::trivial().invariant_vectors().len(), 1);
        assert!(Rep::sym_power_of_w(4).invariant_vectors().is_empty());
        let s2 = Rep::sym_power_of_w(2);
        assert_eq!(s2.tensor(&s2.dual()).invariant_vectors().len(), 1);
    }

    #[test]
    fn rejects_non_representations() {
        let s = Rep::sym_power_of_w(2);
        let bad = Rep::new(
            s.labels().to_vec(),
            s.x().scale(&rat(2)),
            s.y().clone(),
            s.h().clone(),
        );
        assert!(bad.is_err());
    }

    #[test]
    fn group_element_is_an_automorphism_of_brackets() {
        let r = Rep::sym_power_of_w(3);
        let g = r.group_element(&rat(2), &rat(3), &rat(-1));
        assert!(!g.det().is_zero());
        // t^H at t = 1 with s = u = 0 is the identity
        assert_eq!(
            r.group_element(&rat(0), &rat(1), &rat(0)),
            RatMatrix::identity(4)
        );
    }
}

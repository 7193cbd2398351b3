//! Rational numbers, dense matrices over Q, and polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Index, IndexMut};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("matrix is not antisymmetric")]
    NotAntisymmetric,
    #[error("pfaffian needs an even-dimensional square matrix, got {0}x{1}")]
    OddDimension(usize, usize),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("variable count mismatch: {0} vs {1}")]
    VariableMismatch(usize, usize),
    #[error("cannot parse rational {0:?}")]
    Parse(String),
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// "p/q", or "p" when q = 1.
pub fn rat_str(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational, ExactError> {
    let t = s.trim();
    let r = Rational::from_str(t).map_err(|_| ExactError::Parse(s.to_string()))?;
    if r.denom().is_zero() {
        return Err(ExactError::Parse(s.to_string()));
    }
    Ok(r)
}

pub fn vec_str(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat_str).collect()
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Scale a nonzero vector to coprime integers with first nonzero entry positive.
pub fn normalize_projective(v: &[Rational]) -> Vec<Rational> {
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    let sign = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    ints.into_iter()
        .map(|x| {
            let y = x / &g;
            Rational::from_integer(if sign { -y } else { y })
        })
        .collect()
}

/// True when u and v span the same point of projective space (both nonzero).
pub fn proportional(u: &[Rational], v: &[Rational]) -> bool {
    if is_zero_vec(u) || is_zero_vec(v) {
        return false;
    }
    normalize_projective(u) == normalize_projective(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        RatMatrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RatMatrix { rows, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        Self::new(rows, cols, entries.iter().map(|&x| rat(x)).collect())
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            data.extend(row.iter().cloned());
        }
        RatMatrix {
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_cols(cols: &[Vec<Rational>]) -> Self {
        Self::from_rows(cols).transpose()
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> Vec<Rational> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &RatMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = Rational::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self[(i, j)].is_zero() {
                        acc += &self[(i, j)] * &v[j];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &RatMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &RatMatrix) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self::new(
            self.rows,
            self.cols,
            self.data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(
            self.rows,
            self.cols,
            self.data.iter().map(|a| a * c).collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| self[(i, i)].is_zero() && (0..i).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn commutator(&self, other: &RatMatrix) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// Kronecker product.
    pub fn kron(&self, other: &RatMatrix) -> Self {
        Self::from_fn(self.rows * other.rows, self.cols * other.cols, |i, j| {
            &self[(i / other.rows, j / other.cols)] * &other[(i % other.rows, j % other.cols)]
        })
    }

    pub fn hstack(&self, other: &RatMatrix) -> Self {
        assert_eq!(self.rows, other.rows);
        Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, other: &RatMatrix) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Self::new(self.rows + other.rows, self.cols, data)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| {
            self[(rows[i], cols[j])].clone()
        })
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                let mut l = BigInt::one();
                for x in row {
                    l = l.lcm(x.denom());
                }
                row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
            })
            .collect()
    }

    /// Rank over Q by fraction-free elimination.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.integer_rows(), self.cols)
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m[(r, c)].recip();
            for j in c..m.cols {
                let x = &m[(r, j)] * &inv;
                m[(r, j)] = x;
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        if !m[(r, j)].is_zero() {
                            let x = &m[(r, j)] * &f;
                            m[(i, j)] -= x;
                        }
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Basis of the right kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -r[(k, f)].clone();
                }
                v
            })
            .collect()
    }

    /// Basis of the left kernel (row vectors y with y·m = 0).
    pub fn left_kernel_basis(&self) -> Vec<Vec<Rational>> {
        self.transpose().kernel_basis()
    }

    /// Basis of the row space.
    pub fn row_space_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i)).collect()
    }

    pub fn det(&self) -> Rational {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Rational::one();
        }
        let mut scale = BigInt::one();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let row = &self.data[i * n..(i + 1) * n];
            let mut l = BigInt::one();
            for x in row {
                l = l.lcm(x.denom());
            }
            scale *= &l;
            rows.push(
                row.iter()
                    .map(|x| x.numer() * (&l / x.denom()))
                    .collect::<Vec<_>>(),
            );
        }
        Rational::new(bareiss_det(rows), scale)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&RatMatrix::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    /// One solution x of m·x = b, if any.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows);
        let bm = RatMatrix::new(self.rows, 1, b.to_vec());
        let (r, pivots) = self.hstack(&bm).rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (k, &p) in pivots.iter().enumerate() {
            x[p] = r[(k, self.cols)].clone();
        }
        Some(x)
    }

    /// Pfaffian of an even antisymmetric matrix, by skew elimination.
    pub fn pfaffian(&self) -> Result<Rational, ExactError> {
        if !self.is_square() || self.rows % 2 == 1 {
            return Err(ExactError::OddDimension(self.rows, self.cols));
        }
        if !self.is_antisymmetric() {
            return Err(ExactError::NotAntisymmetric);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut pf = Rational::one();
        let mut k = 0;
        while k < n {
            let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) else {
                return Ok(Rational::zero());
            };
            if j != k + 1 {
                a.swap_sym(k + 1, j);
                pf = -pf;
            }
            let p = a[(k, k + 1)].clone();
            pf *= &p;
            for i in k + 2..n {
                if !a[(k, i)].is_zero() {
                    let c = &a[(k, i)] / &p;
                    a.add_sym(i, k + 1, &-c);
                }
                if !a[(k + 1, i)].is_zero() {
                    let d = &a[(k + 1, i)] / &a[(k + 1, k)];
                    a.add_sym(i, k, &-d);
                }
            }
            k += 2;
        }
        Ok(pf)
    }

    fn swap_sym(&mut self, i: usize, j: usize) {
        let n = self.rows;
        for c in 0..n {
            self.data.swap(i * n + c, j * n + c);
        }
        for r in 0..n {
            self.data.swap(r * n + i, r * n + j);
        }
    }

    // row_i += c row_j and col_i += c col_j
    fn add_sym(&mut self, i: usize, j: usize, c: &Rational) {
        let n = self.rows;
        for r in 0..n {
            let x = &self[(j, r)] * c;
            self[(i, r)] += x;
        }
        for r in 0..n {
            let x = &self[(r, j)] * c;
            self[(r, i)] += x;
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows).map(|i| vec_str(&self.row(i))).collect()
    }
}

fn bareiss_rank(mut m: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let rows = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, rank);
        let piv = m[rank][c].clone();
        for i in rank + 1..rows {
            let f = m[i][c].clone();
            for j in c + 1..cols {
                let v = (&piv * &m[i][j] - &f * &m[rank][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = piv;
        rank += 1;
    }
    rank
}

fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = false;
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            m.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[k][k] * &m[i][j] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -d
    } else {
        d
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let r: Vec<String> = self.row(i).iter().map(rat_str).collect();
            writeln!(f, "[{}]", r.join(", "))?;
        }
        Ok(())
    }
}

/// Polynomial in a fixed number of variables with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(e, Rational::one());
        p
    }

    /// Σ c_i x_i.
    pub fn linear(coeffs: &[Rational]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut e = vec![0; n];
            e[i] = 1;
            p.add_term(e, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rational)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length mismatch");
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: &[u32]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut p = self.clone();
        for (e, c) in &o.terms {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect(),
        }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, o.nvars, "variable count mismatch");
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1 * c2);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut r = Self::one(self.nvars);
        for _ in 0..k {
            r = r.mul(self);
        }
        r
    }

    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        assert_eq!(x.len(), self.nvars, "point has wrong dimension");
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (xi, &k) in x.iter().zip(e) {
                for _ in 0..k {
                    t *= xi;
                }
            }
            acc += t;
        }
        acc
    }

    /// Replace x_i by the polynomial subs\[i\].
    pub fn substitute(&self, subs: &[MultiPoly]) -> MultiPoly {
        assert_eq!(subs.len(), self.nvars);
        let m = subs.first().map(|p| p.nvars).unwrap_or(0);
        let mut out = MultiPoly::zero(m);
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(m, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&subs[i].pow(k));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Replace x_i by Σ_j m\[i,j\] y_j.
    pub fn substitute_linear(&self, m: &RatMatrix) -> MultiPoly {
        assert_eq!(m.rows(), self.nvars);
        let subs: Vec<MultiPoly> = (0..m.rows())
            .map(|i| MultiPoly::linear(&m.row(i)))
            .collect();
        self.substitute(&subs)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Quotient p/q when q divides p exactly.
    pub fn divide_exact(&self, q: &MultiPoly) -> Result<Option<MultiPoly>, ExactError> {
        if self.nvars != q.nvars {
            return Err(ExactError::VariableMismatch(self.nvars, q.nvars));
        }
        let Some((qe, qc)) = q.leading() else {
            return Err(ExactError::DivisionByZero);
        };
        let (qe, qc) = (qe.clone(), qc.clone());
        let mut r = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while let Some((re, rc)) = r.leading() {
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return Ok(None);
            }
            let e: Vec<u32> = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let c = rc / &qc;
            let t = MultiPoly::from_terms(self.nvars, [(e, c)]);
            r = r.sub(&t.mul(q));
            quot = quot.add(&t);
        }
        Ok(Some(quot))
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c * rat(e[i] as i64));
            }
        }
        p
    }

    /// p = c·q for some nonzero rational c.
    pub fn is_proportional_to(&self, q: &MultiPoly) -> bool {
        if self.is_zero() || q.is_zero() || self.terms.len() != q.terms.len() {
            return false;
        }
        let (e0, c0) = self.leading().unwrap();
        let d0 = q.coefficient(e0);
        if d0.is_zero() {
            return false;
        }
        let ratio = c0 / d0;
        self.terms
            .iter()
            .all(|(e, c)| q.coefficient(e) * &ratio == *c)
    }

    /// Homogeneous quadratic form x ↦ xᵀ m x.
    pub fn quadratic_form(m: &RatMatrix) -> MultiPoly {
        let n = m.rows();
        let mut p = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut e = vec![0; n];
                e[i] += 1;
                e[j] += 1;
                p.add_term(e, m[(i, j)].clone());
            }
        }
        p
    }

    pub fn to_string_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = monomial_string(e, names);
            if mono.is_empty() {
                parts.push(rat_str(c));
            } else if c.is_one() {
                parts.push(mono);
            } else if *c == -Rational::one() {
                parts.push(format!("-{mono}"));
            } else {
                parts.push(format!("{}*{}", rat_str(c), mono));
            }
        }
        parts.join(" + ").replace("+ -", "- ")
    }

    /// Monomial string to coefficient string, for reports.
    pub fn to_json_map(&self, names: &[&str]) -> BTreeMap<String, String> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let m = monomial_string(e, names);
                (if m.is_empty() { "1".into() } else { m }, rat_str(c))
            })
            .collect()
    }
}

fn monomial_string(e: &[u32], names: &[&str]) -> String {
    let mut s = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        let name = names
            .get(i)
            .map(|x| x.to_string())
            .unwrap_or_else(|| format!("x{i}"));
        match k {
            0 => {}
            1 => s.push(name),
            _ => s.push(format!("{name}^{k}")),
        }
    }
    s.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_with(&[]))
    }
}

/// Determinant of a square matrix of polynomials (fraction-free elimination).
pub fn determinant_of_poly_matrix(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    assert!(n > 0, "empty polynomial matrix");
    let nv = m[0][0].nvars();
    let mut a: Vec<Vec<MultiPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = MultiPoly::one(nv);
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return MultiPoly::zero(nv);
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .divide_exact(&prev)
                    .expect("same nvars")
                    .expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign {
        d.neg()
    } else {
        d
    }
}

/// Univariate polynomial, coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * rat(i as i64))
                .collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        UniPoly::new(c)
    }

    pub fn monic(&self) -> UniPoly {
        match self.coeffs.last() {
            None => UniPoly::zero(),
            Some(l) => {
                let inv = l.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// (quotient, remainder); panics on division by zero.
    pub fn div_rem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut q = vec![Rational::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &lead;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (UniPoly::new(q), UniPoly::new(r))
    }

    /// Monic gcd (zero if both are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// p / gcd(p, p').
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Multiplicities of the distinct roots over the algebraic closure, descending.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        let mut out = Vec::new();
        let mut p = self.monic();
        let mut k = 1;
        // Yun-style peeling: sqfree(p) collects roots of multiplicity ≥ k.
        let mut prev_count = p.squarefree_part().degree().unwrap_or(0);
        while p.degree().unwrap_or(0) > 0 {
            let g = p.gcd(&p.derivative());
            let count_next = g.squarefree_part().degree().unwrap_or(0);
            for _ in 0..(prev_count - count_next) {
                out.push(k);
            }
            p = g;
            prev_count = count_next;
            k += 1;
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }
}

/// Binary form of fixed degree d: coeffs\[k\] multiplies s^(d−k) t^k.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<Rational>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "binary form coefficient count");
        BinaryForm { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            degree,
            coeffs: vec![Rational::zero(); degree + 1],
        }
    }

    pub fn constant(c: Rational) -> Self {
        BinaryForm {
            degree: 0,
            coeffs: vec![c],
        }
    }

    /// a·s + b·t.
    pub fn linear(a: Rational, b: Rational) -> Self {
        BinaryForm {
            degree: 1,
            coeffs: vec![a, b],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn add(&self, o: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, o.degree, "adding forms of different degree");
        BinaryForm::new(
            self.degree,
            self.coeffs
                .iter()
                .zip(&o.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> BinaryForm {
        BinaryForm::new(self.degree, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, o: &BinaryForm) -> BinaryForm {
        let mut c = vec![Rational::zero(); self.degree + o.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        BinaryForm::new(self.degree + o.degree, c)
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c.clone();
            for _ in 0..(self.degree - k) {
                term *= s;
            }
            for _ in 0..k {
                term *= t;
            }
            acc += term;
        }
        acc
    }

    /// Set s = 1.
    pub fn dehomogenize(&self) -> UniPoly {
        UniPoly::new(self.coeffs.clone())
    }

    /// Root multiplicities on P¹ (the point s = 0 included); empty for the zero form.
    pub fn root_multiplicities(&self) -> Vec<usize> {
        if self.is_zero() {
            return vec![];
        }
        let u = self.dehomogenize();
        let mut m = u.root_multiplicities();
        let at_infinity = self.degree - u.degree().unwrap_or(0);
        if at_infinity > 0 {
            m.push(at_infinity);
        }
        m.sort_unstable_by(|a, b| b.cmp(a));
        m
    }

    pub fn to_multipoly(&self) -> MultiPoly {
        MultiPoly::from_terms(
            2,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| (vec![(self.degree - k) as u32, k as u32], c.clone())),
        )
    }

    /// Inverse of [`to_multipoly`] for a homogeneous polynomial in (s, t).
    pub fn from_multipoly(p: &MultiPoly, degree: usize) -> BinaryForm {
        assert_eq!(p.nvars(), 2);
        let mut c = vec![Rational::zero(); degree + 1];
        for (e, x) in p.terms() {
            assert_eq!(
                (e[0] + e[1]) as usize,
                degree,
                "polynomial is not homogeneous of the expected degree"
            );
            c[e[1] as usize] = x.clone();
        }
        BinaryForm::new(degree, c)
    }
}

/// Vector of binary forms sharing one degree; a map O(−d) → Qⁿ⊗O on P¹.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyVec {
    degree: usize,
    comps: Vec<BinaryForm>,
}

impl PolyVec {
    pub fn new(degree: usize, comps: Vec<BinaryForm>) -> Self {
        assert!(
            comps.iter().all(|c| c.degree() == degree),
            "components of mixed degree"
        );
        PolyVec { degree, comps }
    }

    pub fn constant(v: &[Rational]) -> Self {
        PolyVec {
            degree: 0,
            comps: v.iter().map(|c| BinaryForm::constant(c.clone())).collect(),
        }
    }

    /// s·a + t·b.
    pub fn linear(a: &[Rational], b: &[Rational]) -> Self {
        assert_eq!(a.len(), b.len());
        PolyVec {
            degree: 1,
            comps: a
                .iter()
                .zip(b)
                .map(|(x, y)| BinaryForm::linear(x.clone(), y.clone()))
                .collect(),
        }
    }

    /// vs\[k\] is the coefficient vector of s^(d−k) t^k.
    pub fn from_coeff_vectors(vs: &[Vec<Rational>]) -> Self {
        let degree = vs.len() - 1;
        let n = vs[0].len();
        PolyVec {
            degree,
            comps: (0..n)
                .map(|i| BinaryForm::new(degree, vs.iter().map(|v| v[i].clone()).collect()))
                .collect(),
        }
    }

    pub fn coeff_vectors(&self) -> Vec<Vec<Rational>> {
        (0..=self.degree)
            .map(|k| self.comps.iter().map(|c| c.coeffs()[k].clone()).collect())
            .collect()
    }

    /// All coefficients, component-major.
    pub fn flat(&self) -> Vec<Rational> {
        self.comps
            .iter()
            .flat_map(|c| c.coeffs().iter().cloned())
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.comps.len()
    }

    pub fn comps(&self) -> &[BinaryForm] {
        &self.comps
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Vec<Rational> {
        self.comps.iter().map(|c| c.eval(s, t)).collect()
    }

    pub fn add(&self, o: &PolyVec) -> PolyVec {
        PolyVec::new(
            self.degree,
            self.comps
                .iter()
                .zip(&o.comps)
                .map(|(a, b)| a.add(b))
                .collect(),
        )
    }

    pub fn mul_form(&self, f: &BinaryForm) -> PolyVec {
        PolyVec::new(
            self.degree + f.degree(),
            self.comps.iter().map(|c| c.mul(f)).collect(),
        )
    }

    pub fn scale(&self, c: &Rational) -> PolyVec {
        PolyVec::new(self.degree, self.comps.iter().map(|x| x.scale(c)).collect())
    }

    /// Σ_i self_i · o_i.
    pub fn dot(&self, o: &PolyVec) -> BinaryForm {
        assert_eq!(self.dim(), o.dim());
        let mut acc = BinaryForm::zero(self.degree + o.degree);
        for (a, b) in self.comps.iter().zip(&o.comps) {
            acc = acc.add(&a.mul(b));
        }
        acc
    }

    /// Σ_i self_i · v_i for a constant vector v.
    pub fn dot_const(&self, v: &[Rational]) -> BinaryForm {
        let mut acc = BinaryForm::zero(self.degree);
        for (a, b) in self.comps.iter().zip(v) {
            if !b.is_zero() {
                acc = acc.add(&a.scale(b));
            }
        }
        acc
    }

    /// Left multiplication by a constant matrix.
    pub fn apply(&self, m: &RatMatrix) -> PolyVec {
        assert_eq!(m.cols(), self.dim());
        let cv: Vec<Vec<Rational>> = self.coeff_vectors().iter().map(|v| m.mul_vec(v)).collect();
        PolyVec::from_coeff_vectors(&cv)
    }
}

/// Degree of the gcd of binary forms on P¹ (0 when they have no common zero).
pub fn common_zero_degree(forms: &[BinaryForm]) -> usize {
    let nonzero: Vec<&BinaryForm> = forms.iter().filter(|f| !f.is_zero()).collect();
    if nonzero.is_empty() {
        return usize::MAX;
    }
    let mut g = UniPoly::zero();
    let mut at_inf = usize::MAX;
    for f in &nonzero {
        let u = f.dehomogenize();
        at_inf = at_inf.min(f.degree() - u.degree().unwrap_or(0));
        g = g.gcd(&u);
    }
    g.degree().unwrap_or(0) + at_inf
}

/// Maximal minors of a k×n matrix whose rows are polynomial vectors (k ≤ n ≤ small).
pub fn maximal_minors(rows: &[PolyVec]) -> Vec<BinaryForm> {
    let k = rows.len();
    let n = rows[0].dim();
    let deg: usize = rows.iter().map(|r| r.degree()).sum();
    let mut out = Vec::new();
    for cols in combinations(n, k) {
        let m: Vec<Vec<MultiPoly>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r.comps()[c].to_multipoly()).collect())
            .collect();
        let d = determinant_of_poly_matrix(&m);
        out.push(if d.is_zero() {
            BinaryForm::zero(deg)
        } else {
            BinaryForm::from_multipoly(&d, deg)
        });
    }
    out
}

/// k-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rank of a sparse matrix given as rows of (column, value) pairs.
pub fn sparse_rank(rows: Vec<Vec<(usize, Rational)>>) -> usize {
    // pivot column ↦ reduced row with that leading column, entries sorted by column
    let mut pivots: BTreeMap<usize, Vec<(usize, Rational)>> = BTreeMap::new();
    let mut work: Vec<Vec<(usize, Rational)>> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|(_, v)| !v.is_zero());
            r.sort_by_key(|(c, _)| *c);
            r
        })
        .filter(|r| !r.is_empty())
        .collect();
    work.sort_by_key(|r| r.len());
    for mut row in work {
        loop {
            let Some((lead, lv)) = row.first().cloned() else {
                break;
            };
            let Some(p) = pivots.get(&lead) else {
                // normalize to leading 1
                let inv = lv.recip();
                for e in row.iter_mut() {
                    e.1 *= &inv;
                }
                pivots.insert(lead, row);
                break;
            };
            row = sparse_axpy(&row, p, &lv);
        }
    }
    pivots.len()
}

// row − c·p where p has leading coefficient 1
fn sparse_axpy(
    row: &[(usize, Rational)],
    p: &[(usize, Rational)],
    c: &Rational,
) -> Vec<(usize, Rational)> {
    let mut out = Vec::with_capacity(row.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < p.len() {
        let ci = row.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            out.push(row[i].clone());
            i += 1;
        } else if cj < ci {
            out.push((cj, -(c * &p[j].1)));
            j += 1;
        } else {
            let v = &row[i].1 - c * &p[j].1;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// The binary form of degree d with F(1, t) = f(t), recovered from d + 1 values.
pub fn interpolate_binary_form(degree: usize, f: impl Fn(&Rational) -> Rational) -> BinaryForm {
    let xs: Vec<Rational> = (0..=degree).map(|k| rat(k as i64)).collect();
    let m = RatMatrix::from_fn(degree + 1, degree + 1, |i, j| {
        let mut p = Rational::one();
        for _ in 0..j {
            p *= &xs[i];
        }
        p
    });
    let b: Vec<Rational> = xs.iter().map(&f).collect();
    BinaryForm::new(
        degree,
        m.solve(&b).expect("Vandermonde system is invertible"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: usize, cols: usize, e: &[i64]) -> RatMatrix {
        RatMatrix::from_i64(rows, cols, e)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(4, 4).rank(), 0);
        assert_eq!(m(2, 3, &[1, 2, 3, 2, 4, 6]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert!(RatMatrix::identity(2).kernel_basis().is_empty());
        let k = m(1, 2, &[1, 1]).kernel_basis();
        assert_eq!(k.len(), 1);
        assert!(proportional(&k[0], &[rat(1), rat(-1)]));
    }

    #[test]
    fn pfaffian_small() {
        assert_eq!(m(2, 2, &[0, 1, -1, 0]).pfaffian().unwrap(), rat(1));
        let j = m(4, 4, &[0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0]);
        assert_eq!(j.pfaffian().unwrap(), rat(1));
        // Pf of the generic 4x4 is a12 a34 - a13 a24 + a14 a23
        let g = m(
            4,
            4,
            &[0, 2, 3, 5, -2, 0, 7, 11, -3, -7, 0, 13, -5, -11, -13, 0],
        );
        assert_eq!(g.pfaffian().unwrap(), rat(2 * 13 - 3 * 11 + 5 * 7));
    }

    #[test]
    fn pfaffian_rejects_bad_input() {
        assert_eq!(
            m(3, 3, &[0; 9]).pfaffian(),
            Err(ExactError::OddDimension(3, 3))
        );
        assert_eq!(
            m(2, 2, &[0, 1, 1, 0]).pfaffian(),
            Err(ExactError::NotAntisymmetric)
        );
    }

    #[test]
    fn det_and_inverse() {
        let a = m(3, 3, &[2, 0, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(a.det(), rat(2 * (6 - 2) + (1 - 3)));
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), RatMatrix::identity(3));
        assert!(m(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn solve_roundtrip() {
        let a = m(2, 3, &[1, 2, 3, 0, 1, 4]);
        let b = vec![rat(5), rat(6)];
        let x = a.solve(&b).unwrap();
        assert_eq!(a.mul_vec(&x), b);
        assert!(m(2, 1, &[1, 1]).solve(&[rat(1), rat(2)]).is_none());
    }

    #[test]
    fn poly_examples() {
        let x = MultiPoly::var(2, 0);
        let y = MultiPoly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        assert_eq!(p, x.pow(2).sub(&y.pow(2)));
        assert_eq!(p.divide_exact(&x.sub(&y)).unwrap(), Some(x.add(&y)));
        assert_eq!(p.divide_exact(&x.add(&MultiPoly::one(2))).unwrap(), None);
        assert_eq!(
            p.divide_exact(&MultiPoly::zero(2)),
            Err(ExactError::DivisionByZero)
        );
    }

    #[test]
    fn theta_matrix_determinant() {
        let v = |i| MultiPoly::var(3, i);
        let z = MultiPoly::zero(3);
        let (x, y, w) = (v(0), v(1), v(2));
        let th = vec![
            vec![z.clone(), x.clone(), y.clone()],
            vec![x.neg(), y.clone(), w.clone()],
            vec![y.neg(), w.neg(), z.clone()],
        ];
        let d = determinant_of_poly_matrix(&th);
        // cofactor expansion along the first row, written out by hand
        let cof = x
            .neg()
            .mul(&x.neg().mul(&z).sub(&w.mul(&y.neg())))
            .add(&y.mul(&x.neg().mul(&w.neg()).sub(&y.mul(&y.neg()))));
        assert_eq!(d, cof);
        assert_eq!(d, y.pow(3));
    }

    #[test]
    fn univariate_roots() {
        // (t-1)^2 (t+2)
        let p = UniPoly::new(vec![rat(2), rat(-3), rat(0), rat(1)]);
        assert_eq!(p.root_multiplicities(), vec![2, 1]);
        assert_eq!(p.squarefree_part().degree(), Some(2));
        // s^2 t: roots [1:0] twice and [0:1] once -> in our coordinates t = 0 double, s = 0 once
        let f = BinaryForm::new(3, vec![rat(0), rat(1), rat(0), rat(0)]);
        assert_eq!(f.root_multiplicities(), vec![2, 1]);
        let cube = BinaryForm::new(3, vec![rat(0), rat(0), rat(0), rat(5)]);
        assert_eq!(cube.root_multiplicities(), vec![3]);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rat_str(&frac(6, -4)), "-3/2");
        assert_eq!(rat_str(&rat(7)), "7");
        assert_eq!(parse_rational("-3/2").unwrap(), frac(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }

    #[test]
    fn sparse_rank_matches_dense() {
        let a = m(3, 4, &[1, 2, 0, 3, 2, 4, 0, 6, 0, 1, 1, 0]);
        let rows = a
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().enumerate().collect())
            .collect();
        assert_eq!(sparse_rank(rows), a.rank());
    }

    #[test]
    fn interpolation() {
        let f = interpolate_binary_form(3, |t| t * t * t - rat(2) * t + rat(1));
        assert_eq!(f.coeffs(), &[rat(1), rat(-2), rat(0), rat(1)]);
    }

    #[test]
    fn normalization() {
        let v = normalize_projective(&[frac(-1, 2), rat(0), frac(3, 4)]);
        assert_eq!(v, vec![rat(2), rat(0), rat(-3)]);
    }
}

use num_traits::{One, Zero};
use proptest::prelude::*;

use y5::exact::{sparse_rank, BinaryForm, MultiPoly, RatMatrix, Rational, UniPoly};
use y5::geometry::{Bivector, GeometryContext, LineRef};
use y5::jumping::{jump_order, random_meeting_line};
use y5::monads::{check_membership, mi2_invariants, MonadData};
use y5::p1bundles::{hyper_h, GradedComplexOnP1, PolyMatrix};
use y5::rat;

fn small() -> impl Strategy<Value = i64> {
    -4i64..=4
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(small(), rows * cols).prop_map(move |v| RatMatrix::from_i64(rows, cols, &v))
}

fn skew(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(small(), n * (n - 1) / 2).prop_map(move |v| {
        let mut m = RatMatrix::zeros(n, n);
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] = rat(v[k]);
                m[(j, i)] = rat(-v[k]);
                k += 1;
            }
        }
        m
    })
}

fn line() -> impl Strategy<Value = LineRef> {
    prop::collection::vec(small(), 3)
        .prop_filter("nonzero", |v| v.iter().any(|x| *x != 0))
        .prop_map(|v| LineRef::new(v.into_iter().map(rat).collect()).unwrap())
}

fn sym2(v: &[i64]) -> RatMatrix {
    RatMatrix::from_i64(2, 2, &[v[0], v[1], v[1], v[2]])
}

fn gamma2() -> impl Strategy<Value = [RatMatrix; 3]> {
    prop::collection::vec(small(), 9).prop_map(|v| [sym2(&v[0..3]), sym2(&v[3..6]), sym2(&v[6..9])])
}

fn form(deg: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(small(), deg + 1).prop_map(move |v| BinaryForm::new(deg, v.into_iter().map(rat).collect()))
}

fn ctx() -> GeometryContext {
    GeometryContext::build().unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_plus_nullity(m in matrix(4, 6)) {
        prop_assert_eq!(m.rank() + m.kernel_basis().len(), 6);
        for k in m.kernel_basis() {
            prop_assert!(m.mul_vec(&k).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(a.mul(&b).det(), a.det() * b.det());
    }

    #[test]
    fn inverse_when_invertible(a in matrix(4, 4)) {
        match a.inverse() {
            Some(inv) => prop_assert_eq!(a.mul(&inv), RatMatrix::identity(4)),
            None => prop_assert!(a.det().is_zero()),
        }
    }

    #[test]
    fn pfaffian_squares_to_determinant(m in skew(6)) {
        let pf = m.pfaffian().unwrap();
        prop_assert_eq!(&pf * &pf, m.det());
    }

    #[test]
    fn sparse_rank_agrees(m in matrix(5, 7)) {
        let rows = m.to_rows().into_iter()
            .map(|r| r.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect())
            .collect();
        prop_assert_eq!(sparse_rank(rows), m.rank());
    }

    #[test]
    fn multipoly_division_round_trip(a in prop::collection::vec(small(), 3), b in prop::collection::vec(small(), 3)) {
        let p = MultiPoly::linear(&a.iter().map(|x| rat(*x)).collect::<Vec<_>>());
        let q = MultiPoly::linear(&b.iter().map(|x| rat(*x)).collect::<Vec<_>>()).add(&MultiPoly::var(3, 0).pow(1));
        prop_assume!(!q.is_zero());
        let pq = p.mul(&q);
        let back = pq.divide_exact(&q).unwrap();
        prop_assert_eq!(back, Some(p));
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(small(), 4), b in prop::collection::vec(small(), 3)) {
        let f = UniPoly::new(a.into_iter().map(rat).collect());
        let g = UniPoly::new(b.into_iter().map(rat).collect());
        prop_assume!(!f.is_zero() && !g.is_zero());
        let d = f.gcd(&g);
        prop_assert!(f.div_rem(&d).1.is_zero());
        prop_assert!(g.div_rem(&d).1.is_zero());
    }

    #[test]
    fn binary_form_product_evaluates(f in form(2), g in form(3), s in small(), t in small()) {
        let (s, t) = (rat(s), rat(t));
        prop_assert_eq!(f.mul(&g).eval(&s, &t), f.eval(&s, &t) * g.eval(&s, &t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sigma_lies_in_kappa_and_line_is_on_y(a in line()) {
        let c = ctx();
        let sigma = c.sigma(&a);
        prop_assert!(c.kappa(&a).contains(&sigma));
        let p = c.line_points(&a);
        for (s, t) in [(1, 0), (0, 1), (2, -3)] {
            prop_assert!(c.point_on_y(&p.point(&rat(s), &rat(t))));
        }
    }

    #[test]
    fn incidence_is_symmetric_and_matches_oracle(a in line(), b in line()) {
        let c = ctx();
        prop_assume!(a != b);
        prop_assert_eq!(c.lines_intersect(&a, &b), c.lines_intersect(&b, &a));
        let direct = c.is_on_y(&Bivector::wedge(&c.sigma(&a), &c.sigma(&b)));
        prop_assert_eq!(direct, c.lines_intersect(&a, &b));
    }

    #[test]
    fn meeting_lines_meet(a in line(), seed in 0u64..1000) {
        let c = ctx();
        let b = random_meeting_line(&c, &a, &mut y5::sampling::rng(seed));
        prop_assert!(c.is_on_y(&Bivector::wedge(&c.sigma(&a), &c.sigma(&b))));
    }

    #[test]
    fn gamma_hat_is_antisymmetric_and_cached(g in gamma2()) {
        let c = ctx();
        let m = MonadData::new(&c, g).unwrap();
        prop_assert!(m.consistent(&c));
        prop_assert!(m.gamma_hat().is_antisymmetric());
    }

    #[test]
    fn charge2_jump_order_at_most_one(g in gamma2(), a in line()) {
        let c = ctx();
        let m = MonadData::new(&c, g).unwrap();
        let r = mi2_invariants(&c, &m).unwrap();
        prop_assume!(r.in_mon2);
        prop_assert!(jump_order(&c, &m, &a) <= 1);
        prop_assert_eq!(m.coefficient_matrix().rank(), 3);
    }

    #[test]
    fn euler_characteristic_is_riemann_roch(f in form(1), g in form(1), h in form(2), tw in -4i64..4) {
        // O(-1) -> O ⊕ O ⊕ O(1) by (f, g, h)
        prop_assume!(!(f.is_zero() && g.is_zero() && h.is_zero()));
        let m = PolyMatrix::new(3, 1, vec![f, g, h]);
        let c = GradedComplexOnP1::new(-1, vec![vec![-1], vec![0, 0, 1]], vec![m]).unwrap();
        let hh = hyper_h(&c, tw);
        let chi: i64 = hh.iter().map(|(k, v)| if k % 2 == 0 { *v as i64 } else { -(*v as i64) }).sum();
        prop_assert_eq!(chi, c.euler_characteristic(tw));
    }

    #[test]
    fn hyper_h_invariant_under_frame_change(f in form(1), g in form(1), a in 1i64..4, b in -3i64..3) {
        prop_assume!(!(f.is_zero() && g.is_zero()));
        let m = PolyMatrix::new(2, 1, vec![f.clone(), g.clone()]);
        let c = GradedComplexOnP1::new(-1, vec![vec![-1], vec![0, 0]], vec![m]).unwrap();
        // invertible constant change of the target frame [[a, b], [0, 1]]
        let f2 = f.scale(&rat(a)).add(&g.scale(&rat(b)));
        let m2 = PolyMatrix::new(2, 1, vec![f2, g]);
        let c2 = GradedComplexOnP1::new(-1, vec![vec![-1], vec![0, 0]], vec![m2]).unwrap();
        for tw in -3..3 {
            prop_assert_eq!(hyper_h(&c, tw), hyper_h(&c2, tw));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn membership_invariant_under_change_of_h(g in gamma2(), x in -3i64..=3, y in 1i64..=3) {
        let c = ctx();
        let m = MonadData::new(&c, g).unwrap();
        let h = RatMatrix::from_rows(&[vec![rat(y), rat(x)], vec![Rational::zero(), Rational::one()]]);
        let m2 = m.change_basis(&c, &h).unwrap();
        prop_assert_eq!(check_membership(&c, &m, 2, 1).passed, check_membership(&c, &m2, 2, 1).passed);
        let (r1, r2) = (mi2_invariants(&c, &m).unwrap(), mi2_invariants(&c, &m2).unwrap());
        prop_assert_eq!(r1.in_mon2, r2.in_mon2);
        // det g = y; S²g has determinant y³ and q_H has weight y²
        prop_assert_eq!(r2.q3, r1.q3 * rat(y * y * y));
        prop_assert_eq!(r2.q2, r1.q2 * rat(y * y));
    }
}

//! Seeded random rational data.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{frac, rat, Rational};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent stream number `k` derived from a base seed.
pub fn substream(seed: u64, k: u64) -> SeededRng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(k);
    r
}

pub fn int(rng: &mut SeededRng, height: i64) -> Rational {
    if height <= 0 {
        return Rational::zero();
    }
    rat(rng.gen_range(-height..=height))
}

pub fn nonzero_int(rng: &mut SeededRng, height: i64) -> Rational {
    let h = height.max(1);
    loop {
        let x = rng.gen_range(-h..=h);
        if x != 0 {
            return rat(x);
        }
    }
}

/// p/q with |p| ≤ height and 1 ≤ q ≤ height.
pub fn small_rational(rng: &mut SeededRng, height: i64) -> Rational {
    let h = height.max(1);
    frac(rng.gen_range(-h..=h), rng.gen_range(1..=h))
}

pub fn int_vec(rng: &mut SeededRng, n: usize, height: i64) -> Vec<Rational> {
    (0..n).map(|_| int(rng, height)).collect()
}

pub fn nonzero_int_vec(rng: &mut SeededRng, n: usize, height: i64) -> Vec<Rational> {
    loop {
        let v = int_vec(rng, n, height.max(1));
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

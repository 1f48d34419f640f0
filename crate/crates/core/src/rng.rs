//! Reproducible random inputs for the verification suites.
//!
//! A fixed 64-bit linear congruential generator (Knuth's MMIX multiplier
//! `6364136223846793005` and increment `1442695040888963407`) keeps the
//! randomized cases identical across platforms and runs; values are drawn
//! from the high 31 bits of the state.

use num_complex::Complex64;

use crate::qscalar::{QExact, QNumeric};
use crate::qseries::LaurentPoly;

#[derive(Clone, Debug)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub fn new(seed: u64) -> Self {
        Lcg { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self
            .state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.state
    }

    /// Uniform draw from the inclusive range `[lo, hi]`.
    pub fn next_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + ((self.next_u64() >> 33) % span) as i64
    }
}

/// 3 to 6 distinct exponents in `[-max_degree, max_degree]`, each with a
/// nonzero integer coefficient in `[-9, 9]`.
pub fn random_modes(rng: &mut Lcg, max_degree: i64) -> Vec<(i64, i64)> {
    let n_terms = rng.next_in(3, 6);
    let mut modes: Vec<(i64, i64)> = Vec::with_capacity(n_terms as usize);
    while (modes.len() as i64) < n_terms {
        let k = rng.next_in(-max_degree, max_degree);
        if modes.iter().any(|&(e, _)| e == k) {
            continue;
        }
        let mut c = rng.next_in(-9, 8);
        if c >= 0 {
            c += 1;
        }
        modes.push((k, c));
    }
    modes.sort_unstable();
    modes
}

pub fn random_exact_poly(rng: &mut Lcg, max_degree: i64) -> LaurentPoly<QExact> {
    LaurentPoly::from_terms_in(
        &(),
        random_modes(rng, max_degree)
            .into_iter()
            .map(|(k, c)| (k, QExact::from_int(c))),
    )
}

pub fn random_numeric_poly(rng: &mut Lcg, max_degree: i64, q: Complex64) -> LaurentPoly<QNumeric> {
    LaurentPoly::from_terms_in(
        &q,
        random_modes(rng, max_degree)
            .into_iter()
            .map(|(k, c)| (k, QNumeric::from_re(q, c as f64))),
    )
}

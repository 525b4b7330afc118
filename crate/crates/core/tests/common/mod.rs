//! Seeded test corpora shared by the integration suites.
#![allow(dead_code)]

use std::f64::consts::PI;

use circleroots::criteria::indices;
use circleroots::inversive::random_self_inversive_with;
use circleroots::{Coeff, Polynomial};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random degree-`n` self-inversive polynomial with a uniformly random phase.
pub fn plain(n: usize, rng: &mut ChaCha8Rng) -> (Polynomial, Coeff) {
    let omega = Coeff::from_polar(1.0, rng.random_range(-PI..PI));
    (random_self_inversive_with(n, omega, rng).unwrap(), omega)
}

/// Rescales the symmetric pair `(a_l, a_{n-l})` by one real factor so that
/// `|a_{n-l}| = ratio * (1/2) S_l`. Real scaling keeps the symmetry.
pub fn set_pair_ratio(p: &Polynomial, l: usize, ratio: f64) -> Polynomial {
    let n = p.degree();
    let a = p.coeffs();
    let rest: f64 = (0..=n)
        .filter(|&k| k != l && k != n - l)
        .map(|k| a[k].norm())
        .sum();
    let lambda = ratio * 0.5 * rest / a[n - l].norm();
    let mut c = a.to_vec();
    c[l] *= lambda;
    if l != n - l {
        c[n - l] *= lambda;
    }
    Polynomial::new(c).unwrap()
}

pub struct Instance {
    pub seed: u64,
    pub poly: Polynomial,
    pub omega: Coeff,
}

/// The main property corpus: degrees 3..=32, phases uniform on the circle.
/// One third are left as drawn; the rest get one pair `l` rescaled to a
/// ratio between 0.5 and twice the exact-count threshold, so the at-least
/// and exact-count conditions both fire often.
pub fn corpus(count: usize, base_seed: u64) -> Vec<Instance> {
    (0..count as u64)
        .map(|i| {
            let seed = base_seed + i;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.random_range(3..=32usize);
            let (p, omega) = plain(n, &mut rng);
            let poly = if rng.random_range(0..3) == 0 {
                p
            } else {
                let l = rng.random_range(indices(n));
                // an a_{n-l} that vanished cannot be rescaled
                if p.coeff(n - l).norm() == 0.0 {
                    p
                } else {
                    let exact = n as f64 / (n - 2 * l) as f64;
                    let ratio = rng.random_range(0.5..2.0 * exact);
                    set_pair_ratio(&p, l, ratio)
                }
            };
            Instance { seed, poly, omega }
        })
        .collect()
}

/// Even-degree instances whose middle coefficient beats the sum of all the
/// others by a factor in (1.01, 2].
pub fn dominant_middle(count: usize, base_seed: u64) -> Vec<Instance> {
    (0..count as u64)
        .map(|i| {
            let seed = base_seed + i;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = 2 * rng.random_range(1..=16usize);
            let (p, omega) = plain(n, &mut rng);
            let a = p.coeffs();
            let rest: f64 = (0..=n).filter(|&k| k != n / 2).map(|k| a[k].norm()).sum();
            let sign = if rng.random_bool(0.5) { 1.0 } else { -1.0 };
            let x = sign * rest * rng.random_range(1.01..=2.0);
            let poly = p.with_coeff(n / 2, omega.sqrt() * x).unwrap();
            Instance { seed, poly, omega }
        })
        .collect()
}

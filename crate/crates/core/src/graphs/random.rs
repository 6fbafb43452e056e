use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Graph;
use crate::rational::check_unit_interval;
use crate::{Error, Rational, Result};

/// Samples `G(n, p)`.
///
/// The generator is ChaCha8 seeded with `seed`; pairs `(u, v)`, `u < v`, are
/// visited in lexicographic order and each becomes an edge when a uniform draw
/// from `0..denom(p)` falls below `numer(p)`. The result is exact in `p` and
/// reproducible across platforms.
pub fn sample_gnp(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    check_unit_interval(p)?;
    let num = p
        .numer()
        .abs()
        .to_u64()
        .ok_or_else(|| Error::invalid("numerator of p does not fit in 64 bits"))?;
    let den = p
        .denom()
        .to_u64()
        .ok_or_else(|| Error::invalid("denominator of p does not fit in 64 bits"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_range(0..den) < num {
                g.set_edge(u, v, true);
            }
        }
    }
    Ok(g)
}

/// Seed for trial `i` of a run seeded with `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn extreme_probabilities() {
        for seed in [0, 1, 99] {
            assert_eq!(sample_gnp(5, &int(0), seed).unwrap(), Graph::empty(5));
            assert_eq!(sample_gnp(5, &int(1), seed).unwrap(), Graph::complete(5));
        }
    }

    #[test]
    fn half_density_is_concentrated() {
        let g = sample_gnp(200, &ratio(1, 2), 7).unwrap();
        let pairs = 200.0 * 199.0 / 2.0;
        let sd = (pairs * 0.25f64).sqrt();
        let dev = (g.edge_count() as f64 - pairs / 2.0).abs();
        assert!(dev <= 4.0 * sd, "edge count {} deviates by {dev}", g.edge_count());
    }

    #[test]
    fn reproducible_for_fixed_seed() {
        let p = ratio(3, 10);
        assert_eq!(sample_gnp(30, &p, 42).unwrap(), sample_gnp(30, &p, 42).unwrap());
        assert_ne!(sample_gnp(30, &p, 42).unwrap(), sample_gnp(30, &p, 43).unwrap());
    }

    #[test]
    fn rejects_probabilities_outside_unit_interval() {
        assert!(sample_gnp(5, &ratio(3, 2), 0).is_err());
        assert!(sample_gnp(5, &ratio(-1, 2), 0).is_err());
    }
}

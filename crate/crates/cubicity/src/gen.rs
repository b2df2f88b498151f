//! Seeded random interval models.

use cubicity_core::{Interval, IntervalModel, Rational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Dist {
    /// Left ends uniform on `[0, n)`, lengths uniform on `[0, n/2]`, in quarter steps.
    Uniform,
    /// Lengths `1 ± 1/4` in sixteenth steps, left ends uniform on `[0, n/2)`:
    /// nearly unit interval graphs with small claw number.
    UnitJitter,
    /// Lengths `2^e` with `e` uniform on `0..=⌈log₂n⌉`: long intervals
    /// covering many short ones, so large claws.
    NestedHeavy,
}

impl Dist {
    pub const ALL: [Dist; 3] = [Dist::Uniform, Dist::UnitJitter, Dist::NestedHeavy];
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenConfig {
    pub n: usize,
    pub seed: u64,
    pub dist: Dist,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("an interval model needs at least one vertex")]
pub struct EmptyModel;

pub fn random_interval_model(cfg: GenConfig) -> Result<IntervalModel, EmptyModel> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    sample_model(&mut rng, cfg.n, cfg.dist)
}

pub fn sample_model<R: Rng>(rng: &mut R, n: usize, dist: Dist) -> Result<IntervalModel, EmptyModel> {
    if n == 0 {
        return Err(EmptyModel);
    }
    let n64 = n as i64;
    let intervals = (0..n)
        .map(|_| {
            let (lo, len) = match dist {
                Dist::Uniform => (
                    Rational::new(rng.gen_range(0..4 * n64), 4),
                    Rational::new(rng.gen_range(0..=2 * n64), 4),
                ),
                Dist::UnitJitter => (
                    Rational::new(rng.gen_range(0..2 * n64), 4),
                    Rational::new(rng.gen_range(12..=20), 16),
                ),
                Dist::NestedHeavy => {
                    let e = rng.gen_range(0..=cubicity_core::ceil_log2(n));
                    (
                        Rational::new(rng.gen_range(0..4 * n64), 4),
                        Rational::from_integer(1 << e),
                    )
                }
            };
            Interval::new(lo, lo + len)
        })
        .collect();
    Ok(IntervalModel::new(intervals).expect("lengths are non-negative"))
}

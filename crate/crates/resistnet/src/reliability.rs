//! Mean connectivity under independent random failures of non-protected
//! links: the closed-form approximations per strategy shape, and a
//! Monte-Carlo estimator of the true probability that the surviving network
//! still withstands its anticipated attacks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::designer::StrategyKind;
use crate::graph::TwoLayerNetwork;
use crate::verifier::{is_resistant_mincut, VerifierError};

/// Recorded in every estimate so runs are reproducible across machines.
pub const RNG_ALGORITHM: &str = "chacha8(seed_from_u64(splitmix64(seed, trial)))";

#[derive(Debug, Error, PartialEq)]
pub enum ReliabilityError {
    #[error("failure probability must lie in [0, 1), got {0}")]
    KappaOutOfRange(f64),
    #[error("trial count must be positive")]
    NoTrials,
    #[error("closed form is defined for the three named shapes, got {0:?}")]
    UnsupportedStrategy(StrategyKind),
    #[error(transparent)]
    Verifier(#[from] VerifierError),
}

/// Independent per-link failure model. Protected links never fail.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct FailureModel {
    pub kappa: f64,
    pub trials: u64,
    pub seed: u64,
}

impl FailureModel {
    pub fn new(kappa: f64, trials: u64, seed: u64) -> Result<Self, ReliabilityError> {
        if !(0.0..1.0).contains(&kappa) {
            return Err(ReliabilityError::KappaOutOfRange(kappa));
        }
        if trials == 0 {
            return Err(ReliabilityError::NoTrials);
        }
        Ok(Self { kappa, trials, seed })
    }
}

/// The closed-form mean-connectivity expressions per strategy shape. These
/// are approximations (the all-non-protected exponent discounts `k2` links
/// heuristically); the Monte-Carlo estimator is the ground truth and the two
/// are reported side by side, never reconciled.
pub fn closed_form_mean_connectivity(
    n1: u32,
    n2: u32,
    k1: u32,
    k2: u32,
    strategy: StrategyKind,
    kappa: f64,
) -> Result<f64, ReliabilityError> {
    if !(0.0..1.0).contains(&kappa) {
        return Err(ReliabilityError::KappaOutOfRange(kappa));
    }
    let (n1, n2, k1, k2) = (i64::from(n1), i64::from(n2), i64::from(k1), i64::from(k2));
    let exponent = match strategy {
        StrategyKind::S0 => div_ceil(n1 * (k1 + 1) + n2 * (k2 + 1), 2) - k2,
        StrategyKind::SN2M1 => div_ceil((k1 + 1) * (n1 + 1), 2),
        StrategyKind::SNM1 => return Ok(1.0),
        StrategyKind::FallbackBestOfThree => {
            return Err(ReliabilityError::UnsupportedStrategy(strategy))
        }
    };
    // Exponents beyond i32 range only occur for astronomically large
    // instances where the power has long underflowed (or is exactly 1).
    let exponent = exponent.clamp(i64::from(i32::MIN), i64::from(i32::MAX)) as i32;
    Ok((1.0 - kappa).powi(exponent))
}

fn div_ceil(a: i64, b: i64) -> i64 {
    (a + b - 1) / b
}

/// A Monte-Carlo estimate with its 95% normal-approximation half-width.
#[derive(Clone, PartialEq, Debug)]
pub struct McEstimate {
    pub estimate: f64,
    pub half_width: f64,
    pub resistant_trials: u64,
    pub trials: u64,
    pub seed: u64,
    pub rng: &'static str,
}

/// Estimates the probability that, after each non-protected link fails
/// independently with probability `kappa`, the surviving network is still
/// `(k1, k2)`-resistant.
///
/// Trial `i` draws from its own generator seeded by the `i`-th output of a
/// SplitMix64 stream over `seed`, so parallel and serial runs agree
/// bit-for-bit for a fixed seed.
pub fn monte_carlo_mean_connectivity(
    net: &TwoLayerNetwork,
    model: &FailureModel,
    k1: u32,
    k2: u32,
) -> Result<McEstimate, ReliabilityError> {
    let survived_counts: Result<Vec<bool>, VerifierError> = (0..model.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(model.seed, trial);
            let mut survivor = TwoLayerNetwork::new(net.n1(), net.n2()).expect("valid layers");
            for edge in net.edges() {
                let failed = matches!(edge.kind, crate::graph::LinkKind::NonProtected)
                    && rng.gen::<f64>() < model.kappa;
                if !failed {
                    survivor.add_edge(edge.u, edge.v, edge.kind).expect("edge copy");
                }
            }
            Ok(is_resistant_mincut(&survivor, k1, k2)?.resistant)
        })
        .collect();
    let resistant_trials = survived_counts?.into_iter().filter(|&ok| ok).count() as u64;
    let estimate = resistant_trials as f64 / model.trials as f64;
    let half_width = 1.96 * (estimate * (1.0 - estimate) / model.trials as f64).sqrt();
    Ok(McEstimate {
        estimate,
        half_width,
        resistant_trials,
        trials: model.trials,
        seed: model.seed,
        rng: RNG_ALGORITHM,
    })
}

/// `i`-th output of the SplitMix64 stream seeded at `seed`.
fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut z = seed.wrapping_add((trial + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^= z >> 31;
    ChaCha8Rng::seed_from_u64(z)
}

/// Infers the strategy shape of a stored network from its protected budget,
/// for closed-form reporting: `p = n-1` reads as the all-protected tree,
/// `p = n2-1` as the type-2 tree shape, `p = 0` as all-non-protected.
pub fn infer_strategy(net: &TwoLayerNetwork) -> Option<StrategyKind> {
    let p = net.protected_count();
    if p == net.n() - 1 && net.non_protected_count() == 0 {
        Some(StrategyKind::SNM1)
    } else if p == net.n2() - 1 && p > 0 {
        Some(StrategyKind::SN2M1)
    } else if p == 0 {
        Some(StrategyKind::S0)
    } else {
        None
    }
}

//! Robustness of a built network to shifted threat levels, and the k2 sweep
//! exhibiting the switch between the all-non-protected shape and the
//! protected type-2 tree with its cost plateau.

use rayon::prelude::*;
use thiserror::Error;

use crate::bounds::Rational;
use crate::designer::{design, DesignError, DesignParams, DesignResult, StrategyKind};
use crate::verifier::{is_resistant_mincut, VerifierError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RobustnessError {
    #[error("robust ranges are defined for the three named shapes, got {0:?}")]
    UnsupportedStrategy(StrategyKind),
    #[error("network failed verification at claimed-robust point (k1={k1}, k2={k2})")]
    RangeVerificationFailed { k1: u32, k2: u32 },
    #[error(transparent)]
    Verifier(#[from] VerifierError),
}

/// Threat-level intervals over which the built network stays resistant
/// without modification. Each interval starts at the base level; `None`
/// upper ends mean unbounded.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RobustRange {
    pub strategy: StrategyKind,
    pub base_k1: u32,
    pub base_k2: u32,
    pub k1_max: Option<u32>,
    pub k2_max: Option<u32>,
}

impl RobustRange {
    pub fn covers(&self, k1: u32, k2: u32) -> bool {
        k1 >= self.base_k1
            && k2 >= self.base_k2
            && self.k1_max.is_none_or(|max| k1 <= max)
            && self.k2_max.is_none_or(|max| k2 <= max)
    }
}

/// Derives the robust range of a design and spot-verifies it: the
/// all-protected tree has nothing to attack and tolerates any levels; the
/// type-2-tree shape tolerates any `k2' >= k2` at fixed `k1`; the tight
/// all-non-protected shape is claimed only at its base point.
///
/// Up to 20 sampled `(k1', k2')` points inside the claimed range are
/// re-verified against the built network before the range is returned.
pub fn robust_range(result: &DesignResult) -> Result<RobustRange, RobustnessError> {
    let (base_k1, base_k2) = (result.params.k1, result.params.k2);
    let range = match result.strategy {
        StrategyKind::SNM1 => RobustRange {
            strategy: result.strategy,
            base_k1,
            base_k2,
            k1_max: None,
            k2_max: None,
        },
        StrategyKind::SN2M1 => RobustRange {
            strategy: result.strategy,
            base_k1,
            base_k2,
            k1_max: Some(base_k1),
            k2_max: None,
        },
        StrategyKind::S0 => RobustRange {
            strategy: result.strategy,
            base_k1,
            base_k2,
            k1_max: Some(base_k1),
            k2_max: Some(base_k2),
        },
        StrategyKind::FallbackBestOfThree => {
            return Err(RobustnessError::UnsupportedStrategy(result.strategy))
        }
    };
    for (k1, k2) in sample_points(&range) {
        if !is_resistant_mincut(&result.network, k1, k2)?.resistant {
            return Err(RobustnessError::RangeVerificationFailed { k1, k2 });
        }
    }
    Ok(range)
}

fn sample_points(range: &RobustRange) -> Vec<(u32, u32)> {
    let k1_steps: &[u32] = if range.k1_max.is_some() { &[0] } else { &[0, 1, 2, 5] };
    let k2_steps: &[u32] = if range.k2_max.is_some() { &[0] } else { &[0, 1, 2, 5, 10] };
    let mut points = Vec::new();
    for &dk1 in k1_steps {
        for &dk2 in k2_steps {
            let (k1, k2) = (range.base_k1 + dk1, range.base_k2 + dk2);
            if k1 <= k2 && points.len() < 20 {
                points.push((k1, k2));
            }
        }
    }
    points
}

/// One row of a k2 sweep. Rows that fail keep their error text so the sweep
/// can continue past them.
#[derive(Clone, PartialEq, Debug)]
pub struct SweepRow {
    pub k2: u32,
    pub outcome: Result<SweepEntry, String>,
}

#[derive(Clone, PartialEq, Debug)]
pub struct SweepEntry {
    pub strategy: StrategyKind,
    pub p: u32,
    pub m: u32,
    pub cost: Rational,
    pub result: DesignResult,
}

/// Runs a full design per requested `k2` (ascending, deduplicated). Rows are
/// evaluated independently and may run in parallel; emission order is fixed.
pub fn sweep_k2(
    n1: u32,
    n2: u32,
    k1: u32,
    c_p: Rational,
    c_np: Rational,
    k2_values: &[u32],
) -> Vec<SweepRow> {
    let mut values = k2_values.to_vec();
    values.sort_unstable();
    values.dedup();
    values
        .into_par_iter()
        .map(|k2| {
            let outcome = DesignParams::new(n1, n2, k1, k2, c_p, c_np)
                .and_then(|params| design(&params))
                .map(|result| SweepEntry {
                    strategy: result.strategy,
                    p: result.p(),
                    m: result.m(),
                    cost: result.cost,
                    result,
                })
                .map_err(|e: DesignError| e.to_string());
            SweepRow { k2, outcome }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designer::StrategyKind::{S0, SN2M1, SNM1};

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn designed(n1: u32, n2: u32, k1: u32, k2: u32, ratio: i64) -> DesignResult {
        let params =
            DesignParams::new(n1, n2, k1, k2, rat(ratio, 1), rat(1, 1)).unwrap();
        design(&params).unwrap()
    }

    #[test]
    fn protected_tree_is_robust_everywhere() {
        let result = designed(20, 5, 5, 9, 3);
        assert_eq!(result.strategy, SNM1);
        let range = robust_range(&result).unwrap();
        assert_eq!(range.k1_max, None);
        assert_eq!(range.k2_max, None);
        assert!(range.covers(8, 14));
        assert!(is_resistant_mincut(&result.network, 8, 14).unwrap().resistant);
    }

    #[test]
    fn type2_tree_shape_is_robust_upward_in_k2_only() {
        let result = designed(20, 5, 5, 9, 5);
        assert_eq!(result.strategy, SN2M1);
        let range = robust_range(&result).unwrap();
        assert_eq!(range.k1_max, Some(5));
        assert_eq!(range.k2_max, None);
        assert!(range.covers(5, 14));
        assert!(!range.covers(6, 14));
        // Bumping k1 genuinely breaks the tight Harary layer.
        assert!(!is_resistant_mincut(&result.network, 6, 9).unwrap().resistant);
    }

    #[test]
    fn all_non_protected_shape_is_tight_to_its_base_point() {
        let result = designed(6, 2, 1, 2, 9);
        assert_eq!(result.strategy, S0);
        let range = robust_range(&result).unwrap();
        assert_eq!(range.k1_max, Some(1));
        assert_eq!(range.k2_max, Some(2));
        // The verifier rejects the bumped type-2 requirement.
        assert!(!is_resistant_mincut(&result.network, 1, 3).unwrap().resistant);
    }

    #[test]
    fn sweep_reproduces_strategy_switch_and_plateau() {
        let k2s: Vec<u32> = (5..=14).collect();
        let rows = sweep_k2(20, 10, 5, rat(5, 1), rat(1, 1), &k2s);
        assert_eq!(rows.len(), 10);
        let mut previous_cost: Option<Rational> = None;
        let mut plateau_network: Option<String> = None;
        for row in &rows {
            let entry = row.outcome.as_ref().unwrap();
            if row.k2 <= 8 {
                assert_eq!(entry.strategy, S0, "k2={}", row.k2);
                if let Some(prev) = previous_cost {
                    assert!(entry.cost > prev, "cost must rise through k2={}", row.k2);
                }
            } else {
                assert_eq!(entry.strategy, SN2M1, "k2={}", row.k2);
                assert_eq!(entry.p, 9);
                let json = serde_json::to_string(&entry.result.network).unwrap();
                if let Some(first) = &plateau_network {
                    assert_eq!(&json, first, "plateau networks must be byte-identical");
                    assert_eq!(Some(entry.cost), previous_cost);
                } else {
                    plateau_network = Some(json);
                }
            }
            previous_cost = Some(entry.cost);
        }
    }

    #[test]
    fn sweep_rows_match_direct_design_calls() {
        let rows = sweep_k2(6, 2, 1, rat(2, 1), rat(1, 1), &[2, 3, 4]);
        for row in rows {
            let entry = row.outcome.unwrap();
            let direct = designed(6, 2, 1, row.k2, 2);
            assert_eq!(entry.strategy, direct.strategy);
            assert_eq!(entry.cost, direct.cost);
            assert_eq!(entry.result.network, direct.network);
        }
    }

    #[test]
    fn sweep_records_row_errors_and_continues() {
        // k2 = 0 < k1 = 1 violates the threat ordering for that row only.
        let rows = sweep_k2(6, 2, 1, rat(2, 1), rat(1, 1), &[0, 2]);
        assert!(rows[0].outcome.is_err());
        assert!(rows[1].outcome.is_ok());
    }

    #[test]
    fn single_element_sweep_equals_direct_design() {
        let rows = sweep_k2(20, 5, 5, rat(5, 1), rat(1, 1), &[9]);
        let entry = rows[0].outcome.as_ref().unwrap();
        let direct = designed(20, 5, 5, 9, 5);
        assert_eq!(entry.result.network, direct.network);
        assert_eq!(entry.strategy, direct.strategy);
    }
}

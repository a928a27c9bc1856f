//! Strategy selection and construction of minimum-cost resistant networks.
//!
//! Three candidate shapes cover the optimum: an all-protected spanning tree
//! (`p = n-1`), a protected type-2 tree plus a Harary layer over the type-1
//! side (`p = n2-1`), and an all-non-protected double Harary (`p = 0`). Which
//! one is cheapest depends on the cost ratio `cP/cNP` against two threshold
//! slopes of the bound curve.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::Rational;
use crate::graph::{GraphError, LinkKind, NodeId, TwoLayerNetwork};
use crate::harary::{harary_edges, overlay, HararyError, HararySpec};
use crate::verifier::{is_resistant_mincut, VerifierError};

/// Ceiling on node counts and threat levels accepted by the designer;
/// matches the graph and bounds layers.
pub const MAX_DESIGN_INPUT: u32 = crate::graph::MAX_LAYER_NODES;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DesignError {
    #[error("threat levels must satisfy k1 <= k2, got k1={k1}, k2={k2}")]
    ThreatOrder { k1: u32, k2: u32 },
    #[error("both layers must be non-empty, got n1={n1}, n2={n2}")]
    EmptyLayer { n1: u32, n2: u32 },
    #[error("inputs capped at {MAX_DESIGN_INPUT}, got n1={n1}, n2={n2}, k1={k1}, k2={k2}")]
    InputTooLarge { n1: u32, n2: u32, k1: u32, k2: u32 },
    #[error("link costs must satisfy 0 < cNP <= cP, got cP={cp}, cNP={cnp}")]
    CostOrder { cp: Rational, cnp: Rational },
    #[error(
        "p = n2-1 cannot reach the bound: needs k1+1 <= n1, got k1={k1}, n1={n1}"
    )]
    HararyTooSmall { k1: u32, n1: u32 },
    #[error("the p = 0 construction needs odd k1, got k1={k1}")]
    K1MustBeOdd { k1: u32 },
    #[error(
        "the p = 0 construction needs n2 > k2-k1 for the type-2 layer, got n2={n2}, k2-k1={gap}"
    )]
    TooFewType2 { n2: u32, gap: u32 },
    #[error(
        "the p = 0 construction needs n2*(k1+1)/2 <= n1 to space out type-2 nodes, \
         got n2*(k1+1)/2={needed}, n1={n1}"
    )]
    TooFewType1 { needed: u32, n1: u32 },
    #[error("no candidate strategy is feasible and verifiable for these parameters")]
    NoFeasibleCandidate,
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Harary(#[from] HararyError),
    #[error(transparent)]
    Verifier(#[from] VerifierError),
}

/// A full problem instance: layer sizes, threat levels and link costs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DesignParams {
    pub n1: u32,
    pub n2: u32,
    pub k1: u32,
    pub k2: u32,
    pub c_p: Rational,
    pub c_np: Rational,
}

impl DesignParams {
    pub fn new(
        n1: u32,
        n2: u32,
        k1: u32,
        k2: u32,
        c_p: Rational,
        c_np: Rational,
    ) -> Result<Self, DesignError> {
        if n1 == 0 || n2 == 0 {
            return Err(DesignError::EmptyLayer { n1, n2 });
        }
        if [n1, n2, k1, k2].iter().any(|&v| v > MAX_DESIGN_INPUT) {
            return Err(DesignError::InputTooLarge { n1, n2, k1, k2 });
        }
        if k1 > k2 {
            return Err(DesignError::ThreatOrder { k1, k2 });
        }
        if c_np <= Rational::from_integer(0) || c_np > c_p {
            return Err(DesignError::CostOrder { cp: c_p, cnp: c_np });
        }
        Ok(Self { n1, n2, k1, k2, c_p, c_np })
    }

    pub fn n(&self) -> u32 {
        self.n1 + self.n2
    }

    /// `cP / cNP`, the slope of the iso-cost lines.
    pub fn cost_ratio(&self) -> Rational {
        self.c_p / self.c_np
    }

    /// The regularity conditions under which the threshold selection is
    /// provably optimal: enough nodes per layer, type-2 nodes sparse enough
    /// to spread out, odd `k1` and even `n2 (k2+1)`.
    pub fn selection_preconditions_hold(&self) -> bool {
        let (n1, n2, k1, k2) =
            (u64::from(self.n1), u64::from(self.n2), u64::from(self.k1), u64::from(self.k2));
        n1 >= k1 + 1
            && n2 >= k2 - k1 + 1
            && n2 * (k1 + 1) <= 2 * n1
            && k1 % 2 == 1
            && (n2 * (k2 + 1)) % 2 == 0
    }

    /// Total cost of a network under these unit costs.
    pub fn cost_of(&self, net: &TwoLayerNetwork) -> Rational {
        self.c_p * Rational::from_integer(i64::from(net.protected_count()))
            + self.c_np * Rational::from_integer(i64::from(net.non_protected_count()))
    }
}

/// The candidate shapes, named by their protected-link budget.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum StrategyKind {
    /// All links non-protected, `p = 0`.
    S0,
    /// Protected tree over the type-2 layer, `p = n2 - 1`.
    SN2M1,
    /// All-protected spanning tree, `p = n - 1`.
    SNM1,
    /// Marker for selection outside the provable-optimality region: the
    /// cheapest verified candidate wins, no optimality claim attached.
    FallbackBestOfThree,
}

impl StrategyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            StrategyKind::S0 => "S0",
            StrategyKind::SN2M1 => "SN2M1",
            StrategyKind::SNM1 => "SNM1",
            StrategyKind::FallbackBestOfThree => "FallbackBestOfThree",
        }
    }
}

/// Parameter regime of the threshold rule.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Regime {
    /// `1 + k1 - n (k2 - k1) <= 0`: the bound curve is convex at C and all
    /// three candidates can win.
    I,
    /// Otherwise (equal or nearly equal threat levels). `small_n2` reports
    /// whether `n2 < (1 + k1) / (1 + k1 - n1 (k2 - k1))`, in which case the
    /// regime-I rule still applies; otherwise the middle candidate never
    /// wins and only the A-E slope matters.
    II { small_n2: bool },
}

pub fn classify_regime(params: &DesignParams) -> Regime {
    let (n1, n2, k1, k2) =
        (i64::from(params.n1), i64::from(params.n2), i64::from(params.k1), i64::from(params.k2));
    let n = n1 + n2;
    if 1 + k1 - n * (k2 - k1) <= 0 {
        Regime::I
    } else {
        // In this regime 1 + k1 - n1 (k2 - k1) > 0, so the comparison is safe
        // as a cross-multiplication.
        let small_n2 = n2 * (1 + k1 - n1 * (k2 - k1)) < 1 + k1;
        Regime::II { small_n2 }
    }
}

/// The cost-ratio switch points, as exact rationals.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Thresholds {
    /// Slope of segment C-E: below it the all-protected tree wins.
    pub t1: Rational,
    /// Slope of segment A-C: at or above it the all-non-protected shape wins.
    /// Undefined when `n2 = 1` (the A and C shapes coincide at `p = 0`).
    pub t2: Option<Rational>,
    /// Slope of the A-E chord, governing regime II.
    pub t_ae: Rational,
}

pub fn thresholds(params: &DesignParams) -> Thresholds {
    let (n1, n2, k1, k2) =
        (i64::from(params.n1), i64::from(params.n2), i64::from(params.k1), i64::from(params.k2));
    let t1 = Ratio::new((k1 + 1) * (n1 + 1), 2 * n1);
    let t2 = (n2 >= 2).then(|| Ratio::new((k2 + 1) * (n2 - 1) + (k2 - k1), 2 * (n2 - 1)));
    let t_ae = Ratio::new(n1 * (k1 + 1) + n2 * (k2 + 1), 2 * (n1 + n2 - 1));
    Thresholds { t1, t2, t_ae }
}

/// All-protected spanning path over the `n = n1 + n2` nodes: `n - 1`
/// protected links, zero non-protected links. Resistant to any threat level.
pub fn build_s_nm1(n1: u32, n2: u32) -> Result<TwoLayerNetwork, DesignError> {
    let mut net = TwoLayerNetwork::new(n1, n2)?;
    for i in 1..n1 + n2 {
        net.add_edge(NodeId(i), NodeId(i + 1), LinkKind::Protected)?;
    }
    Ok(net)
}

/// Protected path over the type-2 nodes plus a `(k1+1)`-Harary network over
/// the type-1 nodes and the single type-2 node `n1 + 1`, all non-protected:
/// `n2 - 1` protected and `ceil((n1+1)(k1+1)/2)` non-protected links.
pub fn build_s_n2m1(n1: u32, n2: u32, k1: u32) -> Result<TwoLayerNetwork, DesignError> {
    if n1 == 0 || n2 == 0 {
        return Err(DesignError::EmptyLayer { n1, n2 });
    }
    if k1 + 1 > n1 {
        return Err(DesignError::HararyTooSmall { k1, n1 });
    }
    let mut net = TwoLayerNetwork::new(n1, n2)?;
    for i in n1 + 1..n1 + n2 {
        net.add_edge(NodeId(i), NodeId(i + 1), LinkKind::Protected)?;
    }
    let sequence: Vec<NodeId> = (1..=n1 + 1).map(NodeId).collect();
    for (u, v) in harary_edges(&HararySpec::new(sequence, k1 + 1)?) {
        net.add_edge(u, v, LinkKind::NonProtected)?;
    }
    Ok(net)
}

/// All-non-protected construction reaching the `p = 0` bound exactly:
/// type-2 nodes are interposed into the node ordering one after every
/// `(k1+1)/2` type-1 nodes (leftover type-1 nodes appended), a
/// `(k1+1)`-Harary network is laid over the full ordering and a
/// `(k2-k1)`-Harary network over the type-2 nodes is overlaid on top.
///
/// The spacing keeps type-2 nodes farther apart than the base Harary reach,
/// so the base holds no type-2-to-type-2 link and the overlay is disjoint;
/// this is validated during construction.
pub fn build_s0(n1: u32, n2: u32, k1: u32, k2: u32) -> Result<TwoLayerNetwork, DesignError> {
    if n1 == 0 || n2 == 0 {
        return Err(DesignError::EmptyLayer { n1, n2 });
    }
    if k1 % 2 == 0 {
        return Err(DesignError::K1MustBeOdd { k1 });
    }
    if n2 <= k2 - k1 {
        return Err(DesignError::TooFewType2 { n2, gap: k2 - k1 });
    }
    let spacing = (k1 + 1) / 2;
    if u64::from(n2) * u64::from(spacing) > u64::from(n1) {
        return Err(DesignError::TooFewType1 { needed: n2.saturating_mul(spacing), n1 });
    }
    if k1 + 1 > n1 {
        return Err(DesignError::HararyTooSmall { k1, n1 });
    }

    let n = n1 + n2;
    let mut ordering = Vec::with_capacity(n as usize);
    let mut type1 = 1..=n1;
    for type2 in n1 + 1..=n {
        ordering.extend(type1.by_ref().take(spacing as usize).map(NodeId));
        ordering.push(NodeId(type2));
    }
    ordering.extend(type1.map(NodeId));

    let base = harary_edges(&HararySpec::new(ordering, k1 + 1)?);
    for &(u, v) in &base {
        if u.0 > n1 && v.0 > n1 {
            return Err(DesignError::Internal(format!(
                "base layer links type-2 nodes {u} and {v}; spacing argument violated"
            )));
        }
    }
    let edges = if k2 > k1 {
        let type2_seq: Vec<NodeId> = (n1 + 1..=n).map(NodeId).collect();
        let extra = harary_edges(&HararySpec::new(type2_seq, k2 - k1)?);
        overlay(&base, &extra)?
    } else {
        base
    };
    TwoLayerNetwork::from_edges(n1, n2, edges.into_iter().map(|(u, v)| (u.0, v.0, LinkKind::NonProtected)))
        .map_err(Into::into)
}

/// Generalized all-non-protected candidate for parameters where [`build_s0`]
/// does not apply (type-2 layer too dense, or even `k1`): type-2 nodes are
/// spread as evenly as the ordering allows, and the type-2 overlay is built
/// over a strided re-ordering chosen so it shares no pair with the base
/// layer. Returns `None` when no stride yields a disjoint overlay.
///
/// Carries no tightness or optimality claim; callers verify the result.
pub fn build_s0_spread(n1: u32, n2: u32, k1: u32, k2: u32) -> Option<TwoLayerNetwork> {
    let n = n1 + n2;
    if n1 == 0 || n2 == 0 || k2 < k1 || k1 + 1 > n - 1 {
        return None;
    }
    let d = k2 - k1;
    if d > 0 && (n2 < 2 || d > n2 - 1) {
        return None;
    }

    let type2_positions: Vec<u64> =
        (0..u64::from(n2)).map(|j| j * u64::from(n) / u64::from(n2)).collect();
    let mut ordering = Vec::with_capacity(n as usize);
    let mut next_t1 = 1;
    let mut next_t2 = n1 + 1;
    for pos in 0..u64::from(n) {
        if type2_positions.binary_search(&pos).is_ok() {
            ordering.push(NodeId(next_t2));
            next_t2 += 1;
        } else {
            ordering.push(NodeId(next_t1));
            next_t1 += 1;
        }
    }

    let base = harary_edges(&HararySpec::new(ordering, k1 + 1).ok()?);
    if d == 0 {
        return network_from_np(n1, n2, base);
    }

    let type2: Vec<NodeId> = (n1 + 1..=n).map(NodeId).collect();
    for stride in (1..n2).filter(|&s| gcd(s, n2) == 1) {
        let strided: Vec<NodeId> =
            (0..n2).map(|i| type2[((i as u64 * u64::from(stride)) % u64::from(n2)) as usize]).collect();
        let extra = harary_edges(&HararySpec::new(strided, d).ok()?);
        if let Ok(edges) = overlay(&base, &extra) {
            return network_from_np(n1, n2, edges);
        }
    }
    None
}

fn network_from_np(n1: u32, n2: u32, edges: Vec<(NodeId, NodeId)>) -> Option<TwoLayerNetwork> {
    TwoLayerNetwork::from_edges(
        n1,
        n2,
        edges.into_iter().map(|(u, v)| (u.0, v.0, LinkKind::NonProtected)),
    )
    .ok()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// A selected, constructed and verified design.
#[derive(Clone, PartialEq, Debug)]
pub struct DesignResult {
    pub params: DesignParams,
    pub strategy: StrategyKind,
    pub network: TwoLayerNetwork,
    pub cost: Rational,
    /// True only when the selection preconditions held, so the threshold rule
    /// is provably optimal. Fallback winners carry `false`.
    pub optimal_claimed: bool,
    /// Every returned result has passed the min-cut verifier.
    pub verified: bool,
}

impl DesignResult {
    pub fn p(&self) -> u32 {
        self.network.protected_count()
    }

    pub fn m(&self) -> u32 {
        self.network.non_protected_count()
    }

    pub fn report(&self) -> DesignReport {
        DesignReport {
            strategy: self.strategy,
            p: self.p(),
            m: self.m(),
            cost: CostJson { num: *self.cost.numer(), den: *self.cost.denom() },
            optimal_claimed: self.optimal_claimed,
            network: self.network.clone(),
        }
    }
}

/// Machine-readable form emitted by the `design` command.
#[derive(Serialize)]
pub struct DesignReport {
    pub strategy: StrategyKind,
    pub p: u32,
    pub m: u32,
    pub cost: CostJson,
    pub optimal_claimed: bool,
    pub network: TwoLayerNetwork,
}

#[derive(Serialize)]
pub struct CostJson {
    pub num: i64,
    pub den: i64,
}

/// Selects, builds and verifies the minimum-cost design.
///
/// Inside the precondition region the strategy follows the regime/threshold
/// rule and the result is marked provably optimal. Outside it, every
/// candidate whose own construction preconditions hold is built and
/// verified, and the cheapest verified one is returned (ties go to fewer
/// protected links), with no optimality claim.
pub fn design(params: &DesignParams) -> Result<DesignResult, DesignError> {
    // Re-validate so results from hand-assembled params stay trustworthy.
    let params = DesignParams::new(params.n1, params.n2, params.k1, params.k2, params.c_p, params.c_np)?;
    if params.selection_preconditions_hold() {
        let ratio = params.cost_ratio();
        let th = thresholds(&params);
        let kind = match classify_regime(&params) {
            Regime::I | Regime::II { small_n2: true } => {
                let t2 = th.t2.ok_or_else(|| {
                    DesignError::Internal(
                        "regime needing T2 reached with n2 = 1".to_string(),
                    )
                })?;
                if ratio >= t2 {
                    StrategyKind::S0
                } else if ratio >= th.t1 {
                    StrategyKind::SN2M1
                } else {
                    StrategyKind::SNM1
                }
            }
            Regime::II { small_n2: false } => {
                if ratio >= th.t_ae {
                    StrategyKind::S0
                } else {
                    StrategyKind::SNM1
                }
            }
        };
        let network = build_kind(&params, kind)?;
        let verdict = is_resistant_mincut(&network, params.k1, params.k2)?;
        if !verdict.resistant {
            return Err(DesignError::Internal(format!(
                "selected strategy {} failed verification",
                kind.as_str()
            )));
        }
        let cost = params.cost_of(&network);
        return Ok(DesignResult {
            params,
            strategy: kind,
            network,
            cost,
            optimal_claimed: true,
            verified: true,
        });
    }

    let mut best: Option<DesignResult> = None;
    for (kind, network) in fallback_candidates(&params)? {
        if !is_resistant_mincut(&network, params.k1, params.k2)?.resistant {
            continue;
        }
        let cost = params.cost_of(&network);
        let p = network.protected_count();
        let better = match &best {
            None => true,
            Some(cur) => cost < cur.cost || (cost == cur.cost && p < cur.p()),
        };
        if better {
            best = Some(DesignResult {
                params: params.clone(),
                strategy: kind,
                network,
                cost,
                optimal_claimed: false,
                verified: true,
            });
        }
    }
    best.ok_or(DesignError::NoFeasibleCandidate)
}

fn build_kind(params: &DesignParams, kind: StrategyKind) -> Result<TwoLayerNetwork, DesignError> {
    match kind {
        StrategyKind::SNM1 => build_s_nm1(params.n1, params.n2),
        StrategyKind::SN2M1 => build_s_n2m1(params.n1, params.n2, params.k1),
        StrategyKind::S0 => build_s0(params.n1, params.n2, params.k1, params.k2),
        StrategyKind::FallbackBestOfThree => Err(DesignError::Internal(
            "FallbackBestOfThree is a selection marker, not a buildable shape".to_string(),
        )),
    }
}

fn strict_s0_applies(params: &DesignParams) -> bool {
    params.k1 % 2 == 1
        && params.n2 > params.k2 - params.k1
        && u64::from(params.n2) * u64::from(params.k1 + 1) <= 2 * u64::from(params.n1)
        && params.k1 + 1 <= params.n1
}

fn fallback_candidates(
    params: &DesignParams,
) -> Result<Vec<(StrategyKind, TwoLayerNetwork)>, DesignError> {
    let mut out = Vec::with_capacity(3);
    out.push((StrategyKind::SNM1, build_s_nm1(params.n1, params.n2)?));
    if params.k1 + 1 <= params.n1 {
        out.push((StrategyKind::SN2M1, build_s_n2m1(params.n1, params.n2, params.k1)?));
    }
    if strict_s0_applies(params) {
        out.push((StrategyKind::S0, build_s0(params.n1, params.n2, params.k1, params.k2)?));
    } else if let Some(net) = build_s0_spread(params.n1, params.n2, params.k1, params.k2) {
        out.push((StrategyKind::S0, net));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::lower_bound;
    use crate::verifier::is_resistant_bruteforce;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn params(n1: u32, n2: u32, k1: u32, k2: u32, ratio: (i64, i64)) -> DesignParams {
        DesignParams::new(n1, n2, k1, k2, rat(ratio.0, ratio.1), rat(1, 1)).unwrap()
    }

    #[test]
    fn validation_rejects_bad_instances() {
        assert!(matches!(
            DesignParams::new(0, 1, 1, 1, rat(1, 1), rat(1, 1)),
            Err(DesignError::EmptyLayer { .. })
        ));
        assert!(matches!(
            DesignParams::new(2, 1, 3, 1, rat(1, 1), rat(1, 1)),
            Err(DesignError::ThreatOrder { .. })
        ));
        assert!(matches!(
            DesignParams::new(2, 1, 1, 1, rat(1, 1), rat(2, 1)),
            Err(DesignError::CostOrder { .. })
        ));
        assert!(matches!(
            DesignParams::new(2, 1, 1, 1, rat(1, 1), rat(0, 1)),
            Err(DesignError::CostOrder { .. })
        ));
    }

    #[test]
    fn validation_rejects_oversized_counts() {
        assert!(matches!(
            DesignParams::new(u32::MAX, 1, 1, 1, rat(1, 1), rat(1, 1)),
            Err(DesignError::InputTooLarge { .. })
        ));
        assert!(matches!(
            DesignParams::new(4, 2, 1, MAX_DESIGN_INPUT + 1, rat(1, 1), rat(1, 1)),
            Err(DesignError::InputTooLarge { .. })
        ));
    }

    #[test]
    fn moderately_large_instance_designs_and_verifies() {
        // Inside the provable region at a size well past the worked examples.
        let result = design(&params(60, 12, 5, 9, (7, 1))).unwrap();
        assert_eq!(result.strategy, StrategyKind::S0);
        assert!(result.optimal_claimed);
        assert_eq!(
            u64::from(result.m()),
            (60 * 6 + 12 * 10 + 1) / 2 // ceil of the degree sum halved
        );
    }

    #[test]
    fn regime_classification() {
        assert_eq!(classify_regime(&params(20, 5, 5, 9, (3, 1))), Regime::I);
        assert_eq!(classify_regime(&params(5, 3, 1, 3, (3, 1))), Regime::I);
        assert_eq!(
            classify_regime(&params(4, 2, 2, 2, (2, 1))),
            Regime::II { small_n2: false }
        );
    }

    #[test]
    fn threshold_values_are_exact() {
        let th = thresholds(&params(20, 5, 5, 9, (3, 1)));
        assert_eq!(th.t1, rat(63, 20));
        assert_eq!(th.t2, Some(rat(11, 2)));

        let th = thresholds(&params(20, 10, 5, 9, (5, 1)));
        assert_eq!(th.t2, Some(rat(47, 9)));

        let th = thresholds(&params(4, 2, 1, 1, (2, 1)));
        assert_eq!(th.t_ae, rat(6, 5));

        let th = thresholds(&params(6, 1, 2, 4, (2, 1)));
        assert_eq!(th.t2, None);
    }

    #[test]
    fn protected_tree_shape() {
        let net = build_s_nm1(20, 5).unwrap();
        assert_eq!(net.protected_count(), 24);
        assert_eq!(net.non_protected_count(), 0);
        let tiny = build_s_nm1(1, 1).unwrap();
        assert_eq!(tiny.protected_count(), 1);
        // Resistant at any threat level: nothing is attackable.
        assert!(is_resistant_bruteforce(&net, 7, 11, None).unwrap().resistant);
    }

    #[test]
    fn type2_tree_plus_harary_shape() {
        let net = build_s_n2m1(20, 5, 5).unwrap();
        assert_eq!(net.protected_count(), 4);
        assert_eq!(net.non_protected_count(), 63);

        let small = build_s_n2m1(2, 2, 1).unwrap();
        assert_eq!(small.protected_count(), 1);
        assert_eq!(small.non_protected_count(), 3);
        assert_eq!(small.edge_kind(NodeId(3), NodeId(4)), Some(LinkKind::Protected));
        for (u, v) in [(1, 2), (1, 3), (2, 3)] {
            assert_eq!(small.edge_kind(NodeId(u), NodeId(v)), Some(LinkKind::NonProtected));
        }
        // Condition (b) holds at any k2: the type-2 layer is protected-connected.
        assert!(is_resistant_bruteforce(&small, 1, 9, None).unwrap().resistant);

        assert!(matches!(
            build_s_n2m1(2, 2, 2),
            Err(DesignError::HararyTooSmall { k1: 2, n1: 2 })
        ));
    }

    #[test]
    fn all_non_protected_shape_counts() {
        let net = build_s0(20, 5, 5, 9).unwrap();
        assert_eq!(net.protected_count(), 0);
        assert_eq!(net.non_protected_count(), 85);

        let net = build_s0(6, 2, 1, 2).unwrap();
        assert_eq!(net.non_protected_count(), 9); // ceil((6*2 + 2*3)/2)
        assert!(is_resistant_bruteforce(&net, 1, 2, None).unwrap().resistant);
    }

    #[test]
    fn all_non_protected_rejects_broken_preconditions() {
        assert!(matches!(build_s0(20, 5, 4, 9), Err(DesignError::K1MustBeOdd { k1: 4 })));
        assert!(matches!(
            build_s0(20, 2, 1, 4),
            Err(DesignError::TooFewType2 { n2: 2, gap: 3 })
        ));
        assert!(matches!(
            build_s0(20, 10, 5, 8),
            Err(DesignError::TooFewType1 { needed: 30, n1: 20 })
        ));
        assert!(matches!(
            build_s0(2, 1, 3, 3),
            Err(DesignError::HararyTooSmall { k1: 3, n1: 2 })
        ));
    }

    #[test]
    fn overlay_disjointness_across_precondition_sweep() {
        for n1 in 1..=15u32 {
            for n2 in 1..=4u32 {
                for k1 in [1u32, 3, 5] {
                    for k2 in k1..=k1 + 3 {
                        let applies = k1 % 2 == 1
                            && n2 > k2 - k1
                            && n2 * (k1 + 1) <= 2 * n1
                            && k1 + 1 <= n1;
                        if !applies {
                            continue;
                        }
                        let net = build_s0(n1, n2, k1, k2).unwrap_or_else(|e| {
                            panic!("build_s0({n1},{n2},{k1},{k2}) failed: {e}")
                        });
                        let expected =
                            lower_bound(n1, n2, k1, k2, 0).unwrap().min_links;
                        assert_eq!(net.non_protected_count(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn spread_candidate_matches_strict_counts_when_dense() {
        // Type-2 layer too dense for the strict spacing: the spread variant
        // still yields a verifiable all-non-protected candidate.
        let net = build_s0_spread(20, 10, 5, 8).unwrap();
        assert_eq!(net.protected_count(), 0);
        assert_eq!(net.non_protected_count(), 105);
        assert!(is_resistant_mincut(&net, 5, 8).unwrap().resistant);

        // Degenerate overlay degree: base Harary only.
        let net = build_s0_spread(20, 10, 5, 5).unwrap();
        assert_eq!(net.non_protected_count(), 90);

        // Overlay impossible: complete type-2 overlay collides with the base.
        assert!(build_s0_spread(20, 10, 5, 14).is_none());
    }

    #[test]
    fn design_reproduces_case_study_strategies() {
        let cases = [
            ((3, 1), StrategyKind::SNM1, 24, 0),
            ((5, 1), StrategyKind::SN2M1, 4, 63),
            ((7, 1), StrategyKind::S0, 0, 85),
        ];
        for ((num, den), kind, p, m) in cases {
            let result = design(&params(20, 5, 5, 9, (num, den))).unwrap();
            assert_eq!(result.strategy, kind);
            assert_eq!(result.p(), p);
            assert_eq!(result.m(), m);
            assert!(result.optimal_claimed);
            assert!(result.verified);
        }
    }

    #[test]
    fn design_switches_to_middle_candidate_when_type2_layer_grows() {
        let result = design(&params(20, 10, 5, 9, (5, 1))).unwrap();
        assert_eq!(result.strategy, StrategyKind::SN2M1);
        assert_eq!(result.p(), 9);
        assert_eq!(result.m(), 63);
        assert!(!result.optimal_claimed);
    }

    #[test]
    fn boundary_ratios_follow_the_closed_rule() {
        // Exactly at T2 the all-non-protected shape is selected.
        let result = design(&params(20, 5, 5, 9, (11, 2))).unwrap();
        assert_eq!(result.strategy, StrategyKind::S0);
        // Exactly at T1 the middle shape is selected.
        let result = design(&params(20, 5, 5, 9, (63, 20))).unwrap();
        assert_eq!(result.strategy, StrategyKind::SN2M1);
        // Just below T1 the protected tree wins.
        let result = design(&params(20, 5, 5, 9, (62, 20))).unwrap();
        assert_eq!(result.strategy, StrategyKind::SNM1);
    }

    #[test]
    fn scaling_costs_does_not_change_the_choice() {
        for &(num, den) in &[(3i64, 1i64), (5, 1), (7, 1), (11, 2)] {
            let base = design(&params(20, 5, 5, 9, (num, den))).unwrap().strategy;
            for scale in [2i64, 7, 100] {
                let scaled = DesignParams::new(
                    20,
                    5,
                    5,
                    9,
                    rat(num * scale, den),
                    rat(scale, 1),
                )
                .unwrap();
                assert_eq!(design(&scaled).unwrap().strategy, base);
            }
        }
    }

    #[test]
    fn fallback_marks_results_unclaimed_and_verified() {
        // Even k1 breaks the precondition set; fallback still produces a
        // verified result.
        let result = design(&params(6, 2, 2, 3, (2, 1))).unwrap();
        assert!(!result.optimal_claimed);
        assert!(result.verified);
        assert_eq!(
            result.cost,
            result.params.cost_of(&result.network)
        );
    }

    #[test]
    fn fallback_ties_prefer_fewer_protected_links() {
        // With cP = cNP and n1 = 1, the all-protected path and the
        // type-2-tree shape cost the same total; the tie resolves toward
        // fewer protected links.
        let p = params(1, 3, 0, 0, (1, 1));
        let result = design(&p).unwrap();
        assert_eq!(result.cost, rat(3, 1));
        assert_eq!(result.strategy, StrategyKind::SN2M1);
        assert_eq!(result.p(), 2);
    }

    #[test]
    fn single_type2_node_degenerates_cleanly() {
        // With n2 = 1 the p=0 and p=n2-1 shapes coincide; T2 is undefined and
        // the A-E slope alone governs the provable selection.
        let th = thresholds(&params(4, 1, 1, 1, (1, 1)));
        assert_eq!(th.t2, None);
        assert_eq!(th.t_ae, rat(5, 4));

        let cheap_protection = design(&params(4, 1, 1, 1, (1, 1))).unwrap();
        assert_eq!(cheap_protection.strategy, StrategyKind::SNM1);
        assert!(cheap_protection.optimal_claimed);

        let pricey_protection = design(&params(4, 1, 1, 1, (2, 1))).unwrap();
        assert_eq!(pricey_protection.strategy, StrategyKind::S0);
        assert_eq!(pricey_protection.m(), 5);
        assert!(pricey_protection.optimal_claimed);
    }

    #[test]
    fn design_result_counts_match_bound_at_selected_budget() {
        let result = design(&params(20, 5, 5, 9, (5, 1))).unwrap();
        let bound = lower_bound(20, 5, 5, 9, result.p()).unwrap();
        assert_eq!(result.m(), bound.min_links);
    }
}

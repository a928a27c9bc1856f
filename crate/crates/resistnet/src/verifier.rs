//! Exact resistance verification: a min-cut certificate and an independent
//! brute-force attacker. A network is (k1, k2)-resistant when (a) removing
//! any k1 non-protected links leaves all nodes mutually attainable and (b)
//! removing any k2 non-protected links leaves the type-2 nodes mutually
//! attainable.

use itertools::Itertools;
use thiserror::Error;

use crate::graph::{GraphError, LinkKind, MinCut, NodeId, TwoLayerNetwork};

/// Default ceiling on the number of attack subsets brute force may enumerate.
pub const DEFAULT_ENUM_BUDGET: u64 = 20_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum VerifierError {
    #[error("threat levels must satisfy k1 <= k2, got k1={k1}, k2={k2}")]
    ThreatOrder { k1: u32, k2: u32 },
    #[error("enumeration needs {required} subsets, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VerifyMethod {
    MinCut,
    BruteForce,
}

/// Verdict plus, when the network fails, a concrete attack demonstrating it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResistanceReport {
    pub resistant: bool,
    pub condition_a_ok: bool,
    pub condition_b_ok: bool,
    /// An attack of size <= max(k1, k2) over non-protected links whose
    /// removal violates (a) or (b). Minimum-size for the min-cut method.
    pub witness_attack: Option<Vec<(NodeId, NodeId)>>,
    pub method: VerifyMethod,
}

fn check_order(k1: u32, k2: u32) -> Result<(), VerifierError> {
    if k1 > k2 {
        return Err(VerifierError::ThreatOrder { k1, k2 });
    }
    Ok(())
}

/// Decides resistance through pairwise minimum cuts.
///
/// Condition (a) holds iff every node pair has non-protected min-cut at least
/// k1+1 (or unseparable); condition (b) restricts the pairs to type-2 nodes
/// against k2+1. Cuts are anchored at one node per condition: the smallest
/// anchored cut equals the smallest cut over all pairs, since any separating
/// partition puts the anchor on one side.
pub fn is_resistant_mincut(
    net: &TwoLayerNetwork,
    k1: u32,
    k2: u32,
) -> Result<ResistanceReport, VerifierError> {
    check_order(k1, k2)?;
    let mut witness = None;

    let anchor = NodeId(1);
    let mut condition_a_ok = true;
    for t in net.nodes().skip(1) {
        if let MinCut::Finite { value, cut } = net.min_cut_non_protected(anchor, t)? {
            if value <= k1 {
                condition_a_ok = false;
                debug_assert!(!net.is_connected(&cut, None).unwrap());
                witness = Some(cut);
                break;
            }
        }
    }

    let mut condition_b_ok = true;
    let type2: Vec<NodeId> = net.type2_nodes().collect();
    if let Some((&anchor2, rest)) = type2.split_first() {
        for &t in rest {
            if let MinCut::Finite { value, cut } = net.min_cut_non_protected(anchor2, t)? {
                if value <= k2 {
                    condition_b_ok = false;
                    debug_assert!(!net.is_connected(&cut, Some(&type2)).unwrap());
                    if witness.is_none() {
                        witness = Some(cut);
                    }
                    break;
                }
            }
        }
    }

    Ok(ResistanceReport {
        resistant: condition_a_ok && condition_b_ok,
        condition_a_ok,
        condition_b_ok,
        witness_attack: witness,
        method: VerifyMethod::MinCut,
    })
}

/// Decides resistance by enumerating attacks outright.
///
/// Only subsets of size exactly min(k, |E_NP|) are tried per condition:
/// putting links back never disconnects a graph, so a violating smaller
/// attack extends to a violating one of full size.
pub fn is_resistant_bruteforce(
    net: &TwoLayerNetwork,
    k1: u32,
    k2: u32,
    budget: Option<u64>,
) -> Result<ResistanceReport, VerifierError> {
    check_order(k1, k2)?;
    let budget = budget.unwrap_or(DEFAULT_ENUM_BUDGET);
    let np: Vec<(NodeId, NodeId)> = net.non_protected_edges().collect();
    let m = np.len() as u32;
    let size_a = k1.min(m);
    let size_b = k2.min(m);
    let required = binomial(m, size_a) + binomial(m, size_b);
    if required > budget as u128 {
        return Err(VerifierError::BudgetExceeded { required, budget });
    }

    let searcher = AttackSearcher::new(net);
    let type2: Vec<NodeId> = net.type2_nodes().collect();

    let violation_a = searcher.find_disconnecting(&np, size_a as usize, None);
    let violation_b = if type2.len() >= 2 {
        searcher.find_disconnecting(&np, size_b as usize, Some(&type2))
    } else {
        None
    };

    let condition_a_ok = violation_a.is_none();
    let condition_b_ok = violation_b.is_none();
    Ok(ResistanceReport {
        resistant: condition_a_ok && condition_b_ok,
        condition_a_ok,
        condition_b_ok,
        witness_attack: violation_a.or(violation_b),
        method: VerifyMethod::BruteForce,
    })
}

/// Smallest attack of size at most `k` that splits the full node set, if any.
pub fn worst_attack(
    net: &TwoLayerNetwork,
    k: u32,
    budget: Option<u64>,
) -> Result<Option<Vec<(NodeId, NodeId)>>, VerifierError> {
    let budget = budget.unwrap_or(DEFAULT_ENUM_BUDGET);
    let np: Vec<(NodeId, NodeId)> = net.non_protected_edges().collect();
    let m = np.len() as u32;
    let max_size = k.min(m);
    let required: u128 = (0..=max_size).map(|s| binomial(m, s)).sum();
    if required > budget as u128 {
        return Err(VerifierError::BudgetExceeded { required, budget });
    }
    let searcher = AttackSearcher::new(net);
    for size in 0..=max_size {
        if let Some(attack) = searcher.find_disconnecting(&np, size as usize, None) {
            return Ok(Some(attack));
        }
    }
    Ok(None)
}

/// Shared scratch for subset enumeration: adjacency indexed by non-protected
/// edge id, so each candidate attack is a cheap mark/sweep instead of a set
/// rebuild.
struct AttackSearcher {
    /// adj[node] = (neighbor, id of the NP edge, or usize::MAX for protected)
    adj: Vec<Vec<(u32, usize)>>,
    n: u32,
}

impl AttackSearcher {
    fn new(net: &TwoLayerNetwork) -> Self {
        let mut adj = vec![Vec::new(); net.n() as usize + 1];
        let mut np_index = 0usize;
        for edge in net.edges() {
            let id = match edge.kind {
                LinkKind::NonProtected => {
                    np_index += 1;
                    np_index - 1
                }
                LinkKind::Protected => usize::MAX,
            };
            adj[edge.u.0 as usize].push((edge.v.0, id));
            adj[edge.v.0 as usize].push((edge.u.0, id));
        }
        Self { adj, n: net.n() }
    }

    /// First subset of exactly `size` non-protected links (lexicographic by
    /// edge index) whose removal disconnects the target set.
    fn find_disconnecting(
        &self,
        np: &[(NodeId, NodeId)],
        size: usize,
        targets: Option<&[NodeId]>,
    ) -> Option<Vec<(NodeId, NodeId)>> {
        let mut removed = vec![false; np.len()];
        let mut visited = vec![false; self.n as usize + 1];
        let mut stack = Vec::with_capacity(self.n as usize);
        for subset in (0..np.len()).combinations(size) {
            for &i in &subset {
                removed[i] = true;
            }
            let connected = self.connected(&removed, targets, &mut visited, &mut stack);
            for &i in &subset {
                removed[i] = false;
            }
            if !connected {
                return Some(subset.into_iter().map(|i| np[i]).collect());
            }
        }
        None
    }

    fn connected(
        &self,
        removed: &[bool],
        targets: Option<&[NodeId]>,
        visited: &mut [bool],
        stack: &mut Vec<u32>,
    ) -> bool {
        visited.fill(false);
        let start = targets.map_or(1, |t| t[0].0);
        visited[start as usize] = true;
        stack.clear();
        stack.push(start);
        while let Some(u) = stack.pop() {
            for &(v, id) in &self.adj[u as usize] {
                if !visited[v as usize] && (id == usize::MAX || !removed[id]) {
                    visited[v as usize] = true;
                    stack.push(v);
                }
            }
        }
        match targets {
            Some(t) => t.iter().all(|node| visited[node.0 as usize]),
            None => (1..=self.n).all(|node| visited[node as usize]),
        }
    }
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k as u128 {
        result = result.saturating_mul(u128::from(n) - i) / (i + 1);
    }
    result
}

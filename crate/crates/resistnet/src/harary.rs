//! Harary networks: the minimum-link graphs reaching a prescribed edge
//! connectivity, built over an arbitrary node sequence.

use thiserror::Error;

use crate::graph::NodeId;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HararyError {
    #[error("need at least 2 nodes, got {0}")]
    TooFewNodes(usize),
    #[error("node {0} appears twice in the sequence")]
    DuplicateNode(u32),
    #[error("degree target {degree} out of range 1..={max} for {n} nodes")]
    DegreeOutOfRange { degree: u32, max: u32, n: u32 },
    #[error("edge ({u}, {v}) present in both overlay operands")]
    DuplicateEdge { u: u32, v: u32 },
}

/// A request for a Harary network of degree `k + 1` over an ordered node
/// sequence. The construction is position-relative: link distances are taken
/// along the sequence, then mapped back to the sequence's node ids.
#[derive(Clone, Debug)]
pub struct HararySpec {
    sequence: Vec<NodeId>,
    degree_target: u32,
}

impl HararySpec {
    pub fn new(sequence: Vec<NodeId>, degree_target: u32) -> Result<Self, HararyError> {
        let n = sequence.len();
        if n < 2 {
            return Err(HararyError::TooFewNodes(n));
        }
        let mut seen = sequence.iter().map(|id| id.0).collect::<Vec<_>>();
        seen.sort_unstable();
        if let Some(dup) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(HararyError::DuplicateNode(dup[0]));
        }
        if degree_target < 1 || degree_target > n as u32 - 1 {
            return Err(HararyError::DegreeOutOfRange {
                degree: degree_target,
                max: n as u32 - 1,
                n: n as u32,
            });
        }
        Ok(Self { sequence, degree_target })
    }

    pub fn sequence(&self) -> &[NodeId] {
        &self.sequence
    }

    pub fn degree_target(&self) -> u32 {
        self.degree_target
    }
}

/// Builds the Harary network for `spec`, returning exactly
/// `ceil(degree_target * n / 2)` unordered pairs.
///
/// Writing the degree target as `d`:
/// - `d = 2m`: each position links to its `m` nearest positions on either
///   side of the cycle.
/// - `d = 2m + 1`, even `n`: additionally each position `i < n/2` links to
///   the diametrically opposite position `i + n/2`.
/// - `d = 2m + 1`, odd `n`: positions `0..=n/2` link to `i + ceil(n/2)`
///   (mod n); one node ends up with degree `d + 1`.
///
/// The resulting graph survives removal of any `d - 1` links.
pub fn harary_edges(spec: &HararySpec) -> Vec<(NodeId, NodeId)> {
    let n = spec.sequence.len();
    let d = spec.degree_target as usize;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity((d * n + 1) / 2);
    for dist in 1..=d / 2 {
        for i in 0..n {
            pairs.push((i, (i + dist) % n));
        }
    }
    if d % 2 == 1 {
        if n % 2 == 0 {
            for i in 0..n / 2 {
                pairs.push((i, i + n / 2));
            }
        } else {
            let chord = n / 2 + 1;
            for i in 0..=n / 2 {
                pairs.push((i, (i + chord) % n));
            }
        }
    }
    pairs
        .into_iter()
        .map(|(a, b)| order(spec.sequence[a], spec.sequence[b]))
        .collect()
}

fn order(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Disjoint union of two edge sets. Any pair occurring in both operands is a
/// violated construction precondition and is reported as an error.
pub fn overlay(
    base: &[(NodeId, NodeId)],
    extra: &[(NodeId, NodeId)],
) -> Result<Vec<(NodeId, NodeId)>, HararyError> {
    let base_set: std::collections::BTreeSet<(NodeId, NodeId)> =
        base.iter().map(|&(u, v)| order(u, v)).collect();
    let mut out: Vec<(NodeId, NodeId)> = base.to_vec();
    for &(u, v) in extra {
        let key = order(u, v);
        if base_set.contains(&key) {
            return Err(HararyError::DuplicateEdge { u: key.0 .0, v: key.1 .0 });
        }
        out.push((u, v));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{LinkKind, MinCut, TwoLayerNetwork};

    fn ids(range: std::ops::RangeInclusive<u32>) -> Vec<NodeId> {
        range.map(NodeId).collect()
    }

    fn build(n: u32, degree: u32) -> Vec<(NodeId, NodeId)> {
        harary_edges(&HararySpec::new(ids(1..=n), degree).unwrap())
    }

    fn as_network(n: u32, edges: &[(NodeId, NodeId)]) -> TwoLayerNetwork {
        // Layer split is irrelevant for connectivity checks.
        TwoLayerNetwork::from_edges(
            n - 1,
            1,
            edges.iter().map(|&(u, v)| (u.0, v.0, LinkKind::NonProtected)),
        )
        .unwrap()
    }

    /// Independent cut oracle: smallest edge subset of size <= limit whose
    /// removal disconnects s from t, by exhaustive enumeration.
    fn brute_min_cut(
        net: &TwoLayerNetwork,
        s: NodeId,
        t: NodeId,
        limit: usize,
    ) -> Option<usize> {
        use itertools::Itertools;
        let edges: Vec<(NodeId, NodeId)> = net.non_protected_edges().collect();
        for size in 0..=limit.min(edges.len()) {
            for subset in edges.iter().copied().combinations(size) {
                if !net.is_connected(&subset, Some(&[s, t])).unwrap() {
                    return Some(size);
                }
            }
        }
        None
    }

    #[test]
    fn counts_match_the_minimum_link_bound() {
        assert_eq!(build(5, 3).len(), 8); // n=5, k=2
        assert_eq!(build(7, 4).len(), 14); // n=7, k=3
        assert_eq!(
            build(4, 2),
            vec![
                (NodeId(1), NodeId(2)),
                (NodeId(2), NodeId(3)),
                (NodeId(3), NodeId(4)),
                (NodeId(1), NodeId(4)),
            ]
        );
    }

    #[test]
    fn edge_count_formula_holds_up_to_200_nodes() {
        for n in 2..=200u32 {
            for degree in 1..n.min(9) {
                let edges = build(n, degree);
                let expected = (u64::from(degree) * u64::from(n) + 1) / 2;
                assert_eq!(edges.len() as u64, expected, "n={n} degree={degree}");
                // No duplicate pairs.
                let mut set = edges.clone();
                set.sort_unstable();
                set.dedup();
                assert_eq!(set.len(), edges.len(), "n={n} degree={degree}");
            }
        }
    }

    #[test]
    fn degrees_stay_within_one_of_target() {
        for n in 2..=40u32 {
            for degree in 1..n.min(8) {
                let edges = build(n, degree);
                let mut deg = vec![0u32; n as usize + 1];
                for (u, v) in edges {
                    deg[u.0 as usize] += 1;
                    deg[v.0 as usize] += 1;
                }
                let bumped = deg[1..]
                    .iter()
                    .map(|&d| {
                        assert!(d == degree || d == degree + 1, "n={n} degree={degree}");
                        u32::from(d == degree + 1)
                    })
                    .sum::<u32>();
                if degree * n % 2 == 0 {
                    assert_eq!(bumped, 0, "even product must be regular: n={n} degree={degree}");
                } else {
                    assert_eq!(bumped, 1, "odd product bumps exactly one node: n={n} degree={degree}");
                }
            }
        }
    }

    #[test]
    fn nine_node_degree_four_connectivity_is_exactly_four() {
        let edges = build(9, 4);
        let net = as_network(9, &edges);
        for t in 2..=9 {
            match net.min_cut_non_protected(NodeId(1), NodeId(t)).unwrap() {
                MinCut::Finite { value, .. } => assert!(value >= 4),
                MinCut::Infinite => panic!("no protected links present"),
            }
        }
        // Exactly 4: some pair is separated by a 4-subset, none by 3.
        assert_eq!(brute_min_cut(&net, NodeId(1), NodeId(2), 4), Some(4));
    }

    #[test]
    fn six_node_degree_three_pairwise_cut_is_three() {
        let edges = build(6, 3);
        let net = as_network(6, &edges);
        for s in 1..=6u32 {
            for t in s + 1..=6 {
                assert_eq!(brute_min_cut(&net, NodeId(s), NodeId(t), 3), Some(3));
            }
        }
    }

    #[test]
    fn spec_validation() {
        assert_eq!(
            HararySpec::new(vec![NodeId(1)], 1).unwrap_err(),
            HararyError::TooFewNodes(1)
        );
        assert_eq!(
            HararySpec::new(ids(1..=4), 4).unwrap_err(),
            HararyError::DegreeOutOfRange { degree: 4, max: 3, n: 4 }
        );
        assert_eq!(
            HararySpec::new(vec![NodeId(1), NodeId(2), NodeId(1)], 1).unwrap_err(),
            HararyError::DuplicateNode(1)
        );
    }

    #[test]
    fn sequence_relative_construction_maps_positions() {
        let seq = vec![NodeId(7), NodeId(3), NodeId(9), NodeId(5)];
        let edges = harary_edges(&HararySpec::new(seq, 2).unwrap());
        assert_eq!(
            edges,
            vec![
                (NodeId(3), NodeId(7)),
                (NodeId(3), NodeId(9)),
                (NodeId(5), NodeId(9)),
                (NodeId(5), NodeId(7)),
            ]
        );
    }

    #[test]
    fn overlay_unions_disjoint_sets_and_rejects_duplicates() {
        let base = vec![(NodeId(1), NodeId(2)), (NodeId(2), NodeId(3))];
        let extra = vec![(NodeId(3), NodeId(4))];
        let merged = overlay(&base, &extra).unwrap();
        assert_eq!(merged.len(), 3);
        let clash = vec![(NodeId(3), NodeId(2))];
        assert_eq!(
            overlay(&base, &clash).unwrap_err(),
            HararyError::DuplicateEdge { u: 2, v: 3 }
        );
    }
}

//! Two-layer network data model: typed nodes, protected/non-protected links,
//! contraction into a quotient graph, connectivity queries and the
//! non-protected min-cut primitive used by the verifier.

use std::collections::BTreeMap;
use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// 1-based node index. Nodes `1..=n1` are type 1, nodes `n1+1..=n1+n2` are type 2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Whether a link can be removed by an attacker.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum LinkKind {
    /// Immune to attack and failure; never removable.
    #[serde(rename = "P")]
    Protected,
    /// Removable by attack or random failure.
    #[serde(rename = "NP")]
    NonProtected,
}

/// An undirected link, stored with `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Edge {
    pub u: NodeId,
    pub v: NodeId,
    pub kind: LinkKind,
}

/// Ceiling on per-layer node counts; keeps every internal count product
/// comfortably inside 64-bit arithmetic.
pub const MAX_LAYER_NODES: u32 = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("both layers must be non-empty, got n1={n1}, n2={n2}")]
    EmptyLayer { n1: u32, n2: u32 },
    #[error("layer sizes capped at {MAX_LAYER_NODES}, got n1={n1}, n2={n2}")]
    LayerTooLarge { n1: u32, n2: u32 },
    #[error("node {node} out of range 1..={n}")]
    NodeOutOfRange { node: u32, n: u32 },
    #[error("self-loop at node {node}")]
    SelfLoop { node: u32 },
    #[error("duplicate edge ({u}, {v})")]
    DuplicateEdge { u: u32, v: u32 },
    #[error("removed edge ({u}, {v}) is not a non-protected link of the network")]
    RemovedNotNonProtected { u: u32, v: u32 },
    #[error("min-cut endpoints must differ, got node {node} twice")]
    IdenticalEndpoints { node: u32 },
}

/// A two-layer network: `n1` type-1 nodes, `n2` type-2 nodes, and a set of
/// protected / non-protected links over them.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLayerNetwork {
    n1: u32,
    n2: u32,
    edges: BTreeMap<(NodeId, NodeId), LinkKind>,
}

fn ordered(u: NodeId, v: NodeId) -> (NodeId, NodeId) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl TwoLayerNetwork {
    /// Empty network over `n1` type-1 and `n2` type-2 nodes.
    pub fn new(n1: u32, n2: u32) -> Result<Self, GraphError> {
        if n1 == 0 || n2 == 0 {
            return Err(GraphError::EmptyLayer { n1, n2 });
        }
        if n1 > MAX_LAYER_NODES || n2 > MAX_LAYER_NODES {
            return Err(GraphError::LayerTooLarge { n1, n2 });
        }
        Ok(Self { n1, n2, edges: BTreeMap::new() })
    }

    pub fn from_edges<I>(n1: u32, n2: u32, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32, LinkKind)>,
    {
        let mut net = Self::new(n1, n2)?;
        for (u, v, kind) in edges {
            net.add_edge(NodeId(u), NodeId(v), kind)?;
        }
        Ok(net)
    }

    /// Inserts an undirected link. A node pair carries at most one link,
    /// of exactly one kind.
    pub fn add_edge(&mut self, u: NodeId, v: NodeId, kind: LinkKind) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop { node: u.0 });
        }
        for node in [u, v] {
            if node.0 < 1 || node.0 > self.n() {
                return Err(GraphError::NodeOutOfRange { node: node.0, n: self.n() });
            }
        }
        let key = ordered(u, v);
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge { u: key.0 .0, v: key.1 .0 });
        }
        self.edges.insert(key, kind);
        Ok(())
    }

    pub fn n1(&self) -> u32 {
        self.n1
    }

    pub fn n2(&self) -> u32 {
        self.n2
    }

    /// Total node count `n = n1 + n2`.
    pub fn n(&self) -> u32 {
        self.n1 + self.n2
    }

    pub fn is_type2(&self, node: NodeId) -> bool {
        node.0 > self.n1
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> {
        (1..=self.n()).map(NodeId)
    }

    pub fn type2_nodes(&self) -> impl Iterator<Item = NodeId> {
        (self.n1 + 1..=self.n()).map(NodeId)
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().map(|(&(u, v), &kind)| Edge { u, v, kind })
    }

    pub fn edge_kind(&self, u: NodeId, v: NodeId) -> Option<LinkKind> {
        self.edges.get(&ordered(u, v)).copied()
    }

    pub fn protected_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges
            .iter()
            .filter(|(_, &k)| k == LinkKind::Protected)
            .map(|(&pair, _)| pair)
    }

    pub fn non_protected_edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        self.edges
            .iter()
            .filter(|(_, &k)| k == LinkKind::NonProtected)
            .map(|(&pair, _)| pair)
    }

    /// `p = |E_P|`.
    pub fn protected_count(&self) -> u32 {
        self.protected_edges().count() as u32
    }

    /// `m = |E_NP|`.
    pub fn non_protected_count(&self) -> u32 {
        self.non_protected_edges().count() as u32
    }

    pub fn degree(&self, node: NodeId) -> u32 {
        self.edges.keys().filter(|&&(u, v)| u == node || v == node).count() as u32
    }

    /// True iff every pair of nodes in `restrict_to` (all nodes when `None`)
    /// is joined by a path that avoids the removed links. Every removed pair
    /// must be a non-protected link of the network.
    pub fn is_connected(
        &self,
        removed: &[(NodeId, NodeId)],
        restrict_to: Option<&[NodeId]>,
    ) -> Result<bool, GraphError> {
        let mut removed_keys = Vec::with_capacity(removed.len());
        for &(u, v) in removed {
            let key = ordered(u, v);
            if self.edges.get(&key) != Some(&LinkKind::NonProtected) {
                return Err(GraphError::RemovedNotNonProtected { u: key.0 .0, v: key.1 .0 });
            }
            removed_keys.push(key);
        }
        let adj = self.adjacency();
        let mut visited = vec![false; self.n() as usize + 1];
        let start = match restrict_to {
            Some([]) | Some([_]) => return Ok(true),
            Some(targets) => targets[0],
            None => NodeId(1),
        };
        let mut queue = VecDeque::from([start]);
        visited[start.0 as usize] = true;
        while let Some(u) = queue.pop_front() {
            for &(v, _) in &adj[u.0 as usize] {
                if !visited[v.0 as usize] && !removed_keys.contains(&ordered(u, v)) {
                    visited[v.0 as usize] = true;
                    queue.push_back(v);
                }
            }
        }
        Ok(match restrict_to {
            Some(targets) => targets.iter().all(|t| visited[t.0 as usize]),
            None => self.nodes().all(|t| visited[t.0 as usize]),
        })
    }

    /// Adjacency lists indexed by 1-based node id; entry 0 is unused.
    pub(crate) fn adjacency(&self) -> Vec<Vec<(NodeId, LinkKind)>> {
        let mut adj = vec![Vec::new(); self.n() as usize + 1];
        for (&(u, v), &kind) in &self.edges {
            adj[u.0 as usize].push((v, kind));
            adj[v.0 as usize].push((u, kind));
        }
        adj
    }

    /// GraphViz rendering: protected links bold, non-protected dashed,
    /// type-2 nodes drawn as boxes.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph two_layer_network {\n");
        for node in self.nodes() {
            if self.is_type2(node) {
                out.push_str(&format!("  {} [shape=box];\n", node));
            } else {
                out.push_str(&format!("  {};\n", node));
            }
        }
        for (&(u, v), &kind) in &self.edges {
            let style = match kind {
                LinkKind::Protected => "bold",
                LinkKind::NonProtected => "dashed",
            };
            out.push_str(&format!("  {} -- {} [style={}];\n", u, v, style));
        }
        out.push_str("}\n");
        out
    }

    /// Minimum number of non-protected links whose removal disconnects `s`
    /// from `t`, treating protected links as unremovable.
    ///
    /// Protected links get capacity `n * |E_NP| + 1`, so any flow exceeding
    /// `|E_NP|` certifies that every s-t cut crosses a protected link and the
    /// cut is reported as [`MinCut::Infinite`].
    pub fn min_cut_non_protected(&self, s: NodeId, t: NodeId) -> Result<MinCut, GraphError> {
        if s == t {
            return Err(GraphError::IdenticalEndpoints { node: s.0 });
        }
        for node in [s, t] {
            if node.0 < 1 || node.0 > self.n() {
                return Err(GraphError::NodeOutOfRange { node: node.0, n: self.n() });
            }
        }
        let np_count = self.non_protected_count() as u64;
        let protected_cap = u64::from(self.n()) * np_count + 1;
        let mut flow = FlowNetwork::new(self.n() as usize + 1);
        for (&(u, v), &kind) in &self.edges {
            let cap = match kind {
                LinkKind::Protected => protected_cap,
                LinkKind::NonProtected => 1,
            };
            flow.add_undirected(u.0 as usize, v.0 as usize, cap);
        }
        let value = flow.max_flow(s.0 as usize, t.0 as usize);
        if value > np_count {
            return Ok(MinCut::Infinite);
        }
        let reachable = flow.residual_reachable(s.0 as usize);
        let cut: Vec<(NodeId, NodeId)> = self
            .non_protected_edges()
            .filter(|&(u, v)| reachable[u.0 as usize] != reachable[v.0 as usize])
            .collect();
        debug_assert_eq!(cut.len() as u64, value);
        Ok(MinCut::Finite { value: value as u32, cut })
    }
}

/// Result of [`TwoLayerNetwork::min_cut_non_protected`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MinCut {
    /// `s` and `t` cannot be separated by removing non-protected links.
    Infinite,
    /// A minimum separating set of non-protected links.
    Finite { value: u32, cut: Vec<(NodeId, NodeId)> },
}

impl MinCut {
    pub fn at_least(&self, threshold: u32) -> bool {
        match self {
            MinCut::Infinite => true,
            MinCut::Finite { value, .. } => *value >= threshold,
        }
    }
}

/// Edmonds-Karp max flow over an adjacency list with paired reverse arcs.
struct FlowNetwork {
    heads: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u64>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        Self { heads: vec![Vec::new(); n], to: Vec::new(), cap: Vec::new() }
    }

    fn add_undirected(&mut self, u: usize, v: usize, cap: u64) {
        let e = self.to.len();
        self.to.extend([v, u]);
        self.cap.extend([cap, cap]);
        self.heads[u].push(e);
        self.heads[v].push(e + 1);
    }

    fn max_flow(&mut self, s: usize, t: usize) -> u64 {
        let mut total = 0;
        loop {
            // BFS for a shortest augmenting path.
            let mut parent_edge = vec![usize::MAX; self.heads.len()];
            let mut visited = vec![false; self.heads.len()];
            visited[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.heads[u] {
                    let v = self.to[e];
                    if !visited[v] && self.cap[e] > 0 {
                        visited[v] = true;
                        parent_edge[v] = e;
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !visited[t] {
                return total;
            }
            let mut bottleneck = u64::MAX;
            let mut u = t;
            while u != s {
                let e = parent_edge[u];
                bottleneck = bottleneck.min(self.cap[e]);
                u = self.to[e ^ 1];
            }
            let mut u = t;
            while u != s {
                let e = parent_edge[u];
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                u = self.to[e ^ 1];
            }
            total += bottleneck;
        }
    }

    fn residual_reachable(&self, s: usize) -> Vec<bool> {
        let mut visited = vec![false; self.heads.len()];
        visited[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.heads[u] {
                let v = self.to[e];
                if !visited[v] && self.cap[e] > 0 {
                    visited[v] = true;
                    queue.push_back(v);
                }
            }
        }
        visited
    }
}

/// Quotient graph obtained by contracting every protected link.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ContractedNetwork {
    /// Blocks of the partition, each sorted; blocks ordered by smallest member.
    supernodes: Vec<Vec<NodeId>>,
    /// 1-based node id -> index into `supernodes`.
    block_of: Vec<usize>,
    /// Deduplicated non-protected edges between distinct blocks.
    quotient_edges: Vec<(usize, usize)>,
    nu1: u32,
    nu2: u32,
    nu0: u32,
}

impl ContractedNetwork {
    pub fn block_count(&self) -> u32 {
        self.supernodes.len() as u32
    }

    pub fn supernodes(&self) -> &[Vec<NodeId>] {
        &self.supernodes
    }

    pub fn block_of(&self, node: NodeId) -> usize {
        self.block_of[node.0 as usize]
    }

    pub fn same_block(&self, u: NodeId, v: NodeId) -> bool {
        self.block_of(u) == self.block_of(v)
    }

    pub fn quotient_edges(&self) -> &[(usize, usize)] {
        &self.quotient_edges
    }

    /// Blocks containing only type-1 nodes.
    pub fn nu1(&self) -> u32 {
        self.nu1
    }

    /// Blocks containing only type-2 nodes.
    pub fn nu2(&self) -> u32 {
        self.nu2
    }

    /// Mixed blocks.
    pub fn nu0(&self) -> u32 {
        self.nu0
    }
}

/// Contracts every protected link, merging endpoints into supernodes.
/// Adjacency is preserved: a node is adjacent to a supernode in the quotient
/// iff it was adjacent to any of its members.
pub fn contract(net: &TwoLayerNetwork) -> ContractedNetwork {
    let n = net.n() as usize;
    let mut dsu = UnionFind::new(n + 1);
    for (u, v) in net.protected_edges() {
        dsu.union(u.0 as usize, v.0 as usize);
    }
    // Number blocks in order of their smallest node.
    let mut block_index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut supernodes: Vec<Vec<NodeId>> = Vec::new();
    let mut block_of = vec![usize::MAX; n + 1];
    for node in 1..=n {
        let root = dsu.find(node);
        let idx = *block_index.entry(root).or_insert_with(|| {
            supernodes.push(Vec::new());
            supernodes.len() - 1
        });
        supernodes[idx].push(NodeId(node as u32));
        block_of[node] = idx;
    }
    let (mut nu1, mut nu2, mut nu0) = (0, 0, 0);
    for block in &supernodes {
        let has_t1 = block.iter().any(|&v| !net.is_type2(v));
        let has_t2 = block.iter().any(|&v| net.is_type2(v));
        match (has_t1, has_t2) {
            (true, false) => nu1 += 1,
            (false, true) => nu2 += 1,
            _ => nu0 += 1,
        }
    }
    let mut quotient: Vec<(usize, usize)> = net
        .non_protected_edges()
        .filter_map(|(u, v)| {
            let (a, b) = (block_of[u.0 as usize], block_of[v.0 as usize]);
            (a != b).then(|| (a.min(b), a.max(b)))
        })
        .collect();
    quotient.sort_unstable();
    quotient.dedup();
    ContractedNetwork { supernodes, block_of, quotient_edges: quotient, nu1, nu2, nu0 }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(len: usize) -> Self {
        Self { parent: (0..len).collect(), size: vec![1; len] }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut x = x;
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (mut a, mut b) = (self.find(x), self.find(y));
        if a == b {
            return;
        }
        if self.size[a] < self.size[b] {
            std::mem::swap(&mut a, &mut b);
        }
        self.parent[b] = a;
        self.size[a] += self.size[b];
    }
}

// Canonical JSON form: {"n1": .., "n2": .., "edges": [{"u": .., "v": .., "kind": "P"|"NP"}]}
#[derive(Serialize, Deserialize)]
struct RawNetwork {
    n1: u32,
    n2: u32,
    edges: Vec<Edge>,
}

impl Serialize for TwoLayerNetwork {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        RawNetwork { n1: self.n1, n2: self.n2, edges: self.edges().collect() }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TwoLayerNetwork {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = RawNetwork::deserialize(deserializer)?;
        TwoLayerNetwork::from_edges(
            raw.n1,
            raw.n2,
            raw.edges.into_iter().map(|e| (e.u.0, e.v.0, e.kind)),
        )
        .map_err(serde::de::Error::custom)
    }
}

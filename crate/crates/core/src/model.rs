//! Geometry and occupancy for the two-contour cluster system.
//!
//! The supporter is a pair of rings ("contours") of `n` cells each, glued
//! at two shared points ("nodes"). Node 1 lies between cells 0 and 1 of
//! contour 1 and between cells `d` and `d+1` of contour 2; node 2 lies
//! between cells 0 and 1 of contour 2 and between cells `d` and `d+1` of
//! contour 1. Contour `i` carries a single cluster of `l_i` particles in
//! consecutive cells, all moving one cell per tick in the direction of
//! increasing cell number (mod `n`) unless delayed at a node.
//!
//! A configuration is fully described by the front-cell pair
//! `(alpha1, alpha2)`; the body of each cluster trails behind its front,
//! so cohesion can never be violated.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Validation failures of [`SystemParams::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("NOutOfRange: n = {n}, need n >= 2")]
    NOutOfRange { n: u32 },
    #[error("LengthOutOfRange: l{cluster} = {len}, need 1 <= l{cluster} <= {max} for n = {n}")]
    LengthOutOfRange { cluster: u8, len: u32, n: u32, max: u32 },
    #[error("DOutOfRange: d = {d}, need 1 <= d <= {max} (= floor(n/2))")]
    DOutOfRange { d: u32, max: u32 },
}

/// The quadruple fixing the system: ring size `n`, cluster lengths `l1`,
/// `l2`, and the node offset `d`.
///
/// Enforced bounds: `n >= 2`, `1 <= l_i <= n - 1`, `1 <= d <= n / 2`.
/// No ordering of `l1` versus `l2` is imposed here; the theorem atlas
/// normalizes to `l1 <= l2` internally.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams")]
pub struct SystemParams {
    n: u32,
    l1: u32,
    l2: u32,
    d: u32,
}

#[derive(Deserialize)]
struct RawParams {
    n: u32,
    l1: u32,
    l2: u32,
    d: u32,
}

impl TryFrom<RawParams> for SystemParams {
    type Error = ParamError;
    fn try_from(raw: RawParams) -> Result<Self, ParamError> {
        SystemParams::new(raw.n, raw.l1, raw.l2, raw.d)
    }
}

impl SystemParams {
    pub fn new(n: u32, l1: u32, l2: u32, d: u32) -> Result<Self, ParamError> {
        if n < 2 {
            return Err(ParamError::NOutOfRange { n });
        }
        let max_len = n - 1;
        if l1 < 1 || l1 > max_len {
            return Err(ParamError::LengthOutOfRange { cluster: 1, len: l1, n, max: max_len });
        }
        if l2 < 1 || l2 > max_len {
            return Err(ParamError::LengthOutOfRange { cluster: 2, len: l2, n, max: max_len });
        }
        let max_d = n / 2;
        if d < 1 || d > max_d {
            return Err(ParamError::DOutOfRange { d, max: max_d });
        }
        Ok(SystemParams { n, l1, l2, d })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn l1(&self) -> u32 {
        self.l1
    }

    pub fn l2(&self) -> u32 {
        self.l2
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn len_of(&self, cluster: ClusterId) -> u32 {
        match cluster {
            ClusterId::Cluster1 => self.l1,
            ClusterId::Cluster2 => self.l2,
        }
    }

    /// The same system with the cluster labels exchanged.
    pub fn swapped(&self) -> SystemParams {
        SystemParams { n: self.n, l1: self.l2, l2: self.l1, d: self.d }
    }

    /// True when `cell` is covered by a cluster with the given front and length.
    ///
    /// The body occupies `front, front-1, ..., front-length+1` (mod `n`),
    /// so coverage is `(front - cell) mod n < length`.
    pub(crate) fn covers(&self, front: u32, length: u32, cell: u32) -> bool {
        debug_assert!(front < self.n && cell < self.n);
        (front + self.n - cell) % self.n < length
    }
}

impl fmt::Display for SystemParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} l1={} l2={} d={}", self.n, self.l1, self.l2, self.d)
    }
}

/// One of the two clusters (equivalently, contours).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClusterId {
    Cluster1,
    Cluster2,
}

impl ClusterId {
    pub fn other(self) -> ClusterId {
        match self {
            ClusterId::Cluster1 => ClusterId::Cluster2,
            ClusterId::Cluster2 => ClusterId::Cluster1,
        }
    }

    /// The node sitting between cells 0 and 1 of this cluster's contour.
    pub fn home_node(self) -> NodeId {
        match self {
            ClusterId::Cluster1 => NodeId::Node1,
            ClusterId::Cluster2 => NodeId::Node2,
        }
    }
}

/// One of the two shared points of the contours.
///
/// Node `k` sits between cells 0 and 1 on contour `k` and between cells
/// `d` and `d+1` on the other contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NodeId {
    Node1,
    Node2,
}

/// Front-cell pair `(alpha1, alpha2)`; both indices in `[0, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemState {
    pub alpha1: u32,
    pub alpha2: u32,
}

impl SystemState {
    pub const fn new(alpha1: u32, alpha2: u32) -> Self {
        SystemState { alpha1, alpha2 }
    }

    pub fn front(self, cluster: ClusterId) -> u32 {
        match cluster {
            ClusterId::Cluster1 => self.alpha1,
            ClusterId::Cluster2 => self.alpha2,
        }
    }

    pub fn in_range(self, params: SystemParams) -> bool {
        self.alpha1 < params.n() && self.alpha2 < params.n()
    }
}

impl fmt::Display for SystemState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha1, self.alpha2)
    }
}

/// The cells `{front, front-1, ..., front-length+1}` reduced mod `n`.
pub fn occupied_cells(params: SystemParams, front: u32, length: u32) -> BTreeSet<u32> {
    debug_assert!(front < params.n());
    debug_assert!((1..params.n()).contains(&length));
    (0..length).map(|k| (front + params.n() - k) % params.n()).collect()
}

/// Does `cluster` have a particle in `cell` of its own contour?
pub fn cluster_covers(params: SystemParams, state: SystemState, cluster: ClusterId, cell: u32) -> bool {
    params.covers(state.front(cluster), params.len_of(cluster), cell)
}

/// A cluster occupies a node while it has particles in both cells adjacent
/// to that node on its own contour: cells `{0, 1}` for its home node,
/// cells `{d, d+1}` for the far one.
pub fn occupies_node(params: SystemParams, state: SystemState, cluster: ClusterId, node: NodeId) -> bool {
    let (a, b) = if cluster.home_node() == node {
        (0, 1)
    } else {
        // d + 1 wraps only in the degenerate n = 2, d = 1 ring
        (params.d(), (params.d() + 1) % params.n())
    };
    cluster_covers(params, state, cluster, a) && cluster_covers(params, state, cluster, b)
}

/// A state is acceptable when no node is occupied by both clusters at once.
pub fn is_acceptable(params: SystemParams, state: SystemState) -> bool {
    debug_assert!(state.in_range(params));
    for node in [NodeId::Node1, NodeId::Node2] {
        if occupies_node(params, state, ClusterId::Cluster1, node)
            && occupies_node(params, state, ClusterId::Cluster2, node)
        {
            return false;
        }
    }
    true
}

/// All acceptable states in lexicographic `(alpha1, alpha2)` order.
pub fn enumerate_acceptable_states(params: SystemParams) -> Vec<SystemState> {
    let n = params.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            let s = SystemState::new(a, b);
            if is_acceptable(params, s) {
                out.push(s);
            }
        }
    }
    out
}

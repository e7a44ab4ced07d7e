//! The synchronous one-step transition: movement, node blocking, competition.
//!
//! A cluster is *at* a node when its front particle sits in the cell just
//! before it: cell 0 for its home node, cell `d` for the far node. If the
//! other cluster currently occupies that node, the cluster waits one tick.
//! When both clusters stand at the same node in the same tick a competition
//! occurs; it is won by the cluster entering the arc of not-less length,
//! i.e. the one at cell `d` (its next arc has length `n - d >= d`), and the
//! cluster at cell 0 waits.
//!
//! Both blocking decisions are evaluated against the same input state and
//! the moves are applied together.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{is_acceptable, occupies_node, ClusterId, SystemParams, SystemState};

/// Why a cluster did not move this tick.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum BlockReason {
    /// Front at cell 0; the other cluster straddles this cluster's home node.
    OccupiedOwnNode,
    /// Front at cell `d`; the other cluster straddles its own home node.
    OccupiedFarNode,
    /// Both clusters stand at the same node; this one is at cell 0 and yields.
    LostCompetition,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum DynamicsError {
    #[error("UnacceptableState: both clusters occupy one node in {0}")]
    UnacceptableState(SystemState),
}

/// Outcome of one synchronous tick.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepResult {
    pub next: SystemState,
    pub moved1: bool,
    pub moved2: bool,
    pub block_reason1: Option<BlockReason>,
    pub block_reason2: Option<BlockReason>,
}

fn blocked_unchecked(params: SystemParams, state: SystemState, cluster: ClusterId) -> Option<BlockReason> {
    let other = cluster.other();
    let front = state.front(cluster);
    let d = params.d();
    if front == 0 && occupies_node(params, state, other, cluster.home_node()) {
        return Some(BlockReason::OccupiedOwnNode);
    }
    if front == d && occupies_node(params, state, other, other.home_node()) {
        return Some(BlockReason::OccupiedFarNode);
    }
    if front == 0 && state.front(other) == d {
        return Some(BlockReason::LostCompetition);
    }
    None
}

/// Reason the cluster will wait this tick, or `None` if it moves.
pub fn is_blocked(
    params: SystemParams,
    state: SystemState,
    cluster: ClusterId,
) -> Result<Option<BlockReason>, DynamicsError> {
    if !is_acceptable(params, state) {
        return Err(DynamicsError::UnacceptableState(state));
    }
    Ok(blocked_unchecked(params, state, cluster))
}

/// The movement rules applied without the acceptability guard.
///
/// The blocking predicates are well-defined set-membership tests on any
/// in-range state, so this is total; on acceptable states it agrees with
/// [`step`]. It exists because the source sequences of the collapse regime
/// walk through states the acceptability constraint rules out as starting
/// points, yet every printed transition still follows these rules.
pub fn step_unrestricted(params: SystemParams, state: SystemState) -> StepResult {
    debug_assert!(state.in_range(params));
    let r1 = blocked_unchecked(params, state, ClusterId::Cluster1);
    let r2 = blocked_unchecked(params, state, ClusterId::Cluster2);
    // A competition loser's opponent stands at cell d and cannot itself be
    // blocked there by the loser (that would need a cluster of length n).
    debug_assert!(!(r1 == Some(BlockReason::LostCompetition) && r2.is_some()));
    debug_assert!(!(r2 == Some(BlockReason::LostCompetition) && r1.is_some()));

    let n = params.n();
    let advance = |front: u32, blocked: bool| if blocked { front } else { (front + 1) % n };
    let next = SystemState::new(advance(state.alpha1, r1.is_some()), advance(state.alpha2, r2.is_some()));
    StepResult {
        next,
        moved1: r1.is_none(),
        moved2: r2.is_none(),
        block_reason1: r1,
        block_reason2: r2,
    }
}

/// One synchronous tick from an acceptable state.
pub fn step(params: SystemParams, state: SystemState) -> Result<StepResult, DynamicsError> {
    if !is_acceptable(params, state) {
        return Err(DynamicsError::UnacceptableState(state));
    }
    let result = step_unrestricted(params, state);
    debug_assert!(
        is_acceptable(params, result.next),
        "step left acceptability: {state} -> {}",
        result.next
    );
    Ok(result)
}

/// States `[s_0, ..., s_horizon]` with `s_0 = initial`.
pub fn trajectory(
    params: SystemParams,
    initial: SystemState,
    horizon: usize,
) -> Result<Vec<SystemState>, DynamicsError> {
    let mut out = Vec::with_capacity(horizon + 1);
    out.push(initial);
    let mut cur = initial;
    for _ in 0..horizon {
        cur = step(params, cur)?.next;
        out.push(cur);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u32, l1: u32, l2: u32, d: u32) -> SystemParams {
        SystemParams::new(n, l1, l2, d).unwrap()
    }

    #[test]
    fn block_reasons() {
        let p = params(12, 2, 4, 4);
        assert_eq!(
            is_blocked(p, SystemState::new(0, 6), ClusterId::Cluster1),
            Ok(Some(BlockReason::OccupiedOwnNode))
        );
        assert_eq!(is_blocked(p, SystemState::new(0, 8), ClusterId::Cluster1), Ok(None));

        let p = params(10, 8, 9, 3);
        let s = SystemState::new(3, 3);
        assert_eq!(is_blocked(p, s, ClusterId::Cluster1), Ok(Some(BlockReason::OccupiedFarNode)));
        assert_eq!(is_blocked(p, s, ClusterId::Cluster2), Ok(Some(BlockReason::OccupiedFarNode)));
    }

    #[test]
    fn is_blocked_rejects_unacceptable_state() {
        let p = params(12, 4, 6, 4);
        let s = SystemState::new(2, 6);
        assert_eq!(
            is_blocked(p, s, ClusterId::Cluster1),
            Err(DynamicsError::UnacceptableState(s))
        );
        assert_eq!(step(p, s), Err(DynamicsError::UnacceptableState(s)));
    }

    #[test]
    fn step_examples() {
        let p = params(12, 2, 4, 4);
        let r = step(p, SystemState::new(6, 0)).unwrap();
        assert_eq!(r.next, SystemState::new(7, 1));
        assert!(r.moved1 && r.moved2);

        let r = step(p, SystemState::new(0, 6)).unwrap();
        assert_eq!(r.next, SystemState::new(0, 7));
        assert!(!r.moved1 && r.moved2);
        assert_eq!(r.block_reason1, Some(BlockReason::OccupiedOwnNode));

        let p = params(10, 8, 9, 3);
        let r = step(p, SystemState::new(3, 3)).unwrap();
        assert_eq!(r.next, SystemState::new(3, 3));
        assert!(!r.moved1 && !r.moved2);
    }

    #[test]
    fn competition_at_node_one() {
        // both clusters stand at node 1; the one entering the longer arc wins
        let p = params(10, 1, 2, 3);
        let r = step(p, SystemState::new(0, 3)).unwrap();
        assert_eq!(r.next, SystemState::new(0, 4));
        assert_eq!(r.block_reason1, Some(BlockReason::LostCompetition));
        assert!(r.moved2);
        assert!(is_acceptable(p, r.next));
    }

    #[test]
    fn competition_at_node_two() {
        // mirrored case: cluster 2 waits at its home node while cluster 1 crosses
        let p = params(12, 2, 4, 4);
        let r = step(p, SystemState::new(4, 0)).unwrap();
        assert_eq!(r.next, SystemState::new(5, 0));
        assert_eq!(r.block_reason2, Some(BlockReason::LostCompetition));
    }

    #[test]
    fn trajectory_free_flow() {
        let p = params(10, 1, 2, 3);
        let t = trajectory(p, SystemState::new(4, 0), 10).unwrap();
        let want: Vec<SystemState> = [
            (4, 0), (5, 1), (6, 2), (7, 3), (8, 4), (9, 5), (0, 6), (1, 7), (2, 8), (3, 9), (4, 0),
        ]
        .iter()
        .map(|&(a, b)| SystemState::new(a, b))
        .collect();
        assert_eq!(t, want);
    }

    #[test]
    fn trajectory_zero_horizon() {
        let p = params(10, 1, 2, 3);
        let s = SystemState::new(4, 0);
        assert_eq!(trajectory(p, s, 0).unwrap(), vec![s]);
    }

    #[test]
    fn trajectory_with_delays_closes_cycle() {
        let p = params(12, 2, 4, 4);
        let t = trajectory(p, SystemState::new(6, 0), 14).unwrap();
        assert_eq!(t.len(), 15);
        assert_eq!(t[0], SystemState::new(6, 0));
        assert_eq!(t[14], SystemState::new(6, 0));
        assert_eq!(t[6], SystemState::new(0, 6));
        assert_eq!(t[7], SystemState::new(0, 7));
        assert_eq!(t[8], SystemState::new(0, 8));
    }
}

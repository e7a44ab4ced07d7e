//! Curated reference trajectories and their replay.
//!
//! Each sequence is a hand-checked walk of the system at fixed parameters.
//! A few transcribed transitions are known-bad — they skip an intermediate
//! state or depart from a fixed point — and are listed per sequence as
//! excluded edges; replay skips exactly those and re-derives every other
//! transition from the movement rules.
//!
//! Replay uses the unrestricted stepper: the collapse-regime walks begin in
//! states where both clusters already straddle a node (no legal start), yet
//! every kept transition still follows the rules.

use contour_sim::{step_unrestricted, SystemParams, SystemState};

/// A transition index excluded from replay, with the reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Misprint {
    /// Index `k` excludes the transition `states[k] -> states[k+1]`.
    pub transition_index: usize,
    pub note: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenSequence {
    pub source: &'static str,
    pub params: SystemParams,
    pub states: Vec<SystemState>,
    pub known_misprints: Vec<Misprint>,
}

fn seq(
    source: &'static str,
    params: (u32, u32, u32, u32),
    states: &[(u32, u32)],
    known_misprints: Vec<Misprint>,
) -> GoldenSequence {
    let (n, l1, l2, d) = params;
    GoldenSequence {
        source,
        params: SystemParams::new(n, l1, l2, d).expect("corpus parameters are valid"),
        states: states.iter().map(|&(a, b)| SystemState::new(a, b)).collect(),
        known_misprints,
    }
}

/// The embedded corpus.
pub fn corpus() -> Vec<GoldenSequence> {
    vec![
        // ── free flow everywhere: (10,1,2,3) ──────────────────────────────
        seq(
            "(10,1,2,3) #1",
            (10, 1, 2, 3),
            &[(4, 0), (5, 1), (6, 2), (7, 3), (8, 4), (9, 5), (0, 6), (1, 7), (2, 8), (3, 9), (4, 0)],
            vec![],
        ),
        seq(
            "(10,1,2,3) #2",
            (10, 1, 2, 3),
            &[(0, 5), (1, 6), (2, 7), (3, 8), (4, 9), (5, 0), (6, 1), (7, 2), (8, 3), (9, 4), (0, 5)],
            vec![],
        ),
        seq(
            "(10,1,2,3) #3",
            (10, 1, 2, 3),
            &[(1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 9), (8, 0), (9, 1), (0, 2), (1, 3)],
            vec![],
        ),
        seq(
            "(10,1,2,3) #4",
            (10, 1, 2, 3),
            &[(3, 2), (4, 3), (5, 4), (6, 5), (7, 6), (8, 7), (9, 8), (0, 9), (1, 0), (2, 1), (3, 2)],
            vec![],
        ),
        // ── free flow or a 14-tick cycle: (12,2,4,4) ──────────────────────
        seq(
            "(12,2,4,4) #1",
            (12, 2, 4, 4),
            &[
                (6, 0), (7, 1), (8, 2), (9, 3), (10, 4), (11, 5), (0, 6), (0, 7), (0, 8), (1, 9),
                (2, 10), (3, 11), (4, 0), (5, 0), (6, 0),
            ],
            vec![],
        ),
        seq(
            "(12,2,4,4) #2",
            (12, 2, 4, 4),
            &[
                (2, 4), (3, 5), (4, 6), (5, 7), (6, 8), (7, 9), (8, 10), (9, 11), (10, 0), (11, 1),
                (0, 2), (1, 3), (2, 4),
            ],
            vec![],
        ),
        seq(
            "(12,2,4,4) #3",
            (12, 2, 4, 4),
            &[
                (4, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 9), (10, 10), (11, 11), (0, 0), (1, 1),
                (2, 2), (3, 3), (4, 4),
            ],
            vec![],
        ),
        // ── two coexisting cycles, 19 and 21 ticks: (18,4,7,4) ────────────
        seq(
            "(18,4,7,4) #1",
            (18, 4, 7, 4),
            &[
                (8, 0), (9, 1), (10, 2), (11, 3), (12, 4), (13, 5), (14, 6), (15, 7), (16, 8),
                (17, 9), (0, 10), (0, 11), (1, 12), (2, 13), (3, 14), (4, 15), (5, 16), (6, 17),
                (7, 0), (8, 0),
            ],
            vec![],
        ),
        seq(
            "(18,4,7,4) #2",
            (18, 4, 7, 4),
            &[
                (4, 4), (4, 6), (4, 7), (5, 8), (6, 9), (7, 10), (8, 11), (9, 12), (10, 13),
                (11, 14), (12, 15), (13, 16), (14, 17), (15, 0), (16, 1), (17, 2), (0, 3), (1, 4),
                (2, 4), (3, 4), (4, 4),
            ],
            vec![Misprint {
                transition_index: 0,
                note: "skips the intermediate state (4,5); the two endpoints are two ticks apart",
            }],
        ),
        // ── long cluster, mixed behavior: (20,3,14,8) ─────────────────────
        seq(
            "(20,3,14,8) #1",
            (20, 3, 14, 8),
            &[
                (11, 0), (12, 1), (13, 2), (14, 3), (15, 4), (16, 5), (17, 6), (18, 7), (19, 8),
                (0, 9), (0, 10), (0, 11), (0, 12), (0, 13), (0, 14), (0, 15), (0, 16), (0, 17),
                (0, 18), (0, 19), (0, 0), (0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7),
                (6, 8), (7, 9), (8, 10), (9, 11), (10, 12), (11, 13), (12, 14), (13, 15), (14, 16),
                (15, 17), (16, 18), (17, 19), (18, 0), (19, 1), (0, 2),
            ],
            vec![Misprint {
                transition_index: 30,
                note: "cluster 1 stands at the far node of (8,10) while cluster 2 straddles it, \
                       so the rules hold it: the successor is (8,11), not (9,11)",
            }],
        ),
        seq(
            "(20,3,14,8) #2",
            (20, 3, 14, 8),
            &[
                (3, 8), (4, 9), (5, 10), (6, 11), (7, 12), (8, 13), (8, 14), (9, 15), (10, 16),
                (11, 17), (12, 18), (13, 19), (14, 0), (15, 1), (16, 2), (17, 3), (18, 4), (19, 5),
                (0, 6), (1, 7), (2, 8), (3, 9), (4, 10), (5, 11), (6, 12), (7, 13), (8, 14),
            ],
            vec![Misprint {
                transition_index: 20,
                note: "cluster 2 stands at a node straddled by cluster 1 in (2,8), so the rules \
                       hold it: the successor is (3,8), not (3,9)",
            }],
        ),
        // ── half-speed short cluster: (12,2,11,3) ─────────────────────────
        seq(
            "(12,2,11,3) #1",
            (12, 2, 11, 3),
            &[
                (5, 0), (6, 1), (7, 2), (8, 3), (9, 4), (10, 5), (11, 6), (0, 7), (0, 8), (0, 9),
                (0, 10), (0, 11), (0, 0), (0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6),
                (3, 7), (3, 8), (3, 9), (3, 10), (3, 11), (4, 0), (5, 0),
            ],
            vec![],
        ),
        // ── v1 = 1/2, v2 = 1: (12,1,10,3) ─────────────────────────────────
        seq(
            "(12,1,10,3) #1",
            (12, 1, 10, 3),
            &[
                (4, 0), (5, 1), (6, 2), (7, 3), (8, 4), (9, 5), (10, 6), (11, 7), (0, 8), (0, 9),
                (0, 10), (0, 11), (0, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5), (3, 6), (3, 7),
                (3, 8), (3, 9), (3, 10), (4, 11), (5, 0), (6, 1), (7, 2), (8, 3), (9, 4), (10, 5),
                (11, 6), (0, 7), (0, 8), (0, 9), (0, 10), (0, 11), (0, 0), (0, 1),
            ],
            vec![],
        ),
        // ── collapse from everywhere: (10,8,9,3) ──────────────────────────
        seq("(10,8,9,3) #1", (10, 8, 9, 3), &[(1, 0), (2, 1), (3, 2), (3, 3)], vec![]),
        seq("(10,8,9,3) #2", (10, 8, 9, 3), &[(0, 2), (1, 3), (2, 3), (3, 3)], vec![]),
        seq(
            "(10,8,9,3) #3",
            (10, 8, 9, 3),
            &[(8, 3), (9, 4), (0, 5), (0, 6), (0, 7), (0, 8), (0, 9), (0, 0), (0, 1), (0, 2)],
            vec![Misprint {
                transition_index: 7,
                note: "(0,0) is a fixed point at these lengths; nothing departs from it",
            }],
        ),
        seq(
            "(10,8,9,3) #4",
            (10, 8, 9, 3),
            &[(3, 9), (4, 0), (5, 0), (6, 0), (7, 0), (8, 0), (9, 0), (0, 0), (1, 0)],
            vec![Misprint {
                transition_index: 7,
                note: "(0,0) is a fixed point at these lengths; nothing departs from it",
            }],
        ),
    ]
}

/// One transition whose replay disagreed with the recorded successor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    pub source: String,
    pub transition_index: usize,
    pub from: SystemState,
    pub recorded: SystemState,
    pub derived: SystemState,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReplayReport {
    pub sequences: usize,
    pub transitions_checked: usize,
    pub transitions_excluded: usize,
    pub failures: Vec<ReplayFailure>,
}

impl ReplayReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Re-derive every non-excluded transition of every sequence.
pub fn replay_golden(corpus: &[GoldenSequence]) -> ReplayReport {
    let mut report = ReplayReport { sequences: corpus.len(), ..Default::default() };
    for g in corpus {
        for k in 0..g.states.len().saturating_sub(1) {
            if g.known_misprints.iter().any(|m| m.transition_index == k) {
                report.transitions_excluded += 1;
                continue;
            }
            report.transitions_checked += 1;
            let derived = step_unrestricted(g.params, g.states[k]).next;
            if derived != g.states[k + 1] {
                report.failures.push(ReplayFailure {
                    source: g.source.to_string(),
                    transition_index: k,
                    from: g.states[k],
                    recorded: g.states[k + 1],
                    derived,
                });
            }
        }
    }
    report
}

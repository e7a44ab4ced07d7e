//! Exhaustive classification of one parameter point.
//!
//! The velocity spectrum is the set of exact velocity pairs attained over
//! all acceptable initial states, with basin sizes and one representative
//! initial state per pair. The scenario label pattern-matches the spectrum
//! against the ten qualitative behavior classes of the system (free motion
//! everywhere, free-or-reduced, collapse everywhere, ...).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::model::{is_acceptable, SystemParams, SystemState};
use crate::orbit::Velocity;

/// One velocity pair with its basin.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpectrumEntry {
    pub velocities: [Velocity; 2],
    /// Lexicographically smallest initial state reaching this pair.
    pub representative_initial: SystemState,
    pub basin_size: u64,
}

/// All velocity pairs attained at one parameter point, entries sorted by pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VelocitySpectrum {
    pub params: SystemParams,
    pub entries: Vec<SpectrumEntry>,
}

impl VelocitySpectrum {
    pub fn velocity_pairs(&self) -> Vec<[Velocity; 2]> {
        self.entries.iter().map(|e| e.velocities).collect()
    }

    pub fn total_basin(&self) -> u64 {
        self.entries.iter().map(|e| e.basin_size).sum()
    }

    /// Canonical text of the velocity set, e.g. `"6/7:6/7|1/1:1/1"`.
    pub fn digest(&self) -> String {
        self.entries
            .iter()
            .map(|e| format!("{}:{}", e.velocities[0], e.velocities[1]))
            .collect::<Vec<_>>()
            .join("|")
    }
}

/// Bulk invariants observed while sweeping all orbits of one parameter point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PointAudit {
    /// Every cycle has both clusters moving or neither.
    pub move_dichotomy: bool,
    /// Every intermediate cycle passes through a delay-end anchor state.
    pub anchor_states: bool,
    /// `step` maps acceptable states to acceptable states.
    pub acceptability_preserved: bool,
    /// Free-motion cycles have a period dividing `n`.
    pub free_period_divides_n: bool,
}

impl PointAudit {
    pub fn all_hold(&self) -> bool {
        self.move_dichotomy
            && self.anchor_states
            && self.acceptability_preserved
            && self.free_period_divides_n
    }
}

/// Analyze every acceptable initial state; group outcomes by velocity pair.
pub fn velocity_spectrum(params: SystemParams) -> VelocitySpectrum {
    spectrum_with_audit(params).0
}

/// [`velocity_spectrum`] plus the invariants checked along the way.
///
/// Orbits share their tails, so instead of re-walking each initial state
/// this computes the successor of every state once and colors the
/// functional graph; each distinct cycle is classified a single time. The
/// grouping is identical to running [`analyze_orbit`] per initial state
/// (the two routes are cross-checked in the property tests) but costs
/// `O(n^2)` per parameter point instead of `O(n^4)`.
pub fn spectrum_with_audit(params: SystemParams) -> (VelocitySpectrum, PointAudit) {
    let n = params.n() as usize;
    let idx = |s: SystemState| s.alpha1 as usize * n + s.alpha2 as usize;

    let mut audit = PointAudit {
        move_dichotomy: true,
        anchor_states: true,
        acceptability_preserved: true,
        free_period_divides_n: true,
    };

    let mut successor: Vec<u32> = Vec::with_capacity(n * n);
    let mut acceptable = vec![false; n * n];
    for a in 0..params.n() {
        for b in 0..params.n() {
            let s = SystemState::new(a, b);
            let next = crate::dynamics::step_unrestricted(params, s).next;
            successor.push(idx(next) as u32);
            if is_acceptable(params, s) {
                acceptable[idx(s)] = true;
            }
        }
    }
    for k in 0..n * n {
        if acceptable[k] {
            audit.acceptability_preserved &= acceptable[successor[k] as usize];
        }
    }

    // Colors: NONE = unvisited, PENDING = on the current walk, otherwise the
    // id of the cycle the state drains into.
    const NONE: u32 = u32::MAX;
    const PENDING: u32 = u32::MAX - 1;
    let mut color = vec![NONE; n * n];
    let mut cycle_velocities: Vec<[Velocity; 2]> = Vec::new();
    let mut groups: BTreeMap<[Velocity; 2], (SystemState, u64)> = BTreeMap::new();
    let mut stack: Vec<u32> = Vec::new();

    let state_of = |k: usize| SystemState::new((k / n) as u32, (k % n) as u32);

    for a in 0..params.n() {
        for b in 0..params.n() {
            let init = SystemState::new(a, b);
            let start = idx(init);
            if !acceptable[start] {
                continue;
            }
            let mut k = start;
            stack.clear();
            while color[k] == NONE {
                color[k] = PENDING;
                stack.push(k as u32);
                k = successor[k] as usize;
            }
            let cycle_id = if color[k] == PENDING {
                // new cycle: walk it once to count moves and check invariants
                let id = cycle_velocities.len() as u32;
                let mut states = Vec::new();
                let mut cur = k;
                loop {
                    states.push(state_of(cur));
                    cur = successor[cur] as usize;
                    if cur == k {
                        break;
                    }
                }
                let period = states.len() as u64;
                let mut moves = [0u64; 2];
                for (i, s) in states.iter().enumerate() {
                    let t = states[(i + 1) % states.len()];
                    moves[0] += u64::from(t.alpha1 != s.alpha1);
                    moves[1] += u64::from(t.alpha2 != s.alpha2);
                }
                let velocities = [Velocity::new(moves[0], period), Velocity::new(moves[1], period)];
                audit.move_dichotomy &=
                    (moves[0] > 0 && moves[1] > 0) || (moves[0] == 0 && moves[1] == 0);
                if moves[0] == period && moves[1] == period {
                    audit.free_period_divides_n &= params.n() as u64 % period == 0;
                } else if moves[0] > 0 || moves[1] > 0 {
                    audit.anchor_states &= cycle_anchors(params).iter().any(|s| states.contains(s));
                }
                cycle_velocities.push(velocities);
                id
            } else {
                color[k]
            };
            for &s in &stack {
                color[s as usize] = cycle_id;
            }
            groups
                .entry(cycle_velocities[cycle_id as usize])
                .and_modify(|(_, count)| *count += 1)
                .or_insert((init, 1));
        }
    }

    let entries = groups
        .into_iter()
        .map(|(velocities, (representative_initial, basin_size))| SpectrumEntry {
            velocities,
            representative_initial,
            basin_size,
        })
        .collect();
    (VelocitySpectrum { params, entries }, audit)
}

/// Delay-end anchor states of intermediate cycles.
fn cycle_anchors(params: SystemParams) -> [SystemState; 4] {
    let n = params.n();
    [
        SystemState::new((params.l1() + params.d()) % n, 0),
        SystemState::new(0, (params.l2() + params.d()) % n),
        SystemState::new(params.l1(), params.d()),
        SystemState::new(params.d(), params.l2()),
    ]
}

/// The ten qualitative behavior classes, plus `Unknown` for anything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScenarioLabel {
    /// 1: free motion from every initial state.
    FreeMotionAlways,
    /// 2: free motion or `v = n/(l1+l2+2d)`, depending on the initial state.
    FreeOrV1,
    /// 3: `n/(l1+l2+2d)` or `n/(l1+l2+n-2d)`.
    V1OrV5,
    /// 4: always `n/(l1+l2+2d)`.
    V1Only,
    /// 5: always `n/(l1+l2+n-2d)`.
    V5Only,
    /// 6: `v1 = n/(2(l1+l2))`, `v2 = n/(l1+l2)`.
    HalfSpeedCluster1,
    /// 7: `v1 = 1/2`, `v2 = 1`.
    Half1Full2,
    /// 8: free motion or collapse.
    FreeOrCollapse,
    /// 9: collapse or `n/(l1+l2+2d)`.
    CollapseOrV1,
    /// 10: collapse from every initial state.
    CollapseAlways,
    Unknown,
}

impl ScenarioLabel {
    pub fn token(self) -> &'static str {
        match self {
            ScenarioLabel::FreeMotionAlways => "S1_FreeMotionAlways",
            ScenarioLabel::FreeOrV1 => "S2_FreeOrV1",
            ScenarioLabel::V1OrV5 => "S3_V1orV5",
            ScenarioLabel::V1Only => "S4_V1only",
            ScenarioLabel::V5Only => "S5_V5only",
            ScenarioLabel::HalfSpeedCluster1 => "S6_HalfSpeedCluster1",
            ScenarioLabel::Half1Full2 => "S7_Half1Full2",
            ScenarioLabel::FreeOrCollapse => "S8_FreeOrCollapse",
            ScenarioLabel::CollapseOrV1 => "S9_CollapseOrV1",
            ScenarioLabel::CollapseAlways => "S10_CollapseAlways",
            ScenarioLabel::Unknown => "Unknown",
        }
    }
}

impl fmt::Display for ScenarioLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl Serialize for ScenarioLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ScenarioLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl FromStr for ScenarioLabel {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        use ScenarioLabel::*;
        for label in [
            FreeMotionAlways,
            FreeOrV1,
            V1OrV5,
            V1Only,
            V5Only,
            HalfSpeedCluster1,
            Half1Full2,
            FreeOrCollapse,
            CollapseOrV1,
            CollapseAlways,
            Unknown,
        ] {
            if label.token() == s {
                return Ok(label);
            }
        }
        Err(format!("unknown scenario label {s:?}"))
    }
}

fn sorted_dedup(mut pairs: Vec<[Velocity; 2]>) -> Vec<[Velocity; 2]> {
    pairs.sort();
    pairs.dedup();
    pairs
}

/// Match a spectrum against the ten patterns, in order; first hit wins.
///
/// Pattern velocities assume `l1 <= l2`; pairs are mirrored first when the
/// caller passed the clusters the other way around (the system is symmetric
/// under relabeling).
pub fn classify_spectrum(spectrum: &VelocitySpectrum) -> ScenarioLabel {
    let p = spectrum.params;
    let swapped = p.l1() > p.l2();
    let (n, l1, l2, d) = if swapped {
        (p.n() as u64, p.l2() as u64, p.l1() as u64, p.d() as u64)
    } else {
        (p.n() as u64, p.l1() as u64, p.l2() as u64, p.d() as u64)
    };

    let observed = sorted_dedup(
        spectrum
            .velocity_pairs()
            .into_iter()
            .map(|[v1, v2]| if swapped { [v2, v1] } else { [v1, v2] })
            .collect(),
    );

    let one = Velocity::one();
    let zero = Velocity::zero();
    let v1 = Velocity::new(n, l1 + l2 + 2 * d);
    let v5 = Velocity::new(n, l1 + l2 + n - 2 * d);
    let patterns: [(ScenarioLabel, Vec<[Velocity; 2]>); 10] = [
        (ScenarioLabel::FreeMotionAlways, vec![[one, one]]),
        (ScenarioLabel::FreeOrV1, vec![[one, one], [v1, v1]]),
        (ScenarioLabel::V1OrV5, vec![[v1, v1], [v5, v5]]),
        (ScenarioLabel::V1Only, vec![[v1, v1]]),
        (ScenarioLabel::V5Only, vec![[v5, v5]]),
        (
            ScenarioLabel::HalfSpeedCluster1,
            vec![[Velocity::new(n, 2 * (l1 + l2)), Velocity::new(n, l1 + l2)]],
        ),
        (ScenarioLabel::Half1Full2, vec![[Velocity::new(1, 2), one]]),
        (ScenarioLabel::FreeOrCollapse, vec![[one, one], [zero, zero]]),
        (ScenarioLabel::CollapseOrV1, vec![[zero, zero], [v1, v1]]),
        (ScenarioLabel::CollapseAlways, vec![[zero, zero]]),
    ];
    for (label, pattern) in patterns {
        if observed == sorted_dedup(pattern) {
            return label;
        }
    }
    ScenarioLabel::Unknown
}

/// Classify a parameter point from scratch.
pub fn classify_scenario(params: SystemParams) -> ScenarioLabel {
    classify_spectrum(&velocity_spectrum(params))
}

//! Limit-cycle detection and exact average velocities.
//!
//! The state space is finite and the dynamics deterministic, so every
//! orbit is eventually periodic. We walk forward recording the first
//! visit time of every state; the first repeat closes the cycle and the
//! table gives the transient length for free. Velocities are exact
//! rationals `A_i / T` (moves per period) — no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::dynamics::{step, DynamicsError};
use crate::model::{SystemParams, SystemState};

/// A non-negative rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Velocity {
    num: u64,
    den: u64,
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Velocity {
    pub fn new(num: u64, den: u64) -> Velocity {
        assert!(den > 0, "velocity denominator must be positive");
        let g = gcd(num, den);
        if g == 0 {
            Velocity { num: 0, den: 1 }
        } else {
            Velocity { num: num / g, den: den / g }
        }
    }

    pub fn zero() -> Velocity {
        Velocity { num: 0, den: 1 }
    }

    pub fn one() -> Velocity {
        Velocity { num: 1, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }
}

impl Ord for Velocity {
    fn cmp(&self, other: &Velocity) -> std::cmp::Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Velocity {
    fn partial_cmp(&self, other: &Velocity) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Velocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Velocity {
    type Err = String;
    fn from_str(s: &str) -> Result<Velocity, String> {
        let (p, q) = s.split_once('/').ok_or_else(|| format!("expected p/q, got {s:?}"))?;
        let num: u64 = p.trim().parse().map_err(|e| format!("bad numerator {p:?}: {e}"))?;
        let den: u64 = q.trim().parse().map_err(|e| format!("bad denominator {q:?}: {e}"))?;
        if den == 0 {
            return Err(format!("zero denominator in {s:?}"));
        }
        Ok(Velocity::new(num, den))
    }
}

impl Serialize for Velocity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Velocity {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Velocity, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(de::Error::custom)
    }
}

/// Qualitative class of a limit cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    /// Every particle moves every tick; both velocities are 1.
    FreeMotion,
    /// A fixed point; nothing ever moves again.
    Collapse,
    /// Something in between.
    Intermediate,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::FreeMotion => "FreeMotion",
            Outcome::Collapse => "Collapse",
            Outcome::Intermediate => "Intermediate",
        })
    }
}

/// Everything the walk learns about one orbit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSummary {
    pub initial: SystemState,
    pub transient_length: u64,
    pub period: u64,
    /// Moves `(A1, A2)` of each cluster over one period.
    pub moves: [u64; 2],
    pub velocities: [Velocity; 2],
    pub outcome: Outcome,
    /// The cycle, starting at the first state of it the orbit reached.
    pub cycle_states: Vec<SystemState>,
}

/// Walk from `initial` until a state repeats; classify the cycle.
///
/// Terminates within `n^2 + 1` steps since there are only `n^2` states.
pub fn analyze_orbit(params: SystemParams, initial: SystemState) -> Result<OrbitSummary, DynamicsError> {
    let n = params.n() as usize;
    let idx = |s: SystemState| s.alpha1 as usize * n + s.alpha2 as usize;

    let mut first_visit = vec![u32::MAX; n * n];
    let mut path = vec![initial];
    let mut flags: Vec<(bool, bool)> = Vec::new();
    first_visit[idx(initial)] = 0;

    let cycle_start = loop {
        let cur = *path.last().unwrap();
        let r = step(params, cur)?;
        flags.push((r.moved1, r.moved2));
        let seen = first_visit[idx(r.next)];
        if seen != u32::MAX {
            break seen as usize;
        }
        first_visit[idx(r.next)] = path.len() as u32;
        path.push(r.next);
    };

    let period = path.len() - cycle_start;
    let cycle_states: Vec<SystemState> = path[cycle_start..].to_vec();
    let a1 = flags[cycle_start..].iter().filter(|f| f.0).count() as u64;
    let a2 = flags[cycle_start..].iter().filter(|f| f.1).count() as u64;
    let period = period as u64;

    let outcome = if a1 == period && a2 == period {
        Outcome::FreeMotion
    } else if a1 == 0 && a2 == 0 {
        debug_assert_eq!(period, 1);
        Outcome::Collapse
    } else {
        Outcome::Intermediate
    };

    let summary = OrbitSummary {
        initial,
        transient_length: cycle_start as u64,
        period,
        moves: [a1, a2],
        velocities: [Velocity::new(a1, period), Velocity::new(a2, period)],
        outcome,
        cycle_states,
    };
    debug_assert!(move_dichotomy_holds(&summary));
    debug_assert!(anchor_state_present(params, &summary));
    Ok(summary)
}

/// On every limit cycle either both clusters move or neither does.
pub fn move_dichotomy_holds(summary: &OrbitSummary) -> bool {
    let [a1, a2] = summary.moves;
    (a1 > 0 && a2 > 0) || (a1 == 0 && a2 == 0)
}

/// Every intermediate cycle passes through the tail end of some delay:
/// one of `((l1+d) mod n, 0)`, `(0, (l2+d) mod n)`, `(l1, d)`, `(d, l2)`.
pub fn anchor_state_present(params: SystemParams, summary: &OrbitSummary) -> bool {
    if summary.outcome != Outcome::Intermediate {
        return true;
    }
    let n = params.n();
    let anchors = [
        SystemState::new((params.l1() + params.d()) % n, 0),
        SystemState::new(0, (params.l2() + params.d()) % n),
        SystemState::new(params.l1(), params.d()),
        SystemState::new(params.d(), params.l2()),
    ];
    summary.cycle_states.iter().any(|s| anchors.contains(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::enumerate_acceptable_states;

    fn params(n: u32, l1: u32, l2: u32, d: u32) -> SystemParams {
        SystemParams::new(n, l1, l2, d).unwrap()
    }

    #[test]
    fn velocity_reduction_and_order() {
        assert_eq!(Velocity::new(12, 14), Velocity::new(6, 7));
        assert_eq!(Velocity::new(0, 5), Velocity::zero());
        assert_eq!(Velocity::new(7, 7), Velocity::one());
        assert!(Velocity::new(6, 7) < Velocity::one());
        assert!(Velocity::zero() < Velocity::new(1, 100));
        assert_eq!(Velocity::new(6, 7).to_string(), "6/7");
        assert_eq!("18/21".parse::<Velocity>().unwrap(), Velocity::new(6, 7));
        assert!("3".parse::<Velocity>().is_err());
        assert!("3/0".parse::<Velocity>().is_err());
    }

    #[test]
    fn free_motion_orbit() {
        let p = params(10, 1, 2, 3);
        let o = analyze_orbit(p, SystemState::new(4, 0)).unwrap();
        assert_eq!(o.transient_length, 0);
        assert_eq!(o.period, 10);
        assert_eq!(o.moves, [10, 10]);
        assert_eq!(o.velocities, [Velocity::one(), Velocity::one()]);
        assert_eq!(o.outcome, Outcome::FreeMotion);
        assert_eq!(o.cycle_states.len(), 10);
    }

    #[test]
    fn delayed_orbit() {
        let p = params(12, 2, 4, 4);
        let o = analyze_orbit(p, SystemState::new(6, 0)).unwrap();
        assert_eq!(o.period, 14);
        assert_eq!(o.moves, [12, 12]);
        assert_eq!(o.velocities, [Velocity::new(6, 7), Velocity::new(6, 7)]);
        assert_eq!(o.outcome, Outcome::Intermediate);
    }

    #[test]
    fn collapsing_orbit() {
        let p = params(10, 8, 9, 3);
        let o = analyze_orbit(p, SystemState::new(3, 2)).unwrap();
        assert_eq!(o.transient_length, 1);
        assert_eq!(o.period, 1);
        assert_eq!(o.moves, [0, 0]);
        assert_eq!(o.outcome, Outcome::Collapse);
        assert_eq!(o.cycle_states, vec![SystemState::new(3, 3)]);
    }

    #[test]
    fn rejects_unacceptable_initial_state() {
        // At these lengths most of the state space has both clusters
        // straddling a node at once; (1,0) is such a state.
        let p = params(10, 8, 9, 3);
        let err = analyze_orbit(p, SystemState::new(1, 0)).unwrap_err();
        assert_eq!(err, DynamicsError::UnacceptableState(SystemState::new(1, 0)));
    }

    #[test]
    fn asymmetric_orbit() {
        let p = params(12, 2, 11, 3);
        for init in enumerate_acceptable_states(p).into_iter().step_by(7) {
            let o = analyze_orbit(p, init).unwrap();
            assert_eq!(o.period, 26, "from {init}");
            assert_eq!(o.moves, [12, 24]);
            assert_eq!(o.velocities, [Velocity::new(6, 13), Velocity::new(12, 13)]);
        }
    }

    #[test]
    fn cycle_is_closed() {
        let p = params(18, 4, 7, 4);
        for init in [SystemState::new(8, 0), SystemState::new(4, 4), SystemState::new(0, 3)] {
            let o = analyze_orbit(p, init).unwrap();
            let t = o.cycle_states.len();
            assert_eq!(t as u64, o.period);
            for k in 0..t {
                let nxt = step(p, o.cycle_states[k]).unwrap().next;
                assert_eq!(nxt, o.cycle_states[(k + 1) % t]);
            }
        }
    }
}

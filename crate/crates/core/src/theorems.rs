//! Catalog of the known behavior regions and their empirical verification.
//!
//! Four global lemmas (L1-L4) and twenty-five region results (T1-T25)
//! describe how the system behaves as a function of `(n, l1, l2, d)`.
//! Each entry carries its hypothesis block transcribed as catalogued, a
//! consistency flag for entries whose transcription is contradictory or
//! ambiguous, and — when applicable and consistent — a predicted velocity
//! spectrum. `verify` pits every entry against the exhaustively computed
//! spectrum; the empirical data is ground truth, so a failed prediction is
//! reported as a `Mismatch`, never patched over.
//!
//! All region tests assume `l1 <= l2`; inputs with `l1 > l2` are relabeled
//! and their velocity pairs mirrored (the dynamics are symmetric under
//! exchanging the contours).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::dynamics::step;
use crate::model::{enumerate_acceptable_states, SystemParams, SystemState};
use crate::orbit::Velocity;
use crate::spectrum::{classify_spectrum, spectrum_with_audit, PointAudit, ScenarioLabel, VelocitySpectrum};

/// Identifier of one catalogued result.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ResultId {
    L(u8),
    T(u8),
}

impl ResultId {
    pub fn all() -> impl Iterator<Item = ResultId> {
        (1..=4).map(ResultId::L).chain((1..=25).map(ResultId::T))
    }

    pub fn is_lemma(self) -> bool {
        matches!(self, ResultId::L(_))
    }
}

impl fmt::Display for ResultId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ResultId::L(k) => write!(f, "L{k}"),
            ResultId::T(k) => write!(f, "T{k}"),
        }
    }
}

impl Serialize for ResultId {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// What an entry claims about the system at a parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Claim {
    /// The spectrum is exactly this set of velocity pairs.
    ExactSpectrum(Vec<[Velocity; 2]>),
    /// Every initial state lands on one of these pairs (not all need occur).
    SpectrumWithin(Vec<[Velocity; 2]>),
    /// `(1,1)` does not occur in the spectrum.
    NoFreeMotion,
    /// On every cycle both clusters move or neither does.
    MoveDichotomy,
    /// Every intermediate cycle contains a delay-end anchor state.
    CycleAnchors,
    /// A fixed point exists iff `l1 > d` and `l2 > d`, and then `(d,d)` is one.
    FixedPointIff,
}

fn fmt_pairs(pairs: &[[Velocity; 2]]) -> String {
    let inner = pairs
        .iter()
        .map(|[a, b]| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(",");
    format!("{{{inner}}}")
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::ExactSpectrum(p) => write!(f, "spectrum == {}", fmt_pairs(p)),
            Claim::SpectrumWithin(p) => write!(f, "spectrum within {}", fmt_pairs(p)),
            Claim::NoFreeMotion => f.write_str("no free-motion outcome"),
            Claim::MoveDichotomy => f.write_str("on every cycle both clusters move or neither"),
            Claim::CycleAnchors => f.write_str("every intermediate cycle contains an anchor state"),
            Claim::FixedPointIff => f.write_str("fixed point exists iff l1 > d and l2 > d, with (d,d) fixed"),
        }
    }
}

/// One catalogued result instantiated at a parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremPrediction {
    pub id: ResultId,
    pub hypotheses_hold: bool,
    /// False for entries whose transcribed hypotheses are contradictory,
    /// ambiguous between two variants, or demonstrably at odds with the
    /// stated movement rules; those are reported, never trusted.
    pub internally_consistent: bool,
    /// Present only when `hypotheses_hold && internally_consistent`.
    pub predicted: Option<Claim>,
    pub notes: String,
}

/// Verdict of one entry against the empirical spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Match,
    Mismatch,
    NotApplicable,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Match => "Match",
            Verdict::Mismatch => "Mismatch",
            Verdict::NotApplicable => "NotApplicable",
            Verdict::Inconclusive => "Inconclusive",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportEntry {
    pub prediction: TheoremPrediction,
    pub empirical_scenario: ScenarioLabel,
    pub verdict: Verdict,
}

/// Everything `verify` learns about one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub params: SystemParams,
    pub scenario: ScenarioLabel,
    pub spectrum: VelocitySpectrum,
    pub audit: PointAudit,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn entry(&self, id: ResultId) -> &ReportEntry {
        self.entries
            .iter()
            .find(|e| e.prediction.id == id)
            .expect("every catalogued id has exactly one entry")
    }

    /// Ids of region results (not lemmas) whose verdict is `Match`.
    pub fn matched_theorems(&self) -> Vec<ResultId> {
        self.entries
            .iter()
            .filter(|e| !e.prediction.id.is_lemma() && e.verdict == Verdict::Match)
            .map(|e| e.prediction.id)
            .collect()
    }
}

struct Frame {
    n: u64,
    l1: u64,
    l2: u64,
    d: u64,
}

impl Frame {
    fn v_eq1(&self) -> Velocity {
        Velocity::new(self.n, self.l1 + self.l2 + 2 * self.d)
    }

    fn v_eq2(&self) -> Velocity {
        Velocity::new(self.n, self.n - self.d + self.l1 + self.l2)
    }

    fn v_eq5(&self) -> Velocity {
        Velocity::new(self.n, self.l1 + self.l2 + self.n - 2 * self.d)
    }
}

fn pair(v: Velocity) -> [Velocity; 2] {
    [v, v]
}

fn one_one() -> [Velocity; 2] {
    pair(Velocity::one())
}

fn zero_zero() -> [Velocity; 2] {
    pair(Velocity::zero())
}

/// Build the prediction for `id` with hypotheses evaluated on a normalized
/// (`l1 <= l2`) frame.
fn prediction(id: ResultId, f: &Frame) -> TheoremPrediction {
    let (n, l1, l2, d) = (f.n, f.l1, f.l2, f.d);
    debug_assert!(l1 <= l2);

    let mut consistent = true;
    let mut notes = String::new();
    let (hold, claim): (bool, Option<Claim>) = match id {
        ResultId::L(1) => (l1 + l2 > n, Some(Claim::NoFreeMotion)),
        ResultId::L(2) => (true, Some(Claim::MoveDichotomy)),
        ResultId::L(3) => (true, Some(Claim::CycleAnchors)),
        ResultId::L(4) => (true, Some(Claim::FixedPointIff)),

        ResultId::T(1) => (
            l2 <= d && l1 + l2 <= n - 2 * d,
            Some(Claim::ExactSpectrum(vec![one_one()])),
        ),
        ResultId::T(2) => (
            l2 <= d && l2 <= n - 2 * d && l1 + l2 > n - 2 * d,
            Some(Claim::SpectrumWithin(vec![one_one(), pair(f.v_eq1())])),
        ),
        ResultId::T(3) => (
            l2 <= d && l1 <= n - 2 * d && l2 > n - 2 * d,
            Some(Claim::ExactSpectrum(vec![one_one()])),
        ),
        ResultId::T(4) => (l2 <= d && l1 > n - 2 * d, Some(Claim::ExactSpectrum(vec![one_one()]))),
        ResultId::T(5) => {
            consistent = false;
            notes = format!(
                "claims universal free motion on l1<=d, l2>d, l1+l2<=2d; overlaps the T6 region, \
                 which allows v = {} there — the two entries disagree and both are reported",
                f.v_eq2()
            );
            (l1 <= d && l2 > d && l1 + l2 <= 2 * d, None)
        }
        ResultId::T(6) => {
            consistent = false;
            notes = format!(
                "claims free motion or v = {} on l1<=d, d<l2<2d, l1+l2<=2d; its own worked \
                 instance (n=14,l1=2,l2=5,d=3) violates l1+l2<=2d, and the region overlaps T5 \
                 with a different conclusion",
                f.v_eq2()
            );
            (l1 <= d && d < l2 && l2 < 2 * d && l1 + l2 <= 2 * d, None)
        }
        ResultId::T(7) => {
            consistent = false;
            notes = "bounds l2 >= 2d and l1+l2 <= 2d force l1 <= 0; the region is empty as \
                     transcribed"
                .to_string();
            (l1 <= d && l2 >= 2 * d && l1 + l2 <= 2 * d, None)
        }
        ResultId::T(8) => {
            if l1 + l2 <= 2 * d {
                notes = format!(
                    "on the l1+l2 <= 2d part of this region the second listed speed is {} >= 1, \
                     no such cycle can exist, and free motion is observed instead; the claim \
                     fails there",
                    f.v_eq5()
                );
            }
            (
                l1 <= d && d < l2 && l2 < 2 * d && l2 <= n - 2 * d && l1 + l2 > n - 2 * d,
                Some(Claim::SpectrumWithin(vec![pair(f.v_eq1()), pair(f.v_eq5())])),
            )
        }
        ResultId::T(9) => {
            consistent = false;
            let stmt = l1 <= d && 2 * d <= l2 && l2 <= 2 * n - d && l1 + l2 > n - 2 * d;
            let hdr = l1 <= d && 2 * d < l2 && l2 <= n - 2 * d && l1 + l2 > n - 2 * d;
            notes = format!(
                "two transcriptions disagree: 2d<=l2<=2n-d (holds: {stmt}) vs 2d<l2<=n-2d \
                 (holds: {hdr}); claims a single cycle at v = {}",
                f.v_eq1()
            );
            (stmt || hdr, None)
        }
        ResultId::T(10) => (
            l1 <= d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d && l1 + l2 <= 2 * d,
            Some(Claim::ExactSpectrum(vec![one_one()])),
        ),
        ResultId::T(11) => {
            consistent = false;
            notes = format!(
                "one reading claims a single cycle at v = {}, the other two possible speeds; \
                 both checked against the data",
                f.v_eq5()
            );
            (
                l1 <= d
                    && l1 <= n - 2 * d
                    && d < l2
                    && l2 < 2 * d
                    && n - 2 * d < l2
                    && l2 <= n - d
                    && l1 + l2 > 2 * d,
                None,
            )
        }
        ResultId::T(12) => (
            l1 <= d && l1 <= n - 2 * d && l2 > n - d && d < l2 && l2 < 2 * d && l1 + l2 <= 2 * d,
            Some(Claim::ExactSpectrum(vec![one_one()])),
        ),
        ResultId::T(13) => {
            consistent = false;
            let stmt =
                l1 <= d && l1 <= n - 2 * d && l2 > n - d && d < l2 && l2 < 2 * d && l1 + l2 > 2 * d;
            let hdr = stmt && l1 + l2 <= n;
            notes = format!(
                "two transcriptions disagree: l1+l2>2d (holds: {stmt}) vs 2d<l1+l2<=n (holds: \
                 {hdr}); claims universal free motion, but the region hosts cycles at v = {} \
                 (e.g. n=20,l1=3,l2=14,d=8 from state (3,8)), and the worked sequences backing \
                 the claim contain transitions that violate the movement rules",
                f.v_eq5()
            );
            (stmt || hdr, None)
        }
        ResultId::T(14) => (
            l1 <= d && l1 <= n - 2 * d && l2 > n - d && l1 + l2 > n,
            Some(Claim::ExactSpectrum(vec![[
                Velocity::new(n, 2 * (l1 + l2)),
                Velocity::new(n, l1 + l2),
            ]])),
        ),
        ResultId::T(15) => (
            l1 <= d && n - 2 * d < l1 && l1 < n - d && l2 > n - d && l1 + l2 > n,
            Some(Claim::ExactSpectrum(vec![pair(Velocity::new(
                n,
                n - 2 * d + l1 + l2,
            ))])),
        ),
        ResultId::T(16) => {
            consistent = false;
            let stmt = l1 <= d && l1 <= n - 2 * d && l2 > n - d && l2 >= 2 * d && l1 + l2 <= n;
            let hdr =
                l1 <= d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d && l2 >= 2 * d && l1 + l2 <= n;
            notes = format!(
                "two transcriptions disagree: l2>n-d (holds: {stmt}) vs n-2d<l2<=n-d (holds: \
                 {hdr}); claims v1 = 1/2, v2 = 1"
            );
            (stmt || hdr, None)
        }
        ResultId::T(17) => (
            d < l1 && l1 < 2 * d && d < l2 && l2 < 2 * d && l1 + l2 <= n - 2 * d,
            Some(Claim::SpectrumWithin(vec![one_one(), zero_zero()])),
        ),
        ResultId::T(18) => {
            notes = "lower block transcribed from the heading (d<l1<2d); the statement body \
                     misprints the l1 bounds"
                .to_string();
            (
                d < l1 && l1 < 2 * d && l2 >= 2 * d && l1 + l2 <= n - 2 * d,
                Some(Claim::SpectrumWithin(vec![one_one(), zero_zero()])),
            )
        }
        ResultId::T(19) => {
            notes = "l1 >= 2d taken from the heading; the statement body omits it".to_string();
            (
                l1 >= 2 * d && l2 >= 2 * d && l1 + l2 <= n - 2 * d,
                Some(Claim::SpectrumWithin(vec![one_one(), zero_zero()])),
            )
        }
        ResultId::T(20) => (
            l1 >= 2 * d && l2 <= n - 2 * d && n - 2 * d < l1 + l2 && l1 + l2 <= n,
            Some(Claim::SpectrumWithin(vec![zero_zero(), pair(f.v_eq1())])),
        ),
        ResultId::T(21) => (
            l1 >= 2 * d && l2 <= n - 2 * d && l1 + l2 > n,
            Some(Claim::SpectrumWithin(vec![zero_zero(), pair(f.v_eq1())])),
        ),
        ResultId::T(22) => (
            l1 >= 2 * d && l1 <= n - 2 * d && n - 2 * d < l2 && l2 <= n - d,
            Some(Claim::ExactSpectrum(vec![zero_zero()])),
        ),
        ResultId::T(23) => {
            consistent = false;
            let stmt = n - 2 * d < l1 && l2 <= n - d;
            // the heading also carries an empty-range fragment (a lower bound
            // equal to its upper bound), dropped here
            let hdr = l1 >= 2 * d && n - 2 * d < l2 && l2 <= n - d;
            notes = format!(
                "two transcriptions disagree: n-2d<l1<=l2<=n-d (holds: {stmt}) vs l1>=2d, \
                 n-2d<l2<=n-d (holds: {hdr}); claims universal collapse, impossible where \
                 l1 <= d"
            );
            (stmt || hdr, None)
        }
        ResultId::T(24) => {
            if l1 <= d {
                notes = "this region dips below l1 = d when d > n/3, where no fixed point \
                         exists and universal collapse is impossible; the claim fails there"
                    .to_string();
            }
            (
                n - 2 * d < l1 && l1 <= n - d && l2 > n - d,
                Some(Claim::ExactSpectrum(vec![zero_zero()])),
            )
        }
        ResultId::T(25) => (
            l1 > n - d && l2 > n - d,
            Some(Claim::ExactSpectrum(vec![zero_zero()])),
        ),
        ResultId::L(_) | ResultId::T(_) => unreachable!("ids come from ResultId::all()"),
    };

    TheoremPrediction {
        id,
        hypotheses_hold: hold,
        internally_consistent: consistent,
        predicted: if hold && consistent { claim } else { None },
        notes,
    }
}

/// Instantiate every catalogued result at `params` (normalized to `l1 <= l2`).
pub fn applicable_results(params: SystemParams) -> Vec<TheoremPrediction> {
    let (norm, swapped) = normalize(params);
    let frame = Frame {
        n: norm.n() as u64,
        l1: norm.l1() as u64,
        l2: norm.l2() as u64,
        d: norm.d() as u64,
    };
    ResultId::all()
        .map(|id| {
            let mut p = prediction(id, &frame);
            if swapped && !p.notes.is_empty() {
                p.notes.push_str("; clusters relabeled so l1 <= l2");
            } else if swapped {
                p.notes = "clusters relabeled so l1 <= l2".to_string();
            }
            p
        })
        .collect()
}

fn normalize(params: SystemParams) -> (SystemParams, bool) {
    if params.l1() > params.l2() {
        (params.swapped(), true)
    } else {
        (params, false)
    }
}

struct FixedPointScan {
    any_fixed: bool,
    dd_fixed: bool,
}

fn scan_fixed_points(params: SystemParams) -> FixedPointScan {
    let mut scan = FixedPointScan { any_fixed: false, dd_fixed: false };
    for s in enumerate_acceptable_states(params) {
        if step(params, s).expect("acceptable").next == s {
            scan.any_fixed = true;
            if s == SystemState::new(params.d(), params.d()) {
                scan.dd_fixed = true;
            }
        }
    }
    scan
}

fn judge(
    prediction: &TheoremPrediction,
    observed: &BTreeSet<[Velocity; 2]>,
    audit: &PointAudit,
    fixed: &FixedPointScan,
    params_norm: SystemParams,
) -> Verdict {
    if !prediction.hypotheses_hold {
        return Verdict::NotApplicable;
    }
    if !prediction.internally_consistent {
        return Verdict::Inconclusive;
    }
    let claim = prediction.predicted.as_ref().expect("consistent + applicable");
    let ok = match claim {
        Claim::ExactSpectrum(pairs) => {
            let want: BTreeSet<_> = pairs.iter().copied().collect();
            *observed == want
        }
        Claim::SpectrumWithin(pairs) => {
            let allowed: BTreeSet<_> = pairs.iter().copied().collect();
            observed.is_subset(&allowed)
        }
        Claim::NoFreeMotion => !observed.contains(&one_one()),
        Claim::MoveDichotomy => audit.move_dichotomy,
        Claim::CycleAnchors => audit.anchor_states,
        Claim::FixedPointIff => {
            let should_exist = params_norm.l1() > params_norm.d() && params_norm.l2() > params_norm.d();
            fixed.any_fixed == should_exist && (!should_exist || fixed.dd_fixed)
        }
    };
    if ok {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Compute the spectrum and judge every catalogued entry against it.
pub fn verify(params: SystemParams) -> VerificationReport {
    let (spectrum, audit) = spectrum_with_audit(params);
    let scenario = classify_spectrum(&spectrum);
    let (norm, swapped) = normalize(params);

    // Velocity pairs in the normalized frame.
    let observed: BTreeSet<[Velocity; 2]> = spectrum
        .velocity_pairs()
        .into_iter()
        .map(|[a, b]| if swapped { [b, a] } else { [a, b] })
        .collect();
    let fixed = scan_fixed_points(params);
    let digest = spectrum.digest();

    let entries = applicable_results(params)
        .into_iter()
        .map(|mut prediction| {
            let verdict = judge(&prediction, &observed, &audit, &fixed, norm);
            if matches!(verdict, Verdict::Inconclusive | Verdict::Mismatch) {
                if !prediction.notes.is_empty() {
                    prediction.notes.push_str("; ");
                }
                prediction.notes.push_str(&format!("observed spectrum: {digest}"));
            }
            ReportEntry { prediction, empirical_scenario: scenario, verdict }
        })
        .collect();

    VerificationReport { params, scenario, spectrum, audit, entries }
}

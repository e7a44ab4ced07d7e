//! JSON documents emitted by the CLI.
//!
//! Velocities serialize as `"p/q"` strings so no floating point ever
//! appears in any output; parsing an emitted orbit or spectrum document
//! reproduces the in-memory values exactly.

use serde::{Deserialize, Serialize};

use contour_sim::{
    OrbitSummary, Outcome, PointAudit, ScenarioLabel, SpectrumEntry, SystemParams, SystemState,
    Velocity, VelocitySpectrum, VerificationReport,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitDoc {
    pub params: SystemParams,
    pub initial: [u32; 2],
    pub transient: u64,
    pub period: u64,
    pub moves: [u64; 2],
    pub velocities: [Velocity; 2],
    pub outcome: Outcome,
    pub cycle: Vec<[u32; 2]>,
}

impl OrbitDoc {
    pub fn new(params: SystemParams, summary: &OrbitSummary) -> OrbitDoc {
        OrbitDoc {
            params,
            initial: [summary.initial.alpha1, summary.initial.alpha2],
            transient: summary.transient_length,
            period: summary.period,
            moves: summary.moves,
            velocities: summary.velocities,
            outcome: summary.outcome,
            cycle: summary.cycle_states.iter().map(|s| [s.alpha1, s.alpha2]).collect(),
        }
    }

    pub fn to_summary(&self) -> OrbitSummary {
        OrbitSummary {
            initial: SystemState::new(self.initial[0], self.initial[1]),
            transient_length: self.transient,
            period: self.period,
            moves: self.moves,
            velocities: self.velocities,
            outcome: self.outcome,
            cycle_states: self.cycle.iter().map(|&[a, b]| SystemState::new(a, b)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntryDoc {
    pub velocities: [Velocity; 2],
    pub representative: [u32; 2],
    pub basin: u64,
}

impl From<&SpectrumEntry> for SpectrumEntryDoc {
    fn from(e: &SpectrumEntry) -> SpectrumEntryDoc {
        SpectrumEntryDoc {
            velocities: e.velocities,
            representative: [e.representative_initial.alpha1, e.representative_initial.alpha2],
            basin: e.basin_size,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumDoc {
    pub params: SystemParams,
    pub scenario: ScenarioLabel,
    pub acceptable_states: u64,
    pub entries: Vec<SpectrumEntryDoc>,
}

impl SpectrumDoc {
    pub fn new(spectrum: &VelocitySpectrum, scenario: ScenarioLabel) -> SpectrumDoc {
        SpectrumDoc {
            params: spectrum.params,
            scenario,
            acceptable_states: spectrum.total_basin(),
            entries: spectrum.entries.iter().map(SpectrumEntryDoc::from).collect(),
        }
    }

    pub fn to_spectrum(&self) -> VelocitySpectrum {
        VelocitySpectrum {
            params: self.params,
            entries: self
                .entries
                .iter()
                .map(|e| SpectrumEntry {
                    velocities: e.velocities,
                    representative_initial: SystemState::new(e.representative[0], e.representative[1]),
                    basin_size: e.basin,
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyEntryDoc {
    pub id: String,
    pub hypotheses_hold: bool,
    pub internally_consistent: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claim: Option<String>,
    pub verdict: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub notes: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct AuditDoc {
    pub move_dichotomy: bool,
    pub anchor_states: bool,
    pub acceptability_preserved: bool,
    pub free_period_divides_n: bool,
}

impl From<PointAudit> for AuditDoc {
    fn from(a: PointAudit) -> AuditDoc {
        AuditDoc {
            move_dichotomy: a.move_dichotomy,
            anchor_states: a.anchor_states,
            acceptability_preserved: a.acceptability_preserved,
            free_period_divides_n: a.free_period_divides_n,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyDoc {
    pub params: SystemParams,
    pub scenario: ScenarioLabel,
    pub spectrum: Vec<SpectrumEntryDoc>,
    pub audit: AuditDoc,
    pub entries: Vec<VerifyEntryDoc>,
}

impl VerifyDoc {
    pub fn new(report: &VerificationReport) -> VerifyDoc {
        VerifyDoc {
            params: report.params,
            scenario: report.scenario,
            spectrum: report.spectrum.entries.iter().map(SpectrumEntryDoc::from).collect(),
            audit: report.audit.into(),
            entries: report
                .entries
                .iter()
                .map(|e| VerifyEntryDoc {
                    id: e.prediction.id.to_string(),
                    hypotheses_hold: e.prediction.hypotheses_hold,
                    internally_consistent: e.prediction.internally_consistent,
                    claim: e.prediction.predicted.as_ref().map(|c| c.to_string()),
                    verdict: e.verdict.to_string(),
                    notes: e.prediction.notes.clone(),
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline; byte-stable for equal inputs.
pub fn to_json_line<T: Serialize>(doc: &T) -> String {
    let mut out = serde_json::to_string_pretty(doc).expect("documents serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use contour_sim::{analyze_orbit, classify_spectrum, velocity_spectrum};

    #[test]
    fn orbit_doc_round_trips() {
        let p = SystemParams::new(12, 2, 4, 4).unwrap();
        let summary = analyze_orbit(p, SystemState::new(6, 0)).unwrap();
        let doc = OrbitDoc::new(p, &summary);
        let json = to_json_line(&doc);
        let back: OrbitDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_summary(), summary);
        assert!(json.contains("\"6/7\""));
    }

    #[test]
    fn spectrum_doc_round_trips() {
        let p = SystemParams::new(12, 2, 4, 4).unwrap();
        let spectrum = velocity_spectrum(p);
        let doc = SpectrumDoc::new(&spectrum, classify_spectrum(&spectrum));
        let json = to_json_line(&doc);
        let back: SpectrumDoc = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_spectrum(), spectrum);
        assert_eq!(back.scenario, doc.scenario);
    }

    #[test]
    fn params_deserialization_validates() {
        let bad: Result<SystemParams, _> = serde_json::from_str(r#"{"n":12,"l1":0,"l2":4,"d":4}"#);
        let err = bad.unwrap_err().to_string();
        assert!(err.contains("LengthOutOfRange"), "{err}");
    }
}

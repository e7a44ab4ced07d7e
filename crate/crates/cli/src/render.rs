//! Plain-text rendering of trajectories.

use contour_sim::SystemState;

/// States joined by ` -> `, six per line; continued lines keep a trailing
/// arrow, and the result is newline-terminated.
pub fn render_trajectory(states: &[SystemState]) -> String {
    assert!(!states.is_empty(), "nothing to render");
    let chunks: Vec<String> = states
        .chunks(6)
        .map(|chunk| chunk.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" -> "))
        .collect();
    let mut out = String::new();
    for (i, line) in chunks.iter().enumerate() {
        out.push_str(line);
        if i + 1 < chunks.len() {
            out.push_str(" ->\n");
        } else {
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(a: u32, b: u32) -> SystemState {
        SystemState::new(a, b)
    }

    #[test]
    fn two_states() {
        assert_eq!(render_trajectory(&[s(4, 0), s(5, 1)]), "(4,0) -> (5,1)\n");
    }

    #[test]
    fn single_state() {
        assert_eq!(render_trajectory(&[s(4, 0)]), "(4,0)\n");
    }

    #[test]
    fn wraps_after_six() {
        let states: Vec<SystemState> = (0..7).map(|k| s(k, k)).collect();
        let text = render_trajectory(&states);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines.len(), 2);
        assert_eq!(lines[0].matches("(").count(), 6);
        assert_eq!(lines[1], "(6,6)");
        assert!(lines[0].ends_with("->"));
        assert!(text.ends_with('\n'));
    }
}

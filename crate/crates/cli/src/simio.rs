//! Simulation config loading and trajectory export.
//!
//! Config (JSON): `q` is `{"real": x}` or `{"arg": eps}` (the latter puts
//! `q = e^{i·eps}` on the unit circle); `init` maps decimal mode indices to
//! `[re, im]` pairs.
//!
//! Trajectory (CSV, LF): header `t,k,re,im`, rows grouped by sample time
//! with modes ascending, floats rendered with 17 significant digits. If a
//! run blows up, the rows collected so far are flushed followed by a
//! terminal comment line `# aborted: blow-up at step N`.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::Deserialize;

use qvir_core::qkdv::{SimConfig, SimState, Trajectory};
use qvir_core::qscalar::QNumeric;
use qvir_core::qseries::LaurentPoly;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct QSpec {
    real: Option<f64>,
    arg: Option<f64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ConfigFile {
    q: QSpec,
    cprime: f64,
    n_modes: i64,
    dt: f64,
    steps: u64,
    output_every: u64,
    init: BTreeMap<String, [f64; 2]>,
}

/// Parses and validates a simulation config, returning the configuration
/// and the initial state it describes.
pub fn load_config(path: &Path) -> Result<(SimConfig, SimState), String> {
    let text = fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    let file: ConfigFile =
        serde_json::from_str(&text).map_err(|e| format!("invalid config JSON: {e}"))?;

    let q = match (file.q.real, file.q.arg) {
        (Some(x), None) => Complex64::new(x, 0.0),
        (None, Some(eps)) => Complex64::from_polar(1.0, eps),
        _ => {
            return Err("q must specify exactly one of \"real\" or \"arg\"".to_string());
        }
    };
    let config = SimConfig {
        q,
        cprime: file.cprime,
        n_modes: file.n_modes,
        dt: file.dt,
        steps: file.steps,
        output_every: file.output_every,
    };
    config.validate().map_err(|e| e.to_string())?;

    let mut u = LaurentPoly::zero_in(&q);
    for (key, [re, im]) in &file.init {
        let k: i64 = key
            .parse()
            .map_err(|_| format!("init key {key:?} is not a decimal mode index"))?;
        if k.abs() > config.n_modes {
            return Err(format!(
                "init mode {k} lies outside the band [-{n}, {n}]",
                n = config.n_modes
            ));
        }
        u.add_term(k, QNumeric::new(q, Complex64::new(*re, *im)));
    }
    Ok((config, SimState { t: 0.0, u }))
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

/// Renders a trajectory as CSV; `terminal` appends a final status comment.
pub fn render_trajectory(trajectory: &Trajectory, terminal: Option<&str>) -> String {
    let mut out = String::from("t,k,re,im\n");
    for state in &trajectory.samples {
        for (k, c) in state.u.iter() {
            let v = c.value();
            out.push_str(&format!(
                "{},{k},{},{}\n",
                fmt17(state.t),
                fmt17(v.re),
                fmt17(v.im)
            ));
        }
    }
    if let Some(note) = terminal {
        out.push_str(&format!("# {note}\n"));
    }
    out
}

pub fn write_trajectory(
    path: &Path,
    trajectory: &Trajectory,
    terminal: Option<&str>,
) -> Result<(), String> {
    fs::write(path, render_trajectory(trajectory, terminal))
        .map_err(|e| format!("cannot write trajectory {}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qvir_core::qkdv::simulate;

    #[test]
    fn float_rendering_has_17_significant_digits() {
        assert_eq!(fmt17(0.0), "0.0000000000000000e0");
        assert_eq!(fmt17(1e-4), "1.0000000000000000e-4");
        assert_eq!(fmt17(-0.1), "-1.0000000000000001e-1");
    }

    #[test]
    fn csv_rows_are_grouped_and_sorted() {
        let q = Complex64::new(1.01, 0.0);
        let config = SimConfig { q, cprime: 1.0, n_modes: 4, dt: 1e-3, steps: 2, output_every: 1 };
        let u = LaurentPoly::from_terms_in(
            &q,
            [(1, QNumeric::from_re(q, 0.1)), (-1, QNumeric::from_re(q, 0.2))],
        );
        let traj = simulate(&config, &SimState { t: 0.0, u }).unwrap();
        let csv = render_trajectory(&traj, None);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "t,k,re,im");
        let expected_rows: usize = traj.samples.iter().map(|s| s.u.support_len()).sum();
        assert_eq!(lines.len(), 1 + expected_rows);
        // initial sample first, modes ascending within it
        assert!(lines[1].contains(",-1,"));
        assert!(lines[2].contains(",1,"));
        let terminal = render_trajectory(&traj, Some("aborted: blow-up at step 7"));
        assert!(terminal.ends_with("# aborted: blow-up at step 7\n"));
    }
}

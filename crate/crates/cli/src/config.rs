//! Strict run-configuration parsing: typed keys, unknown keys fatal, and
//! every bad key reported in one pass.

use dirac_sidharth::dispersion::ModelParams;
use dirac_sidharth::evolution::{EvolutionConfig, Projection};
use dirac_sidharth::plane_wave::{Sign, SignConvention};

const ALLOWED_KEYS: [&str; 14] = [
    "mass",
    "alpha",
    "ell",
    "n_modes",
    "box_length",
    "p0",
    "width",
    "spin",
    "projection",
    "dt",
    "n_steps",
    "sample_stride",
    "sign_convention",
    "snapshot_stride",
];

fn get_f64(table: &toml::Table, key: &str, errors: &mut Vec<String>) -> Option<f64> {
    match table.get(key) {
        None => {
            errors.push(format!("missing key `{key}` (float)"));
            None
        }
        Some(toml::Value::Float(f)) => Some(*f),
        Some(toml::Value::Integer(i)) => Some(*i as f64),
        Some(other) => {
            errors.push(format!("key `{key}` must be a float, got {other}"));
            None
        }
    }
}

fn get_usize(table: &toml::Table, key: &str, errors: &mut Vec<String>) -> Option<usize> {
    match table.get(key) {
        None => {
            errors.push(format!("missing key `{key}` (integer)"));
            None
        }
        Some(toml::Value::Integer(i)) if *i >= 0 => Some(*i as usize),
        Some(other) => {
            errors.push(format!("key `{key}` must be a non-negative integer, got {other}"));
            None
        }
    }
}

fn get_str<'t>(table: &'t toml::Table, key: &str, errors: &mut Vec<String>) -> Option<&'t str> {
    match table.get(key) {
        None => {
            errors.push(format!("missing key `{key}` (string)"));
            None
        }
        Some(toml::Value::String(s)) => Some(s),
        Some(other) => {
            errors.push(format!("key `{key}` must be a string, got {other}"));
            None
        }
    }
}

/// Parse and validate a run configuration, collecting every problem found.
pub fn parse_run_config(text: &str) -> Result<EvolutionConfig, Vec<String>> {
    let table: toml::Table = text
        .parse()
        .map_err(|e| vec![format!("configuration is not valid TOML: {e}")])?;

    let mut errors = Vec::new();
    for key in table.keys() {
        if !ALLOWED_KEYS.contains(&key.as_str()) {
            errors.push(format!("unknown key `{key}`"));
        }
    }

    let mass = get_f64(&table, "mass", &mut errors);
    let alpha = get_f64(&table, "alpha", &mut errors);
    let ell = get_f64(&table, "ell", &mut errors);
    let n_modes = get_usize(&table, "n_modes", &mut errors);
    let box_length = get_f64(&table, "box_length", &mut errors);
    let p0 = get_f64(&table, "p0", &mut errors);
    let width = get_f64(&table, "width", &mut errors);
    let dt = get_f64(&table, "dt", &mut errors);
    let n_steps = get_usize(&table, "n_steps", &mut errors);
    let sample_stride = get_usize(&table, "sample_stride", &mut errors);

    let spin = get_str(&table, "spin", &mut errors).and_then(|s| match s {
        "plus" => Some(Sign::Plus),
        "minus" => Some(Sign::Minus),
        other => {
            errors.push(format!("key `spin` must be `plus` or `minus`, got `{other}`"));
            None
        }
    });
    let projection = get_str(&table, "projection", &mut errors).and_then(|s| match s {
        "positive-branch" => Some(Projection::PositiveBranch),
        "none" => Some(Projection::None),
        other => {
            errors.push(format!(
                "key `projection` must be `positive-branch` or `none`, got `{other}`"
            ));
            None
        }
    });

    // optional keys
    let convention = match table.get("sign_convention") {
        None => Some(SignConvention::default()),
        Some(toml::Value::String(s)) => match s.as_str() {
            "positive" => Some(SignConvention::Positive),
            "negative" => Some(SignConvention::Negative),
            other => {
                errors.push(format!(
                    "key `sign_convention` must be `positive` or `negative`, got `{other}`"
                ));
                None
            }
        },
        Some(other) => {
            errors.push(format!("key `sign_convention` must be a string, got {other}"));
            None
        }
    };
    let snapshot_stride = match table.get("snapshot_stride") {
        None => Some(0usize),
        Some(toml::Value::Integer(i)) if *i >= 0 => Some(*i as usize),
        Some(other) => {
            errors.push(format!(
                "key `snapshot_stride` must be a non-negative integer, got {other}"
            ));
            None
        }
    };

    let params = match (mass, alpha, ell) {
        (Some(m), Some(a), Some(l)) => match ModelParams::new(m, a, l) {
            Ok(p) => Some(p),
            Err(e) => {
                errors.push(e.to_string());
                None
            }
        },
        _ => None,
    };

    if let Some(n) = n_modes {
        if n < 8 || !n.is_power_of_two() {
            errors.push(format!("key `n_modes` must be a power of two ≥ 8, got {n}"));
        }
    }
    if let Some(l) = box_length {
        if !l.is_finite() || l <= 0.0 {
            errors.push(format!("key `box_length` must be > 0, got {l}"));
        }
    }
    if let Some(w) = width {
        if !w.is_finite() || w <= 0.0 {
            errors.push(format!("key `width` must be > 0, got {w}"));
        }
    }
    if let Some(d) = dt {
        if !d.is_finite() || d <= 0.0 {
            errors.push(format!("key `dt` must be > 0, got {d}"));
        }
    }
    if let Some(n) = n_steps {
        if n == 0 {
            errors.push("key `n_steps` must be ≥ 1".into());
        }
    }
    if let Some(s) = sample_stride {
        if s == 0 {
            errors.push("key `sample_stride` must be ≥ 1".into());
        }
    }

    if !errors.is_empty() {
        return Err(errors);
    }

    Ok(EvolutionConfig {
        params: params.unwrap(),
        convention: convention.unwrap(),
        n_modes: n_modes.unwrap(),
        box_length: box_length.unwrap(),
        p0: p0.unwrap(),
        width: width.unwrap(),
        spin: spin.unwrap(),
        projection: projection.unwrap(),
        dt: dt.unwrap(),
        n_steps: n_steps.unwrap(),
        sample_stride: sample_stride.unwrap(),
        snapshot_stride: snapshot_stride.unwrap(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const GOOD: &str = r#"
mass = 1.0
alpha = 1.0
ell = 0.1
n_modes = 64
box_length = 16.0
p0 = 2.0
width = 0.4
spin = "plus"
projection = "positive-branch"
dt = 0.01
n_steps = 100
sample_stride = 10
"#;

    #[test]
    fn good_config_parses() {
        let config = parse_run_config(GOOD).unwrap();
        assert_eq!(config.n_modes, 64);
        assert_eq!(config.snapshot_stride, 0);
        assert_eq!(config.convention, SignConvention::Positive);
    }

    #[test]
    fn unknown_and_bad_keys_all_reported() {
        let text = format!("{GOOD}\nbogus = 1\nmystery = \"x\"\n");
        let text = text.replace("width = 0.4", "width = -0.4");
        let errors = parse_run_config(&text).unwrap_err();
        let joined = errors.join("\n");
        assert!(joined.contains("bogus"), "{joined}");
        assert!(joined.contains("mystery"), "{joined}");
        assert!(joined.contains("width"), "{joined}");
        assert!(errors.len() >= 3);
    }

    #[test]
    fn missing_key_reported() {
        let text = GOOD.replace("mass = 1.0\n", "");
        let errors = parse_run_config(&text).unwrap_err();
        assert!(errors.iter().any(|e| e.contains("mass")));
    }

    #[test]
    fn wrong_enum_value_reported() {
        let text = GOOD.replace("\"plus\"", "\"up\"");
        let errors = parse_run_config(&text).unwrap_err();
        assert!(errors.iter().any(|e| e.contains("spin")));
    }
}

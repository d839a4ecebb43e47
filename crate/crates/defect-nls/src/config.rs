//! JSON run configuration: parsing, validation, and the published schema.
//!
//! Complex numbers are `[re, im]` pairs throughout. Parsing is staged so the
//! diagnostics stay precise: JSON syntax errors carry line/column, shape
//! errors carry the serde message, and semantic violations name the exact
//! offending field.

use crate::darboux::MIN_CHAIN_IMAG;
use crate::defect::{Branch, DefectParams};
use crate::error::{Error, Result};
use crate::lax::SpectralPoint;
use crate::linalg::{c, C64, Vec2C};
use serde::Deserialize;
use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

/// What the run computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    /// Paired N-soliton solution on both half-lines.
    DefectNsoliton,
    /// Zero field on the right, boundary-bound soliton on the left.
    Destructive,
    /// Single N-soliton on the whole line, no defect coupling in the field.
    WholeLine,
}

impl RunMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            RunMode::DefectNsoliton => "defect-nsoliton",
            RunMode::Destructive => "destructive",
            RunMode::WholeLine => "whole-line",
        }
    }
}

/// Rectangular evaluation grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub t_min: f64,
    pub t_max: f64,
    pub x_min: f64,
    pub x_max: f64,
    pub nt: usize,
    pub nx: usize,
}

pub const MAX_GRID_NODES: usize = 10_000_000;

impl GridSpec {
    pub fn t_values(&self) -> Vec<f64> {
        axis(self.t_min, self.t_max, self.nt)
    }

    pub fn x_values(&self) -> Vec<f64> {
        axis(self.x_min, self.x_max, self.nx)
    }
}

fn axis(min: f64, max: f64, n: usize) -> Vec<f64> {
    let step = (max - min) / (n - 1) as f64;
    (0..n)
        .map(|i| {
            let v = min + step * i as f64;
            // snap rounding dust at the origin so the two-sided x = 0 rule
            // triggers exactly
            if v.abs() <= step * 1e-12 {
                0.0
            } else {
                v
            }
        })
        .collect()
}

/// Verification toggles and tolerance overrides.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct VerifySettings {
    pub enabled: bool,
    /// Per-check opt-outs; anything absent follows `enabled`.
    pub checks: BTreeMap<String, bool>,
    /// Per-check tolerance overrides; anything absent uses the built-in.
    pub tolerances: BTreeMap<String, f64>,
    /// Negative control: build the paired system with the pairing map
    /// skipped. The defect-residual check is expected to fail.
    pub mismatched_pairing: bool,
}

/// Optional output locations; the CLI fills in defaults next to the config.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct OutputPaths {
    pub csv: Option<PathBuf>,
    pub report: Option<PathBuf>,
}

/// Fully validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub mode: RunMode,
    pub defect: DefectParams,
    pub solitons: Vec<SpectralPoint>,
    pub psi0_init: Vec2C,
    /// Init vector of the boundary-bound dressing; required in destructive
    /// mode, unused otherwise.
    pub center_init: Option<Vec2C>,
    pub grid: GridSpec,
    pub verify: VerifySettings,
    pub output: OutputPaths,
}

// --- raw serde layer -------------------------------------------------------

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    mode: String,
    defect: RawDefect,
    #[serde(default)]
    solitons: Vec<RawSoliton>,
    #[serde(default)]
    psi0_init: Option<[[f64; 2]; 2]>,
    #[serde(default)]
    center_init: Option<[[f64; 2]; 2]>,
    grid: RawGrid,
    #[serde(default)]
    verify: Option<RawVerify>,
    #[serde(default)]
    output: Option<RawOutput>,
    #[serde(default)]
    seed_note: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDefect {
    alpha: f64,
    beta: f64,
    branch: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSoliton {
    lambda: [f64; 2],
    init: [[f64; 2]; 2],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGrid {
    t: (f64, f64, usize),
    x: (f64, f64, usize),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawVerify {
    #[serde(default = "default_true")]
    enabled: bool,
    #[serde(default)]
    checks: BTreeMap<String, bool>,
    #[serde(default)]
    tolerances: BTreeMap<String, f64>,
    #[serde(default)]
    mismatched_pairing: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOutput {
    #[serde(default)]
    csv: Option<String>,
    #[serde(default)]
    report: Option<String>,
}

fn default_true() -> bool {
    true
}

// --- parsing ---------------------------------------------------------------

/// Reads and validates a configuration file.
pub fn parse_config(path: &Path) -> Result<RunConfig> {
    let text = std::fs::read_to_string(path)?;
    parse_config_str(&text)
}

/// Parses and validates configuration text.
pub fn parse_config_str(text: &str) -> Result<RunConfig> {
    let value: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::ParseError {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    let raw: RawConfig =
        serde_json::from_value(value).map_err(|e| Error::SchemaViolation(e.to_string()))?;
    validate(raw)
}

fn invalid(field: &str, message: impl Into<String>) -> Error {
    Error::InvariantViolation {
        field: field.to_string(),
        message: message.into(),
    }
}

fn to_c64(pair: [f64; 2]) -> C64 {
    c(pair[0], pair[1])
}

fn to_vec2(pair: [[f64; 2]; 2]) -> Vec2C {
    Vec2C::new(to_c64(pair[0]), to_c64(pair[1]))
}

fn validate(raw: RawConfig) -> Result<RunConfig> {
    let mode = match raw.mode.as_str() {
        "defect-nsoliton" => RunMode::DefectNsoliton,
        "destructive" => RunMode::Destructive,
        "whole-line" => RunMode::WholeLine,
        other => {
            return Err(invalid(
                "mode",
                format!("unknown mode `{other}` (expected defect-nsoliton, destructive, or whole-line)"),
            ))
        }
    };

    let branch = match raw.defect.branch.as_str() {
        "plus" => Branch::Plus,
        "minus" => Branch::Minus,
        other => {
            return Err(invalid(
                "defect.branch",
                format!("unknown branch `{other}` (expected plus or minus)"),
            ))
        }
    };
    if !raw.defect.alpha.is_finite() {
        return Err(invalid("defect.alpha", "must be finite"));
    }
    if !raw.defect.beta.is_finite() {
        return Err(invalid("defect.beta", "must be finite"));
    }
    let defect = DefectParams::new(raw.defect.alpha, raw.defect.beta, branch)?;
    let lambda0 = defect.lambda0();

    let mut solitons = Vec::with_capacity(raw.solitons.len());
    for (k, s) in raw.solitons.iter().enumerate() {
        let field = format!("solitons[{k}]");
        let lambda = to_c64(s.lambda);
        if !lambda.re.is_finite() || !lambda.im.is_finite() {
            return Err(invalid(&format!("{field}.lambda"), "must be finite"));
        }
        if lambda.im.abs() < MIN_CHAIN_IMAG {
            return Err(invalid(
                &format!("{field}.lambda"),
                format!("|Im lambda| = {} is below {MIN_CHAIN_IMAG}", lambda.im.abs()),
            ));
        }
        if (lambda - lambda0).norm() < 1e-8 || (lambda - lambda0.conj()).norm() < 1e-8 {
            return Err(invalid(
                &format!("{field}.lambda"),
                "collides with the defect eigenvalue pair",
            ));
        }
        let init = to_vec2(s.init);
        if init.is_zero() {
            return Err(invalid(&format!("{field}.init"), "must be nonzero"));
        }
        for (j, other) in solitons.iter().enumerate() {
            let other: &SpectralPoint = other;
            if (lambda - other.lambda).norm() < crate::darboux::MIN_LAMBDA_GAP {
                return Err(invalid(
                    &format!("{field}.lambda"),
                    format!("duplicates solitons[{j}].lambda"),
                ));
            }
        }
        solitons.push(SpectralPoint::new(lambda, init)?);
    }

    let psi0_init = raw
        .psi0_init
        .map(to_vec2)
        .unwrap_or_else(|| Vec2C::new(crate::linalg::ONE, crate::linalg::ZERO));
    if psi0_init.is_zero() {
        return Err(invalid("psi0_init", "must be nonzero"));
    }

    let center_init = raw.center_init.map(to_vec2);
    if mode == RunMode::Destructive {
        match center_init {
            None => {
                return Err(invalid(
                    "center_init",
                    "required in destructive mode",
                ))
            }
            Some(v) if v.is_zero() => {
                return Err(invalid("center_init", "must be nonzero"))
            }
            _ => {}
        }
    }

    let (t_min, t_max, nt) = raw.grid.t;
    let (x_min, x_max, nx) = raw.grid.x;
    if !(t_min.is_finite() && t_max.is_finite() && t_min < t_max) {
        return Err(invalid("grid.t", "requires finite t_min < t_max"));
    }
    if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
        return Err(invalid("grid.x", "requires finite x_min < x_max"));
    }
    if nt < 2 {
        return Err(invalid("grid.t", "requires at least 2 samples"));
    }
    if nx < 2 {
        return Err(invalid("grid.x", "requires at least 2 samples"));
    }
    if nt.saturating_mul(nx) > MAX_GRID_NODES {
        return Err(invalid(
            "grid",
            format!("{nt}×{nx} exceeds the {MAX_GRID_NODES}-node cap"),
        ));
    }
    let grid = GridSpec {
        t_min,
        t_max,
        x_min,
        x_max,
        nt,
        nx,
    };

    let verify = match raw.verify {
        None => VerifySettings {
            enabled: true,
            ..Default::default()
        },
        Some(v) => VerifySettings {
            enabled: v.enabled,
            checks: v.checks,
            tolerances: v.tolerances,
            mismatched_pairing: v.mismatched_pairing,
        },
    };

    if let Some(note) = &raw.seed_note {
        if note != "zero" {
            return Err(invalid(
                "seed_note",
                format!("only the zero seed is constructed (got `{note}`)"),
            ));
        }
    }

    let output = OutputPaths {
        csv: raw.output.as_ref().and_then(|o| o.csv.as_ref()).map(PathBuf::from),
        report: raw
            .output
            .as_ref()
            .and_then(|o| o.report.as_ref())
            .map(PathBuf::from),
    };

    Ok(RunConfig {
        mode,
        defect,
        solitons,
        psi0_init,
        center_init,
        grid,
        verify,
        output,
    })
}

/// The published JSON schema for run configurations.
pub fn schema_json() -> String {
    let schema = serde_json::json!({
        "$schema": "http://json-schema.org/draft-07/schema#",
        "title": "defect-nls run configuration",
        "type": "object",
        "required": ["mode", "defect", "grid"],
        "additionalProperties": false,
        "definitions": {
            "complex": {
                "type": "array",
                "items": {"type": "number"},
                "minItems": 2,
                "maxItems": 2,
                "description": "complex number as [re, im]"
            },
            "vec2": {
                "type": "array",
                "items": {"$ref": "#/definitions/complex"},
                "minItems": 2,
                "maxItems": 2
            },
            "axis": {
                "type": "array",
                "description": "[min, max, samples]",
                "items": [
                    {"type": "number"},
                    {"type": "number"},
                    {"type": "integer", "minimum": 2}
                ],
                "minItems": 3,
                "maxItems": 3
            }
        },
        "properties": {
            "mode": {
                "type": "string",
                "enum": ["defect-nsoliton", "destructive", "whole-line"]
            },
            "defect": {
                "type": "object",
                "required": ["alpha", "beta", "branch"],
                "additionalProperties": false,
                "properties": {
                    "alpha": {"type": "number"},
                    "beta": {"type": "number", "description": "nonzero"},
                    "branch": {"type": "string", "enum": ["plus", "minus"]}
                }
            },
            "solitons": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["lambda", "init"],
                    "additionalProperties": false,
                    "properties": {
                        "lambda": {"$ref": "#/definitions/complex"},
                        "init": {"$ref": "#/definitions/vec2"}
                    }
                }
            },
            "psi0_init": {
                "$ref": "#/definitions/vec2",
                "description": "init of the extra solution at lambda0; default [[1,0],[0,0]]"
            },
            "center_init": {
                "$ref": "#/definitions/vec2",
                "description": "init of the boundary-bound dressing; required in destructive mode"
            },
            "grid": {
                "type": "object",
                "required": ["t", "x"],
                "additionalProperties": false,
                "properties": {
                    "t": {"$ref": "#/definitions/axis"},
                    "x": {"$ref": "#/definitions/axis"}
                }
            },
            "verify": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "enabled": {"type": "boolean", "default": true},
                    "checks": {
                        "type": "object",
                        "additionalProperties": {"type": "boolean"}
                    },
                    "tolerances": {
                        "type": "object",
                        "additionalProperties": {"type": "number"}
                    },
                    "mismatched_pairing": {"type": "boolean", "default": false}
                }
            },
            "output": {
                "type": "object",
                "additionalProperties": false,
                "properties": {
                    "csv": {"type": "string"},
                    "report": {"type": "string"}
                }
            },
            "seed_note": {"type": "string", "enum": ["zero"]}
        }
    });
    serde_json::to_string_pretty(&schema).expect("static schema serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1_LEFT: &str = r#"{
        "mode": "defect-nsoliton",
        "defect": {"alpha": 0.0, "beta": 1.0, "branch": "plus"},
        "solitons": [{"lambda": [1.0, 1.0], "init": [[1.0, 0.0], [1.0, 0.0]]}],
        "grid": {"t": [-3.0, 3.0, 61], "x": [-8.0, 8.0, 161]},
        "seed_note": "zero"
    }"#;

    #[test]
    fn parses_valid_config() {
        let cfg = parse_config_str(FIG1_LEFT).unwrap();
        assert_eq!(cfg.mode, RunMode::DefectNsoliton);
        assert_eq!(cfg.solitons.len(), 1);
        assert_eq!(cfg.defect.beta, 1.0);
        assert!(cfg.verify.enabled);
        assert_eq!(cfg.grid.nt, 61);
    }

    #[test]
    fn rejects_zero_beta() {
        let bad = FIG1_LEFT.replace("\"beta\": 1.0", "\"beta\": 0.0");
        match parse_config_str(&bad) {
            Err(Error::InvariantViolation { field, .. }) => assert_eq!(field, "defect.beta"),
            other => panic!("expected beta violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_real_lambda() {
        let bad = FIG1_LEFT.replace("[1.0, 1.0]", "[1.0, 0.0]");
        match parse_config_str(&bad) {
            Err(Error::InvariantViolation { field, .. }) => {
                assert_eq!(field, "solitons[0].lambda")
            }
            other => panic!("expected lambda violation, got {other:?}"),
        }
    }

    #[test]
    fn rejects_syntax_and_shape_errors() {
        assert!(matches!(
            parse_config_str("{not json"),
            Err(Error::ParseError { line: 1, .. })
        ));
        assert!(matches!(
            parse_config_str(r#"{"mode": "defect-nsoliton"}"#),
            Err(Error::SchemaViolation(_))
        ));
        assert!(matches!(
            parse_config_str(&FIG1_LEFT.replace("\"solitons\"", "\"solitonz\"")),
            Err(Error::SchemaViolation(_))
        ));
    }

    #[test]
    fn destructive_requires_center_init() {
        let cfg = r#"{
            "mode": "destructive",
            "defect": {"alpha": 0.0, "beta": 1.0, "branch": "plus"},
            "grid": {"t": [-5.0, 5.0, 21], "x": [-10.0, 2.0, 25]}
        }"#;
        match parse_config_str(cfg) {
            Err(Error::InvariantViolation { field, .. }) => assert_eq!(field, "center_init"),
            other => panic!("expected center_init violation, got {other:?}"),
        }
        let ok = cfg.replace(
            "\"grid\"",
            "\"center_init\": [[1.0, 0.0], [1.0, 0.0]], \"grid\"",
        );
        assert!(parse_config_str(&ok).is_ok());
    }

    #[test]
    fn rejects_forbidden_lambda_and_duplicates() {
        // λ = λ₀* = i/2 for α=0, β=1, plus
        let bad = FIG1_LEFT.replace("[1.0, 1.0]", "[0.0, 0.5]");
        assert!(matches!(
            parse_config_str(&bad),
            Err(Error::InvariantViolation { .. })
        ));
        let dup = FIG1_LEFT.replace(
            r#"[{"lambda": [1.0, 1.0], "init": [[1.0, 0.0], [1.0, 0.0]]}]"#,
            r#"[{"lambda": [1.0, 1.0], "init": [[1.0, 0.0], [1.0, 0.0]]},
               {"lambda": [1.0, 1.0], "init": [[2.0, 0.0], [1.0, 0.0]]}]"#,
        );
        assert!(matches!(
            parse_config_str(&dup),
            Err(Error::InvariantViolation { .. })
        ));
    }

    #[test]
    fn grid_limits() {
        let bad = FIG1_LEFT.replace("[-3.0, 3.0, 61]", "[3.0, -3.0, 61]");
        assert!(parse_config_str(&bad).is_err());
        let bad = FIG1_LEFT.replace("[-3.0, 3.0, 61]", "[-3.0, 3.0, 1]");
        assert!(parse_config_str(&bad).is_err());
        let bad = FIG1_LEFT.replace("[-3.0, 3.0, 61]", "[-3.0, 3.0, 100000]");
        let bad = bad.replace("[-8.0, 8.0, 161]", "[-8.0, 8.0, 101]");
        assert!(parse_config_str(&bad).is_err());
    }

    #[test]
    fn axis_snaps_origin() {
        let g = GridSpec {
            t_min: 0.0,
            t_max: 1.0,
            x_min: -8.0,
            x_max: 8.0,
            nt: 2,
            nx: 321,
        };
        let xs = g.x_values();
        assert!(xs.contains(&0.0), "origin node must land exactly on 0");
        assert_eq!(xs.len(), 321);
    }

    #[test]
    fn schema_is_valid_json() {
        let schema: serde_json::Value = serde_json::from_str(&schema_json()).unwrap();
        assert_eq!(schema["title"], "defect-nls run configuration");
    }
}

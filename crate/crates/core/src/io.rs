//! Module files and report rendering.
//!
//! A module file is JSON of the form
//! `{"arity": n, "dim": d, "legs": [[[ [re, im], ... ], ...], ...]}` with legs
//! stored row-major, plus optional `name`, `seed` and `class_tag` fields.
//! Other fields are ignored, so module reports load back as modules.

use num_complex::Complex64;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::algebra::PModule;
use crate::error::{Error, Result};
use crate::linalg::CMatrix;

/// Significant digits kept by every rendered float.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Optional descriptive fields carried by a module file.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ModuleMeta {
    pub name: Option<String>,
    pub seed: Option<u64>,
    pub class_tag: Option<String>,
}

#[derive(Deserialize)]
struct RawModuleFile {
    arity: usize,
    dim: usize,
    legs: Vec<Vec<Vec<Vec<f64>>>>,
    #[serde(default)]
    name: Option<String>,
    #[serde(default)]
    seed: Option<u64>,
    #[serde(default)]
    class_tag: Option<String>,
}

/// `x` rounded to [`SIGNIFICANT_DIGITS`] significant digits; `-0` becomes `0`.
pub fn round_sig(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x).parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn num(x: f64) -> Value {
    serde_json::Number::from_f64(round_sig(x)).map(Value::Number).unwrap_or(Value::Null)
}

pub fn complex(z: Complex64) -> Value {
    Value::Array(vec![num(z.re), num(z.im)])
}

pub fn matrix(m: &CMatrix) -> Value {
    Value::Array((0..m.rows()).map(|i| Value::Array((0..m.cols()).map(|j| complex(m[(i, j)])).collect())).collect())
}

/// Parses a module file and returns it with its metadata, checking shapes
/// only.
pub fn parse_module_unchecked(text: &str) -> Result<(PModule, ModuleMeta)> {
    let raw: RawModuleFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.arity < 2 {
        return Err(Error::Shape(format!("arity must be at least 2, got {}", raw.arity)));
    }
    if raw.legs.len() != raw.arity {
        return Err(Error::Shape(format!("legs: expected {} legs, got {}", raw.arity, raw.legs.len())));
    }
    let d = raw.dim;
    if d == 0 {
        return Err(Error::Shape("dim must be positive".into()));
    }
    let mut legs = Vec::with_capacity(raw.arity);
    for (k, leg) in raw.legs.iter().enumerate() {
        if leg.len() != d {
            return Err(Error::Shape(format!("legs[{k}]: expected {d} rows, got {}", leg.len())));
        }
        let mut m = CMatrix::zeros(d, d);
        for (i, row) in leg.iter().enumerate() {
            if row.len() != d {
                return Err(Error::Shape(format!("legs[{k}][{i}]: expected {d} entries, got {}", row.len())));
            }
            for (j, z) in row.iter().enumerate() {
                if z.len() != 2 {
                    return Err(Error::Shape(format!(
                        "legs[{k}][{i}][{j}]: expected a [re, im] pair, got {} numbers",
                        z.len()
                    )));
                }
                m[(i, j)] = Complex64::new(z[0], z[1]);
            }
        }
        legs.push(m);
    }
    let module = PModule::new(legs).map_err(|e| Error::Shape(e.to_string()))?;
    Ok((module, ModuleMeta { name: raw.name, seed: raw.seed, class_tag: raw.class_tag }))
}

/// Parses a module file and checks the Pythagorean identity at `tol`.
pub fn parse_module_file(text: &str, tol: f64) -> Result<PModule> {
    let (m, _) = parse_module_unchecked(text)?;
    let v = m.validate(tol);
    if !v.pass {
        return Err(Error::PythagoreanViolation { residual: v.residual, tol });
    }
    Ok(m)
}

pub fn module_value(m: &PModule, meta: &ModuleMeta) -> Value {
    let mut obj = Map::new();
    obj.insert("arity".into(), json!(m.arity()));
    obj.insert("dim".into(), json!(m.dim()));
    obj.insert("legs".into(), Value::Array(m.legs().iter().map(matrix).collect()));
    if let Some(n) = &meta.name {
        obj.insert("name".into(), json!(n));
    }
    if let Some(s) = meta.seed {
        obj.insert("seed".into(), json!(s));
    }
    if let Some(c) = &meta.class_tag {
        obj.insert("class_tag".into(), json!(c));
    }
    Value::Object(obj)
}

/// Module file text, entries rounded to [`SIGNIFICANT_DIGITS`] digits.
pub fn serialize_module(m: &PModule, meta: &ModuleMeta) -> String {
    render_json(&module_value(m, meta))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
}

pub fn render(v: &Value, format: Format) -> String {
    match format {
        Format::Json => render_json(v),
        Format::Text => render_text(v),
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports always serialize");
    s.push('\n');
    s
}

/// Indented `key: value` listing; arrays of scalars stay on one line.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    text_into(v, 0, &mut out);
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(items) => items.iter().all(|x| !x.is_object() && is_flat(x)),
        Value::Object(_) => false,
        _ => true,
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::Array(items) => format!("[{}]", items.iter().map(inline).collect::<Vec<_>>().join(", ")),
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

fn text_into(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                if is_flat(x) {
                    out.push_str(&format!("{pad}{k}: {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}{k}:\n"));
                    text_into(x, depth + 1, out);
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                if is_flat(x) {
                    out.push_str(&format!("{pad}[{i}] {}\n", inline(x)));
                } else {
                    out.push_str(&format!("{pad}[{i}]\n"));
                    text_into(x, depth + 1, out);
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

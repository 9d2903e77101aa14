//! JSON matrix files: `{"rows": 2, "cols": 2, "entries": [[re, im], 1.5, ...]}`
//! in row-major order. A bare number stands for a real entry.

use std::path::Path;

use qmatrix_core::{Complex64, ComplexMatrix};
use serde_json::{json, Value};

use crate::CliError;

pub fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
    parse_matrix(&text)
        .map_err(|e| CliError::validation(format!("{}: {}", path.display(), e.message)))
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, CliError> {
    let value: Value = serde_json::from_str(text)
        .map_err(|e| CliError::validation(format!("invalid JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| CliError::validation("expected a JSON object"))?;
    let dim = |field: &str| -> Result<usize, CliError> {
        obj.get(field)
            .and_then(Value::as_u64)
            .filter(|&d| d > 0)
            .map(|d| d as usize)
            .ok_or_else(|| {
                CliError::validation(format!("field `{field}` must be a positive integer"))
            })
    };
    let rows = dim("rows")?;
    let cols = dim("cols")?;
    let raw = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::validation("field `entries` must be an array"))?;
    if raw.len() != rows * cols {
        return Err(CliError::validation(format!(
            "field `entries` has {} values, expected rows * cols = {}",
            raw.len(),
            rows * cols
        )));
    }
    let entries = raw
        .iter()
        .enumerate()
        .map(|(i, v)| {
            parse_entry(v).ok_or_else(|| {
                CliError::validation(format!("field `entries[{i}]` must be a number or [re, im]"))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComplexMatrix::new(rows, cols, entries)?)
}

fn parse_entry(v: &Value) -> Option<Complex64> {
    if let Some(x) = v.as_f64() {
        return Some(Complex64::new(x, 0.0));
    }
    match v.as_array()?.as_slice() {
        [re, im] => Some(Complex64::new(re.as_f64()?, im.as_f64()?)),
        _ => None,
    }
}

pub fn matrix_to_json(m: &ComplexMatrix) -> Value {
    let entries: Vec<Value> = m.entries().iter().map(|z| json!([z.re, z.im])).collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

//! Input parsing and output rendering.
//!
//! Inputs: weight/probability vectors as CSV rows (one vector per line,
//! `#` comments skipped) or a JSON array of arrays; states additionally
//! accept `re+imj` tokens or JSON `[re, im]` pairs. Outputs: CSV with the
//! manifest embedded as `#` comment lines, JSON as `{manifest, rows}`, or an
//! aligned table. All floats are rendered at 12 significant digits, which is
//! a fixed point of print→parse→print.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use effnum::num_complex::Complex64;

use crate::CliError;

/// 12-significant-digit rendering used for every float we emit.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.11e}")
}

/// Quantizes to the emitted precision, for JSON number output.
pub fn quantize(x: f64) -> f64 {
    fmt_float(x).parse().expect("formatted float reparses")
}

#[derive(Clone, Debug)]
pub enum Cell {
    Int(i64),
    Float(f64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Float(v) => fmt_float(*v),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn to_json(&self) -> serde_json::Value {
        match self {
            Cell::Int(v) => serde_json::Value::from(*v),
            Cell::Float(v) => serde_json::Number::from_f64(quantize(*v))
                .map(serde_json::Value::Number)
                .unwrap_or(serde_json::Value::Null),
            Cell::Text(s) => serde_json::Value::from(s.clone()),
            Cell::Bool(b) => serde_json::Value::from(*b),
        }
    }
}

/// Run metadata embedded in or accompanying every output.
#[derive(Clone, Debug, Default)]
pub struct Manifest {
    entries: BTreeMap<String, String>,
}

impl Manifest {
    pub fn new(command: &str) -> Self {
        let mut entries = BTreeMap::new();
        entries.insert("command".into(), command.into());
        entries.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        entries.insert("rng".into(), effnum::sample::RNG_ALGORITHM.into());
        // Wall-clock stamps would break bitwise reproducibility of seeded
        // runs, so the timestamp is recorded only when the caller pins one
        // via SOURCE_DATE_EPOCH.
        if let Ok(epoch) = std::env::var("SOURCE_DATE_EPOCH") {
            entries.insert("timestamp".into(), epoch);
        }
        Self { entries }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.into(), value.to_string());
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
    Table,
}

/// Tabular command output.
#[derive(Clone, Debug)]
pub struct Output {
    pub manifest: Manifest,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
            Format::Table => self.render_table(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.manifest.entries {
            let _ = writeln!(out, "# {k}={v}");
        }
        let _ = writeln!(out, "{}", self.columns.join(","));
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    fn render_json(&self) -> String {
        let manifest: serde_json::Map<String, serde_json::Value> = self
            .manifest
            .entries
            .iter()
            .map(|(k, v)| (k.clone(), serde_json::Value::from(v.clone())))
            .collect();
        let rows: Vec<serde_json::Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: serde_json::Map<String, serde_json::Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(c, cell)| (c.clone(), cell.to_json()))
                    .collect();
                serde_json::Value::Object(obj)
            })
            .collect();
        let doc = serde_json::json!({ "manifest": manifest, "rows": rows });
        let mut s = serde_json::to_string_pretty(&doc).expect("static structure serializes");
        s.push('\n');
        s
    }

    fn render_table(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.manifest.entries {
            let _ = writeln!(out, "# {k}={v}");
        }
        let rendered: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::render).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(String::len).collect();
        for row in &rendered {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.len());
            }
        }
        let header: Vec<String> = self
            .columns
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        let _ = writeln!(out, "{}", header.join("  "));
        for row in &rendered {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  "));
        }
        out
    }

    pub fn write(&self, format: Format, out_path: Option<&Path>) -> Result<(), CliError> {
        let text = self.render(format);
        match out_path {
            Some(path) => fs::write(path, text)
                .map_err(|e| CliError::Runtime(format!("cannot write {}: {e}", path.display()))),
            None => {
                print!("{text}");
                Ok(())
            }
        }
    }
}

fn read_to_string(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Parse(format!("cannot read stdin: {e}")))?;
        Ok(buf)
    } else {
        fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
    }
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('[')
}

/// Reads real-valued vectors: one CSV row per vector, or a JSON array of
/// arrays (a flat JSON array is a single vector).
pub fn read_vectors(path: &Path) -> Result<Vec<Vec<f64>>, CliError> {
    let text = read_to_string(path)?;
    if looks_like_json(&text) {
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: invalid JSON: {e}", path.display())))?;
        return json_vectors(&value)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())));
    }
    let mut vectors = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut row = Vec::new();
        for tok in line.split(',') {
            let tok = tok.trim();
            let v: f64 = tok.parse().map_err(|_| {
                CliError::Parse(format!(
                    "{}:{}: cannot parse `{tok}` as a number",
                    path.display(),
                    lineno + 1
                ))
            })?;
            row.push(v);
        }
        vectors.push(row);
    }
    if vectors.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no data rows found",
            path.display()
        )));
    }
    Ok(vectors)
}

fn json_vectors(value: &serde_json::Value) -> Result<Vec<Vec<f64>>, String> {
    let arr = value.as_array().ok_or("expected a JSON array")?;
    if arr.iter().all(serde_json::Value::is_number) {
        let row = arr
            .iter()
            .map(|v| v.as_f64().ok_or_else(|| format!("bad number {v}")))
            .collect::<Result<Vec<f64>, _>>()?;
        return Ok(vec![row]);
    }
    arr.iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or(format!("row {i} is not an array"))?
                .iter()
                .map(|v| v.as_f64().ok_or_else(|| format!("row {i}: bad number {v}")))
                .collect()
        })
        .collect()
}

/// Parses one complex amplitude: `re`, `re+imj`, or `re-imj` (also accepts a
/// trailing `i`).
pub fn parse_complex(tok: &str) -> Result<Complex64, String> {
    let t = tok.trim();
    if t.is_empty() {
        return Err("empty amplitude".into());
    }
    let imag_suffix = t.ends_with('j') || t.ends_with('i');
    if !imag_suffix {
        return t
            .parse::<f64>()
            .map(|re| Complex64::new(re, 0.0))
            .map_err(|_| format!("cannot parse `{tok}` as an amplitude"));
    }
    let body = &t[..t.len() - 1];
    // split at the sign of the imaginary part (skip a leading sign and any
    // exponent sign)
    let bytes = body.as_bytes();
    let mut split = None;
    for i in (1..bytes.len()).rev() {
        let c = bytes[i];
        if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
            split = Some(i);
            break;
        }
    }
    match split {
        None => body
            .parse::<f64>()
            .map(|im| Complex64::new(0.0, im))
            .map_err(|_| format!("cannot parse `{tok}` as an amplitude")),
        Some(i) => {
            let re: f64 = body[..i]
                .parse()
                .map_err(|_| format!("cannot parse `{tok}` as an amplitude"))?;
            let im_str = &body[i..];
            let im: f64 = if im_str == "+" {
                1.0
            } else if im_str == "-" {
                -1.0
            } else {
                im_str
                    .parse()
                    .map_err(|_| format!("cannot parse `{tok}` as an amplitude"))?
            };
            Ok(Complex64::new(re, im))
        }
    }
}

/// Reads complex state vectors: CSV rows of amplitude tokens, or JSON rows
/// whose entries are numbers or `[re, im]` pairs.
pub fn read_states(path: &Path) -> Result<Vec<Vec<Complex64>>, CliError> {
    let text = read_to_string(path)?;
    if looks_like_json(&text) {
        let value: serde_json::Value = serde_json::from_str(&text)
            .map_err(|e| CliError::Parse(format!("{}: invalid JSON: {e}", path.display())))?;
        return json_states(&value)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())));
    }
    let mut states = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut amps = Vec::new();
        for tok in line.split(',') {
            amps.push(
                parse_complex(tok).map_err(|e| {
                    CliError::Parse(format!("{}:{}: {e}", path.display(), lineno + 1))
                })?,
            );
        }
        states.push(amps);
    }
    if states.is_empty() {
        return Err(CliError::Parse(format!(
            "{}: no data rows found",
            path.display()
        )));
    }
    Ok(states)
}

fn complex_from_json(v: &serde_json::Value) -> Result<Complex64, String> {
    if let Some(x) = v.as_f64() {
        return Ok(Complex64::new(x, 0.0));
    }
    if let Some(s) = v.as_str() {
        return parse_complex(s);
    }
    if let Some(pair) = v.as_array() {
        if pair.len() == 2 {
            let re = pair[0].as_f64().ok_or_else(|| format!("bad pair {v}"))?;
            let im = pair[1].as_f64().ok_or_else(|| format!("bad pair {v}"))?;
            return Ok(Complex64::new(re, im));
        }
    }
    Err(format!("cannot interpret {v} as an amplitude"))
}

fn json_states(value: &serde_json::Value) -> Result<Vec<Vec<Complex64>>, String> {
    let arr = value.as_array().ok_or("expected a JSON array")?;
    let is_state = |v: &serde_json::Value| {
        v.is_number()
            || v.is_string()
            || v.as_array()
                .is_some_and(|p| p.len() == 2 && p[0].is_number())
    };
    if arr.iter().all(is_state) {
        let amps = arr
            .iter()
            .map(complex_from_json)
            .collect::<Result<_, _>>()?;
        return Ok(vec![amps]);
    }
    arr.iter()
        .enumerate()
        .map(|(i, row)| {
            row.as_array()
                .ok_or(format!("row {i} is not an array"))?
                .iter()
                .map(complex_from_json)
                .collect()
        })
        .collect()
}

/// Reads tabulated counting-function knots: CSV lines `w,value` or a JSON
/// array of `[w, value]` pairs.
pub fn read_knots(path: &Path) -> Result<Vec<(f64, f64)>, CliError> {
    let rows = read_vectors(path)?;
    rows.into_iter()
        .enumerate()
        .map(|(i, row)| {
            if row.len() == 2 {
                Ok((row[0], row[1]))
            } else {
                Err(CliError::Parse(format!(
                    "{}: knot row {} must have exactly two values (w, value)",
                    path.display(),
                    i + 1
                )))
            }
        })
        .collect()
}

/// Parses a 1-based index-block partition spec like `1,2|3,4`.
pub fn parse_partition(spec: &str, n: usize) -> Result<Vec<Vec<usize>>, CliError> {
    let mut blocks = Vec::new();
    for (b, part) in spec.split('|').enumerate() {
        let mut block = Vec::new();
        for tok in part.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let idx: usize = tok.parse().map_err(|_| {
                CliError::Parse(format!("partition block {}: bad index `{tok}`", b + 1))
            })?;
            if idx == 0 || idx > n {
                return Err(CliError::Parse(format!(
                    "partition block {}: index {idx} outside 1..={n}",
                    b + 1
                )));
            }
            block.push(idx - 1);
        }
        if block.is_empty() {
            return Err(CliError::Parse(format!(
                "partition block {} is empty",
                b + 1
            )));
        }
        blocks.push(block);
    }
    Ok(blocks)
}

/// Parses a comma-separated list (alphas, sizes).
pub fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<T>()
                .map_err(|_| CliError::Usage(format!("cannot parse `{t}` in {what} list")))
        })
        .collect()
}

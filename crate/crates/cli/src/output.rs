use std::io::Write;

use serde_json::Value;

use crate::error::Result;

/// Six significant digits for humans.
pub fn sig6(x: f64) -> String {
    if x.is_nan() {
        return "NaN".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let e = x.abs().log10().floor() as i32;
    if (-4..6).contains(&e) {
        format!("{:.*}", (5 - e).max(0) as usize, x)
    } else {
        format!("{x:.5e}")
    }
}

/// Full-precision scientific notation.
pub fn full(x: f64) -> String {
    format!("{x:.16e}")
}

/// Flattens a JSON value to dotted paths and leaf values.
pub fn flatten(v: &Value) -> Vec<(String, Value)> {
    fn walk(prefix: String, v: &Value, out: &mut Vec<(String, Value)>) {
        let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
        match v {
            Value::Object(m) => m.iter().for_each(|(k, x)| walk(join(k), x, out)),
            Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| walk(join(&i.to_string()), x, out)),
            leaf => out.push((prefix, leaf.clone())),
        }
    }
    let mut out = Vec::new();
    walk(String::new(), v, &mut out);
    out
}

fn leaf(v: &Value, number: fn(f64) -> String) -> String {
    match v {
        Value::Number(n) => n.as_f64().map(number).unwrap_or_else(|| n.to_string()),
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

pub fn json(out: &mut impl Write, v: &Value) -> Result<()> {
    serde_json::to_writer_pretty(&mut *out, v).map_err(std::io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// `key,value` rows with full-precision numbers.
pub fn key_value_csv(out: &mut impl Write, v: &Value) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["key", "value"])?;
    for (k, x) in flatten(v) {
        w.write_record([k, leaf(&x, full)])?;
    }
    w.flush()?;
    Ok(())
}

/// Aligned rows; numbers rounded to six significant digits.
pub fn table(out: &mut impl Write, header: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, c) in widths.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec()))?;
    for r in rows {
        writeln!(out, "{}", line(r.iter().map(String::as_str).collect()))?;
    }
    Ok(())
}

pub fn key_value_table(out: &mut impl Write, v: &Value) -> Result<()> {
    let rows: Vec<Vec<String>> = flatten(v).into_iter().map(|(k, x)| vec![k, leaf(&x, sig6)]).collect();
    table(out, &["key", "value"], &rows)
}

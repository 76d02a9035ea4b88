//! CSV export/import of labeled feature matrices.
//!
//! RFC 4180 framing: comma-delimited, CRLF-free output with a header row.
//! Fields are quoted when they contain a delimiter, quote, or newline, and
//! empty fields are always quoted so they survive round-trips unambiguously.
//! Numbers use the shortest representation that round-trips through `f64`.

use crate::features::{FeatureVector, FEATURE_NAMES};

fn quote_field(s: &str) -> String {
    if s.is_empty() || s.contains(',') || s.contains('"') || s.contains('\n') || s.contains('\r') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn format_number(x: f64) -> String {
    // `{}` on f64 prints the shortest string that parses back exactly
    format!("{x}")
}

/// Serialize labeled vectors: header of the 17 canonical feature names plus
/// `label`, then one row per script.
pub fn export_feature_matrix(vectors: &[(String, FeatureVector)]) -> String {
    let mut out = String::new();
    out.push_str(&FEATURE_NAMES.join(","));
    out.push_str(",label\n");
    for (label, fv) in vectors {
        let row: Vec<String> = fv.as_array().iter().map(|v| format_number(*v)).collect();
        out.push_str(&row.join(","));
        out.push(',');
        out.push_str(&quote_field(label));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CsvError {
    #[error("csv row {row}: {message}")]
    Malformed { row: usize, message: String },
    #[error("csv header mismatch: expected the 17 canonical feature columns plus 'label'")]
    Header,
}

fn split_row(line: &str, row: usize) -> Result<Vec<String>, CsvError> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            match c {
                '"' => {
                    if chars.peek() == Some(&'"') {
                        chars.next();
                        cur.push('"');
                    } else {
                        quoted = false;
                    }
                }
                _ => cur.push(c),
            }
        } else {
            match c {
                '"' if cur.is_empty() => quoted = true,
                ',' => fields.push(std::mem::take(&mut cur)),
                '"' => {
                    return Err(CsvError::Malformed {
                        row,
                        message: "stray quote".into(),
                    })
                }
                _ => cur.push(c),
            }
        }
    }
    if quoted {
        return Err(CsvError::Malformed {
            row,
            message: "unterminated quoted field".into(),
        });
    }
    fields.push(cur);
    Ok(fields)
}

/// Parse a matrix produced by [`export_feature_matrix`].
pub fn parse_feature_matrix(text: &str) -> Result<Vec<(String, FeatureVector)>, CsvError> {
    let mut lines = text.lines();
    let header = lines.next().ok_or(CsvError::Header)?;
    let expected = format!("{},label", FEATURE_NAMES.join(","));
    if header != expected {
        return Err(CsvError::Header);
    }
    let mut out = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.is_empty() {
            continue;
        }
        let row = i + 2;
        let fields = split_row(line, row)?;
        if fields.len() != 18 {
            return Err(CsvError::Malformed {
                row,
                message: format!("expected 18 fields, found {}", fields.len()),
            });
        }
        let mut values = [0.0f64; 17];
        for (j, v) in values.iter_mut().enumerate() {
            *v = fields[j].parse().map_err(|_| CsvError::Malformed {
                row,
                message: format!("field '{}' is not a number", fields[j]),
            })?;
        }
        out.push((fields[17].clone(), FeatureVector::from_array(values)));
    }
    Ok(out)
}

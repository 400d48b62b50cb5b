//! Rate CSV reader: header `t,wx,wy,wz[,vx,vy,vz]`, `#` comment lines.

use quatmotion::kinematics::{RateSample, RateSeries};

use crate::error::{CliError, CliResult};

const BASE: [&str; 4] = ["t", "wx", "wy", "wz"];
const EXTRA: [&str; 3] = ["vx", "vy", "vz"];

/// Parsed series and whether the `v` columns were present.
pub fn parse_rates(text: &str) -> CliResult<(RateSeries, bool)> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let headers = rdr.headers().map_err(csv_error)?.clone();
    let names: Vec<&str> = headers.iter().collect();
    let has_v = if names == BASE {
        false
    } else if names.len() == 7 && names[..4] == BASE && names[4..] == EXTRA {
        true
    } else {
        return Err(CliError::Schema(format!(
            "rate header must be `t,wx,wy,wz` or `t,wx,wy,wz,vx,vy,vz`, found `{}`",
            names.join(",")
        )));
    };
    let mut samples = Vec::new();
    let mut lines = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map_or(0, |p| p.line());
        let mut vals = [0.0; 7];
        for (col, field) in rec.iter().enumerate() {
            vals[col] = field.parse::<f64>().ok().filter(|x| x.is_finite()).ok_or_else(|| CliError::Parse {
                line,
                column: col + 1,
                message: format!("`{field}` is not a finite number"),
            })?;
        }
        samples.push(RateSample {
            t: vals[0],
            omega: [vals[1], vals[2], vals[3]],
            v: [vals[4], vals[5], vals[6]],
        });
        lines.push(line);
    }
    let series = RateSeries::new(samples).map_err(|e| match e {
        quatmotion::Error::NonmonotoneTime { index } => CliError::Parse {
            line: lines[index],
            column: 1,
            message: "time is not strictly increasing".into(),
        },
        e => e.into(),
    })?;
    Ok((series, has_v))
}

fn csv_error(e: csv::Error) -> CliError {
    let line = e.position().map_or(0, |p| p.line());
    let column = match e.kind() {
        csv::ErrorKind::UnequalLengths { expected_len, len, .. } => (*expected_len).min(*len) as usize + 1,
        _ => 1,
    };
    CliError::Parse { line, column, message: e.to_string() }
}

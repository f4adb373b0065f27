use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use crate::{CliError, CliResult};

/// 17 significant digits; empty for missing or non-finite values.
pub(crate) fn cell(v: Option<f64>) -> String {
    match v {
        // adding +0 turns a negative zero into a positive one
        Some(x) if x.is_finite() => format!("{:.16e}", x + 0.0),
        _ => String::new(),
    }
}

pub(crate) fn ok_cell<E: std::fmt::Display>(what: &str, v: Result<f64, E>) -> String {
    match v {
        Ok(x) => cell(Some(x)),
        Err(e) => {
            log::warn!("{what}: {e}");
            String::new()
        }
    }
}

/// Write a header and rows to `out`, or to stdout when it is None.
pub(crate) fn write_csv(out: Option<&Path>, header: &[String], rows: &[Vec<String>]) -> CliResult<()> {
    let name = out.map_or("stdout".to_string(), |p| p.display().to_string());
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| CliError::io(&name, e))?)),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(sink);
    let wrap = |e: csv::Error| CliError::io(&name, io::Error::other(e.to_string()));
    w.write_record(header).map_err(wrap)?;
    for r in rows {
        w.write_record(r).map_err(wrap)?;
    }
    w.flush().map_err(|e| CliError::io(&name, e))?;
    Ok(())
}

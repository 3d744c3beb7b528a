//! CSV formatting and all-or-nothing file output.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

/// 17 significant digits in scientific notation; parses back to the same f64.
pub fn num(v: f64) -> String {
    format!("{v:.16e}")
}

/// CSV text built up row by row.
pub struct Table {
    text: String,
    rows: usize,
}

impl Table {
    pub fn new(header: &str) -> Self {
        Table {
            text: format!("{header}\n"),
            rows: 0,
        }
    }

    pub fn row(&mut self, fields: &[String]) {
        let _ = writeln!(self.text, "{}", fields.join(","));
        self.rows += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// Writes to `out`, or standard output when `None`. A file is written to a
    /// temporary sibling and renamed into place, so a failed write leaves
    /// nothing behind.
    pub fn emit(&self, out: Option<&Path>) -> io::Result<()> {
        match out {
            None => {
                let mut stdout = io::stdout().lock();
                stdout.write_all(self.text.as_bytes())?;
                stdout.flush()
            }
            Some(path) => write_atomic(path, self.text.as_bytes()),
        }
    }
}

fn write_atomic(path: &Path, bytes: &[u8]) -> io::Result<()> {
    let name = path.file_name().ok_or_else(|| {
        io::Error::new(io::ErrorKind::InvalidInput, "output path has no file name")
    })?;
    let mut tmp_name = std::ffi::OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers_round_trip() {
        for v in [0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0] {
            assert_eq!(num(v).parse::<f64>().unwrap(), v);
        }
        assert_eq!(num(0.25), "2.5000000000000000e-1");
    }
}

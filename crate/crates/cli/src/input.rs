//! Reading observations from a data file.
//!
//! One value per line. Lines starting with `#` and blank lines are
//! skipped, and a non-numeric first line is taken as a CSV header.

use std::fmt;
use std::io::Read;

#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    /// 1-based line number, if the problem is tied to a line.
    pub line: Option<u64>,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(l) => write!(f, "line {l}: {}", self.message),
            None => write!(f, "{}", self.message),
        }
    }
}

fn err(line: Option<u64>, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_observations<R: Read>(reader: R) -> Result<Vec<f64>, ParseError> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(reader);
    let mut values = Vec::new();
    let mut seen_header = false;
    let mut record = csv::StringRecord::new();
    loop {
        match rdr.read_record(&mut record) {
            Ok(false) => break,
            Ok(true) => {}
            Err(e) => {
                let line = e.position().map(|p| p.line());
                return Err(err(line, e.to_string()));
            }
        }
        let line = record.position().map(|p| p.line());
        if record.len() != 1 {
            return Err(err(line, format!("expected one column, found {}", record.len())));
        }
        let field = &record[0];
        match field.parse::<f64>() {
            Ok(v) if v.is_finite() => values.push(v),
            Ok(_) => return Err(err(line, format!("non-finite value {field:?}"))),
            Err(_) if values.is_empty() && !seen_header => seen_header = true,
            Err(_) => return Err(err(line, format!("not a number: {field:?}"))),
        }
    }
    if values.is_empty() {
        return Err(err(None, "no observations"));
    }
    Ok(values)
}

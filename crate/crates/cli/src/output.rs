//! Tabular output in json-lines, csv and b-file form.

use std::fmt::Write as _;
use std::io::{self, Write};

use clap::ValueEnum;
use selfdesc::BigCount;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[value(name = "json-lines")]
    JsonLines,
    Csv,
    Bfile,
}

/// One cell of a row. Numbers are written unquoted in JSON regardless of
/// size.
#[derive(Debug, Clone)]
pub enum Value {
    Int(u64),
    Big(BigCount),
    Bool(bool),
    Text(String),
}

impl Value {
    fn json(&self, out: &mut String) {
        match self {
            Value::Int(v) => write!(out, "{v}").unwrap(),
            Value::Big(v) => write!(out, "{v}").unwrap(),
            Value::Bool(v) => write!(out, "{v}").unwrap(),
            Value::Text(s) => json_string(s, out),
        }
    }

    fn csv(&self, out: &mut String) {
        match self {
            Value::Int(v) => write!(out, "{v}").unwrap(),
            Value::Big(v) => write!(out, "{v}").unwrap(),
            Value::Bool(v) => write!(out, "{v}").unwrap(),
            Value::Text(s) if s.contains([',', '"', '\n']) => write!(out, "\"{}\"", s.replace('"', "\"\"")).unwrap(),
            Value::Text(s) => out.push_str(s),
        }
    }

    fn plain(&self) -> String {
        match self {
            Value::Int(v) => v.to_string(),
            Value::Big(v) => v.to_string(),
            Value::Bool(v) => v.to_string(),
            Value::Text(s) => s.clone(),
        }
    }
}

fn json_string(s: &str, out: &mut String) {
    out.push('"');
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => write!(out, "\\u{:04x}", c as u32).unwrap(),
            c => out.push(c),
        }
    }
    out.push('"');
}

/// Streams rows with a fixed column list.
///
/// The b-file form writes `index value`, where the index counts rows from
/// zero unless the caller supplies one and the value is the column named by
/// `bfile_value`.
pub struct Table<W: Write> {
    out: W,
    format: OutputFormat,
    columns: Vec<&'static str>,
    bfile_value: &'static str,
    header_written: bool,
    rows: u64,
}

impl<W: Write> Table<W> {
    pub fn new(out: W, format: OutputFormat, columns: Vec<&'static str>, bfile_value: &'static str) -> Self {
        Table {
            out,
            format,
            columns,
            bfile_value,
            header_written: false,
            rows: 0,
        }
    }

    /// Writes a row; `cells` pairs up with the column list, `None` cells are
    /// omitted from JSON and left empty in CSV.
    pub fn row(&mut self, bfile_index: Option<u64>, cells: &[Option<Value>]) -> io::Result<()> {
        debug_assert_eq!(cells.len(), self.columns.len());
        let mut line = String::new();
        match self.format {
            OutputFormat::JsonLines => {
                line.push('{');
                let mut first = true;
                for (name, cell) in self.columns.iter().zip(cells) {
                    if let Some(v) = cell {
                        if !first {
                            line.push(',');
                        }
                        first = false;
                        json_string(name, &mut line);
                        line.push(':');
                        v.json(&mut line);
                    }
                }
                line.push('}');
            }
            OutputFormat::Csv => {
                if !self.header_written {
                    writeln!(self.out, "{}", self.columns.join(","))?;
                    self.header_written = true;
                }
                for (i, cell) in cells.iter().enumerate() {
                    if i > 0 {
                        line.push(',');
                    }
                    if let Some(v) = cell {
                        v.csv(&mut line);
                    }
                }
            }
            OutputFormat::Bfile => {
                let index = bfile_index.unwrap_or(self.rows);
                let value = self
                    .columns
                    .iter()
                    .position(|c| *c == self.bfile_value)
                    .and_then(|i| cells[i].as_ref())
                    .map(Value::plain)
                    .unwrap_or_default();
                write!(line, "{index} {value}").unwrap();
            }
        }
        self.rows += 1;
        writeln!(self.out, "{line}")
    }

    pub fn finish(mut self) -> io::Result<()> {
        if self.format == OutputFormat::Csv && !self.header_written {
            writeln!(self.out, "{}", self.columns.join(","))?;
        }
        self.out.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(format: OutputFormat) -> String {
        let mut buf = Vec::new();
        let mut t = Table::new(&mut buf, format, vec!["n", "seq", "brute", "match"], "brute");
        t.row(
            None,
            &[
                Some(Value::Int(2)),
                Some(Value::Text("0,1,0".into())),
                Some(Value::Int(5)),
                None,
            ],
        )
        .unwrap();
        t.row(
            Some(7),
            &[
                Some(Value::Int(3)),
                None,
                Some(Value::Big(BigCount::from(14u8))),
                Some(Value::Bool(true)),
            ],
        )
        .unwrap();
        t.finish().unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        assert_eq!(
            render(OutputFormat::JsonLines),
            "{\"n\":2,\"seq\":\"0,1,0\",\"brute\":5}\n{\"n\":3,\"brute\":14,\"match\":true}\n"
        );
        assert_eq!(
            render(OutputFormat::Csv),
            "n,seq,brute,match\n2,\"0,1,0\",5,\n3,,14,true\n"
        );
        assert_eq!(render(OutputFormat::Bfile), "0 5\n7 14\n");
    }

    #[test]
    fn escapes() {
        let mut s = String::new();
        json_string("a\"b\\c\n", &mut s);
        assert_eq!(s, "\"a\\\"b\\\\c\\u000a\"");
    }
}

use std::io::Write;

use anyhow::Result;
use serde::Serialize;
use trisum_core::Record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    /// One JSON object per line.
    Json,
    /// Header row, then `identity,triple,n,lhs,rhs,pass`.
    Csv,
    Text,
}

#[derive(Serialize)]
struct JsonRecord<'a> {
    identity: &'a str,
    triple: Option<[u64; 3]>,
    n: u64,
    lhs: i128,
    rhs: i128,
    pass: bool,
}

impl<'a> From<&'a Record> for JsonRecord<'a> {
    fn from(r: &'a Record) -> Self {
        JsonRecord {
            identity: &r.identity,
            triple: r.triple,
            n: r.n,
            lhs: r.lhs,
            rhs: r.rhs,
            pass: r.pass,
        }
    }
}

fn triple_field(t: Option<[u64; 3]>) -> String {
    t.map(|[a, b, c]| format!("{a},{b},{c}"))
        .unwrap_or_default()
}

pub fn text_line(r: &Record) -> String {
    format!(
        "{} {} n={} lhs={} rhs={} {}",
        r.identity,
        r.triple
            .map(|[a, b, c]| format!("({a},{b},{c})"))
            .unwrap_or_else(|| "-".into()),
        r.n,
        r.lhs,
        r.rhs,
        if r.pass { "pass" } else { "FAIL" }
    )
}

pub fn write_records<W: Write>(out: W, records: &[Record], format: Format) -> Result<()> {
    match format {
        Format::Json => {
            let mut out = out;
            for r in records {
                serde_json::to_writer(&mut out, &JsonRecord::from(r))?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["identity", "triple", "n", "lhs", "rhs", "pass"])?;
            for r in records {
                w.write_record([
                    r.identity.clone(),
                    triple_field(r.triple),
                    r.n.to_string(),
                    r.lhs.to_string(),
                    r.rhs.to_string(),
                    r.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Text => {
            let mut out = out;
            for r in records {
                writeln!(out, "{}", text_line(r))?;
            }
            out.flush()?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<Record> {
        vec![
            Record::equality("thm1", Some([1, 1, 7]), 1, 32, 32),
            Record::equality("lemma31.i", None, 5, 8, 4),
        ]
    }

    #[test]
    fn json_lines() {
        let mut buf = Vec::new();
        write_records(&mut buf, &sample(), Format::Json).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "{\"identity\":\"thm1\",\"triple\":[1,1,7],\"n\":1,\"lhs\":32,\"rhs\":32,\"pass\":true}\n\
             {\"identity\":\"lemma31.i\",\"triple\":null,\"n\":5,\"lhs\":8,\"rhs\":4,\"pass\":false}\n"
        );
    }

    #[test]
    fn csv_rows() {
        let mut buf = Vec::new();
        write_records(&mut buf, &sample(), Format::Csv).unwrap();
        assert_eq!(
            String::from_utf8(buf).unwrap(),
            "identity,triple,n,lhs,rhs,pass\nthm1,\"1,1,7\",1,32,32,true\nlemma31.i,,5,8,4,false\n"
        );
    }

    #[test]
    fn text_rows() {
        assert_eq!(
            text_line(&sample()[0]),
            "thm1 (1,1,7) n=1 lhs=32 rhs=32 pass"
        );
        assert_eq!(text_line(&sample()[1]), "lemma31.i - n=5 lhs=8 rhs=4 FAIL");
    }
}

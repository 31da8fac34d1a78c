//! JSON and CSV rendering of reports.
//!
//! JSON is the canonical format. CSV columns per command:
//!
//! - `homology hat`: `n,signs,dim_chain,rank_boundary,dim_homology,suture_span_rank,graded`
//! - `homology inf`: `n,euler,trunc,dim_m2,dim_m1,dim_m,quotient_m1,quotient_m,stable_dimension,stable,witnesses`
//! - `sutures`: `index,images,euler,positive_faces,negative_faces`
//! - `quotient`: `n,catalan,bypass_rank,quotient_dim,graded`
//! - `basis`: `word,n,signs,images,lex_rank,euler,annihilation_check`
//! - `verify`: `suite,check,cases,passed,counterexample`
//! - `export`: `matrix,basis,rows,cols,nonzeros`
//!
//! `graded` is written as `e:dim` pairs joined by `;`, and `images` as
//! space-separated out-points. Missing values are empty fields.

use anyhow::Result;
use clap::ValueEnum;
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Hat,
    Inf,
    Sutures,
    Quotient,
    Basis,
    Verify,
    Export,
}

pub fn render(kind: Kind, format: Format, value: &Value) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value)?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => csv_text(kind, value),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Array(xs) => xs.iter().map(cell).collect::<Vec<_>>().join(" "),
        Value::Object(map) => {
            let mut pairs: Vec<(&String, &Value)> = map.iter().collect();
            pairs.sort_by_key(|(k, _)| k.parse::<i64>().ok());
            pairs.iter().map(|(k, v)| format!("{k}:{}", cell(v))).collect::<Vec<_>>().join(";")
        }
        other => other.to_string(),
    }
}

fn fields(v: &Value, keys: &[&str]) -> Vec<String> {
    keys.iter().map(|k| cell(&v[*k])).collect()
}

fn faces_with(s: &Value, sign: &str) -> String {
    let count = s["faces"].as_array().map_or(0, |fs| fs.iter().filter(|f| f["sign"] == sign).count());
    count.to_string()
}

fn csv_text(kind: Kind, v: &Value) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let empty = Vec::new();
    let list = |key: &str| v[key].as_array().unwrap_or(&empty);
    match kind {
        Kind::Hat => {
            let keys = ["n", "signs", "dim_chain", "rank_boundary", "dim_homology", "suture_span_rank", "graded"];
            w.write_record(keys)?;
            w.write_record(fields(v, &keys))?;
        }
        Kind::Inf => {
            w.write_record([
                "n", "euler", "trunc", "dim_m2", "dim_m1", "dim_m", "quotient_m1", "quotient_m", "stable_dimension", "stable", "witnesses",
            ])?;
            for c in list("classes") {
                let mut row = fields(c, &["n", "euler", "bound"]);
                row.extend((0..3).map(|i| cell(&c["dims"][i])));
                row.extend((0..2).map(|i| cell(&c["quotient_dims"][i])));
                row.extend(fields(c, &["stable_dimension", "stable"]));
                row.push(c["witnesses"].as_array().map_or(0, Vec::len).to_string());
                w.write_record(row)?;
            }
        }
        Kind::Sutures => {
            w.write_record(["index", "images", "euler", "positive_faces", "negative_faces"])?;
            for (i, s) in list("sutures").iter().enumerate() {
                w.write_record([i.to_string(), cell(&s["matching"]), cell(&s["euler"]), faces_with(s, "+"), faces_with(s, "-")])?;
            }
        }
        Kind::Quotient => {
            let keys = ["n", "catalan", "bypass_rank", "quotient_dim", "graded"];
            w.write_record(keys)?;
            w.write_record(fields(v, &keys))?;
        }
        Kind::Basis => {
            let keys = ["word", "n", "signs", "images", "lex_rank", "euler", "annihilation_check"];
            w.write_record(keys)?;
            w.write_record(fields(v, &keys))?;
        }
        Kind::Verify => {
            w.write_record(["suite", "check", "cases", "passed", "counterexample"])?;
            for r in list("reports") {
                for c in r["checks"].as_array().unwrap_or(&empty) {
                    w.write_record([cell(&r["suite"]), cell(&c["name"]), cell(&c["cases"]), cell(&c["passed"]), cell(&c["counterexample"])])?;
                }
            }
        }
        Kind::Export => {
            let keys = ["matrix", "basis", "rows", "cols", "nonzeros"];
            w.write_record(keys)?;
            for f in list("files") {
                w.write_record(fields(f, &keys))?;
            }
        }
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn hat_row() {
        let v = json!({"n": 2, "signs": "ioio", "dim_chain": 2, "rank_boundary": 0, "dim_homology": 2,
                       "suture_span_rank": 2, "graded": {"-1": 1, "1": 1}});
        let text = render(Kind::Hat, Format::Csv, &v).unwrap();
        assert_eq!(text, "n,signs,dim_chain,rank_boundary,dim_homology,suture_span_rank,graded\n2,ioio,2,0,2,2,-1:1;1:1\n");
    }

    #[test]
    fn counterexamples_are_quoted() {
        let v = json!({"reports": [{"suite": "euler", "checks": [{"name": "a", "cases": 3, "passed": false, "counterexample": "x, y"}]}]});
        let text = render(Kind::Verify, Format::Csv, &v).unwrap();
        assert!(text.ends_with("euler,a,3,false,\"x, y\"\n"));
    }
}

//! One function per subcommand, each producing a JSON report.

use std::fs;
use std::path::Path;
use std::sync::Arc;

use anyhow::{Context, Result};
use serde_json::{json, Value};
use stringhom::inf::EulerSummand;
use stringhom::operators::{annihilation_word_check, canonical, suture_quotient, word_vector};
use stringhom::report::hat_report;
use stringhom::verify::{run_all, run_suite, Fault, Suite, SuiteReport, VerifyConfig};
use stringhom::{base_euler, boundary_matrix_hat, enumerate_matchings, enumerate_sutures, truncated_homology, Marking, Word};

use crate::cache::{write_atomic, Cache, CacheKey};

/// A configuration problem the user can fix; reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

pub fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

pub struct Session {
    pub cache: Option<Cache>,
    pub verbose: u8,
}

impl Session {
    fn cached(&self, key: CacheKey, compute: impl FnOnce() -> Result<Value>) -> Result<Value> {
        let Some(cache) = &self.cache else { return compute() };
        if let Some(v) = cache.get(&key) {
            if self.verbose > 0 {
                eprintln!("cache hit: {}", cache.path(&key).display());
            }
            return Ok(v);
        }
        let v = compute()?;
        let path = cache.put(&key, &v)?;
        if self.verbose > 0 {
            eprintln!("cache store: {}", path.display());
        }
        Ok(v)
    }
}

pub fn marking(n: Option<usize>, signs: Option<&str>) -> Result<Arc<Marking>> {
    match (n, signs) {
        (Some(_), Some(_)) => Err(usage("give either --n or --signs, not both")),
        (Some(0), None) => Err(usage("--n must be at least 1")),
        (Some(n), None) => Ok(canonical(n)?),
        (None, Some(s)) => Ok(Arc::new(s.parse::<Marking>()?)),
        (None, None) => Err(usage("one of --n or --signs is required")),
    }
}

pub fn homology_hat(ctx: &Session, mk: &Arc<Marking>) -> Result<Value> {
    let key = CacheKey { command: "homology-hat", signature: mk.signature(), euler: None, bound: None };
    ctx.cached(key, || Ok(serde_json::to_value(hat_report(mk)?)?))
}

/// Euler classes of the right parity with `|e| ≤ n + 1`.
fn default_eulers(mk: &Marking) -> Vec<i64> {
    let n = mk.n() as i64;
    (-(n + 1)..=n + 1).filter(|e| (e + n - 1).rem_euclid(2) == 0).collect()
}

pub fn homology_inf(ctx: &Session, mk: &Arc<Marking>, euler: Option<i64>, bound: usize) -> Result<Value> {
    if bound < 2 {
        return Err(usage("--trunc must be at least 2"));
    }
    if !mk.is_alternating() || mk.basepoint() != 0 {
        return Err(usage(format!("the inf complex needs an alternating marking, got {}", mk.signature())));
    }
    let eulers = match euler {
        Some(e) => {
            EulerSummand::new(mk.clone(), e)?;
            vec![e]
        }
        None => default_eulers(mk),
    };
    let mut classes = Vec::new();
    for e in eulers {
        let key = CacheKey { command: "homology-inf", signature: mk.signature(), euler: Some(e), bound: Some(bound) };
        classes.push(ctx.cached(key, || Ok(serde_json::to_value(truncated_homology(mk, e, bound)?)?))?);
    }
    Ok(json!({ "n": mk.n(), "signs": mk.signature(), "trunc": bound, "classes": classes }))
}

pub fn sutures(ctx: &Session, mk: &Arc<Marking>) -> Result<Value> {
    let key = CacheKey { command: "sutures", signature: mk.signature(), euler: None, bound: None };
    ctx.cached(key, || {
        let all = enumerate_sutures(mk)?;
        Ok(json!({ "n": mk.n(), "signs": mk.signature(), "count": all.len(), "sutures": all }))
    })
}

pub fn quotient(ctx: &Session, mk: &Arc<Marking>) -> Result<Value> {
    let key = CacheKey { command: "quotient", signature: mk.signature(), euler: None, bound: None };
    ctx.cached(key, || Ok(serde_json::to_value(suture_quotient(mk)?)?))
}

pub fn basis(word: &str) -> Result<Value> {
    let w: Word = word.parse()?;
    let sigma = word_vector(&w);
    let mk = sigma.marking();
    Ok(json!({
        "word": w.to_string(),
        "n": mk.n(),
        "signs": mk.signature(),
        "images": sigma,
        "lex_rank": sigma.lex_rank(),
        "euler": base_euler(&sigma)?,
        "annihilation_check": annihilation_word_check(&w),
    }))
}

pub struct VerifyArgs {
    pub suite: Option<Suite>,
    pub max_n: Option<usize>,
    pub marking: Option<Arc<Marking>>,
    pub max_loops: Option<usize>,
    pub max_euler: Option<i64>,
    pub fault: Option<Fault>,
}

pub fn verify(args: VerifyArgs) -> (Vec<SuiteReport>, bool) {
    let mut cfg = VerifyConfig { marking: args.marking, fault: args.fault, ..VerifyConfig::default() };
    if let Some(n) = args.max_n {
        cfg.max_n = n;
        cfg.max_n_inf = cfg.max_n_inf.min(n);
    }
    if let Some(m) = args.max_loops {
        cfg.max_loops = m;
    }
    if let Some(e) = args.max_euler {
        cfg.max_euler = e;
    }
    let reports = match args.suite {
        Some(s) => vec![run_suite(s, &cfg)],
        None => run_all(&cfg),
    };
    let ok = reports.iter().all(SuiteReport::passed);
    (reports, ok)
}

fn write_file(dir: &Path, name: &str, text: &str) -> Result<Value> {
    write_atomic(&dir.join(name), text.as_bytes())?;
    Ok(Value::String(name.to_string()))
}

fn index_lines<T: serde::Serialize>(items: &[T]) -> Result<String> {
    let mut out = String::new();
    for (i, x) in items.iter().enumerate() {
        out.push_str(&format!("{i} {}\n", serde_json::to_string(x)?));
    }
    Ok(out)
}

/// Boundary matrices in sparse text form, with basis index files.
pub fn export(mk: &Arc<Marking>, euler: Option<i64>, bound: usize, dir: &Path) -> Result<Value> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let d = boundary_matrix_hat(mk);
    let mut files = vec![json!({
        "matrix": write_file(dir, "hat_boundary.txt", &d.to_sparse_text())?,
        "basis": write_file(dir, "hat_basis.txt", &index_lines(&enumerate_matchings(mk))?)?,
        "rows": d.rows(),
        "cols": d.cols(),
        "nonzeros": d.nonzeros(),
    })];
    if let Some(e) = euler {
        let summand = EulerSummand::new(mk.clone(), e)?;
        let q = summand.quotient_boundary_matrix(bound);
        let tag = format!("e{e}_m{bound}");
        files.push(json!({
            "matrix": write_file(dir, &format!("inf_boundary_{tag}.txt"), &q.to_sparse_text())?,
            "basis": write_file(dir, &format!("inf_basis_{tag}.txt"), &index_lines(&summand.basis(bound))?)?,
            "rows": q.rows(),
            "cols": q.cols(),
            "nonzeros": q.nonzeros(),
        }));
    }
    Ok(json!({ "n": mk.n(), "signs": mk.signature(), "files": files }))
}

//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use stringhom::gf2::{self, F2Matrix};
use stringhom::inf::EulerSummand;
use stringhom::operators::{canonical, create_hat_vector, decompose_cycle, suture_quotient};
use stringhom::verify::{run_suite, Suite, SuiteReport, VerifyConfig};
use stringhom::*;

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Outcome {
        Outcome { passed, detail: detail.into() }
    }

    fn from_reports(reports: &[SuiteReport], extra: &str) -> Outcome {
        let failed: Vec<String> = reports
            .iter()
            .flat_map(|r| r.checks.iter().filter(|c| !c.passed).map(move |c| format!("{}/{}: {:?}", r.suite, c.name, c.counterexample)))
            .collect();
        let cases: usize = reports.iter().flat_map(|r| &r.checks).map(|c| c.cases).sum();
        if failed.is_empty() {
            Outcome::new(true, format!("{cases} cases{extra}"))
        } else {
            Outcome::new(false, failed.join("; "))
        }
    }
}

fn catalan(n: usize) -> usize {
    // C_n = C(2n, n) / (n + 1)
    binomial(2 * n, n) / (n + 1)
}

fn binomial(n: usize, k: usize) -> usize {
    let mut row = vec![1usize];
    for _ in 0..n {
        let mut next = vec![1usize; row.len() + 1];
        for i in 1..row.len() {
            next[i] = row[i - 1] + row[i];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

fn graded_expectation(n: usize, e: i64) -> usize {
    let top = n as i64 - 1;
    if (top + e) % 2 != 0 || e.abs() > top {
        0
    } else {
        binomial(n - 1, ((top + e) / 2) as usize)
    }
}

fn f(n: usize) -> Arc<Marking> {
    canonical(n).unwrap()
}

fn criterion_1() -> Outcome {
    let mut detail = Vec::new();
    let start = Instant::now();
    for n in 1..=6 {
        let d = homology_dimension(&f(n));
        if d != 1 << (n - 1) {
            return Outcome::new(false, format!("n = {n}: dimension {d}"));
        }
    }
    let small = start.elapsed();
    let start = Instant::now();
    let d7 = homology_dimension(&f(7));
    let big = start.elapsed();
    detail.push(format!("n <= 6 in {small:.2?}, n = 7 in {big:.2?}"));
    let ok = d7 == 64 && small < Duration::from_secs(10) && big < Duration::from_secs(300);
    Outcome::new(ok, format!("n = 7 dimension {d7}; {}", detail.join(", ")))
}

fn criterion_2() -> Outcome {
    let cfg = VerifyConfig { max_n: 5, ..Default::default() };
    let r = run_suite(Suite::WHomotopy, &cfg);
    Outcome::from_reports(&[r], ", all non-alternating markings with 2n <= 10")
}

fn criterion_3() -> Outcome {
    let cfg = VerifyConfig { max_n: 6, max_n_inf: 3, max_loops: 4, max_euler: 9, ..Default::default() };
    Outcome::from_reports(&[run_suite(Suite::BoundarySquared, &cfg)], "")
}

fn criterion_4() -> Outcome {
    let cfg = VerifyConfig { max_n: 6, ..Default::default() };
    Outcome::from_reports(&[run_suite(Suite::Filtration, &cfg)], "")
}

fn criterion_5() -> Outcome {
    let cfg = VerifyConfig { max_n: 6, max_n_inf: 3, max_loops: 4, max_euler: 9, ..Default::default() };
    Outcome::from_reports(&[run_suite(Suite::Euler, &cfg)], "")
}

fn criterion_6() -> Outcome {
    for n in 1..=6 {
        let mk = f(n);
        let q = match suture_quotient(&mk) {
            Ok(q) => q,
            Err(e) => return Outcome::new(false, format!("n = {n}: {e}")),
        };
        let h = homology_hat(&mk);
        let span = h.suture_span_rank();
        // second route: rank(im d + sutures) - rank(im d)
        let image: Vec<F2Vector> = h.complex().boundary_matrix().columns().to_vec();
        let sutures: Vec<F2Vector> = enumerate_sutures(&mk).unwrap().iter().map(|s| HatVector::single(s.matching.clone()).to_f2()).collect();
        let dim = h.dim_chain();
        let r_image = gf2::rank(&F2Matrix::from_columns(dim, image.clone()).unwrap());
        let r_both = gf2::rank(&F2Matrix::from_columns(dim, image.into_iter().chain(sutures).collect()).unwrap());
        let expected = BTreeMap::from_iter((-(n as i64) + 1..=n as i64 - 1).step_by(2).map(|e| (e, graded_expectation(n, e))));
        if q.catalan != catalan(n)
            || span != Some(1 << (n - 1))
            || r_both - r_image != 1 << (n - 1)
            || q.bypass_rank != catalan(n) - (1 << (n - 1))
            || q.graded != expected
        {
            return Outcome::new(false, format!("n = {n}: {q:?}, suture span {span:?}, direct {}", r_both - r_image));
        }
    }
    let cfg = VerifyConfig { max_n: 6, ..Default::default() };
    Outcome::from_reports(&[run_suite(Suite::Sutures, &cfg)], ", n = 1..6")
}

fn criterion_7() -> Outcome {
    let cfg = VerifyConfig { max_n: 5, max_n_inf: 5, max_loops: 4, max_euler: 9, ..Default::default() };
    Outcome::from_reports(&[run_suite(Suite::Operators, &cfg)], "")
}

fn criterion_8() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        let mk = f(n);
        let cx = HatComplex::new(mk.clone());
        let site = Site::at_basepoint(mk.clone()).unwrap();
        for k in gf2::kernel_basis(cx.boundary_matrix()) {
            let x = cx.vector(&k);
            let d = match decompose_cycle(&x, &site) {
                Ok(d) => d,
                Err(e) => return Outcome::new(false, format!("{x}: {e}")),
            };
            // independent re-check of x = a*_- y + a*_+ z + du
            let sum = create_hat_vector(Letter::Minus, &d.y)
                .unwrap()
                .add(&create_hat_vector(Letter::Plus, &d.z).unwrap())
                .add(&d.u.boundary())
                .add(&x);
            if !sum.is_zero() || !d.y.boundary().is_zero() || !d.z.boundary().is_zero() {
                return Outcome::new(false, format!("{x}: residual {sum}"));
            }
            count += 1;
        }
    }
    Outcome::new(true, format!("{count} kernel basis cycles for n = 2..4 (F_1 has no site to split)"))
}

fn criterion_9() -> Outcome {
    let f1 = f(1);
    let sigma = enumerate_matchings(&f1).remove(0);
    let mut cases = 0;
    for m in 0..=20 {
        for e in (-20i64..=20).step_by(2) {
            let x = InfElement::new(sigma.clone(), m, e).unwrap();
            if boundary_inf(&x) != f1_oracle(&f1, m, e).unwrap() {
                return Outcome::new(false, format!("m = {m}, e = {e}"));
            }
            cases += 1;
        }
    }
    for e in (-20i64..=20).step_by(2) {
        let h = truncated_homology(&f1, e, 10).unwrap();
        let want = usize::from(e % 4 == 0);
        if h.stable_dimension != want || !h.stable {
            return Outcome::new(false, format!("e = {e}: stable {} (flag {})", h.stable_dimension, h.stable));
        }
    }
    Outcome::new(true, format!("{cases} oracle cases, 21 Euler classes"))
}

fn criterion_10() -> Outcome {
    let cases: Vec<(usize, i64)> = (1..=3).flat_map(|n| (-6i64..=6).map(move |e| (n, e))).collect();
    let failures: Vec<String> = cases
        .par_iter()
        .filter_map(|&(n, e)| {
            let mk = f(n);
            if EulerSummand::new(mk.clone(), e).is_err() {
                return None;
            }
            // sum over j of C(n-1, (n-1+e-4j)/2)
            let want: usize = (-10i64..=10).map(|j| graded_expectation(n, e - 4 * j)).sum();
            let h = match truncated_homology(&mk, e, 10) {
                Ok(h) => h,
                Err(err) => return Some(format!("n = {n}, e = {e}: {err}")),
            };
            (h.stable_dimension != want || !h.stable)
                .then(|| format!("n = {n}, e = {e}: stable {} want {want}, flag {}", h.stable_dimension, h.stable))
        })
        .collect();
    if failures.is_empty() {
        Outcome::new(true, "n = 1..3, |e| <= 6, M = 10")
    } else {
        Outcome::new(false, failures.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("homology dimension 2^(n-1) for n = 1..7", criterion_1),
        ("non-alternating vanishing and dW + Wd = 1", criterion_2),
        ("boundary squared vanishes", criterion_3),
        ("intersection filtration", criterion_4),
        ("Euler class coherence", criterion_5),
        ("sutures modulo bypasses", criterion_6),
        ("operator algebra", criterion_7),
        ("constructive cycle decomposition", criterion_8),
        ("one-chord closed form and stable dimensions", criterion_9),
        ("Laurent module consistency of truncated homology", criterion_10),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = run();
        all &= out.passed;
        println!(
            "{} {:>2} {name}: {} [{:.2?}]",
            if out.passed { "PASS" } else { "FAIL" },
            i + 1,
            out.detail,
            start.elapsed()
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

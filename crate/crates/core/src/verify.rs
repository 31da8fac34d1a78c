//! Exhaustive invariant suites shared by the test targets and the CLI.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::base_euler;
use crate::hat::{boundary_hat, homology_dimension, homology_hat, switch_w, HatVector};
use crate::inf::{
    boundary_inf, f1_oracle, find_boundary_witness, project_hat, projection_commutes, u_pow, BoundarySearch, EulerSummand,
    InfElement, InfVector,
};
use crate::marking::{enumerate_matchings, Letter, Marking, Matching, Sign, Word};
use crate::operators::*;
use crate::suture::enumerate_sutures;

/// Deliberate defects used to check that the suites can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Resolves exactly the chord pairs that do not cross.
    FlippedCrossingTest,
}

impl FromStr for Fault {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fault> {
        match s {
            "flipped-crossing-test" => Ok(Fault::FlippedCrossingTest),
            other => Err(Error::Parse(format!("unknown fault {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    BoundarySquared,
    Filtration,
    WHomotopy,
    Euler,
    Homology,
    Sutures,
    Operators,
    Oracle,
    Projection,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::BoundarySquared,
        Suite::Filtration,
        Suite::WHomotopy,
        Suite::Euler,
        Suite::Homology,
        Suite::Sutures,
        Suite::Operators,
        Suite::Oracle,
        Suite::Projection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::BoundarySquared => "boundary-squared",
            Suite::Filtration => "filtration",
            Suite::WHomotopy => "w-homotopy",
            Suite::Euler => "euler",
            Suite::Homology => "homology",
            Suite::Sutures => "sutures",
            Suite::Operators => "operators",
            Suite::Oracle => "oracle",
            Suite::Projection => "projection",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Sizes and options for a verification run.
#[derive(Debug, Clone)]
pub struct VerifyConfig {
    /// Largest number of chords for the ĈS suites.
    pub max_n: usize,
    /// Largest number of chords for the CS∞ suites.
    pub max_n_inf: usize,
    pub max_loops: usize,
    pub max_euler: i64,
    /// Restricts the marking-based suites to one marking.
    pub marking: Option<Arc<Marking>>,
    pub fault: Option<Fault>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: 5, max_n_inf: 3, max_loops: 4, max_euler: 9, marking: None, fault: None }
    }
}

impl VerifyConfig {
    fn boundary(&self, sigma: &Matching) -> HatVector {
        match self.fault {
            None => boundary_hat(sigma),
            Some(Fault::FlippedCrossingTest) => {
                let ins = sigma.marking().in_points();
                let mut out = HatVector::zero(sigma.marking().clone());
                for (i, &a) in ins.iter().enumerate() {
                    for &b in &ins[i + 1..] {
                        if !sigma.crosses(a, b) {
                            out.toggle(sigma.swap_images(a, b));
                        }
                    }
                }
                out
            }
        }
    }

    fn boundary_vec(&self, v: &HatVector) -> HatVector {
        v.map(v.marking().clone(), |s| self.boundary(s))
    }

    /// Every marking with at most `2·max_n` points, or the configured one.
    fn markings(&self) -> Vec<Arc<Marking>> {
        match &self.marking {
            Some(m) => vec![m.clone()],
            None => (1..=self.max_n).flat_map(all_markings).collect(),
        }
    }

    fn alternating(&self, max_n: usize) -> Vec<Arc<Marking>> {
        match &self.marking {
            Some(m) if m.is_alternating() && m.basepoint() == 0 => vec![m.clone()],
            Some(_) => Vec::new(),
            None => (1..=max_n).map(|n| canonical(n).expect("n >= 1")).collect(),
        }
    }

    fn inf_elements(&self) -> Vec<InfElement> {
        let mut out = Vec::new();
        for mk in self.alternating(self.max_n_inf) {
            for s in enumerate_matchings(&mk) {
                for m in 0..=self.max_loops {
                    for e in -self.max_euler..=self.max_euler {
                        if let Ok(x) = InfElement::new(s.clone(), m, e) {
                            out.push(x);
                        }
                    }
                }
            }
        }
        out
    }
}

/// All `C(2n, n)` sign patterns on `2n` points.
pub fn all_markings(n: usize) -> Vec<Arc<Marking>> {
    let len = 2 * n;
    (0u32..1 << len)
        .filter(|mask| mask.count_ones() as usize == n)
        .map(|mask| {
            let signs = (0..len).map(|p| if mask >> p & 1 == 0 { Sign::In } else { Sign::Out }).collect();
            Arc::new(Marking::new(signs).expect("balanced signs"))
        })
        .collect()
}

/// Outcome of one identity over a family of cases.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub cases: usize,
    pub passed: bool,
    pub counterexample: Option<String>,
}

impl Check {
    pub fn run<T: Sync>(name: impl Into<String>, cases: &[T], f: impl Fn(&T) -> Option<String> + Sync + Send) -> Check {
        let counterexample = cases.par_iter().find_map_first(f);
        Check { name: name.into(), cases: cases.len(), passed: counterexample.is_none(), counterexample }
    }
}

/// Results of one suite: sizes covered and one line per identity.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub sizes: Vec<usize>,
    pub checks: Vec<Check>,
}

/// The relation report of the operator suite.
pub type OperatorReport = SuiteReport;

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn sizes(markings: &[Arc<Marking>]) -> Vec<usize> {
    let mut s: Vec<usize> = markings.iter().map(|m| m.n()).collect();
    s.dedup();
    s
}

fn basis_of(markings: &[Arc<Marking>]) -> Vec<Matching> {
    markings.iter().flat_map(enumerate_matchings).collect()
}

pub fn run_suite(suite: Suite, cfg: &VerifyConfig) -> SuiteReport {
    match suite {
        Suite::BoundarySquared => boundary_squared(cfg),
        Suite::Filtration => filtration(cfg),
        Suite::WHomotopy => w_homotopy(cfg),
        Suite::Euler => euler(cfg),
        Suite::Homology => homology(cfg),
        Suite::Sutures => sutures(cfg),
        Suite::Operators => operators(cfg),
        Suite::Oracle => oracle(cfg),
        Suite::Projection => projection(cfg),
    }
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    Suite::ALL.iter().map(|&s| run_suite(s, cfg)).collect()
}

fn boundary_squared(cfg: &VerifyConfig) -> SuiteReport {
    let markings = cfg.markings();
    let basis = basis_of(&markings);
    let hat = Check::run("hat: boundary of boundary vanishes", &basis, |s| {
        let dd = cfg.boundary_vec(&cfg.boundary(s));
        (!dd.is_zero()).then(|| format!("{} on {}: dd = {dd}", s, s.marking()))
    });
    let elems = cfg.inf_elements();
    let inf = Check::run("inf: boundary of boundary vanishes", &elems, |x| {
        let dd = boundary_inf(x).boundary();
        (!dd.is_zero()).then(|| format!("{x}: dd = {dd}"))
    });
    SuiteReport { suite: Suite::BoundarySquared, sizes: sizes(&markings), checks: vec![hat, inf] }
}

fn filtration(cfg: &VerifyConfig) -> SuiteReport {
    let markings = cfg.markings();
    let basis: Vec<Matching> = basis_of(&markings).into_iter().filter(|s| s.min_crossings() > 0).collect();
    let check = Check::run("intersection level drops under the boundary", &basis, |s| {
        let level = cfg.boundary(s).intersection_level();
        level.is_some_and(|l| l + 1 > s.min_crossings()).then(|| format!("{s}: level {} -> {:?}", s.min_crossings(), level))
    });
    SuiteReport { suite: Suite::Filtration, sizes: sizes(&markings), checks: vec![check] }
}

fn w_homotopy(cfg: &VerifyConfig) -> SuiteReport {
    let markings: Vec<Arc<Marking>> = cfg.markings().into_iter().filter(|m| !m.is_alternating()).collect();
    let cases: Vec<(Matching, usize, usize)> = markings
        .iter()
        .flat_map(|mk| {
            let pairs = mk.same_sign_pairs();
            enumerate_matchings(mk).into_iter().flat_map(move |s| pairs.clone().into_iter().map(move |(p, q)| (s.clone(), p, q)))
        })
        .collect();
    let identity = Check::run("dW + Wd = 1", &cases, |(s, p, q)| {
        let w = |v: &HatVector| {
            HatVector::from_matchings(v.marking().clone(), v.iter().map(|t| switch_w(t, *p, *q).expect("same-sign pair")))
        };
        let sw = switch_w(s, *p, *q).expect("same-sign pair");
        let lhs = cfg.boundary(&sw).add(&w(&cfg.boundary(s)));
        (lhs != HatVector::single(s.clone())).then(|| format!("{s} on {} at ({p},{q}): dW+Wd = {lhs}", s.marking()))
    });
    let vanishing = Check::run("homology vanishes", &markings, |mk| {
        let d = homology_dimension(mk);
        (d != 0).then(|| format!("{mk}: dimension {d}"))
    });
    SuiteReport { suite: Suite::WHomotopy, sizes: sizes(&markings), checks: vec![identity, vanishing] }
}

fn euler(cfg: &VerifyConfig) -> SuiteReport {
    let alternating = cfg.alternating(cfg.max_n.max(6));
    let sutures: Vec<_> = alternating.iter().flat_map(|m| enumerate_sutures(m).expect("alternating")).collect();
    let faces = Check::run("turning Euler class equals face count", &sutures, |s| {
        let b = base_euler(&s.matching);
        (b != Ok(s.euler)).then(|| format!("{}: faces give {}, turning gives {b:?}", s.matching, s.euler))
    });
    let basis = basis_of(&cfg.alternating(cfg.max_n));
    let resolve = Check::run("resolution preserves the straight-chord Euler class", &basis, |s| {
        let e = base_euler(s).ok()?;
        boundary_hat(s)
            .iter()
            .find(|t| base_euler(t) != Ok(e))
            .map(|t| format!("{s} (e = {e}) resolves to {t} (e = {:?})", base_euler(t)))
    });
    let elems = cfg.inf_elements();
    let inf = Check::run("inf boundary preserves e and raises loops by at most one", &elems, |x| {
        boundary_inf(x)
            .iter()
            .find(|y| y.euler() != x.euler() || y.loops() < x.loops() || y.loops() > x.loops() + 1)
            .map(|y| format!("{x} has boundary term {y}"))
    });
    let parity = Check::run("whirl parity is independent of loop orientations", &elems, |x| {
        // a representative with j clockwise loops carries k + 2j whirls
        let k = x.whirl_count();
        let m = x.loops() as i64;
        (0..=m)
            .map(|j| (x.euler() - x.base_euler()) / 2 - (m - j) + j)
            .find(|kj| (kj - k).rem_euclid(2) != 0)
            .map(|kj| format!("{x}: whirl counts {k} and {kj}"))
    });
    SuiteReport { suite: Suite::Euler, sizes: sizes(&alternating), checks: vec![faces, resolve, inf, parity] }
}

fn homology(cfg: &VerifyConfig) -> SuiteReport {
    let markings = cfg.markings();
    let dims = Check::run("homology dimension", &markings, |mk| {
        let d = homology_dimension(mk);
        let expected = if mk.is_alternating() { 1usize << (mk.n() - 1) } else { 0 };
        (d != expected).then(|| format!("{mk}: dimension {d}, expected {expected}"))
    });
    let alternating = cfg.alternating(cfg.max_n);
    let span = Check::run("sutures span homology", &alternating, |mk| {
        let h = homology_hat(mk);
        let r = h.suture_span_rank();
        (r != Some(h.dimension())).then(|| format!("{mk}: suture span rank {r:?} of {}", h.dimension()))
    });
    SuiteReport { suite: Suite::Homology, sizes: sizes(&markings), checks: vec![dims, span] }
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}

/// `C(n−1, (n−1+e)/2)`, or zero when `e` is not admissible.
pub fn graded_dimension(n: usize, e: i64) -> usize {
    let top = n as i64 - 1;
    if (top + e).rem_euclid(2) != 0 || e.abs() > top {
        return 0;
    }
    binomial(n - 1, ((top + e) / 2) as usize)
}

fn sutures(cfg: &VerifyConfig) -> SuiteReport {
    let alternating = cfg.alternating(cfg.max_n);
    let quotient = Check::run("sutures modulo bypasses", &alternating, |mk| {
        let n = mk.n();
        let q = match suture_quotient(mk) {
            Ok(q) => q,
            Err(e) => return Some(format!("{mk}: {e}")),
        };
        let expected_rank = catalan(n) - (1 << (n - 1));
        if q.catalan != catalan(n) || q.bypass_rank != expected_rank {
            return Some(format!("{mk}: {} sutures, bypass rank {}", q.catalan, q.bypass_rank));
        }
        q.graded
            .iter()
            .find(|(&e, &d)| d != graded_dimension(n, e))
            .map(|(e, d)| format!("{mk}: graded dimension {d} at e = {e}"))
    });
    let boundaries = Check::run("bypass relations are boundaries", &alternating, |mk| {
        let h = homology_hat(mk);
        for g in enumerate_sutures(mk).expect("alternating") {
            for site in crate::marking::all_sites(mk) {
                let v = match bypass_triple(&g, &site) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("{} at {:?}: {e}", g.matching, site.points())),
                };
                if !h.coordinates(&v).is_ok_and(|c| c.is_zero()) {
                    return Some(format!("{} at {:?}: {v} is nonzero in homology", g.matching, site.points()));
                }
                // explicit witnesses where the solve is cheap
                if mk.n() <= 4 {
                    match h.complex().is_boundary(&v) {
                        Ok(Some(u)) if u.boundary() == v => {}
                        _ => return Some(format!("{} at {:?}: no witness for {v}", g.matching, site.points())),
                    }
                }
            }
        }
        None
    });
    SuiteReport { suite: Suite::Sutures, sizes: sizes(&alternating), checks: vec![quotient, boundaries] }
}

const LETTERS: [Letter; 2] = [Letter::Minus, Letter::Plus];

fn operators(cfg: &VerifyConfig) -> SuiteReport {
    let alternating = cfg.alternating(cfg.max_n);
    let upper: Vec<Matching> = basis_of(&alternating).into_iter().filter(|s| s.marking().n() >= 2).collect();
    let lower: Vec<Matching> = basis_of(&alternating).into_iter().filter(|s| s.marking().n() < cfg.max_n).collect();
    let mut checks = Vec::new();

    checks.push(Check::run("a_- a*_- = a_+ a*_+ = 1 and a_- a*_+ = a_+ a*_- = 0", &lower, |s| {
        for a in LETTERS {
            for c in LETTERS {
                let got = annihilate_hat(a, &create_hat(c, s).ok()?).ok()?;
                let expected = (a == c).then(|| s.clone());
                if got != expected {
                    return Some(format!("a_{a:?} a*_{c:?} {s} = {got:?}"));
                }
            }
        }
        None
    }));
    checks.push(Check::run("creation is a chain map", &lower, |s| {
        LETTERS.iter().find_map(|&l| {
            let lhs = cfg.boundary(&create_hat(l, s).ok()?);
            let rhs = create_hat_vector(l, &cfg.boundary(s)).ok()?;
            (lhs != rhs).then(|| format!("a*_{l:?} at {s}: {lhs} vs {rhs}"))
        })
    }));
    checks.push(Check::run("annihilation is a chain map", &upper, |s| {
        LETTERS.iter().find_map(|&l| {
            let single = annihilate_hat(l, s).ok()?;
            let lhs = single.map_or_else(|| HatVector::zero(canonical(s.marking().n() - 1).ok().unwrap()), |t| cfg.boundary(&t));
            let rhs = annihilate_hat_vector(l, &cfg.boundary(s)).ok()?;
            (lhs != rhs).then(|| format!("a_{l:?} at {s}: {lhs} vs {rhs}"))
        })
    }));
    checks.push(Check::run("creation is injective", &alternating, |mk| {
        let basis = enumerate_matchings(mk);
        LETTERS.iter().find_map(|&l| {
            let mut images: Vec<Matching> = basis.iter().map(|s| create_hat(l, s).expect("canonical")).collect();
            images.sort();
            images.dedup();
            (images.len() != basis.len()).then(|| format!("a*_{l:?} on {mk}"))
        })
    }));

    let lengths: Vec<usize> = (0..cfg.max_n).collect();
    checks.push(Check::run("word vectors are independent in homology", &lengths, |&len| {
        let mk = canonical(len + 1).ok()?;
        let h = homology_hat(&mk);
        let cols: Vec<_> =
            Word::all(len).iter().map(|w| h.coordinates(&HatVector::single(word_vector(w))).expect("sutures are cycles")).collect();
        let r = crate::gf2::rank(&crate::gf2::F2Matrix::from_columns(h.dimension(), cols).ok()?);
        (r != 1 << len).then(|| format!("words of length {len} span rank {r}"))
    }));
    let words: Vec<Word> = lengths.iter().flat_map(|&l| Word::all(l)).collect();
    checks.push(Check::run("annihilation sequences undo word vectors", &words, |w| {
        (!annihilation_word_check(w)).then(|| format!("word {w}"))
    }));

    let elems = cfg.inf_elements();
    checks.push(Check::run("inf: a_- a*_- = a_+ a*_+ = 1", &elems, |x| {
        LETTERS.iter().find_map(|&l| {
            let back = annihilate_inf(l, &create_inf(l, x).ok()?);
            (back.as_ref() != Ok(x)).then(|| format!("a_{l:?} a*_{l:?} {x} = {back:?}"))
        })
    }));
    checks.push(Check::run("inf: mixed products add one loop", &elems, |x| {
        for (a, c) in [(Letter::Minus, Letter::Plus), (Letter::Plus, Letter::Minus)] {
            let y = annihilate_inf(a, &create_inf(c, x).ok()?).ok()?;
            if y.loops() != x.loops() + 1 {
                return Some(format!("a_{a:?} a*_{c:?} {x} = {y}"));
            }
        }
        None
    }));
    let cycles: Vec<InfVector> = cfg
        .alternating(cfg.max_n_inf.saturating_sub(1).max(1))
        .iter()
        .flat_map(|mk| {
            (-cfg.max_euler..=cfg.max_euler)
                .filter_map(|e| EulerSummand::new(mk.clone(), e).ok())
                .flat_map(|s| s.bounded_homology(cfg.max_loops).1)
                .collect::<Vec<_>>()
        })
        .collect();
    checks.push(Check::run("inf: mixed products send cycles to boundaries", &cycles, |z| {
        for (a, c) in [(Letter::Minus, Letter::Plus), (Letter::Plus, Letter::Minus)] {
            let img = annihilate_inf_vector(a, &create_inf_vector(c, z).ok()?).ok()?;
            if !project_hat(&img).is_zero() {
                return Some(format!("a_{a:?} a*_{c:?} {z} projects to a nonzero chain"));
            }
            match find_boundary_witness(&img, cfg.max_loops + 6) {
                Ok(BoundarySearch::Witness { chain, .. }) if chain.boundary() == img => {}
                other => return Some(format!("a_{a:?} a*_{c:?} {z} = {img}: {other:?}")),
            }
        }
        None
    }));
    checks.push(Check::run("inf: creation is a chain map", &elems, |x| {
        LETTERS.iter().find_map(|&l| {
            let lhs = InfVector::single(create_inf(l, x).ok()?).boundary();
            let rhs = create_inf_vector(l, &boundary_inf(x)).ok()?;
            (lhs != rhs).then(|| format!("a*_{l:?} at {x}: {lhs} vs {rhs}"))
        })
    }));
    let upper_elems: Vec<&InfElement> = elems.iter().filter(|x| x.matching().marking().n() >= 2).collect();
    checks.push(Check::run("inf: annihilation is a chain map", &upper_elems, |x| {
        LETTERS.iter().find_map(|&l| {
            let lhs = InfVector::single(annihilate_inf(l, x).ok()?).boundary();
            let rhs = annihilate_inf_vector(l, &boundary_inf(x)).ok()?;
            (lhs != rhs).then(|| format!("a_{l:?} at {x}: {lhs} vs {rhs}"))
        })
    }));
    checks.push(Check::run("inf: U commutes with the boundary and the operators", &elems, |x| {
        let v = InfVector::single((*x).clone());
        if u_pow(&v, 1).boundary() != u_pow(&v.boundary(), 1) {
            return Some(format!("dU != Ud at {x}"));
        }
        for &l in &LETTERS {
            if create_inf_vector(l, &u_pow(&v, 1)).ok()? != u_pow(&create_inf_vector(l, &v).ok()?, 1) {
                return Some(format!("a*_{l:?} U != U a*_{l:?} at {x}"));
            }
            if x.matching().marking().n() >= 2
                && annihilate_inf_vector(l, &u_pow(&v, 1)).ok()? != u_pow(&annihilate_inf_vector(l, &v).ok()?, 1)
            {
                return Some(format!("a_{l:?} U != U a_{l:?} at {x}"));
            }
        }
        None
    }));
    SuiteReport { suite: Suite::Operators, sizes: sizes(&alternating), checks }
}

fn oracle(_cfg: &VerifyConfig) -> SuiteReport {
    let f1 = canonical(1).expect("n = 1");
    let sigma = enumerate_matchings(&f1).remove(0);
    let cases: Vec<(usize, i64)> = (0..=20).flat_map(|m| (-10..=10).map(move |h| (m, 2 * h))).collect();
    let check = Check::run("F_1 boundary matches the closed form", &cases, |&(m, e)| {
        let x = InfElement::new(sigma.clone(), m, e).ok()?;
        let got = boundary_inf(&x);
        let want = f1_oracle(&f1, m, e).ok()?;
        (got != want).then(|| format!("m = {m}, e = {e}: {got} vs {want}"))
    });
    SuiteReport { suite: Suite::Oracle, sizes: vec![1], checks: vec![check] }
}

fn projection(cfg: &VerifyConfig) -> SuiteReport {
    let elems = cfg.inf_elements();
    let chain = Check::run("projection is a chain map", &elems, |x| (!projection_commutes(x)).then(|| format!("{x}")));
    let alternating = cfg.alternating(cfg.max_n_inf);
    let bypass = Check::run("projection carries inf bypass relations to hat ones", &alternating, |mk| {
        for g in enumerate_sutures(mk).expect("alternating") {
            let e = g.euler;
            for site in crate::marking::all_sites(mk) {
                let hat = bypass_triple(&g, &site).ok()?;
                let lifted = InfVector::from_elements(
                    mk.clone(),
                    hat.iter().map(|s| InfElement::new(s.clone(), 0, e).expect("bypass terms share e")),
                );
                let inf_rel = InfVector::single(
                    InfElement::new(crossed_wires(&g.matching, &site).ok()?, 0, e).expect("crossed wires keep e"),
                )
                .boundary();
                if project_hat(&inf_rel) != hat || project_hat(&lifted) != hat {
                    return Some(format!("{} at {:?}", g.matching, site.points()));
                }
            }
        }
        None
    });
    SuiteReport { suite: Suite::Projection, sizes: sizes(&alternating), checks: vec![chain, bypass] }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graded_dimensions() {
        assert_eq!(graded_dimension(3, 0), 2);
        assert_eq!(graded_dimension(3, 1), 0);
        assert_eq!(graded_dimension(3, 4), 0);
        assert_eq!(graded_dimension(1, 0), 1);
    }

    #[test]
    fn marking_counts() {
        assert_eq!(all_markings(2).len(), 6);
        assert_eq!(all_markings(3).iter().filter(|m| m.is_alternating()).count(), 2);
    }

    #[test]
    fn suites_pass_at_small_sizes() {
        let cfg = VerifyConfig { max_n: 3, max_n_inf: 2, max_loops: 2, max_euler: 4, ..Default::default() };
        for r in run_all(&cfg) {
            for c in &r.checks {
                assert!(c.passed, "{}: {} failed: {:?}", r.suite, c.name, c.counterexample);
            }
        }
    }

    #[test]
    fn fault_is_detected() {
        let cfg = VerifyConfig { max_n: 3, fault: Some(Fault::FlippedCrossingTest), ..Default::default() };
        let r = run_suite(Suite::BoundarySquared, &cfg);
        assert!(!r.passed());
        assert!(r.checks[0].counterexample.is_some());
    }

    #[test]
    fn parse_names() {
        assert_eq!("w-homotopy".parse::<Suite>().unwrap(), Suite::WHomotopy);
        assert!("nope".parse::<Suite>().is_err());
        assert_eq!("flipped-crossing-test".parse::<Fault>().unwrap(), Fault::FlippedCrossingTest);
    }
}

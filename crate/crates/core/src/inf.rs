//! The complex CS∞ on spin-homotopy classes.
//!
//! On the disc a spin class is a matching together with a number `m` of
//! contractible loops and an Euler class `e`. The canonical representative
//! has `m` anticlockwise loops and all `k = (e − e₀(σ))/2 − m` whirls on one
//! strand, where `e₀` is the Euler class of the straight-chord diagram. Each
//! whirl is a self-crossing whose resolution splits off one more loop.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::euler::base_euler;
use crate::gf2::{self, BitVec, Echelon, F2Matrix, F2Vector};
use crate::hat::{boundary_hat, HatVector};
use crate::marking::{enumerate_matchings, Marking, Matching};

/// A basis element `(σ, m, e)` of CS∞.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct InfElement {
    matching: Matching,
    loops: usize,
    euler: i64,
    #[serde(skip)]
    base: i64,
}

impl InfElement {
    pub fn new(matching: Matching, loops: usize, euler: i64) -> Result<InfElement> {
        let base = base_euler(&matching)?;
        if (euler - base).rem_euclid(2) != 0 {
            return Err(Error::EulerParity { euler });
        }
        Ok(InfElement { matching, loops, euler, base })
    }

    /// The element with `k` whirls on top of `m` loops.
    pub fn from_whirls(matching: Matching, loops: usize, whirls: i64) -> Result<InfElement> {
        let base = base_euler(&matching)?;
        let euler = base + 2 * loops as i64 + 2 * whirls;
        Ok(InfElement { matching, loops, euler, base })
    }

    pub fn matching(&self) -> &Matching {
        &self.matching
    }

    pub fn loops(&self) -> usize {
        self.loops
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    /// Euler class of the straight-chord diagram of the matching.
    pub fn base_euler(&self) -> i64 {
        self.base
    }

    /// Signed number of whirls in the canonical representative.
    pub fn whirl_count(&self) -> i64 {
        (self.euler - self.base) / 2 - self.loops as i64
    }

    pub fn with_loops(&self, loops: usize) -> InfElement {
        InfElement { loops, ..self.clone() }
    }

    pub fn with_matching(&self, matching: Matching) -> Result<InfElement> {
        InfElement::new(matching, self.loops, self.euler)
    }

    pub fn shift_euler(&self, delta: i64) -> InfElement {
        assert!(delta % 2 == 0, "Euler shifts must be even");
        InfElement { euler: self.euler + delta, ..self.clone() }
    }
}

impl fmt::Debug for InfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for InfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, m={}, e={})", self.matching, self.loops, self.euler)
    }
}

/// A formal sum of [`InfElement`]s with coefficients in GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct InfVector {
    marking: Arc<Marking>,
    terms: BTreeSet<InfElement>,
}

impl InfVector {
    pub fn zero(marking: Arc<Marking>) -> InfVector {
        InfVector { marking, terms: BTreeSet::new() }
    }

    pub fn from_elements(marking: Arc<Marking>, terms: impl IntoIterator<Item = InfElement>) -> InfVector {
        let mut v = InfVector::zero(marking);
        for x in terms {
            v.toggle(x);
        }
        v
    }

    pub fn single(x: InfElement) -> InfVector {
        let marking = x.matching.marking().clone();
        InfVector::from_elements(marking, [x])
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    pub fn terms(&self) -> &BTreeSet<InfElement> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &InfElement> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, x: InfElement) {
        debug_assert_eq!(**x.matching.marking(), *self.marking, "mixed markings in one vector");
        if !self.terms.remove(&x) {
            self.terms.insert(x);
        }
    }

    pub fn add_assign(&mut self, other: &InfVector) {
        for x in &other.terms {
            self.toggle(x.clone());
        }
    }

    pub fn add(&self, other: &InfVector) -> InfVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn map(&self, target: Arc<Marking>, f: impl Fn(&InfElement) -> InfVector) -> InfVector {
        let mut out = InfVector::zero(target);
        for x in &self.terms {
            out.add_assign(&f(x));
        }
        out
    }

    pub fn try_map(&self, target: Arc<Marking>, f: impl Fn(&InfElement) -> Result<InfVector>) -> Result<InfVector> {
        let mut out = InfVector::zero(target);
        for x in &self.terms {
            out.add_assign(&f(x)?);
        }
        Ok(out)
    }

    pub fn boundary(&self) -> InfVector {
        self.map(self.marking.clone(), boundary_inf)
    }

    pub fn max_loops(&self) -> Option<usize> {
        self.terms.iter().map(|x| x.loops).max()
    }
}

impl fmt::Debug for InfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for InfVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, x) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl Serialize for InfVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.terms)
    }
}

/// `∂x`: chord resolutions at fixed `(m, e)`, plus one extra loop when the
/// whirl count is odd.
pub fn boundary_inf(x: &InfElement) -> InfVector {
    let marking = x.matching.marking().clone();
    let mut out = InfVector::zero(marking);
    for (a, b) in x.matching.crossing_pairs() {
        let r = x.matching.swap_images(a, b);
        let base = base_euler(&r).expect("resolution keeps the turning integral");
        debug_assert_eq!(base, x.base, "resolution changed the straight-chord Euler class");
        out.toggle(InfElement { matching: r, loops: x.loops, euler: x.euler, base });
    }
    if x.whirl_count().rem_euclid(2) == 1 {
        out.toggle(x.with_loops(x.loops + 1));
    }
    out
}

/// `U^j`: adds `2j` anticlockwise whirls, shifting `e` by `4j`.
pub fn u_pow(v: &InfVector, j: i64) -> InfVector {
    v.map(v.marking.clone(), |x| InfVector::single(x.shift_euler(4 * j)))
}

/// The natural map to ĈS: loopless terms survive, all others vanish.
pub fn project_hat(v: &InfVector) -> HatVector {
    HatVector::from_matchings(v.marking.clone(), v.iter().filter(|x| x.loops == 0).map(|x| x.matching.clone()))
}

/// Closed-form differential on `F_1`: `∂σ_{m,e} = σ_{m+1,e}` when
/// `m + e/2` is odd and zero otherwise.
pub fn f1_oracle(marking: &Arc<Marking>, m: usize, e: i64) -> Result<InfVector> {
    if marking.n() != 1 || !marking.is_alternating() {
        return Err(Error::Unsupported(format!("the one-chord marking, got {marking}")));
    }
    if e.rem_euclid(2) != 0 {
        return Err(Error::EulerParity { euler: e });
    }
    let sigma = enumerate_matchings(marking).remove(0);
    let mut out = InfVector::zero(marking.clone());
    if (m as i64 + e / 2).rem_euclid(2) == 1 {
        out.toggle(InfElement::new(sigma, m + 1, e)?);
    }
    Ok(out)
}

/// The Euler-class-`e` summand of CS∞, truncated by loop count.
#[derive(Debug, Clone)]
pub struct EulerSummand {
    marking: Arc<Marking>,
    euler: i64,
    basis: Vec<Matching>,
}

impl EulerSummand {
    pub fn new(marking: Arc<Marking>, euler: i64) -> Result<EulerSummand> {
        if !marking.is_alternating() {
            return Err(Error::NotAlternating(marking.signature()));
        }
        let parity = (marking.n() as i64 - 1).rem_euclid(2);
        if euler.rem_euclid(2) != parity {
            return Err(Error::EulerParity { euler });
        }
        let basis = enumerate_matchings(&marking);
        Ok(EulerSummand { marking, euler, basis })
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    pub fn euler(&self) -> i64 {
        self.euler
    }

    pub fn matchings(&self) -> &[Matching] {
        &self.basis
    }

    pub fn element(&self, sigma: usize, loops: usize) -> InfElement {
        InfElement::new(self.basis[sigma].clone(), loops, self.euler).expect("summand parity checked")
    }

    /// Elements with at most `bound` loops, ordered by loop count and then
    /// matching.
    pub fn basis(&self, bound: usize) -> Vec<InfElement> {
        (0..=bound).flat_map(|m| (0..self.basis.len()).map(move |s| (s, m))).map(|(s, m)| self.element(s, m)).collect()
    }

    /// Matrix of `∂` on the quotient complex of elements with at most
    /// `bound` loops; terms with `bound + 1` loops are dropped.
    pub fn quotient_boundary_matrix(&self, bound: usize) -> F2Matrix {
        let n = self.basis.len();
        let dim = (bound + 1) * n;
        let columns = self
            .basis(bound)
            .iter()
            .map(|x| {
                let ones = boundary_inf(x).iter().filter(|y| y.loops <= bound).map(|y| y.loops * n + y.matching.lex_rank()).collect::<Vec<_>>();
                F2Vector::from_support(dim, ones).expect("index inside truncation")
            })
            .collect();
        F2Matrix::from_columns(dim, columns).expect("square truncation")
    }

    pub fn quotient_dimension(&self, bound: usize) -> usize {
        let m = self.quotient_boundary_matrix(bound);
        m.cols() - 2 * gf2::rank(&m)
    }

    // Rows cover loop counts 0..=top, highest loop count first, so that an
    // echelon basis with lowest-bit pivots exposes subspaces of low-loop
    // chains as the vectors whose pivot lies in the trailing block.
    fn row(&self, top: usize, x: &InfElement) -> usize {
        (top - x.loops) * self.basis.len() + x.matching.lex_rank()
    }

    fn vector_of_bits(&self, top: usize, bits: &BitVec) -> InfVector {
        let n = self.basis.len();
        InfVector::from_elements(self.marking.clone(), bits.ones().map(|r| self.element(r % n, top - r / n)))
    }

    fn boundary_bits(&self, top: usize, x: &InfElement) -> BitVec {
        BitVec::from_ones((top + 1) * self.basis.len(), boundary_inf(x).iter().map(|y| self.row(top, y)))
    }

    /// Homology of cycles with at most `bound` loops, modulo boundaries of
    /// chains with at most `bound + 2` loops that land there. Returns the
    /// dimension and one representative per class.
    pub fn bounded_homology(&self, bound: usize) -> (usize, Vec<InfVector>) {
        let n = self.basis.len();
        let reach = bound + 2;
        let top = reach + 1;
        let dim = (top + 1) * n;
        let low_block = (top - bound) * n;

        let mut image = Echelon::new(dim, 0);
        for x in self.basis(reach) {
            let _ = image.insert(self.boundary_bits(top, &x), BitVec::zeros(0));
        }
        let mut classes = Echelon::new(dim, 0);
        for v in image.vectors() {
            if v.lowest_one().is_some_and(|p| p >= low_block) {
                let _ = classes.insert(v.clone(), BitVec::zeros(0));
            }
        }

        let cells = self.basis(bound);
        let columns: Vec<F2Vector> = cells.iter().map(|x| F2Vector::from_bits(&self.boundary_bits(top, x))).collect();
        let d = F2Matrix::from_columns(dim, columns).expect("column length");
        let mut reps = Vec::new();
        for z in gf2::kernel_basis(&d) {
            let bits = BitVec::from_ones(dim, z.support().iter().map(|&j| self.row(top, &cells[j])));
            if classes.insert(bits.clone(), BitVec::zeros(0)).is_ok() {
                reps.push(self.vector_of_bits(top, &bits));
            }
        }
        (reps.len(), reps)
    }

    /// A chain with at most `bound` loops whose boundary is `v`, if any.
    pub fn boundary_witness(&self, v: &InfVector, bound: usize) -> Result<Option<InfVector>> {
        if v.iter().any(|x| x.euler != self.euler) {
            return Err(Error::InvalidElement(format!("vector has terms outside Euler class {}", self.euler)));
        }
        let top = bound.max(v.max_loops().unwrap_or(0)) + 1;
        let dim = (top + 1) * self.basis.len();
        let cells = self.basis(bound);
        let columns: Vec<F2Vector> = cells.iter().map(|x| F2Vector::from_bits(&self.boundary_bits(top, x))).collect();
        let d = F2Matrix::from_columns(dim, columns).expect("column length");
        let target = F2Vector::from_support(dim, v.iter().map(|x| self.row(top, x)))?;
        Ok(gf2::solve_membership(&d, &target)?
            .map(|w| InfVector::from_elements(self.marking.clone(), w.support().iter().map(|&j| cells[j].clone()))))
    }
}

pub fn truncated_boundary_matrix(marking: &Arc<Marking>, e: i64, bound: usize) -> Result<F2Matrix> {
    Ok(EulerSummand::new(marking.clone(), e)?.quotient_boundary_matrix(bound))
}

/// Truncated homology of one Euler summand at loop bound `M`.
#[derive(Debug, Clone, Serialize)]
pub struct TruncatedHomology {
    pub n: usize,
    pub euler: i64,
    pub bound: usize,
    /// Loop-bounded homology dimensions at bounds `M − 2`, `M − 1`, `M`.
    pub dims: [usize; 3],
    /// Dimensions of the quotient complexes at bounds `M − 1` and `M`.
    pub quotient_dims: [usize; 2],
    pub stable_dimension: usize,
    pub stable: bool,
    pub witnesses: Vec<InfVector>,
}

pub fn truncated_homology(marking: &Arc<Marking>, e: i64, bound: usize) -> Result<TruncatedHomology> {
    if bound < 2 {
        return Err(Error::Unsupported("a loop bound of at least 2".into()));
    }
    let summand = EulerSummand::new(marking.clone(), e)?;
    let (d0, _) = summand.bounded_homology(bound - 2);
    let (d1, w1) = summand.bounded_homology(bound - 1);
    let (d2, w2) = summand.bounded_homology(bound);
    let stable_dimension = d1.min(d2);
    let witnesses = if d2 == stable_dimension { w2 } else { w1 };
    Ok(TruncatedHomology {
        n: marking.n(),
        euler: e,
        bound,
        dims: [d0, d1, d2],
        quotient_dims: [summand.quotient_dimension(bound - 1), summand.quotient_dimension(bound)],
        stable_dimension,
        stable: d0 == d1 && d1 == d2,
        witnesses,
    })
}

/// Outcome of a bounded search for a boundary witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundarySearch {
    Witness { bound: usize, chain: InfVector },
    NoWitnessUpTo(usize),
}

/// Looks for `u` with `∂u = v`, raising the loop bound of `u` until
/// `max_bound`. A negative answer is not a proof that `v` is not a boundary.
pub fn find_boundary_witness(v: &InfVector, max_bound: usize) -> Result<BoundarySearch> {
    let mut eulers: Vec<i64> = v.iter().map(|x| x.euler).collect();
    eulers.sort_unstable();
    eulers.dedup();
    let mut chain = InfVector::zero(v.marking.clone());
    let mut used = 0;
    for e in eulers {
        let summand = EulerSummand::new(v.marking.clone(), e)?;
        let part = InfVector::from_elements(v.marking.clone(), v.iter().filter(|x| x.euler == e).cloned());
        let start = part.max_loops().unwrap_or(0).saturating_sub(1);
        let mut found = None;
        for bound in start..=max_bound.max(start) {
            if let Some(w) = summand.boundary_witness(&part, bound)? {
                found = Some((bound, w));
                break;
            }
        }
        match found {
            Some((bound, w)) => {
                used = used.max(bound);
                chain.add_assign(&w);
            }
            None => return Ok(BoundarySearch::NoWitnessUpTo(max_bound)),
        }
    }
    Ok(BoundarySearch::Witness { bound: used, chain })
}

/// `p∘∂` and `∂∘p` agree; exposed for the verification suites.
pub fn projection_commutes(x: &InfElement) -> bool {
    let lhs = project_hat(&boundary_inf(x));
    let rhs = if x.loops == 0 { boundary_hat(&x.matching) } else { HatVector::zero(x.matching.marking().clone()) };
    lhs == rhs
}

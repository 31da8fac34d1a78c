//! The loopless complex ĈS on a marked disc.
//!
//! The basis is the set of matchings of the marking. The differential sums
//! the orientation-respecting resolutions of every crossing of the minimal
//! representative; chord resolutions never close a loop on the disc.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gf2::{self, BitVec, Echelon, F2Matrix, F2Vector};
use crate::marking::{enumerate_matchings, Marking, Matching, Sign};

/// A formal sum of matchings with coefficients in GF(2).
#[derive(Clone, PartialEq, Eq)]
pub struct HatVector {
    marking: Arc<Marking>,
    terms: BTreeSet<Matching>,
}

impl HatVector {
    pub fn zero(marking: Arc<Marking>) -> HatVector {
        HatVector { marking, terms: BTreeSet::new() }
    }

    /// Sum of the given matchings; repeats cancel in pairs.
    pub fn from_matchings(marking: Arc<Marking>, terms: impl IntoIterator<Item = Matching>) -> HatVector {
        let mut v = HatVector::zero(marking);
        for s in terms {
            v.toggle(s);
        }
        v
    }

    pub fn single(sigma: Matching) -> HatVector {
        let marking = sigma.marking().clone();
        HatVector::from_matchings(marking, [sigma])
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    pub fn terms(&self) -> &BTreeSet<Matching> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = &Matching> {
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

    pub fn contains(&self, sigma: &Matching) -> bool {
        self.terms.contains(sigma)
    }

    pub fn toggle(&mut self, sigma: Matching) {
        debug_assert_eq!(**sigma.marking(), *self.marking, "mixed markings in one vector");
        if !self.terms.remove(&sigma) {
            self.terms.insert(sigma);
        }
    }

    pub fn add_assign(&mut self, other: &HatVector) {
        for s in &other.terms {
            self.toggle(s.clone());
        }
    }

    pub fn add(&self, other: &HatVector) -> HatVector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Applies a basis map linearly.
    pub fn map(&self, target: Arc<Marking>, f: impl Fn(&Matching) -> HatVector) -> HatVector {
        let mut out = HatVector::zero(target);
        for s in &self.terms {
            out.add_assign(&f(s));
        }
        out
    }

    pub fn boundary(&self) -> HatVector {
        self.map(self.marking.clone(), boundary_hat)
    }

    /// Largest minimal crossing number among the terms; `None` for zero.
    pub fn intersection_level(&self) -> Option<usize> {
        self.terms.iter().map(Matching::min_crossings).max()
    }

    /// Coordinates in the [`enumerate_matchings`] basis.
    pub fn to_f2(&self) -> F2Vector {
        let dim = factorial(self.marking.n());
        F2Vector::from_support(dim, self.terms.iter().map(Matching::lex_rank)).expect("lex rank below n!")
    }

    pub fn from_f2(basis: &[Matching], marking: Arc<Marking>, x: &F2Vector) -> HatVector {
        HatVector::from_matchings(marking, x.support().iter().map(|&i| basis[i].clone()))
    }
}

impl fmt::Debug for HatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HatVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, s) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl Serialize for HatVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(&self.terms)
    }
}

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `∂σ`: the sum of the resolutions of all crossing pairs.
pub fn boundary_hat(sigma: &Matching) -> HatVector {
    HatVector::from_matchings(
        sigma.marking().clone(),
        sigma.crossing_pairs().into_iter().map(|(a, b)| sigma.swap_images(a, b)),
    )
}

/// Matrix of `∂` in the [`enumerate_matchings`] basis.
pub fn boundary_matrix_hat(marking: &Arc<Marking>) -> F2Matrix {
    let basis = enumerate_matchings(marking);
    boundary_matrix_of(&basis, basis.len())
}

fn boundary_matrix_of(basis: &[Matching], dim: usize) -> F2Matrix {
    let columns: Vec<F2Vector> = basis.par_iter().map(|s| boundary_hat(s).to_f2()).collect();
    F2Matrix::from_columns(dim, columns).expect("columns sized to the basis")
}

/// `dim ĤS` from a single rank computation.
pub fn homology_dimension(marking: &Arc<Marking>) -> usize {
    let m = boundary_matrix_hat(marking);
    m.cols() - 2 * gf2::rank(&m)
}

/// The chain complex of one marking with its boundary matrix assembled.
#[derive(Debug, Clone)]
pub struct HatComplex {
    marking: Arc<Marking>,
    basis: Vec<Matching>,
    boundary: F2Matrix,
}

impl HatComplex {
    pub fn new(marking: Arc<Marking>) -> HatComplex {
        let basis = enumerate_matchings(&marking);
        let boundary = boundary_matrix_of(&basis, basis.len());
        HatComplex { marking, basis, boundary }
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    pub fn basis(&self) -> &[Matching] {
        &self.basis
    }

    pub fn boundary_matrix(&self) -> &F2Matrix {
        &self.boundary
    }

    pub fn vector(&self, x: &F2Vector) -> HatVector {
        HatVector::from_f2(&self.basis, self.marking.clone(), x)
    }

    fn check(&self, v: &HatVector) -> Result<()> {
        if v.marking() != &self.marking {
            return Err(Error::InvalidMatching(format!(
                "vector lives on {} but the complex is over {}",
                v.marking(),
                self.marking
            )));
        }
        Ok(())
    }

    pub fn is_cycle(&self, v: &HatVector) -> Result<bool> {
        self.check(v)?;
        Ok(self.boundary.mul_vec(&v.to_f2())?.is_zero())
    }

    /// A chain `u` with `∂u = v`, or `None`.
    pub fn is_boundary(&self, v: &HatVector) -> Result<Option<HatVector>> {
        self.check(v)?;
        Ok(gf2::solve_membership(&self.boundary, &v.to_f2())?.map(|x| self.vector(&x)))
    }

    pub fn homology(self) -> HatHomology {
        let dim = self.basis.len();
        let rank = gf2::rank(&self.boundary);
        let h = dim - 2 * rank;
        let mut echelon = Echelon::new(dim, h);
        for col in self.boundary.columns() {
            let _ = echelon.insert(col.to_bits(), BitVec::zeros(h));
        }
        // crossingless matchings first, so representatives are sutures
        // whenever the marking allows it
        let crossingless = self.basis.iter().filter(|s| s.min_crossings() == 0).map(|s| HatVector::single(s.clone()));
        let kernel = gf2::kernel_basis(&self.boundary).into_iter().map(|x| self.vector(&x));
        let mut representatives = Vec::with_capacity(h);
        for v in crossingless.chain(kernel) {
            if representatives.len() == h {
                break;
            }
            let tag = BitVec::unit(h, representatives.len());
            if echelon.insert(v.to_f2().to_bits(), tag).is_ok() {
                representatives.push(v);
            }
        }
        debug_assert_eq!(representatives.len(), h);
        HatHomology { complex: self, rank, representatives, echelon }
    }
}

pub fn is_cycle(v: &HatVector) -> bool {
    v.boundary().is_zero()
}

pub fn is_boundary(v: &HatVector) -> Result<Option<HatVector>> {
    HatComplex::new(v.marking().clone()).is_boundary(v)
}

/// Homology of ĈS with a fixed basis of cycle representatives.
#[derive(Debug, Clone)]
pub struct HatHomology {
    complex: HatComplex,
    rank: usize,
    representatives: Vec<HatVector>,
    // spans ker ∂; image vectors carry zero tags, representative i carries e_i
    echelon: Echelon,
}

impl HatHomology {
    pub fn complex(&self) -> &HatComplex {
        &self.complex
    }

    pub fn dim_chain(&self) -> usize {
        self.complex.basis.len()
    }

    pub fn rank_boundary(&self) -> usize {
        self.rank
    }

    pub fn dimension(&self) -> usize {
        self.representatives.len()
    }

    pub fn representatives(&self) -> &[HatVector] {
        &self.representatives
    }

    /// Homology class of a cycle in the representative basis.
    pub fn coordinates(&self, v: &HatVector) -> Result<F2Vector> {
        self.complex.check(v)?;
        let tag = self.echelon.solve(&v.to_f2().to_bits()).ok_or(Error::NotACycle)?;
        Ok(F2Vector::from_bits(&tag))
    }

    /// Rank of the sutures' classes; `None` when the marking has no sutures.
    pub fn suture_span_rank(&self) -> Option<usize> {
        if !self.complex.marking.is_alternating() {
            return None;
        }
        let columns: Vec<F2Vector> = self
            .complex
            .basis
            .iter()
            .filter(|s| s.min_crossings() == 0)
            .map(|s| self.coordinates(&HatVector::single(s.clone())).expect("crossingless matchings are cycles"))
            .collect();
        Some(gf2::rank(&F2Matrix::from_columns(self.dimension(), columns).expect("coordinate length")))
    }
}

pub fn homology_hat(marking: &Arc<Marking>) -> HatHomology {
    HatComplex::new(marking.clone()).homology()
}

/// Exchanges the strands ending at adjacent same-sign points `p` and `q`.
pub fn switch_w(sigma: &Matching, p: usize, q: usize) -> Result<Matching> {
    let mk = sigma.marking();
    mk.check_point(p)?;
    mk.check_point(q)?;
    let adjacent = mk.next(p) == q || mk.next(q) == p;
    if p == q || !adjacent || mk.sign(p) != mk.sign(q) {
        return Err(Error::BadSwitch(p, q));
    }
    Ok(match mk.sign(p) {
        Sign::In => sigma.swap_images(p, q),
        Sign::Out => sigma.swap_preimages(p, q),
    })
}

pub fn switch_w_vector(v: &HatVector, p: usize, q: usize) -> Result<HatVector> {
    let mut out = HatVector::zero(v.marking().clone());
    for s in v.iter() {
        out.toggle(switch_w(s, p, q)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize) -> Arc<Marking> {
        Arc::new(Marking::alternating(n).unwrap())
    }

    fn m(mk: &Arc<Marking>, images: &[usize]) -> Matching {
        Matching::new(mk.clone(), images.to_vec()).unwrap()
    }

    #[test]
    fn star_boundary_is_the_bypass_triple() {
        let f3 = f(3);
        let d = boundary_hat(&m(&f3, &[3, 5, 1]));
        let expected = HatVector::from_matchings(f3.clone(), [m(&f3, &[5, 3, 1]), m(&f3, &[1, 5, 3]), m(&f3, &[3, 1, 5])]);
        assert_eq!(d, expected);
        assert!(boundary_hat(&m(&f3, &[1, 3, 5])).is_zero());
    }

    #[test]
    fn non_alternating_boundary() {
        let mk = Arc::new("iioo".parse::<Marking>().unwrap());
        let sb = m(&mk, &[2, 3]);
        assert_eq!(boundary_hat(&sb), HatVector::single(m(&mk, &[3, 2])));
    }

    #[test]
    fn small_matrices() {
        let m1 = boundary_matrix_hat(&f(1));
        assert_eq!((m1.rows(), m1.cols(), m1.nonzeros()), (1, 1, 0));
        assert_eq!(boundary_matrix_hat(&f(2)).nonzeros(), 0);
        assert_eq!(gf2::rank(&boundary_matrix_hat(&f(3))), 1);
        assert_eq!(gf2::kernel_basis(&boundary_matrix_hat(&f(3))).len(), 5);
    }

    #[test]
    fn homology_dimensions() {
        assert_eq!(homology_hat(&f(1)).dimension(), 1);
        assert_eq!(homology_hat(&f(3)).dimension(), 4);
        let mk = Arc::new("iioo".parse::<Marking>().unwrap());
        assert_eq!(homology_hat(&mk).dimension(), 0);
        assert_eq!(homology_hat(&mk).suture_span_rank(), None);
    }

    #[test]
    fn boundary_queries() {
        let f3 = f(3);
        let cx = HatComplex::new(f3.clone());
        let zero = HatVector::zero(f3.clone());
        assert!(cx.is_cycle(&zero).unwrap());
        assert_eq!(cx.is_boundary(&zero).unwrap(), Some(zero.clone()));
        let triple = boundary_hat(&m(&f3, &[3, 5, 1]));
        assert_eq!(cx.is_boundary(&triple).unwrap(), Some(HatVector::single(m(&f3, &[3, 5, 1]))));
        let single = HatVector::single(m(&f3, &[1, 3, 5]));
        assert!(cx.is_cycle(&single).unwrap());
        assert_eq!(cx.is_boundary(&single).unwrap(), None);
    }

    #[test]
    fn coordinates_reject_non_cycles() {
        let f3 = f(3);
        let h = homology_hat(&f3);
        assert_eq!(h.coordinates(&HatVector::single(m(&f3, &[3, 5, 1]))), Err(Error::NotACycle));
        let triple = boundary_hat(&m(&f3, &[3, 5, 1]));
        assert!(h.coordinates(&triple).unwrap().is_zero());
        assert_eq!(h.suture_span_rank(), Some(4));
    }

    #[test]
    fn switch_examples() {
        let mk = Arc::new("iioo".parse::<Marking>().unwrap());
        let sa = m(&mk, &[3, 2]);
        let sb = switch_w(&sa, 0, 1).unwrap();
        assert_eq!(sb, m(&mk, &[2, 3]));
        assert_eq!(switch_w(&sb, 0, 1).unwrap(), sa);
        assert_eq!(switch_w(&sa, 1, 2), Err(Error::BadSwitch(1, 2)));
        assert_eq!(switch_w(&sa, 0, 2), Err(Error::BadSwitch(0, 2)));
        // ∂W + W∂ = 1 on σ_A
        let lhs = boundary_hat(&sb).add(&switch_w_vector(&boundary_hat(&sa), 0, 1).unwrap());
        assert_eq!(lhs, HatVector::single(sa));
    }
}

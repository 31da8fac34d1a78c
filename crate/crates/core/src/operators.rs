//! Creation and annihilation operators, the word basis, crossed wires and
//! the sutures-modulo-bypass presentation.
//!
//! All operators act on the canonical markings `F_n` with basepoint 0.
//! `a*_−` inserts a new chord `0 → 1` and shifts every old point up by two;
//! `a*_+` inserts a new chord `0 → 2n+1` and moves the old basepoint to `2n`.
//! `a_−` joins the strands at `0` and `2n−1` and `a_+` joins those at `0` and
//! `1`; both are left inverses of the matching creation operator.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::euler::chord_turning;
use crate::gf2::{self, F2Matrix, F2Vector};
use crate::hat::{boundary_hat, HatVector};
use crate::inf::{InfElement, InfVector};
use crate::marking::{enumerate_matchings, Letter, Marking, Matching, Sign, Site, Word};
use crate::suture::{enumerate_sutures, Suture};

fn require_canonical(marking: &Marking) -> Result<()> {
    if !marking.is_alternating() || marking.basepoint() != 0 {
        return Err(Error::Unsupported(format!("a canonical alternating marking, got {marking}")));
    }
    Ok(())
}

pub fn canonical(n: usize) -> Result<Arc<Marking>> {
    Ok(Arc::new(Marking::alternating(n)?))
}

/// `a*_±` on a single matching of `F_n`, landing in `F_{n+1}`.
pub fn create_hat(letter: Letter, sigma: &Matching) -> Result<Matching> {
    let mk = sigma.marking();
    require_canonical(mk)?;
    let n = mk.n();
    let target = canonical(n + 1)?;
    let old = sigma.images();
    let images: Vec<usize> = match letter {
        Letter::Minus => std::iter::once(1).chain(old.iter().map(|&b| b + 2)).collect(),
        Letter::Plus => std::iter::once(2 * n + 1).chain(old[1..].iter().copied()).chain(std::iter::once(old[0])).collect(),
    };
    Matching::new(target, images)
}

/// Outcome of closing two boundary points of a matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Closure {
    /// The two points were joined by a chord, which closes into a loop.
    Loop(Matching),
    /// The two strands were concatenated.
    Joined(Matching),
}

impl Closure {
    pub fn matching(&self) -> &Matching {
        match self {
            Closure::Loop(s) | Closure::Joined(s) => s,
        }
    }
}

// (closing out-point, reindexing shift) for each annihilation operator
fn closing_point(letter: Letter, n: usize) -> (usize, usize) {
    match letter {
        Letter::Minus => (2 * n - 1, 2),
        Letter::Plus => (1, 0),
    }
}

/// Joins the strand ending at the basepoint with the strand at its
/// neighbour; the remaining matching lives on `F_{n−1}`.
pub fn close(letter: Letter, sigma: &Matching) -> Result<Closure> {
    let mk = sigma.marking();
    require_canonical(mk)?;
    let n = mk.n();
    if n < 2 {
        return Err(Error::Unsupported("at least two chords to annihilate".into()));
    }
    let target = canonical(n - 1)?;
    let (out_point, shift) = closing_point(letter, n);
    let len = 2 * n - 2;
    let reindex = |j: usize| (j + len - shift) % len;
    let s0 = sigma.image(0);
    let mut chords = Vec::with_capacity(n - 1);
    let joined = s0 != out_point;
    let x = sigma.preimage(out_point);
    for (a, b) in sigma.chords() {
        if a == 0 || (joined && a == x) {
            continue;
        }
        chords.push((reindex(a), reindex(b)));
    }
    if joined {
        chords.push((reindex(x), reindex(s0)));
    }
    let result = Matching::from_chords(target, &chords)?;
    Ok(if joined { Closure::Joined(result) } else { Closure::Loop(result) })
}

/// `a_±` on ĈS: a closed loop kills the term.
pub fn annihilate_hat(letter: Letter, sigma: &Matching) -> Result<Option<Matching>> {
    Ok(match close(letter, sigma)? {
        Closure::Joined(s) => Some(s),
        Closure::Loop(_) => None,
    })
}

fn target_marking(v: &HatVector, up: bool) -> Result<Arc<Marking>> {
    let n = v.marking().n();
    if up {
        canonical(n + 1)
    } else if n >= 2 {
        canonical(n - 1)
    } else {
        Err(Error::Unsupported("at least two chords to annihilate".into()))
    }
}

pub fn create_hat_vector(letter: Letter, v: &HatVector) -> Result<HatVector> {
    let mut out = HatVector::zero(target_marking(v, true)?);
    for s in v.iter() {
        out.toggle(create_hat(letter, s)?);
    }
    Ok(out)
}

pub fn annihilate_hat_vector(letter: Letter, v: &HatVector) -> Result<HatVector> {
    let mut out = HatVector::zero(target_marking(v, false)?);
    for s in v.iter() {
        if let Some(t) = annihilate_hat(letter, s)? {
            out.toggle(t);
        }
    }
    Ok(out)
}

/// `a*_±` on CS∞; the new chord is straight and the whirl count is kept.
pub fn create_inf(letter: Letter, x: &InfElement) -> Result<InfElement> {
    InfElement::from_whirls(create_hat(letter, x.matching())?, x.loops(), x.whirl_count())
}

/// `a_±` on CS∞. A closed loop is kept as one more loop; the Euler class
/// follows the total turning of the joined strand.
pub fn annihilate_inf(letter: Letter, x: &InfElement) -> Result<InfElement> {
    let sigma = x.matching();
    let mk = sigma.marking();
    let n = mk.n() as i64;
    let k = x.whirl_count();
    let (out_point, _) = closing_point(letter, mk.n());
    // turning of the short boundary cap from the closing out-point to 0
    let cap = match letter {
        Letter::Minus => n + 1,
        Letter::Plus => -(n + 1),
    };
    match close(letter, sigma)? {
        Closure::Loop(rest) => {
            // the closed loop turns by ±2π; anticlockwise loops are the canonical ones
            let whirls = if cap > 0 { k } else { k - 2 };
            InfElement::from_whirls(rest, x.loops() + 1, whirls)
        }
        Closure::Joined(rest) => {
            let s0 = sigma.image(0);
            let xp = sigma.preimage(out_point);
            let path = chord_turning(mk, xp, out_point) + cap + chord_turning(mk, 0, s0);
            let excess = path - chord_turning(mk, xp, s0);
            if excess % (2 * n) != 0 {
                return Err(Error::InvalidElement(format!("joined strand of {x} turns by a non-integral multiple of 2π")));
            }
            InfElement::from_whirls(rest, x.loops(), k + excess / (2 * n))
        }
    }
}

fn target_marking_inf(v: &InfVector, up: bool) -> Result<Arc<Marking>> {
    target_marking(&HatVector::zero(v.marking().clone()), up)
}

pub fn create_inf_vector(letter: Letter, v: &InfVector) -> Result<InfVector> {
    v.try_map(target_marking_inf(v, true)?, |x| Ok(InfVector::single(create_inf(letter, x)?)))
}

pub fn annihilate_inf_vector(letter: Letter, v: &InfVector) -> Result<InfVector> {
    v.try_map(target_marking_inf(v, false)?, |x| Ok(InfVector::single(annihilate_inf(letter, x)?)))
}

/// The vacuum: the single matching of `F_1`.
pub fn vacuum() -> Matching {
    enumerate_matchings(&canonical(1).expect("n = 1 is valid")).remove(0)
}

/// `v_w = a*_{w_1} ⋯ a*_{w_k} v_∅`, a matching on `F_{k+1}`.
pub fn word_vector(w: &Word) -> Matching {
    w.letters().iter().rev().fold(vacuum(), |s, &l| create_hat(l, &s).expect("creation from a canonical marking"))
}

/// Applies `a_{w_1}` first, then `a_{w_2}`, and so on.
pub fn annihilate_word(w: &Word, sigma: &Matching) -> Result<Option<Matching>> {
    let mut cur = sigma.clone();
    for &l in w.letters() {
        match annihilate_hat(l, &cur)? {
            Some(s) => cur = s,
            None => return Ok(None),
        }
    }
    Ok(Some(cur))
}

/// Whether the annihilation sequence of `w` sends `v_w` to the vacuum and
/// every other word vector of the same length to zero.
pub fn annihilation_word_check(w: &Word) -> bool {
    Word::all(w.len()).iter().all(|other| {
        let got = annihilate_word(w, &word_vector(other)).expect("word vectors are canonical");
        if other == w {
            got == Some(vacuum())
        } else {
            got.is_none()
        }
    })
}

fn check_site(sigma: &Matching, site: &Site) -> Result<()> {
    if **site.marking() != **sigma.marking() {
        return Err(Error::BadSite("site and matching live on different markings".into()));
    }
    if !site.is_alternating() {
        return Err(Error::BadSite(format!("{:?} does not alternate in sign", site.points())));
    }
    Ok(())
}

/// The crossed-wires map `B`: exchanges the strand ends at `f_{−1}` and `f_1`.
pub fn crossed_wires(sigma: &Matching, site: &Site) -> Result<Matching> {
    check_site(sigma, site)?;
    let [l, _, r] = site.points();
    Ok(match sigma.marking().sign(l) {
        Sign::In => sigma.swap_images(l, r),
        Sign::Out => sigma.swap_preimages(l, r),
    })
}

pub fn crossed_wires_vector(v: &HatVector, site: &Site) -> Result<HatVector> {
    let mut out = HatVector::zero(v.marking().clone());
    for s in v.iter() {
        out.toggle(crossed_wires(s, site)?);
    }
    Ok(out)
}

fn from_pairs(marking: &Arc<Marking>, pairs: &[(usize, usize)]) -> Result<Matching> {
    let chords: Vec<(usize, usize)> =
        pairs.iter().map(|&(p, q)| if marking.sign(p) == Sign::In { (p, q) } else { (q, p) }).collect();
    Matching::from_chords(marking.clone(), &chords)
}

/// The two reconnections of the site strands other than `σ` itself, each
/// `None` when it closes a loop.
pub fn site_reconnections(sigma: &Matching, site: &Site) -> Result<[Option<Matching>; 2]> {
    check_site(sigma, site)?;
    let mk = sigma.marking();
    let [fl, f0, fr] = site.points();
    let a = sigma.partner(fl);
    let c = sigma.partner(fr);
    let x = sigma.partner(f0);
    if x == fr {
        return Ok([Some(sigma.clone()), None]);
    }
    if x == fl {
        return Ok([None, Some(sigma.clone())]);
    }
    let untouched: Vec<(usize, usize)> = sigma.chords().filter(|&(p, q)| ![fl, f0, fr].contains(&p) && ![fl, f0, fr].contains(&q)).collect();
    let with = |extra: [(usize, usize); 3]| -> Result<Matching> {
        let mut pairs = untouched.clone();
        pairs.extend(extra);
        from_pairs(mk, &pairs)
    };
    Ok([Some(with([(f0, fr), (a, x), (c, fl)])?), Some(with([(f0, fl), (c, x), (a, fr)])?)])
}

/// Closed form of `∂(Bσ)`: `σ` plus the two site reconnections plus `B∂σ`.
pub fn crossed_wires_boundary(sigma: &Matching, site: &Site) -> Result<HatVector> {
    let mut out = HatVector::single(sigma.clone());
    for r in site_reconnections(sigma, site)?.into_iter().flatten() {
        out.toggle(r);
    }
    out.add_assign(&crossed_wires_vector(&boundary_hat(sigma), site)?);
    Ok(out)
}

/// Pieces of a cycle: `x = a*_− y + a*_+ z + ∂u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub y: HatVector,
    pub z: HatVector,
    pub u: HatVector,
}

/// Splits a cycle through the crossed wires at the basepoint site.
pub fn decompose_cycle(x: &HatVector, site: &Site) -> Result<Decomposition> {
    let mk = x.marking();
    require_canonical(mk)?;
    let n = mk.n();
    if n < 2 {
        return Err(Error::Unsupported("at least two chords to decompose".into()));
    }
    if site.points() != [2 * n - 1, 0, 1] || **site.marking() != **mk {
        return Err(Error::BadSite("decomposition needs the site around the basepoint".into()));
    }
    if !x.boundary().is_zero() {
        return Err(Error::NotACycle);
    }
    let u = crossed_wires_vector(x, site)?;
    let rest = x.add(&u.boundary());
    let lower = canonical(n - 1)?;
    let mut y = HatVector::zero(lower.clone());
    let mut z = HatVector::zero(lower);
    for s in rest.iter() {
        let (letter, slot) = match s.image(0) {
            1 => (Letter::Minus, &mut y),
            b if b == 2 * n - 1 => (Letter::Plus, &mut z),
            _ => return Err(Error::InvalidElement(format!("term {s} has no chord at the basepoint site"))),
        };
        // a matching carrying the created chord is the creation image of its annihilation
        let closed = annihilate_hat(letter, s)?.expect("the created chord is not closed by its own annihilator");
        slot.toggle(closed);
    }
    let d = Decomposition { y, z, u };
    let check = create_hat_vector(Letter::Minus, &d.y)?.add(&create_hat_vector(Letter::Plus, &d.z)?).add(&d.u.boundary());
    if check != *x || !d.y.boundary().is_zero() || !d.z.boundary().is_zero() {
        return Err(Error::InvalidElement(format!("decomposition of {x} does not re-verify")));
    }
    Ok(d)
}

/// The bypass relation of a suture at a boundary site.
pub fn bypass_triple(gamma: &Suture, site: &Site) -> Result<HatVector> {
    crossed_wires_boundary(&gamma.matching, site)
}

/// Counts for the presentation of homology as sutures modulo bypasses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SutureQuotient {
    pub n: usize,
    pub catalan: usize,
    pub bypass_rank: usize,
    pub quotient_dim: usize,
    pub graded: BTreeMap<i64, usize>,
}

/// All boundary-site bypass relations, as vectors over the suture basis.
pub fn bypass_relations(marking: &Arc<Marking>) -> Result<(Vec<Suture>, Vec<F2Vector>)> {
    let sutures = enumerate_sutures(marking)?;
    let index: BTreeMap<&Matching, usize> = sutures.iter().enumerate().map(|(i, s)| (&s.matching, i)).collect();
    let sites = crate::marking::all_sites(marking);
    let rels: Vec<Result<Vec<F2Vector>>> = sutures
        .par_iter()
        .map(|g| {
            sites
                .iter()
                .map(|site| {
                    let v = bypass_triple(g, site)?;
                    let ones = v
                        .iter()
                        .map(|s| index.get(s).copied().ok_or_else(|| Error::InvalidElement(format!("bypass term {s} is not a suture"))))
                        .collect::<Result<Vec<_>>>()?;
                    F2Vector::from_support(sutures.len(), ones)
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for r in rels {
        out.extend(r?);
    }
    Ok((sutures, out))
}

pub fn suture_quotient(marking: &Arc<Marking>) -> Result<SutureQuotient> {
    let (sutures, rels) = bypass_relations(marking)?;
    let catalan = sutures.len();
    let bypass_rank = gf2::rank(&F2Matrix::from_columns(catalan, rels.clone())?);
    let graded = graded_from(&sutures, &rels)?;
    Ok(SutureQuotient { n: marking.n(), catalan, bypass_rank, quotient_dim: catalan - bypass_rank, graded })
}

fn graded_from(sutures: &[Suture], rels: &[F2Vector]) -> Result<BTreeMap<i64, usize>> {
    let mut graded = BTreeMap::new();
    let mut eulers: Vec<i64> = sutures.iter().map(|s| s.euler).collect();
    eulers.sort_unstable();
    eulers.dedup();
    for e in eulers {
        let keep: Vec<usize> = (0..sutures.len()).filter(|&i| sutures[i].euler == e).collect();
        let mut cols = Vec::new();
        for r in rels {
            let inside = r.support().iter().filter(|i| sutures[**i].euler == e).count();
            if inside != 0 && inside != r.support().len() {
                return Err(Error::InvalidElement("bypass relation mixes Euler classes".into()));
            }
            if inside != 0 {
                cols.push(r.clone());
            }
        }
        let m = F2Matrix::from_columns(sutures.len(), cols)?.select_rows(&keep);
        graded.insert(e, keep.len() - gf2::rank(&m));
    }
    Ok(graded)
}

pub fn graded_suture_quotient(marking: &Arc<Marking>) -> Result<BTreeMap<i64, usize>> {
    let (sutures, rels) = bypass_relations(marking)?;
    graded_from(&sutures, &rels)
}

//! Markings of the disc boundary and matchings between their points.
//!
//! Points are indexed `0..2n` anticlockwise. On a disc, a loopless string
//! diagram is determined up to homotopy by which in-point is joined to which
//! out-point, so a [`Matching`] is the combinatorial stand-in for a homotopy
//! class. This identification is specific to the disc.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Orientation label of a marked point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    In,
    Out,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::In => Sign::Out,
            Sign::Out => Sign::In,
        }
    }

    fn as_char(self) -> char {
        match self {
            Sign::In => 'i',
            Sign::Out => 'o',
        }
    }
}

/// `2n` signed points on the boundary circle with a distinguished in-point.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Marking {
    signs: Vec<Sign>,
    basepoint: usize,
    ins: Vec<usize>,
    outs: Vec<usize>,
    // position of each point inside `ins` or `outs`
    rank: Vec<usize>,
}

impl Marking {
    /// Builds a marking; the basepoint is the first in-point.
    pub fn new(signs: Vec<Sign>) -> Result<Marking> {
        if signs.is_empty() || !signs.len().is_multiple_of(2) {
            return Err(Error::InvalidMarking(format!(
                "need a positive even number of points, got {}",
                signs.len()
            )));
        }
        let ins: Vec<usize> = (0..signs.len()).filter(|&p| signs[p] == Sign::In).collect();
        let outs: Vec<usize> = (0..signs.len()).filter(|&p| signs[p] == Sign::Out).collect();
        if ins.len() != outs.len() {
            return Err(Error::InvalidMarking(format!(
                "{} in-points but {} out-points",
                ins.len(),
                outs.len()
            )));
        }
        let mut rank = vec![0; signs.len()];
        for (k, &p) in ins.iter().enumerate() {
            rank[p] = k;
        }
        for (k, &p) in outs.iter().enumerate() {
            rank[p] = k;
        }
        let basepoint = ins[0];
        Ok(Marking { signs, basepoint, ins, outs, rank })
    }

    /// The canonical alternating marking `F_n`: even indices in, odd out.
    pub fn alternating(n: usize) -> Result<Marking> {
        if n == 0 {
            return Err(Error::InvalidMarking("n must be at least 1".into()));
        }
        Marking::new((0..2 * n).map(|p| if p % 2 == 0 { Sign::In } else { Sign::Out }).collect())
    }

    /// Number of chords, i.e. half the number of points.
    pub fn n(&self) -> usize {
        self.ins.len()
    }

    pub fn len(&self) -> usize {
        self.signs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.signs.is_empty()
    }

    pub fn sign(&self, point: usize) -> Sign {
        self.signs[point]
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn basepoint(&self) -> usize {
        self.basepoint
    }

    /// In-points in increasing index order.
    pub fn in_points(&self) -> &[usize] {
        &self.ins
    }

    /// Out-points in increasing index order.
    pub fn out_points(&self) -> &[usize] {
        &self.outs
    }

    /// Index of `point` within [`in_points`](Self::in_points) or
    /// [`out_points`](Self::out_points), depending on its sign.
    pub fn rank_of(&self, point: usize) -> usize {
        self.rank[point]
    }

    pub fn is_alternating(&self) -> bool {
        (0..self.len()).all(|p| self.signs[p] != self.signs[self.next(p)])
    }

    /// Anticlockwise neighbour.
    pub fn next(&self, point: usize) -> usize {
        (point + 1) % self.len()
    }

    /// Clockwise neighbour.
    pub fn prev(&self, point: usize) -> usize {
        (point + self.len() - 1) % self.len()
    }

    /// Adjacent pairs `(p, p+1)` carrying the same sign.
    pub fn same_sign_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter(|&p| self.signs[p] == self.signs[self.next(p)])
            .map(|p| (p, self.next(p)))
            .collect()
    }

    /// The sign string, e.g. `"ioio"`.
    pub fn signature(&self) -> String {
        self.signs.iter().map(|s| s.as_char()).collect()
    }

    pub(crate) fn check_point(&self, point: usize) -> Result<()> {
        if point >= self.len() {
            return Err(Error::PointOutOfRange { point, len: self.len() });
        }
        Ok(())
    }

    pub(crate) fn check_in(&self, point: usize) -> Result<()> {
        self.check_point(point)?;
        if self.signs[point] != Sign::In {
            return Err(Error::NotInPoint(point));
        }
        Ok(())
    }

    /// True iff `p` lies strictly inside the anticlockwise arc from `from` to `to`.
    pub fn strictly_between(&self, from: usize, to: usize, p: usize) -> bool {
        let len = self.len();
        let d = (p + len - from) % len;
        d > 0 && d < (to + len - from) % len
    }
}

impl FromStr for Marking {
    type Err = Error;

    fn from_str(s: &str) -> Result<Marking> {
        let signs = s
            .chars()
            .map(|c| match c {
                'i' | 'I' => Ok(Sign::In),
                'o' | 'O' => Ok(Sign::Out),
                other => Err(Error::Parse(format!("unexpected sign character {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Marking::new(signs)
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.signature())
    }
}

impl Serialize for Marking {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Marking", 3)?;
        st.serialize_field("n", &self.n())?;
        st.serialize_field("signs", &self.signature())?;
        st.serialize_field("basepoint", &self.basepoint)?;
        st.end()
    }
}

/// A bijection from the in-points of a marking to its out-points.
///
/// `images[k]` is the out-point joined to the `k`-th in-point. Equality,
/// hashing and ordering look only at `images`; all matchings compared with
/// each other are expected to share a marking.
#[derive(Clone)]
pub struct Matching {
    marking: Arc<Marking>,
    images: Vec<usize>,
}

impl Matching {
    pub fn new(marking: Arc<Marking>, images: Vec<usize>) -> Result<Matching> {
        if images.len() != marking.n() {
            return Err(Error::InvalidMatching(format!(
                "expected {} images, got {}",
                marking.n(),
                images.len()
            )));
        }
        let mut seen = vec![false; marking.len()];
        for &b in &images {
            marking.check_point(b)?;
            if marking.sign(b) != Sign::Out {
                return Err(Error::InvalidMatching(format!("{b} is not an out-point")));
            }
            if std::mem::replace(&mut seen[b], true) {
                return Err(Error::InvalidMatching(format!("out-point {b} used twice")));
            }
        }
        Ok(Matching { marking, images })
    }

    /// Builds a matching from `(in, out)` chords given in any order.
    pub fn from_chords(marking: Arc<Marking>, chords: &[(usize, usize)]) -> Result<Matching> {
        let mut images = vec![usize::MAX; marking.n()];
        for &(a, b) in chords {
            marking.check_in(a)?;
            let k = marking.rank_of(a);
            if images[k] != usize::MAX {
                return Err(Error::InvalidMatching(format!("in-point {a} used twice")));
            }
            images[k] = b;
        }
        if images.contains(&usize::MAX) {
            return Err(Error::InvalidMatching("not every in-point has a chord".into()));
        }
        Matching::new(marking, images)
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    /// Out-point images over in-points in increasing index order.
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `σ(a)` for an in-point `a`.
    pub fn image(&self, a: usize) -> usize {
        debug_assert_eq!(self.marking.sign(a), Sign::In);
        self.images[self.marking.rank_of(a)]
    }

    /// The in-point joined to out-point `b`.
    pub fn preimage(&self, b: usize) -> usize {
        let k = self.images.iter().position(|&x| x == b).expect("out-point has a preimage");
        self.marking.in_points()[k]
    }

    /// The other endpoint of the chord through `p`, whatever its sign.
    pub fn partner(&self, p: usize) -> usize {
        match self.marking.sign(p) {
            Sign::In => self.image(p),
            Sign::Out => self.preimage(p),
        }
    }

    /// `(in, out)` pairs in increasing in-point order.
    pub fn chords(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.marking.in_points().iter().copied().zip(self.images.iter().copied())
    }

    /// Whether the chords from in-points `a` and `b` cross in minimal position.
    pub fn interleaved(&self, a: usize, b: usize) -> Result<bool> {
        self.marking.check_in(a)?;
        self.marking.check_in(b)?;
        if a == b {
            return Err(Error::SamePoint(a));
        }
        Ok(self.crosses(a, b))
    }

    pub(crate) fn crosses(&self, a: usize, b: usize) -> bool {
        let m = &*self.marking;
        let sa = self.image(a);
        m.strictly_between(a, sa, b) != m.strictly_between(a, sa, self.image(b))
    }

    /// All crossing pairs `(a, b)` of in-points with `a < b`.
    pub fn crossing_pairs(&self) -> Vec<(usize, usize)> {
        let ins = self.marking.in_points();
        let mut out = Vec::new();
        for (i, &a) in ins.iter().enumerate() {
            for &b in &ins[i + 1..] {
                if self.crosses(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Minimal number of crossings in the homotopy class.
    pub fn min_crossings(&self) -> usize {
        self.crossing_pairs().len()
    }

    /// Orientation-respecting resolution of the crossing between the chords
    /// at in-points `a` and `b`.
    pub fn resolve(&self, a: usize, b: usize) -> Result<Matching> {
        if !self.interleaved(a, b)? {
            return Err(Error::NotInterleaved(a, b));
        }
        Ok(self.swap_images(a, b))
    }

    /// Exchanges `σ(a)` and `σ(b)` without any crossing check.
    pub fn swap_images(&self, a: usize, b: usize) -> Matching {
        let mut images = self.images.clone();
        images.swap(self.marking.rank_of(a), self.marking.rank_of(b));
        Matching { marking: self.marking.clone(), images }
    }

    /// Exchanges the in-points of the chords ending at out-points `p` and `q`.
    pub fn swap_preimages(&self, p: usize, q: usize) -> Matching {
        let mut images = self.images.clone();
        for x in images.iter_mut() {
            if *x == p {
                *x = q;
            } else if *x == q {
                *x = p;
            }
        }
        Matching { marking: self.marking.clone(), images }
    }

    /// Position of this matching in [`enumerate_matchings`] order.
    pub fn lex_rank(&self) -> usize {
        let ranks: Vec<usize> = self.images.iter().map(|&b| self.marking.rank_of(b)).collect();
        let n = ranks.len();
        let mut fact = vec![1usize; n + 1];
        for i in 1..=n {
            fact[i] = fact[i - 1] * i;
        }
        let mut rank = 0;
        for i in 0..n {
            let smaller = ranks[i + 1..].iter().filter(|&&r| r < ranks[i]).count();
            rank += smaller * fact[n - 1 - i];
        }
        rank
    }
}

impl PartialEq for Matching {
    fn eq(&self, other: &Self) -> bool {
        self.images == other.images
    }
}

impl Eq for Matching {}

impl Hash for Matching {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

impl PartialOrd for Matching {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Matching {
    fn cmp(&self, other: &Self) -> Ordering {
        self.images.cmp(&other.images)
    }
}

impl fmt::Debug for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (a, b)) in self.chords().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for Matching {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.images.serialize(serializer)
    }
}

/// All `n!` matchings of the marking, lexicographic in the image sequence.
pub fn enumerate_matchings(marking: &Arc<Marking>) -> Vec<Matching> {
    let mut perm: Vec<usize> = marking.out_points().to_vec();
    let mut out = Vec::new();
    loop {
        out.push(Matching { marking: marking.clone(), images: perm.clone() });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Three cyclically consecutive points `(f_{-1}, f_0, f_1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Site {
    marking: Arc<Marking>,
    points: [usize; 3],
}

impl Site {
    /// The site whose middle point is `center`.
    pub fn centered(marking: Arc<Marking>, center: usize) -> Result<Site> {
        marking.check_point(center)?;
        if marking.len() < 3 {
            return Err(Error::BadSite("marking has fewer than three points".into()));
        }
        let points = [marking.prev(center), center, marking.next(center)];
        Ok(Site { marking, points })
    }

    /// The site `(2n-1, 0, 1)` around the basepoint.
    pub fn at_basepoint(marking: Arc<Marking>) -> Result<Site> {
        let bp = marking.basepoint();
        Site::centered(marking, bp)
    }

    pub fn marking(&self) -> &Arc<Marking> {
        &self.marking
    }

    pub fn points(&self) -> [usize; 3] {
        self.points
    }

    pub fn center(&self) -> usize {
        self.points[1]
    }

    /// Whether the middle sign differs from both neighbours.
    pub fn is_alternating(&self) -> bool {
        let [l, c, r] = self.points;
        let m = &self.marking;
        m.sign(l) != m.sign(c) && m.sign(r) != m.sign(c)
    }
}

/// All sites of a marking, indexed by their middle point.
pub fn all_sites(marking: &Arc<Marking>) -> Vec<Site> {
    (0..marking.len()).filter_map(|c| Site::centered(marking.clone(), c).ok()).collect()
}

/// One letter of a creation word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    Minus,
    Plus,
}

impl Letter {
    pub fn as_char(self) -> char {
        match self {
            Letter::Minus => '-',
            Letter::Plus => '+',
        }
    }
}

/// A finite word over `{-, +}`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    /// All `2^len` words of the given length, `-` before `+`.
    pub fn all(len: usize) -> Vec<Word> {
        (0..1usize << len)
            .map(|bits| {
                Word(
                    (0..len)
                        .map(|i| if bits >> (len - 1 - i) & 1 == 0 { Letter::Minus } else { Letter::Plus })
                        .collect(),
                )
            })
            .collect()
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        s.chars()
            .map(|c| match c {
                '-' | 'm' => Ok(Letter::Minus),
                '+' | 'p' => Ok(Letter::Plus),
                other => Err(Error::Parse(format!("unexpected word letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("∅");
        }
        for l in &self.0 {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize) -> Arc<Marking> {
        Arc::new(Marking::alternating(n).unwrap())
    }

    fn m(marking: &Arc<Marking>, images: &[usize]) -> Matching {
        Matching::new(marking.clone(), images.to_vec()).unwrap()
    }

    #[test]
    fn marking_validation() {
        assert!(Marking::alternating(0).is_err());
        assert!("iio".parse::<Marking>().is_err());
        assert!("iiio".parse::<Marking>().is_err());
        assert!("ixoo".parse::<Marking>().is_err());
        let mk: Marking = "iioo".parse().unwrap();
        assert!(!mk.is_alternating());
        assert_eq!(mk.same_sign_pairs(), vec![(0, 1), (2, 3)]);
        assert!(f(3).is_alternating());
        assert_eq!(f(3).signature(), "ioioio");
        let rotated: Marking = "oioi".parse().unwrap();
        assert_eq!(rotated.basepoint(), 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_matchings(&f(1)).len(), 1);
        assert_eq!(enumerate_matchings(&f(3)).len(), 6);
        let mk = Arc::new("iioo".parse::<Marking>().unwrap());
        assert_eq!(enumerate_matchings(&mk).len(), 2);
    }

    #[test]
    fn enumeration_is_lexicographic_and_ranked() {
        let all = enumerate_matchings(&f(4));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        for (i, s) in all.iter().enumerate() {
            assert_eq!(s.lex_rank(), i);
        }
    }

    #[test]
    fn interleaving_examples() {
        let f3 = f(3);
        let star = m(&f3, &[3, 5, 1]);
        assert!(star.interleaved(0, 2).unwrap());
        assert_eq!(star.min_crossings(), 3);
        let id = m(&f3, &[1, 3, 5]);
        assert_eq!(id.min_crossings(), 0);
        let f2 = f(2);
        let s = m(&f2, &[3, 1]);
        assert!(!s.interleaved(0, 2).unwrap());
        assert_eq!(s.min_crossings(), 0);
    }

    #[test]
    fn interleaving_errors() {
        let f3 = f(3);
        let star = m(&f3, &[3, 5, 1]);
        assert_eq!(star.interleaved(2, 2), Err(Error::SamePoint(2)));
        assert_eq!(star.interleaved(1, 2), Err(Error::NotInPoint(1)));
        assert!(star.interleaved(0, 9).is_err());
    }

    #[test]
    fn resolve_examples() {
        let f3 = f(3);
        let star = m(&f3, &[3, 5, 1]);
        assert_eq!(star.resolve(0, 2).unwrap().images(), &[5, 3, 1]);
        assert_eq!(star.resolve(0, 4).unwrap().images(), &[1, 5, 3]);
        assert_eq!(star.resolve(2, 4).unwrap().images(), &[3, 1, 5]);
        let id = m(&f3, &[1, 3, 5]);
        assert_eq!(id.resolve(0, 2), Err(Error::NotInterleaved(0, 2)));
    }

    #[test]
    fn matching_validation() {
        let f2 = f(2);
        assert!(Matching::new(f2.clone(), vec![1]).is_err());
        assert!(Matching::new(f2.clone(), vec![1, 1]).is_err());
        assert!(Matching::new(f2.clone(), vec![1, 2]).is_err());
        assert!(Matching::from_chords(f2.clone(), &[(2, 1), (0, 3)]).is_ok());
    }

    #[test]
    fn words() {
        let w: Word = "-+".parse().unwrap();
        assert_eq!(w.letters(), &[Letter::Minus, Letter::Plus]);
        assert_eq!(Word::all(3).len(), 8);
        assert_eq!(Word::all(2)[1].to_string(), "-+");
        assert!("-x".parse::<Word>().is_err());
    }

    #[test]
    fn serialization() {
        let f3 = f(3);
        let star = m(&f3, &[3, 5, 1]);
        assert_eq!(serde_json::to_string(&star).unwrap(), "[3,5,1]");
        assert_eq!(
            serde_json::to_string(&*f3).unwrap(),
            r#"{"n":3,"signs":"ioioio","basepoint":0}"#
        );
    }
}

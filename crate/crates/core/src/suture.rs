//! Crossingless matchings viewed as sutures: the face decomposition of the
//! disc cut along the chords, signed so that the face to the left of each
//! oriented chord is positive.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::marking::{enumerate_matchings, Marking, Matching, Sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FaceSign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

/// A complementary region of the chords.
///
/// `arcs` lists the boundary arcs of the face; arc `j` runs anticlockwise
/// from point `j` to point `j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Face {
    pub arcs: Vec<usize>,
    pub sign: FaceSign,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Suture {
    pub matching: Matching,
    pub faces: Vec<Face>,
    pub euler: i64,
}

impl Suture {
    pub fn positive_faces(&self) -> usize {
        self.faces.iter().filter(|f| f.sign == FaceSign::Positive).count()
    }

    pub fn negative_faces(&self) -> usize {
        self.faces.len() - self.positive_faces()
    }

    /// Boundary arcs lying in faces of the given sign.
    pub fn boundary_arcs(&self, sign: FaceSign) -> Vec<usize> {
        let mut arcs: Vec<usize> =
            self.faces.iter().filter(|f| f.sign == sign).flat_map(|f| f.arcs.iter().copied()).collect();
        arcs.sort_unstable();
        arcs
    }
}

/// Builds the suture carried by `sigma`, or `None` when the chords cross or
/// the faces cannot be signed coherently.
pub fn as_suture(sigma: &Matching) -> Option<Suture> {
    if sigma.min_crossings() != 0 {
        return None;
    }
    let marking = sigma.marking();
    let len = marking.len();
    let mut face_of = vec![usize::MAX; len];
    let mut faces = Vec::new();
    for start in 0..len {
        if face_of[start] != usize::MAX {
            continue;
        }
        let id = faces.len();
        let mut arcs = Vec::new();
        let mut sign = None;
        let mut arc = start;
        loop {
            face_of[arc] = id;
            arcs.push(arc);
            let p = marking.next(arc);
            let here = match marking.sign(p) {
                Sign::In => FaceSign::Positive,
                Sign::Out => FaceSign::Negative,
            };
            match sign {
                None => sign = Some(here),
                Some(s) if s != here => return None,
                Some(_) => {}
            }
            arc = sigma.partner(p);
            if arc == start {
                break;
            }
        }
        arcs.sort_unstable();
        faces.push(Face { arcs, sign: sign.expect("face has a chord") });
    }
    let plus = faces.iter().filter(|f| f.sign == FaceSign::Positive).count() as i64;
    let euler = plus - (faces.len() as i64 - plus);
    Some(Suture { matching: sigma.clone(), faces, euler })
}

/// All sutures of an alternating marking, in matching enumeration order.
pub fn enumerate_sutures(marking: &Arc<Marking>) -> Result<Vec<Suture>> {
    if !marking.is_alternating() {
        return Err(Error::NotAlternating(marking.signature()));
    }
    Ok(enumerate_matchings(marking).iter().filter_map(as_suture).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::base_euler;

    fn f(n: usize) -> Arc<Marking> {
        Arc::new(Marking::alternating(n).unwrap())
    }

    fn catalan(n: usize) -> usize {
        let mut c = 1usize;
        for i in 0..n {
            c = c * 2 * (2 * i + 1) / (i + 2);
        }
        c
    }

    #[test]
    fn f1_has_two_faces() {
        let s = as_suture(&Matching::new(f(1), vec![1]).unwrap()).unwrap();
        assert_eq!(s.faces.len(), 2);
        assert_eq!(s.euler, 0);
    }

    #[test]
    fn f2_examples() {
        let a = as_suture(&Matching::new(f(2), vec![1, 3]).unwrap()).unwrap();
        let b = as_suture(&Matching::new(f(2), vec![3, 1]).unwrap()).unwrap();
        assert_eq!(a.faces.len(), 3);
        assert_eq!(a.euler, -1);
        assert_eq!(b.euler, 1);
        assert_eq!(a.boundary_arcs(FaceSign::Positive), vec![1, 3]);
        assert_eq!(a.boundary_arcs(FaceSign::Negative), vec![0, 2]);
    }

    #[test]
    fn crossing_matching_is_not_a_suture() {
        assert!(as_suture(&Matching::new(f(3), vec![3, 5, 1]).unwrap()).is_none());
    }

    #[test]
    fn incoherent_signing_is_rejected() {
        let mk = Arc::new("iioo".parse::<Marking>().unwrap());
        let s = Matching::new(mk.clone(), vec![3, 2]).unwrap();
        assert_eq!(s.min_crossings(), 0);
        assert!(as_suture(&s).is_none());
        assert!(enumerate_sutures(&mk).is_err());
    }

    #[test]
    fn catalan_counts() {
        for n in 1..=8 {
            assert_eq!(enumerate_sutures(&f(n)).unwrap().len(), catalan(n), "n = {n}");
        }
    }

    #[test]
    fn faces_are_signed_alternately_and_euler_matches_turning() {
        for n in 1..=6 {
            for s in enumerate_sutures(&f(n)).unwrap() {
                assert_eq!(s.faces.len(), n + 1);
                assert_eq!(s.euler, base_euler(&s.matching).unwrap());
                // adjacent faces across a chord carry opposite signs
                let mk = s.matching.marking();
                for p in 0..mk.len() {
                    let arc_before = mk.prev(p);
                    let face_a = s.faces.iter().find(|f| f.arcs.contains(&arc_before)).unwrap();
                    let face_b = s.faces.iter().find(|f| f.arcs.contains(&p)).unwrap();
                    assert_ne!(face_a.sign, face_b.sign);
                }
            }
        }
    }
}

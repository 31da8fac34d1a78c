use super::{BitVec, F2Matrix};

/// Incrementally built echelon basis of a subspace.
///
/// Each stored vector has a distinct lowest set coordinate (its pivot), and
/// carries a tag vector recording which inserted vectors it is a sum of.
/// Tags have length zero when the caller does not need them.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    tag_dim: usize,
    vectors: Vec<BitVec>,
    tags: Vec<BitVec>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(dim: usize, tag_dim: usize) -> Echelon {
        Echelon { dim, tag_dim, vectors: Vec::new(), tags: Vec::new(), pivot_row: vec![None; dim] }
    }

    /// Echelon basis of the column span; column `j` is tagged with the unit
    /// vector `e_j` when `tagged` is set.
    pub fn from_columns(m: &F2Matrix, tagged: bool) -> Echelon {
        let tag_dim = if tagged { m.cols() } else { 0 };
        let mut e = Echelon::new(m.rows(), tag_dim);
        for (j, col) in m.columns().iter().enumerate() {
            let tag = if tagged { BitVec::unit(tag_dim, j) } else { BitVec::zeros(0) };
            let _ = e.insert(col.to_bits(), tag);
        }
        e
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tag_dim(&self) -> usize {
        self.tag_dim
    }

    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// Stored vectors in insertion order; each has a distinct lowest bit.
    pub fn vectors(&self) -> &[BitVec] {
        &self.vectors
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.vectors.iter().map(|v| v.lowest_one().expect("stored vectors are nonzero"))
    }

    /// Reduces `v` against the basis, accumulating tags into `tag`.
    pub fn reduce_tagged(&self, v: &mut BitVec, tag: &mut BitVec) {
        assert_eq!(v.len(), self.dim, "vector length does not match the ambient dimension");
        let mut from = 0;
        while let Some(p) = v.next_one(from) {
            if let Some(i) = self.pivot_row[p] {
                // the stored vector has no bits below p
                v.xor_assign_from(&self.vectors[i], p / 64);
                if self.tag_dim > 0 {
                    tag.xor_assign(&self.tags[i]);
                }
            }
            from = p + 1;
        }
    }

    /// The remainder of `v` after full reduction.
    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut r = v.clone();
        let mut tag = BitVec::zeros(self.tag_dim);
        self.reduce_tagged(&mut r, &mut tag);
        r
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v` to the basis. Returns its new pivot, or, when `v` already
    /// lies in the span, the accumulated tag of the dependency.
    pub fn insert(&mut self, v: BitVec, tag: BitVec) -> Result<usize, BitVec> {
        assert_eq!(tag.len(), self.tag_dim, "tag length mismatch");
        let mut v = v;
        let mut tag = tag;
        self.reduce_tagged(&mut v, &mut tag);
        match v.lowest_one() {
            None => Err(tag),
            Some(p) => {
                self.pivot_row[p] = Some(self.vectors.len());
                self.vectors.push(v);
                self.tags.push(tag);
                Ok(p)
            }
        }
    }

    /// Tag combination of inserted vectors summing to `b`, if any.
    pub fn solve(&self, b: &BitVec) -> Option<BitVec> {
        let mut r = b.clone();
        let mut tag = BitVec::zeros(self.tag_dim);
        self.reduce_tagged(&mut r, &mut tag);
        r.is_zero().then_some(tag)
    }
}

use std::fmt;

/// Dense packed vector over GF(2), 64 coordinates per word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVec {
    words: Vec<u64>,
    len: usize,
}

impl BitVec {
    pub fn zeros(len: usize) -> BitVec {
        BitVec { words: vec![0; len.div_ceil(64)], len }
    }

    pub fn unit(len: usize, i: usize) -> BitVec {
        let mut v = BitVec::zeros(len);
        v.set(i);
        v
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> BitVec {
        let mut v = BitVec::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range ({})", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range ({})", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range ({})", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// XOR restricted to words from `start_word` on.
    pub(crate) fn xor_assign_from(&mut self, other: &BitVec, start_word: usize) {
        for (a, b) in self.words[start_word..].iter_mut().zip(&other.words[start_word..]) {
            *a ^= b;
        }
    }

    /// Lowest set coordinate.
    pub fn lowest_one(&self) -> Option<usize> {
        self.lowest_one_from(0)
    }

    pub(crate) fn lowest_one_from(&self, start_word: usize) -> Option<usize> {
        self.words[start_word..]
            .iter()
            .position(|&w| w != 0)
            .map(|k| (start_word + k) * 64 + self.words[start_word + k].trailing_zeros() as usize)
    }

    /// First set coordinate at or after `from`.
    pub fn next_one(&self, from: usize) -> Option<usize> {
        if from >= self.len {
            return None;
        }
        let k = from / 64;
        let head = self.words[k] & (!0u64 << (from % 64));
        if head != 0 {
            return Some(k * 64 + head.trailing_zeros() as usize);
        }
        self.lowest_one_from(k + 1)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut word = w;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(k * 64 + bit)
            })
        })
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones()).sum::<u32>() % 2 == 1
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({}, {:?})", self.len, self.ones().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut v = BitVec::zeros(130);
        assert!(v.is_zero());
        v.set(3);
        v.set(64);
        v.set(129);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![3, 64, 129]);
        assert_eq!(v.lowest_one(), Some(3));
        assert_eq!(v.lowest_one_from(1), Some(64));
        assert_eq!(v.next_one(4), Some(64));
        assert_eq!(v.next_one(65), Some(129));
        assert_eq!(v.next_one(130), None);
        v.flip(3);
        assert_eq!(v.lowest_one(), Some(64));
        let w = BitVec::from_ones(130, [64, 100]);
        v.xor_assign(&w);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![100, 129]);
        assert!(v.dot(&BitVec::unit(130, 100)));
        assert_eq!(v.count_ones(), 2);
    }
}

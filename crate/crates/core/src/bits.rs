//! Fixed-length bit vectors indexed by field-element encoding.

use std::fmt;

/// Masks selecting the lower half of every `2^(k+1)`-bit block of a word.
const HALF_MASKS: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitSet {
    len: usize,
    words: Vec<u64>,
}

impl fmt::Debug for BitSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter_ones()).finish()
    }
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        Self { len, words: vec![0; len.div_ceil(64).max(1)] }
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut s = Self::new(len);
        for i in 0..len {
            if f(i) {
                s.insert(i);
            }
        }
        s
    }

    /// Wrap raw words. Bits at or above `len` must be clear.
    pub fn from_words(len: usize, words: Vec<u64>) -> Self {
        let s = Self { len, words };
        debug_assert_eq!(s.words.len(), len.div_ceil(64).max(1));
        debug_assert!(s.iter_ones().all(|i| i < len));
        s
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

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range");
        self.words[i >> 6] |= 1 << (i & 63);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i >> 6] &= !(1 << (i & 63));
    }

    pub fn count_ones(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    /// `|self ∩ other|`.
    pub fn and_count(&self, other: &[u64]) -> u64 {
        self.words.iter().zip(other).map(|(a, b)| (a & b).count_ones() as u64).sum()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                (w != 0).then(|| {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    wi * 64 + b
                })
            })
        })
    }

    /// Complement within `0..len`.
    pub fn complement(&self) -> Self {
        let mut out = Self { len: self.len, words: self.words.iter().map(|w| !w).collect() };
        let tail = self.len % 64;
        if tail != 0 || self.len == 0 {
            let last = out.words.len() - 1;
            out.words[last] &= (1u64 << tail) - 1;
        }
        out
    }

    /// The translate `{ i ^ x : i in self }`. Requires `len` a power of two and `x < len`.
    pub fn xor_translate(&self, x: usize) -> Self {
        debug_assert!(self.len.is_power_of_two() && x < self.len);
        let hi = x >> 6;
        let lo = (x & 63) as u32;
        let mut words = vec![0u64; self.words.len()];
        for (wi, &w) in self.words.iter().enumerate() {
            words[wi ^ hi] = xor_permute_word(w, lo);
        }
        Self { len: self.len, words }
    }
}

/// Move bit `i` of `w` to bit `i ^ lo`.
#[inline]
pub fn xor_permute_word(mut w: u64, lo: u32) -> u64 {
    for (k, &mask) in HALF_MASKS.iter().enumerate() {
        if lo >> k & 1 == 1 {
            let s = 1 << k;
            w = ((w & mask) << s) | ((w >> s) & mask);
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn translate_matches_pointwise() {
        for len in [2usize, 8, 32, 64, 256, 1024] {
            let s = BitSet::from_fn(len, |i| (i * 7 + i / 3) % 5 < 2);
            for x in (0..len).step_by(3) {
                let t = s.xor_translate(x);
                for i in 0..len {
                    assert_eq!(t.contains(i ^ x), s.contains(i));
                }
            }
        }
    }

    #[test]
    fn complement_and_counts() {
        let s = BitSet::from_fn(16, |i| i % 3 == 0);
        assert_eq!(s.count_ones(), 6);
        let c = s.complement();
        assert_eq!(c.count_ones(), 10);
        assert_eq!(s.and_count(c.words()), 0);
        assert_eq!(s.iter_ones().collect::<Vec<_>>(), vec![0, 3, 6, 9, 12, 15]);
    }
}

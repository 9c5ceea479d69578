//! Hash sets of fixed-length residue vectors.
//!
//! Vectors whose entries fit in `bits` bits each and whose total width is at
//! most 128 bits are packed into a `u128`; anything wider is stored boxed.

use rustc_hash::FxHashSet;

#[derive(Debug, Clone)]
pub(crate) enum KeySet {
    Packed { bits: u32, set: FxHashSet<u128> },
    Wide(FxHashSet<Box<[u32]>>),
}

impl KeySet {
    /// A set for vectors of `len` entries, each below `radix`.
    pub fn new(radix: u32, len: usize) -> Self {
        let bits = 32 - radix.saturating_sub(1).leading_zeros();
        let bits = bits.max(1);
        if bits as usize * len <= 128 {
            KeySet::Packed {
                bits,
                set: FxHashSet::default(),
            }
        } else {
            KeySet::Wide(FxHashSet::default())
        }
    }

    pub fn with_capacity(radix: u32, len: usize, cap: usize) -> Self {
        let mut s = Self::new(radix, len);
        match &mut s {
            KeySet::Packed { set, .. } => set.reserve(cap),
            KeySet::Wide(set) => set.reserve(cap),
        }
        s
    }

    #[inline]
    fn pack(bits: u32, v: &[u32]) -> u128 {
        v.iter().fold(0u128, |acc, &e| (acc << bits) | e as u128)
    }

    pub fn insert(&mut self, v: &[u32]) -> bool {
        match self {
            KeySet::Packed { bits, set } => set.insert(Self::pack(*bits, v)),
            KeySet::Wide(set) => set.insert(v.into()),
        }
    }

    #[inline]
    pub fn contains(&self, v: &[u32]) -> bool {
        match self {
            KeySet::Packed { bits, set } => set.contains(&Self::pack(*bits, v)),
            KeySet::Wide(set) => set.contains(v),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            KeySet::Packed { set, .. } => set.len(),
            KeySet::Wide(set) => set.len(),
        }
    }

    pub fn clear(&mut self) {
        match self {
            KeySet::Packed { set, .. } => set.clear(),
            KeySet::Wide(set) => set.clear(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packed_and_wide_agree() {
        let mut narrow = KeySet::new(9, 4);
        let mut wide = KeySet::new(9, 40);
        assert!(matches!(narrow, KeySet::Packed { bits: 4, .. }));
        assert!(matches!(wide, KeySet::Wide(_)));
        assert!(narrow.insert(&[1, 2, 3, 8]));
        assert!(!narrow.insert(&[1, 2, 3, 8]));
        assert!(narrow.contains(&[1, 2, 3, 8]));
        assert!(!narrow.contains(&[1, 2, 8, 3]));
        let long: Vec<u32> = (0..40).map(|i| i % 9).collect();
        assert!(wide.insert(&long));
        assert!(wide.contains(&long));
        assert_eq!(wide.len(), 1);
    }
}

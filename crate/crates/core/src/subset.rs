//! Subsets of a ground set `{1, ..., n}` as fixed-width bitmasks.
//!
//! Elements are labeled from 1 externally; bit `i` of the mask stands for
//! element `i + 1`. The canonical order on subsets is lexicographic by the
//! sorted element list, which is what every family in this crate is sorted by.

use std::fmt;
use std::ops::{BitAnd, BitOr, BitXor};

/// A subset of `{1, ..., n}` for some ambient ground-set size `n <= 32`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct Subset(u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_mask(mask: u32) -> Self {
        Subset(mask)
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    /// The full ground set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= 32, "ground set too large for bitmask encoding");
        if n == 32 {
            Subset(u32::MAX)
        } else {
            Subset((1u32 << n) - 1)
        }
    }

    /// Singleton `{e}` with a 1-based element label.
    pub fn singleton(e: usize) -> Self {
        assert!((1..=32).contains(&e), "element label out of range: {e}");
        Subset(1u32 << (e - 1))
    }

    /// Build a subset from 1-based element labels.
    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        let mut s = Subset::EMPTY;
        for e in elements {
            s = s.with(e);
        }
        s
    }

    pub fn contains(self, e: usize) -> bool {
        e >= 1 && e <= 32 && self.0 & (1u32 << (e - 1)) != 0
    }

    pub fn with(self, e: usize) -> Self {
        self | Subset::singleton(e)
    }

    pub fn without(self, e: usize) -> Self {
        Subset(self.0 & !Subset::singleton(e).0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    /// Size of the symmetric difference with `other`.
    pub fn symmetric_difference_len(self, other: Subset) -> usize {
        (self.0 ^ other.0).count_ones() as usize
    }

    /// 1-based element labels in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut mask = self.0;
        std::iter::from_fn(move || {
            if mask == 0 {
                None
            } else {
                let e = mask.trailing_zeros() as usize + 1;
                mask &= mask - 1;
                Some(e)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// All subsets of `self`, in carry-rippler order (empty set first).
    pub fn subsets(self) -> impl Iterator<Item = Subset> {
        let set = self.0;
        let mut sub = 0u32;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = Subset(sub);
            sub = sub.wrapping_sub(set) & set;
            done = sub == 0;
            Some(out)
        })
    }

    /// All `k`-element subsets of `self`, in canonical order.
    pub fn subsets_of_size(self, k: usize) -> Vec<Subset> {
        let elements = self.to_vec();
        if k > elements.len() {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut chosen = Vec::with_capacity(k);
        fn rec(elements: &[usize], start: usize, k: usize, chosen: &mut Vec<usize>, out: &mut Vec<Subset>) {
            if chosen.len() == k {
                out.push(Subset::from_elements(chosen.iter().copied()));
                return;
            }
            let need = k - chosen.len();
            for i in start..=elements.len().saturating_sub(need) {
                chosen.push(elements[i]);
                rec(elements, i + 1, k, chosen, out);
                chosen.pop();
            }
        }
        rec(&elements, 0, k, &mut chosen, &mut out);
        out
    }
}

impl BitOr for Subset {
    type Output = Subset;
    fn bitor(self, rhs: Subset) -> Subset {
        Subset(self.0 | rhs.0)
    }
}

impl BitAnd for Subset {
    type Output = Subset;
    fn bitand(self, rhs: Subset) -> Subset {
        Subset(self.0 & rhs.0)
    }
}

impl BitXor for Subset {
    type Output = Subset;
    fn bitxor(self, rhs: Subset) -> Subset {
        Subset(self.0 ^ rhs.0)
    }
}

impl Subset {
    /// Set difference `self \ other`.
    pub fn minus(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement within the full ground set `{1, ..., n}`.
    pub fn complement(self, n: usize) -> Subset {
        Subset::full(n).minus(self)
    }
}

// Lexicographic by sorted element list: {1,4} < {2,3}. This differs from the
// numeric order of the masks, so it is spelled out here.
impl Ord for Subset {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let mut a = self.0;
        let mut b = other.0;
        loop {
            match (a == 0, b == 0) {
                (true, true) => return std::cmp::Ordering::Equal,
                (true, false) => return std::cmp::Ordering::Less,
                (false, true) => return std::cmp::Ordering::Greater,
                (false, false) => {
                    let ea = a.trailing_zeros();
                    let eb = b.trailing_zeros();
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                    a &= a - 1;
                    b &= b - 1;
                }
            }
        }
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All `k`-element subsets of `{1, ..., n}`, in canonical order.
pub fn all_k_subsets(n: usize, k: usize) -> Vec<Subset> {
    Subset::full(n).subsets_of_size(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_order_is_lex_by_element_list() {
        let a = Subset::from_elements([1, 4]);
        let b = Subset::from_elements([2, 3]);
        assert!(a < b);
        let mut v = vec![b, a, Subset::from_elements([1, 2])];
        v.sort();
        assert_eq!(v[0].to_vec(), vec![1, 2]);
        assert_eq!(v[1].to_vec(), vec![1, 4]);
        assert_eq!(v[2].to_vec(), vec![2, 3]);
    }

    #[test]
    fn subsets_of_size_counts() {
        assert_eq!(all_k_subsets(4, 2).len(), 6);
        assert_eq!(all_k_subsets(7, 3).len(), 35);
        assert_eq!(all_k_subsets(3, 0), vec![Subset::EMPTY]);
    }

    #[test]
    fn subset_iteration_roundtrip() {
        let s = Subset::from_elements([2, 5, 7]);
        assert_eq!(s.to_vec(), vec![2, 5, 7]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.subsets().count(), 8);
        assert_eq!(format!("{s}"), "{2,5,7}");
    }

    #[test]
    fn symmetric_difference() {
        let a = Subset::from_elements([1, 2]);
        let b = Subset::from_elements([1, 3]);
        assert_eq!(a.symmetric_difference_len(b), 2);
        assert_eq!(a.symmetric_difference_len(a), 0);
    }
}

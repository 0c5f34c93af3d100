//! Matroids represented by explicit, validated base families.
//!
//! Construction goes through [`Matroid::from_bases`], which checks the basis
//! exchange axiom exhaustively over all ordered pairs of bases. Every derived
//! operation (rank, closure, restriction, relaxation, direct sum, connected
//! components) works off that materialized family, so everything stays an
//! exact finite computation.

use std::collections::HashSet;

use thiserror::Error;

use crate::guard;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("base family is empty")]
    EmptyFamily,
    #[error("bases of mixed cardinality: expected {expected}, found {found}")]
    MixedCardinality { expected: usize, found: usize },
    #[error("element {element} out of range 1..={n}")]
    ElementOutOfRange { element: usize, n: usize },
    #[error("exchange axiom fails: removing {removed} from {from} cannot be repaired from {toward}")]
    ExchangeAxiomViolation {
        from: Subset,
        toward: Subset,
        removed: usize,
    },
    #[error("{set} is not both a circuit and a hyperplane")]
    NotCircuitHyperplane { set: Subset },
    #[error("ground set of size {n} exceeds the desk-scale cap {limit} (override with {})", guard::MAX_ELEMENTS_ENV)]
    GuardExceeded { n: usize, limit: usize },
}

/// A matroid on ground set `{1, ..., n}` given by its full base family.
#[derive(Clone, PartialEq, Eq)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Subset>,
    base_set: HashSet<Subset>,
}

impl Matroid {
    /// Validate a candidate base family and build the matroid.
    ///
    /// Duplicates are collapsed; the family is stored in canonical order
    /// (lexicographic by sorted element list). Validation is the exhaustive
    /// exchange check: for every ordered pair of bases and every element of
    /// the first not in the second, some repair element must exist.
    pub fn from_bases<I>(n: usize, candidate_bases: I) -> Result<Matroid, MatroidError>
    where
        I: IntoIterator<Item = Subset>,
    {
        let limit = guard::max_elements();
        if n > limit {
            return Err(MatroidError::GuardExceeded { n, limit });
        }
        let full = Subset::full(n);
        let mut bases: Vec<Subset> = candidate_bases.into_iter().collect();
        if bases.is_empty() {
            return Err(MatroidError::EmptyFamily);
        }
        let rank = bases[0].len();
        for b in &bases {
            if b.len() != rank {
                return Err(MatroidError::MixedCardinality {
                    expected: rank,
                    found: b.len(),
                });
            }
            if !b.is_subset_of(full) {
                let element = b.minus(full).elements().next().unwrap();
                return Err(MatroidError::ElementOutOfRange { element, n });
            }
        }
        bases.sort();
        bases.dedup();
        let base_set: HashSet<Subset> = bases.iter().copied().collect();
        if let Some(w) = exchange_violation(&bases, &base_set) {
            return Err(w);
        }
        Ok(Matroid {
            n,
            rank,
            bases,
            base_set,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Base family in canonical order.
    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn num_bases(&self) -> usize {
        self.bases.len()
    }

    pub fn is_base(&self, b: Subset) -> bool {
        self.base_set.contains(&b)
    }

    pub fn ground_set(&self) -> Subset {
        Subset::full(self.n)
    }

    /// A set is independent exactly when some base contains it.
    pub fn is_independent(&self, x: Subset) -> bool {
        debug_assert!(x.is_subset_of(self.ground_set()));
        if x.len() > self.rank {
            return false;
        }
        self.bases.iter().any(|b| x.is_subset_of(*b))
    }

    /// Rank of a subset: size of its largest independent subset, grown
    /// greedily over the independence oracle.
    pub fn rank_of(&self, x: Subset) -> usize {
        debug_assert!(x.is_subset_of(self.ground_set()));
        let mut acc = Subset::EMPTY;
        for e in x.elements() {
            if self.is_independent(acc.with(e)) {
                acc = acc.with(e);
            }
        }
        acc.len()
    }

    /// Closure: `x` together with every element that does not raise its rank.
    pub fn closure(&self, x: Subset) -> Subset {
        let rx = self.rank_of(x);
        let mut out = x;
        for e in self.ground_set().minus(x).elements() {
            if self.rank_of(x.with(e)) == rx {
                out = out.with(e);
            }
        }
        out
    }

    /// Minimal dependent set check.
    pub fn is_circuit(&self, x: Subset) -> bool {
        !self.is_independent(x) && x.elements().all(|e| self.is_independent(x.without(e)))
    }

    /// Both a circuit and a flat of rank one below the matroid rank.
    pub fn is_circuit_hyperplane(&self, x: Subset) -> bool {
        self.is_circuit(x) && self.rank_of(x) + 1 == self.rank && self.closure(x) == x
    }

    /// Relaxation: adjoin a circuit-hyperplane to the base family.
    pub fn relax(&self, x: Subset) -> Result<Matroid, MatroidError> {
        if !self.is_circuit_hyperplane(x) {
            return Err(MatroidError::NotCircuitHyperplane { set: x });
        }
        Matroid::from_bases(self.n, self.bases.iter().copied().chain([x]))
    }

    /// Restriction to `a`, relabeled onto `{1, ..., |a|}`.
    pub fn restriction(&self, a: Subset) -> Restriction {
        debug_assert!(a.is_subset_of(self.ground_set()));
        let to_original: Vec<usize> = a.elements().collect();
        let sub_rank = self.rank_of(a);
        let relabel = |s: Subset| {
            Subset::from_elements(
                to_original
                    .iter()
                    .enumerate()
                    .filter(|(_, &old)| s.contains(old))
                    .map(|(i, _)| i + 1),
            )
        };
        let bases: Vec<Subset> = a
            .subsets_of_size(sub_rank)
            .into_iter()
            .filter(|s| self.is_independent(*s))
            .map(relabel)
            .collect();
        let matroid = Matroid::from_bases(to_original.len(), bases)
            .expect("restriction of a matroid is a matroid");
        Restriction {
            matroid,
            to_original,
        }
    }

    /// All circuits, in canonical order. Circuits have at most `rank + 1`
    /// elements, so enumeration stops there.
    pub fn circuits(&self) -> Vec<Subset> {
        let mut out = Vec::new();
        for size in 1..=(self.rank + 1).min(self.n) {
            for s in self.ground_set().subsets_of_size(size) {
                if self.is_circuit(s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// Finest partition of the ground set into connected components:
    /// two elements share a block exactly when some circuit contains both.
    /// Cross-checked against rank additivity over the blocks.
    pub fn connected_components(&self) -> Vec<Subset> {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(parent: &mut Vec<usize>, mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for c in self.circuits() {
            let elems = c.to_vec();
            for w in elems.windows(2) {
                let (a, b) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                parent[a] = b;
            }
        }
        let mut blocks: Vec<Subset> = Vec::new();
        let mut roots: Vec<Option<usize>> = vec![None; self.n];
        for e in 0..self.n {
            let r = find(&mut parent, e);
            match roots[r] {
                Some(idx) => blocks[idx] = blocks[idx].with(e + 1),
                None => {
                    roots[r] = Some(blocks.len());
                    blocks.push(Subset::singleton(e + 1));
                }
            }
        }
        blocks.sort();
        let rank_sum: usize = blocks.iter().map(|b| self.rank_of(*b)).sum();
        assert_eq!(
            rank_sum, self.rank,
            "component ranks must add up to the matroid rank"
        );
        blocks
    }

    /// Direct sum: `other`'s elements are shifted past `self`'s ground set,
    /// bases are all unions of a base from each summand.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid, MatroidError> {
        let n = self.n + other.n;
        let shift = |s: Subset| Subset::from_elements(s.elements().map(|e| e + self.n));
        let bases = self
            .bases
            .iter()
            .flat_map(|b1| other.bases.iter().map(move |b2| *b1 | shift(*b2)));
        Matroid::from_bases(n, bases)
    }
}

impl std::fmt::Debug for Matroid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Matroid(n={}, rank={}, {} bases)",
            self.n,
            self.rank,
            self.bases.len()
        )
    }
}

/// A restriction, carrying the map from new labels back to the original ones.
pub struct Restriction {
    pub matroid: Matroid,
    /// `to_original[i]` is the original label of new element `i + 1`.
    pub to_original: Vec<usize>,
}

fn exchange_violation(bases: &[Subset], base_set: &HashSet<Subset>) -> Option<MatroidError> {
    for b1 in bases {
        for b2 in bases {
            if b1 == b2 {
                continue;
            }
            for e in b1.minus(*b2).elements() {
                let stripped = b1.without(e);
                let repaired = b2
                    .minus(*b1)
                    .elements()
                    .any(|f| base_set.contains(&stripped.with(f)));
                if !repaired {
                    return Some(MatroidError::ExchangeAxiomViolation {
                        from: *b1,
                        toward: *b2,
                        removed: e,
                    });
                }
            }
        }
    }
    None
}

/// Report every exchange-axiom violation in a family, not just the first.
/// Useful when matching a rejection against an expected witness.
pub fn exchange_violations(bases: &[Subset]) -> Vec<(Subset, Subset, usize)> {
    let base_set: HashSet<Subset> = bases.iter().copied().collect();
    let mut out = Vec::new();
    for b1 in bases {
        for b2 in bases {
            if b1 == b2 {
                continue;
            }
            for e in b1.minus(*b2).elements() {
                let stripped = b1.without(e);
                let repaired = b2
                    .minus(*b1)
                    .elements()
                    .any(|f| base_set.contains(&stripped.with(f)));
                if !repaired {
                    out.push((*b1, *b2, e));
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(family: &[&[usize]]) -> Vec<Subset> {
        family
            .iter()
            .map(|b| Subset::from_elements(b.iter().copied()))
            .collect()
    }

    fn m_star() -> Matroid {
        Matroid::from_bases(4, sets(&[&[1, 2], &[1, 3], &[2, 3], &[2, 4], &[3, 4]])).unwrap()
    }

    fn u42() -> Matroid {
        Matroid::from_bases(4, Subset::full(4).subsets_of_size(2)).unwrap()
    }

    #[test]
    fn accepts_known_families() {
        let m = m_star();
        assert_eq!((m.n(), m.rank(), m.num_bases()), (4, 2, 5));
        let single = Matroid::from_bases(3, sets(&[&[1, 2]])).unwrap();
        assert_eq!(single.num_bases(), 1);
    }

    #[test]
    fn rejects_exchange_violation_with_witness() {
        let err = Matroid::from_bases(4, sets(&[&[1, 2], &[3, 4]])).unwrap_err();
        match err {
            MatroidError::ExchangeAxiomViolation { from, toward, removed } => {
                let pair = [from, toward];
                assert!(pair.contains(&Subset::from_elements([1, 2])));
                assert!(pair.contains(&Subset::from_elements([3, 4])));
                // Removing 1 from {1,2} can be repaired by neither 3 nor 4.
                if from == Subset::from_elements([1, 2]) {
                    assert_eq!(removed, 1);
                }
            }
            e => panic!("unexpected error {e:?}"),
        }
    }

    #[test]
    fn rejects_malformed_families() {
        assert_eq!(
            Matroid::from_bases(3, Vec::new()).unwrap_err(),
            MatroidError::EmptyFamily
        );
        assert!(matches!(
            Matroid::from_bases(3, sets(&[&[1, 2], &[3]])).unwrap_err(),
            MatroidError::MixedCardinality { expected: 2, found: 1 }
        ));
        assert!(matches!(
            Matroid::from_bases(3, sets(&[&[1, 4]])).unwrap_err(),
            MatroidError::ElementOutOfRange { element: 4, n: 3 }
        ));
    }

    #[test]
    fn independence_and_rank() {
        let m = u42();
        assert!(m.is_independent(Subset::singleton(1)));
        assert_eq!(m.rank_of(Subset::from_elements([1, 2])), 2);
        assert_eq!(m.rank_of(Subset::EMPTY), 0);

        let ms = m_star();
        assert!(!ms.is_independent(Subset::from_elements([1, 4])));
    }

    #[test]
    fn closure_examples() {
        let m = u42();
        assert_eq!(m.closure(Subset::singleton(1)), Subset::singleton(1));
        let x = Subset::from_elements([1, 2]);
        assert_eq!(m.closure(m.closure(x)), m.closure(x));
    }

    #[test]
    fn circuit_hyperplane_and_relax() {
        let m = u42();
        // {1,2,3} is a circuit of U_{4,2} but has full rank, hence no hyperplane.
        let c = Subset::from_elements([1, 2, 3]);
        assert!(m.is_circuit(c));
        assert!(!m.is_circuit_hyperplane(c));
        // A base is independent, hence not a circuit.
        assert!(!m.is_circuit_hyperplane(m.bases()[0]));
        assert!(matches!(
            m.relax(m.bases()[0]).unwrap_err(),
            MatroidError::NotCircuitHyperplane { .. }
        ));
    }

    #[test]
    fn restriction_examples() {
        let u63 = Matroid::from_bases(6, Subset::full(6).subsets_of_size(3)).unwrap();
        let r = u63.restriction(Subset::from_elements([1, 2]));
        assert_eq!((r.matroid.n(), r.matroid.rank(), r.matroid.num_bases()), (2, 2, 1));
        assert_eq!(r.to_original, vec![1, 2]);

        let m = m_star();
        let full = m.restriction(m.ground_set());
        assert_eq!(full.matroid.bases(), m.bases());

        let empty = m.restriction(Subset::EMPTY);
        assert_eq!(empty.matroid.rank(), 0);
        assert_eq!(empty.matroid.bases(), &[Subset::EMPTY]);
    }

    #[test]
    fn components_and_direct_sum() {
        let u42 = u42();
        assert_eq!(u42.connected_components(), vec![Subset::full(4)]);

        let u21 = Matroid::from_bases(2, sets(&[&[1], &[2]])).unwrap();
        let sum = u21.direct_sum(&u21).unwrap();
        assert_eq!((sum.n(), sum.rank(), sum.num_bases()), (4, 2, 4));
        assert_eq!(
            sum.bases().to_vec(),
            sets(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        assert_eq!(
            sum.connected_components(),
            vec![Subset::from_elements([1, 2]), Subset::from_elements([3, 4])]
        );

        let u31 = Matroid::from_bases(3, sets(&[&[1], &[2], &[3]])).unwrap();
        let u32m = Matroid::from_bases(3, Subset::full(3).subsets_of_size(2)).unwrap();
        assert_eq!(u31.direct_sum(&u32m).unwrap().num_bases(), 9);
    }

    #[test]
    fn guard_refuses_oversized_ground_sets() {
        let err = Matroid::from_bases(21, sets(&[&[1]])).unwrap_err();
        assert!(matches!(err, MatroidError::GuardExceeded { n: 21, .. }));
    }
}

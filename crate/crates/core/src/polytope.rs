//! The geometric layer of the base polytope: incidence-vector vertices,
//! exact affine dimension, indicator splitting hyperplanes, and the
//! combinatorial facet test that certifies a hyperplane split without ever
//! computing a convex hull.
//!
//! All arithmetic is exact; vertices are 0/1 integer vectors and ranks are
//! computed by rational elimination.

use num::{BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::graph::{BaseGraph, GraphError};
use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolytopeError {
    #[error("degenerate partition data: need a nonempty proper subset and 0 < a < r (got |E1|={e1_len}, r1={r1}, a1={a1})")]
    DegeneratePartition { e1_len: usize, r1: usize, a1: usize },
    #[error("the two families do not cover the base family")]
    CoverViolation,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// 0/1 vertex of the base polytope; the support is a base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceVector(pub Vec<u8>);

impl IncidenceVector {
    pub fn of_base(base: Subset, n: usize) -> Self {
        IncidenceVector((1..=n).map(|e| u8::from(base.contains(e))).collect())
    }
}

/// One incidence vector per base, in canonical base order.
pub fn vertices(m: &Matroid) -> Vec<IncidenceVector> {
    m.bases()
        .iter()
        .map(|b| IncidenceVector::of_base(*b, m.n()))
        .collect()
}

/// Rank of the span of integer vectors, by exact rational Gauss-Jordan
/// elimination: each stored pivot row is normalized to 1 at its pivot column
/// and zeroed at every other pivot column, so a dependent incoming row always
/// reduces to zero.
fn rational_rank(rows: Vec<Vec<i64>>) -> usize {
    let mut pivots: Vec<(usize, Vec<BigRational>)> = Vec::new();
    for row in rows {
        let mut v: Vec<BigRational> = row
            .into_iter()
            .map(|x| BigRational::from_integer(x.into()))
            .collect();
        for (col, pivot_row) in &pivots {
            if !v[*col].is_zero() {
                let factor = v[*col].clone();
                for (a, b) in v.iter_mut().zip(pivot_row) {
                    *a -= &factor * b;
                }
            }
        }
        if let Some(col) = v.iter().position(|c| !c.is_zero()) {
            let lead = v[col].clone();
            for a in v.iter_mut() {
                *a /= &lead;
            }
            for (_, pivot_row) in pivots.iter_mut() {
                if !pivot_row[col].is_zero() {
                    let factor = pivot_row[col].clone();
                    for (a, b) in pivot_row.iter_mut().zip(&v) {
                        *a -= &factor * b;
                    }
                }
            }
            pivots.push((col, v));
        }
    }
    pivots.len()
}

/// Affine dimension of the base polytope: the rank of the differences of the
/// vertex vectors against the first one.
pub fn dimension(m: &Matroid) -> usize {
    let verts = vertices(m);
    let first = &verts[0];
    let rows: Vec<Vec<i64>> = verts[1..]
        .iter()
        .map(|v| {
            v.0.iter()
                .zip(&first.0)
                .map(|(a, b)| i64::from(*a) - i64::from(*b))
                .collect()
        })
        .collect();
    rational_rank(rows)
}

/// An integer hyperplane `<coefficients, x> = level`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplitHyperplane {
    pub coefficients: Vec<i64>,
    pub level: i64,
}

impl SplitHyperplane {
    pub fn evaluate(&self, base: Subset) -> i64 {
        base.elements().map(|e| self.coefficients[e - 1]).sum()
    }

    /// The sign-flipped hyperplane, describing the same set with the
    /// inequality directions swapped.
    pub fn negated(&self) -> SplitHyperplane {
        SplitHyperplane {
            coefficients: self.coefficients.iter().map(|c| -c).collect(),
            level: -self.level,
        }
    }

    /// Indicator hyperplane `sum over s of x_e = level`.
    pub fn indicator(s: Subset, level: i64, n: usize) -> SplitHyperplane {
        SplitHyperplane {
            coefficients: (1..=n).map(|e| i64::from(s.contains(e))).collect(),
            level,
        }
    }
}

/// The splitting hyperplane attached to a good partition: the indicator of
/// `e1` at level `r1 - a1`. Every base evaluates to its intersection size
/// with `e1` under it.
pub fn split_hyperplane(
    e1: Subset,
    r1: usize,
    a1: usize,
    n: usize,
) -> Result<SplitHyperplane, PolytopeError> {
    if e1.is_empty() || e1 == Subset::full(n) || a1 == 0 || a1 >= r1 {
        return Err(PolytopeError::DegeneratePartition {
            e1_len: e1.len(),
            r1,
            a1,
        });
    }
    Ok(SplitHyperplane::indicator(e1, (r1 - a1) as i64, n))
}

/// Outcome of the combinatorial facet test for a candidate split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FacetCheck {
    /// Every base of the first family evaluates at most to the level, every
    /// base of the second at least, with equality exactly on the overlap.
    pub sides_consistent: bool,
    /// Both strict sides are populated, so the hyperplane does not support
    /// the polytope.
    pub strict_sides_nonempty: bool,
    /// No base-graph edge joins the two strict sides.
    pub edges_stay_within_parts: bool,
    /// An edge violating the previous check, when one exists.
    pub crossing_edge: Option<(Subset, Subset)>,
    /// The overlap spans an affine subspace of dimension exactly one below
    /// the polytope dimension.
    pub intersection_spans_facet: bool,
    pub intersection_dimension: usize,
    pub polytope_dimension: usize,
}

impl FacetCheck {
    pub fn ok(&self) -> bool {
        self.sides_consistent
            && self.strict_sides_nonempty
            && self.edges_stay_within_parts
            && self.intersection_spans_facet
    }
}

/// Check that `h` realizes `part1`/`part2` as a facet-sharing decomposition:
/// side consistency with equality exactly on the overlap, nonempty strict
/// sides, the edge criterion, and the affine rank of the overlap.
pub fn facet_check(
    m: &Matroid,
    part1: &[Subset],
    part2: &[Subset],
    h: &SplitHyperplane,
) -> Result<FacetCheck, PolytopeError> {
    let mut union: Vec<Subset> = part1.iter().chain(part2).copied().collect();
    union.sort();
    union.dedup();
    if union != m.bases() {
        return Err(PolytopeError::CoverViolation);
    }
    let in1: std::collections::HashSet<Subset> = part1.iter().copied().collect();
    let in2: std::collections::HashSet<Subset> = part2.iter().copied().collect();
    let intersection: Vec<Subset> = part1.iter().filter(|b| in2.contains(b)).copied().collect();

    let level = h.level;
    let mut sides_consistent = true;
    let mut strict_low = 0usize;
    let mut strict_high = 0usize;
    for b in m.bases() {
        let value = h.evaluate(*b);
        let overlap = in1.contains(b) && in2.contains(b);
        if overlap {
            sides_consistent &= value == level;
        } else if in1.contains(b) {
            sides_consistent &= value < level;
            strict_low += 1;
        } else {
            sides_consistent &= value > level;
            strict_high += 1;
        }
    }
    let strict_sides_nonempty = strict_low > 0 && strict_high > 0;

    let graph = BaseGraph::build(m)?;
    let mut crossing_edge = None;
    for (i, j) in graph.edges() {
        let (a, b) = (graph.bases()[i], graph.bases()[j]);
        let within = (in1.contains(&a) && in1.contains(&b)) || (in2.contains(&a) && in2.contains(&b));
        if !within {
            crossing_edge = Some((a, b));
            break;
        }
    }
    let edges_stay_within_parts = crossing_edge.is_none();

    let polytope_dimension = dimension(m);
    let intersection_dimension = if intersection.is_empty() {
        0
    } else {
        let n = m.n();
        let first = IncidenceVector::of_base(intersection[0], n);
        let rows: Vec<Vec<i64>> = intersection[1..]
            .iter()
            .map(|b| {
                let v = IncidenceVector::of_base(*b, n);
                v.0.iter()
                    .zip(&first.0)
                    .map(|(a, b)| i64::from(*a) - i64::from(*b))
                    .collect()
            })
            .collect();
        rational_rank(rows)
    };
    let intersection_spans_facet =
        !intersection.is_empty() && intersection_dimension + 1 == polytope_dimension;

    Ok(FacetCheck {
        sides_consistent,
        strict_sides_nonempty,
        edges_stay_within_parts,
        crossing_edge,
        intersection_spans_facet,
        intersection_dimension,
        polytope_dimension,
    })
}

/// Exact rational helpers shared with the separating-hyperplane search.
pub(crate) fn scale_to_integer_hyperplane(solution: &[BigRational]) -> SplitHyperplane {
    let mut lcm = num::BigInt::one();
    for value in solution {
        lcm = num::integer::lcm(lcm, value.denom().clone());
    }
    let scaled: Vec<num::BigInt> = solution
        .iter()
        .map(|v| (v * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut gcd = num::BigInt::zero();
    for v in &scaled {
        gcd = num::integer::gcd(gcd, v.abs());
    }
    if gcd.is_zero() {
        gcd = num::BigInt::one();
    }
    let ints: Vec<i64> = scaled
        .iter()
        .map(|v| {
            let reduced = v / &gcd;
            i64::try_from(&reduced).expect("hyperplane coefficients stay desk-scale")
        })
        .collect();
    let (level, coefficients) = ints.split_last().map(|(l, c)| (*l, c.to_vec())).unwrap();
    SplitHyperplane {
        coefficients,
        level,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn set(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    #[test]
    fn vertices_are_zero_one_with_rank_many_ones() {
        let m = zoo::catalog("m_star").unwrap();
        let verts = vertices(&m);
        assert_eq!(verts.len(), 5);
        for v in &verts {
            assert_eq!(v.0.iter().map(|x| *x as usize).sum::<usize>(), 2);
        }
        let u21 = zoo::uniform(2, 1).unwrap();
        assert_eq!(
            vertices(&u21),
            vec![IncidenceVector(vec![1, 0]), IncidenceVector(vec![0, 1])]
        );
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dimension(&zoo::uniform(4, 2).unwrap()), 3);
        let single = Matroid::from_bases(3, [set(&[1, 2])]).unwrap();
        assert_eq!(dimension(&single), 0);
        let u21 = zoo::uniform(2, 1).unwrap();
        let mut sum = u21.clone();
        for d in 2..=4 {
            sum = sum.direct_sum(&u21).unwrap();
            assert_eq!(dimension(&sum), d);
        }
    }

    #[test]
    fn split_hyperplane_is_intersection_count() {
        let h = split_hyperplane(set(&[1, 2]), 2, 1, 4).unwrap();
        assert_eq!(h.coefficients, vec![1, 1, 0, 0]);
        assert_eq!(h.level, 1);
        for b in zoo::uniform(4, 2).unwrap().bases() {
            assert_eq!(h.evaluate(*b), (*b & set(&[1, 2])).len() as i64);
        }

        let h2 = split_hyperplane(set(&[1, 2, 6]), 3, 2, 6).unwrap();
        assert_eq!(h2.coefficients, vec![1, 1, 0, 0, 0, 1]);
        assert_eq!(h2.level, 1);

        assert!(split_hyperplane(Subset::EMPTY, 2, 1, 4).is_err());
        assert!(split_hyperplane(set(&[1]), 1, 1, 4).is_err());
    }

    #[test]
    fn facet_check_accepts_the_u42_split() {
        let m = zoo::uniform(4, 2).unwrap();
        let part1: Vec<Subset> = m
            .bases()
            .iter()
            .filter(|b| (**b & set(&[1, 2])).len() <= 1)
            .copied()
            .collect();
        let part2: Vec<Subset> = m
            .bases()
            .iter()
            .filter(|b| (**b & set(&[3, 4])).len() <= 1)
            .copied()
            .collect();
        let h = split_hyperplane(set(&[1, 2]), 2, 1, 4).unwrap();
        let check = facet_check(&m, &part1, &part2, &h).unwrap();
        assert!(check.ok(), "{check:?}");
        assert_eq!(check.polytope_dimension, 3);
        assert_eq!(check.intersection_dimension, 2);
    }

    #[test]
    fn facet_check_rejects_crossing_edges() {
        let m = zoo::catalog("m_star").unwrap();
        let part1 = vec![set(&[1, 2]), set(&[2, 3]), set(&[2, 4])];
        let part2 = vec![set(&[1, 3]), set(&[2, 3]), set(&[3, 4])];
        // A hyperplane with the right sides exists; the edge criterion still fails.
        let h = SplitHyperplane {
            coefficients: vec![1, 0, 2, 1],
            level: 2,
        };
        let check = facet_check(&m, &part1, &part2, &h).unwrap();
        assert!(check.sides_consistent);
        assert!(!check.edges_stay_within_parts);
        assert!(check.crossing_edge.is_some());
        assert!(!check.ok());
    }

    #[test]
    fn facet_check_requires_cover() {
        let m = zoo::uniform(4, 2).unwrap();
        let h = split_hyperplane(set(&[1, 2]), 2, 1, 4).unwrap();
        let err = facet_check(&m, &[set(&[1, 2])], &[set(&[3, 4])], &h).unwrap_err();
        assert_eq!(err, PolytopeError::CoverViolation);
    }

    #[test]
    fn one_strict_side_empty_is_rejected() {
        let m = zoo::uniform(4, 2).unwrap();
        let all: Vec<Subset> = m.bases().to_vec();
        let sub: Vec<Subset> = m
            .bases()
            .iter()
            .filter(|b| (**b & set(&[1, 2])).len() <= 1)
            .copied()
            .collect();
        let h = split_hyperplane(set(&[1, 2]), 2, 1, 4).unwrap();
        let check = facet_check(&m, &all, &sub, &h);
        // Sides cannot be consistent: the full family contains bases above the level.
        assert!(check.is_err() || !check.unwrap().ok());
    }
}

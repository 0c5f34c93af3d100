//! Construction, search and verification of hyperplane splits of matroid
//! base polytopes, plus indecomposability certificates.
//!
//! A split candidate is a pair of base families obtained by thresholding the
//! intersection size with one side of a ground-set bipartition. Candidates
//! are admitted through progressively weaker routes (a strong independence
//! union condition, a weaker traced variant, or plain validation of the
//! resulting families) and every candidate is judged by the same verifier:
//! cover, nontriviality, matroidness of the three families, existence of a
//! separating hyperplane with equality exactly on the overlap, the edge
//! criterion, and the facet-dimension test.

use std::collections::{BTreeSet, HashSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::gf2::{self, Gf2Matrix};
use crate::graph::{self, BaseGraph, GraphError};
use crate::lp;
use crate::matroid::{Matroid, MatroidError};
use crate::polytope::{self, FacetCheck, PolytopeError, SplitHyperplane};
use crate::subset::Subset;
use crate::zoo::{self, LatticePathSpec, SetSystem, ZooError};

/// Which union condition admitted a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admission {
    /// Every capped independent set of one side joins every capped
    /// independent set of the other into an independent set.
    StrongUnion,
    /// Only the traces of the threshold-family bases need to join the other
    /// side's capped independent sets.
    WeakUnion,
    /// Neither union condition holds; the candidate stands on the validation
    /// of its three families alone.
    ValidationOnly,
}

/// A ground-set bipartition with side ranks and split multipliers satisfying
/// the rank-sum equation `r1 + r2 = r + a1 + a2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoodPartition {
    pub e1: Subset,
    pub e2: Subset,
    pub r1: usize,
    pub r2: usize,
    pub a1: usize,
    pub a2: usize,
    pub admission: Admission,
}

impl GoodPartition {
    /// Intersection-size cap defining the first family.
    pub fn threshold1(&self) -> usize {
        self.r1 - self.a1
    }

    /// Intersection-size cap defining the second family.
    pub fn threshold2(&self) -> usize {
        self.r2 - self.a2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    First,
    Second,
}

/// Why a candidate partition was rejected; union-condition failures carry
/// concrete witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionRejection {
    #[error("{e1} is not a nonempty proper subset of the ground set")]
    NotProper { e1: Subset },
    #[error("restriction to the {side:?} side has rank {rank}, need at least 2")]
    RankTooLow { side: Side, rank: usize },
    #[error("multiplier {a} out of range 1..{rank} on the {side:?} side")]
    MultiplierOutOfRange { side: Side, a: usize, rank: usize },
    #[error("rank sum fails: r1={r1}, r2={r2}, rank={rank}, a1={a1}, a2={a2}")]
    RankSumMismatch {
        r1: usize,
        r2: usize,
        rank: usize,
        a1: usize,
        a2: usize,
    },
    #[error("both union conditions fail; strong witness ({}, {}), weak witness ({}, {})", strong.0, strong.1, weak.0, weak.1)]
    UnionConditionsFail {
        /// Independent sets `(X, Y)` of the two sides whose union is dependent.
        strong: (Subset, Subset),
        /// A threshold-family base and an independent set of the other side
        /// whose trace union is dependent.
        weak: (Subset, Subset),
    },
}

/// Provenance of a split candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitSource {
    GoodPartition,
    LatticePath,
    DirectSumLift,
    Manual,
}

/// A candidate hyperplane split: two base families, their overlap, and the
/// separating hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCandidate {
    pub partition: Option<GoodPartition>,
    pub part1: Vec<Subset>,
    pub part2: Vec<Subset>,
    pub intersection: Vec<Subset>,
    pub hyperplane: SplitHyperplane,
    pub source: SplitSource,
}

impl SplitCandidate {
    /// Canonical key treating the two parts as an unordered pair.
    pub fn unordered_key(&self) -> (Vec<Subset>, Vec<Subset>) {
        if self.part1 <= self.part2 {
            (self.part1.clone(), self.part2.clone())
        } else {
            (self.part2.clone(), self.part1.clone())
        }
    }
}

/// Role of a family inside a verification report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyRole {
    Part1,
    Part2,
    Intersection,
}

/// Outcome of the seven-point verification plus the facet test.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    /// (i) the two families cover the base family exactly.
    pub union_covers: bool,
    /// (ii) each family is a proper subfamily of the base family.
    pub parts_proper: bool,
    /// (iii) neither family is contained in the overlap.
    pub parts_exceed_intersection: bool,
    /// (iv) the overlap is nonempty.
    pub intersection_nonempty: bool,
    /// (v) both families and the overlap pass base-family validation.
    pub families_are_matroids: bool,
    /// First validation failure behind (v), when any.
    pub family_failure: Option<(FamilyRole, MatroidError)>,
    /// (vi) a hyperplane touching exactly the overlap, with the two strict
    /// sides nonempty.
    pub separating_hyperplane: Option<SplitHyperplane>,
    /// (vii) no base-graph edge joins the two strict sides.
    pub edges_stay_within_parts: bool,
    /// Witness edge when (vii) fails.
    pub crossing_edge: Option<(Subset, Subset)>,
    /// Geometric facet test run with the found hyperplane.
    pub facet: Option<FacetCheck>,
    /// Conjunction of all of the above.
    pub overall: bool,
}

impl VerificationReport {
    pub fn checks(&self) -> [(&'static str, bool); 8] {
        [
            ("union covers base family", self.union_covers),
            ("parts are proper subfamilies", self.parts_proper),
            ("parts exceed intersection", self.parts_exceed_intersection),
            ("intersection nonempty", self.intersection_nonempty),
            ("families are matroids", self.families_are_matroids),
            (
                "separating hyperplane exists",
                self.separating_hyperplane.is_some(),
            ),
            ("edges stay within parts", self.edges_stay_within_parts),
            (
                "intersection spans a facet",
                self.facet.as_ref().is_some_and(FacetCheck::ok),
            ),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SplitError {
    #[error("{role:?} family is not a matroid: {source}")]
    PartNotMatroid {
        role: FamilyRole,
        #[source]
        source: MatroidError,
    },
    #[error(transparent)]
    Partition(#[from] PartitionRejection),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
    #[error(transparent)]
    Zoo(#[from] ZooError),
    #[error("need n >= r + 2 >= 4, got n={n}, r={r}")]
    PreconditionViolation { n: usize, r: usize },
    #[error("no admissible split point: no interval pair admits an interior cut")]
    NoSplitPoint,
    #[error("family is not in product form over the two components: {reason}")]
    ProductFormViolation { reason: String },
    #[error("no verified split for the relaxation under the given partition")]
    RelaxationNotVerified,
}

// ---------------------------------------------------------------------------
// Partition admission
// ---------------------------------------------------------------------------

fn capped_independent_subsets(m: &Matroid, ground: Subset, cap: usize) -> Vec<Subset> {
    let mut out = Vec::new();
    for size in 0..=cap.min(ground.len()) {
        for s in ground.subsets_of_size(size) {
            if m.is_independent(s) {
                out.push(s);
            }
        }
    }
    out
}

fn threshold_family(m: &Matroid, side: Subset, cap: i64) -> Vec<Subset> {
    m.bases()
        .iter()
        .filter(|b| ((**b & side).len() as i64) <= cap)
        .copied()
        .collect()
}

fn strong_union_witness(
    m: &Matroid,
    e1: Subset,
    t1: usize,
    e2: Subset,
    t2: usize,
) -> Option<(Subset, Subset)> {
    let xs = capped_independent_subsets(m, e1, t1);
    let ys = capped_independent_subsets(m, e2, t2);
    for x in &xs {
        for y in &ys {
            if !m.is_independent(*x | *y) {
                return Some((*x, *y));
            }
        }
    }
    None
}

fn weak_union_witness(
    m: &Matroid,
    e1: Subset,
    t1: usize,
    e2: Subset,
    t2: usize,
) -> Option<(Subset, Subset)> {
    let part1 = threshold_family(m, e1, t1 as i64);
    let part2 = threshold_family(m, e2, t2 as i64);
    let ys = capped_independent_subsets(m, e2, t2);
    let xs = capped_independent_subsets(m, e1, t1);
    for b in &part1 {
        let trace = *b & e1;
        for y in &ys {
            if !m.is_independent(trace | *y) {
                return Some((*b, *y));
            }
        }
    }
    for b in &part2 {
        let trace = *b & e2;
        for x in &xs {
            if !m.is_independent(trace | *x) {
                return Some((*b, *x));
            }
        }
    }
    None
}

fn partition_bounds(
    m: &Matroid,
    e1: Subset,
    a1: usize,
    a2: usize,
) -> Result<(Subset, usize, usize), PartitionRejection> {
    let n = m.n();
    if e1.is_empty() || e1 == Subset::full(n) {
        return Err(PartitionRejection::NotProper { e1 });
    }
    let e2 = e1.complement(n);
    let r1 = m.rank_of(e1);
    let r2 = m.rank_of(e2);
    if r1 <= 1 {
        return Err(PartitionRejection::RankTooLow {
            side: Side::First,
            rank: r1,
        });
    }
    if r2 <= 1 {
        return Err(PartitionRejection::RankTooLow {
            side: Side::Second,
            rank: r2,
        });
    }
    if a1 == 0 || a1 >= r1 {
        return Err(PartitionRejection::MultiplierOutOfRange {
            side: Side::First,
            a: a1,
            rank: r1,
        });
    }
    if a2 == 0 || a2 >= r2 {
        return Err(PartitionRejection::MultiplierOutOfRange {
            side: Side::Second,
            a: a2,
            rank: r2,
        });
    }
    if r1 + r2 != m.rank() + a1 + a2 {
        return Err(PartitionRejection::RankSumMismatch {
            r1,
            r2,
            rank: m.rank(),
            a1,
            a2,
        });
    }
    Ok((e2, r1, r2))
}

/// Check a bipartition with multipliers against the good-partition
/// conditions: side ranks above one, multipliers in range, the rank-sum
/// equation, and then the strong union condition with the weak one as
/// fallback. Rejections carry witnesses.
pub fn is_good_partition(
    m: &Matroid,
    e1: Subset,
    a1: usize,
    a2: usize,
) -> Result<GoodPartition, PartitionRejection> {
    let (e2, r1, r2) = partition_bounds(m, e1, a1, a2)?;
    let (t1, t2) = (r1 - a1, r2 - a2);
    let Some(strong) = strong_union_witness(m, e1, t1, e2, t2) else {
        return Ok(GoodPartition {
            e1,
            e2,
            r1,
            r2,
            a1,
            a2,
            admission: Admission::StrongUnion,
        });
    };
    let Some(weak) = weak_union_witness(m, e1, t1, e2, t2) else {
        return Ok(GoodPartition {
            e1,
            e2,
            r1,
            r2,
            a1,
            a2,
            admission: Admission::WeakUnion,
        });
    };
    Err(PartitionRejection::UnionConditionsFail { strong, weak })
}

/// Accept a bipartition on bounds and the rank-sum equation alone, leaving
/// the union conditions unchecked; the family validation in
/// [`construct_split`] is then the gate.
pub fn validation_only_partition(
    m: &Matroid,
    e1: Subset,
    a1: usize,
    a2: usize,
) -> Result<GoodPartition, PartitionRejection> {
    let (e2, r1, r2) = partition_bounds(m, e1, a1, a2)?;
    Ok(GoodPartition {
        e1,
        e2,
        r1,
        r2,
        a1,
        a2,
        admission: Admission::ValidationOnly,
    })
}

/// Run the full admission pipeline: strong, weak, then validation-only.
fn admitted_partition(m: &Matroid, e1: Subset, a1: usize, a2: usize) -> Option<GoodPartition> {
    match is_good_partition(m, e1, a1, a2) {
        Ok(gp) => Some(gp),
        Err(PartitionRejection::UnionConditionsFail { .. }) => {
            validation_only_partition(m, e1, a1, a2).ok()
        }
        Err(_) => None,
    }
}

// ---------------------------------------------------------------------------
// Construction and verification
// ---------------------------------------------------------------------------

fn intersection_of(part1: &[Subset], part2: &[Subset]) -> Vec<Subset> {
    let set2: HashSet<Subset> = part2.iter().copied().collect();
    part1.iter().filter(|b| set2.contains(b)).copied().collect()
}

/// Build the two threshold families of a partition, validate all three
/// families, and attach the indicator hyperplane.
pub fn construct_split(m: &Matroid, gp: &GoodPartition) -> Result<SplitCandidate, SplitError> {
    let part1 = threshold_family(m, gp.e1, gp.threshold1() as i64);
    let part2 = threshold_family(m, gp.e2, gp.threshold2() as i64);
    let intersection = intersection_of(&part1, &part2);
    for (role, family) in [
        (FamilyRole::Part1, &part1),
        (FamilyRole::Part2, &part2),
        (FamilyRole::Intersection, &intersection),
    ] {
        Matroid::from_bases(m.n(), family.iter().copied())
            .map_err(|source| SplitError::PartNotMatroid { role, source })?;
    }
    let hyperplane = polytope::split_hyperplane(gp.e1, gp.r1, gp.a1, m.n())?;
    Ok(SplitCandidate {
        partition: Some(gp.clone()),
        part1,
        part2,
        intersection,
        hyperplane,
        source: SplitSource::GoodPartition,
    })
}

fn normalize_family(family: &[Subset]) -> Vec<Subset> {
    let mut out = family.to_vec();
    out.sort();
    out.dedup();
    out
}

/// Does `h` put `strict1` strictly below its level, `strict2` strictly above
/// and the overlap exactly on it, with both strict sides nonempty?
fn hyperplane_fits(
    h: &SplitHyperplane,
    strict1: &[Subset],
    strict2: &[Subset],
    overlap: &[Subset],
) -> bool {
    !strict1.is_empty()
        && !strict2.is_empty()
        && overlap.iter().all(|b| h.evaluate(*b) == h.level)
        && strict1.iter().all(|b| h.evaluate(*b) < h.level)
        && strict2.iter().all(|b| h.evaluate(*b) > h.level)
}

const INDICATOR_SWEEP_MAX_N: usize = 14;

/// Search for a hyperplane touching exactly the overlap and strictly
/// separating the rest: indicator hyperplanes first, then exact rational
/// linear programming.
fn find_separating_hyperplane(
    n: usize,
    strict1: &[Subset],
    strict2: &[Subset],
    overlap: &[Subset],
) -> Option<SplitHyperplane> {
    if strict1.is_empty() || strict2.is_empty() {
        return None;
    }
    if n <= INDICATOR_SWEEP_MAX_N {
        for mask in 1..Subset::full(n).mask() {
            let s = Subset::from_mask(mask);
            let mut levels = overlap.iter().map(|b| (*b & s).len() as i64);
            let Some(level) = levels.next() else { continue };
            if levels.any(|l| l != level) {
                continue;
            }
            let h = SplitHyperplane::indicator(s, level, n);
            if hyperplane_fits(&h, strict1, strict2, overlap) {
                return Some(h);
            }
            if hyperplane_fits(&h.negated(), strict1, strict2, overlap) {
                return Some(h.negated());
            }
        }
    }
    // Exact feasibility: coefficients and level as free rationals, equality
    // on the overlap, margin one on both strict sides.
    let mut constraints = Vec::new();
    let row = |b: Subset, sign: i64| -> Vec<i64> {
        let mut coeffs: Vec<i64> = (1..=n).map(|e| sign * i64::from(b.contains(e))).collect();
        coeffs.push(-sign);
        coeffs
    };
    for b in overlap {
        constraints.push(lp::Constraint {
            coefficients: row(*b, 1),
            relation: lp::Relation::Eq,
            rhs: 0,
        });
    }
    for b in strict1 {
        constraints.push(lp::Constraint {
            coefficients: row(*b, 1),
            relation: lp::Relation::Le,
            rhs: -1,
        });
    }
    for b in strict2 {
        constraints.push(lp::Constraint {
            coefficients: row(*b, -1),
            relation: lp::Relation::Le,
            rhs: -1,
        });
    }
    let solution = lp::feasible_point(n + 1, &constraints)?;
    let h = polytope::scale_to_integer_hyperplane(&solution);
    debug_assert!(hyperplane_fits(&h, strict1, strict2, overlap));
    Some(h)
}

/// Judge an arbitrary pair of base families as a hyperplane split of `m`.
///
/// All checks are reported, never short-circuited into errors, so this is
/// usable on manual candidates; `hint` short-cuts the hyperplane search when
/// the caller already has one.
fn verify_impl(
    m: &Matroid,
    part1: &[Subset],
    part2: &[Subset],
    hint: Option<&SplitHyperplane>,
) -> Result<VerificationReport, SplitError> {
    let part1 = normalize_family(part1);
    let part2 = normalize_family(part2);
    let intersection = intersection_of(&part1, &part2);
    let inter_set: HashSet<Subset> = intersection.iter().copied().collect();
    let strict1: Vec<Subset> = part1
        .iter()
        .filter(|b| !inter_set.contains(b))
        .copied()
        .collect();
    let strict2: Vec<Subset> = part2
        .iter()
        .filter(|b| !inter_set.contains(b))
        .copied()
        .collect();

    let mut union = part1.clone();
    union.extend(&part2);
    union.sort();
    union.dedup();
    let union_covers = union == m.bases();

    let proper = |p: &[Subset]| p.iter().all(|b| m.is_base(*b)) && p.len() < m.num_bases();
    let parts_proper = !part1.is_empty() && !part2.is_empty() && proper(&part1) && proper(&part2);

    let parts_exceed_intersection =
        part1.len() > intersection.len() && part2.len() > intersection.len();

    let intersection_nonempty = !intersection.is_empty();

    let mut family_failure = None;
    for (role, family) in [
        (FamilyRole::Part1, &part1),
        (FamilyRole::Part2, &part2),
        (FamilyRole::Intersection, &intersection),
    ] {
        if let Err(e) = Matroid::from_bases(m.n(), family.iter().copied()) {
            family_failure = Some((role, e));
            break;
        }
    }
    let families_are_matroids = family_failure.is_none();

    let separating_hyperplane = hint
        .filter(|h| hyperplane_fits(h, &strict1, &strict2, &intersection))
        .cloned()
        .or_else(|| find_separating_hyperplane(m.n(), &strict1, &strict2, &intersection));

    let graph = BaseGraph::build(m)?;
    let in1: HashSet<Subset> = part1.iter().copied().collect();
    let in2: HashSet<Subset> = part2.iter().copied().collect();
    let mut crossing_edge = None;
    for (i, j) in graph.edges() {
        let (a, b) = (graph.bases()[i], graph.bases()[j]);
        let within =
            (in1.contains(&a) && in1.contains(&b)) || (in2.contains(&a) && in2.contains(&b));
        if !within {
            crossing_edge = Some((a, b));
            break;
        }
    }
    let edges_stay_within_parts = crossing_edge.is_none();

    let facet = match (&separating_hyperplane, union_covers) {
        (Some(h), true) => Some(polytope::facet_check(m, &part1, &part2, h)?),
        _ => None,
    };

    let overall = union_covers
        && parts_proper
        && parts_exceed_intersection
        && intersection_nonempty
        && families_are_matroids
        && separating_hyperplane.is_some()
        && edges_stay_within_parts
        && facet.as_ref().is_some_and(FacetCheck::ok);

    Ok(VerificationReport {
        union_covers,
        parts_proper,
        parts_exceed_intersection,
        intersection_nonempty,
        families_are_matroids,
        family_failure,
        separating_hyperplane,
        edges_stay_within_parts,
        crossing_edge,
        facet,
        overall,
    })
}

/// The universal judge over arbitrary families; searches for its own
/// separating hyperplane.
pub fn verify_split(
    m: &Matroid,
    part1: &[Subset],
    part2: &[Subset],
) -> Result<VerificationReport, SplitError> {
    verify_impl(m, part1, part2, None)
}

/// Judge a candidate whose hyperplane is already known; falls back to the
/// full search when the hint does not fit.
pub fn verify_split_with_hyperplane(
    m: &Matroid,
    part1: &[Subset],
    part2: &[Subset],
    hyperplane: &SplitHyperplane,
) -> Result<VerificationReport, SplitError> {
    verify_impl(m, part1, part2, Some(hyperplane))
}

/// Verify a constructed candidate with its own hyperplane.
pub fn verify_candidate(m: &Matroid, c: &SplitCandidate) -> Result<VerificationReport, SplitError> {
    verify_impl(m, &c.part1, &c.part2, Some(&c.hyperplane))
}

// ---------------------------------------------------------------------------
// Search
// ---------------------------------------------------------------------------

/// Everything an exhaustive split search saw.
#[derive(Debug, Clone)]
pub struct SplitSearch {
    /// Verified splits from partitions meeting the good-partition bounds.
    pub verified: Vec<SplitCandidate>,
    /// Verified splits from probes outside those bounds (side rank or
    /// multiplier out of range); reported but never returned as results.
    pub degenerate: Vec<SplitCandidate>,
    pub partitions_examined: usize,
    pub candidates_examined: usize,
}

/// Exhaustive split search over all bipartitions and admissible multipliers.
pub fn search_splits(m: &Matroid) -> Result<Vec<SplitCandidate>, SplitError> {
    Ok(search_splits_detailed(m)?.verified)
}

/// As [`search_splits`], but also reporting degenerate probes and counters.
pub fn search_splits_detailed(m: &Matroid) -> Result<SplitSearch, SplitError> {
    let n = m.n();
    let rank = m.rank();
    // Canonicalize the unordered bipartition: the side holding element 1 is
    // e1; sweeping all (a1, a2) covers both threshold orientations.
    let masks: Vec<Subset> = Subset::full(n)
        .minus(Subset::singleton(1))
        .subsets()
        .map(|s| s.with(1))
        .filter(|s| *s != Subset::full(n))
        .collect();

    let per_mask: Vec<(usize, Vec<(bool, SplitCandidate)>)> = masks
        .par_iter()
        .map(|&e1| {
            let e2 = e1.complement(n);
            let r1 = m.rank_of(e1);
            let r2 = m.rank_of(e2);
            let mut found = Vec::new();
            let mut examined = 0;
            if r1 + r2 >= rank + 2 {
                let multiplier_sum = r1 + r2 - rank;
                for a1 in 1..multiplier_sum {
                    let a2 = multiplier_sum - a1;
                    examined += 1;
                    let conforming = r1 > 1 && r2 > 1 && a1 < r1 && a2 < r2;
                    let gp = if conforming {
                        match admitted_partition(m, e1, a1, a2) {
                            Some(gp) => gp,
                            None => continue,
                        }
                    } else {
                        GoodPartition {
                            e1,
                            e2,
                            r1,
                            r2,
                            a1,
                            a2,
                            admission: Admission::ValidationOnly,
                        }
                    };
                    let candidate = match construct_candidate_lenient(m, &gp) {
                        Some(c) => c,
                        None => continue,
                    };
                    match verify_candidate(m, &candidate) {
                        Ok(report) if report.overall => found.push((conforming, candidate)),
                        _ => {}
                    }
                }
            }
            (examined, found)
        })
        .collect();

    let mut verified = Vec::new();
    let mut degenerate = Vec::new();
    let mut candidates_examined = 0;
    let mut seen: BTreeSet<(Vec<Subset>, Vec<Subset>)> = BTreeSet::new();
    for (examined, found) in per_mask {
        candidates_examined += examined;
        for (conforming, candidate) in found {
            if !seen.insert(candidate.unordered_key()) {
                continue;
            }
            if conforming {
                verified.push(candidate);
            } else {
                degenerate.push(candidate);
            }
        }
    }
    verified.sort_by_key(SplitCandidate::unordered_key);
    degenerate.sort_by_key(SplitCandidate::unordered_key);
    Ok(SplitSearch {
        verified,
        degenerate,
        partitions_examined: masks.len(),
        candidates_examined,
    })
}

/// Threshold families for a partition whose multipliers may lie outside the
/// good-partition bounds; degenerate thresholds can empty a side, which is
/// simply not a candidate.
fn construct_candidate_lenient(m: &Matroid, gp: &GoodPartition) -> Option<SplitCandidate> {
    let t1 = gp.r1 as i64 - gp.a1 as i64;
    let t2 = gp.r2 as i64 - gp.a2 as i64;
    let part1 = threshold_family(m, gp.e1, t1);
    let part2 = threshold_family(m, gp.e2, t2);
    if part1.is_empty() || part2.is_empty() {
        return None;
    }
    for family in [&part1, &part2] {
        Matroid::from_bases(m.n(), family.iter().copied()).ok()?;
    }
    let intersection = intersection_of(&part1, &part2);
    Matroid::from_bases(m.n(), intersection.iter().copied()).ok()?;
    let hyperplane = SplitHyperplane::indicator(gp.e1, t1, m.n());
    Some(SplitCandidate {
        partition: Some(gp.clone()),
        part1,
        part2,
        intersection,
        hyperplane,
        source: SplitSource::GoodPartition,
    })
}

// ---------------------------------------------------------------------------
// Families of splits
// ---------------------------------------------------------------------------

/// Splits of a prefix bipartition of the uniform matroid, for one prefix
/// length `k`.
#[derive(Debug, Clone)]
pub struct UniformSplitGroup {
    pub k: usize,
    pub splits: Vec<SplitCandidate>,
}

/// The prefix-partition split family of the uniform matroid: for every
/// prefix `{1..k}` with `2 <= k <= n/2` and every admissible multiplier
/// pair, the verified threshold split.
pub fn uniform_split_family(n: usize, r: usize) -> Result<Vec<UniformSplitGroup>, SplitError> {
    if !(r + 2 >= 4 && n >= r + 2) {
        return Err(SplitError::PreconditionViolation { n, r });
    }
    let m = zoo::uniform(n, r)?;
    let mut groups = Vec::new();
    for k in 2..=n / 2 {
        let e1 = Subset::from_elements(1..=k);
        let r1 = r.min(k);
        let r2 = r.min(n - k);
        let multiplier_sum = r1 + r2 - r;
        let mut splits = Vec::new();
        for a1 in 1..multiplier_sum {
            let a2 = multiplier_sum - a1;
            if a1 >= r1 || a2 >= r2 {
                continue;
            }
            let gp = admitted_partition(&m, e1, a1, a2)
                .expect("prefix partitions of uniform matroids meet the bounds");
            let candidate = construct_split(&m, &gp)?;
            let report = verify_candidate(&m, &candidate)?;
            assert!(report.overall, "uniform prefix splits always verify");
            splits.push(candidate);
        }
        groups.push(UniformSplitGroup { k, splits });
    }
    Ok(groups)
}

/// Transversal presentations of the two parts and the overlap of a lattice
/// path split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePresentations {
    pub part1: SetSystem,
    pub part2: SetSystem,
    pub intersection: SetSystem,
}

/// One verified split of a lattice path matroid, cut at ground position `x`
/// between interval indices `j` and `j + 1`.
#[derive(Debug, Clone)]
pub struct LatticePathSplit {
    pub x: usize,
    pub j: usize,
    pub presentations: LatticePresentations,
    pub candidate: SplitCandidate,
    pub report: VerificationReport,
}

/// Find every cut position of a lattice path matroid: an `x` interior to
/// interval `j` with `x + 1` interior to interval `j + 1` yields a threshold
/// split whose parts are again transversal matroids, realized here from the
/// modified presentations and checked against the threshold families.
pub fn lattice_path_splits(spec: &LatticePathSpec) -> Result<Vec<LatticePathSplit>, SplitError> {
    let intervals = spec.intervals();
    let r = spec.north();
    let n = spec.ground_size();
    let m = zoo::lattice_path(spec)?;
    let mut out = Vec::new();
    for j in 1..r {
        let (lo_j, hi_j) = intervals[j - 1];
        let (lo_next, hi_next) = intervals[j];
        for x in 1..n {
            if !(lo_j < x && x < hi_j && lo_next < x + 1 && x + 1 < hi_next) {
                continue;
            }
            let e1 = Subset::from_elements(1..=x);
            let e2 = e1.complement(n);
            let r1 = m.rank_of(e1);
            let r2 = m.rank_of(e2);
            assert!(r1 > j && r2 > r - j, "side ranks exceed the cut counts");
            let (a1, a2) = (r1 - j, r2 - (r - j));
            let gp = admitted_partition(&m, e1, a1, a2).ok_or(SplitError::NoSplitPoint)?;
            let mut candidate = construct_split(&m, &gp)?;
            candidate.source = SplitSource::LatticePath;

            let restrict = |iv: &(usize, usize), side: Subset| {
                Subset::from_elements((iv.0..=iv.1).filter(|e| side.contains(*e)))
            };
            let full_interval = |iv: &(usize, usize)| Subset::from_elements(iv.0..=iv.1);
            let part1_parts: Vec<Subset> = intervals
                .iter()
                .enumerate()
                .map(|(i, iv)| if i < j { full_interval(iv) } else { restrict(iv, e2) })
                .collect();
            let part2_parts: Vec<Subset> = intervals
                .iter()
                .enumerate()
                .map(|(i, iv)| if i < j { restrict(iv, e1) } else { full_interval(iv) })
                .collect();
            let inter_parts: Vec<Subset> = part1_parts
                .iter()
                .zip(&part2_parts)
                .map(|(a, b)| *a & *b)
                .collect();
            let presentations = LatticePresentations {
                part1: SetSystem::new(part1_parts),
                part2: SetSystem::new(part2_parts),
                intersection: SetSystem::new(inter_parts),
            };
            for (system, family) in [
                (&presentations.part1, &candidate.part1),
                (&presentations.part2, &candidate.part2),
                (&presentations.intersection, &candidate.intersection),
            ] {
                let realized = zoo::transversal(system, n)?;
                assert_eq!(
                    realized.bases(),
                    &family[..],
                    "presentation must realize the threshold family"
                );
            }

            let report = verify_candidate(&m, &candidate)?;
            assert!(report.overall, "lattice path cuts always verify");
            out.push(LatticePathSplit {
                x,
                j,
                presentations,
                candidate,
                report,
            });
        }
    }
    if out.is_empty() {
        return Err(SplitError::NoSplitPoint);
    }
    Ok(out)
}

/// Split the relaxation of `m` along the partition that splits `m`. Side
/// ranks are recomputed on the relaxed matroid; the multipliers carry over.
pub fn relaxation_split(
    m: &Matroid,
    gp: &GoodPartition,
    x: Subset,
) -> Result<SplitCandidate, SplitError> {
    let relaxed = m.relax(x)?;
    let gp2 = admitted_partition(&relaxed, gp.e1, gp.a1, gp.a2)
        .ok_or(SplitError::RelaxationNotVerified)?;
    let candidate = construct_split(&relaxed, &gp2)?;
    let report = verify_candidate(&relaxed, &candidate)?;
    if !report.overall {
        return Err(SplitError::RelaxationNotVerified);
    }
    Ok(candidate)
}

// ---------------------------------------------------------------------------
// Direct sums
// ---------------------------------------------------------------------------

fn shift(s: Subset, by: usize) -> Subset {
    Subset::from_elements(s.elements().map(|e| e + by))
}

fn unshift(s: Subset, by: usize) -> Subset {
    Subset::from_elements(s.elements().map(|e| e - by))
}

/// Lift a split of the first summand to the direct sum: each part is crossed
/// with the full base family of the second summand and the hyperplane is
/// extended by zero coefficients.
pub fn lift_split_direct_sum(
    split: &SplitCandidate,
    m1: &Matroid,
    m2: &Matroid,
) -> Result<(SplitCandidate, VerificationReport), SplitError> {
    let sum = m1.direct_sum(m2)?;
    let cross = |family: &[Subset]| -> Vec<Subset> {
        let mut out: Vec<Subset> = family
            .iter()
            .flat_map(|x| m2.bases().iter().map(|y| *x | shift(*y, m1.n())))
            .collect();
        out.sort();
        out
    };
    let part1 = cross(&split.part1);
    let part2 = cross(&split.part2);
    let intersection = cross(&split.intersection);
    let mut coefficients = split.hyperplane.coefficients.clone();
    coefficients.resize(sum.n(), 0);
    let hyperplane = SplitHyperplane {
        coefficients,
        level: split.hyperplane.level,
    };
    let partition = split.partition.as_ref().map(|gp| GoodPartition {
        e1: gp.e1,
        e2: gp.e2 | shift(m2.ground_set(), m1.n()),
        r1: gp.r1,
        r2: gp.r2 + m2.rank(),
        a1: gp.a1,
        a2: gp.a2,
        admission: gp.admission,
    });
    let candidate = SplitCandidate {
        partition,
        part1,
        part2,
        intersection,
        hyperplane,
        source: SplitSource::DirectSumLift,
    };
    let report = verify_candidate(&sum, &candidate)?;
    Ok((candidate, report))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentSide {
    First,
    Second,
}

/// A split recovered on one summand of a direct sum.
#[derive(Debug, Clone)]
pub struct ProjectedSplit {
    pub side: ComponentSide,
    pub part1: Vec<Subset>,
    pub part2: Vec<Subset>,
    pub report: VerificationReport,
}

fn trace_families(part: &[Subset], e_first: Subset, n1: usize) -> (Vec<Subset>, Vec<Subset>) {
    let mut first: Vec<Subset> = part.iter().map(|b| *b & e_first).collect();
    first.sort();
    first.dedup();
    let mut second: Vec<Subset> = part.iter().map(|b| unshift(b.minus(e_first), n1)).collect();
    second.sort();
    second.dedup();
    (first, second)
}

/// Project a split of `m1 (+) m2` back onto the summand it actually cuts.
///
/// Each part must factor as a product of trace families; the summand on
/// which both parts restrict fully is uncut, and the recovered split of the
/// other summand is re-verified from scratch.
pub fn project_split_direct_sum(
    m1: &Matroid,
    m2: &Matroid,
    part1: &[Subset],
    part2: &[Subset],
) -> Result<ProjectedSplit, SplitError> {
    let e_first = m1.ground_set();
    let n1 = m1.n();
    let mut factors = Vec::new();
    for (name, part) in [("first part", part1), ("second part", part2)] {
        let part = normalize_family(part);
        let (first, second) = trace_families(&part, e_first, n1);
        if first.len() * second.len() != part.len() {
            return Err(SplitError::ProductFormViolation {
                reason: format!(
                    "{name} has {} members but {} x {} trace combinations",
                    part.len(),
                    first.len(),
                    second.len()
                ),
            });
        }
        for x in &first {
            for y in &second {
                let b = *x | shift(*y, n1);
                if part.binary_search(&b).is_err() {
                    return Err(SplitError::ProductFormViolation {
                        reason: format!("{name} is missing the product member {b}"),
                    });
                }
            }
        }
        factors.push((first, second));
    }
    let (a1, a2) = (&factors[0].0, &factors[0].1);
    let (c1, c2) = (&factors[1].0, &factors[1].1);
    let full1 = a1 == m1.bases() && c1 == m1.bases();
    let full2 = a2 == m2.bases() && c2 == m2.bases();
    let (side, m, p1, p2) = match (full1, full2) {
        (true, false) => (ComponentSide::Second, m2, a2.clone(), c2.clone()),
        (false, true) => (ComponentSide::First, m1, a1.clone(), c1.clone()),
        (combo1, combo2) => {
            return Err(SplitError::ProductFormViolation {
                reason: format!(
                    "expected exactly one fully-restricting side, got first={combo1}, second={combo2}"
                ),
            })
        }
    };
    let report = verify_split(m, &p1, &p2)?;
    Ok(ProjectedSplit {
        side,
        part1: p1,
        part2: p2,
        report,
    })
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

/// Machine-checkable verdicts about split existence, with the evidence
/// embedded so an independent pass can recheck them.
#[derive(Debug, Clone)]
pub enum Certificate {
    /// A concrete verified split.
    SplitVerified {
        candidate: SplitCandidate,
        report: VerificationReport,
    },
    /// The exhaustive partition search produced nothing (and the matroid is
    /// not binary, which would be certified separately).
    NoGoodPartition {
        partitions_examined: usize,
        candidates_examined: usize,
    },
    /// Binary matroids admit no nontrivial hyperplane split.
    BinaryNoHyperplaneSplit {
        distance_two_pairs: usize,
        representation: Option<Gf2Matrix>,
    },
    /// A binary matroid with a vertex of degree equal to the polytope
    /// dimension is indecomposable outright.
    DegreeIndecomposable {
        vertex: Subset,
        degree: usize,
        dimension: usize,
    },
}

// Representation search is exponential in rank; only run it where it is
// instant.
fn representation_if_cheap(m: &Matroid) -> Option<Gf2Matrix> {
    let free = m.n() - m.rank();
    if m.rank() <= 6 && free * m.rank() <= 24 {
        gf2::representation_search(m)
    } else {
        None
    }
}

/// Certificates of indecomposability for `m`: binarity (no hyperplane split)
/// and, when some base-graph vertex has degree equal to the polytope
/// dimension, full indecomposability.
pub fn indecomposability_certificates(m: &Matroid) -> Result<Vec<Certificate>, SplitError> {
    let mut out = Vec::new();
    if graph::is_binary(m)? {
        let g = BaseGraph::build(m)?;
        out.push(Certificate::BinaryNoHyperplaneSplit {
            distance_two_pairs: g.distance_two_pairs().len(),
            representation: representation_if_cheap(m),
        });
        let dim = polytope::dimension(m);
        if let Some(i) = (0..g.vertex_count()).find(|&i| g.degree(i) == dim) {
            out.push(Certificate::DegreeIndecomposable {
                vertex: g.bases()[i],
                degree: dim,
                dimension: dim,
            });
        }
    }
    Ok(out)
}

/// The full certificate pipeline: binarity certificates when applicable,
/// otherwise the search outcome (its splits, or a record of the empty
/// search).
pub fn classify(m: &Matroid) -> Result<Vec<Certificate>, SplitError> {
    let mut out = indecomposability_certificates(m)?;
    if !out.is_empty() {
        return Ok(out);
    }
    let search = search_splits_detailed(m)?;
    if search.verified.is_empty() {
        out.push(Certificate::NoGoodPartition {
            partitions_examined: search.partitions_examined,
            candidates_examined: search.candidates_examined,
        });
    } else {
        for candidate in search.verified {
            let report = verify_candidate(m, &candidate)?;
            out.push(Certificate::SplitVerified { candidate, report });
        }
    }
    Ok(out)
}

/// Recheck a certificate against the matroid it was issued for.
pub fn verify_certificate(m: &Matroid, certificate: &Certificate) -> Result<bool, SplitError> {
    match certificate {
        Certificate::SplitVerified { candidate, .. } => {
            Ok(verify_candidate(m, candidate)?.overall)
        }
        Certificate::NoGoodPartition { .. } => Ok(search_splits(m)?.is_empty()),
        Certificate::BinaryNoHyperplaneSplit { representation, .. } => {
            let binary = graph::is_binary(m)?;
            let rep_ok = representation.as_ref().is_none_or(|a| gf2::represents(m, a));
            Ok(binary && rep_ok)
        }
        Certificate::DegreeIndecomposable {
            vertex,
            degree,
            dimension,
        } => {
            let g = BaseGraph::build(m)?;
            let Some(i) = g.index_of(*vertex) else {
                return Ok(false);
            };
            Ok(graph::is_binary(m)?
                && g.degree(i) == *degree
                && polytope::dimension(m) == *dimension
                && degree == dimension)
        }
    }
}

// ---------------------------------------------------------------------------
// Distinctness keys
// ---------------------------------------------------------------------------

/// Combinatorial fingerprint of one part of a split.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartFingerprint {
    pub base_count: usize,
    pub degree_sequence: Vec<usize>,
    pub intersection_count: usize,
}

/// Sound distinctness key for splits: different keys mean inequivalent
/// splits; equal keys are only "possibly equivalent".
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DistinctnessKey {
    pub fingerprints: [PartFingerprint; 2],
}

fn fingerprint(
    n: usize,
    family: &[Subset],
    intersection_count: usize,
) -> Result<PartFingerprint, SplitError> {
    let part = Matroid::from_bases(n, family.iter().copied())?;
    let g = BaseGraph::build(&part)?;
    let mut degree_sequence: Vec<usize> = (0..g.vertex_count()).map(|i| g.degree(i)).collect();
    degree_sequence.sort();
    Ok(PartFingerprint {
        base_count: family.len(),
        degree_sequence,
        intersection_count,
    })
}

/// Fingerprint both parts of a verified split as an unordered pair.
pub fn split_distinctness_key(
    n: usize,
    split: &SplitCandidate,
) -> Result<DistinctnessKey, SplitError> {
    let f1 = fingerprint(n, &split.part1, split.intersection.len())?;
    let f2 = fingerprint(n, &split.part2, split.intersection.len())?;
    let fingerprints = if f1 <= f2 { [f1, f2] } else { [f2, f1] };
    Ok(DistinctnessKey { fingerprints })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    fn family(families: &[&[usize]]) -> Vec<Subset> {
        families.iter().map(|b| set(b)).collect()
    }

    #[test]
    fn u42_prefix_partition_is_good() {
        let m = zoo::uniform(4, 2).unwrap();
        let gp = is_good_partition(&m, set(&[1, 2]), 1, 1).unwrap();
        assert_eq!((gp.r1, gp.r2), (2, 2));
        assert_eq!(gp.admission, Admission::StrongUnion);
    }

    #[test]
    fn whirl_partition_is_good() {
        let m = zoo::catalog("w3").unwrap();
        let gp = is_good_partition(&m, set(&[1, 2, 6]), 2, 1).unwrap();
        assert_eq!((gp.r1, gp.r2), (3, 3));
        assert_eq!(gp.admission, Admission::StrongUnion);
    }

    #[test]
    fn u42_split_families() {
        let m = zoo::uniform(4, 2).unwrap();
        let gp = is_good_partition(&m, set(&[1, 2]), 1, 1).unwrap();
        let c = construct_split(&m, &gp).unwrap();
        assert_eq!(
            c.part1,
            family(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]])
        );
        assert_eq!(
            c.part2,
            family(&[&[1, 2], &[1, 3], &[1, 4], &[2, 3], &[2, 4]])
        );
        assert_eq!(c.intersection, family(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]));
        let report = verify_candidate(&m, &c).unwrap();
        assert!(report.overall, "{report:?}");
        assert!(report.checks().iter().all(|(_, ok)| *ok));
    }

    #[test]
    fn combinatorial_but_not_geometric() {
        let m = zoo::catalog("m_star").unwrap();
        let part1 = family(&[&[1, 2], &[2, 3], &[2, 4]]);
        let part2 = family(&[&[1, 3], &[2, 3], &[3, 4]]);
        let report = verify_split(&m, &part1, &part2).unwrap();
        assert!(report.union_covers);
        assert!(report.parts_proper);
        assert!(report.parts_exceed_intersection);
        assert!(report.intersection_nonempty);
        assert!(report.families_are_matroids);
        // A separating hyperplane exists even though no indicator one does.
        assert!(report.separating_hyperplane.is_some());
        assert!(!report.edges_stay_within_parts);
        let edge = report.crossing_edge.unwrap();
        assert_eq!(edge.0.symmetric_difference_len(edge.1), 2);
        assert!(!report.overall);
    }

    #[test]
    fn trivial_candidate_fails_properness() {
        let m = zoo::uniform(4, 2).unwrap();
        let all = m.bases().to_vec();
        let sub = family(&[&[1, 3], &[1, 4], &[2, 3], &[2, 4], &[3, 4]]);
        let report = verify_split(&m, &all, &sub).unwrap();
        assert!(!report.parts_proper);
        assert!(!report.overall);
    }

    #[test]
    fn k4_partitions_rejected_and_families_invalid() {
        let m = zoo::catalog("m_k4").unwrap();
        // One of the four bipartition shapes: triangle vs triangle.
        let e1 = set(&[1, 2, 3]);
        let err = is_good_partition(&m, e1, 1, 2).unwrap_err();
        assert!(matches!(err, PartitionRejection::UnionConditionsFail { .. }));
        let gp = validation_only_partition(&m, e1, 1, 2).unwrap();
        let err = construct_split(&m, &gp).unwrap_err();
        assert!(matches!(err, SplitError::PartNotMatroid { .. }));
    }

    #[test]
    fn search_finds_the_u42_split() {
        let m = zoo::uniform(4, 2).unwrap();
        let found = search_splits(&m).unwrap();
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].intersection.len(), 4);
    }

    #[test]
    fn search_is_empty_for_k4() {
        let m = zoo::catalog("m_k4").unwrap();
        let search = search_splits_detailed(&m).unwrap();
        assert!(search.verified.is_empty());
        assert!(search.degenerate.is_empty());
        assert_eq!(search.partitions_examined, 31);
    }

    #[test]
    fn uniform_family_counts() {
        let groups = uniform_split_family(6, 3).unwrap();
        assert_eq!(groups.len(), 2);
        assert_eq!(groups[0].k, 2);
        assert_eq!(groups[0].splits.len(), 1);
        assert_eq!(groups[1].k, 3);
        assert_eq!(groups[1].splits.len(), 2);
        assert!(matches!(
            uniform_split_family(3, 2),
            Err(SplitError::PreconditionViolation { .. })
        ));
    }

    #[test]
    fn lift_and_project_roundtrip() {
        let m1 = zoo::uniform(4, 2).unwrap();
        let m2 = zoo::uniform(2, 1).unwrap();
        let split = &search_splits(&m1).unwrap()[0];
        let (lifted, report) = lift_split_direct_sum(split, &m1, &m2).unwrap();
        assert!(report.overall);
        assert_eq!(lifted.part1.len(), split.part1.len() * 2);
        assert_eq!(lifted.intersection.len(), split.intersection.len() * 2);

        let projected =
            project_split_direct_sum(&m1, &m2, &lifted.part1, &lifted.part2).unwrap();
        assert_eq!(projected.side, ComponentSide::First);
        assert_eq!(projected.part1, split.part1);
        assert_eq!(projected.part2, split.part2);
        assert!(projected.report.overall);
    }

    #[test]
    fn product_form_violation_detected() {
        let m1 = zoo::uniform(2, 1).unwrap();
        let m2 = zoo::uniform(2, 1).unwrap();
        // {1,3} and {2,4} alone are not a product family covering the sum.
        let err = project_split_direct_sum(&m1, &m2, &family(&[&[1, 3]]), &family(&[&[2, 4]]))
            .unwrap_err();
        assert!(matches!(err, SplitError::ProductFormViolation { .. }));
    }

    #[test]
    fn hypercube_certificates() {
        let u21 = zoo::uniform(2, 1).unwrap();
        let cube3 = u21.direct_sum(&u21).unwrap().direct_sum(&u21).unwrap();
        let certs = indecomposability_certificates(&cube3).unwrap();
        assert_eq!(certs.len(), 2);
        assert!(matches!(
            certs[0],
            Certificate::BinaryNoHyperplaneSplit { .. }
        ));
        match &certs[1] {
            Certificate::DegreeIndecomposable { degree, dimension, .. } => {
                assert_eq!((*degree, *dimension), (3, 3));
            }
            c => panic!("expected a degree certificate, got {c:?}"),
        }
        for c in &certs {
            assert!(verify_certificate(&cube3, c).unwrap());
        }
    }

    #[test]
    fn u42_has_no_indecomposability_certificate() {
        let m = zoo::uniform(4, 2).unwrap();
        assert!(indecomposability_certificates(&m).unwrap().is_empty());
        let certs = classify(&m).unwrap();
        assert!(matches!(certs[0], Certificate::SplitVerified { .. }));
    }

    #[test]
    fn distinctness_key_is_order_insensitive() {
        let m = zoo::uniform(4, 2).unwrap();
        let split = &search_splits(&m).unwrap()[0];
        let key = split_distinctness_key(m.n(), split).unwrap();
        let mut swapped = split.clone();
        std::mem::swap(&mut swapped.part1, &mut swapped.part2);
        let key2 = split_distinctness_key(m.n(), &swapped).unwrap();
        assert_eq!(key, key2);
        assert_eq!(key.fingerprints[0].intersection_count, 4);
        assert_eq!(key.fingerprints[0].base_count, 5);
    }

    #[test]
    fn relaxation_split_of_whirl() {
        let w3 = zoo::catalog("w3").unwrap();
        let gp = is_good_partition(&w3, set(&[1, 2, 6]), 2, 1).unwrap();
        let x = set(&[1, 2, 5]);
        assert!(w3.is_circuit_hyperplane(x));
        let candidate = relaxation_split(&w3, &gp, x).unwrap();
        let relaxed = w3.relax(x).unwrap();
        assert_eq!(relaxed.num_bases(), 18);
        // Each part of the relaxed split contains its original counterpart.
        let original = construct_split(&w3, &gp).unwrap();
        let contains = |sup: &[Subset], sub: &[Subset]| {
            let sup: HashSet<Subset> = sup.iter().copied().collect();
            sub.iter().all(|b| sup.contains(b))
        };
        assert!(contains(&candidate.part1, &original.part1));
        assert!(contains(&candidate.part2, &original.part2));
    }
}

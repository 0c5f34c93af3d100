//! Constructors for the matroid families used throughout: uniform, graphic,
//! GF(2)-represented, transversal and lattice path matroids, plus a small
//! named catalog of recurring examples.

use thiserror::Error;

use crate::gf2::Gf2Matrix;
use crate::guard;
use crate::matroid::{Matroid, MatroidError};
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error("rank {r} out of range for {n} elements")]
    RankOutOfRange { n: usize, r: usize },
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("invalid lattice path spec: {0}")]
    SpecInvalid(String),
    #[error("invalid graph spec: {0}")]
    GraphInvalid(String),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Uniform matroid: every `r`-subset of `{1, ..., n}` is a base.
pub fn uniform(n: usize, r: usize) -> Result<Matroid, ZooError> {
    if r > n {
        return Err(ZooError::RankOutOfRange { n, r });
    }
    Ok(Matroid::from_bases(n, Subset::full(n).subsets_of_size(r))?)
}

/// A multigraph whose edges, in order, are the matroid elements `1, ..., n`.
/// Loops and parallel edges are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    pub vertex_count: usize,
    pub edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self, ZooError> {
        if vertex_count == 0 || edges.is_empty() {
            return Err(ZooError::GraphInvalid("graph must have vertices and edges".into()));
        }
        for &(u, v) in &edges {
            if u == 0 || v == 0 || u > vertex_count || v > vertex_count {
                return Err(ZooError::GraphInvalid(format!(
                    "edge ({u},{v}) has an endpoint outside 1..={vertex_count}"
                )));
            }
        }
        Ok(GraphSpec { vertex_count, edges })
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }
    fn find(&mut self, mut i: usize) -> usize {
        while self.0[i] != i {
            self.0[i] = self.0[self.0[i]];
            i = self.0[i];
        }
        i
    }
    /// Returns false when the edge closes a cycle.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

fn forest_size(spec: &GraphSpec, edges: Subset) -> usize {
    let mut uf = UnionFind::new(spec.vertex_count);
    let mut size = 0;
    for e in edges.elements() {
        let (u, v) = spec.edges[e - 1];
        if u != v && uf.union(u - 1, v - 1) {
            size += 1;
        }
    }
    size
}

/// Graphic matroid: bases are the edge sets of maximum spanning forests.
pub fn graphic(spec: &GraphSpec) -> Result<Matroid, ZooError> {
    let n = spec.edges.len();
    let limit = guard::max_elements();
    if n > limit {
        return Err(ZooError::Matroid(MatroidError::GuardExceeded { n, limit }));
    }
    let rank = forest_size(spec, Subset::full(n));
    let bases = Subset::full(n)
        .subsets_of_size(rank)
        .into_iter()
        .filter(|s| forest_size(spec, *s) == rank);
    Ok(Matroid::from_bases(n, bases)?)
}

/// Matroid realized by a GF(2) matrix: bases are the full-rank column
/// selections of size `rank(A)`.
pub fn from_gf2_matrix(matrix: &Gf2Matrix) -> Result<Matroid, ZooError> {
    let n = matrix.cols();
    let limit = guard::max_elements();
    if n > limit {
        return Err(ZooError::Matroid(MatroidError::GuardExceeded { n, limit }));
    }
    let rank = matrix.rank();
    let bases = Subset::full(n)
        .subsets_of_size(rank)
        .into_iter()
        .filter(|s| matrix.rank_of_columns(*s) == rank);
    Ok(Matroid::from_bases(n, bases)?)
}

/// An ordered multiset of subsets of the ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetSystem {
    pub parts: Vec<Subset>,
}

impl SetSystem {
    pub fn new(parts: Vec<Subset>) -> Self {
        SetSystem { parts }
    }
}

/// Can the elements of `x` be matched to distinct parts, each element into a
/// part containing it? Kuhn's augmenting-path matching.
fn is_partial_transversal(system: &SetSystem, x: Subset) -> bool {
    let elements: Vec<usize> = x.elements().collect();
    if elements.len() > system.parts.len() {
        return false;
    }
    let mut part_of: Vec<Option<usize>> = vec![None; system.parts.len()];

    fn try_assign(
        system: &SetSystem,
        elements: &[usize],
        item: usize,
        part_of: &mut [Option<usize>],
        visited: &mut [bool],
    ) -> bool {
        for (j, part) in system.parts.iter().enumerate() {
            if visited[j] || !part.contains(elements[item]) {
                continue;
            }
            visited[j] = true;
            let free = match part_of[j] {
                None => true,
                Some(prev) => try_assign(system, elements, prev, part_of, visited),
            };
            if free {
                part_of[j] = Some(item);
                return true;
            }
        }
        false
    }

    for item in 0..elements.len() {
        let mut visited = vec![false; system.parts.len()];
        if !try_assign(system, &elements, item, &mut part_of, &mut visited) {
            return false;
        }
    }
    true
}

/// Transversal matroid of a set system: independent sets are the partial
/// transversals, bases the maximum ones.
pub fn transversal(system: &SetSystem, n: usize) -> Result<Matroid, ZooError> {
    let limit = guard::max_elements();
    if n > limit {
        return Err(ZooError::Matroid(MatroidError::GuardExceeded { n, limit }));
    }
    let full = Subset::full(n);
    if let Some(bad) = system.parts.iter().find(|p| !p.is_subset_of(full)) {
        return Err(ZooError::SpecInvalid(format!(
            "part {bad} is not a subset of the ground set"
        )));
    }
    // The rank is the largest matchable subset size; grow one greedily.
    let mut best = Subset::EMPTY;
    for e in full.elements() {
        if is_partial_transversal(system, best.with(e)) {
            best = best.with(e);
        }
    }
    let rank = best.len();
    let bases = full
        .subsets_of_size(rank)
        .into_iter()
        .filter(|s| is_partial_transversal(system, *s));
    Ok(Matroid::from_bases(n, bases)?)
}

/// One step of a monotone lattice path.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    East,
    North,
}

/// A pair of monotone lattice paths from the origin to `(east, north)`, the
/// lower one never rising above the upper one. Bases of the induced matroid
/// are the paths squeezed between them, encoded by their north-step positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePathSpec {
    east: usize,
    north: usize,
    lower: Vec<Step>,
    upper: Vec<Step>,
}

fn parse_steps(s: &str) -> Result<Vec<Step>, ZooError> {
    s.chars()
        .map(|c| match c {
            'E' | 'e' => Ok(Step::East),
            'N' | 'n' => Ok(Step::North),
            other => Err(ZooError::SpecInvalid(format!("unexpected step {other:?}"))),
        })
        .collect()
}

impl LatticePathSpec {
    /// Build from step strings over `{E, N}`; `lower` must stay weakly below
    /// `upper` and both must use exactly `east` E-steps and `north` N-steps.
    pub fn new(east: usize, north: usize, lower: &str, upper: &str) -> Result<Self, ZooError> {
        let lower = parse_steps(lower)?;
        let upper = parse_steps(upper)?;
        let len = east + north;
        for (name, path) in [("lower", &lower), ("upper", &upper)] {
            if path.len() != len {
                return Err(ZooError::SpecInvalid(format!(
                    "{name} path has {} steps, expected {len}",
                    path.len()
                )));
            }
            let norths = path.iter().filter(|s| **s == Step::North).count();
            if norths != north {
                return Err(ZooError::SpecInvalid(format!(
                    "{name} path has {norths} north steps, expected {north}"
                )));
            }
        }
        let mut lo = 0usize;
        let mut hi = 0usize;
        for i in 0..len {
            if lower[i] == Step::North {
                lo += 1;
            }
            if upper[i] == Step::North {
                hi += 1;
            }
            if lo > hi {
                return Err(ZooError::SpecInvalid(
                    "lower path rises above the upper path".into(),
                ));
            }
        }
        Ok(LatticePathSpec {
            east,
            north,
            lower,
            upper,
        })
    }

    pub fn east(&self) -> usize {
        self.east
    }

    pub fn north(&self) -> usize {
        self.north
    }

    pub fn ground_size(&self) -> usize {
        self.east + self.north
    }

    fn north_positions(path: &[Step]) -> Vec<usize> {
        path.iter()
            .enumerate()
            .filter(|(_, s)| **s == Step::North)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Interval `[lo_i, hi_i]` of admissible positions for the i-th north
    /// step: `lo` comes from the upper path, `hi` from the lower one.
    pub fn intervals(&self) -> Vec<(usize, usize)> {
        let his = Self::north_positions(&self.lower);
        let los = Self::north_positions(&self.upper);
        los.into_iter().zip(his).collect()
    }

    /// The intervals as a transversal presentation.
    pub fn interval_system(&self) -> SetSystem {
        SetSystem::new(
            self.intervals()
                .into_iter()
                .map(|(lo, hi)| Subset::from_elements(lo..=hi))
                .collect(),
        )
    }

    /// Does the path with north steps at `b` stay weakly between the two
    /// bounding paths?
    fn admits(&self, b: Subset) -> bool {
        let positions: Vec<usize> = b.elements().collect();
        positions.len() == self.north
            && self
                .intervals()
                .iter()
                .zip(&positions)
                .all(|(&(lo, hi), &p)| lo <= p && p <= hi)
    }
}

/// Lattice path matroid: bases are the monotone paths between the two
/// bounding paths. The path rule and the transversal matroid of the derived
/// intervals are both computed and must agree.
pub fn lattice_path(spec: &LatticePathSpec) -> Result<Matroid, ZooError> {
    let n = spec.ground_size();
    let limit = guard::max_elements();
    if n > limit {
        return Err(ZooError::Matroid(MatroidError::GuardExceeded { n, limit }));
    }
    let bases: Vec<Subset> = Subset::full(n)
        .subsets_of_size(spec.north)
        .into_iter()
        .filter(|b| spec.admits(*b))
        .collect();
    let by_paths = Matroid::from_bases(n, bases)?;
    let by_transversal = transversal(&spec.interval_system(), n)?;
    assert_eq!(
        by_paths.bases(),
        by_transversal.bases(),
        "path rule and interval transversal must give the same matroid"
    );
    Ok(by_paths)
}

/// Named catalog. `u_<n>_<r>` builds the uniform matroid; the other names are
/// the specific small matroids used in the examples and tests.
pub fn catalog(name: &str) -> Result<Matroid, ZooError> {
    match name {
        "m_star" => {
            // Two parallel edges 1 and 4 on one vertex pair, plus edges 2, 3
            // closing a triangle: bases are all pairs except {1,4}.
            let g = GraphSpec::new(3, vec![(1, 2), (2, 3), (3, 1), (1, 2)])?;
            let m = graphic(&g)?;
            assert_eq!(m.num_bases(), 5);
            Ok(m)
        }
        "m_k4" => {
            // Complete graph on four vertices; edges labeled so the triangles
            // are {1,2,5}, {2,3,6}, {3,4,5}, {1,4,6}.
            let g = GraphSpec::new(4, vec![(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4)])?;
            let m = graphic(&g)?;
            assert_eq!(m.num_bases(), 16);
            Ok(m)
        }
        "w3" => {
            // The rank-3 whirl: relax the triangle {3,4,5} of m_k4.
            let m = catalog("m_k4")?.relax(Subset::from_elements([3, 4, 5]))?;
            assert_eq!(m.num_bases(), 17);
            Ok(m)
        }
        "fano" => {
            let a = Gf2Matrix::from_rows(&["1000111", "0101011", "0011101"]).unwrap();
            let m = from_gf2_matrix(&a)?;
            assert_eq!(m.num_bases(), 28);
            Ok(m)
        }
        other => {
            if let Some(rest) = other.strip_prefix("u_") {
                let mut it = rest.split('_');
                if let (Some(n), Some(r), None) = (it.next(), it.next(), it.next()) {
                    if let (Ok(n), Ok(r)) = (n.parse(), r.parse()) {
                        return uniform(n, r);
                    }
                }
            }
            Err(ZooError::UnknownName(other.to_string()))
        }
    }
}

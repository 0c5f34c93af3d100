//! The matroid base graph: bases as vertices, adjacency when the symmetric
//! difference has size two. This is the 1-skeleton of the base polytope.
//!
//! Distance-two pairs are classified by the induced subgraph on their common
//! neighbors (two isolated vertices, a two-edge path, or a four-cycle), and
//! binarity is detected by the absence of the four-cycle shape.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::guard;
use crate::matroid::Matroid;
use crate::subset::Subset;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("{0} is not a vertex of this base graph")]
    VertexNotFound(Subset),
    #[error("{0} and {1} are at distance {2}, not 2")]
    NotDistanceTwo(Subset, Subset, usize),
    #[error("common neighborhood of {0} and {1} has an unrecognized shape")]
    UnrecognizedShape(Subset, Subset),
    #[error("base family of size {bases} exceeds the graph cap {limit}")]
    GuardExceeded { bases: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NeighborhoodKind {
    Square,
    Pyramid,
    Octahedron,
}

/// Shape of the common neighborhood of a distance-two pair, together with the
/// common neighbors realizing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodClass {
    pub kind: NeighborhoodKind,
    pub witness: Vec<Subset>,
}

/// Base graph of a matroid. Vertices are index-aligned with the canonical
/// base order of the matroid it was built from.
pub struct BaseGraph {
    bases: Vec<Subset>,
    adjacency: Vec<Vec<usize>>,
    index: HashMap<Subset, usize>,
    edge_count: usize,
    // Per-source BFS layerings, cached only for large graphs.
    distance_cache: Mutex<HashMap<usize, Arc<Vec<u32>>>>,
}

const DISTANCE_CACHE_THRESHOLD: usize = 1000;

impl BaseGraph {
    pub fn build(m: &Matroid) -> Result<BaseGraph, GraphError> {
        let bases = m.bases().to_vec();
        let limit = guard::max_bases();
        if bases.len() > limit {
            return Err(GraphError::GuardExceeded {
                bases: bases.len(),
                limit,
            });
        }
        let mut adjacency = vec![Vec::new(); bases.len()];
        let mut edge_count = 0;
        for i in 0..bases.len() {
            for j in i + 1..bases.len() {
                if bases[i].symmetric_difference_len(bases[j]) == 2 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                    edge_count += 1;
                }
            }
        }
        let index = bases.iter().copied().enumerate().map(|(i, b)| (b, i)).collect();
        let graph = BaseGraph {
            bases,
            adjacency,
            index,
            edge_count,
            distance_cache: Mutex::new(HashMap::new()),
        };
        assert!(
            graph.is_connected(),
            "the base graph of a matroid is connected"
        );
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.bases.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn bases(&self) -> &[Subset] {
        &self.bases
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].len()
    }

    /// All edges as index pairs `(i, j)` with `i < j`, in canonical order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, nbrs)| nbrs.iter().filter(move |&&j| i < j).map(move |&j| (i, j)))
    }

    pub fn index_of(&self, b: Subset) -> Option<usize> {
        self.index.get(&b).copied()
    }

    fn is_connected(&self) -> bool {
        if self.bases.is_empty() {
            return true;
        }
        self.layering_from(0).iter().all(|&d| d != u32::MAX)
    }

    fn layering_from(&self, source: usize) -> Arc<Vec<u32>> {
        if self.bases.len() >= DISTANCE_CACHE_THRESHOLD {
            let cache = self.distance_cache.lock().unwrap();
            if let Some(hit) = cache.get(&source) {
                return Arc::clone(hit);
            }
        }
        let mut dist = vec![u32::MAX; self.bases.len()];
        dist[source] = 0;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adjacency[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        let dist = Arc::new(dist);
        if self.bases.len() >= DISTANCE_CACHE_THRESHOLD {
            self.distance_cache
                .lock()
                .unwrap()
                .insert(source, Arc::clone(&dist));
        }
        dist
    }

    /// Shortest-path distance between two bases.
    pub fn distance(&self, x: Subset, y: Subset) -> Result<usize, GraphError> {
        let i = self.index_of(x).ok_or(GraphError::VertexNotFound(x))?;
        let j = self.index_of(y).ok_or(GraphError::VertexNotFound(y))?;
        Ok(self.layering_from(i)[j] as usize)
    }

    fn common_neighbors(&self, i: usize, j: usize) -> Vec<usize> {
        self.adjacency[i]
            .iter()
            .filter(|v| self.adjacency[j].contains(v))
            .copied()
            .collect()
    }

    fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].contains(&j)
    }

    fn distance_two_indices(&self, x: Subset, y: Subset) -> Result<(usize, usize), GraphError> {
        let d = self.distance(x, y)?;
        if d != 2 {
            return Err(GraphError::NotDistanceTwo(x, y, d));
        }
        Ok((self.index_of(x).unwrap(), self.index_of(y).unwrap()))
    }

    /// Classify the common neighborhood of a distance-two pair by the induced
    /// subgraph on the common neighbors: two nonadjacent vertices form a
    /// square, three vertices with one apex adjacent to the other two form a
    /// pyramid, four vertices inducing a four-cycle form an octahedron.
    pub fn classify_common_neighborhood(
        &self,
        x: Subset,
        y: Subset,
    ) -> Result<NeighborhoodClass, GraphError> {
        let (i, j) = self.distance_two_indices(x, y)?;
        let common = self.common_neighbors(i, j);
        let witness: Vec<Subset> = common.iter().map(|&v| self.bases[v]).collect();
        let induced_edges: Vec<(usize, usize)> = common
            .iter()
            .enumerate()
            .flat_map(|(a, &u)| {
                common[a + 1..]
                    .iter()
                    .filter(move |&&v| self.adjacent(u, v))
                    .map(move |&v| (u, v))
            })
            .collect();
        let kind = match (common.len(), induced_edges.len()) {
            (2, 0) => NeighborhoodKind::Square,
            (3, 2) => {
                // The apex must be the vertex on both induced edges.
                let (a, b) = (induced_edges[0], induced_edges[1]);
                let shared = [a.0, a.1].iter().any(|v| *v == b.0 || *v == b.1);
                if shared {
                    NeighborhoodKind::Pyramid
                } else {
                    return Err(GraphError::UnrecognizedShape(x, y));
                }
            }
            (4, 4) => {
                // A four-cycle: every vertex on exactly two induced edges.
                let all_degree_two = common.iter().all(|&v| {
                    induced_edges
                        .iter()
                        .filter(|(a, b)| *a == v || *b == v)
                        .count()
                        == 2
                });
                if all_degree_two {
                    NeighborhoodKind::Octahedron
                } else {
                    return Err(GraphError::UnrecognizedShape(x, y));
                }
            }
            _ => return Err(GraphError::UnrecognizedShape(x, y)),
        };
        Ok(NeighborhoodClass { kind, witness })
    }

    /// All unordered pairs of nonadjacent common neighbors of a distance-two
    /// pair; each pair closes a chordless four-cycle through `x` and `y`.
    pub fn empty_squares(
        &self,
        x: Subset,
        y: Subset,
    ) -> Result<Vec<(Subset, Subset)>, GraphError> {
        let (i, j) = self.distance_two_indices(x, y)?;
        let common = self.common_neighbors(i, j);
        let mut out = Vec::new();
        for (a, &u) in common.iter().enumerate() {
            for &v in &common[a + 1..] {
                if !self.adjacent(u, v) {
                    let (bu, bv) = (self.bases[u], self.bases[v]);
                    out.push(if bu <= bv { (bu, bv) } else { (bv, bu) });
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// All distance-two pairs, as index pairs `(i, j)` with `i < j`.
    /// Distance two means nonadjacent with a common neighbor.
    pub fn distance_two_pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.bases.len() {
            for j in i + 1..self.bases.len() {
                if !self.adjacent(i, j) && !self.common_neighbors(i, j).is_empty() {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// A matroid is binary exactly when no distance-two pair of its base graph
/// has an octahedral common neighborhood.
pub fn is_binary(m: &Matroid) -> Result<bool, GraphError> {
    let g = BaseGraph::build(m)?;
    for (i, j) in g.distance_two_pairs() {
        let class = g.classify_common_neighborhood(g.bases[i], g.bases[j])?;
        if class.kind == NeighborhoodKind::Octahedron {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zoo;

    fn set(elems: &[usize]) -> Subset {
        Subset::from_elements(elems.iter().copied())
    }

    #[test]
    fn u42_is_the_octahedron() {
        let m = zoo::uniform(4, 2).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 12);
        assert!((0..6).all(|i| g.degree(i) == 4));
    }

    #[test]
    fn single_base_graph() {
        let m = Matroid::from_bases(3, [set(&[1, 2])]).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn four_cycle_from_direct_sum() {
        let u21 = zoo::uniform(2, 1).unwrap();
        let m = u21.direct_sum(&u21).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 4));
        assert!((0..4).all(|i| g.degree(i) == 2));
    }

    #[test]
    fn distances_in_u42() {
        let m = zoo::uniform(4, 2).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        assert_eq!(g.distance(set(&[1, 2]), set(&[1, 2])).unwrap(), 0);
        assert_eq!(g.distance(set(&[1, 2]), set(&[1, 3])).unwrap(), 1);
        assert_eq!(g.distance(set(&[1, 2]), set(&[3, 4])).unwrap(), 2);
        assert_eq!(
            g.distance(set(&[1, 2]), set(&[5, 6])).unwrap_err(),
            GraphError::VertexNotFound(set(&[5, 6]))
        );
    }

    #[test]
    fn classification_examples() {
        let m = zoo::uniform(4, 2).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        let class = g
            .classify_common_neighborhood(set(&[1, 2]), set(&[3, 4]))
            .unwrap();
        assert_eq!(class.kind, NeighborhoodKind::Octahedron);
        assert_eq!(class.witness.len(), 4);

        let u21 = zoo::uniform(2, 1).unwrap();
        let sum = u21.direct_sum(&u21).unwrap();
        let g = BaseGraph::build(&sum).unwrap();
        let class = g
            .classify_common_neighborhood(set(&[1, 3]), set(&[2, 4]))
            .unwrap();
        assert_eq!(class.kind, NeighborhoodKind::Square);

        assert!(matches!(
            g.classify_common_neighborhood(set(&[1, 3]), set(&[1, 4])),
            Err(GraphError::NotDistanceTwo(_, _, 1))
        ));
    }

    #[test]
    fn empty_squares_in_u42() {
        let m = zoo::uniform(4, 2).unwrap();
        let g = BaseGraph::build(&m).unwrap();
        let squares = g.empty_squares(set(&[1, 2]), set(&[3, 4])).unwrap();
        assert_eq!(
            squares,
            vec![
                (set(&[1, 3]), set(&[2, 4])),
                (set(&[1, 4]), set(&[2, 3])),
            ]
        );
    }

    #[test]
    fn binary_detection() {
        assert!(!is_binary(&zoo::uniform(4, 2).unwrap()).unwrap());
        assert!(is_binary(&zoo::catalog("m_k4").unwrap()).unwrap());
        assert!(is_binary(&zoo::catalog("fano").unwrap()).unwrap());
        assert!(is_binary(&zoo::catalog("m_star").unwrap()).unwrap());
    }

    #[test]
    fn fano_neighborhoods_never_octahedral() {
        let m = zoo::catalog("fano").unwrap();
        let g = BaseGraph::build(&m).unwrap();
        for (i, j) in g.distance_two_pairs() {
            let class = g
                .classify_common_neighborhood(g.bases()[i], g.bases()[j])
                .unwrap();
            assert_ne!(class.kind, NeighborhoodKind::Octahedron);
        }
    }
}

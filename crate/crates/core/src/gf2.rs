//! Linear algebra over the two-element field, on bit-packed columns.
//!
//! Besides realizing matroids from explicit matrices, this module can search
//! for a representation of a given matroid. The search pins the columns of
//! one base to the identity (any representation can be brought to that shape
//! by a change of basis), enumerates the remaining columns and checks the
//! full base family, so a returned matrix is a verified witness and an empty
//! result is a proof of non-representability.

use crate::matroid::Matroid;
use crate::subset::Subset;

/// A matrix over GF(2) with `rows <= 32`, stored column-major; each column is
/// a bitmask with bit `i` for row `i`.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    columns: Vec<u32>,
}

impl Gf2Matrix {
    pub fn new(rows: usize, columns: Vec<u32>) -> Self {
        assert!(rows <= 32);
        let mask = if rows == 32 { u32::MAX } else { (1 << rows) - 1 };
        assert!(columns.iter().all(|c| c & !mask == 0), "entry outside matrix");
        Gf2Matrix { rows, columns }
    }

    /// Parse from row bit-strings such as `["101", "011"]`.
    pub fn from_rows(rows: &[&str]) -> Option<Self> {
        let r = rows.len();
        let n = rows.first()?.len();
        if rows.iter().any(|row| row.len() != n) {
            return None;
        }
        let mut columns = vec![0u32; n];
        for (i, row) in rows.iter().enumerate() {
            for (j, ch) in row.chars().enumerate() {
                match ch {
                    '1' => columns[j] |= 1 << i,
                    '0' => {}
                    _ => return None,
                }
            }
        }
        Some(Gf2Matrix::new(r, columns))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[u32] {
        &self.columns
    }

    pub fn row_strings(&self) -> Vec<String> {
        (0..self.rows)
            .map(|i| {
                self.columns
                    .iter()
                    .map(|c| if c >> i & 1 == 1 { '1' } else { '0' })
                    .collect()
            })
            .collect()
    }

    /// Rank of the whole matrix.
    pub fn rank(&self) -> usize {
        rank_of_columns(self.columns.iter().copied())
    }

    /// Rank of the column submatrix selected by 1-based column labels.
    pub fn rank_of_columns(&self, selection: Subset) -> usize {
        rank_of_columns(selection.elements().map(|e| self.columns[e - 1]))
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Gf2Matrix[{}]", self.row_strings().join("; "))
    }
}

fn rank_of_columns<I: IntoIterator<Item = u32>>(columns: I) -> usize {
    let mut pivots: Vec<u32> = Vec::new();
    for mut v in columns {
        for p in &pivots {
            let low = 1 << p.trailing_zeros();
            if v & low != 0 {
                v ^= p;
            }
        }
        if v != 0 {
            pivots.push(v);
        }
    }
    pivots.len()
}

/// Does `matrix` represent `m`? True when its invertible column selections of
/// full rank are exactly the bases.
pub fn represents(m: &Matroid, matrix: &Gf2Matrix) -> bool {
    if matrix.cols() != m.n() {
        return false;
    }
    if matrix.rank() != m.rank() {
        return false;
    }
    for b in Subset::full(m.n()).subsets_of_size(m.rank()) {
        let invertible = matrix.rank_of_columns(b) == m.rank();
        if invertible != m.is_base(b) {
            return false;
        }
    }
    true
}

/// Exhaustive search for a GF(2) representation of `m`.
///
/// The columns of the first base are fixed to the identity and the remaining
/// `n - r` columns range over all vectors (zero columns for loops and equal
/// columns for parallel elements included); candidates are pruned by the rank
/// of the assigned prefix and survivors are checked against the full family.
pub fn representation_search(m: &Matroid) -> Option<Gf2Matrix> {
    let r = m.rank();
    let n = m.n();
    if r > 32 {
        return None;
    }
    let first_base = m.bases()[0];
    let mut columns = vec![0u32; n];
    for (i, e) in first_base.elements().enumerate() {
        columns[e - 1] = 1 << i;
    }
    let free: Vec<usize> = Subset::full(n).minus(first_base).elements().collect();
    let vector_count: u64 = 1u64 << r;

    // Prune a fresh column: every fully assigned r-subset through `e` must be
    // invertible exactly when it is a base.
    fn consistent(m: &Matroid, columns: &[u32], assigned: Subset, e: usize) -> bool {
        if m.rank() == 0 {
            return true;
        }
        for s in assigned.subsets_of_size(m.rank() - 1) {
            let t = s.with(e);
            let invertible =
                rank_of_columns(t.elements().map(|x| columns[x - 1])) == m.rank();
            if invertible != m.is_base(t) {
                return false;
            }
        }
        true
    }

    fn assign(
        m: &Matroid,
        columns: &mut Vec<u32>,
        free: &[usize],
        idx: usize,
        assigned: Subset,
        vector_count: u64,
    ) -> bool {
        if idx == free.len() {
            let candidate = Gf2Matrix::new(m.rank(), columns.clone());
            return represents(m, &candidate);
        }
        let e = free[idx];
        for v in 0..vector_count {
            columns[e - 1] = v as u32;
            if consistent(m, columns, assigned, e)
                && assign(m, columns, free, idx + 1, assigned.with(e), vector_count)
            {
                return true;
            }
        }
        columns[e - 1] = 0;
        false
    }

    if assign(m, &mut columns, &free, 0, first_base, vector_count) {
        Some(Gf2Matrix::new(r, columns))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_parse() {
        let m = Gf2Matrix::from_rows(&["100", "010", "001"]).unwrap();
        assert_eq!(m.rank(), 3);
        let singular = Gf2Matrix::from_rows(&["110", "110"]).unwrap();
        assert_eq!(singular.rank(), 1);
        assert!(Gf2Matrix::from_rows(&["10", "1"]).is_none());
        assert!(Gf2Matrix::from_rows(&["12"]).is_none());
    }

    #[test]
    fn row_strings_roundtrip() {
        let rows = ["1000111", "0101011", "0011101"];
        let m = Gf2Matrix::from_rows(&rows).unwrap();
        assert_eq!(m.row_strings(), rows);
    }

    #[test]
    fn representation_found_for_uniform_2_1() {
        let m = Matroid::from_bases(2, [Subset::singleton(1), Subset::singleton(2)]).unwrap();
        let rep = representation_search(&m).expect("two parallel elements are representable");
        assert!(represents(&m, &rep));
    }

    #[test]
    fn no_representation_for_u42() {
        let m = Matroid::from_bases(4, Subset::full(4).subsets_of_size(2)).unwrap();
        assert!(representation_search(&m).is_none());
    }
}

//! Exact rational linear algebra on coordinate vectors over the blade basis.
//!
//! Everything is plain fraction-arithmetic Gaussian elimination. Subspaces are
//! kept in reduced row-echelon form at all times, so two equal subspaces have
//! byte-identical representations and every report is reproducible.

use num_traits::{One, Zero};

use crate::{Error, Rat};

/// A dense rectangular matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zero(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self, Error> {
        let cols = rows.first().map(|r| r.len()).unwrap_or(0);
        for (i, r) in rows.iter().enumerate() {
            if r.len() != cols {
                return Err(Error::RaggedInput {
                    row: i,
                    got: r.len(),
                    expected: cols,
                });
            }
        }
        Ok(RationalMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rat) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Matrix product self * other.
    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        let v = out.get(r, c) + a * b;
                        out.set(r, c, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>, Error> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![Rat::zero(); self.rows];
        for r in 0..self.rows {
            let mut acc = Rat::zero();
            for c in 0..self.cols {
                let a = self.get(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    acc += a * &v[c];
                }
            }
            out[r] = acc;
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> RationalMatrix {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn add(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                got: other.rows * other.cols,
            });
        }
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &RationalMatrix) -> Result<RationalMatrix, Error> {
        self.add(&other.scale(&crate::rat(-1)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    /// Row-major flattening, used when endomorphisms become coordinate vectors.
    pub fn flatten(&self) -> Vec<Rat> {
        self.data.clone()
    }
}

/// A subspace of Q^ambient held as a canonical reduced row-echelon basis:
/// rows nonzero, pivots strictly increasing with pivot entry 1, pivot columns
/// zero in every other row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn empty(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        let mut s = Subspace::empty(ambient);
        for i in 0..ambient {
            let mut v = vec![Rat::zero(); ambient];
            v[i] = Rat::one();
            s.rows.push(v);
            s.pivots.push(i);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis_rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.rows.clone()).expect("RREF rows are rectangular")
    }

    /// Reduce `v` against the basis in place; afterwards `v` is zero at every
    /// pivot column iff... it always is. `v` is zero iff it was in the span.
    pub fn reduce_in_place(&self, v: &mut [Rat]) {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut v[p], Rat::zero());
            for (j, rj) in row.iter().enumerate() {
                if j != p && !rj.is_zero() {
                    v[j] -= &c * rj;
                }
            }
        }
    }

    /// Insert a vector, keeping the RREF canonical. Returns true if the
    /// dimension grew.
    pub fn insert(&mut self, mut v: Vec<Rat>) -> Result<bool, Error> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        self.reduce_in_place(&mut v);
        let pivot = match v.iter().position(|x| !x.is_zero()) {
            Some(p) => p,
            None => return Ok(false),
        };
        let lead = v[pivot].clone();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x /= &lead;
            }
        }
        // clear the new pivot column from the existing rows
        for row in self.rows.iter_mut() {
            if row[pivot].is_zero() {
                continue;
            }
            let c = std::mem::replace(&mut row[pivot], Rat::zero());
            for (j, vj) in v.iter().enumerate() {
                if j != pivot && !vj.is_zero() {
                    row[j] -= &c * vj;
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        Ok(true)
    }

    pub fn contains(&self, v: &[Rat]) -> Result<bool, Error> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: v.len(),
            });
        }
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        Ok(w.iter().all(|x| x.is_zero()))
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, Error> {
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Span of self and other.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, Error> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        let mut out = self.clone();
        for row in &other.rows {
            out.insert(row.clone())?;
        }
        Ok(out)
    }

    /// Orthogonal complement under the standard dot product. Positive
    /// definiteness over Q makes this an involution, which is what the
    /// intersection routine relies on.
    pub fn orthogonal_complement(&self) -> Subspace {
        kernel(&self.basis_matrix_with_ambient())
    }

    fn basis_matrix_with_ambient(&self) -> RationalMatrix {
        if self.rows.is_empty() {
            RationalMatrix::zero(0, self.ambient)
        } else {
            self.basis_matrix()
        }
    }
}

/// Canonical RREF basis of the span of the given vectors.
pub fn rref_span(vectors: &[Vec<Rat>], ambient: usize) -> Result<Subspace, Error> {
    let mut s = Subspace::empty(ambient);
    for (i, v) in vectors.iter().enumerate() {
        if v.len() != ambient {
            return Err(Error::RaggedInput {
                row: i,
                got: v.len(),
                expected: ambient,
            });
        }
        s.insert(v.clone())?;
    }
    Ok(s)
}

/// Canonical basis of { v : Mv = 0 }.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    kernel_of_rows(m.row_vectors(), m.cols())
}

/// Kernel of the linear map whose equations are the given rows.
pub fn kernel_of_rows(rows: Vec<Vec<Rat>>, cols: usize) -> Subspace {
    let rref = rref_span(&rows, cols).expect("equation rows are rectangular");
    let pivot_set: Vec<bool> = {
        let mut v = vec![false; cols];
        for &p in rref.pivots() {
            v[p] = true;
        }
        v
    };
    let mut basis = Vec::new();
    for j in 0..cols {
        if pivot_set[j] {
            continue;
        }
        let mut w = vec![Rat::zero(); cols];
        w[j] = Rat::one();
        for (row, &p) in rref.basis_rows().iter().zip(rref.pivots()) {
            if !row[j].is_zero() {
                w[p] = -row[j].clone();
            }
        }
        basis.push(w);
    }
    rref_span(&basis, cols).expect("kernel vectors are rectangular")
}

/// Intersection of two subspaces via double orthogonal complement.
pub fn intersect(s: &Subspace, t: &Subspace) -> Result<Subspace, Error> {
    if s.ambient_dim() != t.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            got: t.ambient_dim(),
        });
    }
    let perp = s.orthogonal_complement().sum(&t.orthogonal_complement())?;
    Ok(perp.orthogonal_complement())
}

/// Vectors of S whose classes form a basis of S/T, chosen pivot-greedily from
/// S's RREF rows in blade (column) order. Requires T to be a subspace of S.
pub fn complement_reps(s: &Subspace, t: &Subspace) -> Result<Vec<Vec<Rat>>, Error> {
    if s.ambient_dim() != t.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            got: t.ambient_dim(),
        });
    }
    if !s.contains_subspace(t)? {
        return Err(Error::NotSubspace);
    }
    let mut acc = t.clone();
    let mut reps = Vec::new();
    for row in s.basis_rows() {
        if acc.insert(row.clone())? {
            reps.push(row.clone());
        }
    }
    debug_assert_eq!(reps.len(), s.dim() - t.dim());
    Ok(reps)
}

/// Express `v` as a linear combination of the given spanning rows, if it lies
/// in their span. Returns the coefficient vector.
pub fn express(rows: &[Vec<Rat>], v: &[Rat]) -> Option<Vec<Rat>> {
    let ambient = v.len();
    let k = rows.len();
    let mut aug = Subspace::empty(ambient + k);
    for (i, row) in rows.iter().enumerate() {
        debug_assert_eq!(row.len(), ambient);
        let mut w = row.clone();
        w.resize(ambient + k, Rat::zero());
        w[ambient + i] = Rat::one();
        aug.insert(w).expect("augmented rows are rectangular");
    }
    let mut w = v.to_vec();
    w.resize(ambient + k, Rat::zero());
    aug.reduce_in_place(&mut w);
    if w[..ambient].iter().any(|x| !x.is_zero()) {
        return None;
    }
    Some(w[ambient..].iter().map(|x| -x).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn v(xs: &[i64]) -> Vec<Rat> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn rref_span_cases() {
        let s = rref_span(&[v(&[1, 0]), v(&[1, 1])], 2).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis_rows(), &[v(&[1, 0]), v(&[0, 1])]);

        let empty = rref_span(&[], 2).unwrap();
        assert_eq!(empty.dim(), 0);

        let line = rref_span(&[v(&[2, 4]), v(&[1, 2])], 2).unwrap();
        assert_eq!(line.dim(), 1);
        assert_eq!(line.basis_rows(), &[v(&[1, 2])]);
    }

    #[test]
    fn rref_is_canonical_under_shuffle() {
        let a = rref_span(&[v(&[1, 2, 3]), v(&[0, 1, 1]), v(&[1, 3, 4])], 3).unwrap();
        let b = rref_span(&[v(&[1, 3, 4]), v(&[1, 2, 3]), v(&[0, 1, 1])], 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn contains_cases() {
        let s = rref_span(&[v(&[1, 0])], 2).unwrap();
        assert!(s.contains(&v(&[3, 0])).unwrap());
        assert!(!s.contains(&v(&[0, 1])).unwrap());
        assert!(s.contains(&v(&[1])).is_err());
    }

    #[test]
    fn kernel_cases() {
        assert_eq!(kernel(&RationalMatrix::zero(2, 2)).dim(), 2);
        assert_eq!(kernel(&RationalMatrix::identity(2)).dim(), 0);
        let m = RationalMatrix::from_rows(vec![v(&[1, 1])]).unwrap();
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis_rows(), &[v(&[1, -1])]);
    }

    #[test]
    fn intersect_cases() {
        let e12 = rref_span(&[v(&[1, 0, 0]), v(&[0, 1, 0])], 3).unwrap();
        let e23 = rref_span(&[v(&[0, 1, 0]), v(&[0, 0, 1])], 3).unwrap();
        let meet = intersect(&e12, &e23).unwrap();
        assert_eq!(meet.dim(), 1);
        assert_eq!(meet.basis_rows(), &[v(&[0, 1, 0])]);
        assert_eq!(intersect(&e12, &e12).unwrap(), e12);
    }

    #[test]
    fn complement_reps_cases() {
        let plane = Subspace::full(2);
        let line = rref_span(&[v(&[1, 0])], 2).unwrap();
        let reps = complement_reps(&plane, &line).unwrap();
        assert_eq!(reps, vec![v(&[0, 1])]);
        assert!(complement_reps(&line, &line).unwrap().is_empty());
        // T not inside S
        let other = rref_span(&[v(&[0, 1])], 2).unwrap();
        assert!(matches!(
            complement_reps(&line, &other),
            Err(Error::NotSubspace)
        ));
    }

    #[test]
    fn express_recovers_coefficients() {
        let rows = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        let coeffs = express(&rows, &v(&[2, 3, 5])).unwrap();
        assert_eq!(coeffs, v(&[2, 3]));
        assert!(express(&rows, &v(&[0, 0, 1])).is_none());
    }

    #[test]
    fn dimension_formula_smoke() {
        let s = rref_span(&[v(&[1, 0, 0, 1]), v(&[0, 1, 0, 0])], 4).unwrap();
        let t = rref_span(&[v(&[1, 0, 0, 1]), v(&[0, 0, 1, 0])], 4).unwrap();
        let sum = s.sum(&t).unwrap();
        let meet = intersect(&s, &t).unwrap();
        assert_eq!(s.dim() + t.dim(), sum.dim() + meet.dim());
    }
}

use serde_json::{json, Value};

use super::matrix::{dot, vector_from_json, vector_to_json, Matrix, Vector};
use super::{nullspace_vectors, rref};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A linear subspace of `S^ambient`, stored as the nonzero rows of its RREF.
///
/// Because the stored basis is the reduced row-echelon normal form, derived
/// equality is subspace equality.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace<S: Scalar> {
    ambient: usize,
    basis: Vec<Vector<S>>,
}

impl<S: Scalar> Subspace<S> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: (0..ambient).map(|i| super::unit_vector(ambient, i)).collect() }
    }

    /// Span of arbitrary (possibly dependent) vectors.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vector<S>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} in ambient dimension {ambient}",
                v.len()
            )));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let m = Matrix::from_rows(vectors, ambient)?;
        let ech = rref(&m);
        let basis = (0..ech.rank).map(|i| ech.matrix.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    /// Span of the coordinate vectors `X_i` for the given 1-based indices.
    pub fn coordinate_span(ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices.iter().map(|&i| super::unit_vector(ambient, i - 1)).collect();
        Self::from_vectors(ambient, vectors).expect("unit vectors have ambient length")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector<S>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Pivot column of each basis row.
    fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.basis.iter().map(|row| row.iter().position(|x| !x.is_zero()).expect("basis rows are nonzero"))
    }

    pub fn contains(&self, v: &[S]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        let mut rest = v.to_vec();
        for (row, p) in self.basis.iter().zip(self.pivots()) {
            let c = rest[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, x) in rest.iter_mut().zip(row) {
                if !x.is_zero() {
                    *r = r.clone() - &(c.clone() * x);
                }
            }
        }
        rest.iter().all(S::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace<S>) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace<S>) -> Result<Self> {
        self.check_ambient(other)?;
        let mut vectors = self.basis.clone();
        vectors.extend(other.basis.iter().cloned());
        Self::from_vectors(self.ambient, vectors)
    }

    /// Vectors `y` with `v · y = 0` for every `v` in the subspace (standard dot product).
    pub fn annihilator(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient);
        }
        let m = Matrix::from_rows(self.basis.clone(), self.ambient).expect("basis rows");
        Self::from_vectors(self.ambient, nullspace_vectors(&m)).expect("nullspace vectors")
    }

    pub fn intersection(&self, other: &Subspace<S>) -> Result<Self> {
        self.check_ambient(other)?;
        let mut rows = self.annihilator().basis;
        rows.extend(other.annihilator().basis);
        if rows.is_empty() {
            return Ok(Self::full(self.ambient));
        }
        let m = Matrix::from_rows(rows, self.ambient)?;
        Self::from_vectors(self.ambient, nullspace_vectors(&m))
    }

    /// Coordinates of `v` with respect to the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[S]) -> Option<Vector<S>> {
        if !self.contains(v) {
            return None;
        }
        // RREF basis: the coordinate on row i is v at the row's pivot column.
        Some(self.pivots().map(|p| v[p].clone()).collect())
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Subspace<T> {
        let vectors = self.basis.iter().map(|v| v.iter().map(&f).collect()).collect();
        Subspace::from_vectors(self.ambient, vectors).expect("same ambient dimension")
    }

    pub fn is_orthogonal_to(&self, other: &Subspace<S>, gram: &Matrix<S>) -> bool {
        self.basis.iter().all(|x| {
            let gx = gram.mul_vec(x).expect("gram matches ambient");
            other.basis.iter().all(|y| dot(&gx, y).is_zero())
        })
    }

    fn check_ambient(&self, other: &Subspace<S>) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!("ambient dimensions {} and {}", self.ambient, other.ambient)));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({ "basis": self.basis.iter().map(|v| vector_to_json(v)).collect::<Vec<_>>() })
    }

    pub fn from_json(value: &Value, ambient: usize) -> Result<Self> {
        let basis = value
            .get("basis")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("subalgebra JSON needs a `basis` array".into()))?;
        let vectors = basis.iter().map(vector_from_json).collect::<Result<Vec<_>>>()?;
        Self::from_vectors(ambient, vectors)
    }
}

//! Lie algebras given by structure constants.
//!
//! Basis indices in public reports (violations, JSON) are 1-based, matching the
//! `X_1, …, X_n` naming; vector coordinates are ordinary 0-based slices.

mod quotient;

pub use quotient::{center_projection_check, split_quotient, CenterProjectionViolation, SplitQuotient};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{
    is_zero_vec, nullspace_vectors, unit_vector, vector_from_json, vector_to_json, Matrix, Subspace, Vector,
};
use crate::scalar::Scalar;
use crate::verdict::Verdict;

/// Finite-dimensional Lie algebra stored by the brackets `[X_i, X_j]`, `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebra<S: Scalar> {
    dim: usize,
    // 0-based (i, j) with i < j; zero brackets are never stored
    brackets: BTreeMap<(usize, usize), Vector<S>>,
    graded: bool,
}

/// `deg(y)` for the grading filtration; the zero vector has infinite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DegreeValue {
    Finite(usize),
    Infinity,
}

impl PartialOrd for DegreeValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DegreeValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DegreeValue::Infinity, DegreeValue::Infinity) => Ordering::Equal,
            (DegreeValue::Infinity, _) => Ordering::Greater,
            (_, DegreeValue::Infinity) => Ordering::Less,
            (DegreeValue::Finite(a), DegreeValue::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for DegreeValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeValue::Finite(k) => write!(f, "{k}"),
            DegreeValue::Infinity => write!(f, "inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiViolation<S: Scalar> {
    /// 1-based basis indices `i < j < k`.
    pub triple: (usize, usize, usize),
    /// `[X_i,[X_j,X_k]] + [X_j,[X_k,X_i]] + [X_k,[X_i,X_j]]`
    pub residual: Vector<S>,
}

/// 1-based pair `(i, j)` whose bracket leaves `V_{i+j}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GradingViolation {
    pub i: usize,
    pub j: usize,
}

impl<S: Scalar> LieAlgebra<S> {
    pub fn new(dim: usize, graded: bool) -> Self {
        LieAlgebra { dim, brackets: BTreeMap::new(), graded }
    }

    pub fn abelian(dim: usize) -> Self {
        Self::new(dim, true)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_graded(&self) -> bool {
        self.graded
    }

    pub fn set_graded(&mut self, graded: bool) {
        self.graded = graded;
    }

    /// Sets `[X_i, X_j]` (1-based) to the given coordinate vector; `[X_j, X_i]` follows by antisymmetry.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector<S>) -> Result<()> {
        if i == 0 || j == 0 || i > self.dim || j > self.dim {
            return Err(Error::DimensionMismatch(format!("basis index ({i}, {j}) outside 1..={}", self.dim)));
        }
        if value.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket value of length {} in dimension {}",
                value.len(),
                self.dim
            )));
        }
        let (a, b, value) = match i.cmp(&j) {
            Ordering::Less => (i - 1, j - 1, value),
            Ordering::Greater => (j - 1, i - 1, value.into_iter().map(|x| -x).collect()),
            Ordering::Equal if is_zero_vec(&value) => return Ok(()),
            Ordering::Equal => {
                return Err(Error::Parse(format!("[X{i}, X{i}] must vanish")));
            }
        };
        if is_zero_vec(&value) {
            self.brackets.remove(&(a, b));
        } else {
            self.brackets.insert((a, b), value);
        }
        Ok(())
    }

    /// Sets `[X_i, X_j] = c · X_k` (all 1-based).
    pub fn set_bracket_term(&mut self, i: usize, j: usize, k: usize, c: S) -> Result<()> {
        if k == 0 || k > self.dim {
            return Err(Error::DimensionMismatch(format!("basis index {k} outside 1..={}", self.dim)));
        }
        let mut v = vec![S::zero(); self.dim];
        v[k - 1] = c;
        self.set_bracket(i, j, v)
    }

    /// Coordinates of `[X_i, X_j]` for 0-based indices.
    pub fn structure(&self, i: usize, j: usize) -> Vector<S> {
        match i.cmp(&j) {
            Ordering::Less => self.brackets.get(&(i, j)).cloned(),
            Ordering::Greater => self.brackets.get(&(j, i)).map(|v| v.iter().map(|x| -x.clone()).collect()),
            Ordering::Equal => None,
        }
        .unwrap_or_else(|| vec![S::zero(); self.dim])
    }

    /// Nonzero brackets `[X_i, X_j]`, `i < j`, as 1-based pairs in lexicographic order.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = ((usize, usize), &Vector<S>)> {
        self.brackets.iter().map(|(&(i, j), v)| ((i + 1, j + 1), v))
    }

    pub fn bracket(&self, x: &[S], y: &[S]) -> Result<Vector<S>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of lengths {} and {} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![S::zero(); self.dim];
        for (&(i, j), v) in &self.brackets {
            let c = x[i].clone() * &y[j] - x[j].clone() * &y[i];
            if c.is_zero() {
                continue;
            }
            for (o, vk) in out.iter_mut().zip(v) {
                if !vk.is_zero() {
                    *o = o.clone() + &(c.clone() * vk);
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad(x)` in the structure basis (column `j` is `[x, X_j]`).
    pub fn ad_matrix(&self, x: &[S]) -> Result<Matrix<S>> {
        let columns = (0..self.dim).map(|j| self.bracket(x, &unit_vector(self.dim, j))).collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&columns, self.dim)
    }

    fn jacobi_residual(&self, i: usize, j: usize, k: usize) -> Vector<S> {
        let n = self.dim;
        let e = |a: usize| unit_vector::<S>(n, a);
        let t1 = self.bracket(&e(i), &self.structure(j, k)).expect("dims");
        let t2 = self.bracket(&e(j), &self.structure(k, i)).expect("dims");
        let t3 = self.bracket(&e(k), &self.structure(i, j)).expect("dims");
        t1.iter().zip(&t2).zip(&t3).map(|((a, b), c)| a.clone() + b + c).collect()
    }

    fn triples(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    out.push((i, j, k));
                }
            }
        }
        out
    }

    /// Checks the Jacobi identity on every basis triple `i < j < k`; reports the
    /// lexicographically first failure.
    pub fn jacobi_check(&self) -> Verdict<JacobiViolation<S>> {
        self.triples()
            .into_par_iter()
            .find_map_first(|(i, j, k)| {
                let residual = self.jacobi_residual(i, j, k);
                (!is_zero_vec(&residual)).then_some(JacobiViolation { triple: (i + 1, j + 1, k + 1), residual })
            })
            .into()
    }

    /// Every failing triple, in lexicographic order.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation<S>> {
        self.triples()
            .into_par_iter()
            .filter_map(|(i, j, k)| {
                let residual = self.jacobi_residual(i, j, k);
                (!is_zero_vec(&residual)).then_some(JacobiViolation { triple: (i + 1, j + 1, k + 1), residual })
            })
            .collect()
    }

    /// `[X_i, X_j] ∈ V_{i+j}` for all pairs, with `V_m = 0` for `m > n`.
    pub fn grading_check(&self) -> Verdict<GradingViolation> {
        self.brackets
            .iter()
            .find(|(&(i, j), v)| {
                let target = i + j + 1; // 0-based index of X_{(i+1)+(j+1)}
                v.iter().enumerate().any(|(k, c)| !c.is_zero() && k != target)
            })
            .map(|(&(i, j), _)| GradingViolation { i: i + 1, j: j + 1 })
            .into()
    }

    /// Largest `k` with `y ∈ span(X_k, …, X_n)`.
    pub fn degree(&self, y: &[S]) -> Result<DegreeValue> {
        if !self.graded {
            return Err(Error::NotGraded);
        }
        if y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!("vector of length {} in dimension {}", y.len(), self.dim)));
        }
        Ok(match y.iter().position(|c| !c.is_zero()) {
            Some(p) => DegreeValue::Finite(p + 1),
            None => DegreeValue::Infinity,
        })
    }

    /// Joint kernel of `ad(X_1), …, ad(X_n)`.
    pub fn center(&self) -> Subspace<S> {
        let n = self.dim;
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            let ad = self.ad_matrix(&unit_vector(n, i)).expect("dims");
            rows.extend(ad.row_vectors().into_iter().filter(|r| !is_zero_vec(r)));
        }
        if rows.is_empty() {
            return Subspace::full(n);
        }
        let m = Matrix::from_rows(rows, n).expect("rows of length n");
        Subspace::from_vectors(n, nullspace_vectors(&m)).expect("dims")
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ …`, stopping at zero or when the series stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace<S>> {
        let n = self.dim;
        let mut series = vec![Subspace::full(n)];
        loop {
            let current = series.last().expect("nonempty");
            if current.is_zero() {
                break;
            }
            let mut vectors = Vec::new();
            for i in 0..n {
                let x = unit_vector(n, i);
                for v in current.basis() {
                    let b = self.bracket(&x, v).expect("dims");
                    if !is_zero_vec(&b) {
                        vectors.push(b);
                    }
                }
            }
            let next = Subspace::from_vectors(n, vectors).expect("dims");
            if next.dim() == current.dim() {
                break;
            }
            series.push(next);
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(Subspace::is_zero)
    }

    /// Filiform: the lower central series has dimensions `n, n-2, n-3, …, 1, 0`.
    pub fn is_filiform(&self) -> bool {
        let n = self.dim;
        if n < 3 {
            return false;
        }
        let dims: Vec<usize> = self.lower_central_series().iter().map(Subspace::dim).collect();
        let expected: Vec<usize> = std::iter::once(n).chain((0..=n - 2).rev()).collect();
        dims == expected
    }

    /// Converts scalars (e.g. rational structure constants into radical ones).
    pub fn map_scalars<T: Scalar>(&self, f: impl Fn(&S) -> T) -> LieAlgebra<T> {
        LieAlgebra {
            dim: self.dim,
            brackets: self
                .brackets
                .iter()
                .map(|(k, v)| (*k, v.iter().map(&f).collect::<Vec<T>>()))
                .filter(|(_, v)| !is_zero_vec(v))
                .collect(),
            graded: self.graded,
        }
    }

    /// Brackets expressed in the basis `Y_1..Y_n` given by the columns of `basis`
    /// (which must be invertible).
    pub fn change_basis(&self, basis: &[Vector<S>]) -> Result<LieAlgebra<S>> {
        let n = self.dim;
        if basis.len() != n {
            return Err(Error::DimensionMismatch(format!("{} basis vectors in dimension {n}", basis.len())));
        }
        let m = Matrix::from_columns(basis, n)?;
        let mut out = LieAlgebra::new(n, false);
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&basis[i], &basis[j])?;
                if is_zero_vec(&b) {
                    continue;
                }
                let coords = crate::linalg::solve_linear(&m, &b)?
                    .ok_or_else(|| Error::DimensionMismatch("basis is not invertible".into()))?;
                out.set_bracket(i + 1, j + 1, coords)?;
            }
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let brackets: Vec<Value> =
            self.nonzero_brackets().map(|((i, j), v)| json!({ "i": i, "j": j, "value": vector_to_json(v) })).collect();
        json!({
            "dim": self.dim,
            "scalar": S::KIND,
            "brackets": brackets,
            "graded": self.graded,
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let dim =
            value.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("algebra JSON needs `dim`".into()))?
                as usize;
        if let Some(kind) = value.get("scalar").and_then(Value::as_str) {
            if kind != S::KIND && !(S::KIND == "radical" && kind == "rational") {
                return Err(Error::Parse(format!("expected {} scalars, found {kind}", S::KIND)));
            }
        }
        let graded = value.get("graded").and_then(Value::as_bool).unwrap_or(false);
        let mut g = LieAlgebra::new(dim, graded);
        for entry in value.get("brackets").and_then(Value::as_array).into_iter().flatten() {
            let idx = |key: &str| {
                entry
                    .get(key)
                    .and_then(Value::as_u64)
                    .map(|x| x as usize)
                    .ok_or_else(|| Error::Parse(format!("bracket entry missing `{key}`")))
            };
            let v = vector_from_json(
                entry.get("value").ok_or_else(|| Error::Parse("bracket entry missing `value`".into()))?,
            )?;
            g.set_bracket(idx("i")?, idx("j")?, v)?;
        }
        Ok(g)
    }
}

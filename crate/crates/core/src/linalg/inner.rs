use serde_json::{json, Value};

use super::matrix::{dot, vec_axpy, Matrix, Vector};
use super::{nullspace_vectors, solve_linear, Subspace};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A positive-definite symmetric bilinear form, given by its Gram matrix in the structure basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InnerProduct<S: Scalar> {
    gram: Matrix<S>,
}

impl<S: Scalar> InnerProduct<S> {
    /// Validates symmetry and positive definiteness (leading principal minors, exact).
    pub fn new(gram: Matrix<S>) -> Result<Self> {
        if !gram.is_square() {
            return Err(Error::DimensionMismatch("Gram matrix must be square".into()));
        }
        if !gram.is_symmetric() {
            return Err(Error::NotSymmetric);
        }
        if !leading_minors_positive(&gram) {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(InnerProduct { gram })
    }

    pub fn identity(n: usize) -> Self {
        InnerProduct { gram: Matrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix<S> {
        &self.gram
    }

    pub fn inner(&self, x: &[S], y: &[S]) -> S {
        let gy = self.gram.mul_vec(y).expect("vector length matches the inner product");
        dot(x, &gy)
    }

    pub fn norm_sq(&self, x: &[S]) -> S {
        self.inner(x, x)
    }

    /// `c · ⟨,⟩` for `c > 0`.
    pub fn scaled(&self, c: &S) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(InnerProduct { gram: self.gram.scale(c) })
    }

    /// Lifts to another scalar type (e.g. a rational Gram matrix acting on radical vectors).
    pub fn lift<T: Scalar>(&self, f: impl Fn(&S) -> T) -> InnerProduct<T> {
        InnerProduct { gram: self.gram.map(f) }
    }

    /// Gram matrix of this form restricted to the span of `vectors`.
    pub fn restricted(&self, vectors: &[Vector<S>]) -> Result<Self> {
        let n = vectors.len();
        let mut g = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                g[(i, j)] = self.inner(&vectors[i], &vectors[j]);
            }
        }
        InnerProduct::new(g)
    }

    pub fn to_json(&self) -> Value {
        json!({ "gram": self.gram.to_json() })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let gram = value.get("gram").ok_or_else(|| Error::Parse("inner product JSON needs a `gram` field".into()))?;
        InnerProduct::new(Matrix::from_json(gram)?)
    }
}

/// All leading principal minors are positive iff every pivot of elimination
/// without row exchanges is positive.
fn leading_minors_positive<S: Scalar>(gram: &Matrix<S>) -> bool {
    let n = gram.rows();
    let mut a = gram.clone();
    for c in 0..n {
        let pivot = a[(c, c)].clone();
        if !pivot.is_positive() {
            return false;
        }
        let inv = pivot.try_inv().expect("positive pivot");
        for i in c + 1..n {
            if a[(i, c)].is_zero() {
                continue;
            }
            let factor = a[(i, c)].clone() * &inv;
            for j in c..n {
                let delta = factor.clone() * &a[(c, j)];
                a[(i, j)] = a[(i, j)].clone() - &delta;
            }
        }
    }
    true
}

/// Orthogonalizes `X_n, X_{n-1}, …, X_1` in that order, without normalizing.
///
/// The output `E_1..E_n` satisfies `span(E_i..E_n) = span(X_i..X_n)` and is pairwise orthogonal.
pub fn gram_schmidt_by_degree<S: Scalar>(basis: &[Vector<S>], ip: &InnerProduct<S>) -> Result<Vec<Vector<S>>> {
    let n = basis.len();
    if let Some(v) = basis.iter().find(|v| v.len() != ip.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "vector of length {} for an inner product of dimension {}",
            v.len(),
            ip.dim()
        )));
    }
    let mut out: Vec<Option<Vector<S>>> = vec![None; n];
    let mut norms: Vec<Option<S>> = vec![None; n];
    for i in (0..n).rev() {
        let mut e = basis[i].clone();
        for j in i + 1..n {
            let ej = out[j].as_ref().expect("higher index already built");
            let nj = norms[j].as_ref().expect("higher index already built");
            let coeff = ip.inner(&basis[i], ej).try_div(nj)?;
            if !coeff.is_zero() {
                e = vec_axpy(&e, &(-coeff), ej);
            }
        }
        let norm = ip.norm_sq(&e);
        if !norm.is_positive() {
            return Err(Error::NotPositiveDefinite);
        }
        out[i] = Some(e);
        norms[i] = Some(norm);
    }
    Ok(out.into_iter().map(|e| e.expect("filled")).collect())
}

/// `{y : ⟨x, y⟩ = 0 for all x ∈ s}`.
pub fn orthogonal_complement<S: Scalar>(s: &Subspace<S>, ip: &InnerProduct<S>) -> Result<Subspace<S>> {
    let n = s.ambient_dim();
    if n != ip.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ambient dimension {n} with an inner product of dimension {}",
            ip.dim()
        )));
    }
    if s.is_zero() {
        return Ok(Subspace::full(n));
    }
    // rows x^t G, so the kernel is the ⟨,⟩-orthogonal complement
    let gt = ip.gram().transpose();
    let rows = s.basis().iter().map(|x| gt.mul_vec(x)).collect::<Result<Vec<_>>>()?;
    let m = Matrix::from_rows(rows, n)?;
    Subspace::from_vectors(n, nullspace_vectors(&m))
}

/// Orthogonal projection of `v` onto `s`.
pub fn orthogonal_projection<S: Scalar>(v: &[S], s: &Subspace<S>, ip: &InnerProduct<S>) -> Result<Vector<S>> {
    let basis = s.basis();
    let k = basis.len();
    if k == 0 {
        return Ok(vec![S::zero(); v.len()]);
    }
    let mut g = Matrix::zeros(k, k);
    for i in 0..k {
        for j in 0..k {
            g[(i, j)] = ip.inner(&basis[i], &basis[j]);
        }
    }
    let rhs: Vec<S> = basis.iter().map(|b| ip.inner(b, v)).collect();
    let coeffs = solve_linear(&g, &rhs)?.ok_or(Error::NotPositiveDefinite)?;
    let mut out = vec![S::zero(); v.len()];
    for (c, b) in coeffs.iter().zip(basis) {
        out = vec_axpy(&out, c, b);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::linalg::unit_vector;
    use crate::scalar::Rational;
    use num_traits::Zero;

    fn unit_basis(n: usize) -> Vec<Vector<Rational>> {
        (0..n).map(|i| unit_vector(n, i)).collect()
    }

    fn perturbed_ip() -> InnerProduct<Rational> {
        let mut g = Matrix::<Rational>::identity(5);
        g[(3, 4)] = rat(1, 2);
        g[(4, 3)] = rat(1, 2);
        InnerProduct::new(g).unwrap()
    }

    #[test]
    fn positive_definiteness() {
        let mut g = Matrix::<Rational>::identity(2);
        g[(0, 1)] = int(2);
        g[(1, 0)] = int(2);
        assert_eq!(InnerProduct::new(g), Err(Error::NotPositiveDefinite));
        let mut g = Matrix::<Rational>::identity(2);
        g[(0, 1)] = int(1);
        assert_eq!(InnerProduct::new(g), Err(Error::NotSymmetric));
    }

    #[test]
    fn gram_schmidt_identity() {
        let e = gram_schmidt_by_degree(&unit_basis(5), &InnerProduct::identity(5)).unwrap();
        assert_eq!(e, unit_basis(5));
    }

    #[test]
    fn gram_schmidt_perturbed() {
        let ip = perturbed_ip();
        let e = gram_schmidt_by_degree(&unit_basis(5), &ip).unwrap();
        let mut e4 = unit_vector::<Rational>(5, 3);
        e4[4] = rat(-1, 2);
        assert_eq!(e[3], e4);
        for (i, x) in e.iter().enumerate() {
            if i != 3 {
                assert_eq!(x, &unit_vector(5, i));
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                if i != j {
                    assert!(ip.inner(&e[i], &e[j]).is_zero());
                }
            }
        }
    }

    #[test]
    fn complements() {
        let ip = InnerProduct::<Rational>::identity(6);
        let even = Subspace::coordinate_span(6, &[2, 4, 6]);
        assert_eq!(orthogonal_complement(&even, &ip).unwrap(), Subspace::coordinate_span(6, &[1, 3, 5]));
        assert!(orthogonal_complement(&Subspace::full(6), &ip).unwrap().is_zero());

        let ip5 = InnerProduct::<Rational>::identity(5);
        let line = Subspace::from_vectors(5, vec![vec![int(0), int(0), int(0), int(1), int(1)]]).unwrap();
        let c = orthogonal_complement(&line, &ip5).unwrap();
        assert_eq!(c.dim(), 4);
        assert!(c.basis().iter().all(|y| ip5.inner(&line.basis()[0], y).is_zero()));
        assert_eq!(orthogonal_complement(&c, &ip5).unwrap(), line);
    }

    #[test]
    fn projection() {
        let ip = perturbed_ip();
        let s = Subspace::coordinate_span(5, &[5]);
        let p = orthogonal_projection(&unit_vector(5, 3), &s, &ip).unwrap();
        assert_eq!(p, vec![int(0), int(0), int(0), int(0), rat(1, 2)]);
    }
}

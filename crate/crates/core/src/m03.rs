//! The skew matrices `K_1, K_2, K_3` behind `m03(2k+3)` and the kernels of their combinations.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::catalog::{build, FamilySpec};
use crate::error::{Error, Result};
use crate::exactnum::{int, rat};
use crate::linalg::{
    dot, is_zero_vec, nullspace, rank, unit_vector, vector_to_json, InnerProduct, Matrix, Subspace, Vector,
};
use crate::poly::Poly;
use crate::scalar::Rational;
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KTriple {
    pub k: usize,
    pub k1: Matrix<Rational>,
    pub k2: Matrix<Rational>,
    pub k3: Matrix<Rational>,
}

/// `(a, b, c)` as a combination `a K_1 + b K_2 + c K_3`.
pub type Combination = [Rational; 3];

fn sign(l: usize) -> i64 {
    if l.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Entries, for `l, m = 1..2k−1`:
/// `(K_1)_{lm} = (−1)^l δ_{l+m,2k−1}`, `(K_2)_{lm} = (−1)^l δ_{l+m,2k} (k−l)`,
/// `(K_3)_{lm} = (−1)^{l+1} δ_{l+m,2k+1} ½(l−1)(m−1)`.
pub fn build_ktriple(k: usize) -> Result<KTriple> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    let n = 2 * k - 1;
    let mut k1 = Matrix::zeros(n, n);
    let mut k2 = Matrix::zeros(n, n);
    let mut k3 = Matrix::zeros(n, n);
    for l in 1..=n {
        for m in 1..=n {
            if l + m == 2 * k - 1 {
                k1[(l - 1, m - 1)] = int(sign(l));
            }
            if l + m == 2 * k {
                k2[(l - 1, m - 1)] = int(sign(l) * (k as i64 - l as i64));
            }
            if l + m == 2 * k + 1 {
                k3[(l - 1, m - 1)] = rat(-sign(l) * ((l - 1) * (m - 1)) as i64, 2);
            }
        }
    }
    debug_assert!(k1.is_skew_symmetric() && k2.is_skew_symmetric() && k3.is_skew_symmetric());
    Ok(KTriple { k, k1, k2, k3 })
}

impl KTriple {
    pub fn combination(&self, abc: &Combination) -> Matrix<Rational> {
        let [a, b, c] = abc;
        self.k1.scale(a).add(&self.k2.scale(b)).and_then(|m| m.add(&self.k3.scale(c))).expect("same shape")
    }

    pub fn is_skew(&self) -> bool {
        self.k1.is_skew_symmetric() && self.k2.is_skew_symmetric() && self.k3.is_skew_symmetric()
    }
}

fn check_nonzero(abc: &Combination) -> Result<()> {
    if abc.iter().all(Zero::is_zero) {
        return Err(Error::ZeroCombination);
    }
    Ok(())
}

/// Reads `x_{2k−1−j} = j! [t^j] (a − bt + ½ct²)^{k−1}` for `j = 0..2k−2`.
pub fn kernel_poly_formula(k: usize, abc: &Combination) -> Result<Vector<Rational>> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    check_nonzero(abc)?;
    let [a, b, c] = abc;
    let base = Poly::new(vec![a.clone(), -b.clone(), c * rat(1, 2)]);
    let power = base.pow(k - 1);
    let n = 2 * k - 1;
    let mut x = vec![Rational::zero(); n];
    let mut factorial = Rational::one();
    for j in 0..n {
        if j > 0 {
            factorial *= int(j as i64);
        }
        x[n - 1 - j] = &factorial * power.coeff(j);
    }
    Ok(x)
}

/// `rank(a K_1 + b K_2 + c K_3) = 2k − 2`; the violation carries the actual rank.
pub fn rank_assertion(k: usize, abc: &Combination) -> Result<Verdict<usize>> {
    check_nonzero(abc)?;
    let r = rank(&build_ktriple(k)?.combination(abc));
    Ok(if r == 2 * k - 2 { Verdict::Ok } else { Verdict::Violation(r) })
}

/// A point of the pencil `N_1 + λ N_2`; `None` stands for `λ = ∞`, i.e. `N_2`.
pub type PencilPoint = Option<Rational>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSpanReport {
    pub dim: usize,
    /// `ker(J_{N}) ∩ ker(J_{N'}) = 0` for every pair of distinct sampled points.
    pub pairwise_trivial: bool,
    pub kernels: Vec<Vector<Rational>>,
}

fn proportional(x: &Combination, y: &Combination) -> bool {
    (0..3).all(|i| (0..3).all(|j| &x[i] * &y[j] == &x[j] * &y[i]))
}

/// Spans the kernels of `N_1 + λ N_2` over the sampled `λ` (plus any `None` = ∞).
///
/// Kernel coordinates are polynomial in `λ` of degree at most `2k − 2`, so
/// `2k − 1` finite samples already span the whole family.
pub fn kernel_span_dimension(
    k: usize,
    samples: &[PencilPoint],
    n1: &Combination,
    n2: &Combination,
) -> Result<KernelSpanReport> {
    check_nonzero(n1)?;
    check_nonzero(n2)?;
    if proportional(n1, n2) {
        return Err(Error::ProportionalCombinations);
    }
    let triple = build_ktriple(k)?;
    let n = 2 * k - 1;
    let mut kernels = Vec::with_capacity(samples.len());
    for s in samples {
        let abc: Combination = match s {
            Some(l) => [&n1[0] + l * &n2[0], &n1[1] + l * &n2[1], &n1[2] + l * &n2[2]],
            None => n2.clone(),
        };
        let ker = nullspace(&triple.combination(&abc));
        kernels.push(ker.basis().first().cloned().unwrap_or_else(|| vec![Rational::zero(); n]));
    }
    let mut pairwise_trivial = true;
    for i in 0..kernels.len() {
        for j in i + 1..kernels.len() {
            let both = Subspace::from_vectors(n, vec![kernels[i].clone(), kernels[j].clone()])?;
            pairwise_trivial &= both.dim() == 2;
        }
    }
    let dim = Subspace::from_vectors(n, kernels.clone())?.dim();
    Ok(KernelSpanReport { dim, pairwise_trivial, kernels })
}

/// Default pencil samples: `λ = 0, 1, …, 2k−2` and `∞`.
pub fn default_samples(k: usize) -> Vec<PencilPoint> {
    (0..2 * k - 1).map(|l| Some(int(l as i64))).chain(std::iter::once(None)).collect()
}

/// Gram matrix of `(X, Y) ↦ ⟨N, [X, Y]⟩` on `b = span(X_2..X_{2k})` of `m03(2k+3)` with
/// the identity inner product, for `N = a X_{2k+1} + b X_{2k+2} + c X_{2k+3}`.
pub fn j_n_form(k: usize, abc: &Combination) -> Result<Matrix<Rational>> {
    let g = build(&FamilySpec::m03(k))?;
    let dim = g.dim();
    let ip = InnerProduct::<Rational>::identity(dim);
    let mut nvec = vec![Rational::zero(); dim];
    for (i, c) in abc.iter().enumerate() {
        nvec[2 * k + i] = c.clone();
    }
    let size = 2 * k - 1;
    let mut m = Matrix::zeros(size, size);
    for i in 0..size {
        for j in 0..size {
            let br = g.bracket(&unit_vector(dim, i + 1), &unit_vector(dim, j + 1))?;
            m[(i, j)] = ip.inner(&nvec, &br);
        }
    }
    Ok(m)
}

/// `rank(J_N) = rank(a K_1 + b K_2 + c K_3)`.
pub fn j_n_rank_matches(k: usize, abc: &Combination) -> Result<bool> {
    check_nonzero(abc)?;
    Ok(rank(&j_n_form(k, abc)?) == rank(&build_ktriple(k)?.combination(abc)))
}

/// Formula vector, oracle nullspace, and the factor `c` with `formula = c · oracle`.
pub fn kernel_report(k: usize, abc: &Combination) -> Result<Value> {
    let x = kernel_poly_formula(k, abc)?;
    let m = build_ktriple(k)?.combination(abc);
    let ns = nullspace(&m);
    let residual_zero = is_zero_vec(&m.mul_vec(&x)?);
    let factor = ns.basis().first().and_then(|b| {
        let denom = dot(b, b);
        let c = dot(&x, b) / denom;
        (x.iter().zip(b).all(|(xi, bi)| xi == &(&c * bi))).then_some(c)
    });
    Ok(json!({
        "k": k,
        "formula": vector_to_json(&x),
        "nullspace": ns.basis().iter().map(|v| vector_to_json(v)).collect::<Vec<_>>(),
        "nullity": ns.dim(),
        "rank": m.rows() - ns.dim(),
        "formula_in_kernel": residual_zero,
        "proportionality": factor.map(|c| crate::exactnum::format_rational(&c)),
    }))
}

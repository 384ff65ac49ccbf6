use std::collections::BTreeSet;

use num_traits::{One, Zero};

use super::{build, build_unrestricted, Family, FamilySpec};
use crate::error::{Error, Result};
use crate::exactnum::int;
use crate::lie::LieAlgebra;
use crate::linalg::{inverse, is_zero_vec, unit_vector, vec_scale, Matrix, Vector};
use crate::scalar::{Rational, Scalar};
use crate::verdict::Verdict;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IsoViolation {
    Singular,
    /// 1-based basis pair whose bracket is not preserved.
    Bracket {
        i: usize,
        j: usize,
    },
}

/// Checks that `map` (columns = images of the `src` basis in `dst` coordinates)
/// is an invertible homomorphism `src → dst`.
pub fn iso_witness_check<S: Scalar>(
    src: &LieAlgebra<S>,
    dst: &LieAlgebra<S>,
    map: &Matrix<S>,
) -> Result<Verdict<IsoViolation>> {
    let n = src.dim();
    if dst.dim() != n || map.rows() != n || map.cols() != n {
        return Err(Error::DimensionMismatch(format!(
            "map {}x{} between algebras of dimensions {n} and {}",
            map.rows(),
            map.cols(),
            dst.dim()
        )));
    }
    if inverse(map)?.is_none() {
        return Ok(Verdict::Violation(IsoViolation::Singular));
    }
    let images: Vec<Vector<S>> = (0..n).map(|j| map.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = map.mul_vec(&src.structure(i, j))?;
            let rhs = dst.bracket(&images[i], &images[j])?;
            if lhs != rhs {
                return Ok(Verdict::Violation(IsoViolation::Bracket { i: i + 1, j: j + 1 }));
            }
        }
    }
    Ok(Verdict::Ok)
}

/// Turns a basis `Y_1..Y_n` of `src` obeying the relations of `dst` into the map
/// `src → dst` sending `Y_i ↦ X_i`.
pub fn basis_witness<S: Scalar>(basis: &[Vector<S>]) -> Result<Option<Matrix<S>>> {
    let m = Matrix::from_columns(basis, basis.len())?;
    inverse(&m)
}

/// Coefficient of `X_{k+1}` in `[X_1, X_k]`, for `k = 2..n-1` (index `k - 2`).
fn chain_coefficients<S: Scalar>(g: &LieAlgebra<S>) -> Option<Vec<S>> {
    (2..g.dim())
        .map(|k| {
            let c = g.structure(0, k - 1)[k].clone();
            (!c.is_zero()).then_some(c)
        })
        .collect()
}

/// Extends generator images `Y_1 = y1`, `Y_2 = y2` in `src` by
/// `Y_{k+1} = [Y_1, Y_k] / c_k`, where `c_k` is the `[X_1, X_k]` coefficient of
/// `dst`, and returns the resulting map `src → dst` if it is an isomorphism.
fn extend_generators<S: Scalar>(
    src: &LieAlgebra<S>,
    dst: &LieAlgebra<S>,
    chain: &[S],
    y1: Vector<S>,
    y2: Vector<S>,
) -> Result<Option<Matrix<S>>> {
    let mut basis = vec![y1, y2];
    for c in chain {
        let next = src.bracket(&basis[0], basis.last().expect("nonempty"))?;
        basis.push(vec_scale(&c.try_inv()?, &next));
    }
    let Some(map) = basis_witness(&basis)? else {
        return Ok(None);
    };
    Ok(iso_witness_check(src, dst, &map)?.is_ok().then_some(map))
}

/// Searches for an isomorphism `src → dst` of graded filiform algebras among maps
/// fixed by `X_1 ↦ a X_1`, `X_2 ↦ b X_2` (and extended by brackets).
///
/// For such maps only the ratio `b / a²` matters, so `a = ±1`; each pair of
/// nonzero graded structure constants pins down one candidate value of `b`.
pub fn generator_image_search(
    src: &LieAlgebra<Rational>,
    dst: &LieAlgebra<Rational>,
) -> Result<Option<Matrix<Rational>>> {
    let n = src.dim();
    if dst.dim() != n {
        return Err(Error::DimensionMismatch(format!("dimensions {n} and {}", dst.dim())));
    }
    if n < 2 {
        return Ok(None);
    }
    let Some(chain) = chain_coefficients(dst) else {
        return Ok(None);
    };
    let Some(src_chain) = chain_coefficients(src) else {
        return Ok(None);
    };
    // Y_k = a^(k-2) b σ_k X_k with σ_k = Π_{m<k} (src c_m / dst c_m), so a relation
    // [X_i, X_j] = λ X_{i+j} (src) vs μ X_{i+j} (dst) forces b = μ σ_{i+j} / (λ σ_i σ_j).
    let mut sigma = vec![Rational::one(); n + 1];
    for k in 3..=n {
        sigma[k] = &sigma[k - 1] * &src_chain[k - 3] / &chain[k - 3];
    }
    let mut candidates: BTreeSet<Rational> = [int(1), int(-1)].into_iter().collect();
    for i in 2..=n {
        for j in i + 1..=n - i {
            let lambda = src.structure(i - 1, j - 1)[i + j - 1].clone();
            let mu = dst.structure(i - 1, j - 1)[i + j - 1].clone();
            if !lambda.is_zero() && !mu.is_zero() {
                candidates.insert(mu * &sigma[i + j] / (lambda * &sigma[i] * &sigma[j]));
            }
        }
    }
    for a in [int(1), int(-1)] {
        for b in &candidates {
            let y1 = vec_scale(&a, &unit_vector(n, 0));
            let y2 = vec_scale(b, &unit_vector(n, 1));
            if let Some(map) = extend_generators(src, dst, &chain, y1, y2)? {
                return Ok(Some(map));
            }
        }
    }
    Ok(None)
}

/// Isomorphisms listed in the classification remark, as maps `src → dst`.
///
/// * `g_{n,8} → V_n` (n = 7..11) from the basis `X_1, X_k / ((k-2)!·60)`;
/// * `g_{7,-2} → m01(7)`, `g_{8,-2} → m02(8)`, `g_{9,-2} → m03(9)` from the
///   generator-image search (they turn out to be the identity);
/// * `m2(5) → V_5`, `m2(6) → V_6` from the generator-image search.
pub fn builtin_witness(src: &FamilySpec) -> Result<Option<(FamilySpec, Matrix<Rational>)>> {
    let n = src.dim;
    match (src.family, src.alpha.as_ref()) {
        (f, Some(a)) if f.has_parameter() && *a == int(8) => {
            let mut basis = vec![unit_vector(n, 0)];
            let mut fact = Rational::one();
            for k in 2..=n {
                if k > 2 {
                    fact *= int((k - 2) as i64);
                }
                basis.push(vec_scale(&(Rational::one() / (&fact * int(60))), &unit_vector(n, k - 1)));
            }
            let map = basis_witness(&basis)?.expect("diagonal basis");
            Ok(Some((FamilySpec::v(n), map)))
        }
        (Family::G7 | Family::G8 | Family::G9, Some(a)) if *a == int(-2) => {
            let dst = match src.family {
                Family::G7 => FamilySpec::m01(3),
                Family::G8 => FamilySpec::m02(3),
                _ => FamilySpec::m03(3),
            };
            let found = generator_image_search(&build_unrestricted(src)?, &build(&dst)?)?;
            Ok(found.map(|m| (dst, m)))
        }
        (Family::M2, None) if n == 5 || n == 6 => {
            let dst = FamilySpec::v(n);
            let found = generator_image_search(&build(src)?, &build(&dst)?)?;
            Ok(found.map(|m| (dst, m)))
        }
        _ => Ok(None),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientMatch {
    /// Truncated structure constants coincide.
    Exact,
    /// They coincide after the given change of basis (a map `big/X_n → small`).
    Rescaled(Matrix<Rational>),
    /// No match; the first differing 1-based pair.
    Mismatch { i: usize, j: usize },
}

/// Drops `X_n` from a graded algebra: brackets are truncated at coordinate `n`.
pub fn truncate_top<S: Scalar>(g: &LieAlgebra<S>) -> Result<LieAlgebra<S>> {
    let n = g.dim();
    let mut out = LieAlgebra::new(n - 1, g.is_graded());
    for ((i, j), v) in g.nonzero_brackets() {
        if i < n && j < n {
            let w = v[..n - 1].to_vec();
            if !is_zero_vec(&w) {
                out.set_bracket(i, j, w)?;
            }
        }
    }
    Ok(out)
}

/// Compares `big / span(X_n)` with `small`: exactly when possible, otherwise up to
/// a generator-image rescaling.
pub fn quotient_matches_family(big: &FamilySpec, small: &FamilySpec) -> Result<QuotientMatch> {
    if big.dim != small.dim + 1 {
        return Err(Error::DimensionMismatch(format!(
            "quotient of a {}-dimensional algebra against a {}-dimensional one",
            big.dim, small.dim
        )));
    }
    let quotient = truncate_top(&build(big)?)?;
    let target = build(small)?;
    let n = target.dim();
    let mismatch = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .find(|&(i, j)| quotient.structure(i, j) != target.structure(i, j));
    let Some((i, j)) = mismatch else {
        return Ok(QuotientMatch::Exact);
    };
    Ok(match generator_image_search(&quotient, &target)? {
        Some(map) => QuotientMatch::Rescaled(map),
        None => QuotientMatch::Mismatch { i: i + 1, j: j + 1 },
    })
}

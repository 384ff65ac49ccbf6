//! Totally geodesic subalgebras: the bilinear test, adapted bases, and graded search.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lie::{DegreeValue, LieAlgebra};
use crate::linalg::{
    gram_schmidt_by_degree, orthogonal_complement, unit_vector, vector_to_json, InnerProduct, Subspace, Vector,
};
use crate::scalar::Scalar;

/// A triple `X ∈ h^⊥`, `Y, Z ∈ h` with `⟨[X,Y],Z⟩ + ⟨[X,Z],Y⟩ ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgsWitness<S: Scalar> {
    /// 1-based positions in the bases of `h^⊥` and `h`.
    pub indices: (usize, usize, usize),
    pub x: Vector<S>,
    pub y: Vector<S>,
    pub z: Vector<S>,
    pub residual: S,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TgsReport<S: Scalar> {
    pub verdict: bool,
    pub is_subalgebra: bool,
    pub witness: Option<TgsWitness<S>>,
}

impl<S: Scalar> TgsReport<S> {
    pub fn to_json(&self) -> Value {
        json!({
            "verdict": self.verdict,
            "is_subalgebra": self.is_subalgebra,
            "witness": self.witness.as_ref().map(|w| json!({
                "indices": [w.indices.0, w.indices.1, w.indices.2],
                "x": vector_to_json(&w.x),
                "y": vector_to_json(&w.y),
                "z": vector_to_json(&w.z),
                "residual": w.residual.to_json(),
            })),
        })
    }
}

fn check_ambient<S: Scalar>(g: &LieAlgebra<S>, h: &Subspace<S>) -> Result<()> {
    if h.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch(format!(
            "subspace of ambient dimension {} in an algebra of dimension {}",
            h.ambient_dim(),
            g.dim()
        )));
    }
    Ok(())
}

/// `[b_i, b_j] ∈ h` for all pairs of basis vectors of `h`.
pub fn is_subalgebra<S: Scalar>(g: &LieAlgebra<S>, h: &Subspace<S>) -> Result<bool> {
    check_ambient(g, h)?;
    let b = h.basis();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            if !h.contains(&g.bracket(&b[i], &b[j])?) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Evaluates `⟨[X,Y],Z⟩ + ⟨[X,Z],Y⟩ = 0` on all basis triples `X ∈ h^⊥`, `Y ≤ Z ∈ h`
/// and reports the lexicographically first failure.
pub fn is_totally_geodesic<S: Scalar>(
    g: &LieAlgebra<S>,
    ip: &InnerProduct<S>,
    h: &Subspace<S>,
) -> Result<TgsReport<S>> {
    check_ambient(g, h)?;
    let is_sub = is_subalgebra(g, h)?;
    let perp = orthogonal_complement(h, ip)?;
    let hb = h.basis();
    let mut witness = None;
    'outer: for (a, x) in perp.basis().iter().enumerate() {
        let ad: Vec<Vector<S>> = hb.iter().map(|y| g.bracket(x, y)).collect::<Result<_>>()?;
        for b in 0..hb.len() {
            for c in b..hb.len() {
                let residual = ip.inner(&ad[b], &hb[c]) + ip.inner(&ad[c], &hb[b]);
                if !residual.is_zero() {
                    witness = Some(TgsWitness {
                        indices: (a + 1, b + 1, c + 1),
                        x: x.clone(),
                        y: hb[b].clone(),
                        z: hb[c].clone(),
                        residual,
                    });
                    break 'outer;
                }
            }
        }
    }
    Ok(TgsReport { verdict: is_sub && witness.is_none(), is_subalgebra: is_sub, witness })
}

/// Orthogonal basis `E_1..E_n` with `deg(E_i) = i`, built from the top degree down.
///
/// Also asserts `⟨[E_1, E_i], E_{i+1}⟩ ≠ 0` for `1 < i < n`.
pub fn adapted_basis<S: Scalar>(g: &LieAlgebra<S>, ip: &InnerProduct<S>) -> Result<Vec<Vector<S>>> {
    if !g.is_graded() {
        return Err(Error::NotGraded);
    }
    let n = g.dim();
    let structure: Vec<Vector<S>> = (0..n).map(|i| unit_vector(n, i)).collect();
    let e = gram_schmidt_by_degree(&structure, ip)?;
    for (i, v) in e.iter().enumerate() {
        if g.degree(v)? != DegreeValue::Finite(i + 1) {
            return Err(Error::AdaptedBasisDegenerate(i + 1));
        }
    }
    for i in 1..n.saturating_sub(1) {
        if ip.inner(&g.bracket(&e[0], &e[i])?, &e[i + 1]).is_zero() {
            return Err(Error::AdaptedBasisDegenerate(i + 1));
        }
    }
    Ok(e)
}

pub const DEFAULT_SEARCH_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Largest admissible number of basis vectors.
    pub cap: usize,
    /// Also enumerate subsets containing index 1 (normally excluded since `E_1 ∈ h^⊥`).
    pub include_first: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { cap: DEFAULT_SEARCH_CAP, include_first: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchReport<S: Scalar> {
    /// Passing subsets (1-based indices into the basis), in enumeration order.
    pub passing: Vec<(Vec<usize>, TgsReport<S>)>,
    pub max_dim: usize,
    pub subsets_examined: usize,
}

impl<S: Scalar> SearchReport<S> {
    pub fn best(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.passing.iter().filter(|(s, _)| s.len() == self.max_dim).map(|(s, _)| s)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "max_dim": self.max_dim,
            "subsets_examined": self.subsets_examined,
            "passing": self.passing.iter().map(|(s, _)| json!(s)).collect::<Vec<_>>(),
            "scope": "spans of subsets of the given basis only; no bound is claimed outside this class",
        })
    }
}

/// Enumerates spans of subsets of `basis` (indices 2..n by default) and keeps the
/// totally geodesic subalgebras.
pub fn graded_tgs_search<S: Scalar>(
    g: &LieAlgebra<S>,
    ip: &InnerProduct<S>,
    basis: &[Vector<S>],
    options: SearchOptions,
) -> Result<SearchReport<S>> {
    let n = basis.len();
    if n > options.cap {
        return Err(Error::SearchTooLarge { n, cap: options.cap });
    }
    if n != g.dim() {
        return Err(Error::DimensionMismatch(format!("{n} basis vectors in dimension {}", g.dim())));
    }
    let first = if options.include_first { 0 } else { 1 };
    let free = n - first.min(n);
    let masks: Vec<u64> = (0..1u64 << free).collect();
    let results: Vec<Option<(Vec<usize>, TgsReport<S>)>> = masks
        .into_par_iter()
        .map(|mask| {
            let subset: Vec<usize> = (0..free).filter(|b| mask >> b & 1 == 1).map(|b| b + first + 1).collect();
            let h = Subspace::from_vectors(n, subset.iter().map(|&i| basis[i - 1].clone()).collect())?;
            if !is_subalgebra(g, &h)? {
                return Ok(None);
            }
            let report = is_totally_geodesic(g, ip, &h)?;
            Ok(report.verdict.then_some((subset, report)))
        })
        .collect::<Result<_>>()?;
    let passing: Vec<_> = results.into_iter().flatten().collect();
    let max_dim = passing.iter().map(|(s, _)| s.len()).max().unwrap_or(0);
    Ok(SearchReport { passing, max_dim, subsets_examined: 1usize << free })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use crate::linalg::Matrix;
    use crate::scalar::Rational;

    fn m0(n: usize) -> LieAlgebra<Rational> {
        let mut g = LieAlgebra::new(n, true);
        for i in 2..n {
            g.set_bracket_term(1, i, i + 1, int(1)).unwrap();
        }
        g
    }

    fn structure_basis(n: usize) -> Vec<Vector<Rational>> {
        (0..n).map(|i| unit_vector(n, i)).collect()
    }

    #[test]
    fn subalgebras() {
        let g = m0(6);
        assert!(is_subalgebra(&g, &Subspace::coordinate_span(6, &[2, 4, 6])).unwrap());
        assert!(!is_subalgebra(&g, &Subspace::coordinate_span(6, &[1, 2])).unwrap());
        assert!(is_subalgebra(&g, &Subspace::zero(6)).unwrap());
    }

    #[test]
    fn eq1_examples() {
        let g = m0(6);
        let ip = InnerProduct::identity(6);
        assert!(is_totally_geodesic(&g, &ip, &Subspace::coordinate_span(6, &[2, 4, 6])).unwrap().verdict);
        let r = is_totally_geodesic(&g, &ip, &Subspace::coordinate_span(6, &[5, 6])).unwrap();
        assert!(!r.verdict && r.is_subalgebra);
        let w = r.witness.unwrap();
        assert_eq!((w.x, w.y, w.z, w.residual), (unit_vector(6, 0), unit_vector(6, 4), unit_vector(6, 5), int(1)));
        let mut gram = Matrix::identity(6);
        gram[(0, 5)] = rat(1, 3);
        gram[(5, 0)] = rat(1, 3);
        let ip2 = InnerProduct::new(gram).unwrap();
        assert!(is_totally_geodesic(&g, &ip2, &Subspace::coordinate_span(6, &[6])).unwrap().verdict);
    }

    #[test]
    fn adapted() {
        let g = m0(5);
        assert_eq!(adapted_basis(&g, &InnerProduct::identity(5)).unwrap(), structure_basis(5));
    }

    #[test]
    fn search_examples() {
        let r = graded_tgs_search(&m0(6), &InnerProduct::identity(6), &structure_basis(6), SearchOptions::default())
            .unwrap();
        assert_eq!(r.max_dim, 3);
        assert!(r.best().any(|s| s == &vec![2, 4, 6]));
        let r = graded_tgs_search(&m0(4), &InnerProduct::identity(4), &structure_basis(4), SearchOptions::default())
            .unwrap();
        assert_eq!(r.max_dim, 2);
        assert!(r.best().any(|s| s == &vec![2, 4]));
        let too_big = SearchOptions { cap: 3, include_first: false };
        assert_eq!(
            graded_tgs_search(&m0(4), &InnerProduct::identity(4), &structure_basis(4), too_big),
            Err(Error::SearchTooLarge { n: 4, cap: 3 })
        );
    }
}

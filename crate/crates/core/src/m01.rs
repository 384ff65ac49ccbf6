//! The codimension-4 totally geodesic subalgebra of `m01(2k+1)`, built and certified step by step.
//!
//! All vectors live in the orthonormal frame `E_1..E_{2k+1}`; the blocks of `N` and
//! `K` act on `m' = span(E_2..E_{2k+1})`, split as `(k−1, k−1, 1, 1)`.

use std::collections::BTreeSet;

use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, int, rad_sqrt_rational, RadNum};
use crate::lie::LieAlgebra;
use crate::linalg::{
    dot, is_zero_vec, orthogonal_complement, rank, unit_vector, vec_scale, vector_to_json, InnerProduct, Matrix,
    Subspace, Vector,
};
use crate::poly::{comb_sum, poly_sqrt_truncate, Poly};
use crate::scalar::{Rational, Scalar};
use crate::tgs::{is_subalgebra, is_totally_geodesic};
use crate::verdict::Verdict;

/// One certified identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CertificationReport {
    pub checks: Vec<Check>,
}

impl CertificationReport {
    fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.to_string(), passed, detail: detail.into() });
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .checks
            .iter()
            .map(|c| json!({"identity": c.name, "passed": c.passed, "detail": c.detail}))
            .collect::<Vec<_>>())
    }

    fn into_result(self) -> Result<Self> {
        match self.first_failure() {
            Some(c) => Err(Error::CertificationFailed { stage: c.name.clone(), detail: c.detail.clone() }),
            None => Ok(self),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct M01Construction {
    pub k: usize,
    /// Diagonal of `S`.
    pub d: Vec<Rational>,
    pub u: Vec<RadNum>,
    pub s: Matrix<RadNum>,
    pub t: Matrix<RadNum>,
    /// `ad(E_1)` restricted to `m'`.
    pub n: Matrix<RadNum>,
    pub kmat: Matrix<RadNum>,
    pub q: Vector<RadNum>,
    pub p: Vector<RadNum>,
    pub w: Vector<RadNum>,
    /// `X_2` in the full frame.
    pub x2: Vector<RadNum>,
    /// Structure constants in the frame `E_1..E_{2k+1}` (identity Gram matrix).
    pub algebra: LieAlgebra<RadNum>,
    pub h: Subspace<RadNum>,
    pub report: CertificationReport,
}

fn lift(r: &Rational) -> RadNum {
    RadNum::from_rational(r.clone())
}

fn check_k(k: usize) -> Result<()> {
    if k < 3 {
        return Err(Error::BadK(k));
    }
    Ok(())
}

fn diag(d: &[Rational]) -> Matrix<RadNum> {
    Matrix::diagonal(&d.iter().map(lift).collect::<Vec<_>>())
}

/// `d_i^e` for a possibly negative exponent.
fn rpow(x: &Rational, e: i64) -> Rational {
    if e >= 0 {
        num_traits::pow(x.clone(), e as usize)
    } else {
        num_traits::pow(x.recip(), (-e) as usize)
    }
}

/// `Π_{j≠i} d_i² / (d_i² − d_j²)`, the required value of `d_i^{-1} u_i²`.
fn u_target(mags: &[Rational], i: usize) -> Rational {
    let di2 = &mags[i] * &mags[i];
    mags.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, dj)| &di2 / (&di2 - dj * dj)).product()
}

/// Diagonal `S` with the given magnitudes (default `2, 3, …, k`) and signs chosen so
/// that `u_i² = d_i Π_{j≠i} d_i²/(d_i² − d_j²)` is positive; `u_i` is its positive root.
pub fn choose_s_u(k: usize, magnitudes: Option<&[Rational]>) -> Result<(Vec<Rational>, Vec<RadNum>)> {
    check_k(k)?;
    let mags: Vec<Rational> = match magnitudes {
        Some(m) => m.to_vec(),
        None => (1..k).map(|i| int(i as i64 + 1)).collect(),
    };
    if mags.len() != k - 1 {
        return Err(Error::DimensionMismatch(format!("{} magnitudes for k = {k}", mags.len())));
    }
    let distinct: BTreeSet<&Rational> = mags.iter().collect();
    if distinct.len() != mags.len() || mags.iter().any(|m| !Signed::is_positive(m)) {
        return Err(Error::DuplicateMagnitudes);
    }
    let mut d = Vec::with_capacity(k - 1);
    let mut u = Vec::with_capacity(k - 1);
    for i in 0..k - 1 {
        let target = u_target(&mags, i);
        // sign of d_i follows the sign of the target so that d_i · target > 0
        let di = if Signed::is_positive(&target) { mags[i].clone() } else { -mags[i].clone() };
        let u2 = &di * &target;
        u.push(rad_sqrt_rational(&u2)?);
        d.push(di);
    }
    Ok((d, u))
}

/// `T = S(−S + u uᵗ)`.
pub fn t_matrix(d: &[Rational], u: &[RadNum]) -> Result<Matrix<RadNum>> {
    let m = d.len();
    let s = diag(d);
    let mut inner = s.scale(&RadNum::from_int(-1));
    for i in 0..m {
        for j in 0..m {
            inner[(i, j)] = inner[(i, j)].clone() + &(u[i].clone() * &u[j]);
        }
    }
    s.mul(&inner)
}

/// `χ(t) = det(S² − tI) + (−1)^k t^{k−1}`, of degree `k − 2`.
pub fn chi_polynomial(k: usize, d: &[Rational]) -> Poly {
    let det = d.iter().fold(Poly::constant(Rational::one()), |acc, di| acc.mul(&Poly::new(vec![di * di, int(-1)])));
    let sign = if k.is_multiple_of(2) { int(1) } else { int(-1) };
    det.add(&Poly::monomial(sign, k - 1))
}

/// `q = S^{2−2k} P(S²) u`, with `P` the truncated square root of `χ`.
pub fn build_q(k: usize, d: &[Rational], u: &[RadNum]) -> Result<Vector<RadNum>> {
    check_k(k)?;
    let chi = chi_polynomial(k, d);
    let p = poly_sqrt_truncate(&chi, k - 2)?;
    Ok(d.iter()
        .zip(u)
        .map(|(di, ui)| {
            let c = rpow(di, 2 - 2 * k as i64) * p.eval(&(di * di));
            lift(&c) * ui
        })
        .collect())
}

/// `w = (T^{k−2} S)ᵗ q`.
pub fn w_vector(k: usize, d: &[Rational], u: &[RadNum], q: &[RadNum]) -> Result<Vector<RadNum>> {
    let ts = t_matrix(d, u)?.pow((k - 2) as u32)?.mul(&diag(d))?;
    ts.transpose().mul_vec(q)
}

/// `p = −w / ⟨w, w⟩`, so that `⟨T^{k−2} S p, q⟩ = −1`.
pub fn build_p(k: usize, d: &[Rational], u: &[RadNum], q: &[RadNum]) -> Result<Vector<RadNum>> {
    check_k(k)?;
    let w = w_vector(k, d, u, q)?;
    if is_zero_vec(&w) {
        return Err(Error::DegenerateW);
    }
    let scale = -dot(&w, &w).try_inv()?;
    Ok(vec_scale(&scale, &w))
}

/// `N` and `K` on `m'` (size `2k`).
pub fn n_k_matrices(k: usize, d: &[Rational], u: &[RadNum], p: &[RadNum]) -> Result<(Matrix<RadNum>, Matrix<RadNum>)> {
    let m = k - 1;
    let size = 2 * k;
    let s = diag(d);
    let mut lower = s.scale(&RadNum::from_int(-1));
    for i in 0..m {
        for j in 0..m {
            lower[(i, j)] = lower[(i, j)].clone() + &(u[i].clone() * &u[j]);
        }
    }
    let mut n = Matrix::zeros(size, size);
    n.set_block(0, m, &s);
    n.set_block(m, 0, &lower);
    n.set_block(2 * m, 0, &Matrix::from_rows(vec![p.to_vec()], m)?);
    n[(2 * m + 1, 2 * m)] = RadNum::one();
    let mut kmat = Matrix::zeros(size, size);
    kmat.set_block(0, m, &Matrix::identity(m));
    kmat.set_block(m, 0, &Matrix::identity(m).scale(&RadNum::from_int(-1)));
    Ok((n, kmat))
}

/// The frame algebra: `[E_1, X] = N X` and `[X, Y] = ⟨K X, Y⟩ E_{2k+1}` on `m'`.
pub fn frame_algebra(k: usize, n: &Matrix<RadNum>, kmat: &Matrix<RadNum>) -> Result<LieAlgebra<RadNum>> {
    let dim = 2 * k + 1;
    let mut g = LieAlgebra::new(dim, false);
    for j in 0..2 * k {
        let mut v = vec![RadNum::zero(); dim];
        for i in 0..2 * k {
            v[i + 1] = n[(i, j)].clone();
        }
        g.set_bracket(1, j + 2, v)?;
    }
    for i in 0..2 * k {
        for j in i + 1..2 * k {
            // ⟨K e_i, e_j⟩ = K_{j,i}
            let c = kmat[(j, i)].clone();
            if !c.is_zero() {
                g.set_bracket_term(i + 2, j + 2, dim, c)?;
            }
        }
    }
    Ok(g)
}

/// `h = span(E_1, E_{2k}, (0, u, 0_{k+1}), (0_k, u, 0, 0))^⊥`.
pub fn subalgebra_h(k: usize, u: &[RadNum]) -> Result<Subspace<RadNum>> {
    let dim = 2 * k + 1;
    let mut a = vec![RadNum::zero(); dim];
    let mut b = vec![RadNum::zero(); dim];
    for (i, ui) in u.iter().enumerate() {
        a[1 + i] = ui.clone();
        b[k + i] = ui.clone();
    }
    let span = Subspace::from_vectors(dim, vec![unit_vector(dim, 0), unit_vector(dim, 2 * k - 1), a, b])?;
    orthogonal_complement(&span, &InnerProduct::identity(dim))
}

/// `X_1 = E_1`, `X_2 = (0; 0_{k−1}, q, 0, 0)`, `X_i = N^{i−2} X_2`.
pub fn presentation_basis(c: &M01Construction) -> Result<Vec<Vector<RadNum>>> {
    let k = c.k;
    let mut x2 = vec![RadNum::zero(); 2 * k];
    for (i, qi) in c.q.iter().enumerate() {
        x2[k - 1 + i] = qi.clone();
    }
    let embed = |v: &[RadNum]| std::iter::once(RadNum::zero()).chain(v.iter().cloned()).collect::<Vec<_>>();
    let mut basis = vec![unit_vector(2 * k + 1, 0), embed(&x2)];
    let mut cur = x2;
    for _ in 3..=2 * k + 1 {
        cur = c.n.mul_vec(&cur)?;
        basis.push(embed(&cur));
    }
    Ok(basis)
}

fn check_block_pattern(c: &M01Construction, report: &mut CertificationReport) -> Result<()> {
    // N^{2m+1} = [[0, S(Tᵗ)^m, 0, 0], [(−S+uuᵗ)T^m, 0, 0, 0], [pᵗT^m, 0, 0, 0], [0, pᵗS(Tᵗ)^{m−1}, 0, 0]]
    let k = c.k;
    let m_ = k - 1;
    let s = diag(&c.d);
    let lower = c.n.block(m_, 0, m_, m_);
    let prow = Matrix::from_rows(vec![c.p.clone()], m_)?;
    let mut ok = true;
    for m in 1..k {
        let tm = c.t.pow(m as u32)?;
        let ttm = c.t.transpose().pow(m as u32)?;
        let mut expected = Matrix::zeros(2 * k, 2 * k);
        expected.set_block(0, m_, &s.mul(&ttm)?);
        expected.set_block(m_, 0, &lower.mul(&tm)?);
        expected.set_block(2 * m_, 0, &prow.mul(&tm)?);
        expected.set_block(2 * m_ + 1, m_, &prow.mul(&s)?.mul(&c.t.transpose().pow(m as u32 - 1)?)?);
        if c.n.pow(2 * m as u32 + 1)? != expected {
            ok = false;
            report.record("N_odd_power_blocks", false, format!("block pattern of N^{} differs", 2 * m + 1));
            break;
        }
    }
    if ok {
        report.record("N_odd_power_blocks", true, format!("N^(2m+1) block form for m = 1..{}", k - 1));
    }
    Ok(())
}

fn certify(c: &M01Construction) -> Result<CertificationReport> {
    let k = c.k;
    let dim = 2 * k + 1;
    let mut report = CertificationReport::default();
    let s = diag(&c.d);
    let s_inv = Matrix::diagonal(&c.d.iter().map(|x| lift(&x.recip())).collect::<Vec<_>>());
    let s_inv2 = s_inv.mul(&s_inv)?;

    // ⟨S^{1−2l} u, u⟩ = δ_{l,1} and rk(S^{-1}u, …, S^{3−2k}u) = k − 1
    let mut cols = Vec::new();
    let mut v = s_inv.mul_vec(&c.u)?;
    let mut su_ok = true;
    for l in 1..k {
        let val = dot(&v, &c.u);
        let want = if l == 1 { RadNum::one() } else { RadNum::zero() };
        su_ok &= val == want;
        cols.push(v.clone());
        v = s_inv2.mul_vec(&v)?;
    }
    let su_rank = rank(&Matrix::from_columns(&cols, k - 1)?);
    report.record("Su", su_ok && su_rank == k - 1, format!("pairings δ_(l,1) for l = 1..{}, rank {su_rank}", k - 1));

    // the same identity in rational form, and its reduction to the combinatorial lemma
    let b: Vec<Rational> = c.d.iter().map(|x| x * x).collect();
    let mut sec_ok = true;
    for l in 1..k {
        let lhs: Rational =
            c.d.iter()
                .zip(&c.u)
                .map(|(di, ui)| rpow(di, 1 - 2 * l as i64) * (ui.clone() * ui).as_rational().expect("u_i² is rational"))
                .sum();
        let want = if l == 1 { Rational::one() } else { Rational::zero() };
        sec_ok &= lhs == want && comb_sum(&b, k - 1 - l)? == want;
    }
    report.record("seccond", sec_ok, "Σ d_i^(1−2l) u_i² = δ_(l,1), matching comb_sum with b_i = d_i²");

    let tk1 = c.t.pow((k - 1) as u32)?;
    report.record("T_nilpotent", tk1.is_zero(), format!("T^{} = 0", k - 1));

    let mut tsju = true;
    for m in 1..k {
        let tm = c.t.pow(m as u32)?;
        for j in 1..=m {
            let sv = Matrix::diagonal(&c.d.iter().map(|x| lift(&rpow(x, 1 - 2 * j as i64))).collect::<Vec<_>>())
                .mul_vec(&c.u)?;
            tsju &= is_zero_vec(&tm.mul_vec(&sv)?);
        }
    }
    report.record("TmSju", tsju, "T^m S^(1−2j) u = 0 for 1 ≤ j ≤ m ≤ k−1");

    let mut tms = true;
    for m in 0..=k - 2 {
        let val = dot(&c.t.pow(m as u32)?.mul(&s)?.mul_vec(&c.q)?, &c.q);
        tms &= val == if m == k - 2 { RadNum::one() } else { RadNum::zero() };
    }
    report.record("TmS", tms, "⟨T^m S q, q⟩ = δ_(m,k−2) for m = 0..k−2");

    let tsp = c.t.pow((k - 2) as u32)?.mul(&s)?.mul_vec(&c.p)?;
    let pq = dot(&tsp, &c.q);
    report.record("pq", pq == RadNum::from_int(-1), format!("⟨T^(k−2) S p, q⟩ = {pq}"));
    report.record("mnilp", !is_zero_vec(&tsp), "T^(k−2) S p ≠ 0");

    report.record("K_skew", c.kmat.is_skew_symmetric(), "Kᵗ = −K");
    report.record("KN_symmetric", c.kmat.mul(&c.n)?.is_symmetric(), "(KN)ᵗ = KN");

    check_block_pattern(c, &mut report)?;
    let n2k1 = c.n.pow((2 * k - 1) as u32)?;
    let n2k = n2k1.mul(&c.n)?;
    report.record("N_index", !n2k1.is_zero() && n2k.is_zero(), format!("N^{} ≠ 0, N^{} = 0", 2 * k - 1, 2 * k));

    let jac = c.algebra.jacobi_check();
    report.record(
        "jacobi",
        jac.is_ok(),
        match jac.violation() {
            Some(v) => format!("fails on triple {:?}", v.triple),
            None => format!("all {} basis triples", dim * (dim - 1) * (dim - 2) / 6),
        },
    );
    let top = unit_vector(dim, dim - 1);
    let central =
        (0..dim).all(|i| c.algebra.bracket(&unit_vector(dim, i), &top).map(|v| is_zero_vec(&v)).unwrap_or(false));
    report.record("E_top_central", central, format!("[E_i, E_{dim}] = 0"));
    report.record("filiform", c.algebra.is_filiform(), "lower central series n, n−2, …, 0");

    let ip = InnerProduct::identity(dim);
    report.record("h_subalgebra", is_subalgebra(&c.algebra, &c.h)?, format!("dim h = {}", c.h.dim()));
    let tgs = is_totally_geodesic(&c.algebra, &ip, &c.h)?;
    report.record(
        "h_totally_geodesic",
        tgs.verdict,
        match &tgs.witness {
            Some(w) => format!("⟨[X,Y],Z⟩ + ⟨[X,Z],Y⟩ = {} at basis triple {:?}", w.residual, w.indices),
            None => "⟨[X,Y],Z⟩ + ⟨[X,Z],Y⟩ = 0 for X ∈ h^⊥, Y, Z ∈ h".to_string(),
        },
    );
    report.record("codim_4", dim - c.h.dim() == 4, format!("codim h = {}", dim - c.h.dim()));

    match verify_m01_presentation(c)? {
        Verdict::Ok => report.record("presentation", true, "X_i = N^(i−2) X_2 satisfy the m01 relations"),
        Verdict::Violation(v) => report.record("presentation", false, v),
    }
    Ok(report)
}

/// Builds the algebra, `h`, and certifies every identity of the construction.
pub fn assemble(k: usize, d: &[Rational], u: &[RadNum], p: &[RadNum]) -> Result<M01Construction> {
    check_k(k)?;
    if d.len() != k - 1 || u.len() != k - 1 || p.len() != k - 1 {
        return Err(Error::DimensionMismatch(format!("S, u, p must have size {}", k - 1)));
    }
    let q = build_q(k, d, u)?;
    let w = w_vector(k, d, u, &q)?;
    let t = t_matrix(d, u)?;
    let (n, kmat) = n_k_matrices(k, d, u, p)?;
    let algebra = frame_algebra(k, &n, &kmat)?;
    let h = subalgebra_h(k, u)?;
    let mut x2 = vec![RadNum::zero(); 2 * k + 1];
    for (i, qi) in q.iter().enumerate() {
        x2[k + i] = qi.clone();
    }
    let mut c = M01Construction {
        k,
        d: d.to_vec(),
        u: u.to_vec(),
        s: diag(d),
        t,
        n,
        kmat,
        q,
        p: p.to_vec(),
        w,
        x2,
        algebra,
        h,
        report: CertificationReport::default(),
    };
    c.report = certify(&c)?.into_result()?;
    Ok(c)
}

/// Full pipeline: choose `S, u`, then `q`, then `p`, then assemble and certify.
pub fn construct(k: usize, magnitudes: Option<&[Rational]>) -> Result<M01Construction> {
    let (d, u) = choose_s_u(k, magnitudes)?;
    let q = build_q(k, &d, &u)?;
    let p = build_p(k, &d, &u, &q)?;
    assemble(k, &d, &u, &p)
}

/// Checks `[X_1, X_i] = X_{i+1}`, `X_{2k+1} = −E_{2k+1}`, independence, and
/// `[X_i, X_j] = (−1)^{i+1} δ_{i+j,2k+1} X_{2k+1}` for `2 ≤ i < j`.
pub fn verify_m01_presentation(c: &M01Construction) -> Result<Verdict<String>> {
    let k = c.k;
    let dim = 2 * k + 1;
    let x = presentation_basis(c)?;
    let g = &c.algebra;
    if rank(&Matrix::from_columns(&x, dim)?) != dim {
        return Ok(Verdict::Violation("X_1..X_n are linearly dependent".into()));
    }
    let minus_top = vec_scale(&RadNum::from_int(-1), &unit_vector(dim, dim - 1));
    if x[dim - 1] != minus_top {
        return Ok(Verdict::Violation(format!("X_{dim} ≠ −E_{dim}")));
    }
    for i in 2..dim {
        if g.bracket(&x[0], &x[i - 1])? != x[i] {
            return Ok(Verdict::Violation(format!("[X_1, X_{i}] ≠ X_{}", i + 1)));
        }
    }
    for i in 2..=dim {
        for j in i + 1..=dim {
            let lhs = g.bracket(&x[i - 1], &x[j - 1])?;
            let rhs = if i + j == dim {
                let sign = if i % 2 == 1 { 1 } else { -1 };
                vec_scale(&RadNum::from_int(sign), &x[dim - 1])
            } else {
                vec![RadNum::zero(); dim]
            };
            if lhs != rhs {
                return Ok(Verdict::Violation(format!("[X_{i}, X_{j}] has the wrong value")));
            }
        }
    }
    Ok(Verdict::Ok)
}

impl M01Construction {
    /// Map `frame algebra → m01(2k+1)` sending `X_i ↦ X_i` (inverse of the basis matrix).
    pub fn witness_map(&self) -> Result<Matrix<RadNum>> {
        let basis = presentation_basis(self)?;
        crate::catalog::basis_witness(&basis)?
            .ok_or_else(|| Error::CertificationFailed { stage: "presentation".into(), detail: "singular basis".into() })
    }

    pub fn report_json(&self) -> Value {
        json!({
            "k": self.k,
            "d": self.d.iter().map(format_rational).collect::<Vec<_>>(),
            "u": vector_to_json(&self.u),
            "q": vector_to_json(&self.q),
            "p": vector_to_json(&self.p),
            "w": vector_to_json(&self.w),
            "dim": 2 * self.k + 1,
            "dim_h": self.h.dim(),
            "certified": self.report.all_passed(),
            "checks": self.report.to_json(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    fn sqrt(r: Rational) -> RadNum {
        rad_sqrt_rational(&r).unwrap()
    }

    #[test]
    fn k3_data() {
        let (d, u) = choose_s_u(3, Some(&[int(2), int(1)])).unwrap();
        assert_eq!(d, vec![int(2), int(-1)]);
        assert_eq!(u, vec![sqrt(rat(8, 3)), sqrt(rat(1, 3))]);
        let t = t_matrix(&d, &u).unwrap();
        let r2 = sqrt(int(2));
        let expected = Matrix::new(
            2,
            2,
            vec![lift(&rat(4, 3)), lift(&rat(4, 3)) * &r2, lift(&rat(-2, 3)) * &r2, lift(&rat(-4, 3))],
        )
        .unwrap();
        assert_eq!(t, expected);
        assert!(t.pow(2).unwrap().is_zero());
        assert_eq!(chi_polynomial(3, &d), Poly::new(vec![int(4), int(-5)]));
        let q = build_q(3, &d, &u).unwrap();
        assert_eq!(q, vec![lift(&rat(-3, 16)) * &u[0], lift(&rat(3, 4)) * &u[1]]);
    }

    #[test]
    fn k3_pipeline() {
        let c = construct(3, Some(&[int(2), int(1)])).unwrap();
        assert!(c.report.all_passed());
        assert_eq!(c.h.dim(), 3);
        assert_eq!(c.algebra.dim(), 7);
    }

    #[test]
    fn flipped_p_is_rejected() {
        let (d, u) = choose_s_u(3, None).unwrap();
        let q = build_q(3, &d, &u).unwrap();
        let p = build_p(3, &d, &u, &q).unwrap();
        let neg: Vec<RadNum> = p.iter().map(|x| -x.clone()).collect();
        match assemble(3, &d, &u, &neg) {
            Err(Error::CertificationFailed { stage, .. }) => assert_eq!(stage, "pq"),
            other => panic!("expected a certification failure, got {other:?}"),
        }
    }

    #[test]
    fn bad_inputs() {
        assert_eq!(choose_s_u(2, None), Err(Error::BadK(2)));
        assert_eq!(choose_s_u(3, Some(&[int(2), int(2)])), Err(Error::DuplicateMagnitudes));
    }
}

//! Independent oracles and fixtures shared by the integration tests.
//!
//! The oracles work on dense structure-constant tables and plain loops, without
//! going through the library's bracket, subspace or inner-product code.

#![allow(dead_code)]

use filiform_core::catalog::{Family, FamilySpec};
use filiform_core::exactnum::{int, rat};
use filiform_core::{LieAlgebra, Matrix, Rational, Scalar, Vector};
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// `c[i][j][k]` = coefficient of `X_{k+1}` in `[X_{i+1}, X_{j+1}]`, antisymmetric in `i, j`.
pub fn constants<S: Scalar>(g: &LieAlgebra<S>) -> Vec<Vec<Vec<S>>> {
    let n = g.dim();
    let mut c = vec![vec![vec![S::zero(); n]; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = g.structure(i, j);
            for k in 0..n {
                c[i][j][k] = v[k].clone();
                c[j][i][k] = -v[k].clone();
            }
        }
    }
    c
}

pub fn bracket<S: Scalar>(c: &[Vec<Vec<S>>], x: &[S], y: &[S]) -> Vec<S> {
    let n = c.len();
    let mut out = vec![S::zero(); n];
    for i in 0..n {
        if x[i].is_zero() {
            continue;
        }
        for j in 0..n {
            if y[j].is_zero() {
                continue;
            }
            let xy = x[i].clone() * &y[j];
            for k in 0..n {
                if !c[i][j][k].is_zero() {
                    out[k] = out[k].clone() + &(xy.clone() * &c[i][j][k]);
                }
            }
        }
    }
    out
}

pub fn inner<S: Scalar>(gram: &Matrix<S>, x: &[S], y: &[S]) -> S {
    let n = x.len();
    let mut s = S::zero();
    for i in 0..n {
        for j in 0..n {
            s = s + &(x[i].clone() * &gram[(i, j)] * &y[j]);
        }
    }
    s
}

/// Σ_cyclic c_{ij}^m c_{mk}^l = 0 for all i<j<k and l.
pub fn jacobi_holds<S: Scalar>(g: &LieAlgebra<S>) -> bool {
    let c = constants(g);
    let n = c.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let mut s = vec![S::zero(); n];
                for (a, b, outer) in [(j, k, i), (k, i, j), (i, j, k)] {
                    for m in 0..n {
                        if c[a][b][m].is_zero() {
                            continue;
                        }
                        for l in 0..n {
                            if !c[outer][m][l].is_zero() {
                                s[l] = s[l].clone() + &(c[a][b][m].clone() * &c[outer][m][l]);
                            }
                        }
                    }
                }
                if s.iter().any(|x| !x.is_zero()) {
                    return false;
                }
            }
        }
    }
    true
}

/// `c_{ij}^k ≠ 0` only for `k = i + j` (1-based), and `[X_1, X_i]` has a nonzero
/// `X_{i+1}` component for `1 < i < n`.
pub fn graded_filiform(g: &LieAlgebra<Rational>) -> (bool, bool) {
    let c = constants(g);
    let n = c.len();
    let mut graded = true;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if !c[i][j][k].is_zero() && k + 1 != (i + 1) + (j + 1) {
                    graded = false;
                }
            }
        }
    }
    let filiform = (1..n - 1).all(|i| !c[0][i][i + 1].is_zero());
    (graded, filiform)
}

/// Eq. (1) on explicit bases of `h` and of its orthogonal complement.
pub fn eq1_holds<S: Scalar>(g: &LieAlgebra<S>, gram: &Matrix<S>, h: &[Vector<S>], perp: &[Vector<S>]) -> bool {
    let c = constants(g);
    for x in perp {
        for y in h {
            let xy = bracket(&c, x, y);
            for z in h {
                let xz = bracket(&c, x, z);
                if !(inner(gram, &xy, z) + inner(gram, &xz, y)).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}

/// Closure of a coordinate span under the bracket, read off the table.
pub fn coordinate_subalgebra<S: Scalar>(c: &[Vec<Vec<S>>], subset: &[usize]) -> bool {
    for &i in subset {
        for &j in subset {
            for (k, v) in c[i - 1][j - 1].iter().enumerate() {
                if !v.is_zero() && !subset.contains(&(k + 1)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Eq. (1) for a coordinate span under the identity inner product:
/// `c_{xy}^z + c_{xz}^y = 0` for `x ∉ S`, `y, z ∈ S`.
pub fn coordinate_tgs<S: Scalar>(c: &[Vec<Vec<S>>], subset: &[usize]) -> bool {
    let n = c.len();
    coordinate_subalgebra(c, subset)
        && (1..=n).filter(|x| !subset.contains(x)).all(|x| {
            subset
                .iter()
                .all(|&y| subset.iter().all(|&z| (c[x - 1][y - 1][z - 1].clone() + &c[x - 1][z - 1][y - 1]).is_zero()))
        })
}

/// Largest passing coordinate span over subsets of `{2..n}`, by brute force.
pub fn coordinate_search_max<S: Scalar>(g: &LieAlgebra<S>) -> usize {
    let c = constants(g);
    let n = g.dim();
    let mut best = 0;
    for mask in 0u32..1 << (n - 1) {
        let subset: Vec<usize> = (0..n - 1).filter(|b| mask >> b & 1 == 1).map(|b| b + 2).collect();
        if subset.len() > best && coordinate_tgs(&c, &subset) {
            best = subset.len();
        }
    }
    best
}

pub const ALPHA_SAMPLE: [(i64, i64); 12] =
    [(-3, 1), (-3, 2), (-1, 1), (-1, 4), (0, 1), (1, 2), (1, 1), (2, 1), (8, 1), (10, 1), (-13, 6), (-17, 6)];

pub fn alpha_sample() -> Vec<Rational> {
    ALPHA_SAMPLE.iter().map(|&(p, q)| rat(p, q)).collect()
}

fn g_family(n: usize) -> Family {
    Family::g(n).expect("7..11")
}

/// Every catalog spec of dimension ≤ `max_dim` (g families over the valid sampled α).
pub fn catalog_specs(max_dim: usize) -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    for n in 3..=max_dim {
        specs.push(FamilySpec::m0(n));
        specs.push(FamilySpec::v(n));
        if n >= 5 {
            specs.push(FamilySpec::m2(n));
        }
        if n >= 7 && n % 2 == 1 {
            specs.push(FamilySpec::m01((n - 1) / 2));
        }
        if n >= 8 && n % 2 == 0 {
            specs.push(FamilySpec::m02((n - 2) / 2));
        }
        if n >= 9 && n % 2 == 1 {
            specs.push(FamilySpec::m03((n - 3) / 2));
        }
        if (7..=11).contains(&n) {
            let forbidden = g_family(n).forbidden_alpha();
            for a in alpha_sample() {
                if !forbidden.contains(&a) {
                    specs.push(FamilySpec::g(n, a).unwrap());
                }
            }
        }
    }
    specs
}

pub fn rand_rat(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    rat(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

pub fn rand_nonzero(rng: &mut ChaCha8Rng, num: i64, den: i64) -> Rational {
    loop {
        let r = rand_rat(rng, num, den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// `L Lᵗ` with `L` lower triangular, small entries, positive diagonal.
pub fn random_gram(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    let mut l = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(0.4) {
                l[(i, j)] = rand_rat(rng, 2, 2);
            }
        }
        l[(i, i)] = int(rng.gen_range(1..=3));
    }
    l.mul(&l.transpose()).unwrap()
}

pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix<Rational> {
    loop {
        let data = (0..n * n).map(|_| rand_rat(rng, 3, 2)).collect();
        let m = Matrix::new(n, n, data).unwrap();
        if filiform_core::linalg::rank(&m) == n {
            return m;
        }
    }
}

/// Random linear combinations `Σ_j m_{ij} b_j`.
pub fn recombine(m: &Matrix<Rational>, basis: &[Vector<Rational>]) -> Vec<Vector<Rational>> {
    (0..m.rows())
        .map(|i| {
            let mut v = vec![Rational::zero(); basis[0].len()];
            for (j, b) in basis.iter().enumerate() {
                for (vk, bk) in v.iter_mut().zip(b) {
                    *vk += &m[(i, j)] * bk;
                }
            }
            v
        })
        .collect()
}

//! Shared fixtures for the benchmarks.

use filiform_core::catalog::{build, FamilySpec};
use filiform_core::linalg::unit_vector;
use filiform_core::{LieAlgebra, Rational, Vector};

pub fn catalog_algebra(spec: &FamilySpec) -> LieAlgebra<Rational> {
    build(spec).expect("catalog fixture")
}

pub fn structure_basis(n: usize) -> Vec<Vector<Rational>> {
    (0..n).map(|i| unit_vector(n, i)).collect()
}

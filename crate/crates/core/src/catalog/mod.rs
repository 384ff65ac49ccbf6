//! The graded filiform algebras of the classification, family tests, and isomorphism witnesses.

mod iso;

pub use iso::{
    basis_witness, builtin_witness, generator_image_search, iso_witness_check, quotient_matches_family, truncate_top,
    IsoViolation, QuotientMatch,
};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{format_rational, int, parse_rational, rat};
use crate::lie::LieAlgebra;
use crate::scalar::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    M0,
    M2,
    V,
    M01,
    M02,
    M03,
    G7,
    G8,
    G9,
    G10,
    G11,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::M0,
        Family::M2,
        Family::V,
        Family::M01,
        Family::M02,
        Family::M03,
        Family::G7,
        Family::G8,
        Family::G9,
        Family::G10,
        Family::G11,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::M0 => "m0",
            Family::M2 => "m2",
            Family::V => "V",
            Family::M01 => "m01",
            Family::M02 => "m02",
            Family::M03 => "m03",
            Family::G7 => "g7",
            Family::G8 => "g8",
            Family::G9 => "g9",
            Family::G10 => "g10",
            Family::G11 => "g11",
        }
    }

    /// The one-parameter family `g_{n,α}` of dimension `n`.
    pub fn g(n: usize) -> Option<Family> {
        match n {
            7 => Some(Family::G7),
            8 => Some(Family::G8),
            9 => Some(Family::G9),
            10 => Some(Family::G10),
            11 => Some(Family::G11),
            _ => None,
        }
    }

    /// Fixed dimension of a one-parameter family.
    pub fn fixed_dim(self) -> Option<usize> {
        match self {
            Family::G7 => Some(7),
            Family::G8 => Some(8),
            Family::G9 => Some(9),
            Family::G10 => Some(10),
            Family::G11 => Some(11),
            _ => None,
        }
    }

    pub fn has_parameter(self) -> bool {
        self.fixed_dim().is_some()
    }

    /// Values of α excluded by the restrictions column.
    pub fn forbidden_alpha(self) -> Vec<Rational> {
        match self {
            Family::G7 | Family::G8 => vec![int(-2)],
            Family::G9 => vec![rat(-5, 2), int(-2)],
            Family::G10 => vec![rat(-5, 2)],
            Family::G11 => vec![rat(-5, 2), int(-1), int(-3)],
            _ => vec![],
        }
    }

    /// Values of α at which a structure constant has a vanishing denominator.
    fn singular_alpha(self) -> Vec<Rational> {
        match self {
            Family::G9 | Family::G10 => vec![rat(-5, 2)],
            Family::G11 => vec![rat(-5, 2), int(-1), int(-3)],
            _ => vec![],
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| Error::Parse(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub dim: usize,
    pub alpha: Option<Rational>,
}

impl FamilySpec {
    pub fn new(family: Family, dim: usize) -> Self {
        FamilySpec { family, dim, alpha: None }
    }

    /// `g_{n,α}`.
    pub fn g(dim: usize, alpha: Rational) -> Result<Self> {
        let family =
            Family::g(dim).ok_or_else(|| Error::BadDimension(format!("g_{{n,α}} exists for n = 7..11, not {dim}")))?;
        Ok(FamilySpec { family, dim, alpha: Some(alpha) })
    }

    pub fn m0(n: usize) -> Self {
        Self::new(Family::M0, n)
    }

    pub fn m2(n: usize) -> Self {
        Self::new(Family::M2, n)
    }

    pub fn v(n: usize) -> Self {
        Self::new(Family::V, n)
    }

    pub fn m01(k: usize) -> Self {
        Self::new(Family::M01, 2 * k + 1)
    }

    pub fn m02(k: usize) -> Self {
        Self::new(Family::M02, 2 * k + 2)
    }

    pub fn m03(k: usize) -> Self {
        Self::new(Family::M03, 2 * k + 3)
    }

    pub fn label(&self) -> String {
        match &self.alpha {
            Some(a) => format!("{}(α={})", self.family, format_rational(a)),
            None => format!("{}({})", self.family, self.dim),
        }
    }

    fn check_dimension(&self) -> Result<()> {
        let n = self.dim;
        let bad = |msg: String| Err(Error::BadDimension(msg));
        match self.family {
            Family::M0 | Family::V if n < 3 => bad(format!("{} requires n ≥ 3, got {n}", self.family)),
            Family::M2 if n < 5 => bad(format!("m2 requires n ≥ 5, got {n}")),
            Family::M01 if n % 2 != 1 || n < 7 => bad(format!("m01 requires n = 2k+1 with k ≥ 3, got {n}")),
            Family::M02 if !n.is_multiple_of(2) || n < 8 => bad(format!("m02 requires n = 2k+2 with k ≥ 3, got {n}")),
            Family::M03 if n % 2 != 1 || n < 9 => bad(format!("m03 requires n = 2k+3 with k ≥ 3, got {n}")),
            f => match f.fixed_dim() {
                Some(d) if d != n => bad(format!("{f} has dimension {d}, got {n}")),
                _ => Ok(()),
            },
        }
    }

    fn check_parameter(&self, enforce_restrictions: bool) -> Result<Rational> {
        let f = self.family;
        match (&self.alpha, f.has_parameter()) {
            (None, true) => Err(Error::RestrictionViolated(format!("{f} requires a parameter α"))),
            (Some(_), false) => Err(Error::RestrictionViolated(format!("{f} takes no parameter α"))),
            (None, false) => Ok(Rational::zero()),
            (Some(a), true) => {
                let excluded = if enforce_restrictions { f.forbidden_alpha() } else { f.singular_alpha() };
                if excluded.contains(a) {
                    let list: Vec<String> = f.forbidden_alpha().iter().map(format_rational).collect();
                    let verb = if list.len() == 1 { "α ≠" } else { "α ∉" };
                    let set = if list.len() == 1 { list[0].clone() } else { format!("{{{}}}", list.join(", ")) };
                    return Err(Error::RestrictionViolated(format!(
                        "{f} requires {verb} {set} (got α = {})",
                        format_rational(a)
                    )));
                }
                Ok(a.clone())
            }
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "family": self.family.name(),
            "dim": self.dim,
            "alpha": self.alpha.as_ref().map(format_rational),
        })
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let family: Family = value
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("family spec needs `family`".into()))?
            .parse()?;
        let dim =
            value.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("family spec needs `dim`".into()))?
                as usize;
        let alpha = match value.get("alpha") {
            None | Some(Value::Null) => None,
            Some(Value::String(s)) => Some(parse_rational(s)?),
            Some(other) => return Err(Error::Parse(format!("α must be a string, got {other}"))),
        };
        Ok(FamilySpec { family, dim, alpha })
    }
}

/// Structure constants of the family in its canonical graded basis.
pub fn build(spec: &FamilySpec) -> Result<LieAlgebra<Rational>> {
    build_impl(spec, true)
}

/// Like [`build`], but admits the excluded parameters α = −2 of `g7`, `g8`, `g9`
/// (the algebras stay well defined there; the table drops them as duplicates).
pub fn build_unrestricted(spec: &FamilySpec) -> Result<LieAlgebra<Rational>> {
    build_impl(spec, false)
}

fn build_impl(spec: &FamilySpec, enforce_restrictions: bool) -> Result<LieAlgebra<Rational>> {
    spec.check_dimension()?;
    let alpha = spec.check_parameter(enforce_restrictions)?;
    let n = spec.dim;
    let mut g = LieAlgebra::new(n, true);
    let one = Rational::one;
    let mut set = |i: usize, j: usize, c: Rational| g.set_bracket_term(i, j, i + j, c);

    match spec.family {
        Family::V => {
            if n < 12 {
                log::warn!("V_{n} duplicates another family below dimension 12");
            }
            for i in 1..=n {
                for j in i + 1..=n - i {
                    set(i, j, int((j - i) as i64))?;
                }
            }
        }
        family => {
            for i in 2..n {
                set(1, i, one())?;
            }
            match family {
                Family::M0 => {}
                Family::M2 => {
                    for i in 3..=n - 2 {
                        set(2, i, one())?;
                    }
                }
                Family::M01 | Family::M02 | Family::M03 => {
                    let k = match family {
                        Family::M01 => (n - 1) / 2,
                        Family::M02 => (n - 2) / 2,
                        _ => (n - 3) / 2,
                    };
                    let sign = |e: usize| if e.is_multiple_of(2) { 1i64 } else { -1 };
                    for l in 2..=k {
                        set(l, 2 * k - l + 1, int(sign(l + 1)))?;
                    }
                    if family != Family::M01 {
                        for j in 2..=k {
                            set(j, 2 * k - j + 2, int(sign(j + 1) * (k - j + 1) as i64))?;
                        }
                    }
                    if family == Family::M03 {
                        for m in 3..=k + 1 {
                            let (m_, k_) = (m as i64, k as i64);
                            let c = (m_ - 2) * k_ - (m_ - 2) * (m_ - 1) / 2;
                            set(m, 2 * k - m + 3, int(sign(m) * c))?;
                        }
                    }
                }
                _ => one_parameter(&mut set, n, &alpha)?,
            }
        }
    }
    Ok(g)
}

fn one_parameter(set: &mut impl FnMut(usize, usize, Rational) -> Result<()>, n: usize, a: &Rational) -> Result<()> {
    let c = |x: i64| int(x);
    let a2 = a * a;
    let a3 = &a2 * a;
    let two_a5 = c(2) * a + c(5);
    set(2, 3, c(2) + a)?;
    set(2, 4, c(2) + a)?;
    set(2, 5, c(1) + a)?;
    set(3, 4, c(1))?;
    if n >= 8 {
        set(2, 6, a.clone())?;
        set(3, 5, c(1))?;
    }
    if n >= 9 {
        set(2, 7, (c(2) * &a2 + c(3) * a - c(2)) / &two_a5)?;
        set(3, 6, (c(2) * a + c(2)) / &two_a5)?;
        set(4, 5, c(3) / &two_a5)?;
    }
    if n >= 10 {
        set(2, 8, (c(2) * &a2 + a - c(1)) / &two_a5)?;
        set(3, 7, (c(2) * a - c(1)) / &two_a5)?;
        set(4, 6, c(3) / &two_a5)?;
    }
    if n >= 11 {
        let q = c(2) * (&a2 + c(4) * a + c(3));
        let q5 = &q * &two_a5;
        set(2, 9, (c(2) * &a3 + c(2) * &a2 + c(3)) / &q)?;
        set(3, 8, (c(4) * &a3 + c(8) * &a2 - c(8) * a - c(21)) / &q5)?;
        set(4, 7, c(3) * (c(2) * &a2 + c(4) * a + c(5)) / &q5)?;
        set(5, 6, c(3) * (c(4) * a + c(1)) / &q5)?;
    }
    Ok(())
}

/// Membership in the families `O1` (`[X_i, X_{n-i}] = α_i X_n`, `α_i ≠ 0`) and
/// `O2` (additionally `[X_2, X_i] = β_i X_{i+2}`, `β_i ≠ 0`), read off the stored basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilyMembership {
    pub o1: bool,
    pub o2: bool,
}

pub fn classify_families(g: &LieAlgebra<Rational>) -> Result<FamilyMembership> {
    if !g.is_graded() {
        return Err(Error::NotGraded);
    }
    let n = g.dim();
    // nonzero multiple of X_target (1-based)
    let multiple_of = |i: usize, j: usize, target: usize| {
        let v = g.structure(i - 1, j - 1);
        v.iter().enumerate().all(|(k, c)| (k + 1 == target) != c.is_zero())
    };
    let o1 = (2..=(n.saturating_sub(1)) / 2).all(|i| multiple_of(i, n - i, n));
    let o2 = o1 && (3..=n.saturating_sub(2)).all(|i| multiple_of(2, i, i + 2));
    Ok(FamilyMembership { o1, o2 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn coeff(g: &LieAlgebra<Rational>, i: usize, j: usize) -> Rational {
        g.structure(i - 1, j - 1)[i + j - 1].clone()
    }

    #[test]
    fn table_entries() {
        let g9 = build(&FamilySpec::g(9, rat(1, 2)).unwrap()).unwrap();
        assert_eq!(coeff(&g9, 4, 5), rat(1, 2));
        assert_eq!(coeff(&g9, 3, 6), rat(1, 2));
        let m01 = build(&FamilySpec::m01(3)).unwrap();
        assert_eq!(coeff(&m01, 2, 5), int(-1));
        assert_eq!(coeff(&m01, 3, 4), int(1));
        let v12 = build(&FamilySpec::v(12)).unwrap();
        assert_eq!(coeff(&v12, 2, 3), int(1));
        assert_eq!(coeff(&v12, 3, 9), int(6));
        assert!(v12.structure(5, 6).iter().all(Zero::is_zero));
    }

    #[test]
    fn m03_last_relations() {
        // k = 3: [X_3, X_6] = -2 X_9, [X_4, X_5] = 3 X_9
        let g = build(&FamilySpec::m03(3)).unwrap();
        assert_eq!(coeff(&g, 3, 6), int(-2));
        assert_eq!(coeff(&g, 4, 5), int(3));
        assert_eq!(coeff(&g, 2, 7), int(0));
    }

    #[test]
    fn restrictions() {
        let err = build(&FamilySpec::g(7, int(-2)).unwrap()).unwrap_err();
        assert_eq!(err, Error::RestrictionViolated("g7 requires α ≠ -2 (got α = -2)".into()));
        assert!(matches!(build(&FamilySpec::g(11, int(-3)).unwrap()), Err(Error::RestrictionViolated(_))));
        assert!(build_unrestricted(&FamilySpec::g(9, int(-2)).unwrap()).is_ok());
        assert!(build_unrestricted(&FamilySpec::g(9, rat(-5, 2)).unwrap()).is_err());
        assert!(matches!(build(&FamilySpec::m2(4)), Err(Error::BadDimension(_))));
        assert!(matches!(build(&FamilySpec::new(Family::M01, 8)), Err(Error::BadDimension(_))));
        assert!(matches!(build(&FamilySpec::new(Family::G8, 8)), Err(Error::RestrictionViolated(_))));
        assert!(FamilySpec::g(12, int(0)).is_err());
    }

    #[test]
    fn families_o1_o2() {
        let m2 = build(&FamilySpec::m2(6)).unwrap();
        assert_eq!(classify_families(&m2).unwrap(), FamilyMembership { o1: true, o2: true });
        let v11 = build(&FamilySpec::v(11)).unwrap();
        assert_eq!(classify_families(&v11).unwrap(), FamilyMembership { o1: true, o2: true });
        let g9 = build(&FamilySpec::g(9, int(-1)).unwrap()).unwrap();
        assert!(!classify_families(&g9).unwrap().o1);
        let m0 = build(&FamilySpec::m0(6)).unwrap();
        assert!(!classify_families(&m0).unwrap().o1);
        let mut ng = m0.clone();
        ng.set_graded(false);
        assert_eq!(classify_families(&ng), Err(Error::NotGraded));
    }

    #[test]
    fn spec_json() {
        let s = FamilySpec::g(9, rat(1, 2)).unwrap();
        assert_eq!(FamilySpec::from_json(&s.to_json()).unwrap(), s);
        assert_eq!("m03".parse::<Family>().unwrap(), Family::M03);
    }
}

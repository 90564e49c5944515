//! Total Stiefel-Whitney classes for cyclic groups and for `GL(n,q)`.
//!
//! Classes live in `F_2[v_1..v_r]` (generator degree 1) when `q = 3 mod 4` and
//! in `F_2[t_1..t_r]` (generator degree 2) tensored with an exterior algebra on
//! `s_1..s_r` when `q = 1 mod 4`. The exterior part only ever enters through
//! the factor `1 + E_1(s)`, so it is carried as a flag instead of being
//! multiplied out.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::f2poly::{Basis, GF2Poly, Ring};
use crate::symfunc::{dickson_factor, from_elementary_basis};

/// An orthogonal representation of the cyclic group `C_ell`, described by
/// its degree, its value at the central involution and its determinant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicRepInput {
    pub ell: u64,
    pub degree: BigUint,
    pub chi_at_minus1: BigInt,
    pub det_is_trivial: bool,
}

impl CyclicRepInput {
    pub fn new(ell: u64, degree: BigUint, chi_at_minus1: BigInt, det_is_trivial: bool) -> Result<Self> {
        if ell == 0 || ell % 2 == 1 {
            return Err(Error::Validation(format!("group order {ell} must be even and positive")));
        }
        let deg = BigInt::from(degree.clone());
        if chi_at_minus1.abs() > deg {
            return Err(Error::Validation(format!(
                "|chi(-1)| = {} exceeds the degree {degree}",
                chi_at_minus1.abs()
            )));
        }
        if (&deg - &chi_at_minus1).is_odd() {
            return Err(Error::Validation("degree and chi(-1) must have the same parity".into()));
        }
        Ok(CyclicRepInput { ell, degree, chi_at_minus1, det_is_trivial })
    }

    /// `b_pi = (deg - chi(-1)) / 2`, the number of eigenvalues `-1` of the involution.
    pub fn b_pi(&self) -> BigUint {
        let twice = BigInt::from(self.degree.clone()) - &self.chi_at_minus1;
        (twice / BigInt::from(2)).to_biguint().expect("validated on construction")
    }
}

/// A total class: `poly` (constant term 1) possibly times `1 + E_1(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedClass {
    pub poly: GF2Poly,
    pub delta: bool,
}

impl GradedClass {
    pub fn new(poly: GF2Poly, delta: bool) -> Result<GradedClass> {
        if !poly.has_unit_constant() {
            return Err(Error::NotUnit);
        }
        if delta && poly.generator_degree() != 2 {
            return Err(Error::Precondition("the exterior factor only exists when q = 1 mod 4".into()));
        }
        Ok(GradedClass { poly, delta })
    }

    /// 3 for `v`-variables, 1 for `t`-variables.
    pub fn q_mod4(&self) -> u8 {
        if self.poly.generator_degree() == 1 {
            3
        } else {
            1
        }
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }

    /// The polynomial part of `w_k`; the exterior factor is ignored.
    pub fn degree_part(&self, k: u64) -> GF2Poly {
        self.poly.homogeneous_part(k)
    }

    /// Nonzero homogeneous components of the polynomial part, keyed by degree.
    pub fn classes(&self) -> std::collections::BTreeMap<u64, GF2Poly> {
        self.poly.homogeneous_parts()
    }

    pub fn to_monomial_basis(&self) -> Result<GradedClass> {
        let poly = match self.poly.basis() {
            Basis::Monomial => self.poly.clone(),
            Basis::Elementary => from_elementary_basis(&self.poly)?,
        };
        Ok(GradedClass { poly, delta: self.delta })
    }

    /// Substitutes `t_i -> v_i^2`, the restriction from the `C_(q-1)`-torus to
    /// its 2-torsion. Degrees are preserved. Classes carrying the exterior
    /// factor are rejected.
    pub fn restrict_t_to_v_squared(&self) -> Result<GradedClass> {
        if self.poly.generator_degree() != 2 {
            return Err(Error::Precondition("class is not in t-variables".into()));
        }
        if self.delta {
            return Err(Error::Precondition("restriction of the exterior factor is not modelled".into()));
        }
        let bound = self.poly.truncation();
        let mut poly = self.poly.clone().untruncated().with_generator_degree(1)?;
        poly = poly.frobenius_truncated(1, None)?;
        if let Some(b) = bound {
            poly = poly.truncated(b);
        }
        Ok(GradedClass { poly, delta: false })
    }
}

impl fmt::Display for GradedClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.delta {
            return write!(f, "{}", self.poly);
        }
        let r = self.poly.num_vars();
        let s: Vec<String> = (1..=r).map(|i| format!("s{i}")).collect();
        write!(f, "(1 + {})*({})", s.join(" + "), self.poly)
    }
}

fn full_degree_bound(b: &BigUint, weight: u64) -> Result<u64> {
    b.to_u64()
        .and_then(|x| x.checked_mul(weight))
        .ok_or_else(|| Error::DegreeOverflow(format!("b_pi = {b} needs an explicit max_degree")))
}

/// `w(pi)` for an orthogonal representation of `C_ell`: `(1+v)^b` when
/// `ell = 2 mod 4`, `(1 + delta s)(1+t)^(b/2)` when `ell = 0 mod 4`.
pub fn cyclic_swc(input: &CyclicRepInput, max_degree: Option<u64>) -> Result<GradedClass> {
    let b = input.b_pi();
    if input.ell % 4 == 2 {
        let ring = Ring::new(1, 1)?;
        let bound = match max_degree {
            Some(d) => d,
            None => full_degree_bound(&b, 1)?,
        };
        let base = GF2Poly::parse(ring, "1 + v1")?;
        return GradedClass::new(base.pow_truncated(&b, bound)?, false);
    }
    if b.is_odd() {
        return Err(Error::OddBPi(b.to_string()));
    }
    let half = b >> 1u32;
    let ring = Ring::new(1, 2)?;
    let bound = match max_degree {
        Some(d) => d,
        None => full_degree_bound(&half, 2)?,
    };
    let base = GF2Poly::parse(ring, "1 + t1")?;
    GradedClass::new(base.pow_truncated(&half, bound)?, !input.det_is_trivial)
}

/// `w(pi)` for an orthogonal representation of `GL(r,q)` whose restriction to
/// the diagonal 2-torsion is `sum_k m_k sigma_k`; `mult` holds `m_1..m_r`.
///
/// For `q = 3 mod 4` this is `prod_k D^[k](v)^(m_k)`; for `q = 1 mod 4` it is
/// `(1 + delta E_1(s)) prod_k D^[k](t)^(m_k/2)`. The result is in the
/// monomial basis, truncated at `max_degree`.
pub fn gl_total_swc(r: usize, q_mod4: u8, mult: &[BigUint], delta: bool, max_degree: u64) -> Result<GradedClass> {
    if mult.len() != r {
        return Err(Error::Arity(format!("expected {r} multiplicities, got {}", mult.len())));
    }
    let (generator_degree, bound) = match q_mod4 {
        3 => {
            if delta {
                return Err(Error::Precondition("the exterior factor only exists when q = 1 mod 4".into()));
            }
            (1, max_degree)
        }
        1 => {
            if let Some((k, m)) = mult.iter().enumerate().find(|(_, m)| m.is_odd()) {
                return Err(Error::OddMultiplicity { index: k + 1, value: m.to_string() });
            }
            (2, max_degree / 2)
        }
        other => return Err(Error::Validation(format!("q mod 4 must be 1 or 3, got {other}"))),
    };
    let ring = Ring::new(r, 1)?;
    let mut acc = GF2Poly::one(ring).truncated(bound);
    for (k, m) in mult.iter().enumerate() {
        let exponent = if generator_degree == 2 { m >> 1u32 } else { m.clone() };
        if exponent.is_zero() {
            continue;
        }
        let factor = dickson_factor(r, k + 1, Some(bound))?;
        acc = acc.mul(&factor.pow_truncated(&exponent, bound)?)?;
    }
    let poly = if generator_degree == 2 {
        acc.with_generator_degree(2)?
    } else {
        acc
    };
    GradedClass::new(poly, delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ubig(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    fn cyc(ell: u64, deg: u64, chi: i64, det: bool) -> CyclicRepInput {
        CyclicRepInput::new(ell, BigUint::from(deg), BigInt::from(chi), det).unwrap()
    }

    #[test]
    fn cyclic_examples() {
        let sgn = cyclic_swc(&cyc(6, 1, -1, false), None).unwrap();
        assert_eq!(sgn.to_string(), "1 + v1");
        let s_psi = cyclic_swc(&cyc(4, 2, -2, true), None).unwrap();
        assert_eq!(s_psi.to_string(), "1 + t1");
        assert_eq!(s_psi.q_mod4(), 1);
        assert_eq!(cyclic_swc(&cyc(4, 1, 1, true), None).unwrap().to_string(), "1");
        let with_delta = cyclic_swc(&cyc(4, 5, 1, false), None).unwrap();
        assert_eq!(with_delta.to_string(), "(1 + s1)*(1 + t1)");
    }

    #[test]
    fn cyclic_rejects_bad_input() {
        assert!(matches!(
            cyclic_swc(&cyc(8, 2, 0, true), None),
            Err(Error::OddBPi(_))
        ));
        assert!(CyclicRepInput::new(4, BigUint::from(1u32), BigInt::from(3), true).is_err());
        assert!(CyclicRepInput::new(4, BigUint::from(2u32), BigInt::from(1), true).is_err());
        assert!(CyclicRepInput::new(3, BigUint::from(2u32), BigInt::from(0), true).is_err());
    }

    #[test]
    fn cyclic_degree_is_bounded_by_rep_degree() {
        for deg in 0..12u64 {
            for b in 0..=deg {
                let chi = deg as i64 - 2 * b as i64;
                let w = cyclic_swc(&cyc(6, deg, chi, true), None).unwrap();
                assert!(w.poly.degree().unwrap() <= deg);
                if b % 2 == 0 {
                    let w = cyclic_swc(&cyc(12, deg, chi, true), None).unwrap();
                    assert!(w.poly.degree().unwrap() <= deg);
                }
            }
        }
    }

    #[test]
    fn gl_examples() {
        let w = gl_total_swc(2, 3, &ubig(&[1, 1]), false, 16).unwrap();
        assert_eq!(w.poly, crate::symfunc::dickson_full(2, None).unwrap());
        assert_eq!(w.poly.to_string(), "1 + v1^2 + v1*v2 + v2^2 + v1^2*v2 + v1*v2^2");

        assert!(gl_total_swc(3, 3, &ubig(&[0, 0, 0]), false, 16).unwrap().poly.is_one());
        assert!(gl_total_swc(3, 1, &ubig(&[0, 0, 0]), true, 16).unwrap().poly.is_one());

        let w = gl_total_swc(2, 1, &ubig(&[2, 0]), false, 16).unwrap();
        assert_eq!(w.poly.to_string(), "1 + t1 + t2 + t1*t2");
        // squaring D^[1](v) is the same as t_i -> v_i^2
        let sq = gl_total_swc(2, 3, &ubig(&[2, 0]), false, 16).unwrap();
        assert_eq!(w.restrict_t_to_v_squared().unwrap().poly, sq.poly);
    }

    #[test]
    fn gl_errors() {
        assert!(matches!(
            gl_total_swc(2, 1, &ubig(&[1, 0]), false, 8),
            Err(Error::OddMultiplicity { index: 1, .. })
        ));
        assert!(matches!(gl_total_swc(2, 3, &ubig(&[0, 0]), true, 8), Err(Error::Precondition(_))));
        assert!(gl_total_swc(2, 3, &ubig(&[0]), false, 8).is_err());
        assert!(gl_total_swc(2, 2, &ubig(&[0, 0]), false, 8).is_err());
    }

    #[test]
    fn delta_rendering() {
        let w = gl_total_swc(2, 1, &ubig(&[2, 0]), true, 4).unwrap();
        assert_eq!(w.to_string(), "(1 + s1 + s2)*(1 + t1 + t2 + t1*t2)");
        assert_eq!(w.degree_part(2).to_string(), "t1 + t2");
    }
}

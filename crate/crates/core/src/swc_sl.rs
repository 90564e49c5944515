//! Total Stiefel-Whitney classes of orthogonal representations of `SL(n,q)`
//! for odd `n >= 3` and odd `q`, computed from character values.
//!
//! The diagonal 2-torsion `T[2]` has rank `r = n - 1`, and the restriction of
//! `pi` to it is `sum_k m_k sigma_k` with `m_k = m_(n-k)`. With
//! `F_k = D^[k] D^[n-k]` the total class is `prod_k F_k(v)^(m_k)` when
//! `q = 3 mod 4` and `prod_k F_k(t)^(m_k/2)` when `q = 1 mod 4`, for
//! `k = 1..(n-1)/2`. Classes are returned in the elementary basis `E_1..E_r`.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{binomial, binomial_is_odd, exact_nonneg_shift, ord2, signed_binomial_coefficient};
use crate::eab2::MultiplicityVector;
use crate::error::{Error, Result};
use crate::f2poly::{GF2Poly, Monomial, Ring};
use crate::swc_gl::GradedClass;
use crate::symfunc::{dickson_factor_elementary, h2_elementary, SymPolyE};

pub const DEFAULT_MAX_DEGREE: u64 = 16;

/// `SL(n,q)` with `n` odd, `n >= 3`, and `q` an odd prime power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    n: u32,
    q: u64,
}

/// `Some(p)` when `q = p^a` with `p` prime and `a >= 1`.
fn prime_base(q: u64) -> Option<u64> {
    if q < 2 {
        return None;
    }
    let p = (2..).take_while(|d: &u64| d.saturating_mul(*d) <= q).find(|d| q.is_multiple_of(*d)).unwrap_or(q);
    let mut rest = q;
    while rest.is_multiple_of(p) {
        rest /= p;
    }
    (rest == 1).then_some(p)
}

impl GroupSpec {
    pub fn new(n: u32, q: u64) -> Result<GroupSpec> {
        if n < 3 || n.is_multiple_of(2) {
            return Err(Error::Validation(format!("n = {n} must be odd and at least 3")));
        }
        if q.is_multiple_of(2) {
            return Err(Error::Validation(format!("q = {q} must be odd")));
        }
        if prime_base(q).is_none() {
            return Err(Error::Validation(format!("q = {q} is not a prime power")));
        }
        Ok(GroupSpec { n, q })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn q_mod4(&self) -> u8 {
        (self.q % 4) as u8
    }

    /// Rank `n - 1` of the diagonal 2-torsion subgroup.
    pub fn rank(&self) -> usize {
        self.n as usize - 1
    }

    /// Number of independent multiplicities `m_1..m_((n-1)/2)`.
    pub fn half(&self) -> usize {
        (self.n as usize - 1) / 2
    }

    /// `|SL(n,q)| = q^(n(n-1)/2) prod_(i=2..n) (q^i - 1)`.
    pub fn order(&self) -> BigUint {
        let q = BigUint::from(self.q);
        let mut acc = q.pow(self.n * (self.n - 1) / 2);
        for i in 2..=self.n {
            acc *= q.pow(i) - 1u32;
        }
        acc
    }
}

/// Coefficient of `chi(b_(2i))` in `2^(n-1) m_k`: the coefficient of
/// `x^(2i)` in `(1-x)^k (1+x)^(n-k)`.
pub fn b_coefficient(n: u32, k: u32, i: u32) -> BigInt {
    signed_binomial_coefficient(u64::from(k), u64::from(n - k), 2 * u64::from(i))
}

/// Character data of a representation of `SL(n,q)`: the degree and the
/// values at `b_2, b_4, ..., b_(n-1)`. Construction derives and validates the
/// multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharData {
    group: GroupSpec,
    degree: BigUint,
    values: Vec<BigInt>,
    mult: MultiplicityVector,
}

impl CharData {
    pub fn new(group: GroupSpec, degree: BigUint, values: Vec<BigInt>) -> Result<CharData> {
        let half = group.half();
        if values.len() != half {
            return Err(Error::Validation(format!(
                "n = {} needs {half} values chi(b_2)..chi(b_{}), got {}",
                group.n,
                group.n - 1,
                values.len()
            )));
        }
        let deg = BigInt::from(degree.clone());
        for (i, v) in values.iter().enumerate() {
            if v.abs() > deg {
                return Err(Error::Validation(format!(
                    "|chi(b_{})| = {} exceeds the degree {degree}",
                    2 * (i + 1),
                    v.abs()
                )));
            }
        }
        let mult = compute_multiplicities(group.n, &degree, &values)?;
        if group.q_mod4() == 1 {
            if let Some((k, m)) = mult.iter().enumerate().skip(1).find(|(_, m)| m.is_odd()) {
                return Err(Error::Evenness { index: k, value: m.to_string() });
            }
        } else if !second_class_parity_is_even(group.n, &mult) {
            return Err(Error::NonSpinorial);
        }
        Ok(CharData { group, degree, values, mult })
    }

    pub fn group(&self) -> GroupSpec {
        self.group
    }

    pub fn degree(&self) -> &BigUint {
        &self.degree
    }

    /// `chi(b_2), chi(b_4), ..., chi(b_(n-1))`.
    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    /// `chi(b_j)` for `0 <= j < n`; `b_(2i-1)` is conjugate to `b_(2i)`.
    pub fn value_at(&self, j: u32) -> Result<BigInt> {
        if j >= self.group.n {
            return Err(Error::Arity(format!("b_{j} does not exist for n = {}", self.group.n)));
        }
        let even = j.div_ceil(2);
        Ok(if even == 0 { BigInt::from(self.degree.clone()) } else { self.values[even as usize - 1].clone() })
    }
}

fn compute_multiplicities(n: u32, degree: &BigUint, values: &[BigInt]) -> Result<MultiplicityVector> {
    let half = (n - 1) / 2;
    let mut out = Vec::with_capacity(half as usize + 1);
    for k in 0..=half {
        let mut numerator = BigInt::from(degree.clone()) * b_coefficient(n, k, 0);
        for (i, chi) in values.iter().enumerate() {
            numerator += b_coefficient(n, k, i as u32 + 1) * chi;
        }
        let m = exact_nonneg_shift(&numerator, n - 1).ok_or_else(|| {
            Error::NotACharacter(format!("m_{k} = {numerator} / 2^{} is not a nonnegative integer", n - 1))
        })?;
        out.push(m);
    }
    Ok(MultiplicityVector(out))
}

/// For `q = 3 mod 4` the degree-2 part of the total class is
/// `(sum_k m_k C(n-2, k-1)) H_2` modulo 2, so it vanishes iff that sum is even.
fn second_class_parity_is_even(n: u32, mult: &MultiplicityVector) -> bool {
    let odd = mult
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(k, m)| m.is_odd() && binomial_is_odd(&BigUint::from(n - 2), *k as u64 - 1))
        .count();
    odd % 2 == 0
}

/// `m_0..m_((n-1)/2)` of `pi` restricted to `T[2]`; `m_k = m_(n-k)` gives the rest.
pub fn multiplicities(data: &CharData) -> MultiplicityVector {
    data.mult.clone()
}

/// `D^[k] D^[n-k]` at rank `n-1` in the elementary basis, truncated.
pub fn paired_factor(n: u32, k: u32, bound: u64) -> Result<Arc<SymPolyE>> {
    let r = n as usize - 1;
    let a = dickson_factor_elementary(r, k as usize, Some(bound))?;
    let b = dickson_factor_elementary(r, (n - k) as usize, Some(bound))?;
    Ok(Arc::new(a.mul(&b)?))
}

/// `prod_k F_k^(e_k)` at rank `n-1` in the elementary basis with generator
/// degree 1, truncated at `bound`.
fn paired_product(n: u32, exponents: &[BigUint], bound: u64) -> Result<SymPolyE> {
    let ring = Ring::elementary(n as usize - 1, 1)?;
    let mut acc = GF2Poly::one(ring).truncated(bound);
    for (i, e) in exponents.iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let factor = paired_factor(n, i as u32 + 1, bound)?;
        acc = acc.mul(&factor.pow_truncated(e, bound)?)?;
    }
    Ok(acc)
}

/// The total class of `pi` up to `max_degree`, in `E_1..E_(n-1)`.
pub fn sl_total_swc(data: &CharData, max_degree: u64) -> Result<GradedClass> {
    let n = data.group.n;
    let m = &data.mult.0[1..];
    let poly = if data.group.q_mod4() == 1 {
        let halves: Vec<BigUint> = m.iter().map(|x| x >> 1u32).collect();
        paired_product(n, &halves, max_degree / 2)?.with_generator_degree(2)?
    } else {
        paired_product(n, m, max_degree)?
    };
    GradedClass::new(poly, false)
}

/// Restriction of a class on `SL(n,q)` to `SL(5,q)`: `E_5, E_6, ...` go to 0.
pub fn restrict_to_sl5(class: &GradedClass) -> Result<GF2Poly> {
    class.poly.restrict_vars(4)
}

/// Answer of [`w_top_vanishes`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopClassReport {
    /// Whether the top class is zero; it is nonzero exactly when `m_0 = 0`.
    pub vanishes: bool,
    pub m0: BigUint,
    /// For `n = 3`: whether `deg = -3 chi(b_2)`; for `n = 5`: whether
    /// `deg = -10 chi(b_2) - 5 chi(b_4)`. Always equal to `!vanishes`.
    pub explicit_criterion: Option<bool>,
    /// `n = 3` and `q = 2 mod 3`, which forces the top class to vanish.
    pub fast_path: bool,
    /// For `n = 3`, the exponent `e` in `w = D^e`.
    pub e: Option<BigUint>,
    q_mod4: u8,
}

impl TopClassReport {
    /// For `n = 3` with nonzero top class: `d_2^e` in the ambient variables
    /// (`d_2(v_1^2, v_2^2)` when `q = 3 mod 4`, `d_2(t)` when `q = 1 mod 4`).
    pub fn top_class(&self) -> Result<Option<GF2Poly>> {
        let (Some(e), false) = (&self.e, self.vanishes) else {
            return Ok(None);
        };
        let (ring, text) = if self.q_mod4 == 1 {
            (Ring::new(2, 2)?, "t1^2*t2 + t1*t2^2")
        } else {
            (Ring::new(2, 1)?, "v1^4*v2^2 + v1^2*v2^4")
        };
        let top = e
            .to_u64()
            .and_then(|x| x.checked_mul(6))
            .ok_or_else(|| Error::DegreeOverflow(format!("d_2^{e} has degree above 2^64")))?;
        let base = GF2Poly::one(ring).add(&GF2Poly::parse(ring, text)?)?;
        Ok(Some(base.pow_truncated(e, top)?.homogeneous_part(top).untruncated()))
    }
}

pub fn w_top_vanishes(data: &CharData) -> Result<TopClassReport> {
    let group = data.group;
    let m0 = data.mult.0[0].clone();
    let deg = BigInt::from(data.degree.clone());
    let explicit_criterion = match group.n {
        3 => Some(deg == BigInt::from(-3) * &data.values[0]),
        5 => Some(deg == BigInt::from(-10) * &data.values[0] - BigInt::from(5) * &data.values[1]),
        _ => None,
    };
    let fast_path = group.n == 3 && sl3_divisibility_check(group.q);
    if fast_path && m0.is_zero() {
        return Err(Error::Validation(format!(
            "m_0 = 0 is impossible for a representation of SL(3,{}) since q = 2 mod 3",
            group.q
        )));
    }
    let e = if group.n == 3 { Some(sl3_e(data)?) } else { None };
    Ok(TopClassReport { vanishes: !m0.is_zero(), m0, explicit_criterion, fast_path, e, q_mod4: group.q_mod4() })
}

fn require_n(data: &CharData, n: u32) -> Result<()> {
    if data.group.n != n {
        return Err(Error::Precondition(format!("requires n = {n}, got n = {}", data.group.n)));
    }
    Ok(())
}

/// `e(pi) = (deg - chi(b_2)) / 8` for `SL(3,q)`, so that `w(pi) = D^e`.
pub fn sl3_e(data: &CharData) -> Result<BigUint> {
    require_n(data, 3)?;
    let numerator = BigInt::from(data.degree.clone()) - &data.values[0];
    exact_nonneg_shift(&numerator, 3)
        .ok_or_else(|| Error::NotACharacter(format!("(deg - chi(b_2)) / 8 = {numerator} / 8 is not an integer")))
}

/// The first nonzero positive-degree class of `pi` on `SL(3,q)`:
/// `d_1^(2^j)` with `j = ord_2(e)`, in degree `4 * 2^j`. `None` when `e = 0`.
pub fn sl3_obstruction_class(data: &CharData) -> Result<Option<(u64, GF2Poly)>> {
    let e = sl3_e(data)?;
    let Some(j) = ord2(&e) else {
        return Ok(None);
    };
    let j = u32::try_from(j).map_err(|_| Error::DegreeOverflow(format!("2^{j}")))?;
    let (ring, twist) = if data.group.q_mod4() == 1 { (Ring::new(2, 2)?, j) } else { (Ring::new(2, 1)?, j + 1) };
    let d1 = GF2Poly::parse(ring, &format!("{0}1^2 + {0}1*{0}2 + {0}2^2", ring.var_letter()))?;
    let class = d1.frobenius_truncated(twist, None)?;
    let degree = 4u64
        .checked_shl(j)
        .filter(|d| d >> j == 4)
        .ok_or_else(|| Error::DegreeOverflow(format!("degree 4 * 2^{j}")))?;
    Ok(Some((degree, class)))
}

/// `q = 2 mod 3`, in which case no orthogonal representation of `SL(3,q)`
/// has a nonzero top class.
pub fn sl3_divisibility_check(q: u64) -> bool {
    q % 3 == 2
}

/// `H_2 = E_1^2 + E_2` in `E_1..E_4`.
fn h2(g: u32) -> GF2Poly {
    h2_elementary(4, g).expect("rank 4")
}

/// `E_1^2 E_2 E_4 + E_1 E_3 E_4 + E_4^2 + E_1^2 E_3^2 + H_2^4`, the
/// `A_1`-dependent part of `f_8`.
pub fn correction_term(generator_degree: u32) -> Result<GF2Poly> {
    let ring = Ring::elementary(4, generator_degree)?;
    let head = GF2Poly::from_monomials(
        ring,
        [
            Monomial::from_exponents(&[2, 1, 0, 1]),
            Monomial::from_exponents(&[1, 0, 1, 1]),
            Monomial::from_exponents(&[0, 0, 0, 2]),
            Monomial::from_exponents(&[2, 0, 2, 0]),
        ],
    )?;
    head.add(&h2_power(4, generator_degree))
}

fn scaled(p: GF2Poly, odd: bool) -> GF2Poly {
    if odd {
        p
    } else {
        GF2Poly::zero(p.ring())
    }
}

fn h2_power(exp: u32, g: u32) -> GF2Poly {
    let h = h2(g);
    let mut acc = GF2Poly::one(h.ring());
    for _ in 0..exp {
        acc = acc.mul(&h).expect("same ring");
    }
    acc
}

/// `f^(A_1,A_2) = (D^[1] D^[4])^(A_1) (D^[2] D^[3])^(A_2)` in `E_1..E_4`,
/// truncated at `max_degree`.
pub fn f_expansion(a1: &BigUint, a2: &BigUint, max_degree: u64) -> Result<SymPolyE> {
    paired_product(5, &[a1.clone(), a2.clone()], max_degree)
}

/// `f_2 = (A_1 + A_2) H_2`.
pub fn f2_closed(a1: &BigUint, a2: &BigUint) -> GF2Poly {
    scaled(h2(1), (a1 + a2).is_odd())
}

/// `f_4 = (C(A_1,2) + C(A_2,2)) H_2^2`, valid when `A_1 = A_2 mod 2`.
pub fn f4_closed(a1: &BigUint, a2: &BigUint) -> Result<GF2Poly> {
    if (a1 + a2).is_odd() {
        return Err(Error::Precondition("f_4 closed form needs A_1 = A_2 mod 2".into()));
    }
    Ok(scaled(h2_power(2, 1), binomial_is_odd(a1, 2) ^ binomial_is_odd(a2, 2)))
}

/// `f_8 = (C(A_1,4) + C(A_2,4)) H_2^4 + A_1 K`, valid when `A_1 = A_2 mod 4`.
pub fn f8_closed(a1: &BigUint, a2: &BigUint) -> Result<GF2Poly> {
    if !congruent(a1, a2, 4) {
        return Err(Error::Precondition("f_8 closed form needs A_1 = A_2 mod 4".into()));
    }
    eighth_class(a1, a2, 1)
}

fn eighth_class(a1: &BigUint, a2: &BigUint, g: u32) -> Result<GF2Poly> {
    let main = scaled(h2_power(4, g), binomial_is_odd(a1, 4) ^ binomial_is_odd(a2, 4));
    main.add(&scaled(correction_term(g)?, a1.is_odd()))
}

fn congruent(a: &BigUint, b: &BigUint, modulus: u32) -> bool {
    a % modulus == b % modulus
}

/// `m_1, m_2` of the restriction to `SL(5,q)`:
/// `(chi(1) + 2 chi(b_2) - 3 chi(b_4)) / 16` and `(chi(1) - 2 chi(b_2) + chi(b_4)) / 16`.
pub fn window_multiplicities(data: &CharData) -> Result<(BigUint, BigUint)> {
    if data.group.n < 5 {
        return Err(Error::Precondition(format!("requires n >= 5, got n = {}", data.group.n)));
    }
    let d = BigInt::from(data.degree.clone());
    let b2 = &data.values[0];
    let b4 = &data.values[1];
    let m1 = &d + BigInt::from(2) * b2 - BigInt::from(3) * b4;
    let m2 = &d - BigInt::from(2) * b2 + b4;
    let div = |x: BigInt, k: u32| {
        exact_nonneg_shift(&x, 4)
            .ok_or_else(|| Error::NotACharacter(format!("m_{k} = {x} / 16 is not a nonnegative integer")))
    };
    let (m1, m2) = (div(m1, 1)?, div(m2, 2)?);
    if data.group.q_mod4() == 1 {
        for (k, m) in [(1, &m1), (2, &m2)] {
            if m.is_odd() {
                return Err(Error::Evenness { index: k, value: m.to_string() });
            }
        }
    }
    Ok((m1, m2))
}

/// `w_4(pi)` in `E_1..E_4` for `n >= 5`: `(C(m_1,2) + C(m_2,2)) H_2(v)^2` when
/// `q = 3 mod 4` and `(m_1 + m_2)/2 H_2(t)` when `q = 1 mod 4`.
pub fn universal_w4(data: &CharData) -> Result<GF2Poly> {
    let (m1, m2) = window_multiplicities(data)?;
    Ok(if data.group.q_mod4() == 1 {
        scaled(h2(2), ((m1 + m2) >> 1u32).is_odd())
    } else {
        scaled(h2_power(2, 1), binomial_is_odd(&m1, 2) ^ binomial_is_odd(&m2, 2))
    })
}

/// `w_8(pi) = (C(m_1/2,2) + C(m_2/2,2)) H_2(t)^2` for `n >= 5`, `q = 1 mod 4`
/// and `w_4(pi) = 0`.
pub fn universal_w8(data: &CharData) -> Result<GF2Poly> {
    if data.group.q_mod4() != 1 {
        return Err(Error::Precondition("w_8 has a universal formula only for q = 1 mod 4".into()));
    }
    if !universal_w4(data)?.is_zero() {
        return Err(Error::Precondition("w_8 formula needs w_4 = 0".into()));
    }
    let (m1, m2) = window_multiplicities(data)?;
    let (h1, h2_) = (m1 >> 1u32, m2 >> 1u32);
    Ok(scaled(h2_power(2, 2), binomial_is_odd(&h1, 2) ^ binomial_is_odd(&h2_, 2)))
}

/// `w_16(pi)` on `SL(5,q)` for `q = 1 mod 4` and `m_1 = m_2 mod 8`:
/// `[(C(m_1/2,4) + C(m_2/2,4)) H_2^4 + (m_1/2) K](t)`.
pub fn sl5_w16(data: &CharData) -> Result<GF2Poly> {
    require_n(data, 5)?;
    if data.group.q_mod4() != 1 {
        return Err(Error::Precondition("w_16 formula needs q = 1 mod 4".into()));
    }
    let (m1, m2) = window_multiplicities(data)?;
    if !congruent(&m1, &m2, 8) {
        return Err(Error::Precondition("w_16 formula needs m_1 = m_2 mod 8".into()));
    }
    eighth_class(&(m1 >> 1u32), &(m2 >> 1u32), 2)
}

/// `w_8(pi)` on `SL(5,q)` for `q = 3 mod 4` and `m_1 = m_2 mod 4`:
/// `[(C(m_1,4) + C(m_2,4)) H_2^4 + m_1 K](v)`.
pub fn sl5_w8(data: &CharData) -> Result<GF2Poly> {
    require_n(data, 5)?;
    if data.group.q_mod4() != 3 {
        return Err(Error::Precondition("this w_8 formula needs q = 3 mod 4".into()));
    }
    let (m1, m2) = window_multiplicities(data)?;
    if !congruent(&m1, &m2, 4) {
        return Err(Error::Precondition("w_8 formula needs m_1 = m_2 mod 4".into()));
    }
    eighth_class(&m1, &m2, 1)
}

/// Degree of the representation implied by its multiplicities:
/// `sum_(k=0..n-1) m_k C(n-1, k)` with `m_k = m_(n-k)`.
pub fn degree_from_multiplicities(n: u32, mult: &MultiplicityVector) -> BigUint {
    let r = u64::from(n - 1);
    (0..=r)
        .map(|k| {
            let idx = if k as u32 <= (n - 1) / 2 { k } else { u64::from(n) - k };
            mult.get(idx as usize) * binomial(r, k)
        })
        .sum()
}

/// `gcd(e(Pi_1), e(Pi_2))` with `e(Pi_1) = (q+1)^2 / 4` and
/// `e(Pi_2) = (q-1)(q^2+q+2) / 4`.
pub fn hsw_exponents(q: u64) -> (BigUint, BigUint) {
    let q = BigUint::from(q);
    let one = BigUint::one();
    let e1 = (&q + &one).pow(2) >> 2u32;
    let e2 = ((&q - &one) * (&q * &q + &q + 2u32)) >> 2u32;
    (e1, e2)
}

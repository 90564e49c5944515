//! Representations of an elementary abelian 2-group `E = C_2^r`.
//!
//! Elements and characters are bit vectors in the bases `e_1..e_r` and
//! `v_1..v_r`. `S_r` permutes coordinates; its orbits on `E` and on the dual
//! `E^∨` are the weight classes. `sigma_k` is the sum of all weight-`k`
//! characters, and every `S_r`-invariant representation is
//! `sum_k m_k sigma_k`. For even `r`, `E` sits in `F_2^(r+1)` as the
//! hyperplane of zero coordinate sum, which gives it an `S_(r+1)` action.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::arith::{binomial, exact_nonneg_shift, signed_binomial_coefficient};
use crate::error::{Error, Result};

/// Largest rank accepted by the brute-force routines.
pub const MAX_BRUTE_FORCE_RANK: u32 = 20;

const MAX_RANK: u32 = 63;

fn check_rank(rank: u32, bits: u64) -> Result<()> {
    if rank > MAX_RANK {
        return Err(Error::Arity(format!("rank {rank} exceeds {MAX_RANK}")));
    }
    if rank < 64 && bits >> rank != 0 {
        return Err(Error::Arity(format!("bits {bits:#b} do not fit rank {rank}")));
    }
    Ok(())
}

/// An element of `E`, stored as a bitmask with bit `i` the coefficient of `e_(i+1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EabElement {
    rank: u32,
    bits: u64,
}

impl EabElement {
    pub fn new(rank: u32, bits: u64) -> Result<EabElement> {
        check_rank(rank, bits)?;
        Ok(EabElement { rank, bits })
    }

    /// `a_k = e_1 + ... + e_k`, the standard representative of weight `k`.
    pub fn representative(rank: u32, k: u32) -> Result<EabElement> {
        if k > rank {
            return Err(Error::Arity(format!("weight {k} exceeds rank {rank}")));
        }
        EabElement::new(rank, low_mask(k))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }
}

/// A linear character of `E`, i.e. an element of `E^∨` in the dual basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EabCharacter {
    rank: u32,
    bits: u64,
}

impl EabCharacter {
    pub fn new(rank: u32, bits: u64) -> Result<EabCharacter> {
        check_rank(rank, bits)?;
        Ok(EabCharacter { rank, bits })
    }

    /// `theta_k = v_1 + ... + v_k`.
    pub fn theta(rank: u32, k: u32) -> Result<EabCharacter> {
        if k > rank {
            return Err(Error::Arity(format!("weight {k} exceeds rank {rank}")));
        }
        EabCharacter::new(rank, low_mask(k))
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    /// `(-1)^<v, e>`.
    pub fn value_at(&self, e: EabElement) -> i8 {
        if (self.bits & e.bits).count_ones().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }
}

fn low_mask(k: u32) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// The `S_r`-orbit of `e`: every element of the same weight, in increasing order.
pub fn orbit_of_element(e: EabElement) -> Vec<EabElement> {
    let w = e.weight() as usize;
    crate::symfunc::subsets(e.rank as usize, w)
        .map(|bits| EabElement { rank: e.rank, bits })
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// `chi_{sigma_i}(a_k)`: the coefficient of `x^i` in `(1-x)^k (1+x)^(r-k)`.
pub fn sigma_char_value(r: u32, i: u32, k: u32) -> Result<BigInt> {
    if i > r || k > r {
        return Err(Error::Arity(format!("indices i = {i}, k = {k} must be at most r = {r}")));
    }
    Ok(signed_binomial_coefficient(u64::from(k), u64::from(r - k), u64::from(i)))
}

/// Nonnegative integer multiplicities, indexed from 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiplicityVector(pub Vec<BigUint>);

impl MultiplicityVector {
    pub fn get(&self, k: usize) -> &BigUint {
        &self.0[k]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &BigUint> {
        self.0.iter()
    }
}

impl fmt::Display for MultiplicityVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|m| m.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// An `S_r`-invariant representation of `E`, given by its multiplicities of
/// `sigma_0..sigma_r`, by its character values at `a_0..a_r`, or both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EabRep {
    rank: u32,
    mult: Option<MultiplicityVector>,
    char_values: Option<Vec<BigInt>>,
}

impl EabRep {
    pub fn from_multiplicities(rank: u32, mult: Vec<BigUint>) -> Result<EabRep> {
        if mult.len() != rank as usize + 1 {
            return Err(Error::Arity(format!("need {} multiplicities, got {}", rank + 1, mult.len())));
        }
        Ok(EabRep { rank, mult: Some(MultiplicityVector(mult)), char_values: None })
    }

    /// Character values are only checked against the multiplicity formula
    /// when multiplicities are requested.
    pub fn from_char_values(rank: u32, values: Vec<BigInt>) -> Result<EabRep> {
        if values.len() != rank as usize + 1 {
            return Err(Error::Arity(format!("need {} character values, got {}", rank + 1, values.len())));
        }
        Ok(EabRep { rank, mult: None, char_values: Some(values) })
    }

    /// Both presentations; they must agree.
    pub fn with_both(rank: u32, mult: Vec<BigUint>, values: Vec<BigInt>) -> Result<EabRep> {
        let rep = EabRep::from_multiplicities(rank, mult)?;
        if rep.char_values()? != values {
            return Err(Error::NotARepresentation(
                "character values disagree with the multiplicities".into(),
            ));
        }
        Ok(EabRep { char_values: Some(values), ..rep })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    /// `chi(a_0), ..., chi(a_r)`, computed from multiplicities if needed.
    pub fn char_values(&self) -> Result<Vec<BigInt>> {
        if let Some(v) = &self.char_values {
            return Ok(v.clone());
        }
        let mult = self.mult.as_ref().expect("one presentation is always present");
        (0..=self.rank)
            .map(|k| {
                let mut acc = BigInt::zero();
                for (i, m) in mult.iter().enumerate() {
                    if !m.is_zero() {
                        acc += sigma_char_value(self.rank, i as u32, k)? * BigInt::from(m.clone());
                    }
                }
                Ok(acc)
            })
            .collect()
    }

    pub fn multiplicities(&self) -> Result<MultiplicityVector> {
        match &self.mult {
            Some(m) => Ok(m.clone()),
            None => multiplicities_from_chars(self),
        }
    }

    pub fn degree(&self) -> Result<BigInt> {
        Ok(self.char_values()?[0].clone())
    }
}

/// `m_k = 2^(-r) sum_i chi_{sigma_i}(a_k) chi(a_i)`, required to be a
/// nonnegative integer for every `k`.
pub fn multiplicities_from_chars(rep: &EabRep) -> Result<MultiplicityVector> {
    let r = rep.rank;
    let values = rep.char_values()?;
    let mut out = Vec::with_capacity(r as usize + 1);
    for k in 0..=r {
        let mut numerator = BigInt::zero();
        for (i, chi) in values.iter().enumerate() {
            numerator += sigma_char_value(r, i as u32, k)? * chi;
        }
        let m = exact_nonneg_shift(&numerator, r).ok_or_else(|| {
            Error::NotARepresentation(format!("m_{k} = {numerator} / 2^{r} is not a nonnegative integer"))
        })?;
        out.push(m);
    }
    Ok(MultiplicityVector(out))
}

/// Values of the representation with character multiplicities `mult`
/// (indexed by character bits) at every element of `E` (indexed by bits).
pub fn class_function(rank: u32, mult: &[BigUint]) -> Result<Vec<BigInt>> {
    brute_force_size(rank, mult.len())?;
    let size = 1usize << rank;
    Ok((0..size)
        .map(|e| {
            let mut acc = BigInt::zero();
            for (v, m) in mult.iter().enumerate().filter(|(_, m)| !m.is_zero()) {
                let m = BigInt::from(m.clone());
                if (e & v).count_ones() % 2 == 0 {
                    acc += m;
                } else {
                    acc -= m;
                }
            }
            acc
        })
        .collect())
}

fn brute_force_size(rank: u32, len: usize) -> Result<()> {
    if rank > MAX_BRUTE_FORCE_RANK {
        return Err(Error::Arity(format!(
            "brute force is limited to rank {MAX_BRUTE_FORCE_RANK}, got {rank}"
        )));
    }
    if len != 1usize << rank {
        return Err(Error::Arity(format!("expected {} values, got {len}", 1usize << rank)));
    }
    Ok(())
}

/// Multiplicity of every linear character `v` in the representation with
/// character `values` (indexed by element bits):
/// `2^(-r) sum_e chi(e) (-1)^<v,e>`, summed directly over all of `E`.
pub fn brute_force_decompose(rank: u32, values: &[BigInt]) -> Result<Vec<BigUint>> {
    brute_force_size(rank, values.len())?;
    let small: Option<Vec<i128>> = values
        .iter()
        .map(|x| x.to_i64().map(i128::from))
        .collect();
    let size = 1usize << rank;
    let mut out = Vec::with_capacity(size);
    for v in 0..size {
        let numerator = match &small {
            Some(vals) => {
                let mut acc: i128 = 0;
                for (e, &chi) in vals.iter().enumerate() {
                    if (e & v).count_ones() % 2 == 0 {
                        acc += chi;
                    } else {
                        acc -= chi;
                    }
                }
                BigInt::from(acc)
            }
            None => {
                let mut acc = BigInt::zero();
                for (e, chi) in values.iter().enumerate() {
                    if (e & v).count_ones() % 2 == 0 {
                        acc += chi;
                    } else {
                        acc -= chi;
                    }
                }
                acc
            }
        };
        let m = exact_nonneg_shift(&numerator, rank).ok_or_else(|| {
            Error::NotARepresentation(format!(
                "multiplicity of character {v:#b} is {numerator} / 2^{rank}"
            ))
        })?;
        out.push(m);
    }
    Ok(out)
}

/// Weight classes grouped into `S_(r+1)`-orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Srp1Orbits {
    /// `{0}, {1,2}, {3,4}, ..., {r-1,r}` on `E`.
    pub element_orbits: Vec<Vec<u32>>,
    /// `{0}, {1,r}, {2,r-1}, ..., {r/2, r/2+1}` on `E^∨`.
    pub character_orbits: Vec<Vec<u32>>,
}

pub fn srp1_orbits(r: u32) -> Result<Srp1Orbits> {
    if r == 0 || r % 2 == 1 {
        return Err(Error::Arity(format!("S_(r+1) orbits need a positive even rank, got {r}")));
    }
    let mut element_orbits = vec![vec![0]];
    element_orbits.extend((1..=r / 2).map(|i| vec![2 * i - 1, 2 * i]));
    let mut character_orbits = vec![vec![0]];
    character_orbits.extend((1..=r / 2).map(|k| vec![k, r + 1 - k]));
    Ok(Srp1Orbits { element_orbits, character_orbits })
}

fn check_perm(r: u32, perm: &[usize]) -> Result<()> {
    let n = r as usize + 1;
    let mut seen = vec![false; n];
    if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
        return Err(Error::Arity(format!("{perm:?} is not a permutation of {n} letters")));
    }
    Ok(())
}

/// Image of `e` under a permutation of the `r+1` coordinates of the
/// zero-sum hyperplane; coordinate `i` moves to `perm[i]`.
pub fn srp1_act_on_element(perm: &[usize], e: EabElement) -> Result<EabElement> {
    let r = e.rank;
    if r % 2 == 1 {
        return Err(Error::Arity(format!("rank must be even, got {r}")));
    }
    check_perm(r, perm)?;
    let mut embedded = e.bits | (u64::from(e.weight() % 2) << r);
    let mut image = 0u64;
    for &p in perm {
        if embedded & 1 == 1 {
            image |= 1 << p;
        }
        embedded >>= 1;
    }
    EabElement::new(r, image & low_mask(r))
}

/// Image of the character `v` under the induced action on `E^∨`:
/// `(g.v)(e) = v(g^(-1) e)`.
pub fn srp1_action_check(r: u32, perm: &[usize], v: EabCharacter) -> Result<EabCharacter> {
    if v.rank != r {
        return Err(Error::Arity(format!("character has rank {}, expected {r}", v.rank)));
    }
    if r % 2 == 1 {
        return Err(Error::Arity(format!("rank must be even, got {r}")));
    }
    check_perm(r, perm)?;
    let mut inverse = vec![0; perm.len()];
    for (i, &p) in perm.iter().enumerate() {
        inverse[p] = i;
    }
    let mut bits = 0u64;
    for j in 0..r {
        let pulled = srp1_act_on_element(&inverse, EabElement::new(r, 1 << j)?)?;
        if v.value_at(pulled) == -1 {
            bits |= 1 << j;
        }
    }
    EabCharacter::new(r, bits)
}

/// Whether a decomposition (multiplicity per character bits) is invariant
/// under `S_(r+1)`, checked on the adjacent transpositions `(i, i+1)`.
pub fn is_srp1_invariant(r: u32, mult: &[BigUint]) -> Result<bool> {
    brute_force_size(r, mult.len())?;
    let n = r as usize + 1;
    let mut generators = Vec::new();
    for i in 0..n - 1 {
        let mut p: Vec<usize> = (0..n).collect();
        p.swap(i, i + 1);
        generators.push(p);
    }
    for perm in &generators {
        for (bits, m) in mult.iter().enumerate() {
            let image = srp1_action_check(r, perm, EabCharacter::new(r, bits as u64)?)?;
            if mult[image.bits as usize] != *m {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Degree `sum_k m_k C(r, k)` of `sum_k m_k sigma_k`.
pub fn degree_from_multiplicities(r: u32, mult: &MultiplicityVector) -> BigUint {
    mult.iter()
        .enumerate()
        .map(|(k, m)| m * binomial(u64::from(r), k as u64))
        .sum()
}

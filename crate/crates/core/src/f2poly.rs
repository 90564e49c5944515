//! Sparse multivariate polynomials over the two-element field.
//!
//! A [`GF2Poly`] is a set of [`Monomial`]s (a monomial is present iff its
//! coefficient is 1) together with the [`Ring`] it lives in and an optional
//! truncation bound. Degrees are always *weighted*: in the monomial basis every
//! variable has weight `generator_degree` (1 for `v_i`, 2 for `t_i`), and in
//! the elementary basis the variable `E_k` has weight `k * generator_degree`.
//!
//! The canonical text form sorts terms by weighted degree, then by exponent
//! vector in descending lexicographic order, e.g. `1 + v1 + v2 + v1^2 + v1*v2`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use rustc_hash::FxHashSet;
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// How the variables of a ring are interpreted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Plain variables `v_i` (generator degree 1) or `t_i` (generator degree 2).
    Monomial,
    /// Formal elementary symmetric functions `E_1..E_r`; variable `k-1` is `E_k`.
    Elementary,
}

/// The polynomial ring a [`GF2Poly`] belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    num_vars: usize,
    generator_degree: u32,
    basis: Basis,
}

impl Ring {
    pub fn new(num_vars: usize, generator_degree: u32) -> Result<Ring> {
        Ring::with_basis(num_vars, generator_degree, Basis::Monomial)
    }

    pub fn elementary(num_vars: usize, generator_degree: u32) -> Result<Ring> {
        Ring::with_basis(num_vars, generator_degree, Basis::Elementary)
    }

    pub fn with_basis(num_vars: usize, generator_degree: u32, basis: Basis) -> Result<Ring> {
        if num_vars == 0 {
            return Err(Error::Arity("a ring needs at least one variable".into()));
        }
        if generator_degree != 1 && generator_degree != 2 {
            return Err(Error::Arity(format!(
                "generator degree must be 1 or 2, got {generator_degree}"
            )));
        }
        Ok(Ring { num_vars, generator_degree, basis })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generator_degree(&self) -> u32 {
        self.generator_degree
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Weighted degree of the variable with 0-based index `var`.
    pub fn var_weight(&self, var: usize) -> u64 {
        let g = u64::from(self.generator_degree);
        match self.basis {
            Basis::Monomial => g,
            Basis::Elementary => g * (var as u64 + 1),
        }
    }

    /// Letter used when rendering variables.
    pub fn var_letter(&self) -> char {
        match (self.basis, self.generator_degree) {
            (Basis::Elementary, _) => 'E',
            (Basis::Monomial, 1) => 'v',
            _ => 't',
        }
    }

    pub(crate) fn check_same(&self, other: &Ring) -> Result<()> {
        if self != other {
            return Err(Error::Arity(format!("ring mismatch: {self:?} vs {other:?}")));
        }
        Ok(())
    }
}

/// A monomial stored as sorted `(variable, exponent)` pairs with no zero exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial(SmallVec<[(u32, u32); 4]>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(SmallVec::new())
    }

    pub fn var(index: usize) -> Monomial {
        Monomial::var_pow(index, 1)
    }

    pub fn var_pow(index: usize, exponent: u32) -> Monomial {
        let mut m = Monomial::one();
        if exponent > 0 {
            m.0.push((index as u32, exponent));
        }
        m
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(exponents: &[u32]) -> Monomial {
        Monomial(
            exponents
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32, e))
                .collect(),
        )
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.0
            .iter()
            .find(|(v, _)| *v as usize == var)
            .map_or(0, |&(_, e)| e)
    }

    /// The nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0.iter().map(|&(v, e)| (v as usize, e))
    }

    pub fn max_var(&self) -> Option<usize> {
        self.0.last().map(|&(v, _)| v as usize)
    }

    pub fn dense(&self, num_vars: usize) -> Vec<u32> {
        let mut out = vec![0; num_vars];
        for (v, e) in self.factors() {
            out[v] = e;
        }
        out
    }

    pub fn weighted_degree(&self, ring: &Ring) -> u64 {
        self.factors()
            .map(|(v, e)| u64::from(e) * ring.var_weight(v))
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = SmallVec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Raises every exponent to the `2^j`-th multiple (the `j`-fold Frobenius).
    pub fn frobenius(&self, j: u32) -> Option<Monomial> {
        let mut out = SmallVec::with_capacity(self.0.len());
        for &(v, e) in &self.0 {
            let shifted = e.checked_mul(1u32.checked_shl(j)?)?;
            out.push((v, shifted));
        }
        Some(Monomial(out))
    }

    /// Applies a variable permutation: variable `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Monomial {
        let mut out: SmallVec<[(u32, u32); 4]> =
            self.0.iter().map(|&(v, e)| (perm[v as usize] as u32, e)).collect();
        out.sort_unstable();
        Monomial(out)
    }
}

/// Canonical order: weighted degree ascending, then dense exponent vector in
/// descending lexicographic order.
pub(crate) fn canonical_cmp(ring: &Ring, a: &Monomial, b: &Monomial) -> Ordering {
    a.weighted_degree(ring)
        .cmp(&b.weighted_degree(ring))
        .then_with(|| b.dense(ring.num_vars).cmp(&a.dense(ring.num_vars)))
}

fn min_bound(a: Option<u64>, b: Option<u64>) -> Option<u64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// A polynomial over GF(2) in a fixed [`Ring`], optionally truncated above a
/// weighted degree.
#[derive(Clone, Debug)]
pub struct GF2Poly {
    ring: Ring,
    terms: FxHashSet<Monomial>,
    truncation: Option<u64>,
}

impl PartialEq for GF2Poly {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.terms == other.terms
    }
}

impl Eq for GF2Poly {}

impl GF2Poly {
    pub fn zero(ring: Ring) -> GF2Poly {
        GF2Poly { ring, terms: FxHashSet::default(), truncation: None }
    }

    pub fn one(ring: Ring) -> GF2Poly {
        let mut p = GF2Poly::zero(ring);
        p.terms.insert(Monomial::one());
        p
    }

    pub fn variable(ring: Ring, index: usize) -> Result<GF2Poly> {
        GF2Poly::from_monomials(ring, [Monomial::var(index)])
    }

    /// Sums the given monomials; a monomial listed twice cancels.
    pub fn from_monomials<I>(ring: Ring, monomials: I) -> Result<GF2Poly>
    where
        I: IntoIterator<Item = Monomial>,
    {
        let mut p = GF2Poly::zero(ring);
        for m in monomials {
            if m.max_var().is_some_and(|v| v >= ring.num_vars) {
                return Err(Error::Arity(format!(
                    "monomial {m:?} uses a variable outside {} variables",
                    ring.num_vars
                )));
            }
            p.toggle(m);
        }
        Ok(p)
    }

    pub(crate) fn from_set_unchecked(ring: Ring, terms: FxHashSet<Monomial>, truncation: Option<u64>) -> GF2Poly {
        GF2Poly { ring, terms, truncation }
    }

    /// Returns a copy truncated at `max_degree` (keeping any tighter existing bound).
    pub fn truncated(&self, max_degree: u64) -> GF2Poly {
        let bound = min_bound(self.truncation, Some(max_degree));
        let ring = self.ring;
        let terms = self
            .terms
            .iter()
            .filter(|m| bound.is_none_or(|b| m.weighted_degree(&ring) <= b))
            .cloned()
            .collect();
        GF2Poly { ring, terms, truncation: bound }
    }

    /// Drops the truncation bound without changing the stored terms.
    pub fn untruncated(mut self) -> GF2Poly {
        self.truncation = None;
        self
    }

    fn toggle(&mut self, m: Monomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn num_vars(&self) -> usize {
        self.ring.num_vars
    }

    pub fn generator_degree(&self) -> u32 {
        self.ring.generator_degree
    }

    pub fn basis(&self) -> Basis {
        self.ring.basis
    }

    pub fn truncation(&self) -> Option<u64> {
        self.truncation
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.has_unit_constant()
    }

    pub fn has_unit_constant(&self) -> bool {
        self.terms.contains(&Monomial::one())
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.terms.contains(m)
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.iter()
    }

    /// Monomials in canonical order.
    pub fn sorted_monomials(&self) -> Vec<&Monomial> {
        let mut v: Vec<&Monomial> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(&self.ring, a, b));
        v
    }

    /// Largest weighted degree of a term, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.terms.iter().map(|m| m.weighted_degree(&self.ring)).max()
    }

    /// Smallest weighted degree of a nonconstant term.
    pub fn min_positive_degree(&self) -> Option<u64> {
        self.terms
            .iter()
            .map(|m| m.weighted_degree(&self.ring))
            .filter(|&d| d > 0)
            .min()
    }

    pub fn add(&self, other: &GF2Poly) -> Result<GF2Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &GF2Poly) -> GF2Poly {
        let bound = min_bound(self.truncation, other.truncation);
        let mut out = self.clone();
        out.truncation = bound;
        for m in &other.terms {
            out.toggle(m.clone());
        }
        if let Some(b) = bound {
            let ring = self.ring;
            out.terms.retain(|m| m.weighted_degree(&ring) <= b);
        }
        out
    }

    pub fn mul(&self, other: &GF2Poly) -> Result<GF2Poly> {
        self.ring.check_same(&other.ring)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &GF2Poly) -> GF2Poly {
        let ring = self.ring;
        let bound = min_bound(self.truncation, other.truncation);
        let mut buckets: BTreeMap<u64, Vec<&Monomial>> = BTreeMap::new();
        for m in &other.terms {
            buckets.entry(m.weighted_degree(&ring)).or_default().push(m);
        }
        let mut out = GF2Poly { ring, terms: FxHashSet::default(), truncation: bound };
        for a in &self.terms {
            let da = a.weighted_degree(&ring);
            if bound.is_some_and(|b| da > b) {
                continue;
            }
            for (&db, ms) in &buckets {
                if bound.is_some_and(|b| da + db > b) {
                    break;
                }
                for b in ms {
                    out.toggle(a.mul(b));
                }
            }
        }
        out
    }

    /// `self^(2^j)`, i.e. every monomial raised to the `2^j`-th power; terms
    /// landing above `bound` are dropped before they are formed.
    pub fn frobenius_truncated(&self, j: u32, bound: Option<u64>) -> Result<GF2Poly> {
        let ring = self.ring;
        let bound = min_bound(self.truncation, bound);
        let mut terms = FxHashSet::default();
        for m in &self.terms {
            let d = m.weighted_degree(&ring);
            if let Some(b) = bound {
                if d.checked_shl(j).is_none_or(|x| x >> j != d || x > b) {
                    continue;
                }
            }
            let f = m
                .frobenius(j)
                .ok_or_else(|| Error::DegreeOverflow(format!("exponent overflow raising to 2^{j}")))?;
            terms.insert(f);
        }
        Ok(GF2Poly { ring, terms, truncation: bound })
    }

    /// `self^exponent` with every term of weighted degree above `max_degree`
    /// discarded.
    ///
    /// Uses Lucas' theorem: `C(e, i)` is odd iff the binary digits of `i` are a
    /// subset of those of `e`, so `(1 + f)^e = sum over i ⊆ e of f^i`, which
    /// factors as the product over set bits `j` of `(1 + f^(2^j))`. Each
    /// `f^(2^j)` is a Frobenius twist and bits with `2^j * mindeg(f) > max_degree`
    /// contribute nothing, so the cost is independent of the size of `e`.
    pub fn pow_truncated(&self, exponent: &BigUint, max_degree: u64) -> Result<GF2Poly> {
        if !self.has_unit_constant() {
            return Err(Error::NotUnit);
        }
        let bound = min_bound(self.truncation, Some(max_degree)).unwrap();
        let one = GF2Poly::one(self.ring).truncated(bound);
        let f = self.add_unchecked(&GF2Poly::one(self.ring)).truncated(bound);
        let Some(mindeg) = f.min_positive_degree() else {
            return Ok(one);
        };
        let mut result = one.clone();
        for j in 0..exponent.bits() {
            if mindeg.checked_shl(j as u32).is_none_or(|x| x >> j != mindeg || x > bound) {
                break;
            }
            if exponent.bit(j) {
                let twisted = f.frobenius_truncated(j as u32, Some(bound))?;
                result = result.mul_unchecked(&one.add_unchecked(&twisted));
            }
        }
        Ok(result)
    }

    /// All terms of weighted degree exactly `k`.
    pub fn homogeneous_part(&self, k: u64) -> GF2Poly {
        let ring = self.ring;
        let terms = self
            .terms
            .iter()
            .filter(|m| m.weighted_degree(&ring) == k)
            .cloned()
            .collect();
        GF2Poly { ring, terms, truncation: self.truncation }
    }

    /// Nonzero homogeneous components keyed by weighted degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u64, GF2Poly> {
        let ring = self.ring;
        let mut out: BTreeMap<u64, GF2Poly> = BTreeMap::new();
        for m in &self.terms {
            out.entry(m.weighted_degree(&ring))
                .or_insert_with(|| GF2Poly { ring, terms: FxHashSet::default(), truncation: self.truncation })
                .terms
                .insert(m.clone());
        }
        out
    }

    /// Evaluates the polynomial with variable `i` replaced by `images[i]`.
    /// All images must share one target ring.
    pub fn substitute(&self, images: &[GF2Poly]) -> Result<GF2Poly> {
        if images.len() != self.ring.num_vars {
            return Err(Error::Arity(format!(
                "substitution needs {} images, got {}",
                self.ring.num_vars,
                images.len()
            )));
        }
        let target = images[0].ring;
        for img in images {
            target.check_same(&img.ring)?;
        }
        let bound = images.iter().fold(None, |acc, p| min_bound(acc, p.truncation));
        let mut powers: Vec<Vec<GF2Poly>> = vec![Vec::new(); images.len()];
        let mut out = GF2Poly { ring: target, terms: FxHashSet::default(), truncation: bound };
        for m in &self.terms {
            let mut term = GF2Poly::one(target);
            term.truncation = bound;
            for (v, e) in m.factors() {
                let cache = &mut powers[v];
                if cache.is_empty() {
                    let mut first = GF2Poly::one(target);
                    first.truncation = bound;
                    cache.push(first);
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[v]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            out = out.add_unchecked(&term);
        }
        Ok(out)
    }

    /// Restricts to the first `num_vars` variables by sending the others to 0.
    pub fn restrict_vars(&self, num_vars: usize) -> Result<GF2Poly> {
        if num_vars > self.ring.num_vars {
            return Err(Error::Arity(format!(
                "cannot restrict {} variables to {num_vars}",
                self.ring.num_vars
            )));
        }
        let ring = Ring::with_basis(num_vars, self.ring.generator_degree, self.ring.basis)?;
        let terms = self
            .terms
            .iter()
            .filter(|m| m.max_var().is_none_or(|v| v < num_vars))
            .cloned()
            .collect();
        Ok(GF2Poly { ring, terms, truncation: self.truncation })
    }

    /// Reinterprets the same monomials under another generator degree. The
    /// truncation bound is rescaled so the same monomials stay admissible.
    pub fn with_generator_degree(&self, generator_degree: u32) -> Result<GF2Poly> {
        let ring = Ring::with_basis(self.ring.num_vars, generator_degree, self.ring.basis)?;
        let old = u64::from(self.ring.generator_degree);
        let new = u64::from(generator_degree);
        let truncation = self.truncation.map(|b| b / old * new);
        Ok(GF2Poly { ring, terms: self.terms.clone(), truncation })
    }

    /// Applies a permutation of the variables (`i` goes to `perm[i]`).
    pub fn permute_vars(&self, perm: &[usize]) -> Result<GF2Poly> {
        let n = self.ring.num_vars;
        let mut seen = vec![false; n];
        if perm.len() != n || perm.iter().any(|&p| p >= n || std::mem::replace(&mut seen[p], true)) {
            return Err(Error::Arity(format!("{perm:?} is not a permutation of {n} variables")));
        }
        let terms = self.terms.iter().map(|m| m.permute(perm)).collect();
        Ok(GF2Poly { ring: self.ring, terms, truncation: self.truncation })
    }

    /// Parses the canonical text form (juxtaposed factors such as `E1^2E3`
    /// are also accepted; parentheses are ignored as pure grouping).
    pub fn parse(ring: Ring, text: &str) -> Result<GF2Poly> {
        let cleaned: String = text
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '(' && *c != ')')
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = GF2Poly::zero(ring);
        for term in cleaned.split('+') {
            match term {
                "0" => continue,
                "1" => p.toggle(Monomial::one()),
                _ => p.toggle(parse_monomial(&ring, term)?),
            }
        }
        Ok(p)
    }
}

fn parse_monomial(ring: &Ring, term: &str) -> Result<Monomial> {
    let letter = ring.var_letter();
    let bytes: Vec<char> = term.chars().collect();
    let mut pos = 0;
    let mut m = Monomial::one();
    let read_number = |pos: &mut usize| -> Result<u32> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        bytes[start..*pos]
            .iter()
            .collect::<String>()
            .parse()
            .map_err(|_| Error::Parse(format!("expected a number in term '{term}'")))
    };
    while pos < bytes.len() {
        if bytes[pos] == '*' {
            pos += 1;
            continue;
        }
        if bytes[pos] != letter {
            return Err(Error::Parse(format!(
                "unexpected '{}' in term '{term}' (variables are {letter}1..{letter}{})",
                bytes[pos], ring.num_vars
            )));
        }
        pos += 1;
        let index = read_number(&mut pos)? as usize;
        if index == 0 || index > ring.num_vars {
            return Err(Error::Parse(format!("variable {letter}{index} out of range in '{term}'")));
        }
        let mut exponent = 1;
        if pos < bytes.len() && bytes[pos] == '^' {
            pos += 1;
            exponent = read_number(&mut pos)?;
        }
        m = m.mul(&Monomial::var_pow(index - 1, exponent));
    }
    Ok(m)
}

pub(crate) fn render_monomial(ring: &Ring, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let letter = ring.var_letter();
    m.factors()
        .map(|(v, e)| {
            if e == 1 {
                format!("{letter}{}", v + 1)
            } else {
                format!("{letter}{}^{e}", v + 1)
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

impl fmt::Display for GF2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let rendered: Vec<String> = self
            .sorted_monomials()
            .into_iter()
            .map(|m| render_monomial(&self.ring, m))
            .collect();
        f.write_str(&rendered.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Ring {
        Ring::new(n, 1).unwrap()
    }

    fn p(r: usize, s: &str) -> GF2Poly {
        GF2Poly::parse(ring(r), s).unwrap()
    }

    #[test]
    fn add_cancels_in_characteristic_two() {
        assert_eq!(p(3, "v1 + v2").add(&p(3, "v2 + v3")).unwrap(), p(3, "v1 + v3"));
        let a = p(3, "1 + v1*v2 + v3^4");
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(p(3, "1 + v1").add(&GF2Poly::zero(ring(3))).unwrap(), p(3, "1 + v1"));
    }

    #[test]
    fn add_rejects_ring_mismatch() {
        let a = p(2, "v1");
        let b = GF2Poly::parse(Ring::new(2, 2).unwrap(), "t1").unwrap();
        assert!(matches!(a.add(&b), Err(Error::Arity(_))));
        assert!(matches!(a.mul(&p(3, "v1")), Err(Error::Arity(_))));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(1, "1 + v1").mul(&p(1, "1 + v1")).unwrap(), p(1, "1 + v1^2"));
        let a = p(2, "1 + v1 + v2").truncated(1);
        assert_eq!(a.mul(&a).unwrap(), p(2, "1"));
        assert_eq!(p(2, "1 + v1").mul(&p(2, "1 + v2")).unwrap(), p(2, "1 + v1 + v2 + v1*v2"));
    }

    #[test]
    fn truncation_is_min_of_operands() {
        let a = p(2, "1 + v1 + v1^3").truncated(3);
        let b = p(2, "v2 + v2^2").truncated(1);
        let s = a.add(&b).unwrap();
        assert_eq!(s.truncation(), Some(1));
        assert_eq!(s, p(2, "1 + v1 + v2"));
    }

    #[test]
    fn pow_zero_and_not_unit() {
        let a = p(2, "1 + v1*v2");
        assert!(a.pow_truncated(&BigUint::from(0u32), 10).unwrap().is_one());
        assert_eq!(p(2, "v1").pow_truncated(&BigUint::from(3u32), 10), Err(Error::NotUnit));
    }

    #[test]
    fn pow_huge_power_of_two_truncates_to_one() {
        let e = BigUint::from(1u32) << 40u32;
        assert!(p(1, "1 + v1").pow_truncated(&e, 3).unwrap().is_one());
        // (1+v)^(2^40 + 3) keeps only the (1+v)^3 low part
        let e3 = e + 3u32;
        assert_eq!(p(1, "1 + v1").pow_truncated(&e3, 3).unwrap(), p(1, "1 + v1 + v1^2 + v1^3"));
    }

    #[test]
    fn homogeneous_part_uses_generator_degree() {
        let t = Ring::new(2, 2).unwrap();
        let a = GF2Poly::parse(t, "1 + t1 + t1*t2").unwrap();
        assert_eq!(a.homogeneous_part(4), GF2Poly::parse(t, "t1*t2").unwrap());
        assert!(a.homogeneous_part(0).is_one());
        assert!(p(2, "v1").homogeneous_part(0).is_zero());
    }

    #[test]
    fn canonical_rendering() {
        let a = p(3, "v1*v2 + v2^2 + 1 + v1^2 + v3 + v1");
        assert_eq!(a.to_string(), "1 + v1 + v3 + v1^2 + v1*v2 + v2^2");
        let e = Ring::elementary(4, 1).unwrap();
        let b = GF2Poly::parse(e, "E_2^2 + E1E3 + E4 + E1^4".replace('_', "").as_str()).unwrap();
        assert_eq!(b.to_string(), "E1^4 + E1*E3 + E2^2 + E4");
        assert_eq!(GF2Poly::zero(e).to_string(), "0");
    }

    #[test]
    fn parse_errors() {
        assert!(GF2Poly::parse(ring(2), "v3").is_err());
        assert!(GF2Poly::parse(ring(2), "x1").is_err());
        assert!(GF2Poly::parse(ring(2), "").is_err());
        assert!(GF2Poly::parse(ring(2), "v1^").is_err());
    }

    #[test]
    fn substitute_and_restrict() {
        // (v1 + v2)^2 with v1 -> 1+v1, v2 -> v2
        let a = p(2, "v1^2 + v2^2");
        let images = [p(2, "1 + v1"), p(2, "v2")];
        assert_eq!(a.substitute(&images).unwrap(), p(2, "1 + v1^2 + v2^2"));
        let b = p(3, "1 + v1 + v3 + v1*v2");
        assert_eq!(b.restrict_vars(2).unwrap(), p(2, "1 + v1 + v1*v2"));
    }

    #[test]
    fn frobenius_and_regrade() {
        let a = p(2, "1 + v1 + v1*v2");
        assert_eq!(a.frobenius_truncated(1, None).unwrap(), p(2, "1 + v1^2 + v1^2*v2^2"));
        let t = a.with_generator_degree(2).unwrap();
        assert_eq!(t.degree(), Some(4));
        assert_eq!(t.ring().var_letter(), 't');
    }
}

//! Symmetric polynomials over GF(2): elementary and complete symmetric
//! functions, Dickson factors, and rewriting in the elementary basis.
//!
//! The `k`th Dickson factor in `r` variables is
//! `D^[k](x) = prod over k-subsets S of (1 + sum_{i in S} x_i)`, and the full
//! product `D = D^[1] ... D^[r]` has its nonconstant homogeneous pieces (the
//! Dickson invariants) in degrees `2^r - 2^(r-i)`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rustc_hash::FxHashSet;

use crate::error::{Error, Result};
use crate::f2poly::{Basis, GF2Poly, Monomial, Ring};

/// A polynomial in the formal generators `E_1..E_r`, stored as a [`GF2Poly`]
/// over a [`Basis::Elementary`] ring.
pub type SymPolyE = GF2Poly;

/// The `k`-subsets of `{0..r}` as bitmasks, in colex order.
pub(crate) fn subsets(r: usize, k: usize) -> impl Iterator<Item = u64> {
    assert!(r < 64, "at most 63 variables are supported");
    let limit = 1u64 << r;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = if k > r { None } else { Some(first) };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let s = cur + c;
            let n = (((s ^ cur) >> 2) / c) | s;
            (n < limit).then_some(n)
        };
        Some(cur)
    })
}

fn mask_monomial(mask: u64) -> Monomial {
    let exps: Vec<u32> = (0..64).map(|i| ((mask >> i) & 1) as u32).collect();
    Monomial::from_exponents(&exps)
}

/// `E_k` in the variables of a monomial-basis ring.
pub fn elementary_in(ring: Ring, k: usize) -> GF2Poly {
    debug_assert_eq!(ring.basis(), Basis::Monomial);
    let terms: FxHashSet<Monomial> = subsets(ring.num_vars(), k).map(mask_monomial).collect();
    GF2Poly::from_set_unchecked(ring, terms, None)
}

/// `E_k(x_1..x_r)` over degree-1 variables; 1 for `k = 0`, 0 for `k > r`.
pub fn elementary(r: usize, k: usize) -> Result<GF2Poly> {
    Ok(elementary_in(Ring::new(r, 1)?, k))
}

/// `H_k(x_1..x_r)`, the sum of all monomials of degree `k`. Follows the
/// convention `H_k = 0` for `k > r`.
pub fn complete(r: usize, k: usize) -> Result<GF2Poly> {
    let ring = Ring::new(r, 1)?;
    if k > r {
        return Ok(GF2Poly::zero(ring));
    }
    let mut terms = FxHashSet::default();
    let mut exps = vec![0u32; r];
    compositions(&mut exps, 0, k as u32, &mut |e| {
        terms.insert(Monomial::from_exponents(e));
    });
    Ok(GF2Poly::from_set_unchecked(ring, terms, None))
}

fn compositions(exps: &mut [u32], pos: usize, remaining: u32, emit: &mut dyn FnMut(&[u32])) {
    if pos + 1 == exps.len() {
        exps[pos] = remaining;
        emit(exps);
        exps[pos] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[pos] = e;
        compositions(exps, pos + 1, remaining - e, emit);
    }
    exps[pos] = 0;
}

/// The `k`th Dickson factor in `r` degree-1 variables, optionally truncated.
pub fn dickson_factor(r: usize, k: usize, max_degree: Option<u64>) -> Result<GF2Poly> {
    if k == 0 || k > r {
        return Err(Error::Arity(format!("Dickson factor index k = {k} must lie in 1..={r}")));
    }
    let ring = Ring::new(r, 1)?;
    let one = GF2Poly::one(ring);
    let mut acc = match max_degree {
        Some(d) => one.truncated(d),
        None => one.clone(),
    };
    for mask in subsets(r, k) {
        let mut factor = one.clone();
        for i in (0..r).filter(|i| mask >> i & 1 == 1) {
            factor = factor.add_unchecked(&GF2Poly::variable(ring, i)?);
        }
        acc = acc.mul_unchecked(&factor);
    }
    Ok(acc)
}

/// The full Dickson product `D^[1] ... D^[r]`.
pub fn dickson_full(r: usize, max_degree: Option<u64>) -> Result<GF2Poly> {
    let mut acc = dickson_factor(r, 1, max_degree)?;
    for k in 2..=r {
        acc = acc.mul_unchecked(&dickson_factor(r, k, max_degree)?);
    }
    Ok(acc)
}

pub fn is_symmetric(p: &GF2Poly) -> bool {
    let n = p.num_vars();
    (0..n.saturating_sub(1)).all(|i| {
        let mut perm: Vec<usize> = (0..n).collect();
        perm.swap(i, i + 1);
        p.permute_vars(&perm).is_ok_and(|q| q == *p)
    })
}

fn is_dominant(m: &Monomial, num_vars: usize) -> bool {
    m.dense(num_vars).windows(2).all(|w| w[0] >= w[1])
}

/// Rewrites a symmetric polynomial as a polynomial in `E_1..E_r`.
///
/// Standard greedy algorithm: the lex-largest remaining monomial
/// `x^a` (with `a_1 >= a_2 >= ...`) is the leading term of
/// `E_1^(a_1-a_2) ... E_r^(a_r)`; subtract that product and repeat. Only the
/// dominant monomials (nonincreasing exponents) of a symmetric polynomial are
/// tracked since they determine it.
pub fn to_elementary_basis(p: &GF2Poly) -> Result<SymPolyE> {
    let ring = p.ring();
    if ring.basis() != Basis::Monomial {
        return Err(Error::Arity("input is already in the elementary basis".into()));
    }
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric(p.to_string()));
    }
    let r = ring.num_vars();
    let e_ring = Ring::elementary(r, ring.generator_degree())?;
    let mut remainder: FxHashSet<Monomial> =
        p.monomials().filter(|m| is_dominant(m, r)).cloned().collect();
    let mut out: FxHashSet<Monomial> = FxHashSet::default();
    let e_polys: Vec<GF2Poly> = (1..=r).map(|k| elementary_in(ring, k)).collect();
    let mut powers: Vec<Vec<GF2Poly>> = vec![vec![GF2Poly::one(ring)]; r];

    while let Some(lead) = remainder.iter().max_by_key(|m| m.dense(r)).cloned() {
        let a = lead.dense(r);
        let mu: Vec<u32> = (0..r).map(|i| a[i] - a.get(i + 1).copied().unwrap_or(0)).collect();
        let mut expansion = GF2Poly::one(ring);
        for (k, &e) in mu.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let cache = &mut powers[k];
            while cache.len() <= e as usize {
                let next = cache.last().unwrap().mul_unchecked(&e_polys[k]);
                cache.push(next);
            }
            expansion = expansion.mul_unchecked(&cache[e as usize]);
        }
        for m in expansion.monomials().filter(|m| is_dominant(m, r)) {
            if !remainder.remove(m) {
                remainder.insert(m.clone());
            }
        }
        debug_assert!(!remainder.contains(&lead));
        out.insert(Monomial::from_exponents(&mu));
    }
    Ok(GF2Poly::from_set_unchecked(e_ring, out, p.truncation()))
}

/// Expands a polynomial in `E_1..E_r` back into the underlying variables.
pub fn from_elementary_basis(p: &SymPolyE) -> Result<GF2Poly> {
    let ring = p.ring();
    if ring.basis() != Basis::Elementary {
        return Err(Error::Arity("input is not in the elementary basis".into()));
    }
    let target = Ring::new(ring.num_vars(), ring.generator_degree())?;
    let mut images: Vec<GF2Poly> =
        (1..=ring.num_vars()).map(|k| elementary_in(target, k)).collect();
    if let Some(b) = p.truncation() {
        images = images.into_iter().map(|q| q.truncated(b)).collect();
    }
    p.substitute(&images)
}

/// `H_2 = E_1^2 + E_2` in the elementary basis of `r >= 2` generators.
pub fn h2_elementary(r: usize, generator_degree: u32) -> Result<SymPolyE> {
    let ring = Ring::elementary(r, generator_degree)?;
    GF2Poly::from_monomials(ring, [Monomial::var_pow(0, 2), Monomial::var(1)])
}

type FactorKey = (usize, usize, Option<u64>);

fn factor_cache() -> &'static Mutex<HashMap<FactorKey, Arc<SymPolyE>>> {
    static CACHE: OnceLock<Mutex<HashMap<FactorKey, Arc<SymPolyE>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `D^[k]` in `r` degree-1 variables, rewritten in the elementary basis.
/// Results are memoised per `(r, k, max_degree)`.
///
/// Computed without expanding into monomials. Splitting the subsets by
/// whether they contain the last variable `x = x_r` gives
/// `D^[k]_r = D^[k]_(r-1) * prod_T (1 + x + x_T)` over `(k-1)`-subsets `T` of
/// the first `r-1` variables, and `prod_T (c + x_T) = sum_j c^(N-j) P_j` where
/// `P_j` are the homogeneous parts of `D^[k-1]_(r-1)` and `N = C(r-1, k-1)`.
/// The product lives in `Sym_(r-1)[x]`; substituting
/// `e'_j = sum_i E_(j-i) x^i` and reducing with `x^r = sum_i E_i x^(r-i)`
/// leaves a polynomial in `E_1..E_r` alone.
pub fn dickson_factor_elementary(r: usize, k: usize, max_degree: Option<u64>) -> Result<Arc<SymPolyE>> {
    if k == 0 || k > r {
        return Err(Error::Arity(format!("Dickson factor index k = {k} must lie in 1..={r}")));
    }
    let bound = match max_degree {
        Some(d) => d,
        None => crate::arith::binomial(r as u64, k as u64)
            .try_into()
            .map_err(|_| Error::DegreeOverflow(format!("D^[{k}] in {r} variables")))?,
    };
    let mut value = (*cached_factor(r, k, bound)?).clone();
    if max_degree.is_none() {
        value = value.untruncated();
    }
    Ok(Arc::new(value))
}

fn cached_factor(r: usize, k: usize, bound: u64) -> Result<Arc<SymPolyE>> {
    let key = (r, k, Some(bound));
    if let Some(hit) = factor_cache().lock().unwrap().get(&key) {
        return Ok(Arc::clone(hit));
    }
    let value = Arc::new(factor_by_recursion(r, k, bound)?);
    factor_cache().lock().unwrap().insert(key, Arc::clone(&value));
    Ok(value)
}

/// `D^[k]_r` for any `k`, with the empty-product conventions
/// `D^[0] = 1 + 0 = 1` and `D^[k] = 1` for `k > r`.
fn factor_or_one(r: usize, k: usize, bound: u64, ring: Ring) -> Result<GF2Poly> {
    if r == 0 || k == 0 || k > r {
        return Ok(GF2Poly::one(ring).truncated(bound));
    }
    let p = cached_factor(r, k, bound)?;
    Ok(GF2Poly::from_set_unchecked(ring, p.monomials().cloned().collect(), Some(bound)))
}

/// A polynomial in one extra degree-1 variable `x` with coefficients in
/// `E_1..E_r`; entry `i` is the coefficient of `x^i`.
type XPoly = Vec<GF2Poly>;

fn xpoly_zero(ring: Ring, bound: u64) -> XPoly {
    (0..=bound).map(|i| GF2Poly::zero(ring).truncated(bound - i)).collect()
}

fn xpoly_mul(a: &XPoly, b: &XPoly, ring: Ring, bound: u64) -> XPoly {
    let mut out = xpoly_zero(ring, bound);
    for (i, ai) in a.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
        for (j, bj) in b.iter().enumerate().filter(|(_, p)| !p.is_zero()) {
            let deg = (i + j) as u64;
            if deg > bound {
                break;
            }
            let t = bound - deg;
            let prod = ai.truncated(t).mul_unchecked(&bj.truncated(t));
            out[i + j] = out[i + j].add_unchecked(&prod);
        }
    }
    out
}

fn factor_by_recursion(r: usize, k: usize, bound: u64) -> Result<SymPolyE> {
    let ring = Ring::elementary(r, 1)?;
    if r == 1 {
        return Ok(GF2Poly::parse(ring, "1 + E1")?.truncated(bound));
    }
    let a = factor_or_one(r - 1, k, bound, ring)?;
    let b = factor_or_one(r - 1, k - 1, bound, ring)?;
    let n = crate::arith::binomial(r as u64 - 1, k as u64 - 1);

    // G = sum_j (1 + x)^(N - j) P_j
    let mut g = xpoly_zero(ring, bound);
    for (j, part) in b.homogeneous_parts() {
        let exponent = &n - num_bigint::BigUint::from(j);
        for i in 0..=(bound - j) {
            if crate::arith::binomial_is_odd(&exponent, i) {
                let idx = i as usize;
                g[idx] = g[idx].add_unchecked(&part.truncated(bound - i));
            }
        }
    }
    let h: XPoly = g.iter().enumerate().map(|(i, gi)| a.truncated(bound - i as u64).mul_unchecked(gi)).collect();

    // e'_j as an XPoly over E_1..E_r
    let e_var = |j: usize| -> GF2Poly {
        if j == 0 {
            GF2Poly::one(ring)
        } else {
            GF2Poly::variable(ring, j - 1).expect("index below r")
        }
    };
    let images: Vec<XPoly> = (1..r)
        .map(|j| {
            let mut img = xpoly_zero(ring, bound);
            for (i, slot) in img.iter_mut().enumerate().take(j.min(bound as usize) + 1) {
                *slot = e_var(j - i).truncated(bound - i as u64);
            }
            img
        })
        .collect();
    let mut powers: Vec<Vec<XPoly>> = vec![Vec::new(); r - 1];
    let mut one = xpoly_zero(ring, bound);
    one[0] = GF2Poly::one(ring).truncated(bound);

    let mut total = xpoly_zero(ring, bound);
    for (xi, coeff) in h.iter().enumerate() {
        for m in coeff.monomials() {
            let mut term = xpoly_zero(ring, bound);
            term[xi] = GF2Poly::one(ring).truncated(bound - xi as u64);
            for (v, e) in m.factors() {
                let cache = &mut powers[v];
                if cache.is_empty() {
                    cache.push(one.clone());
                }
                while cache.len() <= e as usize {
                    let next = xpoly_mul(cache.last().unwrap(), &images[v], ring, bound);
                    cache.push(next);
                }
                term = xpoly_mul(&term, &cache[e as usize], ring, bound);
            }
            for (idx, t) in term.iter().enumerate() {
                if !t.is_zero() {
                    total[idx] = total[idx].add_unchecked(t);
                }
            }
        }
    }

    // reduce with x^r = E_1 x^(r-1) + ... + E_r
    for p in (r..=bound as usize).rev() {
        let c = std::mem::replace(&mut total[p], GF2Poly::zero(ring)).untruncated();
        if c.is_zero() {
            continue;
        }
        for i in 1..=r {
            let target = p - i;
            let t = bound - target as u64;
            let add = c.truncated(t).mul_unchecked(&e_var(i).truncated(t));
            total[target] = total[target].add_unchecked(&add);
        }
    }
    debug_assert!(total[1..].iter().all(GF2Poly::is_zero), "remainder is not symmetric");
    Ok(total.swap_remove(0).untruncated().truncated(bound))
}

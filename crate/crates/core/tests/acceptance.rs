//! Acceptance criteria AC1..AC10. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stiefel::chardata_io::builtin_rep;
use stiefel::eab2::{brute_force_decompose, multiplicities_from_chars, sigma_char_value, EabRep};
use stiefel::swc_gl::gl_total_swc;
use stiefel::swc_sl::{
    f2_closed, f4_closed, f8_closed, f_expansion, restrict_to_sl5, sl3_e, sl5_w8, sl_total_swc, universal_w4,
    universal_w8, CharData, GroupSpec,
};
use stiefel::symfunc::{dickson_factor, dickson_factor_elementary, dickson_full, to_elementary_basis};
use stiefel::{GF2Poly, Ring};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn u(x: u64) -> BigUint {
    BigUint::from(x)
}

fn ac1_dickson_regression() -> Outcome {
    let printed = [
        (2, 1, "1 + E1 + E2"),
        (2, 2, "1 + E1"),
        (3, 2, "1 + E1^2 + E2 + E1*E2 + E3"),
        (
            4,
            2,
            "1 + E1 + E1^2 + E1^3 + E2^2 + E1*E3 + E1*E2^2 + E1^2*E3 + E1*E2*E3 + E3^2 + E1^2*E4",
        ),
        (4, 3, "1 + E1 + E1^2 + E2 + E3 + E1^3 + E1^2*E2 + E1*E3 + E4"),
    ];
    for (r, k, text) in printed {
        let ring = Ring::elementary(r, 1).unwrap();
        let expected = GF2Poly::parse(ring, text).unwrap().to_string();
        let via_monomials = to_elementary_basis(&dickson_factor(r, k, None).unwrap()).unwrap().to_string();
        let via_recursion = dickson_factor_elementary(r, k, None).unwrap().to_string();
        ensure(via_monomials == expected, || format!("D^[{k}] at r={r}: {via_monomials} != {expected}"))?;
        ensure(via_recursion == expected, || format!("D^[{k}] at r={r}: {via_recursion} != {expected}"))?;
    }
    Ok("5 printed expansions reproduced".into())
}

fn ac2_eab2_oracle() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xeab2);
    let mut checked = 0;
    for r in [2u32, 4, 6, 8] {
        for _ in 0..500 {
            let mult: Vec<u64> = (0..=r).map(|_| rng.gen_range(0..=100)).collect();
            let big: Vec<BigUint> = mult.iter().map(|&m| u(m)).collect();
            let values = EabRep::from_multiplicities(r, big.clone()).unwrap().char_values().unwrap();
            let back = multiplicities_from_chars(&EabRep::from_char_values(r, values.clone()).unwrap())
                .map_err(|e| e.to_string())?;
            ensure(back.0 == big, || format!("r={r}: {mult:?} came back as {back}"))?;
            // spread the weight-class values over every element and decompose directly
            let per_element: Vec<BigInt> =
                (0u32..1 << r).map(|e| values[e.count_ones() as usize].clone()).collect();
            let linear = brute_force_decompose(r, &per_element).map_err(|e| e.to_string())?;
            for (v, m) in linear.iter().enumerate() {
                let want = mult[(v as u32).count_ones() as usize];
                ensure(*m == u(want), || format!("r={r}: character {v:#b} has multiplicity {m}, expected {want}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} vectors"))
}

fn ac3_sigma_exhaustive() -> Outcome {
    let mut checked = 0;
    for r in 0..=8u32 {
        for i in 0..=r {
            for k in 0..=r {
                let fast = sigma_char_value(r, i, k).map_err(|e| e.to_string())?;
                let slow = common::sigma_by_orbit_sum(r, i, k);
                ensure(fast == BigInt::from(slow), || format!("r={r} i={i} k={k}: {fast} != {slow}"))?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} values"))
}

/// 200 valid samples for each `n` in {3,5,7} and each residue of `q` mod 4.
fn sampled_char_data() -> Vec<CharData> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5117);
    let mut out = Vec::new();
    for n in [3u32, 5, 7] {
        for qs in [[3u64, 7, 11], [5, 9, 13]] {
            for s in 0..200 {
                let q = qs[s % 3];
                let m = common::random_valid_sigma(&mut rng, n, q, 24);
                out.push(common::char_data_from_sigma(n, q, &m));
            }
        }
    }
    out
}

fn ac4_sl_consistency(samples: &[CharData]) -> Outcome {
    let mut w8_checks = 0;
    for d in samples {
        let g = d.group();
        let w = sl_total_swc(d, 8).map_err(|e| e.to_string())?;
        for k in 1..=3 {
            ensure(w.degree_part(k).is_zero(), || format!("n={} q={}: w_{k} != 0", g.n(), g.q()))?;
        }
        if g.n() < 5 {
            continue;
        }
        let small = restrict_to_sl5(&w).map_err(|e| e.to_string())?;
        let w4 = small.homogeneous_part(4).untruncated();
        let u4 = universal_w4(d).map_err(|e| e.to_string())?;
        ensure(w4 == u4, || format!("n={} q={}: w_4 = {w4}, universal {u4}", g.n(), g.q()))?;
        let w8 = small.homogeneous_part(8).untruncated();
        if g.q_mod4() == 1 && u4.is_zero() {
            let u8_ = universal_w8(d).map_err(|e| e.to_string())?;
            ensure(w8 == u8_, || format!("n={} q={}: w_8 = {w8}, universal {u8_}", g.n(), g.q()))?;
            w8_checks += 1;
        }
        if g.q_mod4() == 3 && g.n() == 5 {
            if let Ok(u8_) = sl5_w8(d) {
                ensure(w8 == u8_, || format!("n=5 q={}: w_8 = {w8}, closed form {u8_}", g.q()))?;
                w8_checks += 1;
            }
        }
    }
    Ok(format!("{} samples, {w8_checks} degree-8 comparisons", samples.len()))
}

fn binom_odd(a: u64, k: u64) -> bool {
    k <= a && (a & k) == k
}

fn ac5_f_closed_forms() -> Outcome {
    let ring = Ring::elementary(4, 1).unwrap();
    let p = |t: &str| GF2Poly::parse(ring, t).unwrap();
    let zero = GF2Poly::zero(ring);
    let h2 = p("E1^2 + E2");
    let h2sq = h2.mul(&h2).unwrap();
    let h2_4 = h2sq.mul(&h2sq).unwrap();
    let k_term = p("E1^2*E2*E4 + E1*E3*E4 + E4^2 + E1^2*E3^2").add(&h2_4).unwrap();
    let pick = |bit: bool, x: &GF2Poly| if bit { x.clone() } else { zero.clone() };
    let (mut n4, mut n8) = (0, 0);
    for a1 in 0..=64u64 {
        for a2 in 0..=64u64 {
            let f = f_expansion(&u(a1), &u(a2), 8).map_err(|e| e.to_string())?;
            let tag = || format!("A1={a1} A2={a2}");
            ensure(f.homogeneous_part(1).is_zero(), || format!("{}: f_1 != 0", tag()))?;
            let f2 = f.homogeneous_part(2).untruncated();
            let want2 = pick((a1 + a2) % 2 == 1, &h2);
            ensure(f2 == want2, || format!("{}: f_2 = {f2}", tag()))?;
            ensure(f2_closed(&u(a1), &u(a2)) == want2, || format!("{}: f2_closed", tag()))?;
            if (a1 + a2) % 2 != 0 {
                continue;
            }
            let f4 = f.homogeneous_part(4).untruncated();
            let want4 = pick(binom_odd(a1, 2) ^ binom_odd(a2, 2), &h2sq);
            ensure(f4 == want4, || format!("{}: f_4 = {f4}", tag()))?;
            ensure(f4_closed(&u(a1), &u(a2)).unwrap() == want4, || format!("{}: f4_closed", tag()))?;
            ensure(f4.is_zero() == (a1 % 4 == a2 % 4), || format!("{}: f_4 vanishing", tag()))?;
            n4 += 1;
            if a1 % 4 != a2 % 4 {
                continue;
            }
            let f8 = f.homogeneous_part(8).untruncated();
            let want8 = pick(binom_odd(a1, 4) ^ binom_odd(a2, 4), &h2_4).add(&pick(a1 % 2 == 1, &k_term)).unwrap();
            ensure(f8 == want8, || format!("{}: f_8 = {f8}, expected {want8}", tag()))?;
            ensure(f8_closed(&u(a1), &u(a2)).unwrap() == want8, || format!("{}: f8_closed", tag()))?;
            n8 += 1;
        }
    }
    Ok(format!("4225 pairs, {n4} f_4 and {n8} f_8 comparisons"))
}

fn ac6_vanishing_criteria(samples: &[CharData]) -> Outcome {
    let (mut n4, mut n8) = (0, 0);
    for d in samples.iter().filter(|d| d.group().n() >= 5) {
        let g = d.group();
        let (m1, m2) = common::window_by_definition(d);
        let w = sl_total_swc(d, 8).map_err(|e| e.to_string())?;
        let w4_zero = w.degree_part(4).is_zero();
        let mod4 = (&m1 - &m2).mod_floor(&BigInt::from(4)) == BigInt::from(0);
        ensure(w4_zero == mod4, || format!("n={} q={} m1={m1} m2={m2}: w_4 zero = {w4_zero}", g.n(), g.q()))?;
        n4 += 1;
        if g.q_mod4() == 1 && w4_zero {
            let w8_zero = w.degree_part(8).is_zero();
            let mod8 = (&m1 - &m2).mod_floor(&BigInt::from(8)) == BigInt::from(0);
            ensure(w8_zero == mod8, || format!("n={} q={} m1={m1} m2={m2}: w_8 zero = {w8_zero}", g.n(), g.q()))?;
            n8 += 1;
        }
    }
    Ok(format!("0 counterexamples over {n4} w_4 and {n8} w_8 checks"))
}

fn ac7_sl3_obstruction() -> Outcome {
    let base = dickson_full(2, None).unwrap();
    let ring = base.ring();
    let d1 = GF2Poly::parse(ring, "v1^2 + v1*v2 + v2^2").unwrap();
    for e in 1..=512u64 {
        let mut bound = 1u64;
        let lowest = loop {
            let p = base.pow_truncated(&u(e), bound).map_err(|x| x.to_string())?;
            if let Some(deg) = p.min_positive_degree() {
                break p.homogeneous_part(deg).untruncated();
            }
            bound *= 2;
            ensure(bound <= 4096, || format!("e={e}: no positive-degree term found"))?;
        };
        let mut want = d1.clone();
        for _ in 0..e.trailing_zeros() {
            want = want.mul(&want).unwrap();
        }
        ensure(lowest == want, || format!("e={e}: lowest term {lowest}"))?;
    }
    Ok("e = 1..512".into())
}

fn ac8_hsw_numbers() -> Outcome {
    let mut parts = Vec::new();
    for q in [3u64, 7, 11] {
        let g = GroupSpec::new(3, q).unwrap();
        let e1 = sl3_e(&builtin_rep("pi1-doubled", g).unwrap()).unwrap();
        let e2 = sl3_e(&builtin_rep("pi2-doubled", g).unwrap()).unwrap();
        let want1 = u((q * q + 2 * q + 1) / 4);
        let want2 = u((q - 1) * (q * q + q + 2) / 4);
        ensure(e1 == want1 && e2 == want2, || format!("q={q}: got ({e1}, {e2}), expected ({want1}, {want2})"))?;
        ensure(e1.gcd(&e2) == u(1), || format!("q={q}: gcd({e1}, {e2}) != 1"))?;
        parts.push(format!("q={q}: ({e1}, {e2})"));
    }
    Ok(parts.join(", "))
}

fn ac9_lucas_path() -> Outcome {
    let base = dickson_full(2, None).unwrap().truncated(12);
    let mut naive = GF2Poly::one(base.ring()).truncated(12);
    for e in 0..=1024u64 {
        if e > 0 {
            naive = naive.mul(&base).unwrap();
        }
        let fast = base.pow_truncated(&u(e), 12).map_err(|x| x.to_string())?;
        ensure(fast.clone().untruncated() == naive.clone().untruncated(), || format!("e={e}: {fast} != {naive}"))?;
    }
    Ok("exponents 0..=1024".into())
}

fn ac10_gl_restriction() -> Outcome {
    let mut checked = 0;
    for r in 1..=4usize {
        let count = 5usize.pow(r as u32);
        for code in 0..count {
            let m: Vec<BigUint> = (0..r).map(|i| u(2 * ((code / 5usize.pow(i as u32)) % 5) as u64)).collect();
            let t = gl_total_swc(r, 1, &m, false, 16).map_err(|e| e.to_string())?;
            let v = gl_total_swc(r, 3, &m, false, 16).map_err(|e| e.to_string())?;
            let restricted = t.restrict_t_to_v_squared().map_err(|e| e.to_string())?;
            ensure(restricted.poly == v.poly, || format!("r={r} m={m:?}: {} != {}", restricted.poly, v.poly))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} multiplicity vectors up to degree 16"))
}

fn run(id: &str, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let result = catch_unwind(AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let outcome = match result {
        Ok(Ok(detail)) if elapsed <= limit => Ok(detail),
        Ok(Ok(detail)) => Err(format!("{detail}; took {elapsed:.2?}, limit {limit:?}")),
        Ok(Err(msg)) => Err(msg),
        Err(_) => Err("panicked".to_string()),
    };
    match &outcome {
        Ok(detail) => println!("{id} PASS {title} ({elapsed:.2?}, limit {limit:?}): {detail}"),
        Err(msg) => println!("{id} FAIL {title} ({elapsed:.2?}, limit {limit:?}): {msg}"),
    }
    outcome.is_ok()
}

fn main() {
    let secs = Duration::from_secs;
    let samples = sampled_char_data();
    let results = [
        run("AC1", "Dickson regression", secs(1), ac1_dickson_regression),
        run("AC2", "eab2 oracle equivalence", secs(30), ac2_eab2_oracle),
        run("AC3", "sigma character values", secs(10), ac3_sigma_exhaustive),
        run("AC4", "SL(n,q) low-degree consistency", secs(120), || ac4_sl_consistency(&samples)),
        run("AC5", "SL(5,q) closed forms", secs(120), ac5_f_closed_forms),
        run("AC6", "w_4 and w_8 vanishing criteria", secs(120), || ac6_vanishing_criteria(&samples)),
        run("AC7", "SL(3,q) obstruction class", secs(60), ac7_sl3_obstruction),
        run("AC8", "HSW numbers", secs(10), ac8_hsw_numbers),
        run("AC9", "Lucas-path powers", secs(60), ac9_lucas_path),
        run("AC10", "GL restriction t -> v^2", secs(120), ac10_gl_restriction),
    ];
    let passed = results.iter().filter(|&&ok| ok).count();
    println!("acceptance: {passed}/{} criteria passed", results.len());
    if passed != results.len() {
        std::process::exit(1);
    }
}

//! Sample generators and brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use num_bigint::{BigInt, BigUint};
use rand::Rng;
use stiefel::swc_sl::{CharData, GroupSpec};

/// Value of `sigma_i` (sum of the weight-`i` linear characters of `C_2^r`) at
/// an element of weight `k`, summed over characters one by one.
pub fn sigma_by_orbit_sum(r: u32, i: u32, k: u32) -> i64 {
    let e: u64 = (1u64 << k) - 1;
    (0u64..1 << r)
        .filter(|v| v.count_ones() == i)
        .map(|v| if (v & e).count_ones().is_multiple_of(2) { 1 } else { -1 })
        .sum()
}

/// Character data of the representation restricting to `sum_k m_k sigma_k`
/// on the diagonal 2-torsion of `SL(n,q)`, where `m_k = m_(n-k)` and `m` holds
/// `m_0..m_((n-1)/2)`.
pub fn char_values_from_sigma(n: u32, m: &[u64]) -> (BigUint, Vec<BigInt>) {
    let r = n - 1;
    let at = |w: u32| -> i128 {
        (0..=r)
            .map(|k| {
                let idx = if k <= r / 2 { k } else { n - k };
                i128::from(sigma_by_orbit_sum(r, k, w)) * i128::from(m[idx as usize])
            })
            .sum()
    };
    let degree = BigUint::from(u128::try_from(at(0)).expect("nonnegative degree"));
    let values = (1..=r / 2).map(|i| BigInt::from(at(2 * i))).collect();
    (degree, values)
}

pub fn char_data_from_sigma(n: u32, q: u64, m: &[u64]) -> CharData {
    let (degree, values) = char_values_from_sigma(n, m);
    CharData::new(GroupSpec::new(n, q).unwrap(), degree, values).expect("sample must be valid")
}

fn binomial_odd(n: u64, k: u64) -> bool {
    k <= n && (n & k) == k
}

/// Random `m_0..m_((n-1)/2)` with entries at most `max` that form a valid
/// orthogonal character for the residue of `q` mod 4: even `m_k` (`k >= 1`)
/// for `q = 1`, and an even weighted sum `sum m_k C(n-2, k-1)` for `q = 3`.
pub fn random_valid_sigma<R: Rng>(rng: &mut R, n: u32, q: u64, max: u64) -> Vec<u64> {
    let half = (n - 1) / 2;
    let mut m: Vec<u64> = (0..=half).map(|_| rng.gen_range(0..=max)).collect();
    if q % 4 == 1 {
        for x in m.iter_mut().skip(1) {
            *x &= !1;
        }
    } else {
        let odd = (1..=half as usize)
            .filter(|&k| m[k] % 2 == 1 && binomial_odd(u64::from(n - 2), k as u64 - 1))
            .count();
        if odd % 2 == 1 {
            m[1] = if m[1] == max { m[1] - 1 } else { m[1] + 1 };
        }
    }
    m
}

/// `m_1, m_2` of the restriction to `SL(5,q)`, straight from the definition
/// `m_k = 2^-4 sum_j chi(b_j) [(1-x)^j (1+x)^(4-j)]_k` with `b_1 ~ b_2`, `b_3 ~ b_4`.
pub fn window_by_definition(data: &CharData) -> (BigInt, BigInt) {
    let chi = |j: u32| -> BigInt {
        match j {
            0 => BigInt::from(data.degree().clone()),
            1 | 2 => data.values()[0].clone(),
            _ => data.values()[1].clone(),
        }
    };
    let mk = |k: u32| -> BigInt {
        let mut acc = BigInt::from(0);
        for j in 0..=4u32 {
            let classes = [1i64, 4, 6, 4, 1][j as usize];
            acc += chi(j) * BigInt::from(classes * sigma_by_orbit_sum(4, k, j));
        }
        // each sigma_k has C(4,k) characters, and the class sizes above sum to 16
        let denom = BigInt::from(16 * [1i64, 4, 6, 4, 1][k as usize]);
        assert_eq!(&acc % &denom, BigInt::from(0), "m_{k} is not an integer");
        acc / denom
    };
    (mk(1), mk(2))
}

//! Brute-force ground truth: partitions, Dyson ranks and Kronecker symbols.
//!
//! Nothing here touches the series engine, so these functions can serve as
//! independent checks on it.

use std::collections::BTreeMap;

use crate::error::{QError, Result};

/// Default enumeration cap.
pub const PARTITION_CAP: i64 = 40;

/// Parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    pub parts: Vec<u32>,
}

impl Partition {
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }
}

fn check_cap(n: i64) -> Result<()> {
    if !(0..=PARTITION_CAP).contains(&n) {
        return Err(QError::CapExceeded { n, cap: PARTITION_CAP });
    }
    Ok(())
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: i64) -> Result<Vec<Partition>> {
    check_cap(n)?;
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rem: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n as u32, n as u32, &mut cur, &mut out);
    Ok(out)
}

/// Largest part minus number of parts; the empty partition has rank 0.
pub fn rank_of(p: &Partition) -> i64 {
    match p.parts.first() {
        None => 0,
        Some(&largest) => largest as i64 - p.parts.len() as i64,
    }
}

/// `m -> R(m, n)` for every rank occurring among partitions of `n`.
pub fn rank_distribution(n: i64) -> Result<BTreeMap<i64, u64>> {
    let mut d = BTreeMap::new();
    for p in partitions_of(n)? {
        *d.entry(rank_of(&p)).or_insert(0) += 1;
    }
    Ok(d)
}

/// Number of partitions of `n` with rank `m`.
pub fn rank_count(m: i64, n: i64) -> Result<u64> {
    Ok(rank_distribution(n)?.get(&m).copied().unwrap_or(0))
}

/// `sum_m (-1)^m R(m, n)`: even-rank minus odd-rank partitions of `n`.
pub fn f_coeff_oracle(n: i64) -> Result<i64> {
    Ok(rank_distribution(n)?
        .iter()
        .map(|(m, c)| if m.rem_euclid(2) == 0 { *c as i64 } else { -(*c as i64) })
        .sum())
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut f = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            f.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        f.push((n, 1));
    }
    f
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    r
}

/// Legendre symbol `(a/p)` for an odd prime `p`, by Euler's criterion.
fn legendre(a: i64, p: u64) -> i32 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if pow_mod(a, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// The Kronecker symbol `(a/n)` for `n >= 0`, from the prime factorization
/// of `n`.
pub fn kronecker(a: i64, n: u64) -> i32 {
    if n == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let mut r = 1;
    for (p, e) in factorize(n) {
        let s = if p == 2 {
            if a % 2 == 0 {
                0
            } else {
                match a.rem_euclid(8) {
                    1 | 7 => 1,
                    _ => -1,
                }
            }
        } else {
            legendre(a, p)
        };
        if s == 0 {
            return 0;
        }
        if s == -1 && e % 2 == 1 {
            r = -r;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partition_counts() {
        assert_eq!(partitions_of(0).unwrap(), vec![Partition { parts: vec![] }]);
        let four: Vec<Vec<u32>> = partitions_of(4).unwrap().into_iter().map(|p| p.parts).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        assert_eq!(partitions_of(5).unwrap().len(), 7);
        assert!(matches!(partitions_of(41), Err(QError::CapExceeded { .. })));
        assert!(partitions_of(-1).is_err());
    }

    #[test]
    fn ranks() {
        let p = |v: &[u32]| Partition { parts: v.to_vec() };
        assert_eq!(rank_of(&p(&[4])), 3);
        assert_eq!(rank_of(&p(&[2, 1, 1])), -1);
        assert_eq!(rank_of(&p(&[2, 2])), 0);
        assert_eq!(rank_count(3, 4).unwrap(), 1);
        assert_eq!(rank_count(0, 4).unwrap(), 1);
        for n in 0..=20 {
            let d = rank_distribution(n).unwrap();
            for (m, c) in &d {
                assert_eq!(d.get(&-m), Some(c), "rank symmetry at n = {n}");
            }
        }
    }

    #[test]
    fn rank_parity() {
        assert_eq!(f_coeff_oracle(0).unwrap(), 1);
        assert_eq!(f_coeff_oracle(2).unwrap(), -2);
        assert_eq!(f_coeff_oracle(4).unwrap(), -3);
    }

    #[test]
    fn kronecker_values() {
        assert_eq!(
            [1, 5, 7, 11, 6].map(|n| kronecker(12, n)),
            [1, -1, -1, 1, 0]
        );
        assert_eq!(kronecker(-12, 5), -1);
        assert_eq!(kronecker(-12, 7), 1);
        assert_eq!([1, 2, 3].map(|a| kronecker(a, 3)), [1, -1, 0]);
        assert_eq!(kronecker(5, 0), 0);
        assert_eq!(kronecker(-1, 0), 1);
    }

    #[test]
    fn kronecker_twelve_has_period_twelve() {
        for n in 1..200u64 {
            let expect = match n % 12 {
                1 | 11 => 1,
                5 | 7 => -1,
                _ => 0,
            };
            assert_eq!(kronecker(12, n), expect, "n = {n}");
        }
    }

    #[test]
    fn kronecker_is_multiplicative() {
        for a in [12, -12, 1, 3, -3] {
            for m in 1..40u64 {
                for n in 1..40u64 {
                    assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
                }
            }
        }
    }
}

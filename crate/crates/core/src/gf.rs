//! Exact arithmetic over GF(q) for prime powers q.
//!
//! Prime fields use modular arithmetic. For q = p^k with k > 1, elements are
//! encoded as integers 0..q whose base-p digits are polynomial coefficients
//! (digit i is the coefficient of x^i), reduced modulo a fixed irreducible
//! polynomial: the monic irreducible of degree k with the least integer
//! encoding. This makes representations reproducible across runs; the
//! polynomial is embedded in saved files.

use crate::error::{MatroidError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GfField {
    pub q: u32,
    pub p: u32,
    pub k: u32,
    /// Integer encoding of the reduction polynomial (monic, degree k);
    /// 0 for prime fields.
    pub poly: u32,
    mul_table: Vec<u16>,
    add_table: Vec<u16>,
    inv_table: Vec<u16>,
}

fn factor_prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut m = q;
            let mut k = 0;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            return if m == 1 { Some((p, k)) } else { None };
        }
        p += 1;
    }
    Some((q, 1))
}

fn digits(mut v: u32, p: u32, k: u32) -> Vec<u32> {
    let mut d = vec![0; k as usize + 1];
    for slot in d.iter_mut() {
        *slot = v % p;
        v /= p;
    }
    d
}

/// Multiply two polynomials (digit vectors) over GF(p) and reduce modulo the
/// monic polynomial with digit vector `m` of degree `k`.
fn poly_mul_mod(a: &[u32], b: &[u32], m: &[u32], p: u32, k: usize) -> u32 {
    let mut prod = vec![0u32; a.len() + b.len()];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    // reduce: x^k = -(m - x^k)
    for d in (k..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for j in 0..k {
            // subtract c * m[j] * x^(d-k+j)
            let t = (c * m[j]) % p;
            let idx = d - k + j;
            prod[idx] = (prod[idx] + p * p - t) % p;
        }
    }
    let mut v = 0;
    for d in (0..k).rev() {
        v = v * p + prod[d];
    }
    v
}

fn is_irreducible(poly: u32, p: u32, k: u32) -> bool {
    // No roots is enough for k <= 3; for completeness also reject products of
    // two irreducible quadratics when k = 4.
    let m = digits(poly, p, k);
    let eval = |x: u32| -> u32 {
        let mut acc = 0u64;
        for d in (0..=k as usize).rev() {
            acc = (acc * x as u64 + m[d] as u64) % p as u64;
        }
        acc as u32
    };
    for x in 0..p {
        if eval(x) == 0 {
            return false;
        }
    }
    if k <= 3 {
        return true;
    }
    // k = 4: check divisibility by each monic irreducible quadratic.
    for c1 in 0..p {
        for c0 in 0..p {
            let quad = c0 + c1 * p + p * p; // x^2 + c1 x + c0
            if !is_irreducible(quad, p, 2) {
                continue;
            }
            if poly_divisible(poly, quad, p, k, 2) {
                return false;
            }
        }
    }
    true
}

fn poly_divisible(poly: u32, div: u32, p: u32, kp: u32, kd: u32) -> bool {
    let mut rem = digits(poly, p, kp);
    let d = digits(div, p, kd);
    for lead in (kd as usize..=kp as usize).rev() {
        let c = rem[lead];
        if c == 0 {
            continue;
        }
        for j in 0..=kd as usize {
            let idx = lead - kd as usize + j;
            rem[idx] = (rem[idx] + p * p - c * d[j] % p) % p;
        }
    }
    rem.iter().all(|&c| c == 0)
}

/// The monic irreducible polynomial of degree k over GF(p) with the least
/// integer encoding (encoding = sum of digit_i * p^i, including the leading
/// p^k term).
pub fn least_irreducible(p: u32, k: u32) -> u32 {
    let pk = p.pow(k);
    for rest in 0..pk {
        let poly = pk + rest;
        if is_irreducible(poly, p, k) {
            return poly;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

impl GfField {
    pub fn new(q: u32) -> Result<GfField> {
        let (p, k) = factor_prime_power(q).ok_or(MatroidError::NotAPrimePower(q))?;
        if q > 512 {
            return Err(MatroidError::BadParameters(format!("field order {q} too large")));
        }
        let poly = if k == 1 { 0 } else { least_irreducible(p, k) };
        let n = q as usize;
        let mut add_table = vec![0u16; n * n];
        let mut mul_table = vec![0u16; n * n];
        let mdig = if k > 1 { digits(poly, p, k) } else { vec![] };
        for a in 0..q {
            for b in 0..q {
                let (s, m) = if k == 1 {
                    ((a + b) % p, (a * b) % p)
                } else {
                    let da = digits(a, p, k);
                    let db = digits(b, p, k);
                    let mut sum = 0;
                    for d in (0..k as usize).rev() {
                        sum = sum * p + (da[d] + db[d]) % p;
                    }
                    (sum, poly_mul_mod(&da, &db, &mdig, p, k as usize))
                };
                add_table[(a * q + b) as usize] = s as u16;
                mul_table[(a * q + b) as usize] = m as u16;
            }
        }
        let mut inv_table = vec![0u16; n];
        for a in 1..q {
            for b in 1..q {
                if mul_table[(a * q + b) as usize] == 1 {
                    inv_table[a as usize] = b as u16;
                    break;
                }
            }
        }
        Ok(GfField { q, p, k, poly, mul_table, add_table, inv_table })
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add_table[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul_table[(a * self.q + b) as usize] as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        // search is fine: tables are tiny
        for b in 0..self.q {
            if self.add(a, b) == 0 {
                return b;
            }
        }
        unreachable!()
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        self.inv_table[a as usize] as u32
    }

    /// Rank of the matrix whose columns are the given vectors.
    pub fn rank_of_columns(&self, cols: &[&[u32]]) -> usize {
        if cols.is_empty() {
            return 0;
        }
        let dim = cols[0].len();
        let mut work: Vec<Vec<u32>> = cols.iter().map(|c| c.to_vec()).collect();
        let mut rank = 0;
        for row in 0..dim {
            let Some(pivot) = (rank..work.len()).find(|&c| work[c][row] != 0) else {
                continue;
            };
            work.swap(rank, pivot);
            let inv = self.inv(work[rank][row]);
            for r in row..dim {
                work[rank][r] = self.mul(work[rank][r], inv);
            }
            let pivot_col = work[rank].clone();
            for c in 0..work.len() {
                if c == rank || work[c][row] == 0 {
                    continue;
                }
                let factor = work[c][row];
                for r in row..dim {
                    let t = self.mul(factor, pivot_col[r]);
                    work[c][r] = self.sub(work[c][r], t);
                }
            }
            rank += 1;
            if rank == work.len() {
                break;
            }
        }
        rank
    }
}

pub fn is_prime_power(q: u32) -> bool {
    factor_prime_power(q).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documented_polynomials() {
        assert_eq!(least_irreducible(2, 2), 0b111); // x^2+x+1
        assert_eq!(least_irreducible(2, 3), 0b1011); // x^3+x+1
        assert_eq!(least_irreducible(3, 2), 9 + 1); // x^2+1
    }

    #[test]
    fn field_axioms_small() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let f = GfField::new(q).unwrap();
            for a in 0..q {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a)), 1);
                }
                for b in 0..q {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in 0..q {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    }
                }
            }
        }
        assert!(GfField::new(6).is_err());
    }

    #[test]
    fn rank_identity() {
        let f = GfField::new(3).unwrap();
        let cols: Vec<Vec<u32>> = vec![vec![1, 0], vec![0, 1], vec![1, 2]];
        let refs: Vec<&[u32]> = cols.iter().map(|c| c.as_slice()).collect();
        assert_eq!(f.rank_of_columns(&refs), 2);
        assert_eq!(f.rank_of_columns(&refs[..1]), 1);
    }
}

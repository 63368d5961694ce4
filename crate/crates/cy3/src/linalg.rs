//! Exact linear algebra over the rationals.
//!
//! Dense routines sized for this crate's needs (a few hundred columns at
//! most): rank, reduced row echelon form, nullspace, and span membership.
//! A single-prime modular kernel plus rational reconstruction is provided as
//! a fast guessing pass; callers must confirm guesses exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row. Zero rows are dropped.
pub fn rref(rows: &mut Vec<Vec<Rat>>) -> Vec<usize> {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    for r in rows.iter_mut() {
        r.resize(ncols, Rat::zero());
    }
    let mut pivots = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows.len() {
            if i != rank && !rows[i][col].is_zero() {
                let factor = rows[i][col].clone();
                for c in col..ncols {
                    let t = &rows[rank][c] * &factor;
                    rows[i][c] -= t;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

/// Rank by forward elimination only: rows are folded one at a time into an
/// echelon set keyed by pivot column, so work scales with the true rank and
/// the nonzero tail of each row.
pub fn rank(rows: Vec<Vec<Rat>>) -> usize {
    let mut pivots: std::collections::BTreeMap<usize, Vec<Rat>> = std::collections::BTreeMap::new();
    for mut row in rows {
        loop {
            let Some(lead) = row.iter().position(|x| !x.is_zero()) else {
                break;
            };
            match pivots.get(&lead) {
                Some(p) => {
                    let factor = row[lead].clone();
                    for (c, pv) in p.iter().enumerate().skip(lead) {
                        if !pv.is_zero() {
                            let t = pv * &factor;
                            row[c] -= t;
                        }
                    }
                }
                None => {
                    let inv = row[lead].recip();
                    for v in row.iter_mut().skip(lead) {
                        if !v.is_zero() {
                            *v *= &inv;
                        }
                    }
                    pivots.insert(lead, row);
                    break;
                }
            }
        }
    }
    pivots.len()
}

/// Basis of `{v : A v = 0}` for the matrix with the given rows, all of
/// length `ncols`. Each kernel vector has its first nonzero entry equal to 1.
pub fn nullspace(mut rows: Vec<Vec<Rat>>, ncols: usize) -> Vec<Vec<Rat>> {
    for r in rows.iter_mut() {
        r.resize(ncols, Rat::zero());
    }
    let pivots = rref(&mut rows);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::one();
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[ri][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Unique exact solution of `A·x = b`, or `None` when the system is
/// inconsistent or underdetermined.
pub fn solve_unique(a: &[Vec<Rat>], b: &[Rat]) -> Option<Vec<Rat>> {
    let ncols = a.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut rows: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(r, t)| {
            let mut row = r.clone();
            row.resize(ncols, Rat::zero());
            row.push(t.clone());
            row
        })
        .collect();
    let pivots = rref(&mut rows);
    // inconsistent: a pivot in the augmented column
    if pivots.contains(&ncols) {
        return None;
    }
    // underdetermined: fewer pivots than unknowns
    if pivots.len() < ncols {
        return None;
    }
    let mut x = vec![Rat::zero(); ncols];
    for (row, &pc) in rows.iter().zip(&pivots) {
        x[pc] = row[ncols].clone();
    }
    Some(x)
}

/// Does `v` lie in the row span of an `rref` basis?
pub fn in_span(rref_rows: &[Vec<Rat>], pivots: &[usize], v: &[Rat]) -> bool {
    let mut v = v.to_vec();
    for (row, &pc) in rref_rows.iter().zip(pivots) {
        if !v[pc].is_zero() {
            let factor = v[pc].clone();
            for (c, rv) in row.iter().enumerate() {
                let t = rv * &factor;
                v[c] -= t;
            }
        }
    }
    v.iter().all(|x| x.is_zero())
}

/// Divide a vector of integers by their gcd and make the first nonzero
/// entry positive. No-op on the zero vector.
pub fn primitive_integer(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    if let Some(first) = v.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            g = -g;
        }
    }
    for x in v.iter_mut() {
        *x /= &g;
    }
}

/// Clear denominators: smallest positive integer multiple of `v` with
/// integer entries, returned primitive.
pub fn to_primitive_integer(v: &[Rat]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut out: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    primitive_integer(&mut out);
    out
}

// --- modular guessing pass ---------------------------------------------

/// A prime below 2^62 so products fit in u128.
pub const GUESS_PRIME: u64 = 4_611_686_018_427_387_847; // 2^62 - 57

pub fn mod_reduce(x: &BigInt, p: u64) -> u64 {
    let m = x.mod_floor(&BigInt::from(p));
    let (_, digits) = m.to_u64_digits();
    *digits.first().unwrap_or(&0)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, p);
        }
        b = mul_mod(b, b, p);
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Kernel basis mod `p` of the matrix with the given rows.
pub fn nullspace_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    for r in rows.iter_mut() {
        r.resize(ncols, 0);
    }
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else {
            continue;
        };
        rows.swap(rank, pr);
        let inv = inv_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        for i in 0..rows.len() {
            if i != rank && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in col..ncols {
                    let t = mul_mod(rows[rank][c], f, p);
                    rows[i][c] = (rows[i][c] + p - t) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (ri, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[ri][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Lattice-reduction step of rational reconstruction: find `n/d` with
/// `n ≡ d·a (mod p)`, `|n|, d ≤ √(p/2)`.
pub fn rational_reconstruct(a: u64, p: u64) -> Option<Rat> {
    let bound = (p as f64 / 2.0).sqrt() as i128;
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    Some(Rat::new(BigInt::from(n), BigInt::from(d)))
}

// --- deterministic pseudo-random stream ---------------------------------

/// SplitMix64. Used where the library needs an arbitrary-but-reproducible
/// choice (random changes of variables); seeded from the input data so the
/// whole crate is deterministic across runs.
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }
}

/// FNV-1a over bytes; stable across platforms and releases.
pub fn fnv1a(bytes: &[u8]) -> u64 {
    let mut h = 0xcbf29ce484222325u64;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

//! Brute-force graded-algebra engine.
//!
//! For a quadratic presentation `TV/(R)` on three generators this module
//! computes exact dimensions of graded pieces, checks the Hilbert function
//! against `(1−t)^{-3}`, and decides degree-3 centrality of quadratic
//! elements. Everything is exact integer linear algebra on sparse vectors
//! of length `3ⁿ`.
//!
//! The degree-`n` piece of the ideal is grown incrementally:
//! `I_n = V·I_{n−1} + R·V^{⊗(n−2)}`. An echelon basis of `I_{n−1}` with
//! distinct leading words stays echelon after prefixing a letter (words are
//! coded prefix-major), so only the `3^{n−2}` fresh rows `r ⊗ word` need
//! reduction. Rows are primitive integer vectors; elimination is
//! fraction-free with periodic content stripping.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::linalg;
use crate::rat::Rat;
use crate::tensor3::{RelationSpace, TensorN};
use crate::{Error, Result};

/// Hard ceiling on the graded degree; `3^cap` columns is the refusal point.
pub const DEFAULT_DEGREE_CAP: usize = 10;

/// A quadratic presentation `TV/(R)` over three generators. Any relation
/// dimension is accepted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticPresentation {
    relations: RelationSpace,
}

impl QuadraticPresentation {
    pub fn new(relations: RelationSpace) -> Self {
        QuadraticPresentation { relations }
    }

    pub fn relations(&self) -> &RelationSpace {
        &self.relations
    }
}

/// Graded dimensions compared against the binomial targets `C(n+2, 2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertReport {
    pub dims: Vec<usize>,
    pub first_mismatch: Option<usize>,
}

impl HilbertReport {
    pub fn target(n: usize) -> usize {
        (n + 1) * (n + 2) / 2
    }

    pub fn passes(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

// --- sparse integer rows ----------------------------------------------------

/// Sorted `(word code, coefficient)` pairs; the word code is the base-3
/// big-endian reading, so lexicographic word order is integer order.
type SparseRow = Vec<(u32, BigInt)>;

fn strip_content(row: &mut SparseRow) {
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g == BigInt::from(1) {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    if g != BigInt::from(1) {
        for (_, c) in row.iter_mut() {
            *c /= &g;
        }
    }
}

/// `ca·a + cb·b`, merged by index.
fn combine(a: &SparseRow, ca: &BigInt, b: &SparseRow, cb: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push((a[i].0, &a[i].1 * ca));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((b[j].0, &b[j].1 * cb));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = &a[i].1 * ca + &b[j].1 * cb;
                if !v.is_zero() {
                    out.push((a[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    for (idx, c) in &a[i..] {
        out.push((*idx, c * ca));
    }
    for (idx, c) in &b[j..] {
        out.push((*idx, c * cb));
    }
    out
}

/// Echelon set with unique leading indices.
struct Echelon {
    rows: Vec<SparseRow>,
    lead_of: HashMap<u32, usize>,
}

impl Echelon {
    fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            lead_of: HashMap::new(),
        }
    }

    fn insert_fresh(&mut self, mut row: SparseRow) {
        strip_content(&mut row);
        debug_assert!(!row.is_empty());
        let lead = row[0].0;
        debug_assert!(!self.lead_of.contains_key(&lead));
        self.lead_of.insert(lead, self.rows.len());
        self.rows.push(row);
    }

    /// Reduce against the basis; a nonzero remainder joins it. Returns
    /// whether the row was linearly new.
    fn reduce_insert(&mut self, mut row: SparseRow) -> bool {
        let mut steps = 0u32;
        loop {
            let Some(&(lead, ref lc)) = row.first() else {
                return false;
            };
            match self.lead_of.get(&lead) {
                None => {
                    strip_content(&mut row);
                    self.lead_of.insert(lead, self.rows.len());
                    self.rows.push(row);
                    return true;
                }
                Some(&i) => {
                    let b = &self.rows[i];
                    let lb = &b[0].1;
                    let g = lc.gcd(lb);
                    let ca = lb / &g;
                    let cb = -(lc / &g);
                    row = combine(&row, &ca, b, &cb);
                    steps += 1;
                    if steps % 16 == 0 {
                        strip_content(&mut row);
                    }
                }
            }
        }
    }

    fn len(&self) -> usize {
        self.rows.len()
    }
}

fn relation_rows(relations: &RelationSpace) -> Vec<SparseRow> {
    relations
        .basis()
        .iter()
        .map(|t| {
            let dense: Vec<Rat> = (0..9)
                .map(|code| t.coefficient(&[(code / 3) as u8, (code % 3) as u8]))
                .collect();
            let ints = linalg::to_primitive_integer(&dense);
            (0..9u32)
                .filter(|&c| !ints[c as usize].is_zero())
                .map(|c| (c, ints[c as usize].clone()))
                .collect()
        })
        .collect()
}

/// Exact graded dimensions of `TV/(R)` for degrees `0..=n`.
pub fn graded_dims_up_to(
    p: &QuadraticPresentation,
    n: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    if n > cap {
        return Err(Error::DegreeCap {
            requested: n,
            cap,
        });
    }
    let mut dims = vec![1usize];
    if n == 0 {
        return Ok(dims);
    }
    dims.push(3);
    if n == 1 {
        return Ok(dims);
    }
    let rel_rows = relation_rows(&p.relations);
    // degree 2
    let mut basis = Echelon::new();
    for r in &rel_rows {
        basis.insert_fresh(r.clone());
    }
    dims.push(9 - basis.len());
    let mut pow3 = 9u32; // 3^(current degree)
    for _d in 3..=n {
        let prev_pow = pow3; // 3^(d-1)
        pow3 *= 3;
        // V·I_{d−1}: prefix each basis row by a letter; leads stay distinct
        let mut next = Echelon::new();
        for a in 0..3u32 {
            let offset = a * prev_pow;
            for row in &basis.rows {
                let shifted: SparseRow =
                    row.iter().map(|(c, v)| (offset + c, v.clone())).collect();
                next.insert_fresh(shifted);
            }
        }
        // fresh rows r ⊗ word over all suffix words
        let suffixes = pow3 / 9; // 3^(d-2)
        for r in &rel_rows {
            for v in 0..suffixes {
                let cand: SparseRow = r.iter().map(|(c, coef)| (c * suffixes + v, coef.clone())).collect();
                next.reduce_insert(cand);
            }
        }
        basis = next;
        dims.push(pow3 as usize - basis.len());
    }
    Ok(dims)
}

/// Dimension of the degree-`n` graded piece of `TV/(R)`.
pub fn graded_dim(p: &QuadraticPresentation, n: usize) -> Result<usize> {
    graded_dim_capped(p, n, DEFAULT_DEGREE_CAP)
}

pub fn graded_dim_capped(p: &QuadraticPresentation, n: usize, cap: usize) -> Result<usize> {
    Ok(*graded_dims_up_to(p, n, cap)?.last().unwrap())
}

/// Compare the graded dimensions against `C(n+2,2)` up to degree `N`.
pub fn hilbert_check(p: &QuadraticPresentation, n: usize) -> Result<HilbertReport> {
    hilbert_check_capped(p, n, DEFAULT_DEGREE_CAP)
}

pub fn hilbert_check_capped(
    p: &QuadraticPresentation,
    n: usize,
    cap: usize,
) -> Result<HilbertReport> {
    let dims = graded_dims_up_to(p, n, cap)?;
    let first_mismatch = dims
        .iter()
        .enumerate()
        .find(|(k, &d)| d != HilbertReport::target(*k))
        .map(|(k, _)| k);
    Ok(HilbertReport {
        dims,
        first_mismatch,
    })
}

/// Does a degree-2 tensor commute with every generator modulo the degree-3
/// piece of the ideal? Commuting with the generators in degree 3 is exactly
/// centrality for a quadratic element.
pub fn central_check(p: &QuadraticPresentation, g: &TensorN) -> Result<bool> {
    if g.degree() != 2 {
        return Err(Error::WrongDegree {
            expected: 2,
            got: g.degree(),
        });
    }
    // span of V·R + R·V inside the 27-dimensional degree-3 space
    let tensor3_to_vec = |t: &TensorN| -> Vec<Rat> {
        let mut v = Vec::with_capacity(27);
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    v.push(t.coefficient(&[a, b, c]));
                }
            }
        }
        v
    };
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for r in p.relations.basis() {
        for a in 0..3u8 {
            let xa = TensorN::word(&[a]);
            rows.push(tensor3_to_vec(&xa.concat(r)));
            rows.push(tensor3_to_vec(&r.concat(&xa)));
        }
    }
    let pivots = linalg::rref(&mut rows);
    for a in 0..3u8 {
        let xa = TensorN::word(&[a]);
        let commutator = g.concat(&xa).sub(&xa.concat(g));
        if !linalg::in_span(&rows, &pivots, &tensor3_to_vec(&commutator)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Count length-`n` words over three letters avoiding the given length-2
/// factors, by the transfer matrix. Independent of the elimination path;
/// agrees with [`graded_dim`] on monomial presentations.
pub fn monomial_dims(avoid: &[[u8; 2]], n: usize) -> usize {
    if n == 0 {
        return 1;
    }
    let mut allowed = [[true; 3]; 3];
    for f in avoid {
        allowed[f[0] as usize][f[1] as usize] = false;
    }
    let mut counts = [1u64; 3];
    for _ in 1..n {
        let mut next = [0u64; 3];
        for b in 0..3 {
            for (a, row) in allowed.iter().enumerate() {
                if row[b] {
                    next[b] += counts[a];
                }
            }
        }
        counts = next;
    }
    counts.iter().sum::<u64>() as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;
    use crate::tensor3::{hat, relation_space, w0};
    use crate::exactpoly::TernaryForm;

    fn monomial_presentation(words: &[[u8; 2]]) -> QuadraticPresentation {
        let rels = words.iter().map(|w| TensorN::word(w));
        QuadraticPresentation::new(RelationSpace::from_tensors(rels).unwrap())
    }

    fn commutative() -> QuadraticPresentation {
        QuadraticPresentation::new(relation_space(&w0()).unwrap())
    }

    #[test]
    fn polynomial_ring_dimensions() {
        let p = commutative();
        assert_eq!(graded_dim(&p, 3).unwrap(), 10);
        let report = hilbert_check(&p, 7).unwrap();
        assert_eq!(report.dims, vec![1, 3, 6, 10, 15, 21, 28, 36]);
        assert!(report.passes());
    }

    #[test]
    fn monomial_presentations() {
        let cyclic = monomial_presentation(&[[0, 1], [1, 2], [2, 0]]);
        assert_eq!(graded_dim(&cyclic, 3).unwrap(), 12);
        assert_eq!(
            hilbert_check(&cyclic, 4).unwrap().first_mismatch,
            Some(3)
        );
        let squares = monomial_presentation(&[[0, 0], [1, 1], [2, 2]]);
        assert_eq!(graded_dim(&squares, 3).unwrap(), 12);
    }

    #[test]
    fn single_relation_mismatch_immediately() {
        let x3 = hat(&TernaryForm::monomial([3, 0, 0], int(1)));
        let p = QuadraticPresentation::new(relation_space(&x3).unwrap());
        let report = hilbert_check(&p, 3).unwrap();
        assert_eq!(report.dims[2], 8);
        assert_eq!(report.first_mismatch, Some(2));
    }

    #[test]
    fn transfer_matrix_counts() {
        assert_eq!(monomial_dims(&[[0, 1], [1, 2], [2, 0]], 4), 24);
        assert_eq!(monomial_dims(&[], 3), 27);
        let all: Vec<[u8; 2]> = (0..3)
            .flat_map(|a| (0..3).map(move |b| [a as u8, b as u8]))
            .collect();
        assert_eq!(monomial_dims(&all, 2), 0);
    }

    #[test]
    fn graded_dim_agrees_with_transfer_matrix() {
        let sets: Vec<Vec<[u8; 2]>> = vec![
            vec![[0, 1], [1, 2], [2, 0]],
            vec![[0, 0], [1, 1], [2, 2]],
            vec![[0, 1]],
            vec![[0, 0], [1, 2]],
            vec![[0, 1], [1, 0], [2, 2]],
        ];
        for avoid in sets {
            let p = monomial_presentation(&avoid);
            for n in 0..=7 {
                assert_eq!(
                    graded_dim(&p, n).unwrap(),
                    monomial_dims(&avoid, n),
                    "avoid {avoid:?}, degree {n}"
                );
            }
        }
    }

    #[test]
    fn degree_cap_is_enforced() {
        let p = commutative();
        assert_eq!(
            graded_dim(&p, 11),
            Err(Error::DegreeCap {
                requested: 11,
                cap: DEFAULT_DEGREE_CAP
            })
        );
    }

    #[test]
    fn graded_dim_is_gl_invariant() {
        use crate::exactpoly::LinMap3;
        let theta = LinMap3::from_ints([[1, 2, 0], [0, 1, 1], [1, 0, 3]]);
        let f = TernaryForm::monomial([1, 1, 1], int(1));
        let w = w0().sub(&hat(&f));
        let p = QuadraticPresentation::new(relation_space(&w).unwrap());
        let q = QuadraticPresentation::new(relation_space(&w.apply(&theta)).unwrap());
        for n in 0..=5 {
            assert_eq!(graded_dim(&p, n).unwrap(), graded_dim(&q, n).unwrap());
        }
    }

    #[test]
    fn centrality_in_clifford_like_presentations() {
        // symmetrized triangle relations: squares are central
        let f = TernaryForm::monomial([1, 1, 1], int(1));
        let p = QuadraticPresentation::new(relation_space(&hat(&f)).unwrap());
        for a in 0..3u8 {
            let g = TensorN::word(&[a, a]);
            assert!(central_check(&p, &g).unwrap());
        }
        // x² is not central in the cyclic monomial algebra
        let cyclic = monomial_presentation(&[[0, 1], [1, 2], [2, 0]]);
        assert!(!central_check(&cyclic, &TensorN::word(&[0, 0])).unwrap());
        // xy is central in the commutative ring
        assert!(central_check(&commutative(), &TensorN::word(&[0, 1])).unwrap());
    }
}

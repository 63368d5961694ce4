//! Projective emptiness by pure linear algebra.
//!
//! Whether a finite set of homogeneous forms has a common zero in projective
//! space over the algebraic closure is decided by graded ideal saturation:
//! the system is empty exactly when the ideal it generates fills the whole
//! degree-`t*` piece of the polynomial ring, where `t*` is the classical
//! Macaulay bound (sum of the `n` largest generator degrees minus `n−1`).
//! No root finding, no Gröbner bases.
//!
//! The bound is not trusted silently: fullness is recomputed at `t*+1` and a
//! disagreement raises an internal-consistency error, since fullness must
//! propagate upward.

use crate::exactpoly::{Mono, TernaryForm};
use crate::linalg;
use crate::rat::Rat;
use crate::{Error, Result};

/// A finite list of homogeneous generators in `n` variables (`n` = 2 or 3;
/// two-variable systems live in the `(x, y)` slots of a [`TernaryForm`]).
/// Zero generators are discarded on construction.
#[derive(Debug, Clone)]
pub struct FormSystem {
    nvars: usize,
    gens: Vec<TernaryForm>,
}

impl FormSystem {
    pub fn new(nvars: usize, gens: impl IntoIterator<Item = TernaryForm>) -> Result<Self> {
        if !(2..=3).contains(&nvars) {
            return Err(Error::Input(format!("unsupported variable count {nvars}")));
        }
        let gens: Vec<TernaryForm> = gens.into_iter().filter(|g| !g.is_zero()).collect();
        for g in &gens {
            if nvars == 2 {
                let uses_z = g.terms().any(|(m, _)| m.0[2] != 0);
                if uses_z {
                    return Err(Error::Input(
                        "two-variable system has a generator involving the third variable".into(),
                    ));
                }
            }
        }
        Ok(FormSystem { nvars, gens })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[TernaryForm] {
        &self.gens
    }
}

/// Monomials of total degree `d` in the first `nvars` variables, in the
/// canonical order.
pub fn monomials(nvars: usize, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for i in 0..=d {
        for j in 0..=(d - i) {
            let k = d - i - j;
            if nvars == 2 && k != 0 {
                continue;
            }
            out.push(Mono([i, j, k]));
        }
    }
    out.sort();
    out
}

/// `dim_k` of the full space of degree-`d` forms in `nvars` variables:
/// `C(d + nvars − 1, nvars − 1)`.
pub fn full_dim(nvars: usize, d: u32) -> usize {
    match nvars {
        2 => d as usize + 1,
        3 => ((d as usize + 1) * (d as usize + 2)) / 2,
        _ => unreachable!(),
    }
}

/// Dimension of the degree-`d` piece of the ideal generated by the system:
/// the rank of the span of `{monomial · generator}`.
pub fn ideal_graded_dim(sys: &FormSystem, d: u32) -> usize {
    let cols = monomials(sys.nvars, d);
    let col_of: std::collections::BTreeMap<Mono, usize> =
        cols.iter().enumerate().map(|(i, m)| (*m, i)).collect();
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for g in &sys.gens {
        if g.degree() > d {
            continue;
        }
        for m in monomials(sys.nvars, d - g.degree()) {
            let shifted = TernaryForm::monomial(m.0, crate::rat::int(1)).mul(g);
            let mut row = vec![Rat::zero(); cols.len()];
            for (mono, c) in shifted.terms() {
                row[col_of[mono]] = c.clone();
            }
            rows.push(row);
        }
    }
    linalg::rank(rows)
}

use num_traits::Zero;

/// Is the common zero locus of the system empty in `ℙ^{n−1}` over the
/// algebraic closure?
///
/// Fewer generators than variables always cut out a nonempty locus, so the
/// answer is `false` immediately. Otherwise the ideal is saturated at the
/// Macaulay bound `t*` and cross-checked at `t*+1`.
pub fn has_no_projective_zero(sys: &FormSystem) -> Result<bool> {
    if sys.gens.is_empty() {
        return Err(Error::EmptySystem);
    }
    if sys.gens.len() < sys.nvars {
        return Ok(false);
    }
    let mut degrees: Vec<u32> = sys.gens.iter().map(|g| g.degree()).collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let t_star: u32 = degrees.iter().take(sys.nvars).sum::<u32>() - (sys.nvars as u32 - 1);
    let full_at = |d: u32| ideal_graded_dim(sys, d) == full_dim(sys.nvars, d);
    let a = full_at(t_star);
    let b = full_at(t_star + 1);
    if a != b {
        return Err(Error::Internal(format!(
            "ideal saturation disagrees between degrees {} and {}",
            t_star,
            t_star + 1
        )));
    }
    Ok(a)
}

//! Tensor calculus on `V^{⊗m}` for `dim V = 3`.
//!
//! Elements are sparse maps from words over the alphabet `{x, y, z}` to
//! rationals. The module carries the `S₃` slot action, the cyclic and full
//! symmetrizers `c` and `s`, the alternating element `w₀` and the scalar
//! `μ(w)` defined by `c(w) − s(w) = μ(w)·w₀`, cyclic partial derivatives,
//! the symmetrization/projection pair `hat`/`bar`, relation spaces, the
//! presentation matrix `M` with `xᵀMx = c(w)`, and standardness.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactpoly::{LinMap3, Mono, TernaryForm};
use crate::linalg;
use crate::rat::{int, rat, Rat};
use crate::{Error, Result};

/// Letters are `0 = x`, `1 = y`, `2 = z`; a word is a fixed-length string
/// of letters and the canonical word order is plain lexicographic.
pub type Word = Vec<u8>;

pub const LETTERS: [u8; 3] = [0, 1, 2];

pub fn word_name(w: &[u8]) -> String {
    w.iter().map(|&l| ["x", "y", "z"][l as usize]).collect()
}

/// Parse `"xyz"`-style words.
pub fn parse_word(s: &str) -> Result<Word> {
    s.chars()
        .map(|c| match c {
            'x' => Ok(0u8),
            'y' => Ok(1),
            'z' => Ok(2),
            _ => Err(Error::Input(format!("bad letter {c:?} in word {s:?}"))),
        })
        .collect()
}

/// Element of `V^{⊗m}`: sparse rational coefficients on length-`m` words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TensorN {
    m: usize,
    coeffs: BTreeMap<Word, Rat>,
}

impl TensorN {
    pub fn zero(m: usize) -> Self {
        TensorN {
            m,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn new(m: usize, terms: impl IntoIterator<Item = (Word, Rat)>) -> Result<Self> {
        let mut t = TensorN::zero(m);
        for (w, c) in terms {
            if w.len() != m {
                return Err(Error::Input(format!(
                    "word {} has length {}, expected {}",
                    word_name(&w),
                    w.len(),
                    m
                )));
            }
            if w.iter().any(|&l| l > 2) {
                return Err(Error::Input("letter out of range".into()));
            }
            t.add_word(w, c);
        }
        Ok(t)
    }

    /// Single word with coefficient 1.
    pub fn word(w: &[u8]) -> Self {
        let mut t = TensorN::zero(w.len());
        t.add_word(w.to_vec(), int(1));
        t
    }

    fn add_word(&mut self, w: Word, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(w.len(), self.m);
        let e = self.coeffs.entry(w).or_insert_with(Rat::zero);
        *e += c;
        if e.is_zero() {
            // remove the key we just zeroed
            let dead: Vec<Word> = self
                .coeffs
                .iter()
                .filter(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone())
                .collect();
            for k in dead {
                self.coeffs.remove(&k);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, w: &[u8]) -> Rat {
        self.coeffs.get(w).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Rat)> {
        self.coeffs.iter()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TensorN::zero(self.m);
        }
        TensorN {
            m: self.m,
            coeffs: self.coeffs.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.m, other.m, "adding tensors of unequal degree");
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_word(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    /// Tensor concatenation.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = TensorN::zero(self.m + other.m);
        for (w1, c1) in &self.coeffs {
            for (w2, c2) in &other.coeffs {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_word(w, c1 * c2);
            }
        }
        out
    }

    /// Strip a leading letter: the `ε` map sending `l·v ↦ v` and every other
    /// word to zero.
    pub fn strip_leading(&self, letter: u8) -> Self {
        let mut out = TensorN::zero(self.m.saturating_sub(1));
        for (w, c) in &self.coeffs {
            if w.first() == Some(&letter) {
                out.add_word(w[1..].to_vec(), c.clone());
            }
        }
        out
    }

    /// Rotate the last slot to the front.
    pub fn rotate(&self) -> Self {
        let mut out = TensorN::zero(self.m);
        for (w, c) in &self.coeffs {
            let mut v = Vec::with_capacity(self.m);
            v.push(*w.last().unwrap());
            v.extend_from_slice(&w[..self.m - 1]);
            out.add_word(v, c.clone());
        }
        out
    }

    /// Project to the symmetric algebra: the word `v₁…v_m` goes to the
    /// monomial `v₁⋯v_m`.
    pub fn bar(&self) -> TernaryForm {
        let mut out = TernaryForm::zero(self.m as u32);
        for (w, c) in &self.coeffs {
            let mut e = [0u32; 3];
            for &l in w {
                e[l as usize] += 1;
            }
            out = out.add(&TernaryForm::monomial(e, c.clone()));
        }
        out
    }

    /// Apply a linear change of variables to every slot.
    pub fn apply(&self, theta: &LinMap3) -> Self {
        let mut out = TensorN::zero(self.m);
        for (w, c) in &self.coeffs {
            // expand the product of images letter by letter
            let mut partial: Vec<(Word, Rat)> = vec![(Vec::new(), c.clone())];
            for &l in w {
                let mut next = Vec::with_capacity(partial.len() * 3);
                for (prefix, coeff) in &partial {
                    for j in 0..3u8 {
                        let entry = &theta.m[l as usize][j as usize];
                        if entry.is_zero() {
                            continue;
                        }
                        let mut p = prefix.clone();
                        p.push(j);
                        next.push((p, coeff * entry));
                    }
                }
                partial = next;
            }
            for (word, coeff) in partial {
                out.add_word(word, coeff);
            }
        }
        out
    }

    /// Stable bytes for seeding.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (w, c) in &self.coeffs {
            out.extend_from_slice(w);
            out.push(0xfd);
            out.extend_from_slice(c.numer().to_signed_bytes_le().as_slice());
            out.push(0xff);
            out.extend_from_slice(c.denom().to_signed_bytes_le().as_slice());
            out.push(0xfe);
        }
        out
    }
}

impl std::fmt::Display for TensorN {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.coeffs {
            use num_traits::Signed;
            let mag = crate::rat::abs(c);
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            use num_traits::One;
            if !mag.is_one() || w.is_empty() {
                write!(f, "{}·", crate::rat::format_rat(&mag))?;
            }
            write!(f, "{}", word_name(w))?;
        }
        Ok(())
    }
}

// --- S₃ action and the idempotents --------------------------------------

/// A permutation of the three tensor slots, stored as the images
/// `[σ(0), σ(1), σ(2)]`; slot `i` of the result holds slot `σ(i)` of the
/// argument.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perm(pub [usize; 3]);

impl Perm {
    pub const IDENTITY: Perm = Perm([0, 1, 2]);

    pub fn all() -> [Perm; 6] {
        [
            Perm([0, 1, 2]),
            Perm([0, 2, 1]),
            Perm([1, 0, 2]),
            Perm([1, 2, 0]),
            Perm([2, 0, 1]),
            Perm([2, 1, 0]),
        ]
    }

    pub fn sign(&self) -> i64 {
        let p = self.0;
        let mut inv = 0;
        for i in 0..3 {
            for j in (i + 1)..3 {
                if p[i] > p[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Group product for which `s3_act(σ, s3_act(τ, w)) = s3_act(σ·τ, w)`.
    pub fn then(&self, tau: &Perm) -> Perm {
        // acting by τ then σ reads slot τ(σ(i)) of the original
        Perm([tau.0[self.0[0]], tau.0[self.0[1]], tau.0[self.0[2]]])
    }
}

/// Permute the slots of a degree-3 tensor.
pub fn s3_act(sigma: &Perm, w: &TensorN) -> Result<TensorN> {
    if w.degree() != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            got: w.degree(),
        });
    }
    let mut out = TensorN::zero(3);
    for (word, c) in w.terms() {
        let permuted = vec![word[sigma.0[0]], word[sigma.0[1]], word[sigma.0[2]]];
        out.add_word(permuted, c.clone());
    }
    Ok(out)
}

/// Cyclic symmetrizer `c(w)`: the average of the rotations.
pub fn cyc(w: &TensorN) -> TensorN {
    let m = w.degree();
    if m == 0 {
        return w.clone();
    }
    let mut acc = w.clone();
    let mut rot = w.clone();
    for _ in 1..m {
        rot = rot.rotate();
        acc = acc.add(&rot);
    }
    acc.scale(&rat(1, m as i64))
}

/// Full symmetrizer `s(w)`: the average over all slot permutations.
pub fn sym(w: &TensorN) -> TensorN {
    assert!(w.degree() <= 3, "symmetrizer implemented for degree ≤ 3");
    if w.degree() < 2 {
        return w.clone();
    }
    if w.degree() == 2 {
        let mut swapped = TensorN::zero(2);
        for (word, c) in w.terms() {
            swapped.add_word(vec![word[1], word[0]], c.clone());
        }
        return w.add(&swapped).scale(&rat(1, 2));
    }
    let mut acc = TensorN::zero(3);
    for p in Perm::all() {
        acc = acc.add(&s3_act(&p, w).expect("degree 3"));
    }
    acc.scale(&rat(1, 6))
}

/// The alternating tensor: coefficient `+1/3` on the cyclic rotations of
/// `xyz` and `−1/3` on the rotations of `zyx`.
pub fn w0() -> TensorN {
    let third = rat(1, 3);
    let mut t = TensorN::zero(3);
    for (w, s) in [
        (vec![0u8, 1, 2], 1i64),
        (vec![1, 2, 0], 1),
        (vec![2, 0, 1], 1),
        (vec![2, 1, 0], -1),
        (vec![0, 2, 1], -1),
        (vec![1, 0, 2], -1),
    ] {
        t.add_word(w, &third * int(s));
    }
    t
}

/// The scalar `μ(w)` with `c(w) − s(w) = μ(w)·w₀`; linear in `w` and scaled
/// by `det θ` under a change of basis.
pub fn mu(w: &TensorN) -> Result<Rat> {
    if w.degree() != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            got: w.degree(),
        });
    }
    let diff = cyc(w).sub(&sym(w));
    let m = diff.coefficient(&[0, 1, 2]) * int(3);
    debug_assert_eq!(diff, w0().scale(&m), "c(w) − s(w) must be a multiple of w₀");
    Ok(m)
}

/// Lift a form to its symmetric tensor: the unique symmetric preimage of
/// `bar`. Each monomial spreads evenly over the distinct arrangements of
/// its letters.
pub fn hat(f: &TernaryForm) -> TensorN {
    let m = f.degree() as usize;
    let mut out = TensorN::zero(m);
    for (mono, c) in f.terms() {
        let letters = letters_of(mono);
        let arrangements = distinct_arrangements(&letters);
        let share = c / int(arrangements.len() as i64);
        for w in arrangements {
            out.add_word(w, share.clone());
        }
    }
    out
}

fn letters_of(m: &Mono) -> Vec<u8> {
    let mut v = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        for _ in 0..e {
            v.push(i as u8);
        }
    }
    v
}

fn distinct_arrangements(letters: &[u8]) -> Vec<Word> {
    if letters.is_empty() {
        return vec![Vec::new()];
    }
    let mut out: std::collections::BTreeSet<Word> = std::collections::BTreeSet::new();
    let mut sorted = letters.to_vec();
    sorted.sort_unstable();
    permute_into(&mut sorted, 0, &mut out);
    out.into_iter().collect()
}

fn permute_into(v: &mut Vec<u8>, k: usize, out: &mut std::collections::BTreeSet<Word>) {
    if k == v.len() {
        out.insert(v.clone());
        return;
    }
    let mut seen = [false; 3];
    for i in k..v.len() {
        let l = v[i] as usize;
        if seen[l] {
            continue;
        }
        seen[l] = true;
        v.swap(k, i);
        permute_into(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Cyclic partial derivative with respect to one letter: the sum of `v·u`
/// over all factorizations `w = u·letter·v`.
pub fn cyclic_partial(w: &TensorN, letter: u8) -> TensorN {
    let m = w.degree();
    assert!(m >= 1, "cyclic derivative needs degree ≥ 1");
    let mut out = TensorN::zero(m - 1);
    for (word, c) in w.terms() {
        for (pos, &l) in word.iter().enumerate() {
            if l == letter {
                let mut vu = Vec::with_capacity(m - 1);
                vu.extend_from_slice(&word[pos + 1..]);
                vu.extend_from_slice(&word[..pos]);
                out.add_word(vu, c.clone());
            }
        }
    }
    out
}

// --- relation spaces ------------------------------------------------------

/// Canonically echelonized subspace of `V ⊗ V`, so subspace equality is
/// plain equality of basis lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationSpace {
    basis: Vec<TensorN>,
}

const WORDS2: [[u8; 2]; 9] = [
    [0, 0],
    [0, 1],
    [0, 2],
    [1, 0],
    [1, 1],
    [1, 2],
    [2, 0],
    [2, 1],
    [2, 2],
];

fn tensor2_to_vec(t: &TensorN) -> Vec<Rat> {
    WORDS2.iter().map(|w| t.coefficient(w)).collect()
}

fn vec_to_tensor2(v: &[Rat]) -> TensorN {
    let mut t = TensorN::zero(2);
    for (i, w) in WORDS2.iter().enumerate() {
        t.add_word(w.to_vec(), v[i].clone());
    }
    t
}

impl RelationSpace {
    /// Echelonize a list of degree-2 tensors into the canonical basis.
    pub fn from_tensors(tensors: impl IntoIterator<Item = TensorN>) -> Result<Self> {
        let mut rows = Vec::new();
        for t in tensors {
            if t.degree() != 2 {
                return Err(Error::WrongDegree {
                    expected: 2,
                    got: t.degree(),
                });
            }
            rows.push(tensor2_to_vec(&t));
        }
        linalg::rref(&mut rows);
        Ok(RelationSpace {
            basis: rows.iter().map(|r| vec_to_tensor2(r)).collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[TensorN] {
        &self.basis
    }

    pub fn contains(&self, t: &TensorN) -> bool {
        if t.degree() != 2 {
            return false;
        }
        let mut rows: Vec<Vec<Rat>> = self.basis.iter().map(tensor2_to_vec).collect();
        let pivots = linalg::rref(&mut rows);
        linalg::in_span(&rows, &pivots, &tensor2_to_vec(t))
    }

    /// Are all basis relations symmetric tensors?
    pub fn is_symmetric(&self) -> bool {
        self.basis
            .iter()
            .all(|t| WORDS2.iter().all(|w| t.coefficient(w) == t.coefficient(&[w[1], w[0]])))
    }

    /// Basis relation viewed as the 3×3 coefficient matrix `r_{ij}` of
    /// `Σ r_{ij} xᵢ⊗xⱼ`.
    pub fn matrix_of(t: &TensorN) -> [[Rat; 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| t.coefficient(&[i as u8, j as u8])))
    }

    /// Transform every relation by `θ ⊗ θ` and re-echelonize.
    pub fn apply(&self, theta: &LinMap3) -> Self {
        RelationSpace::from_tensors(self.basis.iter().map(|t| t.apply(theta)))
            .expect("degree preserved")
    }
}

/// The relation space `R_w`: the span of the three cyclic partial
/// derivatives. Depends only on `c(w)`.
pub fn relation_space(w: &TensorN) -> Result<RelationSpace> {
    if w.degree() != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            got: w.degree(),
        });
    }
    RelationSpace::from_tensors(LETTERS.iter().map(|&l| cyclic_partial(w, l)))
}

/// Defining relations of the Poisson-bracket deformation attached to a
/// cubic `f` and scalar `λ`: the span of
/// `{yz−zy−λ·ĥ(f_x), zx−xz−λ·ĥ(f_y), xy−yx−λ·ĥ(f_z)}`.
/// Coincides with `relation_space(w₀ − λ·hat(f))`.
pub fn relations_afl(f: &TernaryForm, lambda: &Rat) -> Result<RelationSpace> {
    if !f.is_zero() && f.degree() != 3 {
        return Err(Error::Input(format!(
            "expected a cubic, got degree {}",
            f.degree()
        )));
    }
    use crate::exactpoly::Var;
    let commutator = |a: u8, b: u8| TensorN::word(&[a, b]).sub(&TensorN::word(&[b, a]));
    let rels = [
        (commutator(1, 2), f.partial(Var::X)),
        (commutator(2, 0), f.partial(Var::Y)),
        (commutator(0, 1), f.partial(Var::Z)),
    ];
    RelationSpace::from_tensors(
        rels.into_iter()
            .map(|(comm, df)| comm.sub(&hat(&df).scale(lambda))),
    )
}

// --- presentation matrix and standardness --------------------------------

/// 3×3 matrix of degree-1 tensors (linear forms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinFormMatrix {
    pub entries: [[TensorN; 3]; 3],
}

impl LinFormMatrix {
    /// `(M·x)_i = Σ_j M_{ij} ⊗ x_j`.
    pub fn times_vars(&self) -> [TensorN; 3] {
        std::array::from_fn(|i| {
            let mut acc = TensorN::zero(2);
            for j in 0..3 {
                acc = acc.add(&self.entries[i][j].concat(&TensorN::word(&[j as u8])));
            }
            acc
        })
    }

    /// `(xᵀ·M)_j = Σ_i x_i ⊗ M_{ij}`.
    pub fn vars_times(&self) -> [TensorN; 3] {
        std::array::from_fn(|j| {
            let mut acc = TensorN::zero(2);
            for i in 0..3 {
                acc = acc.add(&TensorN::word(&[i as u8]).concat(&self.entries[i][j]));
            }
            acc
        })
    }

    /// Read the entries in the symmetric algebra.
    pub fn to_form_matrix(&self) -> crate::exactpoly::FormMatrix {
        crate::exactpoly::FormMatrix {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].bar())),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        LinFormMatrix {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].scale(c))),
        }
    }
}

/// The unique matrix `M` of linear forms with `xᵀ·M·x = c(w)`; its rows
/// against `x` recover the cyclic partials: `M·x = (1/3)(∂ₓw, ∂ᵧw, ∂𝓏w)ᵀ`.
pub fn m_matrix(w: &TensorN) -> Result<LinFormMatrix> {
    if w.degree() != 3 {
        return Err(Error::WrongDegree {
            expected: 3,
            got: w.degree(),
        });
    }
    let c = cyc(w);
    let mut entries: [[TensorN; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| TensorN::zero(1)));
    for (word, coeff) in c.terms() {
        let (i, mid, j) = (word[0] as usize, word[1], word[2] as usize);
        entries[i][j] = entries[i][j].add(&TensorN::word(&[mid]).scale(coeff));
    }
    Ok(LinFormMatrix { entries })
}

/// Standardness: the relation space is 3-dimensional and the entries of
/// `xᵀ·M` span the same space as the entries of `M·x`.
pub fn is_standard(w: &TensorN) -> Result<bool> {
    let r = relation_space(w)?;
    if r.dim() != 3 {
        return Ok(false);
    }
    let m = m_matrix(w)?;
    let left = RelationSpace::from_tensors(m.vars_times())?;
    Ok(left == r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Var;

    fn xyz_word() -> TensorN {
        TensorN::word(&[0, 1, 2])
    }

    fn fermat() -> TernaryForm {
        TernaryForm::new(
            3,
            [([3, 0, 0], int(1)), ([0, 3, 0], int(1)), ([0, 0, 3], int(1))],
        )
        .unwrap()
    }

    #[test]
    fn s3_action_single_word_and_identity() {
        let w = xyz_word();
        let rotated = s3_act(&Perm([1, 2, 0]), &w).unwrap();
        assert_eq!(rotated, TensorN::word(&[1, 2, 0]));
        assert_eq!(s3_act(&Perm::IDENTITY, &w).unwrap(), w);
        assert!(s3_act(&Perm::IDENTITY, &TensorN::word(&[0, 1])).is_err());
    }

    #[test]
    fn s3_action_group_law() {
        let mut w = TensorN::zero(3);
        let mut k = 1i64;
        for a in 0..3u8 {
            for b in 0..3u8 {
                for c in 0..3u8 {
                    w.add_word(vec![a, b, c], rat(k, 7));
                    k += 3;
                }
            }
        }
        for sigma in Perm::all() {
            for tau in Perm::all() {
                let lhs = s3_act(&sigma, &s3_act(&tau, &w).unwrap()).unwrap();
                let rhs = s3_act(&sigma.then(&tau), &w).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn w0_facts() {
        let t = w0();
        assert_eq!(t.coefficient(&[0, 1, 2]), rat(1, 3));
        assert_eq!(cyc(&t), t);
        assert!(sym(&t).is_zero());
        for p in Perm::all() {
            let acted = s3_act(&p, &t).unwrap();
            assert_eq!(acted, t.scale(&int(p.sign())));
        }
    }

    #[test]
    fn idempotent_identities() {
        let w = TensorN::new(
            3,
            [
                (vec![0, 1, 2], rat(2, 3)),
                (vec![2, 2, 0], int(-1)),
                (vec![1, 1, 1], rat(5, 7)),
                (vec![0, 0, 1], int(4)),
            ],
        )
        .unwrap();
        let c = cyc(&w);
        let s = sym(&w);
        assert_eq!(cyc(&c), c);
        assert_eq!(sym(&s), s);
        assert_eq!(sym(&c), s);
        assert_eq!(cyc(&s), s);
    }

    #[test]
    fn mu_values() {
        assert_eq!(mu(&xyz_word()).unwrap(), rat(1, 2));
        assert_eq!(mu(&TensorN::word(&[2, 1, 0])).unwrap(), rat(-1, 2));
        assert_eq!(mu(&w0()).unwrap(), int(1));
        assert_eq!(mu(&hat(&fermat())).unwrap(), int(0));
        assert_eq!(mu(&hat(&xyz_word().bar())).unwrap(), int(0));
        assert_eq!(mu(&TensorN::word(&[0, 1, 0])).unwrap(), int(0));
    }

    #[test]
    fn mu_scales_by_determinant() {
        let theta = LinMap3::from_ints([[2, 1, 0], [0, 1, 1], [1, 0, 1]]);
        let w = TensorN::new(
            3,
            [
                (vec![0, 1, 2], int(1)),
                (vec![1, 0, 2], rat(1, 2)),
                (vec![2, 2, 2], int(3)),
            ],
        )
        .unwrap();
        let lhs = mu(&w.apply(&theta)).unwrap();
        assert_eq!(lhs, theta.det() * mu(&w).unwrap());
    }

    #[test]
    fn hat_and_bar() {
        // hat(x²y) spreads over the three arrangements
        let f = TernaryForm::monomial([2, 1, 0], int(1));
        let expected = TensorN::new(
            3,
            [
                (vec![0, 0, 1], rat(1, 3)),
                (vec![0, 1, 0], rat(1, 3)),
                (vec![1, 0, 0], rat(1, 3)),
            ],
        )
        .unwrap();
        assert_eq!(hat(&f), expected);

        // degree-2 hat agrees with ½ Σ xᵢ gᵢ
        let g = TernaryForm::monomial([1, 1, 0], int(1));
        let half = rat(1, 2);
        let expected2 = TensorN::new(2, [(vec![0, 1], half.clone()), (vec![1, 0], half)]).unwrap();
        assert_eq!(hat(&g), expected2);

        assert_eq!(hat(&fermat()).bar(), fermat());
        // hat(bar(w)) = sym(w)
        let w = TensorN::new(3, [(vec![0, 2, 1], int(2)), (vec![1, 1, 0], int(-3))]).unwrap();
        assert_eq!(hat(&w.bar()), sym(&w));
    }

    #[test]
    fn cyclic_partials() {
        assert_eq!(
            cyclic_partial(&w0(), 0),
            TensorN::word(&[1, 2]).sub(&TensorN::word(&[2, 1]))
        );
        let x3 = hat(&TernaryForm::monomial([3, 0, 0], int(1)));
        assert_eq!(cyclic_partial(&x3, 0), TensorN::word(&[0, 0]).scale(&int(3)));
        // ∂ᵢ(hat f) = hat(∂f/∂xᵢ)
        let f = fermat().add(&xyz_word().bar().scale(&int(2)));
        for (l, v) in [(0u8, Var::X), (1, Var::Y), (2, Var::Z)] {
            assert_eq!(cyclic_partial(&hat(&f), l), hat(&f.partial(v)));
        }
        // ∂ᵢ(w) = 3·ε_i(c(w))
        let w = TensorN::new(3, [(vec![0, 1, 2], int(1)), (vec![2, 0, 1], int(5))]).unwrap();
        for l in LETTERS {
            assert_eq!(
                cyclic_partial(&w, l),
                cyc(&w).strip_leading(l).scale(&int(3))
            );
        }
    }

    #[test]
    fn relation_spaces() {
        let r = relation_space(&w0()).unwrap();
        assert_eq!(r.dim(), 3);
        assert!(r.contains(&TensorN::word(&[1, 2]).sub(&TensorN::word(&[2, 1]))));
        let x3 = hat(&TernaryForm::monomial([3, 0, 0], int(1)));
        assert_eq!(relation_space(&x3).unwrap().dim(), 1);
        // equality with the cyclic representative
        let w = TensorN::new(3, [(vec![0, 1, 2], int(1)), (vec![1, 1, 0], int(2))]).unwrap();
        assert_eq!(
            relation_space(&w).unwrap(),
            relation_space(&cyc(&w)).unwrap()
        );
    }

    #[test]
    fn relation_space_equivariance() {
        let theta = LinMap3::from_ints([[1, 1, 0], [0, 1, 0], [2, 0, 1]]);
        let w = TensorN::new(3, [(vec![0, 1, 2], int(1)), (vec![0, 0, 0], rat(1, 3))]).unwrap();
        let lhs = relation_space(&w.apply(&theta)).unwrap();
        let rhs = relation_space(&w).unwrap().apply(&theta);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn afl_relations_match_superpotential_route() {
        let f = xyz_word().bar().add(&fermat().scale(&rat(1, 5)));
        for lambda in [int(0), int(1), rat(-3, 2)] {
            let direct = relations_afl(&f, &lambda).unwrap();
            let via_w = relation_space(&w0().sub(&hat(&f).scale(&lambda))).unwrap();
            assert_eq!(direct, via_w);
        }
        // λ = 0 or f = 0 gives the commutative polynomial ring
        assert_eq!(
            relations_afl(&TernaryForm::zero(3), &int(7)).unwrap(),
            relation_space(&w0()).unwrap()
        );
    }

    #[test]
    fn afl_scaling_law() {
        // relations only depend on λ·f
        let f = xyz_word().bar();
        let a = relations_afl(&f.scale(&int(2)), &int(3)).unwrap();
        let b = relations_afl(&f.scale(&int(3)), &int(2)).unwrap();
        let c = relations_afl(&f, &int(6)).unwrap();
        assert_eq!(a, b);
        assert_eq!(b, c);
        assert_ne!(a, relations_afl(&f, &int(5)).unwrap());
    }

    #[test]
    fn afl_basis_change() {
        // θ⊗θ carries the relations of (f, λ·detθ) onto those of (θf, λ)
        let theta = LinMap3::from_ints([[1, 2, 0], [0, 1, 1], [1, 0, 3]]);
        let f = xyz_word().bar().add(&fermat().scale(&rat(2, 7)));
        let lambda = rat(3, 4);
        let lhs = relations_afl(&f, &(&lambda * theta.det())).unwrap().apply(&theta);
        let rhs = relations_afl(&f.substitute(&theta), &lambda).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn dictionary_between_w_and_afl() {
        let w = TensorN::new(
            3,
            [
                (vec![0, 1, 2], int(2)),
                (vec![1, 0, 2], int(-1)),
                (vec![2, 2, 2], rat(1, 2)),
            ],
        )
        .unwrap();
        let m = mu(&w).unwrap();
        assert!(!m.is_zero());
        let nu = -m.recip();
        assert_eq!(
            relation_space(&w).unwrap(),
            relations_afl(&w.bar(), &nu).unwrap()
        );
    }

    #[test]
    fn symmetric_case_is_mu_zero() {
        let w = hat(&fermat());
        assert!(relation_space(&w).unwrap().is_symmetric());
        let v = w0();
        assert!(!relation_space(&v).unwrap().is_symmetric());
    }

    #[test]
    fn m_matrix_facts() {
        // m_matrix(w₀) is skew with ±(1/3)·variable entries
        let m = m_matrix(&w0()).unwrap();
        let third = rat(1, 3);
        assert_eq!(m.entries[0][1], TensorN::word(&[2]).scale(&-third.clone()));
        assert_eq!(m.entries[0][2], TensorN::word(&[1]).scale(&third));
        assert!(m.entries[0][0].is_zero());

        // symmetric case: m_matrix(hat(xyz)) = (1/6)∇²(xyz) with tensor entries
        let mh = m_matrix(&hat(&xyz_word().bar())).unwrap();
        let hess = xyz_word().bar().hessian_matrix();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(mh.entries[i][j].bar(), hess.entries[i][j].scale(&rat(1, 6)));
            }
        }

        // M·x = (1/3)·(∂w) and M·x = (xᵀM)ᵀ, on a random-ish w
        let w = TensorN::new(
            3,
            [
                (vec![0, 0, 1], int(5)),
                (vec![1, 2, 0], rat(-2, 3)),
                (vec![2, 2, 2], int(1)),
                (vec![0, 1, 2], rat(7, 4)),
            ],
        )
        .unwrap();
        let m = m_matrix(&w).unwrap();
        let mx = m.times_vars();
        let xm = m.vars_times();
        for (i, l) in LETTERS.iter().enumerate() {
            assert_eq!(mx[i], cyclic_partial(&w, *l).scale(&rat(1, 3)));
            assert_eq!(mx[i], xm[i]);
        }
        // xᵀ·M·x reassembles c(w)
        let mut total = TensorN::zero(3);
        for (i, row) in mx.iter().enumerate() {
            total = total.add(&TensorN::word(&[i as u8]).concat(row));
        }
        assert_eq!(total, cyc(&w));
    }

    #[test]
    fn standardness() {
        assert!(is_standard(&w0()).unwrap());
        let x3 = hat(&TernaryForm::monomial([3, 0, 0], int(1)));
        assert!(!is_standard(&x3).unwrap());
        let f = xyz_word().bar();
        for lambda in [int(1), int(2), rat(1, 2)] {
            let w = w0().sub(&hat(&f).scale(&lambda));
            assert!(is_standard(&w).unwrap());
        }
    }
}

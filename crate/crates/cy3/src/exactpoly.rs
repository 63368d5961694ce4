//! Homogeneous forms in three variables over exact rationals.
//!
//! [`TernaryForm`] is a sparse term map from exponent triples to nonzero
//! rationals, canonically ordered graded-lexicographically (x > y > z within
//! a degree). The module supplies partial derivatives, Hessians, linear
//! changes of variables, a multivariate gcd by primitive-part Euclid, and a
//! Sylvester resultant in a distinguished variable.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::rat::{int, Rat};
use crate::{Error, Result};

/// One of the three variables, in the fixed order x > y > z.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
    Z,
}

pub const VARS: [Var; 3] = [Var::X, Var::Y, Var::Z];

impl Var {
    pub fn idx(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }

    pub fn from_idx(i: usize) -> Var {
        VARS[i]
    }

    pub fn name(self) -> &'static str {
        ["x", "y", "z"][self.idx()]
    }
}

/// Exponent triple `(i, j, k)` for the monomial `x^i y^j z^k`.
///
/// Ordered by total degree, then lexicographically; the maximum in this
/// order is the leading monomial used for gcd normalization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mono(pub [u32; 3]);

impl Mono {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn divides(&self, other: &Mono) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn quotient(&self, other: &Mono) -> Mono {
        Mono([
            self.0[0] - other.0[0],
            self.0[1] - other.0[1],
            self.0[2] - other.0[2],
        ])
    }

    fn times(&self, other: &Mono) -> Mono {
        Mono([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.degree(), self.0).cmp(&(other.degree(), other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Homogeneous polynomial in `x, y, z` with exact rational coefficients.
///
/// Zero coefficients are never stored; two forms are equal exactly when
/// their term maps are equal. A zero form still carries the degree of the
/// space it lives in, which equality ignores.
#[derive(Debug, Clone)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Mono, Rat>,
}

impl PartialEq for TernaryForm {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for TernaryForm {}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        TernaryForm {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Build from `(exponents, coefficient)` pairs; zero coefficients are
    /// dropped, repeated monomials accumulate.
    pub fn new(degree: u32, terms: impl IntoIterator<Item = ([u32; 3], Rat)>) -> Result<Self> {
        let mut f = TernaryForm::zero(degree);
        for (e, c) in terms {
            let m = Mono(e);
            if m.degree() != degree {
                return Err(Error::Input(format!(
                    "monomial {:?} has degree {}, expected {}",
                    e,
                    m.degree(),
                    degree
                )));
            }
            f.add_term(m, c);
        }
        Ok(f)
    }

    /// Single monomial `c · x^i y^j z^k`.
    pub fn monomial(e: [u32; 3], c: Rat) -> Self {
        let m = Mono(e);
        let mut f = TernaryForm::zero(m.degree());
        f.add_term(m, c);
        f
    }

    /// The variable itself as a degree-1 form.
    pub fn var(v: Var) -> Self {
        let mut e = [0u32; 3];
        e[v.idx()] = 1;
        TernaryForm::monomial(e, int(1))
    }

    pub fn one() -> Self {
        TernaryForm::monomial([0, 0, 0], int(1))
    }

    fn add_term(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(m.degree(), self.degree);
        let entry = self.terms.entry(m).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, e: [u32; 3]) -> Rat {
        self.terms.get(&Mono(e)).cloned().unwrap_or_else(Rat::zero)
    }

    /// Leading term in the graded-lex order.
    pub fn lead(&self) -> Option<(&Mono, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return TernaryForm::zero(self.degree);
        }
        TernaryForm {
            degree: self.degree,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&int(-1))
    }

    pub fn add(&self, other: &Self) -> Self {
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = TernaryForm {
            degree,
            terms: self.terms.clone(),
        };
        if !(self.is_zero() || other.is_zero()) {
            assert_eq!(self.degree, other.degree, "adding forms of unequal degree");
        }
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = TernaryForm::zero(self.degree + other.degree);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = TernaryForm::one();
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, p: &[Rat; 3]) -> Rat {
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    t *= &p[i];
                }
            }
            total += t;
        }
        total
    }

    /// `∂f/∂v`. Degree drops by one; the derivative of a degree-0 form is 0.
    pub fn partial(&self, v: Var) -> Self {
        let mut out = TernaryForm::zero(self.degree.saturating_sub(1));
        for (m, c) in &self.terms {
            let e = m.0[v.idx()];
            if e == 0 {
                continue;
            }
            let mut e2 = m.0;
            e2[v.idx()] -= 1;
            out.add_term(Mono(e2), c * int(e as i64));
        }
        out
    }

    /// Matrix of second partials.
    pub fn hessian_matrix(&self) -> FormMatrix {
        let grad: Vec<TernaryForm> = VARS.iter().map(|&v| self.partial(v)).collect();
        let entries = std::array::from_fn(|i| std::array::from_fn(|j| grad[i].partial(VARS[j])));
        FormMatrix { entries }
    }

    /// Hessian `H(f) = det ∇²(f)`.
    pub fn hessian_det(&self) -> Self {
        self.hessian_matrix().det()
    }

    /// `f(θx, θy, θz)`: substitute each variable by its image under `θ`.
    /// An algebra homomorphism in `f`; preserves degree.
    pub fn substitute(&self, theta: &LinMap3) -> Self {
        let images: Vec<TernaryForm> = (0..3)
            .map(|i| {
                let mut img = TernaryForm::zero(1);
                for j in 0..3 {
                    img = img.add(&TernaryForm::var(Var::from_idx(j)).scale(&theta.m[i][j]));
                }
                img
            })
            .collect();
        let mut out = TernaryForm::zero(self.degree);
        for (m, c) in &self.terms {
            let mut t = TernaryForm::one().scale(c);
            for (i, &e) in m.0.iter().enumerate() {
                t = t.mul(&images[i].pow(e));
            }
            out = out.add(&t);
        }
        out
    }

    /// Exact division: `Some(q)` with `self = q·d` when `d` divides exactly.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero form");
        if self.is_zero() {
            return Some(TernaryForm::zero(self.degree.saturating_sub(d.degree)));
        }
        if d.degree > self.degree {
            return None;
        }
        let mut rem = self.clone();
        let mut quot = TernaryForm::zero(self.degree - d.degree);
        let (dm, dc) = {
            let (m, c) = d.lead().unwrap();
            (*m, c.clone())
        };
        while let Some((rm, rc)) = rem.lead() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = rm.quotient(&dm);
            let qc = rc / &dc;
            let t = TernaryForm::monomial(qm.0, qc);
            quot = quot.add(&t);
            rem = rem.sub(&t.mul(d));
        }
        Some(quot)
    }

    /// Coefficients of the powers of `v`: entry `k` is the form (in the
    /// other two variables) multiplying `v^k`.
    pub fn coeffs_in(&self, v: Var) -> Vec<TernaryForm> {
        let dv = self
            .terms
            .keys()
            .map(|m| m.0[v.idx()])
            .max()
            .unwrap_or(0) as usize;
        let mut out: Vec<TernaryForm> = (0..=dv)
            .map(|k| TernaryForm::zero(self.degree.saturating_sub(k as u32)))
            .collect();
        for (m, c) in &self.terms {
            let k = m.0[v.idx()] as usize;
            let mut e = m.0;
            e[v.idx()] = 0;
            out[k].add_term(Mono(e), c.clone());
        }
        out
    }

    /// Degree in a single variable (0 for the zero form).
    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.0[v.idx()]).max().unwrap_or(0)
    }

    /// Normalize so the graded-lex leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Stable bytes for hashing/seeding.
    pub fn canonical_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            for e in m.0 {
                out.extend_from_slice(&e.to_le_bytes());
            }
            out.extend_from_slice(c.numer().to_signed_bytes_le().as_slice());
            out.push(0xff);
            out.extend_from_slice(c.denom().to_signed_bytes_le().as_slice());
            out.push(0xfe);
        }
        out
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
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
            let mut printed_coeff = false;
            if !mag.is_one() || m.degree() == 0 {
                write!(f, "{}", crate::rat::format_rat(&mag))?;
                printed_coeff = true;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if printed_coeff {
                    write!(f, "*")?;
                }
                printed_coeff = true;
                write!(f, "{}", Var::from_idx(i).name())?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

/// A 3×3 rational matrix acting on the ordered variables `(x, y, z)`:
/// row `i` holds the coefficients of the image of variable `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap3 {
    pub m: [[Rat; 3]; 3],
}

impl LinMap3 {
    pub fn new(m: [[Rat; 3]; 3]) -> Self {
        LinMap3 { m }
    }

    pub fn identity() -> Self {
        LinMap3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| if i == j { int(1) } else { int(0) })),
        }
    }

    pub fn from_ints(m: [[i64; 3]; 3]) -> Self {
        LinMap3 {
            m: std::array::from_fn(|i| std::array::from_fn(|j| int(m[i][j]))),
        }
    }

    pub fn det(&self) -> Rat {
        let m = &self.m;
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    pub fn is_invertible(&self) -> bool {
        !self.det().is_zero()
    }
}

/// 3×3 matrix of forms, all entries of equal degree (zero entries allowed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    pub entries: [[TernaryForm; 3]; 3],
}

impl FormMatrix {
    pub fn new(entries: [[TernaryForm; 3]; 3]) -> Result<Self> {
        let mut degree = None;
        for row in &entries {
            for e in row {
                if !e.is_zero() {
                    match degree {
                        None => degree = Some(e.degree()),
                        Some(d) if d == e.degree() => {}
                        Some(d) => {
                            return Err(Error::Input(format!(
                                "matrix entries of degree {} and {}",
                                d,
                                e.degree()
                            )))
                        }
                    }
                }
            }
        }
        Ok(FormMatrix { entries })
    }

    pub fn det(&self) -> TernaryForm {
        let e = &self.entries;
        let minor = |r0: usize, r1: usize, c0: usize, c1: usize| {
            e[r0][c0].mul(&e[r1][c1]).sub(&e[r0][c1].mul(&e[r1][c0]))
        };
        e[0][0]
            .mul(&minor(1, 2, 1, 2))
            .sub(&e[0][1].mul(&minor(1, 2, 0, 2)))
            .add(&e[0][2].mul(&minor(1, 2, 0, 1)))
    }

    /// The nine 2×2 minors, row-deleted index major.
    pub fn minors2(&self) -> Vec<TernaryForm> {
        let e = &self.entries;
        let mut out = Vec::with_capacity(9);
        for dr in 0..3 {
            for dc in 0..3 {
                let rs: Vec<usize> = (0..3).filter(|&r| r != dr).collect();
                let cs: Vec<usize> = (0..3).filter(|&c| c != dc).collect();
                out.push(
                    e[rs[0]][cs[0]]
                        .mul(&e[rs[1]][cs[1]])
                        .sub(&e[rs[0]][cs[1]].mul(&e[rs[1]][cs[0]])),
                );
            }
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        FormMatrix {
            entries: std::array::from_fn(|i| std::array::from_fn(|j| self.entries[i][j].scale(c))),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        FormMatrix {
            entries: std::array::from_fn(|i| {
                std::array::from_fn(|j| self.entries[i][j].add(&other.entries[i][j]))
            }),
        }
    }
}

/// Coefficient of λ in `det(λA + B)` for symmetric `A` and skew `B`:
/// the quadratic form in the off-diagonal entries of `B` applied to `A`.
/// Together with `det(λA+B) = det(A)·λ³ + c·λ` this pins the whole
/// determinant of a symmetric-plus-skew pencil of odd size.
pub fn sym_skew_lambda_coefficient(a: &FormMatrix, b: &FormMatrix) -> TernaryForm {
    let ae = &a.entries;
    let be = &b.entries;
    let b23 = &be[1][2];
    let b31 = &be[2][0];
    let b12 = &be[0][1];
    let two = int(2);
    b23.mul(b23)
        .mul(&ae[0][0])
        .add(&b31.mul(b23).mul(&ae[0][1]).scale(&two))
        .add(&b12.mul(b23).mul(&ae[0][2]).scale(&two))
        .add(&b31.mul(b31).mul(&ae[1][1]))
        .add(&b12.mul(b31).mul(&ae[1][2]).scale(&two))
        .add(&b12.mul(b12).mul(&ae[2][2]))
}

// --- gcd and resultant ---------------------------------------------------

/// Greatest common divisor of two forms over ℚ, normalized so the
/// graded-lex leading coefficient is 1. Errors when both inputs are zero.
pub fn form_gcd(f: &TernaryForm, g: &TernaryForm) -> Result<TernaryForm> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::GcdUndefined);
    }
    if f.is_zero() {
        return Ok(g.monic());
    }
    if g.is_zero() {
        return Ok(f.monic());
    }
    Ok(gcd_rec(f, g, &VARS).monic())
}

/// Iterated gcd of several forms (zero entries participate harmlessly).
pub fn form_gcd_many(forms: &[TernaryForm]) -> Result<TernaryForm> {
    let mut nonzero = forms.iter().filter(|f| !f.is_zero());
    let Some(first) = nonzero.next() else {
        return Err(Error::GcdUndefined);
    };
    let mut acc = first.monic();
    for f in nonzero {
        acc = form_gcd(&acc, f)?;
    }
    Ok(acc)
}

/// Primitive-part Euclid on the leading variable of `vars`, recursing into
/// the remaining variables for contents. Inputs nonzero.
fn gcd_rec(f: &TernaryForm, g: &TernaryForm, vars: &[Var]) -> TernaryForm {
    debug_assert!(!f.is_zero() && !g.is_zero());
    let Some((&v, rest)) = vars.split_first() else {
        // No variables left: nonzero constants.
        return TernaryForm::one();
    };
    if f.degree_in(v) == 0 && g.degree_in(v) == 0 {
        return gcd_rec(f, g, rest);
    }
    let (cont_f, pp_f) = content_split(f, v, rest);
    let (cont_g, pp_g) = content_split(g, v, rest);
    let cont = gcd_rec(&cont_f, &cont_g, rest);

    let mut a = pp_f;
    let mut b = pp_g;
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            content_split(&r, v, rest).1
        };
    }
    cont.mul(&a)
}

/// Split into (content, primitive part) with respect to `v`: content is the
/// gcd of the `v`-power coefficients, a form in the remaining variables.
fn content_split(f: &TernaryForm, v: Var, rest: &[Var]) -> (TernaryForm, TernaryForm) {
    let coeffs = f.coeffs_in(v);
    let mut cont: Option<TernaryForm> = None;
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        cont = Some(match cont {
            None => c.monic(),
            Some(acc) => gcd_rec(&acc, c, rest).monic(),
        });
    }
    let cont = cont.expect("content of a nonzero form");
    let pp = f.div_exact(&cont).expect("content divides");
    (cont, pp)
}

/// Pseudo-remainder of `a` by `b` in the variable `v`.
fn pseudo_rem(a: &TernaryForm, b: &TernaryForm, v: Var) -> TernaryForm {
    let db = b.degree_in(v);
    let lc_b = b.coeffs_in(v)[db as usize].clone();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db && r.coeffs_in(v).len() as u32 > db {
        let dr = r.degree_in(v);
        let coeffs = r.coeffs_in(v);
        let lc_r = coeffs[dr as usize].clone();
        if lc_r.is_zero() {
            break;
        }
        if dr < db {
            break;
        }
        // r := lc_b·r − lc_r·v^(dr−db)·b
        let mut shift_e = [0u32; 3];
        shift_e[v.idx()] = dr - db;
        let shift = TernaryForm::monomial(shift_e, int(1));
        r = r.mul(&lc_b).sub(&lc_r.mul(&shift).mul(b));
    }
    r
}

/// Sylvester resultant of `p` and `q` with respect to `axis`; a form in the
/// remaining two variables. Vanishes exactly when `p` and `q` share a root
/// over the algebraic closure with the `axis` coordinate eliminated.
pub fn eliminate(p: &TernaryForm, q: &TernaryForm, axis: Var) -> Result<TernaryForm> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::Input("resultant of a zero form".into()));
    }
    let pc = p.coeffs_in(axis);
    let qc = q.coeffs_in(axis);
    let dp = pc.len() - 1;
    let dq = qc.len() - 1;
    if dp == 0 && dq == 0 {
        return Ok(TernaryForm::one());
    }
    if dp == 0 {
        return Ok(pc[0].pow(dq as u32));
    }
    if dq == 0 {
        return Ok(qc[0].pow(dp as u32));
    }
    let n = dp + dq;
    let mut rows: Vec<Vec<TernaryForm>> = Vec::with_capacity(n);
    for i in 0..dq {
        let mut row = vec![TernaryForm::zero(0); n];
        for (k, c) in pc.iter().enumerate() {
            row[i + dp - k] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..dp {
        let mut row = vec![TernaryForm::zero(0); n];
        for (k, c) in qc.iter().enumerate() {
            row[i + dq - k] = c.clone();
        }
        rows.push(row);
    }
    Ok(poly_det(&rows))
}

/// Determinant of a small matrix of forms by expansion along the first row.
fn poly_det(m: &[Vec<TernaryForm>]) -> TernaryForm {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Option<TernaryForm> = None;
    for (j, e) in m[0].iter().enumerate() {
        if e.is_zero() {
            continue;
        }
        let sub: Vec<Vec<TernaryForm>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let mut t = e.mul(&poly_det(&sub));
        if j % 2 == 1 {
            t = t.neg();
        }
        acc = Some(match acc {
            None => t,
            Some(a) => a.add(&t),
        });
    }
    acc.unwrap_or_else(|| TernaryForm::zero(0))
}

/// `Some(c)` with `f = c·g` when `f` is a scalar multiple of `g`; in
/// particular `f = 0, g ≠ 0` gives `c = 0`. `None` when no such scalar
/// exists (including `f ≠ 0, g = 0`).
pub fn is_scalar_multiple(f: &TernaryForm, g: &TernaryForm) -> Option<Rat> {
    if g.is_zero() {
        return f.is_zero().then(Rat::zero);
    }
    if f.is_zero() {
        return Some(Rat::zero());
    }
    let (gm, gc) = g.lead().unwrap();
    let fc = f.coefficient(gm.0);
    if fc.is_zero() {
        return None;
    }
    let c = fc / gc;
    (f == &g.scale(&c)).then_some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    pub fn x3() -> TernaryForm {
        TernaryForm::monomial([3, 0, 0], int(1))
    }

    pub fn xyz() -> TernaryForm {
        TernaryForm::monomial([1, 1, 1], int(1))
    }

    #[test]
    fn partial_power_rule() {
        let f = x3();
        assert_eq!(
            f.partial(Var::X),
            TernaryForm::monomial([2, 0, 0], int(3))
        );
        assert_eq!(xyz().partial(Var::Z), TernaryForm::monomial([1, 1, 0], int(1)));
    }

    #[test]
    fn euler_identity_degree_three() {
        // Σ xᵢ ∂ᵢ f = 3f for f = xyz + x³/3
        let f = xyz().add(&x3().scale(&rat(1, 3)));
        let mut acc = TernaryForm::zero(3);
        for v in VARS {
            acc = acc.add(&TernaryForm::var(v).mul(&f.partial(v)));
        }
        assert_eq!(acc, f.scale(&int(3)));
    }

    #[test]
    fn hessian_of_triangle_plus_cone() {
        // H(xyz + g) = 2(xyz − 3g) for g ∈ {0, x³/3, (x³+y³)/3}
        let gs = [
            TernaryForm::zero(3),
            x3().scale(&rat(1, 3)),
            x3().add(&TernaryForm::monomial([0, 3, 0], int(1))).scale(&rat(1, 3)),
        ];
        for g in gs {
            let f = xyz().add(&g);
            let expected = xyz().sub(&g.scale(&int(3))).scale(&int(2));
            assert_eq!(f.hessian_det(), expected);
        }
    }

    #[test]
    fn hessian_degenerate_and_fermat() {
        assert!(x3().hessian_det().is_zero());
        let fermat = TernaryForm::new(
            3,
            [([3, 0, 0], int(1)), ([0, 3, 0], int(1)), ([0, 0, 3], int(1))],
        )
        .unwrap();
        // det diag(6x, 6y, 6z) = 216 xyz
        assert_eq!(fermat.hessian_det(), xyz().scale(&int(216)));
    }

    #[test]
    fn substitute_swap_and_identity() {
        let f = TernaryForm::monomial([2, 0, 0], int(1));
        let swap = LinMap3::from_ints([[0, 1, 0], [1, 0, 0], [0, 0, 1]]);
        assert_eq!(f.substitute(&swap), TernaryForm::monomial([0, 2, 0], int(1)));
        assert_eq!(f.substitute(&LinMap3::identity()), f);
    }

    #[test]
    fn hessian_covariance_spot() {
        let theta = LinMap3::from_ints([[1, 2, 0], [0, 1, 1], [1, 0, 3]]);
        let f = xyz().add(&x3().scale(&rat(2, 5)));
        let lhs = f.substitute(&theta).hessian_det();
        let d = theta.det();
        let rhs = f.hessian_det().substitute(&theta).scale(&(&d * &d));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn gcd_basics() {
        let a = TernaryForm::monomial([2, 1, 0], int(1)); // x²y
        let b = x3();
        assert_eq!(form_gcd(&a, &b).unwrap(), TernaryForm::monomial([2, 0, 0], int(1)));
        let c = TernaryForm::monomial([2, 0, 0], int(3));
        let d = TernaryForm::monomial([0, 2, 0], int(3));
        assert_eq!(form_gcd(&c, &d).unwrap(), TernaryForm::one());
        assert!(form_gcd(&TernaryForm::zero(2), &TernaryForm::zero(2)).is_err());
    }

    #[test]
    fn gcd_of_partials_of_x2y() {
        let f = TernaryForm::monomial([2, 1, 0], int(1));
        let parts: Vec<TernaryForm> = VARS.iter().map(|&v| f.partial(v)).collect();
        let g = form_gcd_many(&parts).unwrap();
        assert_eq!(g, TernaryForm::var(Var::X));
    }

    #[test]
    fn gcd_with_planted_factor() {
        // (x+y+2z)·(x²−yz) vs (x+y+2z)·(y²+xz): gcd = the planted line
        let d = TernaryForm::new(1, [([1, 0, 0], int(1)), ([0, 1, 0], int(1)), ([0, 0, 1], int(2))])
            .unwrap();
        let f = TernaryForm::new(2, [([2, 0, 0], int(1)), ([0, 1, 1], int(-1))]).unwrap();
        let g = TernaryForm::new(2, [([0, 2, 0], int(1)), ([1, 0, 1], int(1))]).unwrap();
        let got = form_gcd(&d.mul(&f), &d.mul(&g)).unwrap();
        assert_eq!(got, d.monic());
    }

    #[test]
    fn eliminate_examples() {
        let x_minus_y =
            TernaryForm::new(1, [([1, 0, 0], int(1)), ([0, 1, 0], int(-1))]).unwrap();
        let x_minus_z =
            TernaryForm::new(1, [([1, 0, 0], int(1)), ([0, 0, 1], int(-1))]).unwrap();
        let r = eliminate(&x_minus_y, &x_minus_z, Var::X).unwrap();
        let z_minus_y =
            TernaryForm::new(1, [([0, 0, 1], int(1)), ([0, 1, 0], int(-1))]).unwrap();
        assert!(r == z_minus_y || r == z_minus_y.neg());

        // common factor x forces a zero resultant
        let f = TernaryForm::monomial([1, 1, 1], int(1));
        let l = TernaryForm::var(Var::X);
        assert!(eliminate(&f, &l, Var::X).unwrap().is_zero());

        // Res_x(x²−yz, x) = −yz up to sign
        let p = TernaryForm::new(2, [([2, 0, 0], int(1)), ([0, 1, 1], int(-1))]).unwrap();
        let r = eliminate(&p, &l, Var::X).unwrap();
        let yz = TernaryForm::monomial([0, 1, 1], int(1));
        assert!(r == yz.neg() || r == yz);
    }

    #[test]
    fn eliminate_shared_nonconstant_factor_vanishes() {
        let r = TernaryForm::new(1, [([1, 0, 0], int(1)), ([0, 1, 0], int(3))]).unwrap();
        let p = TernaryForm::new(1, [([1, 0, 0], int(2)), ([0, 0, 1], int(1))]).unwrap();
        let q = TernaryForm::new(1, [([0, 1, 0], int(1)), ([0, 0, 1], int(-2))]).unwrap();
        assert!(eliminate(&p.mul(&r), &q.mul(&r), Var::X).unwrap().is_zero());
    }

    #[test]
    fn scalar_multiple_detection() {
        assert_eq!(
            is_scalar_multiple(&xyz().scale(&int(2)), &xyz()),
            Some(int(2))
        );
        assert_eq!(is_scalar_multiple(&xyz().hessian_det(), &xyz()), Some(int(2)));
        let fermat = TernaryForm::new(
            3,
            [([3, 0, 0], int(1)), ([0, 3, 0], int(1)), ([0, 0, 3], int(1))],
        )
        .unwrap();
        assert_eq!(is_scalar_multiple(&xyz().scale(&int(216)), &fermat), None);
        assert_eq!(is_scalar_multiple(&TernaryForm::zero(3), &xyz()), Some(int(0)));
        assert_eq!(is_scalar_multiple(&xyz(), &TernaryForm::zero(3)), None);
    }

    #[test]
    fn div_exact_and_pow() {
        let f = xyz().add(&x3());
        let g = f.mul(&f);
        assert_eq!(g.div_exact(&f), Some(f.clone()));
        assert_eq!(f.pow(2), g);
        let h = TernaryForm::var(Var::Y);
        assert_eq!(g.div_exact(&h), None);
    }

    #[test]
    fn form_matrix_det_and_minors() {
        let f = xyz();
        let h = f.hessian_matrix();
        assert_eq!(h.det(), f.scale(&int(2)));
        assert_eq!(h.minors2().len(), 9);
    }

    #[test]
    fn display_is_readable() {
        let f = xyz().scale(&int(-2)).add(&x3().scale(&rat(1, 3)));
        assert_eq!(format!("{}", f), "1/3*x^3 - 2*x*y*z");
        assert_eq!(format!("{}", TernaryForm::zero(3)), "0");
    }
}

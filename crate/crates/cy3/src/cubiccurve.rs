//! Classification of plane cubic divisors by exact rational tests.
//!
//! A ternary cubic `f` cuts out one of ten divisor classes in `ℙ²`. The
//! classifier below needs no root finding: the cone cases are separated by
//! the vanishing of the Hessian and the gcd degree of the partials, the
//! smooth case by projective emptiness of the partials (psolve), and the
//! remaining singular cases by the Hessian of the Hessian, proportionality
//! of `H(f)` to `f`, and the existence of a linear factor.
//!
//! The degree-4 and degree-6 invariants `S` and `T` of the cubic's ten
//! coefficients are not transcribed from the classical literature. They are
//! recomputed from scratch: inside the space of coefficient polynomials of
//! the right degree and torus weight, the joint kernel of the nilpotent
//! Lie-algebra derivations is one-dimensional and spans exactly the
//! invariants of that degree. The kernel is found by a single-prime modular
//! elimination, reconstructed to rationals, and then confirmed exactly by
//! applying all six derivations over ℚ. The `j`-invariant normalization
//! `j = c₁S³ / (c₂S³ + c₃T²)` is calibrated against the diagonal pencil
//! `x³+y³+z³+3λxyz`, for which `j = (3λ(8−λ³)/(1+λ³))³`, and the
//! calibration is itself verifiable as a polynomial identity in `λ`
//! ([`hesse_calibration_identity_holds`]).

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::Zero;

use crate::exactpoly::{form_gcd_many, is_scalar_multiple, LinMap3, Mono, TernaryForm, VARS};
use crate::linalg;
use crate::psolve::{has_no_projective_zero, FormSystem};
use crate::rat::{int, rat, Rat};
use crate::{Error, Result};

/// The ten divisor classes of a ternary cubic (including the empty form,
/// whose zero locus is the whole plane). `Smooth` carries the exact
/// `j`-invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CubicClass {
    WholePlane,
    TripleLine,
    DoubleLinePlusLine,
    ThreeConcurrentLines,
    ConicPlusTangent,
    Cusp,
    Triangle,
    ConicPlusChord,
    Nodal,
    Smooth(Rat),
}

impl CubicClass {
    pub fn is_smooth(&self) -> bool {
        matches!(self, CubicClass::Smooth(_))
    }

    /// Does the class sit in the `H²(f) = 0` family?
    pub fn hessian_squared_vanishes(&self) -> bool {
        matches!(
            self,
            CubicClass::WholePlane
                | CubicClass::TripleLine
                | CubicClass::DoubleLinePlusLine
                | CubicClass::ThreeConcurrentLines
                | CubicClass::ConicPlusTangent
                | CubicClass::Cusp
        )
    }

    pub fn name(&self) -> String {
        match self {
            CubicClass::WholePlane => "whole plane".into(),
            CubicClass::TripleLine => "triple line".into(),
            CubicClass::DoubleLinePlusLine => "double line + line".into(),
            CubicClass::ThreeConcurrentLines => "three concurrent lines".into(),
            CubicClass::ConicPlusTangent => "conic + tangent line".into(),
            CubicClass::Cusp => "cuspidal cubic".into(),
            CubicClass::Triangle => "triangle".into(),
            CubicClass::ConicPlusChord => "conic + chord".into(),
            CubicClass::Nodal => "nodal cubic".into(),
            CubicClass::Smooth(j) => format!("smooth cubic, j = {}", crate::rat::format_rat(j)),
        }
    }
}

/// The two basic invariants of a cubic's coefficients and the calibrated
/// discriminant `Δ = c₂S³ + c₃T²`, which vanishes exactly on singular
/// cubics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantPair {
    pub s: Rat,
    pub t: Rat,
    pub delta: Rat,
}

// --- coefficient polynomials ---------------------------------------------

/// The ten degree-3 exponent triples in canonical order.
fn cubic_monomials() -> &'static Vec<Mono> {
    static CELL: OnceLock<Vec<Mono>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut v = Vec::new();
        for i in 0..=3u32 {
            for j in 0..=(3 - i) {
                v.push(Mono([i, j, 3 - i - j]));
            }
        }
        v.sort();
        v
    })
}

fn monomial_index(m: &Mono) -> usize {
    cubic_monomials()
        .iter()
        .position(|x| x == m)
        .expect("cubic monomial")
}

/// Sparse polynomial in the ten cubic coefficients `a_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct CoeffPoly {
    terms: BTreeMap<[u8; 10], Rat>,
}

impl CoeffPoly {
    fn zero() -> Self {
        CoeffPoly {
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, e: [u8; 10], c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn eval(&self, a: &[Rat; 10]) -> Rat {
        let mut total = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t *= &a[i];
                }
            }
            total += t;
        }
        total
    }
}

/// Coefficient vector of a cubic in the canonical monomial order.
fn coeff_vector(f: &TernaryForm) -> [Rat; 10] {
    let mut a: [Rat; 10] = std::array::from_fn(|_| Rat::zero());
    for (m, c) in f.terms() {
        a[monomial_index(m)] = c.clone();
    }
    a
}

/// Derivation transitions for the coefficient flow of the substitution
/// `x_u ← x_u + t·x_v`: entries `(r, s, factor)` meaning `∂/∂a_r` picks up
/// `factor · a_s`.
fn transitions(u: usize, v: usize) -> Vec<(usize, usize, i64)> {
    let monos = cubic_monomials();
    let mut out = Vec::new();
    for (r, m) in monos.iter().enumerate() {
        if m.0[v] == 0 {
            continue;
        }
        let mut src = m.0;
        src[u] += 1;
        src[v] -= 1;
        let s = monomial_index(&Mono(src));
        out.push((r, s, (m.0[u] + 1) as i64));
    }
    out
}

/// Apply the derivation attached to `(u, v)` to a coefficient polynomial,
/// exactly.
fn apply_derivation(p: &CoeffPoly, u: usize, v: usize) -> CoeffPoly {
    let trans = transitions(u, v);
    let mut out = CoeffPoly::zero();
    for (e, c) in &p.terms {
        for &(r, s, factor) in &trans {
            if e[r] == 0 {
                continue;
            }
            let mut f = *e;
            f[r] -= 1;
            f[s] += 1;
            out.add_term(f, c * int(e[r] as i64 * factor));
        }
    }
    out
}

/// Monomials of total degree `delta` in the ten coefficients whose torus
/// weight is balanced `(delta, delta, delta)`.
fn balanced_basis(delta: u8) -> Vec<[u8; 10]> {
    fn rec(
        monos: &[Mono],
        idx: usize,
        remaining: u8,
        weight: [i32; 3],
        delta: u8,
        current: &mut [u8; 10],
        out: &mut Vec<[u8; 10]>,
    ) {
        if idx == monos.len() {
            if remaining == 0 && weight == [delta as i32; 3] {
                out.push(*current);
            }
            return;
        }
        let m = &monos[idx].0;
        for e in 0..=remaining {
            let w = [
                weight[0] + e as i32 * m[0] as i32,
                weight[1] + e as i32 * m[1] as i32,
                weight[2] + e as i32 * m[2] as i32,
            ];
            if w.iter().any(|&x| x > delta as i32) {
                break;
            }
            current[idx] = e;
            rec(monos, idx + 1, remaining - e, w, delta, current, out);
        }
        current[idx] = 0;
    }
    let monos = cubic_monomials();
    let mut out = Vec::new();
    let mut current = [0u8; 10];
    rec(monos, 0, delta, [0; 3], delta, &mut current, &mut out);
    out.sort_unstable();
    out
}

/// Nilpotent generators used for the annihilation equations. A balanced
/// vector killed by this triangle of derivations spans a trivial
/// subrepresentation, so the opposite triangle is implied; all six are
/// nevertheless checked exactly on the result.
const UPPER_GENERATORS: [(usize, usize); 3] = [(0, 1), (1, 2), (0, 2)];
const ALL_GENERATORS: [(usize, usize); 6] = [(0, 1), (1, 2), (0, 2), (1, 0), (2, 1), (2, 0)];

/// Annihilation equations over the balanced basis, as integer rows indexed
/// by (generator, target monomial).
fn annihilation_rows(basis: &[[u8; 10]]) -> Vec<Vec<i64>> {
    let mut rows: BTreeMap<(usize, [u8; 10]), Vec<i64>> = BTreeMap::new();
    for (gi, &(u, v)) in UPPER_GENERATORS.iter().enumerate() {
        let trans = transitions(u, v);
        for (col, e) in basis.iter().enumerate() {
            for &(r, s, factor) in &trans {
                if e[r] == 0 {
                    continue;
                }
                let mut f = *e;
                f[r] -= 1;
                f[s] += 1;
                let row = rows
                    .entry((gi, f))
                    .or_insert_with(|| vec![0i64; basis.len()]);
                row[col] += e[r] as i64 * factor;
            }
        }
    }
    rows.into_values().collect()
}

/// Compute the one-dimensional space of invariants of the given degree as a
/// primitive-integer coefficient polynomial.
fn interpolate_invariant(delta: u8) -> CoeffPoly {
    let basis = balanced_basis(delta);
    let rows = annihilation_rows(&basis);
    let p = linalg::GUESS_PRIME;
    let mod_rows: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x.rem_euclid(p as i64) as u64).collect())
        .collect();
    let kernel = linalg::nullspace_mod_p(mod_rows, basis.len(), p);

    let candidate: Option<Vec<Rat>> = if kernel.len() == 1 {
        kernel[0]
            .iter()
            .map(|&res| linalg::rational_reconstruct(res, p))
            .collect()
    } else {
        None
    };
    let vector = match candidate {
        Some(v) => v,
        None => {
            let rat_rows: Vec<Vec<Rat>> = rows
                .iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect();
            let ns = linalg::nullspace(rat_rows, basis.len());
            assert_eq!(
                ns.len(),
                1,
                "invariant space of degree {delta} must be one-dimensional"
            );
            ns.into_iter().next().unwrap()
        }
    };
    let ints = linalg::to_primitive_integer(&vector);
    let mut poly = CoeffPoly::zero();
    for (e, c) in basis.iter().zip(&ints) {
        if !c.is_zero() {
            poly.add_term(*e, Rat::from_integer(c.clone()));
        }
    }
    // exact confirmation of the modular guess
    for &(u, v) in &ALL_GENERATORS {
        assert!(
            apply_derivation(&poly, u, v).is_zero(),
            "degree-{delta} invariant candidate fails the exact derivation check"
        );
    }
    assert!(!poly.is_zero());
    poly
}

// --- the cached table ------------------------------------------------------

struct InvariantTable {
    s: CoeffPoly,
    t: CoeffPoly,
    c1: Rat,
    c2: Rat,
    c3: Rat,
}

fn table() -> &'static InvariantTable {
    static CELL: OnceLock<InvariantTable> = OnceLock::new();
    CELL.get_or_init(|| {
        let s = interpolate_invariant(4);
        let t = interpolate_invariant(6);
        let (c1, c2, c3) = calibrate(&s, &t);
        InvariantTable { s, t, c1, c2, c3 }
    })
}

/// The diagonal pencil member `x³ + y³ + z³ + 3λxyz`.
pub fn hesse_cubic(lambda: &Rat) -> TernaryForm {
    TernaryForm::new(
        3,
        [
            ([3, 0, 0], int(1)),
            ([0, 3, 0], int(1)),
            ([0, 0, 3], int(1)),
            ([1, 1, 1], lambda * int(3)),
        ],
    )
    .expect("degree 3")
}

/// `j` of the diagonal pencil: `(3λ(8−λ³)/(1+λ³))³`. Defined for `λ³ ≠ −1`.
pub fn hesse_j_formula(lambda: &Rat) -> Rat {
    let l3 = lambda * lambda * lambda;
    let numer = int(3) * lambda * (int(8) - &l3);
    let denom = int(1) + l3;
    let q = numer / denom;
    &q * &q * &q
}

/// Solve for `(c₁, c₂, c₃)` up to scale from sample points of the diagonal
/// pencil, requiring a one-dimensional solution space.
fn calibrate(s: &CoeffPoly, t: &CoeffPoly) -> (Rat, Rat, Rat) {
    let samples = [int(1), int(3), rat(1, 2), int(5), int(7)];
    let mut rows = Vec::new();
    for lambda in &samples {
        let a = coeff_vector(&hesse_cubic(lambda));
        let sv = s.eval(&a);
        let tv = t.eval(&a);
        let j = hesse_j_formula(lambda);
        let s3 = &sv * &sv * &sv;
        let t2 = &tv * &tv;
        rows.push(vec![s3.clone(), -(&j * &s3), -(&j * &t2)]);
    }
    let kernel = linalg::nullspace(rows, 3);
    assert_eq!(
        kernel.len(),
        1,
        "j-normalization must be determined up to scale"
    );
    let ints = linalg::to_primitive_integer(&kernel[0]);
    let c: Vec<Rat> = ints.into_iter().map(Rat::from_integer).collect();
    let holdout = int(4);
    let a = coeff_vector(&hesse_cubic(&holdout));
    let sv = s.eval(&a);
    let tv = t.eval(&a);
    let s3 = &sv * &sv * &sv;
    let denom = &c[1] * &s3 + &c[2] * (&tv * &tv);
    assert!(!denom.is_zero());
    assert_eq!(
        &c[0] * s3 / denom,
        hesse_j_formula(&holdout),
        "calibration holdout failed"
    );
    (c[0].clone(), c[1].clone(), c[2].clone())
}

// --- public invariant operations -------------------------------------------

/// Evaluate the degree-4 and degree-6 coefficient invariants and the
/// discriminant on a cubic.
pub fn aronhold_invariants(f: &TernaryForm) -> InvariantPair {
    assert!(
        f.is_zero() || f.degree() == 3,
        "invariants are defined for cubics"
    );
    let tbl = table();
    let a = coeff_vector(f);
    let s = tbl.s.eval(&a);
    let t = tbl.t.eval(&a);
    let delta = &tbl.c2 * (&s * &s * &s) + &tbl.c3 * (&t * &t);
    InvariantPair { s, t, delta }
}

/// The discriminant `Δ`; zero exactly when the cubic is singular.
pub fn discriminant(f: &TernaryForm) -> Rat {
    aronhold_invariants(f).delta
}

/// Exact `j`-invariant of a smooth cubic.
pub fn j_invariant(f: &TernaryForm) -> Result<Rat> {
    let tbl = table();
    let pair = aronhold_invariants(f);
    if pair.delta.is_zero() {
        return Err(Error::JUndefined);
    }
    let s3 = &pair.s * &pair.s * &pair.s;
    Ok(&tbl.c1 * s3 / pair.delta)
}

// --- univariate check of the calibration -----------------------------------

/// Dense univariate polynomial over the rationals, little-endian.
#[derive(Debug, Clone, PartialEq, Eq)]
struct UniPoly(Vec<Rat>);

impl UniPoly {
    fn zero() -> Self {
        UniPoly(Vec::new())
    }

    fn constant(c: Rat) -> Self {
        UniPoly(vec![c]).trimmed()
    }

    fn monomial(k: usize, c: Rat) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly(v).trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![Rat::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        UniPoly(v).trimmed()
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&int(-1)))
    }

    fn scale(&self, c: &Rat) -> Self {
        UniPoly(self.0.iter().map(|x| x * c).collect()).trimmed()
    }

    fn mul(&self, other: &Self) -> Self {
        if self.0.is_empty() || other.0.is_empty() {
            return UniPoly::zero();
        }
        let mut v = vec![Rat::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        UniPoly(v).trimmed()
    }

    fn pow(&self, n: usize) -> Self {
        let mut acc = UniPoly::constant(int(1));
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
}

/// Restrict a coefficient invariant to the diagonal pencil, whose
/// coefficients are 1 on the three cubes and `3λ` on `xyz`: the result is a
/// univariate polynomial in `λ`.
fn on_hesse_pencil(p: &CoeffPoly) -> UniPoly {
    let monos = cubic_monomials();
    let cube_idx: Vec<usize> = [[3, 0, 0], [0, 3, 0], [0, 0, 3]]
        .iter()
        .map(|e| monos.iter().position(|m| m.0 == *e).unwrap())
        .collect();
    let mixed_idx = monos.iter().position(|m| m.0 == [1, 1, 1]).unwrap();
    let mut out = UniPoly::zero();
    for (e, c) in &p.terms {
        let supported = e
            .iter()
            .enumerate()
            .all(|(i, &p_)| p_ == 0 || i == mixed_idx || cube_idx.contains(&i));
        if !supported {
            continue;
        }
        let k = e[mixed_idx] as usize;
        let three_pow = int(3i64.pow(k as u32));
        out = out.add(&UniPoly::monomial(k, c * three_pow));
    }
    out
}

/// Verify the calibrated `j` against the diagonal-pencil formula as an
/// exact polynomial identity in `λ` with cleared denominators:
/// `c₁·S(λ)³·(1+λ³)³ = 27λ³(8−λ³)³·(c₂S(λ)³ + c₃T(λ)²)`.
pub fn hesse_calibration_identity_holds() -> bool {
    let tbl = table();
    let s = on_hesse_pencil(&tbl.s);
    let t = on_hesse_pencil(&tbl.t);
    let s3 = s.pow(3);
    let t2 = t.pow(2);
    let one_plus = UniPoly::constant(int(1)).add(&UniPoly::monomial(3, int(1)));
    let eight_minus = UniPoly::constant(int(8)).sub(&UniPoly::monomial(3, int(1)));
    let lhs = s3.scale(&tbl.c1).mul(&one_plus.pow(3));
    let rhs = UniPoly::monomial(3, int(27))
        .mul(&eight_minus.pow(3))
        .mul(&s3.scale(&tbl.c2).add(&t2.scale(&tbl.c3)));
    lhs.sub(&rhs).is_zero()
}

// --- linear factors ---------------------------------------------------------

/// The four coefficient cubics, in auxiliary variables `(β, γ, h)` living in
/// the `(x, y, z)` slots, of the resultant of `g` against the monic line
/// pencil `x + βy + γz`. The common zeros away from `h = 0` are exactly the
/// linear factors of `g` involving `x`.
fn linear_factor_system(g: &TernaryForm) -> [TernaryForm; 4] {
    let mut cs: [TernaryForm; 4] = std::array::from_fn(|_| TernaryForm::zero(3));
    for (m, q) in g.terms() {
        let (j, a, b) = (m.0[0], m.0[1], m.0[2]);
        debug_assert_eq!(j + a + b, 3);
        let sign = if j % 2 == 0 { 1 } else { -1 };
        for tpow in 0..=j {
            // the term contributes to the coefficient of y^(a+t) z^(b+j−t)
            let target = (b + (j - tpow)) as usize;
            let term = TernaryForm::monomial(
                [tpow, j - tpow, 3 - j],
                q * int(sign * binomial(j, tpow)),
            );
            cs[target] = cs[target].add(&term);
        }
    }
    cs
}

fn binomial(n: u32, k: u32) -> i64 {
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

/// Does the cubic have a linear factor over the algebraic closure?
///
/// Two independent random changes of variables are tried and must agree;
/// each reduces the question to projective emptiness of the resultant
/// coefficient system after checking there are no solutions at infinity.
pub fn has_linear_factor(f: &TernaryForm) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::Input("linear factor of the zero form".into()));
    }
    if f.degree() != 3 {
        return Err(Error::Input("linear-factor test expects a cubic".into()));
    }
    let mut rng = linalg::SplitMix64(linalg::fnv1a(&f.canonical_bytes()) ^ 0x9e37);
    let mut verdicts = Vec::with_capacity(2);
    for _ in 0..2 {
        let g = loop {
            let theta = LinMap3::from_ints(std::array::from_fn(|_| {
                std::array::from_fn(|_| rng.int_in(-4, 4))
            }));
            if !theta.is_invertible() {
                continue;
            }
            let g = f.substitute(&theta);
            if !g.coefficient([3, 0, 0]).is_zero() {
                break g;
            }
        };
        let cs = linear_factor_system(&g);
        // no solutions at infinity: the h = 0 slices must be jointly empty
        let at_infinity: Vec<TernaryForm> = cs
            .iter()
            .map(|c| {
                let mut slice = TernaryForm::zero(3);
                for (m, v) in c.terms() {
                    if m.0[2] == 0 {
                        slice = slice.add(&TernaryForm::monomial(m.0, v.clone()));
                    }
                }
                slice
            })
            .collect();
        let inf_sys = FormSystem::new(2, at_infinity)?;
        if !has_no_projective_zero(&inf_sys)? {
            return Err(Error::Internal(
                "linear-factor test found solutions at infinity after normalization".into(),
            ));
        }
        let sys = FormSystem::new(3, cs)?;
        verdicts.push(!has_no_projective_zero(&sys)?);
    }
    if verdicts[0] != verdicts[1] {
        return Err(Error::Internal(
            "independent changes of variables disagree on linear factors".into(),
        ));
    }
    Ok(verdicts[0])
}

// --- the classifier ----------------------------------------------------------

/// Classify the divisor `{f = 0} ⊆ ℙ²` of a ternary cubic (or of the zero
/// form).
pub fn classify_cubic(f: &TernaryForm) -> Result<CubicClass> {
    if f.is_zero() {
        return Ok(CubicClass::WholePlane);
    }
    if f.degree() != 3 {
        return Err(Error::Input(format!(
            "classifier expects a cubic, got degree {}",
            f.degree()
        )));
    }
    let h = f.hessian_det();
    let partials: Vec<TernaryForm> = VARS.iter().map(|&v| f.partial(v)).collect();
    if h.is_zero() {
        // cone: the gcd degree of the partials separates the three cases
        let g = form_gcd_many(&partials)?;
        return match g.degree() {
            2 => Ok(CubicClass::TripleLine),
            1 => Ok(CubicClass::DoubleLinePlusLine),
            0 => Ok(CubicClass::ThreeConcurrentLines),
            d => Err(Error::Internal(format!("cone gcd of degree {d}"))),
        };
    }
    let smooth = has_no_projective_zero(&FormSystem::new(3, partials)?)?;
    if smooth {
        let j = j_invariant(f)
            .map_err(|_| Error::Internal("partials empty but discriminant vanishes".into()))?;
        return Ok(CubicClass::Smooth(j));
    }
    let h2 = h.hessian_det();
    if h2.is_zero() {
        return if has_linear_factor(f)? {
            Ok(CubicClass::ConicPlusTangent)
        } else {
            Ok(CubicClass::Cusp)
        };
    }
    match is_scalar_multiple(&h, f) {
        Some(c) if !c.is_zero() => Ok(CubicClass::Triangle),
        _ => {
            if has_linear_factor(f)? {
                Ok(CubicClass::ConicPlusChord)
            } else {
                Ok(CubicClass::Nodal)
            }
        }
    }
}

/// Term counts of the two cached invariants (for reporting).
pub fn invariant_summary() -> (usize, usize) {
    let tbl = table();
    (tbl.s.terms.len(), tbl.t.terms.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn form(terms: &[([u32; 3], Rat)]) -> TernaryForm {
        TernaryForm::new(3, terms.iter().cloned()).unwrap()
    }

    fn xyz() -> TernaryForm {
        TernaryForm::monomial([1, 1, 1], int(1))
    }

    fn fermat() -> TernaryForm {
        form(&[([3, 0, 0], int(1)), ([0, 3, 0], int(1)), ([0, 0, 3], int(1))])
    }

    /// Random integer shear products have determinant 1.
    fn random_det_one(rng: &mut linalg::SplitMix64) -> LinMap3 {
        let mut m = LinMap3::identity();
        for _ in 0..4 {
            let i = rng.int_in(0, 2) as usize;
            let mut j = rng.int_in(0, 2) as usize;
            if i == j {
                j = (j + 1) % 3;
            }
            let mut shear = LinMap3::identity();
            shear.m[i][j] = int(rng.int_in(-3, 3));
            m = compose(&m, &shear);
        }
        m
    }

    fn compose(a: &LinMap3, b: &LinMap3) -> LinMap3 {
        let mut m = LinMap3::from_ints([[0; 3]; 3]);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rat::zero();
                for k in 0..3 {
                    acc += &a.m[i][k] * &b.m[k][j];
                }
                m.m[i][j] = acc;
            }
        }
        m
    }

    fn random_cubic(rng: &mut linalg::SplitMix64) -> TernaryForm {
        let mut terms = Vec::new();
        for m in cubic_monomials() {
            let c = rng.int_in(-4, 4);
            if c != 0 {
                terms.push((m.0, int(c)));
            }
        }
        TernaryForm::new(3, terms).unwrap()
    }

    #[test]
    fn invariants_are_sl3_invariant_and_scale() {
        let mut rng = linalg::SplitMix64(42);
        for _ in 0..10 {
            let f = random_cubic(&mut rng);
            let theta = random_det_one(&mut rng);
            assert_eq!(theta.det(), int(1));
            let a = aronhold_invariants(&f);
            let b = aronhold_invariants(&f.substitute(&theta));
            assert_eq!(a.s, b.s);
            assert_eq!(a.t, b.t);
        }
        let f = hesse_cubic(&int(1));
        let a = aronhold_invariants(&f);
        let b = aronhold_invariants(&f.scale(&int(2)));
        assert_eq!(b.s, &a.s * int(16));
        assert_eq!(b.t, &a.t * int(64));
    }

    #[test]
    fn j_values_on_the_diagonal_pencil() {
        assert_eq!(j_invariant(&fermat()).unwrap(), int(0));
        assert_eq!(j_invariant(&hesse_cubic(&int(1))).unwrap(), rat(9261, 8));
        for lambda in [int(2), rat(5, 7), int(4), rat(-1, 3)] {
            assert_eq!(
                j_invariant(&hesse_cubic(&lambda)).unwrap(),
                hesse_j_formula(&lambda)
            );
        }
        assert_eq!(j_invariant(&xyz()), Err(Error::JUndefined));
    }

    #[test]
    fn j_is_a_gl_invariant() {
        let mut rng = linalg::SplitMix64(7);
        let f = hesse_cubic(&int(2));
        for _ in 0..5 {
            let theta = LinMap3::from_ints(std::array::from_fn(|_| {
                std::array::from_fn(|_| rng.int_in(-3, 3))
            }));
            if !theta.is_invertible() {
                continue;
            }
            assert_eq!(
                j_invariant(&f.substitute(&theta)).unwrap(),
                j_invariant(&f).unwrap()
            );
        }
    }

    #[test]
    fn calibration_identity() {
        assert!(hesse_calibration_identity_holds());
    }

    #[test]
    fn discriminant_matches_smoothness() {
        let mut rng = linalg::SplitMix64(99);
        for _ in 0..20 {
            let f = random_cubic(&mut rng);
            if f.is_zero() {
                continue;
            }
            let partials: Vec<TernaryForm> = VARS.iter().map(|&v| f.partial(v)).collect();
            let smooth = has_no_projective_zero(&FormSystem::new(3, partials).unwrap()).unwrap();
            assert_eq!(smooth, !discriminant(&f).is_zero(), "form {f}");
        }
        assert_eq!(discriminant(&xyz()), int(0));
        assert!(discriminant(&fermat()) != int(0));
    }

    #[test]
    fn linear_factor_examples() {
        let third = rat(1, 3);
        let cc = xyz().add(&TernaryForm::monomial([3, 0, 0], third.clone()));
        assert!(has_linear_factor(&cc).unwrap());
        let nodal = xyz()
            .add(&TernaryForm::monomial([3, 0, 0], third.clone()))
            .add(&TernaryForm::monomial([0, 3, 0], third.clone()));
        assert!(!has_linear_factor(&nodal).unwrap());
        let cusp = TernaryForm::monomial([2, 0, 1], int(1))
            .add(&TernaryForm::monomial([0, 3, 0], third));
        assert!(!has_linear_factor(&cusp).unwrap());
        assert!(has_linear_factor(&xyz()).unwrap());
        // smooth cubics are irreducible
        assert!(!has_linear_factor(&fermat()).unwrap());
        // x + y + z divides the triangle member of the diagonal pencil
        assert!(has_linear_factor(&hesse_cubic(&int(-1))).unwrap());
        assert!(has_linear_factor(&TernaryForm::zero(3)).is_err());
    }

    #[test]
    fn golden_classification() {
        let third = rat(1, 3);
        let cases: Vec<(TernaryForm, CubicClass)> = vec![
            (TernaryForm::zero(3), CubicClass::WholePlane),
            (
                TernaryForm::monomial([3, 0, 0], int(1)),
                CubicClass::TripleLine,
            ),
            (
                TernaryForm::monomial([2, 1, 0], int(1)),
                CubicClass::DoubleLinePlusLine,
            ),
            (
                form(&[([3, 0, 0], int(1)), ([0, 3, 0], int(1))]),
                CubicClass::ThreeConcurrentLines,
            ),
            (
                form(&[([2, 0, 1], int(1)), ([1, 2, 0], int(1))]),
                CubicClass::ConicPlusTangent,
            ),
            (
                form(&[([2, 0, 1], int(1)), ([0, 3, 0], third.clone())]),
                CubicClass::Cusp,
            ),
            (xyz(), CubicClass::Triangle),
            (
                xyz().add(&TernaryForm::monomial([3, 0, 0], third.clone())),
                CubicClass::ConicPlusChord,
            ),
            (
                xyz()
                    .add(&TernaryForm::monomial([3, 0, 0], third.clone()))
                    .add(&TernaryForm::monomial([0, 3, 0], third)),
                CubicClass::Nodal,
            ),
            (fermat(), CubicClass::Smooth(int(0))),
            (hesse_cubic(&int(1)), CubicClass::Smooth(rat(9261, 8))),
        ];
        for (f, expected) in cases {
            assert_eq!(classify_cubic(&f).unwrap(), expected, "form {f}");
        }
    }

    #[test]
    fn beta_family_boundaries() {
        // 2xyz + (β/3)(x³+y³+z³): triangle at β³ ∈ {0, −8}, j = 0 at β³ = 1
        let family =
            |beta: Rat| xyz().scale(&int(2)).add(&fermat().scale(&(beta / int(3))));
        assert_eq!(classify_cubic(&family(int(0))).unwrap(), CubicClass::Triangle);
        assert_eq!(
            classify_cubic(&family(int(-2))).unwrap(),
            CubicClass::Triangle
        );
        assert_eq!(
            classify_cubic(&family(int(1))).unwrap(),
            CubicClass::Smooth(int(0))
        );
        match classify_cubic(&family(int(2))).unwrap() {
            CubicClass::Smooth(j) => assert!(!j.is_zero()),
            other => panic!("expected smooth, got {other:?}"),
        }
    }

    #[test]
    fn hesse_degenerate_member_is_a_triangle() {
        assert_eq!(
            classify_cubic(&hesse_cubic(&int(-1))).unwrap(),
            CubicClass::Triangle
        );
    }

    #[test]
    fn class_is_gl_invariant() {
        let mut rng = linalg::SplitMix64(1234);
        let third = rat(1, 3);
        let forms = vec![
            TernaryForm::monomial([3, 0, 0], int(1)),
            TernaryForm::monomial([2, 1, 0], int(1)),
            form(&[([3, 0, 0], int(1)), ([0, 3, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([1, 2, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([0, 3, 0], third.clone())]),
            xyz(),
            xyz().add(&TernaryForm::monomial([3, 0, 0], third.clone())),
            xyz()
                .add(&TernaryForm::monomial([3, 0, 0], third.clone()))
                .add(&TernaryForm::monomial([0, 3, 0], third)),
            fermat(),
        ];
        for f in forms {
            let base = classify_cubic(&f).unwrap();
            for _ in 0..3 {
                let theta = loop {
                    let t = LinMap3::from_ints(std::array::from_fn(|_| {
                        std::array::from_fn(|_| rng.int_in(-3, 3))
                    }));
                    if t.is_invertible() {
                        break t;
                    }
                };
                assert_eq!(classify_cubic(&f.substitute(&theta)).unwrap(), base);
            }
        }
    }

    #[test]
    fn hessian_lists_partition_classes() {
        let third = rat(1, 3);
        let singular_forms = vec![
            TernaryForm::monomial([3, 0, 0], int(1)),
            TernaryForm::monomial([2, 1, 0], int(1)),
            form(&[([3, 0, 0], int(1)), ([0, 3, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([1, 2, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([0, 3, 0], third.clone())]),
            xyz(),
            xyz().add(&TernaryForm::monomial([3, 0, 0], third.clone())),
            xyz()
                .add(&TernaryForm::monomial([3, 0, 0], third.clone()))
                .add(&TernaryForm::monomial([0, 3, 0], third)),
            fermat(),
            hesse_cubic(&int(1)),
        ];
        for f in singular_forms {
            let class = classify_cubic(&f).unwrap();
            let h2 = f.hessian_det().hessian_det();
            assert_eq!(h2.is_zero(), class.hessian_squared_vanishes(), "form {f}");
        }
    }

    #[test]
    fn triangle_is_the_only_scalar_multiple_class() {
        let third = rat(1, 3);
        let singular_non_triangle = vec![
            TernaryForm::monomial([3, 0, 0], int(1)),
            TernaryForm::monomial([2, 1, 0], int(1)),
            form(&[([3, 0, 0], int(1)), ([0, 3, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([1, 2, 0], int(1))]),
            form(&[([2, 0, 1], int(1)), ([0, 3, 0], third.clone())]),
            xyz().add(&TernaryForm::monomial([3, 0, 0], third.clone())),
            xyz()
                .add(&TernaryForm::monomial([3, 0, 0], third.clone()))
                .add(&TernaryForm::monomial([0, 3, 0], third)),
        ];
        for f in singular_non_triangle {
            let h = f.hessian_det();
            let prop = is_scalar_multiple(&h, &f);
            assert!(
                prop.is_none() || prop == Some(Rat::zero()),
                "unexpected proportionality for {f}"
            );
        }
        assert_eq!(
            is_scalar_multiple(&xyz().hessian_det(), &xyz()),
            Some(int(2))
        );
    }
}

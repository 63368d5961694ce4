//! Named instances used by the self-test and the acceptance suite: the
//! singular cubic normal forms, the nine non-Calabi-Yau presentations, and
//! one representative superpotential per cell of the classification table.

use crate::classify::{self, crosscheck, verify_clifford};
use crate::cubiccurve::{classify_cubic, hesse_cubic, CubicClass};
use crate::exactpoly::{LinMap3, TernaryForm};
use crate::oracle;
use crate::rat::{int, rat, Rat};
use crate::tensor3::{hat, m_matrix, w0, TensorN};

pub fn monomial(e: [u32; 3]) -> TernaryForm {
    TernaryForm::monomial(e, int(1))
}

pub fn xyz() -> TernaryForm {
    monomial([1, 1, 1])
}

pub fn fermat() -> TernaryForm {
    monomial([3, 0, 0]).add(&monomial([0, 3, 0])).add(&monomial([0, 0, 3]))
}

/// `xyz + g` for the three bracket families `g ∈ {0, x³/3, (x³+y³)/3}`.
pub fn bracket_family() -> Vec<(&'static str, TernaryForm)> {
    let third = rat(1, 3);
    vec![
        ("xyz", xyz()),
        ("xyz + x^3/3", xyz().add(&monomial([3, 0, 0]).scale(&third))),
        (
            "xyz + (x^3+y^3)/3",
            xyz()
                .add(&monomial([3, 0, 0]).scale(&third))
                .add(&monomial([0, 3, 0]).scale(&third)),
        ),
    ]
}

/// The eight singular normal forms with their classes; the starred flag
/// marks the symmetric-case algebras that fail to be domains.
pub fn singular_normal_forms() -> Vec<(&'static str, TernaryForm, CubicClass, bool)> {
    let third = rat(1, 3);
    vec![
        ("x^3", monomial([3, 0, 0]), CubicClass::TripleLine, true),
        ("x^2 y", monomial([2, 1, 0]), CubicClass::DoubleLinePlusLine, true),
        (
            "x^3 + y^3",
            monomial([3, 0, 0]).add(&monomial([0, 3, 0])),
            CubicClass::ThreeConcurrentLines,
            true,
        ),
        (
            "x^2 z + x y^2",
            monomial([2, 0, 1]).add(&monomial([1, 2, 0])),
            CubicClass::ConicPlusTangent,
            true,
        ),
        (
            "x^2 z + y^3/3",
            monomial([2, 0, 1]).add(&monomial([0, 3, 0]).scale(&third)),
            CubicClass::Cusp,
            true,
        ),
        ("xyz", xyz(), CubicClass::Triangle, false),
        (
            "xyz + x^3/3",
            xyz().add(&monomial([3, 0, 0]).scale(&third)),
            CubicClass::ConicPlusChord,
            false,
        ),
        (
            "xyz + (x^3+y^3)/3",
            xyz()
                .add(&monomial([3, 0, 0]).scale(&third))
                .add(&monomial([0, 3, 0]).scale(&third)),
            CubicClass::Nodal,
            false,
        ),
    ]
}

/// The nine superpotentials whose Jacobian algebras are not 3-Calabi-Yau:
/// the three bracket families at `λ = −2` and the six starred symmetric
/// normal forms (`w = w₀ − λ·hat(f)`, so `λ = −2` is `w₀ + 2·hat(f)`).
pub fn nine_non_cy() -> Vec<(String, TensorN)> {
    let mut out = Vec::new();
    for (name, f) in bracket_family() {
        out.push((
            format!("bracket ({name}) at lambda = -2"),
            w0().add(&hat(&f).scale(&int(2))),
        ));
    }
    for (name, f, _, starred) in singular_normal_forms() {
        if starred {
            out.push((format!("symmetric {name}"), hat(&f)));
        }
    }
    out.push(("symmetric x^3+y^3+z^3 (j = 0)".into(), hat(&fermat())));
    out
}

/// One representative per non-empty cell of the classification table, with
/// the expected 3-Calabi-Yau verdict.
pub fn table1_grid() -> Vec<(String, TensorN, bool)> {
    let mut grid: Vec<(String, TensorN, bool)> = Vec::new();
    // symmetric column: w = hat(f)
    for (name, f, _, starred) in singular_normal_forms() {
        grid.push((format!("mu=0, {name}"), hat(&f), !starred));
    }
    grid.push(("mu=0, smooth j!=0 (hesse 1)".into(), hat(&hesse_cubic(&int(1))), true));
    grid.push(("mu=0, smooth j=0 (fermat)".into(), hat(&fermat()), false));
    // non-symmetric column: w = μ·w₀ + hat(f), plus the plane cell w₀
    grid.push(("mu=1, wbar=0 (polynomial ring)".into(), w0(), true));
    for (name, f, _, starred) in singular_normal_forms() {
        let w = w0().sub(&hat(&f));
        if starred {
            grid.push((format!("mu=1, {name}"), w, true));
        } else {
            // boundary pair for the triangle/conic+chord/nodal classes
            grid.push((format!("mu=1, {name} (interior)"), w0().add(&hat(&f)), true));
            grid.push((
                format!("mu=1/2, {name} (boundary)"),
                w0().scale(&rat(1, 2)).add(&hat(&f)),
                false,
            ));
        }
    }
    grid.push((
        "mu=1, smooth (hesse 1)".into(),
        w0().sub(&hat(&hesse_cubic(&int(1)))),
        true,
    ));
    grid
}

/// Run the embedded corpus and the central properties; returns one
/// `(description, passed)` line per suite.
pub fn selftest() -> Vec<(String, bool)> {
    let mut out: Vec<(String, bool)> = Vec::new();
    let mut push = |name: &str, ok: bool| out.push((name.to_string(), ok));

    // 1. the nine non-3-CY algebras
    let nine = nine_non_cy();
    let nine_ok = nine.len() == 9
        && nine.iter().all(|(_, w)| match crosscheck(w, 4) {
            Ok(r) => {
                r.agreement
                    && !r.table1_verdict
                    && !r.rank_one_verdict
                    && !r.atv_verdict
                    && r.hilbert.first_mismatch.is_some_and(|d| d <= 4)
            }
            Err(_) => false,
        });
    push("nine non-Calabi-Yau algebras: all verdicts false, Hilbert mismatch by degree 4", nine_ok);

    // 2. the classification grid
    let grid_ok = table1_grid().iter().all(|(_, w, expect)| {
        match crosscheck(w, 4) {
            Ok(r) => r.agreement && r.table1_verdict == *expect,
            Err(_) => false,
        }
    });
    push("classification grid: expected verdicts with three-way agreement", grid_ok);

    // 3. cubic classifier golden set
    let golden_ok = singular_normal_forms()
        .iter()
        .all(|(_, f, class, _)| classify_cubic(f).ok().as_ref() == Some(class))
        && classify_cubic(&fermat()).ok() == Some(CubicClass::Smooth(int(0)))
        && classify_cubic(&hesse_cubic(&int(1))).ok() == Some(CubicClass::Smooth(rat(9261, 8)))
        && classify_cubic(&TernaryForm::zero(3)).ok() == Some(CubicClass::WholePlane);
    push("cubic classifier: golden normal forms", golden_ok);

    // 4. the λ² ≠ 4 law
    let lambda_ok = bracket_family().iter().all(|(_, f)| {
        [int(0), int(1), int(2), int(-2), int(3), rat(1, 2)]
            .iter()
            .all(|lam| {
                let w = w0().sub(&hat(f).scale(lam));
                match crosscheck(&w, 3) {
                    Ok(r) => {
                        r.agreement && (r.table1_verdict == (lam * lam != int(4)))
                    }
                    Err(_) => false,
                }
            })
    });
    push("deformations of the bracket families: 3-CY exactly when lambda^2 != 4", lambda_ok);

    // 5. exactly two bad μ values on the triangle
    let mus = [
        rat(1, 2),
        rat(-1, 2),
        int(1),
        int(-1),
        int(2),
        int(-2),
        rat(1, 3),
        int(3),
    ];
    let mut bad = Vec::new();
    let mut two_mu_ok = true;
    for m in &mus {
        let w = w0().scale(m).add(&hat(&xyz()));
        match classify::table1_verdict(&w) {
            Ok((v, _)) => {
                if !v {
                    bad.push(m.clone());
                }
            }
            Err(_) => two_mu_ok = false,
        }
    }
    two_mu_ok &= bad == vec![rat(1, 2), rat(-1, 2)];
    push("triangle scan: exactly mu = ±1/2 fail", two_mu_ok);

    // 6. j-invariant calibration
    push(
        "Hesse pencil j-identity holds with cleared denominators",
        crate::cubiccurve::hesse_calibration_identity_holds(),
    );

    // 7. Clifford structure of the symmetric 3-CY rows
    let clifford_ok = {
        let id = LinMap3::identity();
        let tri = verify_clifford(&hat(&xyz()), &id)
            .map(|d| (d.a, d.b, d.c) == (int(0), int(0), int(0)))
            .unwrap_or(false);
        let beta2 = xyz().scale(&int(2)).add(&fermat().scale(&rat(2, 3)));
        let fam = verify_clifford(&hat(&beta2), &id)
            .map(|d| (&d.a * &d.b * &d.c) == int(-8))
            .unwrap_or(false);
        let central_fails = {
            let rels = crate::tensor3::RelationSpace::from_tensors([
                TensorN::word(&[0, 1]),
                TensorN::word(&[1, 2]),
                TensorN::word(&[2, 0]),
            ])
            .unwrap();
            let p = oracle::QuadraticPresentation::new(rels);
            oracle::central_check(&p, &TensorN::word(&[0, 0])) == Ok(false)
        };
        tri && fam && central_fails
    };
    push("Clifford rows: scalars extracted, abc != -1, squares central", clifford_ok);

    // 8. point-scheme determinant identity on the grid
    let det_ok = table1_grid().iter().take(6).all(|(_, w, _)| {
        let cw = crate::tensor3::cyc(w);
        if cw.is_zero() {
            return true;
        }
        let det = match m_matrix(&cw) {
            Ok(m) => m.to_form_matrix().det(),
            Err(_) => return false,
        };
        match classify::point_scheme(w) {
            Ok(ps) => det == ps.scale(&rat(1, 216)),
            Err(_) => false,
        }
    });
    push("presentation-matrix determinant meets the point scheme (scale 1/216)", det_ok);

    // 9. oracle vs transfer matrix
    let monomial_ok = {
        let sets: Vec<Vec<[u8; 2]>> = vec![
            vec![[0, 1], [1, 2], [2, 0]],
            vec![[0, 0], [1, 1], [2, 2]],
        ];
        sets.iter().all(|avoid| {
            let rels = crate::tensor3::RelationSpace::from_tensors(
                avoid.iter().map(|w| TensorN::word(w)),
            )
            .unwrap();
            let p = oracle::QuadraticPresentation::new(rels);
            (0..=6).all(|n| oracle::graded_dim(&p, n).ok() == Some(oracle::monomial_dims(avoid, n)))
        })
    };
    push("graded dimensions agree with the transfer matrix on monomial relations", monomial_ok);

    out
}

/// Scan `w = μ·w₀ + hat(f)` over a list of `μ` values; returns the `μ`
/// for which the algebra fails to be 3-Calabi-Yau.
pub fn scan_mu(f: &TernaryForm, mus: &[Rat]) -> crate::Result<Vec<Rat>> {
    let mut bad = Vec::new();
    for m in mus {
        let w = w0().scale(m).add(&hat(f));
        if !classify::table1_verdict(&w)?.0 {
            bad.push(m.clone());
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        for (name, ok) in selftest() {
            assert!(ok, "selftest item failed: {name}");
        }
    }

    #[test]
    fn grid_covers_both_columns() {
        let grid = table1_grid();
        assert!(grid.len() >= 20);
        let trues = grid.iter().filter(|(_, _, e)| *e).count();
        let falses = grid.len() - trues;
        assert!(trues >= 10 && falses >= 7);
    }
}

//! Decide whether the Jacobian algebra of a superpotential is 3-Calabi-Yau.
//!
//! Run with: `cargo run --example classify_superpotential`

use cy3::classify::crosscheck;
use cy3::exactpoly::TernaryForm;
use cy3::rat::{int, rat};
use cy3::tensor3::{hat, w0, TensorN};

fn main() -> cy3::Result<()> {
    // A single word: w = x⊗y⊗z. Its Jacobian algebra k<x,y,z>/(yz, zx, xy)
    // kills products of distinct generators, so it cannot be a domain.
    let single_word = TensorN::word(&[0, 1, 2]);

    // The alternating element presents the commutative polynomial ring.
    let alternating = w0();

    // Symmetrized triangle potential: the Clifford-type algebra with
    // relations yz+zy = zx+xz = xy+yx = 0.
    let sym_triangle = hat(&TernaryForm::monomial([1, 1, 1], int(1)));

    // A deformation in the middle of the good range.
    let f = TernaryForm::monomial([1, 1, 1], int(1))
        .add(&TernaryForm::monomial([3, 0, 0], rat(1, 3)));
    let deformed = w0().sub(&hat(&f));

    for (name, w) in [
        ("w = xyz", single_word),
        ("w = w0 (alternating)", alternating),
        ("w = hat(xyz)", sym_triangle),
        ("w = w0 - hat(xyz + x^3/3)", deformed),
    ] {
        let report = crosscheck(&w, 5)?;
        println!("== {name}");
        println!("   mu          = {}", cy3::rat::format_rat(&report.mu));
        println!("   curve       = {}", report.curve_class.name());
        println!("   3-Calabi-Yau: {}", report.is_calabi_yau());
        println!(
            "   verdicts    : table {}, rank-one {}, presentation {} (agree: {})",
            report.table1_verdict, report.rank_one_verdict, report.atv_verdict, report.agreement
        );
        println!("   hilbert dims: {:?}", report.hilbert.dims);
        if let Some(ps) = &report.point_scheme {
            println!("   point scheme: {{ {ps} = 0 }}");
        }
        println!();
    }
    Ok(())
}

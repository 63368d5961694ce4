//! The two-parameter picture: deformations w = w0 − λ·hat(f) are
//! 3-Calabi-Yau for all but finitely many λ when the cubic is singular of
//! triangle/conic+chord/nodal type.
//!
//! Run with: `cargo run --example deformation_family`

use cy3::classify::table1_verdict;
use cy3::corpus::{bracket_family, scan_mu, xyz};
use cy3::rat::{format_rat, int, rat};
use cy3::tensor3::{hat, w0};

fn main() -> cy3::Result<()> {
    let lambdas = [int(0), int(1), int(2), int(-2), int(3), rat(1, 2)];
    for (name, f) in bracket_family() {
        print!("f = {name:20} lambda verdicts:");
        for lam in &lambdas {
            let w = w0().sub(&hat(&f).scale(lam));
            let (cy, _) = table1_verdict(&w)?;
            print!("  {}:{}", format_rat(lam), if cy { "CY" } else { "--" });
        }
        println!();
    }

    // fixing the curve and moving mu instead: exactly two bad values
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
    let bad = scan_mu(&xyz(), &mus)?;
    println!(
        "\nw = mu*w0 + hat(xyz) fails to be 3-CY exactly at mu in {{ {} }}",
        bad.iter().map(|m| format_rat(m)).collect::<Vec<_>>().join(", ")
    );
    Ok(())
}

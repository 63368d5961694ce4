//! Point schemes: the cubic H(wbar) + 24·mu²·wbar cut out by the
//! determinant of the presentation matrix.
//!
//! Run with: `cargo run --example point_scheme`

use cy3::classify::point_scheme;
use cy3::cubiccurve::classify_cubic;
use cy3::rat::rat;
use cy3::tensor3::{cyc, hat, m_matrix, w0};

fn main() -> cy3::Result<()> {
    let fermat = cy3::corpus::fermat();
    let examples = [
        ("hat(x^3+y^3+z^3)", hat(&fermat)),
        ("w0 - hat(xyz)", w0().sub(&hat(&cy3::corpus::xyz()))),
        (
            "w0 - hat(xyz + x^3/3)",
            w0().sub(&hat(&cy3::corpus::xyz()
                .add(&cy3::corpus::monomial([3, 0, 0]).scale(&rat(1, 3))))),
        ),
    ];
    for (name, w) in examples {
        let ps = point_scheme(&w)?;
        println!("w = {name}");
        println!("  E' = {{ {ps} = 0 }}  ({})", classify_cubic(&ps)?.name());
        // the determinant of the canonical presentation matrix recovers E'
        let det = m_matrix(&cyc(&w))?.to_form_matrix().det();
        assert_eq!(det, ps.scale(&rat(1, 216)));
        println!("  det(M) = (1/216)·(H + 24·mu^2·wbar): verified");
        println!();
    }
    Ok(())
}

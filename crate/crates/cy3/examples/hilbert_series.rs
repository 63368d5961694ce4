//! Exact graded dimensions of quadratic presentations, with the
//! transfer-matrix count as an independent cross-check on monomial
//! relations.
//!
//! Run with: `cargo run --example hilbert_series`

use cy3::oracle::{graded_dim, hilbert_check, monomial_dims, QuadraticPresentation};
use cy3::rat::{int, rat};
use cy3::tensor3::{hat, relation_space, w0, RelationSpace, TensorN};

fn main() -> cy3::Result<()> {
    // the commutative polynomial ring
    let sv = QuadraticPresentation::new(relation_space(&w0())?);
    println!("k[x,y,z]            : {:?}", hilbert_check(&sv, 7)?.dims);

    // a Sklyanin-type algebra (smooth symmetric member, beta = 2)
    let fermat = cy3::corpus::fermat();
    let f = cy3::corpus::xyz()
        .scale(&int(2))
        .add(&fermat.scale(&rat(2, 3)));
    let skl = QuadraticPresentation::new(relation_space(&hat(&f))?);
    println!("Clifford (beta = 2) : {:?}", hilbert_check(&skl, 7)?.dims);

    // monomial algebra avoiding xy, yz, zx: dimensions 3·2^(n−1)
    let avoid = [[0u8, 1], [1, 2], [2, 0]];
    let mono = QuadraticPresentation::new(RelationSpace::from_tensors(
        avoid.iter().map(|w| TensorN::word(w)),
    )?);
    let report = hilbert_check(&mono, 7)?;
    println!("k<x,y,z>/(xy,yz,zx) : {:?}", report.dims);
    println!(
        "  first departure from (1-t)^-3 at degree {:?}",
        report.first_mismatch
    );
    for n in 0..=7 {
        assert_eq!(graded_dim(&mono, n)?, monomial_dims(&avoid, n));
    }
    println!("  transfer-matrix count agrees through degree 7");
    Ok(())
}
